//! Exhaustive checks of the `l`-exchange and `sigma`-exchange properties up to a
//! bound on the number of factors.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::{sort_lex_descending, TOrder};
use crate::error::{Error, Result};
use crate::monomial::{lex_exps, Monomial, MonomialOrder};

/// A standard monomial `T_{w1} ... T_{wN}` of the toric ideal of `K[B]`,
/// together with the product `w1 ... wN`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardMonomial {
    pub factors: Vec<Monomial>,
    pub product: Monomial,
}

fn validate_generators(gens: &[Monomial]) -> Result<Vec<Monomial>> {
    let first = gens.first().ok_or(Error::Empty)?;
    for g in gens {
        first.check_same_ring(g)?;
        if g.degree() != first.degree() {
            return Err(Error::Dimension("generators of different degrees".into()));
        }
    }
    let mut sorted = gens.to_vec();
    sort_lex_descending(&mut sorted);
    sorted.dedup();
    Ok(sorted)
}

/// Standard monomials of `T`-degree `count` with respect to `order`.
///
/// For a toric ideal a monomial is standard exactly when it is the smallest
/// monomial of its fiber, so this enumerates all multisets of generators,
/// groups them by product and keeps each group's minimum. Sorted by product,
/// lex-descending.
pub fn standard_monomials(gens: &[Monomial], count: usize, order: TOrder) -> Result<Vec<StandardMonomial>> {
    let gens = validate_generators(gens)?;
    let mut best: HashMap<Monomial, Vec<u32>> = HashMap::new();
    let mut exps = vec![0u32; gens.len()];
    let mut visit = |exps: &[u32]| -> Result<()> {
        let mut product = gens[0].ring().one();
        for (g, &e) in gens.iter().zip(exps) {
            for _ in 0..e {
                product = product.mul(g)?;
            }
        }
        match best.get_mut(&product) {
            Some(cur) => {
                if order.compare_exps(exps, cur).is_lt() {
                    cur.copy_from_slice(exps);
                }
            }
            None => {
                best.insert(product, exps.to_vec());
            }
        }
        Ok(())
    };
    for_each_multiset(&mut exps, 0, count as u32, &mut visit)?;
    let mut out: Vec<StandardMonomial> = best
        .into_iter()
        .map(|(product, exps)| {
            let factors = gens
                .iter()
                .zip(&exps)
                .flat_map(|(g, &e)| std::iter::repeat_n(g.clone(), e as usize))
                .collect();
            StandardMonomial { factors, product }
        })
        .collect();
    out.sort_by(|a, b| lex_exps(b.product.exponents(), a.product.exponents()));
    Ok(out)
}

fn for_each_multiset(
    exps: &mut [u32],
    pos: usize,
    remaining: u32,
    visit: &mut dyn FnMut(&[u32]) -> Result<()>,
) -> Result<()> {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        visit(exps)?;
        exps[pos] = 0;
        return Ok(());
    }
    for e in (0..=remaining).rev() {
        exps[pos] = e;
        for_each_multiset(exps, pos + 1, remaining - e, visit)?;
    }
    exps[pos] = 0;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExchangeKind {
    L,
    Sigma(MonomialOrder),
}

/// One rejected exchange: `x_q * u_delta / x_j` was not a generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeAttempt {
    /// Factor position in `u`, from 1.
    pub delta: usize,
    pub q: usize,
    pub j: usize,
    pub candidate: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeCounterexample {
    pub degree: usize,
    pub u_factors: Vec<Monomial>,
    pub v_factors: Vec<Monomial>,
    pub attempts: Vec<ExchangeAttempt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeReport {
    pub kind: ExchangeKind,
    pub satisfied: bool,
    pub bound: usize,
    /// Pairs meeting the hypothesis of the property.
    pub pairs_checked: usize,
    pub violations: usize,
    /// The first violating pair in search order (by degree, then `v`, then `u`,
    /// products lex-descending).
    pub counterexample: Option<ExchangeCounterexample>,
}

struct Search<'a> {
    kind: ExchangeKind,
    members: HashSet<&'a Monomial>,
}

impl Search<'_> {
    /// `None` when the hypothesis does not hold for `(u, v)`, otherwise whether
    /// an exchange exists. Rejected candidates are appended to `trace`.
    fn run(
        &self,
        u: &StandardMonomial,
        v: &StandardMonomial,
        mut trace: Option<&mut Vec<ExchangeAttempt>>,
    ) -> Option<bool> {
        let (pu, pv) = (&u.product, &v.product);
        let n = pu.n();
        let mut attempt = |delta: usize, ud: &Monomial, q: usize, j: usize| -> bool {
            let cand = ud.exchange(q, j).expect("j in support");
            if self.members.contains(&cand) {
                return true;
            }
            if let Some(trace) = trace.as_deref_mut() {
                trace.push(ExchangeAttempt { delta: delta + 1, q, j, candidate: cand });
            }
            false
        };
        match self.kind {
            ExchangeKind::L => {
                let q = (1..=n).find(|&i| pu.nu(i) != pv.nu(i))?;
                if pu.nu(q) >= pv.nu(q) || q > n - 1 {
                    return None;
                }
                for (delta, ud) in u.factors.iter().enumerate() {
                    for j in ud.support().into_iter().filter(|&j| j > q) {
                        if attempt(delta, ud, q, j) {
                            return Some(true);
                        }
                    }
                }
            }
            ExchangeKind::Sigma(sigma) => {
                if !sigma.compare_unchecked(pu, pv).is_lt() {
                    return None;
                }
                let qs: Vec<usize> = pv.support().into_iter().filter(|&q| pu.nu(q) < pv.nu(q)).collect();
                for (delta, ud) in u.factors.iter().enumerate() {
                    for j in ud.support() {
                        for &q in qs.iter().filter(|&&q| sigma.compare_vars(j, q).is_lt()) {
                            if attempt(delta, ud, q, j) {
                                return Some(true);
                            }
                        }
                    }
                }
            }
        }
        Some(false)
    }
}

fn check_exchange(gens: &[Monomial], kind: ExchangeKind, bound: usize, order: TOrder) -> Result<ExchangeReport> {
    if let ExchangeKind::Sigma(sigma) = kind {
        sigma.require_ring_order()?;
    }
    let sorted = validate_generators(gens)?;
    let search = Search {
        kind,
        members: sorted.iter().collect(),
    };
    let mut report = ExchangeReport {
        kind,
        satisfied: true,
        bound,
        pairs_checked: 0,
        violations: 0,
        counterexample: None,
    };
    for degree in 1..=bound {
        let standard = standard_monomials(&sorted, degree, order)?;
        for v in &standard {
            for u in &standard {
                let Some(found) = search.run(u, v, None) else {
                    continue;
                };
                report.pairs_checked += 1;
                if found {
                    continue;
                }
                report.violations += 1;
                report.satisfied = false;
                if report.counterexample.is_none() {
                    let mut attempts = Vec::new();
                    search.run(u, v, Some(&mut attempts));
                    report.counterexample = Some(ExchangeCounterexample {
                        degree,
                        u_factors: u.factors.clone(),
                        v_factors: v.factors.clone(),
                        attempts,
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Exhaustive `l`-exchange check over standard monomials of `T`-degree at most
/// `bound`, standardness taken with respect to `order`.
pub fn check_l_exchange(gens: &[Monomial], bound: usize, order: TOrder) -> Result<ExchangeReport> {
    check_exchange(gens, ExchangeKind::L, bound, order)
}

/// Exhaustive `sigma`-exchange check over standard monomials of `T`-degree at
/// most `bound`, standardness taken with respect to `order`.
pub fn check_sigma_exchange(
    gens: &[Monomial],
    sigma: MonomialOrder,
    bound: usize,
    order: TOrder,
) -> Result<ExchangeReport> {
    check_exchange(gens, ExchangeKind::Sigma(sigma), bound, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexsegment::{final_lexsegment, initial_lexsegment, LexSegmentIdeal};
    use crate::monomial::Ring;
    use crate::tableau::is_standard_product;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    #[test]
    fn lex_standard_monomials_are_standard_tableaux() {
        let seg = LexSegmentIdeal::new(m(&[1, 0, 1, 1]), m(&[0, 1, 0, 2])).unwrap();
        for count in 1..=3 {
            let std = standard_monomials(seg.generators(), count, TOrder::Lex).unwrap();
            for s in &std {
                assert!(is_standard_product(&s.factors), "{:?}", s.factors);
            }
        }
    }

    #[test]
    fn l_exchange_fails_on_final_segment() {
        let b = final_lexsegment(m(&[1, 0, 1, 1])).unwrap();
        let report = check_l_exchange(b.generators(), 2, TOrder::Lex).unwrap();
        assert!(!report.satisfied);
        let ce = report.counterexample.unwrap();
        let involved: Vec<&Monomial> = ce.u_factors.iter().chain(&ce.v_factors).collect();
        assert!(involved.contains(&&m(&[0, 3, 0, 0])));
        assert!(involved.contains(&&m(&[1, 0, 1, 1])));
        assert!(ce.attempts.iter().any(|a| a.candidate == m(&[1, 2, 0, 0])));
    }

    #[test]
    fn full_veronese_has_both_exchanges() {
        let all = Ring::new(3).monomials_of_degree(2);
        assert!(check_l_exchange(&all, 2, TOrder::Lex).unwrap().satisfied);
        assert!(check_sigma_exchange(&all, MonomialOrder::Lex, 2, TOrder::Lex)
            .unwrap()
            .satisfied);
    }

    #[test]
    fn initial_segments_under_lex_sigma() {
        let b = initial_lexsegment(m(&[0, 1, 1])).unwrap();
        let report = check_sigma_exchange(b.generators(), MonomialOrder::Lex, 2, TOrder::Lex).unwrap();
        assert!(report.satisfied);
        assert!(report.pairs_checked > 0);
    }

    #[test]
    fn sigma_exchange_on_final_segment_any_t_order() {
        let b = final_lexsegment(m(&[1, 0, 1, 1])).unwrap();
        for order in [TOrder::Lex, TOrder::DegRevLex, TOrder::LexReversed] {
            let report = check_sigma_exchange(
                b.generators(),
                MonomialOrder::RevLexDecreasingSigma,
                2,
                order,
            )
            .unwrap();
            assert!(report.satisfied, "{order:?}");
        }
    }

    #[test]
    fn singleton_is_vacuous() {
        let report = check_sigma_exchange(
            &[m(&[1, 1, 0])],
            MonomialOrder::RevLexDecreasingSigma,
            3,
            TOrder::Lex,
        )
        .unwrap();
        assert!(report.satisfied);
        assert_eq!(report.pairs_checked, 0);
    }

    #[test]
    fn succ_is_not_a_sigma() {
        assert!(matches!(
            check_sigma_exchange(&[m(&[1, 1])], MonomialOrder::Succ, 2, TOrder::Lex),
            Err(Error::Precondition(_))
        ));
        assert_eq!(
            check_l_exchange(&[], 2, TOrder::Lex).unwrap_err(),
            Error::Empty
        );
    }
}
