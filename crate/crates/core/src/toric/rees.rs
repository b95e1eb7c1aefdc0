//! The Rees-algebra Gröbner basis for generator sets with a `sigma`-exchange
//! property, and a Buchberger-criterion check of binomial Gröbner bases.

use std::cmp::Ordering;
use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{check_sigma_exchange, lexsegment_algebra_gb, sort_lex_descending, ExchangeReport, MixedMonomial, TOrder, ToricBinomial};
use crate::error::{Error, Result};
use crate::lexsegment::LexSegmentIdeal;
use crate::monomial::{Monomial, MonomialOrder};

/// Maximum reduction steps spent on a single S-pair.
pub const REDUCTION_BUDGET: usize = 1_000_000;

/// The product order `<_sigma^#`: compare `x`-parts by `sigma`, break ties with
/// the `T`-order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductOrder {
    pub sigma: MonomialOrder,
    pub t_order: TOrder,
}

impl ProductOrder {
    pub fn new(sigma: MonomialOrder, t_order: TOrder) -> Self {
        ProductOrder { sigma, t_order }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesBasis {
    pub sigma: MonomialOrder,
    /// Bidegree `(0, 2)` relations of the toric ring `K[B]`.
    pub fiber: Vec<ToricBinomial>,
    /// Bidegree `(1, 1)` relations `x_i T_u - x_j T_v`.
    pub linear: Vec<ToricBinomial>,
    /// Present when the `sigma`-exchange check was requested.
    pub exchange: Option<ExchangeReport>,
}

impl ReesBasis {
    pub fn all(&self) -> Vec<ToricBinomial> {
        self.fiber.iter().chain(&self.linear).cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.fiber.len() + self.linear.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// True when an exchange check was run and failed.
    pub fn exchange_warning(&self) -> bool {
        self.exchange.as_ref().is_some_and(|r| !r.satisfied)
    }
}

/// `x_i T_u - x_j T_v` for every `u` in `gens` and every `x_i`, where `x_j` is
/// the `sigma`-smallest variable with `x_i >sigma x_j` and `x_i u / x_j` in
/// `gens`, and `v = x_i u / x_j`.
pub fn rees_linear_relations(gens: &[Monomial], sigma: MonomialOrder) -> Result<Vec<ToricBinomial>> {
    sigma.require_ring_order()?;
    let first = gens.first().ok_or(Error::Empty)?;
    let n = first.n();
    let members: std::collections::HashSet<&Monomial> = gens.iter().collect();
    let mut sorted = gens.to_vec();
    sort_lex_descending(&mut sorted);
    let mut out = Vec::new();
    for u in &sorted {
        for i in 1..=n {
            let best = u
                .support()
                .into_iter()
                .filter(|&j| sigma.compare_vars(i, j).is_gt())
                .filter_map(|j| u.exchange(i, j).map(|v| (j, v)))
                .filter(|(_, v)| members.contains(v))
                .min_by(|(a, _), (b, _)| sigma.compare_vars(*a, *b));
            if let Some((j, v)) = best {
                let ring = u.ring();
                out.push(ToricBinomial::new(
                    MixedMonomial::new(ring.var(i)?, vec![u.clone()]),
                    MixedMonomial::new(ring.var(j)?, vec![v]),
                ));
            }
        }
    }
    Ok(out)
}

/// Fiber relations of `K[L(u, v)]` together with the linear Rees relations.
///
/// With `exchange_bound = Some(k)` the `sigma`-exchange property is checked up
/// to `T`-degree `k` (default `T`-order) and the report is attached; the basis
/// is produced either way.
pub fn rees_gb(ideal: &LexSegmentIdeal, sigma: MonomialOrder, exchange_bound: Option<usize>) -> Result<ReesBasis> {
    sigma.require_ring_order()?;
    let exchange = exchange_bound
        .map(|bound| check_sigma_exchange(ideal.generators(), sigma, bound, TOrder::Lex))
        .transpose()?;
    if let Some(report) = &exchange {
        if !report.satisfied {
            log::warn!(
                "generators of L({}, {}) fail the {} exchange property; the Rees basis may be incomplete",
                ideal.u().pretty(),
                ideal.v().pretty(),
                sigma
            );
        }
    }
    Ok(ReesBasis {
        sigma,
        fiber: lexsegment_algebra_gb(ideal)?,
        linear: rees_linear_relations(ideal.generators(), sigma)?,
        exchange,
    })
}

/// `true` iff every element has bidegree `(0, 2)` or `(1, 1)`.
pub fn koszul_certificate(gb: &[ToricBinomial]) -> bool {
    gb.iter().all(|g| {
        let lead = g.lead.bidegree();
        let tail = g.tail.bidegree();
        lead == tail && (lead == (0, 2) || lead == (1, 1))
    })
}

/// Dense term: `x`-exponents followed by exponents of the `T`-variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Term {
    x: Vec<u32>,
    t: Vec<u32>,
}

impl Term {
    fn divides(&self, other: &Term) -> bool {
        self.x.iter().zip(&other.x).all(|(a, b)| a <= b) && self.t.iter().zip(&other.t).all(|(a, b)| a <= b)
    }

    fn lcm(&self, other: &Term) -> Term {
        Term {
            x: self.x.iter().zip(&other.x).map(|(a, b)| *a.max(b)).collect(),
            t: self.t.iter().zip(&other.t).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// `self / div * mul`, assuming `div | self`.
    fn replace(&self, div: &Term, mul: &Term) -> Term {
        Term {
            x: self.x.iter().zip(&div.x).zip(&mul.x).map(|((a, b), c)| a - b + c).collect(),
            t: self.t.iter().zip(&div.t).zip(&mul.t).map(|((a, b), c)| a - b + c).collect(),
        }
    }
}

struct DenseBasis {
    order: ProductOrder,
    /// `(lead, tail)` with `lead > tail`.
    elements: Vec<(Term, Term)>,
    /// Input index of each element.
    source: Vec<usize>,
}

fn cmp_terms(order: ProductOrder, a: &Term, b: &Term) -> Ordering {
    order
        .sigma
        .compare_exps(&a.x, &b.x)
        .then_with(|| order.t_order.compare_exps(&a.t, &b.t))
}

impl DenseBasis {
    fn build(gb: &[ToricBinomial], order: ProductOrder) -> Result<Self> {
        let mut tvars: Vec<Monomial> = gb
            .iter()
            .flat_map(|g| g.lead.t.iter().chain(&g.tail.t))
            .cloned()
            .collect();
        sort_lex_descending(&mut tvars);
        tvars.dedup();
        let index: HashMap<&Monomial, usize> = tvars.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let dense = |m: &MixedMonomial| {
            let mut t = vec![0u32; tvars.len()];
            for w in &m.t {
                t[index[w]] += 1;
            }
            Term {
                x: m.x.exponents().to_vec(),
                t,
            }
        };
        let mut elements = Vec::with_capacity(gb.len());
        let mut source = Vec::with_capacity(gb.len());
        for (idx, g) in gb.iter().enumerate() {
            if !g.in_kernel() {
                return Err(Error::NotInKernel(g.pretty()));
            }
            let (a, b) = (dense(&g.lead), dense(&g.tail));
            if a == b {
                continue;
            }
            elements.push(match cmp_terms(order, &a, &b) {
                Ordering::Less => (b, a),
                _ => (a, b),
            });
            source.push(idx);
        }
        Ok(DenseBasis {
            order,
            elements,
            source,
        })
    }

    fn cmp(&self, a: &Term, b: &Term) -> Ordering {
        cmp_terms(self.order, a, b)
    }

    /// Reduces `p - q` by leading terms; `Ok(true)` iff it reaches zero.
    fn reduces_to_zero(&self, mut p: Term, mut q: Term) -> Result<bool> {
        for _ in 0..REDUCTION_BUDGET {
            match self.cmp(&p, &q) {
                Ordering::Equal => return Ok(true),
                Ordering::Less => std::mem::swap(&mut p, &mut q),
                Ordering::Greater => {}
            }
            let Some((lead, tail)) = self.elements.iter().find(|(lead, _)| lead.divides(&p)) else {
                return Ok(false);
            };
            p = p.replace(lead, tail);
        }
        Err(Error::Budget(REDUCTION_BUDGET))
    }

    fn s_pair_reduces(&self, i: usize, j: usize) -> Result<bool> {
        let (li, ti) = &self.elements[i];
        let (lj, tj) = &self.elements[j];
        let l = li.lcm(lj);
        self.reduces_to_zero(l.replace(li, ti), l.replace(lj, tj))
    }

    fn is_reduced(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, (lead, tail))| {
            self.elements
                .iter()
                .enumerate()
                .all(|(k, (other, _))| (k == i || !other.divides(lead)) && !other.divides(tail))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerCheck {
    pub groebner: bool,
    /// No leading term divides another term of the basis.
    pub reduced: bool,
    pub s_pairs: usize,
    /// First pair (indices into the input) whose S-polynomial does not reduce to zero.
    pub failure: Option<(usize, usize)>,
}

/// Buchberger's criterion for a set of binomials under the product order.
pub fn check_groebner(gb: &[ToricBinomial], order: ProductOrder) -> Result<GroebnerCheck> {
    order.sigma.require_ring_order()?;
    let basis = DenseBasis::build(gb, order)?;
    let m = basis.elements.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let results: Vec<bool> = pairs
        .par_iter()
        .map(|&(i, j)| basis.s_pair_reduces(i, j))
        .collect::<Result<_>>()?;
    let failure = pairs
        .iter()
        .zip(&results)
        .find(|(_, ok)| !**ok)
        .map(|(&(i, j), _)| (basis.source[i], basis.source[j]));
    Ok(GroebnerCheck {
        groebner: failure.is_none(),
        reduced: basis.is_reduced(),
        s_pairs: pairs.len(),
        failure,
    })
}

pub fn verify_groebner(gb: &[ToricBinomial], order: ProductOrder) -> Result<bool> {
    Ok(check_groebner(gb, order)?.groebner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Ring;
    use crate::toric::veronese_gb;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    const SIGMA_HASH: ProductOrder = ProductOrder {
        sigma: MonomialOrder::RevLexDecreasingSigma,
        t_order: TOrder::Lex,
    };

    #[test]
    fn empty_and_single_bases() {
        assert!(verify_groebner(&[], SIGMA_HASH).unwrap());
        assert!(verify_groebner(&veronese_gb(2, 2).unwrap(), SIGMA_HASH).unwrap());
    }

    #[test]
    fn singleton_has_no_linear_relations() {
        let single = LexSegmentIdeal::new(m(&[1, 1, 0]), m(&[1, 1, 0])).unwrap();
        let basis = rees_gb(&single, MonomialOrder::RevLexDecreasingSigma, Some(2)).unwrap();
        assert!(basis.is_empty());
        assert!(!basis.exchange_warning());
    }

    #[test]
    fn full_veronese_lex_relations_are_in_kernel() {
        let full = LexSegmentIdeal::full(Ring::new(3), 2).unwrap();
        let basis = rees_gb(&full, MonomialOrder::Lex, None).unwrap();
        assert!(!basis.linear.is_empty());
        for g in &basis.linear {
            assert!(g.in_kernel());
            assert_eq!(g.bidegree(), (1, 1));
        }
    }

    #[test]
    fn non_completely_rees_basis_verifies() {
        let ideal = LexSegmentIdeal::new(m(&[1, 0, 1, 1]), m(&[0, 1, 0, 2])).unwrap();
        let basis = rees_gb(&ideal, MonomialOrder::RevLexDecreasingSigma, Some(2)).unwrap();
        assert!(!basis.exchange_warning());
        let all = basis.all();
        let check = check_groebner(&all, SIGMA_HASH).unwrap();
        assert!(check.groebner, "{:?}", check.failure);
        assert!(check.reduced);
        assert!(koszul_certificate(&all));
    }

    #[test]
    fn missing_relation_is_detected() {
        let ideal = LexSegmentIdeal::new(m(&[1, 0, 1, 1]), m(&[0, 1, 0, 2])).unwrap();
        let basis = rees_gb(&ideal, MonomialOrder::RevLexDecreasingSigma, None).unwrap();
        let mut all = basis.all();
        all.retain(|g| g.bidegree() != (0, 2));
        assert!(!verify_groebner(&all, SIGMA_HASH).unwrap());
    }

    #[test]
    fn kernel_violations_are_rejected() {
        let ring = Ring::new(2);
        let bad = ToricBinomial::new(
            MixedMonomial::pure_t(ring, vec![m(&[2, 0]), m(&[2, 0])]),
            MixedMonomial::pure_t(ring, vec![m(&[1, 1]), m(&[1, 1])]),
        );
        assert!(matches!(
            verify_groebner(&[bad], SIGMA_HASH),
            Err(Error::NotInKernel(_))
        ));
    }

    #[test]
    fn koszul_rejects_cubic() {
        let ring = Ring::new(2);
        let cubic = ToricBinomial::new(
            MixedMonomial::pure_t(ring, vec![m(&[2, 0]), m(&[2, 0]), m(&[0, 2])]),
            MixedMonomial::pure_t(ring, vec![m(&[2, 0]), m(&[1, 1]), m(&[1, 1])]),
        );
        assert!(!koszul_certificate(&[cubic]));
        assert!(koszul_certificate(&veronese_gb(3, 2).unwrap()));
    }
}
