//! Generators of powers `I^N` and certificates of linear quotients.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexsegment::{classify, LexSegmentIdeal, Verdict};
use crate::monomial::{lex_exps, Monomial, MonomialOrder};
use crate::tableau::standard_representation;
use crate::toric::{check_sigma_exchange, ExchangeReport, TOrder};

/// Largest generator count for which the exhaustive order search runs.
pub const ORDER_SEARCH_LIMIT: usize = 7;

fn check_equigenerated(gens: &[Monomial]) -> Result<&Monomial> {
    let first = gens.first().ok_or(Error::Empty)?;
    for g in gens {
        first.check_same_ring(g)?;
        if g.degree() != first.degree() {
            return Err(Error::Dimension("generators of different degrees".into()));
        }
    }
    Ok(first)
}

/// Minimal generators of `(gens)^count`: the distinct `count`-fold products,
/// lex-descending.
pub fn power_generators(gens: &[Monomial], count: usize) -> Result<Vec<Monomial>> {
    let first = check_equigenerated(gens)?;
    if count == 0 {
        return Err(Error::Precondition("power must be at least 1".into()));
    }
    let mut base: Vec<Monomial> = gens.iter().cloned().collect::<HashSet<_>>().into_iter().collect();
    base.sort_by(|a, b| lex_exps(b.exponents(), a.exponents()));
    let mut layer = base.clone();
    for _ in 1..count {
        let mut next = HashSet::with_capacity(layer.len() * base.len());
        for w in &layer {
            for g in &base {
                next.insert(w.mul(g)?);
            }
        }
        layer = next.into_iter().collect();
    }
    layer.sort_by(|a, b| lex_exps(b.exponents(), a.exponents()));
    debug_assert!(layer.iter().all(|w| w.degree() == first.degree() * count as u32));
    debug_assert!(layer
        .iter()
        .enumerate()
        .all(|(i, a)| layer[i + 1..].iter().all(|b| !a.divides(b) && !b.divides(a))));
    Ok(layer)
}

/// A generator of `I^N` with its standard factorization into generators of `I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerGenerator {
    pub monomial: Monomial,
    pub factors: Vec<Monomial>,
}

pub fn power_generators_with_factors(gens: &[Monomial], count: usize) -> Result<Vec<PowerGenerator>> {
    power_generators(gens, count)?
        .into_iter()
        .map(|monomial| {
            let factors = if count == 1 {
                vec![monomial.clone()]
            } else {
                crate::tableau::standard_factorization(&monomial, count)?
            };
            Ok(PowerGenerator { monomial, factors })
        })
        .collect()
}

/// Generators listed strictly decreasing under `order`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderedGenerators {
    gens: Vec<Monomial>,
    order: MonomialOrder,
}

impl OrderedGenerators {
    pub fn new(gens: Vec<Monomial>, order: MonomialOrder) -> Result<Self> {
        check_equigenerated(&gens)?;
        for pair in gens.windows(2) {
            if !order.compare(&pair[0], &pair[1])?.is_gt() {
                return Err(Error::Order(format!(
                    "{} does not exceed {} under {}",
                    pair[0].pretty(),
                    pair[1].pretty(),
                    order
                )));
            }
        }
        Ok(OrderedGenerators { gens, order })
    }

    /// Deduplicates and sorts largest-first.
    pub fn sorted(mut gens: Vec<Monomial>, order: MonomialOrder) -> Result<Self> {
        check_equigenerated(&gens)?;
        order.sort_descending(&mut gens)?;
        gens.dedup();
        Self::new(gens, order)
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

/// `w_k : w_i = x_q` and `x_q` divides `w_j : w_i`. Indices from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub q: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientCertificate {
    pub ok: bool,
    pub order: MonomialOrder,
    pub witnesses: Vec<Witness>,
    /// First `(i, j)` without a witness.
    pub failure: Option<(usize, usize)>,
}

impl QuotientCertificate {
    /// Re-validates every witness against `og` with plain gcd arithmetic.
    pub fn recheck(&self, og: &OrderedGenerators) -> bool {
        let w = og.gens();
        let valid = self.witnesses.iter().all(|wt| {
            let (i, j, k) = (wt.i - 1, wt.j - 1, wt.k - 1);
            if !(j < i && k < i && i < w.len()) {
                return false;
            }
            let gk = w[k].gcd(&w[i]).expect("same ring");
            let gj = w[j].gcd(&w[i]).expect("same ring");
            let colon_k = gk.quotient_of(&w[k]).expect("gcd divides");
            let colon_j = gj.quotient_of(&w[j]).expect("gcd divides");
            colon_k.as_variable() == Some(wt.q) && colon_j.nu(wt.q) > 0
        });
        let expected = if self.ok {
            w.len() * w.len().saturating_sub(1) / 2
        } else {
            self.witnesses.len()
        };
        valid && self.witnesses.len() == expected
    }
}

/// For each generator `w_i`, the smallest `k < i` with `w_k : w_i = x_q`, by `q`.
fn variable_colons(w: &[Monomial], i: usize) -> Vec<Option<usize>> {
    let n = w[i].n();
    let mut first = vec![None; n + 1];
    for (k, wk) in w[..i].iter().enumerate() {
        if let Some(q) = wk.colon(&w[i]).expect("same ring").as_variable() {
            first[q].get_or_insert(k);
        }
    }
    first
}

fn witnesses_for(w: &[Monomial], i: usize) -> std::result::Result<Vec<Witness>, (usize, usize)> {
    let first = variable_colons(w, i);
    let mut out = Vec::with_capacity(i);
    for (j, wj) in w[..i].iter().enumerate() {
        let colon = wj.colon(&w[i]).expect("same ring");
        let best = colon
            .support()
            .into_iter()
            .filter_map(|q| first[q].map(|k| (k, q)))
            .min();
        match best {
            Some((k, q)) => out.push(Witness {
                i: i + 1,
                j: j + 1,
                k: k + 1,
                q,
            }),
            None => return Err((i + 1, j + 1)),
        }
    }
    Ok(out)
}

/// Linear quotients in the given order, with the smallest witness `k` per pair.
pub fn has_linear_quotients(og: &OrderedGenerators) -> QuotientCertificate {
    let w = og.gens();
    let per_i: Vec<_> = (1..w.len()).into_par_iter().map(|i| witnesses_for(w, i)).collect();
    let mut witnesses = Vec::new();
    for r in per_i {
        match r {
            Ok(ws) => witnesses.extend(ws),
            Err(pair) => {
                return QuotientCertificate {
                    ok: false,
                    order: og.order(),
                    witnesses,
                    failure: Some(pair),
                }
            }
        }
    }
    QuotientCertificate {
        ok: true,
        order: og.order(),
        witnesses,
        failure: None,
    }
}

/// `succ` for the completely cases and decreasing revlex for the non-completely
/// case; `None` when no order is prescribed.
pub fn prescribed_order(verdict: &Verdict) -> Option<MonomialOrder> {
    match verdict {
        Verdict::CompletelyCaseI { .. } | Verdict::CompletelyCaseII | Verdict::CompletelyCaseIII { .. } => {
            Some(MonomialOrder::Succ)
        }
        Verdict::NonCompletely { .. } => Some(MonomialOrder::RevLexDecreasingSigma),
        Verdict::NoLinearResolution | Verdict::Unclassified => None,
    }
}

/// Certifies linear quotients of `I^count` in the order prescribed by the
/// classification of `ideal`.
pub fn verify_power_linear_quotients(ideal: &LexSegmentIdeal, count: usize) -> Result<QuotientCertificate> {
    let class = classify(ideal)?;
    let order = prescribed_order(&class.verdict).ok_or_else(|| {
        Error::Precondition(format!(
            "L({}, {}) is classified {}; no order is prescribed",
            ideal.u().pretty(),
            ideal.v().pretty(),
            class.verdict
        ))
    })?;
    certify_power(ideal.generators(), count, order)
}

fn certify_power(gens: &[Monomial], count: usize, order: MonomialOrder) -> Result<QuotientCertificate> {
    let og = OrderedGenerators::sorted(power_generators(gens, count)?, order)?;
    Ok(has_linear_quotients(&og))
}

/// Outcome of searching all generator orders for linear quotients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum OrderSearch {
    /// Some order admits linear quotients; one such order is given.
    Admits { order: Vec<Monomial> },
    /// No order admits linear quotients.
    Refuted,
    /// Too many generators for the exhaustive search.
    NotRefuted { generators: usize },
}

/// Exhaustive search over generator orders, up to `limit` generators.
///
/// Whether `g` may follow a set `P` of predecessors depends only on `P`, so the
/// search runs over subsets instead of permutations.
pub fn search_linear_quotient_order(gens: &[Monomial], limit: usize) -> Result<OrderSearch> {
    check_equigenerated(gens)?;
    let mut w: Vec<Monomial> = gens.iter().cloned().collect::<HashSet<_>>().into_iter().collect();
    w.sort_by(|a, b| lex_exps(b.exponents(), a.exponents()));
    let r = w.len();
    if r > limit || r >= usize::BITS as usize {
        return Ok(OrderSearch::NotRefuted { generators: r });
    }
    let extends = |set: usize, g: usize| -> bool {
        let preds: Vec<usize> = (0..r).filter(|&k| set >> k & 1 == 1).collect();
        let vars: HashSet<usize> = preds
            .iter()
            .filter_map(|&k| w[k].colon(&w[g]).expect("same ring").as_variable())
            .collect();
        preds.iter().all(|&j| {
            let colon = w[j].colon(&w[g]).expect("same ring");
            colon.support().into_iter().any(|q| vars.contains(&q))
        })
    };
    let full = (1usize << r) - 1;
    // last[set] = generator placed last in some admissible order of `set`
    let mut last: Vec<Option<usize>> = vec![None; full + 1];
    let mut reachable = vec![false; full + 1];
    reachable[0] = true;
    for set in 1..=full {
        for g in 0..r {
            if set >> g & 1 == 1 && reachable[set ^ (1 << g)] && extends(set ^ (1 << g), g) {
                reachable[set] = true;
                last[set] = Some(g);
                break;
            }
        }
    }
    if !reachable[full] {
        return Ok(OrderSearch::Refuted);
    }
    let mut order = Vec::with_capacity(r);
    let mut set = full;
    while set != 0 {
        let g = last[set].expect("reachable");
        order.push(w[g].clone());
        set ^= 1 << g;
    }
    order.reverse();
    Ok(OrderSearch::Admits { order })
}

/// Linear quotients of the powers of an ideal whose generators have the
/// `sigma`-exchange property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerSuiteReport {
    pub sigma: MonomialOrder,
    pub exchange: ExchangeReport,
    /// Certificate status per power.
    pub powers: BTreeMap<usize, bool>,
    /// First failing power with its failing pair.
    pub failure: Option<(usize, (usize, usize))>,
    pub ok: bool,
}

/// Checks `sigma`-exchange at `T`-degree 2, then certifies linear quotients of
/// `(gens)^N` in `sigma`-descending order for `N = 1..=max_power`.
pub fn exchange_implies_power_quotients_suite(
    gens: &[Monomial],
    sigma: MonomialOrder,
    max_power: usize,
    t_order: TOrder,
) -> Result<PowerSuiteReport> {
    let exchange = check_sigma_exchange(gens, sigma, 2, t_order)?;
    if !exchange.satisfied {
        log::warn!("generators fail the {sigma} exchange property; powers are certified anyway");
    }
    let mut powers = BTreeMap::new();
    let mut failure = None;
    for count in 1..=max_power {
        let cert = certify_power(gens, count, sigma)?;
        powers.insert(count, cert.ok);
        if failure.is_none() {
            failure = cert.failure.map(|pair| (count, pair));
        }
    }
    Ok(PowerSuiteReport {
        sigma,
        ok: failure.is_none(),
        exchange,
        powers,
        failure,
    })
}

/// Standard factors of every generator of `I^count`, checked to lie in `L(u, v)`.
pub fn factors_stay_in_segment(ideal: &LexSegmentIdeal, count: usize) -> Result<bool> {
    for pg in power_generators_with_factors(ideal.generators(), count)? {
        if standard_representation(&pg.factors)? != pg.factors {
            return Ok(false);
        }
        if !pg.factors.iter().all(|f| ideal.contains(f)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexsegment::final_lexsegment;
    use crate::monomial::Ring;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    #[test]
    fn powers_of_small_sets() {
        let m2 = Ring::new(2).monomials_of_degree(2);
        assert_eq!(power_generators(&m2, 2).unwrap(), Ring::new(2).monomials_of_degree(4));
        assert_eq!(power_generators(&m2, 1).unwrap(), m2);
        assert_eq!(power_generators(&[m(&[1, 1])], 3).unwrap(), vec![m(&[3, 3])]);
        assert_eq!(power_generators(&[], 2).unwrap_err(), Error::Empty);
        assert!(power_generators(&m2, 0).is_err());
    }

    #[test]
    fn veronese_witnesses() {
        let og = OrderedGenerators::new(vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])], MonomialOrder::Lex).unwrap();
        let cert = has_linear_quotients(&og);
        assert!(cert.ok);
        assert_eq!(
            cert.witnesses,
            vec![
                Witness { i: 2, j: 1, k: 1, q: 1 },
                Witness { i: 3, j: 1, k: 2, q: 1 },
                Witness { i: 3, j: 2, k: 2, q: 1 },
            ]
        );
        assert!(cert.recheck(&og));
    }

    #[test]
    fn gap_ideal_fails() {
        let og = OrderedGenerators::new(vec![m(&[2, 0]), m(&[0, 2])], MonomialOrder::Lex).unwrap();
        let cert = has_linear_quotients(&og);
        assert!(!cert.ok);
        assert_eq!(cert.failure, Some((2, 1)));
        let single = OrderedGenerators::new(vec![m(&[1, 1])], MonomialOrder::Lex).unwrap();
        assert!(has_linear_quotients(&single).ok);
    }

    #[test]
    fn ordered_generators_validate() {
        assert!(OrderedGenerators::new(vec![m(&[0, 2]), m(&[2, 0])], MonomialOrder::Lex).is_err());
        assert!(OrderedGenerators::new(vec![m(&[2, 0]), m(&[2, 0])], MonomialOrder::Lex).is_err());
        let og = OrderedGenerators::sorted(vec![m(&[2, 0]), m(&[0, 2]), m(&[1, 1])], MonomialOrder::Succ).unwrap();
        assert_eq!(og.gens(), &[m(&[0, 2]), m(&[1, 1]), m(&[2, 0])]);
    }

    #[test]
    fn prescribed_orders_certify() {
        let case_i = LexSegmentIdeal::new(m(&[1, 1, 0]), m(&[1, 0, 1])).unwrap();
        assert!(verify_power_linear_quotients(&case_i, 2).unwrap().ok);
        let non = LexSegmentIdeal::new(m(&[1, 0, 1, 1]), m(&[0, 1, 0, 2])).unwrap();
        for count in 1..=2 {
            let cert = verify_power_linear_quotients(&non, count).unwrap();
            assert!(cert.ok);
            assert_eq!(cert.order, MonomialOrder::RevLexDecreasingSigma);
        }
    }

    #[test]
    fn negative_ideal_is_rejected() {
        // (x1x3, x2^2): completely lexsegment, but x1 x2 x3 / x3 >lex x1x3
        let neg = LexSegmentIdeal::new(m(&[1, 0, 1]), m(&[0, 2, 0])).unwrap();
        assert_eq!(classify(&neg).unwrap().verdict, Verdict::NoLinearResolution);
        assert!(matches!(
            verify_power_linear_quotients(&neg, 1),
            Err(Error::Precondition(_))
        ));
        assert_eq!(
            search_linear_quotient_order(neg.generators(), ORDER_SEARCH_LIMIT).unwrap(),
            OrderSearch::Refuted
        );
    }

    #[test]
    fn order_search_finds_orders() {
        let b = final_lexsegment(m(&[1, 0, 1])).unwrap();
        match search_linear_quotient_order(b.generators(), ORDER_SEARCH_LIMIT).unwrap() {
            OrderSearch::Admits { order } => {
                let og = OrderedGenerators {
                    gens: order,
                    order: MonomialOrder::Lex,
                };
                assert!(has_linear_quotients(&og).ok);
            }
            other => panic!("{other:?}"),
        }
        let big = Ring::new(3).monomials_of_degree(3);
        assert_eq!(
            search_linear_quotient_order(&big, ORDER_SEARCH_LIMIT).unwrap(),
            OrderSearch::NotRefuted { generators: 10 }
        );
    }

    #[test]
    fn exchange_suite_examples() {
        let b = final_lexsegment(m(&[1, 0, 1, 1])).unwrap();
        let report =
            exchange_implies_power_quotients_suite(b.generators(), MonomialOrder::RevLexDecreasingSigma, 2, TOrder::Lex)
                .unwrap();
        assert!(report.exchange.satisfied);
        assert!(report.ok);
        let single = exchange_implies_power_quotients_suite(&[m(&[1, 1])], MonomialOrder::Lex, 3, TOrder::Lex).unwrap();
        assert!(single.ok);
    }

    #[test]
    fn standard_factors_stay_in_segment() {
        let non = LexSegmentIdeal::new(m(&[1, 0, 1, 1]), m(&[0, 1, 0, 2])).unwrap();
        assert!(factors_stay_in_segment(&non, 2).unwrap());
        assert!(factors_stay_in_segment(&non, 3).unwrap());
    }
}
