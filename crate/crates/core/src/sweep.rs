//! Exhaustive sweep over lexsegment ideals `L(u, v)` with `x1 | u`, checking
//! the classification against linear-quotient certificates, Rees bases and
//! exchange properties.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lexsegment::{classify, LexSegmentIdeal, ResolutionClass, Verdict};
use crate::monomial::{Monomial, MonomialOrder, Ring};
use crate::quotients::{
    exchange_implies_power_quotients_suite, prescribed_order, search_linear_quotient_order,
    verify_power_linear_quotients, OrderSearch, ORDER_SEARCH_LIMIT,
};
use crate::toric::{check_l_exchange, check_sigma_exchange, koszul_certificate, rees_gb, verify_groebner, ProductOrder, TOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOptions {
    pub n_max: usize,
    pub d_max: u32,
    /// Largest power `N` certified for positive instances.
    pub max_power: usize,
    /// Verify the Rees basis of non-completely instances.
    pub rees: bool,
    /// Run the exchange-property checks at `T`-degree 2.
    pub exchange: bool,
    pub order_search_limit: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            n_max: 3,
            d_max: 2,
            max_power: 2,
            rees: true,
            exchange: true,
            order_search_limit: ORDER_SEARCH_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesStatus {
    pub gb_size: usize,
    pub quadratic: bool,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeStatus {
    /// `l`-exchange.
    pub l: bool,
    /// `sigma`-exchange with `sigma = lex`.
    pub sigma_lex: bool,
    /// `sigma`-exchange with decreasing revlex.
    pub sigma_revlex: bool,
    /// Linear quotients of the powers up to `max_power` in decreasing revlex
    /// order; run only when `sigma_revlex` holds.
    pub powers_revlex: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub n: usize,
    pub d: u32,
    pub u: Monomial,
    pub v: Monomial,
    pub generators: usize,
    pub verdict: ResolutionClass,
    pub completeness_iters: usize,
    /// Certificate status per power in the prescribed order.
    pub power_status: BTreeMap<usize, bool>,
    /// Exhaustive order search, run for negative instances.
    pub order_search: Option<OrderSearch>,
    pub rees: Option<ReesStatus>,
    pub exchange: Option<ExchangeStatus>,
    pub consistent: bool,
    pub elapsed_us: u64,
}

impl SweepRecord {
    /// JSON with sorted keys.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("record serializes")
    }

    pub fn from_json(value: serde_json::Value) -> Result<Self> {
        serde_json::from_value(value).map_err(|e| crate::error::Error::Parse(e.to_string()))
    }

    /// Explanation of the first inconsistency, if any.
    pub fn inconsistency(&self) -> Option<String> {
        let verdict = &self.verdict.verdict;
        if verdict.is_positive() {
            if let Some((n, _)) = self.power_status.iter().find(|(_, ok)| !**ok) {
                return Some(format!("{verdict} but the power {n} has no linear quotients"));
            }
        }
        if *verdict == Verdict::NoLinearResolution {
            if let Some(OrderSearch::Admits { .. }) = self.order_search {
                return Some("NoLinearResolution but some order has linear quotients".into());
            }
        }
        if let Some(rees) = &self.rees {
            if !(rees.verified && rees.quadratic) {
                return Some("Rees basis failed verification".into());
            }
        }
        if let Some(ex) = &self.exchange {
            if ex.l && !ex.sigma_lex {
                return Some("l-exchange holds but lex sigma-exchange fails".into());
            }
            if ex.powers_revlex == Some(false) {
                return Some("sigma-exchange holds but a power lacks linear quotients".into());
            }
            if matches!(verdict, Verdict::NonCompletely { .. }) && !ex.sigma_revlex {
                return Some("NonCompletely but sigma-exchange fails".into());
            }
        }
        None
    }
}

/// All `(u, v)` with `u >=lex v` of degree `d` in `n` variables and `x1 | u`,
/// `u` descending then `v` descending.
pub fn segment_pairs(n: usize, d: u32) -> Vec<(Monomial, Monomial)> {
    let all = Ring::new(n).monomials_of_degree(d);
    let mut out = Vec::new();
    for (i, u) in all.iter().enumerate() {
        if u.nu(1) == 0 {
            continue;
        }
        for v in &all[i..] {
            out.push((u.clone(), v.clone()));
        }
    }
    out
}

pub fn sweep_record(u: &Monomial, v: &Monomial, opts: &SweepOptions) -> Result<SweepRecord> {
    let start = Instant::now();
    let ideal = LexSegmentIdeal::new(u.clone(), v.clone())?;
    let class = classify(&ideal)?;
    let mut power_status = BTreeMap::new();
    if prescribed_order(&class.verdict).is_some() {
        for count in 1..=opts.max_power {
            let cert = verify_power_linear_quotients(&ideal, count)?;
            power_status.insert(count, cert.ok);
        }
    }
    let order_search = match class.verdict {
        Verdict::NoLinearResolution | Verdict::Unclassified => {
            Some(search_linear_quotient_order(ideal.generators(), opts.order_search_limit)?)
        }
        _ => None,
    };
    let sigma = MonomialOrder::RevLexDecreasingSigma;
    let rees = match class.verdict {
        Verdict::NonCompletely { .. } if opts.rees => {
            let basis = rees_gb(&ideal, sigma, None)?;
            let all = basis.all();
            Some(ReesStatus {
                gb_size: all.len(),
                quadratic: koszul_certificate(&all),
                verified: verify_groebner(&all, ProductOrder::new(sigma, TOrder::Lex))?,
            })
        }
        _ => None,
    };
    let exchange = if opts.exchange {
        let gens = ideal.generators();
        let sigma_revlex = check_sigma_exchange(gens, sigma, 2, TOrder::Lex)?.satisfied;
        let powers_revlex = if sigma_revlex {
            Some(exchange_implies_power_quotients_suite(gens, sigma, opts.max_power, TOrder::Lex)?.ok)
        } else {
            None
        };
        Some(ExchangeStatus {
            l: check_l_exchange(gens, 2, TOrder::Lex)?.satisfied,
            sigma_lex: check_sigma_exchange(gens, MonomialOrder::Lex, 2, TOrder::Lex)?.satisfied,
            sigma_revlex,
            powers_revlex,
        })
    } else {
        None
    };
    let mut record = SweepRecord {
        n: ideal.n(),
        d: ideal.d(),
        u: u.clone(),
        v: v.clone(),
        generators: ideal.len(),
        completeness_iters: class.shadow_iterations,
        verdict: class,
        power_status,
        order_search,
        rees,
        exchange,
        consistent: true,
        elapsed_us: 0,
    };
    record.consistent = record.inconsistency().is_none();
    record.elapsed_us = start.elapsed().as_micros() as u64;
    Ok(record)
}

/// Records for every `n <= n_max`, `2 <= d <= d_max`, in canonical order.
pub fn sweep(opts: &SweepOptions) -> Result<Vec<SweepRecord>> {
    let jobs: Vec<(Monomial, Monomial)> = (1..=opts.n_max)
        .flat_map(|n| (2..=opts.d_max).flat_map(move |d| segment_pairs(n, d)))
        .collect();
    jobs.par_iter().map(|(u, v)| sweep_record(u, v, opts)).collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepSummary {
    pub records: usize,
    pub by_verdict: BTreeMap<String, usize>,
    pub inconsistent: usize,
    /// Negative instances refuted by the exhaustive order search.
    pub refuted: usize,
    /// Negative instances too large for the order search.
    pub not_refuted: usize,
}

pub fn summarize(records: &[SweepRecord]) -> SweepSummary {
    let mut s = SweepSummary {
        records: records.len(),
        ..Default::default()
    };
    for r in records {
        *s.by_verdict.entry(r.verdict.verdict.label().to_string()).or_default() += 1;
        if !r.consistent {
            s.inconsistent += 1;
        }
        if r.verdict.verdict == Verdict::NoLinearResolution {
            match r.order_search {
                Some(OrderSearch::Refuted) => s.refuted += 1,
                Some(OrderSearch::NotRefuted { .. }) => s.not_refuted += 1,
                _ => {}
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_are_ordered_and_filtered() {
        let pairs = segment_pairs(2, 2);
        // u in {x1^2, x1x2}
        assert_eq!(pairs.len(), 3 + 2);
        assert!(pairs.iter().all(|(u, v)| u.nu(1) > 0 && crate::monomial::cmp_lex(u, v).unwrap().is_ge()));
        assert_eq!(segment_pairs(1, 3).len(), 1);
    }

    #[test]
    fn small_sweep_is_consistent() {
        let records = sweep(&SweepOptions::default()).unwrap();
        assert!(!records.is_empty());
        for r in &records {
            assert!(r.consistent, "{:?}: {:?}", (r.u.pretty(), r.v.pretty()), r.inconsistency());
        }
        let summary = summarize(&records);
        assert_eq!(summary.inconsistent, 0);
        assert_eq!(summary.records, records.len());
    }

    #[test]
    fn records_round_trip() {
        let opts = SweepOptions::default();
        let u = Monomial::new(vec![1, 0, 1, 1]).unwrap();
        let v = Monomial::new(vec![0, 1, 0, 2]).unwrap();
        let r = sweep_record(&u, &v, &opts).unwrap();
        assert!(r.rees.is_some());
        let json = r.to_json();
        assert_eq!(json["u"], "1,0,1,1");
        let text = serde_json::to_string(&json).unwrap();
        let back = SweepRecord::from_json(serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, r);
    }
}
