//! Property tests for the structural invariants.

use std::collections::HashSet;

use lexseg::lexsegment::{classify, LexSegmentIdeal, Verdict};
use lexseg::monomial::{Monomial, MonomialOrder, Ring};
use lexseg::quotients::{
    has_linear_quotients, power_generators, prescribed_order, OrderedGenerators,
};
use lexseg::sweep::{segment_pairs, sweep_record, SweepOptions, SweepRecord};
use lexseg::tableau::{is_standard_product, standard_representation};
use lexseg::toric::{check_l_exchange, check_sigma_exchange, lexsegment_algebra_gb, rees_gb, TOrder};
use proptest::prelude::*;

fn monomial(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(|e| Monomial::new(e).unwrap())
}

fn triple() -> impl Strategy<Value = (Monomial, Monomial, Monomial)> {
    (1usize..=5).prop_flat_map(|n| (monomial(n, 3), monomial(n, 3), monomial(n, 3)))
}

/// A lexsegment ideal with `x1 | u`, `n <= 4`, `d <= 3`.
fn segment() -> impl Strategy<Value = LexSegmentIdeal> {
    (2usize..=4, 2u32..=3)
        .prop_flat_map(|(n, d)| {
            let pairs = segment_pairs(n, d);
            (0..pairs.len()).prop_map(move |i| pairs[i].clone())
        })
        .prop_map(|(u, v)| LexSegmentIdeal::new(u, v).unwrap())
}

proptest! {
    #[test]
    fn ring_orders_are_multiplicative((a, b, c) in triple()) {
        for order in [MonomialOrder::Lex, MonomialOrder::RevLexDecreasingSigma] {
            if a.degree() != b.degree() && order == MonomialOrder::Lex {
                continue;
            }
            let before = order.compare(&a, &b).unwrap();
            let after = order.compare(&a.mul(&c).unwrap(), &b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(before, after);
            prop_assert_eq!(order.compare(&b, &a).unwrap(), before.reverse());
        }
    }

    #[test]
    fn orders_are_transitive((a, b, c) in triple()) {
        let order = MonomialOrder::RevLexDecreasingSigma;
        let mut v = vec![a, b, c];
        order.sort_descending(&mut v).unwrap();
        prop_assert!(order.compare(&v[0], &v[2]).unwrap().is_ge());
    }

    #[test]
    fn gcd_and_colon((a, b, _c) in triple()) {
        let g = a.gcd(&b).unwrap();
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert_eq!(a.colon(&b).unwrap().mul(&g).unwrap(), a.clone());
        prop_assert_eq!(a.mul(&b).unwrap().degree(), a.degree() + b.degree());
        let text = a.to_string();
        prop_assert_eq!(text.parse::<Monomial>().unwrap(), a);
    }

    #[test]
    fn standard_representation_is_canonical(
        (factors, perm_seed) in (1usize..=4, 1u32..=3, 1usize..=4).prop_flat_map(|(n, d, count)| {
            let all = Ring::new(n).monomials_of_degree(d);
            (prop::collection::vec(prop::sample::select(all), count), any::<u64>())
        })
    ) {
        let std = standard_representation(&factors).unwrap();
        prop_assert!(is_standard_product(&std));
        prop_assert_eq!(Monomial::product(&std).unwrap(), Monomial::product(&factors).unwrap());
        prop_assert_eq!(standard_representation(&std).unwrap(), std.clone());
        let mut shuffled = factors.clone();
        shuffled.rotate_left(perm_seed as usize % factors.len());
        prop_assert_eq!(standard_representation(&shuffled).unwrap(), std);
    }

    #[test]
    fn powers_are_associative(ideal in segment(), count in 1usize..=2) {
        let gens = ideal.generators();
        let next = power_generators(gens, count + 1).unwrap();
        let mut products = HashSet::new();
        for w in power_generators(gens, count).unwrap() {
            for g in gens {
                products.insert(w.mul(g).unwrap());
            }
        }
        prop_assert_eq!(next.iter().cloned().collect::<HashSet<_>>(), products);
    }

    #[test]
    fn certificates_recheck(ideal in segment(), count in 1usize..=2) {
        let verdict = classify(&ideal).unwrap().verdict;
        if let Some(order) = prescribed_order(&verdict) {
            let og = OrderedGenerators::sorted(power_generators(ideal.generators(), count).unwrap(), order).unwrap();
            let cert = has_linear_quotients(&og);
            prop_assert!(cert.ok);
            prop_assert!(cert.recheck(&og));
        }
    }

    #[test]
    fn rees_binomials_are_kernel_elements(ideal in segment()) {
        for sigma in [MonomialOrder::Lex, MonomialOrder::RevLexDecreasingSigma] {
            let basis = rees_gb(&ideal, sigma, None).unwrap();
            let all = basis.all();
            prop_assert!(all.iter().all(|g| g.in_kernel()));
            let fiber: Vec<_> = all.iter().filter(|g| g.bidegree() == (0, 2)).cloned().collect();
            prop_assert_eq!(fiber, lexsegment_algebra_gb(&ideal).unwrap());
            prop_assert!(basis.linear.iter().all(|g| g.bidegree() == (1, 1)));
        }
    }

    #[test]
    fn l_exchange_implies_lex_sigma_exchange(ideal in segment()) {
        let gens = ideal.generators();
        if check_l_exchange(gens, 2, TOrder::Lex).unwrap().satisfied {
            prop_assert!(check_sigma_exchange(gens, MonomialOrder::Lex, 2, TOrder::Lex).unwrap().satisfied);
        }
    }

    #[test]
    fn non_completely_is_sigma_exchange_for_every_t_order(ideal in segment()) {
        if matches!(classify(&ideal).unwrap().verdict, Verdict::NonCompletely { .. }) {
            for order in [TOrder::Lex, TOrder::DegRevLex, TOrder::LexReversed] {
                let report = check_sigma_exchange(ideal.generators(), MonomialOrder::RevLexDecreasingSigma, 2, order).unwrap();
                prop_assert!(report.satisfied);
            }
        }
    }

    #[test]
    fn sweep_records_round_trip(ideal in segment()) {
        let record = sweep_record(ideal.u(), ideal.v(), &SweepOptions::default()).unwrap();
        prop_assert!(record.consistent);
        let text = serde_json::to_string(&record.to_json()).unwrap();
        let back = SweepRecord::from_json(serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, record);
    }
}
