mod common;

use cpa_core::cpa::{run_cpa_with, CpaOptions, ZetaSeries, zeta_update};
use cpa_core::chromatic::{chi_bruteforce_oracle, MemoTable};
use cpa_core::experiment::{generate_dataset, vectorize_baseline};
use cpa_core::graph::build_threshold_chain;
use cpa_core::{run_cpa, run_ph_baseline, summarize, DiagonalEPolynomial, IntPolynomial, RationalPolynomial};
use num_traits::One;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn jumps_telescope_to_the_full_graph(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(1..=9);
        let g = common::random_connected_weighted(&mut rng, n, 16);
        let r = run_cpa(&g).unwrap();
        let total = r.jumps.iter().fold(r.e_polys[0].clone(), |acc, d| acc.sub(d));
        prop_assert_eq!(&total, r.final_e());
        prop_assert_eq!(r.final_e().to_poly(), chi_bruteforce_oracle(&g.underlying()).unwrap());
        for (j, d) in r.jumps.iter().enumerate() {
            prop_assert_eq!(d.degree(), Some(n - 1));
            prop_assert!(d.leading_coeff().unwrap().is_one());
            prop_assert_eq!(&r.e_polys[j].sub(d), &r.e_polys[j + 1]);
            prop_assert_eq!(r.e_polys[j + 1].degree(), Some(n));
        }
    }

    #[test]
    fn monotone_reweighting_changes_nothing(seed in any::<u64>(), scale in 0.01f64..100.0) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(2..=8);
        let g = common::random_connected_weighted(&mut rng, n, 14);
        let base = run_cpa(&g).unwrap().to_json();
        let scaled = g.map_weights(|w| w * scale).unwrap();
        prop_assert_eq!(&base, &run_cpa(&scaled).unwrap().to_json());
        let warped = g.map_weights(|w| w.exp() + w.powi(3)).unwrap();
        prop_assert_eq!(&base, &run_cpa(&warped).unwrap().to_json());
    }

    #[test]
    fn zeta_low_coefficients_ignore_later_jumps(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(2..=6);
        let g = common::random_connected_weighted(&mut rng, n, 8);
        let r = run_cpa(&g).unwrap();
        let z = r.zeta.series();
        prop_assert_eq!(z.coeff(0), RationalPolynomial::one());
        let m = r.m();
        if m >= 1 {
            prop_assert_eq!(z.coeff(1), r.jumps[0].to_poly().map(|c| c.clone().into()));
        }
        // rebuild with everything after event k replaced by s
        let k = rng.gen_range(0..=m);
        let s = DiagonalEPolynomial::from_poly(&IntPolynomial::x());
        let mut other = ZetaSeries::one(m);
        for j in 1..=m {
            let d = if j <= k { &r.jumps[j - 1] } else { &s };
            other = zeta_update(&other, j, d);
        }
        for t in 0..=k {
            prop_assert_eq!(z.coeff(t), other.coeff(t));
        }
    }

    #[test]
    fn euler_relation_and_scale_invariance(seed in any::<u64>(), scale in 0.1f64..10.0) {
        let mut rng = common::rng(seed);
        let h = common::random_small_graph(&mut rng, 2, 12);
        prop_assume!(h.edge_count() > 0);
        let g = common::weighted(&mut rng, &h);
        let trace = run_ph_baseline(&g).unwrap();
        let mut prev = (h.n(), 0);
        for r in &trace.records {
            prop_assert_eq!(r.b1 as i64 - r.b0 as i64, r.j as i64 - h.n() as i64);
            prop_assert!(r.b0 <= prev.0 && r.b1 >= prev.1);
            prev = (r.b0, r.b1);
        }
        let s = summarize(&trace);
        prop_assert!(s.b1_jumps <= trace.records.len());
        let t = summarize(&run_ph_baseline(&g.map_weights(|w| w * scale).unwrap()).unwrap());
        let close = |a: f64, b: f64| (a - b).abs() < 1e-9;
        prop_assert!(close(s.auc_b0, t.auc_b0) && close(s.auc_b1, t.auc_b1) && close(s.b1_birth_norm, t.b1_birth_norm));
        prop_assert_eq!((s.final_b1, s.b1_jumps), (t.final_b1, t.b1_jumps));
    }
}

#[test]
fn shared_memo_reproduces_fresh_results() {
    let mut rng = common::rng(21);
    let memo = MemoTable::new();
    for _ in 0..30 {
        let n = rng.gen_range(4..=9);
        let g = common::random_connected_weighted(&mut rng, n, 20);
        let fresh = run_cpa(&g).unwrap().to_json();
        let shared = run_cpa_with(&g, &memo, CpaOptions::default()).unwrap().to_json();
        assert_eq!(fresh, shared);
    }
}

#[test]
fn blind_spot_slots_are_constant_over_the_dataset() {
    for inst in generate_dataset(0) {
        let chain = build_threshold_chain(&inst.graph).unwrap();
        assert_eq!(chain.events().last().unwrap().edge, inst.closer);
        let f = vectorize_baseline(&summarize(&run_ph_baseline(&inst.graph).unwrap()));
        assert_eq!(f.values[2..], [1.0, 1.0, 1.0]);
    }
}

#[test]
fn zeta_truncation_option() {
    let g = cpa_core::WeightedGraph::new(4, [(0, 1, 1.0), (1, 2, 2.0), (2, 3, 3.0), (3, 0, 4.0)]).unwrap();
    let full = run_cpa(&g).unwrap();
    let short = run_cpa_with(&g, &MemoTable::new(), CpaOptions { zeta_order: Some(2), ..Default::default() }).unwrap();
    assert_eq!(short.zeta.series().coeffs(), &full.zeta.series().coeffs()[..3]);
}
