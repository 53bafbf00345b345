mod common;

use common::random_lower_set;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rank1_lower::cubature::{
    character_sum, cubature, cubature_half, eval_cheb_basis, reconstruct, ChebSeries, Rank1Lattice,
    ReconstructionMode, EXACTNESS_TOL,
};
use rank1_lower::search::{lower_bound, two_step_search};
use rank1_lower::{check_direct, LatticeConfig, Plan, SignedMultiIndex};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn character_sum_is_an_indicator(n in 1u64..40, h in proptest::collection::vec(-20i64..=20, 1..4), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let z: Vec<i64> = (0..h.len()).map(|_| rng.gen_range(0..n as i64)).collect();
        let dot: i64 = h.iter().zip(&z).map(|(a, b)| a * b).sum();
        let cfg = LatticeConfig::new(n, z).unwrap();
        let s = character_sum(&SignedMultiIndex::new(h), &cfg).unwrap();
        let expected = if dot.rem_euclid(n as i64) == 0 { 1.0 } else { 0.0 };
        prop_assert!((s.re - expected).abs() < 1e-10 && s.im.abs() < 1e-10);
    }

    #[test]
    fn plan_zero_lattices_integrate_exactly(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = rng.gen_range(1..=3);
        let card = rng.gen_range(1..=10);
        let set = random_lower_set(&mut rng, dim, card);
        let r = two_step_search(&set, Plan::Zero, lower_bound(set.members(), Plan::Zero), false).unwrap();
        let lat = Rank1Lattice::new(r.config());
        for k in &set {
            let g = |p: &rank1_lower::cubature::Node| eval_cheb_basis(k, &p.cosine_point()).unwrap();
            let exact = if k.is_zero() { 1.0 } else { 0.0 };
            prop_assert!((cubature(&lat, g) - exact).abs() < 1e-10, "{}", k);
            prop_assert!((cubature_half(&lat, g) - exact).abs() < 1e-10, "{}", k);
        }
    }

    #[test]
    fn reconstruction_is_exact_under_its_plan(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let dim = rng.gen_range(1..=3);
        let card = rng.gen_range(1..=10);
        let set = random_lower_set(&mut rng, dim, card);
        let f = ChebSeries::new(dim, set.iter().map(|k| (k.clone(), rng.gen_range(-1.0..1.0)))).unwrap();
        for mode in ReconstructionMode::ALL {
            let plan = mode.plan();
            let r = two_step_search(&set, plan, lower_bound(set.members(), plan), false).unwrap();
            prop_assert!(check_direct(set.members(), &r.config(), plan).unwrap());
            let lat = Rank1Lattice::new(r.config());
            let got = reconstruct(&lat, |x| f.eval(x).unwrap(), set.members(), mode).unwrap();
            prop_assert!(got.max_abs_diff(&f) < EXACTNESS_TOL, "{} {}", mode, r.config());
        }
    }
}
