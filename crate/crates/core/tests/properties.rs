mod common;

use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;
use sidorenko::certify::{decide_membership, thickness_problem, verify_certificate, verify_refutation, Claim, Decision, Limits, Mode};
use sidorenko::homcount::{count_hom, count_hom_naive};
use sidorenko::measures::{ci_coupling, entropy_vs_uniform, marginal, relative_entropy, restrict};
use sidorenko::setfun::{h_mask, int, s_mask, t_is_zero, t_mask, GroundSet, Subset};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn t_vanishes_exactly_on_comparable_pairs(a in 0u64..64, b in 0u64..64) {
        let ground = GroundSet::range(6).unwrap();
        let (a, b) = (Subset(a), Subset(b));
        prop_assert_eq!(t_mask(&ground, a, b).is_zero(), t_is_zero(a, b));
    }

    #[test]
    fn s_minus_h_is_the_degree_excess(seed in any::<u64>(), n in 1u32..=7) {
        let mut rng = common::rng(seed);
        let g = common::random_target(&mut rng, n.max(2));
        let h = g.graph();
        let ground = h.ground().unwrap();
        let edges = h.edge_masks(&ground).unwrap();
        let x = Subset(rng.gen::<u64>() & ground.full().0);
        let mut diff = s_mask(&ground, &edges, x);
        diff.add_scaled(&int(-1), &h_mask(&ground, &edges, x).unwrap()).unwrap();
        for p in x.positions() {
            let deg = edges.iter().filter(|e| e.contains(p) && e.is_subset_of(x)).count() as i64;
            prop_assert_eq!(diff.get(Subset::singleton(p)), int(deg - 1));
        }
        prop_assert!(diff.entries().all(|(s, c)| s.len() == 1 || c.is_zero()));
    }

    #[test]
    fn backtracking_matches_brute_force(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let nh = rng.gen_range(2..=5);
        let ng = rng.gen_range(2..=4);
        let h = common::random_target(&mut rng, nh).graph().clone();
        let g = common::random_target(&mut rng, ng);
        prop_assert_eq!(count_hom(&h, &g).unwrap(), count_hom_naive(&h, &g, 1 << 20).unwrap());
    }

    #[test]
    fn counts_multiply_over_disjoint_unions(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let (n1, n2, ng) = (rng.gen_range(2..=4), rng.gen_range(2..=4), rng.gen_range(2..=4));
        let h1 = common::random_forest(&mut rng, n1);
        let h2 = common::random_target(&mut rng, n2).graph().clone();
        let g = common::random_target(&mut rng, ng);
        let both = h1.disjoint_union(&h2).unwrap();
        prop_assert_eq!(count_hom(&both, &g).unwrap(), count_hom(&h1, &g).unwrap() * count_hom(&h2, &g).unwrap());
    }

    #[test]
    fn ci_coupling_keeps_both_marginals(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(2..=3);
        let g = common::random_target(&mut rng, n);
        let a = rng.gen_range(1..=3u32);
        let shared = rng.gen_range(0..=a);
        let b = rng.gen_range(shared.max(1)..=3);
        let mu1 = common::random_table(&mut rng, &g, (1..=a).collect(), 0.6);
        let x: Vec<u32> = (1..=shared).collect();
        let mu3 = restrict(&mu1, &x).unwrap();
        let mu2 = common::extend_table(&mut rng, &mu3, (1..=b).collect(), 0.6);
        let beta: Vec<(u32, u32)> = x.iter().map(|&c| (c, c)).collect();
        let coupled = ci_coupling(&mu1, &mu2, &beta, &beta).unwrap();
        prop_assert_eq!(restrict(&coupled.table, mu1.coords()).unwrap(), mu1);
        let back: Vec<(u32, u32)> = mu2.coords().iter().map(|c| (*c, coupled.tau2[c])).collect();
        prop_assert_eq!(marginal(&coupled.table, &back).unwrap(), mu2);
    }

    #[test]
    fn relative_entropy_is_nonnegative(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let n = rng.gen_range(2..=4);
        let g = common::random_target(&mut rng, n);
        let coords: Vec<u32> = (1..=rng.gen_range(1..=3)).collect();
        let mu = common::random_table(&mut rng, &g, coords.clone(), 0.5);
        let nu = common::random_table(&mut rng, &g, coords, 1.0);
        prop_assert!(relative_entropy(&mu, &nu).unwrap().to_f64() >= -1e-12);
        prop_assert!(entropy_vs_uniform(&mu).to_f64() >= -1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn lp_answers_verify(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let steps = rng.gen_range(1..=4);
        let m = common::random_trace(&mut rng, 2, 6, steps);
        for claim in [Claim::Thick, Claim::WeaklyThick] {
            let p = thickness_problem(m.base(), 2, claim).unwrap();
            match decide_membership(&p, Mode::Full, &Limits::default()).unwrap() {
                Decision::Member(c) => prop_assert!(verify_certificate(&p, &c).unwrap()),
                Decision::NotMember(r) => prop_assert!(verify_refutation(&p, &r).unwrap()),
                Decision::Inconclusive => prop_assert!(false, "full mode was inconclusive"),
            }
        }
    }
}
