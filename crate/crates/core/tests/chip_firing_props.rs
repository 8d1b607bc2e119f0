mod common;

use proptest::prelude::*;
use rand::Rng;
use scramble_core::divisor::{
    fire_subset, fire_vertex, gonality_bruteforce, is_equivalent, q_reduce, Divisor,
};
use scramble_core::graph::{generate, Family};
use scramble_core::VertexSet;

fn random_divisor(rng: &mut impl Rng, n: usize, lo: i64, hi: i64) -> Divisor {
    Divisor::new((0..n).map(|_| rng.gen_range(lo..=hi)).collect())
}

fn proper_subset(rng: &mut impl Rng, n: usize) -> VertexSet {
    let full = (1u64 << n) - 1;
    loop {
        let s = rng.gen::<u64>() & full;
        if s != 0 && s != full {
            return VertexSet::from_bits(s);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn firing_conserves_degree_and_complements_cancel(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, 2, 9, true);
        let n = g.n();
        let d = random_divisor(&mut rng, n, -3, 3);
        let v = rng.gen_range(0..n);
        prop_assert_eq!(fire_vertex(&g, &d, v).unwrap().degree(), d.degree());
        let s = proper_subset(&mut rng, n);
        let fired = fire_subset(&g, &d, s).unwrap();
        prop_assert_eq!(fired.degree(), d.degree());
        prop_assert_eq!(fire_subset(&g, &fired, s.complement(n)).unwrap(), d);
    }

    #[test]
    fn q_reduction_is_idempotent_and_invariant(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, 2, 6, true);
        let n = g.n();
        let d = random_divisor(&mut rng, n, -2, 3);
        let q = rng.gen_range(0..n);
        let r = q_reduce(&g, &d, q).unwrap();
        prop_assert_eq!(r.degree(), d.degree());
        prop_assert!((0..n).all(|v| v == q || r[v] >= 0));
        prop_assert_eq!(q_reduce(&g, &r, q).unwrap(), r.clone());
        prop_assert!(is_equivalent(&g, &r, &d).unwrap());
        let mut moved = d.clone();
        for _ in 0..3 {
            moved = fire_subset(&g, &moved, proper_subset(&mut rng, n)).unwrap();
        }
        prop_assert_eq!(q_reduce(&g, &moved, q).unwrap(), r);
    }

    #[test]
    fn equivalence_matches_lattice_membership(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let g = common::random_graph(&mut rng, 1, 6, true);
        let n = g.n();
        let d1 = random_divisor(&mut rng, n, -2, 2);
        let d2 = if n > 1 && rng.gen_bool(0.5) {
            let mut d = d1.clone();
            for _ in 0..rng.gen_range(1..4) {
                d = fire_subset(&g, &d, proper_subset(&mut rng, n)).unwrap();
            }
            d
        } else {
            // same degree, otherwise random
            let mut chips = random_divisor(&mut rng, n, -2, 2).chips().to_vec();
            chips[0] += d1.degree() - chips.iter().sum::<i64>();
            Divisor::new(chips)
        };
        prop_assert_eq!(is_equivalent(&g, &d1, &d2).unwrap(), common::in_laplacian_lattice(&g, &d1, &d2));
    }
}

#[test]
fn trees_have_gonality_one() {
    let mut rng = common::rng(11);
    for n in 1..=10 {
        for _ in 0..5 {
            let t = common::random_tree(&mut rng, n);
            assert_eq!(
                gonality_bruteforce(&t, None).unwrap().gonality(),
                Some(1),
                "{t:?}"
            );
        }
    }
}

#[test]
fn cycles_have_gonality_two() {
    for n in 3..=10 {
        let c = generate(Family::Cycle, &[n]).unwrap();
        assert_eq!(
            gonality_bruteforce(&c, None).unwrap().gonality(),
            Some(2),
            "C_{n}"
        );
    }
}
