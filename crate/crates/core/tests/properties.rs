//! Property tests across modules.

mod common;

use common::*;
use lagrange::invariants::{builtin, MultiPoly};
use lagrange::matrices::{coset_action, partition_of};
use lagrange::polyint::{factor_rational, IntPoly};
use lagrange::resolvent::{absolute_resolvent, complex_roots};
use lagrange::subgrp::{left_cosets, subgroup_classes};
use lagrange::{Permutation, PermutationGroup};
use proptest::prelude::*;

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(&v).unwrap())
}

fn int_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    (1..=max_deg)
        .prop_flat_map(move |n| prop::collection::vec(-bound..=bound, n + 1))
        .prop_filter_map("leading coefficient", |mut c| {
            if *c.last().unwrap() == 0 {
                *c.last_mut().unwrap() = 1;
            }
            Some(IntPoly::from_i64(&c))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(a in perm(6), b in perm(6), c in perm(6)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_and_display_round_trip(a in perm(7)) {
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        let back = Permutation::parse_cycles(7, &a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn action_is_a_left_action(s in perm(4), t in perm(4)) {
        let p = MultiPoly::parse("x1^2*x2 + 3*x3 - x4*x1", 4).unwrap();
        let st = s.compose(&t).unwrap();
        prop_assert_eq!(p.act(&t).act(&s), p.act(&st));
    }

    #[test]
    fn factorization_reproduces_input(f in int_poly(7, 30)) {
        let fac = factor_rational(&f).unwrap();
        prop_assert_eq!(fac.expand(), f.clone());
        for (q, _) in &fac.factors {
            prop_assert!(subset_divisor_irreducible(q), "{} from {}", q, f);
        }
    }

    #[test]
    fn products_split(a in int_poly(3, 6), b in int_poly(3, 6)) {
        let f = &a * &b;
        let fac = factor_rational(&f).unwrap();
        prop_assert_eq!(fac.expand(), f);
        let total: usize = fac.factors.iter().map(|(_, m)| m).sum();
        prop_assert!(total >= 2);
    }

    #[test]
    fn tchirnhaus_resolvent_is_the_input(c in prop::collection::vec(-9i64..=9, 2..=5)) {
        let mut c = c;
        c.push(1);
        let f = IntPoly::from_i64(&c);
        prop_assume!(f.is_squarefree());
        let n = f.degree().unwrap();
        let r = absolute_resolvent(&f, &builtin("tchirnhaus", n).unwrap()).unwrap();
        prop_assert_eq!(r.resolvent(), &f);
    }

    #[test]
    fn root_disks_are_disjoint(f in int_poly(6, 20)) {
        prop_assume!(f.is_squarefree());
        let roots = complex_roots(&f, 128).unwrap();
        prop_assert_eq!(roots.len(), f.degree().unwrap());
        prop_assert!(roots.error_radius() < 1e-20);
    }

    #[test]
    fn coset_partitions_match_brute_force(i in 0usize..11, j in 0usize..11, t in perm(4)) {
        let s4 = PermutationGroup::symmetric(4).unwrap();
        let classes = subgroup_classes(&s4).unwrap();
        let g = classes.representatives()[i].conjugate(&t).unwrap();
        let h = &classes.representatives()[j];
        let part = partition_of(&coset_action(&g, &s4, h).unwrap());
        prop_assert_eq!(part.weight(), left_cosets(&s4, h).unwrap().index());
        let brute = brute_partition(&g, &s4, h);
        prop_assert_eq!(part.parts(), brute.as_slice());
    }
}
