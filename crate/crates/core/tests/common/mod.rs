//! Independent oracles shared by the integration tests. They use nothing
//! from the library beyond its data types.

#![allow(dead_code)]

use std::collections::BTreeSet;

use lagrange::polyint::IntPoly;
use lagrange::{Permutation, PermutationGroup};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

pub fn grp(n: usize, gens: &[&str]) -> PermutationGroup {
    PermutationGroup::from_cycle_strings(n, gens).unwrap()
}

pub fn poly(s: &str) -> IntPoly {
    s.parse().unwrap()
}

/// `P_L(G,H)` by brute force: left cosets as element sets, orbits found by
/// applying every element of `G`.
pub fn brute_partition(
    g: &PermutationGroup,
    l: &PermutationGroup,
    h: &PermutationGroup,
) -> Vec<usize> {
    let key = |p: &Permutation| p.images();
    let mut cosets: Vec<BTreeSet<Vec<usize>>> = Vec::new();
    for s in l.elements() {
        let c: BTreeSet<Vec<usize>> = h
            .elements()
            .iter()
            .map(|x| key(&s.compose(x).unwrap()))
            .collect();
        if !cosets.contains(&c) {
            cosets.push(c);
        }
    }
    let find = |c: &BTreeSet<Vec<usize>>| cosets.iter().position(|d| d == c).unwrap();
    let mut seen = vec![false; cosets.len()];
    let mut parts = Vec::new();
    for i in 0..cosets.len() {
        if seen[i] {
            continue;
        }
        let rep = Permutation::from_images(cosets[i].iter().next().unwrap()).unwrap();
        let mut orbit = BTreeSet::new();
        for x in g.elements() {
            let moved = x.compose(&rep).unwrap();
            let c: BTreeSet<Vec<usize>> = h
                .elements()
                .iter()
                .map(|y| key(&moved.compose(y).unwrap()))
                .collect();
            orbit.insert(find(&c));
        }
        for &j in &orbit {
            seen[j] = true;
        }
        parts.push(orbit.len());
    }
    parts.sort_unstable();
    parts
}

/// True iff `G` lies in some `L`-conjugate of `H`, by trying every conjugator.
pub fn inside_some_conjugate(
    g: &PermutationGroup,
    l: &PermutationGroup,
    h: &PermutationGroup,
) -> bool {
    l.elements().iter().any(|t| {
        let ht = h.conjugate(t).unwrap();
        g.elements().iter().all(|x| ht.contains(x))
    })
}

/// `|GH|` counted as a set of products.
pub fn product_set_size(g: &PermutationGroup, h: &PermutationGroup) -> usize {
    let mut s = BTreeSet::new();
    for x in g.elements() {
        for y in h.elements() {
            s.insert(x.compose(y).unwrap().images());
        }
    }
    s.len()
}

type C = (f64, f64);

fn cmul(a: C, b: C) -> C {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn cdiv(a: C, b: C) -> C {
    let d = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
}

/// Complex roots by Durand–Kerner in `f64`.
pub fn durand_kerner(p: &IntPoly) -> Vec<C> {
    let n = p.degree().unwrap();
    let lc = p.lc().to_f64().unwrap();
    let c: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|x| x.to_f64().unwrap() / lc)
        .collect();
    let eval = |z: C| {
        c.iter().rev().fold((0.0, 0.0), |acc, &a| {
            let m = cmul(acc, z);
            (m.0 + a, m.1)
        })
    };
    let mut z: Vec<C> = (0..n)
        .map(|k| {
            let w = cmul((0.4, 0.9), (1.0, 0.0));
            (0..k).fold((1.0, 0.0), |acc, _| cmul(acc, w))
        })
        .collect();
    for _ in 0..5000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = (1.0, 0.0);
            for j in 0..n {
                if j != i {
                    den = cmul(den, (z[i].0 - z[j].0, z[i].1 - z[j].1));
                }
            }
            let w = cdiv(eval(z[i]), den);
            z[i] = (z[i].0 - w.0, z[i].1 - w.1);
            delta = delta.max(w.0.abs() + w.1.abs());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

/// Irreducibility over ℚ by subset-divisor search: every proper factor is
/// `lc·∏(x − r)` over some subset of the roots, up to a rational scalar,
/// so round each such product and test exact division.
pub fn subset_divisor_irreducible(p: &IntPoly) -> bool {
    let n = match p.degree() {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    if n == 1 {
        return true;
    }
    if !p.content().is_zero() && p.content() != BigInt::from(1) && p.content() != BigInt::from(-1) {
        return false;
    }
    let roots = durand_kerner(p);
    let lc = p.lc().to_f64().unwrap();
    for mask in 1u32..(1 << n) - 1 {
        let k = mask.count_ones() as usize;
        if 2 * k > n {
            continue;
        }
        let mut q: Vec<C> = vec![(lc, 0.0)];
        for (i, r) in roots.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let mut next = vec![(0.0, 0.0); q.len() + 1];
                for (j, &a) in q.iter().enumerate() {
                    next[j + 1] = (next[j + 1].0 + a.0, next[j + 1].1 + a.1);
                    let m = cmul(a, *r);
                    next[j] = (next[j].0 - m.0, next[j].1 - m.1);
                }
                q = next;
            }
        }
        if q.iter().any(|c| c.1.abs() > 1e-6) {
            continue;
        }
        let cand = IntPoly::new(q.iter().map(|c| BigInt::from(c.0.round() as i64)).collect());
        if cand.degree() == Some(k) && p.div_exact(&cand.primitive_part()).is_some() {
            return false;
        }
    }
    true
}

/// Random integer polynomial of exact degree `n` with `|coeff| ≤ bound`.
pub fn random_poly(rng: &mut impl rand::Rng, n: usize, bound: i64) -> IntPoly {
    let mut c: Vec<i64> = (0..=n).map(|_| rng.gen_range(-bound..=bound)).collect();
    while c[n] == 0 {
        c[n] = rng.gen_range(-bound..=bound);
    }
    IntPoly::from_i64(&c)
}
