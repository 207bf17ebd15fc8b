//! Polynomials over the prime field `F_p` (`p < 2³¹`), with distinct-degree
//! and Cantor–Zassenhaus equal-degree factorization.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::IntPoly;

/// Coefficients in `[0, p)`, constant first, no trailing zeros.
pub(crate) type Fp = Vec<u64>;

fn trim(mut a: Fp) -> Fp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn reduce(f: &IntPoly, p: u64) -> Fp {
    let pb = BigInt::from(p);
    trim(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = ((c % &pb) + &pb) % &pb;
                u64::try_from(r).expect("residue fits")
            })
            .collect(),
    )
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

pub(crate) fn add(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % p)
            .collect(),
    )
}

pub(crate) fn sub(a: &Fp, b: &Fp, p: u64) -> Fp {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| (a.get(i).unwrap_or(&0) + p - b.get(i).unwrap_or(&0)) % p)
            .collect(),
    )
}

pub(crate) fn mul(a: &Fp, b: &Fp, p: u64) -> Fp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &Fp, c: u64, p: u64) -> Fp {
    trim(a.iter().map(|&x| x * c % p).collect())
}

/// `(q, r)` with `a = q·b + r`, `deg r < deg b`.
pub(crate) fn div_rem(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp) {
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = a.clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv = inv_mod(*b.last().unwrap(), p);
    let db = b.len() - 1;
    let mut q = vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db] * inv % p;
        if c == 0 {
            continue;
        }
        for (i, &bi) in b.iter().enumerate() {
            r[k + i] = (r[k + i] + p - c * bi % p) % p;
        }
        q[k] = c;
    }
    (trim(q), trim(r))
}

pub(crate) fn rem(a: &Fp, b: &Fp, p: u64) -> Fp {
    div_rem(a, b, p).1
}

pub(crate) fn monic(a: &Fp, p: u64) -> Fp {
    match a.last() {
        Some(&l) => scale(a, inv_mod(l, p), p),
        None => Vec::new(),
    }
}

pub(crate) fn gcd(a: &Fp, b: &Fp, p: u64) -> Fp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `(g, s, t)` with `s·a + t·b = g` monic.
pub(crate) fn ext_gcd(a: &Fp, b: &Fp, p: u64) -> (Fp, Fp, Fp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = inv_mod(*r0.last().expect("nonzero gcd"), p);
    (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
}

/// `base^e mod m`.
pub(crate) fn pow_rem(base: &Fp, e: &BigUint, m: &Fp, p: u64) -> Fp {
    let mut result = vec![1u64];
    let b = rem(base, m, p);
    for i in (0..e.bits()).rev() {
        result = rem(&mul(&result, &result, p), m, p);
        if e.bit(i) {
            result = rem(&mul(&result, &b, p), m, p);
        }
    }
    rem(&result, m, p)
}

fn degree(a: &Fp) -> usize {
    a.len().saturating_sub(1)
}

/// Distinct-degree factorization of a monic squarefree `f`:
/// `[(g_d, d)]` with `g_d` the product of all degree-`d` irreducible factors.
pub(crate) fn distinct_degree(f: &Fp, p: u64) -> Vec<(Fp, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x: Fp = vec![0, 1];
    let mut h = x.clone();
    let pe = BigUint::from(p);
    let mut d = 0;
    while degree(&f) >= 2 * (d + 1) {
        d += 1;
        h = pow_rem(&h, &pe, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if degree(&g) > 0 {
            out.push((g.clone(), d));
            f = div_rem(&f, &g, p).0;
            h = rem(&h, &f, p);
        }
    }
    if degree(&f) > 0 {
        let d = degree(&f);
        out.push((f, d));
    }
    out
}

/// Splits a monic product of degree-`d` irreducibles (`p` odd).
pub(crate) fn equal_degree(f: &Fp, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<Fp> {
    if degree(f) == d {
        return vec![f.clone()];
    }
    let n = degree(f);
    let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
    loop {
        let a: Fp = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if degree(&a) == 0 {
            continue;
        }
        let b = sub(&pow_rem(&a, &exp, f, p), &vec![1u64], p);
        let g = gcd(&b, f, p);
        if degree(&g) > 0 && degree(&g) < n {
            let h = div_rem(f, &g, p).0;
            let mut out = equal_degree(&g, d, p, rng);
            out.extend(equal_degree(&monic(&h, p), d, p, rng));
            return out;
        }
    }
}

/// Monic irreducible factors of a squarefree `f` modulo an odd prime `p`,
/// sorted. Deterministic: the splitting sequence is seeded by `(p, deg f)`.
pub(crate) fn factor_squarefree(f: &Fp, p: u64) -> Vec<Fp> {
    let f = monic(f, p);
    let mut rng = ChaCha8Rng::seed_from_u64(p ^ ((f.len() as u64) << 40));
    let mut out = Vec::new();
    for (g, d) in distinct_degree(&f, p) {
        out.extend(equal_degree(&g, d, p, &mut rng));
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub(crate) fn is_zero(a: &Fp) -> bool {
    a.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ext_gcd_identity() {
        let p = 7;
        let a = vec![1, 0, 1]; // x^2 + 1
        let b = vec![6, 1]; // x - 1
        let (g, s, t) = ext_gcd(&a, &b, p);
        assert_eq!(g, vec![1]);
        assert_eq!(add(&mul(&s, &a, p), &mul(&t, &b, p), p), vec![1]);
    }

    #[test]
    fn factors_mod_p() {
        let f = IntPoly::from_i64(&[1, 1, -3, -1, 1]);
        for p in [5u64, 7, 11, 13, 17, 19, 23] {
            let fp = reduce(&f, p);
            if degree(&gcd(&fp, &reduce(&f.derivative(), p), p)) > 0 {
                continue;
            }
            let fs = factor_squarefree(&fp, p);
            let prod = fs.iter().fold(vec![1u64], |acc, g| mul(&acc, g, p));
            assert_eq!(prod, fp, "p = {p}");
            for g in &fs {
                // irreducible: distinct-degree finds a single factor of full degree
                assert_eq!(distinct_degree(g, p), vec![(g.clone(), degree(g))]);
            }
        }
    }

    #[test]
    fn splits_linear_factors() {
        // (x-1)(x-2)(x-3)(x-4) mod 11
        let p = 11;
        let f = [1u64, 2, 3, 4]
            .iter()
            .fold(vec![1u64], |acc, &r| mul(&acc, &vec![p - r, 1], p));
        let fs = factor_squarefree(&f, p);
        assert_eq!(fs, vec![vec![7, 1], vec![8, 1], vec![9, 1], vec![10, 1]]);
    }

    #[test]
    fn zero_check() {
        assert!(is_zero(&vec![]));
        assert!(!is_zero(&vec![1]));
    }
}
