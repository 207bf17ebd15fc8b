//! Factorization over the rationals: squarefree decomposition, modular
//! factorization at a good prime, linear Hensel lifting and subset
//! recombination (Zassenhaus).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{self, Fp};
use super::IntPoly;
use crate::error::{Error, Result};

/// `content · ∏ factorᵐ`, factors primitive irreducible with positive
/// leading coefficient, sorted by degree then coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    /// Multiplies everything back out.
    pub fn expand(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::constant(self.content.clone()), |acc, (f, m)| {
                &acc * &f.pow(*m)
            })
    }

    /// Degree of every irreducible factor, repeated by multiplicity, ascending.
    pub fn degree_multiset(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .factors
            .iter()
            .flat_map(|(f, m)| std::iter::repeat_n(f.deg() as usize, *m))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }

    /// Rational roots from the linear factors `a·x + b`, as `(−b, a)`.
    pub fn rational_roots(&self) -> Vec<(BigInt, BigInt)> {
        self.factors
            .iter()
            .filter(|(f, _)| f.deg() == 1)
            .map(|(f, _)| (-f.coeff(0), f.coeff(1)))
            .collect()
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.content.is_one() || self.factors.is_empty() {
            write!(f, "{}", self.content)?;
        }
        for (p, m) in &self.factors {
            if *m == 1 {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p})^{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn factor_order(a: &IntPoly, b: &IntPoly) -> std::cmp::Ordering {
    a.deg()
        .cmp(&b.deg())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// Complete factorization of a nonzero polynomial over the rationals.
pub fn factor_rational(f: &IntPoly) -> Result<Factorization> {
    if f.deg() < 1 {
        return Err(Error::DegreeTooSmall {
            min: 1,
            got: f.deg(),
        });
    }
    let content = f.content();
    let mut factors = Vec::new();
    for (a, m) in f.squarefree_decomposition() {
        for g in factor_squarefree(&a) {
            factors.push((g, m));
        }
    }
    factors.sort_by(|a, b| factor_order(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(Factorization { content, factors })
}

fn small_primes() -> impl Iterator<Item = u64> {
    (5u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

/// Irreducible factors of a primitive squarefree polynomial of degree ≥ 1.
pub fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let f = f.primitive_part();
    if f.deg() <= 1 {
        return vec![f];
    }
    let mut out = Vec::new();
    let mut f = f;
    if f.coeff(0).is_zero() {
        out.push(IntPoly::x());
        f = f.div_exact(&IntPoly::x()).expect("x divides f");
        if f.deg() <= 1 {
            if f.deg() == 1 {
                out.push(f);
            }
            out.sort_by(factor_order);
            return out;
        }
    }
    let disc = f.discriminant().expect("degree ≥ 2");
    let lc = f.lc();
    let p = small_primes()
        .find(|&p| {
            let pb = BigInt::from(p);
            !(&lc % &pb).is_zero() && !(&disc % &pb).is_zero()
        })
        .expect("some prime avoids lc and disc");
    let fp = modp::reduce(&f, p);
    let modular = modp::factor_squarefree(&fp, p);
    if modular.len() == 1 {
        out.push(f);
        out.sort_by(factor_order);
        return out;
    }
    let bound = coefficient_bound(&f);
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= &bound * 2 {
        modulus *= &pb;
        k += 1;
    }
    let lifted = hensel_lift_all(&f, &modular, p, k);
    out.extend(recombine(&f, &lifted, &modulus));
    out.sort_by(factor_order);
    out
}

/// `|lc| · 2^n · ‖f‖₂`, bounding `lc(f)/lc(g) · g` for every factor `g`.
fn coefficient_bound(f: &IntPoly) -> BigInt {
    let norm2_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm2 = num_integer::Roots::sqrt(&norm2_sq) + BigInt::one();
    let n = f.deg() as usize;
    f.lc().abs() * (BigInt::one() << n) * norm2
}

fn lift_fp(a: &Fp) -> IntPoly {
    IntPoly::new(a.iter().map(|&c| BigInt::from(c)).collect())
}

/// Reduces into `(−m/2, m/2]`.
fn sym_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m >> 1;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// Lifts `f ≡ g₀·h₀ (mod p)` with `g₀` monic to `f ≡ g·h (mod p^k)`.
fn hensel_lift(f: &IntPoly, g0: &Fp, h0: &Fp, p: u64, k: u32) -> (IntPoly, IntPoly) {
    let (one, s, t) = modp::ext_gcd(g0, h0, p);
    debug_assert_eq!(one, vec![1u64]);
    let pb = BigInt::from(p);
    let mut g = lift_fp(g0);
    let mut h = lift_fp(h0);
    let mut pj = pb.clone();
    for _ in 1..k {
        let diff = f - &(&g * &h);
        let e_int = IntPoly::new(
            diff.coeffs()
                .iter()
                .map(|c| {
                    debug_assert!((c % &pj).is_zero());
                    c / &pj
                })
                .collect(),
        );
        let e = modp::reduce(&e_int, p);
        if !modp::is_zero(&e) {
            let (q, sigma) = modp::div_rem(&modp::mul(&t, &e, p), g0, p);
            let tau = modp::add(&modp::mul(&s, &e, p), &modp::mul(&q, h0, p), p);
            g = &g + &lift_fp(&sigma).scale(&pj);
            h = &h + &lift_fp(&tau).scale(&pj);
        }
        pj *= &pb;
    }
    (g, h)
}

/// Monic lifts `u₁..u_r` with `f ≡ lc(f)·∏uᵢ (mod p^k)`.
fn hensel_lift_all(f: &IntPoly, modular: &[Fp], p: u64, k: u32) -> Vec<IntPoly> {
    let modulus = BigInt::from(p).pow(k);
    let lc_p = modp::reduce(&IntPoly::constant(f.lc()), p);
    let mut rest = f.clone();
    let mut out = Vec::with_capacity(modular.len());
    for i in 0..modular.len() - 1 {
        let h0 = modular[i + 1..]
            .iter()
            .fold(lc_p.clone(), |acc, m| modp::mul(&acc, m, p));
        let (g, h) = hensel_lift(&rest, &modular[i], &h0, p, k);
        out.push(sym_mod(&g, &modulus));
        rest = sym_mod(&h, &modulus);
    }
    let inv = mod_inverse(&f.lc(), &modulus);
    out.push(sym_mod(&rest.scale(&inv), &modulus));
    out
}

/// Subset recombination: tries products of `s` lifted factors for
/// increasing `s`, removing every true factor as soon as it is found.
fn recombine(f: &IntPoly, lifted: &[IntPoly], modulus: &BigInt) -> Vec<IntPoly> {
    let mut remaining: Vec<usize> = (0..lifted.len()).collect();
    let mut f = f.clone();
    let mut out = Vec::new();
    let mut s = 1;
    'outer: while 2 * s <= remaining.len() {
        let mut combo: Vec<usize> = (0..s).collect();
        loop {
            let lc = f.lc();
            let subset: Vec<usize> = combo.iter().map(|&c| remaining[c]).collect();
            let cand = subset
                .iter()
                .fold(IntPoly::constant(lc.clone()), |acc, &i| {
                    sym_mod(&(&acc * &lifted[i]), modulus)
                });
            let cand = cand.primitive_part();
            if let Some(q) = f.div_exact(&cand) {
                out.push(cand);
                f = q.primitive_part();
                remaining.retain(|i| !subset.contains(i));
                continue 'outer;
            }
            if !next_combination(&mut combo, remaining.len()) {
                break;
            }
        }
        s += 1;
    }
    if f.deg() >= 1 {
        out.push(f.primitive_part());
    }
    out
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
