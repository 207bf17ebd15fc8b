//! Sparse multivariate integer polynomials, the permutation action on them,
//! stabilizers, builtin primitive invariants, orbits, and invariant rescue.
//!
//! `σ.p` replaces every variable `xᵢ` by `x_{σ(i)}`; this is a left action:
//! `(στ).p = σ.(τ.p)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::catalog;
use crate::error::{Error, Result};
use crate::expr::{indexed_vars, parse_poly};
use crate::perm::{small_generating_set, Permutation, PermutationGroup};
use crate::subgrp::left_cosets;

/// Term cap for expanded invariant products.
pub const TERM_CAP: usize = 100_000;

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `x1..xn` with integer coefficients; zero terms are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    n_vars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(n_vars: usize) -> Self {
        Self {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(n_vars);
        p.add_term(vec![0; n_vars], c.into());
        p
    }

    /// The variable with 0-based index `i`.
    pub fn var(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        let mut p = Self::zero(n_vars);
        p.add_term(e, BigInt::one());
        p
    }

    /// Builds from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms(n_vars: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigInt)>) -> Self {
        let mut p = Self::zero(n_vars);
        for (e, c) in terms {
            assert_eq!(e.len(), n_vars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = Monomial(e);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// Parses `x1*x3 + x2*x4`, `x1^2`, etc. in `n_vars` variables.
    pub fn parse(s: &str, n_vars: usize) -> Result<Self> {
        parse_poly(s, n_vars, indexed_vars(n_vars))
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(m, c)| (m.exponents(), c))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Variables (0-based) that occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n_vars)
            .filter(|&i| self.terms.keys().any(|m| m.0[i] > 0))
            .collect()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.n_vars);
        }
        Self {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(self.n_vars, 1);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `σ.p`: substitutes `x_{σ(i)}` for `xᵢ`.
    pub fn act(&self, s: &Permutation) -> Self {
        assert_eq!(
            s.degree(),
            self.n_vars,
            "permutation degree vs variable count"
        );
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut e = vec![0u32; self.n_vars];
            for (i, &x) in m.0.iter().enumerate() {
                e[s.apply0(i)] = x;
            }
            terms.insert(Monomial(e), c.clone());
        }
        Self {
            n_vars: self.n_vars,
            terms,
        }
    }

    /// Whether `σ.p = p`, without building `σ.p`.
    pub fn is_fixed_by(&self, s: &Permutation) -> bool {
        assert_eq!(
            s.degree(),
            self.n_vars,
            "permutation degree vs variable count"
        );
        let mut e = Monomial(vec![0u32; self.n_vars]);
        self.terms.iter().all(|(m, c)| {
            for (i, &x) in m.0.iter().enumerate() {
                e.0[s.apply0(i)] = x;
            }
            self.terms.get(&e) == Some(c)
        })
    }

    /// Value at an integer point.
    pub fn eval_i64(&self, xs: &[i64]) -> BigInt {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.0.iter()
                    .zip(xs)
                    .fold(c.clone(), |acc, (&e, &x)| acc * BigInt::from(x).pow(e))
            })
            .sum()
    }
}

fn fmt_monomial(e: &[u32]) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, &x)| {
            if x == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{x}", i + 1)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Highest graded-lex term first, e.g. `x1^2 - 2*x1*x2 + x2^2`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = fmt_monomial(&m.0);
            let mag = c.abs();
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => mono,
                (false, false) => format!("{mag}*{mono}"),
            };
            match (k, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.0.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.0.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n_vars.max(rhs.n_vars));
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for v in self.terms.values_mut() {
            *v = -std::mem::take(v);
        }
        self
    }
}

/// `{σ ∈ L : σ.p = p}`.
pub fn stabilizer_in(l: &PermutationGroup, p: &MultiPoly) -> PermutationGroup {
    let elements: Vec<Permutation> = l
        .elements()
        .iter()
        .filter(|s| p.is_fixed_by(s))
        .cloned()
        .collect();
    let gens = small_generating_set(&elements);
    PermutationGroup::from_elements_unchecked(l.degree(), gens, elements)
}

/// A polynomial together with its ambient group and verified stabilizer.
#[derive(Clone, Debug)]
pub struct InvariantSpec {
    poly: MultiPoly,
    ambient: PermutationGroup,
    stabilizer: PermutationGroup,
    name: Option<String>,
}

impl InvariantSpec {
    /// Verifies that `Stab_L(poly) = claimed`.
    pub fn new(
        poly: MultiPoly,
        ambient: PermutationGroup,
        claimed: PermutationGroup,
        name: Option<String>,
    ) -> Result<Self> {
        if poly.n_vars() != ambient.degree() {
            return Err(Error::DegreeMismatch(poly.n_vars(), ambient.degree()));
        }
        let found = stabilizer_in(&ambient, &poly);
        if found != claimed {
            return Err(Error::StabilizerMismatch {
                expected: claimed.order(),
                found: found.order(),
            });
        }
        Ok(Self {
            poly,
            ambient,
            stabilizer: claimed,
            name,
        })
    }

    /// Takes the stabilizer as computed.
    pub fn from_poly(poly: MultiPoly, ambient: PermutationGroup) -> Result<Self> {
        if poly.n_vars() != ambient.degree() {
            return Err(Error::DegreeMismatch(poly.n_vars(), ambient.degree()));
        }
        let stabilizer = stabilizer_in(&ambient, &poly);
        Ok(Self {
            poly,
            ambient,
            stabilizer,
            name: None,
        })
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn ambient(&self) -> &PermutationGroup {
        &self.ambient
    }

    pub fn stabilizer(&self) -> &PermutationGroup {
        &self.stabilizer
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.ambient.degree()
    }

    /// Same polynomial viewed inside a different ambient group containing it.
    pub fn with_ambient(&self, ambient: &PermutationGroup) -> Result<Self> {
        Self::from_poly(self.poly.clone(), ambient.clone()).map(|mut s| {
            s.name = self.name.clone();
            s
        })
    }
}

/// Builtin invariant names.
pub const BUILTIN_NAMES: &[&str] = &[
    "vandermonde",
    "pair_sum",
    "pair_prod",
    "d4",
    "d5_m5",
    "cayley_m5",
    "linear_galois",
    "tchirnhaus",
];

/// Symmetric group on the given 1-based points, inside `S_n`.
fn symmetric_on(n: usize, points: &[usize]) -> Result<PermutationGroup> {
    let mut gens = Vec::new();
    if points.len() >= 2 {
        gens.push(Permutation::from_cycles(n, &[points.to_vec()])?);
        gens.push(Permutation::from_cycles(n, &[points[..2].to_vec()])?);
    }
    PermutationGroup::from_generators(n, &gens, crate::perm::DEFAULT_ORDER_CAP)
}

fn pentagon(n: usize, step: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(n);
    for i in 0..5 {
        let j = (i + step) % 5;
        p = &p + &(&MultiPoly::var(n, i) * &MultiPoly::var(n, j));
    }
    p
}

fn need_degree(name: &str, n: usize, want: usize) -> Result<()> {
    if n == want {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "{name} needs degree {want}, got {n}"
        )))
    }
}

/// A builtin invariant of degree `n`, self-checked.
///
/// Names: `vandermonde` (`A_n`), `pair_sum` / `pair_prod` (`S₂×S_{n−2}`),
/// `d4` (`D₄`), `d5_m5` (`D₅` inside `M₅`), `cayley_m5` (`M₅`),
/// `linear_galois` (trivial), and `tchirnhaus[:p(x1)]` (`S₁×S_{n−1}`).
pub fn builtin(name: &str, n: usize) -> Result<InvariantSpec> {
    if n == 0 {
        return Err(Error::Unsupported("degree 0".into()));
    }
    let sn = PermutationGroup::symmetric(n)?;
    let (base, arg) = match name.split_once(':') {
        Some((b, a)) => (b.trim(), Some(a.trim())),
        None => (name.trim(), None),
    };
    let (poly, ambient, stab) = match base {
        "vandermonde" => {
            if n < 2 {
                return Err(Error::Unsupported("vandermonde needs degree ≥ 2".into()));
            }
            let mut p = MultiPoly::constant(n, 1);
            for i in 0..n {
                for j in i + 1..n {
                    p = &p * &(&MultiPoly::var(n, i) - &MultiPoly::var(n, j));
                }
            }
            (p, sn, PermutationGroup::alternating(n)?)
        }
        "pair_sum" | "pair_prod" => {
            if n < 2 {
                return Err(Error::Unsupported(format!("{base} needs degree ≥ 2")));
            }
            let (a, b) = (MultiPoly::var(n, 0), MultiPoly::var(n, 1));
            let p = if base == "pair_sum" { &a + &b } else { &a * &b };
            let mut gens = vec![Permutation::from_cycles(n, &[vec![1, 2]])?];
            let rest: Vec<usize> = (3..=n).collect();
            gens.extend(symmetric_on(n, &rest)?.generators().iter().cloned());
            let stab = PermutationGroup::from_generators(n, &gens, crate::perm::DEFAULT_ORDER_CAP)?;
            (p, sn, stab)
        }
        "d4" => {
            need_degree(base, n, 4)?;
            let p = MultiPoly::parse("x1*x3 + x2*x4", 4)?;
            (
                p,
                sn,
                catalog::by_name("D4").expect("catalog").group.clone(),
            )
        }
        "d5_m5" => {
            need_degree(base, n, 5)?;
            let m5 = catalog::by_name("M5").expect("catalog").group.clone();
            let d5 = catalog::by_name("D5").expect("catalog").group.clone();
            (pentagon(5, 1), m5, d5)
        }
        "cayley_m5" => {
            need_degree(base, n, 5)?;
            let m5 = catalog::by_name("M5").expect("catalog").group.clone();
            // pentagon − pentagram changes sign under M₅ \ D₅, so square it
            let diff = &pentagon(5, 1) - &pentagon(5, 2);
            (diff.pow(2), sn, m5)
        }
        "linear_galois" => {
            let mut p = MultiPoly::zero(n);
            for i in 0..n {
                p = &p + &MultiPoly::var(n, i).scale(&BigInt::from(i + 1));
            }
            (p, sn, PermutationGroup::trivial(n))
        }
        "tchirnhaus" => {
            let text = arg.unwrap_or("x1");
            let p = parse_poly(text, n, |v| (v == "x1" || v == "x").then_some(0))?;
            if p.support().is_empty() {
                return Err(Error::Parse(format!(
                    "tchirnhaus polynomial {text:?} is constant"
                )));
            }
            let rest: Vec<usize> = (2..=n).collect();
            (p, sn, symmetric_on(n, &rest)?)
        }
        _ => return Err(Error::UnknownInvariant(name.to_string())),
    };
    InvariantSpec::new(poly, ambient, stab, Some(name.to_string()))
}

/// `(P₁, …, Pₑ)` with `P_j = σ_j.P` over the left cosets of the stabilizer.
pub fn orbit_polys(l: &PermutationGroup, inv: &InvariantSpec) -> Result<Vec<MultiPoly>> {
    let cosets = left_cosets(l, inv.stabilizer())?;
    Ok(cosets
        .representatives()
        .iter()
        .map(|s| inv.poly().act(s))
        .collect())
}

/// Orbit sum of a monomial whose symmetric-group stabilizer lies in `H`, which
/// makes `H` its exact stabilizer in every ambient group. Among the set
/// partitions whose Young subgroup lies in `H`, the one giving the smallest
/// degree (then fewest terms) is used; the largest block gets exponent 0.
pub fn orbit_sum_invariant(
    ambient: &PermutationGroup,
    h: &PermutationGroup,
) -> Result<InvariantSpec> {
    let n = ambient.degree();
    let mut best: Option<(u32, usize, Vec<u32>)> = None;
    for blocks in set_partitions(n) {
        let young_inside = blocks.iter().all(|b| {
            b.iter().enumerate().all(|(k, &i)| {
                b[k + 1..].iter().all(|&j| {
                    let t =
                        Permutation::from_cycles(n, &[vec![i + 1, j + 1]]).expect("transposition");
                    h.contains(&t)
                })
            })
        });
        if !young_inside {
            continue;
        }
        let mut sorted = blocks.clone();
        sorted.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        let mut e = vec![0u32; n];
        let mut deg = 0;
        for (k, b) in sorted.iter().enumerate() {
            for &i in b {
                e[i] = k as u32;
            }
            deg += k as u32 * b.len() as u32;
        }
        let young: usize = blocks
            .iter()
            .map(|b| (1..=b.len()).product::<usize>())
            .product();
        let terms = h.order() / young;
        let key = (deg, terms, e);
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    let (_, _, e) = best.expect("the discrete partition always qualifies");
    let mono = MultiPoly::from_terms(n, [(e, BigInt::one())]);
    let mut seen = std::collections::HashSet::new();
    let mut sum = MultiPoly::zero(n);
    for t in h.elements() {
        let m = mono.act(t);
        if seen.insert(m.clone()) {
            sum = &sum + &m;
        }
    }
    InvariantSpec::new(sum, ambient.clone(), h.clone(), Some("orbit_sum".into()))
}

/// All set partitions of `{0..n}` as lists of ascending blocks.
fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut assign = vec![0usize; n];
    fn rec(
        i: usize,
        n: usize,
        max: usize,
        assign: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if i == n {
            let mut blocks = vec![Vec::new(); max];
            for (p, &b) in assign.iter().enumerate() {
                blocks[b].push(p);
            }
            out.push(blocks);
            return;
        }
        for b in 0..=max {
            assign[i] = b;
            rec(i + 1, n, max.max(b + 1), assign, out);
        }
    }
    rec(0, n, 0, &mut assign, &mut out);
    out
}

/// Rescue parameters for `(n, attempt)`: distinct weights and an offset.
pub fn rescue_parameters(n: usize, attempt: u32) -> (Vec<i64>, i64) {
    let mut rng = ChaCha8Rng::seed_from_u64(((n as u64) << 32) | attempt as u64);
    let range = (3 * n as i64).max(6);
    let mut pool: Vec<i64> = (1..=range).collect();
    pool.shuffle(&mut rng);
    let t = pool[..n].to_vec();
    let u = rng.gen_range(-5..=5);
    (t, u)
}

/// `∏_{τ∈H} (u − τ.V)` for `V = Σ tᵢxᵢ`; `V` itself when `H` is trivial.
pub fn rescue_invariant_with(inv: &InvariantSpec, t: &[i64], u: i64) -> Result<InvariantSpec> {
    let n = inv.degree();
    if t.len() != n {
        return Err(Error::DegreeMismatch(n, t.len()));
    }
    let h = inv.stabilizer();
    let v = MultiPoly::from_terms(
        n,
        t.iter().enumerate().map(|(i, &ti)| {
            let mut e = vec![0; n];
            e[i] = 1;
            (e, BigInt::from(ti))
        }),
    );
    let poly = if h.order() == 1 {
        v
    } else {
        let uu = MultiPoly::constant(n, u);
        let mut acc = MultiPoly::constant(n, 1);
        for tau in h.elements() {
            acc = &acc * &(&uu - &v.act(tau));
            if acc.num_terms() > TERM_CAP {
                return Err(Error::SizeOverflow { cap: TERM_CAP });
            }
        }
        acc
    };
    InvariantSpec::new(
        poly,
        inv.ambient().clone(),
        h.clone(),
        Some("rescue".into()),
    )
}

/// A fresh `H`-invariant with the same stabilizer, parameters drawn from a
/// deterministic sequence indexed by `attempt ≥ 1`.
pub fn rescue_invariant(inv: &InvariantSpec, attempt: u32) -> Result<InvariantSpec> {
    let (t, u) = rescue_parameters(inv.degree(), attempt);
    rescue_invariant_with(inv, &t, u)
}

/// `P(q(x₁), …, q(xₙ))` for a univariate `q` (coefficients constant first),
/// accepted only if its stabilizer is still `H`. Unlike the product form of
/// [`rescue_invariant`] its size does not grow with `|H|`.
pub fn substituted_invariant(inv: &InvariantSpec, q: &[i64]) -> Result<InvariantSpec> {
    let n = inv.degree();
    let subs: Vec<MultiPoly> = (0..n)
        .map(|i| {
            MultiPoly::from_terms(
                n,
                q.iter().enumerate().map(|(k, &c)| {
                    let mut e = vec![0; n];
                    e[i] = k as u32;
                    (e, BigInt::from(c))
                }),
            )
        })
        .collect();
    let mut poly = MultiPoly::zero(n);
    for (exps, c) in inv.poly().terms() {
        let mut term = MultiPoly::constant(n, c.clone());
        for (i, &e) in exps.iter().enumerate() {
            if e > 0 {
                term = &term * &subs[i].pow(e);
            }
        }
        poly = &poly + &term;
        if poly.num_terms() > TERM_CAP {
            return Err(Error::SizeOverflow { cap: TERM_CAP });
        }
    }
    InvariantSpec::new(
        poly,
        inv.ambient().clone(),
        inv.stabilizer().clone(),
        Some("substituted".into()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, gens: &[&str]) -> PermutationGroup {
        PermutationGroup::from_cycle_strings(n, gens).unwrap()
    }

    fn p(n: usize, s: &str) -> MultiPoly {
        MultiPoly::parse(s, n).unwrap()
    }

    #[test]
    fn act_examples() {
        let v = builtin("vandermonde", 4).unwrap();
        let t = Permutation::parse_cycles(4, "(3,4)").unwrap();
        assert_eq!(v.poly().act(&t), -v.poly().clone());
        assert_eq!(v.poly().act(&Permutation::identity(4)), *v.poly());
        let t = Permutation::parse_cycles(3, "(1,3)").unwrap();
        assert_eq!(p(3, "x1 + x2").act(&t), p(3, "x3 + x2"));
    }

    #[test]
    fn stabilizer_examples() {
        let s4 = PermutationGroup::symmetric(4).unwrap();
        assert_eq!(
            stabilizer_in(&s4, &p(4, "x1*x3 + x2*x4")),
            grp(4, &["(1,2,3,4)", "(1,3)"])
        );
        assert_eq!(
            stabilizer_in(&s4, &p(4, "x1 + x2")),
            grp(4, &["(1,2)", "(3,4)"])
        );
        assert_eq!(stabilizer_in(&s4, &MultiPoly::constant(4, 1)), s4);
    }

    #[test]
    fn builtins_self_check() {
        for n in 2..=6 {
            for name in [
                "vandermonde",
                "pair_sum",
                "pair_prod",
                "linear_galois",
                "tchirnhaus",
            ] {
                builtin(name, n).unwrap_or_else(|e| panic!("{name} {n}: {e}"));
            }
        }
        assert_eq!(builtin("d4", 4).unwrap().stabilizer().order(), 8);
        assert_eq!(builtin("cayley_m5", 5).unwrap().stabilizer().order(), 20);
        assert_eq!(builtin("vandermonde", 4).unwrap().stabilizer().order(), 12);
        assert_eq!(
            builtin("tchirnhaus:x1^2+1", 3)
                .unwrap()
                .stabilizer()
                .order(),
            2
        );
        assert!(matches!(
            builtin("nonsense", 4),
            Err(Error::UnknownInvariant(_))
        ));
        assert!(builtin("d4", 5).is_err());
    }

    #[test]
    fn d5_in_m5() {
        let inv = builtin("d5_m5", 5).unwrap();
        assert_eq!(*inv.poly(), p(5, "x4*x5 + x3*x4 + x2*x3 + x1*x5 + x1*x2"));
        let orbit = orbit_polys(inv.ambient(), &inv).unwrap();
        assert_eq!(orbit.len(), 2);
        assert_eq!(orbit[0], *inv.poly());
        assert_eq!(orbit[1], p(5, "x2*x4 + x5*x2 + x3*x5 + x1*x4 + x1*x3"));
    }

    #[test]
    fn pair_sum_orbit() {
        let s4 = PermutationGroup::symmetric(4).unwrap();
        let inv = builtin("pair_sum", 4).unwrap();
        let mut orbit: Vec<String> = orbit_polys(&s4, &inv)
            .unwrap()
            .iter()
            .map(|q| q.to_string())
            .collect();
        orbit.sort();
        let mut want: Vec<String> = [
            "x1 + x3", "x2 + x4", "x1 + x2", "x2 + x3", "x3 + x4", "x1 + x4",
        ]
        .iter()
        .map(|s| p(4, s).to_string())
        .collect();
        want.sort();
        assert_eq!(orbit, want);
    }

    #[test]
    fn rescue_examples() {
        let triv = InvariantSpec::from_poly(
            p(3, "x1 + 2*x2 + 3*x3"),
            PermutationGroup::symmetric(3).unwrap(),
        )
        .unwrap();
        let r = rescue_invariant_with(&triv, &[4, 5, 6], 1).unwrap();
        assert_eq!(*r.poly(), p(3, "4*x1 + 5*x2 + 6*x3"));

        let s2 = PermutationGroup::symmetric(2).unwrap();
        let inv = InvariantSpec::from_poly(p(2, "x1 + x2"), s2.clone()).unwrap();
        let r = rescue_invariant_with(&inv, &[1, 2], 1).unwrap();
        assert_eq!(*r.poly(), &p(2, "1 - x1 - 2*x2") * &p(2, "1 - x2 - 2*x1"));
        assert_eq!(*r.stabilizer(), s2);

        let inv = builtin("pair_sum", 4).unwrap();
        let r = rescue_invariant(&inv, 1).unwrap();
        assert_eq!(r.poly().total_degree(), 4);
        let s4 = PermutationGroup::symmetric(4).unwrap();
        assert_eq!(stabilizer_in(&s4, r.poly()), grp(4, &["(1,2)", "(3,4)"]));
    }

    #[test]
    fn orbit_sums_have_exact_stabilizers() {
        let s4 = PermutationGroup::symmetric(4).unwrap();
        let c4 = grp(4, &["(1,2,3,4)"]);
        let inv = orbit_sum_invariant(&s4, &c4).unwrap();
        assert_eq!(*inv.stabilizer(), c4);
        let v4 = grp(4, &["(1,2)(3,4)", "(1,3)(2,4)"]);
        assert_eq!(*orbit_sum_invariant(&s4, &v4).unwrap().stabilizer(), v4);
        let s2s2 = grp(4, &["(1,2)", "(3,4)"]);
        let inv = orbit_sum_invariant(&s4, &s2s2).unwrap();
        assert_eq!(inv.poly().total_degree(), 2);
    }

    #[test]
    fn substitution_keeps_stabilizer() {
        let inv = builtin("pair_sum", 4).unwrap();
        let s = substituted_invariant(&inv, &[0, 1, 1]).unwrap();
        assert_eq!(*s.poly(), p(4, "x1 + x1^2 + x2 + x2^2"));
        assert_eq!(s.stabilizer(), inv.stabilizer());
        // q constant collapses everything
        assert!(substituted_invariant(&inv, &[3]).is_err());
    }

    #[test]
    fn set_partition_counts() {
        let bell: Vec<usize> = (1..=6).map(|n| set_partitions(n).len()).collect();
        assert_eq!(bell, vec![1, 2, 5, 15, 52, 203]);
    }
}
