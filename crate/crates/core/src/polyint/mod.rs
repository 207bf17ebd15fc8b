//! Dense univariate polynomials over the integers: arithmetic, gcd,
//! discriminant, squarefree structure and factorization over the rationals.

mod factor;
pub(crate) mod modp;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::expr::parse_poly;

pub use factor::{factor_rational, factor_squarefree, Factorization};

/// Integer polynomial, coefficients constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `a·x + b`.
    pub fn linear(a: BigInt, b: BigInt) -> Self {
        Self::new(vec![b, a])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_one()
    }

    /// Gcd of the coefficients, carrying the sign of the leading coefficient.
    pub fn content(&self) -> BigInt {
        let g = self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if self.lc().is_negative() {
            -g
        } else {
            g
        }
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content();
        self.div_scalar_exact(&c)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides every coefficient by `c`, which must divide them all.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|x| {
                    debug_assert!((x % c).is_zero());
                    x / c
                })
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `self(p(x))`.
    pub fn compose(&self, p: &IntPoly) -> IntPoly {
        self.coeffs.iter().rev().fold(IntPoly::zero(), |acc, c| {
            &(&acc * p) + &IntPoly::constant(c.clone())
        })
    }

    /// `lc^{n−1} · f(y / lc)`: a monic integer polynomial whose roots are `lc·α`.
    pub fn monic_transform(&self) -> IntPoly {
        let n = self.coeffs.len() - 1;
        let lc = self.lc();
        let mut out = Vec::with_capacity(n + 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i == n {
                out.push(BigInt::one());
            } else {
                out.push(c * lc.pow((n - 1 - i) as u32));
            }
        }
        IntPoly::new(out)
    }

    /// Division with remainder by a divisor whose leading coefficient divides
    /// every intermediate leading term; `None` if that fails.
    pub fn div_rem_exact(&self, d: &IntPoly) -> Option<(IntPoly, IntPoly)> {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dn = d.coeffs.len() - 1;
        let dl = d.lc();
        let mut r = self.coeffs.clone();
        if r.len() <= dn {
            return Some((IntPoly::zero(), self.clone()));
        }
        let mut q = vec![BigInt::zero(); r.len() - dn];
        for k in (0..q.len()).rev() {
            let top = &r[k + dn];
            if top.is_zero() {
                continue;
            }
            let (c, rem) = top.div_rem(&dl);
            if !rem.is_zero() {
                return None;
            }
            for (i, di) in d.coeffs.iter().enumerate() {
                r[k + i] -= &c * di;
            }
            q[k] = c;
        }
        Some((IntPoly::new(q), IntPoly::new(r)))
    }

    /// Exact quotient `self / d` over the integers, or `None`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem_exact(d)?;
        r.is_zero().then_some(q)
    }

    /// Pseudo-remainder `lc(d)^{deg a − deg d + 1} · a mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dn = d.coeffs.len() - 1;
        let dl = d.lc();
        let mut r = self.clone();
        while !r.is_zero() && r.coeffs.len() > dn {
            let shift = r.coeffs.len() - 1 - dn;
            let rl = r.lc();
            let mut t = vec![BigInt::zero(); shift];
            t.extend(d.coeffs.iter().map(|c| c * &rl));
            r = &r.scale(&dl) - &IntPoly::new(t);
        }
        r
    }

    /// Gcd over the integers, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let cont = self.content().abs().gcd(&other.content().abs());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive_part() };
        }
        a.primitive_part().scale(&cont)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg() <= 0
    }

    /// Resultant via the Sylvester matrix (fraction-free elimination).
    pub fn resultant(&self, other: &IntPoly) -> BigInt {
        let (m, n) = match (self.degree(), other.degree()) {
            (Some(m), Some(n)) => (m, n),
            _ => return BigInt::zero(),
        };
        if m == 0 && n == 0 {
            return BigInt::one();
        }
        let size = m + n;
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(size);
        for i in 0..n {
            let mut row = vec![BigInt::zero(); size];
            for (j, c) in self.coeffs.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        for i in 0..m {
            let mut row = vec![BigInt::zero(); size];
            for (j, c) in other.coeffs.iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        bareiss_determinant(rows)
    }

    /// `(−1)^{n(n−1)/2} · Res(f, f′) / lc(f)`.
    pub fn discriminant(&self) -> Result<BigInt> {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => {
                return Err(Error::DegreeTooSmall {
                    min: 1,
                    got: self.deg(),
                })
            }
        };
        if n == 1 {
            return Ok(BigInt::one());
        }
        let r = self.resultant(&self.derivative());
        let d = r / self.lc();
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
    }

    /// `f / gcd(f, f′)`, primitive.
    pub fn squarefree_part(&self) -> Result<IntPoly> {
        if self.deg() < 1 {
            return Err(Error::DegreeTooSmall {
                min: 1,
                got: self.deg(),
            });
        }
        let g = self.gcd(&self.derivative()).primitive_part();
        Ok(self
            .primitive_part()
            .div_exact(&g)
            .expect("gcd divides f")
            .primitive_part())
    }

    /// Yun's algorithm on the primitive part: `[(a₁,1), (a₂,2), …]` with
    /// `pp(f) = ∏ aᵢ^i`, each `aᵢ` primitive squarefree (constant ones omitted).
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let f = self.primitive_part();
        if f.deg() < 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_exact(&a0).expect("gcd divides f").primitive_part();
        let c = fp.div_exact(&a0).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.deg() >= 1 {
            let a = b.gcd(&d);
            if a.deg() >= 1 {
                out.push((a.clone(), i));
            }
            let nb = b.div_exact(&a).expect("a divides b");
            let c = d.div_exact(&a).expect("a divides d");
            d = &c - &nb.derivative();
            b = nb;
            i += 1;
        }
        out
    }

    /// Real root bound: `1 + max |aᵢ/aₙ|`.
    pub fn cauchy_bound(&self) -> f64 {
        let lc = self.lc().abs().to_f64().unwrap_or(f64::MAX);
        let m = self.coeffs[..self.coeffs.len() - 1]
            .iter()
            .map(|c| c.abs().to_f64().unwrap_or(f64::MAX))
            .fold(0.0, f64::max);
        1.0 + m / lc
    }

    /// Coefficient list JSON, constant first; big values as strings.
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| match c.to_i64() {
                    Some(v) => serde_json::Value::from(v),
                    None => serde_json::Value::from(c.to_string()),
                })
                .collect(),
        )
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("coefficient list must be a JSON array".into()))?;
        let coeffs = arr
            .iter()
            .map(|c| match c {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| Error::Parse(format!("non-integer coefficient {n}"))),
                serde_json::Value::String(s) => s
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {s:?}"))),
                other => Err(Error::Parse(format!("bad coefficient {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// True iff `a = b²` for some integer `b`.
pub fn is_perfect_square(a: &BigInt) -> bool {
    if a.is_negative() {
        return false;
    }
    let r = a.sqrt();
    &r * &r == *a
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl IntPoly {
    pub fn pow(&self, e: usize) -> IntPoly {
        (0..e).fold(IntPoly::one(), |acc, _| &acc * self)
    }
}

/// `x^4 - x^3 - 3*x^2 + x + 1`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let body = match (mono.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => mono,
                (false, false) => format!("{mag}*{mono}"),
            };
            match (first, c.is_negative()) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    /// Accepts `x^4 - x^3 - 3*x^2 + x + 1` or a JSON list `[1,1,-3,-1,1]`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('[') {
            let v: serde_json::Value = serde_json::from_str(t)?;
            return Self::from_json_value(&v);
        }
        let mp = parse_poly(t, 1, |v| (v == "x").then_some(0))?;
        Ok(Self::from_univariate(&mp))
    }
}

impl IntPoly {
    /// Converts a polynomial in a single variable.
    pub fn from_univariate(p: &crate::invariants::MultiPoly) -> IntPoly {
        assert_eq!(p.n_vars(), 1, "univariate expected");
        let deg = p.total_degree() as usize;
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        for (e, c) in p.terms() {
            coeffs[e[0] as usize] += c;
        }
        IntPoly::new(coeffs)
    }
}
