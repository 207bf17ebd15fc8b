//! Certified complex root isolation: Aberth–Ehrlich in `f64` for seeds,
//! Aberth in fixed point at the working precision, then Weierstrass
//! inclusion disks.

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use super::ball::{eval_int_poly, CBall};
use crate::error::{Error, Result};
use crate::polyint::IntPoly;

/// The roots of `f` as disjoint disks, each containing exactly one root.
#[derive(Clone, Debug)]
pub struct RootVector {
    poly: IntPoly,
    roots: Vec<CBall>,
    precision_bits: u32,
}

impl RootVector {
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn roots(&self) -> &[CBall] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    /// Largest disk radius.
    pub fn error_radius(&self) -> f64 {
        self.roots.iter().map(CBall::rad_f64).fold(0.0, f64::max)
    }

    /// The numbering `new[i] = old[perm[i]]` (0-based).
    pub fn permuted(&self, perm: &[usize]) -> Result<RootVector> {
        let n = self.roots.len();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::InvalidPermutation(format!("{perm:?} on {n} roots")));
        }
        Ok(RootVector {
            poly: self.poly.clone(),
            roots: perm.iter().map(|&p| self.roots[p].clone()).collect(),
            precision_bits: self.precision_bits,
        })
    }

    /// Recomputes at `bits` of precision, keeping this numbering.
    pub fn refine_to(&self, bits: u32) -> Result<RootVector> {
        if bits == self.precision_bits {
            return Ok(self.clone());
        }
        let fresh = complex_roots(&self.poly, bits)?;
        let perm = self.matching(&fresh)?;
        fresh.permuted(&perm)
    }

    /// For each root here, the index of the root of `other` it matches.
    fn matching(&self, other: &RootVector) -> Result<Vec<usize>> {
        let mut perm = Vec::with_capacity(self.len());
        let mut used = vec![false; other.len()];
        for r in &self.roots {
            let r = r.to_prec(other.precision_bits);
            let hits: Vec<usize> = (0..other.len())
                .filter(|&j| r.overlaps(&other.roots[j]))
                .collect();
            match hits.as_slice() {
                [j] if !used[*j] => {
                    used[*j] = true;
                    perm.push(*j);
                }
                _ => return Err(Error::AmbiguousCluster),
            }
        }
        Ok(perm)
    }
}

fn f64_coeffs(f: &IntPoly) -> Option<Vec<f64>> {
    let lc = f.lc().to_f64()?;
    f.coeffs()
        .iter()
        .map(|c| c.to_f64().map(|x| x / lc).filter(|x| x.is_finite()))
        .collect()
}

type C = (f64, f64);

fn cmul(a: C, b: C) -> C {
    (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0)
}

fn cdiv(a: C, b: C) -> C {
    let d = b.0 * b.0 + b.1 * b.1;
    ((a.0 * b.0 + a.1 * b.1) / d, (a.1 * b.0 - a.0 * b.1) / d)
}

/// Starting points on a slightly rotated circle of radius the Fujiwara bound.
fn circle_seeds(monic: &[f64]) -> Vec<C> {
    let n = monic.len() - 1;
    let bound = (0..n)
        .map(|i| {
            let k = (n - i) as f64;
            let a = monic[i].abs();
            if i == 0 {
                (a / 2.0).powf(1.0 / k)
            } else {
                a.powf(1.0 / k)
            }
        })
        .fold(0.0, f64::max)
        * 2.0;
    let r = bound.max(1e-3);
    (0..n)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            (r * t.cos(), r * t.sin())
        })
        .collect()
}

/// Aberth–Ehrlich in double precision; `None` if it did not settle.
fn aberth_f64(monic: &[f64]) -> Option<Vec<C>> {
    let n = monic.len() - 1;
    let d: Vec<f64> = (1..=n).map(|i| monic[i] * i as f64).collect();
    let eval = |c: &[f64], z: C| {
        c.iter().rev().fold((0.0, 0.0), |acc, &a| {
            let m = cmul(acc, z);
            (m.0 + a, m.1)
        })
    };
    let mut z = circle_seeds(monic);
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let ratio = cdiv(eval(monic, z[i]), eval(&d, z[i]));
            let mut s = (0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let inv = cdiv((1.0, 0.0), (z[i].0 - z[j].0, z[i].1 - z[j].1));
                    s = (s.0 + inv.0, s.1 + inv.1);
                }
            }
            let den = {
                let m = cmul(ratio, s);
                (1.0 - m.0, -m.1)
            };
            let w = cdiv(ratio, den);
            if !(w.0.is_finite() && w.1.is_finite()) {
                return None;
            }
            z[i] = (z[i].0 - w.0, z[i].1 - w.1);
            let scale = (z[i].0.abs() + z[i].1.abs()).max(1.0);
            moved = moved.max((w.0.abs() + w.1.abs()) / scale);
        }
        if moved < 1e-14 {
            return Some(z);
        }
    }
    Some(z)
}

/// One fixed-point Aberth sweep; returns the largest correction in ulps.
fn aberth_step(f: &IntPoly, df: &IntPoly, z: &mut [CBall]) -> Result<BigUint> {
    let n = z.len();
    let prec = z[0].prec();
    let one = CBall::from_int(&BigInt::from(1), prec);
    let mut largest = BigUint::zero();
    for i in 0..n {
        let fz = eval_int_poly(f.coeffs(), &z[i]).center();
        if fz.re_raw().is_zero() && fz.im_raw().is_zero() {
            continue;
        }
        let dz = eval_int_poly(df.coeffs(), &z[i]).center();
        let ratio = fz.div(&dz)?.center();
        let mut s = CBall::zero(prec);
        for j in 0..n {
            if j != i {
                s = s.add(&z[i].sub(&z[j]).center().inv()?).center();
            }
        }
        let w = ratio.div(&one.sub(&ratio.mul(&s)).center())?.center();
        largest = largest.max(w.abs_upper());
        z[i] = z[i].sub(&w).center();
    }
    Ok(largest)
}

/// Weierstrass corrections `f(zᵢ) / (lc·∏_{j≠i}(zᵢ − zⱼ))` as disks.
fn inclusion_disks(f: &IntPoly, z: &[CBall]) -> Result<Vec<CBall>> {
    let n = z.len();
    let prec = z[0].prec();
    let lc = CBall::from_int(&f.lc(), prec);
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut den = lc.clone();
        for j in 0..n {
            if j != i {
                den = den.mul(&z[i].sub(&z[j]));
            }
        }
        let w = eval_int_poly(f.coeffs(), &z[i]).div(&den)?;
        let r = w.abs_upper() * BigUint::from(n as u64) + 1u32;
        out.push(z[i].center().with_radius_ulps(r));
    }
    for i in 0..n {
        for j in i + 1..n {
            if !out[i].disjoint(&out[j]) {
                return Err(Error::NoConvergence { bits: prec });
            }
        }
    }
    Ok(out)
}

/// All complex roots of a squarefree `f` as certified disjoint disks at
/// `precision_bits`, numbered by (real, imaginary) order.
pub fn complex_roots(f: &IntPoly, precision_bits: u32) -> Result<RootVector> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => {
            return Err(Error::DegreeTooSmall {
                min: 1,
                got: f.deg(),
            })
        }
    };
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let prec = precision_bits.max(32);
    let seeds: Vec<C> = match f64_coeffs(f) {
        Some(m) => aberth_f64(&m).unwrap_or_else(|| circle_seeds(&m)),
        None => {
            let b = f.cauchy_bound().min(1e300);
            (0..n)
                .map(|k| {
                    let t = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
                    (b * t.cos(), b * t.sin())
                })
                .collect()
        }
    };
    let mut z: Vec<CBall> = seeds
        .iter()
        .enumerate()
        .map(|(k, &(re, im))| {
            // break exact symmetry so the fixed-point sweep cannot stall
            let nudge = 1e-9 * (k as f64 + 1.0);
            CBall::from_f64(re + nudge, im + nudge * 0.5, prec).center()
        })
        .collect();
    if n == 1 {
        let root = CBall::from_int(&-f.coeff(0), prec).div(&CBall::from_int(&f.lc(), prec))?;
        return Ok(RootVector {
            poly: f.clone(),
            roots: vec![root],
            precision_bits: prec,
        });
    }
    let df = f.derivative();
    let target = BigUint::from(1u32) << 4;
    let mut settled = 0;
    for _ in 0..(200 + 4 * prec as usize) {
        let step = aberth_step(f, &df, &mut z)?;
        if step <= target {
            settled += 1;
            if settled >= 2 {
                break;
            }
        }
    }
    let mut roots = inclusion_disks(f, &z)?;
    roots.sort_by_key(CBall::order_key);
    Ok(RootVector {
        poly: f.clone(),
        roots,
        precision_bits: prec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn plus_minus_one() {
        let r = complex_roots(&p("x^2 - 1"), 128).unwrap();
        assert!((r.roots()[0].re_f64() + 1.0).abs() < 1e-30);
        assert!((r.roots()[1].re_f64() - 1.0).abs() < 1e-30);
        assert!(r.error_radius() < 1e-30);
    }

    #[test]
    fn imaginary_unit() {
        let r = complex_roots(&p("x^2 + 1"), 128).unwrap();
        assert!((r.roots()[0].im_f64() + 1.0).abs() < 1e-30);
        assert!((r.roots()[1].im_f64() - 1.0).abs() < 1e-30);
    }

    #[test]
    fn rejects_repeated_roots() {
        assert!(matches!(
            complex_roots(&p("(x-1)^2"), 128),
            Err(Error::NotSquarefree)
        ));
    }

    #[test]
    fn non_monic_and_clustered() {
        let r = complex_roots(&p("3*x^3 - 2"), 128).unwrap();
        assert_eq!(r.len(), 3);
        let c = complex_roots(&p("(x - 1)*(1000000*x - 1000001)"), 128).unwrap();
        assert!((c.roots()[1].re_f64() - 1.000001).abs() < 1e-20);
    }

    #[test]
    fn refine_keeps_numbering() {
        let r = complex_roots(&p("x^4 - x^3 - 3*x^2 + x + 1"), 128).unwrap();
        let q = r.permuted(&[2, 0, 3, 1]).unwrap();
        let q2 = q.refine_to(512).unwrap();
        for (a, b) in q.roots().iter().zip(q2.roots()) {
            assert!((a.re_f64() - b.re_f64()).abs() < 1e-30);
        }
        assert!(r.permuted(&[0, 0, 1, 2]).is_err());
    }
}
