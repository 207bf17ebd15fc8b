//! Complex disks with fixed-point centers: a value `(re + i·im)·2^-prec`
//! together with a radius `rad·2^-prec` rounded outward.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct CBall {
    re: BigInt,
    im: BigInt,
    rad: BigUint,
    prec: u32,
}

fn mag(a: &BigInt) -> BigUint {
    a.magnitude().clone()
}

/// `⌈a / 2^k⌉` for nonnegative `a`.
fn shr_ceil(a: &BigUint, k: u32) -> BigUint {
    let q: BigUint = a >> k;
    if &(&q << k) == a {
        q
    } else {
        q + 1u32
    }
}

impl CBall {
    pub fn zero(prec: u32) -> Self {
        Self {
            re: BigInt::zero(),
            im: BigInt::zero(),
            rad: BigUint::zero(),
            prec,
        }
    }

    pub fn from_int(k: &BigInt, prec: u32) -> Self {
        Self {
            re: k << prec,
            im: BigInt::zero(),
            rad: BigUint::zero(),
            prec,
        }
    }

    /// Nearest fixed-point value to `re + i·im`, radius one ulp.
    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        let conv = |x: f64| -> BigInt {
            let (m, e, s) = num_traits::float::FloatCore::integer_decode(x);
            let m = BigInt::from(m) * s;
            let shift = e as i64 + prec as i64;
            if shift >= 0 {
                m << shift as u32
            } else {
                m >> (-shift) as u32
            }
        };
        Self {
            re: conv(re),
            im: conv(im),
            rad: BigUint::from(1u32),
            prec,
        }
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub(crate) fn re_raw(&self) -> &BigInt {
        &self.re
    }

    pub(crate) fn im_raw(&self) -> &BigInt {
        &self.im
    }

    /// The center as an exact ball.
    pub fn center(&self) -> Self {
        Self {
            rad: BigUint::zero(),
            ..self.clone()
        }
    }

    pub fn with_radius_ulps(mut self, rad: BigUint) -> Self {
        self.rad = rad;
        self
    }

    pub fn re_f64(&self) -> f64 {
        scaled_f64(&self.re, self.prec)
    }

    pub fn im_f64(&self) -> f64 {
        scaled_f64(&self.im, self.prec)
    }

    pub fn rad_f64(&self) -> f64 {
        scaled_f64(&BigInt::from(self.rad.clone()), self.prec)
    }

    /// Moves to another precision; the radius absorbs rounding.
    pub fn to_prec(&self, prec: u32) -> Self {
        if prec >= self.prec {
            let k = prec - self.prec;
            Self {
                re: &self.re << k,
                im: &self.im << k,
                rad: &self.rad << k,
                prec,
            }
        } else {
            let k = self.prec - prec;
            Self {
                re: &self.re >> k,
                im: &self.im >> k,
                rad: shr_ceil(&self.rad, k) + 2u32,
                prec,
            }
        }
    }

    /// Upper bound on `|z|` over the disk, in ulps.
    pub(crate) fn abs_upper(&self) -> BigUint {
        mag(&self.re) + mag(&self.im) + &self.rad
    }

    /// Lower bound on `|z|` over the disk, in ulps.
    pub(crate) fn abs_lower(&self) -> BigUint {
        let m2 = mag(&self.re).pow(2) + mag(&self.im).pow(2);
        let m = m2.sqrt();
        if m > self.rad {
            m - &self.rad
        } else {
            BigUint::zero()
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.abs_lower().is_zero()
    }

    /// Whether the two disks are certainly disjoint.
    pub fn disjoint(&self, other: &Self) -> bool {
        debug_assert_eq!(self.prec, other.prec);
        (self - &other.center()).abs_lower() > other.rad
    }

    pub fn overlaps(&self, other: &Self) -> bool {
        !self.disjoint(other)
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        Self {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
            rad: &self.rad + &o.rad,
            prec: self.prec,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        Self {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
            rad: &self.rad + &o.rad,
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            re: -&self.re,
            im: -&self.im,
            rad: self.rad.clone(),
            prec: self.prec,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.prec, o.prec);
        let p = self.prec;
        let re = (&self.re * &o.re - &self.im * &o.im) >> p;
        let im = (&self.re * &o.im + &self.im * &o.re) >> p;
        let mut rad = BigUint::from(2u32);
        if !self.rad.is_zero() || !o.rad.is_zero() {
            let a = mag(&self.re) + mag(&self.im);
            let b = mag(&o.re) + mag(&o.im);
            let err = a * &o.rad + b * &self.rad + &self.rad * &o.rad;
            rad += shr_ceil(&err, p);
        }
        Self {
            re,
            im,
            rad,
            prec: p,
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        Self {
            re: &self.re * k,
            im: &self.im * k,
            rad: &self.rad * mag(k),
            prec: self.prec,
        }
    }

    pub fn sqr(&self) -> Self {
        self.mul(self)
    }

    /// `1/z`; fails when the disk touches zero.
    pub fn inv(&self) -> Result<Self> {
        let p = self.prec;
        let m2 = mag(&self.re).pow(2) + mag(&self.im).pow(2);
        let m = m2.sqrt();
        if m <= self.rad || m2.is_zero() {
            return Err(Error::NoConvergence { bits: p });
        }
        let m2i = BigInt::from_biguint(Sign::Plus, m2);
        let re = (&self.re << (2 * p)) / &m2i;
        let im = -((&self.im << (2 * p)) / &m2i);
        let mut rad = BigUint::from(2u32);
        if !self.rad.is_zero() {
            let den = &m * (&m - &self.rad);
            let num = &self.rad << (2 * p);
            rad += (&num + &den - 1u32) / den;
        }
        Ok(Self {
            re,
            im,
            rad,
            prec: p,
        })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    /// The unique integer in the disk when the disk meets the real axis, has
    /// radius below 1/2 and contains an integer.
    ///
    /// `Ok(None)` means the disk is too wide to decide; an error means it is
    /// certainly not an integer.
    pub fn integer_inside(&self) -> Result<Option<BigInt>> {
        let p = self.prec;
        let half = BigUint::from(1u32) << (p - 1);
        if self.rad >= half {
            return Ok(None);
        }
        if mag(&self.im) > self.rad {
            return Err(Error::CoefficientsNotIntegral);
        }
        let k = (&self.re + BigInt::from_biguint(Sign::Plus, half.clone())) >> p;
        let dist = (&self.re - (&k << p)).abs();
        if mag(&dist) <= self.rad {
            Ok(Some(k))
        } else {
            Err(Error::CoefficientsNotIntegral)
        }
    }

    /// Sort key for the default numbering: real part truncated to half
    /// precision (so conjugates tie), then imaginary part.
    pub(crate) fn order_key(&self) -> (BigInt, BigInt) {
        (&self.re >> (self.prec / 2), self.im.clone())
    }
}

fn scaled_f64(a: &BigInt, prec: u32) -> f64 {
    let shift = a.bits().saturating_sub(60) as u32;
    let m = (a >> shift).to_f64().unwrap_or(f64::NAN);
    m * 2f64.powi(shift as i32 - prec as i32)
}

impl std::ops::Sub<&CBall> for &CBall {
    type Output = CBall;
    fn sub(self, o: &CBall) -> CBall {
        CBall::sub(self, o)
    }
}

impl fmt::Display for CBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.re_f64(), self.im_f64());
        if im >= 0.0 {
            write!(f, "{re:.12}+{im:.12}i")
        } else {
            write!(f, "{re:.12}{im:.12}i")
        }
    }
}

impl fmt::Debug for CBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} ±{:.3e}", self.rad_f64())
    }
}

/// Horner evaluation of an integer polynomial at a disk.
pub fn eval_int_poly(coeffs: &[BigInt], z: &CBall) -> CBall {
    let mut acc = CBall::zero(z.prec());
    for c in coeffs.iter().rev() {
        acc = acc.mul(z).add(&CBall::from_int(c, z.prec()));
    }
    acc
}
