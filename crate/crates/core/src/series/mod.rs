//! Exact truncated power series in `z`.
//!
//! A [`Series`] carries coefficients `c_0 ..= c_N` and its order `N` is part of
//! the value: every operation returns a series whose order is the largest one
//! at which the result is still exact, so precision loss (for example from
//! dividing out a power of `z`) is visible rather than silent.

mod catalytic;
mod closed;
mod kernel;
mod qsqrt5;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use catalytic::{iterate_catalytic_system, BivariateSeries, XPoly};
pub use closed::{
    closed_form_733_by_conjugates, expand_closed_form, kernel_for, minimal_polynomial, verify_minimal_polynomial,
    MinimalPolynomial,
};
pub use kernel::KernelPolynomial;
pub use qsqrt5::QSqrt5;

/// Field elements usable as series coefficients.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

impl Coefficient for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series<C> {
    coeffs: Vec<C>,
}

pub type TruncatedSeries = Series<BigRational>;

impl<C: Coefficient> Series<C> {
    /// Builds a series of order `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![C::zero(); order + 1] }
    }

    pub fn constant(c: C, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// The polynomial `sum p_i z^i`, truncated or padded to `order`.
    pub fn from_ints(p: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (i, &v) in p.iter().enumerate().take(order + 1) {
            s.coeffs[i] = C::from_i64(v);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot extend a series from order {} to {order}", self.order());
        Self { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &C) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    /// Multiplies by `z^k`; the order is unchanged and the top `k` terms drop.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut s = Self::zero(self.order());
        for i in k..=self.order() {
            s.coeffs[i] = self.coeffs[i - k].clone();
        }
        s
    }

    /// Divides by `z^k`, lowering the order by `k`. Fails if any of the first
    /// `k` coefficients is nonzero.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if let Some(d) = (0..k.min(self.coeffs.len())).find(|&i| !self.coeffs[i].is_zero()) {
            return Err(Error::ValuationShift { shift: k, degree: d });
        }
        if k > self.order() {
            return Err(Error::ValuationShift { shift: k, degree: self.order() });
        }
        Ok(Self { coeffs: self.coeffs[k..].to_vec() })
    }

    pub fn inverse(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NonInvertibleSeries);
        }
        let inv0 = C::one() / a0.clone();
        let mut b: Vec<C> = Vec::with_capacity(self.coeffs.len());
        b.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = C::zero();
            for i in 1..=n {
                acc = acc + self.coeffs[i].clone() * b[n - i].clone();
            }
            b.push(-(acc * inv0.clone()));
        }
        Ok(Self { coeffs: b })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// The square root with constant term `+1`.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::SqrtConstantTerm);
        }
        let two = C::from_i64(2);
        let mut s: Vec<C> = Vec::with_capacity(self.coeffs.len());
        s.push(C::one());
        for n in 1..=self.order() {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc = acc - s[i].clone() * s[n - i].clone();
            }
            s.push(acc / two.clone());
        }
        Ok(Self { coeffs: s })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.order());
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Treats `self` as a polynomial (exact when its degree is at most the
    /// order) and multiplies by `(1 - z)^k`.
    pub fn times_one_minus_z_pow(&self, k: u32) -> Self {
        let mut out = self.clone();
        for _ in 0..k {
            let mut next = out.clone();
            for i in 1..=out.order() {
                next.coeffs[i] = out.coeffs[i].clone() - out.coeffs[i - 1].clone();
            }
            out = next;
        }
        out
    }
}

impl TruncatedSeries {
    pub fn from_counts(counts: &[BigUint]) -> Self {
        Self::from_coeffs(
            counts.iter().map(|c| BigRational::from_integer(BigInt::from_biguint(Sign::Plus, c.clone()))).collect(),
        )
    }

    /// The coefficients as counts, failing at the first one that is not a
    /// nonnegative integer.
    pub fn to_counts(&self) -> Result<Vec<BigUint>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if !c.is_integer() {
                    return Err(Error::NotCountingSeries(i));
                }
                c.to_integer().to_biguint().ok_or(Error::NotCountingSeries(i))
            })
            .collect()
    }
}

fn zip_min<C: Coefficient>(a: &Series<C>, b: &Series<C>, f: impl Fn(&C, &C) -> C) -> Series<C> {
    let n = a.order().min(b.order());
    Series { coeffs: (0..=n).map(|i| f(&a.coeffs[i], &b.coeffs[i])).collect() }
}

impl<C: Coefficient> Add for &Series<C> {
    type Output = Series<C>;
    fn add(self, rhs: Self) -> Series<C> {
        zip_min(self, rhs, |a, b| a.clone() + b.clone())
    }
}

impl<C: Coefficient> Sub for &Series<C> {
    type Output = Series<C>;
    fn sub(self, rhs: Self) -> Series<C> {
        zip_min(self, rhs, |a, b| a.clone() - b.clone())
    }
}

impl<C: Coefficient> Mul for &Series<C> {
    type Output = Series<C>;
    fn mul(self, rhs: Self) -> Series<C> {
        let n = self.order().min(rhs.order());
        let mut out = vec![C::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Series { coeffs: out }
    }
}

impl<C: Coefficient> Neg for &Series<C> {
    type Output = Series<C>;
    fn neg(self) -> Series<C> {
        Series { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! by_value {
    ($tr:ident, $m:ident) => {
        impl<C: Coefficient> $tr for Series<C> {
            type Output = Series<C>;
            fn $m(self, rhs: Self) -> Series<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
by_value!(Add, add);
by_value!(Sub, sub);
by_value!(Mul, mul);

impl<C: Coefficient> fmt::Display for Series<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}
