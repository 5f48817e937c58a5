//! The quadratic field `Q(sqrt 5)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::Coefficient;

/// `a + b sqrt(5)` with rational `a`, `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSqrt5 {
    pub a: BigRational,
    pub b: BigRational,
}

impl QSqrt5 {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        Self { a, b: BigRational::zero() }
    }

    pub fn sqrt5() -> Self {
        Self { a: BigRational::zero(), b: BigRational::one() }
    }

    pub fn conjugate(&self) -> Self {
        Self { a: self.a.clone(), b: -self.b.clone() }
    }

    /// `a^2 - 5 b^2`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - BigRational::from_i64(5) * &self.b * &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

impl Zero for QSqrt5 {
    fn zero() -> Self {
        Self::rational(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QSqrt5 {
    fn one() -> Self {
        Self::rational(BigRational::one())
    }
}

impl Add for QSqrt5 {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Self { a: self.a + r.a, b: self.b + r.b }
    }
}

impl Sub for QSqrt5 {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Self { a: self.a - r.a, b: self.b - r.b }
    }
}

impl Mul for QSqrt5 {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        let five = BigRational::from_i64(5);
        Self { a: &self.a * &r.a + five * &self.b * &r.b, b: &self.a * &r.b + &self.b * &r.a }
    }
}

impl Div for QSqrt5 {
    type Output = Self;
    fn div(self, r: Self) -> Self {
        let n = r.norm();
        assert!(!n.is_zero(), "division by zero in Q(sqrt 5)");
        let p = self * r.conjugate();
        Self { a: p.a / n.clone(), b: p.b / n }
    }
}

impl Neg for QSqrt5 {
    type Output = Self;
    fn neg(self) -> Self {
        Self { a: -self.a, b: -self.b }
    }
}

impl fmt::Display for QSqrt5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}√5", self.b),
            _ => write!(f, "{}+{}√5", self.a, self.b),
        }
    }
}

impl Coefficient for QSqrt5 {
    fn from_i64(v: i64) -> Self {
        Self::rational(BigRational::from_i64(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn field_arithmetic() {
        let r5 = QSqrt5::sqrt5();
        assert_eq!(r5.clone() * r5.clone(), QSqrt5::from_i64(5));
        let phi = QSqrt5::new(q(1, 2), q(1, 2));
        // phi^2 = phi + 1
        assert_eq!(phi.clone() * phi.clone(), phi.clone() + QSqrt5::one());
        let x = QSqrt5::new(q(3, 1), q(-2, 7));
        assert_eq!((x.clone() / phi.clone()) * phi, x);
        assert_eq!(QSqrt5::new(q(1, 1), q(1, 1)).norm(), q(-4, 1));
    }
}
