//! Order-by-order solution of the catalytic functional equations.
//!
//! Each unknown `A(z, x)` is held as its sequence of `z`-coefficients, each a
//! polynomial in `x`. Every right-hand side only looks at lower `z`-degrees,
//! so the levels are produced one after another. Divided differences by
//! `1 - x` are done by synthetic division and must leave no remainder.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::gentree::ClassId;

/// A polynomial in the catalytic variable `x`, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct XPoly(pub Vec<BigInt>);

impl XPoly {
    pub fn constant(c: i64) -> Self {
        Self(vec![BigInt::from(c)])
    }

    pub fn at_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.iter().rposition(|c| !c.is_zero())
    }

    fn coeff(&self, i: usize) -> BigInt {
        self.0.get(i).cloned().unwrap_or_default()
    }

    fn add(&self, o: &XPoly) -> XPoly {
        let n = self.0.len().max(o.0.len());
        XPoly((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    fn sub(&self, o: &XPoly) -> XPoly {
        let n = self.0.len().max(o.0.len());
        XPoly((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    fn scale(&self, k: &BigInt) -> XPoly {
        XPoly(self.0.iter().map(|c| c * k).collect())
    }

    /// `x^k * self`.
    fn shift(&self, k: usize) -> XPoly {
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        XPoly(v)
    }

    /// `c * x^k`.
    fn monomial(c: BigInt, k: usize) -> XPoly {
        XPoly::constant(1).scale(&c).shift(k)
    }

    /// `x * d/dx self`.
    fn euler(&self) -> XPoly {
        XPoly(self.0.iter().enumerate().map(|(i, c)| c * i).collect())
    }

    /// `self / (1 - x)`, failing unless the division is exact. `level` only
    /// labels the error.
    fn div_one_minus_x(&self, level: usize) -> Result<XPoly> {
        let Some(d) = self.degree() else {
            return Ok(XPoly::default());
        };
        if !self.at_one().is_zero() {
            return Err(Error::InexactDivision(level));
        }
        let mut q = Vec::with_capacity(d);
        let mut acc = BigInt::zero();
        for c in &self.0[..d] {
            acc += c;
            q.push(acc.clone());
        }
        Ok(XPoly(q))
    }
}

/// `sum_n z^n P_n(x)`, stored level by level.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariateSeries {
    pub levels: Vec<XPoly>,
}

impl BivariateSeries {
    /// Specialises `x = 1`.
    pub fn at_one(&self) -> Vec<BigInt> {
        self.levels.iter().map(XPoly::at_one).collect()
    }

    fn last(&self) -> &XPoly {
        self.levels.last().expect("at least one level")
    }
}

fn one_level(p: XPoly) -> BivariateSeries {
    BivariateSeries { levels: vec![p] }
}

/// Solves the class's system through `z^order` and returns the counting
/// series it encodes.
pub fn iterate_catalytic_system(class: ClassId, order: usize) -> Result<TruncatedSeries> {
    let totals = match class {
        ClassId::C1176 | ClassId::C1253 | ClassId::C1016 => right_grown(class, order)?,
        ClassId::C663A | ClassId::C1420 => left_grown(class, order)?,
        _ => return Err(Error::NoCatalyticSystem(class)),
    };
    let counts = totals
        .into_iter()
        .enumerate()
        .map(|(i, c)| if c.is_negative() { Err(Error::NotCountingSeries(i)) } else { Ok(c.magnitude().clone()) })
        .collect::<Result<Vec<BigUint>>>()?;
    Ok(TruncatedSeries::from_counts(&counts))
}

/// Classes 1176, 1253 and 1016: `x` marks `h` for the `a` labels and the
/// single parameter for the others.
fn right_grown(class: ClassId, order: usize) -> Result<Vec<BigInt>> {
    let zero = || one_level(XPoly::default());
    let mut a = one_level(XPoly::constant(1));
    let (mut b, mut c, mut d, mut e) = (zero(), zero(), zero(), zero());
    for n in 0..order {
        let an = a.last().clone();
        let (bn, cn, dn, en) = (b.last().clone(), c.last().clone(), d.last().clone(), e.last().clone());
        let an1 = an.at_one();
        // (n,h)_a -> (n+1,i)_a, i in [h, n]
        let a_next = an.sub(&XPoly::monomial(an1.clone(), n + 1)).div_one_minus_x(n)?;
        // (n,h)_a -> (i)_b with multiplicity n-i, i in [h, n-1]
        let tail = XPoly::monomial(an1.clone(), n).sub(&an).div_one_minus_x(n)?.shift(1);
        let b_from_a = an.scale(&BigInt::from(n)).sub(&an.euler()).add(&tail).div_one_minus_x(n)?;
        // (n,h)_a -> (i) for i < h
        let below_a = XPoly::constant(1).scale(&an1).sub(&an).div_one_minus_x(n)?;
        let b_next = bn.add(&b_from_a);
        let (c_next, d_next, e_next) = match class {
            ClassId::C1176 => {
                let below_d = XPoly::constant(1).scale(&dn.at_one()).sub(&dn).div_one_minus_x(n)?;
                let below_e = XPoly::constant(1).scale(&en.at_one()).sub(&en).div_one_minus_x(n)?;
                (bn.clone(), dn.add(&cn), below_a.add(&below_d).add(&below_e))
            }
            ClassId::C1253 => (cn.add(&bn), dn.scale(&BigInt::from(2)).add(&cn), en.add(&below_a)),
            ClassId::C1016 => (bn.clone(), dn.add(&cn), below_a),
            _ => unreachable!(),
        };
        a.levels.push(a_next);
        b.levels.push(b_next);
        c.levels.push(c_next);
        d.levels.push(d_next);
        e.levels.push(e_next);
    }
    let (fa, fd, fe) = (a.at_one(), d.at_one(), e.at_one());
    Ok((0..=order).map(|n| &fa[n] + &fd[n] + &fe[n]).collect())
}

/// Classes 663A and 1420: `x` marks the length `p` of the leading run of 0's.
fn left_grown(class: ClassId, order: usize) -> Result<Vec<BigInt>> {
    let mut a = one_level(XPoly::constant(1));
    let mut b = one_level(XPoly::default());
    // x(P(1) - x P) / (1 - x): labels (k) for k in [1, p+1].
    let up_to = |p: &XPoly, n| XPoly::constant(1).scale(&p.at_one()).sub(&p.shift(1)).div_one_minus_x(n).map(|q| q.shift(1));
    // (x P(1) - P) / (1 - x): labels (l) for l in [1, p-1], off by -1 at p = 0.
    let below = |p: &XPoly, n| XPoly::monomial(p.at_one(), 1).sub(p).div_one_minus_x(n);
    for n in 0..order {
        let (an, bn) = (a.last().clone(), b.last().clone());
        let root_fix = if n == 0 { XPoly::constant(1) } else { XPoly::default() };
        let (a_next, b_next) = match class {
            ClassId::C663A => (
                up_to(&an, n)?.add(&bn.shift(1)),
                below(&an, n)?.add(&root_fix).add(&bn.shift(1)),
            ),
            ClassId::C1420 => (
                up_to(&an, n)?.add(&up_to(&bn, n)?),
                below(&an, n)?.add(&root_fix).add(&below(&bn, n)?).add(&bn.shift(1)),
            ),
            _ => unreachable!(),
        };
        a.levels.push(a_next);
        b.levels.push(b_next);
    }
    let fa = a.at_one();
    Ok(match class {
        ClassId::C1420 => fa.iter().zip(b.at_one()).map(|(x, y)| x + y).collect(),
        _ => fa,
    })
}
