//! Polynomials in a catalytic variable `x` with power-series coefficients,
//! and their power-series roots.

use num_traits::Zero;

use super::{Coefficient, Series};
use crate::error::{Error, Result};

/// `K(x) = sum_i k_i(z) x^i`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelPolynomial<C> {
    coeffs: Vec<Series<C>>,
}

impl<C: Coefficient> KernelPolynomial<C> {
    pub fn new(coeffs: Vec<Series<C>>) -> Self {
        assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    /// `rows[i]` lists the `z`-coefficients of the polynomial multiplying `x^i`.
    pub fn from_int_rows(rows: &[&[i64]], order: usize) -> Self {
        Self { coeffs: rows.iter().map(|r| Series::from_ints(r, order)).collect() }
    }

    pub fn coeffs(&self) -> &[Series<C>] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn order(&self) -> usize {
        self.coeffs.iter().map(Series::order).min().unwrap()
    }

    /// `K(x, 0)` as a coefficient list in `x`, trailing zeros removed.
    pub fn at_z0(&self) -> Vec<C> {
        let mut p: Vec<C> = self.coeffs.iter().map(|s| s.coeff(0).clone()).collect();
        while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    /// `K(X)` by Horner's rule.
    pub fn eval(&self, x: &Series<C>) -> Series<C> {
        let mut acc = self.coeffs.last().unwrap().clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self { coeffs: vec![Series::zero(self.order())] };
        }
        let coeffs = self.coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&C::from_i64(i as i64 + 1)))
            .collect();
        Self { coeffs }
    }

    /// The polynomial in `u` obtained by substituting `x = a + b u`.
    pub fn substitute_affine(&self, a: &Series<C>, b: &Series<C>) -> Self {
        let order = self.order().min(a.order()).min(b.order());
        // Horner over polynomials in u.
        let mut acc: Vec<Series<C>> = vec![self.coeffs.last().unwrap().truncate(order)];
        for c in self.coeffs.iter().rev().skip(1) {
            let mut next = vec![Series::zero(order); acc.len() + 1];
            for (i, t) in acc.iter().enumerate() {
                next[i] = &next[i] + &(t * a);
                next[i + 1] = &next[i + 1] + &(t * b);
            }
            next[0] = &next[0] + c;
            acc = next;
        }
        Self { coeffs: acc }
    }

    /// Divides every coefficient by `z^k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        Ok(Self { coeffs: self.coeffs.iter().map(|c| c.shift_down(k)).collect::<Result<_>>()? })
    }

    /// The unique power-series root when `K(x, 0)` is linear.
    pub fn kernel_root(&self) -> Result<Series<C>> {
        let p0 = self.at_z0();
        if p0.len() != 2 {
            return Err(Error::NoSimpleRoot);
        }
        let x0 = -(p0[0].clone() / p0[1].clone());
        self.root_near(x0)
    }

    /// The power-series root with constant term `x0`, which must be a simple
    /// root of `K(x, 0)`. Newton iteration, doubling the precision each round.
    pub fn root_near(&self, x0: C) -> Result<Series<C>> {
        let order = self.order();
        let x0s = Series::constant(x0, order);
        if !self.eval(&x0s).coeff(0).is_zero() {
            return Err(Error::NoSimpleRoot);
        }
        let dk = self.derivative();
        if dk.eval(&x0s).coeff(0).is_zero() {
            return Err(Error::NoSimpleRoot);
        }
        let mut x = x0s;
        let mut exact = 1usize;
        while exact <= order {
            let step = self.eval(&x).checked_div(&dk.eval(&x))?;
            x = &x - &step;
            exact *= 2;
        }
        Ok(x)
    }

    /// Splits off the monic quadratic factor `x^2 - s1 x + s2` whose
    /// reduction at `z = 0` is `K(x, 0)` made monic. Requires `K(x, 0)` to
    /// have degree exactly 2. Returns `(s1, s2)`, the sum and product of the
    /// two roots that stay bounded as `z -> 0`.
    pub fn quadratic_factor(&self) -> Result<(Series<C>, Series<C>)> {
        let p0 = self.at_z0();
        if p0.len() != 3 {
            return Err(Error::NoSimpleRoot);
        }
        let order = self.order();
        let g0 = p0[2].clone();
        let f0: Vec<C> = p0.iter().map(|c| c.clone() / g0.clone()).collect();
        // By z-degree: k[n] is the x-polynomial multiplying z^n.
        let k: Vec<Vec<C>> =
            (0..=order).map(|n| self.coeffs.iter().map(|c| c.coeff(n).clone()).collect()).collect();
        let mut f: Vec<Vec<C>> = vec![f0.clone()];
        let mut g: Vec<Vec<C>> = vec![vec![g0.clone()]];
        for n in 1..=order {
            let mut rhs = k[n].clone();
            for i in 1..n {
                poly_sub_assign(&mut rhs, &poly_mul(&f[i], &g[n - i]));
            }
            let (q, r) = poly_divrem_monic(&rhs, &f0);
            f.push(r.into_iter().map(|c| c / g0.clone()).collect());
            g.push(q);
        }
        let coeff = |p: &Vec<C>, i: usize| p.get(i).cloned().unwrap_or_else(C::zero);
        let s1 = Series::from_coeffs(f.iter().map(|p| -coeff(p, 1)).collect());
        let s2 = Series::from_coeffs(f.iter().map(|p| coeff(p, 0)).collect());
        Ok((s1, s2))
    }
}

fn poly_mul<C: Coefficient>(a: &[C], b: &[C]) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

fn poly_sub_assign<C: Coefficient>(a: &mut Vec<C>, b: &[C]) {
    if a.len() < b.len() {
        a.resize(b.len(), C::zero());
    }
    for (i, y) in b.iter().enumerate() {
        a[i] = a[i].clone() - y.clone();
    }
}

/// Quotient and remainder by a monic divisor.
fn poly_divrem_monic<C: Coefficient>(a: &[C], d: &[C]) -> (Vec<C>, Vec<C>) {
    let dd = d.len() - 1;
    let mut r = a.to_vec();
    if r.len() <= dd {
        r.resize(dd, C::zero());
        return (Vec::new(), r);
    }
    let mut q = vec![C::zero(); r.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd].clone();
        if !c.is_zero() {
            for (j, dj) in d.iter().enumerate() {
                r[i + j] = r[i + j].clone() - c.clone() * dj.clone();
            }
        }
        q[i] = c;
    }
    r.truncate(dd);
    (q, r)
}

#[cfg(test)]
mod tests {
    use num_rational::BigRational;

    use super::*;
    use crate::series::TruncatedSeries;

    type K = KernelPolynomial<BigRational>;

    #[test]
    fn trivial_kernel() {
        let k = K::from_int_rows(&[&[-1], &[1]], 10);
        assert_eq!(k.kernel_root().unwrap(), TruncatedSeries::one(10));
    }

    #[test]
    fn catalan_kernel() {
        // x = 1 + z x^2 has the Catalan series as its root.
        let k = K::from_int_rows(&[&[1], &[-1], &[0, 1]], 12);
        let x = k.kernel_root().unwrap();
        let cat: Vec<i64> = vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012];
        assert_eq!(x, TruncatedSeries::from_ints(&cat, 12));
    }

    #[test]
    fn rejects_non_simple_start() {
        let k = K::from_int_rows(&[&[1], &[-2], &[1, 1]], 8);
        assert_eq!(k.kernel_root(), Err(Error::NoSimpleRoot));
        assert_eq!(k.root_near(BigRational::from_i64(1)), Err(Error::NoSimpleRoot));
    }

    #[test]
    fn quadratic_factor_of_product() {
        // (x^2 - (2+z) x + 1 - z)(1 + z x^2)
        let order = 15;
        let f = K::from_int_rows(&[&[1, -1], &[-2, -1], &[1]], order);
        let g = K::from_int_rows(&[&[1], &[0], &[0, 1]], order);
        let mut prod = vec![TruncatedSeries::zero(order); 5];
        for (i, a) in f.coeffs().iter().enumerate() {
            for (j, b) in g.coeffs().iter().enumerate() {
                prod[i + j] = &prod[i + j] + &(a * b);
            }
        }
        let (s1, s2) = K::new(prod).quadratic_factor().unwrap();
        assert_eq!(s1, TruncatedSeries::from_ints(&[2, 1], order));
        assert_eq!(s2, TruncatedSeries::from_ints(&[1, -1], order));
    }

    #[test]
    fn affine_substitution() {
        // K(x) = x^2 - 1 at x = 1 + z u gives 2 z u + z^2 u^2.
        let k = K::from_int_rows(&[&[-1], &[0], &[1]], 6);
        let u = k.substitute_affine(&TruncatedSeries::one(6), &TruncatedSeries::from_ints(&[0, 1], 6));
        assert_eq!(u.coeffs()[0], TruncatedSeries::zero(6));
        assert_eq!(u.coeffs()[1], TruncatedSeries::from_ints(&[0, 2], 6));
        assert_eq!(u.coeffs()[2], TruncatedSeries::from_ints(&[0, 0, 1], 6));
        assert_eq!(u.shift_down(1).unwrap().order(), 5);
    }
}
