//! Closed-form generating functions of the seven algebraic classes and their
//! minimal polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Coefficient, KernelPolynomial, QSqrt5, Series, TruncatedSeries};
use crate::error::{Error, Result};
use crate::gentree::{count_class, ClassId};

/// `(P + sign Q sqrt(R)) / D` with integer polynomials in `z`.
struct RadicalForm {
    p: &'static [i64],
    q: &'static [i64],
    sign: i64,
    r: &'static [i64],
    d: &'static [i64],
}

fn radical_form(class: ClassId) -> Option<RadicalForm> {
    match class {
        ClassId::C1176 => Some(RadicalForm {
            p: &[2, 1, -10, 4],
            q: &[2, -3],
            sign: -1,
            r: &[1, -4, -4],
            d: &[0, 8, -16, 8],
        }),
        ClassId::C1253 => Some(RadicalForm {
            p: &[2, -15, 32, -16],
            q: &[0, 1, 0, -4],
            sign: 1,
            r: &[1, -4],
            d: &[2, -16, 42, -44, 16],
        }),
        ClassId::C1016 => Some(RadicalForm {
            p: &[3, -20, 36, -16],
            q: &[1, -8, 12, -2],
            sign: -1,
            r: &[1, -4],
            d: &[2, -12, 18, -8],
        }),
        _ => None,
    }
}

impl RadicalForm {
    fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        let v = self.d.iter().position(|&c| c != 0).expect("nonzero denominator");
        let n = order + v;
        let s = |p: &[i64]| TruncatedSeries::from_ints(p, n);
        let root = s(self.r).sqrt()?;
        let q = s(self.q).scale(&BigRational::from_i64(self.sign));
        let num = &s(self.p) + &(&q * &root);
        num.shift_down(v)?.checked_div(&s(self.d).shift_down(v)?)
    }

    /// `D^2 F^2 - 2 P D F + (P^2 - Q^2 R)`, with any common power of `z` removed.
    fn annihilator(&self) -> MinimalPolynomial {
        let p = ipoly(self.p);
        let d = ipoly(self.d);
        let c0 = poly_sub(&poly_mul(&p, &p), &poly_mul(&poly_mul(&ipoly(self.q), &ipoly(self.q)), &ipoly(self.r)));
        let c1 = poly_scale(&poly_mul(&p, &d), -2);
        let c2 = poly_mul(&d, &d);
        MinimalPolynomial::new(vec![c0, c1, c2], true)
    }
}

fn ipoly(p: &[i64]) -> Vec<BigInt> {
    p.iter().map(|&v| BigInt::from(v)).collect()
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

fn poly_scale(a: &[BigInt], k: i64) -> Vec<BigInt> {
    a.iter().map(|x| x * k).collect()
}

/// The kernel whose power-series root(s) enter the class's closed form.
pub fn kernel_for(class: ClassId, order: usize) -> Result<KernelPolynomial<BigRational>> {
    let rows: &[&[i64]] = match class {
        ClassId::C663A => &[&[1], &[-1, -1, 1], &[0, 2], &[0, 0, -1]],
        ClassId::C1420 => &[&[1, 1], &[-1, -1], &[0, 2], &[0, 0, -1]],
        ClassId::C1833A => &[&[1], &[-2, -2], &[1, 3], &[0, -2, -1], &[0, 0, 1]],
        ClassId::C733 => &[&[1], &[-2, -1], &[1, 3, -1], &[0, -2, -1], &[0, 0, 1]],
        _ => return Err(Error::NoClosedForm(class)),
    };
    Ok(KernelPolynomial::from_int_rows(rows, order))
}

/// Coefficients `c_0 ..= c_order` of the class's closed-form generating
/// function, checked to be counts.
pub fn expand_closed_form(class: ClassId, order: usize) -> Result<TruncatedSeries> {
    if let Some(form) = radical_form(class) {
        return checked_counts(form.expand(order)?);
    }
    let n = order + 1;
    let s = |p: &[i64]| TruncatedSeries::from_ints(p, n);
    let z = s(&[0, 1]);
    let one = s(&[1]);
    let out = match class {
        ClassId::C663A => {
            // (X - 1)(1 - zX + z^2 X) / (z X)
            let x = kernel_for(class, n)?.kernel_root()?;
            let num = &(&x - &one) * &(&(&one - &(&z * &x)) + &(&s(&[0, 0, 1]) * &x));
            num.shift_down(1)?.checked_div(&x.truncate(order))?
        }
        ClassId::C1420 => {
            // ((1 + z)(X - 1) - z(1 - z) X^2) / (z (1 + z) X)
            let x = kernel_for(class, n)?.kernel_root()?;
            let num = &(&s(&[1, 1]) * &(&x - &one)) - &(&s(&[0, 1, -1]) * &(&x * &x));
            num.shift_down(1)?.checked_div(&(&s(&[1, 1]) * &x).truncate(order))?
        }
        ClassId::C1833A => {
            // (s2 - s1 + 1)(z s2 - 1) / (z s2 (z s2 - z s1 + z + 1))
            let (s1, s2) = kernel_for(class, n)?.quadratic_factor()?;
            let num = &(&(&s2 - &s1) + &one) * &(&(&z * &s2) - &one);
            let den = &s2 * &(&(&(&z * &s2) - &(&z * &s1)) + &s(&[1, 1]));
            num.shift_down(1)?.checked_div(&den.truncate(order))?
        }
        ClassId::C733 => {
            let (s1, s2) = kernel_for(class, order)?.quadratic_factor()?;
            b10_733(&s1, &s2, order)?
        }
        _ => return Err(Error::NoClosedForm(class)),
    };
    checked_counts(out)
}

/// `(1 - z s1) / (1 - z - z s1 + z^2 s2)` from the sum and product of the two
/// power-series kernel roots.
fn b10_733<C: Coefficient>(s1: &Series<C>, s2: &Series<C>, order: usize) -> Result<Series<C>> {
    let z = Series::from_ints(&[0, 1], order);
    let z2 = Series::from_ints(&[0, 0, 1], order);
    let zs1 = &z * s1;
    let num = &Series::one(order) - &zs1;
    let den = &(&Series::from_ints(&[1, -1], order) - &zs1) + &(&z2 * s2);
    num.checked_div(&den)
}

/// Class 733 through its two power-series kernel roots taken individually.
/// They have coefficients in `Q(sqrt 5)`; the result must come out rational.
pub fn closed_form_733_by_conjugates(order: usize) -> Result<TruncatedSeries> {
    let n = order + 2;
    let k = kernel_for(ClassId::C733, n)?;
    let lift = KernelPolynomial::new(
        k.coeffs().iter().map(|c| Series::from_coeffs(c.coeffs().iter().cloned().map(QSqrt5::rational).collect())).collect(),
    );
    // Near z = 0 both roots are 1 + O(z); put x = 1 + z u and clear z^2.
    let reduced = lift.substitute_affine(&Series::one(n), &Series::from_ints(&[0, 1], n)).shift_down(2)?;
    let half = BigRational::new(1.into(), 2.into());
    let phi = QSqrt5::new(half.clone(), half.clone());
    let roots = [phi.clone(), phi.conjugate()]
        .into_iter()
        .map(|u0| {
            let u = reduced.root_near(u0)?;
            Ok(&Series::one(order) + &u.pad_shift_up(order))
        })
        .collect::<Result<Vec<Series<QSqrt5>>>>()?;
    let s1 = &roots[0] + &roots[1];
    let s2 = &roots[0] * &roots[1];
    let b = b10_733(&s1, &s2, order)?;
    let rational = b
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| if c.is_rational() { Ok(c.a.clone()) } else { Err(Error::NotCountingSeries(i)) })
        .collect::<Result<Vec<_>>>()?;
    checked_counts(TruncatedSeries::from_coeffs(rational))
}

impl<C: Coefficient> Series<C> {
    /// `z * self`, with the order raised by one so no term is lost.
    fn pad_shift_up(&self, order: usize) -> Self {
        let mut c = vec![C::zero()];
        c.extend(self.coeffs().iter().cloned());
        c.resize(order + 1, C::zero());
        Series::from_coeffs(c)
    }
}

fn checked_counts(s: TruncatedSeries) -> Result<TruncatedSeries> {
    s.to_counts()?;
    Ok(s)
}

/// `sum_i c_i(z) A^i`, an annihilating polynomial of a generating function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalPolynomial {
    coeffs: Vec<Vec<BigInt>>,
    /// Obtained here by clearing the radical from a closed form, rather than
    /// taken as given.
    pub derived: bool,
}

impl MinimalPolynomial {
    /// Strips any power of `z` common to all coefficients.
    pub fn new(mut coeffs: Vec<Vec<BigInt>>, derived: bool) -> Self {
        let common = coeffs
            .iter()
            .filter_map(|c| c.iter().position(|v| !v.is_zero()))
            .min()
            .unwrap_or(0);
        for c in &mut coeffs {
            c.drain(..common.min(c.len()));
            while c.len() > 1 && c.last().is_some_and(Zero::is_zero) {
                c.pop();
            }
        }
        Self { coeffs, derived }
    }

    fn from_ints(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| ipoly(r)).collect(), false)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Vec<BigInt>] {
        &self.coeffs
    }

    /// `P(z, A(z))` through the order of `a`.
    pub fn residual(&self, a: &TruncatedSeries) -> TruncatedSeries {
        let order = a.order();
        let mut acc = TruncatedSeries::zero(order);
        for c in self.coeffs.iter().rev() {
            let cz = TruncatedSeries::from_coeffs(
                (0..=order).map(|i| BigRational::from_integer(c.get(i).cloned().unwrap_or_default())).collect(),
            );
            acc = &(&acc * a) + &cz;
        }
        acc
    }

    pub fn annihilates(&self, a: &TruncatedSeries) -> bool {
        self.residual(a).is_zero()
    }
}

fn fmt_zpoly(c: &[BigInt]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| match i {
            0 => v.to_string(),
            1 if v.is_one() => "z".into(),
            1 => format!("{v}z"),
            _ if v.is_one() => format!("z^{i}"),
            _ => format!("{v}z^{i}"),
        })
        .collect();
    terms.join(" + ").replace("+ -", "- ")
}

impl fmt::Display for MinimalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.iter().all(Zero::is_zero) {
                continue;
            }
            let body = fmt_zpoly(c);
            let single = c.iter().filter(|v| !v.is_zero()).count() == 1;
            let factor = if single || i == 0 { body } else { format!("({body})") };
            parts.push(match i {
                0 => factor,
                1 => format!("{factor}·A"),
                _ => format!("{factor}·A^{i}"),
            });
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// The class's minimal polynomial: given for the four kernel-method classes,
/// derived from the closed form for the three radical classes.
pub fn minimal_polynomial(class: ClassId) -> Result<MinimalPolynomial> {
    if let Some(form) = radical_form(class) {
        return Ok(form.annihilator());
    }
    Ok(match class {
        ClassId::C663A => MinimalPolynomial::from_ints(&[&[1], &[-4, 1], &[4, -2], &[-1]]),
        ClassId::C1420 => MinimalPolynomial::from_ints(&[&[1], &[-4], &[4], &[-1, -1]]),
        ClassId::C1833A => MinimalPolynomial::from_ints(&[
            &[1],
            &[-5, -2],
            &[10, 6],
            &[-10, -7, -5],
            &[5, 5, 11],
            &[-1, -3, -6, -2],
            &[0, 1, 0, 3],
        ]),
        ClassId::C733 => MinimalPolynomial::from_ints(&[
            &[1, 2],
            &[-3, -1, -1],
            &[3, -3, 10, -1],
            &[-1, 1, -7, 2],
            &[0, 1, -2, 4],
        ]),
        _ => return Err(Error::NoMinimalPolynomial(class)),
    })
}

/// Whether the minimal polynomial annihilates the generating-tree counting
/// series through `z^order`.
pub fn verify_minimal_polynomial(class: ClassId, order: usize) -> Result<bool> {
    let p = minimal_polynomial(class)?;
    let f = TruncatedSeries::from_counts(&count_class(class, order));
    Ok(p.annihilates(&f))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.to_counts().unwrap().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn published_prefixes() {
        assert_eq!(
            ints(&expand_closed_form(ClassId::C1016, 9).unwrap()),
            [1, 1, 2, 6, 21, 76, 277, 1016, 3756, 13998]
        );
        assert_eq!(ints(&expand_closed_form(ClassId::C663A, 8).unwrap()), [1, 1, 2, 5, 15, 50, 178, 663, 2552]);
        assert_eq!(
            ints(&expand_closed_form(ClassId::C733, 10).unwrap()),
            [1, 1, 2, 5, 15, 51, 188, 733, 2979, 12495, 53708]
        );
        assert_eq!(
            ints(&expand_closed_form(ClassId::C1833A, 10).unwrap()),
            [1, 1, 2, 6, 22, 90, 396, 1833, 8801, 43441, 219092]
        );
    }

    #[test]
    fn closed_forms_match_gentree() {
        for class in ClassId::ALGEBRAIC {
            let f = expand_closed_form(class, 30).unwrap();
            assert_eq!(f.to_counts().unwrap(), count_class(class, 30), "{class}");
        }
    }

    #[test]
    fn conjugate_route_for_733() {
        assert_eq!(closed_form_733_by_conjugates(30).unwrap(), expand_closed_form(ClassId::C733, 30).unwrap());
    }

    #[test]
    fn kernel_roots() {
        let x = kernel_for(ClassId::C1420, 20).unwrap().kernel_root().unwrap();
        assert_eq!(x.truncate(4), TruncatedSeries::from_ints(&[1, 2, 5, 17, 64], 4));
        for class in [ClassId::C1420, ClassId::C663A] {
            let k = kernel_for(class, 30).unwrap();
            assert!(k.eval(&k.kernel_root().unwrap()).is_zero());
        }
        assert_eq!(kernel_for(ClassId::C830, 5).unwrap_err(), Error::NoClosedForm(ClassId::C830));
    }

    #[test]
    fn minimal_polynomials() {
        let degrees = [
            (ClassId::C663A, 3),
            (ClassId::C1420, 3),
            (ClassId::C733, 4),
            (ClassId::C1833A, 6),
            (ClassId::C1176, 2),
            (ClassId::C1253, 2),
            (ClassId::C1016, 2),
        ];
        for (class, d) in degrees {
            assert_eq!(minimal_polynomial(class).unwrap().degree(), d, "{class}");
            assert!(verify_minimal_polynomial(class, 30).unwrap(), "{class}");
        }
        assert!(minimal_polynomial(ClassId::C214).is_err());
    }

    #[test]
    fn perturbation_is_detected() {
        let p = minimal_polynomial(ClassId::C663A).unwrap();
        let mut counts = count_class(ClassId::C663A, 20);
        counts[9] += 1u32;
        assert!(!p.annihilates(&TruncatedSeries::from_counts(&counts)));
    }

    #[test]
    fn derived_annihilator_display() {
        let p = minimal_polynomial(ClassId::C1016).unwrap();
        assert!(p.derived);
        assert!(p.to_string().contains("A^2"));
        assert!(!minimal_polynomial(ClassId::C1420).unwrap().derived);
    }
}
