//! Classification of the 343 relation triples, and growth-rate fits.
//!
//! This is the only module that uses floating point. Ratio extrapolation is
//! done in exact rational arithmetic and converted at the end, so fits are
//! bit-for-bit reproducible.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gentree::{count_class, ClassId};
use crate::oracle::Oracle;
use crate::sequence::{triple_to_pattern_set, PatternSet, RelationTriple};
use crate::series::{expand_closed_form, TruncatedSeries};

/// Counting sequences that agree on `I_0 .. I_max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WilfGroup {
    pub sequence: Vec<BigUint>,
    pub pattern_sets: Vec<PatternSet>,
    pub triples: Vec<RelationTriple>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleClassification {
    pub max_n: usize,
    /// Triples keyed by the pattern set they forbid.
    pub groups: BTreeMap<PatternSet, Vec<RelationTriple>>,
    /// Pattern sets with the same avoiders of every length up to `max_n`.
    pub cells: Vec<Vec<PatternSet>>,
    /// Ordered by counting sequence.
    pub wilf_groups: Vec<WilfGroup>,
}

impl TripleClassification {
    pub fn triple_count(&self) -> usize {
        self.groups.values().map(Vec::len).sum()
    }

    /// Number of distinct forbidden pattern sets.
    pub fn pattern_set_count(&self) -> usize {
        self.groups.len()
    }

    /// Number of cells of triples with identical avoiders.
    pub fn equivalence_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cell_of(&self, t: &RelationTriple) -> Option<&[PatternSet]> {
        let set = triple_to_pattern_set(t);
        self.cells.iter().find(|c| c.contains(&set)).map(Vec::as_slice)
    }

    pub fn wilf_count(&self) -> usize {
        self.wilf_groups.len()
    }

    pub fn wilf_group_of(&self, t: &RelationTriple) -> Option<&WilfGroup> {
        self.wilf_groups.iter().find(|g| g.triples.contains(t))
    }

    pub fn same_wilf_group(&self, a: &RelationTriple, b: &RelationTriple) -> bool {
        match (self.wilf_group_of(a), self.wilf_group_of(b)) {
            (Some(x), Some(y)) => std::ptr::eq(x, y),
            _ => false,
        }
    }
}

/// Groups all 343 triples by pattern set.
pub fn equivalence_groups() -> BTreeMap<PatternSet, Vec<RelationTriple>> {
    let mut groups: BTreeMap<PatternSet, Vec<RelationTriple>> = BTreeMap::new();
    for t in RelationTriple::all() {
        groups.entry(triple_to_pattern_set(&t)).or_default().push(t);
    }
    groups
}

/// All three partitions. Counts `I_0 .. I_max_n` are computed in parallel.
///
/// Two sets `S`, `T` have the same avoiders iff `S`, `T` and `S ∪ T` have
/// the same counts, since the avoiders of `S ∪ T` are those of `S` that also
/// avoid `T`. So equivalence cells are found inside Wilf groups from counts
/// alone.
pub fn classify_triples(max_n: usize, oracle: &Oracle) -> Result<TripleClassification> {
    let groups = equivalence_groups();
    let sets: Vec<&PatternSet> = groups.keys().collect();
    let sequences = sets
        .par_iter()
        .map(|s| oracle.counting_sequence(max_n, s))
        .collect::<Result<Vec<_>>>()?;
    let mut by_seq: BTreeMap<Vec<BigUint>, WilfGroup> = BTreeMap::new();
    for (set, seq) in sets.into_iter().zip(sequences) {
        let g = by_seq.entry(seq.clone()).or_insert_with(|| WilfGroup {
            sequence: seq,
            pattern_sets: Vec::new(),
            triples: Vec::new(),
        });
        g.pattern_sets.push(set.clone());
        g.triples.extend(groups[set].iter().copied());
    }
    let wilf_groups: Vec<WilfGroup> = by_seq.into_values().collect();
    let cells = wilf_groups
        .par_iter()
        .map(|g| split_by_avoiders(g, max_n, oracle))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(TripleClassification { max_n, groups, cells, wilf_groups })
}

fn split_by_avoiders(g: &WilfGroup, max_n: usize, oracle: &Oracle) -> Result<Vec<Vec<PatternSet>>> {
    let mut cells: Vec<Vec<PatternSet>> = Vec::new();
    'sets: for s in &g.pattern_sets {
        for cell in cells.iter_mut() {
            let union: PatternSet = cell[0].iter().chain(s.iter()).cloned().collect();
            if oracle.counting_sequence(max_n, &union)? == g.sequence {
                cell.push(s.clone());
                continue 'sets;
            }
        }
        cells.push(vec![s.clone()]);
    }
    Ok(cells)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GrowthModel {
    /// `I_n ~ C n^g mu^n`.
    Algebraic,
    /// `I_n ~ C n^g mu^n mu1^(n^(3/8))`, optionally with `mu` held fixed.
    Stretched { fixed_mu: Option<f64> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FitParams {
    /// Richardson levels applied to the ratios.
    pub levels: usize,
    /// Number of trailing end points used for spread and residual diagnostics.
    pub window: usize,
}

impl Default for FitParams {
    fn default() -> Self {
        Self { levels: 4, window: 10 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StretchedFit {
    pub mu1: f64,
    pub log_mu1: f64,
    /// Exponent of `n`, held at 3/8.
    pub sigma: (u32, u32),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitDiagnostics {
    pub terms: usize,
    pub levels: usize,
    /// Max minus min of the `mu` estimates over the window.
    pub mu_spread: f64,
    /// Max minus min of the `g` estimates over the window.
    pub g_spread: f64,
    /// RMS of `log I_n` minus the fitted model over the window.
    pub residual_rms: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthEstimate {
    pub mu: f64,
    pub g: f64,
    pub constant: Option<f64>,
    pub stretched: Option<StretchedFit>,
    pub diagnostics: FitDiagnostics,
}

pub const MIN_TERMS: usize = 30;
const SIGMA: f64 = 3.0 / 8.0;

fn big_ln(v: &BigUint) -> f64 {
    let bits = v.bits();
    if bits <= 1000 {
        return v.to_f64().expect("finite").ln();
    }
    let shift = bits - 64;
    (v >> shift).to_f64().expect("finite").ln() + shift as f64 * std::f64::consts::LN_2
}

fn rat_to_f64(r: &BigRational) -> f64 {
    let (n, d) = (r.numer(), r.denom());
    let shift = (n.bits().max(d.bits()) as i64 - 900).max(0) as u64;
    (n >> shift).to_f64().unwrap() / (d >> shift).to_f64().unwrap()
}

fn rat(v: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from_biguint(Sign::Plus, v.clone()))
}

fn factorial(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product::<BigInt>().max(BigInt::from(1))
}

/// Richardson extrapolation at level `k` of `a(m)`, assuming an expansion in
/// powers of `1/m`, using `a(n) .. a(n+k)`.
fn richardson(a: impl Fn(usize) -> BigRational, n: usize, k: usize) -> BigRational {
    let mut acc = BigRational::zero();
    for j in 0..=k {
        let w = BigInt::from(n + j).pow(k as u32) * if (k + j).is_even() { 1 } else { -1 };
        let w = BigRational::new(w, factorial(j) * factorial(k - j));
        acc += w * a(n + j);
    }
    acc
}

/// Fits `seq` (with `seq[n] = I_n`) to the chosen model.
pub fn estimate_growth(seq: &[BigUint], model: GrowthModel) -> Result<GrowthEstimate> {
    estimate_growth_with(seq, model, FitParams::default())
}

pub fn estimate_growth_with(seq: &[BigUint], model: GrowthModel, params: FitParams) -> Result<GrowthEstimate> {
    if seq.len() < MIN_TERMS {
        return Err(Error::TooFewTerms { needed: MIN_TERMS, got: seq.len() });
    }
    if let Some(i) = seq.iter().position(Zero::is_zero) {
        return Err(Error::NonPositiveTerm(i));
    }
    match model {
        GrowthModel::Algebraic => Ok(fit_algebraic(seq, params)),
        GrowthModel::Stretched { fixed_mu } => Ok(fit_stretched(seq, fixed_mu, params)),
    }
}

fn fit_algebraic(seq: &[BigUint], params: FitParams) -> GrowthEstimate {
    let last = seq.len() - 1;
    let k = params.levels.min(last / 4);
    let window = params.window.min(last / 2);
    let ratio = |n: usize| rat(&seq[n]) / rat(&seq[n - 1]);
    // n(n-1)(r_n - r_{n-1}) -> -mu g
    let slope = |n: usize| (ratio(n) - ratio(n - 1)) * BigRational::from_integer(BigInt::from(n * (n - 1)));
    let mus: Vec<f64> = (0..window).map(|w| rat_to_f64(&richardson(ratio, last - k - w, k))).collect();
    let kg = k.saturating_sub(1);
    let slopes: Vec<f64> = (0..window).map(|w| rat_to_f64(&richardson(slope, last - kg - w, kg))).collect();
    let mu = mus[0];
    let gs: Vec<f64> = slopes.iter().map(|s| -s / mu).collect();
    let g = gs[0];
    let log_c = big_ln(&seq[last]) - g * (last as f64).ln() - last as f64 * mu.ln();
    let residuals: Vec<f64> = (0..window)
        .map(|w| {
            let n = last - w;
            big_ln(&seq[n]) - (log_c + g * (n as f64).ln() + n as f64 * mu.ln())
        })
        .collect();
    GrowthEstimate {
        mu,
        g,
        constant: Some(log_c.exp()),
        stretched: None,
        diagnostics: FitDiagnostics {
            terms: seq.len(),
            levels: k,
            mu_spread: spread(&mus),
            g_spread: spread(&gs),
            residual_rms: rms(&residuals),
        },
    }
}

fn fit_stretched(seq: &[BigUint], fixed_mu: Option<f64>, params: FitParams) -> GrowthEstimate {
    let last = seq.len() - 1;
    let start = (seq.len() / 2).max(1);
    let rows: Vec<usize> = (start..=last).collect();
    let basis = |n: usize| -> Vec<f64> {
        let nf = n as f64;
        let mut b = vec![1.0, nf.ln(), nf.powf(SIGMA)];
        if fixed_mu.is_none() {
            b.push(nf);
        }
        b
    };
    let target = |n: usize| big_ln(&seq[n]) - fixed_mu.map_or(0.0, |m| n as f64 * m.ln());
    let cols = basis(1).len();
    let a = DMatrix::from_fn(rows.len(), cols, |i, j| basis(rows[i])[j]);
    let y = DVector::from_iterator(rows.len(), rows.iter().map(|&n| target(n)));
    // Column scaling keeps the normal matrix well conditioned.
    let scale: Vec<f64> = (0..cols).map(|j| a.column(j).amax().max(1e-300)).collect();
    let a_scaled = DMatrix::from_fn(rows.len(), cols, |i, j| a[(i, j)] / scale[j]);
    let coef = a_scaled
        .svd(true, true)
        .solve(&y, 1e-14)
        .expect("SVD with both factors")
        .iter()
        .zip(&scale)
        .map(|(c, s)| c / s)
        .collect::<Vec<f64>>();
    let (log_c, g, log_mu1) = (coef[0], coef[1], coef[2]);
    let mu = fixed_mu.unwrap_or_else(|| coef[3].exp());
    let model = |n: usize| {
        let nf = n as f64;
        log_c + g * nf.ln() + log_mu1 * nf.powf(SIGMA) + nf * mu.ln()
    };
    let window = params.window.min(rows.len());
    let residuals: Vec<f64> = (0..window).map(|w| big_ln(&seq[last - w]) - model(last - w)).collect();
    let all_res: Vec<f64> = rows.iter().map(|&n| big_ln(&seq[n]) - model(n)).collect();
    GrowthEstimate {
        mu,
        g,
        constant: Some(log_c.exp()),
        stretched: Some(StretchedFit { mu1: log_mu1.exp(), log_mu1, sigma: (3, 8) }),
        diagnostics: FitDiagnostics {
            terms: seq.len(),
            levels: 0,
            mu_spread: 0.0,
            g_spread: 0.0,
            residual_rms: rms(&residuals).max(rms(&all_res)),
        },
    }
}

fn spread(v: &[f64]) -> f64 {
    let max = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let min = v.iter().cloned().fold(f64::INFINITY, f64::min);
    max - min
}

fn rms(v: &[f64]) -> f64 {
    if v.is_empty() {
        return 0.0;
    }
    (v.iter().map(|x| x * x).sum::<f64>() / v.len() as f64).sqrt()
}

/// Integer polynomial in `x`, lowest degree first, whose real root is the
/// growth rate of an algebraic class.
pub fn growth_polynomial(class: ClassId) -> Option<&'static [i64]> {
    Some(match class {
        ClassId::C663A => &[4, -12, 4, -24, 5],
        ClassId::C733 => &[1, -14, 7, -6, 1],
        ClassId::C1016 | ClassId::C1253 => &[-4, 1],
        ClassId::C1176 => &[-4, -4, 1],
        ClassId::C1420 => &[-27, 5],
        ClassId::C1833A => &[32, 195, 12, 112, -20],
        _ => return None,
    })
}

/// The radicand of a closed form whose branch point sets the growth rate.
fn radicand(class: ClassId) -> Option<&'static [i64]> {
    match class {
        ClassId::C1176 => Some(&[1, -4, -4]),
        ClassId::C1253 | ClassId::C1016 => Some(&[1, -4]),
        _ => None,
    }
}

fn eval(p: &[i64], x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
}

/// Real roots in `(lo, hi)` located by sign changes on a fine grid and
/// polished by bisection.
pub fn real_roots(p: &[i64], lo: f64, hi: f64) -> Vec<f64> {
    let steps = 20_000;
    let h = (hi - lo) / steps as f64;
    let mut roots = Vec::new();
    for i in 0..steps {
        let (mut a, mut b) = (lo + i as f64 * h, lo + (i + 1) as f64 * h);
        let (fa, fb) = (eval(p, a), eval(p, b));
        if fa == 0.0 {
            roots.push(a);
            continue;
        }
        if fa * fb > 0.0 {
            continue;
        }
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if eval(p, a) * eval(p, m) <= 0.0 {
                b = m;
            } else {
                a = m;
            }
        }
        roots.push(0.5 * (a + b));
    }
    roots
}

/// Reference growth rate for the classes where one is known.
pub fn reference_growth(class: ClassId) -> Option<f64> {
    if let Some(p) = growth_polynomial(class) {
        // The largest positive real root.
        return real_roots(p, 0.5, 20.0).into_iter().reduce(f64::max);
    }
    match class {
        ClassId::C214 => Some(4.0),
        ClassId::C830 | ClassId::C1953A => Some(6.75),
        ClassId::C1509 => Some(3.0 + 2.0 * 2f64.sqrt()),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RootCheck {
    pub class: ClassId,
    pub fitted_mu: f64,
    /// Real root of the growth polynomial nearest the fit.
    pub root: f64,
    pub relative_error: f64,
    pub tolerance: f64,
    /// `1 / rho` for the smallest positive zero `rho` of the radicand, when
    /// the closed form has one.
    pub singularity_mu: Option<f64>,
}

impl RootCheck {
    pub fn passed(&self) -> bool {
        self.relative_error < self.tolerance
            && self.singularity_mu.is_none_or(|s| ((s - self.root) / self.root).abs() < 1e-9)
    }
}

/// Compares a fitted growth rate with the class's growth polynomial.
pub fn check_root_against(class: ClassId, fitted_mu: f64, tolerance: f64) -> Option<RootCheck> {
    let p = growth_polynomial(class)?;
    let root = real_roots(p, 0.5, 20.0)
        .into_iter()
        .min_by(|a, b| (a - fitted_mu).abs().total_cmp(&(b - fitted_mu).abs()))?;
    let singularity_mu = radicand(class)
        .and_then(|r| real_roots(r, 1e-6, 1.0).into_iter().reduce(f64::min))
        .map(|rho| 1.0 / rho);
    Some(RootCheck {
        class,
        fitted_mu,
        root,
        relative_error: ((fitted_mu - root) / root).abs(),
        tolerance,
        singularity_mu,
    })
}

/// Number of terms used by [`check_root_constants`].
pub const ROOT_CHECK_TERMS: usize = 200;

/// Fits 200 generating-tree terms and checks the growth rate against the
/// class's growth polynomial to relative error `1e-3`.
pub fn check_root_constants(class: ClassId) -> Result<RootCheck> {
    let seq = count_class(class, ROOT_CHECK_TERMS);
    let est = estimate_growth(&seq, GrowthModel::Algebraic)?;
    check_root_against(class, est.mu, 1e-3).ok_or(Error::NoClosedForm(class))
}

/// The closed form's coefficients, as a cross-check input to the fits.
pub fn closed_form_terms(class: ClassId, order: usize) -> Result<Vec<BigUint>> {
    expand_closed_form(class, order).and_then(|s: TruncatedSeries| s.to_counts())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geometric(base: u32, n: usize) -> Vec<BigUint> {
        (0..=n).map(|i| BigUint::from(base).pow(i as u32)).collect()
    }

    #[test]
    fn geometric_sequence() {
        let e = estimate_growth(&geometric(2, 60), GrowthModel::Algebraic).unwrap();
        assert!((e.mu - 2.0).abs() < 1e-12);
        assert!(e.g.abs() < 1e-12);
        assert!(e.diagnostics.residual_rms < 1e-9);
    }

    #[test]
    fn central_binomials() {
        // binom(2n, n) ~ 4^n / sqrt(pi n)
        let seq: Vec<BigUint> =
            (0..=120u64).map(|n| num_integer::binomial(BigUint::from(2 * n), BigUint::from(n))).collect();
        let e = estimate_growth(&seq, GrowthModel::Algebraic).unwrap();
        assert!((e.mu - 4.0).abs() < 1e-9, "{}", e.mu);
        assert!((e.g + 0.5).abs() < 1e-4, "{}", e.g);
        assert!((e.constant.unwrap() - 1.0 / std::f64::consts::PI.sqrt()).abs() < 1e-2);
    }

    #[test]
    fn fit_errors() {
        assert_eq!(
            estimate_growth(&geometric(3, 10), GrowthModel::Algebraic),
            Err(Error::TooFewTerms { needed: MIN_TERMS, got: 11 })
        );
        let mut s = geometric(3, 40);
        s[5] = BigUint::zero();
        assert_eq!(estimate_growth(&s, GrowthModel::Algebraic), Err(Error::NonPositiveTerm(5)));
    }

    #[test]
    fn stretched_fit_recovers_synthetic_parameters() {
        // Exact integers close to 2 n^2 5^n e^(-0.5 n^(3/8)).
        let seq: Vec<BigUint> = (0..=200u32)
            .map(|n| {
                let nf = n.max(1) as f64;
                let log = 2f64.ln() + 2.0 * nf.ln() - 0.5 * nf.powf(SIGMA) + 40.0;
                let head = BigUint::from((log.exp() / 1e12) as u64 + 1);
                head * BigUint::from(5u32).pow(n)
            })
            .collect();
        let e = estimate_growth(&seq, GrowthModel::Stretched { fixed_mu: None }).unwrap();
        assert!((e.mu - 5.0).abs() < 1e-3, "{}", e.mu);
        let s = e.stretched.unwrap();
        assert!((s.log_mu1 + 0.5).abs() < 0.05, "{}", s.log_mu1);
        assert_eq!(s.sigma, (3, 8));
    }

    #[test]
    fn growth_polynomial_roots() {
        let close = |c: ClassId, v: f64| (reference_growth(c).unwrap() - v).abs() < 1e-5;
        assert!(close(ClassId::C663A, 4.73058));
        assert!(close(ClassId::C733, 5.16207));
        assert!(close(ClassId::C1833A, 5.98042));
        assert!(close(ClassId::C1176, 2.0 + 2.0 * 2f64.sqrt()));
        assert!(close(ClassId::C1420, 5.4));
        assert!(reference_growth(ClassId::C759).is_none());
    }

    #[test]
    fn root_check_includes_branch_point() {
        let c = check_root_against(ClassId::C1176, 4.8284, 1e-3).unwrap();
        assert!(c.passed());
        assert!((c.singularity_mu.unwrap() - (2.0 + 2.0 * 2f64.sqrt())).abs() < 1e-9);
        assert!(!check_root_against(ClassId::C1176, 4.9, 1e-3).unwrap().passed());
    }

    #[test]
    fn equivalence_partition() {
        let g = equivalence_groups();
        assert_eq!(g.values().map(Vec::len).sum::<usize>(), 343);
        assert_eq!(g.len(), 154);
    }

    #[test]
    fn avoider_cells_refine_wilf_groups() {
        let c = classify_triples(7, &Oracle::default()).unwrap();
        assert_eq!(c.pattern_set_count(), 154);
        assert_eq!(c.cells.iter().map(Vec::len).sum::<usize>(), 154);
        assert_eq!(c.equivalence_count(), 97);
        // a leading 0 turns any 210 into a 021
        let p = |s: &str| PatternSet::parse(s).unwrap();
        let cell = c.cells.iter().find(|cell| cell.contains(&p("021,120"))).unwrap();
        assert!(cell.contains(&p("021,120,210")));
        assert!(!cell.contains(&p("021")));
    }

    #[test]
    fn fits_are_deterministic() {
        let seq = count_class(ClassId::C1016, 60);
        let a = estimate_growth(&seq, GrowthModel::Algebraic).unwrap();
        let b = estimate_growth(&seq, GrowthModel::Algebraic).unwrap();
        assert_eq!(a, b);
    }
}
