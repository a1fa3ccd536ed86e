//! Numeric ground truth: Aberth–Ehrlich simultaneous iteration for degrees 2..=5,
//! multiplicity clustering and brute-force discriminants.
//!
//! Polynomial values are evaluated in double-double arithmetic so that clusters
//! of a triple or quadruple root still resolve to well inside the clustering
//! tolerance.

use std::f64::consts::TAU;

use num_complex::Complex64;
use thiserror::Error;

use crate::poly::{eval_monic, MonicPolynomial, RealRoot, RootSet};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("root finder did not converge after {iterations} iterations (last correction {last_correction:e})")]
    NoConvergence {
        iterations: usize,
        last_correction: f64,
        /// Largest correction of each sweep.
        trace: Vec<f64>,
    },

    #[error("oracle supports degrees 2 to 5, got {degree}")]
    UnsupportedDegree { degree: usize },

    #[error("non-finite coefficient {value}")]
    NonFinite { value: f64 },

    #[error("clustering produced an unpaired complex root")]
    UnpairedComplex,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleConfig {
    pub max_iterations: usize,
    pub convergence_tol: f64,
    pub cluster_tol: f64,
    pub polish_steps: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { max_iterations: 200, convergence_tol: 1e-13, cluster_tol: 1e-6, polish_steps: 3 }
    }
}

/// Raw complex roots plus the clustered real view.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleSolution {
    pub complex_roots: Vec<Complex64>,
    pub roots: RootSet,
    pub iterations: usize,
}

// double-double arithmetic

#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let e = e + self.lo + o.lo;
        let (hi, lo) = two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = two_sum(p, e);
        Dd { hi, lo }
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }
}

#[derive(Debug, Clone, Copy)]
struct DdComplex {
    re: Dd,
    im: Dd,
}

impl DdComplex {
    const ZERO: DdComplex = DdComplex { re: Dd::ZERO, im: Dd::ZERO };

    fn from(z: Complex64) -> DdComplex {
        DdComplex { re: Dd::from(z.re), im: Dd::from(z.im) }
    }

    #[inline]
    fn mul(self, o: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.mul(o.re).add(self.im.mul(o.im).neg()),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    #[inline]
    fn add_real(self, x: f64) -> DdComplex {
        DdComplex { re: self.re.add(Dd::from(x)), im: self.im }
    }

    #[inline]
    fn add(self, o: DdComplex) -> DdComplex {
        DdComplex { re: self.re.add(o.re), im: self.im.add(o.im) }
    }

    fn to_complex(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

/// p(z) and p′(z) for the monic polynomial with the given lower coefficients.
fn eval_with_derivative(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let zz = DdComplex::from(z);
    let mut p = DdComplex::from(Complex64::new(1.0, 0.0));
    let mut dp = DdComplex::ZERO;
    for &c in coeffs {
        dp = dp.mul(zz).add(p);
        p = p.mul(zz).add_real(c);
    }
    (p.to_complex(), dp.to_complex())
}

/// Bound on the rounding noise of the double-double evaluation at `z`.
fn eval_noise(coeffs: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    let bound = coeffs.iter().fold(1.0, |acc, c| acc * r + c.abs());
    8.0 * coeffs.len() as f64 * bound * 2f64.powi(-104)
}

fn initial_points(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len();
    let center = -coeffs[0] / n as f64;
    // Taylor coefficients of p at the centre (synthetic division, highest first)
    let mut shifted: Vec<f64> = std::iter::once(1.0).chain(coeffs.iter().copied()).collect();
    for i in 0..n {
        for j in 1..=(n - i) {
            shifted[j] += center * shifted[j - 1];
        }
    }
    // shifted[k] is now the coefficient of (x - center)^(n - k)
    let radius = (1..=n)
        .map(|k| shifted[k].abs().powf(1.0 / k as f64))
        .fold(0.0_f64, f64::max);
    (0..n)
        .map(|k| {
            let angle = TAU * k as f64 / n as f64 + 0.4;
            Complex64::new(center, 0.0) + Complex64::from_polar(radius, angle)
        })
        .collect()
}

fn aberth(coeffs: &[f64], cfg: &OracleConfig) -> Result<(Vec<Complex64>, usize), OracleError> {
    let n = coeffs.len();
    let mut z = initial_points(coeffs);
    if z.iter().all(|w| *w == z[0]) {
        // p(x) = (x - centre)^n
        return Ok((z, 0));
    }
    let mut trace = Vec::new();
    for iteration in 1..=cfg.max_iterations {
        let scale = z.iter().map(|w| w.norm()).fold(f64::MIN_POSITIVE, f64::max);
        let mut worst = 0.0_f64;
        let mut all_done = true;
        for i in 0..n {
            let (p, dp) = eval_with_derivative(coeffs, z[i]);
            if p == Complex64::new(0.0, 0.0) {
                continue;
            }
            let at_noise = p.norm() <= eval_noise(coeffs, z[i]);
            let ratio = p / dp;
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let diff = z[i] - z[j];
                    if diff != Complex64::new(0.0, 0.0) {
                        sum += diff.inv();
                    }
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if !w.is_finite() {
                all_done = false;
                continue;
            }
            z[i] -= w;
            let size = w.norm();
            worst = worst.max(size);
            if size > cfg.convergence_tol * scale && !at_noise {
                all_done = false;
            }
        }
        trace.push(worst);
        if all_done {
            return Ok((z, iteration));
        }
    }
    Err(OracleError::NoConvergence {
        iterations: cfg.max_iterations,
        last_correction: trace.last().copied().unwrap_or(f64::NAN),
        trace,
    })
}

/// Newton steps on isolated roots; a step is kept only if it lowers |p|.
fn polish(coeffs: &[f64], z: &mut [Complex64], isolation: f64, steps: usize) {
    let snapshot = z.to_vec();
    for (i, root) in z.iter_mut().enumerate() {
        let isolated = snapshot
            .iter()
            .enumerate()
            .all(|(j, w)| j == i || (*w - snapshot[i]).norm() > isolation);
        if !isolated {
            continue;
        }
        for _ in 0..steps {
            let (p, dp) = eval_with_derivative(coeffs, *root);
            if p.norm() == 0.0 || dp.norm() == 0.0 {
                break;
            }
            let next = *root - p / dp;
            let (pn, _) = eval_with_derivative(coeffs, next);
            if pn.norm() < p.norm() {
                *root = next;
            } else {
                break;
            }
        }
    }
}

fn quadratic_roots(a: f64, b: f64) -> Vec<Complex64> {
    let disc = a * a - 4.0 * b;
    if disc >= 0.0 {
        let s = disc.sqrt();
        let q = -0.5 * (a + s.copysign(a));
        if q == 0.0 {
            vec![Complex64::new(0.0, 0.0); 2]
        } else {
            vec![Complex64::new(q, 0.0), Complex64::new(b / q, 0.0)]
        }
    } else {
        let im = (-disc).sqrt() / 2.0;
        vec![Complex64::new(-a / 2.0, im), Complex64::new(-a / 2.0, -im)]
    }
}

fn cluster(
    coeffs: &[f64],
    z: &[Complex64],
    cluster_tol: f64,
) -> Result<RootSet, OracleError> {
    let n = z.len();
    let delta = cluster_tol * z.iter().map(|w| w.norm()).fold(1.0, f64::max);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut i = i;
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if (z[i] - z[j]).norm() < delta {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut owner = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if owner[r] == usize::MAX {
            owner[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[owner[r]].push(i);
    }
    let mut values = Vec::new();
    let mut complex = 0;
    for g in groups {
        let centroid = g.iter().map(|&i| z[i]).sum::<Complex64>() / g.len() as f64;
        if centroid.im.abs() < delta / 2.0 {
            values.push((centroid.re, g.len()));
        } else {
            complex += g.len();
        }
    }
    if complex % 2 != 0 {
        return Err(OracleError::UnpairedComplex);
    }
    values.sort_by(|x, y| x.0.total_cmp(&y.0));
    let mut roots: Vec<RealRoot> = Vec::new();
    for (value, multiplicity) in values {
        match roots.last_mut() {
            Some(last) if last.value == value => last.multiplicity += multiplicity,
            _ => roots.push(RealRoot { value, multiplicity }),
        }
    }
    let residuals = roots.iter().map(|r| eval_monic(coeffs, r.value).abs()).collect();
    Ok(RootSet::new(roots, complex / 2, residuals))
}

/// Solve the monic polynomial whose non-leading coefficients are `coeffs`
/// (descending powers).
pub fn solve_coefficients(coeffs: &[f64], cfg: &OracleConfig) -> Result<OracleSolution, OracleError> {
    let degree = coeffs.len();
    if !(2..=5).contains(&degree) {
        return Err(OracleError::UnsupportedDegree { degree });
    }
    if let Some(&value) = coeffs.iter().find(|c| !c.is_finite()) {
        return Err(OracleError::NonFinite { value });
    }
    let (mut z, iterations) = if degree == 2 {
        (quadratic_roots(coeffs[0], coeffs[1]), 0)
    } else {
        aberth(coeffs, cfg)?
    };
    if degree > 2 {
        let delta = cfg.cluster_tol * z.iter().map(|w| w.norm()).fold(1.0, f64::max);
        polish(coeffs, &mut z, delta, cfg.polish_steps);
    }
    let roots = cluster(coeffs, &z, cfg.cluster_tol)?;
    Ok(OracleSolution { complex_roots: z, roots, iterations })
}

pub fn solve_full<P: MonicPolynomial + ?Sized>(
    poly: &P,
    cfg: &OracleConfig,
) -> Result<OracleSolution, OracleError> {
    solve_coefficients(&poly.coefficients(), cfg)
}

pub fn solve<P: MonicPolynomial + ?Sized>(poly: &P, cfg: &OracleConfig) -> Result<RootSet, OracleError> {
    Ok(solve_full(poly, cfg)?.roots)
}

/// ∏_{i<j} (zᵢ − zⱼ)² over the given roots.
pub fn discriminant_from_roots(z: &[Complex64]) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for i in 0..z.len() {
        for j in (i + 1)..z.len() {
            let d = z[i] - z[j];
            acc *= d * d;
        }
    }
    acc
}

/// Real part of the root-product discriminant.
pub fn brute_discriminant<P: MonicPolynomial + ?Sized>(
    poly: &P,
    cfg: &OracleConfig,
) -> Result<f64, OracleError> {
    let sol = solve_full(poly, cfg)?;
    Ok(discriminant_from_roots(&sol.complex_roots).re)
}
