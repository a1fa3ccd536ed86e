//! Cubic classification, trigonometric roots, the Siebeck–Marden–Northshield
//! triangle and root isolation intervals.
//!
//! Roots are reported ascending. The descending labels x₁ ≥ x₂ ≥ x₃ used for the
//! triangle and the isolation intervals map to indices 2, 1, 0.

use std::cmp::Ordering;
use std::f64::consts::{FRAC_PI_3, FRAC_PI_6};

use num_complex::Complex64;
use twofloat::TwoFloat;

use crate::error::{Error, Result};
use crate::expr;
use crate::poly::{Cubic, Interval, MonicPolynomial, RootSet};
use crate::tolerance::{max_abs, Comparison, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicThresholds {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CubicKind {
    ThreeDistinctReal,
    DoublePlusSingle,
    TripleReal,
    OneRealPlusComplexPair,
}

/// Which boundary of the three-real band a double root sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CubicBoundary {
    C1,
    C2,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TriangleData {
    pub centroid_x: f64,
    /// r = √(a² − 3b)/3.
    pub incircle_radius: f64,
    pub side: f64,
    pub theta: f64,
    /// Critical points μ₁ > μ₂.
    pub mu: [f64; 2],
    /// Roots at c = c₀, descending.
    pub nu: [f64; 3],
    /// Single roots at c = c₁ and c = c₂.
    pub xi: [f64; 2],
    /// Vertices for x₁, x₂, x₃ (descending roots).
    pub vertices: [(f64, f64); 3],
}

#[derive(Debug, Clone, PartialEq)]
pub struct CubicClassification {
    pub kind: CubicKind,
    pub thresholds: Option<CubicThresholds>,
    pub boundary: Option<CubicBoundary>,
    pub triangle: Option<TriangleData>,
    /// Every threshold comparison made, in order.
    pub comparisons: Vec<Comparison>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsolationBranch {
    /// c₂ ≤ c ≤ c₀.
    LowC,
    /// c₀ ≤ c ≤ c₁.
    HighC,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IsolationIntervals {
    pub branch: IsolationBranch,
    /// Intervals for the ascending roots x₃, x₂, x₁.
    pub intervals: [Interval; 3],
}

fn u_of(c: &Cubic) -> f64 {
    c.a() * c.a() - 3.0 * c.b()
}

pub(crate) fn u_scale(a: f64, b: f64) -> f64 {
    max_abs(&[a * a, 3.0 * b])
}

pub(crate) fn c_scale(a: f64, b: f64, c: f64, u: f64) -> f64 {
    max_abs(&[c, 2.0 * a.powi(3) / 27.0, a * b / 3.0, 2.0 / 27.0 * u.abs().powf(1.5)])
}

fn thresholds_unchecked(c: &Cubic, u: f64) -> CubicThresholds {
    let c0 = expr::cubic_c0(&c.a(), &c.b());
    let w = 2.0 / 27.0 * u.max(0.0).powf(1.5);
    CubicThresholds { c0, c1: c0 + w, c2: c0 - w }
}

pub fn cubic_thresholds(c: &Cubic) -> Result<CubicThresholds> {
    let u = u_of(c);
    if u <= 0.0 {
        return Err(Error::NoTriangle { value: u });
    }
    Ok(thresholds_unchecked(c, u))
}

/// Pick the comparison closest to equality among those that tie.
pub(crate) fn nearest_equal<'a, T: Copy>(candidates: &'a [(T, &'a Comparison)]) -> Option<T> {
    candidates
        .iter()
        .filter(|(_, cmp)| cmp.ordering == Ordering::Equal)
        .min_by(|x, y| x.1.margin.abs().total_cmp(&y.1.margin.abs()))
        .map(|(t, _)| *t)
}

pub fn classify_cubic(c: &Cubic) -> CubicClassification {
    classify_cubic_with(c, Tolerance::default())
}

pub fn classify_cubic_with(c: &Cubic, tol: Tolerance) -> CubicClassification {
    let (a, b) = (c.a(), c.b());
    let u = u_of(c);
    let cu = tol.sign("a^2-3b", u, u_scale(a, b));
    let scale = c_scale(a, b, c.c(), u);
    let mut comparisons = vec![cu.clone()];
    let (kind, thresholds, boundary) = match cu.ordering {
        Ordering::Less => (CubicKind::OneRealPlusComplexPair, None, None),
        Ordering::Equal => {
            let c0 = expr::cubic_c0(&a, &b);
            let cmp = tol.compare("c", "c0", c.c(), c0, scale);
            let kind = if cmp.ordering == Ordering::Equal {
                CubicKind::TripleReal
            } else {
                CubicKind::OneRealPlusComplexPair
            };
            comparisons.push(cmp);
            (kind, None, None)
        }
        Ordering::Greater => {
            let th = thresholds_unchecked(c, u);
            let hi = tol.compare("c", "c1", c.c(), th.c1, scale);
            let lo = tol.compare("c", "c2", c.c(), th.c2, scale);
            let tie = nearest_equal(&[(CubicBoundary::C1, &hi), (CubicBoundary::C2, &lo)]);
            let kind = match tie {
                Some(_) => CubicKind::DoublePlusSingle,
                None if hi.ordering == Ordering::Less && lo.ordering == Ordering::Greater => {
                    CubicKind::ThreeDistinctReal
                }
                None => CubicKind::OneRealPlusComplexPair,
            };
            comparisons.push(lo);
            comparisons.push(hi);
            (kind, Some(th), tie)
        }
    };
    assemble(c, kind, thresholds, boundary, comparisons)
}

/// Build a classification for a decided kind, filling in the triangle.
pub(crate) fn assemble(
    c: &Cubic,
    kind: CubicKind,
    thresholds: Option<CubicThresholds>,
    boundary: Option<CubicBoundary>,
    comparisons: Vec<Comparison>,
) -> CubicClassification {
    let mut cls = CubicClassification { kind, thresholds, boundary, triangle: None, comparisons };
    if matches!(kind, CubicKind::ThreeDistinctReal | CubicKind::DoublePlusSingle) {
        let roots = roots_for(c, &cls).expanded();
        cls.triangle = Some(build_triangle(c, &cls, [roots[2], roots[1], roots[0]]));
    }
    cls
}

fn theta_for(c: &Cubic, cls: &CubicClassification) -> f64 {
    match (cls.kind, cls.boundary) {
        (CubicKind::DoublePlusSingle, Some(CubicBoundary::C2)) => 0.0,
        (CubicKind::DoublePlusSingle, Some(CubicBoundary::C1)) => FRAC_PI_3,
        _ => {
            let u = u_of(c);
            let c0 = expr::cubic_c0(&c.a(), &c.b());
            let arg = -27.0 * (c.c() - c0) / (2.0 * u.powf(1.5));
            arg.clamp(-1.0, 1.0).acos() / 3.0
        }
    }
}

/// The three trigonometric roots in descending order.
pub(crate) fn viete_three(shift: f64, sqrt_u: f64, theta: f64) -> [f64; 3] {
    let k = 2.0 / 3.0 * sqrt_u;
    [
        shift + k * theta.cos(),
        shift - k * (theta + FRAC_PI_3).cos(),
        shift - k * (theta - FRAC_PI_3).cos(),
    ]
}

/// p(x) in double-double, so clustered roots are resolved past f64 rounding.
fn eval_dd(c: &Cubic, x: f64) -> f64 {
    let x = TwoFloat::from(x);
    f64::from(((x + c.a()) * x + c.b()) * x + c.c())
}

/// Safeguarded Newton refinement of a simple real root of a monic cubic.
/// A step is taken only if it lowers |p| and moves less than `max_step`.
pub(crate) fn polish_cubic_root(c: &Cubic, mut x: f64, max_step: f64) -> f64 {
    let (k, d) = c.derivative();
    let mut px = eval_dd(c, x);
    for _ in 0..8 {
        let dpx = k * d.eval(x);
        if px == 0.0 || dpx == 0.0 {
            break;
        }
        let step = px / dpx;
        if !step.is_finite() || step.abs() > max_step {
            break;
        }
        let next = x - step;
        let pn = eval_dd(c, next);
        if pn.abs() < px.abs() {
            (x, px) = (next, pn);
        } else {
            break;
        }
    }
    x
}

/// The real root of a cubic known to have exactly one.
pub(crate) fn single_real_root(c: &Cubic) -> f64 {
    let (a, b) = (c.a(), c.b());
    let u = u_of(c);
    let shift = -a / 3.0;
    let c0 = expr::cubic_c0(&a, &b);
    let guess = if u == 0.0 {
        shift + (-(c.c() - c0)).cbrt()
    } else {
        let sqrt_u = Complex64::new(u, 0.0).sqrt();
        let u3 = Complex64::new(u * u * u, 0.0).sqrt();
        let arg = Complex64::new(-27.0 * (c.c() - c0), 0.0) / (2.0 * u3);
        let theta = arg.acos() / 3.0;
        // original formulas for u > 0, the mirrored ones for u < 0
        let sign = if u > 0.0 { 1.0 } else { -1.0 };
        let k = sqrt_u * (2.0 / 3.0) * sign;
        let t3 = Complex64::new(FRAC_PI_3, 0.0);
        let candidates = [
            shift + k * theta.cos(),
            shift - k * (theta + t3).cos(),
            shift - k * (theta - t3).cos(),
        ];
        candidates
            .iter()
            .min_by(|x, y| x.im.abs().total_cmp(&y.im.abs()))
            .map(|z| z.re)
            .unwrap_or(shift)
    };
    let guess = if guess.is_finite() { guess } else { shift };
    polish_cubic_root(c, guess, f64::INFINITY)
}

/// Two simple roots straddling the critical point `mu`, when the sign of p(mu)
/// proves beyond rounding that they are distinct. A cubic within tolerance of
/// a double root is classified as one, but its roots stay resolvable.
fn split_near_double(c: &Cubic, mu: f64) -> Option<[f64; 2]> {
    let p = c.eval(mu);
    let curvature = 6.0 * mu + 2.0 * c.a();
    let terms = mu.abs().powi(3) + (c.a() * mu * mu).abs() + (c.b() * mu).abs() + c.c().abs();
    if p * curvature >= 0.0 || p.abs() <= 8.0 * f64::EPSILON * terms {
        return None;
    }
    let off = (2.0 * p.abs() / curvature.abs()).sqrt();
    let lo = polish_cubic_root(c, mu - off, 0.5 * off);
    let hi = polish_cubic_root(c, mu + off, 0.5 * off);
    (lo < mu && mu < hi).then_some([lo, hi])
}

/// Roots per the given classification.
pub(crate) fn roots_for(c: &Cubic, cls: &CubicClassification) -> RootSet {
    let shift = -c.a() / 3.0;
    match cls.kind {
        CubicKind::TripleReal => RootSet::from_values(c, vec![(shift, 3)], 0),
        CubicKind::DoublePlusSingle => {
            let r = u_of(c).max(0.0).sqrt() / 3.0;
            let (double, single) = match cls.boundary {
                Some(CubicBoundary::C1) => (shift + r, shift - 2.0 * r),
                _ => (shift - r, shift + 2.0 * r),
            };
            match split_near_double(c, double) {
                Some([lo, hi]) => {
                    let single = polish_cubic_root(c, single, f64::INFINITY);
                    RootSet::from_values(c, vec![(lo, 1), (hi, 1), (single, 1)], 0)
                }
                None => RootSet::from_values(c, vec![(double, 2), (single, 1)], 0),
            }
        }
        CubicKind::ThreeDistinctReal => {
            let x = viete_three(shift, u_of(c).sqrt(), theta_for(c, cls));
            let mut polished = x;
            for i in 0..3 {
                let gap = (0..3)
                    .filter(|&j| j != i)
                    .map(|j| (x[i] - x[j]).abs())
                    .fold(f64::INFINITY, f64::min);
                polished[i] = polish_cubic_root(c, x[i], 0.5 * gap);
            }
            RootSet::from_values(c, polished.iter().map(|&v| (v, 1)).collect(), 0)
        }
        CubicKind::OneRealPlusComplexPair => RootSet::from_values(c, vec![(single_real_root(c), 1)], 1),
    }
}

pub fn viete_roots(c: &Cubic) -> RootSet {
    viete_roots_with(c, Tolerance::default())
}

pub fn viete_roots_with(c: &Cubic, tol: Tolerance) -> RootSet {
    roots_for(c, &classify_cubic_with(c, tol))
}

pub fn rotation_angle(c: &Cubic) -> Result<f64> {
    rotation_angle_with(c, Tolerance::default())
}

pub fn rotation_angle_with(c: &Cubic, tol: Tolerance) -> Result<f64> {
    let cls = classify_cubic_with(c, tol);
    let u = u_of(c);
    match cls.kind {
        CubicKind::ThreeDistinctReal | CubicKind::DoublePlusSingle => Ok(theta_for(c, &cls)),
        CubicKind::TripleReal => Err(Error::NoTriangle { value: u }),
        CubicKind::OneRealPlusComplexPair if u <= 0.0 => Err(Error::NoTriangle { value: u }),
        CubicKind::OneRealPlusComplexPair => {
            let c0 = expr::cubic_c0(&c.a(), &c.b());
            Err(Error::OutOfRange { value: -27.0 * (c.c() - c0) / (2.0 * u.powf(1.5)) })
        }
    }
}

fn build_triangle(c: &Cubic, cls: &CubicClassification, x: [f64; 3]) -> TriangleData {
    let shift = -c.a() / 3.0;
    let r = u_of(c).max(0.0).sqrt() / 3.0;
    let s3 = 3f64.sqrt();
    TriangleData {
        centroid_x: shift,
        incircle_radius: r,
        side: 12f64.sqrt() * r,
        theta: theta_for(c, cls),
        mu: [shift + r, shift - r],
        nu: [shift + s3 * r, shift, shift - s3 * r],
        xi: [shift - 2.0 * r, shift + 2.0 * r],
        vertices: [
            (x[0], (x[1] - x[2]) / s3),
            (x[1], (x[2] - x[0]) / s3),
            (x[2], (x[0] - x[1]) / s3),
        ],
    }
}

pub fn triangle_data(c: &Cubic) -> Result<TriangleData> {
    triangle_data_with(c, Tolerance::default())
}

pub fn triangle_data_with(c: &Cubic, tol: Tolerance) -> Result<TriangleData> {
    classify_cubic_with(c, tol).triangle.ok_or(Error::NoTriangle { value: u_of(c) })
}

pub fn cubic_isolation_intervals(c: &Cubic) -> Result<IsolationIntervals> {
    cubic_isolation_intervals_with(c, Tolerance::default())
}

pub fn cubic_isolation_intervals_with(c: &Cubic, tol: Tolerance) -> Result<IsolationIntervals> {
    let cls = classify_cubic_with(c, tol);
    let (Some(t), Some(th)) = (cls.triangle.as_ref(), cls.thresholds) else {
        return Err(Error::NoTriangle { value: u_of(c) });
    };
    let shift = t.centroid_x;
    let scale = c_scale(c.a(), c.b(), c.c(), u_of(c));
    let branch = if tol.compare("c", "c0", c.c(), th.c0, scale).ordering == Ordering::Greater {
        IsolationBranch::HighC
    } else {
        IsolationBranch::LowC
    };
    let [mu1, mu2] = t.mu;
    let [nu1, _, nu3] = t.nu;
    let [xi1, xi2] = t.xi;
    let intervals = match branch {
        IsolationBranch::LowC => {
            [Interval::new(nu3, mu2), Interval::new(mu2, shift), Interval::new(nu1, xi2)]
        }
        IsolationBranch::HighC => {
            [Interval::new(xi1, nu3), Interval::new(shift, mu1), Interval::new(mu1, nu1)]
        }
    };
    Ok(IsolationIntervals { branch, intervals })
}

/// θ at the band edges and at c₀, for reference.
pub const THETA_AT_C2: f64 = 0.0;
pub const THETA_AT_C0: f64 = FRAC_PI_6;
pub const THETA_AT_C1: f64 = FRAC_PI_3;

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic(a: f64, b: f64, c: f64) -> Cubic {
        Cubic::new(a, b, c).unwrap()
    }

    #[test]
    fn thresholds() {
        let th = cubic_thresholds(&cubic(0.0, -1.0, 0.0)).unwrap();
        assert_eq!(th.c0, 0.0);
        assert!((th.c1 - 2.0 / 27.0 * 27f64.sqrt()).abs() < 1e-15);
        assert!((th.c1 + th.c2).abs() < 1e-15);
        assert!(matches!(cubic_thresholds(&cubic(1.0, 1.0, 0.0)), Err(Error::NoTriangle { .. })));
    }

    #[test]
    fn derivative_thresholds_scale_to_quartic() {
        let th = cubic_thresholds(&cubic(2.25, 1.0, 0.0)).unwrap();
        assert!((4.0 * th.c0 + 0.375).abs() < 1e-15);
        assert!((4.0 * th.c1 - 0.5026415154433099).abs() < 1e-12);
        assert!((4.0 * th.c2 + 1.25264151544331).abs() < 1e-12);
    }

    #[test]
    fn kinds() {
        assert_eq!(classify_cubic(&cubic(0.0, -1.0, 0.0)).kind, CubicKind::ThreeDistinctReal);
        assert_eq!(classify_cubic(&cubic(0.0, 0.0, 0.0)).kind, CubicKind::TripleReal);
        assert_eq!(classify_cubic(&cubic(0.0, 3.0, 1.0)).kind, CubicKind::OneRealPlusComplexPair);
        let c1 = 2.0 / 27.0 * 27f64.sqrt();
        let cls = classify_cubic(&cubic(0.0, -1.0, c1));
        assert_eq!(cls.kind, CubicKind::DoublePlusSingle);
        assert_eq!(cls.boundary, Some(CubicBoundary::C1));
    }

    #[test]
    fn viete_simple() {
        let rs = viete_roots(&cubic(0.0, -1.0, 0.0));
        let x = rs.expanded();
        assert!((x[0] + 1.0).abs() < 1e-15 && x[1].abs() < 1e-15 && (x[2] - 1.0).abs() < 1e-15);
        let rs = viete_roots(&cubic(0.0, 3.0, 1.0));
        assert_eq!(rs.complex_pairs(), 1);
        assert!((rs.roots()[0].value + 0.3221853546260855).abs() < 1e-14);
    }

    #[test]
    fn viete_one_real_root_branches() {
        // u > 0 outside the band, u < 0, and u = 0
        for (a, b, c) in [(0.0, -1.0, 5.0), (1.0, 2.0, -3.0), (3.0, 3.0, 2.0), (-2.0, 5.0, 7.0)] {
            let p = cubic(a, b, c);
            let rs = viete_roots(&p);
            assert_eq!(rs.complex_pairs(), 1);
            assert!(p.eval(rs.roots()[0].value).abs() < 1e-12, "{a} {b} {c}");
        }
    }

    #[test]
    fn angles() {
        assert!((rotation_angle(&cubic(0.0, -1.0, 0.0)).unwrap() - FRAC_PI_6).abs() < 1e-15);
        let th = cubic_thresholds(&cubic(1.0, -2.0, 0.0)).unwrap();
        assert_eq!(rotation_angle(&cubic(1.0, -2.0, th.c2)).unwrap(), THETA_AT_C2);
        assert_eq!(rotation_angle(&cubic(1.0, -2.0, th.c1)).unwrap(), THETA_AT_C1);
        assert!((rotation_angle(&cubic(1.0, -2.0, th.c0)).unwrap() - THETA_AT_C0).abs() < 1e-12);
        assert!(matches!(rotation_angle(&cubic(0.0, -1.0, 5.0)), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn triangle() {
        let t = triangle_data(&cubic(0.0, -1.0, 0.0)).unwrap();
        assert!((t.incircle_radius - 3f64.sqrt() / 3.0).abs() < 1e-15);
        let xs: Vec<f64> = t.vertices.iter().map(|v| v.0).collect();
        assert!((xs[0] - 1.0).abs() < 1e-15 && xs[1].abs() < 1e-15 && (xs[2] + 1.0).abs() < 1e-15);
        let ysum: f64 = t.vertices.iter().map(|v| v.1).sum();
        assert!(ysum.abs() < 1e-15);
        assert!(matches!(triangle_data(&cubic(1.0, 1.0, 1.0)), Err(Error::NoTriangle { .. })));
        assert!(matches!(triangle_data(&cubic(0.0, 0.0, 0.0)), Err(Error::NoTriangle { .. })));
    }

    #[test]
    fn derivative_cubic_radius_matches_quartic_insphere() {
        // p4' / 4 for x^4 + 3x^3 + 2x^2 - x - 0.95
        let t = triangle_data(&cubic(2.25, 1.0, -0.25)).unwrap();
        let big_r = 3f64.sqrt() / 12.0 * 11f64.sqrt();
        assert!((t.incircle_radius - big_r).abs() < 1e-15);
        assert!((big_r - 0.4787).abs() < 5e-5);
    }

    #[test]
    fn isolation() {
        let iv = cubic_isolation_intervals(&cubic(0.0, -1.0, 0.0)).unwrap();
        assert_eq!(iv.branch, IsolationBranch::LowC);
        for (i, x) in [-1.0, 0.0, 1.0].iter().enumerate() {
            assert!(iv.intervals[i].contains(*x, 1e-12));
        }
    }

    #[test]
    fn near_double_roots_stay_distinct() {
        let r = [8.55859375, 9.0576171875, 9.0615234375];
        let cu = Cubic::new(-(r[0] + r[1] + r[2]), r[0] * r[1] + r[0] * r[2] + r[1] * r[2], -(r[0] * r[1] * r[2]))
            .unwrap();
        assert_eq!(classify_cubic(&cu).kind, CubicKind::DoublePlusSingle);
        let got = viete_roots(&cu).expanded();
        assert_eq!(got.len(), 3);
        for (x, want) in got.iter().zip(r) {
            assert!((x - want).abs() < 1e-13, "{x} vs {want}");
        }
        let exact = Cubic::new(0.0, -0.75, 0.25).unwrap();
        assert_eq!(viete_roots(&exact).multiplicities(), vec![1, 2]);
    }
}
