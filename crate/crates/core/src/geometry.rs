//! The regular tetrahedron attached to a quartic with four real roots, the
//! resulting root and span bounds, and root localization intervals.

use crate::cubic::IsolationBranch;
use crate::error::{Error, Result};
use crate::poly::{Interval, Quartic};
use crate::quartic::{k_of, BandPosition, QuarticClassification, Regime};

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TetrahedronData {
    pub center_x: f64,
    /// Insphere radius R.
    pub insphere_radius: f64,
    /// Edge L = √24 R.
    pub edge: f64,
    /// Side of a face triangle, l = √12 R.
    pub triangle_side: f64,
    /// Height h = 4R.
    pub height: f64,
    /// Inflection points ρ₁ > ρ₂.
    pub rho: [f64; 2],
    /// φ₁ < φ₂.
    pub phi: [f64; 2],
    /// Stationary points at c = C₀, σ₁ > σ₂ > σ₃.
    pub sigma: [f64; 3],
    pub lambda_min: f64,
    pub lambda_max: f64,
}

fn radius(a: f64, b: f64, allow_flat: bool) -> Result<f64> {
    let k = k_of(a, b);
    if !k.is_finite() {
        return Err(Error::NonFinite { name: "3a^2-8b", value: k });
    }
    // k vanishing up to rounding is treated as zero
    let k = if k.abs() <= 1e-14 * (3.0 * a * a).max(8.0 * b.abs()) { 0.0 } else { k };
    if k < 0.0 || (k == 0.0 && !allow_flat) {
        return Err(Error::NoTetrahedron { value: k });
    }
    Ok(SQRT3 / 12.0 * k.sqrt())
}

fn build(a: f64, r: f64) -> TetrahedronData {
    let s = -a / 4.0;
    TetrahedronData {
        center_x: s,
        insphere_radius: r,
        edge: 24f64.sqrt() * r,
        triangle_side: 12f64.sqrt() * r,
        height: 4.0 * r,
        rho: [s + r, s - r],
        phi: [s - 2.0 * r, s + 2.0 * r],
        sigma: [s + SQRT3 * r, s, s - SQRT3 * r],
        lambda_min: s - 3.0 * r,
        lambda_max: s + 3.0 * r,
    }
}

pub fn tetrahedron_data(a: f64, b: f64) -> Result<TetrahedronData> {
    Ok(build(a, radius(a, b, false)?))
}

/// (λ_min, λ_max): no quartic with four real roots and these (a, b) has a root
/// outside. Accepts 3a² − 8b = 0, where both collapse onto the quadruple root.
pub fn root_bounds(a: f64, b: f64) -> Result<(f64, f64)> {
    let t = build(a, radius(a, b, true)?);
    Ok((t.lambda_min, t.lambda_max))
}

/// (h, L). L bounds the span max − min of four real roots from above and is
/// attained by (−s, 0, 0, s) about −a/4. The span can fall below h: two double
/// pairs give the side l = h·√3/2, the true minimum.
pub fn span_bounds(a: f64, b: f64) -> Result<(f64, f64)> {
    let t = build(a, radius(a, b, true)?);
    Ok((t.height, t.edge))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalizationResult {
    pub branch: IsolationBranch,
    /// Intervals for the ascending roots x₄ ≤ x₃ ≤ x₂ ≤ x₁.
    pub intervals: [Interval; 4],
    /// c = C₀, where both branches apply and LowC is returned.
    pub tie_at_c0: bool,
    pub tetrahedron: TetrahedronData,
}

pub fn localize_roots(q: &Quartic, cls: &QuarticClassification) -> Result<LocalizationResult> {
    if cls.nature.real_root_count() != 4 {
        return Err(Error::NotFourReal { reason: format!("nature is {}", cls.nature) });
    }
    let (branch, tie) = match cls.regime {
        Regime::Band(BandPosition::AtC2 | BandPosition::LowerBand) => (IsolationBranch::LowC, false),
        Regime::Band(BandPosition::AtC0) | Regime::Flat { at_c0: true } => (IsolationBranch::LowC, true),
        Regime::Band(BandPosition::UpperBand | BandPosition::AtC1) => (IsolationBranch::HighC, false),
        _ => {
            return Err(Error::NotFourReal { reason: "c lies outside [C2, C1]".to_string() });
        }
    };
    let t = build(q.a(), radius(q.a(), q.b(), true)?);
    let s = t.center_x;
    let intervals = match branch {
        IsolationBranch::LowC => [
            Interval::new(t.lambda_min, t.rho[1]),
            Interval::new(t.sigma[2], s),
            Interval::new(t.rho[1], t.phi[1]),
            Interval::new(t.sigma[0], t.lambda_max),
        ],
        IsolationBranch::HighC => [
            Interval::new(t.lambda_min, t.sigma[2]),
            Interval::new(t.phi[0], t.rho[0]),
            Interval::new(s, t.sigma[0]),
            Interval::new(t.rho[0], t.lambda_max),
        ],
    };
    Ok(LocalizationResult { branch, intervals, tie_at_c0: tie, tetrahedron: t })
}
