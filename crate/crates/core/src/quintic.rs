//! Discriminant cascade of x⁵ + p x⁴ + q x³ + r x² + s x + t in the free term.

use crate::error::{Error, Result};
use crate::oracle::{self, OracleConfig};
use crate::poly::{Quartic, Quintic};
use crate::quartic::{classify_quartic, Nature};

/// (coefficient, exponents of p, q, r, s).
type Term = (f64, [i32; 4]);

const T3: &[Term] = &[
    (256.0, [5, 0, 0, 0]),
    (-1600.0, [3, 1, 0, 0]),
    (2000.0, [2, 0, 1, 0]),
    (2250.0, [1, 2, 0, 0]),
    (-2500.0, [1, 0, 0, 1]),
    (-3750.0, [0, 1, 1, 0]),
];

const T2: &[Term] = &[
    (-192.0, [4, 1, 0, 1]),
    (-128.0, [4, 0, 2, 0]),
    (144.0, [3, 2, 1, 0]),
    (-27.0, [2, 4, 0, 0]),
    (160.0, [3, 0, 1, 1]),
    (1020.0, [2, 2, 0, 1]),
    (560.0, [2, 1, 2, 0]),
    (108.0, [0, 5, 0, 0]),
    (-630.0, [1, 3, 1, 0]),
    (-50.0, [2, 0, 0, 2]),
    (-2050.0, [1, 1, 1, 1]),
    (-900.0, [1, 0, 3, 0]),
    (-900.0, [0, 3, 0, 1]),
    (825.0, [0, 2, 2, 0]),
    (2000.0, [0, 1, 0, 2]),
    (2250.0, [0, 0, 2, 1]),
];

const T1: &[Term] = &[
    (144.0, [4, 0, 1, 2]),
    (-6.0, [3, 2, 0, 2]),
    (-80.0, [3, 1, 2, 1]),
    (16.0, [3, 0, 4, 0]),
    (18.0, [2, 3, 1, 1]),
    (-4.0, [2, 2, 3, 0]),
    (-36.0, [3, 0, 0, 3]),
    (-746.0, [2, 1, 1, 2]),
    (24.0, [2, 0, 3, 1]),
    (24.0, [1, 3, 0, 2]),
    (356.0, [1, 2, 2, 1]),
    (-72.0, [1, 1, 4, 0]),
    (-72.0, [0, 4, 1, 1]),
    (16.0, [0, 3, 3, 0]),
    (160.0, [1, 1, 0, 3]),
    (1020.0, [1, 0, 2, 2]),
    (560.0, [0, 2, 1, 2]),
    (-630.0, [0, 1, 3, 1]),
    (108.0, [0, 0, 5, 0]),
    (-1600.0, [0, 0, 1, 3]),
];

const T0: &[Term] = &[
    (-27.0, [4, 0, 0, 4]),
    (18.0, [3, 1, 1, 3]),
    (-4.0, [3, 0, 3, 2]),
    (-4.0, [2, 3, 0, 3]),
    (1.0, [2, 2, 2, 2]),
    (144.0, [2, 1, 0, 4]),
    (-6.0, [2, 0, 2, 3]),
    (-80.0, [1, 2, 1, 3]),
    (18.0, [1, 1, 3, 2]),
    (16.0, [0, 4, 0, 3]),
    (-4.0, [0, 3, 2, 2]),
    (-192.0, [1, 0, 1, 4]),
    (-128.0, [0, 2, 0, 4]),
    (144.0, [0, 1, 2, 3]),
    (-27.0, [0, 0, 4, 2]),
    (256.0, [0, 0, 0, 5]),
];

/// Squared bracket of Δ_t, as a cubic in s: coefficients of s³, s², s, 1 over (p, q, r).
const SQ: [&[(f64, [i32; 3])]; 4] = [
    &[(8000.0, [0, 0, 0])],
    &[(-1408.0, [4, 0, 0]), (7040.0, [2, 1, 0]), (-9600.0, [1, 0, 1]), (-5200.0, [0, 2, 0])],
    &[
        (64.0, [8, 0, 0]),
        (-640.0, [6, 1, 0]),
        (896.0, [5, 0, 1]),
        (2064.0, [4, 2, 0]),
        (-4192.0, [3, 1, 1]),
        (-2392.0, [2, 3, 0]),
        (3120.0, [2, 0, 2]),
        (2000.0, [1, 2, 1]),
        (1120.0, [0, 4, 0]),
        (1800.0, [0, 1, 2]),
    ],
    &[
        (-32.0, [7, 1, 1]),
        (8.0, [6, 3, 0]),
        (16.0, [6, 0, 2]),
        (288.0, [5, 2, 1]),
        (-69.0, [4, 4, 0]),
        (-568.0, [4, 1, 2]),
        (-660.0, [3, 3, 1]),
        (168.0, [2, 5, 0]),
        (208.0, [3, 0, 3]),
        (2234.0, [2, 2, 2]),
        (80.0, [1, 4, 1]),
        (-80.0, [0, 6, 0]),
        (-2340.0, [1, 1, 3]),
        (-440.0, [0, 3, 2]),
        (675.0, [0, 0, 4]),
    ],
];

/// Cubed bracket of Δ_t.
const CB: [&[(f64, [i32; 3])]; 4] = [
    &[(-2000.0, [0, 0, 0])],
    &[(432.0, [4, 0, 0]), (-2160.0, [2, 1, 0]), (2400.0, [1, 0, 1]), (1800.0, [0, 2, 0])],
    &[
        (-432.0, [3, 1, 1]),
        (108.0, [2, 3, 0]),
        (120.0, [2, 0, 2]),
        (1800.0, [1, 2, 1]),
        (-405.0, [0, 4, 0]),
        (-2700.0, [0, 1, 2]),
    ],
    &[
        (128.0, [3, 0, 3]),
        (-36.0, [2, 2, 2]),
        (-540.0, [1, 1, 3]),
        (135.0, [0, 3, 2]),
        (675.0, [0, 0, 4]),
    ],
];

/// Constant of the expanded Δ̃_s.
pub const DELTA_S_EXPANDED: f64 = -5_038_848.0;
/// Constant of Δ̃_s written through (r − R₀) and (r − R₁,₂): the expanded
/// constant times 25² · 25³.
pub const DELTA_S_FACTORED: f64 = -49_207_500_000_000.0;

fn eval4(terms: &[Term], v: [f64; 4]) -> f64 {
    terms
        .iter()
        .map(|(c, e)| c * v[0].powi(e[0]) * v[1].powi(e[1]) * v[2].powi(e[2]) * v[3].powi(e[3]))
        .sum()
}

fn eval3(terms: &[(f64, [i32; 3])], v: [f64; 3]) -> f64 {
    terms.iter().map(|(c, e)| c * v[0].powi(e[0]) * v[1].powi(e[1]) * v[2].powi(e[2])).sum()
}

fn cubic_in_s(br: &[&[(f64, [i32; 3])]; 4], p: f64, q: f64, r: f64, s: f64) -> f64 {
    br.iter().fold(0.0, |acc, t| acc * s + eval3(t, [p, q, r]))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuinticCascade {
    /// Δ₅ = Σ delta5_coeffs[i] t^(4 − i); the leading entry is 3125.
    pub delta5_coeffs: [f64; 5],
    pub delta_t: f64,
    /// The squared and cubed brackets of Δ_t.
    pub delta_t_factors: (f64, f64),
    pub delta_tilde_s: f64,
    /// Δ̃_s through R₀, R₁,₂; `None` when R₁,₂ are not real.
    pub delta_tilde_s_factored: Option<f64>,
    pub delta_tilde_r: f64,
    pub r0: f64,
    /// (R₁, R₂) with R₁ ≥ R₂, defined when 2p² − 5q ≥ 0.
    pub r12: Option<(f64, f64)>,
}

impl QuinticCascade {
    pub fn delta5(&self, t: f64) -> f64 {
        self.delta5_coeffs.iter().fold(0.0, |acc, c| acc * t + c)
    }
}

pub fn quintic_cascade(p: f64, q: f64, r: f64, s: f64) -> QuinticCascade {
    let v = [p, q, r, s];
    let delta5_coeffs = [3125.0, eval4(T3, v), eval4(T2, v), eval4(T1, v), eval4(T0, v)];
    let sq = cubic_in_s(&SQ, p, q, r, s);
    let cb = cubic_in_s(&CB, p, q, r, s);
    let delta_t = -256.0 * sq * sq * cb * cb * cb;
    let lin = 4.0 * p.powi(3) - 15.0 * p * q + 25.0 * r;
    let quad = 8.0 * p.powi(3) * r - 3.0 * p * p * q * q - 30.0 * p * q * r + 10.0 * q.powi(3) + 25.0 * r * r;
    let delta_tilde_s = DELTA_S_EXPANDED * lin * lin * quad.powi(3);
    let k5 = 2.0 * p * p - 5.0 * q;
    let delta_tilde_r = 8.0 * k5.powi(3);
    let r0 = -4.0 * p.powi(3) / 25.0 + 3.0 * p * q / 5.0;
    let r12 = (k5 >= 0.0).then(|| {
        let w = 2f64.sqrt() / 25.0 * k5.powi(3).sqrt();
        (r0 + w, r0 - w)
    });
    let delta_tilde_s_factored =
        r12.map(|(r1, r2)| DELTA_S_FACTORED * (r - r0).powi(2) * ((r - r2) * (r - r1)).powi(3));
    QuinticCascade {
        delta5_coeffs,
        delta_t,
        delta_t_factors: (sq, cb),
        delta_tilde_s,
        delta_tilde_s_factored,
        delta_tilde_r,
        r0,
        r12,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignChanges {
    /// Number of sign changes of Δ₅ as t runs over the reals.
    pub count: usize,
    /// Real roots of Δ₅(t), ascending.
    pub t_roots: Vec<f64>,
    /// Nature of the monic quartic Δ₅ / 3125.
    pub nature: Nature,
    /// Real stationary points of x⁵ + p x⁴ + q x³ + r x² + s x where the
    /// derivative changes sign.
    pub stationary_extrema: usize,
}

/// Sign changes of Δ₅(t), found by classifying Δ₅ / 3125 as a quartic in t.
///
/// Every sign change is a critical value −f(x₀) at an extremum x₀ of
/// f = x⁵ + p x⁴ + q x³ + r x² + s x, so `count` equals `stationary_extrema`
/// unless two extrema share a critical value, which makes Δ_t vanish.
pub fn delta5_sign_changes(p: f64, q: f64, r: f64, s: f64) -> Result<SignChanges> {
    let cascade = quintic_cascade(p, q, r, s);
    let c = cascade.delta5_coeffs;
    let monic = Quartic::from_coefficients(c[0], c[1], c[2], c[3], c[4])?;
    let cls = classify_quartic(&monic);
    if cls.nature.is_repeated() {
        return Err(Error::DegenerateAtBoundary { value: cascade.delta_t });
    }
    let roots = oracle::solve(&monic, &OracleConfig::default())?;
    let t_roots: Vec<f64> = roots.roots().iter().map(|x| x.value).collect();
    let count = cls.nature.real_root_count();
    if t_roots.len() != count {
        return Err(Error::DegenerateAtBoundary { value: cascade.delta_t });
    }
    let (_, deriv) = Quintic::new(p, q, r, s, 0.0)?.derivative();
    let stationary = classify_quartic(&deriv);
    let stationary_extrema = match stationary.nature {
        Nature::NoReal | Nature::TwoEqualReal | Nature::QuadrupleRoot => 0,
        Nature::TwoDistinctReal | Nature::TriplePlusSingle => 2,
        Nature::FourDistinctReal => 4,
        // a double stationary point is not an extremum
        Nature::FourRealDoublePair(_) => 2,
        Nature::TwoDoublePairs => 0,
    };
    Ok(SignChanges { count, t_roots, nature: cls.nature, stationary_extrema })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_discriminant;

    #[test]
    fn delta5_matches_root_products() {
        let cfg = OracleConfig::default();
        for &(p, q, r, s, t) in &[
            (0.3, -1.2, 0.7, 0.4, -0.25),
            (-1.0, 0.5, 2.0, -1.5, 0.8),
            (2.0, 1.0, -3.0, 0.5, 1.5),
        ] {
            let c = quintic_cascade(p, q, r, s);
            let brute = brute_discriminant(&Quintic::new(p, q, r, s, t).unwrap(), &cfg).unwrap();
            let got = c.delta5(t);
            assert!((got - brute).abs() <= 1e-7 * brute.abs().max(1.0), "{got} vs {brute}");
        }
    }

    #[test]
    fn delta_r_and_r_spacing() {
        let (p, q) = (1.5, 0.2);
        let c = quintic_cascade(p, q, 0.3, 0.0);
        let k5 = 2.0 * p * p - 5.0 * q;
        assert_eq!(c.delta_tilde_r, 8.0 * k5.powi(3));
        let (r1, r2) = c.r12.unwrap();
        assert!((r1 - r2 - 2.0 * 2f64.sqrt() / 25.0 * k5.powi(3).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn delta_s_forms_agree() {
        for &(p, q, r) in &[(1.5, 0.2, 0.3), (-2.0, -1.0, 0.7), (0.5, 0.0, -0.1)] {
            let c = quintic_cascade(p, q, r, 0.0);
            let f = c.delta_tilde_s_factored.unwrap();
            assert!((f - c.delta_tilde_s).abs() <= 1e-10 * c.delta_tilde_s.abs(), "{f} {}", c.delta_tilde_s);
        }
    }

    #[test]
    fn zero_quintic() {
        let c = quintic_cascade(0.0, 0.0, 0.0, 0.0);
        assert_eq!(c.delta5_coeffs, [3125.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(c.delta_tilde_r, 0.0);
        assert!(matches!(delta5_sign_changes(0.0, 0.0, 0.0, 0.0), Err(Error::DegenerateAtBoundary { .. })));
    }

    #[test]
    fn monotone_quintic() {
        let sc = delta5_sign_changes(0.0, 0.0, 0.0, 1.0).unwrap();
        assert_eq!(sc.count, 0);
        assert_eq!(sc.stationary_extrema, 0);
    }

    #[test]
    fn five_real_roots() {
        // (x+2)(x+1)x(x-1)(x-2.5) = x^5 - 0.5x^4 - 6.5x^3 + 2.5x^2 + 5x
        let sc = delta5_sign_changes(-0.5, -6.5, 2.5, 5.0).unwrap();
        assert_eq!(sc.count, 4);
        assert_eq!(sc.stationary_extrema, 4);
        let cfg = OracleConfig::default();
        // between consecutive t-roots the number of real quintic roots changes by two
        let mut probes = vec![sc.t_roots[0] - 1.0];
        probes.extend(sc.t_roots.windows(2).map(|w| 0.5 * (w[0] + w[1])));
        probes.push(sc.t_roots[3] + 1.0);
        let counts: Vec<usize> = probes
            .iter()
            .map(|&t| oracle::solve(&Quintic::new(-0.5, -6.5, 2.5, 5.0, t).unwrap(), &cfg).unwrap().real_count())
            .collect();
        for w in counts.windows(2) {
            assert_eq!(w[0].abs_diff(w[1]), 2, "{counts:?}");
        }
    }
}
