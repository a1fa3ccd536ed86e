//! Choosing b, c, d in turn so that the quartic has a requested root nature.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::Quartic;
use crate::quartic::{
    classify_quartic, decide_regime, quartic_thresholds_for, BandPosition, DRoots, DoublePosition,
    Nature, Regime,
};
use crate::tolerance::Tolerance;

/// Width of the window sampled below (or above) an unbounded half-line.
pub const SAMPLING_WINDOW: f64 = 10.0;

/// Fraction of a window kept clear of its ends when sampling at random.
const EDGE_GUARD: f64 = 0.01;

/// Open interval; a missing bound is infinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OpenInterval {
    pub lo: Option<f64>,
    pub hi: Option<f64>,
}

impl OpenInterval {
    pub fn new(lo: Option<f64>, hi: Option<f64>) -> Self {
        OpenInterval { lo, hi }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo.is_none_or(|l| x > l) && self.hi.is_none_or(|h| x < h)
    }

    /// Compact window used for sampling.
    pub fn window(&self) -> (f64, f64) {
        match (self.lo, self.hi) {
            (Some(l), Some(h)) => (l, h),
            (None, Some(h)) => (h - SAMPLING_WINDOW, h),
            (Some(l), None) => (l, l + SAMPLING_WINDOW),
            (None, None) => (-SAMPLING_WINDOW / 2.0, SAMPLING_WINDOW / 2.0),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AdmissibleSet {
    /// Finitely many admissible values.
    Points(Vec<f64>),
    /// Union of disjoint open intervals.
    Intervals(Vec<OpenInterval>),
}

impl AdmissibleSet {
    fn all() -> Self {
        AdmissibleSet::Intervals(vec![OpenInterval::new(None, None)])
    }

    fn below(h: f64) -> Self {
        AdmissibleSet::Intervals(vec![OpenInterval::new(None, Some(h))])
    }

    fn above(l: f64) -> Self {
        AdmissibleSet::Intervals(vec![OpenInterval::new(Some(l), None)])
    }

    fn between(l: f64, h: f64) -> Self {
        AdmissibleSet::Intervals(vec![OpenInterval::new(Some(l), Some(h))])
    }

    fn except(x: f64) -> Self {
        AdmissibleSet::Intervals(vec![OpenInterval::new(None, Some(x)), OpenInterval::new(Some(x), None)])
    }

    /// Membership; points match to a relative `eps`.
    pub fn contains(&self, x: f64, eps: f64) -> bool {
        match self {
            AdmissibleSet::Points(ps) => ps.iter().any(|p| (x - p).abs() <= eps * p.abs().max(x.abs()).max(1.0)),
            AdmissibleSet::Intervals(ivs) => ivs.iter().any(|iv| iv.contains(x)),
        }
    }

    fn pick(&self, rng: &mut Option<ChaCha8Rng>) -> f64 {
        match (self, rng) {
            (AdmissibleSet::Points(ps), None) => ps[0],
            (AdmissibleSet::Points(ps), Some(rng)) => ps[rng.gen_range(0..ps.len())],
            (AdmissibleSet::Intervals(ivs), None) => {
                let (l, h) = ivs[0].window();
                0.5 * (l + h)
            }
            (AdmissibleSet::Intervals(ivs), Some(rng)) => {
                let (l, h) = ivs[rng.gen_range(0..ivs.len())].window();
                let g = EDGE_GUARD * (h - l);
                rng.gen_range(l + g..=h - g)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Midpoint,
    RandomSeeded(u64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NatureTarget {
    pub nature: Nature,
    pub a: f64,
    pub b: Option<f64>,
    pub c: Option<f64>,
    pub strategy: Strategy,
}

impl NatureTarget {
    pub fn new(nature: Nature, a: f64) -> Self {
        NatureTarget { nature, a, b: None, c: None, strategy: Strategy::Midpoint }
    }
}

fn unachievable(nature: Nature, what: &str) -> Error {
    Error::Unachievable { reason: format!("{nature} is not reachable {what}") }
}

pub fn admissible_b_range(a: f64, nature: Nature) -> Result<AdmissibleSet> {
    let flat = 3.0 * a * a / 8.0;
    Ok(match nature {
        Nature::QuadrupleRoot => AdmissibleSet::Points(vec![flat]),
        n if n.real_root_count() == 4 => AdmissibleSet::below(flat),
        _ => AdmissibleSet::all(),
    })
}

fn regime_of(a: f64, b: f64, c: f64) -> Result<Regime> {
    let q = Quartic::new(a, b, c, 0.0)?;
    Ok(decide_regime(&q, Tolerance::default(), &mut Vec::new()))
}

pub fn admissible_c_range(a: f64, b: f64, nature: Nature) -> Result<AdmissibleSet> {
    let c0 = crate::expr::quartic_c0(&a, &b);
    let no_c = |what| Err(unachievable(nature, what));
    match regime_of(a, b, c0)? {
        Regime::NoBand { .. } => match nature {
            Nature::NoReal | Nature::TwoEqualReal | Nature::TwoDistinctReal => Ok(AdmissibleSet::all()),
            _ => no_c("with b > 3a^2/8"),
        },
        Regime::Flat { .. } => match nature {
            Nature::NoReal | Nature::TwoDistinctReal => Ok(AdmissibleSet::all()),
            Nature::TwoEqualReal => Ok(AdmissibleSet::except(c0)),
            Nature::QuadrupleRoot => Ok(AdmissibleSet::Points(vec![c0])),
            _ => no_c("with b = 3a^2/8"),
        },
        Regime::Band(_) => {
            let w = crate::quartic::band_half_width(crate::quartic::k_of(a, b));
            let (c1, c2) = (c0 + w, c0 - w);
            match nature {
                Nature::NoReal | Nature::TwoDistinctReal => Ok(AdmissibleSet::all()),
                Nature::TwoEqualReal => Ok(AdmissibleSet::except(c0)),
                Nature::FourDistinctReal | Nature::FourRealDoublePair(DoublePosition::MiddleTwo) => {
                    Ok(AdmissibleSet::between(c2, c1))
                }
                Nature::FourRealDoublePair(DoublePosition::LowestTwo) => Ok(AdmissibleSet::between(c2, c0)),
                Nature::FourRealDoublePair(DoublePosition::HighestTwo) => Ok(AdmissibleSet::between(c0, c1)),
                Nature::TwoDoublePairs => Ok(AdmissibleSet::Points(vec![c0])),
                Nature::TriplePlusSingle => Ok(AdmissibleSet::Points(vec![c2, c1])),
                Nature::QuadrupleRoot => no_c("with b < 3a^2/8"),
            }
        }
    }
}

pub fn admissible_d_range(a: f64, b: f64, c: f64, nature: Nature) -> Result<AdmissibleSet> {
    let regime = regime_of(a, b, c)?;
    let th = quartic_thresholds_for(&Quartic::new(a, b, c, 0.0)?, regime);
    let none = || Err(unachievable(nature, "for these a, b, c"));
    let set = match (th.d_roots, nature) {
        (DRoots::Single { d0 }, Nature::NoReal) | (DRoots::Triple { d0 }, Nature::NoReal) => AdmissibleSet::above(d0),
        (DRoots::Single { d0 }, Nature::TwoEqualReal) | (DRoots::Triple { d0 }, Nature::QuadrupleRoot) => {
            AdmissibleSet::Points(vec![d0])
        }
        (DRoots::Single { d0 }, Nature::TwoDistinctReal) | (DRoots::Triple { d0 }, Nature::TwoDistinctReal) => {
            AdmissibleSet::below(d0)
        }
        (DRoots::Single { .. } | DRoots::Triple { .. }, _) => return none(),
        (DRoots::Three { d1, d2, d3 }, n) => match n {
            Nature::NoReal => AdmissibleSet::above(d1),
            Nature::TwoEqualReal => AdmissibleSet::Points(vec![d1]),
            Nature::TwoDistinctReal => AdmissibleSet::Intervals(vec![
                OpenInterval::new(None, Some(d3)),
                OpenInterval::new(Some(d2), Some(d1)),
            ]),
            Nature::FourDistinctReal => AdmissibleSet::between(d3, d2),
            Nature::FourRealDoublePair(DoublePosition::MiddleTwo) => AdmissibleSet::Points(vec![d3]),
            Nature::FourRealDoublePair(DoublePosition::LowestTwo)
                if regime == Regime::Band(BandPosition::LowerBand) =>
            {
                AdmissibleSet::Points(vec![d2])
            }
            Nature::FourRealDoublePair(DoublePosition::HighestTwo)
                if regime == Regime::Band(BandPosition::UpperBand) =>
            {
                AdmissibleSet::Points(vec![d2])
            }
            _ => return none(),
        },
        (DRoots::Repeated { tilde, .. }, n) if matches!(regime, Regime::NoBand { .. }) => match n {
            Nature::NoReal => AdmissibleSet::above(tilde),
            Nature::TwoEqualReal => AdmissibleSet::Points(vec![tilde]),
            Nature::TwoDistinctReal => AdmissibleSet::below(tilde),
            _ => return none(),
        },
        (DRoots::Repeated { dagger, tilde }, n) if regime == Regime::Band(BandPosition::AtC0) => match n {
            Nature::NoReal => AdmissibleSet::above(dagger),
            Nature::TwoDoublePairs => AdmissibleSet::Points(vec![dagger]),
            Nature::FourDistinctReal => AdmissibleSet::between(tilde, dagger),
            Nature::FourRealDoublePair(DoublePosition::MiddleTwo) => AdmissibleSet::Points(vec![tilde]),
            Nature::TwoDistinctReal => AdmissibleSet::below(tilde),
            _ => return none(),
        },
        // c at C1 or C2
        (DRoots::Repeated { dagger, tilde }, n) => match n {
            Nature::NoReal => AdmissibleSet::above(tilde),
            Nature::TwoEqualReal => AdmissibleSet::Points(vec![tilde]),
            Nature::TwoDistinctReal => AdmissibleSet::Intervals(vec![
                OpenInterval::new(None, Some(dagger)),
                OpenInterval::new(Some(dagger), Some(tilde)),
            ]),
            Nature::TriplePlusSingle => AdmissibleSet::Points(vec![dagger]),
            _ => return none(),
        },
    };
    Ok(set)
}

/// Spacing on a dyadic grid: 1 for `Midpoint`, otherwise a multiple of 1/64 in [1/16, 4].
fn spacing(rng: &mut Option<ChaCha8Rng>, midpoint: f64) -> f64 {
    match rng {
        None => midpoint,
        Some(rng) => rng.gen_range(4..=256) as f64 / 64.0,
    }
}

/// (x − m)² (x² + e x + f) with e = a + 2m, so that a is kept exactly. For dyadic
/// a and m the remaining coefficients are exact, which keeps repeated roots
/// repeated rather than split by rounding.
fn with_double_root(a: f64, m: f64, f: f64) -> Result<Quartic> {
    let e = a + 2.0 * m;
    Quartic::new(a, f - 2.0 * m * e + m * m, m * m * e - 2.0 * m * f, m * m * f)
}

fn repeated_from_double_root(a: f64, nature: Nature, rng: &mut Option<ChaCha8Rng>) -> Result<Quartic> {
    let s = -a / 4.0;
    let flip = rng.as_mut().is_some_and(|r| r.gen_bool(0.5));
    let sign = if flip { -1.0 } else { 1.0 };
    match nature {
        Nature::QuadrupleRoot => with_double_root(a, s, s * s),
        Nature::TwoDoublePairs => {
            let h = spacing(rng, 1.0);
            with_double_root(a, s + h, (s - h) * (s - h))
        }
        Nature::TriplePlusSingle => {
            let h = sign * spacing(rng, 1.0);
            with_double_root(a, s + h, (s + h) * (s - 3.0 * h))
        }
        Nature::FourRealDoublePair(pos) => {
            let (h1, h2) = (spacing(rng, 1.0), spacing(rng, 2.0));
            let (m, u, v) = match pos {
                DoublePosition::LowestTwo => {
                    let m = s - (2.0 * h1 + h2) / 4.0;
                    (m, m + h1, m + h1 + h2)
                }
                DoublePosition::MiddleTwo => {
                    let m = s + (h1 - h2) / 4.0;
                    (m, m - h1, m + h2)
                }
                DoublePosition::HighestTwo => {
                    let m = s + (2.0 * h1 + h2) / 4.0;
                    (m, m - h1 - h2, m - h1)
                }
            };
            with_double_root(a, m, u * v)
        }
        Nature::TwoEqualReal => {
            // double root m, complex pair α ± iβ with 2m + 2α = −a
            let m = s + sign * spacing(rng, 0.5);
            let alpha = -a / 2.0 - m;
            let beta = spacing(rng, 1.0);
            with_double_root(a, m, alpha * alpha + beta * beta)
        }
        _ => unreachable!("{nature} has no repeated root"),
    }
}

/// Build a quartic with the target nature, checked by classifying it.
pub fn synthesize(target: &NatureTarget) -> Result<Quartic> {
    let eps = Tolerance::default().eps;
    let mut rng = match target.strategy {
        Strategy::Midpoint => None,
        Strategy::RandomSeeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let (a, nature) = (target.a, target.nature);
    if nature.is_repeated() && target.b.is_none() && target.c.is_none() {
        return round_trip(repeated_from_double_root(a, nature, &mut rng), nature);
    }
    let b_set = admissible_b_range(a, nature)?;
    let b = match target.b {
        Some(b) if b_set.contains(b, eps) => b,
        Some(b) => return Err(unachievable(nature, &format!("with b = {b}"))),
        None => b_set.pick(&mut rng),
    };
    let c_set = admissible_c_range(a, b, nature)?;
    let c = match target.c {
        Some(c) if c_set.contains(c, eps) => c,
        Some(c) => return Err(unachievable(nature, &format!("with c = {c}"))),
        None => c_set.pick(&mut rng),
    };
    let d = admissible_d_range(a, b, c, nature)?.pick(&mut rng);
    round_trip(Quartic::new(a, b, c, d), nature)
}

fn round_trip(q: Result<Quartic>, nature: Nature) -> Result<Quartic> {
    let q = q?;
    let got = classify_quartic(&q).nature;
    if got != nature {
        return Err(Error::RoundTripMismatch { expected: nature.to_string(), got: got.to_string() });
    }
    Ok(q)
}
