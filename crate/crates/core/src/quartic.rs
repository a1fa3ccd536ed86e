//! Complete root classification of the monic quartic.
//!
//! The cascade compares b with 3a²/8, then c with C₂, C₀, C₁, then d with the
//! real roots of the discriminant Δ viewed as a cubic in d. Every comparison is
//! recorded so callers can audit how close a verdict came to a boundary.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::cubic::{self, nearest_equal, polish_cubic_root, viete_three};
use crate::expr;
use twofloat::TwoFloat;
use crate::poly::{Cubic, MonicPolynomial, Quadratic, Quartic, RootSet};
use crate::tolerance::{max_abs, Comparison, Tolerance};

/// Where the repeated pair sits among four real roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DoublePosition {
    LowestTwo,
    MiddleTwo,
    HighestTwo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Nature {
    NoReal,
    TwoEqualReal,
    TwoDistinctReal,
    FourDistinctReal,
    FourRealDoublePair(DoublePosition),
    TwoDoublePairs,
    TriplePlusSingle,
    QuadrupleRoot,
}

impl Nature {
    /// Number of real roots counted with multiplicity.
    pub fn real_root_count(self) -> usize {
        match self {
            Nature::NoReal => 0,
            Nature::TwoEqualReal | Nature::TwoDistinctReal => 2,
            _ => 4,
        }
    }

    /// Whether Δ vanishes for this nature.
    pub fn is_repeated(self) -> bool {
        !matches!(self, Nature::NoReal | Nature::TwoDistinctReal | Nature::FourDistinctReal)
    }

    /// Real-root multiplicities in ascending root order, with the number of
    /// complex-conjugate pairs. `TriplePlusSingle` admits two orders.
    pub fn matches(self, roots: &RootSet) -> bool {
        let m = roots.multiplicities();
        let pairs = roots.complex_pairs();
        match self {
            Nature::NoReal => m.is_empty(),
            Nature::TwoEqualReal => m == [2] && pairs == 1,
            Nature::TwoDistinctReal => m == [1, 1] && pairs == 1,
            Nature::FourDistinctReal => m == [1, 1, 1, 1],
            Nature::FourRealDoublePair(DoublePosition::LowestTwo) => m == [2, 1, 1],
            Nature::FourRealDoublePair(DoublePosition::MiddleTwo) => m == [1, 2, 1],
            Nature::FourRealDoublePair(DoublePosition::HighestTwo) => m == [1, 1, 2],
            Nature::TwoDoublePairs => m == [2, 2],
            Nature::TriplePlusSingle => m == [1, 3] || m == [3, 1],
            Nature::QuadrupleRoot => m == [4],
        }
    }

    /// The nature implied by a root multiplicity pattern, if any.
    pub fn from_roots(roots: &RootSet) -> Option<Nature> {
        Nature::ALL.into_iter().find(|n| n.matches(roots))
    }

    pub const ALL: [Nature; 10] = [
        Nature::NoReal,
        Nature::TwoEqualReal,
        Nature::TwoDistinctReal,
        Nature::FourDistinctReal,
        Nature::FourRealDoublePair(DoublePosition::LowestTwo),
        Nature::FourRealDoublePair(DoublePosition::MiddleTwo),
        Nature::FourRealDoublePair(DoublePosition::HighestTwo),
        Nature::TwoDoublePairs,
        Nature::TriplePlusSingle,
        Nature::QuadrupleRoot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Nature::NoReal => "no-real",
            Nature::TwoEqualReal => "two-equal",
            Nature::TwoDistinctReal => "two-distinct",
            Nature::FourDistinctReal => "four-distinct",
            Nature::FourRealDoublePair(DoublePosition::LowestTwo) => "double-lowest",
            Nature::FourRealDoublePair(DoublePosition::MiddleTwo) => "double-middle",
            Nature::FourRealDoublePair(DoublePosition::HighestTwo) => "double-highest",
            Nature::TwoDoublePairs => "two-double-pairs",
            Nature::TriplePlusSingle => "triple-single",
            Nature::QuadrupleRoot => "quadruple",
        }
    }
}

impl fmt::Display for Nature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownNature(pub String);

impl fmt::Display for UnknownNature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = Nature::ALL.iter().map(|n| n.name()).collect();
        write!(f, "unknown nature {:?} (expected one of {})", self.0, names.join(", "))
    }
}

impl std::error::Error for UnknownNature {}

impl FromStr for Nature {
    type Err = UnknownNature;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Nature::ALL
            .into_iter()
            .find(|n| n.name() == key || format!("{n:?}").to_ascii_lowercase() == key.replace('-', ""))
            .ok_or_else(|| UnknownNature(s.to_string()))
    }
}

/// The 32 cases of the classification, numbered (i) to (xxxii).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassificationCase(u8);

const ROMAN: [&str; 32] = [
    "i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii", "xiv", "xv", "xvi",
    "xvii", "xviii", "xix", "xx", "xxi", "xxii", "xxiii", "xxiv", "xxv", "xxvi", "xxvii", "xxviii",
    "xxix", "xxx", "xxxi", "xxxii",
];

impl ClassificationCase {
    pub fn new(number: u8) -> Option<Self> {
        (1..=32).contains(&number).then_some(ClassificationCase(number))
    }

    pub fn number(self) -> u8 {
        self.0
    }

    pub fn label(self) -> &'static str {
        ROMAN[self.0 as usize - 1]
    }

    pub fn from_label(label: &str) -> Option<Self> {
        let l = label.trim().trim_matches(|c| c == '(' || c == ')').to_ascii_lowercase();
        ROMAN.iter().position(|r| *r == l).map(|i| ClassificationCase(i as u8 + 1))
    }

    pub fn all() -> impl Iterator<Item = ClassificationCase> {
        (1..=32).map(ClassificationCase)
    }
}

impl fmt::Display for ClassificationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.label())
    }
}

/// Position of c relative to the band (C₂, C₁) when 3a² − 8b > 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BandPosition {
    BelowC2,
    AtC2,
    LowerBand,
    AtC0,
    UpperBand,
    AtC1,
    AboveC1,
}

/// The (b, c) part of the cascade.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// b > 3a²/8.
    NoBand { at_c0: bool },
    /// b = 3a²/8.
    Flat { at_c0: bool },
    /// b < 3a²/8.
    Band(BandPosition),
}

/// Real roots of Δ(d) = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DRoots {
    Three { d1: f64, d2: f64, d3: f64 },
    Single { d0: f64 },
    Triple { d0: f64 },
    Repeated { dagger: f64, tilde: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuarticThresholds {
    pub c0: f64,
    pub c1: Option<f64>,
    pub c2: Option<f64>,
    /// (A, B, C) with Δ(d) = 256 (d³ + A d² + B d + C).
    pub abc: (f64, f64, f64),
    pub d_roots: DRoots,
}

impl QuarticThresholds {
    pub fn d_dagger(&self) -> Option<f64> {
        match self.d_roots {
            DRoots::Repeated { dagger, .. } => Some(dagger),
            _ => None,
        }
    }

    pub fn d_tilde(&self) -> Option<f64> {
        match self.d_roots {
            DRoots::Repeated { tilde, .. } => Some(tilde),
            DRoots::Triple { d0 } => Some(d0),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arithmetic {
    Float,
    Rational,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuarticClassification {
    pub case: ClassificationCase,
    pub nature: Nature,
    pub regime: Regime,
    pub thresholds: QuarticThresholds,
    pub closed_form_roots: Option<RootSet>,
    /// Every threshold comparison made, in cascade order.
    pub comparisons: Vec<Comparison>,
    pub arithmetic: Arithmetic,
}

impl QuarticClassification {
    pub fn is_fragile(&self) -> bool {
        self.comparisons.iter().any(Comparison::is_fragile)
    }
}

pub(crate) fn k_of(a: f64, b: f64) -> f64 {
    3.0 * a * a - 8.0 * b
}

pub(crate) fn b_scale(a: f64, b: f64) -> f64 {
    max_abs(&[3.0 * a * a / 8.0, b])
}

pub(crate) fn c_scale(a: f64, b: f64, c: f64) -> f64 {
    let k = k_of(a, b);
    max_abs(&[c, a.powi(3) / 8.0, a * b / 2.0, 3f64.sqrt() / 72.0 * k.abs().powf(1.5)])
}

pub(crate) fn d_scale(d: f64, abc: (f64, f64, f64)) -> f64 {
    max_abs(&[d, abc.0, abc.1.abs().sqrt(), abc.2.cbrt()])
}

/// Half-width of the band: (√3/72)·√((3a² − 8b)³).
pub(crate) fn band_half_width(k: f64) -> f64 {
    3f64.sqrt() / 72.0 * k.max(0.0).powf(1.5)
}

/// Δ₃, the discriminant of Δ(d) as a cubic in d, from its factored form
/// −1289945088 (c − C₀)² [(c − C₁)(c − C₂)]³.
///
/// (c − C₁)(c − C₂) = (c − C₀)² − 3k³/5184 also holds when C₁,₂ are complex.
pub fn delta3(q: &Quartic) -> f64 {
    let k = k_of(q.a(), q.b());
    let e = q.c() - expr::quartic_c0(&q.a(), &q.b());
    let g = e * e - 3.0 * k.powi(3) / 5184.0;
    -1289945088.0 * e * e * g.powi(3)
}

/// Δ₃ from the expanded form
/// −314928 (a³ − 4ab + 8c)² [4c² + a(a² − 4b)c − (b²/3)(a² − 32b/9)]³.
pub fn delta3_expanded(q: &Quartic) -> f64 {
    let (a, b, c) = (q.a(), q.b(), q.c());
    let s = a.powi(3) - 4.0 * a * b + 8.0 * c;
    let t = 4.0 * c * c + a * (a * a - 4.0 * b) * c - b * b / 3.0 * (a * a - 32.0 * b / 9.0);
    -314928.0 * s * s * t.powi(3)
}

/// Δ₂ = (3a² − 8b)³/27, the discriminant of the bracketed quadratic in c.
pub fn delta2(a: f64, b: f64) -> f64 {
    k_of(a, b).powi(3) / 27.0
}

fn free_term_monic_dd(a: f64, b: f64, c: f64) -> (TwoFloat, TwoFloat, TwoFloat) {
    let t = |x: f64| TwoFloat::from(x);
    expr::free_term_monic(&t(a), &t(b), &t(c))
}

fn eval_dd(abc: &(TwoFloat, TwoFloat, TwoFloat), x: f64) -> TwoFloat {
    let x = TwoFloat::from(x);
    ((x + abc.0) * x + abc.1) * x + abc.2
}

/// Bisect to the last bit on a sign change of the double-double residual.
fn bisect(abc: &(TwoFloat, TwoFloat, TwoFloat), mut lo: f64, mut hi: f64, rising: bool) -> f64 {
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f = f64::from(eval_dd(abc, mid));
        if f == 0.0 {
            return mid;
        }
        if (f < 0.0) == rising {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// The only real root, bracketed by stepping outward from an estimate.
fn bracket_single(abc: &(TwoFloat, TwoFloat, TwoFloat), start: f64, step: f64) -> f64 {
    let f0 = f64::from(eval_dd(abc, start));
    if f0 == 0.0 || !f0.is_finite() || !(step > 0.0) {
        return start;
    }
    // the cubic is monic, so the root lies to the right where f < 0
    let dir = if f0 < 0.0 { 1.0 } else { -1.0 };
    let mut reach = step;
    let mut far = start + dir * reach;
    for _ in 0..2100 {
        if f64::from(eval_dd(abc, far)) * f0 <= 0.0 {
            break;
        }
        reach *= 2.0;
        far = start + dir * reach;
    }
    let (lo, hi) = if dir > 0.0 { (start, far) } else { (far, start) };
    bisect(abc, lo, hi, true)
}

/// The three roots d₁ > d₂ > d₃, each bracketed by the critical points of the cubic.
fn bracket_three(abc: &(TwoFloat, TwoFloat, TwoFloat)) -> Option<[f64; 3]> {
    let (ea, eb, _) = *abc;
    let u = ea * ea - eb * 3.0;
    if !(f64::from(u) > 0.0) {
        return None;
    }
    let root = u.sqrt();
    let lo_crit = f64::from((-ea - root) / 3.0);
    let hi_crit = f64::from((-ea + root) / 3.0);
    if !(f64::from(eval_dd(abc, lo_crit)) > 0.0 && f64::from(eval_dd(abc, hi_crit)) < 0.0) {
        return None;
    }
    let mut reach = 2.0 * f64::from(root) + f64::MIN_POSITIVE;
    let mut left = lo_crit - reach;
    while f64::from(eval_dd(abc, left)) >= 0.0 {
        reach *= 2.0;
        left = lo_crit - reach;
    }
    let mut reach = 2.0 * f64::from(root) + f64::MIN_POSITIVE;
    let mut right = hi_crit + reach;
    while f64::from(eval_dd(abc, right)) <= 0.0 {
        reach *= 2.0;
        right = hi_crit + reach;
    }
    Some([
        bisect(abc, hi_crit, right, true),
        bisect(abc, lo_crit, hi_crit, false),
        bisect(abc, left, lo_crit, true),
    ])
}

/// Thresholds for a (b, c) regime decided elsewhere.
pub fn quartic_thresholds_for(q: &Quartic, regime: Regime) -> QuarticThresholds {
    let (a, b, c) = (q.a(), q.b(), q.c());
    let k = k_of(a, b);
    let c0 = expr::quartic_c0(&a, &b);
    let abc = expr::free_term_monic(&a, &b, &c);
    let (c1, c2) = match regime {
        Regime::Band(_) => {
            let w = band_half_width(k);
            (Some(c0 + w), Some(c0 - w))
        }
        _ => (None, None),
    };
    let d_cubic = Cubic::new(abc.0, abc.1, abc.2).expect("finite coefficients");
    let d_roots = match regime {
        Regime::NoBand { at_c0: true } | Regime::Band(BandPosition::AtC0) => {
            let tilde = a * c / 4.0 - a * a * b / 16.0 + 3.0 * a.powi(4) / 256.0;
            DRoots::Repeated { dagger: tilde + k * k / 256.0, tilde }
        }
        Regime::Band(BandPosition::AtC1) | Regime::Band(BandPosition::AtC2) => {
            let r = 3f64.sqrt() / 12.0 * k.max(0.0).sqrt();
            let sign = if regime == Regime::Band(BandPosition::AtC1) { 1.0 } else { -1.0 };
            let triple = -a / 4.0 + sign * r;
            let single = -a / 4.0 - sign * 3.0 * r;
            let dagger = triple.powi(3) * single;
            DRoots::Repeated { dagger, tilde: -abc.0 - 2.0 * dagger }
        }
        Regime::Flat { at_c0: true } => DRoots::Triple { d0: -abc.0 / 3.0 },
        Regime::Band(BandPosition::LowerBand) | Regime::Band(BandPosition::UpperBand) => {
            let kq = k * expr::theta_q(&a, &b, &c);
            let arg = expr::theta_numerator(&a, &b, &c) / kq.powf(1.5);
            let theta = arg.clamp(-1.0, 1.0).acos() / 3.0;
            let raw = viete_three(-abc.0 / 3.0, kq.max(0.0).sqrt() / 256.0, theta);
            let d = bracket_three(&free_term_monic_dd(a, b, c)).unwrap_or_else(|| {
                let mut d = raw;
                for i in 0..3 {
                    let gap = (0..3)
                        .filter(|&j| j != i)
                        .map(|j| (raw[i] - raw[j]).abs())
                        .fold(f64::INFINITY, f64::min);
                    d[i] = polish_cubic_root(&d_cubic, raw[i], 0.5 * gap);
                }
                d
            });
            DRoots::Three { d1: d[0], d2: d[1], d3: d[2] }
        }
        _ => {
            let d0 = cubic::single_real_root(&d_cubic);
            let step = 1e-9 * max_abs(&[d0, abc.0, abc.1.abs().sqrt(), abc.2.abs().cbrt()]);
            DRoots::Single { d0: bracket_single(&free_term_monic_dd(a, b, c), d0, step) }
        }
    };
    QuarticThresholds { c0, c1, c2, abc, d_roots }
}

/// Thresholds with the regime decided at the default tolerance.
pub fn quartic_thresholds(q: &Quartic) -> QuarticThresholds {
    classify_quartic(q).thresholds
}

pub(crate) fn decide_regime(q: &Quartic, tol: Tolerance, out: &mut Vec<Comparison>) -> Regime {
    let (a, b, c) = (q.a(), q.b(), q.c());
    let cb = tol.compare("b", "3a^2/8", b, 3.0 * a * a / 8.0, b_scale(a, b));
    let b_order = cb.ordering;
    out.push(cb);
    let scale = c_scale(a, b, c);
    let c0 = expr::quartic_c0(&a, &b);
    match b_order {
        Ordering::Greater | Ordering::Equal => {
            let cmp = tol.compare("c", "C0", c, c0, scale);
            let at_c0 = cmp.ordering == Ordering::Equal;
            out.push(cmp);
            if b_order == Ordering::Greater {
                Regime::NoBand { at_c0 }
            } else {
                Regime::Flat { at_c0 }
            }
        }
        Ordering::Less => {
            let w = band_half_width(k_of(a, b));
            let lo = tol.compare("c", "C2", c, c0 - w, scale);
            let mid = tol.compare("c", "C0", c, c0, scale);
            let hi = tol.compare("c", "C1", c, c0 + w, scale);
            let tie = nearest_equal(&[
                (BandPosition::AtC2, &lo),
                (BandPosition::AtC0, &mid),
                (BandPosition::AtC1, &hi),
            ]);
            let pos = tie.unwrap_or(if lo.ordering == Ordering::Less {
                BandPosition::BelowC2
            } else if hi.ordering == Ordering::Greater {
                BandPosition::AboveC1
            } else if mid.ordering == Ordering::Less {
                BandPosition::LowerBand
            } else {
                BandPosition::UpperBand
            });
            out.extend([lo, mid, hi]);
            Regime::Band(pos)
        }
    }
}

/// The d comparisons for a regime, in the order expected by [`case_from`].
fn d_comparisons(d: f64, th: &QuarticThresholds, regime: Regime, tol: Tolerance) -> Vec<Comparison> {
    let scale = d_scale(d, th.abc);
    match th.d_roots {
        DRoots::Single { d0 } | DRoots::Triple { d0 } => vec![tol.compare("d", "d0", d, d0, scale)],
        DRoots::Repeated { tilde, .. } if matches!(regime, Regime::NoBand { .. }) => {
            vec![tol.compare("d", "d~", d, tilde, scale)]
        }
        DRoots::Repeated { dagger, tilde } => vec![
            tol.compare("d", "d+", d, dagger, scale),
            tol.compare("d", "d~", d, tilde, scale),
        ],
        DRoots::Three { d1, d2, d3 } => vec![
            tol.compare("d", "d1", d, d1, scale),
            tol.compare("d", "d2", d, d2, scale),
            tol.compare("d", "d3", d, d3, scale),
        ],
    }
}

/// Case number from the regime and the d comparisons.
pub(crate) fn case_from(regime: Regime, cmps: &[Comparison]) -> u8 {
    let three_way = |base: u8| {
        base + match cmps[0].ordering {
            Ordering::Greater => 0,
            Ordering::Equal => 1,
            Ordering::Less => 2,
        }
    };
    match regime {
        Regime::NoBand { at_c0: false } => three_way(1),
        Regime::NoBand { at_c0: true } => three_way(4),
        Regime::Flat { at_c0: false } => three_way(7),
        Regime::Flat { at_c0: true } => three_way(10),
        Regime::Band(BandPosition::BelowC2 | BandPosition::AboveC1) => three_way(30),
        Regime::Band(BandPosition::AtC1 | BandPosition::AtC2) => {
            // d~ > d+
            let (cd, ct) = (&cmps[0], &cmps[1]);
            match nearest_equal(&[(21, ct), (23, cd)]) {
                Some(c) => c,
                None if ct.ordering == Ordering::Greater => 20,
                None if cd.ordering == Ordering::Greater => 22,
                None => 24,
            }
        }
        Regime::Band(BandPosition::AtC0) => {
            // d+ > d~
            let (cd, ct) = (&cmps[0], &cmps[1]);
            match nearest_equal(&[(26, cd), (28, ct)]) {
                Some(c) => c,
                None if cd.ordering == Ordering::Greater => 25,
                None if ct.ordering == Ordering::Greater => 27,
                None => 29,
            }
        }
        Regime::Band(BandPosition::LowerBand | BandPosition::UpperBand) => {
            let (c1, c2, c3) = (&cmps[0], &cmps[1], &cmps[2]);
            match nearest_equal(&[(14, c1), (16, c2), (18, c3)]) {
                Some(c) => c,
                None if c1.ordering == Ordering::Greater => 13,
                None if c2.ordering == Ordering::Greater => 15,
                None if c3.ordering == Ordering::Greater => 17,
                None => 19,
            }
        }
    }
}

/// Nature of each case; (xvi) carries a placeholder position resolved later.
fn nature_of(case: u8) -> Nature {
    match case {
        1 | 4 | 7 | 10 | 13 | 20 | 25 | 30 => Nature::NoReal,
        2 | 5 | 8 | 14 | 21 | 31 => Nature::TwoEqualReal,
        3 | 6 | 9 | 12 | 15 | 19 | 22 | 24 | 29 | 32 => Nature::TwoDistinctReal,
        11 => Nature::QuadrupleRoot,
        16 => Nature::FourRealDoublePair(DoublePosition::LowestTwo),
        17 | 27 => Nature::FourDistinctReal,
        18 | 28 => Nature::FourRealDoublePair(DoublePosition::MiddleTwo),
        23 => Nature::TriplePlusSingle,
        26 => Nature::TwoDoublePairs,
        _ => unreachable!("case number {case}"),
    }
}

/// Real stationary points of the quartic, ascending.
fn stationary_points(q: &Quartic, tol: Tolerance) -> Vec<f64> {
    let (_, d) = q.derivative();
    let mut xs = cubic::viete_roots_with(&d, tol).expanded();
    xs.dedup();
    xs
}

/// Roots when the double root `m` is known: deflate by (x − m)².
fn deflate_double(q: &Quartic, m: f64, want_real: bool) -> RootSet {
    let e = q.a() + 2.0 * m;
    let f = q.b() + 2.0 * m * e - m * m;
    let quad = Quadratic::new(e, f).expect("finite coefficients");
    match (want_real, quad.real_roots()) {
        (true, Some((r1, r2))) => RootSet::from_values(q, vec![(m, 2), (r1, 1), (r2, 1)], 0),
        // rounding pushed the discriminant just below zero
        (true, None) => RootSet::from_values(q, vec![(m, 2), (-e / 2.0, 1), (-e / 2.0, 1)], 0),
        (false, _) => RootSet::from_values(q, vec![(m, 2)], 1),
    }
}

fn closed_form(q: &Quartic, case: u8, regime: Regime, tol: Tolerance) -> Option<(RootSet, Nature)> {
    let a = q.a();
    let k = k_of(a, q.b()).max(0.0);
    let shift = -a / 4.0;
    let by_value = |xs: &[f64], pick_max: bool| -> f64 {
        let cmp = |x: &&f64, y: &&f64| q.eval(**x).total_cmp(&q.eval(**y));
        let it = xs.iter();
        *(if pick_max { it.max_by(cmp) } else { it.min_by(cmp) }).expect("a stationary point")
    };
    let roots = match case {
        11 => RootSet::from_values(q, vec![(shift, 4)], 0),
        26 => {
            let h = k.sqrt() / 4.0;
            RootSet::from_values(q, vec![(shift - h, 2), (shift + h, 2)], 0)
        }
        23 => {
            let r = 3f64.sqrt() / 12.0 * k.sqrt();
            let sign = if regime == Regime::Band(BandPosition::AtC1) { 1.0 } else { -1.0 };
            RootSet::from_values(q, vec![(shift + sign * r, 3), (shift - sign * 3.0 * r, 1)], 0)
        }
        // double root at the global minimum
        2 | 5 | 8 | 14 | 21 | 31 => {
            let m = if case == 5 { shift } else { by_value(&stationary_points(q, tol), false) };
            deflate_double(q, m, false)
        }
        16 => {
            let s = stationary_points(q, tol);
            let outer = [s[0], s[s.len() - 1]];
            deflate_double(q, by_value(&outer, true), true)
        }
        18 | 28 => {
            let m = if case == 28 {
                shift
            } else {
                let s = stationary_points(q, tol);
                s[s.len() / 2]
            };
            deflate_double(q, m, true)
        }
        _ => return None,
    };
    let nature = if case == 16 {
        let m = roots.multiplicities();
        if m.first() == Some(&2) {
            Nature::FourRealDoublePair(DoublePosition::LowestTwo)
        } else {
            Nature::FourRealDoublePair(DoublePosition::HighestTwo)
        }
    } else {
        nature_of(case)
    };
    Some((roots, nature))
}

/// Assemble a classification from decided regime and case.
pub(crate) fn finish(
    q: &Quartic,
    regime: Regime,
    thresholds: QuarticThresholds,
    case: u8,
    comparisons: Vec<Comparison>,
    arithmetic: Arithmetic,
    position_hint: Option<DoublePosition>,
    tol: Tolerance,
) -> QuarticClassification {
    let (closed_form_roots, mut nature) = match closed_form(q, case, regime, tol) {
        Some((r, n)) => (Some(r), n),
        None => (None, nature_of(case)),
    };
    if let (16, Some(pos)) = (case, position_hint) {
        nature = Nature::FourRealDoublePair(pos);
    }
    QuarticClassification {
        case: ClassificationCase(case),
        nature,
        regime,
        thresholds,
        closed_form_roots,
        comparisons,
        arithmetic,
    }
}

pub fn classify_quartic(q: &Quartic) -> QuarticClassification {
    classify_quartic_with(q, Tolerance::default())
}

pub fn classify_quartic_with(q: &Quartic, tol: Tolerance) -> QuarticClassification {
    let mut comparisons = Vec::with_capacity(8);
    let regime = decide_regime(q, tol, &mut comparisons);
    let thresholds = quartic_thresholds_for(q, regime);
    let d_cmps = d_comparisons(q.d(), &thresholds, regime, tol);
    let case = case_from(regime, &d_cmps);
    comparisons.extend(d_cmps);
    finish(q, regime, thresholds, case, comparisons, Arithmetic::Float, None, tol)
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditEntry {
    pub comparison: Comparison,
    /// Decided within `FRAGILE_FACTOR` tolerance units.
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryAudit {
    pub entries: Vec<AuditEntry>,
}

impl BoundaryAudit {
    pub fn from_comparisons(comparisons: &[Comparison]) -> Self {
        BoundaryAudit {
            entries: comparisons
                .iter()
                .map(|c| AuditEntry { comparison: c.clone(), flagged: c.is_fragile() })
                .collect(),
        }
    }

    pub fn fragile(&self) -> bool {
        self.entries.iter().any(|e| e.flagged)
    }

    pub fn flagged(&self) -> impl Iterator<Item = &AuditEntry> {
        self.entries.iter().filter(|e| e.flagged)
    }

    /// Smallest margin magnitude over all comparisons.
    pub fn min_margin(&self) -> f64 {
        self.entries.iter().map(|e| e.comparison.margin.abs()).fold(f64::INFINITY, f64::min)
    }
}

pub fn classification_boundary_audit(q: &Quartic) -> BoundaryAudit {
    classification_boundary_audit_with(q, Tolerance::default())
}

pub fn classification_boundary_audit_with(q: &Quartic, tol: Tolerance) -> BoundaryAudit {
    BoundaryAudit::from_comparisons(&classify_quartic_with(q, tol).comparisons)
}
