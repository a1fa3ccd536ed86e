//! Exact-rational classification.
//!
//! Boundary cases such as c = C₀ cannot be decided in floating point. Here the
//! coefficients are arbitrary-precision rationals and every sign test is exact;
//! thresholds and roots are still reported as floats.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::cubic::{self, CubicBoundary, CubicClassification, CubicKind};
use crate::error::{Error, Result};
use crate::expr::{self, Field};
use crate::poly::{Cubic, Quartic};
use crate::quartic::{
    self, Arithmetic, BandPosition, DRoots, DoublePosition, QuarticClassification, Regime,
};
use crate::tolerance::{Comparison, Tolerance};

/// Parse `p/q` or an integer `p`. Decimal literals are rejected.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Exact value of a finite float.
pub fn rational_from_f64(x: f64) -> Result<BigRational> {
    BigRational::from_float(x).ok_or(Error::NonFinite { name: "value", value: x })
}

pub fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `p/q` in lowest terms, or `p` for integers.
pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Decimal expansion rounded to `digits` places after the point.
pub fn format_decimal(x: &BigRational, digits: usize) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = x * BigRational::from_integer(scale);
    let rounded = scaled.round().to_integer();
    let neg = rounded.is_negative();
    let mut s = rounded.abs().to_string();
    if digits > 0 {
        if s.len() <= digits {
            s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
        }
        s.insert(s.len() - digits, '.');
    }
    if neg {
        s.insert(0, '-');
    }
    s
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactCubic {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactQuartic {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl ExactCubic {
    pub fn parse(a: &str, b: &str, c: &str) -> Result<Self> {
        Ok(ExactCubic { a: parse_rational(a)?, b: parse_rational(b)?, c: parse_rational(c)? })
    }

    pub fn to_float(&self) -> Result<Cubic> {
        Cubic::new(to_f64(&self.a), to_f64(&self.b), to_f64(&self.c))
    }
}

impl ExactQuartic {
    pub fn parse(a: &str, b: &str, c: &str, d: &str) -> Result<Self> {
        Ok(ExactQuartic {
            a: parse_rational(a)?,
            b: parse_rational(b)?,
            c: parse_rational(c)?,
            d: parse_rational(d)?,
        })
    }

    pub fn from_f64(q: &Quartic) -> Result<Self> {
        Ok(ExactQuartic {
            a: rational_from_f64(q.a())?,
            b: rational_from_f64(q.b())?,
            c: rational_from_f64(q.c())?,
            d: rational_from_f64(q.d())?,
        })
    }

    pub fn to_float(&self) -> Result<Quartic> {
        Quartic::new(to_f64(&self.a), to_f64(&self.b), to_f64(&self.c), to_f64(&self.d))
    }
}

impl fmt::Display for ExactQuartic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            format_rational(&self.a),
            format_rational(&self.b),
            format_rational(&self.c),
            format_rational(&self.d)
        )
    }
}

fn int(n: i64) -> BigRational {
    <BigRational as Field>::int(n)
}

fn sign(x: &BigRational) -> Ordering {
    x.cmp(&BigRational::zero())
}

pub fn discriminant_cubic_exact(c: &ExactCubic) -> BigRational {
    expr::cubic_discriminant(&c.a, &c.b, &c.c)
}

pub fn discriminant_quartic_exact(q: &ExactQuartic) -> BigRational {
    expr::quartic_discriminant(&q.a, &q.b, &q.c, &q.d)
}

/// Exact C₀ = −a³/8 + ab/2.
pub fn quartic_c0_exact(a: &BigRational, b: &BigRational) -> BigRational {
    expr::quartic_c0(a, b)
}

pub fn classify_cubic_exact(c: &ExactCubic) -> Result<CubicClassification> {
    let cf = c.to_float()?;
    let u = &c.a * &c.a - int(3) * &c.b;
    let c0 = expr::cubic_c0(&c.a, &c.b);
    let e = &c.c - &c0;
    let mut comparisons = vec![Comparison::exact("a^2-3b", "0", to_f64(&u), 0.0, sign(&u))];
    let (kind, boundary) = match sign(&u) {
        Ordering::Less => (CubicKind::OneRealPlusComplexPair, None),
        Ordering::Equal => {
            comparisons.push(Comparison::exact("c", "c0", cf.c(), to_f64(&c0), sign(&e)));
            if e.is_zero() {
                (CubicKind::TripleReal, None)
            } else {
                (CubicKind::OneRealPlusComplexPair, None)
            }
        }
        Ordering::Greater => {
            // (c - c1)(c - c2) = (c - c0)^2 - 4u^3/729
            let g = &e * &e - int(4) * &u * &u * &u / int(729);
            let th = cubic::cubic_thresholds(&cf).ok();
            let (t1, t2) = th.map_or((f64::NAN, f64::NAN), |t| (t.c1, t.c2));
            let (lo, hi) = match (sign(&g), sign(&e)) {
                (Ordering::Equal, Ordering::Greater) => (Ordering::Greater, Ordering::Equal),
                (Ordering::Equal, _) => (Ordering::Equal, Ordering::Less),
                (Ordering::Less, _) => (Ordering::Greater, Ordering::Less),
                (Ordering::Greater, Ordering::Greater) => (Ordering::Greater, Ordering::Greater),
                (Ordering::Greater, _) => (Ordering::Less, Ordering::Less),
            };
            comparisons.push(Comparison::exact("c", "c2", cf.c(), t2, lo));
            comparisons.push(Comparison::exact("c", "c1", cf.c(), t1, hi));
            match sign(&g) {
                Ordering::Less => (CubicKind::ThreeDistinctReal, None),
                Ordering::Equal if e.is_positive() => (CubicKind::DoublePlusSingle, Some(CubicBoundary::C1)),
                Ordering::Equal => (CubicKind::DoublePlusSingle, Some(CubicBoundary::C2)),
                Ordering::Greater => (CubicKind::OneRealPlusComplexPair, None),
            }
        }
    };
    let thresholds = if u.is_positive() { cubic::cubic_thresholds(&cf).ok() } else { None };
    Ok(cubic::assemble(&cf, kind, thresholds, boundary, comparisons))
}

fn exact_regime(q: &ExactQuartic, qf: &Quartic, out: &mut Vec<Comparison>) -> (Regime, BigRational) {
    let (a, b) = (&q.a, &q.b);
    let k = int(3) * a * a - int(8) * b;
    let c0 = quartic_c0_exact(a, b);
    let e = &q.c - &c0;
    let three_a2_8 = int(3) * a * a / int(8);
    out.push(Comparison::exact("b", "3a^2/8", qf.b(), to_f64(&three_a2_8), b.cmp(&three_a2_8)));
    let c0f = to_f64(&c0);
    let regime = match sign(&k) {
        Ordering::Less | Ordering::Equal => {
            out.push(Comparison::exact("c", "C0", qf.c(), c0f, sign(&e)));
            if k.is_zero() {
                Regime::Flat { at_c0: e.is_zero() }
            } else {
                Regime::NoBand { at_c0: e.is_zero() }
            }
        }
        Ordering::Greater => {
            // (c - C1)(c - C2) = (c - C0)^2 - k^3/1728
            let g = &e * &e - &k * &k * &k / int(1728);
            let w = quartic::band_half_width(qf.b().mul_add(-8.0, 3.0 * qf.a() * qf.a()));
            let (lo, hi) = match (sign(&g), sign(&e)) {
                (Ordering::Equal, Ordering::Greater) => (Ordering::Greater, Ordering::Equal),
                (Ordering::Equal, _) => (Ordering::Equal, Ordering::Less),
                (Ordering::Less, _) => (Ordering::Greater, Ordering::Less),
                (Ordering::Greater, Ordering::Greater) => (Ordering::Greater, Ordering::Greater),
                (Ordering::Greater, _) => (Ordering::Less, Ordering::Less),
            };
            out.push(Comparison::exact("c", "C2", qf.c(), c0f - w, lo));
            out.push(Comparison::exact("c", "C0", qf.c(), c0f, sign(&e)));
            out.push(Comparison::exact("c", "C1", qf.c(), c0f + w, hi));
            Regime::Band(match (sign(&g), sign(&e)) {
                (Ordering::Less, Ordering::Less) => BandPosition::LowerBand,
                (Ordering::Less, Ordering::Equal) => BandPosition::AtC0,
                (Ordering::Less, Ordering::Greater) => BandPosition::UpperBand,
                (Ordering::Equal, Ordering::Greater) => BandPosition::AtC1,
                (Ordering::Equal, _) => BandPosition::AtC2,
                (Ordering::Greater, Ordering::Greater) => BandPosition::AboveC1,
                (Ordering::Greater, _) => BandPosition::BelowC2,
            })
        }
    };
    (regime, e)
}

/// Classify with every sign test decided exactly.
pub fn classify_quartic_exact(q: &ExactQuartic) -> Result<QuarticClassification> {
    let qf = q.to_float()?;
    let mut comparisons = Vec::with_capacity(8);
    let (regime, e) = exact_regime(q, &qf, &mut comparisons);
    let thresholds = quartic::quartic_thresholds_for(&qf, regime);
    let (a, b, c, d) = (&q.a, &q.b, &q.c, &q.d);
    let (ea, eb, ec) = expr::free_term_monic(a, b, c);
    let f = |x: &BigRational| ((x + &ea) * x + &eb) * x + &ec;
    let df = qf.d();
    let cmp = |against: &'static str, threshold: f64, ord: Ordering| {
        Comparison::exact("d", against, df, threshold, ord)
    };
    let d_cmps = match thresholds.d_roots {
        DRoots::Single { d0 } => vec![cmp("d0", d0, sign(&f(d)))],
        DRoots::Triple { d0 } => {
            let t = -&ea / int(3);
            vec![cmp("d0", d0, d.cmp(&t))]
        }
        DRoots::Repeated { dagger, tilde } => {
            let (ed, et) = if matches!(regime, Regime::Band(BandPosition::AtC1 | BandPosition::AtC2)) {
                let ed = (int(9) * &ec - &ea * &eb) / (int(2) * (&ea * &ea - int(3) * &eb));
                let et = -&ea - int(2) * &ed;
                (ed, et)
            } else {
                let a2 = a * a;
                let et = a * c / int(4) - &a2 * b / int(16) + int(3) * &a2 * &a2 / int(256);
                let k = int(3) * &a2 - int(8) * b;
                let ed = &et + &k * &k / int(256);
                (ed, et)
            };
            if matches!(regime, Regime::NoBand { .. }) {
                vec![cmp("d~", tilde, d.cmp(&et))]
            } else {
                vec![cmp("d+", dagger, d.cmp(&ed)), cmp("d~", tilde, d.cmp(&et))]
            }
        }
        DRoots::Three { d1, d2, d3 } => {
            use Ordering::*;
            let fd = sign(&f(d));
            let f1 = sign(&((int(3) * d + int(2) * &ea) * d + &eb));
            let f2 = sign(&(int(6) * d + int(2) * &ea));
            // sign of f, f', f'' locates d among d3 < d2 < d1
            let (o1, o2, o3) = match fd {
                Equal if f1 == Less => (Less, Equal, Greater),
                Equal if f2 == Greater => (Equal, Greater, Greater),
                Equal => (Less, Less, Equal),
                Greater if f1 == Greater && f2 == Greater => (Greater, Greater, Greater),
                Greater => (Less, Less, Greater),
                Less if f1 == Greater && f2 == Less => (Less, Less, Less),
                Less => (Less, Greater, Greater),
            };
            vec![cmp("d1", d1, o1), cmp("d2", d2, o2), cmp("d3", d3, o3)]
        }
    };
    let case = quartic::case_from(regime, &d_cmps);
    comparisons.extend(d_cmps);
    let hint = if e.is_negative() { DoublePosition::LowestTwo } else { DoublePosition::HighestTwo };
    Ok(quartic::finish(
        &qf,
        regime,
        thresholds,
        case,
        comparisons,
        Arithmetic::Rational,
        Some(hint),
        Tolerance::default(),
    ))
}
