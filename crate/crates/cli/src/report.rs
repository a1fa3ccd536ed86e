//! Versioned report schema shared by every subcommand.

use std::fmt::{self, Write as _};

use num_rational::BigRational;
use polyclass::exact::{format_decimal, format_rational};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

pub const SCHEMA: &str = "polyclass.report.v1";

/// Digits after the point for rational values rendered as decimals.
pub const DECIMAL_DIGITS: usize = 30;

/// An f64 that survives JSON: non-finite values are written as strings.
#[derive(Debug, Clone, Copy)]
pub struct Real(pub f64);

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.0.to_bits() == other.0.to_bits() || (self.0.is_nan() && other.0.is_nan())
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let x = self.0;
        if x.is_finite() {
            s.serialize_f64(x)
        } else if x.is_nan() {
            s.serialize_str("nan")
        } else if x > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(x) => Ok(Real(x)),
            Raw::Str(s) => match s.as_str() {
                "nan" => Ok(Real(f64::NAN)),
                "inf" => Ok(Real(f64::INFINITY)),
                "-inf" => Ok(Real(f64::NEG_INFINITY)),
                _ => Err(de::Error::custom(format!("invalid number {s:?}"))),
            },
        }
    }
}

/// A numeric field tagged with the arithmetic it was computed in.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Num {
    Float { value: Real },
    Rational { value: String, fraction: String },
}

impl Num {
    pub fn float(x: f64) -> Num {
        Num::Float { value: Real(x) }
    }

    pub fn rational(x: &BigRational) -> Num {
        Num::Rational { value: format_decimal(x, DECIMAL_DIGITS), fraction: format_rational(x) }
    }

    /// Float view, for display and comparisons.
    pub fn as_f64(&self) -> f64 {
        match self {
            Num::Float { value } => value.0,
            Num::Rational { value, .. } => value.parse().unwrap_or(f64::NAN),
        }
    }
}

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Num::Float { value } => write!(f, "{}", value.0),
            Num::Rational { fraction, .. } => f.write_str(fraction),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Named {
    pub name: String,
    pub value: Num,
}

impl Named {
    pub fn new(name: impl Into<String>, value: Num) -> Self {
        Named { name: name.into(), value }
    }

    pub fn float(name: impl Into<String>, x: f64) -> Self {
        Named::new(name, Num::float(x))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Input {
    pub polynomial: String,
    pub coefficients: Vec<Named>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ToleranceInfo {
    pub eps: Real,
    pub fragile_factor: Real,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    /// Case label such as "xvii"; quartics only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub nature: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regime: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Geometry {
    /// "triangle" or "tetrahedron".
    pub shape: String,
    pub values: Vec<Named>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalOut {
    pub root: String,
    pub lo: Num,
    pub hi: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Localization {
    pub branch: String,
    pub tie_at_c0: bool,
    pub intervals: Vec<IntervalOut>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootOut {
    pub value: Num,
    pub multiplicity: usize,
    pub residual: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Roots {
    /// "closed-form", "viete" or "oracle".
    pub source: String,
    pub real: Vec<RootOut>,
    pub complex_pairs: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditOut {
    pub quantity: String,
    pub against: String,
    pub value: Num,
    pub threshold: Num,
    /// Signed distance in tolerance units.
    pub margin: Real,
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub roots: Roots,
    /// Whether the oracle's multiplicity structure matches the verdict.
    pub agrees: bool,
    pub max_residual: Real,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Admissible {
    Points { values: Vec<Num> },
    /// Open intervals; a missing end is unbounded.
    Intervals { intervals: Vec<(Option<Real>, Option<Real>)> },
}

impl fmt::Display for Admissible {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Admissible::Points { values } => {
                let v: Vec<String> = values.iter().map(|x| x.to_string()).collect();
                write!(f, "{{{}}}", v.join(", "))
            }
            Admissible::Intervals { intervals } => {
                let v: Vec<String> = intervals
                    .iter()
                    .map(|(lo, hi)| {
                        let lo = lo.map_or("-inf".to_string(), |x| x.0.to_string());
                        let hi = hi.map_or("inf".to_string(), |x| x.0.to_string());
                        format!("({lo}, {hi})")
                    })
                    .collect();
                f.write_str(&v.join(" U "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainStep {
    pub coefficient: String,
    pub admissible: Admissible,
    pub value: Num,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Synthesis {
    pub target: String,
    pub strategy: String,
    pub chain: Vec<ChainStep>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignChangesOut {
    pub count: usize,
    pub t_roots: Vec<Num>,
    pub stationary_extrema: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuinticOut {
    /// Δ₅ as a polynomial in t, leading coefficient first.
    pub delta5_coeffs: Vec<Num>,
    pub values: Vec<Named>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign_changes: Option<SignChangesOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign_changes_error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SelftestOut {
    pub seed: u64,
    pub samples: usize,
    pub agreements: usize,
    pub fragile: usize,
    /// Disagreements on comparisons well clear of every boundary.
    pub robust_disagreements: usize,
    pub oracle_failures: usize,
    pub synthesis_round_trips: usize,
    pub synthesis_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorOut {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<Input>,
    pub tolerance: ToleranceInfo,
    pub arithmetic: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub thresholds: Vec<Named>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub geometry: Option<Geometry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub localization: Option<Localization>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Roots>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub audit: Vec<AuditOut>,
    pub fragile: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_check: Option<OracleCheck>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub synthesis: Option<Synthesis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quintic: Option<QuinticOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub selftest: Option<SelftestOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorOut>,
}

impl Report {
    pub fn new(command: &str, eps: f64, exact: bool) -> Self {
        Report {
            schema: SCHEMA.to_string(),
            command: command.to_string(),
            input: None,
            tolerance: ToleranceInfo { eps: Real(eps), fragile_factor: Real(polyclass::tolerance::FRAGILE_FACTOR) },
            arithmetic: if exact { "rational" } else { "float" }.to_string(),
            classification: None,
            thresholds: Vec::new(),
            geometry: None,
            localization: None,
            roots: None,
            audit: Vec::new(),
            fragile: false,
            oracle_check: None,
            synthesis: None,
            quintic: None,
            selftest: None,
            error: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        if let Some(e) = &self.error {
            let _ = writeln!(w, "error ({}): {}", e.kind, e.message);
            return out;
        }
        if let Some(input) = &self.input {
            let cs: Vec<String> = input.coefficients.iter().map(|c| format!("{}={}", c.name, c.value)).collect();
            let _ = writeln!(w, "{} {} [{}]", input.polynomial, cs.join(" "), self.arithmetic);
        }
        if let Some(c) = &self.classification {
            let _ = write!(w, "nature: {}", c.nature);
            if let Some(case) = &c.case {
                let _ = write!(w, "  case ({case})");
            }
            if let Some(r) = &c.regime {
                let _ = write!(w, "  regime {r}");
            }
            let _ = writeln!(w);
        }
        section(w, "thresholds", &self.thresholds);
        if let Some(g) = &self.geometry {
            section(w, &g.shape, &g.values);
        }
        if let Some(l) = &self.localization {
            let _ = writeln!(w, "localization: {} branch{}", l.branch, if l.tie_at_c0 { " (c = C0)" } else { "" });
            for iv in &l.intervals {
                let _ = writeln!(w, "  {} in [{}, {}]", iv.root, iv.lo, iv.hi);
            }
        }
        if let Some(r) = &self.roots {
            roots_text(w, "roots", r);
        }
        if let Some(o) = &self.oracle_check {
            roots_text(w, "oracle roots", &o.roots);
            let _ = writeln!(w, "oracle agrees: {}  max residual {:e}", o.agrees, o.max_residual.0);
        }
        if let Some(s) = &self.synthesis {
            let _ = writeln!(w, "synthesis: {} ({})", s.target, s.strategy);
            for step in &s.chain {
                let _ = writeln!(w, "  {} = {}  from {}", step.coefficient, step.value, step.admissible);
            }
        }
        if let Some(q) = &self.quintic {
            let cs: Vec<String> = q.delta5_coeffs.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(w, "delta5(t) coefficients: [{}]", cs.join(", "));
            section(w, "cascade", &q.values);
            if let Some(sc) = &q.sign_changes {
                let ts: Vec<String> = sc.t_roots.iter().map(|t| t.to_string()).collect();
                let _ = writeln!(
                    w,
                    "sign changes of delta5: {} at t = [{}]; extrema: {}",
                    sc.count,
                    ts.join(", "),
                    sc.stationary_extrema
                );
            }
            if let Some(e) = &q.sign_changes_error {
                let _ = writeln!(w, "sign changes: {e}");
            }
        }
        if let Some(s) = &self.selftest {
            let _ = writeln!(
                w,
                "selftest seed {}: {}/{} agree, {} fragile, {} robust disagreements, {} oracle failures; \
                 synthesis {} ok, {} failed",
                s.seed,
                s.agreements,
                s.samples,
                s.fragile,
                s.robust_disagreements,
                s.oracle_failures,
                s.synthesis_round_trips,
                s.synthesis_failures
            );
        }
        let flagged: Vec<&AuditOut> = self.audit.iter().filter(|a| a.flagged).collect();
        if !flagged.is_empty() {
            let _ = writeln!(w, "warning: decided within {} tolerance units of a boundary:", self.tolerance.fragile_factor.0);
            for a in flagged {
                let _ = writeln!(w, "  {} vs {}: margin {}", a.quantity, a.against, a.margin.0);
            }
        }
        out
    }
}

fn section(w: &mut String, title: &str, values: &[Named]) {
    if values.is_empty() {
        return;
    }
    let _ = writeln!(w, "{title}:");
    for v in values {
        let _ = writeln!(w, "  {:<12} {}", v.name, v.value);
    }
}

fn roots_text(w: &mut String, title: &str, r: &Roots) {
    let _ = writeln!(w, "{title} ({}):", r.source);
    for x in &r.real {
        let _ = writeln!(w, "  {}  x{}  |p| = {:e}", x.value, x.multiplicity, x.residual.as_f64());
    }
    if r.complex_pairs > 0 {
        let _ = writeln!(w, "  {} complex pair(s)", r.complex_pairs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn non_finite_round_trip() {
        for x in [f64::INFINITY, f64::NEG_INFINITY, f64::NAN, -0.0, 0.1] {
            let s = serde_json::to_string(&Real(x)).unwrap();
            assert_eq!(serde_json::from_str::<Real>(&s).unwrap(), Real(x));
        }
        assert!(serde_json::from_str::<Real>("\"huge\"").is_err());
    }

    #[test]
    fn rational_fields() {
        let x = BigRational::new(1.into(), 3.into());
        let Num::Rational { value, fraction } = Num::rational(&x) else { panic!() };
        assert_eq!(fraction, "1/3");
        assert!(value.starts_with("0.3333"));
        let json = serde_json::to_string(&Num::rational(&x)).unwrap();
        assert!(json.contains("\"mode\":\"rational\""));
    }
}
