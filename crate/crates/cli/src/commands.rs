//! Subcommand execution. Every command yields a [`Report`] and an exit code.

use std::path::PathBuf;

use num_rational::BigRational;
use polyclass::cubic::{self, CubicClassification, CubicKind};
use polyclass::exact::{self, ExactCubic, ExactQuartic};
use polyclass::geometry::{localize_roots, tetrahedron_data, TetrahedronData};
use polyclass::oracle::{self, OracleConfig};
use polyclass::poly::{discriminant_cubic, discriminant_quartic, Cubic, MonicPolynomial, Quartic, Quintic, RootSet};
use polyclass::quartic::{classify_quartic_with, DRoots, Nature, QuarticClassification};
use polyclass::quintic::{delta5_sign_changes, quintic_cascade};
use polyclass::reverse::{
    admissible_b_range, admissible_c_range, admissible_d_range, synthesize, AdmissibleSet, NatureTarget, Strategy,
};
use polyclass::tolerance::{Comparison, Tolerance};
use rayon::prelude::*;
use thiserror::Error;

use crate::args::{Cli, Command, GlobalOpts, PolyInput};
use crate::report::{
    Admissible, AuditOut, ChainStep, Classification, ErrorOut, Geometry, Input, IntervalOut, Localization, Named,
    Num, OracleCheck, QuinticOut, Real, Report, RootOut, Roots, SignChangesOut, Synthesis,
};
use crate::{selftest, svg};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FRAGILE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse {name} = {value:?}: {reason}")]
    Parse { name: String, value: String, reason: String },
    #[error(transparent)]
    Lib(#[from] polyclass::Error),
    #[error(transparent)]
    Oracle(#[from] polyclass::oracle::OracleError),
    #[error(transparent)]
    Nature(#[from] polyclass::quartic::UnknownNature),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn kind(&self) -> String {
        match self {
            CliError::Parse { .. } => "Parse".into(),
            CliError::Lib(e) => variant_name(e),
            CliError::Oracle(e) => variant_name(e),
            CliError::Nature(_) => "UnknownNature".into(),
            CliError::Io(_) => "Io".into(),
            CliError::Usage(_) => "Usage".into(),
        }
    }
}

fn variant_name<T: std::fmt::Debug>(e: &T) -> String {
    let s = format!("{e:?}");
    s.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
}

type Result<T> = std::result::Result<T, CliError>;

/// What a command produced.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    /// SVG document for `render`.
    pub svg: Option<String>,
    pub svg_path: Option<PathBuf>,
    pub exit: i32,
}

impl Outcome {
    fn from_report(report: Report) -> Self {
        let exit = if report.error.is_some() {
            EXIT_ERROR
        } else if report.fragile {
            EXIT_FRAGILE
        } else {
            EXIT_OK
        };
        Outcome { report, svg: None, svg_path: None, exit }
    }

    /// Text for standard output.
    pub fn render(&self, json: bool) -> String {
        match (&self.svg, &self.svg_path, json) {
            (Some(svg), None, false) if self.report.error.is_none() => svg.clone(),
            (_, _, true) => self.report.to_json() + "\n",
            _ => self.report.to_text(),
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Classify(_) => "classify",
        Command::Localize { .. } => "localize",
        Command::Synthesize { .. } => "synthesize",
        Command::Quintic { .. } => "quintic",
        Command::Render { .. } => "render",
        Command::Selftest { .. } => "selftest",
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    let Some(cmd) = &cli.command else {
        let mut r = Report::new("none", g.tol, g.exact);
        r.error = Some(ErrorOut { kind: "Usage".into(), message: "no subcommand given".into() });
        return Outcome::from_report(r);
    };
    let name = command_name(cmd);
    let mut report = Report::new(name, g.tol, g.exact);
    if !(g.tol.is_finite() && g.tol >= 0.0) {
        return fail(report, CliError::Usage(format!("--tol must be finite and non-negative, got {}", g.tol)));
    }
    let tol = Tolerance::new(g.tol);
    let mut svg_out = None;
    let res = match cmd {
        Command::Classify(input) => classify(&mut report, g, tol, input),
        Command::Localize { quartic } => localize(&mut report, g, tol, quartic),
        Command::Synthesize { nature, a, b, c } => {
            synth(&mut report, g, tol, nature, a, b.as_deref(), c.as_deref())
        }
        Command::Quintic { coeffs } => quintic(&mut report, g, coeffs),
        Command::Render { input, out } => render(&mut report, g, tol, input).map(|s| svg_out = Some((s, out.clone()))),
        Command::Selftest { samples } => {
            let st = selftest::run(g.seed.unwrap_or(0), *samples, tol);
            if !st.passed() {
                report.error = Some(ErrorOut { kind: "SelftestFailed".into(), message: format!("{st:?}") });
            }
            report.selftest = Some(st);
            Ok(())
        }
    };
    if let Err(e) = res {
        return fail(report, e);
    }
    let mut outcome = Outcome::from_report(report);
    if let Some((s, path)) = svg_out {
        if let Some(p) = &path {
            if let Err(e) = std::fs::write(p, &s) {
                return fail(outcome.report, CliError::Io(format!("{}: {e}", p.display())));
            }
        }
        outcome.svg = Some(s);
        outcome.svg_path = path;
    }
    outcome
}

fn fail(mut report: Report, e: CliError) -> Outcome {
    report.error = Some(ErrorOut { kind: e.kind(), message: e.to_string() });
    Outcome::from_report(report)
}

/// Lines of FILE run in parallel; output keeps file order. The exit code is 1
/// if any line failed, else 2 if any was fragile.
pub fn run_batch(path: &std::path::Path, outer: &GlobalOpts) -> (String, i32) {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let mut r = Report::new("batch", outer.tol, outer.exact);
            let o = fail(r.clone(), CliError::Io(format!("{}: {e}", path.display())));
            r = o.report;
            return (if outer.json { r.to_json() + "\n" } else { r.to_text() }, EXIT_ERROR);
        }
    };
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).collect();
    let results: Vec<(String, i32)> = lines
        .par_iter()
        .map(|line| {
            let mut argv = vec!["polyclass".to_string()];
            argv.extend(line.split_whitespace().map(str::to_string));
            match <Cli as clap::Parser>::try_parse_from(&argv) {
                Ok(mut cli) => {
                    cli.global.json |= outer.json;
                    let o = run(&cli);
                    (o.render(cli.global.json), o.exit)
                }
                Err(e) => {
                    let o = fail(Report::new("batch", outer.tol, outer.exact), CliError::Usage(e.to_string()));
                    (o.render(outer.json), EXIT_ERROR)
                }
            }
        })
        .collect();
    let exit = if results.iter().any(|r| r.1 == EXIT_ERROR) {
        EXIT_ERROR
    } else if results.iter().any(|r| r.1 == EXIT_FRAGILE) {
        EXIT_FRAGILE
    } else {
        EXIT_OK
    };
    let out = results
        .into_iter()
        .map(|(s, _)| s)
        .collect::<Vec<_>>()
        .join(if outer.json { "" } else { "\n" });
    (out, exit)
}

// coefficient parsing

fn parse_float(name: &str, s: &str) -> Result<f64> {
    let err = |reason: String| CliError::Parse { name: name.into(), value: s.into(), reason };
    match s.trim().parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        Ok(x) => Err(err(format!("{x} is not finite"))),
        Err(e) => exact::parse_rational(s).map(|r| exact::to_f64(&r)).map_err(|_| err(e.to_string())),
    }
}

fn parse_exact(name: &str, s: &str) -> Result<BigRational> {
    exact::parse_rational(s).map_err(|_| CliError::Parse {
        name: name.into(),
        value: s.into(),
        reason: "exact mode takes integers or p/q fractions".into(),
    })
}

fn names(n: usize) -> &'static [&'static str] {
    &["a", "b", "c", "d", "e"][..n]
}

fn parse_floats(values: &[String], labels: &[&str]) -> Result<Vec<f64>> {
    values.iter().zip(labels).map(|(v, n)| parse_float(n, v)).collect()
}

fn input_floats(kind: &str, labels: &[&str], xs: &[f64]) -> Input {
    Input {
        polynomial: kind.into(),
        coefficients: labels.iter().zip(xs).map(|(n, x)| Named::float(*n, *x)).collect(),
    }
}

fn input_exact(kind: &str, labels: &[&str], xs: &[&BigRational]) -> Input {
    Input {
        polynomial: kind.into(),
        coefficients: labels.iter().zip(xs).map(|(n, x)| Named::new(*n, Num::rational(x))).collect(),
    }
}

// report fragments

fn audit(report: &mut Report, cmps: &[Comparison]) {
    report.audit = cmps
        .iter()
        .map(|c| AuditOut {
            quantity: c.quantity.into(),
            against: c.against.into(),
            value: Num::float(c.value),
            threshold: Num::float(c.threshold),
            margin: Real(c.margin),
            flagged: c.is_fragile(),
        })
        .collect();
    report.fragile = cmps.iter().any(Comparison::is_fragile);
}

fn roots_out(source: &str, rs: &RootSet) -> Roots {
    Roots {
        source: source.into(),
        real: rs
            .roots()
            .iter()
            .zip(rs.residuals())
            .map(|(r, res)| RootOut { value: Num::float(r.value), multiplicity: r.multiplicity, residual: Num::float(*res) })
            .collect(),
        complex_pairs: rs.complex_pairs(),
    }
}

fn oracle_check<P: MonicPolynomial>(p: &P, agrees: impl Fn(&RootSet) -> bool) -> Result<OracleCheck> {
    let rs = oracle::solve(p, &OracleConfig::default())?;
    let max_residual = rs.residuals().iter().copied().fold(0.0, f64::max);
    Ok(OracleCheck { agrees: agrees(&rs), roots: roots_out("oracle", &rs), max_residual: Real(max_residual) })
}

fn cubic_matches(kind: CubicKind, rs: &RootSet) -> bool {
    let m = rs.multiplicities();
    match kind {
        CubicKind::ThreeDistinctReal => m == [1, 1, 1],
        CubicKind::DoublePlusSingle => m == [1, 2] || m == [2, 1],
        CubicKind::TripleReal => m == [3],
        CubicKind::OneRealPlusComplexPair => m == [1] && rs.complex_pairs() == 1,
    }
}

fn nature_label(n: Nature) -> String {
    format!("{n:?}")
}

fn tetra_values(t: &TetrahedronData) -> Vec<Named> {
    vec![
        Named::float("center", t.center_x),
        Named::float("R", t.insphere_radius),
        Named::float("L", t.edge),
        Named::float("l", t.triangle_side),
        Named::float("h", t.height),
        Named::float("rho1", t.rho[0]),
        Named::float("rho2", t.rho[1]),
        Named::float("phi1", t.phi[0]),
        Named::float("phi2", t.phi[1]),
        Named::float("sigma1", t.sigma[0]),
        Named::float("sigma2", t.sigma[1]),
        Named::float("sigma3", t.sigma[2]),
        Named::float("lambda_min", t.lambda_min),
        Named::float("lambda_max", t.lambda_max),
    ]
}

// cubic

fn cubic_report(report: &mut Report, c: &Cubic, cls: &CubicClassification, tol: Tolerance) {
    report.classification = Some(Classification {
        case: None,
        nature: format!("{:?}", cls.kind),
        regime: cls.boundary.map(|b| format!("at {b:?}")),
    });
    if let Some(th) = cls.thresholds {
        report.thresholds.extend([Named::float("c0", th.c0), Named::float("c1", th.c1), Named::float("c2", th.c2)]);
    }
    if let Some(t) = &cls.triangle {
        report.geometry = Some(Geometry {
            shape: "triangle".into(),
            values: vec![
                Named::float("centroid", t.centroid_x),
                Named::float("r", t.incircle_radius),
                Named::float("side", t.side),
                Named::float("theta", t.theta),
                Named::float("mu1", t.mu[0]),
                Named::float("mu2", t.mu[1]),
                Named::float("nu1", t.nu[0]),
                Named::float("nu2", t.nu[1]),
                Named::float("nu3", t.nu[2]),
                Named::float("xi1", t.xi[0]),
                Named::float("xi2", t.xi[1]),
            ],
        });
    }
    report.roots = Some(roots_out("viete", &cubic::viete_roots_with(c, tol)));
    audit(report, &cls.comparisons);
}

// quartic

fn quartic_report(report: &mut Report, q: &Quartic, cls: &QuarticClassification) -> Result<()> {
    report.classification = Some(Classification {
        case: Some(cls.case.label().into()),
        nature: nature_label(cls.nature),
        regime: Some(format!("{:?}", cls.regime)),
    });
    let th = &cls.thresholds;
    if report.arithmetic != "rational" {
        report.thresholds.push(Named::float("C0", th.c0));
    }
    if let (Some(c1), Some(c2)) = (th.c1, th.c2) {
        report.thresholds.extend([Named::float("C1", c1), Named::float("C2", c2)]);
    }
    match th.d_roots {
        DRoots::Three { d1, d2, d3 } => {
            report.thresholds.extend([Named::float("d1", d1), Named::float("d2", d2), Named::float("d3", d3)])
        }
        DRoots::Single { d0 } | DRoots::Triple { d0 } => report.thresholds.push(Named::float("d0", d0)),
        DRoots::Repeated { dagger, tilde } => {
            report.thresholds.extend([Named::float("d_dagger", dagger), Named::float("d_tilde", tilde)])
        }
    }
    if let Ok(t) = tetrahedron_data(q.a(), q.b()) {
        report.geometry = Some(Geometry { shape: "tetrahedron".into(), values: tetra_values(&t) });
    }
    report.roots = Some(match &cls.closed_form_roots {
        Some(rs) => roots_out("closed-form", rs),
        None => roots_out("oracle", &oracle::solve(q, &OracleConfig::default())?),
    });
    audit(report, &cls.comparisons);
    Ok(())
}

/// Classify a quartic in the requested arithmetic, filling the input echo.
fn quartic_input(report: &mut Report, g: &GlobalOpts, tol: Tolerance, raw: &[String]) -> Result<(Quartic, QuarticClassification)> {
    let labels = names(4);
    if g.exact {
        let e = ExactQuartic::parse_checked(raw, labels)?;
        report.input = Some(input_exact("quartic", labels, &[&e.a, &e.b, &e.c, &e.d]));
        let q = e.to_float()?;
        let cls = exact::classify_quartic_exact(&e)?;
        report.thresholds.push(Named::new("discriminant", Num::rational(&exact::discriminant_quartic_exact(&e))));
        report.thresholds.push(Named::new("C0", Num::rational(&exact::quartic_c0_exact(&e.a, &e.b))));
        Ok((q, cls))
    } else {
        let x = parse_floats(raw, labels)?;
        report.input = Some(input_floats("quartic", labels, &x));
        let q = Quartic::new(x[0], x[1], x[2], x[3])?;
        report.thresholds.push(Named::float("discriminant", discriminant_quartic(&q)));
        Ok((q, classify_quartic_with(&q, tol)))
    }
}

trait ParseChecked: Sized {
    fn parse_checked(raw: &[String], labels: &[&str]) -> Result<Self>;
}

impl ParseChecked for ExactQuartic {
    fn parse_checked(raw: &[String], labels: &[&str]) -> Result<Self> {
        let v: Vec<BigRational> = raw.iter().zip(labels).map(|(s, n)| parse_exact(n, s)).collect::<Result<_>>()?;
        let [a, b, c, d]: [BigRational; 4] = v.try_into().map_err(|_| CliError::Usage("expected 4 coefficients".into()))?;
        Ok(ExactQuartic { a, b, c, d })
    }
}

impl ParseChecked for ExactCubic {
    fn parse_checked(raw: &[String], labels: &[&str]) -> Result<Self> {
        let v: Vec<BigRational> = raw.iter().zip(labels).map(|(s, n)| parse_exact(n, s)).collect::<Result<_>>()?;
        let [a, b, c]: [BigRational; 3] = v.try_into().map_err(|_| CliError::Usage("expected 3 coefficients".into()))?;
        Ok(ExactCubic { a, b, c })
    }
}

fn cubic_input(report: &mut Report, g: &GlobalOpts, tol: Tolerance, raw: &[String]) -> Result<(Cubic, CubicClassification)> {
    let labels = names(3);
    if g.exact {
        let e = ExactCubic::parse_checked(raw, labels)?;
        report.input = Some(input_exact("cubic", labels, &[&e.a, &e.b, &e.c]));
        report.thresholds.push(Named::new("discriminant", Num::rational(&exact::discriminant_cubic_exact(&e))));
        Ok((e.to_float()?, exact::classify_cubic_exact(&e)?))
    } else {
        let x = parse_floats(raw, labels)?;
        report.input = Some(input_floats("cubic", labels, &x));
        let c = Cubic::new(x[0], x[1], x[2])?;
        report.thresholds.push(Named::float("discriminant", discriminant_cubic(&c)));
        Ok((c, cubic::classify_cubic_with(&c, tol)))
    }
}

fn classify(report: &mut Report, g: &GlobalOpts, tol: Tolerance, input: &PolyInput) -> Result<()> {
    if let Some(raw) = &input.cubic {
        let (c, cls) = cubic_input(report, g, tol, raw)?;
        cubic_report(report, &c, &cls, tol);
        if g.oracle_check {
            report.oracle_check = Some(oracle_check(&c, |rs| cubic_matches(cls.kind, rs))?);
        }
    } else if let Some(raw) = &input.quartic {
        let (q, cls) = quartic_input(report, g, tol, raw)?;
        quartic_report(report, &q, &cls)?;
        if g.oracle_check {
            report.oracle_check = Some(oracle_check(&q, |rs| cls.nature.matches(rs))?);
        }
    }
    Ok(())
}

fn localize(report: &mut Report, g: &GlobalOpts, tol: Tolerance, raw: &[String]) -> Result<()> {
    let (q, cls) = quartic_input(report, g, tol, raw)?;
    quartic_report(report, &q, &cls)?;
    let loc = localize_roots(&q, &cls)?;
    report.localization = Some(Localization {
        branch: format!("{:?}", loc.branch),
        tie_at_c0: loc.tie_at_c0,
        intervals: loc
            .intervals
            .iter()
            .zip(["x4", "x3", "x2", "x1"])
            .map(|(iv, root)| IntervalOut { root: root.into(), lo: Num::float(iv.lo), hi: Num::float(iv.hi) })
            .collect(),
    });
    if g.oracle_check {
        report.oracle_check = Some(oracle_check(&q, |rs| cls.nature.matches(rs))?);
    }
    Ok(())
}

fn admissible(set: &AdmissibleSet) -> Admissible {
    match set {
        AdmissibleSet::Points(ps) => Admissible::Points { values: ps.iter().map(|p| Num::float(*p)).collect() },
        AdmissibleSet::Intervals(ivs) => Admissible::Intervals {
            intervals: ivs.iter().map(|iv| (iv.lo.map(Real), iv.hi.map(Real))).collect(),
        },
    }
}

fn synth(
    report: &mut Report,
    g: &GlobalOpts,
    tol: Tolerance,
    nature: &str,
    a: &str,
    b: Option<&str>,
    c: Option<&str>,
) -> Result<()> {
    let nature: Nature = nature.parse()?;
    let a = parse_float("a", a)?;
    let strategy = g.seed.map_or(Strategy::Midpoint, Strategy::RandomSeeded);
    let target = NatureTarget {
        nature,
        a,
        b: b.map(|s| parse_float("b", s)).transpose()?,
        c: c.map(|s| parse_float("c", s)).transpose()?,
        strategy,
    };
    let q = synthesize(&target)?;
    let chain = vec![
        ChainStep { coefficient: "b".into(), admissible: admissible(&admissible_b_range(a, nature)?), value: Num::float(q.b()) },
        ChainStep {
            coefficient: "c".into(),
            admissible: admissible(&admissible_c_range(a, q.b(), nature)?),
            value: Num::float(q.c()),
        },
        ChainStep {
            coefficient: "d".into(),
            admissible: admissible(&admissible_d_range(a, q.b(), q.c(), nature)?),
            value: Num::float(q.d()),
        },
    ];
    report.synthesis = Some(Synthesis {
        target: nature.name().into(),
        strategy: match strategy {
            Strategy::Midpoint => "midpoint".into(),
            Strategy::RandomSeeded(s) => format!("random seed {s}"),
        },
        chain,
    });
    let labels = names(4);
    let cls = if g.exact {
        let e = ExactQuartic::from_f64(&q)?;
        report.input = Some(input_exact("quartic", labels, &[&e.a, &e.b, &e.c, &e.d]));
        exact::classify_quartic_exact(&e)?
    } else {
        report.input = Some(input_floats("quartic", labels, &[q.a(), q.b(), q.c(), q.d()]));
        classify_quartic_with(&q, tol)
    };
    quartic_report(report, &q, &cls)?;
    if cls.nature != nature {
        return Err(polyclass::Error::RoundTripMismatch { expected: nature.name().into(), got: cls.nature.name().into() }.into());
    }
    // a synthesized boundary nature sits on a threshold by construction
    report.fragile = false;
    for a in &mut report.audit {
        a.flagged = false;
    }
    if g.oracle_check {
        report.oracle_check = Some(oracle_check(&q, |rs| cls.nature.matches(rs))?);
    }
    Ok(())
}

fn quintic(report: &mut Report, g: &GlobalOpts, raw: &[String]) -> Result<()> {
    report.arithmetic = "float".into();
    let labels = ["p", "q", "r", "s", "t"];
    let x = parse_floats(raw, &labels)?;
    let (p, q, r, s, t) = (x[0], x[1], x[2], x[3], x[4]);
    report.input = Some(input_floats("quintic", &labels, &x));
    let poly = Quintic::new(p, q, r, s, t)?;
    let cas = quintic_cascade(p, q, r, s);
    let mut values = vec![
        Named::float("delta5", cas.delta5(t)),
        Named::float("delta_t", cas.delta_t),
        Named::float("delta_tilde_s", cas.delta_tilde_s),
    ];
    if let Some(f) = cas.delta_tilde_s_factored {
        values.push(Named::float("delta_tilde_s_factored", f));
    }
    values.push(Named::float("delta_tilde_r", cas.delta_tilde_r));
    values.push(Named::float("R0", cas.r0));
    if let Some((r1, r2)) = cas.r12 {
        values.extend([Named::float("R1", r1), Named::float("R2", r2)]);
    }
    let (sign_changes, sign_changes_error) = match delta5_sign_changes(p, q, r, s) {
        Ok(sc) => (
            Some(SignChangesOut {
                count: sc.count,
                t_roots: sc.t_roots.iter().map(|x| Num::float(*x)).collect(),
                stationary_extrema: sc.stationary_extrema,
            }),
            None,
        ),
        Err(e) => {
            report.fragile = true;
            (None, Some(e.to_string()))
        }
    };
    report.quintic = Some(QuinticOut {
        delta5_coeffs: cas.delta5_coeffs.iter().map(|c| Num::float(*c)).collect(),
        values,
        sign_changes,
        sign_changes_error,
    });
    report.roots = Some(roots_out("oracle", &oracle::solve(&poly, &OracleConfig::default())?));
    let _ = g;
    Ok(())
}

fn render(report: &mut Report, g: &GlobalOpts, tol: Tolerance, input: &PolyInput) -> Result<String> {
    if let Some(raw) = &input.cubic {
        let (c, cls) = cubic_input(report, g, tol, raw)?;
        cubic_report(report, &c, &cls, tol);
        let t = cls.triangle.as_ref().ok_or(polyclass::Error::NoTriangle { value: c.a() * c.a() - 3.0 * c.b() })?;
        Ok(svg::cubic(t))
    } else {
        let raw = input.quartic.as_ref().expect("clap enforces one input");
        let (q, cls) = quartic_input(report, g, tol, raw)?;
        let t = tetrahedron_data(q.a(), q.b())?;
        quartic_report(report, &q, &cls)?;
        let roots = report.roots.as_ref().map(|r| {
            r.real.iter().flat_map(|x| std::iter::repeat(x.value.as_f64()).take(x.multiplicity)).collect::<Vec<_>>()
        });
        Ok(svg::quartic(&t, &roots.unwrap_or_default()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn exec(args: &str) -> Outcome {
        let argv = std::iter::once("polyclass").chain(args.split_whitespace());
        run(&Cli::try_parse_from(argv).unwrap())
    }

    #[test]
    fn classify_worked_example() {
        let o = exec("classify --quartic 3 2 -1 -0.95 --json");
        assert_eq!(o.exit, EXIT_OK);
        let c = o.report.classification.unwrap();
        assert_eq!((c.case.as_deref(), c.nature.as_str()), (Some("xvii"), "FourDistinctReal"));
        let roots: Vec<f64> = o.report.roots.unwrap().real.iter().map(|r| r.value.as_f64()).collect();
        for (x, want) in roots.iter().zip([-1.5379, -1.2787, -0.7928, 0.6094]) {
            assert!((x - want).abs() < 5e-5, "{x} {want}");
        }
    }

    #[test]
    fn exact_quadruple_is_fragile() {
        let o = exec("classify --quartic 4 6 4 1 --exact");
        assert_eq!(o.exit, EXIT_FRAGILE);
        assert_eq!(o.report.classification.unwrap().nature, "QuadrupleRoot");
        let r = o.report.roots.unwrap();
        assert_eq!(r.real.len(), 1);
        assert_eq!((r.real[0].value.as_f64(), r.real[0].multiplicity), (-1.0, 4));
        assert!(matches!(o.report.input.unwrap().coefficients[0].value, Num::Rational { .. }));
    }

    #[test]
    fn exact_rejects_decimals() {
        let o = exec("classify --quartic 3 2 -1 -0.95 --exact");
        assert_eq!(o.exit, EXIT_ERROR);
        assert_eq!(o.report.error.unwrap().kind, "Parse");
        assert_eq!(exec("classify --quartic 3 2 -1 -19/20 --exact").exit, EXIT_OK);
    }

    #[test]
    fn cubic_theta() {
        let o = exec("classify --cubic 0 -1 0");
        assert_eq!(o.report.classification.unwrap().nature, "ThreeDistinctReal");
        let g = o.report.geometry.unwrap();
        let theta = g.values.iter().find(|v| v.name == "theta").unwrap().value.as_f64();
        assert!((theta - std::f64::consts::FRAC_PI_6).abs() < 1e-12);
    }

    #[test]
    fn localize_high_branch() {
        let o = exec("localize --quartic -4 5 -1.75 -0.2");
        assert_eq!(o.exit, EXIT_OK);
        assert_eq!(o.report.localization.unwrap().branch, "HighC");
        let g = o.report.geometry.unwrap();
        let s1 = g.values.iter().find(|v| v.name == "sigma1").unwrap().value.as_f64();
        assert_eq!((s1 * 1e4).round() / 1e4, 1.7071);
        let o = exec("localize --quartic 0 1 0 1");
        assert_eq!((o.exit, o.report.error.unwrap().kind.as_str()), (EXIT_ERROR, "NotFourReal"));
    }

    #[test]
    fn synthesize_quadruple() {
        let o = exec("synthesize --nature quadruple --a 4");
        assert_eq!(o.exit, EXIT_OK);
        let cs: Vec<f64> = o.report.input.unwrap().coefficients.iter().map(|c| c.value.as_f64()).collect();
        assert_eq!(cs, vec![4.0, 6.0, 4.0, 1.0]);
        assert_eq!(o.report.synthesis.unwrap().chain.len(), 3);
    }

    #[test]
    fn oracle_check_keeps_verdict() {
        for args in ["classify --quartic 3 2 -1 -0.95", "classify --quartic 0 -2 0 1", "classify --cubic 1 1 1"] {
            let plain = exec(args);
            let checked = exec(&format!("{args} --oracle-check"));
            assert_eq!(plain.report.classification, checked.report.classification);
            assert!(checked.report.oracle_check.unwrap().agrees);
        }
    }

    #[test]
    fn quintic_free_term() {
        let o = exec("quintic --coeffs 0 0 0 1 0");
        let q = o.report.quintic.unwrap();
        let r = q.values.iter().find(|v| v.name == "delta_tilde_r").unwrap();
        assert_eq!(r.value.as_f64(), 0.0);
        assert_eq!(q.sign_changes.unwrap().count, 0);
    }

    #[test]
    fn render_needs_triangle() {
        let o = exec("render --cubic 1 1 1");
        assert_eq!((o.exit, o.report.error.unwrap().kind.as_str()), (EXIT_ERROR, "NoTriangle"));
    }
}
