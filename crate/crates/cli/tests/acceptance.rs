//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` are reported faithfully but do not
//! fail the run; see the README for why they cannot hold.

use std::process::Command;
use std::time::{Duration, Instant};

use clap::Parser;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use polyclass::cubic::{cubic_isolation_intervals, triangle_data, viete_roots};
use polyclass::exact::{classify_quartic_exact, discriminant_quartic_exact, rational_from_f64, ExactQuartic};
use polyclass::geometry::{root_bounds, span_bounds};
use polyclass::oracle::{brute_discriminant, solve, OracleConfig};
use polyclass::poly::{
    discriminant_quartic, monomial_scale, sturm_constants, Cubic, MonicPolynomial, Quartic, Quintic,
};
use polyclass::quartic::{classify_quartic, delta3, delta3_expanded, Nature};
use polyclass::quintic::quintic_cascade;
use polyclass::reverse::{synthesize, NatureTarget, Strategy};
use polyclass_cli::args::Cli;
use polyclass_cli::commands;
use polyclass_cli::report::Report;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// The span lower bound h is not a bound: two double pairs reach l = h·√3/2.
const KNOWN_UNATTAINABLE: &[u32] = &[5];

struct Verdict {
    id: u32,
    pass: bool,
    detail: String,
}

fn verdict(id: u32, pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { id, pass, detail: detail.into() }
}

fn r4(x: f64) -> i64 {
    (x * 1e4).round() as i64
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_polyclass"))
}

fn cli_json(args: &[&str]) -> (Report, i32) {
    let out = bin().args(args).arg("--json").output().expect("run polyclass");
    let text = String::from_utf8(out.stdout).expect("utf-8");
    let report = Report::from_json(&text).expect("report parses");
    assert_eq!(Report::from_json(&report.to_json()).unwrap(), report, "report round-trips");
    (report, out.status.code().unwrap_or(-1))
}

fn named(report: &Report, name: &str) -> Option<f64> {
    let geometry = report.geometry.iter().flat_map(|g| g.values.iter());
    report.thresholds.iter().chain(geometry).find(|v| v.name == name).map(|v| v.value.as_f64())
}

/// Median in-process time of a command, spawn excluded.
fn median_runtime(args: &str) -> Duration {
    let cli = Cli::try_parse_from(std::iter::once("polyclass").chain(args.split_whitespace())).unwrap();
    let mut times: Vec<Duration> = (0..21)
        .map(|_| {
            let t = Instant::now();
            let o = commands::run(&cli);
            std::hint::black_box(o);
            t.elapsed()
        })
        .collect();
    times.sort();
    times[10]
}

fn check_named(report: &Report, expected: &[(&str, f64)], misses: &mut Vec<String>) {
    for &(name, want) in expected {
        match named(report, name) {
            Some(x) if r4(x) == r4(want) => {}
            got => misses.push(format!("{name}={got:?} want {want}")),
        }
    }
}

fn check_roots(report: &Report, want: &[f64], misses: &mut Vec<String>) {
    let mut got: Vec<f64> = report
        .roots
        .iter()
        .flat_map(|r| r.real.iter())
        .flat_map(|x| std::iter::repeat(x.value.as_f64()).take(x.multiplicity))
        .collect();
    got.sort_by(|a, b| b.total_cmp(a));
    if got.len() != want.len() || got.iter().zip(want).any(|(x, w)| r4(*x) != r4(*w)) {
        misses.push(format!("roots {got:?} want {want:?}"));
    }
}

fn criterion_1() -> Verdict {
    let (report, code) = cli_json(&["classify", "--quartic", "3", "2", "-1", "-0.95"]);
    let mut misses = Vec::new();
    let cls = report.classification.clone().unwrap();
    if cls.case.as_deref() != Some("xvii") || cls.nature != "FourDistinctReal" || code != 0 {
        misses.push(format!("case {:?} nature {} exit {code}", cls.case, cls.nature));
    }
    check_named(
        &report,
        &[("C2", -1.2526), ("C0", -0.3750), ("C1", 0.5026), ("d1", 0.0967), ("d2", -0.9288), ("d3", -1.0)],
        &mut misses,
    );
    check_roots(&report, &[0.6094, -0.7928, -1.2787, -1.5379], &mut misses);
    let t = median_runtime("classify --quartic 3 2 -1 -0.95");
    if t >= Duration::from_millis(10) {
        misses.push(format!("runtime {t:?}"));
    }
    verdict(1, misses.is_empty(), format!("case (xvii) FourDistinctReal, thresholds and roots to 4 dp, {t:?}; {misses:?}"))
}

fn criterion_2() -> Verdict {
    let (report, code) = cli_json(&["classify", "--quartic", "-4", "5", "-1.75", "-0.2"]);
    let mut misses = Vec::new();
    let cls = report.classification.clone().unwrap();
    if cls.nature != "FourDistinctReal" || code != 0 {
        misses.push(format!("nature {} exit {code}", cls.nature));
    }
    check_named(
        &report,
        &[
            ("C0", -2.0),
            ("C1", -1.4557),
            ("C2", -2.5443),
            ("d3", -0.2659),
            ("d2", -0.1681),
            ("d1", 0.1840),
            ("R", 0.4082),
            ("L", 2.0),
            ("sigma3", 0.2929),
            ("phi1", 0.1835),
            ("rho1", 1.4082),
            ("sigma1", 1.7071),
        ],
        &mut misses,
    );
    check_roots(&report, &[1.7679, 1.4535, 0.8682, -0.0896], &mut misses);
    verdict(2, misses.is_empty(), format!("thresholds, roots and tetrahedron landmarks to 4 dp; {misses:?}"))
}

#[derive(Default, Clone, Copy)]
struct FuzzCounts {
    total: usize,
    agree: usize,
    robust: usize,
    robust_agree: usize,
    oracle_errors: usize,
}

impl FuzzCounts {
    fn merge(self, o: FuzzCounts) -> FuzzCounts {
        FuzzCounts {
            total: self.total + o.total,
            agree: self.agree + o.agree,
            robust: self.robust + o.robust,
            robust_agree: self.robust_agree + o.robust_agree,
            oracle_errors: self.oracle_errors + o.oracle_errors,
        }
    }
}

fn criterion_3() -> Verdict {
    const CHUNKS: u64 = 200;
    const PER_CHUNK: usize = 5_000;
    let start = Instant::now();
    let cfg = OracleConfig::default();
    let c = (0..CHUNKS)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x3000 + chunk);
            let mut c = FuzzCounts::default();
            for _ in 0..PER_CHUNK {
                let x: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-10.0..10.0));
                let q = Quartic::new(x[0], x[1], x[2], x[3]).unwrap();
                let cls = classify_quartic(&q);
                let robust = !cls.is_fragile();
                let ok = match solve(&q, &cfg) {
                    Ok(roots) => cls.nature.matches(&roots),
                    Err(_) => {
                        c.oracle_errors += 1;
                        false
                    }
                };
                c.total += 1;
                c.agree += usize::from(ok);
                c.robust += usize::from(robust);
                c.robust_agree += usize::from(robust && ok);
            }
            c
        })
        .reduce(FuzzCounts::default, FuzzCounts::merge);
    let t = start.elapsed();
    let rate = c.agree as f64 / c.total as f64;
    let pass = c.total == 1_000_000 && rate >= 0.999 && c.robust_agree == c.robust && t < Duration::from_secs(60);
    verdict(
        3,
        pass,
        format!(
            "{}/{} agree ({:.5}), robust subsample {}/{}, oracle errors {}, {:.1?}",
            c.agree, c.total, rate, c.robust_agree, c.robust, c.oracle_errors, t
        ),
    )
}

fn criterion_4() -> Verdict {
    const N: u64 = 100_000;
    let start = Instant::now();
    let fails: Vec<String> = (0..N)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x4000_0000 + i);
            // dyadic roots keep the constructed coefficients exact
            let mut r: [f64; 3] = std::array::from_fn(|_| f64::from(rng.gen_range(-10240..=10240)) / 1024.0);
            r.sort_by(f64::total_cmp);
            let cu = Cubic::new(-(r[0] + r[1] + r[2]), r[0] * r[1] + r[0] * r[2] + r[1] * r[2], -(r[0] * r[1] * r[2]))
                .unwrap();
            let got = viete_roots(&cu).expanded();
            if got.len() != 3 || got.iter().zip(r).any(|(x, w)| (x - w).abs() > 1e-9) {
                return Some(format!("viete {got:?} vs {r:?}"));
            }
            if r[0] == r[2] {
                return None;
            }
            let tri = triangle_data(&cu).ok()?;
            let rr = tri.incircle_radius;
            let span = r[2] - r[0];
            if span < 3.0 * rr - 1e-9 || span > 12f64.sqrt() * rr + 1e-9 {
                return Some(format!("span {span} outside [3r, sqrt12 r], r = {rr}"));
            }
            let iso = cubic_isolation_intervals(&cu).ok()?;
            if iso.intervals.iter().zip(r).any(|(iv, x)| !iv.contains(x, 1e-9)) {
                return Some(format!("isolation {:?} misses {r:?}", iso.intervals));
            }
            None
        })
        .collect();
    let t = start.elapsed();
    let pass = fails.is_empty() && t < Duration::from_secs(20);
    verdict(4, pass, format!("{} cubics, {} failures {:?}, {:.1?}", N, fails.len(), fails.first(), t))
}

fn criterion_5() -> Verdict {
    const N: u64 = 100_000;
    let start = Instant::now();
    let (outside, above_l, below_h, below_side) = (0..N)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5000_0000 + i);
            let mut r: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-10.0..10.0));
            r.sort_by(f64::total_cmp);
            let q = Quartic::from_roots(r).unwrap();
            let (lo, hi) = root_bounds(q.a(), q.b()).unwrap();
            let (h, edge) = span_bounds(q.a(), q.b()).unwrap();
            let side = h * 3f64.sqrt() / 2.0;
            let span = r[3] - r[0];
            (
                usize::from(r[0] < lo - 1e-9 || r[3] > hi + 1e-9),
                usize::from(span > edge + 1e-9),
                usize::from(span < h - 1e-9),
                usize::from(span < side - 1e-9),
            )
        })
        .reduce(|| (0, 0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2, a.3 + b.3));
    let t = start.elapsed();

    // (x - 1)^3 (x + 3): span h and root -3 at lambda_min
    let (h, _) = span_bounds(0.0, -6.0).unwrap();
    let (lo, _) = root_bounds(0.0, -6.0).unwrap();
    let triple_ok = (h - 4.0).abs() < 1e-12 && (lo + 3.0).abs() < 1e-12;
    // (x + 1)^2 (x - 1)^2: span 2, compared against h
    let (h2, _) = span_bounds(0.0, -2.0).unwrap();
    let pairs_ok = (2.0 - h2).abs() < 1e-9;
    // (x + 1) x^2 (x - 1): span 2 = L
    let (_, edge) = span_bounds(0.0, -1.0).unwrap();
    let middle_ok = (edge - 2.0).abs() < 1e-12;

    let pass = outside == 0
        && above_l == 0
        && below_h == 0
        && triple_ok
        && pairs_ok
        && middle_ok
        && t < Duration::from_secs(30);
    verdict(
        5,
        pass,
        format!(
            "{N} quartics: roots outside [lambda_min, lambda_max] {outside}, span > L {above_l}, span < h {below_h}, \
             span < l {below_side}; triple+single attains h and lambda_min: {triple_ok}; two double pairs attain h: \
             {pairs_ok} (span 2 vs h = {h2:.6}, the side l = 2); L attained: {middle_ok}; {t:.1?}"
        ),
    )
}

/// Last Sturm remainder of a monic quartic, computed exactly.
fn sturm_tail(c: &[BigRational; 4]) -> Option<BigRational> {
    type P = Vec<BigRational>;
    fn rem(a: &P, b: &P) -> P {
        // coefficients in descending order
        let mut r = a.clone();
        while r.len() >= b.len() {
            let f = &r[0] / &b[0];
            for (i, bi) in b.iter().enumerate() {
                r[i] = &r[i] - &f * bi;
            }
            r.remove(0);
        }
        while r.first().is_some_and(Zero::is_zero) {
            r.remove(0);
        }
        r
    }
    let one = BigRational::from_integer(BigInt::from(1));
    let p0: P = vec![one.clone(), c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()];
    let p1: P = (0..4).map(|i| &p0[i] * BigRational::from_integer(BigInt::from(4 - i as i64))).collect();
    let (mut a, mut b) = (p0, p1);
    loop {
        let r: P = rem(&a, &b).into_iter().map(|x| -x).collect();
        if r.is_empty() {
            return None;
        }
        if r.len() == 1 {
            return Some(r[0].clone());
        }
        a = b;
        b = r;
    }
}

fn criterion_6() -> Verdict {
    let cfg = OracleConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6000);
    let (mut worst_delta, mut worst_d3, mut s5_mismatch, mut sturm_sign) = (0f64, 0f64, 0usize, 0usize);
    for _ in 0..10_000 {
        let x: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-10.0..10.0));
        let q = Quartic::new(x[0], x[1], x[2], x[3]).unwrap();
        let delta = discriminant_quartic(&q);
        let brute = brute_discriminant(&q, &cfg).unwrap();
        worst_delta = worst_delta.max((delta - brute).abs() / brute.abs());
        let d3f = delta3(&q);
        let d3e = delta3_expanded(&q);
        worst_d3 = worst_d3.max((d3f - d3e).abs() / d3e.abs());
        let exact = ExactQuartic::from_f64(&q).unwrap();
        let dx = discriminant_quartic_exact(&exact);
        let s5 = sturm_constants(&q).s5;
        s5_mismatch += usize::from((s5 - delta).abs() > 0.0);
        let c = [exact.a.clone(), exact.b.clone(), exact.c.clone(), exact.d.clone()];
        if let Some(tail) = sturm_tail(&c) {
            sturm_sign += usize::from(tail.signum() != dx.signum());
        }
        if (s5 - polyclass::exact::to_f64(&dx)).abs() > 1e-8 * polyclass::exact::to_f64(&dx.abs()) {
            s5_mismatch += 1;
        }
    }
    let pass = worst_delta < 1e-8 && worst_d3 < 1e-10 && s5_mismatch == 0 && sturm_sign == 0;
    verdict(
        6,
        pass,
        format!(
            "discriminant vs root product max rel {worst_delta:.2e}; factored vs expanded free-term discriminant \
             max rel {worst_d3:.2e}; S5 vs discriminant mismatches {s5_mismatch}, Sturm tail sign mismatches {sturm_sign}"
        ),
    )
}

/// Coefficients of the monic product of (x - r) over `roots` and the quadratic
/// factor x² + e x + f.
fn expand(roots: &[f64], quad: Option<(f64, f64)>) -> Vec<f64> {
    let mut p = vec![1.0];
    let mut mul = |f: &[f64]| {
        let mut out = vec![0.0; p.len() + f.len() - 1];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in f.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        p = out;
    };
    for r in roots {
        mul(&[1.0, -r]);
    }
    if let Some((e, f)) = quad {
        mul(&[1.0, e, f]);
    }
    p
}

fn criterion_7() -> Verdict {
    let grid: Vec<f64> = (-4..=4).map(|k| f64::from(k) / 2.0).collect();
    let mut candidates: Vec<Vec<f64>> = Vec::new();
    for &m in &grid {
        candidates.push(expand(&[m; 4], None));
        for &u in &grid {
            if u != m {
                candidates.push(expand(&[m, m, m, u], None));
                candidates.push(expand(&[m, m, u, u], None));
                for &v in &grid {
                    if v > u && v != m {
                        candidates.push(expand(&[m, m, u, v], None));
                    }
                }
            }
        }
        for e in (-6..=6).map(|k| f64::from(k) / 2.0) {
            for f in (1..=16).map(|k| f64::from(k) / 4.0) {
                if e * e < 4.0 * f {
                    candidates.push(expand(&[m, m], Some((e, f))));
                }
            }
        }
    }
    let wanted = [2u8, 5, 8, 11, 14, 16, 18, 21, 23, 26, 28, 31];
    let mut found: Vec<Option<Quartic>> = vec![None; wanted.len()];
    for c in &candidates {
        let q = Quartic::new(c[1], c[2], c[3], c[4]).unwrap();
        let n = classify_quartic(&q).case.number();
        if let Some(i) = wanted.iter().position(|&w| w == n) {
            found[i].get_or_insert(q);
        }
    }
    let cfg = OracleConfig::default();
    let mut problems = Vec::new();
    for (case, q) in wanted.iter().zip(&found) {
        let Some(q) = q else {
            problems.push(format!("no instance for case {case}"));
            continue;
        };
        let cls = classify_quartic(q);
        let Some(roots) = cls.closed_form_roots else {
            problems.push(format!("case {case}: no closed form"));
            continue;
        };
        let coeffs = q.coefficients();
        for r in roots.roots() {
            let res = q.eval(r.value).abs();
            if res >= 1e-8 * monomial_scale(&coeffs, r.value).max(1.0) {
                problems.push(format!("case {case}: residual {res:e} at {}", r.value));
            }
        }
        match solve(q, &cfg) {
            Ok(o) if o.multiplicities() == roots.multiplicities() && o.complex_pairs() == roots.complex_pairs() => {}
            other => problems.push(format!("case {case}: oracle {other:?} vs {roots}")),
        }
    }
    let covered = found.iter().filter(|f| f.is_some()).count();
    verdict(
        7,
        problems.is_empty(),
        format!("{covered}/12 zero-discriminant cases constructed and solved in closed form; {problems:?}"),
    )
}

fn criterion_8() -> Verdict {
    const PER_NATURE: u64 = 1_000;
    let failures: Vec<String> = Nature::ALL
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, &nature)| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x8000 + i as u64);
            let jobs: Vec<(f64, u64)> =
                (0..PER_NATURE).map(|_| (f64::from(rng.gen_range(-640..=640)) / 64.0, rng.gen())).collect();
            jobs.into_iter().filter_map(move |(a, seed)| {
                let target = NatureTarget { strategy: Strategy::RandomSeeded(seed), ..NatureTarget::new(nature, a) };
                let q = match synthesize(&target) {
                    Ok(q) => q,
                    Err(e) => return Some(format!("{nature} a={a}: {e}")),
                };
                if classify_quartic(&q).nature != nature {
                    return Some(format!("{nature}: {q:?}"));
                }
                if nature.is_repeated() {
                    let ex = classify_quartic_exact(&ExactQuartic::from_f64(&q).unwrap()).unwrap();
                    if ex.nature != nature {
                        return Some(format!("{nature} exact: {q:?} gave {}", ex.nature));
                    }
                }
                None
            })
        })
        .collect();
    let total = PER_NATURE as usize * Nature::ALL.len();
    verdict(
        8,
        failures.is_empty(),
        format!("{}/{} round trips across {} natures; {:?}", total - failures.len(), total, Nature::ALL.len(), failures.first()),
    )
}

fn rat(x: f64) -> BigRational {
    rational_from_f64(x).unwrap()
}

fn criterion_9() -> Verdict {
    let cfg = OracleConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x9000);
    let (mut worst5, mut worst_r, mut worst_s, mut identity_fail, mut s_checked) = (0f64, 0f64, 0f64, 0usize, 0usize);
    for _ in 0..100 {
        let [p, q, r, s, t]: [f64; 5] = std::array::from_fn(|_| rng.gen_range(-2.0..2.0));
        let c = quintic_cascade(p, q, r, s);
        let brute = brute_discriminant(&Quintic::new(p, q, r, s, t).unwrap(), &cfg).unwrap();
        worst5 = worst5.max((c.delta5(t) - brute).abs() / brute.abs());

        // discriminant in r of the quadratic bracket, exactly
        let (pr, qr) = (rat(p), rat(q));
        let n = |k: i64| BigRational::from_integer(BigInt::from(k));
        let lin = n(8) * &pr * &pr * &pr - n(30) * &pr * &qr;
        let cst = n(10) * &qr * &qr * &qr - n(3) * &pr * &pr * &qr * &qr;
        let disc = &lin * &lin - n(100) * cst;
        let k5 = n(2) * &pr * &pr - n(5) * &qr;
        let closed = n(8) * &k5 * &k5 * &k5;
        identity_fail += usize::from(disc != closed);
        let want = polyclass::exact::to_f64(&closed);
        worst_r = worst_r.max((c.delta_tilde_r - want).abs() / want.abs());

        if let Some(f) = c.delta_tilde_s_factored {
            s_checked += 1;
            worst_s = worst_s.max((f - c.delta_tilde_s).abs() / c.delta_tilde_s.abs());
        }
    }
    let pass = worst5 < 1e-7 && identity_fail == 0 && worst_r < 1e-12 && worst_s < 1e-10;
    verdict(
        9,
        pass,
        format!(
            "delta5 vs root product max rel {worst5:.2e}; delta_r identity failures {identity_fail}, float max rel \
             {worst_r:.2e}; delta_s factored vs expanded on {s_checked} samples max rel {worst_s:.2e}"
        ),
    )
}

fn criterion_10() -> Verdict {
    let dir = std::env::temp_dir().join(format!("polyclass-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let run = |args: &[&str]| bin().args(args).output().expect("run polyclass");
    let mut same = Vec::new();
    for args in [
        &["selftest", "--seed", "42", "--samples", "500"][..],
        &["selftest", "--seed", "42", "--samples", "500", "--json"][..],
        &["render", "--quartic", "3", "2", "-1", "-0.95"][..],
        &["render", "--cubic", "0", "-1", "0"][..],
    ] {
        let (a, b) = (run(args), run(args));
        same.push(a.stdout == b.stdout && a.status.code() == b.status.code() && !a.stdout.is_empty());
    }
    let files: Vec<Vec<u8>> = (0..2)
        .map(|i| {
            let path = dir.join(format!("render{i}.svg"));
            run(&["render", "--cubic", "2.25", "1", "-0.25", "--out", path.to_str().unwrap()]);
            std::fs::read(&path).unwrap_or_default()
        })
        .collect();
    same.push(!files[0].is_empty() && files[0] == files[1]);
    let _ = std::fs::remove_dir_all(&dir);
    verdict(10, same.iter().all(|&s| s), format!("byte-identical reruns: {same:?}"))
}

fn main() {
    let checks: [fn() -> Verdict; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut unexpected = Vec::new();
    for check in checks {
        let v = check();
        let known = KNOWN_UNATTAINABLE.contains(&v.id);
        let tag = match (v.pass, known) {
            (true, _) => "PASS",
            (false, true) => "FAIL (known unattainable)",
            (false, false) => "FAIL",
        };
        println!("criterion {:>2}: {tag}: {}", v.id, v.detail);
        if !v.pass && !known {
            unexpected.push(v.id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
