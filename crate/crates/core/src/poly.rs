//! Monic polynomial types, evaluation, derivatives, discriminants and the
//! Sturm-constant cross-check classifier.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::expr;
use crate::tolerance::{max_abs, Tolerance};

fn check_finite(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite { name, value })
    }
}

fn normalize(lead: f64) -> Result<f64> {
    let lead = check_finite("leading", lead)?;
    if lead == 0.0 {
        return Err(Error::ZeroLeading);
    }
    Ok(lead)
}

/// Horner evaluation of a monic polynomial whose non-leading coefficients are
/// given in descending order.
pub fn eval_monic(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(1.0, |acc, &c| acc * x + c)
}

/// Largest monomial magnitude `|cᵢ xⁱ|` at `x`, used to scale residuals.
pub fn monomial_scale(coeffs: &[f64], x: f64) -> f64 {
    let n = coeffs.len();
    let mut scale = x.abs().powi(n as i32);
    for (i, c) in coeffs.iter().enumerate() {
        scale = scale.max((c * x.powi((n - 1 - i) as i32)).abs());
    }
    scale
}

/// Monic polynomial of fixed degree with real coefficients.
pub trait MonicPolynomial {
    fn degree(&self) -> usize;

    /// Non-leading coefficients in descending order of power.
    fn coefficients(&self) -> Vec<f64>;

    fn eval(&self, x: f64) -> f64 {
        eval_monic(&self.coefficients(), x)
    }
}

/// Monic quadratic x² + a·x + b.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadratic {
    a: f64,
    b: f64,
}

impl Quadratic {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        Ok(Quadratic { a: check_finite("a", a)?, b: check_finite("b", b)? })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Real roots in ascending order, or `None` when they are complex.
    pub fn real_roots(&self) -> Option<(f64, f64)> {
        let disc = self.a * self.a - 4.0 * self.b;
        if disc < 0.0 {
            return None;
        }
        let s = disc.sqrt();
        // avoid cancellation: compute the larger-magnitude root first
        let q = -0.5 * (self.a + s.copysign(self.a));
        let (r1, r2) = if q == 0.0 { (0.0, 0.0) } else { (q, self.b / q) };
        Some(if r1 <= r2 { (r1, r2) } else { (r2, r1) })
    }
}

impl MonicPolynomial for Quadratic {
    fn degree(&self) -> usize {
        2
    }

    fn coefficients(&self) -> Vec<f64> {
        vec![self.a, self.b]
    }
}

/// Monic cubic x³ + a·x² + b·x + c.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cubic {
    a: f64,
    b: f64,
    c: f64,
}

impl Cubic {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        Ok(Cubic { a: check_finite("a", a)?, b: check_finite("b", b)?, c: check_finite("c", c)? })
    }

    /// Build from a possibly non-monic coefficient list `lead·x³ + …`.
    pub fn from_coefficients(lead: f64, a: f64, b: f64, c: f64) -> Result<Self> {
        let lead = normalize(lead)?;
        Cubic::new(a / lead, b / lead, c / lead)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Derivative 3x² + 2a·x + b as `(3, monic quadratic)`.
    pub fn derivative(&self) -> (f64, Quadratic) {
        (3.0, Quadratic { a: 2.0 * self.a / 3.0, b: self.b / 3.0 })
    }
}

impl MonicPolynomial for Cubic {
    fn degree(&self) -> usize {
        3
    }

    fn coefficients(&self) -> Vec<f64> {
        vec![self.a, self.b, self.c]
    }

    fn eval(&self, x: f64) -> f64 {
        ((x + self.a) * x + self.b) * x + self.c
    }
}

/// Monic quartic x⁴ + a·x³ + b·x² + c·x + d.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quartic {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl Quartic {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Ok(Quartic {
            a: check_finite("a", a)?,
            b: check_finite("b", b)?,
            c: check_finite("c", c)?,
            d: check_finite("d", d)?,
        })
    }

    pub fn from_coefficients(lead: f64, a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let lead = normalize(lead)?;
        Quartic::new(a / lead, b / lead, c / lead, d / lead)
    }

    /// Expand ∏(x − rᵢ) for four given roots.
    pub fn from_roots(r: [f64; 4]) -> Result<Self> {
        let e1 = r[0] + r[1] + r[2] + r[3];
        let e2 = r[0] * r[1] + r[0] * r[2] + r[0] * r[3] + r[1] * r[2] + r[1] * r[3] + r[2] * r[3];
        let e3 = r[0] * r[1] * r[2] + r[0] * r[1] * r[3] + r[0] * r[2] * r[3] + r[1] * r[2] * r[3];
        let e4 = r[0] * r[1] * r[2] * r[3];
        Quartic::new(-e1, e2, -e3, e4)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn d(&self) -> f64 {
        self.d
    }

    /// p′(x) = 4x³ + 3a·x² + 2b·x + c, returned as `(4, monic cubic)`.
    pub fn derivative(&self) -> (f64, Cubic) {
        (4.0, Cubic { a: 0.75 * self.a, b: 0.5 * self.b, c: 0.25 * self.c })
    }

    /// p(x) − d, the part of the quartic that does not depend on the free term.
    pub fn eval_without_free_term(&self, x: f64) -> f64 {
        (((x + self.a) * x + self.b) * x + self.c) * x
    }

    /// Same quartic with a different free term.
    pub fn with_d(&self, d: f64) -> Result<Self> {
        Quartic::new(self.a, self.b, self.c, d)
    }
}

impl MonicPolynomial for Quartic {
    fn degree(&self) -> usize {
        4
    }

    fn coefficients(&self) -> Vec<f64> {
        vec![self.a, self.b, self.c, self.d]
    }

    fn eval(&self, x: f64) -> f64 {
        (((x + self.a) * x + self.b) * x + self.c) * x + self.d
    }
}

/// Monic quintic x⁵ + p·x⁴ + q·x³ + r·x² + s·x + t.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quintic {
    p: f64,
    q: f64,
    r: f64,
    s: f64,
    t: f64,
}

impl Quintic {
    pub fn new(p: f64, q: f64, r: f64, s: f64, t: f64) -> Result<Self> {
        Ok(Quintic {
            p: check_finite("p", p)?,
            q: check_finite("q", q)?,
            r: check_finite("r", r)?,
            s: check_finite("s", s)?,
            t: check_finite("t", t)?,
        })
    }

    pub fn from_coefficients(lead: f64, p: f64, q: f64, r: f64, s: f64, t: f64) -> Result<Self> {
        let lead = normalize(lead)?;
        Quintic::new(p / lead, q / lead, r / lead, s / lead, t / lead)
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    /// 5x⁴ + 4p·x³ + 3q·x² + 2r·x + s as `(5, monic quartic)`.
    pub fn derivative(&self) -> (f64, Quartic) {
        (
            5.0,
            Quartic { a: 0.8 * self.p, b: 0.6 * self.q, c: 0.4 * self.r, d: 0.2 * self.s },
        )
    }
}

impl MonicPolynomial for Quintic {
    fn degree(&self) -> usize {
        5
    }

    fn coefficients(&self) -> Vec<f64> {
        vec![self.p, self.q, self.r, self.s, self.t]
    }
}

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Interval { lo, hi }
    }

    /// Containment with an absolute slack on both ends.
    pub fn contains(&self, x: f64, slack: f64) -> bool {
        x >= self.lo - slack && x <= self.hi + slack
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// A real root with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealRoot {
    pub value: f64,
    pub multiplicity: usize,
}

/// Sorted real roots with multiplicities, the number of complex-conjugate pairs
/// and per-root residuals `|p(root)|`.
///
/// Roots are stored in ascending order; the descending labels x₁ ≥ x₂ ≥ … used
/// for the geometric constructions correspond to reading this list backwards.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    roots: Vec<RealRoot>,
    complex_pairs: usize,
    residuals: Vec<f64>,
}

impl RootSet {
    /// Panics if the roots are not strictly increasing or a multiplicity is zero.
    pub fn new(roots: Vec<RealRoot>, complex_pairs: usize, residuals: Vec<f64>) -> Self {
        assert_eq!(roots.len(), residuals.len(), "one residual per root");
        assert!(roots.iter().all(|r| r.multiplicity > 0), "multiplicities must be positive");
        assert!(
            roots.windows(2).all(|w| w[0].value < w[1].value),
            "roots must be strictly increasing: {roots:?}"
        );
        RootSet { roots, complex_pairs, residuals }
    }

    /// Build from `(value, multiplicity)` pairs in any order, computing residuals
    /// against `poly`. Coincident values are merged.
    pub fn from_values<P: MonicPolynomial + ?Sized>(
        poly: &P,
        mut values: Vec<(f64, usize)>,
        complex_pairs: usize,
    ) -> Self {
        values.sort_by(|x, y| x.0.total_cmp(&y.0));
        let mut roots: Vec<RealRoot> = Vec::with_capacity(values.len());
        for (value, multiplicity) in values {
            match roots.last_mut() {
                Some(last) if last.value == value => last.multiplicity += multiplicity,
                _ => roots.push(RealRoot { value, multiplicity }),
            }
        }
        let residuals = roots.iter().map(|r| poly.eval(r.value).abs()).collect();
        RootSet { roots, complex_pairs, residuals }
    }

    pub fn roots(&self) -> &[RealRoot] {
        &self.roots
    }

    pub fn complex_pairs(&self) -> usize {
        self.complex_pairs
    }

    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }

    /// Number of real roots counted with multiplicity.
    pub fn real_count(&self) -> usize {
        self.roots.iter().map(|r| r.multiplicity).sum()
    }

    pub fn degree(&self) -> usize {
        self.real_count() + 2 * self.complex_pairs
    }

    /// Multiplicities in ascending root order.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.roots.iter().map(|r| r.multiplicity).collect()
    }

    /// Real roots repeated by multiplicity, ascending.
    pub fn expanded(&self) -> Vec<f64> {
        self.roots
            .iter()
            .flat_map(|r| std::iter::repeat(r.value).take(r.multiplicity))
            .collect()
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .roots
            .iter()
            .map(|r| {
                if r.multiplicity == 1 {
                    format!("{}", r.value)
                } else {
                    format!("{} (x{})", r.value, r.multiplicity)
                }
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))?;
        if self.complex_pairs > 0 {
            write!(f, " + {} complex pair(s)", self.complex_pairs)?;
        }
        Ok(())
    }
}

/// δ₃ = −27c² + (18ab − 4a³)c + a²b² − 4b³; positive iff three distinct real roots.
pub fn discriminant_cubic(c: &Cubic) -> f64 {
    expr::cubic_discriminant(&c.a, &c.b, &c.c)
}

/// Magnitude of the largest monomial of the cubic discriminant.
pub fn discriminant_cubic_scale(c: &Cubic) -> f64 {
    let (a, b, c) = (c.a, c.b, c.c);
    max_abs(&[27.0 * c * c, 18.0 * a * b * c, 4.0 * a.powi(3) * c, a * a * b * b, 4.0 * b.powi(3)])
}

/// Quartic discriminant Δ, written as a cubic in the free term d.
pub fn discriminant_quartic(q: &Quartic) -> f64 {
    expr::quartic_discriminant(&q.a, &q.b, &q.c, &q.d)
}

/// Magnitude of the largest of the sixteen monomials of Δ.
pub fn discriminant_quartic_scale(q: &Quartic) -> f64 {
    let (a, b, c, d) = (q.a, q.b, q.c, q.d);
    let (a2, b2, c2, d2) = (a * a, b * b, c * c, d * d);
    max_abs(&[
        256.0 * d2 * d,
        27.0 * a2 * a2 * d2,
        144.0 * a2 * b * d2,
        192.0 * a * c * d2,
        128.0 * b2 * d2,
        18.0 * a2 * a * b * c * d,
        4.0 * a2 * b2 * b * d,
        6.0 * a2 * c2 * d,
        80.0 * a * b2 * c * d,
        16.0 * b2 * b2 * d,
        144.0 * b * c2 * d,
        4.0 * a2 * a * c2 * c,
        a2 * b2 * c2,
        18.0 * a * b * c2 * c,
        4.0 * b2 * b * c2,
        27.0 * c2 * c2,
    ])
}

/// Cayley's Sturmian constants of a quartic. S₂ is not part of the sequence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SturmConstants {
    pub s0: f64,
    pub s1: f64,
    pub s3: f64,
    pub s4: f64,
    pub s5: f64,
    scales: [f64; 3],
}

impl SturmConstants {
    /// Largest-term magnitudes of S₃, S₄, S₅.
    pub fn scales(&self) -> [f64; 3] {
        self.scales
    }
}

pub fn sturm_constants(q: &Quartic) -> SturmConstants {
    let (a, b, c, d) = (q.a, q.b, q.c, q.d);
    let s3 = 3.0 * a * a - 8.0 * b;
    let s4 = expr::sturm_s4(&a, &b, &c, &d);
    let s4_scale = max_abs(&[
        3.0 * a.powi(3) * c,
        a * a * b * b,
        6.0 * a * a * d,
        14.0 * a * b * c,
        4.0 * b.powi(3),
        16.0 * b * d,
        18.0 * c * c,
    ]);
    SturmConstants {
        s0: 1.0,
        s1: 1.0,
        s3,
        s4,
        s5: discriminant_quartic(q),
        scales: [max_abs(&[3.0 * a * a, 8.0 * b]), s4_scale, discriminant_quartic_scale(q)],
    }
}

fn variations(signs: &[i8]) -> usize {
    let nonzero: Vec<i8> = signs.iter().copied().filter(|s| *s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of real roots from the signs of the Sturmian constants: the excess of
/// sign variations at −∞ over those at +∞.
///
/// S₅ must be clear of zero. When S₃ or S₄ vanishes the remainder chain loses a
/// degree and the table no longer applies; the count then comes from the
/// explicit Sturm chain of `q`.
pub fn cayley_real_root_count(sc: &SturmConstants, tol: Tolerance) -> Result<usize> {
    let signs = table_signs(sc, tol)?;
    match signs {
        [Some(s3), Some(s4), s5] => table_count(s3, s4, s5),
        _ => Err(Error::AmbiguousSign {
            name: if signs[0].is_none() { "S3" } else { "S4" },
            value: if signs[0].is_none() { sc.s3 } else { sc.s4 },
        }),
    }
}

/// Like [`cayley_real_root_count`], falling back to the explicit chain when
/// S₃ or S₄ is zero within tolerance.
pub fn sturm_real_root_count(q: &Quartic, tol: Tolerance) -> Result<usize> {
    let sc = sturm_constants(q);
    match table_signs(&sc, tol)? {
        [Some(s3), Some(s4), s5] => table_count(s3, s4, s5),
        _ => Ok(chain_count(q, tol)),
    }
}

fn table_signs(sc: &SturmConstants, tol: Tolerance) -> Result<[Option<i8>; 3]> {
    let names = ["S3", "S4", "S5"];
    let values = [sc.s3, sc.s4, sc.s5];
    let mut signs = [None; 3];
    for i in 0..3 {
        signs[i] = match tol.sign(names[i], values[i], sc.scales[i]).ordering {
            Ordering::Equal => None,
            Ordering::Greater => Some(1),
            Ordering::Less => Some(-1),
        };
    }
    if signs[2].is_none() {
        return Err(Error::AmbiguousSign { name: "S5", value: sc.s5 });
    }
    Ok(signs)
}

fn table_count(s3: i8, s4: i8, s5: Option<i8>) -> Result<usize> {
    let s5 = s5.expect("S5 sign checked");
    // leading coefficients of degrees 4, 3, 2, 1, 0
    let plus = [1, 1, s3, s4, s5];
    let minus = [1, -1, s3, -s4, s5];
    let (vp, vm) = (variations(&plus), variations(&minus));
    if vm < vp {
        let show = |s: &[i8]| s.iter().map(|x| if *x > 0 { '+' } else { '-' }).collect::<String>();
        return Err(Error::ImpossibleSignPattern {
            pattern: format!("({}),[{}]", show(&plus), show(&minus)),
        });
    }
    Ok(vm - vp)
}

fn chain_count(q: &Quartic, tol: Tolerance) -> usize {
    let trim = |mut v: Vec<f64>, scale: f64| {
        while v.len() > 1 && v[0].abs() <= tol.eps * scale {
            v.remove(0);
        }
        v
    };
    let mut chain = vec![vec![1.0, q.a, q.b, q.c, q.d], vec![4.0, 3.0 * q.a, 2.0 * q.b, q.c]];
    while chain.last().map_or(false, |p| p.len() > 1) {
        let n = chain.len();
        let (num, den) = (&chain[n - 2], &chain[n - 1]);
        let mut r = num.clone();
        for i in 0..=(num.len() - den.len()) {
            let f = r[i] / den[0];
            for (j, dj) in den.iter().enumerate() {
                r[i + j] -= f * dj;
            }
        }
        let scale = max_abs(num).max(max_abs(den));
        let rem: Vec<f64> = r[(num.len() - den.len() + 1)..].iter().map(|x| -x).collect();
        let rem = trim(rem, scale);
        if rem.len() == 1 && rem[0].abs() <= tol.eps * scale {
            break;
        }
        chain.push(rem);
    }
    let at = |sign_x: f64| -> Vec<i8> {
        chain
            .iter()
            .map(|p| {
                let deg = (p.len() - 1) as i32;
                let s = p[0] * sign_x.powi(deg);
                if s > 0.0 {
                    1
                } else {
                    -1
                }
            })
            .collect()
    };
    variations(&at(-1.0)).saturating_sub(variations(&at(1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_discriminant_examples() {
        assert_eq!(discriminant_cubic(&Cubic::new(0.0, -1.0, 0.0).unwrap()), 4.0);
        assert_eq!(discriminant_cubic(&Cubic::new(0.0, 0.0, 0.0).unwrap()), 0.0);
    }

    #[test]
    fn quartic_discriminant_examples() {
        assert_eq!(discriminant_quartic(&Quartic::new(0.0, 0.0, 0.0, 0.0).unwrap()), 0.0);
        assert_eq!(discriminant_quartic(&Quartic::new(0.0, -2.0, 0.0, 1.0).unwrap()), 0.0);
        assert!(discriminant_quartic(&Quartic::new(3.0, 2.0, -1.0, -0.95).unwrap()) > 0.0);
    }

    #[test]
    fn sturm_constants_examples() {
        let z = sturm_constants(&Quartic::new(0.0, 0.0, 0.0, 0.0).unwrap());
        assert_eq!((z.s0, z.s1, z.s3, z.s4, z.s5), (1.0, 1.0, 0.0, 0.0, 0.0));
        assert_eq!(sturm_constants(&Quartic::new(3.0, 2.0, -1.0, -0.95).unwrap()).s3, 11.0);
        assert_eq!(sturm_constants(&Quartic::new(-4.0, 5.0, -1.75, -0.2).unwrap()).s3, 8.0);
    }

    #[test]
    fn cayley_counts() {
        let tol = Tolerance::default();
        let count = |a, b, c, d| cayley_real_root_count(&sturm_constants(&Quartic::new(a, b, c, d).unwrap()), tol);
        assert_eq!(count(3.0, 2.0, -1.0, -0.95).unwrap(), 4);
        assert_eq!(count(1.0, 1.0, 1.0, 5.0).unwrap(), 0);
        let chain = |a, b, c, d| sturm_real_root_count(&Quartic::new(a, b, c, d).unwrap(), tol);
        assert_eq!(chain(0.0, 0.0, 0.0, 1.0).unwrap(), 0);
        assert_eq!(chain(0.0, 0.0, 0.0, -1.0).unwrap(), 2);
        assert_eq!(chain(3.0, 2.0, -1.0, -0.95).unwrap(), 4);
        // S3 = S4 = 0 has no table row
        assert!(count(0.0, 0.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn cayley_ambiguous_on_repeated_root() {
        let q = Quartic::new(0.0, -2.0, 0.0, 1.0).unwrap();
        assert!(matches!(
            cayley_real_root_count(&sturm_constants(&q), Tolerance::default()),
            Err(Error::AmbiguousSign { name: "S5", .. })
        ));
        assert!(sturm_real_root_count(&q, Tolerance::default()).is_err());
    }

    #[test]
    fn cayley_rejects_impossible_pattern() {
        let sc = SturmConstants { s0: 1.0, s1: 1.0, s3: -1.0, s4: 1.0, s5: -1.0, scales: [1.0; 3] };
        assert!(matches!(
            cayley_real_root_count(&sc, Tolerance::default()),
            Err(Error::ImpossibleSignPattern { .. })
        ));
    }

    #[test]
    fn eval_and_derivative() {
        assert_eq!(Cubic::new(0.0, -1.0, 0.0).unwrap().eval(2.0), 6.0);
        let (k, d) = Quartic::new(0.0, 0.0, 0.0, 0.0).unwrap().derivative();
        assert_eq!(k, 4.0);
        assert_eq!(d, Cubic::new(0.0, 0.0, 0.0).unwrap());
        let (_, d) = Quartic::new(3.0, 2.0, -1.0, -0.95).unwrap().derivative();
        assert_eq!((d.a(), d.b(), d.c()), (2.25, 1.0, -0.25));
    }

    #[test]
    fn constructors_normalize_and_validate() {
        let q = Quartic::from_coefficients(2.0, 6.0, 4.0, -2.0, -1.9).unwrap();
        assert_eq!(q, Quartic::new(3.0, 2.0, -1.0, -0.95).unwrap());
        assert_eq!(Cubic::from_coefficients(0.0, 1.0, 1.0, 1.0), Err(Error::ZeroLeading));
        assert!(matches!(Cubic::new(f64::NAN, 0.0, 0.0), Err(Error::NonFinite { name: "a", .. })));
        assert!(Quintic::new(0.0, 0.0, f64::INFINITY, 0.0, 0.0).is_err());
    }

    #[test]
    fn quadratic_roots_stable() {
        let (r1, r2) = Quadratic::new(-1e8, 1.0).unwrap().real_roots().unwrap();
        assert!((r1 - 1e-8).abs() < 1e-20);
        assert!((r2 - 1e8).abs() < 1e-6);
        assert!(Quadratic::new(0.0, 1.0).unwrap().real_roots().is_none());
    }
}
