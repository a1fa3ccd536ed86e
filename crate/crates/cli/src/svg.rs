//! Deterministic SVG schematics: the root triangle of a cubic and the
//! tetrahedron of a quartic, both over the real axis.

use std::fmt::Write as _;

use polyclass::cubic::TriangleData;
use polyclass::geometry::TetrahedronData;

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 600.0;

/// World-to-screen map: uniform scale, world `center` at the screen middle.
struct View {
    center: f64,
    scale: f64,
}

impl View {
    fn new(center: f64, half_width: f64) -> Self {
        let half_width = if half_width > 0.0 { half_width } else { 1.0 };
        View { center, scale: (0.45 * WIDTH / half_width).min(0.45 * HEIGHT / half_width) }
    }

    fn x(&self, x: f64) -> f64 {
        WIDTH / 2.0 + (x - self.center) * self.scale
    }

    fn y(&self, y: f64) -> f64 {
        HEIGHT / 2.0 - y * self.scale
    }

    fn len(&self, d: f64) -> f64 {
        d * self.scale
    }
}

fn f(x: f64) -> String {
    // avoid "-0.000"
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn data(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

struct Doc {
    body: String,
}

impl Doc {
    fn new(title: &str) -> Self {
        let mut body = String::new();
        let _ = writeln!(body, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            body,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
            w = WIDTH,
            h = HEIGHT
        );
        let _ = writeln!(body, "<title>{title}</title>");
        let _ = writeln!(body, r##"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>"##);
        Doc { body }
    }

    fn axis(&mut self, v: &View) {
        let y = f(v.y(0.0));
        let _ = writeln!(self.body, r##"<line class="axis" x1="0" y1="{y}" x2="{WIDTH}" y2="{y}" stroke="#000000" stroke-width="1"/>"##);
    }

    fn line(&mut self, class: &str, a: (f64, f64), b: (f64, f64), style: &str) {
        let _ = writeln!(
            self.body,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" {style}/>"#,
            f(a.0),
            f(a.1),
            f(b.0),
            f(b.1)
        );
    }

    fn circle(&mut self, class: &str, c: (f64, f64), r: f64, style: &str) {
        let _ = writeln!(
            self.body,
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}" {style}/>"#,
            f(c.0),
            f(c.1),
            f(r)
        );
    }

    fn polygon(&mut self, class: &str, pts: &[(f64, f64)], style: &str) {
        let p: Vec<String> = pts.iter().map(|(x, y)| format!("{},{}", f(*x), f(*y))).collect();
        let _ = writeln!(self.body, r#"<polygon class="{class}" points="{}" {style}/>"#, p.join(" "));
    }

    fn marker(&mut self, v: &View, class: &str, label: &str, x: f64, above: bool, colour: &str) {
        let (sx, sy) = (v.x(x), v.y(0.0));
        let (y1, y2, ty) = if above { (sy - 10.0, sy, sy - 14.0) } else { (sy, sy + 10.0, sy + 24.0) };
        let _ = writeln!(
            self.body,
            r#"<line class="{class}" data-x="{}" x1="{sx}" y1="{}" x2="{sx}" y2="{}" stroke="{colour}" stroke-width="2"/>"#,
            data(x),
            f(y1),
            f(y2),
            sx = f(sx)
        );
        let _ = writeln!(
            self.body,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11" text-anchor="middle" fill="{colour}">{label}</text>"#,
            f(sx),
            f(ty)
        );
    }

    fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }
}

/// Triangle with incircle, circumcircle and centroid; vertices project onto
/// the three roots.
pub fn cubic(t: &TriangleData) -> String {
    let r = t.incircle_radius;
    let v = View::new(t.centroid_x, 2.4 * r);
    let mut doc = Doc::new("cubic root triangle");
    doc.axis(&v);
    let c = (v.x(t.centroid_x), v.y(0.0));
    doc.circle("circumcircle", c, v.len(2.0 * r), r##"fill="none" stroke="#888888" stroke-width="1""##);
    doc.circle("incircle", c, v.len(r), r##"fill="none" stroke="#1f77b4" stroke-width="1.5""##);
    let pts: Vec<(f64, f64)> = t.vertices.iter().map(|&(x, y)| (v.x(x), v.y(y))).collect();
    doc.polygon("triangle", &pts, r##"fill="none" stroke="#000000" stroke-width="2""##);
    for (i, &(x, _)) in t.vertices.iter().enumerate() {
        let p = pts[i];
        doc.line("projection", p, (p.0, v.y(0.0)), r##"stroke="#999999" stroke-dasharray="4 3""##);
        let _ = writeln!(
            doc.body,
            r##"<circle class="vertex" data-x="{}" cx="{}" cy="{}" r="4" fill="#d62728"/>"##,
            data(x),
            f(p.0),
            f(p.1)
        );
    }
    doc.circle("centroid", c, 3.0, r##"fill="#000000""##);
    let mut xs: Vec<f64> = t.vertices.iter().map(|v| v.0).collect();
    xs.sort_by(f64::total_cmp);
    for (i, x) in xs.iter().rev().enumerate() {
        doc.marker(&v, "root", &format!("x{}", i + 1), *x, false, "#d62728");
    }
    doc.marker(&v, "landmark", "mu1", t.mu[0], true, "#1f77b4");
    doc.marker(&v, "landmark", "mu2", t.mu[1], true, "#1f77b4");
    doc.finish()
}

/// Tetrahedron in oblique view with insphere and circumsphere outlines, its
/// landmarks on the axis and the real roots.
pub fn quartic(t: &TetrahedronData, roots: &[f64]) -> String {
    let r = t.insphere_radius;
    let s = t.center_x;
    let v = View::new(s, 3.6 * r);
    let mut doc = Doc::new("quartic root tetrahedron");
    doc.axis(&v);
    let c = (v.x(s), v.y(0.0));
    doc.circle("circumsphere", c, v.len(3.0 * r), r##"fill="none" stroke="#888888" stroke-width="1""##);
    doc.circle("insphere", c, v.len(r), r##"fill="none" stroke="#1f77b4" stroke-width="1.5""##);
    // apex on the axis at λ_max, opposite face in the plane x = s − R
    let apex = (t.lambda_max, 0.0);
    let face_r = 8f64.sqrt() * r;
    let face: Vec<(f64, f64)> = [90.0f64, 210.0, 330.0]
        .iter()
        .map(|deg| {
            let (sin, cos) = deg.to_radians().sin_cos();
            (s - r + 0.35 * face_r * cos, face_r * sin * 0.9 + 0.2 * face_r * cos)
        })
        .collect();
    let screen = |p: (f64, f64)| (v.x(p.0), v.y(p.1));
    let fs: Vec<(f64, f64)> = face.iter().map(|&p| screen(p)).collect();
    doc.polygon("face", &fs, r##"fill="none" stroke="#000000" stroke-width="2""##);
    for &p in &fs {
        doc.line("edge", screen(apex), p, r##"stroke="#000000" stroke-width="2""##);
    }
    for (class, x) in [("apex", t.lambda_max), ("face-plane", s - r)] {
        let top = if class == "apex" { 0.0 } else { face_r };
        doc.line(class, (v.x(x), v.y(top)), (v.x(x), v.y(-face_r)), r##"stroke="#999999" stroke-dasharray="4 3""##);
    }
    doc.circle("center", c, 3.0, r##"fill="#000000""##);
    let marks = [
        ("lambda_min", t.lambda_min),
        ("sigma3", t.sigma[2]),
        ("phi1", t.phi[0]),
        ("rho2", t.rho[1]),
        ("sigma2", t.sigma[1]),
        ("rho1", t.rho[0]),
        ("phi2", t.phi[1]),
        ("sigma1", t.sigma[0]),
        ("lambda_max", t.lambda_max),
    ];
    for (name, x) in marks {
        doc.marker(&v, "landmark", name, x, true, "#1f77b4");
    }
    let mut xs = roots.to_vec();
    xs.sort_by(f64::total_cmp);
    for (i, x) in xs.iter().rev().enumerate() {
        doc.marker(&v, "root", &format!("x{}", i + 1), *x, false, "#d62728");
    }
    doc.finish()
}
