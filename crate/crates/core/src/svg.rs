//! Minimal deterministic SVG output for configurations and polytopes.

use std::fmt::Write;

use crate::geom::{Configuration, Point, Polytope};

/// Decimal rendering to 12 significant digits, trailing zeros dropped.
fn num(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".into();
    }
    let decimals = (11 - v.abs().log10().floor() as i32).max(0) as usize;
    let s = format!("{v:.decimals$}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.') } else { &s };
    if s == "-0" {
        "0".into()
    } else {
        s.to_string()
    }
}

/// Accumulates shapes in model coordinates and maps them into a square
/// viewport with the y axis pointing up.
pub struct Canvas {
    size: f64,
    margin: f64,
    min: (f64, f64),
    scale: f64,
    body: String,
}

impl Canvas {
    /// A canvas fitted to the bounding box of `points`.
    pub fn fitted<'a>(points: impl IntoIterator<Item = &'a Point>, size: f64) -> Canvas {
        let pts: Vec<(f64, f64)> = points.into_iter().map(|p| (p.x.to_f64(), p.y.to_f64())).collect();
        let fold = |f: fn(f64, f64) -> f64, init: f64, sel: fn(&(f64, f64)) -> f64| pts.iter().map(sel).fold(init, f);
        let (x0, x1) = (fold(f64::min, f64::INFINITY, |p| p.0), fold(f64::max, f64::NEG_INFINITY, |p| p.0));
        let (y0, y1) = (fold(f64::min, f64::INFINITY, |p| p.1), fold(f64::max, f64::NEG_INFINITY, |p| p.1));
        let span = (x1 - x0).max(y1 - y0);
        let margin = size * 0.08;
        let scale = if span.is_finite() && span > 0.0 { (size - 2.0 * margin) / span } else { 1.0 };
        let min = if x0.is_finite() { (x0, y0) } else { (0.0, 0.0) };
        Canvas { size, margin, min, scale, body: String::new() }
    }

    fn map(&self, p: &Point) -> (String, String) {
        self.map_offset(p, 0.0, 0.0)
    }

    fn map_offset(&self, p: &Point, dx: f64, dy: f64) -> (String, String) {
        let x = self.margin + (p.x.to_f64() - self.min.0) * self.scale;
        let y = self.size - self.margin - (p.y.to_f64() - self.min.1) * self.scale;
        (num(x + dx), num(y + dy))
    }

    pub fn polytope(&mut self, p: &Polytope, stroke: &str, fill: &str, opacity: f64) {
        let vs = p.vertices();
        match vs {
            [] => {}
            [v] => self.dot(v, 2.0, stroke),
            [a, b] => {
                let ((x1, y1), (x2, y2)) = (self.map(a), self.map(b));
                let _ = writeln!(
                    self.body,
                    r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{stroke}" stroke-width="1"/>"#
                );
            }
            _ => {
                let pts: Vec<String> = vs
                    .iter()
                    .map(|v| {
                        let (x, y) = self.map(v);
                        format!("{x},{y}")
                    })
                    .collect();
                let _ = writeln!(
                    self.body,
                    r#"<polygon points="{}" stroke="{stroke}" fill="{fill}" fill-opacity="{opacity}" stroke-width="1"/>"#,
                    pts.join(" ")
                );
            }
        }
    }

    pub fn dot(&mut self, p: &Point, r: f64, fill: &str) {
        let (x, y) = self.map(p);
        let _ = writeln!(self.body, r#"<circle cx="{x}" cy="{y}" r="{r}" fill="{fill}"/>"#);
    }

    pub fn label(&mut self, p: &Point, text: &str) {
        let (x, y) = self.map_offset(p, 4.0, -4.0);
        let text = text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;");
        let _ = writeln!(self.body, r#"<text x="{x}" y="{y}" font-size="11" font-family="sans-serif">{text}</text>"#);
    }

    pub fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">\n\
             <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n{1}</svg>\n",
            self.size, self.body
        )
    }
}

/// Polytopes drawn translucently under the labelled points of `x`.
pub fn render_polytopes(x: &Configuration, polytopes: &[Polytope]) -> String {
    let mut c = Canvas::fitted(x.points().iter().chain(polytopes.iter().flat_map(|p| p.vertices())), 480.0);
    for p in polytopes {
        c.polytope(p, "#3060a0", "#3060a0", 0.06);
    }
    for (i, p) in x.points().iter().enumerate() {
        c.dot(p, 3.5, "black");
        c.label(p, &x.label(i));
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::convex_hull;

    #[test]
    fn renders_all_shapes() {
        let x = Configuration::from_ints(&[(0, 0), (4, 0), (0, 4)]);
        let tri = convex_hull(x.points().iter().cloned());
        let seg = convex_hull([Point::int(0, 0), Point::int(4, 0)]);
        let s = render_polytopes(&x, &[tri, seg, Polytope::empty()]);
        assert!(s.starts_with("<svg"));
        assert_eq!(s.matches("<polygon").count(), 1);
        assert_eq!(s.matches("<line").count(), 1);
        assert_eq!(s.matches("<circle").count(), 3);
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(num(1.0 / 3.0), "0.333333333333");
        assert_eq!(num(260.0), "260");
        assert_eq!(num(187.2), "187.2");
        assert_eq!(num(2.0 / 3.0 * 480.0), "320");
        assert_eq!(num(1000.0 / 7.0), "142.857142857");
        assert_eq!(num(-0.0), "0");
    }
}
