//! SVG drawings of arc diagrams in the annulus.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt::Write;

use crate::arcs::{strand_of, ArcDiagram};
use crate::quiver::{Boundary, Quiver};
use crate::string::StringModule;

#[derive(Debug, Clone)]
pub struct SvgStyle {
    pub size: f64,
    pub outer_radius: f64,
    pub inner_radius: f64,
    pub arc_color: String,
    pub warning_color: String,
    pub labels: bool,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            size: 400.0,
            outer_radius: 170.0,
            inner_radius: 60.0,
            arc_color: "#1f4e9c".into(),
            warning_color: "#d62728".into(),
            labels: true,
        }
    }
}

struct Frame<'a> {
    q: &'a Quiver,
    style: &'a SvgStyle,
    c: f64,
}

impl Frame<'_> {
    fn radius(&self, b: Boundary) -> f64 {
        match b {
            Boundary::Outer => self.style.outer_radius,
            Boundary::Inner => self.style.inner_radius,
        }
    }

    /// Cover position `x` at radius `r`; increasing `x` runs clockwise from the top.
    fn point(&self, x: f64, r: f64) -> (f64, f64) {
        let theta = 2.0 * PI * x / self.q.n() as f64 - PI / 2.0;
        (self.c + r * theta.cos(), self.c + r * theta.sin())
    }

    fn path(&self, m: &StringModule) -> String {
        let s = strand_of(self.q, m);
        let (a, b) = (s.start as f64, s.end as f64);
        let (ra, rb) = (self.radius(self.q.boundary_at(s.start)), self.radius(self.q.boundary_at(s.end)));
        let mid = (self.style.outer_radius + self.style.inner_radius) / 2.0;
        let steps = ((b - a) * 24.0).ceil().max(24.0) as usize;
        let mut d = String::new();
        for k in 0..=steps {
            let t = k as f64 / steps as f64;
            let x = a + (b - a) * t;
            let bulge = (PI * t).sin();
            let r = if ra == rb {
                ra + (mid - ra) * bulge * 0.9
            } else {
                ra + (rb - ra) * t
            };
            let (px, py) = self.point(x, r);
            let cmd = if k == 0 { 'M' } else { 'L' };
            let _ = write!(d, "{cmd}{px:.2},{py:.2} ");
        }
        d.trim_end().to_string()
    }
}

/// Deterministic SVG 1.1 drawing; arcs involved in a violation use the warning color.
pub fn render_svg(d: &ArcDiagram, style: &SvgStyle) -> String {
    let q = &d.quiver;
    let frame = Frame { q, style, c: style.size / 2.0 };
    let flagged: BTreeSet<StringModule> = d
        .violations()
        .iter()
        .flat_map(|v| [v.first, v.second])
        .collect();

    let mut out = String::new();
    let size = style.size;
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    for r in [style.outer_radius, style.inner_radius] {
        let _ = writeln!(
            out,
            r#"  <circle cx="{c:.2}" cy="{c:.2}" r="{r:.2}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            c = frame.c
        );
    }
    for m in &d.modules {
        let color = if flagged.contains(m) { &style.warning_color } else { &style.arc_color };
        let _ = writeln!(
            out,
            r#"  <path d="{}" fill="none" stroke="{color}" stroke-width="2"><title>{}</title></path>"#,
            frame.path(m),
            m.label(q)
        );
    }
    for v in 0..q.n() {
        let b = Boundary::of_sign(q.sign(v));
        let (x, y) = frame.point(v as f64, frame.radius(b));
        let _ = writeln!(out, r#"  <circle cx="{x:.2}" cy="{y:.2}" r="4" fill="black"/>"#);
        if style.labels {
            let offset = match b {
                Boundary::Outer => 16.0,
                Boundary::Inner => -14.0,
            };
            let (lx, ly) = frame.point(v as f64, frame.radius(b) + offset);
            let _ = writeln!(
                out,
                r#"  <text x="{lx:.2}" y="{ly:.2}" font-family="sans-serif" font-size="12" text-anchor="middle" dominant-baseline="middle">{v}</text>"#
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_diagram_has_only_frame() {
        let q: Quiver = "-++".parse().unwrap();
        let svg = render_svg(&ArcDiagram::new(q, vec![]), &SvgStyle::default());
        assert_eq!(svg.matches("<circle").count(), 5);
        assert!(!svg.contains("<path"));
    }

    #[test]
    fn deterministic_and_flags_crossings() {
        let q: Quiver = "-++".parse().unwrap();
        let a = StringModule::from_triple(&q, 1, 0, 0).unwrap();
        let b = StringModule::from_triple(&q, 1, 0, 2).unwrap();
        let c = StringModule::from_triple(&q, 1, 2, 0).unwrap();
        let d = ArcDiagram::new(q, vec![a, b, c]);
        let style = SvgStyle::default();
        let one = render_svg(&d, &style);
        assert_eq!(one, render_svg(&d, &style));
        assert_eq!(one.matches(&style.warning_color).count(), 2);
    }
}
