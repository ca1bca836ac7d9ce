//! SVG and PGM output. Both are byte-for-byte deterministic for a given scan.

use std::fmt::Write as _;

use super::components::ComponentSet;
use super::scan::{CellLabel, GridScan};
use super::trace::BoundaryTrace;
use crate::poly::rational::to_f64;
use crate::poly::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct SvgStyle {
    pub width: u32,
    pub height: u32,
    pub title: Option<String>,
    /// Components drawn in the darker "certified" fill.
    pub certified_components: Vec<usize>,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            width: 640,
            height: 480,
            title: None,
            certified_components: Vec::new(),
        }
    }
}

const MARGIN: f64 = 48.0;
const FILL_STABLE: &str = "#c8c8c8";
const FILL_CERTIFIED: &str = "#8fa8c8";

struct Frame {
    k1: (f64, f64),
    k2: (f64, f64),
    w: f64,
    h: f64,
}

impl Frame {
    fn x(&self, k1: f64) -> f64 {
        MARGIN + (k1 - self.k1.0) / (self.k1.1 - self.k1.0) * self.w
    }

    fn y(&self, k2: f64) -> f64 {
        MARGIN + (self.k2.1 - k2) / (self.k2.1 - self.k2.0) * self.h
    }

    fn xy(&self, k1: &Rational, k2: &Rational) -> (f64, f64) {
        (self.x(to_f64(k1)), self.y(to_f64(k2)))
    }
}

/// Stable cells (merged into horizontal runs), the traced curve, the line
/// component (dashed) and labelled axes.
pub fn render_svg(
    scan: &GridScan,
    components: &ComponentSet,
    trace: &BoundaryTrace,
    style: &SvgStyle,
) -> String {
    let b = scan.grid_box();
    let f = Frame {
        k1: (to_f64(&b.k1.0), to_f64(&b.k1.1)),
        k2: (to_f64(&b.k2.0), to_f64(&b.k2.1)),
        w: style.width as f64 - 2.0 * MARGIN,
        h: style.height as f64 - 2.0 * MARGIN,
    };
    let n = scan.resolution();
    let cw = f.w / (n - 1) as f64;
    let ch = f.h / (n - 1) as f64;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = style.width,
        h = style.height
    );
    let _ = writeln!(
        s,
        r#"<defs><clipPath id="plot"><rect x="{MARGIN:.2}" y="{MARGIN:.2}" width="{:.2}" height="{:.2}"/></clipPath></defs>"#,
        f.w, f.h
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if let Some(t) = &style.title {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
            style.width as f64 / 2.0,
            MARGIN / 2.0,
            escape(t)
        );
    }

    let _ = writeln!(s, r#"<g clip-path="url(#plot)" stroke="none">"#);
    for j in 0..n {
        let mut i = 0;
        while i < n {
            if scan.label(i, j) != CellLabel::Stable {
                i += 1;
                continue;
            }
            let start = i;
            let fill = fill_for(components, style, (i, j));
            while i < n && scan.label(i, j) == CellLabel::Stable && fill_for(components, style, (i, j)) == fill {
                i += 1;
            }
            let x0 = MARGIN + (start as f64 - 0.5) * cw;
            let y0 = MARGIN + ((n - 1 - j) as f64 - 0.5) * ch;
            let _ = writeln!(
                s,
                r#"<rect x="{x0:.2}" y="{y0:.2}" width="{:.2}" height="{ch:.2}" fill="{fill}"/>"#,
                (i - start) as f64 * cw
            );
        }
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g clip-path="url(#plot)" fill="none" stroke="black" stroke-width="1.5">"#);
    for br in &trace.branches {
        let pts: Vec<String> = br
            .iter()
            .map(|p| {
                let (x, y) = f.xy(&p.k1, &p.k2);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let _ = writeln!(s, r#"<polyline points="{}"/>"#, pts.join(" "));
    }
    if let Some([a, c]) = &trace.line {
        let (x1, y1) = f.xy(&a.0, &a.1);
        let (x2, y2) = f.xy(&c.0, &c.1);
        let _ = writeln!(
            s,
            r#"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke-dasharray="6,4"/>"#
        );
    }
    let _ = writeln!(s, "</g>");

    axes(&mut s, &f);
    s.push_str("</svg>\n");
    s
}

fn fill_for(components: &ComponentSet, style: &SvgStyle, cell: (usize, usize)) -> &'static str {
    match components.component_of(cell) {
        Some(c) if style.certified_components.contains(&c.id) => FILL_CERTIFIED,
        _ => FILL_STABLE,
    }
}

fn axes(s: &mut String, f: &Frame) {
    let _ = writeln!(
        s,
        r#"<rect x="{MARGIN:.2}" y="{MARGIN:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="black"/>"#,
        f.w, f.h
    );
    let _ = writeln!(s, r#"<g font-family="sans-serif" font-size="10">"#);
    for k in 0..=4 {
        let v1 = f.k1.0 + (f.k1.1 - f.k1.0) * k as f64 / 4.0;
        let x = f.x(v1);
        let yb = MARGIN + f.h;
        let _ = writeln!(
            s,
            r#"<line x1="{x:.2}" y1="{yb:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{v1:.2}</text>"#,
            yb + 4.0,
            yb + 16.0
        );
        let v2 = f.k2.0 + (f.k2.1 - f.k2.0) * k as f64 / 4.0;
        let y = f.y(v2);
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{MARGIN:.2}" y2="{y:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{v2:.2}</text>"#,
            MARGIN - 4.0,
            MARGIN - 6.0,
            y + 3.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">k1</text><text x="12.00" y="{:.2}" text-anchor="middle">k2</text>"#,
        MARGIN + f.w / 2.0,
        MARGIN + f.h + 34.0,
        MARGIN + f.h / 2.0
    );
    let _ = writeln!(s, "</g>");
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Binary PGM raster, one pixel per node: stable 200, unstable 255,
/// boundary 0. The first row is the largest `k2`.
pub fn render_pgm(scan: &GridScan) -> Vec<u8> {
    let n = scan.resolution();
    let mut out = format!("P5\n{n} {n}\n255\n").into_bytes();
    for j in (0..n).rev() {
        for i in 0..n {
            out.push(match scan.label(i, j) {
                CellLabel::Stable => 200,
                CellLabel::Unstable => 255,
                CellLabel::Boundary => 0,
            });
        }
    }
    out
}
