//! Straight-line SVG drawings of colored coordinate-form graphs.

use std::fmt::Write as _;

use crate::coloring::{Color, Coloring};
use crate::embedding::EmbeddedGraph;
use crate::error::{Error, Result};

/// Color 1 vertices are filled black, color 2 vertices white with a black
/// outline. The y axis points up, as in the input coordinates.
pub fn render_svg(g: &EmbeddedGraph, c: &Coloring) -> Result<String> {
    let pts = g.coords().ok_or(Error::RenderUnavailable)?;
    if c.len() != g.n() || !c.is_total() {
        return Err(Error::precondition("rendering needs a total coloring of every vertex"));
    }
    let (mut x0, mut x1, mut y0, mut y1) = (i64::MAX, i64::MIN, i64::MAX, i64::MIN);
    for p in pts {
        x0 = x0.min(p.x);
        x1 = x1.max(p.x);
        y0 = y0.min(p.y);
        y1 = y1.max(p.y);
    }
    if pts.is_empty() {
        (x0, x1, y0, y1) = (0, 0, 0, 0);
    }
    let span = (x1 - x0).max(y1 - y0).max(1) as f64;
    let r = span / 40.0;
    let pad = 2.0 * r;
    let (w, h) = ((x1 - x0) as f64 + 2.0 * pad, (y1 - y0) as f64 + 2.0 * pad);
    let sx = |x: i64| (x - x0) as f64 + pad;
    let sy = |y: i64| (y1 - y) as f64 + pad;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w:.3} {h:.3}">"#
    );
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="{:.3}">"#, r / 4.0);
    for &[u, v] in g.edges() {
        let (p, q) = (pts[u], pts[v]);
        let _ = writeln!(
            out,
            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
            sx(p.x),
            sy(p.y),
            sx(q.x),
            sy(q.y)
        );
    }
    for (v, p) in pts.iter().enumerate() {
        let fill = match c.get(v).expect("total coloring") {
            Color::One => "black",
            Color::Two => "white",
        };
        let _ = writeln!(
            out,
            r#"<circle cx="{:.3}" cy="{:.3}" r="{r:.3}" fill="{fill}"/>"#,
            sx(p.x),
            sy(p.y)
        );
    }
    out.push_str("</g>\n</svg>\n");
    Ok(out)
}
