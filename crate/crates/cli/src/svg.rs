//! SVG figures: subsets of `[0,1]` as bars and points, grade functions as
//! graphs on the unit square. Geometry is exact until coordinates are
//! printed with two decimals.

use std::fmt::Write;

use fuzzlat::piecewise::PiecewiseFn;
use fuzzlat::{Rat, RealSubset, Tag};

const MARGIN: f64 = 40.0;
const WIDTH: f64 = 400.0;
const ROW: f64 = 40.0;
const DOT: f64 = 3.5;

fn x(t: &Rat) -> f64 {
    MARGIN + t.to_f64() * WIDTH
}

fn header(out: &mut String, w: f64, h: f64) {
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#)
        .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
}

/// Line style per tag: solid for all reals, dashed for rationals only, dotted for irrationals only.
fn stroke(tag: Tag) -> &'static str {
    match tag {
        Tag::All => r#"stroke="black" stroke-width="3""#,
        Tag::QOnly => r##"stroke="#1f5fbf" stroke-width="3" stroke-dasharray="6 3""##,
        Tag::IOnly => r##"stroke="#bf3f1f" stroke-width="3" stroke-dasharray="1 3""##,
    }
}

fn dot(out: &mut String, cx: f64, cy: f64, filled: bool) {
    let fill = if filled { "black" } else { "white" };
    writeln!(out, r#"<circle cx="{cx:.2}" cy="{cy:.2}" r="{DOT}" fill="{fill}" stroke="black" stroke-width="1"/>"#).unwrap();
}

fn text(out: &mut String, px: f64, py: f64, anchor: &str, s: &str) {
    writeln!(out, r#"<text x="{px:.2}" y="{py:.2}" font-family="sans-serif" font-size="11" text-anchor="{anchor}">{s}</text>"#).unwrap();
}

fn set_row(out: &mut String, set: &RealSubset, y: f64) {
    for atom in set.atoms() {
        if atom.is_point() {
            dot(out, x(atom.lo()), y, true);
            continue;
        }
        let (x0, x1) = (x(atom.lo()), x(atom.hi()));
        writeln!(out, r#"<line x1="{x0:.2}" y1="{y:.2}" x2="{x1:.2}" y2="{y:.2}" {}/>"#, stroke(atom.tag())).unwrap();
        dot(out, x0, y, atom.lo_closed());
        dot(out, x1, y, atom.hi_closed());
    }
}

/// One labelled row per set over a shared `[0,1]` axis.
pub fn render_sets(rows: &[(&str, &RealSubset)]) -> String {
    let height = 2.0 * MARGIN + ROW * rows.len() as f64;
    let mut out = String::new();
    header(&mut out, WIDTH + 2.0 * MARGIN, height);
    let axis = height - MARGIN;
    writeln!(out, r#"<line x1="{MARGIN:.2}" y1="{axis:.2}" x2="{:.2}" y2="{axis:.2}" stroke="gray" stroke-width="1"/>"#, MARGIN + WIDTH)
        .unwrap();
    for k in 0..=10 {
        let t = Rat::new(k, 10);
        let px = x(&t);
        writeln!(out, r#"<line x1="{px:.2}" y1="{axis:.2}" x2="{px:.2}" y2="{:.2}" stroke="gray" stroke-width="1"/>"#, axis + 4.0).unwrap();
        if k % 5 == 0 {
            text(&mut out, px, axis + 16.0, "middle", &t.to_string());
        }
    }
    for (k, (label, set)) in rows.iter().enumerate() {
        let y = MARGIN + ROW * (k as f64 + 0.5);
        text(&mut out, MARGIN - 8.0, y + 4.0, "end", label);
        set_row(&mut out, set, y);
    }
    out.push_str("</svg>\n");
    out
}

pub fn render_set(set: &RealSubset) -> String {
    render_sets(&[("", set)])
}

/// The graph of `f` on the unit square, with filled markers on attained
/// endpoints and open markers on the others.
pub fn render_fn(f: &PiecewiseFn) -> String {
    let side = WIDTH + 2.0 * MARGIN;
    let y = |v: &Rat| MARGIN + (1.0 - v.to_f64()) * WIDTH;
    let mut out = String::new();
    header(&mut out, side, side);
    writeln!(
        out,
        r#"<rect x="{MARGIN:.2}" y="{MARGIN:.2}" width="{WIDTH:.2}" height="{WIDTH:.2}" fill="none" stroke="gray" stroke-width="1"/>"#
    )
    .unwrap();
    for k in [0, 5, 10] {
        let t = Rat::new(k, 10);
        text(&mut out, x(&t), MARGIN + WIDTH + 16.0, "middle", &t.to_string());
        text(&mut out, MARGIN - 8.0, y(&t) + 4.0, "end", &t.to_string());
    }
    for piece in f.pieces() {
        let (lo, hi) = (piece.atom.lo(), piece.atom.hi());
        let (v0, v1) = (piece.map.eval(lo), piece.map.eval(hi));
        if piece.atom.is_point() {
            dot(&mut out, x(lo), y(&v0), true);
            continue;
        }
        writeln!(out, r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" {}/>"#, x(lo), y(&v0), x(hi), y(&v1), stroke(piece.atom.tag()))
            .unwrap();
        if piece.atom.tag() != Tag::IOnly {
            dot(&mut out, x(lo), y(&v0), piece.atom.lo_closed());
            dot(&mut out, x(hi), y(&v1), piece.atom.hi_closed());
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_grade_expr, parse_set_expr};

    #[test]
    fn constant_grade_is_one_horizontal_line() {
        let svg = render_fn(&parse_grade_expr("const(0.5)").unwrap());
        let lines: Vec<&str> = svg.lines().filter(|l| l.starts_with("<line")).collect();
        assert_eq!(lines, [r#"<line x1="40.00" y1="240.00" x2="440.00" y2="240.00" stroke="black" stroke-width="3"/>"#]);
    }

    #[test]
    fn delta_graph_has_plateau_segment_and_isolated_point() {
        let svg = render_fn(&parse_grade_expr("delta([0.3,0.4] | {0.6})").unwrap());
        assert!(svg.contains(r#"<line x1="40.00" y1="320.00" x2="160.00" y2="320.00""#), "{svg}");
        assert!(svg.contains(r#"<line x1="160.00" y1="320.00" x2="200.00" y2="280.00""#), "{svg}");
        assert!(svg.contains(r#"<circle cx="280.00" cy="200.00" r="3.5" fill="black""#), "{svg}");
    }

    #[test]
    fn output_is_deterministic() {
        let s = parse_set_expr("[0.3,0.4] | {1/2, 3/5} | (0.7,0.9)&II").unwrap();
        assert_eq!(render_set(&s), render_set(&s));
        assert!(render_set(&s).ends_with("</svg>\n"));
    }
}
