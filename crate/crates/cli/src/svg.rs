//! Standalone SVG drawings of chord diagrams, convex-arc curves and
//! interval models. Coordinates are printed with two decimals so the
//! output is byte-stable.

use std::f64::consts::PI;
use std::fmt::Write as _;

use wordrep_core::models::{Coloring, IntervalModel};
use wordrep_core::{Letter, Word};

const SIZE: f64 = 400.0;
const MARGIN: f64 = 30.0;
const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"];

fn color(l: Letter) -> &'static str {
    PALETTE[l.index() % PALETTE.len()]
}

struct Doc {
    out: String,
}

impl Doc {
    fn new(width: f64, height: f64) -> Self {
        let mut out = String::new();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
        )
        .unwrap();
        writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
        Doc { out }
    }

    fn label(&mut self, x: f64, y: f64, text: impl std::fmt::Display) {
        writeln!(
            self.out,
            r#"<text x="{x:.2}" y="{y:.2}" font-family="sans-serif" font-size="12" text-anchor="middle">{text}</text>"#
        )
        .unwrap();
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}

/// Every letter of `word` becomes a point on a circle; points of the same
/// letter are joined by straight chords in order.
pub fn chords(word: &Word) -> String {
    let len = word.len().max(1) as f64;
    let c = SIZE / 2.0;
    let radius = c - MARGIN;
    let at = |p: usize| {
        let t = 2.0 * PI * p as f64 / len - PI / 2.0;
        (c + radius * t.cos(), c + radius * t.sin())
    };
    let mut doc = Doc::new(SIZE, SIZE);
    writeln!(doc.out, r#"<circle cx="{c:.2}" cy="{c:.2}" r="{radius:.2}" fill="none" stroke="gray"/>"#).unwrap();
    polylines(&mut doc, word, at);
    for (p, l) in word.iter().enumerate() {
        let (x, y) = at(p);
        let (lx, ly) = (c + (x - c) * 1.08, c + (y - c) * 1.08 + 4.0);
        doc.label(lx, ly, l);
    }
    doc.finish()
}

/// The points of a coloring on the lower arc of a circle, each label's
/// points joined left to right into a convex polyline.
pub fn curves(c: &Coloring) -> String {
    let word = c.word();
    let len = word.len() as f64;
    let centre = SIZE / 2.0;
    let radius = centre - MARGIN;
    let at = |p: usize| {
        let t = PI * (p as f64 + 0.5) / len;
        (centre - radius * t.cos(), MARGIN + radius * t.sin())
    };
    let mut doc = Doc::new(SIZE, SIZE / 2.0 + 2.0 * MARGIN);
    polylines(&mut doc, &word, at);
    for (p, l) in word.iter().enumerate() {
        let (x, y) = at(p);
        doc.label(x, y + 16.0, l);
    }
    doc.finish()
}

fn polylines(doc: &mut Doc, word: &Word, at: impl Fn(usize) -> (f64, f64)) {
    let Some(n) = word.max_letter().map(|l| l.index() + 1) else {
        return;
    };
    for i in 0..n {
        let l = Letter::from_index(i);
        let points: Vec<String> = word
            .iter()
            .enumerate()
            .filter(|&(_, x)| x == l)
            .map(|(p, _)| {
                let (x, y) = at(p);
                format!("{x:.2},{y:.2}")
            })
            .collect();
        if points.len() > 1 {
            writeln!(
                doc.out,
                r#"<polyline points="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
                points.join(" "),
                color(l)
            )
            .unwrap();
        }
        for p in &points {
            let (x, y) = p.split_once(',').unwrap();
            writeln!(doc.out, r#"<circle cx="{x}" cy="{y}" r="3" fill="{}"/>"#, color(l)).unwrap();
        }
    }
}

/// One horizontal bar per vertex over a shared axis.
pub fn intervals(model: &IntervalModel) -> String {
    let to_f = |r: &wordrep_core::models::Endpoint| *r.numer() as f64 / *r.denom() as f64;
    let ends: Vec<(f64, f64)> = model.intervals().iter().map(|(a, b)| (to_f(a), to_f(b))).collect();
    let lo = ends.iter().map(|e| e.0).fold(f64::INFINITY, f64::min);
    let hi = ends.iter().map(|e| e.1).fold(f64::NEG_INFINITY, f64::max);
    let span = if hi > lo { hi - lo } else { 1.0 };
    let row = 24.0;
    let width = SIZE + 2.0 * MARGIN;
    let mut doc = Doc::new(width, 2.0 * MARGIN + row * ends.len() as f64);
    let x = |v: f64| MARGIN + (v - lo) / span * SIZE;
    for (i, &(a, b)) in ends.iter().enumerate() {
        let y = MARGIN + row * i as f64 + row / 2.0;
        writeln!(
            doc.out,
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="{}" stroke-width="6" stroke-linecap="round"/>"#,
            x(a),
            x(b),
            color(Letter::from_index(i))
        )
        .unwrap();
        doc.label(MARGIN / 2.0, y + 4.0, i + 1);
    }
    doc.finish()
}
