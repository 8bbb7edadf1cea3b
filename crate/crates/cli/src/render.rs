//! SVG rendering of instances and results.

use std::fmt::Write;

use hdimp_core::geometry::critical_pair;
use hdimp_core::{Disc, Point};

use crate::document::{InstanceDocument, ResultDocument};

struct Canvas {
    body: String,
    lo: Point,
    hi: Point,
}

impl Canvas {
    fn new() -> Self {
        Canvas {
            body: String::new(),
            lo: Point::new(f64::INFINITY, f64::INFINITY),
            hi: Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    fn extend(&mut self, c: Point, r: f64) {
        self.lo = Point::new(self.lo.x.min(c.x - r), self.lo.y.min(c.y - r));
        self.hi = Point::new(self.hi.x.max(c.x + r), self.hi.y.max(c.y + r));
    }

    // SVG's y axis points down; flip it.
    fn circle(&mut self, c: Point, r: f64, class: &str) {
        self.extend(c, r);
        writeln!(
            self.body,
            r#"  <circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
            c.x, -c.y, r
        )
        .unwrap();
    }

    fn mark(&mut self, c: Point, size: f64, class: &str) {
        self.extend(c, size);
        writeln!(
            self.body,
            r#"  <rect class="{class}" x="{}" y="{}" width="{}" height="{}"/>"#,
            c.x - size / 2.0,
            -c.y - size / 2.0,
            size,
            size
        )
        .unwrap();
    }

    fn arrow(&mut self, from: Point, to: Point) {
        self.extend(from, 0.0);
        self.extend(to, 0.0);
        writeln!(
            self.body,
            r#"  <line class="critical" x1="{}" y1="{}" x2="{}" y2="{}" marker-end="url(#head)"/>"#,
            from.x, -from.y, to.x, -to.y
        )
        .unwrap();
    }
}

fn dot_size(discs: &[Disc]) -> f64 {
    let (mut lo, mut hi) = (
        Point::new(f64::INFINITY, f64::INFINITY),
        Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
    );
    for d in discs {
        lo = Point::new(lo.x.min(d.centre.x - d.radius), lo.y.min(d.centre.y - d.radius));
        hi = Point::new(hi.x.max(d.centre.x + d.radius), hi.y.max(d.centre.y + d.radius));
    }
    let extent = (hi.x - lo.x).max(hi.y - lo.y);
    if extent > 0.0 {
        extent / 150.0
    } else {
        0.05
    }
}

/// One SVG document: discs outlined, precise points as dots, witness
/// realisations as filled squares, value circles around the witness of Q,
/// and an arrow for the critical pair.
pub fn render_svg(doc: &InstanceDocument, result: Option<&ResultDocument>) -> String {
    let p = doc.p.discs();
    let q = doc.q.discs();
    let all: Vec<Disc> = p.iter().chain(&q).copied().collect();
    let dot = dot_size(&all);
    let mut canvas = Canvas::new();
    for (side, discs) in [("p", &p), ("q", &q)] {
        for d in discs.iter() {
            if d.radius > 0.0 {
                canvas.circle(d.centre, d.radius, &format!("disc-{side}"));
            } else {
                canvas.circle(d.centre, dot, &format!("point-{side}"));
            }
        }
    }
    if let Some(w) = result.and_then(|r| r.witness.as_ref().map(|w| (r.value, w))) {
        let (value, w) = w;
        let (wp, wq) = (w.p_points(), w.q_points());
        if value > 0.0 {
            for &x in &wq {
                canvas.circle(x, value, "value");
            }
        }
        for &x in &wp {
            canvas.mark(x, 1.6 * dot, "witness-p");
        }
        for &x in &wq {
            canvas.mark(x, 1.6 * dot, "witness-q");
        }
        if let Ok((i, j)) = critical_pair(&wp, &wq) {
            canvas.arrow(wp[i], wq[j]);
        }
    }
    let margin = 4.0 * dot;
    let (x0, y0) = (canvas.lo.x - margin, -canvas.hi.y - margin);
    let (w, h) = (
        canvas.hi.x - canvas.lo.x + 2.0 * margin,
        canvas.hi.y - canvas.lo.y + 2.0 * margin,
    );
    let stroke = dot / 3.0;
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{x0} {y0} {w} {h}" width="800" height="{}">"#,
        (800.0 * h / w).round()
    )
    .unwrap();
    if let Some(name) = &doc.name {
        writeln!(out, "  <title>{}</title>", escape(name)).unwrap();
    }
    writeln!(
        out,
        r##"  <defs>
    <marker id="head" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto">
      <path d="M 0 0 L 10 5 L 0 10 z" fill="#c0392b"/>
    </marker>
  </defs>
  <style>
    .disc-p {{ fill: none; stroke: #2c3e50; stroke-width: {stroke}; }}
    .disc-q {{ fill: none; stroke: #2980b9; stroke-width: {stroke}; }}
    .point-p {{ fill: #2c3e50; }}
    .point-q {{ fill: #2980b9; }}
    .value {{ fill: none; stroke: #7f8c8d; stroke-width: {stroke}; stroke-dasharray: {dash} {dash}; }}
    .witness-p {{ fill: #27ae60; }}
    .witness-q {{ fill: #e67e22; }}
    .critical {{ stroke: #c0392b; stroke-width: {stroke}; }}
  </style>"##,
        dash = 2.0 * stroke
    )
    .unwrap();
    out.push_str(&canvas.body);
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
