//! Deterministic SVG drawings of point sets and witnesses.

use std::fmt::Write as _;

use crate::geometry::{build_neighbor_prefix, Dim, PointSet};
use crate::plane::ConflictGraph;

#[derive(Clone, Debug)]
pub struct RenderOptions {
    pub width: f64,
    pub height: f64,
    pub margin: f64,
    /// Circle around each point through its second-nearest neighbor.
    pub second_neighbor_circles: bool,
    /// Fixed data window `[min_x, min_y, max_x, max_y]` instead of fitting the points.
    pub window: Option<[f64; 4]>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { width: 640.0, height: 480.0, margin: 40.0, second_neighbor_circles: false, window: None }
    }
}

struct Frame {
    min_x: f64,
    max_y: f64,
    scale: f64,
    margin: f64,
}

impl Frame {
    fn fit(xy: &[(f64, f64)], opts: &RenderOptions) -> Frame {
        let (mut min_x, mut max_x, mut min_y, mut max_y) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        match opts.window {
            Some([x0, y0, x1, y1]) => (min_x, min_y, max_x, max_y) = (x0, y0, x1, y1),
            None => {
                for &(x, y) in xy {
                    min_x = min_x.min(x);
                    max_x = max_x.max(x);
                    min_y = min_y.min(y);
                    max_y = max_y.max(y);
                }
            }
        }
        let span_x = (max_x - min_x).max(f64::MIN_POSITIVE);
        let span_y = (max_y - min_y).max(f64::MIN_POSITIVE);
        let inner_w = opts.width - 2.0 * opts.margin;
        let inner_h = opts.height - 2.0 * opts.margin;
        let mut scale = (inner_w / span_x).min(inner_h / span_y);
        if !scale.is_finite() || scale <= 0.0 {
            scale = 1.0;
        }
        // Centre the drawing in both directions.
        let pad_x = (inner_w - span_x * scale).max(0.0) / 2.0;
        let pad_y = (inner_h - span_y * scale).max(0.0) / 2.0;
        Frame { min_x: min_x - pad_x / scale, max_y: max_y + pad_y / scale, scale, margin: opts.margin }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (self.margin + (x - self.min_x) * self.scale, self.margin + (self.max_y - y) * self.scale)
    }
}

/// Draws points as circles, members of `witness` highlighted, optional graph
/// edges underneath. Output depends only on the arguments.
pub fn render(
    points: &PointSet,
    witness: Option<&[usize]>,
    edges: Option<&ConflictGraph>,
    opts: &RenderOptions,
) -> String {
    let xy: Vec<(f64, f64)> = points.points().iter().map(|p| (p.x().to_f64(), p.y().to_f64())).collect();
    let frame = Frame::fit(&xy, opts);
    let chosen: std::collections::HashSet<usize> = witness.unwrap_or(&[]).iter().copied().collect();

    let mut out = String::new();
    let w = |out: &mut String, s: std::fmt::Arguments| out.write_fmt(s).expect("writing to a string");
    w(
        &mut out,
        format_args!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
             width=\"{0:.0}\" height=\"{1:.0}\" viewBox=\"0 0 {0:.0} {1:.0}\">\n",
            opts.width, opts.height
        ),
    );
    w(&mut out, format_args!("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"));

    if points.dim() == Dim::Line {
        let (_, y) = frame.map((0.0, 0.0));
        w(
            &mut out,
            format_args!(
                "<line class=\"axis\" x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"#999\"/>\n",
                opts.margin / 2.0,
                opts.width - opts.margin / 2.0
            ),
        );
    }

    if opts.second_neighbor_circles && points.len() >= 3 {
        if let Ok(table) = build_neighbor_prefix(points, 2) {
            w(&mut out, format_args!("<g class=\"n2\" fill=\"none\" stroke=\"#7aa6d6\" stroke-width=\"1\">\n"));
            for (v, &p) in xy.iter().enumerate() {
                let q = xy[table.neighbor(v, 2)];
                let radius = ((p.0 - q.0).powi(2) + (p.1 - q.1).powi(2)).sqrt() * frame.scale;
                let (cx, cy) = frame.map(p);
                w(&mut out, format_args!("<circle cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{radius:.2}\"/>\n"));
            }
            w(&mut out, format_args!("</g>\n"));
        }
    }

    if let Some(graph) = edges {
        w(&mut out, format_args!("<g class=\"edges\" stroke=\"#bbb\" stroke-width=\"1.5\">\n"));
        for (u, v) in graph.edges() {
            let (x1, y1) = frame.map(xy[u]);
            let (x2, y2) = frame.map(xy[v]);
            w(&mut out, format_args!("<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\"/>\n"));
        }
        w(&mut out, format_args!("</g>\n"));
    }

    w(&mut out, format_args!("<g class=\"points\">\n"));
    for (i, &p) in xy.iter().enumerate() {
        let (cx, cy) = frame.map(p);
        if chosen.contains(&i) {
            w(
                &mut out,
                format_args!(
                    "<circle class=\"witness\" data-index=\"{i}\" cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"7\" \
                     fill=\"#d62728\" stroke=\"black\"/>\n"
                ),
            );
        } else {
            w(
                &mut out,
                format_args!(
                    "<circle class=\"point\" data-index=\"{i}\" cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"4\" fill=\"#333\"/>\n"
                ),
            );
        }
    }
    w(&mut out, format_args!("</g>\n</svg>\n"));
    out
}
