//! Static SVG drawings of instances and solutions. Coordinates are
//! converted to floating point here and nowhere else.

use std::fmt::Write as _;

use terrain_guard::algos::{essential_segments, Mode};
use terrain_guard::{ExactInstance, ExactPoint, ExactSolution, Side};

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 30.0;

struct Frame {
    x0: f64,
    y0: f64,
    scale: f64,
    height: f64,
}

impl Frame {
    fn new(inst: &ExactInstance) -> Self {
        let pts: Vec<(f64, f64)> = inst.terrain.vertices().iter().map(ExactPoint::to_f64).collect();
        let (x0, x1) = (pts[0].0, pts[pts.len() - 1].0);
        let y0 = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
        let y1 = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
        let scale = (WIDTH - 2.0 * MARGIN) / (x1 - x0);
        let height = ((y1 - y0) * scale).max(40.0) + 2.0 * MARGIN;
        Frame { x0, y0, scale, height }
    }

    fn map(&self, p: &ExactPoint) -> (f64, f64) {
        let (x, y) = p.to_f64();
        (MARGIN + (x - self.x0) * self.scale, self.height - MARGIN - (y - self.y0) * self.scale)
    }
}

fn color(side: Side) -> &'static str {
    match side {
        Side::Left => "#1f77b4",
        Side::Right => "#d62728",
        Side::Both => "#9467bd",
    }
}

/// Terrain polyline, points to guard, candidate guards, the chosen guards
/// colored by direction and, in continuous mode, the essential-segment
/// breakpoints and representatives.
pub fn render_svg(inst: &ExactInstance, solution: Option<&ExactSolution>) -> String {
    let f = Frame::new(inst);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{h:.1}" viewBox="0 0 {WIDTH} {h:.1}">"#,
        h = f.height
    )
    .unwrap();
    writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#).unwrap();

    let chain: Vec<String> = inst
        .terrain
        .vertices()
        .iter()
        .map(|v| {
            let (x, y) = f.map(v);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    writeln!(out, r#"  <polyline class="terrain" points="{}" fill="none" stroke="black" stroke-width="2"/>"#, chain.join(" "))
        .unwrap();

    if inst.mode == Mode::Continuous {
        let seg = essential_segments(&inst.terrain);
        writeln!(out, r#"  <g class="breakpoints" stroke="gray" stroke-width="1">"#).unwrap();
        for b in &seg.breakpoints {
            let (x, y) = f.map(b);
            writeln!(out, r#"    <line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}"/>"#, y - 6.0, y + 6.0).unwrap();
        }
        writeln!(out, "  </g>").unwrap();
        writeln!(out, r#"  <g class="representatives" fill="gray">"#).unwrap();
        for r in &seg.representatives {
            let (x, y) = f.map(r);
            writeln!(out, r#"    <circle cx="{x:.2}" cy="{y:.2}" r="2"/>"#).unwrap();
        }
        writeln!(out, "  </g>").unwrap();
    }

    writeln!(out, r#"  <g class="candidates" fill="none" stroke="darkgray">"#).unwrap();
    let candidates = inst.left_guards.iter().chain(&inst.right_guards).chain(&inst.both_guards);
    for g in candidates {
        let (x, y) = f.map(&g.at);
        writeln!(out, r#"    <rect x="{:.2}" y="{:.2}" width="8" height="8"/>"#, x - 4.0, y - 4.0).unwrap();
    }
    writeln!(out, "  </g>").unwrap();

    writeln!(out, r#"  <g class="points" fill="black">"#).unwrap();
    for p in &inst.points {
        let (x, y) = f.map(p);
        writeln!(out, r#"    <circle cx="{x:.2}" cy="{y:.2}" r="3"/>"#).unwrap();
    }
    writeln!(out, "  </g>").unwrap();

    if let Some(sol) = solution {
        writeln!(out, r#"  <g class="guards">"#).unwrap();
        for k in &sol.picks {
            let (x, y) = f.map(&k.guard);
            // Triangle pointing in the guarded direction; a diamond for two-way guards.
            let shape = match k.side {
                Side::Left => format!("{:.2},{y:.2} {:.2},{:.2} {:.2},{:.2}", x - 7.0, x + 3.0, y - 6.0, x + 3.0, y + 6.0),
                Side::Right => format!("{:.2},{y:.2} {:.2},{:.2} {:.2},{:.2}", x + 7.0, x - 3.0, y - 6.0, x - 3.0, y + 6.0),
                Side::Both => format!("{:.2},{y:.2} {x:.2},{:.2} {:.2},{y:.2} {x:.2},{:.2}", x - 6.0, y - 6.0, x + 6.0, y + 6.0),
            };
            writeln!(
                out,
                r#"    <polygon class="guard-{}" points="{shape}" fill="{}"><title>x = {} ({})</title></polygon>"#,
                k.side,
                color(k.side),
                k.guard.x(),
                k.side
            )
            .unwrap();
        }
        writeln!(out, "  </g>").unwrap();
    }
    out.push_str("</svg>\n");
    out
}
