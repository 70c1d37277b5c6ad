//! SVG drawings of reconstructed multicurves.
//!
//! Regions sit side by side along the horizontal diameter with their
//! puncture or crosscap at the centre. Every strand endpoint is placed on
//! its arc in slot order, so the picture shows the same gluing the oracle
//! traces.

use std::fmt::Write;

use crate::components::{ClosedComponent, PathComponent, Region, Species};
use crate::error::{Error, Result};
use crate::oracle::StrandDiagram;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub region_width: f64,
    pub height: f64,
    pub margin: f64,
    pub stroke_width: f64,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            region_width: 160.0,
            height: 320.0,
            margin: 24.0,
            stroke_width: 1.5,
        }
    }
}

impl RenderSpec {
    fn check(&self) -> Result<()> {
        let all = [
            self.region_width,
            self.height,
            self.margin,
            self.stroke_width,
        ];
        if all.iter().all(|x| x.is_finite() && *x > 0.0) {
            Ok(())
        } else {
            Err(Error::Parameter(
                "render dimensions must be positive".into(),
            ))
        }
    }
}

fn colour(species: Species) -> &'static str {
    match species {
        Species::Above => "#1f77b4",
        Species::Below => "#2ca02c",
        Species::LeftLoop | Species::RightLoop => "#ff7f0e",
        Species::StraightCore => "#d62728",
        Species::LeftCoreLoop | Species::RightCoreLoop => "#9467bd",
    }
}

struct Layout<'a> {
    spec: &'a RenderSpec,
    d: &'a StrandDiagram,
}

impl Layout<'_> {
    fn arc_x(&self, arc: usize) -> f64 {
        self.spec.margin + arc as f64 * self.spec.region_width
    }

    fn centre(&self, region: usize) -> (f64, f64) {
        (
            self.spec.margin + (region as f64 + 0.5) * self.spec.region_width,
            self.spec.margin + self.spec.height / 2.0,
        )
    }

    fn slot_y(&self, arc: usize, slot: usize) -> f64 {
        let size = self.d.gluing().strands_across(arc) as f64;
        self.spec.margin + self.spec.height * (slot as f64 + 1.0) / (size + 1.0)
    }

    fn point(&self, arc: usize, slot: usize) -> (f64, f64) {
        (self.arc_x(arc), self.slot_y(arc, slot))
    }

    fn radius(&self) -> f64 {
        self.spec.region_width.min(self.spec.height) / 10.0
    }

    fn path(&self, region: usize, c: &PathComponent) -> String {
        let (cx, cy) = self.centre(region);
        let [p, q] = c.ends.map(|e| self.point(e.arc, e.slot));
        let r = self.radius();
        match c.species {
            Species::Above | Species::Below => {
                let dx = (q.0 - p.0) / 3.0;
                format!(
                    "M {:.2} {:.2} C {:.2} {:.2} {:.2} {:.2} {:.2} {:.2}",
                    p.0,
                    p.1,
                    p.0 + dx,
                    p.1,
                    q.0 - dx,
                    q.1,
                    q.0,
                    q.1
                )
            }
            Species::LeftLoop | Species::RightLoop => {
                let (top, bottom) = (p.1.min(q.1), p.1.max(q.1));
                // outer loops reach further past the feature than inner ones
                let depth = (bottom - top) / self.spec.height;
                let reach = (cx - p.0) + (cx - p.0).signum() * r * (1.0 + 2.0 * depth);
                format!(
                    "M {:.2} {:.2} C {:.2} {:.2} {:.2} {:.2} {:.2} {:.2}",
                    p.0,
                    top,
                    p.0 + reach * 1.3,
                    top.min(cy - r * 1.5),
                    p.0 + reach * 1.3,
                    bottom.max(cy + r * 1.5),
                    q.0,
                    bottom
                )
            }
            Species::StraightCore | Species::LeftCoreLoop | Species::RightCoreLoop => {
                // enter the crosscap at one point and leave from the antipode
                let angle = std::f64::consts::PI * (p.1 - self.spec.margin) / self.spec.height;
                let (s, co) = angle.sin_cos();
                let side = if p.0 < cx { -1.0 } else { 1.0 };
                let into = (cx + side * r * s, cy - r * co);
                let out = (2.0 * cx - into.0, 2.0 * cy - into.1);
                format!(
                    "M {:.2} {:.2} L {:.2} {:.2} M {:.2} {:.2} L {:.2} {:.2}",
                    p.0, p.1, into.0, into.1, out.0, out.1, q.0, q.1
                )
            }
        }
    }
}

/// Renders the diagram as a standalone SVG document.
pub fn render_svg(d: &StrandDiagram, spec: &RenderSpec) -> Result<String> {
    spec.check()?;
    let g = d.gluing();
    let layout = Layout { spec, d };
    let regions = g.regions.len();
    let width = 2.0 * spec.margin + regions as f64 * spec.region_width;
    let height = 2.0 * spec.margin + spec.height;
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(
        w,
        r##"<rect x="{m}" y="{m}" width="{iw}" height="{ih}" rx="{rx}" fill="none" stroke="#000"/>"##,
        m = spec.margin,
        iw = regions as f64 * spec.region_width,
        ih = spec.height,
        rx = spec.height / 2.0,
    );
    let (_, cy) = layout.centre(0);
    let _ = writeln!(
        w,
        r##"<line x1="{x1}" y1="{cy}" x2="{x2}" y2="{cy}" stroke="#999" stroke-dasharray="4 4"/>"##,
        x1 = spec.margin,
        x2 = width - spec.margin,
    );
    for arc in 1..regions {
        let x = layout.arc_x(arc);
        let _ = writeln!(
            w,
            r##"<line x1="{x}" y1="{y1}" x2="{x}" y2="{y2}" stroke="#bbb"/>"##,
            y1 = spec.margin,
            y2 = spec.margin + spec.height,
        );
    }
    let r = layout.radius();
    for (i, rc) in g.regions.iter().enumerate() {
        let (cx, cy) = layout.centre(i);
        match rc.region {
            Region::Puncture(_) => {
                let _ = writeln!(w, r##"<circle cx="{cx}" cy="{cy}" r="3" fill="#000"/>"##);
            }
            Region::Crosscap1 | Region::Crosscap2 => {
                let k = r * std::f64::consts::FRAC_1_SQRT_2;
                let _ = writeln!(
                    w,
                    r##"<circle cx="{cx}" cy="{cy}" r="{r}" fill="#fff" stroke="#000"/><path d="M {a:.2} {b:.2} L {c:.2} {e:.2} M {a:.2} {e:.2} L {c:.2} {b:.2}" stroke="#000"/>"##,
                    a = cx - k,
                    b = cy - k,
                    c = cx + k,
                    e = cy + k,
                );
            }
        }
        for comp in &rc.components {
            let _ = writeln!(
                w,
                r#"<path d="{}" fill="none" stroke="{}" stroke-width="{}"/>"#,
                layout.path(i, comp),
                colour(comp.species),
                spec.stroke_width
            );
        }
    }
    for (j, closed) in g.closed.iter().enumerate() {
        let (k, dashed) = match closed {
            ClosedComponent::Core(k) => (*k, "2 2"),
            ClosedComponent::Bounding(k) => (*k, "6 3"),
        };
        let (cx, cy) = layout.centre(g.n + k - 1);
        let _ = writeln!(
            w,
            r##"<circle cx="{cx}" cy="{cy}" r="{rr:.2}" fill="none" stroke="#8c564b" stroke-dasharray="{dashed}"/>"##,
            rr = r * (1.4 + 0.3 * j as f64),
        );
    }
    let _ = writeln!(w, "</svg>");
    Ok(out)
}
