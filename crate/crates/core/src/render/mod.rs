//! SVG and DOT output.
//!
//! Geometry is decided exactly (cusps in `Q(√m) ∪ {∞}`); floats appear only
//! when coordinates are written out, always with three decimals.

mod polygon;
mod quotient;
mod universal;

use std::fmt::Write as _;

pub use polygon::{render_polygon, PolygonLayout};
pub use quotient::{render_quotient, QuotientFormat};
pub use universal::{principal_face, render_universal, universal_geodesics, Geodesic, MAX_DEPTH};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Model {
    HalfPlane,
    #[default]
    Disk,
}

impl std::str::FromStr for Model {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "halfplane" | "half-plane" => Ok(Model::HalfPlane),
            "disk" => Ok(Model::Disk),
            _ => Err(crate::Error::InvalidParams(format!("unknown model `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderConfig {
    pub model: Model,
    /// Longest word in `S, T, T⁻¹`.
    pub depth: usize,
    /// Width and height of the document in pixels.
    pub size: f64,
    /// Visible window of the half-plane: `x ∈ [x_min, x_max]`, `y ∈ [0, y_max]`.
    pub x_min: f64,
    pub x_max: f64,
    pub y_max: f64,
    pub stroke_width: f64,
    /// Label the vertices of the principal face.
    pub label_face: bool,
}

impl Default for RenderConfig {
    fn default() -> Self {
        Self {
            model: Model::Disk,
            depth: 4,
            size: 800.0,
            x_min: -3.0,
            x_max: 3.0,
            y_max: 3.0,
            stroke_width: 1.0,
            label_face: true,
        }
    }
}

/// Three decimals, no negative zero.
fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

struct Svg {
    out: String,
}

impl Svg {
    fn new(width: f64, height: f64, title: &str) -> Self {
        let mut out = String::new();
        out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
            w = num(width),
            h = num(height)
        );
        let _ = writeln!(out, "<title>{}</title>", escape(title));
        Self { out }
    }

    fn raw(&mut self, line: &str) {
        self.out.push_str(line);
        self.out.push('\n');
    }

    fn text(&mut self, class: &str, x: f64, y: f64, size: f64, body: &str) {
        let _ = writeln!(
            self.out,
            "<text class=\"{class}\" x=\"{}\" y=\"{}\" font-size=\"{}\" font-family=\"serif\" text-anchor=\"middle\" dominant-baseline=\"middle\">{}</text>",
            num(x),
            num(y),
            num(size),
            escape(body)
        );
    }

    fn finish(mut self) -> String {
        self.out.push_str("</svg>\n");
        self.out
    }
}
