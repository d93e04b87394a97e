use std::f64::consts::PI;
use std::fmt::Write as _;

use super::{escape, num, Svg};
use crate::error::Result;
use crate::graph::build_coordinate_graph;
use crate::group::HeckeParams;
use crate::names::{pretty, NameTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientFormat {
    Svg,
    Dot,
}

impl std::str::FromStr for QuotientFormat {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(QuotientFormat::Svg),
            "dot" => Ok(QuotientFormat::Dot),
            _ => Err(crate::Error::InvalidParams(format!("unknown format `{s}`"))),
        }
    }
}

/// The coordinate graph of `M_q(n)`, labelled by table names where available.
pub fn render_quotient(p: HeckeParams, format: QuotientFormat) -> Result<String> {
    let g = build_coordinate_graph(p)?;
    let names = NameTable::for_params(&p);
    let label = |i: usize| match &names {
        Some(t) => t.label(&g.coords[i]),
        None => g.coords[i].to_string(),
    };
    let edges = g.graph.edges();
    match format {
        QuotientFormat::Dot => {
            let mut out = String::new();
            let _ = writeln!(out, "graph M_{}_{} {{", p.q(), p.n());
            for i in 0..g.coords.len() {
                let _ = writeln!(
                    out,
                    "  v{i} [label=\"{}\", tooltip=\"{}\"];",
                    escape(&label(i)),
                    g.coords[i].fraction(&p)
                );
            }
            for (a, b) in edges {
                let _ = writeln!(out, "  v{a} -- v{b};");
            }
            out.push_str("}\n");
            Ok(out)
        }
        QuotientFormat::Svg => {
            let size = 640.0;
            let c = size / 2.0;
            let r = size / 2.0 - 60.0;
            let k = g.coords.len();
            let pos: Vec<(f64, f64)> = (0..k)
                .map(|i| {
                    let t = PI / 2.0 - 2.0 * PI * i as f64 / k as f64;
                    (c + r * t.cos(), c - r * t.sin())
                })
                .collect();
            let mut svg = Svg::new(size, size, &format!("M{}({}) coordinate graph", p.q(), p.n()));
            svg.raw("<g class=\"edges\" stroke=\"#555555\" stroke-width=\"1.000\">");
            for (a, b) in edges {
                svg.raw(&format!(
                    "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>",
                    num(pos[a].0),
                    num(pos[a].1),
                    num(pos[b].0),
                    num(pos[b].1)
                ));
            }
            svg.raw("</g>");
            svg.raw("<g class=\"vertices\">");
            for (i, &(x, y)) in pos.iter().enumerate() {
                let fill = if g.coords[i].is_pole() { "#a00000" } else { "#1f4e79" };
                svg.raw(&format!("<circle cx=\"{}\" cy=\"{}\" r=\"4.000\" fill=\"{fill}\"/>", num(x), num(y)));
                let (lx, ly) = (c + (x - c) * 1.12, c + (y - c) * 1.12);
                svg.text("vertex", lx, ly, 13.0, &pretty(&label(i)));
            }
            svg.raw("</g>");
            Ok(svg.finish())
        }
    }
}
