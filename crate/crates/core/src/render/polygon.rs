use std::f64::consts::PI;

use super::{num, Svg};
use crate::coords::HFCoord;
use crate::error::{Error, Result};
use crate::names::{pretty, NameTable};
use crate::polygon::{Alignment, BoundarySequence, PairingTable, SideLabelTable};

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
];
const DASHES: [&str; 3] = ["none", "8 4", "2 3"];

/// How polygon sides sit on the boundary spans.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonLayout {
    pub alignment: Alignment,
    pub side_labels: Option<SideLabelTable>,
    /// Label of the polygon's centre, usually the pole `1/0`.
    pub centre: Option<HFCoord>,
}

impl PolygonLayout {
    pub fn new(alignment: Alignment) -> Self {
        Self { alignment, side_labels: None, centre: None }
    }
}

fn name(u: &HFCoord, names: Option<&NameTable>) -> String {
    match names {
        Some(t) => pretty(&t.label(u)),
        None => u.to_string(),
    }
}

/// Schematic regular polygon: corner `k` is the pole starting side `k`.
pub fn render_polygon(
    b: &BoundarySequence,
    t: &PairingTable,
    layout: &PolygonLayout,
    names: Option<&NameTable>,
) -> Result<String> {
    let spans = b.spans();
    let k = spans.len();
    if t.sides() != k {
        return Err(Error::InvalidPairing(format!("pairing has {} sides, boundary has {k}", t.sides())));
    }
    if let Some(l) = &layout.side_labels {
        if l.labels.len() != k {
            return Err(Error::InvalidPairing(format!("{} side labels for {k} sides", l.labels.len())));
        }
    }
    let size = 720.0;
    let c = size / 2.0;
    let r = size / 2.0 - 70.0;
    let corner = |i: usize| {
        let a = PI / 2.0 + 2.0 * PI * (i % k) as f64 / k as f64;
        (c + r * a.cos(), c - r * a.sin())
    };
    let mut pair_index = vec![0usize; k + 1];
    for (i, &(x, y)) in t.pairs().iter().enumerate() {
        pair_index[x] = i;
        pair_index[y] = i;
    }

    let mut svg = Svg::new(size, size, &format!("{k}-gon with side pairing"));
    svg.raw("<g class=\"sides\" fill=\"none\" stroke-width=\"3.000\">");
    for side in 1..=k {
        let (x1, y1) = corner(side - 1);
        let (x2, y2) = corner(side);
        let i = pair_index[side];
        let colour = PALETTE[i % PALETTE.len()];
        let dash = DASHES[(i / PALETTE.len()) % DASHES.len()];
        svg.raw(&format!(
            "<line class=\"side pair-{i}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{colour}\" stroke-dasharray=\"{dash}\"/>",
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        ));
    }
    svg.raw("</g>");

    svg.raw("<g class=\"corners\">");
    for side in 1..=k {
        let span = &spans[layout.alignment.span_of_side(side, k)];
        let (x, y) = corner(side - 1);
        svg.raw(&format!("<circle cx=\"{}\" cy=\"{}\" r=\"3.500\" fill=\"black\"/>", num(x), num(y)));
        let (lx, ly) = (c + (x - c) * 1.1, c + (y - c) * 1.1);
        svg.text("corner", lx, ly, 15.0, &name(&span.from, names));
    }
    svg.raw("</g>");

    svg.raw("<g class=\"side-numbers\" fill=\"#333333\">");
    for side in 1..=k {
        let (x1, y1) = corner(side - 1);
        let (x2, y2) = corner(side);
        let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
        svg.text("side-number", c + (mx - c) * 1.1, c + (my - c) * 1.1, 12.0, &side.to_string());
        if let Some(l) = &layout.side_labels {
            svg.text("side-label", c + (mx - c) * 0.86, c + (my - c) * 0.86, 12.0, &name(&l.labels[side - 1], names));
        }
    }
    svg.raw("</g>");

    if let Some(u) = &layout.centre {
        svg.raw(&format!("<circle cx=\"{}\" cy=\"{}\" r=\"3.500\" fill=\"#a00000\"/>", num(c), num(c)));
        svg.text("centre", c, c + 16.0, 15.0, &name(u, names));
    }
    Ok(svg.finish())
}
