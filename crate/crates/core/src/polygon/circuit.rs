use std::collections::BTreeSet;

use crate::coords::{adjacent, HFCoord};
use crate::error::{Error, Result};
use crate::graph::build_coordinate_graph;
use crate::group::HeckeParams;
use crate::names::{resolve, NameTable};

/// Longest closed walk `search_circuits` will look for.
pub const MAX_SEARCH_LENGTH: usize = 16;

const PAPER_CIRCUIT: &str = include_str!("../../fixtures/circuit.txt");

/// A closed walk `v₀, …, v_{k-1}` (the return to `v₀` is implicit).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circuit {
    pub seq: Vec<HFCoord>,
}

impl Circuit {
    pub fn new(seq: Vec<HFCoord>) -> Self {
        Self { seq }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Comma-separated names or raw `kind:num/den` tokens. A trailing repeat of
    /// the first vertex is accepted and dropped.
    pub fn parse(text: &str, p: &HeckeParams, names: Option<&NameTable>) -> Result<Self> {
        let mut seq = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("");
            for tok in line.split(',').map(str::trim).filter(|t| !t.is_empty()) {
                seq.push(resolve(tok, p, names)?);
            }
        }
        if seq.len() > 1 && seq.first() == seq.last() {
            seq.pop();
        }
        Ok(Self { seq })
    }

    /// The 12-vertex circuit through `H₂` on `M₄(5)`.
    pub fn paper() -> Self {
        let p = HeckeParams::new(4, 5).expect("valid");
        let names = NameTable::for_params(&p).expect("table for (4, 5)");
        Self::parse(PAPER_CIRCUIT, &p, Some(&names)).expect("embedded circuit parses")
    }

    pub fn format(&self, names: Option<&NameTable>) -> String {
        let parts: Vec<String> = self
            .seq
            .iter()
            .map(|u| names.map_or_else(|| u.to_string(), |t| t.label(u)))
            .collect();
        parts.join(", ")
    }
}

/// Consecutive vertices (and last/first) are adjacent. Vertices may repeat.
pub fn validate_circuit(c: &Circuit, p: &HeckeParams) -> bool {
    let k = c.len();
    k > 0 && (0..k).all(|i| adjacent(&c.seq[i], &c.seq[(i + 1) % k], p))
}

/// All closed walks of `length` steps from `start` whose pole positions are
/// exactly `pole_positions`, in lexicographic order of coordinates.
pub fn search_circuits(
    start: &HFCoord,
    length: usize,
    pole_positions: &BTreeSet<usize>,
    p: &HeckeParams,
) -> Result<Vec<Circuit>> {
    if length > MAX_SEARCH_LENGTH {
        return Err(Error::SearchBound { length, max: MAX_SEARCH_LENGTH });
    }
    let g = build_coordinate_graph(*p)?;
    let Some(s) = g.position(start) else {
        return Err(Error::UnknownLabel(start.to_string()));
    };
    let mut out = Vec::new();
    if length < 2 || start.is_pole() != pole_positions.contains(&0) {
        return Ok(out);
    }
    let dist: Vec<usize> =
        g.graph.distances_from(s).into_iter().map(|d| d.unwrap_or(usize::MAX)).collect();
    let mut walk = vec![s];
    let mut stack = vec![0usize];
    // Iterative DFS; stack[i] is the next neighbour index to try from walk[i].
    while let Some(top) = stack.last_mut() {
        let depth = walk.len();
        let u = walk[depth - 1];
        let nbrs = g.graph.neighbors(u);
        if depth == length {
            if g.graph.has_edge(u, s) {
                out.push(Circuit::new(walk.iter().map(|&i| g.coords[i]).collect()));
            }
            stack.pop();
            walk.pop();
            continue;
        }
        if *top >= nbrs.len() {
            stack.pop();
            walk.pop();
            continue;
        }
        let v = nbrs[*top];
        *top += 1;
        let remaining = length - depth;
        if g.coords[v].is_pole() == pole_positions.contains(&depth) && dist[v] <= remaining {
            walk.push(v);
            stack.push(0);
        }
    }
    Ok(out)
}
