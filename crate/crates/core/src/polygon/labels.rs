//! Which interior vertex names each polygon side.
//!
//! Every pole-to-pole span of the boundary has two interior vertices. The side
//! label table picks one per side from two translation orbits so that every
//! label is used exactly twice; sides carrying the same label are then paired.

use std::collections::{BTreeMap, BTreeSet};

use crate::coords::{apply, HFCoord};
use crate::error::{Error, Result};
use crate::group::{generators, HeckeParams};
use crate::names::{resolve, NameTable};
use crate::polygon::boundary::{BoundarySequence, Span};
use crate::polygon::pairing::PairingTable;

const PAPER_SIDE_LABELS: &str = include_str!("../../fixtures/side_labels.txt");

/// `u, T(u), T²(u), …` until it returns to `u`.
pub fn translation_orbit(u: &HFCoord, p: &HeckeParams) -> Result<Vec<HFCoord>> {
    let t = generators(p).t;
    let mut out = vec![*u];
    let mut v = apply(&t, u, p)?;
    while v != *u {
        out.push(v);
        v = apply(&t, &v, p)?;
    }
    Ok(out)
}

/// Side `k` (1-based) carries `labels[k - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideLabelTable {
    pub labels: Vec<HFCoord>,
}

impl SideLabelTable {
    /// Lines `side name`; sides must be exactly `1..=N`.
    pub fn parse(text: &str, p: &HeckeParams, names: Option<&NameTable>) -> Result<Self> {
        let mut by_side = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: i + 1, msg };
            let (side, label) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| err("expected `side label`".into()))?;
            let side: usize = side.parse().map_err(|_| err(format!("bad side `{side}`")))?;
            if by_side.insert(side, resolve(label, p, names)?).is_some() {
                return Err(err(format!("side {side} listed twice")));
            }
        }
        if by_side.keys().copied().ne(1..=by_side.len()) {
            return Err(Error::InvalidPairing("side labels must cover 1..=N exactly".into()));
        }
        Ok(Self { labels: by_side.into_values().collect() })
    }

    pub fn paper() -> Self {
        let p = HeckeParams::new(4, 5).expect("valid");
        let names = NameTable::for_params(&p).expect("table for (4, 5)");
        Self::parse(PAPER_SIDE_LABELS, &p, Some(&names)).expect("embedded side labels parse")
    }

    pub fn label_counts(&self) -> BTreeMap<HFCoord, usize> {
        let mut out = BTreeMap::new();
        for u in &self.labels {
            *out.entry(*u).or_insert(0) += 1;
        }
        out
    }

    /// Pairs the sides that share a label; every label must occur exactly twice.
    pub fn pairing(&self) -> Result<PairingTable> {
        let mut seen: BTreeMap<HFCoord, usize> = BTreeMap::new();
        let mut pairs = Vec::new();
        for (i, u) in self.labels.iter().enumerate() {
            match seen.remove(u) {
                Some(first) => pairs.push((first, i + 1)),
                None => {
                    seen.insert(*u, i + 1);
                }
            }
        }
        if let Some(u) = seen.keys().next() {
            return Err(Error::InvalidPairing(format!("label {u} does not occur an even number of times")));
        }
        if self.label_counts().values().any(|&c| c != 2) {
            return Err(Error::InvalidPairing("some label occurs more than twice".into()));
        }
        PairingTable::new(pairs)
    }
}

/// Side `k` sits on span `(offset + k - 1) mod N`, or `(offset - k + 1) mod N` when reversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Alignment {
    pub offset: usize,
    pub reversed: bool,
}

impl Alignment {
    pub fn span_of_side(&self, side: usize, spans: usize) -> usize {
        let k = side - 1;
        if self.reversed {
            (self.offset + spans - k % spans) % spans
        } else {
            (self.offset + k) % spans
        }
    }
}

#[derive(Debug, Clone)]
pub struct SideLabelReport {
    pub spans: Vec<Span>,
    /// Translation orbits of the seed labels.
    pub orbits: Vec<Vec<HFCoord>>,
    /// Every choice of one orbit label per span using each label exactly twice.
    pub designations: Vec<Vec<HFCoord>>,
}

impl SideLabelReport {
    pub fn orbit_labels(&self) -> BTreeSet<HFCoord> {
        self.orbits.iter().flatten().copied().collect()
    }

    /// Occurrences of each orbit label among all interior vertices of all spans.
    pub fn interior_counts(&self) -> BTreeMap<HFCoord, usize> {
        let allowed = self.orbit_labels();
        let mut out: BTreeMap<HFCoord, usize> = allowed.iter().map(|u| (*u, 0)).collect();
        for s in &self.spans {
            for u in s.interior.iter().filter(|u| allowed.contains(u)) {
                *out.get_mut(u).expect("allowed") += 1;
            }
        }
        out
    }

    /// Alignments of side numbering to spans under which `designation` reproduces `table`.
    pub fn alignments(&self, designation: &[HFCoord], table: &SideLabelTable) -> Vec<Alignment> {
        let n = designation.len();
        if table.labels.len() != n {
            return Vec::new();
        }
        let mut out = Vec::new();
        for reversed in [false, true] {
            for offset in 0..n {
                let a = Alignment { offset, reversed };
                if (1..=n).all(|k| designation[a.span_of_side(k, n)] == table.labels[k - 1]) {
                    out.push(a);
                }
            }
        }
        out
    }

    /// The designation read in side order under `a`.
    pub fn table_for(&self, designation: &[HFCoord], a: Alignment) -> SideLabelTable {
        let n = designation.len();
        SideLabelTable { labels: (1..=n).map(|k| designation[a.span_of_side(k, n)]).collect() }
    }
}

pub fn side_label_analysis(
    b: &BoundarySequence,
    seeds: &[HFCoord],
    p: &HeckeParams,
) -> Result<SideLabelReport> {
    let spans = b.spans();
    let orbits = seeds.iter().map(|u| translation_orbit(u, p)).collect::<Result<Vec<_>>>()?;
    let allowed: BTreeSet<HFCoord> = orbits.iter().flatten().copied().collect();
    let candidates: Vec<Vec<HFCoord>> = spans
        .iter()
        .map(|s| {
            let mut c: Vec<HFCoord> = s.interior.iter().filter(|u| allowed.contains(u)).copied().collect();
            c.dedup();
            c
        })
        .collect();

    fn go(
        i: usize,
        candidates: &[Vec<HFCoord>],
        used: &mut BTreeMap<HFCoord, usize>,
        current: &mut Vec<HFCoord>,
        out: &mut Vec<Vec<HFCoord>>,
    ) {
        if i == candidates.len() {
            if used.values().all(|&c| c == 2) {
                out.push(current.clone());
            }
            return;
        }
        for u in &candidates[i] {
            let c = used.get_mut(u).expect("allowed label");
            if *c == 2 {
                continue;
            }
            *c += 1;
            current.push(*u);
            go(i + 1, candidates, used, current, out);
            current.pop();
            *used.get_mut(u).expect("allowed label") -= 1;
        }
    }

    let mut designations = Vec::new();
    let mut used: BTreeMap<HFCoord, usize> = allowed.iter().map(|u| (*u, 0)).collect();
    go(0, &candidates, &mut used, &mut Vec::new(), &mut designations);
    Ok(SideLabelReport { spans, orbits, designations })
}
