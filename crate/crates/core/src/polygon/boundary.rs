use std::collections::BTreeMap;

use crate::coords::{adjacent, apply, HFCoord};
use crate::error::{Error, Result};
use crate::group::{generators, HeckeParams};
use crate::polygon::circuit::Circuit;

/// Pole-to-pole stretch of the boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span {
    pub start_slot: usize,
    pub from: HFCoord,
    pub to: HFCoord,
    pub interior: Vec<HFCoord>,
}

/// The boundary of the polygon: a circuit followed by its translates under
/// `T, T², …, T^{n-1}`, read cyclically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundarySequence {
    slots: Vec<HFCoord>,
    pole_slots: Vec<usize>,
    period: usize,
}

impl BoundarySequence {
    pub fn slots(&self) -> &[HFCoord] {
        &self.slots
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn pole_slots(&self) -> &[usize] {
        &self.pole_slots
    }

    /// Length of the generating circuit.
    pub fn period(&self) -> usize {
        self.period
    }

    pub fn pole_multiset(&self) -> BTreeMap<HFCoord, usize> {
        let mut out = BTreeMap::new();
        for &i in &self.pole_slots {
            *out.entry(self.slots[i]).or_insert(0) += 1;
        }
        out
    }

    /// One span per polygon side, in boundary order.
    pub fn spans(&self) -> Vec<Span> {
        let k = self.pole_slots.len();
        (0..k)
            .map(|i| {
                let a = self.pole_slots[i];
                let b = self.pole_slots[(i + 1) % k];
                let end = if b > a { b } else { b + self.slots.len() };
                Span {
                    start_slot: a,
                    from: self.slots[a],
                    to: self.slots[b],
                    interior: (a + 1..end).map(|j| self.slots[j % self.slots.len()]).collect(),
                }
            })
            .collect()
    }
}

/// Builds the boundary from a circuit whose poles sit exactly at the
/// positions divisible by 3, checking adjacency around the whole cycle.
pub fn boundary_from_circuit(c: &Circuit, p: &HeckeParams) -> Result<BoundarySequence> {
    let k = c.len();
    if k == 0 || !k.is_multiple_of(3) {
        return Err(Error::Boundary(format!("circuit length {k} is not a positive multiple of 3")));
    }
    for (i, u) in c.seq.iter().enumerate() {
        if u.is_pole() != (i % 3 == 0) {
            return Err(Error::Boundary(format!(
                "position {i} holds {u}; poles must sit exactly at positions divisible by 3"
            )));
        }
    }
    let t = generators(p).t;
    let mut slots = Vec::with_capacity(k * p.n() as usize);
    let mut current = c.seq.clone();
    for _ in 0..p.n() {
        slots.extend_from_slice(&current);
        current = current.iter().map(|u| apply(&t, u, p)).collect::<Result<_>>()?;
    }
    if current != c.seq {
        return Err(Error::Boundary("translation does not close up after n steps".into()));
    }
    let len = slots.len();
    for i in 0..len {
        if !adjacent(&slots[i], &slots[(i + 1) % len], p) {
            return Err(Error::Boundary(format!(
                "slots {i} and {} ({} and {}) are not adjacent",
                (i + 1) % len,
                slots[i],
                slots[(i + 1) % len]
            )));
        }
    }
    let pole_slots: Vec<usize> = (0..len).filter(|&i| slots[i].is_pole()).collect();
    if pole_slots.len() != len / 3 {
        return Err(Error::Boundary(format!("expected {} poles, found {}", len / 3, pole_slots.len())));
    }
    Ok(BoundarySequence { slots, pole_slots, period: k })
}
