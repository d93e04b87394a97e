//! Permutations of `{1, …, d}` and the `S₅` image of the triangle group
//! `Γ(2, 5, 4)` under `X ↦ (1 5)`, `Y ↦ (5 4 3 2 1)`, `Z ↦ (2 3 4 5)`.
//!
//! Products compose as functions: `(p·q)(i) = p(q(i))`, the right factor acts
//! first. Under this convention `x·y·z = 1`; under left-first composition the
//! same three cycles give `z·y·x = 1` instead.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Self { images: (0..degree as u8).collect() }
    }

    /// Builds a permutation from 1-based cycles, e.g. `&[&[5, 4, 3, 2, 1]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u8> = (0..degree as u8).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree || seen[pt - 1] {
                    return Err(Error::InvalidParams(format!("bad cycle point {pt}")));
                }
                seen[pt - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u8;
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// `self · other`, i.e. `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { images: other.images.iter().map(|&j| self.images[j as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn order(&self) -> u64 {
        let mut acc = self.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.compose(self);
            k += 1;
        }
        k
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// A permutation group enumerated from generators `x`, `y`, with `z = (x·y)⁻¹`.
#[derive(Debug, Clone)]
pub struct PermGroup {
    pub x: Perm,
    pub y: Perm,
    pub z: Perm,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl PermGroup {
    /// Breadth-first closure under right multiplication by `x` and `y`.
    pub fn generate(x: Perm, y: Perm, z: Perm) -> Self {
        let id = Perm::identity(x.degree());
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            let g = elements[head].clone();
            for gen in [&x, &y] {
                let h = g.compose(gen);
                if !index.contains_key(&h) {
                    index.insert(h.clone(), elements.len());
                    elements.push(h);
                }
            }
            head += 1;
        }
        Self { x, y, z, elements, index }
    }

    pub fn degree(&self) -> usize {
        self.x.degree()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_abelian(&self) -> bool {
        self.x.compose(&self.y) == self.y.compose(&self.x)
    }

    /// Distinct element orders, sorted.
    pub fn order_spectrum(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.elements.iter().map(Perm::order).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// The image of `Γ(2, 5, 4)` in `S₅`.
pub fn s5_oracle() -> PermGroup {
    let x = Perm::from_cycles(5, &[&[1, 5]]).expect("valid cycle");
    let y = Perm::from_cycles(5, &[&[5, 4, 3, 2, 1]]).expect("valid cycle");
    let z = Perm::from_cycles(5, &[&[2, 3, 4, 5]]).expect("valid cycle");
    PermGroup::generate(x, y, z)
}
