//! Oriented maps as dart systems.
//!
//! A map is a pair of permutations on darts: `sigma` rotates darts around
//! their vertex and `alpha` swaps the two darts of an edge. Faces are the
//! orbits of `phi = alpha ∘ sigma` (apply `sigma`, then `alpha`).
//!
//! For a finite quotient `G` of `H_q` the darts are the elements of `G`,
//! `sigma(g) = g·T` and `alpha(g) = g·S`, so `phi(g) = g·T·S = g·R`. Both
//! generators act on the right and left multiplication gives automorphisms.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteHeckeGroup, HeckeParams};
use crate::perm::s5_oracle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapStructure {
    sigma: Vec<usize>,
    alpha: Vec<usize>,
    phi: Vec<usize>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

fn orbits(p: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            orbit.push(d);
            d = p[d];
        }
        out.push(orbit);
    }
    out
}

impl MapStructure {
    pub fn new(sigma: Vec<usize>, alpha: Vec<usize>) -> Result<Self> {
        if sigma.len() != alpha.len() || !is_permutation(&sigma) || !is_permutation(&alpha) {
            return Err(Error::InvalidParams("sigma and alpha must be permutations of one dart set".into()));
        }
        if alpha.iter().enumerate().any(|(d, &e)| d == e || alpha[e] != d) {
            return Err(Error::InvalidParams("alpha must be a fixed-point-free involution".into()));
        }
        let phi = sigma.iter().map(|&d| alpha[d]).collect();
        Ok(Self { sigma, alpha, phi })
    }

    pub fn darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn vertices(&self) -> Vec<Vec<usize>> {
        orbits(&self.sigma)
    }

    pub fn edges(&self) -> Vec<Vec<usize>> {
        orbits(&self.alpha)
    }

    pub fn faces(&self) -> Vec<Vec<usize>> {
        orbits(&self.phi)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices().len() as i64 - self.edges().len() as i64 + self.faces().len() as i64
    }

    pub fn genus(&self) -> i64 {
        (2 - self.euler_characteristic()) / 2
    }

    /// Uniform orbit length of `sigma`, if there is one.
    pub fn valency(&self) -> Option<usize> {
        uniform_len(&self.vertices())
    }

    pub fn face_size(&self) -> Option<usize> {
        uniform_len(&self.faces())
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_labels(0).iter().all(|l| l.is_some())
    }

    /// Transports the map along the dart bijection `d ↦ relabel[d]`.
    pub fn relabel(&self, relabel: &[usize]) -> Result<Self> {
        if relabel.len() != self.darts() || !is_permutation(relabel) {
            return Err(Error::InvalidParams("relabel must be a permutation of the darts".into()));
        }
        let mut sigma = vec![0; self.darts()];
        let mut alpha = vec![0; self.darts()];
        for d in 0..self.darts() {
            sigma[relabel[d]] = relabel[self.sigma[d]];
            alpha[relabel[d]] = relabel[self.alpha[d]];
        }
        Self::new(sigma, alpha)
    }

    fn bfs_labels(&self, root: usize) -> Vec<Option<usize>> {
        let mut label = vec![None; self.darts()];
        let mut queue = VecDeque::from([root]);
        label[root] = Some(0);
        let mut next = 1;
        while let Some(d) = queue.pop_front() {
            for e in [self.sigma[d], self.alpha[d]] {
                if label[e].is_none() {
                    label[e] = Some(next);
                    next += 1;
                    queue.push_back(e);
                }
            }
        }
        label
    }
}

fn uniform_len(orbits: &[Vec<usize>]) -> Option<usize> {
    let first = orbits.first()?.len();
    orbits.iter().all(|o| o.len() == first).then_some(first)
}

/// Canonical code of a connected map rooted at `root`.
///
/// Darts are numbered in breadth-first order from the root, following `sigma`
/// before `alpha`; the code lists `(label(sigma d), label(alpha d))` in label
/// order. Two rooted maps are isomorphic exactly when their codes agree.
pub fn canonical_form(map: &MapStructure, root: usize) -> Vec<usize> {
    let label = map.bfs_labels(root);
    let mut order = vec![usize::MAX; map.darts()];
    for (d, l) in label.iter().enumerate() {
        if let Some(l) = l {
            order[*l] = d;
        }
    }
    let mut code = Vec::with_capacity(2 * map.darts());
    for &d in order.iter().take_while(|&&d| d != usize::MAX) {
        code.push(label[map.sigma[d]].unwrap_or(usize::MAX));
        code.push(label[map.alpha[d]].unwrap_or(usize::MAX));
    }
    code
}

/// A dart bijection `m1 → m2` commuting with `sigma` and `alpha`, if any.
pub fn find_isomorphism(m1: &MapStructure, m2: &MapStructure) -> Option<Vec<usize>> {
    if m1.darts() != m2.darts() || !m1.is_connected() || !m2.is_connected() {
        return None;
    }
    let target = canonical_form(m2, 0);
    let labels2 = m2.bfs_labels(0);
    let mut by_label2 = vec![0; m2.darts()];
    for (d, l) in labels2.iter().enumerate() {
        by_label2[l.expect("connected")] = d;
    }
    (0..m1.darts()).find(|&r| canonical_form(m1, r) == target).map(|r| {
        let labels1 = m1.bfs_labels(r);
        labels1.iter().map(|l| by_label2[l.expect("connected")]).collect()
    })
}

pub fn is_isomorphic(m1: &MapStructure, m2: &MapStructure) -> bool {
    find_isomorphism(m1, m2).is_some()
}

/// Number of orientation-preserving automorphisms (roots with the base code).
pub fn automorphism_count(map: &MapStructure) -> usize {
    let base = canonical_form(map, 0);
    (0..map.darts()).filter(|&r| canonical_form(map, r) == base).count()
}

/// `V`, `E`, `F`, genus and the regularity data of a map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapInvariants {
    pub q: u32,
    pub n: u32,
    pub darts: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub genus: i64,
    pub group_order: usize,
    #[serde(skip)]
    pub vertex_valency: Option<usize>,
    #[serde(skip)]
    pub face_size: Option<usize>,
}

impl MapInvariants {
    pub fn of(map: &MapStructure, q: u32, n: u32, group_order: usize) -> Self {
        Self {
            q,
            n,
            darts: map.darts(),
            vertices: map.vertices().len(),
            edges: map.edges().len(),
            faces: map.faces().len(),
            genus: map.genus(),
            group_order,
            vertex_valency: map.valency(),
            face_size: map.face_size(),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.faces as i64
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain integers serialize")
    }
}

/// The regular map of `H_q / H_q(n)` together with its group.
#[derive(Debug, Clone)]
pub struct AlgebraicMap {
    pub group: FiniteHeckeGroup,
    pub map: MapStructure,
}

impl AlgebraicMap {
    pub fn params(&self) -> HeckeParams {
        self.group.params()
    }

    pub fn invariants(&self) -> MapInvariants {
        let p = self.params();
        MapInvariants::of(&self.map, p.q(), p.n(), self.group.order())
    }
}

pub fn build_algebraic_map(p: HeckeParams) -> Result<AlgebraicMap> {
    build_algebraic_map_bounded(p, crate::group::DEFAULT_MAX_GROUP)
}

pub fn build_algebraic_map_bounded(p: HeckeParams, limit: usize) -> Result<AlgebraicMap> {
    let group = FiniteHeckeGroup::enumerate_bounded(p, limit)?;
    let sigma = (0..group.order()).map(|g| group.times_t(g)).collect();
    let alpha = (0..group.order()).map(|g| group.times_s(g)).collect();
    let map = MapStructure::new(sigma, alpha)?;
    Ok(AlgebraicMap { group, map })
}

/// The map of the `S₅` image of `Γ(2, 5, 4)`: `sigma` is right multiplication
/// by `y`, `alpha` right multiplication by `x`.
pub fn permutation_model_map() -> MapStructure {
    let g = s5_oracle();
    let right = |gen| -> Vec<usize> {
        g.elements()
            .iter()
            .map(|e| g.index_of(&e.compose(gen)).expect("closed under generators"))
            .collect()
    };
    let sigma = right(&g.y);
    let alpha = right(&g.x);
    MapStructure::new(sigma, alpha).expect("x is a fixed-point-free involution on darts")
}
