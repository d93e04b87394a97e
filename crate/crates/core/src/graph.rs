//! Simple graphs on Hecke–Farey coordinates, and the bridge from the dart
//! model (`g⟨T⟩ ↦ g(∞)`) to the coordinate model.

use std::collections::{BTreeSet, VecDeque};

use crate::coords::{adjacent, cusp_of, enumerate_coords, HFCoord};
use crate::error::Result;
use crate::group::HeckeParams;
use crate::map::AlgebraicMap;

/// Undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in edges {
            if u != v && !adj[u].contains(&v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Self { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&&v| u < v).map(|&v| (u, v)));
        }
        out
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    /// A proper 2-colouring, if one exists.
    pub fn two_colouring(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.order()];
        for s in 0..self.order() {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &v in &self.adj[u] {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.order() {
            let mut dist = vec![usize::MAX; self.order()];
            let mut parent = vec![usize::MAX; self.order()];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Vertex bijection `self → other` preserving adjacency, found by backtracking.
    pub fn find_isomorphism(&self, other: &Graph) -> Option<Vec<usize>> {
        if self.order() != other.order() || self.size() != other.size() {
            return None;
        }
        let mut d1 = self.degrees();
        let mut d2 = other.degrees();
        d1.sort_unstable();
        d2.sort_unstable();
        if d1 != d2 {
            return None;
        }
        // Visit vertices in BFS order so each new vertex has a mapped neighbour.
        let mut order = Vec::with_capacity(self.order());
        let mut seen = vec![false; self.order()];
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        let mut map = vec![usize::MAX; self.order()];
        let mut used = vec![false; other.order()];
        if self.extend(other, &order, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn extend(&self, other: &Graph, order: &[usize], k: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        let Some(&u) = order.get(k) else {
            return true;
        };
        for cand in 0..other.order() {
            if used[cand] || other.adj[cand].len() != self.adj[u].len() {
                continue;
            }
            let consistent = order[..k]
                .iter()
                .all(|&w| self.has_edge(u, w) == other.has_edge(cand, map[w]));
            if !consistent {
                continue;
            }
            map[u] = cand;
            used[cand] = true;
            if self.extend(other, order, k + 1, map, used) {
                return true;
            }
            used[cand] = false;
            map[u] = usize::MAX;
        }
        false
    }

    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        self.find_isomorphism(other).is_some()
    }
}

/// The 1-skeleton of the cube: vertices are 3-bit words, edges flip one bit.
pub fn cube_graph() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(8, &edges)
}

/// Coordinates as vertices, adjacency rule as edges.
#[derive(Debug, Clone)]
pub struct CoordGraph {
    pub params: HeckeParams,
    pub coords: Vec<HFCoord>,
    pub graph: Graph,
}

impl CoordGraph {
    pub fn position(&self, u: &HFCoord) -> Option<usize> {
        self.coords.binary_search(u).ok()
    }
}

pub fn build_coordinate_graph(p: HeckeParams) -> Result<CoordGraph> {
    let coords = enumerate_coords(&p)?;
    let mut edges = Vec::new();
    for i in 0..coords.len() {
        for j in i + 1..coords.len() {
            if adjacent(&coords[i], &coords[j], &p) {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::from_edges(coords.len(), &edges);
    Ok(CoordGraph { params: p, coords, graph })
}

/// Outcome of matching the dart model against the coordinate graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CorrespondenceReport {
    pub vertices_matched: usize,
    pub edges_matched: usize,
    pub violations: Vec<String>,
}

impl CorrespondenceReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `cusp_of` is constant on vertex orbits and bijective onto the
/// coordinates, and that edge orbits project onto exactly the adjacency edges.
pub fn correspondence_check(amap: &AlgebraicMap, graph: &CoordGraph) -> CorrespondenceReport {
    let mut report = CorrespondenceReport::default();
    let p = amap.params();
    if p != graph.params {
        report.violations.push("map and graph have different parameters".into());
        return report;
    }
    let mut cusps = Vec::with_capacity(amap.group.order());
    for g in amap.group.elements() {
        match cusp_of(g, &p).ok().and_then(|u| graph.position(&u)) {
            Some(i) => cusps.push(i),
            None => {
                report.violations.push(format!("element {g} has no coordinate"));
                return report;
            }
        }
    }
    let mut hit = vec![false; graph.coords.len()];
    for orbit in amap.map.vertices() {
        let c = cusps[orbit[0]];
        if orbit.iter().any(|&d| cusps[d] != c) {
            report.violations.push(format!("vertex orbit of dart {} has several cusps", orbit[0]));
        }
        if hit[c] {
            report.violations.push(format!("coordinate {} covered twice", graph.coords[c]));
        }
        hit[c] = true;
    }
    for (i, h) in hit.iter().enumerate() {
        if !h {
            report.violations.push(format!("coordinate {} not covered", graph.coords[i]));
        }
    }
    report.vertices_matched = hit.iter().filter(|&&h| h).count();

    let mut projected = BTreeSet::new();
    for orbit in amap.map.edges() {
        let (u, v) = (cusps[orbit[0]], cusps[orbit[1]]);
        let e = (u.min(v), u.max(v));
        if !graph.graph.has_edge(u, v) {
            report.violations.push(format!(
                "edge orbit {:?} projects to non-adjacent {} -- {}",
                orbit, graph.coords[u], graph.coords[v]
            ));
        }
        if !projected.insert(e) {
            report.violations.push(format!(
                "two edge orbits project to {} -- {}",
                graph.coords[u], graph.coords[v]
            ));
        }
    }
    let expected: BTreeSet<(usize, usize)> = graph.graph.edges().into_iter().collect();
    for e in expected.difference(&projected) {
        report.violations.push(format!(
            "adjacency {} -- {} is not an edge orbit",
            graph.coords[e.0], graph.coords[e.1]
        ));
    }
    report.edges_matched = expected.intersection(&projected).count();
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::build_algebraic_map;

    fn hp(q: u32, n: u32) -> HeckeParams {
        HeckeParams::new(q, n).unwrap()
    }

    #[test]
    fn bring_graph() {
        let g = build_coordinate_graph(hp(4, 5)).unwrap();
        assert_eq!(g.graph.order(), 24);
        assert_eq!(g.graph.size(), 60);
        assert!(g.graph.degrees().iter().all(|&d| d == 5));
        assert!(g.graph.is_bipartite());
        assert!(g.graph.is_connected());
    }

    #[test]
    fn cube_graph_matches() {
        let g = build_coordinate_graph(hp(4, 3)).unwrap();
        assert_eq!((g.graph.order(), g.graph.size()), (8, 12));
        assert!(g.graph.is_bipartite());
        assert_eq!(g.graph.girth(), Some(4));
        assert!(g.graph.is_isomorphic(&cube_graph()));
        // the colour classes are the two kinds
        let colour = g.graph.two_colouring().unwrap();
        for (i, u) in g.coords.iter().enumerate() {
            assert_eq!(colour[i] == colour[0], u.kind == g.coords[0].kind);
        }
    }

    #[test]
    fn icosahedron_graph() {
        let g = build_coordinate_graph(hp(3, 5)).unwrap();
        assert_eq!((g.graph.order(), g.graph.size()), (12, 30));
        assert!(g.graph.degrees().iter().all(|&d| d == 5));
        assert!(!g.graph.is_bipartite());
        assert_eq!(g.graph.girth(), Some(3));
    }

    #[test]
    fn even_modulus_rejected() {
        assert!(build_coordinate_graph(hp(4, 6)).is_err());
    }

    #[test]
    fn isomorphism_negative() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!k4.is_isomorphic(&c4));
        let c4b = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]);
        assert!(c4.is_isomorphic(&c4b));
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 2)]);
        assert!(!c4.is_isomorphic(&path));
    }

    #[test]
    fn correspondence() {
        for (q, n, v, e) in [(4, 5, 24, 60), (4, 3, 8, 12), (3, 5, 12, 30), (4, 7, 48, 168), (6, 5, 24, 60)] {
            let m = build_algebraic_map(hp(q, n)).unwrap();
            let g = build_coordinate_graph(hp(q, n)).unwrap();
            let r = correspondence_check(&m, &g);
            assert!(r.ok(), "{:?}", r.violations);
            assert_eq!((r.vertices_matched, r.edges_matched), (v, e));
        }
    }
}
