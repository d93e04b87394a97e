//! Combinatorial fundamental domain for `H_q(n)` assembled from coset tiles.
//!
//! The fundamental region of `H_q` is a quadrilateral with a cusp at `∞`:
//! sides `L` and `R` (the lines `Re z = ∓λ/2`, with `T(L) = R`) and the two
//! halves `A₁`, `A₂` of the unit-circle arc (with `S(A₂) = A₁`). Corners are
//! `∞`, `ρ_L = L ∩ A₁`, `i = A₁ ∩ A₂` and `ρ_R = A₂ ∩ R`.
//!
//! One tile per group element; tile `g` meets tile `g·T` along `R_g = (gT)L`
//! and tile `g·S` along `A₁_g = (gS)A₂`. A spanning tree of these gluings
//! assembles a polygon; each remaining gluing pairs two of its boundary sides
//! by `lift(g)·X·lift(gX)⁻¹`, which must be `≡ ±I (mod n)`. Those matrices
//! are computed exactly over `Z[√m]`, independent of the residue arithmetic.

use std::collections::VecDeque;

use crate::error::Result;
use crate::exact::{ExactMatrix, QuadInt};
use crate::group::{FiniteHeckeGroup, HeckeParams};

fn reduce(g: &ExactMatrix, n: i128, m: i128) -> [(i128, i128); 4] {
    g.e.map(|x| {
        if m == 1 {
            ((x.a + x.b).rem_euclid(n), 0)
        } else {
            (x.a.rem_euclid(n), x.b.rem_euclid(n))
        }
    })
}

fn is_plus_minus_identity_mod(g: &ExactMatrix, n: i128, m: i128) -> bool {
    let r = reduce(g, n, m);
    r == [(1, 0), (0, 0), (0, 0), (1, 0)] || r == [(n - 1, 0), (0, 0), (0, 0), (n - 1, 0)]
}

/// Result of assembling the coset domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainReport {
    pub tiles: usize,
    pub tree_gluings: usize,
    /// Side pairs left on the boundary of the assembled polygon.
    pub boundary_pairs: usize,
    /// Boundary pairing matrices that are `≡ ±I (mod n)`.
    pub congruent_pairings: usize,
    pub cusp_classes: usize,
    pub order_two_classes: usize,
    pub order_q_classes: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
    pub genus: i64,
    pub violations: Vec<String>,
}

impl DomainReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty() && self.congruent_pairings == self.boundary_pairs
    }
}

const INF: usize = 0;
const RHO_L: usize = 1;
const I_PT: usize = 2;
const RHO_R: usize = 3;

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        self.0[x] = r;
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub fn coset_domain_check(p: HeckeParams) -> Result<DomainReport> {
    let group = FiniteHeckeGroup::enumerate(p)?;
    Ok(coset_domain_report(&group))
}

pub fn coset_domain_report(group: &FiniteHeckeGroup) -> DomainReport {
    let p = group.params();
    let (n, m) = (p.n() as i128, p.m() as i128);
    let order = group.order();
    let ring = group.ring();
    let mut violations = Vec::new();

    // Spanning tree of the tile adjacency, with exact lifts along tree paths.
    let t = ExactMatrix::t(m);
    let t_inv = t.inv();
    let s = ExactMatrix::s();
    let t_inv_idx = group.inv(group.gen_t());
    let mut lift: Vec<Option<ExactMatrix>> = vec![None; order];
    let mut tree = vec![false; 2 * order]; // gluing 2g = (g, gT), 2g+1 = (g, gS)
    lift[0] = Some(ExactMatrix::IDENTITY);
    let mut queue = VecDeque::from([0usize]);
    while let Some(g) = queue.pop_front() {
        let lg = lift[g].expect("queued tiles are lifted");
        let moves = [
            (group.times_t(g), t, 2 * g),
            (group.mul(g, t_inv_idx), t_inv, 2 * group.mul(g, t_inv_idx)),
            (group.times_s(g), s, 2 * g + 1),
        ];
        for (h, x, gluing) in moves {
            if lift[h].is_none() {
                lift[h] = Some(lg.mul(&x, m));
                tree[gluing] = true;
                queue.push_back(h);
            }
        }
    }
    let lift: Vec<ExactMatrix> = lift.into_iter().map(|l| l.expect("group is connected")).collect();

    for (i, l) in lift.iter().enumerate() {
        let det = l.det(m);
        let det_ok = if m == 1 { det.a + det.b == 1 } else { det == QuadInt::ONE };
        if !det_ok {
            violations.push(format!("lift of element {i} has determinant {det:?}"));
        }
        let reduced = reduce(l, n, m).map(|(a, b)| ring.elem(a as i64, b as i64));
        let back = crate::ring::ProjMatrix::from_entries(reduced, &ring);
        if group.index_of(&back) != Some(i) {
            violations.push(format!("lift of element {i} reduces to a different element"));
        }
    }

    let mut boundary_pairs = 0;
    let mut congruent_pairings = 0;
    let mut dsu = Dsu((0..4 * order).collect());
    let corner = |g: usize, c: usize| 4 * g + c;
    for g in 0..order {
        let gt = group.times_t(g);
        let gs = group.times_s(g);
        dsu.union(corner(g, INF), corner(gt, INF));
        dsu.union(corner(g, RHO_R), corner(gt, RHO_L));
        dsu.union(corner(g, I_PT), corner(gs, I_PT));
        dsu.union(corner(g, RHO_L), corner(gs, RHO_R));
        for (h, x, gluing) in [(gt, t, 2 * g), (gs, s, 2 * g + 1)] {
            if tree[gluing] {
                continue;
            }
            boundary_pairs += 1;
            let gamma = lift[g].mul(&x, m).mul(&lift[h].inv(), m);
            if is_plus_minus_identity_mod(&gamma, n, m) {
                congruent_pairings += 1;
            } else {
                violations.push(format!("pairing across gluing {gluing} is not congruent to ±I"));
            }
        }
    }

    let mut classes = [0usize; 4];
    let mut seen = vec![false; 4 * order];
    for g in 0..order {
        for c in 0..4 {
            let r = dsu.find(corner(g, c));
            if !seen[r] {
                seen[r] = true;
                classes[c] += 1;
            }
        }
    }
    let cusp_classes = classes[INF];
    let order_two_classes = classes[I_PT];
    let order_q_classes = classes[RHO_L] + classes[RHO_R];
    let vertices = cusp_classes + order_two_classes + order_q_classes;
    let edges = 2 * order;
    let faces = order;
    let euler = vertices as i64 - edges as i64 + faces as i64;
    DomainReport {
        tiles: order,
        tree_gluings: tree.iter().filter(|&&b| b).count(),
        boundary_pairs,
        congruent_pairings,
        cusp_classes,
        order_two_classes,
        order_q_classes,
        vertices,
        edges,
        faces,
        euler,
        genus: (2 - euler) / 2,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::build_algebraic_map;

    fn hp(q: u32, n: u32) -> HeckeParams {
        HeckeParams::new(q, n).unwrap()
    }

    #[test]
    fn bring_domain() {
        let r = coset_domain_check(hp(4, 5)).unwrap();
        assert!(r.ok(), "{:?}", r.violations);
        assert_eq!(r.euler, -6);
        assert_eq!(r.genus, 4);
        assert_eq!((r.cusp_classes, r.order_two_classes, r.order_q_classes), (24, 60, 30));
        assert_eq!(r.tree_gluings, 119);
        assert_eq!(r.boundary_pairs, 121);
    }

    #[test]
    fn spheres() {
        assert_eq!(coset_domain_check(hp(4, 3)).unwrap().euler, 2);
        assert_eq!(coset_domain_check(hp(3, 5)).unwrap().euler, 2);
    }

    #[test]
    fn matches_map_euler_characteristic() {
        for (q, n) in [(3, 3), (3, 5), (3, 7), (4, 3), (4, 5), (4, 7), (6, 5)] {
            let r = coset_domain_check(hp(q, n)).unwrap();
            assert!(r.ok(), "q={q} n={n}: {:?}", r.violations);
            let m = build_algebraic_map(hp(q, n)).unwrap();
            assert_eq!(r.euler, m.map.euler_characteristic(), "q={q} n={n}");
        }
    }
}
