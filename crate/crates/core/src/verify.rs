//! The ten acceptance checks behind `hfmap verify-all`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::coords::{adjacent, apply, enumerate_coords, HFCoord};
use crate::error::{Error, Result};
use crate::graph::{build_coordinate_graph, correspondence_check, cube_graph};
use crate::group::{generators, parson_index, FiniteHeckeGroup, HeckeParams};
use crate::map::{build_algebraic_map_bounded, is_isomorphic, permutation_model_map, MapInvariants};
use crate::names::NameTable;
use crate::perm::s5_oracle;
use crate::polygon::{
    boundary_from_circuit, coset_domain_report, pairing_rule_check, rule_matchings, side_label_analysis,
    translation_orbit, validate_circuit, vertex_classes, Alignment, BoundarySequence, Circuit, PairingTable,
    SideLabelTable,
};
use crate::render::{
    principal_face, render_polygon, render_quotient, render_universal, universal_geodesics, Geodesic, PolygonLayout,
    QuotientFormat, RenderConfig,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Inputs that may be swapped for files on the command line.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub pairing: PairingTable,
    pub circuit: Circuit,
    pub side_labels: SideLabelTable,
    pub max_group: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            pairing: PairingTable::paper(),
            circuit: Circuit::paper(),
            side_labels: SideLabelTable::paper(),
            max_group: crate::group::DEFAULT_MAX_GROUP,
        }
    }
}

fn hp(q: u32, n: u32) -> HeckeParams {
    HeckeParams::new(q, n).expect("fixed parameters are valid")
}

fn names(p: &HeckeParams) -> NameTable {
    NameTable::for_params(p).expect("table exists for the fixed parameters")
}

/// Accumulates failed conditions for one check.
struct Probe {
    failures: Vec<String>,
}

impl Probe {
    fn new() -> Self {
        Self { failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, id: u32, name: &'static str, summary: String) -> CheckResult {
        let passed = self.failures.is_empty();
        let detail = if passed { summary } else { self.failures.join("; ") };
        CheckResult { id, name, passed, detail }
    }
}

fn attempt(id: u32, name: &'static str, f: impl FnOnce(&mut Probe) -> Result<String>) -> CheckResult {
    let mut probe = Probe::new();
    match f(&mut probe) {
        Ok(summary) => probe.finish(id, name, summary),
        Err(e) => CheckResult { id, name, passed: false, detail: format!("error: {e}") },
    }
}

fn check_index(o: &VerifyOptions) -> CheckResult {
    attempt(1, "index formula", |pr| {
        pr.check(parson_index(&hp(4, 5)) == 120, || "μ₄(5) ≠ 120".into());
        pr.check(parson_index(&hp(4, 3)) == 24, || "μ₄(3) ≠ 24".into());
        for (q, n) in [(3, 5), (4, 3), (4, 5), (4, 7), (6, 5)] {
            let p = hp(q, n);
            let order = FiniteHeckeGroup::enumerate_bounded(p, o.max_group)?.order() as u64;
            let formula = parson_index(&p);
            pr.check(order == formula, || format!("({q},{n}): BFS {order} vs formula {formula}"));
        }
        Ok("μ₄(5)=120, μ₄(3)=24, BFS agrees on 5 pairs".into())
    })
}

fn map_for(p: HeckeParams, o: &VerifyOptions) -> Result<(crate::map::AlgebraicMap, MapInvariants)> {
    let m = build_algebraic_map_bounded(p, o.max_group)?;
    let inv = m.invariants();
    Ok((m, inv))
}

fn check_bring(o: &VerifyOptions) -> CheckResult {
    attempt(2, "Bring's map", |pr| {
        let p = hp(4, 5);
        let (m, i) = map_for(p, o)?;
        let got = (i.darts, i.vertices, i.edges, i.faces, i.genus);
        pr.check(got == (120, 24, 60, 30, 4), || format!("(darts,V,E,F,g) = {got:?}"));
        pr.check(i.vertex_valency == Some(5), || format!("valency {:?}", i.vertex_valency));
        pr.check(i.face_size == Some(4), || format!("face size {:?}", i.face_size));
        let g = build_coordinate_graph(p)?;
        let table: BTreeSet<HFCoord> = names(&p).entries().iter().map(|(_, c)| *c).collect();
        pr.check(table.len() == 24 && table.iter().copied().eq(g.coords.iter().copied()), || {
            "Table 1 does not list exactly the enumerated coordinates".into()
        });
        let rep = correspondence_check(&m, &g);
        pr.check(rep.ok() && rep.vertices_matched == 24, || format!("correspondence: {:?}", rep.violations));
        Ok("120 darts, V=24 E=60 F=30, type {5,4}, genus 4; vertices ↔ Table 1".into())
    })
}

fn check_cube(o: &VerifyOptions) -> CheckResult {
    attempt(3, "cube", |pr| {
        let p = hp(4, 3);
        let (_, i) = map_for(p, o)?;
        let got = (i.vertices, i.edges, i.faces, i.genus);
        pr.check(got == (8, 12, 6, 0), || format!("(V,E,F,g) = {got:?}"));
        let g = build_coordinate_graph(p)?;
        let listed: BTreeSet<HFCoord> = names(&p).entries().iter().map(|(_, c)| *c).collect();
        pr.check(listed.len() == 8 && listed.iter().copied().eq(g.coords.iter().copied()), || {
            "fraction list differs from enumeration".into()
        });
        pr.check(g.graph.is_isomorphic(&cube_graph()), || "coordinate graph is not the cube".into());
        Ok("V=8 E=12 F=6 genus 0; coordinate graph ≅ cube".into())
    })
}

fn check_icosahedron(o: &VerifyOptions) -> CheckResult {
    attempt(4, "icosahedron", |pr| {
        let p = hp(3, 5);
        let (_, i) = map_for(p, o)?;
        let got = (i.vertices, i.edges, i.faces, i.genus);
        pr.check(got == (12, 30, 20, 0), || format!("(V,E,F,g) = {got:?}"));
        let g = build_coordinate_graph(p)?;
        let listed: BTreeSet<HFCoord> = names(&p).entries().iter().map(|(_, c)| *c).collect();
        pr.check(listed.iter().copied().eq(g.coords.iter().copied()), || "fraction list differs".into());
        pr.check(g.graph.order() == 12 && g.graph.size() == 30, || {
            format!("adjacency graph has {} vertices, {} edges", g.graph.order(), g.graph.size())
        });
        pr.check(g.graph.degrees().iter().all(|&d| d == 5), || "not 5-regular".into());
        Ok("V=12 E=30 F=20 genus 0 from the fraction list".into())
    })
}

fn check_oracle(o: &VerifyOptions) -> CheckResult {
    attempt(5, "oracle equivalence", |pr| {
        let g = s5_oracle();
        pr.check(g.order() == 120, || format!("|G| = {}", g.order()));
        let orders = (g.x.order(), g.y.order(), g.z.order());
        pr.check(orders == (2, 5, 4), || format!("generator orders {orders:?}"));
        let (m, _) = map_for(hp(4, 5), o)?;
        pr.check(is_isomorphic(&permutation_model_map(), &m.map), || "maps are not isomorphic".into());
        Ok("S₅ model of order 120 ≅ matrix model".into())
    })
}

fn check_circuit(o: &VerifyOptions) -> CheckResult {
    attempt(6, "circuit and boundary", |pr| {
        let p = hp(4, 5);
        let t = names(&p);
        pr.check(validate_circuit(&o.circuit, &p), || "circuit fails adjacency".into());
        let b = boundary_from_circuit(&o.circuit, &p)?;
        pr.check(b.len() == 60, || format!("{} slots", b.len()));
        let ms = b.pole_multiset();
        let want = [("H2", 5), ("C2", 5), ("B1", 10)];
        let ok = ms.len() == 3 && want.iter().all(|(n, k)| t.lookup(n).and_then(|u| ms.get(&u)) == Some(k));
        pr.check(ok, || format!("pole multiset {ms:?}"));
        let tr = generators(&p).t;
        for (a, b) in [("E1", "G1"), ("F2", "E2"), ("H2", "H2")] {
            let u = t.lookup(a).expect("named");
            let image = apply(&tr, &u, &p)?;
            pr.check(image == t.lookup(b).expect("named"), || format!("{a}+√2 = {}", t.label(&image)));
        }
        Ok("12-circuit valid; 60 slots; poles {H₂:5, C₂:5, B₁:10}; translations exact".into())
    })
}

fn check_pairing(o: &VerifyOptions) -> CheckResult {
    attempt(7, "pairing and genus", |pr| {
        let t = &o.pairing;
        pr.check(t.sides() == 20, || format!("{} sides", t.sides()));
        pr.check(pairing_rule_check(t), || "rule k≡2→k+3, k≡3→k+9 (mod 4) violated".into());
        let all = rule_matchings(20);
        pr.check(all.len() == 1 && all[0].normalized() == t.normalized(), || {
            format!("{} rule matchings; given table is not the unique one", all.len())
        });
        let c = vertex_classes(t);
        let odd: Vec<usize> = (1..=20).step_by(2).collect();
        let want = vec![odd, vec![2, 6, 10, 14, 18], vec![4, 8, 12, 16, 20]];
        pr.check(c.classes == want, || format!("classes {:?}", c.classes));
        let got = (c.vertices, c.edges, c.faces, c.genus);
        pr.check(got == (3, 10, 1, 4), || format!("(V,E,F,g) = {got:?}"));
        Ok("rule holds and forces the table; 3 corner classes; genus 4".into())
    })
}

fn check_table2(o: &VerifyOptions) -> CheckResult {
    attempt(8, "Table 2 structure", |pr| {
        let p = hp(4, 5);
        let t = names(&p);
        let mut labels = BTreeSet::new();
        for (seed, want) in [("F2", ["F2", "E2", "K2", "B2", "J2"]), ("K1", ["K1", "I1", "H1", "L1", "J1"])] {
            let orbit = translation_orbit(&t.lookup(seed).expect("named"), &p)?;
            let got: BTreeSet<String> = orbit.iter().map(|u| t.label(u)).collect();
            let want: BTreeSet<String> = want.iter().map(|s| s.to_string()).collect();
            pr.check(orbit.len() == 5 && got == want, || format!("orbit of {seed}: {got:?}"));
            labels.extend(orbit);
        }
        let counts = o.side_labels.label_counts();
        pr.check(o.side_labels.labels.len() == 20, || format!("{} entries", o.side_labels.labels.len()));
        pr.check(counts.keys().copied().collect::<BTreeSet<_>>() == labels, || "labels differ from the orbits".into());
        pr.check(counts.values().all(|&c| c == 2), || "some label does not occur exactly twice".into());
        Ok("two orbits of size 5 = the 10 Table 2 labels, each twice".into())
    })
}

fn check_properties(o: &VerifyOptions) -> CheckResult {
    attempt(9, "property suites", |pr| {
        for (q, n) in [(4, 3), (4, 5), (3, 5)] {
            let p = hp(q, n);
            let coords = enumerate_coords(&p)?;
            let gens = generators(&p);
            for g in [gens.s, gens.t] {
                let img: Vec<HFCoord> = coords.iter().map(|u| apply(&g, u, &p)).collect::<Result<_>>()?;
                for i in 0..coords.len() {
                    for j in 0..coords.len() {
                        if adjacent(&coords[i], &coords[j], &p) != adjacent(&img[i], &img[j], &p) {
                            pr.check(false, || format!("({q},{n}): adjacency not equivariant"));
                        }
                    }
                }
            }
        }
        for n in [3, 5, 7] {
            let g = build_coordinate_graph(hp(4, n))?;
            pr.check(g.graph.is_bipartite(), || format!("(4,{n}) coordinate graph not bipartite"));
        }
        for (q, n) in [(3, 5), (4, 3), (4, 5), (4, 7), (6, 5)] {
            let p = hp(q, n);
            let (m, _) = map_for(p, o)?;
            let rep = correspondence_check(&m, &build_coordinate_graph(p)?);
            pr.check(rep.ok(), || format!("({q},{n}) correspondence: {:?}", rep.violations));
            let d = coset_domain_report(&m.group);
            pr.check(d.ok(), || format!("({q},{n}) domain: {:?}", d.violations));
            let chi = m.map.euler_characteristic();
            pr.check(d.euler == chi, || format!("({q},{n}) domain χ {} vs map χ {chi}", d.euler));
        }
        Ok("equivariance, bipartiteness, correspondence and domain χ all hold".into())
    })
}

fn well_formed(svg: &str) -> bool {
    roxmltree::Document::parse(svg).is_ok_and(|d| d.root_element().has_tag_name("svg"))
}

fn check_rendering(o: &VerifyOptions) -> CheckResult {
    attempt(10, "rendering", |pr| {
        let face = principal_face(4)?;
        let at2 = universal_geodesics(4, 2)?;
        let ends: BTreeSet<_> = at2.iter().flat_map(|g| [g.a, g.b]).collect();
        pr.check(face.iter().all(|v| ends.contains(v)), || "principal face vertices missing at depth 2".into());
        let at3 = universal_geodesics(4, 3)?;
        let sides_present =
            (0..face.len()).all(|i| at3.contains(&Geodesic::new(face[i], face[(i + 1) % face.len()])));
        pr.check(sides_present, || "principal face sides missing at depth 3".into());
        for (q, n, v, e) in [(4, 5, 24, 60), (4, 3, 8, 12), (3, 5, 12, 30)] {
            let dot = render_quotient(hp(q, n), QuotientFormat::Dot)?;
            let nodes = dot.lines().filter(|l| l.contains("[label=")).count();
            let edges = dot.lines().filter(|l| l.contains(" -- ")).count();
            pr.check((nodes, edges) == (v, e), || format!("({q},{n}) DOT has {nodes} nodes, {edges} edges"));
        }
        let cfg = RenderConfig { depth: 4, ..RenderConfig::default() };
        let a = render_universal(4, &cfg)?;
        pr.check(well_formed(&a), || "universal SVG is not well-formed".into());
        pr.check(a == render_universal(4, &cfg)?, || "universal SVG differs between runs".into());
        let q = render_quotient(hp(4, 5), QuotientFormat::Svg)?;
        pr.check(well_formed(&q), || "quotient SVG is not well-formed".into());
        let b = boundary_from_circuit(&o.circuit, &hp(4, 5))?;
        let layout = paper_layout(&b, &o.side_labels)?;
        let poly = render_polygon(&b, &o.pairing, &layout, Some(&names(&hp(4, 5))))?;
        pr.check(well_formed(&poly), || "polygon SVG is not well-formed".into());
        Ok("principal face present; DOT (V,E) exact; SVG well-formed and reproducible".into())
    })
}

/// Places the side labels on the boundary spans: the unique designation of
/// one `F₂`/`K₁`-orbit vertex per span, aligned with `labels`.
pub fn paper_layout(b: &BoundarySequence, labels: &SideLabelTable) -> Result<PolygonLayout> {
    let p = hp(4, 5);
    let t = names(&p);
    let seeds = [t.lookup("F2").expect("named"), t.lookup("K1").expect("named")];
    let report = side_label_analysis(b, &seeds, &p)?;
    let alignment = report
        .designations
        .iter()
        .find_map(|d| report.alignments(d, labels).into_iter().next())
        .ok_or_else(|| Error::Boundary("side labels do not fit any span alignment".into()))?;
    Ok(PolygonLayout { alignment, side_labels: Some(labels.clone()), centre: t.lookup("A1") })
}

/// Fallback when the labels do not fit: sides numbered from the first span.
pub fn plain_layout() -> PolygonLayout {
    PolygonLayout::new(Alignment { offset: 0, reversed: false })
}

pub fn run_all(o: &VerifyOptions) -> Vec<CheckResult> {
    vec![
        check_index(o),
        check_bring(o),
        check_cube(o),
        check_icosahedron(o),
        check_oracle(o),
        check_circuit(o),
        check_pairing(o),
        check_table2(o),
        check_properties(o),
        check_rendering(o),
    ]
}
