use std::collections::{BTreeSet, HashSet};

use super::{num, Model, RenderConfig, Svg};
use crate::error::{Error, Result};
use crate::exact::{hecke_m, Cusp, ExactMatrix};

pub const MAX_DEPTH: usize = 12;

/// The image of the imaginary axis under some element; `a < b` structurally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Geodesic {
    pub a: Cusp,
    pub b: Cusp,
}

impl Geodesic {
    pub fn new(x: Cusp, y: Cusp) -> Self {
        if x <= y {
            Self { a: x, b: y }
        } else {
            Self { a: y, b: x }
        }
    }

    fn of(g: &ExactMatrix, m: i128) -> Self {
        Self::new(g.act(&Cusp::integer(0), m), g.act(&Cusp::Infinity, m))
    }
}

/// Distinct geodesics reached by words of length `≤ depth`, in order of discovery.
pub fn universal_geodesics(q: u32, depth: usize) -> Result<Vec<Geodesic>> {
    if depth > MAX_DEPTH {
        return Err(Error::DepthBound { depth, max: MAX_DEPTH });
    }
    let m = hecke_m(q)?;
    let moves = [ExactMatrix::s(), ExactMatrix::t(m), ExactMatrix::t(m).inv()];
    let mut seen_elems = HashSet::from([ExactMatrix::IDENTITY]);
    let mut frontier = vec![ExactMatrix::IDENTITY];
    let mut seen = BTreeSet::from([Geodesic::of(&ExactMatrix::IDENTITY, m)]);
    let mut out = vec![Geodesic::of(&ExactMatrix::IDENTITY, m)];
    for _ in 0..depth {
        let mut next = Vec::new();
        for g in &frontier {
            for x in &moves {
                let h = g.mul(x, m).projective();
                if seen_elems.insert(h) {
                    let e = Geodesic::of(&h, m);
                    if seen.insert(e) {
                        out.push(e);
                    }
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

/// Vertices of the face around the fixed point of `R = TS`: the `R`-orbit of `∞`.
pub fn principal_face(q: u32) -> Result<Vec<Cusp>> {
    let m = hecke_m(q)?;
    let r = ExactMatrix::t(m).mul(&ExactMatrix::s(), m);
    let mut out = vec![Cusp::Infinity];
    let mut x = r.act(&Cusp::Infinity, m);
    while x != Cusp::Infinity {
        out.push(x);
        x = r.act(&x, m);
    }
    Ok(out)
}

fn face_label(c: &Cusp, q: u32) -> String {
    let root = match q {
        4 => "√2",
        6 => "√3",
        _ => "",
    };
    match *c {
        Cusp::Infinity => "∞".into(),
        Cusp::Finite { rat, irr: 0, den } => format!("{rat}/{den}"),
        Cusp::Finite { rat: 0, irr, den } if root.is_empty() => format!("{irr}/{den}"),
        Cusp::Finite { rat: 0, irr, den } => {
            // irr√m/den, written as 1/(k√m) when den = irr·m.
            let m: i128 = if q == 4 { 2 } else { 3 };
            if den == irr * m {
                format!("1/{root}")
            } else if irr == 1 {
                format!("{root}/{den}")
            } else {
                format!("{irr}{root}/{den}")
            }
        }
        c => c.to_string(),
    }
}

pub fn render_universal(q: u32, cfg: &RenderConfig) -> Result<String> {
    let m = hecke_m(q)?;
    let geodesics = universal_geodesics(q, cfg.depth)?;
    let size = cfg.size;
    let title = format!("Universal {q}-gonal tessellation, depth {}", cfg.depth);
    let height = match cfg.model {
        Model::Disk => size,
        Model::HalfPlane => (cfg.y_max * size / (cfg.x_max - cfg.x_min)).min(size) + 10.0,
    };
    let mut svg = Svg::new(size, height, &title);
    let sw = num(cfg.stroke_width);
    let mut labels = Vec::new();

    match cfg.model {
        Model::Disk => {
            let c = size / 2.0;
            let rad = size / 2.0 - 40.0;
            let to_screen = |(u, v): (f64, f64)| (c + rad * u, c - rad * v);
            svg.raw(&format!(
                "<circle class=\"boundary\" cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{sw}\"/>",
                num(c),
                num(c),
                num(rad)
            ));
            svg.raw("<g class=\"geodesics\" fill=\"none\" stroke=\"#1f4e79\">");
            for g in &geodesics {
                let p = disk_point(&g.a, m);
                let r = disk_point(&g.b, m);
                let (x1, y1) = to_screen(p);
                let (x2, y2) = to_screen(r);
                let cross = p.0 * r.1 - p.1 * r.0;
                let dot = p.0 * r.0 + p.1 * r.1;
                let d = if cross.abs() < 1e-12 {
                    format!("M {} {} L {} {}", num(x1), num(y1), num(x2), num(y2))
                } else {
                    // circle orthogonal to the boundary through p and r
                    let half = ((1.0 - dot) / (1.0 + dot)).sqrt();
                    let sweep = if cross > 0.0 { 1 } else { 0 };
                    let ar = num(rad * half);
                    format!("M {} {} A {ar} {ar} 0 0 {sweep} {} {}", num(x1), num(y1), num(x2), num(y2))
                };
                svg.raw(&format!("<path d=\"{d}\" stroke-width=\"{sw}\"/>"));
            }
            svg.raw("</g>");
            if cfg.label_face {
                for v in principal_face(q)? {
                    let (u, w) = disk_point(&v, m);
                    let (x, y) = to_screen((u * 1.06, w * 1.06));
                    labels.push((x, y, face_label(&v, q)));
                }
            }
        }
        Model::HalfPlane => {
            let scale = size / (cfg.x_max - cfg.x_min);
            let sx = |x: f64| (x - cfg.x_min) * scale;
            let base = height - 30.0;
            svg.raw(&format!(
                "<line class=\"boundary\" x1=\"0.000\" y1=\"{b}\" x2=\"{}\" y2=\"{b}\" stroke=\"black\" stroke-width=\"{sw}\"/>",
                num(size),
                b = num(base)
            ));
            svg.raw("<g class=\"geodesics\" fill=\"none\" stroke=\"#1f4e79\">");
            for g in &geodesics {
                let d = match (g.a, g.b) {
                    (x, Cusp::Infinity) | (Cusp::Infinity, x) => {
                        let x = num(sx(x.to_f64(m)));
                        format!("M {x} {} L {x} 0.000", num(base))
                    }
                    (x, y) => {
                        let (x, y) = (x.to_f64(m), y.to_f64(m));
                        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
                        let r = num((hi - lo) / 2.0 * scale);
                        format!("M {} {b} A {r} {r} 0 0 1 {} {b}", num(sx(lo)), num(sx(hi)), b = num(base))
                    }
                };
                svg.raw(&format!("<path d=\"{d}\" stroke-width=\"{sw}\"/>"));
            }
            svg.raw("</g>");
            if cfg.label_face {
                for v in principal_face(q)? {
                    let (x, y) = match v {
                        Cusp::Infinity => (size / 2.0, 12.0),
                        v => (sx(v.to_f64(m)), base + 12.0),
                    };
                    labels.push((x, y, face_label(&v, q)));
                }
            }
        }
    }

    if !labels.is_empty() {
        svg.raw("<g class=\"face-labels\" fill=\"#a00000\">");
        for (x, y, l) in labels {
            svg.text("vertex", x, y, 14.0, &l);
        }
        svg.raw("</g>");
    }
    Ok(svg.finish())
}

/// Boundary point of the disk for a cusp, via `w = (z - i) / (z + i)`.
fn disk_point(c: &Cusp, m: i128) -> (f64, f64) {
    match c {
        Cusp::Infinity => (1.0, 0.0),
        c => {
            let x = c.to_f64(m);
            let d = x * x + 1.0;
            ((x * x - 1.0) / d, -2.0 * x / d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::QuadInt;

    fn frac(num: QuadInt, den: QuadInt) -> Cusp {
        Cusp::ratio(num, den, 2)
    }

    #[test]
    fn depth_zero_is_the_axis() {
        let g = universal_geodesics(4, 0).unwrap();
        assert_eq!(g, vec![Geodesic::new(Cusp::integer(0), Cusp::Infinity)]);
    }

    #[test]
    fn principal_face_for_q4() {
        let face = principal_face(4).unwrap();
        let inv_root2 = frac(QuadInt::ONE, QuadInt::new(0, 1));
        let root2 = frac(QuadInt::new(0, 1), QuadInt::ONE);
        assert_eq!(face, vec![Cusp::Infinity, root2, inv_root2, Cusp::integer(0)]);
        assert_eq!(principal_face(3).unwrap().len(), 3);
        assert_eq!(principal_face(6).unwrap().len(), 6);
    }

    #[test]
    fn face_vertices_at_depth_two_and_sides_at_three() {
        let face = principal_face(4).unwrap();
        let at2 = universal_geodesics(4, 2).unwrap();
        let ends: BTreeSet<Cusp> = at2.iter().flat_map(|g| [g.a, g.b]).collect();
        assert!(face.iter().all(|v| ends.contains(v)));
        let sides: Vec<Geodesic> = (0..4).map(|i| Geodesic::new(face[i], face[(i + 1) % 4])).collect();
        assert!(!sides.iter().all(|s| at2.contains(s)));
        let at3 = universal_geodesics(4, 3).unwrap();
        assert!(sides.iter().all(|s| at3.contains(s)));
    }

    #[test]
    fn counts_grow_and_are_deduplicated() {
        for q in [3, 4, 6] {
            let mut last = 0;
            for d in 0..=7 {
                let g = universal_geodesics(q, d).unwrap();
                assert!(g.len() > last, "q={q} d={d}");
                last = g.len();
                let set: BTreeSet<_> = g.iter().collect();
                assert_eq!(set.len(), g.len());
                assert!(g.iter().all(|e| e.a != e.b));
            }
        }
    }

    #[test]
    fn depth_bound() {
        assert!(matches!(universal_geodesics(4, 13), Err(Error::DepthBound { depth: 13, max: 12 })));
        assert!(universal_geodesics(5, 1).is_err());
    }

    #[test]
    fn face_labels() {
        let face = principal_face(4).unwrap();
        let l: Vec<String> = face.iter().map(|c| face_label(c, 4)).collect();
        assert_eq!(l, ["∞", "√2/1", "1/√2", "0/1"]);
    }
}
