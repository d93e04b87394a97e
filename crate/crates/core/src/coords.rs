//! Hecke–Farey coordinates modulo `n`.
//!
//! The cusps of `H_q` are the images of `∞`. Modulo `n` an image is recorded
//! by the first column of the matrix: even elements send `∞` to `a/(c√m)`
//! (kind A), odd ones to `b√m/d` (kind B). For the modular group there is only
//! one kind and the value is `a/c`. Coordinates are identified up to a
//! simultaneous sign change of numerator and denominator.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::group::{parity, HeckeParams, Parity};
use crate::ring::{ProjMatrix, RingElem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    /// `a / (c√m)`, or `a / c` when `q = 3`.
    A,
    /// `b√m / d`.
    B,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::A => "A",
            Kind::B => "B",
        })
    }
}

/// A normalized Hecke–Farey coordinate.
///
/// `(num, den)` is the lexicographic minimum of `(num, den)` and
/// `(-num, -den)` mod `n`, and `gcd(num, den, n) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HFCoord {
    pub kind: Kind,
    pub num: u32,
    pub den: u32,
}

impl HFCoord {
    pub fn is_pole(&self) -> bool {
        self.den == 0
    }

    /// Human-readable value such as `2/(1√2)` or `1√2/3`.
    pub fn fraction(&self, p: &HeckeParams) -> String {
        let root = match p.m() {
            2 => "√2",
            3 => "√3",
            _ => "",
        };
        match (self.kind, root) {
            (_, "") => format!("{}/{}", self.num, self.den),
            (Kind::A, r) => format!("{}/({}{})", self.num, self.den, r),
            (Kind::B, r) => format!("{}{}/{}", self.num, r, self.den),
        }
    }
}

/// Raw `kind:num/den`, e.g. `B:2/0`.
impl fmt::Display for HFCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}/{}", self.kind, self.num, self.den)
    }
}

/// Unnormalized `kind:num/den`; pass the result through [`normalize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RawCoord {
    pub kind: Kind,
    pub num: i64,
    pub den: i64,
}

impl FromStr for RawCoord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownLabel(s.to_string());
        let (kind, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let kind = match kind.trim() {
            "A" | "a" => Kind::A,
            "B" | "b" => Kind::B,
            _ => return Err(bad()),
        };
        let (num, den) = rest.split_once('/').ok_or_else(bad)?;
        let num = num.trim().parse().map_err(|_| bad())?;
        let den = den.trim().parse().map_err(|_| bad())?;
        Ok(RawCoord { kind, num, den })
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn normalize(kind: Kind, a: i64, c: i64, p: &HeckeParams) -> Result<HFCoord> {
    if !p.has_parity() && kind == Kind::B {
        return Err(Error::InvalidParams("the modular group has only kind A coordinates".into()));
    }
    let ring = p.ring();
    let (a, c) = (ring.reduce(a), ring.reduce(c));
    if gcd(gcd(a as u64, c as u64), p.n() as u64) != 1 {
        return Err(Error::NotCoprime { a: a as i64, c: c as i64, n: p.n() });
    }
    let neg = (ring.reduce(-(a as i64)), ring.reduce(-(c as i64)));
    let (num, den) = if neg < (a, c) { neg } else { (a, c) };
    Ok(HFCoord { kind, num, den })
}

fn require_odd(p: &HeckeParams) -> Result<()> {
    if p.n().is_multiple_of(2) {
        return Err(Error::EvenModulus(p.n()));
    }
    Ok(())
}

/// All coordinates mod `n`, sorted. Odd `n` only.
pub fn enumerate_coords(p: &HeckeParams) -> Result<Vec<HFCoord>> {
    require_odd(p)?;
    let kinds: &[Kind] = if p.has_parity() { &[Kind::A, Kind::B] } else { &[Kind::A] };
    let n = p.n() as i64;
    let mut out = Vec::new();
    for &kind in kinds {
        for a in 0..n {
            for c in 0..n {
                if let Ok(u) = normalize(kind, a, c, p) {
                    out.push(u);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Adjacency: `a·d − m·b·c ≡ ±1` between an A-coordinate `(a, c)` and a
/// B-coordinate `(b, d)`; `a·d − b·c ≡ ±1` between two fractions when `q = 3`.
pub fn adjacent(u: &HFCoord, v: &HFCoord, p: &HeckeParams) -> bool {
    let ring = p.ring();
    let det = if p.has_parity() {
        let (x, y) = match (u.kind, v.kind) {
            (Kind::A, Kind::B) => (u, v),
            (Kind::B, Kind::A) => (v, u),
            _ => return false,
        };
        let (a, c) = (x.num as i64, x.den as i64);
        let (b, d) = (y.num as i64, y.den as i64);
        ring.reduce(a * d - p.m() as i64 * b * c)
    } else {
        ring.reduce(u.num as i64 * v.den as i64 - v.num as i64 * u.den as i64)
    };
    det == 1 || det == p.n() - 1
}

/// Reads a homogeneous column `(x, y)` back as a coordinate.
fn column_to_coord(x: RingElem, y: RingElem, p: &HeckeParams) -> Result<HFCoord> {
    if !p.has_parity() {
        return normalize(Kind::A, x.rat as i64, y.rat as i64, p);
    }
    if x.irr == 0 && y.rat == 0 {
        normalize(Kind::A, x.rat as i64, y.irr as i64, p)
    } else if x.rat == 0 && y.irr == 0 {
        normalize(Kind::B, x.irr as i64, y.rat as i64, p)
    } else {
        Err(Error::CorruptElement(format!("column ({x}, {y})")))
    }
}

fn coord_to_column(u: &HFCoord, p: &HeckeParams) -> (RingElem, RingElem) {
    let ring = p.ring();
    let (num, den) = (u.num as i64, u.den as i64);
    match u.kind {
        Kind::A => (ring.elem(num, 0), ring.elem(0, den)),
        Kind::B => (ring.elem(0, num), ring.elem(den, 0)),
    }
}

/// The image of `∞` under `g`: its first column read as a coordinate.
pub fn cusp_of(g: &ProjMatrix, p: &HeckeParams) -> Result<HFCoord> {
    if p.has_parity() {
        match parity(g, p)? {
            Parity::Even => normalize(Kind::A, g.e11().rat as i64, g.e21().irr as i64, p),
            Parity::Odd => normalize(Kind::B, g.e11().irr as i64, g.e21().rat as i64, p),
        }
    } else {
        normalize(Kind::A, g.e11().rat as i64, g.e21().rat as i64, p)
    }
}

/// Möbius action of `g` on a coordinate.
pub fn apply(g: &ProjMatrix, u: &HFCoord, p: &HeckeParams) -> Result<HFCoord> {
    let ring = p.ring();
    let (x, y) = coord_to_column(u, p);
    let gx = ring.add(ring.mul(g.e11(), x), ring.mul(g.e12(), y));
    let gy = ring.add(ring.mul(g.e21(), x), ring.mul(g.e22(), y));
    column_to_coord(gx, gy, p)
}

/// Coordinates with denominator zero.
pub fn poles(p: &HeckeParams) -> Result<Vec<HFCoord>> {
    Ok(enumerate_coords(p)?.into_iter().filter(HFCoord::is_pole).collect())
}

pub fn is_pole(u: &HFCoord) -> bool {
    u.is_pole()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generators, FiniteHeckeGroup};

    fn hp(q: u32, n: u32) -> HeckeParams {
        HeckeParams::new(q, n).unwrap()
    }

    fn c(kind: Kind, a: i64, d: i64, p: &HeckeParams) -> HFCoord {
        normalize(kind, a, d, p).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let p = hp(4, 5);
        assert_eq!(c(Kind::B, 4, 2, &p), HFCoord { kind: Kind::B, num: 1, den: 3 });
        assert_eq!(c(Kind::A, 1, 0, &p), HFCoord { kind: Kind::A, num: 1, den: 0 });
        let cube = hp(4, 3);
        assert_eq!(c(Kind::B, 1, 2, &cube), c(Kind::B, 2, 1, &cube));
        assert_eq!(c(Kind::B, 2, 1, &cube), HFCoord { kind: Kind::B, num: 1, den: 2 });
        assert!(matches!(normalize(Kind::A, 0, 0, &p), Err(Error::NotCoprime { .. })));
        assert!(matches!(normalize(Kind::A, 3, 0, &hp(4, 9)), Err(Error::NotCoprime { .. })));
        assert!(normalize(Kind::B, 1, 0, &hp(3, 5)).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_coords(&hp(4, 5)).unwrap().len(), 24);
        assert_eq!(enumerate_coords(&hp(4, 3)).unwrap().len(), 8);
        assert_eq!(enumerate_coords(&hp(3, 5)).unwrap().len(), 12);
        assert_eq!(enumerate_coords(&hp(4, 6)), Err(Error::EvenModulus(6)));
        for (q, n) in [(4, 7), (6, 5), (3, 7), (4, 9)] {
            let p = hp(q, n);
            let g = FiniteHeckeGroup::enumerate(p).unwrap();
            assert_eq!(enumerate_coords(&p).unwrap().len(), g.order() / n as usize, "q={q} n={n}");
        }
    }

    #[test]
    fn adjacency_examples() {
        let p = hp(4, 5);
        let h2 = c(Kind::B, 2, 0, &p);
        let e1 = c(Kind::A, 2, 1, &p);
        let a1 = c(Kind::A, 1, 0, &p);
        let a2 = c(Kind::B, 0, 1, &p);
        assert!(adjacent(&h2, &e1, &p));
        assert!(adjacent(&e1, &h2, &p));
        assert!(adjacent(&a1, &a2, &p));
        assert!(!adjacent(&h2, &h2, &p));
        let c2 = c(Kind::B, 1, 0, &p);
        assert!(!adjacent(&h2, &c2, &p));
    }

    #[test]
    fn cusp_examples() {
        let p = hp(4, 5);
        let ring = p.ring();
        let g = generators(&p);
        assert_eq!(cusp_of(&ProjMatrix::identity(&ring), &p).unwrap(), c(Kind::A, 1, 0, &p));
        assert_eq!(cusp_of(&g.s, &p).unwrap(), c(Kind::B, 0, 1, &p));
        assert_eq!(cusp_of(&g.r, &p).unwrap(), c(Kind::B, 1, 1, &p));
        let q3 = hp(3, 5);
        assert_eq!(cusp_of(&generators(&q3).s, &q3).unwrap(), c(Kind::A, 0, 1, &q3));
    }

    #[test]
    fn translation_examples() {
        let p = hp(4, 5);
        let t = generators(&p).t;
        let e1 = c(Kind::A, 2, 1, &p);
        let g1 = c(Kind::A, 4, 1, &p);
        assert_eq!(apply(&t, &e1, &p).unwrap(), g1);
        let h2 = c(Kind::B, 2, 0, &p);
        assert_eq!(apply(&t, &h2, &p).unwrap(), h2);
        let f2 = c(Kind::B, 1, 3, &p);
        let e2 = c(Kind::B, 1, 2, &p);
        assert_eq!(apply(&t, &f2, &p).unwrap(), e2);
    }

    #[test]
    fn s_swaps_kinds() {
        let p = hp(4, 5);
        let s = generators(&p).s;
        for u in enumerate_coords(&p).unwrap() {
            let v = apply(&s, &u, &p).unwrap();
            assert_ne!(u.kind, v.kind);
            let expected = match u.kind {
                Kind::A => c(Kind::B, u.den as i64, -(u.num as i64), &p),
                Kind::B => c(Kind::A, u.den as i64, -(u.num as i64), &p),
            };
            assert_eq!(v, expected);
        }
    }

    #[test]
    fn pole_lists() {
        let p = hp(4, 5);
        let expected = vec![
            c(Kind::A, 1, 0, &p),
            c(Kind::A, 2, 0, &p),
            c(Kind::B, 1, 0, &p),
            c(Kind::B, 2, 0, &p),
        ];
        assert_eq!(poles(&p).unwrap(), expected);
        let q3 = hp(3, 5);
        assert_eq!(poles(&q3).unwrap(), vec![c(Kind::A, 1, 0, &q3), c(Kind::A, 2, 0, &q3)]);
        let cube = hp(4, 3);
        assert_eq!(poles(&cube).unwrap(), vec![c(Kind::A, 1, 0, &cube), c(Kind::B, 1, 0, &cube)]);
    }

    #[test]
    fn raw_parse_roundtrip() {
        let raw: RawCoord = "B:4/2".parse().unwrap();
        assert_eq!(raw, RawCoord { kind: Kind::B, num: 4, den: 2 });
        let p = hp(4, 5);
        let u = normalize(raw.kind, raw.num, raw.den, &p).unwrap();
        assert_eq!(u.to_string(), "B:1/3");
        assert!("C:1/2".parse::<RawCoord>().is_err());
        assert!("A:1".parse::<RawCoord>().is_err());
        assert_eq!(u.fraction(&p), "1√2/3");
        assert_eq!(c(Kind::A, 2, 1, &p).fraction(&p), "2/(1√2)");
    }
}
