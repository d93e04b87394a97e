//! Arithmetic in `Z_n[√m]` and projective 2×2 matrices over it.
//!
//! An element `rat + irr·√m` is stored with both components reduced into
//! `[0, n)`. For `m = 1` the radical is literally `1`, so the irrational part
//! is folded into the rational one and stays zero; this lets the modular group
//! (`λ₃ = 1`) run through the same code as `λ₄ = √2` and `λ₆ = √3`.

use std::fmt;

use crate::error::{Error, Result};

/// Modulus `n` and radicand `m` of the residue ring `Z_n[√m]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingParams {
    n: u32,
    m: u32,
}

impl RingParams {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParams(format!("modulus n = {n} must be at least 3")));
        }
        if !(1..=3).contains(&m) {
            return Err(Error::InvalidParams(format!("radicand m = {m} must be 1, 2 or 3")));
        }
        Ok(Self { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Reduces an arbitrary signed residue into `[0, n)`.
    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.n as i64) as u32
    }

    pub fn elem(&self, rat: i64, irr: i64) -> RingElem {
        if self.m == 1 {
            RingElem { rat: self.reduce(rat + irr), irr: 0 }
        } else {
            RingElem { rat: self.reduce(rat), irr: self.reduce(irr) }
        }
    }

    pub fn zero(&self) -> RingElem {
        RingElem { rat: 0, irr: 0 }
    }

    pub fn one(&self) -> RingElem {
        RingElem { rat: 1, irr: 0 }
    }

    /// `λ = √m` (which is `1` when `m = 1`).
    pub fn lambda(&self) -> RingElem {
        self.elem(0, 1)
    }

    pub fn add(&self, x: RingElem, y: RingElem) -> RingElem {
        self.elem(x.rat as i64 + y.rat as i64, x.irr as i64 + y.irr as i64)
    }

    pub fn sub(&self, x: RingElem, y: RingElem) -> RingElem {
        self.elem(x.rat as i64 - y.rat as i64, x.irr as i64 - y.irr as i64)
    }

    pub fn neg(&self, x: RingElem) -> RingElem {
        self.elem(-(x.rat as i64), -(x.irr as i64))
    }

    pub fn mul(&self, x: RingElem, y: RingElem) -> RingElem {
        let n = self.n as u64;
        let (a, b, c, d) = (x.rat as u64, x.irr as u64, y.rat as u64, y.irr as u64);
        let rat = (a * c + (self.m as u64) * (b * d % n)) % n;
        let irr = (a * d + b * c) % n;
        self.elem(rat as i64, irr as i64)
    }

    /// `true` when `x ≡ ±1`.
    pub fn is_unit_sign(&self, x: RingElem) -> bool {
        x.irr == 0 && (x.rat == 1 || x.rat == self.n - 1)
    }
}

/// A residue `rat + irr·√m (mod n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RingElem {
    pub rat: u32,
    pub irr: u32,
}

impl RingElem {
    pub fn is_zero(&self) -> bool {
        self.rat == 0 && self.irr == 0
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rat, self.irr) {
            (r, 0) => write!(f, "{r}"),
            (0, i) => write!(f, "{i}√"),
            (r, i) => write!(f, "{r}+{i}√"),
        }
    }
}

/// An element of `PSL(2, Z_n[√m])`: a determinant-one matrix up to global sign.
///
/// The stored representative is canonical: of `g` and `-g`, the one whose
/// component sequence `e11.rat, e11.irr, e12.rat, …, e22.irr` is
/// lexicographically smaller. Projective equality is therefore `==`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjMatrix {
    e: [RingElem; 4],
}

impl ProjMatrix {
    /// Builds a matrix from `[[e11, e12], [e21, e22]]`, rejecting determinants other than 1.
    pub fn new(entries: [RingElem; 4], p: &RingParams) -> Result<Self> {
        let g = Self::from_entries(entries, p);
        if g.det(p) != p.one() {
            return Err(Error::NotUnimodular);
        }
        Ok(g)
    }

    /// Canonicalizes without checking the determinant.
    pub fn from_entries(entries: [RingElem; 4], p: &RingParams) -> Self {
        let e = entries.map(|x| p.elem(x.rat as i64, x.irr as i64));
        let neg = e.map(|x| p.neg(x));
        if components(&neg) < components(&e) {
            Self { e: neg }
        } else {
            Self { e }
        }
    }

    /// Shorthand taking integer pairs `(rat, irr)` for each entry.
    pub fn from_ints(entries: [(i64, i64); 4], p: &RingParams) -> Result<Self> {
        Self::new(entries.map(|(r, i)| p.elem(r, i)), p)
    }

    pub fn identity(p: &RingParams) -> Self {
        Self::from_entries([p.one(), p.zero(), p.zero(), p.one()], p)
    }

    pub fn entries(&self) -> [RingElem; 4] {
        self.e
    }

    pub fn e11(&self) -> RingElem {
        self.e[0]
    }
    pub fn e12(&self) -> RingElem {
        self.e[1]
    }
    pub fn e21(&self) -> RingElem {
        self.e[2]
    }
    pub fn e22(&self) -> RingElem {
        self.e[3]
    }

    pub fn det(&self, p: &RingParams) -> RingElem {
        p.sub(p.mul(self.e[0], self.e[3]), p.mul(self.e[1], self.e[2]))
    }

    pub fn mul(&self, other: &Self, p: &RingParams) -> Self {
        let [a, b, c, d] = self.e;
        let [w, x, y, z] = other.e;
        Self::from_entries(
            [
                p.add(p.mul(a, w), p.mul(b, y)),
                p.add(p.mul(a, x), p.mul(b, z)),
                p.add(p.mul(c, w), p.mul(d, y)),
                p.add(p.mul(c, x), p.mul(d, z)),
            ],
            p,
        )
    }

    /// Inverse via the adjugate; only defined when `det ≡ ±1`.
    pub fn inv(&self, p: &RingParams) -> Result<Self> {
        if !p.is_unit_sign(self.det(p)) {
            return Err(Error::NotUnimodular);
        }
        let [a, b, c, d] = self.e;
        Ok(Self::from_entries([d, p.neg(b), p.neg(c), a], p))
    }

    pub fn pow(&self, mut k: u64, p: &RingParams) -> Self {
        let mut base = *self;
        let mut acc = Self::identity(p);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, p);
            }
            base = base.mul(&base, p);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self, p: &RingParams) -> bool {
        *self == Self::identity(p)
    }
}

fn components(e: &[RingElem; 4]) -> [u32; 8] {
    [e[0].rat, e[0].irr, e[1].rat, e[1].irr, e[2].rat, e[2].irr, e[3].rat, e[3].irr]
}

/// Projective equality; canonical storage makes this structural.
pub fn proj_eq(g: &ProjMatrix, h: &ProjMatrix) -> bool {
    g == h
}

impl fmt::Display for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.e[0], self.e[1], self.e[2], self.e[3])
    }
}
