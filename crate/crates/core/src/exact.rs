//! Exact arithmetic in `Z[√m]` and `Q(√m)` for lifts and cusps.
//!
//! `m = 1` stands for the modular group: there `√m` is never introduced and
//! every irrational part stays zero.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// `a + b√m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadInt {
    pub a: i128,
    pub b: i128,
}

impl QuadInt {
    pub const ZERO: Self = Self { a: 0, b: 0 };
    pub const ONE: Self = Self { a: 1, b: 0 };

    pub fn new(a: i128, b: i128) -> Self {
        Self { a, b }
    }

    pub fn add(self, o: Self) -> Self {
        Self { a: self.a + o.a, b: self.b + o.b }
    }

    pub fn sub(self, o: Self) -> Self {
        Self { a: self.a - o.a, b: self.b - o.b }
    }

    pub fn neg(self) -> Self {
        Self { a: -self.a, b: -self.b }
    }

    pub fn mul(self, o: Self, m: i128) -> Self {
        Self { a: self.a * o.a + m * self.b * o.b, b: self.a * o.b + self.b * o.a }
    }

    pub fn conj(self) -> Self {
        Self { a: self.a, b: -self.b }
    }

    /// `a² - m b²`.
    pub fn norm(self, m: i128) -> i128 {
        self.a * self.a - m * self.b * self.b
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn to_f64(self, m: i128) -> f64 {
        self.a as f64 + self.b as f64 * (m as f64).sqrt()
    }
}

/// `√m` for the Hecke group `H_q`, `q ∈ {3, 4, 6}`.
pub fn hecke_m(q: u32) -> Result<i128> {
    match q {
        3 => Ok(1),
        4 => Ok(2),
        6 => Ok(3),
        _ => Err(Error::InvalidParams(format!("q = {q} is not one of 3, 4, 6"))),
    }
}

/// `λ_q` as an element of `Z[√m]`.
pub fn hecke_lambda(m: i128) -> QuadInt {
    if m == 1 {
        QuadInt::ONE
    } else {
        QuadInt::new(0, 1)
    }
}

/// `[[e0, e1], [e2, e3]]` over `Z[√m]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExactMatrix {
    pub e: [QuadInt; 4],
}

impl ExactMatrix {
    pub const IDENTITY: Self = Self { e: [QuadInt::ONE, QuadInt::ZERO, QuadInt::ZERO, QuadInt::ONE] };

    pub fn s() -> Self {
        Self { e: [QuadInt::ZERO, QuadInt::new(-1, 0), QuadInt::ONE, QuadInt::ZERO] }
    }

    pub fn t(m: i128) -> Self {
        Self { e: [QuadInt::ONE, hecke_lambda(m), QuadInt::ZERO, QuadInt::ONE] }
    }

    pub fn mul(&self, o: &Self, m: i128) -> Self {
        let [a, b, c, d] = self.e;
        let [w, x, y, z] = o.e;
        Self {
            e: [
                a.mul(w, m).add(b.mul(y, m)),
                a.mul(x, m).add(b.mul(z, m)),
                c.mul(w, m).add(d.mul(y, m)),
                c.mul(x, m).add(d.mul(z, m)),
            ],
        }
    }

    /// Adjugate; the inverse when the determinant is one.
    pub fn inv(&self) -> Self {
        let [a, b, c, d] = self.e;
        Self { e: [d, b.neg(), c.neg(), a] }
    }

    pub fn det(&self, m: i128) -> QuadInt {
        let [a, b, c, d] = self.e;
        a.mul(d, m).sub(b.mul(c, m))
    }

    pub fn neg(&self) -> Self {
        Self { e: self.e.map(QuadInt::neg) }
    }

    /// The lesser of `g` and `-g`, so that `±g` compare equal.
    pub fn projective(&self) -> Self {
        let n = self.neg();
        if n < *self {
            n
        } else {
            *self
        }
    }

    /// Image of a cusp under the Möbius action.
    pub fn act(&self, x: &Cusp, m: i128) -> Cusp {
        let [a, b, c, d] = self.e;
        match x {
            Cusp::Infinity => Cusp::ratio(a, c, m),
            Cusp::Finite { rat, irr, den } => {
                // x = (rat + irr√m) / den, so g·x = (a·u + b·den) / (c·u + d·den).
                let u = QuadInt::new(*rat, *irr);
                let v = QuadInt::new(*den, 0);
                Cusp::ratio(a.mul(u, m).add(b.mul(v, m)), c.mul(u, m).add(d.mul(v, m)), m)
            }
        }
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A point of `Q(√m) ∪ {∞}`; finite values are `(rat + irr√m) / den` in lowest terms with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cusp {
    Finite { rat: i128, irr: i128, den: i128 },
    Infinity,
}

impl Cusp {
    pub fn ratio(num: QuadInt, den: QuadInt, m: i128) -> Self {
        if den.is_zero() {
            return Cusp::Infinity;
        }
        let top = num.mul(den.conj(), m);
        let bottom = den.norm(m);
        let sign = if bottom < 0 { -1 } else { 1 };
        let g = gcd(gcd(top.a, top.b), bottom);
        Cusp::Finite { rat: sign * top.a / g, irr: sign * top.b / g, den: sign * bottom / g }
    }

    pub fn integer(k: i128) -> Self {
        Cusp::Finite { rat: k, irr: 0, den: 1 }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Cusp::Infinity)
    }

    pub fn to_f64(&self, m: i128) -> f64 {
        match self {
            Cusp::Infinity => f64::INFINITY,
            Cusp::Finite { rat, irr, den } => QuadInt::new(*rat, *irr).to_f64(m) / *den as f64,
        }
    }

    /// Exact comparison of finite cusps by real value; `∞` is largest.
    pub fn cmp_value(&self, other: &Self, m: i128) -> Ordering {
        match (self, other) {
            (Cusp::Infinity, Cusp::Infinity) => Ordering::Equal,
            (Cusp::Infinity, _) => Ordering::Greater,
            (_, Cusp::Infinity) => Ordering::Less,
            (
                Cusp::Finite { rat: r1, irr: i1, den: d1 },
                Cusp::Finite { rat: r2, irr: i2, den: d2 },
            ) => {
                // sign of (r1 d2 - r2 d1) + (i1 d2 - i2 d1)√m
                let x = r1 * d2 - r2 * d1;
                let y = i1 * d2 - i2 * d1;
                sign_of(x, y, m)
            }
        }
    }
}

/// Sign of `x + y√m` for `m ≥ 1` squarefree (or 1).
fn sign_of(x: i128, y: i128, m: i128) -> Ordering {
    if m == 1 {
        return (x + y).cmp(&0);
    }
    match (x.cmp(&0), y.cmp(&0)) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (sx, sy) if sx == sy => sx,
        (sx, _) => {
            // opposite signs: compare x² with m y²
            let lhs = x * x;
            let rhs = m * y * y;
            if lhs > rhs {
                sx
            } else {
                sx.reverse()
            }
        }
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Cusp::Infinity => f.write_str("∞"),
            Cusp::Finite { rat, irr, den } => {
                let num = match (rat, irr) {
                    (r, 0) => r.to_string(),
                    (0, i) => format!("{i}√m"),
                    (r, i) if i < 0 => format!("{r}-{}√m", -i),
                    (r, i) => format!("{r}+{i}√m"),
                };
                if den == 1 {
                    f.write_str(&num)
                } else {
                    write!(f, "({num})/{den}")
                }
            }
        }
    }
}
