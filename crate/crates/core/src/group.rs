//! The finite quotient `H_q / H_q(n)` of a Hecke group by its principal
//! congruence subgroup.
//!
//! `H_q(n)` is exactly the set of elements congruent to `±I` modulo `n`, so the
//! quotient is the image of `⟨S, T⟩` in `PSL(2, Z_n[λ_q])`. We enumerate it by
//! breadth-first closure under right multiplication by `S` and `T`, which gives
//! a deterministic element order (identity first) and the right-multiplication
//! tables that the dart model of the map needs.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ring::{ProjMatrix, RingParams};

/// Default ceiling on the number of enumerated elements.
pub const DEFAULT_MAX_GROUP: usize = 1_000_000;

/// Parameters `(q, n)` of the quotient `H_q / H_q(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HeckeParams {
    q: u32,
    n: u32,
}

impl HeckeParams {
    pub fn new(q: u32, n: u32) -> Result<Self> {
        if !matches!(q, 3 | 4 | 6) {
            return Err(Error::InvalidParams(format!("q = {q} must be 3, 4 or 6")));
        }
        if n < 3 {
            return Err(Error::InvalidParams(format!("n = {n} must be at least 3")));
        }
        Ok(Self { q, n })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `m = λ_q²`.
    pub fn m(&self) -> u32 {
        match self.q {
            3 => 1,
            4 => 2,
            _ => 3,
        }
    }

    pub fn ring(&self) -> RingParams {
        RingParams::new(self.n, self.m()).expect("validated in HeckeParams::new")
    }

    pub fn has_parity(&self) -> bool {
        self.q != 3
    }
}

/// The generators `S: z ↦ -1/z`, `T: z ↦ z + λ_q` and `R = T·S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Generators {
    pub s: ProjMatrix,
    pub t: ProjMatrix,
    pub r: ProjMatrix,
}

pub fn generators(p: &HeckeParams) -> Generators {
    let ring = p.ring();
    let s = ProjMatrix::new([ring.zero(), ring.elem(-1, 0), ring.one(), ring.zero()], &ring)
        .expect("S is unimodular");
    let t = ProjMatrix::new([ring.one(), ring.lambda(), ring.zero(), ring.one()], &ring)
        .expect("T is unimodular");
    let r = t.mul(&s, &ring);
    Generators { s, t, r }
}

/// Even elements have the shape `[[a, b√m], [c√m, d]]`, odd ones `[[a√m, b], [c, d√m]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn compose(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Classifies `g` by the even/odd pattern of its entries. Undefined for `q = 3`.
pub fn parity(g: &ProjMatrix, p: &HeckeParams) -> Result<Parity> {
    if !p.has_parity() {
        return Err(Error::ParityUndefined);
    }
    let [a, b, c, d] = g.entries();
    if a.irr == 0 && d.irr == 0 && b.rat == 0 && c.rat == 0 {
        Ok(Parity::Even)
    } else if a.rat == 0 && d.rat == 0 && b.irr == 0 && c.irr == 0 {
        Ok(Parity::Odd)
    } else {
        Err(Error::CorruptElement(g.to_string()))
    }
}

/// Least `k ≥ 1` with `g^k` projectively trivial.
pub fn element_order(g: &ProjMatrix, p: &HeckeParams) -> u64 {
    let ring = p.ring();
    let id = ProjMatrix::identity(&ring);
    let mut acc = *g;
    let mut k = 1;
    while acc != id {
        acc = acc.mul(g, &ring);
        k += 1;
    }
    k
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Index `|H_q : H_q(n)|` for `n > 2`.
///
/// `q ∈ {4, 6}` follow Parson's two-case product with `m = 2, 3`. For `q = 3`
/// the classical `n³ ∏ (1 - p⁻²)` counts `SL(2, Z_n)` and is halved for `±I`.
pub fn parson_index(p: &HeckeParams) -> u64 {
    let n = p.n() as u64;
    let primes = prime_divisors(n);
    // Work with numerator/denominator products to stay exact.
    let mut num = n * n * n;
    let mut den = 1u64;
    let m = p.m() as u64;
    match p.q() {
        3 => {
            for &pr in &primes {
                num *= pr * pr - 1;
                den *= pr * pr;
            }
            den *= 2;
        }
        _ => {
            for &pr in &primes {
                if pr == m {
                    num *= m - 1;
                    den *= m;
                } else {
                    num *= pr * pr - 1;
                    den *= pr * pr;
                }
            }
        }
    }
    debug_assert_eq!(num % den, 0);
    num / den
}

/// The enumerated quotient group.
#[derive(Debug, Clone)]
pub struct FiniteHeckeGroup {
    params: HeckeParams,
    elements: Vec<ProjMatrix>,
    index: HashMap<ProjMatrix, usize>,
    right_s: Vec<usize>,
    right_t: Vec<usize>,
    gen_s: usize,
    gen_t: usize,
    gen_r: usize,
}

impl FiniteHeckeGroup {
    pub fn enumerate(params: HeckeParams) -> Result<Self> {
        Self::enumerate_bounded(params, DEFAULT_MAX_GROUP)
    }

    pub fn enumerate_bounded(params: HeckeParams, limit: usize) -> Result<Self> {
        let ring = params.ring();
        let gens = generators(&params);
        let id = ProjMatrix::identity(&ring);
        let mut elements = vec![id];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut right_s = Vec::new();
        let mut right_t = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            let g = elements[head];
            for (gen, table) in [(&gens.s, &mut right_s), (&gens.t, &mut right_t)] {
                let h = g.mul(gen, &ring);
                let next = elements.len();
                let idx = *index.entry(h).or_insert(next);
                if idx == next {
                    if next >= limit {
                        return Err(Error::GroupTooLarge { limit });
                    }
                    elements.push(h);
                }
                table.push(idx);
            }
            head += 1;
        }
        let gen_s = index[&gens.s];
        let gen_t = index[&gens.t];
        let gen_r = index[&gens.r];
        Ok(Self { params, elements, index, right_s, right_t, gen_s, gen_t, gen_r })
    }

    pub fn params(&self) -> HeckeParams {
        self.params
    }

    pub fn ring(&self) -> RingParams {
        self.params.ring()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[ProjMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &ProjMatrix {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &ProjMatrix) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn gen_s(&self) -> usize {
        self.gen_s
    }

    pub fn gen_t(&self) -> usize {
        self.gen_t
    }

    pub fn gen_r(&self) -> usize {
        self.gen_r
    }

    /// Index of `g·S`.
    pub fn times_s(&self, g: usize) -> usize {
        self.right_s[g]
    }

    /// Index of `g·T`.
    pub fn times_t(&self, g: usize) -> usize {
        self.right_t[g]
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        let prod = self.elements[g].mul(&self.elements[h], &self.ring());
        self.index[&prod]
    }

    pub fn inv(&self, g: usize) -> usize {
        let inv = self.elements[g].inv(&self.ring()).expect("group elements are unimodular");
        self.index[&inv]
    }

    pub fn parity(&self, g: usize) -> Result<Parity> {
        parity(&self.elements[g], &self.params)
    }

    pub fn element_order(&self, g: usize) -> u64 {
        element_order(&self.elements[g], &self.params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hp(q: u32, n: u32) -> HeckeParams {
        HeckeParams::new(q, n).unwrap()
    }

    #[test]
    fn rejects_bad_params() {
        assert!(HeckeParams::new(5, 5).is_err());
        assert!(HeckeParams::new(4, 2).is_err());
    }

    #[test]
    fn generator_shapes() {
        let p = hp(4, 5);
        let ring = p.ring();
        let g = generators(&p);
        let expected_r =
            ProjMatrix::from_ints([(0, 1), (-1, 0), (1, 0), (0, 0)], &ring).unwrap();
        assert_eq!(g.r, expected_r);
        assert_eq!(element_order(&g.r, &p), 4);
        assert_eq!(element_order(&g.s, &p), 2);
        let q3 = hp(3, 5);
        assert_eq!(element_order(&generators(&q3).r, &q3), 3);
        let cube = hp(4, 3);
        assert_eq!(element_order(&generators(&cube).t, &cube), 3);
    }

    #[test]
    fn r_has_period_q_for_all_moduli() {
        for q in [3, 4, 6] {
            for n in 3..=12 {
                let p = hp(q, n);
                assert_eq!(element_order(&generators(&p).r, &p), q as u64, "q={q} n={n}");
                assert_eq!(element_order(&generators(&p).t, &p), n as u64);
            }
        }
    }

    #[test]
    fn parson_values() {
        assert_eq!(parson_index(&hp(4, 5)), 120);
        assert_eq!(parson_index(&hp(4, 3)), 24);
        assert_eq!(parson_index(&hp(4, 6)), 96);
        assert_eq!(parson_index(&hp(3, 5)), 60);
        assert_eq!(parson_index(&hp(4, 7)), 336);
        assert_eq!(parson_index(&hp(6, 5)), 120);
        assert_eq!(parson_index(&hp(6, 3)), 18);
    }

    #[test]
    fn enumeration_matches_index() {
        for (q, n) in [(3, 3), (3, 5), (3, 7), (4, 3), (4, 5), (4, 6), (4, 7), (6, 5), (6, 7)] {
            let p = hp(q, n);
            let g = FiniteHeckeGroup::enumerate(p).unwrap();
            assert_eq!(g.order() as u64, parson_index(&p), "q={q} n={n}");
        }
    }

    #[test]
    fn bound_is_enforced() {
        let err = FiniteHeckeGroup::enumerate_bounded(hp(4, 5), 100).unwrap_err();
        assert_eq!(err, Error::GroupTooLarge { limit: 100 });
    }

    #[test]
    fn parity_examples() {
        let p = hp(4, 5);
        let ring = p.ring();
        let g = generators(&p);
        assert_eq!(parity(&g.t, &p), Ok(Parity::Even));
        assert_eq!(parity(&g.s, &p), Ok(Parity::Odd));
        let tst = g.t.mul(&g.s, &ring).mul(&g.t, &ring);
        assert_eq!(parity(&tst, &p), Ok(Parity::Odd));
        assert_eq!(parity(&g.t, &hp(3, 5)), Err(Error::ParityUndefined));
        let bad = ProjMatrix::from_entries([ring.elem(1, 1), ring.zero(), ring.zero(), ring.one()], &ring);
        assert!(matches!(parity(&bad, &p), Err(Error::CorruptElement(_))));
    }

    #[test]
    fn even_subgroup_has_index_two() {
        for (q, n) in [(4, 3), (4, 5), (4, 7), (6, 5)] {
            let g = FiniteHeckeGroup::enumerate(hp(q, n)).unwrap();
            let parities: Vec<Parity> = (0..g.order()).map(|i| g.parity(i).unwrap()).collect();
            let evens = parities.iter().filter(|&&x| x == Parity::Even).count();
            assert_eq!(evens * 2, g.order());
            for i in 0..g.order() {
                for j in (0..g.order()).step_by(7) {
                    assert_eq!(parities[g.mul(i, j)], parities[i].compose(parities[j]));
                }
            }
        }
    }

    #[test]
    fn relations_and_tables() {
        let g = FiniteHeckeGroup::enumerate(hp(4, 5)).unwrap();
        let (s, t, r) = (g.gen_s(), g.gen_t(), g.gen_r());
        assert_eq!(g.mul(s, s), g.identity());
        assert_eq!(g.mul(t, s), r);
        assert_eq!(g.element_order(r), 4);
        assert_eq!(g.element_order(t), 5);
        for i in 0..g.order() {
            assert_eq!(g.times_s(i), g.mul(i, s));
            assert_eq!(g.times_t(i), g.mul(i, t));
            assert_eq!(g.mul(i, g.inv(i)), g.identity());
        }
    }

    #[test]
    fn determinant_is_multiplicative() {
        let g = FiniteHeckeGroup::enumerate(hp(4, 5)).unwrap();
        let ring = g.ring();
        for a in g.elements() {
            assert_eq!(a.det(&ring), ring.one());
            for b in g.elements().iter().step_by(11) {
                let d = a.mul(b, &ring).det(&ring);
                assert_eq!(d, ring.mul(a.det(&ring), b.det(&ring)));
            }
        }
    }
}
