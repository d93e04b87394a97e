//! Side pairings of a `2k`-gon and the corner classes they induce.
//!
//! Corners are `a₁ … a_N`; side `k` runs from `a_k` to `a_{k+1}` (indices
//! cyclic, `a_{N+1} = a₁`). Pairing sides `i` and `j` glues them with opposite
//! orientation: `a_i = a_{j+1}` and `a_{i+1} = a_j`.

use std::fmt::Write as _;

use crate::error::{Error, Result};

const PAPER_PAIRING: &str = include_str!("../../fixtures/pairing.txt");

/// A perfect matching on sides `1..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingTable {
    pairs: Vec<(usize, usize)>,
    partner: Vec<usize>,
}

impl PairingTable {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self> {
        let sides = 2 * pairs.len();
        if sides == 0 {
            return Err(Error::InvalidPairing("no pairs".into()));
        }
        let mut partner = vec![0usize; sides + 1];
        for &(a, b) in &pairs {
            for s in [a, b] {
                if s == 0 || s > sides {
                    return Err(Error::InvalidPairing(format!("side {s} outside 1..={sides}")));
                }
                if partner[s] != 0 {
                    return Err(Error::InvalidPairing(format!("side {s} paired twice")));
                }
            }
            if a == b {
                return Err(Error::InvalidPairing(format!("side {a} paired with itself")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        Ok(Self { pairs, partner })
    }

    /// Lines of `i j` (1-based); `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = || Error::Parse { line: i + 1, msg: format!("expected `i j`, got `{line}`") };
            let nums: Vec<usize> =
                line.split_whitespace().map(str::parse).collect::<std::result::Result<_, _>>().map_err(|_| err())?;
            let [a, b] = nums[..] else {
                return Err(err());
            };
            pairs.push((a, b));
        }
        Self::new(pairs)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (a, b) in &self.pairs {
            let _ = writeln!(s, "{a} {b}");
        }
        s
    }

    /// The published 20-gon pairing.
    pub fn paper() -> Self {
        Self::parse(PAPER_PAIRING).expect("embedded pairing parses")
    }

    pub fn sides(&self) -> usize {
        2 * self.pairs.len()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn partner(&self, side: usize) -> usize {
        self.partner[side]
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        a >= 1 && a <= self.sides() && self.partner[a] == b
    }

    /// Pairs as `(min, max)`, sorted.
    pub fn normalized(&self) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self.pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        v.sort_unstable();
        v
    }
}

fn wrap(k: usize, sides: usize) -> usize {
    (k - 1) % sides + 1
}

/// Forced partner of side `k`: `k + 3` when `k ≡ 2 (mod 4)`, `k + 9` when `k ≡ 3 (mod 4)`.
pub fn rule_partner(k: usize, sides: usize) -> Option<usize> {
    match k % 4 {
        2 => Some(wrap(k + 3, sides)),
        3 => Some(wrap(k + 9, sides)),
        _ => None,
    }
}

pub fn pairing_rule_check(t: &PairingTable) -> bool {
    (1..=t.sides()).all(|k| rule_partner(k, t.sides()).is_none_or(|p| t.partner(k) == p))
}

/// Every perfect matching on `1..=sides` obeying [`rule_partner`].
pub fn rule_matchings(sides: usize) -> Vec<PairingTable> {
    fn go(sides: usize, partner: &mut Vec<usize>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some(s) = (1..=sides).find(|&k| partner[k] == 0) else {
            let mut pairs: Vec<(usize, usize)> =
                (1..=sides).filter(|&k| k < partner[k]).map(|k| (k, partner[k])).collect();
            pairs.sort_unstable();
            out.push(pairs);
            return;
        };
        let forced = rule_partner(s, sides);
        for t in s + 1..=sides {
            if partner[t] != 0 || forced.is_some_and(|f| f != t) {
                continue;
            }
            if rule_partner(t, sides).is_some_and(|f| f != s) {
                continue;
            }
            partner[s] = t;
            partner[t] = s;
            go(sides, partner, out);
            partner[s] = 0;
            partner[t] = 0;
        }
    }
    if !sides.is_multiple_of(2) {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(sides, &mut vec![0; sides + 1], &mut out);
    out.into_iter().map(|p| PairingTable::new(p).expect("search yields matchings")).collect()
}

/// Corner classes of the identified polygon and the genus of the result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerPartition {
    /// Each class sorted; classes ordered by smallest corner.
    pub classes: Vec<Vec<usize>>,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler: i64,
    pub genus: i64,
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub fn vertex_classes(t: &PairingTable) -> CornerPartition {
    let n = t.sides();
    let mut ds = DisjointSet::new(n + 1);
    for &(i, j) in t.pairs() {
        ds.union(i, wrap(j + 1, n));
        ds.union(wrap(i + 1, n), j);
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n + 1];
    for k in 1..=n {
        let r = ds.find(k);
        if slot[r] == usize::MAX {
            slot[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[r]].push(k);
    }
    let vertices = classes.len();
    let edges = n / 2;
    let euler = vertices as i64 - edges as i64 + 1;
    CornerPartition { classes, vertices, edges, faces: 1, euler, genus: (2 - euler) / 2 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent route: corner `c` starts side `c`, which is glued to side
    /// `p(c)`, whose end corner `p(c) + 1` is the same point. Cycles of
    /// `c ↦ p(c) + 1` are the corner classes.
    fn classes_by_cycles(t: &PairingTable) -> Vec<Vec<usize>> {
        let n = t.sides();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for c in 1..=n {
            if seen[c] {
                continue;
            }
            let mut class = Vec::new();
            let mut x = c;
            while !seen[x] {
                seen[x] = true;
                class.push(x);
                x = wrap(t.partner(x) + 1, n);
            }
            class.sort_unstable();
            out.push(class);
        }
        out.sort();
        out
    }

    fn antipodal() -> PairingTable {
        PairingTable::new((1..=10).map(|k| (k, k + 10)).collect()).unwrap()
    }

    #[test]
    fn paper_table() {
        let t = PairingTable::paper();
        assert_eq!(t.sides(), 20);
        assert!(t.contains(18, 1));
        assert!(t.contains(1, 18));
        assert!(t.contains(19, 8));
        assert!(pairing_rule_check(&t));
    }

    #[test]
    fn rule_rejections() {
        let mut pairs: Vec<(usize, usize)> = PairingTable::paper().pairs().to_vec();
        pairs[0] = (2, 9);
        pairs[1] = (6, 5);
        assert!(!pairing_rule_check(&PairingTable::new(pairs).unwrap()));
        assert!(!pairing_rule_check(&antipodal()));
    }

    #[test]
    fn rule_determines_matching() {
        let all = rule_matchings(20);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].normalized(), PairingTable::paper().normalized());
    }

    #[test]
    fn paper_classes() {
        let c = vertex_classes(&PairingTable::paper());
        let odd: Vec<usize> = (1..=20).step_by(2).collect();
        assert_eq!(c.classes, vec![odd, vec![2, 6, 10, 14, 18], vec![4, 8, 12, 16, 20]]);
        assert_eq!((c.vertices, c.edges, c.faces, c.euler, c.genus), (3, 10, 1, -6, 4));
        let mut sorted = c.classes.clone();
        sorted.sort();
        assert_eq!(sorted, classes_by_cycles(&PairingTable::paper()));
    }

    #[test]
    fn antipodal_classes() {
        let c = vertex_classes(&antipodal());
        assert_eq!(c.vertices, 1);
        assert_eq!(c.genus, 5);
        assert_eq!(classes_by_cycles(&antipodal()).len(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(PairingTable::parse("1 2\n3"), Err(Error::Parse { line: 2, .. })));
        assert!(PairingTable::parse("1 2\n2 3").is_err());
        assert!(PairingTable::parse("1 5\n2 3").is_err());
        assert!(PairingTable::parse("1 1").is_err());
        assert!(PairingTable::parse("# nothing").is_err());
        let t = PairingTable::paper();
        assert_eq!(PairingTable::parse(&t.to_text()).unwrap(), t);
    }

    fn matching(half: usize) -> impl Strategy<Value = PairingTable> {
        Just((1..=2 * half).collect::<Vec<usize>>()).prop_shuffle().prop_map(|sides| {
            PairingTable::new(sides.chunks(2).map(|c| (c[0], c[1])).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn any_gluing_is_a_closed_orientable_surface(t in (1usize..=12).prop_flat_map(matching)) {
            let c = vertex_classes(&t);
            prop_assert!(c.vertices >= 1);
            prop_assert!(c.genus >= 0);
            prop_assert_eq!(c.euler % 2, 0);
            prop_assert_eq!(c.euler, 2 - 2 * c.genus);
            let covered: usize = c.classes.iter().map(Vec::len).sum();
            prop_assert_eq!(covered, t.sides());
            let mut sorted = c.classes.clone();
            sorted.sort();
            prop_assert_eq!(sorted, classes_by_cycles(&t));
        }
    }
}
