//! Printed names for the coordinates of the small quotient maps.
//!
//! The fixtures keep the representatives exactly as they were published
//! (`F1` is `3/(1√2)` even though the canonical form is `2/(4√2)`); lookups go
//! through [`normalize`] so equality is always on canonical coordinates.

use crate::coords::{normalize, HFCoord, Kind, RawCoord};
use crate::error::{Error, Result};
use crate::group::HeckeParams;

const TABLE1: &str = include_str!("../fixtures/table1.txt");
const CUBE: &str = include_str!("../fixtures/cube.txt");
const ICOSAHEDRON: &str = include_str!("../fixtures/icosahedron.txt");

#[derive(Debug, Clone)]
pub struct NameTable {
    params: HeckeParams,
    entries: Vec<(String, HFCoord)>,
}

impl NameTable {
    /// Names for `(4, 5)`, `(4, 3)` and `(3, 5)`; `None` otherwise.
    pub fn for_params(p: &HeckeParams) -> Option<Self> {
        let src = match (p.q(), p.n()) {
            (4, 5) => TABLE1,
            (4, 3) => CUBE,
            (3, 5) => ICOSAHEDRON,
            _ => return None,
        };
        Some(Self::parse(src, *p).expect("embedded name fixtures are valid"))
    }

    /// Parses `name kind num den` lines; `#` starts a comment.
    pub fn parse(src: &str, params: HeckeParams) -> Result<Self> {
        let mut entries: Vec<(String, HFCoord)> = Vec::new();
        for (i, line) in src.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: i + 1, msg: msg.to_string() };
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [name, kind, num, den] = fields[..] else {
                return Err(err("expected `name kind num den`"));
            };
            let kind = match kind {
                "A" => Kind::A,
                "B" => Kind::B,
                _ => return Err(err("kind must be A or B")),
            };
            let num = num.parse().map_err(|_| err("bad numerator"))?;
            let den = den.parse().map_err(|_| err("bad denominator"))?;
            let coord = normalize(kind, num, den, &params)?;
            if entries.iter().any(|(n, c)| n == name || *c == coord) {
                return Err(err("duplicate name or coordinate"));
            }
            entries.push((name.to_string(), coord));
        }
        Ok(Self { params, entries })
    }

    pub fn params(&self) -> HeckeParams {
        self.params
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(String, HFCoord)] {
        &self.entries
    }

    pub fn name_of(&self, u: &HFCoord) -> Option<&str> {
        self.entries.iter().find(|(_, c)| c == u).map(|(n, _)| n.as_str())
    }

    pub fn lookup(&self, name: &str) -> Option<HFCoord> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, c)| *c)
    }

    /// The printed name if there is one, else the raw `kind:num/den` form.
    pub fn label(&self, u: &HFCoord) -> String {
        self.name_of(u).map(str::to_string).unwrap_or_else(|| u.to_string())
    }
}

/// Resolves a table name (`H2`) or a raw coordinate (`B:2/0`).
pub fn resolve(token: &str, p: &HeckeParams, names: Option<&NameTable>) -> Result<HFCoord> {
    let token = token.trim();
    if let Some(u) = names.and_then(|t| t.lookup(token)) {
        return Ok(u);
    }
    let raw: RawCoord = token.parse().map_err(|_| Error::UnknownLabel(token.to_string()))?;
    normalize(raw.kind, raw.num, raw.den, p)
}

/// `H2` → `H₂`: trailing ASCII digits become subscripts.
pub fn pretty(name: &str) -> String {
    const SUB: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    let head = name.trim_end_matches(|c: char| c.is_ascii_digit());
    if head.is_empty() || !head.chars().all(|c| c.is_ascii_alphabetic()) {
        return name.to_string();
    }
    let tail: String =
        name[head.len()..].chars().map(|c| SUB[c.to_digit(10).unwrap() as usize]).collect();
    format!("{head}{tail}")
}
