//! Finite groups given by multiplication tables over canonical words.

use crate::error::{Error, Result};
use std::fmt;
use std::sync::{Arc, OnceLock};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    /// C₂ = ⟨e⟩.
    C2,
    /// C₂ ⊕ C₂ = ⟨e, f⟩.
    Klein4,
    /// C_p = ⟨g⟩.
    Cyclic(u64),
    /// D_2p = ⟨x, y | x² = y^p = 1, xyx⁻¹ = y⁻¹⟩.
    Dihedral(u64),
    /// H₈ = ⟨x, y | x⁴ = 1, x² = y², yxy⁻¹ = x⁻¹⟩.
    Quaternion8,
    /// Any group given by its table.
    Table,
}

#[derive(Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    kind: GroupKind,
    words: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    generators: Vec<(String, usize)>,
}

pub type Group = Arc<FiniteGroup>;

fn power_word(name: &str, k: u64) -> String {
    match k {
        0 => String::new(),
        1 => name.to_string(),
        _ => format!("{name}^{k}"),
    }
}

fn join_word(parts: &[String]) -> String {
    let parts: Vec<&str> = parts.iter().map(|s| s.as_str()).filter(|s| !s.is_empty()).collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl FiniteGroup {
    fn build(
        kind: GroupKind,
        words: Vec<String>,
        table: Vec<Vec<usize>>,
        generators: Vec<(String, usize)>,
    ) -> Result<Group> {
        let n = words.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidInput("malformed multiplication table".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidInput("table has no identity".into()))?;
        let mut inverses = Vec::with_capacity(n);
        for g in 0..n {
            let inv = (0..n)
                .find(|&h| table[g][h] == identity && table[h][g] == identity)
                .ok_or_else(|| Error::InvalidInput(format!("element {} has no inverse", words[g])))?;
            inverses.push(inv);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidInput("table is not associative".into()));
                    }
                }
            }
        }
        Ok(Arc::new(FiniteGroup { kind, words, table, identity, inverses, generators }))
    }

    fn cyclic_named(n: u64, name: &str, kind: GroupKind) -> Group {
        let words = (0..n).map(|k| join_word(&[power_word(name, k)])).collect();
        let table = (0..n)
            .map(|a| (0..n).map(|b| ((a + b) % n) as usize).collect())
            .collect();
        let gens = vec![(name.to_string(), 1 % n as usize)];
        FiniteGroup::build(kind, words, table, gens).expect("cyclic group")
    }

    pub fn c2() -> Group {
        static CELL: OnceLock<Group> = OnceLock::new();
        CELL.get_or_init(|| FiniteGroup::cyclic_named(2, "e", GroupKind::C2)).clone()
    }

    pub fn cyclic(p: u64) -> Result<Group> {
        if !crate::padic::is_small_prime(p) {
            return Err(Error::UnsupportedGroup(format!("Cp needs a prime, got {p}")));
        }
        Ok(FiniteGroup::cyclic_named(p, "g", GroupKind::Cyclic(p)))
    }

    /// Elements e^a f^b at index a + 2b.
    pub fn klein4() -> Group {
        static CELL: OnceLock<Group> = OnceLock::new();
        CELL.get_or_init(FiniteGroup::build_klein4).clone()
    }

    fn build_klein4() -> Group {
        let words = (0..4)
            .map(|i| join_word(&[power_word("e", i % 2), power_word("f", i / 2)]))
            .collect();
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        let gens = vec![("e".to_string(), 1), ("f".to_string(), 2)];
        FiniteGroup::build(GroupKind::Klein4, words, table, gens).expect("Klein four-group")
    }

    /// Elements x^a y^b at index a·p + b.
    pub fn dihedral(p: u64) -> Result<Group> {
        if p < 3 || !crate::padic::is_small_prime(p) {
            return Err(Error::UnsupportedGroup(format!("D2p needs an odd prime, got {p}")));
        }
        let idx = |a: u64, b: u64| (a * p + b) as usize;
        let mut words = Vec::new();
        for a in 0..2 {
            for b in 0..p {
                words.push(join_word(&[power_word("x", a), power_word("y", b)]));
            }
        }
        let mut table = vec![vec![0; 2 * p as usize]; 2 * p as usize];
        for a in 0..2 {
            for b in 0..p {
                for c in 0..2 {
                    for d in 0..p {
                        let yb = if c == 1 { (p - b) % p } else { b };
                        table[idx(a, b)][idx(c, d)] = idx((a + c) % 2, (yb + d) % p);
                    }
                }
            }
        }
        let gens = vec![("x".to_string(), idx(1, 0)), ("y".to_string(), idx(0, 1))];
        FiniteGroup::build(GroupKind::Dihedral(p), words, table, gens)
    }

    /// Elements x^a y^b at index a + 4b.
    pub fn quaternion8() -> Group {
        static CELL: OnceLock<Group> = OnceLock::new();
        CELL.get_or_init(FiniteGroup::build_quaternion8).clone()
    }

    fn build_quaternion8() -> Group {
        let mut words = Vec::new();
        for b in 0..2 {
            for a in 0..4 {
                words.push(join_word(&[power_word("x", a), power_word("y", b)]));
            }
        }
        let mut table = vec![vec![0; 8]; 8];
        for i in 0..8 {
            for j in 0..8 {
                let (a, b) = (i % 4, i / 4);
                let (c, d) = (j % 4, j / 4);
                let twisted = if b == 1 { 4 - c } else { c };
                let a2 = (a + twisted + 2 * (b * d)) % 4;
                table[i][j] = a2 + 4 * ((b + d) % 2);
            }
        }
        let gens = vec![("x".to_string(), 1), ("y".to_string(), 4)];
        FiniteGroup::build(GroupKind::Quaternion8, words, table, gens).expect("quaternion group")
    }

    /// A group from explicit element names and a table (identity detected).
    pub fn from_table(words: Vec<String>, table: Vec<Vec<usize>>) -> Result<Group> {
        let gens = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        FiniteGroup::build(GroupKind::Table, words, table, gens)
    }

    /// Parses "C2", "Klein4", "Cp:<p>", "D2p:<p>", "H8".
    pub fn from_spec(spec: &str) -> Result<Group> {
        let parse_p = |s: &str| {
            s.trim()
                .parse::<u64>()
                .map_err(|_| Error::UnsupportedGroup(format!("bad prime in group spec {spec:?}")))
        };
        match spec.trim() {
            "C2" => Ok(FiniteGroup::c2()),
            "Klein4" => Ok(FiniteGroup::klein4()),
            "H8" => Ok(FiniteGroup::quaternion8()),
            s if s.starts_with("Cp:") => FiniteGroup::cyclic(parse_p(&s[3..])?),
            s if s.starts_with("D2p:") => FiniteGroup::dihedral(parse_p(&s[4..])?),
            _ => Err(Error::UnsupportedGroup(format!("unknown group spec {spec:?}"))),
        }
    }

    pub fn spec(&self) -> String {
        match self.kind {
            GroupKind::C2 => "C2".into(),
            GroupKind::Klein4 => "Klein4".into(),
            GroupKind::Cyclic(p) => format!("Cp:{p}"),
            GroupKind::Dihedral(p) => format!("D2p:{p}"),
            GroupKind::Quaternion8 => "H8".into(),
            GroupKind::Table => format!("table:{}", self.order()),
        }
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.words.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn word(&self, a: usize) -> &str {
        &self.words[a]
    }

    pub fn words(&self) -> &[String] {
        &self.words
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators.iter().find(|(n, _)| n == name).map(|&(_, i)| i)
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Parses a word such as `x^3*y`, `y^-1` or `1`.
    ///
    /// Errors carry a 1-based column inside `word`.
    pub fn parse_word(&self, word: &str) -> Result<usize> {
        let err = |column: usize, message: String| Error::Parse { line: 1, column, message };
        let chars: Vec<char> = word.chars().collect();
        if word.trim() == "1" {
            return Ok(self.identity);
        }
        if chars.is_empty() {
            return Err(err(1, "empty group word".into()));
        }
        let mut pos = 0;
        let mut acc = self.identity;
        loop {
            while pos < chars.len() && chars[pos] == ' ' {
                pos += 1;
            }
            let start = pos;
            while pos < chars.len() && (chars[pos].is_alphanumeric() || chars[pos] == '_') {
                pos += 1;
            }
            if start == pos {
                return Err(err(start + 1, "expected a generator name".into()));
            }
            let name: String = chars[start..pos].iter().collect();
            let g = match self.generator(&name) {
                Some(g) => g,
                None if name == "1" => self.identity,
                None => return Err(err(start + 1, format!("unknown generator {name:?}"))),
            };
            let mut exp: i64 = 1;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let estart = pos;
                if pos < chars.len() && chars[pos] == '-' {
                    pos += 1;
                }
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let text: String = chars[estart..pos].iter().collect();
                exp = text
                    .parse()
                    .map_err(|_| err(estart + 1, "expected an integer exponent after '^'".into()))?;
            }
            acc = self.mul(acc, self.pow(g, exp));
            while pos < chars.len() && chars[pos] == ' ' {
                pos += 1;
            }
            if pos == chars.len() {
                return Ok(acc);
            }
            if chars[pos] != '*' {
                return Err(err(pos + 1, format!("unexpected character {:?}", chars[pos])));
            }
            pos += 1;
        }
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec())
    }
}
