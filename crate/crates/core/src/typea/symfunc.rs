//! Symmetric functions up to a fixed degree, in the monomial, complete
//! homogeneous, elementary and Schur bases.
//!
//! Conversions go through the Schur basis with Kostka numbers:
//! `s_l = sum_m K(l, m) m_m`, `h_m = sum_l K(l, m) s_l`,
//! `e_m = sum_l K(l, m) s_{l'}`. Each matrix is unitriangular in dominance
//! order, so the inverse conversions are triangular eliminations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition, weakly decreasing, without zero parts.
pub type Partition = Vec<u32>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SymBasis {
    Monomial,
    Homogeneous,
    Elementary,
    Schur,
}

impl SymBasis {
    pub fn letter(self) -> &'static str {
        match self {
            SymBasis::Monomial => "m",
            SymBasis::Homogeneous => "h",
            SymBasis::Elementary => "e",
            SymBasis::Schur => "s",
        }
    }
}

impl std::str::FromStr for SymBasis {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "m" | "monomial" => Ok(SymBasis::Monomial),
            "h" | "homogeneous" => Ok(SymBasis::Homogeneous),
            "e" | "elementary" => Ok(SymBasis::Elementary),
            "s" | "schur" => Ok(SymBasis::Schur),
            _ => Err(format!("unknown basis {s:?}")),
        }
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, prefix: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate(p: &[u32]) -> Partition {
    let first = p.first().copied().unwrap_or(0);
    (1..=first).map(|k| p.iter().filter(|&&x| x >= k).count() as u32).collect()
}

fn size(p: &[u32]) -> u32 {
    p.iter().sum()
}

/// Sorts a composition into a partition, dropping zeros.
pub fn sort_partition(mut p: Vec<u32>) -> Partition {
    p.retain(|&x| x > 0);
    p.sort_unstable_by(|a, b| b.cmp(a));
    p
}

/// Kostka numbers with a memo table.
#[derive(Default)]
pub struct Kostka {
    memo: HashMap<(Partition, Vec<u32>), i64>,
}

impl Kostka {
    /// Number of semistandard tableaux of shape `shape` and content `content`
    /// (a composition).
    pub fn get(&mut self, shape: &[u32], content: &[u32]) -> i64 {
        if size(shape) != size(content) {
            return 0;
        }
        if content.is_empty() {
            return 1;
        }
        let key = (shape.to_vec(), content.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let (last, rest) = content.split_last().expect("nonempty");
        let mut total = 0;
        for inner in horizontal_strips(shape, *last) {
            total += self.get(&inner, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// Partitions `inner` with `shape / inner` a horizontal strip of size `k`.
fn horizontal_strips(shape: &[u32], k: u32) -> Vec<Partition> {
    fn go(shape: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == shape.len() {
            if left == 0 {
                out.push(sort_partition(cur.clone()));
            }
            return;
        }
        let below = shape.get(i + 1).copied().unwrap_or(0);
        let max_remove = (shape[i] - below).min(left);
        for r in 0..=max_remove {
            cur.push(shape[i] - r);
            go(shape, i + 1, left - r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(shape, 0, k, &mut Vec::new(), &mut out);
    out
}

/// A symmetric function known through degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    pub basis: SymBasis,
    pub degree: u32,
    pub terms: BTreeMap<Partition, i64>,
}

impl SymFunc {
    pub fn zero(basis: SymBasis, degree: u32) -> Self {
        SymFunc {
            basis,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: SymBasis, degree: u32) -> Self {
        Self::term(basis, degree, Vec::new(), 1)
    }

    pub fn term(basis: SymBasis, degree: u32, p: Partition, c: i64) -> Self {
        let mut out = Self::zero(basis, degree);
        out.add_term(p, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c` times the basis element of `p`; terms above the degree are
    /// dropped.
    pub fn add_term(&mut self, p: Partition, c: i64) {
        if c == 0 || size(&p) > self.degree {
            return;
        }
        let e = self.terms.entry(p.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        out.degree = self.degree.min(other.degree);
        out.terms.retain(|p, _| size(p) <= out.degree);
        for (p, &c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> SymFunc {
        let mut out = Self::zero(self.basis, self.degree);
        for (p, &x) in &self.terms {
            out.add_term(p.clone(), c * x);
        }
        out
    }

    /// Keeps the terms of degree at most `d`.
    pub fn truncate(&self, d: u32) -> SymFunc {
        let mut out = self.clone();
        out.degree = self.degree.min(d);
        out.terms.retain(|p, _| size(p) <= out.degree);
        out
    }

    /// Part of homogeneous degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> SymFunc {
        let mut out = self.clone();
        out.terms.retain(|p, _| size(p) == d);
        out
    }

    /// Lowest degree with a nonzero term.
    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.keys().map(|p| size(p)).min()
    }

    /// Drops `m_l` with `l_1 >= n`: the quotient by `I_n`, computed in the
    /// monomial basis.
    pub fn reduce_mod(&self, n: u32) -> SymFunc {
        let mut m = self.to_basis(SymBasis::Monomial);
        m.terms.retain(|p, _| p.first().is_none_or(|&a| a < n));
        m.to_basis(self.basis)
    }

    pub fn to_basis(&self, target: SymBasis) -> SymFunc {
        if target == self.basis {
            return self.clone();
        }
        let mut k = Kostka::default();
        let schur = self.to_schur(&mut k);
        schur.from_schur(target, &mut k)
    }

    fn to_schur(&self, k: &mut Kostka) -> SymFunc {
        let mut out = Self::zero(SymBasis::Schur, self.degree);
        match self.basis {
            SymBasis::Schur => return self.clone(),
            SymBasis::Homogeneous | SymBasis::Elementary => {
                for (mu, &c) in &self.terms {
                    for lambda in partitions(size(mu)) {
                        let kk = k.get(&lambda, mu);
                        if kk != 0 {
                            let shape = if self.basis == SymBasis::Homogeneous { lambda } else { conjugate(&lambda) };
                            out.add_term(shape, c * kk);
                        }
                    }
                }
            }
            SymBasis::Monomial => {
                // s_l = m_l + lower terms in dominance; eliminate from the top
                let mut rest = self.terms.clone();
                while let Some((lambda, c)) = rest.iter().next_back().map(|(p, &c)| (p.clone(), c)) {
                    for mu in partitions(size(&lambda)) {
                        let kk = k.get(&lambda, &mu);
                        if kk != 0 {
                            let e = rest.entry(mu.clone()).or_insert(0);
                            *e -= c * kk;
                            if *e == 0 {
                                rest.remove(&mu);
                            }
                        }
                    }
                    out.add_term(lambda, c);
                }
            }
        }
        out
    }

    fn from_schur(&self, target: SymBasis, k: &mut Kostka) -> SymFunc {
        let mut out = Self::zero(target, self.degree);
        match target {
            SymBasis::Schur => return self.clone(),
            SymBasis::Monomial => {
                for (lambda, &c) in &self.terms {
                    for mu in partitions(size(lambda)) {
                        out.add_term(mu.clone(), c * k.get(lambda, &mu));
                    }
                }
            }
            SymBasis::Homogeneous => {
                // h_m = s_m + sum_{l > m} K(l, m) s_l; eliminate from the bottom
                let mut rest = self.terms.clone();
                while let Some((mu, c)) = rest.iter().next().map(|(p, &c)| (p.clone(), c)) {
                    for lambda in partitions(size(&mu)) {
                        let kk = k.get(&lambda, &mu);
                        if kk != 0 {
                            let e = rest.entry(lambda.clone()).or_insert(0);
                            *e -= c * kk;
                            if *e == 0 {
                                rest.remove(&lambda);
                            }
                        }
                    }
                    out.add_term(mu, c);
                }
            }
            SymBasis::Elementary => {
                // e_m = s_{m'} + sum_{l > m} K(l, m) s_{l'}; s_{l'} is lower
                let mut rest = self.terms.clone();
                while let Some((nu, c)) = rest.iter().next_back().map(|(p, &c)| (p.clone(), c)) {
                    let mu = conjugate(&nu);
                    for lambda in partitions(size(&mu)) {
                        let kk = k.get(&lambda, &mu);
                        if kk != 0 {
                            let shape = conjugate(&lambda);
                            let e = rest.entry(shape.clone()).or_insert(0);
                            *e -= c * kk;
                            if *e == 0 {
                                rest.remove(&shape);
                            }
                        }
                    }
                    out.add_term(mu, c);
                }
            }
        }
        out
    }

    pub fn to_document(&self) -> SymFuncDocument {
        SymFuncDocument {
            basis: self.basis,
            degree: self.degree,
            terms: self.terms.iter().map(|(p, &c)| (partition_key(p), c)).collect(),
        }
    }

    pub fn from_document(doc: &SymFuncDocument) -> Result<SymFunc> {
        let mut out = SymFunc::zero(doc.basis, doc.degree);
        for (k, &c) in &doc.terms {
            let p = parse_partition_key(k)?;
            out.add_term(p, c);
        }
        Ok(out)
    }
}

/// Serialized form: `{"basis", "degree", "terms": {"2,1": c}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFuncDocument {
    pub basis: SymBasis,
    pub degree: u32,
    pub terms: BTreeMap<String, i64>,
}

pub fn partition_key(p: &[u32]) -> String {
    p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn parse_partition_key(k: &str) -> Result<Partition> {
    if k.is_empty() {
        return Ok(Vec::new());
    }
    let parts: std::result::Result<Vec<u32>, _> = k.split(',').map(|x| x.trim().parse::<u32>()).collect();
    let parts = parts.map_err(|e| Error::Invalid(format!("bad partition {k:?}: {e}")))?;
    if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
        return Err(Error::Invalid(format!("{k:?} is not a partition")));
    }
    Ok(parts)
}

/// `h21`, `m111`; parts above 9 are separated by commas.
pub fn basis_label(basis: SymBasis, p: &[u32]) -> String {
    let sep = if p.iter().any(|&x| x > 9) { "," } else { "" };
    let body = p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep);
    format!("{}{}", basis.letter(), body)
}

/// Order of terms in text: by degree, then decreasing lexicographic.
pub(crate) fn display_order(a: &Partition, b: &Partition) -> std::cmp::Ordering {
    size(a).cmp(&size(b)).then_with(|| b.cmp(a))
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&Partition> = self.terms.keys().collect();
        keys.sort_by(|a, b| display_order(a, b));
        let items: Vec<(i64, String)> = keys
            .into_iter()
            .map(|p| {
                let label = if p.is_empty() { String::new() } else { basis_label(self.basis, p) };
                (self.terms[p], label)
            })
            .collect();
        f.write_str(&super::join_terms(&items))
    }
}
