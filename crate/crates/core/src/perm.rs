//! Permutations in one-line notation and the elementary operations on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation. The empty permutation is
/// allowed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    /// Validates that `elems` is exactly `{1, ..., n}` in some order.
    pub fn new(elems: Vec<u32>) -> Result<Self> {
        let n = elems.len();
        let mut seen = vec![false; n + 1];
        for &v in &elems {
            let idx = v as usize;
            if v == 0 || idx > n {
                return Err(Error::NotAPermutation {
                    len: n,
                    reason: format!("value {v} out of range"),
                });
            }
            if seen[idx] {
                return Err(Error::DuplicateValue { value: v });
            }
            seen[idx] = true;
        }
        Ok(Permutation(elems))
    }

    /// Caller guarantees the permutation invariant.
    pub(crate) fn from_vec_unchecked(elems: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(elems.clone()).is_ok());
        Permutation(elems)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    /// Compact rendering (`5462137`), only unambiguous when `n <= 9`.
    pub fn to_compact_string(&self) -> String {
        if self.len() <= 9 {
            self.0.iter().map(|v| v.to_string()).collect()
        } else {
            self.to_string()
        }
    }

    pub fn reverse(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        let n = self.len() as u32;
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (pos, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = pos as u32 + 1;
        }
        Permutation(inv)
    }

    pub fn apply(&self, symmetry: Symmetry) -> Self {
        match symmetry {
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::Inverse => self.inverse(),
        }
    }

    /// Positions (0-based) of the left-to-right minima.
    pub fn ltr_minima_positions(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut min = u32::MAX;
        for (i, &v) in self.0.iter().enumerate() {
            if v < min {
                min = v;
                out.push(i);
            }
        }
        out
    }

    pub fn ltrm_decompose(&self) -> LtrmDecomposition {
        let starts = self.ltr_minima_positions();
        let mut blocks = Vec::with_capacity(starts.len());
        for (b, &s) in starts.iter().enumerate() {
            let end = starts.get(b + 1).copied().unwrap_or(self.len());
            blocks.push(self.0[s..end].to_vec());
        }
        LtrmDecomposition {
            blocks,
            ltrm_indices: starts.into_iter().map(|s| s + 1).collect(),
        }
    }

    /// True iff some adjacent pair reads `a (a+1)`.
    pub fn has_adjacent_consecutive_factor(&self) -> bool {
        has_adjacent_consecutive_factor(&self.0)
    }

    /// Replaces each value `v` by the increasing run `vk-k+1, ..., vk`.
    pub fn run_embedding(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument(
                "run length must be at least 1".into(),
            ));
        }
        let k32 = u32::try_from(k).map_err(|_| Error::Overflow("run embedding"))?;
        let mut out = Vec::with_capacity(self.len() * k);
        for &v in &self.0 {
            let top = v.checked_mul(k32).ok_or(Error::Overflow("run embedding"))?;
            out.extend(top + 1 - k32..=top);
        }
        Ok(Permutation(out))
    }

    /// `n + 1` inserted into gap `site` (gaps numbered `1..=n+1` left to right).
    pub fn insert_max(&self, site: usize) -> Result<Self> {
        let n = self.len();
        if site == 0 || site > n + 1 {
            return Err(Error::InvalidArgument(format!(
                "site {site} outside 1..={}",
                n + 1
            )));
        }
        let mut v = Vec::with_capacity(n + 1);
        v.extend_from_slice(&self.0[..site - 1]);
        v.push(n as u32 + 1);
        v.extend_from_slice(&self.0[site - 1..]);
        Ok(Permutation(v))
    }
}

pub(crate) fn has_adjacent_consecutive_factor(p: &[u32]) -> bool {
    p.windows(2).any(|w| w[1] == w[0] + 1)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Space-separated values; a single run of digits such as `5462137` is
    /// read digit by digit.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let tokens: Vec<(usize, &str)> = tokens_with_offsets(s).collect();
        let values = if tokens.len() == 1
            && trimmed.len() > 1
            && trimmed.bytes().all(|b| b.is_ascii_digit())
        {
            let offset = s.len() - s.trim_start().len();
            trimmed
                .bytes()
                .enumerate()
                .map(|(i, b)| {
                    if b == b'0' {
                        Err(Error::parse(offset + i, "0 is not a permutation value"))
                    } else {
                        Ok(u32::from(b - b'0'))
                    }
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            tokens
                .into_iter()
                .map(|(pos, tok)| {
                    tok.parse::<u32>().map_err(|_| {
                        Error::parse(pos, format!("expected an integer, found {tok:?}"))
                    })
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values)
    }
}

/// Whitespace-separated tokens with their byte offsets.
pub(crate) fn tokens_with_offsets(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.split_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - s.as_ptr() as usize, tok))
}

impl TryFrom<Vec<u32>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl AsRef<[u32]> for Permutation {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

/// The three trivial symmetries of the permutation square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Reverse,
    Complement,
    Inverse,
}

impl Symmetry {
    pub const ALL: [Symmetry; 3] = [Symmetry::Reverse, Symmetry::Complement, Symmetry::Inverse];
}

/// Order-isomorphic relabelling of distinct integers onto `1..=m`.
pub fn reduce(q: &[i64]) -> Result<Permutation> {
    let mut order: Vec<usize> = (0..q.len()).collect();
    order.sort_by_key(|&i| q[i]);
    let mut out = vec![0u32; q.len()];
    for (rank, w) in order.iter().enumerate() {
        if rank > 0 && q[order[rank - 1]] == q[*w] {
            let value = u32::try_from(q[*w]).unwrap_or(u32::MAX);
            return Err(Error::DuplicateValue { value });
        }
        out[*w] = rank as u32 + 1;
    }
    Ok(Permutation(out))
}

/// Reduction that tolerates repeats: equal values share a rank and ranks are
/// dense, so `357136` becomes `235124`.
pub fn multiset_reduce(q: &[i64]) -> Vec<u32> {
    let mut distinct: Vec<i64> = q.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    q.iter()
        .map(|v| distinct.binary_search(v).expect("value present") as u32 + 1)
        .collect()
}

/// Reduction of an already-distinct `u32` slice into `out` (hot path).
pub(crate) fn reduce_into(q: &[u32], out: &mut Vec<u32>) {
    out.clear();
    out.extend(
        q.iter()
            .map(|&v| 1 + q.iter().filter(|&&w| w < v).count() as u32),
    );
}

/// `true` iff `a` and `b` have the same relative order.
pub(crate) fn order_isomorphic(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len()
        && (0..a.len()).all(|i| (i + 1..a.len()).all(|j| (a[i] < a[j]) == (b[i] < b[j])))
}

/// Blocks of a permutation, each starting at a left-to-right minimum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LtrmDecomposition {
    pub blocks: Vec<Vec<u32>>,
    /// 1-based positions where each block starts.
    pub ltrm_indices: Vec<usize>,
}

impl LtrmDecomposition {
    /// Block heads strictly decrease and every block strictly increases.
    pub fn satisfies_ltrm_conditions(&self) -> bool {
        let heads_decrease = self.blocks.windows(2).all(|w| w[0][0] > w[1][0]);
        let blocks_increase = self
            .blocks
            .iter()
            .all(|b| b.windows(2).all(|w| w[0] < w[1]));
        heads_decrease && blocks_increase
    }

    pub fn concat(&self) -> Vec<u32> {
        self.blocks.concat()
    }
}

impl fmt::Display for LtrmDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            f.write_str("(")?;
            for (i, v) in b.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Rearranges `p` into the next permutation in lexicographic order; returns
/// `false` (leaving `p` sorted) once the last one has been passed.
pub(crate) fn next_permutation(p: &mut [u32]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        p.reverse();
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Calls `visit` on every permutation of length `n` in lexicographic order.
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[u32])) {
    let mut p: Vec<u32> = (1..=n as u32).collect();
    loop {
        visit(&p);
        if !next_permutation(&mut p) {
            break;
        }
    }
}

/// All permutations of length `n`, lexicographic.
pub fn all_permutations(n: usize) -> AllPermutations {
    AllPermutations {
        next: Some((1..=n as u32).collect()),
    }
}

pub struct AllPermutations {
    next: Option<Vec<u32>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation(current))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_ranks_distinct_values() {
        assert_eq!(reduce(&[3, 5, 7, 1, 4, 6]).unwrap(), p("2 4 6 1 3 5"));
        assert_eq!(reduce(&[1, 2, 3, 4]).unwrap(), Permutation::identity(4));
        assert_eq!(reduce(&[]).unwrap(), Permutation::empty());
        assert_eq!(
            reduce(&[3, 5, 7, 1, 3, 6]),
            Err(Error::DuplicateValue { value: 3 })
        );
    }

    #[test]
    fn multiset_reduce_matches_dense_ranking() {
        assert_eq!(multiset_reduce(&[3, 5, 7, 1, 3, 6]), vec![2, 3, 5, 1, 2, 4]);
        assert_eq!(multiset_reduce(&[9, 9, 9]), vec![1, 1, 1]);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("5 4 6 2 1 3 7").as_slice(), &[5, 4, 6, 2, 1, 3, 7]);
        assert_eq!(p("5462137"), p("5 4 6 2 1 3 7"));
        assert_eq!(p(""), Permutation::empty());
        assert_eq!(p("1"), Permutation::identity(1));
        assert!(matches!(
            "1 x".parse::<Permutation>(),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            "1 3".parse::<Permutation>(),
            Err(Error::NotAPermutation { .. })
        ));
        assert!(matches!(
            "2 2".parse::<Permutation>(),
            Err(Error::DuplicateValue { value: 2 })
        ));
        assert!(matches!(
            "102".parse::<Permutation>(),
            Err(Error::Parse { position: 1, .. })
        ));
    }

    #[test]
    fn symmetries() {
        assert_eq!(p("123").reverse(), p("321"));
        assert_eq!(p("132").complement(), p("312"));
        assert_eq!(p("231").inverse(), p("312"));
        assert_eq!(Permutation::empty().inverse(), Permutation::empty());
    }

    #[test]
    fn ltrm_blocks() {
        let d = p("5462137").ltrm_decompose();
        assert_eq!(d.to_string(), "(5)(4 6)(2)(1 3 7)");
        assert_eq!(d.ltrm_indices, vec![1, 2, 4, 5]);
        assert!(d.satisfies_ltrm_conditions());

        let d = p("4321").ltrm_decompose();
        assert_eq!(d.blocks.len(), 4);
        let d = p("1234").ltrm_decompose();
        assert_eq!(d.blocks, vec![vec![1, 2, 3, 4]]);

        let d = p("231").ltrm_decompose();
        assert_eq!(d.to_string(), "(2 3)(1)");
        assert!(d.satisfies_ltrm_conditions());

        // block (1 3 2) is not increasing
        assert!(!p("132").ltrm_decompose().satisfies_ltrm_conditions());
        assert!(Permutation::empty().ltrm_decompose().blocks.is_empty());
    }

    #[test]
    fn adjacent_factor() {
        assert!(p("231").has_adjacent_consecutive_factor());
        assert!(!p("8 6 5 7 9 3 2 1 4 10").has_adjacent_consecutive_factor());
        assert!(!p("54321").has_adjacent_consecutive_factor());
    }

    #[test]
    fn run_embedding_examples() {
        assert_eq!(p("312").run_embedding(3).unwrap(), p("789123456"));
        assert_eq!(p("312").run_embedding(1).unwrap(), p("312"));
        assert_eq!(p("21").run_embedding(2).unwrap(), p("3412"));
        assert!(matches!(
            p("21").run_embedding(0),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn insert_max_sites() {
        assert_eq!(p("21").insert_max(1).unwrap(), p("321"));
        assert_eq!(p("21").insert_max(3).unwrap(), p("213"));
        assert_eq!(Permutation::empty().insert_max(1).unwrap(), p("1"));
        assert!(p("21").insert_max(4).is_err());
        assert!(p("21").insert_max(0).is_err());
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<String> = all_permutations(3).map(|p| p.to_compact_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(all_permutations(0).count(), 1);
        let mut count = 0;
        for_each_permutation(5, |_| count += 1);
        assert_eq!(count, 120);
    }
}
