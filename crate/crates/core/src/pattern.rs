//! Classical, barred and hatted pattern avoidance.
//!
//! A marked pattern `tau_(i)` singles out one entry of `tau`. Write `rho` for
//! the reduction of `tau` with that entry removed. A permutation avoids the
//! marked pattern when every occurrence of `rho` extends to an occurrence of
//! `tau` by adding one more entry:
//!
//! * **barred**: the added entry must sit strictly between the entries that
//!   play the roles of `tau_{i-1}` and `tau_{i+1}`, i.e. it takes exactly the
//!   marked role;
//! * **hatted**: the added entry may sit anywhere, as long as the occurrence of
//!   `rho` is a subset of the resulting occurrence of `tau`.
//!
//! Every barred avoider is a hatted avoider. The checkers here enumerate all
//! occurrences of `rho` and then try every single extra index, which makes
//! them usable as oracles.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{order_isomorphic, reduce_into, Permutation};

/// Which entry of a pattern is marked, and how. Positions are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Mark {
    None,
    Bar(usize),
    Hat(usize),
}

impl Mark {
    pub fn position(self) -> Option<usize> {
        match self {
            Mark::None => None,
            Mark::Bar(i) | Mark::Hat(i) => Some(i),
        }
    }
}

/// A permutation pattern with at most one marked entry.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MarkedPattern {
    pattern: Permutation,
    mark: Mark,
}

impl MarkedPattern {
    pub fn new(pattern: Permutation, mark: Mark) -> Result<Self> {
        if pattern.is_empty() {
            return Err(Error::InvalidArgument("pattern must be non-empty".into()));
        }
        if let Some(i) = mark.position() {
            if i == 0 || i > pattern.len() {
                return Err(Error::InvalidArgument(format!(
                    "marked position {i} outside 1..={}",
                    pattern.len()
                )));
            }
        }
        Ok(MarkedPattern { pattern, mark })
    }

    pub fn classical(pattern: Permutation) -> Result<Self> {
        Self::new(pattern, Mark::None)
    }

    pub fn hat(pattern: Permutation, position: usize) -> Result<Self> {
        Self::new(pattern, Mark::Hat(position))
    }

    pub fn bar(pattern: Permutation, position: usize) -> Result<Self> {
        Self::new(pattern, Mark::Bar(position))
    }

    pub fn pattern(&self) -> &Permutation {
        &self.pattern
    }

    pub fn mark(&self) -> Mark {
        self.mark
    }

    pub fn len(&self) -> usize {
        self.pattern.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pattern.is_empty()
    }

    /// Same pattern and position under a different mark kind.
    pub fn with_mark(&self, mark: Mark) -> Result<Self> {
        Self::new(self.pattern.clone(), mark)
    }

    /// `red(tau \ tau_i)`; `None` for an unmarked pattern.
    pub fn reduced_remainder(&self) -> Option<Permutation> {
        self.mark
            .position()
            .map(|i| remove_and_reduce(self.pattern.as_slice(), i))
    }

    pub fn is_avoided_by(&self, pi: &Permutation) -> bool {
        self.is_avoided_by_slice(pi.as_slice())
    }

    pub(crate) fn is_avoided_by_slice(&self, pi: &[u32]) -> bool {
        let tau = self.pattern.as_slice();
        match self.mark {
            Mark::None => !contains_slice(pi, tau),
            Mark::Bar(i) => avoids_marked(pi, tau, i, Extension::Barred),
            Mark::Hat(i) => avoids_marked(pi, tau, i, Extension::Hatted),
        }
    }

    /// See [`neighbor_condition_holds`]; `None` for an unmarked pattern.
    pub fn neighbor_condition_holds(&self) -> Option<bool> {
        self.mark
            .position()
            .map(|i| neighbor_condition_holds(&self.pattern, i))
    }
}

impl fmt::Display for MarkedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (sym, pos) = match self.mark {
            Mark::None => ("", None),
            Mark::Bar(i) => ("-", Some(i)),
            Mark::Hat(i) => ("^", Some(i)),
        };
        if self.pattern.len() <= 9 {
            for (idx, v) in self.pattern.as_slice().iter().enumerate() {
                if Some(idx + 1) == pos {
                    f.write_str(sym)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.pattern)?;
            match self.mark {
                Mark::None => Ok(()),
                Mark::Bar(i) => write!(f, ";bar:{i}"),
                Mark::Hat(i) => write!(f, ";hat:{i}"),
            }
        }
    }
}

impl FromStr for MarkedPattern {
    type Err = Error;

    /// Compact form `2^13` / `2-13` / `132` (one digit per entry), or the
    /// long form `10 9 8 7 6 5 4 3 2 1;hat:3`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.contains(';') || t.contains(char::is_whitespace) {
            parse_long(s)
        } else {
            parse_compact(s)
        }
    }
}

fn parse_compact(s: &str) -> Result<MarkedPattern> {
    let mut values = Vec::new();
    let mut mark = Mark::None;
    let mut pending: Option<(char, usize)> = None;
    let offset = s.len() - s.trim_start().len();
    for (i, c) in s.trim().char_indices() {
        let pos = offset + i;
        match c {
            '^' | '-' => {
                if pending.is_some() || mark != Mark::None {
                    return Err(Error::parse(pos, "at most one marked entry"));
                }
                pending = Some((c, pos));
            }
            '1'..='9' => {
                values.push(c as u32 - '0' as u32);
                if let Some((m, _)) = pending.take() {
                    let k = values.len();
                    mark = if m == '^' { Mark::Hat(k) } else { Mark::Bar(k) };
                }
            }
            _ => return Err(Error::parse(pos, format!("unexpected character {c:?}"))),
        }
    }
    if let Some((_, pos)) = pending {
        return Err(Error::parse(pos, "mark must precede an entry"));
    }
    MarkedPattern::new(Permutation::new(values)?, mark)
}

fn parse_long(s: &str) -> Result<MarkedPattern> {
    let (body, mark_field) = match s.split_once(';') {
        Some((b, m)) => (b, Some((b.len() + 1, m))),
        None => (s, None),
    };
    let pattern: Permutation = body.parse()?;
    let mark = match mark_field {
        None => Mark::None,
        Some((at, field)) => {
            let (kind, pos) = field
                .trim()
                .split_once(':')
                .ok_or_else(|| Error::parse(at, "expected hat:POS or bar:POS"))?;
            let pos: usize = pos
                .trim()
                .parse()
                .map_err(|_| Error::parse(at, format!("bad mark position {pos:?}")))?;
            match kind.trim() {
                "hat" => Mark::Hat(pos),
                "bar" => Mark::Bar(pos),
                other => return Err(Error::parse(at, format!("unknown mark kind {other:?}"))),
            }
        }
    };
    MarkedPattern::new(pattern, mark)
}

/// Comma-separated list of marked patterns, e.g. `132,2^13`.
pub fn parse_pattern_list(s: &str) -> Result<Vec<MarkedPattern>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in s.split(',') {
        let p = part.parse::<MarkedPattern>().map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse {
                position: position + offset,
                message,
            },
            other => other,
        })?;
        out.push(p);
        offset += part.len() + 1;
    }
    Ok(out)
}

/// True iff some subsequence of `pi` is order-isomorphic to `tau`.
pub fn contains_classical(pi: &Permutation, tau: &Permutation) -> bool {
    contains_slice(pi.as_slice(), tau.as_slice())
}

pub(crate) fn contains_slice(pi: &[u32], tau: &[u32]) -> bool {
    !for_each_occurrence(pi, tau, &mut |_| false)
}

/// `pi` avoids `tau` with entry `position` barred.
pub fn avoids_barred(pi: &Permutation, tau: &Permutation, position: usize) -> bool {
    assert_position(tau, position);
    avoids_marked(pi.as_slice(), tau.as_slice(), position, Extension::Barred)
}

/// `pi` avoids `tau` with entry `position` hatted.
pub fn avoids_hatted(pi: &Permutation, tau: &Permutation, position: usize) -> bool {
    assert_position(tau, position);
    avoids_marked(pi.as_slice(), tau.as_slice(), position, Extension::Hatted)
}

fn assert_position(tau: &Permutation, position: usize) {
    assert!(
        (1..=tau.len()).contains(&position),
        "marked position {position} outside 1..={}",
        tau.len()
    );
}

/// The marked entry differs by more than one from each existing neighbour.
/// Missing neighbours (first or last entry) impose no condition.
pub fn neighbor_condition_holds(tau: &Permutation, position: usize) -> bool {
    assert_position(tau, position);
    let t = tau.as_slice();
    let v = t[position - 1];
    let near = |w: u32| v.abs_diff(w) == 1;
    let left = position >= 2 && near(t[position - 2]);
    let right = position < t.len() && near(t[position]);
    !(left || right)
}

fn remove_and_reduce(tau: &[u32], position: usize) -> Permutation {
    let rest: Vec<u32> = tau
        .iter()
        .enumerate()
        .filter(|&(j, _)| j + 1 != position)
        .map(|(_, &v)| v)
        .collect();
    let mut out = Vec::new();
    reduce_into(&rest, &mut out);
    Permutation::from_vec_unchecked(out)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Extension {
    Barred,
    Hatted,
}

fn avoids_marked(pi: &[u32], tau: &[u32], position: usize, ext: Extension) -> bool {
    let rho = remove_and_reduce(tau, position);
    let n = pi.len();
    let mut merged = Vec::with_capacity(tau.len());
    for_each_occurrence(pi, rho.as_slice(), &mut |occ| {
        let (lo, hi) = match ext {
            Extension::Hatted => (0, n),
            Extension::Barred => (
                if position >= 2 {
                    occ[position - 2] + 1
                } else {
                    0
                },
                occ.get(position - 1).copied().unwrap_or(n),
            ),
        };
        (lo..hi).any(|t| {
            if occ.binary_search(&t).is_ok() {
                return false;
            }
            merged.clear();
            let split = occ.partition_point(|&j| j < t);
            merged.extend(occ[..split].iter().map(|&j| pi[j]));
            merged.push(pi[t]);
            merged.extend(occ[split..].iter().map(|&j| pi[j]));
            order_isomorphic(&merged, tau)
        })
    })
}

/// Visits every increasing index tuple of `text` whose values are
/// order-isomorphic to `pat`. Stops as soon as `visit` returns `false`;
/// the return value is `false` iff the walk was stopped.
pub(crate) fn for_each_occurrence(
    text: &[u32],
    pat: &[u32],
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let mut idx = Vec::with_capacity(pat.len());
    walk(text, pat, &mut idx, visit)
}

fn walk(
    text: &[u32],
    pat: &[u32],
    idx: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let p = idx.len();
    if p == pat.len() {
        return visit(idx);
    }
    let remaining = pat.len() - p;
    if text.len() < remaining {
        return true;
    }
    let start = idx.last().map_or(0, |&l| l + 1);
    for j in start..=text.len() - remaining {
        let fits = idx
            .iter()
            .zip(pat)
            .all(|(&q, &pq)| (text[q] < text[j]) == (pq < pat[p]));
        if fits {
            idx.push(j);
            let go_on = walk(text, pat, idx, visit);
            idx.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}
