//! Brute-force enumeration of avoidance classes and the number sequences the
//! bijections are checked against.
//!
//! Nothing here uses the bijections: classes come from filtering all of
//! `S_n`, Catalan numbers from the binomial closed form, Motzkin numbers from
//! their convolution recurrence and Fine numbers from filtering Dyck paths.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::paths::enumerate_dyck;
use crate::pattern::{neighbor_condition_holds, parse_pattern_list, Mark, MarkedPattern};
use crate::perm::{for_each_permutation, Permutation};

/// `S_n(T)`: length and the patterns to avoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceClassSpec {
    pub n: usize,
    pub constraints: Vec<MarkedPattern>,
}

impl AvoidanceClassSpec {
    pub fn new(n: usize, constraints: Vec<MarkedPattern>) -> Self {
        AvoidanceClassSpec { n, constraints }
    }

    /// `n` plus a comma-separated pattern list such as `132,2^13`.
    pub fn parse(n: usize, patterns: &str) -> Result<Self> {
        Ok(Self::new(n, parse_pattern_list(patterns)?))
    }

    pub fn admits(&self, pi: &Permutation) -> bool {
        avoids_all(pi.as_slice(), &self.constraints)
    }

    pub fn enumerate(&self) -> Vec<Permutation> {
        enumerate_class(self)
    }

    pub fn count(&self) -> u64 {
        let mut c = 0u64;
        for_each_permutation(self.n, |p| {
            if avoids_all(p, &self.constraints) {
                c += 1;
            }
        });
        c
    }
}

fn avoids_all(p: &[u32], constraints: &[MarkedPattern]) -> bool {
    constraints.iter().all(|c| c.is_avoided_by_slice(p))
}

/// Every permutation of `S_n` avoiding all constraints, lexicographic.
pub fn enumerate_class(spec: &AvoidanceClassSpec) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_permutation(spec.n, |p| {
        if avoids_all(p, &spec.constraints) {
            out.push(Permutation::from_vec_unchecked(p.to_vec()));
        }
    });
    out
}

/// Keeps the members of `perms` that avoid every constraint.
pub fn refine(perms: &[Permutation], constraints: &[MarkedPattern]) -> Vec<Permutation> {
    perms
        .iter()
        .filter(|p| avoids_all(p.as_slice(), constraints))
        .cloned()
        .collect()
}

/// `binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> Result<u64> {
    let mut b: u128 = 1;
    let two_n = 2 * n as u128;
    for i in 0..n as u128 {
        b = b.checked_mul(two_n - i).ok_or(Error::Overflow("catalan"))? / (i + 1);
    }
    u64::try_from(b / (n as u128 + 1)).map_err(|_| Error::Overflow("catalan"))
}

/// `M_n = M_{n-1} + sum_{k=0}^{n-2} M_k M_{n-2-k}`, `M_0 = 1`.
pub fn motzkin_number(n: usize) -> Result<u64> {
    let mut m: Vec<u64> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let v = if i == 0 {
            1
        } else {
            let mut acc = m[i - 1];
            for k in 0..i.saturating_sub(1) {
                let term = m[k]
                    .checked_mul(m[i - 2 - k])
                    .ok_or(Error::Overflow("motzkin"))?;
                acc = acc.checked_add(term).ok_or(Error::Overflow("motzkin"))?;
            }
            acc
        };
        m.push(v);
    }
    Ok(m[n])
}

/// Dyck paths of semilength `n` with no peak at height 1, counted by brute
/// force (exponential in `n`).
pub fn fine_number(n: usize) -> u64 {
    enumerate_dyck(n)
        .filter(|w| !w.has_peak_at_height(1))
        .count() as u64
}

/// `^12...(p+1)`: hatted increasing pattern of length `p + 1`, hat on the 1.
pub fn increasing_hat_first(p: usize) -> MarkedPattern {
    MarkedPattern::hat(Permutation::identity(p + 1), 1).expect("non-empty")
}

/// `(p-1)(p-2)...2 ^1 p` for `p >= 2`.
pub fn descending_hat_one(p: usize) -> MarkedPattern {
    let mut v: Vec<u32> = (1..p as u32).rev().collect();
    v.push(p as u32);
    MarkedPattern::hat(Permutation::from_vec_unchecked(v), p - 1).expect("p >= 2")
}

/// `1 ^p (p-1) ... 2` for `p >= 2`.
pub fn one_hat_descending(p: usize) -> MarkedPattern {
    let mut v = vec![1u32];
    v.extend((2..=p as u32).rev());
    MarkedPattern::hat(Permutation::from_vec_unchecked(v), 2).expect("p >= 2")
}

/// Whether hatted and barred avoidance of `tau` at `position` agree on every
/// permutation of length `1..=n_max` exactly when the neighbour condition
/// holds.
pub fn check_prop_equ(tau: &Permutation, position: usize, n_max: usize) -> bool {
    hat_equals_bar_up_to(tau, position, n_max) == neighbor_condition_holds(tau, position)
}

/// First length at which hatted and barred avoidance disagree, with a
/// witness permutation.
pub fn hat_bar_witness(tau: &Permutation, position: usize, n_max: usize) -> Option<Permutation> {
    let hat = MarkedPattern::hat(tau.clone(), position).ok()?;
    let bar = MarkedPattern::bar(tau.clone(), position).ok()?;
    for n in 1..=n_max {
        let mut witness = None;
        for_each_permutation(n, |p| {
            if witness.is_none() && hat.is_avoided_by_slice(p) != bar.is_avoided_by_slice(p) {
                witness = Some(Permutation::from_vec_unchecked(p.to_vec()));
            }
        });
        if witness.is_some() {
            return witness;
        }
    }
    None
}

fn hat_equals_bar_up_to(tau: &Permutation, position: usize, n_max: usize) -> bool {
    hat_bar_witness(tau, position, n_max).is_none()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthRow {
    pub n: usize,
    pub count: u64,
    /// `count(n) / count(n - 1)`, when both exist and the divisor is non-zero.
    pub ratio: Option<f64>,
}

/// Class sizes for `n = 1..=n_max` of one marked pattern. Purely descriptive.
pub fn growth_table(pattern: &MarkedPattern, n_max: usize) -> Vec<GrowthRow> {
    let mut rows: Vec<GrowthRow> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let count = AvoidanceClassSpec::new(n, vec![pattern.clone()]).count();
        let ratio = rows
            .last()
            .filter(|r| r.count > 0)
            .map(|r| count as f64 / r.count as f64);
        rows.push(GrowthRow { n, count, ratio });
    }
    rows
}

/// Counts `|S_n(T)|` for `n = 1..=n_max`.
pub fn class_counts(constraints: &[MarkedPattern], n_max: usize) -> Vec<(usize, u64)> {
    (1..=n_max)
        .map(|n| (n, AvoidanceClassSpec::new(n, constraints.to_vec()).count()))
        .collect()
}

/// `(tau, position)` for every pattern of length `k` and every entry.
pub fn all_marked_positions(k: usize) -> Vec<(Permutation, usize)> {
    crate::perm::all_permutations(k)
        .flat_map(|tau| (1..=k).map(move |i| (tau.clone(), i)))
        .collect()
}

/// Hatted version of a pattern with the mark moved to `position`.
pub fn hatted(tau: &Permutation, position: usize) -> MarkedPattern {
    MarkedPattern::new(tau.clone(), Mark::Hat(position)).expect("position in range")
}
