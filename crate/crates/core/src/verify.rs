//! Exhaustive check suites, one per result, used by the `verify` command.
//!
//! Each suite walks every size up to a bound and compares a bijection's image
//! (or a structural claim) against a brute-force computation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::bijections::{
    phi, psi, psi_inverse, right_greater_counts, theta, GeometricRepresentation,
};
use crate::eco::{expand_level, verify_succession};
use crate::error::{Error, Result};
use crate::oracle::{
    all_marked_positions, check_prop_equ, descending_hat_one, enumerate_class,
    increasing_hat_first, motzkin_number, refine, AvoidanceClassSpec,
};
use crate::paths::{enumerate_dyck, enumerate_motzkin, DyckWord};
use crate::pattern::{neighbor_condition_holds, MarkedPattern};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// `phi` maps `S_n(132, ^12...(p+1))` onto paths with no peak at height `p`.
    Cat,
    /// `theta` maps `S_n(132, (p-1)...2^1p)` onto paths with no `u d^(p-2) u`.
    Udu,
    /// `S_n(132, 2^13)` is the set of 132-avoiders with no factor `a(a+1)`.
    Fac,
    /// `psi` is a bijection from Motzkin paths onto `S_{n+1}(132, 2^13)`.
    Mot,
    /// Hatted and barred classes coincide exactly under the neighbour condition.
    Equ,
    /// Motzkin generating tree levels and succession labels.
    Eco,
    /// Peaks of `phi(pi)` are the left-to-right minima of `pi`, at height `h_i + 1`.
    Sta,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::Cat,
        Theorem::Udu,
        Theorem::Fac,
        Theorem::Mot,
        Theorem::Equ,
        Theorem::Eco,
        Theorem::Sta,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Cat => "cat",
            Theorem::Udu => "udu",
            Theorem::Fac => "fac",
            Theorem::Mot => "mot",
            Theorem::Equ => "equ",
            Theorem::Eco => "eco",
            Theorem::Sta => "sta",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown theorem {s:?}")))
    }
}

/// Outcome of one suite: one line per size checked, plus any failures.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub lines: Vec<String>,
    pub failures: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, line: String) {
        if ok {
            self.lines.push(format!("ok   {line}"));
        } else {
            self.lines.push(format!("FAIL {line}"));
            self.failures.push(line);
        }
    }
}

pub fn run(theorem: Theorem, n_max: usize) -> Report {
    match theorem {
        Theorem::Cat => verify_cat(n_max),
        Theorem::Udu => verify_udu(n_max),
        Theorem::Fac => verify_fac(n_max),
        Theorem::Mot => verify_mot(n_max),
        Theorem::Equ => verify_equ(n_max),
        Theorem::Eco => verify_eco(n_max),
        Theorem::Sta => verify_sta(n_max),
    }
}

fn avoiders_132(n: usize) -> Vec<Permutation> {
    enumerate_class(&AvoidanceClassSpec::new(
        n,
        vec!["132".parse().expect("valid")],
    ))
}

fn dyck_set(n: usize, keep: impl Fn(&DyckWord) -> bool) -> BTreeSet<DyckWord> {
    enumerate_dyck(n).filter(|w| keep(w)).collect()
}

pub fn verify_cat(n_max: usize) -> Report {
    let mut r = Report::default();
    for n in 1..=n_max {
        let base = avoiders_132(n);
        for p in 1..=n {
            let class = refine(&base, &[increasing_hat_first(p)]);
            let image: BTreeSet<DyckWord> = class
                .iter()
                .map(|pi| phi(pi).expect("132-avoider"))
                .collect();
            let target = dyck_set(n, |w| !w.has_peak_at_height(p));
            let ok = image.len() == class.len() && image == target;
            r.check(
                ok,
                format!(
                    "n={n} p={p} |class|={} |paths|={}",
                    class.len(),
                    target.len()
                ),
            );
        }
    }
    r
}

pub fn verify_udu(n_max: usize) -> Report {
    let mut r = Report::default();
    for n in 3..=n_max {
        let base = avoiders_132(n);
        for p in 3..=n {
            let class = refine(&base, &[descending_hat_one(p)]);
            let image: BTreeSet<DyckWord> = class.iter().map(|pi| theta(pi).unlabeled()).collect();
            let target = dyck_set(n, |w| !w.contains_u_dpow_u(p).expect("p >= 3"));
            let ok = image.len() == class.len() && image == target;
            r.check(
                ok,
                format!(
                    "n={n} p={p} |class|={} |paths|={}",
                    class.len(),
                    target.len()
                ),
            );
        }
    }
    r
}

fn hat_213() -> MarkedPattern {
    "2^13".parse().expect("valid")
}

pub fn verify_fac(n_max: usize) -> Report {
    let mut r = Report::default();
    for n in 0..=n_max {
        let base = avoiders_132(n);
        let hatted = refine(&base, &[hat_213()]);
        let factor_free: Vec<Permutation> = base
            .iter()
            .filter(|p| !p.has_adjacent_consecutive_factor())
            .cloned()
            .collect();
        r.check(
            hatted == factor_free,
            format!("n={n} |class|={}", hatted.len()),
        );
    }
    r
}

pub fn verify_mot(n_max: usize) -> Report {
    let mut r = Report::default();
    for len in 0..=n_max {
        let target: BTreeSet<Permutation> = refine(&avoiders_132(len + 1), &[hat_213()])
            .into_iter()
            .collect();
        let mut image = BTreeSet::new();
        let mut ok = true;
        for w in enumerate_motzkin(len) {
            let pi = psi(&w);
            ok &= psi_inverse(&pi).as_ref() == Ok(&w);
            image.insert(pi);
        }
        for pi in &target {
            ok &= psi_inverse(pi).map(|w| psi(&w) == *pi).unwrap_or(false);
        }
        ok &= image == target;
        r.check(ok, format!("length={len} |paths|={}", image.len()));
    }
    r
}

pub fn verify_equ(n_max: usize) -> Report {
    let mut r = Report::default();
    for k in 2..=4 {
        for (tau, i) in all_marked_positions(k) {
            let ok = check_prop_equ(&tau, i, n_max);
            let cond = neighbor_condition_holds(&tau, i);
            r.check(ok, format!("tau={tau} i={i} condition={cond}"));
        }
    }
    r
}

pub fn verify_eco(n_max: usize) -> Report {
    let mut r = Report::default();
    for level in 1..=n_max {
        let nodes = expand_level(level);
        let expected = motzkin_number(level).unwrap_or(0);
        let succession = nodes.iter().all(verify_succession);
        let perms: BTreeSet<Permutation> = nodes.iter().map(|n| n.perm.clone()).collect();
        let class: BTreeSet<Permutation> = refine(&avoiders_132(level + 1), &[hat_213()])
            .into_iter()
            .collect();
        let ok = nodes.len() as u64 == expected && succession && perms == class;
        r.check(ok, format!("level={level} nodes={}", nodes.len()));
    }
    r
}

/// Peaks of `phi(pi)`, read left to right, sit exactly at the left-to-right
/// minima, with heights `h_i + 1`.
pub fn peaks_match_minima(pi: &Permutation) -> bool {
    let Ok(w) = phi(pi) else { return false };
    let h = right_greater_counts(pi.as_slice());
    let expected: Vec<(usize, usize)> = pi
        .ltr_minima_positions()
        .into_iter()
        .map(|i| (i, h[i] + 1))
        .collect();
    let steps = w.steps();
    let actual: Vec<(usize, usize)> = w
        .stats()
        .peaks
        .iter()
        .map(|v| {
            // the down step leaving the peak is the one emitted for that entry
            let downs_before = steps[..v.position]
                .iter()
                .filter(|&&s| s == crate::paths::Step::Down)
                .count();
            (downs_before, v.height)
        })
        .collect();
    actual == expected
}

pub fn verify_sta(n_max: usize) -> Report {
    let mut r = Report::default();
    for n in 0..=n_max {
        let base = avoiders_132(n);
        let ok = base.iter().all(peaks_match_minima);
        r.check(ok, format!("n={n} |S_n(132)|={}", base.len()));
    }
    r
}

/// For a permutation with a geometric representation, 132-avoidance is
/// equivalent to non-overlapping blocks.
pub fn overlap_criterion_holds(pi: &Permutation) -> Option<bool> {
    let geo = GeometricRepresentation::from_permutation(pi).ok()?;
    let avoids = "132"
        .parse::<MarkedPattern>()
        .expect("valid")
        .is_avoided_by(pi);
    Some(avoids == !geo.blocks_overlap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_roundtrip() {
        for t in Theorem::ALL {
            assert_eq!(t.name().parse::<Theorem>().unwrap(), t);
        }
        assert!("nope".parse::<Theorem>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        for t in Theorem::ALL {
            let n = match t {
                Theorem::Equ => 5,
                Theorem::Udu => 4,
                _ => 6,
            };
            let r = run(t, n);
            assert!(r.passed(), "{t}: {:?}", r.failures);
            assert!(!r.lines.is_empty());
        }
    }

    #[test]
    fn udu_breaks_first_at_p5() {
        let r = verify_udu(5);
        assert_eq!(r.failures, ["n=5 p=5 |class|=34 |paths|=36"]);
    }

    #[test]
    fn report_records_failures() {
        let mut r = Report::default();
        r.check(true, "a".into());
        r.check(false, "b".into());
        assert!(!r.passed());
        assert_eq!(r.lines, ["ok   a", "FAIL b"]);
    }
}
