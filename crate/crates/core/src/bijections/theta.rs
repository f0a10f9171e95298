use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::paths::{DyckWord, Step};
use crate::perm::{tokens_with_offsets, Permutation};

/// A Dyck path whose steps carry labels; each label marks one up step and
/// its matching down step.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexedDyckPath {
    steps: Vec<(Step, u32)>,
}

impl IndexedDyckPath {
    /// Builds and validates against the well-matching and labelling rules
    /// (see [`IndexedDyckPath::check_properties`]).
    pub fn new(steps: Vec<(Step, u32)>) -> Result<Self> {
        let path = IndexedDyckPath { steps };
        DyckWord::new(path.steps.iter().map(|&(s, _)| s).collect())?;
        path.check_properties()
            .map_err(|reason| Error::InvalidArgument(format!("indexed path: {reason}")))?;
        Ok(path)
    }

    pub fn steps(&self) -> &[(Step, u32)] {
        &self.steps
    }

    pub fn unlabeled(&self) -> DyckWord {
        DyckWord::from_steps_unchecked(self.steps.iter().map(|&(s, _)| s).collect())
    }

    /// Labels of the up steps, left to right.
    pub fn up_labels(&self) -> Vec<u32> {
        self.steps
            .iter()
            .filter(|(s, _)| *s == Step::Up)
            .map(|&(_, l)| l)
            .collect()
    }

    /// Checks the structural properties every `theta` image has:
    ///
    /// * labels are `1..=n`, each on exactly one up step and the down step
    ///   that matches it;
    /// * (i) of two nested pairs, the inner one has the smaller label;
    /// * (ii) a peak `ud` carries equal labels;
    /// * (iii) a valley `du` carries labels `k-1, k`.
    pub fn check_properties(&self) -> std::result::Result<(), String> {
        let n = self.steps.len() / 2;
        let mut stack: Vec<u32> = Vec::new();
        let mut seen = vec![false; n + 1];
        for (pos, &(s, label)) in self.steps.iter().enumerate() {
            if label == 0 || label as usize > n {
                return Err(format!("label {label} at step {pos} outside 1..={n}"));
            }
            match s {
                Step::Up => {
                    if std::mem::replace(&mut seen[label as usize], true) {
                        return Err(format!("label {label} used on two up steps"));
                    }
                    if let Some(&outer) = stack.last() {
                        if outer < label {
                            return Err(format!("pair {label} nested inside smaller pair {outer}"));
                        }
                    }
                    stack.push(label);
                }
                Step::Down => match stack.pop() {
                    Some(open) if open == label => {}
                    Some(open) => {
                        return Err(format!(
                            "down step {pos} labelled {label} closes pair {open}"
                        ))
                    }
                    None => return Err(format!("down step {pos} has no matching up step")),
                },
                Step::Flat => return Err("flat step in a Dyck path".into()),
            }
        }
        for (pos, w) in self.steps.windows(2).enumerate() {
            match (w[0], w[1]) {
                ((Step::Up, a), (Step::Down, b)) if a != b => {
                    return Err(format!("peak at step {} labelled {a},{b}", pos + 1))
                }
                ((Step::Down, a), (Step::Up, b)) if b != a + 1 => {
                    return Err(format!("valley at step {} labelled {a},{b}", pos + 1))
                }
                _ => {}
            }
        }
        Ok(())
    }
}

impl fmt::Display for IndexedDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (s, l)) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{l}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for IndexedDyckPath {
    type Err = Error;

    /// Tokens such as `u4 d4 u5 ...`.
    fn from_str(s: &str) -> Result<Self> {
        let steps = tokens_with_offsets(s)
            .map(|(pos, tok)| {
                let mut chars = tok.chars();
                let step = chars
                    .next()
                    .and_then(Step::from_char)
                    .filter(|&st| st != Step::Flat)
                    .ok_or_else(|| Error::parse(pos, format!("bad step token {tok:?}")))?;
                let label = chars
                    .as_str()
                    .parse::<u32>()
                    .map_err(|_| Error::parse(pos + 1, format!("bad label in {tok:?}")))?;
                Ok((step, label))
            })
            .collect::<Result<Vec<_>>>()?;
        IndexedDyckPath::new(steps)
    }
}

/// `theta(A) = theta(A_left) u_m theta(A_right) d_m` with `m = max(A)`.
pub fn theta(pi: &Permutation) -> IndexedDyckPath {
    fn go(seq: &[u32], out: &mut Vec<(Step, u32)>) {
        let Some((at, &m)) = seq.iter().enumerate().max_by_key(|&(_, v)| v) else {
            return;
        };
        go(&seq[..at], out);
        out.push((Step::Up, m));
        go(&seq[at + 1..], out);
        out.push((Step::Down, m));
    }
    let mut steps = Vec::with_capacity(2 * pi.len());
    go(pi.as_slice(), &mut steps);
    IndexedDyckPath { steps }
}

/// The unique labelling of `w` that `theta` produces from a 132-avoider.
///
/// The last down step and its matching up step take the largest available
/// value; the enclosed segment recurses on the smallest values, the prefix on
/// the rest.
pub fn label_dyck(w: &DyckWord) -> IndexedDyckPath {
    fn go(steps: &[Step], labels: &mut [u32], values: &[u32]) {
        if steps.is_empty() {
            return;
        }
        let last = steps.len() - 1;
        let mut depth = 0usize;
        let mut open = last;
        for j in (0..last).rev() {
            match steps[j] {
                Step::Down => depth += 1,
                _ if depth == 0 => {
                    open = j;
                    break;
                }
                _ => depth -= 1,
            }
        }
        let m = *values.last().expect("values match semilength");
        labels[open] = m;
        labels[last] = m;
        let inner = (last - open - 1) / 2;
        let (inner_vals, rest) = values[..values.len() - 1].split_at(inner);
        let (prefix_labels, tail) = labels.split_at_mut(open);
        go(
            &steps[open + 1..last],
            &mut tail[1..last - open],
            inner_vals,
        );
        go(&steps[..open], prefix_labels, rest);
    }
    let steps = w.steps();
    let values: Vec<u32> = (1..=w.semilength() as u32).collect();
    let mut labels = vec![0u32; steps.len()];
    go(steps, &mut labels, &values);
    IndexedDyckPath {
        steps: steps.iter().copied().zip(labels).collect(),
    }
}

/// Reads the up-step labels of [`label_dyck`].
pub fn theta_inverse(w: &DyckWord) -> Permutation {
    Permutation::from_vec_unchecked(label_dyck(w).up_labels())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::enumerate_dyck;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(
            theta(&p("452361")).to_string(),
            "u4 d4 u5 u2 d2 u3 d3 d5 u6 u1 d1 d6"
        );
        assert_eq!(theta(&p("1")).to_string(), "u1 d1");
        let t = theta(&p("5462137"));
        assert_eq!(t.to_string(), "u5 u4 d4 d5 u6 u2 u1 d1 d2 u3 d3 d6 u7 d7");
        assert_eq!(t.unlabeled().to_string(), "uudduuudduddud");
        assert!(!t.unlabeled().contains_u_dpow_u(3).unwrap());
    }

    #[test]
    fn inverse_examples() {
        let w = theta(&p("452361")).unlabeled();
        assert_eq!(theta_inverse(&w), p("452361"));
        assert_eq!(theta_inverse(&"ud".parse().unwrap()), p("1"));
        assert_eq!(theta_inverse(&"uuuddd".parse().unwrap()), p("321"));
        assert_eq!(theta_inverse(&DyckWord::empty()), Permutation::empty());
    }

    #[test]
    fn labelling_roundtrip_small() {
        for n in 0..=7 {
            for w in enumerate_dyck(n) {
                let labelled = label_dyck(&w);
                assert_eq!(theta(&theta_inverse(&w)), labelled, "{w}");
                assert_eq!(labelled.check_properties(), Ok(()));
            }
        }
    }

    #[test]
    fn parse_and_validate() {
        let t: IndexedDyckPath = "u4 d4 u5 u2 d2 u3 d3 d5 u6 u1 d1 d6".parse().unwrap();
        assert_eq!(t, theta(&p("452361")));
        // a peak with mismatched labels
        assert!("u1 u2 d1 d2".parse::<IndexedDyckPath>().is_err());
        // larger pair nested inside a smaller one
        assert!("u1 u2 d2 d1".parse::<IndexedDyckPath>().is_err());
        // valley labels must step by one
        assert!("u1 d1 u3 u2 d2 d3".parse::<IndexedDyckPath>().is_err());
        assert!(matches!(
            "x1 d1".parse::<IndexedDyckPath>(),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(
            "u1 dd".parse::<IndexedDyckPath>(),
            Err(Error::Parse { position: 4, .. })
        ));
    }
}
