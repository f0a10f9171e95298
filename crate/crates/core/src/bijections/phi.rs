use crate::error::{Error, Result};
use crate::paths::{DyckWord, Step};
use crate::perm::Permutation;

use super::require_avoids;

/// `h_i`: how many entries after position `i` are larger than `pi_i`.
pub fn right_greater_counts(pi: &[u32]) -> Vec<usize> {
    (0..pi.len())
        .map(|i| pi[i + 1..].iter().filter(|&&v| v > pi[i]).count())
        .collect()
}

/// Reads `pi` left to right: for each entry climb to height `h_i + 1`, then
/// take one down step.
pub fn phi(pi: &Permutation) -> Result<DyckWord> {
    require_avoids(pi, &[1, 3, 2], "phi")?;
    let mut steps = Vec::with_capacity(2 * pi.len());
    let mut height = 0;
    for h in right_greater_counts(pi.as_slice()) {
        let target = h + 1;
        if height > target {
            return Err(Error::domain("phi", "reading rule would descend"));
        }
        steps.extend(std::iter::repeat_n(Step::Up, target - height));
        steps.push(Step::Down);
        height = h;
    }
    Ok(DyckWord::from_steps_unchecked(steps))
}

/// `phi(A) = u phi(A_left) d phi(A_right)`, splitting at the maximum.
pub fn phi_recursive(pi: &Permutation) -> Result<DyckWord> {
    require_avoids(pi, &[1, 3, 2], "phi")?;
    fn go(seq: &[u32], out: &mut Vec<Step>) {
        let Some((m, _)) = seq.iter().enumerate().max_by_key(|&(_, v)| v) else {
            return;
        };
        out.push(Step::Up);
        go(&seq[..m], out);
        out.push(Step::Down);
        go(&seq[m + 1..], out);
    }
    let mut steps = Vec::with_capacity(2 * pi.len());
    go(pi.as_slice(), &mut steps);
    Ok(DyckWord::from_steps_unchecked(steps))
}

/// The height after the `i`-th down step is `h_i`; decoding those counts
/// greedily (largest-first among the unused values) recovers `pi`.
pub fn phi_inverse(w: &DyckWord) -> Permutation {
    let n = w.semilength();
    let mut available: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::with_capacity(n);
    let mut height = 0usize;
    for &s in w.steps() {
        match s {
            Step::Up => height += 1,
            Step::Down => {
                height -= 1;
                let idx = available.len() - 1 - height;
                out.push(available.remove(idx));
            }
            Step::Flat => unreachable!("Dyck words have no flat steps"),
        }
    }
    Permutation::from_vec_unchecked(out)
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
        assert_eq!(phi(&p("5462137")).unwrap().to_string(), "uuududduududdd");
        assert_eq!(phi(&p("452361")).unwrap().to_string(), "uuudduudddud");
        assert_eq!(
            phi(&Permutation::identity(4)).unwrap().to_string(),
            "uuuudddd"
        );
        assert_eq!(phi(&Permutation::empty()).unwrap(), DyckWord::empty());
    }

    #[test]
    fn recursive_form() {
        assert_eq!(
            phi_recursive(&p("452361")).unwrap().to_string(),
            "uuudduudddud"
        );
        assert_eq!(
            phi_recursive(&Permutation::empty()).unwrap(),
            DyckWord::empty()
        );
        assert_eq!(phi_recursive(&p("1")).unwrap().to_string(), "ud");
    }

    #[test]
    fn rejects_132() {
        assert!(matches!(
            phi(&p("132")),
            Err(Error::Domain { map: "phi", .. })
        ));
        assert!(phi_recursive(&p("2143")).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            phi_inverse(&"uuududduududdd".parse().unwrap()),
            p("5462137")
        );
        assert_eq!(phi_inverse(&DyckWord::empty()), Permutation::empty());
        assert_eq!(phi_inverse(&"uuuddd".parse().unwrap()), p("123"));
        assert_eq!(phi_inverse(&"ud".parse().unwrap()), p("1"));
    }

    #[test]
    fn roundtrip_small() {
        for n in 0..=7 {
            for w in enumerate_dyck(n) {
                assert_eq!(phi(&phi_inverse(&w)).unwrap(), w);
            }
        }
    }
}
