use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::require_avoids;

/// Keeps left-to-right minima in place; every other slot takes the largest
/// unused value above the current minimum.
pub fn simion_schmidt(pi: &Permutation) -> Result<Permutation> {
    require_avoids(pi, &[1, 3, 2], "simion_schmidt")?;
    refill(pi, "simion_schmidt", |used, min, n| {
        (min + 1..=n).rev().find(|&k| !used[k as usize])
    })
}

/// Same minima, but non-minimum slots take the smallest unused value above
/// the current minimum, which restores increasing LTRM blocks.
pub fn simion_schmidt_inverse(sigma: &Permutation) -> Result<Permutation> {
    require_avoids(sigma, &[1, 2, 3], "simion_schmidt_inverse")?;
    refill(sigma, "simion_schmidt_inverse", |used, min, n| {
        (min + 1..=n).find(|&k| !used[k as usize])
    })
}

fn refill(
    input: &Permutation,
    map: &'static str,
    pick: impl Fn(&[bool], u32, u32) -> Option<u32>,
) -> Result<Permutation> {
    let n = input.len() as u32;
    let mut used = vec![false; n as usize + 1];
    let mut out = Vec::with_capacity(input.len());
    let mut min = u32::MAX;
    for &v in input.as_slice() {
        let chosen = if v < min {
            min = v;
            v
        } else {
            pick(&used, min, n)
                .ok_or_else(|| Error::domain(map, "no value left above the minimum"))?
        };
        if std::mem::replace(&mut used[chosen as usize], true) {
            return Err(Error::domain(map, format!("value {chosen} assigned twice")));
        }
        out.push(chosen);
    }
    Ok(Permutation::from_vec_unchecked(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::AvoidanceClassSpec;
    use crate::pattern::contains_classical;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        assert_eq!(simion_schmidt(&p("7561234")).unwrap(), p("7561432"));
        assert_eq!(simion_schmidt_inverse(&p("7561432")).unwrap(), p("7561234"));
    }

    #[test]
    fn decreasing_and_tiny_cases() {
        let dec = p("54321");
        assert_eq!(simion_schmidt(&dec).unwrap(), dec);
        assert_eq!(simion_schmidt_inverse(&dec).unwrap(), dec);
        assert_eq!(simion_schmidt(&p("12")).unwrap(), p("12"));
        assert_eq!(
            simion_schmidt(&Permutation::empty()).unwrap(),
            Permutation::empty()
        );
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            simion_schmidt(&p("132")),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            simion_schmidt_inverse(&p("123")),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn lands_in_123_avoiders_and_roundtrips() {
        let tau = p("132");
        for n in 0..=7 {
            for pi in AvoidanceClassSpec::parse(n, "132").unwrap().enumerate() {
                let sigma = simion_schmidt(&pi).unwrap();
                assert!(!contains_classical(&sigma, &p("123")));
                assert!(!contains_classical(&pi, &tau));
                assert_eq!(sigma.ltr_minima_positions(), pi.ltr_minima_positions());
                assert_eq!(simion_schmidt_inverse(&sigma).unwrap(), pi);
            }
        }
    }
}
