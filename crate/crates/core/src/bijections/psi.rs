use serde::Serialize;

use crate::error::{Error, Result};
use crate::paths::{MotzkinWord, Step};
use crate::perm::Permutation;

use super::require_avoids;

/// Arc diagram of a permutation's LTRM blocks on the number line: each
/// block `(v1, ..., vm)` is drawn as the chain of arcs `(v1,v2), ...,
/// (v_{m-1}, v_m)`, a one-element block as a single point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeometricRepresentation {
    blocks: Vec<Vec<u32>>,
    arcs: Vec<(u32, u32)>,
    singles: Vec<u32>,
}

impl GeometricRepresentation {
    /// Requires block heads to decrease and each block to increase.
    pub fn from_permutation(pi: &Permutation) -> Result<Self> {
        let d = pi.ltrm_decompose();
        if !d.satisfies_ltrm_conditions() {
            return Err(Error::domain(
                "geometric_representation",
                format!("LTRM blocks of {pi} are not all increasing"),
            ));
        }
        Self::from_blocks(d.blocks)
    }

    /// Any family of disjoint, strictly increasing blocks.
    pub fn from_blocks(blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for b in &blocks {
            if b.is_empty() || b.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidArgument(format!(
                    "block {b:?} is not a non-empty increasing sequence"
                )));
            }
            if let Some(v) = b.iter().find(|&&v| !seen.insert(v)) {
                return Err(Error::DuplicateValue { value: *v });
            }
        }
        let arcs = blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
            .collect();
        let singles = blocks
            .iter()
            .filter(|b| b.len() == 1)
            .map(|b| b[0])
            .collect();
        Ok(GeometricRepresentation {
            blocks,
            arcs,
            singles,
        })
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn singles(&self) -> &[u32] {
        &self.singles
    }

    /// Two arcs from different blocks cross (`a < c < b < d`).
    pub fn blocks_overlap(&self) -> bool {
        let tagged: Vec<(usize, u32, u32)> = self
            .blocks
            .iter()
            .enumerate()
            .flat_map(|(i, b)| b.windows(2).map(move |w| (i, w[0], w[1])))
            .collect();
        tagged.iter().enumerate().any(|(x, &(bi, a, b))| {
            tagged[x + 1..].iter().any(|&(bj, c, d)| {
                bi != bj && ((a < c && c < b && b < d) || (c < a && a < d && d < b))
            })
        })
    }

    fn roles(&self, n: usize) -> Vec<Role> {
        let mut roles = vec![Role::default(); n + 2];
        for &(a, b) in &self.arcs {
            roles[a as usize].start = true;
            roles[b as usize].end = true;
        }
        for &s in &self.singles {
            roles[s as usize].single = true;
        }
        roles
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Role {
    start: bool,
    end: bool,
    single: bool,
}

/// Motzkin word of length `n` to a permutation of length `n + 1`.
///
/// For every height, the touch-point runs of the path (see
/// [`MotzkinWord::proper_segments`]) become LTRM blocks; the blocks are then
/// laid out by decreasing first entry.
pub fn psi(m: &MotzkinWord) -> Permutation {
    let mut blocks: Vec<Vec<u32>> = (0..=m.max_height())
        .flat_map(|h| m.proper_segments(h))
        .collect();
    blocks.sort_by(|a, b| b[0].cmp(&a[0]));
    Permutation::from_vec_unchecked(blocks.concat())
}

/// Scans the values `1..=n` of the arc diagram of `pi`:
///
/// 1. up if `i` starts an arc;
/// 2. flat if `i` is a point, or ends an arc without starting one, and `i+1`
///    is a point or starts an arc without ending one;
/// 3. down if `i` is a point, or ends an arc without starting one, and `i+1`
///    ends an arc.
pub fn psi_inverse(pi: &Permutation) -> Result<MotzkinWord> {
    require_avoids(pi, &[1, 3, 2], "psi_inverse")?;
    if pi.has_adjacent_consecutive_factor() {
        return Err(Error::domain(
            "psi_inverse",
            format!("{pi} has two adjacent consecutive values"),
        ));
    }
    let n = pi.len().saturating_sub(1);
    let geo = GeometricRepresentation::from_permutation(pi)?;
    let roles = geo.roles(n);
    let mut steps = Vec::with_capacity(n);
    for i in 1..=n {
        let here = roles[i];
        let next = roles[i + 1];
        let step = if here.start {
            Step::Up
        } else if here.single || here.end {
            if next.end {
                Step::Down
            } else {
                Step::Flat
            }
        } else {
            return Err(Error::domain(
                "psi_inverse",
                format!("value {i} has no role"),
            ));
        };
        steps.push(step);
    }
    MotzkinWord::new(steps).map_err(|e| Error::domain("psi_inverse", e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::enumerate_motzkin;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn m(s: &str) -> MotzkinWord {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        assert_eq!(psi(&m("ufduududd")), p("8 6 5 7 9 3 2 1 4 10"));
        assert_eq!(
            psi_inverse(&p("8 6 5 7 9 3 2 1 4 10")).unwrap(),
            m("ufduududd")
        );
    }

    #[test]
    fn small_cases() {
        assert_eq!(psi(&m("ffff")), p("54321"));
        assert_eq!(psi(&m("uudd")), p("32415"));
        assert_eq!(psi(&m("")), p("1"));
        assert_eq!(psi_inverse(&p("21")).unwrap(), m("f"));
        assert_eq!(psi_inverse(&p("1")).unwrap(), m(""));
    }

    #[test]
    fn inverse_rejects_outside_domain() {
        assert!(matches!(psi_inverse(&p("132")), Err(Error::Domain { .. })));
        assert!(matches!(psi_inverse(&p("12")), Err(Error::Domain { .. })));
        assert!(matches!(psi_inverse(&p("231")), Err(Error::Domain { .. })));
    }

    #[test]
    fn arc_diagram_of_worked_example() {
        let g = GeometricRepresentation::from_permutation(&p("8 6 5 7 9 3 2 1 4 10")).unwrap();
        let mut arcs = g.arcs().to_vec();
        arcs.sort();
        assert_eq!(arcs, vec![(1, 4), (4, 10), (5, 7), (7, 9)]);
        let mut singles = g.singles().to_vec();
        singles.sort();
        assert_eq!(singles, vec![2, 3, 6, 8]);
        assert!(!g.blocks_overlap());
    }

    #[test]
    fn overlap_examples() {
        let single = GeometricRepresentation::from_blocks(vec![vec![1, 5, 11]]).unwrap();
        assert_eq!(single.arcs(), &[(1, 5), (5, 11)]);
        assert!(!single.blocks_overlap());
        let crossing =
            GeometricRepresentation::from_blocks(vec![vec![1, 7, 11, 13], vec![2, 6, 12]]).unwrap();
        assert!(crossing.blocks_overlap());
        let g = GeometricRepresentation::from_permutation(&p("54321")).unwrap();
        assert!(g.arcs().is_empty());
        assert_eq!(g.singles().len(), 5);
        assert!(GeometricRepresentation::from_permutation(&p("132")).is_err());
        assert!(GeometricRepresentation::from_blocks(vec![vec![2, 1]]).is_err());
        assert!(GeometricRepresentation::from_blocks(vec![vec![1, 2], vec![2]]).is_err());
    }

    #[test]
    fn roundtrip_small() {
        for n in 0..=6 {
            for w in enumerate_motzkin(n) {
                let pi = psi(&w);
                assert_eq!(pi.len(), n + 1);
                assert_eq!(psi_inverse(&pi).unwrap(), w, "{w} -> {pi}");
            }
        }
    }
}
