//! Dyck and Motzkin words.
//!
//! Words are written over `u`, `d` and `f`. Heights are the y-coordinates of
//! the vertices, so a word of length `n` has `n + 1` heights starting at 0.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Step {
    Up,
    Down,
    Flat,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Down => 'd',
            Step::Flat => 'f',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'u' => Some(Step::Up),
            'd' => Some(Step::Down),
            'f' => Some(Step::Flat),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    Dyck,
    Motzkin,
}

/// Validates `steps`; `Flat` is only legal for Motzkin words.
fn validate(text: &str, alphabet: Alphabet) -> Result<Vec<Step>> {
    let mut height = 0usize;
    let mut steps = Vec::with_capacity(text.len());
    for (pos, c) in text.chars().enumerate() {
        let step = match Step::from_char(c) {
            Some(Step::Flat) if alphabet == Alphabet::Dyck => None,
            s => s,
        }
        .ok_or(Error::IllegalStep {
            position: pos,
            found: c,
        })?;
        match step {
            Step::Up => height += 1,
            Step::Down => {
                height = height
                    .checked_sub(1)
                    .ok_or(Error::NegativePrefix { position: pos })?
            }
            Step::Flat => {}
        }
        steps.push(step);
    }
    if height != 0 {
        return Err(Error::Unbalanced { height });
    }
    Ok(steps)
}

fn heights_of(steps: &[Step]) -> Vec<usize> {
    let mut h = Vec::with_capacity(steps.len() + 1);
    let mut y = 0usize;
    h.push(y);
    for s in steps {
        match s {
            Step::Up => y += 1,
            Step::Down => y -= 1,
            Step::Flat => {}
        }
        h.push(y);
    }
    h
}

fn write_steps(steps: &[Step], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for s in steps {
        write!(f, "{}", s.as_char())?;
    }
    Ok(())
}

/// A balanced word over `{u, d}` that never goes below height 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckWord(Vec<Step>);

impl DyckWord {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let text: String = steps.iter().map(|s| s.as_char()).collect();
        validate(&text, Alphabet::Dyck).map(DyckWord)
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckWord::new(steps.clone()).is_ok());
        DyckWord(steps)
    }

    pub fn empty() -> Self {
        DyckWord(Vec::new())
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn semilength(&self) -> usize {
        self.0.len() / 2
    }

    pub fn heights(&self) -> Vec<usize> {
        heights_of(&self.0)
    }

    pub fn stats(&self) -> PathStats {
        let h = self.heights();
        let mut peaks = Vec::new();
        let mut valleys = Vec::new();
        for (i, w) in self.0.windows(2).enumerate() {
            let vertex = Vertex {
                position: i + 1,
                height: h[i + 1],
            };
            match (w[0], w[1]) {
                (Step::Up, Step::Down) => peaks.push(vertex),
                (Step::Down, Step::Up) => valleys.push(vertex),
                _ => {}
            }
        }
        PathStats {
            peaks,
            valleys,
            max_height: h.into_iter().max().unwrap_or(0),
        }
    }

    pub fn has_peak_at_height(&self, height: usize) -> bool {
        let h = self.heights();
        self.0
            .windows(2)
            .enumerate()
            .any(|(i, w)| w == [Step::Up, Step::Down] && h[i + 1] == height)
    }

    /// Whether the word contains the contiguous factor `u d^(p-2) u`.
    pub fn contains_u_dpow_u(&self, p: usize) -> Result<bool> {
        if p < 3 {
            return Err(Error::InvalidArgument(format!(
                "factor length must be at least 3, got {p}"
            )));
        }
        Ok(self.0.windows(p).any(|w| {
            w[0] == Step::Up && w[p - 1] == Step::Up && w[1..p - 1].iter().all(|&s| s == Step::Down)
        }))
    }

    pub fn render_ascii(&self) -> String {
        render_ascii(&self.0)
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_steps(&self.0, f)
    }
}

impl FromStr for DyckWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        validate(s.trim(), Alphabet::Dyck).map(DyckWord)
    }
}

/// A balanced word over `{u, d, f}` that never goes below height 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MotzkinWord(Vec<Step>);

impl MotzkinWord {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let text: String = steps.iter().map(|s| s.as_char()).collect();
        validate(&text, Alphabet::Motzkin).map(MotzkinWord)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn heights(&self) -> Vec<usize> {
        heights_of(&self.0)
    }

    /// Touch-point blocks at height `h`.
    ///
    /// The path is drawn from `(1, 0)` to `(n + 1, 0)`. Inside every maximal
    /// stretch where it stays at or above `h`, the abscissas where it touches
    /// `y = h` are grouped into runs; a flat step lying on `y = h` ends a run.
    /// Blocks are returned left to right, each in increasing order.
    pub fn proper_segments(&self, h: usize) -> Vec<Vec<u32>> {
        let heights = self.heights();
        let mut blocks = Vec::new();
        let mut current: Vec<u32> = Vec::new();
        for (idx, &y) in heights.iter().enumerate() {
            let x = idx as u32 + 1;
            if y < h {
                if !current.is_empty() {
                    blocks.push(std::mem::take(&mut current));
                }
            } else if y == h {
                let flat_on_line =
                    idx > 0 && self.0[idx - 1] == Step::Flat && heights[idx - 1] == h;
                if flat_on_line && !current.is_empty() {
                    blocks.push(std::mem::take(&mut current));
                }
                current.push(x);
            }
        }
        if !current.is_empty() {
            blocks.push(current);
        }
        blocks
    }

    pub fn max_height(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    pub fn render_ascii(&self) -> String {
        render_ascii(&self.0)
    }
}

impl fmt::Display for MotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_steps(&self.0, f)
    }
}

impl FromStr for MotzkinWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        validate(s.trim(), Alphabet::Motzkin).map(MotzkinWord)
    }
}

impl From<DyckWord> for MotzkinWord {
    fn from(w: DyckWord) -> Self {
        MotzkinWord(w.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathWord {
    Dyck(DyckWord),
    Motzkin(MotzkinWord),
}

pub fn parse_path(text: &str, alphabet: Alphabet) -> Result<PathWord> {
    let steps = validate(text.trim(), alphabet)?;
    Ok(match alphabet {
        Alphabet::Dyck => PathWord::Dyck(DyckWord(steps)),
        Alphabet::Motzkin => PathWord::Motzkin(MotzkinWord(steps)),
    })
}

/// A vertex of a path: `position` is its x-coordinate (number of steps
/// before it).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub position: usize,
    pub height: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathStats {
    pub peaks: Vec<Vertex>,
    pub valleys: Vec<Vertex>,
    pub max_height: usize,
}

/// One text row per height level, top row first, using `/`, `\` and `_`.
pub fn render_ascii(steps: &[Step]) -> String {
    if steps.is_empty() {
        return String::new();
    }
    let h = heights_of(steps);
    let glyphs: Vec<(usize, char)> = steps
        .iter()
        .enumerate()
        .map(|(col, s)| match s {
            Step::Up => (h[col], '/'),
            Step::Down => (h[col] - 1, '\\'),
            Step::Flat => (h[col], '_'),
        })
        .collect();
    let rows = glyphs.iter().map(|&(r, _)| r + 1).max().unwrap_or(1);
    let mut grid = vec![vec![' '; steps.len()]; rows];
    for (col, &(row, glyph)) in glyphs.iter().enumerate() {
        grid[row][col] = glyph;
    }
    let mut out = String::new();
    for row in grid.iter().rev() {
        let line: String = row.iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Lexicographic (`u < d < f`) generator for Dyck or Motzkin words.
pub struct WordIter {
    alphabet: Alphabet,
    next: Option<Vec<Step>>,
}

fn completable(height: usize, remaining: usize, alphabet: Alphabet) -> bool {
    height <= remaining && (alphabet == Alphabet::Motzkin || (remaining - height).is_multiple_of(2))
}

/// Smallest completion of a prefix ending at `height` with `remaining` steps.
fn complete(word: &mut Vec<Step>, mut height: usize, total: usize, alphabet: Alphabet) {
    while word.len() < total {
        let remaining = total - word.len();
        let step = if completable(height + 1, remaining - 1, alphabet) {
            height += 1;
            Step::Up
        } else if height > 0 && completable(height - 1, remaining - 1, alphabet) {
            height -= 1;
            Step::Down
        } else {
            Step::Flat
        };
        word.push(step);
    }
}

impl WordIter {
    fn new(len: usize, alphabet: Alphabet) -> Self {
        let mut first = Vec::with_capacity(len);
        let next = if completable(0, len, alphabet) {
            complete(&mut first, 0, len, alphabet);
            Some(first)
        } else {
            None
        };
        WordIter { alphabet, next }
    }

    fn successor(&self, w: &[Step]) -> Option<Vec<Step>> {
        let total = w.len();
        let heights = heights_of(w);
        let larger: &[Step] = match self.alphabet {
            Alphabet::Dyck => &[Step::Up, Step::Down],
            Alphabet::Motzkin => &[Step::Up, Step::Down, Step::Flat],
        };
        for i in (0..total).rev() {
            let h = heights[i];
            for &s in larger.iter().filter(|&&s| s > w[i]) {
                let nh = match s {
                    Step::Up => h + 1,
                    Step::Down if h == 0 => continue,
                    Step::Down => h - 1,
                    Step::Flat => h,
                };
                if completable(nh, total - i - 1, self.alphabet) {
                    let mut out = w[..i].to_vec();
                    out.push(s);
                    complete(&mut out, nh, total, self.alphabet);
                    return Some(out);
                }
            }
        }
        None
    }
}

impl Iterator for WordIter {
    type Item = Vec<Step>;

    fn next(&mut self) -> Option<Vec<Step>> {
        let current = self.next.take()?;
        self.next = self.successor(&current);
        Some(current)
    }
}

/// All Dyck words of semilength `n`, lexicographic with `u < d`.
pub fn enumerate_dyck(n: usize) -> impl Iterator<Item = DyckWord> {
    WordIter::new(2 * n, Alphabet::Dyck).map(DyckWord)
}

/// All Motzkin words of length `n`, lexicographic with `u < d < f`.
pub fn enumerate_motzkin(n: usize) -> impl Iterator<Item = MotzkinWord> {
    WordIter::new(n, Alphabet::Motzkin).map(MotzkinWord)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dyck(s: &str) -> DyckWord {
        s.parse().unwrap()
    }

    fn motz(s: &str) -> MotzkinWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert_eq!(dyck("uuududduududdd").semilength(), 7);
        assert_eq!(motz("ufduududd").len(), 9);
        assert_eq!(
            "du".parse::<DyckWord>(),
            Err(Error::NegativePrefix { position: 0 })
        );
        assert_eq!(
            "uud".parse::<DyckWord>(),
            Err(Error::Unbalanced { height: 1 })
        );
        assert_eq!(
            "ufd".parse::<DyckWord>(),
            Err(Error::IllegalStep {
                position: 1,
                found: 'f'
            })
        );
        assert_eq!(
            "uxd".parse::<MotzkinWord>(),
            Err(Error::IllegalStep {
                position: 1,
                found: 'x'
            })
        );
        assert!(matches!(
            parse_path("ud", Alphabet::Dyck),
            Ok(PathWord::Dyck(_))
        ));
        assert!(matches!(
            parse_path("f", Alphabet::Motzkin),
            Ok(PathWord::Motzkin(_))
        ));
        assert_eq!(dyck(""), DyckWord::empty());
    }

    #[test]
    fn peaks_and_valleys() {
        let s = dyck("uudd").stats();
        assert_eq!(
            s.peaks,
            vec![Vertex {
                position: 2,
                height: 2
            }]
        );
        assert!(s.valleys.is_empty());
        assert_eq!(s.max_height, 2);

        let s = dyck("uuududduududdd").stats();
        assert_eq!(
            s.peaks.iter().map(|v| v.height).collect::<Vec<_>>(),
            [3, 3, 3, 3]
        );

        let s = dyck(&"ud".repeat(4)).stats();
        assert_eq!(s.peaks.len(), 4);
        assert!(s.peaks.iter().all(|v| v.height == 1));
        assert_eq!(s.valleys.len(), 3);
        assert!(s.valleys.iter().all(|v| v.height == 0));
    }

    #[test]
    fn peak_height_predicate() {
        assert!(!dyck("uuududduududdd").has_peak_at_height(2));
        assert!(dyck("uuududduududdd").has_peak_at_height(3));
        assert!(dyck("udud").has_peak_at_height(1));
        assert!(!dyck("uudd").has_peak_at_height(3));
    }

    #[test]
    fn u_dpow_u_factor() {
        assert!(!dyck("uudduuudduddud").contains_u_dpow_u(3).unwrap());
        assert!(!dyck("uuudduudddud").contains_u_dpow_u(3).unwrap());
        assert!(dyck("uuududduududdd").contains_u_dpow_u(3).unwrap());
        assert!(dyck("uudduuddud").contains_u_dpow_u(4).unwrap());
        assert!(!dyck("uuudddud").contains_u_dpow_u(4).unwrap());
        assert!(dyck("uudduudd").contains_u_dpow_u(4).is_ok());
        assert!(matches!(
            dyck("ud").contains_u_dpow_u(2),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn enumeration_counts_and_order() {
        let words: Vec<String> = enumerate_dyck(3).map(|w| w.to_string()).collect();
        assert_eq!(words, ["uuuddd", "uududd", "uuddud", "uduudd", "ududud"]);
        assert_eq!(
            enumerate_dyck(0).collect::<Vec<_>>(),
            vec![DyckWord::empty()]
        );
        assert_eq!(enumerate_motzkin(4).count(), 9);
        assert_eq!(enumerate_motzkin(0).count(), 1);
        let m: Vec<String> = enumerate_motzkin(3).map(|w| w.to_string()).collect();
        assert_eq!(m, ["udf", "ufd", "fud", "fff"]);
    }

    #[test]
    fn proper_segments_examples() {
        let m = motz("ufduududd");
        assert_eq!(m.proper_segments(0), vec![vec![1, 4, 10]]);
        assert_eq!(m.proper_segments(1), vec![vec![2], vec![3], vec![5, 7, 9]]);
        assert_eq!(m.proper_segments(2), vec![vec![6], vec![8]]);
        assert!(m.proper_segments(3).is_empty());

        let flats = motz("ffff");
        assert_eq!(
            flats.proper_segments(0),
            (1..=5).map(|x| vec![x]).collect::<Vec<_>>()
        );

        // a flat above the line does not split it
        assert_eq!(motz("ufd").proper_segments(0), vec![vec![1, 4]]);
    }

    #[test]
    fn ascii_rendering() {
        assert_eq!(dyck("uudd").render_ascii(), " /\\\n/  \\\n");
        assert_eq!(motz("ufd").render_ascii(), " _\n/ \\\n");
        assert_eq!(motz("ff").render_ascii(), "__\n");
        assert_eq!(dyck("").render_ascii(), "");
    }
}
