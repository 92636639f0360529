use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::DiagramError;
use crate::algebra::{int, Laurent};

/// Integer partition drawn as a Young diagram: `parts[i]` is the length of
/// row `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct YoungDiagram {
    parts: Vec<u32>,
}

/// A box in column `x`, row `y` (both 1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub x: u32,
    pub y: u32,
}

impl YoungDiagram {
    pub fn new(parts: Vec<u32>) -> Result<Self, DiagramError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(DiagramError::NotAPartition(parts));
        }
        Ok(YoungDiagram { parts })
    }

    /// Sorts into weakly decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        YoungDiagram { parts }
    }

    pub fn empty() -> Self {
        YoungDiagram::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `y` (1-based); zero past the last row.
    pub fn row(&self, y: u32) -> u32 {
        self.parts.get(y as usize - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.x >= 1 && c.y >= 1 && c.x <= self.row(c.y)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |x| Cell { x, y: i as u32 + 1 }))
    }

    pub fn conjugate(&self) -> YoungDiagram {
        let cols = self.parts.first().copied().unwrap_or(0);
        YoungDiagram {
            parts: (1..=cols)
                .map(|x| self.parts.iter().filter(|&&p| p >= x).count() as u32)
                .collect(),
        }
    }

    /// Multiplicity of part `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Dominance order on diagrams of equal size.
    pub fn dominates(&self, other: &YoungDiagram) -> bool {
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.parts.len().max(other.parts.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Appends `k` parts equal to one.
    pub fn with_ones(&self, k: u32) -> YoungDiagram {
        let mut parts = self.parts.clone();
        parts.extend(std::iter::repeat_n(1, k as usize));
        YoungDiagram { parts }
    }
}

impl TryFrom<Vec<u32>> for YoungDiagram {
    type Error = DiagramError;
    fn try_from(parts: Vec<u32>) -> Result<Self, DiagramError> {
        YoungDiagram::new(parts)
    }
}

impl From<YoungDiagram> for Vec<u32> {
    fn from(d: YoungDiagram) -> Vec<u32> {
        d.parts
    }
}

/// Comma-separated parts; the empty diagram is the empty string.
impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, DiagramError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(YoungDiagram::empty());
        }
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| DiagramError::Malformed(s.to_string()))?;
        YoungDiagram::new(parts)
    }
}

/// `A·x − A⁻¹·y`
pub fn content(c: Cell) -> Laurent {
    Laurent::from_terms([(1, int(c.x as i64)), (-1, int(-(c.y as i64)))])
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions(n: u32) -> Vec<YoungDiagram> {
    fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<YoungDiagram>) {
        if rest == 0 {
            out.push(YoungDiagram { parts: prefix.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            rec(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size `0..=n`, ascending by size.
pub fn partitions_up_to(n: u32) -> Vec<YoungDiagram> {
    (0..=n).flat_map(partitions).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{a_to_gamma, parse_poly};

    fn yd(p: &[u32]) -> YoungDiagram {
        YoungDiagram::new(p.to_vec()).unwrap()
    }

    #[test]
    fn contents() {
        assert_eq!(content(Cell { x: 1, y: 1 }).to_string(), "A - A^-1");
        assert_eq!(content(Cell { x: 3, y: 2 }).to_string(), "3*A - 2*A^-1");
        let as_gamma = a_to_gamma(&content(Cell { x: 1, y: 1 })).unwrap();
        assert_eq!(as_gamma, parse_poly("-g").unwrap());
        for c in yd(&[4, 2, 1]).cells() {
            assert_eq!(content(c).at_one(), int(c.x as i64 - c.y as i64));
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions_up_to(7).len(), 45);
        assert_eq!(partitions(3)[0], yd(&[3]));
    }

    #[test]
    fn text_form() {
        assert_eq!(yd(&[2, 1]).to_string(), "2,1");
        assert_eq!(YoungDiagram::empty().to_string(), "");
        assert_eq!("2,1".parse::<YoungDiagram>().unwrap(), yd(&[2, 1]));
        assert_eq!("".parse::<YoungDiagram>().unwrap(), YoungDiagram::empty());
        assert!("1,2".parse::<YoungDiagram>().is_err());
        assert!("a".parse::<YoungDiagram>().is_err());
    }

    #[test]
    fn shape_helpers() {
        let l = yd(&[3, 1]);
        assert_eq!(l.conjugate(), yd(&[2, 1, 1]));
        assert_eq!(l.cells().count(), 4);
        assert!(l.contains(Cell { x: 3, y: 1 }));
        assert!(!l.contains(Cell { x: 2, y: 2 }));
        assert!(yd(&[3, 1]).dominates(&yd(&[2, 2])));
        assert!(!yd(&[2, 2]).dominates(&yd(&[3, 1])));
        assert_eq!(YoungDiagram::from_unsorted(vec![1, 0, 3]), yd(&[3, 1]));
    }
}
