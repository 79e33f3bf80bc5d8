//! Red-white colorings of paths: codes, palindrome symmetry and the
//! subpath criterion for ID-colorings.

use std::fmt;
use std::str::FromStr;

use crate::cycle::{colors_to_string, parse_colors, Color};
use crate::{Error, Result};

/// A red-white coloring of the path `P_n`, vertex `u_i` at index `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathColoring {
    colors: Vec<Color>,
}

impl PathColoring {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        if colors.len() < 2 {
            return Err(Error::PathTooSmall(colors.len()));
        }
        Ok(PathColoring { colors })
    }

    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        let colors = (0..n)
            .map(|i| {
                if mask >> i & 1 == 1 {
                    Color::Red
                } else {
                    Color::White
                }
            })
            .collect();
        PathColoring::new(colors)
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn red_count(&self) -> usize {
        self.colors.iter().filter(|c| c.is_red()).count()
    }

    pub fn red_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.colors[v].is_red()).collect()
    }
}

impl FromStr for PathColoring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PathColoring::new(parse_colors(s)?)
    }
}

impl fmt::Display for PathColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&colors_to_string(&self.colors))
    }
}

/// Code of vertex `v` on the path: entry `i-1` counts red vertices at
/// distance `i`, for `i = 1..=n-1`.
pub fn path_code(col: &PathColoring, v: usize) -> Result<Vec<u32>> {
    let n = col.n();
    if v >= n {
        return Err(Error::IndexOutOfRange { n, index: v });
    }
    let mut counts = vec![0u32; n - 1];
    for w in 0..n {
        if w != v && col.color(w).is_red() {
            counts[v.abs_diff(w) - 1] += 1;
        }
    }
    Ok(counts)
}

/// Whether the coloring reads the same in both directions.
pub fn is_symmetric_path(col: &PathColoring) -> bool {
    let n = col.n();
    (0..n / 2).all(|i| col.color(i) == col.color(n - 1 - i))
}

/// The restriction to the longest subpath whose both endpoints are red:
/// the slice from the first to the last red vertex.
pub fn red_leaf_subpath(col: &PathColoring) -> Result<PathColoring> {
    let reds = col.red_vertices();
    let (&lo, &hi) = match (reds.first(), reds.last()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Error::NoRedVertex),
    };
    if lo == hi {
        return Ok(PathColoring {
            colors: vec![Color::Red],
        });
    }
    Ok(PathColoring {
        colors: col.colors[lo..=hi].to_vec(),
    })
}

/// Subpath criterion: a path coloring with at least two red vertices is an
/// ID-coloring iff its red-leaf subpath is not symmetric.
pub fn path_id_by_criterion(col: &PathColoring) -> Result<bool> {
    if col.red_count() < 2 {
        return Err(Error::TooFewReds);
    }
    Ok(!is_symmetric_path(&red_leaf_subpath(col)?))
}

/// Brute-force ID check: all vertex codes pairwise distinct.
pub fn path_is_id_brute_force(col: &PathColoring) -> bool {
    let n = col.n();
    let codes: Vec<_> = (0..n).map(|v| path_code(col, v).unwrap()).collect();
    for x in 0..n {
        for y in (x + 1)..n {
            if codes[x] == codes[y] {
                return false;
            }
        }
    }
    true
}
