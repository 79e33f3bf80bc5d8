//! ID-coloring verdicts and reflection-symmetry detection for cycles.

use serde::Serialize;

use crate::cycle::{all_codes, code_of, CycleColoring};
use crate::{Error, Result};

/// Reflection symmetries of a cycle coloring.
///
/// For odd `n` the symmetries are reflections fixing a vertex, listed in
/// `central_vertices`. For even `n` the symmetries are reflections through
/// two opposite edge midpoints: `edge_axes` lists every offset `r` such that
/// the reflection swapping `r` with `r+1` preserves the coloring (each
/// geometric axis therefore appears as two offsets, `r` and `r + n/2`).
/// `vertex_axes` additionally lists vertex-fixing reflections of even cycles
/// for inspection; they do not count as symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub central_vertices: Vec<usize>,
    pub edge_axes: Vec<usize>,
    pub vertex_axes: Vec<usize>,
    /// For each central vertex, its (n-1)/2 partner pairs.
    pub partner_pairs: Vec<(usize, Vec<(usize, usize)>)>,
}

impl SymmetryReport {
    pub fn is_symmetric(&self) -> bool {
        !self.central_vertices.is_empty() || !self.edge_axes.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdVerdict {
    pub is_id: bool,
    /// Lexicographically smallest pair of distinct vertices with equal codes.
    pub witness: Option<(usize, usize)>,
}

/// Whether the coloring of an odd cycle is symmetric with respect to vertex `u`.
pub fn is_symmetric_about(col: &CycleColoring, u: usize) -> Result<bool> {
    let n = col.n();
    if n % 2 == 0 {
        return Err(Error::EvenCycleUnsupported(n));
    }
    if u >= n {
        return Err(Error::IndexOutOfRange { n, index: u });
    }
    Ok((1..=n / 2).all(|d| col.color((u + d) % n) == col.color((u + n - d) % n)))
}

fn edge_axes(col: &CycleColoring) -> Vec<usize> {
    let n = col.n();
    (0..n)
        .filter(|&r| {
            (1..=n / 2).all(|i| col.color((r + i) % n) == col.color((r + 1 + n - i) % n))
        })
        .collect()
}

fn vertex_axes(col: &CycleColoring) -> Vec<usize> {
    let n = col.n();
    (0..n)
        .filter(|&v| {
            (1..n / 2).all(|d| col.color((v + d) % n) == col.color((v + n - d) % n))
        })
        .collect()
}

/// All reflection symmetries of the coloring.
pub fn symmetry_report(col: &CycleColoring) -> SymmetryReport {
    let n = col.n();
    if n % 2 == 1 {
        let central_vertices: Vec<usize> = (0..n)
            .filter(|&u| is_symmetric_about(col, u).expect("odd n"))
            .collect();
        let partner_pairs = central_vertices
            .iter()
            .map(|&u| {
                let pairs = (1..=n / 2)
                    .map(|d| ((u + d) % n, (u + n - d) % n))
                    .collect();
                (u, pairs)
            })
            .collect();
        SymmetryReport {
            central_vertices,
            edge_axes: Vec::new(),
            vertex_axes: Vec::new(),
            partner_pairs,
        }
    } else {
        SymmetryReport {
            central_vertices: Vec::new(),
            edge_axes: edge_axes(col),
            vertex_axes: vertex_axes(col),
            partner_pairs: Vec::new(),
        }
    }
}

/// Whether all vertex codes are pairwise distinct.
pub fn is_id_coloring(col: &CycleColoring) -> IdVerdict {
    let codes = all_codes(col);
    for x in 0..codes.len() {
        for y in (x + 1)..codes.len() {
            if codes[x] == codes[y] {
                return IdVerdict {
                    is_id: false,
                    witness: Some((x, y)),
                };
            }
        }
    }
    IdVerdict {
        is_id: true,
        witness: None,
    }
}

/// The code-based central-vertex test: for a symmetric coloring of an odd
/// cycle, `u` is a central vertex iff its code contains no entry equal to 1.
pub fn observation_code02_check(col: &CycleColoring, u: usize) -> Result<bool> {
    Ok(!code_of(col, u)?.contains_one())
}
