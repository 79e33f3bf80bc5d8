//! Named coloring families for composite cycles: asymmetric non-ID colorings
//! and symmetric colorings with many central vertices.

use crate::cycle::{is_prime, CycleColoring};
use crate::{Error, Result};

/// A factorization `n = p * q` used by the composite constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factorization {
    pub n: usize,
    pub p: usize,
    pub q: usize,
}

/// Smallest nontrivial factorization of an odd composite `n`.
pub fn least_factorization(n: usize) -> Result<Factorization> {
    if n % 2 == 0 || n < 9 || is_prime(n) {
        return Err(Error::NotOddComposite(n));
    }
    let p = (3..n).step_by(2).find(|d| n % d == 0).expect("composite");
    Ok(Factorization { n, p, q: n / p })
}

fn check_factor(n: usize, p: usize) -> Result<usize> {
    if n % 2 == 0 || n < 9 || is_prime(n) {
        return Err(Error::NotOddComposite(n));
    }
    if p < 2 || p >= n || n % p != 0 || n / p < 3 {
        return Err(Error::BadFactor { n, p });
    }
    Ok(n / p)
}

/// The non-ID, non-symmetric coloring of `C_n` built from a factorization
/// `n = p * q` (odd composite `n`, `3 <= p`, `q = n/p >= 3`).
///
/// Splitting vertices are `u_0, u_q, u_{2q}, ..., u_{(p-1)q}`; numbering them
/// `1..=p` with `u_0` last, the splitting vertex numbered `l` is white when
/// `l` is odd and red when `l` is even. A non-splitting vertex `u_a` is red
/// exactly when `a mod q` is odd. Vertices `u_0` and `u_q` get equal codes
/// (all entries 1), so the coloring is never an ID-coloring.
pub fn sa_coloring(n: usize, p: usize) -> Result<CycleColoring> {
    let q = check_factor(n, p)?;
    let reds: Vec<usize> = (0..n)
        .filter(|&a| {
            if a % q == 0 {
                let l = if a == 0 { p } else { a / q };
                l % 2 == 0
            } else {
                a % q % 2 == 1
            }
        })
        .collect();
    CycleColoring::from_reds(n, &reds)
}

/// The symmetric coloring of `C_n` with `q = n/p` central vertices: reds at
/// every multiple of `p`. Requires odd composite `n` and a factor `p` with
/// `3 <= q`.
pub fn multi_central_coloring(n: usize, p: usize) -> Result<CycleColoring> {
    let q = check_factor(n, p)?;
    let reds: Vec<usize> = (0..q).map(|l| l * p).collect();
    CycleColoring::from_reds(n, &reds)
}

/// The coloring of `C_n` with a single red vertex at `u_0`; never an
/// ID-coloring for `n >= 4` (the two neighbors of the red vertex share a
/// code).
pub fn single_red_coloring(n: usize) -> Result<CycleColoring> {
    if n < 4 {
        return Err(Error::OutOfRange { n, lo: 4, hi: usize::MAX });
    }
    CycleColoring::from_reds(n, &[0])
}
