//! Ring-index arithmetic over Z/nZ, coloring representations, distance and
//! code computation for cycles.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Color {
    Red,
    White,
}

impl Color {
    pub fn is_red(self) -> bool {
        self == Color::Red
    }

    fn to_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::White => 'W',
        }
    }
}

/// Parses the shared coloring text format. Positions in errors are 1-based.
pub(crate) fn parse_colors(s: &str) -> Result<Vec<Color>> {
    s.chars()
        .enumerate()
        .map(|(i, ch)| match ch {
            'R' | 'r' | '1' => Ok(Color::Red),
            'W' | 'w' | '0' => Ok(Color::White),
            _ => Err(Error::InvalidColorChar { ch, pos: i + 1 }),
        })
        .collect()
}

pub(crate) fn colors_to_string(colors: &[Color]) -> String {
    colors.iter().map(|c| c.to_char()).collect()
}

/// A red-white coloring of the cycle `C_n`, vertex `u_i` at index `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleColoring {
    colors: Vec<Color>,
}

impl CycleColoring {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        if colors.len() < 3 {
            return Err(Error::CycleTooSmall(colors.len()));
        }
        Ok(CycleColoring { colors })
    }

    pub fn from_reds(n: usize, reds: &[usize]) -> Result<Self> {
        let mut colors = vec![Color::White; n];
        for &v in reds {
            if v >= n {
                return Err(Error::IndexOutOfRange { n, index: v });
            }
            colors[v] = Color::Red;
        }
        CycleColoring::new(colors)
    }

    /// Coloring of `C_n` whose reds are the set bits of `mask` (bit i = vertex i).
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
        CycleColoring::new(colors)
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
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

    /// All-white or all-red.
    pub fn is_constant(&self) -> bool {
        self.colors.iter().all(|&c| c == self.colors[0])
    }
}

impl FromStr for CycleColoring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CycleColoring::new(parse_colors(s)?)
    }
}

impl fmt::Display for CycleColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&colors_to_string(&self.colors))
    }
}

/// The d-vector of a vertex: entry `i-1` counts red vertices at distance `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Code(pub Vec<u32>);

impl Code {
    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    pub fn contains_one(&self) -> bool {
        self.0.contains(&1)
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn dist_unchecked(n: usize, x: usize, y: usize) -> usize {
    let d = (x + n - y) % n;
    d.min(n - d)
}

/// Distance between vertices `x` and `y` on the cycle `C_n`.
pub fn cycle_dist(n: usize, x: usize, y: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::CycleTooSmall(n));
    }
    for index in [x, y] {
        if index >= n {
            return Err(Error::IndexOutOfRange { n, index });
        }
    }
    Ok(dist_unchecked(n, x, y))
}

/// Code of vertex `v`: entry `i-1` is the number of red vertices at distance
/// `i` from `v`, for `i = 1..=n/2`.
pub fn code_of(col: &CycleColoring, v: usize) -> Result<Code> {
    let n = col.n();
    if v >= n {
        return Err(Error::IndexOutOfRange { n, index: v });
    }
    let mut counts = vec![0u32; n / 2];
    for w in 0..n {
        if w != v && col.color(w).is_red() {
            counts[dist_unchecked(n, v, w) - 1] += 1;
        }
    }
    Ok(Code(counts))
}

/// Codes of every vertex, indexed by vertex.
pub fn all_codes(col: &CycleColoring) -> Vec<Code> {
    let n = col.n();
    let mut codes = vec![Code(vec![0u32; n / 2]); n];
    for w in col.red_vertices() {
        for (v, code) in codes.iter_mut().enumerate() {
            if v != w {
                code.0[dist_unchecked(n, v, w) - 1] += 1;
            }
        }
    }
    codes
}

/// The reflection context for a duplicate-code pair `(a, b)` on an odd cycle:
/// the unique vertex `j` equidistant from `a` and `b`, the semi-central and
/// anti-central vertices, and the two arcs `I` (containing `b`) and `I'`
/// (containing `a`) that partition the vertices other than `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairContext {
    pub n: usize,
    pub a: usize,
    pub b: usize,
    pub j: usize,
    pub semi_central: [usize; 2],
    pub anti_central: [usize; 2],
    pub arc_i: Vec<usize>,
    pub arc_i_prime: Vec<usize>,
}

impl PairContext {
    /// Partner of vertex `l` under the reflection fixing `j`:
    /// `l' = a + b - l (mod n)`. An involution with `partner(j) = j`.
    pub fn partner(&self, l: usize) -> Result<usize> {
        if l >= self.n {
            return Err(Error::IndexOutOfRange {
                n: self.n,
                index: l,
            });
        }
        Ok((self.a + self.b + self.n - l) % self.n)
    }

    pub fn in_i(&self, l: usize) -> bool {
        self.arc_i.contains(&l)
    }
}

/// Central vertex and arcs for the pair `(a, b)` on the odd cycle `C_n`,
/// computed as `j = (a + b) * 2^{-1} (mod n)`.
pub fn central_vertex_of(n: usize, a: usize, b: usize) -> Result<PairContext> {
    if n < 3 {
        return Err(Error::CycleTooSmall(n));
    }
    if n % 2 == 0 {
        return Err(Error::EvenCycleUnsupported(n));
    }
    for index in [a, b] {
        if index >= n {
            return Err(Error::IndexOutOfRange { n, index });
        }
    }
    if a == b {
        return Err(Error::VerticesNotDistinct { a, b });
    }
    let inv2 = (n + 1) / 2;
    let j = (a + b) * inv2 % n;
    let half = (n - 1) / 2;
    // The two arcs of consecutive vertices on either side of j.
    let plus: Vec<usize> = (1..=half).map(|t| (j + t) % n).collect();
    let minus: Vec<usize> = ((half + 1)..n).map(|t| (j + t) % n).collect();
    let b_offset = (b + n - j) % n;
    let (arc_i, arc_i_prime) = if (1..=half).contains(&b_offset) {
        (plus, minus)
    } else {
        (minus, plus)
    };
    Ok(PairContext {
        n,
        a,
        b,
        j,
        semi_central: [(j + n - 1) % n, (j + 1) % n],
        anti_central: [(j + n / 2) % n, (j + n / 2 + 1) % n],
        arc_i,
        arc_i_prime,
    })
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force cycle distance: walk in both directions, take the shorter.
    fn dist_by_walking(n: usize, x: usize, y: usize) -> usize {
        let forward = (0..n).find(|s| (x + s) % n == y).unwrap();
        let backward = (0..n).find(|s| (x + n * n - s) % n == y).unwrap();
        forward.min(backward)
    }

    fn c21_example() -> CycleColoring {
        CycleColoring::from_reds(21, &[0, 3, 4, 7, 10, 11, 14, 17, 18]).unwrap()
    }

    #[test]
    fn cycle_dist_examples() {
        assert_eq!(cycle_dist(7, 0, 4).unwrap(), 3);
        assert_eq!(cycle_dist(9, 2, 2).unwrap(), 0);
        assert_eq!(cycle_dist(21, 0, 11).unwrap(), dist_by_walking(21, 0, 11));
        assert_eq!(cycle_dist(21, 0, 11).unwrap(), 10);
    }

    #[test]
    fn cycle_dist_matches_walking_oracle() {
        for n in 3..=15 {
            for x in 0..n {
                for y in 0..n {
                    assert_eq!(cycle_dist(n, x, y).unwrap(), dist_by_walking(n, x, y));
                }
            }
        }
    }

    #[test]
    fn cycle_dist_rejects_out_of_range() {
        assert!(matches!(
            cycle_dist(7, 7, 0),
            Err(Error::IndexOutOfRange { n: 7, index: 7 })
        ));
    }

    #[test]
    fn code_of_c21_golden() {
        let col = c21_example();
        assert_eq!(
            code_of(&col, 0).unwrap().counts(),
            &[0, 0, 2, 2, 0, 0, 2, 0, 0, 2]
        );
        assert_eq!(
            code_of(&col, 3).unwrap().counts(),
            &[1, 0, 1, 1, 0, 1, 2, 1, 0, 1]
        );
    }

    #[test]
    fn code_of_all_red_c5() {
        let col = CycleColoring::from_reds(5, &[0, 1, 2, 3, 4]).unwrap();
        for v in 0..5 {
            assert_eq!(code_of(&col, v).unwrap().counts(), &[2, 2]);
        }
    }

    #[test]
    fn all_codes_matches_code_of() {
        let col = c21_example();
        let codes = all_codes(&col);
        for v in 0..21 {
            assert_eq!(codes[v], code_of(&col, v).unwrap());
        }
        let mut distinct = codes.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 4);
    }

    #[test]
    fn all_codes_all_white_c7() {
        let col: CycleColoring = "WWWWWWW".parse().unwrap();
        let codes = all_codes(&col);
        assert!(codes.iter().all(|c| c.counts() == [0, 0, 0]));
    }

    #[test]
    fn partner_examples() {
        let ctx = central_vertex_of(7, 0, 3).unwrap();
        assert_eq!(ctx.partner(4).unwrap(), 6);
        assert_eq!(ctx.partner(ctx.j).unwrap(), ctx.j);

        let ctx21 = central_vertex_of(21, 3, 4).unwrap();
        assert_eq!(ctx21.j, 14);
        assert_eq!(ctx21.partner(3).unwrap(), 4);
    }

    #[test]
    fn central_vertex_examples() {
        assert_eq!(central_vertex_of(11, 0, 3).unwrap().j, 7);
        assert_eq!(central_vertex_of(11, 0, 4).unwrap().j, 2);
        let ctx = central_vertex_of(7, 0, 3).unwrap();
        assert_eq!(ctx.j, 5);
        assert_eq!(ctx.arc_i, vec![2, 3, 4]);
        assert_eq!(ctx.arc_i_prime, vec![6, 0, 1]);
    }

    #[test]
    fn central_vertex_rejects_even_n() {
        assert!(matches!(
            central_vertex_of(8, 0, 3),
            Err(Error::EvenCycleUnsupported(8))
        ));
    }

    #[test]
    fn central_vertex_matches_equidistant_scan() {
        for n in (3..=25).step_by(2) {
            for a in 0..n {
                for b in 0..n {
                    if a == b {
                        continue;
                    }
                    let ctx = central_vertex_of(n, a, b).unwrap();
                    let scan: Vec<usize> = (0..n)
                        .filter(|&j| {
                            dist_unchecked(n, a, j) == dist_unchecked(n, b, j)
                        })
                        .collect();
                    assert_eq!(scan, vec![ctx.j], "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn pair_context_structure() {
        for n in (3..=21).step_by(2) {
            for a in 0..n {
                for b in (a + 1)..n {
                    let ctx = central_vertex_of(n, a, b).unwrap();
                    assert!(ctx.arc_i.contains(&b));
                    assert!(ctx.arc_i_prime.contains(&a));
                    assert_eq!(ctx.arc_i.len(), (n - 1) / 2);
                    assert_eq!(ctx.arc_i_prime.len(), (n - 1) / 2);
                    let mut all: Vec<usize> = ctx
                        .arc_i
                        .iter()
                        .chain(ctx.arc_i_prime.iter())
                        .copied()
                        .chain([ctx.j])
                        .collect();
                    all.sort();
                    assert_eq!(all, (0..n).collect::<Vec<_>>());
                    assert_eq!(
                        dist_unchecked(n, ctx.anti_central[0], ctx.anti_central[1]),
                        1
                    );
                    assert_eq!(
                        dist_unchecked(n, ctx.semi_central[0], ctx.semi_central[1]),
                        2.min(n - 2)
                    );
                }
            }
        }
    }

    #[test]
    fn partner_preserves_distance_and_shift_rule() {
        for n in [7usize, 11, 15, 21, 99] {
            for (a, b) in [(0, 3), (2, n / 2), (5, n - 1)] {
                let ctx = central_vertex_of(n, a, b).unwrap();
                for alpha in 0..n {
                    for beta in 0..n {
                        if alpha != beta {
                            assert_eq!(
                                dist_unchecked(n, alpha, beta),
                                dist_unchecked(
                                    n,
                                    ctx.partner(alpha).unwrap(),
                                    ctx.partner(beta).unwrap()
                                )
                            );
                        }
                    }
                    // (l + t)' = l' - t
                    for t in 0..n {
                        assert_eq!(
                            ctx.partner((alpha + t) % n).unwrap(),
                            (ctx.partner(alpha).unwrap() + n - t) % n
                        );
                    }
                }
                // arc membership swaps under partner
                for l in 0..n {
                    if l != ctx.j {
                        assert_eq!(
                            ctx.in_i(l),
                            ctx.arc_i_prime.contains(&ctx.partner(l).unwrap())
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn code_entries_sum_rule_on_c7() {
        for mask in 0u64..(1 << 7) {
            let col = CycleColoring::from_mask(7, mask).unwrap();
            let reds = col.red_count() as u32;
            for v in 0..7 {
                let own = u32::from(col.color(v).is_red());
                let sum: u32 = code_of(&col, v).unwrap().counts().iter().sum();
                assert_eq!(sum, reds - own);
            }
        }
    }

    #[test]
    fn coloring_text_format() {
        let col: CycleColoring = "rW1w0R".parse().unwrap();
        assert_eq!(col.to_string(), "RWRWWR");
        match "RWXRW".parse::<CycleColoring>() {
            Err(Error::InvalidColorChar { ch: 'X', pos: 3 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        assert!(matches!(
            "RW".parse::<CycleColoring>(),
            Err(Error::CycleTooSmall(2))
        ));
    }
}
