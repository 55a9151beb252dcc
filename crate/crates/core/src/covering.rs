//! Bruhat covering relations in `W_n^(k)`.
//!
//! `w` covers `w'` exactly when the pair is one of four local moves on the
//! blocks of `w` (values `a > b`):
//!
//! | type | in `w`                      | in `w'`                     | values strictly between `b` and `a` |
//! |------|-----------------------------|-----------------------------|-------------------------------------|
//! | B1   | `1 ∈ λ`                     | `1 ∈ v`                     | n/a                                 |
//! | B2   | `a ∈ λ`, `a - 1 ∈ v`        | `a - 1 ∈ λ`, `a ∈ v`        | none                                |
//! | B3   | `a ∈ u`, `b ∈ v`            | `b ∈ u`, `a ∈ v`            | all in `λ`                          |
//! | B4   | `b ∈ u`, `a ∈ λ`            | `a ∈ u`, `b ∈ λ`            | all in `v`                          |
//!
//! [`covered_by`] and [`covers_of`] generate the moves directly; [`classify`]
//! recognizes them from a pair. None of this consults the length function;
//! agreement with the Bruhat order of `W_n` is established by [`crate::oracle`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmannian::{Block, GrassmannPerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoverType {
    B1,
    B2,
    B3,
    B4,
}

impl CoverType {
    pub const ALL: [CoverType; 4] = [CoverType::B1, CoverType::B2, CoverType::B3, CoverType::B4];

    /// The type of the dual pair `((w')∨, w∨)`.
    pub fn dual(self) -> CoverType {
        match self {
            CoverType::B3 => CoverType::B4,
            CoverType::B4 => CoverType::B3,
            t => t,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CoverType::B1 => "B1",
            CoverType::B2 => "B2",
            CoverType::B3 => "B3",
            CoverType::B4 => "B4",
        }
    }
}

impl fmt::Display for CoverType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CoverType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CoverType::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse {
                position: 1,
                message: format!("unknown covering type '{s}'"),
            })
    }
}

/// `upper` covers `lower`, by a move of type `ctype`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoveringEdge {
    pub upper: GrassmannPerm,
    pub lower: GrassmannPerm,
    pub ctype: CoverType,
}

fn check_same_quotient(w: &GrassmannPerm, w2: &GrassmannPerm) -> Result<()> {
    if (w.n(), w.k()) != (w2.n(), w2.k()) {
        return Err(Error::Contract(format!(
            "cannot compare an element of W_{}^({}) with one of W_{}^({})",
            w.n(),
            w.k(),
            w2.n(),
            w2.k()
        )));
    }
    Ok(())
}

/// Whether every value strictly between `lo` and `hi` lies in `block`.
fn gap_filled_by(blocks: &[Block], lo: usize, hi: usize, block: Block) -> bool {
    (lo + 1..hi).all(|x| blocks[x - 1] == block)
}

/// Recognizes `(w, w2)` as a covering pair and returns its type.
///
/// Returns `Ok(None)` when `w` does not cover `w2`. The gap conditions on B3
/// and B4 are checked explicitly.
pub fn classify(w: &GrassmannPerm, w2: &GrassmannPerm) -> Result<Option<CoverType>> {
    check_same_quotient(w, w2)?;
    let upper = w.blocks();
    let lower = w2.blocks();
    let moved: Vec<usize> = (1..=w.n())
        .filter(|&x| upper[x - 1] != lower[x - 1])
        .collect();

    let ctype = match moved[..] {
        [1] if upper[0] == Block::Lambda && lower[0] == Block::V => Some(CoverType::B1),
        [b, a] => {
            let before = (upper[b - 1], upper[a - 1]);
            let after = (lower[b - 1], lower[a - 1]);
            match (before, after) {
                ((Block::V, Block::Lambda), (Block::Lambda, Block::V)) if a == b + 1 => {
                    Some(CoverType::B2)
                }
                ((Block::V, Block::U), (Block::U, Block::V))
                    if gap_filled_by(&upper, b, a, Block::Lambda) =>
                {
                    Some(CoverType::B3)
                }
                ((Block::U, Block::Lambda), (Block::Lambda, Block::U))
                    if gap_filled_by(&upper, b, a, Block::V) =>
                {
                    Some(CoverType::B4)
                }
                _ => None,
            }
        }
        _ => None,
    };
    Ok(ctype)
}

/// Applies a move to a block assignment and revalidates through the block
/// constructor.
fn rebuild(blocks: &[Block], changes: &[(usize, Block)]) -> GrassmannPerm {
    let mut next = blocks.to_vec();
    for &(value, block) in changes {
        next[value - 1] = block;
    }
    GrassmannPerm::from_block_assignment(&next)
        .expect("covering moves preserve the block structure")
}

fn sort_edges(edges: &mut [CoveringEdge]) {
    edges.sort_by(|x, y| (x.ctype, &x.lower, &x.upper).cmp(&(y.ctype, &y.lower, &y.upper)));
}

/// All `w'` covered by `w`, sorted by type and then by `w'`.
pub fn covered_by(w: &GrassmannPerm) -> Vec<CoveringEdge> {
    let n = w.n();
    let blocks = w.blocks();
    let mut edges = Vec::new();
    let mut emit = |ctype, changes: &[(usize, Block)]| {
        edges.push(CoveringEdge {
            upper: w.clone(),
            lower: rebuild(&blocks, changes),
            ctype,
        });
    };

    if blocks[0] == Block::Lambda {
        emit(CoverType::B1, &[(1, Block::V)]);
    }
    for a in 2..=n {
        if blocks[a - 1] == Block::Lambda && blocks[a - 2] == Block::V {
            emit(CoverType::B2, &[(a - 1, Block::Lambda), (a, Block::V)]);
        }
    }
    // B3 and B4 both need every value strictly between b and a in one block
    // (λ and v respectively), so from each a the scan walks down over that
    // block and stops at the first value outside it.
    for a in 1..=n {
        let (fill, partner, ctype) = match blocks[a - 1] {
            Block::U => (Block::Lambda, Block::V, CoverType::B3),
            Block::Lambda => (Block::V, Block::U, CoverType::B4),
            Block::V => continue,
        };
        let mut b = a - 1;
        while b >= 1 && blocks[b - 1] == fill {
            b -= 1;
        }
        if b >= 1 && blocks[b - 1] == partner {
            let swap = [(a, partner), (b, blocks[a - 1])];
            emit(ctype, &swap);
        }
    }
    sort_edges(&mut edges);
    edges
}

/// All `w` covering `w2`, sorted by type and then by `w`.
pub fn covers_of(w2: &GrassmannPerm) -> Vec<CoveringEdge> {
    let n = w2.n();
    let blocks = w2.blocks();
    let mut edges = Vec::new();
    let mut emit = |ctype, changes: &[(usize, Block)]| {
        edges.push(CoveringEdge {
            upper: rebuild(&blocks, changes),
            lower: w2.clone(),
            ctype,
        });
    };

    if blocks[0] == Block::V {
        emit(CoverType::B1, &[(1, Block::Lambda)]);
    }
    for a in 2..=n {
        if blocks[a - 2] == Block::Lambda && blocks[a - 1] == Block::V {
            emit(CoverType::B2, &[(a - 1, Block::V), (a, Block::Lambda)]);
        }
    }
    // In w2 the larger value a sits in v (undoing B3) or in u (undoing B4).
    for a in 1..=n {
        let (fill, partner, ctype) = match blocks[a - 1] {
            Block::V => (Block::Lambda, Block::U, CoverType::B3),
            Block::U => (Block::V, Block::Lambda, CoverType::B4),
            Block::Lambda => continue,
        };
        let mut b = a - 1;
        while b >= 1 && blocks[b - 1] == fill {
            b -= 1;
        }
        if b >= 1 && blocks[b - 1] == partner {
            let swap = [(a, partner), (b, blocks[a - 1])];
            emit(ctype, &swap);
        }
    }
    sort_edges(&mut edges);
    edges
}
