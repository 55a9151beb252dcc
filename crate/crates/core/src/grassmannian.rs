//! Minimal coset representatives of `W_n / W_(k)`, the signed k-Grassmannian
//! permutations
//!
//! ```text
//! w = u_1 … u_k | λ̄_r … λ̄_1 v_1 … v_{n-k-r}
//! ```
//!
//! with `0 < u_1 < … < u_k`, `0 < λ_1 < … < λ_r` and `0 < v_1 < … < v_{n-k-r}`.
//! The three blocks partition `{1, …, n}`, so a representative is the same
//! thing as an assignment of every value to one of [`Block::U`],
//! [`Block::Lambda`] or [`Block::V`] with exactly `k` values in `U`.

use std::cmp::Ordering;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{BlockViolation, Error, Result};
use crate::signed_perm::SignedPermutation;

/// The block a value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    U,
    Lambda,
    V,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBlocks")]
pub struct GrassmannPerm {
    n: usize,
    k: usize,
    u: Vec<usize>,
    lambda: Vec<usize>,
    v: Vec<usize>,
}

#[derive(Deserialize)]
struct RawBlocks {
    n: usize,
    k: usize,
    u: Vec<usize>,
    lambda: Vec<usize>,
    v: Vec<usize>,
}

impl TryFrom<RawBlocks> for GrassmannPerm {
    type Error = Error;

    fn try_from(raw: RawBlocks) -> Result<Self> {
        GrassmannPerm::from_blocks(raw.n, raw.k, raw.u, raw.lambda, raw.v)
    }
}

/// The pair of partitions `(α, λ)` attached to a representative, together with
/// the counts it is built from: `d_i = #{λ_j > u_i}` and `μ_i = #{v_j > u_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionPair {
    /// `α_1 ≤ … ≤ α_k`, each at most `n - k`.
    pub alpha: Vec<usize>,
    /// The strict partition `λ_r > … > λ_1 > 0` (largest part first).
    pub lambda: Vec<usize>,
    pub d: Vec<usize>,
    pub mu: Vec<usize>,
}

impl PartitionPair {
    pub fn alpha_size(&self) -> usize {
        self.alpha.iter().sum()
    }

    pub fn lambda_size(&self) -> usize {
        self.lambda.iter().sum()
    }

    /// `|α| + |λ|`.
    pub fn length(&self) -> usize {
        self.alpha_size() + self.lambda_size()
    }
}

fn check_block(block: &'static str, values: &[usize], n: usize) -> Result<()> {
    if let Some(&value) = values.iter().find(|&&x| x == 0 || x > n) {
        return Err(BlockViolation::OutOfRange { block, value }.into());
    }
    if values.windows(2).any(|w| w[0] >= w[1]) {
        return Err(BlockViolation::Unsorted { block }.into());
    }
    Ok(())
}

/// `|W_n^(k)| = 2^(n-k) · C(n, k)`.
pub fn count(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let binom = (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
    binom << (n - k)
}

/// Every element of `W_n^(k)` exactly once, in lexicographic order of the
/// one-line notation. Yields nothing when `k > n`.
pub fn enumerate(n: usize, k: usize) -> impl Iterator<Item = GrassmannPerm> {
    let combos: Box<dyn Iterator<Item = Vec<usize>>> = if k <= n {
        Box::new((1..=n).combinations(k))
    } else {
        Box::new(std::iter::empty())
    };
    // The first k entries are u, and combinations come out in lex order, so
    // only the 2^(n-k) elements sharing a u need sorting among themselves.
    combos.flat_map(move |u| {
        let rest: Vec<usize> = (1..=n).filter(|x| !u.contains(x)).collect();
        let m = rest.len();
        let mut chunk: Vec<GrassmannPerm> = (0u64..1 << m)
            .map(|mask| {
                let (lambda, v): (Vec<usize>, Vec<usize>) =
                    rest.iter().enumerate().partition_map(|(bit, &x)| {
                        if mask >> bit & 1 == 1 {
                            itertools::Either::Left(x)
                        } else {
                            itertools::Either::Right(x)
                        }
                    });
                GrassmannPerm {
                    n,
                    k,
                    u: u.clone(),
                    lambda,
                    v,
                }
            })
            .collect();
        chunk.sort();
        chunk
    })
}

impl GrassmannPerm {
    /// Validates the three blocks of a k-Grassmannian permutation.
    pub fn from_blocks(
        n: usize,
        k: usize,
        u: Vec<usize>,
        lambda: Vec<usize>,
        v: Vec<usize>,
    ) -> Result<Self> {
        if k > n {
            return Err(BlockViolation::KOutOfRange { n, k }.into());
        }
        if u.len() != k {
            return Err(BlockViolation::WrongUSize {
                expected: k,
                found: u.len(),
            }
            .into());
        }
        let total = u.len() + lambda.len() + v.len();
        if total != n {
            return Err(BlockViolation::SizeMismatch {
                expected: n,
                found: total,
            }
            .into());
        }
        check_block("u", &u, n)?;
        check_block("lambda", &lambda, n)?;
        check_block("v", &v, n)?;
        let mut seen = vec![false; n + 1];
        for &x in u.iter().chain(&lambda).chain(&v) {
            if std::mem::replace(&mut seen[x], true) {
                return Err(BlockViolation::Overlap { value: x }.into());
            }
        }
        if let Some(value) = (1..=n).find(|&x| !seen[x]) {
            return Err(BlockViolation::Gap { value }.into());
        }
        Ok(GrassmannPerm { n, k, u, lambda, v })
    }

    /// Builds the representative whose value `x` lies in `blocks[x - 1]`.
    pub fn from_block_assignment(blocks: &[Block]) -> Result<Self> {
        let (mut u, mut lambda, mut v) = (Vec::new(), Vec::new(), Vec::new());
        for (i, b) in blocks.iter().enumerate() {
            match b {
                Block::U => u.push(i + 1),
                Block::Lambda => lambda.push(i + 1),
                Block::V => v.push(i + 1),
            }
        }
        let k = u.len();
        GrassmannPerm::from_blocks(blocks.len(), k, u, lambda, v)
    }

    /// The identity `1 … k | k+1 … n`.
    pub fn identity(n: usize, k: usize) -> Result<Self> {
        GrassmannPerm::from_blocks(n, k, (1..=k).collect(), Vec::new(), (k + 1..=n).collect())
    }

    /// The longest element `1 … k | -n … -(k+1)` of `W_n^(k)`.
    pub fn longest(n: usize, k: usize) -> Result<Self> {
        GrassmannPerm::from_blocks(n, k, (1..=k).collect(), (k + 1..=n).collect(), Vec::new())
    }

    /// `½ (n + 3k + 1)(n − k)`, the length of [`GrassmannPerm::longest`].
    pub fn longest_length(n: usize, k: usize) -> usize {
        (n + 3 * k + 1) * (n - k) / 2
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn u(&self) -> &[usize] {
        &self.u
    }

    /// `λ_1 < … < λ_r`, the absolute values of the barred entries.
    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn v(&self) -> &[usize] {
        &self.v
    }

    /// Number of barred entries.
    pub fn r(&self) -> usize {
        self.lambda.len()
    }

    pub fn block_of(&self, value: usize) -> Block {
        if self.u.binary_search(&value).is_ok() {
            Block::U
        } else if self.lambda.binary_search(&value).is_ok() {
            Block::Lambda
        } else {
            Block::V
        }
    }

    /// Block of each value `1..=n`, indexed by `value - 1`.
    pub fn blocks(&self) -> Vec<Block> {
        let mut out = vec![Block::V; self.n];
        for &x in &self.u {
            out[x - 1] = Block::U;
        }
        for &x in &self.lambda {
            out[x - 1] = Block::Lambda;
        }
        out
    }

    fn oneline_iter(&self) -> impl Iterator<Item = i32> + '_ {
        self.u
            .iter()
            .map(|&x| x as i32)
            .chain(self.lambda.iter().rev().map(|&x| -(x as i32)))
            .chain(self.v.iter().map(|&x| x as i32))
    }

    pub fn oneline(&self) -> Vec<i32> {
        self.oneline_iter().collect()
    }

    pub fn to_signed(&self) -> SignedPermutation {
        SignedPermutation::from_entries_unchecked(self.oneline())
    }

    /// Whether `w` is the minimal-length representative of its coset `w·W_(k)`.
    pub fn is_grassmannian(w: &SignedPermutation, k: usize) -> bool {
        Self::from_signed(w, k).is_ok()
    }

    /// Reads the blocks off a signed permutation, failing on the first
    /// position that breaks the `u | λ̄ v` shape.
    pub fn from_signed(w: &SignedPermutation, k: usize) -> Result<Self> {
        let n = w.rank();
        if k > n {
            return Err(BlockViolation::KOutOfRange { n, k }.into());
        }
        let fail = |position: usize, reason: &'static str| Error::NotGrassmannian {
            k,
            position,
            reason,
        };
        let e = w.entries();
        let mut u = Vec::with_capacity(k);
        for (idx, &x) in e[..k].iter().enumerate() {
            if x < 0 {
                return Err(fail(idx + 1, "negative entry among the first k positions"));
            }
            if u.last().is_some_and(|&prev| prev >= x as usize) {
                return Err(fail(idx + 1, "first k entries are not increasing"));
            }
            u.push(x as usize);
        }
        let mut barred = Vec::new();
        let mut v: Vec<usize> = Vec::new();
        for (idx, &x) in e[k..].iter().enumerate() {
            let position = k + idx + 1;
            if x < 0 {
                if !v.is_empty() {
                    return Err(fail(position, "barred entry after an unbarred one"));
                }
                if barred
                    .last()
                    .is_some_and(|&prev| prev <= x.unsigned_abs() as usize)
                {
                    return Err(fail(
                        position,
                        "barred entries are not decreasing in absolute value",
                    ));
                }
                barred.push(x.unsigned_abs() as usize);
            } else {
                if v.last().is_some_and(|&prev| prev >= x as usize) {
                    return Err(fail(
                        position,
                        "unbarred entries after k are not increasing",
                    ));
                }
                v.push(x as usize);
            }
        }
        barred.reverse();
        Ok(GrassmannPerm {
            n,
            k,
            u,
            lambda: barred,
            v,
        })
    }

    /// The representative of the coset `w·W_(k)`: the first `k` entries made
    /// positive and sorted, the remaining entries sorted with signs kept.
    pub fn minimal_coset_representative(w: &SignedPermutation, k: usize) -> Result<Self> {
        let n = w.rank();
        if k > n {
            return Err(BlockViolation::KOutOfRange { n, k }.into());
        }
        let e = w.entries();
        let mut head: Vec<i32> = e[..k].iter().map(|x| x.abs()).collect();
        head.sort_unstable();
        let mut tail = e[k..].to_vec();
        tail.sort_unstable();
        head.extend(tail);
        Self::from_signed(&SignedPermutation::from_entries_unchecked(head), k)
    }

    /// Parses one-line notation; a `|` marker, when present, must sit after
    /// position `k`.
    pub fn parse(text: &str, k: usize) -> Result<Self> {
        let (w, marker) = SignedPermutation::parse_marked(text)?;
        if let Some(m) = marker {
            if m != k {
                return Err(Error::Contract(format!(
                    "'|' marker follows position {m}, but k = {k}"
                )));
            }
        }
        Self::from_signed(&w, k)
    }

    pub fn partition_pair(&self) -> Result<PartitionPair> {
        let (n, k) = (self.n, self.k);
        let count_above =
            |block: &[usize], x: usize| block.len() - block.partition_point(|&y| y <= x);
        let d: Vec<usize> = self
            .u
            .iter()
            .map(|&x| count_above(&self.lambda, x))
            .collect();
        let mu: Vec<usize> = self.u.iter().map(|&x| count_above(&self.v, x)).collect();
        let alpha: Vec<usize> = self
            .u
            .iter()
            .zip(&d)
            .enumerate()
            .map(|(i, (&ui, &di))| ui + di - (i + 1))
            .collect();
        for i in 0..k {
            if alpha[i] + mu[i] != n - k {
                return Err(Error::Invariant(format!(
                    "alpha_{} = {} but n - k - mu = {}",
                    i + 1,
                    alpha[i],
                    n - k - mu[i]
                )));
            }
            if self.u[i] + d[i] + mu[i] != n - k + i + 1 {
                return Err(Error::Invariant(format!(
                    "u_{} = {} disagrees with n - k + i - d - mu",
                    i + 1,
                    self.u[i]
                )));
            }
        }
        if alpha.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Invariant("alpha is not weakly increasing".into()));
        }
        Ok(PartitionPair {
            alpha,
            lambda: self.lambda.iter().rev().copied().collect(),
            d,
            mu,
        })
    }

    /// `|α| + |λ|`.
    pub fn length(&self) -> usize {
        let mut alpha = 0;
        for (i, &ui) in self.u.iter().enumerate() {
            let d = self.lambda.len() - self.lambda.partition_point(|&y| y <= ui);
            alpha += ui + d - (i + 1);
        }
        alpha + self.lambda.iter().sum::<usize>()
    }

    /// `w∨ = w·w0`: `u` is kept while `λ` and `v` trade places.
    pub fn dual(&self) -> GrassmannPerm {
        GrassmannPerm {
            n: self.n,
            k: self.k,
            u: self.u.clone(),
            lambda: self.v.clone(),
            v: self.lambda.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.lambda.is_empty() && self.u.iter().copied().eq(1..=self.k)
    }

    pub fn is_longest(&self) -> bool {
        self.v.is_empty() && self.u.iter().copied().eq(1..=self.k)
    }
}

impl PartialOrd for GrassmannPerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on one-line notation, after `(n, k)`.
impl Ord for GrassmannPerm {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.k)
            .cmp(&(other.n, other.k))
            .then_with(|| self.oneline_iter().cmp(other.oneline_iter()))
    }
}

impl fmt::Display for GrassmannPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_signed().format_marked(self.k))
    }
}
