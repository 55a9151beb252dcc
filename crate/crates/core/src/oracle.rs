//! Brute-force ground truth for the Bruhat order.
//!
//! [`FullGroupTable`] materializes all `2^n · n!` elements of `W_n`, their
//! lengths, and every covering relation of the full group, found by applying
//! each reflection `(i, j)(-i, -j)` / `(i, -i)` with `w(i) > w(j)` and keeping
//! the ones that drop the length by exactly one. The order itself is the
//! reflexive-transitive closure of those covers.
//!
//! The quotient `W_n^(k)` is picked out by its descent definition
//! (`ℓ(w) < ℓ(w·s_i)` for every `i ≠ k`), and its covering pairs are the
//! comparable pairs of adjacent length. None of this touches
//! [`crate::covering`]; [`verify_theorem`] compares the two.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::covering::{self, CoverType};
use crate::error::{Error, Result};
use crate::grassmannian::{self, GrassmannPerm};
use crate::signed_perm::{Reflection, SignedPermutation};

/// Largest rank built unless the caller raises it (`|W_6| = 46080`).
pub const DEFAULT_MAX_RANK: usize = 6;

/// Bumped whenever the cache layout or element indexing changes.
pub const CACHE_FORMAT_VERSION: u32 = 1;

pub fn group_order(n: usize) -> usize {
    (1..=n).product::<usize>() << n
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Dense index: Lehmer rank of `|w|` times `2^n`, plus the sign mask.
fn index_of(w: &SignedPermutation) -> usize {
    let e = w.entries();
    let n = e.len();
    let mut lehmer = 0;
    let mut mask = 0;
    for i in 0..n {
        let ai = e[i].abs();
        let smaller = e[i + 1..].iter().filter(|x| x.abs() < ai).count();
        lehmer += smaller * factorial(n - 1 - i);
        if e[i] < 0 {
            mask |= 1 << i;
        }
    }
    (lehmer << n) | mask
}

fn element_at(n: usize, index: usize) -> SignedPermutation {
    let mask = index & ((1 << n) - 1);
    let mut lehmer = index >> n;
    let mut pool: Vec<i32> = (1..=n as i32).collect();
    let mut entries = Vec::with_capacity(n);
    for i in 0..n {
        let f = factorial(n - 1 - i);
        let v = pool.remove(lehmer / f);
        lehmer %= f;
        entries.push(if mask >> i & 1 == 1 { -v } else { v });
    }
    SignedPermutation::from_entries_unchecked(entries)
}

#[derive(Debug, Clone)]
pub struct FullGroupTable {
    n: usize,
    elements: Vec<SignedPermutation>,
    lengths: Vec<usize>,
    /// `(lower, upper)` index pairs, sorted.
    cover_edges: Vec<(usize, usize)>,
    up: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct CachedTable {
    format_version: u32,
    n: usize,
    lengths: Vec<usize>,
    cover_edges: Vec<(usize, usize)>,
}

/// Builds the table for `W_n`, refusing ranks above [`DEFAULT_MAX_RANK`].
pub fn build_full_group(n: usize) -> Result<FullGroupTable> {
    build_full_group_bounded(n, DEFAULT_MAX_RANK)
}

pub fn build_full_group_bounded(n: usize, max_rank: usize) -> Result<FullGroupTable> {
    if n == 0 {
        return Err(Error::Contract("rank must be positive".into()));
    }
    if n > max_rank {
        return Err(Error::ResourceGuard { n, max: max_rank });
    }
    let order = group_order(n);
    let elements: Vec<SignedPermutation> = (0..order).map(|i| element_at(n, i)).collect();
    let lengths: Vec<usize> = elements.par_iter().map(|w| w.length()).collect();

    let window: Vec<i32> = (-(n as i32)..=n as i32).filter(|&i| i != 0).collect();
    let mut cover_edges: Vec<(usize, usize)> = elements
        .par_iter()
        .enumerate()
        .flat_map_iter(|(upper, w)| {
            let mut found = Vec::new();
            for (a, &i) in window.iter().enumerate() {
                for &j in &window[a + 1..] {
                    if w.window(i) <= w.window(j) {
                        continue;
                    }
                    let t =
                        Reflection::from_window_pair(i, j, n).expect("window positions are valid");
                    let lower = index_of(&w.apply_reflection(t).expect("valid reflection"));
                    if lengths[upper] == lengths[lower] + 1 {
                        found.push((lower, upper));
                    }
                }
            }
            found
        })
        .collect();
    cover_edges.par_sort_unstable();
    cover_edges.dedup();
    Ok(FullGroupTable::assemble(n, elements, lengths, cover_edges))
}

/// Loads a cached table from `dir` if one matches `n` and the current format,
/// otherwise builds it and writes the cache.
pub fn load_or_build(dir: &Path, n: usize, max_rank: usize) -> Result<FullGroupTable> {
    if n > max_rank {
        return Err(Error::ResourceGuard { n, max: max_rank });
    }
    if let Some(table) = FullGroupTable::load(dir, n)? {
        return Ok(table);
    }
    let table = build_full_group_bounded(n, max_rank)?;
    table.save(dir)?;
    Ok(table)
}

impl FullGroupTable {
    fn assemble(
        n: usize,
        elements: Vec<SignedPermutation>,
        lengths: Vec<usize>,
        cover_edges: Vec<(usize, usize)>,
    ) -> Self {
        let mut up = vec![Vec::new(); elements.len()];
        for &(lower, upper) in &cover_edges {
            up[lower].push(upper);
        }
        FullGroupTable {
            n,
            elements,
            lengths,
            cover_edges,
            up,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &SignedPermutation {
        &self.elements[index]
    }

    pub fn index_of(&self, w: &SignedPermutation) -> Option<usize> {
        (w.rank() == self.n).then(|| index_of(w))
    }

    pub fn length(&self, index: usize) -> usize {
        self.lengths[index]
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// `(lower, upper)` pairs with `upper` covering `lower` in `W_n`.
    pub fn cover_edges(&self) -> &[(usize, usize)] {
        &self.cover_edges
    }

    /// Indices covering `index`.
    pub fn upper_covers(&self, index: usize) -> &[usize] {
        &self.up[index]
    }

    /// `a ≤ b` in the Bruhat order, by reachability along covers. Covers
    /// raise the length by one, so the search stops at level `ℓ(b)`.
    pub fn bruhat_leq(&self, a: usize, b: usize) -> bool {
        if a == b {
            return true;
        }
        let target_len = self.lengths[b];
        if self.lengths[a] >= target_len {
            return false;
        }
        let mut seen = FixedBitSet::with_capacity(self.len());
        let mut frontier = vec![a];
        for _ in self.lengths[a]..target_len {
            let mut next = Vec::new();
            for &x in &frontier {
                for &y in &self.up[x] {
                    if y == b {
                        return true;
                    }
                    if !seen.put(y) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        false
    }

    /// Every element above `a`, including `a`.
    pub fn upset(&self, a: usize) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.len());
        seen.insert(a);
        let mut frontier = vec![a];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &x in &frontier {
                for &y in &self.up[x] {
                    if !seen.put(y) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        seen
    }

    /// Indices of `W_n^(k)`: elements with `ℓ(w) < ℓ(w·s_i)` for all `i ≠ k`.
    pub fn quotient_indices(&self, k: usize) -> Result<Vec<usize>> {
        if k > self.n {
            return Err(Error::Contract(format!("k = {k} exceeds n = {}", self.n)));
        }
        Ok((0..self.len())
            .filter(|&idx| {
                let w = &self.elements[idx];
                (0..self.n).filter(|&i| i != k).all(|i| {
                    let ws = w.apply_simple(i).expect("simple reflection in range");
                    self.lengths[idx] < self.lengths[index_of(&ws)]
                })
            })
            .collect())
    }

    /// Ground-truth covering pairs `(lower, upper)` of `W_n^(k)`: comparable
    /// quotient elements whose lengths differ by one.
    pub fn quotient_covers(&self, k: usize) -> Result<BTreeSet<(GrassmannPerm, GrassmannPerm)>> {
        let quotient = self.quotient_indices(k)?;
        let top = quotient.iter().map(|&i| self.lengths[i]).max().unwrap_or(0);
        let mut levels = vec![Vec::new(); top + 1];
        for &i in &quotient {
            levels[self.lengths[i]].push(i);
        }
        let to_grass = |i: usize| {
            GrassmannPerm::from_signed(&self.elements[i], k).map_err(|e| {
                Error::Invariant(format!(
                    "{} satisfies the descent condition for k = {k} but has no block form: {e}",
                    self.elements[i]
                ))
            })
        };
        let mut pairs = BTreeSet::new();
        for window in levels.windows(2) {
            for &lo in &window[0] {
                for &hi in &window[1] {
                    if self.bruhat_leq(lo, hi) {
                        pairs.insert((to_grass(lo)?, to_grass(hi)?));
                    }
                }
            }
        }
        Ok(pairs)
    }

    fn cache_path(dir: &Path, n: usize) -> PathBuf {
        dir.join(format!("w{n}-v{CACHE_FORMAT_VERSION}.json"))
    }

    pub fn save(&self, dir: &Path) -> Result<PathBuf> {
        fs::create_dir_all(dir)?;
        let path = Self::cache_path(dir, self.n);
        let doc = CachedTable {
            format_version: CACHE_FORMAT_VERSION,
            n: self.n,
            lengths: self.lengths.clone(),
            cover_edges: self.cover_edges.clone(),
        };
        fs::write(&path, serde_json::to_vec(&doc)?)?;
        Ok(path)
    }

    /// Reads a cached table; returns `Ok(None)` when there is no usable cache.
    pub fn load(dir: &Path, n: usize) -> Result<Option<Self>> {
        let path = Self::cache_path(dir, n);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let Ok(doc) = serde_json::from_slice::<CachedTable>(&bytes) else {
            return Ok(None);
        };
        let order = group_order(n);
        let consistent = doc.format_version == CACHE_FORMAT_VERSION
            && doc.n == n
            && doc.lengths.len() == order
            && doc.cover_edges.iter().all(|&(lo, hi)| {
                lo < order && hi < order && doc.lengths[hi] == doc.lengths[lo] + 1
            });
        if !consistent {
            return Ok(None);
        }
        let elements: Vec<SignedPermutation> = (0..order).map(|i| element_at(n, i)).collect();
        Ok(Some(Self::assemble(
            n,
            elements,
            doc.lengths,
            doc.cover_edges,
        )))
    }
}

/// Ground-truth covering pairs of `W_n^(k)`, building the full group first.
pub fn quotient_cover_oracle(
    n: usize,
    k: usize,
) -> Result<BTreeSet<(GrassmannPerm, GrassmannPerm)>> {
    build_full_group(n)?.quotient_covers(k)
}

/// Outcome of comparing the constructive covers of one quotient with the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientCheck {
    pub n: usize,
    pub k: usize,
    pub nodes: usize,
    pub theorem_edges: usize,
    pub oracle_edges: usize,
    pub type_counts: [usize; 4],
    /// Oracle pairs the covering moves did not produce.
    pub missing: Vec<(GrassmannPerm, GrassmannPerm)>,
    /// Produced pairs the oracle does not have.
    pub extra: Vec<(GrassmannPerm, GrassmannPerm)>,
    /// Produced edges whose tag `classify` disagrees with, or that were produced twice.
    pub mislabeled: Vec<(GrassmannPerm, GrassmannPerm)>,
}

impl QuotientCheck {
    /// Number of produced edges of type `t`.
    pub fn count(&self, t: CoverType) -> usize {
        self.type_counts[t as usize]
    }

    pub fn is_ok(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.mislabeled.is_empty()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<QuotientCheck>,
}

impl VerificationReport {
    pub fn is_ok(&self) -> bool {
        self.checks.iter().all(QuotientCheck::is_ok)
    }
}

/// Compares the constructive covering relation of `W_n^(k)` against the
/// oracle table of `W_n`.
pub fn check_quotient(table: &FullGroupTable, k: usize) -> Result<QuotientCheck> {
    let n = table.n();
    let oracle = table.quotient_covers(k)?;
    let nodes: Vec<GrassmannPerm> = grassmannian::enumerate(n, k).collect();
    let mut theorem = BTreeSet::new();
    let mut type_counts = [0; 4];
    let mut mislabeled = Vec::new();
    for w in &nodes {
        for edge in covering::covered_by(w) {
            type_counts[edge.ctype as usize] += 1;
            let pair = (edge.lower.clone(), edge.upper.clone());
            let tag = covering::classify(&edge.upper, &edge.lower)?;
            if tag != Some(edge.ctype) || !theorem.insert(pair.clone()) {
                mislabeled.push(pair);
            }
        }
    }
    Ok(QuotientCheck {
        n,
        k,
        nodes: nodes.len(),
        theorem_edges: theorem.len(),
        oracle_edges: oracle.len(),
        type_counts,
        missing: oracle.difference(&theorem).cloned().collect(),
        extra: theorem.difference(&oracle).cloned().collect(),
        mislabeled,
    })
}

/// Runs [`check_quotient`] for every `1 ≤ n ≤ max_n` and `0 ≤ k ≤ n`.
pub fn verify_theorem(max_n: usize, cache: Option<&Path>) -> Result<VerificationReport> {
    verify_theorem_bounded(max_n, DEFAULT_MAX_RANK, cache)
}

pub fn verify_theorem_bounded(
    max_n: usize,
    max_rank: usize,
    cache: Option<&Path>,
) -> Result<VerificationReport> {
    if max_n > max_rank {
        return Err(Error::ResourceGuard {
            n: max_n,
            max: max_rank,
        });
    }
    let mut report = VerificationReport::default();
    for n in 1..=max_n {
        let table = match cache {
            Some(dir) => load_or_build(dir, n, max_rank)?,
            None => build_full_group_bounded(n, max_rank)?,
        };
        for k in 0..=n {
            report.checks.push(check_quotient(&table, k)?);
        }
    }
    Ok(report)
}
