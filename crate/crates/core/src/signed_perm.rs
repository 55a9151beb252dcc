//! Signed permutations: elements of the hyperoctahedral group `W_n`.
//!
//! Only the positive window `w(1) … w(n)` is stored. The rest of the window
//! follows from `w(-i) = -w(i)` and `w(0) = 0`. Group elements act on the
//! right on positions, so `w · s_i` permutes the entries of `w` in place.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    entries: Vec<i32>,
}

/// A reflection of `W_n`, given by the window positions it exchanges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reflection {
    /// `(i, j)(-i, -j)` with `1 <= i < |j| <= n`. A negative `j` crosses zero.
    Transposition { i: usize, j: i32 },
    /// `(i, -i)`: flips the sign at position `i`.
    SignChange(usize),
}

impl Reflection {
    pub fn transposition(i: usize, j: i32, n: usize) -> Result<Self> {
        let t = Reflection::Transposition { i, j };
        t.check(n)?;
        Ok(t)
    }

    pub fn sign_change(i: usize, n: usize) -> Result<Self> {
        let t = Reflection::SignChange(i);
        t.check(n)?;
        Ok(t)
    }

    /// Normalizes the window transposition `(a, b)(-a, -b)` (or `(a, -a)` when
    /// `|a| = |b|`) into the canonical representation.
    pub fn from_window_pair(a: i32, b: i32, n: usize) -> Result<Self> {
        if a == 0 || b == 0 || a == b {
            return Err(Error::Contract(format!(
                "window pair ({a}, {b}) must be two distinct nonzero positions"
            )));
        }
        if a == -b {
            return Reflection::sign_change(a.unsigned_abs() as usize, n);
        }
        let (mut p, mut q) = if a.abs() < b.abs() { (a, b) } else { (b, a) };
        if p < 0 {
            p = -p;
            q = -q;
        }
        Reflection::transposition(p as usize, q, n)
    }

    /// All `n²` reflections of `W_n`.
    pub fn all(n: usize) -> Vec<Reflection> {
        let mut out = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in (i + 1)..=n {
                out.push(Reflection::Transposition { i, j: j as i32 });
                out.push(Reflection::Transposition { i, j: -(j as i32) });
            }
            out.push(Reflection::SignChange(i));
        }
        out
    }

    fn check(&self, n: usize) -> Result<()> {
        let ok = match *self {
            Reflection::Transposition { i, j } => {
                let aj = j.unsigned_abs() as usize;
                i >= 1 && i < aj && aj <= n
            }
            Reflection::SignChange(i) => i >= 1 && i <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Contract(format!(
                "{self:?} is not a reflection of W_{n}"
            )))
        }
    }
}

impl SignedPermutation {
    /// Builds a signed permutation from its one-line notation.
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::Contract("rank must be positive".into()));
        }
        let mut seen = vec![false; n + 1];
        for (pos, &e) in entries.iter().enumerate() {
            let a = e.unsigned_abs() as usize;
            if e == 0 || a > n {
                return Err(Error::Contract(format!(
                    "entry {e} at position {} is outside ±1..=±{n}",
                    pos + 1
                )));
            }
            if seen[a] {
                return Err(Error::Contract(format!(
                    "absolute value {a} repeated at position {}",
                    pos + 1
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { entries })
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<i32>) -> Self {
        debug_assert!(SignedPermutation::new(entries.clone()).is_ok());
        SignedPermutation { entries }
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            entries: (1..=n as i32).collect(),
        }
    }

    /// The longest element `-1 -2 … -n` of `W_n`.
    pub fn longest(n: usize) -> Self {
        SignedPermutation {
            entries: (1..=n as i32).map(|v| -v).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// One-line notation `w(1) … w(n)`.
    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    /// `w(position)` for 1-based `position`.
    pub fn get(&self, position: usize) -> i32 {
        self.entries[position - 1]
    }

    /// `w(i)` for any `i` in the window `[-n, n]`.
    pub fn window(&self, i: i32) -> i32 {
        match i.cmp(&0) {
            Ordering::Greater => self.entries[i as usize - 1],
            Ordering::Less => -self.entries[(-i) as usize - 1],
            Ordering::Equal => 0,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().zip(1..).all(|(&e, i)| e == i)
    }

    /// `w · s_i`: `s_0` negates the first entry, `s_i` swaps entries `i` and `i + 1`.
    pub fn apply_simple(&self, i: usize) -> Result<Self> {
        let n = self.rank();
        if i >= n {
            return Err(Error::Contract(format!(
                "simple reflection s_{i} does not exist in W_{n}"
            )));
        }
        let mut entries = self.entries.clone();
        if i == 0 {
            entries[0] = -entries[0];
        } else {
            entries.swap(i - 1, i);
        }
        Ok(SignedPermutation { entries })
    }

    /// `w · t`.
    pub fn apply_reflection(&self, t: Reflection) -> Result<Self> {
        t.check(self.rank())?;
        let mut entries = self.entries.clone();
        match t {
            Reflection::Transposition { i, j } if j > 0 => entries.swap(i - 1, j as usize - 1),
            Reflection::Transposition { i, j } => {
                let aj = (-j) as usize;
                let (wi, wj) = (entries[i - 1], entries[aj - 1]);
                entries[i - 1] = -wj;
                entries[aj - 1] = -wi;
            }
            Reflection::SignChange(i) => entries[i - 1] = -entries[i - 1],
        }
        Ok(SignedPermutation { entries })
    }

    /// `#{(i, j) : i < j, w(i) > w(j)}` over the positive window.
    pub fn inversions(&self) -> usize {
        let e = &self.entries;
        (0..e.len())
            .map(|i| e[i + 1..].iter().filter(|&&b| e[i] > b).count())
            .sum()
    }

    /// Coxeter length: inversions minus the sum of the negative entries.
    pub fn length(&self) -> usize {
        let negatives: usize = self
            .entries
            .iter()
            .filter(|&&e| e < 0)
            .map(|&e| e.unsigned_abs() as usize)
            .sum();
        self.inversions() + negatives
    }

    /// The product `self · other`; `other` acts first on positions.
    pub fn compose(&self, other: &SignedPermutation) -> Result<Self> {
        if self.rank() != other.rank() {
            return Err(Error::Contract(format!(
                "cannot compose elements of W_{} and W_{}",
                self.rank(),
                other.rank()
            )));
        }
        let entries = other.entries.iter().map(|&x| self.window(x)).collect();
        Ok(SignedPermutation { entries })
    }

    pub fn inverse(&self) -> Self {
        let mut entries = vec![0; self.rank()];
        for (pos, &e) in self.entries.iter().enumerate() {
            let p = pos as i32 + 1;
            entries[e.unsigned_abs() as usize - 1] = if e > 0 { p } else { -p };
        }
        SignedPermutation { entries }
    }

    /// Parses one-line notation of rank `n`. A single `|` marker is accepted
    /// anywhere and ignored.
    pub fn parse_oneline(text: &str, n: usize) -> Result<Self> {
        let (w, _) = Self::parse_marked(text)?;
        if w.rank() != n {
            return Err(Error::Parse {
                position: w.rank().min(n) + 1,
                message: format!("expected {n} entries, found {}", w.rank()),
            });
        }
        Ok(w)
    }

    /// Parses one-line notation, inferring the rank from the entry count.
    /// Also returns the number of entries before the `|` marker, if present.
    pub fn parse_marked(text: &str) -> Result<(Self, Option<usize>)> {
        let spaced = text.replace('|', " | ");
        let mut entries = Vec::new();
        let mut marker = None;
        for (idx, token) in spaced.split_whitespace().enumerate() {
            let position = idx + 1;
            if token == "|" {
                if marker.is_some() {
                    return Err(Error::Parse {
                        position,
                        message: "more than one '|' marker".into(),
                    });
                }
                marker = Some(entries.len());
                continue;
            }
            let value: i32 = token.parse().map_err(|_| Error::Parse {
                position,
                message: format!("'{token}' is not an integer"),
            })?;
            if value == 0 {
                return Err(Error::Parse {
                    position,
                    message: "entries must be nonzero".into(),
                });
            }
            entries.push((position, value));
        }
        if entries.is_empty() {
            return Err(Error::Parse {
                position: 1,
                message: "no entries".into(),
            });
        }
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &(position, value) in &entries {
            let a = value.unsigned_abs() as usize;
            if a > n {
                return Err(Error::Parse {
                    position,
                    message: format!("|{value}| exceeds the rank {n}"),
                });
            }
            if std::mem::replace(&mut seen[a], true) {
                return Err(Error::Parse {
                    position,
                    message: format!("absolute value {a} repeated"),
                });
            }
        }
        let entries = entries.into_iter().map(|(_, v)| v).collect();
        Ok((SignedPermutation { entries }, marker))
    }

    pub fn format_oneline(&self) -> String {
        self.to_string()
    }

    /// One-line notation with a `|` after position `k`.
    pub fn format_marked(&self, k: usize) -> String {
        let mut out = String::new();
        for (pos, e) in self.entries.iter().enumerate() {
            if pos > 0 {
                out.push(' ');
            }
            if pos == k && k > 0 {
                out.push_str("| ");
            }
            out.push_str(&e.to_string());
        }
        if k == self.rank() && k > 0 {
            out.push_str(" |");
        } else if k == 0 {
            out.insert_str(0, "| ");
        }
        out
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in &self.entries {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_marked(s).map(|(w, _)| w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(v: &[i32]) -> SignedPermutation {
        SignedPermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn simple_reflections() {
        let w = sp(&[1, 2]);
        assert_eq!(w.apply_simple(0).unwrap(), sp(&[-1, 2]));
        assert_eq!(w.apply_simple(1).unwrap(), sp(&[2, 1]));
        assert!(w.apply_simple(2).is_err());
        let w = sp(&[2, 5, 6, -8, -7, -4, -1, 3]);
        for i in 0..8 {
            assert_eq!(w.apply_simple(i).unwrap().apply_simple(i).unwrap(), w);
        }
    }

    #[test]
    fn reflections() {
        let w = sp(&[2, -1, 3]);
        assert_eq!(
            w.apply_reflection(Reflection::SignChange(3)).unwrap(),
            sp(&[2, -1, -3])
        );
        let e = sp(&[1, 2]);
        assert_eq!(
            e.apply_reflection(Reflection::Transposition { i: 1, j: 2 })
                .unwrap(),
            sp(&[2, 1])
        );
        assert_eq!(
            e.apply_reflection(Reflection::Transposition { i: 1, j: -2 })
                .unwrap(),
            sp(&[-2, -1])
        );
        assert!(e
            .apply_reflection(Reflection::Transposition { i: 2, j: 2 })
            .is_err());
        assert!(e.apply_reflection(Reflection::SignChange(3)).is_err());
        assert!(Reflection::transposition(2, -1, 3).is_err());
        assert_eq!(Reflection::all(4).len(), 16);
    }

    #[test]
    fn window_pairs_normalize() {
        assert_eq!(
            Reflection::from_window_pair(-2, 2, 3).unwrap(),
            Reflection::SignChange(2)
        );
        assert_eq!(
            Reflection::from_window_pair(-3, -1, 3).unwrap(),
            Reflection::Transposition { i: 1, j: 3 }
        );
        assert_eq!(
            Reflection::from_window_pair(-2, 1, 3).unwrap(),
            Reflection::Transposition { i: 1, j: -2 }
        );
        assert!(Reflection::from_window_pair(0, 1, 3).is_err());
    }

    #[test]
    fn lengths() {
        assert_eq!(SignedPermutation::identity(5).length(), 0);
        let w = sp(&[2, 5, 6, -8, -7, -4, -1, 3]);
        assert_eq!(w.inversions(), 14);
        assert_eq!(w.length(), 34);
        let w = sp(&[1, -2]);
        assert_eq!(w.inversions(), 1);
        assert_eq!(w.length(), 3);
        assert_eq!(SignedPermutation::longest(4).length(), 16);
    }

    #[test]
    fn composition() {
        let w = sp(&[2, -3, 1]);
        let e = SignedPermutation::identity(3);
        assert_eq!(w.compose(&e).unwrap(), w);
        assert_eq!(e.compose(&w).unwrap(), w);
        assert_eq!(sp(&[1, 2]).compose(&sp(&[1, -2])).unwrap(), sp(&[1, -2]));
        assert!(w.compose(&sp(&[1, 2])).is_err());
        assert!(w.compose(&w.inverse()).unwrap().is_identity());
        // w · s_1 agrees with apply_simple
        let s1 = sp(&[2, 1, 3]);
        assert_eq!(w.compose(&s1).unwrap(), w.apply_simple(1).unwrap());
    }

    #[test]
    fn parsing() {
        let w = SignedPermutation::parse_oneline("2 5 6 | -8 -7 -4 -1 3", 8).unwrap();
        assert_eq!(w.entries(), &[2, 5, 6, -8, -7, -4, -1, 3]);
        assert_eq!(
            SignedPermutation::parse_oneline("1 2 3", 3).unwrap(),
            SignedPermutation::identity(3)
        );
        let (w, marker) = SignedPermutation::parse_marked("2 5 6|-8 -7 -4 -1 3").unwrap();
        assert_eq!(marker, Some(3));
        assert_eq!(w.rank(), 8);

        match SignedPermutation::parse_oneline("1 1 -2", 3) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            SignedPermutation::parse_oneline("1 x", 2),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(SignedPermutation::parse_oneline("1 2", 3).is_err());
        assert!(SignedPermutation::parse_oneline("1 | 2 | 3", 3).is_err());
        assert!(SignedPermutation::parse_oneline("1 0", 2).is_err());
        assert!(SignedPermutation::parse_oneline("", 2).is_err());
    }

    #[test]
    fn marked_format() {
        let w = sp(&[2, 5, 6, -8, -7, -4, -1, 3]);
        assert_eq!(w.format_marked(3), "2 5 6 | -8 -7 -4 -1 3");
        assert_eq!(sp(&[1, 2]).format_marked(2), "1 2 |");
        assert_eq!(sp(&[-2, -1]).format_marked(0), "| -2 -1");
    }
}
