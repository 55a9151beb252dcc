//! Maya diagrams: a row of `n` boxes where box `p` records which block the
//! value `p` belongs to (`∘` for `u`, `•` for `λ`, `×` for `v`).
//!
//! The ASCII form uses `o`, `b` and `x`; the running example
//! `2 5 6 | -8 -7 -4 -1 3` is `boxboobb`. Covering moves and duality become
//! local rewrites of this string, implemented here without going through
//! [`crate::covering`].

use std::fmt;
use std::str::FromStr;

use crate::covering::CoverType;
use crate::error::{Error, Result};
use crate::grassmannian::{Block, GrassmannPerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MayaSymbol {
    /// `∘`, a value in `u`.
    Circle,
    /// `•`, a value in `λ`.
    Bullet,
    /// `×`, a value in `v` (a vacant box).
    Cross,
}

impl MayaSymbol {
    pub fn ascii(self) -> char {
        match self {
            MayaSymbol::Circle => 'o',
            MayaSymbol::Bullet => 'b',
            MayaSymbol::Cross => 'x',
        }
    }

    pub fn unicode(self) -> char {
        match self {
            MayaSymbol::Circle => '∘',
            MayaSymbol::Bullet => '•',
            MayaSymbol::Cross => '×',
        }
    }

    fn from_block(b: Block) -> Self {
        match b {
            Block::U => MayaSymbol::Circle,
            Block::Lambda => MayaSymbol::Bullet,
            Block::V => MayaSymbol::Cross,
        }
    }

    fn block(self) -> Block {
        match self {
            MayaSymbol::Circle => Block::U,
            MayaSymbol::Bullet => Block::Lambda,
            MayaSymbol::Cross => Block::V,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MayaDiagram {
    boxes: Vec<MayaSymbol>,
}

impl MayaDiagram {
    pub fn new(boxes: Vec<MayaSymbol>) -> Result<Self> {
        if boxes.is_empty() {
            return Err(Error::Contract(
                "a Maya diagram needs at least one box".into(),
            ));
        }
        Ok(MayaDiagram { boxes })
    }

    pub fn boxes(&self) -> &[MayaSymbol] {
        &self.boxes
    }

    pub fn n(&self) -> usize {
        self.boxes.len()
    }

    /// Number of `∘` boxes.
    pub fn k(&self) -> usize {
        self.count(MayaSymbol::Circle)
    }

    fn count(&self, s: MayaSymbol) -> usize {
        self.boxes.iter().filter(|&&b| b == s).count()
    }

    pub fn to_unicode(&self) -> String {
        self.boxes.iter().map(|s| s.unicode()).collect()
    }

    pub fn ascii(&self) -> String {
        self.boxes.iter().map(|s| s.ascii()).collect()
    }

    /// Sum over `∘` boxes of `n - k - μ_i` (`μ_i` counting `×` to the right),
    /// plus the positions of the `•` boxes.
    pub fn length(&self) -> usize {
        let (n, k) = (self.n(), self.k());
        let mut crosses_right = 0;
        let mut total = 0;
        for (idx, s) in self.boxes.iter().enumerate().rev() {
            match s {
                MayaSymbol::Cross => crosses_right += 1,
                MayaSymbol::Circle => total += n - k - crosses_right,
                MayaSymbol::Bullet => total += idx + 1,
            }
        }
        total
    }

    /// `μ_i` for each `∘` box, left to right.
    pub fn mu(&self) -> Vec<usize> {
        let mut crosses_right = self.count(MayaSymbol::Cross);
        let mut out = Vec::with_capacity(self.k());
        for s in &self.boxes {
            match s {
                MayaSymbol::Cross => crosses_right -= 1,
                MayaSymbol::Circle => out.push(crosses_right),
                MayaSymbol::Bullet => {}
            }
        }
        out
    }

    /// Exchanges `•` and `×`.
    pub fn dual(&self) -> MayaDiagram {
        let boxes = self
            .boxes
            .iter()
            .map(|s| match s {
                MayaSymbol::Bullet => MayaSymbol::Cross,
                MayaSymbol::Cross => MayaSymbol::Bullet,
                MayaSymbol::Circle => MayaSymbol::Circle,
            })
            .collect();
        MayaDiagram { boxes }
    }

    /// Every diagram obtained by one covering pattern, tagged by type:
    ///
    /// * B1: a leading `•` becomes `×`;
    /// * B2: `× •` becomes `• ×`;
    /// * B3: `× •…• ∘` becomes `∘ •…• ×`;
    /// * B4: `∘ ×…× •` becomes `• ×…× ∘`.
    ///
    /// The runs in B3 and B4 may be empty. Results are sorted by type and then
    /// by the decoded permutation, matching [`crate::covering::covered_by`].
    pub fn covered_by(&self) -> Vec<(MayaDiagram, CoverType)> {
        use MayaSymbol::*;
        let b = &self.boxes;
        let mut out = Vec::new();
        let swapped = |i: usize, j: usize| {
            let mut boxes = b.clone();
            boxes.swap(i, j);
            MayaDiagram { boxes }
        };
        if b[0] == Bullet {
            let mut boxes = b.clone();
            boxes[0] = Cross;
            out.push((MayaDiagram { boxes }, CoverType::B1));
        }
        for i in 0..b.len() - 1 {
            if b[i] == Cross && b[i + 1] == Bullet {
                out.push((swapped(i, i + 1), CoverType::B2));
            }
        }
        for start in 0..b.len() {
            let (fill, end_symbol, ctype) = match b[start] {
                Cross => (Bullet, Circle, CoverType::B3),
                Circle => (Cross, Bullet, CoverType::B4),
                Bullet => continue,
            };
            let mut end = start + 1;
            while end < b.len() && b[end] == fill {
                end += 1;
            }
            if end < b.len() && b[end] == end_symbol {
                out.push((swapped(start, end), ctype));
            }
        }
        out.sort_by_cached_key(|(d, t)| (*t, from_maya(d)));
        out
    }
}

impl From<&GrassmannPerm> for MayaDiagram {
    fn from(g: &GrassmannPerm) -> Self {
        MayaDiagram {
            boxes: g.blocks().into_iter().map(MayaSymbol::from_block).collect(),
        }
    }
}

impl From<&MayaDiagram> for GrassmannPerm {
    fn from(m: &MayaDiagram) -> Self {
        let blocks: Vec<Block> = m.boxes.iter().map(|s| s.block()).collect();
        GrassmannPerm::from_block_assignment(&blocks)
            .expect("every nonempty symbol row is a valid diagram")
    }
}

pub fn to_maya(g: &GrassmannPerm) -> MayaDiagram {
    MayaDiagram::from(g)
}

pub fn from_maya(m: &MayaDiagram) -> GrassmannPerm {
    GrassmannPerm::from(m)
}

impl fmt::Display for MayaDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ascii())
    }
}

/// Accepts the ASCII alphabet `o b x` and the Unicode symbols `∘ • ×`;
/// whitespace between boxes is ignored.
impl FromStr for MayaDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut boxes = Vec::new();
        for (idx, c) in s.chars().filter(|c| !c.is_whitespace()).enumerate() {
            let sym = match c {
                'o' | '∘' => MayaSymbol::Circle,
                'b' | '•' => MayaSymbol::Bullet,
                'x' | '×' => MayaSymbol::Cross,
                other => {
                    return Err(Error::Parse {
                        position: idx + 1,
                        message: format!("'{other}' is not a Maya symbol (expected o, b or x)"),
                    })
                }
            };
            boxes.push(sym);
        }
        MayaDiagram::new(boxes).map_err(|_| Error::Parse {
            position: 1,
            message: "empty diagram".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> MayaDiagram {
        s.parse().unwrap()
    }

    fn running() -> GrassmannPerm {
        GrassmannPerm::parse("2 5 6 | -8 -7 -4 -1 3", 3).unwrap()
    }

    #[test]
    fn encodes_running_example() {
        let d = to_maya(&running());
        assert_eq!(d.ascii(), "boxboobb");
        assert_eq!(d.to_unicode(), "•∘×•∘∘••");
        assert_eq!(from_maya(&m("boxboobb")), running());
        assert_eq!(m("• ∘ × • ∘ ∘ • •"), d);
    }

    #[test]
    fn extremes() {
        let e = GrassmannPerm::identity(5, 2).unwrap();
        assert_eq!(to_maya(&e).ascii(), "ooxxx");
        let w0 = GrassmannPerm::longest(5, 2).unwrap();
        assert_eq!(to_maya(&w0).ascii(), "oobbb");
        assert!(from_maya(&m("ooxxx")).is_identity());
        let all_bullets = from_maya(&m("bbbb"));
        assert_eq!(all_bullets.k(), 0);
        assert_eq!(all_bullets.oneline(), vec![-4, -3, -2, -1]);
    }

    #[test]
    fn lengths() {
        let d = m("boxboobb");
        assert_eq!(d.mu(), vec![1, 0, 0]);
        assert_eq!(d.length(), 34);
        assert_eq!(m("ooxxx").length(), 0);
        assert_eq!(m("oobbb").length(), GrassmannPerm::longest_length(5, 2));
    }

    #[test]
    fn duality() {
        assert_eq!(m("boxboobb").dual().ascii(), "xobxooxx");
        assert_eq!(m("ooxxx").dual(), m("oobbb"));
        assert_eq!(m("boxboobb").dual().dual(), m("boxboobb"));
    }

    #[test]
    fn covering_patterns() {
        let got: Vec<(String, CoverType)> = m("boxboobb")
            .covered_by()
            .into_iter()
            .map(|(d, t)| (d.ascii(), t))
            .collect();
        assert_eq!(
            got,
            vec![
                ("xoxboobb".to_string(), CoverType::B1),
                ("bobxoobb".to_string(), CoverType::B2),
                ("boobxobb".to_string(), CoverType::B3),
                ("boxbobob".to_string(), CoverType::B4),
                ("bbxooobb".to_string(), CoverType::B4),
            ]
        );
        assert!(m("ooxx").covered_by().is_empty());
        let bo: Vec<_> = m("bo").covered_by();
        assert_eq!(bo, vec![(m("xo"), CoverType::B1)]);
        assert_eq!(m("ob").covered_by(), vec![(m("bo"), CoverType::B4)]);
        assert_eq!(m("xo").covered_by(), vec![(m("ox"), CoverType::B3)]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "boq".parse::<MayaDiagram>(),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!("".parse::<MayaDiagram>().is_err());
    }
}
