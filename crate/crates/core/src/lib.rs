//! Combinatorics of the hyperoctahedral group `W_n` (type B) and its maximal
//! parabolic quotients `W_n^(k)`.
//!
//! Elements of a quotient are the signed k-Grassmannian permutations
//! `u_1 … u_k | λ̄_r … λ̄_1 v_1 … v_{n-k-r}`. The crate computes their length
//! two ways (inversion count and the `|α| + |λ|` partition pair), enumerates and
//! classifies Bruhat covering pairs into the four types `B1`..`B4`, converts to
//! and from Maya diagrams, takes duals `w∨ = w·w0`, and builds the Bruhat graph
//! of a quotient with DOT/JSON export.
//!
//! Everything is cross-checked against [`oracle`], a brute-force model of the
//! whole group `W_n` that shares no code with the covering enumeration.
//!
//! ```
//! use signed_grassmannian::{covering, GrassmannPerm};
//!
//! let w: GrassmannPerm = GrassmannPerm::parse("2 5 6 | -8 -7 -4 -1 3", 3).unwrap();
//! assert_eq!(w.length(), 34);
//! assert_eq!(covering::covered_by(&w).len(), 5);
//! ```
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example` lists them.

pub mod bruhat_graph;
pub mod cli;
pub mod covering;
mod error;
pub mod grassmannian;
pub mod maya;
pub mod oracle;
pub mod signed_perm;

pub use bruhat_graph::BruhatGraph;
pub use covering::{CoverType, CoveringEdge};
pub use error::{BlockViolation, Error, Result};
pub use grassmannian::{GrassmannPerm, PartitionPair};
pub use maya::{MayaDiagram, MayaSymbol};
pub use signed_perm::{Reflection, SignedPermutation};
