//! The dual w·w0 swaps the barred and trailing blocks and reverses length.
//!
//!     cargo run --example duality

use signed_grassmannian::covering::{classify, covered_by};
use signed_grassmannian::{GrassmannPerm, MayaDiagram};

fn main() -> signed_grassmannian::Result<()> {
    let w = GrassmannPerm::parse("2 5 6 | -8 -7 -4 -1 3", 3)?;
    let dual = w.dual();
    println!("w  = {w}  {}  ℓ = {}", MayaDiagram::from(&w), w.length());
    println!(
        "w∨ = {dual}  {}  ℓ = {}",
        MayaDiagram::from(&dual),
        dual.length()
    );
    println!(
        "ℓ(w) + ℓ(w∨) = {}",
        GrassmannPerm::longest_length(w.n(), w.k())
    );
    for e in covered_by(&w) {
        let mapped =
            classify(&e.lower.dual(), &e.upper.dual())?.expect("duals of covers are covers");
        println!("  {} becomes {mapped}", e.ctype);
    }
    Ok(())
}
