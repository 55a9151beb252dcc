//! Everything covered by, and everything covering, one element.
//!
//!     cargo run --example covering_pairs

use signed_grassmannian::covering::{covered_by, covers_of};
use signed_grassmannian::{GrassmannPerm, MayaDiagram};

fn main() -> signed_grassmannian::Result<()> {
    let w = GrassmannPerm::parse("2 5 6 | -8 -7 -4 -1 3", 3)?;
    println!("{w}  ({})  length {}", MayaDiagram::from(&w), w.length());
    println!("covers:");
    for e in covered_by(&w) {
        println!(
            "  {}  {}  ({})",
            e.ctype,
            e.lower,
            MayaDiagram::from(&e.lower)
        );
    }
    println!("covered by:");
    for e in covers_of(&w) {
        println!(
            "  {}  {}  ({})",
            e.ctype,
            e.upper,
            MayaDiagram::from(&e.upper)
        );
    }
    Ok(())
}
