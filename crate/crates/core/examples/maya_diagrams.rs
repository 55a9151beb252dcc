//! Maya diagrams as a compact encoding, and covering moves as string rewrites.
//!
//!     cargo run --example maya_diagrams -- boxboobb

use signed_grassmannian::{GrassmannPerm, MayaDiagram};

fn main() -> signed_grassmannian::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "boxboobb".into());
    let d: MayaDiagram = text.parse()?;
    let w = GrassmannPerm::from(&d);
    println!("{d} = {} = {w}", d.to_unicode());
    println!("length {} (from the diagram: {})", w.length(), d.length());
    for (lower, t) in d.covered_by() {
        println!("  {t}: {d} -> {lower}");
    }
    Ok(())
}
