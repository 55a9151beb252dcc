//! Plain signed permutations: simple reflections, reflections, length.
//!
//!     cargo run --example signed_permutations

use signed_grassmannian::{GrassmannPerm, Reflection, SignedPermutation};

fn main() -> signed_grassmannian::Result<()> {
    let w: SignedPermutation = "3 -1 2".parse()?;
    println!(
        "w = {w}, inversions {}, length {}",
        w.inversions(),
        w.length()
    );
    for i in 0..w.rank() {
        let ws = w.apply_simple(i)?;
        println!("  w·s_{i} = {ws}  (length {})", ws.length());
    }
    for t in Reflection::all(w.rank()) {
        let wt = w.apply_reflection(t)?;
        println!("  w·{t:?} = {wt}  (length {})", wt.length());
    }
    for k in 0..=w.rank() {
        let rep = GrassmannPerm::minimal_coset_representative(&w, k)?;
        println!("  k={k}: minimal representative {rep}");
    }
    Ok(())
}
