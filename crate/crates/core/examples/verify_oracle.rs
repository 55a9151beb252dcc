//! Check the four covering moves against brute force over the whole group.
//!
//!     cargo run --release --example verify_oracle -- 5

use signed_grassmannian::oracle::verify_theorem;
use signed_grassmannian::CoverType;

fn main() -> signed_grassmannian::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .map_or(5, |s| s.parse().expect("max n"));
    let report = verify_theorem(max_n, None)?;
    for c in &report.checks {
        let types: Vec<String> = CoverType::ALL
            .iter()
            .map(|&t| format!("{t}={}", c.count(t)))
            .collect();
        println!(
            "n={} k={}: {} nodes, {} edges [{}] {}",
            c.n,
            c.k,
            c.nodes,
            c.oracle_edges,
            types.join(" "),
            if c.is_ok() { "ok" } else { "MISMATCH" }
        );
    }
    println!(
        "{}",
        if report.is_ok() {
            "all quotients agree"
        } else {
            "disagreement found"
        }
    );
    Ok(())
}
