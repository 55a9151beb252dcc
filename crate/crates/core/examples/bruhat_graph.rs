//! Build the Bruhat graph of W_n^(k) and write it as DOT and JSON.
//!
//!     cargo run --example bruhat_graph -- 4 2 out
//!     dot -Tsvg out/w4_2.dot > w4_2.svg

use std::fs;
use std::path::PathBuf;

use signed_grassmannian::bruhat_graph::{build_graph, DotStyle};
use signed_grassmannian::CoverType;

fn main() -> signed_grassmannian::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(4, |s| s.parse().expect("n"));
    let k: usize = args.next().map_or(2, |s| s.parse().expect("k"));
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "target/graphs".into()));

    let g = build_graph(n, k)?;
    println!("{} nodes, {} edges", g.nodes().len(), g.edges().len());
    println!("rank sizes {:?}", g.rank_sizes());
    for t in CoverType::ALL {
        let c = g.edges().iter().filter(|e| e.ctype == t).count();
        println!("  {t}: {c}");
    }

    fs::create_dir_all(&dir)?;
    let style = DotStyle {
        dual_links: true,
        ..DotStyle::default()
    };
    let dot = dir.join(format!("w{n}_{k}.dot"));
    fs::write(&dot, g.export_dot_with(&style))?;
    let json = dir.join(format!("w{n}_{k}.json"));
    fs::write(&json, g.export_json())?;
    println!("wrote {} and {}", dot.display(), json.display());
    Ok(())
}
