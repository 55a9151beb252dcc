//! All representatives of W_n^(k), grouped by length.
//!
//!     cargo run --example enumerate_quotient -- 3 1

use std::collections::BTreeMap;

use signed_grassmannian::grassmannian::{count, enumerate};
use signed_grassmannian::MayaDiagram;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|s| s.parse::<usize>().expect("numeric argument"));
    let n = args.next().unwrap_or(3);
    let k = args.next().unwrap_or(1);
    let mut by_length: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for g in enumerate(n, k) {
        by_length
            .entry(g.length())
            .or_default()
            .push(format!("{g} ({})", MayaDiagram::from(&g)));
    }
    println!("|W_{n}^({k})| = {}", count(n, k));
    for (len, items) in by_length {
        println!("{len:>3}: {}", items.join(", "));
    }
}
