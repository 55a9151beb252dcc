//! Length of a k-Grassmannian permutation, two ways.
//!
//!     cargo run --example length_and_partitions -- "2 5 6 | -8 -7 -4 -1 3" 3

use signed_grassmannian::GrassmannPerm;

fn main() -> signed_grassmannian::Result<()> {
    let mut args = std::env::args().skip(1);
    let text = args
        .next()
        .unwrap_or_else(|| "2 5 6 | -8 -7 -4 -1 3".into());
    let k: usize = args.next().map_or(3, |s| s.parse().expect("k is a number"));

    let w = GrassmannPerm::parse(&text, k)?;
    let pp = w.partition_pair()?;
    println!("w         = {w}");
    println!("inv - neg = {}", w.to_signed().length());
    println!(
        "|α| + |λ| = {} + {} = {}",
        pp.alpha_size(),
        pp.lambda_size(),
        pp.length()
    );
    println!(
        "α = {:?}  λ = {:?}  μ = {:?}  d = {:?}",
        pp.alpha, pp.lambda, pp.mu, pp.d
    );
    println!("ℓ(w0) = {}", GrassmannPerm::longest_length(w.n(), k));
    Ok(())
}
