//! Runs every randomized corpus once and prints a one-line summary each.
//!
//! ```text
//! cargo run --release --example corpora -- [seed]
//! ```

use std::time::Instant;

use pushlab::corpus::{named_strategy_agreement, run_corpus, CorpusKind};
use pushlab::Exec;

fn main() -> Result<(), pushlab::Error> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let sizes = [500, 1000, 200, 50, 300, 200];
    for (kind, count) in CorpusKind::ALL.into_iter().zip(sizes) {
        let start = Instant::now();
        let r = run_corpus(kind, count, seed, Exec::default())?;
        println!(
            "{kind:<20} {count:>5} graphs  {} violations  {:?}",
            r.violations.len(),
            start.elapsed()
        );
        for v in r.violations.iter().take(3) {
            println!("    #{}: {}", v.index, v.detail);
        }
    }
    let (pairs, bad) = named_strategy_agreement(Exec::default())?;
    println!(
        "named graphs vs small tournaments: {pairs} pairs, {} disagreements",
        bad.len()
    );
    Ok(())
}
