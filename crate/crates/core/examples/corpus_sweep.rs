//! Runs every invariant over all spaces with at most N points (default 3).

use hodist::corpus::{run, Corpus};
use hodist::Limits;

fn main() {
    let max_points = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let corpus = Corpus::standard(max_points);
    let started = std::time::Instant::now();
    let report = run(&corpus, &Limits::from_env());
    println!("{} spaces, {} pairs, {} maps in {:.1?}", report.spaces, report.pairs, report.maps, started.elapsed());
    for (check, t) in &report.tallies {
        println!("  {check:<40} {:>8} checked {:>3} failed", t.checked, t.failed);
    }
    for v in &report.violations {
        println!("VIOLATION {} on {}: {}", v.check, v.instance, v.witness);
    }
    println!("triangle reports archived for non-normal domains: {}", report.triangle_archive.len());
    if !report.passed() {
        std::process::exit(1);
    }
}
