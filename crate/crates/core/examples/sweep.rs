//! Runs every verification property with `count` cases (default 50) and
//! prints the reports with wall-clock times.
//!
//! `cargo run --release --example sweep -- 1000`

use std::time::Instant;

use monosig::harness::verify::{run_verify, Property, VerifyConfig};

fn main() {
    let count: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(50);
    let cfg = VerifyConfig {
        count,
        ..VerifyConfig::default()
    };
    for p in Property::ALL {
        let t = Instant::now();
        let r = run_verify(*p, &cfg);
        print!("{:.1}s {r}", t.elapsed().as_secs_f64());
    }
}
