//! Seeded search for graphs where componentwise linearity, linear quotients
//! and vertex splittability disagree.
//!
//! Usage: `cargo run --release --example fuzz_conjecture -- [seed] [count]`

use cwl::harness::{run_fuzz, FuzzConfig};

fn main() -> cwl::Result<()> {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(42);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(1000);
    let config = FuzzConfig {
        seed,
        count,
        verify_all: true,
        ..FuzzConfig::default()
    };
    let report = run_fuzz(&config)?;
    print!("{}", report.to_pretty());
    Ok(())
}
