// Searches for the three-qubit state whose entanglement best survives
// phase damping, and compares it with GHZ and W. Also runs the
// GHZ-orbit-restricted search.
//
// `cargo run --example optimize_robust_state -- [p]`

use robust_entanglement::channels::ChannelKind;
use robust_entanglement::optimizer::{score, search, SearchConfig, SearchSpace};
use robust_entanglement::states::{make_ghz, make_w};
use robust_entanglement::Result;

pub fn run_example_with(p: f64, max_iters: usize, restarts: usize) -> Result<()> {
    let ch = ChannelKind::PhaseDamping.at(p)?;
    let base = SearchConfig {
        max_iters,
        restarts,
        seed: 7,
        ..SearchConfig::new(3, ch)
    };
    let free = search(&base)?;
    let orbit = search(&SearchConfig {
        space: SearchSpace::LocalUnitary { base: make_ghz(3)? },
        ..base.clone()
    })?;
    println!("phase damping p = {p}");
    println!("  GHZ_3            {:.6}", score(&make_ghz(3)?, &ch)?);
    println!("  W_3              {:.6}", score(&make_w(3)?, &ch)?);
    println!(
        "  free search      {:.6} (initial E {:.4}, restart {}, {} accepted moves)",
        free.evolved_score,
        free.initial_score,
        free.restart_index,
        free.trajectory.len() - 1
    );
    println!("  GHZ-orbit search {:.6}", orbit.evolved_score);
    Ok(())
}

pub fn run_example() -> Result<()> {
    run_example_with(0.5, 300, 2)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let p = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0.5);
    run_example_with(p, 5_000, 8)
}
