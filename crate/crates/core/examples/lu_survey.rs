// Random local-unitary variants of GHZ_4: the depolarizing envelope is flat,
// while under phase damping H_4 sits on top of the envelope.
//
// `cargo run --example lu_survey -- [samples]`

use robust_entanglement::channels::ChannelKind;
use robust_entanglement::experiments::{linear_grid, lu_survey, sweep};
use robust_entanglement::states::{make_ghz, make_h};
use robust_entanglement::Result;

pub fn run_example_with(samples: usize) -> Result<()> {
    let grid = linear_grid(0.0, 1.0, 11)?;
    let ghz = make_ghz(4)?;
    let h4 = sweep(&make_h(4)?, ChannelKind::PhaseDamping, &grid, false)?;
    for kind in [ChannelKind::Depolarizing, ChannelKind::PhaseDamping] {
        let survey = lu_survey(&ghz, kind, &grid, samples, 1)?;
        println!("{kind}: {samples} LU variants of GHZ_4");
        for (i, p) in grid.iter().enumerate() {
            print!("  p={p:.1}  min {:.6}  max {:.6}", survey.min[i], survey.max[i]);
            if kind == ChannelKind::PhaseDamping {
                print!("  H_4 {:.6}", h4[i].global_e);
            }
            println!();
        }
    }
    Ok(())
}

pub fn run_example() -> Result<()> {
    run_example_with(10)
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let samples = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100);
    run_example_with(samples)
}
