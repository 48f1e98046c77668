// The Hadamard rotation that maps GHZ onto H_N also swaps bit flips and
// phase flips, so the two decay curves coincide.
//
// `cargo run --example channel_duality`

use robust_entanglement::channels::ChannelKind;
use robust_entanglement::experiments::{linear_grid, sweep};
use robust_entanglement::states::{make_ghz, make_h};
use robust_entanglement::Result;

pub fn run_example() -> Result<()> {
    let grid = linear_grid(0.0, 1.0, 11)?;
    for n in [3, 4, 5] {
        let ghz_pf = sweep(&make_ghz(n)?, ChannelKind::PhaseFlip, &grid, true)?;
        let h_bf = sweep(&make_h(n)?, ChannelKind::BitFlip, &grid, true)?;
        let gap = ghz_pf
            .iter()
            .zip(&h_bf)
            .flat_map(|(a, b)| {
                let (ca, cb) = (a.per_cut.as_ref().unwrap(), b.per_cut.as_ref().unwrap());
                ca.iter().zip(cb).map(|(x, y)| (x.1 - y.1).abs()).collect::<Vec<_>>()
            })
            .fold(0.0f64, f64::max);
        println!("N={n}: GHZ under pf vs H under bf, max per-cut gap {gap:.2e}");
        for (a, b) in ghz_pf.iter().zip(&h_bf).step_by(2) {
            println!("  p={:.1}  {:.6}  {:.6}", a.p, a.global_e, b.global_e);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
