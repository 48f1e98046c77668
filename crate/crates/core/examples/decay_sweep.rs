// Entanglement decay of the four-qubit GHZ, W and HS states under each channel.
//
// `cargo run --example decay_sweep`

use robust_entanglement::channels::ChannelKind;
use robust_entanglement::experiments::{linear_grid, sweep};
use robust_entanglement::states::{make_ghz, make_hs, make_w};
use robust_entanglement::Result;

pub fn run_example() -> Result<()> {
    let grid = linear_grid(0.0, 1.0, 11)?;
    let states = [("GHZ", make_ghz(4)?), ("W", make_w(4)?), ("HS", make_hs())];
    for kind in ChannelKind::ALL {
        println!("channel {kind}");
        println!("{:>6} {:>10} {:>10} {:>10}", "p", "GHZ", "W", "HS");
        let curves = states
            .iter()
            .map(|(_, s)| sweep(s, kind, &grid, false))
            .collect::<Result<Vec<_>>>()?;
        for (i, p) in grid.iter().enumerate() {
            println!(
                "{p:>6.2} {:>10.6} {:>10.6} {:>10.6}",
                curves[0][i].global_e, curves[1][i].global_e, curves[2][i].global_e
            );
        }
        println!();
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
