// Where the most unbalanced and most balanced cuts become PPT under
// depolarizing noise, for several five-qubit states.
//
// `cargo run --example bound_entanglement`

use robust_entanglement::channels::ChannelKind;
use robust_entanglement::experiments::{bound_scan, linear_grid, DEFAULT_THRESHOLD};
use robust_entanglement::states::{make_ghz, make_h, make_rob5, make_w};
use robust_entanglement::Result;

pub fn run_example() -> Result<()> {
    let grid = linear_grid(0.0, 1.0, 201)?;
    let states = [
        ("GHZ_5", make_ghz(5)?),
        ("Rob5", make_rob5()),
        ("W_5", make_w(5)?),
        ("H_5", make_h(5)?),
    ];
    println!("{:<6} {:>10} {:>10}  orientation", "state", "1:4 dies", "2:3 dies");
    for (name, s) in &states {
        let w = bound_scan(s, ChannelKind::Depolarizing, &grid, DEFAULT_THRESHOLD)?;
        println!(
            "{name:<6} {:>10.3} {:>10.3}  {}",
            w.p_unbalanced_vanish,
            w.p_balanced_vanish,
            w.orientation.name()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
