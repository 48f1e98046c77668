// Bipartition counts and per-class negativities of the catalog states.
//
// `cargo run --example entanglement_profiles`

use robust_entanglement::entanglement::{entanglement_profile, enumerate_bipartitions, n_cuts};
use robust_entanglement::states::{make_ghz, make_h, make_hs, make_rob5, make_w};
use robust_entanglement::Result;

pub fn run_example() -> Result<()> {
    println!("non-equivalent bipartitions");
    for n in 3..=7 {
        let counts = (1..=n / 2)
            .map(|m| enumerate_bipartitions(n, m).map(|b| b.len().to_string()))
            .collect::<Result<Vec<_>>>()?;
        println!("  N={n}: m-classes [{}], total {}", counts.join(", "), n_cuts(n));
    }

    println!("\ninitial entanglement");
    let states = [
        ("GHZ_4", make_ghz(4)?),
        ("W_4", make_w(4)?),
        ("H_4", make_h(4)?),
        ("HS", make_hs()),
        ("Rob5", make_rob5()),
        ("W_5", make_w(5)?),
    ];
    for (name, s) in &states {
        let p = entanglement_profile(&s.density_matrix(), true)?;
        let per_m: Vec<String> = p.per_m.iter().map(|e| format!("{e:.4}")).collect();
        println!(
            "  {name:<6} E = {:.4}  E(m) = [{}]  flat = {:.4}",
            p.global,
            per_m.join(", "),
            p.flat_average().unwrap_or(f64::NAN)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
