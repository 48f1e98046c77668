// Writes catalog states to the text state format and reads them back; this
// is also how externally supplied states enter the CLI (`--state file:<path>`).
//
// `cargo run --example state_files`

use robust_entanglement::states::{load_state, make_hs, make_rob5, save_state, write_state};
use robust_entanglement::Result;

pub fn run_example() -> Result<()> {
    let dir = std::env::temp_dir().join(format!("robent-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    for (name, state) in [("hs", make_hs()), ("rob5", make_rob5())] {
        let path = dir.join(format!("{name}.txt"));
        save_state(&state, &path)?;
        let back = load_state(&path)?;
        println!(
            "{name}: {} qubits, round trip exact: {}",
            back.n_qubits(),
            back == state
        );
    }
    let mut text = Vec::new();
    write_state(&make_hs(), &mut text)?;
    print!("{}", String::from_utf8_lossy(&text));
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
