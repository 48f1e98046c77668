use std::path::Path;
use std::process::{Command, Output};

fn robent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_robent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn bipartitions_prints_table_row() {
    let out = robent(&["bipartitions", "--n", "6"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "m=1 6\nm=2 15\nm=3 10\ntotal 31\n"
    );
    assert!(String::from_utf8(out.stderr).unwrap().contains("robent config"));
}

#[test]
fn depolarizing_sweep_endpoints() {
    let dir = tempfile::tempdir().unwrap();
    let csv = path(dir.path(), "f.csv");
    let out = robent(&[
        "sweep",
        "--channel",
        "dep",
        "--state",
        "ghz",
        "--n",
        "3",
        "--steps",
        "2",
        "--out",
        &csv,
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(text, "p,E,E1\n0.0,0.5,0.5\n1.0,0.0,0.0\n");
}

#[test]
fn state_file_round_trip_through_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let state = path(dir.path(), "s.txt");
    assert!(robent(&["state", "--family", "rob5", "--n", "5", "--out", &state])
        .status
        .success());
    let a = path(dir.path(), "a.csv");
    let b = path(dir.path(), "b.csv");
    let file_arg = format!("file:{state}");
    for (s, out) in [("rob5", &a), (file_arg.as_str(), &b)] {
        let o = robent(&[
            "sweep",
            "--channel",
            "bf",
            "--state",
            s,
            "--n",
            "5",
            "--steps",
            "11",
            "--per-cut",
            "--out",
            out,
        ]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn validation_rejects_incompatible_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = path(dir.path(), "x.csv");
    for (family, n) in [("hs", "5"), ("rob5", "4"), ("ghz", "1")] {
        let o = robent(&[
            "sweep",
            "--channel",
            "pd",
            "--state",
            family,
            "--n",
            n,
            "--out",
            &out_path,
        ]);
        assert_eq!(o.status.code(), Some(1), "{family} n={n}");
    }
    assert!(!Path::new(&out_path).exists(), "no output before validation passes");
    assert_eq!(robent(&["sweep", "--channel", "pd"]).status.code(), Some(1));
    assert_eq!(robent(&["nonsense"]).status.code(), Some(1));
    assert_eq!(
        robent(&[
            "optimize",
            "--channel",
            "pd",
            "--p",
            "1.5",
            "--n",
            "2",
            "--out",
            &out_path
        ])
        .status
        .code(),
        Some(1)
    );
}

#[test]
fn unwritable_output_is_a_runtime_error() {
    let o = robent(&[
        "state",
        "--family",
        "ghz",
        "--n",
        "3",
        "--out",
        "/nonexistent-dir/s.txt",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn seeded_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = path(dir.path(), name);
        let o = robent(&[
            "survey",
            "--base",
            "ghz",
            "--channel",
            "pd",
            "--n",
            "3",
            "--samples",
            "5",
            "--seed",
            "9",
            "--steps",
            "6",
            "--out",
            &out,
        ]);
        assert!(o.status.success());
        std::fs::read(out).unwrap()
    };
    let first = run("a.csv");
    assert_eq!(first, run("b.csv"));
    let header = String::from_utf8(first).unwrap().lines().next().unwrap().to_string();
    assert_eq!(header, "p,E_min,E_max,sample_0,sample_1,sample_2,sample_3,sample_4");
}

#[test]
fn optimize_writes_state_and_trajectory() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "best.txt");
    let o = robent(&[
        "optimize",
        "--channel",
        "pd",
        "--p",
        "0.3",
        "--n",
        "2",
        "--restarts",
        "2",
        "--iters",
        "300",
        "--seed",
        "4",
        "--out",
        &out,
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let state = robust_entanglement::states::load_state(&out).unwrap();
    assert_eq!(state.n_qubits(), 2);
    let traj = std::fs::read_to_string(format!("{out}.traj")).unwrap();
    let scores: Vec<f64> = traj
        .lines()
        .map(|l| l.split(' ').nth(1).unwrap().parse().unwrap())
        .collect();
    assert!(scores.windows(2).all(|w| w[1] > w[0]));

    let lu = path(dir.path(), "lu.txt");
    let o = robent(&[
        "optimize",
        "--channel",
        "pd",
        "--p",
        "0.3",
        "--n",
        "3",
        "--restarts",
        "1",
        "--iters",
        "100",
        "--lu-restricted",
        "--base",
        "w",
        "--out",
        &lu,
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn bound_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "bound.csv");
    let o = robent(&[
        "bound",
        "--channel",
        "dep",
        "--state",
        "ghz",
        "--n",
        "4",
        "--steps",
        "101",
        "--out",
        &out,
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let row = text.lines().nth(1).unwrap();
    assert!(row.ends_with("unbalanced-first"), "{row}");
}
