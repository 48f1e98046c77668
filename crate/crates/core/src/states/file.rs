//! Plain-text state files.
//!
//! ```text
//! nqubits 4
//! 3 0.4082482904638631 0
//! 12 0.4082482904638631 0
//! ```
//!
//! One `<index> <re> <im>` line per nonzero amplitude; unlisted indices are zero.
//! Blank lines and lines starting with `#` are ignored.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{PureState, MAX_QUBITS};

/// Largest norm deviation that `load_state` silently renormalizes.
pub const LOAD_NORM_TOL: f64 = 1e-6;

/// Writes `state` in the text format, values in shortest round-trip form.
pub fn write_state<W: Write>(state: &PureState, mut out: W) -> std::io::Result<()> {
    writeln!(out, "nqubits {}", state.n_qubits())?;
    for (i, a) in state.amplitudes().iter().enumerate() {
        if a.re != 0.0 || a.im != 0.0 {
            writeln!(out, "{i} {:?} {:?}", a.re, a.im)?;
        }
    }
    Ok(())
}

pub fn save_state(state: &PureState, path: impl AsRef<Path>) -> Result<()> {
    let mut buf = Vec::new();
    write_state(state, &mut buf)?;
    fs::write(path, buf)?;
    Ok(())
}

pub fn load_state(path: impl AsRef<Path>) -> Result<PureState> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| Error::UnreadableFile {
        path: path.to_path_buf(),
        source,
    })?;
    parse_state(&text, path)
}

/// Parses the text format; `origin` is only used in error messages.
pub fn parse_state(text: &str, origin: &Path) -> Result<PureState> {
    let err = |line: usize, msg: String| Error::Parse {
        path: origin.to_path_buf(),
        line,
        msg,
    };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| err(0, "empty state file".into()))?;
    let n: usize = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["nqubits", n] => n.parse().map_err(|_| err(hline, format!("bad qubit count `{n}`")))?,
        _ => return Err(err(hline, format!("expected `nqubits <N>`, found `{header}`"))),
    };
    if !(1..=MAX_QUBITS).contains(&n) {
        return Err(err(hline, format!("qubit count {n} outside [1, {MAX_QUBITS}]")));
    }
    let dim = 1usize << n;
    let mut amps = vec![Complex64::new(0.0, 0.0); dim];
    let mut seen = vec![false; dim];
    for (ln, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [idx, re, im] = fields.as_slice() else {
            return Err(err(ln, format!("expected `<index> <re> <im>`, found `{line}`")));
        };
        let idx: usize = idx.parse().map_err(|_| err(ln, format!("bad index `{idx}`")))?;
        if idx >= dim {
            return Err(err(ln, format!("index {idx} out of range for {n} qubits")));
        }
        if seen[idx] {
            return Err(err(ln, format!("index {idx} listed twice")));
        }
        seen[idx] = true;
        let parse = |s: &str| -> Result<f64> {
            s.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| err(ln, format!("bad amplitude component `{s}`")))
        };
        amps[idx] = Complex64::new(parse(re)?, parse(im)?);
    }

    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    // A hair of slack so that a stated deviation of exactly 1e-6 is accepted.
    if (norm - 1.0).abs() > LOAD_NORM_TOL * (1.0 + 1e-9) {
        return Err(err(
            0,
            format!("state norm {norm} deviates from 1 by more than {LOAD_NORM_TOL}"),
        ));
    }
    PureState::normalized(amps)
}
