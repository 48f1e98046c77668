//! Experiment drivers: noise-strength sweeps, local-unitary surveys, and the
//! bound-entanglement scanner, plus their CSV output.

use std::io::Write;

use rayon::prelude::*;

use crate::channels::{ChannelKind, NoiseChannel};
use crate::entanglement::{entanglement_profile, Bipartition, EntanglementProfile, ZERO_CLAMP};
use crate::error::{Error, Result};
use crate::linalg::PureState;
use crate::states::random_local_unitary_state;

/// `steps` evenly spaced points from `pmin` to `pmax` inclusive.
pub fn linear_grid(pmin: f64, pmax: f64, steps: usize) -> Result<Vec<f64>> {
    if steps < 1 {
        return Err(Error::InvalidConfig("grid needs at least one point".into()));
    }
    if !(0.0..=1.0).contains(&pmin) || !(0.0..=1.0).contains(&pmax) || pmin > pmax {
        return Err(Error::InvalidConfig(format!(
            "grid bounds [{pmin}, {pmax}] must satisfy 0 <= pmin <= pmax <= 1"
        )));
    }
    if steps == 1 {
        return Ok(vec![pmin]);
    }
    let h = (pmax - pmin) / (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| if i == steps - 1 { pmax } else { pmin + h * i as f64 })
        .collect())
}

/// The default 101-point grid on [0, 1].
pub fn default_grid() -> Vec<f64> {
    linear_grid(0.0, 1.0, 101).expect("valid bounds")
}

fn check_grid(grid: &[f64]) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::InvalidConfig("empty p grid".into()));
    }
    if let Some(p) = grid.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(Error::InvalidStrength(*p));
    }
    if grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::InvalidConfig("p grid must be ascending".into()));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub p: f64,
    pub global_e: f64,
    pub per_m: Vec<f64>,
    pub per_cut: Option<Vec<(Bipartition, f64)>>,
}

impl SweepRecord {
    fn from_profile(p: f64, profile: EntanglementProfile) -> Self {
        Self {
            p,
            global_e: profile.global,
            per_m: profile.per_m,
            per_cut: profile.per_cut,
        }
    }
}

/// Evolves `state` afresh at every grid strength and profiles the result.
pub fn sweep(state: &PureState, kind: ChannelKind, grid: &[f64], per_cut: bool) -> Result<Vec<SweepRecord>> {
    check_grid(grid)?;
    let rho = state.density_matrix();
    grid.par_iter()
        .map(|&p| {
            let evolved = NoiseChannel::new(kind, p)?.apply_all(&rho);
            Ok(SweepRecord::from_profile(p, entanglement_profile(&evolved, per_cut)?))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SurveyResult {
    pub grid: Vec<f64>,
    /// `curves[s][i]` is the global entanglement of sample `s` at `grid[i]`.
    pub curves: Vec<Vec<f64>>,
    pub min: Vec<f64>,
    pub max: Vec<f64>,
}

impl SurveyResult {
    pub fn width(&self) -> Vec<f64> {
        self.max.iter().zip(&self.min).map(|(a, b)| a - b).collect()
    }
}

/// Seed used for survey sample `index`.
pub fn survey_sample_seed(seed: u64, index: usize) -> u64 {
    seed.wrapping_add(index as u64)
}

/// Sweeps `n_samples` random local-unitary variants of `base` and records the
/// per-p envelope.
pub fn lu_survey(
    base: &PureState,
    kind: ChannelKind,
    grid: &[f64],
    n_samples: usize,
    seed: u64,
) -> Result<SurveyResult> {
    if n_samples < 1 {
        return Err(Error::InvalidConfig("survey needs at least one sample".into()));
    }
    check_grid(grid)?;
    let curves = (0..n_samples)
        .into_par_iter()
        .map(|s| {
            let variant = random_local_unitary_state(base, survey_sample_seed(seed, s));
            Ok(sweep(&variant, kind, grid, false)?
                .into_iter()
                .map(|r| r.global_e)
                .collect())
        })
        .collect::<Result<Vec<Vec<f64>>>>()?;
    let fold = |init: f64, f: fn(f64, f64) -> f64| -> Vec<f64> {
        (0..grid.len())
            .map(|i| curves.iter().map(|c| c[i]).fold(init, f))
            .collect()
    };
    let min = fold(f64::INFINITY, f64::min);
    let max = fold(f64::NEG_INFINITY, f64::max);
    Ok(SurveyResult {
        grid: grid.to_vec(),
        curves,
        min,
        max,
    })
}

/// Which class of cuts loses its entanglement first along the grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    UnbalancedFirst,
    BalancedFirst,
    /// Both classes vanish at the same grid point (always the case for N ≤ 3,
    /// where the two classes coincide).
    Simultaneous,
}

impl Orientation {
    pub fn name(self) -> &'static str {
        match self {
            Orientation::UnbalancedFirst => "unbalanced-first",
            Orientation::BalancedFirst => "balanced-first",
            Orientation::Simultaneous => "simultaneous",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundWindow {
    /// First grid p where every 1 : N−1 cut is below threshold.
    pub p_unbalanced_vanish: f64,
    /// False if the unbalanced cuts never vanished (value is then the grid end).
    pub unbalanced_vanished: bool,
    /// First grid p where every ⌊N/2⌋ : ⌈N/2⌉ cut is below threshold.
    pub p_balanced_vanish: f64,
    pub balanced_vanished: bool,
    pub orientation: Orientation,
}

impl BoundWindow {
    /// The p interval in which one class is PPT while the other is still entangled.
    pub fn window(&self) -> (f64, f64) {
        let (a, b) = (self.p_unbalanced_vanish, self.p_balanced_vanish);
        (a.min(b), a.max(b))
    }

    pub fn is_nonempty(&self) -> bool {
        let (a, b) = self.window();
        b > a
    }
}

/// Finds where the most unbalanced and most balanced cuts become PPT.
pub fn bound_scan(state: &PureState, kind: ChannelKind, grid: &[f64], threshold: f64) -> Result<BoundWindow> {
    if threshold.is_nan() || threshold <= 0.0 {
        return Err(Error::InvalidConfig(format!("threshold {threshold} must be positive")));
    }
    let n = state.n_qubits();
    if n < 2 {
        return Err(Error::InvalidConfig("bound scan needs at least 2 qubits".into()));
    }
    let records = sweep(state, kind, grid, true)?;
    let balanced = n / 2;
    let vanish = |class: usize| -> Option<f64> {
        records.iter().find_map(|r| {
            let cuts = r.per_cut.as_ref().expect("per-cut requested");
            cuts.iter()
                .filter(|(c, _)| c.size() == class)
                .all(|(_, v)| *v < threshold)
                .then_some(r.p)
        })
    };
    let end = *grid.last().expect("grid checked nonempty");
    let unbalanced = vanish(1);
    let balanced = vanish(balanced);
    let pu = unbalanced.unwrap_or(end);
    let pb = balanced.unwrap_or(end);
    let orientation = match (unbalanced, balanced) {
        (Some(u), Some(b)) if u < b => Orientation::UnbalancedFirst,
        (Some(u), Some(b)) if b < u => Orientation::BalancedFirst,
        (Some(_), None) => Orientation::UnbalancedFirst,
        (None, Some(_)) => Orientation::BalancedFirst,
        _ => Orientation::Simultaneous,
    };
    Ok(BoundWindow {
        p_unbalanced_vanish: pu,
        unbalanced_vanished: unbalanced.is_some(),
        p_balanced_vanish: pb,
        balanced_vanished: balanced.is_some(),
        orientation,
    })
}

/// Vanishing threshold used by default in [`bound_scan`].
pub const DEFAULT_THRESHOLD: f64 = ZERO_CLAMP;

fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

/// Writes `p,E,E1..Em[,cut_<qubits>...]` with one row per record.
pub fn write_csv<W: Write>(records: &[SweepRecord], out: W) -> Result<()> {
    let first = records
        .first()
        .ok_or_else(|| Error::InvalidConfig("no records to write".into()))?;
    let mut wtr = csv::Writer::from_writer(out);
    let mut header = vec!["p".to_string(), "E".to_string()];
    header.extend((1..=first.per_m.len()).map(|m| format!("E{m}")));
    // Cut columns follow all_bipartitions order, which is lexicographic within each class.
    if let Some(cuts) = &first.per_cut {
        header.extend(cuts.iter().map(|(c, _)| format!("cut_{}", c.label())));
    }
    wtr.write_record(&header)?;
    for r in records {
        let mut row = vec![fmt_f64(r.p), fmt_f64(r.global_e)];
        row.extend(r.per_m.iter().copied().map(fmt_f64));
        if first.per_cut.is_some() {
            let cuts = r
                .per_cut
                .as_ref()
                .ok_or_else(|| Error::InvalidConfig("records disagree on per-cut columns".into()))?;
            row.extend(cuts.iter().map(|(_, v)| fmt_f64(*v)));
        }
        wtr.write_record(&row)?;
    }
    wtr.flush()?;
    Ok(())
}

/// Writes `p,E_min,E_max,sample_0,...` for a survey.
pub fn write_survey_csv<W: Write>(survey: &SurveyResult, out: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    let mut header = vec!["p".to_string(), "E_min".to_string(), "E_max".to_string()];
    header.extend((0..survey.curves.len()).map(|s| format!("sample_{s}")));
    wtr.write_record(&header)?;
    for (i, &p) in survey.grid.iter().enumerate() {
        let mut row = vec![fmt_f64(p), fmt_f64(survey.min[i]), fmt_f64(survey.max[i])];
        row.extend(survey.curves.iter().map(|c| fmt_f64(c[i])));
        wtr.write_record(&row)?;
    }
    wtr.flush()?;
    Ok(())
}

/// Writes a one-row CSV summary of a bound-entanglement scan.
pub fn write_bound_csv<W: Write>(window: &BoundWindow, out: W) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    wtr.write_record([
        "p_unbalanced_vanish",
        "unbalanced_vanished",
        "p_balanced_vanish",
        "balanced_vanished",
        "orientation",
    ])?;
    wtr.write_record([
        fmt_f64(window.p_unbalanced_vanish),
        window.unbalanced_vanished.to_string(),
        fmt_f64(window.p_balanced_vanish),
        window.balanced_vanished.to_string(),
        window.orientation.name().to_string(),
    ])?;
    wtr.flush()?;
    Ok(())
}
