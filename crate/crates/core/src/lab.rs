//! Named experiments behind the `resolab` binary. Every experiment is a pure
//! function of its configuration; file output is a separate step.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cover::{LogPoint, SectorRegion};
use crate::deform::{c2_distance, flow_with_steps, DeformationField, DeformationSpec};
use crate::error::{Error, Result};
use crate::geometry::BoundaryCurve;
use crate::nystrom::CurveNodes;
use crate::resonance::{
    beyn_solve_checked, disk_resonances, scan_region, sphere_resonances, track_resonance_with, BeynSettings,
    ContourSpec, ResonanceRecord, ScanSettings,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Experiment {
    Disk,
    Sphere,
    Bie,
    Split,
    Stability,
    Sweep,
}

impl Experiment {
    pub fn as_str(self) -> &'static str {
        match self {
            Experiment::Disk => "disk",
            Experiment::Sphere => "sphere",
            Experiment::Bie => "bie",
            Experiment::Split => "split",
            Experiment::Stability => "stability",
            Experiment::Sweep => "sweep",
        }
    }
}

/// Random ensemble of bump deformations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SweepConfig {
    /// Number of random deformations, not counting the baseline.
    pub samples: usize,
    pub h: f64,
    #[serde(rename = "M")]
    pub order: u32,
    pub t_min: f64,
    pub t_max: f64,
    /// Prepend the undeformed curve as sample 0.
    pub include_baseline: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self { samples: 20, h: 0.5, order: 1, t_min: 0.1, t_max: 0.3, include_baseline: true }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub experiment: Experiment,
    /// Preset name or path to a curve JSON file.
    #[serde(default = "default_curve")]
    pub curve: String,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub deformation: Option<DeformationSpec>,
    #[serde(default)]
    pub contour: Option<ContourSpec>,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub region: Option<SectorRegion>,
    #[serde(default = "default_m_max")]
    pub m_max: u32,
    #[serde(default = "default_l_max")]
    pub l_max: u32,
    /// Deformation times of a split run.
    #[serde(default)]
    pub t_values: Option<Vec<f64>>,
    /// Deformation times of a stability ladder.
    #[serde(default)]
    pub amplitudes: Option<Vec<f64>>,
    #[serde(default)]
    pub sweep: SweepConfig,
    #[serde(default)]
    pub scan: ScanSettings,
    #[serde(default)]
    pub beyn: BeynSettings,
}

fn default_curve() -> String {
    "disk".into()
}

fn default_samples() -> usize {
    256
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("out")
}

fn default_m_max() -> u32 {
    3
}

fn default_l_max() -> u32 {
    2
}

impl ExperimentConfig {
    pub fn from_json_str(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Reads a config; a relative curve path is taken relative to the file.
    pub fn from_file(path: &Path) -> Result<Self> {
        let mut config = Self::from_json_str(&fs::read_to_string(path)?)?;
        if BoundaryCurve::preset(&config.curve, 16).is_err() && Path::new(&config.curve).is_relative() {
            if let Some(dir) = path.parent() {
                let candidate = dir.join(&config.curve);
                if candidate.exists() {
                    config.curve = candidate.to_string_lossy().into_owned();
                }
            }
        }
        Ok(config)
    }

    pub fn load_curve(&self) -> Result<BoundaryCurve> {
        match BoundaryCurve::preset(&self.curve, self.samples) {
            Ok(c) => Ok(c),
            Err(Error::Config(_)) => {
                let path = Path::new(&self.curve);
                if !path.exists() {
                    return Err(Error::Config(format!("curve `{}` is neither a preset nor a file", self.curve)));
                }
                BoundaryCurve::from_json_file(path)?.with_samples(self.samples)
            }
            Err(e) => Err(e),
        }
    }

    fn region_or_default(&self) -> Result<SectorRegion> {
        let region = self.region.unwrap_or(SectorRegion { arg_min: -PI + 0.01, arg_max: -0.01, mod_min: 0.05, mod_max: 8.0 });
        region.validate()?;
        Ok(region)
    }

    fn require_contour(&self) -> Result<ContourSpec> {
        let c = self.contour.ok_or_else(|| Error::Config(format!("{} needs a contour", self.experiment.as_str())))?;
        c.validate()?;
        Ok(c)
    }

    fn require_deformation(&self) -> Result<DeformationSpec> {
        self.deformation.ok_or_else(|| Error::Config(format!("{} needs a deformation", self.experiment.as_str())))
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples < 16 || self.samples % 2 != 0 {
            return Err(Error::Config(format!("samples must be even and at least 16, got {}", self.samples)));
        }
        if let Some(c) = &self.contour {
            c.validate()?;
        }
        if let Some(r) = &self.region {
            r.validate()?;
        }
        Ok(())
    }
}

/// Resonance table of the disk, sphere and bie experiments.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableReport {
    pub experiment: Experiment,
    pub records: Vec<ResonanceRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SplitReport {
    pub t_values: Vec<f64>,
    pub locations_per_t: Vec<Vec<LogPoint>>,
    pub multiplicities_per_t: Vec<Vec<u32>>,
    pub residuals_per_t: Vec<Vec<f64>>,
    pub total_in_contour: u32,
    pub split_detected_at: Option<f64>,
    /// `true` when the contour total is the same at every `t`.
    pub stable: bool,
    pub contour: ContourSpec,
}

impl SplitReport {
    fn records(&self) -> impl Iterator<Item = (f64, ResonanceRecord)> + '_ {
        self.t_values.iter().enumerate().flat_map(move |(k, &t)| {
            (0..self.locations_per_t[k].len()).map(move |j| {
                (
                    t,
                    ResonanceRecord {
                        location: self.locations_per_t[k][j],
                        multiplicity: self.multiplicities_per_t[k][j],
                        residual: self.residuals_per_t[k][j],
                        source: crate::resonance::Source::Bie,
                    },
                )
            })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityStep {
    pub amplitude: f64,
    /// `None` once the ladder has stopped.
    pub c2_distance: Option<f64>,
    /// `None` once the ladder has stopped.
    pub multiplicity: Option<usize>,
    pub records: Vec<ResonanceRecord>,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StabilityReport {
    pub contour: ContourSpec,
    pub base_multiplicity: usize,
    pub steps: Vec<StabilityStep>,
    /// Every amplitude of the ladder kept the base count.
    pub constant: bool,
    /// Largest amplitude up to which the count never changed.
    pub empirical_epsilon: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSample {
    pub index: usize,
    pub baseline: bool,
    pub center_param: f64,
    pub t: f64,
    pub records: Vec<ResonanceRecord>,
    pub has_multiple: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub region: SectorRegion,
    pub samples: Vec<SweepSample>,
    /// Deformed samples carrying a resonance of multiplicity at least 2.
    pub samples_with_multiples: usize,
    pub deformed_samples: usize,
    pub fraction_with_multiples: f64,
    pub baseline_has_multiples: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Report {
    Table(TableReport),
    Split(SplitReport),
    Stability(StabilityReport),
    Sweep(SweepReport),
}

pub fn run(config: &ExperimentConfig) -> Result<Report> {
    config.validate()?;
    Ok(match config.experiment {
        Experiment::Disk => Report::Table(run_disk(config)?),
        Experiment::Sphere => Report::Table(run_sphere(config)?),
        Experiment::Bie => Report::Table(run_bie(config)?),
        Experiment::Split => Report::Split(run_split(config)?),
        Experiment::Stability => Report::Stability(run_stability(config)?),
        Experiment::Sweep => Report::Sweep(run_sweep(config)?),
    })
}

fn expect_kind(config: &ExperimentConfig, kind: Experiment) -> Result<()> {
    if config.experiment != kind {
        return Err(Error::Config(format!("expected a {} config, got {}", kind.as_str(), config.experiment.as_str())));
    }
    Ok(())
}

pub fn run_disk(config: &ExperimentConfig) -> Result<TableReport> {
    expect_kind(config, Experiment::Disk)?;
    let records = disk_resonances(config.m_max, &config.region_or_default()?)?;
    Ok(TableReport { experiment: Experiment::Disk, records })
}

pub fn run_sphere(config: &ExperimentConfig) -> Result<TableReport> {
    expect_kind(config, Experiment::Sphere)?;
    let region = config.region.unwrap_or(SectorRegion { arg_min: -PI, arg_max: PI, mod_min: 0.01, mod_max: 20.0 });
    let records = sphere_resonances(config.l_max, &region)?;
    Ok(TableReport { experiment: Experiment::Sphere, records })
}

/// Contour solve when a contour is given, a region scan otherwise.
pub fn run_bie(config: &ExperimentConfig) -> Result<TableReport> {
    expect_kind(config, Experiment::Bie)?;
    let curve = config.load_curve()?;
    let records = match config.contour {
        Some(c) => {
            c.validate()?;
            beyn_solve_checked(&CurveNodes::new(&curve), &c, &config.beyn)?.records
        }
        None => scan_region(&curve, &config.region_or_default()?, &config.beyn, &config.scan)?,
    };
    Ok(TableReport { experiment: Experiment::Bie, records })
}

pub fn run_split(config: &ExperimentConfig) -> Result<SplitReport> {
    expect_kind(config, Experiment::Split)?;
    let curve = config.load_curve()?;
    let contour = config.require_contour()?;
    let spec = config.require_deformation()?;
    let t_values = config.t_values.clone().unwrap_or_else(|| vec![0.0]);
    let base = beyn_solve_checked(&CurveNodes::new(&curve), &contour, &config.beyn)
        .map_err(|e| Error::PreFlight(format!("multiplicity check on the base curve failed: {e}")))?;
    if base.rank < 2 {
        return Err(Error::PreFlight(format!("base multiplicity inside the contour is {}; nothing to split", base.rank)));
    }
    let field = DeformationField::from_spec(&curve, &spec)?;
    let steps = track_resonance_with(&curve, &field, &t_values, &contour, &config.beyn, spec.rk_steps)?;
    let totals: Vec<u32> = steps.iter().map(|s| s.total_multiplicity()).collect();
    let stable = totals.iter().all(|&m| m == totals[0]) && steps.iter().all(|s| s.rank as u32 == totals[0]);
    let split_detected_at = steps.iter().find(|s| s.records.len() >= 2).map(|s| s.t);
    Ok(SplitReport {
        t_values: steps.iter().map(|s| s.t).collect(),
        locations_per_t: steps.iter().map(|s| s.records.iter().map(|r| r.location).collect()).collect(),
        multiplicities_per_t: steps.iter().map(|s| s.records.iter().map(|r| r.multiplicity).collect()).collect(),
        residuals_per_t: steps.iter().map(|s| s.records.iter().map(|r| r.residual).collect()).collect(),
        total_in_contour: totals[0],
        split_detected_at,
        stable,
        contour,
    })
}

pub fn run_stability(config: &ExperimentConfig) -> Result<StabilityReport> {
    expect_kind(config, Experiment::Stability)?;
    let curve = config.load_curve()?;
    let contour = config.require_contour()?;
    let spec = config.require_deformation()?;
    let amplitudes = config.amplitudes.clone().unwrap_or_else(|| vec![0.0]);
    if amplitudes.windows(2).any(|w| !(w[0] < w[1])) || amplitudes.first().is_some_and(|&a| a < 0.0) {
        return Err(Error::Config("amplitudes must be non-negative and increasing".into()));
    }
    let base = beyn_solve_checked(&CurveNodes::new(&curve), &contour, &config.beyn)
        .map_err(|e| Error::PreFlight(format!("multiplicity check on the base curve failed: {e}")))?;
    let field = DeformationField::from_spec(&curve, &spec)?;
    let mut steps = Vec::new();
    let mut stopped = false;
    for &a in &amplitudes {
        if stopped {
            steps.push(StabilityStep { amplitude: a, c2_distance: None, multiplicity: None, records: vec![], note: None });
            continue;
        }
        let (c2, nodes) = if a == 0.0 {
            (0.0, CurveNodes::new(&curve))
        } else {
            let d = flow_with_steps(&field, a, spec.rk_steps)?;
            (c2_distance(&d), CurveNodes::new(&d.deformed_curve().with_samples(curve.n_samples())?))
        };
        let step = match beyn_solve_checked(&nodes, &contour, &config.beyn) {
            Ok(out) => StabilityStep { amplitude: a, c2_distance: Some(c2), multiplicity: Some(out.rank), records: out.records, note: None },
            Err(e @ (Error::ContourOnResonance { .. } | Error::RankWindingMismatch { .. } | Error::Unconverged(_))) => {
                stopped = true;
                let note = match e {
                    Error::ContourOnResonance { .. } => format!("contour exit: {e}"),
                    _ => e.to_string(),
                };
                StabilityStep { amplitude: a, c2_distance: Some(c2), multiplicity: None, records: vec![], note: Some(note) }
            }
            Err(e) => return Err(e),
        };
        if step.multiplicity.is_some_and(|m| m != base.rank) {
            stopped = true;
        }
        steps.push(step);
    }
    let constant = steps.iter().all(|s| s.multiplicity == Some(base.rank));
    let empirical_epsilon = steps
        .iter()
        .take_while(|s| s.multiplicity == Some(base.rank))
        .map(|s| s.amplitude)
        .fold(0.0, f64::max);
    Ok(StabilityReport { contour, base_multiplicity: base.rank, steps, constant, empirical_epsilon })
}

pub fn run_sweep(config: &ExperimentConfig) -> Result<SweepReport> {
    expect_kind(config, Experiment::Sweep)?;
    let sweep = config.sweep;
    let region = config.region.unwrap_or(SectorRegion { arg_min: -PI + 0.05, arg_max: -0.05, mod_min: 0.5, mod_max: 6.0 });
    region.validate()?;
    if sweep.samples == 0 {
        return Ok(SweepReport {
            region,
            samples: vec![],
            samples_with_multiples: 0,
            deformed_samples: 0,
            fraction_with_multiples: 0.0,
            baseline_has_multiples: None,
        });
    }
    if !(0.0 < sweep.t_min && sweep.t_min <= sweep.t_max) {
        return Err(Error::Config("sweep needs 0 < t_min <= t_max".into()));
    }
    let curve = config.load_curve()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let draws: Vec<(f64, f64)> = (0..sweep.samples)
        .map(|_| (rng.random_range(0.0..2.0 * PI), rng.random_range(sweep.t_min..=sweep.t_max)))
        .collect();
    let mut samples = Vec::new();
    if sweep.include_baseline {
        let records = scan_region(&curve, &region, &config.beyn, &config.scan)?;
        let has_multiple = records.iter().any(|r| r.multiplicity >= 2);
        samples.push(SweepSample { index: 0, baseline: true, center_param: 0.0, t: 0.0, records, has_multiple });
    }
    for (center_param, t) in draws {
        let spec = DeformationSpec { center_param, h: sweep.h, order: sweep.order, t, rk_steps: crate::deform::DEFAULT_RK_STEPS };
        let field = DeformationField::from_spec(&curve, &spec)?;
        let deformed = flow_with_steps(&field, t, spec.rk_steps)?.deformed_curve().with_samples(curve.n_samples())?;
        let records = scan_region(&deformed, &region, &config.beyn, &config.scan)?;
        let has_multiple = records.iter().any(|r| r.multiplicity >= 2);
        samples.push(SweepSample { index: samples.len(), baseline: false, center_param, t, records, has_multiple });
    }
    let deformed: Vec<&SweepSample> = samples.iter().filter(|s| !s.baseline).collect();
    let samples_with_multiples = deformed.iter().filter(|s| s.has_multiple).count();
    let deformed_samples = deformed.len();
    Ok(SweepReport {
        region,
        baseline_has_multiples: samples.iter().find(|s| s.baseline).map(|s| s.has_multiple),
        fraction_with_multiples: samples_with_multiples as f64 / deformed_samples as f64,
        samples_with_multiples,
        deformed_samples,
        samples,
    })
}

/// One row of the CSV mirror.
#[derive(Debug, Serialize)]
struct CsvRow<'a> {
    experiment: &'a str,
    t: Option<f64>,
    modulus: f64,
    argument: f64,
    multiplicity: u32,
    residual: f64,
    source: &'a str,
}

fn csv_rows(report: &Report) -> Vec<(Option<f64>, ResonanceRecord)> {
    match report {
        Report::Table(t) => t.records.iter().map(|r| (None, *r)).collect(),
        Report::Split(s) => s.records().map(|(t, r)| (Some(t), r)).collect(),
        Report::Stability(s) => s.steps.iter().flat_map(|st| st.records.iter().map(move |r| (Some(st.amplitude), *r))).collect(),
        Report::Sweep(s) => s.samples.iter().flat_map(|smp| smp.records.iter().map(move |r| (Some(smp.t), *r))).collect(),
    }
}

pub fn write_csv<W: std::io::Write>(experiment: Experiment, report: &Report, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let rows = csv_rows(report);
    if rows.is_empty() {
        w.write_record(["experiment", "t", "modulus", "argument", "multiplicity", "residual", "source"])?;
    }
    for (t, r) in rows {
        w.serialize(CsvRow {
            experiment: experiment.as_str(),
            t,
            modulus: r.location.modulus,
            argument: r.location.argument,
            multiplicity: r.multiplicity,
            residual: r.residual,
            source: r.source.as_str(),
        })?;
    }
    w.flush()?;
    Ok(())
}

/// Scatter of the split trajectories in the projected `λ` plane, coloured
/// from blue (`t = 0`) to red (last `t`), with the contour circle.
pub fn split_svg(report: &SplitReport) -> String {
    let size = 480.0;
    let pad = 40.0;
    let c = report.contour.center.project();
    let r = report.contour.radius;
    let scale = (size - 2.0 * pad) / (2.0 * r);
    let to_px = |z: num_complex::Complex64| (pad + (z.re - c.re + r) * scale, pad + (c.im + r - z.im) * scale);
    let t_last = report.t_values.last().copied().unwrap_or(0.0).max(f64::MIN_POSITIVE);
    let colour = |t: f64| {
        let u = (t / t_last).clamp(0.0, 1.0);
        format!("rgb({},40,{})", (255.0 * u).round(), (255.0 * (1.0 - u)).round())
    };
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#);
    let _ = writeln!(svg, r#"<rect width="{size}" height="{size}" fill="white"/>"#);
    let (cx, cy) = to_px(c);
    let _ = writeln!(svg, r#"<circle cx="{cx:.3}" cy="{cy:.3}" r="{:.3}" fill="none" stroke="gray" stroke-dasharray="4 3"/>"#, r * scale);
    for track in trajectories(report) {
        let pts: Vec<String> = track.iter().map(|&z| {
            let (x, y) = to_px(z);
            format!("{x:.3},{y:.3}")
        }).collect();
        if pts.len() > 1 {
            let _ = writeln!(svg, r#"<polyline points="{}" fill="none" stroke="black" stroke-width="0.8"/>"#, pts.join(" "));
        }
    }
    for (k, &t) in report.t_values.iter().enumerate() {
        for p in &report.locations_per_t[k] {
            let (x, y) = to_px(p.project());
            let _ = writeln!(svg, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="{}"><title>t = {t}</title></circle>"#, colour(t));
        }
    }
    let _ = writeln!(svg, r#"<text x="{pad}" y="{:.0}" font-family="sans-serif" font-size="12">t = {} … {}</text>"#, size - 12.0, report.t_values.first().copied().unwrap_or(0.0), t_last);
    svg.push_str("</svg>\n");
    svg
}

/// Chain the locations of consecutive `t` by nearest neighbour.
fn trajectories(report: &SplitReport) -> Vec<Vec<num_complex::Complex64>> {
    let mut tracks: Vec<Vec<num_complex::Complex64>> = Vec::new();
    for locs in &report.locations_per_t {
        let pts: Vec<_> = locs.iter().map(|p| p.project()).collect();
        if tracks.is_empty() {
            tracks = pts.iter().map(|&z| vec![z]).collect();
            continue;
        }
        let mut next: Vec<Vec<num_complex::Complex64>> = Vec::new();
        for &z in &pts {
            let nearest = tracks
                .iter()
                .min_by(|a, b| (a.last().unwrap() - z).norm().total_cmp(&(b.last().unwrap() - z).norm()));
            let mut track = nearest.cloned().unwrap_or_default();
            track.push(z);
            next.push(track);
        }
        tracks = next;
    }
    tracks
}

/// Write `<experiment>.json`, `<experiment>.csv` and, for split runs,
/// `split.svg` into `dir`. Returns the written paths.
pub fn write_outputs(config: &ExperimentConfig, report: &Report, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let name = config.experiment.as_str();
    let json_path = dir.join(format!("{name}.json"));
    let mut json = serde_json::to_string_pretty(report)?;
    json.push('\n');
    fs::write(&json_path, json)?;
    let csv_path = dir.join(format!("{name}.csv"));
    write_csv(config.experiment, report, fs::File::create(&csv_path)?)?;
    let mut paths = vec![json_path, csv_path];
    if let Report::Split(s) = report {
        let svg_path = dir.join("split.svg");
        fs::write(&svg_path, split_svg(s))?;
        paths.push(svg_path);
    }
    Ok(paths)
}
