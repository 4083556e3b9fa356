use std::io::Write;
use std::path::Path;

use rps_core::{
    build_trace, enumerate_pes_with_cap, iterate_negation, theoretical_distance_series,
    yager_negate, yin_negate, EventSpaceIndex, PermutationMassFunction,
};
use serde::Serialize;

use crate::error::CliError;
use crate::model::ModelFile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Yager,
    Yin,
}

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub format: Format,
    pub max_frame_size: usize,
    pub renormalize: bool,
}

fn fixed(v: f64) -> String {
    format!("{v:.4}")
}

fn load_pm(
    path: &Path,
    opts: &Options,
) -> Result<(EventSpaceIndex, PermutationMassFunction), CliError> {
    let pm = ModelFile::read(path)?.to_pm(opts.renormalize)?;
    let index = enumerate_pes_with_cap(pm.frame(), opts.max_frame_size)?;
    Ok((index, pm))
}

#[derive(Serialize)]
struct NegateRow {
    iteration: usize,
    model: ModelFile,
}

/// One row per `PM_i`, one mass column per nonempty event in canonical order.
pub fn negate<W: Write>(
    path: &Path,
    iterations: usize,
    opts: &Options,
    out: W,
) -> Result<(), CliError> {
    let (index, pm0) = load_pm(path, opts)?;
    let series = iterate_negation(&index, &pm0, iterations)?;
    match opts.format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            let frame = index.frame();
            let mut header = vec!["i".to_string()];
            header.extend(
                index
                    .nonempty_events()
                    .iter()
                    .map(|e| frame.display_event(e)),
            );
            w.write_record(&header)?;
            for (i, pm) in series.iter().enumerate() {
                let mut row = vec![i.to_string()];
                row.extend(pm.as_dense_vector(&index)?.into_iter().map(fixed));
                w.write_record(&row)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let rows: Vec<NegateRow> = series
                .iter()
                .enumerate()
                .map(|(iteration, pm)| NegateRow {
                    iteration,
                    model: ModelFile::from_pm(pm),
                })
                .collect();
            write_json(out, &rows)?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct TraceRow {
    iteration: usize,
    entropy: f64,
    /// `d(PM_i, PM_{i+1})`; absent on the last row.
    step_distance: Option<f64>,
    theoretical_distance: Option<f64>,
    /// `d_i / d_{i+1}`.
    distance_ratio: Option<f64>,
    max_deviation: f64,
}

/// Entropy and consecutive distances per iteration, plus `d_0/(Δ−2)^i`.
///
/// Returns the convergence index, if any.
pub fn trace<W: Write>(
    path: &Path,
    iterations: usize,
    eps: f64,
    opts: &Options,
    out: W,
) -> Result<Option<usize>, CliError> {
    let (index, pm0) = load_pm(path, opts)?;
    let trace = build_trace(&index, &pm0, iterations, eps)?;
    let d = &trace.step_distances;
    let theory = theoretical_distance_series(d[0], index.delta() as u64, d.len())?;
    let ratios = trace.distance_ratios();
    let rows: Vec<TraceRow> = (0..=iterations)
        .map(|i| TraceRow {
            iteration: i,
            entropy: trace.entropies[i],
            step_distance: d.get(i).copied(),
            theoretical_distance: theory.get(i).copied(),
            distance_ratio: ratios.get(i).copied().flatten(),
            max_deviation: trace.deviation(i),
        })
        .collect();

    match opts.format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            w.write_record([
                "i",
                "entropy",
                "step_distance",
                "theoretical_distance",
                "distance_ratio",
                "max_deviation",
            ])?;
            let opt = |v: Option<f64>| v.map(fixed).unwrap_or_default();
            for r in &rows {
                w.write_record([
                    r.iteration.to_string(),
                    fixed(r.entropy),
                    opt(r.step_distance),
                    opt(r.theoretical_distance),
                    opt(r.distance_ratio),
                    format!("{:.3e}", r.max_deviation),
                ])?;
            }
            w.flush()?;
        }
        Format::Json => write_json(out, &rows)?,
    }
    Ok(trace.converged_at)
}

/// One step of Yager's (probability) or Yin's (BPA) negation.
pub fn baseline<W: Write>(
    path: &Path,
    method: Method,
    opts: &Options,
    out: W,
) -> Result<(), CliError> {
    let model = ModelFile::read(path)?;
    let negated = match method {
        Method::Yager => {
            ModelFile::from_probability(&yager_negate(&model.to_probability(opts.renormalize)?)?)
        }
        Method::Yin => ModelFile::from_bpa(&yin_negate(&model.to_bpa(opts.renormalize)?)?),
    };
    match opts.format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(out);
            w.write_record(["event", "mass"])?;
            for entry in &negated.masses {
                let event = match method {
                    Method::Yager => entry.event.join(","),
                    Method::Yin => format!("{{{}}}", entry.event.join(",")),
                };
                w.write_record([event, fixed(entry.mass)])?;
            }
            w.flush()?;
        }
        Format::Json => write_json(out, &negated)?,
    }
    Ok(())
}

fn write_json<W: Write, T: Serialize>(mut out: W, value: &T) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}
