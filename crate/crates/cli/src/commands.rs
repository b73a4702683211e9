use std::fs;
use std::io::{self, Write};
use std::path::Path;

use selfdist_core::finite::{classify, enumerate, prenoether_holds, MagmaTable, StructureReport};
use selfdist_core::lie::{BlochPoint, LieQuandle, MatrixQuandle, TangentVector};
use selfdist_core::matrix::ComplexMatrix;
use selfdist_core::verify::{
    bracket_error, closed_form_trajectory, integrate_bloch_flow, integrate_convex_flow,
    integrate_flow, noether_suite, numeric_bracket, verify_axioms, verify_spindle, AxiomReport,
    AFFINE_TOLERANCE, MATRIX_TOLERANCE,
};
use selfdist_core::{Error, Result};
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::args::{Command, Kind, Method};
use crate::realization::{with_lie, Realization};

/// Whether a command's check came out positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Negative,
}

impl Outcome {
    fn from_pass(pass: bool) -> Self {
        if pass {
            Outcome::Pass
        } else {
            Outcome::Negative
        }
    }
}

pub fn run(command: Command) -> Result<Outcome> {
    match command {
        Command::Classify { file } => cmd_classify(&file),
        Command::Enumerate {
            order,
            kind,
            up_to_iso,
        } => cmd_enumerate(order, kind, up_to_iso),
        Command::Verify {
            realization,
            samples,
            seed,
            tol,
        } => {
            let r = Realization::build(&realization)?;
            let tol = tol.unwrap_or(if r.is_affine() {
                AFFINE_TOLERANCE
            } else {
                MATRIX_TOLERANCE
            });
            cmd_verify(&r, samples, seed, tol)
        }
        Command::Noether {
            realization,
            pairs,
            seed,
            t_samples,
            tol,
        } => {
            let r = Realization::build(&realization)?;
            with_lie!(&r, |q| cmd_noether(q, pairs, seed, t_samples, tol))
        }
        Command::Flow {
            realization,
            x,
            y,
            t_end,
            steps,
            method,
            output,
        } => {
            let r = Realization::build(&realization)?;
            let (header, rows) = match method {
                Method::Closed => with_lie!(&r, |q| closed_rows(q, &x, &y, t_end, steps)),
                Method::Rk4 => rk4_rows(&r, &x, &y, t_end, steps),
            }?;
            write_csv(output.as_deref(), &header, &rows)?;
            eprintln!("{} points, t in [0, {t_end}]", rows.len());
            Ok(Outcome::Pass)
        }
        Command::Bracket {
            realization,
            x,
            y,
            h,
        } => {
            let r = Realization::build(&realization)?;
            with_lie!(&r, |q| cmd_bracket(q, &x, &y, h))
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn load_element<R: LieQuandle>(r: &R, path: &Path) -> Result<R::Element>
where
    R::Element: DeserializeOwned,
{
    let element: R::Element = read_json(path)?;
    r.validate(&element)?;
    Ok(element)
}

/// One newline-terminated JSON document on standard output.
fn emit<T: Serialize>(value: &T) -> Result<()> {
    let text = serde_json::to_string(value).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    let mut out = io::stdout().lock();
    writeln!(out, "{text}").map_err(io_error)
}

fn io_error(e: io::Error) -> Error {
    Error::InvalidArgument(format!("I/O error: {e}"))
}

#[derive(Serialize)]
struct ClassifyOutput {
    order: usize,
    #[serde(flatten)]
    report: StructureReport,
    prenoether: bool,
    prenoether_witness: Option<(usize, usize)>,
}

fn cmd_classify(file: &Path) -> Result<Outcome> {
    let table: MagmaTable = read_json(file)?;
    let report = classify(&table);
    let (prenoether, prenoether_witness) = prenoether_holds(&table);
    let kind = if report.is_quandle {
        "quandle"
    } else if report.is_spindle {
        "spindle"
    } else if report.is_shelf {
        "shelf"
    } else {
        "not a shelf"
    };
    eprintln!("order {}: {kind}", table.order());
    let pass = report.is_quandle;
    emit(&ClassifyOutput {
        order: table.order(),
        report,
        prenoether,
        prenoether_witness,
    })?;
    Ok(Outcome::from_pass(pass))
}

#[derive(Serialize)]
struct EnumerateCount {
    order: usize,
    kind: String,
    up_to_iso: bool,
    count: usize,
}

fn cmd_enumerate(order: usize, kind: Kind, up_to_iso: bool) -> Result<Outcome> {
    let tables = enumerate(order, kind.into(), up_to_iso)?;
    for t in &tables {
        emit(t)?;
    }
    let kind = selfdist_core::finite::StructureKind::from(kind).to_string();
    eprintln!("{} {kind}(s) of order {order}", tables.len());
    emit(&EnumerateCount {
        order,
        kind,
        up_to_iso,
        count: tables.len(),
    })?;
    Ok(Outcome::Pass)
}

fn cmd_verify(r: &Realization, samples: usize, seed: u64, tol: f64) -> Result<Outcome> {
    let reports: Vec<AxiomReport> = match r {
        Realization::ConvexSpindle(sp) => {
            if samples == 0 {
                return Err(Error::InvalidArgument(
                    "at least one sample is required".into(),
                ));
            }
            verify_spindle(sp, samples, seed, tol)
        }
        _ => with_lie!(r, |q| verify_axioms(q, samples, seed, tol))?,
    };
    for rep in &reports {
        eprintln!(
            "{:<5} {} {:?}: max residual {:.3e} (tol {:.0e})",
            if rep.pass { "ok" } else { "FAIL" },
            rep.realization,
            rep.axiom,
            rep.max_residual,
            rep.tolerance
        );
    }
    emit(&reports)?;
    Ok(Outcome::from_pass(reports.iter().all(|r| r.pass)))
}

fn cmd_noether<R: LieQuandle>(
    r: &R,
    pairs: usize,
    seed: u64,
    t_samples: usize,
    tol: f64,
) -> Result<Outcome> {
    let summary = noether_suite(r, pairs, seed, t_samples, tol)?;
    eprintln!(
        "{}: {} of {} pairs inconsistent, {} fixed, control {}, mode disagreements {}",
        summary.realization,
        summary.inconsistent,
        summary.pairs,
        summary.fixed_pairs,
        if summary.control_passed {
            "ok"
        } else {
            "FAILED"
        },
        summary
            .mode_disagreements
            .map_or_else(|| "n/a".to_string(), |d| d.to_string())
    );
    emit(&summary)?;
    Ok(Outcome::from_pass(summary.pass()))
}

type Rows = (Vec<String>, Vec<Vec<f64>>);

fn csv_rows<E>(
    names: Vec<String>,
    times: &[f64],
    points: &[E],
    components: impl Fn(&E) -> Vec<f64>,
) -> Rows {
    let header = std::iter::once("t".to_string()).chain(names).collect();
    let rows = times
        .iter()
        .zip(points)
        .map(|(&t, p)| std::iter::once(t).chain(components(p)).collect())
        .collect();
    (header, rows)
}

fn closed_rows<R: LieQuandle>(r: &R, x: &Path, y: &Path, t_end: f64, steps: usize) -> Result<Rows>
where
    R::Element: DeserializeOwned,
{
    let x = load_element(r, x)?;
    let y = load_element(r, y)?;
    let traj = closed_form_trajectory(r, &x, &y, t_end, steps)?;
    Ok(csv_rows(
        r.component_names(&y),
        &traj.times,
        &traj.points,
        |p| r.components(p),
    ))
}

fn rk4_rows(r: &Realization, x: &Path, y: &Path, t_end: f64, steps: usize) -> Result<Rows> {
    match r {
        Realization::Matrix(q) => {
            let (x, y) = (load_element(q, x)?, load_element(q, y)?);
            let traj = integrate_flow(&q.generator(&x), &y, t_end, steps)?;
            Ok(matrix_rows(&traj.times, &traj.points))
        }
        Realization::FixedSpectrum(q) => {
            let (x, y) = (load_element(q, x)?, load_element(q, y)?);
            let gen = MatrixQuandle::hermitian(q.dim())?.generator(&x);
            let traj = integrate_flow(&gen, &y, t_end, steps)?;
            Ok(matrix_rows(&traj.times, &traj.points))
        }
        Realization::Bloch(q) => {
            let x: BlochPoint = load_element(q, x)?;
            let y: BlochPoint = load_element(q, y)?;
            let traj = integrate_bloch_flow(&x, &y, t_end, steps)?;
            Ok(csv_rows(
                q.component_names(&y),
                &traj.times,
                &traj.points,
                |p| p.to_vec(),
            ))
        }
        Realization::ConvexFlow(q) => {
            let (x, y) = (load_element(q, x)?, load_element(q, y)?);
            let traj = integrate_convex_flow(&x, &y, t_end, steps)?;
            Ok(csv_rows(
                q.component_names(&y),
                &traj.times,
                &traj.points,
                |p| p.clone(),
            ))
        }
        _ => Err(Error::Unsupported(
            "rk4 is available for matrix, fixed-spectrum, bloch and convex-flow realizations"
                .into(),
        )),
    }
}

fn matrix_rows(times: &[f64], points: &[ComplexMatrix]) -> Rows {
    let dim = points[0].dim();
    csv_rows(ComplexMatrix::component_names(dim), times, points, |p| {
        p.to_components()
    })
}

fn write_csv(output: Option<&Path>, header: &[String], rows: &[Vec<f64>]) -> Result<()> {
    let sink: Box<dyn Write> = match output {
        Some(path) => Box::new(fs::File::create(path).map_err(|e| {
            Error::InvalidArgument(format!("cannot create {}: {e}", path.display()))
        })?),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = csv::Writer::from_writer(sink);
    let csv_error = |e: csv::Error| Error::InvalidArgument(format!("CSV error: {e}"));
    w.write_record(header).map_err(csv_error)?;
    for row in rows {
        w.write_record(row.iter().map(|v| v.to_string()))
            .map_err(csv_error)?;
    }
    w.flush().map_err(io_error)
}

#[derive(Serialize)]
struct BracketOutput {
    realization: String,
    h: f64,
    numeric: Vec<f64>,
    analytic: Option<Vec<f64>>,
    discrepancy: Option<f64>,
}

fn cmd_bracket<R: LieQuandle>(r: &R, x: &Path, y: &Path, h: f64) -> Result<Outcome>
where
    R::Element: DeserializeOwned,
{
    let x = load_element(r, x)?;
    let y = load_element(r, y)?;
    let numeric = numeric_bracket(r, &x, &y, h)?;
    let analytic = r.bracket(&x, &y);
    let discrepancy = match analytic {
        Some(_) => Some(bracket_error(r, &x, &y, h)?),
        None => None,
    };
    match discrepancy {
        Some(d) => eprintln!("{}: |numeric - analytic| = {d:.3e} at h = {h:e}", r.name()),
        None => eprintln!("{}: no analytic bracket", r.name()),
    }
    emit(&BracketOutput {
        realization: r.name().to_string(),
        h,
        numeric: numeric.components(),
        analytic: analytic.map(|a| a.components()),
        discrepancy,
    })?;
    Ok(Outcome::Pass)
}
