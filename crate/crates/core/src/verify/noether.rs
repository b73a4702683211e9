//! Deciding whether `x` fixes `y` for all `t` and comparing with the
//! reverse direction.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{LieQuandle, TangentVector};
use crate::matrix::random::seeded;

use super::axioms::T_RANGE;

/// Points in the default `t` grid.
pub const DEFAULT_T_SAMPLES: usize = 41;

/// Default threshold below which a displacement counts as fixed.
pub const NOETHER_TOLERANCE: f64 = 1e-7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NoetherMode {
    /// `d(x ▷_t y, y) ≤ tol` on every point of an evenly spaced grid.
    Sampled,
    /// `‖[x, y]‖ ≤ tol`.
    #[serde(rename = "bracket-criterion")]
    Bracket,
}

impl fmt::Display for NoetherMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NoetherMode::Sampled => "sampled",
            NoetherMode::Bracket => "bracket",
        })
    }
}

impl FromStr for NoetherMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sampled" => Ok(NoetherMode::Sampled),
            "bracket" | "bracket-criterion" => Ok(NoetherMode::Bracket),
            other => Err(Error::InvalidArgument(format!("unknown mode {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NoetherResiduals {
    /// Largest deviation of `y` under the action of `x`.
    pub x_on_y: f64,
    pub y_on_x: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NoetherVerdict {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub x_fixes_y: bool,
    pub y_fixes_x: bool,
    /// `x_fixes_y == y_fixes_x`.
    pub consistent: bool,
    pub method: NoetherMode,
    pub residuals: NoetherResiduals,
}

/// `n` evenly spaced points spanning `[−T_RANGE, T_RANGE]`.
pub fn t_grid(n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "t grid needs at least 2 points, got {n}"
        )));
    }
    Ok((0..n)
        .map(|k| -T_RANGE + 2.0 * T_RANGE * k as f64 / (n - 1) as f64)
        .collect())
}

/// Largest `d(x ▷_t y, y)` over the grid; a failed evaluation counts as
/// infinite.
fn sampled_residual<R: LieQuandle>(r: &R, x: &R::Element, y: &R::Element, grid: &[f64]) -> f64 {
    grid.iter()
        .map(|&t| match r.act(x, t, y) {
            Ok(v) => r.distance(&v, y),
            Err(_) => f64::INFINITY,
        })
        .map(|d| if d.is_nan() { f64::INFINITY } else { d })
        .fold(0.0, f64::max)
}

pub fn noether_check<R: LieQuandle>(
    r: &R,
    x: &R::Element,
    y: &R::Element,
    mode: NoetherMode,
    t_samples: usize,
    tolerance: f64,
) -> Result<NoetherVerdict> {
    let (x_on_y, y_on_x) = match mode {
        NoetherMode::Sampled => {
            let grid = t_grid(t_samples)?;
            (
                sampled_residual(r, x, y, &grid),
                sampled_residual(r, y, x, &grid),
            )
        }
        NoetherMode::Bracket => {
            let norm = |a: &R::Element, b: &R::Element| {
                r.bracket(a, b).map(|v| v.norm()).ok_or_else(|| {
                    Error::Unsupported(format!("{} has no analytic bracket", r.name()))
                })
            };
            (norm(x, y)?, norm(y, x)?)
        }
    };
    let x_fixes_y = x_on_y <= tolerance;
    let y_fixes_x = y_on_x <= tolerance;
    Ok(NoetherVerdict {
        x: r.components(x),
        y: r.components(y),
        x_fixes_y,
        y_fixes_x,
        consistent: x_fixes_y == y_fixes_x,
        method: mode,
        residuals: NoetherResiduals { x_on_y, y_on_x },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NoetherSummary {
    pub realization: String,
    pub pairs: usize,
    pub seed: u64,
    pub t_samples: usize,
    pub tolerance: f64,
    /// Random pairs whose sampled verdict is inconsistent.
    pub inconsistent: usize,
    /// Random pairs where `x` fixes `y` (sampled mode).
    pub fixed_pairs: usize,
    /// Whether the `(x, x)` control came out fixed in both directions.
    pub control_passed: bool,
    /// Pairs whose sampled and bracket verdicts differ in either direction;
    /// `None` without an analytic bracket.
    pub mode_disagreements: Option<usize>,
    pub control: NoetherVerdict,
    pub verdicts: Vec<NoetherVerdict>,
    /// Bracket-mode verdicts, parallel to `verdicts`.
    pub bracket_verdicts: Option<Vec<NoetherVerdict>>,
}

impl NoetherSummary {
    /// No inconsistency, a passing control and, where checked, full
    /// agreement between the two modes.
    pub fn pass(&self) -> bool {
        self.inconsistent == 0 && self.control_passed && self.mode_disagreements.unwrap_or(0) == 0
    }
}

/// Sampled-mode verdicts over `pairs` seeded pairs drawn with
/// [`LieQuandle::sample`] and [`LieQuandle::sample_partner`], plus the
/// `(x, x)` control. Realizations with an analytic bracket are also run in
/// bracket mode and the two are compared pair by pair.
pub fn noether_suite<R: LieQuandle>(
    r: &R,
    pairs: usize,
    seed: u64,
    t_samples: usize,
    tolerance: f64,
) -> Result<NoetherSummary> {
    let mut rng = seeded(seed);
    let drawn: Vec<(R::Element, R::Element)> = (0..pairs)
        .map(|_| {
            let x = r.sample(&mut rng);
            let y = r.sample_partner(&x, &mut rng);
            (x, y)
        })
        .collect();
    let control_x = r.sample(&mut rng);

    let verdicts = drawn
        .iter()
        .map(|(x, y)| noether_check(r, x, y, NoetherMode::Sampled, t_samples, tolerance))
        .collect::<Result<Vec<_>>>()?;
    let control = noether_check(
        r,
        &control_x,
        &control_x,
        NoetherMode::Sampled,
        t_samples,
        tolerance,
    )?;

    let has_bracket = drawn
        .first()
        .map_or(r.bracket(&control_x, &control_x).is_some(), |(x, y)| {
            r.bracket(x, y).is_some()
        });
    let bracket_verdicts = if has_bracket {
        Some(
            drawn
                .iter()
                .map(|(x, y)| noether_check(r, x, y, NoetherMode::Bracket, t_samples, tolerance))
                .collect::<Result<Vec<_>>>()?,
        )
    } else {
        None
    };
    let mode_disagreements = bracket_verdicts.as_ref().map(|bv| {
        verdicts
            .iter()
            .zip(bv)
            .filter(|(s, b)| s.x_fixes_y != b.x_fixes_y || s.y_fixes_x != b.y_fixes_x)
            .count()
    });

    Ok(NoetherSummary {
        realization: r.name().to_string(),
        pairs,
        seed,
        t_samples,
        tolerance,
        inconsistent: verdicts.iter().filter(|v| !v.consistent).count(),
        fixed_pairs: verdicts.iter().filter(|v| v.x_fixes_y).count(),
        control_passed: control.x_fixes_y && control.y_fixes_x,
        mode_disagreements,
        control,
        verdicts,
        bracket_verdicts,
    })
}
