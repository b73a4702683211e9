//! Flows `t ↦ x ▷_t y`: closed-form sampling and classical RK4 integration
//! of `ẏ = [x, y]`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{BlochPoint, LieQuandle};
use crate::matrix::{commutator, ComplexMatrix};

/// States an explicit integrator can combine linearly.
pub trait OdeState: Clone {
    /// `self + h · direction`.
    fn step(&self, h: f64, direction: &Self) -> Self;
}

impl OdeState for ComplexMatrix {
    fn step(&self, h: f64, direction: &Self) -> Self {
        self.add_scaled(h, direction)
    }
}

impl OdeState for Vec<f64> {
    fn step(&self, h: f64, direction: &Self) -> Self {
        self.iter().zip(direction).map(|(a, b)| a + h * b).collect()
    }
}

impl OdeState for [f64; 3] {
    fn step(&self, h: f64, d: &Self) -> Self {
        [self[0] + h * d[0], self[1] + h * d[1], self[2] + h * d[2]]
    }
}

/// Sampled flow. `times` start at 0 and increase strictly.
#[derive(Clone, Debug, Serialize)]
pub struct Trajectory<E> {
    pub realization: String,
    pub times: Vec<f64>,
    pub points: Vec<E>,
    /// The generating element.
    pub x: E,
    /// The initial element.
    pub y: E,
}

impl<E> Trajectory<E> {
    pub fn endpoint(&self) -> &E {
        self.points.last().expect("trajectories are never empty")
    }
}

fn time_grid(t_end: f64, steps: usize) -> Result<Vec<f64>> {
    if steps == 0 {
        return Err(Error::InvalidArgument("steps must be at least 1".into()));
    }
    if !(t_end > 0.0 && t_end.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "t_end must be positive, got {t_end}"
        )));
    }
    Ok((0..=steps)
        .map(|k| t_end * k as f64 / steps as f64)
        .collect())
}

/// Fixed-step classical Runge–Kutta from `y0` over `steps` equal steps.
pub fn rk4<S: OdeState>(
    field: impl Fn(&S) -> S,
    y0: S,
    t_end: f64,
    steps: usize,
) -> Result<(Vec<f64>, Vec<S>)> {
    let times = time_grid(t_end, steps)?;
    let h = t_end / steps as f64;
    let mut points = Vec::with_capacity(steps + 1);
    let mut y = y0;
    points.push(y.clone());
    for _ in 0..steps {
        let k1 = field(&y);
        let k2 = field(&y.step(h / 2.0, &k1));
        let k3 = field(&y.step(h / 2.0, &k2));
        let k4 = field(&y.step(h, &k3));
        y = y
            .step(h / 6.0, &k1)
            .step(h / 3.0, &k2)
            .step(h / 3.0, &k3)
            .step(h / 6.0, &k4);
        points.push(y.clone());
    }
    Ok((times, points))
}

/// RK4 on `Ẏ = [gen, Y]`, `Y(0) = y`, whose exact solution is
/// `e^{t·gen} y e^{−t·gen}`. For the skew convention pass `gen = i·x`.
pub fn integrate_flow(
    generator: &ComplexMatrix,
    y: &ComplexMatrix,
    t_end: f64,
    steps: usize,
) -> Result<Trajectory<ComplexMatrix>> {
    if generator.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            left: generator.dim(),
            right: y.dim(),
        });
    }
    let field = |state: &ComplexMatrix| commutator(generator, state).expect("dimensions checked");
    let (times, points) = rk4(field, y.clone(), t_end, steps)?;
    Ok(Trajectory {
        realization: "matrix-general".into(),
        times,
        points,
        x: generator.clone(),
        y: y.clone(),
    })
}

/// RK4 on `ẏ = x × y` in ambient coordinates (not renormalized).
pub fn integrate_bloch_flow(
    x: &BlochPoint,
    y: &BlochPoint,
    t_end: f64,
    steps: usize,
) -> Result<Trajectory<[f64; 3]>> {
    let axis = x.coords();
    let field = |v: &[f64; 3]| crate::lie::cross(&axis, v);
    let (times, points) = rk4(field, y.coords(), t_end, steps)?;
    Ok(Trajectory {
        realization: "bloch".into(),
        times,
        points,
        x: axis,
        y: y.coords(),
    })
}

/// RK4 on `ẏ = x − y`.
pub fn integrate_convex_flow(
    x: &[f64],
    y: &[f64],
    t_end: f64,
    steps: usize,
) -> Result<Trajectory<Vec<f64>>> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let field = |v: &Vec<f64>| x.iter().zip(v).map(|(a, b)| a - b).collect::<Vec<f64>>();
    let (times, points) = rk4(field, y.to_vec(), t_end, steps)?;
    Ok(Trajectory {
        realization: "convex-flow".into(),
        times,
        points,
        x: x.to_vec(),
        y: y.to_vec(),
    })
}

/// `x ▷_t y` evaluated exactly on the same grid the integrators use.
pub fn closed_form_trajectory<R: LieQuandle>(
    r: &R,
    x: &R::Element,
    y: &R::Element,
    t_end: f64,
    steps: usize,
) -> Result<Trajectory<R::Element>> {
    let times = time_grid(t_end, steps)?;
    let points = times
        .iter()
        .map(|&t| r.act(x, t, y))
        .collect::<Result<Vec<_>>>()?;
    Ok(Trajectory {
        realization: r.name().into(),
        times,
        points,
        x: x.clone(),
        y: y.clone(),
    })
}
