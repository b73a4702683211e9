//! Rotations of the unit sphere: `x ▷_t y` turns `y` by angle `t` about the
//! axis through `x`, counterclockwise seen from outside (right-hand rule).

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::LieQuandle;
use crate::error::{Error, Result};
use crate::matrix::{pauli, ComplexMatrix, HermitianObservable};

/// Accepted deviation of `‖v‖₂` from 1.
pub const UNIT_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct BlochPoint([f64; 3]);

impl TryFrom<[f64; 3]> for BlochPoint {
    type Error = Error;

    fn try_from(v: [f64; 3]) -> Result<Self> {
        BlochPoint::new(v)
    }
}

impl From<BlochPoint> for [f64; 3] {
    fn from(p: BlochPoint) -> Self {
        p.0
    }
}

fn dot(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

impl BlochPoint {
    pub const EX: BlochPoint = BlochPoint([1.0, 0.0, 0.0]);
    pub const EY: BlochPoint = BlochPoint([0.0, 1.0, 0.0]);
    pub const EZ: BlochPoint = BlochPoint([0.0, 0.0, 1.0]);

    pub fn new(v: [f64; 3]) -> Result<Self> {
        let norm = dot(&v, &v).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > UNIT_TOLERANCE {
            return Err(Error::InvalidElement(format!(
                "Bloch vector must have unit length, got {norm}"
            )));
        }
        Ok(BlochPoint(v))
    }

    pub fn normalized(v: [f64; 3]) -> Result<Self> {
        let norm = dot(&v, &v).sqrt();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::InvalidElement(
                "cannot normalize a zero vector".into(),
            ));
        }
        Ok(BlochPoint(v.map(|c| c / norm)))
    }

    pub fn coords(&self) -> [f64; 3] {
        self.0
    }

    pub fn antipode(&self) -> Self {
        BlochPoint(self.0.map(|c| -c))
    }

    /// Rodrigues rotation of `y` about `self` by `angle`, renormalized.
    pub fn rotate(&self, angle: f64, y: &BlochPoint) -> BlochPoint {
        let (x, y) = (&self.0, &y.0);
        let (s, c) = angle.sin_cos();
        let k = cross(x, y);
        let d = dot(x, y) * (1.0 - c);
        let r = [
            y[0] * c + k[0] * s + x[0] * d,
            y[1] * c + k[1] * s + x[1] * d,
            y[2] * c + k[2] * s + x[2] * d,
        ];
        let norm = dot(&r, &r).sqrt();
        BlochPoint(r.map(|v| v / norm))
    }
}

/// `(I + p·σ) / 2`, the rank-one projection onto the state with Bloch vector `p`.
pub fn bloch_embedding(p: &BlochPoint) -> HermitianObservable {
    let [sx, sy, sz] = pauli();
    let [a, b, c] = p.0;
    let m = (&(&(&ComplexMatrix::identity(2) + &sx.scale_real(a)) + &sy.scale_real(b))
        + &sz.scale_real(c))
        .scale_real(0.5);
    HermitianObservable::from_hermitian_part(&m)
}

/// `−x·σ / 2`: under the skew matrix convention, `e^{it h(x)}` rotates Bloch
/// vectors by `t` about `x`, so [`bloch_embedding`] intertwines the two
/// families at equal times.
pub fn bloch_generator(x: &BlochPoint) -> HermitianObservable {
    let [sx, sy, sz] = pauli();
    let [a, b, c] = x.0;
    let m = (&(&sx.scale_real(a) + &sy.scale_real(b)) + &sz.scale_real(c))
        .scale(Complex64::new(-0.5, 0.0));
    HermitianObservable::from_hermitian_part(&m)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BlochQuandle;

impl LieQuandle for BlochQuandle {
    type Element = BlochPoint;
    type Tangent = [f64; 3];

    fn name(&self) -> &'static str {
        "bloch"
    }

    fn act(&self, x: &BlochPoint, t: f64, y: &BlochPoint) -> Result<BlochPoint> {
        Ok(x.rotate(t, y))
    }

    fn distance(&self, a: &BlochPoint, b: &BlochPoint) -> f64 {
        let d = [a.0[0] - b.0[0], a.0[1] - b.0[1], a.0[2] - b.0[2]];
        dot(&d, &d).sqrt()
    }

    fn validate(&self, element: &BlochPoint) -> Result<()> {
        BlochPoint::new(element.0).map(|_| ())
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> BlochPoint {
        loop {
            let v: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..=1.0));
            let r2 = dot(&v, &v);
            if (1e-6..=1.0).contains(&r2) {
                return BlochPoint::normalized(v).expect("nonzero sample");
            }
        }
    }

    /// A quarter of the time `x` itself, a quarter `−x`.
    fn sample_partner<R: Rng + ?Sized>(&self, x: &BlochPoint, rng: &mut R) -> BlochPoint {
        match rng.gen_range(0..4) {
            0 => *x,
            1 => x.antipode(),
            _ => self.sample(rng),
        }
    }

    fn bracket(&self, x: &BlochPoint, y: &BlochPoint) -> Option<[f64; 3]> {
        Some(cross(&x.0, &y.0))
    }

    fn displacement(&self, from: &BlochPoint, to: &BlochPoint) -> Result<[f64; 3]> {
        Ok([
            to.0[0] - from.0[0],
            to.0[1] - from.0[1],
            to.0[2] - from.0[2],
        ])
    }

    fn components(&self, element: &BlochPoint) -> Vec<f64> {
        element.0.to_vec()
    }

    fn component_names(&self, _element: &BlochPoint) -> Vec<String> {
        ["x", "y", "z"].map(String::from).to_vec()
    }
}
