//! A realization that is deliberately not self-distributive, used to check
//! that the verifier can fail.

use rand::Rng;

use crate::error::{Error, Result};
use crate::lie::LieQuandle;

/// Offset applied by [`Corrupted`].
pub const CORRUPTION: f64 = 1e-3;

/// `x ▷_t y = y + 10⁻³·x` on `ℝ^dim`, independent of `t`.
#[derive(Clone, Copy, Debug)]
pub struct Corrupted {
    dim: usize,
}

impl Corrupted {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument(
                "dimension must be at least 1".into(),
            ));
        }
        Ok(Corrupted { dim })
    }
}

impl LieQuandle for Corrupted {
    type Element = Vec<f64>;
    type Tangent = Vec<f64>;

    fn name(&self) -> &'static str {
        "corrupted"
    }

    fn act(&self, x: &Vec<f64>, _t: f64, y: &Vec<f64>) -> Result<Vec<f64>> {
        Ok(y.iter().zip(x).map(|(b, a)| b + CORRUPTION * a).collect())
    }

    fn distance(&self, a: &Vec<f64>, b: &Vec<f64>) -> f64 {
        a.iter()
            .zip(b)
            .map(|(p, q)| (p - q) * (p - q))
            .sum::<f64>()
            .sqrt()
    }

    fn validate(&self, element: &Vec<f64>) -> Result<()> {
        if element.len() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: element.len(),
            });
        }
        Ok(())
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        (0..self.dim).map(|_| rng.gen_range(-1.0..=1.0)).collect()
    }

    fn bracket(&self, _x: &Vec<f64>, _y: &Vec<f64>) -> Option<Vec<f64>> {
        None
    }

    fn displacement(&self, from: &Vec<f64>, to: &Vec<f64>) -> Result<Vec<f64>> {
        Ok(to.iter().zip(from).map(|(b, a)| b - a).collect())
    }

    fn components(&self, element: &Vec<f64>) -> Vec<f64> {
        element.clone()
    }

    fn component_names(&self, element: &Vec<f64>) -> Vec<String> {
        (0..element.len()).map(|i| format!("x{i}")).collect()
    }
}
