//! Convex mixing: the flow `x ∗_t y = (1 − e^{−t})x + e^{−t}y` on all of
//! `ℝ^d`, and the single biased mixing `x ▷ y = (1 − s)x + sy` on a convex
//! body.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::LieQuandle;
use crate::error::{Error, Result};

pub(crate) fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(p, q)| (p - q) * (p - q))
        .sum::<f64>()
        .sqrt()
}

fn check_dim(expected: usize, v: &[f64]) -> Result<()> {
    if v.len() != expected {
        return Err(Error::DimensionMismatch {
            left: expected,
            right: v.len(),
        });
    }
    if v.iter().any(|c| !c.is_finite()) {
        return Err(Error::NonFinite);
    }
    Ok(())
}

/// Convex-mixing flow on `ℝ^dim`.
#[derive(Clone, Debug)]
pub struct ConvexFlow {
    dim: usize,
}

impl ConvexFlow {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidRealization(
                "dimension must be positive".into(),
            ));
        }
        Ok(ConvexFlow { dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `x ∗_t y`, evaluated with `expm1` so small `t` keeps full precision.
    pub fn mix(x: &[f64], t: f64, y: &[f64]) -> Vec<f64> {
        let keep = (-t).exp();
        let pull = -(-t).exp_m1();
        x.iter().zip(y).map(|(a, b)| pull * a + keep * b).collect()
    }
}

impl LieQuandle for ConvexFlow {
    type Element = Vec<f64>;
    type Tangent = Vec<f64>;

    fn name(&self) -> &'static str {
        "convex-flow"
    }

    fn act(&self, x: &Vec<f64>, t: f64, y: &Vec<f64>) -> Result<Vec<f64>> {
        Ok(Self::mix(x, t, y))
    }

    fn distance(&self, a: &Vec<f64>, b: &Vec<f64>) -> f64 {
        euclidean(a, b)
    }

    fn validate(&self, element: &Vec<f64>) -> Result<()> {
        check_dim(self.dim, element)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        (0..self.dim).map(|_| rng.gen_range(-1.0..=1.0)).collect()
    }

    fn sample_partner<R: Rng + ?Sized>(&self, x: &Vec<f64>, rng: &mut R) -> Vec<f64> {
        if rng.gen_bool(0.5) {
            x.clone()
        } else {
            self.sample(rng)
        }
    }

    fn bracket(&self, x: &Vec<f64>, y: &Vec<f64>) -> Option<Vec<f64>> {
        Some(x.iter().zip(y).map(|(a, b)| a - b).collect())
    }

    fn displacement(&self, from: &Vec<f64>, to: &Vec<f64>) -> Result<Vec<f64>> {
        if from.len() != to.len() {
            return Err(Error::DimensionMismatch {
                left: from.len(),
                right: to.len(),
            });
        }
        Ok(to.iter().zip(from).map(|(a, b)| a - b).collect())
    }

    fn components(&self, element: &Vec<f64>) -> Vec<f64> {
        element.clone()
    }

    fn component_names(&self, element: &Vec<f64>) -> Vec<String> {
        (0..element.len()).map(|i| format!("x{i}")).collect()
    }
}

/// Convex bodies supported by [`ConvexSpindle`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "dim")]
pub enum ConvexBody {
    /// `[0, 1]^dim`.
    Box(usize),
    /// Probability vectors in `ℝ^dim`.
    Simplex(usize),
}

const BODY_SLACK: f64 = 1e-12;

impl ConvexBody {
    pub fn dim(&self) -> usize {
        match *self {
            ConvexBody::Box(d) | ConvexBody::Simplex(d) => d,
        }
    }

    pub fn contains(&self, v: &[f64]) -> bool {
        if v.len() != self.dim() || v.iter().any(|c| !c.is_finite()) {
            return false;
        }
        match self {
            ConvexBody::Box(_) => v
                .iter()
                .all(|&c| (-BODY_SLACK..=1.0 + BODY_SLACK).contains(&c)),
            ConvexBody::Simplex(_) => {
                v.iter().all(|&c| c >= -BODY_SLACK)
                    && (v.iter().sum::<f64>() - 1.0).abs() <= BODY_SLACK
            }
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        match *self {
            ConvexBody::Box(d) => (0..d).map(|_| rng.gen_range(0.0..=1.0)).collect(),
            ConvexBody::Simplex(d) => {
                // Normalized exponentials are uniform on the simplex.
                let e: Vec<f64> = (0..d).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
                let total: f64 = e.iter().sum();
                e.iter().map(|v| v / total).collect()
            }
        }
    }
}

/// Mixing with fixed bias `s` on a convex body. A spindle for the single
/// operation, not a one-parameter family.
#[derive(Clone, Debug)]
pub struct ConvexSpindle {
    bias: f64,
    body: ConvexBody,
}

impl ConvexSpindle {
    pub fn new(bias: f64, body: ConvexBody) -> Result<Self> {
        if !(0.0..=1.0).contains(&bias) {
            return Err(Error::InvalidRealization(format!(
                "bias {bias} outside [0, 1]"
            )));
        }
        if body.dim() == 0 {
            return Err(Error::InvalidRealization(
                "dimension must be positive".into(),
            ));
        }
        Ok(ConvexSpindle { bias, body })
    }

    pub fn bias(&self) -> f64 {
        self.bias
    }

    pub fn body(&self) -> ConvexBody {
        self.body
    }

    pub fn name(&self) -> &'static str {
        "convex-spindle"
    }

    /// `(1 − s)x + sy`.
    pub fn apply(&self, x: &[f64], y: &[f64]) -> Vec<f64> {
        let s = self.bias;
        x.iter()
            .zip(y)
            .map(|(a, b)| (1.0 - s) * a + s * b)
            .collect()
    }

    pub fn validate(&self, v: &[f64]) -> Result<()> {
        check_dim(self.body.dim(), v)?;
        if !self.body.contains(v) {
            return Err(Error::InvalidElement(format!(
                "{v:?} lies outside {:?}",
                self.body
            )));
        }
        Ok(())
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        self.body.sample(rng)
    }

    pub fn distance(&self, a: &[f64], b: &[f64]) -> f64 {
        euclidean(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::random::seeded;

    #[test]
    fn flow_examples() {
        let q = ConvexFlow::new(3).unwrap();
        let x = vec![0.3, -0.2, 0.9];
        let y = vec![1.0, 2.0, -4.0];
        assert_eq!(q.act(&x, 0.0, &y).unwrap(), y);
        assert!(q.distance(&q.act(&x, 1.7, &x).unwrap(), &x) < 1e-15);
        let half = q.act(&vec![0.0; 3], std::f64::consts::LN_2, &y).unwrap();
        assert!(q.distance(&half, &vec![0.5, 1.0, -2.0]) < 1e-15);
    }

    #[test]
    fn negative_time_inverts() {
        let q = ConvexFlow::new(2).unwrap();
        let x = vec![0.4, 0.1];
        let y = vec![-0.7, 0.8];
        let there = q.act(&x, 2.5, &y).unwrap();
        let back = q.act(&x, -2.5, &there).unwrap();
        assert!(q.distance(&back, &y) < 1e-14);
    }

    #[test]
    fn spindle_exact_on_dyadic_points() {
        // With dyadic bias and coordinates every product and sum is exact.
        let sp = ConvexSpindle::new(0.25, ConvexBody::Box(2)).unwrap();
        let pts = [
            vec![0.5, 0.25],
            vec![0.0, 1.0],
            vec![0.75, 0.125],
            vec![1.0, 0.5],
        ];
        for x in &pts {
            assert_eq!(&sp.apply(x, x), x);
            for y in &pts {
                for z in &pts {
                    let left = sp.apply(x, &sp.apply(y, z));
                    assert_eq!(left, sp.apply(&sp.apply(x, y), &sp.apply(x, z)));
                    let right = sp.apply(&sp.apply(x, y), z);
                    assert_eq!(right, sp.apply(&sp.apply(x, z), &sp.apply(y, z)));
                }
            }
        }
    }

    #[test]
    fn spindle_translations_leave_the_body() {
        // Solving (1 − s)x + s·y = z for y leaves the box: no inverse on the body.
        let sp = ConvexSpindle::new(0.5, ConvexBody::Box(1)).unwrap();
        let x = [1.0];
        let z = [0.0];
        let y = [(z[0] - (1.0 - sp.bias()) * x[0]) / sp.bias()];
        assert_eq!(sp.apply(&x, &y), z);
        assert!(sp.validate(&y).is_err());
    }

    #[test]
    fn body_sampling_and_validation() {
        let mut rng = seeded(8);
        for body in [ConvexBody::Box(3), ConvexBody::Simplex(4)] {
            let sp = ConvexSpindle::new(0.3, body).unwrap();
            for _ in 0..100 {
                let v = sp.sample(&mut rng);
                sp.validate(&v).unwrap();
                let w = sp.sample(&mut rng);
                assert!(body.contains(&sp.apply(&v, &w)));
            }
        }
        assert!(ConvexSpindle::new(1.5, ConvexBody::Box(2)).is_err());
        assert!(ConvexSpindle::new(0.5, ConvexBody::Simplex(3))
            .unwrap()
            .validate(&[0.5, 0.5, 0.5])
            .is_err());
    }
}
