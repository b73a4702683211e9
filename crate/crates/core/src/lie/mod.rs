//! Smooth quandle families `(x, t, y) ↦ x ▷_t y`.
//!
//! Every realization implements [`LieQuandle`]: the operation itself, the
//! distance used for all verification tolerances, carrier validation, random
//! sampling for the verification suites, and the analytic bracket
//! `d/dt|₀ (x ▷_t y)` where one is known in closed form.

mod bloch;
mod convex;
mod matrix;
mod spectrum;
mod union;

use std::fmt::Debug;

use rand::Rng;

use crate::error::Result;
use crate::matrix::ComplexMatrix;

pub(crate) use bloch::cross;
pub use bloch::{bloch_embedding, bloch_generator, BlochPoint, BlochQuandle, UNIT_TOLERANCE};
pub use convex::{ConvexBody, ConvexFlow, ConvexSpindle};
pub use matrix::{GeneratorConvention, MatrixQuandle};
pub use spectrum::{FixedSpectrumQuandle, SPECTRUM_TOLERANCE};
pub use union::{UnionElement, UnionLie};

/// Vectors tangent to a carrier, in ambient coordinates.
pub trait TangentVector: Clone + Debug + Send + Sync {
    fn scaled(&self, factor: f64) -> Self;
    fn plus(&self, other: &Self) -> Self;
    /// Norm matching the realization metric (max-abs for matrices,
    /// Euclidean for vectors).
    fn norm(&self) -> f64;
    fn components(&self) -> Vec<f64>;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scaled(-1.0))
    }
}

impl TangentVector for ComplexMatrix {
    fn scaled(&self, factor: f64) -> Self {
        self.scale_real(factor)
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn norm(&self) -> f64 {
        self.max_abs()
    }

    fn components(&self) -> Vec<f64> {
        self.to_components()
    }
}

impl TangentVector for Vec<f64> {
    fn scaled(&self, factor: f64) -> Self {
        self.iter().map(|v| v * factor).collect()
    }

    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "dimension mismatch");
        self.iter().zip(other).map(|(a, b)| a + b).collect()
    }

    fn norm(&self) -> f64 {
        self.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    fn components(&self) -> Vec<f64> {
        self.clone()
    }
}

impl TangentVector for [f64; 3] {
    fn scaled(&self, factor: f64) -> Self {
        self.map(|v| v * factor)
    }

    fn plus(&self, other: &Self) -> Self {
        [self[0] + other[0], self[1] + other[1], self[2] + other[2]]
    }

    fn norm(&self) -> f64 {
        self.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    fn components(&self) -> Vec<f64> {
        self.to_vec()
    }
}

/// A real-parameter family of self-distributive operations on a carrier.
///
/// `act` trusts its inputs; use `validate` on anything coming from outside.
pub trait LieQuandle: Send + Sync {
    type Element: Clone + Debug + Send + Sync;
    type Tangent: TangentVector;

    fn name(&self) -> &'static str;

    /// `x ▷_t y`.
    fn act(&self, x: &Self::Element, t: f64, y: &Self::Element) -> Result<Self::Element>;

    /// Distance used by every tolerance on this carrier.
    fn distance(&self, a: &Self::Element, b: &Self::Element) -> f64;

    /// Checks the carrier invariants of an externally supplied element.
    fn validate(&self, element: &Self::Element) -> Result<()>;

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Element;

    /// A second element for Noether checks; realizations override this to
    /// produce commuting partners part of the time.
    fn sample_partner<R: Rng + ?Sized>(&self, _x: &Self::Element, rng: &mut R) -> Self::Element {
        self.sample(rng)
    }

    /// Closed-form `d/dt|₀ (x ▷_t y)`, if known.
    fn bracket(&self, x: &Self::Element, y: &Self::Element) -> Option<Self::Tangent>;

    /// `to − from` in ambient coordinates.
    fn displacement(&self, from: &Self::Element, to: &Self::Element) -> Result<Self::Tangent>;

    /// Flat real coordinates (CSV columns, report witnesses).
    fn components(&self, element: &Self::Element) -> Vec<f64>;

    /// Column names matching [`LieQuandle::components`] for `element`.
    fn component_names(&self, element: &Self::Element) -> Vec<String>;
}
