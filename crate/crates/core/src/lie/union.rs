//! The rotation algebra of the plane glued to the plane itself.
//!
//! Algebra elements `a` generate `aJ` with `J` the planar rotation
//! generator. An algebra element acts on the algebra by the (trivial,
//! abelian) adjoint action and on the plane by rotation through `t·a`;
//! points of the plane act trivially on everything. Any `a ≠ 0` moves any
//! point `p ≠ 0` while `p` fixes `a`, so this family is not Noether.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::convex::euclidean;
use super::{LieQuandle, TangentVector};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "part", content = "value", rename_all = "lowercase")]
pub enum UnionElement {
    Algebra(f64),
    Space([f64; 2]),
}

impl UnionElement {
    fn coords(&self) -> Vec<f64> {
        match *self {
            UnionElement::Algebra(a) => vec![a],
            UnionElement::Space(p) => p.to_vec(),
        }
    }

    fn zero_like(&self) -> Self {
        match self {
            UnionElement::Algebra(_) => UnionElement::Algebra(0.0),
            UnionElement::Space(_) => UnionElement::Space([0.0; 2]),
        }
    }
}

/// Tangent vectors share the tagged layout; mixing tags yields NaN entries.
impl TangentVector for UnionElement {
    fn scaled(&self, factor: f64) -> Self {
        match *self {
            UnionElement::Algebra(a) => UnionElement::Algebra(a * factor),
            UnionElement::Space([u, v]) => UnionElement::Space([u * factor, v * factor]),
        }
    }

    fn plus(&self, other: &Self) -> Self {
        match (*self, *other) {
            (UnionElement::Algebra(a), UnionElement::Algebra(b)) => UnionElement::Algebra(a + b),
            (UnionElement::Space(p), UnionElement::Space(q)) => {
                UnionElement::Space([p[0] + q[0], p[1] + q[1]])
            }
            _ => UnionElement::Space([f64::NAN; 2]),
        }
    }

    fn norm(&self) -> f64 {
        self.coords().iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    fn components(&self) -> Vec<f64> {
        self.coords()
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct UnionLie;

impl LieQuandle for UnionLie {
    type Element = UnionElement;
    type Tangent = UnionElement;

    fn name(&self) -> &'static str {
        "union"
    }

    fn act(&self, x: &UnionElement, t: f64, y: &UnionElement) -> Result<UnionElement> {
        Ok(match (*x, *y) {
            (UnionElement::Algebra(a), UnionElement::Space([u, v])) => {
                let (s, c) = (t * a).sin_cos();
                UnionElement::Space([c * u - s * v, s * u + c * v])
            }
            _ => *y,
        })
    }

    /// Infinite between elements of different parts.
    fn distance(&self, a: &UnionElement, b: &UnionElement) -> f64 {
        match (a, b) {
            (UnionElement::Algebra(p), UnionElement::Algebra(q)) => (p - q).abs(),
            (UnionElement::Space(p), UnionElement::Space(q)) => euclidean(p, q),
            _ => f64::INFINITY,
        }
    }

    fn validate(&self, element: &UnionElement) -> Result<()> {
        if element.coords().iter().all(|c| c.is_finite()) {
            Ok(())
        } else {
            Err(Error::NonFinite)
        }
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> UnionElement {
        if rng.gen_bool(0.5) {
            UnionElement::Algebra(rng.gen_range(-1.0..=1.0))
        } else {
            UnionElement::Space([rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)])
        }
    }

    fn bracket(&self, x: &UnionElement, y: &UnionElement) -> Option<UnionElement> {
        Some(match (*x, *y) {
            (UnionElement::Algebra(a), UnionElement::Space([u, v])) => {
                UnionElement::Space([-a * v, a * u])
            }
            _ => y.zero_like(),
        })
    }

    fn displacement(&self, from: &UnionElement, to: &UnionElement) -> Result<UnionElement> {
        match (*from, *to) {
            (UnionElement::Algebra(a), UnionElement::Algebra(b)) => {
                Ok(UnionElement::Algebra(b - a))
            }
            (UnionElement::Space(p), UnionElement::Space(q)) => {
                Ok(UnionElement::Space([q[0] - p[0], q[1] - p[1]]))
            }
            _ => Err(Error::InvalidElement(
                "no displacement between algebra and space elements".into(),
            )),
        }
    }

    fn components(&self, element: &UnionElement) -> Vec<f64> {
        element.coords()
    }

    fn component_names(&self, element: &UnionElement) -> Vec<String> {
        match element {
            UnionElement::Algebra(_) => vec!["a".into()],
            UnionElement::Space(_) => vec!["x".into(), "y".into()],
        }
    }
}
