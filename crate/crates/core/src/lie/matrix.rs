use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::LieQuandle;
use crate::error::{Error, Result};
use crate::matrix::random::{random_complex, random_hermitian_normalized};
use crate::matrix::{commutator, conjugate_by_exp, ComplexMatrix, HERMITIAN_TOLERANCE, MAX_DIM};

/// Which exponential generates `x ▷_t −`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorConvention {
    /// `gen(X) = iX` on hermitian matrices: `X ▷_t Y = e^{itX} Y e^{−itX}`.
    Skew,
    /// `gen(X) = X` on all of `M_n(ℂ)`: `X ▷_t Y = e^{tX} Y e^{−tX}`.
    Plain,
}

/// Matrix Lie quandle of dimension `dim` under a generator convention.
#[derive(Clone, Debug)]
pub struct MatrixQuandle {
    dim: usize,
    convention: GeneratorConvention,
    sample_scale: f64,
}

/// Max-abs entry size of random samples in the plain convention.
///
/// `e^{tX}` is not unitary there, so nested conjugations by large random
/// generators amplify rounding far beyond any fixed absolute tolerance.
const PLAIN_SAMPLE_SCALE: f64 = 0.25;

impl MatrixQuandle {
    pub fn new(dim: usize, convention: GeneratorConvention) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::InvalidRealization(format!(
                "matrix dimension must lie in 1..={MAX_DIM}, got {dim}"
            )));
        }
        let sample_scale = match convention {
            GeneratorConvention::Skew => 1.0,
            GeneratorConvention::Plain => PLAIN_SAMPLE_SCALE,
        };
        Ok(MatrixQuandle {
            dim,
            convention,
            sample_scale,
        })
    }

    pub fn hermitian(dim: usize) -> Result<Self> {
        Self::new(dim, GeneratorConvention::Skew)
    }

    pub fn general(dim: usize) -> Result<Self> {
        Self::new(dim, GeneratorConvention::Plain)
    }

    /// Overrides the max-abs entry size of random samples.
    pub fn with_sample_scale(mut self, scale: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "sample scale must be positive, got {scale}"
            )));
        }
        self.sample_scale = scale;
        Ok(self)
    }

    pub fn sample_scale(&self) -> f64 {
        self.sample_scale
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn convention(&self) -> GeneratorConvention {
        self.convention
    }

    /// `gen(x)`.
    pub fn generator(&self, x: &ComplexMatrix) -> ComplexMatrix {
        match self.convention {
            GeneratorConvention::Skew => x.scale(Complex64::new(0.0, 1.0)),
            GeneratorConvention::Plain => x.clone(),
        }
    }
}

impl LieQuandle for MatrixQuandle {
    type Element = ComplexMatrix;
    type Tangent = ComplexMatrix;

    fn name(&self) -> &'static str {
        match self.convention {
            GeneratorConvention::Skew => "matrix-hermitian",
            GeneratorConvention::Plain => "matrix-general",
        }
    }

    fn act(&self, x: &ComplexMatrix, t: f64, y: &ComplexMatrix) -> Result<ComplexMatrix> {
        conjugate_by_exp(&self.generator(x), t, y)
    }

    fn distance(&self, a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
        a.max_abs_diff(b)
    }

    fn validate(&self, element: &ComplexMatrix) -> Result<()> {
        if element.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: element.dim(),
            });
        }
        if !element.is_finite() {
            return Err(Error::NonFinite);
        }
        if self.convention == GeneratorConvention::Skew {
            let deviation = element.hermiticity_defect();
            if deviation > HERMITIAN_TOLERANCE {
                return Err(Error::NotHermitian { deviation });
            }
        }
        Ok(())
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> ComplexMatrix {
        match self.convention {
            GeneratorConvention::Skew => {
                random_hermitian_normalized(self.dim, rng).scale_real(self.sample_scale)
            }
            GeneratorConvention::Plain => {
                random_complex(self.dim, rng).scale_real(self.sample_scale)
            }
        }
    }

    /// Half the time a polynomial `a·x² + b·x + c·I`, which commutes with `x`.
    fn sample_partner<R: Rng + ?Sized>(&self, x: &ComplexMatrix, rng: &mut R) -> ComplexMatrix {
        if rng.gen_bool(0.5) {
            let [a, b, c]: [f64; 3] = std::array::from_fn(|_| rng.gen_range(-1.0..=1.0));
            let poly = (x * x)
                .scale_real(a)
                .add_scaled(b, x)
                .add_scaled(c, &ComplexMatrix::identity(self.dim));
            match self.convention {
                GeneratorConvention::Skew => poly.hermitian_part(),
                GeneratorConvention::Plain => poly,
            }
        } else {
            self.sample(rng)
        }
    }

    fn bracket(&self, x: &ComplexMatrix, y: &ComplexMatrix) -> Option<ComplexMatrix> {
        commutator(&self.generator(x), y).ok()
    }

    fn displacement(&self, from: &ComplexMatrix, to: &ComplexMatrix) -> Result<ComplexMatrix> {
        if from.dim() != to.dim() {
            return Err(Error::DimensionMismatch {
                left: from.dim(),
                right: to.dim(),
            });
        }
        Ok(to - from)
    }

    fn components(&self, element: &ComplexMatrix) -> Vec<f64> {
        element.to_components()
    }

    fn component_names(&self, element: &ComplexMatrix) -> Vec<String> {
        ComplexMatrix::component_names(element.dim())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::pauli;
    use crate::matrix::random::seeded;
    use std::f64::consts::PI;

    #[test]
    fn zero_time_is_identity() {
        let q = MatrixQuandle::hermitian(3).unwrap();
        let mut rng = seeded(1);
        let (x, y) = (q.sample(&mut rng), q.sample(&mut rng));
        assert!(q.act(&x, 0.0, &y).unwrap().max_abs_diff(&y) < 1e-15);
    }

    #[test]
    fn skew_quarter_turn_flips_sigma_x() {
        // e^{iπ/2 σz} = diag(i, −i); diag(i, −i) σx diag(−i, i) = −σx.
        let q = MatrixQuandle::hermitian(2).unwrap();
        let [sx, _, sz] = pauli();
        let got = q.act(&sz, PI / 2.0, &sx).unwrap();
        assert!(got.max_abs_diff(&(-&sx)) < 1e-14);
    }

    #[test]
    fn idempotent_on_random_elements() {
        let mut rng = seeded(5);
        for q in [
            MatrixQuandle::hermitian(4).unwrap(),
            MatrixQuandle::general(4).unwrap(),
        ] {
            for _ in 0..20 {
                let x = q.sample(&mut rng);
                let t = rng.gen_range(-3.0..3.0);
                assert!(q.act(&x, t, &x).unwrap().max_abs_diff(&x) < 1e-12);
            }
        }
    }

    #[test]
    fn skew_output_stays_hermitian() {
        let q = MatrixQuandle::hermitian(4).unwrap();
        let mut rng = seeded(9);
        for _ in 0..50 {
            let (x, y) = (q.sample(&mut rng), q.sample(&mut rng));
            let t = rng.gen_range(-3.0..3.0);
            assert!(q.act(&x, t, &y).unwrap().hermiticity_defect() <= 1e-10);
        }
    }

    #[test]
    fn validation() {
        let q = MatrixQuandle::hermitian(2).unwrap();
        let [_, sy, _] = pauli();
        assert!(q.validate(&sy).is_ok());
        assert!(q.validate(&sy.scale(Complex64::new(0.0, 1.0))).is_err());
        assert!(q.validate(&ComplexMatrix::identity(3)).is_err());
        let g = MatrixQuandle::general(2).unwrap();
        assert!(g.validate(&sy.scale(Complex64::new(0.0, 1.0))).is_ok());
        assert!(MatrixQuandle::general(17).is_err());
    }

    #[test]
    fn partner_polynomials_commute() {
        let q = MatrixQuandle::hermitian(3).unwrap();
        let mut rng = seeded(11);
        let x = q.sample(&mut rng);
        let mut commuting = 0;
        for _ in 0..40 {
            let y = q.sample_partner(&x, &mut rng);
            q.validate(&y).unwrap();
            if commutator(&x, &y).unwrap().max_abs() < 1e-12 {
                commuting += 1;
            }
        }
        assert!(commuting > 5 && commuting < 35);
    }
}
