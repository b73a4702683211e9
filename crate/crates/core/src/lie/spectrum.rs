use rand::seq::SliceRandom;
use rand::Rng;

use super::{LieQuandle, MatrixQuandle};
use crate::error::{Error, Result};
use crate::matrix::random::random_unitary;
use crate::matrix::{eigh, spectrum, ComplexMatrix, HermitianObservable, Spectrum};

/// Largest accepted deviation between an element's spectrum and the
/// realization spectrum.
pub const SPECTRUM_TOLERANCE: f64 = 1e-8;

/// Smallest accepted gap between distinct prescribed eigenvalues.
const MIN_GAP: f64 = 1e-6;

/// Hermitian matrices with a fixed simple spectrum, acted on by
/// `X ▷_t Y = e^{itX} Y e^{−itX}`.
#[derive(Clone, Debug)]
pub struct FixedSpectrumQuandle {
    spectrum: Spectrum,
    inner: MatrixQuandle,
}

impl FixedSpectrumQuandle {
    pub fn new(spectrum: Spectrum) -> Result<Self> {
        let gap = spectrum.min_gap();
        if gap < MIN_GAP {
            return Err(Error::InvalidRealization(format!(
                "eigenvalues must be pairwise distinct (gap {gap:e} < {MIN_GAP:e})"
            )));
        }
        let inner = MatrixQuandle::hermitian(spectrum.len())?;
        Ok(FixedSpectrumQuandle { spectrum, inner })
    }

    /// Spectrum `1, 2, …, dim`.
    pub fn with_dim(dim: usize) -> Result<Self> {
        Self::new(Spectrum::new((1..=dim).map(|k| k as f64).collect())?)
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn dim(&self) -> usize {
        self.spectrum.len()
    }

    /// `U · diag(spectrum) · U†`.
    pub fn from_unitary(&self, u: &ComplexMatrix) -> ComplexMatrix {
        let d = ComplexMatrix::real_diag(self.spectrum.values());
        (&(u * &d) * &u.adjoint()).hermitian_part()
    }

    /// Deviation of the spectrum of `m` from the prescribed one.
    pub fn spectrum_drift(&self, m: &ComplexMatrix) -> Result<f64> {
        let s = spectrum(&HermitianObservable::from_hermitian_part(m))?;
        Ok(s.max_deviation(&self.spectrum))
    }
}

impl LieQuandle for FixedSpectrumQuandle {
    type Element = ComplexMatrix;
    type Tangent = ComplexMatrix;

    fn name(&self) -> &'static str {
        "fixed-spectrum"
    }

    /// Fails with [`Error::SpectrumDrift`] if the result leaves the carrier.
    fn act(&self, x: &ComplexMatrix, t: f64, y: &ComplexMatrix) -> Result<ComplexMatrix> {
        let out = self.inner.act(x, t, y)?;
        let drift = self.spectrum_drift(&out)?;
        if drift > SPECTRUM_TOLERANCE {
            return Err(Error::SpectrumDrift { drift });
        }
        Ok(out)
    }

    fn distance(&self, a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
        a.max_abs_diff(b)
    }

    fn validate(&self, element: &ComplexMatrix) -> Result<()> {
        self.inner.validate(element)?;
        let drift = self.spectrum_drift(element)?;
        if drift > SPECTRUM_TOLERANCE {
            return Err(Error::InvalidElement(format!(
                "spectrum differs from {:?} by {drift:e}",
                self.spectrum.values()
            )));
        }
        Ok(())
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> ComplexMatrix {
        self.from_unitary(&random_unitary(self.dim(), rng))
    }

    /// Half the time a matrix sharing the eigenbasis of `x` with the
    /// eigenvalues permuted, which commutes with `x`.
    fn sample_partner<R: Rng + ?Sized>(&self, x: &ComplexMatrix, rng: &mut R) -> ComplexMatrix {
        if !rng.gen_bool(0.5) {
            return self.sample(rng);
        }
        let vectors = eigh(&HermitianObservable::from_hermitian_part(x))
            .expect("carrier elements are diagonalizable")
            .vectors;
        let mut values = self.spectrum.values().to_vec();
        values.shuffle(rng);
        let d = ComplexMatrix::real_diag(&values);
        (&(&vectors * &d) * &vectors.adjoint()).hermitian_part()
    }

    fn bracket(&self, x: &ComplexMatrix, y: &ComplexMatrix) -> Option<ComplexMatrix> {
        self.inner.bracket(x, y)
    }

    fn displacement(&self, from: &ComplexMatrix, to: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.inner.displacement(from, to)
    }

    fn components(&self, element: &ComplexMatrix) -> Vec<f64> {
        element.to_components()
    }

    fn component_names(&self, element: &ComplexMatrix) -> Vec<String> {
        ComplexMatrix::component_names(element.dim())
    }
}
