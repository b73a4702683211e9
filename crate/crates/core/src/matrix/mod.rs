//! Dense complex matrices at desk scale (dimension at most 16).
//!
//! Everything downstream (matrix Lie quandles, the Bloch embedding, the
//! fixed-spectrum realization, the flow integrator) is built on
//! [`ComplexMatrix`]. Tolerances are expressed in the max-abs entry norm
//! [`ComplexMatrix::max_abs`].

mod eigen;
mod expm;
pub mod random;

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use eigen::{eigh, spectrum, Eigh, MAX_SWEEPS, OFF_DIAGONAL_TOLERANCE};
pub use expm::expm;

/// Largest supported matrix dimension.
pub const MAX_DIM: usize = 16;

/// Maximum `‖A − A†‖_max` accepted when constructing a [`HermitianObservable`].
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;

/// Square dense complex matrix stored row-major.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

/// JSON form `{"dim": n, "re": [[...]], "im": [[...]]}`.
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    dim: usize,
    re: Vec<Vec<f64>>,
    im: Vec<Vec<f64>>,
}

impl TryFrom<MatrixRepr> for ComplexMatrix {
    type Error = Error;

    fn try_from(repr: MatrixRepr) -> Result<Self> {
        let m = ComplexMatrix::from_parts(&repr.re, &repr.im)?;
        if m.dim != repr.dim {
            return Err(Error::InvalidMatrix(format!(
                "declared dim {} but rows describe dim {}",
                repr.dim, m.dim
            )));
        }
        Ok(m)
    }
}

impl From<ComplexMatrix> for MatrixRepr {
    fn from(m: ComplexMatrix) -> Self {
        let n = m.dim;
        MatrixRepr {
            dim: n,
            re: (0..n)
                .map(|i| (0..n).map(|j| m[(i, j)].re).collect())
                .collect(),
            im: (0..n)
                .map(|i| (0..n).map(|j| m[(i, j)].im).collect())
                .collect(),
        }
    }
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        ComplexMatrix {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    /// Builds a matrix from complex rows; rejects ragged, empty, oversized or
    /// non-finite input.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        if n > MAX_DIM {
            return Err(Error::DimensionTooLarge(n));
        }
        if let Some(row) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::InvalidMatrix(format!(
                "row of length {} in a {n}x{n} matrix",
                row.len()
            )));
        }
        let m = ComplexMatrix {
            dim: n,
            data: rows.iter().flatten().copied().collect(),
        };
        if !m.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(m)
    }

    /// Builds a matrix from separate real and imaginary parts.
    pub fn from_parts(re: &[Vec<f64>], im: &[Vec<f64>]) -> Result<Self> {
        if re.len() != im.len() {
            return Err(Error::InvalidMatrix(
                "real and imaginary parts differ in shape".into(),
            ));
        }
        let rows = re
            .iter()
            .zip(im)
            .map(|(r, i)| {
                if r.len() != i.len() {
                    return Err(Error::InvalidMatrix(
                        "real and imaginary parts differ in shape".into(),
                    ));
                }
                Ok(r.iter()
                    .zip(i)
                    .map(|(&a, &b)| Complex64::new(a, b))
                    .collect())
            })
            .collect::<Result<Vec<Vec<Complex64>>>>()?;
        Self::from_rows(&rows)
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let im: Vec<Vec<f64>> = rows.iter().map(|r| vec![0.0; r.len()]).collect();
        Self::from_parts(rows, &im)
    }

    pub fn diag(values: &[Complex64]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn real_diag(values: &[f64]) -> Self {
        let v: Vec<Complex64> = values.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::diag(&v)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Max-abs entry norm `‖·‖_max`.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// `‖self − other‖_max`; panics on dimension mismatch.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Induced 1-norm (largest absolute column sum).
    pub fn norm_one(&self) -> f64 {
        (0..self.dim)
            .map(|j| (0..self.dim).map(|i| self[(i, j)].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn norm_frobenius(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn scale_real(&self, factor: f64) -> Self {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    /// `self + factor · other`.
    pub fn add_scaled(&self, factor: f64, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        ComplexMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b * factor)
                .collect(),
        }
    }

    /// `‖A − A†‖_max`.
    pub fn hermiticity_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// `(A + A†) / 2`.
    pub fn hermitian_part(&self) -> Self {
        (self + &self.adjoint()).scale_real(0.5)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        Ok(self.matmul(rhs))
    }

    fn check_dim(&self, rhs: &Self) -> Result<()> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        Ok(())
    }

    fn matmul(&self, rhs: &Self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.data[k * n + j];
                }
            }
        }
        out
    }

    /// Row-major `(re, im)` pairs, the flattened CSV layout.
    pub fn to_components(&self) -> Vec<f64> {
        self.data.iter().flat_map(|z| [z.re, z.im]).collect()
    }

    pub fn component_names(dim: usize) -> Vec<String> {
        let mut names = Vec::with_capacity(2 * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                names.push(format!("re_{i}{j}"));
                names.push(format!("im_{i}{j}"));
            }
        }
        names
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(i < self.dim && j < self.dim, "index out of range");
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(i < self.dim && j < self.dim, "index out of range");
        &mut self.data[i * self.dim + j]
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:>10.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&ComplexMatrix> for &ComplexMatrix {
            type Output = ComplexMatrix;

            fn $method(self, rhs: &ComplexMatrix) -> ComplexMatrix {
                assert_eq!(self.dim, rhs.dim, "dimension mismatch");
                ComplexMatrix {
                    dim: self.dim,
                    data: self.data.iter().zip(&rhs.data).map(|(a, b)| a $op b).collect(),
                }
            }
        }

        impl $trait for ComplexMatrix {
            type Output = ComplexMatrix;

            fn $method(self, rhs: ComplexMatrix) -> ComplexMatrix {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);

impl Mul<&ComplexMatrix> for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        self.matmul(rhs)
    }
}

impl Mul for ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: ComplexMatrix) -> ComplexMatrix {
        &self * &rhs
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        ComplexMatrix {
            dim: self.dim,
            data: self.data.iter().map(|z| -z).collect(),
        }
    }
}

impl Neg for ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        -&self
    }
}

/// `XY − YX`.
pub fn commutator(x: &ComplexMatrix, y: &ComplexMatrix) -> Result<ComplexMatrix> {
    x.check_dim(y)?;
    Ok(&x.matmul(y) - &y.matmul(x))
}

/// `e^{tX} · Y · e^{−tX}`, using one exponential for each side and no
/// explicit inverse.
pub fn conjugate_by_exp(x: &ComplexMatrix, t: f64, y: &ComplexMatrix) -> Result<ComplexMatrix> {
    x.check_dim(y)?;
    let forward = expm(&x.scale_real(t))?;
    let backward = expm(&x.scale_real(-t))?;
    Ok(forward.matmul(y).matmul(&backward))
}

/// The Pauli matrices `σx`, `σy`, `σz`.
pub fn pauli() -> [ComplexMatrix; 3] {
    let o = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    [
        ComplexMatrix::from_rows(&[vec![o, one], vec![one, o]]).unwrap(),
        ComplexMatrix::from_rows(&[vec![o, Complex64::new(0.0, -1.0)], vec![i, o]]).unwrap(),
        ComplexMatrix::from_rows(&[vec![one, o], vec![o, -one]]).unwrap(),
    ]
}

/// A matrix certified hermitian to within [`HERMITIAN_TOLERANCE`].
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct HermitianObservable(ComplexMatrix);

impl HermitianObservable {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        let deviation = matrix.hermiticity_defect();
        if deviation > HERMITIAN_TOLERANCE {
            return Err(Error::NotHermitian { deviation });
        }
        Ok(HermitianObservable(matrix))
    }

    /// Symmetrizes first, so any square matrix is accepted.
    pub fn from_hermitian_part(matrix: &ComplexMatrix) -> Self {
        HermitianObservable(matrix.hermitian_part())
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }
}

impl<'de> Deserialize<'de> for HermitianObservable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let m = ComplexMatrix::deserialize(d)?;
        HermitianObservable::new(m).map_err(serde::de::Error::custom)
    }
}

/// Real eigenvalues sorted ascending.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum(Vec<f64>);

impl Spectrum {
    /// Sorts the given values; rejects non-finite input.
    pub fn new(mut values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("empty spectrum".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite);
        }
        values.sort_by(f64::total_cmp);
        Ok(Spectrum(values))
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Smallest gap between consecutive values (infinite for a single value).
    pub fn min_gap(&self) -> f64 {
        self.0
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min)
    }

    /// Largest entrywise deviation; infinite when the lengths differ.
    pub fn max_deviation(&self, other: &Spectrum) -> f64 {
        if self.len() != other.len() {
            return f64::INFINITY;
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn commutator_of_identity_vanishes() {
        let y = ComplexMatrix::from_rows(&[
            vec![c(1.0, 2.0), c(0.5, 0.0)],
            vec![c(-3.0, 1.0), c(0.0, -1.0)],
        ])
        .unwrap();
        let z = commutator(&ComplexMatrix::identity(2), &y).unwrap();
        assert_eq!(z.max_abs(), 0.0);
        assert_eq!(commutator(&y, &y).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn commutator_of_pauli_z_and_x() {
        // σzσx = [[0,1],[-1,0]], σxσz = [[0,-1],[1,0]]; difference is 2iσy.
        let [sx, sy, sz] = pauli();
        let got = commutator(&sz, &sx).unwrap();
        let expected = ComplexMatrix::from_real_rows(&[vec![0.0, 2.0], vec![-2.0, 0.0]]).unwrap();
        assert_eq!(got, expected);
        assert_eq!(got, sy.scale(c(0.0, 2.0)));
    }

    #[test]
    fn commutator_rejects_mismatch() {
        let err = commutator(&ComplexMatrix::identity(2), &ComplexMatrix::identity(3)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { left: 2, right: 3 });
    }

    #[test]
    fn json_layout() {
        let [_, sy, _] = pauli();
        let json = serde_json::to_string(&sy).unwrap();
        assert_eq!(
            json,
            r#"{"dim":2,"re":[[0.0,0.0],[0.0,0.0]],"im":[[0.0,-1.0],[1.0,0.0]]}"#
        );
        let back: ComplexMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, sy);
    }

    #[test]
    fn json_rejects_bad_shapes() {
        assert!(serde_json::from_str::<ComplexMatrix>(
            r#"{"dim":3,"re":[[1,0],[0,1]],"im":[[0,0],[0,0]]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<ComplexMatrix>(
            r#"{"dim":2,"re":[[1,0],[0]],"im":[[0,0],[0,0]]}"#
        )
        .is_err());
        assert!(serde_json::from_str::<ComplexMatrix>(r#"{"dim":0,"re":[],"im":[]}"#).is_err());
    }

    #[test]
    fn hermitian_construction() {
        let [sx, sy, sz] = pauli();
        for s in [sx, sy.clone(), sz] {
            assert!(HermitianObservable::new(s).is_ok());
        }
        let skew = sy.scale(c(0.0, 1.0));
        assert!(matches!(
            HermitianObservable::new(skew),
            Err(Error::NotHermitian { .. })
        ));
        let json = r#"{"dim":2,"re":[[0,1],[0,0]],"im":[[0,0],[0,0]]}"#;
        assert!(serde_json::from_str::<HermitianObservable>(json).is_err());
    }

    #[test]
    fn spectrum_is_sorted() {
        let s = Spectrum::new(vec![3.0, 1.0, 2.0]).unwrap();
        assert_eq!(s.values(), &[1.0, 2.0, 3.0]);
        assert_eq!(s.min_gap(), 1.0);
        assert!(Spectrum::new(vec![f64::NAN]).is_err());
    }
}
