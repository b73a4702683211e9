//! Cyclic Jacobi eigensolver for complex hermitian matrices.

use num_complex::Complex64;

use super::{ComplexMatrix, HermitianObservable, Spectrum, MAX_DIM};
use crate::error::{Error, Result};

pub const MAX_SWEEPS: usize = 100;

/// Off-diagonal Frobenius mass at which iteration stops, relative to
/// `max(1, ‖A‖_F)`.
pub const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;

/// Eigendecomposition `A = V · diag(values) · V†` with ascending values.
#[derive(Clone, Debug)]
pub struct Eigh {
    pub values: Vec<f64>,
    /// Unitary whose columns are the eigenvectors, ordered like `values`.
    pub vectors: ComplexMatrix,
}

fn off_diagonal_mass(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

pub fn eigh(observable: &HermitianObservable) -> Result<Eigh> {
    let mut a = observable.matrix().clone();
    let n = a.dim();
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    if !a.is_finite() {
        return Err(Error::NonFinite);
    }
    let mut v = ComplexMatrix::identity(n);
    let threshold = OFF_DIAGONAL_TOLERANCE * a.norm_frobenius().max(1.0);

    let mut sweeps = 0;
    loop {
        let residual = off_diagonal_mass(&a);
        if residual <= threshold {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, residual });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        sweeps += 1;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let values = order.iter().map(|&i| a[(i, i)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |r, c| v[(r, order[c])]);
    Ok(Eigh { values, vectors })
}

/// Annihilates `a[p][q]` with the unitary `W = diag(1, e^{−iφ}) · R(θ)`
/// acting on coordinates `p, q`, where `φ = arg a[p][q]`.
fn rotate(a: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let g = a[(p, q)];
    let r = g.norm();
    if r == 0.0 {
        return;
    }
    let phase = g / r;
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;

    let zeta = (aqq - app) / (2.0 * r);
    let t = if zeta >= 0.0 {
        1.0 / (zeta + (1.0 + zeta * zeta).sqrt())
    } else {
        -1.0 / (-zeta + (1.0 + zeta * zeta).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let w00 = Complex64::new(c, 0.0);
    let w01 = Complex64::new(s, 0.0);
    let w10 = -phase.conj() * s;
    let w11 = phase.conj() * c;

    let n = a.dim();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * w00 + akq * w10;
        a[(k, q)] = akp * w01 + akq * w11;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = w00.conj() * apk + w10.conj() * aqk;
        a[(q, k)] = w01.conj() * apk + w11.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)].im = 0.0;
    a[(q, q)].im = 0.0;

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * w00 + vkq * w10;
        v[(k, q)] = vkp * w01 + vkq * w11;
    }
}

pub fn spectrum(observable: &HermitianObservable) -> Result<Spectrum> {
    Spectrum::new(eigh(observable)?.values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::pauli;
    use crate::matrix::random::{random_hermitian, random_unitary, seeded};

    fn herm(m: ComplexMatrix) -> HermitianObservable {
        HermitianObservable::new(m).unwrap()
    }

    fn max_residual(a: &ComplexMatrix, e: &Eigh) -> f64 {
        let n = a.dim();
        let mut worst = 0.0f64;
        for k in 0..n {
            for i in 0..n {
                let av: Complex64 = (0..n).map(|j| a[(i, j)] * e.vectors[(j, k)]).sum();
                worst = worst.max((av - e.vectors[(i, k)] * e.values[k]).norm());
            }
        }
        worst
    }

    #[test]
    fn diagonal_spectrum_sorted() {
        let s = spectrum(&herm(ComplexMatrix::real_diag(&[3.0, 1.0, 2.0]))).unwrap();
        assert_eq!(s.values(), &[1.0, 2.0, 3.0]);
    }

    #[test]
    fn identity_spectrum() {
        let s = spectrum(&herm(ComplexMatrix::identity(2))).unwrap();
        assert_eq!(s.values(), &[1.0, 1.0]);
    }

    #[test]
    fn pauli_spectra() {
        // λ² − 1 = 0 for each Pauli matrix.
        for p in pauli() {
            let s = spectrum(&herm(p)).unwrap();
            assert!((s.values()[0] + 1.0).abs() < 1e-14);
            assert!((s.values()[1] - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn residuals_and_unitarity() {
        let mut rng = seeded(42);
        for n in 1..=16 {
            let a = random_hermitian(n, &mut rng);
            let e = eigh(&herm(a.clone())).unwrap();
            assert!(max_residual(&a, &e) <= 1e-8);
            let vv = &e.vectors.adjoint() * &e.vectors;
            assert!(vv.max_abs_diff(&ComplexMatrix::identity(n)) < 1e-12);
            assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn recovers_conjugated_diagonal() {
        let mut rng = seeded(3);
        for n in 2..=6 {
            let d: Vec<f64> = (0..n).map(|k| (k as f64 - 2.5) * 0.7).collect();
            let u = random_unitary(n, &mut rng);
            let a = (&(&u * &ComplexMatrix::real_diag(&d)) * &u.adjoint()).hermitian_part();
            let s = spectrum(&herm(a)).unwrap();
            let want = Spectrum::new(d).unwrap();
            assert!(s.max_deviation(&want) <= 1e-8);
        }
    }
}
