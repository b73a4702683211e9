//! Matrix exponential by scaling and squaring with diagonal Padé
//! approximants (degrees 3, 5, 7, 9, 13), selected by the 1-norm.

use num_complex::Complex64;

use super::{ComplexMatrix, MAX_DIM};
use crate::error::{Error, Result};

/// Padé degree together with the largest 1-norm for which it reaches unit
/// roundoff without scaling.
const DEGREES: [(usize, f64); 5] = [
    (3, 1.495585217958292e-2),
    (5, 2.53939833006323e-1),
    (7, 9.504178996162932e-1),
    (9, 2.097847961257068e0),
    (13, 5.371920351148152e0),
];

/// `e^X`.
pub fn expm(x: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = x.dim();
    if n > MAX_DIM {
        return Err(Error::DimensionTooLarge(n));
    }
    if !x.is_finite() {
        return Err(Error::NonFinite);
    }
    let norm = x.norm_one();
    if norm == 0.0 {
        return Ok(ComplexMatrix::identity(n));
    }

    for &(degree, theta) in &DEGREES[..4] {
        if norm <= theta {
            return pade(x, degree);
        }
    }

    let (degree, theta) = DEGREES[4];
    let squarings = if norm > theta {
        (norm / theta).log2().ceil() as i32
    } else {
        0
    };
    let mut result = pade(&x.scale_real(2f64.powi(-squarings)), degree)?;
    for _ in 0..squarings {
        result = &result * &result;
    }
    if !result.is_finite() {
        return Err(Error::NonFinite);
    }
    Ok(result)
}

/// Coefficients of the diagonal Padé numerator `p(x) = Σ c_j x^j`,
/// normalized so that `c_0 = 1`; the denominator is `p(−x)`.
fn pade_coefficients(m: usize) -> Vec<f64> {
    let mut c = Vec::with_capacity(m + 1);
    c.push(1.0);
    for j in 0..m {
        let prev = c[j];
        c.push(prev * (m - j) as f64 / ((j + 1) as f64 * (2 * m - j) as f64));
    }
    c
}

fn pade(x: &ComplexMatrix, degree: usize) -> Result<ComplexMatrix> {
    let n = x.dim();
    let c = pade_coefficients(degree);
    let x2 = x * x;

    // Powers of X² up to X^(degree - 1).
    let mut even_powers = vec![ComplexMatrix::identity(n), x2.clone()];
    while even_powers.len() <= degree / 2 {
        let next = even_powers.last().unwrap() * &x2;
        even_powers.push(next);
    }

    let mut odd = ComplexMatrix::zeros(n);
    let mut even = ComplexMatrix::zeros(n);
    for (k, power) in even_powers.iter().enumerate() {
        if 2 * k <= degree {
            even = even.add_scaled(c[2 * k], power);
        }
        if 2 * k < degree {
            odd = odd.add_scaled(c[2 * k + 1], power);
        }
    }
    let odd = x * &odd;

    // (V − U)⁻¹ (V + U)
    let numerator = &even + &odd;
    let denominator = &even - &odd;
    solve(&denominator, &numerator)
}

/// Solves `A · X = B` by LU factorization with partial pivoting.
fn solve(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = a.dim();
    let mut lu = a.clone();
    let mut rhs = b.clone();

    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| lu[(i, col)].norm().total_cmp(&lu[(j, col)].norm()))
            .unwrap();
        if lu[(pivot, col)].norm() == 0.0 {
            return Err(Error::InvalidMatrix("singular Padé denominator".into()));
        }
        if pivot != col {
            for j in 0..n {
                let tmp = lu[(col, j)];
                lu[(col, j)] = lu[(pivot, j)];
                lu[(pivot, j)] = tmp;
                let tmp = rhs[(col, j)];
                rhs[(col, j)] = rhs[(pivot, j)];
                rhs[(pivot, j)] = tmp;
            }
        }
        let diag = lu[(col, col)];
        for i in col + 1..n {
            let factor = lu[(i, col)] / diag;
            if factor == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in col..n {
                let v = lu[(col, j)];
                lu[(i, j)] -= factor * v;
            }
            for j in 0..n {
                let v = rhs[(col, j)];
                rhs[(i, j)] -= factor * v;
            }
        }
    }

    let mut out = ComplexMatrix::zeros(n);
    for j in 0..n {
        for i in (0..n).rev() {
            let mut acc = rhs[(i, j)];
            for k in i + 1..n {
                acc -= lu[(i, k)] * out[(k, j)];
            }
            out[(i, j)] = acc / lu[(i, i)];
        }
    }
    Ok(out)
}
