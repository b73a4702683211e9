//! Seeded random test matrices.
//!
//! Entries are uniform in `[−1, 1]` for both real and imaginary parts;
//! hermitian samples are symmetrized as `(M + M†)/2`.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{expm, ComplexMatrix};

/// Seed used by every suite unless one is given explicitly.
pub const DEFAULT_SEED: u64 = 42;

pub type TestRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    ComplexMatrix::from_fn(dim, |_, _| {
        Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0))
    })
}

pub fn random_hermitian<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    random_complex(dim, rng).hermitian_part()
}

/// Hermitian sample rescaled to `‖·‖_max = 1`.
pub fn random_hermitian_normalized<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let h = random_hermitian(dim, rng);
    let norm = h.max_abs();
    h.scale_real(1.0 / norm)
}

/// `e^{iH}` for a random hermitian `H` scaled by π.
pub fn random_unitary<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> ComplexMatrix {
    let h = random_hermitian(dim, rng);
    expm(&h.scale(Complex64::new(0.0, std::f64::consts::PI))).expect("bounded hermitian input")
}
