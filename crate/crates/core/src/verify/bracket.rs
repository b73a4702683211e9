use crate::error::{Error, Result};
use crate::lie::{LieQuandle, TangentVector};

/// Default finite-difference step.
pub const DEFAULT_STEP: f64 = 1e-4;

/// Central difference `(x ▷_h y − x ▷_{−h} y) / 2h`, an `O(h²)`
/// approximation of the bracket.
pub fn numeric_bracket<R: LieQuandle>(
    r: &R,
    x: &R::Element,
    y: &R::Element,
    h: f64,
) -> Result<R::Tangent> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "step must be positive, got {h}"
        )));
    }
    let forward = r.act(x, h, y)?;
    let backward = r.act(x, -h, y)?;
    Ok(r.displacement(&backward, &forward)?.scaled(0.5 / h))
}

/// `‖numeric − analytic‖` at step `h`; errors when no analytic bracket exists.
pub fn bracket_error<R: LieQuandle>(r: &R, x: &R::Element, y: &R::Element, h: f64) -> Result<f64> {
    let analytic = r
        .bracket(x, y)
        .ok_or_else(|| Error::Unsupported(format!("{} has no analytic bracket", r.name())))?;
    Ok(numeric_bracket(r, x, y, h)?.minus(&analytic).norm())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{BlochQuandle, ConvexFlow, MatrixQuandle};
    use crate::matrix::random::seeded;

    #[test]
    fn rejects_nonpositive_step() {
        let q = ConvexFlow::new(2).unwrap();
        let x = vec![0.0, 1.0];
        assert!(numeric_bracket(&q, &x, &x, 0.0).is_err());
        assert!(numeric_bracket(&q, &x, &x, -1e-3).is_err());
    }

    #[test]
    fn vanishes_on_the_diagonal() {
        let q = MatrixQuandle::hermitian(3).unwrap();
        let x = q.sample(&mut seeded(1));
        assert!(numeric_bracket(&q, &x, &x, 1e-3).unwrap().max_abs() < 1e-12);
    }

    #[test]
    fn convex_flow_bracket_is_difference() {
        // d/dt ((1 − e^{−t})x + e^{−t}y) at 0 is x − y.
        let q = ConvexFlow::new(3).unwrap();
        let x = vec![1.0, -2.0, 0.5];
        let y = vec![0.25, 0.0, -1.0];
        let got = numeric_bracket(&q, &x, &y, DEFAULT_STEP).unwrap();
        for (g, w) in got.iter().zip([0.75, -2.0, 1.5]) {
            assert!((g - w).abs() < 1e-8);
        }
    }

    #[test]
    fn bloch_bracket_is_cross_product() {
        let mut rng = seeded(3);
        for _ in 0..10 {
            let x = BlochQuandle.sample(&mut rng);
            let y = BlochQuandle.sample(&mut rng);
            assert!(bracket_error(&BlochQuandle, &x, &y, 1e-4).unwrap() < 1e-7);
        }
    }
}
