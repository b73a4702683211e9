//! Sampled residuals of the Lie quandle axioms.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie::{ConvexFlow, ConvexSpindle, LieQuandle};
use crate::matrix::random::seeded;

/// Parameters `s, t` are drawn uniformly from `[−T_RANGE, T_RANGE]`.
pub const T_RANGE: f64 = 3.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// `x ▷_s (x ▷_t y) = x ▷_{s+t} y` and `x ▷_0 y = y`.
    SelfAction,
    /// `x ▷_s (y ▷_t z) = (x ▷_s y) ▷_t (x ▷_s z)`.
    SelfDistributivity,
    /// `x ▷_s x = x`.
    Idempotency,
    /// `x ▷_{−t} (x ▷_t y) = y` and `x ▷_t (x ▷_{−t} y) = y`.
    InverseLaw,
    /// Convex flow: `(x ∗_t y) ∗_s z = (x ∗_s z) ∗_t (y ∗_s z)`.
    /// Single operation: `(x ▷ y) ▷ z = (x ▷ z) ▷ (y ▷ z)`.
    RightSelfDistributivity,
    /// Convex flow: `(x ∗_t y) ∗_s z = (x ∗_t z) ∗_s (y ∗_t z)`. Fails
    /// whenever `s = 0` and `y ≠ z`, since the left side is then `z`.
    RightSelfDistributivityUnswapped,
}

/// The sample achieving the largest residual.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WorstCase {
    pub sample: usize,
    pub s: f64,
    pub t: f64,
    /// Components of `x`, `y`, `z`.
    pub points: Vec<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub realization: String,
    pub axiom: Axiom,
    pub samples: usize,
    /// `None` in JSON when infinite (a failed evaluation).
    pub max_residual: f64,
    pub tolerance: f64,
    pub worst_case: Option<WorstCase>,
    pub pass: bool,
}

struct Sample<E> {
    x: E,
    y: E,
    z: E,
    s: f64,
    t: f64,
}

fn draw_samples<E, R: Rng>(
    n: usize,
    rng: &mut R,
    mut draw: impl FnMut(&mut R) -> E,
) -> Vec<Sample<E>> {
    (0..n)
        .map(|_| {
            let x = draw(rng);
            let y = draw(rng);
            let z = draw(rng);
            let s = rng.gen_range(-T_RANGE..=T_RANGE);
            let t = rng.gen_range(-T_RANGE..=T_RANGE);
            Sample { x, y, z, s, t }
        })
        .collect()
}

/// NaN counts as infinitely bad.
fn sanitize(r: f64) -> f64 {
    if r.is_nan() {
        f64::INFINITY
    } else {
        r
    }
}

/// Largest residual per axiom; ties go to the lowest sample index.
fn aggregate<E>(
    realization: &str,
    axioms: &[Axiom],
    samples: &[Sample<E>],
    residuals: &[Vec<f64>],
    tolerance: f64,
    components: impl Fn(&E) -> Vec<f64>,
) -> Vec<AxiomReport> {
    axioms
        .iter()
        .enumerate()
        .map(|(k, &axiom)| {
            let worst = residuals
                .iter()
                .enumerate()
                .map(|(i, r)| (i, sanitize(r[k])))
                .fold(None, |best: Option<(usize, f64)>, (i, r)| match best {
                    Some((_, b)) if b >= r => best,
                    _ => Some((i, r)),
                });
            let (max_residual, worst_case) = match worst {
                Some((i, r)) => {
                    let s = &samples[i];
                    (
                        r,
                        Some(WorstCase {
                            sample: i,
                            s: s.s,
                            t: s.t,
                            points: vec![components(&s.x), components(&s.y), components(&s.z)],
                        }),
                    )
                }
                None => (0.0, None),
            };
            AxiomReport {
                realization: realization.to_string(),
                axiom,
                samples: samples.len(),
                max_residual,
                tolerance,
                worst_case,
                pass: max_residual <= tolerance,
            }
        })
        .collect()
}

fn axiom_residuals<R: LieQuandle>(r: &R, smp: &Sample<R::Element>) -> Vec<f64> {
    let Sample { x, y, z, s, t } = smp;
    let (s, t) = (*s, *t);
    let d = |a: &R::Element, b: &R::Element| r.distance(a, b);

    let self_action = (|| {
        let nested = r.act(x, s, &r.act(x, t, y)?)?;
        let combined = r.act(x, s + t, y)?;
        let zero = r.act(x, 0.0, y)?;
        Ok::<_, Error>(d(&nested, &combined).max(d(&zero, y)))
    })();
    let self_distributivity = (|| {
        let left = r.act(x, s, &r.act(y, t, z)?)?;
        let right = r.act(&r.act(x, s, y)?, t, &r.act(x, s, z)?)?;
        Ok::<_, Error>(d(&left, &right))
    })();
    let idempotency = r.act(x, s, x).map(|v| d(&v, x));
    let inverse = (|| {
        let back = r.act(x, -t, &r.act(x, t, y)?)?;
        let forth = r.act(x, t, &r.act(x, -t, y)?)?;
        Ok::<_, Error>(d(&back, y).max(d(&forth, y)))
    })();

    [self_action, self_distributivity, idempotency, inverse]
        .into_iter()
        .map(|r| r.unwrap_or(f64::INFINITY))
        .collect()
}

/// One report per axiom (self-action, self-distributivity, idempotency,
/// inverse law) over `samples` seeded random tuples `(x, y, z, s, t)`.
pub fn verify_axioms<R: LieQuandle>(
    r: &R,
    samples: usize,
    seed: u64,
    tolerance: f64,
) -> Result<Vec<AxiomReport>> {
    if samples == 0 {
        return Err(Error::InvalidArgument(
            "at least one sample is required".into(),
        ));
    }
    let mut rng = seeded(seed);
    let tuples = draw_samples(samples, &mut rng, |g| r.sample(g));
    let residuals: Vec<Vec<f64>> = tuples
        .par_iter()
        .map(|smp| axiom_residuals(r, smp))
        .collect();
    Ok(aggregate(
        r.name(),
        &[
            Axiom::SelfAction,
            Axiom::SelfDistributivity,
            Axiom::Idempotency,
            Axiom::InverseLaw,
        ],
        &tuples,
        &residuals,
        tolerance,
        |e| r.components(e),
    ))
}

/// The two right-distributivity variants of the convex flow.
pub fn verify_convex_right_distributivity(
    flow: &ConvexFlow,
    samples: usize,
    seed: u64,
    tolerance: f64,
) -> Vec<AxiomReport> {
    let mut rng = seeded(seed);
    let tuples = draw_samples(samples, &mut rng, |g| flow.sample(g));
    let mix = ConvexFlow::mix;
    let residuals: Vec<Vec<f64>> = tuples
        .par_iter()
        .map(|Sample { x, y, z, s, t }| {
            let left = mix(&mix(x, *t, y), *s, z);
            let swapped = mix(&mix(x, *s, z), *t, &mix(y, *s, z));
            let unswapped = mix(&mix(x, *t, z), *s, &mix(y, *t, z));
            vec![
                flow.distance(&left, &swapped),
                flow.distance(&left, &unswapped),
            ]
        })
        .collect();
    aggregate(
        flow.name(),
        &[
            Axiom::RightSelfDistributivity,
            Axiom::RightSelfDistributivityUnswapped,
        ],
        &tuples,
        &residuals,
        tolerance,
        |e| e.clone(),
    )
}

/// Left and right self-distributivity and idempotency of a single biased
/// mixing, over random triples inside its body. `s` and `t` are unused and
/// reported as zero.
pub fn verify_spindle(
    sp: &ConvexSpindle,
    samples: usize,
    seed: u64,
    tolerance: f64,
) -> Vec<AxiomReport> {
    let mut rng = seeded(seed);
    let tuples: Vec<Sample<Vec<f64>>> = (0..samples)
        .map(|_| Sample {
            x: sp.sample(&mut rng),
            y: sp.sample(&mut rng),
            z: sp.sample(&mut rng),
            s: 0.0,
            t: 0.0,
        })
        .collect();
    let residuals: Vec<Vec<f64>> = tuples
        .par_iter()
        .map(|Sample { x, y, z, .. }| {
            let op = |a: &[f64], b: &[f64]| sp.apply(a, b);
            let left = sp.distance(&op(x, &op(y, z)), &op(&op(x, y), &op(x, z)));
            let right = sp.distance(&op(&op(x, y), z), &op(&op(x, z), &op(y, z)));
            let idem = sp.distance(&op(x, x), x);
            vec![left, right, idem]
        })
        .collect();
    aggregate(
        sp.name(),
        &[
            Axiom::SelfDistributivity,
            Axiom::RightSelfDistributivity,
            Axiom::Idempotency,
        ],
        &tuples,
        &residuals,
        tolerance,
        |e| e.clone(),
    )
}
