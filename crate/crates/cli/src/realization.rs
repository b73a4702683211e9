use clap::ValueEnum;
use selfdist_core::lie::{
    BlochQuandle, ConvexBody, ConvexFlow, ConvexSpindle, FixedSpectrumQuandle, MatrixQuandle,
    UnionLie,
};
use selfdist_core::matrix::Spectrum;
use selfdist_core::verify::Corrupted;
use selfdist_core::{Error, Result};

use crate::args::{Body, RealizationArgs, RealizationName};

const DEFAULT_MATRIX_DIM: usize = 2;
const DEFAULT_VECTOR_DIM: usize = 3;

pub enum Realization {
    Matrix(MatrixQuandle),
    Bloch(BlochQuandle),
    ConvexFlow(ConvexFlow),
    ConvexSpindle(ConvexSpindle),
    FixedSpectrum(FixedSpectrumQuandle),
    Union(UnionLie),
    Corrupted(Corrupted),
}

fn reject(flag: &str, name: RealizationName) -> Error {
    let label = name
        .to_possible_value()
        .map(|v| v.get_name().to_owned())
        .unwrap_or_default();
    Error::InvalidArgument(format!("--{flag} does not apply to {label}"))
}

impl Realization {
    /// Builds the realization, rejecting flags that do not belong to it.
    pub fn build(a: &RealizationArgs) -> Result<Self> {
        use RealizationName as N;
        let name = a.realization;
        if a.bias.is_some() && name != N::ConvexSpindle {
            return Err(reject("bias", name));
        }
        if a.body.is_some() && name != N::ConvexSpindle {
            return Err(reject("body", name));
        }
        if a.spectrum.is_some() && name != N::FixedSpectrum {
            return Err(reject("spectrum", name));
        }
        if a.dim.is_some() && matches!(name, N::Bloch | N::Union) {
            return Err(reject("dim", name));
        }
        let vector_dim = a.dim.unwrap_or(DEFAULT_VECTOR_DIM);
        Ok(match name {
            N::MatrixHermitian => Realization::Matrix(MatrixQuandle::hermitian(
                a.dim.unwrap_or(DEFAULT_MATRIX_DIM),
            )?),
            N::MatrixGeneral => {
                Realization::Matrix(MatrixQuandle::general(a.dim.unwrap_or(DEFAULT_MATRIX_DIM))?)
            }
            N::Bloch => Realization::Bloch(BlochQuandle),
            N::ConvexFlow => Realization::ConvexFlow(ConvexFlow::new(vector_dim)?),
            N::ConvexSpindle => {
                let bias = a.bias.ok_or_else(|| {
                    Error::InvalidArgument("convex-spindle requires --bias".into())
                })?;
                let body = match a.body.unwrap_or(Body::Box) {
                    Body::Box => ConvexBody::Box(vector_dim),
                    Body::Simplex => ConvexBody::Simplex(vector_dim),
                };
                Realization::ConvexSpindle(ConvexSpindle::new(bias, body)?)
            }
            N::FixedSpectrum => match &a.spectrum {
                Some(values) => {
                    if a.dim.is_some_and(|d| d != values.len()) {
                        return Err(Error::InvalidArgument(format!(
                            "--dim {} disagrees with a spectrum of {} values",
                            a.dim.unwrap_or_default(),
                            values.len()
                        )));
                    }
                    Realization::FixedSpectrum(FixedSpectrumQuandle::new(Spectrum::new(
                        values.clone(),
                    )?)?)
                }
                None => Realization::FixedSpectrum(FixedSpectrumQuandle::with_dim(vector_dim)?),
            },
            N::Union => Realization::Union(UnionLie),
            N::Corrupted => Realization::Corrupted(Corrupted::new(vector_dim)?),
        })
    }

    pub fn is_affine(&self) -> bool {
        matches!(
            self,
            Realization::ConvexFlow(_) | Realization::ConvexSpindle(_)
        )
    }
}

/// Runs `$body` with `$r` bound to the concrete [`LieQuandle`]; the convex
/// spindle has a single fixed operation and is rejected.
///
/// [`LieQuandle`]: selfdist_core::lie::LieQuandle
macro_rules! with_lie {
    ($realization:expr, |$r:ident| $body:expr) => {
        match $realization {
            $crate::realization::Realization::Matrix($r) => $body,
            $crate::realization::Realization::Bloch($r) => $body,
            $crate::realization::Realization::ConvexFlow($r) => $body,
            $crate::realization::Realization::FixedSpectrum($r) => $body,
            $crate::realization::Realization::Union($r) => $body,
            $crate::realization::Realization::Corrupted($r) => $body,
            $crate::realization::Realization::ConvexSpindle(_) => {
                Err(selfdist_core::Error::Unsupported(
                    "convex-spindle has no time parameter; only `verify` applies".into(),
                ))
            }
        }
    };
}

pub(crate) use with_lie;
