//! Self-distributive structures: finite shelves, spindles and quandles,
//! smooth Lie quandle realizations, and a numerical engine that checks
//! their axioms against closed forms.

pub mod error;
pub mod finite;
pub mod lie;
pub mod matrix;
pub mod verify;

pub use error::{Error, Result};
