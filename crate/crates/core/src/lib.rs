pub mod albert;
pub mod cli;
pub mod derivations;
pub mod error;
pub mod exactfield;
pub mod geometry;
pub mod hurwitz;
pub mod linalg;
pub mod okubo;

pub use error::{Error, Result};
