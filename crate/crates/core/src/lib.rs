pub mod classifier;
pub mod error;
pub mod extension;
pub mod gl2z;
pub mod linalg;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{IntMatrix, IntVector};
