pub mod bott;
pub mod cli;
pub mod error;
pub mod matrix;
pub mod partition;
pub mod poly;
pub mod resolution;
pub mod schubert;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
