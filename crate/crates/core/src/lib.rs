pub mod cli;
pub mod error;
pub mod families;
pub mod kernel;
pub mod ops;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
