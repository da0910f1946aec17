pub mod bounds;
pub mod codes;
pub mod error;
pub mod protocol;
pub mod entropy;
pub mod quantum;
pub mod verify;

pub use error::{Error, Result};
