pub mod arith;
pub mod error;
pub mod harness;
pub mod identity;
pub mod partition;
pub mod perm;
pub mod report;
pub mod symfunc;

pub use error::{Error, Result};
