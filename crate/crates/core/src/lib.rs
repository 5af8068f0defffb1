//! Jordan classes, decomposition classes and sheets of reductive matrix
//! groups, with log-like maps, in exact arithmetic.

pub mod acceptance;
pub mod error;
pub mod exactnum;
pub mod jclass;
pub mod loglike;
pub mod oracle;
pub mod partition;
pub mod rootcore;

pub use error::{Error, Result};
pub use partition::Partition;
