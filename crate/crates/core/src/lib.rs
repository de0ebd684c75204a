pub mod catalog;
pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod ncopies;
pub mod partition;
pub mod qfactory;
pub mod series;
pub mod sip;

pub use error::{Error, Result};
