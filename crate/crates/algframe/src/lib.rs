//! Corpus generation, file formats, reports and diagrams on top of
//! [`algframe_core`].

pub mod corpus;
pub mod dot;
mod error;
pub mod fixtures;
pub mod formats;
pub mod report;

pub use error::{Error, Result};
