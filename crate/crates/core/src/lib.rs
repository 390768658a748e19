//! Enumeration and analysis of i-hedrites: 4-valent plane graphs whose faces
//! are 2-, 3- and 4-gons, with exactly `8 - i` faces of size 2.

pub mod canon;
pub mod catalog;
pub mod circuits;
pub mod dartcode;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod link;
pub mod report;
pub mod structure;
pub mod symmetry;
pub mod transform;

pub use error::{Error, Result};
pub use graph::PlaneGraph;
