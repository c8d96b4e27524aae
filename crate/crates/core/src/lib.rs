pub mod context;
pub mod crystal;
pub mod decomp;
pub mod error;
pub mod lspath;
pub mod qbg;
pub mod qls;
pub mod report;
pub mod root_system;
pub mod sils;
pub mod weyl;

pub use context::Context;
pub use error::{Error, Result};
