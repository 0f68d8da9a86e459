pub mod catalog;
pub mod cli;
pub mod complexes;
pub mod error;
pub mod hilbert;
pub mod jacobian;
pub mod linalg;
pub mod poisson;
pub mod polyring;
pub mod textio;

pub use error::{Error, Result};
