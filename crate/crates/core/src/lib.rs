pub mod affine_weyl;
pub mod elcharts;
pub mod error;
pub mod group;
pub mod orbits;
pub mod rational;
pub mod sweep;

pub use error::{Error, Result};
pub mod verify;
