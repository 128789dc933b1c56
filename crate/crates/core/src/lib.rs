pub mod arith;
pub mod classify;
pub mod error;
pub mod geometry;
pub mod groebner;
pub mod local;
pub mod poly;
pub mod xk;

pub use error::{Error, Result};
