//! Sparse multivariate polynomials over an exact field and the elementary
//! operations built on them.

pub mod factor;
pub mod gcd;
pub mod matrix;
mod parse;
mod polynomial;
mod resultant;
mod ring;
pub mod univariate;

pub use factor::factor_rational;
pub use gcd::{poly_gcd, primitive, squarefree_multivariate};
pub use matrix::PolyMatrix;
pub use parse::parse_poly;
pub use polynomial::Poly;
pub use resultant::sylvester_resultant;
pub use ring::{Monomial, PolyRing, RingRef};
pub use univariate::{order_at_zero, squarefree_part, Order, UniPoly};
