//! Exact scalars: arbitrary-precision rationals and elements of a single
//! quadratic extension `Q(sqrt(d))`.

mod field;
mod quadext;
mod rational;

pub use field::Field;
pub use quadext::QuadExt;
pub use rational::{int, parse_rational, rat, rational_op, sqrt_rational, squarefree_normalize, ArithOp, Rational};
