//! Groebner bases over the rationals and the ideal operations built on them.

mod engine;
mod hilbert;
mod ideal;
mod order;
mod radical;

pub use hilbert::{hilbert_function, HilbertData};
pub use ideal::{
    buchberger_basis, eliminate, ideal_combine, ideal_power, intersect, leading_monomial, normal_form, saturate,
    saturate_principal, CombineOp, Ideal,
};
pub use order::{OrderKind, TermOrder};
pub use radical::zero_dim_radical;
