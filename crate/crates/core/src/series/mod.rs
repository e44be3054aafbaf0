//! Exact truncated Laurent series in `q` and the product building blocks
//! (Pochhammer symbols, Gaussian binomials, theta products).

mod compare;
mod error;
mod laurent;
mod monomial;
mod pochhammer;
mod poly;
mod theta;

pub use compare::{big_to_json, series_equal, EqualityReport, Status};
pub use error::SeriesError;
pub use laurent::{to_order, LaurentSeries};
pub use monomial::{Monomial, Sign};
pub use pochhammer::{
    pochhammer_fin, pochhammer_inf, pochhammer_inf_nonzero, pochhammer_inf_product, pochhammer_poly, qbinomial,
};
pub use poly::SparsePoly;
pub use theta::{jtp_product, jtp_sum, qpi_lhs, qpi_rhs};
