//! Exact arithmetic foundation: coefficient rings, Laurent polynomials,
//! rational functions and truncated q-series.

mod cyclotomic;
mod grade;
pub mod json;
mod laurent;
pub mod numeric;
mod poly;
mod qseries;
mod ratfunc;
mod series;
mod traits;

pub use cyclotomic::{divisors, CyclotomicTable};
pub use grade::{HalfInt, ParseHalfIntError};
pub use laurent::LaurentPoly;
pub use numeric::{complex_eval, complex_eval_laurent, Evaluation};
pub use poly::Poly;
pub use qseries::QSeries;
pub use ratfunc::RationalFunc;
pub use series::PowerSeries;
pub use traits::{factorial, parse_rational, pow, rat, ratio, render_rational, Field, QAlgebra, Ring};
