//! Exact arithmetic: rational functions in the fixed parameter alphabet and
//! Laurent polynomials over them.

mod gcd;
mod laurent;
mod monomial;
mod param;
mod parse;
mod poly;
mod scalar;
mod subst;

pub use gcd::{gcd, gcd_many};
pub use laurent::{Exponent, LaurentPoly};
pub use monomial::Monomial;
pub use param::{Param, NPARAMS};
pub use parse::{parse_laurent, parse_scalar};
pub use poly::{Coeff, ParamPoly, Poly, ZPoly};
pub use scalar::{parse_rational, Scalar};
pub use subst::Substitution;

