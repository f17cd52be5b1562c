//! Exact-arithmetic polynomial core: rational scalars, univariate and
//! bivariate polynomials, and determinants of polynomial-entry matrices.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to share across threads.

mod bipoly;
mod matrix;
mod poly;
mod rat;

pub use bipoly::{from_view_z, BiPoly, CBiPoly, Poly2};
pub use matrix::{int_det, pencil_char_poly, rat_det, DetEntry, PolyMatrix, RatMatrix};
pub use poly::{CUniPoly, Coeff, Poly, UniPoly, Var};
pub use rat::{
    crat, crat_i64, format_rat, imag_unit, parse_rat, rat, rat_from_f64, rat_i64, rat_to_f64,
    sign_of, CRat, Rat,
};
