//! ASEP polynomials, qKZ families, and symmetric Koornwinder polynomials.

mod eigen;
mod family;
mod orbit;
mod symmetric;

pub use eigen::{eigen_data, verify_eigen, EigenData};
pub use family::{
    asep_poly_f, asep_poly_f_at, asep_poly_f_latin, asep_poly_f_with, random_family, verify_qkz, verify_qkz_numeric,
    Field, ParamPoint, QkzFamily,
};
pub use orbit::{dominance_le, dominant, order_preceq, orbit_of, rank_one_partition, Orbit};
pub use symmetric::{
    conjugate, elementary_y, is_symmetric, koornwinder_k, koornwinder_k_via_ek, koornwinder_q1, q1_product,
    verify_invariants, verify_q1, verify_via_ek,
};
