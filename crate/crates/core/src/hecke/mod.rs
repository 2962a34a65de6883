//! The polynomial representation of the affine Hecke algebra of type C̃_N.

mod ops;
mod verify;

pub use ops::{Generator, HeckeContext, OperatorExpr};
pub use verify::{random_laurent, verify_cherednik_commute, verify_hecke_relations, verify_operator_lemmas};
