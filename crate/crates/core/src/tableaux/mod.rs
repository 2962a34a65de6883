//! Rhombic diagrams, rhombic staircase tableaux and their generating
//! polynomials.

mod ansatz;
mod diagram;
mod genpoly;
mod tableau;
mod word;

pub use ansatz::{verify_matrix_ansatz, verify_matrix_ansatz_tilde, verify_symmetry};
pub use diagram::{Point, RhombicDiagram, StripSlot, Tile, TileKind};
pub use genpoly::{gen_r, gen_rtilde, lambda, partition_z, partition_ztilde, rtilde_prefactor};
pub use tableau::{
    count_tableaux, enumerate_tableaux, for_each_tableau, validate, weight_counts, weight_monomial, Letter, Tableau,
    WeightExponents,
};
pub use word::Word;
