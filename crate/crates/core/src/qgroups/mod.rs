//! U_q(sl₂), its irreducible modules, Clebsch–Gordan data, and the
//! matrix-coefficient realization of O_q(SL₂) with its Hopf structure and
//! Peter–Weyl decomposition.

mod cg;
mod coefficients;
mod hopf;
mod irrep;
mod peter_weyl;
mod uq;

pub use cg::{cg_decompose, CGDecomposition, CGJson, CGSummand, CGSummandJson};
pub use coefficients::{
    classical_coefficient_table, coefficient_product, coefficient_table, coefficient_to_element,
    table_for, MatrixCoefficient,
};
pub use hopf::{antipode, antipode_sides, coassociativity_sides, coproduct, counit, counit_sides};
pub use irrep::{act, tensor_action, IrrepVn, QMatrix};
pub use peter_weyl::{pw_component, pw_components, pw_decompose, pw_degree, word_biweight, LevelDegree};
pub use uq::{uq_multiply, Pbw, UqElement};
