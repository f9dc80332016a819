//! The Rees algebra of the Peter–Weyl filtration, partial associated graded
//! algebras `gr_I`, orbit algebras and the map `Φ` into `O_q(SL₂) ⊗ O_q(SL₂)`.

mod gr;
mod orbit;
mod phi;
mod rees;

pub use gr::{gr_multiply, gr_symbol, gr_to_p1p1, p1p1_to_gr, FilteredAlgebra, GrElement};
pub use orbit::{orbit_algebra_multiply, OrbitElement};
pub use phi::{gr_coefficient_product, phi, phi_multiplicativity_check, vi_basis, vi_basis_matches_invariants};
pub use rees::{
    level_membership, matq_to_vinberg, rees_coproduct, rees_counit, rees_multiply,
    rees_to_vinberg_presentation, vinberg_presentation_to_rees, vinberg_to_matq, ReesElement, ReesTensor,
};
