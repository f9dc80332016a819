//! Rewriting-based noncommutative algebras over ℚ(q).

pub mod algebras;
mod confluence;
mod element;
mod graded;
mod localization;
mod presentation;
mod tensor;

pub use confluence::{check_local_confluence, Ambiguity, AmbiguityKind};
pub use element::{multiply, normal_form, AlgebraElement, ElementJson, TermJson};
pub(crate) use element::format_sum;
pub use graded::{
    dimension_of_graded_piece, graded_component, is_central, normal_words_of_degree,
    normal_words_of_length, normal_words_up_to_length, veronese, VeroneseLevel,
};
pub use localization::{
    localize_and_degree_zero, CentralLocalization, DegreeZeroDescription, DegreeZeroStratum,
    LocalizedElement,
};
pub use presentation::{
    step_budget, Presentation, PresentationBuilder, Rule, Word, DEFAULT_STEP_BUDGET,
};
pub use tensor::TensorElement;
