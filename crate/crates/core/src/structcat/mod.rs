//! Two-dimensional finite structures: categories and functors, the funny
//! tensor, sesquifunctors, sesquicategories and premonoidal categories.

mod category;
mod format;
mod funny;
mod premonoidal;
mod sesqui;
mod sesquifunctor;

use thiserror::Error;

pub use category::{all_functors, functor_hom, is_natural, Arrow, FiniteCategory, Functor, FunctorCategory};
pub use format::{parse_category, parse_premonoidal, parse_sesqui, render_category, render_premonoidal, render_sesqui};
pub use funny::{funny_tensor, Comparison, ConfluenceReport, FunnyTensor, HomEnumeration, Letter, Word};
pub use premonoidal::{
    central_arrows, centrality_witness, freyd_cospan_commutes, freyd_cospan_witness, freyd_validate, is_central,
    premonoidal_centre, premonoidal_validate, Centre, PremonoidalData, PremonoidalReport, Side,
};
pub use sesqui::{
    interchange_failures, interchange_sides, is_2_category, sesqui_interchange, sesqui_validate, Cell, SesquiData,
    StructureReport, TwoCategoryReport,
};
pub use sesquifunctor::{bifunctor_check, factor_through_product, Sesquifunctor, SquareWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatError {
    #[error("malformed structure: {0}")]
    Malformed(String),
    #[error("`{0}` and `{1}` are not composable")]
    NotComposable(String, String),
    #[error("missing composite `{0}.{1}`")]
    MissingComposite(String, String),
    #[error("identity law fails at `{0}`")]
    IdentityLaw(String),
    #[error("composition is not associative at `{0}`, `{1}`, `{2}`")]
    Associativity(String, String, String),
    #[error("missing entry `{0}`")]
    Undefined(String),
    #[error("the two families disagree on the object at ({0}, {1})")]
    ObjectDisagreement(String, String),
    #[error("functor is not bijective on objects")]
    NotBijectiveOnObjects,
    #[error("input fails validation: {0}")]
    Invalid(String),
}

#[cfg(test)]
mod tests;
