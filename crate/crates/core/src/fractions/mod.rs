//! The bicategory of fractions `C[W⁻¹]`: spans, 2-cell representatives and
//! their equivalence, composition through BF3 squares, and materialization as
//! a finite bicategory.

mod materialize;
mod rep;
mod span;
mod universal;

use thiserror::Error;

use crate::error::BicatError;
use crate::validate::ValidationReport;

pub use materialize::{materialize_fractions, Localization, TwoCellClass};
pub use rep::{
    enumerate_reps, fast_path_equivalent, find_refinement, identity_rep, is_refinement, reps_equivalent,
    validate_rep, vcompose_reps, whisker_left_rep, whisker_right_rep, Refinement, TwoCellRep,
};
pub use span::{all_spans, compose_spans, enumerate_spans, span_is_equivalence, Span, SpanComposite};
pub use universal::universal_pseudofunctor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("{component}: {detail}")]
    Boundary { component: &'static str, detail: String },
    #[error("alpha component `{0}` is not invertible")]
    AlphaNotInvertible(String),
    #[error("leg composite `{0}` is not in W")]
    NotInW(String),
    #[error(transparent)]
    Lookup(#[from] BicatError),
}

#[derive(Debug, Clone, Error)]
pub enum FractionError {
    #[error("W does not satisfy the fraction axioms: {axiom} fails at ({cells})")]
    Precondition { axiom: String, cells: String },
    #[error("spans {outer} and {inner} are not composable")]
    NotComposable { outer: String, inner: String },
    #[error("no BF3 filler for w = {w}, f = {f}")]
    NoFiller { w: String, f: String },
    #[error("{operation} found no representative for {at}")]
    SearchFailed { operation: &'static str, at: String },
    #[error("no invertible connecting class for {component} at {at}")]
    NoConnectingClass { component: &'static str, at: String },
    #[error("materialized bicategory violates {} law(s); first: {}", .0.violations.len(),
        .0.violations.first().map(|v| v.to_string()).unwrap_or_default())]
    Incoherent(Box<ValidationReport>),
    #[error(transparent)]
    Lookup(#[from] BicatError),
    #[error(transparent)]
    Structure(#[from] crate::error::StructureError),
}
