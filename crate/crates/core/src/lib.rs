//! Finite bicategories, bicategories of fractions, and decision procedures for
//! the conditions under which a pseudofunctor induces an equivalence between
//! bicategories of fractions.

pub mod bicat;
pub mod conditions;
pub mod error;
pub mod fixtures;
pub mod fractions;
pub mod gtilde;
pub mod pasting;
pub mod presentation;
pub mod psfun;
pub mod validate;
pub mod wclass;

pub use bicat::{
    hcompose1, hcompose2, internal_equivalence_witness, two_cell_inverse, vcompose, BicatData, EquivalenceWitness, FinBicat,
    ObjId, OneCell, OneId, TwoCell, TwoId,
};
pub use error::{BicatError, StructureError};
pub use pasting::{eval_pasting, infer_boundary, Boundary, PastingError, PastingExpr};
pub use validate::{validate_bicat, Law, ValidationReport, Violation};
pub use psfun::{maps_into, maps_to_equivalences, validate_psfun, PsFun, PsFunError};
pub use wclass::{BfAxiom, BfReport, WClass};
