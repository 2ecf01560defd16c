//! Exact linear algebra over neutrosophic fields N(K) = {a + bI : a, b ∈ K},
//! where the indeterminacy I satisfies I² = I.
//!
//! The crate keeps every computation exact (rationals or prime fields, no
//! floats) and leans on one structural fact throughout: the evaluations
//! ε₀(a+bI) = a and ε₁(a+bI) = a+b split N(K) into K × K, so most questions
//! reduce to a pair of classical ones whose answers recombine.

pub mod error;
pub mod field;
pub mod groupscan;
pub mod inner;
pub mod kmatrix;
pub mod kpoly;
pub mod matrix;
pub mod nspace;
pub mod poly;
pub mod scalar;
pub mod spectral;
pub mod text;

pub use error::{NError, Result};
pub use field::{Base, BaseElem, FieldDescriptor, Flavor};
pub use groupscan::{GElem, GroupOp, GroupScanReport, SubgroupLabel};
pub use inner::{BesselReport, InnerSpaceContext, SplitReport};
pub use kmatrix::KMatrix;
pub use kpoly::{Degree, KPoly};
pub use matrix::NMatrix;
pub use nspace::{
    ClassificationLabel, ComponentAmbient, ComponentDim, ComponentLabel, CompRankNullity,
    DirectSumReport, IndependenceReport, NBasis, NFoldField, NFoldKind, NFoldMap, NFoldSpace,
    NFoldVector, Part, Shape,
};
pub use poly::{EvalDegreeProfile, NPoly};
pub use scalar::{NNum, Slot};
pub use spectral::{
    AnnihilatorResult, DecompFlag, DecompKind, DecompositionReport, RecombinedForm,
    SlotDecomposition, SpectrumReport,
};
pub use text::{
    parse_field_tag, parse_map, parse_matrix, parse_poly, parse_scalar, parse_space,
    parse_vectors, print_map, print_matrix, print_matrix_json, print_poly, print_scalar,
    print_space, print_vectors,
};
