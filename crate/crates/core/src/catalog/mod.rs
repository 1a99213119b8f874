//! The classified nilpotent Lie algebras of dimension at most 6, their
//! published matrix representations, the representation verifier and the
//! bound engine for μ and μ_nil.

mod algebras;
mod bounds;
mod corpus;
mod golden;
mod id;
pub mod io;
mod report;
mod representation;
mod template;

pub use algebras::{all_ids, build_algebra, default_eps_samples, family_isomorphic, ids_of_dim};
pub use bounds::{
    lower_bound_certificates, n4_mismatch, resolve_mu, upper_bound_certificates, BoundCertificate,
    Bounds, CertificateKind, Resolution, Side, Target,
};
pub use corpus::{
    available_variants, build_representation, build_representation_over_extension, corpus,
    corpus_keys, errata, extension_variants, has_patch, published_representation, CorpusRep,
    Erratum, Provenance, Variant,
};
pub use golden::{expected, Expected};
pub use id::{AlgebraId, FAMILIES};
pub use report::{check_corpus, table, verdict_passes, EntryCheck, TableRow};
pub use representation::{EngelFailure, HomViolation, Representation, Verdict, ViolationReport};
pub use template::Template;

use thiserror::Error;

use crate::exactnum::QuadExtError;
use crate::liealg::LieError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("unknown algebra {0}")]
    UnknownAlgebra(String),
    #[error("unknown representation variant {0:?}")]
    UnknownVariant(String),
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("{algebra} has no {variant} representation")]
    VariantAbsent { algebra: String, variant: Variant },
    #[error("{algebra}: entries involve sqrt({radicand}); request the representation over the quadratic extension")]
    NeedsExtension { algebra: String, radicand: String },
    #[error("template: {0}")]
    Template(String),
    #[error("shape: {0}")]
    Shape(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("malformed representation file: {0}")]
    Format(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Field(#[from] QuadExtError),
}
