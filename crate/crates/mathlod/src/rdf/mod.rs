//! Minimal RDF graph model with a deterministic Turtle subset, blank-node
//! aware graph isomorphism, and finite interpretations with RDFS-level
//! satisfaction checking.
//!
//! All values are immutable after construction and safe to share across
//! threads. Serialization is canonical: prefixes in declaration order,
//! triples grouped by subject in first-insertion order, so equal graphs
//! always print to equal bytes.

mod iso;
mod model;
mod semantics;
mod turtle;

pub use iso::isomorphic;
pub use model::{BlankNode, Iri, Literal, RdfGraph, Subject, Term, Triple};
pub use semantics::{
    enumerate_models, satisfies, ModelEnumeration, RdfInterpretation, ResourceId,
    RDF_DOMAIN_CAP, RDF_ENUM_BITS_CAP, RDF_IRI_CAP,
};
pub use turtle::{parse_turtle, serialize_turtle};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RdfError {
    #[error("malformed IRI `{iri}`: {reason}")]
    MalformedIri { iri: String, reason: String },
    #[error("invalid blank node label `{0}`: expected [A-Za-z0-9_]+")]
    InvalidBlankLabel(String),
    #[error("a literal cannot carry both a language tag and a datatype")]
    LiteralTagAndDatatype,
    #[error("invalid prefix name `{0}`")]
    InvalidPrefixName(String),
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("undefined prefix `{prefix}:` at {line}:{column}")]
    UndefinedPrefix {
        prefix: String,
        line: usize,
        column: usize,
    },
    #[error("IRI `{0}` has no matching prefix and contains an angle bracket")]
    UnserializableIri(String),
    #[error("IRI `{0}` has no denotation in the interpretation")]
    NoDenotation(String),
    #[error("literal objects are not supported in satisfaction checking")]
    LiteralInInstanceGraph,
    #[error("model enumeration over cap: {0}")]
    EnumerationTooLarge(String),
}
