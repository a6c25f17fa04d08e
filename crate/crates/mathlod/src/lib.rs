//! Toolkit for representing ground mathematical statements as Linked-Open-Data
//! style RDF graphs built around reified relationships.
//!
//! The crate is organised as a library first; the `mathlod` binary is a thin
//! wrapper over [`cli`]. Each major capability has a runnable example:
//!
//! ```bash
//! cargo run --example translate_sentence   # FOL atom -> reified RDF graph
//! cargo run --example check_condition      # finite-model soundness check
//! cargo run --example parse_phrase         # controlled phrase -> instance graph
//! cargo run --example verbalize            # instance graph -> phrase
//! cargo run --example llod_roundtrip       # lexicon serialization round trip
//! cargo run --example match_terms          # terminology alignment report
//! cargo run --example validate_ontology    # ontology structure checks
//! cargo run --example enumerate_models     # exhaustive micro-scale model sets
//! ```
//!
//! Modules:
//!
//! - [`rdf`]: minimal RDF graph model, a deterministic Turtle subset
//!   (parser + canonical serializer), blank-node-aware graph isomorphism,
//!   and finite RDF interpretations with RDFS-level satisfaction checking.
//! - [`ontology`]: the concept hierarchy (kinds and roles), reified
//!   relationship classes with ordered argument properties, validation, and
//!   projection to / lifting from an RDF schema graph.
//! - [`fol`]: ground first-order atoms, theories, finite interpretations,
//!   satisfaction and exhaustive model enumeration.
//! - [`translate`]: the sentence-to-graph translation, the companion mapping
//!   of FOL interpretations to RDF interpretations, and the semantic
//!   condition checker that ties the two model sets together.
//! - [`lexicon`]: lexical entries, forms, syntactic frames and their ontology
//!   mappings; controlled phrase parsing, verbalization, and the LLOD Turtle
//!   lexicon format.
//! - [`replenish`]: token-bag cosine similarity over preprocessed terms with
//!   thresholded matching and category reporting.
//! - [`cli`]: the subcommand surface used by the `mathlod` binary.

pub mod cli;
pub mod fol;
pub mod lexicon;
pub mod ontology;
pub mod rdf;
pub mod replenish;
pub mod translate;
pub mod vocab;
