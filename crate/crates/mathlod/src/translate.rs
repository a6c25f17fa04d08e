//! Translation of ground atoms into reified-relationship RDF graphs, the
//! companion mapping of finite FOL interpretations to RDF interpretations,
//! and the semantic condition checker.
//!
//! The condition holds for a theory `T` and sentence `s` when the image of
//! every model of `T` plus `s` satisfies the translated graph together with
//! the ontology schema. The checker walks the exhaustively enumerated FOL
//! model set, verifies each image, and additionally probes whether the
//! inclusion is strict by exhibiting an RDF model with no mapped preimage.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use serde::Deserialize;
use thiserror::Error;

use crate::fol::{self, AtomicSentence, FolInterpretation, Theory};
use crate::ontology::{
    ArgumentRole, ConceptId, OntologyError, OntologyGraph, ReifiedRelationshipClass,
};
use crate::rdf::{self, BlankNode, Iri, RdfGraph, RdfInterpretation, Subject, Term, Triple};
use crate::vocab;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TranslationMode {
    /// The template shape: every participant hangs off the generic
    /// argument property.
    Generic,
    /// Participants are attached through the relationship's declared
    /// argument properties, position by position.
    RoleProperties,
}

impl FromStr for TranslationMode {
    type Err = TranslateError;

    fn from_str(s: &str) -> Result<Self, TranslateError> {
        match s {
            "generic" => Ok(TranslationMode::Generic),
            "role-properties" => Ok(TranslationMode::RoleProperties),
            other => Err(TranslateError::MappingFile(format!(
                "unknown mode `{other}` (expected `generic` or `role-properties`)"
            ))),
        }
    }
}

#[derive(Debug, Error)]
pub enum TranslateError {
    #[error("no relationship mapping for predicate `{0}`")]
    MissingPredicateMapping(String),
    #[error("no IRI mapping for constant `{0}`")]
    MissingConstantMapping(String),
    #[error("`{0}` is not a relationship class of the ontology")]
    UnknownRelationshipClass(String),
    #[error("relationship `{relationship}` declares {declared} argument(s) but the sentence has {actual}")]
    ArgumentCountMismatch {
        relationship: String,
        declared: usize,
        actual: usize,
    },
    #[error("argument order for `{relationship}` is invalid: {reason}")]
    BadArgumentOrder {
        relationship: String,
        reason: String,
    },
    #[error("constants `{first}` and `{second}` share IRI `{iri}` but denote different elements")]
    ConflictingDenotation {
        first: String,
        second: String,
        iri: String,
    },
    #[error("constant IRI `{0}` collides with a vocabulary IRI")]
    VocabularyCollision(String),
    #[error("mapping file: {0}")]
    MappingFile(String),
    #[error(transparent)]
    Ontology(#[from] OntologyError),
    #[error(transparent)]
    Rdf(#[from] rdf::RdfError),
    #[error(transparent)]
    Fol(#[from] fol::FolError),
}

/// Symbol tables from FOL names to ontology IRIs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolMapping {
    /// predicate name -> reified relationship class
    pub pmap: BTreeMap<String, ConceptId>,
    /// constant name -> individual IRI
    pub cmap: BTreeMap<String, Iri>,
    pub data_namespace: Iri,
    /// optional per-relationship override of the argument property order
    pub argument_order: BTreeMap<Iri, Vec<Iri>>,
}

impl SymbolMapping {
    pub fn new(data_namespace: Iri) -> Self {
        SymbolMapping {
            pmap: BTreeMap::new(),
            cmap: BTreeMap::new(),
            data_namespace,
            argument_order: BTreeMap::new(),
        }
    }

    fn relationship_id(&self, predicate: &str) -> Result<&ConceptId, TranslateError> {
        self.pmap
            .get(predicate)
            .ok_or_else(|| TranslateError::MissingPredicateMapping(predicate.to_string()))
    }

    fn constant_iri(&self, constant: &str) -> Result<&Iri, TranslateError> {
        self.cmap
            .get(constant)
            .ok_or_else(|| TranslateError::MissingConstantMapping(constant.to_string()))
    }
}

#[derive(Deserialize)]
struct MappingFile {
    pmap: BTreeMap<String, String>,
    cmap: BTreeMap<String, String>,
    data_namespace: String,
    #[serde(default)]
    argument_order: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    mode: Option<String>,
}

/// Loads a mapping document (JSON with `pmap`, `cmap`, `data_namespace`,
/// optional `argument_order` and `mode` fields).
pub fn load_mapping(
    text: &str,
) -> Result<(SymbolMapping, Option<TranslationMode>), TranslateError> {
    let raw: MappingFile =
        serde_json::from_str(text).map_err(|e| TranslateError::MappingFile(e.to_string()))?;
    let mut mapping = SymbolMapping::new(Iri::new(raw.data_namespace)?);
    for (name, iri) in raw.pmap {
        mapping.pmap.insert(name, ConceptId::new(Iri::new(iri)?));
    }
    for (name, iri) in raw.cmap {
        mapping.cmap.insert(name, Iri::new(iri)?);
    }
    for (rel, props) in raw.argument_order {
        let rel = Iri::new(rel)?;
        let props = props
            .into_iter()
            .map(Iri::new)
            .collect::<Result<Vec<_>, _>>()?;
        mapping.argument_order.insert(rel, props);
    }
    let mode = raw
        .mode
        .as_deref()
        .map(TranslationMode::from_str)
        .transpose()?;
    Ok((mapping, mode))
}

#[derive(Debug, Clone)]
pub struct TranslationResult {
    pub graph: RdfGraph,
    pub relationship_node: BlankNode,
}

fn viri(s: &str) -> Iri {
    Iri::new(s).expect("valid vocabulary IRI")
}

/// The effective, position-ordered argument list of a relationship class,
/// honoring a mapping-level `argument_order` override.
fn effective_arguments<'a>(
    rel: &'a ReifiedRelationshipClass,
    mapping: &SymbolMapping,
) -> Result<Vec<&'a ArgumentRole>, TranslateError> {
    match mapping.argument_order.get(rel.id.iri()) {
        None => Ok(rel.arguments.iter().collect()),
        Some(order) => {
            if order.len() != rel.arguments.len() {
                return Err(TranslateError::BadArgumentOrder {
                    relationship: rel.id.to_string(),
                    reason: format!(
                        "override lists {} properties, the class declares {}",
                        order.len(),
                        rel.arguments.len()
                    ),
                });
            }
            let mut out: Vec<&ArgumentRole> = Vec::new();
            for p in order {
                let arg = rel.argument_by_property(p).ok_or_else(|| {
                    TranslateError::BadArgumentOrder {
                        relationship: rel.id.to_string(),
                        reason: format!("`{p}` is not a declared argument property"),
                    }
                })?;
                if out.iter().any(|a| a.property == arg.property) {
                    return Err(TranslateError::BadArgumentOrder {
                        relationship: rel.id.to_string(),
                        reason: format!("`{p}` listed twice"),
                    });
                }
                out.push(arg);
            }
            Ok(out)
        }
    }
}

fn translation_prefixes(graph: &mut RdfGraph, data_namespace: &Iri) -> Result<(), TranslateError> {
    graph.add_prefix("rdf", viri(vocab::RDF_NS))?;
    graph.add_prefix("rdfs", viri(vocab::RDFS_NS))?;
    graph.add_prefix("owl", viri(vocab::OWL_NS))?;
    graph.add_prefix("omp", viri(vocab::OMP_NS))?;
    graph.add_prefix("", data_namespace.clone())?;
    Ok(())
}

/// Translates `R(c1, ..., cn)` into its reified instance graph: a fresh
/// relationship blank node typed by the mapped class, plus one argument
/// triple per constant, in order.
pub fn translate(
    sentence: &AtomicSentence,
    mapping: &SymbolMapping,
    onto: &OntologyGraph,
    mode: TranslationMode,
) -> Result<TranslationResult, TranslateError> {
    let mut graph = RdfGraph::new();
    translation_prefixes(&mut graph, &mapping.data_namespace)?;
    let node = BlankNode::new("rel").expect("valid label");
    translate_into(&mut graph, &node, sentence, mapping, onto, mode)?;
    Ok(TranslationResult {
        graph,
        relationship_node: node,
    })
}

/// Translates every axiom of a theory into one graph; relationship nodes
/// are labelled `rel1`, `rel2`, ... in axiom order.
pub fn translate_theory(
    theory: &Theory,
    mapping: &SymbolMapping,
    onto: &OntologyGraph,
    mode: TranslationMode,
) -> Result<RdfGraph, TranslateError> {
    let mut graph = RdfGraph::new();
    translation_prefixes(&mut graph, &mapping.data_namespace)?;
    for (index, axiom) in theory.axioms().enumerate() {
        let node = BlankNode::new(format!("rel{}", index + 1)).expect("valid label");
        translate_into(&mut graph, &node, axiom, mapping, onto, mode)?;
    }
    Ok(graph)
}

fn translate_into(
    graph: &mut RdfGraph,
    node: &BlankNode,
    sentence: &AtomicSentence,
    mapping: &SymbolMapping,
    onto: &OntologyGraph,
    mode: TranslationMode,
) -> Result<(), TranslateError> {
    let rel_id = mapping.relationship_id(sentence.predicate())?;
    let rel = onto
        .lookup_relationship(rel_id)
        .ok_or_else(|| TranslateError::UnknownRelationshipClass(rel_id.to_string()))?;

    let properties: Vec<Iri> = match mode {
        TranslationMode::Generic => {
            vec![viri(vocab::OMP_HAS_ARGUMENT); sentence.args().len()]
        }
        TranslationMode::RoleProperties => {
            let args = effective_arguments(rel, mapping)?;
            if args.len() != sentence.args().len() {
                return Err(TranslateError::ArgumentCountMismatch {
                    relationship: rel_id.to_string(),
                    declared: args.len(),
                    actual: sentence.args().len(),
                });
            }
            args.iter().map(|a| a.property.clone()).collect()
        }
    };

    graph.insert(Triple::new(
        node.clone(),
        viri(vocab::RDF_TYPE),
        rel_id.iri().clone(),
    ));
    for (constant, property) in sentence.args().iter().zip(properties) {
        let object = mapping.constant_iri(constant)?.clone();
        graph.insert(Triple::new(node.clone(), property, object));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Interpretation mapping
// ---------------------------------------------------------------------------

/// Maps a FOL interpretation to an RDF interpretation over the ontology's
/// projected schema graph. See [`map_interpretation_with_schema`].
pub fn map_interpretation(
    interp: &FolInterpretation,
    mapping: &SymbolMapping,
    onto: &OntologyGraph,
    mode: TranslationMode,
) -> Result<RdfInterpretation, TranslateError> {
    let schema = onto.to_schema_graph()?;
    map_interpretation_with_schema(interp, mapping, onto, &schema, mode)
}

/// Maps a FOL interpretation to an RDF interpretation.
///
/// Resources are the domain elements, one fresh relationship resource per
/// predicate tuple, and one resource per vocabulary IRI; constant IRIs
/// denote the images of their constants. Each relationship resource is a
/// member of its mapped class (closed upward along the schema's
/// `rdfs:subClassOf`); each participant lands in the extension of the
/// positional argument property (closed upward along `rdfs:subPropertyOf`)
/// and in the class extension of the argument's role concept, closed upward
/// as well. In generic mode a relationship class whose declared argument
/// count does not match the tuple arity falls back to populating the
/// generic argument property directly; in role-properties mode that is an
/// error.
pub fn map_interpretation_with_schema(
    interp: &FolInterpretation,
    mapping: &SymbolMapping,
    onto: &OntologyGraph,
    schema: &RdfGraph,
    mode: TranslationMode,
) -> Result<RdfInterpretation, TranslateError> {
    let domain_size = interp.domain_size();

    // relationship resources, in deterministic (predicate, tuple) order
    let mut instances: Vec<(Vec<usize>, &ReifiedRelationshipClass)> = Vec::new();
    for (predicate, tuples) in interp.predicates() {
        let rel_id = mapping.relationship_id(predicate)?;
        let rel = onto
            .lookup_relationship(rel_id)
            .ok_or_else(|| TranslateError::UnknownRelationshipClass(rel_id.to_string()))?;
        for tuple in tuples {
            instances.push((tuple.clone(), rel));
        }
    }

    // vocabulary: every schema IRI plus the wiring a translation can use
    let mut vocabulary: BTreeSet<Iri> = schema.iris().into_iter().cloned().collect();
    vocabulary.insert(viri(vocab::RDF_TYPE));
    vocabulary.insert(viri(vocab::OMP_HAS_ARGUMENT));
    for rel_id in mapping.pmap.values() {
        vocabulary.insert(rel_id.iri().clone());
        if let Some(rel) = onto.lookup_relationship(rel_id) {
            for arg in &rel.arguments {
                vocabulary.insert(arg.property.clone());
                vocabulary.insert(arg.role_concept.iri().clone());
            }
        }
    }

    let rel_base = domain_size;
    let vocab_base = rel_base + instances.len();
    let total = vocab_base + vocabulary.len();
    let mut out = RdfInterpretation::new(0..total);
    for (offset, iri) in vocabulary.iter().enumerate() {
        out.denote_as(iri.clone(), vocab_base + offset);
    }
    // constant IRIs denote the images of their constants
    let mut constant_for: BTreeMap<&Iri, &str> = BTreeMap::new();
    for (constant, element) in interp.constants() {
        let iri = mapping.constant_iri(constant)?;
        if vocabulary.contains(iri) {
            return Err(TranslateError::VocabularyCollision(iri.to_string()));
        }
        if let Some(previous) = constant_for.get(iri) {
            if interp.constant(previous) != Some(element) {
                return Err(TranslateError::ConflictingDenotation {
                    first: previous.to_string(),
                    second: constant.to_string(),
                    iri: iri.to_string(),
                });
            }
        }
        constant_for.insert(iri, constant);
        out.denote_as(iri.clone(), element);
    }

    let superclasses = closure_map(schema, vocab::RDFS_SUBCLASS_OF);
    let superproperties = closure_map(schema, vocab::RDFS_SUBPROPERTY_OF);
    let has_argument = viri(vocab::OMP_HAS_ARGUMENT);

    for (index, (tuple, rel)) in instances.iter().enumerate() {
        let rel_resource = rel_base + index;
        for class in ancestors_of(&superclasses, rel.id.iri()) {
            if let Some(r) = out.denotation(&class) {
                out.add_class_member(r, rel_resource);
            }
        }
        let args = effective_arguments(rel, mapping)?;
        if args.len() == tuple.len() {
            for (arg, element) in args.iter().zip(tuple.iter()) {
                for property in ancestors_of(&superproperties, &arg.property) {
                    if let Some(p) = out.denotation(&property) {
                        out.add_property_pair(p, rel_resource, *element);
                    }
                }
                // participants instantiate the argument's role concept
                for class in ancestors_of(&superclasses, arg.role_concept.iri()) {
                    if let Some(c) = out.denotation(&class) {
                        out.add_class_member(c, *element);
                    }
                }
            }
        } else if mode == TranslationMode::Generic {
            for element in tuple {
                for property in ancestors_of(&superproperties, &has_argument) {
                    if let Some(p) = out.denotation(&property) {
                        out.add_property_pair(p, rel_resource, *element);
                    }
                }
            }
        } else {
            return Err(TranslateError::ArgumentCountMismatch {
                relationship: rel.id.to_string(),
                declared: args.len(),
                actual: tuple.len(),
            });
        }
    }

    Ok(out)
}

fn closure_map(schema: &RdfGraph, predicate: &str) -> BTreeMap<Iri, BTreeSet<Iri>> {
    let mut edges: BTreeMap<Iri, BTreeSet<Iri>> = BTreeMap::new();
    for t in schema.triples() {
        if t.predicate.as_str() != predicate {
            continue;
        }
        if let (Subject::Iri(s), Term::Iri(o)) = (&t.subject, &t.object) {
            edges.entry(s.clone()).or_default().insert(o.clone());
        }
    }
    edges
}

/// The node itself plus everything reachable through the edge map.
fn ancestors_of(edges: &BTreeMap<Iri, BTreeSet<Iri>>, start: &Iri) -> BTreeSet<Iri> {
    let mut out: BTreeSet<Iri> = BTreeSet::new();
    let mut stack = vec![start.clone()];
    while let Some(current) = stack.pop() {
        if !out.insert(current.clone()) {
            continue;
        }
        if let Some(next) = edges.get(&current) {
            stack.extend(next.iter().cloned());
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Semantic condition
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct ConditionReport {
    pub passed: bool,
    /// FOL models inspected, including a failing one.
    pub models_checked: usize,
    /// Whether some RDF model provably has no mapped FOL preimage among the
    /// enumerated candidates; `None` when the condition failed.
    pub strict: Option<bool>,
    pub counterexample: Option<FolInterpretation>,
}

/// Checks the translation condition against the ontology's projected schema.
pub fn check_semantic_condition(
    theory: &Theory,
    sentence: &AtomicSentence,
    mapping: &SymbolMapping,
    onto: &OntologyGraph,
    domain_size: usize,
    mode: TranslationMode,
) -> Result<ConditionReport, TranslateError> {
    let schema = onto.to_schema_graph()?;
    check_semantic_condition_with_schema(
        theory,
        sentence,
        mapping,
        onto,
        &schema,
        domain_size,
        mode,
    )
}

/// Checks the translation condition against an explicitly supplied schema
/// graph (the ontology value still provides the relationship declarations).
///
/// Every enumerated model of `theory` plus `sentence` is mapped and tested
/// against the translated graph under `schema`; the first failing model is
/// reported as a counterexample. On success the report also says whether
/// the inclusion is strict at this scale.
pub fn check_semantic_condition_with_schema(
    theory: &Theory,
    sentence: &AtomicSentence,
    mapping: &SymbolMapping,
    onto: &OntologyGraph,
    schema: &RdfGraph,
    domain_size: usize,
    mode: TranslationMode,
) -> Result<ConditionReport, TranslateError> {
    let translation = translate(sentence, mapping, onto, mode)?;
    let mut images: Vec<RdfInterpretation> = Vec::new();
    for interp in fol::enumerate_models(theory, sentence, domain_size)? {
        let image = map_interpretation_with_schema(&interp, mapping, onto, schema, mode)?;
        if !rdf::satisfies(&image, &translation.graph, schema)? {
            return Ok(ConditionReport {
                passed: false,
                models_checked: images.len() + 1,
                strict: None,
                counterexample: Some(interp),
            });
        }
        images.push(image);
    }

    let strict = strictness_probe(&images, sentence, mapping, &translation.graph, schema)?;
    Ok(ConditionReport {
        passed: true,
        models_checked: images.len(),
        strict: Some(strict),
        counterexample: None,
    })
}

/// Tries to exhibit an RDF model that is not the image of any enumerated
/// FOL model. Two candidates are probed: an image extended by a generic
/// argument pair between two element resources (no image contains such a
/// pair, since image pairs always start at a relationship resource), and
/// the everything-full interpretation over the same universe.
fn strictness_probe(
    images: &[RdfInterpretation],
    sentence: &AtomicSentence,
    mapping: &SymbolMapping,
    graph: &RdfGraph,
    schema: &RdfGraph,
) -> Result<bool, TranslateError> {
    let Some(seed) = images.first() else {
        return Ok(false);
    };

    let has_argument = viri(vocab::OMP_HAS_ARGUMENT);
    if let (Some(property), Some(first_constant)) =
        (seed.denotation(&has_argument), sentence.args().first())
    {
        let element = mapping
            .constant_iri(first_constant)
            .ok()
            .and_then(|iri| seed.denotation(iri));
        if let Some(element) = element {
            let mut probe = seed.clone();
            probe.add_property_pair(property, element, element);
            if rdf::satisfies(&probe, graph, schema)? && !images.contains(&probe) {
                return Ok(true);
            }
        }
    }

    let mut full = RdfInterpretation::new(seed.resources());
    for (iri, resource) in seed.denotations() {
        full.denote_as(iri.clone(), resource);
    }
    let all: Vec<_> = seed.resources().collect();
    for &r in &all {
        for &x in &all {
            full.add_class_member(r, x);
            for &y in &all {
                full.add_property_pair(r, x, y);
            }
        }
    }
    Ok(rdf::satisfies(&full, graph, schema)? && !images.contains(&full))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fol::Signature;
    use crate::ontology::{Concept, MetaType};
    use crate::rdf::serialize_turtle;

    fn omp(local: &str) -> Iri {
        Iri::new(format!("{}{}", vocab::OMP_NS, local)).unwrap()
    }

    fn lex(local: &str) -> Iri {
        Iri::new(format!("{}{}", vocab::LEXICON_NS, local)).unwrap()
    }

    fn divisibility_ontology() -> OntologyGraph {
        OntologyGraph::builder()
            .concept(
                Concept::new(ConceptId::new(omp("Natural_number")), MetaType::Kind)
                    .with_label("en", "natural number"),
            )
            .concept(
                Concept::new(ConceptId::new(omp("Divisor")), MetaType::Role)
                    .with_parent(ConceptId::new(omp("Natural_number")))
                    .with_label("en", "divisor"),
            )
            .concept(
                Concept::new(ConceptId::new(omp("Dividend")), MetaType::Role)
                    .with_parent(ConceptId::new(omp("Natural_number")))
                    .with_label("en", "dividend"),
            )
            .relationship(ReifiedRelationshipClass::new(
                ConceptId::new(omp("Divisibility_relationship")),
                vec![
                    ArgumentRole {
                        property: omp("divisor"),
                        role_concept: ConceptId::new(omp("Divisor")),
                        position: 1,
                        label: "divisor".into(),
                    },
                    ArgumentRole {
                        property: omp("dividend"),
                        role_concept: ConceptId::new(omp("Dividend")),
                        position: 2,
                        label: "dividend".into(),
                    },
                ],
            ))
            .build()
    }

    fn divisibility_mapping() -> SymbolMapping {
        let mut mapping = SymbolMapping::new(Iri::new(vocab::LEXICON_NS).unwrap());
        mapping.pmap.insert(
            "Divides".into(),
            ConceptId::new(omp("Divisibility_relationship")),
        );
        mapping.cmap.insert("m".into(), lex("m"));
        mapping.cmap.insert("n".into(), lex("n"));
        mapping
    }

    fn divides_signature() -> Signature {
        let mut sig = Signature::new();
        sig.add_predicate("Divides", 2).unwrap();
        sig.add_constant("m").unwrap();
        sig.add_constant("n").unwrap();
        sig
    }

    fn divides_sentence() -> AtomicSentence {
        fol::parse_sentence("Divides(m, n)", &divides_signature()).unwrap()
    }

    #[test]
    fn generic_translation_matches_the_template() {
        let result = translate(
            &divides_sentence(),
            &divisibility_mapping(),
            &divisibility_ontology(),
            TranslationMode::Generic,
        )
        .unwrap();
        let g = &result.graph;
        assert_eq!(g.len(), 3);
        let node = Subject::Blank(result.relationship_node.clone());
        assert!(g.contains(&Triple::new(
            node.clone(),
            viri(vocab::RDF_TYPE),
            omp("Divisibility_relationship"),
        )));
        assert!(g.contains(&Triple::new(
            node.clone(),
            viri(vocab::OMP_HAS_ARGUMENT),
            lex("m"),
        )));
        assert!(g.contains(&Triple::new(node, viri(vocab::OMP_HAS_ARGUMENT), lex("n"))));
    }

    #[test]
    fn role_translation_uses_positional_properties() {
        let result = translate(
            &divides_sentence(),
            &divisibility_mapping(),
            &divisibility_ontology(),
            TranslationMode::RoleProperties,
        )
        .unwrap();
        let node = Subject::Blank(result.relationship_node.clone());
        assert!(result
            .graph
            .contains(&Triple::new(node.clone(), omp("divisor"), lex("m"))));
        assert!(result
            .graph
            .contains(&Triple::new(node, omp("dividend"), lex("n"))));
    }

    #[test]
    fn unary_sentence_yields_two_triples() {
        let mut sig = Signature::new();
        sig.add_predicate("P", 1).unwrap();
        sig.add_constant("a").unwrap();
        let s = fol::parse_sentence("P(a)", &sig).unwrap();
        let onto = OntologyGraph::builder()
            .concept(
                Concept::new(ConceptId::new(omp("Natural_number")), MetaType::Kind)
                    .with_label("en", "natural number"),
            )
            .concept(
                Concept::new(ConceptId::new(omp("Operand")), MetaType::Role)
                    .with_parent(ConceptId::new(omp("Natural_number"))),
            )
            .relationship(ReifiedRelationshipClass::new(
                ConceptId::new(omp("Evenness_relationship")),
                vec![ArgumentRole {
                    property: omp("operand"),
                    role_concept: ConceptId::new(omp("Operand")),
                    position: 1,
                    label: "operand".into(),
                }],
            ))
            .build();
        let mut mapping = SymbolMapping::new(Iri::new(vocab::LEXICON_NS).unwrap());
        mapping
            .pmap
            .insert("P".into(), ConceptId::new(omp("Evenness_relationship")));
        mapping.cmap.insert("a".into(), lex("a"));
        let result = translate(&s, &mapping, &onto, TranslationMode::Generic).unwrap();
        assert_eq!(result.graph.len(), 2);
    }

    #[test]
    fn missing_mapping_entries_error() {
        let onto = divisibility_ontology();
        let mut mapping = divisibility_mapping();
        mapping.cmap.remove("n");
        let err = translate(&divides_sentence(), &mapping, &onto, TranslationMode::Generic)
            .unwrap_err();
        assert!(matches!(err, TranslateError::MissingConstantMapping(_)));

        let mut mapping = divisibility_mapping();
        mapping.pmap.clear();
        let err = translate(&divides_sentence(), &mapping, &onto, TranslationMode::Generic)
            .unwrap_err();
        assert!(matches!(err, TranslateError::MissingPredicateMapping(_)));
    }

    #[test]
    fn serialized_translation_has_the_four_prefix_lines() {
        let result = translate(
            &divides_sentence(),
            &divisibility_mapping(),
            &divisibility_ontology(),
            TranslationMode::Generic,
        )
        .unwrap();
        let text = serialize_turtle(&result.graph).unwrap();
        assert!(text.starts_with(
            "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n\
             @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n\
             @prefix owl: <http://www.w3.org/2002/07/owl#> .\n\
             @prefix omp: <http://ontomathpro.org/omp2#> .\n"
        ));
    }

    #[test]
    fn empty_extension_maps_to_empty_class_extension() {
        let onto = divisibility_ontology();
        let mapping = divisibility_mapping();
        let mut interp = FolInterpretation::new(2);
        interp.assign_constant("m", 0);
        interp.assign_constant("n", 1);
        interp.add_tuple("Divides", vec![0, 1]);
        interp.remove_tuple("Divides", &[0, 1]);
        let image =
            map_interpretation(&interp, &mapping, &onto, TranslationMode::RoleProperties).unwrap();
        let class = image.denotation(&omp("Divisibility_relationship")).unwrap();
        assert!(image.class_members(class).is_empty());
    }

    #[test]
    fn subproperty_closure_fills_the_generic_property() {
        let onto = divisibility_ontology();
        let mapping = divisibility_mapping();
        let mut interp = FolInterpretation::new(2);
        interp.assign_constant("m", 0);
        interp.assign_constant("n", 1);
        interp.add_tuple("Divides", vec![0, 1]);
        let image =
            map_interpretation(&interp, &mapping, &onto, TranslationMode::RoleProperties).unwrap();
        let has_argument = image.denotation(&viri(vocab::OMP_HAS_ARGUMENT)).unwrap();
        let rel_resource = 2; // after the two domain elements
        assert!(image.property_pairs(has_argument).contains(&(rel_resource, 0)));
        assert!(image.property_pairs(has_argument).contains(&(rel_resource, 1)));
        // participants are members of their role concepts and the kind above
        let divisor = image.denotation(&omp("Divisor")).unwrap();
        let natural = image.denotation(&omp("Natural_number")).unwrap();
        assert!(image.class_members(divisor).contains(&0));
        assert!(image.class_members(natural).contains(&0));
        assert!(image.class_members(natural).contains(&1));
    }

    #[test]
    fn relationship_resource_count_matches_the_tuples() {
        let onto = divisibility_ontology();
        let mapping = divisibility_mapping();
        let mut interp = FolInterpretation::new(2);
        interp.assign_constant("m", 0);
        interp.assign_constant("n", 1);
        interp.add_tuple("Divides", vec![0, 1]);
        interp.add_tuple("Divides", vec![1, 1]);
        let image =
            map_interpretation(&interp, &mapping, &onto, TranslationMode::RoleProperties).unwrap();
        let class = image.denotation(&omp("Divisibility_relationship")).unwrap();
        assert_eq!(image.class_members(class).len(), 2);
    }

    #[test]
    fn condition_holds_for_the_divisibility_fixture() {
        let onto = divisibility_ontology();
        let mapping = divisibility_mapping();
        let theory = Theory::new(divides_signature());
        let report = check_semantic_condition(
            &theory,
            &divides_sentence(),
            &mapping,
            &onto,
            2,
            TranslationMode::RoleProperties,
        )
        .unwrap();
        assert!(report.passed);
        // d^2 constant maps, half of the 2^(d^2) extensions contain the
        // required tuple: 4 * 8 = 32
        assert_eq!(report.models_checked, 32);
        assert_eq!(report.strict, Some(true));
    }

    #[test]
    fn removed_subproperty_edge_breaks_the_generic_condition() {
        let onto = divisibility_ontology();
        let mapping = divisibility_mapping();
        let theory = Theory::new(divides_signature());
        let mut schema = onto.to_schema_graph().unwrap();
        let removed = Triple::new(
            omp("divisor"),
            viri(vocab::RDFS_SUBPROPERTY_OF),
            viri(vocab::OMP_HAS_ARGUMENT),
        );
        assert!(schema.remove(&removed));
        let report = check_semantic_condition_with_schema(
            &theory,
            &divides_sentence(),
            &mapping,
            &onto,
            &schema,
            2,
            TranslationMode::Generic,
        )
        .unwrap();
        assert!(!report.passed);
        assert!(report.counterexample.is_some());
    }

    #[test]
    fn duplicated_axiom_keeps_the_model_count() {
        let onto = divisibility_ontology();
        let mapping = divisibility_mapping();
        let sentence = divides_sentence();
        let empty = Theory::new(divides_signature());
        let mut with_axiom = Theory::new(divides_signature());
        with_axiom.add_axiom(sentence.clone()).unwrap();
        let a = check_semantic_condition(
            &empty,
            &sentence,
            &mapping,
            &onto,
            2,
            TranslationMode::RoleProperties,
        )
        .unwrap();
        let b = check_semantic_condition(
            &with_axiom,
            &sentence,
            &mapping,
            &onto,
            2,
            TranslationMode::RoleProperties,
        )
        .unwrap();
        assert!(a.passed && b.passed);
        assert_eq!(a.models_checked, b.models_checked);
    }

    #[test]
    fn mapping_file_round_trip() {
        let text = r#"{
            "pmap": {"Divides": "http://ontomathpro.org/omp2#Divisibility_relationship"},
            "cmap": {"m": "http://ontomathpro.org/lexicons/m"},
            "data_namespace": "http://ontomathpro.org/lexicons/",
            "mode": "role-properties"
        }"#;
        let (mapping, mode) = load_mapping(text).unwrap();
        assert_eq!(mode, Some(TranslationMode::RoleProperties));
        assert_eq!(
            mapping.pmap["Divides"],
            ConceptId::new(omp("Divisibility_relationship"))
        );
        assert!(load_mapping("{").is_err());
    }
}
