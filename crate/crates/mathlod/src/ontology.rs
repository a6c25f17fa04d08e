//! The domain and foundational layers: a concept hierarchy annotated with
//! the Kind/Role meta-ontological distinction, reified relationship classes
//! with ordered argument properties, structural validation, and the
//! projection to / lifting from the RDF schema graph.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

use crate::rdf::{Iri, Literal, RdfGraph, Subject, Term, Triple};
use crate::vocab;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConceptId(Iri);

impl ConceptId {
    pub fn new(iri: Iri) -> Self {
        ConceptId(iri)
    }

    pub fn iri(&self) -> &Iri {
        &self.0
    }
}

impl fmt::Display for ConceptId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetaType {
    /// Rigid, ontologically independent (e.g. an integer is an integer
    /// regardless of its relations).
    Kind,
    /// Anti-rigid, instantiated only by virtue of a relationship to another
    /// object (e.g. a degree of a polynomial).
    Role,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Concept {
    pub id: ConceptId,
    /// language code -> written labels, in declaration order
    pub labels: BTreeMap<String, Vec<String>>,
    pub meta: MetaType,
    pub parents: BTreeSet<ConceptId>,
    pub definition: Option<String>,
}

impl Concept {
    pub fn new(id: ConceptId, meta: MetaType) -> Self {
        Concept {
            id,
            labels: BTreeMap::new(),
            meta,
            parents: BTreeSet::new(),
            definition: None,
        }
    }

    pub fn with_label(mut self, language: &str, label: &str) -> Self {
        self.labels
            .entry(language.to_string())
            .or_default()
            .push(label.to_string());
        self
    }

    pub fn with_parent(mut self, parent: ConceptId) -> Self {
        self.parents.insert(parent);
        self
    }
}

/// One participant slot of a reified relationship class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArgumentRole {
    pub property: Iri,
    pub role_concept: ConceptId,
    /// 1-based position bridging positional FOL arguments to named
    /// properties.
    pub position: usize,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReifiedRelationshipClass {
    pub id: ConceptId,
    /// sorted by position on construction
    pub arguments: Vec<ArgumentRole>,
    pub parents: BTreeSet<ConceptId>,
}

impl ReifiedRelationshipClass {
    pub fn new(id: ConceptId, mut arguments: Vec<ArgumentRole>) -> Self {
        arguments.sort_by_key(|a| a.position);
        ReifiedRelationshipClass {
            id,
            arguments,
            parents: BTreeSet::new(),
        }
    }

    pub fn argument_at(&self, position: usize) -> Option<&ArgumentRole> {
        self.arguments.iter().find(|a| a.position == position)
    }

    pub fn argument_by_property(&self, property: &Iri) -> Option<&ArgumentRole> {
        self.arguments.iter().find(|a| &a.property == property)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SubclassCycle { id: ConceptId },
    RoleWithoutKindAncestor { id: ConceptId },
    DanglingParent { id: ConceptId, parent: ConceptId },
    UnknownRoleConcept { relationship: ConceptId, role_concept: ConceptId },
    ArgumentRoleNotRole { relationship: ConceptId, role_concept: ConceptId },
    DuplicateArgumentProperty { relationship: ConceptId, property: Iri },
    ArgumentPositionGap { relationship: ConceptId },
    NoArguments { relationship: ConceptId },
    UnaryRelationship { relationship: ConceptId },
    OverlappingHierarchies { id: ConceptId },
}

impl Violation {
    pub fn severity(&self) -> Severity {
        match self {
            Violation::UnaryRelationship { .. } => Severity::Warning,
            _ => Severity::Error,
        }
    }

    /// Stable machine-readable code used in reports.
    pub fn code(&self) -> &'static str {
        match self {
            Violation::SubclassCycle { .. } => "subclass-cycle",
            Violation::RoleWithoutKindAncestor { .. } => "role-without-kind-ancestor",
            Violation::DanglingParent { .. } => "dangling-parent",
            Violation::UnknownRoleConcept { .. } => "unknown-role-concept",
            Violation::ArgumentRoleNotRole { .. } => "argument-role-not-role",
            Violation::DuplicateArgumentProperty { .. } => "duplicate-argument-property",
            Violation::ArgumentPositionGap { .. } => "argument-position-gap",
            Violation::NoArguments { .. } => "no-arguments",
            Violation::UnaryRelationship { .. } => "unary-relationship",
            Violation::OverlappingHierarchies { .. } => "overlapping-hierarchies",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SubclassCycle { id } => write!(f, "{}: {id}", self.code()),
            Violation::RoleWithoutKindAncestor { id } => write!(f, "{}: {id}", self.code()),
            Violation::DanglingParent { id, parent } => {
                write!(f, "{}: {id} -> {parent}", self.code())
            }
            Violation::UnknownRoleConcept {
                relationship,
                role_concept,
            }
            | Violation::ArgumentRoleNotRole {
                relationship,
                role_concept,
            } => write!(f, "{}: {relationship} -> {role_concept}", self.code()),
            Violation::DuplicateArgumentProperty {
                relationship,
                property,
            } => write!(f, "{}: {relationship} -> {property}", self.code()),
            Violation::ArgumentPositionGap { relationship }
            | Violation::NoArguments { relationship }
            | Violation::UnaryRelationship { relationship } => {
                write!(f, "{}: {relationship}", self.code())
            }
            Violation::OverlappingHierarchies { id } => write!(f, "{}: {id}", self.code()),
        }
    }
}

#[derive(Debug, Error)]
pub enum OntologyError {
    #[error("ontology is invalid: {}", render_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("cannot lift ontology from RDF: {0}")]
    Lift(String),
    #[error(transparent)]
    Rdf(#[from] crate::rdf::RdfError),
}

fn render_violations(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(Violation::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// Immutable after [`OntologyBuilder::build`]; both hierarchies live in one
/// value so the schema projection sees a single graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OntologyGraph {
    concepts: BTreeMap<ConceptId, Concept>,
    relationships: BTreeMap<ConceptId, ReifiedRelationshipClass>,
    base_namespace: Iri,
    extras: Vec<Triple>,
}

#[derive(Debug, Clone)]
pub struct OntologyBuilder {
    graph: OntologyGraph,
}

impl Default for OntologyBuilder {
    fn default() -> Self {
        OntologyBuilder {
            graph: OntologyGraph {
                concepts: BTreeMap::new(),
                relationships: BTreeMap::new(),
                base_namespace: Iri::new(vocab::OMP_NS).expect("valid namespace"),
                extras: Vec::new(),
            },
        }
    }
}

impl OntologyBuilder {
    pub fn new() -> Self {
        OntologyBuilder::default()
    }

    pub fn base_namespace(mut self, ns: Iri) -> Self {
        self.graph.base_namespace = ns;
        self
    }

    pub fn concept(mut self, concept: Concept) -> Self {
        self.graph.concepts.insert(concept.id.clone(), concept);
        self
    }

    pub fn relationship(mut self, relationship: ReifiedRelationshipClass) -> Self {
        self.graph
            .relationships
            .insert(relationship.id.clone(), relationship);
        self
    }

    pub fn extra(mut self, triple: Triple) -> Self {
        self.graph.extras.push(triple);
        self
    }

    pub fn build(self) -> OntologyGraph {
        self.graph
    }
}

impl OntologyGraph {
    pub fn builder() -> OntologyBuilder {
        OntologyBuilder::new()
    }

    pub fn base_namespace(&self) -> &Iri {
        &self.base_namespace
    }

    pub fn concepts(&self) -> impl Iterator<Item = &Concept> {
        self.concepts.values()
    }

    pub fn relationships(&self) -> impl Iterator<Item = &ReifiedRelationshipClass> {
        self.relationships.values()
    }

    pub fn concept(&self, id: &ConceptId) -> Option<&Concept> {
        self.concepts.get(id)
    }

    /// Not-found is a normal result, not a failure.
    pub fn lookup_relationship(&self, id: &ConceptId) -> Option<&ReifiedRelationshipClass> {
        self.relationships.get(id)
    }

    pub fn extras(&self) -> &[Triple] {
        &self.extras
    }

    /// All structural violations; an empty list means the ontology is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();

        for id in self.relationships.keys() {
            if self.concepts.contains_key(id) {
                out.push(Violation::OverlappingHierarchies { id: id.clone() });
            }
        }

        for (id, concept) in &self.concepts {
            for parent in &concept.parents {
                if !self.concepts.contains_key(parent) {
                    out.push(Violation::DanglingParent {
                        id: id.clone(),
                        parent: parent.clone(),
                    });
                }
            }
        }
        for (id, rel) in &self.relationships {
            for parent in &rel.parents {
                if !self.relationships.contains_key(parent) {
                    out.push(Violation::DanglingParent {
                        id: id.clone(),
                        parent: parent.clone(),
                    });
                }
            }
        }

        // cycles, per hierarchy
        for id in find_cycle_members(&self.concepts, |c| &c.parents) {
            out.push(Violation::SubclassCycle { id });
        }
        for id in find_cycle_members(&self.relationships, |r| &r.parents) {
            out.push(Violation::SubclassCycle { id });
        }

        // every role must reach a kind through its ancestors
        for (id, concept) in &self.concepts {
            if concept.meta == MetaType::Role && !self.reaches_kind(id) {
                out.push(Violation::RoleWithoutKindAncestor { id: id.clone() });
            }
        }

        for (id, rel) in &self.relationships {
            if rel.arguments.is_empty() {
                out.push(Violation::NoArguments {
                    relationship: id.clone(),
                });
                continue;
            }
            if rel.arguments.len() == 1 {
                out.push(Violation::UnaryRelationship {
                    relationship: id.clone(),
                });
            }
            let mut seen_props = HashSet::new();
            for arg in &rel.arguments {
                if !seen_props.insert(&arg.property) {
                    out.push(Violation::DuplicateArgumentProperty {
                        relationship: id.clone(),
                        property: arg.property.clone(),
                    });
                }
                match self.concepts.get(&arg.role_concept) {
                    None => out.push(Violation::UnknownRoleConcept {
                        relationship: id.clone(),
                        role_concept: arg.role_concept.clone(),
                    }),
                    Some(c) if c.meta != MetaType::Role => {
                        out.push(Violation::ArgumentRoleNotRole {
                            relationship: id.clone(),
                            role_concept: arg.role_concept.clone(),
                        })
                    }
                    Some(_) => {}
                }
            }
            let positions: Vec<usize> = rel.arguments.iter().map(|a| a.position).collect();
            if positions != (1..=positions.len()).collect::<Vec<_>>() {
                out.push(Violation::ArgumentPositionGap {
                    relationship: id.clone(),
                });
            }
        }

        out
    }

    fn reaches_kind(&self, id: &ConceptId) -> bool {
        let mut stack: Vec<&ConceptId> = vec![id];
        let mut visited: HashSet<&ConceptId> = HashSet::new();
        while let Some(current) = stack.pop() {
            if !visited.insert(current) {
                continue;
            }
            let Some(concept) = self.concepts.get(current) else {
                continue;
            };
            if current != id && concept.meta == MetaType::Kind {
                return true;
            }
            stack.extend(concept.parents.iter());
        }
        false
    }

    /// Projects the ontology onto its RDF schema graph.
    ///
    /// Requires a validation-clean ontology (warnings are fine). The output
    /// is deterministic: concepts sorted by IRI, then relationships, each
    /// argument in position order, extras re-emitted verbatim at the end.
    pub fn to_schema_graph(&self) -> Result<RdfGraph, OntologyError> {
        let errors: Vec<Violation> = self
            .validate()
            .into_iter()
            .filter(|v| v.severity() == Severity::Error)
            .collect();
        if !errors.is_empty() {
            return Err(OntologyError::Invalid(errors));
        }

        let iri = |s: &str| Iri::new(s).expect("valid vocabulary IRI");
        let rdf_type = iri(vocab::RDF_TYPE);
        let owl_class = iri(vocab::OWL_CLASS);
        let subclass = iri(vocab::RDFS_SUBCLASS_OF);
        let label = iri(vocab::RDFS_LABEL);
        let comment = iri(vocab::RDFS_COMMENT);
        let meta_type = iri(vocab::OMP_META_TYPE);

        let mut g = RdfGraph::new();
        g.add_prefix("rdf", iri(vocab::RDF_NS))?;
        g.add_prefix("rdfs", iri(vocab::RDFS_NS))?;
        g.add_prefix("owl", iri(vocab::OWL_NS))?;
        g.add_prefix("omp", iri(vocab::OMP_NS))?;

        for (id, concept) in &self.concepts {
            let subject = id.iri().clone();
            g.insert(Triple::new(subject.clone(), rdf_type.clone(), owl_class.clone()));
            for parent in &concept.parents {
                g.insert(Triple::new(
                    subject.clone(),
                    subclass.clone(),
                    parent.iri().clone(),
                ));
            }
            let meta_iri = match concept.meta {
                MetaType::Kind => iri(vocab::OMP_KIND),
                MetaType::Role => iri(vocab::OMP_ROLE),
            };
            g.insert(Triple::new(subject.clone(), meta_type.clone(), meta_iri));
            for (language, values) in &concept.labels {
                for value in values {
                    g.insert(Triple::new(
                        subject.clone(),
                        label.clone(),
                        Literal::lang_tagged(value, language),
                    ));
                }
            }
            if let Some(def) = &concept.definition {
                g.insert(Triple::new(subject.clone(), comment.clone(), Literal::plain(def)));
            }
        }

        let has_argument = iri(vocab::OMP_HAS_ARGUMENT);
        let subproperty = iri(vocab::RDFS_SUBPROPERTY_OF);
        let domain = iri(vocab::RDFS_DOMAIN);
        let range = iri(vocab::RDFS_RANGE);
        for (id, rel) in &self.relationships {
            let subject = id.iri().clone();
            g.insert(Triple::new(subject.clone(), rdf_type.clone(), owl_class.clone()));
            for parent in &rel.parents {
                g.insert(Triple::new(
                    subject.clone(),
                    subclass.clone(),
                    parent.iri().clone(),
                ));
            }
            for arg in &rel.arguments {
                g.insert(Triple::new(
                    arg.property.clone(),
                    subproperty.clone(),
                    has_argument.clone(),
                ));
                g.insert(Triple::new(arg.property.clone(), domain.clone(), subject.clone()));
                g.insert(Triple::new(
                    arg.property.clone(),
                    range.clone(),
                    arg.role_concept.iri().clone(),
                ));
                if !arg.label.is_empty() {
                    g.insert(Triple::new(
                        arg.property.clone(),
                        label.clone(),
                        Literal::plain(&arg.label),
                    ));
                }
            }
        }

        for t in &self.extras {
            g.insert(t.clone());
        }
        Ok(g)
    }

    /// Lifts an ontology out of an RDF graph (the inverse of
    /// [`OntologyGraph::to_schema_graph`]). Unrecognized triples are kept as
    /// opaque extras and re-emitted verbatim on projection.
    ///
    /// Argument properties are recognized by their `rdfs:domain` triple (or
    /// an `rdfs:subPropertyOf omp:hasArgument` declaration); their position
    /// follows first occurrence in the document.
    pub fn from_schema_graph(graph: &RdfGraph) -> Result<OntologyGraph, OntologyError> {
        let iri = |s: &str| Iri::new(s).expect("valid vocabulary IRI");
        let rdf_type = iri(vocab::RDF_TYPE);
        let owl_class = iri(vocab::OWL_CLASS);
        let subclass = iri(vocab::RDFS_SUBCLASS_OF);
        let subproperty = iri(vocab::RDFS_SUBPROPERTY_OF);
        let domain = iri(vocab::RDFS_DOMAIN);
        let range = iri(vocab::RDFS_RANGE);
        let label = iri(vocab::RDFS_LABEL);
        let comment = iri(vocab::RDFS_COMMENT);
        let meta_type = iri(vocab::OMP_META_TYPE);
        let has_argument = iri(vocab::OMP_HAS_ARGUMENT);
        let kind = iri(vocab::OMP_KIND);
        let role = iri(vocab::OMP_ROLE);

        let triples: Vec<&Triple> = graph.triples().collect();
        let mut consumed: Vec<bool> = vec![false; triples.len()];

        let subject_iri = |t: &Triple| match &t.subject {
            Subject::Iri(i) => Some(i.clone()),
            Subject::Blank(_) => None,
        };
        let object_iri = |t: &Triple| match &t.object {
            Term::Iri(i) => Some(i.clone()),
            _ => None,
        };

        // argument properties in document order
        let mut arg_props: Vec<Iri> = Vec::new();
        for t in &triples {
            let is_arg_decl = (t.predicate == domain)
                || (t.predicate == subproperty && object_iri(t) == Some(has_argument.clone()));
            if is_arg_decl {
                if let Some(p) = subject_iri(t) {
                    if !arg_props.contains(&p) {
                        arg_props.push(p);
                    }
                }
            }
        }

        struct PropInfo {
            domain: Option<Iri>,
            range: Option<Iri>,
            label: Option<String>,
        }
        let mut prop_info: BTreeMap<Iri, PropInfo> = BTreeMap::new();
        for (idx, t) in triples.iter().enumerate() {
            let Some(s) = subject_iri(t) else { continue };
            if !arg_props.contains(&s) {
                continue;
            }
            let info = prop_info.entry(s.clone()).or_insert(PropInfo {
                domain: None,
                range: None,
                label: None,
            });
            if t.predicate == domain {
                info.domain = object_iri(t);
                consumed[idx] = true;
            } else if t.predicate == range {
                info.range = object_iri(t);
                consumed[idx] = true;
            } else if t.predicate == subproperty && object_iri(t) == Some(has_argument.clone()) {
                consumed[idx] = true;
            } else if t.predicate == label {
                if let Term::Literal(l) = &t.object {
                    if l.language().is_none() {
                        info.label = Some(l.lexical().to_string());
                        consumed[idx] = true;
                    }
                }
            }
        }

        // relationship classes are the domains of argument properties
        let mut relationship_ids: Vec<Iri> = Vec::new();
        for p in &arg_props {
            let info = prop_info
                .get(p)
                .filter(|i| i.domain.is_some())
                .ok_or_else(|| {
                    OntologyError::Lift(format!("argument property `{p}` has no rdfs:domain"))
                })?;
            let d = info.domain.clone().unwrap();
            if !relationship_ids.contains(&d) {
                relationship_ids.push(d);
            }
        }

        // all declared classes, in document order
        let mut classes: Vec<Iri> = Vec::new();
        for (idx, t) in triples.iter().enumerate() {
            if t.predicate == rdf_type && object_iri(t) == Some(owl_class.clone()) {
                if let Some(s) = subject_iri(t) {
                    if !classes.contains(&s) {
                        classes.push(s);
                    }
                    consumed[idx] = true;
                }
            }
        }

        let mut relationships: BTreeMap<ConceptId, ReifiedRelationshipClass> = BTreeMap::new();
        for rel_iri in &relationship_ids {
            let id = ConceptId::new(rel_iri.clone());
            let mut arguments = Vec::new();
            for p in &arg_props {
                let info = &prop_info[p];
                if info.domain.as_ref() != Some(rel_iri) {
                    continue;
                }
                let Some(r) = info.range.clone() else {
                    return Err(OntologyError::Lift(format!(
                        "argument property `{p}` has no rdfs:range"
                    )));
                };
                arguments.push(ArgumentRole {
                    property: p.clone(),
                    role_concept: ConceptId::new(r),
                    position: arguments.len() + 1,
                    label: info
                        .label
                        .clone()
                        .unwrap_or_else(|| local_name(p).to_string()),
                });
            }
            relationships.insert(id.clone(), ReifiedRelationshipClass::new(id, arguments));
        }

        let mut concepts: BTreeMap<ConceptId, Concept> = BTreeMap::new();
        for class_iri in &classes {
            if relationship_ids.contains(class_iri) {
                continue;
            }
            let id = ConceptId::new(class_iri.clone());
            let mut meta: Option<MetaType> = None;
            let mut concept_labels: BTreeMap<String, Vec<String>> = BTreeMap::new();
            let mut parents: BTreeSet<ConceptId> = BTreeSet::new();
            let mut definition: Option<String> = None;
            for (idx, t) in triples.iter().enumerate() {
                if subject_iri(t).as_ref() != Some(class_iri) {
                    continue;
                }
                if t.predicate == meta_type {
                    let new = match object_iri(t) {
                        Some(o) if o == kind => MetaType::Kind,
                        Some(o) if o == role => MetaType::Role,
                        other => {
                            return Err(OntologyError::Lift(format!(
                                "unrecognized meta-ontological type {other:?} on `{class_iri}`"
                            )))
                        }
                    };
                    if meta.is_some_and(|m| m != new) {
                        return Err(OntologyError::Lift(format!(
                            "conflicting meta-ontological types on `{class_iri}`"
                        )));
                    }
                    meta = Some(new);
                    consumed[idx] = true;
                } else if t.predicate == subclass {
                    if let Some(o) = object_iri(t) {
                        parents.insert(ConceptId::new(o));
                        consumed[idx] = true;
                    }
                } else if t.predicate == label {
                    if let Term::Literal(l) = &t.object {
                        if let Some(lang) = l.language() {
                            concept_labels
                                .entry(lang.to_string())
                                .or_default()
                                .push(l.lexical().to_string());
                            consumed[idx] = true;
                        }
                    }
                } else if t.predicate == comment {
                    if let Term::Literal(l) = &t.object {
                        if l.language().is_none() && definition.is_none() {
                            definition = Some(l.lexical().to_string());
                            consumed[idx] = true;
                        }
                    }
                }
            }
            let meta = meta.ok_or_else(|| {
                OntologyError::Lift(format!(
                    "concept `{class_iri}` has no meta-ontological type"
                ))
            })?;
            concepts.insert(
                id.clone(),
                Concept {
                    id,
                    labels: concept_labels,
                    meta,
                    parents,
                    definition,
                },
            );
        }

        // relationship parents come from subClassOf on relationship ids
        for rel_iri in &relationship_ids {
            let id = ConceptId::new(rel_iri.clone());
            for (idx, t) in triples.iter().enumerate() {
                if subject_iri(t).as_ref() == Some(rel_iri) && t.predicate == subclass {
                    if let Some(o) = object_iri(t) {
                        relationships
                            .get_mut(&id)
                            .expect("relationship present")
                            .parents
                            .insert(ConceptId::new(o));
                        consumed[idx] = true;
                    }
                }
            }
        }

        let extras: Vec<Triple> = triples
            .iter()
            .enumerate()
            .filter(|(idx, _)| !consumed[*idx])
            .map(|(_, t)| (*t).clone())
            .collect();

        Ok(OntologyGraph {
            concepts,
            relationships,
            base_namespace: Iri::new(vocab::OMP_NS).expect("valid namespace"),
            extras,
        })
    }
}

fn find_cycle_members<T>(
    nodes: &BTreeMap<ConceptId, T>,
    parents: impl Fn(&T) -> &BTreeSet<ConceptId>,
) -> Vec<ConceptId> {
    // a node is reported when it can reach itself through parent edges
    let mut out = Vec::new();
    for id in nodes.keys() {
        let mut stack: Vec<&ConceptId> = nodes.get(id).map(&parents).into_iter().flatten().collect();
        let mut visited: HashSet<&ConceptId> = HashSet::new();
        while let Some(current) = stack.pop() {
            if current == id {
                out.push(id.clone());
                break;
            }
            if !visited.insert(current) {
                continue;
            }
            if let Some(node) = nodes.get(current) {
                stack.extend(parents(node).iter());
            }
        }
    }
    out
}

fn local_name(iri: &Iri) -> &str {
    let s = iri.as_str();
    match s.rfind(['#', '/']) {
        Some(i) => &s[i + 1..],
        None => s,
    }
}
