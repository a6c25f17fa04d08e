//! Finite RDF interpretations and RDFS-level satisfaction.
//!
//! An interpretation fixes a finite resource set, a denotation for every
//! IRI, and class / property extensions. A graph is satisfied when some
//! assignment of its blank nodes to resources makes every triple hold;
//! the schema graph contributes semantic conditions (`rdfs:subClassOf`,
//! `rdfs:subPropertyOf`, `rdfs:domain`, `rdfs:range`) rather than asserted
//! triples.

use std::collections::{BTreeMap, BTreeSet};

use super::model::{Iri, RdfGraph, Subject, Term, Triple};
use super::RdfError;
use crate::vocab;

pub type ResourceId = usize;

/// Cap on the number of anonymous resources added by [`enumerate_models`].
pub const RDF_DOMAIN_CAP: usize = 4;
/// Cap on the number of distinct IRIs [`enumerate_models`] accepts.
pub const RDF_IRI_CAP: usize = 12;
/// Cap on the size of the enumerated candidate space, in bits.
pub const RDF_ENUM_BITS_CAP: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RdfInterpretation {
    resources: BTreeSet<ResourceId>,
    iri_denotation: BTreeMap<Iri, ResourceId>,
    property_ext: BTreeMap<ResourceId, BTreeSet<(ResourceId, ResourceId)>>,
    class_ext: BTreeMap<ResourceId, BTreeSet<ResourceId>>,
}

impl RdfInterpretation {
    pub fn new(resources: impl IntoIterator<Item = ResourceId>) -> Self {
        RdfInterpretation {
            resources: resources.into_iter().collect(),
            ..Default::default()
        }
    }

    pub fn resources(&self) -> impl Iterator<Item = ResourceId> + '_ {
        self.resources.iter().copied()
    }

    pub fn resource_count(&self) -> usize {
        self.resources.len()
    }

    pub fn denote_as(&mut self, iri: Iri, resource: ResourceId) {
        assert!(
            self.resources.contains(&resource),
            "denotation target must be a resource"
        );
        self.iri_denotation.insert(iri, resource);
    }

    pub fn denotation(&self, iri: &Iri) -> Option<ResourceId> {
        self.iri_denotation.get(iri).copied()
    }

    pub fn denotations(&self) -> impl Iterator<Item = (&Iri, ResourceId)> {
        self.iri_denotation.iter().map(|(i, r)| (i, *r))
    }

    pub fn add_property_pair(&mut self, property: ResourceId, from: ResourceId, to: ResourceId) {
        assert!(
            self.resources.contains(&property)
                && self.resources.contains(&from)
                && self.resources.contains(&to),
            "extension members must be resources"
        );
        self.property_ext.entry(property).or_default().insert((from, to));
    }

    pub fn add_class_member(&mut self, class: ResourceId, member: ResourceId) {
        assert!(
            self.resources.contains(&class) && self.resources.contains(&member),
            "extension members must be resources"
        );
        self.class_ext.entry(class).or_default().insert(member);
    }

    pub fn property_pairs(&self, property: ResourceId) -> BTreeSet<(ResourceId, ResourceId)> {
        self.property_ext.get(&property).cloned().unwrap_or_default()
    }

    pub fn class_members(&self, class: ResourceId) -> BTreeSet<ResourceId> {
        self.class_ext.get(&class).cloned().unwrap_or_default()
    }

    fn property_ref(&self, property: ResourceId) -> Option<&BTreeSet<(ResourceId, ResourceId)>> {
        self.property_ext.get(&property)
    }

    fn class_ref(&self, class: ResourceId) -> Option<&BTreeSet<ResourceId>> {
        self.class_ext.get(&class)
    }
}

/// True iff `interp` is a model of `graph` under the RDFS conditions induced
/// by `schema`. Blank nodes of `graph` are read existentially.
pub fn satisfies(
    interp: &RdfInterpretation,
    graph: &RdfGraph,
    schema: &RdfGraph,
) -> Result<bool, RdfError> {
    for iri in graph.iris().into_iter().chain(schema.iris()) {
        if interp.denotation(iri).is_none() {
            return Err(RdfError::NoDenotation(iri.as_str().to_string()));
        }
    }
    if !schema_conditions_hold(interp, schema) {
        return Ok(false);
    }

    let rdf_type = Iri::new(vocab::RDF_TYPE).expect("valid vocabulary IRI");
    let blanks: Vec<String> = graph
        .blank_nodes()
        .iter()
        .map(|b| b.label().to_string())
        .collect();
    let triples: Vec<&Triple> = graph.triples().collect();

    // reject literals up front so the error does not depend on search order
    for t in &triples {
        if matches!(t.object, Term::Literal(_)) {
            return Err(RdfError::LiteralInInstanceGraph);
        }
    }

    let resources: Vec<ResourceId> = interp.resources().collect();
    let mut assignment: BTreeMap<&str, ResourceId> = BTreeMap::new();
    Ok(search(
        interp,
        &rdf_type,
        &blanks,
        0,
        &resources,
        &mut assignment,
        &triples,
    ))
}

fn search<'a>(
    interp: &RdfInterpretation,
    rdf_type: &Iri,
    blanks: &'a [String],
    index: usize,
    resources: &[ResourceId],
    assignment: &mut BTreeMap<&'a str, ResourceId>,
    triples: &[&Triple],
) -> bool {
    // a triple with unassigned blanks cannot refute the assignment yet
    let holds_so_far = triples
        .iter()
        .all(|t| triple_holds(interp, rdf_type, t, assignment).unwrap_or(true));
    if !holds_so_far {
        return false;
    }
    if index == blanks.len() {
        return true;
    }
    for &r in resources {
        assignment.insert(&blanks[index], r);
        if search(interp, rdf_type, blanks, index + 1, resources, assignment, triples) {
            return true;
        }
        assignment.remove(blanks[index].as_str());
    }
    false
}

fn triple_holds(
    interp: &RdfInterpretation,
    rdf_type: &Iri,
    t: &Triple,
    assignment: &BTreeMap<&str, ResourceId>,
) -> Option<bool> {
    let s = match &t.subject {
        Subject::Iri(i) => interp.denotation(i)?,
        Subject::Blank(b) => *assignment.get(b.label())?,
    };
    let o = match &t.object {
        Term::Iri(i) => interp.denotation(i)?,
        Term::Blank(b) => *assignment.get(b.label())?,
        Term::Literal(_) => return Some(false),
    };
    if t.predicate == *rdf_type {
        Some(interp.class_ref(o).is_some_and(|m| m.contains(&s)))
    } else {
        let p = interp.denotation(&t.predicate)?;
        Some(interp.property_ref(p).is_some_and(|e| e.contains(&(s, o))))
    }
}

fn schema_conditions_hold(interp: &RdfInterpretation, schema: &RdfGraph) -> bool {
    for t in schema.triples() {
        let (Subject::Iri(s), Term::Iri(o)) = (&t.subject, &t.object) else {
            continue;
        };
        let (Some(ds), Some(dobj)) = (interp.denotation(s), interp.denotation(o)) else {
            return false;
        };
        let ok = match t.predicate.as_str() {
            vocab::RDFS_SUBCLASS_OF => interp
                .class_members(ds)
                .is_subset(&interp.class_members(dobj)),
            vocab::RDFS_SUBPROPERTY_OF => interp
                .property_pairs(ds)
                .is_subset(&interp.property_pairs(dobj)),
            vocab::RDFS_DOMAIN => {
                let class = interp.class_members(dobj);
                interp
                    .property_pairs(ds)
                    .iter()
                    .all(|(x, _)| class.contains(x))
            }
            vocab::RDFS_RANGE => {
                let class = interp.class_members(dobj);
                interp
                    .property_pairs(ds)
                    .iter()
                    .all(|(_, y)| class.contains(y))
            }
            _ => true,
        };
        if !ok {
            return false;
        }
    }
    true
}

/// Deterministic enumeration of the finite interpretation family over the
/// IRIs of `graph` and `schema` plus `domain_size` anonymous resources.
///
/// Every IRI denotes its own distinct resource. Extensions vary only for
/// resources that can influence satisfaction: properties occurring in
/// predicate position or in a schema condition, and classes occurring as
/// `rdf:type` objects or in a schema condition; all other extensions stay
/// empty. The yielded sequence is exactly the candidates, in counter order,
/// that pass [`satisfies`].
pub fn enumerate_models(
    graph: &RdfGraph,
    schema: &RdfGraph,
    domain_size: usize,
) -> Result<ModelEnumeration, RdfError> {
    if domain_size > RDF_DOMAIN_CAP {
        return Err(RdfError::EnumerationTooLarge(format!(
            "domain size {domain_size} exceeds cap {RDF_DOMAIN_CAP}"
        )));
    }
    let mut iris: BTreeSet<Iri> = BTreeSet::new();
    for iri in graph.iris().into_iter().chain(schema.iris()) {
        iris.insert(iri.clone());
    }
    if iris.len() > RDF_IRI_CAP {
        return Err(RdfError::EnumerationTooLarge(format!(
            "{} IRIs exceed cap {RDF_IRI_CAP}",
            iris.len()
        )));
    }

    let total = iris.len() + domain_size;
    let denotation: BTreeMap<Iri, ResourceId> = iris
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, iri)| (iri, i))
        .collect();

    let rdf_type = Iri::new(vocab::RDF_TYPE).expect("valid vocabulary IRI");
    let mut prop_slots: BTreeSet<ResourceId> = BTreeSet::new();
    let mut class_slots: BTreeSet<ResourceId> = BTreeSet::new();
    for t in graph.triples() {
        if t.predicate == rdf_type {
            if let Term::Iri(c) = &t.object {
                class_slots.insert(denotation[c]);
            }
        } else {
            prop_slots.insert(denotation[&t.predicate]);
        }
    }
    for t in schema.triples() {
        let (Subject::Iri(s), Term::Iri(o)) = (&t.subject, &t.object) else {
            continue;
        };
        match t.predicate.as_str() {
            vocab::RDFS_SUBCLASS_OF => {
                class_slots.insert(denotation[s]);
                class_slots.insert(denotation[o]);
            }
            vocab::RDFS_SUBPROPERTY_OF => {
                prop_slots.insert(denotation[s]);
                prop_slots.insert(denotation[o]);
            }
            vocab::RDFS_DOMAIN | vocab::RDFS_RANGE => {
                prop_slots.insert(denotation[s]);
                class_slots.insert(denotation[o]);
            }
            _ => {}
        }
    }

    let prop_slots: Vec<ResourceId> = prop_slots.into_iter().collect();
    let class_slots: Vec<ResourceId> = class_slots.into_iter().collect();
    let bits =
        (prop_slots.len() * total * total + class_slots.len() * total) as u32;
    if bits > RDF_ENUM_BITS_CAP {
        return Err(RdfError::EnumerationTooLarge(format!(
            "candidate space of {bits} bits exceeds cap {RDF_ENUM_BITS_CAP}"
        )));
    }

    Ok(ModelEnumeration {
        graph: graph.clone(),
        schema: schema.clone(),
        denotation,
        total,
        prop_slots,
        class_slots,
        bits,
        counter: 0,
    })
}

pub struct ModelEnumeration {
    graph: RdfGraph,
    schema: RdfGraph,
    denotation: BTreeMap<Iri, ResourceId>,
    total: usize,
    prop_slots: Vec<ResourceId>,
    class_slots: Vec<ResourceId>,
    bits: u32,
    counter: u64,
}

impl ModelEnumeration {
    /// Number of candidate interpretations in the enumerated family.
    pub fn candidate_count(&self) -> u64 {
        1u64 << self.bits
    }

    fn decode(&self, counter: u64) -> RdfInterpretation {
        let mut interp = RdfInterpretation::new(0..self.total);
        for (iri, r) in &self.denotation {
            interp.denote_as(iri.clone(), *r);
        }
        let mut bit = 0;
        for &p in &self.prop_slots {
            for x in 0..self.total {
                for y in 0..self.total {
                    if counter >> bit & 1 == 1 {
                        interp.add_property_pair(p, x, y);
                    }
                    bit += 1;
                }
            }
        }
        for &c in &self.class_slots {
            for m in 0..self.total {
                if counter >> bit & 1 == 1 {
                    interp.add_class_member(c, m);
                }
                bit += 1;
            }
        }
        interp
    }
}

impl Iterator for ModelEnumeration {
    type Item = RdfInterpretation;

    fn next(&mut self) -> Option<RdfInterpretation> {
        while self.counter < self.candidate_count() {
            let interp = self.decode(self.counter);
            self.counter += 1;
            if satisfies(&interp, &self.graph, &self.schema).expect("denotations are total") {
                return Some(interp);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rdf::model::BlankNode;

    fn iri(s: &str) -> Iri {
        Iri::new(s).unwrap()
    }

    #[test]
    fn empty_graph_is_satisfied_by_anything() {
        let interp = RdfInterpretation::new(0..1);
        assert!(satisfies(&interp, &RdfGraph::new(), &RdfGraph::new()).unwrap());
    }

    #[test]
    fn empty_class_extension_refutes_type_triple() {
        let mut g = RdfGraph::new();
        g.insert(Triple::new(
            BlankNode::new("r").unwrap(),
            iri(vocab::RDF_TYPE),
            iri("http://e/C"),
        ));
        let mut interp = RdfInterpretation::new(0..2);
        interp.denote_as(iri("http://e/C"), 0);
        interp.denote_as(iri(vocab::RDF_TYPE), 1);
        assert!(!satisfies(&interp, &g, &RdfGraph::new()).unwrap());
    }

    #[test]
    fn missing_denotation_is_a_contract_violation() {
        let mut g = RdfGraph::new();
        g.insert(Triple::new(
            iri("http://e/a"),
            iri("http://e/p"),
            iri("http://e/b"),
        ));
        let interp = RdfInterpretation::new(0..1);
        assert!(matches!(
            satisfies(&interp, &g, &RdfGraph::new()),
            Err(RdfError::NoDenotation(_))
        ));
    }

    #[test]
    fn ground_triple_models_need_the_pair() {
        // one-triple ground graph, models are exactly those with the pair
        let mut g = RdfGraph::new();
        g.insert(Triple::new(
            iri("http://e/c1"),
            iri("http://e/p"),
            iri("http://e/c2"),
        ));
        let schema = RdfGraph::new();
        let models: Vec<_> = enumerate_models(&g, &schema, 0).unwrap().collect();
        let enumeration = enumerate_models(&g, &schema, 0).unwrap();
        let total = enumeration.candidate_count();
        // 3 IRIs, 1 property slot over 3x3 pairs: 512 candidates, half hold
        assert_eq!(total, 512);
        assert_eq!(models.len(), 256);
        for m in &models {
            let p = m.denotation(&iri("http://e/p")).unwrap();
            let c1 = m.denotation(&iri("http://e/c1")).unwrap();
            let c2 = m.denotation(&iri("http://e/c2")).unwrap();
            assert!(m.property_pairs(p).contains(&(c1, c2)));
        }
    }

    #[test]
    fn empty_graph_makes_every_candidate_a_model() {
        let mut schema = RdfGraph::new();
        schema.insert(Triple::new(
            iri("http://e/C1"),
            iri(vocab::RDFS_SUBCLASS_OF),
            iri("http://e/C2"),
        ));
        let g = RdfGraph::new();
        // 3 IRIs + 0 anonymous; 2 class slots over 3 resources: 64 candidates
        let models: Vec<_> = enumerate_models(&g, &schema, 0).unwrap().collect();
        // class_ext(C1) must stay inside class_ext(C2): per resource the
        // member states are (out, C2 only, both) so 3^3 = 27 models
        assert_eq!(models.len(), 27);
    }

    #[test]
    fn caps_are_enforced()  {
        let g = RdfGraph::new();
        assert!(matches!(
            enumerate_models(&g, &RdfGraph::new(), RDF_DOMAIN_CAP + 1),
            Err(RdfError::EnumerationTooLarge(_))
        ));
    }
}
