//! Shared fixtures and independent oracles for the integration suites.
//!
//! The oracles re-derive model sets and satisfaction from their definitions
//! with code paths disjoint from the library's: recursive generate-and-filter
//! enumeration instead of counters, and a standalone satisfaction check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use rand::prelude::IndexedRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use mathlod::fol::{AtomicSentence, Signature, Theory};
use mathlod::ontology::OntologyGraph;
use mathlod::rdf::{
    BlankNode, Iri, Literal, RdfGraph, RdfInterpretation, ResourceId, Subject, Term, Triple,
};
use mathlod::translate::SymbolMapping;
use mathlod::vocab;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR")))
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).expect("fixture file")
}

pub fn fixture_ontology() -> (RdfGraph, OntologyGraph) {
    let graph = mathlod::rdf::parse_turtle(&fixture("divisibility.ttl")).expect("parses");
    let onto = OntologyGraph::from_schema_graph(&graph).expect("lifts");
    (graph, onto)
}

pub fn fixture_mapping() -> SymbolMapping {
    let (mapping, _) =
        mathlod::translate::load_mapping(&fixture("divisibility_mapping.json")).expect("loads");
    mapping
}

pub fn divides_signature() -> Signature {
    let mut sig = Signature::new();
    sig.add_predicate("Divides", 2).unwrap();
    sig.add_constant("m").unwrap();
    sig.add_constant("n").unwrap();
    sig
}

pub fn divides_theory(with_axiom: bool) -> Theory {
    let sig = divides_signature();
    let mut theory = Theory::new(sig.clone());
    if with_axiom {
        let axiom = mathlod::fol::parse_sentence("Divides(m, n)", &sig).unwrap();
        theory.add_axiom(axiom).unwrap();
    }
    theory
}

pub fn divides_sentence() -> AtomicSentence {
    mathlod::fol::parse_sentence("Divides(m, n)", &divides_signature()).unwrap()
}

// ---------------------------------------------------------------------------
// Independent FOL oracle: recursive generate-and-filter
// ---------------------------------------------------------------------------

/// A model in the oracle's own representation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OracleFolModel {
    pub const_map: BTreeMap<String, usize>,
    pub pred_map: BTreeMap<String, BTreeSet<Vec<usize>>>,
}

impl OracleFolModel {
    fn satisfies(&self, sentence: &AtomicSentence) -> bool {
        let tuple: Vec<usize> = sentence
            .args()
            .iter()
            .map(|c| self.const_map[c.as_str()])
            .collect();
        self.pred_map[sentence.predicate()].contains(&tuple)
    }
}

/// Every interpretation over `{0..domain_size-1}` satisfying the theory plus
/// the extra sentence, produced by plain recursion over constant maps and
/// tuple subsets.
pub fn oracle_fol_models(
    theory: &Theory,
    extra: &AtomicSentence,
    domain_size: usize,
) -> Vec<OracleFolModel> {
    let sig = theory.signature();
    let constants: Vec<String> = sig.constants().map(String::from).collect();
    let mut const_maps: Vec<BTreeMap<String, usize>> = vec![BTreeMap::new()];
    for c in &constants {
        let mut next = Vec::new();
        for map in &const_maps {
            for e in 0..domain_size {
                let mut m = map.clone();
                m.insert(c.clone(), e);
                next.push(m);
            }
        }
        const_maps = next;
    }

    let mut pred_maps: Vec<BTreeMap<String, BTreeSet<Vec<usize>>>> = vec![BTreeMap::new()];
    for (name, arity) in sig.predicates() {
        let tuples = cartesian_tuples(domain_size, arity);
        let mut next = Vec::new();
        for map in &pred_maps {
            for subset in subsets(&tuples) {
                let mut m = map.clone();
                m.insert(name.to_string(), subset);
                next.push(m);
            }
        }
        pred_maps = next;
    }

    let sentences: Vec<&AtomicSentence> =
        theory.axioms().chain(std::iter::once(extra)).collect();
    let mut out = Vec::new();
    for const_map in &const_maps {
        for pred_map in &pred_maps {
            let model = OracleFolModel {
                const_map: const_map.clone(),
                pred_map: pred_map.clone(),
            };
            if sentences.iter().all(|s| model.satisfies(s)) {
                out.push(model);
            }
        }
    }
    out
}

fn cartesian_tuples(domain_size: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        let mut next = Vec::new();
        for prefix in &out {
            for e in 0..domain_size {
                let mut t = prefix.clone();
                t.push(e);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

fn subsets(tuples: &[Vec<usize>]) -> Vec<BTreeSet<Vec<usize>>> {
    let mut out: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new()];
    for t in tuples {
        let mut next = out.clone();
        for s in &out {
            let mut with = s.clone();
            with.insert(t.clone());
            next.push(with);
        }
        out = next;
    }
    out
}

/// Converts a library model into the oracle representation.
pub fn as_oracle_model(interp: &mathlod::fol::FolInterpretation, sig: &Signature) -> OracleFolModel {
    let const_map = interp
        .constants()
        .map(|(n, e)| (n.to_string(), e))
        .collect();
    let mut pred_map: BTreeMap<String, BTreeSet<Vec<usize>>> = BTreeMap::new();
    for (name, _) in sig.predicates() {
        pred_map.insert(name.to_string(), interp.tuples(name));
    }
    OracleFolModel { const_map, pred_map }
}

// ---------------------------------------------------------------------------
// Independent RDF satisfaction and enumeration
// ---------------------------------------------------------------------------

/// Standalone satisfaction check written against the definition: an
/// assignment of blank nodes makes every triple hold, and the schema's
/// subclass / subproperty / domain / range conditions are respected.
pub fn oracle_rdf_satisfies(
    interp: &RdfInterpretation,
    graph: &RdfGraph,
    schema: &RdfGraph,
) -> bool {
    for t in schema.triples() {
        let (Subject::Iri(s), Term::Iri(o)) = (&t.subject, &t.object) else {
            continue;
        };
        let ds = interp.denotation(s).expect("denotation");
        let dobj = interp.denotation(o).expect("denotation");
        let ok = match t.predicate.as_str() {
            vocab::RDFS_SUBCLASS_OF => interp
                .class_members(ds)
                .iter()
                .all(|m| interp.class_members(dobj).contains(m)),
            vocab::RDFS_SUBPROPERTY_OF => interp
                .property_pairs(ds)
                .iter()
                .all(|p| interp.property_pairs(dobj).contains(p)),
            vocab::RDFS_DOMAIN => interp
                .property_pairs(ds)
                .iter()
                .all(|(x, _)| interp.class_members(dobj).contains(x)),
            vocab::RDFS_RANGE => interp
                .property_pairs(ds)
                .iter()
                .all(|(_, y)| interp.class_members(dobj).contains(y)),
            _ => true,
        };
        if !ok {
            return false;
        }
    }

    let blanks: Vec<String> = graph
        .blank_nodes()
        .iter()
        .map(|b| b.label().to_string())
        .collect();
    let resources: Vec<ResourceId> = interp.resources().collect();

    // iterative cartesian product over all assignments
    let mut indices = vec![0usize; blanks.len()];
    loop {
        let assignment: BTreeMap<&str, ResourceId> = blanks
            .iter()
            .zip(&indices)
            .map(|(b, i)| (b.as_str(), resources[*i]))
            .collect();
        if all_triples_hold(interp, graph, &assignment) {
            return true;
        }
        // advance the mixed-radix counter
        let mut pos = 0;
        loop {
            if pos == indices.len() {
                return false;
            }
            indices[pos] += 1;
            if indices[pos] < resources.len() {
                break;
            }
            indices[pos] = 0;
            pos += 1;
        }
        if blanks.is_empty() {
            return false;
        }
    }
}

fn all_triples_hold(
    interp: &RdfInterpretation,
    graph: &RdfGraph,
    assignment: &BTreeMap<&str, ResourceId>,
) -> bool {
    graph.triples().all(|t| {
        let s = match &t.subject {
            Subject::Iri(i) => interp.denotation(i).expect("denotation"),
            Subject::Blank(b) => assignment[b.label()],
        };
        let o = match &t.object {
            Term::Iri(i) => interp.denotation(i).expect("denotation"),
            Term::Blank(b) => assignment[b.label()],
            Term::Literal(_) => return false,
        };
        if t.predicate.as_str() == vocab::RDF_TYPE {
            interp.class_members(o).contains(&s)
        } else {
            let p = interp.denotation(&t.predicate).expect("denotation");
            interp.property_pairs(p).contains(&(s, o))
        }
    })
}

/// Re-derives the candidate space of `mathlod::rdf::enumerate_models` and
/// filters it with [`oracle_rdf_satisfies`]: every IRI denotes its own
/// resource (sorted order), extensions vary only on syntactically relevant
/// property and class resources.
pub fn oracle_rdf_models(
    graph: &RdfGraph,
    schema: &RdfGraph,
    domain_size: usize,
) -> Vec<RdfInterpretation> {
    let mut iris: BTreeSet<Iri> = BTreeSet::new();
    for iri in graph.iris().into_iter().chain(schema.iris()) {
        iris.insert(iri.clone());
    }
    let total = iris.len() + domain_size;
    let denotation: BTreeMap<Iri, ResourceId> = iris
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, iri)| (iri, i))
        .collect();

    let mut prop_slots: BTreeSet<ResourceId> = BTreeSet::new();
    let mut class_slots: BTreeSet<ResourceId> = BTreeSet::new();
    for t in graph.triples() {
        if t.predicate.as_str() == vocab::RDF_TYPE {
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

    let pairs: Vec<(ResourceId, ResourceId)> = (0..total)
        .flat_map(|x| (0..total).map(move |y| (x, y)))
        .collect();
    let members: Vec<ResourceId> = (0..total).collect();

    // recursive expansion over the slots
    let mut candidates: Vec<RdfInterpretation> = vec![{
        let mut base = RdfInterpretation::new(0..total);
        for (iri, r) in &denotation {
            base.denote_as(iri.clone(), *r);
        }
        base
    }];
    for &p in &prop_slots {
        let mut next = Vec::new();
        for candidate in &candidates {
            for subset in subsets_generic(&pairs) {
                let mut c = candidate.clone();
                for (x, y) in subset {
                    c.add_property_pair(p, x, y);
                }
                next.push(c);
            }
        }
        candidates = next;
    }
    for &cl in &class_slots {
        let mut next = Vec::new();
        for candidate in &candidates {
            for subset in subsets_generic(&members) {
                let mut c = candidate.clone();
                for m in subset {
                    c.add_class_member(cl, m);
                }
                next.push(c);
            }
        }
        candidates = next;
    }

    candidates
        .into_iter()
        .filter(|c| oracle_rdf_satisfies(c, graph, schema))
        .collect()
}

fn subsets_generic<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![Vec::new()];
    for item in items {
        let mut next = out.clone();
        for s in &out {
            let mut with = s.clone();
            with.push(item.clone());
            next.push(with);
        }
        out = next;
    }
    out
}

// ---------------------------------------------------------------------------
// Random graph generation (seeded)
// ---------------------------------------------------------------------------

const IRI_POOL: [&str; 6] = [
    "http://example.org/terms#alpha",
    "http://example.org/terms#beta",
    "http://example.org/terms#gamma",
    "http://example.org/data/one",
    "http://example.org/data/two",
    "http://other.net/x",
];
const PRED_POOL: [&str; 4] = [
    "http://example.org/terms#p",
    "http://example.org/terms#q",
    "http://example.org/terms#r",
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type",
];
const LABEL_POOL: [&str; 5] = ["b1", "node2", "x", "y_0", "rel"];

/// A random graph within the supported Turtle subset: ≤ `max_triples`
/// triples over small IRI, blank-label and literal pools.
pub fn random_graph(rng: &mut ChaCha8Rng, max_triples: usize) -> RdfGraph {
    let mut g = RdfGraph::new();
    g.add_prefix("ex", Iri::new("http://example.org/terms#").unwrap())
        .unwrap();
    g.add_prefix("d", Iri::new("http://example.org/data/").unwrap())
        .unwrap();
    if rng.random_bool(0.5) {
        g.add_prefix("rdf", Iri::new(vocab::RDF_NS).unwrap()).unwrap();
    }
    let n = rng.random_range(1..=max_triples);
    for _ in 0..n {
        let subject: Subject = if rng.random_bool(0.4) {
            BlankNode::new(*LABEL_POOL.choose(rng).unwrap()).unwrap().into()
        } else {
            Iri::new(*IRI_POOL.choose(rng).unwrap()).unwrap().into()
        };
        let predicate = Iri::new(*PRED_POOL.choose(rng).unwrap()).unwrap();
        let object: Term = match rng.random_range(0..4) {
            0 => BlankNode::new(*LABEL_POOL.choose(rng).unwrap()).unwrap().into(),
            1 => Iri::new(*IRI_POOL.choose(rng).unwrap()).unwrap().into(),
            2 => {
                let lex = format!("value {}", rng.random_range(0..10));
                match rng.random_range(0..3) {
                    0 => Literal::plain(lex).into(),
                    1 => Literal::lang_tagged(lex, "en").into(),
                    _ => Literal::typed(
                        lex,
                        Iri::new("http://www.w3.org/2001/XMLSchema#string").unwrap(),
                    )
                    .into(),
                }
            }
            _ => Literal::plain(format!("escaped \"{}\"\n", rng.random_range(0..10))).into(),
        };
        g.insert(Triple::new(subject, predicate, object));
    }
    g
}

// ---------------------------------------------------------------------------
// Random lexicon generation (seeded)
// ---------------------------------------------------------------------------

/// A small random lexicon: 1..=3 verb entries, each with a canonical form,
/// up to two inflected forms, one frame and at most one sense bound within
/// that frame.
pub fn random_lexicon(rng: &mut ChaCha8Rng, index: usize) -> mathlod::lexicon::Lexicon {
    use mathlod::lexicon::{
        Form, FrameType, LexicalEntry, Lexicon, OntologyMapping, PartOfSpeech, SlotName,
        SyntacticArgument, SyntacticFrame,
    };

    let ns = |local: &str| Iri::new(format!("{}{}", vocab::LEXICON_NS, local)).unwrap();
    let omp = |local: &str| Iri::new(format!("{}{}", vocab::OMP_NS, local)).unwrap();
    let words = ["divide", "intersect", "contain", "equal", "bound"];
    let features = [("person", "thirdPerson"), ("number", "plural"), ("tense", "past")];

    let mut lexicon = Lexicon::new("en", Iri::new(vocab::LEXICON_NS).unwrap());
    for e in 0..rng.random_range(1..=3usize) {
        let base = format!("gen{index}-e{e}");
        let word = words[rng.random_range(0..words.len())];
        let canonical = Form::new(ns(&format!("{base}-form0")), word, "en");
        let mut other_forms = Vec::new();
        for f in 0..rng.random_range(0..=2usize) {
            let mut form = Form::new(
                ns(&format!("{base}-form{}", f + 1)),
                format!("{word}{}", "s".repeat(f + 1)),
                "en",
            );
            if rng.random_bool(0.7) {
                let (k, v) = features[rng.random_range(0..features.len())];
                form = form.with_feature(k, v);
            }
            other_forms.push(form);
        }

        let frame_type = match rng.random_range(0..3) {
            0 => FrameType::Transitive,
            1 => FrameType::TransitivePp,
            _ => FrameType::NounPp,
        };
        let mut slots = vec![SyntacticArgument {
            id: ns(&format!("{base}-subj")),
            slot: SlotName::Subject,
        }];
        if matches!(frame_type, FrameType::Transitive | FrameType::TransitivePp) {
            slots.push(SyntacticArgument {
                id: ns(&format!("{base}-obj")),
                slot: SlotName::DirectObject,
            });
        }
        if matches!(frame_type, FrameType::TransitivePp | FrameType::NounPp) {
            slots.push(SyntacticArgument {
                id: ns(&format!("{base}-pp")),
                slot: SlotName::PrepositionalObject,
            });
        }
        let preposition = matches!(frame_type, FrameType::TransitivePp | FrameType::NounPp)
            .then(|| ["by", "of", "at"][rng.random_range(0..3)].to_string());
        let frame = SyntacticFrame::new(
            ns(&format!("{base}-frame")),
            frame_type,
            slots.clone(),
            preposition,
        )
        .unwrap();

        let mut senses = Vec::new();
        if rng.random_bool(0.8) {
            let mut slot_bindings = BTreeMap::new();
            let mut slot_role_types = BTreeMap::new();
            for (i, arg) in slots.iter().enumerate() {
                if rng.random_bool(0.8) {
                    slot_bindings.insert(arg.slot, omp(&format!("prop{i}")));
                    if rng.random_bool(0.5) {
                        slot_role_types.insert(
                            arg.slot,
                            mathlod::ontology::ConceptId::new(omp(&format!("Role{i}"))),
                        );
                    }
                }
            }
            senses.push(OntologyMapping {
                id: ns(&format!("{base}-sense")),
                relationship_class: mathlod::ontology::ConceptId::new(omp("Relationship")),
                slot_bindings,
                slot_role_types,
            });
        }

        lexicon
            .insert(LexicalEntry {
                id: ns(&base),
                part_of_speech: PartOfSpeech::Verb,
                canonical_form: canonical,
                other_forms,
                frames: vec![frame],
                senses,
            })
            .unwrap();
    }
    lexicon
}

/// The same graph with every blank label consistently renamed.
pub fn shuffle_blank_labels(graph: &RdfGraph, suffix: &str) -> RdfGraph {
    let mut renamed = RdfGraph::new();
    for (prefix, ns) in graph.prefixes() {
        renamed.add_prefix(prefix, ns.clone()).unwrap();
    }
    let rename = |b: &BlankNode| BlankNode::new(format!("{}{}", b.label(), suffix)).unwrap();
    for t in graph.triples() {
        let subject: Subject = match &t.subject {
            Subject::Blank(b) => rename(b).into(),
            Subject::Iri(i) => i.clone().into(),
        };
        let object: Term = match &t.object {
            Term::Blank(b) => rename(b).into(),
            other => other.clone(),
        };
        renamed.insert(Triple::new(subject, t.predicate.clone(), object));
    }
    renamed
}
