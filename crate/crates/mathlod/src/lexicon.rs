//! The linguistic layer: lexical entries with forms, syntactic frames and
//! ontology mappings; controlled phrase parsing into relationship-instance
//! graphs; verbalization of such graphs; and the LLOD Turtle lexicon format.
//!
//! A lexicon is monolingual. The phrase grammar is a controlled pattern,
//! `<subject> <entry span> <object> [<preposition> <pp-object>]`, where
//! argument slots are single tokens or quoted multi-token spans and the
//! entry span is matched longest-first against the written forms.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use indexmap::IndexMap;
use thiserror::Error;

use crate::ontology::{ConceptId, OntologyGraph};
use crate::rdf::{
    self, isomorphic, parse_turtle, serialize_turtle, BlankNode, Iri, Literal, RdfGraph, Subject,
    Term, Triple,
};
use crate::vocab;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartOfSpeech {
    Verb,
    Noun,
    Adjective,
    Preposition,
}

impl PartOfSpeech {
    fn lexinfo_iri(self) -> Iri {
        let local = match self {
            PartOfSpeech::Verb => "verb",
            PartOfSpeech::Noun => "noun",
            PartOfSpeech::Adjective => "adjective",
            PartOfSpeech::Preposition => "preposition",
        };
        Iri::new(format!("{}{}", vocab::LEXINFO_NS, local)).expect("valid IRI")
    }

    fn from_lexinfo(iri: &Iri) -> Option<Self> {
        match iri.as_str().strip_prefix(vocab::LEXINFO_NS)? {
            "verb" => Some(PartOfSpeech::Verb),
            "noun" => Some(PartOfSpeech::Noun),
            "adjective" => Some(PartOfSpeech::Adjective),
            "preposition" => Some(PartOfSpeech::Preposition),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SlotName {
    Subject,
    DirectObject,
    PrepositionalObject,
}

impl fmt::Display for SlotName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SlotName::Subject => "subject",
            SlotName::DirectObject => "direct_object",
            SlotName::PrepositionalObject => "prepositional_object",
        };
        f.write_str(s)
    }
}

impl SlotName {
    fn lexinfo_property(self) -> Iri {
        let s = match self {
            SlotName::Subject => vocab::LEXINFO_SUBJECT,
            SlotName::DirectObject => vocab::LEXINFO_DIRECT_OBJECT,
            SlotName::PrepositionalObject => vocab::LEXINFO_PREPOSITIONAL_OBJECT,
        };
        Iri::new(s).expect("valid IRI")
    }

    fn lexinfo_class(self) -> Iri {
        let s = match self {
            SlotName::Subject => vocab::LEXINFO_CLASS_SUBJECT,
            SlotName::DirectObject => vocab::LEXINFO_CLASS_DIRECT_OBJECT,
            SlotName::PrepositionalObject => vocab::LEXINFO_CLASS_PREPOSITIONAL_OBJECT,
        };
        Iri::new(s).expect("valid IRI")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrameType {
    Transitive,
    TransitivePp,
    NounPp,
}

impl FrameType {
    fn lexinfo_iri(self) -> Iri {
        let s = match self {
            FrameType::Transitive => vocab::LEXINFO_TRANSITIVE_FRAME,
            FrameType::TransitivePp => vocab::LEXINFO_TRANSITIVE_PP_FRAME,
            FrameType::NounPp => vocab::LEXINFO_NOUN_PP_FRAME,
        };
        Iri::new(s).expect("valid IRI")
    }

    fn required_slots(self) -> &'static [SlotName] {
        match self {
            FrameType::Transitive => &[SlotName::Subject, SlotName::DirectObject],
            FrameType::TransitivePp => &[
                SlotName::Subject,
                SlotName::DirectObject,
                SlotName::PrepositionalObject,
            ],
            FrameType::NounPp => &[SlotName::Subject, SlotName::PrepositionalObject],
        }
    }

    fn needs_preposition(self) -> bool {
        matches!(self, FrameType::TransitivePp | FrameType::NounPp)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    pub id: Iri,
    pub written_rep: String,
    pub language: String,
    /// grammatical feature -> value, e.g. `person -> thirdPerson`
    pub features: BTreeMap<String, String>,
}

impl Form {
    pub fn new(id: Iri, written_rep: impl Into<String>, language: impl Into<String>) -> Self {
        Form {
            id,
            written_rep: written_rep.into(),
            language: language.into(),
            features: BTreeMap::new(),
        }
    }

    pub fn with_feature(mut self, key: &str, value: &str) -> Self {
        self.features.insert(key.to_string(), value.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntacticArgument {
    pub id: Iri,
    pub slot: SlotName,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntacticFrame {
    pub id: Iri,
    pub frame_type: FrameType,
    pub slots: BTreeMap<SlotName, SyntacticArgument>,
    pub preposition: Option<String>,
}

impl SyntacticFrame {
    pub fn new(
        id: Iri,
        frame_type: FrameType,
        slots: Vec<SyntacticArgument>,
        preposition: Option<String>,
    ) -> Result<Self, LexiconError> {
        let mut map = BTreeMap::new();
        let mut ids = HashSet::new();
        for arg in slots {
            if !ids.insert(arg.id.clone()) {
                return Err(LexiconError::Structural(format!(
                    "duplicate syntactic argument `{}`",
                    arg.id
                )));
            }
            if map.insert(arg.slot, arg).is_some() {
                return Err(LexiconError::Structural(format!(
                    "frame `{id}` declares a slot twice"
                )));
            }
        }
        for required in frame_type.required_slots() {
            if !map.contains_key(required) {
                return Err(LexiconError::Structural(format!(
                    "frame `{id}` is missing its {required} slot"
                )));
            }
        }
        if frame_type.needs_preposition() && preposition.is_none() {
            return Err(LexiconError::Structural(format!(
                "frame `{id}` needs a preposition"
            )));
        }
        Ok(SyntacticFrame {
            id,
            frame_type,
            slots: map,
            preposition,
        })
    }

    fn argument(&self, slot: SlotName) -> Option<&SyntacticArgument> {
        self.slots.get(&slot)
    }

    fn slot_of_argument(&self, id: &Iri) -> Option<SlotName> {
        self.slots.values().find(|a| &a.id == id).map(|a| a.slot)
    }
}

/// The sense of an entry: which relationship class it expresses and how the
/// frame slots bind to the relationship's argument properties and role
/// concepts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OntologyMapping {
    pub id: Iri,
    pub relationship_class: ConceptId,
    pub slot_bindings: BTreeMap<SlotName, Iri>,
    pub slot_role_types: BTreeMap<SlotName, ConceptId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexicalEntry {
    pub id: Iri,
    pub part_of_speech: PartOfSpeech,
    pub canonical_form: Form,
    pub other_forms: Vec<Form>,
    pub frames: Vec<SyntacticFrame>,
    pub senses: Vec<OntologyMapping>,
}

impl LexicalEntry {
    pub fn forms(&self) -> impl Iterator<Item = &Form> {
        std::iter::once(&self.canonical_form).chain(self.other_forms.iter())
    }

    /// The first frame whose slots cover the sense's bindings.
    fn frame_for_sense(&self, sense: &OntologyMapping) -> Option<&SyntacticFrame> {
        self.frames.iter().find(|frame| {
            sense
                .slot_bindings
                .keys()
                .chain(sense.slot_role_types.keys())
                .all(|slot| frame.slots.contains_key(slot))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    pub language: String,
    pub namespace: Iri,
    entries: IndexMap<Iri, LexicalEntry>,
    /// triples a loader saw but could not interpret; never re-serialized
    extras: Vec<Triple>,
    /// human-readable notes about repairs applied while loading
    repairs: Vec<String>,
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("phrase must contain at least 3 tokens")]
    PhraseTooShort,
    #[error("no lexical entry matches any span of `{0}`")]
    NoMatchingEntry(String),
    #[error("no syntactic frame matches the shape of `{phrase}`")]
    NoFrameMatch { phrase: String },
    #[error("token `{0}` is not in the entity map")]
    UnknownEntity(String),
    #[error("ambiguous phrase; matching senses: {}", .0.join(", "))]
    Ambiguous(Vec<String>),
    #[error("no lexicalization for the instance ({0})")]
    MissingLexicalization(String),
    #[error("expected exactly one lexicalized relationship node, found {0}")]
    RelationshipNodeCount(usize),
    #[error("slot {0} has no value in the instance graph")]
    UnboundSlot(SlotName),
    #[error("no label for IRI `{0}`")]
    MissingLabel(String),
    #[error("lexicon structure: {0}")]
    Structural(String),
    #[error(transparent)]
    Rdf(#[from] rdf::RdfError),
}

impl Lexicon {
    pub fn new(language: impl Into<String>, namespace: Iri) -> Self {
        Lexicon {
            language: language.into(),
            namespace,
            entries: IndexMap::new(),
            extras: Vec::new(),
            repairs: Vec::new(),
        }
    }

    pub fn insert(&mut self, entry: LexicalEntry) -> Result<(), LexiconError> {
        if self.entries.contains_key(&entry.id) {
            return Err(LexiconError::Structural(format!(
                "duplicate entry `{}`",
                entry.id
            )));
        }
        for form in entry.forms() {
            if form.written_rep.is_empty() {
                return Err(LexiconError::Structural(format!(
                    "form `{}` has an empty written representation",
                    form.id
                )));
            }
            if form.language != self.language {
                return Err(LexiconError::Structural(format!(
                    "form `{}` is tagged `{}` in a `{}` lexicon",
                    form.id, form.language, self.language
                )));
            }
        }
        self.entries.insert(entry.id.clone(), entry);
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexicalEntry> {
        self.entries.values()
    }

    pub fn entry(&self, id: &Iri) -> Option<&LexicalEntry> {
        self.entries.get(id)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn extras(&self) -> &[Triple] {
        &self.extras
    }

    pub fn repairs(&self) -> &[String] {
        &self.repairs
    }

    /// Case-insensitive match of a token (or quoted span) against every
    /// written representation, in entry order.
    pub fn find_entry_by_form(&self, token: &str) -> Vec<(&LexicalEntry, &Form)> {
        let needle = token.to_lowercase();
        let mut out = Vec::new();
        for entry in self.entries.values() {
            for form in entry.forms() {
                if form.written_rep.to_lowercase() == needle {
                    out.push((entry, form));
                }
            }
        }
        out
    }

    /// Referential-integrity problems of the lexicon's senses against an
    /// ontology: unknown relationship classes, unknown argument properties,
    /// role types that contradict the bound property's declared role.
    pub fn check_against_ontology(&self, onto: &OntologyGraph) -> Vec<String> {
        let mut out = Vec::new();
        for entry in self.entries.values() {
            for sense in &entry.senses {
                let Some(rel) = onto.lookup_relationship(&sense.relationship_class) else {
                    out.push(format!(
                        "sense `{}`: unknown relationship class `{}`",
                        sense.id, sense.relationship_class
                    ));
                    continue;
                };
                for (slot, property) in &sense.slot_bindings {
                    if rel.argument_by_property(property).is_none() {
                        out.push(format!(
                            "sense `{}`: {slot} binds `{property}`, not an argument of `{}`",
                            sense.id, rel.id
                        ));
                    }
                }
                for (slot, role) in &sense.slot_role_types {
                    let declared = sense
                        .slot_bindings
                        .get(slot)
                        .and_then(|p| rel.argument_by_property(p))
                        .map(|a| &a.role_concept);
                    if declared.is_some_and(|d| d != role) {
                        out.push(format!(
                            "sense `{}`: {slot} role type `{role}` does not match the declared role",
                            sense.id
                        ));
                    }
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Phrase parsing
// ---------------------------------------------------------------------------

/// Whitespace tokenization; double-quoted spans become single tokens.
fn tokenize(phrase: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut quoted = false;
    for c in phrase.chars() {
        match c {
            '"' => {
                if quoted && !current.is_empty() {
                    out.push(std::mem::take(&mut current));
                }
                quoted = !quoted;
            }
            c if c.is_whitespace() && !quoted => {
                if !current.is_empty() {
                    out.push(std::mem::take(&mut current));
                }
            }
            c => current.push(c),
        }
    }
    if !current.is_empty() {
        out.push(current);
    }
    out
}

struct PhraseMatch<'a> {
    sense: &'a OntologyMapping,
    slot_tokens: BTreeMap<SlotName, String>,
}

/// Parses a controlled phrase into a relationship-instance graph: a fresh
/// blank node typed by the matched sense's relationship class, plus one
/// triple per bound slot with objects drawn from `entity_map`.
pub fn parse_phrase(
    lexicon: &Lexicon,
    onto: &OntologyGraph,
    phrase: &str,
    entity_map: &BTreeMap<String, Iri>,
) -> Result<RdfGraph, LexiconError> {
    let tokens = tokenize(phrase);
    if tokens.len() < 3 {
        return Err(LexiconError::PhraseTooShort);
    }

    let mut matches: Vec<PhraseMatch> = Vec::new();
    let mut entry_seen = false;
    for start in 1..tokens.len() {
        // longest entry span first
        for len in (1..tokens.len() - start).rev() {
            let span = tokens[start..start + len].join(" ");
            let found = lexicon.find_entry_by_form(&span);
            if found.is_empty() {
                continue;
            }
            entry_seen = true;
            let mut already: HashSet<*const LexicalEntry> = HashSet::new();
            for (entry, _) in found {
                if already.insert(entry as *const _) {
                    collect_matches(entry, &tokens, start, len, &mut matches);
                }
            }
        }
    }

    if matches.is_empty() {
        if entry_seen {
            return Err(LexiconError::NoFrameMatch {
                phrase: phrase.to_string(),
            });
        }
        return Err(LexiconError::NoMatchingEntry(phrase.to_string()));
    }
    // distinct senses are a hard ambiguity; the caller disambiguates
    let mut sense_ids: Vec<String> = matches.iter().map(|m| m.sense.id.to_string()).collect();
    sense_ids.dedup();
    if sense_ids.len() > 1 {
        return Err(LexiconError::Ambiguous(sense_ids));
    }
    let chosen = &matches[0];

    if onto
        .lookup_relationship(&chosen.sense.relationship_class)
        .is_none()
    {
        return Err(LexiconError::Structural(format!(
            "sense `{}` references unknown relationship class `{}`",
            chosen.sense.id, chosen.sense.relationship_class
        )));
    }

    let mut graph = RdfGraph::new();
    graph.add_prefix("rdf", Iri::new(vocab::RDF_NS).expect("valid IRI"))?;
    graph.add_prefix("rdfs", Iri::new(vocab::RDFS_NS).expect("valid IRI"))?;
    graph.add_prefix("owl", Iri::new(vocab::OWL_NS).expect("valid IRI"))?;
    graph.add_prefix("omp", Iri::new(vocab::OMP_NS).expect("valid IRI"))?;
    graph.add_prefix("", lexicon.namespace.clone())?;

    let node = BlankNode::new("rel").expect("valid label");
    graph.insert(Triple::new(
        node.clone(),
        Iri::new(vocab::RDF_TYPE).expect("valid IRI"),
        chosen.sense.relationship_class.iri().clone(),
    ));
    for (slot, property) in &chosen.sense.slot_bindings {
        let token = &chosen.slot_tokens[slot];
        let entity = entity_map
            .get(token)
            .ok_or_else(|| LexiconError::UnknownEntity(token.clone()))?;
        graph.insert(Triple::new(node.clone(), property.clone(), entity.clone()));
    }
    Ok(graph)
}

fn collect_matches<'a>(
    entry: &'a LexicalEntry,
    tokens: &[String],
    start: usize,
    len: usize,
    matches: &mut Vec<PhraseMatch<'a>>,
) {
    let after = start + len;
    for frame in &entry.frames {
        let slot_tokens: Option<BTreeMap<SlotName, String>> = match frame.frame_type {
            FrameType::Transitive => (start == 1 && after + 1 == tokens.len()).then(|| {
                BTreeMap::from([
                    (SlotName::Subject, tokens[0].clone()),
                    (SlotName::DirectObject, tokens[after].clone()),
                ])
            }),
            FrameType::TransitivePp => {
                let shape_ok = start == 1
                    && after + 3 == tokens.len()
                    && Some(tokens[after + 1].as_str()) == frame.preposition.as_deref();
                shape_ok.then(|| {
                    BTreeMap::from([
                        (SlotName::Subject, tokens[0].clone()),
                        (SlotName::DirectObject, tokens[after].clone()),
                        (SlotName::PrepositionalObject, tokens[after + 2].clone()),
                    ])
                })
            }
            FrameType::NounPp => {
                let shape_ok = start == 1
                    && after + 2 == tokens.len()
                    && Some(tokens[after].as_str()) == frame.preposition.as_deref();
                shape_ok.then(|| {
                    BTreeMap::from([
                        (SlotName::Subject, tokens[0].clone()),
                        (SlotName::PrepositionalObject, tokens[after + 1].clone()),
                    ])
                })
            }
        };
        let Some(slot_tokens) = slot_tokens else {
            continue;
        };
        for sense in &entry.senses {
            let compatible = !sense.slot_bindings.is_empty()
                && sense
                    .slot_bindings
                    .keys()
                    .all(|slot| frame.slots.contains_key(slot) && slot_tokens.contains_key(slot))
                && entry.frame_for_sense(sense).map(|f| f.id == frame.id) == Some(true);
            if compatible {
                matches.push(PhraseMatch {
                    sense,
                    slot_tokens: slot_tokens.clone(),
                });
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Verbalization
// ---------------------------------------------------------------------------

/// Renders a relationship-instance graph back into a controlled phrase.
///
/// The instance must contain exactly one node whose type has a
/// lexicalization; the first matching entry and its first matching sense
/// are used. Verbs prefer a declared third-person form over the canonical
/// one.
pub fn verbalize(
    lexicon: &Lexicon,
    _onto: &OntologyGraph,
    instance: &RdfGraph,
    label_map: &BTreeMap<Iri, String>,
) -> Result<String, LexiconError> {
    let rdf_type = Iri::new(vocab::RDF_TYPE).expect("valid IRI");

    // all (node, lexicalized sense) pairs of the instance
    let mut nodes: Vec<(&Subject, &LexicalEntry, &OntologyMapping)> = Vec::new();
    let mut typed_nodes = 0;
    for triple in instance.triples() {
        if triple.predicate != rdf_type {
            continue;
        }
        let Term::Iri(class) = &triple.object else {
            continue;
        };
        typed_nodes += 1;
        let class_id = ConceptId::new(class.clone());
        let found = lexicon.entries.values().find_map(|entry| {
            entry
                .senses
                .iter()
                .find(|sense| sense.relationship_class == class_id)
                .map(|sense| (entry, sense))
        });
        if let Some((entry, sense)) = found {
            nodes.push((&triple.subject, entry, sense));
        }
    }
    if nodes.is_empty() {
        return Err(LexiconError::MissingLexicalization(format!(
            "{typed_nodes} typed node(s), none lexicalized"
        )));
    }
    if nodes.len() > 1 {
        return Err(LexiconError::RelationshipNodeCount(nodes.len()));
    }
    let (node, entry, sense) = nodes[0];

    let frame = entry
        .frame_for_sense(sense)
        .ok_or_else(|| LexiconError::Structural(format!("sense `{}` has no frame", sense.id)))?;

    let mut slot_labels: BTreeMap<SlotName, String> = BTreeMap::new();
    for (slot, property) in &sense.slot_bindings {
        let object = instance
            .triples()
            .find(|t| &t.subject == node && &t.predicate == property)
            .map(|t| &t.object)
            .ok_or(LexiconError::UnboundSlot(*slot))?;
        let Term::Iri(iri) = object else {
            return Err(LexiconError::UnboundSlot(*slot));
        };
        let label = label_map
            .get(iri)
            .ok_or_else(|| LexiconError::MissingLabel(iri.to_string()))?;
        slot_labels.insert(*slot, quote_if_spaced(label));
    }

    let rendered_entry = match entry.part_of_speech {
        PartOfSpeech::Verb => third_person_form(entry).written_rep.clone(),
        _ => entry.canonical_form.written_rep.clone(),
    };

    let slot = |s: SlotName| -> Result<&String, LexiconError> {
        slot_labels.get(&s).ok_or(LexiconError::UnboundSlot(s))
    };
    let preposition = frame.preposition.as_deref().unwrap_or_default();
    let phrase = match frame.frame_type {
        FrameType::Transitive => format!(
            "{} {} {}",
            slot(SlotName::Subject)?,
            rendered_entry,
            slot(SlotName::DirectObject)?
        ),
        FrameType::TransitivePp => format!(
            "{} {} {} {} {}",
            slot(SlotName::Subject)?,
            rendered_entry,
            slot(SlotName::DirectObject)?,
            preposition,
            slot(SlotName::PrepositionalObject)?
        ),
        FrameType::NounPp => format!(
            "{} {} {} {}",
            slot(SlotName::Subject)?,
            rendered_entry,
            preposition,
            slot(SlotName::PrepositionalObject)?
        ),
    };
    Ok(phrase)
}

fn quote_if_spaced(label: &str) -> String {
    if label.contains(char::is_whitespace) {
        format!("\"{label}\"")
    } else {
        label.to_string()
    }
}

fn third_person_form(entry: &LexicalEntry) -> &Form {
    entry
        .forms()
        .find(|f| f.features.get("person").map(String::as_str) == Some("thirdPerson"))
        .unwrap_or(&entry.canonical_form)
}

// ---------------------------------------------------------------------------
// LLOD serialization
// ---------------------------------------------------------------------------

fn llod_iri(s: &str) -> Iri {
    Iri::new(s).expect("valid vocabulary IRI")
}

/// Serializes the lexicon in the LLOD Turtle shape with the five standard
/// prefixes. Deterministic: entries in insertion order, forms, frames and
/// senses in declaration order, generated blank labels per sense.
pub fn serialize_llod(lexicon: &Lexicon) -> Result<String, LexiconError> {
    let graph = llod_graph(lexicon)?;
    Ok(serialize_turtle(&graph)?)
}

/// The lexicon's LLOD RDF graph (what [`serialize_llod`] prints).
pub fn llod_graph(lexicon: &Lexicon) -> Result<RdfGraph, LexiconError> {
    let mut g = RdfGraph::new();
    g.add_prefix("", lexicon.namespace.clone())?;
    g.add_prefix("omp", llod_iri(vocab::OMP_NS))?;
    g.add_prefix("ontolex", llod_iri(vocab::ONTOLEX_NS))?;
    g.add_prefix("synsem", llod_iri(vocab::SYNSEM_NS))?;
    g.add_prefix("lexinfo", llod_iri(vocab::LEXINFO_NS))?;

    let rdf_type = llod_iri(vocab::RDF_TYPE);
    let mut sense_counter = 0;

    for entry in lexicon.entries.values() {
        g.insert(Triple::new(
            entry.id.clone(),
            rdf_type.clone(),
            llod_iri(vocab::ONTOLEX_LEXICAL_ENTRY),
        ));
        g.insert(Triple::new(
            entry.id.clone(),
            llod_iri(vocab::LEXINFO_PART_OF_SPEECH),
            entry.part_of_speech.lexinfo_iri(),
        ));
        g.insert(Triple::new(
            entry.id.clone(),
            llod_iri(vocab::ONTOLEX_CANONICAL_FORM),
            entry.canonical_form.id.clone(),
        ));
        for form in &entry.other_forms {
            g.insert(Triple::new(
                entry.id.clone(),
                llod_iri(vocab::ONTOLEX_OTHER_FORM),
                form.id.clone(),
            ));
        }
        for frame in &entry.frames {
            g.insert(Triple::new(
                entry.id.clone(),
                llod_iri(vocab::SYNSEM_SYN_BEHAVIOR),
                frame.id.clone(),
            ));
        }
        for sense in &entry.senses {
            g.insert(Triple::new(
                entry.id.clone(),
                llod_iri(vocab::ONTOLEX_SENSE),
                sense.id.clone(),
            ));
        }

        for form in entry.forms() {
            g.insert(Triple::new(
                form.id.clone(),
                rdf_type.clone(),
                llod_iri(vocab::ONTOLEX_FORM),
            ));
            g.insert(Triple::new(
                form.id.clone(),
                llod_iri(vocab::ONTOLEX_WRITTEN_REP),
                Literal::lang_tagged(&form.written_rep, &form.language),
            ));
            for (key, value) in &form.features {
                g.insert(Triple::new(
                    form.id.clone(),
                    llod_iri(&format!("{}{}", vocab::LEXINFO_NS, key)),
                    llod_iri(&format!("{}{}", vocab::LEXINFO_NS, value)),
                ));
            }
        }

        for frame in &entry.frames {
            g.insert(Triple::new(
                frame.id.clone(),
                rdf_type.clone(),
                frame.frame_type.lexinfo_iri(),
            ));
            for (slot, argument) in &frame.slots {
                g.insert(Triple::new(
                    frame.id.clone(),
                    slot.lexinfo_property(),
                    argument.id.clone(),
                ));
            }
            if let Some(p) = &frame.preposition {
                g.insert(Triple::new(
                    frame.id.clone(),
                    llod_iri(vocab::SYNSEM_MARKER),
                    Literal::plain(p),
                ));
            }
            for (slot, argument) in &frame.slots {
                g.insert(Triple::new(
                    argument.id.clone(),
                    rdf_type.clone(),
                    slot.lexinfo_class(),
                ));
            }
        }

        for sense in &entry.senses {
            sense_counter += 1;
            g.insert(Triple::new(
                sense.id.clone(),
                rdf_type.clone(),
                llod_iri(vocab::ONTOLEX_LEXICAL_SENSE),
            ));
            g.insert(Triple::new(
                sense.id.clone(),
                rdf_type.clone(),
                llod_iri(vocab::SYNSEM_ONTO_MAP),
            ));
            g.insert(Triple::new(
                sense.id.clone(),
                llod_iri(vocab::ONTOLEX_REFERENCE),
                sense.relationship_class.iri().clone(),
            ));

            let frame = entry.frame_for_sense(sense).ok_or_else(|| {
                LexiconError::Structural(format!("sense `{}` has no matching frame", sense.id))
            })?;
            let relationship_var =
                BlankNode::new(format!("rel{sense_counter}")).expect("valid label");

            let submap = llod_iri(vocab::SYNSEM_SUBMAP);
            let onto_map = llod_iri(vocab::SYNSEM_ONTO_MAP);
            let reference = llod_iri(vocab::ONTOLEX_REFERENCE);
            let is_a = llod_iri(vocab::SYNSEM_IS_A);
            let mut block_counter = 0;
            let mut new_block = |g: &mut RdfGraph| {
                block_counter += 1;
                let b = BlankNode::new(format!("sub{sense_counter}_{block_counter}"))
                    .expect("valid label");
                g.insert(Triple::new(sense.id.clone(), submap.clone(), b.clone()));
                g.insert(Triple::new(b.clone(), rdf_type.clone(), onto_map.clone()));
                b
            };

            // the relationship variable itself
            let b = new_block(&mut g);
            g.insert(Triple::new(
                b.clone(),
                reference.clone(),
                sense.relationship_class.iri().clone(),
            ));
            g.insert(Triple::new(b, is_a.clone(), relationship_var.clone()));

            for (slot, property) in &sense.slot_bindings {
                let argument = frame.argument(*slot).ok_or_else(|| {
                    LexiconError::Structural(format!(
                        "sense `{}` binds {slot}, absent from frame `{}`",
                        sense.id, frame.id
                    ))
                })?;
                let b = new_block(&mut g);
                g.insert(Triple::new(b.clone(), reference.clone(), property.clone()));
                g.insert(Triple::new(
                    b.clone(),
                    llod_iri(vocab::SYNSEM_SUBJ_OF_PROP),
                    relationship_var.clone(),
                ));
                g.insert(Triple::new(
                    b,
                    llod_iri(vocab::SYNSEM_OBJ_OF_PROP),
                    argument.id.clone(),
                ));
            }

            for (slot, role) in &sense.slot_role_types {
                let argument = frame.argument(*slot).ok_or_else(|| {
                    LexiconError::Structural(format!(
                        "sense `{}` types {slot}, absent from frame `{}`",
                        sense.id, frame.id
                    ))
                })?;
                let b = new_block(&mut g);
                g.insert(Triple::new(b.clone(), reference.clone(), role.iri().clone()));
                g.insert(Triple::new(b, is_a.clone(), argument.id.clone()));
            }
        }
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// LLOD loading
// ---------------------------------------------------------------------------

/// Loads a lexicon from LLOD Turtle text.
///
/// Known irregularities are repaired and recorded: a transitive-PP frame
/// without preposition or PP slot is downgraded to plain transitive, and
/// sense sub-mappings that point at undeclared syntactic arguments are
/// skipped. Triples outside the recognized shape are preserved as opaque
/// extras (and never re-serialized). The lexicon language is inferred from
/// the written-representation language tags.
pub fn load_llod(text: &str) -> Result<Lexicon, LexiconError> {
    let graph = parse_turtle(text)?;
    lexicon_from_graph(&graph)
}

fn lexicon_from_graph(graph: &RdfGraph) -> Result<Lexicon, LexiconError> {
    let rdf_type = llod_iri(vocab::RDF_TYPE);
    let namespace = graph
        .namespace("")
        .cloned()
        .unwrap_or_else(|| llod_iri(vocab::LEXICON_NS));

    let triples: Vec<&Triple> = graph.triples().collect();
    let mut consumed = vec![false; triples.len()];

    let subject_iri = |t: &Triple| match &t.subject {
        Subject::Iri(i) => Some(i.clone()),
        Subject::Blank(_) => None,
    };
    let object_iri = |t: &Triple| match &t.object {
        Term::Iri(i) => Some(i.clone()),
        _ => None,
    };
    let objects_of = |subject: &Term, predicate: &str| -> Vec<(usize, Term)> {
        triples
            .iter()
            .enumerate()
            .filter(|(_, t)| {
                Term::from(t.subject.clone()) == *subject && t.predicate.as_str() == predicate
            })
            .map(|(idx, t)| (idx, t.object.clone()))
            .collect()
    };

    let mut repairs: Vec<String> = Vec::new();
    let mut language: Option<String> = None;

    // entry ids in document order
    let mut entry_ids: Vec<Iri> = Vec::new();
    for (idx, t) in triples.iter().enumerate() {
        if t.predicate == rdf_type
            && object_iri(t).is_some_and(|o| o.as_str() == vocab::ONTOLEX_LEXICAL_ENTRY)
        {
            if let Some(s) = subject_iri(t) {
                entry_ids.push(s);
                consumed[idx] = true;
            }
        }
    }

    let mut entries: Vec<LexicalEntry> = Vec::new();
    for entry_id in &entry_ids {
        let entry_term = Term::Iri(entry_id.clone());

        let pos_objects = objects_of(&entry_term, vocab::LEXINFO_PART_OF_SPEECH);
        let Some((pos_idx, pos_term)) = pos_objects.first() else {
            return Err(LexiconError::Structural(format!(
                "entry `{entry_id}` has no part of speech"
            )));
        };
        let part_of_speech = match pos_term {
            Term::Iri(iri) => PartOfSpeech::from_lexinfo(iri).ok_or_else(|| {
                LexiconError::Structural(format!("unknown part of speech `{iri}`"))
            })?,
            _ => {
                return Err(LexiconError::Structural(format!(
                    "entry `{entry_id}` has a non-IRI part of speech"
                )))
            }
        };
        consumed[*pos_idx] = true;

        let mut load_form = |idx: usize, term: &Term, consumed: &mut Vec<bool>| -> Result<Form, LexiconError> {
            consumed[idx] = true;
            let Term::Iri(form_id) = term else {
                return Err(LexiconError::Structural(format!(
                    "entry `{entry_id}` references a non-IRI form"
                )));
            };
            let form_term = Term::Iri(form_id.clone());
            let mut written: Option<(String, String)> = None;
            for (widx, wterm) in objects_of(&form_term, vocab::ONTOLEX_WRITTEN_REP) {
                let Term::Literal(lit) = &wterm else {
                    return Err(LexiconError::Structural(format!(
                        "form `{form_id}` has a non-literal written representation"
                    )));
                };
                let Some(lang) = lit.language() else {
                    return Err(LexiconError::Structural(format!(
                        "form `{form_id}` has an untagged written representation"
                    )));
                };
                if written.is_some() {
                    return Err(LexiconError::Structural(format!(
                        "form `{form_id}` has two written representations"
                    )));
                }
                written = Some((lit.lexical().to_string(), lang.to_string()));
                consumed[widx] = true;
            }
            let Some((rep, lang)) = written else {
                return Err(LexiconError::Structural(format!(
                    "form `{form_id}` has no written representation"
                )));
            };
            if language.get_or_insert(lang.clone()) != &lang {
                return Err(LexiconError::Structural(format!(
                    "form `{form_id}` is tagged `{lang}`, another form set the language to `{}`",
                    language.clone().unwrap_or_default()
                )));
            }
            let mut form = Form::new(form_id.clone(), rep, lang);
            for (tidx, t) in triples.iter().enumerate() {
                if subject_iri(t).as_ref() != Some(form_id) {
                    continue;
                }
                if t.predicate == rdf_type
                    && object_iri(t).is_some_and(|o| o.as_str() == vocab::ONTOLEX_FORM)
                {
                    consumed[tidx] = true;
                } else if let Some(key) = t.predicate.as_str().strip_prefix(vocab::LEXINFO_NS) {
                    if let Some(value_iri) = object_iri(t) {
                        if let Some(value) = value_iri.as_str().strip_prefix(vocab::LEXINFO_NS) {
                            form.features.insert(key.to_string(), value.to_string());
                            consumed[tidx] = true;
                        }
                    }
                }
            }
            Ok(form)
        };

        let canonical_objects = objects_of(&entry_term, vocab::ONTOLEX_CANONICAL_FORM);
        if canonical_objects.len() > 1 {
            return Err(LexiconError::Structural(format!(
                "entry `{entry_id}` has two canonical forms"
            )));
        }
        let Some((cidx, cterm)) = canonical_objects.first() else {
            return Err(LexiconError::Structural(format!(
                "entry `{entry_id}` has no canonical form"
            )));
        };
        let canonical_form = load_form(*cidx, cterm, &mut consumed)?;
        let mut other_forms = Vec::new();
        for (idx, term) in objects_of(&entry_term, vocab::ONTOLEX_OTHER_FORM) {
            other_forms.push(load_form(idx, &term, &mut consumed)?);
        }

        // frames
        let mut frames: Vec<SyntacticFrame> = Vec::new();
        for (fidx, fterm) in objects_of(&entry_term, vocab::SYNSEM_SYN_BEHAVIOR) {
            consumed[fidx] = true;
            let Term::Iri(frame_id) = &fterm else {
                return Err(LexiconError::Structural(format!(
                    "entry `{entry_id}` references a non-IRI frame"
                )));
            };
            let frame_term = Term::Iri(frame_id.clone());
            let mut declared_type: Option<FrameType> = None;
            for (tidx, term) in objects_of(&frame_term, vocab::RDF_TYPE) {
                let declared = match &term {
                    Term::Iri(iri) => match iri.as_str() {
                        vocab::LEXINFO_TRANSITIVE_FRAME => Some(FrameType::Transitive),
                        vocab::LEXINFO_TRANSITIVE_PP_FRAME => Some(FrameType::TransitivePp),
                        vocab::LEXINFO_NOUN_PP_FRAME => Some(FrameType::NounPp),
                        _ => None,
                    },
                    _ => None,
                };
                if let Some(ft) = declared {
                    declared_type = Some(ft);
                    consumed[tidx] = true;
                }
            }
            let Some(mut frame_type) = declared_type else {
                return Err(LexiconError::Structural(format!(
                    "frame `{frame_id}` has no recognized frame type"
                )));
            };

            let mut slot_args: Vec<SyntacticArgument> = Vec::new();
            for slot in [
                SlotName::Subject,
                SlotName::DirectObject,
                SlotName::PrepositionalObject,
            ] {
                for (sidx, sterm) in objects_of(&frame_term, slot.lexinfo_property().as_str()) {
                    let Term::Iri(arg_id) = &sterm else {
                        continue;
                    };
                    consumed[sidx] = true;
                    for (aidx, aterm) in objects_of(&Term::Iri(arg_id.clone()), vocab::RDF_TYPE) {
                        if aterm == Term::Iri(slot.lexinfo_class()) {
                            consumed[aidx] = true;
                        }
                    }
                    slot_args.push(SyntacticArgument {
                        id: arg_id.clone(),
                        slot,
                    });
                }
            }
            let mut preposition: Option<String> = None;
            for (midx, mterm) in objects_of(&frame_term, vocab::SYNSEM_MARKER) {
                if let Term::Literal(lit) = &mterm {
                    preposition = Some(lit.lexical().to_string());
                    consumed[midx] = true;
                }
            }

            // repair: a PP frame without its PP machinery becomes transitive
            if frame_type.needs_preposition() {
                let missing_pp = preposition.is_none()
                    || !slot_args
                        .iter()
                        .any(|a| a.slot == SlotName::PrepositionalObject);
                if missing_pp {
                    repairs.push(format!(
                        "frame `{frame_id}`: declared with a prepositional type but no \
                         preposition machinery; downgraded to transitive"
                    ));
                    frame_type = FrameType::Transitive;
                    slot_args.retain(|a| a.slot != SlotName::PrepositionalObject);
                }
            }

            frames.push(SyntacticFrame::new(
                frame_id.clone(),
                frame_type,
                slot_args,
                preposition,
            )?);
        }

        // senses
        let argument_slot =
            |id: &Iri| -> Option<SlotName> { frames.iter().find_map(|f| f.slot_of_argument(id)) };
        let mut senses: Vec<OntologyMapping> = Vec::new();
        for (sidx, sterm) in objects_of(&entry_term, vocab::ONTOLEX_SENSE) {
            consumed[sidx] = true;
            let Term::Iri(sense_id) = &sterm else {
                return Err(LexiconError::Structural(format!(
                    "entry `{entry_id}` references a non-IRI sense"
                )));
            };
            let sense_term = Term::Iri(sense_id.clone());
            for (tidx, term) in objects_of(&sense_term, vocab::RDF_TYPE) {
                if let Term::Iri(iri) = &term {
                    if iri.as_str() == vocab::ONTOLEX_LEXICAL_SENSE
                        || iri.as_str() == vocab::SYNSEM_ONTO_MAP
                    {
                        consumed[tidx] = true;
                    }
                }
            }
            let references = objects_of(&sense_term, vocab::ONTOLEX_REFERENCE);
            let Some((ridx, rterm)) = references.first() else {
                return Err(LexiconError::Structural(format!(
                    "sense `{sense_id}` has no ontology reference"
                )));
            };
            let Term::Iri(reference) = rterm else {
                return Err(LexiconError::Structural(format!(
                    "sense `{sense_id}` has a non-IRI reference"
                )));
            };
            consumed[*ridx] = true;
            let relationship_class = ConceptId::new(reference.clone());

            let mut slot_bindings: BTreeMap<SlotName, Iri> = BTreeMap::new();
            let mut slot_role_types: BTreeMap<SlotName, ConceptId> = BTreeMap::new();
            for (bidx, block) in objects_of(&sense_term, vocab::SYNSEM_SUBMAP) {
                consumed[bidx] = true;
                let block_triples: Vec<(usize, &&Triple)> = triples
                    .iter()
                    .enumerate()
                    .filter(|(_, t)| Term::from(t.subject.clone()) == block)
                    .collect();
                let find = |predicate: &str| -> Option<Term> {
                    block_triples
                        .iter()
                        .find(|(_, t)| t.predicate.as_str() == predicate)
                        .map(|(_, t)| t.object.clone())
                };
                let reference_term = find(vocab::ONTOLEX_REFERENCE);
                let obj_of_prop = find(vocab::SYNSEM_OBJ_OF_PROP);
                let is_a = find(vocab::SYNSEM_IS_A);

                let mut interpreted = false;
                if let (Some(Term::Iri(prop)), Some(Term::Iri(arg))) =
                    (&reference_term, &obj_of_prop)
                {
                    if let Some(slot) = argument_slot(arg) {
                        slot_bindings.insert(slot, prop.clone());
                    } else {
                        repairs.push(format!(
                            "sense `{sense_id}`: sub-mapping targets undeclared argument \
                             `{arg}`; skipped"
                        ));
                    }
                    interpreted = true;
                } else if let (Some(Term::Iri(reference)), Some(target)) =
                    (&reference_term, &is_a)
                {
                    match target {
                        Term::Iri(arg) if argument_slot(arg).is_some() => {
                            let slot = argument_slot(arg).unwrap();
                            slot_role_types.insert(slot, ConceptId::new(reference.clone()));
                            interpreted = true;
                        }
                        Term::Blank(_) => {
                            // the relationship-variable declaration block
                            if ConceptId::new(reference.clone()) != relationship_class {
                                repairs.push(format!(
                                    "sense `{sense_id}`: relationship block references \
                                     `{reference}`, sense references `{relationship_class}`"
                                ));
                            }
                            interpreted = true;
                        }
                        Term::Iri(arg) => {
                            repairs.push(format!(
                                "sense `{sense_id}`: role block targets undeclared argument \
                                 `{arg}`; skipped"
                            ));
                            interpreted = true;
                        }
                        Term::Literal(_) => {}
                    }
                }
                if interpreted {
                    for (tidx, _) in &block_triples {
                        consumed[*tidx] = true;
                    }
                }
            }

            senses.push(OntologyMapping {
                id: sense_id.clone(),
                relationship_class,
                slot_bindings,
                slot_role_types,
            });
        }

        entries.push(LexicalEntry {
            id: entry_id.clone(),
            part_of_speech,
            canonical_form,
            other_forms,
            frames,
            senses,
        });
    }

    let mut lexicon = Lexicon::new(language.unwrap_or_else(|| "en".to_string()), namespace);
    for entry in entries {
        lexicon.insert(entry)?;
    }
    lexicon.extras = triples
        .iter()
        .enumerate()
        .filter(|(idx, _)| !consumed[*idx])
        .map(|(_, t)| (*t).clone())
        .collect();
    lexicon.repairs = repairs;
    Ok(lexicon)
}

/// True iff the lexicon's LLOD projection is isomorphic to `other`.
pub fn llod_isomorphic(lexicon: &Lexicon, other: &RdfGraph) -> Result<bool, LexiconError> {
    Ok(isomorphic(&llod_graph(lexicon)?, other))
}
