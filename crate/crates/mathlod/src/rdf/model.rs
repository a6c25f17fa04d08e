use std::collections::HashSet;
use std::fmt;

use indexmap::IndexMap;

use super::RdfError;

/// An absolute IRI. Must be non-empty, contain no whitespace, and start with
/// a `<scheme>:` part.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Iri(String);

impl Iri {
    pub fn new(value: impl Into<String>) -> Result<Self, RdfError> {
        let value = value.into();
        let fail = |reason: &str| RdfError::MalformedIri {
            iri: value.clone(),
            reason: reason.to_string(),
        };
        if value.is_empty() {
            return Err(fail("empty"));
        }
        if value.chars().any(char::is_whitespace) {
            return Err(fail("contains whitespace"));
        }
        let Some(colon) = value.find(':') else {
            return Err(fail("missing `:` after the scheme"));
        };
        let scheme = &value[..colon];
        let mut chars = scheme.chars();
        let valid_scheme = chars
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'));
        if !valid_scheme {
            return Err(fail("invalid scheme"));
        }
        Ok(Iri(value))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Iri {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A blank node, identified by its label within one graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlankNode(String);

impl BlankNode {
    pub fn new(label: impl Into<String>) -> Result<Self, RdfError> {
        let label = label.into();
        if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(RdfError::InvalidBlankLabel(label));
        }
        Ok(BlankNode(label))
    }

    pub fn label(&self) -> &str {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    lexical: String,
    language: Option<String>,
    datatype: Option<Iri>,
}

impl Literal {
    pub fn plain(lexical: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            language: None,
            datatype: None,
        }
    }

    pub fn lang_tagged(lexical: impl Into<String>, language: impl Into<String>) -> Self {
        Literal {
            lexical: lexical.into(),
            language: Some(language.into()),
            datatype: None,
        }
    }

    pub fn typed(lexical: impl Into<String>, datatype: Iri) -> Self {
        Literal {
            lexical: lexical.into(),
            language: None,
            datatype: Some(datatype),
        }
    }

    pub fn lexical(&self) -> &str {
        &self.lexical
    }

    pub fn language(&self) -> Option<&str> {
        self.language.as_deref()
    }

    pub fn datatype(&self) -> Option<&Iri> {
        self.datatype.as_ref()
    }
}

/// Subject position: an IRI or a blank node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Subject {
    Iri(Iri),
    Blank(BlankNode),
}

impl From<Iri> for Subject {
    fn from(iri: Iri) -> Self {
        Subject::Iri(iri)
    }
}

impl From<BlankNode> for Subject {
    fn from(b: BlankNode) -> Self {
        Subject::Blank(b)
    }
}

/// Object position: an IRI, a blank node, or a literal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Iri(Iri),
    Blank(BlankNode),
    Literal(Literal),
}

impl From<Iri> for Term {
    fn from(iri: Iri) -> Self {
        Term::Iri(iri)
    }
}

impl From<BlankNode> for Term {
    fn from(b: BlankNode) -> Self {
        Term::Blank(b)
    }
}

impl From<Literal> for Term {
    fn from(l: Literal) -> Self {
        Term::Literal(l)
    }
}

impl From<Subject> for Term {
    fn from(s: Subject) -> Self {
        match s {
            Subject::Iri(i) => Term::Iri(i),
            Subject::Blank(b) => Term::Blank(b),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple {
    pub subject: Subject,
    pub predicate: Iri,
    pub object: Term,
}

impl Triple {
    pub fn new(
        subject: impl Into<Subject>,
        predicate: Iri,
        object: impl Into<Term>,
    ) -> Self {
        Triple {
            subject: subject.into(),
            predicate,
            object: object.into(),
        }
    }
}

/// A set of triples plus an ordered prefix map.
///
/// Insertion order is remembered (it drives the canonical serialization) but
/// the triple collection has set semantics: re-inserting a triple is a no-op.
#[derive(Debug, Clone, Default)]
pub struct RdfGraph {
    triples: Vec<Triple>,
    seen: HashSet<Triple>,
    prefixes: IndexMap<String, Iri>,
}

impl RdfGraph {
    pub fn new() -> Self {
        RdfGraph::default()
    }

    /// Registers `prefix -> namespace`. Re-registering a prefix overwrites
    /// its namespace but keeps its position.
    pub fn add_prefix(&mut self, prefix: impl Into<String>, namespace: Iri) -> Result<(), RdfError> {
        let prefix = prefix.into();
        let valid = prefix.is_empty() || {
            let mut chars = prefix.chars();
            chars.next().is_some_and(|c| c.is_ascii_alphabetic())
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        };
        if !valid {
            return Err(RdfError::InvalidPrefixName(prefix));
        }
        self.prefixes.insert(prefix, namespace);
        Ok(())
    }

    /// Inserts a triple; returns `false` if it was already present.
    pub fn insert(&mut self, triple: Triple) -> bool {
        if self.seen.contains(&triple) {
            return false;
        }
        self.seen.insert(triple.clone());
        self.triples.push(triple);
        true
    }

    pub fn contains(&self, triple: &Triple) -> bool {
        self.seen.contains(triple)
    }

    pub fn remove(&mut self, triple: &Triple) -> bool {
        if self.seen.remove(triple) {
            self.triples.retain(|t| t != triple);
            true
        } else {
            false
        }
    }

    pub fn triples(&self) -> impl Iterator<Item = &Triple> {
        self.triples.iter()
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn prefixes(&self) -> impl Iterator<Item = (&str, &Iri)> {
        self.prefixes.iter().map(|(p, ns)| (p.as_str(), ns))
    }

    pub fn namespace(&self, prefix: &str) -> Option<&Iri> {
        self.prefixes.get(prefix)
    }

    /// Every distinct blank node of the graph, in first-occurrence order.
    pub fn blank_nodes(&self) -> Vec<&BlankNode> {
        let mut out: Vec<&BlankNode> = Vec::new();
        let mut seen: HashSet<&BlankNode> = HashSet::new();
        for t in &self.triples {
            if let Subject::Blank(b) = &t.subject {
                if seen.insert(b) {
                    out.push(b);
                }
            }
            if let Term::Blank(b) = &t.object {
                if seen.insert(b) {
                    out.push(b);
                }
            }
        }
        out
    }

    /// Every distinct IRI occurring in any triple position, sorted.
    pub fn iris(&self) -> Vec<&Iri> {
        let mut set: Vec<&Iri> = Vec::new();
        let mut seen: HashSet<&Iri> = HashSet::new();
        for t in &self.triples {
            if let Subject::Iri(i) = &t.subject {
                if seen.insert(i) {
                    set.push(i);
                }
            }
            if seen.insert(&t.predicate) {
                set.push(&t.predicate);
            }
            match &t.object {
                Term::Iri(i) => {
                    if seen.insert(i) {
                        set.push(i);
                    }
                }
                Term::Literal(l) => {
                    if let Some(dt) = l.datatype() {
                        if seen.insert(dt) {
                            set.push(dt);
                        }
                    }
                }
                Term::Blank(_) => {}
            }
        }
        set.sort();
        set
    }
}

impl PartialEq for RdfGraph {
    fn eq(&self, other: &Self) -> bool {
        self.seen == other.seen && self.prefixes == other.prefixes
    }
}

impl Eq for RdfGraph {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iri_validation() {
        assert!(Iri::new("http://example.org/a").is_ok());
        assert!(Iri::new("urn:x").is_ok());
        assert!(Iri::new("").is_err());
        assert!(Iri::new("http://e x/a").is_err());
        assert!(Iri::new("no-colon-here").is_err());
        assert!(Iri::new("1http://e/a").is_err());
    }

    #[test]
    fn blank_label_validation() {
        assert!(BlankNode::new("rel").is_ok());
        assert!(BlankNode::new("Relationship1").is_ok());
        assert!(BlankNode::new("").is_err());
        assert!(BlankNode::new("a-b").is_err());
    }

    #[test]
    fn graph_set_semantics() {
        let mut g = RdfGraph::new();
        let t = Triple::new(
            Iri::new("http://e/a").unwrap(),
            Iri::new("http://e/p").unwrap(),
            Iri::new("http://e/b").unwrap(),
        );
        assert!(g.insert(t.clone()));
        assert!(!g.insert(t));
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn prefix_name_validation() {
        let mut g = RdfGraph::new();
        let ns = Iri::new("http://e/").unwrap();
        assert!(g.add_prefix("", ns.clone()).is_ok());
        assert!(g.add_prefix("ex", ns.clone()).is_ok());
        assert!(g.add_prefix("9x", ns.clone()).is_err());
        assert!(g.add_prefix("a b", ns).is_err());
    }
}
