//! The Turtle subset used by the toolkit's file formats: `@prefix`, prefixed
//! names, full IRIs, labelled and `[ ... ]` anonymous blank nodes, the `a`
//! keyword, `;` and `,` separators, plain / language-tagged / typed literals
//! and `#` comments. Collections and multiline strings are rejected.

use std::collections::HashSet;

use indexmap::IndexMap;

use super::model::{BlankNode, Iri, Literal, RdfGraph, Subject, Term, Triple};
use super::RdfError;
use crate::vocab;

// ---------------------------------------------------------------------------
// Serializer
// ---------------------------------------------------------------------------

/// Canonical serialization: prefixes in declaration order, one group per
/// subject in first-insertion order, `;` between the predicate-object pairs
/// of a group and `.` closing it. IRIs are shortened through the longest
/// matching namespace. The predicate `rdf:type` is written as `a` when no
/// declared prefix covers the RDF namespace.
pub fn serialize_turtle(graph: &RdfGraph) -> Result<String, RdfError> {
    let mut out = String::new();
    for (prefix, ns) in graph.prefixes() {
        out.push_str("@prefix ");
        out.push_str(prefix);
        out.push_str(": <");
        out.push_str(ns.as_str());
        out.push_str("> .\n");
    }

    // group triples by subject, keeping first-occurrence order
    let mut order: Vec<&Subject> = Vec::new();
    let mut groups: IndexMap<&Subject, Vec<&Triple>> = IndexMap::new();
    for t in graph.triples() {
        groups.entry(&t.subject).or_insert_with(|| {
            order.push(&t.subject);
            Vec::new()
        });
        groups.get_mut(&t.subject).unwrap().push(t);
    }

    let rdf_type = Iri::new(vocab::RDF_TYPE).expect("valid vocabulary IRI");
    let type_shortened = shorten(graph, &rdf_type);

    if !groups.is_empty() {
        if graph.prefixes().next().is_some() {
            out.push('\n');
        }
        for subject in &order {
            let triples = &groups[subject];
            let rendered_subject = render_subject(graph, subject)?;
            for (i, t) in triples.iter().enumerate() {
                if i == 0 {
                    out.push_str(&rendered_subject);
                    out.push(' ');
                } else {
                    out.push_str("    ");
                }
                if t.predicate == rdf_type && type_shortened.is_none() {
                    out.push('a');
                } else {
                    out.push_str(&render_iri(graph, &t.predicate)?);
                }
                out.push(' ');
                out.push_str(&render_term(graph, &t.object)?);
                if i + 1 == triples.len() {
                    out.push_str(" .\n");
                } else {
                    out.push_str(" ;\n");
                }
            }
        }
    }
    Ok(out)
}

fn render_subject(graph: &RdfGraph, s: &Subject) -> Result<String, RdfError> {
    match s {
        Subject::Iri(i) => render_iri(graph, i),
        Subject::Blank(b) => Ok(format!("_:{}", b.label())),
    }
}

fn render_term(graph: &RdfGraph, t: &Term) -> Result<String, RdfError> {
    match t {
        Term::Iri(i) => render_iri(graph, i),
        Term::Blank(b) => Ok(format!("_:{}", b.label())),
        Term::Literal(l) => {
            let mut s = String::from("\"");
            for c in l.lexical().chars() {
                match c {
                    '"' => s.push_str("\\\""),
                    '\\' => s.push_str("\\\\"),
                    '\n' => s.push_str("\\n"),
                    '\r' => s.push_str("\\r"),
                    '\t' => s.push_str("\\t"),
                    other => s.push(other),
                }
            }
            s.push('"');
            if let Some(lang) = l.language() {
                s.push('@');
                s.push_str(lang);
            } else if let Some(dt) = l.datatype() {
                s.push_str("^^");
                s.push_str(&render_iri(graph, dt)?);
            }
            Ok(s)
        }
    }
}

fn render_iri(graph: &RdfGraph, iri: &Iri) -> Result<String, RdfError> {
    if let Some(short) = shorten(graph, iri) {
        return Ok(short);
    }
    if iri.as_str().contains('<') || iri.as_str().contains('>') {
        return Err(RdfError::UnserializableIri(iri.as_str().to_string()));
    }
    Ok(format!("<{}>", iri.as_str()))
}

/// Longest-namespace prefix shortening; the remainder must be a valid local
/// name of the subset (`[A-Za-z0-9_][A-Za-z0-9_-]*` or empty).
fn shorten(graph: &RdfGraph, iri: &Iri) -> Option<String> {
    let mut best: Option<(&str, &str)> = None;
    for (prefix, ns) in graph.prefixes() {
        if let Some(rest) = iri.as_str().strip_prefix(ns.as_str()) {
            if is_valid_local(rest)
                && best.is_none_or(|(_, b)| ns.as_str().len() > iri.as_str().len() - b.len())
            {
                best = Some((prefix, rest));
            }
        }
    }
    best.map(|(prefix, local)| format!("{prefix}:{local}"))
}

fn is_valid_local(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        None => true,
        Some(c) if c.is_ascii_alphanumeric() || c == '_' => {
            chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
        }
        Some(_) => false,
    }
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    AtPrefix,
    A,
    PName { prefix: String, local: String },
    IriRef(String),
    Blank(String),
    Str(String),
    LangTag(String),
    CaretCaret,
    Dot,
    Semi,
    Comma,
    LBracket,
    RBracket,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next();
        match c {
            Some('\n') => {
                self.line += 1;
                self.column = 1;
            }
            Some(_) => self.column += 1,
            None => {}
        }
        c
    }

    fn err(&self, message: impl Into<String>) -> RdfError {
        RdfError::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn tokenize(mut self) -> Result<Vec<Spanned>, RdfError> {
        let mut out = Vec::new();
        loop {
            while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
                self.bump();
            }
            if self.chars.peek() == Some(&'#') {
                while !matches!(self.chars.peek(), None | Some('\n')) {
                    self.bump();
                }
                continue;
            }
            let (line, column) = (self.line, self.column);
            let Some(&c) = self.chars.peek() else {
                break;
            };
            let tok = match c {
                '.' => {
                    self.bump();
                    Tok::Dot
                }
                ';' => {
                    self.bump();
                    Tok::Semi
                }
                ',' => {
                    self.bump();
                    Tok::Comma
                }
                '[' => {
                    self.bump();
                    Tok::LBracket
                }
                ']' => {
                    self.bump();
                    Tok::RBracket
                }
                '(' | ')' => {
                    return Err(self.err("collections are not supported"));
                }
                '<' => {
                    self.bump();
                    let mut iri = String::new();
                    loop {
                        match self.bump() {
                            Some('>') => break,
                            Some('\n') | None => {
                                return Err(self.err("unterminated IRI reference"))
                            }
                            Some(ch) => iri.push(ch),
                        }
                    }
                    Tok::IriRef(iri)
                }
                '"' => {
                    self.bump();
                    if self.chars.peek() == Some(&'"') {
                        // candidate for "" (empty) or """ (multiline)
                        self.bump();
                        if self.chars.peek() == Some(&'"') {
                            return Err(self.err("multiline strings are not supported"));
                        }
                        Tok::Str(String::new())
                    } else {
                        let mut s = String::new();
                        loop {
                            match self.bump() {
                                Some('"') => break,
                                Some('\\') => match self.bump() {
                                    Some('"') => s.push('"'),
                                    Some('\\') => s.push('\\'),
                                    Some('n') => s.push('\n'),
                                    Some('r') => s.push('\r'),
                                    Some('t') => s.push('\t'),
                                    other => {
                                        return Err(self.err(format!(
                                            "unsupported escape `\\{}`",
                                            other.map(String::from).unwrap_or_default()
                                        )))
                                    }
                                },
                                Some('\n') | None => {
                                    return Err(self.err("unterminated string"))
                                }
                                Some(ch) => s.push(ch),
                            }
                        }
                        Tok::Str(s)
                    }
                }
                '@' => {
                    self.bump();
                    let mut word = String::new();
                    while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '-')
                    {
                        word.push(self.bump().unwrap());
                    }
                    if word == "prefix" {
                        Tok::AtPrefix
                    } else if !word.is_empty()
                        && word
                            .split('-')
                            .all(|part| !part.is_empty() && part.chars().all(|c| c.is_ascii_alphanumeric()))
                        && word.starts_with(|c: char| c.is_ascii_alphabetic())
                    {
                        Tok::LangTag(word)
                    } else {
                        return Err(self.err(format!("invalid `@{word}`")));
                    }
                }
                '^' => {
                    self.bump();
                    if self.bump() != Some('^') {
                        return Err(self.err("expected `^^`"));
                    }
                    Tok::CaretCaret
                }
                '_' => {
                    self.bump();
                    if self.bump() != Some(':') {
                        return Err(self.err("expected `_:`"));
                    }
                    let mut label = String::new();
                    while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_')
                    {
                        label.push(self.bump().unwrap());
                    }
                    if label.is_empty() {
                        return Err(self.err("empty blank node label"));
                    }
                    Tok::Blank(label)
                }
                c if c.is_ascii_alphabetic() || c == ':' => {
                    let mut prefix = String::new();
                    while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_')
                    {
                        prefix.push(self.bump().unwrap());
                    }
                    if self.chars.peek() == Some(&':') {
                        self.bump();
                        let mut local = String::new();
                        if matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_')
                        {
                            local.push(self.bump().unwrap());
                            while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_' || *c == '-')
                            {
                                local.push(self.bump().unwrap());
                            }
                        }
                        Tok::PName { prefix, local }
                    } else if prefix == "a" {
                        Tok::A
                    } else {
                        return Err(self.err(format!("unexpected token `{prefix}`")));
                    }
                }
                other => return Err(self.err(format!("unexpected character `{other}`"))),
            };
            out.push(Spanned { tok, line, column });
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    graph: RdfGraph,
    fresh_counter: usize,
    used_labels: HashSet<String>,
}

pub fn parse_turtle(text: &str) -> Result<RdfGraph, RdfError> {
    let tokens = Lexer::new(text).tokenize()?;
    let used_labels: HashSet<String> = tokens
        .iter()
        .filter_map(|s| match &s.tok {
            Tok::Blank(l) => Some(l.clone()),
            _ => None,
        })
        .collect();
    let mut parser = Parser {
        tokens,
        pos: 0,
        graph: RdfGraph::new(),
        fresh_counter: 0,
        used_labels,
    };
    parser.document()?;
    Ok(parser.graph)
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err_here(&self, message: impl Into<String>) -> RdfError {
        let (line, column) = self
            .tokens
            .get(self.pos.min(self.tokens.len().saturating_sub(1)))
            .map(|s| (s.line, s.column))
            .unwrap_or((1, 1));
        RdfError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn expect_dot(&mut self) -> Result<(), RdfError> {
        match self.next() {
            Some(Spanned { tok: Tok::Dot, .. }) => Ok(()),
            Some(s) => Err(RdfError::Syntax {
                line: s.line,
                column: s.column,
                message: format!("expected `.`, found {:?}", s.tok),
            }),
            None => Err(self.err_here("expected `.`, found end of input")),
        }
    }

    fn fresh_blank(&mut self) -> BlankNode {
        loop {
            let label = format!("b{}", self.fresh_counter);
            self.fresh_counter += 1;
            if !self.used_labels.contains(&label) {
                self.used_labels.insert(label.clone());
                return BlankNode::new(label).expect("generated label is valid");
            }
        }
    }

    fn resolve(&self, prefix: &str, local: &str, line: usize, column: usize) -> Result<Iri, RdfError> {
        let Some(ns) = self.graph.namespace(prefix) else {
            return Err(RdfError::UndefinedPrefix {
                prefix: prefix.to_string(),
                line,
                column,
            });
        };
        Iri::new(format!("{}{}", ns.as_str(), local))
    }

    fn document(&mut self) -> Result<(), RdfError> {
        while let Some(s) = self.peek() {
            if s.tok == Tok::AtPrefix {
                self.next();
                self.prefix_decl()?;
            } else {
                self.triples_statement()?;
            }
        }
        Ok(())
    }

    fn prefix_decl(&mut self) -> Result<(), RdfError> {
        let name = match self.next() {
            Some(Spanned {
                tok: Tok::PName { prefix, local },
                line,
                column,
            }) => {
                if !local.is_empty() {
                    return Err(RdfError::Syntax {
                        line,
                        column,
                        message: "expected a bare prefix name before the namespace".into(),
                    });
                }
                prefix
            }
            _ => return Err(self.err_here("expected a prefix name after `@prefix`")),
        };
        let ns = match self.next() {
            Some(Spanned {
                tok: Tok::IriRef(iri),
                ..
            }) => Iri::new(iri)?,
            _ => return Err(self.err_here("expected an IRI reference in `@prefix`")),
        };
        self.graph.add_prefix(name, ns)?;
        self.expect_dot()
    }

    fn triples_statement(&mut self) -> Result<(), RdfError> {
        let subject = self.subject()?;
        self.predicate_object_list(&subject)?;
        self.expect_dot()
    }

    fn subject(&mut self) -> Result<Subject, RdfError> {
        match self.next() {
            Some(Spanned {
                tok: Tok::IriRef(iri),
                ..
            }) => Ok(Subject::Iri(Iri::new(iri)?)),
            Some(Spanned {
                tok: Tok::PName { prefix, local },
                line,
                column,
            }) => Ok(Subject::Iri(self.resolve(&prefix, &local, line, column)?)),
            Some(Spanned {
                tok: Tok::Blank(label),
                ..
            }) => Ok(Subject::Blank(BlankNode::new(label)?)),
            Some(Spanned {
                tok: Tok::LBracket,
                ..
            }) => {
                let node = self.fresh_blank();
                let subject = Subject::Blank(node);
                if self.peek().map(|s| &s.tok) != Some(&Tok::RBracket) {
                    self.predicate_object_list(&subject)?;
                }
                match self.next() {
                    Some(Spanned {
                        tok: Tok::RBracket, ..
                    }) => Ok(subject),
                    _ => Err(self.err_here("expected `]`")),
                }
            }
            Some(s) => Err(RdfError::Syntax {
                line: s.line,
                column: s.column,
                message: format!("expected a subject, found {:?}", s.tok),
            }),
            None => Err(self.err_here("expected a subject, found end of input")),
        }
    }

    fn predicate_object_list(&mut self, subject: &Subject) -> Result<(), RdfError> {
        loop {
            let predicate = self.verb()?;
            loop {
                let object = self.object()?;
                self.graph
                    .insert(Triple::new(subject.clone(), predicate.clone(), object));
                if self.peek().map(|s| &s.tok) == Some(&Tok::Comma) {
                    self.next();
                } else {
                    break;
                }
            }
            if self.peek().map(|s| &s.tok) == Some(&Tok::Semi) {
                self.next();
                // tolerate a trailing `;` before `.` or `]`
                match self.peek().map(|s| &s.tok) {
                    Some(Tok::Dot) | Some(Tok::RBracket) | None => break,
                    _ => continue,
                }
            }
            break;
        }
        Ok(())
    }

    fn verb(&mut self) -> Result<Iri, RdfError> {
        match self.next() {
            Some(Spanned { tok: Tok::A, .. }) => Iri::new(vocab::RDF_TYPE),
            Some(Spanned {
                tok: Tok::IriRef(iri),
                ..
            }) => Iri::new(iri),
            Some(Spanned {
                tok: Tok::PName { prefix, local },
                line,
                column,
            }) => self.resolve(&prefix, &local, line, column),
            Some(s) => Err(RdfError::Syntax {
                line: s.line,
                column: s.column,
                message: format!("expected a predicate, found {:?}", s.tok),
            }),
            None => Err(self.err_here("expected a predicate, found end of input")),
        }
    }

    fn object(&mut self) -> Result<Term, RdfError> {
        match self.next() {
            Some(Spanned {
                tok: Tok::IriRef(iri),
                ..
            }) => Ok(Term::Iri(Iri::new(iri)?)),
            Some(Spanned {
                tok: Tok::PName { prefix, local },
                line,
                column,
            }) => Ok(Term::Iri(self.resolve(&prefix, &local, line, column)?)),
            Some(Spanned {
                tok: Tok::Blank(label),
                ..
            }) => Ok(Term::Blank(BlankNode::new(label)?)),
            Some(Spanned {
                tok: Tok::Str(lexical),
                ..
            }) => match self.peek().map(|s| &s.tok) {
                Some(Tok::LangTag(_)) => {
                    let Some(Spanned {
                        tok: Tok::LangTag(lang),
                        ..
                    }) = self.next()
                    else {
                        unreachable!()
                    };
                    Ok(Term::Literal(Literal::lang_tagged(lexical, lang)))
                }
                Some(Tok::CaretCaret) => {
                    self.next();
                    let dt = self.verb()?;
                    Ok(Term::Literal(Literal::typed(lexical, dt)))
                }
                _ => Ok(Term::Literal(Literal::plain(lexical))),
            },
            Some(Spanned {
                tok: Tok::LBracket,
                ..
            }) => {
                let node = self.fresh_blank();
                let subject = Subject::Blank(node.clone());
                if self.peek().map(|s| &s.tok) != Some(&Tok::RBracket) {
                    self.predicate_object_list(&subject)?;
                }
                match self.next() {
                    Some(Spanned {
                        tok: Tok::RBracket, ..
                    }) => Ok(Term::Blank(node)),
                    _ => Err(self.err_here("expected `]`")),
                }
            }
            Some(s) => Err(RdfError::Syntax {
                line: s.line,
                column: s.column,
                message: format!("expected an object, found {:?}", s.tok),
            }),
            None => Err(self.err_here("expected an object, found end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iri(s: &str) -> Iri {
        Iri::new(s).unwrap()
    }

    #[test]
    fn parse_single_triple() {
        let g = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p ex:b .").unwrap();
        assert_eq!(g.len(), 1);
        let t = g.triples().next().unwrap();
        assert_eq!(t.subject, Subject::Iri(iri("http://e/a")));
        assert_eq!(t.predicate, iri("http://e/p"));
        assert_eq!(t.object, Term::Iri(iri("http://e/b")));
    }

    #[test]
    fn missing_final_dot_is_rejected() {
        let err = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p ex:b").unwrap_err();
        assert!(matches!(err, RdfError::Syntax { .. }), "{err}");
    }

    #[test]
    fn undefined_prefix_is_reported() {
        let err = parse_turtle("ex:a ex:p ex:b .").unwrap_err();
        assert!(matches!(err, RdfError::UndefinedPrefix { .. }), "{err}");
    }

    #[test]
    fn collections_are_rejected() {
        let err = parse_turtle("@prefix ex: <http://e/> . ex:a ex:p (ex:b) .").unwrap_err();
        assert!(format!("{err}").contains("collections"));
    }

    #[test]
    fn multiline_strings_are_rejected() {
        let err =
            parse_turtle("@prefix ex: <http://e/> . ex:a ex:p \"\"\"x\"\"\" .").unwrap_err();
        assert!(format!("{err}").contains("multiline"));
    }

    #[test]
    fn anonymous_blank_nodes_and_separators() {
        let g = parse_turtle(
            "@prefix ex: <http://e/> .\n\
             ex:a ex:p [ a ex:C ; ex:q ex:b, ex:c ] ; ex:r \"v\"@en .",
        )
        .unwrap();
        assert_eq!(g.len(), 5);
        // the bracketed node got a fresh label that does not collide
        assert_eq!(g.blank_nodes().len(), 1);
    }

    #[test]
    fn fresh_labels_avoid_declared_ones() {
        let g = parse_turtle(
            "@prefix ex: <http://e/> .\n\
             _:b0 ex:p [ ex:q ex:a ] .",
        )
        .unwrap();
        let labels: Vec<_> = g.blank_nodes().iter().map(|b| b.label().to_string()).collect();
        assert!(labels.contains(&"b0".to_string()));
        assert_eq!(labels.len(), 2);
        assert_ne!(labels[0], labels[1]);
    }

    #[test]
    fn serializer_emits_paper_style_type_line() {
        let mut g = RdfGraph::new();
        g.add_prefix("rdf", iri(vocab::RDF_NS)).unwrap();
        g.add_prefix("rdfs", iri(vocab::RDFS_NS)).unwrap();
        g.add_prefix("owl", iri(vocab::OWL_NS)).unwrap();
        g.add_prefix("omp", iri(vocab::OMP_NS)).unwrap();
        g.insert(Triple::new(
            BlankNode::new("rel").unwrap(),
            iri(vocab::RDF_TYPE),
            iri("http://ontomathpro.org/omp2#Divisibility_relationship"),
        ));
        let text = serialize_turtle(&g).unwrap();
        assert!(
            text.contains("_:rel rdf:type omp:Divisibility_relationship .\n"),
            "{text}"
        );
    }

    #[test]
    fn serializer_uses_a_without_rdf_prefix() {
        let mut g = RdfGraph::new();
        g.add_prefix("ex", iri("http://e/")).unwrap();
        g.insert(Triple::new(
            iri("http://e/x"),
            iri(vocab::RDF_TYPE),
            iri("http://e/C"),
        ));
        let text = serialize_turtle(&g).unwrap();
        assert!(text.contains("ex:x a ex:C .\n"), "{text}");
    }

    #[test]
    fn empty_graph_serializes_to_empty_string() {
        assert_eq!(serialize_turtle(&RdfGraph::new()).unwrap(), "");
    }

    #[test]
    fn unshortenable_iri_with_angle_bracket_errors() {
        let mut g = RdfGraph::new();
        g.insert(Triple::new(
            Iri::new("http://e/a<b").unwrap(),
            iri("http://e/p"),
            iri("http://e/b"),
        ));
        assert!(matches!(
            serialize_turtle(&g),
            Err(RdfError::UnserializableIri(_))
        ));
    }

    #[test]
    fn serialization_round_trips() {
        let text = "@prefix ex: <http://e/> .\n\n\
                    ex:a ex:p ex:b ;\n    ex:q \"v\"@en ;\n    ex:r \"w\" .\n\
                    _:x ex:p ex:a .\n";
        let g = parse_turtle(text).unwrap();
        assert_eq!(serialize_turtle(&g).unwrap(), text);
    }
}
