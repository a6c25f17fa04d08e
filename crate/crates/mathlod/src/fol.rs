//! Ground first-order atoms over a declared signature, finite
//! interpretations, satisfaction, and exhaustive model enumeration.
//!
//! The translatable fragment is deliberately small: no variables, no
//! function symbols, no connectives. A theory is a finite set of ground
//! atoms, which keeps the model sets finitely enumerable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// Cap on the domain size accepted by [`enumerate_models`].
pub const FOL_DOMAIN_CAP: usize = 3;
/// Cap on the number of declared constants accepted by [`enumerate_models`].
pub const FOL_CONSTANT_CAP: usize = 4;
/// Cap on the total predicate tuple space, in bits.
pub const FOL_TUPLE_BITS_CAP: u32 = 64;

#[derive(Debug, Error)]
pub enum FolError {
    #[error("invalid name `{0}`: expected [A-Za-z][A-Za-z0-9_]*")]
    InvalidName(String),
    #[error("predicate arity must be at least 1")]
    ZeroArity,
    #[error("predicate `{0}` is already declared with a different arity")]
    ConflictingArity(String),
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
    #[error("predicate `{predicate}` expects {expected} argument(s), got {actual}")]
    ArityMismatch {
        predicate: String,
        expected: usize,
        actual: usize,
    },
    #[error("interpretation does not cover `{0}`")]
    SignatureMismatch(String),
    #[error("model enumeration over cap: {0}")]
    EnumerationTooLarge(String),
    #[error("theory file, line {line}: {message}")]
    TheoryFormat { line: usize, message: String },
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    predicates: BTreeMap<String, usize>,
    constants: BTreeSet<String>,
}

impl Signature {
    pub fn new() -> Self {
        Signature::default()
    }

    pub fn add_predicate(&mut self, name: impl Into<String>, arity: usize) -> Result<(), FolError> {
        let name = name.into();
        if !valid_name(&name) {
            return Err(FolError::InvalidName(name));
        }
        if arity == 0 {
            return Err(FolError::ZeroArity);
        }
        match self.predicates.get(&name) {
            Some(&a) if a != arity => Err(FolError::ConflictingArity(name)),
            _ => {
                self.predicates.insert(name, arity);
                Ok(())
            }
        }
    }

    pub fn add_constant(&mut self, name: impl Into<String>) -> Result<(), FolError> {
        let name = name.into();
        if !valid_name(&name) {
            return Err(FolError::InvalidName(name));
        }
        self.constants.insert(name);
        Ok(())
    }

    pub fn arity(&self, predicate: &str) -> Option<usize> {
        self.predicates.get(predicate).copied()
    }

    pub fn has_constant(&self, name: &str) -> bool {
        self.constants.contains(name)
    }

    pub fn predicates(&self) -> impl Iterator<Item = (&str, usize)> {
        self.predicates.iter().map(|(n, a)| (n.as_str(), *a))
    }

    pub fn constants(&self) -> impl Iterator<Item = &str> {
        self.constants.iter().map(String::as_str)
    }
}

/// A ground atom `R(c1, ..., cn)`, well-formed against some signature.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomicSentence {
    predicate: String,
    args: Vec<String>,
}

impl AtomicSentence {
    pub fn new(
        sig: &Signature,
        predicate: impl Into<String>,
        args: Vec<String>,
    ) -> Result<Self, FolError> {
        let predicate = predicate.into();
        let Some(arity) = sig.arity(&predicate) else {
            return Err(FolError::UnknownPredicate(predicate));
        };
        if args.len() != arity {
            return Err(FolError::ArityMismatch {
                predicate,
                expected: arity,
                actual: args.len(),
            });
        }
        for a in &args {
            if !sig.has_constant(a) {
                return Err(FolError::UnknownConstant(a.clone()));
            }
        }
        Ok(AtomicSentence { predicate, args })
    }

    pub fn predicate(&self) -> &str {
        &self.predicate
    }

    pub fn args(&self) -> &[String] {
        &self.args
    }
}

impl fmt::Display for AtomicSentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.predicate, self.args.join(", "))
    }
}

/// Parses `Name(arg1, arg2, ...)` with optional whitespace and validates it
/// against the signature.
pub fn parse_sentence(text: &str, sig: &Signature) -> Result<AtomicSentence, FolError> {
    let mut scanner = Scanner::new(text);
    scanner.skip_ws();
    let predicate = scanner.name("predicate name")?;
    scanner.skip_ws();
    scanner.expect('(')?;
    let mut args = Vec::new();
    loop {
        scanner.skip_ws();
        args.push(scanner.name("constant name")?);
        scanner.skip_ws();
        match scanner.bump() {
            Some(',') => continue,
            Some(')') => break,
            _ => {
                return Err(FolError::Syntax {
                    position: scanner.pos,
                    message: "expected `,` or `)`".into(),
                })
            }
        }
    }
    scanner.skip_ws();
    if scanner.bump().is_some() {
        return Err(FolError::Syntax {
            position: scanner.pos,
            message: "trailing input after `)`".into(),
        });
    }
    AtomicSentence::new(sig, predicate, args)
}

/// Inverse of [`parse_sentence`] on well-formed sentences.
pub fn format_sentence(s: &AtomicSentence) -> String {
    s.to_string()
}

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            chars: text.chars().peekable(),
            pos: 0,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn expect(&mut self, c: char) -> Result<(), FolError> {
        if self.bump() == Some(c) {
            Ok(())
        } else {
            Err(FolError::Syntax {
                position: self.pos,
                message: format!("expected `{c}`"),
            })
        }
    }

    fn name(&mut self, what: &str) -> Result<String, FolError> {
        let mut out = String::new();
        while matches!(self.chars.peek(), Some(c) if c.is_ascii_alphanumeric() || *c == '_') {
            out.push(self.bump().unwrap());
        }
        if out.is_empty() || !valid_name(&out) {
            return Err(FolError::Syntax {
                position: self.pos,
                message: format!("expected a {what}"),
            });
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Theory {
    signature: Signature,
    axioms: BTreeSet<AtomicSentence>,
}

impl Theory {
    pub fn new(signature: Signature) -> Self {
        Theory {
            signature,
            axioms: BTreeSet::new(),
        }
    }

    pub fn add_axiom(&mut self, axiom: AtomicSentence) -> Result<(), FolError> {
        // re-validate so a theory never holds an axiom outside its signature
        AtomicSentence::new(&self.signature, axiom.predicate().to_string(), axiom.args.clone())?;
        self.axioms.insert(axiom);
        Ok(())
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn axioms(&self) -> impl Iterator<Item = &AtomicSentence> {
        self.axioms.iter()
    }
}

/// Theory file format: `pred Name/arity` and `const a b c` declaration
/// lines, `#` comments, then one sentence per line.
pub fn parse_theory(text: &str) -> Result<Theory, FolError> {
    let mut sig = Signature::new();
    let line_err = |line: usize, message: String| FolError::TheoryFormat { line, message };
    for (idx, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if let Some(rest) = line.strip_prefix("pred ") {
            let (name, arity) = rest
                .trim()
                .split_once('/')
                .ok_or_else(|| line_err(idx + 1, "expected `pred Name/arity`".into()))?;
            let arity: usize = arity
                .trim()
                .parse()
                .map_err(|_| line_err(idx + 1, format!("invalid arity `{arity}`")))?;
            sig.add_predicate(name.trim(), arity)
                .map_err(|e| line_err(idx + 1, e.to_string()))?;
        } else if let Some(rest) = line.strip_prefix("const ") {
            for name in rest.split_whitespace() {
                sig.add_constant(name)
                    .map_err(|e| line_err(idx + 1, e.to_string()))?;
            }
        }
    }
    let mut theory = Theory::new(sig);
    for (idx, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if line.is_empty() || line.starts_with("pred ") || line.starts_with("const ") {
            continue;
        }
        let sentence = parse_sentence(line, theory.signature())
            .map_err(|e| line_err(idx + 1, e.to_string()))?;
        theory.add_axiom(sentence)?;
    }
    Ok(theory)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// A finite interpretation: domain `{0, ..., n-1}`, a total constant map,
/// and one tuple set per predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FolInterpretation {
    domain_size: usize,
    const_map: BTreeMap<String, usize>,
    pred_map: BTreeMap<String, BTreeSet<Vec<usize>>>,
}

impl FolInterpretation {
    pub fn new(domain_size: usize) -> Self {
        FolInterpretation {
            domain_size,
            const_map: BTreeMap::new(),
            pred_map: BTreeMap::new(),
        }
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn assign_constant(&mut self, name: impl Into<String>, element: usize) {
        assert!(element < self.domain_size, "element outside the domain");
        self.const_map.insert(name.into(), element);
    }

    /// Gives the predicate an (initially empty) extension.
    pub fn declare_predicate(&mut self, name: impl Into<String>) {
        self.pred_map.entry(name.into()).or_default();
    }

    pub fn add_tuple(&mut self, predicate: impl Into<String>, tuple: Vec<usize>) {
        assert!(
            tuple.iter().all(|e| *e < self.domain_size),
            "tuple element outside the domain"
        );
        self.pred_map.entry(predicate.into()).or_default().insert(tuple);
    }

    pub fn remove_tuple(&mut self, predicate: &str, tuple: &[usize]) {
        if let Some(set) = self.pred_map.get_mut(predicate) {
            set.remove(tuple);
        }
    }

    pub fn constant(&self, name: &str) -> Option<usize> {
        self.const_map.get(name).copied()
    }

    pub fn constants(&self) -> impl Iterator<Item = (&str, usize)> {
        self.const_map.iter().map(|(n, e)| (n.as_str(), *e))
    }

    pub fn tuples(&self, predicate: &str) -> BTreeSet<Vec<usize>> {
        self.pred_map.get(predicate).cloned().unwrap_or_default()
    }

    pub fn predicates(&self) -> impl Iterator<Item = (&str, &BTreeSet<Vec<usize>>)> {
        self.pred_map.iter().map(|(n, s)| (n.as_str(), s))
    }
}

impl fmt::Display for FolInterpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "domain size: {}", self.domain_size)?;
        for (name, element) in &self.const_map {
            writeln!(f, "{name} -> {element}")?;
        }
        for (name, tuples) in &self.pred_map {
            let rendered: Vec<String> = tuples
                .iter()
                .map(|t| {
                    format!(
                        "({})",
                        t.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
                    )
                })
                .collect();
            writeln!(f, "{name}: {{{}}}", rendered.join(", "))?;
        }
        Ok(())
    }
}

/// True iff the tuple of the argument denotations is in the predicate's
/// extension.
pub fn satisfies(interp: &FolInterpretation, s: &AtomicSentence) -> Result<bool, FolError> {
    let mut tuple = Vec::with_capacity(s.args().len());
    for a in s.args() {
        let Some(e) = interp.constant(a) else {
            return Err(FolError::SignatureMismatch(a.clone()));
        };
        tuple.push(e);
    }
    let Some(tuples) = interp.pred_map.get(s.predicate()) else {
        return Err(FolError::SignatureMismatch(s.predicate().to_string()));
    };
    Ok(tuples.contains(&tuple))
}

/// Deterministic enumeration of every interpretation over the domain
/// `{0, ..., domain_size-1}` (all constant maps times all predicate
/// extensions) that satisfies every axiom of `theory` plus `extra`.
pub fn enumerate_models(
    theory: &Theory,
    extra: &AtomicSentence,
    domain_size: usize,
) -> Result<FolModelIter, FolError> {
    if domain_size == 0 {
        return Err(FolError::EnumerationTooLarge(
            "domain size must be positive".into(),
        ));
    }
    if domain_size > FOL_DOMAIN_CAP {
        return Err(FolError::EnumerationTooLarge(format!(
            "domain size {domain_size} exceeds cap {FOL_DOMAIN_CAP}"
        )));
    }
    let sig = theory.signature();
    let constants: Vec<String> = sig.constants().map(String::from).collect();
    if constants.len() > FOL_CONSTANT_CAP {
        return Err(FolError::EnumerationTooLarge(format!(
            "{} constants exceed cap {FOL_CONSTANT_CAP}",
            constants.len()
        )));
    }
    // revalidate the extra sentence against the theory signature
    AtomicSentence::new(sig, extra.predicate().to_string(), extra.args().to_vec())?;

    let mut tuple_spaces: Vec<(String, Vec<Vec<usize>>)> = Vec::new();
    let mut bits: u32 = 0;
    for (name, arity) in sig.predicates() {
        let tuples = all_tuples(domain_size, arity);
        bits += tuples.len() as u32;
        tuple_spaces.push((name.to_string(), tuples));
    }
    if bits > FOL_TUPLE_BITS_CAP {
        return Err(FolError::EnumerationTooLarge(format!(
            "tuple space of {bits} bits exceeds cap {FOL_TUPLE_BITS_CAP}"
        )));
    }

    let mut sentences: Vec<AtomicSentence> = theory.axioms().cloned().collect();
    sentences.push(extra.clone());

    Ok(FolModelIter {
        domain_size,
        constants,
        tuple_spaces,
        bits,
        sentences,
        const_index: 0,
        pred_counter: 0,
    })
}

fn all_tuples(domain_size: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        let mut next = Vec::with_capacity(out.len() * domain_size);
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

pub struct FolModelIter {
    domain_size: usize,
    constants: Vec<String>,
    tuple_spaces: Vec<(String, Vec<Vec<usize>>)>,
    bits: u32,
    sentences: Vec<AtomicSentence>,
    const_index: u64,
    pred_counter: u128,
}

impl FolModelIter {
    pub fn candidate_count(&self) -> u128 {
        let const_maps = (self.domain_size as u128).pow(self.constants.len() as u32);
        const_maps * (1u128 << self.bits)
    }

    fn const_map_count(&self) -> u64 {
        (self.domain_size as u64).pow(self.constants.len() as u32)
    }

    fn decode(&self) -> FolInterpretation {
        let mut interp = FolInterpretation::new(self.domain_size);
        let mut rest = self.const_index;
        for name in &self.constants {
            interp.assign_constant(name.clone(), (rest % self.domain_size as u64) as usize);
            rest /= self.domain_size as u64;
        }
        let mut bit = 0;
        for (name, tuples) in &self.tuple_spaces {
            // every declared predicate gets an extension, possibly empty
            interp.pred_map.entry(name.clone()).or_default();
            for t in tuples {
                if self.pred_counter >> bit & 1 == 1 {
                    interp.add_tuple(name.clone(), t.clone());
                }
                bit += 1;
            }
        }
        interp
    }

    fn advance(&mut self) -> bool {
        self.pred_counter += 1;
        if self.pred_counter == 1u128 << self.bits {
            self.pred_counter = 0;
            self.const_index += 1;
        }
        self.const_index < self.const_map_count()
    }
}

impl Iterator for FolModelIter {
    type Item = FolInterpretation;

    fn next(&mut self) -> Option<FolInterpretation> {
        if self.const_index >= self.const_map_count() {
            return None;
        }
        loop {
            let interp = self.decode();
            let is_model = self
                .sentences
                .iter()
                .all(|s| satisfies(&interp, s).expect("sentences are within the signature"));
            let more = self.advance();
            if is_model {
                return Some(interp);
            }
            if !more {
                return None;
            }
        }
    }
}
