//! Terminology alignment: preprocessing, token-bag cosine similarity,
//! thresholded best matching, and category reporting.
//!
//! Similarity is the cosine of term-frequency vectors over the union
//! vocabulary of two preprocessed token lists. Categories operationalize
//! the observed matching situations: `exact` for equal bags,
//! `incomplete_label` when one bag is a strict sub-multiset of the other,
//! `specific_vs_general` otherwise.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub const DEFAULT_THRESHOLD: f64 = 0.7;

#[derive(Debug, Error)]
pub enum ReplenishError {
    #[error("cosine is undefined for empty token lists")]
    DegenerateInput,
    #[error("configuration: {0}")]
    Configuration(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermSource {
    Ontology,
    External,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermRecord {
    pub raw: String,
    pub source: TermSource,
    pub tokens: Vec<String>,
}

impl TermRecord {
    pub fn new(raw: impl Into<String>, source: TermSource, cfg: &PreprocessConfig) -> Self {
        let raw = raw.into();
        let tokens = preprocess(&raw, cfg);
        TermRecord { raw, source, tokens }
    }

    /// Degenerate records (no tokens survive preprocessing) are excluded
    /// from matching.
    pub fn is_degenerate(&self) -> bool {
        self.tokens.is_empty()
    }
}

/// Per-token normalizer. The dictionary variant falls back to the identity
/// on unknown tokens; `External` plugs in an arbitrary normalizer (e.g. a
/// morphological analyzer for another language).
#[derive(Clone)]
pub enum Lemmatizer {
    Identity,
    Dictionary(BTreeMap<String, String>),
    External(Arc<dyn Fn(&str) -> String + Send + Sync>),
}

impl fmt::Debug for Lemmatizer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lemmatizer::Identity => f.write_str("Lemmatizer::Identity"),
            Lemmatizer::Dictionary(d) => write!(f, "Lemmatizer::Dictionary({} entries)", d.len()),
            Lemmatizer::External(_) => f.write_str("Lemmatizer::External(..)"),
        }
    }
}

impl Lemmatizer {
    pub fn apply(&self, token: &str) -> String {
        match self {
            Lemmatizer::Identity => token.to_string(),
            Lemmatizer::Dictionary(map) => {
                map.get(token).cloned().unwrap_or_else(|| token.to_string())
            }
            Lemmatizer::External(f) => f(token),
        }
    }

    /// A small English table covering common plural nouns and verb
    /// inflections of the domain; identity on everything else.
    pub fn default_english() -> Self {
        let pairs = [
            ("coefficients", "coefficient"),
            ("derivatives", "derivative"),
            ("divided", "divide"),
            ("divides", "divide"),
            ("dividing", "divide"),
            ("equations", "equation"),
            ("formulae", "formula"),
            ("formulas", "formula"),
            ("functions", "function"),
            ("graphs", "graph"),
            ("integrals", "integral"),
            ("intersected", "intersect"),
            ("intersects", "intersect"),
            ("matrices", "matrix"),
            ("methods", "method"),
            ("numbers", "number"),
            ("polynomials", "polynomial"),
            ("sets", "set"),
            ("summed", "sum"),
            ("sums", "sum"),
            ("theorems", "theorem"),
            ("variables", "variable"),
        ];
        Lemmatizer::Dictionary(
            pairs
                .into_iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        )
    }
}

#[derive(Debug, Clone)]
pub struct PreprocessConfig {
    /// lowercase stop words dropped after tokenization
    pub stop_words: BTreeSet<String>,
    pub lemmatizer: Lemmatizer,
    pub lowercase: bool,
    pub strip_punctuation: bool,
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        PreprocessConfig {
            stop_words: default_stop_words(),
            lemmatizer: Lemmatizer::default_english(),
            lowercase: true,
            strip_punctuation: true,
        }
    }
}

pub fn default_stop_words() -> BTreeSet<String> {
    [
        "a", "an", "and", "are", "as", "at", "be", "by", "for", "from", "in", "is", "of", "on",
        "or", "the", "to", "was", "were", "with",
    ]
    .into_iter()
    .map(String::from)
    .collect()
}

fn is_punctuation(c: char) -> bool {
    c.is_ascii_punctuation()
        || matches!(
            c,
            '–' | '—' | '‐' | '‑' | '’' | '‘' | '“' | '”' | '«' | '»' | '…' | '·'
        )
}

/// Lowercases, replaces punctuation (hyphens and dashes included) with
/// spaces, splits on whitespace, drops stop words, lemmatizes per token.
pub fn preprocess(raw: &str, cfg: &PreprocessConfig) -> Vec<String> {
    let lowered = if cfg.lowercase {
        raw.to_lowercase()
    } else {
        raw.to_string()
    };
    let cleaned: String = if cfg.strip_punctuation {
        lowered
            .chars()
            .map(|c| if is_punctuation(c) { ' ' } else { c })
            .collect()
    } else {
        lowered
    };
    cleaned
        .split_whitespace()
        .filter(|token| !cfg.stop_words.contains(*token))
        .map(|token| cfg.lemmatizer.apply(token))
        .collect()
}

fn frequency_bag<S: AsRef<str>>(tokens: &[S]) -> BTreeMap<&str, usize> {
    let mut bag: BTreeMap<&str, usize> = BTreeMap::new();
    for t in tokens {
        *bag.entry(t.as_ref()).or_default() += 1;
    }
    bag
}

/// Cosine of the term-frequency vectors of two token lists; symmetric,
/// in [0, 1], and exactly 1.0 for equal bags.
pub fn cosine<S: AsRef<str>>(a: &[S], b: &[S]) -> Result<f64, ReplenishError> {
    if a.is_empty() || b.is_empty() {
        return Err(ReplenishError::DegenerateInput);
    }
    let bag_a = frequency_bag(a);
    let bag_b = frequency_bag(b);
    if bag_a == bag_b {
        return Ok(1.0);
    }
    let dot: f64 = bag_a
        .iter()
        .filter_map(|(token, fa)| bag_b.get(token).map(|fb| (*fa * *fb) as f64))
        .sum();
    let norm = |bag: &BTreeMap<&str, usize>| -> f64 {
        bag.values().map(|f| (*f * *f) as f64).sum::<f64>().sqrt()
    };
    Ok(dot / (norm(&bag_a) * norm(&bag_b)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatchCategory {
    Exact,
    IncompleteLabel,
    SpecificVsGeneral,
}

impl fmt::Display for MatchCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MatchCategory::Exact => "exact",
            MatchCategory::IncompleteLabel => "incomplete_label",
            MatchCategory::SpecificVsGeneral => "specific_vs_general",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatchResult {
    pub external_term: TermRecord,
    pub ontology_term: TermRecord,
    pub similarity: f64,
    pub matched: bool,
    pub category: Option<MatchCategory>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MatchSummary {
    pub externals: usize,
    pub matched: usize,
    pub exact: usize,
    pub incomplete_label: usize,
    pub specific_vs_general: usize,
    pub degenerate_external: usize,
    pub degenerate_ontology: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatchReport {
    pub results: Vec<MatchResult>,
    pub summary: MatchSummary,
}

/// For each external term, the best-scoring ontology term (ties broken by
/// the lexicographic order of the ontology term's raw string), with
/// matched = similarity >= threshold and a category on matched rows.
pub fn match_terms(
    ontology_terms: &[TermRecord],
    external_terms: &[TermRecord],
    threshold: f64,
) -> Result<MatchReport, ReplenishError> {
    if !(threshold > 0.0 && threshold <= 1.0) {
        return Err(ReplenishError::Configuration(format!(
            "threshold {threshold} outside (0, 1]"
        )));
    }
    let usable_ontology: Vec<&TermRecord> = ontology_terms
        .iter()
        .filter(|t| !t.is_degenerate())
        .collect();
    if usable_ontology.is_empty() {
        return Err(ReplenishError::Configuration(
            "no usable ontology terms".into(),
        ));
    }

    let mut summary = MatchSummary {
        externals: external_terms.len(),
        degenerate_external: external_terms.iter().filter(|t| t.is_degenerate()).count(),
        degenerate_ontology: ontology_terms.len() - usable_ontology.len(),
        ..MatchSummary::default()
    };

    let mut results = Vec::new();
    for external in external_terms.iter().filter(|t| !t.is_degenerate()) {
        let mut best: Option<(&TermRecord, f64)> = None;
        for candidate in &usable_ontology {
            let similarity = cosine(&external.tokens, &candidate.tokens)?;
            let better = match best {
                None => true,
                Some((current, s)) => {
                    similarity > s || (similarity == s && candidate.raw < current.raw)
                }
            };
            if better {
                best = Some((candidate, similarity));
            }
        }
        let (ontology_term, similarity) = best.expect("ontology list verified non-empty");
        let matched = similarity >= threshold;
        let category = matched.then(|| categorize(&external.tokens, &ontology_term.tokens));
        if matched {
            summary.matched += 1;
            match category.unwrap() {
                MatchCategory::Exact => summary.exact += 1,
                MatchCategory::IncompleteLabel => summary.incomplete_label += 1,
                MatchCategory::SpecificVsGeneral => summary.specific_vs_general += 1,
            }
        }
        results.push(MatchResult {
            external_term: external.clone(),
            ontology_term: ontology_term.clone(),
            similarity,
            matched,
            category,
        });
    }
    Ok(MatchReport { results, summary })
}

fn categorize<S: AsRef<str>>(a: &[S], b: &[S]) -> MatchCategory {
    let bag_a = frequency_bag(a);
    let bag_b = frequency_bag(b);
    if bag_a == bag_b {
        return MatchCategory::Exact;
    }
    if sub_multiset(&bag_a, &bag_b) || sub_multiset(&bag_b, &bag_a) {
        return MatchCategory::IncompleteLabel;
    }
    MatchCategory::SpecificVsGeneral
}

fn sub_multiset(small: &BTreeMap<&str, usize>, big: &BTreeMap<&str, usize>) -> bool {
    small
        .iter()
        .all(|(token, count)| big.get(token).is_some_and(|c| c >= count))
}

/// One term per line; `#` starts a comment; blank lines are skipped.
pub fn parse_term_list(text: &str) -> Vec<String> {
    text.lines()
        .map(|line| match line.find('#') {
            Some(i) => line[..i].trim(),
            None => line.trim(),
        })
        .filter(|line| !line.is_empty())
        .map(String::from)
        .collect()
}

/// Tab-separated report rows plus a summary line:
/// `external<TAB>best<TAB>similarity<TAB>matched<TAB>category`.
pub fn render_report(report: &MatchReport) -> String {
    let mut out = String::new();
    for row in &report.results {
        let category = row
            .category
            .map(|c| c.to_string())
            .unwrap_or_else(|| "-".to_string());
        out.push_str(&format!(
            "{}\t{}\t{:.6}\t{}\t{}\n",
            row.external_term.raw, row.ontology_term.raw, row.similarity, row.matched, category
        ));
    }
    let s = &report.summary;
    out.push_str(&format!(
        "# external={} matched={} exact={} incomplete_label={} specific_vs_general={} \
         degenerate_external={} degenerate_ontology={}\n",
        s.externals,
        s.matched,
        s.exact,
        s.incomplete_label,
        s.specific_vs_general,
        s.degenerate_external,
        s.degenerate_ontology
    ));
    out
}
