//! The subcommand surface of the `mathlod` binary.
//!
//! Data goes to the output stream (or `--output PATH`), diagnostics to the
//! error stream. Exit codes: 0 success, 1 semantic failure (condition FAIL,
//! validation errors), 2 input parse error, 3 mapping/configuration error,
//! 4 ambiguity.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};

use crate::fol::{self, FolError};
use crate::lexicon::{self, LexiconError};
use crate::ontology::{OntologyError, OntologyGraph, Severity};
use crate::rdf::{self, Iri, RdfError, RdfGraph};
use crate::replenish::{self, PreprocessConfig, TermRecord, TermSource};
use crate::translate::{self, SymbolMapping, TranslateError, TranslationMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SEMANTIC_FAILURE: i32 = 1;
pub const EXIT_PARSE_ERROR: i32 = 2;
pub const EXIT_CONFIG_ERROR: i32 = 3;
pub const EXIT_AMBIGUITY: i32 = 4;

pub const STOPWORDS_ENV: &str = "MATHLOD_STOPWORDS";

#[derive(Parser)]
#[command(
    name = "mathlod",
    version,
    about = "Reified-relationship RDF representation of ground mathematical statements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Translate a ground sentence like "Divides(m,n)" into Turtle
    Translate {
        sentence: String,
        #[arg(long)]
        ontology: PathBuf,
        #[arg(long)]
        mapping: PathBuf,
        /// `generic` or `role-properties` (overrides the mapping file)
        #[arg(long)]
        mode: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the translation condition by finite model enumeration
    CheckCondition {
        theory: PathBuf,
        sentence: String,
        #[arg(long)]
        ontology: PathBuf,
        #[arg(long)]
        mapping: PathBuf,
        #[arg(long)]
        mode: Option<String>,
        #[arg(long, default_value_t = 2)]
        domain_size: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Parse a controlled phrase like "m divides n" into Turtle
    ParsePhrase {
        phrase: String,
        entity_map: PathBuf,
        #[arg(long)]
        lexicon: PathBuf,
        #[arg(long)]
        ontology: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Render a relationship-instance Turtle file back into a phrase
    Verbalize {
        instance: PathBuf,
        label_map: PathBuf,
        #[arg(long)]
        lexicon: PathBuf,
        #[arg(long)]
        ontology: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Align two term lists by preprocessed cosine similarity
    MatchTerms {
        ontology_terms: PathBuf,
        external_terms: PathBuf,
        #[arg(long, default_value_t = replenish::DEFAULT_THRESHOLD)]
        threshold: f64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Report structural violations of an ontology file
    Validate {
        #[arg(long)]
        ontology: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
struct CliError {
    message: String,
    code: i32,
}

impl CliError {
    fn parse(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: EXIT_PARSE_ERROR,
        }
    }

    fn config(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
            code: EXIT_CONFIG_ERROR,
        }
    }

    fn in_file(self, path: &Path) -> Self {
        CliError {
            message: format!("{}: {}", path.display(), self.message),
            code: self.code,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::config(e.to_string())
    }
}

impl From<RdfError> for CliError {
    fn from(e: RdfError) -> Self {
        let code = match &e {
            RdfError::Syntax { .. }
            | RdfError::UndefinedPrefix { .. }
            | RdfError::MalformedIri { .. }
            | RdfError::InvalidBlankLabel(_)
            | RdfError::LiteralTagAndDatatype
            | RdfError::InvalidPrefixName(_) => EXIT_PARSE_ERROR,
            _ => EXIT_CONFIG_ERROR,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

impl From<FolError> for CliError {
    fn from(e: FolError) -> Self {
        let code = match &e {
            FolError::EnumerationTooLarge(_) | FolError::SignatureMismatch(_) => EXIT_CONFIG_ERROR,
            _ => EXIT_PARSE_ERROR,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

impl From<OntologyError> for CliError {
    fn from(e: OntologyError) -> Self {
        match e {
            OntologyError::Lift(_) => CliError::parse(e.to_string()),
            OntologyError::Invalid(_) => CliError::config(e.to_string()),
            OntologyError::Rdf(inner) => inner.into(),
        }
    }
}

impl From<TranslateError> for CliError {
    fn from(e: TranslateError) -> Self {
        match e {
            TranslateError::Rdf(inner) => inner.into(),
            TranslateError::Fol(inner) => inner.into(),
            TranslateError::Ontology(inner) => inner.into(),
            other => CliError::config(other.to_string()),
        }
    }
}

impl From<LexiconError> for CliError {
    fn from(e: LexiconError) -> Self {
        match &e {
            LexiconError::Ambiguous(_) => CliError {
                message: e.to_string(),
                code: EXIT_AMBIGUITY,
            },
            LexiconError::Rdf(_) => CliError::parse(e.to_string()),
            _ => CliError::parse(e.to_string()),
        }
    }
}

impl From<replenish::ReplenishError> for CliError {
    fn from(e: replenish::ReplenishError) -> Self {
        CliError::config(e.to_string())
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let uses_stderr = e.use_stderr();
            let _ = e.print();
            return if uses_stderr { EXIT_PARSE_ERROR } else { EXIT_OK };
        }
    };

    let (output_path, result) = dispatch(cli.command);
    match result {
        Ok((data, code)) => {
            let written = match &output_path {
                Some(path) => fs::write(path, &data).map_err(CliError::from),
                None => {
                    print!("{data}");
                    std::io::stdout().flush().map_err(CliError::from)
                }
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    eprintln!("mathlod: {}", e.message);
                    e.code
                }
            }
        }
        Err(e) => {
            eprintln!("mathlod: {}", e.message);
            e.code
        }
    }
}

fn dispatch(command: Command) -> (Option<PathBuf>, Result<(String, i32), CliError>) {
    match command {
        Command::Translate {
            sentence,
            ontology,
            mapping,
            mode,
            output,
        } => (output, cmd_translate(&sentence, &ontology, &mapping, mode.as_deref())),
        Command::CheckCondition {
            theory,
            sentence,
            ontology,
            mapping,
            mode,
            domain_size,
            output,
        } => (
            output,
            cmd_check_condition(&theory, &sentence, &ontology, &mapping, mode.as_deref(), domain_size),
        ),
        Command::ParsePhrase {
            phrase,
            entity_map,
            lexicon,
            ontology,
            output,
        } => (output, cmd_parse_phrase(&phrase, &entity_map, &lexicon, &ontology)),
        Command::Verbalize {
            instance,
            label_map,
            lexicon,
            ontology,
            output,
        } => (output, cmd_verbalize(&instance, &label_map, &lexicon, &ontology)),
        Command::MatchTerms {
            ontology_terms,
            external_terms,
            threshold,
            output,
        } => (output, cmd_match_terms(&ontology_terms, &external_terms, threshold)),
        Command::Validate { ontology, output } => (output, cmd_validate(&ontology)),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path)
        .map_err(|e| CliError::config(format!("{}: {e}", path.display())))
}

fn load_ontology_graph(path: &Path) -> Result<(RdfGraph, OntologyGraph), CliError> {
    let text = read_file(path)?;
    let graph = rdf::parse_turtle(&text).map_err(|e| CliError::from(e).in_file(path))?;
    let onto =
        OntologyGraph::from_schema_graph(&graph).map_err(|e| CliError::from(e).in_file(path))?;
    Ok((graph, onto))
}

fn load_mapping_file(
    path: &Path,
) -> Result<(SymbolMapping, Option<TranslationMode>), CliError> {
    let text = read_file(path)?;
    translate::load_mapping(&text).map_err(|e| CliError::from(e).in_file(path))
}

fn resolve_mode(
    cli_mode: Option<&str>,
    file_mode: Option<TranslationMode>,
) -> Result<TranslationMode, CliError> {
    match cli_mode {
        Some(text) => TranslationMode::from_str(text)
            .map_err(|e| CliError::config(e.to_string())),
        None => Ok(file_mode.unwrap_or(TranslationMode::Generic)),
    }
}

fn cmd_translate(
    sentence: &str,
    ontology_path: &Path,
    mapping_path: &Path,
    cli_mode: Option<&str>,
) -> Result<(String, i32), CliError> {
    let (_, onto) = load_ontology_graph(ontology_path)?;
    let (mapping, file_mode) = load_mapping_file(mapping_path)?;
    let mode = resolve_mode(cli_mode, file_mode)?;
    let mut signature = fol::Signature::new();
    for (name, rel) in &mapping.pmap {
        let arity = onto
            .lookup_relationship(rel)
            .map(|r| r.arguments.len())
            .unwrap_or(2);
        signature
            .add_predicate(name.clone(), arity.max(1))
            .map_err(CliError::from)?;
    }
    for name in mapping.cmap.keys() {
        signature.add_constant(name.clone()).map_err(CliError::from)?;
    }
    let parsed = fol::parse_sentence(sentence, &signature)?;
    let result = translate::translate(&parsed, &mapping, &onto, mode)?;
    let text = rdf::serialize_turtle(&result.graph)?;
    Ok((text, EXIT_OK))
}

fn cmd_check_condition(
    theory_path: &Path,
    sentence: &str,
    ontology_path: &Path,
    mapping_path: &Path,
    cli_mode: Option<&str>,
    domain_size: usize,
) -> Result<(String, i32), CliError> {
    // the ontology file's own graph is the schema the condition runs against
    let (schema, onto) = load_ontology_graph(ontology_path)?;
    let (mapping, file_mode) = load_mapping_file(mapping_path)?;
    let mode = resolve_mode(cli_mode, file_mode)?;
    let theory_text = read_file(theory_path)?;
    let theory = fol::parse_theory(&theory_text)
        .map_err(|e| CliError::from(e).in_file(theory_path))?;
    let parsed = fol::parse_sentence(sentence, theory.signature())?;

    let report = translate::check_semantic_condition_with_schema(
        &theory, &parsed, &mapping, &onto, &schema, domain_size, mode,
    )?;
    if report.passed {
        let strict = match report.strict {
            Some(true) => "yes",
            Some(false) => "no",
            None => "unknown",
        };
        Ok((
            format!("PASS checked={} strict={}\n", report.models_checked, strict),
            EXIT_OK,
        ))
    } else {
        let mut out = format!("FAIL checked={}\n", report.models_checked);
        if let Some(counterexample) = &report.counterexample {
            out.push_str("counterexample:\n");
            out.push_str(&counterexample.to_string());
        }
        Ok((out, EXIT_SEMANTIC_FAILURE))
    }
}

fn load_json_map(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = read_file(path)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::parse(format!("{}: {e}", path.display())))
}

fn cmd_parse_phrase(
    phrase: &str,
    entity_map_path: &Path,
    lexicon_path: &Path,
    ontology_path: &Path,
) -> Result<(String, i32), CliError> {
    let (_, onto) = load_ontology_graph(ontology_path)?;
    let lexicon_text = read_file(lexicon_path)?;
    let lexicon =
        lexicon::load_llod(&lexicon_text).map_err(|e| CliError::from(e).in_file(lexicon_path))?;
    let mut entity_map: BTreeMap<String, Iri> = BTreeMap::new();
    for (token, iri) in load_json_map(entity_map_path)? {
        entity_map.insert(
            token,
            Iri::new(iri).map_err(|e| CliError::from(e).in_file(entity_map_path))?,
        );
    }
    let graph = lexicon::parse_phrase(&lexicon, &onto, phrase, &entity_map)?;
    Ok((rdf::serialize_turtle(&graph)?, EXIT_OK))
}

fn cmd_verbalize(
    instance_path: &Path,
    label_map_path: &Path,
    lexicon_path: &Path,
    ontology_path: &Path,
) -> Result<(String, i32), CliError> {
    let (_, onto) = load_ontology_graph(ontology_path)?;
    let lexicon_text = read_file(lexicon_path)?;
    let lexicon =
        lexicon::load_llod(&lexicon_text).map_err(|e| CliError::from(e).in_file(lexicon_path))?;
    let instance_text = read_file(instance_path)?;
    let instance = rdf::parse_turtle(&instance_text)
        .map_err(|e| CliError::from(e).in_file(instance_path))?;
    let mut label_map: BTreeMap<Iri, String> = BTreeMap::new();
    for (iri, label) in load_json_map(label_map_path)? {
        label_map.insert(
            Iri::new(iri).map_err(|e| CliError::from(e).in_file(label_map_path))?,
            label,
        );
    }
    let phrase = lexicon::verbalize(&lexicon, &onto, &instance, &label_map)?;
    Ok((format!("{phrase}\n"), EXIT_OK))
}

fn cmd_match_terms(
    ontology_terms_path: &Path,
    external_terms_path: &Path,
    threshold: f64,
) -> Result<(String, i32), CliError> {
    let mut cfg = PreprocessConfig::default();
    if let Ok(path) = std::env::var(STOPWORDS_ENV) {
        let text = read_file(Path::new(&path))?;
        cfg.stop_words = replenish::parse_term_list(&text)
            .into_iter()
            .map(|w| w.to_lowercase())
            .collect::<BTreeSet<_>>();
    }
    let ontology_terms: Vec<TermRecord> =
        replenish::parse_term_list(&read_file(ontology_terms_path)?)
            .into_iter()
            .map(|raw| TermRecord::new(raw, TermSource::Ontology, &cfg))
            .collect();
    let external_terms: Vec<TermRecord> =
        replenish::parse_term_list(&read_file(external_terms_path)?)
            .into_iter()
            .map(|raw| TermRecord::new(raw, TermSource::External, &cfg))
            .collect();
    let report = replenish::match_terms(&ontology_terms, &external_terms, threshold)?;
    Ok((replenish::render_report(&report), EXIT_OK))
}

fn cmd_validate(ontology_path: &Path) -> Result<(String, i32), CliError> {
    let (_, onto) = load_ontology_graph(ontology_path)?;
    let violations = onto.validate();
    let mut out = String::new();
    let mut errors = 0;
    let mut warnings = 0;
    for v in &violations {
        let severity = match v.severity() {
            Severity::Error => {
                errors += 1;
                "error"
            }
            Severity::Warning => {
                warnings += 1;
                "warning"
            }
        };
        out.push_str(&format!("{severity}\t{v}\n"));
    }
    out.push_str(&format!("# errors={errors} warnings={warnings}\n"));
    let code = if errors > 0 { EXIT_SEMANTIC_FAILURE } else { EXIT_OK };
    Ok((out, code))
}
