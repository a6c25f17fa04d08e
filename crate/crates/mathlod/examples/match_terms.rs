//! Align an external term list against ontology terminology with the
//! default preprocessing and threshold.
//!
//! ```bash
//! cargo run --example match_terms
//! ```

use mathlod::replenish::{
    match_terms, parse_term_list, render_report, PreprocessConfig, TermRecord, TermSource,
    DEFAULT_THRESHOLD,
};

fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("fixture file")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = PreprocessConfig::default();
    let ontology: Vec<TermRecord> = parse_term_list(&fixture("ontology_terms.txt"))
        .into_iter()
        .map(|raw| TermRecord::new(raw, TermSource::Ontology, &cfg))
        .collect();
    let external: Vec<TermRecord> = parse_term_list(&fixture("external_terms.txt"))
        .into_iter()
        .map(|raw| TermRecord::new(raw, TermSource::External, &cfg))
        .collect();
    let report = match_terms(&ontology, &external, DEFAULT_THRESHOLD)?;
    print!("{}", render_report(&report));
    Ok(())
}
