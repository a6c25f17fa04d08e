//! Verify the translation's model-theoretic soundness: every finite model
//! of the theory plus the sentence must map to a model of the translated
//! graph under the ontology schema.
//!
//! ```bash
//! cargo run --example check_condition
//! ```

use mathlod::fol;
use mathlod::ontology::OntologyGraph;
use mathlod::rdf::parse_turtle;
use mathlod::translate::{check_semantic_condition, load_mapping, TranslationMode};

fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("fixture file")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let onto = OntologyGraph::from_schema_graph(&parse_turtle(&fixture("divisibility.ttl"))?)?;
    let (mapping, _) = load_mapping(&fixture("divisibility_mapping.json"))?;

    for theory_file in ["theory_empty.fol", "theory_divides.fol"] {
        let theory = fol::parse_theory(&fixture(theory_file))?;
        let sentence = fol::parse_sentence("Divides(m, n)", theory.signature())?;
        for (label, mode) in [
            ("generic", TranslationMode::Generic),
            ("role-properties", TranslationMode::RoleProperties),
        ] {
            for domain_size in 1..=3 {
                let report =
                    check_semantic_condition(&theory, &sentence, &mapping, &onto, domain_size, mode)?;
                println!(
                    "{theory_file} mode={label} domain={domain_size}: {} checked={} strict={:?}",
                    if report.passed { "PASS" } else { "FAIL" },
                    report.models_checked,
                    report.strict,
                );
            }
        }
    }
    Ok(())
}
