//! Translate a ground sentence into its reified-relationship RDF graph, in
//! both translation modes.
//!
//! ```bash
//! cargo run --example translate_sentence
//! ```

use mathlod::fol;
use mathlod::ontology::OntologyGraph;
use mathlod::rdf::{parse_turtle, serialize_turtle};
use mathlod::translate::{load_mapping, translate, TranslationMode};

fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("fixture file")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let onto = OntologyGraph::from_schema_graph(&parse_turtle(&fixture("divisibility.ttl"))?)?;
    let (mapping, _) = load_mapping(&fixture("divisibility_mapping.json"))?;
    let theory = fol::parse_theory(&fixture("theory_empty.fol"))?;
    let sentence = fol::parse_sentence("Divides(m, n)", theory.signature())?;

    for (label, mode) in [
        ("generic", TranslationMode::Generic),
        ("role-properties", TranslationMode::RoleProperties),
    ] {
        let result = translate(&sentence, &mapping, &onto, mode)?;
        println!("# mode = {label}\n{}", serialize_turtle(&result.graph)?);
    }
    Ok(())
}
