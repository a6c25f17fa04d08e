//! Run the structural checks over a healthy ontology and over one whose
//! role concept lost its kind ancestor.
//!
//! ```bash
//! cargo run --example validate_ontology
//! ```

use mathlod::ontology::OntologyGraph;
use mathlod::rdf::parse_turtle;

fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("fixture file")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for file in ["divisibility.ttl", "divisibility_kindless.ttl"] {
        let onto = OntologyGraph::from_schema_graph(&parse_turtle(&fixture(file))?)?;
        let violations = onto.validate();
        println!("{file}: {} violation(s)", violations.len());
        for v in &violations {
            println!("  {:?}\t{v}", v.severity());
        }
    }
    Ok(())
}
