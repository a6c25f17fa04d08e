//! Parse a controlled natural-language phrase into a relationship-instance
//! graph using the lexicon's syntactic frames.
//!
//! ```bash
//! cargo run --example parse_phrase
//! ```

use std::collections::BTreeMap;

use mathlod::lexicon::{load_llod, parse_phrase};
use mathlod::ontology::OntologyGraph;
use mathlod::rdf::{parse_turtle, serialize_turtle, Iri};

fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("fixture file")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let onto = OntologyGraph::from_schema_graph(&parse_turtle(&fixture("divisibility.ttl"))?)?;
    let lexicon = load_llod(&fixture("lexicon_en.ttl"))?;
    let entity_map: BTreeMap<String, Iri> =
        serde_json_map(&fixture("entity_map.json"))?;

    for phrase in ["m divides n", "n divides n"] {
        let graph = parse_phrase(&lexicon, &onto, phrase, &entity_map)?;
        println!("# \"{phrase}\"\n{}", serialize_turtle(&graph)?);
    }
    Ok(())
}

fn serde_json_map(text: &str) -> Result<BTreeMap<String, Iri>, Box<dyn std::error::Error>> {
    let raw: BTreeMap<String, String> = serde_json::from_str(text)?;
    let mut out = BTreeMap::new();
    for (token, iri) in raw {
        out.insert(token, Iri::new(iri)?);
    }
    Ok(out)
}
