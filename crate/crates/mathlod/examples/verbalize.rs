//! Round-trip a phrase through the instance graph and back: parse it, then
//! verbalize the graph with a label map.
//!
//! ```bash
//! cargo run --example verbalize
//! ```

use std::collections::BTreeMap;

use mathlod::lexicon::{load_llod, parse_phrase, verbalize};
use mathlod::ontology::OntologyGraph;
use mathlod::rdf::{parse_turtle, Iri};

fn fixture(name: &str) -> String {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("fixture file")
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let onto = OntologyGraph::from_schema_graph(&parse_turtle(&fixture("divisibility.ttl"))?)?;
    let lexicon = load_llod(&fixture("lexicon_en.ttl"))?;

    let raw_entities: BTreeMap<String, String> = serde_json::from_str(&fixture("entity_map.json"))?;
    let mut entity_map: BTreeMap<String, Iri> = BTreeMap::new();
    let mut label_map: BTreeMap<Iri, String> = BTreeMap::new();
    for (token, iri) in raw_entities {
        let iri = Iri::new(iri)?;
        entity_map.insert(token.clone(), iri.clone());
        label_map.insert(iri, token);
    }

    let phrase = "m divides n";
    let graph = parse_phrase(&lexicon, &onto, phrase, &entity_map)?;
    let rendered = verbalize(&lexicon, &onto, &graph, &label_map)?;
    println!("in:  {phrase}");
    println!("out: {rendered}");
    assert_eq!(rendered, phrase);
    Ok(())
}
