//! Exhaustive model enumeration at micro scale, on both sides of the
//! translation: all finite FOL models of a sentence, and all finite RDF
//! interpretations of a small graph under a schema condition.
//!
//! ```bash
//! cargo run --example enumerate_models
//! ```

use mathlod::fol::{self, Signature, Theory};
use mathlod::rdf::{enumerate_models, Iri, RdfGraph, Triple};
use mathlod::vocab;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // FOL side: Divides(m, n) over domains of size 1..3
    let mut sig = Signature::new();
    sig.add_predicate("Divides", 2)?;
    sig.add_constant("m")?;
    sig.add_constant("n")?;
    let theory = Theory::new(sig.clone());
    let sentence = fol::parse_sentence("Divides(m, n)", &sig)?;
    for domain_size in 1..=3 {
        let models = fol::enumerate_models(&theory, &sentence, domain_size)?;
        println!("FOL models of Divides(m, n), domain {domain_size}: {}", models.count());
    }

    // RDF side: one ground triple, then an empty graph under a subclass
    // condition
    let iri = |s: &str| Iri::new(s.to_string()).unwrap();
    let mut graph = RdfGraph::new();
    graph.insert(Triple::new(iri("http://e/c1"), iri("http://e/p"), iri("http://e/c2")));
    let models = enumerate_models(&graph, &RdfGraph::new(), 0)?;
    println!(
        "RDF models of a single ground triple: {} of {} candidates",
        models.count(),
        enumerate_models(&graph, &RdfGraph::new(), 0)?.candidate_count()
    );

    let mut schema = RdfGraph::new();
    schema.insert(Triple::new(
        iri("http://e/C1"),
        iri(vocab::RDFS_SUBCLASS_OF),
        iri("http://e/C2"),
    ));
    let models = enumerate_models(&RdfGraph::new(), &schema, 0)?;
    println!(
        "RDF interpretations respecting one subclass condition: {} of {}",
        models.count(),
        enumerate_models(&RdfGraph::new(), &schema, 0)?.candidate_count()
    );
    Ok(())
}
