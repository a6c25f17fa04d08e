//! The acceptance gate: one test per criterion, each printing a PASS line
//! and enforcing its runtime bound.

mod common;

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use mathlod::fol;
use mathlod::lexicon::{load_llod, parse_phrase, serialize_llod};
use mathlod::ontology::{
    Concept, ConceptId, MetaType, OntologyGraph, Severity,
};
use mathlod::rdf::{
    enumerate_models, isomorphic, parse_turtle, serialize_turtle, BlankNode, Iri, RdfGraph,
    Subject, Term, Triple,
};
use mathlod::replenish::{
    cosine, match_terms, preprocess, PreprocessConfig, TermRecord, TermSource, DEFAULT_THRESHOLD,
};
use mathlod::translate::{
    check_semantic_condition, check_semantic_condition_with_schema, map_interpretation, translate,
    TranslationMode,
};
use mathlod::vocab;

fn iri(s: &str) -> Iri {
    Iri::new(s).unwrap()
}

fn omp(local: &str) -> Iri {
    iri(&format!("{}{}", vocab::OMP_NS, local))
}

fn lex(local: &str) -> Iri {
    iri(&format!("{}{}", vocab::LEXICON_NS, local))
}

fn finish(name: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= budget,
        "acceptance {name}: exceeded {budget:?} ({elapsed:?})"
    );
    println!("acceptance {name}: PASS ({} ms)", elapsed.as_millis());
}

#[test]
fn template_fidelity() {
    let started = Instant::now();
    let (_, onto) = fixture_ontology();
    let mapping = fixture_mapping();
    let result = translate(
        &divides_sentence(),
        &mapping,
        &onto,
        TranslationMode::Generic,
    )
    .unwrap();

    // n + 1 triples for the binary sentence
    assert_eq!(result.graph.len(), 3);

    // byte-exact prefix block
    let text = serialize_turtle(&result.graph).unwrap();
    assert!(text.starts_with(
        "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n\
         @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n\
         @prefix owl: <http://www.w3.org/2002/07/owl#> .\n\
         @prefix omp: <http://ontomathpro.org/omp2#> .\n"
    ));

    // exact isomorphism against the golden file
    let golden = parse_turtle(&std::fs::read_to_string(golden_path("translate_generic.ttl")).unwrap())
        .unwrap();
    assert!(isomorphic(&result.graph, &golden));

    // and against the expected template structure with a renamed node
    let mut expected = RdfGraph::new();
    let node = BlankNode::new("x").unwrap();
    expected.insert(Triple::new(
        node.clone(),
        iri(vocab::RDF_TYPE),
        omp("Divisibility_relationship"),
    ));
    expected.insert(Triple::new(node.clone(), omp("hasArgument"), lex("m")));
    expected.insert(Triple::new(node, omp("hasArgument"), lex("n")));
    assert!(isomorphic(&result.graph, &expected));

    finish("template-fidelity", started, Duration::from_secs(1));
}

fn golden_path(name: &str) -> String {
    format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn divisibility_instance_fidelity() {
    let started = Instant::now();
    let (_, onto) = fixture_ontology();
    let mapping = fixture_mapping();
    let translated = translate(
        &divides_sentence(),
        &mapping,
        &onto,
        TranslationMode::RoleProperties,
    )
    .unwrap();

    let lexicon = load_llod(&fixture("lexicon_en.ttl")).unwrap();
    let entity_map: BTreeMap<String, Iri> =
        BTreeMap::from([("m".to_string(), lex("m")), ("n".to_string(), lex("n"))]);
    let parsed = parse_phrase(&lexicon, &onto, "m divides n", &entity_map).unwrap();

    let mut expected = RdfGraph::new();
    let node = BlankNode::new("x").unwrap();
    expected.insert(Triple::new(
        node.clone(),
        iri(vocab::RDF_TYPE),
        omp("Divisibility_relationship"),
    ));
    expected.insert(Triple::new(node.clone(), omp("divisor"), lex("m")));
    expected.insert(Triple::new(node, omp("dividend"), lex("n")));

    assert!(isomorphic(&translated.graph, &expected));
    assert!(isomorphic(&parsed, &expected));
    assert!(isomorphic(&translated.graph, &parsed));

    finish("divisibility-instance-fidelity", started, Duration::from_secs(1));
}

#[test]
fn semantic_condition() {
    let started = Instant::now();
    let (_, onto) = fixture_ontology();
    let mapping = fixture_mapping();
    let sentence = divides_sentence();

    for with_axiom in [false, true] {
        let theory = divides_theory(with_axiom);
        for domain_size in 1..=3 {
            // the two enumerators must agree on the model count exactly
            let oracle_count = oracle_fol_models(&theory, &sentence, domain_size).len();
            let primary_count = fol::enumerate_models(&theory, &sentence, domain_size)
                .unwrap()
                .count();
            assert_eq!(primary_count, oracle_count);

            for mode in [TranslationMode::Generic, TranslationMode::RoleProperties] {
                let report =
                    check_semantic_condition(&theory, &sentence, &mapping, &onto, domain_size, mode)
                        .unwrap();
                assert!(report.passed, "axiom={with_axiom} domain={domain_size}");
                assert_eq!(report.models_checked, primary_count);
                assert_eq!(report.strict, Some(true));

                // every mapped image is confirmed by the standalone checker
                let translation = translate(&sentence, &mapping, &onto, mode).unwrap();
                let schema = onto.to_schema_graph().unwrap();
                for interp in fol::enumerate_models(&theory, &sentence, domain_size).unwrap() {
                    let image = map_interpretation(&interp, &mapping, &onto, mode).unwrap();
                    assert!(oracle_rdf_satisfies(&image, &translation.graph, &schema));
                }
            }
        }
    }

    // the RDF-side enumerators agree exactly at micro scale
    let mut graph = RdfGraph::new();
    graph.insert(Triple::new(iri("http://e/c1"), iri("http://e/p"), iri("http://e/c2")));
    let schema = RdfGraph::new();
    let primary = enumerate_models(&graph, &schema, 0).unwrap().count();
    let oracle = oracle_rdf_models(&graph, &schema, 0).len();
    assert_eq!(primary, oracle);

    finish("semantic-condition", started, Duration::from_secs(30));
}

#[test]
fn mutation_sensitivity() {
    let started = Instant::now();
    let (_, onto) = fixture_ontology();
    let mapping = fixture_mapping();
    let theory = divides_theory(false);
    let sentence = divides_sentence();

    // deleting either subproperty edge breaks the generic-mode condition
    for argument in ["divisor", "dividend"] {
        let mut schema = onto.to_schema_graph().unwrap();
        let removed = Triple::new(
            omp(argument),
            iri(vocab::RDFS_SUBPROPERTY_OF),
            omp("hasArgument"),
        );
        assert!(schema.remove(&removed), "schema edge present");
        let report = check_semantic_condition_with_schema(
            &theory,
            &sentence,
            &mapping,
            &onto,
            &schema,
            2,
            TranslationMode::Generic,
        )
        .unwrap();
        assert!(!report.passed, "argument {argument}");
        assert!(report.counterexample.is_some());
        let counterexample = report.counterexample.unwrap();
        // the counterexample is concrete: it satisfies the sentence but its
        // image no longer satisfies the translation
        assert!(fol::satisfies(&counterexample, &sentence).unwrap());
    }

    // deleting a role's kind parent makes validation fail, and the CLI
    // exits 1 on the corresponding fixture
    let kindless = OntologyGraph::builder()
        .concept(Concept::new(
            ConceptId::new(omp("Dividend")),
            MetaType::Role,
        ))
        .build();
    assert!(kindless
        .validate()
        .iter()
        .any(|v| v.severity() == Severity::Error));

    let output = std::process::Command::new(env!("CARGO_BIN_EXE_mathlod"))
        .args([
            "validate",
            "--ontology",
            fixture_path("divisibility_kindless.ttl").to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&output.stdout).contains("role-without-kind-ancestor"));

    finish("mutation-sensitivity", started, Duration::from_secs(10));
}

#[test]
fn llod_round_trip() {
    let started = Instant::now();
    let lexicon = load_llod(&fixture("lexicon_en.ttl")).unwrap();

    let first = serialize_llod(&lexicon).unwrap();
    let reloaded = load_llod(&first).unwrap();
    let second = serialize_llod(&reloaded).unwrap();
    assert_eq!(first, second, "second serialization is byte-identical");
    assert!(isomorphic(
        &parse_turtle(&first).unwrap(),
        &parse_turtle(&second).unwrap()
    ));

    // the loaded lexicon reproduces the entry structure
    let entry = reloaded.entry(&lex("EN-v-divide")).unwrap();
    assert_eq!(entry.canonical_form.written_rep, "divide");
    let frame = &entry.frames[0];
    assert_eq!(frame.slots.len(), 2);
    let sense = &entry.senses[0];
    assert_eq!(
        sense.slot_bindings.values().cloned().collect::<Vec<_>>(),
        vec![omp("divisor"), omp("dividend")]
    );
    assert_eq!(
        sense.relationship_class,
        ConceptId::new(omp("Divisibility_relationship"))
    );

    finish("llod-round-trip", started, Duration::from_secs(1));
}

#[test]
fn similarity_regression() {
    let started = Instant::now();
    let cfg = PreprocessConfig::default();
    let pairs = [
        (
            "Riemann--Stieltjes integral",
            "Riemann--Stieltjes probability integral",
            Some(0.866_025_403_784_438_6),
        ),
        ("Cesaro summable series", "summable series by Cesaro method", None),
        (
            "Stormer interpolation formula",
            "interpolation formula",
            Some(0.816_496_580_927_726),
        ),
        ("Gaussian interpolation formula", "interpolation formula", None),
        (
            "Adams interpolation formula",
            "Adams formula",
            Some(0.816_496_580_927_726),
        ),
    ];
    for (a, b, expected) in pairs {
        let similarity = cosine(&preprocess(a, &cfg), &preprocess(b, &cfg)).unwrap();
        assert!(
            similarity >= DEFAULT_THRESHOLD,
            "pair ({a}, {b}) scored {similarity}"
        );
        if let Some(value) = expected {
            assert!(
                (similarity - value).abs() < 1e-9,
                "pair ({a}, {b}) scored {similarity}, expected {value}"
            );
        }
    }

    finish("similarity-regression", started, Duration::from_secs(1));
}

#[test]
fn property_suites() {
    let started = Instant::now();

    // Turtle round trip over 50 random graphs
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for case in 0..50 {
        let graph = random_graph(&mut rng, 10);
        let text = serialize_turtle(&graph).unwrap();
        let reparsed = parse_turtle(&text).unwrap();
        assert!(isomorphic(&graph, &reparsed), "case {case}:\n{text}");
    }

    // isomorphism behaves like an equivalence on renamed copies
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    for _ in 0..20 {
        let graph = random_graph(&mut rng, 8);
        let renamed = shuffle_blank_labels(&graph, "_r");
        let renamed_again = shuffle_blank_labels(&renamed, "x");
        assert!(isomorphic(&graph, &graph));
        assert!(isomorphic(&graph, &renamed) && isomorphic(&renamed, &graph));
        assert!(isomorphic(&graph, &renamed_again));
        // deleting one triple breaks isomorphism
        if graph.len() > 1 {
            let mut smaller = renamed.clone();
            let victim = smaller.triples().next().unwrap().clone();
            smaller.remove(&victim);
            assert!(!isomorphic(&graph, &smaller));
        }
    }

    // cosine identity, symmetry, disjointness
    let vocabulary = ["integral", "series", "formula", "number", "prime", "cesaro"];
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for _ in 0..100 {
        let pick = |rng: &mut ChaCha8Rng| -> Vec<String> {
            (0..rng.random_range(1..=4))
                .map(|_| vocabulary[rng.random_range(0..vocabulary.len())].to_string())
                .collect()
        };
        let a = pick(&mut rng);
        let b = pick(&mut rng);
        assert_eq!(cosine(&a, &a).unwrap(), 1.0);
        assert_eq!(cosine(&a, &b).unwrap(), cosine(&b, &a).unwrap());
        let disjoint = a.iter().all(|t| !b.contains(t));
        assert_eq!(cosine(&a, &b).unwrap() == 0.0, disjoint);
    }

    // raising the threshold never increases the matched count
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    let cfg = PreprocessConfig::default();
    for _ in 0..20 {
        let random_terms = |rng: &mut ChaCha8Rng, source| -> Vec<TermRecord> {
            (0..rng.random_range(1..=5))
                .map(|_| {
                    let words: Vec<&str> = (0..rng.random_range(1..=3))
                        .map(|_| vocabulary[rng.random_range(0..vocabulary.len())])
                        .collect();
                    TermRecord::new(words.join(" "), source, &cfg)
                })
                .collect()
        };
        let ontology = random_terms(&mut rng, TermSource::Ontology);
        let external = random_terms(&mut rng, TermSource::External);
        let mut previous = usize::MAX;
        for threshold in [0.1, 0.3, 0.5, 0.7, 0.9, 1.0] {
            let matched = match_terms(&ontology, &external, threshold)
                .unwrap()
                .summary
                .matched;
            assert!(matched <= previous);
            previous = matched;
        }
    }

    // subclass acyclicity and role-kind reachability in the projected schema
    let (schema, onto) = fixture_ontology();
    assert!(onto.validate().is_empty());
    let subclass_edges: Vec<(&Iri, &Iri)> = schema
        .triples()
        .filter(|t| t.predicate.as_str() == vocab::RDFS_SUBCLASS_OF)
        .filter_map(|t| match (&t.subject, &t.object) {
            (Subject::Iri(s), Term::Iri(o)) => Some((s, o)),
            _ => None,
        })
        .collect();
    // acyclic: no node reaches itself
    let reachable = |start: &Iri| -> BTreeSet<&Iri> {
        let mut seen: BTreeSet<&Iri> = BTreeSet::new();
        let mut stack: Vec<&Iri> = subclass_edges
            .iter()
            .filter(|(s, _)| *s == start)
            .map(|(_, o)| *o)
            .collect();
        while let Some(node) = stack.pop() {
            if seen.insert(node) {
                stack.extend(
                    subclass_edges
                        .iter()
                        .filter(|(s, _)| *s == node)
                        .map(|(_, o)| *o),
                );
            }
        }
        seen
    };
    for (s, _) in &subclass_edges {
        assert!(!reachable(s).contains(s), "cycle through {s}");
    }
    // every role reaches a kind through the serialized hierarchy
    let meta_of = |c: &Iri, which: &str| -> bool {
        schema.contains(&Triple::new(
            c.clone(),
            omp("metaOntologicalType"),
            omp(which),
        ))
    };
    let roles: Vec<&Iri> = schema
        .triples()
        .filter(|t| {
            t.predicate == omp("metaOntologicalType") && t.object == Term::Iri(omp("Role"))
        })
        .filter_map(|t| match &t.subject {
            Subject::Iri(s) => Some(s),
            _ => None,
        })
        .collect();
    assert!(!roles.is_empty());
    for role in roles {
        assert!(
            reachable(role).into_iter().any(|c| meta_of(c, "Kind")),
            "{role} reaches no kind"
        );
    }

    // model-set anti-monotonicity
    let sentence = divides_sentence();
    for domain_size in 1..=3 {
        let without: BTreeSet<OracleFolModel> =
            fol::enumerate_models(&divides_theory(false), &sentence, domain_size)
                .unwrap()
                .map(|m| as_oracle_model(&m, &divides_signature()))
                .collect();
        let with: BTreeSet<OracleFolModel> =
            fol::enumerate_models(&divides_theory(true), &sentence, domain_size)
                .unwrap()
                .map(|m| as_oracle_model(&m, &divides_signature()))
                .collect();
        assert!(with.is_subset(&without));
    }

    finish("property-suites", started, Duration::from_secs(60));
}
