//! IRIs of the vocabularies used across the crate.

pub const RDF_NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS_NS: &str = "http://www.w3.org/2000/01/rdf-schema#";
pub const OWL_NS: &str = "http://www.w3.org/2002/07/owl#";
pub const OMP_NS: &str = "http://ontomathpro.org/omp2#";
pub const LEXICON_NS: &str = "http://ontomathpro.org/lexicons/";
pub const ONTOLEX_NS: &str = "http://www.w3.org/ns/lemon/ontolex#";
pub const SYNSEM_NS: &str = "http://www.w3.org/ns/lemon/synsem#";
pub const LEXINFO_NS: &str = "http://www.lexinfo.net/ontology/2.0/lexinfo#";

pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

pub const RDFS_SUBCLASS_OF: &str = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
pub const RDFS_SUBPROPERTY_OF: &str = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
pub const RDFS_DOMAIN: &str = "http://www.w3.org/2000/01/rdf-schema#domain";
pub const RDFS_RANGE: &str = "http://www.w3.org/2000/01/rdf-schema#range";
pub const RDFS_LABEL: &str = "http://www.w3.org/2000/01/rdf-schema#label";
pub const RDFS_COMMENT: &str = "http://www.w3.org/2000/01/rdf-schema#comment";

pub const OWL_CLASS: &str = "http://www.w3.org/2002/07/owl#Class";

pub const OMP_HAS_ARGUMENT: &str = "http://ontomathpro.org/omp2#hasArgument";
pub const OMP_META_TYPE: &str = "http://ontomathpro.org/omp2#metaOntologicalType";
pub const OMP_KIND: &str = "http://ontomathpro.org/omp2#Kind";
pub const OMP_ROLE: &str = "http://ontomathpro.org/omp2#Role";

pub const ONTOLEX_LEXICAL_ENTRY: &str = "http://www.w3.org/ns/lemon/ontolex#LexicalEntry";
pub const ONTOLEX_FORM: &str = "http://www.w3.org/ns/lemon/ontolex#Form";
pub const ONTOLEX_LEXICAL_SENSE: &str = "http://www.w3.org/ns/lemon/ontolex#LexicalSense";
pub const ONTOLEX_CANONICAL_FORM: &str = "http://www.w3.org/ns/lemon/ontolex#canonicalForm";
pub const ONTOLEX_OTHER_FORM: &str = "http://www.w3.org/ns/lemon/ontolex#otherForm";
pub const ONTOLEX_WRITTEN_REP: &str = "http://www.w3.org/ns/lemon/ontolex#writtenRep";
pub const ONTOLEX_SENSE: &str = "http://www.w3.org/ns/lemon/ontolex#sense";
pub const ONTOLEX_REFERENCE: &str = "http://www.w3.org/ns/lemon/ontolex#reference";

pub const SYNSEM_SYN_BEHAVIOR: &str = "http://www.w3.org/ns/lemon/synsem#synBehavior";
pub const SYNSEM_ONTO_MAP: &str = "http://www.w3.org/ns/lemon/synsem#OntoMap";
pub const SYNSEM_SUBMAP: &str = "http://www.w3.org/ns/lemon/synsem#submap";
pub const SYNSEM_SUBJ_OF_PROP: &str = "http://www.w3.org/ns/lemon/synsem#subjOfProp";
pub const SYNSEM_OBJ_OF_PROP: &str = "http://www.w3.org/ns/lemon/synsem#objOfProp";
pub const SYNSEM_IS_A: &str = "http://www.w3.org/ns/lemon/synsem#isA";
pub const SYNSEM_MARKER: &str = "http://www.w3.org/ns/lemon/synsem#marker";

pub const LEXINFO_PART_OF_SPEECH: &str =
    "http://www.lexinfo.net/ontology/2.0/lexinfo#partOfSpeech";
pub const LEXINFO_SUBJECT: &str = "http://www.lexinfo.net/ontology/2.0/lexinfo#subject";
pub const LEXINFO_DIRECT_OBJECT: &str =
    "http://www.lexinfo.net/ontology/2.0/lexinfo#directObject";
pub const LEXINFO_PREPOSITIONAL_OBJECT: &str =
    "http://www.lexinfo.net/ontology/2.0/lexinfo#prepositionalObject";
pub const LEXINFO_TRANSITIVE_FRAME: &str =
    "http://www.lexinfo.net/ontology/2.0/lexinfo#TransitiveFrame";
pub const LEXINFO_TRANSITIVE_PP_FRAME: &str =
    "http://www.lexinfo.net/ontology/2.0/lexinfo#TransitivePPFrame";
pub const LEXINFO_NOUN_PP_FRAME: &str =
    "http://www.lexinfo.net/ontology/2.0/lexinfo#NounPPFrame";
pub const LEXINFO_CLASS_SUBJECT: &str = "http://www.lexinfo.net/ontology/2.0/lexinfo#Subject";
pub const LEXINFO_CLASS_DIRECT_OBJECT: &str =
    "http://www.lexinfo.net/ontology/2.0/lexinfo#DirectObject";
pub const LEXINFO_CLASS_PREPOSITIONAL_OBJECT: &str =
    "http://www.lexinfo.net/ontology/2.0/lexinfo#PrepositionalObject";
