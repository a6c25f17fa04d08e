use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::model::{BlankNode, RdfGraph, Subject, Term, Triple};

/// True iff there is a bijection between the blank nodes of `a` and `b`
/// under which the triple sets become equal. IRIs and literals must match
/// exactly; prefix maps are ignored.
pub fn isomorphic(a: &RdfGraph, b: &RdfGraph) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let ground_a: HashSet<&Triple> = a.triples().filter(|t| is_ground(t)).collect();
    let ground_b: HashSet<&Triple> = b.triples().filter(|t| is_ground(t)).collect();
    if ground_a != ground_b {
        return false;
    }

    let blanks_a = a.blank_nodes();
    let blanks_b = b.blank_nodes();
    if blanks_a.len() != blanks_b.len() {
        return false;
    }
    if blanks_a.is_empty() {
        return true;
    }

    let open_a: Vec<&Triple> = a.triples().filter(|t| !is_ground(t)).collect();
    let open_b: HashSet<&Triple> = b.triples().filter(|t| !is_ground(t)).collect();
    if open_a.len() != open_b.len() {
        return false;
    }

    // signature pruning: a blank node can only map to one with the same
    // (position, predicate) degree profile
    let sig_a = signatures(a);
    let sig_b = signatures(b);
    let mut candidates: Vec<(&BlankNode, Vec<&BlankNode>)> = Vec::new();
    for x in &blanks_a {
        let cands: Vec<&BlankNode> = blanks_b
            .iter()
            .copied()
            .filter(|y| sig_a.get(*x) == sig_b.get(*y))
            .collect();
        if cands.is_empty() {
            return false;
        }
        candidates.push((x, cands));
    }
    // assign most-constrained nodes first
    candidates.sort_by_key(|(_, c)| c.len());

    let mut mapping: BTreeMap<&BlankNode, &BlankNode> = BTreeMap::new();
    let mut used: HashSet<&BlankNode> = HashSet::new();
    assign(&candidates, 0, &mut mapping, &mut used, &open_a, &open_b)
}

fn is_ground(t: &Triple) -> bool {
    !matches!(t.subject, Subject::Blank(_)) && !matches!(t.object, Term::Blank(_))
}

type Signature = BTreeSet<(u8, String, usize)>;

fn signatures(g: &RdfGraph) -> BTreeMap<&BlankNode, Signature> {
    let mut out: BTreeMap<&BlankNode, BTreeMap<(u8, String), usize>> = BTreeMap::new();
    for t in g.triples() {
        if let Subject::Blank(b) = &t.subject {
            *out.entry(b)
                .or_default()
                .entry((0, t.predicate.as_str().to_string()))
                .or_default() += 1;
        }
        if let Term::Blank(b) = &t.object {
            *out.entry(b)
                .or_default()
                .entry((1, t.predicate.as_str().to_string()))
                .or_default() += 1;
        }
    }
    out.into_iter()
        .map(|(b, counts)| {
            (
                b,
                counts.into_iter().map(|((pos, p), n)| (pos, p, n)).collect(),
            )
        })
        .collect()
}

fn assign<'a>(
    candidates: &[(&'a BlankNode, Vec<&'a BlankNode>)],
    index: usize,
    mapping: &mut BTreeMap<&'a BlankNode, &'a BlankNode>,
    used: &mut HashSet<&'a BlankNode>,
    open_a: &[&Triple],
    open_b: &HashSet<&Triple>,
) -> bool {
    if index == candidates.len() {
        return open_a.iter().all(|t| open_b.contains(&rename(t, mapping)));
    }
    let (node, cands) = &candidates[index];
    for target in cands {
        if used.contains(*target) {
            continue;
        }
        mapping.insert(node, target);
        used.insert(target);
        // prune: every triple of `a` fully covered by the partial mapping
        // must already occur in `b`
        let consistent = open_a.iter().all(|t| {
            if covered(t, mapping) {
                open_b.contains(&rename(t, mapping))
            } else {
                true
            }
        });
        if consistent && assign(candidates, index + 1, mapping, used, open_a, open_b) {
            return true;
        }
        mapping.remove(*node);
        used.remove(*target);
    }
    false
}

fn covered(t: &Triple, mapping: &BTreeMap<&BlankNode, &BlankNode>) -> bool {
    let subject_ok = match &t.subject {
        Subject::Blank(b) => mapping.contains_key(b),
        Subject::Iri(_) => true,
    };
    let object_ok = match &t.object {
        Term::Blank(b) => mapping.contains_key(b),
        _ => true,
    };
    subject_ok && object_ok
}

fn rename(t: &Triple, mapping: &BTreeMap<&BlankNode, &BlankNode>) -> Triple {
    let subject = match &t.subject {
        Subject::Blank(b) => Subject::Blank((*mapping.get(b).unwrap_or(&b)).clone()),
        s => s.clone(),
    };
    let object = match &t.object {
        Term::Blank(b) => Term::Blank((*mapping.get(b).unwrap_or(&b)).clone()),
        o => o.clone(),
    };
    Triple {
        subject,
        predicate: t.predicate.clone(),
        object,
    }
}
