//! Structural-subsumption classification of the generated axiom fragment
//! (atomic inclusions, conjunctive definitions, existential restrictions
//! with atomic fillers) into a subsumption taxonomy, plus the per-concept
//! instance seeding and inference the evaluation measures are built on.

use crate::dl::{AxiomKind, ConceptExpr, KnowledgeBase, TOP_LABEL};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReasonerError {
    #[error("inconsistency: `{concept}` is subsumed by both `{left}` and `{right}`, which are declared disjoint")]
    InconsistencyDetected {
        concept: String,
        left: String,
        right: String,
    },
    #[error("taxonomy file line {line}: expected child<TAB>parent")]
    MalformedEdge { line: usize },
}

/// A classified subsumption DAG. Cycles are collapsed into equivalence
/// classes (labeled by their lexicographically least member) before
/// indexing; every node reaches the top label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaxonomyGraph {
    /// Direct (transitively reduced) subclass edges: child → parents.
    pub direct: BTreeMap<String, BTreeSet<String>>,
    /// Strict ancestors per node (reachability index, Top included).
    pub ancestors: BTreeMap<String, BTreeSet<String>>,
    /// All node labels, Top included.
    pub nodes: BTreeSet<String>,
    /// Merged equivalence classes: representative → other members.
    pub merged: BTreeMap<String, BTreeSet<String>>,
}

impl TaxonomyGraph {
    /// Builds a taxonomy from told child→parent pairs (no inference beyond
    /// reachability); nodes without parents attach to Top.
    pub fn from_edge_pairs(pairs: &[(String, String)]) -> Result<TaxonomyGraph, ReasonerError> {
        let mut nodes = BTreeSet::new();
        let mut edges: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
        for (child, parent) in pairs {
            nodes.insert(child.clone());
            nodes.insert(parent.clone());
            edges
                .entry(child.clone())
                .or_default()
                .insert(parent.clone());
        }
        finish_graph(nodes, edges, &[])
    }

    /// Parses the `child<TAB>parent` edge-list format.
    pub fn from_edge_list(text: &str) -> Result<TaxonomyGraph, ReasonerError> {
        let mut pairs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (child, parent) = line
                .split_once('\t')
                .ok_or(ReasonerError::MalformedEdge { line: i + 1 })?;
            if child.trim().is_empty() || parent.trim().is_empty() {
                return Err(ReasonerError::MalformedEdge { line: i + 1 });
            }
            pairs.push((child.trim().to_string(), parent.trim().to_string()));
        }
        TaxonomyGraph::from_edge_pairs(&pairs)
    }

    /// Serializes the direct edges as `child<TAB>parent` lines, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (child, parents) in &self.direct {
            for parent in parents {
                out.push_str(child);
                out.push('\t');
                out.push_str(parent);
                out.push('\n');
            }
        }
        out
    }

    /// True iff `parent` is `child` or a (transitive) superclass of it.
    pub fn subsumed_by(&self, child: &str, parent: &str) -> bool {
        child == parent
            || self
                .ancestors
                .get(child)
                .is_some_and(|a| a.contains(parent))
    }

    /// `node` plus everything below it.
    pub fn descendants_or_self(&self, node: &str) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        out.insert(node.to_string());
        for candidate in &self.nodes {
            if candidate != node && self.subsumed_by(candidate, node) {
                out.insert(candidate.clone());
            }
        }
        out
    }

    /// The node set without Top, for evaluation under `--include-top=false`.
    pub fn concept_nodes(&self, include_top: bool) -> BTreeSet<String> {
        let mut nodes = self.nodes.clone();
        if !include_top {
            nodes.remove(TOP_LABEL);
        }
        nodes
    }
}

/// Existential feature of a concept: role plus filler.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Feature {
    role: String,
    filler: ConceptExpr,
}

/// Classifies the knowledge base: told atomic inclusions, conjunctive
/// right-hand-side decomposition, equivalence unfolding, and intersection
/// introduction for the conjunctive definitions the translator emits.
/// Complete for that fragment; disjunction/negation reasoning is out of
/// scope by construction.
pub fn classify(kb: &KnowledgeBase) -> Result<TaxonomyGraph, ReasonerError> {
    let mut nodes: BTreeSet<String> = BTreeSet::new();
    let mut edges: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    let mut features: BTreeMap<String, BTreeSet<Feature>> = BTreeMap::new();
    let mut definitions: Vec<(String, Vec<ConceptExpr>)> = Vec::new();
    let mut disjoint: Vec<(String, String)> = Vec::new();
    let mut role_edges: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();

    let note_atoms = |expr: &ConceptExpr, nodes: &mut BTreeSet<String>| {
        let mut atoms = BTreeSet::new();
        expr.atoms(&mut atoms);
        nodes.extend(atoms);
    };

    for traced in kb.axioms() {
        match &traced.axiom.kind {
            AxiomKind::SubClassOf(lhs, rhs) => {
                note_atoms(lhs, &mut nodes);
                note_atoms(rhs, &mut nodes);
                if let ConceptExpr::Atomic(child) = lhs {
                    absorb_rhs(child, rhs, &mut edges, &mut features);
                }
            }
            AxiomKind::EquivalentClasses(lhs, rhs) => {
                note_atoms(lhs, &mut nodes);
                note_atoms(rhs, &mut nodes);
                match (lhs, rhs) {
                    (ConceptExpr::Atomic(a), ConceptExpr::Bottom) => {
                        disjoint.push((a.clone(), a.clone()));
                    }
                    (ConceptExpr::And(members), ConceptExpr::Bottom) => {
                        let atoms: Vec<&String> = members
                            .iter()
                            .filter_map(|m| match m {
                                ConceptExpr::Atomic(a) => Some(a),
                                _ => None,
                            })
                            .collect();
                        if atoms.len() == 2 {
                            disjoint.push((atoms[0].clone(), atoms[1].clone()));
                        }
                    }
                    (ConceptExpr::Atomic(a), _) => {
                        absorb_rhs(a, rhs, &mut edges, &mut features);
                        match rhs {
                            ConceptExpr::Atomic(b) => {
                                edges.entry(b.clone()).or_default().insert(a.clone());
                            }
                            ConceptExpr::And(members) => {
                                definitions.push((a.clone(), members.clone()));
                            }
                            other => definitions.push((a.clone(), vec![other.clone()])),
                        }
                    }
                    _ => {}
                }
            }
            AxiomKind::SubRoleOf { sub, sup, .. } => {
                role_edges
                    .entry(sub.clone())
                    .or_default()
                    .insert(sup.clone());
            }
            AxiomKind::ClassAssertion(c, _) => note_atoms(c, &mut nodes),
            _ => {}
        }
    }

    // Close the role hierarchy (it is tiny: includeX ⊑ include).
    let role_reach = transitive_closure(&role_edges);
    let role_subsumes = |sub: &str, sup: &str| {
        sub == sup
            || role_reach
                .get(sub)
                .is_some_and(|s: &BTreeSet<String>| s.contains(sup))
    };

    // Intersection introduction to a fixpoint: D ⊑ A whenever D entails
    // every conjunct of A's definition.
    loop {
        let reach = transitive_closure(&edges);
        let reaches = |from: &str, to: &str| {
            from == to
                || reach
                    .get(from)
                    .is_some_and(|s: &BTreeSet<String>| s.contains(to))
        };
        // Features are inherited from ancestors.
        let feature_set = |node: &str| -> BTreeSet<Feature> {
            let mut out = features.get(node).cloned().unwrap_or_default();
            if let Some(ups) = reach.get(node) {
                for up in ups {
                    if let Some(fs) = features.get(up) {
                        out.extend(fs.iter().cloned());
                    }
                }
            }
            out
        };
        let entails = |node: &str, conjunct: &ConceptExpr| -> bool {
            match conjunct {
                ConceptExpr::Atomic(b) => reaches(node, b),
                ConceptExpr::Top => true,
                ConceptExpr::Exists(role, filler) => feature_set(node).iter().any(|f| {
                    role_subsumes(&f.role, role)
                        && match (&f.filler, filler.as_ref()) {
                            (ConceptExpr::Atomic(have), ConceptExpr::Atomic(want)) => {
                                reaches(have, want)
                            }
                            (have, want) => have == want,
                        }
                }),
                // Anything else (unions, negations, data restrictions) is
                // outside the classified fragment.
                _ => false,
            }
        };

        let mut grew = false;
        for (defined, conjuncts) in &definitions {
            for node in &nodes {
                if node == defined || reaches(node, defined) {
                    continue;
                }
                if conjuncts.iter().all(|c| entails(node, c)) {
                    edges
                        .entry(node.clone())
                        .or_default()
                        .insert(defined.clone());
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }

    let graph = finish_graph(nodes, edges, &disjoint)?;
    Ok(graph)
}

/// Decomposes a right-hand side into parent edges (atomic conjuncts) and
/// existential features.
fn absorb_rhs(
    child: &str,
    rhs: &ConceptExpr,
    edges: &mut BTreeMap<String, BTreeSet<String>>,
    features: &mut BTreeMap<String, BTreeSet<Feature>>,
) {
    let conjuncts: Vec<&ConceptExpr> = match rhs {
        ConceptExpr::And(ms) => ms.iter().collect(),
        other => vec![other],
    };
    for c in conjuncts {
        match c {
            ConceptExpr::Atomic(parent) => {
                edges
                    .entry(child.to_string())
                    .or_default()
                    .insert(parent.clone());
            }
            ConceptExpr::Exists(role, filler) => {
                features.entry(child.to_string()).or_default().insert(Feature {
                    role: role.clone(),
                    filler: filler.as_ref().clone(),
                });
            }
            _ => {}
        }
    }
}

fn transitive_closure(
    edges: &BTreeMap<String, BTreeSet<String>>,
) -> BTreeMap<String, BTreeSet<String>> {
    let mut reach: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for (node, parents) in edges {
        // BFS from each node over the parent edges.
        let mut seen: BTreeSet<String> = BTreeSet::new();
        let mut frontier: Vec<&String> = parents.iter().collect();
        while let Some(next) = frontier.pop() {
            if !seen.insert(next.clone()) {
                continue;
            }
            if let Some(ups) = edges.get(next) {
                frontier.extend(ups.iter());
            }
        }
        reach.insert(node.clone(), seen);
    }
    reach
}

/// Collapses cycles, checks told disjointness, attaches roots to Top, and
/// computes the reachability index plus the transitive reduction.
fn finish_graph(
    mut nodes: BTreeSet<String>,
    edges: BTreeMap<String, BTreeSet<String>>,
    disjoint: &[(String, String)],
) -> Result<TaxonomyGraph, ReasonerError> {
    // Equivalence classes: mutually reachable nodes merge under their
    // lexicographically least member.
    let reach = transitive_closure(&edges);
    let reaches = |from: &str, to: &str| {
        from == to
            || reach
                .get(from)
                .is_some_and(|s: &BTreeSet<String>| s.contains(to))
    };
    let mut representative: BTreeMap<String, String> = BTreeMap::new();
    let mut merged: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for node in &nodes {
        let mut class: Vec<&String> = nodes
            .iter()
            .filter(|other| reaches(node, other) && reaches(other, node))
            .collect();
        class.sort();
        let rep = (*class.first().expect("class contains node")).clone();
        if class.len() > 1 && rep == *node {
            merged.insert(
                rep.clone(),
                class.iter().skip(1).map(|s| (*s).clone()).collect(),
            );
        }
        representative.insert(node.clone(), rep);
    }

    let mut condensed: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for (child, parents) in &edges {
        let c = representative[child].clone();
        for parent in parents {
            let p = representative[parent].clone();
            if c != p {
                condensed.entry(c.clone()).or_default().insert(p);
            }
        }
    }
    nodes = nodes
        .iter()
        .map(|n| representative[n].clone())
        .collect();

    // Told disjointness check: a node below both sides is inconsistent.
    let creach = transitive_closure(&condensed);
    let creaches = |from: &str, to: &str| {
        from == to
            || creach
                .get(from)
                .is_some_and(|s: &BTreeSet<String>| s.contains(to))
    };
    for (left, right) in disjoint {
        let l = representative.get(left).unwrap_or(left).clone();
        let r = representative.get(right).unwrap_or(right).clone();
        if l == r {
            return Err(ReasonerError::InconsistencyDetected {
                concept: l.clone(),
                left: left.clone(),
                right: right.clone(),
            });
        }
        for node in &nodes {
            if creaches(node, &l) && creaches(node, &r) {
                return Err(ReasonerError::InconsistencyDetected {
                    concept: node.clone(),
                    left: left.clone(),
                    right: right.clone(),
                });
            }
        }
    }

    // Attach roots to Top and index ancestors.
    nodes.insert(TOP_LABEL.to_string());
    let mut full = condensed.clone();
    for node in &nodes {
        if node == TOP_LABEL {
            continue;
        }
        let has_parent = full.get(node).is_some_and(|p| !p.is_empty());
        if !has_parent {
            full.entry(node.clone())
                .or_default()
                .insert(TOP_LABEL.to_string());
        }
    }
    let mut ancestors = transitive_closure(&full);
    for node in &nodes {
        let entry = ancestors.entry(node.clone()).or_default();
        if node != TOP_LABEL {
            entry.insert(TOP_LABEL.to_string());
        }
        entry.remove(node);
    }

    // Transitive reduction: keep child→parent only if no intermediate node
    // sits strictly between them.
    let mut direct: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for node in &nodes {
        let ups = match ancestors.get(node) {
            Some(u) => u,
            None => continue,
        };
        for parent in ups {
            let skip = ups.iter().any(|mid| {
                mid != parent
                    && mid != node
                    && ancestors
                        .get(mid)
                        .is_some_and(|a| a.contains(parent))
            });
            if !skip {
                direct.entry(node.clone()).or_default().insert(parent.clone());
            }
        }
    }
    direct.remove(TOP_LABEL);

    Ok(TaxonomyGraph {
        direct,
        ancestors,
        nodes,
        merged,
    })
}

/// Seed-and-infer instance assignment: every concept receives one unique
/// arbitrary instance, and each concept's inferred set collects the seeds
/// of all its descendants (itself included).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceAssignment {
    pub seed: BTreeMap<String, String>,
    pub inferred: BTreeMap<String, BTreeSet<String>>,
}

impl InstanceAssignment {
    pub fn inferred_for(&self, label: &str) -> Option<&BTreeSet<String>> {
        self.inferred.get(label)
    }
}

/// Seeds ι(label) per node and infers instance sets through the taxonomy.
/// Isomorphic taxonomies over the same labels yield identical assignments.
pub fn populate_and_infer(taxonomy: &TaxonomyGraph) -> InstanceAssignment {
    let mut seed = BTreeMap::new();
    for node in &taxonomy.nodes {
        seed.insert(node.clone(), seed_instance(node));
    }
    // children index
    let mut children: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (child, parents) in &taxonomy.direct {
        for parent in parents {
            children.entry(parent).or_default().push(child);
        }
    }
    let mut inferred = BTreeMap::new();
    for node in &taxonomy.nodes {
        let mut set: BTreeSet<String> = BTreeSet::new();
        let mut frontier = vec![node.as_str()];
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        while let Some(next) = frontier.pop() {
            if !seen.insert(next) {
                continue;
            }
            set.insert(seed[next].clone());
            if let Some(kids) = children.get(next) {
                frontier.extend(kids.iter().copied());
            }
        }
        inferred.insert(node.clone(), set);
    }
    InstanceAssignment { seed, inferred }
}

/// The unique arbitrary instance of a concept, derived from its label so
/// that equal labels across ontologies are instantiated equivalently.
pub fn seed_instance(label: &str) -> String {
    format!("inst_{label}")
}
