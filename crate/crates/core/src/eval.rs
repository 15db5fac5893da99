//! Taxonomy evaluation: lexical precision/recall over concept label sets
//! and the four instance-based inference measures between a learned and a
//! gold taxonomy, all in exact rational arithmetic.

use crate::rational::Score;
use crate::reasoner::{populate_and_infer, TaxonomyGraph};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("{side} ontology has no concepts")]
    EmptyOntology { side: &'static str },
}

/// Case-folded CamelCase canonicalization used for common-concept matching.
pub fn canonical_key(label: &str) -> String {
    crate::translate::camel(label).to_lowercase()
}

/// Lexical precision and recall between two label sets, after label
/// normalization. Empty denominators yield `None` rather than zero.
pub fn lexical_scores(
    learned: &BTreeSet<String>,
    gold: &BTreeSet<String>,
) -> (Option<Score>, Option<Score>) {
    let learned_keys: BTreeSet<String> = learned.iter().map(|l| canonical_key(l)).collect();
    let gold_keys: BTreeSet<String> = gold.iter().map(|l| canonical_key(l)).collect();
    let common = learned_keys.intersection(&gold_keys).count() as u64;
    (
        Score::new(common, learned_keys.len() as u64),
        Score::new(common, gold_keys.len() as u64),
    )
}

/// The full metric bundle: lexical overlap scores, the four IIM measures,
/// and every count/term they were computed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IimReport {
    pub lp: Option<Score>,
    pub lr: Option<Score>,
    pub iim_p: Option<Score>,
    pub iim_r: Option<Score>,
    pub iim_op: Option<Score>,
    pub iim_or: Option<Score>,
    pub counts: IimCounts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IimCounts {
    /// |C_l|: concepts in the learned taxonomy.
    pub learned_concepts: u64,
    /// |C_gs|: concepts in the gold taxonomy.
    pub gold_concepts: u64,
    /// |CC|: common concepts.
    pub common_concepts: u64,
    /// Σ over CC of |II_l ∩ II_gs|: the shared numerator.
    pub shared_numerator: u64,
    /// Σ over C_l of |II_l|.
    pub learned_instance_total: u64,
    /// Σ over C_gs of |II_gs|.
    pub gold_instance_total: u64,
    /// Σ over CC of |II_l|.
    pub learned_common_total: u64,
    /// Σ over CC of |II_gs|.
    pub gold_common_total: u64,
}

/// Computes the four IIM measures between a learned and a gold taxonomy.
/// Each concept is seeded with one unique label-derived instance, instances
/// are inferred through the classified topology, and the inferred sets are
/// compared. All four measures share one intersection pass; the overlap
/// variants restrict denominators to the common concepts.
pub fn iim(
    learned: &TaxonomyGraph,
    gold: &TaxonomyGraph,
    include_top: bool,
) -> Result<IimReport, EvalError> {
    let learned_nodes = learned.concept_nodes(include_top);
    let gold_nodes = gold.concept_nodes(include_top);
    if learned_nodes.is_empty() {
        return Err(EvalError::EmptyOntology { side: "learned" });
    }
    if gold_nodes.is_empty() {
        return Err(EvalError::EmptyOntology { side: "gold" });
    }

    let learned_instances = populate_and_infer(learned);
    let gold_instances = populate_and_infer(gold);

    // Common concepts are matched on canonicalized labels.
    let gold_by_key: BTreeMap<String, &String> =
        gold_nodes.iter().map(|l| (canonical_key(l), l)).collect();

    let mut shared_numerator = 0u64;
    let mut learned_common_total = 0u64;
    let mut gold_common_total = 0u64;
    let mut common_concepts = 0u64;

    for learned_label in &learned_nodes {
        let Some(gold_label) = gold_by_key.get(&canonical_key(learned_label)) else {
            continue;
        };
        common_concepts += 1;
        let ii_l = learned_instances
            .inferred_for(learned_label)
            .cloned()
            .unwrap_or_default();
        let ii_g = gold_instances
            .inferred_for(gold_label)
            .cloned()
            .unwrap_or_default();
        // Instances are label-derived, so cross-ontology intersection is
        // set intersection over canonicalized seed labels.
        let keys_l: BTreeSet<String> = ii_l.iter().map(|i| canonical_key(i)).collect();
        let keys_g: BTreeSet<String> = ii_g.iter().map(|i| canonical_key(i)).collect();
        shared_numerator += keys_l.intersection(&keys_g).count() as u64;
        learned_common_total += ii_l.len() as u64;
        gold_common_total += ii_g.len() as u64;
    }

    let learned_instance_total: u64 = learned_nodes
        .iter()
        .map(|l| learned_instances.inferred_for(l).map_or(0, |s| s.len()) as u64)
        .sum();
    let gold_instance_total: u64 = gold_nodes
        .iter()
        .map(|l| gold_instances.inferred_for(l).map_or(0, |s| s.len()) as u64)
        .sum();

    let (lp, lr) = lexical_scores(&learned_nodes, &gold_nodes);
    Ok(IimReport {
        lp,
        lr,
        iim_p: Score::new(shared_numerator, learned_instance_total),
        iim_r: Score::new(shared_numerator, gold_instance_total),
        iim_op: Score::new(shared_numerator, learned_common_total),
        iim_or: Score::new(shared_numerator, gold_common_total),
        counts: IimCounts {
            learned_concepts: learned_nodes.len() as u64,
            gold_concepts: gold_nodes.len() as u64,
            common_concepts,
            shared_numerator,
            learned_instance_total,
            gold_instance_total,
            learned_common_total,
            gold_common_total,
        },
    })
}
