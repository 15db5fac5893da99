//! External knowledge tables: IS-A lexeme variants, quantifier variants,
//! number words, unit→dimension and dimension-adjective maps, hypernym and
//! synonym pairs, and a 4-class named-entity gazetteer.
//!
//! Each table is a UTF-8 TSV file with `#` comments. A default set covering
//! the bundled corpus is embedded in the binary; `--lexicon <dir>` swaps in
//! on-disk tables with the same names.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use thiserror::Error;

/// The quantifiable dimensions recognized by the unit annotator.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum Dimension {
    Height,
    Length,
    Breadth,
    Depth,
    Weight,
    DigitalSize,
    Area,
    Volume,
    Time,
    Date,
    Age,
    Speed,
    Acceleration,
    Distance,
    Currency,
    Physics,
    Cardinality,
}

impl Dimension {
    pub const ALL: [Dimension; 17] = [
        Dimension::Height,
        Dimension::Length,
        Dimension::Breadth,
        Dimension::Depth,
        Dimension::Weight,
        Dimension::DigitalSize,
        Dimension::Area,
        Dimension::Volume,
        Dimension::Time,
        Dimension::Date,
        Dimension::Age,
        Dimension::Speed,
        Dimension::Acceleration,
        Dimension::Distance,
        Dimension::Currency,
        Dimension::Physics,
        Dimension::Cardinality,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Dimension::Height => "HEIGHT",
            Dimension::Length => "LENGTH",
            Dimension::Breadth => "BREADTH",
            Dimension::Depth => "DEPTH",
            Dimension::Weight => "WEIGHT",
            Dimension::DigitalSize => "DIGITAL_SIZE",
            Dimension::Area => "AREA",
            Dimension::Volume => "VOLUME",
            Dimension::Time => "TIME",
            Dimension::Date => "DATE",
            Dimension::Age => "AGE",
            Dimension::Speed => "SPEED",
            Dimension::Acceleration => "ACCELERATION",
            Dimension::Distance => "DISTANCE",
            Dimension::Currency => "CURRENCY",
            Dimension::Physics => "PHYSICS",
            Dimension::Cardinality => "CARDINALITY",
        }
    }

    /// Concept-label form, e.g. `DigitalSize`.
    pub fn concept_name(&self) -> &'static str {
        match self {
            Dimension::Height => "Height",
            Dimension::Length => "Length",
            Dimension::Breadth => "Breadth",
            Dimension::Depth => "Depth",
            Dimension::Weight => "Weight",
            Dimension::DigitalSize => "DigitalSize",
            Dimension::Area => "Area",
            Dimension::Volume => "Volume",
            Dimension::Time => "Time",
            Dimension::Date => "Date",
            Dimension::Age => "Age",
            Dimension::Speed => "Speed",
            Dimension::Acceleration => "Acceleration",
            Dimension::Distance => "Distance",
            Dimension::Currency => "Currency",
            Dimension::Physics => "Physics",
            Dimension::Cardinality => "Cardinality",
        }
    }
}

impl FromStr for Dimension {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Dimension::ALL
            .iter()
            .find(|d| d.as_str().eq_ignore_ascii_case(s))
            .copied()
            .ok_or(())
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which reading an IS-A lexeme carries.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum IsaKind {
    /// "is", "is a kind of": subject is a kind of object.
    Hyponymy,
    /// "includes": object is a kind (or part) of subject.
    Hypernymy,
    /// "is like": subject and object share characteristics.
    Similarity,
    /// "is same as": subject and object coincide.
    Equivalence,
    /// "may be": possible membership.
    ModalMay,
    /// "can become": possible future membership.
    ModalCan,
    /// "was": past membership.
    TensePast,
}

impl IsaKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            IsaKind::Hyponymy => "hyponymy",
            IsaKind::Hypernymy => "hypernymy",
            IsaKind::Similarity => "similarity",
            IsaKind::Equivalence => "equivalence",
            IsaKind::ModalMay => "modal-may",
            IsaKind::ModalCan => "modal-can",
            IsaKind::TensePast => "tense-past",
        }
    }
}

impl FromStr for IsaKind {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "hyponymy" => IsaKind::Hyponymy,
            "hypernymy" => IsaKind::Hypernymy,
            "similarity" => IsaKind::Similarity,
            "equivalence" => IsaKind::Equivalence,
            "modal-may" => IsaKind::ModalMay,
            "modal-can" => IsaKind::ModalCan,
            "tense-past" => IsaKind::TensePast,
            _ => return Err(()),
        })
    }
}

/// Polarity of a dimension adjective: `tall` maximizes Height, `short`
/// minimizes it.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum Sense {
    Min,
    Max,
}

/// Canonical quantifier forms.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum CanonicalQuantifier {
    A,
    An,
    The,
    Some,
    All,
    Only,
    AtLeast,
    AtMost,
}

impl CanonicalQuantifier {
    pub fn as_str(&self) -> &'static str {
        match self {
            CanonicalQuantifier::A => "a",
            CanonicalQuantifier::An => "an",
            CanonicalQuantifier::The => "the",
            CanonicalQuantifier::Some => "some",
            CanonicalQuantifier::All => "all",
            CanonicalQuantifier::Only => "only",
            CanonicalQuantifier::AtLeast => "at-least",
            CanonicalQuantifier::AtMost => "at-most",
        }
    }
}

impl FromStr for CanonicalQuantifier {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "a" => CanonicalQuantifier::A,
            "an" => CanonicalQuantifier::An,
            "the" => CanonicalQuantifier::The,
            "some" => CanonicalQuantifier::Some,
            "all" => CanonicalQuantifier::All,
            "only" => CanonicalQuantifier::Only,
            "at-least" => CanonicalQuantifier::AtLeast,
            "at-most" => CanonicalQuantifier::AtMost,
            _ => return Err(()),
        })
    }
}

/// The 4-class named-entity inventory.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum NerClass {
    Person,
    Location,
    Organization,
    Misc,
}

impl NerClass {
    pub fn concept_name(&self) -> &'static str {
        match self {
            NerClass::Person => "Person",
            NerClass::Location => "Location",
            NerClass::Organization => "Organization",
            NerClass::Misc => "Misc",
        }
    }
}

impl FromStr for NerClass {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "person" => NerClass::Person,
            "location" => NerClass::Location,
            "organization" => NerClass::Organization,
            "misc" => NerClass::Misc,
            _ => return Err(()),
        })
    }
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("{file}:{line}: malformed row: {reason}")]
    MalformedRow {
        file: String,
        line: usize,
        reason: String,
    },
    #[error("{file}:{line}: unknown dimension `{name}`")]
    UnknownDimension {
        file: String,
        line: usize,
        name: String,
    },
    #[error("hypernym table contains a cycle through: {}", labels.join(" -> "))]
    HypernymCycle { labels: Vec<String> },
    #[error("cannot read {file}: {source}")]
    Io {
        file: String,
        #[source]
        source: std::io::Error,
    },
}

/// An entry in the IS-A variant table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsaVariant {
    pub canonical: String,
    pub kind: IsaKind,
}

/// Immutable after load; safe to share across pipeline workers.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    /// Lexeme sequence (space-joined, lowercase) → canonical IS-A form.
    pub isa_variants: BTreeMap<String, IsaVariant>,
    /// Lexeme sequence (lowercase) → canonical quantifier.
    pub quantifier_variants: BTreeMap<String, CanonicalQuantifier>,
    /// Number word → value. Values ≥ 100 act as multipliers when composing
    /// spelled-out numbers.
    pub number_words: BTreeMap<String, u64>,
    /// Noun lexeme → measured dimension.
    pub unit_map: BTreeMap<String, Dimension>,
    /// Adjective → (dimension, polarity).
    pub dimension_adjectives: BTreeMap<String, (Dimension, Sense)>,
    /// (hyponym label, hypernym label) pairs, both in canonical label form.
    pub hypernym_pairs: BTreeSet<(String, String)>,
    /// Noun phrase → canonical noun phrase.
    pub synonyms: BTreeMap<String, String>,
    /// Proper noun (space-joined surface) → entity class.
    pub ner_gazetteer: BTreeMap<String, NerClass>,
    /// Longest variant length, in tokens, for the sequence matchers.
    max_isa_len: usize,
    max_quantifier_len: usize,
}

const ISA_VARIANTS: &str = include_str!("../data/isa_variants.tsv");
const QUANTIFIERS: &str = include_str!("../data/quantifiers.tsv");
const NUMBER_WORDS: &str = include_str!("../data/number_words.tsv");
const UNITS: &str = include_str!("../data/units.tsv");
const DIM_ADJECTIVES: &str = include_str!("../data/dim_adjectives.tsv");
const HYPERNYMS: &str = include_str!("../data/hypernyms.tsv");
const SYNONYMS: &str = include_str!("../data/synonyms.tsv");
const GAZETTEER: &str = include_str!("../data/gazetteer.tsv");

/// File names looked up inside a lexicon directory. Missing files fall back
/// to empty tables, so a directory can override just one table.
pub const TABLE_FILES: [&str; 8] = [
    "isa_variants.tsv",
    "quantifiers.tsv",
    "number_words.tsv",
    "units.tsv",
    "dim_adjectives.tsv",
    "hypernyms.tsv",
    "synonyms.tsv",
    "gazetteer.tsv",
];

impl Lexicon {
    /// The embedded default tables.
    pub fn embedded() -> Self {
        Lexicon::from_table_sources(&[
            ("isa_variants.tsv", ISA_VARIANTS),
            ("quantifiers.tsv", QUANTIFIERS),
            ("number_words.tsv", NUMBER_WORDS),
            ("units.tsv", UNITS),
            ("dim_adjectives.tsv", DIM_ADJECTIVES),
            ("hypernyms.tsv", HYPERNYMS),
            ("synonyms.tsv", SYNONYMS),
            ("gazetteer.tsv", GAZETTEER),
        ])
        .expect("embedded lexicon tables are well-formed")
    }

    /// Loads all tables from a directory. Absent files yield empty tables.
    pub fn load_dir(dir: &Path) -> Result<Self, LexiconError> {
        let mut sources = Vec::new();
        for name in TABLE_FILES {
            let path = dir.join(name);
            if path.exists() {
                let text = std::fs::read_to_string(&path).map_err(|source| LexiconError::Io {
                    file: path.display().to_string(),
                    source,
                })?;
                sources.push((name, text));
            }
        }
        let borrowed: Vec<(&str, &str)> =
            sources.iter().map(|(n, t)| (*n, t.as_str())).collect();
        Lexicon::from_table_sources(&borrowed)
    }

    /// Builds a lexicon from (file name, TSV text) pairs. Loading is
    /// deterministic and independent of pair order.
    pub fn from_table_sources(sources: &[(&str, &str)]) -> Result<Self, LexiconError> {
        let mut lex = Lexicon::default();
        for (name, text) in sources {
            match *name {
                "isa_variants.tsv" => lex.load_isa_variants(name, text)?,
                "quantifiers.tsv" => lex.load_quantifiers(name, text)?,
                "number_words.tsv" => lex.load_number_words(name, text)?,
                "units.tsv" => lex.load_units(name, text)?,
                "dim_adjectives.tsv" => lex.load_dim_adjectives(name, text)?,
                "hypernyms.tsv" => lex.load_hypernyms(name, text)?,
                "synonyms.tsv" => lex.load_synonyms(name, text)?,
                "gazetteer.tsv" => lex.load_gazetteer(name, text)?,
                other => {
                    return Err(LexiconError::MalformedRow {
                        file: other.to_string(),
                        line: 0,
                        reason: "unknown table name".to_string(),
                    })
                }
            }
        }
        lex.close_canonical_forms();
        lex.check_hypernym_acyclic()?;
        lex.max_isa_len = lex
            .isa_variants
            .keys()
            .map(|k| k.split(' ').count())
            .max()
            .unwrap_or(0);
        lex.max_quantifier_len = lex
            .quantifier_variants
            .keys()
            .map(|k| k.split(' ').count())
            .max()
            .unwrap_or(0);
        Ok(lex)
    }

    /// Every canonical form maps to itself (closure under normalization).
    fn close_canonical_forms(&mut self) {
        let canon: Vec<(String, IsaKind)> = self
            .isa_variants
            .values()
            .map(|v| (v.canonical.clone(), v.kind))
            .collect();
        for (form, kind) in canon {
            self.isa_variants
                .entry(form.clone())
                .or_insert(IsaVariant {
                    canonical: form,
                    kind,
                });
        }
        let canon_q: Vec<CanonicalQuantifier> =
            self.quantifier_variants.values().copied().collect();
        for q in canon_q {
            self.quantifier_variants
                .entry(q.as_str().replace('-', " "))
                .or_insert(q);
        }
    }

    fn check_hypernym_acyclic(&self) -> Result<(), LexiconError> {
        // DFS with an explicit path so the offending cycle can be reported.
        #[derive(Clone, Copy, PartialEq)]
        enum State {
            Visiting,
            Done,
        }
        let mut children: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
        for (child, parent) in &self.hypernym_pairs {
            children.entry(child.as_str()).or_default().push(parent);
        }
        let mut states: BTreeMap<&str, State> = BTreeMap::new();
        let mut path: Vec<&str> = Vec::new();

        fn visit<'a>(
            node: &'a str,
            children: &BTreeMap<&'a str, Vec<&'a str>>,
            states: &mut BTreeMap<&'a str, State>,
            path: &mut Vec<&'a str>,
        ) -> Result<(), Vec<String>> {
            match states.get(node) {
                Some(State::Done) => return Ok(()),
                Some(State::Visiting) => {
                    let start = path.iter().position(|n| *n == node).unwrap_or(0);
                    let mut cycle: Vec<String> =
                        path[start..].iter().map(|s| s.to_string()).collect();
                    cycle.push(node.to_string());
                    return Err(cycle);
                }
                None => {}
            }
            states.insert(node, State::Visiting);
            path.push(node);
            if let Some(next) = children.get(node) {
                for parent in next {
                    visit(parent, children, states, path)?;
                }
            }
            path.pop();
            states.insert(node, State::Done);
            Ok(())
        }

        for node in children.keys().copied().collect::<Vec<_>>() {
            visit(node, &children, &mut states, &mut path)
                .map_err(|labels| LexiconError::HypernymCycle { labels })?;
        }
        Ok(())
    }

    fn load_isa_variants(&mut self, file: &str, text: &str) -> Result<(), LexiconError> {
        for (line_no, cols) in rows(text) {
            let [variant, canonical, kind] =
                fixed_cols::<3>(file, line_no, &cols, "variant\tcanonical\tkind")?;
            let kind: IsaKind = kind.parse().map_err(|_| LexiconError::MalformedRow {
                file: file.to_string(),
                line: line_no,
                reason: format!("unknown IS-A kind `{kind}`"),
            })?;
            self.isa_variants.insert(
                variant.to_lowercase(),
                IsaVariant {
                    canonical: canonical.to_lowercase(),
                    kind,
                },
            );
        }
        Ok(())
    }

    fn load_quantifiers(&mut self, file: &str, text: &str) -> Result<(), LexiconError> {
        for (line_no, cols) in rows(text) {
            let [variant, canonical] =
                fixed_cols::<2>(file, line_no, &cols, "variant\tcanonical")?;
            let canonical: CanonicalQuantifier =
                canonical.parse().map_err(|_| LexiconError::MalformedRow {
                    file: file.to_string(),
                    line: line_no,
                    reason: format!("unknown canonical quantifier `{canonical}`"),
                })?;
            self.quantifier_variants
                .insert(variant.to_lowercase(), canonical);
        }
        Ok(())
    }

    fn load_number_words(&mut self, file: &str, text: &str) -> Result<(), LexiconError> {
        for (line_no, cols) in rows(text) {
            let [word, value] = fixed_cols::<2>(file, line_no, &cols, "word\tvalue")?;
            let value: u64 = value.parse().map_err(|_| LexiconError::MalformedRow {
                file: file.to_string(),
                line: line_no,
                reason: format!("`{value}` is not a nonnegative integer"),
            })?;
            self.number_words.insert(word.to_lowercase(), value);
        }
        Ok(())
    }

    fn load_units(&mut self, file: &str, text: &str) -> Result<(), LexiconError> {
        for (line_no, cols) in rows(text) {
            let [lexeme, dim] = fixed_cols::<2>(file, line_no, &cols, "lexeme\tDIMENSION")?;
            let dim: Dimension = dim.parse().map_err(|_| LexiconError::UnknownDimension {
                file: file.to_string(),
                line: line_no,
                name: dim.to_string(),
            })?;
            self.unit_map.insert(lexeme.to_lowercase(), dim);
        }
        Ok(())
    }

    fn load_dim_adjectives(&mut self, file: &str, text: &str) -> Result<(), LexiconError> {
        for (line_no, cols) in rows(text) {
            let [adj, dim, sense] =
                fixed_cols::<3>(file, line_no, &cols, "adjective\tDIMENSION\tmin|max")?;
            let dim: Dimension = dim.parse().map_err(|_| LexiconError::UnknownDimension {
                file: file.to_string(),
                line: line_no,
                name: dim.to_string(),
            })?;
            let sense = match sense {
                "min" => Sense::Min,
                "max" => Sense::Max,
                other => {
                    return Err(LexiconError::MalformedRow {
                        file: file.to_string(),
                        line: line_no,
                        reason: format!("sense must be min or max, got `{other}`"),
                    })
                }
            };
            self.dimension_adjectives
                .insert(adj.to_lowercase(), (dim, sense));
        }
        Ok(())
    }

    fn load_hypernyms(&mut self, file: &str, text: &str) -> Result<(), LexiconError> {
        for (line_no, cols) in rows(text) {
            let [child, parent] = fixed_cols::<2>(file, line_no, &cols, "child\tparent")?;
            self.hypernym_pairs
                .insert((child.to_string(), parent.to_string()));
        }
        Ok(())
    }

    fn load_synonyms(&mut self, file: &str, text: &str) -> Result<(), LexiconError> {
        for (line_no, cols) in rows(text) {
            let [phrase, canonical] =
                fixed_cols::<2>(file, line_no, &cols, "phrase\tcanonical")?;
            self.synonyms
                .insert(phrase.to_lowercase(), canonical.to_lowercase());
        }
        Ok(())
    }

    fn load_gazetteer(&mut self, file: &str, text: &str) -> Result<(), LexiconError> {
        for (line_no, cols) in rows(text) {
            let [name, class] = fixed_cols::<2>(file, line_no, &cols, "name\tclass")?;
            let class: NerClass = class.parse().map_err(|_| LexiconError::MalformedRow {
                file: file.to_string(),
                line: line_no,
                reason: format!("unknown NER class `{class}`"),
            })?;
            self.ner_gazetteer.insert(name.to_string(), class);
        }
        Ok(())
    }

    /// Longest IS-A variant starting at `words[start]`; returns the match
    /// length and entry.
    pub fn match_isa(&self, words: &[String], start: usize) -> Option<(usize, &IsaVariant)> {
        self.match_sequence(words, start, self.max_isa_len, |key| {
            self.isa_variants.get(key)
        })
    }

    /// Token-level IS-A match with a verb gate: a single-token match only
    /// counts when the token is verb-tagged or already carries an IS-A flag,
    /// so bare nouns like "kind" or "like" never trigger.
    pub fn match_isa_tokens(
        &self,
        tokens: &[crate::token::Token],
        start: usize,
    ) -> Option<(usize, &IsaVariant)> {
        let window_end = (start + self.max_isa_len).min(tokens.len());
        let words: Vec<String> = tokens[start..window_end]
            .iter()
            .map(|t| t.lexeme.clone())
            .collect();
        let (len, variant) = self.match_isa(&words, 0)?;
        let head = &tokens[start];
        let verbish = matches!(
            head.tag,
            crate::tags::PennTag::Vbz
                | crate::tags::PennTag::Vbp
                | crate::tags::PennTag::Vbd
                | crate::tags::PennTag::Vbg
                | crate::tags::PennTag::Vb
                | crate::tags::PennTag::Vbn
                | crate::tags::PennTag::Md
        );
        (len > 1 || verbish || head.isa_kind().is_some()).then_some((len, variant))
    }

    /// Longest quantifier variant starting at `words[start]`.
    pub fn match_quantifier(
        &self,
        words: &[String],
        start: usize,
    ) -> Option<(usize, CanonicalQuantifier)> {
        self.match_sequence(words, start, self.max_quantifier_len, |key| {
            self.quantifier_variants.get(key).copied()
        })
    }

    fn match_sequence<T>(
        &self,
        words: &[String],
        start: usize,
        max_len: usize,
        get: impl Fn(&str) -> Option<T>,
    ) -> Option<(usize, T)> {
        let upper = max_len.min(words.len() - start);
        for len in (1..=upper).rev() {
            let key = words[start..start + len].join(" ").to_lowercase();
            if let Some(v) = get(&key) {
                return Some((len, v));
            }
        }
        None
    }

    /// True iff `(child, parent)` lies in the reflexive-transitive closure of
    /// the hypernym pair table. Absent labels simply yield `false`.
    pub fn lookup_hypernym(&self, child: &str, parent: &str) -> bool {
        if child == parent {
            return true;
        }
        let mut frontier = vec![child];
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        while let Some(node) = frontier.pop() {
            if !seen.insert(node) {
                continue;
            }
            for (c, p) in self.hypernym_pairs.range((node.to_string(), String::new())..) {
                if c != node {
                    break;
                }
                if p == parent {
                    return true;
                }
                frontier.push(p);
            }
        }
        false
    }

    pub fn ner_class(&self, surface: &str) -> Option<NerClass> {
        self.ner_gazetteer.get(surface).copied()
    }
}

fn rows(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((i + 1, line.split('\t').collect()))
        }
    })
}

fn fixed_cols<'a, const N: usize>(
    file: &str,
    line: usize,
    cols: &[&'a str],
    expected: &str,
) -> Result<[&'a str; N], LexiconError> {
    if cols.len() != N || cols.iter().any(|c| c.trim().is_empty()) {
        return Err(LexiconError::MalformedRow {
            file: file.to_string(),
            line,
            reason: format!("expected {expected}"),
        });
    }
    let mut out = [""; N];
    for (slot, col) in out.iter_mut().zip(cols) {
        *slot = col.trim();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_tables_load() {
        let lex = Lexicon::embedded();
        assert_eq!(lex.unit_map.get("feet"), Some(&Dimension::Height));
        assert_eq!(lex.unit_map.get("foot"), Some(&Dimension::Height));
        assert_eq!(
            lex.dimension_adjectives.get("tall"),
            Some(&(Dimension::Height, Sense::Max))
        );
        assert_eq!(lex.ner_class("John"), Some(NerClass::Person));
        assert_eq!(lex.ner_class("Priyansh"), None);
    }

    #[test]
    fn unit_row_maps_feet_to_height() {
        let lex =
            Lexicon::from_table_sources(&[("units.tsv", "feet\tHEIGHT\n")]).unwrap();
        assert_eq!(lex.unit_map.get("feet"), Some(&Dimension::Height));
    }

    #[test]
    fn empty_gazetteer_is_fine() {
        let lex =
            Lexicon::from_table_sources(&[("gazetteer.tsv", "# empty\n")]).unwrap();
        assert!(lex.ner_gazetteer.is_empty());
    }

    #[test]
    fn unknown_dimension_is_a_load_error() {
        let err = Lexicon::from_table_sources(&[("units.tsv", "cubit\tGIRTH\n")])
            .unwrap_err();
        assert!(matches!(err, LexiconError::UnknownDimension { .. }));
    }

    #[test]
    fn hypernym_two_cycle_is_rejected() {
        let err = Lexicon::from_table_sources(&[(
            "hypernyms.tsv",
            "BobCat\tWildCat\nWildCat\tBobCat\n",
        )])
        .unwrap_err();
        assert!(matches!(err, LexiconError::HypernymCycle { .. }));
    }

    #[test]
    fn malformed_row_reports_location() {
        let err = Lexicon::from_table_sources(&[("units.tsv", "feet\n")]).unwrap_err();
        match err {
            LexiconError::MalformedRow { file, line, .. } => {
                assert_eq!(file, "units.tsv");
                assert_eq!(line, 1);
            }
            other => panic!("expected MalformedRow, got {other:?}"),
        }
    }

    #[test]
    fn hypernym_lookup_direct_reflexive_transitive() {
        let lex = Lexicon::from_table_sources(&[(
            "hypernyms.tsv",
            "BobCat\tWildCat\nWildCat\tCat\n",
        )])
        .unwrap();
        assert!(lex.lookup_hypernym("BobCat", "WildCat"));
        assert!(lex.lookup_hypernym("Anything", "Anything"));
        assert!(lex.lookup_hypernym("BobCat", "Cat"));
        assert!(!lex.lookup_hypernym("Cat", "BobCat"));
        assert!(!lex.lookup_hypernym("Unknown", "Cat"));
    }

    /// Independent BFS reachability oracle for `lookup_hypernym`.
    fn bfs_reachable(pairs: &[(String, String)], from: &str, to: &str) -> bool {
        if from == to {
            return true;
        }
        let mut queue = std::collections::VecDeque::from([from.to_string()]);
        let mut seen = BTreeSet::new();
        while let Some(node) = queue.pop_front() {
            if !seen.insert(node.clone()) {
                continue;
            }
            for (c, p) in pairs {
                if *c == node {
                    if p == to {
                        return true;
                    }
                    queue.push_back(p.clone());
                }
            }
        }
        false
    }

    #[test]
    fn lookup_agrees_with_bfs_oracle_on_loaded_table() {
        let lex = Lexicon::embedded();
        let pairs: Vec<(String, String)> = lex.hypernym_pairs.iter().cloned().collect();
        let mut labels: BTreeSet<&str> = BTreeSet::new();
        for (c, p) in &lex.hypernym_pairs {
            labels.insert(c);
            labels.insert(p);
        }
        labels.insert("Unrelated");
        for a in &labels {
            for b in &labels {
                assert_eq!(
                    lex.lookup_hypernym(a, b),
                    bfs_reachable(&pairs, a, b),
                    "lookup_hypernym({a}, {b}) disagrees with BFS oracle"
                );
            }
        }
    }

    #[test]
    fn normalization_is_idempotent_on_canonical_forms() {
        let lex = Lexicon::embedded();
        for variant in lex.isa_variants.values() {
            let entry = lex
                .isa_variants
                .get(&variant.canonical)
                .unwrap_or_else(|| panic!("canonical `{}` has no self row", variant.canonical));
            assert_eq!(entry.canonical, variant.canonical);
        }
    }

    #[test]
    fn longest_match_wins() {
        let lex = Lexicon::embedded();
        let words: Vec<String> = ["is", "a", "kind", "of", "vessel"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let (len, var) = lex.match_isa(&words, 0).unwrap();
        assert_eq!(len, 4);
        assert_eq!(var.canonical, "is");
        assert_eq!(var.kind, IsaKind::Hyponymy);
    }

    #[test]
    fn load_is_order_independent() {
        let a = Lexicon::from_table_sources(&[
            ("units.tsv", "feet\tHEIGHT\n"),
            ("gazetteer.tsv", "John\tPerson\n"),
        ])
        .unwrap();
        let b = Lexicon::from_table_sources(&[
            ("gazetteer.tsv", "John\tPerson\n"),
            ("units.tsv", "feet\tHEIGHT\n"),
        ])
        .unwrap();
        assert_eq!(a.unit_map, b.unit_map);
        assert_eq!(a.ner_gazetteer, b.ner_gazetteer);
    }
}
