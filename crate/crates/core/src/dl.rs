//! SHOQ(D) concept expressions, axiom forms, and the knowledge base that
//! collects them together with symbol tables and provenance.

use crate::token::SourceId;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// Concrete datatypes admitted in data restrictions.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum Datatype {
    Integer,
    Decimal,
    DateTime,
    Str,
}

impl Datatype {
    pub fn xsd_name(&self) -> &'static str {
        match self {
            Datatype::Integer => "xsd:integer",
            Datatype::Decimal => "xsd:decimal",
            Datatype::DateTime => "xsd:dateTime",
            Datatype::Str => "xsd:string",
        }
    }
}

/// A data value with its datatype.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Literal {
    Integer(i64),
    Decimal(String),
    DateTime(String),
    Str(String),
}

impl Literal {
    pub fn datatype(&self) -> Datatype {
        match self {
            Literal::Integer(_) => Datatype::Integer,
            Literal::Decimal(_) => Datatype::Decimal,
            Literal::DateTime(_) => Datatype::DateTime,
            Literal::Str(_) => Datatype::Str,
        }
    }

    pub fn lexical_form(&self) -> String {
        match self {
            Literal::Integer(v) => v.to_string(),
            Literal::Decimal(v) | Literal::DateTime(v) | Literal::Str(v) => v.clone(),
        }
    }
}

/// Filler of a data restriction: a specific literal or a whole datatype.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DataRange {
    Value(Literal),
    Type(Datatype),
}

/// SHOQ(D) concept expressions.
///
/// Values built through the canonical constructors keep `And`/`Or` lists
/// flattened, sorted, and deduplicated, never nest `Not` directly under
/// `Not`, and never carry one-element junctions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ConceptExpr {
    Top,
    Bottom,
    Atomic(String),
    /// Nominal concept `{o}` over an individual.
    Nominal(String),
    And(Vec<ConceptExpr>),
    Or(Vec<ConceptExpr>),
    Not(Box<ConceptExpr>),
    Exists(String, Box<ConceptExpr>),
    ForAll(String, Box<ConceptExpr>),
    AtLeast(u32, String, Box<ConceptExpr>),
    AtMost(u32, String, Box<ConceptExpr>),
    DataExists(String, DataRange),
    DataForAll(String, Datatype),
}

impl ConceptExpr {
    pub fn atomic(label: impl Into<String>) -> Self {
        ConceptExpr::Atomic(label.into())
    }

    pub fn nominal(individual: impl Into<String>) -> Self {
        ConceptExpr::Nominal(individual.into())
    }

    /// Canonical conjunction: flattens, sorts, deduplicates; absorbs `Top`;
    /// collapses to `Bottom` if any member is `Bottom`.
    pub fn and(members: Vec<ConceptExpr>) -> Self {
        let mut set = BTreeSet::new();
        let mut stack = members;
        while let Some(m) = stack.pop() {
            match m {
                ConceptExpr::And(inner) => stack.extend(inner),
                ConceptExpr::Top => {}
                ConceptExpr::Bottom => return ConceptExpr::Bottom,
                other => {
                    set.insert(other);
                }
            }
        }
        match set.len() {
            0 => ConceptExpr::Top,
            1 => set.into_iter().next().unwrap(),
            _ => ConceptExpr::And(set.into_iter().collect()),
        }
    }

    /// Canonical disjunction, dual to [`ConceptExpr::and`].
    pub fn or(members: Vec<ConceptExpr>) -> Self {
        let mut set = BTreeSet::new();
        let mut stack = members;
        while let Some(m) = stack.pop() {
            match m {
                ConceptExpr::Or(inner) => stack.extend(inner),
                ConceptExpr::Bottom => {}
                ConceptExpr::Top => return ConceptExpr::Top,
                other => {
                    set.insert(other);
                }
            }
        }
        match set.len() {
            0 => ConceptExpr::Bottom,
            1 => set.into_iter().next().unwrap(),
            _ => ConceptExpr::Or(set.into_iter().collect()),
        }
    }

    /// Canonical negation: `¬¬C = C`, `¬⊤ = ⊥`, `¬⊥ = ⊤`.
    #[allow(clippy::should_implement_trait)]
    pub fn not(inner: ConceptExpr) -> Self {
        match inner {
            ConceptExpr::Not(c) => *c,
            ConceptExpr::Top => ConceptExpr::Bottom,
            ConceptExpr::Bottom => ConceptExpr::Top,
            other => ConceptExpr::Not(Box::new(other)),
        }
    }

    pub fn exists(role: impl Into<String>, filler: ConceptExpr) -> Self {
        ConceptExpr::Exists(role.into(), Box::new(filler))
    }

    pub fn for_all(role: impl Into<String>, filler: ConceptExpr) -> Self {
        ConceptExpr::ForAll(role.into(), Box::new(filler))
    }

    pub fn data_exists(role: impl Into<String>, value: Literal) -> Self {
        ConceptExpr::DataExists(role.into(), DataRange::Value(value))
    }

    /// Re-applies the canonical constructors over the whole tree.
    pub fn canonicalize(&self) -> ConceptExpr {
        match self {
            ConceptExpr::And(ms) => {
                ConceptExpr::and(ms.iter().map(|m| m.canonicalize()).collect())
            }
            ConceptExpr::Or(ms) => ConceptExpr::or(ms.iter().map(|m| m.canonicalize()).collect()),
            ConceptExpr::Not(c) => ConceptExpr::not(c.canonicalize()),
            ConceptExpr::Exists(r, c) => ConceptExpr::exists(r.clone(), c.canonicalize()),
            ConceptExpr::ForAll(r, c) => ConceptExpr::for_all(r.clone(), c.canonicalize()),
            ConceptExpr::AtLeast(n, r, c) => {
                ConceptExpr::AtLeast(*n, r.clone(), Box::new(c.canonicalize()))
            }
            ConceptExpr::AtMost(n, r, c) => {
                ConceptExpr::AtMost(*n, r.clone(), Box::new(c.canonicalize()))
            }
            other => other.clone(),
        }
    }

    /// Atomic concept labels occurring anywhere in the expression.
    pub fn atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            ConceptExpr::Atomic(l) => {
                out.insert(l.clone());
            }
            ConceptExpr::And(ms) | ConceptExpr::Or(ms) => {
                for m in ms {
                    m.atoms(out);
                }
            }
            ConceptExpr::Not(c)
            | ConceptExpr::Exists(_, c)
            | ConceptExpr::ForAll(_, c)
            | ConceptExpr::AtLeast(_, _, c)
            | ConceptExpr::AtMost(_, _, c) => c.atoms(out),
            _ => {}
        }
    }
}

/// Whether a role relates individuals to individuals or to data values.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum RoleKind {
    Abstract,
    Concrete,
}

/// The logical content of an axiom.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AxiomKind {
    SubClassOf(ConceptExpr, ConceptExpr),
    EquivalentClasses(ConceptExpr, ConceptExpr),
    SubRoleOf {
        sub: String,
        sup: String,
        kind: RoleKind,
    },
    Transitive(String),
    ClassAssertion(ConceptExpr, String),
    RoleAssertion(String, String, String),
    DataAssertion(String, String, Literal),
}

impl AxiomKind {
    pub fn is_terminological(&self) -> bool {
        matches!(
            self,
            AxiomKind::SubClassOf(..)
                | AxiomKind::EquivalentClasses(..)
                | AxiomKind::SubRoleOf { .. }
                | AxiomKind::Transitive(..)
        )
    }
}

/// An axiom plus free-form annotation notes (used for the probabilistic
/// side-conditions of modal axioms and temporal ordering constraints).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Axiom {
    pub kind: AxiomKind,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Axiom {
    pub fn new(kind: AxiomKind) -> Self {
        Axiom {
            kind,
            notes: Vec::new(),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn sub_class_of(lhs: ConceptExpr, rhs: ConceptExpr) -> Self {
        Axiom::new(AxiomKind::SubClassOf(
            lhs.canonicalize(),
            rhs.canonicalize(),
        ))
    }

    pub fn equivalent(lhs: ConceptExpr, rhs: ConceptExpr) -> Self {
        Axiom::new(AxiomKind::EquivalentClasses(
            lhs.canonicalize(),
            rhs.canonicalize(),
        ))
    }

    pub fn assertion(concept: ConceptExpr, individual: impl Into<String>) -> Self {
        Axiom::new(AxiomKind::ClassAssertion(
            concept.canonicalize(),
            individual.into(),
        ))
    }

    fn canonicalize(&self) -> Axiom {
        let kind = match &self.kind {
            AxiomKind::SubClassOf(l, r) => {
                AxiomKind::SubClassOf(l.canonicalize(), r.canonicalize())
            }
            AxiomKind::EquivalentClasses(l, r) => {
                AxiomKind::EquivalentClasses(l.canonicalize(), r.canonicalize())
            }
            AxiomKind::ClassAssertion(c, o) => {
                AxiomKind::ClassAssertion(c.canonicalize(), o.clone())
            }
            other => other.clone(),
        };
        Axiom {
            kind,
            notes: self.notes.clone(),
        }
    }
}

/// Where an axiom came from: source sentence plus the translation rule that
/// produced it.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Provenance {
    pub source: SourceId,
    pub rule: String,
}

/// An axiom together with its provenance. Logical identity ignores the
/// provenance, so the same axiom derived twice is stored once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TracedAxiom {
    #[serde(flatten)]
    pub axiom: Axiom,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DlError {
    #[error("role inclusion `{sub}` ⊑ `{sup}` mixes abstract and concrete roles")]
    MixedRoleKinds { sub: String, sup: String },
    #[error("transitivity declared on concrete role `{role}`")]
    TransitiveConcreteRole { role: String },
}

/// Symbol tables for the knowledge base.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolTables {
    pub concepts: BTreeSet<String>,
    pub abstract_roles: BTreeSet<String>,
    pub concrete_roles: BTreeSet<String>,
    pub individuals: BTreeSet<String>,
    pub datatypes: BTreeSet<Datatype>,
    /// Roles declared transitive.
    pub transitive_roles: BTreeSet<String>,
}

/// The label of the universal concept in taxonomy exports.
pub const TOP_LABEL: &str = "Thing";

/// Fixed vocabulary pre-registered in every knowledge base.
pub mod vocab {
    pub const HAS_ATTRIBUTE: &str = "hasAttribute";
    /// The transitive part-of role family root ("include⁺" in infix form).
    pub const INCLUDE: &str = "include";
    pub const BELONGS_TO: &str = "belongsTo";
    pub const HAS_CARDINALITY: &str = "hasCardinality";
    pub const IS_TRUE_FOR: &str = "isTrueFor";
    pub const HAS_END: &str = "hasEnd";
    pub const HAS_BEGINNING: &str = "hasBeginning";
    pub const IN_DATE_TIME: &str = "inDateTime";
    pub const INTERVAL_MEETS: &str = "intervalMeets";
    pub const HAS_DURATION_DESCRIPTION: &str = "hasDurationDescription";
    pub const MAY_BE: &str = "mayBe";
    pub const CAN_BECOME: &str = "canBecome";
    pub const MIN_INCLUSIVE: &str = "minInclusive";
    pub const MAX_INCLUSIVE: &str = "maxInclusive";
    pub const MIN_EXCLUSIVE: &str = "minExclusive";
    pub const MAX_EXCLUSIVE: &str = "maxExclusive";
    pub const CARDINALITY: &str = "Cardinality";
    pub const DIMENSION: &str = "Dimension";
    pub const PROPER_INTERVAL: &str = "ProperInterval";
    pub const INSTANT: &str = "Instant";
    pub const DURATION_DESCRIPTION: &str = "DurationDescription";
    pub const DECIMAL: &str = "Decimal";
    pub const INTEGER: &str = "Integer";

    pub const PRIMITIVE_CONCEPTS: [&str; 7] = [
        CARDINALITY,
        DIMENSION,
        PROPER_INTERVAL,
        INSTANT,
        DURATION_DESCRIPTION,
        DECIMAL,
        INTEGER,
    ];
    pub const PRIMITIVE_ABSTRACT_ROLES: [&str; 12] = [
        HAS_ATTRIBUTE,
        INCLUDE,
        BELONGS_TO,
        HAS_CARDINALITY,
        IS_TRUE_FOR,
        HAS_END,
        HAS_BEGINNING,
        IN_DATE_TIME,
        INTERVAL_MEETS,
        HAS_DURATION_DESCRIPTION,
        MAY_BE,
        CAN_BECOME,
    ];
    pub const PRIMITIVE_CONCRETE_ROLES: [&str; 4] =
        [MIN_INCLUSIVE, MAX_INCLUSIVE, MIN_EXCLUSIVE, MAX_EXCLUSIVE];
}

/// A SHOQ(D) knowledge base: TBox + ABox axioms, symbol tables, and the
/// primitive vocabulary pre-registered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnowledgeBase {
    axioms: Vec<TracedAxiom>,
    #[serde(skip)]
    index: BTreeSet<Axiom>,
    pub symbols: SymbolTables,
}

impl Default for KnowledgeBase {
    fn default() -> Self {
        Self::new()
    }
}

impl KnowledgeBase {
    pub fn new() -> Self {
        let mut symbols = SymbolTables::default();
        for c in vocab::PRIMITIVE_CONCEPTS {
            symbols.concepts.insert(c.to_string());
        }
        for r in vocab::PRIMITIVE_ABSTRACT_ROLES {
            symbols.abstract_roles.insert(r.to_string());
        }
        for r in vocab::PRIMITIVE_CONCRETE_ROLES {
            symbols.concrete_roles.insert(r.to_string());
        }
        symbols.transitive_roles.insert(vocab::INCLUDE.to_string());
        KnowledgeBase {
            axioms: Vec::new(),
            index: BTreeSet::new(),
            symbols,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.axioms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.axioms.len()
    }

    pub fn axioms(&self) -> impl Iterator<Item = &TracedAxiom> {
        self.axioms.iter()
    }

    pub fn tbox(&self) -> impl Iterator<Item = &TracedAxiom> {
        self.axioms.iter().filter(|a| a.axiom.kind.is_terminological())
    }

    pub fn abox(&self) -> impl Iterator<Item = &TracedAxiom> {
        self.axioms
            .iter()
            .filter(|a| !a.axiom.kind.is_terminological())
    }

    /// Axioms in canonical (sorted) order, for serialization.
    pub fn sorted_axioms(&self) -> Vec<&TracedAxiom> {
        let mut v: Vec<&TracedAxiom> = self.axioms.iter().collect();
        v.sort_by(|a, b| a.axiom.cmp(&b.axiom));
        v
    }

    /// Adds an axiom after canonicalization; duplicates are dropped, keeping
    /// the first provenance. Symbols are auto-registered.
    pub fn add_axiom(
        &mut self,
        axiom: Axiom,
        provenance: Option<Provenance>,
    ) -> Result<bool, DlError> {
        let axiom = axiom.canonicalize();
        self.validate(&axiom)?;
        if self.index.contains(&axiom) {
            return Ok(false);
        }
        self.register(&axiom);
        self.index.insert(axiom.clone());
        self.axioms.push(TracedAxiom { axiom, provenance });
        Ok(true)
    }

    fn validate(&self, axiom: &Axiom) -> Result<(), DlError> {
        match &axiom.kind {
            AxiomKind::SubRoleOf { sub, sup, kind } => {
                let other = match kind {
                    RoleKind::Abstract => &self.symbols.concrete_roles,
                    RoleKind::Concrete => &self.symbols.abstract_roles,
                };
                if other.contains(sub) || other.contains(sup) {
                    return Err(DlError::MixedRoleKinds {
                        sub: sub.clone(),
                        sup: sup.clone(),
                    });
                }
            }
            AxiomKind::Transitive(role) if self.symbols.concrete_roles.contains(role) => {
                return Err(DlError::TransitiveConcreteRole { role: role.clone() });
            }
            _ => {}
        }
        Ok(())
    }

    fn register(&mut self, axiom: &Axiom) {
        match &axiom.kind {
            AxiomKind::SubClassOf(l, r) | AxiomKind::EquivalentClasses(l, r) => {
                self.register_expr(l);
                self.register_expr(r);
            }
            AxiomKind::SubRoleOf { sub, sup, kind } => match kind {
                RoleKind::Abstract => {
                    self.symbols.abstract_roles.insert(sub.clone());
                    self.symbols.abstract_roles.insert(sup.clone());
                }
                RoleKind::Concrete => {
                    self.symbols.concrete_roles.insert(sub.clone());
                    self.symbols.concrete_roles.insert(sup.clone());
                }
            },
            AxiomKind::Transitive(role) => {
                self.symbols.abstract_roles.insert(role.clone());
                self.symbols.transitive_roles.insert(role.clone());
            }
            AxiomKind::ClassAssertion(c, o) => {
                self.register_expr(c);
                self.symbols.individuals.insert(o.clone());
            }
            AxiomKind::RoleAssertion(r, a, b) => {
                self.symbols.abstract_roles.insert(r.clone());
                self.symbols.individuals.insert(a.clone());
                self.symbols.individuals.insert(b.clone());
            }
            AxiomKind::DataAssertion(r, a, v) => {
                self.symbols.concrete_roles.insert(r.clone());
                self.symbols.individuals.insert(a.clone());
                self.symbols.datatypes.insert(v.datatype());
            }
        }
    }

    fn register_expr(&mut self, expr: &ConceptExpr) {
        match expr {
            ConceptExpr::Atomic(l) => {
                self.symbols.concepts.insert(l.clone());
            }
            ConceptExpr::Nominal(o) => {
                self.symbols.individuals.insert(o.clone());
            }
            ConceptExpr::And(ms) | ConceptExpr::Or(ms) => {
                for m in ms {
                    self.register_expr(m);
                }
            }
            ConceptExpr::Not(c) => self.register_expr(c),
            ConceptExpr::Exists(r, c)
            | ConceptExpr::ForAll(r, c)
            | ConceptExpr::AtLeast(_, r, c)
            | ConceptExpr::AtMost(_, r, c) => {
                self.symbols.abstract_roles.insert(r.clone());
                self.register_expr(c);
            }
            ConceptExpr::DataExists(r, range) => {
                self.symbols.concrete_roles.insert(r.clone());
                match range {
                    DataRange::Value(v) => {
                        self.symbols.datatypes.insert(v.datatype());
                    }
                    DataRange::Type(d) => {
                        self.symbols.datatypes.insert(*d);
                    }
                }
            }
            ConceptExpr::DataForAll(r, d) => {
                self.symbols.concrete_roles.insert(r.clone());
                self.symbols.datatypes.insert(*d);
            }
            ConceptExpr::Top | ConceptExpr::Bottom => {}
        }
    }

    /// Merges another knowledge base into this one (parallel translation
    /// workers reduce through this).
    pub fn merge(&mut self, other: &KnowledgeBase) {
        for traced in &other.axioms {
            let _ = self.add_axiom(traced.axiom.clone(), traced.provenance.clone());
        }
    }

    /// ABox concept assertions whose concept is never mentioned by a TBox
    /// axiom ("induction missing"); an empty result after a full corpus run
    /// is an invariant of the translator.
    pub fn induction_warnings(&self) -> Vec<String> {
        let mut tbox_atoms = BTreeSet::new();
        for traced in self.tbox() {
            match &traced.axiom.kind {
                AxiomKind::SubClassOf(l, r) | AxiomKind::EquivalentClasses(l, r) => {
                    l.atoms(&mut tbox_atoms);
                    r.atoms(&mut tbox_atoms);
                }
                _ => {}
            }
        }
        let mut warnings = Vec::new();
        for traced in self.abox() {
            if let AxiomKind::ClassAssertion(c, o) = &traced.axiom.kind {
                let mut atoms = BTreeSet::new();
                c.atoms(&mut atoms);
                if !atoms.is_empty() && !atoms.iter().all(|a| tbox_atoms.contains(a)) {
                    warnings.push(format!(
                        "induction missing: assertion on `{o}` mentions concept(s) {:?} with no TBox axiom",
                        atoms
                    ));
                }
            }
        }
        warnings
    }

    /// Logical equality: same axiom sets after canonical ordering, ignoring
    /// provenance.
    pub fn logically_equal(&self, other: &KnowledgeBase) -> bool {
        self.index == other.index
    }

    /// Rebuilds the dedup index (needed after deserialization).
    pub fn reindex(&mut self) {
        self.index = self.axioms.iter().map(|t| t.axiom.clone()).collect();
    }
}

impl fmt::Display for ConceptExpr {
    /// Infix rendering used in diagnostics; the on-disk format lives in
    /// [`crate::owl`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConceptExpr::Top => write!(f, "⊤"),
            ConceptExpr::Bottom => write!(f, "⊥"),
            ConceptExpr::Atomic(l) => write!(f, "{l}"),
            ConceptExpr::Nominal(o) => write!(f, "{{{o}}}"),
            ConceptExpr::And(ms) => {
                write!(f, "(")?;
                for (i, m) in ms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ⊓ ")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, ")")
            }
            ConceptExpr::Or(ms) => {
                write!(f, "(")?;
                for (i, m) in ms.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ⊔ ")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, ")")
            }
            ConceptExpr::Not(c) => write!(f, "¬{c}"),
            ConceptExpr::Exists(r, c) => write!(f, "∃{r}.{c}"),
            ConceptExpr::ForAll(r, c) => write!(f, "∀{r}.{c}"),
            ConceptExpr::AtLeast(n, r, c) => write!(f, "≥{n} {r}.{c}"),
            ConceptExpr::AtMost(n, r, c) => write!(f, "≤{n} {r}.{c}"),
            ConceptExpr::DataExists(r, DataRange::Value(v)) => {
                write!(f, "∃{r}.{{{}}}", v.lexical_form())
            }
            ConceptExpr::DataExists(r, DataRange::Type(d)) => {
                write!(f, "∃{r}.{}", d.xsd_name())
            }
            ConceptExpr::DataForAll(r, d) => write!(f, "∀{r}.{}", d.xsd_name()),
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            AxiomKind::SubClassOf(l, r) => write!(f, "{l} ⊑ {r}"),
            AxiomKind::EquivalentClasses(l, r) => write!(f, "{l} ≡ {r}"),
            AxiomKind::SubRoleOf { sub, sup, .. } => write!(f, "{sub} ⊑ {sup}"),
            AxiomKind::Transitive(r) => write!(f, "Trans({r})"),
            AxiomKind::ClassAssertion(c, o) => write!(f, "{c}({o})"),
            AxiomKind::RoleAssertion(r, a, b) => write!(f, "{r}({a}, {b})"),
            AxiomKind::DataAssertion(r, a, v) => {
                write!(f, "{r}({a}, {})", v.lexical_form())
            }
        }
    }
}

/// Map of group/context counters keyed by label, used by the translator but
/// housed here so serialized knowledge bases can round-trip them if needed.
pub type CounterMap = BTreeMap<String, u64>;
