//! NSS instance → axiom translation, with object → IS-A → subject
//! precedence: the object sub-expression is built first, the IS-A kind
//! selects the rule family, and the subject side (quantifiers, named
//! entities, group instances) completes the axiom set. Every ABox assertion
//! is emitted together with a TBox axiom mentioning its concept.

use crate::dl::{
    vocab, Axiom, AxiomKind, ConceptExpr, KnowledgeBase, Literal, Provenance, RoleKind,
};
use crate::lexicon::{IsaKind, Lexicon, NerClass};
use crate::nss::{
    Connective, Entity, EntityCell, Modality, NssInstance, NssKind, QuantCell, Quantifier,
    SpecialQuantKind, TemporalAdjunct, TemporalKind, Tense,
};
use crate::tags::PennTag;
use crate::token::{SourceId, Token};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

/// A canonical CamelCase concept label.
#[derive(
    Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct ConceptLabel(pub String);

impl ConceptLabel {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::fmt::Display for ConceptLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// CamelCases one lexeme part: whitespace-separated words each contribute
/// their alphanumeric characters with the first letter upper-cased, so
/// "hard-working" → "Hardworking" and "King Richard" → "KingRichard".
pub fn camel(part: &str) -> String {
    let mut out = String::new();
    for word in part.split_whitespace() {
        let cleaned: String = word.chars().filter(|c| c.is_alphanumeric()).collect();
        let mut chars = cleaned.chars();
        match chars.next() {
            Some(first) => {
                out.extend(first.to_uppercase());
                out.push_str(chars.as_str());
            }
            None => continue,
        }
    }
    out
}

/// Builds a concept label from lexeme parts in surface order, optionally
/// appending the named-entity class ("student" + Person → "StudentPerson").
pub fn make_label(parts: &[&str], ner: Option<NerClass>) -> Result<ConceptLabel, TranslateError> {
    let mut label = String::new();
    for part in parts {
        label.push_str(&camel(part));
    }
    if let Some(class) = ner {
        label.push_str(class.concept_name());
    }
    if label.is_empty() {
        return Err(TranslateError::LabelingFailure {
            parts: parts.iter().map(|p| p.to_string()).collect(),
        });
    }
    Ok(ConceptLabel(label))
}

fn lowercase_first(label: &str) -> String {
    let mut chars = label.chars();
    match chars.next() {
        Some(first) => first.to_lowercase().collect::<String>() + chars.as_str(),
        None => String::new(),
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TranslateError {
    #[error("{at}: unsupported pattern: {what}")]
    UnsupportedPattern { at: SourceId, what: String },
    #[error("labeling produced an empty label from parts {parts:?}")]
    LabelingFailure { parts: Vec<String> },
}

/// Shared state of one translation run: the lexicon, the injected run clock
/// (t_pr), monotone group/context counters, and accumulated warnings.
#[derive(Debug)]
pub struct TranslationContext<'a> {
    pub lexicon: &'a Lexicon,
    /// ISO-8601 timestamp fixed for the whole run.
    pub clock: String,
    group_counters: BTreeMap<String, u64>,
    context_counters: BTreeMap<String, u64>,
    past_instants: u64,
    /// Holonymy fillers accumulated per subject label, in first-seen order.
    holonymy: BTreeMap<String, Vec<(String, String)>>,
    /// (subject label, object label) pairs from "only" sentences, consumed
    /// by the disjointness post-pass.
    only_records: Vec<(String, String)>,
    pub warnings: Vec<(SourceId, String)>,
}

impl<'a> TranslationContext<'a> {
    pub fn new(lexicon: &'a Lexicon, clock: impl Into<String>) -> Self {
        TranslationContext {
            lexicon,
            clock: clock.into(),
            group_counters: BTreeMap::new(),
            context_counters: BTreeMap::new(),
            past_instants: 0,
            holonymy: BTreeMap::new(),
            only_records: Vec::new(),
            warnings: Vec::new(),
        }
    }

    fn next_group(&mut self, label: &str) -> u64 {
        let n = self.group_counters.entry(label.to_string()).or_insert(0);
        *n += 1;
        *n
    }

    fn next_context(&mut self, label: &str) -> u64 {
        let n = self.context_counters.entry(label.to_string()).or_insert(0);
        *n += 1;
        *n
    }

    fn fresh_past_instant(&mut self) -> String {
        self.past_instants += 1;
        format!("tPast{}", self.past_instants)
    }

    fn warn(&mut self, source: &SourceId, message: impl Into<String>) {
        self.warnings.push((source.clone(), message.into()));
    }
}

/// One sentence's output: axioms in emission order, each carrying rule-id
/// provenance.
pub type Translation = Vec<crate::dl::TracedAxiom>;

struct Emitter {
    source: SourceId,
    out: Translation,
}

impl Emitter {
    fn emit(&mut self, rule: &str, axiom: Axiom) {
        self.out.push(crate::dl::TracedAxiom {
            axiom,
            provenance: Some(Provenance {
                source: self.source.clone(),
                rule: rule.to_string(),
            }),
        });
    }
}

/// The built DL view of one subject/object phrase.
struct PhraseConcept {
    /// Expression used inside the sentence's main axiom.
    expr: ConceptExpr,
    /// Label contribution for derived-concept naming.
    label: String,
}

/// One modifier unit: adjacent RB/CD tokens fold into the following NN/JJ
/// modifier ("very clever" → one unit).
struct ModUnit {
    label: String,
    kind: PennTag,
}

fn modifier_units(mods: &[Token]) -> Vec<ModUnit> {
    let mut units = Vec::new();
    let mut pending: Vec<&str> = Vec::new();
    for m in mods {
        match m.tag {
            PennTag::Rb | PennTag::Cd => pending.push(&m.lexeme),
            _ => {
                let mut label = String::new();
                for p in &pending {
                    label.push_str(&camel(p));
                }
                label.push_str(&camel(&m.lexeme));
                units.push(ModUnit {
                    label,
                    kind: m.tag.clone(),
                });
                pending.clear();
            }
        }
    }
    if !pending.is_empty() {
        let mut label = String::new();
        for p in &pending {
            label.push_str(&camel(p));
        }
        units.push(ModUnit {
            label,
            kind: PennTag::Rb,
        });
    }
    units
}

/// Builds the concept for a non-proper phrase (modifiers + head), emitting
/// forward/backward/recursive-nested modification axioms.
fn concept_phrase(
    mods: &[Token],
    entity: &Entity,
    lex: &Lexicon,
    em: &mut Emitter,
) -> PhraseConcept {
    let head = entity.head();
    let head_label = camel(&entity.surface());
    // Attribute heads (adjectives, adverbs) become MThing ≡ ∃hasAttribute.M.
    if matches!(head.tag, PennTag::Jj | PennTag::Jjr | PennTag::Rb) {
        let mut attr = String::new();
        for m in mods {
            attr.push_str(&camel(&m.lexeme));
        }
        attr.push_str(&head_label);
        let thing = format!("{attr}Thing");
        em.emit(
            "backward-modification",
            Axiom::equivalent(
                ConceptExpr::atomic(&thing),
                ConceptExpr::exists(vocab::HAS_ATTRIBUTE, ConceptExpr::atomic(&attr)),
            ),
        );
        return PhraseConcept {
            expr: ConceptExpr::atomic(&thing),
            label: attr,
        };
    }

    // Noun (or gerund) head with a modifier chain.
    let units = modifier_units(mods);
    let k = units.len();
    let chain_label = |from: usize| -> String {
        let mut s = String::new();
        for u in &units[from..] {
            s.push_str(&u.label);
        }
        s.push_str(&head_label);
        s
    };
    let full = chain_label(0);
    if k > 0 {
        // Innermost chain is a subclass of the head; each longer chain is a
        // subclass of its suffix and of the single-modifier form.
        em.emit(
            "forward-modification",
            Axiom::sub_class_of(
                ConceptExpr::atomic(chain_label(k - 1)),
                ConceptExpr::atomic(&head_label),
            ),
        );
        for i in (0..k.saturating_sub(1)).rev() {
            em.emit(
                "forward-modification",
                Axiom::sub_class_of(
                    ConceptExpr::atomic(chain_label(i)),
                    ConceptExpr::atomic(chain_label(i + 1)),
                ),
            );
            em.emit(
                "forward-modification",
                Axiom::sub_class_of(
                    ConceptExpr::atomic(chain_label(i)),
                    ConceptExpr::atomic(format!("{}{}", units[i].label, head_label)),
                ),
            );
        }
        for (i, unit) in units.iter().enumerate() {
            match unit.kind {
                PennTag::Jj => {
                    let thing = format!("{}Thing", unit.label);
                    em.emit(
                        "backward-modification",
                        Axiom::sub_class_of(
                            ConceptExpr::atomic(chain_label(i)),
                            ConceptExpr::atomic(&thing),
                        ),
                    );
                    em.emit(
                        "backward-modification",
                        Axiom::equivalent(
                            ConceptExpr::atomic(&thing),
                            ConceptExpr::exists(
                                vocab::HAS_ATTRIBUTE,
                                ConceptExpr::atomic(&unit.label),
                            ),
                        ),
                    );
                }
                // Noun-noun backward modification only when the lexicon
                // vouches for the hyponymy ("HouseBoat" ⊑ "House", but not
                // "SeaPlane" ⊑ "Sea").
                PennTag::Nn if lex.lookup_hypernym(&chain_label(i), &unit.label) => {
                    em.emit(
                        "backward-modification",
                        Axiom::sub_class_of(
                            ConceptExpr::atomic(chain_label(i)),
                            ConceptExpr::atomic(&unit.label),
                        ),
                    );
                }
                _ => {}
            }
        }
    }
    PhraseConcept {
        expr: ConceptExpr::atomic(&full),
        label: full,
    }
}

/// Object-side build: proper-noun objects become nominals, everything else
/// goes through the modifier machinery. Disjunctive lists build a union,
/// conjunctive lists an intersection.
fn build_object(
    mods: &[Token],
    cell: &EntityCell,
    lex: &Lexicon,
    em: &mut Emitter,
) -> PhraseConcept {
    if cell.items.len() > 1 {
        let mut exprs = Vec::new();
        let mut labels = Vec::new();
        for item in &cell.items {
            let built = build_object_item(&[], item, lex, em);
            labels.push(built.label.clone());
            exprs.push(built.expr);
        }
        let expr = match cell.connective {
            Connective::Or => ConceptExpr::or(exprs),
            _ => ConceptExpr::and(exprs),
        };
        return PhraseConcept {
            expr,
            label: labels.join(""),
        };
    }
    build_object_item(mods, &cell.items[0], lex, em)
}

fn build_object_item(
    mods: &[Token],
    item: &Entity,
    lex: &Lexicon,
    em: &mut Emitter,
) -> PhraseConcept {
    if item.is_proper() {
        let label = camel(&item.surface());
        return PhraseConcept {
            expr: ConceptExpr::nominal(&label),
            label,
        };
    }
    let (item_mods, entity) = split_entity_tokens(item, mods);
    concept_phrase(&item_mods, &entity, lex, em)
}

/// Re-splits an entity's token run into (modifiers, head entity) for items
/// of a list cell; single items receive the segment modifiers as-is.
fn split_entity_tokens(item: &Entity, segment_mods: &[Token]) -> (Vec<Token>, Entity) {
    if !segment_mods.is_empty() || item.tokens.len() <= 1 {
        return (segment_mods.to_vec(), item.clone());
    }
    let head_at = item.tokens.len() - 1;
    let mut start = head_at;
    if item.tokens[head_at].tag.is_proper_noun() {
        while start > 0 && item.tokens[start - 1].tag.is_proper_noun() {
            start -= 1;
        }
    }
    (
        item.tokens[..start].to_vec(),
        Entity {
            tokens: item.tokens[start..].to_vec(),
        },
    )
}

/// Temporal wrap of the object expression for past-tense sentences,
/// together with the timestamp/duration side axioms.
fn tense_wrap(
    temporal: &Option<TemporalAdjunct>,
    ctx: &mut TranslationContext,
    em: &mut Emitter,
) -> ConceptExpr {
    let instant = |individual: &str| {
        ConceptExpr::and(vec![
            ConceptExpr::atomic(vocab::INSTANT),
            ConceptExpr::exists(vocab::IN_DATE_TIME, ConceptExpr::nominal(individual)),
        ])
    };
    match temporal {
        None => {
            let t = ctx.fresh_past_instant();
            em.emit(
                "tense",
                Axiom::sub_class_of(
                    ConceptExpr::nominal(&t),
                    ConceptExpr::atomic(vocab::INSTANT),
                )
                .with_note(format!("{t} < t_pr = {}", ctx.clock)),
            );
            ConceptExpr::exists(
                vocab::IS_TRUE_FOR,
                ConceptExpr::and(vec![
                    ConceptExpr::atomic(vocab::PROPER_INTERVAL),
                    ConceptExpr::exists(vocab::HAS_END, instant(&t)),
                ]),
            )
        }
        Some(adjunct) => {
            let duration = ConceptExpr::and(vec![
                ConceptExpr::atomic(camel(&adjunct.unit)),
                ConceptExpr::atomic(vocab::DURATION_DESCRIPTION),
                ConceptExpr::data_exists(
                    format!("{}s", adjunct.unit),
                    Literal::Integer(adjunct.count as i64),
                ),
            ]);
            let count_nominal = format!("n{}", adjunct.count);
            match adjunct.kind {
                TemporalKind::Ago => {
                    em.emit(
                        "tense",
                        Axiom::sub_class_of(
                            ConceptExpr::nominal("tNow"),
                            ConceptExpr::atomic(vocab::INSTANT),
                        )
                        .with_note(format!("tNow = t_pr = {}", ctx.clock)),
                    );
                    em.emit(
                        "tense",
                        Axiom::sub_class_of(
                            ConceptExpr::nominal(&count_nominal),
                            ConceptExpr::atomic(vocab::DECIMAL),
                        ),
                    );
                    ConceptExpr::exists(
                        vocab::IS_TRUE_FOR,
                        ConceptExpr::and(vec![
                            ConceptExpr::atomic(vocab::PROPER_INTERVAL),
                            ConceptExpr::exists(
                                vocab::INTERVAL_MEETS,
                                ConceptExpr::and(vec![
                                    ConceptExpr::atomic(vocab::PROPER_INTERVAL),
                                    ConceptExpr::exists(vocab::HAS_END, instant("tNow")),
                                    ConceptExpr::exists(
                                        vocab::HAS_DURATION_DESCRIPTION,
                                        duration,
                                    ),
                                ]),
                            ),
                        ]),
                    )
                }
                TemporalKind::For => {
                    let t = ctx.fresh_past_instant();
                    em.emit(
                        "tense",
                        Axiom::sub_class_of(
                            ConceptExpr::nominal(&t),
                            ConceptExpr::atomic(vocab::INSTANT),
                        )
                        .with_note(format!("{t} < t_pr = {}", ctx.clock)),
                    );
                    em.emit(
                        "tense",
                        Axiom::sub_class_of(
                            ConceptExpr::nominal(&count_nominal),
                            ConceptExpr::atomic(vocab::DECIMAL),
                        ),
                    );
                    ConceptExpr::exists(
                        vocab::IS_TRUE_FOR,
                        ConceptExpr::and(vec![
                            ConceptExpr::atomic(vocab::PROPER_INTERVAL),
                            ConceptExpr::exists(vocab::HAS_END, instant(&t)),
                            ConceptExpr::exists(vocab::HAS_DURATION_DESCRIPTION, duration),
                        ]),
                    )
                }
            }
        }
    }
}

/// Translates one NSS instance into axioms. Compound instances expand into
/// their simple combinations; complex instances translate both segments.
pub fn translate(
    nss: &NssInstance,
    ctx: &mut TranslationContext,
) -> Result<Translation, TranslateError> {
    let mut em = Emitter {
        source: nss.source.clone(),
        out: Vec::new(),
    };
    match nss.kind {
        NssKind::Complex => {
            let first = simple_projection(nss, false);
            translate_simple(&first, ctx, &mut em)?;
            let second = simple_projection(nss, true);
            translate_simple(&second, ctx, &mut em)?;
        }
        _ => translate_simple(nss, ctx, &mut em)?,
    }
    Ok(em.out)
}

/// Extracts the (subject, isa1, object1) or (subject, isa2, object2)
/// reading of a complex instance as a simple one.
fn simple_projection(nss: &NssInstance, second: bool) -> NssInstance {
    let mut out = NssInstance {
        kind: NssKind::Simple,
        q1: nss.q1.clone(),
        m1: nss.m1.clone(),
        subject: nss.subject.clone(),
        cl1: None,
        isa1: nss.isa1.clone(),
        q2: nss.q2.clone(),
        m2: nss.m2.clone(),
        object1: nss.object1.clone(),
        temporal: nss.temporal.clone(),
        cl2: None,
        isa2: None,
        q3: None,
        m3: Vec::new(),
        object2: None,
        source: nss.source.clone(),
    };
    if second {
        out.isa1 = nss.isa2.clone().expect("complex instance has isa2");
        out.q2 = nss.q3.clone();
        out.m2 = nss.m3.clone();
        out.object1 = nss.object2.clone().expect("complex instance has object2");
        out.temporal = None;
    }
    out
}

fn translate_simple(
    nss: &NssInstance,
    ctx: &mut TranslationContext,
    em: &mut Emitter,
) -> Result<(), TranslateError> {
    // Compound subjects expand subject-major; disjunctive subject lists are
    // kept whole under a union (with the conjunctive-reading caveat).
    if nss.subject.items.len() > 1 && nss.subject.connective == Connective::And {
        for item in &nss.subject.items {
            let mut one = nss.clone();
            one.subject = EntityCell {
                raw: item.tokens.clone(),
                items: vec![item.clone()],
                connective: Connective::Single,
            };
            one.kind = NssKind::Simple;
            translate_simple(&one, ctx, em)?;
        }
        return Ok(());
    }

    let object = build_object(&nss.m2, &nss.object1, ctx.lexicon, em);

    // Tense applies to the object side of the main axiom.
    let rhs = match nss.isa1.tense {
        Tense::Past => {
            let wrap = tense_wrap(&nss.temporal, ctx, em);
            ConceptExpr::and(vec![object.expr.clone(), wrap])
        }
        Tense::Present => {
            if nss.temporal.is_some() {
                ctx.warn(
                    &nss.source,
                    "temporal adjunct on a present-tense sentence; adjunct ignored",
                );
            }
            object.expr.clone()
        }
    };

    if nss.subject.items.len() > 1 {
        // Disjunctive subject list.
        ctx.warn(
            &nss.source,
            "disjunctive subject list translated under a union (conjunctive reading)",
        );
        let members: Vec<ConceptExpr> = nss
            .subject
            .items
            .iter()
            .map(|item| {
                if item.is_proper() {
                    ConceptExpr::nominal(camel(&item.surface()))
                } else {
                    ConceptExpr::atomic(camel(&item.surface()))
                }
            })
            .collect();
        em.emit(
            "compound-subject",
            Axiom::sub_class_of(ConceptExpr::or(members), rhs),
        );
        return Ok(());
    }

    let subject_entity = nss.subject.single().expect("single subject").clone();
    if subject_entity.is_proper() {
        translate_proper_subject(nss, &subject_entity, &object, rhs, ctx, em)
    } else {
        translate_concept_subject(nss, &subject_entity, &object, rhs, ctx, em)
    }
}

/// Ground-fact subjects (NNP): named-entity labeling, nominal definitions
/// for gazetteer misses, the "only" context rule, and modal/tense variants.
fn translate_proper_subject(
    nss: &NssInstance,
    entity: &Entity,
    object: &PhraseConcept,
    rhs: ConceptExpr,
    ctx: &mut TranslationContext,
    em: &mut Emitter,
) -> Result<(), TranslateError> {
    let surface = entity.surface();
    let individual = camel(&surface);
    let ner = ctx.lexicon.ner_class(&surface);

    // Backward modification for NN modifiers of a proper name:
    // (MLikeS)(S), MLikeS ⊑ M.
    for unit in modifier_units(&nss.m1) {
        if unit.kind == PennTag::Nn {
            let like = format!("{}Like{}", unit.label, individual);
            em.emit(
                "backward-nn-nnp",
                Axiom::sub_class_of(
                    ConceptExpr::atomic(&like),
                    ConceptExpr::atomic(&unit.label),
                ),
            );
            em.emit(
                "backward-nn-nnp",
                Axiom::assertion(ConceptExpr::atomic(&like), &individual),
            );
        } else {
            ctx.warn(
                &nss.source,
                format!(
                    "modifier `{}` of proper name `{surface}` has no translation rule",
                    unit.label
                ),
            );
        }
    }

    // "Only John is a musician": the object concept is contextualized with
    // a counter and confined to the subject nominal.
    if let Some(QuantCell {
        value: Quantifier::Special { kind, .. },
        ..
    }) = &nss.q1
    {
        if *kind == SpecialQuantKind::Only {
            let n = ctx.next_context(&object.label);
            let context_label = format!("{}_{n}", object.label);
            em.emit(
                "only",
                Axiom::sub_class_of(
                    ConceptExpr::atomic(&context_label),
                    ConceptExpr::and(vec![rhs, ConceptExpr::nominal(&individual)]),
                ),
            );
            em.emit(
                "only",
                Axiom::assertion(ConceptExpr::atomic(&context_label), &individual),
            );
            return Ok(());
        }
        return Err(TranslateError::UnsupportedPattern {
            at: nss.source.clone(),
            what: format!("special quantifier {kind:?} over a proper-noun subject"),
        });
    }

    match (nss.isa1.kind, nss.isa1.modality) {
        (_, Modality::May) | (_, Modality::Can) => {
            let (role, prefix, note) = modal_parts(nss.isa1.modality);
            let label = match ner {
                Some(class) => make_label(&[prefix, &object.label], Some(class))?,
                None => make_label(&[prefix, &object.label, "like", &surface], None)?,
            };
            em.emit(
                "modal",
                Axiom::equivalent(
                    ConceptExpr::atomic(label.as_str()),
                    ConceptExpr::exists(role, object.expr.clone()),
                )
                .with_note(note),
            );
            if let Some(class) = ner {
                em.emit(
                    "modal",
                    Axiom::sub_class_of(
                        ConceptExpr::atomic(label.as_str()),
                        ConceptExpr::atomic(class.concept_name()),
                    ),
                );
            }
            em.emit(
                "modal",
                Axiom::assertion(ConceptExpr::atomic(label.as_str()), &individual),
            );
            Ok(())
        }
        (IsaKind::Equivalence, _) => {
            em.emit(
                "equivalence",
                Axiom::equivalent(ConceptExpr::nominal(&individual), object.expr.clone()),
            );
            Ok(())
        }
        (IsaKind::Similarity, _) => {
            translate_similarity(&camel(&surface), object, em);
            Ok(())
        }
        (IsaKind::Hypernymy, _) => Err(TranslateError::UnsupportedPattern {
            at: nss.source.clone(),
            what: "hypernymic IS-A over a proper-noun subject".to_string(),
        }),
        (IsaKind::Hyponymy, _) | (IsaKind::TensePast, _) => {
            // Trivial inclusion (possibly tense-wrapped): StudentPerson for
            // gazetteer hits, OLikeS with a nominal definition otherwise.
            match ner {
                Some(class) => {
                    let label = make_label(&[&object.label], Some(class))?;
                    em.emit(
                        "trivial-inclusion",
                        Axiom::sub_class_of(
                            ConceptExpr::atomic(label.as_str()),
                            ConceptExpr::and(vec![
                                rhs,
                                ConceptExpr::atomic(class.concept_name()),
                            ]),
                        ),
                    );
                    em.emit(
                        "trivial-inclusion",
                        Axiom::assertion(ConceptExpr::atomic(label.as_str()), &individual),
                    );
                }
                None => {
                    let label = make_label(&[&object.label, "like", &surface], None)?;
                    em.emit(
                        "trivial-inclusion",
                        Axiom::equivalent(
                            ConceptExpr::atomic(label.as_str()),
                            ConceptExpr::and(vec![rhs, ConceptExpr::nominal(&individual)]),
                        ),
                    );
                    em.emit(
                        "trivial-inclusion",
                        Axiom::assertion(ConceptExpr::atomic(label.as_str()), &individual),
                    );
                }
            }
            Ok(())
        }
        (IsaKind::ModalMay, _) | (IsaKind::ModalCan, _) => unreachable!("handled by modality"),
    }
}

fn modal_parts(modality: Modality) -> (&'static str, &'static str, String) {
    if modality == Modality::May {
        (vocab::MAY_BE, "MayBe", "Pr(O(x), t_pr') > 0".to_string())
    } else {
        (
            vocab::CAN_BECOME,
            "CanBecome",
            "Pr(O(x), t_pr') > 0 for some t_pr' > t_pr; Pr(O(x), t_pr) = 0".to_string(),
        )
    }
}

/// Concept subjects (NN/VBG heads): subject quantifier rules, hypernymy/
/// holonymy disambiguation, similarity, equivalence, and modality.
fn translate_concept_subject(
    nss: &NssInstance,
    entity: &Entity,
    object: &PhraseConcept,
    rhs: ConceptExpr,
    ctx: &mut TranslationContext,
    em: &mut Emitter,
) -> Result<(), TranslateError> {
    let subject = concept_phrase(&nss.m1, entity, ctx.lexicon, em);

    match (nss.isa1.kind, nss.isa1.modality) {
        (_, Modality::May) | (_, Modality::Can) => {
            let (role, prefix, note) = modal_parts(nss.isa1.modality);
            let quantified = matches!(
                &nss.q1,
                Some(QuantCell {
                    value: Quantifier::Simple(q),
                    ..
                }) if !matches!(q, crate::lexicon::CanonicalQuantifier::All)
            );
            if quantified {
                let derived = make_label(&[prefix, &object.label, &subject.label], None)?;
                em.emit(
                    "modal",
                    Axiom::equivalent(
                        ConceptExpr::atomic(derived.as_str()),
                        ConceptExpr::exists(role, object.expr.clone()),
                    )
                    .with_note(note),
                );
                em.emit(
                    "modal",
                    Axiom::sub_class_of(
                        ConceptExpr::atomic(derived.as_str()),
                        subject.expr.clone(),
                    ),
                );
            } else {
                em.emit(
                    "modal",
                    Axiom::equivalent(
                        subject.expr.clone(),
                        ConceptExpr::exists(role, object.expr.clone()),
                    )
                    .with_note(note),
                );
            }
            return Ok(());
        }
        (IsaKind::Similarity, _) => {
            translate_similarity(&subject.label, object, em);
            return Ok(());
        }
        (IsaKind::Equivalence, _) => {
            em.emit(
                "equivalence",
                Axiom::equivalent(subject.expr.clone(), object.expr.clone()),
            );
            return Ok(());
        }
        (IsaKind::Hypernymy, _) => {
            translate_includes(&subject, object, ctx, em);
            return Ok(());
        }
        _ => {}
    }

    // Inclusion family, by subject quantifier.
    match &nss.q1 {
        Some(QuantCell {
            value: Quantifier::Special { kind, count, .. },
            ..
        }) => match kind {
            SpecialQuantKind::Only => {
                em.emit(
                    "only",
                    Axiom::sub_class_of(object.expr.clone(), subject.expr.clone()),
                );
                ctx.only_records
                    .push((subject.label.clone(), object.label.clone()));
                Ok(())
            }
            _ => translate_cardinality_quantifier(nss, &subject, object, *kind, *count, ctx, em),
        },
        Some(QuantCell {
            value: Quantifier::Simple(q),
            ..
        }) => {
            use crate::lexicon::CanonicalQuantifier as Q;
            match q {
                Q::All => {
                    em.emit(
                        "subject-quantifier",
                        Axiom::sub_class_of(subject.expr.clone(), rhs),
                    );
                }
                Q::The => {
                    let derived = make_label(&[&object.label, &subject.label], None)?;
                    em.emit(
                        "subject-quantifier",
                        Axiom::sub_class_of(
                            ConceptExpr::atomic(derived.as_str()),
                            ConceptExpr::and(vec![subject.expr.clone(), rhs]),
                        ),
                    );
                    let n = ctx.next_group(&subject.label);
                    let instance = format!("{}_{n}", lowercase_first(&subject.label));
                    em.emit(
                        "subject-quantifier",
                        Axiom::assertion(ConceptExpr::atomic(derived.as_str()), instance),
                    );
                }
                _ => {
                    // a / an / some: a derived subclass OS ⊑ S ⊓ O.
                    let derived = make_label(&[&object.label, &subject.label], None)?;
                    em.emit(
                        "subject-quantifier",
                        Axiom::sub_class_of(
                            ConceptExpr::atomic(derived.as_str()),
                            ConceptExpr::and(vec![subject.expr.clone(), rhs]),
                        ),
                    );
                }
            }
            Ok(())
        }
        None => {
            em.emit(
                "trivial-inclusion",
                Axiom::sub_class_of(subject.expr.clone(), rhs),
            );
            Ok(())
        }
    }
}

/// Similarity: S and O share a common parent SOLike ≡ SLike ⊓ OLike.
fn translate_similarity(subject_label: &str, object: &PhraseConcept, em: &mut Emitter) {
    let s_like = format!("{subject_label}Like");
    let o_like = format!("{}Like", object.label);
    let common = format!("{subject_label}{}Like", object.label);
    em.emit(
        "similarity",
        Axiom::sub_class_of(
            ConceptExpr::atomic(subject_label),
            ConceptExpr::atomic(&common),
        ),
    );
    em.emit(
        "similarity",
        Axiom::sub_class_of(
            ConceptExpr::atomic(&object.label),
            ConceptExpr::atomic(&common),
        ),
    );
    em.emit(
        "similarity",
        Axiom::equivalent(
            ConceptExpr::atomic(&common),
            ConceptExpr::and(vec![
                ConceptExpr::atomic(&s_like),
                ConceptExpr::atomic(&o_like),
            ]),
        ),
    );
}

/// "includes": hypernymy when the lexicon supports it (O ⊑ S), otherwise
/// holonymy through a dedicated transitive sub-role per filler, with
/// repeated holonymies on one subject accumulating conjunctive fillers.
fn translate_includes(
    subject: &PhraseConcept,
    object: &PhraseConcept,
    ctx: &mut TranslationContext,
    em: &mut Emitter,
) {
    if ctx.lexicon.lookup_hypernym(&object.label, &subject.label) {
        em.emit(
            "includes-hypernymy",
            Axiom::sub_class_of(object.expr.clone(), subject.expr.clone()),
        );
        return;
    }
    let role = format!("{}{}", vocab::INCLUDE, object.label);
    let fillers = ctx.holonymy.entry(subject.label.clone()).or_default();
    if !fillers.iter().any(|(r, _)| r == &role) {
        fillers.push((role.clone(), object.label.clone()));
    }
    let conjuncts: Vec<ConceptExpr> = fillers
        .iter()
        .map(|(r, o)| ConceptExpr::exists(r.clone(), ConceptExpr::atomic(o)))
        .collect();
    em.emit(
        "includes-holonymy",
        Axiom::sub_class_of(subject.expr.clone(), ConceptExpr::and(conjuncts)),
    );
    em.emit(
        "includes-holonymy",
        Axiom::new(AxiomKind::SubRoleOf {
            sub: role,
            sup: vocab::INCLUDE.to_string(),
            kind: RoleKind::Abstract,
        }),
    );
    em.emit(
        "includes-holonymy",
        Axiom::new(AxiomKind::Transitive(vocab::INCLUDE.to_string())),
    );
}

/// The at-least / at-most / exactly cardinality constructions over a
/// determined group-instance of the subject.
fn translate_cardinality_quantifier(
    nss: &NssInstance,
    subject: &PhraseConcept,
    object: &PhraseConcept,
    kind: SpecialQuantKind,
    count: Option<u64>,
    ctx: &mut TranslationContext,
    em: &mut Emitter,
) -> Result<(), TranslateError> {
    let Some(cd) = count else {
        ctx.warn(
            &nss.source,
            "special quantifier without a numeral; translated as `some`",
        );
        let derived = make_label(&[&object.label, &subject.label], None)?;
        em.emit(
            "subject-quantifier",
            Axiom::sub_class_of(
                ConceptExpr::atomic(derived.as_str()),
                ConceptExpr::and(vec![subject.expr.clone(), object.expr.clone()]),
            ),
        );
        return Ok(());
    };
    if cd == 0 {
        ctx.warn(&nss.source, "cardinality bound of 0 is degenerate");
    }
    let n = ctx.next_group(&subject.label);
    let group = format!("{}_{n}", subject.label);
    let (suffix, bound) = match kind {
        SpecialQuantKind::AtLeast => (
            format!("Min{cd}"),
            ConceptExpr::data_exists(vocab::MIN_INCLUSIVE, Literal::Integer(cd as i64)),
        ),
        SpecialQuantKind::AtMost => (
            format!("Max{cd}"),
            ConceptExpr::data_exists(vocab::MAX_INCLUSIVE, Literal::Integer(cd as i64)),
        ),
        SpecialQuantKind::Exactly => (
            format!("Only{cd}"),
            ConceptExpr::and(vec![
                ConceptExpr::data_exists(vocab::MIN_INCLUSIVE, Literal::Integer(cd as i64)),
                ConceptExpr::data_exists(vocab::MAX_INCLUSIVE, Literal::Integer(cd as i64)),
            ]),
        ),
        SpecialQuantKind::Only => unreachable!("handled by the only rule"),
    };
    let derived = format!("{}{group}_{suffix}", object.label);
    let cardinality_of = |restriction: ConceptExpr| {
        ConceptExpr::exists(
            vocab::BELONGS_TO,
            ConceptExpr::exists(
                vocab::HAS_CARDINALITY,
                ConceptExpr::and(vec![ConceptExpr::atomic(vocab::CARDINALITY), restriction]),
            ),
        )
    };
    em.emit(
        "special-quantifier",
        Axiom::equivalent(
            ConceptExpr::atomic(&derived),
            ConceptExpr::and(vec![
                ConceptExpr::atomic(&group),
                object.expr.clone(),
                cardinality_of(bound),
            ]),
        ),
    );
    em.emit(
        "special-quantifier",
        Axiom::sub_class_of(
            ConceptExpr::atomic(&group),
            ConceptExpr::and(vec![
                subject.expr.clone(),
                cardinality_of(ConceptExpr::data_exists(
                    vocab::MIN_EXCLUSIVE,
                    Literal::Integer(cd as i64),
                )),
            ]),
        ),
    );
    em.emit(
        "special-quantifier",
        Axiom::sub_class_of(
            ConceptExpr::nominal(format!("n{cd}")),
            ConceptExpr::atomic(vocab::INTEGER),
        ),
    );
    Ok(())
}

/// Post-pass for the "only" rule: for every concept X in the symbol table
/// that neither subsumes the subject nor already interacts with the subject
/// or object in the told hierarchy, emit (X ⊓ O) ≡ ⊥.
pub fn finalize_only_rules(ctx: &TranslationContext, kb: &KnowledgeBase) -> Translation {
    if ctx.only_records.is_empty() {
        return Vec::new();
    }
    let reach = told_reachability(kb);
    let reaches = |from: &str, to: &str| {
        from == to
            || reach
                .get(from)
                .is_some_and(|set: &BTreeSet<String>| set.contains(to))
    };
    let machinery: BTreeSet<&str> = vocab::PRIMITIVE_CONCEPTS.iter().copied().collect();
    let mut out = Vec::new();
    for (s_label, o_label) in &ctx.only_records {
        for x in &kb.symbols.concepts {
            if x == s_label || x == o_label || machinery.contains(x.as_str()) {
                continue;
            }
            if reaches(s_label, x)
                || reaches(x, s_label)
                || reaches(x, o_label)
                || reaches(o_label, x)
            {
                continue;
            }
            out.push(crate::dl::TracedAxiom {
                axiom: Axiom::equivalent(
                    ConceptExpr::and(vec![
                        ConceptExpr::atomic(x),
                        ConceptExpr::atomic(o_label),
                    ]),
                    ConceptExpr::Bottom,
                ),
                provenance: Some(Provenance {
                    source: SourceId::new("only-post-pass", 0),
                    rule: "only-disjointness".to_string(),
                }),
            });
        }
    }
    out
}

/// Told atomic-inclusion reachability over the knowledge base: atomic LHS
/// to the atomic conjuncts of its RHS, transitively closed.
fn told_reachability(kb: &KnowledgeBase) -> BTreeMap<String, BTreeSet<String>> {
    let mut edges: BTreeMap<String, BTreeSet<String>> = BTreeMap::new();
    for traced in kb.tbox() {
        if let AxiomKind::SubClassOf(ConceptExpr::Atomic(lhs), rhs)
        | AxiomKind::EquivalentClasses(ConceptExpr::Atomic(lhs), rhs) = &traced.axiom.kind
        {
            let mut atoms = BTreeSet::new();
            match rhs {
                ConceptExpr::Atomic(a) => {
                    atoms.insert(a.clone());
                }
                ConceptExpr::And(ms) => {
                    for m in ms {
                        if let ConceptExpr::Atomic(a) = m {
                            atoms.insert(a.clone());
                        }
                    }
                }
                _ => {}
            }
            edges.entry(lhs.clone()).or_default().extend(atoms);
        }
    }
    let nodes: Vec<String> = edges.keys().cloned().collect();
    for _ in 0..nodes.len() {
        let mut changed = false;
        for node in &nodes {
            let current: Vec<String> = edges[node].iter().cloned().collect();
            for mid in current {
                if let Some(next) = edges.get(&mid).cloned() {
                    let entry = edges.get_mut(node).expect("node exists");
                    let before = entry.len();
                    entry.extend(next);
                    changed |= entry.len() != before;
                }
            }
        }
        if !changed {
            break;
        }
    }
    edges
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn camel_cases() {
        assert_eq!(camel("student"), "Student");
        assert_eq!(camel("hard-working"), "Hardworking");
        assert_eq!(camel("King Richard"), "KingRichard");
        assert_eq!(camel("John Jr. Smith"), "JohnJrSmith");
        assert_eq!(camel("Greek-house"), "Greekhouse");
        assert_eq!(camel("137"), "137");
    }

    #[test]
    fn label_examples() {
        assert_eq!(
            make_label(&["student"], Some(NerClass::Person)).unwrap().0,
            "StudentPerson"
        );
        assert_eq!(
            make_label(&["student", "like", "Priyansh"], None).unwrap().0,
            "StudentLikePriyansh"
        );
        assert_eq!(make_label(&["dog"], None).unwrap().0, "Dog");
    }

    #[test]
    fn empty_label_is_an_error() {
        assert!(make_label(&["--"], None).is_err());
    }

    #[test]
    fn labels_are_total_on_ascii() {
        for s in ["a", "Zz9", "x-y", "Mr. X", "very10long NAME"] {
            assert!(make_label(&[s], None).is_ok());
        }
    }
}
