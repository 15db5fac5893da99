//! Normalized sentence structure (NSS): the quantifier/modifier/subject/
//! IS-A/object template that simplified sentences are fitted into, plus the
//! characterization accuracy scores computed over fit outcomes.

use crate::lexicon::{CanonicalQuantifier, IsaKind, Lexicon};
use crate::rational::Score;
use crate::tags::PennTag;
use crate::token::{SourceId, TaggedSentence, Token};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NssKind {
    Simple,
    Complex,
    Compound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tense {
    Present,
    Past,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Modality {
    None,
    May,
    Can,
}

/// The canonical IS-A record of one predicate cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsaCell {
    pub raw: Vec<Token>,
    pub canonical: String,
    pub kind: IsaKind,
    pub tense: Tense,
    pub modality: Modality,
}

/// One entity: the token run of a single subject/object (multi-token for
/// collapsed proper-name runs like "John Jr. Smith").
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entity {
    pub tokens: Vec<Token>,
}

impl Entity {
    /// Space-joined surface form.
    pub fn surface(&self) -> String {
        self.tokens
            .iter()
            .map(|t| t.lexeme.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn head(&self) -> &Token {
        self.tokens.last().expect("entity is never empty")
    }

    pub fn is_proper(&self) -> bool {
        self.tokens.iter().all(|t| t.tag.is_proper_noun())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Connective {
    Single,
    And,
    Or,
}

/// Subject/object cell: an entity or a conjunction/disjunction list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntityCell {
    pub raw: Vec<Token>,
    pub items: Vec<Entity>,
    pub connective: Connective,
}

impl EntityCell {
    pub fn single(&self) -> Option<&Entity> {
        (self.items.len() == 1).then(|| &self.items[0])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpecialQuantKind {
    Only,
    AtLeast,
    AtMost,
    Exactly,
}

/// Parsed quantifier cell value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Quantifier {
    Simple(CanonicalQuantifier),
    Special {
        kind: SpecialQuantKind,
        count: Option<u64>,
        of_the: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantCell {
    pub raw: Vec<Token>,
    pub value: Quantifier,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TemporalKind {
    /// "CD UNIT ago"
    Ago,
    /// "for CD UNIT"
    For,
}

/// Temporal adjunct of a tensed sentence ("three years ago", "for three
/// years"); the tokens sit after the object in surface order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemporalAdjunct {
    pub raw: Vec<Token>,
    pub kind: TemporalKind,
    pub count: u64,
    /// Singular unit lexeme, e.g. "year".
    pub unit: String,
}

/// A filled template. `Simple` leaves every second-segment cell empty;
/// `Compound` has at least one entity list of length ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NssInstance {
    pub kind: NssKind,
    pub q1: Option<QuantCell>,
    pub m1: Vec<Token>,
    pub subject: EntityCell,
    pub cl1: Option<Token>,
    pub isa1: IsaCell,
    pub q2: Option<QuantCell>,
    pub m2: Vec<Token>,
    pub object1: EntityCell,
    pub temporal: Option<TemporalAdjunct>,
    pub cl2: Option<Token>,
    pub isa2: Option<IsaCell>,
    pub q3: Option<QuantCell>,
    pub m3: Vec<Token>,
    pub object2: Option<EntityCell>,
    pub source: SourceId,
}

impl NssInstance {
    /// Concatenates the filled cells in template order. Equals the input
    /// token sequence with punctuation removed.
    pub fn reconstruct(&self) -> Vec<Token> {
        let mut out = Vec::new();
        let push_quant = |out: &mut Vec<Token>, q: &Option<QuantCell>| {
            if let Some(q) = q {
                out.extend(q.raw.iter().cloned());
            }
        };
        push_quant(&mut out, &self.q1);
        out.extend(self.m1.iter().cloned());
        out.extend(self.subject.raw.iter().cloned());
        if let Some(cl) = &self.cl1 {
            out.push(cl.clone());
        }
        out.extend(self.isa1.raw.iter().cloned());
        push_quant(&mut out, &self.q2);
        out.extend(self.m2.iter().cloned());
        out.extend(self.object1.raw.iter().cloned());
        if let Some(t) = &self.temporal {
            out.extend(t.raw.iter().cloned());
        }
        if let Some(cl) = &self.cl2 {
            out.push(cl.clone());
        }
        if let Some(isa) = &self.isa2 {
            out.extend(isa.raw.iter().cloned());
        }
        push_quant(&mut out, &self.q3);
        out.extend(self.m3.iter().cloned());
        if let Some(o2) = &self.object2 {
            out.extend(o2.raw.iter().cloned());
        }
        out
    }
}

/// Why a sentence failed to fit; carries the first offending token position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason")]
pub enum FitFailure {
    NoIsaLexeme,
    CellTagMismatch {
        position: usize,
        tag: String,
        cell: String,
    },
    Unsaturated {
        position: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FitOutcome {
    pub source: SourceId,
    pub result: Result<NssInstance, FitFailure>,
}

impl FitOutcome {
    pub fn is_fitted(&self) -> bool {
        self.result.is_ok()
    }
}

struct Segment<'a> {
    tokens: Vec<&'a Token>,
    /// Position (in the fit view) of each token, for error reporting.
    positions: Vec<usize>,
}

/// Fits a simplified sentence into the template, per the fitting algorithm:
/// the IS-A lexeme is located first (longest lexicon match); the subject
/// phrase is everything before it and the object phrase everything after;
/// quantifiers are matched against the lexicon; the final eligible
/// noun-class token becomes the head. Punctuation tokens separate list
/// items and otherwise carry no cell content.
pub fn fit_template(s: &TaggedSentence, lex: &Lexicon) -> FitOutcome {
    let source = s.source.clone();
    match fit_inner(s, lex) {
        Ok(instance) => FitOutcome {
            source,
            result: Ok(instance),
        },
        Err(failure) => FitOutcome {
            source,
            result: Err(failure),
        },
    }
}

fn fit_inner(s: &TaggedSentence, lex: &Lexicon) -> Result<NssInstance, FitFailure> {
    // Working view: drop sentence punctuation that never fills a cell
    // (final periods, colons); keep commas as list separators.
    let view: Vec<(usize, &Token)> = s
        .tokens
        .iter()
        .enumerate()
        .filter(|(_, t)| !matches!(t.tag, PennTag::Period | PennTag::Colon))
        .collect();
    let tokens: Vec<&Token> = view.iter().map(|(_, t)| *t).collect();

    // Longest-match IS-A spans, scanned left to right.
    let owned: Vec<Token> = tokens.iter().map(|t| (*t).clone()).collect();
    let mut isa_spans: Vec<(usize, usize, IsaCell)> = Vec::new();
    let mut i = 0;
    while i < owned.len() {
        if let Some((len, variant)) = lex.match_isa_tokens(&owned, i) {
            let (tense, modality) = match variant.kind {
                IsaKind::TensePast => (Tense::Past, Modality::None),
                IsaKind::ModalMay => (Tense::Present, Modality::May),
                IsaKind::ModalCan => (Tense::Present, Modality::Can),
                _ => (Tense::Present, Modality::None),
            };
            isa_spans.push((
                i,
                len,
                IsaCell {
                    raw: owned[i..i + len].to_vec(),
                    canonical: variant.canonical.clone(),
                    kind: variant.kind,
                    tense,
                    modality,
                },
            ));
            i += len;
        } else {
            i += 1;
        }
    }

    match isa_spans.len() {
        0 => return Err(FitFailure::NoIsaLexeme),
        1 | 2 => {}
        _ => {
            return Err(FitFailure::Unsaturated {
                position: view[isa_spans[2].0].0,
            })
        }
    }

    let (isa1_at, isa1_len, isa1) = isa_spans[0].clone();
    let second = isa_spans.get(1).cloned();

    let mut subject_seg = make_segment(&view, 0, isa1_at);
    let cl1 = extract_clause_token(&mut subject_seg);

    let (mut mid_seg, cl2, final_seg) = match &second {
        Some((isa2_at, _, _)) => {
            let mut mid = make_segment(&view, isa1_at + isa1_len, *isa2_at);
            let cl2 = extract_trailing_clause_token(&mut mid);
            let (_, isa2_len, _) = second.as_ref().expect("second span");
            let fin = make_segment(&view, *isa2_at + isa2_len, view.len());
            (mid, cl2, Some(fin))
        }
        None => {
            let mid = make_segment(&view, isa1_at + isa1_len, view.len());
            (mid, None, None)
        }
    };

    if cl1.is_some() && cl2.is_some() {
        return Err(FitFailure::Unsaturated {
            position: view
                .get(second.as_ref().map(|(at, _, _)| *at).unwrap_or(0))
                .map(|(orig, _)| *orig)
                .unwrap_or(0),
        });
    }

    let (q1, m1, subject) = parse_segment(&mut subject_seg, lex, "subject", true)?;
    let subject = subject.ok_or(FitFailure::CellTagMismatch {
        position: 0,
        tag: "∅".to_string(),
        cell: "subject".to_string(),
    })?;

    let temporal = extract_temporal(&mut mid_seg);
    let (q2, m2, object1) = parse_segment(&mut mid_seg, lex, "object", false)?;
    let object1 = object1.ok_or(FitFailure::CellTagMismatch {
        position: view.get(isa1_at + isa1_len).map(|(o, _)| *o).unwrap_or(0),
        tag: "∅".to_string(),
        cell: "object".to_string(),
    })?;

    let (isa2, q3, m3, object2) = match (second, final_seg) {
        (Some((_, _, isa2)), Some(mut fin)) => {
            let (q3, m3, object2) = parse_segment(&mut fin, lex, "object", false)?;
            let object2 = object2.ok_or(FitFailure::CellTagMismatch {
                position: 0,
                tag: "∅".to_string(),
                cell: "object".to_string(),
            })?;
            (Some(isa2), q3, m3, Some(object2))
        }
        _ => (None, None, Vec::new(), None),
    };

    let kind = if isa2.is_some() {
        NssKind::Complex
    } else if subject.items.len() > 1
        || object1.items.len() > 1
        || object2.as_ref().is_some_and(|o| o.items.len() > 1)
    {
        NssKind::Compound
    } else {
        NssKind::Simple
    };

    Ok(NssInstance {
        kind,
        q1,
        m1,
        subject,
        cl1,
        isa1,
        q2,
        m2,
        object1,
        temporal,
        cl2,
        isa2,
        q3,
        m3,
        object2,
        source: s.source.clone(),
    })
}

fn make_segment<'a>(view: &[(usize, &'a Token)], from: usize, to: usize) -> Segment<'a> {
    let mut tokens = Vec::new();
    let mut positions = Vec::new();
    for (orig, token) in &view[from..to] {
        tokens.push(*token);
        positions.push(*orig);
    }
    Segment { tokens, positions }
}

/// Clause token at the end of the subject segment ("John, who …").
fn extract_clause_token(seg: &mut Segment) -> Option<Token> {
    let last_real = seg
        .tokens
        .iter()
        .rposition(|t| t.tag != PennTag::Comma)?;
    let token = seg.tokens[last_real];
    if matches!(token.tag, PennTag::Wp | PennTag::WpDollar | PennTag::Wdt) {
        let token = token.clone();
        seg.tokens.truncate(last_real);
        seg.positions.truncate(last_real);
        Some(token)
    } else {
        None
    }
}

/// Clause token at the end of the first-object segment ("… a student who …").
fn extract_trailing_clause_token(seg: &mut Segment) -> Option<Token> {
    extract_clause_token(seg)
}

/// Pulls a trailing temporal adjunct out of the object segment:
/// `CD UNIT(Time) ago` or `for CD UNIT(Time)`.
fn extract_temporal(seg: &mut Segment) -> Option<TemporalAdjunct> {
    let n = seg.tokens.len();
    if n >= 3 {
        let (a, b, c) = (seg.tokens[n - 3], seg.tokens[n - 2], seg.tokens[n - 1]);
        if c.lexeme.eq_ignore_ascii_case("ago")
            && b.unit_dimension() == Some(crate::lexicon::Dimension::Time)
            && a.numeral().is_some()
        {
            let adjunct = TemporalAdjunct {
                raw: vec![a.clone(), b.clone(), c.clone()],
                kind: TemporalKind::Ago,
                count: a.numeral().expect("checked above"),
                unit: b.lexeme.to_lowercase(),
            };
            seg.tokens.truncate(n - 3);
            seg.positions.truncate(n - 3);
            return Some(adjunct);
        }
        if a.lexeme.eq_ignore_ascii_case("for")
            && b.numeral().is_some()
            && c.unit_dimension() == Some(crate::lexicon::Dimension::Time)
        {
            let adjunct = TemporalAdjunct {
                raw: vec![a.clone(), b.clone(), c.clone()],
                kind: TemporalKind::For,
                count: b.numeral().expect("checked above"),
                unit: c.lexeme.to_lowercase(),
            };
            seg.tokens.truncate(n - 3);
            seg.positions.truncate(n - 3);
            return Some(adjunct);
        }
    }
    None
}

/// Quantifier cell, modifier run, and entity cell of one parsed segment.
type ParsedSegment = (Option<QuantCell>, Vec<Token>, Option<EntityCell>);

/// Parses one subject/object segment: optional quantifier, modifier run,
/// and the entity (or entity list). `allow_special` admits the special
/// subject quantifiers (only / at-least / at-most / CD-of).
fn parse_segment(
    seg: &mut Segment,
    lex: &Lexicon,
    cell: &str,
    allow_special: bool,
) -> Result<ParsedSegment, FitFailure> {
    if seg.tokens.is_empty() {
        return Ok((None, Vec::new(), None));
    }
    let quant = parse_quantifier(seg, lex, allow_special);

    // Entity list split at commas and CC tokens.
    let mut items: Vec<Vec<Token>> = Vec::new();
    let mut current: Vec<Token> = Vec::new();
    let mut connective = Connective::Single;
    let mut raw: Vec<Token> = Vec::new();
    let mut disjunctive = false;
    for (k, token) in seg.tokens.iter().enumerate() {
        match token.tag {
            PennTag::Comma => {
                if !current.is_empty() {
                    items.push(std::mem::take(&mut current));
                }
            }
            PennTag::Cc => {
                if token.lexeme.eq_ignore_ascii_case("either") {
                    disjunctive = true;
                } else {
                    if token.lexeme.eq_ignore_ascii_case("or") && disjunctive {
                        connective = Connective::Or;
                    }
                    if !current.is_empty() {
                        items.push(std::mem::take(&mut current));
                    }
                }
                raw.push((*token).clone());
                continue;
            }
            _ => {
                if !(token.tag.cell_modifier() || token.tag.cell_entity()) {
                    return Err(FitFailure::CellTagMismatch {
                        position: seg.positions[k],
                        tag: token.tag.to_string(),
                        cell: cell.to_string(),
                    });
                }
                current.push((*token).clone());
            }
        }
        raw.push((*token).clone());
    }
    if !current.is_empty() {
        items.push(current);
    }
    if items.is_empty() {
        return Ok((quant, Vec::new(), None));
    }
    if items.len() > 1 && connective == Connective::Single {
        connective = Connective::And;
    }

    // Single item: split into modifier run + head entity (trailing proper
    // noun runs collapse into one entity).
    if items.len() == 1 {
        let item = items.pop().expect("one item");
        let (modifiers, entity) = split_item(&item, seg, cell)?;
        let cell = EntityCell {
            raw: entity.tokens.clone(),
            items: vec![entity],
            connective: Connective::Single,
        };
        return Ok((quant, modifiers, Some(cell)));
    }

    // List: validate each item and keep modifiers inside the entities.
    let mut entities = Vec::new();
    for item in items {
        let (mods, entity) = split_item(&item, seg, cell)?;
        let mut tokens = mods;
        tokens.extend(entity.tokens);
        entities.push(Entity { tokens });
    }
    Ok((
        quant,
        Vec::new(),
        Some(EntityCell {
            raw,
            items: entities,
            connective,
        }),
    ))
}

fn split_item(
    item: &[Token],
    seg: &Segment,
    cell: &str,
) -> Result<(Vec<Token>, Entity), FitFailure> {
    let head_at = item.len() - 1;
    let head = &item[head_at];
    if !head.tag.cell_entity() {
        let position = seg
            .tokens
            .iter()
            .position(|t| std::ptr::eq(*t, head))
            .map(|k| seg.positions[k])
            .unwrap_or(0);
        return Err(FitFailure::CellTagMismatch {
            position,
            tag: head.tag.to_string(),
            cell: cell.to_string(),
        });
    }
    // Collapse a trailing run of proper nouns into one entity.
    let mut start = head_at;
    if head.tag.is_proper_noun() {
        while start > 0 && item[start - 1].tag.is_proper_noun() {
            start -= 1;
        }
    }
    let modifiers: Vec<Token> = item[..start].to_vec();
    for (k, m) in modifiers.iter().enumerate() {
        if !m.tag.cell_modifier() {
            let position = seg
                .tokens
                .iter()
                .position(|t| std::ptr::eq(*t, &item[k]))
                .map(|j| seg.positions[j])
                .unwrap_or(0);
            return Err(FitFailure::CellTagMismatch {
                position,
                tag: m.tag.to_string(),
                cell: "modifier".to_string(),
            });
        }
    }
    Ok((
        modifiers,
        Entity {
            tokens: item[start..].to_vec(),
        },
    ))
}

fn parse_quantifier(seg: &mut Segment, lex: &Lexicon, allow_special: bool) -> Option<QuantCell> {
    let words: Vec<String> = seg.tokens.iter().map(|t| t.lexeme.clone()).collect();
    if words.is_empty() {
        return None;
    }
    let (len, canonical) = lex.match_quantifier(&words, 0)?;
    // Quantifier tokens must be determiner-ish, not a noun that happens to
    // share a lexeme.
    let head_ok = matches!(
        seg.tokens[0].tag,
        PennTag::Dt | PennTag::In | PennTag::Rb | PennTag::Jj | PennTag::Jjs
    );
    if !head_ok {
        return None;
    }
    let mut consumed = len;
    let value = match canonical {
        CanonicalQuantifier::AtLeast | CanonicalQuantifier::AtMost if allow_special => {
            let kind = if canonical == CanonicalQuantifier::AtLeast {
                SpecialQuantKind::AtLeast
            } else {
                SpecialQuantKind::AtMost
            };
            let count = seg.tokens.get(consumed).and_then(|t| t.numeral());
            if count.is_some() {
                consumed += 1;
            }
            let of_the = eat_of_the(seg, &mut consumed);
            Quantifier::Special {
                kind,
                count,
                of_the,
            }
        }
        CanonicalQuantifier::Only if allow_special => {
            let count = seg.tokens.get(consumed).and_then(|t| t.numeral());
            if let Some(c) = count {
                consumed += 1;
                let of_the = eat_of_the(seg, &mut consumed);
                Quantifier::Special {
                    kind: SpecialQuantKind::Exactly,
                    count: Some(c),
                    of_the,
                }
            } else {
                Quantifier::Special {
                    kind: SpecialQuantKind::Only,
                    count: None,
                    of_the: false,
                }
            }
        }
        other => Quantifier::Simple(other),
    };
    let raw: Vec<Token> = seg.tokens[..consumed].iter().map(|t| (*t).clone()).collect();
    seg.tokens.drain(..consumed);
    seg.positions.drain(..consumed);
    Some(QuantCell { raw, value })
}

/// Consumes "of" ("of the") after a special quantifier head.
fn eat_of_the(seg: &Segment, consumed: &mut usize) -> bool {
    let of = seg
        .tokens
        .get(*consumed)
        .is_some_and(|t| t.lexeme.eq_ignore_ascii_case("of"));
    if !of {
        return false;
    }
    *consumed += 1;
    if seg
        .tokens
        .get(*consumed)
        .is_some_and(|t| t.lexeme.eq_ignore_ascii_case("the"))
    {
        *consumed += 1;
    }
    true
}

/// Independent mechanical soundness check: every filled cell's tag must be
/// in that cell's allowed set, and the reconstruction must reproduce the
/// input. This is the machine oracle behind characterization precision.
pub fn check_cells(instance: &NssInstance, input: &TaggedSentence) -> bool {
    let quant_ok = |q: &Option<QuantCell>| {
        q.as_ref().is_none_or(|q| {
            q.raw.iter().all(|t| {
                matches!(
                    t.tag,
                    PennTag::Dt | PennTag::In | PennTag::Rb | PennTag::Jj | PennTag::Jjs | PennTag::Cd
                )
            })
        })
    };
    let mods_ok = |m: &[Token]| m.iter().all(|t| t.tag.cell_modifier());
    let entity_ok = |e: &EntityCell| {
        !e.items.is_empty()
            && e.items.iter().all(|ent| {
                !ent.tokens.is_empty()
                    && ent.head().tag.cell_entity()
                    && ent.tokens.iter().all(|t| {
                        t.tag.cell_entity() || t.tag.cell_modifier()
                    })
            })
    };
    let cells_ok = quant_ok(&instance.q1)
        && quant_ok(&instance.q2)
        && quant_ok(&instance.q3)
        && mods_ok(&instance.m1)
        && mods_ok(&instance.m2)
        && mods_ok(&instance.m3)
        && entity_ok(&instance.subject)
        && entity_ok(&instance.object1)
        && instance.object2.as_ref().is_none_or(entity_ok)
        && !(instance.cl1.is_some() && instance.cl2.is_some());

    let reconstructed: Vec<(String, PennTag)> = instance
        .reconstruct()
        .into_iter()
        .map(|t| (t.lexeme, t.tag))
        .collect();
    let expected: Vec<(String, PennTag)> = input
        .tokens
        .iter()
        .filter(|t| !t.tag.is_punctuation())
        .map(|t| (t.lexeme.clone(), t.tag.clone()))
        .collect();
    cells_ok && reconstructed == expected
}

/// Characterization precision and recall over a batch of fit outcomes.
/// `N` is the corpus size, `N_F` the fitted count, `N_CF` the correctly
/// fitted count. Zero denominators make the score undefined (`None`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Characterization {
    pub n: u64,
    pub n_f: u64,
    pub n_cf: u64,
    pub cp: Option<Score>,
    pub cr: Option<Score>,
}

/// Computes CP = N_CF / N_F and CR = N_CF / N from raw counts.
pub fn characterization_from_counts(n_cf: u64, n_f: u64, n: u64) -> Characterization {
    Characterization {
        n,
        n_f,
        n_cf,
        cp: Score::new(n_cf, n_f),
        cr: Score::new(n_cf, n),
    }
}

/// Scores fit outcomes. Correctness of a fitted sentence comes from the
/// per-source gold flags when given, otherwise from the mechanical
/// [`check_cells`] oracle run against `inputs`. Outcomes and inputs are
/// positionally matched (fitting yields one outcome per input); sentences
/// split from one source line share that line's gold flag.
pub fn characterization_scores(
    outcomes: &[FitOutcome],
    inputs: &[TaggedSentence],
    gold: Option<&BTreeMap<SourceId, bool>>,
) -> Characterization {
    debug_assert_eq!(outcomes.len(), inputs.len());
    let n = outcomes.len() as u64;
    let mut n_f = 0;
    let mut n_cf = 0;
    for (outcome, input) in outcomes.iter().zip(inputs) {
        if let Ok(instance) = &outcome.result {
            n_f += 1;
            let correct = match gold {
                Some(flags) => flags.get(&outcome.source).copied().unwrap_or(false),
                None => check_cells(instance, input),
            };
            if correct {
                n_cf += 1;
            }
        }
    }
    characterization_from_counts(n_cf, n_f, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preprocess::{parse_tagged, preprocess_sentence};

    fn fit(line: &str) -> NssInstance {
        let lex = Lexicon::embedded();
        let s = parse_tagged(line, SourceId::new("test", 1)).unwrap();
        let s = preprocess_sentence(&s, &lex);
        fit_template(&s, &lex).result.expect("should fit")
    }

    fn prep(line: &str) -> TaggedSentence {
        let lex = Lexicon::embedded();
        let s = parse_tagged(line, SourceId::new("test", 1)).unwrap();
        preprocess_sentence(&s, &lex)
    }

    #[test]
    fn fits_the_dog_is_very_clever() {
        let i = fit("The_DT dog_NN is_VBZ very_RB clever_JJ");
        assert_eq!(i.kind, NssKind::Simple);
        assert_eq!(
            i.q1.as_ref().unwrap().value,
            Quantifier::Simple(CanonicalQuantifier::The)
        );
        assert_eq!(i.subject.single().unwrap().surface(), "dog");
        assert_eq!(i.isa1.canonical, "is");
        assert_eq!(i.m2.iter().map(|t| t.lexeme.as_str()).collect::<Vec<_>>(), ["very"]);
        assert_eq!(i.object1.single().unwrap().surface(), "clever");
        assert!(i.q2.is_none());
    }

    #[test]
    fn fits_john_is_a_student_as_simple() {
        let i = fit("John_NNP is_VBZ a_DT student_NN");
        assert_eq!(i.kind, NssKind::Simple);
        assert_eq!(i.subject.single().unwrap().surface(), "John");
        assert!(i.subject.single().unwrap().is_proper());
        assert_eq!(
            i.q2.as_ref().unwrap().value,
            Quantifier::Simple(CanonicalQuantifier::A)
        );
        assert_eq!(i.object1.single().unwrap().surface(), "student");
    }

    #[test]
    fn fits_complex_with_null_clause() {
        let i = fit(
            "John_NNP ,_, being_VBG a_DT hard-working_JJ student_NN ,_, is_VBZ successful_JJ",
        );
        assert_eq!(i.kind, NssKind::Complex);
        assert_eq!(i.isa1.canonical, "being");
        assert!(i.cl1.is_none());
        assert!(i.cl2.is_none());
        assert_eq!(i.object1.single().unwrap().surface(), "student");
        assert_eq!(
            i.m2.iter().map(|t| t.lexeme.as_str()).collect::<Vec<_>>(),
            ["hard-working"]
        );
        assert_eq!(i.isa2.as_ref().unwrap().canonical, "is");
        assert_eq!(i.object2.as_ref().unwrap().single().unwrap().surface(), "successful");
    }

    #[test]
    fn multi_token_proper_names_collapse() {
        let i = fit("John_NNP Jr._NNP Smith_NNP is_VBZ a_DT student_NN");
        assert_eq!(i.subject.single().unwrap().surface(), "John Jr. Smith");
    }

    #[test]
    fn special_quantifier_at_least_of_the() {
        let i = fit("At_IN least_JJS one_CD of_IN the_DT students_NNS is_VBZ hard-working_JJ");
        match &i.q1.as_ref().unwrap().value {
            Quantifier::Special {
                kind,
                count,
                of_the,
            } => {
                assert_eq!(*kind, SpecialQuantKind::AtLeast);
                assert_eq!(*count, Some(1));
                assert!(of_the);
            }
            other => panic!("expected special quantifier, got {other:?}"),
        }
        assert_eq!(i.subject.single().unwrap().surface(), "student");
    }

    #[test]
    fn temporal_ago_adjunct_is_extracted() {
        let i = fit("John_NNP was_VBD a_DT teacher_NN three_CD years_NNS ago_RB");
        assert_eq!(i.isa1.tense, Tense::Past);
        let t = i.temporal.as_ref().unwrap();
        assert_eq!(t.kind, TemporalKind::Ago);
        assert_eq!(t.count, 3);
        assert_eq!(t.unit, "year");
        assert_eq!(i.object1.single().unwrap().surface(), "teacher");
    }

    #[test]
    fn temporal_for_adjunct_is_extracted() {
        let i = fit("John_NNP was_VBD a_DT teacher_NN for_IN three_CD years_NNS");
        let t = i.temporal.as_ref().unwrap();
        assert_eq!(t.kind, TemporalKind::For);
        assert_eq!(t.count, 3);
    }

    #[test]
    fn no_isa_lexeme_fails() {
        let lex = Lexicon::embedded();
        let s = prep("The_DT red_JJ car_NN");
        let outcome = fit_template(&s, &lex);
        assert_eq!(outcome.result.unwrap_err(), FitFailure::NoIsaLexeme);
    }

    #[test]
    fn disallowed_tag_causes_mismatch() {
        let lex = Lexicon::embedded();
        let s = prep("John_NNP is_VBZ taller_JJR than_IN some_DT player_NN");
        let outcome = fit_template(&s, &lex);
        assert!(matches!(
            outcome.result,
            Err(FitFailure::CellTagMismatch { .. })
        ));
    }

    #[test]
    fn reconstruction_matches_input() {
        let lex = Lexicon::embedded();
        for line in [
            "The_DT dog_NN is_VBZ very_RB clever_JJ",
            "John_NNP is_VBZ a_DT student_NN",
            "John_NNP was_VBD a_DT teacher_NN three_CD years_NNS ago_RB",
            "At_IN least_JJS three_CD candidates_NNS are_VBP qualified_JJ",
            "Only_RB John_NNP is_VBZ a_DT musician_NN",
            "John_NNP ,_, being_VBG a_DT hard-working_JJ student_NN ,_, is_VBZ successful_JJ",
        ] {
            let s = prep(line);
            let instance = fit_template(&s, &lex).result.expect(line);
            assert!(check_cells(&instance, &s), "cell check failed for `{line}`");
        }
    }

    #[test]
    fn scores_match_published_arithmetic() {
        let c = characterization_from_counts(1528, 1528, 1537);
        assert_eq!(c.cp.unwrap().value, "1.0000");
        assert_eq!(c.cr.unwrap().value, "0.9941");
        let c = characterization_from_counts(147, 147, 150);
        assert_eq!(c.cr.unwrap().value, "0.9800");
    }

    #[test]
    fn zero_denominators_are_undefined() {
        let c = characterization_from_counts(0, 0, 0);
        assert!(c.cp.is_none());
        assert!(c.cr.is_none());
    }
}
