//! Sentence normalization: `word_TAG` parsing, singularization, lexical
//! normalization of IS-A/quantifier/number lexemes, special annotation of
//! units and dimension adjectives, and a small fallback tagger for raw text.
//!
//! All operations are pure functions of (sentence, lexicon) and can run in
//! parallel per sentence.

use crate::lexicon::Lexicon;
use crate::tags::PennTag;
use crate::token::{Flag, SourceId, TaggedSentence, Token};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PreprocessError {
    #[error("{source_id}: token {position} (`{unit}`) has no _TAG suffix")]
    MissingTag {
        source_id: SourceId,
        position: usize,
        unit: String,
    },
    #[error("{source_id}: empty line")]
    EmptyLine { source_id: SourceId },
}

/// Parses one `lexeme_TAG( lexeme_TAG)*` line. The split is at the LAST
/// underscore, so lexemes such as `student_body` survive when written
/// `student_body_NN`.
pub fn parse_tagged(line: &str, source: SourceId) -> Result<TaggedSentence, PreprocessError> {
    let mut tokens = Vec::new();
    for (position, unit) in line.split_whitespace().enumerate() {
        let (lexeme, tag) = unit.rsplit_once('_').ok_or_else(|| {
            PreprocessError::MissingTag {
                source_id: source.clone(),
                position,
                unit: unit.to_string(),
            }
        })?;
        if lexeme.is_empty() || tag.is_empty() {
            return Err(PreprocessError::MissingTag {
                source_id: source.clone(),
                position,
                unit: unit.to_string(),
            });
        }
        let tag: PennTag = tag.parse().expect("tag parsing is total");
        tokens.push(Token::new(lexeme, tag));
    }
    if tokens.is_empty() {
        return Err(PreprocessError::EmptyLine { source_id: source });
    }
    Ok(TaggedSentence::new(tokens, source))
}

/// Irregular plural → singular forms that the suffix rules would get wrong.
const IRREGULAR_PLURALS: &[(&str, &str)] = &[
    ("men", "man"),
    ("women", "woman"),
    ("children", "child"),
    ("people", "person"),
    ("feet", "foot"),
    ("teeth", "tooth"),
    ("geese", "goose"),
    ("mice", "mouse"),
    ("lice", "louse"),
    ("oxen", "ox"),
    ("dice", "die"),
    ("criteria", "criterion"),
    ("phenomena", "phenomenon"),
    ("data", "datum"),
    ("cacti", "cactus"),
    ("fungi", "fungus"),
    ("alumni", "alumnus"),
    ("indices", "index"),
    ("matrices", "matrix"),
    ("vertices", "vertex"),
    ("analyses", "analysis"),
    ("theses", "thesis"),
    ("crises", "crisis"),
    ("wives", "wife"),
    ("lives", "life"),
    ("knives", "knife"),
    ("leaves", "leaf"),
    ("wolves", "wolf"),
    ("shelves", "shelf"),
];

/// Words that look plural but are not.
const PLURAL_LOOKALIKES: &[&str] = &["series", "species", "news", "physics", "mathematics"];

/// Singularizes one lexeme; `None` when no rule applies.
pub fn singularize_word(word: &str) -> Option<String> {
    let lower = word.to_lowercase();
    if PLURAL_LOOKALIKES.contains(&lower.as_str()) {
        return None;
    }
    if let Some((_, singular)) = IRREGULAR_PLURALS.iter().find(|(pl, _)| *pl == lower) {
        return Some(match_case(word, singular));
    }
    if let Some(stem) = lower.strip_suffix("ies") {
        if !stem.is_empty() {
            return Some(match_case(word, &format!("{stem}y")));
        }
    }
    for es_suffix in ["ches", "shes", "xes", "zes", "sses"] {
        if let Some(stem) = lower.strip_suffix(es_suffix) {
            let keep = &lower[..stem.len() + es_suffix.len() - 2];
            return Some(match_case(word, keep));
        }
    }
    if let Some(stem) = lower.strip_suffix('s') {
        if stem.len() > 1 && !stem.ends_with('s') && !stem.ends_with('u') {
            return Some(match_case(word, stem));
        }
    }
    None
}

/// Carries the original initial capitalization over to the rewritten form.
fn match_case(original: &str, rewritten: &str) -> String {
    if original.chars().next().is_some_and(|c| c.is_uppercase()) {
        let mut chars = rewritten.chars();
        match chars.next() {
            Some(first) => first.to_uppercase().collect::<String>() + chars.as_str(),
            None => String::new(),
        }
    } else {
        rewritten.to_string()
    }
}

/// Rewrites plural nouns to singular surface forms (keeping a PLURAL flag)
/// and fixes verb agreement ("are" → "is", "were" → "was"). Token count is
/// preserved; unknown plurals pass through with PLURAL unset.
pub fn singularize(s: &TaggedSentence, _lex: &Lexicon) -> TaggedSentence {
    let tokens = s
        .tokens
        .iter()
        .map(|t| {
            let mut t = t.clone();
            match t.tag {
                PennTag::Nns | PennTag::Nnps => {
                    if let Some(singular) = singularize_word(&t.lexeme) {
                        t.lexeme = singular;
                        t.set_flag(Flag::Plural);
                    }
                    t.tag = if t.tag == PennTag::Nns {
                        PennTag::Nn
                    } else {
                        PennTag::Nnp
                    };
                }
                PennTag::Vbp => {
                    if t.lexeme.eq_ignore_ascii_case("are") {
                        t.lexeme = match_case(&t.lexeme, "is");
                        t.tag = PennTag::Vbz;
                    }
                }
                PennTag::Vbd if t.lexeme.eq_ignore_ascii_case("were") => {
                    t.lexeme = match_case(&t.lexeme, "was");
                }
                _ => {}
            }
            t
        })
        .collect();
    TaggedSentence::new(tokens, s.source.clone())
}

/// Canonicalizes IS-A variants (collapsing multi-token variants into one
/// token carrying the IS-A kind), single-token quantifier variants, number
/// words (collapsed into one CD token), and synonym noun phrases.
pub fn normalize_lexical(s: &TaggedSentence, lex: &Lexicon) -> TaggedSentence {
    let words: Vec<String> = s.tokens.iter().map(|t| t.lexeme.clone()).collect();
    let mut out: Vec<Token> = Vec::with_capacity(s.tokens.len());
    let mut i = 0;
    while i < words.len() {
        // Number-word sequences first so "one" is not left for the matchers.
        if let Some((len, value)) = match_number(lex, &s.tokens, i) {
            let mut token = Token::new(value.to_string(), PennTag::Cd);
            token.set_flag(Flag::Numeral(value));
            out.push(token);
            i += len;
            continue;
        }
        if let Some((len, variant)) = lex.match_isa(&words, i) {
            // Only treat verb-tagged (or multi-token) matches as IS-A; a
            // bare "like" or "include" noun should stay untouched.
            let head_is_verb = matches!(
                s.tokens[i].tag,
                PennTag::Vbz | PennTag::Vbp | PennTag::Vbd | PennTag::Vbg | PennTag::Md
            );
            if head_is_verb || len > 1 {
                let tag = match variant.kind {
                    crate::lexicon::IsaKind::TensePast => PennTag::Vbd,
                    _ => s.tokens[i].tag.clone(),
                };
                let tag = if len > 1 && !matches!(tag, PennTag::Vbd) {
                    PennTag::Vbz
                } else {
                    tag
                };
                let mut token = Token::new(variant.canonical.clone(), tag);
                token.set_flag(Flag::Isa(variant.kind));
                out.push(token);
                i += len;
                continue;
            }
        }
        if let Some((len, quant)) = lex.match_quantifier(&words, i) {
            let eligible = matches!(
                s.tokens[i].tag,
                PennTag::Dt | PennTag::In | PennTag::Rb | PennTag::Jj | PennTag::Jjs
            );
            if eligible && (len > 1 || s.tokens[i].tag == PennTag::Dt) {
                let mut token = Token::new(quant.as_str().replace('-', " "), PennTag::Dt);
                let original_case = s.tokens[i].lexeme.clone();
                token.lexeme = match_case(&original_case, &token.lexeme);
                out.push(token);
                i += len;
                continue;
            }
        }
        if s.tokens[i].tag.is_noun() {
            if let Some(canonical) = lex.synonyms.get(&words[i].to_lowercase()) {
                let mut token = s.tokens[i].clone();
                token.lexeme = match_case(&words[i], canonical);
                out.push(token);
                i += 1;
                continue;
            }
        }
        let mut token = s.tokens[i].clone();
        if token.tag == PennTag::Cd {
            if let Ok(value) = token.lexeme.parse::<u64>() {
                token.set_flag(Flag::Numeral(value));
            }
        }
        out.push(token);
        i += 1;
    }
    TaggedSentence::new(out, s.source.clone())
}

/// Greedy parse of a spelled-out number starting at `start`. Returns token
/// length and value. Digit-only CD tokens are not consumed here.
fn match_number(lex: &Lexicon, tokens: &[Token], start: usize) -> Option<(usize, u64)> {
    let word = tokens[start].lexeme.to_lowercase();
    lex.number_words.get(&word)?;
    let mut total: u64 = 0;
    let mut current: u64 = 0;
    let mut len = 0;
    let mut i = start;
    while i < tokens.len() {
        let w = tokens[i].lexeme.to_lowercase();
        if w == "and" && len > 0 {
            // Absorb "and" only when a number word follows directly.
            let next_is_number = tokens
                .get(i + 1)
                .is_some_and(|t| lex.number_words.contains_key(&t.lexeme.to_lowercase()));
            if next_is_number {
                i += 1;
                len += 1;
                continue;
            }
            break;
        }
        match lex.number_words.get(&w) {
            Some(&v) if v >= 100 => {
                current = current.max(1).saturating_mul(v);
                total = total.saturating_add(current);
                current = 0;
            }
            Some(&v) => {
                current = current.saturating_add(v);
            }
            None => break,
        }
        i += 1;
        len += 1;
    }
    if len == 0 {
        return None;
    }
    Some((len, total.saturating_add(current)))
}

/// Flags unit nouns with their dimension and adjectives with their
/// (dimension, sense) entry. Expects lexical normalization to have run.
pub fn annotate_special(s: &TaggedSentence, lex: &Lexicon) -> TaggedSentence {
    let tokens = s
        .tokens
        .iter()
        .map(|t| {
            let mut t = t.clone();
            if t.tag.is_noun() {
                if let Some(&dim) = lex.unit_map.get(&t.lexeme.to_lowercase()) {
                    t.set_flag(Flag::Unit(dim));
                }
            }
            if matches!(t.tag, PennTag::Jj | PennTag::Jjr | PennTag::Jjs) {
                if let Some(&(dim, sense)) = lex.dimension_adjectives.get(&t.lexeme.to_lowercase())
                {
                    t.set_flag(Flag::DimAdj(dim, sense));
                }
            }
            t
        })
        .collect();
    TaggedSentence::new(tokens, s.source.clone())
}

/// Full preprocessing chain for one pre-tagged line.
pub fn preprocess_line(
    line: &str,
    source: SourceId,
    lex: &Lexicon,
) -> Result<TaggedSentence, PreprocessError> {
    let parsed = parse_tagged(line, source)?;
    Ok(preprocess_sentence(&parsed, lex))
}

/// Preprocessing chain after tokenization.
pub fn preprocess_sentence(s: &TaggedSentence, lex: &Lexicon) -> TaggedSentence {
    annotate_special(&normalize_lexical(&singularize(s, lex), lex), lex)
}

/// Tags one raw-text line with the fallback tagger, then preprocesses it.
pub fn preprocess_raw_line(
    line: &str,
    source: SourceId,
    lex: &Lexicon,
) -> Result<TaggedSentence, PreprocessError> {
    let tagged = tag_raw(line, source.clone(), lex)?;
    Ok(preprocess_sentence(&tagged, lex))
}

/// Minimal lexicon-and-suffix tagger for `--raw` input. Closed-class words
/// and the gazetteer decide most tokens; suffix heuristics cover the rest.
pub fn tag_raw(
    line: &str,
    source: SourceId,
    lex: &Lexicon,
) -> Result<TaggedSentence, PreprocessError> {
    let words = split_raw(line);
    if words.is_empty() {
        return Err(PreprocessError::EmptyLine { source_id: source });
    }
    let lower: Vec<String> = words.iter().map(|w| w.to_lowercase()).collect();
    let mut tokens = Vec::with_capacity(words.len());
    for (i, word) in words.iter().enumerate() {
        let tag = closed_class_tag(&lower[i])
            .or_else(|| {
                lex.quantifier_variants
                    .contains_key(&lower[i])
                    .then_some(PennTag::Dt)
            })
            .or_else(|| {
                lex.number_words
                    .contains_key(&lower[i])
                    .then_some(PennTag::Cd)
            })
            .or_else(|| {
                lex.dimension_adjectives
                    .contains_key(&lower[i])
                    .then_some(PennTag::Jj)
            })
            .unwrap_or_else(|| suffix_tag(word, i, lex));
        tokens.push(Token::new(word.clone(), tag));
    }
    Ok(TaggedSentence::new(tokens, source))
}

fn split_raw(line: &str) -> Vec<String> {
    let mut words = Vec::new();
    for chunk in line.split_whitespace() {
        let mut rest = chunk;
        // Peel trailing sentence punctuation into separate tokens.
        let mut trailing = Vec::new();
        while let Some(last) = rest.chars().last() {
            if matches!(last, '.' | ',' | ':' | ';' | '?' | '!') && rest.chars().count() > 1 {
                trailing.push(last.to_string());
                rest = &rest[..rest.len() - last.len_utf8()];
            } else {
                break;
            }
        }
        if !rest.is_empty() {
            words.push(rest.to_string());
        }
        words.extend(trailing.into_iter().rev());
    }
    words
}

fn closed_class_tag(word: &str) -> Option<PennTag> {
    Some(match word {
        "a" | "an" | "the" | "some" | "all" | "every" | "each" | "any" | "no" => PennTag::Dt,
        "is" | "was" | "has" | "includes" | "include" | "seems" | "comes" | "belongs"
        | "amounts" | "happens" => PennTag::Vbz,
        "are" | "were" | "have" | "seem" => PennTag::Vbp,
        "be" | "become" => PennTag::Vb,
        "been" => PennTag::Vbn,
        "being" => PennTag::Vbg,
        "may" | "can" | "might" | "could" | "will" | "shall" | "must" => PennTag::Md,
        "and" | "or" | "but" | "either" | "neither" => PennTag::Cc,
        "of" | "in" | "on" | "at" | "for" | "with" | "under" | "like" | "as" | "than" => {
            PennTag::In
        }
        "to" => PennTag::To,
        "who" | "whom" => PennTag::Wp,
        "whose" => PennTag::WpDollar,
        "which" | "that" => PennTag::Wdt,
        "very" | "also" | "not" | "ago" | "never" | "always" | "quite" => PennTag::Rb,
        "more" | "less" => PennTag::Rbr,
        "," => PennTag::Comma,
        "." | "?" | "!" => PennTag::Period,
        ":" | ";" | "-" => PennTag::Colon,
        "'s" => PennTag::Pos,
        _ => return None,
    })
}

fn suffix_tag(word: &str, position: usize, lex: &Lexicon) -> PennTag {
    if word.chars().all(|c| c.is_ascii_digit()) {
        return PennTag::Cd;
    }
    if lex.ner_gazetteer.contains_key(word)
        || (position > 0 && word.chars().next().is_some_and(|c| c.is_uppercase()))
    {
        return PennTag::Nnp;
    }
    let lower = word.to_lowercase();
    if lower.ends_with("ly") {
        PennTag::Rb
    } else if lower.ends_with("ing") {
        PennTag::Vbg
    } else if lower.ends_with("er") && lower.len() > 4 && lex.dimension_adjectives.contains_key(&lower[..lower.len() - 2])
    {
        PennTag::Jjr
    } else if lower.ends_with("est") && lower.len() > 4 {
        PennTag::Jjs
    } else if lower.ends_with("ful")
        || lower.ends_with("ous")
        || lower.ends_with("ive")
        || lower.ends_with("able")
    {
        PennTag::Jj
    } else if singularize_word(word).is_some() && lower.ends_with('s') {
        PennTag::Nns
    } else {
        PennTag::Nn
    }
}
