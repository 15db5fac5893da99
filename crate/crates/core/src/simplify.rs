//! Sentence simplification: an ordered registry of token-level rewrite
//! patterns, plus the compound/clause splitter that distributes conjunctive
//! subject and object lists into simpler sentences.

use crate::lexicon::Lexicon;
use crate::tags::PennTag;
use crate::token::{TaggedSentence, Token};
use thiserror::Error;

/// Recursion guard for pattern rewriting.
pub const REWRITE_DEPTH_CAP: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimplifyError {
    #[error("{source_id}: rewrite depth {REWRITE_DEPTH_CAP} exceeded (rule table cycle?)", source_id = .0)]
    RewriteDepthExceeded(crate::token::SourceId),
    #[error("{source_id}: both subject and object clause positions are occupied", source_id = .0)]
    UnsaturatedSentence(crate::token::SourceId),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RuleError {
    #[error("rules:{line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("rule `{id}` references unbound capture `{capture}`")]
    UnboundCapture { id: String, capture: String },
    #[error("rule `{id}` matches its own production (self-loop)")]
    SelfLoop { id: String },
}

/// Kinds of capture slots a pattern can bind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaptureKind {
    /// One or more NN/NNP/JJ/VBG/CD tokens.
    NounPhrase,
    /// A single noun token.
    Noun,
    /// A numeral token.
    Numeral,
    /// A comparative adjective token.
    Comparative,
    /// A comma/CC separated list of noun phrases; final element only.
    List,
    /// Everything up to the end of the sentence; final element only.
    Rest,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum PatElem {
    Lit { options: Vec<String>, optional: bool },
    Capture { name: String, kind: CaptureKind },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum ProdTok {
    Lit(Token),
    Ref(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Production {
    foreach: Option<String>,
    template: Vec<ProdTok>,
}

/// One rewrite rule: a token-level pattern with capture slots and one or
/// more output templates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub id: String,
    pattern: Vec<PatElem>,
    productions: Vec<Production>,
}

#[derive(Debug, Clone, Default)]
struct Bindings {
    single: Vec<(String, Vec<Token>)>,
    lists: Vec<(String, Vec<Vec<Token>>)>,
}

impl Bindings {
    fn get(&self, name: &str) -> Option<&[Token]> {
        self.single
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, t)| t.as_slice())
    }

    fn get_list(&self, name: &str) -> Option<&[Vec<Token>]> {
        self.lists
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, t)| t.as_slice())
    }
}

fn np_eligible(tag: &PennTag) -> bool {
    matches!(
        tag,
        PennTag::Nn | PennTag::Nnp | PennTag::Jj | PennTag::Vbg | PennTag::Cd
    )
}

impl RewriteRule {
    /// Full-sentence match; returns capture bindings on success.
    fn try_match(&self, tokens: &[Token]) -> Option<Bindings> {
        let mut bindings = Bindings::default();
        if self.match_from(0, tokens, 0, &mut bindings) {
            Some(bindings)
        } else {
            None
        }
    }

    fn match_from(
        &self,
        elem_idx: usize,
        tokens: &[Token],
        pos: usize,
        bindings: &mut Bindings,
    ) -> bool {
        let Some(elem) = self.pattern.get(elem_idx) else {
            return pos == tokens.len();
        };
        match elem {
            PatElem::Lit { options, optional } => {
                if pos < tokens.len()
                    && options
                        .iter()
                        .any(|o| tokens[pos].lexeme.eq_ignore_ascii_case(o))
                    && self.match_from(elem_idx + 1, tokens, pos + 1, bindings)
                {
                    return true;
                }
                *optional && self.match_from(elem_idx + 1, tokens, pos, bindings)
            }
            PatElem::Capture { name, kind } => match kind {
                CaptureKind::NounPhrase => {
                    let mut end = pos;
                    while end < tokens.len() && np_eligible(&tokens[end].tag) {
                        end += 1;
                    }
                    // Longest span first, backtracking to shorter ones.
                    for cut in (pos + 1..=end).rev() {
                        bindings
                            .single
                            .push((name.clone(), tokens[pos..cut].to_vec()));
                        if self.match_from(elem_idx + 1, tokens, cut, bindings) {
                            return true;
                        }
                        bindings.single.pop();
                    }
                    false
                }
                CaptureKind::Noun => {
                    if pos < tokens.len() && tokens[pos].tag.is_noun() {
                        bindings
                            .single
                            .push((name.clone(), vec![tokens[pos].clone()]));
                        if self.match_from(elem_idx + 1, tokens, pos + 1, bindings) {
                            return true;
                        }
                        bindings.single.pop();
                    }
                    false
                }
                CaptureKind::Numeral => {
                    if pos < tokens.len() && tokens[pos].tag == PennTag::Cd {
                        bindings
                            .single
                            .push((name.clone(), vec![tokens[pos].clone()]));
                        if self.match_from(elem_idx + 1, tokens, pos + 1, bindings) {
                            return true;
                        }
                        bindings.single.pop();
                    }
                    false
                }
                CaptureKind::Comparative => {
                    if pos < tokens.len() && tokens[pos].tag == PennTag::Jjr {
                        bindings
                            .single
                            .push((name.clone(), vec![tokens[pos].clone()]));
                        if self.match_from(elem_idx + 1, tokens, pos + 1, bindings) {
                            return true;
                        }
                        bindings.single.pop();
                    }
                    false
                }
                CaptureKind::List => {
                    let Some((items, end)) = parse_item_list(tokens, pos) else {
                        return false;
                    };
                    if items.len() < 2 || end != tokens.len() {
                        return false;
                    }
                    bindings.lists.push((name.clone(), items));
                    if self.match_from(elem_idx + 1, tokens, end, bindings) {
                        return true;
                    }
                    bindings.lists.pop();
                    false
                }
                CaptureKind::Rest => {
                    if pos >= tokens.len() {
                        return false;
                    }
                    bindings
                        .single
                        .push((name.clone(), tokens[pos..].to_vec()));
                    if self.match_from(elem_idx + 1, tokens, tokens.len(), bindings) {
                        return true;
                    }
                    bindings.single.pop();
                    false
                }
            },
        }
    }

    fn instantiate(&self, bindings: &Bindings, source: &crate::token::SourceId) -> Vec<TaggedSentence> {
        let mut out = Vec::new();
        for production in &self.productions {
            let item_slots: Vec<Option<&[Token]>> = match &production.foreach {
                Some(list_name) => bindings
                    .get_list(list_name)
                    .map(|items| items.iter().map(|i| Some(i.as_slice())).collect())
                    .unwrap_or_default(),
                None => vec![None],
            };
            for item in item_slots {
                let mut tokens = Vec::new();
                for t in &production.template {
                    match t {
                        ProdTok::Lit(tok) => tokens.push(tok.clone()),
                        ProdTok::Ref(name) => {
                            if Some(name.as_str())
                                == production.foreach.as_deref()
                            {
                                tokens.extend(item.unwrap_or_default().iter().cloned());
                            } else if let Some(bound) = bindings.get(name) {
                                tokens.extend(bound.iter().cloned());
                            }
                        }
                    }
                }
                if !tokens.is_empty() {
                    out.push(TaggedSentence::new(tokens, source.clone()));
                }
            }
        }
        out
    }
}

/// Parses `item (sep item)*` where items are DT-prefixed noun-phrase runs
/// and separators are commas and/or CC tokens. Returns items and end index.
fn parse_item_list(tokens: &[Token], start: usize) -> Option<(Vec<Vec<Token>>, usize)> {
    fn one_item(tokens: &[Token], mut i: usize) -> Option<(Vec<Token>, usize)> {
        while i < tokens.len() && tokens[i].tag == PennTag::Dt {
            i += 1;
        }
        let begin = i;
        while i < tokens.len() && np_eligible(&tokens[i].tag) {
            i += 1;
        }
        (i > begin).then(|| (tokens[begin..i].to_vec(), i))
    }

    let (first, mut pos) = one_item(tokens, start)?;
    let mut items = vec![first];
    loop {
        let mut next = pos;
        let mut saw_sep = false;
        while next < tokens.len()
            && (tokens[next].tag == PennTag::Comma || tokens[next].tag == PennTag::Cc)
        {
            saw_sep = true;
            next += 1;
        }
        if !saw_sep {
            break;
        }
        match one_item(tokens, next) {
            Some((item, end)) => {
                items.push(item);
                pos = end;
            }
            None => break,
        }
    }
    Some((items, pos))
}

/// The ordered rule registry.
#[derive(Debug, Clone, Default)]
pub struct RuleRegistry {
    pub rules: Vec<RewriteRule>,
}

const DEFAULT_RULES: &str = include_str!("../data/rules.tsv");

impl RuleRegistry {
    /// The embedded default registry.
    pub fn embedded() -> Self {
        RuleRegistry::parse(DEFAULT_RULES).expect("embedded rules are well-formed")
    }

    pub fn load_file(path: &std::path::Path) -> Result<Self, RuleError> {
        let text = std::fs::read_to_string(path).map_err(|e| RuleError::Malformed {
            line: 0,
            reason: format!("cannot read {}: {e}", path.display()),
        })?;
        RuleRegistry::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, RuleError> {
        let mut rules = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = line.trim_end();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            if cols.len() != 3 {
                return Err(RuleError::Malformed {
                    line: line_no,
                    reason: "expected id<TAB>pattern<TAB>production(s)".to_string(),
                });
            }
            let rule = parse_rule(cols[0], cols[1], cols[2], line_no)?;
            rule.validate()?;
            rules.push(rule);
        }
        Ok(RuleRegistry { rules })
    }
}

fn parse_rule(id: &str, pattern: &str, prods: &str, line: usize) -> Result<RewriteRule, RuleError> {
    let mut elems = Vec::new();
    for raw in pattern.split_whitespace() {
        let (optional, raw) = match raw.strip_prefix('?') {
            Some(rest) => (true, rest),
            None => (false, raw),
        };
        if let Some(body) = raw.strip_prefix('<').and_then(|r| r.strip_suffix('>')) {
            let (name, kind) = body.split_once(':').ok_or_else(|| RuleError::Malformed {
                line,
                reason: format!("capture `{raw}` must be <Name:KIND>"),
            })?;
            let kind = match kind {
                "NP" => CaptureKind::NounPhrase,
                "N" => CaptureKind::Noun,
                "CD" => CaptureKind::Numeral,
                "JJR" => CaptureKind::Comparative,
                "LIST" => CaptureKind::List,
                "REST" => CaptureKind::Rest,
                other => {
                    return Err(RuleError::Malformed {
                        line,
                        reason: format!("unknown capture kind `{other}`"),
                    })
                }
            };
            elems.push(PatElem::Capture {
                name: name.to_string(),
                kind,
            });
        } else {
            let options = raw
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .map(|body| body.split('|').map(|s| s.to_lowercase()).collect())
                .unwrap_or_else(|| vec![raw.to_lowercase()]);
            elems.push(PatElem::Lit { options, optional });
        }
    }
    let mut productions = Vec::new();
    for prod in prods.split(" ; ") {
        let mut foreach = None;
        let mut rest = prod.trim();
        if let Some(after) = rest.strip_prefix('*') {
            let (name, tail) = after.split_once(':').ok_or_else(|| RuleError::Malformed {
                line,
                reason: "foreach production must be `*Name: ...`".to_string(),
            })?;
            foreach = Some(name.trim().to_string());
            rest = tail.trim();
        }
        let mut template = Vec::new();
        for unit in rest.split_whitespace() {
            if let Some(name) = unit.strip_prefix('$') {
                template.push(ProdTok::Ref(name.to_string()));
            } else {
                let (lexeme, tag) = unit.rsplit_once('_').ok_or_else(|| RuleError::Malformed {
                    line,
                    reason: format!("production literal `{unit}` must be word_TAG"),
                })?;
                template.push(ProdTok::Lit(Token::new(
                    lexeme,
                    tag.parse().expect("tag parsing is total"),
                )));
            }
        }
        productions.push(Production { foreach, template });
    }
    Ok(RewriteRule {
        id: id.to_string(),
        pattern: elems,
        productions,
    })
}

impl RewriteRule {
    fn validate(&self) -> Result<(), RuleError> {
        // List/Rest captures may only sit at the end of the pattern.
        for (i, elem) in self.pattern.iter().enumerate() {
            if let PatElem::Capture { name, kind } = elem {
                if matches!(kind, CaptureKind::List | CaptureKind::Rest)
                    && i + 1 != self.pattern.len()
                {
                    return Err(RuleError::Malformed {
                        line: 0,
                        reason: format!(
                            "rule `{}`: capture `{name}` must be the final pattern element",
                            self.id
                        ),
                    });
                }
            }
        }
        // Every referenced capture must be bound by the pattern.
        let bound: Vec<&str> = self
            .pattern
            .iter()
            .filter_map(|e| match e {
                PatElem::Capture { name, .. } => Some(name.as_str()),
                _ => None,
            })
            .collect();
        for production in &self.productions {
            for t in &production.template {
                if let ProdTok::Ref(name) = t {
                    if !bound.contains(&name.as_str()) {
                        return Err(RuleError::UnboundCapture {
                            id: self.id.clone(),
                            capture: name.clone(),
                        });
                    }
                }
            }
            if let Some(name) = &production.foreach {
                if !bound.contains(&name.as_str()) {
                    return Err(RuleError::UnboundCapture {
                        id: self.id.clone(),
                        capture: name.clone(),
                    });
                }
            }
        }
        // A production must never match the rule's own pattern.
        let dummy = self.dummy_bindings();
        let source = crate::token::SourceId::new("selfcheck", 0);
        for produced in self.instantiate(&dummy, &source) {
            if self.try_match(&produced.tokens).is_some() {
                return Err(RuleError::SelfLoop {
                    id: self.id.clone(),
                });
            }
        }
        Ok(())
    }

    fn dummy_bindings(&self) -> Bindings {
        let mut bindings = Bindings::default();
        for elem in &self.pattern {
            if let PatElem::Capture { name, kind } = elem {
                let token = match kind {
                    CaptureKind::Numeral => Token::new("1", PennTag::Cd),
                    CaptureKind::Comparative => Token::new("xer", PennTag::Jjr),
                    _ => Token::new("x", PennTag::Nn),
                };
                match kind {
                    CaptureKind::List => bindings
                        .lists
                        .push((name.clone(), vec![vec![token.clone()], vec![token]])),
                    _ => bindings.single.push((name.clone(), vec![token])),
                }
            }
        }
        bindings
    }
}

/// Applies the first matching rule and recursively re-simplifies its
/// productions; a sentence no rule matches is returned as a singleton.
pub fn apply_patterns(
    s: &TaggedSentence,
    rules: &RuleRegistry,
) -> Result<Vec<TaggedSentence>, SimplifyError> {
    apply_patterns_depth(s, rules, 0)
}

fn apply_patterns_depth(
    s: &TaggedSentence,
    rules: &RuleRegistry,
    depth: usize,
) -> Result<Vec<TaggedSentence>, SimplifyError> {
    if depth >= REWRITE_DEPTH_CAP {
        return Err(SimplifyError::RewriteDepthExceeded(s.source.clone()));
    }
    for rule in &rules.rules {
        if let Some(bindings) = rule.try_match(&s.tokens) {
            let mut out = Vec::new();
            for produced in rule.instantiate(&bindings, &s.source) {
                out.extend(apply_patterns_depth(&produced, rules, depth + 1)?);
            }
            return Ok(out);
        }
    }
    Ok(vec![s.clone()])
}

/// Entity list parsed out of a subject/object span.
#[derive(Debug, Clone)]
struct SpanList {
    /// Leading quantifier/determiner tokens shared by every item.
    prefix: Vec<Token>,
    items: Vec<Vec<Token>>,
    /// True for "either … or …" lists, which are kept as one unit.
    disjunctive: bool,
    /// The raw span, used when the list must not be distributed.
    raw: Vec<Token>,
}

fn parse_span(tokens: &[Token]) -> SpanList {
    let raw = tokens.to_vec();
    let disjunctive = tokens
        .first()
        .is_some_and(|t| t.lexeme.eq_ignore_ascii_case("either"));
    let mut i = 0;
    let mut prefix = Vec::new();
    while i < tokens.len() && tokens[i].tag == PennTag::Dt {
        prefix.push(tokens[i].clone());
        i += 1;
    }
    let mut items: Vec<Vec<Token>> = Vec::new();
    let mut current: Vec<Token> = Vec::new();
    for t in &tokens[i..] {
        match t.tag {
            PennTag::Comma | PennTag::Cc => {
                if !current.is_empty() {
                    items.push(std::mem::take(&mut current));
                }
            }
            _ => current.push(t.clone()),
        }
    }
    if !current.is_empty() {
        items.push(current);
    }
    if items.is_empty() {
        items.push(Vec::new());
    }
    SpanList {
        prefix,
        items,
        disjunctive,
        raw,
    }
}

/// When a conjunction list shares a trailing plural head ("student body and
/// Greek-house members"), the head distributes over the earlier items.
fn distribute_shared_head(items: &mut [Vec<Token>]) {
    if items.len() < 2 {
        return;
    }
    let last = items.last().expect("len >= 2");
    if last.len() < 2 {
        return;
    }
    let head = last.last().expect("non-empty item").clone();
    if !(head.tag.is_noun() && head.is_plural()) {
        return;
    }
    let share = items[..items.len() - 1]
        .iter()
        .all(|item| item.last().is_some_and(|t| !(t.tag.is_noun() && t.is_plural())));
    if !share {
        return;
    }
    let n = items.len();
    for item in &mut items[..n - 1] {
        item.push(head.clone());
    }
}

/// Locates the clause segment `, <opener> … ,` following the subject, if
/// present. Returns (subject end, clause tokens minus commas, rest start).
fn find_clause(tokens: &[Token], lex: &Lexicon) -> Option<(usize, Vec<Token>, usize)> {
    let first_comma = tokens.iter().position(|t| t.tag == PennTag::Comma)?;
    let second_comma = tokens[first_comma + 1..]
        .iter()
        .position(|t| t.tag == PennTag::Comma)
        .map(|p| p + first_comma + 1)?;
    let inner = &tokens[first_comma + 1..second_comma];
    let opener = inner.first()?;
    let is_clause_token = matches!(
        opener.tag,
        PennTag::Wp | PennTag::WpDollar | PennTag::Wdt
    );
    let is_null_clause = lex.match_isa_tokens(inner, 0).is_some();
    if !is_clause_token && !is_null_clause {
        return None;
    }
    let clause = if is_clause_token {
        inner[1..].to_vec()
    } else {
        inner.to_vec()
    };
    Some((first_comma, clause, second_comma + 1))
}

/// Splits compound and clausal sentences into simpler ones: the clause
/// becomes its own sentence, conjunctive subject/object lists distribute
/// into a cross-product (subject-major order), and "either … or" lists are
/// preserved whole. Output is deduplicated, preserving first occurrence.
pub fn split_compound(
    s: &TaggedSentence,
    lex: &Lexicon,
) -> Result<Vec<TaggedSentence>, SimplifyError> {
    let has_isa = (0..s.tokens.len()).any(|i| lex.match_isa_tokens(&s.tokens, i).is_some());
    if !has_isa {
        return Ok(vec![s.clone()]);
    }

    // Clause extraction first: subject + clause body, subject + remainder.
    let (subject_span, pieces): (Vec<Token>, Vec<Vec<Token>>) =
        match find_clause(&s.tokens, lex) {
            Some((subj_end, clause, rest_start)) => {
                let second = find_clause(&s.tokens[rest_start..], lex);
                if second.is_some() {
                    return Err(SimplifyError::UnsaturatedSentence(s.source.clone()));
                }
                (
                    s.tokens[..subj_end].to_vec(),
                    vec![clause, s.tokens[rest_start..].to_vec()],
                )
            }
            None => {
                // Subject span ends at the first IS-A lexeme.
                let isa_at =
                    (0..s.tokens.len()).find(|&i| lex.match_isa_tokens(&s.tokens, i).is_some());
                match isa_at {
                    Some(i) => (s.tokens[..i].to_vec(), vec![s.tokens[i..].to_vec()]),
                    None => return Ok(vec![s.clone()]),
                }
            }
        };

    let subject = parse_span(&subject_span);
    let needs_split = (!subject.disjunctive && subject.items.len() > 1)
        || pieces.len() > 1
        || pieces.iter().any(|piece| piece_needs_split(piece, lex));
    if !needs_split {
        return Ok(vec![s.clone()]);
    }

    let subject_units: Vec<Vec<Token>> = if subject.disjunctive {
        vec![subject.raw.clone()]
    } else {
        subject
            .items
            .iter()
            .map(|item| {
                let mut unit = subject.prefix.clone();
                unit.extend(item.iter().cloned());
                unit
            })
            .collect()
    };

    let mut out: Vec<TaggedSentence> = Vec::new();
    for subject_unit in &subject_units {
        for piece in &pieces {
            for object_unit in split_piece(piece, lex) {
                let mut tokens = subject_unit.clone();
                tokens.extend(object_unit);
                let sentence = TaggedSentence::new(tokens, s.source.clone());
                if !out.contains(&sentence) {
                    out.push(sentence);
                }
            }
        }
    }
    Ok(out)
}

fn piece_needs_split(piece: &[Token], lex: &Lexicon) -> bool {
    let Some((isa_at, isa_len)) =
        (0..piece.len()).find_map(|i| lex.match_isa_tokens(piece, i).map(|(len, _)| (i, len)))
    else {
        return false;
    };
    let object = parse_span(&piece[isa_at + isa_len..]);
    !object.disjunctive && object.items.len() > 1
}

/// Splits one `IS-A object-list` piece into `IS-A object` units.
fn split_piece(piece: &[Token], lex: &Lexicon) -> Vec<Vec<Token>> {
    let Some((isa_at, isa_len)) =
        (0..piece.len()).find_map(|i| lex.match_isa_tokens(piece, i).map(|(len, _)| (i, len)))
    else {
        return vec![piece.to_vec()];
    };
    let isa_tokens = &piece[isa_at..isa_at + isa_len];
    let object = parse_span(&piece[isa_at + isa_len..]);
    if object.disjunctive || object.items.len() < 2 {
        let mut unit = piece[..isa_at].to_vec();
        unit.extend(isa_tokens.iter().cloned());
        unit.extend(object.raw.iter().cloned());
        return vec![unit];
    }
    let mut items = object.items.clone();
    distribute_shared_head(&mut items);
    items
        .into_iter()
        .map(|item| {
            let mut unit = piece[..isa_at].to_vec();
            unit.extend(isa_tokens.iter().cloned());
            unit.extend(object.prefix.iter().cloned());
            unit.extend(item);
            unit
        })
        .collect()
}

/// Full simplification: drop sentence-final punctuation, apply pattern
/// rules to a fixpoint, then split compounds. Deterministic for identical
/// inputs.
pub fn simplify(
    s: &TaggedSentence,
    lex: &Lexicon,
    rules: &RuleRegistry,
) -> Result<Vec<TaggedSentence>, SimplifyError> {
    let mut tokens = s.tokens.clone();
    while tokens
        .last()
        .is_some_and(|t| t.tag == PennTag::Period)
    {
        tokens.pop();
    }
    if tokens.is_empty() {
        return Ok(Vec::new());
    }
    let trimmed = TaggedSentence::new(tokens, s.source.clone());
    let mut out = Vec::new();
    for rewritten in apply_patterns(&trimmed, rules)? {
        for split in split_compound(&rewritten, lex)? {
            if !out.contains(&split) {
                out.push(split);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::preprocess::{parse_tagged, preprocess_sentence};
    use crate::token::SourceId;

    fn prep(line: &str) -> TaggedSentence {
        let lex = Lexicon::embedded();
        let s = parse_tagged(line, SourceId::new("test", 1)).unwrap();
        preprocess_sentence(&s, &lex)
    }

    fn run(line: &str) -> Vec<String> {
        let lex = Lexicon::embedded();
        let rules = RuleRegistry::embedded();
        simplify(&prep(line), &lex, &rules)
            .unwrap()
            .iter()
            .map(|s| s.render_text())
            .collect()
    }

    #[test]
    fn fixed_point_on_simple_sentence() {
        let out = run("John_NNP is_VBZ a_DT student_NN");
        assert_eq!(out, vec!["John is a student"]);
    }

    #[test]
    fn category_of_swaps_subject_and_object() {
        // Token case is preserved through the rewrite; labels normalize it
        // downstream.
        let out = run("Fruit_NN is_VBZ the_DT category_NN of_IN apple_NN");
        assert_eq!(out, vec!["apple is a Fruit"]);
    }

    #[test]
    fn compound_with_clause_yields_six_simple_sentences() {
        let out = run(
            "John_NNP and_CC Joe_NNP ,_, who_WP are_VBP intelligent_JJ students_NNS ,_, \
             are_VBP student_NN body_NN and_CC Greek-house_NN members_NNS",
        );
        assert_eq!(
            out,
            vec![
                "John is intelligent student",
                "John is student body member",
                "John is Greek-house member",
                "Joe is intelligent student",
                "Joe is student body member",
                "Joe is Greek-house member",
            ]
        );
    }

    #[test]
    fn either_or_keeps_compound_subjects() {
        let out = run(
            "Either_CC John_NNP or_CC Joe_NNP ,_, who_WP is_VBZ a_DT good_JJ student_NN ,_, \
             is_VBZ a_DT student_NN body_NN member_NN",
        );
        assert_eq!(
            out,
            vec![
                "Either John or Joe is a good student",
                "Either John or Joe is a student body member",
            ]
        );
    }

    #[test]
    fn no_rule_match_returns_singleton() {
        let out = run("The_DT dog_NN is_VBZ very_RB clever_JJ");
        assert_eq!(out, vec!["The dog is very clever"]);
    }

    #[test]
    fn self_loop_rule_is_rejected_at_load() {
        let err = RuleRegistry::parse("bad\t<A:NP> is <B:NP>\t$A is_VBZ $B\n").unwrap_err();
        assert!(matches!(err, RuleError::SelfLoop { .. }));
    }

    #[test]
    fn unbound_capture_is_rejected() {
        let err =
            RuleRegistry::parse("bad\t<A:NP> is nice\t$A is_VBZ $C\n").unwrap_err();
        assert!(matches!(err, RuleError::UnboundCapture { .. }));
    }
}
