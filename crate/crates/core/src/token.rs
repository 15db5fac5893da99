//! Tokens and tagged sentences, the currency of the preprocessing and
//! template-fitting stages.

use crate::lexicon::{Dimension, IsaKind, Sense};
use crate::tags::PennTag;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Extra annotations attached to a token by the preprocessing stages.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Flag {
    /// Token was rewritten from a plural surface form.
    Plural,
    /// Token is a measurement unit for the given dimension.
    Unit(Dimension),
    /// Token is an adjective tied to a dimension with a min/max sense.
    DimAdj(Dimension, Sense),
    /// Token is a numeral; the parsed value.
    Numeral(u64),
    /// Token is (the collapsed form of) an IS-A lexeme of the given kind.
    Isa(IsaKind),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub lexeme: String,
    pub tag: PennTag,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<Flag>,
}

impl Token {
    pub fn new(lexeme: impl Into<String>, tag: PennTag) -> Self {
        Token {
            lexeme: lexeme.into(),
            tag,
            flags: Vec::new(),
        }
    }

    pub fn with_flag(mut self, flag: Flag) -> Self {
        self.set_flag(flag);
        self
    }

    /// Adds a flag, keeping the flag set deduplicated and ordered.
    pub fn set_flag(&mut self, flag: Flag) {
        if !self.flags.contains(&flag) {
            self.flags.push(flag);
            self.flags.sort();
        }
    }

    pub fn has_flag(&self, flag: &Flag) -> bool {
        self.flags.contains(flag)
    }

    pub fn is_plural(&self) -> bool {
        self.flags.contains(&Flag::Plural)
    }

    pub fn numeral(&self) -> Option<u64> {
        self.flags.iter().find_map(|f| match f {
            Flag::Numeral(n) => Some(*n),
            _ => None,
        })
    }

    pub fn unit_dimension(&self) -> Option<Dimension> {
        self.flags.iter().find_map(|f| match f {
            Flag::Unit(d) => Some(*d),
            _ => None,
        })
    }

    pub fn isa_kind(&self) -> Option<IsaKind> {
        self.flags.iter().find_map(|f| match f {
            Flag::Isa(k) => Some(*k),
            _ => None,
        })
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.lexeme, self.tag)
    }
}

/// Provenance of a sentence: source document plus 1-based line number.
#[derive(
    Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
pub struct SourceId {
    pub document: String,
    pub line: usize,
}

impl SourceId {
    pub fn new(document: impl Into<String>, line: usize) -> Self {
        SourceId {
            document: document.into(),
            line,
        }
    }
}

impl fmt::Display for SourceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.document, self.line)
    }
}

/// One sentence as an ordered token list. Sentence boundaries are decided
/// upstream: one sentence per input line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedSentence {
    pub tokens: Vec<Token>,
    pub source: SourceId,
}

impl TaggedSentence {
    pub fn new(tokens: Vec<Token>, source: SourceId) -> Self {
        debug_assert!(!tokens.is_empty(), "a tagged sentence is never empty");
        TaggedSentence { tokens, source }
    }

    /// Surface rendering in the `word_TAG` input format.
    pub fn render_tagged(&self) -> String {
        self.tokens
            .iter()
            .map(Token::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Plain-text rendering, one space between lexemes.
    pub fn render_text(&self) -> String {
        self.tokens
            .iter()
            .map(|t| t.lexeme.as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for TaggedSentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}
