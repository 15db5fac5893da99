//! Penn Treebank part-of-speech tags.
//!
//! Only the tags that can legally occupy a template cell are modeled as
//! variants; anything else is preserved verbatim in [`PennTag::Other`] and
//! marks its token ineligible for template cells.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum PennTag {
    /// Determiner
    Dt,
    /// Common noun, singular
    Nn,
    /// Common noun, plural
    Nns,
    /// Proper noun, singular
    Nnp,
    /// Proper noun, plural
    Nnps,
    /// Adjective
    Jj,
    /// Comparative adjective
    Jjr,
    /// Superlative adjective
    Jjs,
    /// Adverb
    Rb,
    /// Comparative adverb
    Rbr,
    /// Verb, 3rd-person singular present
    Vbz,
    /// Verb, non-3rd-person present
    Vbp,
    /// Verb, past tense
    Vbd,
    /// Gerund
    Vbg,
    /// Verb, base form
    Vb,
    /// Verb, past participle
    Vbn,
    /// Cardinal number
    Cd,
    /// Coordinating conjunction
    Cc,
    /// Preposition or subordinating conjunction
    In,
    /// Modal
    Md,
    /// Possessive marker
    Pos,
    /// Wh-pronoun (who, whom)
    Wp,
    /// Possessive wh-pronoun (whose)
    WpDollar,
    /// Wh-determiner (which, that)
    Wdt,
    /// "to"
    To,
    /// Comma
    Comma,
    /// Sentence-final punctuation
    Period,
    /// Colon, dash
    Colon,
    /// Any tag outside the closed set above
    Other(String),
}

impl PennTag {
    /// True for punctuation tokens, which never occupy a template cell and
    /// are skipped when reconstructing a fitted sentence.
    pub fn is_punctuation(&self) -> bool {
        matches!(self, PennTag::Comma | PennTag::Period | PennTag::Colon)
    }

    /// Noun-class tags that can head a subject or object cell.
    pub fn is_noun(&self) -> bool {
        matches!(
            self,
            PennTag::Nn | PennTag::Nns | PennTag::Nnp | PennTag::Nnps
        )
    }

    pub fn is_proper_noun(&self) -> bool {
        matches!(self, PennTag::Nnp | PennTag::Nnps)
    }

    /// Tags admissible in a modifier cell: NN, JJ, CD, RB, VBG.
    pub fn cell_modifier(&self) -> bool {
        matches!(
            self,
            PennTag::Nn | PennTag::Nns | PennTag::Jj | PennTag::Cd | PennTag::Rb | PennTag::Vbg
        )
    }

    /// Tags admissible in a subject or object cell: NN, NNP, JJ, RB, VBG.
    pub fn cell_entity(&self) -> bool {
        matches!(
            self,
            PennTag::Nn
                | PennTag::Nns
                | PennTag::Nnp
                | PennTag::Nnps
                | PennTag::Jj
                | PennTag::Rb
                | PennTag::Vbg
        )
    }

    pub fn as_str(&self) -> &str {
        match self {
            PennTag::Dt => "DT",
            PennTag::Nn => "NN",
            PennTag::Nns => "NNS",
            PennTag::Nnp => "NNP",
            PennTag::Nnps => "NNPS",
            PennTag::Jj => "JJ",
            PennTag::Jjr => "JJR",
            PennTag::Jjs => "JJS",
            PennTag::Rb => "RB",
            PennTag::Rbr => "RBR",
            PennTag::Vbz => "VBZ",
            PennTag::Vbp => "VBP",
            PennTag::Vbd => "VBD",
            PennTag::Vbg => "VBG",
            PennTag::Vb => "VB",
            PennTag::Vbn => "VBN",
            PennTag::Cd => "CD",
            PennTag::Cc => "CC",
            PennTag::In => "IN",
            PennTag::Md => "MD",
            PennTag::Pos => "POS",
            PennTag::Wp => "WP",
            PennTag::WpDollar => "WP$",
            PennTag::Wdt => "WDT",
            PennTag::To => "TO",
            PennTag::Comma => ",",
            PennTag::Period => ".",
            PennTag::Colon => ":",
            PennTag::Other(s) => s,
        }
    }
}

impl FromStr for PennTag {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "DT" | "PDT" => PennTag::Dt,
            "NN" => PennTag::Nn,
            "NNS" => PennTag::Nns,
            "NNP" => PennTag::Nnp,
            "NNPS" => PennTag::Nnps,
            "JJ" => PennTag::Jj,
            "JJR" => PennTag::Jjr,
            "JJS" => PennTag::Jjs,
            "RB" => PennTag::Rb,
            "RBR" => PennTag::Rbr,
            "VBZ" => PennTag::Vbz,
            "VBP" => PennTag::Vbp,
            "VBD" => PennTag::Vbd,
            "VBG" => PennTag::Vbg,
            "VB" => PennTag::Vb,
            "VBN" => PennTag::Vbn,
            "CD" => PennTag::Cd,
            "CC" => PennTag::Cc,
            "IN" => PennTag::In,
            "MD" => PennTag::Md,
            "POS" => PennTag::Pos,
            "WP" => PennTag::Wp,
            "WP$" => PennTag::WpDollar,
            "WDT" => PennTag::Wdt,
            "TO" => PennTag::To,
            "," => PennTag::Comma,
            "." => PennTag::Period,
            ":" => PennTag::Colon,
            other => PennTag::Other(other.to_string()),
        })
    }
}

impl fmt::Display for PennTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
