//! OWL 2 functional-style serialization of the knowledge base, restricted to
//! the constructs expressible in SHOQ(D), plus the matching parser.
//!
//! One axiom per line under a fixed prefix block; axioms appear in canonical
//! (sorted) order so that equal knowledge bases serialize byte-identically.

use crate::dl::{
    Axiom, AxiomKind, ConceptExpr, DataRange, Datatype, KnowledgeBase, Literal, RoleKind,
};
use std::fmt::Write as _;
use thiserror::Error;

const PREFIX_BLOCK: &str = "Prefix(:=<urn:isadl:onto#>)\nPrefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\nPrefix(owl:=<http://www.w3.org/2002/07/owl#>)\n";

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at line {line}: expected {expected}, found `{found}`")]
pub struct ParseError {
    pub line: usize,
    pub expected: String,
    pub found: String,
}

/// Serializes the knowledge base; `parse(serialize(kb))` is the identity up
/// to canonical axiom ordering.
pub fn serialize(kb: &KnowledgeBase) -> String {
    let mut out = String::from(PREFIX_BLOCK);
    out.push_str("Ontology(<urn:isadl:onto>\n");
    for traced in kb.sorted_axioms() {
        render_axiom(&mut out, &traced.axiom);
        out.push('\n');
    }
    out.push_str(")\n");
    out
}

fn render_axiom(out: &mut String, axiom: &Axiom) {
    let name = match &axiom.kind {
        AxiomKind::SubClassOf(..) => "SubClassOf",
        AxiomKind::EquivalentClasses(..) => "EquivalentClasses",
        AxiomKind::SubRoleOf {
            kind: RoleKind::Abstract,
            ..
        } => "SubObjectPropertyOf",
        AxiomKind::SubRoleOf {
            kind: RoleKind::Concrete,
            ..
        } => "SubDataPropertyOf",
        AxiomKind::Transitive(..) => "TransitiveObjectProperty",
        AxiomKind::ClassAssertion(..) => "ClassAssertion",
        AxiomKind::RoleAssertion(..) => "ObjectPropertyAssertion",
        AxiomKind::DataAssertion(..) => "DataPropertyAssertion",
    };
    out.push_str(name);
    out.push('(');
    for note in &axiom.notes {
        write!(out, "Annotation(:note \"{}\") ", escape(note)).unwrap();
    }
    match &axiom.kind {
        AxiomKind::SubClassOf(l, r) | AxiomKind::EquivalentClasses(l, r) => {
            render_expr(out, l);
            out.push(' ');
            render_expr(out, r);
        }
        AxiomKind::SubRoleOf { sub, sup, .. } => {
            write!(out, ":{sub} :{sup}").unwrap();
        }
        AxiomKind::Transitive(r) => {
            write!(out, ":{r}").unwrap();
        }
        AxiomKind::ClassAssertion(c, o) => {
            render_expr(out, c);
            write!(out, " :{o}").unwrap();
        }
        AxiomKind::RoleAssertion(r, a, b) => {
            write!(out, ":{r} :{a} :{b}").unwrap();
        }
        AxiomKind::DataAssertion(r, a, v) => {
            write!(out, ":{r} :{a} ").unwrap();
            render_literal(out, v);
        }
    }
    out.push(')');
}

fn render_expr(out: &mut String, expr: &ConceptExpr) {
    match expr {
        ConceptExpr::Top => out.push_str("owl:Thing"),
        ConceptExpr::Bottom => out.push_str("owl:Nothing"),
        ConceptExpr::Atomic(l) => write!(out, ":{l}").unwrap(),
        ConceptExpr::Nominal(o) => write!(out, "ObjectOneOf(:{o})").unwrap(),
        ConceptExpr::And(ms) => {
            out.push_str("ObjectIntersectionOf(");
            render_list(out, ms);
            out.push(')');
        }
        ConceptExpr::Or(ms) => {
            out.push_str("ObjectUnionOf(");
            render_list(out, ms);
            out.push(')');
        }
        ConceptExpr::Not(c) => {
            out.push_str("ObjectComplementOf(");
            render_expr(out, c);
            out.push(')');
        }
        ConceptExpr::Exists(r, c) => {
            write!(out, "ObjectSomeValuesFrom(:{r} ").unwrap();
            render_expr(out, c);
            out.push(')');
        }
        ConceptExpr::ForAll(r, c) => {
            write!(out, "ObjectAllValuesFrom(:{r} ").unwrap();
            render_expr(out, c);
            out.push(')');
        }
        ConceptExpr::AtLeast(n, r, c) => {
            write!(out, "ObjectMinCardinality({n} :{r} ").unwrap();
            render_expr(out, c);
            out.push(')');
        }
        ConceptExpr::AtMost(n, r, c) => {
            write!(out, "ObjectMaxCardinality({n} :{r} ").unwrap();
            render_expr(out, c);
            out.push(')');
        }
        ConceptExpr::DataExists(r, DataRange::Value(v)) => {
            write!(out, "DataHasValue(:{r} ").unwrap();
            render_literal(out, v);
            out.push(')');
        }
        ConceptExpr::DataExists(r, DataRange::Type(d)) => {
            write!(out, "DataSomeValuesFrom(:{r} {})", d.xsd_name()).unwrap();
        }
        ConceptExpr::DataForAll(r, d) => {
            write!(out, "DataAllValuesFrom(:{r} {})", d.xsd_name()).unwrap();
        }
    }
}

fn render_list(out: &mut String, members: &[ConceptExpr]) {
    for (i, m) in members.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        render_expr(out, m);
    }
}

fn render_literal(out: &mut String, lit: &Literal) {
    write!(
        out,
        "\"{}\"^^{}",
        escape(&lit.lexical_form()),
        lit.datatype().xsd_name()
    )
    .unwrap();
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Open,
    Close,
    /// Bare symbol: axiom/constructor names, `:local` names, `xsd:integer`,
    /// `owl:Thing`, numbers.
    Sym(String),
    /// Quoted string, with the optional `^^datatype` suffix resolved.
    Lit(String, Option<String>),
}

struct Lexer<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            chars: text.chars().peekable(),
            line: 1,
        }
    }

    fn next_tok(&mut self) -> Result<Option<(usize, Tok)>, ParseError> {
        loop {
            match self.chars.peek() {
                None => return Ok(None),
                Some('\n') => {
                    self.line += 1;
                    self.chars.next();
                }
                Some(c) if c.is_whitespace() => {
                    self.chars.next();
                }
                Some('(') => {
                    self.chars.next();
                    return Ok(Some((self.line, Tok::Open)));
                }
                Some(')') => {
                    self.chars.next();
                    return Ok(Some((self.line, Tok::Close)));
                }
                Some('"') => {
                    self.chars.next();
                    let mut s = String::new();
                    loop {
                        match self.chars.next() {
                            Some('\\') => match self.chars.next() {
                                Some(c) => s.push(c),
                                None => {
                                    return Err(self.err("escaped character", "end of input"))
                                }
                            },
                            Some('"') => break,
                            Some('\n') => {
                                self.line += 1;
                                s.push('\n');
                            }
                            Some(c) => s.push(c),
                            None => return Err(self.err("closing quote", "end of input")),
                        }
                    }
                    let mut datatype = None;
                    if self.chars.peek() == Some(&'^') {
                        self.chars.next();
                        if self.chars.next() != Some('^') {
                            return Err(self.err("^^", "single ^"));
                        }
                        let mut d = String::new();
                        while let Some(&c) = self.chars.peek() {
                            if c.is_whitespace() || c == '(' || c == ')' {
                                break;
                            }
                            d.push(c);
                            self.chars.next();
                        }
                        datatype = Some(d);
                    }
                    return Ok(Some((self.line, Tok::Lit(s, datatype))));
                }
                Some(_) => {
                    let mut s = String::new();
                    while let Some(&c) = self.chars.peek() {
                        if c.is_whitespace() || c == '(' || c == ')' || c == '"' {
                            break;
                        }
                        s.push(c);
                        self.chars.next();
                    }
                    return Ok(Some((self.line, Tok::Sym(s))));
                }
            }
        }
    }

    fn err(&self, expected: &str, found: &str) -> ParseError {
        ParseError {
            line: self.line,
            expected: expected.to_string(),
            found: found.to_string(),
        }
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn line(&self) -> usize {
        self.peek()
            .map(|(l, _)| *l)
            .or_else(|| self.toks.last().map(|(l, _)| *l))
            .unwrap_or(1)
    }

    fn err(&self, expected: &str) -> ParseError {
        let found = match self.peek() {
            Some((_, Tok::Open)) => "(".to_string(),
            Some((_, Tok::Close)) => ")".to_string(),
            Some((_, Tok::Sym(s))) => s.clone(),
            Some((_, Tok::Lit(s, _))) => format!("\"{s}\""),
            None => "end of input".to_string(),
        };
        ParseError {
            line: self.line(),
            expected: expected.to_string(),
            found,
        }
    }

    fn expect_open(&mut self) -> Result<(), ParseError> {
        match self.next() {
            Some((_, Tok::Open)) => Ok(()),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err("("))
            }
        }
    }

    fn expect_close(&mut self) -> Result<(), ParseError> {
        match self.next() {
            Some((_, Tok::Close)) => Ok(()),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err(")"))
            }
        }
    }

    fn expect_sym(&mut self) -> Result<String, ParseError> {
        match self.next() {
            Some((_, Tok::Sym(s))) => Ok(s),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err("a name"))
            }
        }
    }

    /// `:local` → `local`.
    fn expect_local(&mut self) -> Result<String, ParseError> {
        let s = self.expect_sym()?;
        s.strip_prefix(':')
            .map(|x| x.to_string())
            .ok_or_else(|| ParseError {
                line: self.line(),
                expected: "a :name".to_string(),
                found: s,
            })
    }

    fn parse_literal(&mut self) -> Result<Literal, ParseError> {
        match self.next() {
            Some((line, Tok::Lit(s, datatype))) => match datatype.as_deref() {
                Some("xsd:integer") => {
                    s.parse::<i64>().map(Literal::Integer).map_err(|_| ParseError {
                        line,
                        expected: "an integer literal".to_string(),
                        found: s,
                    })
                }
                Some("xsd:decimal") => Ok(Literal::Decimal(s)),
                Some("xsd:dateTime") => Ok(Literal::DateTime(s)),
                Some("xsd:string") | None => Ok(Literal::Str(s)),
                Some(other) => Err(ParseError {
                    line,
                    expected: "a supported datatype".to_string(),
                    found: other.to_string(),
                }),
            },
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err("a literal"))
            }
        }
    }

    fn parse_datatype(&mut self) -> Result<Datatype, ParseError> {
        let s = self.expect_sym()?;
        match s.as_str() {
            "xsd:integer" => Ok(Datatype::Integer),
            "xsd:decimal" => Ok(Datatype::Decimal),
            "xsd:dateTime" => Ok(Datatype::DateTime),
            "xsd:string" => Ok(Datatype::Str),
            other => Err(ParseError {
                line: self.line(),
                expected: "a datatype name".to_string(),
                found: other.to_string(),
            }),
        }
    }

    fn parse_expr(&mut self) -> Result<ConceptExpr, ParseError> {
        let sym = self.expect_sym()?;
        match sym.as_str() {
            "owl:Thing" => Ok(ConceptExpr::Top),
            "owl:Nothing" => Ok(ConceptExpr::Bottom),
            "ObjectOneOf" => {
                self.expect_open()?;
                let o = self.expect_local()?;
                self.expect_close()?;
                Ok(ConceptExpr::Nominal(o))
            }
            "ObjectIntersectionOf" | "ObjectUnionOf" => {
                self.expect_open()?;
                let mut members = Vec::new();
                while !matches!(self.peek(), Some((_, Tok::Close)) | None) {
                    members.push(self.parse_expr()?);
                }
                self.expect_close()?;
                // Keep the parsed shape; canonicalization happens in add_axiom.
                if sym == "ObjectIntersectionOf" {
                    Ok(ConceptExpr::And(members))
                } else {
                    Ok(ConceptExpr::Or(members))
                }
            }
            "ObjectComplementOf" => {
                self.expect_open()?;
                let inner = self.parse_expr()?;
                self.expect_close()?;
                Ok(ConceptExpr::Not(Box::new(inner)))
            }
            "ObjectSomeValuesFrom" | "ObjectAllValuesFrom" => {
                self.expect_open()?;
                let role = self.expect_local()?;
                let filler = self.parse_expr()?;
                self.expect_close()?;
                if sym == "ObjectSomeValuesFrom" {
                    Ok(ConceptExpr::Exists(role, Box::new(filler)))
                } else {
                    Ok(ConceptExpr::ForAll(role, Box::new(filler)))
                }
            }
            "ObjectMinCardinality" | "ObjectMaxCardinality" => {
                self.expect_open()?;
                let n_sym = self.expect_sym()?;
                let n: u32 = n_sym.parse().map_err(|_| ParseError {
                    line: self.line(),
                    expected: "a cardinality".to_string(),
                    found: n_sym.clone(),
                })?;
                let role = self.expect_local()?;
                let filler = self.parse_expr()?;
                self.expect_close()?;
                if sym == "ObjectMinCardinality" {
                    Ok(ConceptExpr::AtLeast(n, role, Box::new(filler)))
                } else {
                    Ok(ConceptExpr::AtMost(n, role, Box::new(filler)))
                }
            }
            "DataHasValue" => {
                self.expect_open()?;
                let role = self.expect_local()?;
                let lit = self.parse_literal()?;
                self.expect_close()?;
                Ok(ConceptExpr::DataExists(role, DataRange::Value(lit)))
            }
            "DataSomeValuesFrom" => {
                self.expect_open()?;
                let role = self.expect_local()?;
                let d = self.parse_datatype()?;
                self.expect_close()?;
                Ok(ConceptExpr::DataExists(role, DataRange::Type(d)))
            }
            "DataAllValuesFrom" => {
                self.expect_open()?;
                let role = self.expect_local()?;
                let d = self.parse_datatype()?;
                self.expect_close()?;
                Ok(ConceptExpr::DataForAll(role, d))
            }
            local if local.starts_with(':') => Ok(ConceptExpr::Atomic(local[1..].to_string())),
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err("a concept expression"))
            }
        }
    }

    fn parse_axiom(&mut self, name: &str) -> Result<Axiom, ParseError> {
        self.expect_open()?;
        let mut notes = Vec::new();
        while matches!(self.peek(), Some((_, Tok::Sym(s))) if s == "Annotation") {
            self.next();
            self.expect_open()?;
            let prop = self.expect_sym()?;
            if prop != ":note" {
                return Err(ParseError {
                    line: self.line(),
                    expected: ":note".to_string(),
                    found: prop,
                });
            }
            match self.next() {
                Some((_, Tok::Lit(s, _))) => notes.push(s),
                _ => {
                    self.pos = self.pos.saturating_sub(1);
                    return Err(self.err("an annotation string"));
                }
            }
            self.expect_close()?;
        }
        let kind = match name {
            "SubClassOf" => {
                let l = self.parse_expr()?;
                let r = self.parse_expr()?;
                AxiomKind::SubClassOf(l, r)
            }
            "EquivalentClasses" => {
                let l = self.parse_expr()?;
                let r = self.parse_expr()?;
                AxiomKind::EquivalentClasses(l, r)
            }
            "SubObjectPropertyOf" => AxiomKind::SubRoleOf {
                sub: self.expect_local()?,
                sup: self.expect_local()?,
                kind: RoleKind::Abstract,
            },
            "SubDataPropertyOf" => AxiomKind::SubRoleOf {
                sub: self.expect_local()?,
                sup: self.expect_local()?,
                kind: RoleKind::Concrete,
            },
            "TransitiveObjectProperty" => AxiomKind::Transitive(self.expect_local()?),
            "ClassAssertion" => {
                let c = self.parse_expr()?;
                let o = self.expect_local()?;
                AxiomKind::ClassAssertion(c, o)
            }
            "ObjectPropertyAssertion" => AxiomKind::RoleAssertion(
                self.expect_local()?,
                self.expect_local()?,
                self.expect_local()?,
            ),
            "DataPropertyAssertion" => {
                let r = self.expect_local()?;
                let a = self.expect_local()?;
                let v = self.parse_literal()?;
                AxiomKind::DataAssertion(r, a, v)
            }
            other => {
                return Err(ParseError {
                    line: self.line(),
                    expected: "an axiom name".to_string(),
                    found: other.to_string(),
                })
            }
        };
        self.expect_close()?;
        Ok(Axiom { kind, notes })
    }
}

/// Parses a document produced by [`serialize`]. Prefix declarations are
/// checked for shape but their bindings are fixed.
pub fn parse(text: &str) -> Result<KnowledgeBase, ParseError> {
    let mut lexer = Lexer::new(text);
    let mut toks = Vec::new();
    while let Some(t) = lexer.next_tok()? {
        toks.push(t);
    }
    let mut p = Parser { toks, pos: 0 };
    // Prefix(...) declarations.
    while matches!(p.peek(), Some((_, Tok::Sym(s))) if s.starts_with("Prefix")) {
        let s = p.expect_sym()?;
        // The lexer splits `Prefix(:=<...>)` at the parens.
        if s == "Prefix" {
            p.expect_open()?;
            while !matches!(p.peek(), Some((_, Tok::Close)) | None) {
                p.next();
            }
            p.expect_close()?;
        }
    }
    match p.next() {
        Some((_, Tok::Sym(s))) if s == "Ontology" => {}
        _ => {
            p.pos = p.pos.saturating_sub(1);
            return Err(p.err("Ontology"));
        }
    }
    p.expect_open()?;
    // Optional ontology IRI.
    if matches!(p.peek(), Some((_, Tok::Sym(s))) if s.starts_with('<')) {
        p.next();
    }
    let mut kb = KnowledgeBase::new();
    loop {
        match p.peek() {
            Some((_, Tok::Close)) => {
                p.next();
                break;
            }
            Some((_, Tok::Sym(_))) => {
                let name = p.expect_sym()?;
                let axiom = p.parse_axiom(&name)?;
                kb.add_axiom(axiom, None).map_err(|e| ParseError {
                    line: p.line(),
                    expected: "a well-formed axiom".to_string(),
                    found: e.to_string(),
                })?;
            }
            _ => return Err(p.err("an axiom or )")),
        }
    }
    Ok(kb)
}
