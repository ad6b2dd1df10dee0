//! Tokenizer and block parser. Produces raw blocks with line numbers and
//! unresolved references; no group axioms are checked here.
//!
//! Every block starts with a header line whose first word is the kind. A
//! reference in a header is `inline` (the referenced block follows the
//! header, in reference order), `catalog:NAME`, or a path relative to the
//! containing file.

use std::collections::HashSet;

use super::{Kind, ParseError};
use crate::bound::max_order;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ref {
    Inline(Box<Block>),
    Catalog(String),
    Path(String),
}

/// A line of numbers together with its line number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nums {
    pub line: usize,
    pub values: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Subject,
    Morphism,
    TwoMorphism,
}

impl Role {
    pub fn keyword(self) -> &'static str {
        match self {
            Role::Subject => "subject",
            Role::Morphism => "morphism",
            Role::TwoMorphism => "2morphism",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    TwoGroups,
    XMods,
}

impl Side {
    pub fn keyword(self) -> &'static str {
        match self {
            Side::TwoGroups => "twogroup",
            Side::XMods => "xmod",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub line: usize,
    pub role: Role,
    pub name: String,
    pub target: Ref,
}

/// Images of the two boundary morphisms of a 2-morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Boundary {
    pub source: [Nums; 2],
    pub target: [Nums; 2],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    Group { order: usize, rows: Vec<Vec<usize>>, labels: Option<Vec<String>> },
    Hom { src: Ref, dst: Ref, images: Nums },
    Action { actor: Ref, space: Ref, rows: Vec<Nums> },
    TwoGroup { g0: Ref, g1: Ref, s: Nums, t: Nums, i: Nums, comp: Option<Vec<Nums>> },
    XMod { g: Ref, h: Ref, tau: Nums, alpha: Vec<Nums> },
    XModMorphism { src: Ref, dst: Ref, gamma: Nums, delta: Nums },
    XMod2Morphism { src: Ref, dst: Ref, boundary: Boundary, eta: Nums },
    TwoGroupMorphism { src: Ref, dst: Ref, f0: Nums, f1: Nums },
    TwoGroup2Morphism { src: Ref, dst: Ref, boundary: Boundary, theta: Nums },
    Section { images: Nums },
    Collection { side: Side, entries: Vec<Entry>, corrupt: Option<String> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub line: usize,
    pub body: Body,
}

impl Block {
    pub fn kind(&self) -> Kind {
        match &self.body {
            Body::Group { .. } => Kind::Group,
            Body::Hom { .. } => Kind::Hom,
            Body::Action { .. } => Kind::Action,
            Body::TwoGroup { .. } => Kind::TwoGroup,
            Body::XMod { .. } => Kind::XMod,
            Body::XModMorphism { .. } => Kind::XModMorphism,
            Body::XMod2Morphism { .. } => Kind::XMod2Morphism,
            Body::TwoGroupMorphism { .. } => Kind::TwoGroupMorphism,
            Body::TwoGroup2Morphism { .. } => Kind::TwoGroup2Morphism,
            Body::Section { .. } => Kind::Section,
            Body::Collection { .. } => Kind::Collection,
        }
    }
}

struct Line<'a> {
    no: usize,
    words: Vec<&'a str>,
}

impl Line<'_> {
    fn is_numeric(&self) -> bool {
        self.words[0].bytes().all(|b| b.is_ascii_digit())
    }
}

struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last: usize,
}

fn syntax(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, reason: reason.into() }
}

fn number(line: usize, word: &str) -> Result<usize, ParseError> {
    word.parse().map_err(|_| syntax(line, format!("expected a number, found `{word}`")))
}

fn numbers(line: usize, words: &[&str]) -> Result<Vec<usize>, ParseError> {
    words.iter().map(|w| number(line, w)).collect()
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let lines: Vec<Line<'a>> = text
            .lines()
            .enumerate()
            .filter_map(|(k, raw)| {
                let content = raw.split('#').next().unwrap_or("");
                let words: Vec<&str> = content.split_whitespace().collect();
                (!words.is_empty()).then_some(Line { no: k + 1, words })
            })
            .collect();
        let last = text.lines().count().max(1);
        Cursor { lines, pos: 0, last }
    }

    fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    /// Line number to blame when input ends early.
    fn here(&self) -> usize {
        self.peek().map_or(self.last, |l| l.no)
    }

    fn next(&mut self, what: &str) -> Result<&Line<'a>, ParseError> {
        let here = self.here();
        let line = self
            .lines
            .get(self.pos)
            .ok_or_else(|| syntax(here, format!("unexpected end of input, expected {what}")))?;
        self.pos += 1;
        Ok(line)
    }

    fn next_is_numeric(&self) -> bool {
        self.peek().is_some_and(Line::is_numeric)
    }

    /// `key n1 n2 ...`.
    fn keyed(&mut self, key: &str) -> Result<Nums, ParseError> {
        let line = self.next(&format!("`{key}` line"))?;
        if line.words[0] != key {
            return Err(syntax(line.no, format!("expected `{key}`, found `{}`", line.words[0])));
        }
        Ok(Nums { line: line.no, values: numbers(line.no, &line.words[1..])? })
    }

    /// A line consisting only of numbers.
    fn bare(&mut self, what: &str) -> Result<Nums, ParseError> {
        let line = self.next(what)?;
        if !line.is_numeric() {
            return Err(syntax(line.no, format!("expected {what}, found `{}`", line.words[0])));
        }
        Ok(Nums { line: line.no, values: numbers(line.no, &line.words)? })
    }

    /// Numeric lines up to the next keyword line or the end of input.
    fn rows(&mut self) -> Result<Vec<Nums>, ParseError> {
        let mut rows = Vec::new();
        while self.next_is_numeric() {
            rows.push(self.bare("a row")?);
        }
        Ok(rows)
    }
}

/// Parses a whole document: an optional `version v1` line, one block, and
/// nothing after it.
pub fn parse_document(text: &str) -> Result<Block, ParseError> {
    let mut cur = Cursor::new(text);
    if let Some(line) = cur.peek() {
        if line.words[0] == "version" {
            let (no, words) = (line.no, line.words.clone());
            if words.len() != 2 || words[1] != "v1" {
                return Err(syntax(no, format!("unsupported version `{}`", words[1..].join(" "))));
            }
            cur.pos += 1;
        }
    }
    let block = parse_block(&mut cur, 0)?;
    if let Some(line) = cur.peek() {
        return Err(syntax(line.no, format!("unexpected `{}` after the end of the block", line.words[0])));
    }
    Ok(block)
}

/// Inline blocks nest at most this deep (a collection holding a
/// 2-morphism holding a crossed module holding a group needs four).
const MAX_DEPTH: usize = 8;

fn expect_words((no, words): (usize, &[&str]), n: usize, usage: &str) -> Result<(), ParseError> {
    if words.len() != n {
        return Err(syntax(no, format!("expected `{usage}`")));
    }
    Ok(())
}

/// Resolves the reference words of a header. Each `inline` consumes the
/// next block, which must be of kind `kind`.
fn refs(cur: &mut Cursor<'_>, depth: usize, words: &[&str], kind: Kind) -> Result<Vec<Ref>, ParseError> {
    let mut out = Vec::with_capacity(words.len());
    for &word in words {
        let r = if word == "inline" {
            let here = cur.here();
            let block = parse_block(cur, depth + 1)?;
            if block.kind() != kind {
                return Err(syntax(
                    here,
                    format!("expected an inline `{}` block, found `{}`", kind.keyword(), block.kind().keyword()),
                ));
            }
            Ref::Inline(Box::new(block))
        } else if let Some(name) = word.strip_prefix("catalog:") {
            Ref::Catalog(name.to_string())
        } else {
            Ref::Path(word.to_string())
        };
        out.push(r);
    }
    Ok(out)
}

/// Header `<kind> <a> <b>` with both references resolved.
fn ref_pair(
    cur: &mut Cursor<'_>,
    depth: usize,
    header: (usize, &[&str]),
    usage: &str,
    kind: Kind,
) -> Result<(Ref, Ref), ParseError> {
    let (no, words) = header;
    if words.len() != 3 {
        return Err(syntax(no, format!("expected `{usage}`")));
    }
    let mut r = refs(cur, depth, &words[1..], kind)?.into_iter();
    Ok((r.next().expect("two references"), r.next().expect("two references")))
}

fn boundary(cur: &mut Cursor<'_>, keys: [&str; 4]) -> Result<Boundary, ParseError> {
    Ok(Boundary {
        source: [cur.keyed(keys[0])?, cur.keyed(keys[1])?],
        target: [cur.keyed(keys[2])?, cur.keyed(keys[3])?],
    })
}

fn parse_block(cur: &mut Cursor<'_>, depth: usize) -> Result<Block, ParseError> {
    let header = cur.next("a block header")?;
    let no = header.no;
    let words: Vec<&str> = header.words.clone();
    let header = (no, words.as_slice());
    if depth > MAX_DEPTH {
        return Err(syntax(no, "inline blocks nested too deeply"));
    }
    let keyword = header.1[0];
    let kind = Kind::from_keyword(keyword).ok_or_else(|| syntax(no, format!("unknown block kind `{keyword}`")))?;
    let body = match kind {
        Kind::Group => {
            expect_words(header, 2, "group <order>")?;
            let order = number(no, header.1[1])?;
            if order == 0 {
                return Err(syntax(no, "group order must be positive"));
            }
            if order > max_order() {
                return Err(ParseError::OrderBound { line: no, order, bound: max_order() });
            }
            let mut rows = Vec::with_capacity(order);
            for k in 0..order {
                if !cur.next_is_numeric() {
                    return Err(syntax(cur.here(), format!("expected {order} rows, found {k}")));
                }
                let row = cur.bare("a row")?;
                if row.values.len() != order {
                    return Err(syntax(row.line, format!("row has {} entries, expected {order}", row.values.len())));
                }
                rows.push(row.values);
            }
            let labels = match cur.peek() {
                Some(line) if line.words[0] == "labels" => {
                    let labels: Vec<String> = line.words[1..].iter().map(|w| w.to_string()).collect();
                    if labels.len() != order {
                        return Err(syntax(line.no, format!("expected {order} labels, found {}", labels.len())));
                    }
                    cur.pos += 1;
                    Some(labels)
                }
                _ => None,
            };
            Body::Group { order, rows, labels }
        }
        Kind::Hom => {
            let (src, dst) = ref_pair(cur, depth, header, "hom <src> <dst>", Kind::Group)?;
            Body::Hom { src, dst, images: cur.bare("a line of images")? }
        }
        Kind::Action => {
            let (actor, space) = ref_pair(cur, depth, header, "action <actor> <space>", Kind::Group)?;
            Body::Action { actor, space, rows: cur.rows()? }
        }
        Kind::TwoGroup => {
            let (g0, g1) = ref_pair(cur, depth, header, "twogroup <g0> <g1>", Kind::Group)?;
            let (s, t, i) = (cur.keyed("s")?, cur.keyed("t")?, cur.keyed("i")?);
            let comp = match cur.peek() {
                Some(line) if line.words[0] == "comp" => {
                    expect_words((line.no, &line.words), 1, "comp")?;
                    cur.pos += 1;
                    let triples = cur.rows()?;
                    if let Some(bad) = triples.iter().find(|r| r.values.len() != 3) {
                        return Err(syntax(bad.line, "expected a triple `a b c`"));
                    }
                    Some(triples)
                }
                _ => None,
            };
            Body::TwoGroup { g0, g1, s, t, i, comp }
        }
        Kind::XMod => {
            let (g, h) = ref_pair(cur, depth, header, "xmod <g> <h>", Kind::Group)?;
            let tau = cur.keyed("tau")?;
            let line = cur.next("`alpha` line")?;
            if line.words != ["alpha"] {
                return Err(syntax(line.no, "expected `alpha`"));
            }
            Body::XMod { g, h, tau, alpha: cur.rows()? }
        }
        Kind::XModMorphism => {
            let (src, dst) = ref_pair(cur, depth, header, "xmod-morphism <src> <dst>", Kind::XMod)?;
            Body::XModMorphism { src, dst, gamma: cur.keyed("gamma")?, delta: cur.keyed("delta")? }
        }
        Kind::XMod2Morphism => {
            let (src, dst) = ref_pair(cur, depth, header, "xmod-2morphism <src> <dst>", Kind::XMod)?;
            let boundary = boundary(cur, ["source-gamma", "source-delta", "target-gamma", "target-delta"])?;
            Body::XMod2Morphism { src, dst, boundary, eta: cur.keyed("eta")? }
        }
        Kind::TwoGroupMorphism => {
            let (src, dst) = ref_pair(cur, depth, header, "twogroup-morphism <src> <dst>", Kind::TwoGroup)?;
            Body::TwoGroupMorphism { src, dst, f0: cur.keyed("f0")?, f1: cur.keyed("f1")? }
        }
        Kind::TwoGroup2Morphism => {
            let (src, dst) = ref_pair(cur, depth, header, "twogroup-2morphism <src> <dst>", Kind::TwoGroup)?;
            let boundary = boundary(cur, ["source-f0", "source-f1", "target-f0", "target-f1"])?;
            Body::TwoGroup2Morphism { src, dst, boundary, theta: cur.keyed("theta")? }
        }
        Kind::Section => {
            expect_words(header, 1, "section")?;
            Body::Section { images: cur.bare("a line of images")? }
        }
        Kind::Collection => {
            expect_words(header, 2, "collection {twogroup|xmod}")?;
            let side = match header.1[1] {
                "twogroup" => Side::TwoGroups,
                "xmod" => Side::XMods,
                other => return Err(syntax(no, format!("unknown collection side `{other}`"))),
            };
            parse_collection(cur, depth, side)?
        }
    };
    Ok(Block { line: no, body })
}

fn parse_collection(cur: &mut Cursor<'_>, depth: usize, side: Side) -> Result<Body, ParseError> {
    let (object, morphism, two_morphism) = match side {
        Side::TwoGroups => (Kind::TwoGroup, Kind::TwoGroupMorphism, Kind::TwoGroup2Morphism),
        Side::XMods => (Kind::XMod, Kind::XModMorphism, Kind::XMod2Morphism),
    };
    let mut entries = Vec::new();
    let mut corrupt = None;
    let mut names = HashSet::new();
    while let Some(line) = cur.peek() {
        let no = line.no;
        let (role, kind) = match line.words[0] {
            "subject" => (Role::Subject, object),
            "morphism" => (Role::Morphism, morphism),
            "2morphism" => (Role::TwoMorphism, two_morphism),
            "corrupt" => {
                expect_words((line.no, &line.words), 2, "corrupt <name>")?;
                if corrupt.is_some() {
                    return Err(syntax(no, "more than one `corrupt` line"));
                }
                corrupt = Some(line.words[1].to_string());
                cur.pos += 1;
                continue;
            }
            _ => break,
        };
        expect_words((line.no, &line.words), 3, &format!("{} <name> <ref>", role.keyword()))?;
        let name = line.words[1].to_string();
        let word = line.words[2];
        cur.pos += 1;
        if !names.insert(name.clone()) {
            return Err(syntax(no, format!("duplicate name `{name}`")));
        }
        let target = refs(cur, depth, &[word], kind)?.pop().expect("one reference");
        entries.push(Entry { line: no, role, name, target });
    }
    Ok(Body::Collection { side, entries, corrupt })
}
