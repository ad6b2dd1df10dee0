//! Line-oriented text formats for every structure in the crate.
//!
//! A document is an optional `version v1` line followed by one block.
//! Blank lines and everything after `#` are ignored. Block layouts:
//!
//! ```text
//! group <n>                     n rows of n entries, optional `labels ...`
//! hom <src> <dst>               one line of images
//! action <actor> <space>        one row per actor element
//! twogroup <g0> <g1>            `s ...`, `t ...`, `i ...`, optional `comp` + triples `a b c`
//! xmod <g> <h>                  `tau ...`, `alpha` + one row per element of g
//! xmod-morphism <src> <dst>     `gamma ...`, `delta ...`
//! xmod-2morphism <src> <dst>    `source-gamma`, `source-delta`, `target-gamma`, `target-delta`, `eta`
//! twogroup-morphism <src> <dst> `f0 ...`, `f1 ...`
//! twogroup-2morphism <src> <dst> `source-f0`, `source-f1`, `target-f0`, `target-f1`, `theta`
//! section                       one line of images
//! collection {twogroup|xmod}    `subject|morphism|2morphism <name> <ref>` lines, optional `corrupt <name>`
//! ```
//!
//! A reference is `inline` (the block follows the header), `catalog:NAME`
//! for a catalog group, or a path relative to the referring file. A twogroup
//! without `comp` gets the derived composition. Group orders above
//! [`crate::bound::max_order`] are rejected before any table is allocated.

mod load;
mod syntax;
mod write;

use std::path::Path;
use std::sync::Arc;

use thiserror::Error;

use crate::collection::{TwoGroupCollection, XModCollection};
use crate::crossed_module::{CrossedModule, XMod2Morphism, XModMorphism};
use crate::group::{Elem, FiniteGroup, GroupAction, GroupHom};
use crate::report::{CheckLine, Report};
use crate::two_group::{StrictTwoGroup, TwoGroupMorphism, TwoGroupTwoMorphism};

pub use load::Loader;
pub use syntax::{parse_document, Block, Body, Boundary, Entry, Nums, Ref, Role, Side};
pub use write::to_text;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("line {line}: group order {order} exceeds the bound {bound}")]
    OrderBound { line: usize, order: usize, bound: usize },
    #[error("unresolved reference `{0}`")]
    UnresolvedReference(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("in {path}: {inner}")]
    File { path: String, inner: Box<ParseError> },
}

/// Loading either fails to parse, or parses into something that violates
/// an axiom (reported as the failing check, prefixed by the role path of
/// the offending part, e.g. `g1/associativity`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LoadError {
    Parse(ParseError),
    Invalid(CheckLine),
}

impl From<ParseError> for LoadError {
    fn from(e: ParseError) -> Self {
        LoadError::Parse(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Group,
    Hom,
    Action,
    TwoGroup,
    XMod,
    XModMorphism,
    XMod2Morphism,
    TwoGroupMorphism,
    TwoGroup2Morphism,
    Section,
    Collection,
}

impl Kind {
    pub const ALL: [Kind; 11] = [
        Kind::Group,
        Kind::Hom,
        Kind::Action,
        Kind::TwoGroup,
        Kind::XMod,
        Kind::XModMorphism,
        Kind::XMod2Morphism,
        Kind::TwoGroupMorphism,
        Kind::TwoGroup2Morphism,
        Kind::Section,
        Kind::Collection,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Group => "group",
            Kind::Hom => "hom",
            Kind::Action => "action",
            Kind::TwoGroup => "twogroup",
            Kind::XMod => "xmod",
            Kind::XModMorphism => "xmod-morphism",
            Kind::XMod2Morphism => "xmod-2morphism",
            Kind::TwoGroupMorphism => "twogroup-morphism",
            Kind::TwoGroup2Morphism => "twogroup-2morphism",
            Kind::Section => "section",
            Kind::Collection => "collection",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.keyword() == word)
    }
}

/// A loaded, validated structure.
#[derive(Clone, Debug)]
pub enum Structure {
    Group(Arc<FiniteGroup>),
    Hom(GroupHom),
    Action(GroupAction),
    TwoGroup(Arc<StrictTwoGroup>),
    XMod(Arc<CrossedModule>),
    XModMorphism(XModMorphism),
    XMod2Morphism(XMod2Morphism),
    TwoGroupMorphism(TwoGroupMorphism),
    TwoGroup2Morphism(TwoGroupTwoMorphism),
    Section(Vec<Elem>),
    TwoGroupCollection { collection: TwoGroupCollection, corrupt: Option<String> },
    XModCollection { collection: XModCollection, corrupt: Option<String> },
}

impl Structure {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::Group(_) => Kind::Group,
            Structure::Hom(_) => Kind::Hom,
            Structure::Action(_) => Kind::Action,
            Structure::TwoGroup(_) => Kind::TwoGroup,
            Structure::XMod(_) => Kind::XMod,
            Structure::XModMorphism(_) => Kind::XModMorphism,
            Structure::XMod2Morphism(_) => Kind::XMod2Morphism,
            Structure::TwoGroupMorphism(_) => Kind::TwoGroupMorphism,
            Structure::TwoGroup2Morphism(_) => Kind::TwoGroup2Morphism,
            Structure::Section(_) => Kind::Section,
            Structure::TwoGroupCollection { .. } | Structure::XModCollection { .. } => Kind::Collection,
        }
    }
}

/// Parses and validates text. File references resolve against `base`;
/// without a base they are unresolved.
pub fn parse_str(text: &str, base: Option<&Path>) -> Result<Structure, LoadError> {
    let block = parse_document(text)?;
    Loader::new(base).build(&block)
}

/// Parses and validates a file.
pub fn load_path(path: &Path) -> Result<Structure, LoadError> {
    Loader::new(path.parent()).file(path)
}

/// The kind of the document and the full check report of its top-level
/// structure. Invalid referenced parts yield a one-line report naming the
/// part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checked {
    pub kind: Kind,
    pub report: Report,
}

pub fn check_str(text: &str, base: Option<&Path>) -> Result<Checked, ParseError> {
    let block = parse_document(text)?;
    Loader::new(base).check(&block)
}

pub fn check_path(path: &Path) -> Result<Checked, ParseError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ParseError::Io { path: path.display().to_string(), message: e.to_string() })?;
    check_str(&text, path.parent())
        .map_err(|e| ParseError::File { path: path.display().to_string(), inner: Box::new(e) })
}
