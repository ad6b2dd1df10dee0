//! Resolution of references and construction of validated structures from
//! parsed blocks.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use super::syntax::{parse_document, Block, Body, Boundary, Nums, Ref, Role, Side};
use super::{Checked, Kind, LoadError, ParseError, Structure};
use crate::collection::{Named, TwoGroupCollection, XModCollection};
use crate::constructions::catalog;
use crate::crossed_module::{CrossedModule, XMod2Morphism, XModMorphism};
use crate::group::{Elem, FiniteGroup, GroupAction, GroupHom};
use crate::report::{CheckLine, Report, Violation};
use crate::two_group::{Skeleton, StrictTwoGroup, TwoGroupMorphism, TwoGroupTwoMorphism};

type Triples = Vec<(Elem, Elem, Elem)>;

fn join(role: &str, id: &str) -> String {
    match (role.is_empty(), id.is_empty()) {
        (true, _) => id.to_string(),
        (_, true) => role.to_string(),
        _ => format!("{role}/{id}"),
    }
}

fn invalid(role: &str, e: impl Violation) -> LoadError {
    LoadError::Invalid(CheckLine::fail(join(role, e.check_id()), e.witness()))
}

fn within(role: &str, e: LoadError) -> LoadError {
    match e {
        LoadError::Invalid(mut line) => {
            line.id = join(role, &line.id);
            LoadError::Invalid(line)
        }
        other => other,
    }
}

fn syntax(line: usize, reason: String) -> LoadError {
    LoadError::Parse(ParseError::Syntax { line, reason })
}

/// The values of `nums`, which must have exactly `n` entries.
fn sized(nums: &Nums, n: usize, what: &str) -> Result<Vec<Elem>, LoadError> {
    if nums.values.len() != n {
        return Err(syntax(nums.line, format!("expected {n} entries for {what}, found {}", nums.values.len())));
    }
    Ok(nums.values.clone())
}

/// `rows` as an `n_rows × row_len` table.
fn table(rows: &[Nums], header: usize, n_rows: usize, row_len: usize, what: &str) -> Result<Vec<Vec<Elem>>, LoadError> {
    if rows.len() != n_rows {
        return Err(syntax(header, format!("expected {n_rows} rows for {what}, found {}", rows.len())));
    }
    rows.iter().map(|r| sized(r, row_len, what)).collect()
}

fn hom(src: &Arc<FiniteGroup>, dst: &Arc<FiniteGroup>, nums: &Nums, role: &str) -> Result<GroupHom, LoadError> {
    let images = sized(nums, src.order(), if role.is_empty() { "the images" } else { role })?;
    GroupHom::new(src.clone(), dst.clone(), images).map_err(|e| invalid(role, e))
}

/// Resolves references and builds structures, caching referenced files by
/// canonical path so that repeated references share one allocation.
pub struct Loader {
    base: Option<PathBuf>,
    files: HashMap<PathBuf, Structure>,
    active: Vec<PathBuf>,
}

impl Loader {
    pub fn new(base: Option<&Path>) -> Self {
        Loader { base: base.map(Path::to_path_buf), files: HashMap::new(), active: Vec::new() }
    }

    /// Loads the document at `path`, caching by canonical path.
    pub fn file(&mut self, path: &Path) -> Result<Structure, LoadError> {
        self.file_of(path, None)
    }

    fn file_of(&mut self, path: &Path, expect: Option<Kind>) -> Result<Structure, LoadError> {
        let shown = path.display().to_string();
        let wrap = |e: ParseError| ParseError::File { path: shown.clone(), inner: Box::new(e) };
        let io = |message: String| LoadError::Parse(ParseError::Io { path: shown.clone(), message });
        let canon = path.canonicalize().map_err(|e| io(e.to_string()))?;
        let kind_mismatch = |found: Kind, line: usize| {
            LoadError::Parse(wrap(ParseError::Syntax {
                line,
                reason: format!(
                    "expected a `{}` document, found `{}`",
                    expect.map_or("", Kind::keyword),
                    found.keyword()
                ),
            }))
        };
        if let Some(s) = self.files.get(&canon) {
            if expect.is_some_and(|k| k != s.kind()) {
                return Err(kind_mismatch(s.kind(), 1));
            }
            return Ok(s.clone());
        }
        if self.active.contains(&canon) {
            return Err(io("cyclic reference".into()));
        }
        let text = std::fs::read_to_string(&canon).map_err(|e| io(e.to_string()))?;
        let block = parse_document(&text).map_err(wrap)?;
        if expect.is_some_and(|k| k != block.kind()) {
            return Err(kind_mismatch(block.kind(), block.line));
        }
        self.active.push(canon.clone());
        let saved = std::mem::replace(&mut self.base, canon.parent().map(Path::to_path_buf));
        let result = self.build(&block);
        self.base = saved;
        self.active.pop();
        let s = result.map_err(|e| match e {
            LoadError::Parse(p) => LoadError::Parse(wrap(p)),
            other => other,
        })?;
        self.files.insert(canon, s.clone());
        Ok(s)
    }

    fn resolve(&mut self, r: &Ref, kind: Kind, role: &str) -> Result<Structure, LoadError> {
        match r {
            Ref::Inline(block) => self.build(block).map_err(|e| within(role, e)),
            Ref::Catalog(name) if kind == Kind::Group => catalog::get(name)
                .map(Structure::Group)
                .ok_or_else(|| ParseError::UnresolvedReference(format!("catalog:{name}")).into()),
            Ref::Catalog(name) => Err(ParseError::UnresolvedReference(format!("catalog:{name}")).into()),
            Ref::Path(p) => {
                let base = self.base.clone().ok_or_else(|| ParseError::UnresolvedReference(p.clone()))?;
                self.file_of(&base.join(p), Some(kind)).map_err(|e| within(role, e))
            }
        }
    }

    fn group(&mut self, r: &Ref, role: &str) -> Result<Arc<FiniteGroup>, LoadError> {
        match self.resolve(r, Kind::Group, role)? {
            Structure::Group(g) => Ok(g),
            _ => unreachable!("resolve checks the kind"),
        }
    }

    fn two_group(&mut self, r: &Ref, role: &str) -> Result<Arc<StrictTwoGroup>, LoadError> {
        match self.resolve(r, Kind::TwoGroup, role)? {
            Structure::TwoGroup(tg) => Ok(tg),
            _ => unreachable!("resolve checks the kind"),
        }
    }

    fn xmod(&mut self, r: &Ref, role: &str) -> Result<Arc<CrossedModule>, LoadError> {
        match self.resolve(r, Kind::XMod, role)? {
            Structure::XMod(xm) => Ok(xm),
            _ => unreachable!("resolve checks the kind"),
        }
    }

    fn two_group_parts(&mut self, body: &Body) -> Result<(Skeleton, Option<Triples>), LoadError> {
        let Body::TwoGroup { g0, g1, s, t, i, comp } = body else { unreachable!() };
        let (g0, g1) = (self.group(g0, "g0")?, self.group(g1, "g1")?);
        let s = hom(&g1, &g0, s, "s")?;
        let t = hom(&g1, &g0, t, "t")?;
        let i = hom(&g0, &g1, i, "i")?;
        let triples = comp.as_ref().map(|rows| rows.iter().map(|r| (r.values[0], r.values[1], r.values[2])).collect());
        Ok((Skeleton::new(g0, g1, s, t, i), triples))
    }

    fn xmod_parts(
        &mut self,
        block: &Block,
    ) -> Result<(Arc<FiniteGroup>, Arc<FiniteGroup>, GroupHom, GroupAction), LoadError> {
        let Body::XMod { g, h, tau, alpha } = &block.body else { unreachable!() };
        let (g, h) = (self.group(g, "g")?, self.group(h, "h")?);
        let tau = hom(&h, &g, tau, "tau")?;
        let rows = table(alpha, block.line, g.order(), h.order(), "alpha")?;
        let alpha = GroupAction::new(g.clone(), h.clone(), rows).map_err(|e| invalid("alpha", e))?;
        Ok((g, h, tau, alpha))
    }

    fn xmod_morphism(
        &mut self,
        src: &Arc<CrossedModule>,
        dst: &Arc<CrossedModule>,
        maps: &[Nums; 2],
        role: &str,
    ) -> Result<XModMorphism, LoadError> {
        let gamma = hom(src.g(), dst.g(), &maps[0], &join(role, "gamma"))?;
        let delta = hom(src.h(), dst.h(), &maps[1], &join(role, "delta"))?;
        XModMorphism::new(src.clone(), dst.clone(), gamma, delta).map_err(|e| invalid(role, e))
    }

    fn two_group_morphism(
        &mut self,
        src: &Arc<StrictTwoGroup>,
        dst: &Arc<StrictTwoGroup>,
        maps: &[Nums; 2],
        role: &str,
    ) -> Result<TwoGroupMorphism, LoadError> {
        let f0 = hom(src.g0(), dst.g0(), &maps[0], &join(role, "f0"))?;
        let f1 = hom(src.g1(), dst.g1(), &maps[1], &join(role, "f1"))?;
        TwoGroupMorphism::new(src.clone(), dst.clone(), f0, f1).map_err(|e| invalid(role, e))
    }

    fn xmod_boundary(&mut self, src: &Ref, dst: &Ref, b: &Boundary) -> Result<(XModMorphism, XModMorphism), LoadError> {
        let (src, dst) = (self.xmod(src, "src")?, self.xmod(dst, "dst")?);
        Ok((self.xmod_morphism(&src, &dst, &b.source, "source")?, self.xmod_morphism(&src, &dst, &b.target, "target")?))
    }

    fn two_group_boundary(
        &mut self,
        src: &Ref,
        dst: &Ref,
        b: &Boundary,
    ) -> Result<(TwoGroupMorphism, TwoGroupMorphism), LoadError> {
        let (src, dst) = (self.two_group(src, "src")?, self.two_group(dst, "dst")?);
        Ok((
            self.two_group_morphism(&src, &dst, &b.source, "source")?,
            self.two_group_morphism(&src, &dst, &b.target, "target")?,
        ))
    }

    /// Builds and validates a parsed block.
    pub fn build(&mut self, block: &Block) -> Result<Structure, LoadError> {
        Ok(match &block.body {
            Body::Group { rows, labels, .. } => {
                let g = FiniteGroup::from_table(rows.clone()).map_err(|e| invalid("", e))?;
                let g = match labels {
                    Some(l) => g.with_labels(l.clone()).map_err(|e| invalid("", e))?,
                    None => g,
                };
                Structure::Group(Arc::new(g))
            }
            Body::Hom { src, dst, images } => {
                let (src, dst) = (self.group(src, "src")?, self.group(dst, "dst")?);
                Structure::Hom(hom(&src, &dst, images, "")?)
            }
            Body::Action { actor, space, rows } => {
                let (actor, space) = (self.group(actor, "actor")?, self.group(space, "space")?);
                let rows = table(rows, block.line, actor.order(), space.order(), "the action")?;
                Structure::Action(GroupAction::new(actor, space, rows).map_err(|e| invalid("", e))?)
            }
            Body::TwoGroup { .. } => {
                let (skeleton, triples) = self.two_group_parts(&block.body)?;
                let tg = match triples {
                    Some(t) => StrictTwoGroup::new(skeleton, &t),
                    None => StrictTwoGroup::derive(skeleton),
                };
                Structure::TwoGroup(Arc::new(tg.map_err(|e| invalid("", e))?))
            }
            Body::XMod { .. } => {
                let (g, h, tau, alpha) = self.xmod_parts(block)?;
                Structure::XMod(Arc::new(CrossedModule::new(g, h, tau, alpha).map_err(|e| invalid("", e))?))
            }
            Body::XModMorphism { src, dst, gamma, delta } => {
                let (src, dst) = (self.xmod(src, "src")?, self.xmod(dst, "dst")?);
                Structure::XModMorphism(self.xmod_morphism(&src, &dst, &[gamma.clone(), delta.clone()], "")?)
            }
            Body::TwoGroupMorphism { src, dst, f0, f1 } => {
                let (src, dst) = (self.two_group(src, "src")?, self.two_group(dst, "dst")?);
                Structure::TwoGroupMorphism(self.two_group_morphism(&src, &dst, &[f0.clone(), f1.clone()], "")?)
            }
            Body::XMod2Morphism { src, dst, boundary, eta } => {
                let (source, target) = self.xmod_boundary(src, dst, boundary)?;
                let eta = sized(eta, source.src().g().order(), "eta")?;
                Structure::XMod2Morphism(XMod2Morphism::new(source, target, eta).map_err(|e| invalid("", e))?)
            }
            Body::TwoGroup2Morphism { src, dst, boundary, theta } => {
                let (source, target) = self.two_group_boundary(src, dst, boundary)?;
                let theta = hom(source.src().g0(), source.dst().g1(), theta, "theta")?;
                Structure::TwoGroup2Morphism(
                    TwoGroupTwoMorphism::new(source, target, theta).map_err(|e| invalid("", e))?,
                )
            }
            Body::Section { images } => Structure::Section(images.values.clone()),
            Body::Collection { side, entries, corrupt } => {
                let corrupt = corrupt.clone();
                match side {
                    Side::TwoGroups => {
                        let mut c = TwoGroupCollection::default();
                        for e in entries {
                            let name = e.name.clone();
                            match (e.role, self.resolve(&e.target, entry_kind(*side, e.role), &e.name)?) {
                                (Role::Subject, Structure::TwoGroup(x)) => c.subjects.push(Named::new(name, x)),
                                (Role::Morphism, Structure::TwoGroupMorphism(x)) => {
                                    c.morphisms.push(Named::new(name, x))
                                }
                                (Role::TwoMorphism, Structure::TwoGroup2Morphism(x)) => {
                                    c.two_morphisms.push(Named::new(name, x))
                                }
                                _ => unreachable!("resolve checks the kind"),
                            }
                        }
                        Structure::TwoGroupCollection { collection: c, corrupt }
                    }
                    Side::XMods => {
                        let mut c = XModCollection::default();
                        for e in entries {
                            let name = e.name.clone();
                            match (e.role, self.resolve(&e.target, entry_kind(*side, e.role), &e.name)?) {
                                (Role::Subject, Structure::XMod(x)) => c.subjects.push(Named::new(name, x)),
                                (Role::Morphism, Structure::XModMorphism(x)) => c.morphisms.push(Named::new(name, x)),
                                (Role::TwoMorphism, Structure::XMod2Morphism(x)) => {
                                    c.two_morphisms.push(Named::new(name, x))
                                }
                                _ => unreachable!("resolve checks the kind"),
                            }
                        }
                        Structure::XModCollection { collection: c, corrupt }
                    }
                }
            }
        })
    }

    /// The full check report of the top-level structure of `block`.
    pub fn check(&mut self, block: &Block) -> Result<Checked, ParseError> {
        let kind = block.kind();
        let result: Result<Report, LoadError> = match &block.body {
            Body::Group { rows, labels, .. } => Ok(FiniteGroup::diagnose(rows.clone(), labels.clone())),
            Body::TwoGroup { .. } => self
                .two_group_parts(&block.body)
                .map(|(skeleton, triples)| StrictTwoGroup::diagnose(skeleton, triples.as_deref())),
            Body::XMod { .. } => {
                self.xmod_parts(block).map(|(g, h, tau, alpha)| CrossedModule::diagnose(g, h, tau, alpha))
            }
            Body::XModMorphism { src, dst, gamma, delta } => (|| {
                let (src, dst) = (self.xmod(src, "src")?, self.xmod(dst, "dst")?);
                let gamma = hom(src.g(), dst.g(), gamma, "gamma")?;
                let delta = hom(src.h(), dst.h(), delta, "delta")?;
                Ok(XModMorphism::diagnose(src, dst, gamma, delta))
            })(),
            Body::TwoGroupMorphism { src, dst, f0, f1 } => (|| {
                let (src, dst) = (self.two_group(src, "src")?, self.two_group(dst, "dst")?);
                let f0 = hom(src.g0(), dst.g0(), f0, "f0")?;
                let f1 = hom(src.g1(), dst.g1(), f1, "f1")?;
                Ok(TwoGroupMorphism::diagnose(src, dst, f0, f1))
            })(),
            Body::XMod2Morphism { src, dst, boundary, eta } => (|| {
                let (source, target) = self.xmod_boundary(src, dst, boundary)?;
                let eta = sized(eta, source.src().g().order(), "eta")?;
                Ok(XMod2Morphism::diagnose(source, target, eta))
            })(),
            Body::TwoGroup2Morphism { src, dst, boundary, theta } => (|| {
                let (source, target) = self.two_group_boundary(src, dst, boundary)?;
                let theta = hom(source.src().g0(), source.dst().g1(), theta, "theta")?;
                Ok(TwoGroupTwoMorphism::diagnose(source, target, theta))
            })(),
            _ => self.build(block).map(|_| {
                let mut r = Report::new();
                r.push(CheckLine::pass(kind.keyword()));
                r
            }),
        };
        match result {
            Ok(report) => Ok(Checked { kind, report }),
            Err(LoadError::Parse(e)) => Err(e),
            Err(LoadError::Invalid(line)) => {
                let mut report = Report::new();
                report.push(line);
                Ok(Checked { kind, report })
            }
        }
    }
}

fn entry_kind(side: Side, role: Role) -> Kind {
    match (side, role) {
        (Side::TwoGroups, Role::Subject) => Kind::TwoGroup,
        (Side::TwoGroups, Role::Morphism) => Kind::TwoGroupMorphism,
        (Side::TwoGroups, Role::TwoMorphism) => Kind::TwoGroup2Morphism,
        (Side::XMods, Role::Subject) => Kind::XMod,
        (Side::XMods, Role::Morphism) => Kind::XModMorphism,
        (Side::XMods, Role::TwoMorphism) => Kind::XMod2Morphism,
    }
}
