//! Strict 2-groups: categories internal to groups.
//!
//! A strict 2-group has a group `g0` of objects, a group `g1` of arrows,
//! source and target homomorphisms `s, t: g1 → g0`, an identity-assigning
//! homomorphism `i: g0 → g1`, and a composition defined on the composable
//! pairs `(a, b)` with `s(a) = t(b)`. `comp(a, b)` is "`a` after `b`".
//!
//! The composition is stored as an explicit table so that a supplied table
//! can be checked against the closed form `a·i(s a)⁻¹·b` rather than
//! assumed to equal it.

mod morphism;
mod pairs;
mod phi;

use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::group::{pullback, same_carrier, Elem, FiniteGroup, GroupError, GroupHom, Pullback};
use crate::report::{CheckLine, Report, Violation};

pub use morphism::{TwoGroupMorphism, TwoGroupTwoMorphism};
pub use pairs::ComposablePairs;
pub use phi::{phi_iso, source_kernel, Phi, SourceKernel};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitSide {
    /// `comp(a, i(s a)) = a`.
    Right,
    /// `comp(i(t b), b) = b`.
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TwoGroupError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0}")]
    Typing(String),
    #[error("{map}(i({g})) differs from {g}")]
    IdentitySection { map: &'static str, g: Elem },
    #[error("composition at ({a}, {b}): {reason}")]
    CompositionDomain { a: Elem, b: Elem, reason: &'static str },
    #[error("unit law fails at {x} ({side:?} unit)")]
    UnitLaw { side: UnitSide, x: Elem },
    #[error("comp({a}, {b}) has the wrong source or target")]
    SourceTarget { a: Elem, b: Elem },
    #[error("composition is not associative at ({a}, {b}, {c})")]
    Associativity { a: Elem, b: Elem, c: Elem },
    #[error("interchange law fails for the pairs ({a}, {b}) and ({a2}, {b2})")]
    Interchange { a: Elem, b: Elem, a2: Elem, b2: Elem },
    #[error("comp({a}, {b}) differs from a·i(s a)⁻¹·b")]
    DerivedComposition { a: Elem, b: Elem },
    #[error("s'(f1({0})) differs from f0(s({0}))")]
    FunctorSource(Elem),
    #[error("t'(f1({0})) differs from f0(t({0}))")]
    FunctorTarget(Elem),
    #[error("f1(i({0})) differs from i'(f0({0}))")]
    FunctorIdentity(Elem),
    #[error("f1 does not preserve comp({0}, {1})")]
    FunctorComposition(Elem, Elem),
    #[error("{0}")]
    NotParallel(String),
    #[error("{map}'(theta({g})) differs from the boundary morphism")]
    Boundary { map: &'static str, g: Elem },
    #[error("naturality square fails at arrow {0}")]
    Naturality(Elem),
    #[error("{0}")]
    NotComposable(String),
}

impl Violation for TwoGroupError {
    fn check_id(&self) -> &'static str {
        match self {
            TwoGroupError::Group(e) => e.check_id(),
            TwoGroupError::Typing(_) => "typing",
            TwoGroupError::IdentitySection { .. } => "identity-section",
            TwoGroupError::CompositionDomain { .. } => "composition-domain",
            TwoGroupError::UnitLaw { .. } => "unit-law",
            TwoGroupError::SourceTarget { .. } => "source-target",
            TwoGroupError::Associativity { .. } => "associativity",
            TwoGroupError::Interchange { .. } => "interchange",
            TwoGroupError::DerivedComposition { .. } => "derived-composition",
            TwoGroupError::FunctorSource(_) => "functor-source",
            TwoGroupError::FunctorTarget(_) => "functor-target",
            TwoGroupError::FunctorIdentity(_) => "functor-identity",
            TwoGroupError::FunctorComposition(..) => "functor-composition",
            TwoGroupError::NotParallel(_) => "parallel",
            TwoGroupError::Boundary { .. } => "boundary",
            TwoGroupError::Naturality(_) => "naturality",
            TwoGroupError::NotComposable(_) => "composable",
        }
    }

    fn witness(&self) -> String {
        match self {
            TwoGroupError::Group(e) => e.witness(),
            TwoGroupError::Typing(m) | TwoGroupError::NotParallel(m) | TwoGroupError::NotComposable(m) => {
                m.replace(' ', "_")
            }
            TwoGroupError::IdentitySection { map, g } => format!("map={map} g={g}"),
            TwoGroupError::CompositionDomain { a, b, reason } => format!("a={a} b={b} reason={reason}"),
            TwoGroupError::UnitLaw { side: UnitSide::Right, x } => format!("a={x} side=right"),
            TwoGroupError::UnitLaw { side: UnitSide::Left, x } => format!("b={x} side=left"),
            TwoGroupError::SourceTarget { a, b } | TwoGroupError::DerivedComposition { a, b } => format!("a={a} b={b}"),
            TwoGroupError::Associativity { a, b, c } => format!("a={a} b={b} c={c}"),
            TwoGroupError::Interchange { a, b, a2, b2 } => format!("a={a} b={b} a'={a2} b'={b2}"),
            TwoGroupError::FunctorSource(b) | TwoGroupError::FunctorTarget(b) | TwoGroupError::Naturality(b) => {
                format!("b={b}")
            }
            TwoGroupError::FunctorIdentity(g) => format!("g={g}"),
            TwoGroupError::FunctorComposition(a, b) => format!("a={a} b={b}"),
            TwoGroupError::Boundary { map, g } => format!("map={map} g={g}"),
        }
    }
}

/// The reflexive-graph part of a 2-group: everything except composition.
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub g0: Arc<FiniteGroup>,
    pub g1: Arc<FiniteGroup>,
    pub s: GroupHom,
    pub t: GroupHom,
    pub i: GroupHom,
}

impl Skeleton {
    pub fn new(g0: Arc<FiniteGroup>, g1: Arc<FiniteGroup>, s: GroupHom, t: GroupHom, i: GroupHom) -> Self {
        Skeleton { g0, g1, s, t, i }
    }

    fn check_typing(&self) -> Result<(), TwoGroupError> {
        let typed = |f: &GroupHom, src: &Arc<FiniteGroup>, dst: &Arc<FiniteGroup>| {
            same_carrier(f.src(), src) && same_carrier(f.dst(), dst)
        };
        for (name, f, src, dst) in
            [("s", &self.s, &self.g1, &self.g0), ("t", &self.t, &self.g1, &self.g0), ("i", &self.i, &self.g0, &self.g1)]
        {
            if !typed(f, src, dst) {
                return Err(TwoGroupError::Typing(format!("{name} has the wrong source or target")));
            }
        }
        Ok(())
    }

    fn check_identity_section(&self) -> Result<(), TwoGroupError> {
        for g in self.g0.elements() {
            let ig = self.i.apply(g);
            if self.s.apply(ig) != g {
                return Err(TwoGroupError::IdentitySection { map: "s", g });
            }
            if self.t.apply(ig) != g {
                return Err(TwoGroupError::IdentitySection { map: "t", g });
            }
        }
        Ok(())
    }

    fn derived(&self, a: Elem, b: Elem) -> Elem {
        let g1 = &self.g1;
        g1.mul(g1.mul(a, g1.inv(self.i.apply(self.s.apply(a)))), b)
    }
}

/// A verified strict 2-group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictTwoGroup {
    g0: Arc<FiniteGroup>,
    g1: Arc<FiniteGroup>,
    s: GroupHom,
    t: GroupHom,
    i: GroupHom,
    pairs: Arc<ComposablePairs>,
    /// `comp[k]` composes the `k`-th composable pair.
    comp: Vec<Elem>,
}

enum CompSource<'a> {
    Triples(&'a [(Elem, Elem, Elem)]),
    Function(&'a dyn Fn(Elem, Elem) -> Elem),
    Derived,
}

type LawCheck = fn(&StrictTwoGroup) -> Result<(), TwoGroupError>;

/// The axiom families run after the structural checks, in reporting order.
const LAWS: [(&str, LawCheck); 4] = [
    ("unit-law", StrictTwoGroup::check_unit_law),
    ("source-target", StrictTwoGroup::check_source_target),
    ("associativity", StrictTwoGroup::check_associativity),
    ("interchange", StrictTwoGroup::check_interchange),
];

impl StrictTwoGroup {
    /// Validates a composition given as triples `(a, b, comp(a, b))`, which
    /// must cover every composable pair exactly once.
    pub fn new(skeleton: Skeleton, triples: &[(Elem, Elem, Elem)]) -> Result<Self, TwoGroupError> {
        Self::validated(skeleton, CompSource::Triples(triples))
    }

    /// Validates a composition given as a function on composable pairs.
    pub fn from_composition(skeleton: Skeleton, f: impl Fn(Elem, Elem) -> Elem) -> Result<Self, TwoGroupError> {
        Self::validated(skeleton, CompSource::Function(&f))
    }

    /// Builds the only candidate composition, `a·i(s a)⁻¹·b`, and validates
    /// it. An error means the data carries no strict 2-group structure.
    pub fn derive(skeleton: Skeleton) -> Result<Self, TwoGroupError> {
        Self::validated(skeleton, CompSource::Derived)
    }

    fn validated(skeleton: Skeleton, source: CompSource<'_>) -> Result<Self, TwoGroupError> {
        let tg = Self::structural(skeleton, source)?;
        for (_, law) in LAWS {
            law(&tg)?;
        }
        tg.check_derived()?;
        Ok(tg)
    }

    /// Runs every check family and reports one line per family.
    ///
    /// The structural families (typing, identity section, composition
    /// domain) stop the report on failure. Associativity is skipped when
    /// source and target are not preserved, since triples may then fail to
    /// compose. With `triples = None` the composition is derived, and the
    /// `derived-composition` line reports whether the derived candidate is a
    /// strict 2-group; otherwise it compares the supplied table with the
    /// closed form once every axiom holds.
    pub fn diagnose(skeleton: Skeleton, triples: Option<&[(Elem, Elem, Elem)]>) -> Report {
        let mut report = Report::new();
        let source = match triples {
            Some(t) => CompSource::Triples(t),
            None => CompSource::Derived,
        };
        if let Err(e) = skeleton.check_typing() {
            report.push(CheckLine::fail(e.check_id(), e.witness()));
            return report;
        }
        report.push(CheckLine::pass("typing"));
        if let Err(e) = skeleton.check_identity_section() {
            report.push(CheckLine::fail(e.check_id(), e.witness()));
            return report;
        }
        report.push(CheckLine::pass("identity-section"));
        let derived = matches!(source, CompSource::Derived);
        let tg = match Self::structural(skeleton, source) {
            Ok(tg) => tg,
            Err(e) => {
                report.push(CheckLine::fail(e.check_id(), e.witness()));
                return report;
            }
        };
        report.push(CheckLine::pass("composition-domain"));
        let mut first_failed = None;
        let mut source_target_ok = true;
        for (id, law) in LAWS {
            if id == "associativity" && !source_target_ok {
                report.push(CheckLine::skip(id, "source-target-failed"));
                continue;
            }
            let result = law(&tg);
            if result.is_err() {
                first_failed.get_or_insert(id);
                source_target_ok &= id != "source-target";
            }
            report.push(CheckLine::from_violation(result, id));
        }
        let line = match (first_failed, derived) {
            (None, _) => CheckLine::from_violation(tg.check_derived(), "derived-composition"),
            (Some(law), true) => CheckLine::fail("derived-composition", format!("axiom={law}")),
            (Some(_), false) => CheckLine::skip("derived-composition", "axioms-failed"),
        };
        report.push(line);
        report
    }

    /// Typing, identity section and composition domain, then the table.
    fn structural(skeleton: Skeleton, source: CompSource<'_>) -> Result<Self, TwoGroupError> {
        skeleton.check_typing()?;
        skeleton.check_identity_section()?;
        let pairs = ComposablePairs::new(&skeleton.s, &skeleton.t);
        let n1 = skeleton.g1.order();
        let comp = match source {
            CompSource::Derived => pairs.iter().map(|(a, b)| skeleton.derived(a, b)).collect(),
            CompSource::Function(f) => {
                let comp: Vec<Elem> = pairs.iter().map(|(a, b)| f(a, b)).collect();
                if let Some(k) = comp.iter().position(|&c| c >= n1) {
                    let (a, b) = pairs.pair(k);
                    return Err(TwoGroupError::CompositionDomain { a, b, reason: "out-of-range" });
                }
                comp
            }
            CompSource::Triples(triples) => {
                let mut comp = vec![None; pairs.len()];
                for &(a, b, c) in triples {
                    let domain = |reason| TwoGroupError::CompositionDomain { a, b, reason };
                    if a >= n1 || b >= n1 || c >= n1 {
                        return Err(domain("out-of-range"));
                    }
                    let k = pairs.index(a, b).ok_or(domain("not-composable"))?;
                    if comp[k].replace(c).is_some() {
                        return Err(domain("duplicate"));
                    }
                }
                if let Some(k) = comp.iter().position(Option::is_none) {
                    let (a, b) = pairs.pair(k);
                    return Err(TwoGroupError::CompositionDomain { a, b, reason: "undefined" });
                }
                comp.into_iter().map(|c| c.expect("every pair is defined")).collect()
            }
        };
        let Skeleton { g0, g1, s, t, i } = skeleton;
        Ok(StrictTwoGroup { g0, g1, s, t, i, pairs: Arc::new(pairs), comp })
    }

    fn check_unit_law(&self) -> Result<(), TwoGroupError> {
        for a in self.g1.elements() {
            if self.comp(a, self.i.apply(self.s.apply(a))) != a {
                return Err(TwoGroupError::UnitLaw { side: UnitSide::Right, x: a });
            }
        }
        for b in self.g1.elements() {
            if self.comp(self.i.apply(self.t.apply(b)), b) != b {
                return Err(TwoGroupError::UnitLaw { side: UnitSide::Left, x: b });
            }
        }
        Ok(())
    }

    fn check_source_target(&self) -> Result<(), TwoGroupError> {
        for ((a, b), &c) in self.pairs.iter().zip(&self.comp) {
            if self.s.apply(c) != self.s.apply(b) || self.t.apply(c) != self.t.apply(a) {
                return Err(TwoGroupError::SourceTarget { a, b });
            }
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<(), TwoGroupError> {
        for ((a, b), &ab) in self.pairs.iter().zip(&self.comp) {
            for &c in self.pairs.right_partners(b) {
                let left = self.try_comp(ab, c);
                let right = self.try_comp(b, c).and_then(|bc| self.try_comp(a, bc));
                if left.is_none() || left != right {
                    return Err(TwoGroupError::Associativity { a, b, c });
                }
            }
        }
        Ok(())
    }

    /// `comp(a·a', b·b') = comp(a, b)·comp(a', b')` over all pairs of
    /// composable pairs. The outer scan is parallel; `find_first` keeps the
    /// reported witness the lexicographically first one.
    fn check_interchange(&self) -> Result<(), TwoGroupError> {
        let first_bad_partner = |k: usize| -> Option<usize> {
            let (a, b) = self.pairs.pair(k);
            let ck = self.comp[k];
            let g1 = &self.g1;
            self.pairs.iter().zip(&self.comp).position(|((a2, b2), &cq)| {
                let k2 = self.pairs.index_unchecked(g1.mul(a, a2), g1.mul(b, b2));
                self.comp[k2] != g1.mul(ck, cq)
            })
        };
        match (0..self.pairs.len()).into_par_iter().find_first(|&k| first_bad_partner(k).is_some()) {
            None => Ok(()),
            Some(k) => {
                let q = first_bad_partner(k).expect("found by the parallel scan");
                let ((a, b), (a2, b2)) = (self.pairs.pair(k), self.pairs.pair(q));
                Err(TwoGroupError::Interchange { a, b, a2, b2 })
            }
        }
    }

    fn check_derived(&self) -> Result<(), TwoGroupError> {
        for ((a, b), &c) in self.pairs.iter().zip(&self.comp) {
            if c != self.derived(a, b) {
                return Err(TwoGroupError::DerivedComposition { a, b });
            }
        }
        Ok(())
    }

    pub fn g0(&self) -> &Arc<FiniteGroup> {
        &self.g0
    }

    pub fn g1(&self) -> &Arc<FiniteGroup> {
        &self.g1
    }

    pub fn s(&self) -> &GroupHom {
        &self.s
    }

    pub fn t(&self) -> &GroupHom {
        &self.t
    }

    pub fn i(&self) -> &GroupHom {
        &self.i
    }

    pub fn skeleton(&self) -> Skeleton {
        Skeleton::new(self.g0.clone(), self.g1.clone(), self.s.clone(), self.t.clone(), self.i.clone())
    }

    pub fn pairs(&self) -> &ComposablePairs {
        &self.pairs
    }

    /// `a` after `b`. Panics unless `s(a) = t(b)`.
    pub fn comp(&self, a: Elem, b: Elem) -> Elem {
        self.try_comp(a, b).unwrap_or_else(|| panic!("({a}, {b}) is not composable"))
    }

    pub fn try_comp(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.pairs.index(a, b).map(|k| self.comp[k])
    }

    /// `a·i(s a)⁻¹·b`, the closed form every valid composition agrees with.
    pub fn derived(&self, a: Elem, b: Elem) -> Elem {
        let g1 = &self.g1;
        g1.mul(g1.mul(a, g1.inv(self.i.apply(self.s.apply(a)))), b)
    }

    /// `(a, b, comp(a, b))` in lexicographic order of `(a, b)`.
    pub fn composition_triples(&self) -> impl Iterator<Item = (Elem, Elem, Elem)> + '_ {
        self.pairs.iter().zip(&self.comp).map(|((a, b), &c)| (a, b, c))
    }

    /// The pullback group of composable pairs, with its projections.
    pub fn composable_pullback(&self) -> Pullback {
        pullback(&self.s, &self.t).expect("s and t share a codomain")
    }
}

/// Strict identity of 2-groups: the same allocation, or table-equal
/// carriers with equal structure maps and composition.
pub fn same_two_group(a: &Arc<StrictTwoGroup>, b: &Arc<StrictTwoGroup>) -> bool {
    Arc::ptr_eq(a, b)
        || (same_carrier(&a.g0, &b.g0)
            && same_carrier(&a.g1, &b.g1)
            && a.s.images() == b.s.images()
            && a.t.images() == b.t.images()
            && a.i.images() == b.i.images()
            && a.comp == b.comp)
}
