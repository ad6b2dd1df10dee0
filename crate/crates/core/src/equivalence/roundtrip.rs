//! Round-trip verification over a finite collection: the witness
//! components are isomorphisms, the witnesses are natural in every listed
//! morphism and 2-morphism, and the functors preserve identities and all
//! three compositions.
//!
//! Naturality compares raw tables computed from the defining formulas, so
//! a corrupted image table shows up as exactly one failing line.

use std::collections::HashMap;
use std::sync::Arc;

use super::{xi_with, zeta_with, EquivalenceError, SFunctor, TFunctor, Xi, Zeta};
use crate::collection::{Named, TwoGroupCollection, XModCollection};
use crate::crossed_module::{same_xmod, CrossedModule, XMod2Morphism, XModMorphism};
use crate::group::Elem;
use crate::report::{CheckLine, Report, Violation};
use crate::two_group::{same_two_group, StrictTwoGroup, TwoGroupMorphism, TwoGroupTwoMorphism};

#[derive(Clone, Debug, Default)]
pub struct RoundTripOptions {
    /// Name of a morphism or 2-morphism whose round-trip image gets one
    /// table entry altered before its naturality check.
    pub corrupt: Option<String>,
}

fn error_witness(e: &EquivalenceError) -> String {
    format!("check={} {}", e.check_id(), e.witness()).trim_end().to_string()
}

/// Alters one entry of `table` (the last one that can be altered) within
/// a codomain of order `order`. Returns false when the codomain is trivial.
fn corrupt_entry(table: &mut [Elem], order: usize) -> bool {
    if order < 2 || table.is_empty() {
        return false;
    }
    let last = table.len() - 1;
    table[last] = (table[last] + 1) % order;
    true
}

/// First failure across many instances of one functoriality property.
struct Aggregate {
    id: String,
    failure: Option<String>,
}

impl Aggregate {
    fn new(id: String) -> Self {
        Aggregate { id, failure: None }
    }

    fn record(&mut self, names: &[&str], outcome: Result<bool, EquivalenceError>) {
        if self.failure.is_some() {
            return;
        }
        let arrows = names.join(",");
        match outcome {
            Ok(true) => {}
            Ok(false) => self.failure = Some(format!("arrows={arrows}")),
            Err(e) => self.failure = Some(format!("arrows={arrows} {}", error_witness(&e))),
        }
    }

    fn line(self) -> CheckLine {
        match self.failure {
            None => CheckLine::pass(self.id),
            Some(w) => CheckLine::fail(self.id, w),
        }
    }
}

type Computed<K, W> = (Arc<K>, Result<Arc<W>, EquivalenceError>);

/// Witnesses computed once per object allocation.
struct Witnesses<K, W> {
    map: HashMap<usize, Computed<K, W>>,
}

impl<K, W> Witnesses<K, W> {
    fn new() -> Self {
        Witnesses { map: HashMap::new() }
    }

    fn get(
        &mut self,
        key: &Arc<K>,
        build: impl FnOnce() -> Result<W, EquivalenceError>,
    ) -> Result<Arc<W>, EquivalenceError> {
        let addr = Arc::as_ptr(key) as usize;
        self.map.entry(addr).or_insert_with(|| (key.clone(), build().map(Arc::new))).1.clone()
    }
}

fn unknown_corruption_target(report: &mut Report, opts: &RoundTripOptions, names: &[&str]) {
    if let Some(c) = &opts.corrupt {
        if !names.contains(&c.as_str()) {
            report.push(CheckLine::fail(format!("{c}/corrupt"), "no-such-arrow"));
        }
    }
}

/// `ξ` on every subject, naturality of `ξ` in every morphism and
/// 2-morphism, and functoriality of `T` on the collection.
pub fn verify_round_trip_two_groups(c: &TwoGroupCollection, opts: &RoundTripOptions) -> Report {
    let (t, s) = (TFunctor::new(), SFunctor::new());
    let mut xis: Witnesses<StrictTwoGroup, Xi> = Witnesses::new();
    let mut report = Report::new();

    for subject in &c.subjects {
        let name = &subject.name;
        match xis.get(&subject.value, || xi_with(&t, &s, &subject.value)) {
            Ok(_) => {
                report.push(CheckLine::pass(format!("{name}/xi-iso-0")));
                report.push(CheckLine::pass(format!("{name}/xi-iso-1")));
                report.push(CheckLine::pass(format!("{name}/xi-morphism")));
            }
            Err(e) => report.push(CheckLine::fail(format!("{name}/xi"), error_witness(&e))),
        }
    }

    for m in &c.morphisms {
        let corrupt = opts.corrupt.as_deref() == Some(m.name.as_str());
        let outcome = (|| {
            let f = &m.value;
            let stf = s.morphism(&t.morphism(f)?)?;
            let xs = xis.get(f.src(), || xi_with(&t, &s, f.src()))?;
            let xd = xis.get(f.dst(), || xi_with(&t, &s, f.dst()))?;
            let mut f0 = stf.f0().images().to_vec();
            let mut f1 = stf.f1().images().to_vec();
            if corrupt && !corrupt_entry(&mut f1, stf.dst().g1().order()) {
                corrupt_entry(&mut f0, stf.dst().g0().order());
            }
            let (xd0, xd1) = (xd.morphism.f0(), xd.morphism.f1());
            let (xs0, xs1) = (xs.morphism.f0(), xs.morphism.f1());
            if let Some(x) = (0..f0.len()).find(|&x| xd0.apply(f0[x]) != f.f0().apply(xs0.apply(x))) {
                return Ok(Some(format!("component=0 x={x}")));
            }
            if let Some(x) = (0..f1.len()).find(|&x| xd1.apply(f1[x]) != f.f1().apply(xs1.apply(x))) {
                return Ok(Some(format!("component=1 x={x}")));
            }
            Ok::<_, EquivalenceError>(None)
        })();
        report.push(naturality_line(&m.name, "xi-naturality", outcome));
    }

    for e in &c.two_morphisms {
        let corrupt = opts.corrupt.as_deref() == Some(e.name.as_str());
        let outcome = (|| {
            let th = &e.value;
            let f = th.source();
            let st_th = s.two_morphism(&t.two_morphism(th)?)?;
            let xs = xis.get(f.src(), || xi_with(&t, &s, f.src()))?;
            let xd = xis.get(f.dst(), || xi_with(&t, &s, f.dst()))?;
            let mut table = st_th.theta().images().to_vec();
            if corrupt {
                corrupt_entry(&mut table, st_th.theta().dst().order());
            }
            let st_e0 = st_th.target().f0();
            let (far, near) = (f.dst(), f.src());
            let (xd0, xd1) = (xd.morphism.f0(), xd.morphism.f1());
            let xs0 = xs.morphism.f0();
            // id(ξ') ∘ STθ against θ ∘ id(ξ), both by the primary formula.
            for (g, &image) in table.iter().enumerate() {
                let lhs = far.try_comp(far.i().apply(xd0.apply(st_e0.apply(g))), xd1.apply(image));
                let x = xs0.apply(g);
                let rhs = far.try_comp(th.theta().apply(x), f.f1().apply(near.i().apply(x)));
                if lhs.is_none() || lhs != rhs {
                    return Ok(Some(format!("g={g}")));
                }
            }
            Ok::<_, EquivalenceError>(None)
        })();
        report.push(naturality_line(&e.name, "xi-naturality", outcome));
    }

    let names: Vec<&str> =
        c.morphisms.iter().map(|m| m.name.as_str()).chain(c.two_morphisms.iter().map(|e| e.name.as_str())).collect();
    unknown_corruption_target(&mut report, opts, &names);
    report.extend(t_functoriality(&t, c));
    report
}

fn naturality_line(name: &str, check: &str, outcome: Result<Option<String>, EquivalenceError>) -> CheckLine {
    let id = format!("{name}/{check}");
    match outcome {
        Ok(None) => CheckLine::pass(id),
        Ok(Some(w)) => CheckLine::fail(id, w),
        Err(e) => CheckLine::fail(id, error_witness(&e)),
    }
}

fn t_functoriality(t: &TFunctor, c: &TwoGroupCollection) -> Report {
    let ms: &[Named<TwoGroupMorphism>] = &c.morphisms;
    let es: &[Named<TwoGroupTwoMorphism>] = &c.two_morphisms;
    let mut report = Report::new();

    let mut law = Aggregate::new("T/identities".into());
    for subject in &c.subjects {
        let outcome = (|| {
            let image = t.morphism(&TwoGroupMorphism::identity(subject.value.clone()))?;
            Ok(image.same_as(&XModMorphism::identity(t.object(&subject.value)?.xmod.clone())))
        })();
        law.record(&[&subject.name], outcome);
    }
    for m in ms {
        let outcome = (|| {
            let image = t.two_morphism(&TwoGroupTwoMorphism::identity(&m.value))?;
            Ok(image.same_as(&XMod2Morphism::unit(&t.morphism(&m.value)?)))
        })();
        law.record(&[&m.name], outcome);
    }
    report.push(law.line());

    let mut law = Aggregate::new("T/composition".into());
    for a in ms {
        for b in ms.iter().filter(|b| same_two_group(a.value.dst(), b.value.src())) {
            let outcome = (|| {
                let whole = t.morphism(&b.value.after(&a.value)?)?;
                Ok(whole.same_as(&t.morphism(&b.value)?.after(&t.morphism(&a.value)?)?))
            })();
            law.record(&[&a.name, &b.name], outcome);
        }
    }
    report.push(law.line());

    let mut law = Aggregate::new("T/vertical".into());
    for lo in es {
        for up in es.iter().filter(|up| lo.value.target().same_as(up.value.source())) {
            let outcome = (|| {
                let whole = t.two_morphism(&TwoGroupTwoMorphism::vcompose(&up.value, &lo.value)?)?;
                let parts = XMod2Morphism::vcompose(&t.two_morphism(&up.value)?, &t.two_morphism(&lo.value)?)?;
                Ok(whole.same_as(&parts))
            })();
            law.record(&[&lo.name, &up.name], outcome);
        }
    }
    report.push(law.line());

    let mut law = Aggregate::new("T/horizontal".into());
    for inner in es {
        for outer in es.iter().filter(|o| same_two_group(inner.value.source().dst(), o.value.source().src())) {
            let outcome = (|| {
                let whole = t.two_morphism(&TwoGroupTwoMorphism::hcompose(&outer.value, &inner.value)?)?;
                let parts = XMod2Morphism::hcompose(&t.two_morphism(&outer.value)?, &t.two_morphism(&inner.value)?)?;
                Ok(whole.same_as(&parts))
            })();
            law.record(&[&inner.name, &outer.name], outcome);
        }
    }
    report.push(law.line());
    report
}

/// `ζ` on every subject, naturality of `ζ` in every morphism and
/// 2-morphism, and functoriality of `S` on the collection.
pub fn verify_round_trip_xmods(c: &XModCollection, opts: &RoundTripOptions) -> Report {
    let (t, s) = (TFunctor::new(), SFunctor::new());
    let mut zetas: Witnesses<CrossedModule, Zeta> = Witnesses::new();
    let mut report = Report::new();

    for subject in &c.subjects {
        let name = &subject.name;
        match zetas.get(&subject.value, || zeta_with(&t, &s, &subject.value)) {
            Ok(_) => {
                report.push(CheckLine::pass(format!("{name}/zeta-iso-0")));
                report.push(CheckLine::pass(format!("{name}/zeta-iso-1")));
                report.push(CheckLine::pass(format!("{name}/zeta-morphism")));
            }
            Err(e) => report.push(CheckLine::fail(format!("{name}/zeta"), error_witness(&e))),
        }
    }

    for m in &c.morphisms {
        let corrupt = opts.corrupt.as_deref() == Some(m.name.as_str());
        let outcome = (|| {
            let f = &m.value;
            let tsf = t.morphism(&s.morphism(f)?)?;
            let zs = zetas.get(f.src(), || zeta_with(&t, &s, f.src()))?;
            let zd = zetas.get(f.dst(), || zeta_with(&t, &s, f.dst()))?;
            let mut gamma = tsf.gamma().images().to_vec();
            let mut delta = tsf.delta().images().to_vec();
            if corrupt && !corrupt_entry(&mut delta, tsf.dst().h().order()) {
                corrupt_entry(&mut gamma, tsf.dst().g().order());
            }
            let (zd0, zd1) = (zd.morphism.gamma(), zd.morphism.delta());
            let (zs0, zs1) = (zs.morphism.gamma(), zs.morphism.delta());
            if let Some(x) = (0..gamma.len()).find(|&x| zd0.apply(gamma[x]) != f.gamma().apply(zs0.apply(x))) {
                return Ok(Some(format!("component=0 x={x}")));
            }
            if let Some(x) = (0..delta.len()).find(|&x| zd1.apply(delta[x]) != f.delta().apply(zs1.apply(x))) {
                return Ok(Some(format!("component=1 x={x}")));
            }
            Ok::<_, EquivalenceError>(None)
        })();
        report.push(naturality_line(&m.name, "zeta-naturality", outcome));
    }

    for e in &c.two_morphisms {
        let corrupt = opts.corrupt.as_deref() == Some(e.name.as_str());
        let outcome = (|| {
            let eta = &e.value;
            let f = eta.source();
            let ts_eta = t.two_morphism(&s.two_morphism(eta)?)?;
            let image = t.object(&s.object(f.dst())?)?;
            let zd = zetas.get(f.dst(), || zeta_with(&t, &s, f.dst()))?;
            let zs = zetas.get(f.src(), || zeta_with(&t, &s, f.src()))?;
            let mut table = ts_eta.eta().to_vec();
            if corrupt {
                corrupt_entry(&mut table, image.xmod.h().order());
            }
            let n_g = f.dst().g().order();
            let h = f.dst().h();
            let zd1 = zd.morphism.delta();
            let zs0 = zs.morphism.gamma();
            let e_delta = eta.target().delta();
            for (g, &arrow) in table.iter().enumerate() {
                // TSη(g) is the arrow (η g, e).
                if image.kernel.inclusion.apply(arrow) != eta.eta()[g] * n_g {
                    return Ok(Some(format!("shape g={g}")));
                }
                // unit(ζ') ∘ TSη against η ∘ unit(ζ), both by the primary formula.
                let lhs = h.mul(zd1.apply(arrow), h.identity());
                let rhs = h.mul(e_delta.apply(h.identity()), eta.eta()[zs0.apply(g)]);
                if lhs != rhs {
                    return Ok(Some(format!("g={g}")));
                }
            }
            Ok::<_, EquivalenceError>(None)
        })();
        report.push(naturality_line(&e.name, "zeta-naturality", outcome));
    }

    let names: Vec<&str> =
        c.morphisms.iter().map(|m| m.name.as_str()).chain(c.two_morphisms.iter().map(|e| e.name.as_str())).collect();
    unknown_corruption_target(&mut report, opts, &names);
    report.extend(s_functoriality(&s, c));
    report
}

fn s_functoriality(s: &SFunctor, c: &XModCollection) -> Report {
    let ms: &[Named<XModMorphism>] = &c.morphisms;
    let es: &[Named<XMod2Morphism>] = &c.two_morphisms;
    let mut report = Report::new();

    let mut law = Aggregate::new("S/identities".into());
    for subject in &c.subjects {
        let outcome = (|| {
            let image = s.morphism(&XModMorphism::identity(subject.value.clone()))?;
            Ok(image.same_as(&TwoGroupMorphism::identity(s.object(&subject.value)?)))
        })();
        law.record(&[&subject.name], outcome);
    }
    for m in ms {
        let outcome = (|| {
            let image = s.two_morphism(&XMod2Morphism::unit(&m.value))?;
            Ok(image.same_as(&TwoGroupTwoMorphism::identity(&s.morphism(&m.value)?)))
        })();
        law.record(&[&m.name], outcome);
    }
    report.push(law.line());

    let mut law = Aggregate::new("S/composition".into());
    for a in ms {
        for b in ms.iter().filter(|b| same_xmod(a.value.dst(), b.value.src())) {
            let outcome = (|| {
                let whole = s.morphism(&b.value.after(&a.value)?)?;
                Ok(whole.same_as(&s.morphism(&b.value)?.after(&s.morphism(&a.value)?)?))
            })();
            law.record(&[&a.name, &b.name], outcome);
        }
    }
    report.push(law.line());

    let mut law = Aggregate::new("S/vertical".into());
    for lo in es {
        for up in es.iter().filter(|up| lo.value.target().same_as(up.value.source())) {
            let outcome = (|| {
                let whole = s.two_morphism(&XMod2Morphism::vcompose(&up.value, &lo.value)?)?;
                let parts = TwoGroupTwoMorphism::vcompose(&s.two_morphism(&up.value)?, &s.two_morphism(&lo.value)?)?;
                Ok(whole.same_as(&parts))
            })();
            law.record(&[&lo.name, &up.name], outcome);
        }
    }
    report.push(law.line());

    let mut law = Aggregate::new("S/horizontal".into());
    for inner in es {
        for outer in es.iter().filter(|o| same_xmod(inner.value.source().dst(), o.value.source().src())) {
            let outcome = (|| {
                let whole = s.two_morphism(&XMod2Morphism::hcompose(&outer.value, &inner.value)?)?;
                let parts =
                    TwoGroupTwoMorphism::hcompose(&s.two_morphism(&outer.value)?, &s.two_morphism(&inner.value)?)?;
                Ok(whole.same_as(&parts))
            })();
            law.record(&[&inner.name, &outer.name], outcome);
        }
    }
    report.push(law.line());
    report
}
