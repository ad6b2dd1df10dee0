//! The 2-category laws of crossed modules, checked exhaustively on a
//! finite collection of morphisms and 2-morphisms.

use super::{same_xmod, XMod2Morphism, XModError, XModMorphism};
use crate::collection::{Named, XModCollection};
use crate::report::{CheckLine, Report};

/// Outcome of one law instance: `Ok(true)` holds, `Ok(false)` fails,
/// `Err` means a composite could not be formed or failed validation.
type Instance = Result<bool, XModError>;

struct Law {
    id: &'static str,
    failure: Option<String>,
}

impl Law {
    fn new(id: &'static str) -> Self {
        Law { id, failure: None }
    }

    fn record(&mut self, names: &[&str], outcome: Instance) {
        if self.failure.is_some() {
            return;
        }
        let arrows = names.join(",");
        match outcome {
            Ok(true) => {}
            Ok(false) => self.failure = Some(format!("arrows={arrows}")),
            Err(e) => self.failure = Some(format!("arrows={arrows} error={}", e.to_string().replace(' ', "_"))),
        }
    }

    fn line(self) -> CheckLine {
        let id = format!("xmod-laws/{}", self.id);
        match self.failure {
            None => CheckLine::pass(id),
            Some(w) => CheckLine::fail(id, w),
        }
    }
}

fn composable(first: &XModMorphism, second: &XModMorphism) -> bool {
    same_xmod(first.dst(), second.src())
}

/// Unit laws and associativity for morphism composition, vertical and
/// horizontal composition of 2-morphisms; agreement of the two horizontal
/// formulas; and the middle-four interchange between `•` and `∘`. One
/// report line per law, naming the first failing arrows.
pub fn check_2category_laws(c: &XModCollection) -> Report {
    let ms: &[Named<XModMorphism>] = &c.morphisms;
    let es: &[Named<XMod2Morphism>] = &c.two_morphisms;
    let mut report = Report::new();

    let mut law = Law::new("morphism-unit");
    for m in ms {
        let left = XModMorphism::identity(m.value.dst().clone()).after(&m.value).map(|x| x.same_as(&m.value));
        law.record(&[&m.name], left);
        let right = m.value.after(&XModMorphism::identity(m.value.src().clone())).map(|x| x.same_as(&m.value));
        law.record(&[&m.name], right);
    }
    report.push(law.line());

    let mut law = Law::new("morphism-associativity");
    for a in ms {
        for b in ms.iter().filter(|b| composable(&a.value, &b.value)) {
            for d in ms.iter().filter(|d| composable(&b.value, &d.value)) {
                let outcome = (|| {
                    let left = d.value.after(&b.value)?.after(&a.value)?;
                    let right = d.value.after(&b.value.after(&a.value)?)?;
                    Ok(left.same_as(&right))
                })();
                law.record(&[&a.name, &b.name, &d.name], outcome);
            }
        }
    }
    report.push(law.line());

    let vertical: Vec<(&Named<XMod2Morphism>, &Named<XMod2Morphism>)> = es
        .iter()
        .flat_map(|lo| es.iter().map(move |up| (lo, up)))
        .filter(|(lo, up)| lo.value.target().same_as(up.value.source()))
        .collect();
    let horizontal: Vec<(&Named<XMod2Morphism>, &Named<XMod2Morphism>)> = es
        .iter()
        .flat_map(|inner| es.iter().map(move |outer| (inner, outer)))
        .filter(|(inner, outer)| composable(inner.value.source(), outer.value.source()))
        .collect();

    let mut law = Law::new("vertical-unit");
    for e in es {
        let up = XMod2Morphism::unit(e.value.target());
        law.record(&[&e.name], XMod2Morphism::vcompose(&up, &e.value).map(|x| x.same_as(&e.value)));
        let lo = XMod2Morphism::unit(e.value.source());
        law.record(&[&e.name], XMod2Morphism::vcompose(&e.value, &lo).map(|x| x.same_as(&e.value)));
    }
    report.push(law.line());

    let mut law = Law::new("vertical-associativity");
    for &(a, b) in &vertical {
        for &(_, d) in vertical.iter().filter(|(lo, _)| std::ptr::eq(*lo, b)) {
            let outcome = (|| {
                let left = XMod2Morphism::vcompose(&XMod2Morphism::vcompose(&d.value, &b.value)?, &a.value)?;
                let right = XMod2Morphism::vcompose(&d.value, &XMod2Morphism::vcompose(&b.value, &a.value)?)?;
                Ok(left.same_as(&right))
            })();
            law.record(&[&a.name, &b.name, &d.name], outcome);
        }
    }
    report.push(law.line());

    let mut law = Law::new("horizontal-unit");
    for e in es {
        let (src, dst) = (e.value.source().src(), e.value.source().dst());
        let outer = XMod2Morphism::unit(&XModMorphism::identity(dst.clone()));
        law.record(&[&e.name], XMod2Morphism::hcompose(&outer, &e.value).map(|x| x.same_as(&e.value)));
        let inner = XMod2Morphism::unit(&XModMorphism::identity(src.clone()));
        law.record(&[&e.name], XMod2Morphism::hcompose(&e.value, &inner).map(|x| x.same_as(&e.value)));
    }
    report.push(law.line());

    let mut law = Law::new("horizontal-associativity");
    for &(a, b) in &horizontal {
        for &(_, d) in horizontal.iter().filter(|(inner, _)| std::ptr::eq(*inner, b)) {
            let outcome = (|| {
                let left = XMod2Morphism::hcompose(&XMod2Morphism::hcompose(&d.value, &b.value)?, &a.value)?;
                let right = XMod2Morphism::hcompose(&d.value, &XMod2Morphism::hcompose(&b.value, &a.value)?)?;
                Ok(left.same_as(&right))
            })();
            law.record(&[&a.name, &b.name, &d.name], outcome);
        }
    }
    report.push(law.line());

    let mut law = Law::new("horizontal-formulas");
    for &(inner, outer) in &horizontal {
        let outcome = (|| {
            let main = XMod2Morphism::hcompose(&outer.value, &inner.value)?;
            let alt = XMod2Morphism::hcompose_alternative(&outer.value, &inner.value)?;
            Ok(main.eta() == alt.as_slice())
        })();
        law.record(&[&inner.name, &outer.name], outcome);
    }
    report.push(law.line());

    let mut law = Law::new("interchange");
    for &(lo, up) in &vertical {
        for &(lo2, up2) in vertical.iter().filter(|(lo2, _)| composable(lo.value.source(), lo2.value.source())) {
            let outcome = (|| {
                let left = XMod2Morphism::hcompose(
                    &XMod2Morphism::vcompose(&up2.value, &lo2.value)?,
                    &XMod2Morphism::vcompose(&up.value, &lo.value)?,
                )?;
                let right = XMod2Morphism::vcompose(
                    &XMod2Morphism::hcompose(&up2.value, &up.value)?,
                    &XMod2Morphism::hcompose(&lo2.value, &lo.value)?,
                )?;
                Ok(left.same_as(&right))
            })();
            law.record(&[&lo.name, &up.name, &lo2.name, &up2.name], outcome);
        }
    }
    report.push(law.line());

    report
}
