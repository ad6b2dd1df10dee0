//! Serialization. Output is self-contained: every referenced structure is
//! written inline, nested blocks indented by two spaces per level. A
//! 2-group is written without `comp`; the derived composition is the only
//! one a valid 2-group can have.

use std::fmt::Write as _;

use super::Structure;
use crate::crossed_module::{CrossedModule, XMod2Morphism, XModMorphism};
use crate::group::{Elem, FiniteGroup, GroupAction, GroupHom};
use crate::two_group::{StrictTwoGroup, TwoGroupMorphism, TwoGroupTwoMorphism};

struct Writer {
    out: String,
    depth: usize,
}

fn joined(values: &[Elem]) -> String {
    values.iter().map(Elem::to_string).collect::<Vec<_>>().join(" ")
}

impl Writer {
    fn line(&mut self, text: &str) {
        let _ = writeln!(self.out, "{:indent$}{text}", "", indent = 2 * self.depth);
    }

    fn keyed(&mut self, key: &str, values: &[Elem]) {
        self.line(&format!("{key} {}", joined(values)));
    }

    fn nested(&mut self, f: impl FnOnce(&mut Self)) {
        self.depth += 1;
        f(self);
        self.depth -= 1;
    }

    fn group(&mut self, g: &FiniteGroup) {
        self.line(&format!("group {}", g.order()));
        for a in g.elements() {
            self.line(&joined(g.row(a)));
        }
        if let Some(labels) = g.labels() {
            self.line(&format!("labels {}", labels.join(" ")));
        }
    }

    fn hom(&mut self, f: &GroupHom) {
        self.line("hom inline inline");
        self.nested(|w| {
            w.group(f.src());
            w.group(f.dst());
        });
        self.line(&joined(f.images()));
    }

    fn action(&mut self, a: &GroupAction) {
        self.line("action inline inline");
        self.nested(|w| {
            w.group(a.actor());
            w.group(a.space());
        });
        for row in a.rows() {
            self.line(&joined(&row));
        }
    }

    fn two_group(&mut self, tg: &StrictTwoGroup) {
        self.line("twogroup inline inline");
        self.nested(|w| {
            w.group(tg.g0());
            w.group(tg.g1());
        });
        self.keyed("s", tg.s().images());
        self.keyed("t", tg.t().images());
        self.keyed("i", tg.i().images());
    }

    fn xmod(&mut self, xm: &CrossedModule) {
        self.line("xmod inline inline");
        self.nested(|w| {
            w.group(xm.g());
            w.group(xm.h());
        });
        self.keyed("tau", xm.tau().images());
        self.line("alpha");
        for row in xm.alpha().rows() {
            self.line(&joined(&row));
        }
    }

    fn xmod_endpoints(&mut self, keyword: &str, m: &XModMorphism) {
        self.line(&format!("{keyword} inline inline"));
        self.nested(|w| {
            w.xmod(m.src());
            w.xmod(m.dst());
        });
    }

    fn xmod_morphism(&mut self, m: &XModMorphism) {
        self.xmod_endpoints("xmod-morphism", m);
        self.keyed("gamma", m.gamma().images());
        self.keyed("delta", m.delta().images());
    }

    fn xmod_2morphism(&mut self, e: &XMod2Morphism) {
        self.xmod_endpoints("xmod-2morphism", e.source());
        self.keyed("source-gamma", e.source().gamma().images());
        self.keyed("source-delta", e.source().delta().images());
        self.keyed("target-gamma", e.target().gamma().images());
        self.keyed("target-delta", e.target().delta().images());
        self.keyed("eta", e.eta());
    }

    fn two_group_endpoints(&mut self, keyword: &str, m: &TwoGroupMorphism) {
        self.line(&format!("{keyword} inline inline"));
        self.nested(|w| {
            w.two_group(m.src());
            w.two_group(m.dst());
        });
    }

    fn two_group_morphism(&mut self, m: &TwoGroupMorphism) {
        self.two_group_endpoints("twogroup-morphism", m);
        self.keyed("f0", m.f0().images());
        self.keyed("f1", m.f1().images());
    }

    fn two_group_2morphism(&mut self, th: &TwoGroupTwoMorphism) {
        self.two_group_endpoints("twogroup-2morphism", th.source());
        self.keyed("source-f0", th.source().f0().images());
        self.keyed("source-f1", th.source().f1().images());
        self.keyed("target-f0", th.target().f0().images());
        self.keyed("target-f1", th.target().f1().images());
        self.keyed("theta", th.theta().images());
    }

    fn entry(&mut self, role: &str, name: &str, f: impl FnOnce(&mut Self)) {
        self.line(&format!("{role} {name} inline"));
        self.nested(f);
    }

    fn corrupt(&mut self, corrupt: &Option<String>) {
        if let Some(name) = corrupt {
            self.line(&format!("corrupt {name}"));
        }
    }
}

/// The text form of `s`, starting with the version line.
pub fn to_text(s: &Structure) -> String {
    let mut w = Writer { out: String::from("version v1\n"), depth: 0 };
    match s {
        Structure::Group(g) => w.group(g),
        Structure::Hom(f) => w.hom(f),
        Structure::Action(a) => w.action(a),
        Structure::TwoGroup(tg) => w.two_group(tg),
        Structure::XMod(xm) => w.xmod(xm),
        Structure::XModMorphism(m) => w.xmod_morphism(m),
        Structure::XMod2Morphism(e) => w.xmod_2morphism(e),
        Structure::TwoGroupMorphism(m) => w.two_group_morphism(m),
        Structure::TwoGroup2Morphism(th) => w.two_group_2morphism(th),
        Structure::Section(images) => {
            w.line("section");
            w.line(&joined(images));
        }
        Structure::TwoGroupCollection { collection, corrupt } => {
            w.line("collection twogroup");
            for n in &collection.subjects {
                w.entry("subject", &n.name, |w| w.two_group(&n.value));
            }
            for n in &collection.morphisms {
                w.entry("morphism", &n.name, |w| w.two_group_morphism(&n.value));
            }
            for n in &collection.two_morphisms {
                w.entry("2morphism", &n.name, |w| w.two_group_2morphism(&n.value));
            }
            w.corrupt(corrupt);
        }
        Structure::XModCollection { collection, corrupt } => {
            w.line("collection xmod");
            for n in &collection.subjects {
                w.entry("subject", &n.name, |w| w.xmod(&n.value));
            }
            for n in &collection.morphisms {
                w.entry("morphism", &n.name, |w| w.xmod_morphism(&n.value));
            }
            for n in &collection.two_morphisms {
                w.entry("2morphism", &n.name, |w| w.xmod_2morphism(&n.value));
            }
            w.corrupt(corrupt);
        }
    }
    w.out
}
