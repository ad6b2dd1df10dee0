//! Brute-force oracles, written against raw tables only: no library
//! validator, enumerator or derived formula is reused here.
//!
//! Shared by the core integration tests and the acceptance target.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use itertools::Itertools;
use twogrp::constructions::fixtures::{catalog_two_groups, catalog_xmods};
use twogrp::equivalence::SFunctor;
use twogrp::{CrossedModule, FiniteGroup, StrictTwoGroup};

pub type Witness = Result<(), String>;

/// The 2-groups that the derived-composition and interchange criteria
/// quantify over: discrete and delooping 2-groups of catalog groups,
/// automorphism 2-groups of groups of order at most 8, and S of every
/// catalog crossed module.
pub fn two_group_instances() -> Vec<(String, Arc<StrictTwoGroup>)> {
    let mut out: Vec<(String, Arc<StrictTwoGroup>)> =
        catalog_two_groups(24).into_iter().map(|n| (n.name, n.value)).collect();
    let s = SFunctor::new();
    for n in catalog_xmods(24) {
        out.push((format!("s0-{}", n.name), s.object(&n.value).expect("S of a catalog crossed module")));
    }
    out
}

/// All pairs `(a, b)` with `s(a) = t(b)`, by scanning `g1 × g1`.
pub fn composable_pairs(tg: &StrictTwoGroup) -> Vec<(usize, usize)> {
    let (s, t) = (tg.s().images(), tg.t().images());
    let n = tg.g1().order();
    (0..n).cartesian_product(0..n).filter(|&(a, b)| s[a] == t[b]).collect()
}

/// Composition is defined exactly on composable pairs and equals
/// `a · i(s a)⁻¹ · b` there, computed from the raw tables.
pub fn derived_composition(tg: &StrictTwoGroup) -> Witness {
    let g1 = tg.g1();
    let (s, t, i) = (tg.s().images(), tg.t().images(), tg.i().images());
    let n = g1.order();
    let inverse = |x: usize| (0..n).find(|&y| g1.mul(x, y) == 0).expect("inverse exists");
    for (a, &sa) in s.iter().enumerate() {
        for (b, &tb) in t.iter().enumerate() {
            match (sa == tb, tg.try_comp(a, b)) {
                (true, Some(c)) => {
                    let expected = g1.mul(g1.mul(a, inverse(i[sa])), b);
                    if c != expected {
                        return Err(format!("a={a} b={b} comp={c} formula={expected}"));
                    }
                }
                (true, None) => return Err(format!("a={a} b={b} composable but undefined")),
                (false, Some(_)) => return Err(format!("a={a} b={b} defined but not composable")),
                (false, None) => {}
            }
        }
    }
    Ok(())
}

/// `comp(a·a', b·b') = comp(a, b)·comp(a', b')` over all pairs of
/// composable pairs.
pub fn interchange(tg: &StrictTwoGroup) -> Witness {
    let g1 = tg.g1();
    let pairs = composable_pairs(tg);
    let comps: Vec<usize> = pairs.iter().map(|&(a, b)| tg.comp(a, b)).collect();
    for (k, &(a, b)) in pairs.iter().enumerate() {
        for (l, &(a2, b2)) in pairs.iter().enumerate() {
            let lhs = tg.try_comp(g1.mul(a, a2), g1.mul(b, b2));
            if lhs != Some(g1.mul(comps[k], comps[l])) {
                return Err(format!("a={a} b={b} a'={a2} b'={b2}"));
            }
        }
    }
    Ok(())
}

/// The internal-category diagrams: identities have trivial source and
/// target, composites have the outer source and target, identities are
/// units on both sides, composition is associative.
pub fn category_diagrams(tg: &StrictTwoGroup) -> Witness {
    let (s, t, i) = (tg.s().images(), tg.t().images(), tg.i().images());
    for g in 0..tg.g0().order() {
        if s[i[g]] != g || t[i[g]] != g {
            return Err(format!("identity-section g={g}"));
        }
    }
    for (a, b) in composable_pairs(tg) {
        let c = tg.comp(a, b);
        if s[c] != s[b] || t[c] != t[a] {
            return Err(format!("source-target a={a} b={b}"));
        }
    }
    for a in 0..tg.g1().order() {
        if tg.comp(a, i[s[a]]) != a || tg.comp(i[t[a]], a) != a {
            return Err(format!("unit-law a={a}"));
        }
    }
    for (a, b) in composable_pairs(tg) {
        for c in (0..tg.g1().order()).filter(|&c| s[b] == t[c]) {
            if tg.comp(tg.comp(a, b), c) != tg.comp(a, tg.comp(b, c)) {
                return Err(format!("associativity a={a} b={b} c={c}"));
            }
        }
    }
    Ok(())
}

/// `τ(α(g, h)) = g τ(h) g⁻¹` for all `g`, `h`.
pub fn equivariance(xm: &CrossedModule) -> Witness {
    let (g, h) = (xm.g(), xm.h());
    let inv = |x: usize| (0..g.order()).find(|&y| g.mul(x, y) == 0).expect("inverse exists");
    for x in 0..g.order() {
        for y in 0..h.order() {
            let lhs = xm.tau().apply(xm.alpha().act(x, y));
            let rhs = g.mul(g.mul(x, xm.tau().apply(y)), inv(x));
            if lhs != rhs {
                return Err(format!("g={x} h={y}"));
            }
        }
    }
    Ok(())
}

/// `α(τ h, h') = h h' h⁻¹` for all `h`, `h'`.
pub fn peiffer(xm: &CrossedModule) -> Witness {
    let h = xm.h();
    let inv = |x: usize| (0..h.order()).find(|&y| h.mul(x, y) == 0).expect("inverse exists");
    for x in 0..h.order() {
        for y in 0..h.order() {
            if xm.alpha().act(xm.tau().apply(x), y) != h.mul(h.mul(x, y), inv(x)) {
                return Err(format!("h={x} h'={y}"));
            }
        }
    }
    Ok(())
}

fn is_hom(src: &FiniteGroup, dst: &FiniteGroup, f: &[usize]) -> bool {
    (0..src.order()).all(|a| (0..src.order()).all(|b| f[src.mul(a, b)] == dst.mul(f[a], f[b])))
}

/// Every bijection of the carrier that respects multiplication.
pub fn automorphisms(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    (0..g.order()).permutations(g.order()).filter(|p| is_hom(g, g, p)).collect()
}

/// Number of homomorphisms, by checking every map.
pub fn homomorphism_count(src: &FiniteGroup, dst: &FiniteGroup) -> usize {
    (0..src.order()).map(|_| 0..dst.order()).multi_cartesian_product().filter(|f| is_hom(src, dst, f)).count()
}

/// An isomorphism found by trying every bijection.
pub fn isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    (0..b.order()).permutations(b.order()).find(|p| is_hom(a, b, p))
}

/// Smallest `n ≥ 1` with `xⁿ = e`, by repeated multiplication.
pub fn element_order(g: &FiniteGroup, x: usize) -> usize {
    let (mut y, mut n) = (x, 1);
    while y != 0 {
        y = g.mul(y, x);
        n += 1;
    }
    n
}
