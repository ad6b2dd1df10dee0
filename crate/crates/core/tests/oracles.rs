//! Library results checked against brute-force oracles.

mod oracle;

use std::collections::BTreeSet;
use std::sync::Arc;

use twogrp::constructions::catalog::{self, catalog};
use twogrp::constructions::fixtures::catalog_xmods;
use twogrp::constructions::{automorphism_two_group, delooping_two_group};
use twogrp::equivalence::TFunctor;
use twogrp::group::{automorphism_group, homomorphisms, semidirect_product};
use twogrp::{FiniteGroup, GroupAction};

fn small_catalog(max: usize) -> Vec<(&'static str, Arc<FiniteGroup>)> {
    catalog().into_iter().filter(|(_, g)| g.order() <= max).collect()
}

#[test]
fn automorphism_groups_match_bijection_search() {
    for (name, g) in small_catalog(8) {
        let expected = oracle::automorphisms(&g);
        let aut = automorphism_group(&g).unwrap();
        let a = aut.group();
        let found: BTreeSet<Vec<usize>> = a.elements().map(|f| aut.action().row(f).to_vec()).collect();
        assert_eq!(found, expected, "{name}");
        assert_eq!(a.order(), expected.len(), "{name}: duplicate automorphisms");
        for f in a.elements() {
            for f2 in a.elements() {
                let composite: Vec<usize> =
                    g.elements().map(|x| aut.action().act(f, aut.action().act(f2, x))).collect();
                assert_eq!(aut.action().row(a.mul(f, f2)), composite.as_slice(), "{name}: f={f} f'={f2}");
            }
        }
    }
}

#[test]
fn automorphism_group_orders() {
    let orders: Vec<(&str, usize)> =
        small_catalog(8).into_iter().map(|(n, g)| (n, automorphism_group(&g).unwrap().group().order())).collect();
    let expected = [
        ("trivial", 1),
        ("Z2", 1),
        ("Z3", 2),
        ("Z4", 2),
        ("Z2xZ2", 6),
        ("Z6", 2),
        ("Z8", 4),
        ("S3", 6),
        ("D4", 8),
        ("Q8", 24),
        ("Z2xZ4", 8),
    ];
    assert_eq!(orders, expected);
}

#[test]
fn homomorphism_counts_match_exhaustive_maps() {
    let groups = small_catalog(6);
    for (a, src) in &groups {
        for (b, dst) in &groups {
            assert_eq!(homomorphisms(src, dst).len(), oracle::homomorphism_count(src, dst), "{a} -> {b}");
        }
    }
}

#[test]
fn s3_is_z3_semidirect_z2() {
    let z3 = Arc::new(FiniteGroup::cyclic(3));
    let z2 = Arc::new(FiniteGroup::cyclic(2));
    let inversion = GroupAction::new(z2.clone(), z3.clone(), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
    let sd = semidirect_product(&z3, &z2, &inversion).unwrap();
    let s3 = catalog::get("S3").unwrap();
    assert!(oracle::isomorphism(&sd.group, &s3).is_some());
    let z6 = catalog::get("Z6").unwrap();
    assert!(oracle::isomorphism(&sd.group, &z6).is_none());
}

#[test]
fn catalog_element_orders() {
    let q8 = catalog::get("Q8").unwrap();
    let involutions = q8.elements().filter(|&x| oracle::element_order(&q8, x) == 2).count();
    assert_eq!(involutions, 1);
    let d4 = catalog::get("D4").unwrap();
    let involutions = d4.elements().filter(|&x| oracle::element_order(&d4, x) == 2).count();
    assert_eq!(involutions, 5);
    for (name, g) in catalog() {
        for x in g.elements() {
            assert_eq!(g.element_order(x), oracle::element_order(&g, x), "{name} x={x}");
        }
    }
    assert!(oracle::isomorphism(&catalog::get("Z4").unwrap(), &catalog::get("Z2xZ2").unwrap()).is_none());
    assert!(oracle::isomorphism(&q8, &d4).is_none());
}

#[test]
fn composition_is_the_derived_formula_on_every_instance() {
    for (name, tg) in oracle::two_group_instances() {
        oracle::derived_composition(&tg).unwrap_or_else(|w| panic!("{name}: {w}"));
    }
}

#[test]
fn interchange_holds_on_every_instance() {
    for (name, tg) in oracle::two_group_instances() {
        oracle::interchange(&tg).unwrap_or_else(|w| panic!("{name}: {w}"));
    }
}

#[test]
fn t_images_are_crossed_modules() {
    let t = TFunctor::new();
    for (name, tg) in oracle::two_group_instances() {
        let image = t.object(&tg).unwrap();
        oracle::peiffer(&image.xmod).unwrap_or_else(|w| panic!("{name}: peiffer {w}"));
        oracle::equivariance(&image.xmod).unwrap_or_else(|w| panic!("{name}: equivariance {w}"));
    }
}

#[test]
fn s_images_are_internal_categories() {
    for (name, tg) in oracle::two_group_instances().into_iter().filter(|(n, _)| n.starts_with("s0-")) {
        oracle::category_diagrams(&tg).unwrap_or_else(|w| panic!("{name}: {w}"));
    }
}

#[test]
fn catalog_crossed_modules_satisfy_both_axioms() {
    for n in catalog_xmods(24) {
        oracle::peiffer(&n.value).unwrap_or_else(|w| panic!("{}: peiffer {w}", n.name));
        oracle::equivariance(&n.value).unwrap_or_else(|w| panic!("{}: equivariance {w}", n.name));
    }
}

#[test]
fn automorphism_two_group_composes_by_multiplying_the_group_part() {
    for (name, g) in small_catalog(8) {
        let tg = automorphism_two_group(&g).unwrap();
        let a = tg.g0().order();
        for (x, y) in oracle::composable_pairs(&tg) {
            let ((h2, _), (h, f)) = ((x / a, x % a), (y / a, y % a));
            assert_eq!(tg.comp(x, y), g.mul(h2, h) * a + f, "{name}: x={x} y={y}");
        }
    }
}

#[test]
fn delooping_exists_exactly_for_abelian_groups() {
    for (name, g) in catalog() {
        let abelian = g.elements().all(|a| g.elements().all(|b| g.mul(a, b) == g.mul(b, a)));
        assert_eq!(delooping_two_group(&g).is_ok(), abelian, "{name}");
    }
}
