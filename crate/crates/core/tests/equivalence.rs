mod oracle;

use std::sync::Arc;

use itertools::Itertools;
use twogrp::constructions::catalog::{self, catalog, mod_two, quaternion_quotient, sign_hom};
use twogrp::constructions::fixtures::{two_group_law_fixtures, xmod_law_fixtures};
use twogrp::constructions::{
    automorphism_crossed_module, automorphism_two_group, discrete_two_group, trivial_crossed_module,
    xmod_from_central_extension, ConstructionError,
};
use twogrp::crossed_module::same_xmod;
use twogrp::equivalence::{s0, t0, verify_round_trip_two_groups, verify_round_trip_xmods, xi, zeta, RoundTripOptions};
use twogrp::two_group::{phi_iso, same_two_group};
use twogrp::{GroupHom, Outcome, Report, TwoGroupTwoMorphism};

fn failures(report: &Report) -> Vec<String> {
    report.failures().map(ToString::to_string).collect()
}

#[test]
fn phi_splits_off_the_source() {
    for (name, tg) in oracle::two_group_instances() {
        let phi = phi_iso(&tg);
        let (g0, g1) = (tg.g0(), tg.g1());
        let inclusion = phi.kernel.inclusion.images();
        for a in g1.elements() {
            let s = tg.s().apply(a);
            let k = g1.mul(a, g1.inv(tg.i().apply(s)));
            let position = inclusion.iter().position(|&x| x == k).expect("a·i(s a)⁻¹ lies in ker s");
            assert_eq!(phi.iso.forward().apply(a), position * g0.order() + s, "{name}: a={a}");
        }
    }
}

#[test]
fn witnesses_are_isomorphisms_on_every_instance() {
    for (name, tg) in oracle::two_group_instances() {
        let w = xi(&tg).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(w.morphism.f0().is_identity(), "{name}");
        assert!(w.morphism.f1().is_injective() && w.morphism.f1().is_surjective(), "{name}");
        let image = t0(&tg).unwrap();
        let w = zeta(&Arc::new(image)).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(w.morphism.gamma().is_identity(), "{name}");
        assert!(w.morphism.delta().is_injective() && w.morphism.delta().is_surjective(), "{name}");
    }
}

#[test]
fn s_of_a_trivial_crossed_module_is_discrete() {
    for (name, g) in catalog() {
        let s = Arc::new(s0(&Arc::new(trivial_crossed_module(&g))).unwrap());
        assert!(same_two_group(&s, &Arc::new(discrete_two_group(&g))), "{name}");
    }
}

#[test]
fn t_of_the_automorphism_two_group_is_the_automorphism_crossed_module() {
    for (name, g) in catalog().into_iter().filter(|(_, g)| g.order() <= 8) {
        let t = Arc::new(t0(&Arc::new(automorphism_two_group(&g).unwrap())).unwrap());
        assert!(same_xmod(&t, &Arc::new(automorphism_crossed_module(&g).unwrap())), "{name}");
    }
}

/// Every section of `tau`: one preimage chosen in each fibre.
fn all_sections(tau: &GroupHom) -> Vec<Vec<usize>> {
    let fibres: Vec<Vec<usize>> =
        tau.dst().elements().map(|g| tau.src().elements().filter(|&h| tau.apply(h) == g).collect()).collect();
    fibres.into_iter().multi_cartesian_product().collect()
}

#[test]
fn central_extension_action_is_section_independent() {
    for tau in [mod_two(), quaternion_quotient()] {
        let sections = all_sections(&tau);
        assert!(sections.len() >= 2);
        let h = tau.src();
        let reference = Arc::new(xmod_from_central_extension(&tau, Some(&sections[0])).unwrap());
        for section in &sections {
            let xm = Arc::new(xmod_from_central_extension(&tau, Some(section)).unwrap());
            assert!(same_xmod(&xm, &reference), "section {section:?}");
            for g in tau.dst().elements() {
                for p in h.elements().filter(|&p| tau.apply(p) == g) {
                    for y in h.elements() {
                        assert_eq!(xm.alpha().act(g, y), h.mul(h.mul(p, y), h.inv(p)), "g={g} p={p} y={y}");
                    }
                }
            }
        }
        oracle::peiffer(&reference).unwrap();
        oracle::equivariance(&reference).unwrap();
    }
}

#[test]
fn noncentral_kernels_are_rejected() {
    let tau = sign_hom(&catalog::get("S3").unwrap());
    match xmod_from_central_extension(&tau, None) {
        Err(ConstructionError::KernelNotCentral { k, h }) => {
            let s3 = tau.src();
            assert_eq!(tau.apply(k), 0);
            assert_ne!(s3.mul(k, h), s3.mul(h, k));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn both_horizontal_formulas_agree_on_two_group_fixtures() {
    let c = two_group_law_fixtures();
    let mut compared = 0;
    for outer in &c.two_morphisms {
        for inner in &c.two_morphisms {
            if !same_two_group(inner.value.source().dst(), outer.value.source().src()) {
                continue;
            }
            let primary = TwoGroupTwoMorphism::hcompose(&outer.value, &inner.value).unwrap();
            let alternative = TwoGroupTwoMorphism::hcompose_alternative(&outer.value, &inner.value).unwrap();
            assert_eq!(primary.theta().images(), alternative.as_slice(), "{} * {}", outer.name, inner.name);
            compared += 1;
        }
    }
    assert!(compared >= 100, "only {compared} composable pairs");
}

#[test]
fn corruption_is_localized_to_the_named_arrow() {
    let c = xmod_law_fixtures();
    let names = c.morphisms.iter().map(|n| &n.name).take(6).chain(c.two_morphisms.iter().map(|n| &n.name).take(6));
    for name in names {
        let report = verify_round_trip_xmods(&c, &RoundTripOptions { corrupt: Some(name.clone()) });
        let failed = failures(&report);
        assert_eq!(failed.len(), 1, "{name}: {failed:?}");
        assert!(failed[0].starts_with(&format!("FAIL {name}/")), "{name}: {failed:?}");
    }
    let c = two_group_law_fixtures();
    let names = c.morphisms.iter().map(|n| &n.name).take(6).chain(c.two_morphisms.iter().map(|n| &n.name).take(6));
    for name in names {
        let report = verify_round_trip_two_groups(&c, &RoundTripOptions { corrupt: Some(name.clone()) });
        let failed = failures(&report);
        assert_eq!(failed.len(), 1, "{name}: {failed:?}");
        assert!(failed[0].starts_with(&format!("FAIL {name}/")), "{name}: {failed:?}");
    }
    let report = verify_round_trip_xmods(&xmod_law_fixtures(), &RoundTripOptions { corrupt: Some("absent".into()) });
    assert_eq!(failures(&report), ["FAIL absent/corrupt no-such-arrow"]);
}

#[test]
fn uncorrupted_fixture_round_trips_pass() {
    let opts = RoundTripOptions::default();
    for report in [
        verify_round_trip_xmods(&xmod_law_fixtures(), &opts),
        verify_round_trip_two_groups(&two_group_law_fixtures(), &opts),
    ] {
        assert!(report.all_passed(), "{:?}", failures(&report));
        assert!(report.lines.iter().all(|l| !matches!(l.outcome, Outcome::Skip(_))));
    }
}
