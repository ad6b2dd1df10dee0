//! One line per acceptance criterion, `PASS n name detail` or
//! `FAIL n name detail`. Exits nonzero if any criterion fails.

#[path = "../../core/tests/oracle/mod.rs"]
mod oracle;

mod common;

use std::sync::Arc;
use std::time::Instant;

use itertools::Itertools;
use twogrp::bound::set_max_order;
use twogrp::constructions::catalog::{self, catalog, mod_two, quaternion_quotient, sign_hom};
use twogrp::constructions::fixtures::{
    catalog_two_group_collection, catalog_xmod_collection, two_group_law_fixtures, xmod_law_fixtures,
};
use twogrp::constructions::{xmod_from_central_extension, ConstructionError};
use twogrp::crossed_module::{check_2category_laws, same_xmod};
use twogrp::equivalence::{verify_round_trip_two_groups, verify_round_trip_xmods, RoundTripOptions, TFunctor};
use twogrp::group::automorphism_group;
use twogrp::{GroupHom, Report};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn first_failure(report: &Report) -> Option<String> {
    report.first_failure().map(ToString::to_string)
}

fn each<T>(items: &[(String, T)], check: impl Fn(&T) -> oracle::Witness) -> Result<(), String> {
    items.iter().try_for_each(|(name, x)| check(x).map_err(|w| format!("{name} {w}")))
}

fn derived_composition() -> Outcome {
    let start = Instant::now();
    let instances = oracle::two_group_instances();
    each(&instances, |tg| oracle::derived_composition(tg))?;
    let seconds = start.elapsed().as_secs_f64();
    if seconds >= 10.0 {
        return Err(format!("seconds={seconds:.2} target=10"));
    }
    Ok(format!("instances={} seconds={seconds:.2}", instances.len()))
}

fn interchange() -> Outcome {
    let instances = oracle::two_group_instances();
    each(&instances, |tg| oracle::interchange(tg))?;
    let pairs: usize = instances.iter().map(|(_, tg)| oracle::composable_pairs(tg).len().pow(2)).sum();
    Ok(format!("instances={} pairs-of-pairs={pairs}", instances.len()))
}

fn crossed_module_axioms() -> Outcome {
    let instances = oracle::two_group_instances();
    let t = TFunctor::new();
    let images: Vec<(String, Arc<twogrp::CrossedModule>)> = instances
        .iter()
        .map(|(name, tg)| t.object(tg).map(|i| (name.clone(), i.xmod.clone())).map_err(|e| format!("{name} {e}")))
        .try_collect()?;
    each(&images, |xm| oracle::peiffer(xm).map_err(|w| format!("peiffer {w}")))?;
    each(&images, |xm| oracle::equivariance(xm).map_err(|w| format!("equivariance {w}")))?;
    let s_images: Vec<_> = instances.into_iter().filter(|(n, _)| n.starts_with("s0-")).collect();
    each(&s_images, |tg| oracle::category_diagrams(tg))?;
    Ok(format!("t0-images={} s0-images={}", images.len(), s_images.len()))
}

fn functoriality() -> Outcome {
    let xmods = xmod_law_fixtures();
    let two_groups = two_group_law_fixtures();
    let mut carriers: Vec<&Arc<twogrp::CrossedModule>> = Vec::new();
    for m in &xmods.morphisms {
        for xm in [m.value.src(), m.value.dst()] {
            if !carriers.iter().any(|c| same_xmod(c, xm)) {
                carriers.push(xm);
            }
        }
    }
    let (m, e) = (xmods.morphisms.len(), xmods.two_morphisms.len());
    if m < 10 || e < 10 || carriers.len() < 4 {
        return Err(format!("morphisms={m} 2-morphisms={e} carriers={}", carriers.len()));
    }
    let opts = RoundTripOptions::default();
    let mut lines = 0;
    for report in [verify_round_trip_xmods(&xmods, &opts), verify_round_trip_two_groups(&two_groups, &opts)] {
        let functorial: Vec<_> =
            report.lines.iter().filter(|l| l.id.starts_with("S/") || l.id.starts_with("T/")).collect();
        if let Some(l) = functorial.iter().find(|l| !l.passed()) {
            return Err(l.to_string());
        }
        lines += functorial.len();
    }
    if lines < 8 {
        return Err(format!("only {lines} functoriality lines"));
    }
    Ok(format!("morphisms={m} 2-morphisms={e} carriers={}", carriers.len()))
}

fn round_trip() -> Outcome {
    set_max_order(576);
    let start = Instant::now();
    let opts = RoundTripOptions::default();
    let xmods = catalog_xmod_collection(24);
    let two_groups = catalog_two_group_collection(24);
    let mut lines = 0;
    for report in [verify_round_trip_xmods(&xmods, &opts), verify_round_trip_two_groups(&two_groups, &opts)] {
        if let Some(f) = first_failure(&report) {
            return Err(f);
        }
        lines += report.lines.len();
    }
    let seconds = start.elapsed().as_secs_f64();
    if seconds >= 60.0 {
        return Err(format!("seconds={seconds:.2} target=60"));
    }
    Ok(format!(
        "subjects={} arrows={} checks={lines} seconds={seconds:.2}",
        xmods.subjects.len() + two_groups.subjects.len(),
        xmods.morphisms.len() + xmods.two_morphisms.len() + two_groups.morphisms.len() + two_groups.two_morphisms.len(),
    ))
}

fn two_category_laws() -> Outcome {
    let report = check_2category_laws(&xmod_law_fixtures());
    if let Some(f) = first_failure(&report) {
        return Err(f);
    }
    let ids = [
        "morphism-unit",
        "morphism-associativity",
        "vertical-unit",
        "vertical-associativity",
        "horizontal-unit",
        "horizontal-associativity",
        "horizontal-formulas",
        "interchange",
    ];
    if let Some(missing) = ids.iter().find(|id| !report.lines.iter().any(|l| l.id == format!("xmod-laws/{id}"))) {
        return Err(format!("missing={missing}"));
    }
    Ok(format!("laws={}", report.lines.len()))
}

fn central_extensions() -> Outcome {
    let mut detail = Vec::new();
    for (name, tau) in [("Z4->Z2", mod_two()), ("Q8->Z2xZ2", quaternion_quotient())] {
        let sections = all_sections(&tau);
        if sections.len() < 2 {
            return Err(format!("{name} sections={}", sections.len()));
        }
        let built: Vec<_> = sections
            .iter()
            .map(|s| xmod_from_central_extension(&tau, Some(s)).map(Arc::new))
            .try_collect()
            .map_err(|e| format!("{name} {e}"))?;
        if let Some(k) = built.iter().position(|xm| xm.alpha().rows() != built[0].alpha().rows()) {
            return Err(format!("{name} section={:?}", sections[k]));
        }
        detail.push(format!("{name}-sections={}", sections.len()));
    }
    match xmod_from_central_extension(&sign_hom(&catalog::get("S3").expect("catalog group")), None) {
        Err(ConstructionError::KernelNotCentral { k, h }) => detail.push(format!("S3->Z2 rejected k={k} h={h}")),
        other => return Err(format!("S3->Z2 {other:?}")),
    }
    Ok(detail.join(" "))
}

fn all_sections(tau: &GroupHom) -> Vec<Vec<usize>> {
    let fibres: Vec<Vec<usize>> =
        tau.dst().elements().map(|g| tau.src().elements().filter(|&h| tau.apply(h) == g).collect()).collect();
    fibres.into_iter().multi_cartesian_product().collect()
}

fn automorphism_oracle() -> Outcome {
    let groups: Vec<_> = catalog().into_iter().filter(|(_, g)| g.order() <= 8).collect();
    for (name, g) in &groups {
        let aut = automorphism_group(g).map_err(|e| format!("{name} {e}"))?;
        let found: std::collections::BTreeSet<Vec<usize>> =
            aut.group().elements().map(|f| aut.action().row(f).to_vec()).collect();
        let expected = oracle::automorphisms(g);
        if found != expected || aut.group().order() != expected.len() {
            return Err(format!("{name} library={} brute-force={}", aut.group().order(), expected.len()));
        }
    }
    Ok(format!("groups={}", groups.len()))
}

fn mutation_sensitivity() -> Outcome {
    let cases = [
        ("check xmod fixtures/mutations/peiffer.xmod", "peiffer"),
        ("check xmod fixtures/mutations/equivariance.xmod", "equivariance"),
        ("check 2grp fixtures/mutations/interchange.2grp", "interchange"),
        ("check 2grp fixtures/mutations/unit-law.2grp", "unit-law"),
        ("check 2morphism fixtures/mutations/naturality.2morphism", "naturality"),
        ("check 2morphism fixtures/mutations/crossed-law.2morphism", "crossed-law"),
        ("check 2morphism fixtures/mutations/chain-homotopy.2morphism", "chain-homotopy-2"),
        ("roundtrip fixtures/mutations/roundtrip.collection", "onto/zeta-naturality"),
    ];
    for (args, id) in cases {
        let r = common::run(args);
        let failed: Vec<&str> = r.stdout.lines().filter(|l| l.starts_with("FAIL ")).collect();
        let words: Vec<&str> = failed.first().map(|l| l.split_whitespace().collect()).unwrap_or_default();
        let witnessed = words.len() > 2 && words[2..].iter().all(|w| w.contains('='));
        if r.code != 1 || failed.len() != 1 || words.get(1) != Some(&id) || !witnessed {
            return Err(format!("`tg {args}` exit={} failures={failed:?}", r.code));
        }
    }
    Ok(format!("fixtures={}", cases.len()))
}

fn cli() -> Outcome {
    let r = common::run("roundtrip --catalog --max-order 8");
    if r.code != 0 {
        return Err(format!("roundtrip exit={}", r.code));
    }
    if let Some(m) = common::golden_mismatch() {
        return Err(m);
    }
    Ok(format!("golden-files={}", common::GOLDEN.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("derived-composition", derived_composition),
        ("interchange", interchange),
        ("crossed-module-axioms", crossed_module_axioms),
        ("functoriality", functoriality),
        ("round-trip", round_trip),
        ("two-category-laws", two_category_laws),
        ("central-extensions", central_extensions),
        ("automorphism-oracle", automorphism_oracle),
        ("mutation-sensitivity", mutation_sensitivity),
        ("cli", cli),
    ];
    let mut failed = 0;
    for (n, (name, run)) in criteria.into_iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name} {detail}", n + 1),
            Err(witness) => {
                failed += 1;
                println!("FAIL {} {name} {witness}", n + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
