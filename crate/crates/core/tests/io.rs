use std::path::Path;

use proptest::prelude::*;
use twogrp::collection::Named;
use twogrp::constructions::catalog::catalog;
use twogrp::constructions::fixtures::{catalog_two_groups, catalog_xmods, two_group_law_fixtures, xmod_law_fixtures};
use twogrp::crossed_module::same_xmod;
use twogrp::io::{check_str, parse_str, to_text, Kind, LoadError, ParseError, Structure};
use twogrp::two_group::same_two_group;
use twogrp::Outcome;

fn reparse(s: &Structure) -> Structure {
    let text = to_text(s);
    let back = parse_str(&text, None).unwrap_or_else(|e| panic!("{e:?}\n{text}"));
    assert_eq!(to_text(&back), text, "text is not a fixed point");
    back
}

fn syntax_line(text: &str) -> usize {
    match parse_str(text, None) {
        Err(LoadError::Parse(ParseError::Syntax { line, .. })) => line,
        other => panic!("expected a syntax error, got {other:?}"),
    }
}

#[test]
fn groups_survive_serialization() {
    for (name, g) in catalog() {
        match reparse(&Structure::Group(g.clone())) {
            Structure::Group(back) => {
                assert_eq!(back.rows(), g.rows(), "{name}");
                assert_eq!(back.labels(), g.labels(), "{name}");
            }
            other => panic!("{name}: parsed as {:?}", other.kind()),
        }
    }
}

#[test]
fn crossed_modules_survive_serialization() {
    for Named { name, value } in catalog_xmods(12) {
        match reparse(&Structure::XMod(value.clone())) {
            Structure::XMod(back) => assert!(same_xmod(&back, &value), "{name}"),
            other => panic!("{name}: parsed as {:?}", other.kind()),
        }
    }
}

#[test]
fn two_groups_survive_serialization() {
    for Named { name, value } in catalog_two_groups(8) {
        match reparse(&Structure::TwoGroup(value.clone())) {
            Structure::TwoGroup(back) => {
                assert!(same_two_group(&back, &value), "{name}");
                assert!(back.pairs().iter().all(|(a, b)| back.comp(a, b) == value.comp(a, b)), "{name}");
            }
            other => panic!("{name}: parsed as {:?}", other.kind()),
        }
    }
}

#[test]
fn collections_survive_serialization() {
    let xmods = xmod_law_fixtures();
    let s = Structure::XModCollection { collection: xmods.clone(), corrupt: Some("f=e.0".into()) };
    match reparse(&s) {
        Structure::XModCollection { collection, corrupt } => {
            assert_eq!(corrupt.as_deref(), Some("f=e.0"));
            assert_eq!(collection.morphisms.len(), xmods.morphisms.len());
            for (a, b) in collection.two_morphisms.iter().zip(&xmods.two_morphisms) {
                assert_eq!(a.name, b.name);
                assert!(a.value.same_as(&b.value), "{}", a.name);
            }
        }
        other => panic!("parsed as {:?}", other.kind()),
    }
    let two_groups = two_group_law_fixtures();
    let s = Structure::TwoGroupCollection { collection: two_groups.clone(), corrupt: None };
    match reparse(&s) {
        Structure::TwoGroupCollection { collection, corrupt } => {
            assert_eq!(corrupt, None);
            for (a, b) in collection.morphisms.iter().zip(&two_groups.morphisms) {
                assert!(a.value.same_as(&b.value), "{}", a.name);
            }
        }
        other => panic!("parsed as {:?}", other.kind()),
    }
}

#[test]
fn comments_blank_lines_and_version_are_accepted() {
    let text = "# cyclic of order 2\nversion v1\n\ngroup 2   # two rows follow\n0 1\n1 0\n";
    assert_eq!(parse_str(text, None).unwrap().kind(), Kind::Group);
    assert_eq!(syntax_line("version v2\ngroup 1\n0\n"), 1);
}

#[test]
fn shape_errors_name_the_offending_line() {
    assert_eq!(syntax_line("group 3\n0 1 2\n1 2\n2 0 1\n"), 3);
    assert_eq!(syntax_line("group 2\n0 1\n"), 2, "end of input is reported at the last line");
    assert_eq!(syntax_line("group 2\n0 1\n1 x\n"), 3);
    assert_eq!(syntax_line("hom catalog:Z4 catalog:Z2\n0 1 0\n"), 2);
    assert_eq!(syntax_line("bogus 3\n"), 1);
}

#[test]
fn oversized_groups_are_rejected_at_the_header() {
    match parse_str("\ngroup 100000\n", None) {
        Err(LoadError::Parse(ParseError::OrderBound { line: 2, order: 100000, .. })) => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn references_resolve_or_fail_cleanly() {
    let hom = parse_str("hom catalog:Z4 catalog:Z2\n0 1 0 1\n", None).unwrap();
    assert_eq!(hom.kind(), Kind::Hom);
    match parse_str("hom catalog:Z5 catalog:Z2\n0 1 0 1 0\n", None) {
        Err(LoadError::Parse(ParseError::UnresolvedReference(r))) => assert!(r.contains("Z5")),
        other => panic!("{other:?}"),
    }
    let missing = parse_str("hom no-such-file.group catalog:Z2\n0 1\n", Some(Path::new("/nonexistent")));
    assert!(matches!(missing, Err(LoadError::Parse(ParseError::Io { .. } | ParseError::File { .. }))), "{missing:?}");
}

#[test]
fn axiom_violations_are_load_failures_with_a_role() {
    match parse_str("hom catalog:Z2 catalog:Z4\n0 1\n", None) {
        Err(LoadError::Invalid(line)) => assert!(matches!(line.outcome, Outcome::Fail(_)), "{line}"),
        other => panic!("{other:?}"),
    }
    let checked = check_str("hom catalog:Z2 catalog:Z4\n0 1\n", None).unwrap();
    assert!(!checked.report.all_passed());
}

#[test]
fn check_mode_reports_one_line_per_axiom() {
    let text = to_text(&Structure::XMod(catalog_xmods(4).remove(0).value));
    let checked = check_str(&text, None).unwrap();
    assert_eq!(checked.kind, Kind::XMod);
    assert!(checked.report.all_passed());
    assert!(checked.report.lines.iter().any(|l| l.id == "peiffer"));
    assert!(checked.report.lines.iter().any(|l| l.id == "equivariance"));
}

fn valid_documents() -> Vec<String> {
    let xm = catalog_xmods(4).into_iter().find(|n| n.name == "conj-Z2").unwrap().value;
    let tg = catalog_two_groups(4).into_iter().find(|n| n.name == "deloop-Z2").unwrap().value;
    vec![
        to_text(&Structure::XMod(xm)),
        to_text(&Structure::TwoGroup(tg)),
        "hom catalog:Z4 catalog:Z2\n0 1 0 1\n".into(),
        "section\n0 1\n".into(),
        "collection xmod\nsubject a catalog:Z2\n".into(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn arbitrary_text_never_panics(text in "\\PC{0,200}") {
        let _ = parse_str(&text, None);
        let _ = check_str(&text, None);
    }

    #[test]
    fn token_mutations_never_panic(doc in 0usize..5, at in any::<prop::sample::Index>(), token in "(-?[0-9]{1,6}|[a-z-]{1,10}|inline|catalog:[A-Za-z0-9]{1,5}|\n| )") {
        let docs = valid_documents();
        let words: Vec<&str> = docs[doc].split(' ').collect();
        let k = at.index(words.len());
        let mutated: String = words.iter().enumerate()
            .map(|(i, w)| if i == k { token.as_str() } else { w })
            .collect::<Vec<_>>().join(" ");
        let _ = parse_str(&mutated, None);
        let _ = check_str(&mutated, None);
    }
}
