//! Running the `tg` binary and comparing against golden transcripts.

#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

/// Golden transcripts: file stem, arguments, expected exit code.
pub const GOLDEN: &[(&str, &str, i32)] = &[
    ("check-group-s3", "check group fixtures/valid/s3.group", 0),
    ("check-2grp-z4-deloop", "check 2grp fixtures/valid/z4-deloop.2grp", 0),
    ("check-2grp-z4-discrete", "check 2grp fixtures/valid/z4-discrete.2grp", 0),
    ("check-2grp-z4-to-z2-s0", "check 2grp fixtures/valid/z4-to-z2-s0.2grp", 0),
    ("check-xmod-q8-to-z2xz2", "check xmod fixtures/valid/q8-to-z2xz2.xmod", 0),
    ("check-morphism-onto-conj", "check morphism fixtures/valid/z4-to-z2-onto-conj.morphism", 0),
    ("check-2morphism-onto-conj-unit", "check 2morphism fixtures/valid/z4-to-z2-onto-conj-unit.2morphism", 0),
    ("mutation-peiffer", "check xmod fixtures/mutations/peiffer.xmod", 1),
    ("mutation-equivariance", "check xmod fixtures/mutations/equivariance.xmod", 1),
    ("mutation-interchange", "check 2grp fixtures/mutations/interchange.2grp", 1),
    ("mutation-unit-law", "check 2grp fixtures/mutations/unit-law.2grp", 1),
    ("mutation-naturality", "check 2morphism fixtures/mutations/naturality.2morphism", 1),
    ("mutation-crossed-law", "check 2morphism fixtures/mutations/crossed-law.2morphism", 1),
    ("mutation-chain-homotopy", "check 2morphism fixtures/mutations/chain-homotopy.2morphism", 1),
    ("mutation-roundtrip", "roundtrip fixtures/mutations/roundtrip.collection", 1),
    ("invalid-ragged", "check group fixtures/invalid/ragged.group", 2),
    ("convert-z4-deloop-to-xmod", "convert to-xmod fixtures/valid/z4-deloop.2grp", 0),
    ("convert-z4-to-z2-to-2grp", "convert to-2grp fixtures/valid/z4-to-z2.xmod", 0),
    (
        "extension-z4-to-z2",
        "from-central-extension fixtures/valid/z4-to-z2.hom --section fixtures/valid/z4-to-z2-section-b.section",
        0,
    ),
    (
        "extension-q8-to-z2xz2",
        "from-central-extension fixtures/valid/q8-to-z2xz2.hom --section fixtures/valid/q8-to-z2xz2-section-b.section",
        0,
    ),
    ("extension-s3-sign", "from-central-extension fixtures/valid/s3-sign.hom", 1),
    ("roundtrip-small", "roundtrip fixtures/valid/small.collection", 0),
    ("roundtrip-catalog-8", "roundtrip --catalog --max-order 8", 0),
    ("catalog-list", "catalog list", 0),
    ("catalog-get-q8", "catalog get Q8", 0),
];

/// The directory the binary runs in; fixture paths are relative to it.
pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn golden_path(name: &str) -> PathBuf {
    tests_dir().join("golden").join(format!("{name}.txt"))
}

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run(args: &str) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_tg"))
        .args(args.split_whitespace())
        .current_dir(tests_dir())
        .env_remove("TG_MAX_ORDER")
        .output()
        .expect("tg runs");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("tg exits normally"),
    }
}

/// Everything a golden file records about one invocation.
pub fn transcript(args: &str) -> (String, i32) {
    let r = run(args);
    (format!("$ tg {args}\n{}[stderr]\n{}[exit {}]\n", r.stdout, r.stderr, r.code), r.code)
}

/// First golden mismatch, if any. Each command runs twice so a
/// nondeterministic report fails even when it happens to match the file.
pub fn golden_mismatch() -> Option<String> {
    for &(name, args, expected_code) in GOLDEN {
        let (first, code) = transcript(args);
        let (second, _) = transcript(args);
        if first != second {
            return Some(format!("{name}: output differs between runs"));
        }
        if code != expected_code {
            return Some(format!("{name}: exit {code}, expected {expected_code}"));
        }
        match std::fs::read_to_string(golden_path(name)) {
            Ok(stored) if stored == first => {}
            Ok(_) => return Some(format!("{name}: differs from {}", golden_path(name).display())),
            Err(e) => return Some(format!("{name}: {e}")),
        }
    }
    None
}
