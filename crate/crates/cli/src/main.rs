//! `tg`: command-line access to finite strict 2-groups and crossed
//! modules stored in the text format of `twogrp::io`.
//!
//! Exit codes: 0 when every check passes, 1 when a structure violates an
//! axiom (the report names the check and a witness), 2 on unreadable or
//! malformed input and usage errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use twogrp::bound::set_max_order;
use twogrp::collection::{Named, TwoGroupCollection, XModCollection};
use twogrp::constructions::fixtures::{catalog_two_group_collection, catalog_xmod_collection};
use twogrp::constructions::{catalog, is_central_extension, xmod_from_central_extension};
use twogrp::equivalence::{
    verify_round_trip_two_groups, verify_round_trip_xmods, RoundTripOptions, SFunctor, TFunctor,
};
use twogrp::io::{check_path, load_path, to_text, Kind, LoadError, Structure};
use twogrp::{CheckLine, Report, Violation};

#[derive(Parser)]
#[command(name = "tg", version, about = "Finite strict 2-groups and crossed modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a structure and print one line per axiom family.
    Check {
        #[arg(value_enum)]
        kind: CheckKind,
        file: PathBuf,
    },
    /// Apply T (to-xmod) or S (to-2grp) to an object, morphism or 2-morphism.
    Convert {
        #[arg(value_enum)]
        direction: Direction,
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Verify the round-trip witnesses and functoriality on a file or the catalog.
    Roundtrip {
        #[arg(required_unless_present = "catalog", conflicts_with = "catalog")]
        file: Option<PathBuf>,
        /// Use the built-in catalog collections.
        #[arg(long)]
        catalog: bool,
        /// Largest catalog group order to include.
        #[arg(long, requires = "catalog", default_value_t = 24)]
        max_order: usize,
        /// Alter one round-trip image entry of the named arrow.
        #[arg(long)]
        corrupt: Option<String>,
    },
    /// Build the crossed module of a central extension `tau: H → G`.
    FromCentralExtension {
        tau: PathBuf,
        #[arg(long)]
        section: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List or export the built-in groups.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Print each name with its order.
    List,
    /// Print a group in the group file format.
    Get { name: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Group,
    #[value(name = "2grp")]
    TwoGroup,
    Xmod,
    Morphism,
    #[value(name = "2morphism")]
    TwoMorphism,
}

impl CheckKind {
    fn accepts(self, kind: Kind) -> bool {
        match self {
            CheckKind::Group => kind == Kind::Group,
            CheckKind::TwoGroup => kind == Kind::TwoGroup,
            CheckKind::Xmod => kind == Kind::XMod,
            CheckKind::Morphism => matches!(kind, Kind::XModMorphism | Kind::TwoGroupMorphism),
            CheckKind::TwoMorphism => matches!(kind, Kind::XMod2Morphism | Kind::TwoGroup2Morphism),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    ToXmod,
    #[value(name = "to-2grp")]
    To2grp,
}

/// A failure carrying its exit code.
enum Failure {
    /// Axiom violation, already printed as report lines.
    Check,
    /// Unreadable or malformed input.
    Input(String),
}

type Outcome = Result<(), Failure>;

fn input(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn load(path: &Path) -> Result<Structure, Failure> {
    match load_path(path) {
        Ok(s) => Ok(s),
        Err(LoadError::Parse(e)) => Err(input(e)),
        Err(LoadError::Invalid(line)) => {
            println!("{line}");
            Err(Failure::Check)
        }
    }
}

fn emit(text: &str, output: Option<&Path>) -> Outcome {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_report(report: &Report) -> Outcome {
    print!("{report}");
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn check(kind: CheckKind, file: &Path) -> Outcome {
    let checked = check_path(file).map_err(input)?;
    if !kind.accepts(checked.kind) {
        return Err(input(format!(
            "{}: expected a different kind of document, found `{}`",
            file.display(),
            checked.kind.keyword()
        )));
    }
    print_report(&checked.report)
}

fn convert(direction: Direction, file: &Path, output: Option<&Path>) -> Outcome {
    let structure = load(file)?;
    let (t, s) = (TFunctor::new(), SFunctor::new());
    let converted = match (direction, structure) {
        (Direction::ToXmod, Structure::TwoGroup(tg)) => {
            let image = t.object(&tg).map_err(input)?;
            eprintln!("carriers g={} h={}", image.xmod.g().order(), image.xmod.h().order());
            Structure::XMod(image.xmod.clone())
        }
        (Direction::ToXmod, Structure::TwoGroupMorphism(m)) => Structure::XModMorphism(t.morphism(&m).map_err(input)?),
        (Direction::ToXmod, Structure::TwoGroup2Morphism(th)) => {
            Structure::XMod2Morphism(t.two_morphism(&th).map_err(input)?)
        }
        (Direction::To2grp, Structure::XMod(xm)) => {
            let tg = s.object(&xm).map_err(input)?;
            eprintln!("carriers g0={} g1={}", tg.g0().order(), tg.g1().order());
            Structure::TwoGroup(tg)
        }
        (Direction::To2grp, Structure::XModMorphism(m)) => Structure::TwoGroupMorphism(s.morphism(&m).map_err(input)?),
        (Direction::To2grp, Structure::XMod2Morphism(e)) => {
            Structure::TwoGroup2Morphism(s.two_morphism(&e).map_err(input)?)
        }
        (_, other) => return Err(input(format!("cannot convert a `{}` in this direction", other.kind().keyword()))),
    };
    emit(&to_text(&converted), output)
}

/// Renames every line `id` to `prefix/id`.
fn prefixed(prefix: &str, report: Report) -> Report {
    let mut out = Report::new();
    for line in report.lines {
        out.push(CheckLine { id: format!("{prefix}/{}", line.id), outcome: line.outcome });
    }
    out
}

fn arrow_names_xmod(c: &XModCollection) -> impl Iterator<Item = &String> {
    c.morphisms.iter().map(|n| &n.name).chain(c.two_morphisms.iter().map(|n| &n.name))
}

fn arrow_names_two_group(c: &TwoGroupCollection) -> impl Iterator<Item = &String> {
    c.morphisms.iter().map(|n| &n.name).chain(c.two_morphisms.iter().map(|n| &n.name))
}

fn subject_name(file: &Path) -> String {
    file.file_stem().map_or_else(|| "subject".to_string(), |s| s.to_string_lossy().into_owned())
}

fn roundtrip(file: Option<&Path>, catalog_order: Option<usize>, corrupt: Option<String>) -> Outcome {
    if let Some(n) = catalog_order {
        let (xmods, two_groups) = (catalog_xmod_collection(n), catalog_two_group_collection(n));
        // A corrupted name goes to each side that has it; an unknown name is
        // reported once, by the crossed-module side.
        let in_xmods = corrupt.as_ref().is_some_and(|c| arrow_names_xmod(&xmods).any(|n| n == c));
        let in_two_groups = corrupt.as_ref().is_some_and(|c| arrow_names_two_group(&two_groups).any(|n| n == c));
        let xmod_opts = RoundTripOptions { corrupt: corrupt.clone().filter(|_| in_xmods || !in_two_groups) };
        let two_group_opts = RoundTripOptions { corrupt: corrupt.filter(|_| in_two_groups) };
        let mut report = prefixed("xmod", verify_round_trip_xmods(&xmods, &xmod_opts));
        report.extend(prefixed("2grp", verify_round_trip_two_groups(&two_groups, &two_group_opts)));
        return print_report(&report);
    }
    let file = file.expect("clap requires a file without --catalog");
    let name = subject_name(file);
    let mut two_groups = TwoGroupCollection::default();
    let mut xmods = XModCollection::default();
    let mut from_file = None;
    match load(file)? {
        Structure::TwoGroup(tg) => two_groups.subjects.push(Named::new(name, tg)),
        Structure::XMod(xm) => xmods.subjects.push(Named::new(name, xm)),
        Structure::TwoGroupMorphism(m) => {
            two_groups.subjects.push(Named::new("src", m.src().clone()));
            two_groups.subjects.push(Named::new("dst", m.dst().clone()));
            two_groups.morphisms.push(Named::new(name, m));
        }
        Structure::XModMorphism(m) => {
            xmods.subjects.push(Named::new("src", m.src().clone()));
            xmods.subjects.push(Named::new("dst", m.dst().clone()));
            xmods.morphisms.push(Named::new(name, m));
        }
        Structure::TwoGroup2Morphism(th) => {
            two_groups.subjects.push(Named::new("src", th.source().src().clone()));
            two_groups.subjects.push(Named::new("dst", th.source().dst().clone()));
            two_groups.morphisms.push(Named::new("source", th.source().clone()));
            two_groups.morphisms.push(Named::new("target", th.target().clone()));
            two_groups.two_morphisms.push(Named::new(name, th));
        }
        Structure::XMod2Morphism(e) => {
            xmods.subjects.push(Named::new("src", e.source().src().clone()));
            xmods.subjects.push(Named::new("dst", e.source().dst().clone()));
            xmods.morphisms.push(Named::new("source", e.source().clone()));
            xmods.morphisms.push(Named::new("target", e.target().clone()));
            xmods.two_morphisms.push(Named::new(name, e));
        }
        Structure::TwoGroupCollection { collection, corrupt } => {
            two_groups = collection;
            from_file = corrupt;
        }
        Structure::XModCollection { collection, corrupt } => {
            xmods = collection;
            from_file = corrupt;
        }
        other => return Err(input(format!("cannot round-trip a `{}`", other.kind().keyword()))),
    }
    let opts = RoundTripOptions { corrupt: corrupt.or(from_file) };
    let mut report = Report::new();
    if !xmods.subjects.is_empty() {
        report.extend(verify_round_trip_xmods(&xmods, &opts));
    }
    if !two_groups.subjects.is_empty() {
        report.extend(verify_round_trip_two_groups(&two_groups, &opts));
    }
    print_report(&report)
}

fn from_central_extension(tau: &Path, section: Option<&Path>, output: Option<&Path>) -> Outcome {
    let Structure::Hom(tau) = load(tau)? else {
        return Err(input(format!("{}: expected a `hom` document", tau.display())));
    };
    let section = match section {
        Some(path) => match load(path)? {
            Structure::Section(images) => Some(images),
            _ => return Err(input(format!("{}: expected a `section` document", path.display()))),
        },
        None => None,
    };
    let fail = |e: &dyn Violation| {
        println!("{}", CheckLine::fail(e.check_id(), e.witness()));
        Failure::Check
    };
    is_central_extension(&tau).map_err(|e| fail(&e))?;
    let xm = xmod_from_central_extension(&tau, section.as_deref()).map_err(|e| fail(&e))?;
    emit(&to_text(&Structure::XMod(Arc::new(xm))), output)
}

fn catalog_command(command: CatalogCommand) -> Outcome {
    match command {
        CatalogCommand::List => {
            for (name, g) in catalog::catalog() {
                println!("{name} {}", g.order());
            }
            Ok(())
        }
        CatalogCommand::Get { name } => {
            let g = catalog::get(&name).ok_or_else(|| input(format!("no catalog group named `{name}`")))?;
            print!("{}", to_text(&Structure::Group(g)));
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Outcome {
    if let Ok(value) = std::env::var("TG_MAX_ORDER") {
        let bound: usize =
            value.parse().map_err(|_| input(format!("TG_MAX_ORDER must be a positive integer, found `{value}`")))?;
        set_max_order(bound);
    }
    match cli.command {
        Command::Check { kind, file } => check(kind, &file),
        Command::Convert { direction, file, output } => convert(direction, &file, output.as_deref()),
        Command::Roundtrip { file, catalog, max_order: n, corrupt } => {
            roundtrip(file.as_deref(), catalog.then_some(n), corrupt)
        }
        Command::FromCentralExtension { tau, section, output } => {
            from_central_extension(&tau, section.as_deref(), output.as_deref())
        }
        Command::Catalog { command } => catalog_command(command),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
