//! Command-line front door for the weakhopf toolkit.
//!
//! Exit codes: 0 = verified/ok, 1 = verification or claim failed,
//! 2 = input or usage error, 3 = inconclusive.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::OnceLock;

use clap::{Args, Parser, Subcommand, ValueEnum};

use weakhopf::axioms::{cross_check, verify, Level};
use weakhopf::catalog::{self, ClaimVerdict, Kind};
use weakhopf::constructions::{
    adjoin_two_units, adjoin_unit_to_bialgebra, adjoin_unit_to_hopf, chain_construction,
    group_bialgebra, max_algebra_whopf, sweedler5, taft_weak_hopf, two_unit_variant,
    weak_from_idempotent, ConstructionError, RawAlgebra, TwoUnitVariant,
};
use weakhopf::docs;
use weakhopf::exactmath::Scalar;
use weakhopf::fingerprint::fingerprint;
use weakhopf::io::{matrix_from_json, read_structure, to_json, write_structure};
use weakhopf::search::{enumerate, estimate, ExecMode, SearchSpec, Unknown};
use weakhopf::structure::WeakStructure;
use weakhopf::transport::{
    group_closure, is_automorphism, is_morphism_witness, stabilizer_tangent_dim, transport,
    BasisChange,
};

fn version_string() -> &'static str {
    static S: OnceLock<String> = OnceLock::new();
    S.get_or_init(|| {
        format!(
            "{} (catalog {})",
            env!("CARGO_PKG_VERSION"),
            catalog::CATALOG_REVISION
        )
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "weakhopf", version = version_string(), about = "exact toolkit for weak bialgebras and weak Hopf algebras")]
struct Cli {
    /// Report format on standard output.
    #[arg(long, global = true, value_enum, default_value = "text")]
    report: ReportFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a structure file against an axiom level.
    Verify {
        file: PathBuf,
        #[arg(long, default_value = "weak-bialgebra")]
        level: String,
        /// Also compare map-level and structure-constant verdicts.
        #[arg(long)]
        cross_check: bool,
    },
    /// Build one of the named constructions.
    Construct(ConstructArgs),
    /// Transport a structure along an invertible matrix.
    Transport {
        file: PathBuf,
        /// JSON array of rows of scalar strings; columns are basis images.
        #[arg(long)]
        matrix: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Automorphism tooling.
    Aut {
        #[command(subcommand)]
        cmd: AutCommand,
    },
    /// Catalog of classified structures.
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCommand,
    },
    /// Grid search over comultiplications on a fixed base algebra.
    Search(SearchArgs),
    /// Isomorphism tooling.
    Iso {
        #[command(subcommand)]
        cmd: IsoCommand,
    },
    /// Generated documentation.
    Docs {
        #[command(subcommand)]
        cmd: DocsCommand,
    },
}

#[derive(Args)]
struct ConstructArgs {
    /// adjoin-two-units | weak-from-idempotent | chain | max-algebra |
    /// adjoin-unit-bialgebra | adjoin-unit-hopf | two-unit-a | two-unit-b |
    /// sweedler5 | taft | group-bialgebra
    name: String,
    /// Input structure file for constructions that extend one.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Tail algebra file for the chain construction.
    #[arg(long)]
    tail: Option<PathBuf>,
    /// Idempotent vector as a JSON array of scalar strings.
    #[arg(long)]
    idempotent: Option<String>,
    /// Dimension-like parameter (max-algebra, taft).
    #[arg(long)]
    n: Option<usize>,
    /// Chain length.
    #[arg(long)]
    p: Option<usize>,
    /// Cyclic group order.
    #[arg(long)]
    k: Option<usize>,
    /// Extend the antipode through the two-unit variants.
    #[arg(long)]
    with_antipode: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum AutCommand {
    /// Check one matrix as an automorphism of a structure.
    Check {
        file: PathBuf,
        #[arg(long)]
        matrix: String,
    },
    /// Closure and order of the group generated by matrices.
    Group {
        /// JSON array of matrices.
        #[arg(long)]
        matrices: String,
        #[arg(long, default_value_t = 10_000)]
        bound: usize,
    },
    /// Stabilizer tangent dimension at the identity.
    Tangent { file: PathBuf },
}

#[derive(Subcommand)]
enum CatalogCommand {
    List {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        kind: Option<String>,
    },
    Show {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify all entries at their levels (the transcription oracle).
    Verify,
    Fingerprint {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        index: usize,
    },
    Separation {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        kind: String,
    },
    Claims {
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        kind: Option<String>,
    },
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    dim: usize,
    /// Index of the base algebra in the catalog's algebra list.
    #[arg(long)]
    algebra: usize,
    /// Comma-separated rational grid, e.g. "-1,0,1,2".
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
    /// Freeze an unknown, e.g. "f[1]=2" or "D[1][2][2]=0"; repeatable.
    #[arg(long)]
    freeze: Vec<String>,
    #[arg(long, default_value = "100000000")]
    budget: String,
    /// Skip the staged pruning (still verifies every candidate).
    #[arg(long)]
    no_prune: bool,
    /// Force single-threaded enumeration.
    #[arg(long)]
    sequential: bool,
    /// Only print candidate-count estimates.
    #[arg(long)]
    estimate: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum IsoCommand {
    /// Check a matrix as an isomorphism witness between two structures.
    Witness {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        matrix: String,
    },
    /// Compare fingerprints: distinct fingerprints separate the structures,
    /// equal fingerprints are inconclusive.
    FingerprintCompare { first: PathBuf, second: PathBuf },
}

#[derive(Subcommand)]
enum DocsCommand {
    Generate {
        #[arg(long)]
        out: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: msg.into(),
        }
    }

    fn math(msg: impl Into<String>) -> Failure {
        Failure {
            code: 1,
            message: msg.into(),
        }
    }
}

impl From<weakhopf::io::IoError> for Failure {
    fn from(e: weakhopf::io::IoError) -> Failure {
        Failure::usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Verify {
            file,
            level,
            cross_check: with_cc,
        } => {
            let h = read_structure(&file)?;
            let level = Level::parse(&level)
                .ok_or_else(|| Failure::usage(format!("unknown level `{}`", level)))?;
            let report = verify(&h, level);
            let cc = with_cc.then(|| cross_check(&h));
            match cli.report {
                ReportFormat::Json => {
                    let mut value = serde_json::to_value(&report).unwrap();
                    if let Some(cc) = &cc {
                        value["cross_check"] = serde_json::to_value(cc).unwrap();
                    }
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                }
                ReportFormat::Text => {
                    print!("{}", report.to_text());
                    if let Some(cc) = &cc {
                        println!("cross-check consistent: {}", cc.consistent);
                        for item in &cc.items {
                            println!(
                                "  {:<14} map={} constants={}",
                                item.name, item.map_pass, item.sc_pass
                            );
                        }
                    }
                }
            }
            let ok = report.pass && cc.is_none_or(|c| c.consistent);
            Ok(if ok { 0 } else { 1 })
        }
        Command::Construct(args) => run_construct(args, cli.report),
        Command::Transport { file, matrix, out } => {
            let h = read_structure(&file)?;
            let m = matrix_from_json(&matrix)?;
            let g = BasisChange::new(m).map_err(|e| Failure::usage(e.to_string()))?;
            let moved = transport(&h, &g).map_err(|e| Failure::usage(e.to_string()))?;
            write_structure(&out, &moved)?;
            println!("transported `{}` -> {}", h.label, out.display());
            Ok(0)
        }
        Command::Aut { cmd } => run_aut(cmd, cli.report),
        Command::Catalog { cmd } => run_catalog(cmd, cli.report),
        Command::Search(args) => run_search(args, cli.report),
        Command::Iso { cmd } => run_iso(cmd, cli.report),
        Command::Docs { cmd } => match cmd {
            DocsCommand::Generate { out } => {
                std::fs::create_dir_all(&out)
                    .map_err(|e| Failure::usage(format!("{}: {}", out.display(), e)))?;
                for (name, contents) in docs::generate().files {
                    let path = out.join(&name);
                    std::fs::write(&path, contents)
                        .map_err(|e| Failure::usage(format!("{}: {}", path.display(), e)))?;
                    println!("wrote {}", path.display());
                }
                Ok(0)
            }
        },
    }
}

fn write_or_print(out: Option<&Path>, h: &WeakStructure) -> Result<(), Failure> {
    match out {
        Some(path) => {
            write_structure(path, h)?;
            println!("wrote `{}` to {}", h.label, path.display());
        }
        None => print!("{}", to_json(h)),
    }
    Ok(())
}

fn run_construct(args: ConstructArgs, _report: ReportFormat) -> Result<u8, Failure> {
    let need_input = |args: &ConstructArgs| -> Result<WeakStructure, Failure> {
        let path = args
            .input
            .as_ref()
            .ok_or_else(|| Failure::usage("this construction needs --input"))?;
        Ok(read_structure(path)?)
    };
    let map_err = |e: ConstructionError| -> Failure {
        match e {
            ConstructionError::BadParameter(m) => Failure::usage(m),
            other => Failure::math(other.to_string()),
        }
    };
    let h = match args.name.as_str() {
        "adjoin-two-units" => {
            let input = need_input(&args)?;
            let raw = RawAlgebra::from_mult(input.algebra.mult.clone());
            adjoin_two_units(&raw).map_err(map_err)?
        }
        "weak-from-idempotent" => {
            let input = need_input(&args)?;
            let text = args
                .idempotent
                .as_ref()
                .ok_or_else(|| Failure::usage("needs --idempotent"))?;
            let coords: Vec<Scalar> =
                serde_json::from_str(text).map_err(|e| Failure::usage(e.to_string()))?;
            if coords.len() != input.dim() {
                return Err(Failure::usage("idempotent vector has the wrong length"));
            }
            weak_from_idempotent(
                &input.algebra,
                &weakhopf::exactmath::Vector::from_entries(coords),
            )
            .map_err(map_err)?
        }
        "chain" => {
            let p = args.p.ok_or_else(|| Failure::usage("chain needs --p"))?;
            let tail = match &args.tail {
                Some(path) => RawAlgebra::from_mult(read_structure(path)?.algebra.mult.clone()),
                None => RawAlgebra::empty(),
            };
            chain_construction(p, &tail).map_err(map_err)?
        }
        "max-algebra" => {
            let n = args
                .n
                .ok_or_else(|| Failure::usage("max-algebra needs --n"))?;
            max_algebra_whopf(n).map_err(map_err)?
        }
        "adjoin-unit-bialgebra" => {
            adjoin_unit_to_bialgebra(&need_input(&args)?).map_err(map_err)?
        }
        "adjoin-unit-hopf" => adjoin_unit_to_hopf(&need_input(&args)?).map_err(map_err)?,
        "two-unit-a" => {
            two_unit_variant(&need_input(&args)?, TwoUnitVariant::A, args.with_antipode)
                .map_err(map_err)?
        }
        "two-unit-b" => {
            two_unit_variant(&need_input(&args)?, TwoUnitVariant::B, args.with_antipode)
                .map_err(map_err)?
        }
        "sweedler5" => sweedler5(),
        "taft" => {
            let n = args.n.ok_or_else(|| Failure::usage("taft needs --n"))?;
            taft_weak_hopf(n).map_err(map_err)?
        }
        "group-bialgebra" => {
            let k = args
                .k
                .ok_or_else(|| Failure::usage("group-bialgebra needs --k"))?;
            if k == 0 {
                return Err(Failure::usage("group order must be positive"));
            }
            group_bialgebra(k)
        }
        other => return Err(Failure::usage(format!("unknown construction `{}`", other))),
    };
    write_or_print(args.out.as_deref(), &h)?;
    Ok(0)
}

fn run_aut(cmd: AutCommand, report: ReportFormat) -> Result<u8, Failure> {
    match cmd {
        AutCommand::Check { file, matrix } => {
            let h = read_structure(&file)?;
            let m = matrix_from_json(&matrix)?;
            let g = BasisChange::new(m).map_err(|e| Failure::usage(e.to_string()))?;
            let check = is_automorphism(&h, &g).map_err(|e| Failure::usage(e.to_string()))?;
            match report {
                ReportFormat::Json => println!(
                    "{}",
                    serde_json::json!({
                        "pass": check.pass,
                        "failure": check.failure.as_ref().map(|f| f.to_string()),
                    })
                ),
                ReportFormat::Text => match &check.failure {
                    None => println!("automorphism: yes"),
                    Some(f) => println!("automorphism: no — {}", f),
                },
            }
            Ok(if check.pass { 0 } else { 1 })
        }
        AutCommand::Group { matrices, bound } => {
            let rows: Vec<Vec<Vec<Scalar>>> =
                serde_json::from_str(&matrices).map_err(|e| Failure::usage(e.to_string()))?;
            let gens: Vec<weakhopf::exactmath::Matrix> = rows
                .into_iter()
                .map(|r| {
                    let n = r.len();
                    if r.iter().any(|row| row.len() != n) {
                        return Err(Failure::usage("matrices must be square"));
                    }
                    Ok(weakhopf::exactmath::Matrix::from_rows(r))
                })
                .collect::<Result<_, _>>()?;
            let els = group_closure(&gens, bound).map_err(|e| Failure::usage(e.to_string()))?;
            println!("order: {}", els.len());
            Ok(0)
        }
        AutCommand::Tangent { file } => {
            let h = read_structure(&file)?;
            let t = stabilizer_tangent_dim(&h);
            match report {
                ReportFormat::Json => println!(
                    "{}",
                    serde_json::json!({"tangent_dim": t.tangent_dim, "orbit_dim": t.orbit_dim})
                ),
                ReportFormat::Text => {
                    println!("tangent dimension: {}", t.tangent_dim);
                    println!("orbit dimension: {}", t.orbit_dim);
                }
            }
            Ok(0)
        }
    }
}

fn parse_kind(s: &str) -> Result<Kind, Failure> {
    Kind::parse(s).ok_or_else(|| Failure::usage(format!("unknown kind `{}`", s)))
}

fn run_catalog(cmd: CatalogCommand, report: ReportFormat) -> Result<u8, Failure> {
    match cmd {
        CatalogCommand::List { dim, kind } => {
            let kind = kind.as_deref().map(parse_kind).transpose()?;
            for e in catalog::all_entries() {
                if dim.is_some_and(|d| d != e.dim) || kind.is_some_and(|k| k != e.kind) {
                    continue;
                }
                println!(
                    "dim {} {:?} ({}) {}",
                    e.dim, e.kind, e.index, e.structure.label
                );
            }
            Ok(0)
        }
        CatalogCommand::Show {
            dim,
            kind,
            index,
            out,
        } => {
            let kind = parse_kind(&kind)?;
            let e = catalog::get(dim, kind, index).map_err(|e| Failure::usage(e.to_string()))?;
            write_or_print(out.as_deref(), &e.structure)?;
            for note in e.notes {
                eprintln!("note: {}", note);
            }
            Ok(0)
        }
        CatalogCommand::Verify => {
            let summary = catalog::verify_all();
            match report {
                ReportFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&summary).unwrap())
                }
                ReportFormat::Text => {
                    println!("entries: {}", summary.total);
                    if summary.failures.is_empty() {
                        println!("all entries verify with exactly zero residuals");
                    } else {
                        for f in &summary.failures {
                            println!("FAIL {}", f);
                        }
                    }
                }
            }
            Ok(if summary.failures.is_empty() { 0 } else { 1 })
        }
        CatalogCommand::Fingerprint { dim, kind, index } => {
            let kind = parse_kind(&kind)?;
            let e = catalog::get(dim, kind, index).map_err(|e| Failure::usage(e.to_string()))?;
            let f = fingerprint(&e.structure);
            println!("{}", serde_json::to_string_pretty(&f).unwrap());
            Ok(0)
        }
        CatalogCommand::Separation { dim, kind } => {
            let kind = parse_kind(&kind)?;
            let sep = catalog::pairwise_separation(dim, kind);
            match report {
                ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&sep).unwrap()),
                ReportFormat::Text => {
                    for c in &sep.cells {
                        println!(
                            "({}, {}): {}",
                            c.first,
                            c.second,
                            c.separated_by.as_deref().unwrap_or("inconclusive")
                        );
                    }
                }
            }
            Ok(if sep.inconclusive_pairs.is_empty() {
                0
            } else {
                3
            })
        }
        CatalogCommand::Claims { dim, kind } => {
            let kind = kind.as_deref().map(parse_kind).transpose()?;
            let mut statuses = Vec::new();
            for (d, k) in [
                (2, Kind::WeakBialgebra),
                (2, Kind::WeakHopf),
                (3, Kind::WeakBialgebra),
                (3, Kind::WeakHopf),
            ] {
                if dim.is_some_and(|x| x != d) || kind.is_some_and(|x| x != k) {
                    continue;
                }
                statuses.extend(catalog::verify_claims(d, k));
            }
            match report {
                ReportFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&statuses).unwrap())
                }
                ReportFormat::Text => {
                    for s in &statuses {
                        println!(
                            "dim {} {:?} ({}): {:?} — {}",
                            s.dim, s.kind, s.index, s.verdict, s.detail
                        );
                    }
                }
            }
            let any_refuted = statuses.iter().any(|s| s.verdict == ClaimVerdict::Refuted);
            let any_inconclusive = statuses
                .iter()
                .any(|s| s.verdict == ClaimVerdict::Inconclusive);
            Ok(if any_refuted {
                1
            } else if any_inconclusive {
                3
            } else {
                0
            })
        }
    }
}

fn run_search(args: SearchArgs, report: ReportFormat) -> Result<u8, Failure> {
    let base =
        catalog::base_algebra(args.dim, args.algebra).map_err(|e| Failure::usage(e.to_string()))?;
    let coeffs: Vec<Scalar> = args
        .coeffs
        .split(',')
        .map(|t| t.trim().parse::<Scalar>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::usage(format!("bad coefficient grid: {}", e)))?;
    let mut spec = SearchSpec::new(base, coeffs);
    spec.budget = args
        .budget
        .parse()
        .map_err(|_| Failure::usage("budget must be a nonnegative integer"))?;
    spec.prune = !args.no_prune;
    if args.sequential {
        spec.mode = ExecMode::Sequential;
    }
    for f in &args.freeze {
        let (lhs, rhs) = f
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("bad freeze `{}`", f)))?;
        let unknown = Unknown::parse(lhs)
            .ok_or_else(|| Failure::usage(format!("bad freeze unknown `{}`", lhs)))?;
        let value: Scalar = rhs
            .trim()
            .parse()
            .map_err(|e| Failure::usage(format!("bad freeze value: {}", e)))?;
        spec.freeze.push((unknown, value));
    }
    if args.estimate {
        let est = estimate(&spec);
        println!("{}", serde_json::to_string_pretty(&est).unwrap());
        return Ok(0);
    }
    let outcome = enumerate(&spec).map_err(|e| Failure::usage(e.to_string()))?;
    let summary = serde_json::json!({
        "dim": args.dim,
        "algebra": args.algebra,
        "grid": spec.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "pre_prune_candidates": outcome.pre_prune_count.to_string(),
        "survivors": outcome.hits.len(),
        "classes": outcome.classes,
    });
    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir)
            .map_err(|e| Failure::usage(format!("{}: {}", dir.display(), e)))?;
        for (i, hit) in outcome.hits.iter().enumerate() {
            let mut named = hit.structure.clone();
            named.label = format!("search-survivor-{:04}", i);
            write_structure(&dir.join(format!("survivor_{:04}.json", i)), &named)?;
        }
        let path = dir.join("summary.json");
        std::fs::write(
            &path,
            serde_json::to_string_pretty(&summary).unwrap() + "\n",
        )
        .map_err(|e| Failure::usage(format!("{}: {}", path.display(), e)))?;
    }
    match report {
        ReportFormat::Json => println!("{}", serde_json::to_string_pretty(&summary).unwrap()),
        ReportFormat::Text => {
            println!("pre-prune candidates: {}", outcome.pre_prune_count);
            println!("survivors: {}", outcome.hits.len());
            for c in &outcome.classes {
                println!(
                    "  class of {} survivor(s), catalog matches {:?}",
                    c.members.len(),
                    c.catalog_matches
                );
            }
        }
    }
    Ok(0)
}

fn run_iso(cmd: IsoCommand, report: ReportFormat) -> Result<u8, Failure> {
    match cmd {
        IsoCommand::Witness {
            first,
            second,
            matrix,
        } => {
            let h1 = read_structure(&first)?;
            let h2 = read_structure(&second)?;
            let m = matrix_from_json(&matrix)?;
            let g = BasisChange::new(m).map_err(|e| Failure::usage(e.to_string()))?;
            let check =
                is_morphism_witness(&h1, &h2, &g).map_err(|e| Failure::usage(e.to_string()))?;
            match report {
                ReportFormat::Json => println!(
                    "{}",
                    serde_json::json!({
                        "pass": check.pass,
                        "failure": check.failure.as_ref().map(|f| f.to_string()),
                    })
                ),
                ReportFormat::Text => match &check.failure {
                    None => println!("witness accepted: the matrix is an isomorphism"),
                    Some(f) => println!("witness rejected — {}", f),
                },
            }
            Ok(if check.pass { 0 } else { 1 })
        }
        IsoCommand::FingerprintCompare { first, second } => {
            let h1 = read_structure(&first)?;
            let h2 = read_structure(&second)?;
            let f1 = fingerprint(&h1);
            let f2 = fingerprint(&h2);
            let diff = f1.first_difference(&f2);
            match report {
                ReportFormat::Json => println!(
                    "{}",
                    serde_json::json!({
                        "separated_by": diff,
                        "first": f1,
                        "second": f2,
                    })
                ),
                ReportFormat::Text => match diff {
                    Some(component) => println!("separated by: {}", component),
                    None => println!("fingerprints agree: inconclusive"),
                },
            }
            // Distinct fingerprints refute isomorphism; equal ones decide nothing.
            Ok(if diff.is_some() { 1 } else { 3 })
        }
    }
}
