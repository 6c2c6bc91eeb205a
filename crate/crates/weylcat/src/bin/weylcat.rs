//! Command-line front end: construct, inspect, decompose, dualize, localize,
//! and enumerate weight modules, plus the acceptance selftest.
//!
//! Exit codes: 0 success, 1 domain error (the message names the violated
//! invariant), 2 usage error. All output is deterministic for a fixed
//! --seed; rationals print exactly as p/q, never as floats.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use weylcat::blocks::{std_module, StdKind, WeightModule};
use weylcat::error::Error;
use weylcat::io::{module_to_string, read_module, write_module};
use weylcat::localization::{twisted_localize, Direction};
use weylcat::quiver::{classify, decompose};
use weylcat::rat::{rat, rat_from_str, rat_to_string, Rat};
use weylcat::sp4_catalog::{catalog, support_diagram, CosetType, JordanPoint, SemiOrientation};
use weylcat::sp_bridge::{sp_support, Coset};

#[derive(Parser)]
#[command(
    name = "weylcat",
    about = "Exact computations with weight modules over Weyl algebras and bounded sp(2n)-modules",
    long_about = None,
    version
)]
struct Cli {
    /// Seed for every randomized search (deterministic output per seed)
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a standard module and write it as a module file
    Construct(ConstructArgs),
    /// Decompose a module file into labeled indecomposable summands
    Decompose { file: PathBuf },
    /// Write the restricted dual of a module
    Dual {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Localize (and optionally twist) a module along chosen directions
    Localize {
        file: PathBuf,
        /// Comma-separated directions like t1,d2
        #[arg(long)]
        dirs: String,
        /// Comma-separated rational shifts, one per direction
        #[arg(long)]
        twist: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Multiplicity table over sp-weights for one coset of the support
    SpSupport {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = CosetArg::Even)]
        coset: CosetArg,
        /// Box of offsets per coordinate, like -3..3,-3..3
        #[arg(long = "box")]
        box_: String,
    },
    /// Enumerate catalog entries for a coset type
    Catalog {
        #[arg(long, value_enum)]
        coset_type: CosetTypeArg,
        #[arg(long, default_value_t = 1)]
        kmax: usize,
        /// Jordan points for the highest-weight type, like 0,1,-1,1/2,oo
        #[arg(long)]
        params: Option<String>,
        /// Support shifts for semi-plane (one) and cuspidal (two) types
        #[arg(long)]
        shifts: Option<String>,
    },
    /// ASCII support diagram of a rank-two module
    Diagram {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        radius: i64,
        #[arg(long, value_enum)]
        coset: Option<CosetArg>,
    },
    /// Run the acceptance suite; nonzero exit on any failure
    Selftest,
}

#[derive(Args)]
struct ConstructArgs {
    /// Module kind: F, P (covers P(s) through the signs of --mu), or L
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Comma-separated rational weight, e.g. "0" or "1/2,-1"
    #[arg(long)]
    mu: String,
    /// Number of variables; inferred from --mu when omitted
    #[arg(short)]
    n: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    F,
    P,
    L,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CosetArg {
    Even,
    Odd,
}

impl From<CosetArg> for Coset {
    fn from(c: CosetArg) -> Coset {
        match c {
            CosetArg::Even => Coset::Even,
            CosetArg::Odd => Coset::Odd,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CosetTypeArg {
    /// highest-weight type (integral block)
    Hw,
    /// semi-plane type with the first coordinate free
    SemiNwes,
    /// semi-plane type with the second coordinate free
    SemiNesw,
    /// cuspidal type (both coordinates free)
    Cusp,
}

fn parse_rat_list(s: &str) -> Result<Vec<Rat>, Error> {
    s.split(',')
        .map(|p| rat_from_str(p.trim()))
        .collect::<Result<Vec<_>, _>>()
}

fn parse_dirs(s: &str) -> Result<Vec<Direction>, Error> {
    s.split(',')
        .map(|p| {
            let p = p.trim();
            if p.len() < 2 {
                return Err(Error::Parse(format!("bad direction {p:?}")));
            }
            let (side, idx) = p.split_at(1);
            let coord: usize = idx
                .parse()
                .map_err(|_| Error::Parse(format!("bad direction {p:?}")))?;
            if coord == 0 {
                return Err(Error::Parse("direction coordinates are 1-based".into()));
            }
            match side {
                "t" => Ok(Direction::t(coord - 1)),
                "d" => Ok(Direction::d(coord - 1)),
                _ => Err(Error::Parse(format!(
                    "direction {p:?} must start with t or d"
                ))),
            }
        })
        .collect()
}

fn parse_box(s: &str) -> Result<(Vec<i64>, Vec<i64>), Error> {
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for part in s.split(',') {
        let (a, b) = part
            .trim()
            .split_once("..")
            .ok_or_else(|| Error::Parse(format!("box range {part:?} must be lo..hi")))?;
        lo.push(
            a.parse()
                .map_err(|_| Error::Parse(format!("bad bound {a:?}")))?,
        );
        hi.push(
            b.parse()
                .map_err(|_| Error::Parse(format!("bad bound {b:?}")))?,
        );
    }
    Ok((lo, hi))
}

fn emit_module(m: &WeightModule, output: Option<&PathBuf>) -> Result<(), Error> {
    match output {
        Some(path) => {
            write_module(m, path)?;
            println!("wrote {}", path.display());
            Ok(())
        }
        None => {
            print!("{}", module_to_string(m));
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Construct(args) => {
            let mu = parse_rat_list(&args.mu)?;
            if let Some(n) = args.n {
                if n != mu.len() {
                    return Err(Error::DimMismatch(format!(
                        "-n {n} disagrees with a length-{} weight",
                        mu.len()
                    )));
                }
            }
            let kind = match args.kind {
                KindArg::F => StdKind::F,
                KindArg::P => StdKind::P,
                KindArg::L => StdKind::L,
            };
            let m = std_module(kind, &mu)?;
            emit_module(&m, args.output.as_ref())
        }
        Command::Decompose { file } => {
            let m = read_module(&file)?;
            let parts = decompose(&m.rep, cli.seed)?;
            if parts.len() == 1 && parts[0].1 == 1 {
                let label = classify(&parts[0].0, cli.seed)?;
                println!("indecomposable: {}", label.display());
            } else {
                for (rep, mult) in &parts {
                    let label = classify(rep, cli.seed)?;
                    println!("summand x{mult}: {}", label.display());
                }
            }
            Ok(())
        }
        Command::Dual { file, output } => {
            let m = read_module(&file)?;
            emit_module(&weylcat::blocks::dual(&m), output.as_ref())
        }
        Command::Localize {
            file,
            dirs,
            twist,
            output,
        } => {
            let m = read_module(&file)?;
            let gamma = parse_dirs(&dirs)?;
            let x = match twist {
                Some(t) => parse_rat_list(&t)?,
                None => vec![rat(0); gamma.len()],
            };
            let result = twisted_localize(&m, &gamma, &x)?;
            emit_module(&result, output.as_ref())
        }
        Command::SpSupport { file, coset, box_ } => {
            let m = read_module(&file)?;
            let (lo, hi) = parse_box(&box_)?;
            let table = sp_support(&m, coset.into(), &lo, &hi)?;
            let rows: Vec<serde_json::Value> = table
                .iter()
                .map(|(w, d)| {
                    serde_json::json!({
                        "mu": w.iter().map(rat_to_string).collect::<Vec<_>>(),
                        "dim": d,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({ "weights": rows }))?
            );
            Ok(())
        }
        Command::Catalog {
            coset_type: ty,
            kmax,
            params,
            shifts,
        } => {
            let points = match params {
                Some(p) => p
                    .split(',')
                    .map(|s| JordanPoint::parse(s.trim()))
                    .collect::<Result<Vec<_>, _>>()?,
                None => vec![],
            };
            let shift_vals = match shifts {
                Some(s) => parse_rat_list(&s)?,
                None => vec![],
            };
            let ty = match ty {
                CosetTypeArg::Hw => CosetType::HighestWeight,
                CosetTypeArg::SemiNwes => CosetType::SemiPlane(SemiOrientation::NwEs),
                CosetTypeArg::SemiNesw => CosetType::SemiPlane(SemiOrientation::NeSw),
                CosetTypeArg::Cusp => CosetType::Cuspidal,
            };
            let entries = catalog(ty, kmax, &points, &shift_vals, cli.seed)?;
            let rows: Vec<serde_json::Value> = entries
                .iter()
                .map(|e| {
                    let corners: BTreeMap<String, usize> = e.support.corners.clone();
                    serde_json::json!({
                        "name": e.name,
                        "label": e.label.display(),
                        "support": {"kind": e.support.kind, "corners": corners},
                        "module": weylcat::io::module_to_json(&e.module),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&serde_json::json!(rows))?);
            Ok(())
        }
        Command::Diagram {
            file,
            radius,
            coset,
        } => {
            let m = read_module(&file)?;
            let pic = support_diagram(&m, radius, coset.map(Into::into))?;
            println!("legend: digit = weight multiplicity, . = empty, blank = off-lattice");
            println!("{pic}");
            Ok(())
        }
        Command::Selftest => {
            let golden = weylcat::acceptance::FIGURE_GOLDEN;
            let results = weylcat::acceptance::run_all(cli.seed, golden);
            let mut failed = 0usize;
            for (id, name, result) in &results {
                match result {
                    Ok(detail) => println!("[PASS] {id:>2} {name}: {detail}"),
                    Err(e) => {
                        failed += 1;
                        println!("[FAIL] {id:>2} {name}: {e}");
                    }
                }
            }
            if failed > 0 {
                return Err(Error::Acceptance(format!("{failed} criteria failed")));
            }
            println!("all {} criteria passed", results.len());
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
