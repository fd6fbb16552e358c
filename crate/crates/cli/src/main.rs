use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dunkl_slice::dirac;
use dunkl_slice::io::{basis_to_value, parse_poly, parse_root_system, serialize_poly};
use dunkl_slice::ops::apply_named;
use dunkl_slice::suite::{run_suite, Selector, SuiteConfig};
use dunkl_slice::{CliffPoly, Error, RootSystem};

#[derive(Parser)]
#[command(name = "dunkl-slice", about = "Exact Dunkl, Dirac and slice-function computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Ambient dimension m
    #[arg(long)]
    m: Option<usize>,
    /// Root-system file
    #[arg(long)]
    config: Option<PathBuf>,
    /// Emit JSON
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a named operator to a polynomial file
    Apply {
        op: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Run a verification suite
    Suite {
        selector: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, default_value_t = 8)]
        max_power: u32,
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
    /// Homogeneous Dunkl-monogenic generators of a given degree
    Basis {
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Inverse intertwining of a polynomial file
    Intertwine {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Fueter map of a slice regular polynomial, or the Fueter suite without --in
    Fueter {
        #[arg(long = "in")]
        input: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(long, default_value_t = 8)]
        max_power: u32,
    },
    /// Print the version
    Version,
}

enum Failure {
    Input(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_root_system(common: &Common) -> Result<Option<RootSystem>, Failure> {
    let Some(path) = &common.config else { return Ok(None) };
    let rs = parse_root_system(&read(path)?)?;
    if let Some(m) = common.m {
        if m != rs.dim() {
            return Err(Error::DimensionMismatch { left: m, right: rs.dim() }.into());
        }
    }
    Ok(Some(rs))
}

fn load_poly(path: &Path, common: &Common) -> Result<CliffPoly, Failure> {
    let p = parse_poly(&read(path)?)?;
    if let Some(m) = common.m {
        if m != p.dim() {
            return Err(Error::DimensionMismatch { left: m, right: p.dim() }.into());
        }
    }
    Ok(p)
}

fn apply(op: &str, input: &Path, common: &Common) -> Result<(), Failure> {
    let p = load_poly(input, common)?;
    let rs = load_root_system(common)?.unwrap_or_else(|| RootSystem::trivial(p.dim()));
    let out = apply_named(op, &rs, &p)?;
    println!("{}", serialize_poly(&out));
    Ok(())
}

fn suite(selector: Selector, common: &Common, cfg: SuiteConfig) -> Result<(), Failure> {
    let cfg = SuiteConfig { m: common.m, root_system: load_root_system(common)?, ..cfg };
    let report = run_suite(selector, &cfg)?;
    if common.json {
        println!("{}", report.to_json());
    } else {
        println!("{report}");
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn basis(degree: usize, common: &Common) -> Result<(), Failure> {
    let rs = match load_root_system(common)? {
        Some(rs) => rs,
        None => RootSystem::trivial(
            common.m.ok_or_else(|| Failure::Input("basis needs --m or --config".into()))?,
        ),
    };
    let b = dirac::monogenic_basis(&rs, degree)?;
    let v = basis_to_value(&b);
    if common.json {
        println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
    } else {
        println!("{}", serde_json::to_string(&v).expect("serializable"));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Apply { op, input, common } => apply(&op, &input, &common),
        Command::Intertwine { input, common } => apply("intertwine", &input, &common),
        Command::Suite { selector, common, seed, max_degree, max_power, samples } => {
            let sel: Selector = selector.parse()?;
            let cfg = SuiteConfig { seed, max_degree, max_power, samples, ..SuiteConfig::default() };
            suite(sel, &common, cfg)
        }
        Command::Fueter { input: Some(input), common, .. } => apply("fueter", &input, &common),
        Command::Fueter { input: None, common, seed, max_degree, max_power } => {
            let cfg = SuiteConfig { seed, max_degree, max_power, ..SuiteConfig::default() };
            suite(Selector::Fueter, &common, cfg)
        }
        Command::Basis { degree, common } => basis(degree, &common),
        Command::Version => {
            println!("dunkl-slice {}", env!("CARGO_PKG_VERSION"));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
