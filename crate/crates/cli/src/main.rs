use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hypertree_core::harness::SuiteConfig;
use hypertree_core::*;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "hypertree", version, about = "Matching polynomials, spectral radii and extremal hypertrees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check uniformity, linearity, connectivity and acyclicity of a hypergraph file
    Validate { file: PathBuf },
    /// Print the matching polynomial and matching counts
    Matchpoly { file: PathBuf },
    /// Spectral radius of the adjacency tensor
    Rho {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        /// bracket tolerance for power iteration
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Build A(m,k,r)
    Extremal {
        m: usize,
        k: usize,
        r: usize,
        /// write the hypergraph JSON here instead of stdout
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Closed-form spectral radius bound for (m,k,r)
    Bound {
        m: usize,
        k: usize,
        r: usize,
        /// use the perfect-matching form rα^r = (m−1)(1−α)
        #[arg(long)]
        perfect: bool,
    },
    /// List all hypertrees with m edges up to isomorphism
    Enumerate {
        m: usize,
        r: usize,
        /// keep only hypertrees with matching number k
        #[arg(long)]
        matching: Option<usize>,
        /// with --matching, keep matching number at least k
        #[arg(long, requires = "matching")]
        at_least: bool,
    },
    /// Exhaustively check that A(m,k,r) is the unique maximizer
    Verify {
        m: usize,
        k: usize,
        r: usize,
        #[arg(long)]
        at_least: bool,
    },
    /// Run a batch of verifications; desk scale when no config is given
    Suite {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        at_least: bool,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Decide the matching-polynomial order between two hypertrees
    Compare { a: PathBuf, b: PathBuf },
    /// Unit-transfer chain from one composition vector down to another
    Chain {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// entry cap; defaults to the largest entry
        #[arg(long)]
        cap: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Power,
    Poly,
    Both,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_)
            | Error::Parse(_)
            | Error::InvalidHypergraph(_)
            | Error::InvalidVertex { .. }
            | Error::BadParameters(_)
            | Error::Infeasible { .. }
            | Error::GuardExceeded(_)
            | Error::LengthMismatch { .. }
            | Error::NotMajorized(_)
            | Error::UniformityMismatch { .. }
            | Error::OrderMismatch { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

type CmdResult = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn print(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("json values serialize"));
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> std::result::Result<Hypergraph, Failure> {
    Ok(Hypergraph::from_json_str(&read(path)?)?)
}

fn fail_if(failed: bool, what: &str) -> CmdResult {
    if failed {
        Err(Failure::Verification(what.to_string()))
    } else {
        Ok(())
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Validate { file } => {
            let h = Hypergraph::from_json_str_raw(&read(&file)?)?;
            let report = h.validate();
            print(&serde_json::to_value(&report).expect("report serializes"));
            fail_if(!report.violations.is_empty(), "not a linear hypertree")
        }
        Command::Matchpoly { file } => {
            let h = load(&file)?;
            let phi = matching_polynomial(&h);
            let counts: Vec<String> = matching_counts(&h).counts.iter().map(ToString::to_string).collect();
            print(&json!({
                "n": phi.n,
                "r": phi.r,
                "polynomial": phi.to_string(),
                "counts": counts,
                "nu": counts.len() - 1,
            }));
            Ok(())
        }
        Command::Rho { file, method, tol, max_iter } => rho(&file, method, tol, max_iter),
        Command::Extremal { m, k, r, emit } => {
            let a = build_a(m, k, r)?;
            match emit {
                Some(path) => fs::write(&path, a.to_json_string()).map_err(|e| Failure::Usage(e.to_string()))?,
                None => println!("{}", a.to_json_string()),
            }
            Ok(())
        }
        Command::Bound { m, k, r, perfect } => {
            let b = if perfect { perfect_matching_bound(m, r)? } else { rho_bound(m, k, r)? };
            if perfect && b.params.k != k {
                return Err(Failure::Usage(format!("--perfect needs k = {}", b.params.k)));
            }
            print(&json!({
                "m": m,
                "k": k,
                "r": r,
                "q": b.params.q,
                "s": b.params.s,
                "l": b.params.l,
                "alpha0": b.alpha0,
                "rho": b.rho,
            }));
            Ok(())
        }
        Command::Enumerate { m, r, matching, at_least } => {
            let out = match matching {
                Some(k) => serde_json::to_value(enumerate_t_mkr(m, k, r, at_least)?),
                None => serde_json::to_value(enumerate_hypertrees(m, r)?),
            };
            print(&out.expect("records serialize"));
            Ok(())
        }
        Command::Verify { m, k, r, at_least } => {
            let report = verify_extremal(m, k, r, at_least)?;
            print(&serde_json::to_value(&report).expect("report serializes"));
            fail_if(!report.passed(), "verification failed")
        }
        Command::Suite { config, at_least, csv, json } => {
            let mut cfg = match config {
                Some(path) => SuiteConfig::from_json_str(&read(&path)?)?,
                None => SuiteConfig::desk_scale(),
            };
            cfg.at_least |= at_least;
            cfg.csv = csv.or(cfg.csv);
            cfg.json = json.or(cfg.json);
            let report = run_suite(&cfg)?;
            if cfg.csv.is_none() {
                print!("{}", report.to_csv()?);
            }
            let failed = report.rows.iter().filter(|row| !row.passed()).count();
            eprintln!("{} cases, {failed} failed", report.rows.len());
            fail_if(!report.passed, "suite failed")
        }
        Command::Compare { a, b } => {
            let rel = compare_order(&load(&a)?, &load(&b)?)?;
            print(&serde_json::to_value(&rel).expect("relation serializes"));
            Ok(())
        }
        Command::Chain { from, to, cap } => {
            let top = CompositionVector::uncapped(parse_vector(&from)?)?;
            let low = CompositionVector::uncapped(parse_vector(&to)?)?;
            let cap = cap.unwrap_or_else(|| top.cap().max(low.cap()));
            let top = CompositionVector::new(top.entries().to_vec(), cap)?;
            let low = CompositionVector::new(low.entries().to_vec(), cap)?;
            for step in majorization_chain(&low, &top)? {
                println!("{step}");
            }
            Ok(())
        }
    }
}

fn parse_vector(s: &str) -> std::result::Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| Failure::Usage(format!("bad entry {x:?} in {s:?}: {e}"))))
        .collect()
}

fn rho(file: &Path, method: MethodArg, tol: Option<f64>, max_iter: Option<usize>) -> CmdResult {
    let h = load(file)?;
    let mut opts = PowerOptions::default();
    if let Some(t) = tol {
        if !(t > 0.0) {
            return Err(Failure::Usage(format!("--tol must be positive, got {t}")));
        }
        opts.tol = t;
    }
    if let Some(it) = max_iter {
        opts.max_iter = it;
    }
    let summary = |r: &SpectralResult| {
        json!({
            "rho": r.rho,
            "method": r.method,
            "residual": r.residual,
            "iterations": r.iterations,
        })
    };
    match method {
        MethodArg::Power => print(&summary(&spectral_radius_power(&h, &opts)?)),
        MethodArg::Poly => {
            let mut r = spectral_radius_polyroot(&h)?;
            if h.m() > 0 {
                spectral::certify(&h, &mut r, &opts)?;
            }
            print(&summary(&r));
        }
        MethodArg::Both => {
            let power = spectral_radius_power(&h, &opts)?;
            let poly = spectral_radius_polyroot(&h)?;
            let rel = (power.rho - poly.rho).abs() / poly.rho.max(f64::MIN_POSITIVE);
            print(&json!({
                "rho": poly.rho,
                "method": "both",
                "residual": power.residual,
                "iterations": power.iterations,
                "power": summary(&power),
                "polyroot": summary(&poly),
                "relative_difference": rel,
            }));
        }
    }
    Ok(())
}
