//! Command-line surface: generate matrices, evaluate closed-form spectra
//! against the numerical oracle, and run the full verification suite.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/domain error,
//! 3 I/O error, 4 solver non-convergence.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use trigmat::io::{read_vector, write_matrix, CsvError};
use trigmat::verify::{run_suite, spectrum_residual, SPECTRUM_TOL};
use trigmat::{
    build_fir, build_l, build_p, build_pure, eigs_of_p, fir_closed_form, jacobi_eigs_default,
    Error as TmError, FirParams, Mat, TrigSpec, VerifyConfig,
};

#[derive(Parser)]
#[command(name = "trigmat", version, about = "Generalized trigonometric matrices: construction, closed-form eigenvalues, verification")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a matrix of the family and write it as CSV
    Gen(GenArgs),
    /// Print gamma, delta, and the eigenvalue multiset
    Eig(EigArgs),
    /// Run the property suite and write a JSON report
    Verify(VerifyArgs),
    /// Tabulate the FIR closed forms against the oracle across omegas
    Conjecture(ConjectureArgs),
}

#[derive(Args)]
struct SpecArgs {
    /// FIR instance: block size N and digital frequency OMEGA
    #[arg(long, num_args = 2, value_names = ["N", "OMEGA"])]
    fir: Option<Vec<String>>,

    /// Phase vector file (values separated by commas or newlines)
    #[arg(long, conflicts_with = "fir", requires = "l")]
    x: Option<PathBuf>,

    /// l vector file
    #[arg(long, conflicts_with = "fir", requires = "h")]
    l: Option<PathBuf>,

    /// h vector file
    #[arg(long, conflicts_with = "fir", requires = "x")]
    h: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    P,
    Phat,
    L,
    A,
    B,
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    spec: SpecArgs,

    /// Which matrix to emit
    #[arg(long, value_enum, ignore_case = true)]
    which: Which,

    /// Output CSV path
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Closed,
    Oracle,
    Both,
}

#[derive(Args)]
struct EigArgs {
    #[command(flatten)]
    spec: SpecArgs,

    #[arg(long, value_enum, default_value = "both")]
    method: Method,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 100)]
    trials: usize,

    /// Largest block size n for random and FIR specs
    #[arg(long, default_value_t = 12)]
    nmax: usize,

    #[arg(long, default_value_t = 7)]
    seed: u64,

    /// Report output path (JSON)
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ConjectureArgs {
    #[arg(long)]
    n_from: usize,

    #[arg(long)]
    n_to: usize,

    /// Comma-separated omega values (default: 0,0.7,pi/2,2.0,5.9)
    #[arg(long, value_delimiter = ',')]
    omegas: Option<Vec<f64>>,
}

/// CLI failure carrying the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { code: 2, message: msg.into() }
    }

    fn io(msg: impl Into<String>) -> Self {
        Failure { code: 3, message: msg.into() }
    }
}

impl From<TmError> for Failure {
    fn from(e: TmError) -> Self {
        let code = match e {
            TmError::Dimension(_) | TmError::Domain(_) => 2,
            TmError::NoConvergence { .. } => 4,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<CsvError> for Failure {
    fn from(e: CsvError) -> Self {
        match e {
            CsvError::Io(io) => Failure::io(io.to_string()),
            CsvError::Parse(p) => Failure::usage(p),
        }
    }
}

fn load_vector(path: &Path) -> Result<Vec<f64>, Failure> {
    let file = File::open(path)
        .map_err(|e| Failure::io(format!("cannot open {}: {e}", path.display())))?;
    Ok(read_vector(BufReader::new(file))?)
}

fn load_spec(args: &SpecArgs) -> Result<TrigSpec, Failure> {
    if let Some(fir) = &args.fir {
        let n: usize = fir[0]
            .parse()
            .map_err(|e| Failure::usage(format!("bad FIR block size '{}': {e}", fir[0])))?;
        let omega: f64 = fir[1]
            .parse()
            .map_err(|e| Failure::usage(format!("bad FIR omega '{}': {e}", fir[1])))?;
        Ok(build_fir(FirParams::new(n, omega)?)?)
    } else if let (Some(x), Some(l), Some(h)) = (&args.x, &args.l, &args.h) {
        Ok(TrigSpec::new(load_vector(x)?, load_vector(l)?, load_vector(h)?)?)
    } else {
        Err(Failure::usage(
            "specify either --fir N OMEGA or all of --x --l --h",
        ))
    }
}

fn cmd_gen(args: &GenArgs) -> Result<(), Failure> {
    let spec = load_spec(&args.spec)?;
    let matrix: Mat = match args.which {
        Which::P => build_p(&spec)?.p.into_mat(),
        Which::Phat => build_pure(spec.x())?.phat.into_mat(),
        Which::L => build_l(spec.l(), spec.h())?.into_mat(),
        Which::A => build_p(&spec)?.a.into_mat(),
        Which::B => build_p(&spec)?.b,
    };
    let file = File::create(&args.out)
        .map_err(|e| Failure::io(format!("cannot write {}: {e}", args.out.display())))?;
    let mut out = BufWriter::new(file);
    write_matrix(&mut out, &matrix)?;
    out.flush().map_err(|e| Failure::io(e.to_string()))?;
    println!(
        "wrote {}x{} matrix to {}",
        matrix.rows(),
        matrix.cols(),
        args.out.display()
    );
    Ok(())
}

fn cmd_eig(args: &EigArgs) -> Result<(), Failure> {
    let spec = load_spec(&args.spec)?;
    let summary = eigs_of_p(&spec)?;
    println!("n = {} (P is {0}x{0} blocks, {1}x{1} total)", spec.n(), 2 * spec.n());
    println!("gamma = {:.16e}", summary.gd.gamma);
    println!("delta = {:.16e}", summary.gd.delta);

    if matches!(args.method, Method::Closed | Method::Both) {
        println!(
            "closed form: rank(L) branch predicts rank(P) = {}",
            summary.predicted_rank
        );
        if summary.mult_plus > 0 {
            println!("  {:.16e}  (x{})", summary.lam_plus, summary.mult_plus);
        }
        if summary.mult_minus > 0 {
            println!("  {:.16e}  (x{})", summary.lam_minus, summary.mult_minus);
        }
        println!("  0  (x{})", summary.zero_count);
    }

    if matches!(args.method, Method::Oracle | Method::Both) {
        let p = build_p(&spec)?.p;
        let eig = jacobi_eigs_default(&p)?;
        println!(
            "oracle spectrum ({} sweeps, off-diagonal norm {:.3e}):",
            eig.sweeps_used, eig.off_diag_norm
        );
        for v in &eig.values {
            println!("  {v:.16e}");
        }
    }

    if matches!(args.method, Method::Both) {
        let residual = spectrum_residual(&spec)?;
        println!("max matching residual = {residual:.3e} (tolerance {SPECTRUM_TOL:.0e})");
        if residual > SPECTRUM_TOL {
            return Err(Failure { code: 1, message: "closed form disagrees with oracle".into() });
        }
    }
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), Failure> {
    let cfg = VerifyConfig { trials: args.trials, nmax: args.nmax, seed: args.seed };
    let report = run_suite(&cfg)?;
    let file = File::create(&args.out)
        .map_err(|e| Failure::io(format!("cannot write {}: {e}", args.out.display())))?;
    let mut out = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut out, &report)
        .map_err(|e| Failure::io(e.to_string()))?;
    out.write_all(b"\n").and_then(|_| out.flush()).map_err(|e| Failure::io(e.to_string()))?;

    let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).collect();
    println!(
        "{} checks, {} failed; report written to {}",
        report.checks.len(),
        failed.len(),
        args.out.display()
    );
    for c in &failed {
        eprintln!(
            "FAIL {}: residual {:.3e} > tolerance {:.3e}",
            c.name, c.residual, c.tolerance
        );
    }
    if report.overall {
        Ok(())
    } else {
        Err(Failure { code: 1, message: "verification failed".into() })
    }
}

fn cmd_conjecture(args: &ConjectureArgs) -> Result<(), Failure> {
    if args.n_from < 2 {
        return Err(Failure::usage("--n-from must be at least 2"));
    }
    if args.n_to < args.n_from {
        return Err(Failure::usage("--n-to must be >= --n-from"));
    }
    let omegas = args
        .omegas
        .clone()
        .unwrap_or_else(|| trigmat::verify::FIR_OMEGAS.to_vec());

    let header: Vec<String> = omegas.iter().map(|w| format!("resid(w={w:.3})")).collect();
    println!("{:>4}  {:>22}  {:>22}  {}  mult", "n", "lam_plus", "lam_minus", header.join("  "));

    let mut all_ok = true;
    for n in args.n_from..=args.n_to {
        let (lp, lm) = fir_closed_form(n)?;
        let mut cols = Vec::with_capacity(omegas.len());
        let mut mult_ok = true;
        for &omega in &omegas {
            let spec = build_fir(FirParams::new(n, omega)?)?;
            let residual = spectrum_residual(&spec)?;
            all_ok &= residual <= SPECTRUM_TOL;
            cols.push(format!("{residual:>14.3e}"));

            let p = build_p(&spec)?.p;
            let eig = jacobi_eigs_default(&p)?;
            let tol = SPECTRUM_TOL * lp.abs();
            let near = |target: f64| eig.values.iter().filter(|v| (*v - target).abs() <= tol).count();
            mult_ok &= near(lp) == 2 && near(lm) == 2 && near(0.0) == 2 * n - 4;
        }
        all_ok &= mult_ok;
        println!(
            "{n:>4}  {lp:>22.16e}  {lm:>22.16e}  {}  {}",
            cols.join("  "),
            if mult_ok { "ok" } else { "MISMATCH" }
        );
    }
    if all_ok {
        Ok(())
    } else {
        Err(Failure { code: 1, message: "conjecture table has out-of-tolerance rows".into() })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Gen(args) => cmd_gen(args),
        Cmd::Eig(args) => cmd_eig(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Conjecture(args) => cmd_conjecture(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
