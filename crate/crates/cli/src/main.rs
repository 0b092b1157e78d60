use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fueter_core::fueter::triangle_check;
use fueter_core::numeric::{
    ck_gauss_restriction, decay_scan_grid, default_threads, relative_error, sample, write_csv,
    CompiledPair, GaussSeries, SampleTarget, DEFAULT_SERIES_ORDER,
};
use fueter_core::poly::{hermite_closed, hermite_rec, sample_pk};
use fueter_core::suite::{all_passed, run_suite, Suite, SuiteOptions};
use fueter_core::{fueter, seed, CliffPoly, Error, EvalPoint, GridRange, NumMultivector, SeedKind};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_EVEN_M: u8 = 3;
const EXIT_BAD_PK: u8 = 4;
const EXIT_IO: u8 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "fueter-lab",
    version,
    about = "Exact and numerical checks for axial monogenic functions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Run a verification suite, one line per check.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 1)]
        rng_seed: u64,
        /// Re-read a CSV written by `sample` and recompute it.
        #[arg(long)]
        from: Option<PathBuf>,
    },
    /// Print the generalized Hermite polynomial H_n.
    Hermite {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Form::Rec)]
        form: Form,
        /// Print the expanded polynomial instead of the x̲ form.
        #[arg(long)]
        expand: bool,
    },
    /// Print the Fueter transform of a seed and its Vekua verdict.
    Fueter {
        #[arg(long, value_parser = ["iz", "inv_z", "z_pow", "gauss", "gauss_fund"])]
        seed: String,
        /// Exponent for `z_pow`.
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        k: u32,
        /// File holding P_k in polynomial text form.
        #[arg(long)]
        pk_file: Option<PathBuf>,
    },
    /// Evaluate the CK-extended Gaussian by its series and in closed form.
    CkGauss {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        x0: f64,
        /// Comma-separated x1..xm.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        x: Vec<f64>,
        #[arg(long, default_value_t = DEFAULT_SERIES_ORDER)]
        order: u32,
    },
    /// Sample a function on a grid along x̲ = r e1 and write CSV.
    Sample {
        #[arg(long, value_parser = parse_target)]
        target: SampleTarget,
        #[arg(long)]
        m: usize,
        /// `lo:hi:count` or a single value.
        #[arg(long, allow_hyphen_values = true)]
        x0: GridRange,
        #[arg(long)]
        r: GridRange,
        /// Output path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the decay report of the grid as JSON.
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Form {
    Rec,
    Closed,
    Both,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_target(s: &str) -> Result<SampleTarget, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::EvenDimension(_) => EXIT_EVEN_M,
        Error::InvalidPk(_) => EXIT_BAD_PK,
        Error::Io(_) | Error::Csv(_) | Error::Json(_) => EXIT_IO,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = io::stdout();
    let mut out = out.lock();
    match run(cli.cmd, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn run(cmd: Cmd, out: &mut impl Write) -> Result<bool, Error> {
    match cmd {
        Cmd::Verify {
            suite,
            m,
            rng_seed,
            from,
        } => {
            let opts = SuiteOptions {
                m,
                rng_seed,
                from_csv: from,
                threads: default_threads(),
            };
            let lines = run_suite(suite, &opts)?;
            for l in &lines {
                writeln!(out, "{l}")?;
            }
            Ok(all_passed(&lines))
        }
        Cmd::Hermite { m, n, form, expand } => {
            let show = |h: &fueter_core::HermiteResult| match (expand, h.to_xvec_string()) {
                (false, Some(s)) => s,
                _ => h.poly.to_string(),
            };
            match form {
                Form::Rec => writeln!(out, "{}", show(&hermite_rec(n, m)?))?,
                Form::Closed => writeln!(out, "{}", show(&hermite_closed(n, m)?))?,
                Form::Both => {
                    let (r, c) = (hermite_rec(n, m)?, hermite_closed(n, m)?);
                    writeln!(out, "rec    = {}", show(&r))?;
                    writeln!(out, "closed = {}", show(&c))?;
                    let equal = r == c;
                    writeln!(out, "{}", if equal { "EQUAL" } else { "DIFFER" })?;
                    return Ok(equal);
                }
            }
            Ok(true)
        }
        Cmd::Fueter {
            seed: name,
            n,
            m,
            k,
            pk_file,
        } => {
            let kind = SeedKind::from_name(&name, n)?;
            let pk = match pk_file {
                Some(path) => CliffPoly::parse(m, fs::read_to_string(path)?.trim())
                    .map_err(|e| Error::InvalidPk(e.to_string()))?,
                None if k == 0 => CliffPoly::one(m),
                None => sample_pk(k, m).map_err(|e| Error::InvalidPk(e.to_string()))?,
            };
            let pair = fueter(&seed(kind)?, k, m, &pk)?;
            writeln!(out, "seed = {kind}")?;
            writeln!(out, "{pair}")?;
            let mut ok = pair.is_monogenic();
            writeln!(out, "{}", if ok { "VEKUA OK" } else { "VEKUA FAIL" })?;
            if let SeedKind::ZPow(n) = kind {
                let t = triangle_check(n, k, m, &pk)?;
                writeln!(out, "poly = {}", t.radial_route)?;
                let c = t
                    .constant
                    .map(|c| c.to_string())
                    .unwrap_or_else(|| "-".into());
                writeln!(
                    out,
                    "{} c = {c}",
                    if t.holds {
                        "TRIANGLE OK"
                    } else {
                        "TRIANGLE FAIL"
                    }
                )?;
                ok &= t.holds;
            }
            Ok(ok)
        }
        Cmd::CkGauss { m, x0, x, order } => {
            let x = if x.is_empty() { vec![0.0; m] } else { x };
            let pt = EvalPoint::new(x0, x);
            let s = GaussSeries::new(m, order)?.eval(&pt)?;
            writeln!(out, "series = {}", s.value)?;
            writeln!(out, "tail   = {:.3e}", s.next_term)?;
            let closed = if pt.r() > 0.0 {
                CompiledPair::new(&fueter_core::fueter::gaussian_ck_pair(m)?).eval(&pt)?
            } else {
                NumMultivector::scalar(m, ck_gauss_restriction(x0, m)?)
            };
            writeln!(out, "closed = {closed}")?;
            writeln!(
                out,
                "relative_difference = {:.3e}",
                relative_error(&s.value, &closed, f64::MIN_POSITIVE)
            )?;
            Ok(true)
        }
        Cmd::Sample {
            target,
            m,
            x0,
            r,
            out: path,
            report,
        } => {
            let rows = sample(target, m, &x0, &r)?;
            match path {
                Some(p) => write_csv(m, &rows, BufWriter::new(File::create(p)?))?,
                None => write_csv(m, &rows, &mut *out)?,
            }
            if let Some(p) = report {
                let rep = decay_scan_grid(&target.pair(m)?, &x0, &r, default_threads())?;
                serde_json::to_writer_pretty(BufWriter::new(File::create(p)?), &rep)?;
            }
            Ok(true)
        }
    }
}
