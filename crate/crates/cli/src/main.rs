//! `hyperlag`: Lagrangians of uniform hypergraphs from the command line.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on usage
//! or input errors.

mod svg;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperlag::bounds::{refined_rhs, colex_bound_rhs, RefinedBound};
use hyperlag::combinatorics::colex_initial_segment;
use hyperlag::format::{sig12, sig_exact};
use hyperlag::hypergraph::edgelist;
use hyperlag::lagrangian::{grid_lower_bound, kkt_residual, lagrangian, replicator_ascent, MultistartOptions};
use hyperlag::verify::{self, check_extremal_inequalities, report, bound_check, HarnessOptions};
use hyperlag::{Estimate, Hypergraph, Rational, Weighting};

#[derive(Parser, Debug)]
#[command(name = "hyperlag", version, about = "Lagrangians of uniform hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the colex initial segment C_{r,m} as an edge list.
    Colex {
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long)]
        m: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Compute the Lagrangian of an edge-list file, or of C_{r,m}.
    Lambda {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = MethodArg::Multistart)]
        method: MethodArg,
        /// Grid resolution for `--method grid`.
        #[arg(long, default_value_t = 60)]
        k: usize,
        #[command(flatten)]
        solver: Solver,
        #[command(flatten)]
        out: Output,
    },
    /// Left-compress a hypergraph, fully or along one pair.
    Compress {
        #[arg(long)]
        input: PathBuf,
        /// Apply only C_ij for this `i` (requires `--j`).
        #[arg(long, requires = "j")]
        i: Option<usize>,
        #[arg(long, requires = "i")]
        j: Option<usize>,
        #[command(flatten)]
        out: Output,
    },
    /// Link, complement link or link difference of a hypergraph.
    Link {
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated vertex set S, e.g. `1,2`.
        #[arg(long, value_delimiter = ',', required_unless_present = "difference")]
        vertices: Vec<usize>,
        /// Emit the complement link instead.
        #[arg(long, conflicts_with = "difference")]
        complement: bool,
        /// Emit the link difference G_{i\j} for the pair `i,j`.
        #[arg(long, value_delimiter = ',', num_args = 1, value_names = ["I,J"])]
        difference: Option<Vec<usize>>,
        #[command(flatten)]
        out: Output,
    },
    /// Compute the maximum Lagrangian over m-edge 3-graphs and check it
    /// against C_{3,m} and the known bounds.
    Verify {
        /// Compare against λ(C_{3,m}).
        #[arg(long)]
        conjecture: bool,
        /// Check the smooth bound, the colex bound and plateau values.
        #[arg(long)]
        bounds: bool,
        /// Check the extremal inequalities on every maximizer.
        #[arg(long)]
        inequalities: bool,
        /// Check a single m instead of the range.
        #[arg(long, conflicts_with = "m_max")]
        m: Option<u64>,
        #[arg(long, default_value_t = 35)]
        m_max: u64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 100_000)]
        max_iters: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// Tabulate the upper bounds at m or for 1..=m-max.
    Bounds {
        #[arg(long, conflicts_with = "m_max")]
        m: Option<u64>,
        #[arg(long)]
        m_max: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
    /// λ(C_{3,m}) and the smooth bound for m up to C(t_max, 3).
    Figure {
        #[arg(long, default_value_t = 16)]
        t_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args, Debug)]
struct Output {
    /// Output path, or `-` for standard output.
    #[arg(long, default_value = "-")]
    out: String,
}

#[derive(Args, Debug)]
struct Source {
    /// Edge-list file.
    #[arg(long, conflicts_with_all = ["r", "m"], required_unless_present = "m")]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 3)]
    r: usize,
    #[arg(long)]
    m: Option<u64>,
}

#[derive(Args, Debug)]
struct Solver {
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100_000)]
    max_iters: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Replicator,
    Multistart,
    Grid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Svg,
}

/// Everything that ends the run early.
enum Failure {
    Usage(String),
    Verification,
}

impl From<hyperlag::Error> for Failure {
    fn from(e: hyperlag::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Run = Result<(), Failure>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn emit(out: &Output, text: &str) -> Run {
    if out.out == "-" {
        let mut stdout = io::stdout().lock();
        stdout
            .write_all(text.as_bytes())
            .and_then(|_| stdout.flush())
            .or_else(|e| usage(format!("writing standard output: {e}")))
    } else {
        fs::write(&out.out, text).or_else(|e| usage(format!("writing {}: {e}", out.out)))
    }
}

fn read_graph(path: &PathBuf) -> Result<Hypergraph, Failure> {
    let text = fs::read_to_string(path).or_else(|e| usage(format!("reading {}: {e}", path.display())))?;
    edgelist::parse(&text).or_else(|e| usage(format!("{}: {e}", path.display())))
}

fn exact_or(v: f64, exact: Option<Rational>) -> String {
    exact.map_or_else(|| sig12(v), |q| sig_exact(q, 12))
}

fn sci(v: f64) -> String {
    format!("{v:.11e}")
}

fn weights(x: &[f64]) -> String {
    x.iter().map(|&v| sig12(v)).collect::<Vec<_>>().join(" ")
}

fn check_positive(tol: f64, jobs: usize) -> Run {
    if !(tol > 0.0) {
        return usage(format!("--tol must be positive, got {tol}"));
    }
    if jobs == 0 {
        return usage("--jobs must be at least 1");
    }
    Ok(())
}

fn run_lambda(source: &Source, method: MethodArg, k: usize, solver: &Solver, out: &Output) -> Run {
    check_positive(solver.tol, 1)?;
    if solver.max_iters == 0 {
        return usage("--max-iters must be at least 1");
    }
    let g = match (&source.input, source.m) {
        (Some(path), _) => read_graph(path)?,
        (None, Some(m)) => colex_initial_segment(source.r, m)?,
        (None, None) => return usage("either --input or --m is required"),
    };
    if g.m() == 0 {
        return usage("the hypergraph has no edges");
    }
    let mut text = String::new();
    match method {
        MethodArg::Grid => {
            let cert = grid_lower_bound(&g, k)?;
            let residual = kkt_residual(&g, &cert.best_point)?;
            text += &format!("method grid\nk {}\n", cert.k);
            text += &format!("value {}\n", sig12(cert.best_value));
            text += &format!("kkt_residual {}\n", sci(residual));
            text += &format!("weighting {}\n", weights(cert.best_point.as_slice()));
        }
        MethodArg::Replicator | MethodArg::Multistart => {
            let est: Estimate = match method {
                MethodArg::Replicator => {
                    replicator_ascent(&g, &Weighting::uniform(g.n()), solver.max_iters, solver.tol)?
                }
                _ => lagrangian(
                    &g,
                    &MultistartOptions {
                        seed: solver.seed,
                        tol: solver.tol,
                        max_iters: solver.max_iters,
                        ..Default::default()
                    },
                )?,
            };
            text += &format!("method {}\n", est.method);
            text += &format!("value {}\n", sig12(est.value));
            text += &format!("kkt_residual {}\n", sci(est.kkt_residual));
            text += &format!("iterations {}\nconverged {}\nsupport {}\n", est.iterations, est.converged, est.support_size);
            text += &format!("weighting {}\n", weights(est.weighting.as_slice()));
        }
    }
    emit(out, &text)
}

fn run_compress(input: &PathBuf, pair: Option<(usize, usize)>, out: &Output) -> Run {
    let g = read_graph(input)?;
    let h = match pair {
        Some((i, j)) => {
            if j > g.n() {
                return usage(format!("vertex {j} is outside [{}]", g.n()));
            }
            g.compress_ij(i, j)?
        }
        None => g.compress_full(),
    };
    emit(out, &edgelist::write(&h))
}

fn run_link(input: &PathBuf, vertices: &[usize], complement: bool, difference: Option<&[usize]>, out: &Output) -> Run {
    let g = read_graph(input)?;
    let h = match difference {
        Some(&[i, j]) => g.link_difference(i, j)?,
        Some(other) => return usage(format!("--difference takes two vertices, got {}", other.len())),
        None if complement => g.complement_link(vertices)?,
        None => g.link(vertices)?,
    };
    emit(out, &edgelist::write(&h))
}

struct VerifyModes {
    conjecture: bool,
    bounds: bool,
    inequalities: bool,
}

fn run_verify(modes: VerifyModes, ms: Vec<u64>, tol: f64, opts: HarnessOptions, format: Format, out: &Output) -> Run {
    check_positive(tol, opts.jobs)?;
    if format == Format::Svg {
        return usage("verify writes text or csv");
    }
    let mut text = String::new();
    let mut ok = true;
    let mut verdicts = Vec::new();
    for &m in &ms {
        let v = verify::lambda3(m, &opts)?;
        eprintln!("m={m} {}", if v.pass { "pass" } else { "FAIL" });
        ok &= v.pass;
        verdicts.push(v);
    }
    if modes.conjecture {
        text += &match format {
            Format::Csv => report::to_csv(&verdicts),
            _ => report::to_text(&verdicts),
        };
    }
    if modes.bounds {
        let checks = verdicts
            .iter()
            .map(|v| bound_check(v.clone(), 1e-9))
            .collect::<Result<Vec<_>, _>>()?;
        if format == Format::Csv {
            text += "m,lambda3,smooth_bound,colex_rhs,plateau,refined_rhs,pass\n";
        }
        for c in &checks {
            ok &= c.all_hold();
            let v = &c.verdict;
            let lam = exact_or(v.lambda3, v.lambda3_exact);
            let plateau = c.plateau_holds.map_or("-".to_string(), |b| b.to_string());
            let refined = match &c.refined {
                RefinedBound::Applicable { rhs, rhs_exact, .. } => exact_or(*rhs, *rhs_exact),
                RefinedBound::NotApplicable { .. } => "-".to_string(),
            };
            let rhs = exact_or(c.bound.rhs, c.bound.rhs_exact);
            text += &match format {
                Format::Csv => format!(
                    "{},{lam},{},{rhs},{plateau},{refined},{}\n",
                    v.m,
                    sig12(c.smooth_bound),
                    c.all_hold()
                ),
                _ => format!(
                    "m={} lambda3={lam} smooth={} colex_rhs={rhs} plateau={plateau} refined={refined} {}\n",
                    v.m,
                    sig12(c.smooth_bound),
                    if c.all_hold() { "PASS" } else { "FAIL" }
                ),
            };
        }
    }
    if modes.inequalities {
        for v in verdicts.iter().filter(|v| v.t >= 4) {
            let rep = check_extremal_inequalities(&v.maximizer, &v.weighting, v.t)?;
            ok &= rep.all_hold();
            text += &format!("# m={} maximizer {}\n{rep}", v.m, v.maximizer);
        }
    }
    emit(out, &text)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run_bounds(ms: Vec<u64>, format: Format, out: &Output) -> Run {
    if format == Format::Svg {
        return usage("bounds writes text or csv");
    }
    let mut text = String::new();
    if format == Format::Csv {
        text += "m,t,l,lambda_colex,smooth_bound,eta,m_prime,colex_rhs,refined_m_prime,refined_rhs\n";
    }
    let mut ok = true;
    for m in ms {
        let b = colex_bound_rhs(m)?;
        ok &= b.lambda_colex <= b.smooth_bound + 1e-9;
        let colex = exact_or(b.lambda_colex, b.lambda_colex_exact);
        let rhs = exact_or(b.rhs, b.rhs_exact);
        let m_prime = b.m_prime.map_or("-".to_string(), |v| v.to_string());
        let (rm, rr) = match refined_rhs(m)? {
            RefinedBound::Applicable { m_prime, rhs, rhs_exact, .. } => (m_prime.to_string(), exact_or(rhs, rhs_exact)),
            RefinedBound::NotApplicable { .. } => ("-".to_string(), "-".to_string()),
        };
        text += &match format {
            Format::Csv => format!(
                "{m},{},{},{colex},{},{},{m_prime},{rhs},{rm},{rr}\n",
                b.t,
                b.l,
                sig12(b.smooth_bound),
                b.eta
            ),
            _ => format!(
                "m={m} t={} l={} lambda_colex={colex} smooth={} eta={} m'={m_prime} colex_rhs={rhs}{} refined_m'={rm} refined_rhs={rr}\n",
                b.t,
                b.l,
                sig12(b.smooth_bound),
                b.eta,
                if b.small_t_fallback { " (C(t,3)/t^3)" } else { "" }
            ),
        };
    }
    emit(out, &text)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn run_figure(t_max: usize, format: Format, out: &Output) -> Run {
    let rows = verify::figure_data(t_max)?;
    let text = match format {
        Format::Svg => svg::figure(&rows),
        Format::Csv | Format::Text => {
            let sep = if format == Format::Csv { "," } else { " " };
            let mut text = ["m", "t", "lambda_conjectured", "smooth_bound"].join(sep) + "\n";
            for r in &rows {
                text += &[r.m.to_string(), r.t.to_string(), exact_or(r.conjectured, r.exact), sig12(r.smooth)].join(sep);
                text.push('\n');
            }
            text
        }
    };
    emit(out, &text)?;
    let monotone = rows.windows(2).all(|w| w[1].conjectured >= w[0].conjectured && w[1].smooth >= w[0].smooth);
    if monotone && rows.iter().all(|r| r.smooth >= r.conjectured - 1e-12) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn range(m: Option<u64>, m_max: Option<u64>) -> Result<Vec<u64>, Failure> {
    match (m, m_max) {
        (Some(0), _) | (None, Some(0)) => usage("m must be positive"),
        (Some(m), _) => Ok(vec![m]),
        (None, Some(top)) => Ok((1..=top).collect()),
        (None, None) => usage("either --m or --m-max is required"),
    }
}

fn run(cli: Cli) -> Run {
    match cli.command {
        Command::Colex { r, m, out } => emit(&out, &edgelist::write(&colex_initial_segment(r, m)?)),
        Command::Lambda { source, method, k, solver, out } => run_lambda(&source, method, k, &solver, &out),
        Command::Compress { input, i, j, out } => run_compress(&input, i.zip(j), &out),
        Command::Link { input, vertices, complement, difference, out } => {
            run_link(&input, &vertices, complement, difference.as_deref(), &out)
        }
        Command::Verify { conjecture, bounds, inequalities, m, m_max, tol, seed, jobs, max_iters, format, out } => {
            let all = !(conjecture || bounds || inequalities);
            let modes = VerifyModes {
                conjecture: conjecture || all,
                bounds: bounds || all,
                inequalities: inequalities || all,
            };
            let opts = HarnessOptions { tol, seed, jobs, max_iters, ..Default::default() };
            run_verify(modes, range(m, Some(m_max))?, tol, opts, format, &out)
        }
        Command::Bounds { m, m_max, format, out } => run_bounds(range(m, m_max)?, format, &out),
        Command::Figure { t_max, format, out } => run_figure(t_max, format, &out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => {
            eprintln!("hyperlag: verification failed");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("hyperlag: {msg}");
            ExitCode::from(2)
        }
    }
}
