use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use tiltcount_core::closed_forms::{a_row, a_total};
use tiltcount_core::enumerator::{self, Kind};
use tiltcount_core::oeis_io::{self, Format, TriangleKind};
use tiltcount_core::verifier::{self, Suite, SuiteOptions};
use tiltcount_core::{build_cartan, knit_category, DynkinType, Error, OrientationSpec, Series};

#[derive(Parser, Debug)]
#[command(name = "tiltcount", version, about = "Support-tilting and antichain counts for Dynkin algebras")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Log progress to stderr (repeat for more).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Closed-form row a_0 .. a_n and the total.
    Table { series: Series, n: usize },
    /// Render a triangle (A, B, D, sheared-catalan, pascal, lucas, d-diagonal).
    Triangle {
        series: TriangleKind,
        /// Last row index to print.
        #[arg(long, default_value_t = 9)]
        rows: usize,
        #[arg(long, default_value = "pretty")]
        format: Format,
    },
    /// Enumerate antichains or support-tilting sets of one oriented type.
    Enumerate {
        series: Series,
        n: usize,
        /// `default` or comma-separated arrows such as `2>1,2>3`.
        #[arg(long, default_value = "default")]
        orientation: OrientationSpec,
        #[arg(long, default_value = "tilting")]
        statistic: Kind,
        /// Print every set as `{(i,u),…}` instead of the counts.
        #[arg(long)]
        list: bool,
    },
    /// Dimension vectors of all indecomposables, one per line.
    Knit {
        series: Series,
        n: usize,
        #[arg(long, default_value = "default")]
        orientation: OrientationSpec,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Compare a generated sequence with its b-file.
    Reconcile {
        sequence: String,
        /// Number of leading terms to compare (default: the whole b-file).
        #[arg(long)]
        terms: Option<usize>,
        /// Try oeis.org first, falling back to the fixture.
        #[arg(long)]
        online: bool,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, group = "suite")]
    quick: bool,
    /// Adds seeded random orientations for rank 5 and 6.
    #[arg(long, group = "suite")]
    full: bool,
    /// Adds E7 and E8.
    #[arg(long, group = "suite")]
    slow: bool,
    #[arg(long, default_value_t = 50)]
    max_n: usize,
    #[arg(long, default_value_t = verifier::DEFAULT_SEED)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Errors that come from bad arguments exit with 2 like clap's own.
fn is_usage(e: &anyhow::Error) -> bool {
    matches!(
        e.downcast_ref::<Error>(),
        Some(
            Error::InadmissibleRank { .. }
                | Error::UnknownSeries(_)
                | Error::BadOrientationSpec(_)
                | Error::ArrowMismatch(_)
                | Error::CyclicOrientation
                | Error::UnknownTriangle(_)
                | Error::UnknownFormat(_)
                | Error::OutOfRange(_)
                | Error::Infeasible { .. }
        )
    )
}

fn fixture_dir() -> PathBuf {
    oeis_io::default_fixture_dir()
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Table { series, n } => {
            eprintln!("# table series={series} n={n}");
            let row = a_row(series, n)?;
            let total = a_total(series, n)?;
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(out, "{} | total {}", cells.join(" "), total)?;
        }
        Command::Triangle { series, rows, format } => {
            eprintln!("# triangle series={series} rows={rows} format={format}");
            out.write_all(oeis_io::render_triangle(series, rows, format)?.as_bytes())?;
        }
        Command::Enumerate {
            series,
            n,
            orientation,
            statistic,
            list,
        } => {
            eprintln!("# enumerate type={series}{n} orientation={orientation} statistic={statistic} list={list}");
            let ty = DynkinType::new(series, n)?;
            let cat = knit_category(&build_cartan(ty, &orientation)?)?;
            if list {
                let mut err = None;
                enumerator::for_each_set(&cat, statistic, |members, _| {
                    let set = enumerator::IndecSet::new(&cat, members.to_vec());
                    if let Err(e) = writeln!(out, "{}", set.format_pairs(&cat)) {
                        err.get_or_insert(e);
                    }
                })?;
                if let Some(e) = err {
                    return Err(e.into());
                }
            } else {
                let table = enumerator::count_tables(&cat, statistic)?;
                let size: Vec<String> = table.by_size.iter().map(ToString::to_string).collect();
                writeln!(out, "support-rank: {table}")?;
                writeln!(out, "size: {}", size.join(" "))?;
            }
        }
        Command::Knit { series, n, orientation } => {
            eprintln!("# knit type={series}{n} orientation={orientation}");
            let cat = knit_category(&build_cartan(DynkinType::new(series, n)?, &orientation)?)?;
            out.write_all(cat.dump().as_bytes())?;
        }
        Command::Verify(args) => {
            let suite = if args.slow {
                Suite::Slow
            } else if args.full {
                Suite::Full
            } else {
                Suite::Quick
            };
            let opts = SuiteOptions {
                suite,
                max_n: args.max_n,
                seed: args.seed,
                fixture_dir: fixture_dir(),
            };
            eprintln!(
                "# verify suite={suite} max_n={} seed={} threads={} fixtures={}",
                opts.max_n,
                opts.seed,
                rayon::current_num_threads(),
                opts.fixture_dir.display()
            );
            let report = verifier::run_suite(&opts);
            let text = report.to_text();
            match &args.out {
                Some(path) => {
                    std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
                    writeln!(out, "{}", report.summary())?;
                }
                None => out.write_all(text.as_bytes())?,
            }
            for c in report.failures() {
                eprintln!("FAIL {c}");
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Reconcile { sequence, terms, online } => {
            let kind = TriangleKind::for_sequence(&sequence)?;
            let dir = fixture_dir();
            eprintln!(
                "# reconcile sequence={} terms={} online={online} fixtures={}",
                kind.sequence_id(),
                terms.map_or("all".to_string(), |t| t.to_string()),
                dir.display()
            );
            let bfile = oeis_io::fetch_bfile(kind.sequence_id(), &dir, online)?;
            let terms = terms.unwrap_or(bfile.entries.len());
            let report = oeis_io::reconcile(kind, &bfile, terms);
            for c in &report.checks {
                writeln!(out, "{c}")?;
            }
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        _ => "debug",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if is_usage(&e) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
