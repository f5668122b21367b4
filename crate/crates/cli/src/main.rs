use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use gjcluster::paths::HeightSet;
use gjcluster_cli::commands::{self, NetworkRequest, Route, SeriesName, SeriesRequest};
use gjcluster_cli::render::Format;
use gjcluster_cli::tables;

#[derive(Parser)]
#[command(
    name = "gjcluster",
    version,
    about = "Cluster-method generating functions for words, networks and lattice paths"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Truncation order: coefficients of x^0..=x^N.
    #[arg(long = "n", default_value_t = 12)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Print a coefficient table for a Motzkin path statistic.
    Tables {
        /// asc, peak, plt1, plt, pv, asc-parity or pv-parity.
        #[arg(long)]
        name: String,
        /// Evaluate t: one value, a list, or t1=a,t2=b.
        #[arg(long = "t")]
        t: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Compute one Motzkin path generating function along a chosen route.
    Series {
        /// asc, peak, valley, pv, plt, plt<k>, asc-ends, asc-starts or pv-heights.
        #[arg(long)]
        name: SeriesName,
        /// Height bound m; unbounded if omitted.
        #[arg(long)]
        bound: Option<usize>,
        /// Allowed heights for asc-ends and asc-starts: N, P, E, O, E0, none or a list.
        #[arg(long, default_value = "N")]
        heights: HeightSet,
        /// Allowed peak heights for pv-heights.
        #[arg(long, default_value = "N")]
        peaks: HeightSet,
        /// Allowed valley heights for pv-heights.
        #[arg(long, default_value = "N")]
        valleys: HeightSet,
        #[arg(long, value_enum, default_value_t = Route::Network)]
        route: Route,
        #[arg(long = "t")]
        t: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run invariant suites; exits nonzero on any failure.
    Verify {
        /// all, or a comma list of routes, oracle, stabilization, corollaries, algebra, clusters.
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        common: Common,
    },
    /// List the clusters of a pattern set and their generating function.
    Cluster {
        /// A pattern; repeat for several. Letters are characters.
        #[arg(long, required = true)]
        avoid: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate a network described by a JSON file.
    Network {
        #[arg(long)]
        file: PathBuf,
        /// 1-based entry i,j; all entries if omitted.
        #[arg(long)]
        entry: Option<String>,
        #[arg(long = "t")]
        t: Option<String>,
        /// Count words avoiding these patterns instead of the file's patterns.
        #[arg(long)]
        avoid: Vec<String>,
        /// Weight walks by the file's arc probabilities.
        #[arg(long)]
        prob: bool,
        #[command(flatten)]
        common: Common,
    },
}

/// Rendered output and whether the command succeeded.
fn run(cli: Cli) -> Result<(String, bool)> {
    Ok(match cli.command {
        Command::Tables { name, t, common } => (
            commands::finish(tables::table(&name, common.n)?, t.as_deref(), common.format)?,
            true,
        ),
        Command::Series {
            name,
            bound,
            heights,
            peaks,
            valleys,
            route,
            t,
            common,
        } => {
            let req = SeriesRequest {
                name,
                bound,
                heights,
                peaks,
                valleys,
                route,
                n: common.n,
            };
            (
                commands::finish(commands::series(&req)?, t.as_deref(), common.format)?,
                true,
            )
        }
        Command::Verify { suite, common } => {
            let reports = commands::run_suites(&commands::parse_suites(&suite)?, common.n)?;
            let ok = reports.iter().all(|r| r.ok());
            (commands::render_verification(&reports, common.format)?, ok)
        }
        Command::Cluster { avoid, common } => {
            (commands::cluster(&avoid, common.n, common.format)?, true)
        }
        Command::Network {
            file,
            entry,
            t,
            avoid,
            prob,
            common,
        } => {
            let entry = entry.as_deref().map(commands::parse_entry).transpose()?;
            let req = NetworkRequest {
                entry,
                avoid,
                prob,
                n: common.n,
            };
            (
                commands::finish(commands::network(&file, &req)?, t.as_deref(), common.format)?,
                true,
            )
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            let written = std::io::stdout()
                .lock()
                .write_all(out.as_bytes())
                .context("writing output");
            if let Err(e) = written {
                eprintln!("error: {e:#}");
                return ExitCode::FAILURE;
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification failed");
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
