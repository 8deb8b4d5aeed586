//! Library side of the `ramsey` command-line tool: file formats,
//! verification, and report rendering. The binary in `main.rs` is a thin
//! wrapper over [`run`].

pub mod files;
pub mod report;
pub mod verify;

use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use ramsey_core::{
    checkpoint, issai, issai_search, search, CliqueTargets, SearchOptions, SearchStatus,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Difference Ramsey and Issai number searches, witness verification, and
/// lower-bound reports.
#[derive(Parser)]
#[command(name = "ramsey", version, about)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a difference Ramsey number D(k1,...,kr)
    Search(SearchArgs),
    /// Compute an Issai (generalized Schur) number S(k1,...,kr)
    Issai(SearchArgs),
    /// Check a coloring file against clique or Schur-tuple targets
    Verify {
        /// Coloring file to check
        file: PathBuf,
        /// Comma-separated clique sizes, one per color
        #[arg(long, value_delimiter = ',')]
        targets: Vec<usize>,
    },
    /// Render a results file as a lower-bound document
    Report {
        /// Results file written by `search --out`
        results: PathBuf,
        /// Output format: markdown or latex
        #[arg(long, default_value = "markdown")]
        format: String,
        /// Write the document here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Comma-separated clique sizes, one per color (e.g. 3,3,6)
    #[arg(long, value_delimiter = ',')]
    targets: Option<Vec<usize>>,
    /// Cap every level at this many colorings; the result becomes a
    /// certified lower bound
    #[arg(long)]
    beam: Option<usize>,
    /// Rewrite this checkpoint file before every extension step
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Resume from a checkpoint file written by --checkpoint
    #[arg(long)]
    resume: Option<PathBuf>,
    /// Print every maximal coloring as an assignment string
    #[arg(long)]
    all_maximal: bool,
    /// Write a machine-readable results file
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker-thread hint for level extension
    #[arg(long)]
    jobs: Option<usize>,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            beam_cap: self.beam,
            checkpoint_path: self.checkpoint.clone(),
            jobs: self.jobs,
            ..Default::default()
        }
    }

    /// Targets from the flag, cross-checked against the resume file when
    /// both are present.
    fn targets_with(&self, from_file: Option<&CliqueTargets>) -> anyhow::Result<CliqueTargets> {
        match (&self.targets, from_file) {
            (Some(sizes), maybe) => {
                let t = CliqueTargets::new(sizes.clone())?;
                if let Some(file_t) = maybe {
                    if *file_t != t {
                        bail!(
                            "--targets {} disagrees with checkpoint targets {}",
                            t.to_compact_string(),
                            file_t.to_compact_string()
                        );
                    }
                }
                Ok(t)
            }
            (None, Some(file_t)) => Ok(file_t.clone()),
            (None, None) => bail!("--targets is required unless --resume is given"),
        }
    }
}

/// Runs the parsed command, returning the process exit code.
pub fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Search(args) => run_search(args),
        Command::Issai(args) => run_issai(args),
        Command::Verify { file, targets } => run_verify(&file, targets),
        Command::Report {
            results,
            format,
            out,
        } => run_report(&results, &format, out.as_deref()),
    }
}

fn run_search(args: SearchArgs) -> anyhow::Result<i32> {
    let options = args.options();
    let outcome = match &args.resume {
        Some(path) => {
            let (file_targets, level) = checkpoint::read_ramsey(path)
                .with_context(|| format!("reading checkpoint {}", path.display()))?;
            let targets = args.targets_with(Some(&file_targets))?;
            ramsey_core::search::resume(level, &targets, &options)?
        }
        None => {
            let targets = args.targets_with(None)?;
            search(&targets, &options)?
        }
    };

    let t = outcome.targets.to_compact_string();
    match outcome.status {
        SearchStatus::Exact => println!(
            "D({t}) = {} (exact), maximal graphs: {}",
            outcome.value,
            outcome.orbit_count.expect("exact outcome has a count")
        ),
        SearchStatus::LowerBound => println!("D({t}) >= {} (capped)", outcome.value),
    }
    if args.all_maximal {
        for s in outcome.maximal.assignment_strings() {
            println!("{s}");
        }
    }
    if let Some(path) = &args.out {
        let results = files::ResultsFile::from_outcome(&outcome);
        std::fs::write(path, results.emit())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(EXIT_OK)
}

fn run_issai(args: SearchArgs) -> anyhow::Result<i32> {
    let options = args.options();
    let outcome = match &args.resume {
        Some(path) => {
            let (file_targets, level) = checkpoint::read_issai(path)
                .with_context(|| format!("reading checkpoint {}", path.display()))?;
            let targets = args.targets_with(Some(&file_targets))?;
            issai::resume_issai(level, &targets, &options)?
        }
        None => {
            let targets = args.targets_with(None)?;
            issai_search(&targets, &options)?
        }
    };

    let t = outcome.targets.to_compact_string();
    match outcome.status {
        SearchStatus::Exact => println!("S({t}) = {}", outcome.value),
        SearchStatus::LowerBound => println!("S({t}) >= {} (capped)", outcome.value),
    }
    if args.all_maximal {
        for s in outcome.maximal.assignment_strings() {
            println!("{s}");
        }
    }
    if let Some(path) = &args.out {
        let results = files::ResultsFile::from_issai_outcome(&outcome);
        std::fs::write(path, results.emit())
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(EXIT_OK)
}

fn run_verify(path: &std::path::Path, targets: Vec<usize>) -> anyhow::Result<i32> {
    let targets = CliqueTargets::new(targets)?;
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file =
        files::ColoringFile::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    let report = verify::verify_coloring_file(&file, &targets)?;
    print!("{}", report.render());
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    })
}

fn run_report(
    path: &std::path::Path,
    format: &str,
    out: Option<&std::path::Path>,
) -> anyhow::Result<i32> {
    let format = match format {
        "markdown" => report::ReportFormat::Markdown,
        "latex" => report::ReportFormat::Latex,
        other => bail!("unknown format `{other}`; use markdown or latex"),
    };
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let results =
        files::ResultsFile::parse(&text).with_context(|| format!("parsing {}", path.display()))?;
    let doc = report::render(&results, format)?;
    match out {
        Some(dest) => {
            std::fs::write(dest, doc).with_context(|| format!("writing {}", dest.display()))?
        }
        None => print!("{doc}"),
    }
    Ok(EXIT_OK)
}
