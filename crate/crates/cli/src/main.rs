//! `shi` — counting, enumeration, tableau conversion and the indexed
//! bijections for dominant Shi regions, driven by JSON on stdin/stdout.

use std::io::{BufWriter, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::json;
use shi_core::verify::{run_suite, PropertyOutcome, SUITE_NAMES};
use shi_core::{
    admissible_set, bj1_forward, bj1_inverse, bj2_forward, bj2_inverse, catalan_a, catalan_c,
    enumerate_dyck_paths_with_limit, enumerate_lattice_paths_with_limit,
    enumerate_regions_a_with_limit, enumerate_regions_c_with_limit, Abacus, AlcoveTableau,
    DyckPath, Error, LatticePath, RegionTableau, DEFAULT_ENUMERATION_LIMIT,
};

#[derive(Parser)]
#[command(
    name = "shi",
    version,
    about = "Exact combinatorics of dominant Shi regions: counts, enumeration, tableaux and the indexed bijections"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum Family {
    A,
    C,
}

#[derive(Copy, Clone, ValueEnum)]
enum StreamKind {
    A,
    C,
    Lattice,
    Dyck,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Ascii,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact number of dominant regions.
    Count {
        #[arg(long = "type", value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: i64,
        /// Also enumerate the regions and assert the count matches.
        #[arg(long)]
        verify: bool,
        /// Enumeration ceiling used with --verify.
        #[arg(long)]
        limit: Option<u64>,
    },
    /// Stream regions or paths as JSON lines, in deterministic order.
    Enumerate {
        #[arg(long = "type", value_enum)]
        family: StreamKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        limit: Option<u64>,
        /// Attach the region tableau to every emitted object.
        #[arg(long)]
        tableau: bool,
    },
    /// Send an abacus (stdin JSON) to its indexed type C region.
    #[command(name = "map-bj1")]
    MapBj1 {
        #[arg(long)]
        m: i64,
        /// 1-based position in the admissible shift set.
        #[arg(long)]
        index: usize,
    },
    /// Split a type C region (stdin JSON) into its source abacus and index.
    #[command(name = "unmap-bj1")]
    UnmapBj1 {
        #[arg(long)]
        m: i64,
    },
    /// Rotate a rectangle path (stdin JSON) onto its Dyck representative.
    #[command(name = "map-bj2")]
    MapBj2,
    /// Rebuild the rectangle path from {"dyck": [...], "k": ...} on stdin.
    #[command(name = "unmap-bj2")]
    UnmapBj2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: i64,
    },
    /// Print the admissible shift set of an m-minimal abacus (stdin JSON).
    Admissible {
        #[arg(long)]
        m: i64,
    },
    /// Convert and render Shi tableaux.
    Tableau {
        #[command(subcommand)]
        action: TableauCmd,
    },
    /// Run verification suites and print one line per property.
    Verify {
        /// Suite name, or "all".
        suite: Option<String>,
        /// Worker pool size (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Subcommand)]
enum TableauCmd {
    /// Abacus JSON on stdin -> alcove tableau.
    FromAbacus {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Alcove tableau JSON on stdin -> abacus.
    ToAbacus,
    /// Alcove tableau JSON on stdin -> region tableau truncated at m.
    Region {
        #[arg(long)]
        m: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Region tableau JSON on stdin -> tableau of its minimal alcove.
    MinimalAlcove {
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Render a tableau (alcove or region) as an aligned staircase.
    Render,
}

/// Process failure with its exit code: 1 verification failure, 2 bad
/// input/invariant, 3 domain rejection, 4 resource guard.
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn failed(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceGuard { .. } => 4,
            Error::UnknownSuite(_) | Error::InvalidParameter(_) => 2,
            _ => 3,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self {
            code: 2,
            message: format!("invalid JSON input: {e}"),
        }
    }
}

fn read_stdin() -> Result<String, CliError> {
    let mut buffer = String::new();
    std::io::stdin()
        .read_to_string(&mut buffer)
        .map_err(|e| CliError::usage(format!("cannot read stdin: {e}")))?;
    Ok(buffer)
}

fn parse_stdin<T: for<'de> Deserialize<'de>>() -> Result<T, CliError> {
    Ok(serde_json::from_str(&read_stdin()?)?)
}

fn require_positive(name: &str, value: i64) -> Result<(), CliError> {
    if value < 1 {
        return Err(CliError::usage(format!("--{name} must be at least 1")));
    }
    Ok(())
}

fn emit_json<T: serde::Serialize>(value: &T) -> Result<(), CliError> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Count {
            family,
            n,
            m,
            verify,
            limit,
        } => cmd_count(family, n, m, verify, limit),
        Command::Enumerate {
            family,
            n,
            m,
            limit,
            tableau,
        } => cmd_enumerate(family, n, m, limit, tableau),
        Command::MapBj1 { m, index } => {
            require_positive("m", m)?;
            let w: Abacus = parse_stdin()?;
            emit_json(&bj1_forward(&w, index, m)?)
        }
        Command::UnmapBj1 { m } => {
            require_positive("m", m)?;
            let wbar: Abacus = parse_stdin()?;
            let (w, index) = bj1_inverse(&wbar, m)?;
            emit_json(&json!({ "w": w, "i": index }))
        }
        Command::MapBj2 => {
            let path: LatticePath = parse_stdin()?;
            let (dyck, k) = bj2_forward(&path);
            emit_json(&json!({ "dyck": dyck.steps(), "k": k }))
        }
        Command::UnmapBj2 { n, m } => {
            require_positive("m", m)?;
            require_positive("n", n as i64)?;
            #[derive(Deserialize)]
            struct Input {
                dyck: Vec<i64>,
                k: i64,
            }
            let input: Input = parse_stdin()?;
            let dyck = DyckPath::from_steps(n, m, input.dyck)
                .map_err(|e| CliError::usage(format!("invalid Dyck steps: {e}")))?;
            emit_json(&bj2_inverse(&dyck, input.k)?)
        }
        Command::Admissible { m } => {
            require_positive("m", m)?;
            let w: Abacus = parse_stdin()?;
            emit_json(&admissible_set(&w, m)?.ks())
        }
        Command::Tableau { action } => cmd_tableau(action),
        Command::Verify { suite, jobs } => cmd_verify(suite, jobs),
    }
}

fn cmd_count(
    family: Family,
    n: usize,
    m: i64,
    verify: bool,
    limit: Option<u64>,
) -> Result<(), CliError> {
    require_positive("n", n as i64)?;
    require_positive("m", m)?;
    let formula = match family {
        Family::A => catalan_a(n, m),
        Family::C => catalan_c(n, m),
    };
    if verify {
        let limit = limit.unwrap_or(DEFAULT_ENUMERATION_LIMIT);
        let enumerated = match family {
            Family::A => enumerate_regions_a_with_limit(n, m, limit)?.count(),
            Family::C => enumerate_regions_c_with_limit(n, m, limit)?.count(),
        };
        if shi_core::BigUint::from(enumerated as u64) == formula {
            eprintln!("verified: enumeration found {enumerated} regions");
        } else {
            return Err(CliError::failed(format!(
                "enumeration found {enumerated} regions but the formula gives {formula}"
            )));
        }
    }
    println!("{formula}");
    Ok(())
}

fn cmd_enumerate(
    family: StreamKind,
    n: usize,
    m: i64,
    limit: Option<u64>,
    tableau: bool,
) -> Result<(), CliError> {
    require_positive("n", n as i64)?;
    require_positive("m", m)?;
    let limit = limit.unwrap_or(DEFAULT_ENUMERATION_LIMIT);
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut write_line = |value: serde_json::Value| -> Result<(), CliError> {
        writeln!(out, "{value}").map_err(|e| CliError::usage(format!("cannot write: {e}")))?;
        Ok(())
    };
    match family {
        StreamKind::A | StreamKind::C => {
            let regions: Box<dyn Iterator<Item = Abacus>> = match family {
                StreamKind::A => Box::new(enumerate_regions_a_with_limit(n, m, limit)?),
                _ => Box::new(enumerate_regions_c_with_limit(n, m, limit)?),
            };
            for abacus in regions {
                if tableau {
                    let region = AlcoveTableau::from_abacus(&abacus).to_region(m);
                    write_line(json!({ "abacus": abacus, "tableau": region }))?;
                } else {
                    write_line(serde_json::to_value(&abacus)?)?;
                }
            }
        }
        StreamKind::Lattice => {
            if tableau {
                return Err(CliError::usage(
                    "--tableau applies to region and dyck streams only",
                ));
            }
            for path in enumerate_lattice_paths_with_limit(n, m, limit)? {
                write_line(serde_json::to_value(&path)?)?;
            }
        }
        StreamKind::Dyck => {
            for dyck in enumerate_dyck_paths_with_limit(n, m, limit)? {
                if tableau {
                    let region = dyck.to_region_tableau_with_limit(limit)?;
                    write_line(json!({ "path": dyck, "tableau": region }))?;
                } else {
                    write_line(serde_json::to_value(&dyck)?)?;
                }
            }
        }
    }
    Ok(())
}

fn cmd_tableau(action: TableauCmd) -> Result<(), CliError> {
    match action {
        TableauCmd::FromAbacus { format } => {
            let abacus: Abacus = parse_stdin()?;
            let tableau = AlcoveTableau::from_abacus(&abacus);
            match format {
                Format::Json => emit_json(&tableau),
                Format::Ascii => {
                    println!("{}", tableau.render());
                    Ok(())
                }
            }
        }
        TableauCmd::ToAbacus => {
            let tableau: AlcoveTableau = parse_stdin()?;
            emit_json(&tableau.to_abacus()?)
        }
        TableauCmd::Region { m, format } => {
            require_positive("m", m)?;
            let tableau: AlcoveTableau = parse_stdin()?;
            let region = tableau.to_region(m);
            match format {
                Format::Json => emit_json(&region),
                Format::Ascii => {
                    println!("{}", region.render());
                    Ok(())
                }
            }
        }
        TableauCmd::MinimalAlcove { format } => {
            let region: RegionTableau = parse_stdin()?;
            let alcove = region.minimal_alcove()?;
            match format {
                Format::Json => emit_json(&alcove),
                Format::Ascii => {
                    println!("{}", alcove.render());
                    Ok(())
                }
            }
        }
        TableauCmd::Render => {
            let input = read_stdin()?;
            let value: serde_json::Value = serde_json::from_str(&input)?;
            if value.get("m").is_some() {
                let region: RegionTableau = serde_json::from_value(value)?;
                println!("{}", region.render());
            } else {
                let tableau: AlcoveTableau = serde_json::from_value(value)?;
                println!("{}", tableau.render());
            }
            Ok(())
        }
    }
}

fn cmd_verify(suite: Option<String>, jobs: Option<usize>) -> Result<(), CliError> {
    if let Some(jobs) = jobs {
        if jobs < 1 {
            return Err(CliError::usage("--jobs must be at least 1"));
        }
        // ignore the error when a pool already exists (e.g. repeated calls in tests)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let suite = suite.unwrap_or_else(|| "all".to_string());
    let outcomes: Vec<PropertyOutcome> = if suite == "all" {
        SUITE_NAMES
            .par_iter()
            .map(|name| run_suite(name).expect("known suite"))
            .reduce(Vec::new, |mut acc, mut chunk| {
                acc.append(&mut chunk);
                acc
            })
    } else {
        run_suite(&suite)?
    };
    // par_iter reduce keeps the suite order only pairwise; re-sort by suite
    let mut ordered = outcomes;
    ordered.sort_by_key(|o| {
        SUITE_NAMES
            .iter()
            .position(|s| *s == o.suite)
            .unwrap_or(usize::MAX)
    });
    let mut failures = 0usize;
    for outcome in &ordered {
        println!("{}", outcome.line());
        if !outcome.passed {
            failures += 1;
        }
    }
    let total = ordered.len();
    if failures == 0 {
        println!("ok: {total} properties passed");
        Ok(())
    } else {
        Err(CliError::failed(format!(
            "{failures} of {total} properties failed"
        )))
    }
}
