use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use terrain_guard::algos::{Verdict, DEFAULT_CAP};
use terrain_guard::gen::{generate_random, Family, GenParams};
use terrain_guard_cli::bench::{render_rows, run_bench, BenchParams};
use terrain_guard_cli::run::{oracle, solve, verify};
use terrain_guard_cli::svg::render_svg;
use terrain_guard_cli::{parse_instance, serialize_instance, Algo, CliError, CliResult, Format, SolutionFile};

#[derive(Parser)]
#[command(name = "tguard", version, about = "Guarding 1.5D terrains with exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an algorithm and report cost, LP value and bound checks.
    Solve {
        input: PathBuf,
        #[arg(long, value_enum)]
        algo: Algo,
        /// Also compute the exhaustive optimum and check the ratio.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the chosen guards as a solution file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive optimum over all guard subsets.
    Oracle {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a solution file against an instance.
    Verify {
        input: PathBuf,
        #[arg(long)]
        solution: PathBuf,
    },
    /// Write a random instance.
    Gen {
        #[command(flatten)]
        sizes: Sizes,
        #[arg(long, value_enum, default_value_t = GenFamily::OneSided)]
        family: GenFamily,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Unit guard weights.
        #[arg(long)]
        unit: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw an instance, optionally with a solution, as SVG.
    Render {
        input: PathBuf,
        /// Solve with this algorithm and draw the result.
        #[arg(long, value_enum, conflicts_with = "solution")]
        algo: Option<Algo>,
        #[arg(long)]
        solution: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run a seeded batch and print one line per instance.
    Bench {
        #[command(flatten)]
        sizes: Sizes,
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        no_oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Sizes {
    #[arg(long, default_value_t = 8)]
    vertices: usize,
    #[arg(long, default_value_t = 10)]
    points: usize,
    #[arg(long, default_value_t = 6)]
    guards: usize,
    /// Guards placed on points (discrete family only).
    #[arg(long, default_value_t = 0)]
    shared: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Left,
    OneSided,
    Discrete,
    Continuous,
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Write { path: path.to_path_buf(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Solve { input, algo, oracle, cap, format, out } => {
            let inst = parse_instance(&read(&input)?)?;
            let report = solve(&inst, algo, oracle.then_some(cap))?;
            print!("{}", report.render(format));
            if let Some(path) = out {
                emit(Some(&path), &SolutionFile::from_solution(&report.solution).to_json())?;
            }
        }
        Command::Oracle { input, cap, format, out } => {
            let inst = parse_instance(&read(&input)?)?;
            let report = oracle(&inst, cap)?;
            print!("{}", report.render(format));
            if let Some(path) = out {
                emit(Some(&path), &SolutionFile::from_solution(&report.solution).to_json())?;
            }
        }
        Command::Verify { input, solution } => {
            let inst = parse_instance(&read(&input)?)?;
            let sol = SolutionFile::from_json(&read(&solution)?)?.to_solution(&inst)?;
            match verify(&inst, &sol) {
                Verdict::Feasible => println!("feasible\tcost\t{}", sol.cost),
                Verdict::Uncovered(p) => {
                    println!("infeasible\tuncovered\t{}\t{}", p.x(), p.y());
                    return Ok(ExitCode::from(1));
                }
                Verdict::ForeignGuard(k) => {
                    return Err(CliError::invalid("solution", format!("no {} guard at x = {}", k.side, k.guard.x())));
                }
            }
        }
        Command::Gen { sizes, family, seed, unit, out } => {
            let family = match family {
                GenFamily::Left => Family::LeftGuarding,
                GenFamily::OneSided => Family::OneSided,
                GenFamily::Discrete => Family::Discrete { shared: sizes.shared },
                GenFamily::Continuous => Family::Continuous,
            };
            let mut params = GenParams::new(seed, sizes.vertices, sizes.points, sizes.guards, family);
            params.unit_weights = unit;
            emit(out.as_deref(), &serialize_instance(&generate_random(&params)))?;
        }
        Command::Render { input, algo, solution, out } => {
            let inst = parse_instance(&read(&input)?)?;
            let sol = match (algo, solution) {
                (Some(algo), _) => Some(solve(&inst, algo, None)?.solution),
                (None, Some(path)) => Some(SolutionFile::from_json(&read(&path)?)?.to_solution(&inst)?),
                (None, None) => None,
            };
            emit(Some(&out), &render_svg(&inst, sol.as_ref()))?;
        }
        Command::Bench { sizes, algo, seed, count, cap, no_oracle, format, out } => {
            let params = BenchParams {
                algo,
                seed,
                count,
                vertices: sizes.vertices,
                points: sizes.points,
                guards: sizes.guards,
                shared: sizes.shared,
                cap: (!no_oracle).then_some(cap),
            };
            let rows = run_bench(&params)?;
            emit(out.as_deref(), &render_rows(&rows, format))?;
            if let Some(bad) = rows.iter().find(|r| !r.report.all_checks_hold()) {
                eprintln!("bound check failed on seed {}", bad.seed);
                return Ok(ExitCode::from(4));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
