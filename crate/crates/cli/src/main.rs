use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use cornerpack_cli::commands::{self, Outcome, SolveOptions};
use cornerpack::{Container, GenMode, RectOrder};

#[derive(Parser)]
#[command(name = "cornerpack", version, about = "Exact integral rectangle packing")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether an instance can be packed.
    ///
    /// Exit status: 0 feasible, 1 infeasible, 2 limit reached, 3 bad input.
    Solve {
        instance: PathBuf,
        /// Allow placements with a rectangle over them or on their right.
        #[arg(long)]
        no_enhanced: bool,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        node_limit: Option<u64>,
        /// Wall-clock limit in seconds.
        #[arg(long, value_parser = parse_seconds)]
        time_limit: Option<Duration>,
        #[arg(long, value_enum, default_value_t = Order::Area)]
        order: Order,
    },
    /// Slide every rectangle down and left until the packing is stable.
    Compact { instance: PathBuf, solution: PathBuf },
    /// Print a corner-occupying order that rebuilds a packing.
    Decompose { instance: PathBuf, solution: PathBuf },
    /// Generate a random instance that is feasible by construction.
    Gen {
        #[arg(long, value_parser = parse_container)]
        container: Container,
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Mode::Guillotine)]
        mode: Mode,
        /// Also write the packing the instance was built from.
        #[arg(long)]
        solution_out: Option<PathBuf>,
    },
    /// Draw a packing as SVG.
    Render {
        instance: PathBuf,
        solution: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide feasibility by exhaustive enumeration (small instances only).
    Oracle {
        instance: PathBuf,
        #[arg(long, default_value_t = 100_000_000)]
        max_states: u64,
    },
    /// Verify the four-box 3D layout in which no box can escape.
    Check3d,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Input,
    Area,
    Perimeter,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Guillotine,
    CornerWalk,
}

fn parse_seconds(s: &str) -> Result<Duration, String> {
    let secs: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    Duration::try_from_secs_f64(secs).map_err(|_| format!("`{s}` is not a valid duration"))
}

fn parse_container(s: &str) -> Result<Container, String> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected WxH, got `{s}`"))?;
    let side = |t: &str| t.parse::<u32>().map_err(|_| format!("expected WxH, got `{s}`"));
    Container::new(side(w)?, side(h)?).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Solve {
            instance,
            no_enhanced,
            node_limit,
            time_limit,
            order,
        } => {
            let opts = SolveOptions {
                enhanced: !no_enhanced,
                node_limit,
                time_limit,
                order: match order {
                    Order::Input => RectOrder::Input,
                    Order::Area => RectOrder::AreaDescending,
                    Order::Perimeter => RectOrder::PerimeterDescending,
                },
            };
            commands::cmd_solve(&instance, &opts)
        }
        Command::Compact { instance, solution } => commands::cmd_compact(&instance, &solution),
        Command::Decompose { instance, solution } => commands::cmd_decompose(&instance, &solution),
        Command::Gen {
            container,
            count,
            seed,
            mode,
            solution_out,
        } => {
            let mode = match mode {
                Mode::Guillotine => GenMode::Guillotine,
                Mode::CornerWalk => GenMode::CornerWalk,
            };
            commands::cmd_gen(container, count, seed, mode, solution_out.as_deref())
        }
        Command::Render {
            instance,
            solution,
            out,
        } => commands::cmd_render(&instance, &solution, out.as_deref()),
        Command::Oracle {
            instance,
            max_states,
        } => commands::cmd_oracle(&instance, max_states),
        Command::Check3d => commands::cmd_check3d(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors share the bad-input code.
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    let out = run(cli);
    // Ignore broken pipes; the exit code still reports the result.
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
