//! Command implementations. Each returns the exit code and the text destined
//! for stdout and stderr so that the binary stays a thin shell.
//!
//! Exit codes: 0 success (feasible), 1 infeasible, 2 undecided within the
//! limits, 3 bad input.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use cornerpack::generate::generate;
use cornerpack::space3d::{
    blocked_directions3, blockers3, find_escaper3, is_feasible3, table1_packing, Axis3,
};
use cornerpack::{
    certify, compact, is_bottom_left_stable, oracle_feasible, placement_order, quick_reject, solve,
    Container, GenMode, Instance, OracleLimits, PackError, Packing, RectOrder, SolveStatus,
    SolverConfig, Support,
};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::format::{
    emit_instance, emit_solution, parse_instance, parse_solution, FormatError, SolutionFile,
};
use crate::svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{}: {source}", path.display())]
    Format { path: PathBuf, source: FormatError },

    #[error("solution is not a feasible packing (overlap area {overlap}, area outside the container {outside})")]
    Infeasible { overlap: u64, outside: u64 },

    #[error("{0}")]
    Pack(#[from] PackError),
}

impl From<CliError> for Outcome {
    fn from(e: CliError) -> Self {
        Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn format_err(path: &Path) -> impl FnOnce(FormatError) -> CliError + '_ {
    move |source| CliError::Format {
        path: path.to_owned(),
        source,
    }
}

pub fn load_instance(path: &Path) -> Result<Instance, CliError> {
    parse_instance(&read(path)?).map_err(format_err(path))
}

/// Loads a feasible solution for the instance at `instance`.
pub fn load_packing(instance: &Path, solution: &Path) -> Result<Packing, CliError> {
    let inst = load_instance(instance)?;
    parse_solution(&read(solution)?)
        .and_then(|s| s.to_packing(&inst))
        .map_err(format_err(solution))
}

fn require_feasible(p: &Packing) -> Result<(), CliError> {
    if cornerpack::is_feasible(p) {
        Ok(())
    } else {
        let c = p.instance().container();
        Err(CliError::Infeasible {
            overlap: cornerpack::total_overlap(p),
            outside: p.rects().map(|r| cornerpack::outside_area(&r, &c)).sum(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SolveOptions {
    pub enhanced: bool,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    pub order: RectOrder,
}

pub fn cmd_solve(instance: &Path, opts: &SolveOptions) -> Outcome {
    let inst = match load_instance(instance) {
        Ok(inst) => inst,
        Err(e) => return e.into(),
    };
    let cfg = SolverConfig {
        enhanced_pruning: opts.enhanced,
        node_limit: opts.node_limit,
        time_limit: opts.time_limit,
        rect_order: opts.order,
    };
    let mut stderr = String::new();
    if let Some(reason) = quick_reject(&inst) {
        writeln!(stderr, "rejected: {reason}").unwrap();
    }
    let r = solve(&inst, &cfg);
    assert!(certify(&inst, &r), "solver returned an uncertified result");
    writeln!(
        stderr,
        "status: {}, nodes: {}, max depth: {}, elapsed: {:.3}s",
        r.status,
        r.stats.nodes,
        r.stats.max_depth,
        r.stats.elapsed.as_secs_f64()
    )
    .unwrap();
    match (r.status, r.packing) {
        (SolveStatus::Feasible, Some(p)) => Outcome {
            code: EXIT_OK,
            stdout: emit_solution(&SolutionFile::from_packing(&p)),
            stderr,
        },
        (SolveStatus::Infeasible, _) => Outcome {
            code: EXIT_INFEASIBLE,
            stdout: emit_solution(&SolutionFile::infeasible()),
            stderr,
        },
        _ => {
            stderr.push_str("search limit reached before a verdict; no solution written\n");
            Outcome {
                code: EXIT_UNKNOWN,
                stdout: String::new(),
                stderr,
            }
        }
    }
}

pub fn cmd_compact(instance: &Path, solution: &Path) -> Outcome {
    let run = || -> Result<Outcome, CliError> {
        let p = load_packing(instance, solution)?;
        require_feasible(&p)?;
        let (out, trace) = compact(&p)?;
        debug_assert!(is_bottom_left_stable(&out));
        let stderr = format!(
            "{} moves, total distance {}, L {} -> {}\n",
            trace.steps.len(),
            trace.total_distance(),
            trace.initial_l,
            trace.final_l
        );
        Ok(Outcome {
            code: EXIT_OK,
            stdout: emit_solution(&SolutionFile::from_packing(&out)),
            stderr,
        })
    };
    run().unwrap_or_else(Outcome::from)
}

fn support_label(s: Support) -> String {
    match s {
        Support::Border => "border".to_owned(),
        Support::Rect(j) => format!("rect {}", j + 1),
    }
}

pub fn cmd_decompose(instance: &Path, solution: &Path) -> Outcome {
    let run = || -> Result<Outcome, CliError> {
        let mut p = load_packing(instance, solution)?;
        require_feasible(&p)?;
        let mut stderr = String::new();
        if !is_bottom_left_stable(&p) {
            let (stable, trace) = compact(&p)?;
            writeln!(
                stderr,
                "note: packing is not bottom-left stable; compacted first ({} moves)",
                trace.steps.len()
            )
            .unwrap();
            p = stable;
        }
        let plan = placement_order(&p)?;
        let rebuilt = plan.replay(p.instance())?;
        if rebuilt.to_packing().as_ref() != Some(&p) {
            return Err(PackError::Contradiction("replay does not rebuild the packing".into()).into());
        }

        let mut stdout = String::new();
        let order: Vec<String> = plan.order.iter().map(|i| (i + 1).to_string()).collect();
        writeln!(stdout, "order: {}", order.join(" ")).unwrap();
        for (step, a) in plan.actions.iter().enumerate() {
            let c = &a.corner;
            writeln!(
                stdout,
                "{:>3}. rect {} at ({}, {}){}  left: {}  bottom: {}",
                step + 1,
                a.rect_index + 1,
                c.x,
                c.y,
                if c.rotated { " rotated" } else { "" },
                support_label(c.left_support),
                support_label(c.bottom_support),
            )
            .unwrap();
        }
        stdout.push_str("replay verified\n");
        Ok(Outcome {
            code: EXIT_OK,
            stdout,
            stderr,
        })
    };
    run().unwrap_or_else(Outcome::from)
}

pub fn cmd_gen(
    container: Container,
    count: usize,
    seed: u64,
    mode: GenMode,
    solution_out: Option<&Path>,
) -> Outcome {
    let run = || -> Result<Outcome, CliError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (inst, packing) = generate(mode, container, count, &mut rng)?;
        if let Some(path) = solution_out {
            write(path, &emit_solution(&SolutionFile::from_packing(&packing)))?;
        }
        Ok(Outcome::ok(emit_instance(&inst)))
    };
    run().unwrap_or_else(Outcome::from)
}

pub fn cmd_render(instance: &Path, solution: &Path, out: Option<&Path>) -> Outcome {
    let run = || -> Result<Outcome, CliError> {
        let p = load_packing(instance, solution)?;
        require_feasible(&p)?;
        let doc = svg::render(&p);
        match out {
            Some(path) => {
                write(path, &doc)?;
                Ok(Outcome::default())
            }
            None => Ok(Outcome::ok(doc)),
        }
    };
    run().unwrap_or_else(Outcome::from)
}

pub fn cmd_oracle(instance: &Path, max_states: u64) -> Outcome {
    let inst = match load_instance(instance) {
        Ok(inst) => inst,
        Err(e) => return e.into(),
    };
    match oracle_feasible(&inst, OracleLimits { max_states }) {
        Ok(Some(p)) => Outcome::ok(emit_solution(&SolutionFile::from_packing(&p))),
        Ok(None) => Outcome {
            code: EXIT_INFEASIBLE,
            stdout: emit_solution(&SolutionFile::infeasible()),
            stderr: String::new(),
        },
        Err(e @ PackError::OracleCapacity { .. }) => Outcome {
            code: EXIT_UNKNOWN,
            stdout: String::new(),
            stderr: format!("{e}\n"),
        },
        Err(e) => CliError::from(e).into(),
    }
}

fn axis_label(a: Axis3) -> &'static str {
    match a {
        Axis3::X => "+x",
        Axis3::Y => "+y",
        Axis3::Z => "+z",
    }
}

pub fn cmd_check3d() -> Outcome {
    let p = table1_packing();
    let d = p.container.dims;
    let mut stdout = String::new();
    writeln!(
        stdout,
        "container: {}x{}x{}",
        d.width(),
        d.depth(),
        d.height()
    )
    .unwrap();
    let feasible = is_feasible3(&p);
    writeln!(stdout, "feasible: {feasible}").unwrap();

    let mut all_blocked = true;
    for (i, b) in p.boxes.iter().enumerate() {
        let blocked = blocked_directions3(i, &p);
        all_blocked &= !blocked.is_empty();
        let by: Vec<String> = blockers3(i, &p)
            .into_iter()
            .map(|(j, a)| format!("{} by {}", axis_label(a), j + 1))
            .collect();
        writeln!(
            stdout,
            "box {}: {}x{}x{} at ({}, {}, {})  blocked {}  [{}]",
            i + 1,
            b.dims.width(),
            b.dims.depth(),
            b.dims.height(),
            b.x,
            b.y,
            b.z,
            blocked,
            by.join(", ")
        )
        .unwrap();
    }

    let verified = feasible && all_blocked && find_escaper3(&p).is_none();
    if verified {
        stdout.push_str("verdict: no escaper exists\n");
        Outcome::ok(stdout)
    } else {
        stdout.push_str("verdict: an escaper exists\n");
        Outcome {
            code: EXIT_INPUT,
            stdout,
            stderr: "error: the 3D configuration did not verify\n".to_owned(),
        }
    }
}
