//! Command-line front end for the toggle/winching engine.
//!
//! Verbs: `enumerate` (list or count states), `orbits` (orbit partition),
//! `homomesy` (exact-rational verdicts per statistic), `board` (tuple board
//! with snake overlay), `verify` (the invariant battery).
//!
//! Exit codes: 0 on success / homomesic / all checks passed; 1 on a homomesy
//! counterexample, diverging orbit structure, or failed check; 2 on usage
//! errors (bad specs, unknown statistics, wrong-length orderings).

mod render;
mod verify;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use comotion_core::{
    check_homomesy, orbit_partition, rat_to_string, Action, HomomesyCheck, HomomesyVerdict,
    OrbitReport, Perm, ReportDoc, State, StateSpace, Statistic, TupleBoard,
};
use rayon::prelude::*;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "comotion",
    version,
    about = "Toggle dynamics on order ideals, winching actions on sequences, snake decompositions, and exact-rational homomesy checking"
)]
struct Cli {
    /// Worker threads for parallel sweeps (default: all cores; results do
    /// not depend on the degree)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List (or count) the states of a space
    Enumerate {
        /// Space spec: q:A,B | u:A | l:A | seq:K,M | lbseq:K,M:l1,..,lK | zseq:N
        #[arg(long)]
        space: String,
        /// Print only the number of states
        #[arg(long)]
        count: bool,
    },
    /// Partition a space into orbits of an action
    Orbits {
        #[arg(long)]
        space: String,
        #[arg(long, value_enum)]
        action: ActionKind,
        /// Pass ordering as a comma list (default: identity)
        #[arg(long)]
        nu: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        nu_order: NuOrder,
        /// Sweep every ordering and require one orbit structure
        #[arg(long)]
        all_nu: bool,
        #[arg(long, value_enum, default_value_t)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include a generation timestamp in the report
        #[arg(long)]
        stamp: bool,
    },
    /// Check statistics for homomesy over the orbit partition
    Homomesy {
        #[arg(long)]
        space: String,
        #[arg(long, value_enum)]
        action: ActionKind,
        #[arg(long)]
        nu: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        nu_order: NuOrder,
        /// Statistic selector (repeatable): size | g:i,j | d:i,j | s:j |
        /// sdiff:l,j | f:j | antipodal:i,j | rankalt | lifted:v1,..
        #[arg(long = "stat", required = true)]
        stats: Vec<String>,
        /// Check every ordering of the pass
        #[arg(long)]
        all_nu: bool,
        #[arg(long, value_enum, default_value_t)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        stamp: bool,
    },
    /// Build a tuple board and its snake decomposition
    Board {
        /// Sequence space spec: seq:K,M | lbseq:K,M:l1,..,lK | zseq:N
        #[arg(long)]
        space: String,
        /// Seed state, comma-separated
        #[arg(long)]
        seed: String,
        /// Action (default: the one matching the space)
        #[arg(long, value_enum)]
        action: Option<ActionKind>,
        #[arg(long)]
        nu: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        nu_order: NuOrder,
        #[arg(long, value_enum, default_value_t)]
        format: BoardFormat,
        /// Disable the snake overlay
        #[arg(long)]
        no_snakes: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full invariant battery
    Verify {
        #[arg(long, default_value_t = 4)]
        max_a: u32,
        #[arg(long, default_value_t = 4)]
        max_b: u32,
        #[arg(long, default_value_t = 8)]
        max_m: u32,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ActionKind {
    Comotion,
    Rowmotion,
    Promotion,
    Winch,
    #[value(name = "winch_lb")]
    WinchLb,
    #[value(name = "winch_zero")]
    WinchZero,
}

/// How `--nu` is read: `definition` applies index nu(1) first; `example`
/// applies index i at time nu(i) (the inverse order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum NuOrder {
    #[default]
    Definition,
    Example,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum ReportFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum BoardFormat {
    #[default]
    Ascii,
    Svg,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        // ignore the error when a pool already exists (e.g. repeated calls in tests)
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Enumerate { space, count } => {
            let space: StateSpace = space.parse()?;
            let states = space.states();
            let mut out = String::new();
            if count {
                out.push_str(&format!("{}\n", states.len()));
            } else {
                for s in &states {
                    out.push_str(&format!("{s}\n"));
                }
            }
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Orbits {
            space,
            action,
            nu,
            nu_order,
            all_nu,
            format,
            out,
            stamp,
        } => {
            let space: StateSpace = space.parse()?;
            if all_nu {
                if format != ReportFormat::Text {
                    bail!("--all-nu reports are text-only");
                }
                return all_nu_orbits(&space, action, out.as_deref());
            }
            let action = resolve_action(action, nu.as_deref(), nu_order, &space)?;
            let report = orbit_partition(&space, &action)?;
            let rendered = render_report(&report, &[], format, stamp);
            emit(&rendered, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Homomesy {
            space,
            action,
            nu,
            nu_order,
            stats,
            all_nu,
            format,
            out,
            stamp,
        } => {
            let space: StateSpace = space.parse()?;
            let stats: Vec<Statistic> = stats
                .iter()
                .map(|s| {
                    let st = Statistic::parse(s)?;
                    st.validate_for(&space)?;
                    Ok(st)
                })
                .collect::<comotion_core::Result<_>>()?;
            if all_nu {
                if format != ReportFormat::Text {
                    bail!("--all-nu reports are text-only");
                }
                return all_nu_homomesy(&space, action, &stats, out.as_deref());
            }
            let action = resolve_action(action, nu.as_deref(), nu_order, &space)?;
            let report = orbit_partition(&space, &action)?;
            let checks: Vec<HomomesyCheck> = stats
                .iter()
                .map(|st| check_homomesy(&report, st))
                .collect::<comotion_core::Result<_>>()?;
            let rendered = render_report(&report, &checks, format, stamp);
            emit(&rendered, out.as_deref())?;
            let all_pass = checks.iter().all(|c| c.verdict.is_homomesic());
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Board {
            space,
            seed,
            action,
            nu,
            nu_order,
            format,
            no_snakes,
            out,
        } => {
            let space_str = space.clone();
            let space: StateSpace = space.parse()?;
            let board = build_board(&space, &seed, action, nu.as_deref(), nu_order)?;
            let with_snakes = !no_snakes;
            let rendered = match format {
                BoardFormat::Ascii => render::ascii(&board, with_snakes),
                BoardFormat::Svg => render::svg(&board, with_snakes),
                BoardFormat::Json => render::json(&board, &space_str, &seed, with_snakes),
            };
            emit(&rendered, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            max_a,
            max_b,
            max_m,
            max_n,
        } => {
            let caps = verify::Caps {
                max_a,
                max_b,
                max_m,
                max_n,
            };
            let results = verify::run_battery(caps);
            let (text, all_pass) = verify::render(&results);
            print!("{text}");
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn parse_nu(s: &str) -> anyhow::Result<Perm> {
    let img = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .with_context(|| format!("cannot parse `{t}` in --nu"))
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(Perm::new(img)?)
}

fn resolve_action(
    kind: ActionKind,
    nu: Option<&str>,
    order: NuOrder,
    space: &StateSpace,
) -> anyhow::Result<Action> {
    let needs_nu = !matches!(kind, ActionKind::Rowmotion | ActionKind::Promotion);
    if !needs_nu && nu.is_some() {
        bail!("--nu is not accepted for rowmotion/promotion (their order is fixed)");
    }
    let perm = match nu {
        Some(s) => parse_nu(s)?,
        None => Perm::identity(space.pass_len()),
    };
    let perm = match order {
        NuOrder::Definition => perm,
        NuOrder::Example => perm.inverse(),
    };
    let action = match kind {
        ActionKind::Comotion => Action::Comotion(perm),
        ActionKind::Rowmotion => Action::Rowmotion,
        ActionKind::Promotion => Action::Promotion,
        ActionKind::Winch => Action::Winch(perm),
        ActionKind::WinchLb => Action::WinchLb(perm),
        ActionKind::WinchZero => Action::WinchZero(perm),
    };
    action.validate_for(space)?;
    Ok(action)
}

fn build_board(
    space: &StateSpace,
    seed: &str,
    action: Option<ActionKind>,
    nu: Option<&str>,
    order: NuOrder,
) -> anyhow::Result<TupleBoard> {
    let expected_kind = match space {
        StateSpace::Seqs { .. } => ActionKind::Winch,
        StateSpace::BoundedSeqs { .. } => ActionKind::WinchLb,
        StateSpace::ZeroSeqs { .. } => ActionKind::WinchZero,
        StateSpace::Ideals(_) => {
            bail!("boards are built over sequence spaces (seq:, lbseq:, zseq:); use the bijections to map ideals")
        }
    };
    if let Some(kind) = action {
        if kind != expected_kind {
            bail!("action does not match the space (expected {expected_kind:?})");
        }
    }
    let perm = match nu {
        Some(s) => parse_nu(s)?,
        None => Perm::identity(space.pass_len()),
    };
    let perm = match order {
        NuOrder::Definition => perm,
        NuOrder::Example => perm.inverse(),
    };
    if perm.len() != space.pass_len() {
        bail!("--nu must be a permutation of [{}]", space.pass_len());
    }
    let state = space.parse_state(seed)?;
    Ok(match state {
        State::Seq(x) => TupleBoard::build_winch(&x, &perm)?,
        State::Bounded(x) => TupleBoard::build_winch_lb(&x, &perm)?,
        State::Zero(x) => TupleBoard::build_winch_zero(&x, &perm)?,
        State::Ideal(_) => unreachable!("rejected above"),
    })
}

fn now_stamp() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

fn render_report(
    report: &OrbitReport,
    checks: &[HomomesyCheck],
    format: ReportFormat,
    stamp: bool,
) -> String {
    let stamp = stamp.then(now_stamp);
    match format {
        ReportFormat::Json => ReportDoc::new(report, checks, stamp).to_json(),
        ReportFormat::Csv => ReportDoc::new(report, checks, stamp).to_csv(),
        ReportFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!("space: {}\n", report.space));
            out.push_str(&format!("action: {}\n", report.action.tag()));
            if let Some(nu) = report.action.nu() {
                out.push_str(&format!("nu: {nu}\n"));
            }
            if let Some(s) = stamp {
                out.push_str(&format!("stamp: {s}\n"));
            }
            out.push_str(&format!("orbit sizes: {:?}\n", report.orbit_sizes()));
            for (i, orbit) in report.orbits.iter().enumerate() {
                let states: Vec<String> = orbit.iter().map(ToString::to_string).collect();
                out.push_str(&format!(
                    "orbit {} (size {}): {}\n",
                    i + 1,
                    orbit.len(),
                    states.join(" ")
                ));
            }
            for check in checks {
                out.push_str(&verdict_line(check));
            }
            out
        }
    }
}

fn verdict_line(check: &HomomesyCheck) -> String {
    match &check.verdict {
        HomomesyVerdict::Homomesic { constant } => format!(
            "stat {}: homomesic, constant {}\n",
            check.stat,
            rat_to_string(*constant)
        ),
        HomomesyVerdict::Counterexample {
            orbit_a,
            orbit_b,
            avg_a,
            avg_b,
        } => format!(
            "stat {}: NOT homomesic: orbit {} avg {} vs orbit {} avg {}\n",
            check.stat,
            orbit_a + 1,
            rat_to_string(*avg_a),
            orbit_b + 1,
            rat_to_string(*avg_b)
        ),
    }
}

fn all_nu_orbits(
    space: &StateSpace,
    kind: ActionKind,
    out: Option<&Path>,
) -> anyhow::Result<ExitCode> {
    if !matches!(kind, ActionKind::Comotion | ActionKind::Winch | ActionKind::WinchLb | ActionKind::WinchZero) {
        bail!("--all-nu needs an action with an ordering (comotion or a winching variant)");
    }
    let k = space.pass_len();
    let nus = Perm::all(k);
    let structures: Vec<(Perm, Vec<usize>)> = nus
        .par_iter()
        .map(|nu| {
            let action = action_with(kind, nu.clone());
            let st = orbit_partition(space, &action)
                .expect("every ordering of the pass is valid")
                .orbit_structure();
            (nu.clone(), st)
        })
        .collect();
    let mut text = format!("space: {space}\naction: {} (all {} orderings)\n", tag_of(kind), nus.len());
    let base = &structures[0].1;
    let divergent = structures.iter().find(|(_, st)| st != base);
    let code = match divergent {
        None => {
            text.push_str(&format!(
                "orbit structure: {base:?} (identical across {} orderings)\n",
                nus.len()
            ));
            ExitCode::SUCCESS
        }
        Some((nu, st)) => {
            text.push_str(&format!(
                "DIVERGENT: nu={} gives {base:?} but nu={nu} gives {st:?}\n",
                structures[0].0
            ));
            ExitCode::from(1)
        }
    };
    emit(&text, out)?;
    Ok(code)
}

fn all_nu_homomesy(
    space: &StateSpace,
    kind: ActionKind,
    stats: &[Statistic],
    out: Option<&Path>,
) -> anyhow::Result<ExitCode> {
    if !matches!(kind, ActionKind::Comotion | ActionKind::Winch | ActionKind::WinchLb | ActionKind::WinchZero) {
        bail!("--all-nu needs an action with an ordering (comotion or a winching variant)");
    }
    let k = space.pass_len();
    let nus = Perm::all(k);
    let per_nu: Vec<(Perm, Vec<HomomesyCheck>)> = nus
        .par_iter()
        .map(|nu| {
            let action = action_with(kind, nu.clone());
            let report = orbit_partition(space, &action).expect("validated action");
            let checks = stats
                .iter()
                .map(|st| check_homomesy(&report, st).expect("validated statistic"))
                .collect();
            (nu.clone(), checks)
        })
        .collect();
    let mut text = format!(
        "space: {space}\naction: {} (all {} orderings)\n",
        tag_of(kind),
        nus.len()
    );
    let mut all_pass = true;
    for (si, stat) in stats.iter().enumerate() {
        let mut failure = None;
        let mut constants = Vec::new();
        for (nu, checks) in &per_nu {
            match &checks[si].verdict {
                HomomesyVerdict::Homomesic { constant } => {
                    if !constants.contains(constant) {
                        constants.push(*constant);
                    }
                }
                HomomesyVerdict::Counterexample { .. } => {
                    failure = Some((nu.clone(), checks[si].clone()));
                    break;
                }
            }
        }
        match failure {
            None => {
                let cs: Vec<String> = constants.iter().map(|&c| rat_to_string(c)).collect();
                text.push_str(&format!(
                    "stat {}: homomesic under all {} orderings, constant {}\n",
                    stat,
                    nus.len(),
                    cs.join(", ")
                ));
                if constants.len() > 1 {
                    all_pass = false;
                }
            }
            Some((nu, check)) => {
                all_pass = false;
                text.push_str(&format!("under nu={nu}: {}", verdict_line(&check)));
            }
        }
    }
    emit(&text, out)?;
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn action_with(kind: ActionKind, nu: Perm) -> Action {
    match kind {
        ActionKind::Comotion => Action::Comotion(nu),
        ActionKind::Winch => Action::Winch(nu),
        ActionKind::WinchLb => Action::WinchLb(nu),
        ActionKind::WinchZero => Action::WinchZero(nu),
        ActionKind::Rowmotion => Action::Rowmotion,
        ActionKind::Promotion => Action::Promotion,
    }
}

fn tag_of(kind: ActionKind) -> &'static str {
    match kind {
        ActionKind::Comotion => "comotion",
        ActionKind::Rowmotion => "rowmotion",
        ActionKind::Promotion => "promotion",
        ActionKind::Winch => "winch",
        ActionKind::WinchLb => "winch_lb",
        ActionKind::WinchZero => "winch_zero",
    }
}

fn emit(rendered: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, rendered)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(())
}
