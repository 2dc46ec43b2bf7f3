//! The `xnim` command line: solve, query, verify, analyze and play.
//!
//! [`run`] takes the argument list and explicit I/O handles and returns the
//! process exit code, so the binary is a one-liner and tests drive it
//! directly.
//!
//! Exit codes: 0 success, 1 check failure or other error, 2 usage,
//! 3 resource limit, 4 position outside the table bound, 5 bound too small
//! for the requested verification.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::analysis::{self, CheckReport, SequenceMode};
use crate::classify::{exceptional_graph, PairClass};
use crate::error::Error;
use crate::persist::{self, ExportFilter, RecordOrder};
use crate::position::Position;
use crate::rules::{moore_is_p, Family, GameRule};
use crate::solver::{best_move, solve_full, solve_outcomes_with, solve_remoteness_with, Outcome, SolveOptions, SolveTable};
use crate::universe::Universe;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_OUT_OF_BOUND: i32 = 4;
pub const EXIT_INSUFFICIENT_BOUND: i32 = 5;

/// Environment variable naming the table cache directory.
pub const CACHE_ENV: &str = "XNIM_CACHE";

#[derive(Parser, Debug)]
#[command(name = "xnim", version, about = "Exact nim(5,=2) against Moore's nim(4,<=2)")]
pub struct Cli {
    /// Worker threads for solving and scans.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    /// Table cache directory (defaults to $XNIM_CACHE; no caching if unset).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Fail instead of solving when a table is not cached.
    #[arg(long, global = true)]
    no_solve: bool,
    /// Memory budget for one table, in bytes.
    #[arg(long, global = true)]
    memory_budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one game and write its table.
    Solve(SolveArgs),
    /// Report everything known about one exact(5,=2) position.
    Query(QueryArgs),
    /// Run checkers; exit 0 iff all pass.
    Verify(VerifyArgs),
    /// Produce data series and exports.
    Analyze(AnalyzeArgs),
    /// Play exact(5,=2) against the engine.
    Play(PlayArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GameArg {
    Nim,
    Moore,
    Exact,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(long, value_enum, default_value = "exact")]
    game: GameArg,
    #[arg(long, default_value_t = 5)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long)]
    bound: u32,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Skip remoteness.
    #[arg(long)]
    outcomes_only: bool,
}

#[derive(Args, Debug)]
struct QueryArgs {
    /// Comma separated piles, e.g. 10,19,24,26,26.
    position: String,
    /// Table bound; defaults to the largest pile.
    #[arg(long)]
    bound: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyWhich {
    All,
    Bouton,
    Moore,
    Thm10,
    Lemma11,
    Obs5,
    Obs67,
    Obs8,
    Props,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    which: VerifyWhich,
    #[arg(long, default_value_t = 30)]
    bound: u32,
    /// Print one JSON report per line.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AnalyzeWhich {
    Obs1,
    Obs2,
    Obs3,
    Obs4,
    Remoteness,
    Exceptional,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[arg(value_enum)]
    which: AnalyzeWhich,
    #[arg(long, default_value_t = 30)]
    bound: u32,
    /// Write the class count series (obs1, obs2, obs4) or histogram
    /// (remoteness) as CSV.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Write the exceptional graph as DOT.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Write exceptional positions as JSONL.
    #[arg(long)]
    jsonl: Option<PathBuf>,
    /// Keep isolated vertices in the DOT output.
    #[arg(long)]
    include_isolated: bool,
    /// Sort JSONL records by piles instead of rank.
    #[arg(long)]
    lex: bool,
    /// First pile for obs3; all values up to 15 if omitted.
    #[arg(long)]
    x1: Option<u32>,
    /// Restrict obs3 sequences to this second pile.
    #[arg(long)]
    fixed_x2: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct PlayArgs {
    /// Starting position.
    #[arg(default_value = "1,2,3,4,5")]
    position: String,
    /// Let the engine move first.
    #[arg(long)]
    engine_first: bool,
}

enum Fail {
    Usage(String),
    Lib(Error),
    Check,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

impl From<std::io::Error> for Fail {
    fn from(e: std::io::Error) -> Self {
        Fail::Lib(Error::Io(e))
    }
}

type CmdResult = Result<(), Fail>;

struct Ctx<'a> {
    cache: Option<PathBuf>,
    no_solve: bool,
    solve: SolveOptions,
    input: &'a mut (dyn BufRead + Send),
    out: &'a mut (dyn Write + Send),
    err: &'a mut (dyn Write + Send),
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(
    args: I,
    input: &mut (dyn BufRead + Send),
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return EXIT_OK;
                }
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let mut solve = SolveOptions::default();
    if let Some(b) = cli.memory_budget {
        solve.memory_budget = b;
    }
    let cache = cli.cache.or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
    let mut ctx = Ctx {
        cache,
        no_solve: cli.no_solve,
        solve,
        input,
        out,
        err,
    };
    let result = match cli.threads {
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t as usize).build() {
            Ok(pool) => pool.install(|| dispatch(&mut ctx, cli.command)),
            Err(e) => Err(Fail::Usage(e.to_string())),
        },
        None => dispatch(&mut ctx, cli.command),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Fail::Check) => EXIT_CHECK_FAILED,
        Err(Fail::Usage(m)) => {
            let _ = writeln!(ctx.err, "error: {m}");
            EXIT_USAGE
        }
        Err(Fail::Lib(e)) => {
            let _ = writeln!(ctx.err, "error: {e}");
            if let Error::OutOfBound { pile, .. } = e {
                let _ = writeln!(ctx.err, "rerun with --bound {pile} or larger");
            }
            exit_code(&e)
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource { .. } | Error::BoundTooLarge(_) | Error::GuardExceeded { .. } => EXIT_RESOURCE,
        Error::OutOfBound { .. } => EXIT_OUT_OF_BOUND,
        Error::InsufficientBound { .. } => EXIT_INSUFFICIENT_BOUND,
        Error::InvalidRule(_) | Error::PileCount { .. } => EXIT_USAGE,
        _ => EXIT_CHECK_FAILED,
    }
}

fn dispatch(ctx: &mut Ctx<'_>, cmd: Command) -> CmdResult {
    match cmd {
        Command::Solve(a) => cmd_solve(ctx, a),
        Command::Query(a) => cmd_query(ctx, a),
        Command::Verify(a) => cmd_verify(ctx, a),
        Command::Analyze(a) => cmd_analyze(ctx, a),
        Command::Play(a) => cmd_play(ctx, a),
    }
}

fn parse_position(ctx: &mut Ctx<'_>, s: &str, n: usize) -> Result<Position, Fail> {
    let raw: Vec<u32> = s
        .trim()
        .trim_matches(|c| matches!(c, '(' | ')' | '[' | ']'))
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|e| Fail::Usage(format!("bad position {s:?}: {e}")))?;
    if raw.len() != n {
        return Err(Fail::Usage(format!("expected {n} piles, got {}", raw.len())));
    }
    let x = Position::canonical(&raw);
    if x.piles() != raw.as_slice() {
        writeln!(ctx.err, "note: position sorted to {x}")?;
    }
    Ok(x)
}

fn cache_path(ctx: &Ctx<'_>, rule: GameRule, bound: u32) -> Option<PathBuf> {
    ctx.cache.as_ref().map(|d| {
        d.join(format!(
            "{}-{}-{}-{}.xnim",
            rule.family(),
            rule.n(),
            rule.k(),
            bound
        ))
    })
}

/// Loads a table from the cache or solves it (and caches the result).
fn table(ctx: &mut Ctx<'_>, rule: GameRule, bound: u32, remoteness: bool) -> Result<SolveTable, Fail> {
    let path = cache_path(ctx, rule, bound);
    if let Some(p) = path.as_ref().filter(|p| p.exists()) {
        let t = persist::read_table(p)?;
        if t.has_remoteness() || !remoteness {
            return Ok(t);
        }
    }
    if ctx.no_solve {
        return Err(Fail::Usage(format!(
            "no cached {rule} table at bound {bound} and --no-solve given"
        )));
    }
    let start = Instant::now();
    let t = if remoteness {
        solve_full(rule, bound, &ctx.solve)?
    } else {
        solve_outcomes_with(rule, bound, &ctx.solve)?
    };
    writeln!(ctx.err, "solved {rule} at bound {bound} in {:.2?}", start.elapsed())?;
    if let Some(p) = path {
        if let Some(dir) = p.parent() {
            fs::create_dir_all(dir)?;
        }
        persist::write_table(&t, &p)?;
    }
    Ok(t)
}

fn universe(ctx: &mut Ctx<'_>, bound: u32, remoteness: bool) -> Result<Universe, Fail> {
    let mut e = table(ctx, GameRule::exact(5, 2), bound, remoteness)?;
    let mut m = table(ctx, GameRule::moore(4, 2), bound, remoteness)?;
    // a cached table may carry remoteness the other lacks
    if e.has_remoteness() && !m.has_remoteness() {
        m = solve_remoteness_with(m, &ctx.solve)?;
    } else if m.has_remoteness() && !e.has_remoteness() {
        e = solve_remoteness_with(e, &ctx.solve)?;
    }
    Ok(Universe::from_tables(e, m)?)
}

fn cmd_solve(ctx: &mut Ctx<'_>, a: SolveArgs) -> CmdResult {
    let family = match a.game {
        GameArg::Nim => Family::Nim,
        GameArg::Moore => Family::Moore,
        GameArg::Exact => Family::Exact,
    };
    let k = if family == Family::Nim { 1 } else { a.k };
    let rule = GameRule::new(family, a.n, k).map_err(|e| Fail::Usage(e.to_string()))?;
    let t = table(ctx, rule, a.bound, !a.outcomes_only)?;
    writeln!(
        ctx.out,
        "{rule} bound {}: {} positions, {} P-positions",
        a.bound,
        t.len(),
        t.p_count()
    )?;
    if let Some(p) = a.out {
        persist::write_table(&t, &p)?;
        writeln!(ctx.out, "wrote {}", p.display())?;
    }
    Ok(())
}

fn cmd_query(ctx: &mut Ctx<'_>, a: QueryArgs) -> CmdResult {
    let x = parse_position(ctx, &a.position, 5)?;
    let bound = a.bound.unwrap_or(x.leader());
    if x.leader() > bound {
        return Err(Fail::Lib(Error::OutOfBound { pile: x.leader(), bound }));
    }
    let u = universe(ctx, bound, true)?;
    let info = u.info(&x)?;
    let reduced = x.reduce();
    let mv = reduced.as_position().moore_vector();
    let balanced = moore_is_p(reduced.as_position(), 2);
    let best = match best_move(u.exact(), &x) {
        Ok(y) => Some(y),
        Err(Error::Terminal) => None,
        Err(e) => return Err(e.into()),
    };
    if a.json {
        let v = json!({
            "pos": x,
            "outcome": info.outcome,
            "reduced": reduced.as_position(),
            "moore": info.moore,
            "class": info.class,
            "quality": info.quality,
            "regularity": info.regularity,
            "deadender": info.deadender,
            "remoteness": info.remoteness,
            "remoteness_reduced": info.remoteness_reduced,
            "moore_vector": mv.sums(),
            "xi3": mv.xi(3),
            "balanced": balanced,
            "best_move": best,
        });
        writeln!(ctx.out, "{v}")?;
        return Ok(());
    }
    let opt = |v: Option<u16>| v.map_or("-".to_string(), |r| r.to_string());
    let out = &mut ctx.out;
    writeln!(out, "position           {x}")?;
    writeln!(out, "outcome            {}", info.outcome)?;
    writeln!(out, "reduced            {reduced}")?;
    writeln!(out, "moore              {}", info.moore)?;
    writeln!(out, "class              {}", info.class)?;
    writeln!(out, "quality            {}", info.quality)?;
    writeln!(
        out,
        "regularity         {}",
        info.regularity.map_or("-".to_string(), |r| r.to_string())
    )?;
    writeln!(out, "deadender          {}", if info.deadender { "yes" } else { "no" })?;
    writeln!(out, "remoteness         {}", opt(info.remoteness))?;
    writeln!(out, "remoteness_reduced {}", opt(info.remoteness_reduced))?;
    writeln!(out, "moore_vector       {:?}", mv.sums())?;
    writeln!(out, "xi3                {}", mv.xi(3))?;
    writeln!(out, "balanced           {}", if balanced { "yes" } else { "no" })?;
    match best {
        Some(y) => writeln!(out, "best_move          {y}")?,
        None => writeln!(out, "best_move          - (terminal)")?,
    }
    Ok(())
}

fn emit_report(ctx: &mut Ctx<'_>, rep: &CheckReport, json: bool) -> std::io::Result<()> {
    if json {
        return writeln!(ctx.out, "{}", rep.to_json());
    }
    writeln!(ctx.out, "{}", rep.summary())?;
    let stats: BTreeMap<_, _> = rep.stats.iter().filter(|(k, _)| k.as_str() != "degrees").collect();
    writeln!(ctx.out, "  stats: {}", serde_json::to_string(&stats).unwrap_or_default())?;
    for c in rep.counterexamples.iter().take(5) {
        writeln!(ctx.out, "  counterexample: {c}")?;
    }
    Ok(())
}

fn cmd_verify(ctx: &mut Ctx<'_>, a: VerifyArgs) -> CmdResult {
    use VerifyWhich as W;
    let wants = |w: W| a.which == W::All || a.which == w;
    let mut reports = Vec::new();

    if wants(W::Bouton) {
        let t = table(ctx, GameRule::nim(3), a.bound, false)?;
        reports.push(analysis::check_bouton_table(&t)?);
    }
    if wants(W::Moore) {
        let t = table(ctx, GameRule::moore(4, 2), a.bound, false)?;
        reports.push(analysis::check_moore_table(&t)?);
        reports.push(analysis::check_winning_moves(4, 2, a.bound)?);
    }
    let needs_universe = [W::Thm10, W::Lemma11, W::Obs5, W::Obs67, W::Obs8, W::Props]
        .into_iter()
        .any(wants);
    if needs_universe {
        if a.which == W::Props && a.bound < analysis::PROPOSITION_BOUND {
            // fail before solving anything
            return Err(insufficient_props(a.bound).into());
        }
        let u = universe(ctx, a.bound, false)?;
        if wants(W::Thm10) {
            reports.push(analysis::check_thm10(u.exact())?);
        }
        if wants(W::Lemma11) {
            reports.push(analysis::check_no_pp_moves(&u));
        }
        if wants(W::Obs5) {
            reports.push(analysis::check_obs5_column_permutation(&u, PairClass::NP));
        }
        if wants(W::Obs67) {
            let g = exceptional_graph(u.exact(), u.classes());
            reports.push(analysis::check_exceptional_observations(&g, u.bound()));
        }
        if wants(W::Obs8) {
            reports.push(analysis::check_obs8_and_conjecture(&u));
        }
        if wants(W::Props) {
            match analysis::verify_propositions(&u) {
                Ok(r) => reports.push(r),
                Err(e @ Error::InsufficientBound { .. }) if a.which == W::All => {
                    writeln!(ctx.err, "notice: props skipped: {e}")?;
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    let mut ok = true;
    for r in &reports {
        emit_report(ctx, r, a.json)?;
        ok &= r.passed;
    }
    if ok {
        Ok(())
    } else {
        Err(Fail::Check)
    }
}

fn insufficient_props(bound: u32) -> Error {
    Error::InsufficientBound {
        bound,
        missing: analysis::missing_proposition_items(bound),
    }
}

fn cmd_analyze(ctx: &mut Ctx<'_>, a: AnalyzeArgs) -> CmdResult {
    use AnalyzeWhich as W;
    let remoteness = a.which == W::Remoteness;
    let u = universe(ctx, a.bound, remoteness)?;
    let mut ok = true;
    match a.which {
        W::Obs1 | W::Obs2 | W::Obs4 => {
            let s = analysis::class_counts(&u);
            if let Some(p) = &a.csv {
                persist::export_csv_series(&s, p)?;
                writeln!(ctx.err, "wrote {}", p.display())?;
            }
            let rep = match a.which {
                W::Obs1 => analysis::check_pn_share(&s),
                W::Obs2 => analysis::check_nonmonotonicity("obs2", u.bound(), &s.pp_pn_series()),
                _ => analysis::check_nonmonotonicity("obs4", u.bound(), &s.mixed_series()),
            };
            ok &= rep.passed;
            emit_report(ctx, &rep, a.json)?;
        }
        W::Obs3 => {
            let mode = match a.fixed_x2 {
                Some(v) => SequenceMode::FixedX2(v),
                None => SequenceMode::Lexicographic,
            };
            let x1s: Vec<u32> = match a.x1 {
                Some(v) if v > u.bound() => {
                    return Err(Fail::Lib(Error::OutOfBound { pile: v, bound: u.bound() }))
                }
                Some(v) => vec![v],
                None => (0..=u.bound().min(15)).collect(),
            };
            for x1 in x1s {
                let rep = analysis::detect_periodicity(&u, x1, mode);
                if a.json {
                    writeln!(ctx.out, "{}", serde_json::to_string(&rep).map_err(Error::from)?)?;
                } else {
                    writeln!(ctx.out, "{rep}")?;
                }
            }
        }
        W::Remoteness => {
            let (rep, h) = analysis::remoteness_comparison(&u)?;
            if let Some(p) = &a.csv {
                let mut s = String::from("difference,overall,exceptional\n");
                for (d, n) in &h.overall {
                    s += &format!("{d},{n},{}\n", h.exceptional.get(d).unwrap_or(&0));
                }
                fs::write(p, s)?;
            }
            if a.json {
                writeln!(ctx.out, "{}", json!({"report": rep, "histogram": h}))?;
            } else {
                emit_report(ctx, &rep, false)?;
                writeln!(ctx.out, "difference overall exceptional")?;
                for (d, n) in &h.overall {
                    writeln!(ctx.out, "{d:>10} {n:>7} {:>11}", h.exceptional.get(d).unwrap_or(&0))?;
                }
            }
        }
        W::Exceptional => {
            let g = exceptional_graph(u.exact(), u.classes());
            if let Some(p) = &a.dot {
                persist::export_dot(&g, a.include_isolated, p)?;
                writeln!(ctx.err, "wrote {}", p.display())?;
            }
            if let Some(p) = &a.jsonl {
                let order = if a.lex { RecordOrder::Lexicographic } else { RecordOrder::Rank };
                let n = persist::export_jsonl(&u, ExportFilter::Exceptional, order, p)?;
                writeln!(ctx.err, "wrote {n} records to {}", p.display())?;
            }
            let rep = analysis::check_exceptional_observations(&g, u.bound());
            ok &= rep.passed;
            emit_report(ctx, &rep, a.json)?;
            if !a.json {
                let n_nodes = g.nodes.iter().filter(|n| n.outcome == Outcome::N).count();
                writeln!(
                    ctx.out,
                    "exceptional: {} (N {}, P {}), edges {}, isolated {}, deadenders {}",
                    g.nodes.len(),
                    n_nodes,
                    g.nodes.len() - n_nodes,
                    g.edges.len(),
                    g.isolated_count(),
                    u.classes().count_deadenders()
                )?;
            }
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Fail::Check)
    }
}

/// Parses "i j a b": take `a` from pile `i` and `b` from pile `j`, piles
/// numbered from 1 in displayed order.
fn parse_move(x: &Position, line: &str) -> Result<Position, String> {
    let nums: Vec<i64> = line
        .split_whitespace()
        .map(|t| t.parse::<i64>().map_err(|_| format!("not a number: {t:?}")))
        .collect::<Result<_, _>>()?;
    if nums.len() != 4 {
        return Err("a move reduces exactly 2 piles: enter \"i j a b\"".into());
    }
    let n = x.len() as i64;
    let (i, j, a, b) = (nums[0], nums[1], nums[2], nums[3]);
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(format!("pile numbers run from 1 to {n}"));
    }
    if i == j {
        return Err("the two piles must be different".into());
    }
    let mut piles = x.piles().to_vec();
    for (p, take) in [(i, a), (j, b)] {
        let pile = &mut piles[(p - 1) as usize];
        if take < 1 {
            return Err("each of the two piles must lose at least one stone".into());
        }
        if take > *pile as i64 {
            return Err(format!("pile {p} has only {pile} stones"));
        }
        *pile -= take as u32;
    }
    Ok(Position::canonical(&piles))
}

fn cmd_play(ctx: &mut Ctx<'_>, a: PlayArgs) -> CmdResult {
    let mut x = parse_position(ctx, &a.position, 5)?;
    let rule = GameRule::exact(5, 2);
    let t = table(ctx, rule, x.leader(), true)?;
    writeln!(
        ctx.out,
        "{rule}: each move takes at least one stone from exactly two piles. Enter \"i j a b\"."
    )?;
    let mut engine_turn = a.engine_first;
    loop {
        writeln!(ctx.out, "position {x}")?;
        if rule.is_terminal(&x) {
            let winner = if engine_turn { "you win" } else { "engine wins" };
            writeln!(ctx.out, "no legal move: {winner}")?;
            return Ok(());
        }
        if engine_turn {
            let y = best_move(&t, &x)?;
            let r = t.remoteness(&y)?;
            writeln!(ctx.out, "engine plays {y} (remoteness {r})")?;
            x = y;
        } else {
            write!(ctx.out, "your move> ")?;
            ctx.out.flush()?;
            let mut line = String::new();
            if ctx.input.read_line(&mut line)? == 0 {
                writeln!(ctx.out)?;
                writeln!(ctx.out, "bye")?;
                return Ok(());
            }
            match parse_move(&x, &line) {
                Ok(y) => x = y,
                Err(m) => {
                    writeln!(ctx.out, "rejected: {m}")?;
                    continue;
                }
            }
        }
        engine_turn = !engine_turn;
    }
}
