use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use em3::edgelist;
use em3::report::{
    edges, CaseReportJson, NuResult, Report, ShiftResult, VerifyResult, VerifyStatus, VERSION,
};
use em3::run;
use em3::CliError;
use em3_core::matching::maximum_matching;
use em3_core::search::{SearchBudget, SearchMode, DEFAULT_MAX_N, DEFAULT_MAX_NODES};
use em3_core::shifting::{is_stable, stabilize};
use em3_core::MixedFamily;

#[derive(Parser)]
#[command(
    name = "em3",
    version,
    about = "Exact tools for the matching problem on 3-uniform families"
)]
struct Cli {
    /// Print one JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads. Results do not depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Brute,
    Shifted,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoardMode {
    Exact,
    Bound,
}

#[derive(Subcommand)]
enum Command {
    /// Matching number of an edge-list file, with a maximum matching.
    Nu { file: PathBuf },
    /// Shift a family until it is stable.
    Shift {
        file: PathBuf,
        /// Write the result here instead of printing it.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Compute m(n, s) exhaustively and compare with M(n, s).
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: usize,
        #[arg(long, value_enum, default_value = "shifted")]
        mode: Engine,
        /// Restrict to families with property ONE (shifted mode only).
        #[arg(long)]
        one: bool,
        /// Largest n the shifted search accepts.
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        /// Node budget of the shifted search.
        #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
        max_nodes: u64,
        /// Write the witness family to this file.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Table of n1(s) by search and by closed form.
    N1 {
        #[arg(long)]
        s_max: u64,
    },
    /// Numeric facts about n1(s) and the scalar inequalities.
    Facts {
        #[arg(long)]
        s_max: u64,
        /// Also tabulate W(s) and check C(s,3)·W(s) = a(s).
        #[arg(long)]
        weights: bool,
    },
    /// Exhaustive check of the per-board weight bound.
    BoardCheck {
        #[arg(long)]
        s_min: usize,
        #[arg(long)]
        s_max: usize,
        #[arg(long, value_enum, default_value = "bound")]
        mode: BoardMode,
        /// Vertex count for exact mode; default runs n1(s) - 1 and n1(s).
        #[arg(long)]
        n: Option<usize>,
        /// Node budget per case.
        #[arg(long)]
        budget: Option<u64>,
    },
}

struct Outcome {
    ok: bool,
}

fn emit<T: Serialize>(
    cli_json: bool,
    command: &str,
    parameters: serde_json::Value,
    results: T,
    start: Instant,
    text: impl FnOnce(&T) -> String,
) -> Result<(), CliError> {
    if cli_json {
        let report = Report {
            command: command.to_string(),
            parameters,
            results,
            elapsed_ms: start.elapsed().as_millis() as u64,
            version: VERSION,
        };
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{}", text(&results));
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let pool = run::pool(cli.threads)?;
    let json = cli.json;
    match cli.command {
        Command::Nu { file } => {
            let f = edgelist::read(&file)?;
            let m = maximum_matching(&MixedFamily::from(&f));
            let result = NuResult {
                n: f.n(),
                edges: f.len(),
                nu: m.len(),
                witness: m.members().iter().map(|h| h.elements().to_vec()).collect(),
            };
            emit(json, "nu", json!({ "file": file }), result, start, |r| {
                let mut out = format!("nu = {}\n", r.nu);
                for h in &r.witness {
                    let line: Vec<String> = h.iter().map(u16::to_string).collect();
                    out.push_str(&line.join(" "));
                    out.push('\n');
                }
                out
            })?;
            Ok(Outcome { ok: true })
        }
        Command::Shift { file, out } => {
            let f = edgelist::read(&file)?;
            let g = stabilize(&f);
            if let Some(path) = &out {
                edgelist::write(path, &g)?;
            }
            let result = ShiftResult {
                n: g.n(),
                edges: g.len(),
                input_stable: is_stable(&f),
                output: out.as_ref().map(|p| p.display().to_string()),
                shifted: edges(&g),
            };
            let text = edgelist::render(&g);
            emit(
                json,
                "shift",
                json!({ "file": file, "out": out }),
                result,
                start,
                |r| match &r.output {
                    Some(path) => format!("wrote {} edges to {path}\n", r.edges),
                    None => text,
                },
            )?;
            Ok(Outcome { ok: true })
        }
        Command::Verify {
            n,
            s,
            mode,
            one,
            max_n,
            max_nodes,
            witness,
        } => {
            let engine = match (mode, one) {
                (Engine::Brute, true) => {
                    return Err(CliError::Usage("--one needs --mode shifted".into()));
                }
                (Engine::Brute, false) => SearchMode::Brute,
                (Engine::Shifted, false) => SearchMode::Shifted,
                (Engine::Shifted, true) => SearchMode::ShiftedOne,
            };
            let r = run::verify(&pool, n, s, engine, SearchBudget { max_n, max_nodes })?;
            if let Some(path) = &witness {
                edgelist::write(path, &r.witness)?;
            }
            let (big_m, status) = run::classify(&r)?;
            let result = VerifyResult::new(
                &r,
                big_m,
                status,
                witness.as_ref().map(|p| p.display().to_string()),
            );
            let params = json!({
                "n": n, "s": s, "mode": engine.as_str(), "one": one,
                "max_n": max_n, "max_nodes": max_nodes,
            });
            emit(json, "verify", params, result, start, |r| {
                let label = if one { "m_ONE" } else { "m" };
                let verdict = match r.status {
                    VerifyStatus::Equal | VerifyStatus::Below => "OK",
                    VerifyStatus::Counterexample => "COUNTEREXAMPLE",
                    VerifyStatus::Mismatch => "MISMATCH",
                };
                let mut out = format!("{label}={} M={} {verdict}\n", r.m, r.big_m);
                if !r.status.ok() {
                    for [a, b, c] in &r.witness {
                        out.push_str(&format!("{a} {b} {c}\n"));
                    }
                }
                out
            })?;
            Ok(Outcome { ok: status.ok() })
        }
        Command::N1 { s_max } => {
            if s_max == 0 {
                return Err(CliError::Usage("--s-max must be at least 1".into()));
            }
            let rows = run::n1_table(&pool, s_max)?;
            let ok = rows.iter().all(|r| r.agree);
            emit(json, "n1", json!({ "s_max": s_max }), rows, start, |rows| {
                let mut out = format!("{:>8} {:>10} {:>10}\n", "s", "n1_exact", "n1_formula");
                for r in rows {
                    let flag = if r.agree { "" } else { "  DIFFER" };
                    out.push_str(&format!(
                        "{:>8} {:>10} {:>10}{flag}\n",
                        r.s, r.n1_exact, r.n1_formula
                    ));
                }
                out
            })?;
            Ok(Outcome { ok })
        }
        Command::Facts { s_max, weights } => {
            let result = run::facts(&pool, s_max, weights)?;
            let ok = result.summary.ok();
            let params = json!({ "s_max": s_max, "weights": weights });
            emit(json, "facts", params, result, start, |r| {
                let yn = |b: Option<bool>| match b {
                    Some(true) => "yes",
                    Some(false) => "NO",
                    None => "-",
                };
                let mut out = format!(
                    "{:>8} {:>10} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}\n",
                    "s", "n1", "upper", "lower", "gap", "trace", "case1", "final"
                );
                for row in &r.rows {
                    out.push_str(&format!(
                        "{:>8} {:>10} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}\n",
                        row.s,
                        row.n1,
                        yn(row.bounds_ok[0]),
                        yn(row.bounds_ok[1]),
                        yn(row.bounds_ok[2]),
                        yn(row.trace_bound_ok),
                        yn(row.case1_ok),
                        yn(row.final_ok)
                    ));
                }
                if let Some(ws) = &r.weights {
                    for w in ws {
                        out.push_str(&format!(
                            "W({}) = {}/{} {}\n",
                            w.s,
                            w.w.num,
                            w.w.den,
                            yn(Some(w.identity_ok))
                        ));
                    }
                }
                let sm = &r.summary;
                out.push_str(&format!("n1 bounds: {}\n", yn(Some(sm.n1_bounds_all))));
                out.push_str(&format!("q0 bound: {}\n", yn(Some(sm.q0_all))));
                out.push_str(&format!(
                    "binomial identity grid: {}\n",
                    yn(Some(sm.identity_grid))
                ));
                out.push_str(&format!(
                    "trace bound at n1: {}\n",
                    yn(Some(sm.trace_bound_all))
                ));
                out.push_str(&format!("case 1 inequality: {}\n", yn(Some(sm.case1_all))));
                match sm.final_from {
                    Some(s) => out.push_str(&format!("final inequality holds from s = {s}\n")),
                    None => out.push_str("final inequality: not established in range\n"),
                }
                out
            })?;
            Ok(Outcome { ok })
        }
        Command::BoardCheck {
            s_min,
            s_max,
            mode,
            n,
            budget,
        } => {
            let cases = run::board_cases(s_min, s_max, matches!(mode, BoardMode::Bound), n)?;
            let mut results = Vec::with_capacity(cases.len());
            for (s, m) in cases {
                let r = run::board_case(&pool, s, m, budget)?;
                results.push(CaseReportJson::from(&r));
            }
            let ok = results.iter().all(|r| r.verified);
            let params = json!({
                "s_min": s_min, "s_max": s_max,
                "mode": match mode { BoardMode::Exact => "exact", BoardMode::Bound => "bound" },
                "n": n, "budget": budget,
            });
            emit(json, "board-check", params, results, start, |rs| {
                let mut out = String::new();
                for r in rs {
                    let n = r.n.map_or("-".to_string(), |n| n.to_string());
                    out.push_str(&format!(
                        "s={} n={n} mode={} max_weight={}/{} W={}/{} configs={} {}\n",
                        r.s,
                        r.mode,
                        r.max_weight.num,
                        r.max_weight.den,
                        r.w.num,
                        r.w.den,
                        r.configs_explored,
                        if r.verified { "OK" } else { "VIOLATED" }
                    ));
                    if let Some(w) = &r.witness {
                        out.push_str(&format!("  witness: {}\n", w.join(" ")));
                    }
                }
                out
            })?;
            Ok(Outcome { ok })
        }
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
    match execute(cli) {
        Ok(Outcome { ok: true }) => ExitCode::SUCCESS,
        Ok(Outcome { ok: false }) => ExitCode::from(1),
        Err(e) => {
            eprintln!("em3: {e}");
            ExitCode::from(2)
        }
    }
}
