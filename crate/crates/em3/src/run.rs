//! Parallel drivers over the core searches.
//!
//! Work is split into independent pieces that the core solves one at a
//! time, and the pieces are recombined in their original order. Results are
//! therefore identical for any thread count.

use rayon::prelude::*;
use rayon::ThreadPool;

use em3_core::board::{
    check_case1_ineq, check_eq8_bound_at, check_final_ineq, min_final_ineq_s, CaseReport,
    Ineq7Search, NMode, DEFAULT_BOARD_BUDGET,
};
use em3_core::extremal::{
    a_of, binom, fact1_identity_check, fact2_from, fact4_q0_check, m_of, n1_exact, n1_formula,
    n1_sweep, q0_bound,
};
use em3_core::search::{m_brute, SearchBudget, SearchMode, SearchResult, ShiftedSearch};
use em3_core::weights::w_complete;
use em3_core::ExactRational;
use num_bigint::BigUint;

use crate::error::CliError;
use crate::report::{FactsResult, FactsRow, FactsSummary, N1Row, VerifyStatus, WeightRow};

pub fn pool(threads: Option<usize>) -> Result<ThreadPool, CliError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        if t == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        b = b.num_threads(t);
    }
    Ok(b.build()?)
}

/// The shifted search with its frontier solved in parallel.
pub fn shifted(
    pool: &ThreadPool,
    n: usize,
    s: usize,
    one_only: bool,
    budget: SearchBudget,
) -> Result<SearchResult, CliError> {
    let search = ShiftedSearch::new(n, s, one_only, budget)?;
    let (frontier, head) = search.split()?;
    let parts: Vec<_> = pool.install(|| {
        frontier
            .into_par_iter()
            .map(|sub| search.solve(sub))
            .collect()
    });
    Ok(search.finish(std::iter::once(head).chain(parts))?)
}

/// `m(n, s)` by the requested engine.
pub fn verify(
    pool: &ThreadPool,
    n: usize,
    s: usize,
    mode: SearchMode,
    budget: SearchBudget,
) -> Result<SearchResult, CliError> {
    match mode {
        SearchMode::Brute => Ok(m_brute(n, s)?),
        SearchMode::Shifted => shifted(pool, n, s, false, budget),
        SearchMode::ShiftedOne => shifted(pool, n, s, true, budget),
    }
}

/// Compares a search maximum with `M(n, s)`.
///
/// Above `M` is a counterexample. Below `M` is expected under property ONE
/// and for `n < 3s + 2`; otherwise one of the constructions would have been
/// found, so it signals a defect.
pub fn classify(r: &SearchResult) -> Result<(String, VerifyStatus), CliError> {
    let big_m = m_of(r.n as u64, r.s as u64)?;
    let m = BigUint::from(r.m);
    let status = if m > big_m {
        VerifyStatus::Counterexample
    } else if m == big_m {
        VerifyStatus::Equal
    } else if r.mode == SearchMode::ShiftedOne || r.n < 3 * r.s + 2 {
        VerifyStatus::Below
    } else {
        VerifyStatus::Mismatch
    };
    Ok((big_m.to_string(), status))
}

/// One board check with the pair sets solved in parallel.
pub fn board_case(
    pool: &ThreadPool,
    s: usize,
    mode: NMode,
    budget: Option<u64>,
) -> Result<CaseReport, CliError> {
    let search = Ineq7Search::with_budget(s, mode, budget.unwrap_or(DEFAULT_BOARD_BUDGET))?;
    let sets = search.pair_downsets();
    let outcomes: Vec<_> = pool.install(|| sets.par_iter().map(|p| search.solve(p)).collect());
    Ok(search.finish(&sets, &outcomes)?)
}

/// The `(s, mode)` cases of a board sweep, in output order.
///
/// Exact mode without an explicit `n` runs both `n₁(s) − 1` and `n₁(s)`.
pub fn board_cases(
    s_min: usize,
    s_max: usize,
    bound: bool,
    n: Option<usize>,
) -> Result<Vec<(usize, NMode)>, CliError> {
    if s_min > s_max {
        return Err(CliError::Usage(format!(
            "--s-min {s_min} exceeds --s-max {s_max}"
        )));
    }
    if bound && n.is_some() {
        return Err(CliError::Usage("--n only applies to --mode exact".into()));
    }
    let mut out = Vec::new();
    for s in s_min..=s_max {
        if bound {
            out.push((s, NMode::Bound));
        } else if let Some(n) = n {
            out.push((s, NMode::Exact(n)));
        } else {
            let n1 = n1_exact(s as u64)? as usize;
            out.push((s, NMode::Exact(n1 - 1)));
            out.push((s, NMode::Exact(n1)));
        }
    }
    Ok(out)
}

pub fn n1_table(pool: &ThreadPool, s_max: u64) -> Result<Vec<N1Row>, CliError> {
    let exact = n1_sweep(s_max)?;
    pool.install(|| {
        exact
            .par_iter()
            .enumerate()
            .map(|(i, &n1_exact)| {
                let s = i as u64 + 1;
                let n1_formula = n1_formula(s)?;
                Ok(N1Row {
                    s,
                    n1_exact,
                    n1_formula,
                    agree: n1_exact == n1_formula,
                })
            })
            .collect()
    })
}

const FACT1_S_MAX: u64 = 200;
const FACT1_N_MAX: u64 = 800;

pub fn facts(pool: &ThreadPool, s_max: u64, weights: bool) -> Result<FactsResult, CliError> {
    if s_max == 0 {
        return Err(CliError::Usage("--s-max must be at least 1".into()));
    }
    let n1 = n1_sweep(s_max)?;
    let rows: Vec<FactsRow> = pool.install(|| {
        n1.par_iter()
            .enumerate()
            .map(|(i, &n1_s)| {
                let s = i as u64 + 1;
                let prev = i.checked_sub(1).map(|j| n1[j]);
                let f2 = fact2_from(s, n1_s, prev);
                let from3 = |ok: bool| (s >= 3).then_some(ok);
                FactsRow {
                    s,
                    n1: n1_s,
                    bounds_ok: [Some(f2.upper), Some(f2.lower), f2.gap],
                    q0_bound: q0_bound(s),
                    trace_bound_ok: from3(check_eq8_bound_at(n1_s, s)),
                    case1_ok: from3(check_case1_ineq(s)),
                    final_ok: from3(check_final_ineq(s)),
                }
            })
            .collect()
    });
    let identity_grid = pool.install(|| {
        (1..=s_max.min(FACT1_S_MAX))
            .into_par_iter()
            .all(|s| (3 * s + 3..=FACT1_N_MAX).all(|n| fact1_identity_check(n, s).unwrap_or(false)))
    });
    let weight_rows = weights.then(|| weight_table(pool, s_max)).transpose()?;
    let summary = FactsSummary {
        n1_bounds_all: rows
            .iter()
            .all(|r| r.bounds_ok.iter().all(|b| b.unwrap_or(true))),
        q0_all: fact4_q0_check(s_max),
        identity_grid,
        trace_bound_all: rows.iter().all(|r| r.trace_bound_ok.unwrap_or(true)),
        case1_all: rows.iter().all(|r| r.case1_ok.unwrap_or(true)),
        final_from: min_final_ineq_s(s_max),
        weights_all: weight_rows
            .as_ref()
            .map(|w| w.iter().all(|r| r.identity_ok)),
    };
    Ok(FactsResult {
        rows,
        weights: weight_rows,
        summary,
    })
}

/// `W(s)` and the identity `C(s,3)·W(s) = a(s)` for `3 ≤ s ≤ s_max`.
fn weight_table(pool: &ThreadPool, s_max: u64) -> Result<Vec<WeightRow>, CliError> {
    pool.install(|| {
        (3..=s_max)
            .into_par_iter()
            .map(|s| {
                let w = w_complete(s as usize)?;
                let lhs = ExactRational::from_integer(binom(s, 3).into()) * &w;
                let identity_ok = lhs == ExactRational::from_integer(a_of(s).into());
                Ok(WeightRow {
                    s,
                    w: (&w).into(),
                    identity_ok,
                })
            })
            .collect()
    })
}
