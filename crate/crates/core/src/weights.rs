//! Trace weights and the double-counting identities behind them.
//!
//! Fix an `s`-matching `F₁..F_s` covering `[3s+2]` minus `{1, d}`. For a
//! three-element index set `τ`, the board `V^τ` is `{1, d}` together with
//! the three triples `Fᵢ`, `i ∈ τ`. A trace `H` meeting `z` of the `Fᵢ`
//! (its spread) lies in `C(s−z, 3−z)` boards, so giving it weight
//!
//! ```text
//! w(H) = C(n−3s−2, 3−|H|) / C(s−z, 3−z)
//! ```
//!
//! makes the board totals add back up to the number of edges whose trace
//! is `H`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::extremal::binom;
use crate::hypergraph::{SmallSet, Triple, TripleSystem, Vertex};
use crate::matching::{maximum_matching, nu, MixedFamily};
use crate::search::is_maximal;
use crate::shifting::is_stable;

/// Reduced fraction of big integers with positive denominator.
pub type ExactRational = BigRational;

pub(crate) fn ratio(num: BigUint, den: BigUint) -> ExactRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// `F₁..F_s` and the leftover pair `{1, d}` of `[3s+2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingFrame {
    s: usize,
    triples: Vec<Triple>,
    d: Vertex,
    column: Vec<usize>,
}

impl MatchingFrame {
    pub fn new(triples: Vec<Triple>, d: Vertex) -> Result<MatchingFrame> {
        let s = triples.len();
        let window = 3 * s + 2;
        if d < 2 || usize::from(d) > window {
            return Err(Error::InvalidParameter(format!(
                "d = {d} must lie in 2..={window}"
            )));
        }
        let mut column = vec![0; window + 1];
        for (i, t) in triples.iter().enumerate() {
            for v in t.elements() {
                let v = usize::from(v);
                if v > window || v == 1 || v == usize::from(d) || column[v] != 0 {
                    return Err(Error::InvalidParameter(format!(
                        "frame triple {t} must avoid 1, d and the other triples inside [{window}]"
                    )));
                }
                column[v] = i + 1;
            }
        }
        Ok(MatchingFrame {
            s,
            triples,
            d,
            column,
        })
    }

    /// The frame of a family: an `s`-matching of edges inside `[3s+2]` that
    /// avoids 1 and the smallest possible `d`.
    pub fn from_family(f: &TripleSystem, s: usize) -> Result<MatchingFrame> {
        let window = 3 * s + 2;
        if f.n() < window {
            return Err(Error::InvalidParameter(format!("need n ≥ {window}")));
        }
        for d in 2..=window as Vertex {
            let inside = f
                .edges()
                .filter(|e| usize::from(e.largest()) <= window && !e.contains(1) && !e.contains(d))
                .map(|&e| SmallSet::from(e));
            let family = MixedFamily::new(window, inside)?;
            let matching = maximum_matching(&family);
            if matching.len() == s {
                let triples = matching
                    .members()
                    .iter()
                    .filter_map(SmallSet::as_triple)
                    .collect();
                return MatchingFrame::new(triples, d);
            }
        }
        Err(Error::Precondition(format!(
            "no {s}-matching inside [{window}] avoids vertex 1"
        )))
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn d(&self) -> Vertex {
        self.d
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    /// `1 + index` of the frame triple holding `v`, or 0 for `1` and `d`.
    pub fn column_of(&self, v: Vertex) -> Option<usize> {
        self.column.get(usize::from(v)).copied()
    }
}

/// `n` and `s` with `n ≥ 3s+3` and `s ≥ 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightParams {
    n: usize,
    s: usize,
}

impl WeightParams {
    pub fn new(n: usize, s: usize) -> Result<WeightParams> {
        if s < 3 || n < 3 * s + 3 {
            return Err(Error::InvalidParameter(format!(
                "weights need s ≥ 3 and n ≥ 3s+3, got n = {n}, s = {s}"
            )));
        }
        Ok(WeightParams { n, s })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn s(&self) -> usize {
        self.s
    }

    /// `n − 3s − 2`, the number of vertices beyond the window.
    pub fn outside(&self) -> u64 {
        (self.n - 3 * self.s - 2) as u64
    }
}

/// Number of frame triples met by `h`.
pub fn spread(h: &SmallSet, frame: &MatchingFrame) -> Result<usize> {
    let mut met = BTreeSet::new();
    for &v in h.elements() {
        match frame.column_of(v) {
            Some(0) => {}
            Some(c) => {
                met.insert(c);
            }
            None => {
                return Err(Error::VertexOutOfRange {
                    vertex: usize::from(v),
                    n: 3 * frame.s + 2,
                })
            }
        }
    }
    Ok(met.len())
}

/// `C(s−z, 3−z)`: how many boards `V^τ` contain a set of spread `z`.
pub fn tau_count(z: usize, s: usize) -> BigUint {
    binom((s - z) as u64, (3 - z) as u32)
}

/// `w(H)` for a pair or triple inside the window.
pub fn weight(h: &SmallSet, frame: &MatchingFrame, p: &WeightParams) -> Result<ExactRational> {
    if frame.s != p.s {
        return Err(Error::InvalidParameter(format!(
            "frame has s = {} but parameters have s = {}",
            frame.s, p.s
        )));
    }
    if !(2..=3).contains(&h.len()) {
        return Err(Error::UndefinedWeight {
            set: *h,
            reason: "only pairs and triples carry a weight",
        });
    }
    let z = spread(h, frame)?;
    if z == 0 {
        return Err(Error::UndefinedWeight {
            set: *h,
            reason: "the set meets no frame triple",
        });
    }
    Ok(ratio(
        binom(p.outside(), (3 - h.len()) as u32),
        tau_count(z, p.s),
    ))
}

fn check_setup(f: &TripleSystem, s: usize) -> Result<()> {
    if f.n() < 3 * s + 3 {
        return Err(Error::Precondition(format!(
            "need n ≥ 3s+3 = {}",
            3 * s + 3
        )));
    }
    let actual = nu(&MixedFamily::from(f));
    if actual != s {
        return Err(Error::MatchingNumber {
            expected: s,
            actual,
        });
    }
    if !is_stable(f) {
        return Err(Error::Precondition("family is not stable".into()));
    }
    if !is_maximal(f, s)? {
        return Err(Error::Precondition("family is not maximal".into()));
    }
    Ok(())
}

/// `Σ C(n−3s−2, 3−|H|)` over the distinct traces `H` on `[3s+2]`.
///
/// Requires a stable maximal family with `ν = s` on `n ≥ 3s+3` vertices.
pub fn eq5_sum(f: &TripleSystem, s: usize) -> Result<BigUint> {
    check_setup(f, s)?;
    let trace = f.trace(3 * s + 2)?;
    let outside = (f.n() - 3 * s - 2) as u64;
    Ok(trace
        .members()
        .map(|h| binom(outside, (3 - h.len()) as u32))
        .sum())
}

/// `Σ_τ Σ_{H ∈ F₀^τ} w(H)`, evaluated per trace as `Σ_H C(s−z, 3−z) w(H)`.
pub fn eq6_total(
    f: &TripleSystem,
    frame: &MatchingFrame,
    p: &WeightParams,
) -> Result<ExactRational> {
    check_setup(f, p.s)?;
    if f.n() != p.n {
        return Err(Error::InvalidParameter(format!(
            "family has n = {} but parameters have n = {}",
            f.n(),
            p.n
        )));
    }
    let trace = f.trace(3 * p.s + 2)?;
    let mut total = ExactRational::zero();
    for h in trace.members() {
        let z = spread(h, frame)?;
        let w = weight(h, frame, p)?;
        total += w * ratio(tau_count(z, p.s), BigUint::one());
    }
    Ok(total)
}

/// Total weight of all 165 triples on one board: the per-board share of `|𝒜|`.
pub fn w_complete(s: usize) -> Result<ExactRational> {
    if s < 3 {
        return Err(Error::InvalidParameter(format!("W needs s ≥ 3, got {s}")));
    }
    // board vertices 1 and d carry column 0, the rest columns 1..=3
    const COLUMNS: [u8; 11] = [0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3];
    let mut total = ExactRational::zero();
    for i in 0..11 {
        for j in i + 1..11 {
            for k in j + 1..11 {
                let mut met = [false; 4];
                for x in [i, j, k] {
                    met[usize::from(COLUMNS[x])] = true;
                }
                let z = met[1..].iter().filter(|&&m| m).count();
                total += ratio(BigUint::one(), tau_count(z, s));
            }
        }
    }
    Ok(total)
}
