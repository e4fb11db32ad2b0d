use em3_core::extremal::{a_of, binom, build_a, build_b};
use em3_core::search::{m_shifted, make_maximal};
use em3_core::weights::{eq5_sum, eq6_total, tau_count, w_complete, MatchingFrame, WeightParams};
use em3_core::{ExactRational, TripleSystem};
use num_bigint::BigUint;

fn count(f: &TripleSystem) -> BigUint {
    BigUint::from(f.len())
}

/// Edges grouped by trace on `[3s+2]`: the number of edges with trace `H` is
/// at most `C(n−3s−2, 3−|H|)`, with equality for maximal families.
fn trace_sum_by_hand(f: &TripleSystem, s: usize) -> BigUint {
    let window = (3 * s + 2) as u16;
    let outside = (f.n() - 3 * s - 2) as u64;
    let mut traces = std::collections::BTreeSet::new();
    for e in f.edges() {
        let h: Vec<u16> = e.elements().into_iter().filter(|&v| v <= window).collect();
        if !h.is_empty() {
            traces.insert(h);
        }
    }
    traces
        .iter()
        .map(|h| binom(outside, (3 - h.len()) as u32))
        .sum()
}

#[test]
fn trace_counts_recover_the_size() {
    for (n, s) in [(9, 2), (12, 3), (15, 4), (11, 2), (14, 3)] {
        let b = build_b(n, s).unwrap();
        assert_eq!(eq5_sum(&b, s).unwrap(), count(&b), "ℬ({n},{s})");
        assert_eq!(trace_sum_by_hand(&b, s), count(&b));
    }
    for (n, s) in [(12, 3), (13, 3), (10, 2)] {
        let r = m_shifted(n, s, true).unwrap();
        let g = make_maximal(&r.witness, s).unwrap();
        assert_eq!(eq5_sum(&g, s).unwrap(), count(&g), "ONE witness ({n},{s})");
        assert_eq!(trace_sum_by_hand(&g, s), count(&g));
    }
}

#[test]
fn board_weights_recover_the_size() {
    let mut fams = vec![
        (build_a(12, 3).unwrap(), 3),
        (build_a(13, 3).unwrap(), 3),
        (build_a(16, 4).unwrap(), 4),
    ];
    for n in [12, 13] {
        let r = m_shifted(n, 3, true).unwrap();
        fams.push((make_maximal(&r.witness, 3).unwrap(), 3));
    }
    for (f, s) in fams {
        let frame = MatchingFrame::from_family(&f, s).unwrap();
        let p = WeightParams::new(f.n(), s).unwrap();
        let total = eq6_total(&f, &frame, &p).unwrap();
        assert_eq!(
            total,
            ExactRational::from_integer(f.len().into()),
            "n = {}",
            f.n()
        );
    }
}

#[test]
fn board_multiplicities() {
    // a trace of spread z sits in C(s−z, 3−z) of the C(s,3) boards
    for s in 3..=12u64 {
        for z in 0..=3usize {
            assert_eq!(tau_count(z, s as usize), binom(s - z as u64, 3 - z as u32));
        }
    }
}

#[test]
fn complete_board_weight() {
    for s in 3..=300u64 {
        let w = w_complete(s as usize).unwrap();
        let closed = ExactRational::new(27.into(), 1.into())
            + ExactRational::new(108.into(), (s as i64 - 2).into())
            + ExactRational::new(30.into(), ((s as i64 - 1) * (s as i64 - 2) / 2).into());
        assert_eq!(w, closed, "s = {s}");
        let total = w * ExactRational::from_integer(binom(s, 3).into());
        assert_eq!(total, ExactRational::from_integer(a_of(s).into()));
    }
}
