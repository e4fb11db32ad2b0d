//! Triple systems on the ordered vertex set `[n] = {1, ..., n}` and the
//! derived structures used throughout: links, residuals, prefix deletion
//! and traces on an initial window.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// A 1-based vertex index. The linear order on vertices is integer order.
pub type Vertex = u16;

/// Largest vertex count accepted by [`TripleSystem`] and friends.
pub const MAX_VERTICES: usize = 1024;

/// A strictly increasing triple of vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple([Vertex; 3]);

impl Triple {
    /// Builds a triple from three distinct positive vertices in any order.
    pub fn new(a: Vertex, b: Vertex, c: Vertex) -> Result<Triple> {
        let mut v = [a, b, c];
        v.sort_unstable();
        if v[0] == 0 {
            return Err(Error::MalformedSet(format!("{v:?} contains vertex 0")));
        }
        if v[0] == v[1] || v[1] == v[2] {
            return Err(Error::MalformedSet(format!("{v:?} has repeated vertices")));
        }
        Ok(Triple(v))
    }

    /// Caller guarantees `0 < a < b < c`.
    #[inline]
    pub(crate) const fn from_sorted(a: Vertex, b: Vertex, c: Vertex) -> Triple {
        Triple([a, b, c])
    }

    #[inline]
    pub fn elements(&self) -> [Vertex; 3] {
        self.0
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    #[inline]
    pub fn largest(&self) -> Vertex {
        self.0[2]
    }

    /// Sum of the elements; strictly decreases under every shift.
    #[inline]
    pub fn weight_sum(&self) -> u64 {
        self.0.iter().map(|&v| u64::from(v)).sum()
    }

    /// Vertex bitmask with bit `v - 1` set for each element. Requires `max() <= 64`.
    #[inline]
    pub(crate) fn mask64(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1 << (v - 1))
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A sorted set of one, two or three distinct vertices.
///
/// Ordered lexicographically by element sequence, so `{1,2} < {1,2,3} < {1,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallSet {
    elems: [Vertex; 3],
    len: u8,
}

impl SmallSet {
    pub fn new(elements: &[Vertex]) -> Result<SmallSet> {
        if elements.is_empty() || elements.len() > 3 {
            return Err(Error::MalformedSet(format!(
                "{elements:?} must have 1 to 3 elements"
            )));
        }
        let mut elems = [0; 3];
        elems[..elements.len()].copy_from_slice(elements);
        let len = elements.len();
        elems[..len].sort_unstable();
        if elems[0] == 0 {
            return Err(Error::MalformedSet(format!(
                "{elements:?} contains vertex 0"
            )));
        }
        if elems[..len].windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedSet(format!(
                "{elements:?} has repeated vertices"
            )));
        }
        Ok(SmallSet {
            elems,
            len: len as u8,
        })
    }

    #[inline]
    pub fn elements(&self) -> &[Vertex] {
        &self.elems[..self.len as usize]
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// Always false; sets have at least one element.
    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.elements().contains(&v)
    }

    #[inline]
    pub fn largest(&self) -> Vertex {
        self.elems[self.len as usize - 1]
    }

    pub fn is_disjoint(&self, other: &SmallSet) -> bool {
        self.elements().iter().all(|v| !other.contains(*v))
    }

    /// The set as a triple, if it has three elements.
    pub fn as_triple(&self) -> Option<Triple> {
        (self.len == 3).then_some(Triple(self.elems))
    }
}

impl From<Triple> for SmallSet {
    fn from(t: Triple) -> SmallSet {
        SmallSet { elems: t.0, len: 3 }
    }
}

impl Ord for SmallSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elements().cmp(other.elements())
    }
}

impl PartialOrd for SmallSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SmallSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.elements().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SmallSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn check_vertex(v: usize, n: usize) -> Result<Vertex> {
    if v == 0 || v > n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(v as Vertex)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "n = {n} exceeds the supported maximum of {MAX_VERTICES}"
        )));
    }
    Ok(())
}

/// All triples of `[n]` in lexicographic order.
pub fn all_triples(n: usize) -> impl Iterator<Item = Triple> {
    let n = n as Vertex;
    (1..=n).flat_map(move |a| {
        (a + 1..=n).flat_map(move |b| (b + 1..=n).map(move |c| Triple::from_sorted(a, b, c)))
    })
}

/// A 3-uniform hypergraph on `[n]`. Edges iterate in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TripleSystem {
    n: usize,
    edges: BTreeSet<Triple>,
}

impl TripleSystem {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Triple>) -> Result<TripleSystem> {
        check_order(n)?;
        let mut set = BTreeSet::new();
        for e in edges {
            if usize::from(e.largest()) > n {
                return Err(Error::VertexOutOfRange {
                    vertex: e.largest().into(),
                    n,
                });
            }
            if !set.insert(e) {
                return Err(Error::MalformedSet(format!("duplicate edge {e}")));
            }
        }
        Ok(TripleSystem { n, edges: set })
    }

    /// Builds from raw vertex triples, e.g. `&[[1, 2, 3], [2, 3, 4]]`.
    pub fn from_arrays(n: usize, edges: &[[Vertex; 3]]) -> Result<TripleSystem> {
        let triples = edges
            .iter()
            .map(|e| Triple::new(e[0], e[1], e[2]))
            .collect::<Result<Vec<_>>>()?;
        TripleSystem::new(n, triples)
    }

    pub fn empty(n: usize) -> Result<TripleSystem> {
        TripleSystem::new(n, [])
    }

    /// The complete system `K³ₙ`.
    pub fn complete(n: usize) -> Result<TripleSystem> {
        check_order(n)?;
        Ok(TripleSystem {
            n,
            edges: all_triples(n).collect(),
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    #[inline]
    pub fn contains(&self, t: &Triple) -> bool {
        self.edges.contains(t)
    }

    pub fn edges(&self) -> impl Iterator<Item = &Triple> + '_ {
        self.edges.iter()
    }

    /// Sum over edges of the sum of their elements.
    pub fn potential(&self) -> u64 {
        self.edges.iter().map(Triple::weight_sum).sum()
    }

    /// `F(v) = {F \ {v} : v ∈ F ∈ edges}`, the link graph of `v`.
    pub fn link(&self, v: usize) -> Result<BTreeSet<SmallSet>> {
        let v = check_vertex(v, self.n)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.contains(v))
            .map(|e| {
                let mut rest = [0; 2];
                let mut k = 0;
                for &x in &e.0 {
                    if x != v {
                        rest[k] = x;
                        k += 1;
                    }
                }
                SmallSet {
                    elems: [rest[0], rest[1], 0],
                    len: 2,
                }
            })
            .collect())
    }

    /// `F(v̄)`, the edges avoiding `v`, on the same vertex set.
    pub fn residual(&self, v: usize) -> Result<TripleSystem> {
        let v = check_vertex(v, self.n)?;
        Ok(TripleSystem {
            n: self.n,
            edges: self
                .edges
                .iter()
                .filter(|e| !e.contains(v))
                .copied()
                .collect(),
        })
    }

    /// Deletes vertices `1..=q` with their edges and renumbers the rest
    /// to `1..=n-q`, preserving order.
    pub fn drop_prefix(&self, q: usize) -> Result<TripleSystem> {
        if q >= self.n {
            return Err(Error::InvalidParameter(format!(
                "cannot drop {q} of {} vertices",
                self.n
            )));
        }
        let q = q as Vertex;
        Ok(TripleSystem {
            n: self.n - q as usize,
            edges: self
                .edges
                .iter()
                .filter(|e| e.0[0] > q)
                .map(|e| Triple([e.0[0] - q, e.0[1] - q, e.0[2] - q]))
                .collect(),
        })
    }

    /// Distinct nonempty intersections of edges with the window `[m]`.
    pub fn trace(&self, m: usize) -> Result<TraceFamily> {
        if m > self.n {
            return Err(Error::InvalidParameter(format!(
                "window {m} exceeds n = {}",
                self.n
            )));
        }
        let mut members = BTreeSet::new();
        for e in &self.edges {
            let inside: Vec<Vertex> =
                e.0.iter()
                    .copied()
                    .filter(|&x| usize::from(x) <= m)
                    .collect();
            if inside.is_empty() {
                return Err(Error::EmptyTrace { edge: *e });
            }
            members.insert(SmallSet::new(&inside)?);
        }
        Ok(TraceFamily { window: m, members })
    }

    /// Adds `t`; returns whether it was new. `t` must lie inside `[n]`.
    pub fn insert(&mut self, t: Triple) -> Result<bool> {
        if usize::from(t.largest()) > self.n {
            return Err(Error::VertexOutOfRange {
                vertex: t.largest().into(),
                n: self.n,
            });
        }
        Ok(self.edges.insert(t))
    }

    pub fn remove(&mut self, t: &Triple) -> bool {
        self.edges.remove(t)
    }
}

/// The family of traces `{F ∩ [m] : F ∈ edges}` of a triple system.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceFamily {
    window: usize,
    members: BTreeSet<SmallSet>,
}

impl TraceFamily {
    pub fn new(window: usize, members: impl IntoIterator<Item = SmallSet>) -> Result<TraceFamily> {
        let mut set = BTreeSet::new();
        for h in members {
            if usize::from(h.largest()) > window {
                return Err(Error::VertexOutOfRange {
                    vertex: h.largest().into(),
                    n: window,
                });
            }
            if !set.insert(h) {
                return Err(Error::MalformedSet(format!("duplicate trace {h}")));
            }
        }
        Ok(TraceFamily {
            window,
            members: set,
        })
    }

    #[inline]
    pub fn window(&self) -> usize {
        self.window
    }

    pub fn members(&self) -> impl Iterator<Item = &SmallSet> + '_ {
        self.members.iter()
    }

    pub fn contains(&self, h: &SmallSet) -> bool {
        self.members.contains(h)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members of the given size.
    pub fn of_size(&self, size: usize) -> impl Iterator<Item = &SmallSet> + '_ {
        self.members.iter().filter(move |h| h.len() == size)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::build_b;

    fn set(v: &[Vertex]) -> SmallSet {
        SmallSet::new(v).unwrap()
    }

    #[test]
    fn triple_rejects_repeats_and_zero() {
        assert!(Triple::new(1, 1, 2).is_err());
        assert!(Triple::new(0, 1, 2).is_err());
        assert_eq!(Triple::new(3, 1, 2).unwrap().elements(), [1, 2, 3]);
    }

    #[test]
    fn small_set_order_is_lexicographic() {
        assert!(set(&[1, 2]) < set(&[1, 2, 3]));
        assert!(set(&[1, 2, 3]) < set(&[1, 3]));
        assert!(set(&[2]) > set(&[1, 9]));
    }

    #[test]
    fn system_rejects_out_of_range_and_duplicates() {
        assert!(TripleSystem::from_arrays(3, &[[1, 2, 4]]).is_err());
        assert!(TripleSystem::from_arrays(4, &[[1, 2, 4], [4, 2, 1]]).is_err());
    }

    #[test]
    fn link_of_complete_four() {
        let k4 = TripleSystem::complete(4).unwrap();
        let link: Vec<_> = k4.link(4).unwrap().into_iter().collect();
        assert_eq!(link, vec![set(&[1, 2]), set(&[1, 3]), set(&[2, 3])]);
    }

    #[test]
    fn link_of_empty_and_out_of_range() {
        let e = TripleSystem::empty(3).unwrap();
        assert!(e.link(1).unwrap().is_empty());
        assert_eq!(e.link(4), Err(Error::VertexOutOfRange { vertex: 4, n: 3 }));
        assert!(e.link(0).is_err());
    }

    #[test]
    fn link_of_b_9_2_at_last_vertex() {
        // pairs {u,v} ⊂ [8] meeting [2]: 7 + 6 = 13
        let b = build_b(9, 2).unwrap();
        let link = b.link(9).unwrap();
        assert_eq!(link.len(), 13);
        assert!(link.iter().all(|p| p.elements()[0] <= 2));
    }

    #[test]
    fn residual_examples() {
        let k4 = TripleSystem::complete(4).unwrap();
        let r = k4.residual(4).unwrap();
        assert_eq!(
            r.edges().copied().collect::<Vec<_>>(),
            vec![Triple::new(1, 2, 3).unwrap()]
        );
        assert!(TripleSystem::empty(1)
            .unwrap()
            .residual(1)
            .unwrap()
            .is_empty());
        // residual of B(n,s) at n is B(n-1,s) on one more (isolated) vertex
        for (n, s) in [(9, 2), (10, 3), (12, 1)] {
            let b = build_b(n, s).unwrap();
            let expected = build_b(n - 1, s).unwrap();
            assert_eq!(b.residual(n).unwrap().len(), expected.len());
            assert!(b.residual(n).unwrap().edges().eq(expected.edges()));
        }
    }

    #[test]
    fn drop_prefix_examples() {
        let k6 = TripleSystem::complete(6).unwrap();
        assert_eq!(
            k6.drop_prefix(3).unwrap(),
            TripleSystem::complete(3).unwrap()
        );
        let b = build_b(9, 2).unwrap();
        let dropped = b.drop_prefix(2).unwrap();
        assert!(dropped.is_empty());
        assert_eq!(dropped.n(), 7);
        assert_eq!(k6.drop_prefix(0).unwrap(), k6);
        assert!(k6.drop_prefix(6).is_err());
    }

    #[test]
    fn trace_examples() {
        let k8 = TripleSystem::complete(8).unwrap();
        let t = k8.trace(8).unwrap();
        assert_eq!(t.len(), 56);
        assert!(t.members().all(|h| h.len() == 3));

        let b = build_b(9, 2).unwrap();
        assert!(b.trace(8).unwrap().contains(&set(&[1, 5])));

        let one = TripleSystem::from_arrays(9, &[[1, 2, 9]]).unwrap();
        let t = one.trace(8).unwrap();
        assert_eq!(t.members().copied().collect::<Vec<_>>(), vec![set(&[1, 2])]);
    }

    #[test]
    fn trace_reports_disjoint_edge() {
        let f = TripleSystem::from_arrays(9, &[[1, 2, 3], [7, 8, 9]]).unwrap();
        assert_eq!(
            f.trace(6),
            Err(Error::EmptyTrace {
                edge: Triple::new(7, 8, 9).unwrap()
            })
        );
    }
}
