//! Graph families used as test corpora and extremal examples.

use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GraphError;
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicKind {
    Path,
    Cycle,
    Complete,
    /// `K_{1,n-1}` with vertex 0 as the center.
    Star,
}

impl FromStr for BasicKind {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "path" => Ok(Self::Path),
            "cycle" => Ok(Self::Cycle),
            "complete" => Ok(Self::Complete),
            "star" => Ok(Self::Star),
            other => Err(GraphError::InvalidParameter(format!("unknown family {other:?}"))),
        }
    }
}

impl fmt::Display for BasicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Path => "path",
            Self::Cycle => "cycle",
            Self::Complete => "complete",
            Self::Star => "star",
        })
    }
}

pub fn basic(kind: BasicKind, n: usize) -> Result<Graph, GraphError> {
    let min = if kind == BasicKind::Cycle { 3 } else { 1 };
    if n < min {
        return Err(GraphError::InvalidParameter(format!(
            "{kind} needs n >= {min}, got {n}"
        )));
    }
    let edges: Vec<(Vertex, Vertex)> = match kind {
        BasicKind::Path => (1..n).map(|v| (v - 1, v)).collect(),
        BasicKind::Cycle => (0..n).map(|v| (v, (v + 1) % n)).collect(),
        BasicKind::Complete => (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect(),
        BasicKind::Star => (1..n).map(|v| (0, v)).collect(),
    };
    Graph::from_edges(n, edges)
}

/// The split graph `S_m`: clique `c_1..c_m` on vertices `0..m`, independent
/// vertices `v_1..v_m` on `m..2m`, and `v_i` adjacent to every `c_j` with `j != i`.
pub fn split(m: usize) -> Graph {
    let clique = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j)));
    let spokes = (0..m).flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (m + i, j)));
    Graph::from_edges(2 * m, clique.chain(spokes).collect::<Vec<_>>()).expect("split construction is simple")
}

/// Closed interval `[lo, hi]` on the path positions `-m..=m`.
type Interval = (i64, i64);

/// Intervals of the quadratic-width interval family, clique intervals first.
///
/// Returns `(clique, periphery)`. The clique intervals all contain position 0:
/// `[-m, i]` for `i = 0..=m` and `[i, m]` for `i = -m+1..=0`. The periphery
/// intervals avoid 0: `[-m, i]` for `i = -m..=-1` and `[i, m]` for `i = 1..=m`.
pub fn interval_family_intervals(m: usize) -> (Vec<Interval>, Vec<Interval>) {
    let m = m as i64;
    let clique = (0..=m).map(|i| (-m, i)).chain((-m + 1..=0).map(|i| (i, m))).collect();
    let periphery = (-m..=-1).map(|i| (-m, i)).chain((1..=m).map(|i| (i, m))).collect();
    (clique, periphery)
}

/// Intersection graph of [`interval_family_intervals`]: `4m+1` vertices, the
/// central clique on `0..=2m`, the periphery intervals on `2m+1..=4m`.
pub fn interval_family(m: usize) -> Graph {
    let (clique, periphery) = interval_family_intervals(m);
    let intervals: Vec<Interval> = clique.into_iter().chain(periphery).collect();
    let n = intervals.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = (intervals[u], intervals[v]);
            if a.0 <= b.1 && b.0 <= a.1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("intervals give a simple graph")
}

/// Random connected chordal graph grown by clique attachment.
///
/// Vertex `i` is attached to a uniform random subset, of uniform random size
/// in `1..=min(attach_max, |K|)`, of a maximal clique `K` drawn uniformly from
/// the current maximal cliques. Fully determined by `(n, attach_max, seed)`.
pub fn random_chordal(n: usize, attach_max: usize, seed: u64) -> Result<Graph, GraphError> {
    if attach_max == 0 {
        return Err(GraphError::InvalidParameter("attach_max must be >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut maximal: Vec<Vec<Vertex>> = if n > 0 { vec![vec![0]] } else { Vec::new() };
    let mut edges = Vec::new();
    for v in 1..n {
        let host = rng.random_range(0..maximal.len());
        let size = rng.random_range(1..=attach_max.min(maximal[host].len()));
        let mut picked: Vec<Vertex> = index::sample(&mut rng, maximal[host].len(), size)
            .into_iter()
            .map(|i| maximal[host][i])
            .collect();
        picked.sort_unstable();
        edges.extend(picked.iter().map(|&u| (u, v)));
        if picked.len() == maximal[host].len() {
            maximal[host].push(v);
        } else {
            picked.push(v);
            maximal.push(picked);
        }
    }
    Graph::from_edges(n, edges)
}
