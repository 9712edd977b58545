//! Simple undirected graphs on the dense vertex range `0..n`.

use std::fmt::{self, Write as _};
use std::ops::Deref;

use crate::error::{GraphError, ParseError, ParseErrorKind};

pub type Vertex = usize;

/// A strictly increasing list of vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        Self(Vec::new())
    }

    /// Wraps an already strictly increasing vector.
    pub fn from_sorted(v: Vec<Vertex>) -> Result<Self, GraphError> {
        if v.windows(2).all(|w| w[0] < w[1]) {
            Ok(Self(v))
        } else {
            Err(GraphError::UnsortedVertexSet)
        }
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(intersect_sorted(&self.0, &other.0))
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        is_subset_sorted(&self.0, &other.0)
    }
}

impl Deref for VertexSet {
    type Target = [Vertex];

    fn deref(&self) -> &[Vertex] {
        &self.0
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut v: Vec<Vertex> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(a: [Vertex; N]) -> Self {
        a.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_char('{')?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{v}")?;
        }
        f.write_char('}')
    }
}

pub(crate) fn intersect_sorted<T: Ord + Copy>(a: &[T], b: &[T]) -> Vec<T> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub(crate) fn is_subset_sorted<T: Ord>(a: &[T], b: &[T]) -> bool {
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}

/// Simple undirected graph with sorted adjacency lists.
///
/// Immutable once built: adjacency is symmetric, loop-free and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet((0..self.n()).collect())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| {
                let mut ns = self.adj[u].iter().peekable();
                (0..n)
                    .filter(|&v| {
                        while ns.next_if(|&&w| w < v).is_some() {}
                        v != u && ns.peek() != Some(&&v)
                    })
                    .collect()
            })
            .collect();
        Graph { adj }
    }

    /// Intersection of the neighborhoods of `w`; the full vertex set when `w` is empty.
    pub fn common_neighborhood(&self, w: &[Vertex]) -> VertexSet {
        match w.split_first() {
            None => self.vertices(),
            Some((&first, rest)) => {
                let mut acc = self.adj[first].clone();
                for &u in rest {
                    if acc.is_empty() {
                        break;
                    }
                    acc = intersect_sorted(&acc, &self.adj[u]);
                }
                VertexSet(acc)
            }
        }
    }

    pub fn is_clique(&self, s: &[Vertex]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Neighbors of the clique `c` that lie outside it.
    pub fn periphery(&self, c: &VertexSet) -> Result<VertexSet, GraphError> {
        self.check_vertices(c)?;
        if !self.is_clique(c) {
            return Err(GraphError::NotAClique);
        }
        Ok(c.iter()
            .flat_map(|&u| self.adj[u].iter().copied())
            .filter(|v| !c.contains(*v))
            .collect())
    }

    pub fn check_vertices(&self, s: &[Vertex]) -> Result<(), GraphError> {
        match s.iter().find(|&&v| v >= self.n()) {
            Some(&vertex) => Err(GraphError::VertexOutOfRange { vertex, n: self.n() }),
            None => Ok(()),
        }
    }

    /// Subgraph induced by `vertices`, relabelled so that `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut ns: Vec<Vertex> = self.adj[v]
                    .iter()
                    .map(|&w| index[w])
                    .filter(|&i| i != usize::MAX)
                    .collect();
                ns.sort_unstable();
                ns
            })
            .collect();
        Graph { adj }
    }

    /// Renders the edge-list text format accepted by [`parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{}\n", self.n());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Parses the edge-list format: `#` comment lines, a first data line `n`,
/// then one `u v` pair per line separated by spaces or tabs.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (first_line, header) = data.next().ok_or(ParseError {
        line: text.lines().count().max(1),
        kind: ParseErrorKind::MissingVertexCount,
    })?;
    let n: usize = header.parse().map_err(|_| ParseError {
        line: first_line,
        kind: ParseErrorKind::Malformed(header.to_string()),
    })?;

    let mut edges = Vec::new();
    for (line, content) in data {
        let malformed = || ParseError {
            line,
            kind: ParseErrorKind::Malformed(content.to_string()),
        };
        let mut fields = content.split([' ', '\t']).filter(|f| !f.is_empty());
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed());
        };
        let u: usize = a.parse().map_err(|_| malformed())?;
        let v: usize = b.parse().map_err(|_| malformed())?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(ParseError {
                    line,
                    kind: ParseErrorKind::OutOfRange { vertex, n },
                });
            }
        }
        if u == v {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::SelfLoop(u),
            });
        }
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, edges).expect("edges validated above"))
}
