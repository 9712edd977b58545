//! Chordality recognition through lexicographic breadth-first search.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::error::GraphError;
use crate::graph::{Graph, Vertex};

/// A vertex ordering `v_1, ..., v_n`, with `v_1` eliminated first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder(Vec<Vertex>);

impl EliminationOrder {
    pub fn new(order: Vec<Vertex>) -> Self {
        Self(order)
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Vertex> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// A candidate elimination order that is not perfect, with a vertex whose
/// later neighbors do not form a clique.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("not chordal: later neighbors of vertex {failing_vertex} do not form a clique")]
pub struct NotChordal {
    pub order: EliminationOrder,
    pub failing_vertex: Vertex,
}

/// Lex-BFS visit order, reversed.
///
/// On a chordal graph the result is a perfect elimination order. Ties between
/// vertices with equal labels go to the smallest index, or to a seeded random
/// priority when `tie_seed` is given.
pub fn lex_bfs(g: &Graph, tie_seed: Option<u64>) -> EliminationOrder {
    let n = g.n();
    // rank -> vertex; ties are broken by smallest rank
    let mut by_rank: Vec<Vertex> = (0..n).collect();
    if let Some(seed) = tie_seed {
        by_rank.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let mut rank = vec![0; n];
    for (r, &v) in by_rank.iter().enumerate() {
        rank[v] = r;
    }

    // Partition classes form a linked list, leftmost class visited first.
    struct Class {
        members: BTreeSet<usize>,
        prev: Option<usize>,
        next: Option<usize>,
        split: Option<(usize, usize)>,
    }
    let mut classes = vec![Class {
        members: (0..n).collect(),
        prev: None,
        next: None,
        split: None,
    }];
    let mut head = Some(0);
    let mut class_of = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);

    for step in 0..n {
        while let Some(h) = head.filter(|&h| classes[h].members.is_empty()) {
            head = classes[h].next;
            if let Some(nx) = head {
                classes[nx].prev = None;
            }
        }
        let h = head.expect("unvisited vertices remain");
        let r = classes[h].members.pop_first().expect("head class non-empty");
        let p = by_rank[r];
        visited[p] = true;
        visit.push(p);

        for &w in g.neighbors(p) {
            if visited[w] {
                continue;
            }
            let c = class_of[w];
            let target = match classes[c].split {
                Some((s, idx)) if s == step => idx,
                _ => {
                    let idx = classes.len();
                    let prev = classes[c].prev;
                    classes.push(Class {
                        members: BTreeSet::new(),
                        prev,
                        next: Some(c),
                        split: None,
                    });
                    match prev {
                        Some(pv) => classes[pv].next = Some(idx),
                        None => head = Some(idx),
                    }
                    classes[c].prev = Some(idx);
                    classes[c].split = Some((step, idx));
                    idx
                }
            };
            classes[c].members.remove(&rank[w]);
            classes[target].members.insert(rank[w]);
            class_of[w] = target;
        }
    }
    visit.reverse();
    EliminationOrder(visit)
}

/// Checks the perfect-elimination property with the parent test: for each
/// vertex, its later neighbors other than the earliest one must all be
/// adjacent to that earliest one.
pub fn is_peo(g: &Graph, order: &EliminationOrder) -> Result<bool, GraphError> {
    Ok(first_violation(g, order)?.is_none())
}

fn positions(g: &Graph, order: &EliminationOrder) -> Result<Vec<usize>, GraphError> {
    let n = g.n();
    if order.len() != n {
        return Err(GraphError::NotAPermutation);
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.0.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return Err(GraphError::NotAPermutation);
        }
        pos[v] = i;
    }
    Ok(pos)
}

pub(crate) fn first_violation(g: &Graph, order: &EliminationOrder) -> Result<Option<Vertex>, GraphError> {
    let pos = positions(g, order)?;
    for &v in &order.0 {
        let later = g.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]);
        let Some(&parent) = later.clone().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if later.filter(|&&w| w != parent).any(|&w| !g.has_edge(parent, w)) {
            return Ok(Some(v));
        }
    }
    Ok(None)
}

/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut comp = Vec::new();
        while let Some(v) = stack.pop() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    components
}

/// Perfect elimination order of every component, concatenated.
pub fn find_peo(g: &Graph) -> Result<EliminationOrder, NotChordal> {
    find_peo_seeded(g, None)
}

pub fn find_peo_seeded(g: &Graph, tie_seed: Option<u64>) -> Result<EliminationOrder, NotChordal> {
    let mut order = Vec::with_capacity(g.n());
    for comp in connected_components(g) {
        let sub = g.induced_subgraph(&comp);
        let local = lex_bfs(&sub, tie_seed);
        order.extend(local.0.iter().map(|&i| comp[i]));
    }
    let order = EliminationOrder(order);
    match first_violation(g, &order).expect("lex_bfs yields a permutation") {
        None => Ok(order),
        Some(failing_vertex) => Err(NotChordal { order, failing_vertex }),
    }
}
