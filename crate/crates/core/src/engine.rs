//! Incremental neighborhood-polynomial computation for chordal graphs.
//!
//! The graph is rebuilt one vertex at a time along the reverse of a perfect
//! elimination order, so every new vertex is attached to a clique `C` of the
//! current graph. For each maximal clique the engine keeps a [`CliqueRecord`]:
//! its anchor sets (the non-empty traces `N(M) ∩ K` of periphery sets `M`)
//! and, per anchor set, the generating function of the periphery sets that
//! produce it. From the record of a clique containing `C` the engine derives
//! the anchor data of `C` itself, which is all that is needed to update the
//! polynomial and to rebuild the records touched by the new vertex.
//!
//! Inside the engine vertices are identified by attachment index: the `i`-th
//! attached vertex is `i`. Vertex lists are sorted by that index.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::chordal::{connected_components, find_peo_seeded, first_violation, EliminationOrder, NotChordal};
use crate::graph::{intersect_sorted, is_subset_sorted, Graph, Vertex};
use crate::polynomial::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("attachment set must be strictly increasing and refer to attached vertices")]
    InvalidAttachment,
    #[error("attachment set is not a clique of the current graph")]
    NotAClique,
    #[error("clique is not contained in the record's clique")]
    NotASubclique,
    #[error("record clique does not meet the attachment clique properly")]
    NoProperIntersection,
}

/// A non-empty subset of a clique, ordered by size and then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AnchorSet(Vec<usize>);

impl AnchorSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self(members)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Ord for AnchorSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for AnchorSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Anchor sets of one clique, each with its periphery polynomial.
pub type AnchorData = BTreeMap<AnchorSet, Polynomial>;

/// A maximal clique and its anchor family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueRecord {
    clique: Vec<usize>,
    anchors: AnchorData,
}

impl CliqueRecord {
    pub fn new(clique: Vec<usize>, anchors: AnchorData) -> Self {
        Self {
            clique: AnchorSet::new(clique).0,
            anchors,
        }
    }

    /// The record of an isolated vertex: its empty periphery set anchors at `{v}`.
    pub fn singleton(v: usize) -> Self {
        Self::new(vec![v], BTreeMap::from([(AnchorSet(vec![v]), Polynomial::one())]))
    }

    pub fn clique(&self) -> &[usize] {
        &self.clique
    }

    pub fn anchors(&self) -> &AnchorData {
        &self.anchors
    }

    /// Size of the anchor family.
    pub fn width(&self) -> usize {
        self.anchors.len()
    }
}

/// Anchor data of a sub-clique `c` of the record's clique.
///
/// Each anchor `A'` of the host maps to `A' ∩ c` when non-empty, and every
/// vertex of the host outside `c` is a free periphery vertex of `c`, which
/// multiplies each polynomial by `(1+x)^{|host \ c|}`.
pub fn restrict_record(rec: &CliqueRecord, c: &[usize]) -> Result<AnchorData, EngineError> {
    if c.is_empty() || !is_subset_sorted(c, &rec.clique) {
        return Err(EngineError::NotASubclique);
    }
    let free = rec.clique.len() - c.len();
    if free == 0 {
        return Ok(rec.anchors.clone());
    }
    let mut out = AnchorData::new();
    for (a, poly) in &rec.anchors {
        let trace = intersect_sorted(&a.0, c);
        if trace.is_empty() {
            continue;
        }
        *out.entry(AnchorSet(trace)).or_default() += poly;
    }
    for poly in out.values_mut() {
        poly.mul_binomial_power(free);
    }
    Ok(out)
}

/// Generating function of all vertex sets with a common neighbor in a clique
/// of size `clique_size`, given its anchor data: each anchor `A` contributes
/// `P(A) * ((1+x)^{|C|} - x^{|A|} (1+x)^{|C|-|A|})`.
pub fn local_neighborhood_gf(restricted: &AnchorData, clique_size: usize) -> Polynomial {
    if restricted.is_empty() {
        return Polynomial::zero();
    }
    // Group by anchor size so each binomial factor is applied once.
    let mut total = Polynomial::zero();
    let mut by_size: BTreeMap<usize, Polynomial> = BTreeMap::new();
    for (a, poly) in restricted {
        total += poly;
        *by_size.entry(a.len()).or_default() += poly;
    }
    total.mul_binomial_power(clique_size);
    for (size, mut poly) in by_size {
        poly.mul_binomial_power(clique_size - size);
        total -= &poly.shift(size);
    }
    total
}

/// Change of the neighborhood polynomial when a vertex is attached to clique
/// `C`: `x^{|C|}` if `C` was maximal, plus `x` times the local neighborhood
/// generating function of `C`.
pub fn attachment_delta(restricted: &AnchorData, clique_size: usize, c_was_maximal: bool) -> Polynomial {
    let mut delta = local_neighborhood_gf(restricted, clique_size).shift(1);
    if c_was_maximal {
        delta += &Polynomial::monomial(clique_size);
    }
    delta
}

/// Record of the new maximal clique `c ∪ {v}`.
///
/// The periphery of the new clique is that of `c`, with the same anchors,
/// except that the empty periphery set now anchors at `c ∪ {v}` instead of `c`.
pub fn spawn_record(mut restricted: AnchorData, c: &[usize], v: usize) -> CliqueRecord {
    let key = AnchorSet(c.to_vec());
    if let Some(poly) = restricted.get_mut(&key) {
        *poly -= &Polynomial::one();
        if poly.is_zero() {
            restricted.remove(&key);
        }
    }
    let mut clique = c.to_vec();
    clique.push(v);
    let clique = AnchorSet::new(clique);
    restricted.insert(clique.clone(), Polynomial::one());
    CliqueRecord {
        clique: clique.0,
        anchors: restricted,
    }
}

/// Updates a maximal clique `K` that meets the attachment clique `c`.
///
/// The new vertex joins the periphery of `K` with trace `A0 = K ∩ c`. A
/// periphery set `M ∪ {v}` anchors at `A' ∩ A0`, where `A'` is the anchor of
/// `M`, so `P+(A) = P(A) + x * Σ_{A' ∩ A0 = A} P(A')`.
pub fn refresh_record(rec: &CliqueRecord, c: &[usize]) -> Result<CliqueRecord, EngineError> {
    let a0 = intersect_sorted(&rec.clique, c);
    if a0.is_empty() || a0.len() == rec.clique.len() {
        return Err(EngineError::NoProperIntersection);
    }
    let mut gained = AnchorData::new();
    for (a, poly) in &rec.anchors {
        let trace = intersect_sorted(&a.0, &a0);
        if trace.is_empty() {
            continue;
        }
        *gained.entry(AnchorSet(trace)).or_default() += poly;
    }
    let mut anchors = rec.anchors.clone();
    for (a, poly) in gained {
        let slot = anchors.entry(a).or_default();
        slot.add_shifted(&poly, 1);
    }
    anchors.retain(|_, p| !p.is_zero());
    Ok(CliqueRecord {
        clique: rec.clique.clone(),
        anchors,
    })
}

/// Statistics of one attachment step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepStats {
    /// The attached vertex (an original graph vertex once returned from [`compute`]).
    pub vertex: usize,
    /// Size of the attachment clique.
    pub clique_size: usize,
    /// Size of the maximal clique found to contain the attachment clique.
    pub host_size: usize,
    /// Records refreshed because they meet the attachment clique.
    pub records_touched: usize,
    /// Number of maximal cliques after the step.
    pub record_count: usize,
    /// Largest anchor family after the step.
    pub max_width: usize,
}

impl fmt::Display for StepStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "attach v={} clique={} host={} touched={} records={} width={}",
            self.vertex, self.clique_size, self.host_size, self.records_touched, self.record_count, self.max_width
        )
    }
}

/// State of one incremental computation.
#[derive(Clone, Debug, Default)]
pub struct Engine {
    vertex_count: usize,
    records: Vec<CliqueRecord>,
    poly: Polynomial,
    peak_width: usize,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Records of the maximal cliques of the current graph.
    pub fn records(&self) -> &[CliqueRecord] {
        &self.records
    }

    /// Neighborhood polynomial of the current graph.
    pub fn polynomial(&self) -> &Polynomial {
        &self.poly
    }

    pub fn anchor_width(&self) -> usize {
        self.records.iter().map(CliqueRecord::width).max().unwrap_or(0)
    }

    pub fn peak_width(&self) -> usize {
        self.peak_width
    }

    /// Attaches vertex `self.vertex_count()` to the clique `c` of attached vertices.
    pub fn attach(&mut self, c: &[usize]) -> Result<StepStats, EngineError> {
        let v = self.vertex_count;
        if !c.windows(2).all(|w| w[0] < w[1]) || c.last().is_some_and(|&u| u >= v) {
            return Err(EngineError::InvalidAttachment);
        }

        let (host_size, touched) = if c.is_empty() {
            // new component: N(G ∪ K1) = N(G) + 1 - 1
            if v == 0 {
                self.poly = Polynomial::one();
            }
            self.records.push(CliqueRecord::singleton(v));
            (0, 0)
        } else {
            let host = self
                .records
                .iter()
                .position(|r| is_subset_sorted(c, &r.clique))
                .ok_or(EngineError::NotAClique)?;
            let host_size = self.records[host].clique.len();
            let was_maximal = host_size == c.len();
            let restricted = restrict_record(&self.records[host], c)?;
            self.poly += &attachment_delta(&restricted, c.len(), was_maximal);
            let spawned = spawn_record(restricted, c, v);
            if was_maximal {
                self.records.swap_remove(host);
            }
            let mut touched = 0;
            for rec in &mut self.records {
                if intersect_sorted(&rec.clique, c).is_empty() {
                    continue;
                }
                *rec = refresh_record(rec, c)?;
                self.peak_width = self.peak_width.max(rec.width());
                touched += 1;
            }
            self.peak_width = self.peak_width.max(spawned.width());
            self.records.push(spawned);
            (host_size, touched)
        };
        self.peak_width = self.peak_width.max(1);
        self.vertex_count += 1;
        Ok(StepStats {
            vertex: v,
            clique_size: c.len(),
            host_size,
            records_touched: touched,
            record_count: self.records.len(),
            max_width: self.anchor_width(),
        })
    }
}

/// Output of [`compute`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComputationResult {
    /// The neighborhood polynomial.
    pub poly: Polynomial,
    /// Largest anchor family over the maximal cliques of the graph.
    pub anchor_width: usize,
    /// Largest anchor family seen at any step of the construction.
    pub peak_width: usize,
    pub steps: Vec<StepStats>,
}

/// Neighborhood polynomial and anchor width of a chordal graph.
pub fn compute(g: &Graph) -> Result<ComputationResult, NotChordal> {
    compute_seeded(g, None)
}

/// Like [`compute`], with Lex-BFS ties broken by a seeded random priority.
pub fn compute_seeded(g: &Graph, tie_seed: Option<u64>) -> Result<ComputationResult, NotChordal> {
    let order = find_peo_seeded(g, tie_seed)?;
    Ok(run_components(g, &order))
}

/// A caller-supplied order that cannot drive the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("order is not a permutation of the vertices")]
    NotAPermutation,
    #[error("not a perfect elimination order: later neighbors of vertex {0} do not form a clique")]
    NotPerfect(Vertex),
}

/// Runs the engine along the reverse of a caller-supplied elimination order.
pub fn compute_with_order(g: &Graph, order: &EliminationOrder) -> Result<ComputationResult, OrderError> {
    match first_violation(g, order) {
        Err(_) => Err(OrderError::NotAPermutation),
        Ok(Some(v)) => Err(OrderError::NotPerfect(v)),
        Ok(None) => Ok(run_components(g, order)),
    }
}

/// Neighborhood polynomial and anchor width; see [`compute`].
pub fn anchor_width(g: &Graph) -> Result<usize, NotChordal> {
    compute(g).map(|r| r.anchor_width)
}

fn run_components(g: &Graph, order: &EliminationOrder) -> ComputationResult {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.as_slice().iter().enumerate() {
        pos[v] = i;
    }
    let mut result = ComputationResult {
        poly: Polynomial::zero(),
        anchor_width: 0,
        peak_width: 0,
        steps: Vec::with_capacity(g.n()),
    };
    let mut attach_index = vec![usize::MAX; g.n()];
    for (k, mut comp) in connected_components(g).into_iter().enumerate() {
        // attachment order: reverse elimination order restricted to the component
        comp.sort_unstable_by_key(|&v| std::cmp::Reverse(pos[v]));
        let mut engine = Engine::new();
        for (i, &v) in comp.iter().enumerate() {
            let mut c: Vec<usize> = g
                .neighbors(v)
                .iter()
                .map(|&w| attach_index[w])
                .filter(|&a| a != usize::MAX)
                .collect();
            c.sort_unstable();
            let mut step = engine
                .attach(&c)
                .expect("a perfect elimination order attaches every vertex to a clique");
            step.vertex = v;
            result.steps.push(step);
            attach_index[v] = i;
        }
        for &v in &comp {
            attach_index[v] = usize::MAX;
        }
        result.poly = if k == 0 {
            engine.polynomial().clone()
        } else {
            &result.poly + engine.polynomial() - Polynomial::one()
        };
        result.anchor_width = result.anchor_width.max(engine.anchor_width());
        result.peak_width = result.peak_width.max(engine.peak_width());
    }
    result
}
