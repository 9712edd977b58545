//! Slow reference implementations used to check the engine.
//!
//! Nothing in here shares code with [`crate::engine`] beyond [`Graph`] and
//! [`Polynomial`]. Exponential routines refuse inputs past a hard size limit
//! instead of truncating.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::error::{GraphError, OracleError};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::polynomial::Polynomial;

/// Default vertex limit for whole-graph subset enumeration.
pub const VERTEX_LIMIT: usize = 22;
/// Limit on periphery size for [`brute_anchor_data`] and on `|U|` for [`general_attachment`].
pub const SUBSET_LIMIT: usize = 20;

fn check_limit(what: &'static str, size: usize, limit: usize) -> Result<(), OracleError> {
    if size > limit {
        Err(OracleError::TooLarge { what, size, limit })
    } else {
        Ok(())
    }
}

fn neighbor_masks(g: &Graph) -> Vec<u64> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn counts_to_poly(counts: Vec<u64>) -> Polynomial {
    Polynomial::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

/// Neighborhood polynomial by enumerating every vertex subset.
pub fn brute_neighborhood_poly(g: &Graph) -> Result<Polynomial, OracleError> {
    brute_neighborhood_poly_with_limit(g, VERTEX_LIMIT)
}

pub fn brute_neighborhood_poly_with_limit(g: &Graph, limit: usize) -> Result<Polynomial, OracleError> {
    let n = g.n();
    check_limit("vertex count", n, limit.min(63))?;
    let nbr = neighbor_masks(g);
    let mut counts = vec![0u64; n + 1];
    for u in 0u64..1 << n {
        if nbr.iter().any(|&m| u & !m == 0) {
            counts[u.count_ones() as usize] += 1;
        }
    }
    Ok(counts_to_poly(counts))
}

/// Domination polynomial by enumerating every vertex subset.
pub fn brute_domination_poly(g: &Graph) -> Result<Polynomial, OracleError> {
    let n = g.n();
    check_limit("vertex count", n, VERTEX_LIMIT)?;
    let closed: Vec<u64> = neighbor_masks(g)
        .into_iter()
        .enumerate()
        .map(|(v, m)| m | 1 << v)
        .collect();
    let all = (1u64 << n) - 1;
    let mut counts = vec![0u64; n + 1];
    for d in 0u64..1 << n {
        let covered = (0..n).filter(|&v| d >> v & 1 == 1).fold(0u64, |acc, v| acc | closed[v]);
        if covered == all {
            counts[d.count_ones() as usize] += 1;
        }
    }
    Ok(counts_to_poly(counts))
}

/// `D(complement of g) + N(g) == (1+x)^n`, both sides by brute force.
pub fn check_complement_identity(g: &Graph) -> Result<bool, OracleError> {
    let lhs = brute_domination_poly(&g.complement())? + brute_neighborhood_poly(g)?;
    Ok(lhs == Polynomial::binomial_power(g.n()))
}

/// Every periphery subset of `c`, grouped by its anchor set, as generating functions.
pub fn brute_anchor_data(g: &Graph, c: &VertexSet) -> Result<BTreeMap<VertexSet, Polynomial>, OracleError> {
    let periphery = g.periphery(c)?;
    check_limit("periphery size", periphery.len(), SUBSET_LIMIT)?;

    let mut counts: BTreeMap<VertexSet, Vec<u64>> = BTreeMap::new();
    let mut stack: Vec<(usize, VertexSet, usize)> = vec![(0, c.clone(), 0)];
    while let Some((next, anchor, size)) = stack.pop() {
        if next == periphery.len() {
            let slot = counts.entry(anchor).or_default();
            if slot.len() <= size {
                slot.resize(size + 1, 0);
            }
            slot[size] += 1;
            continue;
        }
        let w = periphery[next];
        let with_w: VertexSet = anchor.iter().copied().filter(|&a| g.has_edge(a, w)).collect();
        if !with_w.is_empty() {
            stack.push((next + 1, with_w, size + 1));
        }
        stack.push((next + 1, anchor, size));
    }
    Ok(counts.into_iter().map(|(a, cs)| (a, counts_to_poly(cs))).collect())
}

/// The anchor family of clique `c` as the smallest family containing `c` and
/// closed under `A -> A ∩ N(w)` for periphery vertices `w`, empty results dropped.
pub fn closure_anchor_family(g: &Graph, c: &VertexSet) -> Result<BTreeSet<VertexSet>, GraphError> {
    let periphery = g.periphery(c)?;
    let mut family = BTreeSet::from([c.clone()]);
    let mut queue = vec![c.clone()];
    while let Some(a) = queue.pop() {
        for &w in periphery.iter() {
            let b = a.intersection(&VertexSet::from_sorted(g.neighbors(w).to_vec())?);
            if !b.is_empty() && family.insert(b.clone()) {
                queue.push(b);
            }
        }
    }
    Ok(family)
}

/// Neighborhood polynomial after attaching a new vertex to `u`, given `n_g`,
/// the neighborhood polynomial of `g`. Sums over every non-empty `W ⊆ U`.
pub fn general_attachment(g: &Graph, n_g: &Polynomial, u: &VertexSet) -> Result<Polynomial, OracleError> {
    g.check_vertices(u)?;
    check_limit("attachment set size", u.len(), SUBSET_LIMIT)?;
    let k = u.len();
    let x = Polynomial::monomial(1);
    let mut plus = n_g.clone();
    let mut minus = Polynomial::zero();
    for mask in 1u32..1 << k {
        let w: Vec<Vertex> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| u[i]).collect();
        let common = g.common_neighborhood(&w).len();
        if common == 0 {
            plus += &Polynomial::monomial(w.len());
        }
        let term = &x * &Polynomial::binomial_power(common);
        if w.len() % 2 == 1 {
            plus += &term;
        } else {
            minus += &term;
        }
    }
    Ok(plus - minus)
}

/// Builds `g` one vertex at a time along the reverse of `order`, updating the
/// polynomial with [`general_attachment`] at every step.
pub fn replay_general_attachment(g: &Graph, order: &[Vertex]) -> Result<Polynomial, OracleError> {
    let mut attached: Vec<Vertex> = Vec::with_capacity(order.len());
    let mut local = vec![usize::MAX; g.n()];
    let mut poly = Polynomial::zero();
    for &v in order.iter().rev() {
        if attached.is_empty() {
            poly = Polynomial::one();
        } else {
            let current = g.induced_subgraph(&attached);
            let u: VertexSet = g
                .neighbors(v)
                .iter()
                .map(|&w| local[w])
                .filter(|&i| i != usize::MAX)
                .collect();
            poly = general_attachment(&current, &poly, &u)?;
        }
        local[v] = attached.len();
        attached.push(v);
    }
    Ok(poly)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CographOp {
    /// Disjoint union.
    Union,
    /// Join: union plus every edge between the two sides.
    Join,
}

/// Neighborhood polynomial of a union or join from the parts' polynomials and sizes.
pub fn cograph_combine(op: CographOp, p1: &Polynomial, p2: &Polynomial, n1: usize, n2: usize) -> Polynomial {
    match op {
        CographOp::Union => p1 + p2 - Polynomial::one(),
        CographOp::Join => {
            let mut a = p1.clone();
            a.mul_binomial_power(n2);
            let mut b = p2.clone();
            b.mul_binomial_power(n1);
            a + b - p1 * p2
        }
    }
}

/// All maximal cliques by subset enumeration, each sorted, in ascending order.
pub fn brute_maximal_cliques(g: &Graph) -> Result<BTreeSet<VertexSet>, OracleError> {
    let n = g.n();
    check_limit("vertex count", n, VERTEX_LIMIT)?;
    let nbr = neighbor_masks(g);
    let is_clique = |s: u64| (0..n).all(|v| s >> v & 1 == 0 || (s & !(1 << v)) & !nbr[v] == 0);
    let mut out = BTreeSet::new();
    for s in 1u64..1 << n {
        if !is_clique(s) {
            continue;
        }
        let extendable = (0..n).any(|v| s >> v & 1 == 0 && s & !nbr[v] == 0);
        if !extendable {
            out.insert((0..n).filter(|&v| s >> v & 1 == 1).collect());
        }
    }
    Ok(out)
}
