use std::collections::{BTreeMap, BTreeSet};

use nbpoly::engine::{refresh_record, restrict_record, AnchorSet, CliqueRecord, Engine};
use nbpoly::generators::{self, BasicKind};
use nbpoly::oracle;
use nbpoly::{compute, compute_seeded, find_peo, Graph, Polynomial, VertexSet};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small_corpus() -> Vec<Graph> {
    let mut corpus = Vec::new();
    for n in 1..=9 {
        for kind in [BasicKind::Path, BasicKind::Complete, BasicKind::Star] {
            corpus.push(generators::basic(kind, n).unwrap());
        }
    }
    for m in 1..=5 {
        corpus.push(generators::split(m));
    }
    for m in 1..=3 {
        corpus.push(generators::interval_family(m));
    }
    for seed in 0..60 {
        let n = 2 + (seed as usize % 11);
        let attach = 1 + (seed as usize % 5);
        corpus.push(generators::random_chordal(n, attach, seed).unwrap());
    }
    corpus
}

fn to_vertex_set(a: &[usize]) -> VertexSet {
    VertexSet::from_sorted(a.to_vec()).unwrap()
}

/// Attachment order (reverse PEO) and, for each step, the attachment clique in attach indices.
fn attachment_plan(g: &Graph) -> (Vec<usize>, Vec<Vec<usize>>) {
    let mut order = find_peo(g).unwrap().into_vec();
    order.reverse();
    let mut index = vec![usize::MAX; g.n()];
    let mut cliques = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let mut c: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| index[w])
            .filter(|&a| a != usize::MAX)
            .collect();
        c.sort_unstable();
        cliques.push(c);
        index[v] = i;
    }
    (order, cliques)
}

fn record_sum(rec: &CliqueRecord) -> Polynomial {
    rec.anchors()
        .values()
        .fold(Polynomial::zero(), |acc, p| acc + p.clone())
}

/// Replays the engine step by step and checks every record against the oracles.
fn check_records_along_construction(g: &Graph) {
    let (order, cliques) = attachment_plan(g);
    let mut engine = Engine::new();
    for (i, c) in cliques.iter().enumerate() {
        // refresh conservation for every record the step will touch
        for rec in engine.records() {
            let a0: Vec<usize> = rec.clique().iter().copied().filter(|v| c.contains(v)).collect();
            if a0.is_empty() || a0.len() == rec.clique().len() {
                continue;
            }
            let refreshed = refresh_record(rec, c).unwrap();
            let mut expected = record_sum(rec);
            let meeting = rec
                .anchors()
                .iter()
                .filter(|(a, _)| a.as_slice().iter().any(|v| a0.contains(v)))
                .fold(Polynomial::zero(), |acc, (_, p)| acc + p.clone());
            expected.add_shifted(&meeting, 1);
            assert_eq!(record_sum(&refreshed), expected);
        }

        engine.attach(c).unwrap();
        let current = g.induced_subgraph(&order[..=i]);

        assert_eq!(
            *engine.polynomial(),
            oracle::brute_neighborhood_poly(&current).unwrap(),
            "running polynomial after step {i}"
        );

        let cliques_now: BTreeSet<VertexSet> = engine.records().iter().map(|r| to_vertex_set(r.clique())).collect();
        assert_eq!(cliques_now.len(), engine.records().len());
        if current.n() <= 12 {
            assert_eq!(cliques_now, oracle::brute_maximal_cliques(&current).unwrap());
        }

        for rec in engine.records() {
            let clique = to_vertex_set(rec.clique());
            let keys: BTreeSet<VertexSet> = rec.anchors().keys().map(|a| to_vertex_set(a.as_slice())).collect();
            assert_eq!(keys, oracle::closure_anchor_family(&current, &clique).unwrap());
            assert!(rec.anchors().values().all(|p| !p.is_zero()));
            assert_eq!(
                rec.anchors()[&AnchorSet::new(rec.clique().to_vec())].coeff(0),
                BigInt::from(1)
            );

            if current.periphery(&clique).unwrap().len() <= 14 {
                let brute = oracle::brute_anchor_data(&current, &clique).unwrap();
                let ours: BTreeMap<VertexSet, Polynomial> = rec
                    .anchors()
                    .iter()
                    .map(|(a, p)| (to_vertex_set(a.as_slice()), p.clone()))
                    .collect();
                assert_eq!(ours, brute);

                // sub-clique families derived from the record match brute force too
                for drop in 0..clique.len() {
                    let sub: Vec<usize> = rec
                        .clique()
                        .iter()
                        .copied()
                        .filter(|&v| v != rec.clique()[drop])
                        .collect();
                    if sub.is_empty() {
                        continue;
                    }
                    let derived = restrict_record(rec, &sub).unwrap();
                    let derived: BTreeMap<VertexSet, Polynomial> = derived
                        .into_iter()
                        .map(|(a, p)| (to_vertex_set(a.as_slice()), p))
                        .collect();
                    assert_eq!(
                        derived,
                        oracle::brute_anchor_data(&current, &to_vertex_set(&sub)).unwrap()
                    );
                }
            }
        }
    }
}

#[test]
fn records_match_oracles_after_every_step() {
    for g in small_corpus() {
        if g.n() <= 14 && find_peo(&g).is_ok() {
            check_records_along_construction(&g);
        }
    }
}

#[test]
fn worked_example_two_periphery_vertices() {
    // triangle abc, w ~ {a, c}, then v ~ {a, b}
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 2), (4, 0), (4, 1)]).unwrap();
    let data = oracle::brute_anchor_data(&g, &VertexSet::from([0, 1, 2])).unwrap();
    let as_vec: Vec<(Vec<usize>, Polynomial)> = data.into_iter().map(|(k, p)| (k.into_vec(), p)).collect();
    assert_eq!(
        as_vec,
        vec![
            (vec![0], Polynomial::from_i64s(&[0, 0, 1])),
            (vec![0, 1], Polynomial::from_i64s(&[0, 1])),
            (vec![0, 1, 2], Polynomial::from_i64s(&[1])),
            (vec![0, 2], Polynomial::from_i64s(&[0, 1])),
        ]
    );
    check_records_along_construction(&g);
}

#[test]
fn polynomial_shape_invariants() {
    for g in small_corpus() {
        let r = compute(&g).unwrap();
        assert_eq!(r.poly.coeff(0), BigInt::from(1));
        assert_eq!(r.poly.degree(), Some(g.max_degree()));
        assert!(r.anchor_width <= r.peak_width);
        assert_eq!(r.steps.len(), g.n());
    }
}

#[test]
fn count_identity_matches_complex_size() {
    for g in small_corpus() {
        let r = compute(&g).unwrap();
        // |complex| by direct enumeration of subsets with a common neighbor
        let n = g.n();
        let masks: Vec<u32> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
            .collect();
        let size = (0u32..1 << n).filter(|&u| masks.iter().any(|&m| u & !m == 0)).count();
        assert_eq!(r.poly.evaluate(&BigInt::from(1)), BigInt::from(size));
    }
}

#[test]
fn bound_assertions_on_named_families() {
    for m in 1..=6 {
        let w = compute(&generators::interval_family(m)).unwrap().anchor_width;
        assert!(w >= m * m && w <= (4 * m + 1) * (4 * m + 1), "m = {m}: {w}");
    }
    for n in 1..=20 {
        let k = compute(&generators::basic(BasicKind::Complete, n).unwrap()).unwrap();
        assert!(k.anchor_width <= 2 * n);
        let s = compute(&generators::basic(BasicKind::Star, n).unwrap()).unwrap();
        assert!(s.anchor_width <= 2 * n);
    }
}

#[test]
fn second_pipeline_agrees() {
    for seed in 0..30 {
        let g = generators::random_chordal(12, 5, 1000 + seed).unwrap();
        let order = find_peo(&g).unwrap();
        let replay = oracle::replay_general_attachment(&g, order.as_slice()).unwrap();
        assert_eq!(replay, compute(&g).unwrap().poly);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn engine_matches_brute_force(n in 1usize..=14, attach in 1usize..=5, seed in any::<u64>()) {
        let g = generators::random_chordal(n, attach, seed).unwrap();
        prop_assert_eq!(compute(&g).unwrap().poly, oracle::brute_neighborhood_poly(&g).unwrap());
    }

    #[test]
    fn result_is_independent_of_tie_breaks(n in 1usize..=40, attach in 1usize..=5, seed in any::<u64>(), tie in any::<u64>()) {
        let g = generators::random_chordal(n, attach, seed).unwrap();
        let base = compute(&g).unwrap();
        let other = compute_seeded(&g, Some(tie)).unwrap();
        prop_assert_eq!(base.poly, other.poly);
        prop_assert_eq!(base.anchor_width, other.anchor_width);
    }
}
