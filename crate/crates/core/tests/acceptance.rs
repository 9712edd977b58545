//! Acceptance suite. Runs every criterion in sequence, prints one PASS/FAIL
//! line each and exits non-zero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nbpoly::generators::{self, BasicKind};
use nbpoly::oracle;
use nbpoly::{anchor_width, compute, compute_seeded, find_peo, Graph, Polynomial, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn chordal_corpus() -> Vec<Graph> {
    let mut corpus = Vec::new();
    for seed in 0..520u64 {
        let n = 1 + (seed as usize * 7) % 16;
        let attach = 1 + (seed as usize) % 5;
        corpus.push(generators::random_chordal(n, attach, seed).unwrap());
    }
    for n in 1..=14 {
        corpus.push(generators::basic(BasicKind::Path, n).unwrap());
        corpus.push(generators::basic(BasicKind::Star, n).unwrap());
        corpus.push(generators::basic(BasicKind::Complete, n).unwrap());
    }
    for m in 1..=5 {
        corpus.push(generators::split(m));
    }
    for m in 1..=3 {
        corpus.push(generators::interval_family(m));
    }
    corpus
}

fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn oracle_equivalence() -> Outcome {
    let corpus = chordal_corpus();
    let random = 520;
    for (i, g) in corpus.iter().enumerate() {
        let ours = compute(g).unwrap().poly;
        let brute = oracle::brute_neighborhood_poly(g).unwrap();
        if ours != brute {
            return outcome(
                false,
                format!("graph #{i} (n = {}): engine {ours}, brute force {brute}", g.n()),
            );
        }
    }
    outcome(
        true,
        format!(
            "{} graphs ({random} random chordal) agree with brute force",
            corpus.len()
        ),
    )
}

fn split_width() -> Outcome {
    for m in 2..=10 {
        let w = anchor_width(&generators::split(m)).unwrap();
        if w != (1 << m) - 1 {
            return outcome(false, format!("m = {m}: width {w}, expected {}", (1 << m) - 1));
        }
    }
    for m in 1..=12 {
        let g = generators::split(m);
        let family = oracle::closure_anchor_family(&g, &(0..m).collect()).unwrap();
        if family.len() != (1 << m) - 1 {
            return outcome(
                false,
                format!("m = {m}: closure family {}, expected {}", family.len(), (1 << m) - 1),
            );
        }
    }
    outcome(true, "width 2^m - 1 for m = 2..10, closure family 2^m - 1 for m <= 12")
}

fn interval_width() -> Outcome {
    let mut widths = Vec::new();
    for m in 1..=6 {
        let w = anchor_width(&generators::interval_family(m)).unwrap();
        widths.push(w);
        if w < m * m || w > (4 * m + 1) * (4 * m + 1) {
            return outcome(
                false,
                format!("m = {m}: width {w} outside [{}, {}]", m * m, (4 * m + 1) * (4 * m + 1)),
            );
        }
    }
    let m = 5;
    let g = generators::interval_family(m);
    let central: VertexSet = (0..=2 * m).collect();
    let family = oracle::brute_anchor_data(&g, &central).unwrap().len();
    let closure = oracle::closure_anchor_family(&g, &central).unwrap().len();
    let detail = format!(
        "widths m = 1..6: {widths:?} within [m^2, (4m+1)^2]; m = 5 central clique family: {family} members (closure {closure}), expected 25"
    );
    outcome(family == 25 && closure == 25, detail)
}

fn complement_identity() -> Outcome {
    let mut corpus: Vec<Graph> = chordal_corpus().into_iter().filter(|g| g.n() <= 14).collect();
    for n in 3..=14 {
        corpus.push(generators::basic(BasicKind::Cycle, n).unwrap());
    }
    for seed in 0..60 {
        corpus.push(random_graph(1 + seed as usize % 14, 0.4, 9000 + seed));
    }
    let non_chordal = corpus.iter().filter(|g| find_peo(g).is_err()).count();
    for (i, g) in corpus.iter().enumerate() {
        if !oracle::check_complement_identity(g).unwrap() {
            return outcome(
                false,
                format!("graph #{i} (n = {}) violates D(complement) + N = (1+x)^n", g.n()),
            );
        }
    }
    outcome(true, format!("{} graphs ({non_chordal} non-chordal)", corpus.len()))
}

fn fixed_vectors() -> Outcome {
    let k4_minus_e = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
    let mut cases = vec![
        (
            "P4",
            generators::basic(BasicKind::Path, 4).unwrap(),
            Polynomial::from_i64s(&[1, 4, 2]),
        ),
        ("K4-e", k4_minus_e, Polynomial::from_i64s(&[1, 4, 6, 2])),
        (
            "K1,3",
            generators::basic(BasicKind::Star, 4).unwrap(),
            Polynomial::from_i64s(&[1, 4, 3, 1]),
        ),
        ("K1", Graph::empty(1), Polynomial::one()),
    ];
    for n in 1..=10 {
        let expected = Polynomial::binomial_power(n) - Polynomial::monomial(n);
        cases.push(("K_n", generators::basic(BasicKind::Complete, n).unwrap(), expected));
    }
    for (name, g, expected) in &cases {
        let got = compute(g).unwrap().poly;
        if &got != expected {
            return outcome(false, format!("{name} (n = {}): got {got}, expected {expected}", g.n()));
        }
    }
    outcome(true, format!("{} vectors", cases.len()))
}

fn second_pipeline() -> Outcome {
    for seed in 0..100u64 {
        let n = 1 + (seed as usize * 5) % 14;
        let attach = 1 + (seed as usize) % 8;
        let g = generators::random_chordal(n, attach, 40_000 + seed).unwrap();
        let order = find_peo(&g).unwrap();
        let replay = oracle::replay_general_attachment(&g, order.as_slice()).unwrap();
        let ours = compute(&g).unwrap().poly;
        if replay != ours {
            return outcome(false, format!("seed {seed}: replay {replay}, engine {ours}"));
        }
    }
    outcome(true, "100 random chordal graphs, n <= 14, attach cliques <= 8")
}

fn comparability_bound() -> Outcome {
    let mut largest = 0;
    for n in 1..=20 {
        let k = anchor_width(&generators::basic(BasicKind::Complete, n).unwrap()).unwrap();
        // K_{1,n} has n + 1 vertices
        let s = anchor_width(&generators::basic(BasicKind::Star, n + 1).unwrap()).unwrap();
        if k > 2 * n || s > 2 * (n + 1) {
            return outcome(false, format!("n = {n}: K_n width {k}, K_1,{n} width {s}"));
        }
        largest = largest.max(k.max(s));
    }
    outcome(true, format!("K_n and K_1,m for n, m <= 20; largest width {largest}"))
}

fn timed(g: &Graph) -> (Duration, usize) {
    let start = Instant::now();
    let r = compute(g).unwrap();
    (start.elapsed(), r.peak_width)
}

fn scaling() -> Outcome {
    let big = generators::random_chordal(5000, 4, 5000).unwrap();
    let (t_big, peak) = timed(&big);
    let g1 = generators::random_chordal(1000, 4, 1000).unwrap();
    let g2 = generators::random_chordal(2000, 4, 2000).unwrap();
    let mut t1 = Duration::ZERO;
    let mut t2 = Duration::ZERO;
    for _ in 0..3 {
        t1 += timed(&g1).0;
        t2 += timed(&g2).0;
    }
    let ratio = t2.as_secs_f64() / t1.as_secs_f64().max(1e-9);
    let detail = format!(
        "n = 5000: {:.2}s, peak_width {peak}; n = 1000 -> 2000 ratio {ratio:.2} (avg {:.3}s / {:.3}s)",
        t_big.as_secs_f64(),
        t1.as_secs_f64() / 3.0,
        t2.as_secs_f64() / 3.0
    );
    outcome(t_big < Duration::from_secs(60) && ratio <= 12.0, detail)
}

fn order_invariance() -> Outcome {
    for i in 0..50u64 {
        let g = generators::random_chordal(10 + (i as usize * 3) % 60, 1 + i as usize % 5, 70_000 + i).unwrap();
        let base = compute(&g).unwrap();
        for tie in 0..10 {
            let other = compute_seeded(&g, Some(tie)).unwrap();
            if other.poly != base.poly || other.anchor_width != base.anchor_width {
                return outcome(false, format!("graph {i}, tie seed {tie}: results differ"));
            }
        }
    }
    outcome(true, "50 graphs x 10 tie seeds give identical polynomials and widths")
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("oracle equivalence", oracle_equivalence),
        ("split-family width", split_width),
        ("interval-family width", interval_width),
        ("complement identity", complement_identity),
        ("fixed vectors", fixed_vectors),
        ("second pipeline", second_pipeline),
        ("comparability bound", comparability_bound),
        ("scaling smoke", scaling),
        ("order invariance", order_invariance),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("[criterion {}] {tag} {name}: {}", i + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
