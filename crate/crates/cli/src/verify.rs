use std::fmt::Write as _;

use nbpoly::{compute, find_peo, oracle, Graph, OracleError, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::families::Family;
use crate::Failure;

pub(crate) enum Plan {
    Input(Graph),
    Family {
        family: Family,
        params: Vec<usize>,
        count: usize,
        max_n: usize,
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Default)]
struct Tally {
    pass: usize,
    fail: usize,
    skip: usize,
    not_chordal: Option<String>,
    out: String,
}

impl Tally {
    fn record(&mut self, status: Status, check: &str, label: &str, detail: &str) {
        let tag = match status {
            Status::Pass => {
                self.pass += 1;
                "PASS"
            }
            Status::Fail => {
                self.fail += 1;
                "FAIL"
            }
            Status::Skip => {
                self.skip += 1;
                "SKIP"
            }
        };
        let _ = write!(self.out, "{tag} {check:<16} {label}");
        if !detail.is_empty() {
            let _ = write!(self.out, ": {detail}");
        }
        self.out.push('\n');
    }

    fn compare(&mut self, check: &str, label: &str, ours: &Polynomial, theirs: Result<Polynomial, OracleError>) {
        match theirs {
            Ok(p) if &p == ours => self.record(Status::Pass, check, label, ""),
            Ok(p) => self.record(Status::Fail, check, label, &format!("engine {ours}, oracle {p}")),
            Err(e) => self.record(Status::Skip, check, label, &e.to_string()),
        }
    }
}

/// Expected anchor width of a named family member.
enum WidthCheck {
    Exact(usize),
    Between(usize, usize),
}

struct Case {
    label: String,
    graph: Graph,
    width: Option<WidthCheck>,
}

fn cases(plan: Plan) -> Result<Vec<Case>, Failure> {
    let (family, params, count, max_n, seed) = match plan {
        Plan::Input(graph) => {
            return Ok(vec![Case {
                label: format!("input (n={})", graph.n()),
                graph,
                width: None,
            }]);
        }
        Plan::Family {
            family,
            params,
            count,
            max_n,
            seed,
        } => (family, params, count, max_n, seed),
    };

    if family == Family::RandomChordal {
        if max_n == 0 {
            return Err(Failure::usage("--max-n must be at least 1"));
        }
        let attach_max = params.first().copied().unwrap_or(4);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        return (0..count)
            .map(|i| {
                let n = rng.random_range(1..=max_n);
                let graph_seed: u64 = rng.random();
                let graph = family.build(&[n, attach_max], graph_seed)?;
                Ok(Case {
                    label: format!("random-chordal #{i} (n={n}, seed={graph_seed})"),
                    graph,
                    width: None,
                })
            })
            .collect();
    }

    let sizes: Vec<usize> = if params.is_empty() {
        (family.min_size()..)
            .take_while(|&k| family.vertex_count(k) <= max_n)
            .collect()
    } else {
        params
    };
    sizes
        .into_iter()
        .map(|k| {
            let graph = family.build(&[k], seed)?;
            let width = match family {
                Family::Split => Some(WidthCheck::Exact((1usize << k) - 1)),
                Family::Interval => Some(WidthCheck::Between(k * k, (4 * k + 1) * (4 * k + 1))),
                _ => None,
            };
            Ok(Case {
                label: format!("{} {k} (n={})", family.name(), graph.n()),
                graph,
                width,
            })
        })
        .collect()
}

fn check(case: &Case, tally: &mut Tally) {
    let g = &case.graph;
    let label = case.label.as_str();
    match oracle::check_complement_identity(g) {
        Ok(true) => tally.record(Status::Pass, "complement", label, ""),
        Ok(false) => tally.record(Status::Fail, "complement", label, "D(complement) + N != (1+x)^n"),
        Err(e) => tally.record(Status::Skip, "complement", label, &e.to_string()),
    }

    let result = match compute(g) {
        Ok(r) => r,
        Err(e) => {
            tally.not_chordal.get_or_insert_with(|| format!("{label}: {e}"));
            tally.record(Status::Fail, "chordal", label, &e.to_string());
            return;
        }
    };
    tally.compare(
        "engine-vs-brute",
        label,
        &result.poly,
        oracle::brute_neighborhood_poly(g),
    );
    let order = find_peo(g).expect("compute succeeded, so a PEO exists");
    tally.compare(
        "replay",
        label,
        &result.poly,
        oracle::replay_general_attachment(g, order.as_slice()),
    );

    let w = result.anchor_width;
    match case.width {
        None => {}
        Some(WidthCheck::Exact(expected)) => {
            let status = if w == expected { Status::Pass } else { Status::Fail };
            tally.record(status, "width", label, &format!("{w} (expected {expected})"));
        }
        Some(WidthCheck::Between(lo, hi)) => {
            let status = if (lo..=hi).contains(&w) {
                Status::Pass
            } else {
                Status::Fail
            };
            tally.record(status, "width", label, &format!("{w} (expected {lo}..={hi})"));
        }
    }
}

pub(crate) fn run(plan: Plan) -> Result<String, Failure> {
    let mut tally = Tally::default();
    for case in cases(plan)? {
        check(&case, &mut tally);
    }
    let _ = writeln!(
        tally.out,
        "{} passed, {} failed, {} skipped",
        tally.pass, tally.fail, tally.skip
    );
    if tally.fail == 0 {
        return Ok(tally.out);
    }
    print!("{}", tally.out);
    Err(match tally.not_chordal {
        Some(message) => Failure { code: 2, message },
        None => Failure::usage(format!("{} check(s) failed", tally.fail)),
    })
}
