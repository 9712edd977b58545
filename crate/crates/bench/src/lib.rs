//! Fixed inputs shared by the benchmarks.

use nbpoly::generators;
use nbpoly::Graph;

/// Seed used for every random benchmark graph.
pub const SEED: u64 = 0x5eed;

/// Random chordal graphs of the given sizes with attachment cliques up to `attach_max`.
pub fn random_chordal_series(sizes: &[usize], attach_max: usize) -> Vec<(usize, Graph)> {
    sizes
        .iter()
        .map(|&n| {
            (
                n,
                generators::random_chordal(n, attach_max, SEED).expect("attach_max >= 1"),
            )
        })
        .collect()
}
