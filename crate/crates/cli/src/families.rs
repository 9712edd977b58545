use clap::ValueEnum;
use nbpoly::generators::{self, BasicKind};
use nbpoly::Graph;

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    Split,
    Interval,
    RandomChordal,
}

impl Family {
    fn basic_kind(self) -> Option<BasicKind> {
        match self {
            Family::Path => Some(BasicKind::Path),
            Family::Cycle => Some(BasicKind::Cycle),
            Family::Complete => Some(BasicKind::Complete),
            Family::Star => Some(BasicKind::Star),
            _ => None,
        }
    }

    pub(crate) fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::Split => "split",
            Family::Interval => "interval",
            Family::RandomChordal => "random-chordal",
        }
    }

    fn usage(self) -> &'static str {
        match self {
            Family::Split | Family::Interval => "m",
            Family::RandomChordal => "n attach_max",
            _ => "n",
        }
    }

    /// Builds the family member for `params`, which must match [`Family::usage`].
    pub(crate) fn build(self, params: &[usize], seed: u64) -> Result<Graph, Failure> {
        let arity = if self == Family::RandomChordal { 2 } else { 1 };
        if params.len() != arity {
            return Err(Failure::usage(format!(
                "usage: generate {} <{}>, got {} parameter(s)",
                self.name(),
                self.usage(),
                params.len()
            )));
        }
        let bad = |e: nbpoly::GraphError| Failure::usage(e.to_string());
        match self {
            Family::Split => Ok(generators::split(params[0])),
            Family::Interval => Ok(generators::interval_family(params[0])),
            Family::RandomChordal => generators::random_chordal(params[0], params[1], seed).map_err(bad),
            basic => generators::basic(basic.basic_kind().unwrap(), params[0]).map_err(bad),
        }
    }

    /// Vertex count of the member with size parameter `k` (not random-chordal).
    pub(crate) fn vertex_count(self, k: usize) -> usize {
        match self {
            Family::Split => 2 * k,
            Family::Interval => 4 * k + 1,
            _ => k,
        }
    }

    pub(crate) fn min_size(self) -> usize {
        if self == Family::Cycle {
            3
        } else {
            1
        }
    }
}
