use serde::{Deserialize, Serialize};

use crate::conditions::Condition;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::recognition::{find_ordering, recognize_split_fast};

use super::caterpillar::{caterpillar_ordering, check_caterpillar_distances, Caterpillar};

/// Maximum `|pos(u) - pos(v)|` over edges; 0 without edges.
pub fn ordering_width(g: &Graph, ord: &VertexOrdering) -> usize {
    g.edges()
        .map(|(u, v)| ord.pos(u).abs_diff(ord.pos(v)))
        .max()
        .unwrap_or(0)
}

/// Lower bounds on the bandwidth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LowerBounds {
    /// `ceil(Δ/2)`: the neighbours of a vertex fill positions on both sides.
    pub degree: usize,
    /// `max ceil((n'-1)/d')` over components with `n'` vertices and diameter `d'`.
    pub diameter: usize,
    /// `ω - 1`: a clique spans that many positions in any ordering.
    pub clique: usize,
}

impl LowerBounds {
    pub fn max(&self) -> usize {
        self.degree.max(self.diameter).max(self.clique)
    }
}

pub fn lower_bounds(g: &Graph) -> LowerBounds {
    let diameter = g
        .components()
        .iter()
        .zip(g.component_diameters())
        .filter(|(_, d)| *d > 0)
        .map(|(c, d)| (c.len() - 1).div_ceil(d))
        .max()
        .unwrap_or(0);
    LowerBounds {
        degree: g.max_degree().div_ceil(2),
        diameter,
        clique: g.max_clique_size().saturating_sub(1),
    }
}

/// Which guarantee a class-specific ordering is measured against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// `Δ`, for interval graphs.
    MaxDegree,
    /// `ω - 1`, for proper interval graphs.
    CliqueMinusOne,
    /// `2Δ - 1`, for co-comparability graphs with at least one edge.
    TwiceMaxDegreeMinusOne,
    /// `Δ(Δ + 2)`, for split graphs.
    MaxDegreeTimesMaxDegreePlusTwo,
    /// `3Δ`, for AT-free graphs through a spanning caterpillar.
    ThreeMaxDegree,
}

impl BoundKind {
    pub fn formula(self) -> &'static str {
        match self {
            BoundKind::MaxDegree => "Δ",
            BoundKind::CliqueMinusOne => "ω-1",
            BoundKind::TwiceMaxDegreeMinusOne => "2Δ-1",
            BoundKind::MaxDegreeTimesMaxDegreePlusTwo => "Δ(Δ+2)",
            BoundKind::ThreeMaxDegree => "3Δ",
        }
    }

    pub fn value(self, g: &Graph) -> usize {
        let d = g.max_degree();
        match self {
            BoundKind::MaxDegree => d,
            BoundKind::CliqueMinusOne => g.max_clique_size().saturating_sub(1),
            BoundKind::TwiceMaxDegreeMinusOne => (2 * d).saturating_sub(1),
            BoundKind::MaxDegreeTimesMaxDegreePlusTwo => d * (d + 2),
            BoundKind::ThreeMaxDegree => 3 * d,
        }
    }
}

/// An ordering together with its measured width and the guarantee it is
/// expected to meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedOrdering {
    pub ordering: VertexOrdering,
    pub width: usize,
    pub bound: BoundKind,
    pub guarantee: usize,
}

impl BoundedOrdering {
    fn measure(g: &Graph, ordering: VertexOrdering, bound: BoundKind) -> Self {
        BoundedOrdering {
            width: ordering_width(g, &ordering),
            guarantee: bound.value(g),
            ordering,
            bound,
        }
    }

    pub fn within_bound(&self) -> bool {
        self.width <= self.guarantee
    }
}

fn condition_ordering(g: &Graph, c: Condition, class: &str, max_n: usize) -> Result<VertexOrdering> {
    find_ordering(g, &[c], max_n)?.ok_or_else(|| Error::NotMember(class.into()))
}

/// An interval ordering, of width at most `Δ`.
pub fn interval_bandwidth_ordering(g: &Graph, max_n: usize) -> Result<BoundedOrdering> {
    let ord = condition_ordering(g, Condition::Interval, "interval", max_n)?;
    Ok(BoundedOrdering::measure(g, ord, BoundKind::MaxDegree))
}

/// A proper interval ordering, of width at most `ω - 1`.
pub fn proper_interval_bandwidth_ordering(g: &Graph, max_n: usize) -> Result<BoundedOrdering> {
    let ord = condition_ordering(g, Condition::ProperInterval, "proper interval", max_n)?;
    Ok(BoundedOrdering::measure(g, ord, BoundKind::CliqueMinusOne))
}

/// A co-comparability ordering, of width at most `2Δ - 1`.
pub fn cocomp_bandwidth_ordering(g: &Graph, max_n: usize) -> Result<BoundedOrdering> {
    if g.edge_count() == 0 {
        return Err(Error::Parameter("the 2Δ-1 guarantee needs at least one edge".into()));
    }
    let ord = condition_ordering(g, Condition::CoComparability, "co-comparability", max_n)?;
    Ok(BoundedOrdering::measure(g, ord, BoundKind::TwiceMaxDegreeMinusOne))
}

/// Isolated vertices first, then the rest in index order. The width is at
/// most `|I_1| + |K| - 1` (the non-isolated vertices), which is at most
/// `Δ(Δ + 2)`.
pub fn split_bandwidth_ordering(g: &Graph) -> Result<BoundedOrdering> {
    if recognize_split_fast(g).is_none() {
        return Err(Error::NotMember("split".into()));
    }
    let (isolated, rest): (Vec<usize>, Vec<usize>) = (0..g.n()).partition(|&v| g.degree(v) == 0);
    let ord = VertexOrdering::new(isolated.into_iter().chain(rest).collect())?;
    Ok(BoundedOrdering::measure(
        g,
        ord,
        BoundKind::MaxDegreeTimesMaxDegreePlusTwo,
    ))
}

/// The caterpillar ordering of a spanning caterpillar `t` read as an ordering
/// of `g`; requires the tree-distance property checked by
/// [`check_caterpillar_distances`]. Width at most `3Δ`.
pub fn atfree_bandwidth_ordering(g: &Graph, t: &Caterpillar) -> Result<BoundedOrdering> {
    check_caterpillar_distances(g, t)?;
    Ok(BoundedOrdering::measure(
        g,
        caterpillar_ordering(t),
        BoundKind::ThreeMaxDegree,
    ))
}
