//! Class recognition: exhaustive ordering search, fast paths, and the
//! dispatch that turns either into a certificate.

mod asteroidal;
mod chordal;
mod search;
mod split;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use asteroidal::{find_asteroidal_triple, is_asteroidal_triple, AsteroidalTriple};
pub use chordal::{find_chordless_cycle, is_chordless_cycle, maximum_cardinality_search, recognize_chordal_fast};
pub use search::find_ordering;
pub use split::{recognize_split_fast, SplitPartition};

use crate::bandwidth::{lower_bounds, ordering_width, BoundKind};
use crate::certificate::{BoundsReport, Certificate, Guarantee, Method, Obstruction, Representation};
use crate::conditions::{check_ordering, Condition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::limits::Limits;
use crate::representations::{
    interval_model_from_ordering, orientation_from_ordering, permutation_from_ordering, split_ordering, OrientationMode,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassId {
    Interval,
    ProperInterval,
    Comparability,
    CoComparability,
    Permutation,
    Chordal,
    Split,
    AtFree,
}

impl ClassId {
    pub const ALL: [ClassId; 8] = [
        ClassId::Interval,
        ClassId::ProperInterval,
        ClassId::Comparability,
        ClassId::CoComparability,
        ClassId::Permutation,
        ClassId::Chordal,
        ClassId::Split,
        ClassId::AtFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassId::Interval => "interval",
            ClassId::ProperInterval => "proper-interval",
            ClassId::Comparability => "comparability",
            ClassId::CoComparability => "co-comparability",
            ClassId::Permutation => "permutation",
            ClassId::Chordal => "chordal",
            ClassId::Split => "split",
            ClassId::AtFree => "at-free",
        }
    }

    /// Conditions a certifying ordering must satisfy simultaneously. AT-free
    /// graphs have no ordering characterisation here and map to none.
    pub fn conditions(self) -> &'static [Condition] {
        match self {
            ClassId::Interval => &[Condition::Interval],
            ClassId::ProperInterval => &[Condition::ProperInterval],
            ClassId::Comparability => &[Condition::Comparability],
            ClassId::CoComparability => &[Condition::CoComparability],
            ClassId::Permutation => &[Condition::Comparability, Condition::CoComparability],
            ClassId::Chordal => &[Condition::Peo],
            ClassId::Split => &[Condition::SimpleSplit],
            ClassId::AtFree => &[],
        }
    }

    /// Width guarantee of a certifying ordering, where one is known.
    pub fn guarantee(self) -> Option<BoundKind> {
        match self {
            ClassId::Interval => Some(BoundKind::MaxDegree),
            ClassId::ProperInterval => Some(BoundKind::CliqueMinusOne),
            ClassId::CoComparability | ClassId::Permutation => Some(BoundKind::TwiceMaxDegreeMinusOne),
            _ => None,
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        let key = key.strip_suffix("-graph").unwrap_or(&key);
        let alias = match key {
            "cocomparability" => "co-comparability",
            "atfree" | "at" => "at-free",
            other => other,
        };
        ClassId::ALL
            .into_iter()
            .find(|c| c.name() == alias)
            .ok_or_else(|| Error::Parse(format!("unknown class {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RecognizeOptions {
    pub limits: Limits,
    /// Use maximum cardinality search for chordal graphs and the degree
    /// partition for split graphs instead of the exhaustive search.
    pub fast_paths: bool,
}

impl Default for RecognizeOptions {
    fn default() -> Self {
        RecognizeOptions {
            limits: Limits::default(),
            fast_paths: true,
        }
    }
}

/// Decides membership of `g` in `cls` and packages the evidence.
///
/// Members carry a satisfying ordering (none for AT-free graphs) and the
/// class representation where there is one. Non-members carry a chordless
/// cycle or asteroidal triple when one refutes the class, and otherwise the
/// claim that no ordering satisfies the class conditions.
pub fn recognize(g: &Graph, cls: ClassId, opts: &RecognizeOptions) -> Result<Certificate> {
    let conds = cls.conditions();
    let (method, ordering, partition) = match cls {
        ClassId::AtFree => {
            let at = find_asteroidal_triple(g);
            return Ok(Certificate::new(
                g,
                cls,
                Method::AsteroidalTripleSearch,
                None,
                at.map(|t| Obstruction::AsteroidalTriple { triple: t.0 }),
                None,
                bounds_report(g, cls, None),
            ));
        }
        ClassId::Chordal if opts.fast_paths => (Method::MaximumCardinalitySearch, recognize_chordal_fast(g), None),
        ClassId::Split if opts.fast_paths => match recognize_split_fast(g) {
            Some(p) => {
                let ord = split_ordering(g, &p.clique, &p.independent)?;
                (Method::DegreePartition, Some(ord), Some(p))
            }
            None => (Method::DegreePartition, None, None),
        },
        _ => (Method::Search, find_ordering(g, conds, opts.limits.search_max_n)?, None),
    };

    let Some(ord) = ordering else {
        let obstruction = refutation(g, cls);
        return Ok(Certificate::new(
            g,
            cls,
            method,
            None,
            Some(obstruction),
            None,
            bounds_report(g, cls, None),
        ));
    };
    for &c in conds {
        if !check_ordering(g, &ord, c)?.holds {
            unreachable!("{method:?} returned an ordering violating {c}");
        }
    }
    let representation = representation(g, cls, &ord, partition)?;
    let bounds = bounds_report(g, cls, Some(&ord));
    Ok(Certificate::new(
        g,
        cls,
        method,
        Some(ord),
        None,
        representation,
        bounds,
    ))
}

/// The first vertex with an earlier neighbour starts the clique part of an
/// ordering satisfying the simple split condition; everything before it is
/// independent.
pub fn partition_from_split_ordering(g: &Graph, ord: &VertexOrdering) -> Result<SplitPartition> {
    if !check_ordering(g, ord, Condition::SimpleSplit)?.holds {
        return Err(Error::InvalidOrdering(
            "ordering violates the simple split condition".into(),
        ));
    }
    let seq = ord.as_slice();
    let cut = (0..seq.len())
        .find(|&p| seq[..p].iter().any(|&u| g.has_edge(u, seq[p])))
        .unwrap_or(seq.len());
    let mut clique = seq[cut..].to_vec();
    let mut independent = seq[..cut].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    Ok(SplitPartition { clique, independent })
}

fn representation(
    g: &Graph,
    cls: ClassId,
    ord: &VertexOrdering,
    partition: Option<SplitPartition>,
) -> Result<Option<Representation>> {
    Ok(match cls {
        ClassId::Interval | ClassId::ProperInterval => Some(Representation::IntervalModel {
            intervals: interval_model_from_ordering(g, ord)?,
        }),
        ClassId::Comparability => Some(Representation::Orientation {
            orientation: orientation_from_ordering(g, ord, OrientationMode::Edges)?,
        }),
        ClassId::CoComparability => Some(Representation::ComplementOrientation {
            orientation: orientation_from_ordering(g, ord, OrientationMode::NonEdges)?,
        }),
        ClassId::Permutation => Some(Representation::Permutation {
            permutation: permutation_from_ordering(g, ord)?,
        }),
        ClassId::Split => {
            let p = match partition {
                Some(p) => p,
                None => partition_from_split_ordering(g, ord)?,
            };
            Some(Representation::SplitPartition {
                clique: p.clique,
                independent: p.independent,
            })
        }
        ClassId::Chordal | ClassId::AtFree => None,
    })
}

/// An explicit obstruction when a cheap one refutes `cls`, else the
/// exhaustion claim.
fn refutation(g: &Graph, cls: ClassId) -> Obstruction {
    let in_graph = || {
        find_chordless_cycle(g).map(|cycle| Obstruction::ChordlessCycle {
            complement: false,
            cycle,
        })
    };
    let at = || find_asteroidal_triple(g).map(|t| Obstruction::AsteroidalTriple { triple: t.0 });
    let found = match cls {
        ClassId::Chordal => in_graph(),
        ClassId::Split => in_graph().or_else(|| {
            find_chordless_cycle(&g.complement()).map(|cycle| Obstruction::ChordlessCycle {
                complement: true,
                cycle,
            })
        }),
        ClassId::Interval | ClassId::ProperInterval => in_graph().or_else(at),
        ClassId::CoComparability | ClassId::Permutation => at(),
        _ => None,
    };
    found.unwrap_or(Obstruction::Exhaustive)
}

fn bounds_report(g: &Graph, cls: ClassId, ord: Option<&VertexOrdering>) -> BoundsReport {
    let guarantee = match (cls.guarantee(), ord) {
        // 2Δ-1 is stated for graphs with at least one edge
        (Some(BoundKind::TwiceMaxDegreeMinusOne), _) if g.edge_count() == 0 => None,
        (Some(kind), Some(_)) => Some(Guarantee::of(g, kind)),
        _ => None,
    };
    BoundsReport {
        lower: lower_bounds(g),
        width: ord.map(|o| ordering_width(g, o)),
        guarantee,
    }
}
