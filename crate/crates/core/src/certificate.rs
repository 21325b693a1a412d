//! Self-contained, serialisable recognition certificates and their offline
//! verification.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::bandwidth::{lower_bounds, ordering_width, BoundKind, LowerBounds};
use crate::conditions::{check_ordering, Condition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::io::emit_edge_list;
use crate::limits::Limits;
use crate::recognition::{
    find_asteroidal_triple, find_ordering, is_asteroidal_triple, is_chordless_cycle, AsteroidalTriple, ClassId,
};
use crate::representations::{permutation_graph, IntervalModel, Orientation, Permutation};

pub const SCHEMA: &str = "ordercert/1";

/// SHA-256 of the canonical edge list, as `sha256:<hex>`.
pub fn digest(g: &Graph) -> String {
    let hash = Sha256::digest(emit_edge_list(g).as_bytes());
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub n: usize,
    pub m: usize,
    pub digest: String,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        GraphSummary {
            n: g.n(),
            m: g.edge_count(),
            digest: digest(g),
        }
    }
}

/// How the verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Search,
    MaximumCardinalitySearch,
    DegreePartition,
    AsteroidalTripleSearch,
}

/// Evidence of non-membership.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Obstruction {
    /// No ordering satisfies the class conditions.
    Exhaustive,
    /// An induced cycle of length at least four, in the graph or in its
    /// complement.
    ChordlessCycle {
        complement: bool,
        cycle: Vec<usize>,
    },
    AsteroidalTriple {
        triple: [usize; 3],
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Representation {
    IntervalModel {
        intervals: IntervalModel,
    },
    /// Transitive orientation of the edges.
    Orientation {
        orientation: Orientation,
    },
    /// Transitive orientation of the non-edges.
    ComplementOrientation {
        orientation: Orientation,
    },
    /// Realizer whose inversion graph is the graph with vertices renamed by
    /// their position in the ordering; one-based.
    Permutation {
        permutation: Permutation,
    },
    SplitPartition {
        clique: Vec<usize>,
        independent: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guarantee {
    pub bound: BoundKind,
    pub formula: String,
    pub value: usize,
}

impl Guarantee {
    pub fn of(g: &Graph, bound: BoundKind) -> Self {
        Guarantee {
            bound,
            formula: bound.formula().to_string(),
            value: bound.value(g),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub lower: LowerBounds,
    /// Width of the certifying ordering.
    pub width: Option<usize>,
    /// Upper bound that width is guaranteed to meet for this class.
    pub guarantee: Option<Guarantee>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub graph: GraphSummary,
    pub class: ClassId,
    pub member: bool,
    pub method: Method,
    pub conditions: Vec<Condition>,
    pub ordering: Option<Vec<usize>>,
    pub obstruction: Option<Obstruction>,
    pub representation: Option<Representation>,
    pub bounds: BoundsReport,
}

impl Certificate {
    pub(crate) fn new(
        g: &Graph,
        class: ClassId,
        method: Method,
        ordering: Option<VertexOrdering>,
        obstruction: Option<Obstruction>,
        representation: Option<Representation>,
        bounds: BoundsReport,
    ) -> Self {
        Certificate {
            schema: SCHEMA.to_string(),
            graph: GraphSummary::of(g),
            class,
            member: obstruction.is_none(),
            method,
            conditions: class.conditions().to_vec(),
            ordering: ordering.map(VertexOrdering::into_vec),
            obstruction,
            representation,
            bounds,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialise")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("certificate: {e}")))
    }
}

fn reject<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Certificate(msg.into()))
}

/// Re-derives the verdict of `cert` from `g` alone. Orderings are re-checked,
/// representations are compared against the graph, obstructions are
/// validated, and an exhaustion claim is reproduced by a fresh search.
pub fn verify(g: &Graph, cert: &Certificate, limits: &Limits) -> Result<()> {
    if cert.schema != SCHEMA {
        return reject(format!("unsupported schema {:?}", cert.schema));
    }
    if cert.graph != GraphSummary::of(g) {
        return reject("graph summary does not match the input graph");
    }
    if cert.conditions != cert.class.conditions() {
        return reject(format!("condition set does not match class {}", cert.class));
    }
    if cert.member != cert.obstruction.is_none() {
        return reject("verdict and obstruction disagree");
    }
    let ordering = match &cert.ordering {
        Some(seq) => Some(VertexOrdering::for_graph(g, seq.clone()).or_else(|e| reject(e.to_string()))?),
        None => None,
    };
    if cert.member {
        verify_member(g, cert, ordering.as_ref())?;
    } else {
        if ordering.is_some() || cert.representation.is_some() {
            return reject("non-member certificate carries membership evidence");
        }
        verify_obstruction(g, cert.class, cert.obstruction.as_ref().expect("checked above"), limits)?;
    }
    verify_bounds(g, cert, ordering.as_ref())
}

fn verify_member(g: &Graph, cert: &Certificate, ord: Option<&VertexOrdering>) -> Result<()> {
    let Some(ord) = ord else {
        if cert.class != ClassId::AtFree {
            return reject("member certificate lacks an ordering");
        }
        return match find_asteroidal_triple(g) {
            None => Ok(()),
            Some(t) => reject(format!("graph has asteroidal triple {:?}", t.0)),
        };
    };
    for &c in &cert.conditions {
        let v = check_ordering(g, ord, c)?;
        if let Some(w) = v.witness {
            return reject(format!(
                "ordering violates {c} at positions ({}, {}, {})",
                w.i, w.j, w.k
            ));
        }
    }
    let expected = match cert.class {
        ClassId::Chordal | ClassId::AtFree => None,
        ClassId::Interval | ClassId::ProperInterval => Some("interval-model"),
        ClassId::Comparability => Some("orientation"),
        ClassId::CoComparability => Some("complement-orientation"),
        ClassId::Permutation => Some("permutation"),
        ClassId::Split => Some("split-partition"),
    };
    match (&cert.representation, expected) {
        (None, None) => Ok(()),
        (Some(r), Some(_)) => verify_representation(g, cert.class, r, ord),
        _ => reject(format!("expected representation {expected:?} for class {}", cert.class)),
    }
}

fn verify_representation(g: &Graph, class: ClassId, r: &Representation, ord: &VertexOrdering) -> Result<()> {
    match (class, r) {
        (ClassId::Interval | ClassId::ProperInterval, Representation::IntervalModel { intervals }) => {
            if intervals.intersection_graph() != *g {
                return reject("interval model does not reproduce the graph");
            }
        }
        (ClassId::Comparability, Representation::Orientation { orientation }) => {
            verify_orientation(orientation, g)?;
        }
        (ClassId::CoComparability, Representation::ComplementOrientation { orientation }) => {
            verify_orientation(orientation, &g.complement())?;
        }
        (ClassId::Permutation, Representation::Permutation { permutation }) => {
            if permutation.len() != g.n() || permutation_graph(permutation) != ord.position_graph(g) {
                return reject("permutation does not realise the graph in ordering positions");
            }
        }
        (ClassId::Split, Representation::SplitPartition { clique, independent }) => {
            let mut all: Vec<usize> = clique.iter().chain(independent).copied().collect();
            all.sort_unstable();
            if all != (0..g.n()).collect::<Vec<_>>() {
                return reject("split parts do not partition the vertex set");
            }
            if !g.is_clique(clique) || !g.is_independent(independent) {
                return reject("split parts are not a clique and an independent set");
            }
        }
        _ => return reject(format!("representation does not fit class {class}")),
    }
    Ok(())
}

fn verify_orientation(o: &Orientation, target: &Graph) -> Result<()> {
    if o.underlying_graph() != *target {
        return reject("orientation does not cover exactly the expected pairs");
    }
    if let Some((a, b, c)) = o.transitivity_violation() {
        return reject(format!("orientation has {a}->{b}->{c} without {a}->{c}"));
    }
    Ok(())
}

fn verify_obstruction(g: &Graph, class: ClassId, ob: &Obstruction, limits: &Limits) -> Result<()> {
    match ob {
        Obstruction::Exhaustive => {
            if class == ClassId::AtFree {
                return reject("AT-free refutations need an explicit triple");
            }
            if find_ordering(g, class.conditions(), limits.search_max_n)?.is_some() {
                return reject("an ordering satisfying the class conditions exists");
            }
        }
        Obstruction::ChordlessCycle { complement, cycle } => {
            let applies = match class {
                ClassId::Split => true,
                ClassId::Chordal | ClassId::Interval | ClassId::ProperInterval => !complement,
                _ => false,
            };
            if !applies {
                return reject(format!("a chordless cycle does not refute class {class}"));
            }
            let host = if *complement { g.complement() } else { g.clone() };
            if !is_chordless_cycle(&host, cycle) {
                return reject(format!("{cycle:?} is not a chordless cycle"));
            }
        }
        Obstruction::AsteroidalTriple { triple } => {
            let applies = matches!(
                class,
                ClassId::AtFree
                    | ClassId::Interval
                    | ClassId::ProperInterval
                    | ClassId::CoComparability
                    | ClassId::Permutation
            );
            if !applies {
                return reject(format!("an asteroidal triple does not refute class {class}"));
            }
            if !is_asteroidal_triple(g, &AsteroidalTriple(*triple)) {
                return reject(format!("{triple:?} is not an asteroidal triple"));
            }
        }
    }
    Ok(())
}

fn verify_bounds(g: &Graph, cert: &Certificate, ord: Option<&VertexOrdering>) -> Result<()> {
    let b = &cert.bounds;
    if b.lower != lower_bounds(g) {
        return reject("lower bounds do not match");
    }
    if b.width != ord.map(|o| ordering_width(g, o)) {
        return reject("reported width does not match the ordering");
    }
    if let Some(gu) = &b.guarantee {
        if *gu != Guarantee::of(g, gu.bound) {
            return reject("guarantee value does not match the graph");
        }
        if b.width.is_some_and(|w| w > gu.value) {
            return reject("ordering width exceeds its guarantee");
        }
    }
    Ok(())
}
