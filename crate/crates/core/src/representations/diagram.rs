use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::rational::{self, Rational};

/// Piecewise-linear curves over `[0, 1]` sharing one breakpoint grid
/// `0 = x_0 < x_1 < ... < x_m = 1`. Curve `c` takes value `values[c][t]` at
/// `x_t` and is linear between breakpoints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DiagramRepr", into = "DiagramRepr")]
pub struct FunctionDiagram {
    breakpoints: Vec<Rational>,
    curves: Vec<Vec<Rational>>,
}

#[derive(Serialize, Deserialize)]
struct DiagramRepr {
    #[serde(with = "rational::serde_str_vec")]
    breakpoints: Vec<Rational>,
    curves: Vec<CurveRepr>,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct CurveRepr(#[serde(with = "rational::serde_str_vec")] Vec<Rational>);

impl TryFrom<DiagramRepr> for FunctionDiagram {
    type Error = Error;

    fn try_from(r: DiagramRepr) -> Result<Self> {
        FunctionDiagram::new(r.breakpoints, r.curves.into_iter().map(|c| c.0).collect())
    }
}

impl From<FunctionDiagram> for DiagramRepr {
    fn from(d: FunctionDiagram) -> Self {
        DiagramRepr {
            breakpoints: d.breakpoints,
            curves: d.curves.into_iter().map(CurveRepr).collect(),
        }
    }
}

impl FunctionDiagram {
    pub fn new(breakpoints: Vec<Rational>, curves: Vec<Vec<Rational>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::Representation(msg));
        if breakpoints.len() < 2 {
            return bad("a diagram needs at least the breakpoints 0 and 1".into());
        }
        if breakpoints[0] != rational::int(0) || *breakpoints.last().unwrap() != rational::int(1) {
            return bad("breakpoints must start at 0 and end at 1".into());
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return bad("breakpoints must be strictly increasing".into());
        }
        if let Some(c) = curves.iter().position(|c| c.len() != breakpoints.len()) {
            return bad(format!(
                "curve {c} has {} values for {} breakpoints",
                curves[c].len(),
                breakpoints.len()
            ));
        }
        Ok(FunctionDiagram { breakpoints, curves })
    }

    /// Straight segments from `(0, start[c])` to `(1, end[c])`.
    pub fn linear(start: &[Rational], end: &[Rational]) -> Result<Self> {
        if start.len() != end.len() {
            return Err(Error::Representation("start and end value counts differ".into()));
        }
        FunctionDiagram::new(
            vec![rational::int(0), rational::int(1)],
            start.iter().zip(end).map(|(&a, &b)| vec![a, b]).collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn is_linear(&self) -> bool {
        self.breakpoints.len() == 2
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn curve(&self, c: usize) -> &[Rational] {
        &self.curves[c]
    }

    /// Two continuous piecewise-linear curves on a shared grid are disjoint
    /// iff one lies strictly above the other at every breakpoint.
    pub fn curves_meet(&self, a: usize, b: usize) -> bool {
        let mut signs = self.curves[a].iter().zip(&self.curves[b]).map(|(x, y)| x.cmp(y));
        let first = signs.next().expect("at least two breakpoints");
        first == Ordering::Equal || signs.any(|s| s != first)
    }

    pub fn intersection_graph(&self) -> Graph {
        Graph::from_fn(self.len(), |a, b| self.curves_meet(a, b))
    }
}

pub fn intersection_graph_of_diagram(d: &FunctionDiagram) -> Graph {
    d.intersection_graph()
}

/// Orders curves by value at `x = 0`. Equal values are broken by the first
/// differing breakpoint value, then by index.
pub fn ordering_from_diagram(d: &FunctionDiagram) -> VertexOrdering {
    let mut order: Vec<usize> = (0..d.len()).collect();
    order.sort_by(|&a, &b| d.curves[a].cmp(&d.curves[b]).then(a.cmp(&b)));
    VertexOrdering::new(order).expect("sorting a range yields a permutation")
}
