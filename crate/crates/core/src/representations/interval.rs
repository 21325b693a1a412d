use serde::{Deserialize, Serialize};

use crate::conditions::{require, Condition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::rational::{self, Rational};

/// A closed interval `[left, right]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    #[serde(with = "rational::serde_str")]
    pub left: Rational,
    #[serde(with = "rational::serde_str")]
    pub right: Rational,
}

impl Interval {
    pub fn new(left: Rational, right: Rational) -> Self {
        Interval { left, right }
    }

    pub fn from_ints(left: i64, right: i64) -> Self {
        Interval::new(rational::int(left), rational::int(right))
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.left.max(other.left) <= self.right.min(other.right)
    }
}

/// One closed interval per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Interval>", into = "Vec<Interval>")]
pub struct IntervalModel {
    intervals: Vec<Interval>,
}

impl TryFrom<Vec<Interval>> for IntervalModel {
    type Error = Error;

    fn try_from(intervals: Vec<Interval>) -> Result<Self> {
        IntervalModel::new(intervals)
    }
}

impl From<IntervalModel> for Vec<Interval> {
    fn from(m: IntervalModel) -> Self {
        m.intervals
    }
}

impl IntervalModel {
    pub fn new(intervals: Vec<Interval>) -> Result<Self> {
        if let Some((v, iv)) = intervals.iter().enumerate().find(|(_, iv)| iv.left > iv.right) {
            return Err(Error::Representation(format!(
                "interval of vertex {v} has left endpoint {} after right endpoint {}",
                rational::to_string(&iv.left),
                rational::to_string(&iv.right)
            )));
        }
        Ok(IntervalModel { intervals })
    }

    pub fn from_ints(pairs: &[(i64, i64)]) -> Result<Self> {
        IntervalModel::new(pairs.iter().map(|&(l, r)| Interval::from_ints(l, r)).collect())
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intersection_graph(&self) -> Graph {
        Graph::from_fn(self.len(), |u, v| self.intervals[u].intersects(&self.intervals[v]))
    }

    /// An equivalent model whose `2n` endpoints are the distinct integers
    /// `1..=2n`. Endpoints are ranked by value; at equal values left endpoints
    /// come before right endpoints, so touching intervals still meet, and ties
    /// among left endpoints go to the smaller vertex.
    pub fn canonicalize(&self) -> IntervalModel {
        let mut events: Vec<(Rational, u8, usize)> = Vec::with_capacity(2 * self.len());
        for (v, iv) in self.intervals.iter().enumerate() {
            events.push((iv.left, 0, v));
            events.push((iv.right, 1, v));
        }
        events.sort();
        let mut out = vec![Interval::from_ints(0, 0); self.len()];
        for (rank, &(_, kind, v)) in events.iter().enumerate() {
            let r = rational::int(rank as i64 + 1);
            if kind == 0 {
                out[v].left = r;
            } else {
                out[v].right = r;
            }
        }
        IntervalModel { intervals: out }
    }
}

/// Vertex at position `i` (1-based) gets `[i, r(i)]`, where `r(i)` is the
/// position of its rightmost neighbour, or `i` itself when it has none to the
/// right.
pub fn interval_model_from_ordering(g: &Graph, ord: &VertexOrdering) -> Result<IntervalModel> {
    require(g, ord, Condition::Interval)?;
    let intervals = (0..g.n())
        .map(|v| {
            let i = ord.pos(v);
            let r = g.neighbours(v).map(|u| ord.pos(u)).max().unwrap_or(i).max(i);
            Interval::from_ints(i as i64 + 1, r as i64 + 1)
        })
        .collect();
    IntervalModel::new(intervals)
}

/// Orders vertices by left endpoint after canonicalising ties.
pub fn ordering_from_intervals(model: &IntervalModel) -> VertexOrdering {
    let canon = model.canonicalize();
    let mut order: Vec<usize> = (0..model.len()).collect();
    order.sort_by_key(|&v| canon.intervals[v].left);
    VertexOrdering::new(order).expect("sorting a range yields a permutation")
}

pub fn intersection_graph_of_intervals(model: &IntervalModel) -> Graph {
    model.intersection_graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::check_ordering;
    use crate::graph::tests::{complete, path};
    use crate::rational::Rational;

    fn ends(m: &IntervalModel) -> Vec<(i64, i64)> {
        m.intervals()
            .iter()
            .map(|iv| (iv.left.to_integer(), iv.right.to_integer()))
            .collect()
    }

    #[test]
    fn model_from_ordering() {
        let p3 = path(3);
        let m = interval_model_from_ordering(&p3, &VertexOrdering::identity(3)).unwrap();
        assert_eq!(ends(&m), vec![(1, 2), (2, 3), (3, 3)]);
        assert_eq!(m.intersection_graph(), p3);

        let k3 = complete(3);
        let m = interval_model_from_ordering(&k3, &VertexOrdering::new(vec![2, 0, 1]).unwrap()).unwrap();
        // vertex 2 is first, then 0, then 1
        assert_eq!(ends(&m), vec![(2, 3), (3, 3), (1, 3)]);
        assert_eq!(m.intersection_graph(), k3);

        let e = Graph::empty(3);
        let m = interval_model_from_ordering(&e, &VertexOrdering::identity(3)).unwrap();
        assert_eq!(ends(&m), vec![(1, 1), (2, 2), (3, 3)]);
        assert_eq!(m.intersection_graph(), e);
    }

    #[test]
    fn model_from_bad_ordering_reports_witness() {
        let p3 = path(3);
        let err = interval_model_from_ordering(&p3, &VertexOrdering::new(vec![0, 2, 1]).unwrap()).unwrap_err();
        assert!(matches!(
            err,
            Error::ConditionViolated {
                condition: Condition::Interval,
                ..
            }
        ));
    }

    #[test]
    fn ordering_from_model() {
        let m = IntervalModel::new(vec![
            Interval::from_ints(0, 2),
            Interval::from_ints(1, 3),
            Interval::new(Rational::new(5, 2), rational::int(4)),
        ])
        .unwrap();
        let g = m.intersection_graph();
        assert_eq!(g, path(3));
        let o = ordering_from_intervals(&m);
        assert_eq!(o.as_slice(), &[0, 1, 2]);
        assert!(check_ordering(&g, &o, Condition::Interval).unwrap().holds);

        let nested = IntervalModel::from_ints(&[(1, 2), (0, 10)]).unwrap();
        assert_eq!(ordering_from_intervals(&nested).as_slice(), &[1, 0]);
    }

    #[test]
    fn equal_left_endpoints() {
        for pairs in [[(0, 1), (0, 2)], [(0, 2), (0, 1)]] {
            let m = IntervalModel::from_ints(&pairs).unwrap();
            let o = ordering_from_intervals(&m);
            assert_eq!(o.as_slice(), &[0, 1]);
            assert!(
                check_ordering(&m.intersection_graph(), &o, Condition::Interval)
                    .unwrap()
                    .holds
            );
        }
    }

    #[test]
    fn canonicalize_preserves_touching() {
        let m = IntervalModel::from_ints(&[(0, 1), (1, 2), (2, 2), (3, 4)]).unwrap();
        let c = m.canonicalize();
        assert_eq!(c.intersection_graph(), m.intersection_graph());
        let mut all: Vec<i64> = ends(&c).into_iter().flat_map(|(l, r)| [l, r]).collect();
        all.sort();
        assert_eq!(all, (1..=8).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_reversed_interval() {
        assert!(IntervalModel::from_ints(&[(2, 1)]).is_err());
        assert!(serde_json::from_str::<IntervalModel>(r#"[{"left":"2/1","right":"1/1"}]"#).is_err());
    }

    #[test]
    fn json_uses_rational_strings() {
        let m = IntervalModel::new(vec![Interval::new(Rational::new(1, 2), rational::int(3))]).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"[{"left":"1/2","right":"3/1"}]"#);
        assert_eq!(serde_json::from_str::<IntervalModel>(&s).unwrap(), m);
    }
}
