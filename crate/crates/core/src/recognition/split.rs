use crate::graph::Graph;

/// A partition of the vertex set into a clique and an independent set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

/// Degree-sequence split test. With degrees sorted non-increasingly as
/// `d_1 >= ... >= d_n` and `m = max { i : d_i >= i - 1 }`, the graph is split
/// iff `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`, and then the first `m`
/// vertices form a clique. The returned partition is checked directly.
pub fn recognize_split_fast(g: &Graph) -> Option<SplitPartition> {
    let n = g.n();
    if g.edge_count() == 0 {
        return Some(SplitPartition {
            clique: Vec::new(),
            independent: (0..n).collect(),
        });
    }
    let mut by_degree: Vec<(usize, usize)> = (0..n).map(|v| (g.degree(v), v)).collect();
    by_degree.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let m = by_degree
        .iter()
        .enumerate()
        .filter(|(i, (d, _))| *d >= *i)
        .map(|(i, _)| i + 1)
        .max()
        .unwrap_or(0);
    let head: usize = by_degree[..m].iter().map(|p| p.0).sum();
    let tail: usize = by_degree[m..].iter().map(|p| p.0).sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }

    let mut clique: Vec<usize> = by_degree[..m].iter().map(|p| p.1).collect();
    let mut independent: Vec<usize> = by_degree[m..].iter().map(|p| p.1).collect();
    clique.sort_unstable();
    independent.sort_unstable();
    let ok = g.is_clique(&clique) && g.is_independent(&independent);
    debug_assert!(ok, "degree test accepted a graph without a valid split partition");
    ok.then_some(SplitPartition { clique, independent })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::Condition;
    use crate::graph::tests::cycle;
    use crate::recognition::search::find_ordering;

    #[test]
    fn examples() {
        let paw = Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let p = recognize_split_fast(&paw).unwrap();
        assert_eq!(p.clique, vec![0, 1, 2]);
        assert_eq!(p.independent, vec![3]);

        assert_eq!(recognize_split_fast(&cycle(4)), None);

        let e = recognize_split_fast(&Graph::empty(4)).unwrap();
        assert!(e.clique.is_empty());
        assert_eq!(e.independent, vec![0, 1, 2, 3]);
        assert_eq!(
            recognize_split_fast(&Graph::empty(0)).unwrap().clique,
            Vec::<usize>::new()
        );
    }

    #[test]
    fn agrees_with_simple_split_search() {
        for n in 0..=6usize {
            for code in 0..1u64 << (n * n.saturating_sub(1) / 2) {
                let g = Graph::from_code(n, code);
                let exhaustive = find_ordering(&g, &[Condition::SimpleSplit], 16).unwrap().is_some();
                assert_eq!(recognize_split_fast(&g).is_some(), exhaustive, "{g:?}");
            }
        }
    }
}
