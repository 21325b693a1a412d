use std::collections::VecDeque;

use crate::conditions::{check_ordering, Condition};
use crate::graph::{Graph, VertexOrdering};

/// Maximum cardinality search: repeatedly visit the unvisited vertex with the
/// most visited neighbours (ties to the smallest index). Reversing the visit
/// order gives a perfect elimination ordering exactly when `g` is chordal.
pub fn maximum_cardinality_search(g: &Graph) -> VertexOrdering {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("an unvisited vertex remains");
        visited[v] = true;
        visit.push(v);
        for u in g.neighbours(v) {
            weight[u] += 1;
        }
    }
    visit.reverse();
    VertexOrdering::new(visit).expect("search visits every vertex once")
}

/// A perfect elimination ordering when `g` is chordal, validated by the
/// condition checker before it is returned.
pub fn recognize_chordal_fast(g: &Graph) -> Option<VertexOrdering> {
    let ord = maximum_cardinality_search(g);
    check_ordering(g, &ord, Condition::Peo)
        .expect("ordering covers the graph")
        .holds
        .then_some(ord)
}

/// An induced cycle on at least four vertices, if one exists.
///
/// Any such cycle passes through some `v` with non-adjacent neighbours `x`,
/// `y` on the cycle, and the rest of the cycle avoids `N[v]`. So it suffices
/// to look, for every `v` and non-adjacent pair in `N(v)`, for a shortest
/// `x`-`y` path in `g - (N[v] - {x, y})`.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let nbrs: Vec<usize> = g.neighbours(v).collect();
        for (a, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[a + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let blocked: Vec<bool> = (0..n)
                    .map(|u| u == v || (g.has_edge(v, u) && u != x && u != y))
                    .collect();
                if let Some(path) = shortest_path(g, x, y, &blocked) {
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

fn shortest_path(g: &Graph, s: usize, t: usize, blocked: &[bool]) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n()];
    prev[s] = s;
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        if u == t {
            let mut path = vec![t];
            let mut cur = t;
            while cur != s {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in g.neighbours(u) {
            if !blocked[w] && prev[w] == usize::MAX {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// True when `cycle` is an induced cycle of `g` with at least four vertices.
pub fn is_chordless_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let len = cycle.len();
    if len < 4 || cycle.iter().any(|&v| v >= g.n()) {
        return false;
    }
    let mut seen = vec![false; g.n()];
    for &v in cycle {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    (0..len).all(|a| {
        (a + 1..len).all(|b| {
            let consecutive = b == a + 1 || (a == 0 && b == len - 1);
            g.has_edge(cycle[a], cycle[b]) == consecutive
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle};
    use crate::recognition::search::find_ordering;

    #[test]
    fn examples() {
        assert!(recognize_chordal_fast(&complete(4)).is_some());
        assert!(recognize_chordal_fast(&cycle(4)).is_none());

        let diamond = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let peo = recognize_chordal_fast(&diamond).unwrap();
        assert!(check_ordering(&diamond, &peo, Condition::Peo).unwrap().holds);
    }

    #[test]
    fn chordless_cycles() {
        for n in 4..9 {
            let c = find_chordless_cycle(&cycle(n)).unwrap();
            assert_eq!(c.len(), n);
            assert!(is_chordless_cycle(&cycle(n), &c));
        }
        assert_eq!(find_chordless_cycle(&complete(5)), None);
        assert!(!is_chordless_cycle(&complete(4), &[0, 1, 2, 3]));
        assert!(!is_chordless_cycle(&cycle(4), &[0, 1, 2, 2]));
    }

    #[test]
    fn agrees_with_exhaustive_search() {
        for n in 0..=6usize {
            for code in 0..1u64 << (n * n.saturating_sub(1) / 2) {
                let g = Graph::from_code(n, code);
                let exhaustive = find_ordering(&g, &[Condition::Peo], 16).unwrap().is_some();
                assert_eq!(recognize_chordal_fast(&g).is_some(), exhaustive);
                match find_chordless_cycle(&g) {
                    Some(c) => {
                        assert!(!exhaustive);
                        assert!(is_chordless_cycle(&g, &c));
                    }
                    None => assert!(exhaustive),
                }
            }
        }
    }
}
