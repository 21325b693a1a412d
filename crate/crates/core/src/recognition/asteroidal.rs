use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Three pairwise non-adjacent vertices, each pair joined by a path that
/// avoids the closed neighbourhood of the third.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsteroidalTriple(pub [usize; 3]);

/// Component labels of `g - N[v]` for every `v`; `usize::MAX` marks `N[v]`.
fn avoidance_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    (0..n)
        .map(|v| {
            let mut label = vec![usize::MAX; n];
            let blocked = |u: usize| u == v || g.has_edge(v, u);
            let mut next = 0;
            for s in 0..n {
                if blocked(s) || label[s] != usize::MAX {
                    continue;
                }
                label[s] = next;
                let mut stack = vec![s];
                while let Some(u) = stack.pop() {
                    for w in g.neighbours(u) {
                        if !blocked(w) && label[w] == usize::MAX {
                            label[w] = next;
                            stack.push(w);
                        }
                    }
                }
                next += 1;
            }
            label
        })
        .collect()
}

/// The lexicographically first asteroidal triple, if any.
pub fn find_asteroidal_triple(g: &Graph) -> Option<AsteroidalTriple> {
    let n = g.n();
    let comp = avoidance_components(g);
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) || g.has_edge(b, c) {
                    continue;
                }
                if comp[c][a] == comp[c][b] && comp[b][a] == comp[b][c] && comp[a][b] == comp[a][c] {
                    return Some(AsteroidalTriple([a, b, c]));
                }
            }
        }
    }
    None
}

/// Checks the defining property of `t` directly.
pub fn is_asteroidal_triple(g: &Graph, t: &AsteroidalTriple) -> bool {
    let [a, b, c] = t.0;
    let n = g.n();
    if a >= n || b >= n || c >= n || a == b || b == c || a == c {
        return false;
    }
    if !g.is_independent(&[a, b, c]) {
        return false;
    }
    let connected_avoiding = |s: usize, t: usize, v: usize| {
        let blocked = |u: usize| u == v || g.has_edge(v, u);
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            if u == t {
                return true;
            }
            for w in g.neighbours(u) {
                if !blocked(w) && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    };
    connected_avoiding(a, b, c) && connected_avoiding(b, c, a) && connected_avoiding(a, c, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::cycle;

    #[test]
    fn examples() {
        assert_eq!(find_asteroidal_triple(&cycle(5)), None);

        let c6 = cycle(6);
        let t = find_asteroidal_triple(&c6).unwrap();
        assert_eq!(t, AsteroidalTriple([0, 2, 4]));
        assert!(is_asteroidal_triple(&c6, &t));

        // K_{1,3} with each edge subdivided: centre 0, middles 1..=3, ends 4..=6
        let spider = Graph::from_edge_list(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        let t = find_asteroidal_triple(&spider).unwrap();
        assert!(is_asteroidal_triple(&spider, &t));
        assert!(is_asteroidal_triple(&spider, &AsteroidalTriple([4, 5, 6])));
        // the plain claw is AT-free
        let claw = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(find_asteroidal_triple(&claw), None);
    }

    #[test]
    fn isolated_vertices_form_triples() {
        let g = Graph::empty(3);
        assert_eq!(find_asteroidal_triple(&g), None);
        let g = Graph::from_edge_list(4, &[(0, 1)]).unwrap();
        // 2 and 3 are isolated: no path joins them, so no triple exists
        assert_eq!(find_asteroidal_triple(&g), None);
    }

    #[test]
    fn scan_agrees_with_direct_check() {
        for n in 0..=6usize {
            for code in 0..1u64 << (n * n.saturating_sub(1) / 2) {
                let g = Graph::from_code(n, code);
                let mut expected = None;
                'outer: for a in 0..n {
                    for b in a + 1..n {
                        for c in b + 1..n {
                            let t = AsteroidalTriple([a, b, c]);
                            if is_asteroidal_triple(&g, &t) {
                                expected = Some(t);
                                break 'outer;
                            }
                        }
                    }
                }
                assert_eq!(find_asteroidal_triple(&g), expected);
            }
        }
    }
}
