use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::limits::MASK_MAX_N;

/// A tree consisting of a spine path plus leaves hanging off spine vertices.
///
/// `leaves[t]` are the leaves attached to `spine[t]`. Spine endpoints may
/// carry no leaves, in which case they are themselves leaves of the tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Caterpillar {
    tree: Graph,
    spine: Vec<usize>,
    leaves: Vec<Vec<usize>>,
    /// spine index of each vertex (of its attachment point for leaves)
    index: Vec<usize>,
    on_spine: Vec<bool>,
}

fn ensure_tree(tree: &Graph) -> Result<()> {
    let n = tree.n();
    if n == 0 {
        return Err(Error::NotCaterpillar("empty graph".into()));
    }
    if tree.edge_count() != n - 1 || !tree.is_connected() {
        return Err(Error::NotCaterpillar("host graph is not a tree".into()));
    }
    Ok(())
}

impl Caterpillar {
    pub fn new(tree: Graph, spine: Vec<usize>, leaves: Vec<Vec<usize>>) -> Result<Self> {
        ensure_tree(&tree)?;
        let n = tree.n();
        let bad = |msg: String| Err(Error::NotCaterpillar(msg));
        if spine.is_empty() {
            return bad("empty spine".into());
        }
        if leaves.len() != spine.len() {
            return bad("one leaf list per spine vertex is required".into());
        }
        let mut index = vec![usize::MAX; n];
        let mut on_spine = vec![false; n];
        for (t, &s) in spine.iter().enumerate() {
            if s >= n || index[s] != usize::MAX {
                return bad(format!("spine vertex {s} is out of range or repeated"));
            }
            if t > 0 && !tree.has_edge(spine[t - 1], s) {
                return bad(format!("spine vertices {} and {s} are not adjacent", spine[t - 1]));
            }
            index[s] = t;
            on_spine[s] = true;
        }
        for (t, list) in leaves.iter().enumerate() {
            for &l in list {
                if l >= n || index[l] != usize::MAX {
                    return bad(format!("leaf {l} is out of range or repeated"));
                }
                if tree.degree(l) != 1 || !tree.has_edge(l, spine[t]) {
                    return bad(format!("{l} is not a leaf attached to {}", spine[t]));
                }
                index[l] = t;
            }
        }
        if let Some(v) = index.iter().position(|&i| i == usize::MAX) {
            return bad(format!("vertex {v} is neither on the spine nor a leaf"));
        }
        Ok(Caterpillar {
            tree,
            spine,
            leaves,
            index,
            on_spine,
        })
    }

    /// Splits a tree into the path left after deleting its leaves, and the
    /// leaves themselves.
    pub fn from_tree(tree: Graph) -> Result<Self> {
        ensure_tree(&tree)?;
        let n = tree.n();
        if n <= 2 {
            let leaves = if n == 2 { vec![vec![1]] } else { vec![vec![]] };
            return Caterpillar::new(tree, vec![0], leaves);
        }
        let inner: Vec<usize> = (0..n).filter(|&v| tree.degree(v) >= 2).collect();
        let inner_deg = |v: usize| tree.neighbours(v).filter(|&u| tree.degree(u) >= 2).count();
        if inner.iter().any(|&v| inner_deg(v) > 2) {
            return Err(Error::NotCaterpillar(
                "removing the leaves does not leave a path".into(),
            ));
        }
        let start = *inner
            .iter()
            .find(|&&v| inner_deg(v) <= 1)
            .expect("a finite path has an end");
        let mut spine = vec![start];
        while let Some(next) = tree
            .neighbours(*spine.last().unwrap())
            .find(|&u| tree.degree(u) >= 2 && !spine.contains(&u))
        {
            spine.push(next);
        }
        let leaves = spine
            .iter()
            .map(|&s| tree.neighbours(s).filter(|&u| tree.degree(u) == 1).collect())
            .collect();
        Caterpillar::new(tree, spine, leaves)
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn spine(&self) -> &[usize] {
        &self.spine
    }

    pub fn leaves(&self) -> &[Vec<usize>] {
        &self.leaves
    }

    /// Leaf of the tree, i.e. of degree at most one.
    pub fn is_tree_leaf(&self, v: usize) -> bool {
        self.tree.degree(v) <= 1
    }

    pub fn tree_distance(&self, u: usize, v: usize) -> usize {
        if u == v {
            return 0;
        }
        let depth = |x: usize| usize::from(!self.on_spine[x]);
        self.index[u].abs_diff(self.index[v]) + depth(u) + depth(v)
    }
}

/// Spine order with the leaves of each spine vertex, in index order,
/// immediately after it.
pub fn caterpillar_ordering(c: &Caterpillar) -> VertexOrdering {
    let mut order = Vec::with_capacity(c.tree.n());
    for (&s, leaves) in c.spine.iter().zip(&c.leaves) {
        order.push(s);
        let mut l = leaves.clone();
        l.sort_unstable();
        order.extend(l);
    }
    VertexOrdering::new(order).expect("spine and leaves partition the vertices")
}

/// Checks that `c` spans `g` and that every edge of `g` joins vertices at
/// tree distance at most four, with distance four only between two leaves.
pub fn check_caterpillar_distances(g: &Graph, c: &Caterpillar) -> Result<()> {
    if c.tree.n() != g.n() {
        return Err(Error::NotCaterpillar(format!(
            "caterpillar has {} vertices but the graph has {}",
            c.tree.n(),
            g.n()
        )));
    }
    if let Some((u, v)) = c.tree.edges().find(|&(u, v)| !g.has_edge(u, v)) {
        return Err(Error::NotCaterpillar(format!(
            "tree edge ({u}, {v}) is not an edge of the graph"
        )));
    }
    for (u, v) in g.edges() {
        let distance = c.tree_distance(u, v);
        if distance > 4 || (distance == 4 && !(c.is_tree_leaf(u) && c.is_tree_leaf(v))) {
            return Err(Error::CaterpillarDistance { u, v, distance });
        }
    }
    Ok(())
}

/// Exhaustive search for a spanning caterpillar with the distance property.
/// Spines are simple paths of `g` tried in lexicographic order; non-spine
/// vertices are then attached to spine neighbours by backtracking.
pub fn find_spanning_caterpillar(g: &Graph, max_n: usize) -> Result<Option<Caterpillar>> {
    let n = g.n();
    let limit = max_n.min(MASK_MAX_N);
    if n > limit {
        return Err(Error::TooLarge {
            what: "spanning caterpillar search",
            n,
            max: limit,
        });
    }
    if n == 0 || !g.is_connected() {
        return Ok(None);
    }
    let mut search = CaterpillarSearch {
        g,
        n,
        spine: Vec::new(),
        on_spine: 0,
        found: None,
    };
    for s in 0..n {
        search.spine.push(s);
        search.on_spine = 1 << s;
        search.grow();
        if search.found.is_some() {
            break;
        }
        search.spine.clear();
    }
    Ok(search.found)
}

struct CaterpillarSearch<'a> {
    g: &'a Graph,
    n: usize,
    spine: Vec<usize>,
    on_spine: u64,
    found: Option<Caterpillar>,
}

impl CaterpillarSearch<'_> {
    fn grow(&mut self) {
        if self.spine.len() == 1 || self.spine[0] < *self.spine.last().unwrap() {
            self.try_spine();
            if self.found.is_some() {
                return;
            }
        }
        let tail = *self.spine.last().unwrap();
        let len = self.spine.len();
        for next in self.g.neighbours(tail).collect::<Vec<_>>() {
            if self.on_spine >> next & 1 == 1 {
                continue;
            }
            // spine edges of g may span at most four steps
            if self.spine[..len.saturating_sub(4)]
                .iter()
                .any(|&s| self.g.has_edge(s, next))
            {
                continue;
            }
            self.spine.push(next);
            self.on_spine |= 1 << next;
            self.grow();
            self.on_spine &= !(1 << next);
            self.spine.pop();
            if self.found.is_some() {
                return;
            }
        }
    }

    fn try_spine(&mut self) {
        let g = self.g;
        let index: Vec<usize> = {
            let mut idx = vec![usize::MAX; self.n];
            for (t, &s) in self.spine.iter().enumerate() {
                idx[s] = t;
            }
            idx
        };
        let rest: Vec<usize> = (0..self.n).filter(|&v| self.on_spine >> v & 1 == 0).collect();
        let options: Vec<Vec<usize>> = rest
            .iter()
            .map(|&v| {
                self.spine
                    .iter()
                    .map(|&s| index[s])
                    .filter(|&t| g.has_edge(v, self.spine[t]))
                    .collect()
            })
            .collect();
        if options.iter().any(Vec::is_empty) {
            return;
        }
        let mut attach = vec![usize::MAX; rest.len()];
        self.assign(&rest, &options, &mut attach, 0);
    }

    fn assign(&mut self, rest: &[usize], options: &[Vec<usize>], attach: &mut [usize], at: usize) {
        if at == rest.len() {
            let mut tree = Graph::empty(self.n);
            for w in self.spine.windows(2) {
                tree.insert(w[0], w[1]);
            }
            let mut leaves = vec![Vec::new(); self.spine.len()];
            for (&v, &t) in rest.iter().zip(attach.iter()) {
                tree.insert(v, self.spine[t]);
                leaves[t].push(v);
            }
            let c = Caterpillar::new(tree, self.spine.clone(), leaves).expect("construction yields a caterpillar");
            if check_caterpillar_distances(self.g, &c).is_ok() {
                self.found = Some(c);
            }
            return;
        }
        let v = rest[at];
        for &t in &options[at] {
            // leaf-to-leaf distance is |t - t'| + 2, which must stay within four
            let clash = rest[..at]
                .iter()
                .zip(attach.iter())
                .any(|(&u, &tu)| self.g.has_edge(u, v) && tu.abs_diff(t) > 2);
            if clash {
                continue;
            }
            attach[at] = t;
            self.assign(rest, options, attach, at + 1);
            if self.found.is_some() {
                return;
            }
        }
        attach[at] = usize::MAX;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bandwidth::bounds::{atfree_bandwidth_ordering, ordering_width};
    use crate::graph::tests::{cycle, path};

    #[test]
    fn ordering_examples() {
        let star = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = Caterpillar::from_tree(star.clone()).unwrap();
        assert_eq!(c.spine(), &[0]);
        let o = caterpillar_ordering(&c);
        assert_eq!(o.as_slice(), &[0, 1, 2, 3]);
        assert_eq!(ordering_width(&star, &o), 3);

        let p = path(5);
        let c = Caterpillar::new(p.clone(), vec![0, 1, 2, 3, 4], vec![vec![]; 5]).unwrap();
        let o = caterpillar_ordering(&c);
        assert_eq!(o, VertexOrdering::identity(5));
        assert_eq!(ordering_width(&p, &o), 1);

        // spine a-b (0-1), leaf x=2 on a, leaves y=3, z=4 on b
        let t = Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 3), (1, 4)]).unwrap();
        let c = Caterpillar::new(t.clone(), vec![0, 1], vec![vec![2], vec![3, 4]]).unwrap();
        let o = caterpillar_ordering(&c);
        assert_eq!(o.as_slice(), &[0, 2, 1, 3, 4]);
        assert!(ordering_width(&t, &o) <= t.max_degree());
    }

    #[test]
    fn from_tree_rejects_non_caterpillars() {
        // spider with three legs of length two
        let spider = Graph::from_edge_list(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap();
        assert!(matches!(Caterpillar::from_tree(spider), Err(Error::NotCaterpillar(_))));
        assert!(Caterpillar::from_tree(cycle(4)).is_err());
        let c = Caterpillar::from_tree(path(2)).unwrap();
        assert_eq!(caterpillar_ordering(&c).as_slice(), &[0, 1]);
        assert_eq!(Caterpillar::from_tree(path(1)).unwrap().spine(), &[0]);
    }

    #[test]
    fn new_validates() {
        let t = path(3);
        assert!(Caterpillar::new(t.clone(), vec![0, 2], vec![vec![], vec![]]).is_err());
        assert!(Caterpillar::new(t.clone(), vec![1], vec![vec![0]]).is_err());
        assert!(Caterpillar::new(t.clone(), vec![1], vec![vec![0, 2]]).is_ok());
        assert!(Caterpillar::new(t, vec![0, 1], vec![vec![], vec![2]]).is_ok());
    }

    #[test]
    fn atfree_ordering_examples() {
        let c4 = cycle(4);
        let t = Caterpillar::new(path(4), vec![0, 1, 2, 3], vec![vec![]; 4]).unwrap();
        let r = atfree_bandwidth_ordering(&c4, &t).unwrap();
        assert_eq!(r.ordering, VertexOrdering::identity(4));
        assert_eq!((r.width, r.guarantee), (3, 6));

        let c6 = cycle(6);
        let t = Caterpillar::new(path(6), (0..6).collect(), vec![vec![]; 6]).unwrap();
        assert_eq!(
            atfree_bandwidth_ordering(&c6, &t),
            Err(Error::CaterpillarDistance {
                u: 0,
                v: 5,
                distance: 5
            })
        );

        let cat = Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 3), (1, 4)]).unwrap();
        let t = Caterpillar::from_tree(cat.clone()).unwrap();
        let r = atfree_bandwidth_ordering(&cat, &t).unwrap();
        assert!(r.width <= cat.max_degree());
    }

    #[test]
    fn spanning_caterpillar_search() {
        let p = path(6);
        let c = find_spanning_caterpillar(&p, 10).unwrap().unwrap();
        assert_eq!(c.tree(), &p);

        let c = find_spanning_caterpillar(&cycle(4), 10).unwrap().unwrap();
        assert_eq!(c.tree().edge_count(), 3);
        assert!(check_caterpillar_distances(&cycle(4), &c).is_ok());

        // C6 has an asteroidal triple and no caterpillar with the property
        assert_eq!(find_spanning_caterpillar(&cycle(6), 10).unwrap(), None);
        assert_eq!(find_spanning_caterpillar(&Graph::empty(2), 10).unwrap(), None);
        assert!(find_spanning_caterpillar(&path(11), 10).is_err());
    }
}
