use crate::conditions::{pair_admissible, Condition};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::limits::MASK_MAX_N;

/// Finds the lexicographically first ordering satisfying every condition in
/// `conds`, or proves that none exists.
///
/// Vertices are tried in increasing index order. Every unplaced vertex ends up
/// after the whole prefix, so a prefix is abandoned as soon as some pair
/// inside it forms a violating triple with any vertex still to come; this also
/// covers triples inside the prefix. Twin vertices
/// (equal open or closed neighbourhoods) are placed in index order: swapping
/// twins is an automorphism, so the lexicographically first solution already
/// has them in that order.
pub fn find_ordering(g: &Graph, conds: &[Condition], max_n: usize) -> Result<Option<VertexOrdering>> {
    let n = g.n();
    let limit = max_n.min(MASK_MAX_N);
    if n > limit {
        return Err(Error::TooLarge {
            what: "exhaustive ordering search",
            n,
            max: limit,
        });
    }
    let mut conds = conds.to_vec();
    conds.sort();
    conds.dedup();

    let mut search = Search {
        g,
        conds: &conds,
        n,
        smaller_twins: smaller_twins(g),
        prefix: Vec::with_capacity(n),
        before: vec![0; n + 1],
        placed: 0,
    };
    Ok(search
        .run()
        .then(|| VertexOrdering::new(search.prefix).expect("search produces a permutation")))
}

/// For each vertex, the mask of twins with smaller index.
fn smaller_twins(g: &Graph) -> Vec<u64> {
    let n = g.n();
    (0..n)
        .map(|v| {
            (0..v)
                .filter(|&u| {
                    let (nu, nv) = (g.mask(u), g.mask(v));
                    let strip = !((1u64 << u) | (1u64 << v));
                    nu & strip == nv & strip
                })
                .fold(0u64, |m, u| m | 1 << u)
        })
        .collect()
}

struct Search<'a> {
    g: &'a Graph,
    conds: &'a [Condition],
    n: usize,
    smaller_twins: Vec<u64>,
    prefix: Vec<usize>,
    /// `before[p]`: vertices at positions `< p`.
    before: Vec<u64>,
    placed: u64,
}

impl Search<'_> {
    fn run(&mut self) -> bool {
        let p = self.prefix.len();
        if p == self.n {
            return true;
        }
        for w in 0..self.n {
            if self.placed >> w & 1 == 1 || self.smaller_twins[w] & !self.placed != 0 {
                continue;
            }
            self.placed |= 1 << w;
            if !self.dooms_rest(w, p) {
                self.prefix.push(w);
                self.before[p + 1] = self.before[p] | 1 << w;
                if self.run() {
                    return true;
                }
                self.prefix.pop();
            }
            self.placed &= !(1 << w);
        }
        false
    }

    /// Placing `w` at position `p` leaves some unplaced vertex `v` with a
    /// violating triple `(i, w, v)`.
    fn dooms_rest(&self, w: usize, p: usize) -> bool {
        let earlier = self.before[p];
        if earlier == 0 {
            return false;
        }
        let rest = !self.placed & if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        crate::bits::mask_ones(rest).any(|v| !pair_admissible(self.g, earlier, w, v, self.conds))
    }
}
