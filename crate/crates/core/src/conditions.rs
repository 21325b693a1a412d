//! The seven triple conditions on vertex orderings.
//!
//! Each condition is an implication quantified over all position triples
//! `i < j < k`, whose truth depends only on the three adjacency bits
//! `v_i v_j`, `v_i v_k` and `v_j v_k`:
//!
//! | condition          | implication                                   |
//! |--------------------|-----------------------------------------------|
//! | `Interval`         | `ik => ij`                                    |
//! | `ProperInterval`   | `ik => ij && jk`                              |
//! | `Comparability`    | `ij && jk => ik`                              |
//! | `CoComparability`  | `ik => ij \|\| jk`                            |
//! | `Peo`              | `ij && ik => jk`                              |
//! | `SplitEq`          | `ij => jk \|\| ik`                            |
//! | `SimpleSplit`      | `ij => jk`                                    |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    Interval,
    ProperInterval,
    Comparability,
    CoComparability,
    Peo,
    SplitEq,
    SimpleSplit,
}

impl Condition {
    pub const ALL: [Condition; 7] = [
        Condition::Interval,
        Condition::ProperInterval,
        Condition::Comparability,
        Condition::CoComparability,
        Condition::Peo,
        Condition::SplitEq,
        Condition::SimpleSplit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Condition::Interval => "interval",
            Condition::ProperInterval => "proper-interval",
            Condition::Comparability => "comparability",
            Condition::CoComparability => "co-comparability",
            Condition::Peo => "peo",
            Condition::SplitEq => "split-eq",
            Condition::SimpleSplit => "simple-split",
        }
    }

    /// Whether the implication holds for a triple with the given adjacency bits.
    #[inline]
    pub fn admits(self, ij: bool, ik: bool, jk: bool) -> bool {
        match self {
            Condition::Interval => !ik || ij,
            Condition::ProperInterval => !ik || (ij && jk),
            Condition::Comparability => !(ij && jk) || ik,
            Condition::CoComparability => !ik || ij || jk,
            Condition::Peo => !(ij && ik) || jk,
            Condition::SplitEq => !ij || jk || ik,
            Condition::SimpleSplit => !ij || jk,
        }
    }

    /// Bit `2*ik + jk` is set when `(ik, jk)` violates the condition given `ij`.
    #[inline]
    fn failing(self, ij: bool) -> u8 {
        let mut m = 0;
        for ik in [false, true] {
            for jk in [false, true] {
                if !self.admits(ij, ik, jk) {
                    m |= 1 << (2 * ik as u8 + jk as u8);
                }
            }
        }
        m
    }

    /// Bit `2*ij + ik` is set when `(ij, ik)` violates the condition given `jk`.
    #[inline]
    fn failing_given_jk(self, jk: bool) -> u8 {
        let mut m = 0;
        for ij in [false, true] {
            for ik in [false, true] {
                if !self.admits(ij, ik, jk) {
                    m |= 1 << (2 * ij as u8 + ik as u8);
                }
            }
        }
        m
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Condition::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .or(match key.as_str() {
                "cocomparability" => Some(Condition::CoComparability),
                "perfect-elimination" => Some(Condition::Peo),
                _ => None,
            })
            .ok_or_else(|| Error::Parse(format!("unknown condition `{s}`")))
    }
}

/// Three positions `i < j < k` of an ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl Triple {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        Triple { i, j, k }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub condition: Condition,
    pub holds: bool,
    /// Lexicographically smallest violating triple of positions.
    pub witness: Option<Triple>,
}

/// Evaluates `c` on `ord`. A violation carries the lexicographically
/// smallest violating triple of positions.
pub fn check_ordering(g: &Graph, ord: &VertexOrdering, c: Condition) -> Result<Verdict> {
    if ord.len() != g.n() {
        return Err(Error::InvalidOrdering(format!(
            "ordering has {} entries but the graph has {} vertices",
            ord.len(),
            g.n()
        )));
    }
    let witness = first_violation(g, ord.as_slice(), c);
    Ok(Verdict {
        condition: c,
        holds: witness.is_none(),
        witness,
    })
}

/// Evaluates every condition in `conds`, in order.
pub fn check_all(g: &Graph, ord: &VertexOrdering, conds: &[Condition]) -> Result<Vec<Verdict>> {
    conds.iter().map(|&c| check_ordering(g, ord, c)).collect()
}

/// Like [`check_ordering`] but returns an error carrying the witness on failure.
pub fn require(g: &Graph, ord: &VertexOrdering, c: Condition) -> Result<()> {
    match check_ordering(g, ord, c)?.witness {
        None => Ok(()),
        Some(witness) => Err(Error::ConditionViolated { condition: c, witness }),
    }
}

/// True iff no violating triple lies wholly inside the duplicate-free `prefix`.
pub fn prefix_admissible(g: &Graph, prefix: &[usize], c: Condition) -> bool {
    first_violation(g, prefix, c).is_none()
}

/// Smallest violating triple over the sequence `seq` of distinct vertices.
///
/// For each `(i, j)` the set of violating `k > j` is a union of at most four
/// bitset terms `(A_i or !A_i) & (A_j or !A_j)`, where `A_p` is the set of
/// positions adjacent to position `p`.
pub(crate) fn first_violation(g: &Graph, seq: &[usize], c: Condition) -> Option<Triple> {
    let len = seq.len();
    if len < 3 {
        return None;
    }
    let w = bits::words_for(len);
    let mut rows = vec![0u64; len * w];
    for (p, &u) in seq.iter().enumerate() {
        for (q, &v) in seq.iter().enumerate() {
            if g.has_edge(u, v) {
                bits::set(&mut rows[p * w..(p + 1) * w], q);
            }
        }
    }
    let fail = [c.failing(false), c.failing(true)];

    for i in 0..len - 2 {
        let ri = &rows[i * w..(i + 1) * w];
        for j in i + 1..len - 1 {
            let ij = bits::get(ri, j);
            let m = fail[ij as usize];
            if m == 0 {
                continue;
            }
            let rj = &rows[j * w..(j + 1) * w];
            for wi in (j + 1) / 64..w {
                let a = ri[wi];
                let b = rj[wi];
                let mut word = 0u64;
                if m & 0b0001 != 0 {
                    word |= !a & !b;
                }
                if m & 0b0010 != 0 {
                    word |= !a & b;
                }
                if m & 0b0100 != 0 {
                    word |= a & !b;
                }
                if m & 0b1000 != 0 {
                    word |= a & b;
                }
                word &= bits::above_mask(j, wi) & bits::valid_mask(len, wi);
                if word != 0 {
                    return Some(Triple::new(i, j, wi * 64 + word.trailing_zeros() as usize));
                }
            }
        }
    }
    None
}

/// Incremental admissibility for search: with `prefix` admissible and `before`
/// holding, for each prefix position `p`, the mask of vertices at positions
/// `< p`, decide whether appending `w` creates a violating triple ending at it.
/// Requires `n <= 64`.
#[cfg(test)]
fn extension_admissible(g: &Graph, prefix: &[usize], before: &[u64], w: usize, conds: &[Condition]) -> bool {
    prefix
        .iter()
        .enumerate()
        .skip(1)
        .all(|(p, &j)| pair_admissible(g, before[p], j, w, conds))
}

/// No triple `(i, j, k)` with `i` drawn from the mask `earlier` violates
/// `conds`.
#[inline]
pub(crate) fn pair_admissible(g: &Graph, earlier: u64, j: usize, k: usize, conds: &[Condition]) -> bool {
    let (nj, nk) = (g.mask(j), g.mask(k));
    let jk = (nk >> j) & 1 == 1;
    let mut bad = 0u64;
    for &c in conds {
        let m = c.failing_given_jk(jk);
        if m & 0b0001 != 0 {
            bad |= !nj & !nk;
        }
        if m & 0b0010 != 0 {
            bad |= !nj & nk;
        }
        if m & 0b0100 != 0 {
            bad |= nj & !nk;
        }
        if m & 0b1000 != 0 {
            bad |= nj & nk;
        }
    }
    bad & earlier == 0
}

/// Direct O(n^3) evaluation, written out from the displayed implications.
/// Serves as the reference the bitset evaluator is tested against.
pub mod reference {
    use super::{Condition, Triple};
    use crate::graph::{Graph, VertexOrdering};

    pub fn first_violation(g: &Graph, ord: &VertexOrdering, c: Condition) -> Option<Triple> {
        let n = ord.len();
        let e = |a: usize, b: usize| g.has_edge(ord.at(a), ord.at(b));
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let ok = match c {
                        Condition::Interval => !e(i, k) || e(i, j),
                        Condition::ProperInterval => !e(i, k) || (e(i, j) && e(j, k)),
                        Condition::Comparability => !(e(i, j) && e(j, k)) || e(i, k),
                        Condition::CoComparability => !e(i, k) || e(i, j) || e(j, k),
                        Condition::Peo => !(e(i, j) && e(i, k)) || e(j, k),
                        Condition::SplitEq => !e(i, j) || e(j, k) || e(i, k),
                        Condition::SimpleSplit => !e(i, j) || e(j, k),
                    };
                    if !ok {
                        return Some(Triple::new(i, j, k));
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{complete, cycle, path};

    fn ord(v: &[usize]) -> VertexOrdering {
        VertexOrdering::new(v.to_vec()).unwrap()
    }

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    #[test]
    fn examples() {
        let p3 = path(3);
        assert!(
            check_ordering(&p3, &ord(&[0, 1, 2]), Condition::Interval)
                .unwrap()
                .holds
        );

        for c in Condition::ALL {
            for n in 0..6 {
                let k = complete(n);
                assert!(check_ordering(&k, &VertexOrdering::identity(n), c).unwrap().holds);
                assert!(
                    check_ordering(&k, &VertexOrdering::identity(n).reversed(), c)
                        .unwrap()
                        .holds
                );
            }
        }

        let c4 = cycle(4);
        let v = check_ordering(&c4, &ord(&[0, 1, 2, 3]), Condition::Peo).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness, Some(Triple::new(0, 1, 3)));

        let o = ord(&[0, 2, 1, 3]);
        assert!(check_ordering(&c4, &o, Condition::Comparability).unwrap().holds);
        assert!(check_ordering(&c4, &o, Condition::CoComparability).unwrap().holds);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert!(check_ordering(&path(3), &ord(&[0, 1]), Condition::Peo).is_err());
    }

    #[test]
    fn empty_and_single_vertex_hold_vacuously() {
        for c in Condition::ALL {
            assert!(
                check_ordering(&Graph::empty(0), &VertexOrdering::identity(0), c)
                    .unwrap()
                    .holds
            );
            assert!(
                check_ordering(&Graph::empty(1), &VertexOrdering::identity(1), c)
                    .unwrap()
                    .holds
            );
        }
    }

    #[test]
    fn prefix_examples() {
        let c4 = cycle(4);
        assert!(!prefix_admissible(&c4, &[0, 1, 3], Condition::Peo));
        for c in Condition::ALL {
            assert!(prefix_admissible(&c4, &[3, 1], c));
            assert!(prefix_admissible(&c4, &[], c));
        }
        assert!(prefix_admissible(&path(3), &[0, 2], Condition::Interval));
    }

    #[test]
    fn admits_matches_reference_truth_tables() {
        for c in Condition::ALL {
            for code in 0..8u64 {
                // three vertices in identity order, bits (01, 02, 12)
                let g = Graph::from_code(3, code);
                let (ij, ik, jk) = (code & 1 == 1, code & 2 == 2, code & 4 == 4);
                let r = reference::first_violation(&g, &VertexOrdering::identity(3), c);
                assert_eq!(c.admits(ij, ik, jk), r.is_none(), "{c} on {code:03b}");
            }
        }
    }

    // The bitset evaluator agrees with the reference on every graph and every
    // ordering up to five vertices, including the witness.
    #[test]
    fn fast_matches_reference_exhaustively() {
        for n in 0..=5 {
            let perms = all_permutations(n);
            for code in 0..1u64 << (n * n.saturating_sub(1) / 2) {
                let g = Graph::from_code(n, code);
                for p in &perms {
                    let o = ord(p);
                    for c in Condition::ALL {
                        assert_eq!(
                            first_violation(&g, o.as_slice(), c),
                            reference::first_violation(&g, &o, c)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn fast_matches_reference_on_wider_graphs() {
        // crosses the 64-position word boundary
        let g = Graph::from_fn(70, |u, v| (u + 2 * v) % 7 < 3 || v - u == 1);
        let o = VertexOrdering::new((0..70).rev().collect()).unwrap();
        for c in Condition::ALL {
            assert_eq!(
                first_violation(&g, o.as_slice(), c),
                reference::first_violation(&g, &o, c)
            );
        }
        let p = path(70);
        for c in [
            Condition::Interval,
            Condition::ProperInterval,
            Condition::Peo,
            Condition::CoComparability,
        ] {
            assert_eq!(
                first_violation(&p, VertexOrdering::identity(70).as_slice(), c),
                None,
                "{c}"
            );
        }
    }

    #[test]
    fn incremental_extension_matches_full_prefix_check() {
        for n in 3..=5usize {
            let perms = all_permutations(n);
            for code in 0..1u64 << (n * (n - 1) / 2) {
                let g = Graph::from_code(n, code);
                for p in perms.iter().step_by(3) {
                    for c in Condition::ALL {
                        let mut before = vec![0u64; n];
                        for t in 1..n {
                            before[t] = before[t - 1] | 1 << p[t - 1];
                        }
                        for len in 2..n {
                            if !prefix_admissible(&g, &p[..len], c) {
                                break;
                            }
                            assert_eq!(
                                extension_admissible(&g, &p[..len], &before, p[len], &[c]),
                                prefix_admissible(&g, &p[..=len], c)
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn condition_names_round_trip() {
        for c in Condition::ALL {
            assert_eq!(c.name().parse::<Condition>().unwrap(), c);
        }
        assert_eq!(
            "CO_COMPARABILITY".parse::<Condition>().unwrap(),
            Condition::CoComparability
        );
        assert!("bogus".parse::<Condition>().is_err());
    }
}
