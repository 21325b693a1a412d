use ordercert::generators::canonical_classes;
use ordercert::representations::{permutation_graph, Permutation};
use ordercert::{check_ordering, recognize, ClassId, Condition, Graph, RecognizeOptions, VertexOrdering};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
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

fn bit(c: Condition) -> u8 {
    1 << Condition::ALL.iter().position(|&d| d == c).unwrap()
}

/// Masks of condition sets satisfied by at least one ordering, by full
/// enumeration.
fn satisfiable_masks(g: &Graph, orders: &[Vec<usize>]) -> Vec<u8> {
    let mut seen = [false; 128];
    for o in orders {
        let ord = VertexOrdering::new(o.clone()).unwrap();
        let mask = Condition::ALL
            .iter()
            .filter(|&&c| check_ordering(g, &ord, c).unwrap().holds)
            .fold(0u8, |m, &c| m | bit(c));
        seen[mask as usize] = true;
    }
    (0..128u8).filter(|&m| seen[m as usize]).collect()
}

fn member(g: &Graph, cls: ClassId) -> bool {
    recognize(g, cls, &RecognizeOptions::default()).unwrap().member
}

#[test]
fn verdicts_match_enumeration_of_all_orderings() {
    let ordering_classes: Vec<ClassId> = ClassId::ALL.into_iter().filter(|&c| c != ClassId::AtFree).collect();
    for n in 1..=7 {
        let orders = permutations(n);
        for g in canonical_classes(n).unwrap() {
            let masks = satisfiable_masks(&g, &orders);
            for &cls in &ordering_classes {
                let need = cls.conditions().iter().fold(0u8, |m, &c| m | bit(c));
                let exists = masks.iter().any(|&m| m & need == need);
                assert_eq!(member(&g, cls), exists, "{cls} on {g:?}");
            }
        }
    }
}

#[test]
fn class_hierarchy() {
    assert_eq!(canonical_classes(7).unwrap().len(), 1044);
    for n in 1..=7 {
        for g in canonical_classes(n).unwrap() {
            if member(&g, ClassId::ProperInterval) {
                assert!(member(&g, ClassId::Interval), "{g:?}");
            }
            if member(&g, ClassId::Interval) {
                assert!(member(&g, ClassId::Chordal), "{g:?}");
                assert!(member(&g, ClassId::AtFree), "{g:?}");
                assert!(member(&g, ClassId::CoComparability), "{g:?}");
            }
            if member(&g, ClassId::Permutation) {
                assert!(member(&g, ClassId::Comparability) && member(&g, ClassId::CoComparability));
            }
            if member(&g, ClassId::Split) {
                assert!(member(&g, ClassId::Chordal), "{g:?}");
            }
        }
    }
}

#[test]
fn identity_certifies_permutation_graphs_of_size_seven() {
    let id = VertexOrdering::new((0..7).collect()).unwrap();
    for seq in permutations(7) {
        let g = permutation_graph(&Permutation::new(seq.clone()).unwrap());
        for c in [Condition::Comparability, Condition::CoComparability] {
            assert!(check_ordering(&g, &id, c).unwrap().holds, "{seq:?} {c}");
        }
    }
}
