use crate::position::Position;

/// How the Bouton matrices of two equally sized tuples relate column-wise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnRelation {
    Identical,
    /// Same column multiset, different order; `moved` columns differ.
    Permutation { moved: u32 },
    /// The second equals the first with one zero column inserted at `at`
    /// (column 0 is the least significant bit). Padded, this is also a
    /// permutation.
    ZeroColumnInserted { at: u32 },
    Unrelated,
}

/// Compares rows pairwise after padding both matrices to a common width.
pub fn column_relation(a: &Position, b: &Position) -> ColumnRelation {
    if a.len() != b.len() {
        return ColumnRelation::Unrelated;
    }
    let ma = a.bouton_matrix();
    let mb = b.bouton_matrix();
    let width = ma.width().max(mb.width());
    let ca = ma.columns_padded(width);
    let cb = mb.columns_padded(width);
    if ca == cb {
        return ColumnRelation::Identical;
    }
    // Checked before permutation: after padding, an insertion below the top
    // column is also a permutation.
    let (wa, wb) = (ma.width(), mb.width());
    if wb == wa + 1 {
        let short = ma.columns_padded(wa);
        for at in 0..wb {
            if cb[at as usize] != 0 {
                continue;
            }
            let mut ins = short.clone();
            ins.insert(at as usize, 0);
            if ins == cb {
                return ColumnRelation::ZeroColumnInserted { at };
            }
        }
    }
    let (mut sa, mut sb) = (ca.clone(), cb.clone());
    sa.sort_unstable();
    sb.sort_unstable();
    if sa == sb {
        let moved = ca.iter().zip(&cb).filter(|(x, y)| x != y).count() as u32;
        return ColumnRelation::Permutation { moved };
    }
    ColumnRelation::Unrelated
}

/// Number of differing columns if the padded matrices hold the same column
/// multiset in a different order. Zero-column insertions count.
pub fn padded_permutation(a: &Position, b: &Position) -> Option<u32> {
    if a.len() != b.len() {
        return None;
    }
    let (ma, mb) = (a.bouton_matrix(), b.bouton_matrix());
    let width = ma.width().max(mb.width());
    let ca = ma.columns_padded(width);
    let cb = mb.columns_padded(width);
    let moved = ca.iter().zip(&cb).filter(|(x, y)| x != y).count() as u32;
    if moved == 0 {
        return None;
    }
    let (mut sa, mut sb) = (ca, cb);
    sa.sort_unstable();
    sb.sort_unstable();
    (sa == sb).then_some(moved)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: [u32; 4]) -> Position {
        Position::from(a)
    }

    #[test]
    fn two_column_swap() {
        assert_eq!(
            column_relation(&p([10, 19, 24, 26]), &p([9, 19, 24, 25])),
            ColumnRelation::Permutation { moved: 2 }
        );
    }

    #[test]
    fn three_cycle() {
        assert_eq!(
            column_relation(&p([14, 16, 25, 25]), &p([7, 8, 25, 25])),
            ColumnRelation::Permutation { moved: 3 }
        );
    }

    #[test]
    fn insertions() {
        assert_eq!(
            column_relation(&p([6, 9, 10, 11]), &p([12, 17, 20, 21])),
            ColumnRelation::ZeroColumnInserted { at: 1 }
        );
        assert_eq!(
            column_relation(&p([20, 33, 36, 37]), &p([40, 66, 72, 74])),
            ColumnRelation::ZeroColumnInserted { at: 0 }
        );
    }

    #[test]
    fn padded_permutation_counts_insertions() {
        assert_eq!(padded_permutation(&p([10, 19, 24, 26]), &p([9, 19, 24, 25])), Some(2));
        assert!(padded_permutation(&p([6, 9, 10, 11]), &p([12, 17, 20, 21])).is_some());
        assert_eq!(padded_permutation(&p([1, 2, 3, 4]), &p([1, 2, 3, 4])), None);
    }

    #[test]
    fn identity_and_unrelated() {
        assert_eq!(column_relation(&p([1, 2, 3, 4]), &p([1, 2, 3, 4])), ColumnRelation::Identical);
        assert_eq!(column_relation(&p([1, 2, 3, 4]), &p([1, 2, 3, 5])), ColumnRelation::Unrelated);
    }
}
