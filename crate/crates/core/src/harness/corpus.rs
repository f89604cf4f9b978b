//! Built-in example ideals and the published classification lists.

use crate::harness::format::{parse_ideal, parse_ideal_batch, parse_matrix_batch};
use crate::monomial::{IncidenceMatrix, MonomialIdeal};

/// Cohen-Macaulay signature ideals with 3 variables and 3 generators.
pub const CM_3X3: &str = include_str!("../../data/cm_3x3.txt");
/// Cohen-Macaulay signature ideals with 4 variables and 3 generators.
pub const CM_4X3: &str = include_str!("../../data/cm_4x3.txt");
/// Cohen-Macaulay signature ideals with 3 variables and 4 generators.
pub const CM_3X4: &str = include_str!("../../data/cm_3x4.txt");
/// The sixteen 3x3 signature matrices.
pub const LIST_3X3: &str = include_str!("../../data/list_3x3.txt");

fn fixed(text: &str) -> MonomialIdeal {
    parse_ideal(text).expect("built-in document parses")
}

fn fixed_list(text: &str) -> Vec<MonomialIdeal> {
    parse_ideal_batch(text)
        .into_iter()
        .map(|d| d.expect("built-in document parses").to_ideal())
        .collect()
}

/// `(x1x2x3^2, x1^6x3^7, x2^3x4, x2x3^3x4, x2x4^3)`.
pub fn signature_example() -> MonomialIdeal {
    fixed("4 5\nx1*x2*x3^2\nx1^6*x3^7\nx2^3*x4\nx2*x3^3*x4\nx2*x4^3\n")
}

/// An ideal with a single gap, in `x1`.
pub fn one_gap_example() -> MonomialIdeal {
    fixed("3 4\nx2^3\nx1*x2^2\nx1^3*x3^2\nx1^4*x2*x3\n")
}

pub fn principal_example() -> MonomialIdeal {
    fixed("3 1\nx1*x2*x3\n")
}

/// Height one: `x1*x2` divides both generators.
pub fn height_one_example() -> MonomialIdeal {
    fixed("3 2\nx1*x2*x3\nx1*x2^2\n")
}

/// Two signature ideals `I ⊊ J`.
pub fn not_antichain_pair() -> (MonomialIdeal, MonomialIdeal) {
    (
        fixed("3 3\nx2*x3^2\nx1*x3\nx1^2\n"),
        fixed("3 3\nx2*x3\nx1*x3\nx1^2\n"),
    )
}

/// `(x1^2x3, x2^2x3, x1^2x4)`, whose signature has smaller regularity.
pub fn alldepth_example() -> MonomialIdeal {
    fixed("4 3\nx1^2*x3\nx2^2*x3\nx1^2*x4\n")
}

pub fn cm_3x3() -> Vec<MonomialIdeal> {
    fixed_list(CM_3X3)
}

pub fn cm_4x3() -> Vec<MonomialIdeal> {
    fixed_list(CM_4X3)
}

pub fn cm_3x4() -> Vec<MonomialIdeal> {
    fixed_list(CM_3X4)
}

pub fn list_3x3() -> Vec<IncidenceMatrix> {
    parse_matrix_batch(LIST_3X3)
        .into_iter()
        .map(|d| d.expect("built-in document parses").matrix)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_sizes() {
        assert_eq!(cm_3x3().len(), 10);
        assert_eq!(cm_4x3().len(), 29);
        assert_eq!(cm_3x4().len(), 80);
        assert_eq!(list_3x3().len(), 16);
    }

    #[test]
    fn lists_have_the_announced_shape() {
        for (ideals, n, q) in [(cm_3x3(), 3, 3), (cm_4x3(), 4, 3), (cm_3x4(), 3, 4)] {
            for i in ideals {
                assert_eq!((i.n(), i.len()), (n, q), "{i}");
            }
        }
        for a in list_3x3() {
            assert_eq!((a.rows(), a.cols()), (3, 3));
            assert!(a.columns_form_antichain());
        }
    }
}
