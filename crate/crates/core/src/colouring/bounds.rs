use serde::Serialize;

use crate::recognition::ClassId;

/// Upper bound on the chromatic number for a class at a given clique number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub class: ClassId,
    pub omega: usize,
    pub colours: usize,
    /// Every class member with this clique number is perfect.
    pub perfect: bool,
}

/// `w(w+1)(w+2)/6`, the bound for (P3+P2)-free and (P4+P2)-free graphs.
fn cubic(omega: usize) -> usize {
    omega * (omega + 1) * (omega + 2) / 6
}

pub fn bound_for_class(class: ClassId, omega: usize) -> Bound {
    let (colours, perfect) = if omega <= 1 {
        (omega, false)
    } else {
        match class {
            ClassId::P3P2Free | ClassId::P4P2Free | ClassId::TwoK2Free => (cubic(omega), false),
            ClassId::P3P2DiamondFree => match omega {
                2 => (4, false),
                3 => (6, false),
                4 => (5, false),
                _ => (omega, true),
            },
            ClassId::TwoK2DiamondFree => match omega {
                2 => (3, false),
                3 => (3, false),
                _ => (omega, true),
            },
        }
    };
    Bound { class, omega, colours, perfect }
}

/// Most fresh colours the pair sets can need in total: `w(w-1)(w+4)/6`.
pub fn fresh_palette_bound(omega: usize) -> usize {
    omega * omega.saturating_sub(1) * (omega + 4) / 6
}

/// Clique number bound on `[C_ij]`: `w - (j - 2)`.
pub fn pair_set_bound(omega: usize, j: usize) -> usize {
    (omega + 2).saturating_sub(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_values() {
        let got: Vec<usize> = (2..=6).map(|w| bound_for_class(ClassId::P3P2Free, w).colours).collect();
        assert_eq!(got, vec![4, 10, 20, 35, 56]);
    }

    #[test]
    fn fresh_palette_is_the_sum_of_pair_bounds() {
        for w in 1..=10 {
            let sum: usize = (2..=w).map(|j| (j - 1) * pair_set_bound(w, j)).sum();
            assert_eq!(fresh_palette_bound(w), sum, "w = {w}");
            assert_eq!(cubic(w), w + fresh_palette_bound(w));
        }
    }

    #[test]
    fn omega_one_is_one() {
        for c in ClassId::ALL {
            assert_eq!(bound_for_class(c, 1).colours, 1);
        }
    }
}
