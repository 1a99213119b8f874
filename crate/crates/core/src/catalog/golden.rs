use serde::Serialize;

use super::AlgebraId;
use crate::exactnum::{rational_is_square, Ring};

/// Expected `(μ, μ_nil)` for one catalog algebra, with the published row
/// it comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub mu: usize,
    pub mu_nil: usize,
    pub row: &'static str,
}

const fn row(mu: usize, mu_nil: usize, row: &'static str) -> Option<Expected> {
    Some(Expected { mu, mu_nil, row })
}

/// Published values for dimensions 5 and 6 and the small-dimension
/// entries of the representation tables.
pub fn expected(id: &AlgebraId) -> Option<Expected> {
    let eps = id.epsilon();
    match (id.dim(), id.index()) {
        (1, 1) => row(1, 2, "dim <= 4: L1,1"),
        (2, 1) => row(2, 3, "dim <= 4: L2,1"),
        (3, 1) => row(3, 4, "dim <= 4: L3,1"),
        (3, 2) => row(3, 3, "dim <= 4: L3,2"),
        (4, 1) => row(4, 4, "dim <= 4: L4,1"),
        (4, 2) => row(3, 4, "dim <= 4: L4,2"),
        (4, 3) => row(4, 4, "dim <= 4: L4,3"),
        (5, 3 | 4 | 5 | 8) => row(4, 4, "dim 5: L5,3 L5,4 L5,5 L5,8"),
        (5, 1) => row(4, 5, "dim 5: L5,1"),
        (5, 2 | 6 | 7 | 9) => row(5, 5, "dim 5: L5,2 L5,7 L5,6 L5,9"),
        (6, 19) => {
            let e = eps?;
            if rational_is_square(&-e.clone()).is_some_and(|a| !a.is_zero()) {
                row(
                    4,
                    4,
                    "dim 6: L6,19(eps), alpha^2 + eps = 0 for some nonzero alpha",
                )
            } else {
                row(
                    5,
                    5,
                    "dim 6: L6,19(eps), alpha^2 + eps != 0 for all nonzero alpha",
                )
            }
        }
        (6, 3 | 4 | 5 | 8) => row(4, 5, "dim 6: L6,3 L6,4 L6,5 L6,8"),
        (6, 1 | 2 | 6 | 7 | 10..=13 | 20..=23 | 25 | 26) => row(
            5,
            5,
            "dim 6: L6,1 L6,2 L6,6 L6,7 L6,10-13 L6,20-23 L6,25 L6,26",
        ),
        (6, 24) => {
            if rational_is_square(eps?).is_some() {
                row(5, 5, "dim 6: L6,24(eps), alpha^2 = eps for some alpha")
            } else {
                row(6, 6, "dim 6: L6,24(eps), alpha^2 != eps for all alpha")
            }
        }
        (6, 9) => row(5, 6, "dim 6: L6,9"),
        (6, 14..=18) => row(6, 6, "dim 6: L6,14-18"),
        _ => None,
    }
}
