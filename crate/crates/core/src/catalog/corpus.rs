use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::template::Template;
use super::{build_algebra, AlgebraId, CatalogError, Representation, ViolationReport};
use crate::exactnum::{rational_is_square, Field, QuadExt, Radicand, Rational, Ring};
use crate::liealg::{base_change, LieAlgebra};

/// Which published matrix of an algebra to read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// "Faithful nilrepresentation" column.
    TableNilrep,
    /// "Faithful representation" column (scalar diagonal part allowed).
    TableRep,
    /// Five-dimensional nilrepresentation of the `L6,19(ε)` family.
    Pi1,
    /// Four-dimensional representation of `L6,19(−1)`.
    Pi2,
    /// Five-dimensional nilrepresentation of `L6,24(ε)` for square `ε`.
    Remark624,
}

impl Variant {
    pub const ALL: [Variant; 5] = [
        Variant::TableNilrep,
        Variant::TableRep,
        Variant::Pi1,
        Variant::Pi2,
        Variant::Remark624,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Variant::TableNilrep => "table_nilrep",
            Variant::TableRep => "table_rep",
            Variant::Pi1 => "pi1",
            Variant::Pi2 => "pi2",
            Variant::Remark624 => "remark_624",
        }
    }

    /// Entries of this variant are published as nilrepresentations.
    pub fn expects_nilrep(self) -> bool {
        !matches!(self, Variant::TableRep)
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variant::ALL
            .into_iter()
            .find(|v| v.as_str() == s)
            .ok_or_else(|| CatalogError::UnknownVariant(s.to_string()))
    }
}

/// Whether the matrix is read verbatim or replaced by a corrected matrix of
/// the same size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Published,
    Patched,
}

/// Radicand of the `r` appearing in a template.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Root {
    None,
    /// `r = √(−ε)`
    NegEps,
    /// `r = √ε`
    Eps,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum When {
    Always,
    EpsIs(i64),
    EpsNonzero,
    /// The radicand of `r` is a nonzero rational square.
    RationalRoot,
    /// The radicand of `r` is not a nonzero rational square.
    NoRationalRoot,
}

#[derive(Clone, Copy, Debug)]
struct Entry {
    dim: u8,
    index: u8,
    variant: Variant,
    when: When,
    root: Root,
    published: Template,
    patch: Option<Template>,
}

const A1: &[&str] = &["a1"];
const A2: &[&str] = &["a1", "a2"];
const A3: &[&str] = &["a1", "a2", "a3"];
const A4: &[&str] = &["a1", "a2", "a3", "a4"];
const A5: &[&str] = &["a1", "a2", "a3", "a4", "a5"];
const A6: &[&str] = &["a1", "a2", "a3", "a4", "a5", "a6"];
const C32: &[&str] = &["x1", "x2", "z1"];
const C42: &[&str] = &["x1", "x2", "z1", "a1"];
const C43: &[&str] = &["x1", "x2", "x3", "z1"];
const C52: &[&str] = &["x1", "x2", "z1", "a1", "a2"];
const C53: &[&str] = &["x1", "x2", "x3", "z1", "a1"];
const C54: &[&str] = &["x1", "x2", "x3", "x4", "z1"];
const C58: &[&str] = &["x1", "x2", "x3", "z1", "z2"];
const C62: &[&str] = &["x1", "x2", "z1", "a1", "a2", "a3"];
const C63: &[&str] = &["x1", "x2", "x3", "z1", "a1", "a2"];
const C64: &[&str] = &["x1", "x2", "x3", "x4", "z1", "a1"];
const C68: &[&str] = &["x1", "x2", "x3", "z1", "z2", "a1"];
const C6: &[&str] = &["x1", "x2", "x3", "x4", "x5", "z1"];
const C6Z2: &[&str] = &["x1", "x2", "x3", "x4", "z1", "z2"];
const C626: &[&str] = &["x1", "x2", "x3", "z1", "z2", "z3"];

const fn t(coords: &'static [&'static str], rows: &'static [&'static str]) -> Template {
    Template { coords, rows }
}

const fn e(dim: u8, index: u8, variant: Variant, published: Template) -> Entry {
    Entry {
        dim,
        index,
        variant,
        when: When::Always,
        root: Root::None,
        published,
        patch: None,
    }
}

const fn patched(
    dim: u8,
    index: u8,
    variant: Variant,
    published: Template,
    patch: Template,
) -> Entry {
    Entry {
        dim,
        index,
        variant,
        when: When::Always,
        root: Root::None,
        published,
        patch: Some(patch),
    }
}

const fn when(entry: Entry, when: When, root: Root) -> Entry {
    Entry {
        when,
        root,
        ..entry
    }
}

use Variant::{Pi1, Pi2, Remark624, TableNilrep as N, TableRep as R};

const PI1: Template = t(
    C6,
    &[
        "0|x1|x4|x5|z1",
        "0|0|x2|x3|0",
        "0|0|0|0|-x2",
        "0|0|0|0|-e x3",
        "0|0|0|0|0",
    ],
);

const L6_19_SQUARE: Template = t(
    C6,
    &[
        "0|-(1/r)x2 + x3|(1/r)x4 - x5|-(2/r)z1",
        "0|0|x1|x4 + r x5",
        "0|0|0|x2 + r x3",
        "0|0|0|0",
    ],
);

const REMARK_624: Template = t(
    C6Z2,
    &[
        "0|r x1 + x2|(-e + r)x4 + (3e - 1)x3|(3r - 1)z1 + (3 - r)z2|(-r + 1)z1 + (-r + 1)z2",
        "0|0|x1 + x2|(-e + 4r - 1)x4 + 2x3|(-e + 1)x4",
        "0|0|0|-x1 + x2|x1 + x2",
        "0|0|0|0|0",
        "0|0|0|0|0",
    ],
);

const REMARK_624_PATCH: Template = t(
    C6Z2,
    &[
        "0|x1 + (1/r)x2|-(1/r)x2 - (2/r)x3 + 2x4|(2/r)x2 + (1/r)x3 - x4 + (4/r)z1 + (4/e)z2|(2/r)x2 - (2/r)x3 + x4 - (4/e)z2",
        "0|0|-(2/r)x2|(2/r)x3 + 6x4|-(2/r)x2 - 4x4",
        "0|0|0|x1 + (1/r)x2|-(2/r)x2",
        "0|0|0|0|0",
        "0|0|0|0|0",
    ],
);

const ENTRIES: &[Entry] = &[
    // small algebras with μ < μ_nil
    e(1, 1, N, t(A1, &["0|a1", "0|0"])),
    e(1, 1, R, t(A1, &["a1"])),
    e(2, 1, N, t(A2, &["0|a1|a2", "0|0|0", "0|0|0"])),
    e(2, 1, R, t(A2, &["a1|a2", "0|a1"])),
    e(
        3,
        1,
        N,
        t(A3, &["0|0|a1|a2", "0|0|0|a3", "0|0|0|0", "0|0|0|0"]),
    ),
    e(3, 1, R, t(A3, &["a1|0|a2", "0|a1|a3", "0|0|a1"])),
    e(
        4,
        2,
        N,
        t(C42, &["0|x1|z1|a1", "0|0|x2|0", "0|0|0|0", "0|0|0|0"]),
    ),
    e(4, 2, R, t(C42, &["a1|x1|z1", "0|a1|x2", "0|0|a1"])),
    e(
        5,
        1,
        N,
        t(
            A5,
            &[
                "0|0|a1|a2|a3",
                "0|0|0|a4|a5",
                "0|0|0|0|0",
                "0|0|0|0|0",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        5,
        1,
        R,
        t(A5, &["a1|0|a2|a3", "0|a1|a4|a5", "0|0|a1|0", "0|0|0|a1"]),
    ),
    e(
        5,
        2,
        N,
        t(
            C52,
            &[
                "0|x1|z1|a1|a2",
                "0|0|x2|0|0",
                "0|0|0|0|0",
                "0|0|0|0|0",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        5,
        2,
        R,
        t(C52, &["a1|x1|z1|0", "0|a1|x2|0", "0|0|a1|0", "0|0|0|a2"]),
    ),
    // algebras with μ = μ_nil, dimension ≤ 5
    e(3, 2, N, t(C32, &["0|x1|z1", "0|0|x2", "0|0|0"])),
    e(
        4,
        1,
        N,
        t(A4, &["0|0|a1|a2", "0|0|a3|a4", "0|0|0|0", "0|0|0|0"]),
    ),
    e(
        4,
        3,
        N,
        t(C43, &["0|x1|0|z1", "0|0|x1|x3", "0|0|0|x2", "0|0|0|0"]),
    ),
    e(
        5,
        3,
        N,
        t(
            C53,
            &[
                "0|x1|x3 + a1|-2z1",
                "0|0|x2|-x3 + a1",
                "0|0|0|x1",
                "0|0|0|0",
            ],
        ),
    ),
    e(
        5,
        4,
        N,
        t(C54, &["0|x1|x3|z1", "0|0|0|x2", "0|0|0|x4", "0|0|0|0"]),
    ),
    e(
        5,
        5,
        N,
        t(C54, &["0|x1|-x4|z1", "0|0|x1|x3", "0|0|0|x2", "0|0|0|0"]),
    ),
    e(
        5,
        6,
        N,
        t(
            C54,
            &[
                "0|x1|(1/2)x2|-(1/2)x3|z1",
                "0|0|x1|0|x4",
                "0|0|0|x1|x3",
                "0|0|0|0|x2",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        5,
        7,
        N,
        t(
            C54,
            &[
                "0|x1|0|0|z1",
                "0|0|x1|0|x4",
                "0|0|0|x1|x3",
                "0|0|0|0|x2",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        5,
        8,
        N,
        t(C58, &["0|x1|z1|z2", "0|0|x2|x3", "0|0|0|0", "0|0|0|0"]),
    ),
    e(
        5,
        9,
        N,
        t(
            C58,
            &[
                "0|0|(1/2)x2|-(1/2)x3|z2",
                "0|0|x1|0|z1",
                "0|0|0|x1|x3",
                "0|0|0|0|x2",
                "0|0|0|0|0",
            ],
        ),
    ),
    // six-dimensional algebras with μ < μ_nil
    e(
        6,
        3,
        N,
        t(
            C63,
            &[
                "0|x1|x3 + a1|-2z1|a2",
                "0|0|x2|-x3 + a1|0",
                "0|0|0|x1|0",
                "0|0|0|0|0",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        3,
        R,
        t(
            C63,
            &[
                "a2|x1|x3 + a1|-2z1",
                "0|a2|x2|-x3 + a1",
                "0|0|a2|x1",
                "0|0|0|a2",
            ],
        ),
    ),
    patched(
        6,
        4,
        N,
        t(
            C64,
            &[
                "0|x1|x2|z1|a1",
                "0|0|0|x3|0",
                "0|0|0|x4|0",
                "0|0|0|0|0",
                "0|0|0|0|0",
            ],
        ),
        t(
            C64,
            &[
                "0|x1|x3|z1|a1",
                "0|0|0|x2|0",
                "0|0|0|x4|0",
                "0|0|0|0|0",
                "0|0|0|0|0",
            ],
        ),
    ),
    patched(
        6,
        4,
        R,
        t(C64, &["a1|x1|x2|z1", "0|a1|0|x3", "0|0|a1|x4", "0|0|0|a1"]),
        t(C64, &["a1|x1|x3|z1", "0|a1|0|x2", "0|0|a1|x4", "0|0|0|a1"]),
    ),
    e(
        6,
        5,
        N,
        t(
            C64,
            &[
                "0|x1|-x4|z1|a1",
                "0|0|x1|x3|0",
                "0|0|0|x2|0",
                "0|0|0|0|0",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        5,
        R,
        t(
            C64,
            &["a1|x1|-x4|z1", "0|a1|x1|x3", "0|0|a1|x2", "0|0|0|a1"],
        ),
    ),
    e(
        6,
        8,
        N,
        t(
            C68,
            &[
                "0|x1|z1|z2|a1",
                "0|0|x2|x3|0",
                "0|0|0|0|0",
                "0|0|0|0|0",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        8,
        R,
        t(C68, &["a1|x1|z1|z2", "0|a1|x2|x3", "0|0|a1|0", "0|0|0|a1"]),
    ),
    e(
        6,
        9,
        N,
        t(
            C68,
            &[
                "0|0|(1/2)x2|-(1/2)x3|z2|a1",
                "0|0|x1|0|z1|0",
                "0|0|0|x1|x3|0",
                "0|0|0|0|x2|0",
                "0|0|0|0|0|0",
                "0|0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        9,
        R,
        t(
            C68,
            &[
                "a1|0|(1/2)x2|-(1/2)x3|z2",
                "0|a1|x1|0|z1",
                "0|0|a1|x1|x3",
                "0|0|0|a1|x2",
                "0|0|0|0|a1",
            ],
        ),
    ),
    // six-dimensional algebras with μ = μ_nil
    e(
        6,
        1,
        N,
        t(
            A6,
            &[
                "0|0|a1|a2|a3",
                "0|0|a4|a5|a6",
                "0|0|0|0|0",
                "0|0|0|0|0",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        2,
        N,
        t(
            C62,
            &[
                "0|0|x1|z1|a1",
                "0|0|0|a2|a3",
                "0|0|0|x2|0",
                "0|0|0|0|0",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        6,
        N,
        t(
            C64,
            &[
                "0|x1|3x2|x4 + a1|-3z1",
                "0|0|x1|x3|-2x4 + a1",
                "0|0|0|x2|-x3",
                "0|0|0|0|x1",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        7,
        N,
        t(
            C64,
            &[
                "0|x1|0|x4 + a1|-3z1",
                "0|0|x1|x3|-2x4 + a1",
                "0|0|0|x2|-x3",
                "0|0|0|0|x1",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        10,
        N,
        t(
            C6,
            &[
                "0|x1|0|x4|z1",
                "0|0|x1|0|x3",
                "0|0|0|0|x2",
                "0|0|0|0|x5",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        11,
        N,
        t(
            C6,
            &[
                "0|x1|x2|-x5|z1",
                "0|0|x1|x2|x4",
                "0|0|0|x1|x3",
                "0|0|0|0|x2",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        12,
        N,
        t(
            C6,
            &[
                "0|x1|0|-x5|z1",
                "0|0|x1|0|x4",
                "0|0|0|x1|x3",
                "0|0|0|0|x2",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        13,
        N,
        t(
            C6,
            &[
                "0|x1|-x4|0|z1",
                "0|0|x1|-x4|x5",
                "0|0|0|x1|x3",
                "0|0|0|0|x2",
                "0|0|0|0|0",
            ],
        ),
    ),
    patched(
        6,
        14,
        N,
        t(
            C6,
            &[
                "0|x2|-x3|0|0|z1",
                "0|0|x1|(1/2)x2|-(1/2)x3|x5",
                "0|0|0|x1|0|x4",
                "0|0|0|0|x1|x3",
                "0|0|0|0|0|x2",
                "0|0|0|0|0|0",
            ],
        ),
        t(
            C6,
            &[
                "0|x1|x3|(2/3)x4|-x5|z1",
                "0|0|x2|(1/3)x3|-(1/3)x4|0",
                "0|0|0|-(1/3)x1|x2|-(1/3)x4",
                "0|0|0|0|x1|x3",
                "0|0|0|0|0|x2",
                "0|0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        15,
        N,
        t(
            C6,
            &[
                "0|x1|(1/2)x2|0|-(1/2)x4|z1",
                "0|0|x1|(1/2)x2|-(1/2)x3|x5",
                "0|0|0|x1|0|x4",
                "0|0|0|0|x1|x3",
                "0|0|0|0|0|x2",
                "0|0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        16,
        N,
        t(
            C6,
            &[
                "0|x1|x3|-2x4|3x5|-3z1",
                "0|0|x2|-x3|x4|0",
                "0|0|0|x1|0|x4",
                "0|0|0|0|x1|x3",
                "0|0|0|0|0|x2",
                "0|0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        17,
        N,
        t(
            C6,
            &[
                "0|x1|0|(1/2)x2|-(1/2)x3|z1",
                "0|0|x1|0|0|x5",
                "0|0|0|x1|0|x4",
                "0|0|0|0|x1|x3",
                "0|0|0|0|0|x2",
                "0|0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        18,
        N,
        t(
            C6,
            &[
                "0|x1|0|0|0|z1",
                "0|0|x1|0|0|x5",
                "0|0|0|x1|0|x4",
                "0|0|0|0|x1|x3",
                "0|0|0|0|0|x2",
                "0|0|0|0|0|0",
            ],
        ),
    ),
    when(e(6, 19, N, L6_19_SQUARE), When::RationalRoot, Root::NegEps),
    when(e(6, 19, N, PI1), When::NoRationalRoot, Root::NegEps),
    e(6, 19, Pi1, PI1),
    when(
        e(
            6,
            19,
            Pi2,
            t(
                C6,
                &[
                    "0|x2 + x3|-x4 - x5|2z1",
                    "0|0|x1|x4 - x5",
                    "0|0|0|x2 - x3",
                    "0|0|0|0",
                ],
            ),
        ),
        When::EpsIs(-1),
        Root::None,
    ),
    e(
        6,
        20,
        N,
        t(
            C6,
            &[
                "0|x1|0|x4|z1",
                "0|0|x1|x2|x5",
                "0|0|0|0|x3",
                "0|0|0|0|-x2",
                "0|0|0|0|0",
            ],
        ),
    ),
    when(
        e(
            6,
            21,
            N,
            t(
                C6,
                &[
                    "0|-x1 + x2|(e + 1)x3|-x4 - e x5|3z1",
                    "0|0|x1 - (e + 2)x2|x3|-2x4 + e x5",
                    "0|0|0|x2|-x3",
                    "0|0|0|0|2x2 + x1",
                    "0|0|0|0|0",
                ],
            ),
        ),
        When::EpsNonzero,
        Root::None,
    ),
    when(
        patched(
            6,
            21,
            N,
            t(
                C6,
                &[
                    "0|-x1 + x2 + x3|-x3 - 2x4 - x5|x4 - x5|3z1",
                    "0|0|x2|-x3|x4 - x5",
                    "0|0|0|x1 + x2|-x3",
                    "0|0|0|0|x1",
                    "0|0|0|0|0",
                ],
            ),
            t(
                C6,
                &[
                    "0|x1|-x2 - 2x3|-x2 + 5x4 + 2x5|-2x2 + 3x3 - x5 - 9z1",
                    "0|0|x1 - 2x2|-x2 + 3x3|2x2 - 4x4 + 2x5",
                    "0|0|0|x1 + x2|-x2 - x3",
                    "0|0|0|0|x1",
                    "0|0|0|0|0",
                ],
            ),
        ),
        When::EpsIs(0),
        Root::None,
    ),
    patched(
        6,
        22,
        N,
        t(
            C6Z2,
            &[
                "0|x1|x4|z1|z2",
                "0|0|0|x2|x3",
                "0|0|0|x3|e x2",
                "0|0|0|0|0",
                "0|0|0|0|0",
            ],
        ),
        t(
            C6Z2,
            &[
                "0|x1|-x4|z1|z2",
                "0|0|0|x2|x3",
                "0|0|0|x3|e x2",
                "0|0|0|0|0",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        23,
        N,
        t(
            C6Z2,
            &[
                "0|x1|-x4|z2|z1",
                "0|0|x1|0|x3",
                "0|0|0|x1|x2",
                "0|0|0|0|0",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        24,
        N,
        t(
            C6Z2,
            &[
                "0|x2|x1|x3|-2z1|-z2",
                "0|0|0|0|-2x4|0",
                "0|0|0|x2|-x3|-e x4",
                "0|0|0|0|x1|x2",
                "0|0|0|0|0|0",
                "0|0|0|0|0|0",
            ],
        ),
    ),
    when(e(6, 24, Remark624, REMARK_624), When::EpsIs(0), Root::Eps),
    when(
        patched(6, 24, Remark624, REMARK_624, REMARK_624_PATCH),
        When::RationalRoot,
        Root::Eps,
    ),
    e(
        6,
        25,
        N,
        t(
            C6Z2,
            &[
                "0|x1|x3|2z1|z2",
                "0|0|x2|x3|x4",
                "0|0|0|-x1|0",
                "0|0|0|0|0",
                "0|0|0|0|0",
            ],
        ),
    ),
    e(
        6,
        26,
        N,
        t(
            C626,
            &[
                "0|0|x1|z1|z2",
                "0|0|x2|0|z3",
                "0|0|0|x2|x3",
                "0|0|0|0|0",
                "0|0|0|0|0",
            ],
        ),
    ),
];

/// A corpus representation together with where it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct CorpusRep<F> {
    pub id: AlgebraId,
    pub variant: Variant,
    pub provenance: Provenance,
    pub rep: Representation<F>,
}

/// A published matrix that fails verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub algebra: AlgebraId,
    pub variant: Variant,
    pub violation: ViolationReport,
}

impl Entry {
    fn radicand(&self, eps: &Rational) -> Option<Rational> {
        match self.root {
            Root::None => None,
            Root::NegEps => Some(-eps.clone()),
            Root::Eps => Some(eps.clone()),
        }
    }

    fn rational_root(&self, eps: &Rational) -> Option<Rational> {
        self.radicand(eps).and_then(|d| rational_is_square(&d))
    }

    fn holds(&self, eps: &Rational) -> bool {
        let nonzero_root = self.rational_root(eps).is_some_and(|r| !r.is_zero());
        match self.when {
            When::Always => true,
            When::EpsIs(v) => *eps == Rational::from(v),
            When::EpsNonzero => !eps.is_zero(),
            When::RationalRoot => nonzero_root,
            When::NoRationalRoot => !nonzero_root,
        }
    }

    /// Holds over ℚ(√d) where `d` is the radicand, which must be a nonsquare.
    fn holds_over_extension(&self, eps: &Rational) -> Option<Radicand> {
        if self.when != When::RationalRoot {
            return None;
        }
        Radicand::new(self.radicand(eps)?).ok()
    }
}

fn matching(id: &AlgebraId, variant: Variant) -> impl Iterator<Item = &'static Entry> + '_ {
    ENTRIES
        .iter()
        .filter(move |en| en.dim == id.dim() && en.index == id.index() && en.variant == variant)
}

fn eps_of(id: &AlgebraId) -> Rational {
    id.epsilon().cloned().unwrap_or_else(Rational::zero)
}

fn select(id: &AlgebraId, variant: Variant) -> Result<&'static Entry, CatalogError> {
    let eps = eps_of(id);
    if let Some(en) = matching(id, variant).find(|en| en.holds(&eps)) {
        return Ok(en);
    }
    if let Some(d) = matching(id, variant).find_map(|en| en.holds_over_extension(&eps)) {
        return Err(CatalogError::NeedsExtension {
            algebra: id.to_string(),
            radicand: d.value().to_string(),
        });
    }
    Err(CatalogError::VariantAbsent {
        algebra: id.to_string(),
        variant,
    })
}

fn instantiate_rational(
    id: &AlgebraId,
    en: &Entry,
    template: &Template,
) -> Result<Representation<Rational>, CatalogError> {
    let eps = eps_of(id);
    let images = template.instantiate(Some(eps.clone()), en.rational_root(&eps))?;
    Representation::new(build_algebra(id)?, images)
}

/// The representation as it should be used: the published matrix, or its
/// registered same-size patch when the published one is an erratum.
pub fn build_representation(
    id: &AlgebraId,
    variant: Variant,
) -> Result<CorpusRep<Rational>, CatalogError> {
    let en = select(id, variant)?;
    let (template, provenance) = match &en.patch {
        Some(p) => (p, Provenance::Patched),
        None => (&en.published, Provenance::Published),
    };
    Ok(CorpusRep {
        id: id.clone(),
        variant,
        provenance,
        rep: instantiate_rational(id, en, template)?,
    })
}

/// The matrix exactly as printed, whether or not it verifies.
pub fn published_representation(
    id: &AlgebraId,
    variant: Variant,
) -> Result<CorpusRep<Rational>, CatalogError> {
    let en = select(id, variant)?;
    Ok(CorpusRep {
        id: id.clone(),
        variant,
        provenance: Provenance::Published,
        rep: instantiate_rational(id, en, &en.published)?,
    })
}

/// A variant whose entries involve `√d` for a rational nonsquare `d`, read
/// over ℚ(√d). The source algebra is the base change of the catalog algebra.
pub fn build_representation_over_extension(
    id: &AlgebraId,
    variant: Variant,
) -> Result<CorpusRep<QuadExt>, CatalogError> {
    let eps = eps_of(id);
    let (en, d) = matching(id, variant)
        .find_map(|en| en.holds_over_extension(&eps).map(|d| (en, d)))
        .ok_or_else(|| CatalogError::VariantAbsent {
            algebra: id.to_string(),
            variant,
        })?;
    let (template, provenance) = match &en.patch {
        Some(p) => (p, Provenance::Patched),
        None => (&en.published, Provenance::Published),
    };
    let images =
        template.instantiate(Some(QuadExt::from_rational(&eps)), Some(QuadExt::sqrt(&d)))?;
    let source: LieAlgebra<QuadExt> = base_change(&build_algebra(id)?, d.value())?;
    Ok(CorpusRep {
        id: id.clone(),
        variant,
        provenance,
        rep: Representation::new(source, images)?,
    })
}

/// Variants readable over ℚ for this algebra.
pub fn available_variants(id: &AlgebraId) -> Vec<Variant> {
    Variant::ALL
        .into_iter()
        .filter(|&v| select(id, v).is_ok())
        .collect()
}

/// Variants that need a quadratic extension of ℚ at this parameter.
pub fn extension_variants(id: &AlgebraId) -> Vec<Variant> {
    Variant::ALL
        .into_iter()
        .filter(|&v| matches!(select(id, v), Err(CatalogError::NeedsExtension { .. })))
        .collect()
}

/// Every (algebra, variant) in the corpus at the given ids, built over ℚ.
pub fn corpus(ids: &[AlgebraId]) -> Result<Vec<CorpusRep<Rational>>, CatalogError> {
    ids.iter()
        .flat_map(|id| {
            available_variants(id)
                .into_iter()
                .map(move |v| build_representation(id, v))
        })
        .collect()
}

/// True iff the selected entry for `(id, variant)` carries a patch.
pub fn has_patch(id: &AlgebraId, variant: Variant) -> bool {
    select(id, variant).is_ok_and(|en| en.patch.is_some())
}

/// Failing published matrices among the given ids, with the first violated
/// bracket and its residual. Patched entries whose published matrix happens
/// to verify at a given parameter are omitted.
pub fn errata(ids: &[AlgebraId]) -> Result<Vec<Erratum>, CatalogError> {
    let mut out = Vec::new();
    for id in ids {
        for variant in available_variants(id) {
            if !has_patch(id, variant) {
                continue;
            }
            let printed = published_representation(id, variant)?;
            if let Err(v) = printed.rep.check_homomorphism() {
                out.push(Erratum {
                    algebra: id.clone(),
                    variant,
                    violation: ViolationReport::from(&v),
                });
            }
        }
    }
    Ok(out)
}

/// Distinct `(family, variant)` keys of the corpus.
pub fn corpus_keys() -> Vec<(String, Variant)> {
    let mut keys: Vec<(String, Variant)> = ENTRIES
        .iter()
        .map(|en| (format!("L{}_{}", en.dim, en.index), en.variant))
        .collect();
    keys.dedup();
    keys
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_template_has_square_rows_and_matching_coordinates() {
        for en in ENTRIES {
            let g = build_algebra(
                &AlgebraId::new(
                    en.dim,
                    en.index,
                    super::super::id::is_family(en.dim, en.index).then(|| Rational::from(1)),
                )
                .unwrap(),
            )
            .unwrap();
            for tpl in std::iter::once(&en.published).chain(en.patch.iter()) {
                assert_eq!(
                    tpl.coords.len(),
                    g.dim(),
                    "L{}_{} {}",
                    en.dim,
                    en.index,
                    en.variant
                );
                for row in tpl.rows {
                    assert_eq!(
                        row.split('|').count(),
                        tpl.size(),
                        "L{}_{} {}",
                        en.dim,
                        en.index,
                        en.variant
                    );
                }
            }
        }
    }

    #[test]
    fn irrational_roots_need_the_extension() {
        let id = AlgebraId::family(19, Rational::from(-2)).unwrap();
        assert_eq!(
            build_representation(&id, Variant::TableNilrep)
                .unwrap()
                .rep
                .target_dim(),
            5
        );
        let ext = build_representation_over_extension(&id, Variant::TableNilrep).unwrap();
        assert_eq!(ext.rep.target_dim(), 4);
        let id = AlgebraId::family(24, Rational::from(2)).unwrap();
        assert!(matches!(
            build_representation(&id, Variant::Remark624),
            Err(CatalogError::NeedsExtension { .. })
        ));
    }
}
