use super::{AlgebraId, CatalogError};
use crate::exactnum::{Rational, Ring};
use crate::liealg::{LieAlgebra, StructureConstants};

/// Bracket `[a, b] = c·t` where the target string is a label optionally
/// prefixed by `-` (c = −1) or `e` (c = ε).
type Bracket = (&'static str, &'static str, &'static str);

struct Table {
    labels: &'static [&'static str],
    brackets: &'static [Bracket],
}

const X4Z: &[&str] = &["X1", "X2", "X3", "X4", "Z1"];
const X3Z2: &[&str] = &["X1", "X2", "X3", "Z1", "Z2"];
const X5Z: &[&str] = &["X1", "X2", "X3", "X4", "X5", "Z1"];
const X4Z2: &[&str] = &["X1", "X2", "X3", "X4", "Z1", "Z2"];

fn table(dim: u8, index: u8) -> Option<Table> {
    let t = |labels, brackets| Some(Table { labels, brackets });
    match (dim, index) {
        (3, 2) => t(&["X1", "X2", "Z1"], &[("X1", "X2", "Z1")]),
        (4, 3) => t(
            &["X1", "X2", "X3", "Z1"],
            &[("X1", "X2", "X3"), ("X1", "X3", "Z1")],
        ),
        (5, 4) => t(X4Z, &[("X1", "X2", "Z1"), ("X3", "X4", "Z1")]),
        (5, 5) => t(
            X4Z,
            &[("X1", "X2", "X3"), ("X1", "X3", "Z1"), ("X2", "X4", "Z1")],
        ),
        (5, 6) => t(
            X4Z,
            &[
                ("X1", "X2", "X3"),
                ("X1", "X3", "X4"),
                ("X1", "X4", "Z1"),
                ("X2", "X3", "Z1"),
            ],
        ),
        (5, 7) => t(
            X4Z,
            &[("X1", "X2", "X3"), ("X1", "X3", "X4"), ("X1", "X4", "Z1")],
        ),
        (5, 8) => t(X3Z2, &[("X1", "X2", "Z1"), ("X1", "X3", "Z2")]),
        (5, 9) => t(
            X3Z2,
            &[("X1", "X2", "X3"), ("X1", "X3", "Z1"), ("X2", "X3", "Z2")],
        ),
        (6, 10) => t(
            X5Z,
            &[("X1", "X2", "X3"), ("X1", "X3", "Z1"), ("X4", "X5", "Z1")],
        ),
        (6, 11) => t(
            X5Z,
            &[
                ("X1", "X2", "X3"),
                ("X1", "X3", "X4"),
                ("X1", "X4", "Z1"),
                ("X2", "X3", "Z1"),
                ("X2", "X5", "Z1"),
            ],
        ),
        (6, 12) => t(
            X5Z,
            &[
                ("X1", "X2", "X3"),
                ("X1", "X3", "X4"),
                ("X1", "X4", "Z1"),
                ("X2", "X5", "Z1"),
            ],
        ),
        (6, 13) => t(
            X5Z,
            &[
                ("X1", "X2", "X3"),
                ("X1", "X3", "X5"),
                ("X2", "X4", "X5"),
                ("X1", "X5", "Z1"),
                ("X3", "X4", "Z1"),
            ],
        ),
        (6, 14) => t(
            X5Z,
            &[
                ("X1", "X2", "X3"),
                ("X1", "X3", "X4"),
                ("X1", "X4", "X5"),
                ("X2", "X3", "X5"),
                ("X2", "X5", "Z1"),
                ("X3", "X4", "-Z1"),
            ],
        ),
        (6, 15) => t(
            X5Z,
            &[
                ("X1", "X2", "X3"),
                ("X1", "X3", "X4"),
                ("X1", "X4", "X5"),
                ("X2", "X3", "X5"),
                ("X1", "X5", "Z1"),
                ("X2", "X4", "Z1"),
            ],
        ),
        (6, 16) => t(
            X5Z,
            &[
                ("X1", "X2", "X3"),
                ("X1", "X3", "X4"),
                ("X1", "X4", "X5"),
                ("X2", "X5", "Z1"),
                ("X3", "X4", "-Z1"),
            ],
        ),
        (6, 17) => t(
            X5Z,
            &[
                ("X1", "X2", "X3"),
                ("X1", "X3", "X4"),
                ("X1", "X4", "X5"),
                ("X1", "X5", "Z1"),
                ("X2", "X3", "Z1"),
            ],
        ),
        (6, 18) => t(
            X5Z,
            &[
                ("X1", "X2", "X3"),
                ("X1", "X3", "X4"),
                ("X1", "X4", "X5"),
                ("X1", "X5", "Z1"),
            ],
        ),
        (6, 19) => t(
            X5Z,
            &[
                ("X1", "X2", "X4"),
                ("X1", "X3", "X5"),
                ("X2", "X4", "Z1"),
                ("X3", "X5", "eZ1"),
            ],
        ),
        (6, 20) => t(
            X5Z,
            &[
                ("X1", "X2", "X4"),
                ("X1", "X3", "X5"),
                ("X1", "X5", "Z1"),
                ("X2", "X4", "Z1"),
            ],
        ),
        (6, 21) => t(
            X5Z,
            &[
                ("X1", "X2", "X3"),
                ("X1", "X3", "X4"),
                ("X2", "X3", "X5"),
                ("X1", "X4", "Z1"),
                ("X2", "X5", "eZ1"),
            ],
        ),
        (6, 22) => t(
            X4Z2,
            &[
                ("X1", "X2", "Z1"),
                ("X1", "X3", "Z2"),
                ("X2", "X4", "eZ2"),
                ("X3", "X4", "Z1"),
            ],
        ),
        (6, 23) => t(
            X4Z2,
            &[
                ("X1", "X2", "X3"),
                ("X1", "X3", "Z1"),
                ("X1", "X4", "Z2"),
                ("X2", "X4", "Z1"),
            ],
        ),
        (6, 24) => t(
            X4Z2,
            &[
                ("X1", "X2", "X3"),
                ("X1", "X3", "Z1"),
                ("X1", "X4", "eZ2"),
                ("X2", "X3", "Z2"),
                ("X2", "X4", "Z1"),
            ],
        ),
        (6, 25) => t(
            X4Z2,
            &[("X1", "X2", "X3"), ("X1", "X3", "Z1"), ("X1", "X4", "Z2")],
        ),
        (6, 26) => t(
            &["X1", "X2", "X3", "Z1", "Z2", "Z3"],
            &[("X1", "X2", "Z1"), ("X1", "X3", "Z2"), ("X2", "X3", "Z3")],
        ),
        _ => None,
    }
}

fn from_table(t: &Table, eps: &Rational) -> Result<LieAlgebra<Rational>, CatalogError> {
    let index = |l: &str| {
        t.labels
            .iter()
            .position(|&x| x == l)
            .ok_or_else(|| CatalogError::UnknownAlgebra(format!("label {l} not in basis")))
    };
    let mut sc = StructureConstants::new(t.labels.iter().copied());
    for &(a, b, target) in t.brackets {
        let (coeff, label) = if let Some(rest) = target.strip_prefix('-') {
            (-Rational::one(), rest)
        } else if let Some(rest) = target.strip_prefix('e') {
            (eps.clone(), rest)
        } else {
            (Rational::one(), target)
        };
        let mut v = vec![Rational::zero(); t.labels.len()];
        v[index(label)?] = coeff;
        sc.set_bracket(index(a)?, index(b)?, v)?;
    }
    Ok(LieAlgebra::new(sc)?)
}

/// Appends `k` central directions labelled after the existing `A` labels.
fn plus_abelian(g: &LieAlgebra<Rational>, k: usize) -> Result<LieAlgebra<Rational>, CatalogError> {
    let existing = g.labels().iter().filter(|l| l.starts_with('A')).count();
    let sum = g.direct_sum(&LieAlgebra::abelian(k));
    let mut labels = g.labels().to_vec();
    labels.extend((1..=k).map(|i| format!("A{}", existing + i)));
    Ok(sum.with_labels(labels)?)
}

/// The catalog algebra over ℚ in its standard basis order: `X` generators,
/// then `Z` (center inside the derived algebra), then `A` (central
/// complement). `L6,j` for `j ≤ 9` is `L5,j ⊕ k`.
pub fn build_algebra(id: &AlgebraId) -> Result<LieAlgebra<Rational>, CatalogError> {
    let (dim, index) = (id.dim(), id.index());
    if index == 1 {
        return Ok(LieAlgebra::abelian(usize::from(dim)));
    }
    match (dim, index) {
        (4, 2) => return plus_abelian(&build_algebra(&AlgebraId::plain(3, 2))?, 1),
        (5, 2) => return plus_abelian(&build_algebra(&AlgebraId::plain(3, 2))?, 2),
        (5, 3) => return plus_abelian(&build_algebra(&AlgebraId::plain(4, 3))?, 1),
        (6, j) if j <= 9 => return plus_abelian(&build_algebra(&AlgebraId::plain(5, j))?, 1),
        _ => {}
    }
    let t = table(dim, index).ok_or_else(|| CatalogError::UnknownAlgebra(id.to_string()))?;
    let eps = id.epsilon().cloned().unwrap_or_else(Rational::zero);
    let g = from_table(&t, &eps)?;
    // At ε = 0 the vector X5 of L6,19 and L6,21 becomes central.
    if eps.is_zero() && matches!(index, 19 | 21) {
        let mut labels = g.labels().to_vec();
        labels[4] = "Z2".to_string();
        return Ok(g.with_labels(labels)?);
    }
    Ok(g)
}

/// Every catalog id of a dimension; families are instantiated at `samples(index)`.
pub fn ids_of_dim(dim: u8, samples: impl Fn(u8) -> Vec<Rational>) -> Vec<AlgebraId> {
    let mut out = Vec::new();
    for index in 1..=AlgebraId::class_count(dim) {
        if super::id::is_family(dim, index) {
            for e in samples(index) {
                out.push(AlgebraId::new(dim, index, Some(e)).expect("family index"));
            }
        } else {
            out.push(AlgebraId::plain(dim, index));
        }
    }
    out
}

/// Default ε samples: at least one representative per square class the
/// tables distinguish.
pub fn default_eps_samples(index: u8) -> Vec<Rational> {
    let q = |s: &[i64]| s.iter().map(|&x| Rational::from(x)).collect();
    match index {
        19 => q(&[-1, -4, 1, 2]),
        21 => q(&[0, 1, 2]),
        22 => q(&[0, 1]),
        24 => {
            let mut v: Vec<Rational> = q(&[1, 4, 2, 3]);
            v.push(Rational::new(9, 4).expect("nonzero denominator"));
            v
        }
        _ => Vec::new(),
    }
}

/// Every catalog id in dimensions 1 through 6 at the default ε samples.
pub fn all_ids() -> Vec<AlgebraId> {
    (1..=6)
        .flat_map(|d| ids_of_dim(d, default_eps_samples))
        .collect()
}

/// True iff `δ/ε` is a nonzero rational square, with `ε = 0 ⟺ δ = 0`.
pub fn family_isomorphic(
    family: u8,
    eps: &Rational,
    delta: &Rational,
) -> Result<bool, CatalogError> {
    if !super::id::FAMILIES.contains(&family) {
        return Err(CatalogError::UnknownAlgebra(format!(
            "L6_{family} is not a family"
        )));
    }
    Ok(match (eps.is_zero(), delta.is_zero()) {
        (true, true) => true,
        (false, false) => {
            crate::exactnum::rational_is_square(&(delta.clone() / eps.clone())).is_some()
        }
        _ => false,
    })
}
