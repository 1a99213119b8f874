use std::collections::BTreeMap;
use std::fmt;

use super::LieError;
use crate::exactnum::{Field, QuadExt, Radicand, Rational, Ring};
use crate::linalg::{Matrix, Subspace};

/// Bracket table on a labelled basis, not yet checked for the Jacobi identity.
///
/// Only pairs `i < j` are stored; `[e_j, e_i] = −[e_i, e_j]` and
/// `[e_i, e_i] = 0` are implied.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants<F> {
    labels: Vec<String>,
    brackets: BTreeMap<(usize, usize), Vec<F>>,
}

/// First basis triple `i < j < k` on which the Jacobi sum is nonzero.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiViolation<F> {
    pub triple: (usize, usize, usize),
    pub residual: Vec<F>,
}

impl<F: Field> StructureConstants<F> {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        StructureConstants {
            labels: labels.into_iter().map(Into::into).collect(),
            brackets: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Sets `[e_i, e_j]` for `i < j`. A zero value removes the entry.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vec<F>) -> Result<(), LieError> {
        let n = self.dim();
        if i >= n || j >= n {
            return Err(LieError::IndexOutOfRange {
                index: i.max(j),
                dim: n,
            });
        }
        if i >= j {
            return Err(LieError::UnorderedPair { i, j });
        }
        if value.len() != n {
            return Err(LieError::LengthMismatch {
                expected: n,
                found: value.len(),
            });
        }
        if value.iter().all(Ring::is_zero) {
            self.brackets.remove(&(i, j));
        } else {
            self.brackets.insert((i, j), value);
        }
        Ok(())
    }

    pub fn brackets(&self) -> &BTreeMap<(usize, usize), Vec<F>> {
        &self.brackets
    }

    /// `[e_i, e_j]` for any ordered pair.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<F> {
        let n = self.dim();
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self
                .brackets
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| vec![F::zero(); n]),
            std::cmp::Ordering::Greater => self
                .brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|x| -x.clone()).collect())
                .unwrap_or_else(|| vec![F::zero(); n]),
            std::cmp::Ordering::Equal => vec![F::zero(); n],
        }
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Result<Vec<F>, LieError> {
        let n = self.dim();
        for v in [x, y] {
            if v.len() != n {
                return Err(LieError::LengthMismatch {
                    expected: n,
                    found: v.len(),
                });
            }
        }
        let mut out = vec![F::zero(); n];
        for (&(i, j), value) in &self.brackets {
            let c = x[i].clone() * &y[j] - &(x[j].clone() * &y[i]);
            if c.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(value) {
                *o = o.clone() + &(c.clone() * v);
            }
        }
        Ok(out)
    }

    fn bracket_with_basis(&self, v: &[F], k: usize) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(self.basis_bracket(i, k)) {
                *o = o.clone() + &(c.clone() * &b);
            }
        }
        out
    }

    /// Checks `[[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0` for all `i < j < k`.
    pub fn validate(&self) -> Result<(), JacobiViolation<F>> {
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket_with_basis(&self.basis_bracket(i, j), k);
                    let b = self.bracket_with_basis(&self.basis_bracket(j, k), i);
                    let c = self.bracket_with_basis(&self.basis_bracket(k, i), j);
                    let residual: Vec<F> = a
                        .into_iter()
                        .zip(b)
                        .zip(c)
                        .map(|((x, y), z)| x + &y + &z)
                        .collect();
                    if residual.iter().any(|x| !x.is_zero()) {
                        return Err(JacobiViolation {
                            triple: (i, j, k),
                            residual,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// A Lie algebra given by structure constants that satisfy Jacobi.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebra<F> {
    sc: StructureConstants<F>,
}

/// Lower central series `C¹ = g ⊋ C² ⊋ … ⊋ C^class ⊋ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LowerCentralSeries<F> {
    terms: Vec<Subspace<F>>,
}

impl<F: Field> LowerCentralSeries<F> {
    /// Nonzero terms, starting with `C¹`.
    pub fn terms(&self) -> &[Subspace<F>] {
        &self.terms
    }

    /// Dimensions of all terms including the final zero.
    pub fn dims(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.iter().map(Subspace::dim).collect();
        d.push(0);
        d
    }

    /// Largest `k` with `C^k ≠ 0`.
    pub fn class(&self) -> usize {
        self.terms.len()
    }

    /// `dim C^k` (1-based), zero past the class.
    pub fn dim_of(&self, k: usize) -> usize {
        if k == 0 {
            return self.terms.first().map_or(0, Subspace::dim);
        }
        self.terms.get(k - 1).map_or(0, Subspace::dim)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shape {
    pub abelian: bool,
    pub filiform: bool,
    pub center_in_derived: bool,
}

impl<F: Field> LieAlgebra<F> {
    pub fn new(sc: StructureConstants<F>) -> Result<Self, LieError> {
        sc.validate().map_err(|v| LieError::Jacobi {
            triple: v.triple,
            labels: [v.triple.0, v.triple.1, v.triple.2]
                .map(|i| sc.labels[i].as_str())
                .join(", "),
            residual: format_vector(&v.residual, &sc.labels),
        })?;
        Ok(LieAlgebra { sc })
    }

    pub fn abelian(dim: usize) -> Self {
        let labels = (1..=dim).map(|i| format!("A{i}"));
        LieAlgebra {
            sc: StructureConstants::new(labels),
        }
    }

    pub fn structure(&self) -> &StructureConstants<F> {
        &self.sc
    }

    pub fn dim(&self) -> usize {
        self.sc.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.sc.labels()
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.sc.labels.iter().position(|l| l == label)
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<F> {
        self.sc.basis_bracket(i, j)
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Result<Vec<F>, LieError> {
        self.sc.bracket(x, y)
    }

    pub fn unit_vector(&self, i: usize) -> Vec<F> {
        (0..self.dim())
            .map(|j| if i == j { F::one() } else { F::zero() })
            .collect()
    }

    /// Matrix of `ad(e_i)`: column `j` holds `[e_i, e_j]`.
    pub fn ad_matrix(&self, i: usize) -> Matrix<F> {
        let n = self.dim();
        let cols: Vec<Vec<F>> = (0..n).map(|j| self.sc.basis_bracket(i, j)).collect();
        Matrix::from_fn(n, n, |r, c| cols[c][r].clone())
    }

    pub fn is_abelian(&self) -> bool {
        self.sc.brackets.is_empty()
    }

    /// Same dimension and bracket table, ignoring labels.
    pub fn same_structure(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.sc.brackets == other.sc.brackets
    }

    pub fn with_labels<S: Into<String>>(
        &self,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Self, LieError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.dim() {
            return Err(LieError::LengthMismatch {
                expected: self.dim(),
                found: labels.len(),
            });
        }
        let mut sc = self.sc.clone();
        sc.labels = labels;
        Ok(LieAlgebra { sc })
    }

    /// `{x : [x, e_j] = 0 for all j}`.
    pub fn center(&self) -> Subspace<F> {
        let n = self.dim();
        // row (j, k), column i: k-th coordinate of [e_i, e_j]
        let m = Matrix::from_fn(n * n, n, |row, i| {
            let (j, k) = (row / n, row % n);
            self.sc.basis_bracket(i, j)[k].clone()
        });
        m.nullspace()
    }

    /// Span of all `[a, b]` with `a ∈ A`, `b ∈ B`.
    pub fn bracket_subspaces(
        &self,
        a: &Subspace<F>,
        b: &Subspace<F>,
    ) -> Result<Subspace<F>, LieError> {
        let mut vectors = Vec::new();
        for x in a.basis_vectors() {
            for y in b.basis_vectors() {
                vectors.push(self.bracket(&x, &y)?);
            }
        }
        Ok(Subspace::span(self.dim(), &vectors)?)
    }

    pub fn derived_algebra(&self) -> Subspace<F> {
        let full = Subspace::full(self.dim());
        self.bracket_subspaces(&full, &full)
            .expect("subspaces live in this algebra")
    }

    /// Errors if the series has not reached zero after `dim + 1` steps.
    pub fn lower_central_series(&self) -> Result<LowerCentralSeries<F>, LieError> {
        let n = self.dim();
        let full = Subspace::full(n);
        let mut terms = Vec::new();
        let mut current = full.clone();
        for _ in 0..=n + 1 {
            if current.is_zero() {
                return Ok(LowerCentralSeries { terms });
            }
            let next = self.bracket_subspaces(&full, &current)?;
            terms.push(current);
            current = next;
        }
        Err(LieError::NotNilpotent { steps: n + 1 })
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().is_ok()
    }

    /// Centralizer `{x : [x, s] = 0 for all s ∈ S}`.
    pub fn centralizer(&self, s: &Subspace<F>) -> Subspace<F> {
        let n = self.dim();
        let gens = s.basis_vectors();
        if gens.is_empty() {
            return Subspace::full(n);
        }
        // [e_i, s] for each basis generator s, stacked
        let images: Vec<Vec<Vec<F>>> = (0..n)
            .map(|i| {
                let e = self.unit_vector(i);
                gens.iter()
                    .map(|g| self.bracket(&e, g).expect("lengths match"))
                    .collect()
            })
            .collect();
        let m = Matrix::from_fn(gens.len() * n, n, |row, i| {
            let (g, k) = (row / n, row % n);
            images[i][g][k].clone()
        });
        m.nullspace()
    }

    pub fn classify_shape(&self) -> Result<Shape, LieError> {
        let lcs = self.lower_central_series()?;
        let n = self.dim();
        let derived = lcs
            .terms()
            .get(1)
            .cloned()
            .unwrap_or_else(|| Subspace::zero(n));
        Ok(Shape {
            abelian: self.is_abelian(),
            filiform: n >= 2 && lcs.class() == n - 1,
            center_in_derived: self.center().is_subspace_of(&derived)?,
        })
    }

    /// `g ⊕ h` with `g`'s basis first; labels are concatenated.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.dim();
        let m = other.dim();
        let mut labels = self.labels().to_vec();
        labels.extend(other.labels().iter().cloned());
        let mut sc = StructureConstants::new(labels);
        for (&(i, j), v) in &self.sc.brackets {
            let mut w = v.clone();
            w.extend(std::iter::repeat_n(F::zero(), m));
            sc.brackets.insert((i, j), w);
        }
        for (&(i, j), v) in &other.sc.brackets {
            let mut w = vec![F::zero(); n];
            w.extend(v.iter().cloned());
            sc.brackets.insert((n + i, n + j), w);
        }
        LieAlgebra { sc }
    }

    /// Same structure constants pushed through a ring map into another field.
    pub fn map_scalars<G: Field>(&self, f: impl Fn(&F) -> G) -> Result<LieAlgebra<G>, LieError> {
        let mut sc = StructureConstants::new(self.labels().to_vec());
        for (&(i, j), v) in &self.sc.brackets {
            sc.set_bracket(i, j, v.iter().map(&f).collect())?;
        }
        LieAlgebra::new(sc)
    }
}

impl<F: Field> fmt::Display for LieAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = self.labels();
        if self.sc.brackets.is_empty() {
            return write!(f, "abelian on {{{}}}", labels.join(", "));
        }
        let mut first = true;
        for (&(i, j), v) in &self.sc.brackets {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            write!(
                f,
                "[{}, {}] = {}",
                labels[i],
                labels[j],
                format_vector(v, labels)
            )?;
        }
        Ok(())
    }
}

/// Renders a coordinate vector as a combination of basis labels.
pub fn format_vector<F: Field>(v: &[F], labels: &[String]) -> String {
    let mut out = String::new();
    for (c, l) in v.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let coeff = if c.is_one() {
            String::new()
        } else if *c == -F::one() {
            "-".to_string()
        } else {
            format!("({c})")
        };
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&coeff);
        out.push_str(l);
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// Embeds a rational algebra into ℚ(√d).
pub fn base_change(
    g: &LieAlgebra<Rational>,
    d: &Rational,
) -> Result<LieAlgebra<QuadExt>, LieError> {
    let radicand = Radicand::new(d.clone())?;
    g.map_scalars(|x| QuadExt::new(x.clone(), Rational::zero(), &radicand))
}

/// Strictly upper triangular `n × n` matrices on the basis `E_ij` (`i < j`),
/// ordered lexicographically, labelled `E12`, `E13`, …
pub fn nn_algebra<F: Field>(n: usize) -> Result<LieAlgebra<F>, LieError> {
    if n < 2 {
        return Err(LieError::InvalidParameter(format!(
            "n_n needs n >= 2, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let index = |p: (usize, usize)| pairs.iter().position(|&q| q == p);
    let labels = pairs.iter().map(|(i, j)| format!("E{}{}", i + 1, j + 1));
    let mut sc = StructureConstants::new(labels);
    let dim = pairs.len();
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate().skip(a + 1) {
            // [E_ij, E_kl] = δ_jk E_il − δ_li E_kj
            let mut v = vec![F::zero(); dim];
            if j == k {
                let t = index((i, l)).expect("i < j = k < l");
                v[t] = v[t].clone() + &F::one();
            }
            if l == i {
                let t = index((k, j)).expect("k < l = i < j");
                v[t] = v[t].clone() - &F::one();
            }
            sc.set_bracket(a, b, v)?;
        }
    }
    LieAlgebra::new(sc)
}
