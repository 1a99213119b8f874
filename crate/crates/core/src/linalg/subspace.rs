use super::{LinalgError, Matrix};
use crate::exactnum::Field;

/// Subspace of `F^n`, stored as the nonzero rows of its canonical RREF basis.
///
/// Two subspaces are equal exactly when their stored bases are equal.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F> {
    ambient_dim: usize,
    basis: Matrix<F>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &Matrix<F>) -> Self {
        let r = m.rref();
        let basis = Matrix::from_fn(r.rank, m.cols(), |i, j| r.matrix.get(i, j).clone());
        Subspace {
            ambient_dim: m.cols(),
            basis,
        }
    }

    pub fn span(ambient_dim: usize, vectors: &[Vec<F>]) -> Result<Self, LinalgError> {
        Ok(Self::row_space(&Matrix::from_row_vectors(
            ambient_dim,
            vectors,
        )?))
    }

    /// Span of a subset of the standard basis.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let vectors: Vec<Vec<F>> = indices
            .iter()
            .map(|&i| {
                (0..ambient_dim)
                    .map(|j| if i == j { F::one() } else { F::zero() })
                    .collect()
            })
            .collect();
        Self::span(ambient_dim, &vectors).expect("unit vectors have ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vectors()
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient_dim == other.ambient_dim {
            Ok(())
        } else {
            Err(LinalgError::AmbientMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            })
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        Ok(Self::row_space(&self.basis.vstack(&other.basis)?))
    }

    /// Vectors orthogonal (for the standard dot product) to every basis row.
    pub fn annihilator(&self) -> Self {
        self.basis.nullspace()
    }

    /// Intersection as the common kernel of both annihilators.
    pub fn intersection(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let a = self.annihilator();
        let b = other.annihilator();
        Ok(a.basis.vstack(&b.basis)?.nullspace())
    }

    /// `self ⊆ other`, tested as `rank(stack(self, other)) = rank(other)`.
    pub fn is_subspace_of(&self, other: &Self) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(self.basis.vstack(&other.basis)?.rank() == other.dim())
    }

    pub fn contains_vector(&self, v: &[F]) -> Result<bool, LinalgError> {
        if v.len() != self.ambient_dim {
            return Err(LinalgError::AmbientMismatch {
                left: self.ambient_dim,
                right: v.len(),
            });
        }
        let line = Self::span(self.ambient_dim, &[v.to_vec()])?;
        line.is_subspace_of(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn e(n: usize, idx: &[usize]) -> Subspace<Rational> {
        Subspace::coordinate(n, idx)
    }

    #[test]
    fn lattice_examples() {
        assert!(e(3, &[0]).is_subspace_of(&e(3, &[0, 1])).unwrap());
        assert!(!e(3, &[0, 1]).is_subspace_of(&e(3, &[0])).unwrap());
        assert_eq!(
            e(3, &[0, 1]).intersection(&e(3, &[1, 2])).unwrap(),
            e(3, &[1])
        );
        assert_eq!(e(3, &[0]).sum(&e(3, &[1])).unwrap(), e(3, &[0, 1]));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        assert!(matches!(
            e(3, &[0]).sum(&e(2, &[0])),
            Err(LinalgError::AmbientMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn full_and_zero_edges() {
        let full = Subspace::<Rational>::full(3);
        let zero = Subspace::<Rational>::zero(3);
        assert_eq!(full.intersection(&full).unwrap(), full);
        assert_eq!(full.intersection(&zero).unwrap(), zero);
        assert!(zero.is_subspace_of(&full).unwrap());
        assert_eq!(zero.annihilator(), full);
    }

    #[test]
    fn equality_is_canonical() {
        let q = |x: i64| Rational::from(x);
        let a = Subspace::span(3, &[vec![q(1), q(1), q(0)], vec![q(1), q(-1), q(0)]]).unwrap();
        assert_eq!(a, e(3, &[0, 1]));
        assert!(a.contains_vector(&[q(5), q(7), q(0)]).unwrap());
        assert!(!a.contains_vector(&[q(0), q(0), q(1)]).unwrap());
    }
}
