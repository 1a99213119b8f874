use serde::Serialize;

use super::CatalogError;
use crate::exactnum::Field;
use crate::liealg::{format_vector, LieAlgebra};
use crate::linalg::{Matrix, Subspace};

/// Linear map from a Lie algebra to `gl(n)`, given on the basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<F> {
    source: LieAlgebra<F>,
    target_dim: usize,
    images: Vec<Matrix<F>>,
}

/// First basis pair on which the bracket is not preserved.
#[derive(Clone, Debug, PartialEq)]
pub struct HomViolation<F> {
    pub pair: (usize, usize),
    pub labels: (String, String),
    /// `[ρ(e_i), ρ(e_j)] − ρ([e_i, e_j])`.
    pub residual: Matrix<F>,
}

/// Engel flag construction stalled: no common kernel vector modulo the
/// partial flag of this dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct EngelFailure<F> {
    pub stage: usize,
    pub partial_flag: Vec<Vec<F>>,
}

/// Every verifier verdict for one representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub source_dim: usize,
    pub target_dim: usize,
    pub homomorphism: bool,
    pub violation: Option<ViolationReport>,
    pub faithful: bool,
    pub nilrep: bool,
    /// `None` when the representation is not a nilrep.
    pub engel_flag: Option<bool>,
}

/// Printable form of a [`HomViolation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ViolationReport {
    pub pair: [String; 2],
    pub residual: Vec<Vec<String>>,
}

impl<F: Field> From<&HomViolation<F>> for ViolationReport {
    fn from(v: &HomViolation<F>) -> Self {
        ViolationReport {
            pair: [v.labels.0.clone(), v.labels.1.clone()],
            residual: v
                .residual
                .row_vectors()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

impl<F: Field> Representation<F> {
    pub fn new(source: LieAlgebra<F>, images: Vec<Matrix<F>>) -> Result<Self, CatalogError> {
        if images.len() != source.dim() {
            return Err(CatalogError::Shape(format!(
                "{} images for an algebra of dimension {}",
                images.len(),
                source.dim()
            )));
        }
        let target_dim = images.first().map_or(0, Matrix::rows);
        if let Some(m) = images
            .iter()
            .find(|m| m.shape() != (target_dim, target_dim))
        {
            return Err(CatalogError::Shape(format!(
                "image of shape {:?}, expected {target_dim}x{target_dim}",
                m.shape()
            )));
        }
        Ok(Representation {
            source,
            target_dim,
            images,
        })
    }

    pub fn source(&self) -> &LieAlgebra<F> {
        &self.source
    }

    pub fn target_dim(&self) -> usize {
        self.target_dim
    }

    pub fn images(&self) -> &[Matrix<F>] {
        &self.images
    }

    /// `ρ(v) = Σ v_k ρ(e_k)`.
    pub fn image_of(&self, v: &[F]) -> Matrix<F> {
        let mut out = Matrix::zeros(self.target_dim, self.target_dim);
        for (c, m) in v.iter().zip(&self.images) {
            if !c.is_zero() {
                out = &out + &m.scale(c);
            }
        }
        out
    }

    pub fn check_homomorphism(&self) -> Result<(), HomViolation<F>> {
        let n = self.source.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.images[i]
                    .commutator(&self.images[j])
                    .expect("square images of equal size");
                let rhs = self.image_of(&self.source.basis_bracket(i, j));
                let residual = &lhs - &rhs;
                if !residual.is_zero() {
                    let labels = self.source.labels();
                    return Err(HomViolation {
                        pair: (i, j),
                        labels: (labels[i].clone(), labels[j].clone()),
                        residual,
                    });
                }
            }
        }
        Ok(())
    }

    /// Injective on the source: the flattened images are independent.
    pub fn is_faithful(&self) -> bool {
        let rows: Vec<Vec<F>> = self.images.iter().map(|m| m.entries().to_vec()).collect();
        let width = self.target_dim * self.target_dim;
        Matrix::from_row_vectors(width, &rows)
            .map(|m| m.rank())
            .unwrap_or(0)
            == self.source.dim()
    }

    /// Every basis image is nilpotent.
    pub fn is_nilrep(&self) -> bool {
        self.images
            .iter()
            .all(|m| m.is_nilpotent().unwrap_or(false))
    }

    /// Invertible `T` with every `T⁻¹ ρ(e_k) T` strictly upper triangular.
    ///
    /// Column `k` of `T` is a vector mapped by every image into the span of
    /// the earlier columns.
    pub fn engel_flag(&self) -> Result<Matrix<F>, EngelFailure<F>> {
        let n = self.target_dim;
        let mut flag: Vec<Vec<F>> = Vec::with_capacity(n);
        while flag.len() < n {
            let w = Subspace::span(n, &flag).expect("vectors of length n");
            let ann = w.annihilator().basis_vectors();
            let mut rows = Vec::new();
            for m in &self.images {
                let mt = m.transpose();
                for a in &ann {
                    rows.push(mt.apply(a).expect("length n"));
                }
            }
            let u = if rows.is_empty() {
                Subspace::full(n)
            } else {
                Matrix::from_row_vectors(n, &rows)
                    .expect("rows of length n")
                    .nullspace()
            };
            let next = u
                .basis_vectors()
                .into_iter()
                .find(|v| !w.contains_vector(v).expect("length n"));
            match next {
                Some(v) => flag.push(v),
                None => {
                    return Err(EngelFailure {
                        stage: flag.len(),
                        partial_flag: flag,
                    })
                }
            }
        }
        Ok(Matrix::from_row_vectors(n, &flag)
            .expect("rows of length n")
            .transpose())
    }

    /// `T⁻¹ ρ T` for invertible `T`.
    pub fn conjugate(&self, t: &Matrix<F>) -> Result<Self, CatalogError> {
        let t_inv = t
            .inverse()
            .ok_or_else(|| CatalogError::Shape("conjugating matrix is singular".into()))?;
        let images = self
            .images
            .iter()
            .map(|m| Ok(t_inv.checked_mul(&m.checked_mul(t)?)?))
            .collect::<Result<Vec<_>, CatalogError>>()?;
        Representation::new(self.source.clone(), images)
    }

    /// Splits each image as `c·I + N` with `N` strictly upper triangular.
    /// Returns the scalars `c` per basis vector and the representation `X ↦ N(X)`.
    pub fn split_scalar_plus_nilpotent(&self) -> Result<(Vec<F>, Self), CatalogError> {
        let mut weights = Vec::with_capacity(self.images.len());
        let mut nil = Vec::with_capacity(self.images.len());
        for (k, m) in self.images.iter().enumerate() {
            let c = if self.target_dim == 0 {
                F::zero()
            } else {
                m.get(0, 0).clone()
            };
            let n = m.checked_sub(&Matrix::identity(self.target_dim).scale(&c))?;
            if !n.is_strictly_upper()? {
                return Err(CatalogError::NotApplicable(format!(
                    "image of {} is not scalar plus strictly upper triangular",
                    self.source.labels()[k]
                )));
            }
            weights.push(c);
            nil.push(n);
        }
        Ok((weights, Representation::new(self.source.clone(), nil)?))
    }

    /// `(X, a) ↦ ρ(X) + a·I` on `g ⊕ k`.
    pub fn extend_by_scalar(&self) -> Result<Self, CatalogError> {
        if !self.is_nilrep() {
            return Err(CatalogError::NotApplicable(
                "extension by a scalar needs a nilrepresentation".into(),
            ));
        }
        let source = self.source.direct_sum(&LieAlgebra::abelian(1));
        let mut images = self.images.clone();
        images.push(Matrix::identity(self.target_dim));
        Representation::new(source, images)
    }

    pub fn verdict(&self) -> Verdict {
        let hom = self.check_homomorphism();
        let nilrep = self.is_nilrep();
        Verdict {
            source_dim: self.source.dim(),
            target_dim: self.target_dim,
            homomorphism: hom.is_ok(),
            violation: hom.as_ref().err().map(ViolationReport::from),
            faithful: self.is_faithful(),
            nilrep,
            engel_flag: nilrep.then(|| self.engel_flag().is_ok_and(|t| self.flag_is_valid(&t))),
        }
    }

    /// `T` is invertible and triangularizes every image strictly.
    pub fn flag_is_valid(&self, t: &Matrix<F>) -> bool {
        self.conjugate(t)
            .map(|c| {
                c.images
                    .iter()
                    .all(|m| m.is_strictly_upper().unwrap_or(false))
            })
            .unwrap_or(false)
    }
}

impl<F: Field> HomViolation<F> {
    pub fn describe(&self, g: &LieAlgebra<F>) -> String {
        let bracket = g.basis_bracket(self.pair.0, self.pair.1);
        format!(
            "[{}, {}] = {} not preserved, residual {:?}",
            self.labels.0,
            self.labels.1,
            format_vector(&bracket, g.labels()),
            self.residual
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn q(x: i64) -> Rational {
        Rational::from(x)
    }

    #[test]
    fn zero_images_on_abelian_are_a_homomorphism_but_not_faithful() {
        let g = LieAlgebra::<Rational>::abelian(2);
        let rep = Representation::new(g, vec![Matrix::zeros(3, 3), Matrix::zeros(3, 3)]).unwrap();
        assert!(rep.check_homomorphism().is_ok());
        assert!(!rep.is_faithful());
        assert!(rep.is_nilrep());
    }

    #[test]
    fn engel_flag_of_lower_unit_is_the_swap() {
        let g = LieAlgebra::<Rational>::abelian(1);
        let rep = Representation::new(g, vec![Matrix::unit(2, 1, 0)]).unwrap();
        let t = rep.engel_flag().unwrap();
        assert!(rep.flag_is_valid(&t));
        assert_eq!(t.apply(&[q(1), q(0)]).unwrap(), vec![q(0), q(1)]);
    }

    #[test]
    fn engel_flag_fails_on_non_nilpotent() {
        let g = LieAlgebra::<Rational>::abelian(1);
        let rep = Representation::new(g, vec![Matrix::identity(2)]).unwrap();
        assert_eq!(rep.engel_flag().unwrap_err().stage, 0);
    }

    #[test]
    fn split_rejects_non_scalar_diagonal() {
        let g = LieAlgebra::<Rational>::abelian(1);
        let m = Matrix::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(2)]]).unwrap();
        let rep = Representation::new(g, vec![m]).unwrap();
        assert!(matches!(
            rep.split_scalar_plus_nilpotent(),
            Err(CatalogError::NotApplicable(_))
        ));
    }

    #[test]
    fn extend_by_scalar_of_zero_dim_algebra_is_the_scalar_line() {
        let g = LieAlgebra::<Rational>::abelian(0);
        let rep = Representation {
            source: g,
            target_dim: 1,
            images: vec![],
        };
        let ext = rep.extend_by_scalar().unwrap();
        assert_eq!(ext.images(), &[Matrix::identity(1)]);
        assert!(ext.check_homomorphism().is_ok() && ext.is_faithful());
    }
}
