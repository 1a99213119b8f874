use super::LieError;
use crate::exactnum::Field;
use crate::linalg::{Matrix, Subspace};

/// Lie algebra of `n × n` matrices spanned by a list of generators.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixLieAlgebra<F> {
    ambient: usize,
    generators: Vec<Matrix<F>>,
}

/// A commutator of two generators that falls outside their span.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosureWitness<F> {
    pub pair: (usize, usize),
    pub commutator: Matrix<F>,
}

impl<F: Field> MatrixLieAlgebra<F> {
    pub fn new(ambient: usize, generators: Vec<Matrix<F>>) -> Result<Self, LieError> {
        if let Some(g) = generators.iter().find(|g| g.shape() != (ambient, ambient)) {
            return Err(LieError::LengthMismatch {
                expected: ambient,
                found: g.rows().max(g.cols()),
            });
        }
        Ok(MatrixLieAlgebra {
            ambient,
            generators,
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn generators(&self) -> &[Matrix<F>] {
        &self.generators
    }

    /// Span of the flattened generators inside `F^{n²}`.
    pub fn span(&self) -> Subspace<F> {
        let n2 = self.ambient * self.ambient;
        let rows: Vec<Vec<F>> = self
            .generators
            .iter()
            .map(|g| g.entries().to_vec())
            .collect();
        Subspace::span(n2, &rows).expect("generators are n x n")
    }

    /// Dimension of the span of the generators.
    pub fn dim(&self) -> usize {
        self.span().dim()
    }

    pub fn closure_check(&self) -> Result<(), ClosureWitness<F>> {
        let span = self.span();
        for (i, a) in self.generators.iter().enumerate() {
            for (j, b) in self.generators.iter().enumerate().skip(i + 1) {
                let c = a.commutator(b).expect("generators are n x n");
                if !span.contains_vector(c.entries()).expect("ambient n²") {
                    return Err(ClosureWitness {
                        pair: (i, j),
                        commutator: c,
                    });
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    #[test]
    fn closure_examples() {
        let e = |i, j| Matrix::<Rational>::unit(2, i, j);
        let sl = MatrixLieAlgebra::new(2, vec![e(0, 1), e(1, 0)]).unwrap();
        let w = sl.closure_check().unwrap_err();
        assert_eq!(w.pair, (0, 1));
        assert_eq!(w.commutator, &e(0, 0) - &e(1, 1));

        let e3 = |i, j| Matrix::<Rational>::unit(3, i, j);
        let ab = MatrixLieAlgebra::new(3, vec![e3(0, 1), e3(0, 2)]).unwrap();
        assert!(ab.closure_check().is_ok());
        assert_eq!(ab.dim(), 2);
    }
}
