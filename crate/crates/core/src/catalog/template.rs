use super::CatalogError;
use crate::exactnum::{Field, Rational};
use crate::linalg::Matrix;
use crate::symbolic::expr::{Evaluator, Expr, ExprError};

/// Table matrix written as `|`-separated rows of linear forms in the
/// coordinates. Coordinates are matched to basis vectors by position; `e`
/// stands for ε and `r` for the square root named by the entry.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Template {
    pub coords: &'static [&'static str],
    pub rows: &'static [&'static str],
}

#[derive(Clone, Debug)]
enum Lin<F> {
    Const(F),
    Form(Vec<F>),
}

struct LinEval<'a, F> {
    coords: &'a [&'a str],
    eps: Option<F>,
    root: Option<F>,
}

impl<F: Field> LinEval<'_, F> {
    fn combine(&self, a: Lin<F>, b: Lin<F>, sign: F) -> Result<Lin<F>, ExprError> {
        Ok(match (a, b) {
            (Lin::Const(x), Lin::Const(y)) => Lin::Const(x + &(sign * &y)),
            (Lin::Form(u), Lin::Form(v)) => Lin::Form(
                u.into_iter()
                    .zip(v)
                    .map(|(x, y)| x + &(sign.clone() * &y))
                    .collect(),
            ),
            // `sub` handles `0 - form` itself
            (Lin::Form(u), Lin::Const(c)) | (Lin::Const(c), Lin::Form(u)) if c.is_zero() => {
                Lin::Form(u)
            }
            _ => {
                return Err(ExprError::Domain(
                    "entry mixes constants and coordinates".into(),
                ))
            }
        })
    }
}

impl<F: Field> Evaluator for LinEval<'_, F> {
    type Value = Lin<F>;

    fn number(&self, n: &Rational) -> Result<Lin<F>, ExprError> {
        Ok(Lin::Const(F::from_rational(n)))
    }

    fn name(&self, name: &str) -> Result<Lin<F>, ExprError> {
        if let Some(k) = self.coords.iter().position(|&c| c == name) {
            let mut v = vec![F::zero(); self.coords.len()];
            v[k] = F::one();
            return Ok(Lin::Form(v));
        }
        let missing =
            |what: &str| ExprError::Domain(format!("template uses {what} but none was supplied"));
        match name {
            "e" => self
                .eps
                .clone()
                .map(Lin::Const)
                .ok_or_else(|| missing("eps")),
            "r" => self
                .root
                .clone()
                .map(Lin::Const)
                .ok_or_else(|| missing("a square root")),
            _ => Err(ExprError::UnknownName(name.to_string())),
        }
    }

    fn add(&self, a: Lin<F>, b: Lin<F>) -> Result<Lin<F>, ExprError> {
        self.combine(a, b, F::one())
    }

    fn sub(&self, a: Lin<F>, b: Lin<F>) -> Result<Lin<F>, ExprError> {
        match (a, b) {
            (Lin::Const(c), Lin::Form(v)) if c.is_zero() => {
                Ok(Lin::Form(v.into_iter().map(|x| -x).collect()))
            }
            (a, b) => self.combine(a, b, -F::one()),
        }
    }

    fn mul(&self, a: Lin<F>, b: Lin<F>) -> Result<Lin<F>, ExprError> {
        Ok(match (a, b) {
            (Lin::Const(x), Lin::Const(y)) => Lin::Const(x * &y),
            (Lin::Const(c), Lin::Form(v)) | (Lin::Form(v), Lin::Const(c)) => {
                Lin::Form(v.into_iter().map(|x| c.clone() * &x).collect())
            }
            (Lin::Form(_), Lin::Form(_)) => {
                return Err(ExprError::Domain("entry is not linear".into()))
            }
        })
    }

    fn div(&self, a: Lin<F>, b: Lin<F>) -> Result<Lin<F>, ExprError> {
        let Lin::Const(c) = b else {
            return Err(ExprError::Domain("division by a coordinate".into()));
        };
        let inv = c
            .inv()
            .ok_or_else(|| ExprError::NonInvertible(c.to_string()))?;
        self.mul(a, Lin::Const(inv))
    }

    fn neg(&self, a: Lin<F>) -> Result<Lin<F>, ExprError> {
        Ok(match a {
            Lin::Const(c) => Lin::Const(-c),
            Lin::Form(v) => Lin::Form(v.into_iter().map(|x| -x).collect()),
        })
    }
}

impl Template {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn uses_root(&self) -> bool {
        self.names().iter().any(|n| n == "r")
    }

    pub fn uses_eps(&self) -> bool {
        self.names().iter().any(|n| n == "e")
    }

    fn names(&self) -> Vec<String> {
        self.rows
            .iter()
            .flat_map(|r| r.split('|'))
            .filter_map(|s| Expr::parse(s.trim()).ok())
            .flat_map(|e| e.names())
            .collect()
    }

    /// Images of the basis vectors: image `k` is the matrix read at the `k`-th
    /// unit coordinate vector.
    pub fn instantiate<F: Field>(
        &self,
        eps: Option<F>,
        root: Option<F>,
    ) -> Result<Vec<Matrix<F>>, CatalogError> {
        let n = self.size();
        let ev = LinEval {
            coords: self.coords,
            eps,
            root,
        };
        let m = self.coords.len();
        let mut entries: Vec<Vec<Vec<F>>> = Vec::with_capacity(n);
        for (i, row) in self.rows.iter().enumerate() {
            let cells: Vec<&str> = row.split('|').map(str::trim).collect();
            if cells.len() != n {
                return Err(CatalogError::Template(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    cells.len()
                )));
            }
            let mut parsed = Vec::with_capacity(n);
            for cell in cells {
                let err = |e: ExprError| CatalogError::Template(format!("entry {cell:?}: {e}"));
                let value = Expr::parse(cell).map_err(err)?.eval(&ev).map_err(err)?;
                parsed.push(match value {
                    Lin::Form(v) => v,
                    Lin::Const(c) if c.is_zero() => vec![F::zero(); m],
                    Lin::Const(c) => {
                        return Err(CatalogError::Template(format!(
                            "constant entry {c} in {cell:?}"
                        )))
                    }
                });
            }
            entries.push(parsed);
        }
        Ok((0..m)
            .map(|k| Matrix::from_fn(n, n, |i, j| entries[i][j][k].clone()))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_images_at_unit_coordinates() {
        let t = Template {
            coords: &["x1", "x2"],
            rows: &["0|x1 - (1/r)x2", "0|e x2"],
        };
        let imgs = t
            .instantiate(Some(Rational::from(3)), Some(Rational::from(2)))
            .unwrap();
        assert_eq!(imgs[0], Matrix::unit(2, 0, 1));
        assert_eq!(*imgs[1].get(0, 1), "-1/2".parse::<Rational>().unwrap());
        assert_eq!(*imgs[1].get(1, 1), Rational::from(3));
        assert!(t.uses_root() && t.uses_eps());
    }

    #[test]
    fn rejects_nonlinear_and_constant_entries() {
        let bad = |row: &'static str| Template {
            coords: &["x1"],
            rows: Box::leak(Box::new([row])),
        };
        assert!(bad("x1 x1").instantiate::<Rational>(None, None).is_err());
        assert!(bad("1").instantiate::<Rational>(None, None).is_err());
        assert!(bad("r x1").instantiate::<Rational>(None, None).is_err());
        assert!(bad("x1/0").instantiate::<Rational>(None, None).is_err());
        assert!(bad("0").instantiate::<Rational>(None, None).unwrap()[0].is_zero());
    }
}
