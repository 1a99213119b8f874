use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CatalogError;
use crate::exactnum::Rational;

/// Number of isomorphism classes (counting each family once) per dimension.
const CLASS_COUNT: [u8; 7] = [0, 1, 1, 2, 3, 9, 26];

/// One-parameter families `L6,j(ε)`.
pub const FAMILIES: [u8; 4] = [19, 21, 22, 24];

/// Catalog key `L{dim},{index}` with the family parameter where required.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraId {
    dim: u8,
    index: u8,
    epsilon: Option<Rational>,
}

impl AlgebraId {
    pub fn new(dim: u8, index: u8, epsilon: Option<Rational>) -> Result<Self, CatalogError> {
        let count = CLASS_COUNT.get(usize::from(dim)).copied().unwrap_or(0);
        if index == 0 || index > count {
            return Err(CatalogError::UnknownAlgebra(format!("L{dim}_{index}")));
        }
        let family = is_family(dim, index);
        match (&epsilon, family) {
            (None, true) => Err(CatalogError::Parameter(format!("L{dim}_{index} needs eps"))),
            (Some(_), false) => Err(CatalogError::Parameter(format!(
                "L{dim}_{index} takes no eps"
            ))),
            _ => Ok(AlgebraId {
                dim,
                index,
                epsilon,
            }),
        }
    }

    /// Unparametrized algebra; panics on an invalid or parametrized key.
    pub fn plain(dim: u8, index: u8) -> Self {
        Self::new(dim, index, None).expect("valid unparametrized catalog key")
    }

    /// Family member `L6,index(ε)`.
    pub fn family(index: u8, epsilon: Rational) -> Result<Self, CatalogError> {
        Self::new(6, index, Some(epsilon))
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn index(&self) -> u8 {
        self.index
    }

    pub fn epsilon(&self) -> Option<&Rational> {
        self.epsilon.as_ref()
    }

    pub fn is_family(&self) -> bool {
        self.epsilon.is_some()
    }

    /// `L6_19` without the parameter.
    pub fn family_name(&self) -> String {
        format!("L{}_{}", self.dim, self.index)
    }

    /// Number of classes in a dimension, families counted once.
    pub fn class_count(dim: u8) -> u8 {
        CLASS_COUNT.get(usize::from(dim)).copied().unwrap_or(0)
    }
}

pub(crate) fn is_family(dim: u8, index: u8) -> bool {
    dim == 6 && FAMILIES.contains(&index)
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}_{}", self.dim, self.index)?;
        if let Some(e) = &self.epsilon {
            write!(f, "?eps={e}")?;
        }
        Ok(())
    }
}

impl FromStr for AlgebraId {
    type Err = CatalogError;

    /// Accepts `L6_19?eps=-1/1`, `L6_19?eps=-1` and `L6,19` style keys.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CatalogError::UnknownAlgebra(s.to_string());
        let (key, eps) = match s.trim().split_once('?') {
            Some((k, q)) => {
                let v = q.strip_prefix("eps=").ok_or_else(bad)?;
                let e: Rational = v
                    .parse()
                    .map_err(|_| CatalogError::Parameter(format!("bad eps in {s:?}")))?;
                (k, Some(e))
            }
            None => (s.trim(), None),
        };
        let body = key.strip_prefix('L').ok_or_else(bad)?;
        let (d, j) = body.split_once(['_', ',']).ok_or_else(bad)?;
        let dim: u8 = d.parse().map_err(|_| bad())?;
        let index: u8 = j.parse().map_err(|_| bad())?;
        AlgebraId::new(dim, index, eps)
    }
}

impl Serialize for AlgebraId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AlgebraId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_and_rejects() {
        let id: AlgebraId = "L6_19?eps=-1/1".parse().unwrap();
        assert_eq!(id.to_string(), "L6_19?eps=-1");
        assert_eq!(id.epsilon(), Some(&Rational::from(-1)));
        assert_eq!("L5,9".parse::<AlgebraId>().unwrap(), AlgebraId::plain(5, 9));
        assert!("L6_19".parse::<AlgebraId>().is_err());
        assert!("L5_9?eps=1".parse::<AlgebraId>().is_err());
        assert!("L5_10".parse::<AlgebraId>().is_err());
        assert!("L7_1".parse::<AlgebraId>().is_err());
        assert!("X5_1".parse::<AlgebraId>().is_err());
    }
}
