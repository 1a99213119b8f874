//! Representation files: `{"algebra": "L6_19?eps=-1", "target_dim": n, "images": [matrix, ...]}`
//! with matrices as arrays of rows of `"p/q"` strings.

use serde::{Deserialize, Serialize};

use super::{build_algebra, AlgebraId, CatalogError, Representation};
use crate::exactnum::Rational;
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationFile {
    pub algebra: AlgebraId,
    pub target_dim: usize,
    pub images: Vec<Matrix<Rational>>,
}

impl RepresentationFile {
    pub fn new(algebra: AlgebraId, rep: &Representation<Rational>) -> Self {
        RepresentationFile {
            algebra,
            target_dim: rep.target_dim(),
            images: rep.images().to_vec(),
        }
    }

    /// Builds the representation on the catalog algebra named in the file.
    pub fn into_representation(self) -> Result<Representation<Rational>, CatalogError> {
        if let Some(m) = self
            .images
            .iter()
            .find(|m| m.shape() != (self.target_dim, self.target_dim))
        {
            return Err(CatalogError::Shape(format!(
                "image of shape {:?} but target_dim is {}",
                m.shape(),
                self.target_dim
            )));
        }
        Representation::new(build_algebra(&self.algebra)?, self.images)
    }
}

pub fn representation_from_json(
    s: &str,
) -> Result<(AlgebraId, Representation<Rational>), CatalogError> {
    let file: RepresentationFile =
        serde_json::from_str(s).map_err(|e| CatalogError::Format(e.to_string()))?;
    let id = file.algebra.clone();
    Ok((id, file.into_representation()?))
}

pub fn representation_to_json(id: &AlgebraId, rep: &Representation<Rational>) -> String {
    serde_json::to_string_pretty(&RepresentationFile::new(id.clone(), rep))
        .expect("plain data serializes")
}
