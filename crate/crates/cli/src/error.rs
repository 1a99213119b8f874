use std::path::PathBuf;

use nilrep::catalog::CatalogError;
use nilrep::liealg::LieError;
use nilrep::symbolic::expr::ExprError;
use thiserror::Error;

/// Errors that stop a run before a verdict exists. All map to exit code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write output: {0}")]
    Write(#[from] std::io::Error),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
