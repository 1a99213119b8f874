use rayon::prelude::*;
use serde::Serialize;

use super::bounds::{resolve_mu, BoundCertificate, Bounds, CertificateKind};
use super::corpus::{
    available_variants, build_representation, published_representation, Provenance, Variant,
};
use super::golden::{expected, Expected};
use super::{AlgebraId, CatalogError, Verdict};

/// One row of a μ / μ_nil table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub algebra: AlgebraId,
    pub mu: Bounds,
    pub mu_nil: Bounds,
    pub expected: Option<Expected>,
    /// `None` when there is no published value or the bounds do not meet.
    pub matches: Option<bool>,
    pub paper_asserted: bool,
    pub deciding: Vec<CertificateKind>,
    pub certificates: Vec<BoundCertificate>,
}

impl TableRow {
    pub fn values(&self) -> Option<(usize, usize)> {
        Some((self.mu.value()?, self.mu_nil.value()?))
    }
}

/// Resolves every id, in input order.
pub fn table(ids: &[AlgebraId]) -> Result<Vec<TableRow>, CatalogError> {
    ids.par_iter()
        .map(|id| {
            let res = resolve_mu(id)?;
            let expected = expected(id);
            let matches = match (res.values(), &expected) {
                (Some((mu, nil)), Some(e)) => Some(mu == e.mu && nil == e.mu_nil),
                _ => None,
            };
            Ok(TableRow {
                algebra: id.clone(),
                paper_asserted: res.paper_asserted(),
                deciding: res.deciding_kinds(),
                certificates: res.certificates,
                mu: res.mu,
                mu_nil: res.mu_nil,
                expected,
                matches,
            })
        })
        .collect()
}

/// Verification outcome for one corpus entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryCheck {
    pub algebra: AlgebraId,
    pub variant: Variant,
    pub provenance: Provenance,
    pub verdict: Verdict,
    /// Verdict of the matrix as published, present when a patch replaces it.
    pub published: Option<Verdict>,
    /// Every check required for this variant holds.
    pub pass: bool,
}

impl EntryCheck {
    /// A published failure that ships with a verified replacement.
    pub fn is_covered_erratum(&self) -> bool {
        self.pass
            && self
                .published
                .as_ref()
                .is_some_and(|v| !v.homomorphism || !v.faithful)
    }
}

/// Every variant checked must be a faithful homomorphism; nilrep variants must
/// also be nilpotent with a valid Engel flag.
pub fn verdict_passes(variant: Variant, v: &Verdict) -> bool {
    let base = v.homomorphism && v.faithful;
    if variant.expects_nilrep() {
        base && v.nilrep && v.engel_flag == Some(true)
    } else {
        base
    }
}

/// Checks every available variant of every id, in input order.
pub fn check_corpus(ids: &[AlgebraId]) -> Result<Vec<EntryCheck>, CatalogError> {
    let jobs: Vec<(AlgebraId, Variant)> = ids
        .iter()
        .flat_map(|id| {
            available_variants(id)
                .into_iter()
                .map(move |v| (id.clone(), v))
        })
        .collect();
    jobs.par_iter()
        .map(|(id, variant)| {
            let cr = build_representation(id, *variant)?;
            let verdict = cr.rep.verdict();
            let published = match cr.provenance {
                Provenance::Patched => Some(published_representation(id, *variant)?.rep.verdict()),
                Provenance::Published => None,
            };
            Ok(EntryCheck {
                algebra: id.clone(),
                variant: *variant,
                provenance: cr.provenance,
                pass: verdict_passes(*variant, &verdict),
                verdict,
                published,
            })
        })
        .collect()
}
