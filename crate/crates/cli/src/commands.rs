use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use nilrep::catalog::io::RepresentationFile;
use nilrep::catalog::{
    available_variants, build_algebra, build_representation, build_representation_over_extension,
    extension_variants, has_patch, n4_mismatch, published_representation, table, verdict_passes,
    AlgebraId, Bounds, CatalogError, Expected, Provenance, TableRow, Variant, Verdict,
};
use nilrep::exactnum::{rational_is_square, Rational};
use nilrep::liealg::io::AlgebraFile;
use nilrep::liealg::{LieAlgebra, LieError};
use nilrep::symbolic::{all_identities, run_suite, Status};

use crate::config::{EpsSamples, Selection, Target};
use crate::error::CliError;
use crate::render::Report;

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

fn bound_cell(b: &Bounds) -> String {
    match (b.value(), b.upper) {
        (Some(v), _) => v.to_string(),
        (None, Some(u)) => format!("{}..{u}", b.lower),
        (None, None) => format!("{}..?", b.lower),
    }
}

#[derive(Serialize)]
struct TableJsonRow<'a> {
    algebra: &'a AlgebraId,
    mu: Option<usize>,
    mu_nil: Option<usize>,
    expected: &'a Option<Expected>,
    matches: Option<bool>,
    paper_asserted: bool,
    mu_bounds: &'a Bounds,
    mu_nil_bounds: &'a Bounds,
    certificates: &'a [nilrep::catalog::BoundCertificate],
}

pub fn cmd_table(dim: u8, samples: &EpsSamples) -> Result<Report, CliError> {
    let mut rows: Vec<TableRow> = table(&samples.ids_of_dim(dim))?;
    rows.sort_by(|a, b| a.algebra.cmp(&b.algebra));
    let failed = rows.iter().any(|r| r.matches != Some(true));
    let cells = rows
        .iter()
        .map(|r| {
            let status = match (r.values(), r.matches) {
                (None, _) => "UNRESOLVED",
                (_, None) => "no reference",
                (_, Some(true)) => "ok",
                (_, Some(false)) => "MISMATCH",
            };
            let kinds: Vec<&str> = r.deciding.iter().map(|k| k.as_str()).collect();
            vec![
                r.algebra.to_string(),
                bound_cell(&r.mu),
                bound_cell(&r.mu_nil),
                r.expected
                    .as_ref()
                    .map_or("-".into(), |e| format!("{}/{}", e.mu, e.mu_nil)),
                status.to_string(),
                kinds.join(";"),
                if r.paper_asserted {
                    "paper-asserted lower bound"
                } else {
                    ""
                }
                .to_string(),
            ]
        })
        .collect();
    let json_rows: Vec<TableJsonRow> = rows
        .iter()
        .map(|r| TableJsonRow {
            algebra: &r.algebra,
            mu: r.mu.value(),
            mu_nil: r.mu_nil.value(),
            expected: &r.expected,
            matches: r.matches,
            paper_asserted: r.paper_asserted,
            mu_bounds: &r.mu,
            mu_nil_bounds: &r.mu_nil,
            certificates: &r.certificates,
        })
        .collect();
    let agree = rows.iter().filter(|r| r.matches == Some(true)).count();
    Ok(Report {
        columns: vec![
            "algebra",
            "mu",
            "mu_nil",
            "published",
            "status",
            "deciding",
            "note",
        ],
        rows: cells,
        notes: vec![format!(
            "{agree} of {} rows agree with the published table",
            rows.len()
        )],
        json: json!({ "dim": dim, "rows": json_rows, "all_match": !failed }),
        failed,
    })
}

/// One verified representation.
#[derive(Clone, Debug, Serialize)]
struct VerifyRecord {
    algebra: String,
    variant: String,
    field: String,
    provenance: Option<Provenance>,
    #[serde(flatten)]
    verdict: Verdict,
    pass: bool,
    /// Failure of a printed matrix that has a registered patch.
    known_erratum: bool,
}

impl VerifyRecord {
    fn cells(&self) -> Vec<String> {
        let v = &self.verdict;
        let status = match (self.pass, self.known_erratum) {
            (true, _) => "pass",
            (false, true) => "known erratum",
            (false, false) => "FAIL",
        };
        vec![
            self.algebra.clone(),
            self.variant.clone(),
            self.field.clone(),
            format!("{}->{}", v.source_dim, v.target_dim),
            yes_no(v.homomorphism),
            yes_no(v.faithful),
            yes_no(v.nilrep),
            v.engel_flag.map_or("-".into(), yes_no),
            self.provenance.map_or("user file".into(), |p| match p {
                Provenance::Published => "published".into(),
                Provenance::Patched => "patched".into(),
            }),
            status.into(),
        ]
    }

    fn violation_note(&self) -> Option<String> {
        let v = self.verdict.violation.as_ref()?;
        let rows: Vec<String> = v
            .residual
            .iter()
            .map(|r| format!("[{}]", r.join(", ")))
            .collect();
        Some(format!(
            "{} {}: bracket [{}, {}] not preserved; residual [{}]",
            self.algebra,
            self.variant,
            v.pair[0],
            v.pair[1],
            rows.join(", ")
        ))
    }
}

fn verify_one(
    id: &AlgebraId,
    variant: Variant,
    published: bool,
) -> Result<VerifyRecord, CatalogError> {
    let built = if published {
        published_representation(id, variant)
    } else {
        build_representation(id, variant)
    };
    let (verdict, field, provenance) = match built {
        Ok(cr) => (cr.rep.verdict(), "Q".to_string(), cr.provenance),
        Err(CatalogError::NeedsExtension { radicand, .. }) => {
            let cr = build_representation_over_extension(id, variant)?;
            (
                cr.rep.verdict(),
                format!("Q(sqrt({radicand}))"),
                cr.provenance,
            )
        }
        Err(e) => return Err(e),
    };
    let pass = verdict_passes(variant, &verdict);
    Ok(VerifyRecord {
        algebra: id.to_string(),
        variant: variant.to_string(),
        field,
        provenance: Some(provenance),
        known_erratum: !pass && published && has_patch(id, variant),
        verdict,
        pass,
    })
}

fn verify_file(path: &Path) -> Result<Vec<VerifyRecord>, CliError> {
    let text = read(path)?;
    let file: RepresentationFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let algebra = file.algebra.to_string();
    let rep = file.into_representation()?;
    let verdict = rep.verdict();
    let pass = verdict.homomorphism && verdict.faithful && verdict.engel_flag != Some(false);
    Ok(vec![VerifyRecord {
        algebra,
        variant: path
            .file_name()
            .map_or("file".into(), |n| n.to_string_lossy().into_owned()),
        field: "Q".into(),
        provenance: None,
        verdict,
        pass,
        known_erratum: false,
    }])
}

fn verify_report(mut records: Vec<VerifyRecord>) -> Report {
    records.sort_by_cached_key(|r| (r.algebra.parse::<AlgebraId>().ok(), r.variant.clone()));
    let failed = records.iter().any(|r| !r.pass && !r.known_erratum);
    let passed = records.iter().filter(|r| r.pass).count();
    let errata = records.iter().filter(|r| r.known_erratum).count();
    let mut notes: Vec<String> = records
        .iter()
        .filter_map(VerifyRecord::violation_note)
        .collect();
    notes.push(format!(
        "{passed} of {} representations pass, {errata} known errata",
        records.len()
    ));
    Report {
        columns: vec![
            "algebra", "variant", "field", "dims", "hom", "faithful", "nilrep", "engel", "source",
            "status",
        ],
        rows: records.iter().map(VerifyRecord::cells).collect(),
        notes,
        json: json!({ "representations": records, "all_pass": !failed }),
        failed,
    }
}

pub fn cmd_verify(
    select: &Selection,
    published: bool,
    samples: &EpsSamples,
) -> Result<Report, CliError> {
    let records = match select.resolve(samples)? {
        Target::File(path) => verify_file(&path)?,
        Target::Catalog(ids) => {
            let mut jobs = Vec::new();
            for (id, variant) in ids {
                match variant {
                    Some(v) => jobs.push((id, v)),
                    None => {
                        let mut vs = available_variants(&id);
                        vs.extend(extension_variants(&id));
                        if vs.is_empty() && select.selector.len() == 1 {
                            return Err(CliError::Input(format!(
                                "{id} has no representation over Q"
                            )));
                        }
                        jobs.extend(vs.into_iter().map(|v| (id.clone(), v)));
                    }
                }
            }
            jobs.par_iter()
                .map(|(id, v)| verify_one(id, *v, published))
                .collect::<Result<Vec<_>, CatalogError>>()
                .map_err(|e| match e {
                    CatalogError::VariantAbsent { .. } | CatalogError::UnknownVariant(_) => {
                        CliError::Input(e.to_string())
                    }
                    other => CliError::Catalog(other),
                })?
        }
    };
    Ok(verify_report(records))
}

/// Structural invariants of one algebra.
#[derive(Clone, Debug, Serialize)]
struct InvariantRecord {
    algebra: String,
    dim: usize,
    class: usize,
    lower_central_series: Vec<usize>,
    derived_dim: usize,
    center_dim: usize,
    center_in_derived_dim: usize,
    abelian: bool,
    filiform: bool,
    center_in_derived: bool,
    /// Dimension 6 with every invariant of `n_4` the bound engine checks.
    n4_like: bool,
}

fn invariants_of(name: String, g: &LieAlgebra<Rational>) -> Result<InvariantRecord, CliError> {
    let lcs = g.lower_central_series()?;
    let shape = g.classify_shape()?;
    let center = g.center();
    let derived = g.derived_algebra();
    let n4_like = g.dim() == 6 && n4_mismatch(g, |x| rational_is_square(x).is_some())?.is_none();
    Ok(InvariantRecord {
        algebra: name,
        dim: g.dim(),
        class: lcs.class(),
        lower_central_series: lcs.dims(),
        derived_dim: derived.dim(),
        center_in_derived_dim: center.intersection(&derived).map_err(LieError::from)?.dim(),
        center_dim: center.dim(),
        abelian: shape.abelian,
        filiform: shape.filiform,
        center_in_derived: shape.center_in_derived,
        n4_like,
    })
}

fn invariants_report(records: Vec<InvariantRecord>, failed: bool, notes: Vec<String>) -> Report {
    let rows = records
        .iter()
        .map(|r| {
            let lcs: Vec<String> = r
                .lower_central_series
                .iter()
                .map(ToString::to_string)
                .collect();
            vec![
                r.algebra.clone(),
                r.dim.to_string(),
                r.class.to_string(),
                lcs.join(","),
                r.derived_dim.to_string(),
                r.center_dim.to_string(),
                r.center_in_derived_dim.to_string(),
                yes_no(r.abelian),
                yes_no(r.filiform),
                yes_no(r.center_in_derived),
                yes_no(r.n4_like),
            ]
        })
        .collect();
    Report {
        columns: vec![
            "algebra",
            "dim",
            "class",
            "lcs",
            "derived",
            "center",
            "center_in_derived",
            "abelian",
            "filiform",
            "z_in_derived",
            "n4_like",
        ],
        rows,
        notes,
        json: json!({ "algebras": records }),
        failed,
    }
}

pub fn cmd_invariants(select: &Selection, samples: &EpsSamples) -> Result<Report, CliError> {
    let ids: Vec<AlgebraId> = match select.resolve(samples)? {
        Target::File(path) => return check_algebra_file(&read(&path)?, &path),
        Target::Catalog(ids) => ids.into_iter().map(|(id, _)| id).collect(),
    };
    let mut records = ids
        .par_iter()
        .map(|id| invariants_of(id.to_string(), &build_algebra(id)?))
        .collect::<Result<Vec<_>, CliError>>()?;
    records.sort_by_cached_key(|r| r.algebra.parse::<AlgebraId>().ok());
    Ok(invariants_report(records, false, Vec::new()))
}

#[derive(Serialize)]
struct IdentityRow {
    identity: String,
    status: Status,
    /// Sibling identity that holds where this displayed form does not.
    corrected_by: Option<String>,
    numeric_points: usize,
    numeric_agrees: bool,
    consistent: bool,
    clearing_factor: String,
    difference: Option<String>,
}

fn stem(name: &str) -> Option<&str> {
    name.strip_suffix(".published")
}

pub fn cmd_identities(seed: u64, random_checks: usize) -> Result<Report, CliError> {
    let suite = run_suite(&all_identities(), seed, random_checks)?;
    let matched = |name: &str| {
        suite
            .identities
            .iter()
            .any(|r| r.identity == name && r.status == Status::Match)
    };
    let rows: Vec<IdentityRow> = suite
        .identities
        .iter()
        .zip(&suite.numeric)
        .map(|(r, n)| {
            let corrected_by = match (r.status, stem(&r.identity)) {
                (Status::Mismatch, Some(s)) => [".corrected", ".mirrored"]
                    .iter()
                    .map(|suffix| format!("{s}{suffix}"))
                    .find(|sib| matched(sib)),
                _ => None,
            };
            IdentityRow {
                identity: r.identity.clone(),
                status: r.status,
                corrected_by,
                numeric_points: n.points,
                numeric_agrees: n.agrees,
                consistent: n.consistent,
                clearing_factor: r.clearing_factor.clone(),
                difference: r.difference.clone(),
            }
        })
        .collect();
    let failed = rows
        .iter()
        .any(|r| !r.consistent || (r.status == Status::Mismatch && r.corrected_by.is_none()));
    let cells = rows
        .iter()
        .map(|r| {
            vec![
                r.identity.clone(),
                match r.status {
                    Status::Match => "match".into(),
                    Status::Mismatch => "mismatch".into(),
                },
                r.corrected_by.clone().unwrap_or_default(),
                format!(
                    "{} at {} points",
                    if r.numeric_agrees { "agree" } else { "differ" },
                    r.numeric_points
                ),
                yes_no(r.consistent),
            ]
        })
        .collect();
    let matches = rows.iter().filter(|r| r.status == Status::Match).count();
    let corrected = rows.iter().filter(|r| r.corrected_by.is_some()).count();
    Ok(Report {
        columns: vec!["identity", "status", "corrected_by", "numeric", "consistent"],
        rows: cells,
        notes: vec![format!(
            "{matches} of {} identities match; {corrected} displayed forms hold only after correction; seed {seed}",
            rows.len()
        )],
        json: json!({ "seed": seed, "random_checks": random_checks, "identities": rows }),
        failed,
    })
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

fn check_algebra_file(text: &str, path: &Path) -> Result<Report, CliError> {
    let file: AlgebraFile = serde_json::from_str(text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let name = path
        .file_stem()
        .map_or("file".into(), |s| s.to_string_lossy().into_owned());
    match file.into_algebra() {
        Ok(g) => Ok(invariants_report(
            vec![invariants_of(name, &g)?],
            false,
            Vec::new(),
        )),
        Err(LieError::Jacobi {
            labels, residual, ..
        }) => Ok(Report {
            columns: vec!["algebra", "jacobi"],
            rows: vec![vec![name.clone(), "fails".into()]],
            notes: vec![format!(
                "Jacobi identity fails on ({labels}); residual {residual}"
            )],
            json: json!({ "algebra": name, "jacobi": false, "triple": labels, "residual": residual }),
            failed: true,
        }),
        Err(e) => Err(CliError::Input(format!("{}: {e}", path.display()))),
    }
}

/// Dispatches on the top-level keys: `images` marks a representation file.
pub fn cmd_check_file(path: &Path) -> Result<Report, CliError> {
    let text = read(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    if value.get("images").is_some() {
        Ok(verify_report(verify_file(path)?))
    } else {
        check_algebra_file(&text, path)
    }
}
