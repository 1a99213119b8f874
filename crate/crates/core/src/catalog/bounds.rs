use std::sync::OnceLock;

use serde::Serialize;

use super::corpus::{available_variants, build_representation};
use super::{build_algebra, AlgebraId, CatalogError, Representation};
use crate::exactnum::{ceil_two_sqrt, rational_is_square, Field, Rational, Ring};
use crate::liealg::{nn_algebra, LieAlgebra};
use crate::linalg::{Matrix, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Mu,
    MuNil,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateKind {
    Formula,
    Obstruction,
    PaperTheorem,
    ExternalCitation,
    VerifiedRepresentation,
}

impl CertificateKind {
    /// Kinds whose value the engine derives itself.
    pub fn is_checkable(self) -> bool {
        matches!(
            self,
            Self::Formula | Self::Obstruction | Self::VerifiedRepresentation
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Formula => "formula",
            Self::Obstruction => "obstruction",
            Self::PaperTheorem => "paper-theorem",
            Self::ExternalCitation => "external-citation",
            Self::VerifiedRepresentation => "verified-representation",
        }
    }
}

/// One-sided bound on μ or μ_nil with its justification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub target: Target,
    pub side: Side,
    pub value: usize,
    pub kind: CertificateKind,
    #[serde(rename = "ref")]
    pub reference: String,
    pub checkable: bool,
}

impl BoundCertificate {
    fn new(
        target: Target,
        side: Side,
        value: usize,
        kind: CertificateKind,
        reference: impl Into<String>,
    ) -> Self {
        BoundCertificate {
            target,
            side,
            value,
            kind,
            reference: reference.into(),
            checkable: kind.is_checkable(),
        }
    }

    fn lower(
        target: Target,
        value: usize,
        kind: CertificateKind,
        reference: impl Into<String>,
    ) -> Self {
        Self::new(target, Side::Lower, value, kind, reference)
    }

    /// Same bound moved to another target, keeping kind and checkability.
    fn moved(&self, target: Target, why: &str) -> Self {
        BoundCertificate {
            target,
            reference: format!("{why}; {}", self.reference),
            ..self.clone()
        }
    }
}

/// LCS dimensions of `n_n` for `n = 0, 1, …, 8` (empty for `n < 2`).
fn nn_lcs_dims(n: usize) -> &'static [usize] {
    static CACHE: OnceLock<Vec<Vec<usize>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        (0..=8)
            .map(|n| {
                if n < 2 {
                    return Vec::new();
                }
                nn_algebra::<Rational>(n)
                    .and_then(|g| g.lower_central_series())
                    .map(|s| s.dims())
                    .expect("n_n is nilpotent")
            })
            .collect()
    });
    cache.get(n).map_or(&[], Vec::as_slice)
}

fn term(dims: &[usize], k: usize) -> usize {
    dims.get(k - 1).copied().unwrap_or(0)
}

/// Why `g` (LCS dims `dims`) cannot sit inside `n_n` as a subalgebra.
fn nil_obstruction(dims: &[usize], n: usize) -> Option<String> {
    let nn = nn_lcs_dims(n);
    let dim = term(dims, 1);
    if dim > term(nn, 1) {
        return Some(format!("dim {dim} > {} = dim n_{n}", term(nn, 1)));
    }
    (2..=dims.len()).find_map(|k| {
        (term(dims, k) > term(nn, k)).then(|| {
            format!(
                "dim C^{k} = {} > {} = dim C^{k}(n_{n})",
                term(dims, k),
                term(nn, k)
            )
        })
    })
}

/// Why `g` admits no faithful `n`-dimensional representation: the image
/// is a nilrep plus at most one scalar direction, and `C^k` for `k ≥ 2`
/// lands in `C^k(n_n)`.
fn triangular_obstruction(dims: &[usize], n: usize) -> Option<String> {
    let nn = nn_lcs_dims(n);
    let dim = term(dims, 1);
    if dim > term(nn, 1) + 1 {
        return Some(format!("dim {dim} > {} + 1 = dim n_{n} + 1", term(nn, 1)));
    }
    (2..=dims.len()).find_map(|k| {
        (term(dims, k) > term(nn, k)).then(|| {
            format!(
                "dim C^{k} = {} > {} = dim C^{k}(n_{n})",
                term(dims, k),
                term(nn, k)
            )
        })
    })
}

/// Least `n` free of the obstruction, with the reason at `n − 1`.
fn first_unobstructed(
    dims: &[usize],
    obstruction: fn(&[usize], usize) -> Option<String>,
) -> (usize, Option<String>) {
    let mut reason = None;
    for n in 1.. {
        match obstruction(dims, n) {
            Some(r) => reason = Some(r),
            None => return (n, reason),
        }
    }
    unreachable!("n_n grows without bound")
}

/// Coordinates of `v` in the independent vectors `basis`, if `v` is in their span.
fn coordinates<F: Field>(basis: &[Vec<F>], v: &[F]) -> Option<Vec<F>> {
    let n = v.len();
    let k = basis.len();
    let m = Matrix::from_fn(n, k + 1, |i, j| {
        if j < k {
            basis[j][i].clone()
        } else {
            v[i].clone()
        }
    });
    let kernel = m.nullspace().basis_vectors();
    if v.iter().all(Ring::is_zero) {
        return Some(vec![F::zero(); k]);
    }
    let w = kernel.into_iter().find(|w| !w[k].is_zero())?;
    let t = w[k].inv()?;
    Some(w[..k].iter().map(|c| -(c.clone() * &t)).collect())
}

/// Extends `sub` to a basis of `whole` using `whole`'s basis vectors; returns
/// only the added vectors.
fn complement<F: Field>(sub: &Subspace<F>, whole: &Subspace<F>) -> Vec<Vec<F>> {
    let mut span = sub.clone();
    let mut out = Vec::new();
    for v in whole.basis_vectors() {
        if !span.contains_vector(&v).expect("same ambient space") {
            span = span
                .sum(&Subspace::span(span.ambient_dim(), std::slice::from_ref(&v)).expect("length"))
                .expect("same ambient space");
            out.push(v);
        }
    }
    out
}

/// Invariants a six-dimensional algebra shares with `n_4` if isomorphic to
/// it; returns the first one that differs.
///
/// Beyond the LCS and the center, the pairing `g/C² × C²/C³ → C³` has a
/// one-dimensional radical spanned by some `r`, and `q(u, w) = ⟨u, [r, w]⟩`
/// is a symmetric form on `g/(C² + kr)` whose determinant is well defined
/// up to squares. For `n_4` it is hyperbolic, so `−det q` is a nonzero square.
pub fn n4_mismatch<F: Field>(
    g: &LieAlgebra<F>,
    is_square: impl Fn(&F) -> bool,
) -> Result<Option<String>, CatalogError> {
    if g.dim() != 6 {
        return Ok(Some(format!("dim {} != 6", g.dim())));
    }
    let lcs = g.lower_central_series()?;
    let dims = lcs.dims();
    if dims != [6, 3, 1, 0] {
        return Ok(Some(format!("LCS dims {dims:?} differ from (6, 3, 1, 0)")));
    }
    let center = g.center().dim();
    if center != 1 {
        return Ok(Some(format!("center dim {center} != 1")));
    }
    let full = Subspace::full(6);
    let c2 = lcs.terms()[1].clone();
    let c3 = lcs.terms()[2].clone();
    let z = c3.basis_vectors().remove(0);
    let v1 = complement(&c2, &full);
    let v2 = complement(&c3, &c2);
    // λ(v) with v = λ·z
    let along_z =
        |v: &[F]| coordinates(std::slice::from_ref(&z), v).expect("bracket lies in C³")[0].clone();
    let pair = |u: &[F], w: &[F]| -> Result<F, CatalogError> { Ok(along_z(&g.bracket(u, w)?)) };
    let mut b = Vec::new();
    for u in &v1 {
        b.push(
            v2.iter()
                .map(|w| pair(u, w))
                .collect::<Result<Vec<F>, _>>()?,
        );
    }
    let radical = Matrix::from_fn(2, 3, |i, j| b[j][i].clone()).nullspace();
    if radical.dim() != 1 {
        return Ok(Some(format!(
            "pairing g/C2 x C2/C3 -> C3 has radical of dim {} (1 for n_4)",
            radical.dim()
        )));
    }
    let c = radical.basis_vectors().remove(0);
    let lift = |coeffs: &[F]| -> Vec<F> {
        let mut out = vec![F::zero(); 6];
        for (a, u) in coeffs.iter().zip(&v1) {
            for (o, x) in out.iter_mut().zip(u) {
                *o = o.clone() + &(a.clone() * x);
            }
        }
        out
    };
    let r = lift(&c);
    let rest = complement(&radical, &Subspace::full(3));
    let p: Vec<Vec<F>> = rest.iter().map(|coeffs| lift(coeffs)).collect();
    let mut c2_basis = v2.clone();
    c2_basis.push(z.clone());
    let q = |u: &[F], w: &[F]| -> Result<F, CatalogError> {
        let rw = g.bracket(&r, w)?;
        let k = coordinates(&c2_basis, &rw).expect("[r, w] lies in C²");
        let mut acc = F::zero();
        for (coef, wb) in k.iter().zip(&v2) {
            acc = acc + &(coef.clone() * &pair(u, wb)?);
        }
        Ok(acc)
    };
    let det = q(&p[0], &p[0])? * &q(&p[1], &p[1])? - &(q(&p[0], &p[1])? * &q(&p[1], &p[0])?);
    if det.is_zero() || !is_square(&-det.clone()) {
        return Ok(Some(format!(
            "form <u, [r, w]> has determinant {det}; -det is not a nonzero square"
        )));
    }
    Ok(None)
}

/// Algebras built as `h ⊕ k^m` whose leading coordinates span `h`.
fn summand(id: &AlgebraId) -> Option<AlgebraId> {
    match (id.dim(), id.index()) {
        (4, 2) => Some(AlgebraId::plain(3, 2)),
        (5, 2) => Some(AlgebraId::plain(4, 2)),
        (5, 3) => Some(AlgebraId::plain(4, 3)),
        (6, j) if (2..=9).contains(&j) => Some(AlgebraId::plain(5, j)),
        _ => None,
    }
}

fn leading_subalgebra(g: &LieAlgebra<Rational>, h: &LieAlgebra<Rational>) -> bool {
    let k = h.dim();
    (0..k).all(|i| {
        (i + 1..k).all(|j| {
            let v = g.basis_bracket(i, j);
            v[..k] == h.basis_bracket(i, j)[..] && v[k..].iter().all(Ring::is_zero)
        })
    })
}

fn rule_certificates(
    id: &AlgebraId,
    g: &LieAlgebra<Rational>,
) -> Result<Vec<BoundCertificate>, CatalogError> {
    use CertificateKind::*;
    use Target::*;
    let mut out = Vec::new();
    let dim = g.dim();
    let dims = g.lower_central_series()?.dims();
    let shape = g.classify_shape()?;
    if dim >= 1 {
        out.push(BoundCertificate::lower(Mu, 1, Formula, "nonzero algebra"));
    }
    if shape.abelian {
        let d = dim as u64;
        out.push(BoundCertificate::lower(
            Mu,
            ceil_two_sqrt(d.saturating_sub(1)) as usize,
            Formula,
            format!("abelian of dim {d}: ceil(2 sqrt({}))", d.saturating_sub(1)),
        ));
        out.push(BoundCertificate::lower(
            MuNil,
            ceil_two_sqrt(d) as usize,
            Formula,
            format!("abelian of dim {d}: ceil(2 sqrt({d}))"),
        ));
    }
    if shape.filiform && !shape.abelian {
        out.push(BoundCertificate::lower(
            Mu,
            dim,
            Formula,
            format!("filiform of dim {dim}"),
        ));
    }
    let (n, reason) = first_unobstructed(&dims, nil_obstruction);
    if let Some(r) = reason {
        out.push(BoundCertificate::lower(
            MuNil,
            n,
            Obstruction,
            format!("no embedding in n_{}: {r}", n - 1),
        ));
    }
    let (n, reason) = first_unobstructed(&dims, triangular_obstruction);
    if let Some(r) = reason {
        out.push(BoundCertificate::lower(
            Mu,
            n,
            Obstruction,
            format!("no faithful rep in dim {}: {r}", n - 1),
        ));
    }
    if dim == 6 {
        let square = |x: &Rational| rational_is_square(x).is_some();
        if let Some(r) = n4_mismatch(g, square)? {
            out.push(BoundCertificate::lower(
                MuNil,
                5,
                Obstruction,
                format!("not isomorphic to n_4: {r}"),
            ));
        }
    }
    let eps = id.epsilon();
    let nonzero_square = |x: &Rational| rational_is_square(x).is_some_and(|r| !r.is_zero());
    match (id.dim(), id.index()) {
        (6, 9) => out.push(BoundCertificate::lower(MuNil, 6, PaperTheorem, "published theorem: L6,9 has no faithful nilrep in dim 5")),
        (6, 24) if eps.is_some_and(|e| rational_is_square(e).is_none()) => out.push(BoundCertificate::lower(
            MuNil,
            6,
            PaperTheorem,
            "published theorem: L6,24(eps) with eps a nonsquare has no faithful nilrep in dim 5",
        )),
        (6, 19) if eps.is_some_and(|e| !nonzero_square(&-e.clone())) => out.push(BoundCertificate::lower(
            MuNil,
            5,
            PaperTheorem,
            "published theorem: L6,19(eps) is not n_4 unless -eps is a nonzero square",
        )),
        (6, 2) => out.push(BoundCertificate::lower(Mu, 5, ExternalCitation, "external result: mu(L5,2 + k) >= 5")),
        (5, 2) => out.push(BoundCertificate::lower(MuNil, 5, ExternalCitation, "external result: mu_nil(L3,2 + k^2) >= 5")),
        _ => {}
    }
    Ok(out)
}

/// Adds the bounds implied by `μ ≤ μ_nil` and, when the center lies in the
/// derived algebra, by `μ = μ_nil`.
fn couple(certs: &mut Vec<BoundCertificate>, center_in_derived: bool) {
    let snapshot = certs.clone();
    for c in &snapshot {
        match (c.side, c.target) {
            (Side::Lower, Target::Mu) => certs.push(c.moved(Target::MuNil, "mu <= mu_nil")),
            (Side::Upper, Target::MuNil) => certs.push(c.moved(Target::Mu, "mu <= mu_nil")),
            (Side::Lower, Target::MuNil) if center_in_derived => {
                certs.push(c.moved(Target::Mu, "center inside derived algebra, mu = mu_nil"))
            }
            (Side::Upper, Target::Mu) if center_in_derived => {
                certs.push(c.moved(Target::MuNil, "center inside derived algebra, mu = mu_nil"))
            }
            _ => {}
        }
    }
}

fn uncoupled_lower(
    id: &AlgebraId,
    g: &LieAlgebra<Rational>,
) -> Result<Vec<BoundCertificate>, CatalogError> {
    let mut certs = rule_certificates(id, g)?;
    if let Some(sub) = summand(id) {
        let h = build_algebra(&sub)?;
        if leading_subalgebra(g, &h) {
            for c in lower_bound_certificates(&sub)? {
                certs.push(BoundCertificate {
                    reference: format!("restriction to subalgebra {sub}: {}", c.reference),
                    ..c
                });
            }
        }
    }
    Ok(certs)
}

/// Lower bounds on μ and μ_nil: structural formulas, LCS obstructions,
/// `n_4` recognition, transfers from a leading direct summand, and cited
/// results (flagged uncheckable).
pub fn lower_bound_certificates(id: &AlgebraId) -> Result<Vec<BoundCertificate>, CatalogError> {
    let g = build_algebra(id)?;
    let mut certs = uncoupled_lower(id, &g)?;
    couple(&mut certs, g.classify_shape()?.center_in_derived);
    Ok(certs)
}

fn rep_certificates(rep: &Representation<Rational>, what: &str) -> Vec<BoundCertificate> {
    let mut out = Vec::new();
    if rep.check_homomorphism().is_ok() && rep.is_faithful() {
        let n = rep.target_dim();
        let kind = CertificateKind::VerifiedRepresentation;
        out.push(BoundCertificate::new(
            Target::Mu,
            Side::Upper,
            n,
            kind,
            format!("{what} ({n}x{n})"),
        ));
        if rep.is_nilrep() {
            out.push(BoundCertificate::new(
                Target::MuNil,
                Side::Upper,
                n,
                kind,
                format!("{what} ({n}x{n}, nilpotent)"),
            ));
        }
    }
    out
}

/// Upper bounds from every corpus representation that verifies, plus
/// scalar extensions of the summand's nilreps.
pub fn upper_bound_certificates(id: &AlgebraId) -> Result<Vec<BoundCertificate>, CatalogError> {
    let g = build_algebra(id)?;
    let mut out = Vec::new();
    for v in available_variants(id) {
        let c = build_representation(id, v)?;
        out.extend(rep_certificates(&c.rep, &format!("{v} of {id}")));
    }
    if let Some(sub) = summand(id) {
        let extra = g.dim() - build_algebra(&sub)?.dim();
        if extra == 1 {
            for v in available_variants(&sub) {
                let c = build_representation(&sub, v)?;
                if !c.rep.is_nilrep() {
                    continue;
                }
                let ext = c.rep.extend_by_scalar()?;
                if ext.source().same_structure(&g) {
                    let certs = rep_certificates(&ext, &format!("{v} of {sub} plus scalars"));
                    out.extend(certs.into_iter().filter(|c| c.target == Target::Mu));
                }
            }
        }
    }
    Ok(out)
}

/// Interval for one invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: usize,
    pub upper: Option<usize>,
    /// Best lower bound using checkable certificates only.
    pub checked_lower: usize,
}

impl Bounds {
    fn from_certs(certs: &[BoundCertificate], target: Target) -> Self {
        let of = |side: Side| {
            certs
                .iter()
                .filter(move |c| c.target == target && c.side == side)
        };
        Bounds {
            lower: of(Side::Lower).map(|c| c.value).max().unwrap_or(0),
            upper: of(Side::Upper).map(|c| c.value).min(),
            checked_lower: of(Side::Lower)
                .filter(|c| c.checkable)
                .map(|c| c.value)
                .max()
                .unwrap_or(0),
        }
    }

    pub fn value(&self) -> Option<usize> {
        (self.upper == Some(self.lower)).then_some(self.lower)
    }

    /// The lower bound rests on a certificate the engine does not re-derive.
    pub fn paper_asserted(&self) -> bool {
        self.checked_lower < self.lower
    }
}

/// Outcome of combining every certificate for one algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Resolution {
    pub algebra: AlgebraId,
    pub mu: Bounds,
    pub mu_nil: Bounds,
    pub certificates: Vec<BoundCertificate>,
}

impl Resolution {
    pub fn values(&self) -> Option<(usize, usize)> {
        Some((self.mu.value()?, self.mu_nil.value()?))
    }

    pub fn is_resolved(&self) -> bool {
        self.values().is_some()
    }

    pub fn paper_asserted(&self) -> bool {
        self.mu.paper_asserted() || self.mu_nil.paper_asserted()
    }

    /// Certificates attaining the final bounds.
    pub fn deciding(&self) -> Vec<&BoundCertificate> {
        let mut out = Vec::new();
        for (target, b) in [(Target::Mu, &self.mu), (Target::MuNil, &self.mu_nil)] {
            let best = |side: Side, value: Option<usize>, prefer_checkable: bool| {
                self.certificates
                    .iter()
                    .filter(|c| c.target == target && c.side == side && Some(c.value) == value)
                    .max_by_key(|c| {
                        (
                            c.checkable == prefer_checkable,
                            std::cmp::Reverse(c.reference.len()),
                        )
                    })
            };
            out.extend(best(Side::Lower, Some(b.lower), true));
            out.extend(best(Side::Upper, b.upper, true));
        }
        out
    }

    /// Distinct kinds among the deciding certificates, sorted.
    pub fn deciding_kinds(&self) -> Vec<CertificateKind> {
        let mut kinds: Vec<CertificateKind> = self.deciding().iter().map(|c| c.kind).collect();
        kinds.sort();
        kinds.dedup();
        kinds
    }
}

/// Combines lower certificates with upper bounds from verified
/// representations.
pub fn resolve_mu(id: &AlgebraId) -> Result<Resolution, CatalogError> {
    let g = build_algebra(id)?;
    let mut certs = uncoupled_lower(id, &g)?;
    certs.extend(upper_bound_certificates(id)?);
    couple(&mut certs, g.classify_shape()?.center_in_derived);
    Ok(Resolution {
        algebra: id.clone(),
        mu: Bounds::from_certs(&certs, Target::Mu),
        mu_nil: Bounds::from_certs(&certs, Target::MuNil),
        certificates: certs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nn_series_match_closed_form() {
        for n in 2..=8 {
            let expect: Vec<usize> = (1..=n).map(|k| (n - k) * (n - k + 1) / 2).collect();
            assert_eq!(nn_lcs_dims(n), expect.as_slice());
        }
    }

    #[test]
    fn n4_itself_passes_recognition() {
        let n4 = nn_algebra::<Rational>(4).unwrap();
        assert_eq!(
            n4_mismatch(&n4, |x| rational_is_square(x).is_some()).unwrap(),
            None
        );
    }

    #[test]
    fn coordinates_solve_and_reject() {
        let q = |x: i64| Rational::from(x);
        let basis = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]];
        assert_eq!(
            coordinates(&basis, &[q(2), q(5), q(3)]),
            Some(vec![q(2), q(3)])
        );
        assert_eq!(coordinates(&basis, &[q(1), q(0), q(0)]), None);
    }
}
