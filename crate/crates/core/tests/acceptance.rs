//! Acceptance gate: one PASS/FAIL line per criterion. Exits nonzero if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nilrep::catalog::{
    all_ids, build_algebra, build_representation, build_representation_over_extension,
    check_corpus, default_eps_samples, family_isomorphic, ids_of_dim, lower_bound_certificates,
    resolve_mu, table, AlgebraId, CertificateKind, Provenance, Target, Variant, FAMILIES,
};
use nilrep::exactnum::{Rational, Ring};
use nilrep::liealg::LieAlgebra;
use nilrep::linalg::{Matrix, Subspace};
use nilrep::symbolic::{all_identities, run_suite, Identity, DEFAULT_SEED};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn corpus_verification() -> Outcome {
    let start = Instant::now();
    let ids = all_ids();
    let checks = check_corpus(&ids).map_err(err)?;
    let elapsed = start.elapsed();
    let failing: Vec<String> = checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{} {}", c.algebra, c.variant))
        .collect();
    ensure(failing.is_empty(), || {
        format!("failing entries: {}", failing.join(", "))
    })?;
    let patched: Vec<_> = checks
        .iter()
        .filter(|c| c.provenance == Provenance::Patched)
        .collect();
    let uncovered: Vec<String> = patched
        .iter()
        .filter(|c| {
            c.published
                .as_ref()
                .is_some_and(|v| v.homomorphism && v.faithful)
                || !c.pass
        })
        .map(|c| format!("{} {}", c.algebra, c.variant))
        .collect();
    let errata = patched.len() - uncovered.len();
    for eps in default_eps_samples(19) {
        let id = AlgebraId::family(19, eps).map_err(err)?;
        ensure(
            checks
                .iter()
                .any(|c| c.algebra == id && c.variant == Variant::Pi1),
            || format!("{id} pi1 missing"),
        )?;
    }
    let minus_one = AlgebraId::family(19, Rational::from(-1)).map_err(err)?;
    ensure(
        checks
            .iter()
            .any(|c| c.algebra == minus_one && c.variant == Variant::Pi2),
        || "pi2 missing".into(),
    )?;
    ensure(elapsed < Duration::from_secs(5), || {
        format!("took {}", secs(elapsed))
    })?;
    Ok(format!(
        "{} entries verified, {errata} errata replaced by verified same-size patches, {}",
        checks.len(),
        secs(elapsed)
    ))
}

fn table_reproduction() -> Outcome {
    let mut rows = table(&ids_of_dim(6, default_eps_samples)).map_err(err)?;
    rows.extend(table(&ids_of_dim(5, default_eps_samples)).map_err(err)?);
    let mismatched: Vec<String> = rows
        .iter()
        .filter(|r| r.matches != Some(true))
        .map(|r| {
            let got = r
                .values()
                .map_or("unresolved".to_string(), |(m, n)| format!("{m}/{n}"));
            let want = r
                .expected
                .as_ref()
                .map_or("?".to_string(), |e| format!("{}/{}", e.mu, e.mu_nil));
            format!("{} resolved {got}, published {want}", r.algebra)
        })
        .collect();
    let q = |s: &str| s.parse::<AlgebraId>().map_err(err);
    for (id, want) in [
        (q("L6_19?eps=-1")?, (4, 4)),
        (q("L6_19?eps=2")?, (5, 5)),
        (q("L6_3")?, (4, 5)),
        (q("L6_9")?, (5, 6)),
        (q("L6_24?eps=4")?, (5, 5)),
        (q("L6_24?eps=2")?, (6, 6)),
    ] {
        let got = rows
            .iter()
            .find(|r| r.algebra == id)
            .and_then(|r| r.values());
        ensure(got == Some(want), || format!("{id}: {got:?}"))?;
    }
    let annotated: Vec<String> = rows
        .iter()
        .filter(|r| r.paper_asserted)
        .map(|r| r.algebra.to_string())
        .collect();
    ensure(mismatched.is_empty(), || {
        format!(
            "{}; paper-asserted rows: {}",
            mismatched.join("; "),
            annotated.join(" ")
        )
    })?;
    Ok(format!(
        "{} rows exact; paper-asserted rows: {}",
        rows.len(),
        annotated.join(" ")
    ))
}

fn rederived_lower_bounds() -> Outcome {
    let certs = lower_bound_certificates(&AlgebraId::plain(5, 9)).map_err(err)?;
    ensure(
        certs.iter().any(|c| {
            c.target == Target::MuNil
                && c.kind == CertificateKind::Obstruction
                && c.value >= 5
                && c.reference.contains("C^3")
        }),
        || "no LCS obstruction for L5,9".into(),
    )?;
    let mut unlike = 0;
    for id in ids_of_dim(6, default_eps_samples) {
        let g = build_algebra(&id).map_err(err)?;
        let lcs = g.lower_central_series().map_err(err)?;
        let checked = resolve_mu(&id).map_err(err)?.mu_nil.checked_lower;
        ensure(checked >= 4, || {
            format!("{id}: checked mu_nil bound {checked}")
        })?;
        if lcs.class() != 3 || lcs.dims() != [6, 3, 1, 0] || g.center().dim() != 1 {
            unlike += 1;
            ensure(checked >= 5, || {
                format!("{id} differs from n_4 but checked bound is {checked}")
            })?;
        }
    }
    Ok(format!(
        "L5,9 >= 5 by LCS; all dim 6 >= 4; {unlike} algebras unlike n_4 >= 5"
    ))
}

fn is_correction(i: &Identity) -> bool {
    i.name.ends_with(".corrected") || i.name.ends_with(".mirrored")
}

fn symbolic_identities() -> Outcome {
    let start = Instant::now();
    let as_displayed: Vec<Identity> = all_identities()
        .into_iter()
        .filter(|i| !is_correction(i))
        .collect();
    let report = run_suite(&as_displayed, DEFAULT_SEED, 100).map_err(err)?;
    let elapsed = start.elapsed();
    ensure(report.numeric.iter().all(|n| n.points >= 100), || {
        "fewer than 100 random points".into()
    })?;
    ensure(report.numerics_consistent(), || {
        "numeric check disagrees with exact verdict".into()
    })?;
    let corrections: Vec<Identity> = all_identities().into_iter().filter(is_correction).collect();
    let fixed = run_suite(&corrections, DEFAULT_SEED, 100).map_err(err)?;
    let failed: Vec<&str> = report
        .identities
        .iter()
        .filter(|r| r.status != nilrep::symbolic::Status::Match)
        .map(|r| r.identity.as_str())
        .collect();
    ensure(failed.is_empty(), || {
        format!(
            "{} of {} as displayed do not hold: {}; corrected forms hold: {}",
            failed.len(),
            report.identities.len(),
            failed.join(", "),
            fixed.all_match()
        )
    })?;
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {}", secs(elapsed))
    })?;
    Ok(format!(
        "{} identities exact and at 100 random points, {}",
        report.identities.len(),
        secs(elapsed)
    ))
}

fn labelled(g: &LieAlgebra<Rational>, prefixes: &[char]) -> Subspace<Rational> {
    let idx: Vec<usize> = (0..g.dim())
        .filter(|&k| prefixes.iter().any(|&p| g.labels()[k].starts_with(p)))
        .collect();
    Subspace::coordinate(g.dim(), &idx)
}

fn structural_invariants() -> Outcome {
    let ids = all_ids();
    for id in &ids {
        let g = build_algebra(id).map_err(err)?;
        g.structure()
            .validate()
            .map_err(|v| format!("{id}: Jacobi fails at {:?}", v.triple))?;
        let z = g.center();
        let zd = z.intersection(&g.derived_algebra()).map_err(err)?;
        ensure(
            zd == labelled(&g, &['Z']) && z == labelled(&g, &['Z', 'A']),
            || format!("{id}: center labels"),
        )?;
    }
    for j in 1..=9 {
        let g6 = build_algebra(&AlgebraId::plain(6, j)).map_err(err)?;
        let g5 = build_algebra(&AlgebraId::plain(5, j)).map_err(err)?;
        ensure(
            g6.same_structure(&g5.direct_sum(&LieAlgebra::abelian(1))),
            || format!("L6,{j} != L5,{j} + k"),
        )?;
    }
    for id in &ids {
        if let Some((mu, nil)) = resolve_mu(id).map_err(err)?.values() {
            ensure(mu <= nil && mu <= usize::from(id.dim()) + 1, || {
                format!("{id}: {mu}/{nil}")
            })?;
        }
    }
    Ok(format!(
        "{} algebras: Jacobi, center labels, L6,j = L5,j + k, mu <= mu_nil and mu <= dim + 1",
        ids.len()
    ))
}

fn jordan_nilpart() -> Outcome {
    let mut seen = Vec::new();
    for id in all_ids() {
        let Ok(cr) = build_representation(&id, Variant::TableRep) else {
            continue;
        };
        let Ok((weights, nil)) = cr.rep.split_scalar_plus_nilpotent() else {
            continue;
        };
        if weights.iter().all(Ring::is_zero) {
            continue;
        }
        ensure(nil.check_homomorphism().is_ok() && nil.is_nilrep(), || {
            format!("{id}: nilpart invalid")
        })?;
        let inside = cr
            .rep
            .source()
            .classify_shape()
            .map_err(err)?
            .center_in_derived;
        ensure(nil.is_faithful() == inside, || {
            format!(
                "{id}: faithful {} vs center in derived {inside}",
                nil.is_faithful()
            )
        })?;
        seen.push(id.to_string());
    }
    ensure(seen.len() >= 5, || {
        format!("only {} scalar-diagonal representations", seen.len())
    })?;
    Ok(format!(
        "{} scalar-diagonal representations: {}",
        seen.len(),
        seen.join(" ")
    ))
}

fn base_change() -> Outcome {
    let id = AlgebraId::family(19, Rational::from(-2)).map_err(err)?;
    let ext = build_representation_over_extension(&id, Variant::TableNilrep).map_err(err)?;
    let v = ext.rep.verdict();
    ensure(
        ext.rep.target_dim() == 4 && v.homomorphism && v.faithful,
        || format!("over Q(sqrt 2): {v:?}"),
    )?;
    let over_q = resolve_mu(&id).map_err(err)?.values();
    ensure(over_q == Some((5, 5)), || format!("over Q: {over_q:?}"))?;
    Ok("L6,19(-2): faithful 4-dim rep over Q(sqrt 2), mu = 5 over Q".into())
}

fn random_invertible(n: usize, rng: &mut ChaCha8Rng) -> Matrix<Rational> {
    loop {
        let t = Matrix::from_fn(n, n, |_, _| Rational::from(rng.gen_range(-3i64..=3)));
        if t.inverse().is_some() {
            return t;
        }
    }
}

fn property_suite() -> Outcome {
    let mut nilreps = Vec::new();
    for id in all_ids() {
        for v in Variant::ALL.into_iter().filter(|v| v.expects_nilrep()) {
            if let Ok(cr) = build_representation(&id, v) {
                let flag = cr
                    .rep
                    .engel_flag()
                    .map_err(|e| format!("{id} {v}: Engel stalls at {}", e.stage))?;
                ensure(cr.rep.flag_is_valid(&flag), || {
                    format!("{id} {v}: invalid flag")
                })?;
                nilreps.push((format!("{id} {v}"), cr.rep));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..50 {
        let (name, rep) = &nilreps[rng.gen_range(0..nilreps.len())];
        let conj = rep
            .conjugate(&random_invertible(rep.target_dim(), &mut rng))
            .map_err(err)?;
        ensure(conj.verdict() == rep.verdict(), || {
            format!("{name}: verdict changed under conjugation")
        })?;
        let flag = conj
            .engel_flag()
            .map_err(|_| format!("{name}: Engel stalls on a conjugate"))?;
        ensure(conj.flag_is_valid(&flag), || {
            format!("{name}: invalid flag on a conjugate")
        })?;
    }
    for f in FAMILIES {
        let mut s = default_eps_samples(f);
        s.extend(
            default_eps_samples(f)
                .into_iter()
                .map(|e| e * Rational::from(9)),
        );
        s.push(Rational::zero());
        let iso = |a: &Rational, b: &Rational| family_isomorphic(f, a, b).map_err(err);
        let mut values = Vec::new();
        for e in &s {
            values.push(
                resolve_mu(&AlgebraId::family(f, e.clone()).map_err(err)?)
                    .map_err(err)?
                    .values(),
            );
        }
        for (i, a) in s.iter().enumerate() {
            ensure(iso(a, a)?, || format!("L6,{f}: not reflexive at {a}"))?;
            for (j, b) in s.iter().enumerate() {
                ensure(iso(a, b)? == iso(b, a)?, || {
                    format!("L6,{f}: not symmetric at {a}, {b}")
                })?;
                if iso(a, b)? {
                    ensure(values[i] == values[j], || {
                        format!("L6,{f}: mu differs at {a}, {b}")
                    })?;
                }
                for c in &s {
                    if iso(a, b)? && iso(b, c)? {
                        ensure(iso(a, c)?, || {
                            format!("L6,{f}: not transitive at {a}, {b}, {c}")
                        })?;
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} nilreps and 50 random conjugates; square-class relation and mu invariance hold",
        nilreps.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("corpus verification", corpus_verification),
        ("table reproduction", table_reproduction),
        ("re-derived lower bounds", rederived_lower_bounds),
        ("symbolic identity suite", symbolic_identities),
        ("structural invariants", structural_invariants),
        ("Jordan nilpotent part", jordan_nilpart),
        ("base change", base_change),
        ("property suite", property_suite),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
