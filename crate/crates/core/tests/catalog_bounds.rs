use nilrep::catalog::{
    all_ids, build_algebra, default_eps_samples, ids_of_dim, lower_bound_certificates, resolve_mu,
    table, AlgebraId, CertificateKind, Side, Target,
};
use nilrep::exactnum::Rational;

fn with_eps(index: u8, eps: &str) -> AlgebraId {
    AlgebraId::family(index, eps.parse().unwrap()).unwrap()
}

fn values(id: &AlgebraId) -> Option<(usize, usize)> {
    resolve_mu(id).unwrap().values()
}

/// Published dimension-5 values, listed by hand.
const DIM5: [(u8, usize, usize); 9] = [
    (1, 4, 5),
    (2, 5, 5),
    (3, 4, 4),
    (4, 4, 4),
    (5, 4, 4),
    (6, 5, 5),
    (7, 5, 5),
    (8, 4, 4),
    (9, 5, 5),
];

/// Published dimension-6 values for the algebras without parameter.
const DIM6: [(u8, usize, usize); 22] = [
    (1, 5, 5),
    (2, 5, 5),
    (3, 4, 5),
    (4, 4, 5),
    (5, 4, 5),
    (6, 5, 5),
    (7, 5, 5),
    (8, 4, 5),
    (9, 5, 6),
    (10, 5, 5),
    (11, 5, 5),
    (12, 5, 5),
    (13, 5, 5),
    (14, 6, 6),
    (15, 6, 6),
    (16, 6, 6),
    (17, 6, 6),
    (18, 6, 6),
    (20, 5, 5),
    (23, 5, 5),
    (25, 5, 5),
    (26, 5, 5),
];

#[test]
fn dimension_six_table_is_reproduced_for_plain_algebras() {
    for (j, mu, nil) in DIM6 {
        assert_eq!(values(&AlgebraId::plain(6, j)), Some((mu, nil)), "L6,{j}");
    }
}

#[test]
fn dimension_six_families_split_by_square_class() {
    for (j, eps, expect) in [
        (19, "-1", (4, 4)),
        (19, "-4", (4, 4)),
        (19, "-9/4", (4, 4)),
        (19, "1", (5, 5)),
        (19, "2", (5, 5)),
        (19, "-2", (5, 5)),
        (19, "0", (5, 5)),
        (21, "0", (5, 5)),
        (21, "1", (5, 5)),
        (21, "2", (5, 5)),
        (22, "0", (5, 5)),
        (22, "1", (5, 5)),
        (24, "0", (5, 5)),
        (24, "1", (5, 5)),
        (24, "4", (5, 5)),
        (24, "9/4", (5, 5)),
        (24, "2", (6, 6)),
        (24, "3", (6, 6)),
    ] {
        assert_eq!(values(&with_eps(j, eps)), Some(expect), "L6,{j}({eps})");
    }
}

#[test]
fn dimension_five_table_except_the_contested_row() {
    for (j, mu, nil) in DIM5.iter().copied().filter(|&(j, _, _)| j != 2) {
        assert_eq!(values(&AlgebraId::plain(5, j)), Some((mu, nil)), "L5,{j}");
    }
}

// Red by design: the four-dimensional representation in the corpus verifies,
// which contradicts the published μ(L5,2) = 5.
#[test]
fn dimension_five_contested_row() {
    assert_eq!(values(&AlgebraId::plain(5, 2)), Some((5, 5)));
}

#[test]
fn small_dimensions_are_resolved_and_match() {
    let ids: Vec<AlgebraId> = (1..=4)
        .flat_map(|d| ids_of_dim(d, default_eps_samples))
        .collect();
    for row in table(&ids).unwrap() {
        assert_eq!(row.matches, Some(true), "{}: {:?}", row.algebra, row);
    }
    assert_eq!(values(&AlgebraId::plain(4, 2)), Some((3, 4)));
    assert_eq!(values(&AlgebraId::plain(1, 1)), Some((1, 2)));
}

#[test]
fn table_rows_follow_input_order_and_flag_paper_assertions() {
    let ids = ids_of_dim(6, default_eps_samples);
    let rows = table(&ids).unwrap();
    assert_eq!(
        rows.iter().map(|r| r.algebra.clone()).collect::<Vec<_>>(),
        ids
    );
    let asserted: Vec<String> = rows
        .iter()
        .filter(|r| r.paper_asserted)
        .map(|r| r.algebra.to_string())
        .collect();
    assert_eq!(asserted, ["L6_2", "L6_9", "L6_24?eps=2", "L6_24?eps=3"]);
    for r in &rows {
        let res = resolve_mu(&r.algebra).unwrap();
        let uncheckable = res
            .deciding()
            .iter()
            .any(|c| c.side == Side::Lower && !c.checkable);
        assert_eq!(uncheckable, r.paper_asserted, "{}", r.algebra);
    }
}

#[test]
fn l59_obstruction_compares_with_n4() {
    let certs = lower_bound_certificates(&AlgebraId::plain(5, 9)).unwrap();
    let c = certs
        .iter()
        .find(|c| {
            c.target == Target::MuNil && c.kind == CertificateKind::Obstruction && c.value == 5
        })
        .expect("nil obstruction for L5,9");
    assert!(c.checkable);
    assert!(c.reference.contains("n_4"), "{}", c.reference);
    assert!(c.reference.contains("C^3"), "{}", c.reference);
}

#[test]
fn every_six_dimensional_algebra_needs_at_least_four() {
    for id in ids_of_dim(6, default_eps_samples) {
        assert!(resolve_mu(&id).unwrap().mu_nil.checked_lower >= 4, "{id}");
    }
}

#[test]
fn algebras_unlike_n4_need_at_least_five() {
    for id in ids_of_dim(6, default_eps_samples) {
        let g = build_algebra(&id).unwrap();
        let lcs = g.lower_central_series().unwrap();
        let unlike = lcs.class() != 3 || lcs.dims() != [6, 3, 1, 0] || g.center().dim() != 1;
        let checked = resolve_mu(&id).unwrap().mu_nil.checked_lower;
        if unlike {
            assert!(checked >= 5, "{id}: {checked}");
        }
    }
}

#[test]
fn l619_without_square_root_needs_five_by_checkable_means() {
    for eps in ["1", "2", "-2", "3", "0"] {
        let res = resolve_mu(&with_eps(19, eps)).unwrap();
        assert!(res.mu_nil.checked_lower >= 5, "eps = {eps}");
        assert!(!res.paper_asserted(), "eps = {eps}");
    }
}

#[test]
fn mu_never_exceeds_mu_nil_or_dim_plus_one() {
    for id in all_ids() {
        let res = resolve_mu(&id).unwrap();
        let (mu, nil) = res.values().unwrap_or_else(|| panic!("{id} unresolved"));
        assert!(mu <= nil, "{id}");
        assert!(mu <= usize::from(id.dim()) + 1, "{id}");
        assert!(res.mu.lower <= res.mu.upper.unwrap());
    }
}

#[test]
fn coupling_equalizes_when_center_lies_in_derived_algebra() {
    for id in all_ids() {
        let g = build_algebra(&id).unwrap();
        if g.classify_shape().unwrap().center_in_derived {
            let (mu, nil) = values(&id).unwrap();
            assert_eq!(mu, nil, "{id}");
        }
    }
}

#[test]
fn abelian_bounds_use_the_closed_form() {
    for (d, mu, nil) in [
        (1u8, 1, 2),
        (2, 2, 3),
        (3, 3, 4),
        (4, 4, 4),
        (5, 4, 5),
        (6, 5, 5),
    ] {
        let res = resolve_mu(&AlgebraId::plain(d, 1)).unwrap();
        assert_eq!(res.values(), Some((mu, nil)), "A{d}");
    }
}

#[test]
fn certificates_serialize_with_kebab_case_kinds() {
    let res = resolve_mu(&AlgebraId::plain(6, 9)).unwrap();
    let json = serde_json::to_value(&res).unwrap();
    let kinds: Vec<&str> = json["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["kind"].as_str().unwrap())
        .collect();
    assert!(kinds.contains(&"paper-theorem"));
    assert!(kinds.contains(&"verified-representation"));
    assert!(json["certificates"][0].get("ref").is_some());
}

#[test]
fn resolution_is_invariant_under_rescaling_eps_by_squares() {
    let e: Rational = "3/7".parse().unwrap();
    for j in [19u8, 21, 22, 24] {
        let a = resolve_mu(&AlgebraId::family(j, e.clone()).unwrap())
            .unwrap()
            .values();
        let b = resolve_mu(&AlgebraId::family(j, e.clone() * Rational::from(25)).unwrap())
            .unwrap()
            .values();
        assert_eq!(a, b, "L6,{j}");
    }
}
