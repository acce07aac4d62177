use dextral_core::catalog::{self, CatalogEntry};
use dextral_core::dextral::decide_dextral;
use dextral_core::exactlin::FieldSpec;
use dextral_core::identities::is_right_leibniz;
use dextral_core::series::{is_left_nilpotent, is_nilpotent, is_right_nilpotent, is_solvable, series, SeriesKind};

fn instances() -> Vec<(&'static CatalogEntry, dextral_core::algebra::AlgebraTable)> {
    catalog::entries()
        .iter()
        .flat_map(|e| {
            e.sample_params((-2, 2))
                .into_iter()
                .map(move |p| (e, e.instantiate(&p, e.default_field()).unwrap()))
        })
        .collect()
}

#[test]
fn every_sample_is_right_leibniz() {
    for (_, a) in instances() {
        let r = is_right_leibniz(&a);
        assert!(r.holds(), "{}: {:?}", a.name(), r.first_violation);
    }
}

#[test]
fn expectations_match_computation() {
    for (e, a) in instances() {
        let x = &e.expected;
        assert_eq!(decide_dextral(&a).is_yes(), x.dextral.value, "{} dextral", a.name());
        assert_eq!(is_solvable(&a).holds, x.solvable.value, "{} solvable", a.name());
        let left = is_left_nilpotent(&a);
        assert_eq!(left.index, x.left_nilpotent.value, "{} left", a.name());
        assert_eq!(is_right_nilpotent(&a).holds, x.right_nilpotent.value, "{} right", a.name());
    }
}

#[test]
fn dextral_entries_never_come_back_unknown() {
    for (_, a) in instances() {
        let v = decide_dextral(&a);
        assert_ne!(v.status(), "unknown", "{}", a.name());
        if let Some(w) = v.witness() {
            assert!(w.validate(&a), "{}", a.name());
        }
    }
}

#[test]
fn series_stabilize_within_dim_plus_one() {
    for (_, a) in instances() {
        for kind in SeriesKind::ALL {
            let t = series(&a, kind);
            assert!(t.stabilized_at <= a.dim() + 1, "{} {:?}", a.name(), kind);
            for w in t.terms.windows(2) {
                assert!(w[1].is_subspace_of(&w[0]).unwrap());
            }
        }
    }
}

#[test]
fn nilpotency_implications() {
    for (_, a) in instances() {
        let right = is_right_nilpotent(&a).holds;
        assert_eq!(right, is_nilpotent(&a).holds, "{}", a.name());
        if right {
            assert!(is_left_nilpotent(&a).holds, "{}", a.name());
        }
        let derived = series(&a, SeriesKind::Derived);
        let left = series(&a, SeriesKind::LeftLower);
        for n in 1..=a.dim() + 2 {
            assert!(derived.term(n).is_subspace_of(left.term(n)).unwrap(), "{} n={n}", a.name());
        }
    }
}

#[test]
fn four_dimensional_entries_dextral_iff_third_left_term_vanishes() {
    for (e, a) in instances() {
        if e.dim() != Some(4) {
            continue;
        }
        let l3 = series(&a, SeriesKind::LeftLower).term(3).is_zero();
        assert_eq!(decide_dextral(&a).is_yes(), l3, "{}", a.name());
    }
}

#[test]
fn lie7_over_rationals_breaks_jacobi_by_three_x7() {
    let e = catalog::get("lie7_char3").unwrap();
    let a = e.instantiate_any_field(&Default::default(), FieldSpec::Rational).unwrap();
    let j = dextral_core::identities::jacobi(&a);
    let v = j.first_violation.expect("Jacobi fails over Q");
    let x7 = a.element("x7").unwrap();
    let three = FieldSpec::Rational.from_i64(3);
    assert_eq!(&v.lhs - &v.rhs, x7.scale(&three));
}

#[test]
fn exported_json_round_trips() {
    for e in catalog::entries() {
        let a = e.instantiate(&e.default_params(), e.default_field()).unwrap();
        let text = a.to_json();
        let back = dextral_core::algebra::AlgebraTable::from_json(&text).unwrap();
        assert_eq!(back, a);
        assert_eq!(back.to_json(), text);
    }
}
