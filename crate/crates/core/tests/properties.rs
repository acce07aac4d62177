use dextral_core::algebra::AlgebraTable;
use dextral_core::dextral::{decide_dextral, exhaustive_oracle};
use dextral_core::exactlin::{FieldSpec, Scalar, Subspace, Vector};
use dextral_core::leavitt::{classify_graph, lpa_multiply, LpaElement};
use dextral_core::series::{series, series_terms, SeriesKind};
use dextral_core::verify::random_graph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rational),
        Just(FieldSpec::prime(2).unwrap()),
        Just(FieldSpec::prime(3).unwrap()),
        Just(FieldSpec::prime(7).unwrap()),
    ]
}

fn rows(f: FieldSpec, n: usize, max_rows: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=max_rows)
        .prop_map(move |rs| rs.iter().map(|r| Vector::from_i64(f, r)).collect())
}

fn field_and_rows() -> impl Strategy<Value = (FieldSpec, usize, Vec<Vector>)> {
    (field(), 1usize..=5).prop_flat_map(|(f, n)| (Just(f), Just(n), rows(f, n, 6)))
}

fn dot(a: &Vector, b: &Vector) -> Scalar {
    a.entries().iter().zip(b.entries()).fold(a.field().zero(), |acc, (x, y)| &acc + &(x * y))
}

/// An algebra of dimension `n` with structure constants drawn from `coeffs`.
fn table(f: FieldSpec, n: usize, coeffs: &[i64]) -> AlgebraTable {
    let basis = (0..n).map(|i| format!("e{i}")).collect();
    let sc = (0..n)
        .map(|i| (0..n).map(|j| Vector::from_i64(f, &coeffs[(i * n + j) * n..(i * n + j + 1) * n])).collect())
        .collect();
    AlgebraTable::new("t", f, basis, sc).unwrap()
}

fn algebra(f: FieldSpec, max_dim: usize, range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = AlgebraTable> {
    (1..=max_dim).prop_flat_map(move |n| {
        prop::collection::vec(range.clone(), n * n * n).prop_map(move |c| table(f, n, &c))
    })
}

fn element(a: &AlgebraTable, coords: &[i64]) -> Vector {
    Vector::from_i64(a.field(), &coords[..a.dim()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_canonical_and_contains_its_rows((f, n, rs) in field_and_rows()) {
        let s = Subspace::span(f, n, rs.clone()).unwrap();
        prop_assert_eq!(Subspace::span(f, n, s.basis().to_vec()).unwrap(), s.clone());
        let mut reversed = rs.clone();
        reversed.reverse();
        prop_assert_eq!(Subspace::span(f, n, reversed).unwrap(), s.clone());
        for r in &rs {
            prop_assert!(s.contains(r).unwrap());
        }
        prop_assert!(s.dim() <= rs.len().min(n));
        for (row, &p) in s.basis().iter().zip(s.pivots()) {
            prop_assert!(row.get(p).is_one());
            prop_assert_eq!(row.leading_index(), Some(p));
        }
    }

    #[test]
    fn solution_space_has_complementary_dimension((f, n, rs) in field_and_rows()) {
        let sol = Subspace::solutions(f, n, &rs).unwrap();
        let rank = Subspace::span(f, n, rs.clone()).unwrap().dim();
        prop_assert_eq!(sol.dim() + rank, n);
        for x in sol.basis() {
            for r in &rs {
                prop_assert!(dot(r, x).is_zero());
            }
        }
    }

    #[test]
    fn field_axioms(f in field(), a in -20i64..20, b in -20i64..20, c in -20i64..20) {
        let (a, b, c) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &(-&a), f.zero());
        match a.inv() {
            Some(i) => prop_assert!((&a * &i).is_one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn quotient_by_the_square_is_a_homomorphism(
        a in algebra(FieldSpec::prime(3).unwrap(), 3, 0..=2),
        x in prop::collection::vec(-2i64..=2, 3),
        y in prop::collection::vec(-2i64..=2, 3),
    ) {
        let full = a.full_space();
        let square = a.subspace_product(&full, &full).unwrap();
        prop_assert!(a.is_ideal(&square).unwrap());
        let (q, proj) = a.quotient(&square).unwrap();
        prop_assert_eq!(q.dim() + square.dim(), a.dim());
        let (x, y) = (element(&a, &x), element(&a, &y));
        let lhs = proj.project(&a.multiply(&x, &y).unwrap()).unwrap();
        let rhs = q.multiply(&proj.project(&x).unwrap(), &proj.project(&y).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let back = proj.lift(&proj.project(&x).unwrap()).unwrap();
        prop_assert!(square.contains(&(&x - &back)).unwrap());
    }

    #[test]
    fn series_descend_and_stabilize(a in algebra(FieldSpec::Rational, 4, -1..=1)) {
        for kind in SeriesKind::ALL {
            let t = series(&a, kind);
            prop_assert!(t.stabilized_at <= a.dim() + 1);
            let fixed = series_terms(&a, kind, a.dim() + 3);
            for w in fixed.windows(2) {
                prop_assert!(w[1].is_subspace_of(&w[0]).unwrap());
            }
            for (i, s) in fixed.iter().enumerate() {
                prop_assert_eq!(s, t.term(i + 1));
            }
        }
    }

    #[test]
    fn decision_matches_enumeration_on_tiny_tables(
        a in prop_oneof![algebra(FieldSpec::prime(2).unwrap(), 3, 0..=1), algebra(FieldSpec::prime(3).unwrap(), 2, 0..=2)],
    ) {
        let oracle = exhaustive_oracle(&a, 10_000_000).unwrap();
        let decided = decide_dextral(&a);
        prop_assert!(decided.same_status(&oracle));
        if let Some(w) = decided.witness() {
            prop_assert!(w.validate(&a));
        }
    }

    #[test]
    fn direct_sum_is_dextral_iff_both_summands_are(
        a in algebra(FieldSpec::prime(2).unwrap(), 2, 0..=1),
        b in algebra(FieldSpec::prime(2).unwrap(), 2, 0..=1),
    ) {
        let s = a.direct_sum(&b).unwrap();
        let both = exhaustive_oracle(&a, 1_000_000).unwrap().is_yes() && exhaustive_oracle(&b, 1_000_000).unwrap().is_yes();
        prop_assert_eq!(exhaustive_oracle(&s, 10_000_000).unwrap().is_yes(), both);
        prop_assert_eq!(decide_dextral(&s).is_yes(), both);
    }

    #[test]
    fn path_algebra_products_are_associative(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, 3, 4);
        let ms = g.monomials(2);
        let f = FieldSpec::Rational;
        let pick = |rng: &mut ChaCha8Rng| {
            (0..rng.gen_range(1..=3)).fold(LpaElement::zero(f), |acc, _| {
                let m = ms[rng.gen_range(0..ms.len())].clone();
                acc.add(&LpaElement::term(f, m, f.from_i64(rng.gen_range(-2..=2))))
            })
        };
        for _ in 0..20 {
            let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let left = lpa_multiply(&g, &lpa_multiply(&g, &x, &y).unwrap(), &z).unwrap();
            let right = lpa_multiply(&g, &x, &lpa_multiply(&g, &y, &z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn graph_violations_always_validate(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, 4, 6);
        let c = classify_graph(&g);
        prop_assert_eq!(c.dextral, c.violations.is_empty());
        for v in &c.violations {
            prop_assert!(v.validated(&g));
        }
        if c.dextral {
            prop_assert_eq!(c.isolated + c.single_loop, g.vertex_count());
        }
    }
}
