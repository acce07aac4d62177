use dextral_core::algebra::AlgebraTable;
use dextral_core::catalog;
use dextral_core::dextral::{
    decide_dextral, decide_dextral_with, exhaustive_oracle, is_symmetric_ideal, DextralVerdict, SearchConfig,
    StructuralCase, YesReason,
};
use dextral_core::exactlin::{FieldSpec, Vector};
use dextral_core::identities;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Structure constants mod p: `sc[i][j][k]` is the `e_k` coefficient of `e_i e_j`.
type Table = Vec<Vec<Vec<u64>>>;

fn mul(sc: &Table, p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len();
    let mut out = vec![0; n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[k] = (out[k] + a[i] * b[j] % p * sc[i][j][k]) % p;
            }
        }
    }
    out
}

fn elements(p: u64, n: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v| (0..p).map(move |d| [v.clone(), vec![d]].concat())).collect();
    }
    out
}

/// Straight from the definition, written without any library code.
fn brute_force_dextral(sc: &Table, p: u64) -> bool {
    let n = sc.len();
    let els = elements(p, n);
    let zero = |v: &[u64]| v.iter().all(|&d| d == 0);
    for a in &els {
        for b in &els {
            for c in &els {
                if zero(&mul(sc, p, a, &mul(sc, p, b, c))) && !zero(&mul(sc, p, b, &mul(sc, p, a, c))) {
                    return false;
                }
            }
        }
    }
    true
}

fn to_table(alg: &AlgebraTable) -> Table {
    let n = alg.dim();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| alg.structure_constant(i, j).entries().iter().map(|s| s.residue().unwrap()).collect())
                .collect()
        })
        .collect()
}

fn from_table(sc: &Table, p: u64) -> AlgebraTable {
    let f = FieldSpec::prime(p).unwrap();
    let n = sc.len();
    let basis = (0..n).map(|i| format!("e{i}")).collect();
    let grid = sc
        .iter()
        .map(|row| row.iter().map(|v| Vector::from_i64(f, &v.iter().map(|&d| d as i64).collect::<Vec<_>>())).collect())
        .collect();
    AlgebraTable::new("random", f, basis, grid).unwrap()
}

fn random_table(rng: &mut ChaCha8Rng, p: u64, n: usize, density: f64) -> Table {
    (0..n)
        .map(|_| {
            (0..n)
                .map(|_| (0..n).map(|_| if rng.gen_bool(density) { rng.gen_range(1..p) } else { 0 }).collect())
                .collect()
        })
        .collect()
}

#[test]
fn library_oracle_matches_test_oracle_on_random_tables() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for round in 0..60 {
        let (p, n) = [(2, 1), (2, 2), (3, 1), (3, 2), (2, 3)][round % 5];
        let sc = random_table(&mut rng, p, n, 0.3);
        let alg = from_table(&sc, p);
        let expected = brute_force_dextral(&sc, p);
        let oracle = exhaustive_oracle(&alg, 10_000_000).unwrap();
        assert_eq!(oracle.is_yes(), expected, "round {round}");
        let decided = decide_dextral(&alg);
        assert_eq!(decided.is_yes(), expected, "round {round}");
        if let Some(w) = decided.witness() {
            assert!(w.validate(&alg));
        }
    }
}

#[test]
fn tiers_without_enumeration_never_contradict_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let cfg = SearchConfig { enumeration_budget: 0, ..SearchConfig::default() };
    let mut unknown = 0;
    for round in 0..80 {
        let (p, n) = [(2, 2), (3, 2), (5, 2), (2, 3), (3, 3)][round % 5];
        let sc = random_table(&mut rng, p, n, 0.25);
        let alg = from_table(&sc, p);
        let expected = brute_force_dextral(&sc, p);
        match decide_dextral_with(&alg, &cfg) {
            DextralVerdict::ProvedYes(_) => assert!(expected, "round {round}"),
            DextralVerdict::ProvedNo(w) => {
                assert!(!expected, "round {round}");
                assert!(w.validate(&alg));
            }
            DextralVerdict::Unknown => unknown += 1,
        }
    }
    assert!(unknown < 80);
}

#[test]
fn catalog_reductions_over_gf3_agree_with_enumeration_up_to_dim_four() {
    let gf3 = FieldSpec::prime(3).unwrap();
    let cfg = SearchConfig { enumeration_budget: 0, ..SearchConfig::default() };
    let mut compared = 0;
    for e in catalog::entries() {
        if e.characteristic.is_some() {
            continue;
        }
        for p in e.sample_params((-1, 1)) {
            let Ok(a) = e.instantiate(&p, gf3) else { continue };
            if a.dim() > 4 {
                continue;
            }
            let oracle = exhaustive_oracle(&a, 1_000_000).unwrap();
            let decided = decide_dextral_with(&a, &cfg);
            assert!(decided.same_status(&oracle), "{}: {} vs {}", a.name(), decided.status(), oracle.status());
            if a.dim() <= 3 {
                assert_eq!(brute_force_dextral(&to_table(&a), 3), oracle.is_yes(), "{}", a.name());
            }
            compared += 1;
        }
    }
    assert!(compared > 40);
}

#[test]
fn leibniz_entries_decide_by_the_dextral_identity() {
    for e in catalog::entries() {
        for p in e.sample_params((-2, 2)) {
            let a = e.instantiate(&p, e.default_field()).unwrap();
            let cfg = SearchConfig { depth: 1, triple_budget: 0, enumeration_budget: 0 };
            let v = decide_dextral_with(&a, &cfg);
            assert_ne!(v.status(), "unknown", "{}", a.name());
            assert_eq!(v.is_yes(), identities::dextral_identity(&a).holds(), "{}", a.name());
        }
    }
}

#[test]
fn classification_witness_shapes() {
    let q = FieldSpec::Rational;
    for id in ["N7", "N8", "N9", "N10"] {
        let a = catalog::instantiate(id, &Default::default(), q).unwrap();
        let (x, y) = (a.element("x").unwrap(), a.element("y").unwrap());
        assert!(a.triple_right(&y, &x, &x).unwrap().is_zero(), "{id}");
        assert!(!a.triple_right(&x, &y, &x).unwrap().is_zero(), "{id}");
    }
    let s2 = catalog::instantiate("S2", &Default::default(), q).unwrap();
    let (x, z) = (s2.element("x").unwrap(), s2.element("z").unwrap());
    let zxz = s2.triple_right(&z, &x, &z).unwrap();
    assert_eq!(s2.render(&zxz), "-x");
}

#[test]
fn reasons() {
    let q = FieldSpec::Rational;
    let r1 = catalog::instantiate("R1", &Default::default(), q).unwrap();
    assert_eq!(decide_dextral(&r1), DextralVerdict::ProvedYes(YesReason::AllTriplesZero));
    let lie = catalog::instantiate("lie7_char3", &Default::default(), FieldSpec::prime(3).unwrap()).unwrap();
    assert_eq!(decide_dextral(&lie), DextralVerdict::ProvedYes(YesReason::DextralIdentity));
    let field = catalog::instantiate("gamma1", &Default::default(), q).unwrap();
    assert!(decide_dextral(&field).is_yes());
    let line = AlgebraTable::from_products("k", q, vec!["e".into()], [((0, 0), Vector::from_i64(q, &[1]))]).unwrap();
    assert_eq!(
        decide_dextral(&line),
        DextralVerdict::ProvedYes(YesReason::StructuralSufficiency(StructuralCase::CommutativeAssociative))
    );
}

#[test]
fn verdict_json() {
    let q = FieldSpec::Rational;
    let s2 = catalog::instantiate("S2", &Default::default(), q).unwrap();
    let v = decide_dextral(&s2).to_json();
    assert_eq!(v["status"], "no");
    assert_eq!(v["witness"]["a"], serde_json::json!(["1", "0", "0", "0"]));
    let r1 = catalog::instantiate("R1", &Default::default(), q).unwrap();
    assert_eq!(decide_dextral(&r1).to_json(), serde_json::json!({"status": "yes", "reason": "all-triples-zero"}));
}

#[test]
fn symmetric_ideal_witnesses_hold_modulo_the_ideal() {
    let q = FieldSpec::Rational;
    let s2 = catalog::instantiate("S2", &Default::default(), q).unwrap();
    let y = s2.coordinate_span(&["y"]).unwrap();
    let v = is_symmetric_ideal(&s2, &y).unwrap();
    let w = v.witness().expect("S2 / span{y} is not dextral");
    assert!(w.validate_modulo(&s2, &y));
    let xy = s2.coordinate_span(&["x", "y"]).unwrap();
    assert!(is_symmetric_ideal(&s2, &xy).unwrap().is_yes());
}
