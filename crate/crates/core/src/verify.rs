//! The verification suite: fourteen checks over the catalog, the decision
//! procedure, the series, and the Leavitt path algebra engine.
//!
//! Every budget and sample size is a field of [`VerifyOptions`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::AlgebraTable;
use crate::catalog::{self, int_param, CatalogEntry, Params};
use crate::dextral::{
    cb_condition_exhaustive, decide_dextral, decide_dextral_with, exhaustive_oracle, exhaustive_symmetric_ideal,
    is_symmetric_ideal, SearchConfig,
};
use crate::exactlin::{FieldSpec, Subspace, Vector};
use crate::identities;
use crate::leavitt::{self, classify_graph, DirectedGraph, LpaElement};
use crate::series::{
    is_left_nilpotent, is_right_nilpotent, is_solvable, mixed_bracket_failures, series,
    verify_derived_left_correspondence, verify_left_nilpotency_bound, verify_mixed_bracket_law, SeriesKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Unknown,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub id: u8,
    pub module: &'static str,
    pub title: &'static str,
    pub source: &'static str,
    pub status: Status,
    pub details: Vec<String>,
}

impl CheckRecord {
    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "module": self.module,
            "title": self.title,
            "source": self.source,
            "status": self.status.as_str(),
            "details": self.details,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Integer samples for rational parameters.
    pub param_range: (i64, i64),
    /// Restrict to criteria of one module, or one criterion number.
    pub only: Option<String>,
    pub search: SearchConfig,
    pub seed: u64,
    /// Bounds `(m_max, n_max)` for the mixed bracket law.
    pub mixed_bracket_bounds: (usize, usize),
    pub derived_left_bound: usize,
    pub random_subalgebras: usize,
    pub quotient_pairs: usize,
    pub leavitt_triples: usize,
    pub random_anticommutative: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            param_range: (-2, 2),
            only: None,
            search: SearchConfig::default(),
            seed: 0x5eed,
            mixed_bracket_bounds: (4, 6),
            derived_left_bound: 4,
            random_subalgebras: 50,
            quotient_pairs: 20,
            leavitt_triples: 1000,
            random_anticommutative: 20,
        }
    }
}

pub struct Criterion {
    pub id: u8,
    pub module: &'static str,
    pub title: &'static str,
    pub source: &'static str,
    run: fn(&VerifyOptions, &mut Log),
}

/// All criteria, in order.
pub fn criteria() -> &'static [Criterion] {
    CRITERIA
}

static CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        module: "catalog",
        title: "every sampled catalog entry is right Leibniz",
        source: "all multiplication tables",
        run: transcription,
    },
    Criterion {
        id: 2,
        module: "dextral",
        title: "N7-N10 refuted, the other 18 right nilpotent 4-dim algebras dextral",
        source: "18 classes theorem",
        run: eighteen_classes,
    },
    Criterion {
        id: 3,
        module: "dextral",
        title: "2-dim nilradical: R1 dextral, S2 and S3 refuted and not left nilpotent",
        source: "2-dim nilradical theorem and remark",
        run: two_dim_nilradical,
    },
    Criterion {
        id: 4,
        module: "dextral",
        title: "mu2 nilradical: L1, L2, L3 refuted and not left nilpotent",
        source: "mu2 nilradical proposition and remark",
        run: mu2_nilradical,
    },
    Criterion {
        id: 5,
        module: "dextral",
        title: "mu3 and mu1 nilradicals: R2-R5 dextral with left nilpotency index 3",
        source: "mu3 and mu1 nilradical propositions and remark",
        run: mu1_mu3_nilradical,
    },
    Criterion {
        id: 6,
        module: "series",
        title: "4-dim entries: dextral iff L(3) = 0",
        source: "4-dim characterization theorem",
        run: four_dim_characterization,
    },
    Criterion {
        id: 7,
        module: "series",
        title: "examples: lnotr, L', the n-dim family, the 7-dim Lie algebra",
        source: "examples",
        run: examples,
    },
    Criterion {
        id: 8,
        module: "series",
        title: "theorem suite on dextral right Leibniz entries",
        source: "cyclic relations, nested bracket lemma, series propositions",
        run: theorem_suite,
    },
    Criterion {
        id: 9,
        module: "series",
        title: "right nilpotent < left nilpotent < solvable, strictly",
        source: "strict inclusions",
        run: strict_inclusions,
    },
    Criterion {
        id: 10,
        module: "dextral",
        title: "decision procedure agrees with exhaustive enumeration over GF(2), GF(3), GF(5)",
        source: "definition of dextral symmetry",
        run: oracle_equivalence,
    },
    Criterion {
        id: 11,
        module: "algebra",
        title: "direct sums and subalgebras of dextral algebras are dextral",
        source: "closure remark",
        run: closure,
    },
    Criterion {
        id: 12,
        module: "algebra",
        title: "symmetric ideals decided through quotients",
        source: "quotient proposition",
        run: quotients,
    },
    Criterion {
        id: 13,
        module: "leavitt",
        title: "Leavitt path algebra classification and CK-1 associativity",
        source: "graph lemmas and classification theorem",
        run: leavitt_suite,
    },
    Criterion {
        id: 14,
        module: "identities",
        title: "anticommutative over GF(3): dextral iff anti-associative iff CB",
        source: "anti-commutative equivalence proposition",
        run: anticommutative_equivalence,
    },
];

/// Collects failures, unknowns and notes for one criterion.
#[derive(Default)]
pub struct Log {
    failures: Vec<String>,
    unknowns: Vec<String>,
    notes: Vec<String>,
}

impl Log {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn unknown(&mut self, what: String) {
        self.unknowns.push(what);
    }

    fn note(&mut self, what: String) {
        self.notes.push(what);
    }
}

fn selected(c: &Criterion, only: &Option<String>) -> bool {
    match only {
        None => true,
        Some(s) => s == c.module || s.parse::<u8>().is_ok_and(|n| n == c.id),
    }
}

pub fn run_criterion(c: &Criterion, opts: &VerifyOptions) -> CheckRecord {
    let mut log = Log::default();
    (c.run)(opts, &mut log);
    let status = if !log.failures.is_empty() {
        Status::Fail
    } else if !log.unknowns.is_empty() {
        Status::Unknown
    } else {
        Status::Pass
    };
    let details = log
        .failures
        .into_iter()
        .map(|s| format!("FAIL {s}"))
        .chain(log.unknowns.into_iter().map(|s| format!("UNKNOWN {s}")))
        .chain(log.notes)
        .collect();
    CheckRecord { id: c.id, module: c.module, title: c.title, source: c.source, status, details }
}

/// Runs the criteria selected by `opts.only`, in order.
pub fn run_all(opts: &VerifyOptions) -> Vec<CheckRecord> {
    CRITERIA.iter().filter(|c| selected(c, &opts.only)).map(|c| run_criterion(c, opts)).collect()
}

pub fn run_by_id(id: u8, opts: &VerifyOptions) -> Option<CheckRecord> {
    CRITERIA.iter().find(|c| c.id == id).map(|c| run_criterion(c, opts))
}

fn entry(id: &str) -> &'static CatalogEntry {
    catalog::get(id).expect("catalog id")
}

fn build(e: &CatalogEntry, p: &Params) -> AlgebraTable {
    e.instantiate(p, e.default_field()).expect("sampled parameters are admissible")
}

fn samples(e: &'static CatalogEntry, opts: &VerifyOptions) -> Vec<AlgebraTable> {
    e.sample_params(opts.param_range).iter().map(|p| build(e, p)).collect()
}

fn all_samples(opts: &VerifyOptions) -> Vec<(&'static CatalogEntry, AlgebraTable)> {
    catalog::entries().iter().flat_map(|e| samples(e, opts).into_iter().map(move |a| (e, a))).collect()
}

fn left_term(a: &AlgebraTable, n: usize) -> Subspace {
    series(a, SeriesKind::LeftLower).term(n).clone()
}

/// Decides and validates any witness; logs unknowns.
fn decide_checked(a: &AlgebraTable, cfg: &SearchConfig, log: &mut Log) -> Option<bool> {
    let v = decide_dextral_with(a, cfg);
    if let Some(w) = v.witness() {
        log.check(w.validate(a), || format!("{}: witness does not re-validate", a.name()));
    }
    match v.status() {
        "yes" => Some(true),
        "no" => Some(false),
        _ => {
            log.unknown(format!("{}: dextral status unknown", a.name()));
            None
        }
    }
}

fn expect_decision(a: &AlgebraTable, cfg: &SearchConfig, expected: bool, log: &mut Log, what: impl FnOnce() -> String) {
    if let Some(d) = decide_checked(a, cfg, log) {
        log.check(d == expected, what);
    }
}

fn is_witness(a: &AlgebraTable, names: [&str; 3]) -> bool {
    let [x, y, z] = names.map(|n| a.element(n).expect("basis name"));
    let abc = a.triple_right(&x, &y, &z).unwrap();
    let bac = a.triple_right(&y, &x, &z).unwrap();
    abc.is_zero() && !bac.is_zero()
}

fn transcription(opts: &VerifyOptions, log: &mut Log) {
    let mut count = 0;
    for (_, a) in all_samples(opts) {
        count += 1;
        let r = identities::is_right_leibniz(&a);
        log.check(r.holds(), || format!("{}: right Leibniz fails at {:?}", a.name(), r.first_violation.unwrap().indices));
    }
    log.note(format!("{count} instances checked"));
}

fn eighteen_classes(opts: &VerifyOptions, log: &mut Log) {
    let mut yes = 0;
    for i in 1..=22 {
        let id = format!("N{i}");
        let refuted = (7..=10).contains(&i);
        for a in samples(entry(&id), opts) {
            let Some(d) = decide_checked(&a, &opts.search, log) else { continue };
            log.check(d == !refuted, || format!("{}: decided {}", a.name(), if d { "yes" } else { "no" }));
            if refuted {
                // [y,[x,x]] = 0 while [x,[y,x]] ≠ 0
                log.check(is_witness(&a, ["y", "x", "x"]), || format!("{}: (y, x, x) is not a witness", a.name()));
            } else {
                yes += 1;
                log.check(left_term(&a, 3).is_zero(), || format!("{}: L(3) ≠ 0", a.name()));
            }
        }
    }
    log.note(format!("{yes} dextral instances among N1-N22 (excluding N7-N10)"));
}

fn two_dim_nilradical(opts: &VerifyOptions, log: &mut Log) {
    let r1 = build(entry("R1"), &Params::new());
    expect_decision(&r1, &opts.search, true, log, || "R1 not decided dextral".into());
    // S2: [z,[x,z]] = -x with x(zz) = 0; S3: [w,[y,w]] = -y with y(ww) = 0
    for (id, triple) in [("S2", ["x", "z", "z"]), ("S3", ["y", "w", "w"])] {
        let a = build(entry(id), &Params::new());
        expect_decision(&a, &opts.search, false, log, || format!("{id} not refuted"));
        log.check(is_witness(&a, triple), || format!("{id}: {triple:?} is not a witness"));
        let left = series(&a, SeriesKind::LeftLower);
        log.check(!left.terminal_is_zero(), || format!("{id}: left series reaches 0"));
        let (w, y) = (a.element("w").unwrap(), a.element("y").unwrap());
        let mut acc = y.clone();
        for n in 1..=6 {
            acc = a.multiply(&w, &acc).unwrap();
            let sign = if n % 2 == 0 { 1 } else { -1 };
            log.check(acc == y.scale(&a.field().from_i64(sign)), || format!("{id}: w^{n} y ≠ (-1)^{n} y"));
        }
    }
}

fn mu2_nilradical(opts: &VerifyOptions, log: &mut Log) {
    let mut algebras = samples(entry("L1"), opts);
    algebras.push(build(entry("L2"), &Params::new()));
    algebras.push(build(entry("L3"), &Params::new()));
    for a in &algebras {
        expect_decision(a, &opts.search, false, log, || format!("{} not refuted", a.name()));
        log.check(!is_left_nilpotent(a).holds, || format!("{} is left nilpotent", a.name()));
    }
    log.note(format!("{} instances", algebras.len()));
}

fn mu1_mu3_nilradical(opts: &VerifyOptions, log: &mut Log) {
    let mut algebras = vec![build(entry("R2"), &Params::new())];
    for beta in [-1, 0, 1, 2] {
        algebras.push(build(entry("R3"), &int_param("beta", beta)));
    }
    algebras.push(build(entry("R4"), &Params::new()));
    algebras.push(build(entry("R5"), &Params::new()));
    for a in &algebras {
        expect_decision(a, &opts.search, true, log, || format!("{} not decided dextral", a.name()));
        let v = is_left_nilpotent(a);
        log.check(v.index == Some(3), || format!("{}: left nilpotency index {:?}", a.name(), v.index));
    }
}

fn four_dim_characterization(opts: &VerifyOptions, log: &mut Log) {
    let mut count = 0;
    for (e, a) in all_samples(opts) {
        if e.dim() != Some(4) {
            continue;
        }
        count += 1;
        let Some(d) = decide_checked(&a, &opts.search, log) else { continue };
        let l3 = left_term(&a, 3).is_zero();
        log.check(d == l3, || format!("{}: dextral {d}, L(3) = 0 {l3}", a.name()));
    }
    log.note(format!("{count} 4-dim instances"));
}

fn examples(opts: &VerifyOptions, log: &mut Log) {
    let lnotr = build(entry("lnotr"), &Params::new());
    expect_decision(&lnotr, &opts.search, true, log, || "lnotr not dextral".into());
    log.check(is_left_nilpotent(&lnotr).index == Some(3), || "lnotr left index ≠ 3".into());
    log.check(!is_right_nilpotent(&lnotr).holds, || "lnotr right nilpotent".into());
    log.check(!identities::is_antiassociative(&lnotr).holds(), || "lnotr anti-associative".into());

    let lp = build(entry("Lprime"), &Params::new());
    log.check(series(&lp, SeriesKind::Derived).term(3).is_zero(), || "L'[3] ≠ 0".into());
    log.check(!is_left_nilpotent(&lp).holds, || "L' left nilpotent".into());

    for n in 2..=10 {
        let a = build(entry("towers_n"), &int_param("n", n));
        log.check(left_term(&a, 3).is_zero(), || format!("{}: L(3) ≠ 0", a.name()));
        expect_decision(&a, &opts.search, true, log, || format!("{} not dextral", a.name()));
    }

    let lie = build(entry("lie7_char3"), &Params::new());
    log.check(identities::is_lie(&lie).holds(), || "lie7 is not Lie over GF(3)".into());
    expect_decision(&lie, &opts.search, true, log, || "lie7 not dextral".into());
    let l3 = left_term(&lie, 3);
    log.check(!l3.is_zero(), || "lie7: L(3) = 0".into());
    log.check(l3.contains(&lie.element("x7").unwrap()).unwrap(), || "lie7: x7 ∉ L(3)".into());
    let x = |n: &str| lie.element(n).unwrap();
    log.check(lie.triple_right(&x("x1"), &x("x2"), &x("x3")).unwrap() == x("x7"), || "[x1,[x2,x3]] ≠ x7".into());
}

fn theorem_suite(opts: &VerifyOptions, log: &mut Log) {
    let (m_max, n_max) = opts.mixed_bracket_bounds;
    let mut count = 0;
    let mut mixed_failing = Vec::new();
    let mut restricted_failing = Vec::new();
    for (_, a) in all_samples(opts) {
        if !identities::is_right_leibniz(&a).holds() || !decide_dextral(&a).is_yes() {
            continue;
        }
        count += 1;
        let name = a.name().to_string();
        log.check(identities::cyclic_relations(&a).holds(), || format!("{name}: cyclic relations fail"));
        log.check(identities::nested_bracket_identity(&a).holds(), || format!("{name}: nested bracket identity fails"));
        let mixed = verify_mixed_bracket_law(&a, m_max, n_max).expect("precondition checked");
        if let Some(f) = mixed.first() {
            mixed_failing.push(format!(
                "{name} at (m, n) = ({}, {}): dim [L[m], L(n)] = {}, dim L(2^(m-1)+n) = {}",
                f.m, f.n, f.lhs_dim, f.rhs_dim
            ));
        }
        if !mixed_bracket_failures(&a, 1..=m_max, 2..=n_max).is_empty() {
            restricted_failing.push(name.clone());
        }
        let corr = verify_derived_left_correspondence(&a, opts.derived_left_bound).expect("precondition checked");
        log.check(corr.is_empty(), || format!("{name}: L[m] ≠ L(2^(m-1)) for m in {corr:?}"));
        log.check(verify_left_nilpotency_bound(&a).expect("precondition checked"), || format!("{name}: L(dim+1) ≠ 0"));
        log.check(is_solvable(&a).holds == is_left_nilpotent(&a).holds, || format!("{name}: solvable ≠ left nilpotent"));
    }
    log.note(format!("{count} dextral right Leibniz instances"));
    log.check(mixed_failing.is_empty(), || {
        format!(
            "[L[m], L(n)] = L(2^(m-1)+n) for 1 ≤ m ≤ {m_max}, 1 ≤ n ≤ {n_max} fails on {} instances; first: {}",
            mixed_failing.len(),
            mixed_failing[0]
        )
    });
    log.note(format!(
        "restricted to n ≥ 2 the same law fails on {} instances{}",
        restricted_failing.len(),
        if restricted_failing.is_empty() { String::new() } else { format!(": {}", restricted_failing.join(", ")) }
    ));
}

fn strict_inclusions(_opts: &VerifyOptions, log: &mut Log) {
    let right = catalog::entries().iter().find(|e| {
        let a = build(e, &e.default_params());
        is_right_nilpotent(&a).holds
    });
    log.check(right.is_some(), || "no right nilpotent entry".into());
    if let Some(e) = right {
        log.note(format!("right nilpotent: {}", e.id));
    }
    let lnotr = build(entry("lnotr"), &Params::new());
    log.check(is_left_nilpotent(&lnotr).holds && !is_right_nilpotent(&lnotr).holds, || {
        "lnotr does not separate left from right nilpotency".into()
    });
    let lp = build(entry("Lprime"), &Params::new());
    log.check(is_solvable(&lp).holds && !is_left_nilpotent(&lp).holds, || {
        "L' does not separate solvable from left nilpotent".into()
    });
}

fn small_entries(opts: &VerifyOptions) -> Vec<(&'static CatalogEntry, Params)> {
    let mut out = Vec::new();
    for e in catalog::entries() {
        if e.characteristic.is_some() {
            continue;
        }
        for p in e.sample_params(opts.param_range) {
            let dim = e.instantiate(&p, FieldSpec::Rational).map(|a| a.dim()).unwrap_or(usize::MAX);
            if dim <= 3 {
                out.push((e, p));
            }
        }
    }
    out
}

fn oracle_equivalence(opts: &VerifyOptions, log: &mut Log) {
    // the enumeration tier is disabled so that the two sides share no code
    let cfg = SearchConfig { enumeration_budget: 0, ..opts.search };
    let mut count = 0;
    let mut skipped = 0;
    for p in [2u64, 3, 5] {
        let field = FieldSpec::prime(p).unwrap();
        for (e, params) in small_entries(opts) {
            let Ok(a) = e.instantiate(&params, field) else {
                skipped += 1;
                continue;
            };
            count += 1;
            let oracle = exhaustive_oracle(&a, opts.search.enumeration_budget).expect("dim ≤ 3 fits the budget");
            let decided = decide_dextral_with(&a, &cfg);
            if let Some(w) = decided.witness() {
                log.check(w.validate(&a), || format!("{} over {field}: witness invalid", a.name()));
            }
            log.check(decided.same_status(&oracle), || {
                format!("{} over {field}: decided {}, oracle {}", a.name(), decided.status(), oracle.status())
            });
        }
    }
    log.note(format!("{count} reductions compared, {skipped} skipped (coefficients do not embed)"));
}

fn random_element(rng: &mut ChaCha8Rng, field: FieldSpec, dim: usize) -> Vector {
    loop {
        let c: Vec<i64> = (0..dim).map(|_| rng.gen_range(-1..=1)).collect();
        let v = Vector::from_i64(field, &c);
        if !v.is_zero() {
            return v;
        }
    }
}

fn closure(opts: &VerifyOptions, log: &mut Log) {
    let dextral: Vec<AlgebraTable> = catalog::entries()
        .iter()
        .filter(|e| e.characteristic.is_none())
        .map(|e| build(e, &e.default_params()))
        .filter(|a| decide_dextral(a).is_yes())
        .collect();
    let mut sums = 0;
    for i in 0..dextral.len() {
        for j in i..dextral.len() {
            let s = dextral[i].direct_sum(&dextral[j]).unwrap();
            sums += 1;
            expect_decision(&s, &opts.search, true, log, || format!("{} not dextral", s.name()));
        }
    }
    let gf3 = FieldSpec::prime(3).unwrap();
    let lie = build(entry("lie7_char3"), &Params::new());
    for other in [lie.clone(), dextral[0].over_field(gf3).unwrap()] {
        let s = lie.direct_sum(&other).unwrap();
        sums += 1;
        expect_decision(&s, &opts.search, true, log, || format!("{} not dextral", s.name()));
    }
    log.note(format!("{sums} direct sums"));

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut pool = dextral.clone();
    pool.push(lie);
    for _ in 0..opts.random_subalgebras {
        let a = pool.choose(&mut rng).unwrap();
        let gens: Vec<Vector> = (0..rng.gen_range(1..=2)).map(|_| random_element(&mut rng, a.field(), a.dim())).collect();
        let s = a.generated_subalgebra(&gens).unwrap();
        log.check(a.is_subalgebra(&s).unwrap(), || format!("{}: generated space not closed", a.name()));
        let sub = a.subalgebra(&s).unwrap();
        expect_decision(&sub, &opts.search, true, log, || {
            format!("{}: subalgebra of dim {} not dextral", a.name(), s.dim())
        });
    }
    log.note(format!("{} random subalgebras", opts.random_subalgebras));
}

/// Proper nonzero ideals among series terms and coordinate spans.
fn candidate_ideals(a: &AlgebraTable) -> Vec<Subspace> {
    let mut out: Vec<Subspace> = Vec::new();
    let mut push = |s: Subspace| {
        if !s.is_zero() && !s.is_full() && a.is_ideal(&s).unwrap() && !out.contains(&s) {
            out.push(s);
        }
    };
    for kind in SeriesKind::ALL {
        for t in series(a, kind).terms {
            push(t);
        }
    }
    let n = a.dim();
    for mask in 1u32..(1 << n) - 1 {
        let rows = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| a.basis_element(i));
        push(a.span(rows).unwrap());
    }
    out
}

fn quotients(opts: &VerifyOptions, log: &mut Log) {
    let mut pairs: Vec<(AlgebraTable, Subspace)> = Vec::new();
    for e in catalog::entries() {
        if e.characteristic.is_some() || e.dim().is_none() {
            continue;
        }
        let a = build(e, &e.default_params());
        for i in candidate_ideals(&a) {
            pairs.push((a.clone(), i));
        }
    }
    // half the sample from quotients that are dextral, half from those that are not
    let (sym, non): (Vec<_>, Vec<_>) = pairs.into_iter().partition(|(a, i)| {
        let (q, _) = a.quotient(i).unwrap();
        decide_dextral(&q).is_yes()
    });
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x9e37);
    let half = opts.quotient_pairs / 2;
    let take_non = half.min(non.len());
    let mut chosen: Vec<_> = non.choose_multiple(&mut rng, take_non).cloned().collect();
    chosen.extend(sym.choose_multiple(&mut rng, opts.quotient_pairs - take_non).cloned());
    let gf3 = FieldSpec::prime(3).unwrap();
    let (mut yes, mut no, mut enumerated) = (0, 0, 0);
    for (a, ideal) in &chosen {
        let tag = format!("{} / dim {}", a.name(), ideal.dim());
        let via = is_symmetric_ideal(a, ideal).unwrap();
        let (q, _) = a.quotient(ideal).unwrap();
        let direct = decide_dextral(&q);
        log.check(via.same_status(&direct), || format!("{tag}: {} vs {}", via.status(), direct.status()));
        match via.status() {
            "yes" => yes += 1,
            "no" => no += 1,
            _ => log.unknown(format!("{tag}: unknown")),
        }
        if let Some(w) = via.witness() {
            log.check(w.validate_modulo(a, ideal), || format!("{tag}: lifted witness invalid"));
        }
        // independent check by enumeration over GF(3) when the reduction exists
        if let (Ok(a3), true) = (a.over_field(gf3), a.dim() <= 4) {
            let i3 = reduce_subspace(ideal, gf3);
            if let Some(i3) = i3.filter(|s| s.dim() == ideal.dim() && a3.is_ideal(s).unwrap()) {
                let oracle = exhaustive_symmetric_ideal(&a3, &i3, opts.search.enumeration_budget).unwrap();
                let decided = is_symmetric_ideal(&a3, &i3).unwrap();
                enumerated += 1;
                log.check(oracle.same_status(&decided), || {
                    format!("{tag} over GF(3): enumeration {} vs quotient {}", oracle.status(), decided.status())
                });
            }
        }
    }
    log.note(format!("{} pairs: {yes} symmetric, {no} not; {enumerated} also enumerated over GF(3)", chosen.len()));
}

fn reduce_subspace(s: &Subspace, field: FieldSpec) -> Option<Subspace> {
    let rows: Option<Vec<Vector>> = s
        .basis()
        .iter()
        .map(|v| {
            let entries: Option<Vec<_>> =
                v.entries().iter().map(|c| c.as_rational().and_then(|q| field.from_rational(q).ok())).collect();
            entries.and_then(|e| Vector::new(field, e).ok())
        })
        .collect();
    Subspace::span(field, s.ambient_dim(), rows?).ok()
}

/// The five reference graphs with their expected `(dextral, |I|, |J|, iso class)`.
pub fn reference_graphs() -> Vec<(DirectedGraph, bool, usize, usize, Option<&'static str>)> {
    let g = |v: &[&str], e: &[(&str, &str, &str)]| DirectedGraph::from_parts(v, e).unwrap();
    vec![
        (g(&["v"], &[]), true, 1, 0, Some("R")),
        (g(&["v"], &[("f", "v", "v")]), true, 0, 1, Some(leavitt::LAURENT)),
        (g(&["u", "v"], &[("e", "u", "v")]), false, 0, 0, None),
        (g(&["v"], &[("f", "v", "v"), ("g", "v", "v")]), false, 0, 0, None),
        (
            g(&["a", "b", "c", "d", "e"], &[("f", "d", "d"), ("g", "e", "e")]),
            true,
            3,
            2,
            Some("R ⊕ R ⊕ R ⊕ R[x,x^-1] ⊕ R[x,x^-1]"),
        ),
    ]
}

/// A random graph with at most `max_v` vertices and `max_e` edges.
pub fn random_graph(rng: &mut impl Rng, max_v: usize, max_e: usize) -> DirectedGraph {
    let nv = rng.gen_range(1..=max_v);
    let ne = rng.gen_range(0..=max_e);
    let vertices: Vec<String> = (0..nv).map(|i| format!("v{i}")).collect();
    let edges = (0..ne)
        .map(|i| leavitt::EdgeSpec {
            name: format!("e{i}"),
            src: vertices[rng.gen_range(0..nv)].clone(),
            rng: vertices[rng.gen_range(0..nv)].clone(),
        })
        .collect();
    DirectedGraph::new(vertices, edges).expect("generated graph is valid")
}

fn leavitt_suite(opts: &VerifyOptions, log: &mut Log) {
    for (g, dextral, i, j, iso) in reference_graphs() {
        let c = classify_graph(&g);
        log.check(c.dextral == dextral, || format!("{g}: dextral {}", c.dextral));
        if dextral {
            log.check(c.isolated == i && c.single_loop == j, || format!("{g}: |I| = {}, |J| = {}", c.isolated, c.single_loop));
        }
        log.check(c.iso_class.as_deref() == iso, || format!("{g}: iso class {:?}", c.iso_class));
        log.check(c.violations.is_empty() == dextral, || format!("{g}: violations disagree with verdict"));
        for v in &c.violations {
            log.check(v.validated(&g) && v.certificate.is_some(), || format!("{g}: witness not validated"));
        }
    }
    let uv = &reference_graphs()[2].0;
    let c = classify_graph(uv);
    let q = FieldSpec::Rational;
    let expected = ["e", "u", "v"].map(|n| uv.generator(q, n).unwrap());
    log.check(
        c.violations.first().map(|v| [&v.a, &v.b, &v.c]) == Some([&expected[0], &expected[1], &expected[2]]),
        || "u -> v: witness is not (e, u, v)".into(),
    );
    let two = &reference_graphs()[3].0;
    let c = classify_graph(two);
    let expected = ["g*", "f", "v"].map(|n| two.generator(q, n).unwrap());
    log.check(
        c.violations.first().map(|v| [&v.a, &v.b, &v.c]) == Some([&expected[0], &expected[1], &expected[2]]),
        || "double loop: witness is not (g*, f, v)".into(),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x1ea7);
    let mut checked = 0;
    while checked < opts.leavitt_triples {
        let g = random_graph(&mut rng, 4, 4);
        let monos = g.monomials(3);
        for _ in 0..50 {
            let [x, y, z] = [(); 3].map(|_| LpaElement::monomial(q, monos.choose(&mut rng).unwrap().clone()));
            let xy_z = leavitt::lpa_multiply(&g, &leavitt::lpa_multiply(&g, &x, &y).unwrap(), &z).unwrap();
            let x_yz = leavitt::lpa_multiply(&g, &x, &leavitt::lpa_multiply(&g, &y, &z).unwrap()).unwrap();
            log.check(xy_z == x_yz, || format!("{g}: associativity fails on {} {} {}", g.render(&x), g.render(&y), g.render(&z)));
            checked += 1;
        }
    }
    log.note(format!("{checked} monomial triples checked for associativity"));
}

/// A random anticommutative table over `field`.
pub fn random_anticommutative(rng: &mut impl Rng, field: FieldSpec, dim: usize, name: &str) -> AlgebraTable {
    let p = field.order().expect("finite field") as i64;
    let mut sc = vec![vec![Vector::zeros(field, dim); dim]; dim];
    for i in 0..dim {
        for j in i + 1..dim {
            if rng.gen_bool(0.5) {
                continue;
            }
            let c: Vec<i64> = (0..dim).map(|_| if rng.gen_bool(0.6) { 0 } else { rng.gen_range(1..p) }).collect();
            let v = Vector::from_i64(field, &c);
            sc[j][i] = -&v;
            sc[i][j] = v;
        }
    }
    let basis = (1..=dim).map(|i| format!("e{i}")).collect();
    AlgebraTable::new(name, field, basis, sc).expect("well-formed table")
}

fn anticommutative_equivalence(opts: &VerifyOptions, log: &mut Log) {
    let gf3 = FieldSpec::prime(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xac);
    let mut algebras = vec![build(entry("lie7_char3"), &Params::new())];
    for k in 0..opts.random_anticommutative {
        let dim = rng.gen_range(1..=3);
        algebras.push(random_anticommutative(&mut rng, gf3, dim, &format!("random{k}")));
    }
    let mut dextral_count = 0;
    for a in &algebras {
        log.check(identities::is_anticommutative(a).holds(), || format!("{}: not anticommutative", a.name()));
        let Some(d) = decide_checked(a, &opts.search, log) else { continue };
        let anti = identities::is_antiassociative(a).holds();
        let cb = cb_condition_exhaustive(a, opts.search.enumeration_budget).expect("within budget").holds();
        dextral_count += usize::from(d);
        log.check(d == anti && anti == cb, || format!("{}: dextral {d}, anti-associative {anti}, CB {cb}", a.name()));
    }
    log.note(format!("{} algebras, {dextral_count} dextral", algebras.len()));
}
