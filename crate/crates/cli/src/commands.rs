use std::path::Path;

use anyhow::{anyhow, bail, Context};
use serde_json::{json, Value};

use dextral_core::algebra::AlgebraTable;
use dextral_core::catalog::{self, CatalogEntry};
use dextral_core::dextral::{decide_dextral_with, DextralVerdict, SearchConfig};
use dextral_core::exactlin::FieldSpec;
use dextral_core::identities::{self, IdentityReport};
use dextral_core::leavitt::{classify_graph, DirectedGraph};
use dextral_core::series::{
    is_left_nilpotent, is_nilpotent, is_right_nilpotent, is_solvable, series, verify_derived_left_correspondence,
    verify_left_nilpotency_bound, SeriesKind, SeriesVerdict,
};
use dextral_core::verify::{criteria, run_all, Status, VerifyOptions};

use crate::report::{sha256_hex, Record, Report};

fn read(path: &Path) -> anyhow::Result<Vec<u8>> {
    std::fs::read(path).with_context(|| format!("reading {}", path.display()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn identity_record(alg: &AlgebraTable, r: &IdentityReport) -> Record {
    let name = r.identity.to_string();
    let rec = Record::new(&format!("identity.{name}"), "identities", "basis-tuple scan", Status::Pass);
    match &r.first_violation {
        None => rec.result(json!({"holds": true})).detail(format!("{name}: holds")),
        Some(v) => {
            let at: Vec<&str> = v.indices.iter().map(|&i| alg.basis_names()[i].as_str()).collect();
            let (lhs, rhs) = (alg.render(&v.lhs), alg.render(&v.rhs));
            rec.result(json!({"holds": false, "at": at, "lhs": lhs, "rhs": rhs}))
                .detail(format!("{name}: fails at ({}): {lhs} != {rhs}", at.join(",")))
        }
    }
}

fn dextral_record(alg: &AlgebraTable, v: &DextralVerdict) -> Record {
    let (status, detail) = match v {
        DextralVerdict::ProvedYes(r) => (Status::Pass, format!("dextral: yes ({})", r.as_str())),
        DextralVerdict::ProvedNo(w) => {
            let status = if w.validate(alg) { Status::Pass } else { Status::Fail };
            let d = format!(
                "dextral: no, witness a = {}, b = {}, c = {}; a(bc) = {}, b(ac) = {}",
                alg.render(&w.a),
                alg.render(&w.b),
                alg.render(&w.c),
                alg.render(&w.abc),
                alg.render(&w.bac)
            );
            (status, d)
        }
        DextralVerdict::Unknown => (Status::Unknown, "dextral: unknown within the search budget".to_string()),
    };
    Record::new("dextral", "dextral", "decision procedure", status).result(v.to_json()).detail(detail)
}

fn predicate_record(name: &str, v: SeriesVerdict) -> Record {
    let detail = match v.index {
        Some(n) => format!("{name}: yes, term {n} is zero"),
        None => format!("{name}: no"),
    };
    Record::new(&format!("predicate.{name}"), "series", "series terminal term", Status::Pass)
        .result(json!({"holds": v.holds, "index": v.index}))
        .detail(detail)
}

/// Implications that hold for every algebra, plus those that hold for right
/// Leibniz algebras and, when dextral, the left nilpotency statements.
fn consistency_record(alg: &AlgebraTable, leibniz: bool, dextral: bool) -> Record {
    let mut broken = Vec::new();
    let full = is_nilpotent(alg).holds;
    let right = is_right_nilpotent(alg).holds;
    let left = is_left_nilpotent(alg).holds;
    if full && !(right && left) {
        broken.push("nilpotent but not right and left nilpotent".to_string());
    }
    let derived = series(alg, SeriesKind::Derived);
    let lower = series(alg, SeriesKind::LeftLower);
    for n in 1..=alg.dim() + 2 {
        if !derived.term(n).is_subspace_of(lower.term(n)).expect("same algebra") {
            broken.push(format!("derived term {n} not inside left term {n}"));
        }
    }
    if leibniz && right != full {
        broken.push("right nilpotency differs from nilpotency".to_string());
    }
    if leibniz && dextral {
        let off = verify_derived_left_correspondence(alg, 4).expect("preconditions checked");
        if !off.is_empty() {
            broken.push(format!("derived and left terms differ at m = {off:?}"));
        }
        if !verify_left_nilpotency_bound(alg).expect("preconditions checked") {
            broken.push(format!("left term {} is nonzero", alg.dim() + 1));
        }
    }
    let status = if broken.is_empty() { Status::Pass } else { Status::Fail };
    let mut rec = Record::new("consistency", "series", "structural implications", status)
        .result(json!({"right_leibniz": leibniz, "checked_dextral_statements": leibniz && dextral, "broken": broken}));
    if broken.is_empty() {
        rec = rec.detail("consistency: all implications hold");
    }
    for b in &broken {
        rec = rec.detail(format!("consistency: {b}"));
    }
    rec
}

pub fn check(path: &Path, field: Option<FieldSpec>, search: &SearchConfig) -> anyhow::Result<Report> {
    let bytes = read(path)?;
    let text = std::str::from_utf8(&bytes).context("algebra file is not UTF-8")?;
    let mut alg = AlgebraTable::from_json(text).with_context(|| format!("parsing {}", path.display()))?;
    if let Some(f) = field {
        alg = alg.over_field(f).map_err(|e| anyhow!("field mismatch: cannot read {} over {f}: {e}", alg.field()))?;
    }
    let mut records: Vec<Record> = identities::all_reports(&alg).iter().map(|r| identity_record(&alg, r)).collect();
    let verdict = decide_dextral_with(&alg, search);
    records.push(dextral_record(&alg, &verdict));
    for kind in SeriesKind::ALL {
        let t = series(&alg, kind);
        let dims: Vec<String> = t.dims().iter().map(|d| d.to_string()).collect();
        records.push(
            Record::new(&format!("series.{}", kind.as_str()), "series", "series iteration", Status::Pass)
                .result(t.to_json())
                .detail(format!("series {}: dims {}", kind.as_str(), dims.join(" "))),
        );
    }
    records.push(predicate_record("solvable", is_solvable(&alg)));
    records.push(predicate_record("left_nilpotent", is_left_nilpotent(&alg)));
    records.push(predicate_record("right_nilpotent", is_right_nilpotent(&alg)));
    records.push(predicate_record("nilpotent", is_nilpotent(&alg)));
    let leibniz = identities::is_right_leibniz(&alg).holds();
    records.push(consistency_record(&alg, leibniz, verdict.is_yes()));
    Ok(Report {
        command: "check",
        subject: json!({"name": alg.name(), "field": alg.field().to_string(), "dim": alg.dim()}),
        input_digest: sha256_hex(&bytes),
        records,
    })
}

pub fn leavitt(path: &Path) -> anyhow::Result<Report> {
    let bytes = read(path)?;
    let text = std::str::from_utf8(&bytes).context("graph file is not UTF-8")?;
    let g = DirectedGraph::from_json(text).with_context(|| format!("parsing {}", path.display()))?;
    let c = classify_graph(&g);
    let iso = c.iso_class.clone().unwrap_or_else(|| "none".to_string());
    let mut class = Record::new("classification", "leavitt", "graph shape", Status::Pass)
        .result(c.to_json(&g))
        .detail(format!("dextral: {}", yes_no(c.dextral)));
    if c.dextral {
        class = class
            .detail(format!("vertices without loops: {}, with one loop: {}", c.isolated, c.single_loop))
            .detail(format!("iso class: {iso}"));
    }
    let mut records = vec![class];
    for (k, v) in c.violations.iter().enumerate() {
        let j = v.to_json(&g);
        let status = if v.validated(&g) { Status::Pass } else { Status::Fail };
        let s = |key: &str| j[key].as_str().unwrap_or_default().to_string();
        records.push(
            Record::new(&format!("violation.{}", k + 1), "leavitt", "certified witness", status)
                .result(j.clone())
                .detail(format!(
                    "{} at {}: a = {}, b = {}, c = {}; a(bc) = {}, b(ac) = {}",
                    s("lemma"),
                    s("at"),
                    s("a"),
                    s("b"),
                    s("c"),
                    s("abc"),
                    s("bac")
                )),
        );
    }
    Ok(Report {
        command: "leavitt",
        subject: json!({"vertices": g.vertex_count(), "edges": g.edge_count()}),
        input_digest: sha256_hex(&bytes),
        records,
    })
}

/// Canonical description of the options, hashed as the input digest.
fn options_json(opts: &VerifyOptions) -> Value {
    json!({
        "param_range": [opts.param_range.0, opts.param_range.1],
        "only": opts.only,
        "witness_depth": opts.search.depth,
        "triple_budget": opts.search.triple_budget,
        "enumeration_budget": opts.search.enumeration_budget,
        "seed": opts.seed,
        "mixed_bracket_bounds": [opts.mixed_bracket_bounds.0, opts.mixed_bracket_bounds.1],
        "derived_left_bound": opts.derived_left_bound,
        "random_subalgebras": opts.random_subalgebras,
        "quotient_pairs": opts.quotient_pairs,
        "leavitt_triples": opts.leavitt_triples,
        "random_anticommutative": opts.random_anticommutative,
    })
}

pub fn verify(opts: &VerifyOptions) -> anyhow::Result<Report> {
    if let Some(only) = &opts.only {
        let known = criteria().iter().any(|c| c.module == only || only.parse::<u8>().is_ok_and(|n| n == c.id));
        if !known {
            let mut modules: Vec<&str> = criteria().iter().map(|c| c.module).collect();
            modules.dedup();
            bail!("--only {only:?} matches no check; use a criterion number or one of {}", modules.join(", "));
        }
    }
    let options = options_json(opts);
    let digest = sha256_hex(serde_json::to_string(&options).expect("serializable").as_bytes());
    let records = run_all(opts).into_iter().map(Record::from).collect();
    Ok(Report { command: "verify", subject: options, input_digest: digest, records })
}

pub fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let lo: i64 = a.trim().parse().map_err(|_| format!("bad lower bound {a:?}"))?;
    let hi: i64 = b.trim().parse().map_err(|_| format!("bad upper bound {b:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

pub fn catalog_list() -> String {
    let mut out = String::new();
    for e in catalog::entries() {
        let dim = e.dim().map_or("n".to_string(), |d| d.to_string());
        let param = e.param.map_or(String::new(), |p| format!("{} in {}", p.name, p.domain));
        out.push_str(&format!("{:<12} dim {:<2} {:<6} {:<24} {}\n", e.id, dim, e.default_field().to_string(), param, e.display));
    }
    out
}

fn claim_line(label: &str, value: String, source: &str) -> String {
    format!("  {label:<16} {value:<6} ({source})\n")
}

pub fn catalog_show(id: &str) -> anyhow::Result<String> {
    let e: &CatalogEntry = catalog::get(id)?;
    let mut out = format!("{} ({})\n", e.id, e.display);
    out.push_str(&format!("field: {}\n", e.default_field()));
    if let Some(p) = e.param {
        out.push_str(&format!("parameter: {} in {}\n", p.name, p.domain));
    }
    if let Some(d) = e.dim() {
        out.push_str(&format!("dimension: {d}\n"));
    }
    out.push_str("products:\n");
    for p in e.render_products() {
        out.push_str(&format!("  {p}\n"));
    }
    let x = &e.expected;
    out.push_str("expected:\n");
    out.push_str(&claim_line("dextral", yes_no(x.dextral.value).into(), x.dextral.source));
    out.push_str(&claim_line("solvable", yes_no(x.solvable.value).into(), x.solvable.source));
    let left = x.left_nilpotent.value.map_or("no".to_string(), |n| format!("L({n})=0"));
    out.push_str(&claim_line("left nilpotent", left, x.left_nilpotent.source));
    out.push_str(&claim_line("right nilpotent", yes_no(x.right_nilpotent.value).into(), x.right_nilpotent.source));
    if let Some(n) = x.nilradical {
        out.push_str(&format!("  {:<16} {n}\n", "nilradical"));
    }
    for n in e.notes {
        out.push_str(&format!("note: {n}\n"));
    }
    Ok(out)
}

pub fn catalog_export(id: &str, params: &[String], field: Option<FieldSpec>) -> anyhow::Result<String> {
    let e = catalog::get(id)?;
    let params = if params.is_empty() { e.default_params() } else { catalog::parse_params(params)? };
    let alg = e.instantiate(&params, field.unwrap_or_else(|| e.default_field()))?;
    Ok(alg.to_json())
}

pub fn summary(report: &Report) -> String {
    let mut out = String::new();
    if let Some(name) = report.subject.get("name").and_then(Value::as_str) {
        out.push_str(&format!("{name} over {}, dim {}\n", report.subject["field"].as_str().unwrap_or("?"), report.subject["dim"]));
    }
    for r in &report.records {
        let id = match &r.id {
            Value::Number(n) => format!("criterion {n}"),
            v => v.as_str().unwrap_or_default().to_string(),
        };
        out.push_str(&format!("{:<7} {id}\n", r.status.as_str().to_uppercase()));
        for d in &r.details {
            out.push_str(&format!("        {d}\n"));
        }
    }
    out.push_str(&format!(
        "{} pass, {} fail, {} unknown\n",
        report.count(Status::Pass),
        report.count(Status::Fail),
        report.count(Status::Unknown)
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-2..2"), Ok((-2, 2)));
        assert_eq!(parse_range("0..0"), Ok((0, 0)));
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("1-2").is_err());
    }

    #[test]
    fn every_catalog_entry_is_listed_and_shown() {
        let list = catalog_list();
        for e in catalog::entries() {
            assert!(list.lines().any(|l| l.starts_with(e.id)), "{}", e.id);
            assert!(catalog_show(e.id).unwrap().contains("products:"));
        }
        assert!(catalog_show("nope").is_err());
    }

    #[test]
    fn export_defaults_and_overrides() {
        let a = catalog_export("N20", &[], None).unwrap();
        assert!(a.contains("N20(alpha=0)"));
        let b = catalog_export("N20", &["alpha=1/2".to_string()], None).unwrap();
        assert!(b.contains("N20(alpha=1/2)"));
        assert!(catalog_export("lie7_char3", &[], Some(FieldSpec::Rational)).is_err());
    }
}
