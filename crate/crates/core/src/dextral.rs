//! Deciding dextral symmetry: `a(bc) = 0` implies `b(ac) = 0`.
//!
//! [`decide_dextral`] runs a sequence of sound tiers and stops at the first
//! conclusive one. Refutations always carry a [`Witness`] that re-validates
//! in the algebra. Over GF(p) the brute-force [`exhaustive_oracle`] is an
//! independent check that enumerates every triple of elements on a dense
//! residue table and never calls into the tiered search.

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraTable, Element};
use crate::exactlin::{FieldSpec, Subspace, Vector};
use crate::identities;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DextralError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("exhaustive enumeration needs a prime field, got {0}")]
    NotFinite(FieldSpec),
    #[error("enumeration of {needed} cases exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
}

/// Which pairing of (anti)commutativity with (anti)associativity held.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructuralCase {
    CommutativeAssociative,
    CommutativeAntiassociative,
    AnticommutativeAssociative,
    AnticommutativeAntiassociative,
}

impl StructuralCase {
    pub fn as_str(&self) -> &'static str {
        match self {
            StructuralCase::CommutativeAssociative => "commutative-associative",
            StructuralCase::CommutativeAntiassociative => "commutative-antiassociative",
            StructuralCase::AnticommutativeAssociative => "anticommutative-associative",
            StructuralCase::AnticommutativeAntiassociative => "anticommutative-antiassociative",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum YesReason {
    /// `e_i(e_j e_k) = 0` for all basis triples, so `a(bc) = 0` always.
    AllTriplesZero,
    /// `x(yz) + y(xz) = 0` identically.
    DextralIdentity,
    StructuralSufficiency(StructuralCase),
    ExhaustiveEnumeration,
}

impl YesReason {
    pub fn as_str(&self) -> &'static str {
        match self {
            YesReason::AllTriplesZero => "all-triples-zero",
            YesReason::DextralIdentity => "dextral-identity",
            YesReason::StructuralSufficiency(_) => "structural-sufficiency",
            YesReason::ExhaustiveEnumeration => "exhaustive-enumeration",
        }
    }
}

/// A triple with `a(bc) = 0` and `b(ac) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub a: Element,
    pub b: Element,
    pub c: Element,
    pub abc: Element,
    pub bac: Element,
}

impl Witness {
    fn evaluate(alg: &AlgebraTable, a: Element, b: Element, c: Element) -> Witness {
        let abc = alg.mul(&a, &alg.mul(&b, &c));
        let bac = alg.mul(&b, &alg.mul(&a, &c));
        Witness { a, b, c, abc, bac }
    }

    /// Re-evaluates both triple products in `alg`.
    pub fn validate(&self, alg: &AlgebraTable) -> bool {
        match (alg.triple_right(&self.a, &self.b, &self.c), alg.triple_right(&self.b, &self.a, &self.c)) {
            (Ok(abc), Ok(bac)) => abc.is_zero() && !bac.is_zero() && abc == self.abc && bac == self.bac,
            _ => false,
        }
    }

    /// Re-evaluates modulo an ideal: `a(bc) ∈ I` and `b(ac) ∉ I`.
    pub fn validate_modulo(&self, alg: &AlgebraTable, ideal: &Subspace) -> bool {
        let (Ok(abc), Ok(bac)) = (alg.triple_right(&self.a, &self.b, &self.c), alg.triple_right(&self.b, &self.a, &self.c))
        else {
            return false;
        };
        matches!((ideal.contains(&abc), ideal.contains(&bac)), (Ok(true), Ok(false)))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": coords(&self.a),
            "b": coords(&self.b),
            "c": coords(&self.c),
            "abc": coords(&self.abc),
            "bac": coords(&self.bac),
        })
    }
}

fn coords(v: &Vector) -> Vec<String> {
    v.entries().iter().map(|s| s.to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DextralVerdict {
    ProvedYes(YesReason),
    ProvedNo(Witness),
    Unknown,
}

impl DextralVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, DextralVerdict::ProvedYes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, DextralVerdict::ProvedNo(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            DextralVerdict::ProvedNo(w) => Some(w),
            _ => None,
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            DextralVerdict::ProvedYes(_) => "yes",
            DextralVerdict::ProvedNo(_) => "no",
            DextralVerdict::Unknown => "unknown",
        }
    }

    /// Same status, ignoring reasons and witnesses.
    pub fn same_status(&self, other: &DextralVerdict) -> bool {
        self.status() == other.status()
    }

    pub fn to_json(&self) -> Value {
        match self {
            DextralVerdict::ProvedYes(YesReason::StructuralSufficiency(case)) => {
                json!({"status": "yes", "reason": "structural-sufficiency", "case": case.as_str()})
            }
            DextralVerdict::ProvedYes(r) => json!({"status": "yes", "reason": r.as_str()}),
            DextralVerdict::ProvedNo(w) => json!({"status": "no", "witness": w.to_json()}),
            DextralVerdict::Unknown => json!({"status": "unknown"}),
        }
    }
}

/// How far the witness search may go.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// 1: basis triples. 2: also `b = c` basis vectors and pair sums.
    /// 3: also triples with coordinates in {-1, 0, 1}.
    pub depth: u8,
    /// Maximum number of {-1, 0, 1} triples examined.
    pub triple_budget: u64,
    /// Maximum `p^(3·dim)` for exhaustive enumeration over GF(p).
    pub enumeration_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { depth: 3, triple_budget: 100_000, enumeration_budget: 10_000_000 }
    }
}

pub fn decide_dextral(alg: &AlgebraTable) -> DextralVerdict {
    decide_dextral_with(alg, &SearchConfig::default())
}

pub fn decide_dextral_with(alg: &AlgebraTable, cfg: &SearchConfig) -> DextralVerdict {
    if all_triples_zero(alg) {
        return DextralVerdict::ProvedYes(YesReason::AllTriplesZero);
    }
    if identities::dextral_identity(alg).holds() {
        return DextralVerdict::ProvedYes(YesReason::DextralIdentity);
    }
    if let Some(case) = structural_case(alg) {
        return DextralVerdict::ProvedYes(YesReason::StructuralSufficiency(case));
    }
    if let Some(w) = basis_witness(alg) {
        return DextralVerdict::ProvedNo(w);
    }
    // For right Leibniz algebras dextral symmetry is equivalent to the
    // dextral identity, and a failure of the identity shows up as
    // w(yw) ≠ 0 with y a basis vector and w a basis vector or a sum of two.
    let leibniz = identities::is_right_leibniz(alg).holds();
    if cfg.depth >= 2 || leibniz {
        if let Some(w) = pattern_witness(alg) {
            return DextralVerdict::ProvedNo(w);
        }
    }
    debug_assert!(!leibniz, "Leibniz algebra failing the dextral identity without a pattern witness");
    if cfg.depth >= 3 {
        if let Some(w) = grid_witness(alg, cfg.triple_budget) {
            return DextralVerdict::ProvedNo(w);
        }
    }
    if let FieldSpec::Prime(p) = alg.field() {
        if enumeration_size(p.get(), alg.dim(), 3) <= cfg.enumeration_budget as u128 {
            if let Ok(v) = exhaustive_oracle(alg, cfg.enumeration_budget) {
                return v;
            }
        }
    }
    DextralVerdict::Unknown
}

fn all_triples_zero(alg: &AlgebraTable) -> bool {
    let n = alg.dim();
    (0..n).all(|j| {
        (0..n).all(|k| {
            let bc = alg.structure_constant(j, k);
            bc.is_zero() || (0..n).all(|i| alg.basis_left_mul(i, bc).is_zero())
        })
    })
}

fn structural_case(alg: &AlgebraTable) -> Option<StructuralCase> {
    let comm = identities::is_commutative(alg).holds();
    let anti = identities::is_anticommutative(alg).holds();
    if !comm && !anti {
        return None;
    }
    let assoc = identities::is_associative(alg).holds();
    let antiassoc = identities::is_antiassociative(alg).holds();
    match (comm, anti, assoc, antiassoc) {
        (true, _, true, _) => Some(StructuralCase::CommutativeAssociative),
        (true, _, _, true) => Some(StructuralCase::CommutativeAntiassociative),
        (_, true, true, _) => Some(StructuralCase::AnticommutativeAssociative),
        (_, true, _, true) => Some(StructuralCase::AnticommutativeAntiassociative),
        _ => None,
    }
}

fn try_witness(alg: &AlgebraTable, a: &Element, b: &Element, c: &Element) -> Option<Witness> {
    let abc = alg.mul(a, &alg.mul(b, c));
    if !abc.is_zero() {
        return None;
    }
    let bac = alg.mul(b, &alg.mul(a, c));
    (!bac.is_zero()).then(|| Witness { a: a.clone(), b: b.clone(), c: c.clone(), abc, bac })
}

fn basis_witness(alg: &AlgebraTable) -> Option<Witness> {
    let n = alg.dim();
    let basis: Vec<Element> = (0..n).map(|i| alg.basis_element(i)).collect();
    for a in &basis {
        for b in &basis {
            for c in &basis {
                if let Some(w) = try_witness(alg, a, b, c) {
                    return Some(w);
                }
            }
        }
    }
    None
}

/// Witnesses of the form `(a, w, w)`: `a(ww) = 0`, `w(aw) ≠ 0`, with `w`
/// running over basis vectors and then `e_i + e_j` for `i < j`.
fn pattern_witness(alg: &AlgebraTable) -> Option<Witness> {
    let n = alg.dim();
    let basis: Vec<Element> = (0..n).map(|i| alg.basis_element(i)).collect();
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
    let ws = basis.iter().cloned().chain(pairs.map(|(i, j)| &basis[i] + &basis[j]));
    for w in ws {
        for a in &basis {
            if let Some(wit) = try_witness(alg, a, &w, &w) {
                return Some(wit);
            }
        }
    }
    None
}

/// Nonzero vectors with coordinates in {0, 1, -1}, most significant
/// coordinate first, duplicates (over GF(2)) removed.
fn small_vectors(field: FieldSpec, dim: usize) -> Vec<Element> {
    let digits = [0i64, 1, -1];
    let total = 3usize.pow(dim as u32);
    let mut out: Vec<Element> = Vec::with_capacity(total);
    let mut seen = std::collections::HashSet::new();
    for mut k in 1..total {
        let mut c = vec![0i64; dim];
        for slot in c.iter_mut().rev() {
            *slot = digits[k % 3];
            k /= 3;
        }
        let v = Vector::from_i64(field, &c);
        if !v.is_zero() && seen.insert(v.clone()) {
            out.push(v);
        }
    }
    out
}

fn grid_witness(alg: &AlgebraTable, budget: u64) -> Option<Witness> {
    if alg.dim() > 10 {
        return None;
    }
    let vs = small_vectors(alg.field(), alg.dim());
    let mut examined = 0u64;
    for a in &vs {
        for b in &vs {
            for c in &vs {
                if examined >= budget {
                    return None;
                }
                examined += 1;
                if let Some(w) = try_witness(alg, a, b, c) {
                    return Some(w);
                }
            }
        }
    }
    None
}

fn enumeration_size(p: u64, dim: usize, arity: u32) -> u128 {
    (p as u128).checked_pow(dim as u32 * arity).unwrap_or(u128::MAX)
}

/// Structure constants as residues, for brute-force enumeration.
struct DenseTable {
    p: u64,
    dim: usize,
    /// `sc[(i * dim + j) * dim + k]` = coefficient of `e_k` in `e_i e_j`.
    sc: Vec<u64>,
}

impl DenseTable {
    fn new(alg: &AlgebraTable) -> Result<Self, DextralError> {
        let FieldSpec::Prime(p) = alg.field() else {
            return Err(DextralError::NotFinite(alg.field()));
        };
        let dim = alg.dim();
        let mut sc = vec![0; dim * dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                for (k, s) in alg.structure_constant(i, j).entries().iter().enumerate() {
                    sc[(i * dim + j) * dim + k] = s.residue().expect("prime field");
                }
            }
        }
        Ok(DenseTable { p: p.get(), dim, sc })
    }

    fn count(&self) -> usize {
        (self.p as usize).pow(self.dim as u32)
    }

    /// Element number `idx`; coordinate 0 is the most significant digit.
    fn decode(&self, mut idx: usize) -> Vec<u64> {
        let mut c = vec![0; self.dim];
        for slot in c.iter_mut().rev() {
            *slot = (idx % self.p as usize) as u64;
            idx /= self.p as usize;
        }
        c
    }

    fn encode(&self, c: &[u64]) -> usize {
        c.iter().fold(0, |acc, &d| acc * self.p as usize + d as usize)
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (n, p) = (self.dim, self.p);
        let mut out = vec![0u64; n];
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            for j in 0..n {
                if b[j] == 0 {
                    continue;
                }
                let ab = a[i] * b[j] % p;
                let row = &self.sc[(i * n + j) * n..(i * n + j + 1) * n];
                for (o, &s) in out.iter_mut().zip(row) {
                    *o = (*o + ab * s) % p;
                }
            }
        }
        out
    }

    /// Full multiplication table on element indices.
    fn product_table(&self) -> Vec<u32> {
        let n = self.count();
        let elems: Vec<Vec<u64>> = (0..n).map(|i| self.decode(i)).collect();
        let mut t = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                t[a * n + b] = self.encode(&self.mul(&elems[a], &elems[b])) as u32;
            }
        }
        t
    }

    fn to_vector(&self, field: FieldSpec, idx: usize) -> Vector {
        let c: Vec<i64> = self.decode(idx).into_iter().map(|d| d as i64).collect();
        Vector::from_i64(field, &c)
    }
}

fn check_budget(p: u64, dim: usize, arity: u32, budget: u64) -> Result<(), DextralError> {
    let needed = enumeration_size(p, dim, arity);
    if needed > budget as u128 {
        return Err(DextralError::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Literal evaluation of the definition over every triple of elements of an
/// algebra over GF(p). The reported witness is the first triple in
/// lexicographic order of coordinate vectors.
pub fn exhaustive_oracle(alg: &AlgebraTable, budget: u64) -> Result<DextralVerdict, DextralError> {
    let t = DenseTable::new(alg)?;
    check_budget(t.p, t.dim, 3, budget)?;
    let n = t.count();
    let prod = t.product_table();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let abc = prod[a * n + prod[b * n + c] as usize];
                if abc != 0 {
                    continue;
                }
                let bac = prod[b * n + prod[a * n + c] as usize];
                if bac != 0 {
                    let f = alg.field();
                    return Ok(DextralVerdict::ProvedNo(Witness::evaluate(
                        alg,
                        t.to_vector(f, a),
                        t.to_vector(f, b),
                        t.to_vector(f, c),
                    )));
                }
            }
        }
    }
    Ok(DextralVerdict::ProvedYes(YesReason::ExhaustiveEnumeration))
}

/// Literal evaluation of "`a(bc) ∈ I` implies `b(ac) ∈ I`" over every
/// triple of elements of an algebra over GF(p).
pub fn exhaustive_symmetric_ideal(
    alg: &AlgebraTable,
    ideal: &Subspace,
    budget: u64,
) -> Result<DextralVerdict, DextralError> {
    if !alg.is_ideal(ideal)? {
        return Err(AlgebraError::NotIdeal.into());
    }
    let t = DenseTable::new(alg)?;
    check_budget(t.p, t.dim, 3, budget)?;
    let n = t.count();
    let f = alg.field();
    let member: Vec<bool> = (0..n)
        .map(|i| ideal.contains(&t.to_vector(f, i)).expect("same ambient space"))
        .collect();
    let prod = t.product_table();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !member[prod[a * n + prod[b * n + c] as usize] as usize] {
                    continue;
                }
                if !member[prod[b * n + prod[a * n + c] as usize] as usize] {
                    return Ok(DextralVerdict::ProvedNo(Witness::evaluate(
                        alg,
                        t.to_vector(f, a),
                        t.to_vector(f, b),
                        t.to_vector(f, c),
                    )));
                }
            }
        }
    }
    Ok(DextralVerdict::ProvedYes(YesReason::ExhaustiveEnumeration))
}

/// Whether `I` is a symmetric ideal, decided on the quotient `A/I`. A
/// refuting witness is lifted to coset representatives in `A`, so it
/// satisfies `a(bc) ∈ I` and `b(ac) ∉ I` rather than the zero conditions.
pub fn is_symmetric_ideal(alg: &AlgebraTable, ideal: &Subspace) -> Result<DextralVerdict, DextralError> {
    is_symmetric_ideal_with(alg, ideal, &SearchConfig::default())
}

pub fn is_symmetric_ideal_with(
    alg: &AlgebraTable,
    ideal: &Subspace,
    cfg: &SearchConfig,
) -> Result<DextralVerdict, DextralError> {
    let (q, proj) = alg.quotient(ideal)?;
    Ok(match decide_dextral_with(&q, cfg) {
        DextralVerdict::ProvedNo(w) => DextralVerdict::ProvedNo(Witness::evaluate(
            alg,
            proj.lift(&w.a)?,
            proj.lift(&w.b)?,
            proj.lift(&w.c)?,
        )),
        other => other,
    })
}

/// Outcome of the exhaustive CB check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CbReport {
    /// `(x, y, z)` with `xy = 0` and `(xz)y ≠ 0`.
    pub counterexample: Option<(Element, Element, Element)>,
    /// Number of pairs `(x, y)` with `xy = 0` that were examined.
    pub zero_pairs: u64,
}

impl CbReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks "`xy = 0` implies `(xz)y = 0` for all `z`" over GF(p). Every `x`
/// is enumerated, every `y` in the kernel of `y ↦ xy` is enumerated, and `z`
/// runs over the basis since `(xz)y` is linear in `z`.
pub fn cb_condition_exhaustive(alg: &AlgebraTable, budget: u64) -> Result<CbReport, DextralError> {
    let t = DenseTable::new(alg)?;
    check_budget(t.p, t.dim, 2, budget)?;
    let (n, p, dim) = (t.count(), t.p, t.dim);
    let units: Vec<Vec<u64>> = (0..dim)
        .map(|i| (0..dim).map(|k| u64::from(i == k)).collect())
        .collect();
    let mut zero_pairs = 0u64;
    for xi in 0..n {
        let x = t.decode(xi);
        // column j of the left multiplication matrix is x e_j
        let cols: Vec<Vec<u64>> = units.iter().map(|e| t.mul(&x, e)).collect();
        let rows: Vec<Vec<u64>> = (0..dim).map(|k| cols.iter().map(|c| c[k]).collect()).collect();
        let kernel = nullspace_mod_p(rows, dim, p);
        let xz: Vec<Vec<u64>> = units.iter().map(|e| t.mul(&x, e)).collect();
        let kcount = (p as usize).pow(kernel.len() as u32);
        for mut combo in 0..kcount {
            let mut y = vec![0u64; dim];
            for kv in &kernel {
                let c = combo as u64 % p;
                combo /= p as usize;
                for (yi, ki) in y.iter_mut().zip(kv) {
                    *yi = (*yi + c * ki) % p;
                }
            }
            zero_pairs += 1;
            for (zi, xz_z) in xz.iter().enumerate() {
                if t.mul(xz_z, &y).iter().any(|&d| d != 0) {
                    let f = alg.field();
                    let v = |c: &[u64]| Vector::from_i64(f, &c.iter().map(|&d| d as i64).collect::<Vec<_>>());
                    return Ok(CbReport {
                        counterexample: Some((v(&x), v(&y), alg.basis_element(zi))),
                        zero_pairs,
                    });
                }
            }
        }
    }
    Ok(CbReport { counterexample: None, zero_pairs })
}

/// Basis of `{y : M y = 0}` over GF(p).
fn nullspace_mod_p(mut m: Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let inv = |a: u64| {
        let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(k) = (r..m.len()).find(|&k| m[k][col] != 0) else {
            continue;
        };
        m.swap(r, k);
        let s = inv(m[r][col]);
        for v in m[r].iter_mut() {
            *v = *v * s % p;
        }
        let pivot_row = m[r].clone();
        for (k, row) in m.iter_mut().enumerate() {
            if k != r && row[col] != 0 {
                let f = row[col];
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v = (*v + (p - f) * pv) % p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut y = vec![0u64; ncols];
            y[f] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                y[pc] = (p - row[f]) % p;
            }
            y
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(field: FieldSpec, basis: &[&str], prods: &[(&str, &str, &[(i64, &str)])]) -> AlgebraTable {
        let b: Vec<String> = basis.iter().map(|s| s.to_string()).collect();
        let idx = |n: &str| b.iter().position(|x| x == n).unwrap();
        let products: Vec<_> = prods
            .iter()
            .map(|(l, r, terms)| {
                let mut v = Vector::zeros(field, b.len());
                for (c, n) in terms.iter() {
                    v.set(idx(n), field.from_i64(*c));
                }
                ((idx(l), idx(r)), v)
            })
            .collect();
        AlgebraTable::from_products("t", field, b.clone(), products).unwrap()
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn zero_algebra_is_dextral() {
        assert!(decide_dextral(&AlgebraTable::zero_algebra(FieldSpec::Rational)).is_yes());
        let z = AlgebraTable::zero_algebra(gf(5));
        assert_eq!(
            exhaustive_oracle(&z, 10).unwrap(),
            DextralVerdict::ProvedYes(YesReason::ExhaustiveEnumeration)
        );
    }

    #[test]
    fn gamma1_over_gf2_by_enumeration() {
        let g = table(gf(2), &["x", "y"], &[("x", "x", &[(1, "y")])]);
        assert!(exhaustive_oracle(&g, 64).unwrap().is_yes());
        assert!(matches!(exhaustive_oracle(&g, 63), Err(DextralError::BudgetExceeded { needed: 64, .. })));
    }

    #[test]
    fn two_dim_pattern_over_gf3_is_refuted() {
        let a = table(gf(3), &["x", "z"], &[("x", "z", &[(1, "x")]), ("z", "x", &[(-1, "x")])]);
        let v = exhaustive_oracle(&a, 1_000).unwrap();
        let w = v.witness().unwrap();
        assert!(w.validate(&a));
        assert!(decide_dextral(&a).is_no());
    }

    #[test]
    fn oracle_rejects_rational_tables() {
        let g = table(FieldSpec::Rational, &["x"], &[]);
        assert!(matches!(exhaustive_oracle(&g, 10), Err(DextralError::NotFinite(_))));
    }

    #[test]
    fn commutative_associative_is_structural() {
        let e = table(FieldSpec::Rational, &["e"], &[("e", "e", &[(1, "e")])]);
        assert_eq!(
            decide_dextral(&e),
            DextralVerdict::ProvedYes(YesReason::StructuralSufficiency(StructuralCase::CommutativeAssociative))
        );
    }

    #[test]
    fn s2_witness_is_x_z_z() {
        let s2 = table(
            FieldSpec::Rational,
            &["x", "y", "z", "w"],
            &[
                ("x", "z", &[(1, "x")]),
                ("y", "w", &[(1, "y")]),
                ("z", "x", &[(-1, "x")]),
                ("w", "y", &[(-1, "y")]),
            ],
        );
        let v = decide_dextral(&s2);
        let w = v.witness().unwrap();
        assert_eq!(s2.render(&w.a), "x");
        assert_eq!(s2.render(&w.b), "z");
        assert_eq!(s2.render(&w.c), "z");
        assert_eq!(s2.render(&w.bac), "-x");
        assert!(w.validate(&s2));
    }

    #[test]
    fn depth_one_still_refutes_leibniz_tables() {
        let l = table(
            FieldSpec::Rational,
            &["x", "y", "z"],
            &[("x", "z", &[(1, "x")]), ("y", "z", &[(1, "y")]), ("z", "y", &[(-1, "y")])],
        );
        let cfg = SearchConfig { depth: 1, ..SearchConfig::default() };
        assert!(decide_dextral_with(&l, &cfg).is_no());
        assert!(pattern_witness(&l).unwrap().validate(&l));
    }

    #[test]
    fn non_leibniz_rational_can_stay_unknown() {
        // any verdict is fine here, but a witness must be genuine
        let a = table(FieldSpec::Rational, &["x", "y"], &[("x", "y", &[(1, "x"), (1, "y")])]);
        let cfg = SearchConfig { depth: 1, ..SearchConfig::default() };
        let v = decide_dextral_with(&a, &cfg);
        if let Some(w) = v.witness() {
            assert!(w.validate(&a));
        }
    }

    #[test]
    fn symmetric_ideal_of_full_space() {
        let s2 = table(FieldSpec::Rational, &["x", "z"], &[("x", "z", &[(1, "x")]), ("z", "x", &[(-1, "x")])]);
        assert!(is_symmetric_ideal(&s2, &s2.full_space()).unwrap().is_yes());
        assert!(is_symmetric_ideal(&s2, &s2.zero_space()).unwrap().is_no());
        let not_ideal = s2.coordinate_span(&["z"]).unwrap();
        assert!(is_symmetric_ideal(&s2, &not_ideal).is_err());
    }

    #[test]
    fn cb_on_anticommutative_examples() {
        let heis = table(gf(3), &["x", "y", "z"], &[("x", "y", &[(1, "z")]), ("y", "x", &[(-1, "z")])]);
        assert!(cb_condition_exhaustive(&heis, 1_000).unwrap().holds());
        // x·x = 0 but (x·y)·x = -y
        let aff = table(gf(3), &["x", "y"], &[("x", "y", &[(1, "y")]), ("y", "x", &[(-1, "y")])]);
        let r = cb_condition_exhaustive(&aff, 1_000).unwrap();
        let (x, y, z) = r.counterexample.clone().unwrap();
        assert!(aff.multiply(&x, &y).unwrap().is_zero());
        assert!(!aff.multiply(&aff.multiply(&x, &z).unwrap(), &y).unwrap().is_zero());
    }

    #[test]
    fn nullspace_small() {
        let k = nullspace_mod_p(vec![vec![1, 1, 0]], 3, 3);
        assert_eq!(k, vec![vec![2, 1, 0], vec![0, 0, 1]]);
    }
}
