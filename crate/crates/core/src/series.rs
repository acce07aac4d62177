//! The right, left, derived and full ideal series, with nilpotency and
//! solvability predicates.
//!
//! All four use the algebra product as the bracket: `[a, b] = a·b`.

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraTable};
use crate::dextral::decide_dextral;
use crate::exactlin::Subspace;
use crate::identities;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    /// `L<1> = L`, `L<n+1> = [L<n>, L]`.
    RightLower,
    /// `L(1) = L`, `L(n+1) = [L, L(n)]`.
    LeftLower,
    /// `L[1] = L`, `L[n+1] = [L[n], L[n]]`.
    Derived,
    /// `L^1 = L`, `L^(n+1) = sum of [L^i, L^(n+1-i)]` over `1 ≤ i ≤ n`.
    Full,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 4] =
        [SeriesKind::RightLower, SeriesKind::LeftLower, SeriesKind::Derived, SeriesKind::Full];

    pub fn as_str(&self) -> &'static str {
        match self {
            SeriesKind::RightLower => "right",
            SeriesKind::LeftLower => "left",
            SeriesKind::Derived => "derived",
            SeriesKind::Full => "full",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// Terms `1..=stabilized_at` of a series; every later term equals the last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTrace {
    pub kind: SeriesKind,
    pub terms: Vec<Subspace>,
    pub stabilized_at: usize,
}

impl SeriesTrace {
    /// Term `n ≥ 1`.
    pub fn term(&self, n: usize) -> &Subspace {
        assert!(n >= 1, "series are indexed from 1");
        &self.terms[n.min(self.stabilized_at) - 1]
    }

    pub fn terminal(&self) -> &Subspace {
        self.terms.last().expect("a series has at least one term")
    }

    pub fn terminal_is_zero(&self) -> bool {
        self.terminal().is_zero()
    }

    /// Smallest `n` with term `n` equal to zero.
    pub fn zero_index(&self) -> Option<usize> {
        self.terms.iter().position(Subspace::is_zero).map(|i| i + 1)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let basis: Vec<Vec<String>> =
                    t.basis().iter().map(|v| v.entries().iter().map(|s| s.to_string()).collect()).collect();
                json!({"index": i + 1, "dim": t.dim(), "basis": basis})
            })
            .collect();
        json!({
            "kind": self.kind.as_str(),
            "stabilized_at": self.stabilized_at,
            "terminal_is_zero": self.terminal_is_zero(),
            "terms": terms,
        })
    }
}

fn next_term(alg: &AlgebraTable, kind: SeriesKind, terms: &[Subspace]) -> Subspace {
    let full = alg.full_space();
    let last = terms.last().expect("nonempty");
    let product = |a: &Subspace, b: &Subspace| alg.subspace_product(a, b).expect("same algebra");
    match kind {
        SeriesKind::RightLower => product(last, &full),
        SeriesKind::LeftLower => product(&full, last),
        SeriesKind::Derived => product(last, last),
        SeriesKind::Full => {
            let n = terms.len();
            (1..=n).fold(alg.zero_space(), |acc, i| {
                acc.sum(&product(&terms[i - 1], &terms[n - i])).expect("same ambient space")
            })
        }
    }
}

/// Exactly `count` terms, without stopping at stabilization.
pub fn series_terms(alg: &AlgebraTable, kind: SeriesKind, count: usize) -> Vec<Subspace> {
    let mut terms = vec![alg.full_space()];
    while terms.len() < count {
        let t = next_term(alg, kind, &terms);
        terms.push(t);
    }
    terms.truncate(count);
    terms
}

/// Iterates until two consecutive terms coincide.
pub fn series(alg: &AlgebraTable, kind: SeriesKind) -> SeriesTrace {
    let mut terms = vec![alg.full_space()];
    loop {
        let t = next_term(alg, kind, &terms);
        if &t == terms.last().unwrap() {
            let stabilized_at = terms.len();
            return SeriesTrace { kind, terms, stabilized_at };
        }
        terms.push(t);
    }
}

/// A predicate together with the first index at which the series vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesVerdict {
    pub holds: bool,
    pub index: Option<usize>,
}

fn verdict(alg: &AlgebraTable, kind: SeriesKind) -> SeriesVerdict {
    let t = series(alg, kind);
    SeriesVerdict { holds: t.terminal_is_zero(), index: t.zero_index() }
}

pub fn is_solvable(alg: &AlgebraTable) -> SeriesVerdict {
    verdict(alg, SeriesKind::Derived)
}

pub fn is_left_nilpotent(alg: &AlgebraTable) -> SeriesVerdict {
    verdict(alg, SeriesKind::LeftLower)
}

pub fn is_right_nilpotent(alg: &AlgebraTable) -> SeriesVerdict {
    verdict(alg, SeriesKind::RightLower)
}

pub fn is_nilpotent(alg: &AlgebraTable) -> SeriesVerdict {
    verdict(alg, SeriesKind::Full)
}

fn require_dextral_leibniz(alg: &AlgebraTable) -> Result<(), SeriesError> {
    if !identities::is_right_leibniz(alg).holds() {
        return Err(SeriesError::Precondition(format!("{} is not right Leibniz", alg.name())));
    }
    if !decide_dextral(alg).is_yes() {
        return Err(SeriesError::Precondition(format!("{} is not proved dextral symmetric", alg.name())));
    }
    Ok(())
}

/// One index pair at which a subspace identity failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawFailure {
    pub m: usize,
    pub n: usize,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
}

/// Pairs `(m, n)` in the given ranges where `[L[m], L(n)] ≠ L(2^(m-1) + n)`.
pub fn mixed_bracket_failures(
    alg: &AlgebraTable,
    ms: std::ops::RangeInclusive<usize>,
    ns: std::ops::RangeInclusive<usize>,
) -> Vec<LawFailure> {
    let derived = series(alg, SeriesKind::Derived);
    let left = series(alg, SeriesKind::LeftLower);
    let mut failures = Vec::new();
    for m in ms {
        for n in ns.clone() {
            let lhs = alg.subspace_product(derived.term(m), left.term(n)).expect("same algebra");
            let rhs = left.term((1 << (m - 1)) + n);
            if &lhs != rhs {
                failures.push(LawFailure { m, n, lhs_dim: lhs.dim(), rhs_dim: rhs.dim() });
            }
        }
    }
    failures
}

/// Checks `[L[m], L(n)] = L(2^(m-1) + n)` for `1 ≤ m ≤ m_max`, `1 ≤ n ≤ n_max`
/// on a dextral symmetric right Leibniz algebra; returns the failing pairs.
pub fn verify_mixed_bracket_law(
    alg: &AlgebraTable,
    m_max: usize,
    n_max: usize,
) -> Result<Vec<LawFailure>, SeriesError> {
    require_dextral_leibniz(alg)?;
    Ok(mixed_bracket_failures(alg, 1..=m_max, 1..=n_max))
}

/// Checks `L[m] = L(2^(m-1))` for `1 ≤ m ≤ m_max`; returns the failing `m`.
pub fn verify_derived_left_correspondence(alg: &AlgebraTable, m_max: usize) -> Result<Vec<usize>, SeriesError> {
    require_dextral_leibniz(alg)?;
    let derived = series(alg, SeriesKind::Derived);
    let left = series(alg, SeriesKind::LeftLower);
    Ok((1..=m_max).filter(|&m| derived.term(m) != left.term(1 << (m - 1))).collect())
}

/// Checks `L(dim + 1) = 0`.
pub fn verify_left_nilpotency_bound(alg: &AlgebraTable) -> Result<bool, SeriesError> {
    require_dextral_leibniz(alg)?;
    Ok(series(alg, SeriesKind::LeftLower).term(alg.dim() + 1).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::{FieldSpec, Vector};

    fn rat(basis: &[&str], prods: &[(&str, &str, &[(i64, &str)])]) -> AlgebraTable {
        let f = FieldSpec::Rational;
        let b: Vec<String> = basis.iter().map(|s| s.to_string()).collect();
        let idx = |n: &str| b.iter().position(|x| x == n).unwrap();
        let products: Vec<_> = prods
            .iter()
            .map(|(l, r, terms)| {
                let mut v = Vector::zeros(f, b.len());
                for (c, n) in terms.iter() {
                    v.set(idx(n), f.from_i64(*c));
                }
                ((idx(l), idx(r)), v)
            })
            .collect();
        AlgebraTable::from_products("t", f, b.clone(), products).unwrap()
    }

    fn lnotr() -> AlgebraTable {
        rat(&["x", "y", "z"], &[("z", "x", &[(1, "z")])])
    }

    fn lprime() -> AlgebraTable {
        rat(&["x", "y", "z"], &[("x", "z", &[(1, "x")]), ("y", "z", &[(1, "y")]), ("z", "y", &[(-1, "y")])])
    }

    #[test]
    fn lnotr_left_and_right() {
        let a = lnotr();
        let z = a.coordinate_span(&["z"]).unwrap();
        let left = series(&a, SeriesKind::LeftLower);
        assert_eq!(left.term(2), &z);
        assert!(left.term(3).is_zero());
        let right = series(&a, SeriesKind::RightLower);
        assert_eq!(right.term(2), &z);
        assert_eq!(right.term(3), &z);
        assert!(!right.terminal_is_zero());
        assert_eq!(is_left_nilpotent(&a), SeriesVerdict { holds: true, index: Some(3) });
        assert!(!is_right_nilpotent(&a).holds);
        assert!(is_solvable(&a).holds);
    }

    #[test]
    fn lprime_derived_and_left() {
        let a = lprime();
        let d = series(&a, SeriesKind::Derived);
        assert_eq!(d.term(2), &a.coordinate_span(&["x", "y"]).unwrap());
        assert!(d.term(3).is_zero());
        let l = series(&a, SeriesKind::LeftLower);
        assert_eq!(l.dims(), vec![3, 2, 1]);
        assert_eq!(l.term(4), &a.coordinate_span(&["y"]).unwrap());
        assert!(!is_left_nilpotent(&a).holds);
    }

    #[test]
    fn abelian_series_vanish_at_two() {
        let a = rat(&["x", "y"], &[]);
        for kind in SeriesKind::ALL {
            let t = series(&a, kind);
            assert!(t.term(2).is_zero());
            assert_eq!(t.zero_index(), Some(2));
        }
        let z = AlgebraTable::zero_algebra(FieldSpec::Rational);
        assert_eq!(is_nilpotent(&z).index, Some(1));
    }

    #[test]
    fn stopping_agrees_with_explicit_iteration() {
        for a in [lnotr(), lprime()] {
            for kind in SeriesKind::ALL {
                let t = series(&a, kind);
                let explicit = series_terms(&a, kind, 8);
                for (n, s) in explicit.iter().enumerate() {
                    assert_eq!(t.term(n + 1), s);
                }
            }
        }
    }

    #[test]
    fn lnotr_laws() {
        let a = lnotr();
        assert_eq!(verify_derived_left_correspondence(&a, 4).unwrap(), Vec::<usize>::new());
        assert!(verify_left_nilpotency_bound(&a).unwrap());
        let failures = verify_mixed_bracket_law(&a, 3, 4).unwrap();
        // [L[2], L(1)] = z·x = span{z} while L(3) = 0
        assert_eq!(failures[0], LawFailure { m: 2, n: 1, lhs_dim: 1, rhs_dim: 0 });
        assert!(mixed_bracket_failures(&a, 1..=3, 2..=4).is_empty());
    }

    #[test]
    fn laws_need_dextral_symmetry() {
        assert!(matches!(verify_left_nilpotency_bound(&lprime()), Err(SeriesError::Precondition(_))));
        let not_leibniz = rat(&["e"], &[("e", "e", &[(1, "e")])]);
        assert!(verify_derived_left_correspondence(&not_leibniz, 2).is_err());
    }

    #[test]
    fn json_shape() {
        let v = series(&lnotr(), SeriesKind::LeftLower).to_json();
        assert_eq!(v["kind"], "left");
        assert_eq!(v["stabilized_at"], 3);
        assert_eq!(v["terms"][1]["basis"], json!([["0", "0", "1"]]));
    }
}
