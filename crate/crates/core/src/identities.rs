//! Multilinear identities decided on basis tuples.
//!
//! Every identity here is multilinear, so checking it on all tuples of
//! basis vectors decides it for all elements. Tuples are scanned in
//! lexicographic order and the first failure is reported.

use std::fmt;

use serde::Serialize;

use crate::algebra::{AlgebraTable, Element};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    Commutative,
    Anticommutative,
    Associative,
    Antiassociative,
    RightLeibniz,
    LeftLeibniz,
    Jacobi,
    Lie,
    /// `x(yz) + y(xz) = 0`.
    Dextral,
    /// `[x,[y,z]] = [y,[z,x]] = [z,[x,y]] = -[x,[z,y]] = -[y,[x,z]] = -[z,[y,x]]`.
    CyclicRelations,
    /// `[[x,y],[z,w]] = [x,[y,[z,w]]]`.
    NestedBracket,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        write!(f, "{}", s.as_str().unwrap_or("?"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub indices: Vec<usize>,
    pub lhs: Element,
    pub rhs: Element,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: Identity,
    pub first_violation: Option<Violation>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Index tuples of length `arity` over `0..dim`, lexicographic.
fn tuples(dim: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if dim == 0 { 0 } else { dim.pow(arity as u32) };
    (0..total).map(move |mut k| {
        let mut t = vec![0; arity];
        for slot in t.iter_mut().rev() {
            *slot = k % dim;
            k /= dim;
        }
        t
    })
}

fn scan<F>(identity: Identity, dim: usize, arity: usize, mut sides: F) -> IdentityReport
where
    F: FnMut(&[usize]) -> (Element, Element),
{
    let first_violation = tuples(dim, arity).find_map(|t| {
        let (lhs, rhs) = sides(&t);
        (lhs != rhs).then_some(Violation { indices: t, lhs, rhs })
    });
    IdentityReport { identity, first_violation }
}

fn neg(v: &Element) -> Element {
    -v
}

/// Basis-level product helpers.
struct Products<'a> {
    alg: &'a AlgebraTable,
}

impl<'a> Products<'a> {
    fn e(&self, i: usize, j: usize) -> Element {
        self.alg.structure_constant(i, j).clone()
    }

    /// `e_i (e_j e_k)`.
    fn right(&self, i: usize, j: usize, k: usize) -> Element {
        self.alg.basis_left_mul(i, self.alg.structure_constant(j, k))
    }

    /// `(e_i e_j) e_k`.
    fn left(&self, i: usize, j: usize, k: usize) -> Element {
        self.alg.basis_right_mul(self.alg.structure_constant(i, j), k)
    }
}

pub fn is_commutative(alg: &AlgebraTable) -> IdentityReport {
    let p = Products { alg };
    let first_violation = tuples(alg.dim(), 2)
        .filter(|t| t[0] <= t[1])
        .find_map(|t| {
            let (lhs, rhs) = (p.e(t[0], t[1]), p.e(t[1], t[0]));
            (lhs != rhs).then_some(Violation { indices: t, lhs, rhs })
        });
    IdentityReport { identity: Identity::Commutative, first_violation }
}

/// `x² = 0` for all `x`: squares of basis vectors vanish and
/// `e_i e_j + e_j e_i = 0` for `i < j`. Valid in characteristic 2.
pub fn is_anticommutative(alg: &AlgebraTable) -> IdentityReport {
    let p = Products { alg };
    let first_violation = tuples(alg.dim(), 2)
        .filter(|t| t[0] <= t[1])
        .find_map(|t| {
            let (lhs, rhs) = if t[0] == t[1] {
                (p.e(t[0], t[0]), alg.zero_element())
            } else {
                (p.e(t[0], t[1]), neg(&p.e(t[1], t[0])))
            };
            (lhs != rhs).then_some(Violation { indices: t, lhs, rhs })
        });
    IdentityReport { identity: Identity::Anticommutative, first_violation }
}

pub fn is_associative(alg: &AlgebraTable) -> IdentityReport {
    let p = Products { alg };
    scan(Identity::Associative, alg.dim(), 3, |t| (p.left(t[0], t[1], t[2]), p.right(t[0], t[1], t[2])))
}

pub fn is_antiassociative(alg: &AlgebraTable) -> IdentityReport {
    let p = Products { alg };
    scan(Identity::Antiassociative, alg.dim(), 3, |t| {
        (p.left(t[0], t[1], t[2]), neg(&p.right(t[0], t[1], t[2])))
    })
}

/// `[a,[b,c]] = [[a,b],c] - [[a,c],b]`.
pub fn is_right_leibniz(alg: &AlgebraTable) -> IdentityReport {
    let p = Products { alg };
    scan(Identity::RightLeibniz, alg.dim(), 3, |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        (p.right(a, b, c), &p.left(a, b, c) - &p.left(a, c, b))
    })
}

/// `[a,[b,c]] = [[a,b],c] + [b,[a,c]]`.
pub fn is_left_leibniz(alg: &AlgebraTable) -> IdentityReport {
    let p = Products { alg };
    scan(Identity::LeftLeibniz, alg.dim(), 3, |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        (p.right(a, b, c), &p.left(a, b, c) + &p.right(b, a, c))
    })
}

pub fn jacobi(alg: &AlgebraTable) -> IdentityReport {
    let p = Products { alg };
    scan(Identity::Jacobi, alg.dim(), 3, |t| {
        let (a, b, c) = (t[0], t[1], t[2]);
        let sum = &(&p.right(a, b, c) + &p.right(b, c, a)) + &p.right(c, a, b);
        (sum, alg.zero_element())
    })
}

/// Anti-commutative and Jacobi.
pub fn is_lie(alg: &AlgebraTable) -> IdentityReport {
    let anti = is_anticommutative(alg);
    let first_violation = match anti.first_violation {
        Some(v) => Some(v),
        None => jacobi(alg).first_violation,
    };
    IdentityReport { identity: Identity::Lie, first_violation }
}

/// `x(yz) = -y(xz)` on basis triples.
pub fn dextral_identity(alg: &AlgebraTable) -> IdentityReport {
    let p = Products { alg };
    scan(Identity::Dextral, alg.dim(), 3, |t| {
        (p.right(t[0], t[1], t[2]), neg(&p.right(t[1], t[0], t[2])))
    })
}

/// The six-term chain of signed cyclic relations among `[x,[y,z]]`.
/// The reported `rhs` is the first term of the chain that disagrees.
pub fn cyclic_relations(alg: &AlgebraTable) -> IdentityReport {
    let p = Products { alg };
    scan(Identity::CyclicRelations, alg.dim(), 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let lhs = p.right(x, y, z);
        let chain = [
            p.right(y, z, x),
            p.right(z, x, y),
            neg(&p.right(x, z, y)),
            neg(&p.right(y, x, z)),
            neg(&p.right(z, y, x)),
        ];
        let rhs = chain.into_iter().find(|v| *v != lhs).unwrap_or_else(|| lhs.clone());
        (lhs, rhs)
    })
}

/// `[[x,y],[z,w]] = [x,[y,[z,w]]]` on basis quadruples.
pub fn nested_bracket_identity(alg: &AlgebraTable) -> IdentityReport {
    scan(Identity::NestedBracket, alg.dim(), 4, |t| {
        let xy = alg.structure_constant(t[0], t[1]);
        let zw = alg.structure_constant(t[2], t[3]);
        let lhs = alg.mul(xy, zw);
        let rhs = alg.basis_left_mul(t[0], &alg.basis_left_mul(t[1], zw));
        (lhs, rhs)
    })
}

/// Every identity in a fixed order, for reports.
pub fn all_reports(alg: &AlgebraTable) -> Vec<IdentityReport> {
    vec![
        is_commutative(alg),
        is_anticommutative(alg),
        is_associative(alg),
        is_antiassociative(alg),
        is_right_leibniz(alg),
        is_left_leibniz(alg),
        is_lie(alg),
        dextral_identity(alg),
        cyclic_relations(alg),
        nested_bracket_identity(alg),
    ]
}
