//! Exact scalars over ℚ and GF(p), coordinate vectors, and canonical
//! subspaces kept in reduced row echelon form.
//!
//! Nothing in here rounds. Two subspaces are equal exactly when their
//! RREF bases are identical, so `==` on [`Subspace`] is subspace equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },
    #[error("cannot parse scalar {0:?}")]
    Parse(String),
    #[error("{value} has no image in GF({p})")]
    NotEmbeddable { value: String, p: u64 },
}

/// A prime modulus, checked at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self, LinalgError> {
        if p < (1 << 32) && is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(LinalgError::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The ground field of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(Prime),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, LinalgError> {
        Prime::new(p).map(FieldSpec::Prime)
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p.get(),
        }
    }

    /// Number of elements, `None` for ℚ.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(p.get()),
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rational => Scalar(Repr::Rat(BigRational::from_integer(BigInt::from(n)))),
            FieldSpec::Prime(p) => {
                let m = p.get() as i128;
                let v = (n as i128).rem_euclid(m) as u64;
                Scalar(Repr::Mod { value: v, modulus: p.get() })
            }
        }
    }

    /// Maps a rational number into this field. Fails over GF(p) when the
    /// denominator is divisible by p.
    pub fn from_rational(&self, q: &BigRational) -> Result<Scalar, LinalgError> {
        match self {
            FieldSpec::Rational => Ok(Scalar(Repr::Rat(q.clone()))),
            FieldSpec::Prime(p) => {
                let m = BigInt::from(p.get());
                let num = q.numer().mod_floor(&m).to_u64().unwrap_or(0);
                let den = q.denom().mod_floor(&m).to_u64().unwrap_or(0);
                if den == 0 {
                    return Err(LinalgError::NotEmbeddable {
                        value: q.to_string(),
                        p: p.get(),
                    });
                }
                let num = Scalar(Repr::Mod { value: num, modulus: p.get() });
                let den = Scalar(Repr::Mod { value: den, modulus: p.get() });
                Ok(&num * &den.inv().expect("nonzero residue"))
            }
        }
    }

    /// Parses `"a"` or `"a/b"` and maps the value into this field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar, LinalgError> {
        self.from_rational(&parse_rational(s)?)
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        s.field() == *self
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({})", p.get()),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = LinalgError;

    /// Accepts `rational`, `Q`, `gf:p` and `GF(p)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("rational") || t == "Q" {
            return Ok(FieldSpec::Rational);
        }
        let digits = t
            .strip_prefix("gf:")
            .or_else(|| t.strip_prefix("GF:"))
            .or_else(|| t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')));
        match digits.and_then(|d| d.parse::<u64>().ok()) {
            Some(p) => FieldSpec::prime(p),
            None => Err(LinalgError::Parse(s.to_string())),
        }
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational, LinalgError> {
    let err = || LinalgError::Parse(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if !den.is_positive() {
        return Err(err());
    }
    Ok(BigRational::new(num, den))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

/// An exact field element in canonical form: a reduced fraction with
/// positive denominator, or a residue in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Rat(_) => FieldSpec::Rational,
            Repr::Mod { modulus, .. } => FieldSpec::Prime(Prime(*modulus)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rat(q) => q.is_zero(),
            Repr::Mod { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rat(q) => q.is_one(),
            Repr::Mod { value, .. } => *value == 1,
        }
    }

    /// The rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(q) => Some(q),
            Repr::Mod { .. } => None,
        }
    }

    /// The residue, if this is a GF(p) scalar.
    pub fn residue(&self) -> Option<u64> {
        match &self.0 {
            Repr::Rat(_) => None,
            Repr::Mod { value, .. } => Some(*value),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Rat(q) => Scalar(Repr::Rat(q.recip())),
            Repr::Mod { value, modulus } => Scalar(Repr::Mod {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
        })
    }

    pub fn pow(&self, mut e: u64) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// True when the value is negative when written as a fraction. Residues
    /// are never negative.
    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Rat(q) => q.is_negative(),
            Repr::Mod { .. } => false,
        }
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a + b)),
            (Repr::Mod { value: a, modulus: m }, Repr::Mod { value: b, modulus: n }) if m == n => {
                Scalar(Repr::Mod { value: ((*a as u128 + *b as u128) % *m as u128) as u64, modulus: *m })
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a * b)),
            (Repr::Mod { value: a, modulus: m }, Repr::Mod { value: b, modulus: n }) if m == n => {
                Scalar(Repr::Mod { value: ((*a as u128 * *b as u128) % *m as u128) as u64, modulus: *m })
            }
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rat(a) => Scalar(Repr::Rat(-a)),
            Repr::Mod { value, modulus } => Scalar(Repr::Mod {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            }),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -(&self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(q) if q.denom().is_one() => write!(f, "{}", q.numer()),
            Repr::Rat(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Repr::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

/// A coordinate vector over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(field: FieldSpec, len: usize) -> Self {
        Vector { field, entries: vec![field.zero(); len] }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(field: FieldSpec, len: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, len);
        v.entries[i] = field.one();
        v
    }

    pub fn new(field: FieldSpec, entries: Vec<Scalar>) -> Result<Self, LinalgError> {
        if let Some(bad) = entries.iter().find(|s| !field.contains(s)) {
            return Err(LinalgError::FieldMismatch { left: field, right: bad.field() });
        }
        Ok(Vector { field, entries })
    }

    pub fn from_i64(field: FieldSpec, coords: &[i64]) -> Self {
        Vector { field, entries: coords.iter().map(|&c| field.from_i64(c)).collect() }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, s: Scalar) {
        assert_eq!(s.field(), self.field, "scalar field mismatch");
        self.entries[i] = s;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Index of the first nonzero coordinate.
    pub fn leading_index(&self) -> Option<usize> {
        self.entries.iter().position(|s| !s.is_zero())
    }

    pub fn scale(&self, alpha: &Scalar) -> Vector {
        Vector { field: self.field, entries: self.entries.iter().map(|s| s * alpha).collect() }
    }

    /// `self += alpha * other`.
    pub fn axpy(&mut self, alpha: &Scalar, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        if alpha.is_zero() {
            return;
        }
        for (s, o) in self.entries.iter_mut().zip(&other.entries) {
            if !o.is_zero() {
                *s = &*s + &(alpha * o);
            }
        }
    }

    pub fn check_compatible(&self, other: &Vector) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch { left: self.field, right: other.field });
        }
        if self.len() != other.len() {
            return Err(LinalgError::DimensionMismatch { expected: self.len(), found: other.len() });
        }
        Ok(())
    }
}

impl<'a> Add<&'a Vector> for &'a Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector {
            field: self.field,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a> Sub<&'a Vector> for &'a Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        assert_eq!(self.len(), rhs.len(), "vector length mismatch");
        Vector {
            field: self.field,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector { field: self.field, entries: self.entries.iter().map(|s| -s).collect() }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// A subspace of `F^n` stored as its reduced row echelon basis.
///
/// Rows have leading ones, every pivot column is zero outside its own row,
/// and pivots strictly increase. This basis is unique for the subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient_dim: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace { field, ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Self {
        Subspace {
            field,
            ambient_dim,
            rows: (0..ambient_dim).map(|i| Vector::unit(field, ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Canonical span of `rows`.
    pub fn span<I>(field: FieldSpec, ambient_dim: usize, rows: I) -> Result<Self, LinalgError>
    where
        I: IntoIterator<Item = Vector>,
    {
        let mut m: Vec<Vector> = Vec::new();
        for r in rows {
            if r.field() != field {
                return Err(LinalgError::FieldMismatch { left: field, right: r.field() });
            }
            if r.len() != ambient_dim {
                return Err(LinalgError::DimensionMismatch { expected: ambient_dim, found: r.len() });
            }
            if !r.is_zero() {
                m.push(r);
            }
        }
        let pivots = rref_in_place(&mut m, ambient_dim);
        m.truncate(pivots.len());
        Ok(Subspace { field, ambient_dim, rows: m, pivots })
    }

    /// Span of a list of rows whose common length fixes the ambient dimension.
    /// The list must be nonempty so the ambient dimension is known.
    pub fn span_of(rows: &[Vector]) -> Result<Self, LinalgError> {
        let first = rows.first().ok_or(LinalgError::DimensionMismatch { expected: 1, found: 0 })?;
        Self::span(first.field(), first.len(), rows.iter().cloned())
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut p = self.pivots.iter().peekable();
        (0..self.ambient_dim)
            .filter(|c| {
                if p.peek() == Some(&c) {
                    p.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    fn check_vector(&self, v: &Vector) -> Result<(), LinalgError> {
        if v.field() != self.field {
            return Err(LinalgError::FieldMismatch { left: self.field, right: v.field() });
        }
        if v.len() != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch { expected: self.ambient_dim, found: v.len() });
        }
        Ok(())
    }

    fn check_subspace(&self, other: &Subspace) -> Result<(), LinalgError> {
        if other.field != self.field {
            return Err(LinalgError::FieldMismatch { left: self.field, right: other.field });
        }
        if other.ambient_dim != self.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Residual of `v` after clearing every pivot column. Zero iff `v` lies
    /// in the subspace; otherwise a canonical coset representative.
    pub fn reduce(&self, v: &Vector) -> Result<Vector, LinalgError> {
        self.check_vector(v)?;
        Ok(self.reduce_unchecked(v))
    }

    pub(crate) fn reduce_unchecked(&self, v: &Vector) -> Vector {
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r.get(p).clone();
            if !c.is_zero() {
                r.axpy(&-&c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &Vector) -> Result<bool, LinalgError> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &Vector) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v.get(p).clone()).collect()))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_subspace(other)?;
        if other.is_zero() || self.is_full() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        Subspace::span(self.field, self.ambient_dim, self.rows.iter().chain(&other.rows).cloned())
    }

    /// `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_subspace(other)?;
        Ok(self.rows.iter().all(|r| other.reduce_unchecked(r).is_zero()))
    }

    /// Equality as subspaces; same as `==` but with ambient checks.
    pub fn same_as(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_subspace(other)?;
        Ok(self == other)
    }

    /// Solutions `x` of `row · x = 0` for every row.
    pub fn solutions(field: FieldSpec, ncols: usize, equations: &[Vector]) -> Result<Subspace, LinalgError> {
        let eq = Subspace::span(field, ncols, equations.iter().cloned())?;
        let free = eq.free_columns();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = Vector::unit(field, ncols, f);
            for (row, &p) in eq.rows.iter().zip(&eq.pivots) {
                x.set(p, -row.get(f));
            }
            basis.push(x);
        }
        Subspace::span(field, ncols, basis)
    }
}

/// Gauss–Jordan elimination. Pivot = first nonzero entry of the column at or
/// below the current row. Returns the pivot columns; nonzero rows come first.
fn rref_in_place(m: &mut [Vector], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(k) = (r..m.len()).find(|&k| !m[k].get(col).is_zero()) else {
            continue;
        };
        m.swap(r, k);
        let inv = m[r].get(col).inv().expect("pivot is nonzero");
        m[r] = m[r].scale(&inv);
        let pivot_row = m[r].clone();
        for (k, row) in m.iter_mut().enumerate() {
            if k != r {
                let c = row.get(col).clone();
                if !c.is_zero() {
                    row.axpy(&-&c, &pivot_row);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}
