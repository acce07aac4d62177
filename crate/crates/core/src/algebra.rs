//! Finite-dimensional algebras given by structure constants.
//!
//! `sc[i][j]` is the coordinate vector of `e_i · e_j`. Products not listed
//! in an input are zero.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactlin::{FieldSpec, LinalgError, Scalar, Subspace, Vector};

/// Elements are coordinate vectors in the algebra's basis.
pub type Element = Vector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("duplicate basis name {0:?}")]
    DuplicateBasis(String),
    #[error("unknown basis name {0:?}")]
    UnknownBasis(String),
    #[error("product {left}·{right} is listed twice")]
    DuplicateProduct { left: String, right: String },
    #[error("subspace is not a two-sided ideal")]
    NotIdeal,
    #[error("subspace is not closed under the product")]
    NotSubalgebra,
    #[error("invalid algebra file: {0}")]
    Format(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraTable {
    name: String,
    field: FieldSpec,
    basis: Vec<String>,
    sc: Vec<Vec<Vector>>,
}

impl AlgebraTable {
    /// Builds a table from a full `dim × dim` grid of product vectors.
    pub fn new(
        name: impl Into<String>,
        field: FieldSpec,
        basis: Vec<String>,
        sc: Vec<Vec<Vector>>,
    ) -> Result<Self, AlgebraError> {
        let dim = basis.len();
        check_names(&basis)?;
        if sc.len() != dim {
            return Err(LinalgError::DimensionMismatch { expected: dim, found: sc.len() }.into());
        }
        for row in &sc {
            if row.len() != dim {
                return Err(LinalgError::DimensionMismatch { expected: dim, found: row.len() }.into());
            }
            for v in row {
                if v.field() != field {
                    return Err(LinalgError::FieldMismatch { left: field, right: v.field() }.into());
                }
                if v.len() != dim {
                    return Err(LinalgError::DimensionMismatch { expected: dim, found: v.len() }.into());
                }
            }
        }
        Ok(AlgebraTable { name: name.into(), field, basis, sc })
    }

    /// Builds a table from the nonzero products only.
    pub fn from_products<I>(
        name: impl Into<String>,
        field: FieldSpec,
        basis: Vec<String>,
        products: I,
    ) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = ((usize, usize), Vector)>,
    {
        let dim = basis.len();
        check_names(&basis)?;
        let mut sc = vec![vec![Vector::zeros(field, dim); dim]; dim];
        let mut seen = HashSet::new();
        for ((i, j), v) in products {
            if i >= dim || j >= dim {
                return Err(LinalgError::DimensionMismatch { expected: dim, found: i.max(j) + 1 }.into());
            }
            if !seen.insert((i, j)) {
                return Err(AlgebraError::DuplicateProduct {
                    left: basis[i].clone(),
                    right: basis[j].clone(),
                });
            }
            sc[i][j] = v;
        }
        AlgebraTable::new(name, field, basis, sc)
    }

    /// The algebra of dimension 0.
    pub fn zero_algebra(field: FieldSpec) -> Self {
        AlgebraTable { name: "0".into(), field, basis: Vec::new(), sc: Vec::new() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, name: &str) -> Result<usize, AlgebraError> {
        self.basis
            .iter()
            .position(|b| b == name)
            .ok_or_else(|| AlgebraError::UnknownBasis(name.to_string()))
    }

    /// `e_i · e_j`.
    pub fn structure_constant(&self, i: usize, j: usize) -> &Vector {
        &self.sc[i][j]
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Vector::unit(self.field, self.dim(), i)
    }

    /// Basis element by name.
    pub fn element(&self, name: &str) -> Result<Element, AlgebraError> {
        Ok(self.basis_element(self.index_of(name)?))
    }

    /// Linear combination of named basis elements.
    pub fn combination(&self, terms: &[(i64, &str)]) -> Result<Element, AlgebraError> {
        let mut v = self.zero_element();
        for &(c, n) in terms {
            let i = self.index_of(n)?;
            let cur = v.get(i) + &self.field.from_i64(c);
            v.set(i, cur);
        }
        Ok(v)
    }

    pub fn zero_element(&self) -> Element {
        Vector::zeros(self.field, self.dim())
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.field, self.dim())
    }

    pub fn zero_space(&self) -> Subspace {
        Subspace::zero(self.field, self.dim())
    }

    pub fn span(&self, rows: impl IntoIterator<Item = Element>) -> Result<Subspace, AlgebraError> {
        Ok(Subspace::span(self.field, self.dim(), rows)?)
    }

    /// Span of named basis elements.
    pub fn coordinate_span(&self, names: &[&str]) -> Result<Subspace, AlgebraError> {
        let rows = names.iter().map(|n| self.element(n)).collect::<Result<Vec<_>, _>>()?;
        self.span(rows)
    }

    fn check_element(&self, a: &Element) -> Result<(), AlgebraError> {
        if a.field() != self.field {
            return Err(LinalgError::FieldMismatch { left: self.field, right: a.field() }.into());
        }
        if a.len() != self.dim() {
            return Err(LinalgError::DimensionMismatch { expected: self.dim(), found: a.len() }.into());
        }
        Ok(())
    }

    fn check_subspace(&self, u: &Subspace) -> Result<(), AlgebraError> {
        if u.field() != self.field {
            return Err(LinalgError::FieldMismatch { left: self.field, right: u.field() }.into());
        }
        if u.ambient_dim() != self.dim() {
            return Err(LinalgError::DimensionMismatch { expected: self.dim(), found: u.ambient_dim() }.into());
        }
        Ok(())
    }

    /// Bilinear product `ab`.
    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.mul(a, b))
    }

    /// `a(bc)`.
    pub fn triple_right(&self, a: &Element, b: &Element, c: &Element) -> Result<Element, AlgebraError> {
        self.check_element(a)?;
        self.check_element(b)?;
        self.check_element(c)?;
        Ok(self.mul(a, &self.mul(b, c)))
    }

    /// Unchecked product for inner loops; inputs must belong to this algebra.
    pub(crate) fn mul(&self, a: &Element, b: &Element) -> Element {
        let n = self.dim();
        let mut out = Vector::zeros(self.field, n);
        for i in 0..n {
            let ai = a.get(i);
            if ai.is_zero() {
                continue;
            }
            for j in 0..n {
                let bj = b.get(j);
                if bj.is_zero() {
                    continue;
                }
                let c = &self.sc[i][j];
                if !c.is_zero() {
                    out.axpy(&(ai * bj), c);
                }
            }
        }
        out
    }

    /// `e_i · v`.
    pub(crate) fn basis_left_mul(&self, i: usize, v: &Element) -> Element {
        let mut out = Vector::zeros(self.field, self.dim());
        for (j, vj) in v.entries().iter().enumerate() {
            if !vj.is_zero() {
                out.axpy(vj, &self.sc[i][j]);
            }
        }
        out
    }

    /// `v · e_j`.
    pub(crate) fn basis_right_mul(&self, v: &Element, j: usize) -> Element {
        let mut out = Vector::zeros(self.field, self.dim());
        for (i, vi) in v.entries().iter().enumerate() {
            if !vi.is_zero() {
                out.axpy(vi, &self.sc[i][j]);
            }
        }
        out
    }

    /// Canonical span of all products `uv`, `u ∈ U`, `v ∈ V`.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace, AlgebraError> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        let prods = u
            .basis()
            .iter()
            .flat_map(|a| v.basis().iter().map(move |b| (a, b)))
            .map(|(a, b)| self.mul(a, b));
        self.span(prods)
    }

    pub fn is_ideal(&self, ideal: &Subspace) -> Result<bool, AlgebraError> {
        self.check_subspace(ideal)?;
        for u in ideal.basis() {
            for e in 0..self.dim() {
                if !ideal.reduce_unchecked(&self.basis_left_mul(e, u)).is_zero()
                    || !ideal.reduce_unchecked(&self.basis_right_mul(u, e)).is_zero()
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool, AlgebraError> {
        self.check_subspace(s)?;
        Ok(self.subspace_product(s, s)?.is_subspace_of(s)?)
    }

    /// Smallest subalgebra containing `generators`.
    pub fn generated_subalgebra(&self, generators: &[Element]) -> Result<Subspace, AlgebraError> {
        let mut s = self.span(generators.iter().cloned())?;
        loop {
            let next = s.sum(&self.subspace_product(&s, &s)?)?;
            if next == s {
                return Ok(s);
            }
            s = next;
        }
    }

    /// Quotient by an ideal. The quotient basis is the set of non-pivot
    /// coordinates of the ideal's RREF basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(AlgebraTable, Projection), AlgebraError> {
        if !self.is_ideal(ideal)? {
            return Err(AlgebraError::NotIdeal);
        }
        let proj = Projection { ideal: ideal.clone(), kept: ideal.free_columns() };
        let basis = proj.kept.iter().map(|&k| self.basis[k].clone()).collect();
        let sc = proj
            .kept
            .iter()
            .map(|&i| proj.kept.iter().map(|&j| proj.project_unchecked(&self.sc[i][j])).collect())
            .collect();
        let q = AlgebraTable::new(format!("{}/I", self.name), self.field, basis, sc)?;
        Ok((q, proj))
    }

    /// The subalgebra `s` as an algebra in its own right, basis = RREF rows.
    pub fn subalgebra(&self, s: &Subspace) -> Result<AlgebraTable, AlgebraError> {
        if !self.is_subalgebra(s)? {
            return Err(AlgebraError::NotSubalgebra);
        }
        let k = s.dim();
        let basis = (1..=k).map(|i| format!("s{i}")).collect();
        let mut sc = Vec::with_capacity(k);
        for a in s.basis() {
            let mut row = Vec::with_capacity(k);
            for b in s.basis() {
                let coords = s.coordinates(&self.mul(a, b))?.ok_or(AlgebraError::NotSubalgebra)?;
                row.push(Vector::new(self.field, coords)?);
            }
            sc.push(row);
        }
        AlgebraTable::new(format!("{} subalgebra", self.name), self.field, basis, sc)
    }

    /// Block-diagonal direct sum. Basis names get suffixes `_1` and `_2`.
    pub fn direct_sum(&self, other: &AlgebraTable) -> Result<AlgebraTable, AlgebraError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch { left: self.field, right: other.field }.into());
        }
        let (m, n) = (self.dim(), other.dim());
        let basis = self
            .basis
            .iter()
            .map(|b| format!("{b}_1"))
            .chain(other.basis.iter().map(|b| format!("{b}_2")))
            .collect();
        let embed = |v: &Vector, offset: usize| {
            let mut out = Vector::zeros(self.field, m + n);
            for (i, s) in v.entries().iter().enumerate() {
                out.set(offset + i, s.clone());
            }
            out
        };
        let mut sc = vec![vec![Vector::zeros(self.field, m + n); m + n]; m + n];
        for i in 0..m {
            for j in 0..m {
                sc[i][j] = embed(&self.sc[i][j], 0);
            }
        }
        for i in 0..n {
            for j in 0..n {
                sc[m + i][m + j] = embed(&other.sc[i][j], m);
            }
        }
        AlgebraTable::new(format!("{} ⊕ {}", self.name, other.name), self.field, basis, sc)
    }

    /// Reinterprets the structure constants in another field. Only ℚ → GF(p)
    /// (when every coefficient embeds) and the identity map are supported.
    pub fn over_field(&self, field: FieldSpec) -> Result<AlgebraTable, AlgebraError> {
        if field == self.field {
            return Ok(self.clone());
        }
        if self.field != FieldSpec::Rational {
            return Err(LinalgError::FieldMismatch { left: self.field, right: field }.into());
        }
        let mut sc = Vec::with_capacity(self.dim());
        for row in &self.sc {
            let mut out = Vec::with_capacity(row.len());
            for v in row {
                let entries = v
                    .entries()
                    .iter()
                    .map(|s| field.from_rational(s.as_rational().expect("rational table")))
                    .collect::<Result<Vec<_>, _>>()?;
                out.push(Vector::new(field, entries)?);
            }
            sc.push(out);
        }
        AlgebraTable::new(self.name.clone(), field, self.basis.clone(), sc)
    }

    /// Human-readable element, e.g. `-z + 2w`.
    pub fn render(&self, v: &Element) -> String {
        let mut out = String::new();
        for (s, name) in v.entries().iter().zip(&self.basis) {
            if s.is_zero() {
                continue;
            }
            let neg = s.is_negative();
            let mag = if neg { -s } else { s.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(name);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Nonzero products in `(i, j)` order.
    pub fn nonzero_products(&self) -> impl Iterator<Item = (usize, usize, &Vector)> {
        self.sc
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, v)| (i, j, v)))
            .filter(|(_, _, v)| !v.is_zero())
    }
}

impl fmt::Display for AlgebraTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {} (dim {})", self.name, self.field, self.dim())?;
        for (i, j, v) in self.nonzero_products() {
            write!(f, "\n  [{},{}] = {}", self.basis[i], self.basis[j], self.render(v))?;
        }
        Ok(())
    }
}

fn check_names(basis: &[String]) -> Result<(), AlgebraError> {
    let mut seen = HashSet::new();
    for b in basis {
        if !seen.insert(b.as_str()) {
            return Err(AlgebraError::DuplicateBasis(b.clone()));
        }
    }
    Ok(())
}

/// Canonical projection `A → A/I` together with a section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    ideal: Subspace,
    kept: Vec<usize>,
}

impl Projection {
    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    /// Coordinates of `A` that survive as the quotient basis.
    pub fn kept_coordinates(&self) -> &[usize] {
        &self.kept
    }

    pub fn project(&self, v: &Element) -> Result<Element, AlgebraError> {
        self.ideal.reduce(v)?;
        Ok(self.project_unchecked(v))
    }

    fn project_unchecked(&self, v: &Element) -> Element {
        let r = self.ideal.reduce_unchecked(v);
        let entries = self.kept.iter().map(|&k| r.get(k).clone()).collect();
        Vector::new(v.field(), entries).expect("same field")
    }

    /// Coset representative supported on the kept coordinates.
    pub fn lift(&self, q: &Element) -> Result<Element, AlgebraError> {
        if q.len() != self.kept.len() {
            return Err(LinalgError::DimensionMismatch { expected: self.kept.len(), found: q.len() }.into());
        }
        let mut out = Vector::zeros(q.field(), self.ideal.ambient_dim());
        for (s, &k) in q.entries().iter().zip(&self.kept) {
            out.set(k, s.clone());
        }
        Ok(out)
    }
}

/// On-disk algebra format (UTF-8 JSON).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub field: FieldFile,
    pub basis: Vec<String>,
    pub products: Vec<ProductFile>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldFile {
    Rational,
    Prime { p: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductFile {
    pub left: String,
    pub right: String,
    /// `[coefficient, basis name]` pairs.
    pub value: Vec<(String, String)>,
}

impl From<FieldSpec> for FieldFile {
    fn from(f: FieldSpec) -> Self {
        match f {
            FieldSpec::Rational => FieldFile::Rational,
            FieldSpec::Prime(p) => FieldFile::Prime { p: p.get() },
        }
    }
}

impl TryFrom<FieldFile> for FieldSpec {
    type Error = LinalgError;
    fn try_from(f: FieldFile) -> Result<Self, Self::Error> {
        match f {
            FieldFile::Rational => Ok(FieldSpec::Rational),
            FieldFile::Prime { p } => FieldSpec::prime(p),
        }
    }
}

impl AlgebraTable {
    pub fn to_file(&self) -> AlgebraFile {
        let products = self
            .nonzero_products()
            .map(|(i, j, v)| ProductFile {
                left: self.basis[i].clone(),
                right: self.basis[j].clone(),
                value: v
                    .entries()
                    .iter()
                    .zip(&self.basis)
                    .filter(|(s, _)| !s.is_zero())
                    .map(|(s, n)| (s.to_string(), n.clone()))
                    .collect(),
            })
            .collect();
        AlgebraFile {
            name: self.name.clone(),
            field: self.field.into(),
            basis: self.basis.clone(),
            products,
        }
    }

    pub fn from_file(file: &AlgebraFile) -> Result<Self, AlgebraError> {
        let field = FieldSpec::try_from(file.field)?;
        check_names(&file.basis)?;
        let dim = file.basis.len();
        let index = |n: &str| {
            file.basis
                .iter()
                .position(|b| b == n)
                .ok_or_else(|| AlgebraError::UnknownBasis(n.to_string()))
        };
        let mut products = Vec::with_capacity(file.products.len());
        for p in &file.products {
            let (i, j) = (index(&p.left)?, index(&p.right)?);
            let mut v = Vector::zeros(field, dim);
            for (coef, name) in &p.value {
                let k = index(name)?;
                let s = field.parse_scalar(coef)?;
                let cur: Scalar = v.get(k) + &s;
                v.set(k, cur);
            }
            products.push(((i, j), v));
        }
        AlgebraTable::from_products(file.name.clone(), field, file.basis.clone(), products)
    }

    /// Canonical JSON: pretty-printed, products in basis order, trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        let file: AlgebraFile = serde_json::from_str(text).map_err(|e| AlgebraError::Format(e.to_string()))?;
        AlgebraTable::from_file(&file)
    }
}
