//! Leavitt path algebras of finite directed graphs.
//!
//! Elements are finite combinations of monomials `αβ*` with `r(α) = r(β)`.
//! Products use the relations for vertices, edges and ghost edges together
//! with CK-1 (`e*e = r(e)`, `e*f = 0` for `e ≠ f`). CK-2 is never applied,
//! so a nonzero combination computed here may still vanish in the algebra.
//! Nonzeroness is therefore only claimed through a [`Certificate`], which
//! reduces a single monomial to a generator.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::exactlin::{FieldSpec, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(String),
    #[error("edge {edge:?} refers to unknown vertex {vertex:?}")]
    UnknownVertex { edge: String, vertex: String },
    #[error("name {0:?} is used for both a vertex and an edge")]
    NameClash(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("malformed graph file: {0}")]
    Format(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSpec {
    pub name: String,
    pub src: String,
    pub rng: String,
}

/// The on-disk graph format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedGraph {
    vertices: Vec<String>,
    edges: Vec<EdgeSpec>,
    /// `(src, rng)` vertex indices per edge.
    ends: Vec<(usize, usize)>,
}

impl DirectedGraph {
    pub fn new(vertices: Vec<String>, edges: Vec<EdgeSpec>) -> Result<Self, GraphError> {
        let mut vindex = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vindex.insert(v.as_str(), i).is_some() {
                return Err(GraphError::DuplicateVertex(v.clone()));
            }
        }
        let mut seen = HashSet::new();
        let mut ends = Vec::with_capacity(edges.len());
        for e in &edges {
            if !seen.insert(e.name.as_str()) {
                return Err(GraphError::DuplicateEdge(e.name.clone()));
            }
            if vindex.contains_key(e.name.as_str()) {
                return Err(GraphError::NameClash(e.name.clone()));
            }
            let find = |v: &str| {
                vindex
                    .get(v)
                    .copied()
                    .ok_or_else(|| GraphError::UnknownVertex { edge: e.name.clone(), vertex: v.to_string() })
            };
            ends.push((find(&e.src)?, find(&e.rng)?));
        }
        Ok(DirectedGraph { vertices, edges, ends })
    }

    /// Builds a graph from `(name, src, rng)` triples.
    pub fn from_parts(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self, GraphError> {
        DirectedGraph::new(
            vertices.iter().map(|s| s.to_string()).collect(),
            edges
                .iter()
                .map(|(n, s, r)| EdgeSpec { name: n.to_string(), src: s.to_string(), rng: r.to_string() })
                .collect(),
        )
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let f: GraphFile = serde_json::from_str(text).map_err(|e| GraphError::Format(e.to_string()))?;
        DirectedGraph::new(f.vertices, f.edges)
    }

    pub fn to_json(&self) -> String {
        let f = GraphFile { vertices: self.vertices.clone(), edges: self.edges.clone() };
        serde_json::to_string_pretty(&f).expect("serializable") + "\n"
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn edge_name(&self, e: usize) -> &str {
        &self.edges[e].name
    }

    pub fn source(&self, e: usize) -> usize {
        self.ends[e].0
    }

    pub fn range(&self, e: usize) -> usize {
        self.ends[e].1
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    /// Disjoint union; names of the second graph get a `'` suffix when
    /// they clash.
    pub fn disjoint_union(&self, other: &DirectedGraph) -> DirectedGraph {
        let taken: HashSet<String> =
            self.vertices.iter().cloned().chain(self.edges.iter().map(|e| e.name.clone())).collect();
        let rename = |n: &str| {
            let mut s = n.to_string();
            while taken.contains(&s) {
                s.push('\'');
            }
            s
        };
        let vmap: HashMap<&str, String> = other.vertices.iter().map(|v| (v.as_str(), rename(v))).collect();
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().map(|v| vmap[v.as_str()].clone()));
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| EdgeSpec {
            name: rename(&e.name),
            src: vmap[e.src.as_str()].clone(),
            rng: vmap[e.rng.as_str()].clone(),
        }));
        DirectedGraph::new(vertices, edges).expect("renamed union is well formed")
    }

    /// All paths of length at most `max_len`, vertices first.
    pub fn paths(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertex_count()).map(Path::Vertex).collect();
        let mut frontier: Vec<Vec<usize>> = (0..self.edge_count()).map(|e| vec![e]).collect();
        for _ in 0..max_len {
            out.extend(frontier.iter().cloned().map(Path::Edges));
            frontier = frontier
                .iter()
                .flat_map(|p| {
                    let end = self.range(*p.last().unwrap());
                    (0..self.edge_count()).filter(move |&e| self.source(e) == end).map(move |e| {
                        let mut q = p.clone();
                        q.push(e);
                        q
                    })
                })
                .collect();
        }
        out
    }

    /// All monomials `αβ*` with `|α|, |β| ≤ max_len`.
    pub fn monomials(&self, max_len: usize) -> Vec<Monomial> {
        let paths = self.paths(max_len);
        let mut out = Vec::new();
        for a in &paths {
            for b in &paths {
                if self.path_range(a) == self.path_range(b) {
                    out.push(Monomial { alpha: a.clone(), beta: b.clone() });
                }
            }
        }
        out
    }

    pub fn path_source(&self, p: &Path) -> usize {
        match p {
            Path::Vertex(v) => *v,
            Path::Edges(es) => self.source(es[0]),
        }
    }

    pub fn path_range(&self, p: &Path) -> usize {
        match p {
            Path::Vertex(v) => *v,
            Path::Edges(es) => self.range(*es.last().unwrap()),
        }
    }

    fn check_path(&self, p: &Path) -> bool {
        match p {
            Path::Vertex(v) => *v < self.vertex_count(),
            Path::Edges(es) => {
                !es.is_empty()
                    && es.iter().all(|&e| e < self.edge_count())
                    && es.windows(2).all(|w| self.range(w[0]) == self.source(w[1]))
            }
        }
    }

    /// If `p` is a prefix of `q`, the remainder `q = p q'`.
    fn strip_prefix(&self, p: &Path, q: &Path) -> Option<Path> {
        match (p, q) {
            (Path::Vertex(v), _) => (self.path_source(q) == *v).then(|| q.clone()),
            (Path::Edges(_), Path::Vertex(_)) => None,
            (Path::Edges(ps), Path::Edges(qs)) => {
                if !qs.starts_with(ps) {
                    None
                } else if qs.len() == ps.len() {
                    Some(Path::Vertex(self.range(*ps.last().unwrap())))
                } else {
                    Some(Path::Edges(qs[ps.len()..].to_vec()))
                }
            }
        }
    }

    /// `pq`, assuming `r(p) = s(q)`.
    fn concat(&self, p: &Path, q: &Path) -> Path {
        debug_assert_eq!(self.path_range(p), self.path_source(q));
        match (p, q) {
            (Path::Vertex(_), _) => q.clone(),
            (_, Path::Vertex(_)) => p.clone(),
            (Path::Edges(a), Path::Edges(b)) => Path::Edges(a.iter().chain(b).copied().collect()),
        }
    }

    pub fn render_path(&self, p: &Path) -> String {
        match p {
            Path::Vertex(v) => self.vertices[*v].clone(),
            Path::Edges(es) => es.iter().map(|&e| self.edges[e].name.as_str()).collect::<Vec<_>>().join(" "),
        }
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        match (&m.alpha, &m.beta) {
            (Path::Vertex(_), Path::Vertex(_)) => self.render_path(&m.alpha),
            (a, Path::Vertex(_)) => self.render_path(a),
            (Path::Vertex(_), Path::Edges(b)) => self.render_ghost(b),
            (a, Path::Edges(b)) => format!("{} {}", self.render_path(a), self.render_ghost(b)),
        }
    }

    fn render_ghost(&self, b: &[usize]) -> String {
        b.iter().rev().map(|&e| format!("{}*", self.edges[e].name)).collect::<Vec<_>>().join(" ")
    }

    pub fn render(&self, x: &LpaElement) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in x.terms.iter().enumerate() {
            let mono = self.render_monomial(m);
            let (neg, body) = match (c.is_one(), (-c).is_one()) {
                (true, _) => (false, mono),
                (_, true) => (true, mono),
                _ if c.is_negative() => (true, format!("{} {mono}", -c)),
                _ => (false, format!("{c} {mono}")),
            };
            match (i, neg) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }

    /// Parses a generator name: a vertex, an edge, or an edge followed by `*`.
    pub fn generator(&self, field: FieldSpec, name: &str) -> Result<LpaElement, GraphError> {
        let m = if let Some(e) = name.strip_suffix('*').and_then(|n| self.edge_index(n)) {
            Monomial::ghost(self, e)
        } else if let Some(e) = self.edge_index(name) {
            Monomial::edge(self, e)
        } else if let Some(v) = self.vertex_index(name) {
            Monomial::vertex(v)
        } else {
            return Err(GraphError::UnknownGenerator(name.to_string()));
        };
        Ok(LpaElement::monomial(field, m))
    }
}

/// A path: a single vertex (length 0) or a nonempty composable edge list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Path {
    Vertex(usize),
    Edges(Vec<usize>),
}

impl Path {
    pub fn len(&self) -> usize {
        match self {
            Path::Vertex(_) => 0,
            Path::Edges(es) => es.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The monomial `αβ*`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub alpha: Path,
    pub beta: Path,
}

impl Monomial {
    pub fn vertex(v: usize) -> Self {
        Monomial { alpha: Path::Vertex(v), beta: Path::Vertex(v) }
    }

    pub fn edge(g: &DirectedGraph, e: usize) -> Self {
        Monomial { alpha: Path::Edges(vec![e]), beta: Path::Vertex(g.range(e)) }
    }

    pub fn ghost(g: &DirectedGraph, e: usize) -> Self {
        Monomial { alpha: Path::Vertex(g.range(e)), beta: Path::Edges(vec![e]) }
    }

    /// The path `p` as a monomial `p r(p)*`.
    pub fn path(g: &DirectedGraph, p: Path) -> Self {
        let r = g.path_range(&p);
        Monomial { alpha: p, beta: Path::Vertex(r) }
    }

    /// The ghost path `p*` as a monomial `r(p) p*`.
    pub fn ghost_path(g: &DirectedGraph, p: Path) -> Self {
        let r = g.path_range(&p);
        Monomial { alpha: Path::Vertex(r), beta: p }
    }

    /// A vertex, an edge or a ghost edge.
    pub fn is_generator(&self) -> bool {
        match (&self.alpha, &self.beta) {
            (Path::Vertex(a), Path::Vertex(b)) => a == b,
            (Path::Edges(a), Path::Vertex(_)) | (Path::Vertex(_), Path::Edges(a)) => a.len() == 1,
            _ => false,
        }
    }
}

/// Finite combination of monomials; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpaElement {
    field: FieldSpec,
    terms: BTreeMap<Monomial, Scalar>,
}

impl LpaElement {
    pub fn zero(field: FieldSpec) -> Self {
        LpaElement { field, terms: BTreeMap::new() }
    }

    pub fn monomial(field: FieldSpec, m: Monomial) -> Self {
        LpaElement::term(field, m, field.one())
    }

    pub fn term(field: FieldSpec, m: Monomial, c: Scalar) -> Self {
        let mut x = LpaElement::zero(field);
        x.add_term(m, c);
        x
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    /// The only term, if there is exactly one.
    pub fn single_term(&self) -> Option<(&Monomial, &Scalar)> {
        let mut it = self.terms.iter();
        match (it.next(), it.next()) {
            (Some(t), None) => Some(t),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&m) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn add(&self, other: &LpaElement) -> LpaElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> LpaElement {
        let mut out = LpaElement::zero(self.field);
        for (m, d) in &self.terms {
            out.add_term(m.clone(), c * d);
        }
        out
    }
}

fn check_element(g: &DirectedGraph, x: &LpaElement) -> Result<(), GraphError> {
    for m in x.terms.keys() {
        let ok = g.check_path(&m.alpha) && g.check_path(&m.beta) && g.path_range(&m.alpha) == g.path_range(&m.beta);
        if !ok {
            return Err(GraphError::UnknownGenerator(format!("{m:?}")));
        }
    }
    Ok(())
}

/// `(αβ*)(γδ*)`: `(αγ')δ*` if `γ = βγ'`, `α(δβ')*` if `β = γβ'`, else 0.
pub fn multiply_monomials(g: &DirectedGraph, x: &Monomial, y: &Monomial) -> Option<Monomial> {
    if let Some(rest) = g.strip_prefix(&x.beta, &y.alpha) {
        return Some(Monomial { alpha: g.concat(&x.alpha, &rest), beta: y.beta.clone() });
    }
    if let Some(rest) = g.strip_prefix(&y.alpha, &x.beta) {
        return Some(Monomial { alpha: x.alpha.clone(), beta: g.concat(&y.beta, &rest) });
    }
    None
}

pub fn lpa_multiply(g: &DirectedGraph, x: &LpaElement, y: &LpaElement) -> Result<LpaElement, GraphError> {
    check_element(g, x)?;
    check_element(g, y)?;
    Ok(mul(g, x, y))
}

fn mul(g: &DirectedGraph, x: &LpaElement, y: &LpaElement) -> LpaElement {
    let mut out = LpaElement::zero(x.field);
    for (m, c) in &x.terms {
        for (n, d) in &y.terms {
            if let Some(p) = multiply_monomials(g, m, n) {
                out.add_term(p, c * d);
            }
        }
    }
    out
}

/// `left · x · right = scalar · generator`, with `generator` a vertex, edge
/// or ghost edge. Since generators are nonzero, so is `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub left: Option<Monomial>,
    pub right: Monomial,
    pub generator: Monomial,
    pub scalar: Scalar,
}

impl Certificate {
    /// Recomputes the reduction with CK-1 only.
    pub fn check(&self, g: &DirectedGraph, x: &LpaElement) -> bool {
        let f = x.field;
        let mut y = mul(g, x, &LpaElement::monomial(f, self.right.clone()));
        if let Some(l) = &self.left {
            y = mul(g, &LpaElement::monomial(f, l.clone()), &y);
        }
        !self.scalar.is_zero()
            && self.generator.is_generator()
            && y == LpaElement::term(f, self.generator.clone(), self.scalar.clone())
    }

    pub fn to_json(&self, g: &DirectedGraph) -> Value {
        json!({
            "left": self.left.as_ref().map(|m| g.render_monomial(m)),
            "right": g.render_monomial(&self.right),
            "generator": g.render_monomial(&self.generator),
            "scalar": self.scalar.to_string(),
        })
    }
}

/// For a single monomial `c·αβ*`: multiply on the right by `β`, leaving
/// `c·α`; if `|α| ≥ 2`, multiply on the left by the ghost of all but the
/// last edge of `α`, leaving that last edge. Returns `None` for zero or
/// for combinations of several monomials.
pub fn certify_nonzero(g: &DirectedGraph, x: &LpaElement) -> Option<Certificate> {
    let (m, c) = x.single_term()?;
    let right = Monomial::path(g, m.beta.clone());
    let (left, generator) = match &m.alpha {
        Path::Edges(es) if es.len() >= 2 => {
            let prefix = Path::Edges(es[..es.len() - 1].to_vec());
            (Some(Monomial::ghost_path(g, prefix)), Monomial::edge(g, *es.last().unwrap()))
        }
        a => (None, Monomial::path(g, a.clone())),
    };
    let cert = Certificate { left, right, generator, scalar: c.clone() };
    cert.check(g, x).then_some(cert)
}

/// `a(bc) = 0` and `b(ac)` certified nonzero.
pub fn validate_witness(g: &DirectedGraph, a: &LpaElement, b: &LpaElement, c: &LpaElement) -> bool {
    let (Ok(bc), Ok(ac)) = (lpa_multiply(g, b, c), lpa_multiply(g, a, c)) else {
        return false;
    };
    mul(g, a, &bc).is_zero() && certify_nonzero(g, &mul(g, b, &ac)).is_some()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// An edge whose source and range differ.
    NonLoopEdge { edge: usize },
    /// A vertex carrying the two loops `f`, `g`.
    TwoLoops { vertex: usize, f: usize, g: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphViolation {
    pub kind: ViolationKind,
    pub a: LpaElement,
    pub b: LpaElement,
    pub c: LpaElement,
    pub abc: LpaElement,
    pub bac: LpaElement,
    pub certificate: Option<Certificate>,
}

impl GraphViolation {
    fn new(g: &DirectedGraph, kind: ViolationKind, a: Monomial, b: Monomial, c: Monomial) -> Self {
        let f = FieldSpec::Rational;
        let (a, b, c) = (LpaElement::monomial(f, a), LpaElement::monomial(f, b), LpaElement::monomial(f, c));
        let abc = mul(g, &a, &mul(g, &b, &c));
        let bac = mul(g, &b, &mul(g, &a, &c));
        let certificate = certify_nonzero(g, &bac);
        GraphViolation { kind, a, b, c, abc, bac, certificate }
    }

    pub fn validated(&self, g: &DirectedGraph) -> bool {
        validate_witness(g, &self.a, &self.b, &self.c)
    }

    pub fn to_json(&self, g: &DirectedGraph) -> Value {
        let (lemma, at) = match self.kind {
            ViolationKind::NonLoopEdge { edge } => ("non-loop-edge", g.edge_name(edge).to_string()),
            ViolationKind::TwoLoops { vertex, .. } => ("two-loops", g.vertex_name(vertex).to_string()),
        };
        json!({
            "lemma": lemma,
            "at": at,
            "a": g.render(&self.a),
            "b": g.render(&self.b),
            "c": g.render(&self.c),
            "abc": g.render(&self.abc),
            "bac": g.render(&self.bac),
            "certificate": self.certificate.as_ref().map(|c| c.to_json(g)),
            "validated": self.validated(g),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphClassification {
    pub dextral: bool,
    /// Vertices without loops (meaningful when dextral).
    pub isolated: usize,
    /// Vertices with exactly one loop (meaningful when dextral).
    pub single_loop: usize,
    pub iso_class: Option<String>,
    pub violations: Vec<GraphViolation>,
}

impl GraphClassification {
    pub fn to_json(&self, g: &DirectedGraph) -> Value {
        json!({
            "dextral": self.dextral,
            "I": self.isolated,
            "J": self.single_loop,
            "iso_class": self.iso_class,
            "violations": self.violations.iter().map(|v| v.to_json(g)).collect::<Vec<_>>(),
        })
    }
}

pub const LAURENT: &str = "R[x,x^-1]";

/// Decides dextral symmetry of `L(E)` from the shape of `E`: it holds
/// exactly when every edge is a loop and no vertex has two loops.
pub fn classify_graph(g: &DirectedGraph) -> GraphClassification {
    let mut violations = Vec::new();
    let mut loops: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    for e in 0..g.edge_count() {
        let (s, r) = (g.source(e), g.range(e));
        if s == r {
            loops[s].push(e);
        } else {
            violations.push(GraphViolation::new(
                g,
                ViolationKind::NonLoopEdge { edge: e },
                Monomial::edge(g, e),
                Monomial::vertex(s),
                Monomial::vertex(r),
            ));
        }
    }
    for (v, ls) in loops.iter().enumerate() {
        if let [f, h, ..] = ls[..] {
            violations.push(GraphViolation::new(
                g,
                ViolationKind::TwoLoops { vertex: v, f, g: h },
                Monomial::ghost(g, h),
                Monomial::edge(g, f),
                Monomial::vertex(v),
            ));
        }
    }
    let isolated = loops.iter().filter(|l| l.is_empty()).count();
    let single_loop = loops.iter().filter(|l| l.len() == 1).count();
    let dextral = violations.is_empty();
    let iso_class = dextral.then(|| {
        let parts: Vec<&str> =
            std::iter::repeat_n("R", isolated).chain(std::iter::repeat_n(LAURENT, single_loop)).collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ⊕ ")
        }
    });
    GraphClassification { dextral, isolated, single_loop, iso_class, violations }
}

impl fmt::Display for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertices {{{}}}", self.vertices.join(", "))?;
        for e in &self.edges {
            write!(f, ", {}: {} -> {}", e.name, e.src, e.rng)?;
        }
        Ok(())
    }
}
