//! Multiplication tables of the small Leibniz algebras used throughout the
//! crate, with parameter domains and expected properties.
//!
//! Only nonzero brackets `[a, b] = a·b` are listed. Entries appear in a
//! fixed order, which [`list`] preserves.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraError, AlgebraTable};
use crate::exactlin::{FieldSpec, LinalgError, Vector};

pub type Params = BTreeMap<String, BigRational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("unknown catalog id {0:?}")]
    UnknownId(String),
    #[error("{id} needs a value for {param}")]
    MissingParam { id: String, param: String },
    #[error("{id} has no parameter {param}")]
    UnexpectedParam { id: String, param: String },
    #[error("{param} = {value} is outside the domain of {id}")]
    OutOfDomain { id: String, param: String, value: String },
    #[error("{id} requires characteristic {required}, got {found}")]
    WrongCharacteristic { id: String, required: u64, found: FieldSpec },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Rational,
    RationalExcluding(&'static [i64]),
    FiniteSet(&'static [i64]),
    /// Integers `n ≥ min`; sampled over `samples`.
    Natural { min: i64, samples: (i64, i64) },
}

impl Domain {
    pub fn admits(&self, v: &BigRational) -> bool {
        let int = |k: &i64| *v == BigRational::from_integer(BigInt::from(*k));
        match self {
            Domain::Rational => true,
            Domain::RationalExcluding(xs) => !xs.iter().any(int),
            Domain::FiniteSet(xs) => xs.iter().any(int),
            Domain::Natural { min, .. } => v.is_integer() && v.to_integer() >= BigInt::from(*min),
        }
    }

    /// Integer samples: rational domains use `range`, the others their own.
    pub fn samples(&self, range: (i64, i64)) -> Vec<i64> {
        let within = |xs: Vec<i64>| -> Vec<i64> {
            xs.into_iter().filter(|&k| self.admits(&BigRational::from_integer(k.into()))).collect()
        };
        match self {
            Domain::Rational | Domain::RationalExcluding(_) => within((range.0..=range.1).collect()),
            Domain::FiniteSet(xs) => xs.to_vec(),
            Domain::Natural { samples, .. } => within((samples.0..=samples.1).collect()),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rational => write!(f, "Q"),
            Domain::RationalExcluding(xs) => write!(f, "Q \\ {xs:?}"),
            Domain::FiniteSet(xs) => write!(f, "{xs:?}"),
            Domain::Natural { min, .. } => write!(f, "n >= {min}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub domain: Domain,
}

/// A coefficient, possibly depending on the entry's single parameter `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coef {
    Int(i64),
    /// `a·p + b`
    Affine(i64, i64),
    /// `(a·p + b) / (c·p + d)`
    Ratio((i64, i64), (i64, i64)),
}

const fn k(n: i64) -> Coef {
    Coef::Int(n)
}

impl Coef {
    fn eval(&self, p: Option<&BigRational>) -> BigRational {
        let int = |n: i64| BigRational::from_integer(BigInt::from(n));
        let affine = |(a, b): (i64, i64)| {
            let p = p.expect("parametric coefficient needs a parameter");
            int(a) * p + int(b)
        };
        match *self {
            Coef::Int(n) => int(n),
            Coef::Affine(a, b) => affine((a, b)),
            Coef::Ratio(num, den) => affine(num) / affine(den),
        }
    }

    fn render(&self, param: &str) -> String {
        let affine = |a: i64, b: i64| match (a, b) {
            (1, 0) => param.to_string(),
            (-1, 0) => format!("-{param}"),
            (a, 0) => format!("{a}{param}"),
            (0, b) => b.to_string(),
            (1, b) => format!("{b}+{param}"),
            (-1, b) => format!("{b}-{param}"),
            (a, b) if a < 0 => format!("{b}{a}{param}"),
            (a, b) => format!("{b}+{a}{param}"),
        };
        match *self {
            Coef::Int(n) => n.to_string(),
            Coef::Affine(a, b) if a != 0 && b != 0 => format!("({})", affine(a, b)),
            Coef::Affine(a, b) => affine(a, b),
            Coef::Ratio((a, b), (c, d)) => format!("({})/({})", affine(a, b), affine(c, d)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub coef: Coef,
    pub basis: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Product {
    pub left: &'static str,
    pub right: &'static str,
    pub terms: &'static [Term],
}

macro_rules! table {
    ($( [$l:ident, $r:ident] = $( $c:expr => $b:ident ),+ );* $(;)?) => {
        &[ $( Product {
            left: stringify!($l),
            right: stringify!($r),
            terms: &[ $( Term { coef: $c, basis: stringify!($b) } ),+ ],
        } ),* ]
    };
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Fixed { basis: &'static [&'static str], products: &'static [Product] },
    /// Basis `x1..xn` with `[x_i, x_n] = x_i` for `i < n`.
    Towers,
}

/// An expected value with a short label of where it comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claim<T> {
    pub value: T,
    pub source: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Expected {
    pub dextral: Claim<bool>,
    pub solvable: Claim<bool>,
    /// `Some(n)`: left nilpotent with `L(n) = 0` first. `None`: not left nilpotent.
    pub left_nilpotent: Claim<Option<usize>>,
    pub right_nilpotent: Claim<bool>,
    pub nilradical: Option<&'static str>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub display: &'static str,
    pub param: Option<ParamSpec>,
    /// Required characteristic, if any.
    pub characteristic: Option<u64>,
    pub shape: Shape,
    pub expected: Expected,
    pub notes: &'static [&'static str],
}

const B3: &[&str] = &["x", "y", "z"];
const B4: &[&str] = &["x", "y", "z", "w"];
const B7: &[&str] = &["x1", "x2", "x3", "x4", "x5", "x6", "x7"];

const DERIVED: &str = "derived";
const RIGHT_NILPOTENT_3: &str = "3-dim right nilpotent classification";
const RIGHT_NILPOTENT_4: &str = "4-dim right nilpotent classification";
const NILRADICAL_2: &str = "2-dim nilradical theorem";
const NILRADICAL_MU2: &str = "mu2 nilradical proposition";

const fn claim<T>(value: T, source: &'static str) -> Claim<T> {
    Claim { value, source }
}

/// Dextral, nilpotent, with `L(3) = 0`.
const fn nilpotent_dextral(source: &'static str, nilradical: &'static str) -> Expected {
    Expected {
        dextral: claim(true, source),
        solvable: claim(true, DERIVED),
        left_nilpotent: claim(Some(3), source),
        right_nilpotent: claim(true, source),
        nilradical: Some(nilradical),
    }
}

/// Not dextral, solvable, neither left nor right nilpotent.
const fn solvable_only(source: &'static str, remark: &'static str, nilradical: &'static str) -> Expected {
    Expected {
        dextral: claim(false, source),
        solvable: claim(true, DERIVED),
        left_nilpotent: claim(None, remark),
        right_nilpotent: claim(false, DERIVED),
        nilradical: Some(nilradical),
    }
}

/// Dextral with `L(3) = 0`, not right nilpotent.
const fn left_index_three(source: &'static str, left: &'static str, nilradical: Option<&'static str>) -> Expected {
    Expected {
        dextral: claim(true, source),
        solvable: claim(true, DERIVED),
        left_nilpotent: claim(Some(3), left),
        right_nilpotent: claim(false, DERIVED),
        nilradical,
    }
}

const N_NOT_DEXTRAL: Expected = Expected {
    dextral: claim(false, "4-dim right nilpotent classification: [y,[x,x]] = 0, [x,[y,x]] != 0"),
    solvable: claim(true, DERIVED),
    left_nilpotent: claim(Some(4), DERIVED),
    right_nilpotent: claim(true, RIGHT_NILPOTENT_4),
    nilradical: Some("self"),
};

const fn n_entry(id: &'static str, display: &'static str, products: &'static [Product]) -> CatalogEntry {
    CatalogEntry {
        id,
        display,
        param: None,
        characteristic: None,
        shape: Shape::Fixed { basis: B4, products },
        expected: nilpotent_dextral(RIGHT_NILPOTENT_4, "self"),
        notes: &[],
    }
}

const fn n_param(
    id: &'static str,
    display: &'static str,
    param: ParamSpec,
    products: &'static [Product],
) -> CatalogEntry {
    CatalogEntry { param: Some(param), ..n_entry(id, display, products) }
}

const fn n_refuted(id: &'static str, display: &'static str, products: &'static [Product]) -> CatalogEntry {
    CatalogEntry { expected: N_NOT_DEXTRAL, ..n_entry(id, display, products) }
}

const fn mu_entry(id: &'static str, display: &'static str, products: &'static [Product]) -> CatalogEntry {
    CatalogEntry {
        id,
        display,
        param: None,
        characteristic: None,
        shape: Shape::Fixed { basis: B3, products },
        expected: nilpotent_dextral(RIGHT_NILPOTENT_3, "self"),
        notes: &[],
    }
}

const ALPHA: ParamSpec = ParamSpec { name: "alpha", domain: Domain::Rational };

static CATALOG: &[CatalogEntry] = &[
    CatalogEntry {
        id: "lnotr",
        display: "left nilpotent, not right nilpotent",
        param: None,
        characteristic: None,
        shape: Shape::Fixed { basis: B3, products: table![[z, x] = k(1) => z] },
        expected: Expected {
            dextral: claim(true, "left-not-right example"),
            solvable: claim(true, "left-not-right example"),
            left_nilpotent: claim(Some(3), "left-not-right example"),
            right_nilpotent: claim(false, "left-not-right example"),
            nilradical: None,
        },
        notes: &[],
    },
    CatalogEntry {
        id: "Lprime",
        display: "L'",
        param: None,
        characteristic: None,
        shape: Shape::Fixed {
            basis: B3,
            products: table![[x, z] = k(1) => x; [y, z] = k(1) => y; [z, y] = k(-1) => y],
        },
        expected: Expected {
            dextral: claim(false, "derived: solvable but not left nilpotent"),
            solvable: claim(true, "solvable-not-left-nilpotent example"),
            left_nilpotent: claim(None, "solvable-not-left-nilpotent example"),
            right_nilpotent: claim(false, DERIVED),
            nilradical: None,
        },
        notes: &[],
    },
    CatalogEntry {
        id: "gamma1",
        display: "γ1",
        param: None,
        characteristic: None,
        shape: Shape::Fixed { basis: &["x", "y"], products: table![[x, x] = k(1) => y] },
        expected: nilpotent_dextral("2-dim right nilpotent classification", "self"),
        notes: &[],
    },
    mu_entry("mu1", "μ1", table![[x, x] = k(1) => z]),
    mu_entry("mu2", "μ2", table![[x, y] = k(1) => z; [y, x] = k(-1) => z]),
    CatalogEntry {
        param: Some(ALPHA),
        notes: &["the parameter domain is not stated; taken as all of Q"],
        ..mu_entry("mu3", "μ3(α)", table![[x, x] = k(1) => z; [y, y] = Coef::Affine(1, 0) => z; [x, y] = k(1) => z])
    },
    mu_entry("mu4", "μ4", table![[y, x] = k(1) => z; [x, y] = k(1) => z]),
    mu_entry("mu5", "μ5", table![[x, x] = k(1) => y; [y, x] = k(1) => z]),
    n_entry("N1", "N1", table![[x, x] = k(1) => y; [y, x] = k(1) => z; [z, x] = k(1) => w]),
    n_entry(
        "N2",
        "N2",
        table![[x, x] = k(1) => z; [x, y] = k(1) => w; [y, x] = k(1) => z; [z, x] = k(1) => w],
    ),
    n_entry("N3", "N3", table![[x, x] = k(1) => z; [y, x] = k(1) => z; [z, x] = k(1) => w]),
    n_param(
        "N4",
        "N4(α)",
        ParamSpec { name: "alpha", domain: Domain::FiniteSet(&[0, 1]) },
        table![
            [x, x] = k(1) => z; [x, y] = Coef::Affine(1, 0) => w; [y, x] = k(1) => z;
            [y, y] = k(1) => w; [z, x] = k(1) => w
        ],
    ),
    n_entry("N5", "N5", table![[x, x] = k(1) => z; [x, y] = k(1) => w; [z, x] = k(1) => w]),
    n_entry("N6", "N6", table![[x, x] = k(1) => z; [y, y] = k(1) => w; [z, x] = k(1) => w]),
    n_refuted(
        "N7",
        "N7",
        table![
            [x, x] = k(1) => w; [y, x] = k(1) => z; [z, x] = k(1) => w;
            [x, y] = k(-1) => z; [x, z] = k(-1) => w
        ],
    ),
    n_refuted(
        "N8",
        "N8",
        table![
            [x, x] = k(1) => w; [y, x] = k(1) => z; [z, x] = k(1) => w;
            [x, y] = k(-1) => z, k(1) => w; [x, z] = k(-1) => w
        ],
    ),
    n_refuted(
        "N9",
        "N9",
        table![
            [x, x] = k(1) => w; [y, x] = k(1) => z; [y, y] = k(1) => w; [z, x] = k(1) => w;
            [x, y] = k(-1) => z, k(2) => w; [x, z] = k(-1) => w
        ],
    ),
    n_refuted(
        "N10",
        "N10",
        table![
            [x, x] = k(1) => w; [y, x] = k(1) => z; [y, y] = k(1) => w; [z, x] = k(1) => w;
            [x, y] = k(-1) => z; [x, z] = k(-1) => w
        ],
    ),
    n_entry(
        "N11",
        "N11",
        table![[x, x] = k(1) => w; [x, y] = k(1) => z; [y, x] = k(-1) => z; [y, y] = k(-2) => z, k(1) => w],
    ),
    n_entry("N12", "N12", table![[x, y] = k(1) => z; [y, x] = k(1) => w; [y, y] = k(-1) => z]),
    n_param(
        "N13",
        "N13(α)",
        ALPHA,
        table![[x, x] = k(1) => z; [x, y] = k(1) => w; [y, x] = Coef::Affine(-1, 0) => z; [y, y] = k(-1) => w],
    ),
    n_param(
        "N14",
        "N14(α)",
        ALPHA,
        table![
            [x, x] = k(1) => w; [x, y] = Coef::Affine(1, 0) => w; [y, x] = Coef::Affine(-1, 0) => w;
            [y, y] = k(1) => w; [z, z] = k(1) => w
        ],
    ),
    n_entry(
        "N15",
        "N15",
        table![[x, y] = k(1) => w; [x, z] = k(1) => w; [y, x] = k(-1) => w; [y, y] = k(1) => w; [z, x] = k(1) => w],
    ),
    n_entry("N16", "N16", table![[x, x] = k(1) => w; [x, y] = k(1) => w; [y, x] = k(-1) => w; [z, z] = k(1) => w]),
    n_entry("N17", "N17", table![[x, y] = k(1) => z; [y, x] = k(1) => w]),
    CatalogEntry {
        notes: &["printed as \"[y,x]-z\"; encoded as [y,x] = -z"],
        ..n_entry("N18", "N18", table![[x, y] = k(1) => z; [y, x] = k(-1) => z; [y, y] = k(1) => w])
    },
    n_entry("N19", "N19", table![[y, x] = k(1) => w; [y, y] = k(1) => z]),
    n_param(
        "N20",
        "N20(α)",
        ParamSpec { name: "alpha", domain: Domain::RationalExcluding(&[1]) },
        table![[x, y] = k(1) => w; [y, x] = Coef::Ratio((1, 1), (-1, 1)) => w; [y, y] = k(1) => z],
    ),
    n_entry("N21", "N21", table![[x, y] = k(1) => w; [y, x] = k(-1) => w; [z, z] = k(1) => w]),
    n_entry("N22", "N22", table![[z, x] = k(1) => w; [y, z] = k(1) => w]),
    CatalogEntry {
        id: "R1",
        display: "R1",
        param: None,
        characteristic: None,
        shape: Shape::Fixed { basis: B4, products: table![[x, z] = k(1) => x; [y, w] = k(1) => y] },
        expected: left_index_three(NILRADICAL_2, DERIVED, Some("2-dim")),
        notes: &[],
    },
    CatalogEntry {
        id: "S2",
        display: "S2",
        param: None,
        characteristic: None,
        shape: Shape::Fixed {
            basis: B4,
            products: table![[x, z] = k(1) => x; [y, w] = k(1) => y; [z, x] = k(-1) => x; [w, y] = k(-1) => y],
        },
        expected: solvable_only(NILRADICAL_2, "2-dim nilradical remark", "2-dim"),
        notes: &[],
    },
    CatalogEntry {
        id: "S3",
        display: "S3",
        param: None,
        characteristic: None,
        shape: Shape::Fixed {
            basis: B4,
            products: table![[x, z] = k(1) => x; [y, w] = k(1) => y; [w, y] = k(-1) => y],
        },
        expected: solvable_only(NILRADICAL_2, "2-dim nilradical remark", "2-dim"),
        notes: &[],
    },
    CatalogEntry {
        id: "L1",
        display: "L1(λ)",
        param: Some(ParamSpec { name: "lambda", domain: Domain::Rational }),
        characteristic: None,
        shape: Shape::Fixed {
            basis: B4,
            products: table![
                [y, z] = k(1) => w; [z, y] = k(-1) => w; [y, x] = k(1) => y;
                [z, x] = Coef::Affine(1, 0) => z; [w, x] = Coef::Affine(1, 1) => w;
                [x, y] = k(-1) => y; [x, z] = Coef::Affine(-1, 0) => z; [x, w] = Coef::Affine(-1, -1) => w
            ],
        },
        expected: solvable_only(NILRADICAL_MU2, "mu2 nilradical remark", "mu2"),
        notes: &["printed with [x,w] = (1+λ)w; encoded as -(1+λ)w, the only sign that satisfies the right Leibniz identity"],
    },
    CatalogEntry {
        id: "L2",
        display: "L2",
        param: None,
        characteristic: None,
        shape: Shape::Fixed {
            basis: B4,
            products: table![
                [y, z] = k(1) => w; [z, y] = k(-1) => w; [y, x] = k(1) => y; [x, y] = k(-1) => y;
                [z, x] = k(-1) => z; [x, z] = k(1) => z; [x, x] = k(1) => w
            ],
        },
        expected: solvable_only(NILRADICAL_MU2, "mu2 nilradical remark", "mu2"),
        notes: &[],
    },
    CatalogEntry {
        id: "L3",
        display: "L3",
        param: None,
        characteristic: None,
        shape: Shape::Fixed {
            basis: B4,
            products: table![
                [y, z] = k(1) => w; [z, y] = k(-1) => w; [y, x] = k(1) => y, k(1) => z;
                [x, y] = k(-1) => y, k(-1) => z; [z, x] = k(1) => z; [x, z] = k(-1) => z;
                [w, x] = k(2) => w; [x, w] = k(-2) => w
            ],
        },
        expected: solvable_only(NILRADICAL_MU2, "mu2 nilradical remark", "mu2"),
        notes: &[],
    },
    CatalogEntry {
        id: "R2",
        display: "R2",
        param: None,
        characteristic: None,
        shape: Shape::Fixed {
            basis: B4,
            products: table![[z, y] = k(1) => w; [z, x] = k(1) => z; [w, x] = k(1) => w],
        },
        expected: left_index_three("mu3 nilradical proposition", "left nilpotency index remark", Some("mu3")),
        notes: &[],
    },
    CatalogEntry {
        id: "R3",
        display: "R3(β)",
        param: Some(ParamSpec { name: "beta", domain: Domain::Rational }),
        characteristic: None,
        shape: Shape::Fixed {
            basis: B4,
            products: table![
                [y, y] = k(1) => w; [z, x] = k(1) => z; [x, y] = k(1) => w; [x, x] = Coef::Affine(1, 0) => w
            ],
        },
        expected: left_index_three("mu1 nilradical proposition", "left nilpotency index remark", Some("mu1")),
        notes: &["the parameter is printed as ranging over w; read as β over Q"],
    },
    CatalogEntry {
        id: "R4",
        display: "R4",
        param: None,
        characteristic: None,
        shape: Shape::Fixed { basis: B4, products: table![[y, y] = k(1) => w; [z, x] = k(1) => z] },
        expected: left_index_three("mu1 nilradical proposition", "left nilpotency index remark", Some("mu1")),
        notes: &[],
    },
    CatalogEntry {
        id: "R5",
        display: "R5",
        param: None,
        characteristic: None,
        shape: Shape::Fixed {
            basis: B4,
            products: table![[y, y] = k(1) => w; [z, x] = k(1) => z; [x, y] = k(1) => w; [y, x] = k(1) => w],
        },
        expected: left_index_three("mu1 nilradical proposition", "left nilpotency index remark", Some("mu1")),
        notes: &[],
    },
    CatalogEntry {
        id: "towers_n",
        display: "n-dim family [x_i, x_n] = x_i",
        param: Some(ParamSpec { name: "n", domain: Domain::Natural { min: 2, samples: (2, 10) } }),
        characteristic: None,
        shape: Shape::Towers,
        expected: left_index_three("n-dim family example", "n-dim family example", None),
        notes: &[],
    },
    CatalogEntry {
        id: "lie7_char3",
        display: "7-dim Lie algebra in characteristic 3",
        param: None,
        characteristic: Some(3),
        shape: Shape::Fixed {
            basis: B7,
            products: table![
                [x1, x2] = k(1) => x4; [x1, x3] = k(1) => x5; [x2, x3] = k(1) => x6;
                [x1, x6] = k(1) => x7; [x2, x5] = k(-1) => x7; [x3, x4] = k(1) => x7;
                [x2, x1] = k(-1) => x4; [x3, x1] = k(-1) => x5; [x3, x2] = k(-1) => x6;
                [x6, x1] = k(-1) => x7; [x5, x2] = k(1) => x7; [x4, x3] = k(-1) => x7
            ],
        },
        expected: Expected {
            dextral: claim(true, "7-dim characteristic 3 example"),
            solvable: claim(true, DERIVED),
            left_nilpotent: claim(Some(4), DERIVED),
            right_nilpotent: claim(true, DERIVED),
            nilradical: Some("self"),
        },
        notes: &["antisymmetric counterparts of the listed brackets are included"],
    },
];

/// All ids, in catalog order.
pub fn list() -> Vec<&'static str> {
    CATALOG.iter().map(|e| e.id).collect()
}

pub fn entries() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn get(id: &str) -> Result<&'static CatalogEntry, CatalogError> {
    CATALOG.iter().find(|e| e.id == id).ok_or_else(|| CatalogError::UnknownId(id.to_string()))
}

pub fn expected(id: &str) -> Result<Expected, CatalogError> {
    get(id).map(|e| e.expected)
}

pub fn instantiate(id: &str, params: &Params, field: FieldSpec) -> Result<AlgebraTable, CatalogError> {
    get(id)?.instantiate(params, field)
}

pub fn int_param(name: &str, v: i64) -> Params {
    Params::from([(name.to_string(), BigRational::from_integer(v.into()))])
}

impl CatalogEntry {
    /// `None` when the dimension depends on a parameter.
    pub fn dim(&self) -> Option<usize> {
        match self.shape {
            Shape::Fixed { basis, .. } => Some(basis.len()),
            Shape::Towers => None,
        }
    }

    pub fn default_field(&self) -> FieldSpec {
        match self.characteristic {
            Some(p) => FieldSpec::prime(p).expect("catalog characteristics are prime"),
            None => FieldSpec::Rational,
        }
    }

    /// Parameter sets built from integer samples; `range` applies to
    /// rational parameters.
    pub fn sample_params(&self, range: (i64, i64)) -> Vec<Params> {
        match self.param {
            None => vec![Params::new()],
            Some(spec) => spec.domain.samples(range).into_iter().map(|v| int_param(spec.name, v)).collect(),
        }
    }

    /// Parameters used when none are given: 0 if admissible, otherwise the
    /// first default sample.
    pub fn default_params(&self) -> Params {
        match self.param {
            None => Params::new(),
            Some(spec) if spec.domain.admits(&BigRational::zero()) => int_param(spec.name, 0),
            Some(_) => self.sample_params((-2, 2)).into_iter().next().expect("nonempty samples"),
        }
    }

    pub fn instantiate(&self, params: &Params, field: FieldSpec) -> Result<AlgebraTable, CatalogError> {
        if let Some(required) = self.characteristic {
            if field.characteristic() != required {
                return Err(CatalogError::WrongCharacteristic { id: self.id.to_string(), required, found: field });
            }
        }
        self.instantiate_any_field(params, field)
    }

    /// Like [`CatalogEntry::instantiate`] but ignores the characteristic
    /// requirement.
    pub fn instantiate_any_field(&self, params: &Params, field: FieldSpec) -> Result<AlgebraTable, CatalogError> {
        let value = self.check_params(params)?;
        let name = match (&self.param, &value) {
            (Some(spec), Some(v)) => format!("{}({}={})", self.id, spec.name, v),
            _ => self.id.to_string(),
        };
        match self.shape {
            Shape::Fixed { basis, products } => {
                let names: Vec<String> = basis.iter().map(|s| s.to_string()).collect();
                let idx = |n: &str| basis.iter().position(|b| *b == n).expect("catalog names are consistent");
                let mut built = Vec::with_capacity(products.len());
                for p in products {
                    let mut v = Vector::zeros(field, basis.len());
                    for t in p.terms {
                        let c = field.from_rational(&t.coef.eval(value.as_ref()))?;
                        v.set(idx(t.basis), &v.get(idx(t.basis)).clone() + &c);
                    }
                    built.push(((idx(p.left), idx(p.right)), v));
                }
                Ok(AlgebraTable::from_products(name, field, names, built)?)
            }
            Shape::Towers => {
                let n = value.and_then(|v| v.to_integer().to_usize()).expect("checked natural");
                Ok(towers(n, field).with_name(name))
            }
        }
    }

    fn check_params(&self, params: &Params) -> Result<Option<BigRational>, CatalogError> {
        if let Some(extra) = params.keys().find(|k| self.param.is_none_or(|s| s.name != k.as_str())) {
            return Err(CatalogError::UnexpectedParam { id: self.id.to_string(), param: extra.clone() });
        }
        let Some(spec) = self.param else {
            return Ok(None);
        };
        let v = params
            .get(spec.name)
            .ok_or_else(|| CatalogError::MissingParam { id: self.id.to_string(), param: spec.name.to_string() })?;
        if !spec.domain.admits(v) {
            return Err(CatalogError::OutOfDomain {
                id: self.id.to_string(),
                param: spec.name.to_string(),
                value: v.to_string(),
            });
        }
        Ok(Some(v.clone()))
    }

    /// Human-readable product list, e.g. `[y,x] = (1+alpha)/(1-alpha) w`.
    pub fn render_products(&self) -> Vec<String> {
        let param = self.param.map_or("", |p| p.name);
        match self.shape {
            Shape::Fixed { products, .. } => products
                .iter()
                .map(|p| {
                    let rhs: Vec<String> = p
                        .terms
                        .iter()
                        .map(|t| match t.coef {
                            Coef::Int(1) => t.basis.to_string(),
                            Coef::Int(-1) => format!("-{}", t.basis),
                            c => format!("{} {}", c.render(param), t.basis),
                        })
                        .collect();
                    format!("[{},{}] = {}", p.left, p.right, rhs.join(" + "))
                })
                .collect(),
            Shape::Towers => vec!["[x_i,x_n] = x_i for 1 <= i < n".to_string()],
        }
    }
}

fn towers(n: usize, field: FieldSpec) -> AlgebraTable {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let products = (0..n - 1).map(|i| ((i, n - 1), Vector::unit(field, n, i)));
    AlgebraTable::from_products("towers_n", field, names, products).expect("well-formed family")
}

/// Parses `name=value` pairs, with values like `2`, `-1/3`.
pub fn parse_params(pairs: &[String]) -> Result<Params, CatalogError> {
    let mut out = Params::new();
    for p in pairs {
        let (k, v) = p.split_once('=').ok_or_else(|| LinalgError::Parse(p.clone()))?;
        let q = crate::exactlin::parse_rational(v.trim())?;
        out.insert(k.trim().to_string(), q);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::is_right_leibniz;

    #[test]
    fn ids_in_order() {
        let ids = list();
        assert_eq!(ids.len(), 42);
        assert_eq!(&ids[..3], &["lnotr", "Lprime", "gamma1"]);
        assert!(ids.contains(&"N7"));
        assert_eq!(ids.last(), Some(&"lie7_char3"));
        let mut dedup = ids.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), ids.len());
    }

    #[test]
    fn lookups() {
        assert_eq!(get("gamma1").unwrap().dim(), Some(2));
        assert!(matches!(get("nope"), Err(CatalogError::UnknownId(_))));
        assert!(expected("R1").unwrap().dextral.value);
        assert_eq!(expected("S2").unwrap().left_nilpotent.value, None);
        assert!(!expected("L2").unwrap().dextral.value);
    }

    #[test]
    fn n20_coefficient() {
        let a = instantiate("N20", &int_param("alpha", 0), FieldSpec::Rational).unwrap();
        let yx = a.multiply(&a.element("y").unwrap(), &a.element("x").unwrap()).unwrap();
        assert_eq!(a.render(&yx), "w");
        let a = instantiate("N20", &int_param("alpha", 2), FieldSpec::Rational).unwrap();
        let yx = a.multiply(&a.element("y").unwrap(), &a.element("x").unwrap()).unwrap();
        assert_eq!(a.render(&yx), "-3w");
        assert!(matches!(
            instantiate("N20", &int_param("alpha", 1), FieldSpec::Rational),
            Err(CatalogError::OutOfDomain { .. })
        ));
    }

    #[test]
    fn parameter_errors() {
        let q = FieldSpec::Rational;
        assert!(matches!(instantiate("N20", &Params::new(), q), Err(CatalogError::MissingParam { .. })));
        assert!(matches!(instantiate("N1", &int_param("alpha", 0), q), Err(CatalogError::UnexpectedParam { .. })));
        assert!(matches!(instantiate("N4", &int_param("alpha", 2), q), Err(CatalogError::OutOfDomain { .. })));
        assert!(matches!(instantiate("towers_n", &int_param("n", 1), q), Err(CatalogError::OutOfDomain { .. })));
        assert!(matches!(
            instantiate("lie7_char3", &Params::new(), q),
            Err(CatalogError::WrongCharacteristic { required: 3, .. })
        ));
    }

    #[test]
    fn towers_five() {
        let a = instantiate("towers_n", &int_param("n", 5), FieldSpec::Rational).unwrap();
        assert_eq!(a.dim(), 5);
        assert_eq!(a.nonzero_products().count(), 4);
        let p = a.multiply(&a.element("x2").unwrap(), &a.element("x5").unwrap()).unwrap();
        assert_eq!(a.render(&p), "x2");
    }

    #[test]
    fn printed_l1_sign_is_not_leibniz() {
        let entry = get("L1").unwrap();
        let a = entry.instantiate(&int_param("lambda", 1), FieldSpec::Rational).unwrap();
        assert!(is_right_leibniz(&a).holds());
        let x = a.element("x").unwrap();
        let w = a.element("w").unwrap();
        let mut sc: Vec<Vec<Vector>> = (0..4)
            .map(|i| (0..4).map(|j| a.structure_constant(i, j).clone()).collect())
            .collect();
        sc[0][3] = a.multiply(&x, &w).unwrap().scale(&FieldSpec::Rational.from_i64(-1));
        let printed = AlgebraTable::new("L1 printed", FieldSpec::Rational, a.basis_names().to_vec(), sc).unwrap();
        assert!(!is_right_leibniz(&printed).holds());
    }

    #[test]
    fn default_params_are_admissible() {
        for e in entries() {
            let p = e.default_params();
            assert!(e.instantiate(&p, e.default_field()).is_ok(), "{}", e.id);
        }
        assert_eq!(get("N20").unwrap().sample_params((-2, 2)).len(), 4);
        assert_eq!(get("N4").unwrap().sample_params((-5, 5)).len(), 2);
        assert_eq!(get("towers_n").unwrap().sample_params((0, 0)).len(), 9);
    }

    #[test]
    fn rendering() {
        let r = get("N20").unwrap().render_products();
        assert_eq!(r[1], "[y,x] = (1+alpha)/(1-alpha) w");
        assert_eq!(get("N8").unwrap().render_products()[3], "[x,y] = -z + w");
    }

    #[test]
    fn parse_param_pairs() {
        let p = parse_params(&["alpha=-1/2".to_string()]).unwrap();
        assert_eq!(p["alpha"].to_string(), "-1/2");
        assert!(parse_params(&["alpha".to_string()]).is_err());
    }
}
