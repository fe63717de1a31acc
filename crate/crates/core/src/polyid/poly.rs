//! Sparse polynomials in `a, b, c` over ℤ[√3], plus their canonical text
//! form: one term per line, `i j k rational_part sqrt3_part`, terms in
//! decreasing graded-lexicographic order of `(i, j, k)`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::ring::{SqrtThreeInteger, SqrtThreeRational};

/// Exponents of `aⁱ bʲ cᵏ`, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    fn times(self, other: Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| {
            self.0[i].checked_add(other.0[i]).expect("exponent overflow")
        }))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, SqrtThreeInteger>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: SqrtThreeInteger) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(SqrtThreeInteger::int(n))
    }

    pub fn monomial(m: Monomial, c: SqrtThreeInteger) -> Self {
        let mut p = Self::zero();
        p.add_term(m, &c);
        p
    }

    /// The variable with index 0 (`a`), 1 (`b`) or 2 (`c`).
    pub fn var(index: usize) -> Self {
        let mut e = [0; 3];
        e[index] = 1;
        Self::monomial(Monomial(e), SqrtThreeInteger::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: Monomial) -> SqrtThreeInteger {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Terms in decreasing graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &SqrtThreeInteger)> {
        self.terms.iter().rev()
    }

    pub fn add_term(&mut self, m: Monomial, c: &SqrtThreeInteger) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// True iff every stored term has total degree `d`.
    pub fn is_homogeneous(&self, d: u64) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn scale(&self, k: &SqrtThreeInteger) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, &(c * k));
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::int(1), |acc, _| &acc * self)
    }

    pub fn evaluate_f64(&self, vars: [f64; 3]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let mono: f64 = (0..3).map(|i| vars[i].powi(m.0[i] as i32)).product();
                c.to_f64() * mono
            })
            .sum()
    }

    /// Exact value at a rational point, as an element of ℚ(√3).
    pub fn evaluate_exact(&self, vars: &[BigRational; 3]) -> SqrtThreeRational {
        let mut acc = SqrtThreeRational::zero();
        for (m, c) in &self.terms {
            let mut mono = BigRational::one();
            for i in 0..3 {
                for _ in 0..m.0[i] {
                    mono *= &vars[i];
                }
            }
            acc.add_assign(&SqrtThreeRational::from_integer(c).scale(&mono));
        }
        acc
    }

    /// Canonical text form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (m, c) in self.terms() {
            let [i, j, k] = m.0;
            // infallible for String
            let _ = writeln!(out, "{i} {j} {k} {} {}", c.rational_part, c.sqrt3_part);
        }
        out
    }

    /// Strict inverse of [`MultiPoly::to_text`]: any input that parses
    /// serializes back to the identical bytes.
    pub fn from_text(text: &str) -> Result<Self, PolyParseError> {
        let mut terms = BTreeMap::new();
        let mut prev: Option<Monomial> = None;
        if text.is_empty() {
            return Ok(Self::zero());
        }
        if !text.ends_with('\n') {
            return Err(PolyParseError::new(text.lines().count(), PolyParseErrorKind::MissingNewline));
        }
        for (idx, line) in text[..text.len() - 1].split('\n').enumerate() {
            let lineno = idx + 1;
            let err = |kind| PolyParseError::new(lineno, kind);
            let fields: Vec<&str> = line.split(' ').collect();
            if fields.len() != 5 {
                return Err(err(PolyParseErrorKind::FieldCount(fields.len())));
            }
            let mut exps = [0u32; 3];
            for (slot, f) in exps.iter_mut().zip(&fields[..3]) {
                *slot = parse_exponent(f).ok_or_else(|| err(PolyParseErrorKind::BadExponent(f.to_string())))?;
            }
            let r = parse_integer(fields[3]).ok_or_else(|| err(PolyParseErrorKind::BadInteger(fields[3].to_string())))?;
            let s = parse_integer(fields[4]).ok_or_else(|| err(PolyParseErrorKind::BadInteger(fields[4].to_string())))?;
            let coeff = SqrtThreeInteger::new(r, s);
            if coeff.is_zero() {
                return Err(err(PolyParseErrorKind::ZeroCoefficient));
            }
            let m = Monomial(exps);
            if let Some(p) = prev {
                if m >= p {
                    return Err(err(PolyParseErrorKind::OutOfOrder));
                }
            }
            prev = Some(m);
            terms.insert(m, coeff);
        }
        Ok(Self { terms })
    }

    /// First monomial (in decreasing graded-lex order) whose coefficients
    /// differ, with both coefficients.
    pub fn first_difference(&self, other: &Self) -> Option<(Monomial, SqrtThreeInteger, SqrtThreeInteger)> {
        let mut keys: Vec<Monomial> = self.terms.keys().chain(other.terms.keys()).copied().collect();
        keys.sort_unstable_by(|a, b| b.cmp(a));
        keys.dedup();
        keys.into_iter().find_map(|m| {
            let (x, y) = (self.coefficient(m), other.coefficient(m));
            (x != y).then_some((m, x, y))
        })
    }
}

fn parse_exponent(s: &str) -> Option<u32> {
    let canonical = s == "0" || (!s.is_empty() && !s.starts_with('0') && s.bytes().all(|b| b.is_ascii_digit()));
    if canonical {
        s.parse().ok()
    } else {
        None
    }
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    let canonical = s == "0"
        || (!digits.is_empty() && !digits.starts_with('0') && digits.bytes().all(|b| b.is_ascii_digit()));
    if canonical {
        s.parse().ok()
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct PolyParseError {
    pub line: usize,
    pub kind: PolyParseErrorKind,
}

impl PolyParseError {
    fn new(line: usize, kind: PolyParseErrorKind) -> Self {
        Self { line, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyParseErrorKind {
    #[error("expected 5 space-separated fields, found {0}")]
    FieldCount(usize),
    #[error("invalid exponent {0:?}")]
    BadExponent(String),
    #[error("invalid integer {0:?}")]
    BadInteger(String),
    #[error("zero coefficient")]
    ZeroCoefficient,
    #[error("terms not in strictly decreasing graded-lex order")]
    OutOfOrder,
    #[error("missing final newline")]
    MissingNewline,
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(*m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&SqrtThreeInteger::int(-1))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
