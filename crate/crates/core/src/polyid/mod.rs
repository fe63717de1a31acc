//! Exact verification of the polynomial identities behind the Fermat-point
//! position theorem.
//!
//! In the apex-up frame `A = (0, a)`, `B = (−b, 0)`, `C = (c, 0)` the Fermat
//! point is `(u/d, v/d)`. The inequality `OT² > 4 NT²` reduces to the
//! positivity of a degree-7 polynomial in `a, b, c`; this module expands it
//! over ℤ[√3] and checks it against the claimed factorization and the
//! sum-of-two-squares form of its quartic factor. Everything is exact.

mod poly;
mod ring;

pub use poly::{Monomial, MultiPoly, PolyParseError, PolyParseErrorKind};
pub use ring::{SqrtThreeInteger, SqrtThreeRational};

/// Committed expansion of the degree-7 left-hand side.
pub const GOLDEN_EXPANSION: &str = include_str!("../../golden/fermat_lhs.txt");

fn a() -> MultiPoly {
    MultiPoly::var(0)
}

fn b() -> MultiPoly {
    MultiPoly::var(1)
}

fn c() -> MultiPoly {
    MultiPoly::var(2)
}

fn k(n: i64) -> SqrtThreeInteger {
    SqrtThreeInteger::int(n)
}

fn s3(n: i64) -> SqrtThreeInteger {
    SqrtThreeInteger::new(0, n)
}

/// Sum of `coefficient · product-of-variables` terms.
fn sum(terms: &[(SqrtThreeInteger, &[&MultiPoly])]) -> MultiPoly {
    terms.iter().fold(MultiPoly::zero(), |acc, (coef, factors)| {
        let prod = factors.iter().fold(MultiPoly::int(1), |p, f| &p * *f);
        &acc + &prod.scale(coef)
    })
}

/// Numerators `u`, `v` and denominator `d` of the Fermat point.
pub fn build_uvd() -> (MultiPoly, MultiPoly, MultiPoly) {
    let (a, b, c) = (a(), b(), c());
    // u = (√3 bc − √3 a² − ac − ab)(b − c)
    let u = &sum(&[(s3(1), &[&b, &c]), (s3(-1), &[&a, &a]), (k(-1), &[&a, &c]), (k(-1), &[&a, &b])]) * &(&b - &c);
    // v = (a² + √3 ab + √3 ac + 3bc)(b + c)
    let v = &sum(&[(k(1), &[&a, &a]), (s3(1), &[&a, &b]), (s3(1), &[&a, &c]), (k(3), &[&b, &c])]) * &(&b + &c);
    // d = 2√3(a² + b² + c²) + 6ac + 6ab + 2√3 bc
    let d = sum(&[
        (s3(2), &[&a, &a]),
        (s3(2), &[&b, &b]),
        (s3(2), &[&c, &c]),
        (k(6), &[&a, &c]),
        (k(6), &[&a, &b]),
        (s3(2), &[&b, &c]),
    ]);
    (u, v, d)
}

/// `a d u (c − b) + d v (a² + 3bc) − a b c d² − 3 a u² − 3 a v²`, expanded.
pub fn expand_theorem1_lhs() -> MultiPoly {
    let (u, v, d) = build_uvd();
    let (a, b, c) = (a(), b(), c());
    let c_minus_b = &c - &b;
    let a2_3bc = sum(&[(k(1), &[&a, &a]), (k(3), &[&b, &c])]);
    let d2 = &d * &d;
    sum(&[
        (k(1), &[&a, &d, &u, &c_minus_b]),
        (k(1), &[&d, &v, &a2_3bc]),
        (k(-1), &[&a, &b, &c, &d2]),
        (k(-3), &[&a, &u, &u]),
        (k(-3), &[&a, &v, &v]),
    ])
}

/// `a⁴ + a²b² − 8a²bc + a²c² + 9b²c²`
pub fn quartic_factor() -> MultiPoly {
    let (a, b, c) = (a(), b(), c());
    sum(&[
        (k(1), &[&a, &a, &a, &a]),
        (k(1), &[&a, &a, &b, &b]),
        (k(-8), &[&a, &a, &b, &c]),
        (k(1), &[&a, &a, &c, &c]),
        (k(9), &[&b, &b, &c, &c]),
    ])
}

/// `2 (b + c)(√3a² + √3b² + √3c² + √3bc + 3ab + 3ac)(quartic)`
pub fn build_factored_rhs() -> MultiPoly {
    let (a, b, c) = (a(), b(), c());
    let quadratic = sum(&[
        (s3(1), &[&a, &a]),
        (s3(1), &[&b, &b]),
        (s3(1), &[&c, &c]),
        (s3(1), &[&b, &c]),
        (k(3), &[&a, &b]),
        (k(3), &[&a, &c]),
    ]);
    sum(&[(k(2), &[&(&b + &c), &quadratic, &quartic_factor()])])
}

/// `(a² − 3bc)² + a²(b − c)²`
pub fn sum_of_squares_form() -> MultiPoly {
    let (a, b, c) = (a(), b(), c());
    let first = sum(&[(k(1), &[&a, &a]), (k(-3), &[&b, &c])]);
    let b_minus_c = &b - &c;
    sum(&[(k(1), &[&first, &first]), (k(1), &[&a, &a, &b_minus_c, &b_minus_c])])
}

pub fn sum_of_squares_identity() -> bool {
    quartic_factor() == sum_of_squares_form()
}

/// `OT² − 4 NT²` after clearing the denominator `(2ad)²`:
/// `[2au − ad(c−b)]² + [2av − d(a²−bc)]² − [4au − ad(c−b)]² − [4av − d(a²+bc)]²`.
/// Equals `4a` times [`expand_theorem1_lhs`].
pub fn cleared_distance_difference() -> MultiPoly {
    let (u, v, d) = build_uvd();
    let (a, b, c) = (a(), b(), c());
    let ad_cb = sum(&[(k(1), &[&a, &d, &(&c - &b)])]);
    let d_minus = sum(&[(k(1), &[&d, &a, &a]), (k(-1), &[&d, &b, &c])]);
    let d_plus = sum(&[(k(1), &[&d, &a, &a]), (k(1), &[&d, &b, &c])]);
    let two_au = sum(&[(k(2), &[&a, &u])]);
    let four_au = sum(&[(k(4), &[&a, &u])]);
    let two_av = sum(&[(k(2), &[&a, &v])]);
    let four_av = sum(&[(k(4), &[&a, &v])]);
    let sq = |p: MultiPoly| &p * &p;
    let lhs = &sq(&two_au - &ad_cb) + &sq(&two_av - &d_minus);
    let rhs = &sq(&four_au - &ad_cb) + &sq(&four_av - &d_plus);
    &lhs - &rhs
}

/// Outcome of every exact check, in the order they are run.
#[derive(Debug, Clone, PartialEq)]
pub struct ProofReport {
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub lhs_equals_rhs: bool,
    pub first_difference: Option<(Monomial, SqrtThreeInteger, SqrtThreeInteger)>,
    pub lhs_homogeneous_deg7: bool,
    pub rhs_homogeneous_deg7: bool,
    pub sum_of_squares: bool,
    pub cleared_form_matches: bool,
}

impl ProofReport {
    pub fn holds(&self) -> bool {
        self.lhs_equals_rhs
            && self.lhs_homogeneous_deg7
            && self.rhs_homogeneous_deg7
            && self.sum_of_squares
            && self.cleared_form_matches
    }
}

pub fn prove_theorem1() -> ProofReport {
    let lhs = expand_theorem1_lhs();
    let rhs = build_factored_rhs();
    let four_a_lhs = &a().scale(&k(4)) * &lhs;
    let first_difference = lhs.first_difference(&rhs);
    ProofReport {
        lhs_equals_rhs: first_difference.is_none(),
        first_difference,
        lhs_homogeneous_deg7: lhs.is_homogeneous(7) && !lhs.is_zero(),
        rhs_homogeneous_deg7: rhs.is_homogeneous(7) && !rhs.is_zero(),
        sum_of_squares: sum_of_squares_identity(),
        cleared_form_matches: cleared_distance_difference() == four_a_lhs,
        lhs,
        rhs,
    }
}

/// Line-level comparison of a serialized expansion against a reference,
/// returning the first differing 1-based line and both versions.
pub fn diff_text(actual: &str, expected: &str) -> Option<(usize, String, String)> {
    let mut a = actual.lines();
    let mut e = expected.lines();
    let mut line = 0;
    loop {
        line += 1;
        match (a.next(), e.next()) {
            (None, None) => {
                return (actual != expected).then(|| (line, "<eof>".into(), "<eof>".into()));
            }
            (x, y) if x == y => continue,
            (x, y) => {
                return Some((
                    line,
                    x.unwrap_or("<eof>").to_string(),
                    y.unwrap_or("<eof>").to_string(),
                ))
            }
        }
    }
}
