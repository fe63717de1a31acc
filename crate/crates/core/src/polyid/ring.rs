use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Exact element `rational_part + sqrt3_part·√3` of ℤ[√3].
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SqrtThreeInteger {
    pub rational_part: BigInt,
    pub sqrt3_part: BigInt,
}

impl SqrtThreeInteger {
    pub fn new(rational_part: impl Into<BigInt>, sqrt3_part: impl Into<BigInt>) -> Self {
        Self {
            rational_part: rational_part.into(),
            sqrt3_part: sqrt3_part.into(),
        }
    }

    pub fn int(n: impl Into<BigInt>) -> Self {
        Self::new(n, 0)
    }

    pub fn sqrt3() -> Self {
        Self::new(0, 1)
    }

    /// Field norm `x² − 3y²`; zero only for zero.
    pub fn norm(&self) -> BigInt {
        &self.rational_part * &self.rational_part - 3 * &self.sqrt3_part * &self.sqrt3_part
    }

    pub fn conjugate(&self) -> Self {
        Self {
            rational_part: self.rational_part.clone(),
            sqrt3_part: -&self.sqrt3_part,
        }
    }

    pub fn to_f64(&self) -> f64 {
        let r = self.rational_part.to_f64().unwrap_or(f64::NAN);
        let s = self.sqrt3_part.to_f64().unwrap_or(f64::NAN);
        r + s * SQRT3
    }

    /// Exact sign of `x + y√3`.
    pub fn signum(&self) -> i8 {
        let sx = sign_of(&self.rational_part);
        let sy = sign_of(&self.sqrt3_part);
        if sx == sy || sy == 0 {
            return sx;
        }
        if sx == 0 {
            return sy;
        }
        // opposite signs: compare x² with 3y²
        let x2 = &self.rational_part * &self.rational_part;
        let y2 = 3 * &self.sqrt3_part * &self.sqrt3_part;
        if x2 > y2 {
            sx
        } else {
            sy
        }
    }
}

fn sign_of(n: &BigInt) -> i8 {
    if n.is_positive() {
        1
    } else if n.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Display for SqrtThreeInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt(3)", self.rational_part, self.sqrt3_part)
    }
}

impl Zero for SqrtThreeInteger {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.rational_part.is_zero() && self.sqrt3_part.is_zero()
    }
}

impl One for SqrtThreeInteger {
    fn one() -> Self {
        Self::int(1)
    }
}

impl Add<&SqrtThreeInteger> for &SqrtThreeInteger {
    type Output = SqrtThreeInteger;
    fn add(self, rhs: &SqrtThreeInteger) -> SqrtThreeInteger {
        SqrtThreeInteger {
            rational_part: &self.rational_part + &rhs.rational_part,
            sqrt3_part: &self.sqrt3_part + &rhs.sqrt3_part,
        }
    }
}

impl Sub<&SqrtThreeInteger> for &SqrtThreeInteger {
    type Output = SqrtThreeInteger;
    fn sub(self, rhs: &SqrtThreeInteger) -> SqrtThreeInteger {
        SqrtThreeInteger {
            rational_part: &self.rational_part - &rhs.rational_part,
            sqrt3_part: &self.sqrt3_part - &rhs.sqrt3_part,
        }
    }
}

impl Mul<&SqrtThreeInteger> for &SqrtThreeInteger {
    type Output = SqrtThreeInteger;
    /// `(x + y√3)(u + v√3) = (xu + 3yv) + (xv + yu)√3`
    fn mul(self, rhs: &SqrtThreeInteger) -> SqrtThreeInteger {
        let (x, y) = (&self.rational_part, &self.sqrt3_part);
        let (u, v) = (&rhs.rational_part, &rhs.sqrt3_part);
        SqrtThreeInteger {
            rational_part: x * u + 3 * (y * v),
            sqrt3_part: x * v + y * u,
        }
    }
}

impl Neg for &SqrtThreeInteger {
    type Output = SqrtThreeInteger;
    fn neg(self) -> SqrtThreeInteger {
        SqrtThreeInteger {
            rational_part: -&self.rational_part,
            sqrt3_part: -&self.sqrt3_part,
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for SqrtThreeInteger {
            type Output = SqrtThreeInteger;
            fn $m(self, rhs: SqrtThreeInteger) -> SqrtThreeInteger {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for SqrtThreeInteger {
    type Output = SqrtThreeInteger;
    fn neg(self) -> SqrtThreeInteger {
        -&self
    }
}

impl AddAssign<&SqrtThreeInteger> for SqrtThreeInteger {
    fn add_assign(&mut self, rhs: &SqrtThreeInteger) {
        self.rational_part += &rhs.rational_part;
        self.sqrt3_part += &rhs.sqrt3_part;
    }
}

impl SubAssign<&SqrtThreeInteger> for SqrtThreeInteger {
    fn sub_assign(&mut self, rhs: &SqrtThreeInteger) {
        self.rational_part -= &rhs.rational_part;
        self.sqrt3_part -= &rhs.sqrt3_part;
    }
}

/// Element `p + q√3` of ℚ(√3), used for exact evaluation at rational points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtThreeRational {
    pub rational_part: BigRational,
    pub sqrt3_part: BigRational,
}

impl SqrtThreeRational {
    pub fn zero() -> Self {
        Self {
            rational_part: BigRational::zero(),
            sqrt3_part: BigRational::zero(),
        }
    }

    pub fn from_integer(x: &SqrtThreeInteger) -> Self {
        Self {
            rational_part: BigRational::from_integer(x.rational_part.clone()),
            sqrt3_part: BigRational::from_integer(x.sqrt3_part.clone()),
        }
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self {
            rational_part: &self.rational_part * k,
            sqrt3_part: &self.sqrt3_part * k,
        }
    }

    pub fn add_assign(&mut self, rhs: &Self) {
        self.rational_part += &rhs.rational_part;
        self.sqrt3_part += &rhs.sqrt3_part;
    }

    pub fn to_f64(&self) -> f64 {
        let p = self.rational_part.to_f64().unwrap_or(f64::NAN);
        let q = self.sqrt3_part.to_f64().unwrap_or(f64::NAN);
        p + q * SQRT3
    }
}
