use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// An element of the rational function field `Q(q)`.
///
/// Stored as `num / den` with `num, den` in `Z[q]`, coprime in `Z[q]` (integer
/// content included) and `den` carrying a positive leading coefficient. Zero is
/// `0 / 1`. Two values are equal as field elements iff their components agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRational {
    num: IntPoly,
    den: IntPoly,
}

impl QRational {
    pub fn zero() -> Self {
        QRational { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn q() -> Self {
        Self::from_poly(IntPoly::q())
    }

    /// `q - q^-1`.
    pub fn nu() -> Self {
        &Self::q() - &Self::q_pow(-1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(IntPoly::constant(c))
    }

    pub fn from_poly(num: IntPoly) -> Self {
        QRational { num, den: IntPoly::one() }
    }

    pub fn from_rational(x: &BigRational) -> Self {
        Self::from_parts(IntPoly::constant(x.numer().clone()), IntPoly::constant(x.denom().clone()))
            .expect("BigRational has nonzero denominator")
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(IntPoly::monomial(1, k as usize))
        } else {
            QRational { num: IntPoly::one(), den: IntPoly::monomial(1, (-k) as usize) }
        }
    }

    /// Builds `num / den` in canonical form.
    pub fn from_parts(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return QRational { num, den };
        }
        let g = IntPoly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if den.leading().is_some_and(|c| c.is_negative()) {
            num = -num;
            den = -den;
        }
        QRational { num, den }
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The rational constant this element equals, if it does not depend on `q`.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.num.is_constant() && self.den.is_constant() {
            let n = self.num.coeffs().first().cloned().unwrap_or_default();
            let d = self.den.coeffs()[0].clone();
            Some(BigRational::new(n, d))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().is_some_and(|c| c.is_negative()) {
            num = -num;
            den = -den;
        }
        Ok(QRational { num, den })
    }

    pub fn checked_div(&self, rhs: &QRational) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Exact value at `q = x`.
    pub fn eval(&self, x: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Pole { point: x.to_string(), denominator: self.den.to_string() });
        }
        Ok(self.num.eval(x) / d)
    }

    /// The image under the field automorphism `q -> q^-1`.
    pub fn substitute_inverse(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        // num(1/q) = rev(num) / q^deg(num), likewise for den.
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let num = self.num.reversed().shift_up(dd);
        let den = self.den.reversed().shift_up(dn);
        Self::normalize(num, den)
    }

    /// The image under the field automorphism `q -> -q`.
    pub fn substitute_negated(&self) -> Self {
        Self::normalize(self.num.negate_variable(), self.den.negate_variable())
    }

    /// Square root in `Q(q)`, when one exists.
    pub fn sqrt(&self) -> Option<Self> {
        // Coprime canonical parts force both to be squares up to a shared sign,
        // and the denominator has a positive leading coefficient.
        let n = self.num.sqrt()?;
        let d = self.den.sqrt()?;
        Some(Self::normalize(n, d))
    }
}

impl Default for QRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add<&QRational> for &QRational {
    type Output = QRational;
    fn add(self, rhs: &QRational) -> QRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRational::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return QRational::normalize(&self.num + &rhs.num, self.den.clone());
        }
        let g = IntPoly::gcd(&self.den, &rhs.den);
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = rhs.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        let den = &self.den * &b;
        QRational::normalize(num, den)
    }
}

impl Sub<&QRational> for &QRational {
    type Output = QRational;
    fn sub(self, rhs: &QRational) -> QRational {
        self + &(-rhs)
    }
}

impl Mul<&QRational> for &QRational {
    type Output = QRational;
    fn mul(self, rhs: &QRational) -> QRational {
        if self.is_zero() || rhs.is_zero() {
            return QRational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QRational::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel; inputs are reduced so the product is too.
        let g1 = IntPoly::gcd(&self.num, &rhs.den);
        let g2 = IntPoly::gcd(&rhs.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = rhs.den.div_exact(&g1).expect("gcd divides");
        let n2 = rhs.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let mut num = &n1 * &n2;
        let mut den = &d1 * &d2;
        if den.leading().is_some_and(|c| c.is_negative()) {
            num = -num;
            den = -den;
        }
        QRational { num, den }
    }
}

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational { num: -self.num, den: self.den }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QRational> for QRational {
            type Output = QRational;
            fn $m(self, rhs: QRational) -> QRational {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QRational> for QRational {
            type Output = QRational;
            fn $m(self, rhs: &QRational) -> QRational {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn is_single_factor(p: &IntPoly) -> bool {
    // A bare positive integer or a bare power of q.
    match p.term_count() {
        1 => {
            let v = p.valuation().unwrap();
            let c = &p.coeffs()[v];
            c.is_positive() && (v == 0 || c.is_one())
        }
        _ => false,
    }
}

impl fmt::Display for QRational {
    /// Emits the coefficient grammar, e.g. `(q^2-1)/q` or `-1/q^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() == 1 {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if is_single_factor(&self.den) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

impl fmt::Debug for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRational({self})")
    }
}

impl FromStr for QRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse(s)
    }
}

impl Serialize for QRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for QRational {
    fn from(c: i64) -> Self {
        QRational::from_int(c)
    }
}

impl One for QRational {
    fn one() -> Self {
        QRational::one()
    }
}

impl Zero for QRational {
    fn zero() -> Self {
        QRational::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}
