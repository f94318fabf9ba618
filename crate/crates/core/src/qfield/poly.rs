//! Dense univariate polynomials over the integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A polynomial in `q` with arbitrary-precision integer coefficients.
///
/// `coeffs[k]` is the coefficient of `q^k`. There is never a trailing zero, so
/// the zero polynomial is the empty vector and `degree` is `len - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        IntPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Nonnegative gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        debug_assert!(!c.is_zero());
        IntPoly { coeffs: self.coeffs.iter().map(|a| a / c).collect() }
    }

    /// Multiplication by `q^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Division by `q^k`; the low `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        IntPoly { coeffs: self.coeffs.iter().skip(k).cloned().collect() }
    }

    /// The same polynomial with a nonnegative leading coefficient.
    pub fn with_positive_leading(self) -> Self {
        match self.leading() {
            Some(c) if c.is_negative() => -self,
            _ => self,
        }
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        let p = if c.is_one() { self.clone() } else { self.div_scalar_exact(&c) };
        p.with_positive_leading()
    }

    fn is_monomial(&self) -> bool {
        self.term_count() == 1
    }

    /// Exact quotient `self / divisor` in `Z[q]`, or `None` when it does not exist.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if divisor.is_one() {
            return Some(self.clone());
        }
        if dd == 0 {
            let c = &divisor.coeffs[0];
            if self.coeffs.iter().all(|a| (a % c).is_zero()) {
                return Some(self.div_scalar_exact(c));
            }
            return None;
        }
        let ld = divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let sd = self.degree().unwrap();
        if sd < dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=(sd - dd)).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (t, r) = top.div_rem(ld);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    rem[k + i] -= &t * c;
                }
            }
            quot[k] = t;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(IntPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder of `self` by `divisor` (nonzero).
    fn pseudo_rem(&self, divisor: &IntPoly) -> IntPoly {
        let dd = divisor.degree().expect("pseudo_rem by zero");
        let ld = divisor.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            let lhs = r.scale(&ld);
            let rhs = divisor.scale(&lr).shift_up(rd - dd);
            r = &lhs - &rhs;
            let c = r.content();
            if !c.is_zero() && !c.is_one() {
                r = r.div_scalar_exact(&c);
            }
        }
        r
    }

    /// Greatest common divisor in `Z[q]`, normalized to a positive leading coefficient.
    ///
    /// Powers of `q` and integer content are split off first; the primitive
    /// remainder sequence only ever sees polynomials with nonzero constant term.
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        if a.is_zero() {
            return b.clone().with_positive_leading();
        }
        if b.is_zero() {
            return a.clone().with_positive_leading();
        }
        if a == b {
            return a.clone().with_positive_leading();
        }
        let va = a.valuation().unwrap();
        let vb = b.valuation().unwrap();
        let v = va.min(vb);
        let content = a.content().gcd(&b.content());
        if a.is_monomial() || b.is_monomial() {
            return IntPoly::monomial(content, v);
        }
        let pa = a.shift_down(va).primitive_part();
        let pb = b.shift_down(vb).primitive_part();
        let g = primitive_gcd(pa, pb);
        g.scale(&content).shift_up(v)
    }

    /// Value at a rational point (Horner scheme).
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// `q^deg * p(1/q)`: the coefficient sequence reversed.
    pub fn reversed(&self) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly::from_coeffs(coeffs)
    }

    /// `p(-q)`.
    pub fn negate_variable(&self) -> IntPoly {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Square root in `Z[q]` if `self` is a perfect square.
    pub fn sqrt(&self) -> Option<IntPoly> {
        let deg = match self.degree() {
            None => return Some(Self::zero()),
            Some(d) => d,
        };
        if deg % 2 == 1 {
            return None;
        }
        let half = deg / 2;
        let lead = self.leading().unwrap();
        if lead.is_negative() {
            return None;
        }
        let root_lead = lead.sqrt();
        if &(&root_lead * &root_lead) != lead {
            return None;
        }
        // Solve the square top-down: coefficient of q^(deg - k) fixes s[half - k].
        let two_lead = BigRational::from_integer(&root_lead * 2);
        let mut s: Vec<BigRational> = vec![BigRational::zero(); half + 1];
        s[half] = BigRational::from_integer(root_lead);
        for k in 1..=half {
            let target = deg - k;
            let mut acc = BigRational::from_integer(self.coeffs[target].clone());
            for i in (half - k + 1)..=half {
                let j = target as isize - i as isize;
                if j > (half - k) as isize && (j as usize) <= half {
                    acc -= &s[i] * &s[j as usize];
                }
            }
            s[half - k] = acc / &two_lead;
        }
        if s.iter().any(|c| !c.is_integer()) {
            return None;
        }
        let root = IntPoly::from_coeffs(s.into_iter().map(|c| c.to_integer()).collect());
        if &(&root * &root) == self {
            Some(root)
        } else {
            None
        }
    }
}

fn primitive_gcd(mut a: IntPoly, mut b: IntPoly) -> IntPoly {
    loop {
        if a.is_constant() || b.is_constant() {
            return IntPoly::one();
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return b.primitive_part();
        }
        a = b;
        b = r.primitive_part();
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -self.clone()
    }
}

impl fmt::Display for IntPoly {
    /// Highest degree first, e.g. `-q^3+2*q-5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{mag}*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (q-1)(q+1) and (q-1)(q^2+q+1)
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 0, 0, 1]);
        assert_eq!(IntPoly::gcd(&a, &b), p(&[-1, 1]));
        // content participates
        let c = p(&[2, 2]);
        let d = p(&[4, 0, -4]);
        assert_eq!(IntPoly::gcd(&c, &d), p(&[2, 2]));
        // powers of q
        assert_eq!(IntPoly::gcd(&p(&[0, 0, 3]), &p(&[0, 6, 6])), p(&[0, 3]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 2])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[2])), Some(p(&[1, 2])));
    }

    #[test]
    fn square_roots() {
        let s = p(&[1, -2, 3]);
        assert_eq!((&s * &s).sqrt().map(|r| r.with_positive_leading()), Some(s));
        assert_eq!(p(&[1, 0, 2]).sqrt(), None);
        assert_eq!(p(&[0, 0, 4]).sqrt(), Some(p(&[0, 2])));
    }

    #[test]
    fn printing() {
        assert_eq!(p(&[-5, 2, 0, -1]).to_string(), "-q^3+2*q-5");
        assert_eq!(p(&[0, 1]).to_string(), "q");
        assert_eq!(p(&[]).to_string(), "0");
    }
}
