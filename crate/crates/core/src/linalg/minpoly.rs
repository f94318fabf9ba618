use std::fmt;

use super::elimination::kernel_columns;
use super::matrix::FieldMatrix;
use crate::error::{Error, Result};
use crate::qfield::QRational;

/// A polynomial in `x` with coefficients in `Q(q)`; `coeffs[k]` multiplies `x^k`.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldPoly {
    coeffs: Vec<QRational>,
}

impl FieldPoly {
    pub fn new(mut coeffs: Vec<QRational>) -> Self {
        while coeffs.last().is_some_and(QRational::is_zero) {
            coeffs.pop();
        }
        FieldPoly { coeffs }
    }

    /// `(x - r_1)(x - r_2)...`
    pub fn from_roots(roots: &[QRational]) -> Self {
        let mut p = FieldPoly::new(vec![QRational::one()]);
        for r in roots {
            p = p.mul(&FieldPoly::new(vec![-r, QRational::one()]));
        }
        p
    }

    pub fn coeffs(&self) -> &[QRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn mul(&self, rhs: &FieldPoly) -> FieldPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return FieldPoly::new(Vec::new());
        }
        let mut out = vec![QRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        FieldPoly::new(out)
    }

    pub fn eval(&self, x: &QRational) -> QRational {
        self.coeffs.iter().rev().fold(QRational::zero(), |acc, c| &(&acc * x) + c)
    }

    /// `p(M)` for a square matrix, by Horner's scheme.
    pub fn eval_matrix(&self, m: &FieldMatrix) -> Result<FieldMatrix> {
        if !m.is_square() {
            return Err(Error::Shape("polynomial of a non-square matrix".into()));
        }
        let n = m.rows();
        let mut acc = FieldMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &FieldMatrix::scalar(n, c);
        }
        Ok(acc)
    }

    /// Roots in `Q(q)` of a polynomial of degree at most two, with multiplicity.
    ///
    /// `None` when the degree exceeds two or the discriminant is not a square.
    pub fn small_roots(&self) -> Option<Vec<QRational>> {
        match self.degree()? {
            0 => Some(Vec::new()),
            1 => Some(vec![-(self.coeffs[0].checked_div(&self.coeffs[1]).ok()?)]),
            2 => {
                let a = &self.coeffs[2];
                let b = self.coeffs[1].checked_div(a).ok()?;
                let c = self.coeffs[0].checked_div(a).ok()?;
                let disc = &(&b * &b) - &(&QRational::from_int(4) * &c);
                let s = disc.sqrt()?;
                let half = QRational::from_int(2).inv().ok()?;
                let r1 = &(&(-&b) + &s) * &half;
                let r2 = &(&(-&b) - &s) * &half;
                let mut roots = vec![r1, r2];
                roots.sort_by_key(|r| r.to_string());
                Some(roots)
            }
            _ => None,
        }
    }
}

impl fmt::Display for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            if k > 0 && c.is_one() {
                write!(f, "{var}")?;
            } else if k == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldPoly({self})")
    }
}

/// The monic minimal polynomial of a square matrix.
///
/// Searches for the first linear dependence among `I, M, M^2, ...`, each power
/// vectorized, with exact kernel computations. Terminates by Cayley-Hamilton.
pub fn minimal_polynomial(m: &FieldMatrix) -> Result<FieldPoly> {
    if !m.is_square() {
        return Err(Error::Shape(format!("minimal polynomial of a {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    let len = n * n;
    let mut power = FieldMatrix::identity(n);
    let mut krylov = vec![power.vectorize()];
    for k in 1..=n.max(1) {
        power = &power * m;
        krylov.push(power.vectorize());
        let stacked = FieldMatrix::from_sparse_columns(len, krylov.clone());
        let kernel = kernel_columns(&stacked);
        if let Some(v) = kernel.into_iter().find(|v| v.contains_key(&k)) {
            let lead = v[&k].clone();
            let coeffs = (0..=k)
                .map(|i| v.get(&i).cloned().unwrap_or_default().checked_div(&lead))
                .collect::<Result<Vec<_>>>()?;
            return Ok(FieldPoly::new(coeffs));
        }
    }
    unreachable!("Cayley-Hamilton bounds the degree by the dimension")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_swap() {
        let p = minimal_polynomial(&FieldMatrix::identity(3)).unwrap();
        assert_eq!(p, FieldPoly::from_roots(&[QRational::one()]));
        let swap = FieldMatrix::from_entries(
            4,
            4,
            [(0, 0), (2, 1), (1, 2), (3, 3)].map(|(r, c)| (r, c, QRational::one())),
        )
        .unwrap();
        let p = minimal_polynomial(&swap).unwrap();
        assert_eq!(p, FieldPoly::new(vec![QRational::from_int(-1), QRational::zero(), QRational::one()]));
        assert!(p.eval_matrix(&swap).unwrap().is_zero());
    }

    #[test]
    fn quadratic_roots() {
        let q = QRational::q();
        let p = FieldPoly::from_roots(&[q.clone(), -q.inv().unwrap()]);
        let mut roots = p.small_roots().unwrap();
        roots.sort_by_key(|r| r.to_string());
        let mut expect = vec![q.clone(), -q.inv().unwrap()];
        expect.sort_by_key(|r| r.to_string());
        assert_eq!(roots, expect);
        // x^2 - q has no root in Q(q)
        assert!(FieldPoly::new(vec![-q, QRational::zero(), QRational::one()]).small_roots().is_none());
    }
}
