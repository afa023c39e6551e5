use std::fmt;

use super::{Field, FieldError};

/// Univariate polynomial over a [`Field`], coefficients in increasing
/// degree, trimmed so that the leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<F: Field> {
    coeffs: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?}", self.coeffs)
    }
}

impl<F: Field> Poly<F> {
    pub fn new(field: &F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(field: &F, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// The monomial `x`.
    pub fn x(field: &F) -> Self {
        Poly { coeffs: vec![field.zero(), field.one()] }
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn coeff(&self, field: &F, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn eval(&self, field: &F, x: &F::Elem) -> F::Elem {
        self.coeffs
            .iter()
            .rev()
            .fold(field.zero(), |acc, c| field.add(&field.mul(&acc, x), c))
    }

    pub fn add(&self, field: &F, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|i| field.add(&self.coeff(field, i), &o.coeff(field, i)))
            .collect();
        Self::new(field, c)
    }

    pub fn neg(&self, field: &F) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| field.neg(c)).collect() }
    }

    pub fn sub(&self, field: &F, o: &Self) -> Self {
        self.add(field, &o.neg(field))
    }

    pub fn scale(&self, field: &F, s: &F::Elem) -> Self {
        Self::new(field, self.coeffs.iter().map(|c| field.mul(c, s)).collect())
    }

    pub fn mul(&self, field: &F, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![field.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] = field.add(&c[i + j], &field.mul(a, b));
            }
        }
        Self::new(field, c)
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, field: &F, d: &Self) -> Result<(Self, Self), FieldError> {
        let dl = d.leading().ok_or(FieldError::DivisionByZero)?;
        let dinv = field.inv(dl).ok_or(FieldError::DivisionByZero)?;
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![field.zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = field.mul(&r[i], &dinv);
            if field.is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let k = i - dd + j;
                r[k] = field.sub(&r[k], &field.mul(&c, dc));
            }
            q[i - dd] = c;
        }
        r.truncate(dd);
        Ok((Self::new(field, q), Self::new(field, r)))
    }

    pub fn rem(&self, field: &F, d: &Self) -> Result<Self, FieldError> {
        Ok(self.div_rem(field, d)?.1)
    }

    pub fn monic(&self, field: &F) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let li = field.inv(l).expect("nonzero leading coefficient");
                self.scale(field, &li)
            }
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, field: &F, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(field, &b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic(field)
    }

    pub fn derivative(&self, field: &F) -> Self {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| field.mul(&field.from_i64(i as i64), c))
            .collect();
        Self::new(field, c)
    }

    /// True iff `gcd(f, f') = 1` (separable, hence squarefree).
    pub fn is_squarefree(&self, field: &F) -> bool {
        if self.degree().unwrap_or(0) == 0 {
            return !self.is_zero();
        }
        let g = self.gcd(field, &self.derivative(field));
        g.degree() == Some(0)
    }

    pub fn format(&self, field: &F) -> Vec<String> {
        self.coeffs.iter().map(|c| field.format_elem(c)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FiniteField, Rationals};

    #[test]
    fn division_roundtrip_over_q() {
        let q = Rationals;
        let a = Poly::from_i64(&q, &[1, 2, 3, 4, 5]);
        let d = Poly::from_i64(&q, &[1, 0, 2]);
        let (quo, rem) = a.div_rem(&q, &d).unwrap();
        assert_eq!(quo.mul(&q, &d).add(&q, &rem), a);
        assert!(rem.degree().unwrap() < 2);
    }

    #[test]
    fn squarefree_detection_over_f3() {
        let f3 = FiniteField::prime(3).unwrap();
        let sq = Poly::from_i64(&f3, &[1, 2, 1]); // (x+1)^2
        assert!(!sq.is_squarefree(&f3));
        let ok = Poly::from_i64(&f3, &[0, 2, 0, 1]); // x^3 - x
        assert!(ok.is_squarefree(&f3));
    }
}
