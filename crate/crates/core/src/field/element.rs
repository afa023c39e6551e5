//! Self-describing field elements for the command line and serialized data.
//!
//! Rationals print as `a/b`; finite-field elements print as their coefficient
//! list over the prime field, `[c0,c1,...]@p^k`.

use std::fmt;
use std::str::FromStr;

use super::{Field, FieldError, FiniteField, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFieldElem {
    pub p: u64,
    pub residue: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtFieldElem {
    pub p: u64,
    pub k: u32,
    /// Exactly `k` residues modulo `p`.
    pub coeffs: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(Rational),
    Prime(PrimeFieldElem),
    Ext(ExtFieldElem),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Neg,
    Inv,
}

impl FromStr for FieldOp {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<Self, FieldError> {
        match s {
            "add" => Ok(FieldOp::Add),
            "mul" => Ok(FieldOp::Mul),
            "neg" => Ok(FieldOp::Neg),
            "inv" => Ok(FieldOp::Inv),
            _ => Err(FieldError::Parse(s.to_string())),
        }
    }
}

impl PrimeFieldElem {
    pub fn new(p: u64, residue: i64) -> Result<Self, FieldError> {
        FiniteField::prime(p)?;
        Ok(PrimeFieldElem { p, residue: residue.rem_euclid(p as i64) as u64 })
    }
}

impl ExtFieldElem {
    pub fn new(p: u64, k: u32, coeffs: &[u64]) -> Result<Self, FieldError> {
        FiniteField::new(p, k)?;
        if coeffs.len() > k as usize {
            return Err(FieldError::Parse(format!("{} coefficients for degree {k}", coeffs.len())));
        }
        let mut c: Vec<u64> = coeffs.iter().map(|&x| x % p).collect();
        c.resize(k as usize, 0);
        Ok(ExtFieldElem { p, k, coeffs: c })
    }

    pub fn field(&self) -> FiniteField {
        FiniteField::new(self.p, self.k).expect("validated on construction")
    }

    fn index(&self) -> u32 {
        self.field().from_digits(&self.coeffs)
    }

    fn from_index(f: &FiniteField, a: u32) -> Self {
        ExtFieldElem { p: f.p(), k: f.degree(), coeffs: f.digits(a) }
    }

    /// `x^p`.
    pub fn frobenius(&self) -> Self {
        let f = self.field();
        Self::from_index(&f, f.frobenius(self.index()))
    }
}

impl FieldElement {
    fn field_name(&self) -> String {
        match self {
            FieldElement::Rational(_) => "Q".into(),
            FieldElement::Prime(e) => format!("F_{}", e.p),
            FieldElement::Ext(e) => format!("F_{}^{}", e.p, e.k),
        }
    }

    fn finite_parts(&self) -> Option<(FiniteField, u32)> {
        match self {
            FieldElement::Rational(_) => None,
            FieldElement::Prime(e) => Some((FiniteField::prime(e.p).ok()?, e.residue as u32)),
            FieldElement::Ext(e) => Some((e.field(), e.index())),
        }
    }

    fn rewrap(like: &FieldElement, f: &FiniteField, a: u32) -> FieldElement {
        match like {
            FieldElement::Prime(e) => FieldElement::Prime(PrimeFieldElem { p: e.p, residue: a as u64 }),
            _ => FieldElement::Ext(ExtFieldElem::from_index(f, a)),
        }
    }

    pub fn binary(&self, other: &FieldElement, op: FieldOp) -> Result<FieldElement, FieldError> {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => Ok(FieldElement::Rational(match op {
                FieldOp::Add => a.add(b),
                FieldOp::Mul => a.mul(b),
                FieldOp::Neg | FieldOp::Inv => return self.unary(op),
            })),
            _ => {
                let same = match (self, other) {
                    (FieldElement::Prime(a), FieldElement::Prime(b)) => a.p == b.p,
                    (FieldElement::Ext(a), FieldElement::Ext(b)) => a.p == b.p && a.k == b.k,
                    _ => false,
                };
                if !same {
                    return Err(FieldError::FieldMismatch(self.field_name(), other.field_name()));
                }
                let (f, a) = self.finite_parts().unwrap();
                let (_, b) = other.finite_parts().unwrap();
                let r = match op {
                    FieldOp::Add => f.add(&a, &b),
                    FieldOp::Mul => f.mul(&a, &b),
                    FieldOp::Neg | FieldOp::Inv => return self.unary(op),
                };
                Ok(Self::rewrap(self, &f, r))
            }
        }
    }

    pub fn unary(&self, op: FieldOp) -> Result<FieldElement, FieldError> {
        match self {
            FieldElement::Rational(a) => Ok(FieldElement::Rational(match op {
                FieldOp::Neg => a.neg(),
                FieldOp::Inv => a.inv()?,
                _ => return Err(FieldError::Parse(format!("{op:?} is binary"))),
            })),
            _ => {
                let (f, a) = self.finite_parts().unwrap();
                let r = match op {
                    FieldOp::Neg => f.neg(&a),
                    FieldOp::Inv => f.inv(&a).ok_or(FieldError::DivisionByZero)?,
                    _ => return Err(FieldError::Parse(format!("{op:?} is binary"))),
                };
                Ok(Self::rewrap(self, &f, r))
            }
        }
    }
}

/// One arithmetic step on self-describing elements. `b` is ignored by the
/// unary operations `neg` and `inv`.
pub fn field_arith(a: &FieldElement, b: &FieldElement, op: FieldOp) -> Result<FieldElement, FieldError> {
    match op {
        FieldOp::Add | FieldOp::Mul => a.binary(b, op),
        FieldOp::Neg | FieldOp::Inv => a.unary(op),
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => {
                write!(f, "{}/{}", r.numer(), r.denom())
            }
            FieldElement::Prime(e) => write!(f, "[{}]@{}^1", e.residue, e.p),
            FieldElement::Ext(e) => {
                let c: Vec<String> = e.coeffs.iter().map(|x| x.to_string()).collect();
                write!(f, "[{}]@{}^{}", c.join(","), e.p, e.k)
            }
        }
    }
}

impl FromStr for FieldElement {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, FieldError> {
        let s = s.trim();
        let bad = || FieldError::Parse(s.to_string());
        if let Some((list, field)) = s.split_once('@') {
            let (p, k) = field.split_once('^').ok_or_else(bad)?;
            let p: u64 = p.trim().parse().map_err(|_| bad())?;
            let k: u32 = k.trim().parse().map_err(|_| bad())?;
            let inner = list
                .trim()
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(bad)?;
            let coeffs: Vec<u64> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|c| c.trim().parse::<u64>().map_err(|_| bad()))
                    .collect::<Result<_, _>>()?
            };
            if coeffs.len() > k as usize || coeffs.iter().any(|&c| c >= p) {
                return Err(bad());
            }
            if k == 1 {
                let e = PrimeFieldElem::new(p, coeffs.first().copied().unwrap_or(0) as i64)?;
                Ok(FieldElement::Prime(e))
            } else {
                Ok(FieldElement::Ext(ExtFieldElem::new(p, k, &coeffs)?))
            }
        } else {
            Ok(FieldElement::Rational(s.parse()?))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> FieldElement {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(field_arith(&el("1"), &el("1"), FieldOp::Inv).unwrap(), el("1"));
        assert_eq!(field_arith(&el("[3]@7^1"), &el("[3]@7^1"), FieldOp::Inv).unwrap(), el("[5]@7^1"));
        assert_eq!(field_arith(&el("2/3"), &el("1/6"), FieldOp::Add).unwrap(), el("5/6"));
    }

    #[test]
    fn errors() {
        assert_eq!(
            field_arith(&el("0"), &el("0"), FieldOp::Inv),
            Err(FieldError::DivisionByZero)
        );
        assert_eq!(
            field_arith(&el("[0]@7^1"), &el("[0]@7^1"), FieldOp::Inv),
            Err(FieldError::DivisionByZero)
        );
        assert!(matches!(
            field_arith(&el("[1]@7^1"), &el("[1,1]@2^2"), FieldOp::Add),
            Err(FieldError::FieldMismatch(_, _))
        ));
        assert!(matches!(
            field_arith(&el("[1]@7^1"), &el("1/2"), FieldOp::Mul),
            Err(FieldError::FieldMismatch(_, _))
        ));
    }

    #[test]
    fn display_roundtrip() {
        for s in ["5/6", "-1/1", "[0,1]@2^2", "[1,0,2]@3^3", "[4]@7^1"] {
            assert_eq!(el(s).to_string(), s);
        }
        assert_eq!(el("[1]@2^2").to_string(), "[1,0]@2^2");
        assert!("[2]@2^1".parse::<FieldElement>().is_err());
        assert!("[1,1,1]@2^2".parse::<FieldElement>().is_err());
        assert!("[1]@4^1".parse::<FieldElement>().is_err());
    }

    #[test]
    fn frobenius_f4() {
        let t = ExtFieldElem::new(2, 2, &[0, 1]).unwrap();
        assert_eq!(t.frobenius().coeffs, vec![1, 1]);
        assert_eq!(t.frobenius().frobenius(), t);
    }
}
