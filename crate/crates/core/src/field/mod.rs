//! Exact fields: the rationals, prime fields and small extensions of prime
//! fields, all behind the [`Field`] context trait.
//!
//! A field is a *context* value and its elements are plain data. Arithmetic
//! always goes through the context, so table-driven finite fields and
//! arbitrary-precision rationals share one generic code path.

mod element;
mod finite;
pub mod linalg;
mod poly;
mod rational;

use std::fmt;
use std::hash::Hash;

pub use element::{field_arith, FieldElement, FieldOp, ExtFieldElem, PrimeFieldElem};
pub use finite::{find_irreducible, find_irreducible_coeffs, is_prime, FiniteField, MAX_FIELD_SIZE};
pub use poly::Poly;
pub use rational::{Rational, Rationals};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field of size {0}^{1} exceeds the supported maximum")]
    FieldTooLarge(u64, u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("cannot parse field element: {0}")]
    Parse(String),
}

/// An exact field, used as an arithmetic context.
pub trait Field: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + Eq + Hash + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` exactly when `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// 0 for the rationals.
    fn characteristic(&self) -> u64;
    /// Number of elements, `None` for infinite fields.
    fn size(&self) -> Option<u64>;
    /// Short human-readable name such as `Q`, `F_7` or `F_2^3`.
    fn name(&self) -> String;
    fn format_elem(&self, a: &Self::Elem) -> String;

    /// All elements in a fixed deterministic order (finite fields only).
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// Roots of `f` lying in this field, without multiplicity, in a
    /// deterministic order.
    fn roots(&self, f: &Poly<Self>) -> Vec<Self::Elem> {
        let elems = self
            .elements()
            .expect("root finding needs an enumerable field or an override");
        elems.into_iter().filter(|x| self.is_zero(&f.eval(self, x))).collect()
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        let bi = self.inv(b).ok_or(FieldError::DivisionByZero)?;
        Ok(self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn sum<'a, I>(&self, it: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        it.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}
