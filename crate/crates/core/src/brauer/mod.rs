//! Brauer classes over `Q` and over quadratic fields, described by their
//! local invariants.

mod hilbert;
mod quadratic;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::field::Rational;
use crate::numtheory;

pub use hilbert::{hilbert_symbol, quaternion_class};
pub use quadratic::{
    admits_unitary_involution, corestriction, restriction, splitting_in_quadratic, InvariantVectorK, QuadField,
    Splitting,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BrauerError {
    #[error("local invariants sum to {0}, not 0")]
    ReciprocityViolation(String),
    #[error("a class of odd order has invariant 0 at the real place, got {0}")]
    RealPlaceOrder(String),
    #[error("real invariant must be 0 or 1/2, got {0}")]
    RealPlaceInvalid(String),
    #[error("class is not killed by {0}")]
    OrderViolation(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a squarefree integer other than 0 and 1")]
    BadQuadField(i64),
    #[error("Hilbert symbol arguments must be nonzero")]
    ZeroArgument,
    #[error("{0} is too large to factor")]
    TooLarge(String),
    #[error("invalid local data for K: {0}")]
    SlotMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A place of `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Real,
    Prime(u64),
}

impl Place {
    pub fn prime(p: u64) -> Result<Place, BrauerError> {
        if numtheory::is_prime(p) {
            Ok(Place::Prime(p))
        } else {
            Err(BrauerError::NotPrime(p))
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Place {
    type Err = BrauerError;
    fn from_str(s: &str) -> Result<Self, BrauerError> {
        match s.trim() {
            "inf" | "oo" | "real" => Ok(Place::Real),
            t => Place::prime(t.parse().map_err(|_| BrauerError::Parse(format!("bad place {s:?}")))?),
        }
    }
}

/// An element of `Q/Z`, kept in `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fraction1(BigRational);

impl Fraction1 {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, BrauerError> {
        let den = den.into();
        if den.is_zero() {
            return Err(BrauerError::Parse("zero denominator".into()));
        }
        Ok(Self::reduce(BigRational::new(num.into(), den)))
    }

    fn reduce(x: BigRational) -> Self {
        let fl = x.floor();
        Fraction1(x - fl)
    }

    pub fn zero() -> Self {
        Fraction1(BigRational::zero())
    }

    pub fn half() -> Self {
        Self::new(1, 2).unwrap()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::reduce(&self.0 + &o.0)
    }

    pub fn neg(&self) -> Self {
        Self::reduce(-&self.0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::reduce(&self.0 * BigRational::from_integer(BigInt::from(k)))
    }

    /// Order in `Q/Z`, i.e. the reduced denominator.
    pub fn order(&self) -> BigInt {
        self.0.denom().clone()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for Fraction1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Fraction1 {
    type Err = BrauerError;
    fn from_str(s: &str) -> Result<Self, BrauerError> {
        let r: Rational = s.parse().map_err(|_| BrauerError::Parse(format!("bad invariant {s:?}")))?;
        Self::new(r.numer().clone(), r.denom().clone())
    }
}

/// A class in `Br Q`: finitely many nonzero local invariants.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct InvariantVector {
    inv: BTreeMap<Place, Fraction1>,
}

pub(crate) fn sum_invariants<'a>(it: impl Iterator<Item = &'a Fraction1>) -> Fraction1 {
    it.fold(Fraction1::zero(), |a, b| a.add(b))
}

impl InvariantVector {
    /// Validates reciprocity and the real invariant. Zero entries are dropped;
    /// repeated places are added.
    pub fn new(entries: impl IntoIterator<Item = (Place, Fraction1)>) -> Result<Self, BrauerError> {
        let v = Self::from_entries_unchecked(entries);
        let real = v.get(Place::Real);
        if !(real.is_zero() || real == Fraction1::half()) {
            return Err(BrauerError::RealPlaceInvalid(real.to_string()));
        }
        let s = sum_invariants(v.inv.values());
        if !s.is_zero() {
            return Err(BrauerError::ReciprocityViolation(s.to_string()));
        }
        Ok(v)
    }

    pub(crate) fn from_entries_unchecked(entries: impl IntoIterator<Item = (Place, Fraction1)>) -> Self {
        let mut inv: BTreeMap<Place, Fraction1> = BTreeMap::new();
        for (p, x) in entries {
            let e = inv.entry(p).or_insert_with(Fraction1::zero);
            *e = e.add(&x);
        }
        inv.retain(|_, x| !x.is_zero());
        InvariantVector { inv }
    }

    pub fn split() -> Self {
        Self::default()
    }

    pub fn get(&self, p: Place) -> Fraction1 {
        self.inv.get(&p).cloned().unwrap_or_else(Fraction1::zero)
    }

    /// Nonzero invariants in place order, the real place first.
    pub fn entries(&self) -> impl Iterator<Item = (&Place, &Fraction1)> {
        self.inv.iter()
    }

    pub fn is_split(&self) -> bool {
        self.inv.is_empty()
    }

    pub fn tensor(&self, o: &Self) -> Self {
        Self::from_entries_unchecked(self.inv.iter().chain(&o.inv).map(|(p, x)| (*p, x.clone())))
    }

    pub fn inverse(&self) -> Self {
        Self::from_entries_unchecked(self.inv.iter().map(|(p, x)| (*p, x.neg())))
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_entries_unchecked(self.inv.iter().map(|(p, x)| (*p, x.scale(k))))
    }

    /// Order in `Br Q`.
    pub fn period(&self) -> BigInt {
        self.inv.values().fold(BigInt::one(), |a, x| a.lcm(&x.order()))
    }

    /// Least common multiple of the local orders. Equal to the index by
    /// period = index over number fields.
    pub fn index(&self) -> BigInt {
        self.period()
    }

    pub fn to_json(&self) -> Value {
        let mut primes = Map::new();
        for (p, x) in &self.inv {
            if let Place::Prime(p) = p {
                primes.insert(p.to_string(), Value::String(x.to_string()));
            }
        }
        json!({"inf": self.get(Place::Real).to_string(), "primes": primes})
    }

    pub fn from_json(v: &Value) -> Result<Self, BrauerError> {
        let bad = |m: &str| BrauerError::Parse(m.to_string());
        let obj = v.as_object().ok_or_else(|| bad("invariant vector must be an object"))?;
        for k in obj.keys() {
            if k != "inf" && k != "primes" {
                return Err(bad(&format!("unknown key {k:?}")));
            }
        }
        let mut entries = Vec::new();
        if let Some(x) = obj.get("inf") {
            let s = x.as_str().ok_or_else(|| bad("\"inf\" must be a string"))?;
            entries.push((Place::Real, s.parse()?));
        }
        if let Some(ps) = obj.get("primes") {
            let ps = ps.as_object().ok_or_else(|| bad("\"primes\" must be an object"))?;
            for (k, x) in ps {
                let p: Place = k.parse()?;
                if p == Place::Real {
                    return Err(bad("the real place goes under \"inf\""));
                }
                let s = x.as_str().ok_or_else(|| bad("invariants must be strings"))?;
                entries.push((p, s.parse()?));
            }
        }
        Self::new(entries)
    }
}

impl fmt::Display for InvariantVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.inv.iter().map(|(p, x)| format!("{p}: {x}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// A class of order dividing 3, given by its local invariants.
pub fn order3_class(local: &[(Place, Fraction1)]) -> Result<InvariantVector, BrauerError> {
    let v = InvariantVector::from_entries_unchecked(local.iter().cloned());
    if !v.get(Place::Real).is_zero() {
        return Err(BrauerError::RealPlaceOrder(v.get(Place::Real).to_string()));
    }
    if !v.scale(3).is_split() {
        return Err(BrauerError::OrderViolation(3));
    }
    InvariantVector::new(v.inv)
}

/// `0, u, 2u, ...` up to the order of `u`: the kernel of `Br Q` to the
/// function field of the Severi-Brauer variety of `u`.
pub fn chatelet_kernel(u: &InvariantVector) -> Vec<InvariantVector> {
    let n = u.period().to_u64().expect("period fits in u64");
    (0..n as i64).map(|k| u.scale(k)).collect()
}

/// `u = C + D` with `C = 3u` of order dividing 2 and `D = 4u` of order
/// dividing 3.
pub fn decompose_degree6(u: &InvariantVector) -> Result<(InvariantVector, InvariantVector), BrauerError> {
    if !u.scale(6).is_split() {
        return Err(BrauerError::OrderViolation(6));
    }
    Ok((u.scale(3), u.scale(4)))
}

/// Numerator and denominator of a nonzero rational as `u64` magnitudes with
/// the sign of the rational.
pub(crate) fn small_parts(a: &Rational) -> Result<(bool, u64, u64), BrauerError> {
    let n = a.numer().abs().to_u64().ok_or_else(|| BrauerError::TooLarge(a.to_string()))?;
    let d = a.denom().to_u64().ok_or_else(|| BrauerError::TooLarge(a.to_string()))?;
    Ok((a.is_negative(), n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(s: &str) -> Fraction1 {
        s.parse().unwrap()
    }

    fn iv(entries: &[(Place, &str)]) -> InvariantVector {
        InvariantVector::new(entries.iter().map(|(p, s)| (*p, fr(s)))).unwrap()
    }

    use Place::Prime as P;

    #[test]
    fn fractions() {
        assert_eq!(fr("7/6").to_string(), "1/6");
        assert_eq!(fr("-1/3").to_string(), "2/3");
        assert_eq!(fr("1").to_string(), "0");
        assert!("1/0".parse::<Fraction1>().is_err());
    }

    #[test]
    fn order3_examples() {
        let u = order3_class(&[(P(7), fr("1/3")), (P(13), fr("2/3"))]).unwrap();
        assert_eq!(u.period(), BigInt::from(3));
        assert!(order3_class(&[]).unwrap().is_split());
        assert!(matches!(order3_class(&[(P(7), fr("1/3"))]), Err(BrauerError::ReciprocityViolation(_))));
        assert!(matches!(
            order3_class(&[(Place::Real, fr("1/2")), (P(2), fr("1/2"))]),
            Err(BrauerError::RealPlaceOrder(_))
        ));
    }

    #[test]
    fn group_law_and_index() {
        let u = iv(&[(P(7), "1/6"), (P(13), "5/6")]);
        assert_eq!(u.tensor(&u), iv(&[(P(7), "1/3"), (P(13), "2/3")]));
        assert!(u.tensor(&u.inverse()).is_split());
        assert_eq!(u.index(), BigInt::from(6));
        assert_eq!(InvariantVector::split().index(), BigInt::one());
        let (c, d) = decompose_degree6(&u).unwrap();
        assert_eq!(c, iv(&[(P(7), "1/2"), (P(13), "1/2")]));
        assert_eq!(d, iv(&[(P(7), "2/3"), (P(13), "1/3")]));
        assert_eq!(c.tensor(&d), u);
        let q = iv(&[(Place::Real, "1/2"), (P(2), "1/2")]);
        assert_eq!(decompose_degree6(&q).unwrap(), (q.clone(), InvariantVector::split()));
        let bad = iv(&[(P(7), "1/5"), (P(13), "4/5")]);
        assert_eq!(decompose_degree6(&bad), Err(BrauerError::OrderViolation(6)));
    }

    #[test]
    fn chatelet() {
        assert_eq!(chatelet_kernel(&InvariantVector::split()).len(), 1);
        let u = iv(&[(P(7), "1/3"), (P(13), "2/3")]);
        assert_eq!(chatelet_kernel(&u), vec![InvariantVector::split(), u.clone(), u.scale(2)]);
    }

    #[test]
    fn json_roundtrip() {
        let u = iv(&[(P(13), "5/6"), (P(7), "1/6")]);
        let j = u.to_json();
        assert_eq!(j.to_string(), r#"{"inf":"0","primes":{"7":"1/6","13":"5/6"}}"#);
        assert_eq!(InvariantVector::from_json(&j).unwrap(), u);
        assert!(InvariantVector::from_json(&json!({"primes": {"7": "1/6"}})).is_err());
        assert!(InvariantVector::from_json(&json!({"primes": {"8": "1/2", "2": "1/2"}})).is_err());
        assert!(InvariantVector::from_json(&json!({"inf": "1/3", "primes": {"2": "2/3"}})).is_err());
    }
}
