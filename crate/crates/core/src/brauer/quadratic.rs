//! Quadratic étale algebras `K` over `Q` and Brauer classes over `K`.
//!
//! A place of `K` is a pair (place of `Q`, slot): split places use slots 0
//! and 1, inert and ramified places use slot 0 only.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Map, Value};

use super::{sum_invariants, BrauerError, Fraction1, InvariantVector, Place};
use crate::numtheory::{is_squarefree, pow_mod};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadField {
    /// `K = Q x Q`.
    Split,
    /// `K = Q(sqrt d)` with `d` squarefree, `d != 0, 1`.
    Field(i64),
}

impl QuadField {
    pub fn new(d: i64) -> Result<Self, BrauerError> {
        if d == 0 || d == 1 || !is_squarefree(d) {
            return Err(BrauerError::BadQuadField(d));
        }
        Ok(QuadField::Field(d))
    }

    /// Discriminant of the ring of integers; `None` for the split algebra.
    pub fn discriminant(&self) -> Option<i64> {
        match *self {
            QuadField::Split => None,
            QuadField::Field(d) if d.rem_euclid(4) == 1 => Some(d),
            QuadField::Field(d) => Some(4 * d),
        }
    }

    pub fn slots(&self, v: Place) -> u8 {
        match splitting_in_quadratic(*self, v) {
            Splitting::Split => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadField::Split => write!(f, "split"),
            QuadField::Field(d) => write!(f, "{d}"),
        }
    }
}

impl FromStr for QuadField {
    type Err = BrauerError;
    fn from_str(s: &str) -> Result<Self, BrauerError> {
        let t = s.trim();
        if t == "split" {
            return Ok(QuadField::Split);
        }
        let d: i64 = t.parse().map_err(|_| BrauerError::Parse(format!("bad quadratic field {s:?}")))?;
        QuadField::new(d)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Splitting {
    Split,
    Inert,
    Ramified,
}

impl Splitting {
    pub fn local_degree(self) -> i64 {
        match self {
            Splitting::Split => 1,
            _ => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Splitting::Split => "split",
            Splitting::Inert => "inert",
            Splitting::Ramified => "ramified",
        }
    }
}

/// Decomposition of the place `v` in `K`. The real place is `Inert` when it
/// becomes complex.
pub fn splitting_in_quadratic(k: QuadField, v: Place) -> Splitting {
    let d = match k {
        QuadField::Split => return Splitting::Split,
        QuadField::Field(d) => d,
    };
    match v {
        Place::Real => {
            if d > 0 {
                Splitting::Split
            } else {
                Splitting::Inert
            }
        }
        Place::Prime(2) => match d.rem_euclid(8) {
            1 => Splitting::Split,
            5 => Splitting::Inert,
            _ => Splitting::Ramified,
        },
        Place::Prime(p) => {
            let r = d.rem_euclid(p as i64) as u64;
            if r == 0 {
                Splitting::Ramified
            } else if pow_mod(r, (p - 1) / 2, p) == 1 {
                Splitting::Split
            } else {
                Splitting::Inert
            }
        }
    }
}

/// A class in `Br K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantVectorK {
    k: QuadField,
    inv: BTreeMap<(Place, u8), Fraction1>,
}

impl InvariantVectorK {
    /// Validates slots against the splitting of each place, the real
    /// invariants and reciprocity over `K`.
    pub fn new(k: QuadField, entries: impl IntoIterator<Item = ((Place, u8), Fraction1)>) -> Result<Self, BrauerError> {
        let mut inv: BTreeMap<(Place, u8), Fraction1> = BTreeMap::new();
        for ((p, slot), x) in entries {
            if slot >= k.slots(p) {
                return Err(BrauerError::SlotMismatch(format!(
                    "{p} is {} in {k}, no slot {slot}",
                    splitting_in_quadratic(k, p).name()
                )));
            }
            let e = inv.entry((p, slot)).or_insert_with(Fraction1::zero);
            *e = e.add(&x);
        }
        inv.retain(|_, x| !x.is_zero());
        for ((p, _), x) in &inv {
            if *p == Place::Real {
                if k.slots(Place::Real) == 1 {
                    return Err(BrauerError::SlotMismatch("complex place has invariant 0".into()));
                }
                if *x != Fraction1::half() {
                    return Err(BrauerError::RealPlaceInvalid(x.to_string()));
                }
            }
        }
        let s = sum_invariants(inv.values());
        if !s.is_zero() {
            return Err(BrauerError::ReciprocityViolation(s.to_string()));
        }
        Ok(InvariantVectorK { k, inv })
    }

    pub fn split(k: QuadField) -> Self {
        InvariantVectorK { k, inv: BTreeMap::new() }
    }

    pub fn field(&self) -> QuadField {
        self.k
    }

    pub fn get(&self, p: Place, slot: u8) -> Fraction1 {
        self.inv.get(&(p, slot)).cloned().unwrap_or_else(Fraction1::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(Place, u8), &Fraction1)> {
        self.inv.iter()
    }

    pub fn is_split(&self) -> bool {
        self.inv.is_empty()
    }

    pub fn scale(&self, n: i64) -> Self {
        let mut inv: BTreeMap<(Place, u8), Fraction1> =
            self.inv.iter().map(|(k, x)| (*k, x.scale(n))).collect();
        inv.retain(|_, x| !x.is_zero());
        InvariantVectorK { k: self.k, inv }
    }

    pub fn tensor(&self, o: &Self) -> Result<Self, BrauerError> {
        if self.k != o.k {
            return Err(BrauerError::SlotMismatch(format!("classes over {} and {}", self.k, o.k)));
        }
        Self::new(self.k, self.inv.iter().chain(&o.inv).map(|(k, x)| (*k, x.clone())))
    }

    /// `{"field": "2", "inf": ["0", "0"], "primes": {"7": ["1/3", "2/3"]}}`:
    /// one invariant per place of `K` above each listed place of `Q`.
    pub fn to_json(&self) -> Value {
        let slots = |p: Place| -> Value {
            (0..self.k.slots(p)).map(|s| Value::String(self.get(p, s).to_string())).collect()
        };
        let mut primes = Map::new();
        let mut seen: Vec<Place> = self.inv.keys().map(|(p, _)| *p).filter(|p| *p != Place::Real).collect();
        seen.dedup();
        for p in seen {
            primes.insert(p.to_string(), slots(p));
        }
        json!({"field": self.k.to_string(), "inf": slots(Place::Real), "primes": primes})
    }

    pub fn from_json(v: &Value) -> Result<Self, BrauerError> {
        let bad = |m: &str| BrauerError::Parse(m.to_string());
        let obj = v.as_object().ok_or_else(|| bad("invariant vector must be an object"))?;
        for key in obj.keys() {
            if !["field", "inf", "primes"].contains(&key.as_str()) {
                return Err(bad(&format!("unknown key {key:?}")));
            }
        }
        let k: QuadField = match obj.get("field") {
            Some(Value::String(s)) => s.parse()?,
            Some(Value::Number(n)) => QuadField::new(n.as_i64().ok_or_else(|| bad("bad field"))?)?,
            _ => return Err(bad("missing \"field\"")),
        };
        let mut entries = Vec::new();
        let mut read = |p: Place, x: &Value| -> Result<(), BrauerError> {
            let list = x.as_array().ok_or_else(|| bad("local invariants must be a list"))?;
            if list.len() != k.slots(p) as usize {
                return Err(BrauerError::SlotMismatch(format!(
                    "{p} has {} places above it in {k}, got {} invariants",
                    k.slots(p),
                    list.len()
                )));
            }
            for (s, y) in list.iter().enumerate() {
                let y = y.as_str().ok_or_else(|| bad("invariants must be strings"))?;
                entries.push(((p, s as u8), y.parse()?));
            }
            Ok(())
        };
        if let Some(x) = obj.get("inf") {
            read(Place::Real, x)?;
        }
        if let Some(ps) = obj.get("primes") {
            for (key, x) in ps.as_object().ok_or_else(|| bad("\"primes\" must be an object"))? {
                let p: Place = key.parse()?;
                if p == Place::Real {
                    return Err(bad("the real place goes under \"inf\""));
                }
                read(p, x)?;
            }
        }
        Self::new(k, entries)
    }
}

/// `res_{K/Q}`: multiply by the local degree at each place above `v`.
pub fn restriction(u: &InvariantVector, k: QuadField) -> InvariantVectorK {
    let mut entries = Vec::new();
    for (p, x) in u.entries() {
        let s = splitting_in_quadratic(k, *p);
        if s == Splitting::Split {
            entries.push(((*p, 0), x.clone()));
            entries.push(((*p, 1), x.clone()));
        } else {
            entries.push(((*p, 0), x.scale(s.local_degree())));
        }
    }
    InvariantVectorK::new(k, entries).expect("restriction of a valid class")
}

/// `cor_{K/Q}`: sum the invariants of the places above each `v`.
pub fn corestriction(u: &InvariantVectorK) -> InvariantVector {
    InvariantVector::new(u.entries().map(|((p, _), x)| (*p, x.clone()))).expect("corestriction of a valid class")
}

/// A central simple `K`-algebra carries an involution of the second kind
/// exactly when its corestriction to `Q` is split.
pub fn admits_unitary_involution(u: &InvariantVectorK) -> bool {
    corestriction(u).is_split()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{order3_class, quaternion_class};
    use crate::field::Rational;
    use Place::Prime as P;

    fn fr(s: &str) -> Fraction1 {
        s.parse().unwrap()
    }

    #[test]
    fn splitting_examples() {
        let i = QuadField::new(-1).unwrap();
        assert_eq!(splitting_in_quadratic(i, P(5)), Splitting::Split);
        assert_eq!(splitting_in_quadratic(i, P(2)), Splitting::Ramified);
        assert_eq!(splitting_in_quadratic(i, Place::Real), Splitting::Inert);
        assert_eq!(splitting_in_quadratic(i, P(3)), Splitting::Inert);
        let r2 = QuadField::new(2).unwrap();
        assert_eq!(splitting_in_quadratic(r2, P(7)), Splitting::Split);
        assert_eq!(splitting_in_quadratic(r2, P(13)), Splitting::Inert);
        assert_eq!(QuadField::new(-3).unwrap().discriminant(), Some(-3));
        assert!(QuadField::new(12).is_err());
        assert!(QuadField::new(1).is_err());
    }

    #[test]
    fn res_and_cor() {
        let m1 = Rational::from_int(-1);
        let h = quaternion_class(&m1, &m1).unwrap();
        let i = QuadField::new(-1).unwrap();
        assert!(restriction(&h, i).is_split());
        assert!(restriction(&InvariantVector::split(), i).is_split());

        let u = order3_class(&[(P(7), fr("1/3")), (P(13), fr("2/3"))]).unwrap();
        let r2 = QuadField::new(2).unwrap();
        let res = restriction(&u, r2);
        assert_eq!(res.get(P(7), 0), fr("1/3"));
        assert_eq!(res.get(P(7), 1), fr("1/3"));
        assert_eq!(res.get(P(13), 0), fr("1/3"));
        assert_eq!(corestriction(&res), u.scale(2));
        assert!(!admits_unitary_involution(&res));

        let b = InvariantVectorK::new(r2, [((P(7), 0), fr("1/3")), ((P(7), 1), fr("2/3"))]).unwrap();
        assert!(admits_unitary_involution(&b));
        assert!(InvariantVectorK::new(r2, [((P(13), 1), fr("1/2"))]).is_err());
    }

    #[test]
    fn k_json() {
        let r2 = QuadField::new(2).unwrap();
        let u = order3_class(&[(P(7), fr("1/3")), (P(13), fr("2/3"))]).unwrap();
        let res = restriction(&u, r2);
        let j = res.to_json();
        assert_eq!(
            j.to_string(),
            r#"{"field":"2","inf":["0","0"],"primes":{"7":["1/3","1/3"],"13":["1/3"]}}"#
        );
        assert_eq!(InvariantVectorK::from_json(&j).unwrap(), res);
    }
}
