//! Hilbert symbols by the closed formulas, and quaternion classes.

use std::collections::BTreeSet;

use super::{small_parts, BrauerError, Fraction1, InvariantVector, Place};
use crate::field::Rational;
use crate::numtheory::{factor, pow_mod};

/// Signed integer in the square class of `a`: `n/d ~ n*d`.
fn square_class_rep(a: &Rational) -> Result<(bool, u128), BrauerError> {
    if a.is_zero() {
        return Err(BrauerError::ZeroArgument);
    }
    let (neg, n, d) = small_parts(a)?;
    Ok((neg, n as u128 * d as u128))
}

fn split_valuation(mut x: u128, p: u128) -> (u32, u128) {
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    (v, x)
}

/// Residue of the signed unit `(neg, m)` modulo `p`.
fn residue(neg: bool, m: u128, p: u64) -> u64 {
    let r = (m % p as u128) as u64;
    if neg && r != 0 {
        p - r
    } else {
        r
    }
}

fn legendre_residue(r: u64, p: u64) -> i32 {
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// `(a, b)_v`: +1 iff `z^2 = a x^2 + b y^2` has a nontrivial solution over
/// the completion of `Q` at `v`.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: Place) -> Result<i32, BrauerError> {
    let (na, ma) = square_class_rep(a)?;
    let (nb, mb) = square_class_rep(b)?;
    match v {
        Place::Real => Ok(if na && nb { -1 } else { 1 }),
        Place::Prime(2) => {
            let (alpha, u) = split_valuation(ma, 2);
            let (beta, w) = split_valuation(mb, 2);
            let u8_ = residue(na, u, 8);
            let w8 = residue(nb, w, 8);
            let eps = |x: u64| ((x - 1) / 2) % 2;
            let omega = |x: u64| ((x * x - 1) / 8) % 2;
            let e = eps(u8_) * eps(w8) + alpha as u64 * omega(w8) + beta as u64 * omega(u8_);
            Ok(if e % 2 == 0 { 1 } else { -1 })
        }
        Place::Prime(p) => {
            let (alpha, u) = split_valuation(ma, p as u128);
            let (beta, w) = split_valuation(mb, p as u128);
            let mut s = 1;
            if alpha % 2 == 1 && beta % 2 == 1 && ((p - 1) / 2) % 2 == 1 {
                s = -s;
            }
            if beta % 2 == 1 {
                s *= legendre_residue(residue(na, u, p), p);
            }
            if alpha % 2 == 1 {
                s *= legendre_residue(residue(nb, w, p), p);
            }
            Ok(s)
        }
    }
}

/// Places where `(a, b)` can ramify: the real place, 2, and the primes
/// dividing a numerator or denominator.
fn candidate_places(a: &Rational, b: &Rational) -> Result<BTreeSet<Place>, BrauerError> {
    let mut out = BTreeSet::from([Place::Real, Place::Prime(2)]);
    for x in [a, b] {
        let (_, n, d) = small_parts(x)?;
        for m in [n, d] {
            for (p, _) in factor(m) {
                out.insert(Place::Prime(p));
            }
        }
    }
    Ok(out)
}

/// The class of the quaternion algebra `(a, b)`: invariant 1/2 exactly where
/// the Hilbert symbol is -1.
pub fn quaternion_class(a: &Rational, b: &Rational) -> Result<InvariantVector, BrauerError> {
    let mut entries = Vec::new();
    for v in candidate_places(a, b)? {
        if hilbert_symbol(a, b, v)? == -1 {
            entries.push((v, Fraction1::half()));
        }
    }
    InvariantVector::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn examples() {
        assert_eq!(hilbert_symbol(&q(-1), &q(-1), Place::Real).unwrap(), -1);
        assert_eq!(hilbert_symbol(&q(-1), &q(-1), Place::Prime(2)).unwrap(), -1);
        assert_eq!(hilbert_symbol(&q(5), &q(7), Place::Prime(3)).unwrap(), 1);
        assert_eq!(hilbert_symbol(&q(2), &q(3), Place::Prime(3)).unwrap(), -1);
        assert!(hilbert_symbol(&q(0), &q(3), Place::Prime(3)).is_err());
    }

    #[test]
    fn quaternion_classes() {
        let h = quaternion_class(&q(-1), &q(-1)).unwrap();
        assert_eq!(h.to_json().to_string(), r#"{"inf":"1/2","primes":{"2":"1/2"}}"#);
        assert!(quaternion_class(&q(1), &q(17)).unwrap().is_split());
        assert!(h.tensor(&h).is_split());
        // (-3/14, 5) ~ (-42, 5): ramified exactly at 2, 3, 5 and 7.
        let r: Rational = "-3/14".parse().unwrap();
        let c = quaternion_class(&r, &q(5)).unwrap();
        assert_eq!(c.to_json().to_string(), r#"{"inf":"0","primes":{"2":"1/2","3":"1/2","5":"1/2","7":"1/2"}}"#);
    }
}
