use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, FieldError, Poly};

/// An arbitrary-precision rational number in lowest terms with positive
/// denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self, FieldError> {
        let den = den.into();
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn add(&self, o: &Self) -> Self {
        Rational(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Rational(&self.0 - &o.0)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Rational(&self.0 * &o.0)
    }

    pub fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.0.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(Rational(self.0.recip()))
        }
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || FieldError::Parse(s.to_string());
        match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                Rational::new(n, d)
            }
            None => Ok(Rational::from_int(s.parse::<BigInt>().map_err(|_| bad())?)),
        }
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn from_i64(&self, n: i64) -> Rational {
        Rational::from_int(n)
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a.add(b)
    }
    fn neg(&self, a: &Rational) -> Rational {
        a.neg()
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a.sub(b)
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a.mul(b)
    }
    fn inv(&self, a: &Rational) -> Option<Rational> {
        a.inv().ok()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn size(&self) -> Option<u64> {
        None
    }
    fn name(&self) -> String {
        "Q".to_string()
    }
    fn format_elem(&self, a: &Rational) -> String {
        a.to_string()
    }

    /// Rational roots by the rational root test on the integral primitive
    /// multiple of `f`.
    fn roots(&self, f: &Poly<Self>) -> Vec<Rational> {
        if f.is_zero() {
            return Vec::new();
        }
        let lcm = f
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = f
            .coeffs()
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut out = Vec::new();
        // strip x factors
        let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
        if low > 0 {
            out.push(Rational::zero());
        }
        let ints = &ints[low..];
        let lead = ints.last().unwrap().abs();
        let constant = ints[0].abs();
        let dn = small_divisors(&constant);
        let dd = small_divisors(&lead);
        let mut cands: Vec<Rational> = Vec::new();
        for n in &dn {
            for d in &dd {
                for sign in [1i64, -1] {
                    let r = Rational::new(n * sign, d.clone()).unwrap();
                    if !cands.contains(&r) {
                        cands.push(r);
                    }
                }
            }
        }
        cands.sort();
        for r in cands {
            if f.eval(self, &r).is_zero() && !out.contains(&r) {
                out.push(r);
            }
        }
        out.sort();
        out
    }
}

fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    // Trial division; the rational root test is only used on tiny inputs.
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let q = n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_display() {
        let r = Rational::new(6, -4).unwrap();
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!("10/4".parse::<Rational>().unwrap().to_string(), "5/2");
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from_int(7));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn sum_of_fractions() {
        let a: Rational = "2/3".parse().unwrap();
        let b: Rational = "1/6".parse().unwrap();
        assert_eq!(Rationals.add(&a, &b), "5/6".parse().unwrap());
    }

    #[test]
    fn rational_roots() {
        // (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
        let f = Poly::from_i64(&Rationals, &[-6, 11, -6, 1]);
        let r = Rationals.roots(&f);
        assert_eq!(r, vec![1.into(), 2.into(), 3.into()]);
        // 2t^2 - 1 has no rational roots
        let g = Poly::from_i64(&Rationals, &[-1, 0, 2]);
        assert!(Rationals.roots(&g).is_empty());
        // 2t - 1
        let h = Poly::from_i64(&Rationals, &[-1, 2]);
        assert_eq!(Rationals.roots(&h), vec![Rational::new(1, 2).unwrap()]);
    }
}
