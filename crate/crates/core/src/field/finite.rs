use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::{Field, FieldError, Poly};
use crate::numtheory;

/// Largest field order for which log/antilog tables are built.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// The finite field `F_{p^k}`, presented as `F_p[t]/(m(t))` with
/// `m = find_irreducible(p, k)`.
///
/// Elements are indices `c_0 + c_1 p + ... + c_{k-1} p^{k-1}` encoding the
/// coefficient vector of the residue class. Multiplication goes through
/// discrete log tables.
#[derive(Clone)]
pub struct FiniteField(Arc<Inner>);

struct Inner {
    p: u64,
    k: u32,
    q: u32,
    modulus: Vec<u64>,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, o: &Self) -> bool {
        self.0.p == o.0.p && self.0.k == o.0.k
    }
}
impl Eq for FiniteField {}

fn cache() -> &'static Mutex<HashMap<(u64, u32), FiniteField>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), FiniteField>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl FiniteField {
    /// The field with `p^k` elements. Contexts are cached per `(p, k)` so the
    /// defining polynomial is fixed for the lifetime of the process.
    pub fn new(p: u64, k: u32) -> Result<Self, FieldError> {
        if !numtheory::is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if k == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let size = (p as u128).checked_pow(k).unwrap_or(u128::MAX);
        if size > MAX_FIELD_SIZE as u128 {
            return Err(FieldError::FieldTooLarge(p, k));
        }
        if let Some(f) = cache().lock().unwrap().get(&(p, k)) {
            return Ok(f.clone());
        }
        let f = FiniteField(Arc::new(Inner::build(p, k)));
        cache().lock().unwrap().insert((p, k), f.clone());
        Ok(f)
    }

    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Self::new(p, 1)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Coefficients `m_0, ..., m_k = 1` of the defining polynomial.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn digits(&self, a: u32) -> Vec<u64> {
        let mut a = a as u64;
        (0..self.0.k)
            .map(|_| {
                let d = a % self.0.p;
                a /= self.0.p;
                d
            })
            .collect()
    }

    /// Element with the given coefficient vector (reduced mod p, padded).
    pub fn from_digits(&self, digits: &[u64]) -> u32 {
        let mut acc = 0u64;
        for &d in digits.iter().take(self.0.k as usize).rev() {
            acc = acc * self.0.p + d % self.0.p;
        }
        acc as u32
    }

    /// The class of `t`, the generator of the presentation (for `k >= 2`).
    pub fn generator_t(&self) -> u32 {
        if self.0.k == 1 {
            // t is a root of m(t) = t + m_0, i.e. -m_0.
            let m0 = self.0.modulus[0];
            ((self.0.p - m0) % self.0.p) as u32
        } else {
            self.0.p as u32
        }
    }

    /// The `p`-power Frobenius automorphism.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(&a, self.0.p)
    }

    /// Whether `a` lies in the prime field.
    pub fn in_prime_field(&self, a: u32) -> bool {
        (a as u64) < self.0.p
    }

    #[inline]
    pub fn fast_add(&self, a: u32, b: u32) -> u32 {
        let inner = &*self.0;
        if inner.p == 2 {
            return a ^ b;
        }
        match &inner.add {
            Some(t) => t[(a * inner.q + b) as usize],
            None => {
                let (mut a, mut b) = (a as u64, b as u64);
                let mut acc = 0u64;
                let mut place = 1u64;
                for _ in 0..inner.k {
                    acc += ((a % inner.p + b % inner.p) % inner.p) * place;
                    a /= inner.p;
                    b /= inner.p;
                    place *= inner.p;
                }
                acc as u32
            }
        }
    }

    #[inline]
    pub fn fast_mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.0;
        inner.exp[(inner.log[a as usize] + inner.log[b as usize]) as usize]
    }
}

impl Inner {
    fn build(p: u64, k: u32) -> Inner {
        let modulus = find_irreducible_coeffs(p, k);
        let q = p.pow(k) as u32;
        let ku = k as usize;
        let to_digits = |mut a: u64| -> Vec<u64> {
            (0..ku)
                .map(|_| {
                    let d = a % p;
                    a /= p;
                    d
                })
                .collect()
        };
        let from_digits = |d: &[u64]| -> u32 {
            d.iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32
        };
        // naive multiplication of residue classes, only used to build tables
        let slow_mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
            let mut prod = vec![0u64; 2 * ku];
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            for i in (ku..2 * ku).rev() {
                let c = prod[i];
                if c != 0 {
                    for (j, &m) in modulus.iter().enumerate().take(ku) {
                        let idx = i - ku + j;
                        prod[idx] = (prod[idx] + (p - c) * m % p) % p;
                    }
                    prod[i] = 0;
                }
            }
            prod.truncate(ku);
            prod
        };
        let mut exp = Vec::new();
        let mut log = vec![0u32; q as usize];
        for cand in 1..q as u64 {
            let g = to_digits(cand);
            let mut powers = vec![1u32];
            let mut cur = g.clone();
            loop {
                let idx = from_digits(&cur);
                if idx == 1 {
                    break;
                }
                powers.push(idx);
                cur = slow_mul(&cur, &g);
            }
            if powers.len() as u32 == q - 1 {
                exp = powers;
                break;
            }
        }
        debug_assert_eq!(exp.len() as u32, q - 1);
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        let doubled: Vec<u32> = exp.iter().chain(exp.iter()).copied().collect();
        let neg: Vec<u32> = (0..q as u64)
            .map(|a| {
                let d: Vec<u64> = to_digits(a).iter().map(|&c| (p - c) % p).collect();
                from_digits(&d)
            })
            .collect();
        let add = if p != 2 && q <= 1024 {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q as u64 {
                let da = to_digits(a);
                for b in 0..q as u64 {
                    let db = to_digits(b);
                    let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    t[(a * q as u64 + b) as usize] = from_digits(&s);
                }
            }
            Some(t)
        } else {
            None
        };
        Inner { p, k, q, modulus, exp: doubled, log, neg, add }
    }
}

impl Field for FiniteField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.0.p as i64) as u32
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        self.fast_add(*a, *b)
    }
    fn neg(&self, a: &u32) -> u32 {
        self.0.neg[*a as usize]
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.fast_mul(*a, *b)
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let inner = &*self.0;
        let l = inner.log[*a as usize];
        Some(inner.exp[((inner.q - 1 - l) % (inner.q - 1)) as usize])
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn pow(&self, a: &u32, e: u64) -> u32 {
        if *a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let inner = &*self.0;
        let ord = (inner.q - 1) as u64;
        let l = inner.log[*a as usize] as u64;
        inner.exp[((l * (e % ord)) % ord) as usize]
    }
    fn characteristic(&self) -> u64 {
        self.0.p
    }
    fn size(&self) -> Option<u64> {
        Some(self.0.q as u64)
    }
    fn name(&self) -> String {
        if self.0.k == 1 {
            format!("F_{}", self.0.p)
        } else {
            format!("F_{}^{}", self.0.p, self.0.k)
        }
    }
    fn format_elem(&self, a: &u32) -> String {
        let d: Vec<String> = self.digits(*a).iter().map(|c| c.to_string()).collect();
        format!("[{}]@{}^{}", d.join(","), self.0.p, self.0.k)
    }
    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.0.q).collect())
    }
}

// ---- polynomials over F_p as plain residue vectors ----

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = numtheory::pow_mod(m[dm], p - 2, p);
    while r.len() > dm {
        let i = r.len() - 1;
        let c = numtheory::mul_mod(r[i], lead_inv, p);
        for (j, &mj) in m.iter().enumerate() {
            let k = i - dm + j;
            r[k] = (r[k] + p - numtheory::mul_mod(c, mj, p)) % p;
        }
        trim(&mut r);
    }
    r
}

fn fp_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + numtheory::mul_mod(x, y, p)) % p;
        }
    }
    fp_rem(&prod, m, p)
}

fn fp_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = fp_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_mulmod(&acc, &b, m, p);
        }
        b = fp_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin's irreducibility test for a monic `f` of degree `k` over `F_p`.
fn fp_is_irreducible(f: &[u64], p: u64) -> bool {
    let k = (f.len() - 1) as u64;
    if k == 1 {
        return true;
    }
    let x = vec![0u64, 1];
    // x^{p^j} mod f for j = 0..=k
    let mut frob = vec![fp_rem(&x, f, p)];
    for j in 1..=k as usize {
        let prev = frob[j - 1].clone();
        frob.push(fp_powmod(&prev, p, f, p));
    }
    let sub_x = |h: &[u64]| -> Vec<u64> {
        let mut h = h.to_vec();
        if h.len() < 2 {
            h.resize(2, 0);
        }
        h[1] = (h[1] + p - 1) % p;
        trim(&mut h);
        h
    };
    if !sub_x(&frob[k as usize]).is_empty() {
        return false;
    }
    for (r, _) in numtheory::factor(k) {
        let g = fp_gcd(f, &sub_x(&frob[(k / r) as usize]), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Coefficients `m_0..m_k` (with `m_k = 1`) of the smallest monic irreducible
/// polynomial of degree `k` over `F_p`, ordering candidates by comparing
/// `m_{k-1}` first, then `m_{k-2}`, and so on down to `m_0`.
pub fn find_irreducible_coeffs(p: u64, k: u32) -> Vec<u64> {
    assert!(numtheory::is_prime(p) && k >= 1);
    if k == 1 {
        return vec![0, 1];
    }
    let ku = k as usize;
    let mut digits = vec![0u64; ku];
    loop {
        let mut f = digits.clone();
        f.push(1);
        if f[0] != 0 && fp_is_irreducible(&f, p) {
            return f;
        }
        // increment, c_0 least significant
        let mut i = 0;
        loop {
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
            assert!(i < ku, "an irreducible polynomial of every degree exists");
        }
    }
}

/// [`find_irreducible_coeffs`] as a polynomial over the prime field.
pub fn find_irreducible(p: u64, k: u32) -> Result<Poly<FiniteField>, FieldError> {
    if !numtheory::is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if k == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let fp = FiniteField::prime(p)?;
    let c = find_irreducible_coeffs(p, k);
    Ok(Poly::new(&fp, c.iter().map(|&x| x as u32).collect()))
}

pub use numtheory::is_prime;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_in_f7() {
        let f7 = FiniteField::prime(7).unwrap();
        assert_eq!(f7.inv(&3), Some(5));
        // brute force
        let brute = (1..7u32).find(|x| (3 * x) % 7 == 1).unwrap();
        assert_eq!(brute, 5);
        assert_eq!(f7.inv(&0), None);
        assert_eq!(f7.inv(&1), Some(1));
    }

    #[test]
    fn small_irreducibles() {
        assert_eq!(find_irreducible_coeffs(2, 1), vec![0, 1]);
        assert_eq!(find_irreducible_coeffs(2, 2), vec![1, 1, 1]);
        assert_eq!(find_irreducible_coeffs(3, 2), vec![1, 0, 1]);
        assert_eq!(find_irreducible_coeffs(2, 3), vec![1, 1, 0, 1]);
    }

    #[test]
    fn frobenius_on_f4() {
        let f4 = FiniteField::new(2, 2).unwrap();
        let t = f4.generator_t();
        // t^2 = t + 1, encoded as digits [1, 1]
        assert_eq!(f4.frobenius(t), f4.from_digits(&[1, 1]));
        for a in 0..4 {
            assert_eq!(f4.frobenius(f4.frobenius(a)), a);
        }
        assert_eq!(f4.format_elem(&t), "[0,1]@2^2");
    }

    #[test]
    fn frobenius_fixes_exactly_prime_field() {
        for (p, k) in [(2u64, 3u32), (3, 2), (5, 2), (2, 6)] {
            let f = FiniteField::new(p, k).unwrap();
            for a in 0..f.order() {
                assert_eq!(f.frobenius(a) == a, f.in_prime_field(a), "{p}^{k} {a}");
            }
            for a in 0..f.order() {
                let mut x = a;
                for _ in 0..k {
                    x = f.frobenius(x);
                }
                assert_eq!(x, a);
            }
        }
    }

    #[test]
    fn large_field_rejected() {
        assert!(matches!(FiniteField::new(2, 40), Err(FieldError::FieldTooLarge(2, 40))));
        assert!(matches!(FiniteField::new(4, 1), Err(FieldError::NotPrime(4))));
    }
}
