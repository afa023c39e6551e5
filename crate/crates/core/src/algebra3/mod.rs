//! Algebras of degree 3 with unitary involution: `B = M_3(K)` for an étale
//! quadratic algebra `K` over a field `F`, with `tau(X) = conj(X)^t`.
//!
//! For split `K = F x F` an element of `B` is a pair of matrices `(a, b)`
//! and `tau(a, b) = (b^t, a^t)`, the exchange involution. For a field
//! `K = F[t]/(t^2 + c1 t + c0)` it is the conjugate-transpose involution on
//! Hermitian matrices.

mod cubic;

use std::array;

use serde_json::{json, Value};
use thiserror::Error;

use crate::field::linalg::{self, Mat};
use crate::field::{Field, FiniteField, Poly, Rationals};

pub use cubic::{
    orth_complement, search_generator, simultaneous_diagonalize, split_normalize, split_normalize_over, CubicSub,
    CubicType, FirstFactor, SplitNormalization,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Algebra3Error {
    #[error("{0} has no quadratic extension of the requested form")]
    NoQuadraticExtension(String),
    #[error("trace form on the cubic subalgebra is degenerate")]
    DegenerateSubalgebra,
    #[error("the cubic subalgebra does not split over {0}")]
    NotSplitOverBase(String),
    #[error("not a cubic étale subalgebra of Sym: {0}")]
    NotCubicSubalgebra(String),
    #[error("no symmetric generator with the requested characteristic polynomial")]
    NoGenerator,
    #[error("invalid algebra spec: {0}")]
    Spec(String),
}

/// `K` as pairs `(x, y)` of elements of `F`.
#[derive(Clone, Debug)]
pub enum EtaleQuadratic<F: Field> {
    /// `F x F`, componentwise.
    Split,
    /// `F[t]/(t^2 + c1 t + c0)`; `(x, y)` stands for `x + y t`.
    Field { c1: F::Elem, c0: F::Elem },
}

pub type KElem<E> = (E, E);

impl<F: Field> EtaleQuadratic<F> {
    pub fn is_split(&self) -> bool {
        matches!(self, EtaleQuadratic::Split)
    }

    pub fn zero(&self, f: &F) -> KElem<F::Elem> {
        (f.zero(), f.zero())
    }

    pub fn one(&self, f: &F) -> KElem<F::Elem> {
        self.embed(f, &f.one())
    }

    pub fn embed(&self, f: &F, x: &F::Elem) -> KElem<F::Elem> {
        match self {
            EtaleQuadratic::Split => (x.clone(), x.clone()),
            EtaleQuadratic::Field { .. } => (x.clone(), f.zero()),
        }
    }

    /// The element of `F` that `x` is, if any.
    pub fn to_base(&self, f: &F, x: &KElem<F::Elem>) -> Option<F::Elem> {
        match self {
            EtaleQuadratic::Split => (x.0 == x.1).then(|| x.0.clone()),
            EtaleQuadratic::Field { .. } => f.is_zero(&x.1).then(|| x.0.clone()),
        }
    }

    pub fn add(&self, f: &F, a: &KElem<F::Elem>, b: &KElem<F::Elem>) -> KElem<F::Elem> {
        (f.add(&a.0, &b.0), f.add(&a.1, &b.1))
    }

    pub fn neg(&self, f: &F, a: &KElem<F::Elem>) -> KElem<F::Elem> {
        (f.neg(&a.0), f.neg(&a.1))
    }

    pub fn sub(&self, f: &F, a: &KElem<F::Elem>, b: &KElem<F::Elem>) -> KElem<F::Elem> {
        (f.sub(&a.0, &b.0), f.sub(&a.1, &b.1))
    }

    pub fn mul(&self, f: &F, a: &KElem<F::Elem>, b: &KElem<F::Elem>) -> KElem<F::Elem> {
        match self {
            EtaleQuadratic::Split => (f.mul(&a.0, &b.0), f.mul(&a.1, &b.1)),
            EtaleQuadratic::Field { c1, c0 } => {
                let bd = f.mul(&a.1, &b.1);
                let x = f.sub(&f.mul(&a.0, &b.0), &f.mul(c0, &bd));
                let y = f.sub(&f.add(&f.mul(&a.0, &b.1), &f.mul(&a.1, &b.0)), &f.mul(c1, &bd));
                (x, y)
            }
        }
    }

    /// The nontrivial automorphism.
    pub fn conj(&self, f: &F, a: &KElem<F::Elem>) -> KElem<F::Elem> {
        match self {
            EtaleQuadratic::Split => (a.1.clone(), a.0.clone()),
            EtaleQuadratic::Field { c1, .. } => (f.sub(&a.0, &f.mul(c1, &a.1)), f.neg(&a.1)),
        }
    }

    /// `F`-basis element `omega_r` of `K`: the pair with a single 1 in
    /// position `r`.
    pub fn omega(&self, f: &F, r: usize) -> KElem<F::Elem> {
        if r == 0 {
            (f.one(), f.zero())
        } else {
            (f.zero(), f.one())
        }
    }

    pub fn describe(&self, f: &F) -> String {
        match self {
            EtaleQuadratic::Split => format!("{} x {}", f.name(), f.name()),
            EtaleQuadratic::Field { c1, c0 } => {
                format!("{}[t]/(t^2 + {} t + {})", f.name(), f.format_elem(c1), f.format_elem(c0))
            }
        }
    }
}

impl EtaleQuadratic<Rationals> {
    /// `Q(sqrt d)`.
    pub fn sqrt(d: i64) -> Result<Self, Algebra3Error> {
        let q = Rationals;
        let poly = Poly::new(&q, vec![q.from_i64(-d), q.zero(), q.one()]);
        if !q.roots(&poly).is_empty() {
            return Err(Algebra3Error::NoQuadraticExtension(format!("Q(sqrt {d})")));
        }
        Ok(EtaleQuadratic::Field { c1: q.zero(), c0: q.from_i64(-d) })
    }
}

impl EtaleQuadratic<FiniteField> {
    /// `F(sqrt d)` for odd characteristic.
    pub fn sqrt(f: &FiniteField, d: i64) -> Result<Self, Algebra3Error> {
        let dd = f.from_i64(d);
        let poly = Poly::new(f, vec![f.neg(&dd), f.zero(), f.one()]);
        if f.characteristic() == 2 || f.is_zero(&dd) || !f.roots(&poly).is_empty() {
            return Err(Algebra3Error::NoQuadraticExtension(format!("{}(sqrt {d})", f.name())));
        }
        Ok(EtaleQuadratic::Field { c1: f.zero(), c0: f.neg(&dd) })
    }

    /// The unramified quadratic extension of a prime field, by the first
    /// irreducible monic quadratic.
    pub fn unramified(f: &FiniteField) -> Result<Self, Algebra3Error> {
        if f.degree() != 1 {
            return Err(Algebra3Error::NoQuadraticExtension(format!("{} is not a prime field", f.name())));
        }
        let m = crate::field::find_irreducible_coeffs(f.p(), 2);
        Ok(EtaleQuadratic::Field { c1: m[1] as u32, c0: m[0] as u32 })
    }
}

/// A 3x3 matrix over `K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BElem<E>(pub [[KElem<E>; 3]; 3]);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgebraKind {
    SplitExchange,
    HermitianConj,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::SplitExchange => "split_exchange",
            AlgebraKind::HermitianConj => "hermitian",
        }
    }
}

/// `B = M_3(K)` with its unitary involution.
#[derive(Clone, Debug)]
pub struct StructureAlgebra<F: Field> {
    pub field: F,
    pub k: EtaleQuadratic<F>,
    pub kind: AlgebraKind,
}

/// Positions of the off-diagonal coordinates of `Sym`.
pub const OFF_DIAGONAL: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

pub fn build_split_exchange<F: Field>(field: F) -> StructureAlgebra<F> {
    StructureAlgebra { field, k: EtaleQuadratic::Split, kind: AlgebraKind::SplitExchange }
}

/// Hermitian model over the quadratic field extension `k`.
pub fn build_hermitian<F: Field>(field: F, k: EtaleQuadratic<F>) -> Result<StructureAlgebra<F>, Algebra3Error> {
    if k.is_split() {
        return Err(Algebra3Error::NoQuadraticExtension("split algebra given".into()));
    }
    Ok(StructureAlgebra { field, k, kind: AlgebraKind::HermitianConj })
}

impl<F: Field> StructureAlgebra<F> {
    pub fn f(&self) -> &F {
        &self.field
    }

    pub fn zero(&self) -> BElem<F::Elem> {
        let z = self.k.zero(&self.field);
        BElem(array::from_fn(|_| array::from_fn(|_| z.clone())))
    }

    pub fn one(&self) -> BElem<F::Elem> {
        self.scalar(&self.field.one())
    }

    pub fn scalar(&self, x: &F::Elem) -> BElem<F::Elem> {
        let mut m = self.zero();
        for i in 0..3 {
            m.0[i][i] = self.k.embed(&self.field, x);
        }
        m
    }

    /// Matrix unit `E_ij` (with entry 1 of `K`).
    pub fn unit(&self, i: usize, j: usize) -> BElem<F::Elem> {
        let mut m = self.zero();
        m.0[i][j] = self.k.one(&self.field);
        m
    }

    pub fn add(&self, a: &BElem<F::Elem>, b: &BElem<F::Elem>) -> BElem<F::Elem> {
        BElem(array::from_fn(|i| array::from_fn(|j| self.k.add(&self.field, &a.0[i][j], &b.0[i][j]))))
    }

    pub fn sub(&self, a: &BElem<F::Elem>, b: &BElem<F::Elem>) -> BElem<F::Elem> {
        BElem(array::from_fn(|i| array::from_fn(|j| self.k.sub(&self.field, &a.0[i][j], &b.0[i][j]))))
    }

    pub fn scale(&self, c: &F::Elem, a: &BElem<F::Elem>) -> BElem<F::Elem> {
        let ck = self.k.embed(&self.field, c);
        BElem(array::from_fn(|i| array::from_fn(|j| self.k.mul(&self.field, &ck, &a.0[i][j]))))
    }

    pub fn mul(&self, a: &BElem<F::Elem>, b: &BElem<F::Elem>) -> BElem<F::Elem> {
        let (f, k) = (&self.field, &self.k);
        BElem(array::from_fn(|i| {
            array::from_fn(|j| {
                (0..3).fold(k.zero(f), |acc, l| k.add(f, &acc, &k.mul(f, &a.0[i][l], &b.0[l][j])))
            })
        }))
    }

    pub fn tau(&self, a: &BElem<F::Elem>) -> BElem<F::Elem> {
        BElem(array::from_fn(|i| array::from_fn(|j| self.k.conj(&self.field, &a.0[j][i]))))
    }

    pub fn is_symmetric(&self, a: &BElem<F::Elem>) -> bool {
        self.tau(a) == *a
    }

    /// Reduced trace, in `K`.
    pub fn trd(&self, a: &BElem<F::Elem>) -> KElem<F::Elem> {
        let (f, k) = (&self.field, &self.k);
        (0..3).fold(k.zero(f), |acc, i| k.add(f, &acc, &a.0[i][i]))
    }

    fn minor(&self, a: &BElem<F::Elem>, r: [usize; 2], c: [usize; 2]) -> KElem<F::Elem> {
        let (f, k) = (&self.field, &self.k);
        k.sub(f, &k.mul(f, &a.0[r[0]][c[0]], &a.0[r[1]][c[1]]), &k.mul(f, &a.0[r[0]][c[1]], &a.0[r[1]][c[0]]))
    }

    /// The quadratic coefficient: sum of principal 2x2 minors.
    pub fn s(&self, a: &BElem<F::Elem>) -> KElem<F::Elem> {
        let (f, k) = (&self.field, &self.k);
        [[0, 1], [0, 2], [1, 2]]
            .iter()
            .fold(k.zero(f), |acc, rc| k.add(f, &acc, &self.minor(a, *rc, *rc)))
    }

    /// Reduced norm (determinant).
    pub fn nrd(&self, a: &BElem<F::Elem>) -> KElem<F::Elem> {
        let (f, k) = (&self.field, &self.k);
        let mut acc = k.zero(f);
        for j in 0..3 {
            let cof = self.cofactor(a, 0, j);
            acc = k.add(f, &acc, &k.mul(f, &a.0[0][j], &cof));
        }
        acc
    }

    fn cofactor(&self, a: &BElem<F::Elem>, i: usize, j: usize) -> KElem<F::Elem> {
        let rows: Vec<usize> = (0..3).filter(|&x| x != i).collect();
        let cols: Vec<usize> = (0..3).filter(|&x| x != j).collect();
        let m = self.minor(a, [rows[0], rows[1]], [cols[0], cols[1]]);
        if (i + j) % 2 == 1 {
            self.k.neg(&self.field, &m)
        } else {
            m
        }
    }

    /// `x^#`, the adjugate: `x^# = x^2 - Trd(x) x + S(x)` and
    /// `x x^# = Nrd(x)`.
    pub fn sharp(&self, a: &BElem<F::Elem>) -> BElem<F::Elem> {
        BElem(array::from_fn(|i| array::from_fn(|j| self.cofactor(a, j, i))))
    }

    /// `(Trd, S, Nrd)` of a symmetric element, in `F`.
    pub fn char_coeffs(&self, a: &BElem<F::Elem>) -> Option<[F::Elem; 3]> {
        let f = &self.field;
        Some([self.k.to_base(f, &self.trd(a))?, self.k.to_base(f, &self.s(a))?, self.k.to_base(f, &self.nrd(a))?])
    }

    /// Symmetric element with the given 9 coordinates: three diagonal
    /// entries in `F`, then for `(i, j)` in [`OFF_DIAGONAL`] the two
    /// coordinates of the `K`-entry `x_ij` (and `x_ji = conj(x_ij)`).
    pub fn sym_from_coords(&self, c: &[F::Elem]) -> BElem<F::Elem> {
        assert_eq!(c.len(), 9, "Sym has dimension 9");
        let f = &self.field;
        let mut m = self.zero();
        for i in 0..3 {
            m.0[i][i] = self.k.embed(f, &c[i]);
        }
        for (n, &(i, j)) in OFF_DIAGONAL.iter().enumerate() {
            let x = (c[3 + 2 * n].clone(), c[4 + 2 * n].clone());
            m.0[j][i] = self.k.conj(f, &x);
            m.0[i][j] = x;
        }
        m
    }

    /// Inverse of [`StructureAlgebra::sym_from_coords`]; `None` if `a` is
    /// not symmetric.
    pub fn sym_coords(&self, a: &BElem<F::Elem>) -> Option<Vec<F::Elem>> {
        if !self.is_symmetric(a) {
            return None;
        }
        let f = &self.field;
        let mut c = Vec::with_capacity(9);
        for i in 0..3 {
            c.push(self.k.to_base(f, &a.0[i][i])?);
        }
        for &(i, j) in &OFF_DIAGONAL {
            c.push(a.0[i][j].0.clone());
            c.push(a.0[i][j].1.clone());
        }
        Some(c)
    }

    /// The standard `F`-basis of `Sym`.
    pub fn sym_basis(&self) -> Vec<BElem<F::Elem>> {
        let f = &self.field;
        (0..9)
            .map(|n| {
                let c: Vec<F::Elem> = (0..9).map(|m| if m == n { f.one() } else { f.zero() }).collect();
                self.sym_from_coords(&c)
            })
            .collect()
    }

    /// `Trd(xy)`, which lies in `F` for symmetric `x`, `y`.
    pub fn trace_form(&self, x: &BElem<F::Elem>, y: &BElem<F::Elem>) -> F::Elem {
        self.k.to_base(&self.field, &self.trd(&self.mul(x, y))).expect("trace form of symmetric elements lies in F")
    }

    pub fn gram(&self, basis: &[BElem<F::Elem>]) -> Mat<F> {
        basis.iter().map(|x| basis.iter().map(|y| self.trace_form(x, y)).collect()).collect()
    }

    /// The `F`-basis of `B`: `omega_r E_ij` for `r` in `{0, 1}`, indexed
    /// `2 (3 i + j) + r`.
    pub fn basis(&self) -> Vec<BElem<F::Elem>> {
        let f = &self.field;
        (0..18)
            .map(|n| {
                let (ij, r) = (n / 2, n % 2);
                let mut m = self.zero();
                m.0[ij / 3][ij % 3] = self.k.omega(f, r);
                m
            })
            .collect()
    }

    pub fn coords(&self, a: &BElem<F::Elem>) -> Vec<F::Elem> {
        let mut c = Vec::with_capacity(18);
        for i in 0..3 {
            for j in 0..3 {
                c.push(a.0[i][j].0.clone());
                c.push(a.0[i][j].1.clone());
            }
        }
        c
    }

    /// `table[a][b]` = coordinates of `basis[a] * basis[b]`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<F::Elem>>> {
        let b = self.basis();
        b.iter().map(|x| b.iter().map(|y| self.coords(&self.mul(x, y))).collect()).collect()
    }

    /// Matrix of `tau` on [`StructureAlgebra::basis`], acting on columns.
    pub fn involution_matrix(&self) -> Mat<F> {
        let cols: Vec<Vec<F::Elem>> = self.basis().iter().map(|x| self.coords(&self.tau(x))).collect();
        linalg::transpose::<F>(&cols)
    }

    /// Associativity of the structure constants on all basis triples.
    pub fn verify_associativity(&self) -> bool {
        let f = &self.field;
        let t = self.structure_constants();
        let n = t.len();
        let prod = |x: &[F::Elem], b: usize| -> Vec<F::Elem> {
            let mut out = vec![f.zero(); n];
            for (a, xa) in x.iter().enumerate() {
                if f.is_zero(xa) {
                    continue;
                }
                for (c, v) in t[a][b].iter().enumerate() {
                    out[c] = f.add(&out[c], &f.mul(xa, v));
                }
            }
            out
        };
        for a in 0..n {
            for b in 0..n {
                let ab = &t[a][b];
                for c in 0..n {
                    let left = prod(ab, c);
                    let bc = &t[b][c];
                    let mut right = vec![f.zero(); n];
                    for (d, x) in bc.iter().enumerate() {
                        if f.is_zero(x) {
                            continue;
                        }
                        for (e, v) in t[a][d].iter().enumerate() {
                            right[e] = f.add(&right[e], &f.mul(x, v));
                        }
                    }
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `tau` is an involutive anti-automorphism which is the nontrivial
    /// automorphism on the centre.
    pub fn verify_involution(&self) -> bool {
        let b = self.basis();
        let anti = b
            .iter()
            .all(|x| b.iter().all(|y| self.tau(&self.mul(x, y)) == self.mul(&self.tau(y), &self.tau(x))));
        let invol = b.iter().all(|x| self.tau(&self.tau(x)) == *x);
        let f = &self.field;
        let w = self.k.omega(f, 1);
        let mut z = self.zero();
        for i in 0..3 {
            z.0[i][i] = w.clone();
        }
        let mut zc = self.zero();
        for i in 0..3 {
            zc.0[i][i] = self.k.conj(f, &w);
        }
        anti && invol && self.tau(&z) == zc && z != zc
    }

    pub fn describe(&self) -> Value {
        json!({"kind": self.kind.name(), "field": self.field.name(), "K": self.k.describe(&self.field)})
    }
}

/// `U (x) W*`: the symmetric element of the split model attached to the
/// line `U` in `V` and the line `W*` in `V*`, i.e. the matrix `u w^t`.
pub fn ideal_to_sym<F: Field>(alg: &StructureAlgebra<F>, u: &[F::Elem], w: &[F::Elem]) -> BElem<F::Elem> {
    assert!(alg.k.is_split(), "the Segre description is for the split model");
    let f = &alg.field;
    BElem(array::from_fn(|i| {
        array::from_fn(|j| {
            let a = f.mul(&u[i], &w[j]);
            (a.clone(), a)
        })
    }))
    .transpose_pair()
}

impl<E: Clone> BElem<E> {
    /// In the split model `(a, b)` is symmetric iff `b = a^t`; rewrite a
    /// pair `(a, a)` as `(a, a^t)`.
    fn transpose_pair(self) -> Self {
        let m = &self.0;
        BElem(array::from_fn(|i| array::from_fn(|j| (m[i][j].0.clone(), m[j][i].1.clone()))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f7() -> FiniteField {
        FiniteField::prime(7).unwrap()
    }

    fn random_elem<F: Field>(alg: &StructureAlgebra<F>, rng: &mut ChaCha8Rng) -> BElem<F::Elem> {
        let f = alg.f();
        BElem(array::from_fn(|_| array::from_fn(|_| (f.from_i64(rng.gen_range(-3..4)), f.from_i64(rng.gen_range(-3..4))))))
    }

    fn check_model<F: Field>(alg: &StructureAlgebra<F>) {
        let f = alg.f();
        assert!(alg.verify_involution());
        let basis = alg.sym_basis();
        assert!(basis.iter().all(|x| alg.is_symmetric(x)));
        assert!(!f.is_zero(&linalg::det(f, &alg.gram(&basis))));
        assert_eq!(alg.trace_form(&alg.one(), &alg.one()), f.from_i64(3));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let x = random_elem(alg, &mut rng);
            let xs = alg.sharp(&x);
            let n = alg.nrd(&x);
            let mut nn = alg.zero();
            for i in 0..3 {
                nn.0[i][i] = n.clone();
            }
            assert_eq!(alg.mul(&x, &xs), nn);
            assert_eq!(alg.mul(&xs, &x), nn);
            let mut cay = alg.mul(&x, &x);
            let t = alg.trd(&x);
            let s = alg.s(&x);
            for i in 0..3 {
                for j in 0..3 {
                    let tx = alg.k.mul(f, &t, &x.0[i][j]);
                    cay.0[i][j] = alg.k.sub(f, &cay.0[i][j], &tx);
                }
                cay.0[i][i] = alg.k.add(f, &cay.0[i][i], &s);
            }
            assert_eq!(cay, xs);
            let y = random_elem(alg, &mut rng);
            assert_eq!(alg.tau(&alg.mul(&x, &y)), alg.mul(&alg.tau(&y), &alg.tau(&x)));
        }
    }

    #[test]
    fn split_model() {
        let alg = build_split_exchange(Rationals);
        check_model(&alg);
        assert_eq!(alg.basis().len(), 18);
        assert!(alg.verify_associativity());
        let a = alg.sym_from_coords(&(1..=9).map(Rational::from_int).collect::<Vec<_>>());
        assert_eq!(a.0[0][1], (Rational::from_int(4), Rational::from_int(5)));
        assert_eq!(a.0[1][0], (Rational::from_int(5), Rational::from_int(4)));
    }

    #[test]
    fn hermitian_models() {
        for p in [2u64, 3, 5, 7] {
            let f = FiniteField::prime(p).unwrap();
            let alg = build_hermitian(f.clone(), EtaleQuadratic::unramified(&f).unwrap()).unwrap();
            check_model(&alg);
            let split = build_split_exchange(f);
            check_model(&split);
        }
        let q = build_hermitian(Rationals, EtaleQuadratic::<Rationals>::sqrt(-1).unwrap()).unwrap();
        check_model(&q);
        assert!(EtaleQuadratic::<Rationals>::sqrt(4).is_err());
        assert!(EtaleQuadratic::<FiniteField>::sqrt(&f7(), 2).is_err());
        assert!(EtaleQuadratic::<FiniteField>::sqrt(&f7(), 3).is_ok());
        let d = q.sym_from_coords(&[1, 2, 3, 0, 0, 0, 0, 0, 0].map(Rational::from_int));
        assert_eq!(q.tau(&d), d);
    }

    #[test]
    fn sharp_examples() {
        let alg = build_split_exchange(f7());
        assert_eq!(alg.sharp(&alg.one()), alg.one());
        assert_eq!(alg.sharp(&alg.unit(0, 0)), alg.zero());
    }

    #[test]
    fn segre() {
        let f = FiniteField::prime(2).unwrap();
        let alg = build_split_exchange(f.clone());
        let e = |i: usize| -> Vec<u32> { (0..3).map(|j| (i == j) as u32).collect() };
        let x = ideal_to_sym(&alg, &e(0), &e(1));
        assert!(alg.is_symmetric(&x));
        assert_eq!(alg.sym_coords(&x).unwrap(), vec![0, 0, 0, 1, 0, 0, 0, 0, 0]);
        let vecs: Vec<Vec<u32>> = (1..8u32).map(|n| (0..3).map(|b| (n >> b) & 1).collect()).collect();
        let mut seen = std::collections::HashSet::new();
        for u in &vecs {
            for w in &vecs {
                let s = ideal_to_sym(&alg, u, w);
                assert_eq!(alg.sharp(&s), alg.zero());
                seen.insert(s);
            }
        }
        assert_eq!(seen.len(), 49);
    }
}
