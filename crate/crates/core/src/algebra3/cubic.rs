//! Cubic étale subalgebras of `Sym(B, tau)`, their orthogonal complements and
//! split normalisation.

use super::{Algebra3Error, BElem, StructureAlgebra};
use crate::field::linalg::{self, Mat};
use crate::field::{Field, FiniteField, Poly};

/// Isomorphism type of a cubic étale algebra over a finite field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CubicType {
    /// `F x F x F`
    Split,
    /// `F x F'` with `F'/F` quadratic
    Quadratic,
    /// a cubic field
    Cubic,
}

impl CubicType {
    pub fn name(self) -> &'static str {
        match self {
            CubicType::Split => "split",
            CubicType::Quadratic => "quadratic",
            CubicType::Cubic => "cubic",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "split" => Some(CubicType::Split),
            "quadratic" => Some(CubicType::Quadratic),
            "cubic" => Some(CubicType::Cubic),
            _ => None,
        }
    }

    /// Degrees of the field factors.
    pub fn factor_degrees(self) -> &'static [u32] {
        match self {
            CubicType::Split => &[1, 1, 1],
            CubicType::Quadratic => &[1, 2],
            CubicType::Cubic => &[3],
        }
    }
}

/// A cubic étale subalgebra `L` of `Sym(B, tau)`, by an `F`-basis whose
/// first element is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicSub<E> {
    basis: Vec<BElem<E>>,
}

fn sym_rows<F: Field>(alg: &StructureAlgebra<F>, xs: &[BElem<F::Elem>]) -> Result<Mat<F>, Algebra3Error> {
    xs.iter()
        .map(|x| alg.sym_coords(x).ok_or_else(|| Algebra3Error::NotCubicSubalgebra("element is not symmetric".into())))
        .collect()
}

impl<E: Clone + Eq> CubicSub<E> {
    pub fn basis(&self) -> &[BElem<E>] {
        &self.basis
    }
}

impl<E: Clone + Eq + std::hash::Hash + std::fmt::Debug> CubicSub<E> {
    /// The diagonal matrices.
    pub fn diagonal<F: Field<Elem = E>>(alg: &StructureAlgebra<F>) -> Self {
        let f = alg.f();
        let d = |i: usize| {
            let mut c = vec![f.zero(); 9];
            c[i] = f.one();
            alg.sym_from_coords(&c)
        };
        CubicSub { basis: vec![alg.one(), d(0), d(1)] }
    }

    /// `span{1, u, u^2}`.
    pub fn from_generator<F: Field<Elem = E>>(alg: &StructureAlgebra<F>, u: &BElem<E>) -> Result<Self, Algebra3Error> {
        let u2 = alg.mul(u, u);
        Self::from_basis(alg, vec![alg.one(), u.clone(), u2])
    }

    /// Checks that `basis` spans a commutative subalgebra of `Sym` of
    /// dimension 3 containing 1, with nondegenerate trace form.
    pub fn from_basis<F: Field<Elem = E>>(alg: &StructureAlgebra<F>, basis: Vec<BElem<E>>) -> Result<Self, Algebra3Error> {
        let f = alg.f();
        if basis.len() != 3 || basis[0] != alg.one() {
            return Err(Algebra3Error::NotCubicSubalgebra("basis must be 1 followed by two elements".into()));
        }
        let rows = sym_rows(alg, &basis)?;
        if linalg::rank(f, &rows) != 3 {
            return Err(Algebra3Error::NotCubicSubalgebra("basis is linearly dependent".into()));
        }
        let cols = linalg::transpose::<F>(&rows);
        for x in &basis {
            for y in &basis {
                let xy = alg.mul(x, y);
                if xy != alg.mul(y, x) {
                    return Err(Algebra3Error::NotCubicSubalgebra("not commutative".into()));
                }
                let c = alg
                    .sym_coords(&xy)
                    .ok_or_else(|| Algebra3Error::NotCubicSubalgebra("product is not symmetric".into()))?;
                if linalg::solve(f, &cols, &c).is_none() {
                    return Err(Algebra3Error::NotCubicSubalgebra("not closed under multiplication".into()));
                }
            }
        }
        let sub = CubicSub { basis };
        if f.is_zero(&linalg::det(f, &alg.gram(&sub.basis))) {
            return Err(Algebra3Error::DegenerateSubalgebra);
        }
        Ok(sub)
    }

    /// `Sym` coordinates of the basis, one row per element.
    pub fn coord_rows<F: Field<Elem = E>>(&self, alg: &StructureAlgebra<F>) -> Mat<F> {
        sym_rows(alg, &self.basis).expect("basis is symmetric")
    }

    pub fn element<F: Field<Elem = E>>(&self, alg: &StructureAlgebra<F>, c: &[E]) -> BElem<E> {
        self.basis
            .iter()
            .zip(c)
            .fold(alg.zero(), |acc, (b, x)| alg.add(&acc, &alg.scale(x, b)))
    }
}

impl CubicSub<u32> {
    /// Type of `L` over a finite field, from the number of idempotents
    /// (`2^r` for `r` field factors).
    pub fn cubic_type(&self, alg: &StructureAlgebra<FiniteField>) -> CubicType {
        let f = alg.f();
        let elems = f.elements().expect("finite");
        let mut idem = 0;
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    let x = self.element(alg, &[*a, *b, *c]);
                    if alg.mul(&x, &x) == x {
                        idem += 1;
                    }
                }
            }
        }
        match idem {
            8 => CubicType::Split,
            4 => CubicType::Quadratic,
            2 => CubicType::Cubic,
            n => unreachable!("cubic étale algebra with {n} idempotents"),
        }
    }
}

/// The first symmetric element, in lexicographic order of its `Sym`
/// coordinates, whose characteristic polynomial is the monic cubic with
/// low-to-high coefficients `target` and which generates a cubic étale
/// subalgebra. Coordinates range over `values`.
pub fn search_generator<F: Field>(
    alg: &StructureAlgebra<F>,
    target: &[F::Elem; 3],
    values: &[F::Elem],
    limit: u64,
) -> Result<BElem<F::Elem>, Algebra3Error> {
    let f = alg.f();
    let n = values.len();
    let mut idx = [0usize; 9];
    let mut tried = 0u64;
    loop {
        let c: Vec<F::Elem> = idx.iter().map(|&i| values[i].clone()).collect();
        let u = alg.sym_from_coords(&c);
        if let Some([t, s, d]) = alg.char_coeffs(&u) {
            if f.neg(&d) == target[0] && s == target[1] && f.neg(&t) == target[2] && CubicSub::from_generator(alg, &u).is_ok() {
                return Ok(u);
            }
        }
        tried += 1;
        if tried >= limit {
            return Err(Algebra3Error::NoGenerator);
        }
        let mut k = 8;
        loop {
            idx[k] += 1;
            if idx[k] < n {
                break;
            }
            idx[k] = 0;
            if k == 0 {
                return Err(Algebra3Error::NoGenerator);
            }
            k -= 1;
        }
    }
}

/// `L^perp` in `Sym` for the trace form, as 6 symmetric elements (from the
/// reduced row echelon kernel).
pub fn orth_complement<F: Field>(alg: &StructureAlgebra<F>, l: &CubicSub<F::Elem>) -> Result<Vec<BElem<F::Elem>>, Algebra3Error> {
    let f = alg.f();
    if f.is_zero(&linalg::det(f, &alg.gram(l.basis()))) {
        return Err(Algebra3Error::DegenerateSubalgebra);
    }
    let sym = alg.sym_basis();
    let m: Mat<F> = l
        .basis()
        .iter()
        .map(|x| sym.iter().map(|e| alg.trace_form(x, e)).collect())
        .collect();
    let ker = linalg::kernel(f, &m, 9);
    debug_assert_eq!(ker.len(), 6);
    Ok(ker.iter().map(|c| alg.sym_from_coords(c)).collect())
}

/// `x^3 - t x^2 + s x - d` for a 3x3 matrix.
fn char_poly3<F: Field>(f: &F, a: &Mat<F>) -> Poly<F> {
    let t = f.add(&f.add(&a[0][0], &a[1][1]), &a[2][2]);
    let minor = |i: usize, j: usize| f.sub(&f.mul(&a[i][i], &a[j][j]), &f.mul(&a[i][j], &a[j][i]));
    let s = f.add(&f.add(&minor(0, 1), &minor(0, 2)), &minor(1, 2));
    let d = linalg::det(f, a);
    Poly::new(f, vec![f.neg(&d), s, f.neg(&t), f.one()])
}

/// A basis of common eigenvectors of commuting 3x3 matrices, as the
/// columns of `P`, so that `P^-1 A P` is diagonal for each `A`.
pub fn simultaneous_diagonalize<F: Field>(f: &F, mats: &[Mat<F>]) -> Result<Mat<F>, Algebra3Error> {
    let not_split = || Algebra3Error::NotSplitOverBase(f.name());
    let mut spaces: Vec<Vec<Vec<F::Elem>>> = vec![linalg::identity(f, 3)];
    for a in mats {
        let roots = f.roots(&char_poly3(f, a));
        let mut next = Vec::new();
        for w in &spaces {
            let mut total = 0;
            for lam in &roots {
                let mut shifted = a.clone();
                for (i, row) in shifted.iter_mut().enumerate() {
                    row[i] = f.sub(&row[i], lam);
                }
                // columns of W are the vectors of w
                let wcols = linalg::transpose::<F>(w);
                let aw = linalg::mul(f, &shifted, &wcols);
                let ker = linalg::kernel(f, &aw, w.len());
                if ker.is_empty() {
                    continue;
                }
                let vecs: Vec<Vec<F::Elem>> = ker
                    .iter()
                    .map(|c| {
                        (0..3)
                            .map(|r| f.sum(c.iter().zip(w).map(|(ci, wv)| f.mul(ci, &wv[r])).collect::<Vec<_>>().iter()))
                            .collect()
                    })
                    .collect();
                total += vecs.len();
                next.push(vecs);
            }
            if total != w.len() {
                return Err(not_split());
            }
        }
        spaces = next;
    }
    if spaces.len() != 3 {
        return Err(not_split());
    }
    let cols: Vec<Vec<F::Elem>> = spaces.into_iter().map(|mut s| s.remove(0)).collect();
    Ok(linalg::transpose::<F>(&cols))
}

/// Certificate that `L (x) E` is conjugate to the diagonal subalgebra:
/// `P^-1 sigma(l) P` is diagonal for each basis element `l`, where `sigma`
/// is the first-factor projection `B (x) E -> M_3(E)`.
#[derive(Clone, Debug)]
pub struct SplitNormalization<G: Field> {
    pub field: G,
    pub p: Mat<G>,
    pub p_inv: Mat<G>,
    pub images: Vec<Mat<G>>,
}

impl<G: Field> SplitNormalization<G> {
    fn build(field: G, images: Vec<Mat<G>>) -> Result<Self, Algebra3Error> {
        let p = simultaneous_diagonalize(&field, &images)?;
        let p_inv = linalg::inverse(&field, &p).expect("eigenvector basis is invertible");
        let cert = SplitNormalization { field, p, p_inv, images };
        debug_assert!(cert.verify());
        Ok(cert)
    }

    pub fn conjugate(&self, a: &Mat<G>) -> Mat<G> {
        let f = &self.field;
        linalg::mul(f, &linalg::mul(f, &self.p_inv, a), &self.p)
    }

    pub fn verify(&self) -> bool {
        let f = &self.field;
        let id = linalg::identity(f, 3);
        linalg::mul(f, &self.p, &self.p_inv) == id
            && self.images.iter().all(|a| {
                let d = self.conjugate(a);
                (0..3).all(|i| (0..3).all(|j| i == j || f.is_zero(&d[i][j])))
            })
    }
}

/// Split normalisation over the base field; needs split `K`.
pub fn split_normalize<F: Field>(alg: &StructureAlgebra<F>, l: &CubicSub<F::Elem>) -> Result<SplitNormalization<F>, Algebra3Error> {
    if !alg.k.is_split() {
        return Err(Algebra3Error::NotSplitOverBase(format!("{} (K is a field)", alg.f().name())));
    }
    let images = l.basis().iter().map(|x| first_factor(x, |a| a.0.clone())).collect();
    SplitNormalization::build(alg.f().clone(), images)
}

fn first_factor<E, G>(x: &BElem<E>, sigma: impl Fn(&(E, E)) -> G) -> Vec<Vec<G>> {
    x.0.iter().map(|row| row.iter().map(&sigma).collect()).collect()
}

/// The embedding `sigma: B (x) E -> M_3(E)` for `B` over a prime field and
/// `E` an extension splitting `K`.
#[derive(Clone, Debug)]
pub struct FirstFactor {
    pub e: FiniteField,
    /// Image of the generator `t` of `K`; `None` when `K` is split.
    pub root: Option<u32>,
}

impl FirstFactor {
    pub fn new(alg: &StructureAlgebra<FiniteField>, e: &FiniteField) -> Result<Self, Algebra3Error> {
        if alg.f().degree() != 1 || alg.f().p() != e.p() {
            return Err(Algebra3Error::Spec("base change needs a prime base field".into()));
        }
        let root = match &alg.k {
            super::EtaleQuadratic::Split => None,
            super::EtaleQuadratic::Field { c1, c0 } => {
                let poly = Poly::new(e, vec![*c0, *c1, 1]);
                Some(
                    *e.roots(&poly)
                        .first()
                        .ok_or_else(|| Algebra3Error::NotSplitOverBase(format!("{} (K does not embed)", e.name())))?,
                )
            }
        };
        Ok(FirstFactor { e: e.clone(), root })
    }

    /// Prime-field elements keep their index in any extension.
    pub fn apply(&self, x: &BElem<u32>) -> Mat<FiniteField> {
        let e = &self.e;
        first_factor(x, |a| match self.root {
            None => a.0,
            Some(r) => e.add(&a.0, &e.mul(&a.1, &r)),
        })
    }
}

/// Split normalisation after base change to the finite field `e`.
pub fn split_normalize_over(
    alg: &StructureAlgebra<FiniteField>,
    l: &CubicSub<u32>,
    e: &FiniteField,
) -> Result<SplitNormalization<FiniteField>, Algebra3Error> {
    let sigma = FirstFactor::new(alg, e)?;
    let images = l.basis().iter().map(|x| sigma.apply(x)).collect();
    SplitNormalization::build(e.clone(), images)
}

#[cfg(test)]
mod tests {
    use super::super::{build_hermitian, build_split_exchange, EtaleQuadratic};
    use super::*;
    use crate::field::{Rational, Rationals};

    #[test]
    fn diagonal_complement() {
        let alg = build_split_exchange(Rationals);
        let l = CubicSub::diagonal(&alg);
        let perp = orth_complement(&alg, &l).unwrap();
        assert_eq!(perp.len(), 6);
        for x in &perp {
            for i in 0..3 {
                assert_eq!(x.0[i][i], (Rational::from_int(0), Rational::from_int(0)));
            }
        }
        let mut rows = l.coord_rows(&alg);
        rows.extend(perp.iter().map(|x| alg.sym_coords(x).unwrap()));
        assert_eq!(linalg::rank(&Rationals, &rows), 9);
    }

    #[test]
    fn companion_normalises() {
        let alg = build_split_exchange(Rationals);
        // companion of (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
        let c: Vec<Vec<i64>> = vec![vec![0, 0, 6], vec![1, 0, -11], vec![0, 1, 6]];
        let mut u = alg.zero();
        for i in 0..3 {
            for j in 0..3 {
                u.0[i][j] = (Rational::from_int(c[i][j]), Rational::from_int(c[j][i]));
            }
        }
        assert!(alg.is_symmetric(&u));
        let l = CubicSub::from_generator(&alg, &u).unwrap();
        let cert = split_normalize(&alg, &l).unwrap();
        assert!(cert.verify());
        let d = cert.conjugate(&cert.images[1]);
        let mut eig: Vec<Rational> = (0..3).map(|i| d[i][i].clone()).collect();
        eig.sort();
        assert_eq!(eig, vec![Rational::from_int(1), Rational::from_int(2), Rational::from_int(3)]);
    }

    #[test]
    fn irreducible_cubic_over_f2() {
        let f2 = FiniteField::prime(2).unwrap();
        let alg = build_split_exchange(f2.clone());
        let u = search_generator(&alg, &[1, 1, 0], &[0, 1], 1 << 9).unwrap();
        let l = CubicSub::from_generator(&alg, &u).unwrap();
        assert_eq!(l.cubic_type(&alg), CubicType::Cubic);
        assert!(matches!(split_normalize(&alg, &l), Err(Algebra3Error::NotSplitOverBase(_))));
        let f8 = FiniteField::new(2, 3).unwrap();
        assert!(split_normalize_over(&alg, &l, &f8).unwrap().verify());
        assert_eq!(CubicSub::diagonal(&alg).cubic_type(&alg), CubicType::Split);
    }

    #[test]
    fn hermitian_types() {
        for p in [2u64, 3] {
            let f = FiniteField::prime(p).unwrap();
            let alg = build_hermitian(f.clone(), EtaleQuadratic::unramified(&f).unwrap()).unwrap();
            let vals = f.elements().unwrap();
            let cubic = crate::field::find_irreducible_coeffs(p, 3);
            let quad = crate::field::find_irreducible_coeffs(p, 2);
            // x * (x^2 + a x + b)
            let qt = [0, quad[0] as u32, quad[1] as u32];
            let ct = [cubic[0] as u32, cubic[1] as u32, cubic[2] as u32];
            for (t, ty) in [(ct, CubicType::Cubic), (qt, CubicType::Quadratic)] {
                let u = search_generator(&alg, &t, &vals, 1 << 20).unwrap();
                let l = CubicSub::from_generator(&alg, &u).unwrap();
                assert_eq!(l.cubic_type(&alg), ty);
                assert_eq!(orth_complement(&alg, &l).unwrap().len(), 6);
                assert!(split_normalize(&alg, &l).is_err());
                let e = FiniteField::new(p, 6).unwrap();
                assert!(split_normalize_over(&alg, &l, &e).unwrap().verify());
            }
            let d = CubicSub::diagonal(&alg);
            assert_eq!(d.cubic_type(&alg), CubicType::Split);
        }
    }
}
