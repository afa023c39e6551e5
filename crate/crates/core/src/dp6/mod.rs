//! The del Pezzo surface of degree 6 attached to `(B, tau, L)`: the zero
//! locus of `x -> x^#` on `P(F + L^perp)` inside `P(Sym(B, tau))`.

mod count;
mod lines;

use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra3::{
    build_hermitian, build_split_exchange, orth_complement, search_generator, Algebra3Error, AlgebraKind, BElem,
    CubicSub, CubicType, EtaleQuadratic, StructureAlgebra,
};
use crate::field::linalg::{self, Mat};
use crate::field::{find_irreducible_coeffs, Field, FieldError, FiniteField, Rationals};

pub use count::{
    count_points, count_surface_points, projective_points, predicted_count, rational_points, split_model_points, verify_split_equivalence,
    PointCountRecord, DEFAULT_POINT_BUDGET, DEFAULT_SPLIT_BUDGET,
};
pub use lines::{
    expected_frobenius_class, find_lines, frobenius_on_lines, lemma_number_check, lemma_number_check_flags,
    torus_count_check, LineConfig, Observation, TorusRecord,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Dp6Error {
    #[error(transparent)]
    Algebra(#[from] Algebra3Error),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("enumeration of {points} points exceeds the budget of {budget}")]
    EnumerationBudgetExceeded { points: u128, budget: u128 },
    #[error("found {0} distinct lines instead of 6")]
    WrongLineCount(usize),
    #[error("line configuration is not a hexagon: {0}")]
    NotHexagon(String),
    #[error("Frobenius does not act as a hexagon automorphism")]
    NotAnAutomorphism,
    #[error("inconsistent observation: {0}")]
    InconsistentObservation(String),
    #[error("operation needs a surface over a finite prime field")]
    NotFinite,
    #[error("invalid surface spec: {0}")]
    Spec(String),
}

/// A quadratic form `sum c_kl x_k x_l` (`k <= l`), nonzero terms only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadric<E> {
    pub terms: Vec<(usize, usize, E)>,
}

impl<E: Clone> Quadric<E> {
    pub fn eval<F: Field<Elem = E>>(&self, f: &F, x: &[E]) -> E {
        self.terms
            .iter()
            .fold(f.zero(), |acc, (k, l, c)| f.add(&acc, &f.mul(c, &f.mul(&x[*k], &x[*l]))))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub k: String,
    pub kind: AlgebraKind,
    pub l: String,
}

#[derive(Clone, Debug)]
pub struct DP6Surface<F: Field> {
    pub alg: StructureAlgebra<F>,
    pub l: CubicSub<F::Elem>,
    pub labels: Vec<String>,
    /// `1` followed by a basis of `L^perp`.
    pub basis: Vec<BElem<F::Elem>>,
    /// The 9 `Sym` coordinates of `x^#`.
    pub quadrics: Vec<Quadric<F::Elem>>,
    pub provenance: Provenance,
}

pub const COORDINATE_LABELS: [&str; 7] = ["lambda", "m1", "m2", "m3", "m4", "m5", "m6"];

pub fn build_surface<F: Field>(alg: &StructureAlgebra<F>, l: &CubicSub<F::Elem>, l_desc: &str) -> Result<DP6Surface<F>, Dp6Error> {
    let f = alg.f();
    let mut basis = vec![alg.one()];
    basis.extend(orth_complement(alg, l)?);
    let sharp: Vec<Vec<F::Elem>> = basis.iter().map(|v| alg.sym_coords(&alg.sharp(v)).expect("x^# is symmetric")).collect();
    let mut terms: Vec<Vec<(usize, usize, F::Elem)>> = vec![Vec::new(); 9];
    for k in 0..7 {
        for (m, c) in sharp[k].iter().enumerate() {
            if !f.is_zero(c) {
                terms[m].push((k, k, c.clone()));
            }
        }
        for l2 in k + 1..7 {
            let s = alg.sym_coords(&alg.sharp(&alg.add(&basis[k], &basis[l2]))).expect("symmetric");
            for m in 0..9 {
                let c = f.sub(&f.sub(&s[m], &sharp[k][m]), &sharp[l2][m]);
                if !f.is_zero(&c) {
                    terms[m].push((k, l2, c));
                }
            }
        }
    }
    Ok(DP6Surface {
        alg: alg.clone(),
        l: l.clone(),
        labels: COORDINATE_LABELS.iter().map(|s| s.to_string()).collect(),
        basis,
        quadrics: terms.into_iter().map(|terms| Quadric { terms }).collect(),
        provenance: Provenance { k: alg.k.describe(f), kind: alg.kind, l: l_desc.to_string() },
    })
}

impl<F: Field> DP6Surface<F> {
    pub fn field(&self) -> &F {
        self.alg.f()
    }

    pub fn contains(&self, x: &[F::Elem]) -> bool {
        let f = self.field();
        self.quadrics.iter().all(|q| f.is_zero(&q.eval(f, x)))
    }

    /// The symmetric element with coordinates `x`.
    pub fn point_element(&self, x: &[F::Elem]) -> BElem<F::Elem> {
        let alg = &self.alg;
        self.basis.iter().zip(x).fold(alg.zero(), |acc, (b, c)| alg.add(&acc, &alg.scale(c, b)))
    }

    /// Coordinates of a symmetric element of `F + L^perp`.
    pub fn coordinates_of(&self, x: &BElem<F::Elem>) -> Option<Vec<F::Elem>> {
        let rows: Mat<F> = self.basis.iter().map(|b| self.alg.sym_coords(b).expect("symmetric")).collect();
        linalg::solve(self.field(), &linalg::transpose::<F>(&rows), &self.alg.sym_coords(x)?)
    }

    pub fn to_json(&self) -> Value {
        let f = self.field();
        let quadrics: Vec<Value> = self
            .quadrics
            .iter()
            .map(|q| {
                Value::Array(
                    q.terms
                        .iter()
                        .map(|(k, l, c)| json!({"monomial": format!("{}*{}", self.labels[*k], self.labels[*l]), "coeff": f.format_elem(c)}))
                        .collect(),
                )
            })
            .collect();
        let basis: Vec<Value> = self
            .basis
            .iter()
            .map(|b| Value::Array(self.alg.sym_coords(b).unwrap().iter().map(|c| Value::String(f.format_elem(c))).collect()))
            .collect();
        json!({
            "field": f.name(),
            "provenance": {"K": self.provenance.k, "kind": self.provenance.kind.name(), "L": self.provenance.l},
            "coordinates": self.labels,
            "basis_sym_coords": basis,
            "quadrics": quadrics,
        })
    }
}

/// A surface in the standard finite-field corpus: base field `F_p`, `K`
/// split or the unramified quadratic extension, `L` of the given type.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceModel {
    pub p: u64,
    pub k_inert: bool,
    pub l: CubicType,
}

impl SurfaceModel {
    pub fn id(&self) -> String {
        format!("F{}-K{}-L{}", self.p, if self.k_inert { "inert" } else { "split" }, self.l.name())
    }

    /// Short names `split`, `K-inert`, `L-quadratic`, `L-cubic`,
    /// `K-inert-L-quadratic`, `K-inert-L-cubic`.
    pub fn from_name(name: &str, p: u64) -> Result<Self, Dp6Error> {
        let (k_inert, rest) = match name {
            "split" => (false, ""),
            "K-inert" => (true, ""),
            _ => match name.strip_prefix("K-inert-") {
                Some(r) => (true, r),
                None => (false, name),
            },
        };
        let l = if rest.is_empty() {
            CubicType::Split
        } else {
            rest.strip_prefix("L-")
                .and_then(CubicType::parse)
                .ok_or_else(|| Dp6Error::Spec(format!("unknown model {name}")))?
        };
        if !crate::numtheory::is_prime(p) {
            return Err(Dp6Error::Spec(format!("q = {p} must be prime")));
        }
        Ok(SurfaceModel { p, k_inert, l })
    }

    pub fn name(&self) -> String {
        match (self.k_inert, self.l) {
            (false, CubicType::Split) => "split".into(),
            (true, CubicType::Split) => "K-inert".into(),
            (false, l) => format!("L-{}", l.name()),
            (true, l) => format!("K-inert-L-{}", l.name()),
        }
    }

    pub fn algebra(&self) -> Result<StructureAlgebra<FiniteField>, Dp6Error> {
        let f = FiniteField::prime(self.p)?;
        Ok(if self.k_inert {
            build_hermitian(f.clone(), EtaleQuadratic::unramified(&f)?)?
        } else {
            build_split_exchange(f)
        })
    }

    /// Characteristic polynomial (low-to-high, monic) used for `L`:
    /// `x (x^2 + a x + b)` or an irreducible cubic.
    pub fn l_minpoly(&self) -> Option<[u32; 3]> {
        match self.l {
            CubicType::Split => None,
            CubicType::Quadratic => {
                let g = find_irreducible_coeffs(self.p, 2);
                Some([0, g[0] as u32, g[1] as u32])
            }
            CubicType::Cubic => {
                let g = find_irreducible_coeffs(self.p, 3);
                Some([g[0] as u32, g[1] as u32, g[2] as u32])
            }
        }
    }

    pub fn build(&self) -> Result<DP6Surface<FiniteField>, Dp6Error> {
        let alg = self.algebra()?;
        let l = match self.l_minpoly() {
            None => CubicSub::diagonal(&alg),
            Some(t) => {
                let vals = alg.f().elements().expect("finite");
                let u = search_generator(&alg, &t, &vals, self.p.pow(9))?;
                CubicSub::from_generator(&alg, &u)?
            }
        };
        build_surface(&alg, &l, self.l.name())
    }

    /// Degree of the smallest extension splitting both `K` and `L`.
    pub fn splitting_degree(&self) -> u32 {
        let k = if self.k_inert { 2 } else { 1 };
        self.l.factor_degrees().iter().fold(k, |acc, &d| crate::numtheory::lcm(acc as u64, d as u64) as u32)
    }
}

/// The twelve surfaces: `K` in {split, inert}, `L` in {split, quadratic,
/// cubic}, `p` in {2, 3}.
pub fn standard_corpus() -> Vec<SurfaceModel> {
    let mut out = Vec::new();
    for p in [2, 3] {
        for k_inert in [false, true] {
            for l in [CubicType::Split, CubicType::Quadratic, CubicType::Cubic] {
                out.push(SurfaceModel { p, k_inert, l });
            }
        }
    }
    out
}

/// A surface built from `{"kind", "field", "d", "L_generator_minpoly"}`.
#[derive(Clone, Debug)]
pub enum AnySurface {
    Rational(DP6Surface<Rationals>),
    Finite(DP6Surface<FiniteField>),
}

impl AnySurface {
    pub fn to_json(&self) -> Value {
        match self {
            AnySurface::Rational(s) => s.to_json(),
            AnySurface::Finite(s) => s.to_json(),
        }
    }
}

fn companion<F: Field>(alg: &StructureAlgebra<F>, c: &[F::Elem; 3]) -> BElem<F::Elem> {
    let f = alg.f();
    let mut a: Vec<Vec<F::Elem>> = vec![vec![f.zero(); 3]; 3];
    a[1][0] = f.one();
    a[2][1] = f.one();
    for i in 0..3 {
        a[i][2] = f.neg(&c[i]);
    }
    let mut u = alg.zero();
    for i in 0..3 {
        for j in 0..3 {
            u.0[i][j] = (a[i][j].clone(), a[j][i].clone());
        }
    }
    u
}

fn surface_from_parts<F: Field>(alg: StructureAlgebra<F>, minpoly: Option<[i64; 3]>, values: &[F::Elem]) -> Result<DP6Surface<F>, Dp6Error> {
    let f = alg.f().clone();
    let (l, desc) = match minpoly {
        None => (CubicSub::diagonal(&alg), "diagonal".to_string()),
        Some(c) => {
            let t = c.map(|x| f.from_i64(x));
            let u = if alg.k.is_split() {
                companion(&alg, &t)
            } else {
                search_generator(&alg, &t, values, (values.len() as u64).pow(9))?
            };
            (CubicSub::from_generator(&alg, &u)?, format!("F[u], charpoly coefficients {c:?}"))
        }
    };
    build_surface(&alg, &l, &desc)
}

pub fn surface_from_spec(v: &Value) -> Result<AnySurface, Dp6Error> {
    let obj = v.as_object().ok_or_else(|| Dp6Error::Spec("expected an object".into()))?;
    for key in obj.keys() {
        if !["kind", "field", "d", "L_generator_minpoly"].contains(&key.as_str()) {
            return Err(Dp6Error::Spec(format!("unknown key {key}")));
        }
    }
    let kind = match obj.get("kind").and_then(Value::as_str) {
        Some("split_exchange") => AlgebraKind::SplitExchange,
        Some("hermitian") => AlgebraKind::HermitianConj,
        _ => return Err(Dp6Error::Spec("kind must be split_exchange or hermitian".into())),
    };
    let field = obj.get("field").and_then(Value::as_str).ok_or_else(|| Dp6Error::Spec("missing field".into()))?;
    let d = match obj.get("d") {
        None | Some(Value::Null) => None,
        Some(x) => Some(x.as_i64().ok_or_else(|| Dp6Error::Spec("d must be an integer".into()))?),
    };
    let minpoly = match obj.get("L_generator_minpoly") {
        None | Some(Value::Null) => None,
        Some(Value::Array(a)) => {
            let c: Vec<i64> = a
                .iter()
                .map(|x| x.as_i64().ok_or_else(|| Dp6Error::Spec("coefficients must be integers".into())))
                .collect::<Result<_, _>>()?;
            if c.len() != 4 || c[3] != 1 {
                return Err(Dp6Error::Spec("L_generator_minpoly must be 4 coefficients, low to high, monic".into()));
            }
            Some([c[0], c[1], c[2]])
        }
        Some(_) => return Err(Dp6Error::Spec("L_generator_minpoly must be an array or null".into())),
    };
    if kind == AlgebraKind::SplitExchange && d.is_some() {
        return Err(Dp6Error::Spec("d is only meaningful for the hermitian kind".into()));
    }
    if field == "Q" {
        let alg = match kind {
            AlgebraKind::SplitExchange => build_split_exchange(Rationals),
            AlgebraKind::HermitianConj => {
                let d = d.ok_or_else(|| Dp6Error::Spec("hermitian over Q needs d".into()))?;
                build_hermitian(Rationals, EtaleQuadratic::<Rationals>::sqrt(d)?)?
            }
        };
        let vals = [0, 1, -1].map(|x| Rationals.from_i64(x));
        return Ok(AnySurface::Rational(surface_from_parts(alg, minpoly, &vals)?));
    }
    let p: u64 = field
        .strip_prefix("F_")
        .and_then(|s| s.parse().ok())
        .filter(|&p| crate::numtheory::is_prime(p))
        .ok_or_else(|| Dp6Error::Spec(format!("field must be Q or F_p, got {field}")))?;
    let f = FiniteField::prime(p)?;
    let alg = match kind {
        AlgebraKind::SplitExchange => build_split_exchange(f.clone()),
        AlgebraKind::HermitianConj => {
            let k = match d {
                Some(d) => EtaleQuadratic::<FiniteField>::sqrt(&f, d)?,
                None => EtaleQuadratic::unramified(&f)?,
            };
            build_hermitian(f.clone(), k)?
        }
    };
    let vals = f.elements().expect("finite");
    Ok(AnySurface::Finite(surface_from_parts(alg, minpoly, &vals)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra3::ideal_to_sym;
    use crate::field::Rational;

    #[test]
    fn split_surface_over_q() {
        let alg = build_split_exchange(Rationals);
        let s = build_surface(&alg, &CubicSub::diagonal(&alg), "diagonal").unwrap();
        assert_eq!(s.basis.len(), 7);
        assert_eq!(s.quadrics.len(), 9);
        let q = Rationals;
        let mut one = vec![q.zero(); 7];
        one[0] = q.one();
        assert!(!s.contains(&one));
        // against the adjugate at a random point of F + L^perp
        let x: Vec<Rational> = [2, -1, 3, 5, 0, 7, -4].iter().map(|&n| Rational::from_int(n)).collect();
        let e = s.point_element(&x);
        let sharp = alg.sym_coords(&alg.sharp(&e)).unwrap();
        for (m, qd) in s.quadrics.iter().enumerate() {
            assert_eq!(qd.eval(&q, &x), sharp[m]);
        }
        // rank-one points with equal diagonal lie on the surface
        let u: Vec<Rational> = [1, 2, 3].iter().map(|&n| Rational::from_int(n)).collect();
        let w: Vec<Rational> = [6, 3, 2].iter().map(|&n| Rational::from_int(n)).collect();
        let pt = s.coordinates_of(&ideal_to_sym(&alg, &u, &w)).unwrap();
        assert!(s.contains(&pt));
    }

    #[test]
    fn spec_parsing() {
        let v: Value = serde_json::from_str(r#"{"kind":"hermitian","field":"Q","d":-1,"L_generator_minpoly":null}"#).unwrap();
        assert!(matches!(surface_from_spec(&v).unwrap(), AnySurface::Rational(_)));
        let v: Value = serde_json::from_str(r#"{"kind":"split_exchange","field":"Q","L_generator_minpoly":[-6,11,-6,1]}"#).unwrap();
        assert!(surface_from_spec(&v).is_ok());
        let v: Value = serde_json::from_str(r#"{"kind":"hermitian","field":"F_3","L_generator_minpoly":[1,2,0,1]}"#).unwrap();
        assert!(matches!(surface_from_spec(&v).unwrap(), AnySurface::Finite(_)));
        let v: Value = serde_json::from_str(r#"{"kind":"hermitian","field":"Q","d":4}"#).unwrap();
        assert!(surface_from_spec(&v).is_err());
        let v: Value = serde_json::from_str(r#"{"kind":"split_exchange","field":"F_4"}"#).unwrap();
        assert!(surface_from_spec(&v).is_err());
    }

    #[test]
    fn model_names() {
        for m in standard_corpus() {
            assert_eq!(SurfaceModel::from_name(&m.name(), m.p).unwrap(), m);
        }
        assert!(SurfaceModel::from_name("L-quartic", 2).is_err());
        assert_eq!(SurfaceModel::from_name("K-inert-L-cubic", 2).unwrap().splitting_degree(), 6);
    }
}
