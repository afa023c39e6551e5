//! Brauer kernels of minimal geometrically rational surfaces, and
//! replayable certificates for `cdim PGL_6 = 3`.

mod certificate;

use num_bigint::BigInt;
use serde_json::{json, Value};
use thiserror::Error;

use crate::brauer::{chatelet_kernel, corestriction, BrauerError, InvariantVector, InvariantVectorK, Place, QuadField};

pub use certificate::{
    corollary_cdpgl, replay_first_proof, replay_second_proof, Axiom, Computation, ProofCertificate, Step, StepKind,
    Verdict, DEGREE6_WITNESS,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("malformed surface case: {0}")]
    MalformedCase(String),
    #[error("expected a class of index 6, got index {0}")]
    IndexMismatch(BigInt),
    #[error("K must be a quadratic field")]
    SplitK,
    #[error(transparent)]
    Brauer(#[from] BrauerError),
}

/// The minimal surfaces that survive the reduction, with their Brauer
/// data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SurfaceCase {
    /// A Severi-Brauer surface of a class of order 1 or 3.
    SeveriBrauerSurface(InvariantVector),
    /// `R_{K/Q}(C)` for a conic `C` over `K`; for split `K` a product of
    /// two conics over `Q`.
    FormP1xP1 { k: QuadField, conic: InvariantVectorK },
    /// A conic bundle over the conic of `base`, with an optional further
    /// quaternion class `extra` in the kernel.
    ConicBundle { base: InvariantVector, extra: Option<InvariantVector> },
    /// A del Pezzo surface with `Pic X = Z`.
    DelPezzoRankOne,
}

impl SurfaceCase {
    pub fn name(&self) -> &'static str {
        match self {
            SurfaceCase::SeveriBrauerSurface(_) => "severi_brauer_surface",
            SurfaceCase::FormP1xP1 { .. } => "form_of_p1xp1",
            SurfaceCase::ConicBundle { .. } => "conic_bundle",
            SurfaceCase::DelPezzoRankOne => "del_pezzo_rank_one",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorType {
    Quaternion,
    Biquaternion,
    Cubic,
}

impl GeneratorType {
    pub fn name(self) -> &'static str {
        match self {
            GeneratorType::Quaternion => "quaternion",
            GeneratorType::Biquaternion => "biquaternion",
            GeneratorType::Cubic => "cubic",
        }
    }

    fn of(u: &InvariantVector) -> Option<Self> {
        let i = u.index();
        if i == BigInt::from(2) {
            Some(GeneratorType::Quaternion)
        } else if i == BigInt::from(4) && u.period() == BigInt::from(2) {
            Some(GeneratorType::Biquaternion)
        } else if i == BigInt::from(3) {
            Some(GeneratorType::Cubic)
        } else {
            None
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub class: InvariantVector,
    pub kind: GeneratorType,
}

impl Generator {
    fn new(class: InvariantVector) -> Result<Self, ProofError> {
        let kind = GeneratorType::of(&class).ok_or_else(|| ProofError::MalformedCase(format!("{class} has no generator type")))?;
        Ok(Generator { class, kind })
    }

    fn to_json(&self) -> Value {
        json!({"class": self.class.to_json(), "type": self.kind.name()})
    }
}

/// The kernel of `Br Q -> Br Q(X)`; the master list is `0`, `Z/2`,
/// `Z/2 + Z/2` and `Z/3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelShape {
    Zero,
    Z2(Generator),
    Z2xZ2(Generator, Generator),
    Z3(Generator),
}

impl KernelShape {
    pub fn name(&self) -> &'static str {
        match self {
            KernelShape::Zero => "0",
            KernelShape::Z2(_) => "Z/2",
            KernelShape::Z2xZ2(..) => "Z/2+Z/2",
            KernelShape::Z3(_) => "Z/3",
        }
    }

    /// Generator orders match the shape, the two generators of `Z/2 + Z/2`
    /// are independent, and types agree with the classes.
    pub fn is_well_formed(&self) -> bool {
        let two = BigInt::from(2);
        let typed = |g: &Generator| GeneratorType::of(&g.class) == Some(g.kind);
        match self {
            KernelShape::Zero => true,
            KernelShape::Z2(g) => typed(g) && g.class.period() == two,
            KernelShape::Z3(g) => typed(g) && g.class.period() == BigInt::from(3),
            KernelShape::Z2xZ2(a, b) => {
                typed(a)
                    && typed(b)
                    && a.class.period() == two
                    && b.class.period() == two
                    && a.class != b.class
            }
        }
    }

    pub fn to_json(&self) -> Value {
        let gens: Vec<Value> = match self {
            KernelShape::Zero => vec![],
            KernelShape::Z2(g) | KernelShape::Z3(g) => vec![g.to_json()],
            KernelShape::Z2xZ2(a, b) => vec![a.to_json(), b.to_json()],
        };
        json!({"shape": self.name(), "generators": gens})
    }
}

fn order_divides(u: &InvariantVector, n: i64) -> bool {
    u.scale(n).is_split()
}

/// Shape of the subgroup generated by classes of order dividing 2.
fn two_torsion_span(gens: &[InvariantVector]) -> Result<KernelShape, ProofError> {
    let mut basis: Vec<InvariantVector> = Vec::new();
    for g in gens {
        if g.is_split() || basis.contains(g) {
            continue;
        }
        if basis.len() == 1 && basis[0].tensor(g).is_split() {
            continue;
        }
        basis.push(g.clone());
    }
    Ok(match basis.len() {
        0 => KernelShape::Zero,
        1 => KernelShape::Z2(Generator::new(basis[0].clone())?),
        _ => KernelShape::Z2xZ2(Generator::new(basis[0].clone())?, Generator::new(basis[1].clone())?),
    })
}

/// The component of a class over split `K` in slot `s`.
fn split_component(u: &InvariantVectorK, s: u8) -> Result<InvariantVector, ProofError> {
    Ok(InvariantVector::new(
        u.entries().filter(|((_, slot), _)| *slot == s).map(|((p, _), x)| (*p, x.clone())),
    )?)
}

/// Possible kernels of `Br Q -> Br Q(X)` for the case; a single shape when
/// the data determine it.
pub fn kernel_shapes(case: &SurfaceCase) -> Result<Vec<KernelShape>, ProofError> {
    let malformed = |s: &str| Err(ProofError::MalformedCase(s.to_string()));
    match case {
        SurfaceCase::SeveriBrauerSurface(a) => {
            if !order_divides(a, 3) {
                return malformed("a Severi-Brauer surface has a class of order 1 or 3");
            }
            let ker = chatelet_kernel(a);
            Ok(vec![if ker.len() == 1 { KernelShape::Zero } else { KernelShape::Z3(Generator::new(a.clone())?) }])
        }
        SurfaceCase::FormP1xP1 { k, conic } => {
            if conic.field() != *k {
                return malformed("conic class is over a different K");
            }
            if !conic.scale(2).is_split() {
                return malformed("a conic class has order dividing 2");
            }
            match k {
                QuadField::Field(_) => {
                    // cor of the kernel over K, which is generated by the conic
                    let c = corestriction(conic);
                    Ok(vec![two_torsion_span(&[c])?])
                }
                QuadField::Split => {
                    let (c0, c1) = (split_component(conic, 0)?, split_component(conic, 1)?);
                    Ok(vec![two_torsion_span(&[c0, c1])?])
                }
            }
        }
        SurfaceCase::ConicBundle { base, extra } => {
            if !order_divides(base, 2) || extra.as_ref().is_some_and(|e| !order_divides(e, 2)) {
                return malformed("conic bundle classes have order dividing 2");
            }
            let mut out = vec![KernelShape::Zero];
            let mut gens = Vec::new();
            for g in std::iter::once(base).chain(extra.iter()) {
                gens.push(g.clone());
                let s = two_torsion_span(&gens)?;
                if !out.contains(&s) {
                    out.push(s);
                }
            }
            Ok(out)
        }
        SurfaceCase::DelPezzoRankOne => Ok(vec![KernelShape::Zero]),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Compatibility {
    /// Both classes have index dividing 3.
    Cubic,
    /// Both classes have order at most 2 and index at most 4.
    QuaternionOrBiquaternion,
    Contradiction { witness: Option<InvariantVector> },
}

impl Compatibility {
    pub fn to_json(&self) -> Value {
        match self {
            Compatibility::Cubic => json!({"result": "compatible", "type": "cubic"}),
            Compatibility::QuaternionOrBiquaternion => json!({"result": "compatible", "type": "quaternion_or_biquaternion"}),
            Compatibility::Contradiction { witness } => json!({
                "result": "contradiction",
                "witness": witness.as_ref().map(|w| w.to_json()),
                "witness_index": witness.as_ref().map(|w| w.index().to_string()),
            }),
        }
    }
}

/// Two classes split by a surface of canonical dimension at most 2 are
/// both cubic or both quaternion or biquaternion.
pub fn corollary_3or4_check(a: &InvariantVector, b: &InvariantVector) -> Compatibility {
    let three = BigInt::from(3);
    let cubic = |u: &InvariantVector| (&three % u.index()) == BigInt::from(0);
    let small = |u: &InvariantVector| u.index() <= BigInt::from(4) && order_divides(u, 2);
    if cubic(a) && cubic(b) {
        Compatibility::Cubic
    } else if small(a) && small(b) {
        Compatibility::QuaternionOrBiquaternion
    } else {
        let t = a.tensor(b);
        let witness = (t.period() == BigInt::from(6)).then_some(t);
        Compatibility::Contradiction { witness }
    }
}

/// Parses an invariant vector in the compact form `{"7": "1/6", ...}` or
/// the full `{"inf", "primes"}` form.
pub fn parse_class(v: &Value) -> Result<InvariantVector, BrauerError> {
    if let Some(obj) = v.as_object() {
        if obj.keys().all(|k| k.parse::<Place>().is_ok()) && !obj.contains_key("inf") && !obj.is_empty() {
            return InvariantVector::from_json(&json!({"primes": v}));
        }
    }
    InvariantVector::from_json(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::{quaternion_class, restriction, Fraction1};
    use crate::field::Rational;

    fn iv(s: &str) -> InvariantVector {
        parse_class(&serde_json::from_str(s).unwrap()).unwrap()
    }

    #[test]
    fn shapes() {
        let a = iv(r#"{"7":"1/3","13":"2/3"}"#);
        let s = kernel_shapes(&SurfaceCase::SeveriBrauerSurface(a.clone())).unwrap();
        assert_eq!(s, vec![KernelShape::Z3(Generator { class: a.clone(), kind: GeneratorType::Cubic })]);
        assert!(kernel_shapes(&SurfaceCase::SeveriBrauerSurface(iv(r#"{"7":"1/2","13":"1/2"}"#))).is_err());

        let q = quaternion_class(&Rational::from_int(-1), &Rational::from_int(-1)).unwrap();
        let k = QuadField::new(-1).unwrap();
        let s = kernel_shapes(&SurfaceCase::FormP1xP1 { k, conic: restriction(&q, k) }).unwrap();
        assert_eq!(s, vec![KernelShape::Zero]);
        // 5 and 13 split in Q(i); a conic over K ramified at one place above each
        let c = InvariantVectorK::new(k, [((Place::Prime(5), 0), Fraction1::half()), ((Place::Prime(13), 0), Fraction1::half())]).unwrap();
        let s = kernel_shapes(&SurfaceCase::FormP1xP1 { k, conic: c }).unwrap();
        assert_eq!(s, vec![KernelShape::Z2(Generator { class: iv(r#"{"5":"1/2","13":"1/2"}"#), kind: GeneratorType::Quaternion })]);
        let c = InvariantVectorK::new(QuadField::Split, [((Place::Prime(3), 0), Fraction1::half()), ((Place::Prime(5), 0), Fraction1::half()), ((Place::Prime(3), 1), Fraction1::half()), ((Place::Real, 1), Fraction1::half())]).unwrap();
        let s = kernel_shapes(&SurfaceCase::FormP1xP1 { k: QuadField::Split, conic: c }).unwrap();
        assert_eq!(s[0].name(), "Z/2+Z/2");
        assert!(s[0].is_well_formed());

        assert_eq!(kernel_shapes(&SurfaceCase::DelPezzoRankOne).unwrap(), vec![KernelShape::Zero]);
        let q2 = iv(r#"{"3":"1/2","5":"1/2"}"#);
        let s = kernel_shapes(&SurfaceCase::ConicBundle { base: q.clone(), extra: Some(q2) }).unwrap();
        assert_eq!(s.iter().map(|x| x.name()).collect::<Vec<_>>(), vec!["0", "Z/2", "Z/2+Z/2"]);
        assert!(s.iter().all(|x| x.is_well_formed()));
    }

    #[test]
    fn corollary() {
        let a = iv(r#"{"7":"1/3","13":"2/3"}"#);
        assert_eq!(corollary_3or4_check(&a, &a), Compatibility::Cubic);
        let z = InvariantVector::split();
        assert_eq!(corollary_3or4_check(&z, &z), Compatibility::Cubic);
        let q = iv(r#"{"3":"1/2","5":"1/2"}"#);
        match corollary_3or4_check(&q, &a) {
            Compatibility::Contradiction { witness: Some(w) } => assert_eq!(w.index(), BigInt::from(6)),
            other => panic!("{other:?}"),
        }
    }
}
