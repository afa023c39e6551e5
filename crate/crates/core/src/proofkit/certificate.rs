//! Certificates: verified steps carry a computation and its output and can
//! be re-run; axiom steps cite a theorem.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::{corollary_3or4_check, parse_class, Compatibility, ProofError};
use crate::brauer::{
    admits_unitary_involution, corestriction, decompose_degree6, restriction, InvariantVector, InvariantVectorK,
    QuadField,
};
use crate::dp6::{lemma_number_check, Observation};

/// A division algebra of degree 6 over `Q`.
pub const DEGREE6_WITNESS: &str = r#"{"primes":{"7":"1/6","13":"5/6"}}"#;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    /// Resolution of singularities for surfaces, Castelnuovo's criterion and
    /// the generic splitting facts give the minimal surface `X`.
    MinimalModelReduction,
    IskovskikhMori,
    DelPezzoSixClassification,
    Chatelet,
    UnitaryCorestriction,
    PeriodIndex,
    IndexReduction,
    TorsorCorrespondence,
    DimensionBound,
}

impl Axiom {
    pub fn id(self) -> &'static str {
        match self {
            Axiom::MinimalModelReduction => "minimal_model_reduction",
            Axiom::IskovskikhMori => "iskovskikh_mori",
            Axiom::DelPezzoSixClassification => "del_pezzo_6_classification",
            Axiom::Chatelet => "chatelet",
            Axiom::UnitaryCorestriction => "unitary_corestriction",
            Axiom::PeriodIndex => "period_index",
            Axiom::IndexReduction => "index_reduction",
            Axiom::TorsorCorrespondence => "torsor_correspondence",
            Axiom::DimensionBound => "dimension_bound",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            Axiom::MinimalModelReduction => {
                "resolution of singularities for surfaces, Castelnuovo's rationality criterion and the Karpenko-Merkurjev generic splitting theorems: if cdim SB(A) <= 2 there is a smooth projective minimal geometrically rational surface X with 6 | n_X receiving rational maps from Y x Z and mapping rationally back"
            }
            Axiom::IskovskikhMori => {
                "Iskovskikh-Mori classification: a minimal geometrically rational surface is a conic bundle over a smooth conic or a del Pezzo surface of degree 1 to 9"
            }
            Axiom::DelPezzoSixClassification => {
                "a del Pezzo surface of degree 6 is S(B, tau, L) for B of rank 9 over a quadratic etale K with unitary involution tau and cubic etale L inside Sym(B, tau)"
            }
            Axiom::Chatelet => "Chatelet's theorem: the kernel of Br F -> Br F(SB(A)) is generated by [A]",
            Axiom::UnitaryCorestriction => {
                "an algebra carrying an involution of the second kind has trivial corestriction (Knus-Merkurjev-Rost-Tignol)"
            }
            Axiom::PeriodIndex => "over a number field period equals index (Albert-Brauer-Hasse-Noether)",
            Axiom::IndexReduction => "Schofield-Van den Bergh index reduction over function fields of conics",
            Axiom::TorsorCorrespondence => {
                "PGL_6-torsors correspond to central simple algebras of degree 6, and cdim PGL_6 is the maximum of cdim SB(A) over all fields and all such A"
            }
            Axiom::DimensionBound => {
                "canonical dimension is at most dimension: cdim SB(A) = cdim(Y x Z) <= dim(Y x Z) = 3 for A = C + D with Y = SB(C), Z = SB(D)"
            }
        }
    }
}

/// A reproducible computation with a deterministic JSON result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Computation {
    Index(InvariantVector),
    Decompose(InvariantVector),
    Restriction(InvariantVector, QuadField),
    Corestriction(InvariantVectorK),
    AdmitsUnitaryInvolution(InvariantVectorK),
    LemmaNumberCheck { k: QuadField, b: InvariantVectorK, n_s: u32 },
    Corollary3or4(InvariantVector, InvariantVector),
    Divides { a: u64, b: u64 },
    /// Degrees `d` in `1..=9` divisible by `n`.
    DelPezzoDegrees { n: u64 },
}

fn quad_json(k: QuadField) -> Value {
    json!(k.to_string())
}

impl Computation {
    pub fn op(&self) -> &'static str {
        match self {
            Computation::Index(_) => "index",
            Computation::Decompose(_) => "decompose_degree6",
            Computation::Restriction(..) => "restriction",
            Computation::Corestriction(_) => "corestriction",
            Computation::AdmitsUnitaryInvolution(_) => "admits_unitary_involution",
            Computation::LemmaNumberCheck { .. } => "lemma_number_check",
            Computation::Corollary3or4(..) => "corollary_3or4_check",
            Computation::Divides { .. } => "divides",
            Computation::DelPezzoDegrees { .. } => "del_pezzo_degrees",
        }
    }

    pub fn args(&self) -> Value {
        match self {
            Computation::Index(a) | Computation::Decompose(a) => json!([a.to_json()]),
            Computation::Restriction(a, k) => json!([a.to_json(), quad_json(*k)]),
            Computation::Corestriction(b) | Computation::AdmitsUnitaryInvolution(b) => json!([b.to_json()]),
            Computation::LemmaNumberCheck { k, b, n_s } => json!([quad_json(*k), b.to_json(), n_s]),
            Computation::Corollary3or4(a, b) => json!([a.to_json(), b.to_json()]),
            Computation::Divides { a, b } => json!([a, b]),
            Computation::DelPezzoDegrees { n } => json!([n]),
        }
    }

    pub fn run(&self) -> Value {
        match self {
            Computation::Index(a) => json!(a.index().to_string()),
            Computation::Decompose(a) => match decompose_degree6(a) {
                Ok((c, d)) => json!({"C": c.to_json(), "D": d.to_json()}),
                Err(e) => json!({"error": e.to_string()}),
            },
            Computation::Restriction(a, k) => restriction(a, *k).to_json(),
            Computation::Corestriction(b) => corestriction(b).to_json(),
            Computation::AdmitsUnitaryInvolution(b) => json!(admits_unitary_involution(b)),
            Computation::LemmaNumberCheck { k, b, n_s } => {
                let obs = Observation { has_rational_point: None, n_s: Some(*n_s) };
                match lemma_number_check(k, b, &obs) {
                    Ok(()) => json!({"consistent": true}),
                    Err(e) => json!({"consistent": false, "violated": e.to_string()}),
                }
            }
            Computation::Corollary3or4(a, b) => corollary_3or4_check(a, b).to_json(),
            Computation::Divides { a, b } => json!(*a != 0 && b % a == 0),
            Computation::DelPezzoDegrees { n } => json!((1..=9u64).filter(|d| d % n == 0).collect::<Vec<_>>()),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"op": self.op(), "args": self.args()})
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    Verified { computation: Computation, output: Value },
    Axiom(Axiom),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub statement: String,
    pub kind: StepKind,
}

impl Step {
    fn verified(statement: impl Into<String>, computation: Computation) -> Self {
        let output = computation.run();
        Step { statement: statement.into(), kind: StepKind::Verified { computation, output } }
    }

    fn axiom(statement: impl Into<String>, a: Axiom) -> Self {
        Step { statement: statement.into(), kind: StepKind::Axiom(a) }
    }

    /// Re-runs a verified step and compares serialised outputs.
    pub fn reproduces(&self) -> bool {
        match &self.kind {
            StepKind::Verified { computation, output } => computation.run().to_string() == output.to_string(),
            StepKind::Axiom(_) => true,
        }
    }

    pub fn output(&self) -> Option<&Value> {
        match &self.kind {
            StepKind::Verified { output, .. } => Some(output),
            StepKind::Axiom(_) => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match &self.kind {
            StepKind::Verified { computation, output } => json!({
                "statement": self.statement,
                "kind": "VERIFIED",
                "computation": computation.to_json(),
                "output": output,
            }),
            StepKind::Axiom(a) => json!({
                "statement": self.statement,
                "kind": "AXIOM",
                "axiom": a.id(),
                "citation": a.citation(),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `cdim SB(A) = 3` for the input class.
    CdimSbIs3,
    /// `cdim PGL_6 = 3`.
    CdimPgl6Is3,
    Failed(String),
}

impl Verdict {
    pub fn to_json(&self) -> Value {
        match self {
            Verdict::CdimSbIs3 => json!({"status": "proved", "statement": "cdim SB(A) = 3"}),
            Verdict::CdimPgl6Is3 => json!({"status": "proved", "statement": "cdim PGL_6 = 3"}),
            Verdict::Failed(r) => json!({"status": "failed", "reason": r}),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofCertificate {
    pub proof: &'static str,
    pub input: Value,
    pub steps: Vec<Step>,
    /// Set when a step derives a contradiction from `cdim SB(A) <= 2`.
    pub contradiction: bool,
    pub verdict: Verdict,
    pub inner: Option<Box<ProofCertificate>>,
}

impl ProofCertificate {
    /// Every verified step, including those of the wrapped certificate,
    /// reproduces its recorded output.
    pub fn verify(&self) -> bool {
        self.steps.iter().all(Step::reproduces) && self.inner.as_ref().is_none_or(|c| c.verify())
    }

    pub fn verified_count(&self) -> usize {
        self.steps.iter().filter(|s| matches!(s.kind, StepKind::Verified { .. })).count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "proof": self.proof,
            "input": self.input,
            "steps": self.steps.iter().map(Step::to_json).collect::<Vec<_>>(),
            "contradiction": self.contradiction,
            "verdict": self.verdict.to_json(),
            "inner": self.inner.as_ref().map(|c| c.to_json()),
        })
    }

    pub fn transcript(&self) -> String {
        let mut out = String::new();
        if let Some(inner) = &self.inner {
            out.push_str(&inner.transcript());
            out.push('\n');
        }
        let _ = writeln!(out, "proof: {}", self.proof);
        for (i, s) in self.steps.iter().enumerate() {
            match &s.kind {
                StepKind::Verified { computation, output } => {
                    let _ = writeln!(out, "{:>2}. [VERIFIED] {}\n      {} -> {}", i + 1, s.statement, computation.op(), output);
                }
                StepKind::Axiom(a) => {
                    let _ = writeln!(out, "{:>2}. [AXIOM] {}\n      cites: {}", i + 1, s.statement, a.citation());
                }
            }
        }
        let v = match &self.verdict {
            Verdict::CdimSbIs3 => "cdim SB(A) = 3".to_string(),
            Verdict::CdimPgl6Is3 => "cdim PGL_6 = 3".to_string(),
            Verdict::Failed(r) => format!("failed: {r}"),
        };
        let _ = writeln!(out, "verdict: {v}");
        out
    }
}

fn check_index6(a: &InvariantVector) -> Result<(), ProofError> {
    let i = a.index();
    if i != BigInt::from(6) {
        return Err(ProofError::IndexMismatch(i));
    }
    Ok(())
}

fn decomposition(a: &InvariantVector) -> (InvariantVector, InvariantVector) {
    decompose_degree6(a).expect("index 6 implies order dividing 6")
}

/// The argument through del Pezzo surfaces of degree 6, with the
/// candidates for `B` computed over the quadratic field `k`.
pub fn replay_first_proof(a: &InvariantVector, k: QuadField) -> Result<ProofCertificate, ProofError> {
    check_index6(a)?;
    if k == QuadField::Split {
        return Err(ProofError::SplitK);
    }
    let (c, d) = decomposition(a);
    let mut steps = vec![
        Step::verified("A has index 6", Computation::Index(a.clone())),
        Step::verified("A = C + D with C = 3A of order 2 and D = 4A of order 3", Computation::Decompose(a.clone())),
        Step::verified("D has index 3", Computation::Index(d.clone())),
        Step::axiom("assume cdim SB(A) <= 2 and pass to a minimal surface X with 6 | n_X", Axiom::MinimalModelReduction),
        Step::axiom("X is a conic bundle over a smooth conic or a del Pezzo surface of degree d <= 9", Axiom::IskovskikhMori),
        Step::verified(
            "a conic bundle over a conic has a point over an extension of degree dividing 4; 6 does not divide 4, so X is not a conic bundle",
            Computation::Divides { a: 6, b: 4 },
        ),
        Step::verified("6 | n_X | d with d <= 9 forces d = 6", Computation::DelPezzoDegrees { n: 6 }),
        Step::axiom("X = S(B, tau, L)", Axiom::DelPezzoSixClassification),
        Step::verified(
            "n_S = 6 is impossible for split K",
            Computation::LemmaNumberCheck { k: QuadField::Split, b: InvariantVectorK::split(QuadField::Split), n_s: 6 },
        ),
        Step::verified(
            "n_S = 6 is consistent with K and B = res_K(D) both nonsplit",
            Computation::LemmaNumberCheck { k, b: restriction(&d, k), n_s: 6 },
        ),
        Step::axiom(
            "B splits over K(Z), so the nonsplit K-algebra B is similar to D_K or to D_K^2",
            Axiom::Chatelet,
        ),
        Step::axiom("B carries an involution of the second kind, so cor_{K/Q}[B] = 0", Axiom::UnitaryCorestriction),
    ];
    let mut all_excluded = true;
    for (n, name) in [(1i64, "D"), (2, "2D")] {
        let dn = d.scale(n);
        let b = restriction(&dn, k);
        steps.push(Step::verified(format!("candidate B = res_K({name})"), Computation::Restriction(dn.clone(), k)));
        let cor = Step::verified(
            format!("cor_K/Q res_K({name}) = 2({name}) is nonzero"),
            Computation::Corestriction(b.clone()),
        );
        let cor_split = cor.output().and_then(|v| InvariantVector::from_json(v).ok()).is_some_and(|x| x.is_split());
        steps.push(cor);
        let admits = Step::verified(
            format!("res_K({name}) carries no involution of the second kind"),
            Computation::AdmitsUnitaryInvolution(b),
        );
        all_excluded &= admits.output() == Some(&Value::Bool(false)) && !cor_split;
        steps.push(admits);
    }
    steps.push(Step::axiom("so cdim SB(A) >= 3, and cdim SB(A) <= 3", Axiom::DimensionBound));
    let verdict = if all_excluded {
        Verdict::CdimSbIs3
    } else {
        Verdict::Failed("a candidate for B admits a unitary involution".into())
    };
    Ok(ProofCertificate {
        proof: "first",
        input: json!({"A": a.to_json(), "K": k.to_string(), "C": c.to_json(), "D": d.to_json()}),
        steps,
        contradiction: all_excluded,
        verdict,
        inner: None,
    })
}

/// The argument through Brauer kernels of surfaces of canonical dimension
/// at most 2.
pub fn replay_second_proof(a: &InvariantVector) -> Result<ProofCertificate, ProofError> {
    check_index6(a)?;
    let (c, d) = decomposition(a);
    let check = Step::verified(
        "C (quaternion) and D (cubic) cannot both be split by a surface of canonical dimension <= 2",
        Computation::Corollary3or4(c.clone(), d.clone()),
    );
    let contradiction = matches!(corollary_3or4_check(&c, &d), Compatibility::Contradiction { .. });
    let steps = vec![
        Step::verified("A has index 6", Computation::Index(a.clone())),
        Step::verified("A = C + D with C = 3A of order 2 and D = 4A of order 3", Computation::Decompose(a.clone())),
        Step::axiom("assume cdim SB(A) <= 2; then cdim(Y x Z) <= 2 for Y = SB(C), Z = SB(D)", Axiom::MinimalModelReduction),
        Step::axiom("[C] and [D] lie in the kernel of Br Q -> Br Q(Y x Z)", Axiom::Chatelet),
        Step::axiom(
            "the kernel for a geometrically unirational variety of canonical dimension <= 2 is spanned by cubic classes or by quaternion and biquaternion classes",
            Axiom::IndexReduction,
        ),
        check,
        Step::axiom("so cdim SB(A) >= 3, and cdim SB(A) <= 3", Axiom::DimensionBound),
    ];
    Ok(ProofCertificate {
        proof: "second",
        input: json!({"A": a.to_json(), "C": c.to_json(), "D": d.to_json()}),
        steps,
        contradiction,
        verdict: if contradiction { Verdict::CdimSbIs3 } else { Verdict::Failed("no contradiction".into()) },
        inner: None,
    })
}

/// From a successful replay to `cdim PGL_6 = 3`.
pub fn corollary_cdpgl(cert: &ProofCertificate) -> ProofCertificate {
    let witness = parse_class(&serde_json::from_str(DEGREE6_WITNESS).expect("valid JSON")).expect("valid class");
    let ok = cert.verdict == Verdict::CdimSbIs3 && cert.verify();
    let steps = vec![
        Step::axiom("cdim PGL_6 = max cdim SB(A) over algebras A of degree 6", Axiom::TorsorCorrespondence),
        Step::axiom("cdim SB(A) <= 3 for every A of degree 6", Axiom::DimensionBound),
        Step::verified("{7: 1/6, 13: 5/6} has index 6", Computation::Index(witness.clone())),
        Step::axiom("a class of index 6 over Q is a division algebra of degree 6", Axiom::PeriodIndex),
    ];
    let verdict = if ok {
        Verdict::CdimPgl6Is3
    } else {
        match &cert.verdict {
            Verdict::Failed(r) => Verdict::Failed(format!("inner certificate failed: {r}")),
            _ => Verdict::Failed("inner certificate does not verify".into()),
        }
    };
    ProofCertificate {
        proof: "cdim_pgl6",
        input: json!({"witness": witness.to_json()}),
        steps,
        contradiction: false,
        verdict,
        inner: Some(Box::new(cert.clone())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(s: &str) -> InvariantVector {
        parse_class(&serde_json::from_str(s).unwrap()).unwrap()
    }

    #[test]
    fn first_proof() {
        let a = iv(r#"{"7":"1/6","13":"5/6"}"#);
        let k = QuadField::new(-1).unwrap();
        let c = replay_first_proof(&a, k).unwrap();
        assert!(c.contradiction);
        assert_eq!(c.verdict, Verdict::CdimSbIs3);
        assert!(c.verify());
        let b = iv(r#"{"7":"1/6","11":"1/6","13":"2/3"}"#);
        assert_eq!(replay_first_proof(&b, k).unwrap().verdict, Verdict::CdimSbIs3);
        assert!(matches!(replay_first_proof(&iv(r#"{"7":"1/2","13":"1/2"}"#), k), Err(ProofError::IndexMismatch(_))));
        assert!(matches!(replay_first_proof(&a, QuadField::Split), Err(ProofError::SplitK)));
        let pgl = corollary_cdpgl(&c);
        assert_eq!(pgl.verdict, Verdict::CdimPgl6Is3);
        assert!(pgl.transcript().contains("cdim PGL_6 = 3"));
    }

    #[test]
    fn second_proof() {
        let a = iv(r#"{"7":"1/6","13":"5/6"}"#);
        let c = replay_second_proof(&a).unwrap();
        assert!(c.contradiction && c.verify());
        let w = c.steps[5].output().unwrap();
        assert_eq!(w["witness"], a.to_json());
        assert!(matches!(replay_second_proof(&iv(r#"{"7":"1/3","13":"2/3"}"#)), Err(ProofError::IndexMismatch(_))));
        // quaternion at {3, 5} plus cubic at {7, 13}
        let b = iv(r#"{"3":"1/2","5":"1/2"}"#).tensor(&iv(r#"{"7":"1/3","13":"2/3"}"#));
        assert_eq!(replay_second_proof(&b).unwrap().verdict, Verdict::CdimSbIs3);
        assert_eq!(corollary_cdpgl(&c).verdict, Verdict::CdimPgl6Is3);
    }

    #[test]
    fn tampered_certificate_fails() {
        let a = iv(r#"{"7":"1/6","13":"5/6"}"#);
        let mut c = replay_second_proof(&a).unwrap();
        if let StepKind::Verified { output, .. } = &mut c.steps[0].kind {
            *output = json!("3");
        }
        assert!(!c.verify());
        assert!(matches!(corollary_cdpgl(&c).verdict, Verdict::Failed(_)));
    }
}
