//! The six lines over a splitting field, Frobenius on them, the torus
//! count and the index constraints.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use super::count::{rational_points, DEFAULT_POINT_BUDGET};
use super::{DP6Surface, Dp6Error};
use crate::algebra3::{split_normalize_over, CubicType, FirstFactor};
use crate::brauer::{InvariantVectorK, QuadField};
use crate::field::linalg::{self, Mat};
use crate::field::{Field, FiniteField};
use crate::hexagon::{hex_group, perm_word, t_hat, HexAut, LineLabel, LINES};
use crate::lattice::IntMatrix;

/// Six lines as 2x7 reduced echelon matrices over `field`, in the order
/// `E1, E2, E3, F1, F2, F3`.
#[derive(Clone, Debug)]
pub struct LineConfig {
    pub field: FiniteField,
    pub lines: Vec<Mat<FiniteField>>,
}

fn line_rref(e: &FiniteField, rows: Mat<FiniteField>) -> Mat<FiniteField> {
    let (r, piv) = linalg::rref(e, &rows);
    r.into_iter().take(piv.len()).collect()
}

impl LineConfig {
    pub fn meets(&self, a: usize, b: usize) -> bool {
        let mut m = self.lines[a].clone();
        m.extend(self.lines[b].iter().cloned());
        linalg::rank(&self.field, &m) < 4
    }

    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        (0..6).map(|a| (0..6).map(|b| a != b && self.meets(a, b)).collect()).collect()
    }

    pub fn contains_point(&self, line: usize, x: &[u32]) -> bool {
        let mut m = self.lines[line].clone();
        m.push(x.to_vec());
        linalg::rank(&self.field, &m) == 2
    }

    pub fn to_json(&self) -> Value {
        let e = &self.field;
        let lines: Vec<Value> = self
            .lines
            .iter()
            .zip(LINES)
            .map(|(m, l)| {
                let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|c| e.format_elem(c)).collect()).collect();
                json!({"label": l.to_string(), "rows": rows})
            })
            .collect();
        let adj = self.adjacency();
        let edges: Vec<String> = (0..6)
            .flat_map(|a| (a + 1..6).map(move |b| (a, b)))
            .filter(|&(a, b)| adj[a][b])
            .map(|(a, b)| format!("{}-{}", LineLabel::from_index(a), LineLabel::from_index(b)))
            .collect();
        json!({"field": e.name(), "lines": lines, "edges": edges})
    }
}

/// Lines over `F_{p^m}` by split normalisation: in normalised coordinates
/// `S` is the rank-one matrices with constant diagonal, whose lines are the
/// off-diagonal parts of a row (`E_i`) or of a column (`F_i`).
pub fn find_lines(s: &DP6Surface<FiniteField>, m: u32) -> Result<LineConfig, Dp6Error> {
    let f = s.field();
    if f.degree() != 1 {
        return Err(Dp6Error::NotFinite);
    }
    let e = FiniteField::new(f.p(), m)?;
    let cert = split_normalize_over(&s.alg, &s.l, &e)?;
    let sigma = FirstFactor::new(&s.alg, &e)?;
    let images: Vec<Mat<FiniteField>> = s.basis.iter().map(|b| sigma.apply(b)).collect();
    let a: Mat<FiniteField> = (0..9).map(|rc| images.iter().map(|x| x[rc / 3][rc % 3]).collect()).collect();
    let point = |i: usize, j: usize| -> Result<Vec<u32>, Dp6Error> {
        let mut n = linalg::zeros(&e, 3, 3);
        n[i][j] = 1;
        let x = linalg::mul(&e, &linalg::mul(&e, &cert.p, &n), &cert.p_inv);
        let rhs: Vec<u32> = (0..9).map(|rc| x[rc / 3][rc % 3]).collect();
        linalg::solve(&e, &a, &rhs).ok_or_else(|| Dp6Error::NotHexagon("normalised line outside F + L^perp".into()))
    };
    let mut lines = Vec::with_capacity(6);
    for l in LINES {
        let i = l.slot();
        let others: Vec<usize> = (0..3).filter(|&j| j != i).collect();
        let pts = if l.is_e() {
            vec![point(i, others[0])?, point(i, others[1])?]
        } else {
            vec![point(others[0], i)?, point(others[1], i)?]
        };
        lines.push(line_rref(&e, pts));
    }
    if lines.iter().any(|l| l.len() != 2) {
        return Err(Dp6Error::NotHexagon("degenerate line".into()));
    }
    let distinct: HashSet<&Mat<FiniteField>> = lines.iter().collect();
    if distinct.len() != 6 {
        return Err(Dp6Error::WrongLineCount(distinct.len()));
    }
    // Q(s a + t b) = s^2 Q(a) + s t B(a, b) + t^2 Q(b)
    for l in &lines {
        let (x, y) = (&l[0], &l[1]);
        let xy: Vec<u32> = x.iter().zip(y).map(|(u, v)| e.add(u, v)).collect();
        for q in &s.quadrics {
            let (qa, qb, qab) = (q.eval(&e, x), q.eval(&e, y), q.eval(&e, &xy));
            if qa != 0 || qb != 0 || qab != 0 {
                return Err(Dp6Error::NotHexagon("a line is not contained in the surface".into()));
            }
        }
    }
    let cfg = LineConfig { field: e, lines };
    let adj = cfg.adjacency();
    for a in 0..6 {
        for b in 0..6 {
            let (la, lb) = (LineLabel::from_index(a), LineLabel::from_index(b));
            let expect = la.is_e() != lb.is_e() && la.slot() != lb.slot();
            if a != b && adj[a][b] != expect {
                return Err(Dp6Error::NotHexagon(format!("{la} and {lb}")));
            }
        }
    }
    Ok(cfg)
}

/// The permutation of the lines induced by coordinatewise Frobenius.
pub fn frobenius_on_lines(cfg: &LineConfig) -> Result<HexAut, Dp6Error> {
    let e = &cfg.field;
    let perm: Vec<usize> = cfg
        .lines
        .iter()
        .map(|l| {
            let fl: Mat<FiniteField> = l.iter().map(|r| r.iter().map(|&c| e.frobenius(c)).collect()).collect();
            cfg.lines.iter().position(|m| *m == fl).ok_or(Dp6Error::NotAnAutomorphism)
        })
        .collect::<Result<_, _>>()?;
    HexAut::from_perm(&perm).ok_or(Dp6Error::NotAnAutomorphism)
}

/// Conjugacy class (index into `CLASS_NAMES`) of Frobenius for the given
/// splitting types: the swap part is nontrivial iff `K` is a field and the
/// index permutation has the cycle type of `L`.
pub fn expected_frobenius_class(k_inert: bool, l: CubicType) -> usize {
    match (k_inert, l) {
        (false, CubicType::Split) => 0,
        (true, CubicType::Split) => 1,
        (false, CubicType::Cubic) => 2,
        (true, CubicType::Quadratic) => 3,
        (true, CubicType::Cubic) => 4,
        (false, CubicType::Quadratic) => 5,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusRecord {
    pub q: u64,
    pub surface_count: u64,
    pub line_points: u64,
    pub u_count: u64,
    pub predicted: BigInt,
    pub frobenius: HexAut,
}

impl TorusRecord {
    pub fn passes(&self) -> bool {
        BigInt::from(self.u_count) == self.predicted
    }

    pub fn to_json(&self) -> Value {
        json!({
            "q": self.q,
            "surface_points": self.surface_count,
            "points_on_lines": self.line_points,
            "U_points": self.u_count,
            "det_qI_minus_phi": self.predicted.to_string(),
            "frobenius": perm_word(&self.frobenius.to_perm()),
        })
    }
}

/// `|U(F_q)|` against `|det(q I - phi | T^)|`.
pub fn torus_count_check(s: &DP6Surface<FiniteField>, cfg: &LineConfig, phi: &HexAut) -> Result<TorusRecord, Dp6Error> {
    let q = s.field().p();
    let pts = rational_points(s, 1, DEFAULT_POINT_BUDGET)?;
    let line_points = pts.iter().filter(|x| (0..6).any(|l| cfg.contains_point(l, x))).count() as u64;
    let (t, _) = t_hat(hex_group());
    let a = t.action_of(&phi.to_perm()).expect("phi lies in the hexagon group");
    let m = IntMatrix::identity(2).scale(&BigInt::from(q)).sub(a);
    Ok(TorusRecord {
        q,
        surface_count: pts.len() as u64,
        line_points,
        u_count: pts.len() as u64 - line_points,
        predicted: m.det().abs(),
        frobenius: *phi,
    })
}

/// What is known about `S`: a rational point, and/or its index `n_S`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Observation {
    pub has_rational_point: Option<bool>,
    pub n_s: Option<u32>,
}

pub fn lemma_number_check_flags(k_split: bool, b_split: bool, obs: &Observation) -> Result<(), Dp6Error> {
    let fail = |s: &str| Err(Dp6Error::InconsistentObservation(s.to_string()));
    let point = obs.has_rational_point == Some(true);
    if let Some(n) = obs.n_s {
        if n == 0 {
            return fail("n_S is positive");
        }
        if point && n != 1 {
            return fail("a rational point gives n_S = 1");
        }
        if n == 6 && (k_split || b_split) {
            return fail("n_S = 6 implies K and B are not split");
        }
        if k_split && 3 % n != 0 {
            return fail("K split implies n_S divides 3");
        }
        if b_split && 2 % n != 0 {
            return fail("B split implies n_S divides 2");
        }
    }
    if point && !b_split {
        return fail("a rational point implies B is split");
    }
    Ok(())
}

pub fn lemma_number_check(k: &QuadField, b: &InvariantVectorK, obs: &Observation) -> Result<(), Dp6Error> {
    if b.field() != *k {
        return Err(Dp6Error::Spec("B is given over a different K".into()));
    }
    lemma_number_check_flags(*k == QuadField::Split, b.is_split(), obs)
}

#[cfg(test)]
mod tests {
    use super::super::{standard_corpus, SurfaceModel};
    use super::*;
    use crate::brauer::{restriction, Fraction1, InvariantVector, Place};

    #[test]
    fn lines_and_frobenius_on_corpus() {
        for m in standard_corpus() {
            let s = m.build().unwrap();
            let cfg = find_lines(&s, m.splitting_degree()).unwrap();
            let phi = frobenius_on_lines(&cfg).unwrap();
            assert_eq!(phi.class_index(), expected_frobenius_class(m.k_inert, m.l), "{}", m.id());
        }
    }

    #[test]
    fn split_lines_meet_as_hexagon() {
        let s = SurfaceModel { p: 2, k_inert: false, l: CubicType::Split }.build().unwrap();
        let cfg = find_lines(&s, 1).unwrap();
        assert!(!cfg.meets(0, 1));
        assert!(!cfg.meets(0, 3));
        assert!(cfg.meets(0, 4));
        assert_eq!(frobenius_on_lines(&cfg).unwrap(), HexAut::identity());
        let t = torus_count_check(&s, &cfg, &HexAut::identity()).unwrap();
        assert_eq!((t.surface_count, t.line_points, t.u_count), (13, 12, 1));
        assert!(t.passes());
    }

    #[test]
    fn insufficient_extension() {
        let m = SurfaceModel { p: 2, k_inert: false, l: CubicType::Cubic };
        assert!(find_lines(&m.build().unwrap(), 2).is_err());
    }

    #[test]
    fn number_checks() {
        let six = Observation { has_rational_point: None, n_s: Some(6) };
        assert!(lemma_number_check_flags(true, false, &six).is_err());
        assert!(lemma_number_check_flags(false, false, &six).is_ok());
        let two = Observation { has_rational_point: None, n_s: Some(2) };
        assert!(lemma_number_check_flags(false, true, &two).is_ok());
        let pt = Observation { has_rational_point: Some(true), n_s: None };
        assert!(lemma_number_check_flags(false, true, &pt).is_ok());
        assert!(lemma_number_check_flags(false, false, &pt).is_err());
        let k = QuadField::new(-1).unwrap();
        let d = InvariantVector::new([
            (Place::Prime(7), "1/3".parse::<Fraction1>().unwrap()),
            (Place::Prime(13), "2/3".parse().unwrap()),
        ])
        .unwrap();
        let b = restriction(&d, k);
        assert!(lemma_number_check(&k, &b, &six).is_ok());
        assert!(lemma_number_check(&k, &b, &pt).is_err());
    }
}
