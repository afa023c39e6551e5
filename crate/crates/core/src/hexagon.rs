//! The split degree-6 del Pezzo surface as combinatorics: six lines in a
//! hexagon, the Picard lattice with basis `(H, E1, E2, E3)`, the action of
//! `S2 x S3`, and the two exact sequences of Galois lattices built from the
//! lines.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::lattice::{
    equivariant_iso_search, fixed_submodule, h1, is_exact, solve_in_lattice, FiniteGroup, GLattice, IntMatrix,
    IsoSearch, LatticeError, LatticeMap, Perm,
};

/// Lines are numbered `E1, E2, E3, F1, F2, F3 = 0..6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineLabel {
    E1,
    E2,
    E3,
    F1,
    F2,
    F3,
}

pub const LINES: [LineLabel; 6] = [LineLabel::E1, LineLabel::E2, LineLabel::E3, LineLabel::F1, LineLabel::F2, LineLabel::F3];

impl LineLabel {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> LineLabel {
        LINES[i]
    }

    pub fn is_e(self) -> bool {
        self.index() < 3
    }

    /// 0, 1 or 2.
    pub fn slot(self) -> usize {
        self.index() % 3
    }
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.is_e() { "E" } else { "F" }, self.slot() + 1)
    }
}

impl FromStr for LineLabel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        LINES
            .iter()
            .copied()
            .find(|l| l.to_string() == s.trim())
            .ok_or_else(|| format!("unknown line label {s:?}"))
    }
}

pub type PicVector = [i64; 4];

pub const CANONICAL_CLASS: PicVector = [-3, 1, 1, 1];

/// `E_i` is a basis vector; `F_i = H - E_j - E_k`.
pub fn line_class(l: LineLabel) -> PicVector {
    let i = l.slot();
    let mut v = [0; 4];
    if l.is_e() {
        v[i + 1] = 1;
    } else {
        v[0] = 1;
        for j in 0..3 {
            if j != i {
                v[j + 1] = -1;
            }
        }
    }
    v
}

/// The form `diag(1, -1, -1, -1)`.
pub fn intersection(a: &PicVector, b: &PicVector) -> i64 {
    a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]
}

/// An automorphism of the hexagon: `s` exchanges each `E_i` with `F_i`,
/// `sigma` permutes the indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HexAut {
    pub s: bool,
    pub sigma: [usize; 3],
}

impl HexAut {
    pub fn identity() -> Self {
        HexAut { s: false, sigma: [0, 1, 2] }
    }

    /// Image of each line, as a permutation of `0..6`.
    pub fn to_perm(&self) -> Perm {
        LINES
            .iter()
            .map(|l| {
                let e = l.is_e() != self.s;
                self.sigma[l.slot()] + if e { 0 } else { 3 }
            })
            .collect()
    }

    /// Inverse of [`HexAut::to_perm`]; `None` for permutations that do not
    /// preserve the hexagon.
    pub fn from_perm(p: &[usize]) -> Option<Self> {
        if p.len() != 6 {
            return None;
        }
        let s = p[0] >= 3;
        let sigma = [p[0] % 3, p[1] % 3, p[2] % 3];
        let h = HexAut { s, sigma };
        let mut sorted = sigma;
        sorted.sort();
        (sorted == [0, 1, 2] && h.to_perm() == p).then_some(h)
    }

    pub fn apply(&self, l: LineLabel) -> LineLabel {
        LineLabel::from_index(self.to_perm()[l.index()])
    }

    fn sigma_kind(&self) -> usize {
        let fixed = (0..3).filter(|&i| self.sigma[i] == i).count();
        match fixed {
            3 => 0,
            1 => 2,
            _ => 1,
        }
    }

    /// Position of the conjugacy class in [`CLASS_NAMES`].
    pub fn class_index(&self) -> usize {
        match (self.s, self.sigma_kind()) {
            (false, 0) => 0,
            (true, 0) => 1,
            (false, 1) => 2,
            (true, 2) => 3,
            (true, 1) => 4,
            _ => 5,
        }
    }
}

pub const CLASS_NAMES: [&str; 6] = ["identity", "swap", "3-cycle", "swap*transposition", "swap*3-cycle", "transposition"];

/// Cycle notation on line labels, e.g. `(E1 F1)(E2 F2)(E3 F3)`; `()` for the
/// identity.
pub fn perm_word(p: &[usize]) -> String {
    let mut seen = [false; 6];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cyc = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cyc.push(LineLabel::from_index(x).to_string());
            x = p[x];
        }
        out.push('(');
        out.push_str(&cyc.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Parse cycle notation on line labels into a permutation of `0..6`.
pub fn parse_perm_word(s: &str) -> Result<Perm, String> {
    let mut p: Perm = (0..6).collect();
    let s = s.trim();
    let mut rest = s;
    while !rest.is_empty() {
        let r = rest.strip_prefix('(').ok_or_else(|| format!("bad permutation word {s:?}"))?;
        let end = r.find(')').ok_or_else(|| format!("bad permutation word {s:?}"))?;
        let labels: Vec<usize> = r[..end]
            .split_whitespace()
            .map(|t| t.parse::<LineLabel>().map(|l| l.index()))
            .collect::<Result<_, _>>()?;
        let mut cyc: Perm = (0..6).collect();
        for (k, &a) in labels.iter().enumerate() {
            cyc[a] = labels[(k + 1) % labels.len()];
        }
        let mut used = labels.clone();
        used.sort();
        used.dedup();
        if used.len() != labels.len() {
            return Err(format!("repeated label in {s:?}"));
        }
        // Cycles compose right to left.
        p = cyc.iter().map(|&x| p[x]).collect();
        rest = r[end + 1..].trim_start();
    }
    Ok(p)
}

/// The full automorphism group of the hexagon, with generators the swap, a
/// transposition and a 3-cycle.
pub fn hex_group() -> &'static FiniteGroup {
    static G: OnceLock<FiniteGroup> = OnceLock::new();
    G.get_or_init(|| {
        let gens = [
            HexAut { s: true, sigma: [0, 1, 2] }.to_perm(),
            HexAut { s: false, sigma: [1, 0, 2] }.to_perm(),
            HexAut { s: false, sigma: [1, 2, 0] }.to_perm(),
        ];
        FiniteGroup::generate(6, &gens).expect("hexagon group")
    })
}

/// The 16 subgroups, ordered by `(order, element list)`.
pub fn hex_subgroups() -> &'static [FiniteGroup] {
    static S: OnceLock<Vec<FiniteGroup>> = OnceLock::new();
    S.get_or_init(|| hex_group().subgroups())
}

/// Matrix on `(H, E1, E2, E3)` sending each line class to the class of its
/// image.
pub fn hex_action(g: &HexAut) -> IntMatrix {
    // Columns E1, E2, E3, F1 form a unimodular basis.
    let basis = [LineLabel::E1, LineLabel::E2, LineLabel::E3, LineLabel::F1];
    let col = |l: LineLabel| line_class(l).iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
    let b = IntMatrix::from_columns(&basis.map(col), 4);
    let img = IntMatrix::from_columns(&basis.map(|l| col(g.apply(l))), 4);
    let coords = solve_in_lattice(&b, &IntMatrix::identity(4)).expect("basis is unimodular");
    img.dot(&coords)
}

pub fn pic_lattice(group: &FiniteGroup) -> GLattice {
    GLattice::from_fn(group.clone(), |p| hex_action(&HexAut::from_perm(p).expect("hexagon automorphism")))
        .expect("hexagon action is a homomorphism")
}

/// `Z[KL/F]`: the permutation lattice on the six lines.
pub fn lines_lattice(group: &FiniteGroup) -> GLattice {
    GLattice::permutation(group.clone(), 6, |p| p.to_vec()).expect("permutation action")
}

/// `Z[L/F]`: permutation lattice on the opposite pairs `{E_i, F_i}`.
pub fn pairs_lattice(group: &FiniteGroup) -> GLattice {
    GLattice::permutation(group.clone(), 3, |p| (0..3).map(|i| p[i] % 3).collect()).expect("permutation action")
}

/// `Z[K/F]`: permutation lattice on the two triangles `{E*}`, `{F*}`.
pub fn triangles_lattice(group: &FiniteGroup) -> GLattice {
    GLattice::permutation(group.clone(), 2, |p| if p[0] >= 3 { vec![1, 0] } else { vec![0, 1] })
        .expect("permutation action")
}

fn int_col(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// `Z[KL/F] -> Pic`, each line to its class.
pub fn divisor_map(group: &FiniteGroup) -> LatticeMap {
    let m = IntMatrix::from_columns(&LINES.map(|l| int_col(&line_class(l))), 4);
    LatticeMap::new(lines_lattice(group), pic_lattice(group), m).expect("divisor map is equivariant")
}

/// The kernel of the divisor map with the induced action, and its
/// inclusion into `Z[KL/F]`.
pub fn t_hat(group: &FiniteGroup) -> (GLattice, LatticeMap) {
    let d = divisor_map(group);
    let k = crate::lattice::kernel_basis(&d.matrix);
    let lines = lines_lattice(group);
    let action: Vec<IntMatrix> = (0..group.order())
        .map(|g| solve_in_lattice(&k, &lines.action(g).dot(&k)).expect("kernel is stable"))
        .collect();
    let t = GLattice::new(group.clone(), action).expect("restricted action");
    let inc = LatticeMap::new(t.clone(), lines, k).expect("inclusion is equivariant");
    (t, inc)
}

/// `0 -> T^ -> Z[KL/F] -> Pic -> 0`.
pub fn first_sequence(group: &FiniteGroup) -> Vec<LatticeMap> {
    vec![t_hat(group).1, divisor_map(group)]
}

/// `Z[KL/F] -> Z[L/F] + Z[K/F]`: a line to its pair and to its triangle.
pub fn pair_triangle_map(group: &FiniteGroup) -> LatticeMap {
    let cols: Vec<Vec<BigInt>> = LINES
        .iter()
        .map(|l| {
            let mut v = vec![0i64; 5];
            v[l.slot()] = 1;
            v[if l.is_e() { 3 } else { 4 }] = 1;
            int_col(&v)
        })
        .collect();
    let target = pairs_lattice(group).direct_sum(&triangles_lattice(group)).expect("same group");
    LatticeMap::new(lines_lattice(group), target, IntMatrix::from_columns(&cols, 5)).expect("equivariant")
}

/// `0 -> T^ -> Z[KL/F] -> Z[L/F] + Z[K/F] -> Z -> 0`, the last map being
/// the difference of the augmentations.
pub fn second_sequence(group: &FiniteGroup) -> Vec<LatticeMap> {
    let mid = pair_triangle_map(group);
    let aug = IntMatrix::from_rows(&[vec![1, 1, 1, -1, -1]]);
    let last = LatticeMap::new(mid.target.clone(), GLattice::trivial(group.clone(), 1), aug).expect("equivariant");
    vec![t_hat(group).1, mid, last]
}

/// Whether `k` is a proper multiple of another lattice vector.
pub fn is_k_divisible(k: &[BigInt]) -> bool {
    let g = k.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
    !g.is_one()
}

/// `Pic + Z` and `Z[L/F] + Z[K/F]` over `group`.
pub fn stable_pair(group: &FiniteGroup) -> (GLattice, GLattice) {
    let a = pic_lattice(group).direct_sum(&GLattice::trivial(group.clone(), 1)).expect("same group");
    let b = pairs_lattice(group).direct_sum(&triangles_lattice(group)).expect("same group");
    (a, b)
}

/// Intertwiner `Pic + Z -> Z[L/F] + Z[K/F]` for the full group, found by
/// search once and cached.
pub fn stable_isomorphism() -> Option<&'static IntMatrix> {
    static M: OnceLock<Option<IntMatrix>> = OnceLock::new();
    M.get_or_init(|| {
        let (a, b) = stable_pair(hex_group());
        match equivariant_iso_search(&a, &b) {
            Ok(IsoSearch::Found(m)) => Some(m),
            _ => None,
        }
    })
    .as_ref()
}

/// Per-class traces on `Pic`: `(class name, class size, trace)` in the
/// order of [`CLASS_NAMES`].
pub fn trace_table() -> Vec<(&'static str, usize, i64)> {
    let g = hex_group();
    let mut out: Vec<(&'static str, usize, i64)> = CLASS_NAMES.iter().map(|&n| (n, 0, 0)).collect();
    for p in g.elements() {
        let h = HexAut::from_perm(p).unwrap();
        let c = h.class_index();
        let t: i64 = hex_action(&h).trace().try_into().expect("small trace");
        if out[c].1 > 0 {
            assert_eq!(out[c].2, t, "trace is a class function");
        }
        out[c].1 += 1;
        out[c].2 = t;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupReport {
    pub subgroup_id: usize,
    pub order: usize,
    pub generators: Vec<String>,
    pub fixed_rank: usize,
    pub h1: Vec<String>,
    pub sequences_exact: bool,
    pub stable_iso_found: bool,
}

impl SubgroupReport {
    pub fn to_json(&self) -> Value {
        json!({
            "subgroup_id": self.subgroup_id,
            "order": self.order,
            "generators": self.generators,
            "fixed_rank": self.fixed_rank,
            "h1": self.h1,
            "sequences_exact": self.sequences_exact,
            "stable_iso_found": self.stable_iso_found,
        })
    }
}

pub fn subgroup_report(id: usize) -> Result<SubgroupReport, LatticeError> {
    let g = hex_subgroups().get(id).ok_or(LatticeError::NotASubgroup)?;
    let pic = pic_lattice(g);
    let fixed = fixed_submodule(&pic, g)?;
    let h = h1(&pic, g)?;
    let exact = is_exact(&first_sequence(g))?.is_none() && is_exact(&second_sequence(g))?.is_none();
    let (a, b) = stable_pair(g);
    let stable = stable_isomorphism().is_some_and(|m| {
        m.is_unimodular() && g.generators().iter().all(|&s| m.dot(a.action(s)) == b.action(s).dot(m))
    });
    Ok(SubgroupReport {
        subgroup_id: id,
        order: g.order(),
        generators: g.generator_perms().iter().map(|p| perm_word(p)).collect(),
        fixed_rank: fixed.cols(),
        h1: h.iter().map(|x| x.to_string()).collect(),
        sequences_exact: exact,
        stable_iso_found: stable,
    })
}

pub fn pic_vector_to_bigint(v: &PicVector) -> Vec<BigInt> {
    int_col(v)
}

/// Sign-normalised generator of a rank-one lattice given by one column.
pub fn primitive_sign_normalised(col: &[BigInt]) -> Vec<BigInt> {
    let first = col.iter().find(|x| !x.is_zero());
    if first.is_some_and(|x| x.is_negative()) {
        col.iter().map(|x| -x).collect()
    } else {
        col.to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_classes() {
        assert_eq!(line_class(LineLabel::E1), [0, 1, 0, 0]);
        assert_eq!(line_class(LineLabel::F1), [1, 0, -1, -1]);
        for a in LINES {
            let ca = line_class(a);
            assert_eq!(intersection(&ca, &ca), -1);
            assert_eq!(intersection(&ca, &CANONICAL_CLASS), -1);
            for b in LINES {
                if a == b {
                    continue;
                }
                let expect = if a.is_e() != b.is_e() && a.slot() != b.slot() { 1 } else { 0 };
                assert_eq!(intersection(&ca, &line_class(b)), expect, "{a} . {b}");
            }
        }
        assert_eq!(intersection(&CANONICAL_CLASS, &CANONICAL_CLASS), 6);
    }

    #[test]
    fn group_and_subgroups() {
        assert_eq!(hex_group().order(), 12);
        assert_eq!(hex_subgroups().len(), 16);
        assert_eq!(hex_group().element(0), &(0..6).collect::<Vec<_>>());
    }

    #[test]
    fn swap_sends_e1_to_f1() {
        let m = hex_action(&HexAut { s: true, sigma: [0, 1, 2] });
        assert_eq!(m.column(1), int_col(&[1, 0, -1, -1]));
    }

    #[test]
    fn traces() {
        let t: Vec<i64> = trace_table().iter().map(|x| x.2).collect();
        assert_eq!(t, vec![4, 2, 1, 0, -1, 2]);
        let s: i64 = trace_table().iter().map(|x| x.1 as i64 * x.2).sum();
        assert_eq!(s, 12);
    }

    #[test]
    fn perm_words_roundtrip() {
        for p in hex_group().elements() {
            assert_eq!(&parse_perm_word(&perm_word(p)).unwrap(), p);
        }
        assert_eq!(perm_word(&HexAut { s: true, sigma: [0, 1, 2] }.to_perm()), "(E1 F1)(E2 F2)(E3 F3)");
    }

    #[test]
    fn k_divisibility() {
        assert!(!is_k_divisible(&int_col(&CANONICAL_CLASS)));
        assert!(is_k_divisible(&int_col(&[-3])));
        assert!(is_k_divisible(&int_col(&[-2, -2])));
    }
}

#[cfg(test)]
mod report_tests {
    use super::*;

    #[test]
    fn all_subgroup_reports() {
        for id in 0..16 {
            let r = subgroup_report(id).unwrap();
            assert!(r.sequences_exact);
            assert!(r.stable_iso_found);
            assert!(r.h1.is_empty());
        }
        assert!(stable_isomorphism().is_some());
    }
}
