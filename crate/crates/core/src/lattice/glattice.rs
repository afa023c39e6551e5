//! Lattices with an action of a finite permutation group.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::normal_form::{kernel_basis, smith_normal_form, solve_in_lattice};
use super::{FiniteGroup, IntMatrix, LatticeError};

/// `action[i]` is the matrix of group element `i`, acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GLattice {
    rank: usize,
    group: FiniteGroup,
    action: Vec<IntMatrix>,
}

impl GLattice {
    /// Checks that the action is a homomorphism into `GL_n(Z)`.
    pub fn new(group: FiniteGroup, action: Vec<IntMatrix>) -> Result<Self, LatticeError> {
        let bad = |m: String| LatticeError::InvalidAction(m);
        if action.len() != group.order() {
            return Err(bad(format!("{} matrices for a group of order {}", action.len(), group.order())));
        }
        let rank = action[0].rows();
        for (i, m) in action.iter().enumerate() {
            if m.rows() != rank || m.cols() != rank {
                return Err(bad(format!("matrix {i} is not {rank}x{rank}")));
            }
            if !m.is_unimodular() {
                return Err(bad(format!("matrix {i} is not invertible over Z")));
            }
        }
        for a in 0..group.order() {
            for b in 0..group.order() {
                if action[group.mul(a, b)] != action[a].dot(&action[b]) {
                    return Err(bad(format!("action is not multiplicative at ({a}, {b})")));
                }
            }
        }
        Ok(GLattice { rank, group, action })
    }

    /// Extend matrices given on the group's generators to the whole group.
    pub fn from_generators(group: FiniteGroup, rank: usize, gens: &[IntMatrix]) -> Result<Self, LatticeError> {
        if gens.len() != group.generators().len() {
            return Err(LatticeError::InvalidAction("one matrix per generator expected".into()));
        }
        let mut action: Vec<Option<IntMatrix>> = vec![None; group.order()];
        action[0] = Some(IntMatrix::identity(rank));
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for (k, &s) in group.generators().iter().enumerate() {
                let y = group.mul(s, x);
                if action[y].is_none() {
                    action[y] = Some(gens[k].dot(action[x].as_ref().unwrap()));
                    frontier.push(y);
                }
            }
        }
        Self::new(group, action.into_iter().map(|m| m.unwrap()).collect())
    }

    pub fn from_fn(group: FiniteGroup, f: impl Fn(&[usize]) -> IntMatrix) -> Result<Self, LatticeError> {
        let action = group.elements().iter().map(|p| f(p)).collect();
        Self::new(group, action)
    }

    /// Permutation lattice: `f(g)` gives the permutation of the basis
    /// induced by `g`.
    pub fn permutation(group: FiniteGroup, n: usize, f: impl Fn(&[usize]) -> Vec<usize>) -> Result<Self, LatticeError> {
        Self::from_fn(group, |g| permutation_matrix(n, &f(g)))
    }

    /// `Z[G/H]` with basis the left cosets of `sub`.
    pub fn coset_lattice(group: &FiniteGroup, sub: &FiniteGroup) -> Result<Self, LatticeError> {
        let cosets = group.left_cosets(sub);
        let where_is = |x: usize| cosets.iter().position(|c| c.contains(&x)).unwrap();
        let action = (0..group.order())
            .map(|g| {
                let perm: Vec<usize> = cosets.iter().map(|c| where_is(group.mul(g, c[0]))).collect();
                permutation_matrix(cosets.len(), &perm)
            })
            .collect();
        Self::new(group.clone(), action)
    }

    pub fn trivial(group: FiniteGroup, rank: usize) -> Self {
        let action = vec![IntMatrix::identity(rank); group.order()];
        GLattice { rank, group, action }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn action(&self, g: usize) -> &IntMatrix {
        &self.action[g]
    }

    pub fn action_of(&self, perm: &[usize]) -> Option<&IntMatrix> {
        self.group.index_of(perm).map(|i| &self.action[i])
    }

    pub fn direct_sum(&self, o: &GLattice) -> Result<GLattice, LatticeError> {
        if self.group != o.group {
            return Err(LatticeError::GroupMismatch);
        }
        let action = self.action.iter().zip(&o.action).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(GLattice { rank: self.rank + o.rank, group: self.group.clone(), action })
    }

    /// The same lattice viewed as a module over a subgroup.
    pub fn restrict(&self, sub: &FiniteGroup) -> Result<GLattice, LatticeError> {
        if !self.group.contains_group(sub) {
            return Err(LatticeError::NotASubgroup);
        }
        let action = sub.elements().iter().map(|p| self.action_of(p).unwrap().clone()).collect();
        Ok(GLattice { rank: self.rank, group: sub.clone(), action })
    }

    /// Average trace over the group, which equals the rank of the fixed
    /// sublattice.
    pub fn trivial_multiplicity(&self) -> BigInt {
        let s: BigInt = self.action.iter().map(|m| m.trace()).sum();
        s / BigInt::from(self.group.order())
    }
}

pub fn permutation_matrix(n: usize, perm: &[usize]) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        m[(j, i)] = BigInt::one();
    }
    m
}

/// A homomorphism of lattices, as a `target.rank x source.rank` matrix.
#[derive(Clone, Debug)]
pub struct LatticeMap {
    pub source: GLattice,
    pub target: GLattice,
    pub matrix: IntMatrix,
}

impl LatticeMap {
    /// Checks shapes and equivariance on generators.
    pub fn new(source: GLattice, target: GLattice, matrix: IntMatrix) -> Result<Self, LatticeError> {
        if source.group != target.group {
            return Err(LatticeError::GroupMismatch);
        }
        if matrix.rows() != target.rank || matrix.cols() != source.rank {
            return Err(LatticeError::ShapeMismatch(
                format!("{}x{}", matrix.rows(), matrix.cols()),
                format!("{}x{}", target.rank, source.rank),
            ));
        }
        for &g in source.group.generators() {
            if matrix.dot(&source.action[g]) != target.action[g].dot(&matrix) {
                return Err(LatticeError::NotEquivariant(g));
            }
        }
        Ok(LatticeMap { source, target, matrix })
    }

    pub fn restrict(&self, sub: &FiniteGroup) -> Result<LatticeMap, LatticeError> {
        LatticeMap::new(self.source.restrict(sub)?, self.target.restrict(sub)?, self.matrix.clone())
    }
}

fn subgroup_lattice(l: &GLattice, g: &FiniteGroup) -> Result<GLattice, LatticeError> {
    if l.group == *g {
        Ok(l.clone())
    } else {
        l.restrict(g)
    }
}

/// Saturated basis (columns) of the vectors fixed by `g`.
pub fn fixed_submodule(l: &GLattice, g: &FiniteGroup) -> Result<IntMatrix, LatticeError> {
    let r = subgroup_lattice(l, g)?;
    let n = r.rank;
    let mut stack = IntMatrix::zeros(0, n);
    for &s in r.group.generators() {
        stack = stack.vstack(&r.action[s].sub(&IntMatrix::identity(n)));
    }
    Ok(kernel_basis(&stack))
}

/// Invariant factors (all > 1) of `H^1(G, L)`. A free part, which cannot
/// occur for a finite group, would show up as factor 0.
pub fn h1(l: &GLattice, g: &FiniteGroup) -> Result<Vec<BigInt>, LatticeError> {
    let r = subgroup_lattice(l, g)?;
    let n = r.rank;
    let order = r.group.order();
    let big_n = n * order;
    if big_n == 0 {
        return Ok(Vec::new());
    }
    // Cocycle conditions m_{gs} = m_g + g m_s for generators s, plus m_1 = 0;
    // these imply the condition for all pairs by induction on word length.
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for i in 0..n {
        let mut row = vec![BigInt::zero(); big_n];
        row[i] = BigInt::one();
        rows.push(row);
    }
    for x in 0..order {
        for &s in r.group.generators() {
            let xs = r.group.mul(x, s);
            let a = &r.action[x];
            for i in 0..n {
                let mut row = vec![BigInt::zero(); big_n];
                row[xs * n + i] += 1;
                row[x * n + i] -= 1;
                for j in 0..n {
                    row[s * n + j] -= &a[(i, j)];
                }
                rows.push(row);
            }
        }
    }
    let cond = IntMatrix::from_columns(
        &(0..big_n).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect::<Vec<_>>(),
        rows.len(),
    );
    let z1 = kernel_basis(&cond);
    if z1.cols() == 0 {
        return Ok(Vec::new());
    }
    let mut b1 = IntMatrix::zeros(big_n, n);
    for x in 0..order {
        let d = r.action[x].sub(&IntMatrix::identity(n));
        for i in 0..n {
            for j in 0..n {
                b1[(x * n + i, j)] = d[(i, j)].clone();
            }
        }
    }
    let coords = solve_in_lattice(&z1, &b1).expect("coboundaries are cocycles");
    let snf = smith_normal_form(&coords);
    let mut diag = snf.diagonal();
    diag.resize(z1.cols(), BigInt::zero());
    Ok(diag.into_iter().filter(|d| !d.is_one()).collect())
}

/// Where a sequence `0 -> A_0 -> A_1 -> ... -> A_k -> 0` fails to be exact.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExactnessFailure {
    NotInjective { map: usize },
    NonzeroComposite { map: usize },
    Homology { node: usize, invariant_factors: Vec<String> },
    NotSurjective { map: usize, cokernel: Vec<String> },
}

/// Nontrivial elementary divisors of `Z^rows / image(m)`, zeros for the
/// free part.
fn cokernel(m: &IntMatrix) -> Vec<BigInt> {
    let mut d = smith_normal_form(m).diagonal();
    d.resize(m.rows(), BigInt::zero());
    d.into_iter().filter(|x| !x.is_one()).collect()
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// Exactness of `0 -> A_0 -> ... -> A_k -> 0` for the matrices of the maps.
/// `Ok(None)` means exact.
pub fn is_exact_matrices(maps: &[IntMatrix]) -> Result<Option<ExactnessFailure>, LatticeError> {
    for (i, w) in maps.windows(2).enumerate() {
        if w[1].cols() != w[0].rows() {
            return Err(LatticeError::CompositionMismatch(i));
        }
    }
    let Some(first) = maps.first() else {
        return Ok(None);
    };
    if kernel_basis(first).cols() != 0 {
        return Ok(Some(ExactnessFailure::NotInjective { map: 0 }));
    }
    for (i, w) in maps.windows(2).enumerate() {
        if !w[1].dot(&w[0]).is_zero() {
            return Ok(Some(ExactnessFailure::NonzeroComposite { map: i }));
        }
        let ker = kernel_basis(&w[1]);
        let coords = solve_in_lattice(&ker, &w[0]).expect("image lies in kernel");
        let q = cokernel(&coords);
        if !q.is_empty() {
            return Ok(Some(ExactnessFailure::Homology { node: i + 1, invariant_factors: strings(&q) }));
        }
    }
    let last = maps.last().unwrap();
    let q = cokernel(last);
    if !q.is_empty() {
        return Ok(Some(ExactnessFailure::NotSurjective { map: maps.len() - 1, cokernel: strings(&q) }));
    }
    Ok(None)
}

pub fn is_exact(maps: &[LatticeMap]) -> Result<Option<ExactnessFailure>, LatticeError> {
    let mats: Vec<IntMatrix> = maps.iter().map(|m| m.matrix.clone()).collect();
    is_exact_matrices(&mats)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoSearch {
    Found(IntMatrix),
    /// Inconclusive: no unimodular intertwiner among the candidates tried.
    NotFound { hom_rank: usize, candidates: u64 },
}

/// Coefficient bound of the intertwiner search.
pub const ISO_SEARCH_BOUND: i64 = 3;
const ISO_SEARCH_LIMIT: u64 = 2_000_000;

/// Search for a unimodular `M` with `M rho_1(g) = rho_2(g) M`.
///
/// The intertwiners form a lattice; candidates are integer combinations of
/// its Hermite basis with coefficients in `[-3, 3]`, visited shell by shell
/// in the sup norm (values tried in the order 0, 1, -1, 2, -2, 3, -3).
pub fn equivariant_iso_search(l1: &GLattice, l2: &GLattice) -> Result<IsoSearch, LatticeError> {
    if l1.group != l2.group {
        return Err(LatticeError::GroupMismatch);
    }
    if l1.rank != l2.rank {
        return Ok(IsoSearch::NotFound { hom_rank: 0, candidates: 0 });
    }
    let n = l1.rank;
    let id = IntMatrix::identity(n);
    let intertwines = |m: &IntMatrix| {
        l1.group.generators().iter().all(|&g| m.dot(&l1.action[g]) == l2.action[g].dot(m))
    };
    if intertwines(&id) {
        return Ok(IsoSearch::Found(id));
    }
    // Unknown M flattened row-major: x[i*n + k] = M[i][k].
    let nn = n * n;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for &g in l1.group.generators() {
        let (a, b) = (&l1.action[g], &l2.action[g]);
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![BigInt::zero(); nn];
                for k in 0..n {
                    row[i * n + k] += &a[(k, j)];
                    row[k * n + j] -= &b[(i, k)];
                }
                rows.push(row);
            }
        }
    }
    let cond = IntMatrix::from_columns(
        &(0..nn).map(|c| rows.iter().map(|r| r[c].clone()).collect()).collect::<Vec<_>>(),
        rows.len(),
    );
    let hom = kernel_basis(&cond);
    let d = hom.cols();
    let basis: Vec<IntMatrix> = (0..d)
        .map(|c| {
            let col = hom.column(c);
            IntMatrix::from_columns(&(0..n).map(|k| (0..n).map(|i| col[i * n + k].clone()).collect()).collect::<Vec<_>>(), n)
        })
        .collect();
    let values: Vec<i64> = std::iter::once(0).chain((1..=ISO_SEARCH_BOUND).flat_map(|v| [v, -v])).collect();
    let mut tested: u64 = 0;
    for shell in 1..=ISO_SEARCH_BOUND as usize {
        let width = 2 * shell + 1;
        let mut digits = vec![0usize; d];
        loop {
            if digits.iter().any(|&x| x + 1 >= width) {
                tested += 1;
                if tested > ISO_SEARCH_LIMIT {
                    return Ok(IsoSearch::NotFound { hom_rank: d, candidates: tested - 1 });
                }
                let mut m = IntMatrix::zeros(n, n);
                for (b, &x) in basis.iter().zip(&digits) {
                    if x != 0 {
                        m = m.add(&b.scale(&BigInt::from(values[x])));
                    }
                }
                if m.det().abs().is_one() {
                    return Ok(IsoSearch::Found(m));
                }
            }
            let mut pos = 0;
            loop {
                if pos == d {
                    break;
                }
                digits[pos] += 1;
                if digits[pos] < width {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == d {
                break;
            }
        }
    }
    Ok(IsoSearch::NotFound { hom_rank: d, candidates: tested })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> FiniteGroup {
        FiniteGroup::generate(2, &[vec![1, 0]]).unwrap()
    }

    fn sign() -> GLattice {
        GLattice::from_generators(c2(), 1, &[IntMatrix::from_rows(&[vec![-1]])]).unwrap()
    }

    #[test]
    fn fixed_examples() {
        assert_eq!(fixed_submodule(&sign(), &c2()).unwrap().cols(), 0);
        let t = GLattice::trivial(c2(), 3);
        assert_eq!(fixed_submodule(&t, &c2()).unwrap(), IntMatrix::identity(3));
    }

    #[test]
    fn h1_examples() {
        assert!(h1(&GLattice::trivial(c2(), 2), &FiniteGroup::trivial(2)).unwrap().is_empty());
        assert_eq!(h1(&sign(), &c2()).unwrap(), vec![BigInt::from(2)]);
        let reg = GLattice::coset_lattice(&c2(), &FiniteGroup::trivial(2)).unwrap();
        assert!(h1(&reg, &c2()).unwrap().is_empty());
        assert!(h1(&GLattice::trivial(c2(), 1), &c2()).unwrap().is_empty());
    }

    #[test]
    fn exactness_examples() {
        let id = IntMatrix::identity(1);
        assert_eq!(is_exact_matrices(&[id]).unwrap(), None);
        let two = IntMatrix::from_rows(&[vec![2]]);
        assert!(matches!(
            is_exact_matrices(&[two]).unwrap(),
            Some(ExactnessFailure::NotSurjective { .. })
        ));
        let bad = [IntMatrix::identity(2), IntMatrix::identity(3)];
        assert!(matches!(is_exact_matrices(&bad), Err(LatticeError::CompositionMismatch(0))));
        let seq = [IntMatrix::from_rows(&[vec![1], vec![-1]]), IntMatrix::from_rows(&[vec![1, 1]])];
        assert_eq!(is_exact_matrices(&seq).unwrap(), None);
    }

    #[test]
    fn iso_search_examples() {
        let s = sign();
        assert_eq!(equivariant_iso_search(&s, &s).unwrap(), IsoSearch::Found(IntMatrix::identity(1)));
        assert!(matches!(
            equivariant_iso_search(&GLattice::trivial(c2(), 1), &s).unwrap(),
            IsoSearch::NotFound { hom_rank: 0, .. }
        ));
        let swap = GLattice::from_generators(c2(), 2, &[IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]])]).unwrap();
        let reg = GLattice::coset_lattice(&c2(), &FiniteGroup::trivial(2)).unwrap();
        assert!(matches!(equivariant_iso_search(&swap, &reg).unwrap(), IsoSearch::Found(_)));
    }
}
