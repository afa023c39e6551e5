//! Smith and Hermite normal forms, integer kernels and lattice membership.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `u * m * v = s` with `u`, `v` unimodular and `s` diagonal with
/// nonnegative entries `d_1 | d_2 | ...`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

fn min_abs_entry(a: &IntMatrix, r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in r0..a.rows() {
        for j in c0..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smith normal form by elementary operations, pivoting on the entry of
/// least absolute value.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    for t in 0..r.min(c) {
        loop {
            let Some((pi, pj)) = min_abs_entry(&a, t, t) else {
                return Snf { s: a, u, v };
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..r {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&a[(i, t)] / &a[(t, t)]);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..c {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&a[(t, j)] / &a[(t, t)]);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let piv = a[(t, t)].clone();
            let bad_row = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a[(i, j)].is_multiple_of(&piv)));
            match bad_row {
                Some(i) => {
                    a.add_row_multiple(t, i, &BigInt::one());
                    u.add_row_multiple(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    Snf { s: a, u, v }
}

/// Nonzero diagonal entries of the Smith form.
pub fn elementary_divisors(m: &IntMatrix) -> Vec<BigInt> {
    smith_normal_form(m).diagonal().into_iter().filter(|d| !d.is_zero()).collect()
}

/// Column operations only: returns `(h, v, rank)` with `m * v = h` and the
/// first `rank` columns of `h` in echelon form, the rest zero.
fn column_echelon(m: &IntMatrix) -> (IntMatrix, IntMatrix, usize) {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut v = IntMatrix::identity(c);
    let mut pc = 0;
    for row in 0..r {
        if pc == c {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for j in pc..c {
                if !a[(row, j)].is_zero() && best.is_none_or(|b| a[(row, j)].abs() < a[(row, b)].abs()) {
                    best = Some(j);
                }
            }
            let Some(b) = best else { break };
            a.swap_cols(pc, b);
            v.swap_cols(pc, b);
            let mut clean = true;
            for j in pc + 1..c {
                if a[(row, j)].is_zero() {
                    continue;
                }
                let q = -(&a[(row, j)] / &a[(row, pc)]);
                a.add_col_multiple(j, pc, &q);
                v.add_col_multiple(j, pc, &q);
                clean &= a[(row, j)].is_zero();
            }
            if clean {
                pc += 1;
                break;
            }
        }
    }
    (a, v, pc)
}

/// Row-style Hermite normal form of the row lattice of `m`: echelon, positive
/// pivots, entries above each pivot reduced into `[0, pivot)`. Zero rows are
/// dropped.
pub fn hnf_rows(m: &IntMatrix) -> IntMatrix {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut pr = 0;
    for col in 0..c {
        if pr == r {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in pr..r {
                if !a[(i, col)].is_zero() && best.is_none_or(|b| a[(i, col)].abs() < a[(b, col)].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            a.swap_rows(pr, b);
            let mut clean = true;
            for i in pr + 1..r {
                if a[(i, col)].is_zero() {
                    continue;
                }
                let q = -(&a[(i, col)] / &a[(pr, col)]);
                a.add_row_multiple(i, pr, &q);
                clean &= a[(i, col)].is_zero();
            }
            if clean {
                if a[(pr, col)].is_negative() {
                    a.negate_row(pr);
                }
                for i in 0..pr {
                    let q = -a[(i, col)].div_floor(&a[(pr, col)]);
                    a.add_row_multiple(i, pr, &q);
                }
                pr += 1;
                break;
            }
        }
    }
    a.select_rows(&(0..pr).collect::<Vec<_>>())
}

/// Canonical form of a lattice basis given as columns: the transpose of the
/// row HNF of its transpose.
pub fn canonical_basis(basis_cols: &IntMatrix) -> IntMatrix {
    if basis_cols.cols() == 0 {
        return basis_cols.clone();
    }
    let h = hnf_rows(&basis_cols.transpose()).transpose();
    if h.cols() == 0 {
        IntMatrix::zeros(basis_cols.rows(), 0)
    } else {
        h
    }
}

/// Columns form a saturated `Z`-basis of `{x : m x = 0}`, in canonical
/// (Hermite) form.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let (_, v, rank) = column_echelon(m);
    let cols: Vec<usize> = (rank..m.cols()).collect();
    canonical_basis(&v.select_columns(&cols))
}

/// Rank over `Q`.
pub fn rank(m: &IntMatrix) -> usize {
    column_echelon(m).2
}

/// Whether the columns of `b` are independent and span a saturated
/// sublattice (torsion-free cokernel).
pub fn is_saturated(b: &IntMatrix) -> bool {
    let snf = smith_normal_form(b);
    let d = snf.diagonal();
    d.len() == b.cols() && d.iter().all(|x| x.is_one())
}

/// Solve `b * c = x` over the integers for a basis matrix `b` with
/// independent columns. `None` if some column of `x` is outside the lattice
/// spanned by `b`.
pub fn solve_in_lattice(b: &IntMatrix, x: &IntMatrix) -> Option<IntMatrix> {
    let snf = smith_normal_form(b);
    let d = snf.diagonal();
    let k = b.cols();
    if d.iter().filter(|x| !x.is_zero()).count() != k {
        return None;
    }
    let ux = snf.u.dot(x);
    let mut y = IntMatrix::zeros(k, x.cols());
    for j in 0..x.cols() {
        for i in 0..ux.rows() {
            let val = &ux[(i, j)];
            if i < k {
                let (q, r) = val.div_rem(&d[i]);
                if !r.is_zero() {
                    return None;
                }
                y[(i, j)] = q;
            } else if !val.is_zero() {
                return None;
            }
        }
    }
    Some(snf.v.dot(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(m: &IntMatrix) -> Vec<i64> {
        use num_traits::ToPrimitive;
        smith_normal_form(m).diagonal().iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(diag(&IntMatrix::identity(3)), vec![1, 1, 1]);
        assert_eq!(diag(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]])), vec![1, 6]);
        assert_eq!(diag(&IntMatrix::zeros(2, 2)), vec![0, 0]);
    }

    #[test]
    fn snf_transforms() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.u.dot(&m).dot(&snf.v), snf.s);
        assert_eq!(diag(&m), vec![2, 6, 12]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_basis(&IntMatrix::identity(3)).cols(), 0);
        let k = kernel_basis(&IntMatrix::from_rows(&[vec![1, 1]]));
        assert_eq!(k, IntMatrix::from_rows(&[vec![1], vec![-1]]));
        let k2 = kernel_basis(&IntMatrix::from_rows(&[vec![2, 4, 6]]));
        assert_eq!(k2.cols(), 2);
        assert!(is_saturated(&k2));
    }

    #[test]
    fn lattice_membership() {
        let b = IntMatrix::from_rows(&[vec![2], vec![0]]);
        assert!(solve_in_lattice(&b, &IntMatrix::from_rows(&[vec![4], vec![0]])).is_some());
        assert!(solve_in_lattice(&b, &IntMatrix::from_rows(&[vec![3], vec![0]])).is_none());
        assert!(solve_in_lattice(&b, &IntMatrix::from_rows(&[vec![2], vec![1]])).is_none());
    }

    #[test]
    fn hnf_reduces_above_pivots() {
        let m = IntMatrix::from_rows(&[vec![3, 5], vec![0, 2], vec![6, 10]]);
        let h = hnf_rows(&m);
        assert_eq!(h, IntMatrix::from_rows(&[vec![3, 1], vec![0, 2]]));
    }
}
