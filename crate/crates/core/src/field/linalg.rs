//! Dense linear algebra over an exact field. Matrices are row-major
//! `Vec<Vec<_>>`; all routines are deterministic (pivot = first nonzero).

use super::Field;

pub type Mat<F> = Vec<Vec<<F as Field>::Elem>>;

pub fn zeros<F: Field>(f: &F, rows: usize, cols: usize) -> Mat<F> {
    vec![vec![f.zero(); cols]; rows]
}

pub fn identity<F: Field>(f: &F, n: usize) -> Mat<F> {
    let mut m = zeros(f, n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = f.one();
    }
    m
}

pub fn mul<F: Field>(f: &F, a: &Mat<F>, b: &Mat<F>) -> Mat<F> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b.iter())
                        .fold(f.zero(), |acc, (x, brow)| f.add(&acc, &f.mul(x, &brow[j])))
                })
                .collect()
        })
        .collect()
}

pub fn transpose<F: Field>(a: &Mat<F>) -> Mat<F> {
    let n = a.first().map_or(0, |r| r.len());
    (0..n).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Reduced row echelon form and pivot columns.
pub fn rref<F: Field>(f: &F, a: &Mat<F>) -> (Mat<F>, Vec<usize>) {
    let mut m = a.clone();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, pr);
        let inv = f.inv(&m[r][c]).unwrap();
        for x in m[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for i in 0..rows {
            if i != r && !f.is_zero(&m[i][c]) {
                let factor = m[i][c].clone();
                for j in 0..cols {
                    let v = f.mul(&factor, &m[r][j]);
                    m[i][j] = f.sub(&m[i][j], &v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank<F: Field>(f: &F, a: &Mat<F>) -> usize {
    rref(f, a).1.len()
}

/// Basis of the right kernel `{x : A x = 0}`, one vector per free column,
/// with a 1 in that free position.
pub fn kernel<F: Field>(f: &F, a: &Mat<F>, cols: usize) -> Vec<Vec<F::Elem>> {
    let (m, pivots) = rref(f, a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); cols];
            v[fc] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&m[r][fc]);
            }
            v
        })
        .collect()
}

/// Some solution of `A x = b`, or `None` if inconsistent.
pub fn solve<F: Field>(f: &F, a: &Mat<F>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let cols = a.first().map_or(0, |r| r.len());
    let aug: Mat<F> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (m, pivots) = rref(f, &aug);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![f.zero(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = m[r][cols].clone();
    }
    Some(x)
}

pub fn det<F: Field>(f: &F, a: &Mat<F>) -> F::Elem {
    let n = a.len();
    let mut m = a.clone();
    let mut d = f.one();
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| !f.is_zero(&m[i][c])) else {
            return f.zero();
        };
        if pr != c {
            m.swap(pr, c);
            d = f.neg(&d);
        }
        d = f.mul(&d, &m[c][c]);
        let inv = f.inv(&m[c][c]).unwrap();
        for i in c + 1..n {
            if !f.is_zero(&m[i][c]) {
                let factor = f.mul(&m[i][c], &inv);
                for j in c..n {
                    let v = f.mul(&factor, &m[c][j]);
                    m[i][j] = f.sub(&m[i][j], &v);
                }
            }
        }
    }
    d
}

pub fn inverse<F: Field>(f: &F, a: &Mat<F>) -> Option<Mat<F>> {
    let n = a.len();
    let aug: Mat<F> = a
        .iter()
        .zip(identity(f, n))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    let (m, pivots) = rref(f, &aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FiniteField, Rational, Rationals};

    fn q(rows: &[&[i64]]) -> Mat<Rationals> {
        rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect()
    }

    #[test]
    fn inverse_and_det() {
        let a = q(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(det(&Rationals, &a), Rational::from_int(18));
        let ai = inverse(&Rationals, &a).unwrap();
        assert_eq!(mul(&Rationals, &a, &ai), identity(&Rationals, 3));
        let sing = q(&[&[1, 2], &[2, 4]]);
        assert!(inverse(&Rationals, &sing).is_none());
    }

    #[test]
    fn kernel_over_f2() {
        let f2 = FiniteField::prime(2).unwrap();
        let a: Mat<FiniteField> = vec![vec![1, 1, 0], vec![0, 1, 1]];
        let k = kernel(&f2, &a, 3);
        assert_eq!(k, vec![vec![1, 1, 1]]);
        assert!(solve(&f2, &a, &[1, 0]).is_some());
    }
}
