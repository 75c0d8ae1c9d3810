//! Exact linear algebra over fields with an involution (complex conjugation).
//!
//! Implemented for [`GaussianRational`](crate::GaussianRational) and for
//! cyclotomic numbers. All routines are fraction-exact; nothing depends on
//! pivot magnitudes.

use std::fmt::Debug;

/// A field with conjugation, able to decide the sign of its self-conjugate
/// (real) elements.
pub trait ConjField: Clone + PartialEq + Debug + Send + Sync {
    /// Zero of the same field as `self` (cyclotomic elements carry their field).
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Panics on zero.
    fn inv(&self) -> Self;
    fn conj(&self) -> Self;
    /// Sign of a real element: -1, 0 or 1. Only meaningful when `self == self.conj()`.
    fn real_sign(&self) -> i32;
}

pub type Mat<F> = Vec<Vec<F>>;

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: ConjField>(rows: &mut Mat<F>) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(pr) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inv();
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    if rows[r][j].is_zero() {
                        continue;
                    }
                    let t = f.mul(&rows[r][j]);
                    rows[i][j] = rows[i][j].sub(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: ConjField>(rows: &Mat<F>) -> usize {
    let mut m = rows.clone();
    rref(&mut m).len()
}

/// Basis of `{x : A x = 0}` for an `m × ncols` matrix given by rows.
pub fn kernel<F: ConjField>(rows: &Mat<F>, ncols: usize, zero: &F) -> Mat<F> {
    let mut m = rows.clone();
    let pivots = rref(&mut m);
    let one = zero.one_like();
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![zero.clone(); ncols];
            v[fc] = one.clone();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = m[ri][fc].neg();
            }
            v
        })
        .collect()
}

/// Indices of a maximal linearly independent subfamily, chosen greedily in
/// order: the pivot columns of the matrix whose columns are the vectors.
pub fn independent_subset<F: ConjField>(vectors: &[Vec<F>]) -> Vec<usize> {
    let Some(dim) = vectors.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut cols: Mat<F> = (0..dim).map(|r| vectors.iter().map(|v| v[r].clone()).collect()).collect();
    rref(&mut cols)
}

pub fn mat_vec<F: ConjField>(m: &Mat<F>, v: &[F], zero: &F) -> Vec<F> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(zero.clone(), |acc, (a, b)| acc.add(&a.mul(b)))
        })
        .collect()
}

/// `uᴴ M v`, antilinear in the first argument.
pub fn sesquilinear<F: ConjField>(m: &Mat<F>, u: &[F], v: &[F], zero: &F) -> F {
    let mv = mat_vec(m, v, zero);
    u.iter()
        .zip(&mv)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .fold(zero.clone(), |acc, (a, b)| acc.add(&a.conj().mul(b)))
}

/// Signature of a Hermitian matrix by congruence diagonalization.
///
/// Pivots on the first nonzero diagonal entry in row order. When the whole
/// remaining diagonal vanishes but some entry `a = M[i][j]` does not, row and
/// column `i` are replaced by `row_i + a·row_j` (and the conjugate column
/// operation), which puts `2|a|² ≠ 0` on the diagonal.
pub fn hermitian_signature<F: ConjField>(matrix: &Mat<F>) -> i64 {
    let mut m = matrix.clone();
    let mut signature = 0i64;
    loop {
        let n = m.len();
        if n == 0 {
            return signature;
        }
        let pivot = match (0..n).find(|&i| !m[i][i].is_zero()) {
            Some(p) => p,
            None => {
                let Some((i, j)) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| i != j && !m[i][j].is_zero())
                else {
                    return signature;
                };
                let c = m[i][j].clone();
                let cc = c.conj();
                for k in 0..n {
                    let t = c.mul(&m[j][k]);
                    m[i][k] = m[i][k].add(&t);
                }
                for k in 0..n {
                    let t = m[k][j].mul(&cc);
                    m[k][i] = m[k][i].add(&t);
                }
                i
            }
        };
        let d = m[pivot][pivot].clone();
        signature += i64::from(d.real_sign());
        let dinv = d.inv();
        let rest: Vec<usize> = (0..n).filter(|&k| k != pivot).collect();
        let next: Mat<F> = rest
            .iter()
            .map(|&i| {
                let f = m[i][pivot].mul(&dinv);
                rest.iter()
                    .map(|&j| m[i][j].sub(&f.mul(&m[pivot][j])))
                    .collect()
            })
            .collect();
        m = next;
    }
}
