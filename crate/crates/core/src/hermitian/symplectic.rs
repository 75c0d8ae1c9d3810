use serde::Serialize;

use super::{GaussianRational, HermitianMatrix};
use crate::field::{independent_subset, kernel, rank, sesquilinear, ConjField, Mat};
use crate::{Error, Result};

type G = GaussianRational;

/// A finite-dimensional complex vector space with a nondegenerate
/// skew-Hermitian form `ω(u, v) = uᴴ Ω v`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SymplecticSpace {
    omega: Mat<G>,
}

impl SymplecticSpace {
    pub fn new(omega: Mat<G>) -> Result<Self> {
        let n = omega.len();
        if omega.iter().any(|row| row.len() != n) {
            return Err(Error::NotSquare);
        }
        if !n.is_multiple_of(2) {
            return Err(Error::NotSymplectic(format!("odd dimension {n}")));
        }
        for i in 0..n {
            for j in i..n {
                if omega[i][j] != omega[j][i].conj().neg() {
                    return Err(Error::NotSymplectic(format!(
                        "entry ({i},{j}) breaks skew-Hermitian symmetry"
                    )));
                }
            }
        }
        if rank(&omega) != n {
            return Err(Error::NotSymplectic("form is degenerate".into()));
        }
        Ok(SymplecticSpace { omega })
    }

    /// `(μ₁..μ_m, λ₁..λ_m)` with `ω(μ_i, λ_j) = −δ_ij` and all other pairings zero.
    pub fn standard(m: usize) -> Self {
        let n = 2 * m;
        let mut omega = vec![vec![G::zero(); n]; n];
        for i in 0..m {
            omega[i][m + i] = G::from_int(-1);
            omega[m + i][i] = G::from_int(1);
        }
        SymplecticSpace { omega }
    }

    /// Symplectic form from an intersection form on middle-degree homology of
    /// a closed `(2k−2)`-manifold: the form itself when `k` is even
    /// (skew-Hermitian), `i` times it when `k` is odd (Hermitian).
    pub fn from_intersection_form(form: Mat<G>, k: u32) -> Result<Self> {
        if k.is_multiple_of(2) {
            SymplecticSpace::new(form)
        } else {
            let i = G::i();
            let twisted = form
                .iter()
                .map(|row| row.iter().map(|x| ConjField::mul(&i, x)).collect())
                .collect();
            SymplecticSpace::new(twisted)
        }
    }

    pub fn dim(&self) -> usize {
        self.omega.len()
    }

    pub fn omega(&self) -> &Mat<G> {
        &self.omega
    }

    pub fn pairing(&self, u: &[G], v: &[G]) -> G {
        sesquilinear(&self.omega, u, v, &G::zero())
    }

    fn check_vectors(&self, vectors: &[Vec<G>]) -> Result<()> {
        for v in vectors {
            if v.len() != self.dim() {
                return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
            }
        }
        Ok(())
    }
}

/// Whether `span(basis)` coincides with its ω-orthogonal complement.
pub fn is_lagrangian(space: &SymplecticSpace, basis: &[Vec<G>]) -> Result<bool> {
    space.check_vectors(basis)?;
    if rank(&basis.to_vec()) * 2 != space.dim() {
        return Ok(false);
    }
    Ok(basis
        .iter()
        .all(|u| basis.iter().all(|v| space.pairing(u, v).is_zero())))
}

/// A Lagrangian subspace given by a basis.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Lagrangian {
    basis: Mat<G>,
    /// The form this subspace was validated against.
    #[serde(skip)]
    form: Mat<G>,
}

impl Lagrangian {
    /// Validates that the vectors are independent and span a Lagrangian of `space`.
    pub fn new(space: &SymplecticSpace, basis: Mat<G>) -> Result<Self> {
        space.check_vectors(&basis)?;
        if basis.len() * 2 != space.dim() || rank(&basis) != basis.len() {
            return Err(Error::NotLagrangian(format!(
                "need {} independent vectors, got {} of rank {}",
                space.dim() / 2,
                basis.len(),
                rank(&basis)
            )));
        }
        if !is_lagrangian(space, &basis)? {
            return Err(Error::NotLagrangian("subspace is not isotropic".into()));
        }
        Ok(Lagrangian { basis, form: space.omega.clone() })
    }

    pub fn basis(&self) -> &Mat<G> {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn revalidate(&self, space: &SymplecticSpace) -> Result<()> {
        if self.form == space.omega {
            return Ok(());
        }
        Lagrangian::new(space, self.basis.clone()).map(|_| ())
    }
}

/// Basis of `span(a) ∩ span(b)`.
pub fn intersect(a: &[Vec<G>], b: &[Vec<G>], dim: usize) -> Mat<G> {
    // x·a − y·b = 0  ⇒  Σ y_j b_j lies in both spans
    let cols = a.len() + b.len();
    let rows: Mat<G> = (0..dim)
        .map(|r| {
            a.iter()
                .map(|v| v[r].clone())
                .chain(b.iter().map(|v| v[r].neg()))
                .collect()
        })
        .collect();
    let kern = kernel(&rows, cols, &G::zero());
    let vecs: Mat<G> = kern.iter().map(|k| combine(b, &k[a.len()..], dim)).collect();
    independent_subset(&vecs).into_iter().map(|i| vecs[i].clone()).collect()
}

fn combine(basis: &[Vec<G>], coeffs: &[G], dim: usize) -> Vec<G> {
    let mut out = vec![G::zero(); dim];
    for (v, c) in basis.iter().zip(coeffs).filter(|(_, c)| !c.is_zero()) {
        for (o, x) in out.iter_mut().zip(v).filter(|(_, x)| !x.is_zero()) {
            *o = o.add(&c.mul(x));
        }
    }
    out
}

/// A basis `v` of `(L1 + L2) ∩ L3` together with splittings `v = a1 + a2`,
/// `a1 ∈ L1`, `a2 ∈ L2`.
#[derive(Clone, Debug, PartialEq)]
pub struct TripleDecomposition {
    pub v: Mat<G>,
    pub a1: Mat<G>,
    pub a2: Mat<G>,
}

impl TripleDecomposition {
    /// Gram matrix `ψ(v_i, v_j) = ω(a1(v_i), a2(v_j))`.
    pub fn gram(&self, space: &SymplecticSpace) -> Mat<G> {
        self.a1
            .iter()
            .map(|x| self.a2.iter().map(|y| space.pairing(x, y)).collect())
            .collect()
    }
}

pub fn triple_decomposition(
    space: &SymplecticSpace,
    l1: &Lagrangian,
    l2: &Lagrangian,
    l3: &Lagrangian,
) -> Result<TripleDecomposition> {
    for l in [l1, l2, l3] {
        l.revalidate(space)?;
    }
    let dim = space.dim();
    let (b1, b2, b3) = (l1.basis(), l2.basis(), l3.basis());
    let n1 = b1.len();
    let n2 = b2.len();
    let cols = n1 + n2 + b3.len();
    // B1 x + B2 y − B3 z = 0
    let rows: Mat<G> = (0..dim)
        .map(|r| {
            b1.iter()
                .map(|v| v[r].clone())
                .chain(b2.iter().map(|v| v[r].clone()))
                .chain(b3.iter().map(|v| v[r].neg()))
                .collect()
        })
        .collect();
    let kern = kernel(&rows, cols, &G::zero());
    let vs: Mat<G> = kern.iter().map(|k| combine(b3, &k[n1 + n2..], dim)).collect();
    let keep = independent_subset(&vs);
    let mut out = TripleDecomposition { v: Vec::new(), a1: Vec::new(), a2: Vec::new() };
    for i in keep {
        out.v.push(vs[i].clone());
        out.a1.push(combine(b1, &kern[i][..n1], dim));
        out.a2.push(combine(b2, &kern[i][n1..n1 + n2], dim));
    }
    Ok(out)
}

/// The Hermitian form `ψ` on `(L1 + L2) ∩ L3` whose signature is the Maslov index.
pub fn triple_form(
    space: &SymplecticSpace,
    l1: &Lagrangian,
    l2: &Lagrangian,
    l3: &Lagrangian,
) -> Result<HermitianMatrix> {
    let dec = triple_decomposition(space, l1, l2, l3)?;
    HermitianMatrix::new(dec.gram(space))
}

/// Maslov triple index `τ(L1, L2, L3)`.
pub fn maslov_triple(
    space: &SymplecticSpace,
    l1: &Lagrangian,
    l2: &Lagrangian,
    l3: &Lagrangian,
) -> Result<i64> {
    Ok(triple_form(space, l1, l2, l3)?.signature())
}
