//! Exact Hermitian forms over Gaussian rationals (and other conjugation
//! fields), complex symplectic spaces, Lagrangians and the Maslov triple index.

mod gaussian;
mod symplectic;

pub use gaussian::GaussianRational;
pub use symplectic::{
    intersect, is_lagrangian, maslov_triple, triple_decomposition, triple_form, Lagrangian,
    SymplecticSpace, TripleDecomposition,
};

use serde::{Deserialize, Serialize};

use crate::field::{hermitian_signature, ConjField, Mat};
use crate::{Error, Result};

/// A square matrix equal to its conjugate transpose.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "F: Serialize", deserialize = "F: Deserialize<'de> + ConjField"))]
#[serde(try_from = "Vec<Vec<F>>", into = "Vec<Vec<F>>")]
pub struct HermitianMatrix<F: ConjField = GaussianRational> {
    entries: Mat<F>,
}

impl<F: ConjField> HermitianMatrix<F> {
    pub fn new(entries: Mat<F>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::NotSquare);
        }
        for i in 0..n {
            for j in i..n {
                if entries[i][j] != entries[j][i].conj() {
                    return Err(Error::NotHermitian { i, j });
                }
            }
        }
        Ok(HermitianMatrix { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &Mat<F> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i][j]
    }

    /// `#positive − #negative` eigenvalues, by exact congruence diagonalization.
    pub fn signature(&self) -> i64 {
        hermitian_signature(&self.entries)
    }
}

impl<F: ConjField> TryFrom<Vec<Vec<F>>> for HermitianMatrix<F> {
    type Error = Error;

    fn try_from(entries: Vec<Vec<F>>) -> Result<Self> {
        HermitianMatrix::new(entries)
    }
}

impl<F: ConjField> From<HermitianMatrix<F>> for Vec<Vec<F>> {
    fn from(m: HermitianMatrix<F>) -> Self {
        m.entries
    }
}

/// Signature of a Hermitian matrix; rejects non-Hermitian input.
pub fn signature(entries: &Mat<GaussianRational>) -> Result<i64> {
    Ok(HermitianMatrix::new(entries.clone())?.signature())
}

/// Signature of a real symmetric rational matrix.
pub fn rational_signature(entries: &[Vec<crate::Rational>]) -> Result<i64> {
    let lifted: Mat<GaussianRational> = entries
        .iter()
        .map(|row| row.iter().cloned().map(GaussianRational::real).collect())
        .collect();
    signature(&lifted)
}
