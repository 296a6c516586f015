use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::symfunc::{Alphabet, MultiplePowers, VarId};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum MatrixBasis {
    /// Entries `Λ^p(m𝔸)` including `Λ^0 𝔸 = y` and `Λ^1 𝔸 = y'`.
    FullA,
    /// Entries `Λ^p(m𝒟)` with `Λ^i 𝒟 = Λ^{i+2} 𝔸`.
    SylvesterD,
}

/// Side of the elimination matrix for degree `n`: `n(n+1)/2`.
pub fn side(n: u32) -> usize {
    (n * (n + 1) / 2) as usize
}

/// Highest derivative order used for degree `n`: `n(n+3)/2`.
pub fn top_order(n: u32) -> usize {
    (n * (n + 3) / 2) as usize
}

/// Highest `𝒟` superscript of the Sylvester matrix: `(n-1)(n+4)/2`.
pub fn sylvester_top(n: u32) -> usize {
    ((n - 1) * (n + 4) / 2) as usize
}

/// Column labels `(m, s)`: block `m = 1..n` ascending, shift `s` from
/// `n - m` down to `0` inside each block.
pub fn columns(n: u32) -> Vec<(u32, u32)> {
    (1..=n).flat_map(|m| (0..=n - m).rev().map(move |s| (m, s))).collect()
}

/// Square matrix of polynomial entries, stored row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct LambdaMatrix<C> {
    n: u32,
    basis: MatrixBasis,
    side: usize,
    entries: Vec<Polynomial<VarId, C>>,
}

impl<C: Scalar> LambdaMatrix<C> {
    pub fn from_entries(n: u32, basis: MatrixBasis, side: usize, entries: Vec<Polynomial<VarId, C>>) -> Self {
        assert_eq!(entries.len(), side * side, "matrix must be square");
        LambdaMatrix { n, basis, side, entries }
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn basis(&self) -> MatrixBasis {
        self.basis
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn entries(&self) -> &[Polynomial<VarId, C>] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> &Polynomial<VarId, C> {
        &self.entries[row * self.side + col]
    }

    pub fn row(&self, row: usize) -> &[Polynomial<VarId, C>] {
        &self.entries[row * self.side..(row + 1) * self.side]
    }

    /// Evaluates every entry; all variables must be assigned.
    pub fn evaluate(&self, assignment: &BTreeMap<VarId, C>) -> Result<Vec<Vec<C>>> {
        (0..self.side)
            .map(|r| self.row(r).iter().map(|p| p.evaluate(|v| assignment.get(v).cloned())).collect())
            .collect()
    }

    /// The polynomial matrix obtained by substituting `f` into every entry.
    pub fn map_entries(&self, f: impl Fn(&Polynomial<VarId, C>) -> Polynomial<VarId, C>) -> Self {
        LambdaMatrix { entries: self.entries.iter().map(f).collect(), ..self.clone() }
    }
}

fn check_degree(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: n });
    }
    Ok(())
}

fn build<C: Scalar>(n: u32, basis: MatrixBasis) -> Result<LambdaMatrix<C>> {
    check_degree(n)?;
    let (alphabet, truncation) = match basis {
        MatrixBasis::FullA => (Alphabet::A, top_order(n)),
        MatrixBasis::SylvesterD => (Alphabet::D, sylvester_top(n)),
    };
    let mut powers = MultiplePowers::new(alphabet, truncation);
    let q = side(n);
    let cols = columns(n);
    let mut entries = Vec::with_capacity(q * q);
    for j in 0..q as i64 {
        for &(m, s) in &cols {
            let order = n as i64 + 1 + j - s as i64;
            let index = match basis {
                MatrixBasis::FullA => order,
                MatrixBasis::SylvesterD => order - 2 * m as i64,
            };
            entries.push(powers.lambda(m, index));
        }
    }
    Ok(LambdaMatrix { n, basis, side: q, entries })
}

/// Elimination matrix in 𝔸: row `j` is derivative order `n + 1 + j`,
/// column `(m, s)` holds `Λ^{n+1+j-s}(m𝔸)`.
pub fn build_full_matrix<C: Scalar>(n: u32) -> Result<LambdaMatrix<C>> {
    build(n, MatrixBasis::FullA)
}

/// Sylvester's form: column `(m, s)` of row `j` holds
/// `Λ^{n+1+j-s-2m}(m𝒟)`, zero for a negative superscript.
pub fn build_sylvester_matrix<C: Scalar>(n: u32) -> Result<LambdaMatrix<C>> {
    build(n, MatrixBasis::SylvesterD)
}
