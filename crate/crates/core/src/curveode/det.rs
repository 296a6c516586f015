use std::collections::{BTreeMap, HashMap};

use crate::curveode::matrix::LambdaMatrix;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Variable};
use crate::scalar::Scalar;
use crate::symfunc::VarId;

/// Largest matrix side expanded symbolically unless overridden (`n = 3`).
pub const DEFAULT_SYMBOLIC_CAP: usize = 6;

/// Determinant of a square polynomial matrix (row-major) by cofactor
/// expansion with every minor cached by its row set: `2^side` minors, each
/// built from the previous column's.
pub fn laplace_determinant<V: Variable, C: Scalar>(entries: &[Polynomial<V, C>], side: usize) -> Polynomial<V, C> {
    assert_eq!(entries.len(), side * side);
    assert!(side < 64, "row sets are u64 bitmasks");
    if side == 0 {
        return Polynomial::one();
    }
    // minors[rows] = det of rows `rows` against the first k columns.
    let mut minors: HashMap<u64, Polynomial<V, C>> = HashMap::from([(0, Polynomial::one())]);
    for col in 0..side {
        let mut next: HashMap<u64, Polynomial<V, C>> = HashMap::new();
        let mut keys: Vec<u64> = minors.keys().copied().collect();
        keys.sort_unstable();
        for rows in keys {
            let minor = &minors[&rows];
            for r in 0..side {
                if rows & (1 << r) != 0 {
                    continue;
                }
                let entry = &entries[r * side + col];
                if entry.is_zero() {
                    continue;
                }
                let above = (rows >> (r + 1)).count_ones();
                let term = minor * entry;
                let term = if above % 2 == 1 { -term } else { term };
                let slot = next.entry(rows | (1 << r)).or_insert_with(Polynomial::zero);
                *slot = std::mem::take(slot) + term;
            }
        }
        next.retain(|_, p| !p.is_zero());
        minors = next;
    }
    minors.remove(&((1u64 << side) - 1)).unwrap_or_else(Polynomial::zero)
}

/// Fraction-free (Bareiss) elimination; every division is exact.
pub fn bareiss_determinant<C: Scalar>(mut rows: Vec<Vec<C>>) -> C {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return C::one();
    }
    let mut negate = false;
    let mut prev = C::one();
    for k in 0..n - 1 {
        if rows[k][k].is_zero() {
            match (k + 1..n).find(|&i| !rows[i][k].is_zero()) {
                Some(p) => {
                    rows.swap(k, p);
                    negate = !negate;
                }
                None => return C::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = rows[i][j].clone() * rows[k][k].clone() - rows[i][k].clone() * rows[k][j].clone();
                rows[i][j] = v / prev.clone();
            }
            rows[i][k] = C::zero();
        }
        prev = rows[k][k].clone();
    }
    let det = rows[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Exact symbolic determinant. Refuses matrices wider than `cap`.
pub fn expand_determinant<C: Scalar>(m: &LambdaMatrix<C>, cap: usize) -> Result<Polynomial<VarId, C>> {
    if m.side() > cap {
        return Err(Error::SymbolicCap { side: m.side(), cap });
    }
    Ok(laplace_determinant(m.entries(), m.side()))
}

/// Evaluates the entries under `assignment`, then eliminates.
pub fn evaluate_determinant<C: Scalar>(m: &LambdaMatrix<C>, assignment: &BTreeMap<VarId, C>) -> Result<C> {
    Ok(bareiss_determinant(m.evaluate(assignment)?))
}
