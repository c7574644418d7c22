//! Exact linear algebra over a [`Field`]: row reduction, kernels and
//! subspaces of `F^n` kept in reduced row echelon form.

use crate::scalar::Field;

/// Reduces `rows` in place to reduced row echelon form; returns pivot columns.
/// Zero rows are dropped.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().unwrap();
        for x in rows[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for k in 0..ncols {
                    let d = factor.clone() * rows[r][k].clone();
                    rows[i][k] = rows[i][k].clone() - d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : M·x = 0}` for `M` given by rows with `ncols` columns.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![F::zero(); ncols];
            v[fc] = F::one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = -row[fc].clone();
            }
            v
        })
        .collect()
}

/// Solves `M·x = b`, returning one solution if any.
pub fn solve<F: Field>(rows: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<F>> = rows
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![F::zero(); ncols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

/// A subspace of `F^n`, stored as an RREF basis so equality is structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<F: Field> {
    dim_ambient: usize,
    basis: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(n: usize) -> Self {
        Subspace { dim_ambient: n, basis: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Self::span(n, (0..n).map(|i| unit(n, i)))
    }

    pub fn span<I: IntoIterator<Item = Vec<F>>>(n: usize, vectors: I) -> Self {
        let mut rows: Vec<Vec<F>> = vectors.into_iter().collect();
        assert!(rows.iter().all(|r| r.len() == n), "vector length mismatch");
        rref(&mut rows);
        Subspace { dim_ambient: n, basis: rows }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim_ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.basis
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        rank(&rows) == self.basis.len()
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self::span(self.dim_ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn intersect(&self, other: &Self) -> Self {
        // x = Σ aᵢ sᵢ = Σ bⱼ oⱼ; solve for (a, b) and map back
        let n = self.dim_ambient;
        let (ds, dother) = (self.dim(), other.dim());
        let rows: Vec<Vec<F>> = (0..n)
            .map(|k| {
                self.basis
                    .iter()
                    .map(|s| s[k].clone())
                    .chain(other.basis.iter().map(|o| -o[k].clone()))
                    .collect()
            })
            .collect();
        let kernel = nullspace(&rows, ds + dother);
        Self::span(
            n,
            kernel.into_iter().map(|coeffs| {
                let mut v = vec![F::zero(); n];
                for (a, s) in coeffs.iter().zip(&self.basis) {
                    for k in 0..n {
                        v[k] = v[k].clone() + a.clone() * s[k].clone();
                    }
                }
                v
            }),
        )
    }
}

pub fn unit<F: Field>(n: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    v[i] = F::one();
    v
}
