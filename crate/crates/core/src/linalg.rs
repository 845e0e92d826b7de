//! Exact Gaussian elimination: rank, kernels, linear solves, subspaces
//! and quotient spaces with a fixed complement.
//!
//! Elimination always takes the leftmost available pivot, so every output
//! is a deterministic function of the input matrix.

use crate::error::{Error, Result};
use crate::mat::{is_zero_vec, lin_comb, unit_vec, Mat};
use crate::scalar::Scalar;

/// Reduced row echelon form of a matrix, zero rows dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<F> {
    pub rows: Mat<F>,
    pub pivots: Vec<usize>,
}

impl<F: Scalar> Rref<F> {
    pub fn new(m: &Mat<F>) -> Self {
        let cols = m.cols();
        let mut rows = m.row_vecs();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].inv().expect("nonzero pivot");
            for x in rows[r].iter_mut() {
                *x = x.clone() * inv.clone();
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    if !y.is_zero() {
                        *x -= f.clone() * y.clone();
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        Rref { rows: Mat::from_rows(cols, &rows).expect("rows keep their width"), pivots }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.rows.cols()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.rows.cols()).filter(|&c| !is_pivot[c]).collect()
    }

    /// Reduces `v` modulo the row space; the result vanishes on pivot columns.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, y) in out.iter_mut().zip(self.rows.row(r)) {
                if !y.is_zero() {
                    *x -= f.clone() * y.clone();
                }
            }
        }
        out
    }
}

pub fn rank<F: Scalar>(m: &Mat<F>) -> usize {
    Rref::new(m).rank()
}

/// Basis (as rows) of the right null space `{x : m x = 0}`.
///
/// One basis vector per free column `f`: `x_f = 1`, zero on the other free
/// columns.
pub fn kernel<F: Scalar>(m: &Mat<F>) -> Mat<F> {
    let rref = Rref::new(m);
    let n = m.cols();
    let free = rref.free_columns();
    let basis: Vec<Vec<F>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![F::zero(); n];
            v[f] = F::one();
            for (r, &p) in rref.pivots.iter().enumerate() {
                v[p] = -rref.rows[(r, f)].clone();
            }
            v
        })
        .collect();
    Mat::from_rows(n, &basis).expect("kernel rows have width n")
}

/// Solution set of `a x = b` for a matrix right-hand side.
#[derive(Clone, Debug)]
pub struct Solution<F> {
    /// One particular solution, `a.cols() x b.cols()`.
    pub particular: Mat<F>,
    /// Basis rows of `ker a`; every solution is `particular` plus kernel combinations per column.
    pub kernel: Mat<F>,
}

/// Solves `a x = b`. `Ok(None)` when some column of `b` is outside the column space.
pub fn solve<F: Scalar>(a: &Mat<F>, b: &Mat<F>) -> Result<Option<Solution<F>>> {
    if a.rows() != b.rows() {
        return Err(Error::Shape(format!(
            "solve: a is {}x{}, b is {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    let n = a.cols();
    let aug = a.hstack(b);
    let rref = Rref::new(&aug);
    if rref.pivots.iter().any(|&p| p >= n) {
        return Ok(None);
    }
    let mut x = Mat::zeros(n, b.cols());
    for (r, &p) in rref.pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x[(p, j)] = rref.rows[(r, n + j)].clone();
        }
    }
    Ok(Some(Solution { particular: x, kernel: kernel(a) }))
}

/// Solves `a x = b` for a single vector.
pub fn solve_vec<F: Scalar>(a: &Mat<F>, b: &[F]) -> Option<Vec<F>> {
    let bm = Mat::from_cols(b.len(), &[b.to_vec()]);
    solve(a, &bm).ok().flatten().map(|s| s.particular.col(0))
}

pub fn inverse<F: Scalar>(m: &Mat<F>) -> Option<Mat<F>> {
    if !m.is_square() {
        return None;
    }
    let n = m.rows();
    let sol = solve(m, &Mat::identity(n)).ok()??;
    if sol.kernel.rows() > 0 {
        return None;
    }
    Some(sol.particular)
}

/// A subspace of `F^n` held by its reduced echelon basis.
///
/// Two subspaces are equal iff their `Subspace` values are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient: usize,
    rref: Rref<F>,
}

impl<F: Scalar> Subspace<F> {
    /// Span of the rows of `m`.
    pub fn row_span(m: &Mat<F>) -> Self {
        Subspace { ambient: m.cols(), rref: Rref::new(m) }
    }

    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        Self::row_span(&Mat::from_rows(ambient, vectors).expect("vectors of ambient length"))
    }

    /// Column space of `m`.
    pub fn col_span(m: &Mat<F>) -> Self {
        Self::row_span(&m.transpose())
    }

    pub fn zero(ambient: usize) -> Self {
        Self::row_span(&Mat::zeros(0, ambient))
    }

    pub fn full(ambient: usize) -> Self {
        Self::row_span(&Mat::identity(ambient))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rref.rank()
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &Mat<F> {
        &self.rref.rows
    }

    pub fn basis_vecs(&self) -> Vec<Vec<F>> {
        self.rref.rows.row_vecs()
    }

    /// Basis as the columns of an `ambient x dim` embedding matrix.
    pub fn embedding(&self) -> Mat<F> {
        self.rref.rows.transpose()
    }

    pub fn contains(&self, v: &[F]) -> bool {
        is_zero_vec(&self.rref.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.basis_vecs().iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the canonical basis, `None` if `v` is outside.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.rref.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Matrix (`dim x ambient`) reading canonical coordinates of vectors in the subspace.
    pub fn coord_map(&self) -> Mat<F> {
        Mat::from_fn(self.dim(), self.ambient, |i, j| {
            if self.rref.pivots[i] == j {
                F::one()
            } else {
                F::zero()
            }
        })
    }

    pub fn vector(&self, coords: &[F]) -> Vec<F> {
        lin_comb(self.ambient, coords.iter().cloned().zip(self.basis_vecs()))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        Self::row_span(&self.rref.rows.vstack(&other.rref.rows))
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Subspace<F> {
        // x = Σ a_i u_i = Σ b_j w_j  <=>  (a, -b) in ker [U^T | W^T]
        let u = self.embedding();
        let w = other.embedding();
        let k = kernel(&u.hstack(&w));
        let vecs: Vec<Vec<F>> =
            k.row_vecs().iter().map(|c| u.mul_vec(&c[..self.dim()])).collect();
        Self::span(self.ambient, &vecs)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.rref.pivots
    }
}

/// `F^n / R` with the complement spanned by the non-pivot coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient<F> {
    ambient: usize,
    relations: Rref<F>,
    free: Vec<usize>,
    projection: Mat<F>,
    section: Mat<F>,
}

impl<F: Scalar> Quotient<F> {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Reduced relation rows.
    pub fn relations(&self) -> &Mat<F> {
        &self.relations.rows
    }

    /// `dim x ambient`.
    pub fn projection(&self) -> &Mat<F> {
        &self.projection
    }

    /// `ambient x dim`, image = the non-pivot coordinate complement.
    pub fn section(&self) -> &Mat<F> {
        &self.section
    }

    pub fn project(&self, v: &[F]) -> Vec<F> {
        let r = self.relations.reduce(v);
        self.free.iter().map(|&f| r[f].clone()).collect()
    }

    pub fn lift(&self, q: &[F]) -> Vec<F> {
        let mut v = vec![F::zero(); self.ambient];
        for (x, &f) in q.iter().zip(&self.free) {
            v[f] = x.clone();
        }
        v
    }

    /// Ambient coordinates indexing the quotient basis.
    pub fn free_coordinates(&self) -> &[usize] {
        &self.free
    }
}

/// Quotient of `F^ambient` by the row span of `relations`.
pub fn quotient_by<F: Scalar>(ambient: usize, relations: &Mat<F>) -> Result<Quotient<F>> {
    if relations.cols() != ambient {
        return Err(Error::Shape(format!(
            "relations have {} columns, ambient dimension is {ambient}",
            relations.cols()
        )));
    }
    let rref = Rref::new(relations);
    let free = rref.free_columns();
    let mut pivot_row = vec![None; ambient];
    for (r, &p) in rref.pivots.iter().enumerate() {
        pivot_row[p] = Some(r);
    }
    let projection = Mat::from_fn(free.len(), ambient, |t, j| match pivot_row[j] {
        None => {
            if free[t] == j {
                F::one()
            } else {
                F::zero()
            }
        }
        Some(r) => -rref.rows[(r, free[t])].clone(),
    });
    let section = Mat::from_cols(ambient, &free.iter().map(|&f| unit_vec(ambient, f)).collect::<Vec<_>>());
    Ok(Quotient { ambient, relations: rref, free, projection, section })
}

/// Every vector of `F^dim` for a finite field, in lexicographic residue order.
///
/// Fails when `|F|^dim` exceeds `bound`.
pub fn all_vectors<F: Scalar>(dim: usize, bound: u128) -> Result<Vec<Vec<F>>> {
    let elems = F::elements().ok_or_else(|| Error::Undecided("enumeration over an infinite field".into()))?;
    let q = elems.len() as u128;
    let size = q.checked_pow(dim as u32).unwrap_or(u128::MAX);
    if size > bound {
        return Err(Error::TooLargeToEnumerate { size, bound });
    }
    let mut out = Vec::with_capacity(size as usize);
    let mut idx = vec![0usize; dim];
    loop {
        out.push(idx.iter().map(|&i| elems[i].clone()).collect());
        let mut k = dim;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < elems.len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Fp, Rational};

    fn mat<F: Scalar>(rows: &[&[i64]]) -> Mat<F> {
        let cols = rows.first().map_or(0, |r| r.len());
        let v: Vec<Vec<F>> = rows.iter().map(|r| r.iter().map(|&x| F::from_i64(x)).collect()).collect();
        Mat::from_rows(cols, &v).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&Mat::<Rational>::zeros(0, 0)), 0);
        assert_eq!(rank(&Mat::<Fp<2>>::identity(3)), 3);
        assert_eq!(rank(&mat::<Rational>(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Mat::<Fp<3>>::identity(3)).rows(), 0);
        assert_eq!(kernel(&Mat::<Fp<3>>::zeros(2, 3)).rows(), 3);
        // enumerate GF(2)^2: only (0,0) and (1,1) satisfy x + y = 0
        let k = kernel(&mat::<Fp<2>>(&[&[1, 1]]));
        assert_eq!(k.row_vecs(), vec![vec![Fp::new(1), Fp::new(1)]]);
    }

    #[test]
    fn solve_examples() {
        let b = mat::<Fp<7>>(&[&[1, 2], &[3, 4], &[5, 6]]);
        let s = solve(&Mat::identity(3), &b).unwrap().unwrap();
        assert_eq!(s.particular, b);
        assert!(solve(&Mat::<Fp<7>>::zeros(2, 2), &mat(&[&[1], &[0]])).unwrap().is_none());
        // back-substitution over GF(3): y = 1, x + 2y = 0 -> x = 1
        let s = solve(&mat::<Fp<3>>(&[&[1, 2], &[0, 1]]), &mat(&[&[0], &[1]])).unwrap().unwrap();
        assert_eq!(s.particular, mat(&[&[1], &[1]]));
        assert!(solve(&Mat::<Fp<3>>::identity(2), &Mat::zeros(3, 1)).is_err());
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_by::<Fp<2>>(3, &Mat::zeros(0, 3)).unwrap();
        assert!(q.projection().is_identity() && q.section().is_identity());
        let q = quotient_by::<Fp<2>>(2, &mat(&[&[1, 1]])).unwrap();
        assert_eq!(q.dim(), 1);
        let q = quotient_by::<Fp<5>>(3, &Mat::identity(3)).unwrap();
        assert_eq!(q.dim(), 0);
        assert!(quotient_by::<Fp<5>>(2, &Mat::identity(3)).is_err());
    }

    #[test]
    fn subspace_ops() {
        let a = Subspace::span(3, &[vec![Fp::<3>::new(1), Fp::new(1), Fp::new(0)]]);
        let b = Subspace::span(3, &[vec![Fp::<3>::new(0), Fp::new(1), Fp::new(1)]]);
        assert_eq!(a.sum(&b).dim(), 2);
        assert_eq!(a.intersect(&b).dim(), 0);
        assert_eq!(a.sum(&b).intersect(&a), a);
        let v = a.vector(&[Fp::new(2)]);
        assert_eq!(a.coords(&v).unwrap(), vec![Fp::new(2)]);
    }

    #[test]
    fn enumerates_small_spaces() {
        assert_eq!(all_vectors::<Fp<3>>(2, 100).unwrap().len(), 9);
        assert_eq!(all_vectors::<Fp<3>>(0, 100).unwrap().len(), 1);
        assert!(matches!(
            all_vectors::<Fp<3>>(5, 100),
            Err(Error::TooLargeToEnumerate { size: 243, .. })
        ));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = mat::<Rational>(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&m).unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inverse(&mat::<Rational>(&[&[1, 2], &[2, 4]])).is_none());
    }
}
