//! Tensor products over an algebra and equality tests inside them.
//!
//! Ambient index of `x ⊗ y` in `M ⊗_k N` is `x·dim N + y`; iterated tensors
//! nest the same way. Quotient basis vectors sit on non-pivot ambient
//! coordinates, so each one is a pure tensor of basis vectors.

use std::borrow::Cow;

use crate::error::{Error, Result};
use crate::linalg::{quotient_by, Quotient};
use crate::mat::{is_zero_vec, kron_vec, unit_vec, Mat};
use crate::moduli::{left_splitting, Bimodule, LeftSplitting};
use crate::scalar::Scalar;

/// `_X M_A ⊗_A _A N_Y` as an `X`-`Y` bimodule.
#[derive(Clone, Debug)]
pub struct TensorProduct<F> {
    pub left: Bimodule<F>,
    pub right: Bimodule<F>,
    quotient: Quotient<F>,
    pub module: Bimodule<F>,
}

/// Rows `(x·a)⊗y − x⊗(a·y)` for algebra generators `a`.
fn balancing_relations<F: Scalar>(m: &Bimodule<F>, n: &Bimodule<F>) -> Vec<Vec<F>> {
    let (dm, dn) = (m.dim(), n.dim());
    let mut rows = Vec::new();
    for g in m.right.generators() {
        let rg = m.right_op(&g);
        let lg = n.left_op(&g);
        for i in 0..dm {
            let xa = rg.col(i);
            for j in 0..dn {
                let ay = lg.col(j);
                let mut row = kron_vec(&xa, &unit_vec(dn, j));
                for (k, v) in ay.iter().enumerate() {
                    if !v.is_zero() {
                        row[i * dn + k] -= v.clone();
                    }
                }
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

pub fn tensor_over<F: Scalar>(m: &Bimodule<F>, n: &Bimodule<F>) -> Result<TensorProduct<F>> {
    if !m.right.same_structure(&n.left) {
        return Err(Error::Invalid("tensor factors are over different algebras".into()));
    }
    let (dm, dn) = (m.dim(), n.dim());
    let rel = Mat::from_rows(dm * dn, &balancing_relations(m, n))?;
    let quotient = quotient_by(dm * dn, &rel)?;
    let free = quotient.free_coordinates().to_vec();
    let induced = |op: &dyn Fn(usize, usize) -> Vec<F>| -> Mat<F> {
        let cols: Vec<Vec<F>> = free.iter().map(|&f| quotient.project(&op(f / dn, f % dn))).collect();
        Mat::from_cols(free.len(), &cols)
    };
    let left_action = m
        .left_action
        .iter()
        .map(|l| induced(&|i, j| kron_vec(&l.col(i), &unit_vec(dn, j))))
        .collect();
    let right_action = n
        .right_action
        .iter()
        .map(|r| induced(&|i, j| kron_vec(&unit_vec(dm, i), &r.col(j))))
        .collect();
    let module = Bimodule::new(m.left.clone(), n.right.clone(), free.len(), left_action, right_action)?;
    Ok(TensorProduct { left: m.clone(), right: n.clone(), quotient, module })
}

impl<F: Scalar> TensorProduct<F> {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.quotient.ambient_dim()
    }

    pub fn quotient(&self) -> &Quotient<F> {
        &self.quotient
    }

    /// Basis vector `q` is the pure tensor `e_i ⊗ e_j`.
    pub fn basis_pair(&self, q: usize) -> (usize, usize) {
        let f = self.quotient.free_coordinates()[q];
        (f / self.right.dim(), f % self.right.dim())
    }

    pub fn pure(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.quotient.project(&kron_vec(x, y))
    }

    pub fn project(&self, v: &[F]) -> Vec<F> {
        self.quotient.project(v)
    }

    pub fn lift(&self, q: &[F]) -> Vec<F> {
        self.quotient.lift(q)
    }

    /// Canonical ambient representative.
    pub fn normalize(&self, v: &[F]) -> Vec<F> {
        self.lift(&self.project(v))
    }

    pub fn is_zero(&self, v: &[F]) -> bool {
        is_zero_vec(&self.project(v))
    }

    /// Matrix of `f ⊗ g` from `self` to `target`.
    pub fn map_tensor(&self, f: &Mat<F>, g: &Mat<F>, target: &TensorProduct<F>) -> Mat<F> {
        let cols: Vec<Vec<F>> = (0..self.dim())
            .map(|q| {
                let (i, j) = self.basis_pair(q);
                target.pure(&f.col(i), &g.col(j))
            })
            .collect();
        Mat::from_cols(target.dim(), &cols)
    }

    /// Projection of every column of an ambient matrix.
    pub fn project_cols(&self, m: &Mat<F>) -> Mat<F> {
        Mat::from_cols(self.dim(), &m.col_vecs().iter().map(|v| self.project(v)).collect::<Vec<_>>())
    }

    /// Section as a matrix, `ambient x dim`.
    pub fn section(&self) -> &Mat<F> {
        self.quotient.section()
    }
}

/// `A ⊗_A N -> N`, `a ⊗ y ↦ a·y`.
pub fn left_unit_iso<F: Scalar>(t: &TensorProduct<F>) -> Mat<F> {
    let n = &t.right;
    let a = &t.left.left;
    let cols: Vec<Vec<F>> = (0..t.dim())
        .map(|q| {
            let (i, j) = t.basis_pair(q);
            n.act_left(&a.basis_element(i), &unit_vec(n.dim(), j))
        })
        .collect();
    Mat::from_cols(n.dim(), &cols)
}

/// `M ⊗_A A -> M`, `x ⊗ a ↦ x·a`.
pub fn right_unit_iso<F: Scalar>(t: &TensorProduct<F>) -> Mat<F> {
    let m = &t.left;
    let a = &t.right.right;
    let cols: Vec<Vec<F>> = (0..t.dim())
        .map(|q| {
            let (i, j) = t.basis_pair(q);
            m.act_right(&unit_vec(m.dim(), i), &a.basis_element(j))
        })
        .collect();
    Mat::from_cols(m.dim(), &cols)
}

/// `(f ⊗ id) v` on an ambient vector of `M ⊗_k N`, `f: M -> M'`.
pub fn apply_first<F: Scalar>(f: &Mat<F>, v: &[F], dn: usize) -> Vec<F> {
    f.mul(&Mat::unflatten(f.cols(), dn, v)).flatten()
}

/// `(id ⊗ g) v` on an ambient vector of `M ⊗_k N`, `g: N -> N'`.
pub fn apply_second<F: Scalar>(g: &Mat<F>, v: &[F], dm: usize) -> Vec<F> {
    Mat::unflatten(dm, g.cols(), v).mul(&g.transpose()).flatten()
}

/// `(f ⊗ id) ∘ m` column by column.
pub fn apply_first_cols<F: Scalar>(f: &Mat<F>, m: &Mat<F>, dn: usize) -> Mat<F> {
    let cols: Vec<Vec<F>> = m.col_vecs().iter().map(|v| apply_first(f, v, dn)).collect();
    Mat::from_cols(f.rows() * dn, &cols)
}

/// `(id ⊗ g) ∘ m` column by column.
pub fn apply_second_cols<F: Scalar>(g: &Mat<F>, m: &Mat<F>, dm: usize) -> Mat<F> {
    let cols: Vec<Vec<F>> = m.col_vecs().iter().map(|v| apply_second(g, v, dm)).collect();
    Mat::from_cols(dm * g.rows(), &cols)
}

/// `x ⊗ y ↦ y ⊗ x` on every column, `M ⊗_k N -> N ⊗_k M`.
pub fn twist_cols<F: Scalar>(m: &Mat<F>, dm: usize, dn: usize) -> Mat<F> {
    let cols: Vec<Vec<F>> = m.col_vecs().iter().map(|v| Mat::unflatten(dm, dn, v).transpose().flatten()).collect();
    Mat::from_cols(dm * dn, &cols)
}

/// Below this ambient size equality is decided in the explicit quotient.
const DENSE_LIMIT: usize = 256;

/// Zero test for ambient vectors of `X ⊗_A C`.
///
/// Either the explicit quotient, or the injective map
/// `x ⊗ c ↦ (x·δ_i(c))_i` given by a left dual basis of `C`.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum TensorTest<F> {
    Quotient(TensorProduct<F>),
    Embedding(Mat<F>),
    /// Over a one-dimensional base: no relations, ambient size given.
    Ground(usize),
}

impl<F: Scalar> TensorTest<F> {
    pub fn new(x: &Bimodule<F>, c: &Bimodule<F>) -> Result<Self> {
        if c.left.dim() == 1 && x.right.dim() == 1 {
            return Ok(TensorTest::Ground(x.dim() * c.dim()));
        }
        if x.dim() * c.dim() > DENSE_LIMIT {
            if let Ok(split) = left_splitting(c) {
                return Ok(Self::embedded(x, c, &split));
            }
        }
        Ok(TensorTest::Quotient(tensor_over(x, c)?))
    }

    pub fn embedded(x: &Bimodule<F>, c: &Bimodule<F>, split: &LeftSplitting<F>) -> Self {
        let (dx, dc) = (x.dim(), c.dim());
        let s = split.functionals.len();
        let mut emb = Mat::zeros(s * dx, dx * dc);
        for cc in 0..dc {
            for (i, delta) in split.functionals.iter().enumerate() {
                let op = x.right_op(&delta.col(cc));
                for xx in 0..dx {
                    for r in 0..dx {
                        emb[(i * dx + r, xx * dc + cc)] = op[(r, xx)].clone();
                    }
                }
            }
        }
        TensorTest::Embedding(emb)
    }

    pub fn is_zero(&self, v: &[F]) -> bool {
        match self {
            TensorTest::Quotient(t) => t.is_zero(v),
            TensorTest::Embedding(e) => is_zero_vec(&e.mul_vec(v)),
            TensorTest::Ground(_) => is_zero_vec(v),
        }
    }

    /// A linear map whose kernel is exactly the zero set.
    pub fn matrix(&self) -> Cow<'_, Mat<F>> {
        match self {
            TensorTest::Quotient(t) => Cow::Borrowed(t.quotient.projection()),
            TensorTest::Embedding(e) => Cow::Borrowed(e),
            TensorTest::Ground(n) => Cow::Owned(Mat::identity(*n)),
        }
    }

    /// Index of the first column that is nonzero in the tensor product.
    pub fn first_nonzero_col(&self, m: &Mat<F>) -> Option<usize> {
        match self {
            TensorTest::Quotient(t) => (0..m.cols()).find(|&j| !t.is_zero(&m.col(j))),
            TensorTest::Embedding(e) => {
                let img = e.mul(m);
                (0..m.cols()).find(|&j| !is_zero_vec(&img.col(j)))
            }
            TensorTest::Ground(_) => (0..m.cols()).find(|&j| !is_zero_vec(&m.col(j))),
        }
    }
}

/// First basis index `m` with `(ρ⊗C)ρ(m) != (X⊗Δ)ρ(m)` in `X ⊗_A C ⊗_A C`.
///
/// `rho` is `dim X·dim C x dim X`, `delta` is `dim C² x dim C`, both ambient
/// representatives; `ρ` must be right and `Δ` left `A`-linear for the
/// composites to be well defined.
pub fn coassociativity_defect<F: Scalar>(
    x: &Bimodule<F>,
    rho: &Mat<F>,
    c: &Bimodule<F>,
    delta: &Mat<F>,
) -> Result<Option<usize>> {
    let (dx, dc) = (x.dim(), c.dim());
    if c.left.dim() == 1 {
        let dt = delta.transpose();
        return Ok((0..dx).find(|&m| {
            let v = Mat::unflatten(dx, dc, &rho.col(m));
            rho.mul(&v).flatten() != v.mul(&dt).flatten()
        }));
    }
    if dx * dc * dc > 2 * DENSE_LIMIT {
        if let Ok(split) = left_splitting(c) {
            return Ok(coassociativity_by_splitting(x, rho, c, delta, &split));
        }
    }
    coassociativity_dense(x, rho, c, delta)
}

pub(crate) fn coassociativity_dense<F: Scalar>(
    x: &Bimodule<F>,
    rho: &Mat<F>,
    c: &Bimodule<F>,
    delta: &Mat<F>,
) -> Result<Option<usize>> {
    let (dx, dc) = (x.dim(), c.dim());
    let xc = tensor_over(x, c)?;
    let xcc = tensor_over(&xc.module, c)?;
    // X⊗_k C⊗_k C -> (X⊗_A C)⊗_A C
    let to_quotient = |v: &[F]| -> Vec<F> {
        let p1 = xc.quotient().projection();
        xcc.project(&apply_first(p1, v, dc))
    };
    let dt = delta.transpose();
    for m in 0..dx {
        let v = Mat::unflatten(dx, dc, &rho.col(m));
        let lhs = rho.mul(&v).flatten();
        let rhs = v.mul(&dt).flatten();
        if to_quotient(&crate::mat::vec_sub(&lhs, &rhs)).iter().any(|e| !e.is_zero()) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

pub(crate) fn coassociativity_by_splitting<F: Scalar>(
    x: &Bimodule<F>,
    rho: &Mat<F>,
    c: &Bimodule<F>,
    delta: &Mat<F>,
    split: &LeftSplitting<F>,
) -> Option<usize> {
    let (dx, dc) = (x.dim(), c.dim());
    let alg = &c.right;
    let da = alg.dim();
    let deltas = &split.functionals;
    // slices R_c[x', m] = R[(x', c), m]
    let slice = |r: &Mat<F>, d: usize, cc: usize| Mat::from_fn(d, r.cols(), |i, j| r[(i * dc + cc, j)].clone());
    let qx: Vec<Vec<Mat<F>>> = (0..da)
        .map(|t| (0..dc).map(|cc| x.right_action[t].mul(&slice(rho, dx, cc))).collect())
        .collect();
    let qc: Vec<Vec<Mat<F>>> = (0..da)
        .map(|t| (0..dc).map(|cc| c.right_action[t].mul(&slice(delta, dc, cc))).collect())
        .collect();
    // Σ_{t,c} f[t,c] Q_{t,c}
    let contract = |q: &Vec<Vec<Mat<F>>>, f: &Mat<F>, size: usize, cols: usize| {
        let mut out = Mat::zeros(size, cols);
        for t in 0..da {
            for cc in 0..dc {
                let w = &f[(t, cc)];
                if !w.is_zero() {
                    out.axpy(w, &q[t][cc]);
                }
            }
        }
        out
    };
    let k: Vec<Vec<Mat<F>>> = deltas
        .iter()
        .map(|dj| (0..da).map(|t| contract(&qx, &dj.mul(&c.right_action[t]), dx, dx)).collect())
        .collect();
    let g: Vec<Vec<Mat<F>>> = deltas
        .iter()
        .map(|di| {
            (0..da)
                .map(|t| {
                    Mat::from_fn(dx, dx, |xx, m| {
                        let mut acc = F::zero();
                        for y in 0..dc {
                            let a = &di[(t, y)];
                            let r = &rho[(xx * dc + y, m)];
                            if !a.is_zero() && !r.is_zero() {
                                acc += a.clone() * r.clone();
                            }
                        }
                        acc
                    })
                })
                .collect()
        })
        .collect();
    let con_c: Vec<Mat<F>> = deltas.iter().map(|di| contract(&qc, di, dc, dc)).collect();
    let mut first: Option<usize> = None;
    for (i, cci) in con_c.iter().enumerate() {
        for (j, dj) in deltas.iter().enumerate() {
            let mut lhs = Mat::zeros(dx, dx);
            for t in 0..da {
                lhs = lhs.add(&k[j][t].mul(&g[i][t]));
            }
            let h = dj.mul(cci);
            let rhs = contract(&qx, &h, dx, dx);
            let diff = lhs.sub(&rhs);
            if let Some(m) = (0..dx).find(|&m| diff.col(m).iter().any(|e| !e.is_zero())) {
                first = Some(first.map_or(m, |f| f.min(m)));
            }
        }
    }
    first
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::linalg::rank;
    use crate::scalar::Fp;

    type F2 = Fp<2>;
    type F3 = Fp<3>;

    fn gf4() -> Algebra<F2> {
        Algebra::truncated_polynomial(&[F2::new(1), F2::new(1)])
    }

    /// GF(4) as a GF(2)-GF(4) or GF(4)-GF(2) bimodule.
    fn gf4_over_gf2() -> (Bimodule<F2>, Bimodule<F2>) {
        let a = gf4();
        let reg = Bimodule::regular(&a);
        let k = Algebra::<F2>::ground();
        let left = Bimodule::new(a.clone(), k.clone(), 2, reg.left_action.clone(), vec![Mat::identity(2)]).unwrap();
        let right = Bimodule::new(k, a, 2, vec![Mat::identity(2)], reg.right_action.clone()).unwrap();
        (left, right)
    }

    #[test]
    fn tensor_dimensions() {
        let a = gf4();
        let reg = Bimodule::regular(&a);
        let t = tensor_over(&reg, &reg).unwrap();
        assert_eq!(t.dim(), 2);
        assert!(t.module.check().is_ok());
        let (l, r) = gf4_over_gf2();
        let t = tensor_over(&l, &r).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(t.module.check().is_ok());
    }

    #[test]
    fn tensor_matches_bilinear_rank() {
        // dimension of M⊗_A N = dim M·dim N − rank of all relation vectors over a full basis
        let a = Algebra::<F3>::matrix_algebra(2);
        let reg = Bimodule::regular(&a);
        let t = tensor_over(&reg, &reg).unwrap();
        let mut rows = Vec::new();
        for g in 0..4 {
            for i in 0..4 {
                for j in 0..4 {
                    let lhs = kron_vec(&reg.right_action[g].col(i), &unit_vec(4, j));
                    let rhs = kron_vec(&unit_vec(4, i), &reg.left_action[g].col(j));
                    rows.push(crate::mat::vec_sub(&lhs, &rhs));
                }
            }
        }
        let full = rank(&Mat::from_rows(16, &rows).unwrap());
        assert_eq!(t.dim(), 16 - full);
        assert_eq!(t.dim(), 4);
    }

    #[test]
    fn unit_isos_are_bijective() {
        let a = Algebra::<F3>::matrix_algebra(2);
        let reg = Bimodule::regular(&a);
        let m = reg.power(2);
        let t = tensor_over(&reg, &m).unwrap();
        assert_eq!(t.dim(), m.dim());
        assert_eq!(rank(&left_unit_iso(&t)), m.dim());
        let t = tensor_over(&m, &reg).unwrap();
        assert_eq!(rank(&right_unit_iso(&t)), m.dim());
    }

    #[test]
    fn embedding_agrees_with_quotient() {
        let a = Algebra::<F3>::matrix_algebra(2);
        let reg = Bimodule::regular(&a);
        let x = reg.power(2);
        let t = tensor_over(&x, &reg).unwrap();
        let dense = TensorTest::Quotient(t.clone());
        let emb = TensorTest::embedded(&x, &reg, &left_splitting(&reg).unwrap());
        let mut rng_state = 7u64;
        for _ in 0..40 {
            let v: Vec<F3> = (0..x.dim() * reg.dim())
                .map(|_| {
                    rng_state = rng_state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    F3::from_i64((rng_state >> 33) as i64 % 3)
                })
                .collect();
            assert_eq!(dense.is_zero(&v), emb.is_zero(&v));
            let w = crate::mat::vec_sub(&v, &t.normalize(&v));
            assert!(emb.is_zero(&w));
        }
        for row in balancing_relations(&x, &reg) {
            assert!(dense.is_zero(&row));
            assert!(emb.is_zero(&row));
        }
    }
}
