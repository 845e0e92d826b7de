//! Finite-dimensional bimodules, hom-spaces, duals, dual bases and
//! projectivity tests.
//!
//! A one-sided module is a bimodule whose other side is the ground field.

use crate::algebra::{check_left_action, check_right_action, Algebra, AlgebraHom};
use crate::error::{Error, Result};
use crate::linalg::{kernel, solve, Subspace};
use crate::mat::{unit_vec, Mat};
use crate::report::{Verdict, Witness};
use crate::scalar::Scalar;

/// `_B M_A`: `left_action[i]` is `m ↦ b_i·m`, `right_action[i]` is `m ↦ m·a_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule<F> {
    pub left: Algebra<F>,
    pub right: Algebra<F>,
    dim: usize,
    pub left_action: Vec<Mat<F>>,
    pub right_action: Vec<Mat<F>>,
}

/// Apply `Σ x_i mats[i]`.
pub fn combine<F: Scalar>(size: usize, x: &[F], mats: &[Mat<F>]) -> Mat<F> {
    let mut out = Mat::zeros(size, size);
    for (c, m) in x.iter().zip(mats) {
        if !c.is_zero() {
            out.axpy(c, m);
        }
    }
    out
}

impl<F: Scalar> Bimodule<F> {
    pub fn new(
        left: Algebra<F>,
        right: Algebra<F>,
        dim: usize,
        left_action: Vec<Mat<F>>,
        right_action: Vec<Mat<F>>,
    ) -> Result<Self> {
        if left_action.len() != left.dim() || right_action.len() != right.dim() {
            return Err(Error::Shape("one action matrix per algebra basis element expected".into()));
        }
        if left_action.iter().chain(&right_action).any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::Shape(format!("action matrices must be {dim}x{dim}")));
        }
        Ok(Bimodule { left, right, dim, left_action, right_action })
    }

    /// Right `A`-module with the ground field acting on the left.
    pub fn right_module(alg: Algebra<F>, dim: usize, action: Vec<Mat<F>>) -> Result<Self> {
        Self::new(Algebra::ground(), alg, dim, vec![Mat::identity(dim)], action)
    }

    /// Left `A`-module with the ground field acting on the right.
    pub fn left_module(alg: Algebra<F>, dim: usize, action: Vec<Mat<F>>) -> Result<Self> {
        Self::new(alg, Algebra::ground(), dim, action, vec![Mat::identity(dim)])
    }

    /// `A` as an `A`-`A` bimodule.
    pub fn regular(alg: &Algebra<F>) -> Self {
        let n = alg.dim();
        let left = (0..n).map(|i| alg.left_mult(&alg.basis_element(i))).collect();
        let right = (0..n).map(|i| alg.right_mult(&alg.basis_element(i))).collect();
        Bimodule { left: alg.clone(), right: alg.clone(), dim: n, left_action: left, right_action: right }
    }

    /// The zero module.
    pub fn zero(left: Algebra<F>, right: Algebra<F>) -> Self {
        let (l, r) = (left.dim(), right.dim());
        Bimodule { left, right, dim: 0, left_action: vec![Mat::zeros(0, 0); l], right_action: vec![Mat::zeros(0, 0); r] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_op(&self, b: &[F]) -> Mat<F> {
        combine(self.dim, b, &self.left_action)
    }

    pub fn right_op(&self, a: &[F]) -> Mat<F> {
        combine(self.dim, a, &self.right_action)
    }

    pub fn act_left(&self, b: &[F], m: &[F]) -> Vec<F> {
        self.left_op(b).mul_vec(m)
    }

    pub fn act_right(&self, m: &[F], a: &[F]) -> Vec<F> {
        self.right_op(a).mul_vec(m)
    }

    /// Module axioms on both sides and commutation of the two actions.
    pub fn check(&self) -> Verdict {
        check_left_action(&self.left, &self.left_action).map_err(|w| Witness::new("left module", w.to_string()))?;
        check_right_action(&self.right, &self.right_action).map_err(|w| Witness::new("right module", w.to_string()))?;
        for (i, l) in self.left_action.iter().enumerate() {
            for (j, r) in self.right_action.iter().enumerate() {
                if l.mul(r) != r.mul(l) {
                    return Err(Witness::new(
                        "bimodule",
                        format!("({}·m)·{} != {}·(m·{})", self.left.labels()[i], self.right.labels()[j], self.left.labels()[i], self.right.labels()[j]),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Forget the left action.
    pub fn as_right(&self) -> Self {
        Bimodule {
            left: Algebra::ground(),
            right: self.right.clone(),
            dim: self.dim,
            left_action: vec![Mat::identity(self.dim)],
            right_action: self.right_action.clone(),
        }
    }

    /// Forget the right action.
    pub fn as_left(&self) -> Self {
        Bimodule {
            left: self.left.clone(),
            right: Algebra::ground(),
            dim: self.dim,
            left_action: self.left_action.clone(),
            right_action: vec![Mat::identity(self.dim)],
        }
    }

    /// `_B M_A` as an `A^op`-`B^op` bimodule.
    pub fn swap_sides(&self) -> Self {
        Bimodule {
            left: self.right.opposite(),
            right: self.left.opposite(),
            dim: self.dim,
            left_action: self.right_action.clone(),
            right_action: self.left_action.clone(),
        }
    }

    /// Replace the right algebra along `h: A' -> A`.
    pub fn restrict_right(&self, h: &AlgebraHom<F>) -> Self {
        let action = (0..h.source.dim()).map(|i| self.right_op(&h.apply(&h.source.basis_element(i)))).collect();
        Bimodule { right: h.source.clone(), right_action: action, ..self.clone() }
    }

    /// Replace the left algebra along `h: B' -> B`.
    pub fn restrict_left(&self, h: &AlgebraHom<F>) -> Self {
        let action = (0..h.source.dim()).map(|i| self.left_op(&h.apply(&h.source.basis_element(i)))).collect();
        Bimodule { left: h.source.clone(), left_action: action, ..self.clone() }
    }

    pub fn direct_sum(&self, other: &Bimodule<F>) -> Self {
        let n = self.dim + other.dim;
        let block = |a: &Mat<F>, b: &Mat<F>| {
            Mat::from_fn(n, n, |i, j| {
                if i < self.dim && j < self.dim {
                    a[(i, j)].clone()
                } else if i >= self.dim && j >= self.dim {
                    b[(i - self.dim, j - self.dim)].clone()
                } else {
                    F::zero()
                }
            })
        };
        Bimodule {
            left: self.left.clone(),
            right: self.right.clone(),
            dim: n,
            left_action: self.left_action.iter().zip(&other.left_action).map(|(a, b)| block(a, b)).collect(),
            right_action: self.right_action.iter().zip(&other.right_action).map(|(a, b)| block(a, b)).collect(),
        }
    }

    pub fn power(&self, n: usize) -> Self {
        let mut out = Bimodule::zero(self.left.clone(), self.right.clone());
        for _ in 0..n {
            out = out.direct_sum(self);
        }
        out
    }

    /// The sub-bimodule on an invariant subspace, in its canonical coordinates.
    pub fn restrict_to(&self, sub: &Subspace<F>) -> Result<Self> {
        let emb = sub.embedding();
        let coords = sub.coord_map();
        let restrict = |m: &Mat<F>| -> Result<Mat<F>> {
            let img = m.mul(&emb);
            for v in img.col_vecs() {
                if !sub.contains(&v) {
                    return Err(Error::Invalid("subspace is not invariant under the action".into()));
                }
            }
            Ok(coords.mul(&img))
        };
        Ok(Bimodule {
            left: self.left.clone(),
            right: self.right.clone(),
            dim: sub.dim(),
            left_action: self.left_action.iter().map(restrict).collect::<Result<_>>()?,
            right_action: self.right_action.iter().map(restrict).collect::<Result<_>>()?,
        })
    }

    /// Smallest sub-bimodule containing `vectors`.
    pub fn generated_submodule(&self, vectors: &[Vec<F>]) -> Subspace<F> {
        let mut span = Subspace::span(self.dim, vectors);
        let ops: Vec<Mat<F>> = self
            .left
            .generators()
            .iter()
            .map(|g| self.left_op(g))
            .chain(self.right.generators().iter().map(|g| self.right_op(g)))
            .collect();
        loop {
            let basis = span.basis_vecs();
            let images: Vec<Vec<F>> = ops.iter().flat_map(|m| basis.iter().map(move |v| m.mul_vec(v))).collect();
            let next = span.sum(&Subspace::span(self.dim, &images));
            if next.dim() == span.dim() {
                return span;
            }
            span = next;
        }
    }
}

/// Basis of `{X : Q_i X = X P_i for all i}`, `X` of shape `rows x cols`.
pub fn intertwiners<F: Scalar>(rows: usize, cols: usize, pairs: &[(Mat<F>, Mat<F>)]) -> Vec<Mat<F>> {
    let vars = rows * cols;
    let mut eqs: Vec<Vec<F>> = Vec::new();
    for (p, q) in pairs {
        for r in 0..rows {
            for c in 0..cols {
                let mut row = vec![F::zero(); vars];
                for k in 0..rows {
                    let v = &q[(r, k)];
                    if !v.is_zero() {
                        row[k * cols + c] += v.clone();
                    }
                }
                for k in 0..cols {
                    let v = &p[(k, c)];
                    if !v.is_zero() {
                        row[r * cols + k] -= v.clone();
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    eqs.push(row);
                }
            }
        }
    }
    let system = Mat::from_rows(vars, &eqs).expect("rows have the variable count");
    kernel(&system).row_vecs().iter().map(|v| Mat::unflatten(rows, cols, v)).collect()
}

/// Basis of `Hom_A(M, N)` for the right actions; each map is `dim N x dim M`.
pub fn hom_right<F: Scalar>(m: &Bimodule<F>, n: &Bimodule<F>) -> Result<Vec<Mat<F>>> {
    if !m.right.same_structure(&n.right) {
        return Err(Error::Invalid("hom between modules over different algebras".into()));
    }
    let pairs: Vec<_> = m.right.generators().iter().map(|g| (m.right_op(g), n.right_op(g))).collect();
    Ok(intertwiners(n.dim(), m.dim(), &pairs))
}

/// Basis of `Hom_B(M, N)` for the left actions.
pub fn hom_left<F: Scalar>(m: &Bimodule<F>, n: &Bimodule<F>) -> Result<Vec<Mat<F>>> {
    hom_right(&m.swap_sides(), &n.swap_sides())
}

/// Basis of bimodule maps `M -> N`.
pub fn hom_bimodule<F: Scalar>(m: &Bimodule<F>, n: &Bimodule<F>) -> Result<Vec<Mat<F>>> {
    if !m.right.same_structure(&n.right) || !m.left.same_structure(&n.left) {
        return Err(Error::Invalid("hom between bimodules over different algebras".into()));
    }
    let mut pairs: Vec<_> = m.right.generators().iter().map(|g| (m.right_op(g), n.right_op(g))).collect();
    pairs.extend(m.left.generators().iter().map(|g| (m.left_op(g), n.left_op(g))));
    Ok(intertwiners(n.dim(), m.dim(), &pairs))
}

/// `Σ* = Hom_A(Σ, A)` for `_B Σ_A`, an `A`-`B` bimodule via `(a·φ·b)(u) = a·φ(b·u)`.
#[derive(Clone, Debug)]
pub struct DualModule<F> {
    pub module: Bimodule<F>,
    /// Basis functionals as `dim A x dim Σ` matrices.
    pub maps: Vec<Mat<F>>,
    space: Subspace<F>,
    source_dim: usize,
}

impl<F: Scalar> DualModule<F> {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    /// Matrix of the functional with coordinates `phi`.
    pub fn as_map(&self, phi: &[F]) -> Mat<F> {
        let alg = self.module.left.dim();
        let mut out = Mat::zeros(alg, self.source_dim);
        for (c, m) in phi.iter().zip(&self.maps) {
            if !c.is_zero() {
                out.axpy(c, m);
            }
        }
        out
    }

    pub fn eval(&self, phi: &[F], u: &[F]) -> Vec<F> {
        self.as_map(phi).mul_vec(u)
    }

    /// Coordinates of a right-linear map, `None` if it is not in the dual.
    pub fn coords_of(&self, map: &Mat<F>) -> Option<Vec<F>> {
        let c = self.space.coords(&map.flatten())?;
        Some(c)
    }
}

pub fn dual_module<F: Scalar>(sigma: &Bimodule<F>) -> DualModule<F> {
    let a = sigma.right.clone();
    let reg = Bimodule::regular(&a);
    let maps = hom_right(sigma, &reg).expect("same right algebra");
    let flat: Vec<Vec<F>> = maps.iter().map(|m| m.flatten()).collect();
    let space = Subspace::span(a.dim() * sigma.dim(), &flat);
    // canonical basis of the span, so coordinates are pivot values
    let maps: Vec<Mat<F>> = space.basis_vecs().iter().map(|v| Mat::unflatten(a.dim(), sigma.dim(), v)).collect();
    let coord = |m: &Mat<F>| space.coords(&m.flatten()).expect("closed under the actions");
    let left_action: Vec<Mat<F>> = (0..a.dim())
        .map(|i| {
            let la = a.left_mult(&a.basis_element(i));
            Mat::from_cols(maps.len(), &maps.iter().map(|m| coord(&la.mul(m))).collect::<Vec<_>>())
        })
        .collect();
    let right_action: Vec<Mat<F>> = sigma
        .left_action
        .iter()
        .map(|lb| Mat::from_cols(maps.len(), &maps.iter().map(|m| coord(&m.mul(lb))).collect::<Vec<_>>()))
        .collect();
    let module = Bimodule { left: a, right: sigma.left.clone(), dim: maps.len(), left_action, right_action };
    DualModule { module, maps, space, source_dim: sigma.dim() }
}

/// Pairs `(e_i, e_i*)` with `u = Σ_i e_i·e_i*(u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasis<F> {
    /// Elements `e_i` of the module.
    pub elements: Vec<Vec<F>>,
    /// Coordinates of `e_i*` in the dual.
    pub functionals: Vec<Vec<F>>,
}

impl<F: Scalar> DualBasis<F> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Checks `u = Σ e_i·e_i*(u)` on every basis vector.
    pub fn check(&self, sigma: &Bimodule<F>, dual: &DualModule<F>) -> Verdict {
        let n = sigma.dim();
        for l in 0..n {
            let u = unit_vec(n, l);
            let mut sum = vec![F::zero(); n];
            for (e, f) in self.elements.iter().zip(&self.functionals) {
                let v = sigma.act_right(e, &dual.eval(f, &u));
                for (s, x) in sum.iter_mut().zip(v) {
                    *s += x;
                }
            }
            if sum != u {
                return Err(Witness::new("dual basis", format!("Σ e_i·e_i*(u) != u for basis vector {l}")));
            }
        }
        Ok(())
    }
}

/// Dual basis using the standard basis of `Σ` as generators.
pub fn dual_basis<F: Scalar>(sigma: &Bimodule<F>, dual: &DualModule<F>) -> Result<DualBasis<F>> {
    let gens: Vec<Vec<F>> = (0..sigma.dim()).map(|i| unit_vec(sigma.dim(), i)).collect();
    dual_basis_with(sigma, dual, &gens)
}

/// Dual basis over a prescribed generating family `e_j`, solving
/// `Σ_j e_j·φ_j(u) = u` for the functionals `φ_j`.
pub fn dual_basis_with<F: Scalar>(sigma: &Bimodule<F>, dual: &DualModule<F>, gens: &[Vec<F>]) -> Result<DualBasis<F>> {
    let n = sigma.dim();
    let r = dual.dim();
    let s = gens.len();
    // column (j, t): u_l ↦ e_j·φ_t(u_l), stacked over l
    let mut cols = Vec::with_capacity(s * r);
    for e in gens {
        for phi in &dual.maps {
            let mut col = Vec::with_capacity(n * n);
            for l in 0..n {
                let a = phi.col(l);
                col.extend(sigma.act_right(e, &a));
            }
            cols.push(col);
        }
    }
    let system = Mat::from_cols(n * n, &cols);
    let rhs: Vec<F> = Mat::<F>::identity(n).transpose().flatten();
    let rhs = Mat::from_cols(n * n, &[rhs]);
    let sol = solve(&system, &rhs)?
        .ok_or_else(|| Error::NotProjective("no finite dual basis exists for the given generators".into()))?;
    let x = sol.particular.col(0);
    let functionals = (0..s).map(|j| x[j * r..(j + 1) * r].to_vec()).collect();
    Ok(DualBasis { elements: gens.to_vec(), functionals })
}

/// A dual basis for `_A N` with left-linear functionals `δ_i: N -> A`:
/// `n = Σ_i δ_i(n)·d_i`. Generators are chosen greedily.
#[derive(Clone, Debug)]
pub struct LeftSplitting<F> {
    pub generators: Vec<Vec<F>>,
    /// `δ_i` as `dim A x dim N` matrices.
    pub functionals: Vec<Mat<F>>,
}

/// Computes a [`LeftSplitting`] of the left action of `n`, or `NotProjective`.
pub fn left_splitting<F: Scalar>(n: &Bimodule<F>) -> Result<LeftSplitting<F>> {
    let left = n.as_left();
    let a = &left.left;
    let dim = left.dim();
    let ops: Vec<Mat<F>> = (0..a.dim()).map(|t| left.left_op(&a.basis_element(t))).collect();
    // greedy generators
    let mut gens: Vec<Vec<F>> = Vec::new();
    let mut span = Subspace::zero(dim);
    for k in 0..dim {
        let v = unit_vec(dim, k);
        if span.contains(&v) {
            continue;
        }
        let images: Vec<Vec<F>> = ops.iter().map(|m| m.mul_vec(&v)).collect();
        span = span.sum(&Subspace::span(dim, &images));
        gens.push(v);
    }
    // Hom_A(_A N, _A A)
    let reg = Bimodule::regular(a).as_left();
    let homs = hom_left(&left, &reg)?;
    let s = gens.len();
    let r = homs.len();
    // Σ_i Σ_t x_it ψ_t(g_l)·g_i = g_l for each generator g_l
    let mut cols = Vec::with_capacity(s * r);
    for gi in &gens {
        for psi in &homs {
            let mut col = Vec::with_capacity(s * dim);
            for gl in &gens {
                let coeff = psi.mul_vec(gl);
                col.extend(left.act_left(&coeff, gi));
            }
            cols.push(col);
        }
    }
    let rhs: Vec<F> = gens.iter().flatten().cloned().collect();
    let system = Mat::from_cols(s * dim, &cols);
    let sol = solve(&system, &Mat::from_cols(s * dim, &[rhs]))?
        .ok_or_else(|| Error::NotProjective("left module admits no finite dual basis".into()))?;
    let x = sol.particular.col(0);
    let functionals = (0..s)
        .map(|i| {
            let mut m = Mat::zeros(a.dim(), dim);
            for (t, psi) in homs.iter().enumerate() {
                m.axpy(&x[i * r + t], psi);
            }
            m
        })
        .collect();
    Ok(LeftSplitting { generators: gens, functionals })
}

/// Flat = projective for finite-dimensional modules; decided by the
/// solvability of the left dual-basis system.
pub fn is_flat_fd<F: Scalar>(m: &Bimodule<F>) -> bool {
    left_splitting(m).is_ok()
}

/// `Σ_φ φ(M) ⊆ T` over `φ ∈ Hom_T(M, T)` for a left module `M`.
pub fn trace_ideal<F: Scalar>(m: &Bimodule<F>) -> Result<Subspace<F>> {
    let left = m.as_left();
    left_splitting(&left)?;
    let reg = Bimodule::regular(&left.left).as_left();
    let homs = hom_left(&left, &reg)?;
    let images: Vec<Vec<F>> = homs.iter().flat_map(|h| h.col_vecs()).collect();
    Ok(Subspace::span(left.left.dim(), &images))
}

/// Faithfully flat for f.g. projectives: projective with full trace ideal.
pub fn is_faithfully_flat_fgp<F: Scalar>(m: &Bimodule<F>) -> bool {
    match trace_ideal(m) {
        Ok(ideal) => ideal.dim() == m.left.dim(),
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Fp;

    type F2 = Fp<2>;
    type F3 = Fp<3>;

    fn gf4() -> Algebra<F2> {
        Algebra::truncated_polynomial(&[F2::new(1), F2::new(1)])
    }

    /// `E11 M2(k)`: span of E11, E12, a right ideal.
    fn row_module() -> Bimodule<F3> {
        let m2 = Algebra::<F3>::matrix_algebra(2);
        let reg = Bimodule::regular(&m2).as_right();
        let sub = reg.generated_submodule(&[m2.basis_element(0)]);
        reg.restrict_to(&sub).unwrap()
    }

    fn column_right_module() -> Bimodule<F3> {
        // E22 M2(k), also simple and isomorphic to the row module
        let m2 = Algebra::<F3>::matrix_algebra(2);
        let reg = Bimodule::regular(&m2).as_right();
        let sub = reg.generated_submodule(&[m2.basis_element(3)]);
        reg.restrict_to(&sub).unwrap()
    }

    fn first_factor() -> Bimodule<F3> {
        // k over k x k via the first projection, as a left module
        let k = Algebra::<F3>::ground();
        let kk = Algebra::product(&k, &k);
        let action = vec![Mat::identity(1), Mat::zeros(1, 1)];
        Bimodule::left_module(kk, 1, action).unwrap()
    }

    #[test]
    fn hom_examples() {
        let k = Algebra::<F2>::ground();
        let m = Bimodule::regular(&k);
        assert_eq!(hom_right(&m, &m).unwrap().len(), 1);
        let s = row_module();
        assert_eq!(s.dim(), 2);
        assert!(s.check().is_ok());
        assert_eq!(hom_right(&s, &s).unwrap().len(), 1);
        assert_eq!(hom_right(&s, &column_right_module()).unwrap().len(), 1);
        // nonisomorphic simples over k x k
        let kk = Algebra::product(&Algebra::<F3>::ground(), &Algebra::ground());
        let s1 = Bimodule::right_module(kk.clone(), 1, vec![Mat::identity(1), Mat::zeros(1, 1)]).unwrap();
        let s2 = Bimodule::right_module(kk, 1, vec![Mat::zeros(1, 1), Mat::identity(1)]).unwrap();
        assert_eq!(hom_right(&s1, &s2).unwrap().len(), 0);
    }

    #[test]
    fn dual_examples() {
        let a = gf4();
        let d = dual_module(&Bimodule::regular(&a));
        assert_eq!(d.dim(), 2);
        assert!(d.module.check().is_ok());
        let d = dual_module(&row_module());
        assert_eq!(d.dim(), 2);
        assert!(d.module.check().is_ok());
    }

    #[test]
    fn dual_basis_examples() {
        let a = gf4();
        let sigma = Bimodule::regular(&a);
        let d = dual_module(&sigma);
        let db = dual_basis(&sigma, &d).unwrap();
        assert!(db.check(&sigma, &d).is_ok());
        let s = row_module();
        let d = dual_module(&s);
        let db = dual_basis(&s, &d).unwrap();
        assert!(db.check(&s, &d).is_ok());
        // k over k x k via the first projection, on the right
        let ff = first_factor().swap_sides();
        let d = dual_module(&ff);
        assert!(dual_basis(&ff, &d).unwrap().check(&ff, &d).is_ok());
        // k over k[ε]/ε² is not projective
        let dn = Algebra::<F2>::truncated_polynomial(&[F2::new(0), F2::new(0)]);
        let simple = Bimodule::right_module(dn, 1, vec![Mat::identity(1), Mat::zeros(1, 1)]).unwrap();
        let d = dual_module(&simple);
        assert!(matches!(dual_basis(&simple, &d), Err(Error::NotProjective(_))));
    }

    #[test]
    fn flatness_and_trace_ideal() {
        let kk = first_factor().left;
        let free = Bimodule::regular(&kk).as_left();
        assert!(is_flat_fd(&free));
        assert_eq!(trace_ideal(&free).unwrap().dim(), 2);
        assert_eq!(trace_ideal(&free.power(2)).unwrap().dim(), 2);
        assert!(is_faithfully_flat_fgp(&free));
        let ff = first_factor();
        assert!(is_flat_fd(&ff));
        assert_eq!(trace_ideal(&ff).unwrap(), Subspace::span(2, &[vec![F3::new(1), F3::new(0)]]));
        assert!(!is_faithfully_flat_fgp(&ff));
        // simple left module over M2(GF(3)) is projective
        let s = row_module().swap_sides();
        assert!(is_flat_fd(&s));
    }

    #[test]
    fn left_splitting_reconstructs() {
        let a = Algebra::<F3>::matrix_algebra(2);
        let m = Bimodule::regular(&a).power(2);
        let sp = left_splitting(&m).unwrap();
        assert_eq!(sp.generators.len(), 4);
        for k in 0..m.dim() {
            let n = unit_vec(m.dim(), k);
            let mut sum = vec![F3::new(0); m.dim()];
            for (g, d) in sp.generators.iter().zip(&sp.functionals) {
                let v = m.act_left(&d.mul_vec(&n), g);
                sum = crate::mat::vec_add(&sum, &v);
            }
            assert_eq!(sum, n);
        }
    }
}
