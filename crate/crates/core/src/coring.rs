//! Corings over a finite-dimensional algebra, their morphisms, the
//! comatrix, Sweedler and dual constructions, grouplikes and
//! convolution algebras.
//!
//! `Δ` is stored as ambient representatives in `C ⊗_k C`
//! (`dim C² x dim C`); identities are always compared in `C ⊗_A C`.

use crate::algebra::{Algebra, AlgebraHom, ENUMERATION_BOUND};
use crate::error::{Error, Result};
use crate::linalg::{all_vectors, kernel, rank, solve_vec, Subspace};
use crate::mat::{kron_vec, unit_vec, vec_add, vec_sub, Mat};
use crate::moduli::{dual_basis_with, dual_module, hom_left, hom_right, Bimodule, DualBasis, DualModule};
use crate::report::{Verdict, Witness};
use crate::scalar::Scalar;
use crate::tensor::{apply_first_cols, apply_second_cols, coassociativity_defect, tensor_over, twist_cols, TensorProduct, TensorTest};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coring<F> {
    pub bimodule: Bimodule<F>,
    /// `dim C² x dim C`.
    pub delta: Mat<F>,
    /// `dim A x dim C`.
    pub counit: Mat<F>,
}

impl<F: Scalar> Coring<F> {
    pub fn new(bimodule: Bimodule<F>, delta: Mat<F>, counit: Mat<F>) -> Result<Self> {
        let n = bimodule.dim();
        if delta.rows() != n * n || delta.cols() != n {
            return Err(Error::Shape(format!("comultiplication must be {}x{n}", n * n)));
        }
        if counit.rows() != bimodule.right.dim() || counit.cols() != n {
            return Err(Error::Shape(format!("counit must be {}x{n}", bimodule.right.dim())));
        }
        Ok(Coring { bimodule, delta, counit })
    }

    /// `A` with `Δ(a) = a ⊗ 1` and `ε = id`.
    pub fn trivial(alg: &Algebra<F>) -> Self {
        let n = alg.dim();
        let cols: Vec<Vec<F>> = (0..n).map(|i| kron_vec(&unit_vec(n, i), alg.unit())).collect();
        Coring { bimodule: Bimodule::regular(alg), delta: Mat::from_cols(n * n, &cols), counit: Mat::identity(n) }
    }

    pub fn base(&self) -> &Algebra<F> {
        &self.bimodule.right
    }

    pub fn dim(&self) -> usize {
        self.bimodule.dim()
    }

    /// `C` over `A^op` with `Δ` followed by the flip.
    pub fn co_opposite(&self) -> Self {
        let n = self.dim();
        Coring { bimodule: self.bimodule.swap_sides(), delta: twist_cols(&self.delta, n, n), counit: self.counit.clone() }
    }

    /// Zero test in `C ⊗_A C`.
    pub fn square_test(&self) -> Result<TensorTest<F>> {
        TensorTest::new(&self.bimodule, &self.bimodule)
    }

    /// `C ⊗_A C` as an explicit quotient.
    pub fn square(&self) -> Result<TensorProduct<F>> {
        tensor_over(&self.bimodule, &self.bimodule)
    }

    /// `(ε ⊗ C)Δ` as a `dim C x dim C` matrix.
    pub fn left_counit_composite(&self) -> Mat<F> {
        let n = self.dim();
        let cols: Vec<Vec<F>> = (0..n)
            .map(|c| {
                let v = Mat::unflatten(n, n, &self.delta.col(c));
                let mut out = vec![F::zero(); n];
                for x in 0..n {
                    let a = self.counit.col(x);
                    let row: Vec<F> = v.row(x).to_vec();
                    if row.iter().all(|e| e.is_zero()) {
                        continue;
                    }
                    out = vec_add(&out, &self.bimodule.act_left(&a, &row));
                }
                out
            })
            .collect();
        Mat::from_cols(n, &cols)
    }

    /// `(C ⊗ ε)Δ` as a `dim C x dim C` matrix.
    pub fn right_counit_composite(&self) -> Mat<F> {
        let n = self.dim();
        let cols: Vec<Vec<F>> = (0..n)
            .map(|c| {
                let v = Mat::unflatten(n, n, &self.delta.col(c));
                let mut out = vec![F::zero(); n];
                for y in 0..n {
                    let col = v.col(y);
                    if col.iter().all(|e| e.is_zero()) {
                        continue;
                    }
                    out = vec_add(&out, &self.bimodule.act_right(&col, &self.counit.col(y)));
                }
                out
            })
            .collect();
        Mat::from_cols(n, &cols)
    }

    /// The coring axioms; the witness names the first failing identity.
    pub fn check(&self) -> Verdict {
        let c = &self.bimodule;
        let a = self.base().clone();
        if !c.left.same_structure(&a) {
            return Err(Witness::new("bimodule", "left and right algebras differ".into()));
        }
        c.check()?;
        let n = self.dim();
        let gens = a.generators();
        for g in &gens {
            let lhs = self.counit.mul(&c.left_op(g));
            let rhs = a.left_mult(g).mul(&self.counit);
            if let Some(j) = first_diff_col(&lhs, &rhs) {
                return Err(Witness::new("counit left A-linear", format!("ε(a·c) != a·ε(c) at basis vector {j}")));
            }
            let lhs = self.counit.mul(&c.right_op(g));
            let rhs = a.right_mult(g).mul(&self.counit);
            if let Some(j) = first_diff_col(&lhs, &rhs) {
                return Err(Witness::new("counit right A-linear", format!("ε(c·a) != ε(c)·a at basis vector {j}")));
            }
        }
        let test = self.square_test().map_err(|e| Witness::new("tensor", e.to_string()))?;
        for g in &gens {
            let lhs = self.delta.mul(&c.left_op(g));
            let rhs = apply_first_cols(&c.left_op(g), &self.delta, n);
            if let Some(j) = test.first_nonzero_col(&lhs.sub(&rhs)) {
                return Err(Witness::new("comultiplication left A-linear", format!("Δ(a·c) != a·Δ(c) at basis vector {j}")));
            }
            let lhs = self.delta.mul(&c.right_op(g));
            let rhs = apply_second_cols(&c.right_op(g), &self.delta, n);
            if let Some(j) = test.first_nonzero_col(&lhs.sub(&rhs)) {
                return Err(Witness::new("comultiplication right A-linear", format!("Δ(c·a) != Δ(c)·a at basis vector {j}")));
            }
        }
        let id = Mat::identity(n);
        if let Some(j) = first_diff_col(&self.left_counit_composite(), &id) {
            return Err(Witness::new("left counit", format!("(ε⊗C)Δ(c) != c at basis vector {j}")));
        }
        if let Some(j) = first_diff_col(&self.right_counit_composite(), &id) {
            return Err(Witness::new("right counit", format!("(C⊗ε)Δ(c) != c at basis vector {j}")));
        }
        match coassociativity_defect(c, &self.delta, c, &self.delta) {
            Ok(None) => Ok(()),
            Ok(Some(j)) => Err(Witness::new("coassociativity", format!("(Δ⊗C)Δ(c) != (C⊗Δ)Δ(c) at basis vector {j}"))),
            Err(e) => Err(Witness::new("tensor", e.to_string())),
        }
    }

    /// Whether `Δ` and another representative matrix agree in `C ⊗_A C`.
    pub fn same_comultiplication(&self, other: &Mat<F>) -> Result<bool> {
        Ok(self.square_test()?.first_nonzero_col(&self.delta.sub(other)).is_none())
    }

    /// `Δ` with every column replaced by its canonical representative.
    pub fn normalized_delta(&self) -> Result<Mat<F>> {
        let sq = self.square()?;
        let cols: Vec<Vec<F>> = self.delta.col_vecs().iter().map(|v| sq.normalize(v)).collect();
        Ok(Mat::from_cols(self.dim() * self.dim(), &cols))
    }
}

pub(crate) fn first_diff_col<F: Scalar>(a: &Mat<F>, b: &Mat<F>) -> Option<usize> {
    (0..a.cols()).find(|&j| a.col(j) != b.col(j))
}

/// An `A`-bilinear map between corings, `matrix` is `dim D x dim C`.
#[derive(Clone, Debug)]
pub struct CoringHom<F> {
    pub source: Coring<F>,
    pub target: Coring<F>,
    pub matrix: Mat<F>,
}

impl<F: Scalar> CoringHom<F> {
    pub fn new(source: Coring<F>, target: Coring<F>, matrix: Mat<F>) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Shape(format!("coring map must be {}x{}", target.dim(), source.dim())));
        }
        Ok(CoringHom { source, target, matrix })
    }

    pub fn identity(c: &Coring<F>) -> Self {
        CoringHom { source: c.clone(), target: c.clone(), matrix: Mat::identity(c.dim()) }
    }

    /// `Δ'∘f = (f⊗f)∘Δ`, `ε'∘f = ε` and bilinearity.
    pub fn check(&self) -> Verdict {
        let (c, d) = (&self.source, &self.target);
        if !c.base().same_structure(d.base()) {
            return Err(Witness::new("base algebra", "corings over different algebras".into()));
        }
        let f = &self.matrix;
        for g in c.base().generators() {
            if let Some(j) = first_diff_col(&f.mul(&c.bimodule.left_op(&g)), &d.bimodule.left_op(&g).mul(f)) {
                return Err(Witness::new("left A-linear", format!("f(a·c) != a·f(c) at basis vector {j}")));
            }
            if let Some(j) = first_diff_col(&f.mul(&c.bimodule.right_op(&g)), &d.bimodule.right_op(&g).mul(f)) {
                return Err(Witness::new("right A-linear", format!("f(c·a) != f(c)·a at basis vector {j}")));
            }
        }
        if let Some(j) = first_diff_col(&d.counit.mul(f), &c.counit) {
            return Err(Witness::new("counit", format!("ε'(f(c)) != ε(c) at basis vector {j}")));
        }
        let lhs = d.delta.mul(f);
        let ff = kron_apply(f, f, &c.delta, c.dim());
        let test = d.square_test().map_err(|e| Witness::new("tensor", e.to_string()))?;
        if let Some(j) = test.first_nonzero_col(&lhs.sub(&ff)) {
            return Err(Witness::new("comultiplication", format!("Δ'(f(c)) != (f⊗f)Δ(c) at basis vector {j}")));
        }
        Ok(())
    }

    pub fn is_bijective(&self) -> bool {
        self.source.dim() == self.target.dim() && rank(&self.matrix) == self.source.dim()
    }

    /// `self ∘ first`.
    pub fn compose_after(&self, first: &CoringHom<F>) -> Self {
        CoringHom { source: first.source.clone(), target: self.target.clone(), matrix: self.matrix.mul(&first.matrix) }
    }
}

/// `(f ⊗ g) m` column by column on ambient vectors of `C ⊗_k C`.
pub fn kron_apply<F: Scalar>(f: &Mat<F>, g: &Mat<F>, m: &Mat<F>, n: usize) -> Mat<F> {
    let gt = g.transpose();
    let cols: Vec<Vec<F>> = m
        .col_vecs()
        .iter()
        .map(|v| {
            let v = Mat::unflatten(f.cols(), n, v);
            f.mul(&v).mul(&gt).flatten()
        })
        .collect();
    Mat::from_cols(f.rows() * g.rows(), &cols)
}

/// The comatrix coring `Σ* ⊗_B Σ` with the data it was built from.
#[derive(Clone, Debug)]
pub struct Comatrix<F> {
    pub sigma: Bimodule<F>,
    pub dual: DualModule<F>,
    pub dual_basis: DualBasis<F>,
    /// `Σ* ⊗_B Σ`.
    pub tensor: TensorProduct<F>,
    pub coring: Coring<F>,
}

/// Builds `Σ* ⊗_B Σ` with `Δ(φ⊗u) = Σ_i φ⊗e_i ⊗ e_i*⊗u` and `ε(φ⊗u) = φ(u)`,
/// verifying that both maps vanish on the balancing relations.
pub fn comatrix_coring<F: Scalar>(sigma: &Bimodule<F>, dual: &DualModule<F>, db: &DualBasis<F>) -> Result<Comatrix<F>> {
    db.check(sigma, dual).map_err(|w| Error::NotProjective(w.to_string()))?;
    let tensor = tensor_over(&dual.module, sigma)?;
    let (delta_amb, counit_amb) = comatrix_structure_ambient(sigma, dual, db, &tensor);
    let module = tensor.module.clone();
    // well-definedness over B
    let rel = tensor.quotient().relations().transpose();
    let test = TensorTest::new(&module, &module)?;
    if test.first_nonzero_col(&delta_amb.mul(&rel)).is_some() || !counit_amb.mul(&rel).is_zero() {
        return Err(Error::Invalid("comatrix structure does not vanish on the balancing relations".into()));
    }
    let free = tensor.quotient().free_coordinates();
    let coring = Coring { bimodule: module, delta: delta_amb.select_cols(free), counit: counit_amb.select_cols(free) };
    Ok(Comatrix { sigma: sigma.clone(), dual: dual.clone(), dual_basis: db.clone(), tensor, coring })
}

/// `Δ` and `ε` on every ambient pure tensor `φ_a ⊗ u_b`.
fn comatrix_structure_ambient<F: Scalar>(
    sigma: &Bimodule<F>,
    dual: &DualModule<F>,
    db: &DualBasis<F>,
    tensor: &TensorProduct<F>,
) -> (Mat<F>, Mat<F>) {
    let (ds, dd) = (sigma.dim(), dual.dim());
    let n = tensor.dim();
    let left: Vec<Vec<Vec<F>>> = (0..dd)
        .map(|a| db.elements.iter().map(|e| tensor.pure(&unit_vec(dd, a), e)).collect())
        .collect();
    let right: Vec<Vec<Vec<F>>> = (0..ds)
        .map(|b| db.functionals.iter().map(|f| tensor.pure(f, &unit_vec(ds, b))).collect())
        .collect();
    let mut delta_cols = Vec::with_capacity(dd * ds);
    let mut counit_cols = Vec::with_capacity(dd * ds);
    for (la, map) in left.iter().zip(&dual.maps) {
        for (b, rb) in right.iter().enumerate() {
            let mut v = vec![F::zero(); n * n];
            for (l, r) in la.iter().zip(rb) {
                v = vec_add(&v, &kron_vec(l, r));
            }
            delta_cols.push(v);
            counit_cols.push(map.col(b));
        }
    }
    (Mat::from_cols(n * n, &delta_cols), Mat::from_cols(sigma.right.dim(), &counit_cols))
}

/// A generating family different from the standard basis: the basis
/// followed by the sum of all basis vectors, with the first vector
/// replaced by the sum of the first two.
pub fn alternate_generators<F: Scalar>(dim: usize) -> Vec<Vec<F>> {
    let mut gens: Vec<Vec<F>> = (0..dim).map(|i| unit_vec(dim, i)).collect();
    if dim >= 2 {
        gens[0] = vec_add(&gens[0], &gens[1]);
    }
    gens.push(vec![F::one(); dim]);
    gens
}

/// Comultiplication of the comatrix coring computed from another dual basis.
pub fn comatrix_delta_with<F: Scalar>(cm: &Comatrix<F>, db: &DualBasis<F>) -> Mat<F> {
    let (d, _) = comatrix_structure_ambient(&cm.sigma, &cm.dual, db, &cm.tensor);
    d.select_cols(cm.tensor.quotient().free_coordinates())
}

/// `Σ_i e_i ⊗ e_i*` in `Σ ⊗_A Σ*`, as an ambient vector.
pub fn casimir<F: Scalar>(sigma: &Bimodule<F>, dual: &DualModule<F>, db: &DualBasis<F>) -> Vec<F> {
    let mut v = vec![F::zero(); sigma.dim() * dual.dim()];
    for (e, f) in db.elements.iter().zip(&db.functionals) {
        v = vec_add(&v, &kron_vec(e, f));
    }
    v
}

/// Comatrix coring over `Σ` with the standard-basis dual basis.
pub fn comatrix_from_module<F: Scalar>(sigma: &Bimodule<F>) -> Result<Comatrix<F>> {
    let dual = dual_module(sigma);
    let gens: Vec<Vec<F>> = (0..sigma.dim()).map(|i| unit_vec(sigma.dim(), i)).collect();
    let db = dual_basis_with(sigma, &dual, &gens)?;
    comatrix_coring(sigma, &dual, &db)
}

/// `_A A_B` and `_B A_A` for a ring map `h: B -> A`.
pub fn extension_bimodules<F: Scalar>(h: &AlgebraHom<F>) -> (Bimodule<F>, Bimodule<F>) {
    let reg = Bimodule::regular(&h.target);
    (reg.restrict_right(h), reg.restrict_left(h))
}

/// `A ⊗_B A` with `Δ(a⊗a') = a⊗1 ⊗ 1⊗a'` and `ε(a⊗a') = aa'`.
#[derive(Clone, Debug)]
pub struct Sweedler<F> {
    pub tensor: TensorProduct<F>,
    pub coring: Coring<F>,
}

pub fn sweedler_coring<F: Scalar>(h: &AlgebraHom<F>) -> Result<Sweedler<F>> {
    let a = &h.target;
    let (left, right) = extension_bimodules(h);
    let tensor = tensor_over(&left, &right)?;
    let n = tensor.dim();
    let one = a.unit().to_vec();
    let mut delta_cols = Vec::with_capacity(n);
    let mut counit_cols = Vec::with_capacity(n);
    for q in 0..n {
        let (i, j) = tensor.basis_pair(q);
        let (ai, aj) = (a.basis_element(i), a.basis_element(j));
        delta_cols.push(kron_vec(&tensor.pure(&ai, &one), &tensor.pure(&one, &aj)));
        counit_cols.push(a.mul(&ai, &aj));
    }
    let coring = Coring::new(tensor.module.clone(), Mat::from_cols(n * n, &delta_cols), Mat::from_cols(a.dim(), &counit_cols))?;
    Ok(Sweedler { tensor, coring })
}

/// `B*` over `A` for `h: A -> B` with `B_A` f.g. projective:
/// `Δ(φ) = Σ_i φ·e_i ⊗ e_i*`, `ε(φ) = φ(1)`.
#[derive(Clone, Debug)]
pub struct DualCoring<F> {
    /// `_B B_A`.
    pub sigma: Bimodule<F>,
    pub dual: DualModule<F>,
    pub dual_basis: DualBasis<F>,
    pub coring: Coring<F>,
}

pub fn dual_coring<F: Scalar>(h: &AlgebraHom<F>) -> Result<DualCoring<F>> {
    let b = &h.target;
    let sigma = Bimodule::regular(b).restrict_right(h);
    let dual = dual_module(&sigma);
    let gens: Vec<Vec<F>> = (0..sigma.dim()).map(|i| unit_vec(sigma.dim(), i)).collect();
    let db = dual_basis_with(&sigma, &dual, &gens)?;
    let module = dual.module.restrict_right(h);
    let n = dual.dim();
    let cols: Vec<Vec<F>> = (0..n)
        .map(|p| {
            let phi = unit_vec(n, p);
            let mut v = vec![F::zero(); n * n];
            for (e, f) in db.elements.iter().zip(&db.functionals) {
                let pe = dual.module.act_right(&phi, e);
                v = vec_add(&v, &kron_vec(&pe, f));
            }
            v
        })
        .collect();
    let counit_cols: Vec<Vec<F>> = (0..n).map(|p| dual.eval(&unit_vec(n, p), b.unit())).collect();
    let coring = Coring::new(module, Mat::from_cols(n * n, &cols), Mat::from_cols(h.source.dim(), &counit_cols))?;
    Ok(DualCoring { sigma, dual, dual_basis: db, coring })
}

/// `Δg = g ⊗ g` in `C ⊗_A C` and `εg = 1`.
pub fn verify_grouplike<F: Scalar>(c: &Coring<F>, g: &[F]) -> Result<bool> {
    if g.len() != c.dim() {
        return Err(Error::Shape(format!("grouplike candidate has {} coordinates, coring has dim {}", g.len(), c.dim())));
    }
    if c.counit.mul_vec(g) != c.base().unit() {
        return Ok(false);
    }
    let diff = vec_sub(&c.delta.mul_vec(g), &kron_vec(g, g));
    Ok(c.square_test()?.is_zero(&diff))
}

/// Every grouplike, by enumerating `{g : εg = 1}` over a finite field.
pub fn grouplike_search<F: Scalar>(c: &Coring<F>) -> Result<Vec<Vec<F>>> {
    let n = c.dim();
    let Some(particular) = solve_vec(&c.counit, c.base().unit()) else {
        return Ok(Vec::new());
    };
    let ker = kernel(&c.counit);
    let test = c.square_test()?;
    let mut found = Vec::new();
    for coeffs in all_vectors::<F>(ker.rows(), ENUMERATION_BOUND)? {
        let mut g = particular.clone();
        for (x, row) in coeffs.iter().zip(ker.row_vecs()) {
            if !x.is_zero() {
                g = vec_add(&g, &crate::mat::vec_scale(x, &row));
            }
        }
        let diff = vec_sub(&c.delta.mul_vec(&g), &kron_vec(&g, &g));
        if test.is_zero(&diff) {
            found.push(g);
        }
    }
    let _ = n;
    Ok(found)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `*C = Hom_A(_A C, _A A)`, `(f*g)(c) = f(c₁·g(c₂))`.
    Left,
    /// `C* = Hom_A(C_A, A_A)`, `(f*g)(c) = f(g(c₁)·c₂)`.
    Right,
}

#[derive(Clone, Debug)]
pub struct ConvolutionAlgebra<F> {
    pub side: Side,
    /// Basis maps, `dim A x dim C`.
    pub maps: Vec<Mat<F>>,
    pub algebra: Algebra<F>,
    space: Subspace<F>,
}

impl<F: Scalar> ConvolutionAlgebra<F> {
    pub fn as_map(&self, coords: &[F]) -> Mat<F> {
        let (r, c) = (self.maps[0].rows(), self.maps[0].cols());
        let mut out = Mat::zeros(r, c);
        for (x, m) in coords.iter().zip(&self.maps) {
            out.axpy(x, m);
        }
        out
    }

    pub fn coords_of(&self, map: &Mat<F>) -> Option<Vec<F>> {
        self.space.coords(&map.flatten())
    }
}

/// `c ↦ c₁·g(c₂)` for `g: C -> A`.
pub fn left_contraction<F: Scalar>(c: &Coring<F>, g: &Mat<F>) -> Mat<F> {
    let n = c.dim();
    let cols: Vec<Vec<F>> = (0..n)
        .map(|k| {
            let v = Mat::unflatten(n, n, &c.delta.col(k));
            let mut out = vec![F::zero(); n];
            for y in 0..n {
                let col = v.col(y);
                if col.iter().any(|e| !e.is_zero()) {
                    out = vec_add(&out, &c.bimodule.act_right(&col, &g.col(y)));
                }
            }
            out
        })
        .collect();
    Mat::from_cols(n, &cols)
}

/// `c ↦ g(c₁)·c₂` for `g: C -> A`.
pub fn right_contraction<F: Scalar>(c: &Coring<F>, g: &Mat<F>) -> Mat<F> {
    let n = c.dim();
    let cols: Vec<Vec<F>> = (0..n)
        .map(|k| {
            let v = Mat::unflatten(n, n, &c.delta.col(k));
            let mut out = vec![F::zero(); n];
            for x in 0..n {
                let row = v.row(x).to_vec();
                if row.iter().any(|e| !e.is_zero()) {
                    out = vec_add(&out, &c.bimodule.act_left(&g.col(x), &row));
                }
            }
            out
        })
        .collect();
    Mat::from_cols(n, &cols)
}

/// `f*g = f ∘ contraction(g)`.
pub fn contraction<F: Scalar>(c: &Coring<F>, side: Side, g: &Mat<F>) -> Mat<F> {
    match side {
        Side::Left => left_contraction(c, g),
        Side::Right => right_contraction(c, g),
    }
}

/// Convolution product of two maps `C -> A`.
pub fn convolve<F: Scalar>(c: &Coring<F>, side: Side, f: &Mat<F>, g: &Mat<F>) -> Mat<F> {
    f.mul(&contraction(c, side, g))
}

pub fn convolution_algebra<F: Scalar>(c: &Coring<F>, side: Side) -> Result<ConvolutionAlgebra<F>> {
    let reg = Bimodule::regular(c.base());
    let homs = match side {
        Side::Left => hom_left(&c.bimodule.as_left(), &reg.as_left())?,
        Side::Right => hom_right(&c.bimodule.as_right(), &reg.as_right())?,
    };
    let (ra, nc) = (c.base().dim(), c.dim());
    let space = Subspace::span(ra * nc, &homs.iter().map(|m| m.flatten()).collect::<Vec<_>>());
    let maps: Vec<Mat<F>> = space.basis_vecs().iter().map(|v| Mat::unflatten(ra, nc, v)).collect();
    let coords = |m: &Mat<F>| -> Result<Vec<F>> {
        space.coords(&m.flatten()).ok_or_else(|| Error::Invalid("convolution product left the dual".into()))
    };
    let unit = coords(&c.counit)?;
    let cons: Vec<Mat<F>> = maps.iter().map(|g| contraction(c, side, g)).collect();
    let mut table = Vec::with_capacity(maps.len());
    for f in &maps {
        let mut row = Vec::with_capacity(maps.len());
        for con in &cons {
            row.push(coords(&f.mul(con))?);
        }
        table.push(row);
    }
    let prefix = match side {
        Side::Left => "l",
        Side::Right => "r",
    };
    let labels = (0..maps.len()).map(|i| format!("{prefix}{i}")).collect();
    let algebra = Algebra::new(labels, table, unit)?;
    Ok(ConvolutionAlgebra { side, maps, algebra, space })
}

/// The map `f ↦ f̂`, `f̂(u) = Σ_i e_i·f(e_i* ⊗ u)`, from the left dual of a
/// comatrix coring to `End(_B Σ)`.
#[derive(Clone, Debug)]
pub struct HatMap<F> {
    pub convolution: ConvolutionAlgebra<F>,
    /// Basis of `End(_B Σ)` as `dim Σ x dim Σ` matrices.
    pub endomorphisms: Vec<Mat<F>>,
    /// Images of the convolution basis, as matrices.
    pub images: Vec<Mat<F>>,
}

impl<F: Scalar> HatMap<F> {
    /// Matrix of the map in the two bases.
    pub fn matrix(&self) -> Mat<F> {
        let n = self.endomorphisms.first().map_or(0, |m| m.rows());
        let space = Subspace::span(n * n, &self.endomorphisms.iter().map(|m| m.flatten()).collect::<Vec<_>>());
        let cols: Vec<Vec<F>> = self.images.iter().map(|m| space.coords(&m.flatten()).expect("lands in End")).collect();
        Mat::from_cols(self.endomorphisms.len(), &cols)
    }

    pub fn is_bijective(&self) -> bool {
        self.images.len() == self.endomorphisms.len() && rank(&self.matrix()) == self.images.len()
    }

    /// `(f*g)^ = f̂ ∘ ĝ` on every basis pair; first failing pair otherwise.
    pub fn anti_multiplicative(&self, cm: &Comatrix<F>) -> Option<(usize, usize)> {
        let conv = &self.convolution;
        let cons: Vec<Mat<F>> = conv.maps.iter().map(|g| left_contraction(&cm.coring, g)).collect();
        for (i, f) in conv.maps.iter().enumerate() {
            for (j, con) in cons.iter().enumerate() {
                let fg = f.mul(con);
                if hat(cm, &fg) != self.images[i].mul(&self.images[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn counit_to_identity(&self, cm: &Comatrix<F>) -> bool {
        hat(cm, &cm.coring.counit).is_identity()
    }
}

/// `f̂` for a single `f: Σ*⊗_BΣ -> A`.
pub fn hat<F: Scalar>(cm: &Comatrix<F>, f: &Mat<F>) -> Mat<F> {
    let ds = cm.sigma.dim();
    let cols: Vec<Vec<F>> = (0..ds)
        .map(|u| {
            let mut out = vec![F::zero(); ds];
            for (e, phi) in cm.dual_basis.elements.iter().zip(&cm.dual_basis.functionals) {
                let t = cm.tensor.pure(phi, &unit_vec(ds, u));
                out = vec_add(&out, &cm.sigma.act_right(e, &f.mul_vec(&t)));
            }
            out
        })
        .collect();
    Mat::from_cols(ds, &cols)
}

pub fn hat_anti_iso<F: Scalar>(cm: &Comatrix<F>) -> Result<HatMap<F>> {
    let convolution = convolution_algebra(&cm.coring, Side::Left)?;
    let endomorphisms = hom_left(&cm.sigma.as_left(), &cm.sigma.as_left())?;
    let images = convolution.maps.iter().map(|f| hat(cm, f)).collect();
    Ok(HatMap { convolution, endomorphisms, images })
}

/// Precomposition `*C' -> *C`, `g ↦ g∘f`, for a coring map `f: C -> C'`.
pub fn left_dual_hom<F: Scalar>(f: &CoringHom<F>) -> Result<AlgebraHom<F>> {
    let src = convolution_algebra(&f.target, Side::Left)?;
    let dst = convolution_algebra(&f.source, Side::Left)?;
    let cols: Vec<Vec<F>> = src
        .maps
        .iter()
        .map(|g| dst.coords_of(&g.mul(&f.matrix)).ok_or_else(|| Error::Invalid("precomposition is not left A-linear".into())))
        .collect::<Result<_>>()?;
    AlgebraHom::new(src.algebra, dst.algebra.clone(), Mat::from_cols(dst.maps.len(), &cols))
}
