//! The comatrix coring rebuilt from the adjunction `- ⊗_T Σ ⊣ - ⊗_A Σ*`.
//!
//! `Σ` is a `T`-`A` bimodule with `Σ_A` finitely generated projective.
//! Unit `θ_Y(y) = Σ_i y⊗e_i⊗e_i*`, counit `χ_X(x⊗φ⊗u) = x·φ(u)`.

use crate::comodule::{canonical_map, default_test_modules, CanMap, LeftComodule, RightComodule, TestModule};
use crate::coring::{Coring, Comatrix, comatrix_coring};
use crate::error::{Error, Result};
use crate::mat::{kron_vec, unit_vec, vec_add, vec_scale, Mat};
use crate::moduli::{dual_module, hom_right, Bimodule, DualBasis, DualModule};
use crate::report::Verdict;
use crate::scalar::Scalar;
use crate::tensor::{apply_second, tensor_over, TensorProduct, TensorTest};

/// Unit and counit on chosen test modules, with the checks run on them.
#[derive(Clone, Debug)]
pub struct AdjunctionData<F> {
    pub sigma: Bimodule<F>,
    pub dual: DualModule<F>,
    pub dual_basis: DualBasis<F>,
    /// `θ_Y` per right `T`-module.
    pub units: Vec<(String, Mat<F>)>,
    /// `χ_X` per right `A`-module.
    pub counits: Vec<(String, Mat<F>)>,
    /// Both triangle identities per test module.
    pub triangles: Vec<(String, bool)>,
    /// `η` and its inverse compose to the identity on hom-space bases.
    pub eta_round_trips: Vec<(String, bool)>,
}

impl<F: Scalar> AdjunctionData<F> {
    pub fn passes(&self) -> bool {
        self.triangles.iter().chain(&self.eta_round_trips).all(|(_, ok)| *ok)
    }
}

/// `Y⊗_TΣ`, `(Y⊗_TΣ)⊗_AΣ*` and `θ_Y`.
pub fn unit<F: Scalar>(
    y: &Bimodule<F>,
    sigma: &Bimodule<F>,
    dual: &DualModule<F>,
    db: &DualBasis<F>,
) -> Result<(TensorProduct<F>, TensorProduct<F>, Mat<F>)> {
    let ys = tensor_over(y, sigma)?;
    let ysd = tensor_over(&ys.module, &dual.module)?;
    let cols: Vec<Vec<F>> = (0..y.dim())
        .map(|i| {
            let yi = unit_vec(y.dim(), i);
            let mut v = vec![F::zero(); ysd.ambient_dim()];
            for (e, phi) in db.elements.iter().zip(&db.functionals) {
                v = vec_add(&v, &kron_vec(&ys.pure(&yi, e), phi));
            }
            ysd.project(&v)
        })
        .collect();
    let theta = Mat::from_cols(ysd.dim(), &cols);
    Ok((ys, ysd, theta))
}

/// `X⊗_AΣ*`, `(X⊗_AΣ*)⊗_TΣ` and `χ_X`.
pub fn counit<F: Scalar>(
    x: &Bimodule<F>,
    sigma: &Bimodule<F>,
    dual: &DualModule<F>,
) -> Result<(TensorProduct<F>, TensorProduct<F>, Mat<F>)> {
    let xd = tensor_over(x, &dual.module)?;
    let xds = tensor_over(&xd.module, sigma)?;
    let (dx, dd, ds) = (x.dim(), dual.dim(), sigma.dim());
    let cols: Vec<Vec<F>> = (0..xds.dim())
        .map(|q| {
            let (k, u) = xds.basis_pair(q);
            let (xi, p) = xd.basis_pair(k);
            x.act_right(&unit_vec(dx, xi), &dual.eval(&unit_vec(dd, p), &unit_vec(ds, u)))
        })
        .collect();
    Ok((xd, xds, Mat::from_cols(dx, &cols)))
}

/// `(χ_X ⊗ Σ*)∘θ_{X⊗Σ*} = id`.
fn triangle_x<F: Scalar>(x: &Bimodule<F>, sigma: &Bimodule<F>, dual: &DualModule<F>, db: &DualBasis<F>) -> Result<bool> {
    let (xd, _, chi) = counit(x, sigma, dual)?;
    let (_, ysd, theta) = unit(&xd.module, sigma, dual, db)?;
    let back = ysd.map_tensor(&chi, &Mat::identity(dual.dim()), &xd);
    Ok(back.mul(&theta) == Mat::identity(xd.dim()))
}

/// `χ_{Y⊗Σ}∘(θ_Y ⊗ Σ) = id`.
fn triangle_y<F: Scalar>(y: &Bimodule<F>, sigma: &Bimodule<F>, dual: &DualModule<F>, db: &DualBasis<F>) -> Result<bool> {
    let (ys, _, theta) = unit(y, sigma, dual, db)?;
    let (_, xds, chi) = counit(&ys.module, sigma, dual)?;
    let forward = ys.map_tensor(&theta, &Mat::identity(sigma.dim()), &xds);
    Ok(chi.mul(&forward) == Mat::identity(ys.dim()))
}

/// `f ↦ χ_X∘(f⊗Σ)` and `g ↦ (g⊗Σ*)∘θ_Y` are mutually inverse on bases.
fn eta_round_trip<F: Scalar>(
    y: &Bimodule<F>,
    x: &Bimodule<F>,
    sigma: &Bimodule<F>,
    dual: &DualModule<F>,
    db: &DualBasis<F>,
) -> Result<bool> {
    let (ys, _, theta) = unit(y, sigma, dual, db)?;
    let (xd, xds, chi) = counit(x, sigma, dual)?;
    let ysd = tensor_over(&ys.module, &dual.module)?;
    let eta = |f: &Mat<F>| chi.mul(&ys.map_tensor(f, &Mat::identity(sigma.dim()), &xds));
    let eta_inv = |g: &Mat<F>| ysd.map_tensor(g, &Mat::identity(dual.dim()), &xd).mul(&theta);
    let fs = hom_right(y, &xd.module)?;
    let gs = hom_right(&ys.module, x)?;
    Ok(fs.len() == gs.len() && fs.iter().all(|f| eta_inv(&eta(f)) == *f) && gs.iter().all(|g| eta(&eta_inv(g)) == *g))
}

/// Adjunction data on the default `T`-test modules and `X ∈ {A, A², Σ}`.
pub fn build_adjunction<F: Scalar>(sigma: &Bimodule<F>, db: &DualBasis<F>) -> Result<AdjunctionData<F>> {
    build_adjunction_on(sigma, db, &default_test_modules(&sigma.left))
}

pub fn build_adjunction_on<F: Scalar>(sigma: &Bimodule<F>, db: &DualBasis<F>, tests: &[TestModule]) -> Result<AdjunctionData<F>> {
    let dual = dual_module(sigma);
    db.check(sigma, &dual).map_err(|w| Error::NotProjective(w.to_string()))?;
    let a = Bimodule::regular(&sigma.right).as_right();
    let xs = vec![("A".to_string(), a.clone()), ("A^2".to_string(), a.power(2)), ("Σ".to_string(), sigma.as_right())];
    let mut units = Vec::new();
    let mut counits = Vec::new();
    let mut triangles = Vec::new();
    let mut eta_round_trips = Vec::new();
    for test in tests {
        let y = test.build(&sigma.left)?;
        units.push((test.label(), unit(&y, sigma, &dual, db)?.2));
        triangles.push((test.label(), triangle_y(&y, sigma, &dual, db)?));
        for (label, x) in &xs {
            eta_round_trips.push((format!("{} / {label}", test.label()), eta_round_trip(&y, x, sigma, &dual, db)?));
        }
    }
    for (label, x) in &xs {
        counits.push((label.clone(), counit(x, sigma, &dual)?.2));
        triangles.push((label.clone(), triangle_x(x, sigma, &dual, db)?));
    }
    Ok(AdjunctionData { sigma: sigma.clone(), dual, dual_basis: db.clone(), units, counits, triangles, eta_round_trips })
}

/// `Σ* ⊗_T Σ` with `Δ` solved from `(F⊗θ)∘θ = (Δ⊗Σ*)∘θ` and `ε = η(ι)`.
#[derive(Clone, Debug)]
pub struct CoendCoring<F> {
    pub tensor: TensorProduct<F>,
    pub coring: Coring<F>,
}

pub fn coend_coring<F: Scalar>(sigma: &Bimodule<F>, db: &DualBasis<F>) -> Result<CoendCoring<F>> {
    let dual = dual_module(sigma);
    db.check(sigma, &dual).map_err(|w| Error::NotProjective(w.to_string()))?;
    let tensor = tensor_over(&dual.module, sigma)?;
    let (dd, ds, n) = (dual.dim(), sigma.dim(), tensor.dim());
    // θ_{Σ*}(φ) = Σ_i (φ⊗e_i)⊗e_i*, first pair in F
    let theta = |phi: &[F]| -> Vec<F> {
        let mut v = vec![F::zero(); n * dd];
        for (e, f) in db.elements.iter().zip(&db.functionals) {
            v = vec_add(&v, &kron_vec(&tensor.pure(phi, e), f));
        }
        v
    };
    let mut delta_cols = Vec::with_capacity(n);
    let mut counit_cols = Vec::with_capacity(n);
    for q in 0..n {
        let (p, u) = tensor.basis_pair(q);
        let phi = unit_vec(dd, p);
        let uu = unit_vec(ds, u);
        // (F⊗θ)∘θ(φ) in F⊗F⊗Σ*
        let mut h = vec![F::zero(); n * n * dd];
        for (e, f) in db.elements.iter().zip(&db.functionals) {
            h = vec_add(&h, &kron_vec(&tensor.pure(&phi, e), &theta(f)));
        }
        // η: x⊗ψ⊗u ↦ x·ψ(u)
        let mut col = vec![F::zero(); n * n];
        for (idx, c) in h.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (x, psi) = (idx / dd, idx % dd);
            let a = dual.eval(&unit_vec(dd, psi), &uu);
            let xa = kron_vec(&unit_vec(n, x / n), &tensor.module.act_right(&unit_vec(n, x % n), &a));
            col = vec_add(&col, &vec_scale(c, &xa));
        }
        delta_cols.push(col);
        // η(ι)(φ⊗u) = χ_A(1⊗φ⊗u)
        counit_cols.push(dual.eval(&phi, &uu));
    }
    let coring = Coring::new(tensor.module.clone(), Mat::from_cols(n * n, &delta_cols), Mat::from_cols(sigma.right.dim(), &counit_cols))?;
    Ok(CoendCoring { tensor, coring })
}

/// Coend and comatrix structures agree entry for entry.
pub fn matches_comatrix<F: Scalar>(coend: &CoendCoring<F>, cm: &Comatrix<F>) -> bool {
    coend.coring.delta == cm.coring.delta && coend.coring.counit == cm.coring.counit
}

/// Builds both corings for `_TΣ_A` and compares them.
pub fn coend_matches<F: Scalar>(sigma: &Bimodule<F>, db: &DualBasis<F>) -> Result<bool> {
    let coend = coend_coring(sigma, db)?;
    let cm = comatrix_coring(sigma, &dual_module(sigma), db)?;
    Ok(matches_comatrix(&coend, &cm))
}

/// `λ(φ) = Σ_i ((φ⊗C)ρ(e_i)) ⊗ e_i*`, ambient in `C ⊗ Σ*`.
pub fn dual_coaction<F: Scalar>(sigma: &RightComodule<F>, dual: &DualModule<F>, db: &DualBasis<F>) -> Mat<F> {
    let c = &sigma.coring;
    let (ds, dc, dd) = (sigma.dim(), c.dim(), dual.dim());
    let cols: Vec<Vec<F>> = (0..dd)
        .map(|p| {
            let phi = unit_vec(dd, p);
            let mut v = vec![F::zero(); dc * dd];
            for (e, f) in db.elements.iter().zip(&db.functionals) {
                let rho = sigma.coaction.mul_vec(e);
                let mut head = vec![F::zero(); dc];
                for (idx, coeff) in rho.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let (s, cc) = (idx / dc, idx % dc);
                    let a = dual.eval(&phi, &unit_vec(ds, s));
                    head = vec_add(&head, &vec_scale(coeff, &c.bimodule.act_left(&a, &unit_vec(dc, cc))));
                }
                v = vec_add(&v, &kron_vec(&head, f));
            }
            v
        })
        .collect();
    Mat::from_cols(dc * dd, &cols)
}

/// `f = χ_C∘(λ_{Σ*}⊗_TΣ)` next to `can`.
#[derive(Clone, Debug)]
pub struct FCan<F> {
    pub can: CanMap<F>,
    pub f: Mat<F>,
    /// `Σ*` with `λ_{Σ*}`.
    pub dual_comodule: LeftComodule<F>,
    pub dual_comodule_check: Verdict,
    /// `λ_{Σ*}` right `T`-linear.
    pub bicomodule: bool,
}

impl<F: Scalar> FCan<F> {
    pub fn equal(&self) -> bool {
        self.f == self.can.hom.matrix
    }
}

pub fn f_and_can<F: Scalar>(sigma: &RightComodule<F>) -> Result<FCan<F>> {
    let can = canonical_map(sigma)?;
    let cm = &can.comatrix;
    let (dual, db) = (&cm.dual, &cm.dual_basis);
    let c = &sigma.coring;
    let (dc, dd, ds) = (c.dim(), dual.dim(), sigma.dim());
    let lambda = dual_coaction(sigma, dual, db);
    let dual_comodule = LeftComodule::new(c.clone(), dual.module.clone(), lambda.clone())?;
    let dual_comodule_check = dual_comodule.check();
    let test = TensorTest::new(&c.bimodule, &dual.module)?;
    let bicomodule = dual.module.right_action.iter().all(|rt| {
        (0..dd).all(|p| {
            let lhs = lambda.mul_vec(&rt.col(p));
            let rhs = apply_second(rt, &lambda.col(p), dc);
            test.is_zero(&crate::mat::vec_sub(&lhs, &rhs))
        })
    });
    let cols: Vec<Vec<F>> = (0..cm.tensor.dim())
        .map(|q| {
            let (p, u) = cm.tensor.basis_pair(q);
            let l = lambda.col(p);
            let mut out = vec![F::zero(); dc];
            for (idx, coeff) in l.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let (cc, psi) = (idx / dd, idx % dd);
                let a = dual.eval(&unit_vec(dd, psi), &unit_vec(ds, u));
                out = vec_add(&out, &vec_scale(coeff, &c.bimodule.act_right(&unit_vec(dc, cc), &a)));
            }
            out
        })
        .collect();
    let f = Mat::from_cols(dc, &cols);
    Ok(FCan { can, f, dual_comodule, dual_comodule_check, bicomodule })
}

pub fn f_equals_can<F: Scalar>(sigma: &RightComodule<F>) -> Result<bool> {
    Ok(f_and_can(sigma)?.equal())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coring::{comatrix_from_module, extension_bimodules, sweedler_coring};
    use crate::fixtures::{gf4_sigma, sw_comodule, sw_map, triv_sigma, xprod, Gf2};
    use crate::moduli::dual_basis;

    fn standard<F: Scalar>(sigma: &Bimodule<F>) -> DualBasis<F> {
        dual_basis(sigma, &dual_module(sigma)).unwrap()
    }

    #[test]
    fn trivial_adjunction() {
        let s = triv_sigma::<Gf2>();
        let adj = build_adjunction(&s, &standard(&s)).unwrap();
        assert!(adj.passes());
        let (_, theta) = &adj.units[0];
        assert_eq!(*theta, Mat::identity(theta.rows()));
        assert!(coend_matches(&s, &standard(&s)).unwrap());
    }

    #[test]
    fn gf4_and_sw_adjunctions() {
        let g = gf4_sigma();
        let adj = build_adjunction(&g, &standard(&g)).unwrap();
        assert!(adj.passes() && !adj.eta_round_trips.is_empty());
        assert!(coend_matches(&g, &standard(&g)).unwrap());
        let (_, right) = extension_bimodules(&sw_map());
        let adj = build_adjunction(&right, &standard(&right)).unwrap();
        assert!(adj.passes());
        assert!(coend_matches(&right, &standard(&right)).unwrap());
    }

    #[test]
    fn coend_is_a_coring() {
        let (_, right) = extension_bimodules(&sw_map());
        let coend = coend_coring(&right, &standard(&right)).unwrap();
        assert!(coend.coring.check().is_ok());
        let cm = comatrix_from_module(&right).unwrap();
        assert!(matches_comatrix(&coend, &cm));
        assert!(coend.coring.same_comultiplication(&sweedler_coring(&sw_map()).unwrap().coring.delta).is_ok());
    }

    #[test]
    fn f_is_can() {
        let fc = f_and_can(&sw_comodule()).unwrap();
        assert!(fc.equal() && fc.bicomodule && fc.dual_comodule_check.is_ok());
        let x = xprod();
        let fc = f_and_can(&x.comodule()).unwrap();
        assert!(fc.equal() && fc.bicomodule && fc.dual_comodule_check.is_ok());
        let trivial = RightComodule::regular(&Coring::trivial(&crate::fixtures::gf9()));
        assert!(f_equals_can(&trivial).unwrap());
    }
}
