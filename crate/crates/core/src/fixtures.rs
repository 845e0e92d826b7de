//! Built-in examples, random instances and deliberately broken objects.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, AlgebraHom, SubalgebraPresentation};
use crate::comodule::{grouplike_comodule, RightComodule};
use crate::coring::{dual_coring, extension_bimodules, sweedler_coring, Coring, CoringHom, DualCoring};
use crate::linalg::Subspace;
use crate::mat::{kron_vec, unit_vec, Mat};
use crate::moduli::{hom_right, Bimodule};
use crate::scalar::{Fp, Scalar};

pub type Gf2 = Fp<2>;
pub type Gf3 = Fp<3>;

/// `GF(4) = GF(2)[x]/(x²+x+1)`.
pub fn gf4() -> Algebra<Gf2> {
    Algebra::truncated_polynomial(&[Gf2::new(1), Gf2::new(1)])
}

/// `GF(9) = GF(3)[i]/(i²+1)`.
pub fn gf9() -> Algebra<Gf3> {
    Algebra::truncated_polynomial(&[Gf3::new(1), Gf3::new(0)])
}

/// `k` over `k`.
pub fn triv_sigma<F: Scalar>() -> Bimodule<F> {
    Bimodule::regular(&Algebra::ground())
}

/// `GF(2) -> GF(4)`.
pub fn sw_map() -> AlgebraHom<Gf2> {
    AlgebraHom::unit_map(&gf4())
}

/// `_{GF(2)} GF(4)_{GF(4)}`.
pub fn gf4_sigma() -> Bimodule<Gf2> {
    extension_bimodules(&sw_map()).1
}

/// `M₂(GF(3))` acting on row vectors `GF(3)²` from the right.
pub fn mat_simple() -> Bimodule<Gf3> {
    let m2 = Algebra::<Gf3>::matrix_algebra(2);
    // row vector v, basis E_ij: v·E_ij = v_i e_j
    let action = (0..4)
        .map(|t| {
            let (i, j) = (t / 2, t % 2);
            Mat::from_fn(2, 2, |r, c| if r == j && c == i { Gf3::new(1) } else { Gf3::new(0) })
        })
        .collect();
    Bimodule::right_module(m2, 2, action).expect("row vectors form a right module")
}

/// The crossed product `C₂ * GF(9)` for Frobenius, with the pieces used around it.
#[derive(Clone, Debug)]
pub struct CrossedProduct<F> {
    pub field: Algebra<F>,
    /// Basis `(g, j)` at index `2g + j`: the group element `g` times `j`-th field basis vector.
    pub ring: Algebra<F>,
    /// `a ↦ 1·a`.
    pub inclusion: AlgebraHom<F>,
    /// Frobenius as a matrix on the field.
    pub frobenius: Mat<F>,
    /// `Σ σ a_σ ↦ Σ a_σ`, `dim A x dim R`.
    pub trace: Mat<F>,
}

pub fn xprod() -> CrossedProduct<Gf3> {
    let a = gf9();
    let frob = Mat::from_fn(2, 2, |r, c| match (r, c) {
        (0, 0) => Gf3::new(1),
        (1, 1) => Gf3::new(2),
        _ => Gf3::new(0),
    });
    let aut = |h: usize, v: &[Gf3]| if h == 0 { v.to_vec() } else { frob.mul_vec(v) };
    let labels = ["1", "i", "s", "si"].iter().map(|s| s.to_string()).collect();
    // (g a)(h b) = gh · h(a) b, C₂ is its own inverse
    let ring = Algebra::from_fn(labels, unit_vec(4, 0), |x, y| {
        let (g, j) = (x / 2, x % 2);
        let (h, k) = (y / 2, y % 2);
        let c = a.mul(&aut(h, &a.basis_element(j)), &a.basis_element(k));
        let mut v = vec![Gf3::new(0); 4];
        let block = (g + h) % 2;
        v[2 * block] = c[0];
        v[2 * block + 1] = c[1];
        v
    });
    let inclusion = AlgebraHom::new(a.clone(), ring.clone(), Mat::from_fn(4, 2, |r, c| if r == c { Gf3::new(1) } else { Gf3::new(0) }))
        .expect("shapes agree");
    let trace = Mat::from_fn(2, 4, |r, c| if c % 2 == r { Gf3::new(1) } else { Gf3::new(0) });
    CrossedProduct { field: a, ring, inclusion, frobenius: frob, trace }
}

impl CrossedProduct<Gf3> {
    /// `R*` as a coring over the field.
    pub fn dual_coring(&self) -> DualCoring<Gf3> {
        dual_coring(&self.inclusion).expect("R is free over A")
    }

    /// Coordinates of the trace map in `R*`.
    pub fn trace_grouplike(&self, dc: &DualCoring<Gf3>) -> Vec<Gf3> {
        dc.dual.coords_of(&self.trace).expect("trace is right A-linear")
    }

    /// `A` over `R*` through the trace grouplike.
    pub fn comodule(&self) -> RightComodule<Gf3> {
        let dc = self.dual_coring();
        let g = self.trace_grouplike(&dc);
        grouplike_comodule(&dc.coring, &g)
    }
}

/// `A` with an idempotent `e`, `f = 1 − e`, `fAe = 0`, and `I = eA`.
#[derive(Clone, Debug)]
pub struct NonFlat<F> {
    /// Basis `e, ε, x, f`.
    pub algebra: Algebra<F>,
    /// `I = eA` as an `A`-`A` bimodule.
    pub ideal: Bimodule<F>,
    /// `Δ(y) = e ⊗ y`, `ε` the inclusion.
    pub coring: Coring<F>,
    /// `eAe` on the basis `e, ε`.
    pub corner: Algebra<F>,
}

pub fn nonflat() -> NonFlat<Gf2> {
    let one = Gf2::new(1);
    let (e, eps, x, f) = (0, 1, 2, 3);
    let labels = ["e", "eps", "x", "f"].iter().map(|s| s.to_string()).collect();
    let algebra = Algebra::from_fn(labels, vec![one, Gf2::new(0), Gf2::new(0), one], |i, j| {
        let prod = match (i, j) {
            (0, 0) => Some(e),
            (0, 1) | (1, 0) => Some(eps),
            (0, 2) | (2, 3) => Some(x),
            (3, 3) => Some(f),
            _ => None,
        };
        prod.map_or(vec![Gf2::new(0); 4], |k| unit_vec(4, k))
    });
    let sub = Subspace::span(4, &[unit_vec(4, e), unit_vec(4, eps), unit_vec(4, x)]);
    let ideal = Bimodule::regular(&algebra).restrict_to(&sub).expect("eA is a two-sided ideal");
    let delta = Mat::from_cols(9, &(0..3).map(|y| kron_vec(&unit_vec(3, 0), &unit_vec(3, y))).collect::<Vec<_>>());
    let coring = Coring::new(ideal.clone(), delta, sub.embedding()).expect("shapes agree");
    let corner = Algebra::truncated_polynomial(&[Gf2::new(0), Gf2::new(0)]);
    NonFlat { algebra, ideal, coring, corner }
}

/// The Sweedler coring of `GF(2) -> GF(4)` with `A` as a comodule via `1⊗1`.
pub fn sw_comodule() -> RightComodule<Gf2> {
    let sw = sweedler_coring(&sw_map()).expect("field extension");
    let a = gf4();
    let g = sw.tensor.pure(a.unit(), a.unit());
    grouplike_comodule(&sw.coring, &g)
}

/// `GF(4)` with `x·1` changed to `1 + x`.
pub fn mutated_algebra() -> Algebra<Gf2> {
    let a = gf4();
    let mut table = a.table().to_vec();
    table[1][0] = vec![Gf2::new(1), Gf2::new(1)];
    Algebra::new(a.labels().to_vec(), table, a.unit().to_vec()).expect("shapes agree")
}

/// The Sweedler coring of `GF(2) -> GF(4)` with `Δ` of the first basis vector doubled up.
pub fn mutated_coring() -> Coring<Gf2> {
    let mut c = sweedler_coring(&sw_map()).expect("field extension").coring;
    let n = c.dim();
    let extra = kron_vec(&unit_vec(n, 0), &unit_vec(n, 0));
    for (r, v) in extra.into_iter().enumerate() {
        c.delta[(r, 0)] += v;
    }
    c
}

/// `A` over the Sweedler coring with the coaction of `1` replaced by `1⊗1⊗x`.
pub fn mutated_comodule() -> RightComodule<Gf2> {
    let mut m = sw_comodule();
    let a = gf4();
    let sw = sweedler_coring(&sw_map()).expect("field extension");
    let bad = kron_vec(a.unit(), &sw.tensor.pure(a.unit(), &a.basis_element(1)));
    for (r, v) in bad.into_iter().enumerate() {
        m.coaction[(r, 0)] = v;
    }
    m
}

/// The identity of the Sweedler coring with its first column moved to the second basis vector.
pub fn mutated_coring_hom() -> CoringHom<Gf2> {
    let c = sweedler_coring(&sw_map()).expect("field extension").coring;
    let mut h = CoringHom::identity(&c);
    h.matrix.swap_entries((0, 0), (1, 0));
    h
}

/// Monic irreducible `x² + a x + b` over a finite field, by root search.
fn irreducible_quadratic<F: Scalar>() -> Option<(F, F)> {
    let elems = F::elements()?;
    for b in &elems {
        for a in &elems {
            if elems.iter().all(|t| !(t.clone() * t.clone() + a.clone() * t.clone() + b.clone()).is_zero()) {
                return Some((b.clone(), a.clone()));
            }
        }
    }
    None
}

/// Upper triangular `2 x 2` matrices on `E11, E12, E22`.
pub fn upper_triangular<F: Scalar>() -> Algebra<F> {
    let m = Algebra::<F>::matrix_algebra(2);
    let idx = [0usize, 1, 3];
    let basis: Vec<Vec<F>> = idx.iter().map(|&i| unit_vec(4, i)).collect();
    let sub = SubalgebraPresentation::from_subspace(&m, &Subspace::span(4, &basis)).expect("closed");
    let mut alg = sub.algebra;
    alg = Algebra::new(vec!["E11".into(), "E12".into(), "E22".into()], alg.table().to_vec(), alg.unit().to_vec()).expect("same shape");
    alg
}

/// A small algebra of dimension at most 4 drawn from a fixed family.
pub fn random_algebra<F: Scalar, R: Rng>(rng: &mut R) -> Algebra<F> {
    let z = F::zero;
    loop {
        match rng.gen_range(0..7) {
            0 => return Algebra::ground(),
            1 => return Algebra::truncated_polynomial(&[z(), z()]),
            2 => return Algebra::product(&Algebra::ground(), &Algebra::ground()),
            3 => {
                if let Some((b, a)) = irreducible_quadratic::<F>() {
                    return Algebra::truncated_polynomial(&[b, a]);
                }
            }
            4 => return upper_triangular(),
            5 => return Algebra::matrix_algebra(2),
            _ => return Algebra::truncated_polynomial(&[z(), z(), z()]),
        }
    }
}

/// A `B`-`A` bimodule `Σ` with `Σ_A` projective, `dim A ≤ 4`, `dim Σ ≤ 6`;
/// `B` is generated inside `End_A(Σ)` by one random element.
pub fn random_bimodule<F: Scalar>(seed: u64) -> Bimodule<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_algebra::<F, _>(&mut rng);
    let reg = Bimodule::regular(&a).as_right();
    let max = 6 / a.dim();
    let copies = rng.gen_range(1..=max);
    let mut sigma = reg.power(copies);
    // a non-free projective summand e·A where an idempotent basis vector exists
    let idempotents: Vec<usize> = (0..a.dim()).filter(|&i| a.basis_product(i, i) == a.basis_element(i).as_slice() && a.basis_element(i) != a.unit()).collect();
    if let Some(&i) = idempotents.choose(&mut rng) {
        if sigma.dim() + a.dim() <= 6 && rng.gen_bool(0.5) {
            let e = a.basis_element(i);
            let ea: Vec<Vec<F>> = (0..a.dim()).map(|j| a.mul(&e, &a.basis_element(j))).collect();
            let part = reg.restrict_to(&Subspace::span(a.dim(), &ea)).expect("right ideal");
            sigma = sigma.direct_sum(&part);
        }
    }
    let homs = hom_right(&sigma, &sigma).expect("same algebra");
    let s = Algebra::from_matrix_basis(&homs).expect("End_A is an algebra");
    let b = if rng.gen_bool(0.2) {
        SubalgebraPresentation::generated_by(&s, &[])
    } else {
        let x: Vec<F> = (0..s.dim()).map(|_| F::random(&mut rng)).collect();
        SubalgebraPresentation::generated_by(&s, &[x])
    };
    let left_action = b
        .embedding
        .col_vecs()
        .iter()
        .map(|c| {
            let mut m = Mat::zeros(sigma.dim(), sigma.dim());
            for (x, h) in c.iter().zip(&homs) {
                m.axpy(x, h);
            }
            m
        })
        .collect();
    Bimodule::new(b.algebra, a, sigma.dim(), left_action, sigma.right_action.clone()).expect("B acts A-linearly")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::check_comodule;

    #[test]
    fn built_in_objects_pass() {
        assert!(gf4().check().is_ok());
        assert!(gf9().check().is_ok());
        assert!(gf9().is_division_ring().unwrap().is_yes());
        assert!(mat_simple().check().is_ok());
        let x = xprod();
        assert!(x.ring.check().is_ok());
        assert!(x.inclusion.check().is_ok());
        let n = nonflat();
        assert!(n.algebra.check().is_ok());
        n.coring.check().unwrap();
        check_comodule(&sw_comodule()).unwrap();
    }

    #[test]
    fn mutations_fail() {
        assert!(mutated_algebra().check().is_err());
        assert!(mutated_coring().check().is_err());
        assert!(check_comodule(&mutated_comodule()).is_err());
        assert!(mutated_coring_hom().check().is_err());
    }

    #[test]
    fn random_bimodules_are_valid() {
        for seed in 0..20 {
            let s = random_bimodule::<Gf3>(seed);
            assert!(s.check().is_ok(), "seed {seed}");
            assert!(s.right.dim() <= 4 && s.dim() <= 6);
        }
        assert_eq!(random_bimodule::<Gf2>(7), random_bimodule::<Gf2>(7));
    }
}
