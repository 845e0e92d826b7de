//! Cosemisimple corings: the decision, the block decomposition into
//! simple subcorings, and conjugacy of division subrings.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{matrix_span_basis, radical_of_matrix_algebra, Algebra, Decision};
use crate::comodule::{canonical_map, endo_rings, RightComodule};
use crate::coring::{convolution_algebra, kron_apply, left_contraction, right_contraction, Coring, Side};
use crate::error::{Error, Result};
use crate::linalg::{all_vectors, inverse, kernel, rank, Subspace};
use crate::mat::Mat;
use crate::moduli::{dual_basis, dual_module, intertwiners, Bimodule};
use crate::algebra::ENUMERATION_BOUND;
use crate::scalar::Scalar;

/// Operators `c ↦ c₁·f(c₂)` for a basis of the left dual.
pub fn left_operators<F: Scalar>(c: &Coring<F>) -> Result<Vec<Mat<F>>> {
    let conv = convolution_algebra(c, Side::Left)?;
    Ok(conv.maps.iter().map(|f| left_contraction(c, f)).collect())
}

/// Operators `c ↦ g(c₁)·c₂` for a basis of the right dual.
pub fn right_operators<F: Scalar>(c: &Coring<F>) -> Result<Vec<Mat<F>>> {
    let conv = convolution_algebra(c, Side::Right)?;
    Ok(conv.maps.iter().map(|g| right_contraction(c, g)).collect())
}

/// `C_A` projective and `C` semisimple over its right dual.
pub fn is_cosemisimple<F: Scalar>(c: &Coring<F>) -> Result<bool> {
    Ok(cosemisimple_obstruction(c)?.is_none())
}

/// Why `C` fails to be cosemisimple: non-projectivity, or a nonzero radical
/// operator of the right dual acting on `C`.
pub fn cosemisimple_obstruction<F: Scalar>(c: &Coring<F>) -> Result<Option<String>> {
    let right = c.bimodule.as_right();
    if dual_basis(&right, &dual_module(&right)).is_err() {
        return Ok(Some("C_A is not finitely generated projective".into()));
    }
    let ops = right_operators(c)?;
    let basis = matrix_span_basis(c.dim(), &ops);
    let radical = radical_of_matrix_algebra(&basis);
    let Some(x) = radical.basis_vecs().into_iter().next() else {
        return Ok(None);
    };
    let mut op = Mat::zeros(c.dim(), c.dim());
    for (k, b) in x.iter().zip(&basis) {
        op.axpy(k, b);
    }
    let rows: Vec<String> = op.row_vecs().iter().map(|r| format!("[{}]", r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", "))).collect();
    Ok(Some(format!("radical of the right dual action has dim {}; radical operator [{}]", radical.dim(), rows.join(", "))))
}

/// One simple subcoring with its simple comodule.
#[derive(Clone, Debug)]
pub struct Block<F> {
    /// `dim C x dim block`.
    pub embedding: Mat<F>,
    pub coring: Coring<F>,
    /// A simple right comodule over the block.
    pub sigma: RightComodule<F>,
    /// `D = End^C(Σ)`.
    pub division: Algebra<F>,
    pub division_certificate: Decision,
    /// `dim Σ* ⊗_D Σ`.
    pub comatrix_dim: usize,
    pub can_bijective: bool,
}

#[derive(Clone, Debug)]
pub struct CosemisimpleReport<F> {
    pub cosemisimple: bool,
    pub blocks: Vec<Block<F>>,
}

impl<F: Scalar> CosemisimpleReport<F> {
    /// Block subspaces in the coordinates of `C`.
    pub fn block_spaces(&self) -> Vec<Subspace<F>> {
        self.blocks.iter().map(|b| Subspace::col_span(&b.embedding)).collect()
    }

    /// Blocks sum to `C`, every block is a simple comatrix coring over a division ring.
    pub fn verified(&self, dim: usize) -> bool {
        self.cosemisimple
            && self.blocks.iter().map(|b| b.embedding.cols()).sum::<usize>() == dim
            && self.blocks.iter().all(|b| b.division_certificate.is_yes() && b.can_bijective && b.comatrix_dim == b.coring.dim())
    }
}

/// Decomposition into blocks; the seed drives the simple-comodule search only.
pub fn decompose<F: Scalar>(c: &Coring<F>, seed: u64) -> Result<CosemisimpleReport<F>> {
    if !is_cosemisimple(c)? {
        return Ok(CosemisimpleReport { cosemisimple: false, blocks: Vec::new() });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ops = left_operators(c)?;
    let n = c.dim();
    let idempotents = central_idempotents(&matrix_span_basis(n, &ops))?;
    let mut blocks = Vec::with_capacity(idempotents.len());
    for e in &idempotents {
        let space = Subspace::col_span(e);
        let emb = space.embedding();
        let coord = space.coord_map();
        let to_block = coord.mul(e);
        let bimodule = c.bimodule.restrict_to(&space)?;
        let delta = kron_apply(&to_block, &to_block, &c.delta.mul(&emb), n);
        let coring = Coring::new(bimodule, delta, c.counit.mul(&emb))?;
        coring.check().map_err(|w| Error::Axiom(format!("block is not a subcoring: {w}")))?;
        blocks.push(simple_block(emb, coring, &mut rng)?);
    }
    let total: usize = blocks.iter().map(|b| b.embedding.cols()).sum();
    if total != n {
        return Err(Error::Axiom(format!("blocks have total dimension {total}, coring has {n}")));
    }
    Ok(CosemisimpleReport { cosemisimple: true, blocks })
}

/// Primitive idempotents of the centre of a semisimple matrix algebra.
fn central_idempotents<F: Scalar>(basis: &[Mat<F>]) -> Result<Vec<Mat<F>>> {
    let size = basis[0].rows();
    let r = basis.len();
    let combine = |x: &[F]| {
        let mut m = Mat::zeros(size, size);
        for (c, b) in x.iter().zip(basis) {
            m.axpy(c, b);
        }
        m
    };
    // centre: Σ x_k (b_k b_j − b_j b_k) = 0
    let cols: Vec<Vec<F>> = basis
        .iter()
        .map(|bk| basis.iter().flat_map(|bj| bk.mul(bj).sub(&bj.mul(bk)).flatten()).collect())
        .collect();
    let centre: Vec<Mat<F>> = kernel(&Mat::from_cols(r * size * size, &cols)).row_vecs().iter().map(|x| combine(x)).collect();
    if centre.len() == 1 {
        return Ok(vec![Mat::identity(size)]);
    }
    let Some(p) = F::order() else {
        return Err(Error::Undecided("splitting a centre of dimension > 1 over the rationals needs polynomial factorisation".into()));
    };
    // fixed points of z ↦ z^p form a split subalgebra holding every idempotent
    let span = Subspace::span(size * size, &centre.iter().map(|m| m.flatten()).collect::<Vec<_>>());
    let frob_cols: Vec<Vec<F>> = centre
        .iter()
        .map(|z| {
            let zp = z.pow(p).sub(z);
            span.coords(&zp.flatten()).expect("centre is closed")
        })
        .collect();
    let fixed: Vec<Mat<F>> = kernel(&Mat::from_cols(centre.len(), &frob_cols))
        .row_vecs()
        .iter()
        .map(|x| {
            let mut m = Mat::zeros(size, size);
            for (c, z) in x.iter().zip(&centre) {
                m.axpy(c, z);
            }
            m
        })
        .collect();
    let elems = F::elements().expect("finite field");
    let mut idem = vec![Mat::identity(size)];
    for b in &fixed {
        let mut next = Vec::new();
        for e in &idem {
            for lambda in &elems {
                let mut f = e.clone();
                for mu in elems.iter().filter(|m| *m != lambda) {
                    let factor = b.sub(&Mat::identity(size).scale(mu)).scale(&(F::one() / (lambda.clone() - mu.clone())));
                    f = f.mul(&factor);
                }
                if !f.is_zero() {
                    next.push(f);
                }
            }
        }
        idem = next;
    }
    Ok(idem)
}

/// A simple right subcomodule of a block, its endomorphism ring and `can`.
fn simple_block<F: Scalar>(embedding: Mat<F>, coring: Coring<F>, rng: &mut ChaCha8Rng) -> Result<Block<F>> {
    let m = coring.dim();
    let ops = left_operators(&coring)?;
    // spin a random vector
    let v: Vec<F> = (0..m).map(|_| F::random(rng)).collect();
    let mut space = Subspace::span(m, &ops.iter().map(|l| l.mul_vec(&v)).collect::<Vec<_>>());
    if space.dim() == 0 {
        space = Subspace::full(m);
    }
    let certificate = loop {
        let emb = space.embedding();
        let coord = space.coord_map();
        let restricted: Vec<Mat<F>> = ops.iter().map(|l| coord.mul(&l.mul(&emb))).collect();
        let pairs: Vec<(Mat<F>, Mat<F>)> = restricted.iter().map(|l| (l.clone(), l.clone())).collect();
        let comm = intertwiners(space.dim(), space.dim(), &pairs);
        let e = Algebra::from_matrix_basis(&comm)?;
        match e.is_division_ring()? {
            Decision::Yes => break Decision::Yes,
            Decision::Undecided(why) => break Decision::Undecided(why),
            Decision::No => {
                let x = singular_element(&comm, rng)?;
                let image: Vec<Vec<F>> = emb.mul(&x).col_vecs();
                space = Subspace::span(m, &image);
            }
        }
    };
    let sigma = subcomodule(&coring, &space)?;
    let rings = endo_rings(&sigma)?;
    let division = rings.t.algebra.clone();
    let division_certificate = match certificate {
        Decision::Yes => division.is_division_ring()?,
        other => other,
    };
    let can = canonical_map(&sigma)?;
    Ok(Block {
        embedding,
        coring,
        sigma,
        division,
        division_certificate,
        comatrix_dim: can.comatrix.coring.dim(),
        can_bijective: can.is_bijective(),
    })
}

/// A nonzero non-invertible combination of `basis`, random first, then by enumeration.
fn singular_element<F: Scalar>(basis: &[Mat<F>], rng: &mut ChaCha8Rng) -> Result<Mat<F>> {
    let size = basis[0].rows();
    let combine = |x: &[F]| {
        let mut m = Mat::zeros(size, size);
        for (c, b) in x.iter().zip(basis) {
            m.axpy(c, b);
        }
        m
    };
    for _ in 0..256 {
        let x: Vec<F> = basis.iter().map(|_| F::random(rng)).collect();
        let m = combine(&x);
        let r = rank(&m);
        if r > 0 && r < size {
            return Ok(m);
        }
    }
    for x in all_vectors::<F>(basis.len(), ENUMERATION_BOUND)? {
        let m = combine(&x);
        let r = rank(&m);
        if r > 0 && r < size {
            return Ok(m);
        }
    }
    Err(Error::Invalid("no singular endomorphism found in a non-division ring".into()))
}

/// A right subcomodule `S ⊆ C`, with coaction through a colinear projection onto `S`.
fn subcomodule<F: Scalar>(c: &Coring<F>, space: &Subspace<F>) -> Result<RightComodule<F>> {
    let m = c.dim();
    let emb = space.embedding();
    let coord = space.coord_map();
    let s = space.dim();
    let ops = right_operators(c)?;
    // Q = Σ x_g F_g with Q|_S = id and Q(C) ⊆ S
    let outside = Mat::identity(m).sub(&emb.mul(&coord));
    let cols: Vec<Vec<F>> = ops
        .iter()
        .map(|q| {
            let mut col = q.mul(&emb).flatten();
            col.extend(outside.mul(q).flatten());
            col
        })
        .collect();
    let rows = m * s + m * m;
    let mut rhs = emb.flatten();
    rhs.extend(vec![F::zero(); m * m]);
    let x = crate::linalg::solve_vec(&Mat::from_cols(rows, &cols), &rhs)
        .ok_or_else(|| Error::Invalid("subcomodule has no colinear complement".into()))?;
    let mut q = Mat::zeros(m, m);
    for (c, op) in x.iter().zip(&ops) {
        q.axpy(c, op);
    }
    let to_s = coord.mul(&q);
    let coaction = kron_apply(&to_s, &Mat::identity(m), &c.delta.mul(&emb), m);
    let action = c.bimodule.right_action.iter().map(|r| coord.mul(&r.mul(&emb))).collect();
    let module = Bimodule::right_module(c.base().clone(), s, action)?;
    RightComodule::new(c.clone(), module, coaction)
}

/// `g: Σ -> Ξ` a right `A`-module isomorphism with `g D g⁻¹ = E`.
pub fn verify_conjugacy<F: Scalar>(sigma: &Bimodule<F>, d: &[Mat<F>], xi: &Bimodule<F>, e: &[Mat<F>], g: &Mat<F>) -> bool {
    if d.len() != e.len() || sigma.dim() != xi.dim() || g.rows() != xi.dim() || g.cols() != sigma.dim() {
        return false;
    }
    let Some(gi) = inverse(g) else { return false };
    let gens = sigma.right.generators();
    if gens.iter().any(|a| g.mul(&sigma.right_op(a)) != xi.right_op(a).mul(g)) {
        return false;
    }
    let n = xi.dim();
    let target = Subspace::span(n * n, &e.iter().map(|m| m.flatten()).collect::<Vec<_>>());
    let conj = Subspace::span(n * n, &d.iter().map(|m| g.mul(m).mul(&gi).flatten()).collect::<Vec<_>>());
    target == conj
}

/// First `g` in enumeration order passing [`verify_conjugacy`].
pub fn conjugacy_search<F: Scalar>(sigma: &Bimodule<F>, d: &[Mat<F>], xi: &Bimodule<F>, e: &[Mat<F>]) -> Result<Option<Mat<F>>> {
    if d.len() != e.len() || sigma.dim() != xi.dim() {
        return Ok(None);
    }
    let n = sigma.dim();
    for v in all_vectors::<F>(n * n, ENUMERATION_BOUND)? {
        let g = Mat::unflatten(n, n, &v);
        if verify_conjugacy(sigma, d, xi, e, &g) {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coring::sweedler_coring;
    use crate::fixtures::{mat_simple, sw_map, Gf2, Gf3};
    use crate::scalar::Rational;

    #[test]
    fn decisions() {
        assert!(is_cosemisimple(&Coring::trivial(&Algebra::<Gf3>::matrix_algebra(2))).unwrap());
        assert!(!is_cosemisimple(&Coring::trivial(&Algebra::<Gf2>::truncated_polynomial(&[Gf2::new(0), Gf2::new(0)]))).unwrap());
        assert!(is_cosemisimple(&sweedler_coring(&sw_map()).unwrap().coring).unwrap());
        assert!(is_cosemisimple(&Coring::trivial(&Algebra::<Rational>::matrix_algebra(2))).unwrap());
    }

    #[test]
    fn matrix_block() {
        let c = Coring::trivial(&Algebra::<Gf3>::matrix_algebra(2));
        let r = decompose(&c, 0).unwrap();
        assert_eq!(r.blocks.len(), 1);
        let b = &r.blocks[0];
        assert_eq!((b.sigma.dim(), b.division.dim(), b.comatrix_dim), (2, 1, 4));
        assert!(r.verified(4));
        for seed in 1..10 {
            assert_eq!(decompose(&c, seed).unwrap().block_spaces(), r.block_spaces());
        }
    }

    #[test]
    fn sweedler_block() {
        let c = sweedler_coring(&sw_map()).unwrap().coring;
        let r = decompose(&c, 3).unwrap();
        assert_eq!(r.blocks.len(), 1);
        assert_eq!((r.blocks[0].sigma.dim(), r.blocks[0].division.dim()), (2, 1));
        assert!(r.verified(4));
    }

    #[test]
    fn product_has_two_blocks() {
        let k = Algebra::<Gf2>::ground();
        let c = Coring::trivial(&Algebra::product(&k, &k));
        let r = decompose(&c, 0).unwrap();
        assert_eq!(r.blocks.len(), 2);
        assert!(r.verified(2));
        let g = Coring::trivial(&crate::fixtures::gf4());
        let r = decompose(&g, 0).unwrap();
        assert_eq!((r.blocks.len(), r.blocks[0].division.dim()), (1, 2));
    }

    #[test]
    fn not_cosemisimple_has_no_blocks() {
        let c = Coring::trivial(&Algebra::<Gf2>::truncated_polynomial(&[Gf2::new(0), Gf2::new(0)]));
        let r = decompose(&c, 0).unwrap();
        assert!(!r.cosemisimple && r.blocks.is_empty());
    }

    #[test]
    fn conjugacy() {
        let s = mat_simple();
        let scalars = vec![Mat::<Gf3>::identity(2)];
        assert!(verify_conjugacy(&s, &scalars, &s, &scalars, &Mat::identity(2)));
        assert!(!verify_conjugacy(&s, &scalars, &s, &[Mat::identity(2), Mat::zeros(2, 2)], &Mat::identity(2)));
        // a second presentation through a change of basis
        let g0 = Mat::from_rows(2, &[vec![Gf3::new(1), Gf3::new(1)], vec![Gf3::new(0), Gf3::new(1)]]).unwrap();
        let gi = inverse(&g0).unwrap();
        let action = s.right_action.iter().map(|r| g0.mul(r).mul(&gi)).collect();
        let xi = Bimodule::right_module(s.right.clone(), 2, action).unwrap();
        let e = vec![g0.mul(&scalars[0]).mul(&gi)];
        let found = conjugacy_search(&s, &scalars, &xi, &e).unwrap().unwrap();
        assert!(verify_conjugacy(&s, &scalars, &xi, &e, &found));
    }
}
