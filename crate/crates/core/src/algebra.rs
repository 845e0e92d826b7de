//! Finite-dimensional unital associative algebras given by structure
//! constants, together with radicals, centres, subalgebras and
//! division-ring tests.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{all_vectors, kernel, rank, Subspace};
use crate::mat::{is_zero_vec, lin_comb, unit_vec, vec_sub, Mat};
use crate::report::{Verdict, Witness};
use crate::scalar::Scalar;

/// Elements above this count are never enumerated.
pub const ENUMERATION_BOUND: u128 = 1_000_000;

/// Three-valued answer for properties that are only partially decidable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    Undecided(String),
}

impl Decision {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Decision::Yes
        } else {
            Decision::No
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes)
    }
}

/// `b_i b_j = Σ_k table[i][j][k] b_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra<F> {
    labels: Vec<String>,
    table: Vec<Vec<Vec<F>>>,
    unit: Vec<F>,
}

impl<F> fmt::Debug for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {}, basis {:?})", self.labels.len(), self.labels)
    }
}

impl<F: Scalar> Algebra<F> {
    /// Shape-checked constructor. Axioms are checked by [`Algebra::check`].
    pub fn new(labels: Vec<String>, table: Vec<Vec<Vec<F>>>, unit: Vec<F>) -> Result<Self> {
        let n = labels.len();
        if unit.len() != n {
            return Err(Error::Shape(format!("unit has {} coordinates, dim is {n}", unit.len())));
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::Shape(format!("structure constants are not {n}x{n}x{n}")));
        }
        Ok(Algebra { labels, table, unit })
    }

    /// Builds the table from a product on basis indices.
    pub fn from_fn(labels: Vec<String>, unit: Vec<F>, mut mul: impl FnMut(usize, usize) -> Vec<F>) -> Self {
        let n = labels.len();
        let table = (0..n).map(|i| (0..n).map(|j| mul(i, j)).collect()).collect();
        Algebra { labels, table, unit }
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground() -> Self {
        Algebra { labels: vec!["1".into()], table: vec![vec![vec![F::one()]]], unit: vec![F::one()] }
    }

    /// Full matrix algebra `M_n(F)` with matrix-unit basis `E_ij` at index `i n + j`.
    pub fn matrix_algebra(n: usize) -> Self {
        let labels = (0..n * n).map(|t| format!("E{}{}", t / n + 1, t % n + 1)).collect();
        let mut unit = vec![F::zero(); n * n];
        for i in 0..n {
            unit[i * n + i] = F::one();
        }
        Self::from_fn(labels, unit, |a, b| {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            let mut v = vec![F::zero(); n * n];
            if j == k {
                v[i * n + l] = F::one();
            }
            v
        })
    }

    /// `F[x]/(f)` for a monic `f` given by its coefficients `c_0..c_{d-1}`
    /// (`x^d = -Σ c_i x^i`), basis `1, x, .., x^{d-1}`.
    pub fn truncated_polynomial(coeffs: &[F]) -> Self {
        let d = coeffs.len();
        assert!(d > 0, "polynomial of degree 0");
        let labels = (0..d).map(|i| if i == 0 { "1".into() } else { format!("x^{i}") }).collect();
        // powers x^0 .. x^{2d-2} reduced
        let mut powers: Vec<Vec<F>> = (0..d).map(|i| unit_vec(d, i)).collect();
        for _ in d..2 * d - 1 {
            let last = powers.last().unwrap().clone();
            // x * last
            let mut next = vec![F::zero(); d];
            next[1..].clone_from_slice(&last[..d - 1]);
            let top = last[d - 1].clone();
            for i in 0..d {
                next[i] -= top.clone() * coeffs[i].clone();
            }
            powers.push(next);
        }
        Self::from_fn(labels, unit_vec(d, 0), |i, j| powers[i + j].clone())
    }

    /// Direct product `A x B`; basis of `A` first.
    pub fn product(a: &Algebra<F>, b: &Algebra<F>) -> Self {
        let (n, m) = (a.dim(), b.dim());
        let labels = a
            .labels
            .iter()
            .map(|l| format!("({l},0)"))
            .chain(b.labels.iter().map(|l| format!("(0,{l})")))
            .collect();
        let mut unit = a.unit.clone();
        unit.extend(b.unit.iter().cloned());
        Self::from_fn(labels, unit, |i, j| {
            let mut v = vec![F::zero(); n + m];
            if i < n && j < n {
                v[..n].clone_from_slice(&a.table[i][j]);
            } else if i >= n && j >= n {
                v[n..].clone_from_slice(&b.table[i - n][j - n]);
            }
            v
        })
    }

    /// Algebra spanned by linearly independent square matrices, product = matrix product.
    ///
    /// The span must be closed under multiplication and contain the identity.
    pub fn from_matrix_basis(basis: &[Mat<F>]) -> Result<Self> {
        let size = basis.first().map_or(0, |m| m.rows());
        let flat: Vec<Vec<F>> = basis.iter().map(|m| m.flatten()).collect();
        let span = Subspace::span(size * size, &flat);
        if span.dim() != basis.len() {
            return Err(Error::Invalid("matrix basis is linearly dependent".into()));
        }
        let coords_in = |m: &Mat<F>| -> Result<Vec<F>> {
            let c = span
                .coords(&m.flatten())
                .ok_or_else(|| Error::Invalid("matrix span is not closed under multiplication".into()))?;
            // canonical coords -> coords in the given basis
            let canon = Mat::from_cols(
                basis.len(),
                &flat.iter().map(|v| span.coords(v).unwrap()).collect::<Vec<_>>(),
            );
            crate::linalg::solve_vec(&canon, &c)
                .ok_or_else(|| Error::Invalid("coordinate solve failed".into()))
        };
        let unit = coords_in(&Mat::identity(size))?;
        let labels = (0..basis.len()).map(|i| format!("m{i}")).collect();
        let mut table = Vec::with_capacity(basis.len());
        for a in basis {
            let mut row = Vec::with_capacity(basis.len());
            for b in basis {
                row.push(coords_in(&a.mul(b))?);
            }
            table.push(row);
        }
        Ok(Algebra { labels, table, unit })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<Vec<F>>] {
        &self.table
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn basis_element(&self, i: usize) -> Vec<F> {
        unit_vec(self.dim(), i)
    }

    pub fn zero_element(&self) -> Vec<F> {
        vec![F::zero(); self.dim()]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &[F] {
        &self.table[i][j]
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let c = a.clone() * b.clone();
                for (o, t) in out.iter_mut().zip(&self.table[i][j]) {
                    if !t.is_zero() {
                        *o += c.clone() * t.clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult(&self, x: &[F]) -> Mat<F> {
        let cols: Vec<Vec<F>> = (0..self.dim()).map(|j| self.mul(x, &self.basis_element(j))).collect();
        Mat::from_cols(self.dim(), &cols)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult(&self, x: &[F]) -> Mat<F> {
        let cols: Vec<Vec<F>> = (0..self.dim()).map(|j| self.mul(&self.basis_element(j), x)).collect();
        Mat::from_cols(self.dim(), &cols)
    }

    /// A small generating set: basis elements taken greedily in index order,
    /// skipping those already in the subalgebra generated so far.
    pub fn generators(&self) -> Vec<Vec<F>> {
        let n = self.dim();
        let mut gens: Vec<Vec<F>> = Vec::new();
        let mut span = SubalgebraPresentation::generated_by(self, &[]).embedding;
        for i in 0..n {
            let b = self.basis_element(i);
            if Subspace::col_span(&span).contains(&b) {
                continue;
            }
            gens.push(b);
            span = SubalgebraPresentation::generated_by(self, &gens).embedding;
        }
        gens
    }

    /// True when both algebras have the same structure constants and unit.
    pub fn same_structure(&self, other: &Algebra<F>) -> bool {
        self.table == other.table && self.unit == other.unit
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.table[i][j] == self.table[j][i]))
    }

    /// Associativity on all basis triples and two-sided unit.
    pub fn check(&self) -> Verdict {
        let n = self.dim();
        for i in 0..n {
            let bi = self.basis_element(i);
            if self.mul(&self.unit, &bi) != bi {
                return Err(Witness::new("unit", format!("1·{} != {}", self.labels[i], self.labels[i])));
            }
            if self.mul(&bi, &self.unit) != bi {
                return Err(Witness::new("unit", format!("{}·1 != {}", self.labels[i], self.labels[i])));
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = &self.table[i][j];
                for k in 0..n {
                    let left = self.mul(ij, &self.basis_element(k));
                    let right = self.mul(&self.basis_element(i), &self.table[j][k]);
                    if left != right {
                        return Err(Witness::new(
                            "associativity",
                            format!("({}·{})·{} != {}·({}·{})", self.labels[i], self.labels[j], self.labels[k], self.labels[i], self.labels[j], self.labels[k]),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// `c'[i][j] = c[j][i]`.
    pub fn opposite(&self) -> Self {
        let n = self.dim();
        let table = (0..n).map(|i| (0..n).map(|j| self.table[j][i].clone()).collect()).collect();
        Algebra { labels: self.labels.clone(), table, unit: self.unit.clone() }
    }

    /// Left regular representation matrices of the basis; faithful.
    pub fn regular_representation(&self) -> Vec<Mat<F>> {
        (0..self.dim()).map(|i| self.left_mult(&self.basis_element(i))).collect()
    }

    pub fn center(&self) -> Subspace<F> {
        let n = self.dim();
        // z b_j - b_j z = (R_{b_j} - L_{b_j}) z
        let mut system = Mat::zeros(0, n);
        for j in 0..n {
            let bj = self.basis_element(j);
            system = system.vstack(&self.right_mult(&bj).sub(&self.left_mult(&bj)));
        }
        Subspace::row_span(&kernel(&system))
    }

    /// Jacobson radical as a subspace of algebra coordinates.
    pub fn jacobson_radical(&self) -> Subspace<F> {
        radical_of_matrix_algebra(&self.regular_representation())
    }

    /// Algebra structure on `A / I` for a two-sided ideal `I`.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<(Self, crate::linalg::Quotient<F>)> {
        let q = crate::linalg::quotient_by(self.dim(), ideal.basis())?;
        let m = q.dim();
        let labels = (0..m).map(|i| format!("q{i}")).collect();
        let basis: Vec<Vec<F>> = (0..m).map(|i| q.lift(&unit_vec(m, i))).collect();
        let unit = q.project(&self.unit);
        let alg = Self::from_fn(labels, unit, |i, j| q.project(&self.mul(&basis[i], &basis[j])));
        Ok((alg, q))
    }

    /// True iff every nonzero element is invertible.
    ///
    /// Over finite fields all `|F|^dim` elements are checked (bounded by
    /// [`ENUMERATION_BOUND`]); over the rationals only structural
    /// obstructions and certificates are used.
    pub fn is_division_ring(&self) -> Result<Decision> {
        let n = self.dim();
        if n == 0 {
            return Ok(Decision::No);
        }
        if F::order().is_some() {
            for x in all_vectors::<F>(n, ENUMERATION_BOUND)? {
                if is_zero_vec(&x) {
                    continue;
                }
                if rank(&self.left_mult(&x)) < n {
                    return Ok(Decision::No);
                }
            }
            return Ok(Decision::Yes);
        }
        if n == 1 {
            return Ok(Decision::Yes);
        }
        if self.jacobson_radical().dim() > 0 {
            return Ok(Decision::No);
        }
        for i in 0..n {
            if rank(&self.left_mult(&self.basis_element(i))) < n {
                return Ok(Decision::No);
            }
        }
        if self.center().dim() > 1 && self.has_nontrivial_central_idempotent() {
            return Ok(Decision::No);
        }
        if n == 2 && self.is_commutative() {
            // F[x]/(x^2 + b x + c) is a field iff the discriminant is not a square
            let x = (0..n)
                .map(|i| self.basis_element(i))
                .find(|b| rank(&Mat::from_cols(n, &[b.clone(), self.unit.clone()])) == 2)
                .expect("two-dimensional algebra has a non-scalar basis element");
            let x2 = self.mul(&x, &x);
            let coeffs = crate::linalg::solve_vec(&Mat::from_cols(n, &[self.unit.clone(), x.clone()]), &x2)
                .expect("x^2 lies in span(1, x)");
            // x^2 = c0 + c1 x  ->  discriminant c1^2 + 4 c0
            let disc = coeffs[1].clone() * coeffs[1].clone() + F::from_i64(4) * coeffs[0].clone();
            return Ok(Decision::from_bool(!is_rational_square(&disc)));
        }
        Ok(Decision::Undecided(format!(
            "no zero divisor found among structural candidates in dimension {n}"
        )))
    }

    fn has_nontrivial_central_idempotent(&self) -> bool {
        let z = self.center();
        z.basis_vecs().iter().any(|v| {
            let sq = self.mul(v, v);
            sq == *v && !is_zero_vec(v) && *v != self.unit
        })
    }
}

fn is_rational_square<F: Scalar>(x: &F) -> bool {
    // Only reached for the rationals; parse through the textual form.
    match crate::scalar::Rational::parse(&x.to_string()) {
        Ok(r) => r.is_square(),
        Err(_) => false,
    }
}

/// A unital algebra homomorphism, `matrix` is `target.dim x source.dim`.
#[derive(Clone, Debug)]
pub struct AlgebraHom<F> {
    pub source: Algebra<F>,
    pub target: Algebra<F>,
    pub matrix: Mat<F>,
}

impl<F: Scalar> AlgebraHom<F> {
    pub fn new(source: Algebra<F>, target: Algebra<F>, matrix: Mat<F>) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Shape(format!(
                "hom matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(AlgebraHom { source, target, matrix })
    }

    pub fn identity(a: &Algebra<F>) -> Self {
        AlgebraHom { source: a.clone(), target: a.clone(), matrix: Mat::identity(a.dim()) }
    }

    /// The structure map `F -> A`.
    pub fn unit_map(a: &Algebra<F>) -> Self {
        AlgebraHom { source: Algebra::ground(), target: a.clone(), matrix: Mat::from_cols(a.dim(), &[a.unit().to_vec()]) }
    }

    pub fn apply(&self, x: &[F]) -> Vec<F> {
        self.matrix.mul_vec(x)
    }

    pub fn check(&self) -> Verdict {
        if self.apply(self.source.unit()) != self.target.unit() {
            return Err(Witness::new("unit", "h(1) != 1".to_string()));
        }
        let n = self.source.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = self.apply(self.source.basis_product(i, j));
                let rhs = self.target.mul(&self.apply(&self.source.basis_element(i)), &self.apply(&self.source.basis_element(j)));
                if lhs != rhs {
                    return Err(Witness::new(
                        "multiplicativity",
                        format!("h({}·{}) != h({})·h({})", self.source.labels()[i], self.source.labels()[j], self.source.labels()[i], self.source.labels()[j]),
                    ));
                }
            }
        }
        Ok(())
    }

    /// `self ∘ first`.
    pub fn compose_after(&self, first: &AlgebraHom<F>) -> AlgebraHom<F> {
        AlgebraHom { source: first.source.clone(), target: self.target.clone(), matrix: self.matrix.mul(&first.matrix) }
    }
}

/// A subalgebra of a parent algebra with its induced structure.
#[derive(Clone, Debug)]
pub struct SubalgebraPresentation<F> {
    pub parent: Algebra<F>,
    /// `parent.dim x sub.dim`; columns are the chosen basis.
    pub embedding: Mat<F>,
    pub algebra: Algebra<F>,
}

impl<F: Scalar> SubalgebraPresentation<F> {
    /// Subalgebra on the span of `subspace`; fails if not closed or without the unit.
    pub fn from_subspace(parent: &Algebra<F>, subspace: &Subspace<F>) -> Result<Self> {
        if !subspace.contains(parent.unit()) {
            return Err(Error::Invalid("subspace does not contain the unit".into()));
        }
        let basis = subspace.basis_vecs();
        let d = basis.len();
        let mut table = Vec::with_capacity(d);
        for x in &basis {
            let mut row = Vec::with_capacity(d);
            for y in &basis {
                let p = parent.mul(x, y);
                row.push(subspace.coords(&p).ok_or_else(|| Error::Invalid("subspace not closed under multiplication".into()))?);
            }
            table.push(row);
        }
        let unit = subspace.coords(parent.unit()).expect("checked above");
        let labels = (0..d).map(|i| format!("s{i}")).collect();
        Ok(SubalgebraPresentation {
            parent: parent.clone(),
            embedding: subspace.embedding(),
            algebra: Algebra { labels, table, unit },
        })
    }

    /// Smallest subalgebra containing the unit and `generators`.
    pub fn generated_by(parent: &Algebra<F>, generators: &[Vec<F>]) -> Self {
        let n = parent.dim();
        let mut span = Subspace::span(n, &[parent.unit().to_vec()]);
        span = span.sum(&Subspace::span(n, generators));
        loop {
            let basis = span.basis_vecs();
            let mut products = Vec::new();
            for x in &basis {
                for y in &basis {
                    products.push(parent.mul(x, y));
                }
            }
            let next = span.sum(&Subspace::span(n, &products));
            if next.dim() == span.dim() {
                break;
            }
            span = next;
        }
        Self::from_subspace(parent, &span).expect("closure is a subalgebra")
    }

    pub fn inclusion(&self) -> AlgebraHom<F> {
        AlgebraHom { source: self.algebra.clone(), target: self.parent.clone(), matrix: self.embedding.clone() }
    }
}

/// Closure of the span of `mats` under multiplication, including the identity.
pub fn matrix_algebra_closure<F: Scalar>(size: usize, mats: &[Mat<F>]) -> Vec<Mat<F>> {
    let mut flat: Vec<Vec<F>> = vec![Mat::<F>::identity(size).flatten()];
    flat.extend(mats.iter().map(|m| m.flatten()));
    let mut span = Subspace::span(size * size, &flat);
    loop {
        let basis: Vec<Mat<F>> = span.basis_vecs().iter().map(|v| Mat::unflatten(size, size, v)).collect();
        let gens: Vec<Mat<F>> = mats.to_vec();
        let mut products = Vec::new();
        for b in &basis {
            for g in &gens {
                products.push(b.mul(g).flatten());
            }
        }
        let next = span.sum(&Subspace::span(size * size, &products));
        if next.dim() == span.dim() {
            return basis;
        }
        span = next;
    }
}

/// Linearly independent basis of the span of `mats`.
pub fn matrix_span_basis<F: Scalar>(size: usize, mats: &[Mat<F>]) -> Vec<Mat<F>> {
    let flat: Vec<Vec<F>> = mats.iter().map(|m| m.flatten()).collect();
    Subspace::span(size * size, &flat)
        .basis_vecs()
        .iter()
        .map(|v| Mat::unflatten(size, size, v))
        .collect()
}

/// Radical of the algebra spanned by the linearly independent square
/// matrices `basis` (closed under multiplication), in coordinates w.r.t. `basis`.
///
/// Characteristic 0: kernel of the trace form. Characteristic `p`: the
/// iterated trace-function refinement `I_i = {a ∈ I_{i-1} : g_i(ab) = 0 ∀b}`
/// with `g_i(a) = Tr(ã^{p^i}) / p^i mod p` on integer lifts, run for
/// `p^i <= size`.
pub fn radical_of_matrix_algebra<F: Scalar>(basis: &[Mat<F>]) -> Subspace<F> {
    let r = basis.len();
    if r == 0 {
        return Subspace::zero(0);
    }
    let size = basis[0].rows();
    let p = F::characteristic();
    if p == 0 {
        let gram = Mat::from_fn(r, r, |i, j| basis[i].mul(&basis[j]).trace());
        return Subspace::row_span(&kernel(&gram));
    }
    // current ideal, as coordinate vectors
    let mut ideal = Subspace::full(r);
    let mut pi: u64 = 1; // p^i
    loop {
        if pi > size as u64 {
            break;
        }
        let modulus = pi * p;
        let gens = ideal.basis_vecs();
        if gens.is_empty() {
            break;
        }
        let mats: Vec<Mat<F>> = gens
            .iter()
            .map(|c| {
                let mut m = Mat::zeros(size, size);
                for (x, b) in c.iter().zip(basis) {
                    m.axpy(x, b);
                }
                m
            })
            .collect();
        // system[j][s] = g_i(u_s b_j)
        let system = Mat::from_fn(r, gens.len(), |j, s| {
            let prod = mats[s].mul(&basis[j]);
            F::from_i64(trace_function(&prod, pi, modulus) as i64)
        });
        let sol = kernel(&system);
        let vecs: Vec<Vec<F>> = sol
            .row_vecs()
            .iter()
            .map(|y| lin_comb(r, y.iter().cloned().zip(gens.iter().cloned())))
            .collect();
        ideal = Subspace::span(r, &vecs);
        match pi.checked_mul(p) {
            Some(next) => pi = next,
            None => break,
        }
    }
    ideal
}

/// `Tr(X̃^{pi}) / pi mod p` where `X̃` lifts `x` to residues in `[0, p)`.
fn trace_function<F: Scalar>(x: &Mat<F>, pi: u64, modulus: u64) -> u64 {
    let n = x.rows();
    let lifted: Vec<u64> = x.data().iter().map(crate::scalar::lift_residue).collect();
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = a[i * n + k];
                if aik == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = ((out[i * n + j] as u128 + aik as u128 * b[k * n + j] as u128) % modulus as u128) as u64;
                }
            }
        }
        out
    };
    let mut acc: Vec<u64> = (0..n * n).map(|t| if t / n == t % n { 1 % modulus } else { 0 }).collect();
    let mut base = lifted;
    let mut e = pi;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    let tr = (0..n).fold(0u64, |t, i| (t + acc[i * n + i]) % modulus);
    debug_assert_eq!(tr % pi, 0, "trace function not divisible on the current ideal");
    (tr / pi) % (modulus / pi)
}

/// True iff `M` (right module via `action[i]` = matrix of `m ↦ m·b_i`) is
/// a semisimple module; decided by the radical of the image algebra.
pub fn is_semisimple_module<F: Scalar>(alg: &Algebra<F>, action: &[Mat<F>]) -> Result<bool> {
    check_right_action(alg, action).map_err(|w| Error::Axiom(w.to_string()))?;
    let size = action.first().map_or(0, |m| m.rows());
    if size == 0 {
        return Ok(true);
    }
    let basis = matrix_span_basis(size, action);
    Ok(radical_of_matrix_algebra(&basis).dim() == 0)
}

/// Right-module axioms: `ρ(1) = id`, `ρ_j ρ_i = Σ_k c_ijk ρ_k`.
pub fn check_right_action<F: Scalar>(alg: &Algebra<F>, action: &[Mat<F>]) -> Verdict {
    check_action(alg, action, true)
}

/// Left-module axioms: `λ(1) = id`, `λ_i λ_j = Σ_k c_ijk λ_k`.
pub fn check_left_action<F: Scalar>(alg: &Algebra<F>, action: &[Mat<F>]) -> Verdict {
    check_action(alg, action, false)
}

fn check_action<F: Scalar>(alg: &Algebra<F>, action: &[Mat<F>], right: bool) -> Verdict {
    let n = alg.dim();
    if action.len() != n {
        return Err(Witness::new("shape", format!("{} action matrices for a {n}-dimensional algebra", action.len())));
    }
    let size = action.first().map_or(0, |m| m.rows());
    if action.iter().any(|m| m.rows() != size || m.cols() != size) {
        return Err(Witness::new("shape", "action matrices are not all square of equal size".into()));
    }
    let act = |x: &[F]| -> Mat<F> {
        let mut m = Mat::zeros(size, size);
        for (c, a) in x.iter().zip(action) {
            m.axpy(c, a);
        }
        m
    };
    if !act(alg.unit()).is_identity() {
        return Err(Witness::new("unit action", "the unit does not act as the identity".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = if right { action[j].mul(&action[i]) } else { action[i].mul(&action[j]) };
            if lhs != act(alg.basis_product(i, j)) {
                return Err(Witness::new(
                    "action compatibility",
                    format!("action of {}·{} differs from the composed actions", alg.labels()[i], alg.labels()[j]),
                ));
            }
        }
    }
    Ok(())
}

/// Brute-force membership in the radical over a finite field:
/// `a ∈ J(A)` iff `1 - b a` is invertible for every `b`.
pub fn radical_by_enumeration<F: Scalar>(alg: &Algebra<F>) -> Result<Subspace<F>> {
    let n = alg.dim();
    let elems = all_vectors::<F>(n, ENUMERATION_BOUND)?;
    let mut members = Vec::new();
    for a in &elems {
        let ok = elems.iter().all(|b| {
            let x = vec_sub(alg.unit(), &alg.mul(b, a));
            rank(&alg.left_mult(&x)) == n
        });
        if ok {
            members.push(a.clone());
        }
    }
    Ok(Subspace::span(n, &members))
}
