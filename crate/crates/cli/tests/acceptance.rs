//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use coring_core::algebra::{radical_by_enumeration, Algebra, AlgebraHom, Decision};
use coring_core::coend::{build_adjunction, build_adjunction_on, coend_coring, f_equals_can, matches_comatrix};
use coring_core::comodule::{canonical_map, descent_verify, generator_report, trivial_comodule, RightComodule, TestModule};
use coring_core::coring::{
    alternate_generators, comatrix_coring, comatrix_delta_with, comatrix_from_module, convolution_algebra, convolve, extension_bimodules, hat,
    hat_anti_iso, sweedler_coring, verify_grouplike, Coring, Side,
};
use coring_core::cosemisimple::{decompose, is_cosemisimple};
use coring_core::fixtures::{
    gf4, gf4_sigma, gf9, mat_simple, mutated_algebra, mutated_comodule, mutated_coring, mutated_coring_hom, nonflat, random_bimodule, sw_comodule,
    sw_map, triv_sigma, xprod, Gf2, Gf3,
};
use coring_core::linalg::{rank, Subspace};
use coring_core::mat::{kron_vec, unit_vec, vec_sub, Mat};
use coring_core::moduli::{dual_basis, dual_basis_with, dual_module, is_flat_fd, Bimodule};
use coring_core::{Fp, Scalar};
use coring_lab::commands::{Command, Options};
use coring_lab::load::read_file;
use coring_lab::run_fixture;

type Gf5 = Fp<5>;

/// Failure message from the first violated expectation.
type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

/// `dim M ⊗_B N` as `dim M·dim N` minus the rank of all `mb⊗n − m⊗bn`.
fn bilinear_dim<F: Scalar>(m: &Bimodule<F>, n: &Bimodule<F>) -> usize {
    let (dm, dn) = (m.dim(), n.dim());
    let mut rows = Vec::new();
    for b in 0..m.right.dim() {
        for i in 0..dm {
            for j in 0..dn {
                let lhs = kron_vec(&m.right_action[b].col(i), &unit_vec(dn, j));
                let rhs = kron_vec(&unit_vec(dm, i), &n.left_action[b].col(j));
                rows.push(vec_sub(&lhs, &rhs));
            }
        }
    }
    if rows.is_empty() {
        return dm * dn;
    }
    dm * dn - rank(&Mat::from_rows(dm * dn, &rows).expect("equal lengths"))
}

/// Ring automorphisms of `a` fixing the ground field, by enumerating all linear maps.
fn automorphisms<F: Scalar>(a: &Algebra<F>) -> Vec<Mat<F>> {
    let n = a.dim();
    let elems = F::elements().expect("finite field");
    let total = elems.len().pow((n * n) as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let m = Mat::from_fn(n, n, |_, _| {
            let v = elems[c % elems.len()].clone();
            c /= elems.len();
            v
        });
        if rank(&m) != n || m.mul_vec(a.unit()) != a.unit() {
            continue;
        }
        let hom = (0..n).all(|i| {
            (0..n).all(|j| {
                let (x, y) = (a.basis_element(i), a.basis_element(j));
                m.mul_vec(&a.mul(&x, &y)) == a.mul(&m.mul_vec(&x), &m.mul_vec(&y))
            })
        });
        if hom {
            out.push(m);
        }
    }
    out
}

fn comatrix_random<F: Scalar>(seeds: std::ops::Range<u64>) -> Result<usize, String> {
    let mut checked = 0;
    for seed in seeds {
        let sigma = random_bimodule::<F>(seed);
        ensure!(sigma.right.dim() <= 4 && sigma.dim() <= 6, "{} seed {seed}: sizes {} / {}", F::tag(), sigma.right.dim(), sigma.dim());
        let dual = dual_module(&sigma);
        let db = dual_basis(&sigma, &dual).map_err(|e| format!("{} seed {seed}: {e}", F::tag()))?;
        let cm = comatrix_coring(&sigma, &dual, &db).map_err(|e| format!("{} seed {seed}: {e}", F::tag()))?;
        cm.coring.check().map_err(|w| format!("{} seed {seed}: {w}", F::tag()))?;
        let std_gens: Vec<Vec<F>> = (0..sigma.dim()).map(|i| unit_vec(sigma.dim(), i)).collect();
        for gens in [std_gens, alternate_generators::<F>(sigma.dim())] {
            let other = dual_basis_with(&sigma, &dual, &gens).map_err(|e| e.to_string())?;
            let same = cm.coring.same_comultiplication(&comatrix_delta_with(&cm, &other)).map_err(|e| e.to_string())?;
            ensure!(same, "{} seed {seed}: Δ depends on the dual basis", F::tag());
        }
        checked += 1;
    }
    Ok(checked)
}

fn criterion_comatrix() -> Outcome {
    let n = comatrix_random::<Gf2>(0..50)? + comatrix_random::<Gf3>(0..50)? + comatrix_random::<Gf5>(0..50)?;
    Ok(format!("{n} random bimodules over GF(2), GF(3), GF(5)"))
}

fn hat_ok<F: Scalar>(sigma: &Bimodule<F>, label: &str) -> Result<(), String> {
    let cm = comatrix_from_module(sigma).map_err(|e| format!("{label}: {e}"))?;
    let h = hat_anti_iso(&cm).map_err(|e| format!("{label}: {e}"))?;
    ensure!(h.is_bijective(), "{label}: hat not bijective");
    if let Some((i, j)) = h.anti_multiplicative(&cm) {
        return Err(format!("{label}: not anti-multiplicative on basis pair ({i}, {j})"));
    }
    // oracle: the convolution product directly, not through the contraction basis
    let conv = &h.convolution;
    for f in &conv.maps {
        for g in &conv.maps {
            let fg = convolve(&cm.coring, Side::Left, f, g);
            ensure!(hat(&cm, &fg) == hat(&cm, f).mul(&hat(&cm, g)), "{label}: convolution and composition disagree");
        }
    }
    ensure!(h.counit_to_identity(&cm), "{label}: ε does not go to the identity");
    Ok(())
}

fn criterion_hat() -> Outcome {
    hat_ok(&gf4_sigma(), "GF4")?;
    for seed in 0..20u64 {
        match seed % 3 {
            0 => hat_ok(&random_bimodule::<Gf2>(seed), &format!("GF(2) seed {seed}"))?,
            1 => hat_ok(&random_bimodule::<Gf3>(seed), &format!("GF(3) seed {seed}"))?,
            _ => hat_ok(&random_bimodule::<Gf5>(seed), &format!("GF(5) seed {seed}"))?,
        }
    }
    Ok("GF4 and 20 random bimodules".into())
}

fn criterion_sw() -> Outcome {
    let h = sw_map();
    let s = sweedler_coring(&h).map_err(|e| e.to_string())?;
    let (a_b, b_a) = extension_bimodules(&h);
    let oracle = bilinear_dim(&a_b, &b_a);
    ensure!(s.coring.dim() == 4 && oracle == 4, "dim A⊗_B A = {}, oracle {oracle}", s.coring.dim());
    s.coring.check().map_err(|w| w.to_string())?;
    let can = canonical_map(&sw_comodule()).map_err(|e| e.to_string())?;
    ensure!(can.rings.t.algebra.dim() == 1, "dim T = {}", can.rings.t.algebra.dim());
    ensure!(can.is_bijective(), "can not bijective");
    let tests = [TestModule::Free(1), TestModule::Free(2)];
    let d = descent_verify(&gf4_sigma(), Some(&tests)).map_err(|e| e.to_string())?;
    ensure!(d.faithfully_flat, "(a) fails");
    ensure!(d.lambda_bijective, "(b) fails");
    ensure!(d.can_bijective, "(c) fails");
    ensure!(d.units.len() == 2 && d.units.iter().all(|(_, ok)| *ok), "(d) units {:?}", d.units);
    ensure!(!d.counits.is_empty() && d.counits.iter().all(|(_, ok)| *ok), "(d) counits {:?}", d.counits);
    Ok(format!("dim 4, T dim 1, descent on T, T^2 with {} counit checks", d.counits.len()))
}

fn criterion_xprod() -> Outcome {
    let x = xprod();
    let dc = x.dual_coring();
    let g = x.trace_grouplike(&dc);
    ensure!(verify_grouplike(&dc.coring, &g).map_err(|e| e.to_string())?, "trace is not grouplike");
    let m = x.comodule();
    m.check().map_err(|w| w.to_string())?;
    let can = canonical_map(&m).map_err(|e| e.to_string())?;
    // oracle: elements a of GF(9) with a³ = a form the prime field
    let field = gf9();
    let fixed = Gf3::elements()
        .unwrap()
        .iter()
        .flat_map(|u| Gf3::elements().unwrap().into_iter().map(move |v| vec![*u, v]))
        .filter(|a| field.mul(&field.mul(a, a), a) == *a)
        .count();
    ensure!(fixed == 3, "fixed field has {fixed} elements");
    ensure!(can.rings.t.algebra.dim() == 1, "coinvariants have dim {}", can.rings.t.algebra.dim());
    let rk = rank(&can.hom.matrix);
    ensure!(can.is_bijective() && rk == 4, "can rank {rk}");
    // R -> *(R*) -> *(A*⊗_T A) -> End(_T A)
    let star = convolution_algebra(&dc.coring, Side::Left).map_err(|e| e.to_string())?;
    let mut images = Vec::new();
    for r in 0..x.ring.dim() {
        let ev = Mat::from_cols(2, &dc.dual.maps.iter().map(|mm| mm.col(r)).collect::<Vec<_>>());
        ensure!(star.coords_of(&ev).is_some(), "evaluation at basis element {r} is not in the left dual");
        images.push(hat(&can.comatrix, &ev.mul(&can.hom.matrix)).flatten());
    }
    let composite = Subspace::span(4, &images);
    ensure!(composite.dim() == 4, "composite has rank {}", composite.dim());
    // oracle: End(_T A) is spanned by a·σ over the enumerated automorphisms σ
    let auts = automorphisms(&field);
    ensure!(auts.len() == 2 && auts.contains(&x.frobenius), "found {} automorphisms", auts.len());
    let twisted: Vec<Vec<Gf3>> =
        auts.iter().flat_map(|s| (0..2).map(|i| field.left_mult(&field.basis_element(i)).mul(s).flatten()).collect::<Vec<_>>()).collect();
    let oracle = Subspace::span(4, &twisted);
    ensure!(oracle.dim() == 4 && oracle.contains_subspace(&composite), "composite image differs from the automorphism span");
    Ok("trace grouplike, T = GF(3), can rank 4, R ≅ End(_T A), 2 automorphisms".into())
}

fn criterion_nonflat() -> Outcome {
    let n = nonflat();
    n.coring.check().map_err(|w| w.to_string())?;
    let r = generator_report(&RightComodule::regular(&n.coring)).map_err(|e| e.to_string())?;
    ensure!(r.t_dim == r.s_dim && r.t_dim == 2, "dim T = {}, dim S = {}", r.t_dim, r.s_dim);
    ensure!(r.can_bijective, "can not bijective");
    ensure!(!is_flat_fd(&n.ideal), "_A I reported flat");
    ensure!(!r.c_flat, "_A C reported flat");
    Ok("T = S of dim 2, can bijective, _A I not flat".into())
}

fn block_fingerprint(c: &Coring<Gf3>, seed: u64) -> Result<Vec<(Mat<Gf3>, usize, usize)>, String> {
    let rep = decompose(c, seed).map_err(|e| e.to_string())?;
    ensure!(rep.verified(c.dim()), "seed {seed}: decomposition not verified");
    Ok(rep.blocks.iter().map(|b| (b.embedding.clone(), b.sigma.dim(), b.comatrix_dim)).collect())
}

fn criterion_cosemisimple() -> Outcome {
    let sigma = mat_simple();
    let c = Coring::trivial(&sigma.right);
    ensure!(is_cosemisimple(&c).map_err(|e| e.to_string())?, "M2(GF(3)) trivial coring not cosemisimple");
    let rep = decompose(&c, 0).map_err(|e| e.to_string())?;
    ensure!(rep.blocks.len() == 1, "{} blocks", rep.blocks.len());
    let b = &rep.blocks[0];
    ensure!(b.sigma.dim() == 2, "dim Σ = {}", b.sigma.dim());
    ensure!(b.division.dim() == 1 && b.division_certificate == Decision::Yes, "D has dim {}", b.division.dim());
    ensure!(b.comatrix_dim == 4 && b.can_bijective, "dim Σ*⊗_DΣ = {}, can bijective {}", b.comatrix_dim, b.can_bijective);
    let can = canonical_map(&trivial_comodule(&sigma)).map_err(|e| e.to_string())?;
    ensure!(can.is_bijective(), "can for the row vectors not bijective");
    let first = block_fingerprint(&c, 0)?;
    for seed in 1..10 {
        ensure!(block_fingerprint(&c, seed)? == first, "seed {seed} gives different blocks");
    }
    let dual_numbers = Algebra::<Gf2>::truncated_polynomial(&[Gf2::new(0), Gf2::new(0)]);
    ensure!(!is_cosemisimple(&Coring::trivial(&dual_numbers)).map_err(|e| e.to_string())?, "GF(2)[ε]/(ε²) reported cosemisimple");
    // oracle: the radical found by enumerating nilpotent elements is nonzero
    let rad = radical_by_enumeration(&dual_numbers).map_err(|e| e.to_string())?;
    ensure!(rad.dim() == 1, "enumerated radical has dim {}", rad.dim());
    Ok("1 block, Σ dim 2, D = GF(3), Σ*⊗_DΣ dim 4, seeds 0-9 agree; dual numbers rejected".into())
}

fn coend_ok<F: Scalar>(sigma: &Bimodule<F>, tests: Option<&[TestModule]>, label: &str) -> Result<(), String> {
    let dual = dual_module(sigma);
    let db = dual_basis(sigma, &dual).map_err(|e| format!("{label}: {e}"))?;
    let cm = comatrix_coring(sigma, &dual, &db).map_err(|e| format!("{label}: {e}"))?;
    let co = coend_coring(sigma, &db).map_err(|e| format!("{label}: {e}"))?;
    ensure!(matches_comatrix(&co, &cm), "{label}: coend Δ or ε differs");
    ensure!(co.coring.delta == cm.coring.delta && co.coring.counit == cm.coring.counit, "{label}: matrices differ");
    let adj = match tests {
        Some(t) => build_adjunction_on(sigma, &db, t),
        None => build_adjunction(sigma, &db),
    }
    .map_err(|e| format!("{label}: {e}"))?;
    ensure!(adj.passes(), "{label}: triangles {:?}, η {:?}", adj.triangles, adj.eta_round_trips);
    Ok(())
}

fn criterion_coend() -> Outcome {
    coend_ok(&triv_sigma::<Gf2>(), None, "TRIV")?;
    coend_ok(&gf4_sigma(), None, "GF4")?;
    coend_ok(&gf4_sigma(), Some(&[TestModule::Free(1), TestModule::Free(2)]), "SW")?;
    ensure!(f_equals_can(&sw_comodule()).map_err(|e| e.to_string())?, "SW: f != can");
    ensure!(f_equals_can(&xprod().comodule()).map_err(|e| e.to_string())?, "XPROD: f != can");
    Ok("TRIV, GF4, SW identical with triangles; f = can on SW, XPROD".into())
}

fn criterion_mutations() -> Outcome {
    let witnesses = [
        ("algebra", mutated_algebra().check()),
        ("coring", mutated_coring().check()),
        ("comodule", mutated_comodule().check()),
        ("coring hom", mutated_coring_hom().check()),
    ];
    for (what, v) in witnesses {
        match v {
            Ok(()) => return Err(format!("mutated {what} accepted")),
            Err(w) => ensure!(!w.to_string().is_empty(), "mutated {what} rejected without a witness"),
        }
    }
    // the unmutated counterparts pass
    gf4().check().map_err(|w| w.to_string())?;
    sweedler_coring(&sw_map()).map_err(|e| e.to_string())?.coring.check().map_err(|w| w.to_string())?;
    sw_comodule().check().map_err(|w| w.to_string())?;
    AlgebraHom::identity(&gf4()).check().map_err(|w| w.to_string())?;
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for (file, cmd) in [
        ("mut-algebra.json", Command::CheckAlgebra),
        ("mut-coring.json", Command::CheckCoring),
        ("mut-comodule.json", Command::CheckCoring),
        ("mut-coring-hom.json", Command::CheckCoring),
    ] {
        let fx = read_file(&dir.join(file)).map_err(|e| format!("{file}: {e}"))?;
        let r = run_fixture(cmd, &fx, &Options::default()).map_err(|e| format!("{file}: {e}"))?;
        ensure!(r.exit_code() == 1, "{file}: exit {}", r.exit_code());
        ensure!(r.checks.iter().any(|c| c.detail.starts_with("witness: ")), "{file}: no witness");
    }
    Ok("4 mutated objects and 4 mutation fixtures rejected with witnesses".into())
}

type Criterion = (&'static str, u64, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 comatrix axioms", 10, criterion_comatrix),
        ("2 hat anti-isomorphism", 5, criterion_hat),
        ("3 SW", 2, criterion_sw),
        ("4 XPROD", 2, criterion_xprod),
        ("5 NONFLAT", 2, criterion_nonflat),
        ("6 cosemisimple", 5, criterion_cosemisimple),
        ("7 coend", 3, criterion_coend),
        ("8 mutations", 2, criterion_mutations),
    ];
    let mut failed = 0;
    for (name, limit, f) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let (tag, detail) = match result {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over the time limit")),
            Err(e) => ("FAIL", e),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("{tag} {name:<24} {:>7.3}s / {}s  {detail}", elapsed.as_secs_f64(), limit.as_secs());
    }
    println!("{} of 8 criteria pass", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
