//! One function per command, each filling a [`Report`].

use clap::ValueEnum;
use coring_core::coend::{build_adjunction_on, coend_matches, f_and_can};
use coring_core::comodule::{canonical_map, default_test_modules, descent_verify, generator_report, TestModule};
use coring_core::coring::{
    alternate_generators, comatrix_coring, comatrix_delta_with, dual_coring, grouplike_search, hat_anti_iso, sweedler_coring, verify_grouplike,
};
use coring_core::cosemisimple::{cosemisimple_obstruction, decompose};
use coring_core::linalg::rank;
use coring_core::moduli::{dual_basis, dual_basis_with, dual_module};
use coring_core::Scalar;

use crate::load::{Fixture, InputError};
use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    CheckAlgebra,
    CheckCoring,
    Comatrix,
    Sweedler,
    DualCoring,
    Grouplike,
    Can,
    Descent,
    GeneratorReport,
    Cosemisimple,
    CoendCrosscheck,
}

impl Command {
    pub fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub seed: u64,
    pub galois: bool,
    pub test_modules: Option<Vec<TestModule>>,
}

fn target<'a, T>(map: &'a std::collections::BTreeMap<String, T>, name: &Option<String>, role: &str) -> Result<(&'a str, &'a T), InputError> {
    let name = name.as_ref().ok_or_else(|| InputError(format!("fixture has no {role} target")))?;
    map.get_key_value(name).map(|(k, v)| (k.as_str(), v)).ok_or_else(|| InputError(format!("unknown {role} target {name:?}")))
}

pub fn run<F: Scalar>(cmd: Command, fx: &Fixture<F>, opts: &Options, r: &mut Report) -> Result<(), InputError> {
    match cmd {
        Command::CheckAlgebra => check_algebra(fx, r),
        Command::CheckCoring => check_coring(fx, r),
        Command::Comatrix => comatrix(fx, r)?,
        Command::Sweedler => sweedler(fx, r)?,
        Command::DualCoring => dual(fx, r)?,
        Command::Grouplike => grouplike(fx, r)?,
        Command::Can => can(fx, opts, r)?,
        Command::Descent => descent(fx, opts, r)?,
        Command::GeneratorReport => generator(fx, r)?,
        Command::Cosemisimple => cosemisimple(fx, opts, r)?,
        Command::CoendCrosscheck => coend(fx, opts, r)?,
    }
    Ok(())
}

fn check_algebra<F: Scalar>(fx: &Fixture<F>, r: &mut Report) {
    for (name, a) in &fx.algebras {
        r.fact(&format!("dim {name}"), a.dim());
        r.verdict(&format!("algebra {name}"), a.check());
    }
    for (name, h) in &fx.homs {
        r.verdict(&format!("hom {name}"), h.check());
    }
    for (name, b) in &fx.bimodules {
        r.verdict(&format!("bimodule {name}"), b.check());
    }
}

fn check_coring<F: Scalar>(fx: &Fixture<F>, r: &mut Report) {
    for (name, c) in &fx.corings {
        r.fact(&format!("dim {name}"), c.dim());
        r.verdict(&format!("coring {name}"), c.check());
    }
    for (name, m) in &fx.comodules {
        r.verdict(&format!("comodule {name}"), m.check());
    }
    for (name, h) in &fx.coring_homs {
        r.verdict(&format!("coring hom {name}"), h.check());
    }
}

fn comatrix<F: Scalar>(fx: &Fixture<F>, r: &mut Report) -> Result<(), InputError> {
    let (name, sigma) = target(&fx.bimodules, &fx.targets.sigma, "sigma")?;
    r.fact("sigma", name);
    r.fact("dim sigma", sigma.dim());
    let dual = dual_module(sigma);
    r.fact("dim dual", dual.dim());
    let db = match dual_basis(sigma, &dual) {
        Ok(db) => db,
        Err(e) => {
            r.error("dual basis", &e);
            return Ok(());
        }
    };
    r.verdict("dual basis", db.check(sigma, &dual));
    let cm = match comatrix_coring(sigma, &dual, &db) {
        Ok(cm) => cm,
        Err(e) => {
            r.error("comatrix coring", &e);
            return Ok(());
        }
    };
    r.fact("dim coring", cm.coring.dim());
    r.verdict("coring axioms", cm.coring.check());
    let gens = alternate_generators::<F>(sigma.dim());
    match dual_basis_with(sigma, &dual, &gens).and_then(|db2| cm.coring.same_comultiplication(&comatrix_delta_with(&cm, &db2))) {
        Ok(same) => r.flag("comultiplication independent of the dual basis", same, "two dual bases give different Δ"),
        Err(e) => r.error("comultiplication independent of the dual basis", &e),
    }
    match hat_anti_iso(&cm) {
        Ok(h) => {
            r.fact("dim left dual", h.convolution.maps.len());
            r.fact("dim End(_B sigma)", h.endomorphisms.len());
            r.flag("hat bijective", h.is_bijective(), format!("rank {} of {}", rank(&h.matrix()), h.endomorphisms.len()));
            match h.anti_multiplicative(&cm) {
                None => r.pass("hat anti-multiplicative", ""),
                Some((i, j)) => r.fail("hat anti-multiplicative", format!("witness: basis pair ({i}, {j})")),
            }
            r.flag("hat sends the counit to the identity", h.counit_to_identity(&cm), "");
        }
        Err(e) => r.error("hat", &e),
    }
    Ok(())
}

fn sweedler<F: Scalar>(fx: &Fixture<F>, r: &mut Report) -> Result<(), InputError> {
    let (name, h) = target(&fx.homs, &fx.targets.extension, "extension")?;
    r.fact("extension", name);
    match sweedler_coring(h) {
        Ok(s) => {
            r.fact("dim A⊗_B A", s.coring.dim());
            r.verdict("coring axioms", s.coring.check());
        }
        Err(e) => r.error("sweedler coring", &e),
    }
    Ok(())
}

fn dual<F: Scalar>(fx: &Fixture<F>, r: &mut Report) -> Result<(), InputError> {
    let (name, h) = target(&fx.homs, &fx.targets.extension, "extension")?;
    r.fact("extension", name);
    match dual_coring(h) {
        Ok(d) => {
            r.fact("dim dual coring", d.coring.dim());
            r.verdict("coring axioms", d.coring.check());
            if let Some((cname, c)) = fx.targets.coring.as_ref().and_then(|n| fx.corings.get_key_value(n)) {
                r.flag(&format!("coring {cname} equals the dual coring"), *c == d.coring, "structures differ");
            }
        }
        Err(e) => r.error("dual coring", &e),
    }
    Ok(())
}

fn grouplike<F: Scalar>(fx: &Fixture<F>, r: &mut Report) -> Result<(), InputError> {
    let (name, c) = target(&fx.corings, &fx.targets.coring, "coring")?;
    r.fact("coring", name);
    for (i, (_, g)) in fx.grouplikes.iter().enumerate().filter(|(_, (n, _))| n == name) {
        let label = format!("candidate {i} grouplike");
        match verify_grouplike(c, g) {
            Ok(ok) => r.flag(&label, ok, "Δg != g⊗g or εg != 1"),
            Err(e) => r.error(&label, &e),
        }
    }
    match grouplike_search(c) {
        Ok(all) => r.fact("grouplikes found by enumeration", all.len()),
        Err(e) => r.fact("grouplikes found by enumeration", format!("not enumerated ({e})")),
    }
    Ok(())
}

fn can<F: Scalar>(fx: &Fixture<F>, opts: &Options, r: &mut Report) -> Result<(), InputError> {
    let (name, m) = target(&fx.comodules, &fx.targets.comodule, "comodule")?;
    r.fact("comodule", name);
    r.verdict("comodule axioms", m.check());
    match canonical_map(m) {
        Ok(can) => {
            let rk = rank(&can.hom.matrix);
            let (src, dst) = (can.hom.source.dim(), can.hom.target.dim());
            r.fact("dim T", can.rings.t.algebra.dim());
            r.fact("dim Σ*⊗_TΣ", src);
            r.fact("dim C", dst);
            r.fact("rank", format!("{rk}/{dst}"));
            r.pass("can is a coring map", "");
            if opts.galois {
                let bij = can.is_bijective();
                r.flag(&format!("Galois: {bij}, rank {rk}/{dst}"), bij, format!("source dim {src}"));
            }
        }
        Err(e) => r.error("can", &e),
    }
    Ok(())
}

fn descent<F: Scalar>(fx: &Fixture<F>, opts: &Options, r: &mut Report) -> Result<(), InputError> {
    let (name, sigma) = target(&fx.bimodules, &fx.targets.sigma, "sigma")?;
    r.fact("sigma", name);
    let tests = opts.test_modules.as_ref().or(fx.test_modules.as_ref());
    match descent_verify(sigma, tests.map(|t| t.as_slice())) {
        Ok(d) => {
            r.flag("(a) _B Σ faithfully flat", d.faithfully_flat, "");
            r.flag("(b) B -> End^C(Σ) bijective", d.lambda_bijective, "");
            r.flag("(c) can bijective", d.can_bijective, "");
            for (label, ok) in &d.units {
                r.flag(&format!("(d) unit on {label}"), *ok, "not bijective");
            }
            for (label, ok) in &d.counits {
                r.flag(&format!("(d) counit on {label}"), *ok, "not bijective");
            }
        }
        Err(e) => r.error("descent", &e),
    }
    Ok(())
}

fn generator<F: Scalar>(fx: &Fixture<F>, r: &mut Report) -> Result<(), InputError> {
    let (name, m) = target(&fx.comodules, &fx.targets.comodule, "comodule")?;
    r.fact("comodule", name);
    r.verdict("comodule axioms", m.check());
    match generator_report(m) {
        Ok(g) => {
            r.fact("_A C flat", g.c_flat);
            r.fact("Σ_A fgp", g.sigma_fgp);
            r.fact("can bijective", g.can_bijective);
            r.fact("_T Σ faithfully flat", g.t_sigma_ff);
            r.fact("_T S faithfully flat", g.t_s_ff);
            r.fact("dim T", g.t_dim);
            r.fact("dim S", g.s_dim);
            r.fact("condition (iii)", g.condition_iii());
            r.fact("condition (iv)", g.condition_iv());
            r.fact("flatness counterexample", g.flatness_counterexample());
            if g.c_flat {
                r.flag("(iii) and (iv) agree", g.consistent(), "the conditions disagree although _A C is flat");
            }
        }
        Err(e) => r.error("generator report", &e),
    }
    Ok(())
}

fn cosemisimple<F: Scalar>(fx: &Fixture<F>, opts: &Options, r: &mut Report) -> Result<(), InputError> {
    let (name, c) = target(&fx.corings, &fx.targets.coring, "coring")?;
    r.fact("coring", name);
    r.fact("dim C", c.dim());
    match cosemisimple_obstruction(c) {
        Ok(Some(why)) => {
            r.fail("cosemisimple", format!("witness: {why}"));
            return Ok(());
        }
        Ok(None) => r.pass("cosemisimple", ""),
        Err(e) => {
            r.error("cosemisimple", &e);
            return Ok(());
        }
    }
    let report = match decompose(c, opts.seed) {
        Ok(rep) => rep,
        Err(e) => {
            r.error("decomposition", &e);
            return Ok(());
        }
    };
    r.fact("blocks", report.blocks.len());
    let total: usize = report.blocks.iter().map(|b| b.embedding.cols()).sum();
    r.flag("blocks sum to C", total == c.dim(), format!("{total} != {}", c.dim()));
    for (i, b) in report.blocks.iter().enumerate() {
        let basis: Vec<String> = report.block_spaces()[i]
            .basis_vecs()
            .iter()
            .map(|v| format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
            .collect();
        r.fact(&format!("block {i} basis"), basis.join(" "));
        r.fact(&format!("block {i} dim"), b.coring.dim());
        r.fact(&format!("block {i} dim Σ"), b.sigma.dim());
        r.fact(&format!("block {i} dim D"), b.division.dim());
        r.fact(&format!("block {i} dim Σ*⊗_DΣ"), b.comatrix_dim);
        r.verdict(&format!("block {i} subcoring axioms"), b.coring.check());
        match &b.division_certificate {
            coring_core::algebra::Decision::Yes => r.pass(&format!("block {i} D is a division ring"), ""),
            coring_core::algebra::Decision::No => r.fail(&format!("block {i} D is a division ring"), "Σ is not simple"),
            coring_core::algebra::Decision::Undecided(why) => {
                r.error(&format!("block {i} D is a division ring"), &coring_core::Error::Undecided(why.clone()))
            }
        }
        r.flag(&format!("block {i} can bijective"), b.can_bijective && b.comatrix_dim == b.coring.dim(), "");
    }
    Ok(())
}

fn coend<F: Scalar>(fx: &Fixture<F>, opts: &Options, r: &mut Report) -> Result<(), InputError> {
    if fx.targets.sigma.is_none() && fx.targets.comodule.is_none() {
        return Err(InputError("fixture has neither a sigma nor a comodule target".into()));
    }
    if fx.targets.sigma.is_some() {
        adjunction(fx, opts, r)?;
    }
    if let Some((mname, m)) = fx.targets.comodule.as_ref().and_then(|n| fx.comodules.get_key_value(n)) {
        r.fact("comodule", mname);
        match f_and_can(m) {
            Ok(fc) => {
                r.verdict("Σ* left comodule via λ", fc.dual_comodule_check.clone());
                r.flag("λ right T-linear", fc.bicomodule, "");
                r.flag("f = can", fc.equal(), "matrices differ");
            }
            Err(e) => r.error("f = can", &e),
        }
    }
    Ok(())
}

fn adjunction<F: Scalar>(fx: &Fixture<F>, opts: &Options, r: &mut Report) -> Result<(), InputError> {
    let (name, sigma) = target(&fx.bimodules, &fx.targets.sigma, "sigma")?;
    r.fact("sigma", name);
    let dual = dual_module(sigma);
    let db = match dual_basis(sigma, &dual) {
        Ok(db) => db,
        Err(e) => {
            r.error("dual basis", &e);
            return Ok(());
        }
    };
    let tests = opts.test_modules.clone().or_else(|| fx.test_modules.clone()).unwrap_or_else(|| default_test_modules(&sigma.left));
    match build_adjunction_on(sigma, &db, &tests) {
        Ok(adj) => {
            for (label, ok) in &adj.triangles {
                r.flag(&format!("triangle identity on {label}"), *ok, "composite is not the identity");
            }
            for (label, ok) in &adj.eta_round_trips {
                r.flag(&format!("η round trip {label}"), *ok, "");
            }
        }
        Err(e) => r.error("adjunction", &e),
    }
    match coend_matches(sigma, &db) {
        Ok(same) => r.flag("coend Δ, ε identical to the comatrix ones", same, "matrices differ"),
        Err(e) => r.error("coend coring", &e),
    }
    Ok(())
}
