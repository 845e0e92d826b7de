//! The shipped fixtures, generated from the library builders.

use coring_core::algebra::Algebra;
use coring_core::comodule::{canonical_comatrix_comodule, trivial_comodule};
use coring_core::coring::{comatrix_from_module, extension_bimodules, sweedler_coring};
use coring_core::fixtures::{
    gf4, gf4_sigma, mat_simple, mutated_algebra, mutated_comodule, mutated_coring, mutated_coring_hom, nonflat, sw_map, triv_sigma, xprod, Gf2,
};

use crate::export::Exporter;
use crate::schema::{ComoduleDef, CoringDef, FixtureFile, Targets};

fn targets(sigma: Option<&str>, extension: Option<&str>, coring: Option<&str>, comodule: Option<&str>) -> Targets {
    let own = |s: Option<&str>| s.map(str::to_string);
    Targets { sigma: own(sigma), extension: own(extension), coring: own(coring), comodule: own(comodule) }
}

pub fn triv() -> FixtureFile {
    let mut ex = Exporter::<Gf2>::new("TRIV", "k over k; the comatrix coring is k itself");
    ex.algebra("k", &Algebra::ground());
    ex.bimodule("Sigma", &triv_sigma::<Gf2>());
    ex.coring("C", CoringDef::Comatrix { bimodule: "Sigma".into() });
    ex.comodule("C", ComoduleDef::Regular { coring: "C".into() });
    ex.grouplike("C", &[Gf2::new(1)]);
    ex.targets(targets(Some("Sigma"), None, Some("C"), Some("C")));
    ex.finish()
}

pub fn gf4_fixture() -> FixtureFile {
    let mut ex = Exporter::<Gf2>::new("GF4", "GF(4) as a GF(2)-GF(4) bimodule and its comatrix coring");
    ex.algebra("k", &Algebra::ground());
    ex.algebra("F4", &gf4());
    let sigma = gf4_sigma();
    ex.bimodule("Sigma", &sigma);
    ex.coring("C", CoringDef::Comatrix { bimodule: "Sigma".into() });
    let cm = comatrix_from_module(&sigma).expect("GF(4) is free over itself");
    let canonical = canonical_comatrix_comodule(&cm);
    ex.explicit_comodule("Sigma", "C", "Sigma", &canonical.module, &canonical.coaction);
    ex.targets(targets(Some("Sigma"), None, Some("C"), Some("Sigma")));
    ex.finish()
}

pub fn sw() -> FixtureFile {
    let mut ex = Exporter::<Gf2>::new("SW", "Sweedler coring of GF(2) -> GF(4), A a comodule through 1⊗1");
    ex.algebra("k", &Algebra::ground());
    ex.algebra("A", &gf4());
    let h = sw_map();
    ex.hom("h", &h);
    ex.bimodule("kA_A", &extension_bimodules(&h).1);
    ex.coring("C", CoringDef::Sweedler { hom: "h".into() });
    let s = sweedler_coring(&h).expect("field extension");
    let a = gf4();
    let g = s.tensor.pure(a.unit(), a.unit());
    ex.comodule("A", ComoduleDef::Grouplike { coring: "C".into(), element: crate::export::vector_def(&g) });
    ex.grouplike("C", &g);
    ex.test_modules(&["T", "T2"]);
    ex.targets(targets(Some("kA_A"), Some("h"), Some("C"), Some("A")));
    ex.finish()
}

pub fn mat() -> FixtureFile {
    let sigma = mat_simple();
    let mut ex = Exporter::new("MAT", "row vectors over M2(GF(3)) and the trivial coring");
    ex.algebra("k", &Algebra::ground());
    ex.algebra("M2", &sigma.right);
    ex.bimodule("Sigma", &sigma);
    ex.coring("C", CoringDef::Trivial { algebra: "M2".into() });
    let m = trivial_comodule(&sigma);
    ex.explicit_comodule("Sigma", "C", "Sigma", &m.module, &m.coaction);
    ex.targets(targets(Some("Sigma"), None, Some("C"), Some("Sigma")));
    ex.finish()
}

pub fn xprod_fixture() -> FixtureFile {
    let x = xprod();
    let mut ex = Exporter::new("XPROD", "crossed product of GF(9) by Frobenius, dual coring with the trace grouplike");
    ex.algebra("F9", &x.field);
    ex.algebra("R", &x.ring);
    ex.hom("i", &x.inclusion);
    ex.coring("R*", CoringDef::Dual { hom: "i".into() });
    let dc = x.dual_coring();
    let g = x.trace_grouplike(&dc);
    ex.comodule("A", ComoduleDef::Grouplike { coring: "R*".into(), element: crate::export::vector_def(&g) });
    ex.grouplike("R*", &g);
    ex.targets(targets(None, Some("i"), Some("R*"), Some("A")));
    ex.finish()
}

pub fn nonflat_fixture() -> FixtureFile {
    let n = nonflat();
    let mut ex = Exporter::new("NONFLAT", "I = eA with Δ(y) = e⊗y; can is bijective but I is not flat");
    ex.algebra("A", &n.algebra);
    ex.explicit_coring("C", "I", &n.coring);
    ex.comodule("C", ComoduleDef::Regular { coring: "C".into() });
    ex.targets(targets(None, None, Some("C"), Some("C")));
    ex.finish()
}

pub fn dualnum() -> FixtureFile {
    let mut ex = Exporter::<Gf2>::new("DUALNUM", "trivial coring over GF(2)[ε]/(ε²); not cosemisimple");
    ex.algebra("D", &Algebra::truncated_polynomial(&[Gf2::new(0), Gf2::new(0)]));
    ex.coring("C", CoringDef::Trivial { algebra: "D".into() });
    ex.targets(targets(None, None, Some("C"), None));
    ex.finish()
}

pub fn mut_algebra() -> FixtureFile {
    let mut ex = Exporter::<Gf2>::new("MUT-ALGEBRA", "GF(4) with one corrupted product");
    ex.algebra("A", &mutated_algebra());
    ex.finish()
}

pub fn mut_coring() -> FixtureFile {
    let mut ex = Exporter::<Gf2>::new("MUT-CORING", "Sweedler coring of GF(2) -> GF(4) with a corrupted Δ");
    ex.algebra("A", &gf4());
    ex.explicit_coring("C", "AxA", &mutated_coring());
    ex.targets(targets(None, None, Some("C"), None));
    ex.finish()
}

pub fn mut_comodule() -> FixtureFile {
    let m = mutated_comodule();
    let mut ex = Exporter::<Gf2>::new("MUT-COMODULE", "A over the Sweedler coring with a corrupted coaction");
    ex.algebra("k", &Algebra::ground());
    ex.algebra("A", &gf4());
    ex.hom("h", &sw_map());
    ex.coring("C", CoringDef::Sweedler { hom: "h".into() });
    ex.explicit_comodule("A", "C", "A_A", &m.module, &m.coaction);
    ex.targets(targets(None, Some("h"), Some("C"), Some("A")));
    ex.finish()
}

pub fn mut_coring_hom() -> FixtureFile {
    let h = mutated_coring_hom();
    let mut ex = Exporter::<Gf2>::new("MUT-CORING-HOM", "identity of the Sweedler coring with two entries swapped");
    ex.algebra("k", &Algebra::ground());
    ex.algebra("A", &gf4());
    ex.hom("h", &sw_map());
    ex.coring("C", CoringDef::Sweedler { hom: "h".into() });
    ex.coring_hom("f", "C", "C", &h);
    ex.targets(targets(None, Some("h"), Some("C"), None));
    ex.finish()
}

/// File name and contents of every shipped fixture.
pub fn all() -> Vec<(&'static str, FixtureFile)> {
    vec![
        ("triv.json", triv()),
        ("gf4.json", gf4_fixture()),
        ("sw.json", sw()),
        ("mat.json", mat()),
        ("xprod.json", xprod_fixture()),
        ("nonflat.json", nonflat_fixture()),
        ("dualnum.json", dualnum()),
        ("mut-algebra.json", mut_algebra()),
        ("mut-coring.json", mut_coring()),
        ("mut-comodule.json", mut_comodule()),
        ("mut-coring-hom.json", mut_coring_hom()),
    ]
}

pub fn to_json(file: &FixtureFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("fixtures serialize");
    s.push('\n');
    s
}
