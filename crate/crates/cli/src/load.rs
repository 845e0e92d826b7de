//! Resolving a [`FixtureFile`] into library objects.

use std::collections::BTreeMap;
use std::fmt;

use coring_core::algebra::{Algebra, AlgebraHom};
use coring_core::comodule::{grouplike_comodule, RightComodule, TestModule};
use coring_core::coring::{comatrix_from_module, dual_coring, sweedler_coring, Coring, CoringHom};
use coring_core::mat::Mat;
use coring_core::moduli::Bimodule;
use coring_core::Scalar;

use crate::schema::{ComoduleDef, CoringDef, FixtureFile, MatrixDef, Targets, VectorDef, VERSION};

/// Anything wrong with the input itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn err<T>(msg: impl Into<String>) -> Result<T, InputError> {
    Err(InputError(msg.into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn parse(s: &str) -> Result<Self, InputError> {
        if s == "Q" {
            return Ok(Field::Rational);
        }
        match s.strip_prefix("GF:").map(str::parse::<u64>) {
            Some(Ok(p)) => Ok(Field::Prime(p)),
            _ => err(format!("field must be \"Q\" or \"GF:p\", got {s:?}")),
        }
    }
}

pub fn parse_file(text: &str) -> Result<FixtureFile, InputError> {
    let file: FixtureFile =
        serde_json::from_str(text).map_err(|e| InputError(format!("line {}, column {}: {}", e.line(), e.column(), strip_position(&e.to_string()))))?;
    if file.version != VERSION {
        return err(format!("unsupported fixture version {} (expected {VERSION})", file.version));
    }
    Ok(file)
}

fn strip_position(msg: &str) -> &str {
    msg.rfind(" at line ").map_or(msg, |i| &msg[..i])
}

pub fn read_file(path: &std::path::Path) -> Result<FixtureFile, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_file(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// Resolved objects, keyed by their fixture names.
#[derive(Clone, Debug)]
pub struct Fixture<F> {
    pub name: String,
    pub algebras: BTreeMap<String, Algebra<F>>,
    pub homs: BTreeMap<String, AlgebraHom<F>>,
    pub bimodules: BTreeMap<String, Bimodule<F>>,
    pub corings: BTreeMap<String, Coring<F>>,
    pub comodules: BTreeMap<String, RightComodule<F>>,
    pub coring_homs: BTreeMap<String, CoringHom<F>>,
    pub grouplikes: Vec<(String, Vec<F>)>,
    pub test_modules: Option<Vec<TestModule>>,
    pub targets: Targets,
}

fn scalar<F: Scalar>(s: &str, ctx: &str) -> Result<F, InputError> {
    F::parse(s).map_err(|e| InputError(format!("{ctx}: {e}")))
}

fn vector<F: Scalar>(v: &VectorDef, len: usize, ctx: &str) -> Result<Vec<F>, InputError> {
    if v.len() != len {
        return err(format!("{ctx}: expected {len} entries, found {}", v.len()));
    }
    v.iter().map(|s| scalar(s, ctx)).collect()
}

fn matrix<F: Scalar>(m: &MatrixDef, rows: usize, cols: usize, ctx: &str) -> Result<Mat<F>, InputError> {
    if m.len() != rows {
        return err(format!("{ctx}: expected {rows}x{cols} matrix, found {} rows", m.len()));
    }
    let rows: Vec<Vec<F>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| vector(r, cols, &format!("{ctx}, row {i}")))
        .collect::<Result<_, _>>()?;
    Mat::from_rows(cols, &rows).map_err(|e| InputError(format!("{ctx}: {e}")))
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, name: &str, kind: &str, ctx: &str) -> Result<&'a T, InputError> {
    map.get(name).ok_or_else(|| InputError(format!("{ctx}: unknown {kind} {name:?}")))
}

pub fn resolve<F: Scalar>(file: &FixtureFile) -> Result<Fixture<F>, InputError> {
    if Field::parse(&file.field)? != field_of::<F>() {
        return err(format!("fixture field {} does not match {}", file.field, F::tag()));
    }
    let mut algebras = BTreeMap::new();
    for (name, def) in &file.algebras {
        let ctx = format!("algebra {name:?}");
        let n = def.basis.len();
        if def.products.len() != n {
            return err(format!("{ctx}: expected {n} rows of products"));
        }
        let table = def
            .products
            .iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != n {
                    return err(format!("{ctx}: products row {i} has {} entries, expected {n}", row.len()));
                }
                row.iter().enumerate().map(|(j, v)| vector(v, n, &format!("{ctx}, product {i}·{j}"))).collect()
            })
            .collect::<Result<_, _>>()?;
        let unit = vector(&def.unit, n, &format!("{ctx}, unit"))?;
        let a = Algebra::new(def.basis.clone(), table, unit).map_err(|e| InputError(format!("{ctx}: {e}")))?;
        algebras.insert(name.clone(), a);
    }
    let mut homs = BTreeMap::new();
    for (name, def) in &file.homs {
        let ctx = format!("hom {name:?}");
        let s = lookup(&algebras, &def.source, "algebra", &ctx)?;
        let t = lookup(&algebras, &def.target, "algebra", &ctx)?;
        let m = matrix(&def.matrix, t.dim(), s.dim(), &ctx)?;
        let h = AlgebraHom::new(s.clone(), t.clone(), m).map_err(|e| InputError(format!("{ctx}: {e}")))?;
        homs.insert(name.clone(), h);
    }
    let mut bimodules = BTreeMap::new();
    for (name, def) in &file.bimodules {
        let ctx = format!("bimodule {name:?}");
        let l = lookup(&algebras, &def.left, "algebra", &ctx)?;
        let r = lookup(&algebras, &def.right, "algebra", &ctx)?;
        let d = def.dim;
        let actions = |list: &[MatrixDef], alg: &Algebra<F>, side: &str| -> Result<Vec<Mat<F>>, InputError> {
            if list.len() != alg.dim() {
                return err(format!("{ctx}: expected {} {side} action matrices, found {}", alg.dim(), list.len()));
            }
            list.iter().enumerate().map(|(i, m)| matrix(m, d, d, &format!("{ctx}, {side} action {i}"))).collect()
        };
        let b = Bimodule::new(l.clone(), r.clone(), d, actions(&def.left_action, l, "left")?, actions(&def.right_action, r, "right")?)
            .map_err(|e| InputError(format!("{ctx}: {e}")))?;
        bimodules.insert(name.clone(), b);
    }
    let mut corings = BTreeMap::new();
    for (name, def) in &file.corings {
        let ctx = format!("coring {name:?}");
        let built = match def {
            CoringDef::Trivial { algebra } => Ok(Coring::trivial(lookup(&algebras, algebra, "algebra", &ctx)?)),
            CoringDef::Comatrix { bimodule } => comatrix_from_module(lookup(&bimodules, bimodule, "bimodule", &ctx)?).map(|c| c.coring),
            CoringDef::Sweedler { hom } => sweedler_coring(lookup(&homs, hom, "hom", &ctx)?).map(|s| s.coring),
            CoringDef::Dual { hom } => dual_coring(lookup(&homs, hom, "hom", &ctx)?).map(|d| d.coring),
            CoringDef::Explicit { bimodule, delta, counit } => {
                let b = lookup(&bimodules, bimodule, "bimodule", &ctx)?;
                let n = b.dim();
                let delta = matrix(delta, n * n, n, &format!("{ctx}, delta"))?;
                let counit = matrix(counit, b.right.dim(), n, &format!("{ctx}, counit"))?;
                Coring::new(b.clone(), delta, counit)
            }
        };
        corings.insert(name.clone(), built.map_err(|e| InputError(format!("{ctx}: {e}")))?);
    }
    let mut comodules = BTreeMap::new();
    for (name, def) in &file.comodules {
        let ctx = format!("comodule {name:?}");
        let m = match def {
            ComoduleDef::Regular { coring } => RightComodule::regular(lookup(&corings, coring, "coring", &ctx)?),
            ComoduleDef::Grouplike { coring, element } => {
                let c = lookup(&corings, coring, "coring", &ctx)?;
                grouplike_comodule(c, &vector(element, c.dim(), &format!("{ctx}, element"))?)
            }
            ComoduleDef::Explicit { coring, module, coaction } => {
                let c = lookup(&corings, coring, "coring", &ctx)?;
                let m = lookup(&bimodules, module, "bimodule", &ctx)?;
                let rho = matrix(coaction, m.dim() * c.dim(), m.dim(), &format!("{ctx}, coaction"))?;
                RightComodule::new(c.clone(), m.clone(), rho).map_err(|e| InputError(format!("{ctx}: {e}")))?
            }
        };
        comodules.insert(name.clone(), m);
    }
    let mut coring_homs = BTreeMap::new();
    for (name, def) in &file.coring_homs {
        let ctx = format!("coring hom {name:?}");
        let s = lookup(&corings, &def.source, "coring", &ctx)?;
        let t = lookup(&corings, &def.target, "coring", &ctx)?;
        let m = matrix(&def.matrix, t.dim(), s.dim(), &ctx)?;
        let h = CoringHom::new(s.clone(), t.clone(), m).map_err(|e| InputError(format!("{ctx}: {e}")))?;
        coring_homs.insert(name.clone(), h);
    }
    let mut grouplikes = Vec::new();
    for (i, g) in file.grouplikes.iter().enumerate() {
        let ctx = format!("grouplike {i}");
        let c = lookup(&corings, &g.coring, "coring", &ctx)?;
        grouplikes.push((g.coring.clone(), vector(&g.element, c.dim(), &ctx)?));
    }
    let test_modules = match &file.test_modules {
        Some(list) => Some(list.iter().map(|s| TestModule::parse(s).map_err(|e| InputError(format!("test_modules: {e}")))).collect::<Result<_, _>>()?),
        None => None,
    };
    let t = &file.targets;
    let check_target = |name: &Option<String>, present: bool, kind: &str| -> Result<(), InputError> {
        match name {
            Some(n) if !present => err(format!("targets: unknown {kind} {n:?}")),
            _ => Ok(()),
        }
    };
    check_target(&t.sigma, t.sigma.as_ref().is_some_and(|n| bimodules.contains_key(n)), "bimodule")?;
    check_target(&t.extension, t.extension.as_ref().is_some_and(|n| homs.contains_key(n)), "hom")?;
    check_target(&t.coring, t.coring.as_ref().is_some_and(|n| corings.contains_key(n)), "coring")?;
    check_target(&t.comodule, t.comodule.as_ref().is_some_and(|n| comodules.contains_key(n)), "comodule")?;
    Ok(Fixture {
        name: file.name.clone(),
        algebras,
        homs,
        bimodules,
        corings,
        comodules,
        coring_homs,
        grouplikes,
        test_modules,
        targets: file.targets.clone(),
    })
}

pub fn field_of<F: Scalar>() -> Field {
    match F::order() {
        None => Field::Rational,
        Some(p) => Field::Prime(p),
    }
}
