//! Writing library objects back out as fixture files.

use std::collections::BTreeMap;

use coring_core::algebra::{Algebra, AlgebraHom};
use coring_core::coring::{Coring, CoringHom};
use coring_core::mat::Mat;
use coring_core::moduli::Bimodule;
use coring_core::Scalar;

use crate::schema::{
    AlgebraDef, BimoduleDef, ComoduleDef, CoringHomDef, CoringDef, FixtureFile, GrouplikeDef, HomDef, MatrixDef, Targets, VectorDef, VERSION,
};

pub fn vector_def<F: Scalar>(v: &[F]) -> VectorDef {
    v.iter().map(|x| x.to_string()).collect()
}

pub fn matrix_def<F: Scalar>(m: &Mat<F>) -> MatrixDef {
    m.row_vecs().iter().map(|r| vector_def(r)).collect()
}

pub fn algebra_def<F: Scalar>(a: &Algebra<F>) -> AlgebraDef {
    AlgebraDef {
        basis: a.labels().to_vec(),
        unit: vector_def(a.unit()),
        products: a.table().iter().map(|row| row.iter().map(|v| vector_def(v)).collect()).collect(),
    }
}

/// Collects objects under names; algebras are shared by structural equality.
pub struct Exporter<F> {
    file: FixtureFile,
    algebras: Vec<(String, Algebra<F>)>,
    bimodules: Vec<(String, Bimodule<F>)>,
}

impl<F: Scalar> Exporter<F> {
    pub fn new(name: &str, description: &str) -> Self {
        Exporter {
            file: FixtureFile {
                version: VERSION,
                name: name.to_string(),
                description: description.to_string(),
                field: F::tag(),
                algebras: BTreeMap::new(),
                homs: BTreeMap::new(),
                bimodules: BTreeMap::new(),
                corings: BTreeMap::new(),
                comodules: BTreeMap::new(),
                coring_homs: BTreeMap::new(),
                grouplikes: Vec::new(),
                test_modules: None,
                targets: Targets::default(),
            },
            algebras: Vec::new(),
            bimodules: Vec::new(),
        }
    }

    pub fn algebra(&mut self, name: &str, a: &Algebra<F>) -> String {
        if let Some((n, _)) = self.algebras.iter().find(|(_, b)| b == a) {
            return n.clone();
        }
        self.algebras.push((name.to_string(), a.clone()));
        self.file.algebras.insert(name.to_string(), algebra_def(a));
        name.to_string()
    }

    /// Name of a registered algebra, registering it as `k` or `A<n>` if new.
    fn algebra_name(&mut self, a: &Algebra<F>) -> String {
        if let Some((n, _)) = self.algebras.iter().find(|(_, b)| b == a) {
            return n.clone();
        }
        let name = if *a == Algebra::ground() { "k".to_string() } else { format!("A{}", self.algebras.len()) };
        self.algebra(&name, a)
    }

    pub fn hom(&mut self, name: &str, h: &AlgebraHom<F>) -> String {
        let source = self.algebra_name(&h.source);
        let target = self.algebra_name(&h.target);
        self.file.homs.insert(name.to_string(), HomDef { source, target, matrix: matrix_def(&h.matrix) });
        name.to_string()
    }

    pub fn bimodule(&mut self, name: &str, b: &Bimodule<F>) -> String {
        if let Some((n, _)) = self.bimodules.iter().find(|(_, c)| c == b) {
            return n.clone();
        }
        let left = self.algebra_name(&b.left);
        let right = self.algebra_name(&b.right);
        self.bimodules.push((name.to_string(), b.clone()));
        self.file.bimodules.insert(
            name.to_string(),
            BimoduleDef {
                left,
                right,
                dim: b.dim(),
                left_action: b.left_action.iter().map(matrix_def).collect(),
                right_action: b.right_action.iter().map(matrix_def).collect(),
            },
        );
        name.to_string()
    }

    pub fn coring(&mut self, name: &str, def: CoringDef) -> String {
        self.file.corings.insert(name.to_string(), def);
        name.to_string()
    }

    /// `Δ` and `ε` written out entry by entry.
    pub fn explicit_coring(&mut self, name: &str, module_name: &str, c: &Coring<F>) -> String {
        let bimodule = self.bimodule(module_name, &c.bimodule);
        self.coring(name, CoringDef::Explicit { bimodule, delta: matrix_def(&c.delta), counit: matrix_def(&c.counit) })
    }

    pub fn comodule(&mut self, name: &str, def: ComoduleDef) -> String {
        self.file.comodules.insert(name.to_string(), def);
        name.to_string()
    }

    pub fn explicit_comodule(&mut self, name: &str, coring: &str, module_name: &str, module: &Bimodule<F>, coaction: &Mat<F>) -> String {
        let module = self.bimodule(module_name, module);
        self.comodule(name, ComoduleDef::Explicit { coring: coring.to_string(), module, coaction: matrix_def(coaction) })
    }

    pub fn coring_hom(&mut self, name: &str, source: &str, target: &str, h: &CoringHom<F>) {
        self.file
            .coring_homs
            .insert(name.to_string(), CoringHomDef { source: source.to_string(), target: target.to_string(), matrix: matrix_def(&h.matrix) });
    }

    pub fn grouplike(&mut self, coring: &str, g: &[F]) {
        self.file.grouplikes.push(GrouplikeDef { coring: coring.to_string(), element: vector_def(g) });
    }

    pub fn test_modules(&mut self, list: &[&str]) {
        self.file.test_modules = Some(list.iter().map(|s| s.to_string()).collect());
    }

    pub fn targets(&mut self, targets: Targets) {
        self.file.targets = targets;
    }

    pub fn finish(self) -> FixtureFile {
        self.file
    }
}
