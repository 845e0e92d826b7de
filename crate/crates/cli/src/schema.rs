//! On-disk fixture format. Scalars are strings: `"3/2"` over `Q`, residues over `GF:p`.
//! Matrices are row-major.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub const VERSION: u32 = 1;

pub type VectorDef = Vec<String>;
pub type MatrixDef = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FixtureFile {
    pub version: u32,
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    /// `"Q"` or `"GF:p"`.
    pub field: String,
    pub algebras: BTreeMap<String, AlgebraDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub homs: BTreeMap<String, HomDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bimodules: BTreeMap<String, BimoduleDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub corings: BTreeMap<String, CoringDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub comodules: BTreeMap<String, ComoduleDef>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub coring_homs: BTreeMap<String, CoringHomDef>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub grouplikes: Vec<GrouplikeDef>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub test_modules: Option<Vec<String>>,
    #[serde(default)]
    pub targets: Targets,
}

/// Structure constants: `products[i][j]` holds `e_i e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDef {
    pub basis: Vec<String>,
    pub unit: VectorDef,
    pub products: Vec<Vec<VectorDef>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomDef {
    pub source: String,
    pub target: String,
    pub matrix: MatrixDef,
}

/// One action matrix per basis element of each algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleDef {
    pub left: String,
    pub right: String,
    pub dim: usize,
    pub left_action: Vec<MatrixDef>,
    pub right_action: Vec<MatrixDef>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CoringDef {
    Trivial { algebra: String },
    Comatrix { bimodule: String },
    Sweedler { hom: String },
    Dual { hom: String },
    /// `delta` is `n² x n` in Kronecker order, `counit` is `dim A x n`.
    Explicit { bimodule: String, delta: MatrixDef, counit: MatrixDef },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ComoduleDef {
    Regular { coring: String },
    Grouplike { coring: String, element: VectorDef },
    Explicit { coring: String, module: String, coaction: MatrixDef },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoringHomDef {
    pub source: String,
    pub target: String,
    pub matrix: MatrixDef,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrouplikeDef {
    pub coring: String,
    pub element: VectorDef,
}

/// Objects the commands act on.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Targets {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coring: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comodule: Option<String>,
}
