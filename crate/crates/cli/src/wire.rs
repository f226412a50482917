//! JSON shapes shared by flag-driven commands and stdin queries.

use serde::{Deserialize, Serialize};

use gl3_serre::arith::FrobOrbit;
use gl3_serre::breuil::ReductionCandidates;
use gl3_serre::{Error, ExpClass, OrderThreePerm, Prime, Result, TameType, WeightClass};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSpec {
    pub p: i64,
    #[serde(rename = "F")]
    pub coords: Vec<i64>,
}

impl WeightSpec {
    pub fn resolve(&self) -> Result<WeightClass> {
        WeightClass::new(Prime::new(self.p)?, &self.coords)
    }
}

/// A weight on output: the wire form plus its printed label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightOut {
    pub p: i64,
    #[serde(rename = "F")]
    pub coords: Vec<i64>,
    pub label: String,
}

impl From<&WeightClass> for WeightOut {
    fn from(w: &WeightClass) -> Self {
        WeightOut {
            p: w.p().get(),
            coords: w.coords().to_vec(),
            label: w.to_string(),
        }
    }
}

pub fn weights_out<'a>(ws: impl IntoIterator<Item = &'a WeightClass>) -> Vec<WeightOut> {
    ws.into_iter().map(WeightOut::from).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TypeSpec {
    Orbit { p: i64, niveau: u32, orbit_rep: i64 },
    Constructor { p: i64, xi: String, mu: [i64; 3] },
}

pub fn parse_xi(s: &str) -> Result<OrderThreePerm> {
    match s.trim_matches(|c| c == '(' || c == ')').replace(' ', "").as_str() {
        "123" => Ok(OrderThreePerm::Xi123),
        "132" => Ok(OrderThreePerm::Xi132),
        other => Err(Error::Hypothesis(format!(
            "xi must be \"123\" or \"132\", got {other:?}"
        ))),
    }
}

impl TypeSpec {
    pub fn resolve(&self) -> Result<TameType> {
        match self {
            TypeSpec::Orbit { p, niveau, orbit_rep } => {
                TameType::induced(ExpClass::new(Prime::new(*p)?, *niveau, *orbit_rep)?)
            }
            TypeSpec::Constructor { p, xi, mu } => {
                Ok(TameType::tau(parse_xi(xi)?, (mu[0], mu[1], mu[2]), Prime::new(*p)?))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeOut {
    pub p: i64,
    pub niveau: u32,
    pub exponents: [i64; 3],
    pub orbit_rep: Option<i64>,
    pub label: String,
}

impl From<&TameType> for TypeOut {
    fn from(t: &TameType) -> Self {
        TypeOut {
            p: t.p().get(),
            niveau: t.niveau(),
            exponents: t.exponents(),
            orbit_rep: t.psi_orbit().ok().map(|o| o.rep()),
            label: t.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitOut {
    pub rep: i64,
    pub members: Vec<i64>,
}

impl From<&FrobOrbit> for OrbitOut {
    fn from(o: &FrobOrbit) -> Self {
        OrbitOut {
            rep: o.rep(),
            members: o.members(),
        }
    }
}

pub fn orbits_out(c: &ReductionCandidates) -> Vec<OrbitOut> {
    c.orbits.iter().map(OrbitOut::from).collect()
}

/// Parameters of each command, as they appear under `params` in a query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictParams {
    #[serde(rename = "type")]
    pub ty: TypeSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminateParams {
    pub weight: WeightSpec,
    #[serde(rename = "type")]
    pub ty: TypeSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleParams {
    #[serde(rename = "type")]
    pub ty: TypeSpec,
    pub start: [i64; 3],
    #[serde(default)]
    pub dot: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreuilParams {
    pub p: i64,
    #[serde(default = "default_niveau")]
    pub d: u32,
    pub r: i64,
    pub r_i: Vec<i64>,
    pub k0: i64,
}

fn default_niveau() -> u32 {
    3
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeParams {
    pub n: i64,
    pub p: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsParams {
    pub weight: WeightSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepParams {
    /// A suite name, or `all`.
    pub suite: String,
    pub p: Vec<i64>,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default)]
    pub parallel: bool,
}

pub fn default_seed() -> u64 {
    gl3_serre::verify::SweepConfig::default().seed
}

pub fn default_samples() -> usize {
    gl3_serre::verify::SweepConfig::default().samples
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", content = "params", rename_all = "lowercase")]
pub enum Query {
    Predict(PredictParams),
    Eliminate(EliminateParams),
    Cycle(CycleParams),
    Breuil(BreuilParams),
    Decompose(DecomposeParams),
    Dims(DimsParams),
    Sweep(SweepParams),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryEnvelope {
    pub version: u32,
    #[serde(flatten)]
    pub query: Query,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictOut {
    #[serde(rename = "type")]
    pub ty: TypeOut,
    pub count: usize,
    pub weights: Vec<WeightOut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftsOut {
    pub principal_series: Vec<OrbitOut>,
    pub cuspidal_fwd: Vec<OrbitOut>,
    pub cuspidal_bwd: Vec<OrbitOut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminateOut {
    pub weight: WeightOut,
    #[serde(rename = "type")]
    pub ty: TypeOut,
    pub branch: String,
    pub verdict: String,
    pub allowed: Vec<OrbitOut>,
    pub matched: Option<OrbitOut>,
    pub lifts: Option<LiftsOut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeOut {
    pub from: String,
    pub to: String,
    pub op: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleOut {
    pub start: WeightOut,
    pub case: String,
    pub abc: [i64; 3],
    pub status: String,
    pub missing: Option<WeightOut>,
    pub nodes: Vec<WeightOut>,
    pub edges: Vec<EdgeOut>,
    pub predicted: Vec<WeightOut>,
    pub unchecked: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelOut {
    pub r_i: Vec<i64>,
    pub k_i: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BreuilOut {
    pub p: i64,
    pub d: u32,
    pub r: i64,
    pub model: ModelOut,
    pub s: Vec<i64>,
    pub kappa0: i64,
    pub is_maximal: bool,
    pub is_minimal: bool,
    pub maximal_model: ModelOut,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeOut {
    pub case: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub x: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub y: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub z: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsOut {
    pub weight: WeightOut,
    pub dim: i64,
    pub alcove: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOut {
    pub suite: String,
    pub p: i64,
    pub checked: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepOut {
    pub seed: u64,
    pub samples: usize,
    pub passed: bool,
    pub reports: Vec<SuiteOut>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorOut {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorEnvelope {
    pub error: ErrorOut,
}
