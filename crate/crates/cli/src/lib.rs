//! Command-line front end for `gl3-serre`.
//!
//! Every subcommand is translated into a [`wire::Query`] and executed by
//! [`execute`], so flag invocations and JSON queries on stdin share one code
//! path and one output schema.

pub mod wire;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use gl3_serre::breuil::BreuilRankOne;
use gl3_serre::cycling::{cycle, emit_dot, Normalized, Status};
use gl3_serre::elimination::{eliminate, Branch, Verdict};
use gl3_serre::verify::{run_suite, SweepConfig, SUITES};
use gl3_serre::{decompose, Decomposition, Error, Prime, Result, WeightClass};

use wire::*;

#[derive(Debug, Parser)]
#[command(name = "gl3-serre", version, about = "Serre weight combinatorics for irreducible tame GL_3 types")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    #[arg(long)]
    pub p: i64,
    /// Order-three permutation, `123` or `132`.
    #[arg(long, requires = "mu", conflicts_with = "orbit_rep")]
    pub xi: Option<String>,
    /// Exponent triple for the constructor form, e.g. `17,9,0`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
    pub mu: Option<Vec<i64>>,
    /// Orbit representative of `ψ` as an exponent of `ω_niveau`.
    #[arg(long)]
    pub orbit_rep: Option<i64>,
    #[arg(long, default_value_t = 3)]
    pub niveau: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the predicted weights of a type.
    Predict {
        #[command(flatten)]
        ty: TypeArgs,
    },
    /// Test a weight against a type by lifting.
    Eliminate {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weight: Vec<i64>,
    },
    /// Run weight cycling from a starting weight.
    Cycle {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        start: Vec<i64>,
        /// Emit Graphviz text instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Inertial character and maximal model of a rank-one Breuil module.
    Breuil {
        #[arg(long)]
        p: i64,
        #[arg(long, default_value_t = 3)]
        d: u32,
        #[arg(long)]
        r: i64,
        #[arg(long, value_delimiter = ',')]
        ri: Vec<i64>,
        /// `k_0`; the remaining `k_i` follow from the cyclic congruence.
        #[arg(long, allow_hyphen_values = true)]
        k0: i64,
    },
    /// Write an integer in one of the two digit shapes.
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long)]
        p: i64,
    },
    /// Dimension of a weight of GL_1, GL_2 or GL_3.
    Dims {
        #[arg(long)]
        p: i64,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weight: Vec<i64>,
    },
    /// Run brute-force property suites.
    Sweep {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_delimiter = ',', default_value = "17")]
        p: Vec<i64>,
        #[arg(long, default_value_t = default_seed())]
        seed: u64,
        #[arg(long, default_value_t = default_samples())]
        samples: usize,
        #[arg(long)]
        parallel: bool,
    },
    /// Read a JSON query envelope from stdin.
    Query,
}

/// What a run produced: the exit code and the text for stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout }
    }
}

fn error_json(kind: &str, message: String) -> String {
    to_json(&ErrorEnvelope {
        error: ErrorOut {
            kind: kind.to_string(),
            message,
        },
    })
}

fn usage(message: String) -> Outcome {
    Outcome {
        code: 2,
        stdout: error_json("usage", message),
    }
}

fn domain(e: Error) -> Outcome {
    Outcome {
        code: 1,
        stdout: error_json(e.kind(), e.to_string()),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("output types serialize");
    s.push('\n');
    s
}

fn type_spec(a: &TypeArgs) -> std::result::Result<TypeSpec, String> {
    match (&a.xi, &a.mu, a.orbit_rep) {
        (Some(xi), Some(mu), None) => {
            let mu: [i64; 3] = mu
                .as_slice()
                .try_into()
                .map_err(|_| format!("--mu needs three entries, got {}", mu.len()))?;
            Ok(TypeSpec::Constructor {
                p: a.p,
                xi: xi.clone(),
                mu,
            })
        }
        (None, None, Some(rep)) => Ok(TypeSpec::Orbit {
            p: a.p,
            niveau: a.niveau,
            orbit_rep: rep,
        }),
        _ => Err("give either --xi with --mu, or --orbit-rep".into()),
    }
}

fn triple(v: &[i64], flag: &str) -> std::result::Result<[i64; 3], String> {
    v.try_into()
        .map_err(|_| format!("--{flag} needs three entries, got {}", v.len()))
}

/// Translates parsed flags into a query; `None` for the stdin command.
pub fn query_of(cmd: &Command) -> std::result::Result<Option<Query>, String> {
    Ok(Some(match cmd {
        Command::Predict { ty } => Query::Predict(PredictParams { ty: type_spec(ty)? }),
        Command::Eliminate { ty, weight } => Query::Eliminate(EliminateParams {
            weight: WeightSpec {
                p: ty.p,
                coords: weight.clone(),
            },
            ty: type_spec(ty)?,
        }),
        Command::Cycle { ty, start, dot } => Query::Cycle(CycleParams {
            ty: type_spec(ty)?,
            start: triple(start, "start")?,
            dot: *dot,
        }),
        Command::Breuil { p, d, r, ri, k0 } => Query::Breuil(BreuilParams {
            p: *p,
            d: *d,
            r: *r,
            r_i: ri.clone(),
            k0: *k0,
        }),
        Command::Decompose { n, p } => Query::Decompose(DecomposeParams { n: *n, p: *p }),
        Command::Dims { p, weight } => Query::Dims(DimsParams {
            weight: WeightSpec {
                p: *p,
                coords: weight.clone(),
            },
        }),
        Command::Sweep {
            suite,
            p,
            seed,
            samples,
            parallel,
        } => Query::Sweep(SweepParams {
            suite: suite.clone(),
            p: p.clone(),
            seed: *seed,
            samples: *samples,
            parallel: *parallel,
        }),
        Command::Query => return Ok(None),
    }))
}

fn predict(q: &PredictParams) -> Result<String> {
    let t = q.ty.resolve()?;
    let set = gl3_serre::predicted::enumerate_predicted(&t)?;
    Ok(to_json(&PredictOut {
        ty: TypeOut::from(&t),
        count: set.len(),
        weights: weights_out(&set.weights),
    }))
}

fn gl3_weight(spec: &WeightSpec) -> Result<WeightClass> {
    let w = spec.resolve()?;
    if w.rank() != 3 {
        return Err(Error::InvalidRank(w.rank()));
    }
    Ok(w)
}

fn eliminate_cmd(q: &EliminateParams) -> Result<String> {
    let t = q.ty.resolve()?;
    let w = gl3_weight(&q.weight)?;
    let r = eliminate(&w, &t)?;
    Ok(to_json(&EliminateOut {
        weight: WeightOut::from(&w),
        ty: TypeOut::from(&t),
        branch: match r.branch {
            Branch::FontaineLaffaille => "fontaine_laffaille",
            Branch::Intersection => "intersection",
        }
        .into(),
        verdict: match r.verdict {
            Verdict::Consistent => "consistent",
            Verdict::Eliminated => "eliminated",
        }
        .into(),
        allowed: orbits_out(&r.allowed),
        matched: r.matched.as_ref().map(OrbitOut::from),
        lifts: r.lifts.as_ref().map(|l| LiftsOut {
            principal_series: orbits_out(&l.principal_series),
            cuspidal_fwd: orbits_out(&l.cuspidal_fwd),
            cuspidal_bwd: orbits_out(&l.cuspidal_bwd),
        }),
    }))
}

fn cycle_cmd(q: &CycleParams) -> Result<String> {
    let t = q.ty.resolve()?;
    let [x, y, z] = q.start;
    let start = WeightClass::gl3(t.p(), x, y, z)?;
    let g = cycle(&t, &start)?;
    if q.dot {
        return Ok(emit_dot(&g));
    }
    let (case, abc) = match g.normalized {
        Normalized::CaseA(a, b, c) => ("A", [a, b, c]),
        Normalized::CaseB(a, b, c) => ("B", [a, b, c]),
    };
    let (status, missing) = match &g.status {
        Status::Complete => ("complete", None),
        Status::Stuck { missing, .. } => ("stuck", Some(WeightOut::from(missing))),
    };
    let mut edges: Vec<_> = g.edges.clone();
    edges.sort();
    edges.dedup();
    Ok(to_json(&CycleOut {
        start: WeightOut::from(&g.start),
        case: case.into(),
        abc,
        status: status.into(),
        missing,
        nodes: weights_out(&g.nodes),
        edges: edges
            .iter()
            .map(|e| EdgeOut {
                from: e.from.to_string(),
                to: e.to.to_string(),
                op: format!("T{}", e.op),
            })
            .collect(),
        predicted: weights_out(&g.predicted.weights),
        unchecked: g.unchecked,
    }))
}

fn breuil_cmd(q: &BreuilParams) -> Result<String> {
    let p = Prime::new(q.p)?;
    if !(1..=3).contains(&q.d) {
        return Err(Error::InvalidNiveau(q.d));
    }
    if q.r_i.len() != q.d as usize {
        return Err(Error::InvalidBreuil(format!(
            "expected {} values of r_i, got {}",
            q.d,
            q.r_i.len()
        )));
    }
    let e = p.modulus(q.d);
    let mut k = vec![q.k0.rem_euclid(e)];
    for i in 1..q.d as usize {
        k.push((p.get() * (k[i - 1] + q.r_i[i - 1])).rem_euclid(e));
    }
    let m = BreuilRankOne::validate(p, q.d, q.r, &q.r_i, &k)?;
    let s = (0..q.d as usize).map(|i| m.s(i)).collect::<Result<Vec<_>>>()?;
    let mx = m.maximal_model();
    Ok(to_json(&BreuilOut {
        p: q.p,
        d: q.d,
        r: q.r,
        model: ModelOut {
            r_i: m.r_i().to_vec(),
            k_i: m.k_i().to_vec(),
        },
        s,
        kappa0: m.inertial_character().value(),
        is_maximal: m.is_maximal(),
        is_minimal: m.is_minimal(),
        maximal_model: ModelOut {
            r_i: mx.r_i().to_vec(),
            k_i: mx.k_i().to_vec(),
        },
    }))
}

fn decompose_cmd(q: &DecomposeParams) -> Result<String> {
    let p = Prime::new(q.p)?;
    let (case, digits) = match decompose(q.n, p) {
        Decomposition::Divisible => ("divisible", None),
        Decomposition::CaseI(x, y, z) => ("I", Some((x, y, z))),
        Decomposition::CaseII(x, y, z) => ("II", Some((x, y, z))),
    };
    Ok(to_json(&DecomposeOut {
        case: case.into(),
        x: digits.map(|d| d.0),
        y: digits.map(|d| d.1),
        z: digits.map(|d| d.2),
    }))
}

fn dims_cmd(q: &DimsParams) -> Result<String> {
    let w = q.weight.resolve()?;
    Ok(to_json(&DimsOut {
        weight: WeightOut::from(&w),
        dim: w.dim(),
        alcove: w.alcove().ok().map(|a| format!("{a:?}")),
    }))
}

fn sweep_cmd(q: &SweepParams) -> Result<(bool, String)> {
    let cfg = SweepConfig {
        seed: q.seed,
        samples: q.samples,
        parallel: q.parallel,
    };
    let suites: Vec<&str> = if q.suite == "all" {
        SUITES.to_vec()
    } else {
        vec![q.suite.as_str()]
    };
    let mut reports = Vec::new();
    for &p in &q.p {
        let p = Prime::new(p)?;
        for s in &suites {
            let r = run_suite(s, p, &cfg)?;
            reports.push(SuiteOut {
                passed: r.passed(),
                suite: r.suite,
                p: r.p,
                checked: r.checked,
                counterexample: r.counterexample,
            });
        }
    }
    let passed = reports.iter().all(|r| r.passed);
    Ok((
        passed,
        to_json(&SweepOut {
            seed: q.seed,
            samples: q.samples,
            passed,
            reports,
        }),
    ))
}

/// Runs one query. Sweeps with a counterexample exit with status 1.
pub fn execute(q: &Query) -> Outcome {
    let result = match q {
        Query::Predict(p) => predict(p),
        Query::Eliminate(p) => eliminate_cmd(p),
        Query::Cycle(p) => cycle_cmd(p),
        Query::Breuil(p) => breuil_cmd(p),
        Query::Decompose(p) => decompose_cmd(p),
        Query::Dims(p) => dims_cmd(p),
        Query::Sweep(p) => {
            return match sweep_cmd(p) {
                Ok((passed, stdout)) => Outcome {
                    code: if passed { 0 } else { 1 },
                    stdout,
                },
                Err(e) => domain(e),
            }
        }
    };
    match result {
        Ok(s) => Outcome::ok(s),
        Err(e) => domain(e),
    }
}

/// Parses and runs a JSON query envelope.
pub fn execute_json(input: &str) -> Outcome {
    let env: QueryEnvelope = match serde_json::from_str(input) {
        Ok(e) => e,
        Err(e) => return usage(format!("malformed query: {e}")),
    };
    if env.version != SCHEMA_VERSION {
        return usage(format!(
            "unsupported schema version {}, expected {SCHEMA_VERSION}",
            env.version
        ));
    }
    execute(&env.query)
}

/// Full run from already-parsed flags. `stdin` is read only by `query`.
pub fn run_cli(cli: &Cli, stdin: impl FnOnce() -> std::io::Result<String>) -> Outcome {
    match query_of(&cli.command) {
        Ok(Some(q)) => execute(&q),
        Ok(None) => match stdin() {
            Ok(input) => execute_json(&input),
            Err(e) => usage(format!("cannot read stdin: {e}")),
        },
        Err(msg) => usage(msg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        let cli = Cli::try_parse_from(std::iter::once("gl3-serre").chain(args.iter().copied())).unwrap();
        run_cli(&cli, || Ok(String::new()))
    }

    #[test]
    fn decompose_example() {
        let out = run(&["decompose", "--n", "10", "--p", "7"]);
        assert_eq!(out.code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v, serde_json::json!({"case": "I", "x": 3, "y": 1, "z": 0}));
    }

    #[test]
    fn flags_and_query_agree() {
        let flags = run(&["predict", "--p", "29", "--xi", "123", "--mu", "17,9,0"]);
        let json = execute_json(
            r#"{"version":1,"command":"predict","params":{"type":{"p":29,"xi":"123","mu":[17,9,0]}}}"#,
        );
        assert_eq!(flags, json);
        let out: PredictOut = serde_json::from_str(&flags.stdout).unwrap();
        assert_eq!(out.count, 9);
        assert!(out.weights.iter().any(|w| w.label == "F(15,8,0)"));
    }

    #[test]
    fn domain_error_is_exit_1() {
        let out = run(&["decompose", "--n", "10", "--p", "4"]);
        assert_eq!(out.code, 1);
        let e: ErrorEnvelope = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(e.error.kind, "invalid_prime");
    }

    #[test]
    fn malformed_query_is_exit_2() {
        assert_eq!(execute_json("{not json").code, 2);
        assert_eq!(
            execute_json(r#"{"version":9,"command":"dims","params":{"weight":{"p":7,"F":[1,0,0]}}}"#).code,
            2
        );
        assert_eq!(execute_json(r#"{"version":1,"command":"frobnicate","params":{}}"#).code, 2);
    }

    #[test]
    fn missing_type_is_usage_error() {
        assert_eq!(run(&["predict", "--p", "29"]).code, 2);
    }

    #[test]
    fn envelope_round_trip() {
        let q = QueryEnvelope {
            version: 1,
            query: Query::Cycle(CycleParams {
                ty: TypeSpec::Orbit {
                    p: 29,
                    niveau: 3,
                    orbit_rep: 278,
                },
                start: [15, 8, 0],
                dot: true,
            }),
        };
        let text = serde_json::to_string(&q).unwrap();
        assert_eq!(serde_json::from_str::<QueryEnvelope>(&text).unwrap(), q);
    }
}
