use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pgl6_core::algebra3::CubicType;
use pgl6_core::brauer::{
    admits_unitary_involution, chatelet_kernel, corestriction, decompose_degree6, hilbert_symbol, quaternion_class,
    restriction, InvariantVector, InvariantVectorK, Place, QuadField,
};
use pgl6_core::dp6::{
    count_points, find_lines, frobenius_on_lines, split_model_points, surface_from_spec, torus_count_check,
    verify_split_equivalence, DP6Surface, LineConfig, SurfaceModel, DEFAULT_POINT_BUDGET, DEFAULT_SPLIT_BUDGET,
};
use pgl6_core::field::{FiniteField, Rational};
use pgl6_core::hexagon::{
    hex_subgroups, perm_word, stable_isomorphism, subgroup_report, trace_table, HexAut, CLASS_NAMES,
};
use pgl6_core::lattice::{h1, fixed_submodule, hnf_rows, kernel_basis, smith_normal_form, FiniteGroup, GLattice, IntMatrix};
use pgl6_core::proofkit::{corollary_cdpgl, parse_class, replay_first_proof, replay_second_proof};
use pgl6_core::selftest::{self, Fault, Options, SCHEMA};

const AFTER_HELP: &str = "\
Output: one JSON object on stdout, always with \"schema\": \"pgl6.v1\".
Exit status: 0 success, 1 domain error ({\"schema\", \"error\": {\"kind\", \"message\"}}), 2 usage error.

Schemas:
  invariant vector    {\"inf\": \"0\"|\"1/2\", \"primes\": {\"7\": \"1/6\", ...}}
  K-invariant vector  {\"field\": \"-1\", \"inf\": [..], \"primes\": {\"5\": [\"1/2\", \"1/2\"]}}
                      one invariant per place of K above p, K given by its squarefree d
  matrix              [[\"1\", \"0\"], [\"0\", \"1\"]]  (decimal strings or integers)
  group action        {\"degree\": n, \"generators\": [[0, 2, 1], ..], \"action\": [matrix, ..]}
                      one matrix per generator, generators as 0-based images
  algebra spec        {\"kind\": \"split_exchange\"|\"hermitian\", \"field\": \"Q\"|\"F_p\",
                       \"d\": int, \"L_generator_minpoly\": [c0, c1, c2, 1]}
  hexagon elements    permutation words on E1 E2 E3 F1 F2 F3, e.g. \"(E1 F2)(E2 F1)(E3 F3)\"
  field elements      rationals \"a/b\"; finite-field elements \"[c0,c1,..]@p^k\"

Any JSON argument may be given as '-' to read it from stdin.";

#[derive(Parser)]
#[command(name = "pgl6", version, about = "Exact toolkit for degree-6 central simple algebras", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Brauer classes over Q and quadratic fields via local invariants.
    #[command(subcommand)]
    Brauer(BrauerCmd),
    /// Integer matrices and lattices with a finite group action.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// The hexagon of lines and its Picard lattice.
    #[command(subcommand)]
    Hexagon(HexagonCmd),
    /// Del Pezzo surfaces of degree 6 over finite fields.
    #[command(subcommand)]
    Surface(SurfaceCmd),
    /// Replay a proof certificate for a class of index 6.
    Replay(ReplayArgs),
    /// Run the acceptance criteria.
    Selftest(SelftestArgs),
}

#[derive(Subcommand)]
enum BrauerCmd {
    /// {"index": n}
    Index { class: String },
    /// {"period": n}
    Period { class: String },
    /// {"symbol": 1|-1}; place is "inf" or a prime
    Hilbert {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        place: String,
    },
    /// {"class": invariant vector} of the quaternion algebra (a, b)
    Quaternion {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// {"class": ..} of the tensor product
    Tensor { a: String, b: String },
    /// {"class": ..} of the opposite algebra
    Inverse { class: String },
    /// {"class": K-invariant vector} of the restriction to Q(sqrt d)
    Restrict {
        class: String,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// {"class": ..} of the corestriction of a K-invariant vector
    Corestrict { class: String },
    /// {"admits_unitary_involution": bool} for a K-invariant vector
    Unitary { class: String },
    /// {"C": .., "D": ..} with A = C + D, 2C = 0 and 3D = 0
    Decompose { class: String },
    /// {"kernel": [..]} the classes split by the function field of SB(A)
    Chatelet { class: String },
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// {"diagonal", "rank", "s", "u", "v"} with u m v = s
    Snf { matrix: String },
    /// {"hnf"} row Hermite form
    Hnf { matrix: String },
    /// {"kernel"} saturated basis of the right kernel, as columns
    Kernel { matrix: String },
    /// {"h1", "fixed"} for a group action
    H1 { action: String },
}

#[derive(Subcommand)]
enum HexagonCmd {
    /// Subgroup reports: {subgroup_id, generators, fixed_rank, h1, sequences_exact, stable_iso_found}
    Report {
        #[arg(long, conflicts_with = "subgroup")]
        all_subgroups: bool,
        #[arg(long)]
        subgroup: Option<usize>,
    },
    /// Conjugacy classes with their size and trace on Pic
    TraceTable,
    /// The intertwiner for Pic + Z = Z[pairs] + Z[triangles]
    StableIso,
}

#[derive(Args)]
struct ModelArgs {
    /// split, K-inert, L-quadratic, L-cubic, K-inert-L-quadratic, K-inert-L-cubic
    #[arg(long, default_value = "split")]
    model: String,
    /// Prime order of the base field
    #[arg(long, default_value_t = 2)]
    q: u64,
}

#[derive(Subcommand)]
enum SurfaceCmd {
    /// The quadric system; from --spec, or a named model
    Build {
        #[arg(long)]
        spec: Option<String>,
        #[command(flatten)]
        m: ModelArgs,
    },
    /// {"count", "predicted"} for S(F_{q^k})
    Count {
        #[command(flatten)]
        m: ModelArgs,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// The six lines over the splitting field
    Lines {
        #[command(flatten)]
        m: ModelArgs,
    },
    /// The Frobenius element of the hexagon
    Frobenius {
        #[command(flatten)]
        m: ModelArgs,
    },
    /// Counts against q^2k + q^k tr(phi^k) + 1 for every k within budget
    CheckZeta {
        #[command(flatten)]
        m: ModelArgs,
    },
    /// |U(F_q)| against |det(q - phi | T^)|
    Torus {
        #[command(flatten)]
        m: ModelArgs,
    },
    /// #S(F_q) against the biprojective model (split model only)
    Segre {
        #[arg(long, default_value_t = 2)]
        q: u64,
    },
    /// Points of x0 y0 = x1 y1 = x2 y2 in P^2 x P^2 over F_{q^k}
    SplitModel {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProofKind {
    First,
    Second,
}

#[derive(Args)]
struct ReplayArgs {
    #[arg(long, value_enum)]
    proof: ProofKind,
    /// Invariant vector of a class of index 6
    #[arg(long)]
    algebra: String,
    /// Discriminant of K for the first proof
    #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
    k: i64,
    /// Wrap the certificate in the PGL_6 corollary
    #[arg(long)]
    corollary: bool,
    /// Print only the transcript
    #[arg(long)]
    text: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    TraceTable,
}

#[derive(Args)]
struct SelftestArgs {
    /// Comma-separated criterion ids or tags (brauer, lattice, hexagon, dp6, surface, proofkit, determinism)
    #[arg(long)]
    filter: Option<String>,
    #[arg(long, default_value_t = selftest::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum)]
    inject_fault: Option<FaultArg>,
}

struct CliError {
    kind: &'static str,
    message: String,
}

macro_rules! error_from {
    ($($t:ty => $k:literal),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError { kind: $k, message: e.to_string() }
            }
        }
    )*};
}

error_from!(
    pgl6_core::brauer::BrauerError => "brauer",
    pgl6_core::lattice::LatticeError => "lattice",
    pgl6_core::dp6::Dp6Error => "surface",
    pgl6_core::field::FieldError => "field",
    pgl6_core::proofkit::ProofError => "proof",
    serde_json::Error => "json"
);

fn input_error(m: impl Into<String>) -> CliError {
    CliError { kind: "input", message: m.into() }
}

type Out = Result<Value, CliError>;

fn read_json(arg: &str) -> Result<Value, CliError> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| input_error(e.to_string()))?;
        return Ok(serde_json::from_str(&s)?);
    }
    Ok(serde_json::from_str(arg)?)
}

fn class(arg: &str) -> Result<InvariantVector, CliError> {
    Ok(parse_class(&read_json(arg)?)?)
}

fn k_class(arg: &str) -> Result<InvariantVectorK, CliError> {
    Ok(InvariantVectorK::from_json(&read_json(arg)?)?)
}

fn matrix(arg: &str) -> Result<IntMatrix, CliError> {
    Ok(IntMatrix::from_json(&read_json(arg)?)?)
}

fn rational(s: &str) -> Result<Rational, CliError> {
    s.parse().map_err(|_| input_error(format!("not a rational number: {s}")))
}

fn big_list<T: ToString>(v: &[T]) -> Value {
    v.iter().map(|x| Value::String(x.to_string())).collect()
}

/// A number when it fits, a decimal string otherwise.
fn int<T: ToString>(x: T) -> Value {
    let s = x.to_string();
    s.parse::<u64>().map(Value::from).unwrap_or(Value::String(s))
}

fn brauer(cmd: BrauerCmd) -> Out {
    Ok(match cmd {
        BrauerCmd::Index { class: c } => json!({"index": int(class(&c)?.index())}),
        BrauerCmd::Period { class: c } => json!({"period": int(class(&c)?.period())}),
        BrauerCmd::Hilbert { a, b, place } => {
            let v: Place = place.parse()?;
            json!({"symbol": hilbert_symbol(&rational(&a)?, &rational(&b)?, v)?})
        }
        BrauerCmd::Quaternion { a, b } => json!({"class": quaternion_class(&rational(&a)?, &rational(&b)?)?.to_json()}),
        BrauerCmd::Tensor { a, b } => json!({"class": class(&a)?.tensor(&class(&b)?).to_json()}),
        BrauerCmd::Inverse { class: c } => json!({"class": class(&c)?.inverse().to_json()}),
        BrauerCmd::Restrict { class: c, d } => json!({"class": restriction(&class(&c)?, QuadField::new(d)?).to_json()}),
        BrauerCmd::Corestrict { class: c } => json!({"class": corestriction(&k_class(&c)?).to_json()}),
        BrauerCmd::Unitary { class: c } => json!({"admits_unitary_involution": admits_unitary_involution(&k_class(&c)?)}),
        BrauerCmd::Decompose { class: c } => {
            let (two, three) = decompose_degree6(&class(&c)?)?;
            json!({"C": two.to_json(), "D": three.to_json()})
        }
        BrauerCmd::Chatelet { class: c } => {
            json!({"kernel": chatelet_kernel(&class(&c)?).iter().map(|u| u.to_json()).collect::<Vec<_>>()})
        }
    })
}

fn group_action(v: &Value) -> Result<GLattice, CliError> {
    let degree = v["degree"].as_u64().ok_or_else(|| input_error("missing \"degree\""))? as usize;
    let gens: Vec<Vec<usize>> = serde_json::from_value(v["generators"].clone())?;
    let mats: Vec<IntMatrix> = v["action"]
        .as_array()
        .ok_or_else(|| input_error("missing \"action\""))?
        .iter()
        .map(IntMatrix::from_json)
        .collect::<Result<_, _>>()?;
    if mats.len() != gens.len() || mats.is_empty() {
        return Err(input_error("one action matrix per generator expected"));
    }
    let rank = mats[0].rows();
    let group = FiniteGroup::generate(degree, &gens)?;
    let chosen: Vec<IntMatrix> = group
        .generator_perms()
        .iter()
        .map(|p| mats[gens.iter().position(|g| g == p).expect("generators come from the input")].clone())
        .collect();
    let l = GLattice::from_generators(group, rank, &chosen)?;
    // generators dropped as redundant must still act consistently
    for (g, m) in gens.iter().zip(&mats) {
        if l.action_of(g) != Some(m) {
            return Err(input_error("action is not a homomorphism"));
        }
    }
    Ok(l)
}

fn lattice(cmd: LatticeCmd) -> Out {
    Ok(match cmd {
        LatticeCmd::Snf { matrix: m } => {
            let s = smith_normal_form(&matrix(&m)?);
            json!({
                "diagonal": big_list(&s.diagonal()),
                "rank": s.rank(),
                "s": s.s.to_json(),
                "u": s.u.to_json(),
                "v": s.v.to_json(),
            })
        }
        LatticeCmd::Hnf { matrix: m } => json!({"hnf": hnf_rows(&matrix(&m)?).to_json()}),
        LatticeCmd::Kernel { matrix: m } => json!({"kernel": kernel_basis(&matrix(&m)?).to_json()}),
        LatticeCmd::H1 { action } => {
            let l = group_action(&read_json(&action)?)?;
            let g = l.group().clone();
            json!({
                "order": g.order(),
                "rank": l.rank(),
                "h1": big_list(&h1(&l, &g)?),
                "fixed": fixed_submodule(&l, &g)?.to_json(),
            })
        }
    })
}

fn hexagon(cmd: HexagonCmd) -> Out {
    Ok(match cmd {
        HexagonCmd::Report { all_subgroups, subgroup } => {
            let ids: Vec<usize> = match (all_subgroups, subgroup) {
                (_, Some(i)) if i >= hex_subgroups().len() => {
                    return Err(input_error(format!("subgroup ids run from 0 to {}", hex_subgroups().len() - 1)))
                }
                (_, Some(i)) => vec![i],
                (true, None) => (0..hex_subgroups().len()).collect(),
                (false, None) => vec![hex_subgroups().len() - 1],
            };
            let reports: Vec<Value> =
                ids.iter().map(|&i| subgroup_report(i).map(|r| r.to_json())).collect::<Result<_, _>>()?;
            json!({"reports": reports})
        }
        HexagonCmd::TraceTable => {
            let rows: Vec<Value> = trace_table()
                .into_iter()
                .map(|(name, size, trace)| json!({"class": name, "size": size, "trace": trace}))
                .collect();
            json!({"classes": rows})
        }
        HexagonCmd::StableIso => match stable_isomorphism() {
            Some(m) => json!({"found": true, "det": m.det().to_string(), "matrix": m.to_json()}),
            None => json!({"found": false}),
        },
    })
}

struct Built {
    model: SurfaceModel,
    surface: DP6Surface<FiniteField>,
}

impl Built {
    fn new(m: &ModelArgs) -> Result<Self, CliError> {
        let model = SurfaceModel::from_name(&m.model, m.q)?;
        Ok(Built { surface: model.build()?, model })
    }

    fn lines(&self) -> Result<(LineConfig, HexAut), CliError> {
        let cfg = find_lines(&self.surface, self.model.splitting_degree())?;
        let phi = frobenius_on_lines(&cfg)?;
        Ok((cfg, phi))
    }
}

fn traces() -> Vec<i64> {
    trace_table().iter().map(|t| t.2).collect()
}

fn surface(cmd: SurfaceCmd) -> Out {
    Ok(match cmd {
        SurfaceCmd::Build { spec: Some(s), .. } => json!({"surface": surface_from_spec(&read_json(&s)?)?.to_json()}),
        SurfaceCmd::Build { spec: None, m } => {
            let b = Built::new(&m)?;
            json!({"model": b.model.id(), "surface": b.surface.to_json()})
        }
        SurfaceCmd::Count { m, k } => {
            let b = Built::new(&m)?;
            let (_, phi) = b.lines()?;
            let r = count_points(&b.surface, k, &phi, &traces(), DEFAULT_POINT_BUDGET)?;
            let mut out = r.to_json();
            out["model"] = json!(b.model.id());
            out
        }
        SurfaceCmd::Lines { m } => {
            let b = Built::new(&m)?;
            let (cfg, _) = b.lines()?;
            json!({"model": b.model.id(), "lines": cfg.to_json()})
        }
        SurfaceCmd::Frobenius { m } => {
            let b = Built::new(&m)?;
            let (_, phi) = b.lines()?;
            json!({
                "model": b.model.id(),
                "frobenius": perm_word(&phi.to_perm()),
                "frobenius_class": CLASS_NAMES[phi.class_index()],
            })
        }
        SurfaceCmd::CheckZeta { m } => {
            let b = Built::new(&m)?;
            let (_, phi) = b.lines()?;
            let t = traces();
            let mut records = Vec::new();
            let mut passed = true;
            for k in 1.. {
                match count_points(&b.surface, k, &phi, &t, DEFAULT_POINT_BUDGET) {
                    Ok(r) => {
                        passed &= r.passes();
                        records.push(r.to_json());
                    }
                    Err(pgl6_core::dp6::Dp6Error::EnumerationBudgetExceeded { .. }) => break,
                    Err(e) => return Err(e.into()),
                }
            }
            json!({"model": b.model.id(), "records": records, "passed": passed})
        }
        SurfaceCmd::Torus { m } => {
            let b = Built::new(&m)?;
            let (cfg, phi) = b.lines()?;
            let r = torus_count_check(&b.surface, &cfg, &phi)?;
            let mut out = r.to_json();
            out["model"] = json!(b.model.id());
            out["passed"] = json!(r.passes());
            out
        }
        SurfaceCmd::Segre { q } => {
            let model = SurfaceModel { p: q, k_inert: false, l: CubicType::Split };
            let r = verify_split_equivalence(&model.build()?)?;
            json!({
                "q": r.q,
                "surface_count": r.surface_count,
                "model_count": r.model_count,
                "bijective": r.bijective,
            })
        }
        SurfaceCmd::SplitModel { q, k } => {
            let n = split_model_points(q, k, DEFAULT_SPLIT_BUDGET)?;
            let qk = q.pow(k);
            json!({"q": q, "k": k, "count": n, "predicted": qk * qk + 4 * qk + 1})
        }
    })
}

fn replay(a: ReplayArgs) -> Result<(Value, String), CliError> {
    let class = class(&a.algebra)?;
    let mut cert = match a.proof {
        ProofKind::First => replay_first_proof(&class, QuadField::new(a.k)?)?,
        ProofKind::Second => replay_second_proof(&class)?,
    };
    if a.corollary {
        cert = corollary_cdpgl(&cert);
    }
    let transcript = cert.transcript();
    Ok((json!({"verified": cert.verify(), "certificate": cert.to_json(), "transcript": transcript}), transcript))
}

fn emit(mut v: Value) {
    if let Value::Object(m) = &mut v {
        m.shift_insert(0, "schema".into(), json!(SCHEMA));
    }
    println!("{v}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Brauer(c) => brauer(c),
        Cmd::Lattice(c) => lattice(c),
        Cmd::Hexagon(c) => hexagon(c),
        Cmd::Surface(c) => surface(c),
        Cmd::Replay(a) => {
            let text = a.text;
            match replay(a) {
                Ok((_, t)) if text => {
                    print!("{t}");
                    return ExitCode::SUCCESS;
                }
                r => r.map(|(v, _)| v),
            }
        }
        Cmd::Selftest(a) => {
            let opts = Options {
                seed: a.seed,
                filter: a.filter,
                fault: a.inject_fault.map(|FaultArg::TraceTable| Fault::TraceTable),
            };
            let report = selftest::run(&opts);
            for r in &report.results {
                eprintln!("{}", r.line());
            }
            println!("{}", report.to_json());
            return if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match result {
        Ok(v) => {
            emit(v);
            ExitCode::SUCCESS
        }
        Err(e) => {
            emit(json!({"error": {"kind": e.kind, "message": e.message}}));
            ExitCode::from(1)
        }
    }
}
