//! Subcommand definitions and their handlers.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use exactlab_core::analysis::{
    besov_norm_mc, cm_norm, grid_lp_norm, holder_norm, modulus_of_continuity, taylor_eval_1d,
    zygmund_norm, Lp,
};
use exactlab_core::distributions::{
    bump, distr_derivative_apply, fourier_quadrature_1d, Functional,
};
use exactlab_core::groups::{CayleyGroup, Permutation};
use exactlab_core::linalg::{
    classify, image_basis, inverse, kernel_basis, matrix_from_json, matrix_to_json, MatrixData,
};
use exactlab_core::measure::{
    integrate_simple, interval_union_from_json, interval_union_to_json, lebesgue_measure,
    simple_function_from_json,
};
use exactlab_core::metric::{
    ball_members, completion_distance, epsilon_net_greedy, metric_failure, rational_line_distance,
    FiniteMetricSpace,
};
use exactlab_core::numbers::{supremum_bisect, Rational};
use exactlab_core::quotient::{partition, verify_equivalence};

use crate::inputs;
use crate::report::{float_value, Report};
use crate::DomainError;

#[derive(Parser)]
#[command(
    name = "exactlab",
    version,
    about = "Exact-arithmetic constructions and sampled-function analysis, batch style",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Verify equivalence axioms or partition a finite carrier.
    #[command(subcommand)]
    Quotient(QuotientCmd),
    /// Approximate computable reals and bisection suprema.
    #[command(subcommand)]
    Real(RealCmd),
    /// Exact rational arithmetic.
    #[command(subcommand)]
    Rat(RatCmd),
    /// Permutation groups: composition, inverses, subgroups, cosets.
    #[command(subcommand)]
    Perm(PermCmd),
    /// Exact matrix algebra.
    #[command(subcommand)]
    Matrix(MatrixCmd),
    /// Finite metric spaces and completion distances.
    #[command(subcommand)]
    Metric(MetricCmd),
    /// Interval-union measures and simple-function integrals.
    #[command(subcommand)]
    Measure(MeasureCmd),
    /// Norm estimators on sampled functions.
    #[command(subcommand)]
    Norms(NormsCmd),
    /// Polynomial expansion with a remainder bound.
    Taylor(TaylorArgs),
    /// Distribution functionals paired with test functions.
    #[command(subcommand)]
    Dist(DistCmd),
    /// Quadrature Fourier transform of a 1-D sample.
    Fourier(FourierArgs),
}

#[derive(Subcommand)]
pub enum QuotientCmd {
    /// Check reflexivity, symmetry and transitivity on the carrier.
    Verify(QuotientArgs),
    /// Split the carrier into equivalence classes.
    Partition(QuotientArgs),
}

#[derive(Args)]
pub struct QuotientArgs {
    /// Comma-separated integers, e.g. -2,-1,0,1,2
    #[arg(long, allow_hyphen_values = true)]
    pub carrier: String,
    /// equality | square | mod:<k> | le
    #[arg(long)]
    pub relation: String,
}

#[derive(Subcommand)]
pub enum RealCmd {
    /// Rational approximation of a named real within --eps.
    Approx(RealApproxArgs),
    /// Least upper bound by interval halving against a named predicate.
    Sup(RealSupArgs),
}

#[derive(Args)]
pub struct RealApproxArgs {
    /// const:<q> | recip-succ
    #[arg(long)]
    pub real: String,
    /// Positive rational accuracy, e.g. 1/100
    #[arg(long)]
    pub eps: String,
}

#[derive(Args)]
pub struct RealSupArgs {
    /// Bracket "lo,hi": lo must fail the predicate, hi satisfy it.
    #[arg(long, allow_hyphen_values = true)]
    pub bracket: String,
    /// Number of halving steps.
    #[arg(long)]
    pub steps: u64,
    /// ge:<q> | sq_ge:<c>
    #[arg(long)]
    pub predicate: String,
}

#[derive(Subcommand)]
pub enum RatCmd {
    /// Evaluate an exact expression over integers with + - * / and parens.
    Eval(RatEvalArgs),
}

#[derive(Args)]
pub struct RatEvalArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub expr: String,
}

#[derive(Subcommand)]
pub enum PermCmd {
    /// Compose two permutations: apply --q first, then --p.
    Compose(PermPairArgs),
    /// Invert a permutation.
    Inverse(PermSingleArgs),
    /// Test the two-condition subgroup criterion inside the full
    /// permutation group of the given degree.
    Subgroup(PermSubsetArgs),
    /// Left cosets of a subgroup of the full permutation group.
    Cosets(PermSubsetArgs),
}

#[derive(Args)]
pub struct PermPairArgs {
    /// Image list, e.g. "2 3 1"
    #[arg(long)]
    pub p: String,
    #[arg(long)]
    pub q: String,
}

#[derive(Args)]
pub struct PermSingleArgs {
    #[arg(long)]
    pub p: String,
}

#[derive(Args)]
pub struct PermSubsetArgs {
    /// Degree n of the ambient permutation group (n <= 8).
    #[arg(long)]
    pub degree: usize,
    /// Semicolon-separated image lists, e.g. "1 2 3; 2 1 3"
    #[arg(long)]
    pub elements: String,
}

#[derive(Subcommand)]
pub enum MatrixCmd {
    /// Product of two matrices from JSON files.
    Mul(MatrixPairArgs),
    /// Entrywise sum.
    Add(MatrixPairArgs),
    /// Exact inverse, or an error for singular input.
    Inv(MatrixSingleArgs),
    /// Basis of the null space.
    Kernel(MatrixSingleArgs),
    /// Symmetric / hermitian / orthogonal / unitary flags.
    Classify(MatrixSingleArgs),
}

#[derive(Args)]
pub struct MatrixPairArgs {
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: String,
}

#[derive(Args)]
pub struct MatrixSingleArgs {
    #[arg(long)]
    pub a: String,
}

#[derive(Subcommand)]
pub enum MetricCmd {
    /// Greedy epsilon-net over a finite metric space from JSON.
    Net(MetricNetArgs),
    /// Completion distance between two named Cauchy sequences of
    /// rationals, probed at --eps.
    CompleteDist(MetricDistArgs),
    /// Members of a ball in a finite metric space.
    Ball(MetricBallArgs),
}

#[derive(Args)]
pub struct MetricNetArgs {
    #[arg(long)]
    pub space: String,
    #[arg(long)]
    pub eps: String,
}

#[derive(Args)]
pub struct MetricDistArgs {
    /// const:<q> | recip-succ
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, allow_hyphen_values = true)]
    pub y: String,
    #[arg(long)]
    pub eps: String,
}

#[derive(Args)]
pub struct MetricBallArgs {
    #[arg(long)]
    pub space: String,
    #[arg(long, allow_hyphen_values = true)]
    pub center: String,
    #[arg(long)]
    pub radius: String,
    /// Use the closed ball (non-strict inequality).
    #[arg(long, default_value_t = false)]
    pub closed: bool,
}

#[derive(Subcommand)]
pub enum MeasureCmd {
    /// Total length of an interval union from JSON.
    Measure(MeasureSetArgs),
    /// Exact integral of a simple function over an interval union.
    Integrate(MeasureIntegrateArgs),
}

#[derive(Args)]
pub struct MeasureSetArgs {
    #[arg(long)]
    pub set: String,
}

#[derive(Args)]
pub struct MeasureIntegrateArgs {
    #[arg(long)]
    pub simple: String,
    #[arg(long)]
    pub over: String,
}

#[derive(Subcommand)]
pub enum NormsCmd {
    /// Discrete Lp norm of a sampled function.
    Lp(NormsLpArgs),
    /// C^m norm estimate from difference stencils.
    Cm(NormsOrderArgs),
    /// Hoelder norm for non-integer order --s.
    Holder(NormsSArgs),
    /// Zygmund norm for integer order --m.
    Zygmund(NormsOrderArgs),
    /// Besov norm in moduli-of-continuity form.
    Besov(NormsBesovArgs),
    /// Modulus of continuity omega_(m,p)(f, t).
    Omega(NormsOmegaArgs),
}

#[derive(Args)]
pub struct NormsLpArgs {
    /// Sampled function as .json or .csv.
    #[arg(long)]
    pub input: String,
    /// Exponent: a number >= 1 or "inf".
    #[arg(long)]
    pub p: String,
}

#[derive(Args)]
pub struct NormsOrderArgs {
    #[arg(long)]
    pub input: String,
    #[arg(long)]
    pub m: u32,
}

#[derive(Args)]
pub struct NormsSArgs {
    #[arg(long)]
    pub input: String,
    #[arg(long)]
    pub s: f64,
}

#[derive(Args)]
pub struct NormsBesovArgs {
    #[arg(long)]
    pub input: String,
    #[arg(long)]
    pub s: f64,
    #[arg(long)]
    pub p: String,
    #[arg(long)]
    pub q: String,
    #[arg(long)]
    pub m: u32,
    #[arg(long, default_value_t = 8)]
    pub levels: u32,
}

#[derive(Args)]
pub struct NormsOmegaArgs {
    #[arg(long)]
    pub input: String,
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub p: String,
    #[arg(long)]
    pub t: f64,
}

#[derive(Args)]
pub struct TaylorArgs {
    /// Comma-separated derivative values f(x0), f'(x0), ...
    #[arg(long, allow_hyphen_values = true)]
    pub derivs: String,
    #[arg(long, allow_hyphen_values = true)]
    pub x0: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,
    /// Bound on the next derivative for the remainder estimate.
    #[arg(long)]
    pub bound: f64,
}

#[derive(Subcommand)]
pub enum DistCmd {
    /// Pair a functional with a test function.
    Apply(DistApplyArgs),
}

#[derive(Args)]
pub struct DistApplyArgs {
    /// dirac | pv | regular:one | regular:heaviside | regular:x |
    /// regular:sin | regular:recip
    #[arg(long)]
    pub functional: String,
    /// bump:<center>,<radius>
    #[arg(long, allow_hyphen_values = true)]
    pub testfn: String,
    /// Derivative order of the functional (pairing rule with sign).
    #[arg(long, default_value_t = 0)]
    pub derivative: u32,
    /// Dyadic exclusion levels available to the principal value.
    #[arg(long, default_value_t = 40)]
    pub levels: u32,
}

#[derive(Args)]
pub struct FourierArgs {
    /// 1-D sampled function as .json or .csv.
    #[arg(long)]
    pub input: String,
    /// Comma-separated frequencies.
    #[arg(long, allow_hyphen_values = true)]
    pub at: String,
}

pub fn run(cli: Cli) -> Result<Report, DomainError> {
    match cli.command {
        Command::Quotient(cmd) => run_quotient(cmd),
        Command::Real(cmd) => run_real(cmd),
        Command::Rat(cmd) => run_rat(cmd),
        Command::Perm(cmd) => run_perm(cmd),
        Command::Matrix(cmd) => run_matrix(cmd),
        Command::Metric(cmd) => run_metric(cmd),
        Command::Measure(cmd) => run_measure(cmd),
        Command::Norms(cmd) => run_norms(cmd),
        Command::Taylor(args) => run_taylor(args),
        Command::Dist(cmd) => run_dist(cmd),
        Command::Fourier(args) => run_fourier(args),
    }
}

fn run_quotient(cmd: QuotientCmd) -> Result<Report, DomainError> {
    let (name, args, want_partition) = match cmd {
        QuotientCmd::Verify(a) => ("quotient verify", a, false),
        QuotientCmd::Partition(a) => ("quotient partition", a, true),
    };
    let carrier = inputs::parse_carrier(&args.carrier)?;
    let rel = inputs::parse_relation(&args.relation)?;
    let inputs = json!({"carrier": carrier, "relation": args.relation});
    if want_partition {
        let p = partition(&carrier, &rel).map_err(|e| DomainError(e.to_string()))?;
        Ok(Report::new(
            name,
            inputs,
            json!({"classes": p.classes()}),
            json!({"class_count": p.len()}),
        ))
    } else {
        let holds = verify_equivalence(&carrier, &rel);
        Ok(Report::new(name, inputs, json!({"holds": holds}), json!({})))
    }
}

fn run_real(cmd: RealCmd) -> Result<Report, DomainError> {
    match cmd {
        RealCmd::Approx(args) => {
            let real = inputs::parse_real(&args.real)?;
            let eps = inputs::parse_rational(&args.eps)?;
            if !eps.is_positive() {
                return Err(DomainError("accuracy must be positive".into()));
            }
            let q = real.approx(&eps);
            Ok(Report::new(
                "real approx",
                json!({"real": args.real, "eps": eps.to_string()}),
                json!({"approx": q.to_string(), "decimal": crate::report::fmt_f64(q.to_f64())}),
                json!({"index": real.modulus(&eps)}),
            ))
        }
        RealCmd::Sup(args) => {
            let (lo, hi) = args
                .bracket
                .split_once(',')
                .ok_or_else(|| DomainError("bracket must be \"lo,hi\"".into()))?;
            let lo = inputs::parse_rational(lo)?;
            let hi = inputs::parse_rational(hi)?;
            let pred = inputs::parse_predicate(&args.predicate)?;
            let sup = supremum_bisect(pred, &lo, &hi, args.steps)
                .map_err(|e| DomainError(e.to_string()))?;
            // After all steps the bracket width pins the accuracy.
            let mut eps = &hi - &lo;
            let two = Rational::from_int(2);
            for _ in 0..args.steps {
                eps = &eps / &two;
            }
            let q = sup.approx(&eps);
            Ok(Report::new(
                "real sup",
                json!({
                    "bracket": [lo.to_string(), hi.to_string()],
                    "predicate": args.predicate,
                    "steps": args.steps,
                }),
                json!({"approx": q.to_string(), "decimal": crate::report::fmt_f64(q.to_f64())}),
                json!({"accuracy": eps.to_string()}),
            ))
        }
    }
}

fn run_rat(cmd: RatCmd) -> Result<Report, DomainError> {
    match cmd {
        RatCmd::Eval(args) => {
            let value = inputs::eval_rational_expr(&args.expr)?;
            Ok(Report::new(
                "rat eval",
                json!({"expr": args.expr}),
                json!({"value": value.to_string(), "decimal": crate::report::fmt_f64(value.to_f64())}),
                json!({}),
            ))
        }
    }
}

fn parse_perm(s: &str) -> Result<Permutation, DomainError> {
    s.parse().map_err(|e: exactlab_core::groups::GroupError| {
        DomainError(e.to_string())
    })
}

fn parse_perm_list(s: &str) -> Result<Vec<String>, DomainError> {
    s.split(';')
        .map(|part| Ok(parse_perm(part.trim())?.to_string()))
        .collect()
}

fn run_perm(cmd: PermCmd) -> Result<Report, DomainError> {
    match cmd {
        PermCmd::Compose(args) => {
            let p = parse_perm(&args.p)?;
            let q = parse_perm(&args.q)?;
            let r = p.compose(&q).map_err(|e| DomainError(e.to_string()))?;
            Ok(Report::new(
                "perm compose",
                json!({"p": args.p, "q": args.q}),
                json!({"image": r.to_string()}),
                json!({}),
            ))
        }
        PermCmd::Inverse(args) => {
            let p = parse_perm(&args.p)?;
            Ok(Report::new(
                "perm inverse",
                json!({"p": args.p}),
                json!({"image": p.inverse().to_string()}),
                json!({}),
            ))
        }
        PermCmd::Subgroup(args) => {
            let g = CayleyGroup::symmetric(args.degree).map_err(|e| DomainError(e.to_string()))?;
            let labels = parse_perm_list(&args.elements)?;
            let holds = g
                .is_subgroup(&labels)
                .map_err(|e| DomainError(e.to_string()))?;
            Ok(Report::new(
                "perm subgroup",
                json!({"degree": args.degree, "elements": labels}),
                json!({"is_subgroup": holds}),
                json!({"group_order": g.order()}),
            ))
        }
        PermCmd::Cosets(args) => {
            let g = CayleyGroup::symmetric(args.degree).map_err(|e| DomainError(e.to_string()))?;
            let labels = parse_perm_list(&args.elements)?;
            let cosets = g
                .left_cosets(&labels)
                .map_err(|e| DomainError(e.to_string()))?;
            Ok(Report::new(
                "perm cosets",
                json!({"degree": args.degree, "subgroup": labels}),
                json!({"cosets": cosets.classes()}),
                json!({"coset_count": cosets.len()}),
            ))
        }
    }
}

fn load_matrix(path: &str) -> Result<MatrixData, DomainError> {
    let value = inputs::load_json(path)?;
    matrix_from_json(&value).map_err(|e| DomainError(format!("{path}: {e}")))
}

fn run_matrix(cmd: MatrixCmd) -> Result<Report, DomainError> {
    match cmd {
        MatrixCmd::Mul(args) => {
            let a = load_matrix(&args.a)?;
            let b = load_matrix(&args.b)?;
            let product = match (&a, &b) {
                (MatrixData::Rational(x), MatrixData::Rational(y)) => {
                    MatrixData::Rational(x.mul(y).map_err(|e| DomainError(e.to_string()))?)
                }
                _ => {
                    let x = a.clone().into_complex();
                    let y = b.clone().into_complex();
                    MatrixData::Complex(x.mul(&y).map_err(|e| DomainError(e.to_string()))?)
                }
            };
            Ok(Report::new(
                "matrix mul",
                json!({"a": args.a, "b": args.b}),
                json!({"matrix": matrix_to_json(&product)}),
                shape_diag(&product),
            ))
        }
        MatrixCmd::Add(args) => {
            let a = load_matrix(&args.a)?;
            let b = load_matrix(&args.b)?;
            let sum = match (&a, &b) {
                (MatrixData::Rational(x), MatrixData::Rational(y)) => {
                    MatrixData::Rational(x.add(y).map_err(|e| DomainError(e.to_string()))?)
                }
                _ => {
                    let x = a.clone().into_complex();
                    let y = b.clone().into_complex();
                    MatrixData::Complex(x.add(&y).map_err(|e| DomainError(e.to_string()))?)
                }
            };
            Ok(Report::new(
                "matrix add",
                json!({"a": args.a, "b": args.b}),
                json!({"matrix": matrix_to_json(&sum)}),
                shape_diag(&sum),
            ))
        }
        MatrixCmd::Inv(args) => {
            let a = load_matrix(&args.a)?;
            let inv = match &a {
                MatrixData::Rational(m) => {
                    MatrixData::Rational(inverse(m).map_err(|e| DomainError(e.to_string()))?)
                }
                MatrixData::Complex(m) => {
                    MatrixData::Complex(inverse(m).map_err(|e| DomainError(e.to_string()))?)
                }
            };
            Ok(Report::new(
                "matrix inv",
                json!({"a": args.a}),
                json!({"matrix": matrix_to_json(&inv)}),
                shape_diag(&inv),
            ))
        }
        MatrixCmd::Kernel(args) => {
            let a = load_matrix(&args.a)?;
            let (vectors, rank): (Vec<Value>, usize) = match &a {
                MatrixData::Rational(m) => {
                    let basis = kernel_basis(m);
                    let rank = image_basis(m).len();
                    (
                        basis
                            .iter()
                            .map(|v| matrix_to_json(&MatrixData::Rational(v.clone())))
                            .collect(),
                        rank,
                    )
                }
                MatrixData::Complex(m) => {
                    let basis = kernel_basis(m);
                    let rank = image_basis(m).len();
                    (
                        basis
                            .iter()
                            .map(|v| matrix_to_json(&MatrixData::Complex(v.clone())))
                            .collect(),
                        rank,
                    )
                }
            };
            Ok(Report::new(
                "matrix kernel",
                json!({"a": args.a}),
                json!({"basis": vectors}),
                json!({"rank": rank, "nullity": a.cols() - rank}),
            ))
        }
        MatrixCmd::Classify(args) => {
            let a = load_matrix(&args.a)?;
            let flags = match &a {
                MatrixData::Rational(m) => classify(m),
                MatrixData::Complex(m) => classify(m),
            }
            .map_err(|e| DomainError(e.to_string()))?;
            Ok(Report::new(
                "matrix classify",
                json!({"a": args.a}),
                json!({
                    "symmetric": flags.symmetric,
                    "hermitian": flags.hermitian,
                    "orthogonal": flags.orthogonal,
                    "unitary": flags.unitary,
                }),
                shape_diag(&a),
            ))
        }
    }
}

fn shape_diag(m: &MatrixData) -> Value {
    json!({"rows": m.rows(), "cols": m.cols()})
}

fn load_space(path: &str) -> Result<FiniteMetricSpace, DomainError> {
    let text = inputs::load_text(path)?;
    let space: FiniteMetricSpace = serde_json::from_str(&text)
        .map_err(|e| DomainError(format!("cannot parse {path}: {e}")))?;
    FiniteMetricSpace::new(space.points, space.dist)
        .map_err(|e| DomainError(format!("{path}: {e}")))
}

fn run_metric(cmd: MetricCmd) -> Result<Report, DomainError> {
    match cmd {
        MetricCmd::Net(args) => {
            let space = load_space(&args.space)?;
            let eps = inputs::parse_rational(&args.eps)?;
            if !eps.is_positive() {
                return Err(DomainError("net radius must be positive".into()));
            }
            let verified = metric_failure(&space);
            let centers: Vec<String> = epsilon_net_greedy(&space, &eps)
                .into_iter()
                .map(str::to_string)
                .collect();
            Ok(Report::new(
                "metric net",
                json!({"space": args.space, "eps": eps.to_string()}),
                json!({"centers": centers}),
                json!({
                    "metric_verified": verified.is_none(),
                    "metric_failure": verified,
                }),
            ))
        }
        MetricCmd::CompleteDist(args) => {
            let x = inputs::parse_cauchy_point(&args.x)?;
            let y = inputs::parse_cauchy_point(&args.y)?;
            let eps = inputs::parse_rational(&args.eps)?;
            if !eps.is_positive() {
                return Err(DomainError("probe accuracy must be positive".into()));
            }
            let dist = rational_line_distance();
            let d = completion_distance(&x, &y, &dist, &eps);
            Ok(Report::new(
                "metric complete-dist",
                json!({"x": args.x, "y": args.y, "eps": eps.to_string()}),
                json!({"distance": d.to_string(), "decimal": crate::report::fmt_f64(d.to_f64())}),
                json!({}),
            ))
        }
        MetricCmd::Ball(args) => {
            let space = load_space(&args.space)?;
            let radius = inputs::parse_rational(&args.radius)?;
            let members: Vec<String> = ball_members(&space, &args.center, &radius, args.closed)
                .map_err(|e| DomainError(e.to_string()))?
                .into_iter()
                .map(str::to_string)
                .collect();
            Ok(Report::new(
                "metric ball",
                json!({
                    "space": args.space,
                    "center": args.center,
                    "radius": radius.to_string(),
                    "closed": args.closed,
                }),
                json!({"members": members}),
                json!({}),
            ))
        }
    }
}

fn run_measure(cmd: MeasureCmd) -> Result<Report, DomainError> {
    match cmd {
        MeasureCmd::Measure(args) => {
            let set = interval_union_from_json(&inputs::load_json(&args.set)?)
                .map_err(|e| DomainError(e.to_string()))?;
            let total = lebesgue_measure(&set);
            Ok(Report::new(
                "measure measure",
                json!({"set": args.set}),
                json!({"measure": total.to_string()}),
                json!({"normalized": interval_union_to_json(&set)}),
            ))
        }
        MeasureCmd::Integrate(args) => {
            let simple = simple_function_from_json(&inputs::load_json(&args.simple)?)
                .map_err(|e| DomainError(e.to_string()))?;
            let over = interval_union_from_json(&inputs::load_json(&args.over)?)
                .map_err(|e| DomainError(e.to_string()))?;
            let value = integrate_simple(&simple, &over);
            Ok(Report::new(
                "measure integrate",
                json!({"simple": args.simple, "over": args.over}),
                json!({"integral": value.to_string()}),
                json!({"term_count": simple.terms().len()}),
            ))
        }
    }
}

fn parse_lp(s: &str) -> Result<Lp, DomainError> {
    s.parse().map_err(|e: exactlab_core::analysis::AnalysisError| {
        DomainError(e.to_string())
    })
}

fn run_norms(cmd: NormsCmd) -> Result<Report, DomainError> {
    match cmd {
        NormsCmd::Lp(args) => {
            let f = inputs::load_sampled(&args.input)?;
            let p = parse_lp(&args.p)?;
            let value = grid_lp_norm(&f, p);
            Ok(Report::new(
                "norms lp",
                json!({"input": args.input, "p": p.to_string()}),
                json!({"norm": float_value(value)}),
                sample_diag(&f),
            ))
        }
        NormsCmd::Cm(args) => {
            let f = inputs::load_sampled(&args.input)?;
            let value = cm_norm(&f, args.m).map_err(|e| DomainError(e.to_string()))?;
            Ok(Report::new(
                "norms cm",
                json!({"input": args.input, "m": args.m}),
                json!({"norm": float_value(value)}),
                sample_diag(&f),
            ))
        }
        NormsCmd::Holder(args) => {
            let f = inputs::load_sampled(&args.input)?;
            let value = holder_norm(&f, args.s).map_err(|e| DomainError(e.to_string()))?;
            Ok(Report::new(
                "norms holder",
                json!({"input": args.input, "s": float_value(args.s)}),
                json!({"norm": float_value(value)}),
                sample_diag(&f),
            ))
        }
        NormsCmd::Zygmund(args) => {
            let f = inputs::load_sampled(&args.input)?;
            let value = zygmund_norm(&f, args.m).map_err(|e| DomainError(e.to_string()))?;
            Ok(Report::new(
                "norms zygmund",
                json!({"input": args.input, "m": args.m}),
                json!({"norm": float_value(value)}),
                sample_diag(&f),
            ))
        }
        NormsCmd::Besov(args) => {
            let f = inputs::load_sampled(&args.input)?;
            let p = parse_lp(&args.p)?;
            let q = parse_lp(&args.q)?;
            let value = besov_norm_mc(&f, args.s, p, q, args.m, args.levels)
                .map_err(|e| DomainError(e.to_string()))?;
            Ok(Report::new(
                "norms besov",
                json!({
                    "input": args.input,
                    "s": float_value(args.s),
                    "p": p.to_string(),
                    "q": q.to_string(),
                    "m": args.m,
                    "levels": args.levels,
                }),
                json!({"norm": float_value(value)}),
                sample_diag(&f),
            ))
        }
        NormsCmd::Omega(args) => {
            let f = inputs::load_sampled(&args.input)?;
            let p = parse_lp(&args.p)?;
            let radius_valid = args.t.is_finite() && args.t >= 0.0;
            if !radius_valid {
                return Err(DomainError("radius t must be non-negative".into()));
            }
            let value = modulus_of_continuity(&f, args.m, p, args.t);
            Ok(Report::new(
                "norms omega",
                json!({
                    "input": args.input,
                    "m": args.m,
                    "p": p.to_string(),
                    "t": float_value(args.t),
                }),
                json!({"omega": float_value(value)}),
                sample_diag(&f),
            ))
        }
    }
}

fn sample_diag(f: &exactlab_core::analysis::SampledFunction) -> Value {
    json!({
        "dim": f.dim(),
        "points": f.len(),
        "spacing": float_value(f.grid.spacing),
    })
}

fn run_taylor(args: TaylorArgs) -> Result<Report, DomainError> {
    let derivs: Result<Vec<f64>, _> = args
        .derivs
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect();
    let derivs = derivs.map_err(|e| DomainError(format!("bad derivative list: {e}")))?;
    if derivs.is_empty() {
        return Err(DomainError("need at least the value f(x0)".into()));
    }
    if args.bound < 0.0 {
        return Err(DomainError("derivative bound must be non-negative".into()));
    }
    let t = taylor_eval_1d(&derivs, args.x0, args.x, args.bound);
    Ok(Report::new(
        "taylor",
        json!({
            "derivs": derivs.iter().map(|&d| float_value(d)).collect::<Vec<_>>(),
            "x0": float_value(args.x0),
            "x": float_value(args.x),
            "bound": float_value(args.bound),
        }),
        json!({
            "value": float_value(t.value),
            "remainder_bound": float_value(t.remainder_bound),
        }),
        json!({"order": derivs.len() - 1}),
    ))
}

fn parse_functional(spec: &str, levels: u32) -> Result<Functional, DomainError> {
    if let Some(f) = spec.strip_prefix("regular:") {
        let inner: Functional = match f {
            "one" => Functional::regular(|_| 1.0),
            "heaviside" => Functional::heaviside(),
            "x" => Functional::regular(|x| x),
            "sin" => Functional::regular(f64::sin),
            "recip" => Functional::regular(|x: f64| 1.0 / x),
            other => {
                return Err(DomainError(format!(
                    "unknown density {other:?}; expected one, heaviside, x, sin or recip"
                )))
            }
        };
        return Ok(inner);
    }
    match spec {
        "dirac" => Ok(Functional::Dirac),
        "pv" => Ok(Functional::PrincipalValue { eps_levels: levels }),
        // Bare "regular" pairs against the constant density 1.
        "regular" => Ok(Functional::regular(|_| 1.0)),
        other => Err(DomainError(format!(
            "unknown functional {other:?}; expected dirac, pv or regular:<density>"
        ))),
    }
}

fn parse_testfn(spec: &str) -> Result<exactlab_core::distributions::TestFunction, DomainError> {
    let Some(params) = spec.strip_prefix("bump:") else {
        return Err(DomainError(format!(
            "unknown test function {spec:?}; expected bump:<center>,<radius>"
        )));
    };
    let (c, r) = params
        .split_once(',')
        .ok_or_else(|| DomainError("bump needs center,radius".into()))?;
    let center: f64 = c
        .trim()
        .parse()
        .map_err(|e| DomainError(format!("bad center: {e}")))?;
    let radius: f64 = r
        .trim()
        .parse()
        .map_err(|e| DomainError(format!("bad radius: {e}")))?;
    let radius_valid = radius.is_finite() && radius > 0.0;
    if !radius_valid {
        return Err(DomainError("bump radius must be positive".into()));
    }
    Ok(bump(center, radius))
}

fn run_dist(cmd: DistCmd) -> Result<Report, DomainError> {
    match cmd {
        DistCmd::Apply(args) => {
            let functional = parse_functional(&args.functional, args.levels)?;
            let phi = parse_testfn(&args.testfn)?;
            let value = distr_derivative_apply(&functional, args.derivative, &phi)
                .map_err(|e| DomainError(e.to_string()))?;
            Ok(Report::new(
                "dist apply",
                json!({
                    "functional": args.functional,
                    "testfn": args.testfn,
                    "derivative": args.derivative,
                }),
                json!({"value": float_value(value)}),
                json!({}),
            ))
        }
    }
}

fn run_fourier(args: FourierArgs) -> Result<Report, DomainError> {
    let f = inputs::load_sampled(&args.input)?;
    let frequencies: Result<Vec<f64>, _> = args
        .at
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect();
    let frequencies = frequencies.map_err(|e| DomainError(format!("bad frequency list: {e}")))?;
    let values =
        fourier_quadrature_1d(&f, &frequencies).map_err(|e| DomainError(e.to_string()))?;
    let rendered: Vec<Value> = frequencies
        .iter()
        .zip(&values)
        .map(|(&y, v)| {
            json!({
                "frequency": float_value(y),
                "re": float_value(v.re),
                "im": float_value(v.im),
            })
        })
        .collect();
    Ok(Report::new(
        "fourier",
        json!({"input": args.input, "at": frequencies.iter().map(|&y| float_value(y)).collect::<Vec<_>>()}),
        json!({"transform": rendered}),
        sample_diag(&f),
    ))
}
