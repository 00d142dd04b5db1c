//! Command-line front end. Every verb reads JSON (or prime-sequence flags),
//! calls one library routine and prints its result as canonical JSON.
//!
//! Exit codes: 0 success or a true decision, 1 a false decision, 2 bad
//! input, 3 a failed internal verification.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Read;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::Error;
use crate::freeprod::{partial_conjugation_power, straightening_pattern, FPElement, TupleElement};
use crate::groupring::{
    chain_check, cocompact_dual_check, equivariant_kernel_lift, kernel_split, ChainComplex, FiniteGroup, GRMatrix,
    IntMatrix,
};
use crate::perm::catalog::fixture_groups;
use crate::perm::{check_extension_lemmas, GroupSpec, PermGroup};
use crate::presentation::{gt_tower_epi, normal_form, semidirect_presentation, GenWord, Presentation, SemidirectData};
use crate::primes::PrimeSeq;
use crate::suite;
use crate::thompson::{Order, TreePair};
use crate::tower::{build_epi, iso_decide, ladder_search, outer_action_order, pro_distinct, LadderResult, ProDistinct};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VERIFICATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "collar-algebra", version, about = "Exact group-theoretic decision procedures and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print compact single-line JSON.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args, Debug, Clone)]
struct Input {
    /// JSON input: a file path, `-` for stdin, or inline JSON.
    #[arg(long)]
    input: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct GroupInput {
    #[command(flatten)]
    input: Input,
    /// A named group from the built-in catalog instead of `--input`.
    #[arg(long, conflicts_with = "input")]
    group: Option<String>,
    /// Closure size limit.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct Pair {
    #[arg(long, value_parser = parse_seq)]
    a: PrimeSeq,
    #[arg(long, value_parser = parse_seq)]
    b: PrimeSeq,
}

#[derive(Subcommand, Debug)]
enum Command {
    #[command(subcommand)]
    Perm(PermCmd),
    #[command(subcommand)]
    Thompson(ThompsonCmd),
    #[command(subcommand)]
    Freeprod(FreeprodCmd),
    #[command(subcommand)]
    Presentation(PresentationCmd),
    #[command(subcommand)]
    Tower(TowerCmd),
    #[command(subcommand)]
    Groupring(GroupringCmd),
    #[command(subcommand)]
    Suite(SuiteCmd),
}

#[derive(Subcommand, Debug)]
enum PermCmd {
    /// Orders of the derived series terms.
    DerivedSeries(GroupInput),
    /// The perfect core and the hypo-Abelian decision.
    PerfectCore(GroupInput),
    /// Both extension lemmas on one normal subgroup, or on all of them.
    ExtensionCheck(GroupInput),
}

#[derive(Subcommand, Debug)]
enum ThompsonCmd {
    /// Order of a tree pair, up to `--cap`.
    Order {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1000)]
        cap: usize,
    },
    /// `{"a": ..., "b": ...}` to `a b` (apply `b` first).
    Multiply(Input),
}

#[derive(Subcommand, Debug)]
enum FreeprodCmd {
    /// `{"u": ..., "w": ..., "power": k}` to `φ_u^k(w)`.
    PartialConj(Input),
    /// Straightening pattern of a homomorphism `S^n → S^m`.
    Pattern(Input),
}

#[derive(Subcommand, Debug)]
enum PresentationCmd {
    /// Moves kernel letters left of quotient letters.
    NormalForm(Input),
    /// Presentation of `K ⋊ Q` with slide relators.
    Semidirect(Input),
    /// The gt tower over a base presentation and its verified epimorphism.
    GtTower(Input),
}

#[derive(Subcommand, Debug)]
enum TowerCmd {
    /// Isomorphism of two tower levels.
    Iso(Pair),
    /// An explicit epimorphism `G_a → G_b`.
    Epi {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random pairs for the homomorphism check.
        #[arg(long, default_value_t = 200)]
        pairs: usize,
    },
    /// Whether the inverse sequences through `a` and `b` are distinct.
    ProDistinct(Pair),
    /// Bounded search for a zig-zag of epimorphisms.
    LadderSearch {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Order of the automorphism defining the level.
    Order {
        #[arg(long, value_parser = parse_seq)]
        a: PrimeSeq,
    },
}

#[derive(Subcommand, Debug)]
enum GroupringCmd {
    /// `{"theta": ..., "split": n}`: the kernel splitting isomorphisms.
    KernelSplit(Input),
    /// `{"d": ..., "group": ...}`: lift of an integer kernel to the cover.
    Lift(Input),
    /// Boundary and homology checks of a chain complex.
    ChainCheck(Input),
    /// `{"complex": ..., "section": ...}`: exactness of the dual.
    DualCheck(Input),
}

#[derive(Subcommand, Debug)]
enum SuiteCmd {
    /// The full acceptance battery.
    All {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_seq(s: &str) -> Result<PrimeSeq, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// What a finished invocation prints and returns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(m) => Failure::Verification(m),
            e => Failure::Input(e.to_string()),
        }
    }
}

type Reply = Result<(i32, Value), Failure>;

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize to JSON")
}

fn decision(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

fn checked(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_VERIFICATION
    }
}

fn read_text(input: &Input) -> Result<String, Failure> {
    let src = input.input.as_deref().ok_or_else(|| Failure::Input("--input is required".into()))?;
    let trimmed = src.trim_start();
    if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else if trimmed.starts_with('{') || trimmed.starts_with('[') {
        Ok(src.to_string())
    } else {
        std::fs::read_to_string(src).map_err(|e| Failure::Input(format!("{src}: {e}")))
    }
}

fn read<T: DeserializeOwned>(input: &Input) -> Result<T, Failure> {
    serde_json::from_str(&read_text(input)?).map_err(|e| Failure::Input(format!("malformed input: {e}")))
}

fn build_group(spec: GroupSpec, cap: Option<usize>) -> Result<PermGroup, Failure> {
    Ok(match cap {
        Some(cap) => PermGroup::generate_with_cap(spec.degree, spec.generators, cap)?,
        None => PermGroup::from_spec(spec)?,
    })
}

fn catalog_group(name: &str) -> Result<PermGroup, Failure> {
    fixture_groups()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| e.group)
        .ok_or_else(|| Failure::Input(format!("no catalog group named {name:?}")))
}

fn group_of(g: &GroupInput) -> Result<PermGroup, Failure> {
    match &g.group {
        Some(name) => catalog_group(name),
        None => build_group(read(&g.input)?, g.cap),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtensionInput {
    group: GroupSpec,
    normal: Option<GroupSpec>,
}

fn perm(cmd: PermCmd) -> Reply {
    match cmd {
        PermCmd::DerivedSeries(g) => {
            let series = group_of(&g)?.derived_series()?;
            let orders: Vec<usize> = series.iter().map(PermGroup::order).collect();
            let terms: Vec<GroupSpec> = series.iter().map(PermGroup::to_spec).collect();
            Ok((EXIT_OK, json!({ "orders": orders, "terms": terms })))
        }
        PermCmd::PerfectCore(g) => {
            let group = group_of(&g)?;
            let core = group.perfect_core()?;
            Ok((
                EXIT_OK,
                json!({
                    "core": core.to_spec(),
                    "core_order": core.order(),
                    "hypo_abelian": core.is_trivial(),
                    "perfect": group.is_perfect()?,
                }),
            ))
        }
        PermCmd::ExtensionCheck(g) => {
            let (group, normals) = match &g.group {
                Some(name) => {
                    let group = catalog_group(name)?;
                    let normals = group.normal_subgroups()?;
                    (group, normals)
                }
                None => {
                    let input: ExtensionInput = read(&g.input)?;
                    let group = build_group(input.group, g.cap)?;
                    let normals = match input.normal {
                        Some(n) => vec![build_group(n, g.cap)?],
                        None => group.normal_subgroups()?,
                    };
                    (group, normals)
                }
            };
            let reports = normals.iter().map(|n| check_extension_lemmas(&group, n)).collect::<Result<Vec<_>, _>>()?;
            let holds = reports.iter().all(|r| r.holds());
            Ok((checked(holds), json!({ "holds": holds, "reports": reports })))
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MultiplyInput {
    a: TreePair,
    b: TreePair,
}

fn thompson(cmd: ThompsonCmd) -> Reply {
    match cmd {
        ThompsonCmd::Order { input, cap } => {
            let x: TreePair = read(&input)?;
            Ok(match x.order(cap) {
                Order::Finite(n) => (EXIT_OK, json!({ "order": n })),
                Order::ExceedsCap => (EXIT_FALSE, json!({ "order": null, "exceeds_cap": cap })),
            })
        }
        ThompsonCmd::Multiply(input) => {
            let m: MultiplyInput = read(&input)?;
            Ok((EXIT_OK, to_value(&m.a.multiply(&m.b))))
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PartialConjInput {
    u: TreePair,
    w: FPElement,
    #[serde(default = "one")]
    power: i64,
}

fn one() -> i64 {
    1
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PatternInput {
    images: Vec<Vec<TupleElement>>,
    m: usize,
}

fn freeprod(cmd: FreeprodCmd) -> Reply {
    match cmd {
        FreeprodCmd::PartialConj(input) => {
            let p: PartialConjInput = read(&input)?;
            Ok((EXIT_OK, to_value(&partial_conjugation_power(&p.u, p.power, &p.w))))
        }
        FreeprodCmd::Pattern(input) => {
            let p: PatternInput = read(&input)?;
            Ok((EXIT_OK, to_value(&straightening_pattern(&p.images, p.m)?)))
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NormalFormInput {
    word: GenWord,
    semidirect: SemidirectData,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SemidirectInput {
    kernel: Presentation,
    quotient: Presentation,
    semidirect: SemidirectData,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GtInput {
    presentation: Presentation,
    t0: String,
    j: usize,
}

fn presentation(cmd: PresentationCmd) -> Reply {
    match cmd {
        PresentationCmd::NormalForm(input) => {
            let p: NormalFormInput = read(&input)?;
            Ok((EXIT_OK, json!({ "word": normal_form(&p.word, &p.semidirect)? })))
        }
        PresentationCmd::Semidirect(input) => {
            let p: SemidirectInput = read(&input)?;
            Ok((EXIT_OK, to_value(&semidirect_presentation(&p.kernel, &p.quotient, &p.semidirect)?)))
        }
        PresentationCmd::GtTower(input) => {
            let p: GtInput = read(&input)?;
            let epi = gt_tower_epi(&p.presentation, &p.t0, p.j)?;
            let failing = epi.verify()?;
            let mut out = to_value(&epi);
            out["verified"] = json!(failing.is_none());
            if let Some(i) = failing {
                out["failing_relator"] = json!(i);
            }
            Ok((checked(failing.is_none()), out))
        }
    }
}

fn tower(cmd: TowerCmd) -> Reply {
    match cmd {
        TowerCmd::Iso(Pair { a, b }) => {
            let d = iso_decide(&a, &b);
            Ok((decision(d.iso), to_value(&d)))
        }
        TowerCmd::Epi { pair: Pair { a, b }, seed, pairs } => match build_epi(&a, &b) {
            Ok(epi) => {
                let verified = epi.verify(&mut ChaCha8Rng::seed_from_u64(seed), pairs)?;
                let mut out = to_value(&epi);
                out["epi"] = json!(true);
                out["verified"] = json!(verified);
                Ok((checked(verified), out))
            }
            Err(Error::NoEpimorphism { missing }) => Ok((EXIT_FALSE, json!({ "epi": false, "missing": missing }))),
            Err(e) => Err(e.into()),
        },
        TowerCmd::ProDistinct(Pair { a, b }) => {
            let d = pro_distinct(&a, &b)?;
            Ok((decision(matches!(d, ProDistinct::Distinct { .. })), to_value(&d)))
        }
        TowerCmd::LadderSearch { pair: Pair { a, b }, depth } => {
            let r = ladder_search(&a, &b, depth);
            Ok((decision(matches!(r, LadderResult::Found { .. })), to_value(&r)))
        }
        TowerCmd::Order { a } => {
            let r = outer_action_order(&a)?;
            let mut out = to_value(&r);
            out["certified"] = json!(r.certified());
            Ok((checked(r.certified()), out))
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SplitInput {
    theta: GRMatrix,
    split: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LiftInput {
    d: IntMatrix,
    group: FiniteGroup,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DualInput {
    complex: ChainComplex,
    section: Option<GRMatrix>,
}

fn groupring(cmd: GroupringCmd) -> Reply {
    match cmd {
        GroupringCmd::KernelSplit(input) => {
            let p: SplitInput = read(&input)?;
            let s = kernel_split(&p.theta, p.split)?;
            let mut out = to_value(&s);
            out["verified"] = json!(s.verified());
            Ok((checked(s.verified()), out))
        }
        GroupringCmd::Lift(input) => {
            let p: LiftInput = read(&input)?;
            let l = equivariant_kernel_lift(&p.d, &p.group)?;
            let mut out = to_value(&l);
            out["certified"] = json!(l.certified());
            Ok((checked(l.certified()), out))
        }
        GroupringCmd::ChainCheck(input) => {
            let cx: ChainComplex = read(&input)?;
            let r = chain_check(&cx)?;
            Ok((decision(r.acyclic), to_value(&r)))
        }
        GroupringCmd::DualCheck(input) => {
            let p: DualInput = read(&input)?;
            let r = cocompact_dual_check(&p.complex, p.section.as_ref())?;
            let mut out = to_value(&r);
            out["holds"] = json!(r.holds());
            Ok((checked(r.holds()), out))
        }
    }
}

fn suite_cmd(cmd: SuiteCmd) -> Reply {
    let SuiteCmd::All { seed } = cmd;
    let results = suite::run_all(seed);
    let passed = results.iter().all(|r| r.passed);
    let by_id: BTreeMap<String, &suite::CriterionResult> = results.iter().map(|r| (r.id.to_string(), r)).collect();
    Ok((checked(passed), json!({ "passed": passed, "criteria": by_id })))
}

fn dispatch(cmd: Command) -> Reply {
    match cmd {
        Command::Perm(c) => perm(c),
        Command::Thompson(c) => thompson(c),
        Command::Freeprod(c) => freeprod(c),
        Command::Presentation(c) => presentation(c),
        Command::Tower(c) => tower(c),
        Command::Groupring(c) => groupring(c),
        Command::Suite(c) => suite_cmd(c),
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(cli.command) {
        Ok((code, value)) => {
            let text = if cli.json {
                serde_json::to_string(&value)
            } else {
                serde_json::to_string_pretty(&value)
            }
            .expect("JSON values serialize");
            Outcome { code, stdout: text + "\n", stderr: String::new() }
        }
        Err(Failure::Input(m)) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {m}\n") },
        Err(Failure::Verification(m)) => {
            Outcome { code: EXIT_VERIFICATION, stdout: String::new(), stderr: format!("verification failed: {m}\n") }
        }
    }
}
