//! `omql`: a workbench for finite orthomodular lattices, their modal
//! operator, Baer star-semigroups, the Hilbert-style calculus, and the
//! point semantics over semigroups.
//!
//! Reports go to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 verification failure, 2 usage or format error.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use omql_core::foulis::{foulis_semigroup, represent, write_semigroup_dump, DEFAULT_TABLE_CAP};
use omql_core::kripke::{
    context_from_representation, frame_from_lattice, verify_ideal_identities,
    verify_truth_ideals, ForcingConfig, NegationStyle,
};
use omql_core::lattice::{
    builtin, center, central_congruence, direct_product, find_isomorphism, parse_lattice_file,
    write_lattice_file, FiniteOml, LatticeFile,
};
use omql_core::logic::{
    check_proof, is_tautology_with, library_from_names, parse_proof, semantic_consequence_with,
    ConsequenceVerdict, Model, TautologyVerdict, DEFAULT_LIBRARY, DEFAULT_VAR_CAP,
};
use omql_core::modal::{saturate, verify_box_laws, verify_s_axioms, ModalOml, Valuation};
use omql_core::suite::{run_suite, RunConfig};
use omql_core::term::{self, Term};

const FORMATS_HELP: &str = "\
TERM GRAMMAR (ASCII):
  variables x1 x2 ...; constants 0 1; ~ negation, [] box, <> diamond,
  & meet, | join, R (binds loosest); precedence ~,[],<> > & > | > R;
  binary connectives associate left; <>t = ~[]~t and
  t R s = (t & s) | (~t & ~s) expand at parse time.

LATTICE FILE (.oml): `oml <n>`, `elem <id> [<name>]`, `leq <i> <j>`
  (covering-or-equal pairs; closure taken), `neg <i> <j>`, `bot <i>`,
  `top <i>`, optional `box <i> <j>`; `#` comments.

SEMIGROUP DUMP: `bsg <n>`, `zero <i>`, `star <i> <j>`, `mul <i> <j> <k>`,
  `pc <e> <a>` back-mapping closed projections to lattice elements.

PROOF SCRIPT (.prf): optional `theory:` block of terms, then numbered
  lines `k. <term> ; premise | axiom A12 a=<t> b=<t> | DS i j | N i`.

CONSEQUENCE FILE: premises one per line, conclusion on a `|- <term>` line.

MODELS: b2 b4 b8 ... mo2 mo3 ... chain2, and x-products such as mo2xb2.
  OMQL_MODELS overrides the default library when --models is absent.

EXIT CODES: 0 success, 1 verification failure, 2 usage/format error.";

#[derive(Parser)]
#[command(
    name = "omql",
    version,
    about = "finite orthomodular lattice & modal logic workbench",
    after_long_help = FORMATS_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice-level operations on `.oml` files.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Modal-operator verification.
    #[command(subcommand)]
    Modal(ModalCmd),
    /// Baer star-semigroup construction.
    #[command(subcommand)]
    Semigroup(SemigroupCmd),
    /// Proof-script checking.
    #[command(subcommand)]
    Prove(ProveCmd),
    /// Tautology sweep over the model library.
    Taut(TautArgs),
    /// Semantic-consequence check from a file.
    Consequence(ConsequenceArgs),
    /// Point semantics over the semigroup of a lattice.
    #[command(subcommand)]
    Kripke(KripkeCmd),
    /// The full verification battery.
    Suite(SuiteArgs),
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Validate a lattice file and report its center.
    Check { file: PathBuf },
    /// Emit a library lattice (boolean <k>, mo <n>, chain2, product <a> <b>).
    Builtin {
        name: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the central elements of a lattice.
    Center { file: PathBuf },
    /// Classes of the congruence induced by a central element.
    Congruence {
        file: PathBuf,
        /// Central element, by name or id.
        #[arg(long)]
        central: String,
    },
    /// Direct product of two lattice files.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search for an isomorphism between two lattice files.
    Iso { left: PathBuf, right: PathBuf },
}

#[derive(Subcommand)]
enum ModalCmd {
    /// Check S1..S7 and the box laws L1..L6; uses the file's box table when
    /// present, the saturation table otherwise.
    Verify { file: PathBuf },
}

#[derive(Subcommand)]
enum SemigroupCmd {
    /// Build the semigroup of residuated endomaps and dump its tables with
    /// the closed-projection back-map.
    Build {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Cap on materializing the full product table.
        #[arg(long, default_value_t = DEFAULT_TABLE_CAP)]
        table_cap: usize,
        #[arg(long, default_value_t = 8)]
        foulis_cap: usize,
    },
}

#[derive(Subcommand)]
enum ProveCmd {
    /// Check a proof script line by line.
    Check { file: PathBuf },
}

#[derive(Args)]
struct TautArgs {
    /// The term to sweep, in the ASCII grammar.
    term: String,
    #[arg(long, value_delimiter = ',')]
    models: Option<Vec<String>>,
    #[arg(long, default_value_t = DEFAULT_VAR_CAP)]
    var_cap: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Args)]
struct ConsequenceArgs {
    /// File with optional `theory:` premises and a final `|- <term>` line.
    file: PathBuf,
    #[arg(long, value_delimiter = ',')]
    models: Option<Vec<String>>,
    #[arg(long, default_value_t = DEFAULT_VAR_CAP)]
    var_cap: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum NegationArg {
    Star,
    Prime,
}

impl From<NegationArg> for NegationStyle {
    fn from(v: NegationArg) -> NegationStyle {
        match v {
            NegationArg::Star => NegationStyle::Star,
            NegationArg::Prime => NegationStyle::Prime,
        }
    }
}

#[derive(Subcommand)]
enum KripkeCmd {
    /// Print the truth set of a term next to the ideal of its value.
    Eval {
        file: PathBuf,
        /// Valuation like `x1=a,x2=~b` over element names of the lattice.
        #[arg(long)]
        val: String,
        #[arg(long)]
        term: String,
        #[arg(long, value_enum, default_value_t = NegationArg::Star)]
        negation: NegationArg,
    },
    /// Run the ideal identities and the truth-ideal suite on the frames of
    /// a lattice (all two-variable valuations).
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = NegationArg::Star)]
        negation: NegationArg,
        /// Complexity bound for the swept terms.
        #[arg(long, default_value_t = 5)]
        comp: usize,
    },
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, value_delimiter = ',')]
    models: Option<Vec<String>>,
    #[arg(long = "negation-clause", value_enum, default_value_t = NegationArg::Star)]
    negation: NegationArg,
    #[arg(long, default_value_t = DEFAULT_VAR_CAP)]
    var_cap: usize,
    #[arg(long, default_value_t = 8)]
    foulis_cap: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

/// Verification failure.
const FAIL: u8 = 1;
/// Usage or format error.
const USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

/// `Err` is a usage/format problem; `Ok(code)` carries the verdict.
fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Lattice(cmd) => lattice_cmd(cmd),
        Command::Modal(ModalCmd::Verify { file }) => modal_verify(&file),
        Command::Semigroup(SemigroupCmd::Build {
            file,
            output,
            table_cap,
            foulis_cap,
        }) => {
            warn_foulis_cap(foulis_cap);
            semigroup_build(&file, output.as_deref(), table_cap, foulis_cap)
        }
        Command::Prove(ProveCmd::Check { file }) => prove_check(&file),
        Command::Taut(args) => taut(args),
        Command::Consequence(args) => consequence(args),
        Command::Kripke(cmd) => kripke_cmd(cmd),
        Command::Suite(args) => suite(args),
    }
}

fn warn_foulis_cap(cap: usize) {
    if cap > 8 {
        eprintln!("warning: map-semigroup sizes grow steeply; cap {cap} may take a while");
    }
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_lattice(path: &Path) -> Result<(FiniteOml, Option<Vec<usize>>), String> {
    let LatticeFile { raw, box_table } =
        parse_lattice_file(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))?;
    match raw.validate() {
        Ok(l) => Ok((l, box_table)),
        Err(d) => Err(format!("{}: {d}", path.display())),
    }
}

fn write_or_print(output: Option<&Path>, content: &str, summary: &str) -> Result<u8, String> {
    match output {
        Some(path) => {
            fs::write(path, content).map_err(|e| format!("{}: {e}", path.display()))?;
            println!("{summary} -> {}", path.display());
        }
        None => print!("{content}"),
    }
    Ok(0)
}

fn lattice_cmd(cmd: LatticeCmd) -> Result<u8, String> {
    match cmd {
        LatticeCmd::Check { file } => {
            let text = read(&file)?;
            let LatticeFile { raw, .. } =
                parse_lattice_file(&text).map_err(|e| format!("{}: {e}", file.display()))?;
            let names = raw.names.clone();
            match raw.validate() {
                Ok(l) => {
                    let names: Vec<&str> = center(&l).into_iter().map(|z| l.name(z)).collect();
                    println!("VALID orthomodular, center={{{}}}", names.join(","));
                    Ok(0)
                }
                Err(d) => {
                    for e in &d.0 {
                        println!("{}", describe_diag(e, &names));
                    }
                    Ok(FAIL)
                }
            }
        }
        LatticeCmd::Builtin {
            name,
            params,
            output,
        } => {
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            let l = builtin(&name, &params).map_err(|e| e.to_string())?;
            let content = write_lattice_file(&l, None);
            write_or_print(output.as_deref(), &content, &format!("{name} n={}", l.n()))
        }
        LatticeCmd::Center { file } => {
            let (l, _) = load_lattice(&file)?;
            let names: Vec<&str> = center(&l).into_iter().map(|z| l.name(z)).collect();
            println!("CENTER {}", names.join(","));
            Ok(0)
        }
        LatticeCmd::Congruence { file, central } => {
            let (l, _) = load_lattice(&file)?;
            let z = l
                .elem_by_name(&central)
                .ok_or_else(|| format!("no element named `{central}`"))?;
            match central_congruence(&l, z) {
                Ok(c) => {
                    println!("CONGRUENCE z={} classes={}", l.name(z), c.num_classes());
                    for (i, class) in c.classes().iter().enumerate() {
                        let names: Vec<&str> = class.iter().map(|&e| l.name(e)).collect();
                        println!("CLASS {i} {}", names.join(","));
                    }
                    Ok(0)
                }
                Err(e) => {
                    println!("{e}");
                    Ok(FAIL)
                }
            }
        }
        LatticeCmd::Product {
            left,
            right,
            output,
        } => {
            let (a, _) = load_lattice(&left)?;
            let (b, _) = load_lattice(&right)?;
            let p = direct_product(&a, &b);
            let content = write_lattice_file(&p, None);
            write_or_print(output.as_deref(), &content, &format!("product n={}", p.n()))
        }
        LatticeCmd::Iso { left, right } => {
            let (a, _) = load_lattice(&left)?;
            let (b, _) = load_lattice(&right)?;
            match find_isomorphism(&a, &b) {
                Some(iso) => {
                    let pairs: Vec<String> = iso
                        .map
                        .iter()
                        .enumerate()
                        .map(|(x, &y)| format!("{}>{}", a.name(x), b.name(y)))
                        .collect();
                    println!("ISOMORPHIC {}", pairs.join(","));
                    Ok(0)
                }
                None => {
                    println!("NOT_ISOMORPHIC");
                    Ok(FAIL)
                }
            }
        }
    }
}

/// Check-failure lines with element names where the witness ids resolve.
fn describe_diag(e: &omql_core::lattice::LatticeError, names: &[String]) -> String {
    use omql_core::lattice::LatticeError as E;
    let name = |i: usize| names.get(i).cloned().unwrap_or_else(|| i.to_string());
    match e {
        E::NotOrthomodular { a, b } => format!("NotOrthomodular witness {},{}", name(*a), name(*b)),
        E::NotOrtho { x } => format!("NotOrtho witness {}", name(*x)),
        E::NotInvolutive { x } => format!("NotInvolutive witness {}", name(*x)),
        E::DeMorgan { a, b } => format!("DeMorgan witness {},{}", name(*a), name(*b)),
        E::NotALattice { kind, a, b } => {
            format!("NotALattice missing {kind} of {},{}", name(*a), name(*b))
        }
        other => other.to_string(),
    }
}

fn modal_verify(file: &Path) -> Result<u8, String> {
    let (l, box_table) = load_lattice(file)?;
    let m = match box_table {
        Some(table) => ModalOml::with_box_table(l, table).map_err(|e| e.to_string())?,
        None => saturate(l),
    };
    let mut ok = true;
    for law in verify_s_axioms(&m).iter().chain(verify_box_laws(&m).iter()) {
        println!("{}", law.report_line());
        ok &= law.passed();
    }
    Ok(if ok { 0 } else { FAIL })
}

fn semigroup_build(
    file: &Path,
    output: Option<&Path>,
    table_cap: usize,
    foulis_cap: usize,
) -> Result<u8, String> {
    let (l, _) = load_lattice(file)?;
    let g = foulis_semigroup(&l, foulis_cap).map_err(|e| e.to_string())?;
    let table = g
        .to_star_semigroup(table_cap)
        .map_err(|e| format!("{e}; raise --table-cap to materialize"))?;
    let rep = represent(&l, foulis_cap).map_err(|e| e.to_string())?;
    let pc: Vec<(usize, usize)> = l.elements().map(|a| (g.mu(a), a)).collect();
    let dump = write_semigroup_dump(&table, &pc);
    let summary = format!("BSG n={} pc={} baer=yes", table.n(), rep.pc.carrier.len());
    if output.is_none() {
        print!("{dump}");
        eprintln!("{summary}");
        return Ok(0);
    }
    write_or_print(output, &dump, &summary)
}

fn prove_check(file: &Path) -> Result<u8, String> {
    let script = parse_proof(&read(file)?).map_err(|e| format!("{}: {e}", file.display()))?;
    let verdict = check_proof(&script).map_err(|e| format!("{}: {e}", file.display()))?;
    for line in &verdict.lines {
        if line.ok {
            println!("LINE {} PASS", line.index);
        } else {
            println!("LINE {} FAIL {}", line.index, line.reason);
        }
    }
    if verdict.accepted {
        println!("ACCEPT");
        Ok(0)
    } else {
        println!("REJECT");
        Ok(FAIL)
    }
}

/// Default model names: the `--models` flag, else `OMQL_MODELS`
/// (comma-separated), else the built-in library.
fn default_model_names(names: Option<Vec<String>>) -> Vec<String> {
    names
        .or_else(|| {
            std::env::var("OMQL_MODELS")
                .ok()
                .map(|v| v.split(',').map(|s| s.trim().to_string()).collect())
        })
        .unwrap_or_else(|| DEFAULT_LIBRARY.iter().map(|s| s.to_string()).collect())
}

fn models_or_default(names: Option<Vec<String>>) -> Result<Vec<Model>, String> {
    library_from_names(&default_model_names(names)).map_err(|e| e.to_string())
}

fn render_valuation(models: &[Model], model_name: &str, v: &Valuation) -> String {
    let lattice = models
        .iter()
        .find(|m| m.name == model_name)
        .map(|m| m.oml.base());
    v.iter()
        .map(|(var, &e)| match lattice {
            Some(l) => format!("x{var}={}", l.name(e)),
            None => format!("x{var}={e}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn warn_wide_sweep(vars: usize, models: &[Model]) {
    if vars > 3 && models.iter().any(|m| m.oml.n() > 16) {
        eprintln!(
            "warning: {vars} variables over models beyond 16 elements; the sweep is exponential"
        );
    }
}

fn taut(args: TautArgs) -> Result<u8, String> {
    let t = term::parse(&args.term).map_err(|e| e.to_string())?;
    let models = models_or_default(args.models)?;
    warn_wide_sweep(t.vars().len(), &models);
    match is_tautology_with(&t, &models, args.var_cap, args.workers).map_err(|e| e.to_string())? {
        TautologyVerdict::NotRefutedOnLibrary => {
            println!("NOT-REFUTED-ON-LIBRARY");
            Ok(0)
        }
        TautologyVerdict::Refuted { model, valuation } => {
            println!(
                "REFUTED model={model} {}",
                render_valuation(&models, &model, &valuation)
            );
            Ok(FAIL)
        }
    }
}

/// Premises one per line (after an optional `theory:`), conclusion on the
/// final `|- <term>` line.
fn parse_consequence_file(text: &str) -> Result<(Vec<Term>, Term), String> {
    let mut premises = Vec::new();
    let mut conclusion = None;
    for (idx, raw_line) in text.lines().enumerate() {
        let line = match raw_line.find('#') {
            Some(p) => &raw_line[..p],
            None => raw_line,
        }
        .trim();
        if line.is_empty() || line == "theory:" {
            continue;
        }
        let lineno = idx + 1;
        if let Some(rest) = line.strip_prefix("|-") {
            if conclusion.is_some() {
                return Err(format!("line {lineno}: second conclusion"));
            }
            conclusion =
                Some(term::parse(rest.trim()).map_err(|e| format!("line {lineno}: {e}"))?);
        } else {
            if conclusion.is_some() {
                return Err(format!("line {lineno}: premise after the conclusion"));
            }
            premises.push(term::parse(line).map_err(|e| format!("line {lineno}: {e}"))?);
        }
    }
    let conclusion = conclusion.ok_or("missing `|- <term>` conclusion line")?;
    Ok((premises, conclusion))
}

fn consequence(args: ConsequenceArgs) -> Result<u8, String> {
    let (premises, conclusion) = parse_consequence_file(&read(&args.file)?)?;
    let models = models_or_default(args.models)?;
    let mut vars = conclusion.vars();
    for p in &premises {
        vars.extend(p.vars());
    }
    warn_wide_sweep(vars.len(), &models);
    match semantic_consequence_with(&premises, &conclusion, &models, args.var_cap, args.workers)
        .map_err(|e| e.to_string())?
    {
        ConsequenceVerdict::HoldsOnLibrary => {
            println!("HOLDS-ON-LIBRARY");
            Ok(0)
        }
        ConsequenceVerdict::Counterexample { model, valuation } => {
            println!(
                "COUNTEREXAMPLE model={model} {}",
                render_valuation(&models, &model, &valuation)
            );
            Ok(FAIL)
        }
    }
}

fn kripke_cmd(cmd: KripkeCmd) -> Result<u8, String> {
    match cmd {
        KripkeCmd::Eval {
            file,
            val,
            term: term_text,
            negation,
        } => {
            let (l, _) = load_lattice(&file)?;
            let t = term::parse(&term_text).map_err(|e| e.to_string())?;
            let v = parse_valuation(&l, &val)?;
            let rep = represent(&l, 8).map_err(|e| e.to_string())?;
            let (ctx, iso) = context_from_representation(rep);
            let config = ForcingConfig {
                negation: negation.into(),
                box_requires_central: true,
            };
            let frame = frame_from_lattice(&ctx, &iso, &v, config);
            let ts = frame.truth_set(&t).map_err(|e| e.to_string())?;
            let value = frame.algebraic_value(&t).map_err(|e| e.to_string())?;
            let ideal = &frame.ctx.pc.ideals[value];
            let fmt = |bits: &omql_core::bits::Bits| {
                bits.iter_ones()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            println!("TRUTH_SET {}", fmt(&ts));
            println!("IDEAL     {}", fmt(ideal));
            let equal = ts == *ideal;
            println!("EQUAL {}", if equal { "yes" } else { "no" });
            Ok(if equal { 0 } else { FAIL })
        }
        KripkeCmd::Verify {
            file,
            negation,
            comp,
        } => {
            let (l, _) = load_lattice(&file)?;
            let rep = represent(&l, 8).map_err(|e| e.to_string())?;
            let (ctx, iso) = context_from_representation(rep);
            let config = ForcingConfig {
                negation: negation.into(),
                box_requires_central: true,
            };
            let terms = term::enumerate_terms(comp, &[1, 2]);
            let mut truth_failures = 0usize;
            let mut frames = 0usize;
            let mut identity_failures: Vec<String> = Vec::new();
            for host_a in l.elements() {
                for host_b in l.elements() {
                    let v: Valuation = [(1, host_a), (2, host_b)].into();
                    let frame = frame_from_lattice(&ctx, &iso, &v, config);
                    frames += 1;
                    for check in
                        verify_ideal_identities(&frame, &term::var(1), &term::var(2))
                            .map_err(|e| e.to_string())?
                    {
                        if !check.ok {
                            identity_failures.push(check.name.clone());
                        }
                    }
                    for check in verify_truth_ideals(&frame, &terms).map_err(|e| e.to_string())? {
                        if !check.ok {
                            truth_failures += 1;
                            if truth_failures <= 5 {
                                println!(
                                    "TRUTH_IDEAL FAIL x1={} x2={} term={}",
                                    l.name(host_a),
                                    l.name(host_b),
                                    check.detail
                                );
                            }
                        }
                    }
                }
            }
            for name in ["MEET_IDEAL", "NEG_IDEAL", "BOX_IDEAL"] {
                let failed = identity_failures.iter().any(|f| f == name);
                println!("{name} {}", if failed { "FAIL" } else { "PASS" });
            }
            if truth_failures == 0 {
                println!("TRUTH_IDEAL PASS terms={} frames={frames}", terms.len());
            } else {
                println!("TRUTH_IDEAL FAIL terms={truth_failures}");
            }
            Ok(if truth_failures == 0 && identity_failures.is_empty() {
                0
            } else {
                FAIL
            })
        }
    }
}

fn parse_valuation(l: &FiniteOml, text: &str) -> Result<Valuation, String> {
    let mut v = BTreeMap::new();
    for piece in text.split(',').filter(|p| !p.trim().is_empty()) {
        let (var, name) = piece
            .split_once('=')
            .ok_or_else(|| format!("bad assignment `{piece}`, want x<i>=<elem>"))?;
        let var = var
            .trim()
            .strip_prefix('x')
            .and_then(|d| d.parse::<u32>().ok())
            .ok_or_else(|| format!("bad variable `{var}`"))?;
        let elem = l
            .elem_by_name(name.trim())
            .ok_or_else(|| format!("no element named `{}`", name.trim()))?;
        v.insert(var, elem);
    }
    Ok(v)
}

fn suite(args: SuiteArgs) -> Result<u8, String> {
    warn_foulis_cap(args.foulis_cap);
    let config = RunConfig {
        models: default_model_names(args.models),
        var_cap: args.var_cap,
        foulis_cap: args.foulis_cap,
        negation: args.negation.into(),
        seed: args.seed,
        workers: args.workers,
    };
    let report = run_suite(&config).map_err(|e| e.to_string())?;
    print!("{}", report.render());
    Ok(if report.all_passed() { 0 } else { FAIL })
}
