use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use permsynth::{format, report};
use permsynth_core::circuit::{gate_count, peephole_cancel, synth_no_ancilla, synth_one_ancilla};
use permsynth_core::perm::parse_cycles;
use permsynth_core::{decomp, oracle, sim, Circuit, DecompReport, Permutation, TranspositionProduct, Verdict};
use serde_json::json;

const DEFAULT_MAX_N: u32 = 16;

/// Compiles permutations of the n-qubit computational basis into circuits of
/// multi-controlled Toffoli gates.
#[derive(Parser)]
#[command(name = "permsynth", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Synthesize a circuit for a permutation.
    Synth(SynthArgs),
    /// Print a bit-wise adjacent decomposition.
    Decomp(DecompArgs),
    /// Check a circuit file against a permutation.
    Verify(VerifyArgs),
    /// Count gates in a circuit file, or in a freshly synthesized circuit.
    Count(CountArgs),
    /// Exact minimal bit-wise adjacent decomposition length (n <= 4).
    Oracle(OracleArgs),
    /// Print the permutation matrix (n <= 6).
    Matrix(MatrixArgs),
}

#[derive(Args, Clone)]
struct PermArgs {
    /// Number of register qubits.
    #[arg(long = "n")]
    n: u32,
    /// Cycle notation such as "(0,7,12)(4,5)" or one-line notation such as "[2,3,1,0]".
    #[arg(long, default_value = "")]
    perm: String,
}

#[derive(Args, Clone)]
struct PipelineArgs {
    #[arg(long, value_enum, default_value_t = Method::NoAncilla)]
    method: Method,
    #[arg(long, value_enum, default_value_t = StrategyArg::Greedy)]
    strategy: StrategyArg,
    /// Use the cycles exactly as written instead of the disjoint cycle form.
    /// With no-ancilla this expands each written cycle naively.
    #[arg(long)]
    as_written: bool,
    /// Skip cancellation of identical gates in one-ancilla circuits.
    #[arg(long)]
    no_peephole: bool,
}

#[derive(Args)]
struct SynthArgs {
    #[command(flatten)]
    perm: PermArgs,
    #[command(flatten)]
    pipeline: PipelineArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Native)]
    format: OutputFormat,
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Skip simulating the circuit before writing it.
    #[arg(long)]
    no_verify: bool,
}

#[derive(Args)]
struct DecompArgs {
    #[command(flatten)]
    perm: PermArgs,
    #[arg(long, value_enum, default_value_t = StrategyArg::Greedy)]
    strategy: StrategyArg,
    /// Expand the written transpositions naively instead of decomposing the
    /// disjoint cycles.
    #[arg(long)]
    as_written: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Native)]
    format: OutputFormat,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Circuit file (native text or JSON).
    #[arg(long, short)]
    input: PathBuf,
    #[arg(long, default_value = "")]
    perm: String,
    /// Expected register width; defaults to the circuit's.
    #[arg(long = "n")]
    n: Option<u32>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Native)]
    format: OutputFormat,
}

#[derive(Args)]
struct CountArgs {
    /// Circuit file to count. Without it, --n and --perm are synthesized first.
    #[arg(long, short)]
    input: Option<PathBuf>,
    #[arg(long = "n")]
    n: Option<u32>,
    #[arg(long)]
    perm: Option<String>,
    #[command(flatten)]
    pipeline: PipelineArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Native)]
    format: OutputFormat,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    perm: PermArgs,
    #[arg(long, default_value_t = oracle::DEFAULT_MAX_DEPTH)]
    max_depth: u32,
    #[arg(long, value_enum, default_value_t = OutputFormat::Native)]
    format: OutputFormat,
}

#[derive(Args)]
struct MatrixArgs {
    #[command(flatten)]
    perm: PermArgs,
    #[arg(long, value_enum, default_value_t = OutputFormat::Native)]
    format: OutputFormat,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Method {
    OneAncilla,
    NoAncilla,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum StrategyArg {
    Naive,
    Greedy,
    Best,
}

impl From<StrategyArg> for permsynth_core::Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Naive => permsynth_core::Strategy::Naive,
            StrategyArg::Greedy => permsynth_core::Strategy::Greedy,
            StrategyArg::Best => permsynth_core::Strategy::Best,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum OutputFormat {
    Native,
    Qasm,
    Json,
}

/// Failure classes; the exit codes are part of the command-line interface.
#[derive(Debug)]
enum Failure {
    Input(String),
    Internal(String),
    /// The verdict is already on stdout.
    Mismatch,
    DirtyAncilla,
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Internal(_) => 2,
            Failure::Mismatch => 3,
            Failure::DirtyAncilla => 4,
        }
    }
}

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn max_qubits() -> Result<u32, Failure> {
    match std::env::var("PERMSYNTH_MAX_N") {
        Err(_) => Ok(DEFAULT_MAX_N),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("PERMSYNTH_MAX_N is not a number: '{v}'"))),
    }
}

fn check_n(n: u32) -> Result<(), Failure> {
    let cap = max_qubits()?;
    if n > cap {
        return Err(Failure::Input(format!("n={n} exceeds PERMSYNTH_MAX_N={cap}")));
    }
    Ok(())
}

fn parse_perm(text: &str, n: u32) -> Result<Permutation, Failure> {
    check_n(n)?;
    Permutation::parse(text, n).map_err(input_err)
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json_text(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

struct Synthesis {
    circuit: Circuit,
    decomposition: Option<DecompReport>,
    transpositions: usize,
}

fn synthesize(n: u32, text: &str, p: &Permutation, opts: &PipelineArgs) -> Result<Synthesis, Failure> {
    match opts.method {
        Method::OneAncilla => {
            let cycles = if opts.as_written {
                parse_cycles(text, n).map_err(input_err)?
            } else {
                p.disjoint_cycles()
            };
            let mut factors = TranspositionProduct::new(n).map_err(input_err)?;
            for c in &cycles {
                factors
                    .append(&c.to_transpositions(n).map_err(input_err)?)
                    .map_err(input_err)?;
            }
            let mut circuit = synth_one_ancilla(&factors).map_err(input_err)?;
            if !opts.no_peephole {
                circuit = peephole_cancel(&circuit);
            }
            Ok(Synthesis { circuit, decomposition: None, transpositions: factors.len() })
        }
        Method::NoAncilla => {
            let report = if opts.as_written {
                decomp::reduce_as_written(n, &parse_cycles(text, n).map_err(input_err)?).map_err(input_err)?
            } else {
                decomp::reduce(p, opts.strategy.into())
            };
            let circuit =
                synth_no_ancilla(&report.factors).map_err(|e| Failure::Internal(e.to_string()))?;
            let transpositions = report.total_length();
            Ok(Synthesis { circuit, decomposition: Some(report), transpositions })
        }
    }
}

fn cmd_synth(args: SynthArgs) -> Result<(), Failure> {
    let n = args.perm.n;
    let p = parse_perm(&args.perm.perm, n)?;
    let s = synthesize(n, &args.perm.perm, &p, &args.pipeline)?;
    if !args.no_verify {
        match sim::verify(&s.circuit, &p) {
            Ok(Verdict::Equal) => {}
            Ok(Verdict::Mismatch { witness, .. }) => {
                return Err(Failure::Internal(format!(
                    "internal verification failure: synthesized circuit differs at K={witness}"
                )))
            }
            Err(e) => return Err(Failure::Internal(format!("internal verification failure: {e}"))),
        }
    }
    let count = gate_count(&s.circuit);
    match args.format {
        OutputFormat::Json => {
            let doc = json!({
                "n": n,
                "permutation": p.to_string(),
                "method": match args.pipeline.method {
                    Method::OneAncilla => "one-ancilla",
                    Method::NoAncilla => "no-ancilla",
                },
                "transpositions": s.transpositions,
                "circuit": format::JsonCircuit::from(&s.circuit),
                "count": report::JsonCount::from(&count),
                "decomposition": s.decomposition.as_ref().map(report::JsonDecomp::from),
                "verified": !args.no_verify,
            });
            emit(args.output.as_deref(), &json_text(&doc))
        }
        fmt => {
            let text = match fmt {
                OutputFormat::Qasm => format::to_qasm(&s.circuit),
                _ => format::to_native(&s.circuit),
            };
            emit(args.output.as_deref(), &text)?;
            eprintln!("# {}", report::count_text(&count));
            if let Some(r) = &s.decomposition {
                eprintln!("# strategy={} length={}", r.strategy, r.total_length());
            }
            if !args.no_verify {
                eprintln!("# verified");
            }
            Ok(())
        }
    }
}

fn cmd_decomp(args: DecompArgs) -> Result<(), Failure> {
    let n = args.perm.n;
    let p = parse_perm(&args.perm.perm, n)?;
    let r = if args.as_written {
        let cycles = parse_cycles(&args.perm.perm, n).map_err(input_err)?;
        decomp::reduce_as_written(n, &cycles).map_err(input_err)?
    } else {
        decomp::reduce(&p, args.strategy.into())
    };
    let text = match args.format {
        OutputFormat::Json => json_text(&report::JsonDecomp::from(&r)),
        OutputFormat::Native => report::decomp_text(&r),
        OutputFormat::Qasm => return Err(Failure::Input("decomp has no qasm output".into())),
    };
    emit(args.output.as_deref(), &text)
}

fn read_circuit(path: &Path) -> Result<Circuit, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let c = format::parse_any(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    check_n(c.n())?;
    Ok(c)
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let c = read_circuit(&args.input)?;
    if let Some(n) = args.n {
        if n != c.n() {
            return Err(Failure::Input(format!("--n {n} does not match the circuit's {} qubits", c.n())));
        }
    }
    let p = parse_perm(&args.perm, c.n())?;
    let json = args.format == OutputFormat::Json;
    match sim::verify(&c, &p) {
        Ok(Verdict::Equal) => {
            if json {
                print!("{}", json_text(&json!({ "result": "equal" })));
            } else {
                println!("equal");
            }
            Ok(())
        }
        Ok(Verdict::Mismatch { witness, expected, actual }) => {
            if json {
                print!(
                    "{}",
                    json_text(&json!({
                        "result": "mismatch",
                        "witness": witness.0,
                        "expected": expected.0,
                        "actual": actual.0,
                    }))
                );
            } else {
                println!("mismatch at K={witness}: expected {expected}, got {actual}");
            }
            Err(Failure::Mismatch)
        }
        Err(permsynth_core::Error::DirtyAncilla(k)) => {
            if json {
                print!("{}", json_text(&json!({ "result": "dirty-ancilla", "witness": k })));
            } else {
                println!("dirty ancilla at K={k}");
            }
            Err(Failure::DirtyAncilla)
        }
        Err(e) => Err(input_err(e)),
    }
}

fn cmd_count(args: CountArgs) -> Result<(), Failure> {
    let (circuit, transpositions) = match (&args.input, args.n) {
        (Some(path), _) => (read_circuit(path)?, None),
        (None, Some(n)) => {
            let text = args.perm.clone().unwrap_or_default();
            let p = parse_perm(&text, n)?;
            let s = synthesize(n, &text, &p, &args.pipeline)?;
            (s.circuit, Some(s.transpositions))
        }
        (None, None) => return Err(Failure::Input("count needs --input or --n with --perm".into())),
    };
    let count = gate_count(&circuit);
    if args.format == OutputFormat::Json {
        let doc = json!({
            "mct": count.mct,
            "cnot": count.cnot,
            "x": count.x,
            "total": count.total,
            "transpositions": transpositions,
        });
        print!("{}", json_text(&doc));
    } else {
        match transpositions {
            Some(l) => println!("{} transpositions={l}", report::count_text(&count)),
            None => println!("{}", report::count_text(&count)),
        }
    }
    Ok(())
}

fn cmd_oracle(args: OracleArgs) -> Result<(), Failure> {
    let p = parse_perm(&args.perm.perm, args.perm.n)?;
    let r = oracle::minimal_length(&p, args.max_depth).map_err(input_err)?;
    if args.format == OutputFormat::Json {
        print!("{}", json_text(&report::JsonOracle::from(&r)));
    } else {
        println!("{}", report::oracle_text(&r));
    }
    Ok(())
}

fn cmd_matrix(args: MatrixArgs) -> Result<(), Failure> {
    let p = parse_perm(&args.perm.perm, args.perm.n)?;
    let m = p.matrix_view().map_err(input_err)?;
    if args.format == OutputFormat::Json {
        print!("{}", json_text(&report::JsonMatrix::from(&m)));
    } else {
        print!("{m}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Synth(a) => cmd_synth(a),
        Command::Decomp(a) => cmd_decomp(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Count(a) => cmd_count(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Matrix(a) => cmd_matrix(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Input(m) | Failure::Internal(m) => eprintln!("error: {m}"),
                Failure::Mismatch | Failure::DirtyAncilla => {}
            }
            ExitCode::from(f.exit_code())
        }
    }
}
