//! The `paf` command: every pipeline stage as a deterministic,
//! line-oriented subcommand. Exit codes: 0 success or true verdict,
//! 1 well-formed negative verdict, 2 input or usage error, 3 decoding
//! budget exceeded.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use paf::berry::{
    build_berry, build_berry_with_l2, certificate_text, certify, rederive, BerryInput,
};
use paf::bform::{build_b, build_b_inner, decide_r, recognize_b, FormulaInput, ProofInput};
use paf::godel::{decode_formula, encode_formula, Budget, Code};
use paf::proof::{check_proof, parse_proof};
use paf::syntax::{parse_formula, print_formula, Formula, TemplateStyle, VarIndex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(name = "paf", version, about = "Peano arithmetic with factorial: coding, proof checking, and the self-referential sentence pipeline")]
struct Cli {
    /// Cap on materialized code sizes, in bits
    #[arg(long, global = true, default_value_t = 1_000_000)]
    budget_bits: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse formulas from stdin and print them in canonical form
    Parse,
    /// Canonicalize formula text from stdin (same normal form as parse)
    Print,
    /// Encode formulas from stdin as decimal codes
    Encode,
    /// Decode decimal codes (argument, or stdin lines) to formulas
    Decode { code: Option<String> },
    /// Check a proof file; exit 0 when valid
    #[command(name = "check-proof")]
    CheckProof { file: PathBuf },
    /// Build the least-witness closure of the body formula in FILE
    #[command(name = "build-b")]
    BuildB {
        file: PathBuf,
        /// Index of the witness variable x in the body
        #[arg(long)]
        var: VarIndex,
        /// The four template indices y,u,v,w (default: smallest fresh)
        #[arg(long)]
        aux: Option<String>,
        /// Emit the open witness formula instead of its closure
        #[arg(long)]
        inner: bool,
        /// Use the non-strict order encoding (+0 instead of +0')
        #[arg(long)]
        nonstrict: bool,
    },
    /// Recognize the least-witness shape and report its decomposition
    #[command(name = "recognize-b")]
    RecognizeB {
        file: PathBuf,
        #[arg(long)]
        nonstrict: bool,
    },
    /// Decide the three-step relation r(l, m, n)
    #[command(name = "decide-r")]
    DecideR {
        /// Formula input: a decimal code, or a path to a formula file
        #[arg(long)]
        l: String,
        /// Proof input: a decimal code, or a path to a proof file
        #[arg(long)]
        m: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        nonstrict: bool,
    },
    /// Build the self-referential sentence, its code, and the
    /// certificate, into a directory
    #[command(name = "build-berry")]
    BuildBerry {
        /// Path to the representation formula
        #[arg(long)]
        r: PathBuf,
        /// Index k of the representation's top variable
        #[arg(long)]
        k: u64,
        /// Force the tower height instead of choosing the minimum
        #[arg(long)]
        l2: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-derive and re-check a written artifact directory
    Certify {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/version through this path
            return if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
        }
    };
    let budget = Budget {
        max_code_bits: cli.budget_bits,
        ..Budget::default()
    };
    match dispatch(cli.command, &budget, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code
        }
    }
}

struct CliError {
    exit_code: i32,
    message: String,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        exit_code: EXIT_USAGE,
        message: message.into(),
    }
}

fn negative(message: impl Into<String>) -> CliError {
    CliError {
        exit_code: EXIT_NEGATIVE,
        message: message.into(),
    }
}

fn over_budget(message: impl Into<String>) -> CliError {
    CliError {
        exit_code: EXIT_BUDGET,
        message: message.into(),
    }
}

type CliResult = Result<i32, CliError>;

fn dispatch(
    command: Command,
    budget: &Budget,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CliResult {
    match command {
        Command::Parse | Command::Print => canonicalize(stdin, stdout),
        Command::Encode => encode(stdin, stdout),
        Command::Decode { code } => decode(code, budget, stdin, stdout),
        Command::CheckProof { file } => check_proof_file(&file, stdout),
        Command::BuildB {
            file,
            var,
            aux,
            inner,
            nonstrict,
        } => build_b_cmd(&file, var, aux.as_deref(), inner, style(nonstrict), stdout),
        Command::RecognizeB { file, nonstrict } => {
            recognize_b_cmd(&file, style(nonstrict), stdout)
        }
        Command::DecideR { l, m, n, nonstrict } => {
            decide_r_cmd(&l, &m, n, style(nonstrict), budget, stdout)
        }
        Command::BuildBerry { r, k, l2, out } => build_berry_cmd(&r, k, l2, &out, stdout, stderr),
        Command::Certify { input } => certify_cmd(&input, stdout),
    }
}

fn style(nonstrict: bool) -> TemplateStyle {
    if nonstrict {
        TemplateStyle::Nonstrict
    } else {
        TemplateStyle::Strict
    }
}

fn out_line(stdout: &mut dyn Write, line: impl std::fmt::Display) -> Result<(), CliError> {
    writeln!(stdout, "{line}").map_err(|e| usage(format!("write failed: {e}")))
}

/// Formula lines from a reader: blank lines and `#` comments skipped.
fn formula_lines(stdin: &mut dyn BufRead) -> Result<Vec<(usize, Formula)>, CliError> {
    let mut out = Vec::new();
    for (i, line) in stdin.lines().enumerate() {
        let line = line.map_err(|e| usage(format!("read failed: {e}")))?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let f = parse_formula(trimmed)
            .map_err(|e| usage(format!("line {}: {e}", i + 1)))?;
        out.push((i + 1, f));
    }
    Ok(out)
}

fn read_formula_file(path: &Path) -> Result<Formula, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let mut formulas = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        formulas.push(
            parse_formula(trimmed)
                .map_err(|e| usage(format!("{} line {}: {e}", path.display(), i + 1)))?,
        );
    }
    match formulas.len() {
        1 => Ok(formulas.pop().unwrap()),
        0 => Err(usage(format!("{}: no formula found", path.display()))),
        n => Err(usage(format!(
            "{}: expected one formula, found {n}",
            path.display()
        ))),
    }
}

fn canonicalize(stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> CliResult {
    for (_, f) in formula_lines(stdin)? {
        out_line(stdout, print_formula(&f))?;
    }
    Ok(EXIT_OK)
}

fn encode(stdin: &mut dyn BufRead, stdout: &mut dyn Write) -> CliResult {
    for (_, f) in formula_lines(stdin)? {
        out_line(stdout, encode_formula(&f))?;
    }
    Ok(EXIT_OK)
}

fn decode(
    code: Option<String>,
    budget: &Budget,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
) -> CliResult {
    let mut inputs = Vec::new();
    match code {
        Some(c) => inputs.push(c),
        None => {
            for line in stdin.lines() {
                let line = line.map_err(|e| usage(format!("read failed: {e}")))?;
                let trimmed = line.trim();
                if !trimmed.is_empty() && !trimmed.starts_with('#') {
                    inputs.push(trimmed.to_string());
                }
            }
        }
    }
    for input in inputs {
        let code: Code = input
            .parse()
            .map_err(|_| usage(format!("{input:?} is not a decimal code")))?;
        match decode_formula(&code, budget) {
            Ok(f) => out_line(stdout, print_formula(&f))?,
            Err(e) if e.is_budget() => return Err(over_budget(e.to_string())),
            Err(e) => return Err(negative(e.to_string())),
        }
    }
    Ok(EXIT_OK)
}

fn check_proof_file(path: &Path, stdout: &mut dyn Write) -> CliResult {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let proof = parse_proof(&text).map_err(|e| usage(e.to_string()))?;
    match check_proof(&proof) {
        Ok(()) => {
            out_line(stdout, format!("valid: {} lines", proof.lines().len()))?;
            Ok(EXIT_OK)
        }
        Err(failure) => Err(negative(failure.to_string())),
    }
}

fn parse_aux(aux: Option<&str>, body: &Formula, var: VarIndex) -> Result<[VarIndex; 4], CliError> {
    match aux {
        Some(s) => {
            let parts: Vec<&str> = s.split(',').collect();
            if parts.len() != 4 {
                return Err(usage("--aux takes four comma-separated indices: y,u,v,w"));
            }
            let mut out = [0; 4];
            for (slot, part) in out.iter_mut().zip(parts) {
                *slot = part
                    .trim()
                    .parse()
                    .map_err(|_| usage(format!("bad aux index {part:?}")))?;
            }
            Ok(out)
        }
        None => {
            // smallest indices fresh for the body and distinct from var
            let used = body.all_vars();
            let mut out = [0; 4];
            let mut candidate = 0;
            for slot in &mut out {
                while candidate == var || used.contains(&candidate) {
                    candidate += 1;
                }
                *slot = candidate;
                candidate += 1;
            }
            Ok(out)
        }
    }
}

fn build_b_cmd(
    file: &Path,
    var: VarIndex,
    aux: Option<&str>,
    inner: bool,
    style: TemplateStyle,
    stdout: &mut dyn Write,
) -> CliResult {
    let body = read_formula_file(file)?;
    let aux = parse_aux(aux, &body, var)?;
    let built = if inner {
        build_b_inner(&body, var, aux, style)
    } else {
        build_b(&body, var, aux, style)
    }
    .map_err(|e| usage(e.to_string()))?;
    out_line(stdout, print_formula(&built))?;
    Ok(EXIT_OK)
}

fn recognize_b_cmd(file: &Path, style: TemplateStyle, stdout: &mut dyn Write) -> CliResult {
    let f = read_formula_file(file)?;
    match recognize_b(&f, style) {
        Some(rec) => {
            out_line(stdout, format!("body: {}", print_formula(&rec.body)))?;
            out_line(stdout, format!("x: x{}", rec.var_x))?;
            out_line(stdout, format!("y: x{}", rec.var_y))?;
            out_line(stdout, format!("u: x{}", rec.var_u))?;
            out_line(stdout, format!("v: x{}", rec.var_v))?;
            out_line(stdout, format!("w: x{}", rec.var_w))?;
            Ok(EXIT_OK)
        }
        None => Err(negative("not in the standard least-witness shape")),
    }
}

fn parse_formula_input(spec: &str) -> Result<FormulaInput, CliError> {
    if spec.bytes().all(|b| b.is_ascii_digit()) && !spec.is_empty() {
        Ok(FormulaInput::Code(spec.parse().expect("digits parse")))
    } else {
        Ok(FormulaInput::Formula(read_formula_file(Path::new(spec))?))
    }
}

fn parse_proof_input(spec: &str) -> Result<ProofInput, CliError> {
    if spec.bytes().all(|b| b.is_ascii_digit()) && !spec.is_empty() {
        Ok(ProofInput::Code(spec.parse().expect("digits parse")))
    } else {
        let text = std::fs::read_to_string(spec).map_err(|e| usage(format!("{spec}: {e}")))?;
        Ok(ProofInput::Proof(
            parse_proof(&text).map_err(|e| usage(e.to_string()))?,
        ))
    }
}

fn decide_r_cmd(
    l: &str,
    m: &str,
    n: u64,
    style: TemplateStyle,
    budget: &Budget,
    stdout: &mut dyn Write,
) -> CliResult {
    let l = parse_formula_input(l)?;
    let m = parse_proof_input(m)?;
    match decide_r(&l, &m, n, style, budget) {
        Ok(decision) => {
            write!(stdout, "{}", decision.trace.render())
                .map_err(|e| usage(format!("write failed: {e}")))?;
            out_line(stdout, format!("verdict: {}", decision.verdict))?;
            Ok(if decision.verdict {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Err(e) => Err(over_budget(e.to_string())),
    }
}

fn build_berry_cmd(
    r_path: &Path,
    k: u64,
    l2: Option<u64>,
    out_dir: &Path,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CliResult {
    let r = read_formula_file(r_path)?;
    let input = BerryInput::new(r, k).map_err(|e| usage(e.to_string()))?;
    let artifact = match l2 {
        Some(l2) => build_berry_with_l2(&input, l2),
        None => build_berry(&input),
    }
    .map_err(|e| usage(e.to_string()))?;
    let cert = certify(&artifact);

    std::fs::create_dir_all(out_dir)
        .map_err(|e| usage(format!("{}: {e}", out_dir.display())))?;
    let write = |name: &str, contents: String| -> Result<(), CliError> {
        let path = out_dir.join(name);
        std::fs::write(&path, contents).map_err(|e| usage(format!("{}: {e}", path.display())))
    };
    write(
        "exists_B_D.paf",
        format!("{}\n", print_formula(&artifact.exists_b_d)),
    )?;
    write("G.txt", format!("{}\n", artifact.g))?;
    write("certificate.txt", certificate_text(&cert))?;

    out_line(
        stdout,
        format!(
            "wrote {}: k = {}, L1 = {}, L2 = {}, c = {}, L = {}, bits(G) = {}",
            out_dir.display(),
            cert.k,
            cert.l1,
            cert.l2,
            cert.c,
            cert.len,
            cert.g_bits
        ),
    )?;
    if cert.verdict {
        out_line(stdout, "certificate verdict: true")?;
        Ok(EXIT_OK)
    } else {
        let _ = writeln!(stderr, "certificate verdict: false (see certificate.txt)");
        Ok(EXIT_NEGATIVE)
    }
}

fn certify_cmd(dir: &Path, stdout: &mut dyn Write) -> CliResult {
    let sentence_path = dir.join("exists_B_D.paf");
    let sentence = read_formula_file(&sentence_path)?;
    let artifact = rederive(&sentence).map_err(|e| negative(e.to_string()))?;

    let g_path = dir.join("G.txt");
    let g_text = std::fs::read_to_string(&g_path)
        .map_err(|e| usage(format!("{}: {e}", g_path.display())))?;
    let recorded: Code = g_text
        .trim()
        .parse()
        .map_err(|_| usage(format!("{}: not a decimal code", g_path.display())))?;
    if recorded != artifact.g {
        return Err(negative("recorded G does not match the re-encoded sentence"));
    }

    let cert = certify(&artifact);
    write!(stdout, "{}", certificate_text(&cert))
        .map_err(|e| usage(format!("write failed: {e}")))?;
    Ok(if cert.verdict { EXIT_OK } else { EXIT_NEGATIVE })
}
