//! Command-line front end: argument parsing, command dispatch, rendering.

pub mod check;

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use socle::convert::{
    defect, duallr_to_hom, duallr_to_socle, hom_to_duallr, hom_to_socle, socle_to_duallr, socle_to_hom,
};
use socle::embedding::{EmbeddingData, EmbeddingJson};
use socle::error::{ConvertError, ModuleError, RealizeError, ShapeError, SwitchError, TableauError};
use socle::realize::{realize_lr, realize_socle};
use socle::switching::{switch_with_order, trace, Owner, SwitchOrder, SwitchState};
use socle::tableau::{check as check_tableau, enumerate, lr_coefficient};
use socle::{Embedding, HomMatrix, ShapeTriple, SkewTableau, TableauKind};

use check::{run_check, Suite};

#[derive(Parser, Debug)]
#[command(
    name = "socle",
    version,
    about = "Socle tableaux, LR-tableaux and Hom-matrices of submodule embeddings"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Prime of the residue field (default 2, or the prime stored in an input file).
    #[arg(long, global = true)]
    pub prime: Option<u32>,
    /// Seed for random choices; `switch` uses a seeded random order when given.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Socle,
    Lr,
}

impl From<KindArg> for TableauKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Socle => TableauKind::Socle,
            KindArg::Lr => TableauKind::Lr,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Repr {
    Socle,
    Duallr,
    Hom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Counts,
    Realize,
    Hom,
    Switching,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Counts => Suite::Counts,
            SuiteArg::Realize => Suite::Realize,
            SuiteArg::Hom => Suite::Hom,
            SuiteArg::Switching => Suite::Switching,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List all tableaux of a shape.
    Enum {
        /// Shape triple `alpha/beta/gamma`, e.g. `42/532/31` or `4,2/5,3,2/3,1`.
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t = KindArg::Socle)]
        kind: KindArg,
    },
    /// Littlewood-Richardson coefficient of a shape.
    LrCoeff {
        #[arg(long)]
        shape: String,
    },
    /// All four tableaux, the Hom-matrix and the defect table of an embedding.
    Analyze {
        /// Embedding JSON file, or `-` for stdin.
        file: PathBuf,
    },
    /// Build an embedding with the given tableau.
    Realize {
        /// Tableau JSON file, or `-` for stdin.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = KindArg::Socle)]
        kind: KindArg,
    },
    /// Convert between socle tableau, dual LR-tableau and Hom-matrix.
    Convert {
        #[arg(long, value_enum)]
        from: Repr,
        #[arg(long, value_enum)]
        to: Repr,
        file: PathBuf,
    },
    /// Tableau switching of a socle tableau.
    Switch {
        file: PathBuf,
        /// Emit every intermediate state.
        #[arg(long)]
        trace: bool,
    },
    /// Run the property suites.
    Check {
        #[arg(long, default_value_t = 9)]
        max_beta: usize,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Random switching orders per tableau.
        #[arg(long, default_value_t = 5)]
        seeds: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Enum { .. } => "enum",
            Command::LrCoeff { .. } => "lr-coeff",
            Command::Analyze { .. } => "analyze",
            Command::Realize { .. } => "realize",
            Command::Convert { .. } => "convert",
            Command::Switch { .. } => "switch",
            Command::Check { .. } => "check",
        }
    }
}

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INTERNAL,
            message: message.into(),
        }
    }
}

impl From<ShapeError> for CliError {
    fn from(e: ShapeError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<TableauError> for CliError {
    fn from(e: TableauError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<ModuleError> for CliError {
    fn from(e: ModuleError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<ConvertError> for CliError {
    fn from(e: ConvertError) -> Self {
        CliError::input(e.to_string())
    }
}

impl From<RealizeError> for CliError {
    fn from(e: RealizeError) -> Self {
        match e {
            RealizeError::Tableau(_) | RealizeError::Module(_) => CliError::input(e.to_string()),
            RealizeError::ConditionStarViolated(_) | RealizeError::Internal(_) => CliError::internal(e.to_string()),
        }
    }
}

impl From<SwitchError> for CliError {
    fn from(e: SwitchError) -> Self {
        match e {
            SwitchError::Tableau(_) => CliError::input(e.to_string()),
            SwitchError::ShapeMismatch { .. } => CliError {
                code: EXIT_COUNTEREXAMPLE,
                message: e.to_string(),
            },
            SwitchError::NonTerminating(_) => CliError::internal(e.to_string()),
        }
    }
}

/// Result of one command: JSON payload, text rendering and exit code.
#[derive(Debug)]
pub struct Response {
    pub command: &'static str,
    pub result: Value,
    pub text: String,
    pub code: i32,
}

impl Response {
    fn ok(command: &'static str, result: Value, text: String) -> Self {
        Response {
            command,
            result,
            text,
            code: EXIT_OK,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let wrapped = json!({"version": 1, "command": self.command, "result": self.result});
                serde_json::to_string_pretty(&wrapped).expect("serializable") + "\n"
            }
            Format::Text => self.text.clone(),
        }
    }
}

/// Parses arguments and runs; returns stdout, stderr and the exit code.
pub fn main_with_args<I, T>(args: I) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                (text, String::new(), code)
            } else {
                (String::new(), text, code)
            };
        }
    };
    match execute(&cli) {
        Ok(resp) => (resp.render(cli.format), String::new(), resp.code),
        Err(e) => (String::new(), format!("error: {}\n", e.message), e.code),
    }
}

pub fn execute(cli: &Cli) -> Result<Response, CliError> {
    let name = cli.command.name();
    match &cli.command {
        Command::Enum { shape, kind } => cmd_enum(&parse_shape(shape)?, (*kind).into()),
        Command::LrCoeff { shape } => cmd_lr_coeff(&parse_shape(shape)?),
        Command::Analyze { file } => cmd_analyze(&read_embedding(file, cli.prime)?),
        Command::Realize { file, kind } => {
            cmd_realize(&read_tableau(file)?, (*kind).into(), prime_or_default(cli.prime)?)
        }
        Command::Convert { from, to, file } => cmd_convert(*from, *to, &read_input(file)?),
        Command::Switch { file, trace } => {
            let order = cli.seed.map_or(SwitchOrder::Deterministic, SwitchOrder::Seeded);
            cmd_switch(&read_tableau(file)?, order, *trace)
        }
        Command::Check { max_beta, suite, seeds } => {
            if *max_beta == 0 {
                return Err(CliError::input("--max-beta must be at least 1"));
            }
            let report = run_check(
                (*suite).into(),
                *max_beta,
                prime_or_default(cli.prime)?,
                cli.seed.unwrap_or(0),
                *seeds,
            );
            Ok(Response {
                command: name,
                result: report.to_json(),
                text: report.render_text(),
                code: report.exit_code(),
            })
        }
    }
}

fn prime_or_default(p: Option<u32>) -> Result<u32, CliError> {
    let p = p.unwrap_or(2);
    socle::dvrmod::check_prime(p)?;
    Ok(p)
}

fn parse_shape(s: &str) -> Result<ShapeTriple, CliError> {
    s.parse::<ShapeTriple>()
        .map_err(|e| CliError::input(format!("bad shape {s:?}: {e}")))
}

fn read_input(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::input(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn read_tableau(path: &Path) -> Result<SkewTableau, CliError> {
    Ok(SkewTableau::from_json(&read_input(path)?)?)
}

/// Reads an embedding; `prime` overrides the stored prime by reducing the coefficients.
fn read_embedding(path: &Path, prime: Option<u32>) -> Result<Embedding, CliError> {
    let text = read_input(path)?;
    let j: EmbeddingJson =
        serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    match prime {
        Some(p) if p != j.prime => Ok(EmbeddingData {
            beta: j.beta,
            generators: j.generators,
        }
        .reduce(p)?),
        _ => Ok(Embedding::from_json_value(&j)?),
    }
}

fn tableau_value(t: &SkewTableau) -> Value {
    json!(t.to_json_value())
}

pub fn cmd_enum(shape: &ShapeTriple, kind: TableauKind) -> Result<Response, CliError> {
    let ts = enumerate(shape, kind);
    let mut text = format!("{} {} tableaux of shape {}\n", ts.len(), kind.name(), shape);
    for t in &ts {
        text.push('\n');
        text.push_str(&t.render_text());
    }
    let result = json!({
        "shape": shape.to_string(),
        "kind": kind.name(),
        "count": ts.len(),
        "tableaux": ts.iter().map(tableau_value).collect::<Vec<_>>(),
    });
    Ok(Response::ok("enum", result, text))
}

pub fn cmd_lr_coeff(shape: &ShapeTriple) -> Result<Response, CliError> {
    let n = lr_coefficient(&shape.alpha, &shape.beta, &shape.gamma);
    Ok(Response::ok("lr-coeff", json!(n), format!("{n}\n")))
}

/// Defect table `d[ℓ−1][m−1]` for `1 ≤ ℓ ≤ m ≤ β₁+α₁`.
pub fn defect_table(x: &Embedding) -> Result<Vec<Vec<Option<usize>>>, CliError> {
    let top = x.beta().first() + x.alpha().first();
    let mut table = vec![vec![None; top]; top];
    for l in 1..=top {
        for m in l..=top {
            table[l - 1][m - 1] = Some(defect(x, l, m)?);
        }
    }
    Ok(table)
}

fn render_defect_table(table: &[Vec<Option<usize>>]) -> String {
    let width = table
        .iter()
        .flatten()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(table.len().to_string().len());
    let mut out = format!("{:>3} |", "l\\m");
    for m in 1..=table.len() {
        out.push_str(&format!(" {m:>width$}"));
    }
    out.push('\n');
    for (i, row) in table.iter().enumerate() {
        out.push_str(&format!("{:>3} |", i + 1));
        for v in row {
            match v {
                Some(v) => out.push_str(&format!(" {v:>width$}")),
                None => out.push_str(&format!(" {:>width$}", "")),
            }
        }
        out.push('\n');
    }
    out
}

/// Lays out text blocks next to each other under their titles.
fn side_by_side(blocks: &[(&str, String)]) -> String {
    let columns: Vec<Vec<String>> = blocks
        .iter()
        .map(|(title, body)| {
            std::iter::once(title.to_string())
                .chain(body.lines().map(str::to_string))
                .collect()
        })
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .map(|c| c.iter().map(|l| l.chars().count()).max().unwrap_or(0))
        .collect();
    let height = columns.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    for i in 0..height {
        let mut line = String::new();
        for (c, w) in columns.iter().zip(&widths) {
            let cell = c.get(i).map(String::as_str).unwrap_or("");
            line.push_str(cell);
            line.push_str(&" ".repeat(w - cell.chars().count() + 4));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn cmd_analyze(x: &Embedding) -> Result<Response, CliError> {
    let dual = x.dual();
    let sigma = x.socle_tableau();
    let gamma = x.lr_tableau();
    let sigma_dual = dual.socle_tableau();
    let gamma_dual = dual.lr_tableau();
    let h = x.hom_matrix();
    let table = defect_table(x)?;
    let shape = x.shape();
    let mut text = format!("type {}  prime {}\n\n", shape, x.prime());
    text.push_str(&side_by_side(&[
        ("Sigma", sigma.render_text()),
        ("Gamma", gamma.render_text()),
        ("Sigma*", sigma_dual.render_text()),
        ("Gamma*", gamma_dual.render_text()),
    ]));
    text.push_str("\nHom-matrix h[l][m]\n");
    text.push_str(&h.render_text());
    text.push_str("\ndefect d[l][m]\n");
    text.push_str(&render_defect_table(&table));
    let result = json!({
        "shape": shape.to_string(),
        "prime": x.prime(),
        "sigma": tableau_value(&sigma),
        "gamma": tableau_value(&gamma),
        "sigma_dual": tableau_value(&sigma_dual),
        "gamma_dual": tableau_value(&gamma_dual),
        "hom": h.to_json_value(),
        "defect": table,
    });
    Ok(Response::ok("analyze", result, text))
}

pub fn cmd_realize(t: &SkewTableau, kind: TableauKind, p: u32) -> Result<Response, CliError> {
    if !check_tableau(t, kind) {
        return Err(CliError::input(format!("not a valid {} tableau", kind.name())));
    }
    let x = match kind {
        TableauKind::Socle => realize_socle(t, p)?,
        TableauKind::Lr => realize_lr(t, p)?,
    };
    let back = match kind {
        TableauKind::Socle => x.socle_tableau(),
        TableauKind::Lr => x.lr_tableau(),
    };
    if &back != t {
        return Err(CliError::internal("realized embedding has a different tableau"));
    }
    let j = x.to_json_value()?;
    let text = serde_json::to_string(&j).expect("serializable") + "\n";
    Ok(Response::ok("realize", json!(j), text))
}

enum Item {
    Tableau(SkewTableau),
    Hom(HomMatrix),
}

pub fn cmd_convert(from: Repr, to: Repr, input: &str) -> Result<Response, CliError> {
    let source = match from {
        Repr::Hom => Item::Hom(HomMatrix::from_json(input)?),
        Repr::Socle | Repr::Duallr => {
            let t = SkewTableau::from_json(input)?;
            let kind = if from == Repr::Socle {
                TableauKind::Socle
            } else {
                TableauKind::Lr
            };
            if !check_tableau(&t, kind) {
                return Err(CliError::input(format!("not a valid {} tableau", kind.name())));
            }
            Item::Tableau(t)
        }
    };
    let out = match (source, to) {
        (Item::Tableau(t), Repr::Socle) if from == Repr::Socle => Item::Tableau(t),
        (Item::Tableau(t), Repr::Duallr) if from == Repr::Duallr => Item::Tableau(t),
        (Item::Tableau(t), Repr::Duallr) => Item::Tableau(socle_to_duallr(&t)?),
        (Item::Tableau(t), Repr::Socle) => Item::Tableau(duallr_to_socle(&t)?),
        (Item::Tableau(t), Repr::Hom) if from == Repr::Socle => Item::Hom(socle_to_hom(&t)?),
        (Item::Tableau(t), Repr::Hom) => Item::Hom(duallr_to_hom(&t)?),
        (Item::Hom(h), Repr::Hom) => Item::Hom(h),
        (Item::Hom(h), Repr::Socle) => Item::Tableau(hom_to_socle(&h)?),
        (Item::Hom(h), Repr::Duallr) => Item::Tableau(hom_to_duallr(&h)?),
    };
    let (result, text) = match out {
        Item::Tableau(t) => (tableau_value(&t), t.render_text()),
        Item::Hom(h) => (h.to_json_value(), h.render_text()),
    };
    Ok(Response::ok("convert", result, text))
}

fn state_value(st: &SwitchState) -> Value {
    json!({ "grid": st.grid_json() })
}

pub fn cmd_switch(sigma: &SkewTableau, order: SwitchOrder, with_trace: bool) -> Result<Response, CliError> {
    let (t, end) = switch_with_order(sigma, order)?;
    let swaps = end.history().len();
    let mut result = json!({
        "order": match order {
            SwitchOrder::Deterministic => json!("deterministic"),
            SwitchOrder::Seeded(s) => json!({"seed": s}),
        },
        "swaps": swaps,
        "tableau": tableau_value(&t),
    });
    let mut text = String::new();
    if with_trace {
        let states = trace(sigma, order)?;
        let mut steps = Vec::new();
        for (i, st) in states.iter().enumerate() {
            let mut v = state_value(st);
            if i > 0 {
                let sw = &end.history()[i - 1];
                v["swap"] = json!(sw);
                text.push_str(&format!(
                    "step {i}: S {} at {} <-> T {} at {}\n",
                    sw.s_entry, sw.s_cell, sw.t_entry, sw.t_cell
                ));
            } else {
                text.push_str("initial\n");
            }
            text.push_str(&st.render_text());
            text.push('\n');
            steps.push(v);
        }
        result["trace"] = Value::Array(steps);
    }
    let t_region = end.region(Owner::T).len();
    text.push_str(&format!("{swaps} swaps, T region of size {t_region}\n"));
    text.push_str(&t.render_text());
    Ok(Response::ok("switch", result, text))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (String, String, i32) {
        main_with_args(std::iter::once("socle").chain(args.iter().copied()))
    }

    #[test]
    fn enum_counts_the_example_shape() {
        let (out, _, code) = run(&["enum", "--shape", "42/532/31", "--kind", "socle"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("2 socle tableaux"));
        let (out, _, _) = run(&["--format", "json", "enum", "--shape", "4,2/5,3,2/3,1", "--kind", "lr"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["version"], 1);
        assert_eq!(v["command"], "enum");
        assert_eq!(v["result"]["count"], 2);
    }

    #[test]
    fn lr_coefficients() {
        assert_eq!(run(&["lr-coeff", "--shape", "42/642/42"]).0, "3\n");
        assert_eq!(run(&["lr-coeff", "--shape", "1/2/1"]).0, "1\n");
    }

    #[test]
    fn bad_input_exits_with_one() {
        let (_, err, code) = run(&["enum", "--shape", "42/532"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error:"));
        assert_eq!(run(&["frobnicate"]).2, 1);
        assert_eq!(run(&["analyze", "/nonexistent.json"]).2, 1);
        assert_eq!(run(&["--prime", "4", "check", "--suite", "counts"]).2, 1);
        assert_eq!(run(&["--help"]).2, 0);
    }

    #[test]
    fn side_by_side_pads_columns() {
        let s = side_by_side(&[("A", "1\n22\n".into()), ("B", "3\n".into())]);
        assert_eq!(s, "A     B\n1     3\n22\n");
    }

    #[test]
    fn convert_round_trips() {
        let sigma = check::FIXTURE_SIGMA2;
        let g = cmd_convert(Repr::Socle, Repr::Duallr, sigma).unwrap();
        let gd: Value = serde_json::from_str(check::FIXTURE_GAMMA2_DUAL).unwrap();
        assert_eq!(g.result, gd);
        let h = cmd_convert(Repr::Socle, Repr::Hom, sigma).unwrap();
        let back = cmd_convert(Repr::Hom, Repr::Socle, &h.result.to_string()).unwrap();
        let s: Value = serde_json::from_str(sigma).unwrap();
        assert_eq!(back.result, s);
        let h2 = cmd_convert(Repr::Duallr, Repr::Hom, &g.result.to_string()).unwrap();
        assert_eq!(h2.result, h.result);
        assert_eq!(cmd_convert(Repr::Duallr, Repr::Socle, sigma).unwrap_err().code, 1);
    }

    #[test]
    fn switch_trace_has_nine_states() {
        let sigma = SkewTableau::from_json(check::FIXTURE_SIGMA2).unwrap();
        let r = cmd_switch(&sigma, SwitchOrder::Deterministic, true).unwrap();
        assert_eq!(r.result["swaps"], 8);
        assert_eq!(r.result["trace"].as_array().unwrap().len(), 9);
        assert_eq!(r.result["trace"][0]["grid"][0][2]["owner"], "T");
        let gd: Value = serde_json::from_str(check::FIXTURE_GAMMA2_DUAL).unwrap();
        assert_eq!(r.result["tableau"], gd);
    }
}
