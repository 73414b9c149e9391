//! Command-line front end. Exit codes: 0 success or decided, 1 a
//! verification check failed, 2 input error.

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use num_traits::Zero;
use serde_json::json;

use crate::classify::{render_index_set, Rank1Entry, Table};
use crate::descriptor::Descriptor;
use crate::exec::{self, Mode};
use crate::picard::{self, BundleClass, LineBundle};
use crate::rootsys::{Family, RootSystem, Weight};
use crate::strict;
use crate::verify::{suite, CaseReport, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "wonderful", version, about = "Simple-immersion checks for wonderful varieties")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List rank-one classification entries.
    ClassifyList {
        #[arg(long)]
        table: Option<PathBuf>,
        /// Only adjoint entries with non-self-normalizing stabilizer.
        #[arg(long)]
        non_strict: bool,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Decide simple immersibility of a descriptor.
    StrictCheck {
        descriptor: PathBuf,
        #[arg(long)]
        table: Option<PathBuf>,
        /// Also list the module weights for ample bundles with coefficients in [1, K].
        #[arg(long)]
        coeff_bound: Option<i64>,
        #[arg(long)]
        json: bool,
    },
    /// Re-run the explicit rank-one computations for a case
    /// (1A2, 9B, 9C, 15, 11, 14 or all).
    Verify {
        case: String,
        /// Rank parameter for 9B and 9C.
        #[arg(long)]
        n: Option<usize>,
        /// Grid bound for 1A2.
        #[arg(long)]
        grid: Option<u32>,
        /// Seed for jacobian sampling; without it no sampling is done.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        sequential: bool,
        #[arg(long)]
        json: bool,
    },
    /// Bundle class, section weights and very-ampleness for a line bundle.
    Picard {
        /// Descriptor file; alternatively use --entry.
        descriptor: Option<PathBuf>,
        /// Table entry label, instantiated at --n.
        #[arg(long)]
        entry: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        table: Option<PathBuf>,
        /// Comma-separated colour coefficients, in colour order.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        coeffs: Vec<i64>,
        /// With --entry: test very-ampleness for every ample vector in [1, K].
        #[arg(long)]
        coeff_bound: Option<i64>,
        #[arg(long)]
        json: bool,
    },
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Res = Result<i32, InputError>;

fn load_table(path: &Option<PathBuf>) -> Result<Table, InputError> {
    match path {
        None => Ok(Table::builtin()),
        Some(p) => {
            let bytes = std::fs::read(p).map_err(|e| InputError(format!("{}: {e}", p.display())))?;
            Table::load(&bytes).map_err(|e| InputError(format!("{}: {e}", p.display())))
        }
    }
}

fn load_descriptor(path: &PathBuf) -> Result<Descriptor, InputError> {
    let s = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    Descriptor::from_json(&s).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

/// `Σ ⟨w, α_i∨⟩ ω_i`.
pub fn fundamental_form(rs: &RootSystem, w: &Weight) -> String {
    let terms: Vec<String> = picard::dominant_coordinates(rs, w)
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| if *c == crate::symalg::q(1) { format!("ω{}", i + 1) } else { format!("{c}ω{}", i + 1) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

fn entry_row(e: &Rank1Entry) -> serde_json::Value {
    json!({
        "label": e.label,
        "family": e.family.to_string(),
        "rank_min": e.rank_min,
        "rank_max": e.rank_max,
        "gamma": e.gamma.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" + "),
        "sp": render_index_set(&e.sp),
        "strict": e.self_normalizing,
        "adjoint": e.adjoint,
    })
}

fn classify_list(out: &mut dyn Write, table: &Option<PathBuf>, non_strict: bool, family: &Option<String>, as_json: bool) -> Res {
    let mut t = load_table(table)?;
    if let Some(f) = family {
        t = t.restrict_family(Family::from_str(f)?);
    }
    let rows: Vec<&Rank1Entry> = if non_strict { t.non_strict_entries() } else { t.entries.iter().collect() };
    if as_json {
        writeln!(out, "{}", serde_json::to_string_pretty(&rows.iter().map(|e| entry_row(e)).collect::<Vec<_>>())?)?;
        return Ok(EXIT_OK);
    }
    for e in rows {
        let ranks = match (e.rank_param, e.rank_max) {
            (false, _) => format!("{}{}", e.family, e.rank_min),
            (true, Some(m)) => format!("{}{}..{}{}", e.family, e.rank_min, e.family, m),
            (true, None) => format!("{}n, n≥{}", e.family, e.rank_min),
        };
        let gamma = e.gamma.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" + ");
        let strict = if e.self_normalizing { "strict" } else { "non-strict" };
        let adj = if e.adjoint { "" } else { " (centre acts)" };
        writeln!(out, "{:<8} {:<12} γ = {:<36} sp = {:<12} {strict}{adj}", e.label, ranks, gamma, render_index_set(&e.sp))?;
    }
    Ok(EXIT_OK)
}

fn strict_check(out: &mut dyn Write, path: &PathBuf, table: &Option<PathBuf>, bound: Option<i64>, as_json: bool) -> Res {
    let d = load_descriptor(path)?;
    let t = load_table(table)?;
    let v = strict::is_simply_immersible(&d, &t)?;
    let weights = match bound {
        Some(b) if v.immersible => Some(strict::admissible_module_weights(&d, &t, b)?),
        _ => None,
    };
    let rs = d.root_system()?;
    if as_json {
        let mut j = serde_json::to_value(&v)?;
        if let Some(ws) = &weights {
            j["module_weights"] = json!(ws.iter().map(|w| fundamental_form(&rs, w)).collect::<Vec<_>>());
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&j)?)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "{}", if v.immersible { "YES" } else { "NO" })?;
    if !v.adjoint {
        writeln!(out, "  centre acts nontrivially")?;
    }
    for r in &v.roots {
        if r.pass {
            writeln!(out, "  γ{} = {}: (R') holds", r.index + 1, r.gamma)?;
        } else {
            writeln!(out, "  γ{} = {}: (R') fails, 2γ matches {}", r.index + 1, r.gamma, r.witnesses.join(", "))?;
        }
    }
    if let Some(ws) = weights {
        writeln!(out, "  module weights:")?;
        for w in ws {
            writeln!(out, "    {}", fundamental_form(&rs, &w))?;
        }
    }
    Ok(EXIT_OK)
}

fn render_report(out: &mut dyn Write, r: &CaseReport) -> std::io::Result<()> {
    let n = r.n.map(|n| format!(" (n = {n})")).unwrap_or_default();
    let seed = r.seed.map(|s| format!(", seed {s}")).unwrap_or_default();
    writeln!(out, "case {}{n}{seed}: {}", r.case, if r.passed() { "PASS" } else { "FAIL" })?;
    for c in &r.checks {
        let tag = if c.published { "published" } else { "derived" };
        writeln!(out, "  {} [{tag}] {}", if c.pass { "PASS" } else { "FAIL" }, c.name)?;
        if !c.detail.is_empty() {
            writeln!(out, "       {}", c.detail)?;
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify(
    out: &mut dyn Write,
    case: &str,
    n: Option<usize>,
    grid: Option<u32>,
    seed: Option<u64>,
    sequential: bool,
    as_json: bool,
) -> Res {
    let mode = if sequential { Mode::Sequential } else { Mode::default() };
    let opts = VerifyOptions { seed, mode, ..VerifyOptions::default() };
    let labels: Vec<&str> = if case == "all" { suite::CASES.to_vec() } else { vec![case] };
    if let Some(bad) = labels.iter().find(|l| !suite::CASES.contains(l)) {
        return Err(InputError(format!("unknown case {bad:?}; expected one of {} or all", suite::CASES.join(", "))));
    }
    let results = exec::map(mode, &labels, |l| {
        let size = if *l == "1A2" { grid.map(|g| g as usize) } else { n };
        suite::run(l, size, &opts)
    });
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    if as_json {
        writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?;
    } else {
        for r in &reports {
            render_report(out, r)?;
        }
    }
    Ok(if reports.iter().all(|r| r.passed()) { EXIT_OK } else { EXIT_FAIL })
}

#[allow(clippy::too_many_arguments)]
fn picard_cmd(
    out: &mut dyn Write,
    descriptor: &Option<PathBuf>,
    entry: &Option<String>,
    n: Option<usize>,
    table: &Option<PathBuf>,
    coeffs: &[i64],
    bound: Option<i64>,
    as_json: bool,
) -> Res {
    let (d, instance) = match (descriptor, entry) {
        (Some(p), None) => (load_descriptor(p)?, None),
        (None, Some(label)) => {
            let t = load_table(table)?;
            let e = t.get(label).ok_or_else(|| InputError(format!("no entry {label:?}")))?;
            let n = n.unwrap_or(e.rank_min);
            (e.to_descriptor(n).map_err(InputError)?, Some(e.instantiate(n).map_err(InputError)?))
        }
        _ => return Err(InputError("give exactly one of a descriptor file or --entry".into())),
    };
    let rs = d.root_system()?;
    let mut j = json!({});
    let mut text = Vec::new();
    if !coeffs.is_empty() || bound.is_none() {
        let l = if coeffs.is_empty() { LineBundle::uniform(&d, 1) } else { LineBundle::new(&d, coeffs)? };
        let class = picard::classify_bundle(&d, &l)?;
        let chi = picard::canonical_weight(&d, &l)?;
        j["bundle"] = json!(l.coeffs);
        j["class"] = serde_json::to_value(class)?;
        j["chi"] = json!(fundamental_form(&rs, &chi));
        text.push(format!("class: {}", serde_json::to_value(class)?.as_str().unwrap_or_default()));
        text.push(format!("χ_L = {}", fundamental_form(&rs, &chi)));
        if class != BundleClass::Neither {
            let ws = picard::section_weights(&d, &l)?;
            let rendered: Vec<String> = ws.iter().rev().map(|w| fundamental_form(&rs, w)).collect();
            text.push(format!("section weights: {}", rendered.join(", ")));
            j["section_weights"] = json!(rendered);
        }
        if let Some(inst) = &instance {
            if !inst.self_normalizing && class == BundleClass::Ample {
                let cs: Vec<i64> = l.coeffs.values().copied().collect();
                let ok = picard::very_ample_witness(inst, &cs)?;
                text.push(format!("very ample: {ok}"));
                j["very_ample"] = json!(ok);
            }
        }
    }
    if let Some(b) = bound {
        let inst = instance.as_ref().ok_or_else(|| InputError("--coeff-bound needs --entry".into()))?;
        let k = inst.colours.len();
        let mut cs = vec![1i64; k];
        let mut failures = Vec::new();
        let mut count = 0;
        'outer: loop {
            count += 1;
            if !picard::very_ample_witness(inst, &cs)? {
                failures.push(format!("{cs:?}"));
            }
            for c in cs.iter_mut() {
                if *c < b {
                    *c += 1;
                    continue 'outer;
                }
                *c = 1;
            }
            break;
        }
        text.push(format!("very ample on [1,{b}]^{k}: {} of {count} vectors", count - failures.len()));
        j["very_ample_grid"] = json!({"bound": b, "checked": count, "failures": failures});
    }
    if as_json {
        writeln!(out, "{}", serde_json::to_string_pretty(&j)?)?;
    } else {
        for line in text {
            writeln!(out, "{line}")?;
        }
    }
    Ok(EXIT_OK)
}

/// Runs the CLI on `args` (including the program name), writing reports to
/// `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    let res = match &cli.command {
        Command::ClassifyList { table, non_strict, family, json } => classify_list(out, table, *non_strict, family, *json),
        Command::StrictCheck { descriptor, table, coeff_bound, json } => {
            strict_check(out, descriptor, table, *coeff_bound, *json)
        }
        Command::Verify { case, n, grid, seed, sequential, json } => {
            verify(out, case, *n, *grid, *seed, *sequential, *json)
        }
        Command::Picard { descriptor, entry, n, table, coeffs, coeff_bound, json } => {
            picard_cmd(out, descriptor, entry, *n, table, coeffs, *coeff_bound, *json)
        }
    };
    match res {
        Ok(code) => code,
        Err(InputError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}
