//! Command dispatch for the `mtclab` binary.
//!
//! Exit status: 0 on success or a closed classification, 1 when violations
//! are found or a classification stays open, 2 on input errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::catalog;
use crate::classifier::{brute_force_dims, classify, Verdict};
use crate::cyclotomic::Cyclotomic;
use crate::lattice::analyze;
use crate::modular::{
    equal_row_detector, is_modular, orbit_zero_check, parse_modular_with_base, perfect_checks, s_times_conj_s,
    verify_balancing, zero_witnesses, ModularData,
};
use crate::ring::{parse_ring, validate_fusion_ring, FusionRing};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FOUND: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    /// Pretty-printed JSON with exact numbers only.
    Machine,
}

#[derive(Debug, Parser)]
#[command(name = "mtclab", version, about = "Fusion rings, modular data and MNSD classification traces")]
pub struct CommandConfig {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the fusion-ring axioms.
    Validate {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Dimensions, invertibles, grading, adjoint, stabilizers, central series.
    Analyze {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Balancing, modularity and S-matrix zero checks.
    ModularVerify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Run the case analysis for an odd rank.
    Classify {
        #[arg(long)]
        rank: u64,
        /// Write the proof trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Exhaustive search for perfect-case dimension vectors.
    OracleDims {
        #[arg(long)]
        rank: u64,
        #[arg(long)]
        bound: u64,
    },
    /// Write the bundled rings and modular data.
    ExamplesExport {
        #[arg(long, default_value = "catalog")]
        out: PathBuf,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: Format,
}

impl Io<'_> {
    fn fail(&mut self, msg: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.err, "error: {msg}");
        EXIT_INPUT
    }

    fn emit(&mut self, text: &str, machine: &impl Serialize) {
        match self.format {
            Format::Text => {
                let _ = self.out.write_all(text.as_bytes());
            }
            Format::Machine => {
                let s = serde_json::to_string_pretty(machine).expect("serializable");
                let _ = writeln!(self.out, "{s}");
            }
        }
    }
}

pub fn run(config: &CommandConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut io = Io { out, err, format: config.format };
    match &config.command {
        Command::Validate { files } => validate(&mut io, files),
        Command::Analyze { files } => analyze_files(&mut io, files),
        Command::ModularVerify { files } => modular_verify(&mut io, files),
        Command::Classify { rank, trace } => classify_cmd(&mut io, *rank, trace.as_deref()),
        Command::OracleDims { rank, bound } => oracle_dims(&mut io, *rank, *bound),
        Command::ExamplesExport { out } => export(&mut io, out),
    }
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_ring(path: &Path) -> Result<FusionRing, String> {
    parse_ring(&read(path)?).map_err(|e| format!("{}: {e}", path.display()))
}

fn validate(io: &mut Io, files: &[PathBuf]) -> i32 {
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut status = EXIT_OK;
    for f in files {
        let ring = match load_ring(f) {
            Ok(r) => r,
            Err(e) => return io.fail(e),
        };
        let report = validate_fusion_ring(&ring);
        if report.is_valid() {
            text.push_str(&format!("{}: valid (rank {})\n", f.display(), ring.rank()));
        } else {
            status = EXIT_FOUND;
            text.push_str(&format!("{}: {} violation(s)\n", f.display(), report.violations.len()));
            for v in &report.violations {
                text.push_str(&format!("  {v}\n"));
            }
        }
        reports.push(json!({"file": f.display().to_string(), "rank": ring.rank(), "violations": report.violations}));
    }
    io.emit(&text, &reports);
    status
}

fn analyze_files(io: &mut Io, files: &[PathBuf]) -> i32 {
    let mut text = String::new();
    let mut reports = Vec::new();
    for f in files {
        let ring = match load_ring(f) {
            Ok(r) => r,
            Err(e) => return io.fail(e),
        };
        let report = validate_fusion_ring(&ring);
        if let Some(v) = report.violations.first() {
            return io.fail(format!("{}: not a fusion ring: {v}", f.display()));
        }
        let a = match analyze(&ring) {
            Ok(a) => a,
            Err(e) => return io.fail(format!("{}: {e}", f.display())),
        };
        text.push_str(&format!("== {}\n{}", f.display(), a.to_text()));
        reports.push(json!({"file": f.display().to_string(), "analysis": a}));
    }
    io.emit(&text, &reports);
    EXIT_OK
}

fn cyc(c: &Cyclotomic) -> serde_json::Value {
    json!({"conductor": c.conductor(), "coeffs": c.coeffs().iter().map(|q| q.to_string()).collect::<Vec<_>>()})
}

/// `Some(c)` when `S·conj(S) = c·I`.
fn scalar_gram(md: &ModularData) -> Option<Cyclotomic> {
    let g = s_times_conj_s(md);
    let c = g[0][0].clone();
    let ok = g
        .iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, v)| if i == j { *v == c } else { v.is_zero() }));
    ok.then_some(c)
}

fn modular_verify(io: &mut Io, files: &[PathBuf]) -> i32 {
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut status = EXIT_OK;
    for f in files {
        let md = match read(f)
            .and_then(|t| parse_modular_with_base(&t, f.parent()).map_err(|e| format!("{}: {e}", f.display())))
        {
            Ok(m) => m,
            Err(e) => return io.fail(e),
        };
        if let Some(v) = validate_fusion_ring(md.ring()).violations.first() {
            return io.fail(format!("{}: ring is not a fusion ring: {v}", f.display()));
        }
        let balancing = match verify_balancing(&md) {
            Ok(b) => b,
            Err(e) => return io.fail(format!("{}: {e}", f.display())),
        };
        let modular = is_modular(&md);
        let gram = scalar_gram(&md);
        let zeros = if modular { Some(zero_witnesses(&md)) } else { None };
        let orbit = orbit_zero_check(&md);
        let equal_rows = equal_row_detector(&md);
        let perfect = perfect_checks(&md, false);
        let zero_error = matches!(zeros, Some(Err(_)));
        if !balancing.is_empty() || !modular || !orbit.is_empty() || zero_error || !perfect.is_clean() {
            status = EXIT_FOUND;
        }

        text.push_str(&format!("== {} (rank {}, conductor {})\n", f.display(), md.rank(), md.conductor()));
        text.push_str(&format!(
            "balancing: {}\n",
            if balancing.is_empty() { "ok".to_string() } else { format!("{balancing:?}") }
        ));
        text.push_str(&format!("modular: {modular}\n"));
        if let Some(c) = &gram {
            text.push_str(&format!("S·conj(S) = ({c})·I\n"));
        }
        match &zeros {
            Some(Ok(w)) => text.push_str(&format!("zero witnesses: {w:?}\n")),
            Some(Err(e)) => text.push_str(&format!("zero witnesses: {e}\n")),
            None => text.push_str("zero witnesses: skipped (not modular)\n"),
        }
        text.push_str(&format!("orbit-zero violations: {}\n", orbit.len()));
        text.push_str(&format!("equal rows: {equal_rows:?}\n"));
        text.push_str(&format!("perfect checks: {perfect:?}\n"));

        let zeros_json = match &zeros {
            Some(Ok(w)) => json!(w),
            Some(Err(e)) => json!({"error": e.to_string()}),
            None => serde_json::Value::Null,
        };
        reports.push(json!({
            "file": f.display().to_string(),
            "rank": md.rank(),
            "conductor": md.conductor(),
            "balancing": balancing,
            "modular": modular,
            "s_conj_s_scalar": gram.as_ref().map(cyc),
            "zero_witnesses": zeros_json,
            "orbit_violations": orbit,
            "equal_rows": equal_rows,
            "perfect_checks": perfect,
        }));
    }
    io.emit(&text, &reports);
    status
}

fn classify_cmd(io: &mut Io, rank: u64, trace: Option<&Path>) -> i32 {
    let c = match classify(rank) {
        Ok(c) => c,
        Err(e) => return io.fail(e),
    };
    if let Some(path) = trace {
        if let Err(e) = std::fs::write(path, c.trace_text()) {
            return io.fail(format!("{}: {e}", path.display()));
        }
    }
    io.emit(&c.to_text(), &c);
    match c.verdict {
        Verdict::Pointed | Verdict::PointedOrPerfect => EXIT_OK,
        Verdict::Open => EXIT_FOUND,
    }
}

fn oracle_dims(io: &mut Io, rank: u64, bound: u64) -> i32 {
    if rank.is_multiple_of(2) || rank < 3 {
        return io.fail(format!("rank {rank} must be odd and at least 3"));
    }
    if bound.is_multiple_of(2) {
        return io.fail(format!("bound {bound} must be odd"));
    }
    let sols = brute_force_dims(rank, bound);
    let mut text = String::new();
    for s in &sols {
        text.push_str(&s.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" "));
        text.push('\n');
    }
    text.push_str(&format!("{} solutions\n", sols.len()));
    io.emit(&text, &json!({"rank": rank, "bound": bound, "count": sols.len(), "solutions": sols}));
    EXIT_OK
}

fn export(io: &mut Io, dir: &Path) -> i32 {
    match catalog::export(dir) {
        Ok(paths) => {
            let names: Vec<String> = paths.iter().map(|p| p.display().to_string()).collect();
            let text: String = names.iter().map(|n| format!("wrote {n}\n")).collect();
            io.emit(&text, &json!({"written": names}));
            EXIT_OK
        }
        Err(e) => io.fail(format!("{}: {e}", dir.display())),
    }
}
