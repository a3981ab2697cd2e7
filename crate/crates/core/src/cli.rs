//! Command-line front end. `run` parses arguments, runs the pipeline and
//! returns the process exit code.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::catalog::{catalog, catalog_lookup};
use crate::error::{Error, Result};
use crate::group::{abelianization, find_complement, make_named_group, make_semidirect, FiniteGroup};
use crate::report::{CatalogCheck, CatalogStatus, DecompositionEntry, ReportJson, Timing, Verifications, SCHEMA_VERSION};
use crate::tensor::{homotopy_invariants_with, property_suite, HomotopyInvariants, Method, TensorOptions, TensorSquare};
use crate::theorems::{
    green_bound_check, odd_splitting, verify_complement_case_with, verify_decomposition, verify_semidirect_decomposition,
    Status,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CATALOG_MISMATCH: i32 = 2;
pub const EXIT_RESOURCE_CAP: i32 = 3;
pub const EXIT_VERIFICATION_FAILED: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "tensorsq", version, about = "Nonabelian tensor squares and the invariants pi3, pi2s, H2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute invariants of one or more groups.
    Compute(ComputeArgs),
    /// Print the expected-value catalog.
    Catalog {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct ComputeArgs {
    /// Group spec: S4, A5, C2xC4, D8, Q8, GL(2,3), sdp(C3,C2,inversion), perm:...
    #[arg(long = "group", required = true, num_args = 1..)]
    groups: Vec<String>,
    #[arg(long, default_value = "auto")]
    method: Method,
    /// Coset table budget in cells.
    #[arg(long)]
    max_cells: Option<usize>,
    /// Largest group order accepted for the presentation method.
    #[arg(long)]
    max_order: Option<u64>,
    /// Compare against the catalog; exit 2 on disagreement.
    #[arg(long)]
    check_catalog: bool,
    #[arg(long, value_enum)]
    verify: Vec<Verify>,
    /// Write the JSON report to a path, or `-` for stdout.
    #[arg(long)]
    json: Option<String>,
    /// Write the tensor-square presentation as text.
    #[arg(long)]
    dump_presentation: Option<PathBuf>,
    /// Write the coset table of the tensor square as CSV.
    #[arg(long)]
    emit_table: Option<PathBuf>,
    /// Compute several groups concurrently.
    #[arg(long)]
    parallel: bool,
    /// Leave the timing field out of the report.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Verify {
    /// Kernels of `p ⊗ p` for `G = N ⋊ H` (the sdp factors, or `N = G′` with a complement).
    #[value(name = "thm31", alias = "decomposition")]
    Decomposition,
    /// `∇(G) ≅ ∇(G_ab)` and `Δ(G) ≅ Δ(G_ab)` when `G′` has a complement.
    #[value(name = "cor47", alias = "complement")]
    Complement,
    /// The splitting map when every `g ⊗ g` has odd order.
    #[value(name = "thm48", alias = "odd-splitting")]
    OddSplitting,
    /// The bound on `|π₂^S|` from the order of `G` and `G_ab`.
    Green,
    /// Structural checks on the tensor square.
    Properties,
    All,
}

#[derive(Clone, Debug)]
pub struct ComputeRequest {
    pub method: Method,
    pub options: TensorOptions,
    pub check_catalog: bool,
    pub verify: BTreeSet<Verify>,
    pub timing: bool,
    /// Keep the tensor square even when the method does not need it.
    pub keep_square: bool,
}

impl Default for ComputeRequest {
    fn default() -> Self {
        ComputeRequest {
            method: Method::Auto,
            options: TensorOptions::default(),
            check_catalog: false,
            verify: BTreeSet::new(),
            timing: true,
            keep_square: false,
        }
    }
}

pub struct Computed {
    pub report: ReportJson,
    pub square: Option<TensorSquare>,
}

fn square<'a>(slot: &'a mut Option<TensorSquare>, g: &FiniteGroup, options: &TensorOptions) -> Result<&'a TensorSquare> {
    if slot.is_none() {
        *slot = Some(TensorSquare::new(g, options)?);
    }
    Ok(slot.as_ref().expect("just built"))
}

fn invariants(
    spec: &str,
    g: &FiniteGroup,
    req: &ComputeRequest,
    slot: &mut Option<TensorSquare>,
) -> Result<(HomotopyInvariants, Method)> {
    let abelian = g.is_abelian();
    match req.method {
        Method::Presentation => Ok((HomotopyInvariants::from_tensor_square(square(slot, g, &req.options)?), Method::Presentation)),
        Method::Auto if !abelian => invariants(spec, g, &ComputeRequest { method: Method::Presentation, ..req.clone() }, slot),
        _ if abelian => homotopy_invariants_with(g, Method::ClosedForm, &req.options),
        _ => catalog_lookup(spec)
            .ok()
            .and_then(|r| r.homotopy_invariants(g.derived_subgroup().order()))
            .map(|inv| (inv, Method::ClosedForm))
            .ok_or_else(|| Error::InfeasibleMethod {
                method: Method::ClosedForm.to_string(),
                reason: "the group is not abelian and has no complete catalog record".into(),
            }),
    }
}

fn decomposition(spec: &str, g: &FiniteGroup, options: &TensorOptions) -> Result<DecompositionEntry> {
    let entry = |report: crate::theorems::DecompositionReport| DecompositionEntry {
        status: report.status,
        reason: None,
        report: Some(report),
    };
    if spec.trim_start().starts_with("sdp(") {
        let s = make_semidirect(spec)?;
        return Ok(entry(verify_semidirect_decomposition(&s.action, options)?));
    }
    let n = g.derived_subgroup();
    match find_complement(g, &n)? {
        Some(b) => Ok(entry(verify_decomposition(g, &n, &b, options)?)),
        None => Ok(DecompositionEntry {
            status: Status::NotApplicable,
            reason: Some("not given as sdp(...) and the derived subgroup has no complement".into()),
            report: None,
        }),
    }
}

/// Runs the full pipeline for one group spec.
pub fn compute(spec: &str, req: &ComputeRequest) -> Result<Computed> {
    let start = Instant::now();
    let g = make_named_group(spec)?;
    let mut slot = None;
    let (inv, method) = invariants(spec, &g, req, &mut slot)?;

    let catalog = req.check_catalog.then(|| match catalog_lookup(spec) {
        Ok(record) => {
            let mismatches = record.compare(&inv);
            CatalogCheck {
                status: if mismatches.is_empty() { CatalogStatus::Match } else { CatalogStatus::Mismatch },
                record: Some(record),
                mismatches,
            }
        }
        Err(_) => CatalogCheck {
            status: CatalogStatus::NotInCatalog,
            record: None,
            mismatches: vec![],
        },
    });

    let wants = |v: Verify| req.verify.contains(&v) || req.verify.contains(&Verify::All);
    let mut verifications = Verifications::default();
    if wants(Verify::Decomposition) {
        verifications.semidirect_decomposition = Some(decomposition(spec, &g, &req.options)?);
    }
    if wants(Verify::Complement) {
        verifications.complement_case = Some(verify_complement_case_with(&g, slot.as_ref(), &req.options)?);
    }
    if wants(Verify::OddSplitting) {
        verifications.odd_splitting = Some(odd_splitting(square(&mut slot, &g, &req.options)?));
    }
    if wants(Verify::Green) {
        verifications.green_bound = Some(green_bound_check(&g, &inv.pi2s));
    }
    if wants(Verify::Properties) {
        verifications.properties = Some(property_suite(square(&mut slot, &g, &req.options)?));
    }
    if req.keep_square {
        square(&mut slot, &g, &req.options)?;
    }

    let report = ReportJson {
        schema: SCHEMA_VERSION,
        input: spec.to_string(),
        method,
        group_order: g.order(),
        abelianization: abelianization(&g),
        invariants: inv,
        catalog,
        verifications,
        timing: req.timing.then(|| Timing {
            elapsed_us: start.elapsed().as_micros() as u64,
        }),
    };
    Ok(Computed { report, square: slot })
}

pub fn exit_code_for_error(e: &Error) -> i32 {
    if e.is_resource_cap() {
        EXIT_RESOURCE_CAP
    } else {
        EXIT_USAGE
    }
}

/// Catalog mismatches take precedence over verification failures.
pub fn exit_code_for_report(r: &ReportJson) -> i32 {
    if r.catalog_mismatch() {
        EXIT_CATALOG_MISMATCH
    } else if r.verifications.any_failed() {
        EXIT_VERIFICATION_FAILED
    } else {
        EXIT_OK
    }
}

fn summary(r: &ReportJson) -> String {
    let inv = &r.invariants;
    let mut s = format!(
        "{}: |G| = {}, G_ab = {}, method {}\n  pi3  = {}\n  pi2s = {}\n  H2   = {}\n  |G⊗G| = {}, |G∧G| = {}, |G⊗̃G| = {}\n",
        r.input,
        r.group_order,
        r.abelianization,
        r.method,
        inv.pi3,
        inv.pi2s,
        inv.h2,
        inv.tensor_order,
        inv.exterior_order,
        inv.symmetric_order
    );
    if let Some(c) = &r.catalog {
        s += &format!("  catalog: {}\n", serde_json::to_string(&c.status).expect("status serializes").trim_matches('"'));
        for m in &c.mismatches {
            s += &format!("    {}: expected {}, computed {}\n", m.field, m.expected, m.computed);
        }
    }
    let v = &r.verifications;
    let mut line = |name: &str, status: Option<Status>| {
        if let Some(st) = status {
            s += &format!("  {name}: {}\n", serde_json::to_string(&st).expect("status serializes").trim_matches('"'));
        }
    };
    line("semidirect decomposition", v.semidirect_decomposition.as_ref().map(|e| e.status));
    line("complement case", v.complement_case.as_ref().map(|c| c.status));
    line("odd splitting", v.odd_splitting.as_ref().map(|w| w.status));
    line("green bound", v.green_bound.as_ref().map(|b| b.status));
    line("properties", v.properties.as_ref().map(|p| Status::from_bool(p.passed())));
    s
}

fn write_file(path: &PathBuf, text: &str, err: &mut dyn Write) -> bool {
    match std::fs::write(path, text) {
        Ok(()) => true,
        Err(e) => {
            let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
            false
        }
    }
}

fn run_compute(args: ComputeArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if args.groups.len() > 1 && (args.dump_presentation.is_some() || args.emit_table.is_some()) {
        let _ = writeln!(err, "error: --dump-presentation and --emit-table need a single --group");
        return EXIT_USAGE;
    }
    let mut options = TensorOptions::default();
    if let Some(c) = args.max_cells {
        options.max_cells = c;
    }
    if let Some(o) = args.max_order {
        options.order_cap = o;
    }
    let req = ComputeRequest {
        method: args.method,
        options,
        check_catalog: args.check_catalog,
        verify: args.verify.iter().copied().collect(),
        timing: !args.no_timing,
        keep_square: args.dump_presentation.is_some() || args.emit_table.is_some(),
    };
    let results: Vec<Result<Computed>> = if args.parallel {
        args.groups.par_iter().map(|s| compute(s, &req)).collect()
    } else {
        args.groups.iter().map(|s| compute(s, &req)).collect()
    };

    let mut code = EXIT_OK;
    let mut reports = Vec::new();
    for (spec, result) in args.groups.iter().zip(results) {
        match result {
            Ok(c) => {
                if let Some(t) = &c.square {
                    if let Some(p) = &args.dump_presentation {
                        if !write_file(p, &t.presentation().to_text(), err) {
                            code = code.max(EXIT_USAGE);
                        }
                    }
                    if let Some(p) = &args.emit_table {
                        if !write_file(p, &t.t().table().to_csv(), err) {
                            code = code.max(EXIT_USAGE);
                        }
                    }
                }
                code = code.max(exit_code_for_report(&c.report));
                reports.push(c.report);
            }
            Err(e) => {
                let _ = writeln!(err, "error: {spec}: {e}");
                code = code.max(exit_code_for_error(&e));
            }
        }
    }

    match args.json.as_deref() {
        Some(target) => {
            let text = if args.groups.len() == 1 {
                reports.first().map(|r| r.to_json())
            } else {
                Some(serde_json::to_string_pretty(&reports).expect("reports serialize"))
            };
            if let Some(text) = text {
                if target == "-" {
                    let _ = writeln!(out, "{text}");
                } else if !write_file(&PathBuf::from(target), &format!("{text}\n"), err) {
                    code = code.max(EXIT_USAGE);
                }
            }
        }
        None => {
            for r in &reports {
                let _ = write!(out, "{}", summary(r));
            }
        }
    }
    code
}

/// Exit codes: 0 success, 1 usage or parse error, 2 catalog mismatch,
/// 3 resource cap, 4 verification failure. With several groups the largest
/// code wins.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match cli.command {
        Command::Compute(args) => run_compute(args, out, err),
        Command::Catalog { json } => {
            let records = catalog();
            if json {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&records).expect("catalog serializes"));
            } else {
                let show = |x: &Option<crate::abelian::AbelianInvariants>| x.as_ref().map_or("-".to_string(), |a| a.to_string());
                for r in &records {
                    let _ = writeln!(
                        out,
                        "{:<8} pi3 {:<10} pi2s {:<12} H2 {:<8} {}",
                        r.name,
                        show(&r.pi3),
                        show(&r.pi2s),
                        show(&r.h2),
                        if r.computable { "computable" } else { "lookup-only" }
                    );
                }
            }
            EXIT_OK
        }
    }
}
