//! Command-line front end: every subcommand reads ring/subset text forms,
//! runs one library operation, and prints a stable line-oriented
//! `key: value` report. Reports are byte-identical across runs on the same
//! inputs, so they can be diffed in scripts.
//!
//! Exit codes: 0 for `OK`/`EVIDENCE`, 1 for `FAIL` (validation or
//! precondition problems), 2 for `FATAL` (an outcome the verified
//! statements forbid, i.e. an implementation bug), 3 for usage errors.

use clap::{Args, Parser, Subcommand};
use ringlab::catalog;
use ringlab::extension::{dorroh_extension, multiplier_ring_bounded};
use ringlab::morita::{
    is_enlargement, search_joint_enlargement_bounded, verify_theorem_instance_bounded,
    SearchReport, TheoremVerdict,
};
use ringlab::ring::FiniteRing;
use ringlab::subset::{Subset, MAX_SUBSET_ORDER};
use ringlab::textio;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ringlab",
    about = "Finite rings from tables: validation, ideals, unitizations, enlargement search",
    disable_help_subcommand = true
)]
struct Cli {
    /// Print only the status line.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the ring axioms of a table file.
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Validate and report derived properties.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        /// Bound for ideal enumeration.
        #[arg(long, default_value_t = 16)]
        max_order: usize,
    },
    /// List all two-sided ideals.
    Ideals {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 16)]
        max_order: usize,
    },
    /// Build the Dorroh extension R × Z_m and emit it as a ring file.
    Dorroh {
        #[arg(long = "in")]
        input: PathBuf,
        /// Positive multiple of the additive exponent; defaults to the exponent.
        #[arg(long)]
        modulus: Option<usize>,
        /// Output ring file; defaults to `<input stem>.dorroh.ring`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the multiplier ring of a non-degenerate ring.
    Multiplier {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Bound on the base-ring order.
        #[arg(long, default_value_t = 16)]
        max_order: usize,
    },
    /// Evaluate the enlargement equations T = TST and S = STS.
    Enlargement {
        #[arg(long)]
        ambient: PathBuf,
        /// Subset in text form, e.g. "subset 2: 0 1".
        #[arg(long)]
        subset: String,
    },
    /// Search a catalog for a joint enlargement of two rings.
    Search {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        catalog: PathBuf,
        /// Bound on candidate ambient orders.
        #[arg(long, default_value_t = 16)]
        max_order: usize,
    },
    /// Probe one instance of the no-proper-ideal-equivalence statement.
    TheoremCheck {
        #[arg(long)]
        ring: PathBuf,
        /// Ideal in subset text form.
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long, default_value_t = 16)]
        max_order: usize,
    },
    /// Generate or extend a catalog directory.
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct CatalogArgs {
    #[command(subcommand)]
    action: CatalogAction,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Enumerate all rings up to the bound (≤ 8) and inject the named
    /// order-16 constructions when the bound allows them.
    Generate {
        #[arg(long, default_value_t = 8)]
        max_order: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Canonicalize one ring file into a catalog directory.
    Add {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Bound for canonicalization; larger rings are stored as given.
        #[arg(long, default_value_t = 8)]
        canon_bound: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Ok,
    Evidence,
    Fail,
    Fatal,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Ok => "OK",
            Status::Evidence => "EVIDENCE",
            Status::Fail => "FAIL",
            Status::Fatal => "FATAL",
        }
    }

    fn exit_code(self) -> u8 {
        match self {
            Status::Ok | Status::Evidence => 0,
            Status::Fail => 1,
            Status::Fatal => 2,
        }
    }
}

struct Report {
    status: Status,
    lines: Vec<(String, String)>,
}

impl Report {
    fn new(status: Status) -> Report {
        Report {
            status,
            lines: Vec::new(),
        }
    }

    fn line(mut self, key: &str, value: impl std::fmt::Display) -> Report {
        self.lines.push((key.to_string(), value.to_string()));
        self
    }

    fn fail(message: impl std::fmt::Display) -> Report {
        Report::new(Status::Fail).line("error", message)
    }

    fn print(&self, quiet: bool) {
        println!("status: {}", self.status.label());
        if !quiet {
            for (key, value) in &self.lines {
                println!("{key}: {value}");
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // 2 is reserved for FATAL, so usage problems exit with 3.
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(3),
            };
        }
    };
    let report = run(&cli.command);
    report.print(cli.quiet);
    ExitCode::from(report.status.exit_code())
}

fn load_ring(path: &Path) -> Result<FiniteRing, Report> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Report::fail(format!("{}: {e}", path.display())))?;
    match textio::parse_ring(&text) {
        Ok(ring) => Ok(ring),
        Err(textio::TextError::Invalid(ringlab::ValidateError::Invalid(axioms))) => {
            let mut report = Report::fail("ring axioms violated");
            for v in &axioms.violations {
                let (x, y, z) = v.witness;
                report = report.line("violation", format!("{} ({x}, {y}, {z})", v.code));
            }
            Err(report)
        }
        Err(e) => Err(Report::fail(e)),
    }
}

fn load_subset(text: &str, ring: &FiniteRing) -> Result<Subset, Report> {
    if ring.order() > MAX_SUBSET_ORDER {
        return Err(Report::fail(format!(
            "subset operations support orders up to {MAX_SUBSET_ORDER}, ring has order {}",
            ring.order()
        )));
    }
    textio::parse_subset(text, ring.order()).map_err(Report::fail)
}

fn unit_line(ring: &FiniteRing) -> String {
    match ring.unit() {
        Some(u) => u.to_string(),
        None => "none".to_string(),
    }
}

fn derived_out(input: &Path, suffix: &str) -> PathBuf {
    let stem = input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "out".to_string());
    input.with_file_name(format!("{stem}.{suffix}.ring"))
}

fn run(command: &Command) -> Report {
    match command {
        Command::Validate { input } => match load_ring(input) {
            Ok(ring) => Report::new(Status::Ok)
                .line("order", ring.order())
                .line("unit", unit_line(&ring))
                .line("additive_exponent", ring.additive_exponent()),
            Err(report) => report,
        },
        Command::Analyze { input, max_order } => match load_ring(input) {
            Ok(ring) => {
                let mut report = Report::new(Status::Ok)
                    .line("order", ring.order())
                    .line("unit", unit_line(&ring))
                    .line("additive_exponent", ring.additive_exponent());
                if ring.order() <= MAX_SUBSET_ORDER {
                    report = report.line("idempotent", ring.is_idempotent_ring());
                }
                match ring.degeneracy_witness() {
                    None => report = report.line("non_degenerate", "true"),
                    Some(w) => {
                        report = report
                            .line("non_degenerate", "false")
                            .line("degeneracy_witness", w);
                    }
                }
                if ring.order() > MAX_SUBSET_ORDER {
                    return report;
                }
                match ring.enumerate_ideals_bounded(*max_order) {
                    Ok(ideals) => report.line("ideals", ideals.len()),
                    Err(e) => report.line("ideals", format!("skipped ({e})")),
                }
            }
            Err(report) => report,
        },
        Command::Ideals { input, max_order } => match load_ring(input) {
            Ok(ring) => {
                if ring.order() > MAX_SUBSET_ORDER {
                    return Report::fail(format!(
                        "subset operations support orders up to {MAX_SUBSET_ORDER}"
                    ));
                }
                match ring.enumerate_ideals_bounded(*max_order) {
                    Ok(ideals) => {
                        let mut report = Report::new(Status::Ok)
                            .line("order", ring.order())
                            .line("ideal_count", ideals.len());
                        for ideal in ideals {
                            report = report.line("ideal", textio::write_subset(ideal));
                        }
                        report
                    }
                    Err(e) => Report::fail(e),
                }
            }
            Err(report) => report,
        },
        Command::Dorroh {
            input,
            modulus,
            out,
        } => match load_ring(input) {
            Ok(ring) => match dorroh_extension(&ring, *modulus) {
                Ok(dorroh) => {
                    let out = out.clone().unwrap_or_else(|| derived_out(input, "dorroh"));
                    if let Err(e) = std::fs::write(&out, textio::write_ring(dorroh.ring())) {
                        return Report::fail(format!("{}: {e}", out.display()));
                    }
                    Report::new(Status::Ok)
                        .line("base_order", ring.order())
                        .line("modulus", dorroh.modulus())
                        .line("order", dorroh.ring().order())
                        .line("unit", unit_line(dorroh.ring()))
                        .line("out", out.display())
                        .line("iota", textio::write_hom(dorroh.iota()))
                }
                Err(e) => Report::fail(e),
            },
            Err(report) => report,
        },
        Command::Multiplier {
            input,
            out,
            max_order,
        } => match load_ring(input) {
            Ok(ring) => match multiplier_ring_bounded(&ring, *max_order) {
                Ok(mring) => {
                    let out = out
                        .clone()
                        .unwrap_or_else(|| derived_out(input, "multiplier"));
                    if let Err(e) = std::fs::write(&out, textio::write_ring(mring.ring())) {
                        return Report::fail(format!("{}: {e}", out.display()));
                    }
                    Report::new(Status::Ok)
                        .line("base_order", ring.order())
                        .line("order", mring.ring().order())
                        .line("unit", unit_line(mring.ring()))
                        .line("out", out.display())
                        .line("iota", textio::write_hom(mring.iota()))
                }
                Err(e) => Report::fail(e),
            },
            Err(report) => report,
        },
        Command::Enlargement { ambient, subset } => match load_ring(ambient) {
            Ok(ring) => {
                let inner = match load_subset(subset, &ring) {
                    Ok(s) => s,
                    Err(report) => return report,
                };
                let witness = is_enlargement(&ring, inner);
                Report::new(Status::Ok)
                    .line("ambient_order", ring.order())
                    .line("subset", textio::write_subset(inner))
                    .line("subring", witness.inner_is_subring)
                    .line("tst_equals_t", witness.tst_equals_t)
                    .line("sts_equals_s", witness.sts_equals_s)
                    .line("valid", witness.is_valid())
            }
            Err(report) => report,
        },
        Command::Search {
            a,
            b,
            catalog: dir,
            max_order,
        } => {
            let ring_a = match load_ring(a) {
                Ok(r) => r,
                Err(report) => return report,
            };
            let ring_b = match load_ring(b) {
                Ok(r) => r,
                Err(report) => return report,
            };
            let entries = match catalog::read_catalog(dir) {
                Ok(entries) => entries,
                Err(e) => return Report::fail(e),
            };
            let candidates: Vec<FiniteRing> = entries.iter().map(|e| e.ring.clone()).collect();
            let outcome =
                search_joint_enlargement_bounded(&ring_a, &ring_b, &candidates, *max_order);
            search_lines(
                Report::new(if outcome.found() {
                    Status::Ok
                } else {
                    Status::Evidence
                })
                .line("a_order", ring_a.order())
                .line("b_order", ring_b.order()),
                &outcome,
                &entries,
            )
        }
        Command::TheoremCheck {
            ring,
            ideal,
            catalog: dir,
            max_order,
        } => {
            let r = match load_ring(ring) {
                Ok(r) => r,
                Err(report) => return report,
            };
            let s = match load_subset(ideal, &r) {
                Ok(s) => s,
                Err(report) => return report,
            };
            let entries = match catalog::read_catalog(dir) {
                Ok(entries) => entries,
                Err(e) => return Report::fail(e),
            };
            let candidates: Vec<FiniteRing> = entries.iter().map(|e| e.ring.clone()).collect();
            let outcome = verify_theorem_instance_bounded(&r, s, &candidates, *max_order);
            let status = match outcome.verdict {
                TheoremVerdict::Fatal => Status::Fatal,
                TheoremVerdict::PreconditionsNotMet => Status::Fail,
                TheoremVerdict::ConsistentSelf => Status::Ok,
                TheoremVerdict::Evidence => Status::Evidence,
            };
            let verdict = match outcome.verdict {
                TheoremVerdict::Fatal => "FATAL: witness found for a proper idempotent ideal",
                TheoremVerdict::PreconditionsNotMet => "preconditions not met",
                TheoremVerdict::ConsistentSelf => "consistent (S = R)",
                TheoremVerdict::Evidence => "evidence: no witness within bound",
            };
            let report = Report::new(status)
                .line("r_idempotent", outcome.r_idempotent)
                .line("s_is_ideal", outcome.s_is_ideal)
                .line("s_idempotent", outcome.s_idempotent)
                .line("s_proper", outcome.s_proper)
                .line("s_is_zero", outcome.s_is_zero);
            search_lines(report, &outcome.search, &entries).line("verdict", verdict)
        }
        Command::Catalog(args) => match &args.action {
            CatalogAction::Generate { max_order, out } => {
                match catalog::build_catalog(*max_order) {
                    Ok(entries) => match catalog::write_catalog(out, &entries) {
                        Ok(()) => Report::new(Status::Ok)
                            .line("max_order", max_order)
                            .line("entries", entries.len())
                            .line("out", out.display()),
                        Err(e) => Report::fail(format!("{}: {e}", out.display())),
                    },
                    Err(e) => Report::fail(e),
                }
            }
            CatalogAction::Add {
                input,
                out,
                canon_bound,
            } => match load_ring(input) {
                Ok(ring) => {
                    let normalized = if ring.order() <= *canon_bound {
                        match ring.canonical_form_bounded(*canon_bound) {
                            Ok(c) => c.ring,
                            Err(e) => return Report::fail(e),
                        }
                    } else {
                        ring.clone()
                    };
                    match catalog::add_to_catalog(out, &normalized) {
                        Ok((entry, added)) => Report::new(Status::Ok)
                            .line("id", &entry.id)
                            .line("order", entry.ring.order())
                            .line("added", added)
                            .line("out", out.display()),
                        Err(e) => Report::fail(e),
                    }
                }
                Err(report) => report,
            },
        },
    }
}

fn search_lines(
    mut report: Report,
    outcome: &SearchReport,
    entries: &[catalog::CatalogEntry],
) -> Report {
    report = report
        .line("candidates", outcome.candidates_total)
        .line("candidates_searched", outcome.candidates_searched)
        .line("candidates_skipped", outcome.skipped.len());
    match &outcome.result {
        Some(je) => {
            let ambient_id = entries
                .iter()
                .find(|e| e.ring == je.ambient)
                .map(|e| e.id.clone())
                .unwrap_or_else(|| catalog::ring_id(&je.ambient));
            report
                .line("joint_enlargement", "found")
                .line("ambient_id", ambient_id)
                .line("ambient_order", je.ambient.order())
                .line("copy_a", textio::write_subset(je.copy_a))
                .line("copy_b", textio::write_subset(je.copy_b))
                .line("iso_a", textio::write_hom(&je.iso_a))
                .line("iso_b", textio::write_hom(&je.iso_b))
        }
        None => report.line(
            "joint_enlargement",
            format!("none (bound {})", outcome.max_order),
        ),
    }
}
