//! Command-line front end: identity verification, enumeration of partition
//! and overpartition families, basis extraction, and count tables, with
//! stable machine-readable output.
//!
//! Exit codes: 0 success, 1 verification mismatch / separability violation /
//! basis diff, 2 usage error.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sepclass::identities::{self, IdentityId, IdentityReport, DEFAULT_ORDER};
use sepclass::overpartitions::{enumerate_g1, enumerate_g2, enumerate_o, in_c, OverpartitionIter};
use sepclass::partitions::{
    distinct_parity_table, family_count_table, parity_family_contains, FamilyId, Parity,
    PartitionIter,
};
use sepclass::sip::{extract_basis, paper_basis, verify_separability, AllPartitions};

/// Writes to stdout, treating a broken pipe (e.g. `sepclass enumerate ... |
/// head`) as a normal early stop.
fn emit(args: std::fmt::Arguments) {
    let mut out = io::stdout().lock();
    if let Err(e) = out.write_fmt(args) {
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("write to stdout failed: {e}");
        std::process::exit(1);
    }
}

macro_rules! outln {
    ($($arg:tt)*) => {
        emit(format_args!("{}\n", format_args!($($arg)*)))
    };
}

#[derive(Parser)]
#[command(
    name = "sepclass",
    about = "Exact verification of partition and overpartition identities",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one identity; exit 0 on equality, 1 on mismatch.
    Verify {
        /// Identity name, e.g. main-1, euler-2, rr1-main, thm-od-ed
        id: String,
        /// Truncation order N (series compared modulo q^{N+1}); count
        /// relations are clamped to n <= 60
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Marker truncation (defaults to the order)
        #[arg(long)]
        marker_bound: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Omit wall-clock timing from the output (for golden files)
        #[arg(long)]
        no_timing: bool,
    },
    /// Verify every registered identity; exit 0 only if all are equal.
    VerifyAll {
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long)]
        marker_bound: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        no_timing: bool,
    },
    /// Stream the members of a family, one per line.
    Enumerate {
        /// partitions | overpartitions | od_ed .. ou_ed | C1 | C2 (by
        /// --weight), or O | G1 | G2 (by --parts)
        family: String,
        /// Enumerate members of this weight
        #[arg(long)]
        weight: Option<usize>,
        /// Enumerate basis members with this many parts
        #[arg(long)]
        parts: Option<usize>,
        /// json prints a {family, m|weight, count} summary instead
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Extract the minimal basis of a separable family and print it.
    Basis {
        /// od_ed .. ou_ed, or `all` for the class of all partitions
        family: String,
        /// Residual divisibility modulus (default: 2, or 1 for `all`)
        #[arg(long)]
        modulus: Option<u32>,
        #[arg(long, default_value_t = 6)]
        max_parts: usize,
        /// Scan bound for candidates (default: 2*max_parts^2 + 4*max_parts)
        #[arg(long)]
        max_weight: Option<usize>,
        /// Diff the extracted basis against the closed-form basis; exit 1
        /// on any difference
        #[arg(long)]
        check_against_paper: bool,
        /// json prints the separability verification report instead
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit a count table as CSV (`m,n,count`).
    Table {
        /// p_od_ed .. p_ou_ed | D_o | D_e
        stat: String,
        #[arg(long, default_value_t = 40)]
        max_n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            id,
            order,
            marker_bound,
            format,
            no_timing,
        } => {
            let Some(id) = IdentityId::parse(&id) else {
                eprintln!("unknown identity `{id}`; known ids:");
                for known in IdentityId::ALL {
                    eprintln!("  {known}");
                }
                return ExitCode::from(2);
            };
            let mut report = identities::verify(id, order, marker_bound.unwrap_or(order));
            if no_timing {
                report.millis = None;
            }
            print_report(&report, format);
            exit_for(report.is_equal())
        }
        Command::VerifyAll {
            order,
            marker_bound,
            format,
            no_timing,
        } => {
            let mut reports = identities::verify_all(order, marker_bound.unwrap_or(order));
            if no_timing {
                for report in &mut reports {
                    report.millis = None;
                }
            }
            let all_equal = reports.iter().all(IdentityReport::is_equal);
            match format {
                Format::Json => {
                    outln!("{}", serde_json::to_string_pretty(&reports).unwrap())
                }
                _ => {
                    for report in &reports {
                        print_report_text(report);
                    }
                    let total = reports.len();
                    let failed = reports.iter().filter(|r| !r.is_equal()).count();
                    if failed == 0 {
                        outln!("all {total} identities equal");
                    } else {
                        outln!("{failed} of {total} identities mismatched");
                    }
                }
            }
            exit_for(all_equal)
        }
        Command::Enumerate {
            family,
            weight,
            parts,
            format,
        } => run_enumerate(&family, weight, parts, format),
        Command::Basis {
            family,
            modulus,
            max_parts,
            max_weight,
            check_against_paper,
            format,
        } => run_basis(
            &family,
            modulus,
            max_parts,
            max_weight,
            check_against_paper,
            format,
        ),
        Command::Table { stat, max_n } => run_table(&stat, max_n),
    }
}

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_report(report: &IdentityReport, format: Format) {
    match format {
        Format::Json => outln!("{}", serde_json::to_string_pretty(report).unwrap()),
        _ => print_report_text(report),
    }
}

// text output carries no timing, so identical invocations stay bit-identical;
// timing lives in the JSON reports (dropped there by --no-timing)
fn print_report_text(report: &IdentityReport) {
    match &report.first_mismatch {
        None => outln!(
            "{}: equal (order={}, marker_bound={})",
            report.identity, report.order, report.marker_bound
        ),
        Some(mm) => outln!(
            "{}: MISMATCH at marker_deg={} q_exp={} (lhs={}, rhs={}) (order={}, marker_bound={})",
            report.identity,
            mm.marker_deg,
            mm.q_exp,
            mm.lhs,
            mm.rhs,
            report.order,
            report.marker_bound,
        ),
    }
}

fn run_enumerate(family: &str, weight: Option<usize>, parts: Option<usize>, format: Format) -> ExitCode {
    let by_weight = |name: &str| -> Option<usize> {
        if parts.is_some() {
            eprintln!("family `{name}` is enumerated by --weight, not --parts");
            return None;
        }
        match weight {
            Some(w) => Some(w),
            None => {
                eprintln!("family `{name}` requires --weight");
                None
            }
        }
    };
    let by_parts = |name: &str| -> Option<usize> {
        if weight.is_some() {
            eprintln!("family `{name}` is enumerated by --parts, not --weight");
            return None;
        }
        match parts {
            Some(m) if m >= 1 => Some(m),
            _ => {
                eprintln!("family `{name}` requires --parts >= 1");
                None
            }
        }
    };

    // weight-indexed families stream; parts-indexed basis families are
    // bounded by 2^m members
    let mut count: u64 = 0;
    let mut emit = |line: String| {
        if format == Format::Text {
            outln!("{line}");
        }
        count += 1;
    };

    let key: Option<(&str, u64)> = match family {
        "partitions" => by_weight(family).map(|w| {
            for p in PartitionIter::new(w) {
                emit(p.to_string());
            }
            ("weight", w as u64)
        }),
        "overpartitions" => by_weight(family).map(|w| {
            for op in OverpartitionIter::new(w) {
                emit(op.to_string());
            }
            ("weight", w as u64)
        }),
        "C1" | "C2" => by_weight(family).map(|w| {
            let r = if family == "C1" { 1 } else { 2 };
            for op in OverpartitionIter::new(w).filter(|op| in_c(op, r)) {
                emit(op.to_string());
            }
            ("weight", w as u64)
        }),
        "O" => by_parts(family).map(|m| {
            for op in enumerate_o(m) {
                emit(op.to_string());
            }
            ("m", m as u64)
        }),
        "G1" => by_parts(family).map(|m| {
            for op in enumerate_g1(m) {
                emit(op.to_string());
            }
            ("m", m as u64)
        }),
        "G2" => by_parts(family).map(|m| {
            for op in enumerate_g2(m) {
                emit(op.to_string());
            }
            ("m", m as u64)
        }),
        name => match FamilyId::parse(name) {
            Some(id) => by_weight(name).map(|w| {
                let spec = id.spec();
                for p in PartitionIter::new(w).filter(|p| parity_family_contains(p, &spec)) {
                    emit(p.to_string());
                }
                ("weight", w as u64)
            }),
            None => {
                eprintln!(
                    "unknown family `{name}`; expected partitions, overpartitions, \
                     od_ed, ed_od, ed_ou, eu_od, od_eu, ou_ed, O, G1, G2, C1, or C2"
                );
                None
            }
        },
    };

    match key {
        None => ExitCode::from(2),
        Some((key_name, key_value)) => {
            if format == Format::Json {
                outln!(
                    "{}",
                    serde_json::json!({ "family": family, key_name: key_value, "count": count })
                );
            }
            ExitCode::SUCCESS
        }
    }
}

fn run_basis(
    family: &str,
    modulus: Option<u32>,
    max_parts: usize,
    max_weight: Option<usize>,
    check_against_paper: bool,
    format: Format,
) -> ExitCode {
    let max_weight = max_weight.unwrap_or(2 * max_parts * max_parts + 4 * max_parts);
    let family_id = FamilyId::parse(family);
    if family_id.is_none() && family != "all" {
        eprintln!("unknown family `{family}`; expected od_ed .. ou_ed or all");
        return ExitCode::from(2);
    }
    if check_against_paper && family_id.is_none() {
        eprintln!("--check-against-paper requires one of the six od_ed .. ou_ed families");
        return ExitCode::from(2);
    }

    let (extracted, spec): (_, Box<dyn sepclass::sip::PartitionClass>) = match family_id {
        Some(id) => {
            let k = modulus.unwrap_or(2);
            (
                extract_basis(&id.spec(), k, max_parts, max_weight),
                Box::new(id.spec()),
            )
        }
        None => {
            let k = modulus.unwrap_or(1);
            (
                extract_basis(&AllPartitions, k, max_parts, max_weight),
                Box::new(AllPartitions),
            )
        }
    };

    if format == Format::Json {
        let report = verify_separability(family, spec.as_ref(), &extracted, max_parts, max_weight);
        outln!("{}", serde_json::to_string_pretty(&report).unwrap());
        return exit_for(report.is_clean());
    }

    for m in 1..=max_parts {
        for b in extracted.basis(m) {
            outln!("m={m} w={} {b}", b.weight());
        }
    }

    if check_against_paper {
        let id = family_id.expect("checked above");
        let mut differences = 0;
        for m in 1..=max_parts {
            let expected = paper_basis(id, m);
            if extracted.basis(m) != expected.as_slice() {
                differences += 1;
                let render = |bases: &[sepclass::Partition]| {
                    bases
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                outln!("DIFF at m={m}:");
                outln!("  extracted: {}", render(extracted.basis(m)));
                outln!("  paper:     {}", render(&expected));
            }
        }
        if differences == 0 {
            outln!("OK: extracted basis matches paper");
        } else {
            outln!("FAIL: {differences} part-count levels differ from the closed-form basis");
            return ExitCode::from(1);
        }
    }
    ExitCode::SUCCESS
}

fn run_table(stat: &str, max_n: usize) -> ExitCode {
    let table = match stat {
        "D_o" => distinct_parity_table(Parity::Odd, max_n),
        "D_e" => distinct_parity_table(Parity::Even, max_n),
        _ => match stat.strip_prefix("p_").and_then(FamilyId::parse) {
            Some(id) => family_count_table(&id.spec(), max_n),
            None => {
                eprintln!(
                    "unknown stat `{stat}`; expected p_od_ed .. p_ou_ed, D_o, or D_e"
                );
                return ExitCode::from(2);
            }
        },
    };
    emit(format_args!("{}", table.to_csv()));
    ExitCode::SUCCESS
}
