//! `shpf`: exact expansions of the shifted parking-function symmetric
//! function, verification suites over its defining identities, and the block
//! census of two-colored parking functions.
//!
//! Exit codes: 0 on success (all checks verified), 1 when a verification
//! suite reports a failing identity, 2 on usage errors (unknown tokens,
//! out-of-bounds arguments).

mod output;

use clap::{Parser, Subcommand, ValueEnum};
use output::{
    entry_doc, member_doc, print_json, term_doc, BlockDoc, CheckDoc, ExpandDoc, LabelRowDoc,
    NspfDoc, SchroederDoc, SuiteDoc, TermDoc, VerifyDoc, VERSION,
};
use shifted_parking::nspf::NspfError;
use shifted_parking::verify::{run_all, run_suite, Suite, SuiteReport};
use shifted_parking::{
    partition_into_blocks, schroeder, sh_easy_v, sh_main_v, sh_p_expansion, sh_powersum,
};

#[derive(Parser)]
#[command(
    name = "shpf",
    version,
    about = "Exact arithmetic for the shifted parking-function symmetric function",
    long_about = "Computes the shifted parking-function symmetric function sh_n in several \
                  bases, re-verifies the exact identities relating its different formulas, and \
                  enumerates blocks of two-colored parking functions. All arithmetic is over \
                  arbitrary-precision rationals; every reported equality is exact."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print sh_n in a chosen basis
    Expand {
        /// Degree (n ≥ 1)
        #[arg(long)]
        n: u32,
        /// Output basis
        #[arg(long, default_value = "p")]
        basis: Basis,
        /// Output format
        #[arg(long, default_value = "text")]
        format: Format,
        /// Raise the documented degree cap (exact arithmetic slows down quickly)
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Run a verification suite (or all of them)
    Verify {
        /// Suite: routes|dim|schroeder|lemma31|catalan|lemma34|pexp|cauchy|nspf|fixpoints|all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Bound to run up to (at most the suite's documented bound)
        #[arg(long)]
        max_n: Option<u32>,
        /// Output format
        #[arg(long, default_value = "text")]
        format: Format,
        /// Raise the documented suite bound (exact arithmetic slows down quickly)
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Census of two-colored parking functions grouped into blocks
    Nspf {
        /// Length (n ≥ 1)
        #[arg(long)]
        n: u32,
        /// List every member of every block
        #[arg(long)]
        list_blocks: bool,
        /// Output format
        #[arg(long, default_value = "text")]
        format: Format,
    },
    /// Print the large Schröder number r_n
    Schroeder {
        /// Index (n ≥ 0)
        #[arg(long)]
        n: u32,
        /// Output format
        #[arg(long, default_value = "text")]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    /// Power sums p_λ
    #[value(name = "p")]
    PowerSum,
    /// Schur P-functions P_λ (distinct-part shapes)
    #[value(name = "P")]
    SchurP,
    /// Products of one-row P-functions, odd shapes only (unique)
    #[value(name = "vodd")]
    VOdd,
    /// Products of one-row P-functions over all shapes (redundant)
    #[value(name = "vany")]
    VAny,
}

impl Basis {
    fn token(self) -> &'static str {
        match self {
            Basis::PowerSum => "p",
            Basis::SchurP => "P",
            Basis::VOdd => "vodd",
            Basis::VAny => "vany",
        }
    }

    fn degree_cap(self) -> u32 {
        match self {
            Basis::SchurP => 10,
            _ => 16,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    #[value(name = "text")]
    Text,
    #[value(name = "json")]
    Json,
    #[value(name = "latex")]
    Latex,
}

fn main() {
    // Rust ignores SIGPIPE, which turns `shpf … | head` into a panic when
    // stdout closes; restore the conventional quiet death instead.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = Cli::parse();
    let code = match cli.command {
        Command::Expand {
            n,
            basis,
            format,
            max_degree,
        } => cmd_expand(n, basis, format, max_degree),
        Command::Verify {
            suite,
            max_n,
            format,
            max_degree,
        } => cmd_verify(&suite, max_n, format, max_degree),
        Command::Nspf {
            n,
            list_blocks,
            format,
        } => cmd_nspf(n, list_blocks, format),
        Command::Schroeder { n, format } => cmd_schroeder(n, format),
    };
    std::process::exit(code);
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

/// The cap after an optional `--max-degree` raise, warning when raised.
fn effective_cap(default_cap: u32, max_degree: Option<u32>, what: &str) -> u32 {
    match max_degree {
        Some(m) if m > default_cap => {
            eprintln!(
                "warning: raising the {what} cap from {default_cap} to {m}; \
                 exact arithmetic beyond the default can take a long time"
            );
            m
        }
        _ => default_cap,
    }
}

fn cmd_expand(n: u32, basis: Basis, format: Format, max_degree: Option<u32>) -> i32 {
    let cap = effective_cap(basis.degree_cap(), max_degree, "degree");
    if n < 1 || n > cap {
        return usage_error(&format!(
            "n must be between 1 and {cap} for basis {}",
            basis.token()
        ));
    }

    let (terms, text, latex): (Vec<TermDoc>, String, String) = match basis {
        Basis::PowerSum => {
            let f = sh_powersum(n);
            (
                f.terms().map(|(l, c)| term_doc(l, c)).collect(),
                f.to_string(),
                f.latex(),
            )
        }
        Basis::SchurP => {
            let e = sh_p_expansion(n);
            (
                e.terms().map(|(l, c)| term_doc(l, c)).collect(),
                e.to_string(),
                e.latex(),
            )
        }
        Basis::VOdd => {
            let v = sh_main_v(n);
            (
                v.terms().map(|(l, c)| term_doc(l, c)).collect(),
                v.to_string(),
                v.latex(),
            )
        }
        Basis::VAny => {
            let v = sh_easy_v(n);
            (
                v.terms().map(|(l, c)| term_doc(l, c)).collect(),
                v.to_string(),
                v.latex(),
            )
        }
    };

    match format {
        Format::Text => println!("{text}"),
        Format::Latex => println!("{latex}"),
        Format::Json => print_json(&ExpandDoc {
            command: "expand".to_string(),
            version: VERSION.to_string(),
            n,
            basis: basis.token().to_string(),
            terms,
        }),
    }
    0
}

fn cmd_verify(suite: &str, max_n: Option<u32>, format: Format, max_degree: Option<u32>) -> i32 {
    let reports: Vec<SuiteReport> = if suite == "all" {
        run_all(max_n)
    } else {
        let Some(s) = Suite::parse(suite) else {
            return usage_error(&format!(
                "unknown suite '{suite}' (expected one of: {}, all)",
                Suite::ALL
                    .iter()
                    .map(|s| s.token())
                    .collect::<Vec<_>>()
                    .join(", ")
            ));
        };
        let cap = effective_cap(s.default_bound(), max_degree, "suite bound");
        let bound = max_n.unwrap_or_else(|| s.default_bound().min(cap));
        if bound > cap {
            return usage_error(&format!(
                "--max-n {bound} exceeds the documented bound {cap} for suite {suite}"
            ));
        }
        vec![run_suite(s, bound)]
    };

    let passed = reports.iter().all(|r| r.passed());
    match format {
        Format::Text => print_reports_text(&reports, passed),
        Format::Latex => print_reports_latex(&reports),
        Format::Json => print_json(&VerifyDoc {
            command: "verify".to_string(),
            version: VERSION.to_string(),
            passed,
            suites: reports.iter().map(suite_doc).collect(),
        }),
    }
    if passed {
        0
    } else {
        1
    }
}

fn suite_doc(r: &SuiteReport) -> SuiteDoc {
    SuiteDoc {
        suite: r.suite.clone(),
        bound: r.bound,
        passed: r.passed(),
        checks: r
            .checks
            .iter()
            .map(|c| CheckDoc {
                name: c.name.clone(),
                passed: c.passed,
                detail: c.detail.clone(),
            })
            .collect(),
    }
}

fn print_reports_text(reports: &[SuiteReport], passed: bool) {
    for r in reports {
        println!("suite {} (bound {})", r.suite, r.bound);
        for c in &r.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            println!("  {status} {}: {}", c.name, c.detail);
        }
    }
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    if passed {
        println!("verified: {} suite(s), {total} checks, all pass", reports.len());
    } else {
        let failing: Vec<&str> = reports
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.suite.as_str())
            .collect();
        println!("FAILED: {}", failing.join(", "));
    }
}

fn latex_escape(s: &str) -> String {
    s.replace('_', "\\_")
}

fn print_reports_latex(reports: &[SuiteReport]) {
    println!("\\begin{{tabular}}{{lll}}");
    println!("suite & check & status \\\\");
    for r in reports {
        for c in &r.checks {
            println!(
                "{} & {} & {} \\\\",
                latex_escape(&r.suite),
                latex_escape(&c.name),
                if c.passed { "pass" } else { "fail" }
            );
        }
    }
    println!("\\end{{tabular}}");
}

fn cmd_nspf(n: u32, list_blocks: bool, format: Format) -> i32 {
    let census = match partition_into_blocks(n, list_blocks) {
        Ok(c) => c,
        Err(NspfError::Enum(e)) => return usage_error(&e.to_string()),
        Err(NspfError::Census(e)) => {
            eprintln!("verification failure: {e}");
            return 1;
        }
    };

    match format {
        Format::Text => {
            println!(
                "length {n}: {} colored parking functions in {} blocks",
                census.total,
                census.blocks.len()
            );
            for (label, blocks, size) in &census.per_label {
                println!("  shape {label}: {blocks} blocks of size {size}");
            }
            if list_blocks {
                println!("blocks:");
                for b in &census.blocks {
                    let members = b
                        .members
                        .as_ref()
                        .expect("members are present when listing was requested")
                        .iter()
                        .map(|m| m.to_string())
                        .collect::<Vec<_>>()
                        .join(", ");
                    println!("  {} shape {}: {{{members}}}", b.key_text(), b.label);
                }
            }
        }
        Format::Latex => {
            println!("\\begin{{tabular}}{{lll}}");
            println!("$\\lambda$ & blocks & size \\\\");
            for (label, blocks, size) in &census.per_label {
                println!("${label}$ & {blocks} & {size} \\\\");
            }
            println!("\\end{{tabular}}");
            if list_blocks {
                for b in &census.blocks {
                    let members = b
                        .members
                        .as_ref()
                        .expect("members are present when listing was requested")
                        .iter()
                        .map(|m| m.latex())
                        .collect::<Vec<_>>()
                        .join(", ");
                    println!("$\\{{{members}\\}}$");
                }
            }
        }
        Format::Json => {
            let blocks = list_blocks.then(|| {
                census
                    .blocks
                    .iter()
                    .map(|b| BlockDoc {
                        multiplicities: b.multiplicities.clone(),
                        first_colors: b
                            .first_colors
                            .iter()
                            .map(|&(v, c)| entry_doc(v, c))
                            .collect(),
                        label: b.label.parts().to_vec(),
                        size: b.size.to_string(),
                        members: b
                            .members
                            .as_ref()
                            .map(|ms| ms.iter().map(member_doc).collect()),
                    })
                    .collect()
            });
            print_json(&NspfDoc {
                command: "nspf".to_string(),
                version: VERSION.to_string(),
                n,
                total: census.total.to_string(),
                per_label: census
                    .per_label
                    .iter()
                    .map(|(label, blocks, size)| LabelRowDoc {
                        label: label.parts().to_vec(),
                        blocks: *blocks,
                        block_size: size.to_string(),
                    })
                    .collect(),
                blocks,
            });
        }
    }
    0
}

fn cmd_schroeder(n: u32, format: Format) -> i32 {
    let value = schroeder(n);
    match format {
        Format::Text => println!("r_{n} = {value}"),
        Format::Latex => println!("$r_{{{n}}} = {value}$"),
        Format::Json => print_json(&SchroederDoc {
            command: "schroeder".to_string(),
            version: VERSION.to_string(),
            n,
            value: value.to_string(),
        }),
    }
    0
}
