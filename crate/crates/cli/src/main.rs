use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hatpath::bijections::{
    phi, phi_inverse, psi, psi_inverse, simion_schmidt, simion_schmidt_inverse, theta,
    theta_inverse,
};
use hatpath::eco::export_tree;
use hatpath::oracle::{class_counts, AvoidanceClassSpec};
use hatpath::paths::{parse_path, Alphabet, PathWord};
use hatpath::pattern::parse_pattern_list;
use hatpath::verify::{self, Theorem};
use hatpath::{DyckWord, MotzkinWord, Permutation};

/// Exhaustive enumeration walks all of S_n; beyond this it does not finish.
const ENUMERATION_LIMIT: usize = 12;

#[derive(Parser)]
#[command(
    name = "hatpath",
    version,
    about = "Hatted pattern classes and their lattice-path bijections"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List S_n(T) for a comma-separated pattern list, e.g. "132,2^13".
    Enumerate {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
    },
    /// Apply a forward map.
    Map {
        #[arg(long, value_enum)]
        bijection: Bijection,
        input: String,
    },
    /// Apply an inverse map.
    Invert {
        #[arg(long, value_enum)]
        bijection: Bijection,
        input: String,
    },
    /// Run an exhaustive check suite up to size n.
    Verify {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long, env = "HATPATH_MAX_N", default_value_t = 7)]
        n: usize,
    },
    /// Print the Motzkin generating tree down to the given level.
    Tree {
        #[arg(long)]
        depth: usize,
    },
    /// Class sizes |S_k(T)| for k = 1..=n.
    Sequence {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        /// One "n,count" row per size.
        #[arg(long)]
        csv: bool,
    },
    /// Draw a Dyck or Motzkin word as ASCII art.
    Render {
        input: String,
        #[arg(long, value_enum, default_value_t = AlphabetArg::Motzkin)]
        alphabet: AlphabetArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Bijection {
    Phi,
    Theta,
    Ss,
    Psi,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Cat,
    Udu,
    Fac,
    Mot,
    Equ,
    Eco,
    Sta,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Self {
        match t {
            TheoremArg::Cat => Theorem::Cat,
            TheoremArg::Udu => Theorem::Udu,
            TheoremArg::Fac => Theorem::Fac,
            TheoremArg::Mot => Theorem::Mot,
            TheoremArg::Equ => Theorem::Equ,
            TheoremArg::Eco => Theorem::Eco,
            TheoremArg::Sta => Theorem::Sta,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlphabetArg {
    Dyck,
    Motzkin,
}

/// Text and JSON renderings of one command's result.
struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            ok: true,
        }
    }
}

fn perm(s: &str) -> hatpath::Result<Permutation> {
    s.parse()
}

fn check_size(n: usize) -> hatpath::Result<()> {
    if n > ENUMERATION_LIMIT {
        return Err(hatpath::Error::InvalidArgument(format!(
            "n = {n} exceeds the exhaustive enumeration limit {ENUMERATION_LIMIT}"
        )));
    }
    Ok(())
}

fn forward(b: Bijection, input: &str) -> hatpath::Result<Output> {
    let out = match b {
        Bijection::Phi => phi(&perm(input)?)?.to_string(),
        Bijection::Theta => theta(&perm(input)?).to_string(),
        Bijection::Ss => simion_schmidt(&perm(input)?)?.to_string(),
        Bijection::Psi => psi(&input.parse::<MotzkinWord>()?).to_string(),
    };
    Ok(Output::ok(
        out.clone(),
        json!({ "input": input, "output": out }),
    ))
}

fn inverse(b: Bijection, input: &str) -> hatpath::Result<Output> {
    let out = match b {
        Bijection::Phi => phi_inverse(&input.parse::<DyckWord>()?).to_string(),
        Bijection::Theta => theta_inverse(&dyck_or_indexed(input)?).to_string(),
        Bijection::Ss => simion_schmidt_inverse(&perm(input)?)?.to_string(),
        Bijection::Psi => psi_inverse(&perm(input)?)?.to_string(),
    };
    Ok(Output::ok(
        out.clone(),
        json!({ "input": input, "output": out }),
    ))
}

/// Accepts a plain Dyck word or an indexed one ("u4 d4 ...").
fn dyck_or_indexed(input: &str) -> hatpath::Result<DyckWord> {
    if input.trim().contains(' ') {
        Ok(input
            .parse::<hatpath::bijections::IndexedDyckPath>()?
            .unlabeled())
    } else {
        input.parse()
    }
}

fn run(cmd: Command) -> hatpath::Result<Output> {
    match cmd {
        Command::Enumerate { class, n } => {
            check_size(n)?;
            let perms = AvoidanceClassSpec::parse(n, &class)?.enumerate();
            let text = perms
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            let json =
                json!({ "class": class, "n": n, "count": perms.len(), "permutations": perms });
            Ok(Output::ok(text, json))
        }
        Command::Map { bijection, input } => forward(bijection, &input),
        Command::Invert { bijection, input } => inverse(bijection, &input),
        Command::Verify { theorem, n } => {
            check_size(n + 1)?;
            let theorem = Theorem::from(theorem);
            let report = verify::run(theorem, n);
            let status = if report.passed() { "passed" } else { "FAILED" };
            let mut text = report.lines.join("\n");
            text.push_str(&format!("\n{theorem}: {status}"));
            Ok(Output {
                text,
                json: json!({
                    "theorem": theorem.name(),
                    "n": n,
                    "passed": report.passed(),
                    "lines": report.lines,
                    "failures": report.failures,
                }),
                ok: report.passed(),
            })
        }
        Command::Tree { depth } => {
            check_size(depth + 1)?;
            let nodes = export_tree(depth);
            let text = nodes
                .iter()
                .map(|n| {
                    let sites: Vec<String> = n.active_sites.iter().map(|s| s.to_string()).collect();
                    format!(
                        "{}{} ({}) sites {}",
                        "  ".repeat(n.level - 1),
                        n.perm.to_compact_string(),
                        n.label,
                        sites.join(",")
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::ok(text, json!(nodes)))
        }
        Command::Sequence { class, n, csv } => {
            check_size(n)?;
            let counts = class_counts(&parse_pattern_list(&class)?, n);
            let text = if csv {
                std::iter::once("n,count".to_string())
                    .chain(counts.iter().map(|(k, c)| format!("{k},{c}")))
                    .collect::<Vec<_>>()
                    .join("\n")
            } else {
                counts
                    .iter()
                    .map(|(_, c)| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let json = json!({
                "class": class,
                "counts": counts.iter().map(|&(k, c)| json!({ "n": k, "count": c })).collect::<Vec<_>>(),
            });
            Ok(Output::ok(text, json))
        }
        Command::Render { input, alphabet } => {
            let alphabet = match alphabet {
                AlphabetArg::Dyck => Alphabet::Dyck,
                AlphabetArg::Motzkin => Alphabet::Motzkin,
            };
            let art = match parse_path(&input, alphabet)? {
                PathWord::Dyck(w) => w.render_ascii(),
                PathWord::Motzkin(w) => w.render_ascii(),
            };
            let json = json!({ "input": input, "ascii": art });
            Ok(Output::ok(art.trim_end_matches('\n').to_string(), json))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("serializable")
                );
            } else if !out.text.is_empty() {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({ "error": e.to_string() }));
            }
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
