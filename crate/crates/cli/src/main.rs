//! Command-line front end: bijections, diagram renderings, witness
//! extraction, the pattern-avoidance census, and the invariant suite.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use viennot::oracle::{census_parallel, CensusRow};
use viennot::render;
use viennot::verify::{run_all_parallel, VerifyConfig};
use viennot::{
    build_updown, build_viennot, is_coexistent, longest_pattern, matching_to_word, rs,
    strands_cross, Error, Matching, MatchingWord, Permutation,
};

/// Robinson–Schensted bumping, Viennot diagrams, up-down diagrams for
/// matchings, and the bijection with up-down tableaux.
///
/// Input grammar: permutations and matching words are comma-separated
/// integers with whitespace ignored; barred symbols are negative, so the
/// word 7 8 6 5 8̄ … is written `7,8,6,5,-8,…`. Matchings may also be given
/// in pair syntax `1-7,2-5,…`.
///
/// Exit codes: 0 success, 1 property or I/O failure, 2 parse error,
/// 3 size limit.
#[derive(Parser)]
#[command(name = "viennot", version, about, verbatim_doc_comment)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the insertion tableau P, recording tableau Q, and shape of a permutation
    Rs {
        /// Permutation in one-line notation, e.g. `2,4,3,1`
        word: String,
        #[arg(long, value_enum, default_value_t = TextFormat::Text)]
        format: TextFormat,
    },
    /// Build the Viennot diagram of a permutation and render it
    Viennot {
        /// Permutation in one-line notation
        word: String,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Ascii)]
        format: DiagramFormat,
        /// Write to a file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the up-down Viennot diagram of a matching and render it
    Updown {
        /// Matching word `4,2,3,-4,…` or pair syntax `1-4,2-6,…`
        input: String,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Ascii)]
        format: DiagramFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Longest pattern of a matching: its length and a verified witness
    Pattern {
        /// Matching word or pair syntax
        input: String,
    },
    /// Count pattern-avoiding matchings against row-bounded up-down tableaux
    Count {
        /// Number of matched points 2k (even)
        #[arg(long)]
        points: usize,
        /// Bound n: matchings avoiding (n+1)-patterns, movies with at most n rows
        #[arg(long)]
        avoid: usize,
        /// Worker threads for the matching count
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full invariant suite and report one line per check
    Verify {
        /// Exhaustive bound on permutation size (matchings are capped at 6 strands)
        #[arg(long, default_value_t = 6)]
        max_k: usize,
        /// Worker threads over the checks
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Seed for the sampled checks
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DiagramFormat {
    Ascii,
    Svg,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeLimit { .. } => 3,
            Error::MalformedWord { .. }
            | Error::InvalidPermutation(_)
            | Error::InvalidMatching(_) => 2,
            _ => 1,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(1, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Rs { word, format } => cmd_rs(&word, format),
        Cmd::Viennot { word, format, out } => cmd_viennot(&word, format, out.as_deref()),
        Cmd::Updown { input, format, out } => cmd_updown(&input, format, out.as_deref()),
        Cmd::Pattern { input } => cmd_pattern(&input),
        Cmd::Count {
            points,
            avoid,
            jobs,
            out,
        } => cmd_count(points, avoid, jobs, out.as_deref()),
        Cmd::Verify { max_k, jobs, seed } => cmd_verify(max_k, jobs, seed),
    }
}

/// Split on commas and parse each field, reporting the byte offset of the
/// first bad field.
fn parse_fields(input: &str) -> Result<Vec<(usize, i64)>, Failure> {
    let mut fields = Vec::new();
    let mut offset = 0;
    for piece in input.split(',') {
        let trimmed = piece.trim();
        if trimmed.is_empty() {
            return Err(Failure::new(
                2,
                format!("parse error at offset {offset}: empty field"),
            ));
        }
        let cleaned: String = trimmed.chars().filter(|c| !c.is_whitespace()).collect();
        let value: i64 = cleaned.parse().map_err(|_| {
            Failure::new(
                2,
                format!("parse error at offset {offset}: expected integer, got {trimmed:?}"),
            )
        })?;
        fields.push((offset, value));
        offset += piece.len() + 1;
    }
    Ok(fields)
}

fn parse_permutation(input: &str) -> Result<Permutation, Failure> {
    if input.trim().is_empty() {
        return Ok(Permutation::identity(0));
    }
    let mut word = Vec::new();
    for (offset, value) in parse_fields(input)? {
        if value <= 0 {
            return Err(Failure::new(
                2,
                format!("parse error at offset {offset}: permutation values are positive"),
            ));
        }
        word.push(value as usize);
    }
    Permutation::new(word).map_err(Into::into)
}

/// Matching input: pair syntax if any field contains an interior dash,
/// signed matching-word syntax otherwise.
fn parse_matching_input(input: &str) -> Result<MatchingWord, Failure> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Ok(MatchingWord::empty());
    }
    let is_pairs = trimmed
        .split(',')
        .any(|f| f.trim().char_indices().any(|(i, c)| c == '-' && i > 0));
    if is_pairs {
        let mut pairs = Vec::new();
        let mut offset = 0;
        for piece in trimmed.split(',') {
            let field: String = piece.chars().filter(|c| !c.is_whitespace()).collect();
            let parts: Vec<&str> = field.split('-').collect();
            let parsed = match parts.as_slice() {
                [a, b] => a.parse::<usize>().ok().zip(b.parse::<usize>().ok()),
                _ => None,
            };
            let Some((a, b)) = parsed else {
                return Err(Failure::new(
                    2,
                    format!("parse error at offset {offset}: expected pair like 1-7, got {piece:?}"),
                ));
            };
            pairs.push((a, b));
            offset += piece.len() + 1;
        }
        let m = Matching::new(pairs)?;
        Ok(matching_to_word(&m))
    } else {
        let signed: Vec<i64> = parse_fields(trimmed)?.into_iter().map(|(_, v)| v).collect();
        MatchingWord::from_signed(&signed).map_err(Into::into)
    }
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn cmd_rs(word: &str, format: TextFormat) -> Result<(), Failure> {
    let w = parse_permutation(word)?;
    let (p, q, shape) = rs(&w);
    match format {
        TextFormat::Text => {
            println!("P:\n{p}");
            println!("Q:\n{q}");
            println!("shape: {shape}");
        }
        TextFormat::Json => {
            let doc = serde_json::json!({
                "format_version": 1,
                "p": p,
                "q": q,
                "shape": shape,
            });
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
        }
    }
    Ok(())
}

fn cmd_viennot(
    word: &str,
    format: DiagramFormat,
    out: Option<&std::path::Path>,
) -> Result<(), Failure> {
    let w = parse_permutation(word)?;
    let d = build_viennot(&w);
    let text = match format {
        DiagramFormat::Ascii => render::ascii_viennot(&d),
        DiagramFormat::Svg => render::svg_viennot(&d),
        DiagramFormat::Json => render::json_viennot(&d),
    };
    emit(&text, out)
}

fn cmd_updown(
    input: &str,
    format: DiagramFormat,
    out: Option<&std::path::Path>,
) -> Result<(), Failure> {
    let w = parse_matching_input(input)?;
    let d = build_updown(&w);
    let text = match format {
        DiagramFormat::Ascii => render::ascii_updown(&d),
        DiagramFormat::Svg => render::svg_updown(&d),
        DiagramFormat::Json => render::json_updown(&d),
    };
    emit(&text, out)
}

fn cmd_pattern(input: &str) -> Result<(), Failure> {
    let w = parse_matching_input(input)?;
    let m = viennot::word_to_matching(&w);
    let witness = longest_pattern(&m)?;
    // Re-verify the witness before printing it.
    if !is_coexistent(&w, &witness.times)? {
        return Err(Failure::new(1, "witness is not coexistent".to_string()));
    }
    for (i, &a) in witness.strands.iter().enumerate() {
        for &b in &witness.strands[i + 1..] {
            if !strands_cross(&m, a, b)? {
                return Err(Failure::new(
                    1,
                    format!("witness strands {a},{b} do not cross"),
                ));
            }
        }
    }
    println!("length: {}", witness.len());
    let join = |xs: &[usize]| {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    println!("strands: {}", join(&witness.strands));
    println!("times: {}", join(&witness.times));
    Ok(())
}

fn cmd_count(
    points: usize,
    avoid: usize,
    jobs: usize,
    out: Option<&std::path::Path>,
) -> Result<(), Failure> {
    if !points.is_multiple_of(2) {
        return Err(Failure::new(
            2,
            format!("--points must be even, got {points}"),
        ));
    }
    let row = census_parallel(points / 2, avoid, jobs.max(1))?;
    let text = format!("{}\n{}\n", CensusRow::CSV_HEADER, row.csv_line());
    emit(&text, out)?;
    if !row.agree() {
        return Err(Failure::new(1, "census counts disagree".to_string()));
    }
    Ok(())
}

fn cmd_verify(max_k: usize, jobs: usize, seed: u64) -> Result<(), Failure> {
    let cfg = VerifyConfig {
        max_k,
        seed,
        random_samples: 1000,
    };
    let reports = run_all_parallel(&cfg, jobs.max(1));
    let mut failed = 0;
    for r in &reports {
        if r.passed {
            println!("{}: pass", r.name);
        } else {
            failed += 1;
            println!("{}: FAIL — {}", r.name, r.detail);
        }
    }
    if failed > 0 {
        return Err(Failure::new(1, format!("{failed} check(s) failed")));
    }
    println!("all {} checks passed (max_k = {max_k})", reports.len());
    Ok(())
}
