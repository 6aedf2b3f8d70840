use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use avd_cli::exit;
use avd_cli::{ColoringDocument, Format, Provenance};
use avd_core::splice::ConstructionParams;
use avd_core::{
    avd_color, check_avd, check_circulant_shape, check_gg, check_palette, check_periodicity,
    check_proper, chi_a_exact, exists_avd_k, plan_construction, AvdError, CirculantGraph,
    OracleError, SearchConfig, SearchOutcome, VerificationReport,
};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "circavd",
    version,
    about = "AVD edge-colorings of circulant graphs C_n([1,R])"
)]
struct Cli {
    /// Accepted for reproducible invocations; every command is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a (2R+1)-color AVD coloring of C_n([1,R]).
    Color {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a coloring document.
    Verify {
        input: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "proper,avd")]
        checks: Vec<Check>,
        /// Lengths of the distinguishing graph, e.g. `1..4` or `1,3,5`.
        #[arg(long)]
        gg_lengths: Option<String>,
        #[arg(long)]
        period: Option<usize>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Exact AVD chromatic index by exhaustive search.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 16)]
        max_colors: usize,
        /// Seconds.
        #[arg(long)]
        time_limit: Option<f64>,
        /// Write a witness coloring here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Which n in [lo, hi] the construction reaches.
    Coverage {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        lo: usize,
        #[arg(long)]
        hi: usize,
    },
    /// Convert a coloring document to another format.
    Export {
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Proper,
    Avd,
    Palette,
    Shape,
    Periodicity,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(exit::INVALID_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Color { n, r, format, out } => cmd_color(n, r, format, out.as_deref()),
        Command::Verify {
            input,
            checks,
            gg_lengths,
            period,
            json,
        } => cmd_verify(&input, &checks, gg_lengths.as_deref(), period, json),
        Command::Oracle {
            n,
            r,
            max_colors,
            time_limit,
            out,
            format,
        } => cmd_oracle(n, r, max_colors, time_limit, out.as_deref(), format),
        Command::Coverage { r, lo, hi } => cmd_coverage(r, lo, hi),
        Command::Export { input, format, out } => cmd_export(&input, format, out.as_deref()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("circavd: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn write_output(out: Option<&Path>, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::new(exit::INVALID_INPUT, format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::new(exit::INVALID_INPUT, e.to_string()))
        }
    }
}

fn read_document(path: &Path) -> Result<ColoringDocument, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::new(exit::INVALID_INPUT, format!("{}: {e}", path.display())))?;
    ColoringDocument::parse(&text)
        .map_err(|e| Failure::new(exit::PARSE_ERROR, format!("{}: {e}", path.display())))
}

fn cmd_color(n: usize, r: usize, format: Format, out: Option<&Path>) -> Outcome {
    match avd_color(n, r) {
        Ok(c) => write_output(out, &ColoringDocument::from_construction(&c).render(format)),
        Err(AvdError::NotCovered(e)) => {
            let mut msg = format!("C_{n}([1,{r}]) not covered: {e}");
            if r >= 2 {
                let params = ConstructionParams::new(r).expect("r >= 2");
                let residue = if params.needs_multiple_of_three() {
                    " and 3 | n"
                } else {
                    ""
                };
                msg.push_str(&format!(
                    "; a construction is guaranteed for n >= {}{residue}",
                    params.threshold()
                ));
            }
            Err(Failure::new(exit::NOT_COVERED, msg))
        }
        Err(e) => Err(Failure::new(exit::INVALID_INPUT, e.to_string())),
    }
}

/// Accepts `a..b` (inclusive) or a comma-separated list.
fn parse_lengths(spec: &str) -> Result<Vec<usize>, Failure> {
    let bad = || {
        Failure::new(
            exit::INVALID_INPUT,
            format!("bad --gg-lengths value {spec:?}"),
        )
    };
    if let Some((lo, hi)) = spec.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi
            .trim_start_matches('=')
            .trim()
            .parse()
            .map_err(|_| bad())?;
        return Ok((lo..=hi).collect());
    }
    spec.split(',')
        .map(|s| s.trim().parse().map_err(|_| bad()))
        .collect()
}

fn cmd_verify(
    input: &Path,
    checks: &[Check],
    gg_lengths: Option<&str>,
    period: Option<usize>,
    json: bool,
) -> Outcome {
    let doc = read_document(input)?;
    let parse_failure = |e: avd_cli::DocumentError| Failure::new(exit::PARSE_ERROR, e.to_string());
    let mut report: Option<VerificationReport> = None;
    let mut add = |r: VerificationReport| {
        report = Some(match report.take() {
            Some(acc) => acc.merge(r),
            None => r,
        });
    };
    let raw_edges: Vec<(usize, usize)> = doc.edges.iter().map(|&(u, v, _)| (u, v)).collect();
    let full_range = doc.lengths.iter().copied().eq(1..=doc.r);
    if checks.contains(&Check::Shape) {
        if !full_range {
            return Err(Failure::new(
                exit::INVALID_INPUT,
                "shape check needs lengths 1..=r",
            ));
        }
        add(check_circulant_shape(&raw_edges, doc.n, doc.r));
    }
    let coloring = match doc.to_coloring().map_err(parse_failure)? {
        Ok(c) => c,
        Err(e) => {
            if full_range && !checks.contains(&Check::Shape) {
                add(check_circulant_shape(&raw_edges, doc.n, doc.r));
            }
            if let Some(r) = &report {
                print_report(r, json);
            }
            return Err(Failure::new(
                exit::VERIFICATION_FAILED,
                format!("edges do not form the declared circulant: {e}"),
            ));
        }
    };
    for check in checks {
        match check {
            Check::Proper => add(check_proper(&coloring)),
            Check::Avd => add(check_avd(&coloring)),
            Check::Palette => add(check_palette(&coloring, 2 * doc.r + 1)),
            Check::Shape => {}
            Check::Periodicity => {
                let p = period.ok_or_else(|| {
                    Failure::new(exit::INVALID_INPUT, "periodicity check needs --period")
                })?;
                add(check_periodicity(&coloring, p)
                    .map_err(|e| Failure::new(exit::INVALID_INPUT, e.to_string()))?);
            }
        }
    }
    if let Some(spec) = gg_lengths {
        let lengths = parse_lengths(spec)?;
        let g_prime = CirculantGraph::new(doc.n, lengths)
            .map_err(|e| Failure::new(exit::INVALID_INPUT, e.to_string()))?;
        add(check_gg(coloring.graph(), &g_prime, &coloring)
            .map_err(|e| Failure::new(exit::INVALID_INPUT, e.to_string()))?);
    }
    let Some(report) = report else {
        return Err(Failure::new(exit::INVALID_INPUT, "no checks requested"));
    };
    print_report(&report, json);
    if report.passed {
        Ok(())
    } else {
        Err(Failure::new(
            exit::VERIFICATION_FAILED,
            "verification failed",
        ))
    }
}

fn print_report(r: &VerificationReport, json: bool) {
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(r).expect("serializable report")
        );
        return;
    }
    println!(
        "{} [{}] palette={}",
        if r.passed { "PASS" } else { "FAIL" },
        r.checked_properties.join(","),
        r.palette_size
    );
    for v in r.violations.iter().take(20) {
        let color = v
            .color
            .as_deref()
            .map(|c| format!(" color={c}"))
            .unwrap_or_default();
        println!(
            "  {:?} vertices={:?} edges={:?}{color}",
            v.kind, v.vertices, v.edges
        );
    }
    if r.violations.len() > 20 {
        println!("  ... {} more", r.violations.len() - 20);
    }
}

fn cmd_oracle(
    n: usize,
    r: usize,
    max_colors: usize,
    time_limit: Option<f64>,
    out: Option<&Path>,
    format: Format,
) -> Outcome {
    let invalid = |m: String| Failure::new(exit::INVALID_INPUT, m);
    let graph = CirculantGraph::full(n, r).map_err(|e| invalid(e.to_string()))?;
    let time_limit = match time_limit {
        Some(t) if t.is_finite() && t >= 0.0 => Some(Duration::from_secs_f64(t)),
        Some(t) => return Err(invalid(format!("bad --time-limit {t}"))),
        None => None,
    };
    let cfg = SearchConfig {
        max_colors,
        time_limit,
        ..SearchConfig::default()
    };
    match chi_a_exact(&graph, &cfg) {
        Ok(k) => {
            println!("{k}");
            if let Some(path) = out {
                if let Ok(SearchOutcome::Found(c)) = exists_avd_k(&graph, k, &cfg) {
                    let doc =
                        ColoringDocument::from_coloring(&c, Provenance::Label("oracle".into()));
                    write_output(Some(path), &doc.render(format))?;
                }
            }
            Ok(())
        }
        Err(OracleError::Timeout { lower }) => {
            println!("timeout: {lower} <= chi'_a");
            Err(Failure::new(exit::TIMEOUT, "time limit reached"))
        }
        Err(e) => Err(invalid(e.to_string())),
    }
}

fn cmd_coverage(r: usize, lo: usize, hi: usize) -> Outcome {
    if lo > hi {
        return Err(Failure::new(
            exit::INVALID_INPUT,
            "--lo must not exceed --hi",
        ));
    }
    if r == 0 {
        return Err(Failure::new(exit::INVALID_INPUT, "--r must be positive"));
    }
    let mut total = 0;
    println!("n,covered,u,v");
    for n in lo..=hi {
        match plan_construction(n, r) {
            Ok(plan) => {
                total += 1;
                let (u, v) = plan
                    .solution
                    .map(|s| (s.extensions, s.periods))
                    .unwrap_or((0, n / 3));
                println!("{n},yes,{u},{v}");
            }
            Err(_) => println!("{n},no,,"),
        }
    }
    println!("total {total} of {}", hi - lo + 1);
    Ok(())
}

fn cmd_export(input: &Path, format: Format, out: Option<&Path>) -> Outcome {
    let doc = read_document(input)?;
    write_output(out, &doc.render(format))
}
