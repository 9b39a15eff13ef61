//! Command-line interface: every capability of the library behind stable
//! text/JSON output. Exit codes: 0 success, 1 property violation found,
//! 2 usage or parse error, 3 arithmetic overflow, 4 storage failure.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use qfray::record::ShapeRecord;
use qfray::search::{run_campaign, ClassFilter, SearchError, VerificationReport};
use qfray_core::closedform;
use qfray_core::expansion::{
    is_q_positive, monomial_series, q_diff, q_expansion_with, EngineOptions,
};
use qfray_core::shape::{enumerate_frayed_ribbons, enumerate_shifted_skew_shapes, ShapeKind};
use qfray_core::tableau::{enumerate_fillings, greedy_filling, parse_word, ContentVector};
use qfray_core::walk::{is_ballot, walk};
use qfray_core::ShiftedSkewShape;

#[derive(Parser)]
#[command(
    name = "qfray",
    version,
    about = "Exact skew Schur Q-function computations for shifted skew shapes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumClass {
    /// All shapes in the enumeration window, disconnected ones included.
    All,
    /// Connected shapes only.
    Connected,
    /// Near-ribbons (frayed or not).
    NearRibbon,
    /// Frayed ribbons.
    Frayed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyClass {
    /// Distinctness of frayed-ribbon Q-functions up to antipodal reflection.
    Frayed,
    /// Closure: any shape with the Q-function of a near-ribbon is one.
    NearRibbon,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a shape as ribbon, near-ribbon, frayed ribbon, or other.
    Classify {
        shape: String,
        #[arg(long)]
        json: bool,
    },
    /// Expand the Schur Q-function of a shape over the straight-shape basis.
    Expand {
        shape: String,
        #[arg(long)]
        json: bool,
        /// Also print every ballot tableau behind each coefficient.
        #[arg(long)]
        show_tableaux: bool,
    },
    /// Monomial expansion truncated to a fixed number of variables.
    Series {
        shape: String,
        #[arg(long)]
        vars: u32,
        #[arg(long)]
        json: bool,
    },
    /// Trace the lattice walk of a word and test ballotness.
    Walk {
        word: String,
        /// Walk level to trace (letters of value LEVEL and LEVEL+1).
        #[arg(long, default_value_t = 1)]
        level: u32,
    },
    /// Greedy filling and greedy monomial of a shape.
    Greedy {
        shape: String,
        #[arg(long)]
        json: bool,
        /// Print the layered filling as a grid.
        #[arg(long)]
        grid: bool,
    },
    /// Signed difference of the expansions of two equal-size shapes.
    Diff {
        left: String,
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// Antipodal reflection of a shape.
    Antipodal { shape: String },
    /// Closed-form coefficient formulas for frayed ribbons with few turns.
    Closedform {
        #[command(subcommand)]
        family: Family,
    },
    /// List shapes of one size, one per line.
    Enumerate {
        #[arg(long)]
        size: u32,
        #[arg(long, value_enum, default_value_t = EnumClass::Frayed)]
        class: EnumClass,
        /// Keep one representative of each antipodal pair (frayed only).
        #[arg(long)]
        per_antipodal_pair: bool,
    },
    /// Verify a property on every size up to a bound; exit 1 on violations.
    Verify {
        #[arg(long, value_enum)]
        class: VerifyClass,
        #[arg(long)]
        max_size: u32,
        /// Stream scanned records to a JSONL file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip sizes already marked complete in the output file.
        #[arg(long)]
        resume: bool,
        /// Worker threads (0 = QFRAY_THREADS or all cores).
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        json: bool,
        /// Disable the search prunes (baseline engine).
        #[arg(long)]
        no_prune: bool,
    },
    /// Checkpointed frayed-ribbon campaign over a size range.
    Campaign {
        /// Inclusive size range, e.g. 4..11.
        #[arg(long)]
        sizes: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        resume: bool,
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        no_prune: bool,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Coefficient of Q[(n-2) 2] from the turn count: 2*turns.
    N22 {
        #[arg(long)]
        size: u32,
        #[arg(long)]
        turns: u32,
    },
    /// Full expansion of a one-turn frayed ribbon from its column height.
    OneTurn {
        #[arg(long)]
        size: u32,
        #[arg(long)]
        height: u32,
    },
    /// Height-0 two-turn shapes: coefficient of Q[(n-k) k].
    H0TwoRow {
        #[arg(long)]
        size: u32,
        #[arg(long)]
        top: u32,
        #[arg(long)]
        bottom: u32,
        #[arg(short)]
        k: u32,
    },
    /// Height-0 two-turn shapes: coefficient of Q[(n-k-1) k 1].
    H0Hook {
        #[arg(long)]
        size: u32,
        #[arg(long)]
        top: u32,
        #[arg(long)]
        bottom: u32,
        #[arg(short)]
        k: u32,
    },
    /// Height-1 two-turn shapes: coefficient of Q[(n-k) k].
    H1TwoRow {
        #[arg(long)]
        size: u32,
        #[arg(long)]
        top: u32,
        #[arg(long)]
        bottom: u32,
        #[arg(short)]
        k: u32,
    },
    /// Height-1 two-turn shapes: coefficient of Q[(n-k-2) k 2].
    H1K2 {
        #[arg(long)]
        size: u32,
        #[arg(long)]
        top: u32,
        #[arg(long)]
        bottom: u32,
        #[arg(short)]
        k: u32,
    },
}

enum CliError {
    Core(qfray_core::Error),
    Search(SearchError),
    Violations(usize),
}

impl From<qfray_core::Error> for CliError {
    fn from(e: qfray_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        CliError::Search(e)
    }
}

fn exit_code(e: &CliError) -> i32 {
    match e {
        CliError::Violations(_) => 1,
        CliError::Core(qfray_core::Error::Overflow) => 3,
        CliError::Core(_) => 2,
        CliError::Search(SearchError::Core(qfray_core::Error::Overflow)) => 3,
        CliError::Search(SearchError::Core(_)) => 2,
        CliError::Search(SearchError::Io(_)) => 4,
        CliError::Search(SearchError::Corrupt(_)) => 4,
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            match &e {
                CliError::Core(err) => eprintln!("error: {err}"),
                CliError::Search(err) => eprintln!("error: {err}"),
                CliError::Violations(count) => {
                    eprintln!("error: {count} violating fingerprint group(s) found")
                }
            }
            std::process::exit(exit_code(&e));
        }
    }
}

fn parse_shape(text: &str) -> Result<ShiftedSkewShape, CliError> {
    Ok(ShiftedSkewShape::parse(text)?)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Classify { shape, json } => {
            let s = parse_shape(&shape)?;
            let class = s.classify()?;
            if json {
                let record = ShapeRecord::compute(&s, EngineOptions::default())?;
                println!("{}", serde_json::to_string(&record).unwrap());
            } else {
                println!("shape: {s}");
                println!("class: {}", class.kind.name());
                println!("connected: {}", class.connected);
                println!("staircase-cells: {}", class.staircase_count);
                if class.kind == ShapeKind::FrayedRibbon {
                    let t = s.count_turns()?;
                    println!(
                        "turns: {} (outer {}, inner {})",
                        t.total(),
                        t.outer_turns(),
                        t.inner_turns()
                    );
                }
            }
            Ok(())
        }
        Command::Expand {
            shape,
            json,
            show_tableaux,
        } => {
            let s = parse_shape(&shape)?;
            let exp = q_expansion_with(&s, EngineOptions::default())?;
            if json {
                let record = ShapeRecord::compute(&s, EngineOptions::default())?;
                println!("{}", serde_json::to_string(&record).unwrap());
            } else {
                println!("{}", exp.canonical_text());
            }
            if show_tableaux {
                for (nu, c) in exp.terms() {
                    println!("Q[{nu}] x{c}:");
                    let content = ContentVector::from(nu);
                    for t in enumerate_fillings(&s, &content, true)? {
                        if is_ballot(&t.reading_word()) {
                            print!("{}", t.ascii());
                            println!("--");
                        }
                    }
                }
            }
            Ok(())
        }
        Command::Series { shape, vars, json } => {
            if vars == 0 {
                return Err(CliError::Core(qfray_core::Error::BadParams(
                    "at least one variable required".into(),
                )));
            }
            let s = parse_shape(&shape)?;
            let series = monomial_series(&s, vars)?;
            if json {
                let terms: Vec<(Vec<u32>, i64)> =
                    series.terms().map(|(e, c)| (e.to_vec(), c)).collect();
                let doc = serde_json::json!({
                    "shape": s.to_string(),
                    "vars": vars,
                    "terms": terms,
                });
                println!("{doc}");
            } else {
                println!("{}", series.text());
            }
            Ok(())
        }
        Command::Walk { word, level } => {
            if level == 0 {
                return Err(CliError::Core(qfray_core::Error::BadParams(
                    "levels start at 1".into(),
                )));
            }
            let letters = parse_word(&word)?;
            let trace = walk(&letters, level);
            for (letter, dir, state) in &trace.steps {
                println!("{letter} {dir} {state}");
            }
            println!("ballot: {}", is_ballot(&letters));
            Ok(())
        }
        Command::Greedy { shape, json, grid } => {
            let s = parse_shape(&shape)?;
            let g = greedy_filling(&s)?;
            if json {
                let doc = serde_json::json!({
                    "shape": s.to_string(),
                    "ribbon_count": g.ribbon_count(),
                    "content": g.content().counts(),
                    "coefficient": g.coefficient()?,
                    "monomial": g.monomial_text(),
                });
                println!("{doc}");
            } else {
                println!("{}", g.monomial_text());
            }
            if grid {
                for (idx, entry) in s.row_intervals().iter().enumerate() {
                    let mut line = String::new();
                    if let Some((a, b)) = *entry {
                        for _ in 1..a {
                            line.push_str("  ");
                        }
                        for col in a..=b {
                            let v = g.filling()[&qfray_core::Cell::new(idx as u32 + 1, col)];
                            line.push_str(&format!("{v} "));
                        }
                    }
                    println!("{}", line.trim_end());
                }
            }
            Ok(())
        }
        Command::Diff { left, right, json } => {
            let l = parse_shape(&left)?;
            let r = parse_shape(&right)?;
            let diff = q_diff(&l, &r)?;
            if json {
                let doc = serde_json::json!({
                    "left": l.to_string(),
                    "right": r.to_string(),
                    "difference": diff.to_sorted_pairs(),
                    "positive": is_q_positive(&diff),
                    "zero": diff.is_zero(),
                });
                println!("{doc}");
            } else {
                println!("{}", diff.canonical_text());
                println!("positive: {}", is_q_positive(&diff));
                println!("zero: {}", diff.is_zero());
            }
            Ok(())
        }
        Command::Antipodal { shape } => {
            let s = parse_shape(&shape)?;
            println!("{}", s.antipodal());
            Ok(())
        }
        Command::Closedform { family } => {
            match family {
                Family::N22 { size, turns } => {
                    println!("{}", closedform::coeff_n22(size, turns)?)
                }
                Family::OneTurn { size, height } => {
                    println!("{}", closedform::one_turn_expansion(size, height)?)
                }
                Family::H0TwoRow {
                    size,
                    top,
                    bottom,
                    k,
                } => {
                    println!("{}", closedform::h0_two_row_coeff(size, top, bottom, k)?)
                }
                Family::H0Hook {
                    size,
                    top,
                    bottom,
                    k,
                } => {
                    println!("{}", closedform::h0_hook_coeff(size, top, bottom, k)?)
                }
                Family::H1TwoRow {
                    size,
                    top,
                    bottom,
                    k,
                } => {
                    println!("{}", closedform::h1_two_row_coeff(size, top, bottom, k)?)
                }
                Family::H1K2 {
                    size,
                    top,
                    bottom,
                    k,
                } => {
                    println!("{}", closedform::h1_k2_coeff(size, top, bottom, k)?)
                }
            }
            Ok(())
        }
        Command::Enumerate {
            size,
            class,
            per_antipodal_pair,
        } => {
            let shapes = match class {
                EnumClass::All => enumerate_shifted_skew_shapes(size, false),
                EnumClass::Connected => enumerate_shifted_skew_shapes(size, true),
                EnumClass::NearRibbon => enumerate_shifted_skew_shapes(size, true)
                    .into_iter()
                    .filter(|s| {
                        s.classify()
                            .map(|c| c.kind.is_near_ribbon())
                            .unwrap_or(false)
                    })
                    .collect(),
                EnumClass::Frayed => enumerate_frayed_ribbons(size, per_antipodal_pair),
            };
            for s in shapes {
                println!("{s}");
            }
            Ok(())
        }
        Command::Verify {
            class,
            max_size,
            out,
            resume,
            threads,
            json,
            no_prune,
        } => {
            let opts = if no_prune {
                EngineOptions::unpruned()
            } else {
                EngineOptions::default()
            };
            let (filter, min_size) = match class {
                VerifyClass::Frayed => (ClassFilter::Frayed, 4.min(max_size)),
                VerifyClass::NearRibbon => (ClassFilter::Connected, 1),
            };
            let reports = scan(filter, min_size..=max_size, out, resume, threads, opts)?;
            report_out(&reports, json)
        }
        Command::Campaign {
            sizes,
            out,
            resume,
            threads,
            json,
            no_prune,
        } => {
            let opts = if no_prune {
                EngineOptions::unpruned()
            } else {
                EngineOptions::default()
            };
            let range = parse_range(&sizes)?;
            let reports = scan(ClassFilter::Frayed, range, Some(out), resume, threads, opts)?;
            report_out(&reports, json)
        }
    }
}

fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<u32>, CliError> {
    let bad = || {
        CliError::Core(qfray_core::Error::Parse(format!(
            "bad size range {text:?}; expected forms like 4..11"
        )))
    };
    let parts: Vec<&str> = if text.contains("..=") {
        text.splitn(2, "..=").collect()
    } else if text.contains("..") {
        text.splitn(2, "..").collect()
    } else if text.contains('-') {
        text.splitn(2, '-').collect()
    } else {
        vec![text, text]
    };
    let [a, b] = parts.as_slice() else {
        return Err(bad());
    };
    let lo: u32 = a.trim().parse().map_err(|_| bad())?;
    let hi: u32 = b.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn scan(
    filter: ClassFilter,
    sizes: std::ops::RangeInclusive<u32>,
    out: Option<PathBuf>,
    resume: bool,
    threads: usize,
    opts: EngineOptions,
) -> Result<Vec<VerificationReport>, CliError> {
    let progress = |r: &VerificationReport| {
        eprintln!(
            "size {}: {} shapes, {} groups, {} violations ({} ms)",
            r.size,
            r.shape_count,
            r.group_count,
            r.violations.len(),
            r.wall_ms
        );
    };
    match out {
        Some(path) => {
            let summary = run_campaign(filter, sizes, &path, resume, threads, opts, progress)?;
            Ok(summary.reports)
        }
        None => {
            let mut reports = Vec::new();
            for n in sizes {
                let report = match filter {
                    ClassFilter::Frayed => {
                        qfray::search::verify_frayed_distinctness(n, threads, opts)?
                    }
                    _ => qfray::search::verify_near_ribbon_closure(n, threads, opts)?,
                };
                progress(&report);
                reports.push(report);
            }
            Ok(reports)
        }
    }
}

fn report_out(reports: &[VerificationReport], json: bool) -> Result<(), CliError> {
    if json {
        println!("{}", serde_json::to_string(reports).unwrap());
    } else {
        for r in reports {
            println!(
                "size {}: {} shapes, {} fingerprint groups, {} violations",
                r.size,
                r.shape_count,
                r.group_count,
                r.violations.len()
            );
            for v in &r.violations {
                println!(
                    "  violation (fingerprint {}):",
                    &v.fingerprint[..16.min(v.fingerprint.len())]
                );
                for m in &v.members {
                    println!("    {} [{}]", m.shape, m.class);
                }
            }
        }
    }
    let total: usize = reports.iter().map(|r| r.violations.len()).sum();
    if total > 0 {
        return Err(CliError::Violations(total));
    }
    Ok(())
}
