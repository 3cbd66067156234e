mod verify;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use convexlat::convexgen::{
    classify_finiteness, completion_points, saturate, Budget, Certificate, SaturationStatus, Verdict,
};
use convexlat::geom::Configuration;
use convexlat::lattice::export_dot;
use convexlat::relative::{
    census, closure_system, equivalent, invariant_profile, relative_lattice, rext, CensusOptions, NamedConfig,
    PROFILE_SHAPES,
};
use convexlat::words::{
    check_contiguity_lemma, check_frame_heredity, check_separation, check_symmetry, frames_json, render_subdivision,
    triangle_of_word, v5_saturation_symmetry_check, witness_point, BinaryWord,
};

#[derive(Parser, Debug)]
#[command(name = "convexlat", version, about = "Relative and point-generated convex lattices of planar point sets")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Maximum saturation rounds.
    #[arg(long, global = true, default_value_t = 8)]
    budget_rounds: usize,
    /// Maximum number of generated elements.
    #[arg(long, global = true, default_value_t = 50_000)]
    budget_elements: usize,
    /// Word depth for the words command.
    #[arg(long, global = true, default_value_t = 5)]
    depth: usize,
    /// Grid side length for the census.
    #[arg(long, global = true, default_value_t = 5)]
    grid: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Dot,
    Svg,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Relative lattice R(X).
    Rlattice { input: String },
    /// Point-generated lattice K(X), saturated within the budget.
    Klattice { input: String },
    /// Finite or infinite K(X), with a certificate.
    Classify { input: String },
    /// Completion points and completeness verdict.
    Complete { input: String },
    /// Equivalence classes of n-point subsets of the grid.
    Census {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Sub-configuration counts and relative extreme points.
    Invariants { input: String },
    /// Whether two configurations are equivalent.
    Equiv { first: String, second: String },
    /// Word triangles of the V5 subdivision.
    Words {
        /// One of contiguity, symmetry, heredity, separation, v5, all.
        #[arg(long)]
        check: Option<String>,
        /// Report the triangle and witness point of this word.
        #[arg(long)]
        word: Option<String>,
    },
    /// Built-in battery with the small-order invariant table.
    Verify,
}

/// Input error (exit 1) or an undecided verdict (exit 2).
enum Failure {
    Input(String),
    Unknown(String),
    Check(String),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Rlattice { .. } => "rlattice",
            Command::Klattice { .. } => "klattice",
            Command::Classify { .. } => "classify",
            Command::Complete { .. } => "complete",
            Command::Census { .. } => "census",
            Command::Invariants { .. } => "invariants",
            Command::Equiv { .. } => "equiv",
            Command::Words { .. } => "words",
            Command::Verify => "verify",
        }
    }

    fn formats(&self) -> &'static [Format] {
        use Format::*;
        match self {
            Command::Rlattice { .. } => &[Text, Json, Dot],
            Command::Klattice { .. } => &[Text, Json, Dot, Svg],
            Command::Words { .. } => &[Text, Json, Svg],
            _ => &[Text, Json],
        }
    }
}

fn header(cmd: &Command, c: &Common) -> serde_json::Value {
    json!({
        "command": cmd.name(),
        "version": env!("CARGO_PKG_VERSION"),
        "budget_rounds": c.budget_rounds,
        "budget_elements": c.budget_elements,
        "depth": c.depth,
        "grid": c.grid,
    })
}

fn text_header(cmd: &Command, c: &Common) -> String {
    format!(
        "# convexlat {} {} budget-rounds={} budget-elements={} depth={} grid={}\n",
        cmd.name(),
        env!("CARGO_PKG_VERSION"),
        c.budget_rounds,
        c.budget_elements,
        c.depth,
        c.grid
    )
}

/// Reads a configuration file, or builds a named one given as `named:S6`.
fn parse_config_file(input: &str) -> Result<Configuration, Failure> {
    if let Some(name) = input.strip_prefix("named:") {
        let c: NamedConfig = name.parse().map_err(|e| Failure::Input(format!("{e}")))?;
        return Ok(c.build());
    }
    let text = std::fs::read_to_string(Path::new(input)).map_err(|e| Failure::Input(format!("{input}: {e}")))?;
    Configuration::from_json(&text).map_err(|e| Failure::Input(format!("{input}: {e}")))
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn points_text(x: &Configuration) -> String {
    (0..x.len()).map(|i| format!("{}={}", x.label(i), x.point(i))).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let c = &cli.common;
    let cmd = &cli.command;
    if !cmd.formats().contains(&c.format) {
        return Err(Failure::Input(format!("format {:?} is not available for {}", c.format, cmd.name())));
    }
    if c.budget_rounds == 0 || c.budget_elements == 0 || c.grid == 0 {
        return Err(Failure::Input("budgets and grid must be positive".into()));
    }
    let budget = Budget::new(c.budget_rounds, c.budget_elements);
    let mut out;
    let mut unknown = false;
    match cmd {
        Command::Rlattice { input } => {
            let x = parse_config_file(input)?;
            let sys = closure_system(&x).map_err(|e| Failure::Input(e.to_string()))?;
            let l = relative_lattice(&x).map_err(|e| Failure::Input(e.to_string()))?;
            match c.format {
                Format::Dot => out = export_dot(&l, "R"),
                Format::Json => {
                    out = pretty(
                        &json!({"header": header(cmd, c), "closed_sets": sys.closed_sets(), "lattice": l.to_json()}),
                    )
                }
                _ => {
                    out = text_header(cmd, c);
                    let _ = writeln!(out, "points: {}", points_text(&x));
                    let _ = writeln!(out, "relatively convex sets: {}", l.len());
                    for i in 0..l.len() {
                        let _ = writeln!(out, "  {}", l.label(i));
                    }
                }
            }
        }
        Command::Klattice { input } => {
            let x = parse_config_file(input)?;
            let g = saturate(&x, &budget).map_err(|e| Failure::Input(e.to_string()))?;
            match c.format {
                Format::Json => out = pretty(&json!({"header": header(cmd, c), "lattice": g.to_json()})),
                Format::Svg => out = convexlat::svg::render_polytopes(&x, g.elements()),
                Format::Dot => {
                    if !g.is_saturated() {
                        return Err(Failure::Unknown("saturation did not finish within the budget".into()));
                    }
                    let l = g.to_lattice().map_err(|e| Failure::Input(e.to_string()))?;
                    out = export_dot(&l, "K");
                }
                Format::Text => {
                    out = text_header(cmd, c);
                    let status = match g.status() {
                        SaturationStatus::Saturated => "saturated".to_string(),
                        SaturationStatus::BudgetExhausted(b) => {
                            format!("budget exhausted (rounds {}, elements {})", b.max_rounds, b.max_elements)
                        }
                    };
                    let _ = writeln!(out, "status: {status}");
                    let _ = writeln!(out, "elements: {}", g.len());
                    let _ = writeln!(out, "round sizes: {:?}", g.round_sizes());
                    for (i, e) in g.elements().iter().enumerate() {
                        let _ = writeln!(out, "  [{}] {e:?}", g.generation_index(i));
                    }
                }
            }
        }
        Command::Classify { input } => {
            let x = parse_config_file(input)?;
            let cls = classify_finiteness(&x);
            if c.format == Format::Json {
                out = pretty(&json!({"header": header(cmd, c), "classification": cls}));
            } else {
                out = text_header(cmd, c);
                let _ = writeln!(out, "verdict: {:?}", cls.verdict);
                let cert = match &cls.certificate {
                    Certificate::Diamond { target, map, .. } => format!("sub-configuration of {target} via {map:?}"),
                    Certificate::Sporadic { map } => format!("equivalent to S6 via {map:?}"),
                    Certificate::Obstruction { subset, near_misses } => {
                        format!("obstruction {subset:?}, near misses {near_misses:?}")
                    }
                };
                let _ = writeln!(out, "certificate: {cert}");
            }
        }
        Command::Complete { input } => {
            let x = parse_config_file(input)?;
            let r = completion_points(&x, &budget).map_err(|e| Failure::Input(e.to_string()))?;
            unknown = r.verdict == Verdict::Unknown;
            if c.format == Format::Json {
                out = pretty(&json!({"header": header(cmd, c), "completion": r}));
            } else {
                out = text_header(cmd, c);
                let _ = writeln!(out, "verdict: {:?}", r.verdict);
                let pts: Vec<String> = r.new_points.iter().map(|p| p.to_string()).collect();
                let _ = writeln!(out, "new points: {}", pts.join(" "));
                if let SaturationStatus::BudgetExhausted(b) = r.status {
                    let _ =
                        writeln!(out, "note: budget reached (rounds {}, elements {})", b.max_rounds, b.max_elements);
                }
            }
        }
        Command::Census { n } => {
            let mut opts = CensusOptions::new(*n, c.grid);
            opts.max_subsets = opts.max_subsets.max(c.budget_elements as u64);
            let r = census(&opts);
            unknown = r.partial;
            if c.format == Format::Json {
                out = pretty(&json!({"header": header(cmd, c), "census": r}));
            } else {
                out = text_header(cmd, c);
                let _ = writeln!(
                    out,
                    "n={} grid={} subsets={} classes={}{}",
                    r.n,
                    r.grid,
                    r.subsets_examined,
                    r.classes.len(),
                    if r.partial { " (partial)" } else { "" }
                );
                for (i, cl) in r.classes.iter().enumerate() {
                    let named = convexlat::relative::FIVE_POINT_TABLE
                        .iter()
                        .chain(&PROFILE_SHAPES)
                        .find(|z| z.len() == r.n && equivalent(&z.build(), &cl.representative).is_some())
                        .map(|z| z.to_string())
                        .unwrap_or_else(|| "-".into());
                    let _ = writeln!(
                        out,
                        "{i:>3} {named:<5} rext={} members={} {}",
                        cl.profile.rext_size,
                        cl.members,
                        points_text(&cl.representative)
                    );
                }
            }
        }
        Command::Invariants { input } => {
            let x = parse_config_file(input)?;
            let p = invariant_profile(&x);
            if c.format == Format::Json {
                out = pretty(&json!({"header": header(cmd, c), "profile": p, "rext": rext(&x)}));
            } else {
                out = text_header(cmd, c);
                let _ = writeln!(out, "size: {}", p.size);
                let _ = writeln!(out, "|Rext|: {}", p.rext_size);
                for z in PROFILE_SHAPES {
                    let _ = writeln!(out, "#{z}: {}", p.count(z));
                }
                let _ = writeln!(out, "sum identities: {}", if p.sum_identities_hold() { "hold" } else { "FAIL" });
            }
        }
        Command::Equiv { first, second } => {
            let x = parse_config_file(first)?;
            let y = parse_config_file(second)?;
            let f = equivalent(&x, &y);
            if c.format == Format::Json {
                out = pretty(&json!({"header": header(cmd, c), "equivalent": f.is_some(), "bijection": f}));
            } else {
                out = text_header(cmd, c);
                match f {
                    Some(f) => {
                        let pairs: Vec<String> =
                            f.iter().enumerate().map(|(i, &j)| format!("{}->{}", x.label(i), y.label(j))).collect();
                        let _ = writeln!(out, "equivalent: {}", pairs.join(" "));
                    }
                    None => out.push_str("not equivalent\n"),
                }
            }
        }
        Command::Words { check, word } => {
            let d = c.depth;
            let words_err = |e: convexlat::words::WordsError| Failure::Input(e.to_string());
            if c.format == Format::Svg {
                out = render_subdivision(d).map_err(words_err)?;
            } else if let Some(w) = word {
                let w: BinaryWord = w.parse().map_err(words_err)?;
                let t = triangle_of_word(&w).map_err(words_err)?;
                let z = witness_point(&w).ok();
                if c.format == Format::Json {
                    out = pretty(&json!({"header": header(cmd, c), "triangle": t, "witness": z}));
                } else {
                    out = text_header(cmd, c);
                    let vs: Vec<String> = t.triangle.vertices().iter().map(|p| p.to_string()).collect();
                    let _ = writeln!(out, "word: {w}\ntriangle: {}", vs.join(" "));
                    if let Some(z) = z {
                        let _ = writeln!(out, "witness: {z}");
                    }
                }
            } else if let Some(which) = check {
                const ALL: [&str; 5] = ["contiguity", "symmetry", "heredity", "separation", "v5"];
                let names: Vec<&str> = match which.as_str() {
                    "all" => ALL.to_vec(),
                    w if ALL.contains(&w) => vec![w],
                    other => return Err(Failure::Input(format!("unknown check {other:?}"))),
                };
                let mut results = serde_json::Map::new();
                let mut all_pass = true;
                for name in names {
                    let (pass, value) = match name {
                        "contiguity" => {
                            let r = check_contiguity_lemma(d).map_err(words_err)?;
                            (r.counterexamples.is_empty(), json!(r))
                        }
                        "symmetry" => {
                            let r = check_symmetry(d).map_err(words_err)?;
                            (r.holds(), json!(r))
                        }
                        "heredity" => {
                            let r = check_frame_heredity(d).map_err(words_err)?;
                            (r.failures.is_empty(), json!(r))
                        }
                        "separation" => {
                            let r = check_separation(d).map_err(words_err)?;
                            (r.failures.is_empty(), json!(r))
                        }
                        _ => {
                            let r = v5_saturation_symmetry_check(&budget).map_err(|e| Failure::Input(e.to_string()))?;
                            (r.s_invariant && r.identity_invariant && r.new_points_in_triangle, json!(r))
                        }
                    };
                    all_pass &= pass;
                    results.insert(name.to_string(), json!({"pass": pass, "report": value}));
                }
                if c.format == Format::Json {
                    out = pretty(&json!({"header": header(cmd, c), "checks": results}));
                } else {
                    out = text_header(cmd, c);
                    for (name, v) in &results {
                        let _ = writeln!(out, "{name}: {}", if v["pass"] == json!(true) { "pass" } else { "FAIL" });
                    }
                }
                if !all_pass {
                    return Err(Failure::Check(out));
                }
            } else if c.format == Format::Json {
                out = pretty(&json!({"header": header(cmd, c), "frames": frames_json(d).map_err(words_err)?}));
            } else {
                return Err(Failure::Input("words needs --check, --word, or --format json/svg".into()));
            }
        }
        Command::Verify => {
            let (report, ok) = verify::battery(c.format == Format::Json, &header(cmd, c), &text_header(cmd, c));
            if !ok {
                return Err(Failure::Check(report));
            }
            out = report;
        }
    }
    Ok((out, unknown))
}

fn emit(out: &str, path: Option<&Path>) -> Result<(), String> {
    match path {
        Some(p) => std::fs::write(p, out).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{out}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = cli.common.out.as_deref();
    match run(&cli) {
        Ok((report, unknown)) => {
            if let Err(e) = emit(&report, out) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(if unknown { 2 } else { 0 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Unknown(msg)) => {
            eprintln!("unknown: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Check(report)) => {
            let _ = emit(&report, out);
            eprintln!("error: some checks failed");
            ExitCode::from(3)
        }
    }
}
