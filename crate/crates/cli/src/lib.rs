//! The `enriques` command line.

pub mod render;

use std::fmt;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use enriques::adjacency::default_extra_bound;
use enriques::jump::Maximality;
use enriques::{
    build_enriques_diagram, construct_adjacent_diagram, derived_invariants,
    enumerate_minimal_diagrams, lambda_lin, lambda_lin_semi, linear_adjacent, milnor_orlik,
    minimal_diagram, parse_spec, verify_maximality, DiagramType, EnumerationLimits,
    MaximalityBounds, MaximalityReport, QuasihomogeneousSpec, WeightedDiagram,
};

#[derive(Debug, Parser)]
#[command(
    name = "enriques",
    version,
    about = "Enriques diagrams and linear jumps of plane curve singularities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the invariants read off `k,l,p,q`.
    Info {
        /// `k,l,p,q` or a polynomial like `x*y*(x^2+y^3)`
        spec: String,
    },
    /// Print the Enriques diagram.
    Diagram {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        which: WhichDiagram,
    },
    /// Print the Milnor number.
    Mu {
        spec: String,
        /// Also print the weighted homogeneous formula and compare.
        #[arg(long)]
        check: bool,
    },
    /// Print the linear jump report.
    Jump {
        spec: String,
        /// Treat the spec as the initial part of a semi-quasihomogeneous germ.
        #[arg(long)]
        semi: bool,
        /// Run the bounded maximality sweep and record its outcome.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Decide linear adjacency between two types, up to a bound.
    Adjacent {
        /// Spec or path to a diagram JSON file
        source: String,
        /// Spec or path to a diagram JSON file
        target: String,
        /// Free weight-1 vertices that may be added to the source
        /// (default: size of the target's minimal diagram).
        #[arg(long)]
        extra_bound: Option<usize>,
    },
    /// Check that no enumerated type beats the jump.
    Verify {
        spec: String,
        #[command(flatten)]
        bounds: BoundArgs,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// List minimal diagrams within bounds, one per line.
    Enumerate {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long)]
        max_weight: i64,
        #[arg(long, value_enum, default_value_t = ListFormat::Key)]
        format: ListFormat,
        /// Abort once this many partial diagrams have been explored.
        #[arg(long, env = "ENRIQUES_MAX_CANDIDATES")]
        max_candidates: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Key,
    Json,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct WhichDiagram {
    /// The minimal diagram.
    #[arg(long)]
    pub minimal: bool,
    /// The complete diagram (default).
    #[arg(long)]
    pub complete: bool,
    /// The minimal diagram of the adjacent type realizing the jump.
    #[arg(long)]
    pub adjacent: bool,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Default: vertices of the minimal diagram + 4.
    #[arg(long)]
    pub max_vertices: Option<usize>,
    /// Default: root weight + 2.
    #[arg(long)]
    pub max_weight: Option<i64>,
    /// Default: 2.
    #[arg(long)]
    pub extra_bound: Option<usize>,
}

impl BoundArgs {
    fn resolve(&self, spec: &QuasihomogeneousSpec) -> MaximalityBounds {
        let d = MaximalityBounds::default_for(spec);
        MaximalityBounds {
            max_vertices: self.max_vertices.unwrap_or(d.max_vertices),
            max_weight: self.max_weight.unwrap_or(d.max_weight),
            extra_bound: self.extra_bound.unwrap_or(d.extra_bound),
        }
    }
}

#[derive(Debug)]
pub enum Failure {
    /// Malformed spec text.
    Usage(String),
    /// Bad input or a computation that cannot proceed.
    Domain(String),
    /// The maximality sweep found an adjacent type it should not have.
    Contradiction(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 1,
            Failure::Contradiction(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Domain(m) | Failure::Contradiction(m) => f.write_str(m),
        }
    }
}

impl From<enriques::Error> for Failure {
    fn from(e: enriques::Error) -> Self {
        match e {
            enriques::Error::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain(format!("i/o error: {e}"))
    }
}

fn diagram_argument(arg: &str) -> Result<WeightedDiagram, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        let d = WeightedDiagram::from_json(&text)?;
        if !d.diagram().is_valid() {
            return Err(Failure::Domain(format!(
                "{arg}: {}",
                enriques::Error::Axioms(d.diagram().validate_axioms())
            )));
        }
        return Ok(d);
    }
    Ok(minimal_diagram(&parse_spec(arg)?))
}

fn contradiction_summary(r: &MaximalityReport) -> Option<String> {
    if r.contradictions.is_empty() && r.anomalies.is_empty() {
        return None;
    }
    let list = r
        .contradictions
        .iter()
        .chain(&r.anomalies)
        .map(|f| format!("{} (mu {})", f.key, f.mu))
        .collect::<Vec<_>>()
        .join(", ");
    Some(format!(
        "types adjacent to {} with mu above {}: {list}",
        r.spec,
        r.mu_d - r.lambda_lin
    ))
}

pub fn verify_report_text(r: &MaximalityReport) -> String {
    let b = &r.bounds;
    let mut s = String::new();
    s.push_str(&format!("spec: {}\n", r.spec));
    s.push_str(&format!(
        "bounds: max_vertices {}, max_weight {}, extra_bound {}\n",
        b.max_vertices, b.max_weight, b.extra_bound
    ));
    s.push_str(&format!("mu: {}\nlambda_lin: {}\n", r.mu_d, r.lambda_lin));
    s.push_str(&format!(
        "enumerated: {}\nexamined: {}\nrefuted: {}\n",
        r.enumerated, r.examined, r.refuted
    ));
    s.push_str(&format!(
        "contradictions: {}\nanomalies: {}\n",
        r.contradictions.len(),
        r.anomalies.len()
    ));
    s.push_str(&format!("E_D adjacent: {}\n", r.e_d_adjacent));
    match r.attained_max {
        Some(m) => s.push_str(&format!("attained max mu: {m}\n")),
        None => s.push_str("attained max mu: none\n"),
    }
    s.push_str(&format!(
        "status: {}\n",
        if r.verified() {
            "verified"
        } else {
            "unverified"
        }
    ));
    s
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Info { spec } => {
            let s = parse_spec(spec)?;
            let inv = derived_invariants(&s);
            writeln!(out, "spec: {s}")?;
            writeln!(out, "polynomial: {}", s.polynomial())?;
            writeln!(out, "gcd: {}", inv.d_tilde)?;
            writeln!(out, "r, s: {}, {}", inv.r, inv.s)?;
            writeln!(
                out,
                "weights: w_x = {}, w_y = {}, degree {}",
                inv.w_x, inv.w_y, inv.degree
            )?;
            writeln!(out, "d: {}\nt: {}\nw: {}", inv.d, inv.t, inv.w)?;
        }
        Command::Diagram {
            spec,
            format,
            which,
        } => {
            let s = parse_spec(spec)?;
            let d = if which.minimal {
                minimal_diagram(&s)
            } else if which.adjacent {
                construct_adjacent_diagram(&minimal_diagram(&s))?
            } else {
                build_enriques_diagram(&s)
            };
            let text = match format {
                Format::Text => render::text(&d),
                Format::Json => d.to_json(),
                Format::Dot => render::dot(&d),
            };
            out.write_all(text.as_bytes())?;
        }
        Command::Mu { spec, check } => {
            let s = parse_spec(spec)?;
            let mu = build_enriques_diagram(&s).milnor_number()?;
            writeln!(out, "mu: {mu}")?;
            if *check {
                let oracle = milnor_orlik(&s)?;
                writeln!(out, "oracle: {oracle}")?;
                writeln!(out, "match: {}", if mu == oracle { "yes" } else { "no" })?;
                if mu != oracle {
                    return Err(Failure::Domain(format!(
                        "diagram gives {mu}, oracle gives {oracle}"
                    )));
                }
            }
        }
        Command::Jump {
            spec,
            semi,
            verify,
            bounds,
        } => {
            let s = parse_spec(spec)?;
            let mut report = if *semi {
                lambda_lin_semi(&s)?
            } else {
                lambda_lin(&s)?
            };
            let mut failure = None;
            if *verify {
                let b = bounds.resolve(&s);
                let r = verify_maximality(&s, b, None)?;
                report.maximality = Maximality::Checked {
                    bounds: b,
                    verified: r.verified(),
                };
                failure = contradiction_summary(&r).map(Failure::Contradiction);
            }
            out.write_all(report.to_json().as_bytes())?;
            if let Some(f) = failure {
                return Err(f);
            }
        }
        Command::Adjacent {
            source,
            target,
            extra_bound,
        } => {
            let a = DiagramType::of(&diagram_argument(source)?)?;
            let b = DiagramType::of(&diagram_argument(target)?)?;
            let bound = extra_bound.unwrap_or_else(|| default_extra_bound(&b));
            let verdict = linear_adjacent(&a, &b, bound)?;
            let mut text =
                serde_json::to_string_pretty(&verdict.to_json_value()).expect("plain data");
            text.push('\n');
            out.write_all(text.as_bytes())?;
        }
        Command::Verify {
            spec,
            bounds,
            format,
        } => {
            let s = parse_spec(spec)?;
            let r = verify_maximality(&s, bounds.resolve(&s), None)?;
            match format {
                ReportFormat::Text => out.write_all(verify_report_text(&r).as_bytes())?,
                ReportFormat::Json => {
                    let mut v = serde_json::to_value(&r).expect("plain data");
                    v["verified"] = r.verified().into();
                    let mut text = serde_json::to_string_pretty(&v).expect("plain data");
                    text.push('\n');
                    out.write_all(text.as_bytes())?;
                }
            }
            if let Some(m) = contradiction_summary(&r) {
                return Err(Failure::Contradiction(m));
            }
            if !r.verified() {
                return Err(Failure::Domain(format!(
                    "maximum mu {} not attained within the bounds",
                    r.mu_d - r.lambda_lin
                )));
            }
        }
        Command::Enumerate {
            max_vertices,
            max_weight,
            format,
            max_candidates,
        } => {
            let all = enumerate_minimal_diagrams(&EnumerationLimits {
                max_vertices: *max_vertices,
                max_weight: *max_weight,
                max_candidates: *max_candidates,
            })?;
            for d in all {
                match format {
                    ListFormat::Key => writeln!(out, "{}", d.canonical_key())?,
                    ListFormat::Json => writeln!(
                        out,
                        "{}",
                        serde_json::to_string(&d.to_json_value()).expect("plain data")
                    )?,
                }
            }
        }
    }
    Ok(())
}

/// Parses `args`, runs, and returns the exit code. Results go to `out`,
/// diagnostics to `err`.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // --help and --version are not errors
            if !e.use_stderr() {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let _ = write!(err, "{}", e.render());
            return 2;
        }
    };
    match run(&cli, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.exit_code()
        }
    }
}
