//! Command-line front end for `osculate-core`.

pub mod input;
pub mod report;
pub mod repro;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use osculate_core::arith::{QuadExt, Rational};
use osculate_core::classify::classify_double_point;
use osculate_core::geometry::{implicitize, project_scheme, LinearCenter, PlaneParameterization, RationalNormalCurve};
use osculate_core::groebner::{eliminate, hilbert_function, saturate, zero_dim_radical, Ideal, TermOrder};
use osculate_core::poly::{parse_poly, PolyRing};
use osculate_core::xk::{classify_all_singularities, is_curvilinear, x2_census};
use osculate_core::Error;

use input::{ideal_to_text, implicit_products, parse_names, parse_point, rational_point, read_ideal};
use report::{CensusReport, HilbertReport, IdealReport, ImplicitReport, ProjectionReport, VerdictReport};

#[derive(Debug, Parser)]
#[command(name = "osculate", version, about = "Double points of plane curves and rational plane curves, exactly")]
pub struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a double point of a plane curve F(x, y, z) = 0.
    Classify {
        #[arg(long)]
        curve: String,
        /// Projective coordinates "a,b,c"; entries may use sqrt(d).
        #[arg(long)]
        point: String,
        /// Show every step of the classification.
        #[arg(long)]
        trace: bool,
        /// Cross-check each graph multiplicity against the local-algebra oracle.
        #[arg(long)]
        oracle: bool,
        /// Step cap; defaults to deg^2 + 2.
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Implicit equation of a parameterization "f0; f1; f2" in s, t.
    Implicitize {
        #[arg(long)]
        param: String,
    },
    /// X_2 census of a parameterization.
    AnalyzeParam {
        #[arg(long)]
        param: String,
        /// Also label every singular point as A_s.
        #[arg(long)]
        classify: bool,
    },
    /// Project a scheme on the rational normal curve from a linear center.
    Project {
        #[arg(long)]
        n: usize,
        /// Center forms separated by ';'.
        #[arg(long)]
        center: String,
        /// Ideal file of the scheme; its ring has n + 1 variables.
        #[arg(long)]
        scheme: PathBuf,
        #[arg(long, default_value = "u,v,w")]
        targets: String,
    },
    /// Reduced Groebner basis.
    Gb {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: OrderArg,
    },
    /// Hilbert function of a homogeneous ideal.
    Hilbert {
        file: PathBuf,
        #[arg(long, default_value_t = 10)]
        up_to: u32,
    },
    /// Eliminate variables.
    Eliminate {
        file: PathBuf,
        /// Variables to eliminate, comma-separated.
        #[arg(long)]
        vars: String,
    },
    /// Saturate by a second ideal, by default the irrelevant one.
    Saturate {
        file: PathBuf,
        #[arg(long)]
        by: Option<PathBuf>,
    },
    /// Radical of a homogeneous ideal with finite projective scheme.
    Radical {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Reproduce a worked example; `--list` shows the manifest.
    Repro {
        /// Case name, or `all`.
        case: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

/// Exit status and the text for standard output.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUSED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Input errors exit with 2; everything else the library refuses exits with 1.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::InvalidArgument(_)
        | Error::RingMismatch
        | Error::ExtensionMismatch(_)
        | Error::NotHomogeneous => EXIT_INPUT,
        _ => EXIT_REFUSED,
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn plane_ring() -> osculate_core::poly::RingRef {
    PolyRing::of(&["x", "y", "z"])
}

fn dispatch(cli: &Cli) -> Result<(i32, String), Error> {
    let as_json = cli.json;
    let mut out = String::new();
    match &cli.command {
        Command::Classify { curve, point, trace, oracle, cap } => {
            let f = parse_poly::<Rational>(&implicit_products(curve), &plane_ring())?;
            let coords = parse_point(point)?;
            let report = match rational_point(&coords) {
                Some(p) => VerdictReport::new(&classify_double_point(&f, &p, *cap)?, *oracle)?,
                None => VerdictReport::new(&classify_double_point::<QuadExt>(&f, &coords, *cap)?, *oracle)?,
            };
            if as_json {
                return Ok((EXIT_OK, json(&report)));
            }
            write_verdict(&mut out, &report, *trace);
        }
        Command::Implicitize { param } => {
            let p = PlaneParameterization::parse(&implicit_products(param))?;
            let imp = implicitize(&p)?;
            let report = ImplicitReport {
                equation: imp.equation.to_string(),
                degree: imp.equation.total_degree().unwrap_or(0),
                map_degree: imp.map_degree,
                possibly_non_minimal: imp.possibly_non_minimal,
            };
            if as_json {
                return Ok((EXIT_OK, json(&report)));
            }
            let _ = writeln!(out, "{}", report.equation);
            let _ = writeln!(out, "degree {}, map degree {}", report.degree, report.map_degree);
            if report.possibly_non_minimal {
                out.push_str("warning: the resultant is not a power of this equation\n");
            }
        }
        Command::AnalyzeParam { param, classify } => {
            let p = PlaneParameterization::parse(&implicit_products(param))?;
            let census = if *classify { classify_all_singularities(&p)? } else { x2_census(&p)? };
            let report = CensusReport {
                parameterization: p.to_string(),
                implicit_equation: implicitize(&p)?.equation.to_string(),
                census,
            };
            if as_json {
                return Ok((EXIT_OK, json(&report)));
            }
            write_census(&mut out, &report);
        }
        Command::Project { n, center, scheme, targets } => {
            let scheme = read_ideal(scheme)?;
            if scheme.ring().nvars() != n + 1 {
                return Err(Error::InvalidArgument(format!(
                    "scheme ring has {} variables, expected {}",
                    scheme.ring().nvars(),
                    n + 1
                )));
            }
            let curve = RationalNormalCurve::with_vars(*n, scheme.ring().vars())?;
            let center = LinearCenter::parse(&implicit_products(center), curve.ring())?;
            let targets = parse_names(targets);
            if targets.len() != center.codim() {
                return Err(Error::InvalidArgument("one target name per center form".into()));
            }
            let names: Vec<&str> = targets.iter().map(String::as_str).collect();
            let image = project_scheme(&scheme, &center, &names)?;
            let h = hilbert_function(&image, 4)?;
            let curvilinear = if h.krull_dim == 1 { Some(is_curvilinear(&image)?) } else { None };
            let report = ProjectionReport {
                ideal: IdealReport::from(&image),
                length: h.stable_value.filter(|_| h.krull_dim <= 1),
                hilbert: h.values.clone(),
                curvilinear,
            };
            if as_json {
                return Ok((EXIT_OK, json(&report)));
            }
            out.push_str(&ideal_to_text(&image));
            if let Some(l) = report.length {
                let _ = writeln!(out, "# length {l}");
            }
            if let Some(c) = curvilinear {
                let _ = writeln!(out, "# curvilinear {c}");
            }
        }
        Command::Gb { file, order } => {
            let ideal = read_ideal(file)?;
            let n = ideal.ring().nvars();
            let ord = match order {
                OrderArg::Grevlex => TermOrder::grevlex(n),
                OrderArg::Lex => TermOrder::lex(n),
            };
            let gb = Ideal::new(ideal.ring(), ideal.groebner(&ord))?;
            return Ok(ideal_output(&gb, as_json));
        }
        Command::Hilbert { file, up_to } => {
            let ideal = read_ideal(file)?;
            let data = hilbert_function(&ideal, *up_to)?;
            let report = HilbertReport { ring: ideal.ring().vars().to_vec(), data };
            if as_json {
                return Ok((EXIT_OK, json(&report)));
            }
            let d = &report.data;
            let from = d.stable_from.map_or(d.values.len(), |f| f as usize);
            for (t, v) in d.values.iter().enumerate().take(from.min(d.values.len())) {
                let _ = writeln!(out, "H({t}) = {v}");
            }
            match (d.stable_value, d.stable_from) {
                (Some(v), Some(f)) => {
                    let _ = writeln!(out, "H(t) = {v} for t >= {f}");
                }
                _ => {
                    let _ = writeln!(out, "# Krull dimension {}", d.krull_dim);
                }
            }
        }
        Command::Eliminate { file, vars } => {
            let ideal = read_ideal(file)?;
            let names = parse_names(vars);
            let drop: Vec<&str> = names.iter().map(String::as_str).collect();
            return Ok(ideal_output(&eliminate(&ideal, &drop)?, as_json));
        }
        Command::Saturate { file, by } => {
            let ideal = read_ideal(file)?;
            let by = match by {
                Some(path) => read_ideal(path)?.to_ring(ideal.ring())?,
                None => Ideal::irrelevant(ideal.ring()),
            };
            return Ok(ideal_output(&saturate(&ideal, &by)?, as_json));
        }
        Command::Radical { file, seed } => {
            let ideal = read_ideal(file)?;
            return Ok(ideal_output(&zero_dim_radical(&ideal, *seed)?, as_json));
        }
        Command::Repro { case, list } => return run_repro(case.as_deref(), *list, as_json),
    }
    Ok((EXIT_OK, out))
}

fn ideal_output(ideal: &Ideal, as_json: bool) -> (i32, String) {
    let text = if as_json { json(&IdealReport::from(ideal)) } else { ideal_to_text(ideal) };
    (EXIT_OK, text)
}

fn write_verdict(out: &mut String, r: &VerdictReport, trace: bool) {
    match (r.kind.as_str(), r.s) {
        ("double-point", Some(s)) => {
            let _ = writeln!(out, "A_{s}");
        }
        ("smooth", _) => out.push_str("smooth point\n"),
        _ => {
            let _ = writeln!(out, "point of multiplicity {}", r.multiplicity.unwrap_or(0));
        }
    }
    if let Some(t) = &r.tangent {
        let _ = writeln!(out, "tangent: {t}");
    }
    for w in &r.witnesses {
        let terms: Vec<String> = w
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.to_string() != "0")
            .map(|(k, c)| match k {
                0 => format!("({c})*x"),
                _ => format!("({c})*x^{}", k + 1),
            })
            .collect();
        let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        let _ = write!(out, "witness: y = {rhs}");
        if let Some(o) = &w.original {
            let _ = write!(out, "   [{o} = 0]");
        }
        out.push('\n');
    }
    if trace {
        for st in &r.trace {
            let [a, b, c] = &st.quad;
            let _ = write!(out, "step {}: {} quad ({a}, {b}, {c}) delta {}", st.r, st.branch, st.delta);
            if let Some(l) = &st.lambda {
                let _ = write!(out, " lambda {l}");
            }
            if let Some(i) = st.i {
                let _ = write!(out, " i {i}");
            }
            out.push('\n');
        }
    }
    if let Some(o) = &r.oracle {
        let _ =
            writeln!(out, "oracle: {} graphs, {}", o.checks.len(), if o.agree { "all agree" } else { "DISAGREEMENT" });
    }
}

fn write_census(out: &mut String, r: &CensusReport) {
    let c = &r.census;
    let _ = writeln!(out, "curve: {}", r.implicit_equation);
    let _ = writeln!(out, "degree {}, length X_2 = {}, {} support points", c.n, c.x2_length, c.support_size);
    for p in &c.points {
        let at = match (&p.coords, &p.cluster_eliminant) {
            (Some(q), _) => format!("[{}]", q.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")),
            (None, Some(e)) => format!("{} points on {e} = 0", p.cluster_size),
            _ => "?".into(),
        };
        let _ = write!(out, "{at}: delta {}{}", p.delta, if p.cusp { ", cusp" } else { "" });
        if let Some(img) = &p.image {
            let _ = write!(out, ", image [{}]", img.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
        }
        if let Some(s) = p.s {
            let _ = write!(out, ", A_{s}");
        }
        if let Some(why) = &p.unclassified {
            let _ = write!(out, ", unclassified: {why}");
        }
        out.push('\n');
    }
    if !c.length_law {
        out.push_str("warning: point lengths do not add up to C(n-1, 2)\n");
    }
}

fn run_repro(case: Option<&str>, list: bool, as_json: bool) -> Result<(i32, String), Error> {
    let manifest = repro::repro_manifest();
    if list || case.is_none() {
        let mut out = String::new();
        if as_json {
            let names: Vec<(&str, &str)> = manifest.iter().map(|c| (c.name.as_str(), c.anchor.as_str())).collect();
            return Ok((EXIT_OK, json(&names)));
        }
        for c in &manifest {
            let _ = writeln!(out, "{:<20} {}", c.name, c.anchor);
        }
        return Ok((EXIT_OK, out));
    }
    let name = case.unwrap_or_default();
    let selected: Vec<&repro::ReproCase> = if name == "all" {
        manifest.iter().collect()
    } else {
        // "normal-forms" runs the whole sweep.
        let picked: Vec<_> =
            manifest.iter().filter(|c| c.name == name || c.name.starts_with(&format!("{name}-"))).collect();
        if picked.is_empty() {
            return Err(Error::InvalidArgument(format!("unknown repro case {name:?}; try --list")));
        }
        picked
    };
    let reports = selected.into_iter().map(repro::run_case).collect::<Result<Vec<_>, _>>()?;
    let pass = reports.iter().all(|r| r.pass);
    let code = if pass { EXIT_OK } else { EXIT_REFUSED };
    if as_json {
        return Ok((code, if reports.len() == 1 { json(&reports[0]) } else { json(&reports) }));
    }
    let mut out = String::new();
    for r in &reports {
        let _ = writeln!(out, "== {} ({})", r.case, r.anchor);
        for a in &r.artifacts {
            if a.ok {
                let _ = writeln!(out, "  ok   {}: {}", a.label, a.actual);
            } else {
                let _ = writeln!(out, "  FAIL {}: got {}, expected {}", a.label, a.actual, a.expected);
            }
        }
    }
    let _ = writeln!(out, "{} of {} cases reproduced", reports.iter().filter(|r| r.pass).count(), reports.len());
    Ok((code, out))
}
