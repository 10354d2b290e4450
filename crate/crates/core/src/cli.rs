//! Command line front end. [`run`] takes the argument vector and returns
//! what would be printed plus the exit code, so the binary is a thin shim.
//!
//! Exit codes: 0 success or proper, 1 improper or a failed hypothesis,
//! 2 malformed input. `PPSN_OUTPUT=json` makes JSON the default.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::construct::{
    build_curve_chain, cb_check, cb_extend_curve, cb_reduce, interpolate, superpose_interpolate,
    superpose_nodes, CbMode, CbPartition, InterpolationProblem, SuperpositionStep,
};
use crate::dimension::{backward_diff_e, dim_along, hilbert_table, DegreeProfile};
use crate::error::{Error, Result};
use crate::macaulay::{
    hbase_decompose, infinity_check, parse_polynomial_lines, reduce_modulo, verify_hbase, Manifold,
};
use crate::mpoly::{max_variable_index, parse_scalar, Point, Polynomial, Scalar};
use crate::nodes::{extract_nested_ppsn, intersect_factorable, verify_ppsn, FactorableSystem, NodeSet};

#[derive(Parser, Debug)]
#[command(name = "ppsn", version, about = "Properly posed node sets along algebraic manifolds")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Emit a JSON run report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Default output mode.
    #[arg(long, env = "PPSN_OUTPUT", value_enum, default_value_t = OutputMode::Text, global = true, hide_env_values = true)]
    pub output: OutputMode,
    /// Ambient dimension; inferred from the inputs when omitted.
    #[arg(long, global = true)]
    pub n: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension table h_j, H_j, d_j with the backward-difference check.
    Dim {
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<u32>,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long)]
        mmax: Option<u32>,
    },
    /// Certify a node set at degree m along a manifold.
    Verify {
        #[arg(long)]
        manifold: Option<PathBuf>,
        #[arg(long)]
        nodes: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long)]
        witnesses: Option<PathBuf>,
    },
    /// Interpolate values at proper nodes.
    Interpolate {
        #[arg(long)]
        manifold: Option<PathBuf>,
        #[arg(long)]
        nodes: PathBuf,
        #[arg(long)]
        values: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Union of sub nodes on s(f_1..f_s) and super nodes on s(f_1..f_{s-1}).
    Superpose {
        #[arg(long)]
        manifold: PathBuf,
        #[arg(long = "sub")]
        sub_nodes: PathBuf,
        #[arg(long = "super")]
        super_nodes: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        /// Values on the union, sub nodes first; triggers two-stage interpolation.
        #[arg(long)]
        values: Option<PathBuf>,
    },
    /// Nested PPSN of degree m inside a factorable complete intersection.
    Extract {
        #[arg(long)]
        system: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Remove a complementary-degree PPSN from a complete intersection.
    CbReduce {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        remove: PathBuf,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Check the Cayley-Bacharach conclusion for one polynomial.
    CbCheck {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        remove: PathBuf,
        /// Polynomial expression, or @FILE.
        #[arg(long)]
        poly: String,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = ModeArg::VanishOnLarge)]
        mode: ModeArg,
    },
    /// Extend along the curve that drops hypersurface t.
    CbExtend {
        #[arg(long)]
        system: PathBuf,
        /// Nodes on the curve, disjoint from the intersection.
        #[arg(long)]
        curve_nodes: PathBuf,
        /// The subset removed from the intersection (empty for negative m).
        #[arg(long)]
        remove: Option<PathBuf>,
        /// 1-based index of the dropped hypersurface.
        #[arg(long)]
        t: usize,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// PPSNs of degrees 0..=mmax along the curve dropping hypersurface t.
    Chain {
        #[arg(long)]
        system: PathBuf,
        /// 1-based index of the dropped hypersurface.
        #[arg(long)]
        omit: usize,
        #[arg(long)]
        mmax: u32,
        /// Starting point on the curve, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        start: String,
    },
    /// Canonical remainder and cofactors modulo a manifold.
    Reduce {
        #[arg(long)]
        manifold: PathBuf,
        /// Polynomial expression, or @FILE.
        #[arg(long)]
        poly: String,
    },
    /// Randomized H-base check, or one decomposition with --poly.
    Hbase {
        #[arg(long)]
        manifold: PathBuf,
        #[arg(long)]
        witnesses: Option<PathBuf>,
        #[arg(long, default_value_t = 4)]
        mmax: u32,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        /// Polynomial to decompose instead of sampling, or @FILE.
        #[arg(long)]
        poly: Option<String>,
        /// Degree bound for --poly; defaults to its degree.
        #[arg(long)]
        m: Option<i64>,
        /// Node set the polynomial must vanish on.
        #[arg(long)]
        nodes: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum ModeArg {
    VanishOnLarge,
    PpsnRemoval,
}

impl From<ModeArg> for CbMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::VanishOnLarge => CbMode::VanishOnLarge,
            ModeArg::PpsnRemoval => CbMode::PpsnRemoval,
        }
    }
}

#[derive(Serialize, Debug)]
pub struct RunReport {
    pub command: Vec<String>,
    pub input_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub exit_code: i32,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    fn read(&mut self, path: &Path) -> Result<String> {
        let text = std::fs::read_to_string(path)?;
        self.hasher.update(path.to_string_lossy().as_bytes());
        self.hasher.update([0]);
        self.hasher.update(text.as_bytes());
        self.hasher.update([0]);
        Ok(text)
    }

    fn poly_text(&mut self, arg: &str) -> Result<String> {
        match arg.strip_prefix('@') {
            Some(path) => self.read(Path::new(path)),
            None => {
                self.hasher.update(arg.as_bytes());
                self.hasher.update([0]);
                Ok(arg.to_string())
            }
        }
    }
}

/// Text and JSON renderings of one command result.
struct Rendered {
    text: String,
    json: Value,
    code: i32,
}

fn infer_n(explicit: Option<usize>, texts: &[&str], nodes: Option<usize>) -> usize {
    explicit
        .or(nodes)
        .unwrap_or_else(|| texts.iter().map(|t| max_variable_index(t)).max().unwrap_or(0).max(1))
}

fn read_values(inputs: &mut Inputs, path: &Path) -> Result<Vec<Scalar>> {
    let text = inputs.read(path)?;
    let mut out = Vec::new();
    for line in text.lines() {
        let body = line.split('#').next().unwrap_or("").trim();
        if !body.is_empty() {
            out.push(parse_scalar(body)?);
        }
    }
    Ok(out)
}

fn points_json(nodes: &NodeSet) -> Value {
    Value::from(nodes.points().iter().map(|q| q.to_string()).collect::<Vec<_>>())
}

fn points_text(nodes: &NodeSet, out: &mut String) {
    for q in nodes.points() {
        let _ = writeln!(out, "  {q}");
    }
}

fn cert_text(cert: &crate::nodes::PpsnCertificate, out: &mut String) {
    let verdict = if cert.is_proper() { "proper" } else { "improper" };
    let _ = writeln!(out, "verdict: {verdict}");
    let _ = writeln!(out, "degree: {}", cert.degree);
    let _ = writeln!(out, "expected count: {}", cert.expected_count);
    match &cert.witness {
        crate::nodes::Witness::Pivots { columns } => {
            let _ = writeln!(out, "pivot columns: {columns:?}");
        }
        crate::nodes::Witness::Kernel { functional } => {
            let parts: Vec<String> = functional.iter().map(|c| c.to_string()).collect();
            let _ = writeln!(out, "kernel functional: [{}]", parts.join(", "));
        }
    }
}

fn certified(label: &str, c: &crate::construct::Certified) -> Rendered {
    let mut text = format!("{label} ({} points):\n", c.nodes.len());
    points_text(&c.nodes, &mut text);
    cert_text(&c.certificate, &mut text);
    Rendered {
        text,
        json: json!({ "nodes": points_json(&c.nodes), "certificate": c.certificate }),
        code: 0,
    }
}

fn execute(cli: &Cli, inputs: &mut Inputs) -> Result<Rendered> {
    let g = &cli.global;
    match &cli.command {
        Command::Dim { degrees, m, mmax } => {
            let n = g.n.ok_or_else(|| Error::InvalidProfile("--n is required".into()))?;
            let profile = DegreeProfile::new(n as u32, degrees.clone())?;
            let top = mmax.map_or((*m).max(0), i64::from);
            let table = hilbert_table(&profile, top as u32);
            let mut text = String::from("j\th_j\tH_j\td_j\te_j\n");
            let mut rows = Vec::new();
            let mut agree = true;
            for j in 0..=top {
                let e = backward_diff_e(j, n as u32, degrees);
                let (h, big_h, d) = (table.h(j), table.H(j), table.d[j as usize]);
                agree &= e == big_h as i64;
                let _ = writeln!(text, "{j}\t{h}\t{big_h}\t{d}\t{e}");
                rows.push(json!({ "j": j, "h": h, "H": big_h, "d": d, "e": e }));
            }
            let value = dim_along(*m, &profile)?;
            let _ = writeln!(text, "H_{m} = {value}");
            let _ = writeln!(text, "cross-check: {}", if agree { "ok" } else { "MISMATCH" });
            Ok(Rendered {
                text,
                json: json!({
                    "n": n,
                    "degrees": degrees,
                    "m": m,
                    "excess": profile.excess(),
                    "rows": rows,
                    "dim": value,
                    "cross_check": agree,
                }),
                code: if agree { 0 } else { 1 },
            })
        }
        Command::Verify {
            manifold,
            nodes,
            m,
            witnesses,
        } => {
            let node_text = inputs.read(nodes)?;
            let mtext = match manifold {
                Some(p) => inputs.read(p)?,
                None => String::new(),
            };
            let pts = NodeSet::parse(&node_text, g.n)?;
            let n = infer_n(g.n, &[&mtext], (!pts.is_empty()).then(|| pts.n()));
            let pts = NodeSet::parse(&node_text, Some(n))?;
            let mut mf = Manifold::parse(&mtext, n)?;
            if let Some(w) = witnesses {
                let ws = parse_polynomial_lines(&inputs.read(w)?, n)?;
                mf = mf.with_witnesses(ws)?;
            }
            let cert = verify_ppsn(&pts, &mf, *m)?;
            let mut text = String::new();
            cert_text(&cert, &mut text);
            let mut json = json!({ "certificate": cert });
            if witnesses.is_some() {
                let ok = infinity_check(&mf);
                let _ = writeln!(text, "sufficient at infinity: {ok}");
                json["sufficient_at_infinity"] = Value::from(ok);
            }
            Ok(Rendered {
                text,
                json,
                code: if cert.is_proper() { 0 } else { 1 },
            })
        }
        Command::Interpolate {
            manifold,
            nodes,
            values,
            m,
        } => {
            let node_text = inputs.read(nodes)?;
            let mtext = match manifold {
                Some(p) => inputs.read(p)?,
                None => String::new(),
            };
            let pts = NodeSet::parse(&node_text, g.n)?;
            let n = infer_n(g.n, &[&mtext], (!pts.is_empty()).then(|| pts.n()));
            let problem = InterpolationProblem {
                manifold: Manifold::parse(&mtext, n)?,
                degree: *m,
                nodes: NodeSet::parse(&node_text, Some(n))?,
                values: read_values(inputs, values)?,
            };
            let f = interpolate(&problem)?;
            Ok(Rendered {
                text: format!("{f}\n"),
                json: json!({ "polynomial": f.to_string() }),
                code: 0,
            })
        }
        Command::Superpose {
            manifold,
            sub_nodes,
            super_nodes,
            m,
            values,
        } => {
            let mtext = inputs.read(manifold)?;
            let sub_text = inputs.read(sub_nodes)?;
            let super_text = inputs.read(super_nodes)?;
            let sub = NodeSet::parse(&sub_text, g.n)?;
            let n = infer_n(g.n, &[&mtext], (!sub.is_empty()).then(|| sub.n()));
            let step = SuperpositionStep {
                manifold: Manifold::parse(&mtext, n)?,
                degree: *m,
                sub_nodes: NodeSet::parse(&sub_text, Some(n))?,
                super_nodes: NodeSet::parse(&super_text, Some(n))?,
            };
            let out = superpose_nodes(&step)?;
            let mut r = certified("union", &out);
            if let Some(v) = values {
                let f = superpose_interpolate(&step, &read_values(inputs, v)?)?;
                let _ = writeln!(r.text, "interpolant: {f}");
                r.json["polynomial"] = Value::from(f.to_string());
            }
            Ok(r)
        }
        Command::Extract { system, m } => {
            let text = inputs.read(system)?;
            let n = infer_n(g.n, &[&text], None);
            let sys = FactorableSystem::parse(&text, n)?;
            let mf = sys.manifold()?;
            let all = intersect_factorable(&sys)?.nodes;
            let nodes = extract_nested_ppsn(&all, &mf, *m)?;
            let certificate = verify_ppsn(&nodes, &mf, *m)?;
            Ok(certified(
                "extracted",
                &crate::construct::Certified { nodes, certificate },
            ))
        }
        Command::CbReduce { system, remove, m } => {
            let text = inputs.read(system)?;
            let n = infer_n(g.n, &[&text], None);
            let sys = FactorableSystem::parse(&text, n)?;
            let all = intersect_factorable(&sys)?.nodes;
            let removed = NodeSet::parse(&inputs.read(remove)?, Some(n))?;
            let out = cb_reduce(&CbPartition::new(all, removed)?, &sys.manifold()?, *m)?;
            Ok(certified("remaining", &out))
        }
        Command::CbCheck {
            system,
            remove,
            poly,
            m,
            mode,
        } => {
            let text = inputs.read(system)?;
            let ptext = inputs.poly_text(poly)?;
            let n = infer_n(g.n, &[&text, &ptext], None);
            let sys = FactorableSystem::parse(&text, n)?;
            let all = intersect_factorable(&sys)?.nodes;
            let removed = NodeSet::parse(&inputs.read(remove)?, Some(n))?;
            let f = Polynomial::parse(&ptext, n)?;
            let part = CbPartition::new(all, removed)?;
            let report = cb_check(&f, &part, &sys.manifold()?, *m, (*mode).into())?;
            let text = format!(
                "vanishes on removed: {}\nremoved on hypersurface of degree {}: {}\nconsistent: {}\n",
                report.vanishes_on_removed,
                sys.manifold()?.profile().excess() - m - 1,
                report
                    .removed_on_hypersurface
                    .map_or("not examined".to_string(), |b| b.to_string()),
                report.consistent
            );
            Ok(Rendered {
                text,
                json: json!({ "report": report }),
                code: if report.consistent { 0 } else { 1 },
            })
        }
        Command::CbExtend {
            system,
            curve_nodes,
            remove,
            t,
            m,
        } => {
            let text = inputs.read(system)?;
            let n = infer_n(g.n, &[&text], None);
            let sys = FactorableSystem::parse(&text, n)?;
            let all = intersect_factorable(&sys)?.nodes;
            let a_t = NodeSet::parse(&inputs.read(curve_nodes)?, Some(n))?;
            let b = match remove {
                Some(p) => NodeSet::parse(&inputs.read(p)?, Some(n))?,
                None => NodeSet::empty(n),
            };
            let t = t
                .checked_sub(1)
                .ok_or_else(|| Error::InvalidProfile("hypersurface indices start at 1".into()))?;
            let out = cb_extend_curve(&sys.manifold()?, &all, &a_t, &b, t, *m)?;
            Ok(certified("extended", &out))
        }
        Command::Chain {
            system,
            omit,
            mmax,
            start,
        } => {
            let text = inputs.read(system)?;
            let x0 = Point::parse(start)?;
            let n = infer_n(g.n, &[&text], Some(x0.dim()));
            let sys = FactorableSystem::parse(&text, n)?;
            let t = omit
                .checked_sub(1)
                .ok_or_else(|| Error::InvalidProfile("hypersurface indices start at 1".into()))?;
            let chain = build_curve_chain(&sys, t, *mmax, &x0)?;
            let mut text = String::new();
            let mut levels = Vec::new();
            for level in &chain {
                let _ = writeln!(text, "degree {} ({} points):", level.degree, level.nodes.len());
                points_text(&level.nodes, &mut text);
                levels.push(json!({
                    "degree": level.degree,
                    "nodes": points_json(&level.nodes),
                    "certificate": level.certificate,
                }));
            }
            Ok(Rendered {
                text,
                json: json!({ "levels": levels }),
                code: 0,
            })
        }
        Command::Reduce { manifold, poly } => {
            let mtext = inputs.read(manifold)?;
            let ptext = inputs.poly_text(poly)?;
            let n = infer_n(g.n, &[&mtext, &ptext], None);
            let mf = Manifold::parse(&mtext, n)?;
            let f = Polynomial::parse(&ptext, n)?;
            let r = reduce_modulo(&f, &mf)?;
            let mut text = format!("remainder: {}\n", r.remainder);
            for (j, c) in r.cofactors.iter().enumerate() {
                let _ = writeln!(text, "c{}: {c}", j + 1);
            }
            Ok(Rendered {
                text,
                json: json!({
                    "remainder": r.remainder.to_string(),
                    "cofactors": r.cofactors.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                }),
                code: 0,
            })
        }
        Command::Hbase {
            manifold,
            witnesses,
            mmax,
            trials,
            poly,
            m,
            nodes,
        } => {
            let mtext = inputs.read(manifold)?;
            let ptext = match poly {
                Some(p) => Some(inputs.poly_text(p)?),
                None => None,
            };
            let n = infer_n(g.n, &[&mtext, ptext.as_deref().unwrap_or("")], None);
            let mut mf = Manifold::parse(&mtext, n)?;
            if let Some(w) = witnesses {
                mf = mf.with_witnesses(parse_polynomial_lines(&inputs.read(w)?, n)?)?;
            }
            if let Some(ptext) = ptext {
                let gp = Polynomial::parse(&ptext, n)?;
                let bound = m.unwrap_or(gp.degree_or_neg());
                let pts = match nodes {
                    Some(p) => Some(NodeSet::parse(&inputs.read(p)?, Some(n))?),
                    None => None,
                };
                let d = hbase_decompose(&gp, &mf, bound, pts.as_ref())?;
                let mut text = String::new();
                for (i, a) in d.cofactors.iter().enumerate() {
                    let _ = writeln!(text, "alpha{}: {a}", i + 1);
                }
                return Ok(Rendered {
                    text,
                    json: json!({
                        "degree": bound,
                        "cofactors": d.cofactors.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
                    }),
                    code: 0,
                });
            }
            let report = verify_hbase(&mf, *mmax, *trials, g.seed)?;
            let mut text = String::new();
            for d in &report.per_degree {
                let _ = writeln!(text, "degree {}: {}/{} passed", d.degree, d.passed, d.trials);
            }
            for c in &report.counterexamples {
                let _ = writeln!(text, "counterexample: {c}");
            }
            let code = if report.all_passed() { 0 } else { 1 };
            Ok(Rendered {
                text,
                json: json!({ "report": report }),
                code,
            })
        }
    }
}

fn uses_seed(cmd: &Command) -> bool {
    matches!(cmd, Command::Hbase { poly: None, .. })
}

/// Runs one command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code,
                }
            };
        }
    };
    let json_mode = cli.global.json || cli.global.output == OutputMode::Json;
    let started = Instant::now();
    let mut inputs = Inputs {
        hasher: Sha256::new(),
    };
    let result = execute(&cli, &mut inputs);
    let elapsed = started.elapsed().as_secs_f64() * 1e3;
    let digest = hex::encode(inputs.hasher.finalize());
    let (result_json, text, code, failed) = match result {
        Ok(r) => (r.json, r.text, r.code, false),
        Err(e) => {
            let code = e.exit_code();
            let mut payload = json!({ "error": e.to_string() });
            if let Error::Improper(cert) = &e {
                payload["certificate"] = serde_json::to_value(cert).unwrap_or(Value::Null);
            }
            (payload, format!("error: {e}\n"), code, true)
        }
    };
    if json_mode {
        let report = RunReport {
            command: args
                .iter()
                .skip(1)
                .map(|a| a.to_string_lossy().into_owned())
                .collect(),
            input_digest: digest,
            seed: uses_seed(&cli.command).then_some(cli.global.seed),
            exit_code: code,
            result: result_json,
            timing_ms: cli.global.timing.then_some(elapsed),
        };
        let mut stdout = serde_json::to_string_pretty(&report).expect("report serializes");
        stdout.push('\n');
        return Outcome {
            stdout,
            stderr: String::new(),
            code,
        };
    }
    let mut text = text;
    if cli.global.timing {
        let _ = writeln!(text, "time: {elapsed:.3} ms");
    }
    if failed {
        Outcome {
            stdout: String::new(),
            stderr: text,
            code,
        }
    } else {
        Outcome {
            stdout: text,
            stderr: String::new(),
            code,
        }
    }
}
