//! Command-line frontend. Every report embeds a `RunManifest` describing
//! the subcommand, its arguments, and the conventions in force, so that a
//! run can be reproduced byte-for-byte.
//!
//! Exit status: 0 on success, 1 when an `--expect` assertion on an
//! obstruction verdict fails, 2 on input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::dinvariant::{self, ObstructionReport, SurgeryDescriptor, Verdict};
use crate::error::Error;
use crate::laurent::{rational_to_json, LaurentPolynomial, Rational};
use crate::semigroup::{v_sequence, TorusKnotParams};
use crate::skein::{
    self, bracket_of_closure_with, solid_torus_to_skein, BraidWord, Parity, SkeinElement,
    SmoothingConvention,
};
use crate::surgery::{
    gluck_twist, handleslide, homology_action_on_generator, surgery_homology, DiagramClass,
    HomologyAction, SlideSign,
};

#[derive(Parser, Debug)]
#[command(name = "gluckkit", version, about = "Gluck-twist isotopy obstructions for knots in S^1 x S^2", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format; GLUCKKIT_FORMAT overrides the default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the report to a file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExpectedVerdict {
    Obstructed,
    #[value(name = "not-obstructed")]
    NotObstructed,
    Inconclusive,
}

impl ExpectedVerdict {
    fn matches(&self, v: Verdict) -> bool {
        matches!(
            (self, v),
            (ExpectedVerdict::Obstructed, Verdict::Obstructed)
                | (ExpectedVerdict::NotObstructed, Verdict::NotObstructed)
                | (ExpectedVerdict::Inconclusive, Verdict::Inconclusive)
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BasisChoice {
    Z,
    E,
    Eprime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FramingOp {
    Gluck,
    #[value(name = "slide+")]
    SlidePlus,
    #[value(name = "slide-")]
    SlideMinus,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// V-sequence of the torus knot T_{p,q}.
    Vseq {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        max: u64,
    },
    /// Correction terms of n-surgery on T_{p,q}.
    Dinv {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        /// Single Spin^c label to evaluate.
        #[arg(long, conflicts_with = "all")]
        spinc: Option<u64>,
        /// Evaluate the full d-table (the default).
        #[arg(long)]
        all: bool,
    },
    /// Even-winding Gluck obstruction for the knot K_w.
    GluckObstruct {
        #[arg(long, allow_hyphen_values = true)]
        w: i64,
        /// Fail (exit 1) if the verdict differs.
        #[arg(long, value_enum)]
        expect: Option<ExpectedVerdict>,
    },
    /// Apply Gluck twists and handleslides to a diagram class.
    Framing {
        #[arg(long, allow_hyphen_values = true)]
        w: i64,
        #[arg(long, allow_hyphen_values = true)]
        f: i64,
        /// Operations applied left to right.
        #[arg(long = "op", value_enum)]
        ops: Vec<FramingOp>,
    },
    /// First homology of M(D, f), optionally with the induced action.
    Homology {
        #[arg(long, allow_hyphen_values = true)]
        w: i64,
        #[arg(long, allow_hyphen_values = true)]
        f: i64,
        /// Algebraic handleslide count k; reports the generator multiplier.
        #[arg(long, allow_hyphen_values = true)]
        action: Option<i64>,
    },
    /// Kauffman bracket of a braid closure.
    Bracket {
        #[arg(long)]
        strands: u64,
        /// Whitespace-separated letters, e.g. "1 1 -2".
        #[arg(long)]
        braid: String,
        #[arg(long, value_enum, default_value = "z")]
        basis: BasisChoice,
        /// Apply the Gluck-twist action (forces the eprime basis).
        #[arg(long)]
        gluck: bool,
        /// Apply f framing twists.
        #[arg(long, allow_hyphen_values = true)]
        twists: Option<i64>,
        /// Check Gluck invariance at strand-count parity.
        #[arg(long)]
        check_invariance: bool,
        /// Swap the A and A^{-1} smoothings.
        #[arg(long)]
        mirror: bool,
    },
}

struct Report {
    document: Value,
    tsv: String,
    expect_failed: bool,
}

fn manifest(
    subcommand: &str,
    arguments: BTreeMap<String, String>,
    convention_flags: BTreeMap<String, String>,
) -> Value {
    json!({
        "subcommand": subcommand,
        "arguments": arguments,
        "convention_flags": convention_flags,
        "tool_version": env!("CARGO_PKG_VERSION"),
    })
}

fn rational_tsv(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn obstruction_json(r: &ObstructionReport) -> Value {
    json!({
        "w": r.w,
        "n": r.n,
        "multiplier": r.multiplier,
        "spin_distinguished": r.spin_distinguished,
        "verdict": r.verdict.as_str(),
        "d_table": r.d_table.iter().map(rational_to_json).collect::<Vec<_>>(),
        "violations": r.violations.iter().map(|v| json!({
            "i": v.i,
            "d_source": rational_to_json(&v.d_source),
            "d_image": rational_to_json(&v.d_image),
        })).collect::<Vec<_>>(),
    })
}

fn skein_coefficients_json(terms: Vec<(usize, &LaurentPolynomial)>) -> Value {
    Value::Array(
        terms
            .into_iter()
            .map(|(i, c)| Value::Array(vec![Value::from(i), c.to_json()]))
            .collect(),
    )
}

fn run(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Command::Vseq { p, q, max } => {
            let params = TorusKnotParams::new(*p, *q)?;
            let v = v_sequence(params, *max);
            let values: Vec<u64> = (0..=*max).map(|i| v.get(i)).collect();
            let args = BTreeMap::from([
                ("p".into(), p.to_string()),
                ("q".into(), q.to_string()),
                ("max".into(), max.to_string()),
            ]);
            let mut tsv = String::new();
            for (i, value) in values.iter().enumerate() {
                writeln!(tsv, "{i}\t{value}").unwrap();
            }
            Ok(Report {
                document: json!({
                    "manifest": manifest("vseq", args, BTreeMap::new()),
                    "result": values,
                }),
                tsv,
                expect_failed: false,
            })
        }
        Command::Dinv { p, q, n, spinc, all: _ } => {
            let params = TorusKnotParams::new(*p, *q)?;
            let s = SurgeryDescriptor::torus_knot(params, *n)?;
            let labels: Vec<u64> = match spinc {
                Some(i) => vec![*i],
                None => (0..s.n()).collect(),
            };
            let table: Vec<(u64, Rational)> = labels
                .iter()
                .map(|&i| dinvariant::d_surgery(&s, i).map(|d| (i, d)))
                .collect::<Result<_, _>>()?;
            let mut args = BTreeMap::from([
                ("p".into(), p.to_string()),
                ("q".into(), q.to_string()),
                ("n".into(), n.to_string()),
            ]);
            if let Some(i) = spinc {
                args.insert("spinc".into(), i.to_string());
            }
            let mut tsv = String::new();
            for (i, d) in &table {
                writeln!(tsv, "{i}\t{}", rational_tsv(d)).unwrap();
            }
            Ok(Report {
                document: json!({
                    "manifest": manifest("dinv", args, BTreeMap::new()),
                    "result": {
                        "knot": s.label(),
                        "n": s.n(),
                        "d": table.iter().map(|(i, d)| json!({
                            "i": i,
                            "d": rational_to_json(d),
                        })).collect::<Vec<_>>(),
                    },
                }),
                tsv,
                expect_failed: false,
            })
        }
        Command::GluckObstruct { w, expect } => {
            let report = dinvariant::obstruct_even_gluck(*w)?;
            let mut args = BTreeMap::from([("w".into(), w.to_string())]);
            if let Some(e) = expect {
                args.insert(
                    "expect".into(),
                    e.to_possible_value().unwrap().get_name().to_string(),
                );
            }
            let expect_failed = expect.is_some_and(|e| !e.matches(report.verdict));
            let mut tsv = String::new();
            writeln!(tsv, "w\t{}", report.w).unwrap();
            writeln!(tsv, "n\t{}", report.n).unwrap();
            writeln!(tsv, "multiplier\t{}", report.multiplier).unwrap();
            writeln!(tsv, "spin_distinguished\t{}", report.spin_distinguished).unwrap();
            writeln!(tsv, "verdict\t{}", report.verdict.as_str()).unwrap();
            for (i, d) in report.d_table.iter().enumerate() {
                writeln!(tsv, "d\t{i}\t{}", rational_tsv(d)).unwrap();
            }
            for v in &report.violations {
                writeln!(
                    tsv,
                    "violation\t{}\t{}\t{}",
                    v.i,
                    rational_tsv(&v.d_source),
                    rational_tsv(&v.d_image)
                )
                .unwrap();
            }
            Ok(Report {
                document: json!({
                    "manifest": manifest("gluck-obstruct", args, BTreeMap::new()),
                    "result": obstruction_json(&report),
                }),
                tsv,
                expect_failed,
            })
        }
        Command::Framing { w, f, ops } => {
            let mut diagram = DiagramClass::new(*w, *f);
            let mut action = HomologyAction::identity();
            for op in ops {
                let (next, step) = match op {
                    FramingOp::Gluck => gluck_twist(diagram),
                    FramingOp::SlidePlus => handleslide(diagram, SlideSign::Positive),
                    FramingOp::SlideMinus => handleslide(diagram, SlideSign::Negative),
                };
                diagram = next;
                action = step.compose(&action);
            }
            let op_names: Vec<String> = ops
                .iter()
                .map(|o| o.to_possible_value().unwrap().get_name().to_string())
                .collect();
            let args = BTreeMap::from([
                ("w".into(), w.to_string()),
                ("f".into(), f.to_string()),
                ("op".into(), op_names.join(",")),
            ]);
            let e = action.entries();
            let mut tsv = String::new();
            writeln!(tsv, "w\t{}", diagram.w).unwrap();
            writeln!(tsv, "f\t{}", diagram.f).unwrap();
            writeln!(tsv, "action\t{}\t{}\t{}\t{}", e[0][0], e[0][1], e[1][0], e[1][1]).unwrap();
            Ok(Report {
                document: json!({
                    "manifest": manifest("framing", args, BTreeMap::new()),
                    "result": {
                        "w": diagram.w,
                        "f": diagram.f,
                        "action": [[e[0][0], e[0][1]], [e[1][0], e[1][1]]],
                    },
                }),
                tsv,
                expect_failed: false,
            })
        }
        Command::Homology { w, f, action } => {
            let h = surgery_homology(DiagramClass::new(*w, *f));
            let multiplier = action.map(|k| homology_action_on_generator(DiagramClass::new(*w, *f), k));
            let mut args = BTreeMap::from([
                ("w".into(), w.to_string()),
                ("f".into(), f.to_string()),
            ]);
            if let Some(k) = action {
                args.insert("action".into(), k.to_string());
            }
            let mut result = serde_json::Map::new();
            result.insert("free_rank".into(), json!(h.free_rank));
            result.insert("factors".into(), json!(h.invariant_factors));
            let mut tsv = String::new();
            writeln!(tsv, "free_rank\t{}", h.free_rank).unwrap();
            let factors: Vec<String> = h.invariant_factors.iter().map(u64::to_string).collect();
            writeln!(tsv, "factors\t{}", factors.join("\t")).unwrap();
            if let Some(m) = &multiplier {
                result.insert("generator_multiplier".into(), json!(m));
                match m {
                    Some(c) => writeln!(tsv, "generator_multiplier\t{c}").unwrap(),
                    None => writeln!(tsv, "generator_multiplier\tnone").unwrap(),
                }
            }
            Ok(Report {
                document: json!({
                    "manifest": manifest("homology", args, BTreeMap::new()),
                    "result": Value::Object(result),
                }),
                tsv,
                expect_failed: false,
            })
        }
        Command::Bracket { strands, braid, basis, gluck, twists, check_invariance, mirror } => {
            let word = BraidWord::parse(*strands, braid)?;
            let convention =
                if *mirror { SmoothingConvention::Mirrored } else { SmoothingConvention::Standard };
            let bracket = bracket_of_closure_with(&word, convention)?;

            // the Gluck action and normal form live in the e' basis
            let needs_eprime = *gluck || *check_invariance || *basis == BasisChoice::Eprime;
            let mut args = BTreeMap::from([
                ("strands".into(), strands.to_string()),
                ("braid".into(), braid.clone()),
                ("basis".into(), basis.to_possible_value().unwrap().get_name().to_string()),
            ]);
            if *gluck {
                args.insert("gluck".into(), "true".into());
            }
            if let Some(t) = twists {
                args.insert("twists".into(), t.to_string());
            }
            if *check_invariance {
                args.insert("check-invariance".into(), "true".into());
            }
            let flags = BTreeMap::from([("smoothing".into(), convention.as_str().to_string())]);

            let mut result = serde_json::Map::new();
            let mut tsv = String::new();
            let basis_name = basis.to_possible_value().unwrap().get_name().to_string();
            result.insert("basis".into(), json!(basis_name));

            let skein_side = |x: SkeinElement| -> SkeinElement {
                let mut x = x;
                if *gluck {
                    x = skein::gluck_action(&x);
                }
                if let Some(t) = twists {
                    x = skein::framing_twist(&x, *t);
                }
                x
            };

            let coefficients = if needs_eprime {
                let x = skein_side(solid_torus_to_skein(&bracket));
                if *check_invariance {
                    let check = skein::verify_gluck_invariance(
                        &solid_torus_to_skein(&bracket),
                        Parity::of(*strands as i64),
                    )?;
                    result.insert(
                        "invariance".into(),
                        json!({ "holds": check.holds, "f_used": check.f_used }),
                    );
                    writeln!(tsv, "invariance_holds\t{}", check.holds).unwrap();
                    match check.f_used {
                        Some(fu) => writeln!(tsv, "invariance_twists\t{fu}").unwrap(),
                        None => writeln!(tsv, "invariance_twists\tnone").unwrap(),
                    }
                }
                match basis {
                    BasisChoice::Eprime => {
                        for (i, c) in x.terms() {
                            writeln!(tsv, "eprime\t{i}\t{c}").unwrap();
                        }
                        skein_coefficients_json(x.terms().collect())
                    }
                    BasisChoice::E => {
                        let e = skein::eprime_to_e(&x);
                        for (i, c) in e.terms() {
                            writeln!(tsv, "e\t{i}\t{c}").unwrap();
                        }
                        skein_coefficients_json(e.terms().collect())
                    }
                    BasisChoice::Z => {
                        let z = skein::e_to_z(&skein::eprime_to_e(&x));
                        for (i, c) in z.terms() {
                            writeln!(tsv, "z\t{i}\t{c}").unwrap();
                        }
                        skein_coefficients_json(z.terms().collect())
                    }
                }
            } else {
                let mut s = bracket;
                if let Some(t) = twists {
                    s = skein::framing_twist_solid_torus(&s, *t);
                }
                match basis {
                    BasisChoice::Z => {
                        for (i, c) in s.terms() {
                            writeln!(tsv, "z\t{i}\t{c}").unwrap();
                        }
                        skein_coefficients_json(s.terms().collect())
                    }
                    _ => {
                        let e = skein::z_to_e(&s);
                        for (i, c) in e.terms() {
                            writeln!(tsv, "e\t{i}\t{c}").unwrap();
                        }
                        skein_coefficients_json(e.terms().collect())
                    }
                }
            };
            result.insert("coefficients".into(), coefficients);

            Ok(Report {
                document: json!({
                    "manifest": manifest("bracket", args, flags),
                    "result": Value::Object(result),
                }),
                tsv,
                expect_failed: false,
            })
        }
    }
}

fn chosen_format(cli: &Cli) -> Result<Format, String> {
    if let Some(f) = cli.format {
        return Ok(f);
    }
    match std::env::var("GLUCKKIT_FORMAT") {
        Ok(v) => match v.as_str() {
            "json" => Ok(Format::Json),
            "tsv" => Ok(Format::Tsv),
            other => Err(format!("GLUCKKIT_FORMAT must be json or tsv, got {other:?}")),
        },
        Err(_) => Ok(Format::Json),
    }
}

fn manifest_tsv(document: &Value) -> String {
    let mut out = String::new();
    let m = &document["manifest"];
    writeln!(out, "# subcommand\t{}", m["subcommand"].as_str().unwrap_or_default()).unwrap();
    for (k, v) in m["arguments"].as_object().into_iter().flatten() {
        writeln!(out, "# arg:{k}\t{}", v.as_str().unwrap_or_default()).unwrap();
    }
    for (k, v) in m["convention_flags"].as_object().into_iter().flatten() {
        writeln!(out, "# convention:{k}\t{}", v.as_str().unwrap_or_default()).unwrap();
    }
    writeln!(out, "# tool_version\t{}", m["tool_version"].as_str().unwrap_or_default()).unwrap();
    out
}

/// Routes an argument vector to its subcommand and emits the report.
/// Returns the process exit status.
pub fn dispatch<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let format = match chosen_format(&cli) {
        Ok(f) => f,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string(&report.document).expect("serializable report");
            s.push('\n');
            s
        }
        Format::Tsv => format!("{}{}", manifest_tsv(&report.document), report.tsv),
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{text}"),
    }
    if report.expect_failed {
        1
    } else {
        0
    }
}
