//! The `pedestal` command line.
//!
//! Exit status: 0 on success, 1 when a verifier finds a counterexample,
//! 2 on malformed input.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pedestal_core::ring::{
    bar_schur_asymmetry, family_membership_check, schur_symmetry_check, verify_identity_01,
    verify_identity_04, verify_maj_comaj, Discrepancy, SymmetryWitness,
};
use pedestal_core::{
    b_st, b_st_inverse, disagreement_nodes, pedestal, pedestal_polynomial, pi_poly_for,
    LinearExtension, Partition, Poset,
};
use serde_json::{json, Value};

use crate::json::{self, InverseInput};
use crate::{parallel, CliError};

#[derive(Debug, Parser)]
#[command(
    name = "pedestal",
    version,
    about = "Pedestal polynomials of Young diagrams and finite posets"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Exactly one of `--shape` / `--poset`.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Subject {
    /// Young diagram as comma-separated parts, e.g. `3,2`.
    #[arg(long)]
    pub shape: Option<String>,
    /// Poset JSON file: `{"elements":[…],"covers":[[a,b],…]}`.
    #[arg(long)]
    pub poset: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List or count the standard Young tableaux of a shape.
    Syt {
        #[arg(long)]
        shape: String,
        /// Print only the number of tableaux.
        #[arg(long)]
        count: bool,
    },
    /// The P-pedestal of Q.
    Pedestal {
        #[command(flatten)]
        subject: Subject,
        /// `canonical` or a JSON tableau / label array.
        #[arg(long, default_value = "canonical")]
        p: String,
        #[arg(long)]
        q: String,
    },
    /// The pedestal polynomial.
    Poly {
        #[command(flatten)]
        subject: Subject,
        #[arg(long, default_value = "canonical")]
        p: String,
    },
    /// The one-variable pedestal generating polynomial π(x).
    Pi {
        #[command(flatten)]
        subject: Subject,
        #[arg(long, default_value = "canonical")]
        p: String,
    },
    /// Run an exact verifier.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[command(flatten)]
        subject: Subject,
        #[arg(long, default_value = "canonical")]
        p: String,
        /// Run `id01` for every choice of P instead of one.
        #[arg(long)]
        all_p: bool,
        /// Volume truncation for series checks (default 2n).
        #[arg(long)]
        max_volume: Option<u64>,
        /// Largest variable index for the Schur symmetry check (default n).
        #[arg(long)]
        max_entry: Option<u32>,
    },
    /// Apply the bijection between reverse plane partitions and
    /// (pedestal, partition) pairs.
    Bijection {
        #[arg(value_enum)]
        direction: Direction,
        #[command(flatten)]
        subject: Subject,
        #[arg(long, default_value = "canonical")]
        p: String,
        /// JSON input; read from stdin when absent or `-`.
        #[arg(long)]
        data: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Theorem,
    Id01,
    Id04,
    Majcomaj,
    Family,
    Symmetry,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Fwd,
    Inv,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(&cli, stdin) {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            if output.passed {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, passed: true }
    }
}

fn emit(format: Format, value: &Value, text: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(value).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = text();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
    }
}

fn load_poset(subject: &Subject) -> Result<Poset, CliError> {
    match (&subject.shape, &subject.poset) {
        (Some(shape), None) => Ok(Poset::young(&json::parse_shape(shape)?)),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            Ok(json::poset_from_str(&text)?)
        }
        _ => Err(CliError::Usage(
            "give exactly one of --shape or --poset".into(),
        )),
    }
}

fn require_shape(poset: &Poset) -> Result<&Partition, CliError> {
    poset
        .shape()
        .ok_or_else(|| CliError::Usage("this check needs --shape".into()))
}

fn choose_extension<'p>(poset: &'p Poset, arg: &str) -> Result<LinearExtension<'p>, CliError> {
    if arg.trim() == "canonical" {
        return Ok(poset.canonical_extension());
    }
    let value: Value = serde_json::from_str(arg).map_err(crate::FormatError::from)?;
    Ok(json::extension_from_value(poset, &value)?)
}

fn read_data(data: &Option<String>, stdin: &mut dyn Read) -> Result<Value, CliError> {
    let text = match data.as_deref() {
        Some(text) if text != "-" => text.to_string(),
        _ => {
            let mut buf = String::new();
            stdin
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Io(e.to_string()))?;
            buf
        }
    };
    Ok(serde_json::from_str(&text).map_err(crate::FormatError::from)?)
}

fn discrepancy_value(d: &Discrepancy) -> Value {
    match d {
        Discrepancy::Term { monomial, lhs, rhs } => {
            json!({ "monomial": monomial.indices(), "lhs": lhs, "rhs": rhs })
        }
        Discrepancy::Coefficient {
            relation,
            degree,
            lhs,
            rhs,
        } => {
            json!({ "relation": relation, "degree": degree, "lhs": lhs, "rhs": rhs })
        }
    }
}

fn discrepancy_text(d: &Discrepancy) -> String {
    match d {
        Discrepancy::Term { monomial, lhs, rhs } => {
            format!("coefficient of {monomial}: lhs {lhs}, rhs {rhs}")
        }
        Discrepancy::Coefficient {
            relation,
            degree,
            lhs,
            rhs,
        } => {
            format!("{relation}: coefficient of x^{degree}: lhs {lhs}, rhs {rhs}")
        }
    }
}

fn witness_value(w: &Option<SymmetryWitness>) -> Value {
    match w {
        None => Value::Null,
        Some(w) => json!({
            "swap": [w.swap, w.swap + 1],
            "monomial": w.monomial.indices(),
            "coeff": w.coefficient,
            "swapped_coeff": w.swapped_coefficient,
        }),
    }
}

fn order_value(poset: &Poset, order: &[usize]) -> Value {
    let e = LinearExtension::new(poset, order.to_vec()).expect("verifier reports extensions");
    json::extension_to_value(&e)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Syt { shape, count } => {
            let shape = json::parse_shape(shape)?;
            if *count {
                // Enumerated rather than taken from the hook formula so the
                // count works past u64 overflow of the formula's domain.
                let n = shape.standard_tableaux().count();
                return Ok(Output::ok(format!("{n}\n")));
            }
            let tableaux: Vec<_> = shape.standard_tableaux().collect();
            let value = Value::from(
                tableaux
                    .iter()
                    .map(json::tableau_to_value)
                    .collect::<Vec<_>>(),
            );
            Ok(Output::ok(emit(format, &value, || {
                tableaux.iter().map(|t| format!("{t}\n")).collect()
            })))
        }
        Command::Pedestal { subject, p, q } => {
            let poset = load_poset(subject)?;
            let p = choose_extension(&poset, p)?;
            let q = choose_extension(&poset, q)?;
            let ped = pedestal(&p, &q)?;
            let nodes = disagreement_nodes(&p, &q)?;
            let doc = json::pedestal_to_doc(&ped, &nodes);
            let value = serde_json::to_value(&doc).expect("pedestal doc serializes");
            Ok(Output::ok(emit(format, &value, || {
                format!("{} (volume {})", doc.rpp, ped.volume())
            })))
        }
        Command::Poly { subject, p } => {
            let poset = load_poset(subject)?;
            let p = choose_extension(&poset, p)?;
            let h = pedestal_polynomial(&p);
            let value = serde_json::to_value(json::series_to_doc(&h)).expect("series serializes");
            Ok(Output::ok(emit(format, &value, || h.to_string())))
        }
        Command::Pi { subject, p } => {
            let poset = load_poset(subject)?;
            let p = choose_extension(&poset, p)?;
            let pi = pi_poly_for(&p);
            let value = serde_json::to_value(json::unipoly_to_doc(&pi)).expect("poly serializes");
            Ok(Output::ok(emit(format, &value, || pi.to_string())))
        }
        Command::Verify {
            check,
            subject,
            p,
            all_p,
            max_volume,
            max_entry,
        } => {
            let poset = load_poset(subject)?;
            let n = poset.len();
            let max_volume = max_volume.unwrap_or(2 * n as u64);
            let (value, text, passed) = match check {
                Check::Theorem => {
                    let report = parallel::verify_independence(&parallel::thread_pool(), &poset);
                    let mismatch = report.counterexample.as_ref().map(|(order, d)| {
                        let mut v = discrepancy_value(d);
                        v["P"] = order_value(&poset, order);
                        v
                    });
                    let witness = report
                        .pedestal_set_witness
                        .as_ref()
                        .map(|(a, b)| json!([order_value(&poset, a), order_value(&poset, b)]));
                    let value = json!({
                        "check": "theorem",
                        "holds": report.holds(),
                        "extensions": report.extensions,
                        "polynomial": json::series_to_doc(&report.polynomial),
                        "pedestal_set_depends_on_p": witness.is_some(),
                        "pedestal_set_witness": witness,
                        "mismatch": mismatch,
                    });
                    let text = match &report.counterexample {
                        None => format!(
                            "theorem: holds over {} extensions; pedestal set {} on P\nh = {}",
                            report.extensions,
                            if report.pedestal_set_witness.is_some() {
                                "depends"
                            } else {
                                "does not depend"
                            },
                            report.polynomial
                        ),
                        Some((_, d)) => format!("theorem: FAILS, {}", discrepancy_text(d)),
                    };
                    (value, text, report.holds())
                }
                Check::Id01 => {
                    let (p_value, verdict) = if *all_p {
                        match parallel::verify_identity_01_all(
                            &parallel::thread_pool(),
                            &poset,
                            max_volume,
                        )? {
                            None => (json!("all"), None),
                            Some((order, verdict)) => {
                                (order_value(&poset, &order), verdict.discrepancy)
                            }
                        }
                    } else {
                        let p = choose_extension(&poset, p)?;
                        (
                            json::extension_to_value(&p),
                            verify_identity_01(&p, max_volume)?.discrepancy,
                        )
                    };
                    let holds = verdict.is_none();
                    let value = json!({
                        "check": "id01",
                        "holds": holds,
                        "max_volume": max_volume,
                        "P": p_value,
                        "mismatch": verdict.as_ref().map(discrepancy_value),
                    });
                    let text = match &verdict {
                        None => format!("id01: holds up to volume {max_volume}"),
                        Some(d) => format!("id01: FAILS, {}", discrepancy_text(d)),
                    };
                    (value, text, holds)
                }
                Check::Id04 => {
                    let shape = require_shape(&poset)?;
                    let verdict = verify_identity_04(shape)?;
                    let value = json!({
                        "check": "id04",
                        "holds": verdict.holds(),
                        "hooks": shape.hooks(),
                        "pi": json::unipoly_to_doc(&pedestal_core::pi_poly(&poset)),
                        "mismatch": verdict.discrepancy.as_ref().map(discrepancy_value),
                    });
                    let text = match &verdict.discrepancy {
                        None => format!("id04: holds for {shape}"),
                        Some(d) => format!("id04: FAILS, {}", discrepancy_text(d)),
                    };
                    (value, text, verdict.holds())
                }
                Check::Majcomaj => {
                    let shape = require_shape(&poset)?;
                    let verdict = verify_maj_comaj(shape)?;
                    let value = json!({
                        "check": "majcomaj",
                        "holds": verdict.holds(),
                        "l": shape.l_stat(),
                        "mismatch": verdict.discrepancy.as_ref().map(discrepancy_value),
                    });
                    let text = match &verdict.discrepancy {
                        None => format!("majcomaj: holds for {shape}"),
                        Some(d) => format!("majcomaj: FAILS, {}", discrepancy_text(d)),
                    };
                    (value, text, verdict.holds())
                }
                Check::Family => {
                    let shape = require_shape(&poset)?;
                    let report = family_membership_check(shape);
                    let candidates: Vec<Value> = report
                        .candidates
                        .iter()
                        .map(|c| {
                            json!({
                                "name": c.name,
                                "values": c.values,
                                "in_family": c.matched_by.is_some(),
                                "matched_by": c.matched_by.map(|i| json::tableau_to_value(&report.tableaux[i])),
                            })
                        })
                        .collect();
                    let holds = report.none_in_family();
                    let value = json!({
                        "check": "family",
                        "holds": holds,
                        "tableaux": report.tableaux.len(),
                        "candidates": candidates,
                    });
                    let mut text = format!("family: {} tableaux\n", report.tableaux.len());
                    for c in &report.candidates {
                        let status = if c.matched_by.is_some() {
                            "in family"
                        } else {
                            "not in family"
                        };
                        text.push_str(&format!("  {}: {status}\n", c.name));
                    }
                    (value, text, holds)
                }
                Check::Symmetry => {
                    let shape = require_shape(&poset)?;
                    let max_entry = max_entry.unwrap_or(shape.size() as u32);
                    let schur = schur_symmetry_check(&poset, max_entry)?;
                    let bar = bar_schur_asymmetry(&poset, max_volume)?;
                    let value = json!({
                        "check": "symmetry",
                        "holds": schur.is_none(),
                        "max_entry": max_entry,
                        "max_volume": max_volume,
                        "schur_witness": witness_value(&schur),
                        "bar_schur_witness": witness_value(&bar),
                    });
                    let describe = |w: &Option<SymmetryWitness>| match w {
                        None => "symmetric".to_string(),
                        Some(w) => format!(
                            "not symmetric under x{} <-> x{}: {} has coefficient {}, its image {}",
                            w.swap,
                            w.swap + 1,
                            w.monomial,
                            w.coefficient,
                            w.swapped_coefficient
                        ),
                    };
                    let text =
                        format!("schur: {}\nbar schur: {}", describe(&schur), describe(&bar));
                    (value, text, schur.is_none())
                }
            };
            Ok(Output {
                text: emit(format, &value, || text),
                passed,
            })
        }
        Command::Bijection {
            direction,
            subject,
            p,
            data,
        } => {
            let poset = load_poset(subject)?;
            let p = choose_extension(&poset, p)?;
            let input = read_data(data, stdin)?;
            match direction {
                Direction::Fwd => {
                    let rpp = json::rpp_from_value(&poset, &input)?;
                    let (ped, mu) = b_st(&p, &rpp)?;
                    let nodes = disagreement_nodes(ped.p(), ped.q())?;
                    let doc = json::ForwardOutput {
                        pedestal: json::pedestal_to_doc(&ped, &nodes),
                        partition: mu.parts().to_vec(),
                    };
                    let value = serde_json::to_value(&doc).expect("bijection output serializes");
                    Ok(Output::ok(emit(format, &value, || {
                        format!("pedestal {}\npartition {mu}", doc.pedestal.rpp)
                    })))
                }
                Direction::Inv => {
                    let input: InverseInput =
                        serde_json::from_value(input).map_err(crate::FormatError::from)?;
                    let q = json::extension_from_value(&poset, &input.q)?;
                    let mu = Partition::from_signed(&input.partition)?;
                    let rpp = b_st_inverse(&p, &q, &mu)?;
                    let value = json::rpp_to_value(&rpp);
                    Ok(Output::ok(emit(format, &value, || value.to_string())))
                }
            }
        }
    }
}
