use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use endoscope::endostructure::{family_endosocle, relative_endosocle_series};
use endoscope::error::{Error, Result};
use endoscope::family::analyze_with;
use endoscope::harness::{
    parse_lambdas, parse_module, parse_range, suite_names, sweep, sweep_csv, transversal, verify, Config, FamilyKind,
    FamilySpec, Invariant, Report,
};
use endoscope::homalg::{hom_basis, hom_dim, IsoSearch};
use endoscope::linalg::Field;
use endoscope::matsub::{evaluate, PointedMatrix, PointedMatrixJson};
use endoscope::tnilpotence::{harada_sai_check, radical_profile};

#[derive(Parser)]
#[command(name = "endoscope", version, about = "Endosocles, radical profiles and matrix subgroups of quiver representations")]
struct Cli {
    /// Seed for randomized searches and property sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Coefficient field: `q` or `fp:<p>`.
    #[arg(long, global = true, default_value = "q")]
    field: Field,
    /// Omit `timing_ms` from JSON reports.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// preinj, preproj, regular or file.
    #[arg(long)]
    family: FamilyKind,
    /// Index range `a..b`; for regular families, integer parameters.
    #[arg(long)]
    range: Option<String>,
    /// Comma-separated parameters for regular families, e.g. `0,1,inf`.
    #[arg(long)]
    lambdas: Option<String>,
    /// Quasi-length of regular members.
    #[arg(long, default_value_t = 1)]
    block: usize,
    /// JSON array of representations for `--family file`.
    #[arg(long)]
    file: Option<PathBuf>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec> {
        Ok(FamilySpec {
            kind: self.family,
            range: self.range.as_deref().map(parse_range).transpose()?,
            lambdas: self.lambdas.as_deref().map(parse_lambdas).transpose()?.unwrap_or_default(),
            block: self.block,
            path: self.file.clone(),
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Endosocle of a family (or its relative series).
    Endosoc {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Report the relative endosocle series instead.
        #[arg(long)]
        relative: bool,
    },
    /// An invariant across truncations `min..=max`.
    Sweep {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        invariant: Invariant,
        #[arg(long, default_value_t = 1)]
        min: usize,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite (`all` for every suite).
    Verify { suite: String },
    /// Dimensions of radical powers between family members.
    RadicalProfile {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, default_value_t = 32)]
        dmax: usize,
        /// Profile of the dual family (left vanishing).
        #[arg(long)]
        left: bool,
        /// Also compare the depth with 2^b - 1 for this length bound.
        #[arg(long)]
        length_bound: Option<usize>,
    },
    /// Matrix-subgroup tools.
    Matsub {
        #[command(subcommand)]
        command: MatsubCommand,
    },
    /// Isomorphism classes of a family.
    Transversal {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// dim Hom between two modules (`I3`, `P2`, `R2(0)`, `S1+I2`, `@file.json`).
    Hom {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
    },
}

#[derive(Subcommand)]
enum MatsubCommand {
    /// Evaluate a pointed matrix (JSON file) on a module.
    Eval {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        module: String,
    },
}

enum Outcome {
    Report(Report, bool),
    Text(String),
}

fn range_label(f: &FamilyArgs) -> Option<String> {
    f.range.clone().or_else(|| f.lambdas.clone())
}

fn run(cli: &Cli) -> Result<Outcome> {
    let search = IsoSearch { seed: cli.seed, ..IsoSearch::default() };
    let config = |truncation: Option<String>| Config { seed: cli.seed, field: cli.field.to_string(), truncation };
    let start = Instant::now();
    let (command, truncation, results, pass) = match &cli.command {
        Command::Endosoc { family, format, relative } => {
            cli.field.require_char_zero()?;
            let fam = family.spec()?.build()?;
            let a = analyze_with(&fam, search)?;
            if *relative {
                let s = relative_endosocle_series(&a)?;
                if let Format::Text = format {
                    let lines: Vec<String> = s.steps.iter().map(|st| format!("{:?} dim {}", st.support, st.total_dim)).collect();
                    return Ok(Outcome::Text(format!("{}\nlength {}\n", lines.join("\n"), s.length)));
                }
                ("endosoc --relative", range_label(family), serde_json::to_value(s.to_json())?, true)
            } else {
                let r = family_endosocle(&a);
                match format {
                    Format::Text => {
                        let mut out = String::new();
                        for (i, p) in r.indices.iter().zip(&r.parts) {
                            let flag = if r.boundary.contains(i) { " (boundary)" } else { "" };
                            out.push_str(&format!("B_{i} dims {:?}{flag}\n", p.dims()));
                        }
                        out.push_str(&format!("support {:?}\ntotal_dim {}\n", r.support, r.total_dim));
                        return Ok(Outcome::Text(out));
                    }
                    Format::Csv => {
                        let mut out = String::from("index,dim,boundary\n");
                        for (i, p) in r.indices.iter().zip(&r.parts) {
                            out.push_str(&format!("{i},{},{}\n", p.total_dim(), u8::from(r.boundary.contains(i))));
                        }
                        return Ok(Outcome::Text(out));
                    }
                    Format::Json => ("endosoc", range_label(family), serde_json::to_value(r.to_json())?, true),
                }
            }
        }
        Command::Sweep { family, invariant, min, max, format, out } => {
            cli.field.require_char_zero()?;
            if min > max || *min == 0 {
                return Err(Error::InvalidArgument(format!("bad truncation range {min}..{max}")));
            }
            let rows = sweep(&family.spec()?, *invariant, *min..=*max)?;
            let text = match format {
                Format::Csv | Format::Text => Some(sweep_csv(&rows)?),
                Format::Json => None,
            };
            match (text, out) {
                (Some(t), Some(path)) => {
                    std::fs::write(path, t)?;
                    return Ok(Outcome::Text(format!("wrote {} rows to {}\n", rows.len(), path.display())));
                }
                (Some(t), None) => return Ok(Outcome::Text(t)),
                (None, _) => ("sweep", Some(format!("{min}..{max}")), json!({ "rows": rows }), true),
            }
        }
        Command::Verify { suite } => {
            cli.field.require_char_zero()?;
            if suite != "all" && !suite_names().contains(&suite.as_str()) {
                return Err(Error::InvalidArgument(format!("unknown suite {suite:?}; known: all, {}", suite_names().join(", "))));
            }
            let results = verify(suite, cli.seed)?;
            let pass = results.iter().all(|r| r.pass);
            ("verify", None, json!({ "suite": suite, "pass": pass, "suites": results }), pass)
        }
        Command::RadicalProfile { family, dmax, left, length_bound } => {
            cli.field.require_char_zero()?;
            let mut fam = family.spec()?.build()?;
            if *left {
                fam = fam.dual();
            }
            let a = analyze_with(&fam, search)?;
            let profile = radical_profile(&a, *dmax)?;
            let mut value = serde_json::to_value(profile.to_json())?;
            let mut pass = true;
            if let Some(b) = length_bound {
                let hs = harada_sai_check(&a, *b)?;
                pass = hs.pass;
                value["harada_sai"] = serde_json::to_value(hs)?;
            }
            ("radical-profile", range_label(family), value, pass)
        }
        Command::Matsub { command: MatsubCommand::Eval { matrix, module } } => {
            let j: PointedMatrixJson = serde_json::from_str(&std::fs::read_to_string(matrix)?)?;
            let pm = PointedMatrix::from_json(&j)?;
            let m = parse_module(module)?;
            let sub = evaluate(&pm, &m)?;
            let invariant = endoscope::matsub::check_endo_invariant(&sub, &m)?;
            let results = json!({ "module": module, "dim": sub.dim(), "basis": sub.vectors(), "endo_invariant": invariant });
            ("matsub eval", None, results, true)
        }
        Command::Transversal { family } => {
            let fam = family.spec()?.build()?;
            ("transversal", range_label(family), serde_json::to_value(transversal(&fam)?)?, true)
        }
        Command::Hom { source, target } => {
            let (m, n) = (parse_module(source)?, parse_module(target)?);
            let dim = match cli.field {
                Field::Rationals => hom_basis(&m, &n)?.dim(),
                Field::Prime(_) => hom_dim(&m, &n, cli.field)?,
            };
            ("hom", None, json!({ "source": source, "target": target, "dim": dim }), true)
        }
    };
    let timing_ms = (!cli.no_timing).then(|| start.elapsed().as_millis() as u64);
    Ok(Outcome::Report(Report { command: command.to_string(), config: config(truncation), results, timing_ms }, pass))
}

fn exit_code(e: &Error) -> u8 {
    if e.is_inconclusive() {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Text(t)) => {
            print!("{t}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Report(r, pass)) => {
            println!("{}", r.to_json_string());
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
