//! `mixlogic`: parse, evaluate, search, check proofs and run the claim
//! registry from the command line.
//!
//! Exit codes: 0 success (valid, accepted, true), 1 negative result
//! (countermodel, rejection, false), 2 usage or input error.

use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mixlogic::matrix3::{valid3, Validity3};
use mixlogic::proof::{check_proof, deduction_transform, proof_from_json, proof_to_json, SystemId};
use mixlogic::search::{bounded_consequence_jobs, run_paper_claims_with, ClaimBounds, SearchBounds, SearchResult};
use mixlogic::semantics::{build_model, truth_set, KripkeModel, ModelDescription, SemanticsVariant};
use mixlogic::syntax::{parse_formula, parse_schematic, render_formula, Formula, LanguageFragment};
use mixlogic::translate::{add_base, add_fresh_root_mpc, translate, truncate, TranslationDirection};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "mixlogic", version, about = "Combined classical/intuitionistic propositional logics: Kripke semantics, proof checking and countermodel search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Semantics: s, t, sminus-bot, sbot-w, l4, mpc, cipc-a, cipc-b, cipc-c
    #[arg(long, default_value = "s", value_parser = parse_variant)]
    variant: SemanticsVariant,
    /// Search only rooted models (the least world is the base)
    #[arg(long, conflicts_with = "unrooted")]
    rooted: bool,
    /// Search all frames, without a base
    #[arg(long)]
    unrooted: bool,
    #[arg(long, default_value_t = 3)]
    max_worlds: usize,
    /// Atoms the valuations range over (default: those of the query)
    #[arg(long, value_delimiter = ',')]
    atoms: Vec<String>,
    /// Atoms that are constant (CIPC readings only)
    #[arg(long, value_delimiter = ',')]
    classical_atoms: Vec<String>,
    /// Machine-readable output
    #[arg(long)]
    json: bool,
    /// Worker threads for the search
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

impl Common {
    fn bounds(&self) -> SearchBounds {
        let mut b = SearchBounds::new(self.variant).max_worlds(self.max_worlds);
        if self.rooted {
            b = b.rooted(true);
        }
        if self.unrooted {
            b = b.rooted(false);
        }
        b.atoms(&self.atoms).classical(&self.classical_atoms)
    }
}

fn parse_variant(s: &str) -> Result<SemanticsVariant, String> {
    s.parse()
}

fn parse_system(s: &str) -> Result<SystemId, String> {
    s.parse()
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    /// `A ↦ A^□`, from ⊃ to □
    Box,
    /// `A ↦ A^⊃`, from □ to ⊃
    Sup,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelOp {
    /// Add a base below a base-free model
    AddBase,
    /// Restrict an MPC model to the worlds above --world
    Truncate,
    /// Add a fresh root to an MPC model, giving a weak-absurdity model
    FreshRoot,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and print a formula in canonical form
    Parse {
        formula: String,
        /// Require the formula to lie in this fragment
        #[arg(long, default_value = "full")]
        fragment: String,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a formula on a model file ("-" reads stdin)
    Eval {
        model: String,
        formula: String,
        /// World to evaluate at (default: the variant's validity test)
        #[arg(long)]
        world: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Bounded validity: search for a countermodel
    Valid {
        formula: String,
        #[command(flatten)]
        common: Common,
    },
    /// Bounded consequence: premises then the conclusion, last
    Consequence {
        #[arg(required = true, num_args = 1..)]
        formulas: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Check a proof file ("-" reads stdin)
    CheckProof {
        file: String,
        #[arg(long, value_parser = parse_system)]
        system: Option<SystemId>,
        #[arg(long)]
        json: bool,
    },
    /// Discharge a hypothesis with the deduction theorem and print the new proof
    Deduce {
        file: String,
        /// The hypothesis to discharge
        #[arg(long)]
        hyp: String,
        #[arg(long, value_parser = parse_system)]
        system: Option<SystemId>,
    },
    /// Translate between the ⊃ and □ languages
    Translate {
        formula: String,
        #[arg(long, value_enum)]
        to: Direction,
        #[arg(long)]
        json: bool,
    },
    /// Base addition, truncation or fresh-root addition on a model file
    TransformModel {
        model: String,
        #[arg(long, value_enum)]
        op: ModelOp,
        #[arg(long)]
        world: Option<String>,
        /// Variant the input model is validated against
        #[arg(long, value_parser = parse_variant)]
        variant: Option<SemanticsVariant>,
    },
    /// Validity in the three-valued matrix
    Matrix3 {
        formula: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the registry of checkable claims
    PaperVerify {
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 3)]
        max_worlds: usize,
        /// Depth of swept formulas
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn formula(text: &str) -> Result<Formula> {
    parse_formula(text, &LanguageFragment::FULL).map_err(|e| anyhow!("{text}: {e}"))
}

fn load_model(path: &str, v: SemanticsVariant) -> Result<KripkeModel> {
    let text = read_input(path)?;
    let desc = ModelDescription::from_json(&text).with_context(|| format!("{path}: malformed model"))?;
    build_model(&desc, v).with_context(|| format!("{path}: invalid {v} model"))
}

fn model_value(m: &KripkeModel) -> Value {
    serde_json::to_value(m.to_description()).expect("plain data")
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn negative(yes: bool) -> ExitCode {
    if yes {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn report_search(res: &SearchResult, b: &SearchBounds, json: bool) -> ExitCode {
    match res.countermodel() {
        None => {
            if json {
                print_json(&json!({"result": "valid-up-to-bound", "variant": b.variant.name(), "max_worlds": b.max_worlds, "rooted": b.rooted}));
            } else {
                println!("valid up to {} worlds ({}, {})", b.max_worlds, b.variant, if b.rooted { "rooted" } else { "unrooted" });
            }
            ExitCode::SUCCESS
        }
        Some((m, w)) => {
            if json {
                print_json(&json!({"result": "countermodel", "world": m.world_name(w), "model": model_value(m)}));
            } else {
                println!("countermodel at {}", m.world_name(w));
                println!("{m}");
                println!("{}", m.to_description().to_json());
            }
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    Ok(match cli.command {
        Command::Parse { formula: text, fragment, json } => {
            let frag = LanguageFragment::from_name(&fragment).ok_or_else(|| anyhow!("unknown fragment `{fragment}`"))?;
            let f = parse_formula(&text, &frag).map_err(|e| anyhow!("{e}"))?;
            if json {
                let fragments: Vec<&str> =
                    LanguageFragment::NAMED.iter().filter(|(_, fr)| fr.violation(&f).is_none()).map(|(n, _)| *n).collect();
                let atoms: Vec<String> = f.atoms().iter().map(|a| a.to_string()).collect();
                print_json(&json!({"formula": render_formula(&f), "depth": f.depth(), "atoms": atoms, "fragments": fragments}));
            } else {
                println!("{}", render_formula(&f));
            }
            ExitCode::SUCCESS
        }
        Command::Eval { model, formula: text, world, common } => {
            let v = common.variant;
            let m = load_model(&model, v)?;
            let f = formula(&text)?;
            let set = truth_set(&m, &f, v)?;
            let true_at: Vec<&str> = set.iter().map(|w| m.world_name(w)).collect();
            let holds = match &world {
                Some(name) => set.contains(m.world(name).ok_or_else(|| anyhow!("no world `{name}`"))?),
                None => mixlogic::semantics::consequence_on_model(&m, &[], &f, v)?,
            };
            if common.json {
                print_json(&json!({"formula": render_formula(&f), "true_at": true_at, "world": world, "value": holds}));
            } else {
                println!("true at {{{}}}", true_at.join(", "));
                match &world {
                    Some(w) => println!("{} at {w}", if holds { "true" } else { "false" }),
                    None => println!("{} on the model", if holds { "valid" } else { "not valid" }),
                }
            }
            negative(holds)
        }
        Command::Valid { formula: text, common } => {
            let f = formula(&text)?;
            let b = common.bounds();
            let res = bounded_consequence_jobs(&[], &f, &b, common.jobs)?;
            report_search(&res, &b, common.json)
        }
        Command::Consequence { formulas, common } => {
            let mut fs = formulas.iter().map(|t| formula(t)).collect::<Result<Vec<_>>>()?;
            let concl = fs.pop().expect("at least one");
            let b = common.bounds();
            let res = bounded_consequence_jobs(&fs, &concl, &b, common.jobs)?;
            report_search(&res, &b, common.json)
        }
        Command::CheckProof { file, system, json } => {
            let p = proof_from_json(&read_input(&file)?, system).with_context(|| format!("{file}: bad proof file"))?;
            let v = check_proof(&p);
            if json {
                let failure = v.first_failure.as_ref().map(|(i, r)| json!({"step": i, "reason": r}));
                print_json(&json!({"system": p.system.name(), "accepted": v.accepted, "steps": p.steps.len(), "first_failure": failure}));
            } else {
                println!("{v}");
            }
            negative(v.accepted)
        }
        Command::Deduce { file, hyp, system } => {
            let p = proof_from_json(&read_input(&file)?, system).with_context(|| format!("{file}: bad proof file"))?;
            let a = parse_schematic(&hyp).map_err(|e| anyhow!("{hyp}: {e}"))?;
            match deduction_transform(&p, &a) {
                Ok(out) => {
                    print!("{}", proof_to_json(&out));
                    ExitCode::SUCCESS
                }
                Err(mixlogic::proof::DeductionError::Rejected(r)) => {
                    eprintln!("input proof {r}");
                    ExitCode::from(1)
                }
                Err(e) => bail!(e),
            }
        }
        Command::Translate { formula: text, to, json } => {
            let dir = match to {
                Direction::Box => TranslationDirection::ToBox,
                Direction::Sup => TranslationDirection::ToSup,
            };
            let f = formula(&text)?;
            let out = translate(&f, dir)?;
            if json {
                print_json(&json!({"input": render_formula(&f), "output": render_formula(&out)}));
            } else {
                println!("{}", render_formula(&out));
            }
            ExitCode::SUCCESS
        }
        Command::TransformModel { model, op, world, variant } => {
            let out = match op {
                ModelOp::AddBase => {
                    let m = load_model(&model, variant.unwrap_or(SemanticsVariant::SMinusBot))?;
                    let ext = add_base(&m)?;
                    ext.validate(SemanticsVariant::S).context("extended model")?;
                    ext
                }
                ModelOp::Truncate => {
                    let v = variant.unwrap_or(SemanticsVariant::Mpc);
                    let m = load_model(&model, v)?;
                    let name = world.ok_or_else(|| anyhow!("truncate needs --world"))?;
                    let w = m.world(&name).ok_or_else(|| anyhow!("no world `{name}`"))?;
                    truncate(&m, v, w)?
                }
                ModelOp::FreshRoot => {
                    let v = variant.unwrap_or(SemanticsVariant::Mpc);
                    add_fresh_root_mpc(&load_model(&model, v)?, v)?
                }
            };
            print_json(&model_value(&out));
            ExitCode::SUCCESS
        }
        Command::Matrix3 { formula: text, json } => {
            let f = formula(&text)?;
            match valid3(&f)? {
                Validity3::Valid => {
                    if json {
                        print_json(&json!({"result": "valid"}));
                    } else {
                        println!("valid");
                    }
                    ExitCode::SUCCESS
                }
                Validity3::Refuted(asg) => {
                    let pairs: serde_json::Map<String, Value> =
                        asg.iter().map(|(k, v)| (k.to_string(), Value::String(v.to_string()))).collect();
                    if json {
                        print_json(&json!({"result": "refuted", "assignment": pairs}));
                    } else {
                        let text: Vec<String> = asg.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        println!("refuted by {}", text.join(", "));
                    }
                    ExitCode::from(1)
                }
            }
        }
        Command::PaperVerify { json, jobs, max_worlds, depth } => {
            let bounds = ClaimBounds { max_worlds, depth, ..ClaimBounds::default() };
            if !(1..=mixlogic::search::MAX_FRAME_SIZE).contains(&max_worlds) {
                bail!("--max-worlds must be between 1 and {}", mixlogic::search::MAX_FRAME_SIZE);
            }
            let report = run_paper_claims_with(bounds, jobs);
            if json {
                print!("{}", report.json_lines());
            } else {
                print!("{}", report.text());
            }
            negative(report.ok())
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
