//! Proof files.
//!
//! ```json
//! {"system":"s","hypotheses":["A"],"steps":[
//!   {"formula":"A","by":{"hyp":0}},
//!   {"formula":"A -> (B -> A)","by":{"axiom":"Ax1","assign":{"A":"A","B":"B"}}},
//!   {"formula":"B -> A","by":{"rule":"MP2","premises":[0,1]}}]}
//! ```
//!
//! A bare array of steps is also accepted; the system then comes from the
//! caller. Formulas may use uppercase metavariables, which makes the proof a
//! template valid for every instantiation.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::check::{Justification, Proof, Step};
use super::system::{Rule, SystemId};
use crate::syntax::{parse_schematic, render_formula, Atom, Formula, SyntaxError};

#[derive(Debug, Error)]
pub enum ProofFileError {
    #[error("malformed proof file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("in {context}: {err}")]
    Formula { context: String, err: SyntaxError },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SubFile {
    step: usize,
    atom: String,
    formula: String,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ByFile {
    Hyp {
        hyp: usize,
    },
    Axiom {
        axiom: String,
        #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
        assign: BTreeMap<String, String>,
    },
    Rule {
        rule: String,
        premises: Vec<usize>,
    },
    Sub {
        sub: SubFile,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StepFile {
    formula: String,
    by: ByFile,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProofFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    system: Option<String>,
    #[serde(default)]
    hypotheses: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    classical_atoms: Vec<String>,
    steps: Vec<StepFile>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AnyFile {
    Full(ProofFile),
    Bare(Vec<StepFile>),
}

fn formula(text: &str, context: impl FnOnce() -> String) -> Result<Formula, ProofFileError> {
    parse_schematic(text).map_err(|err| ProofFileError::Formula { context: context(), err })
}

fn convert_by(by: ByFile, i: usize) -> Result<Justification, ProofFileError> {
    Ok(match by {
        ByFile::Hyp { hyp } => Justification::Hypothesis(hyp),
        ByFile::Axiom { axiom, assign } => {
            let mut a = BTreeMap::new();
            for (k, v) in assign {
                a.insert(Atom::new(&k), formula(&v, || format!("step {i}, assignment of {k}"))?);
            }
            Justification::Axiom { name: axiom, assign: a }
        }
        ByFile::Rule { rule, premises } => Justification::Rule {
            rule: rule.parse::<Rule>().map_err(|e| ProofFileError::Invalid(format!("step {i}: {e}")))?,
            premises,
        },
        ByFile::Sub { sub } => Justification::Substitution {
            step: sub.step,
            atom: Atom::new(&sub.atom),
            by: formula(&sub.formula, || format!("step {i}, substituted formula"))?,
        },
    })
}

/// Parses a proof file. `default_system` is used when the file names none;
/// when both are given they must agree.
pub fn proof_from_json(text: &str, default_system: Option<SystemId>) -> Result<Proof, ProofFileError> {
    let file = match serde_json::from_str::<AnyFile>(text) {
        Ok(AnyFile::Full(f)) => f,
        Ok(AnyFile::Bare(steps)) => ProofFile { system: None, hypotheses: vec![], classical_atoms: vec![], steps },
        // re-parse as the object form for a precise error message
        Err(_) => serde_json::from_str::<ProofFile>(text)?,
    };
    let named = file.system.as_deref().map(str::parse::<SystemId>).transpose().map_err(ProofFileError::Invalid)?;
    let system = match (named, default_system) {
        (Some(a), Some(b)) if a != b => {
            return Err(ProofFileError::Invalid(format!("file is for system {a}, but {b} was requested")))
        }
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err(ProofFileError::Invalid("no system given".into())),
    };
    let hypotheses = file
        .hypotheses
        .iter()
        .enumerate()
        .map(|(i, h)| formula(h, || format!("hypothesis {i}")))
        .collect::<Result<Vec<_>, _>>()?;
    let steps = file
        .steps
        .into_iter()
        .enumerate()
        .map(|(i, s)| Ok(Step { formula: formula(&s.formula, || format!("step {i}"))?, by: convert_by(s.by, i)? }))
        .collect::<Result<Vec<_>, ProofFileError>>()?;
    let classical_atoms: BTreeSet<Atom> = file.classical_atoms.iter().map(Atom::new).collect();
    Ok(Proof { system, hypotheses, classical_atoms, steps })
}

pub fn proof_to_json(p: &Proof) -> String {
    let r = render_formula;
    let file = ProofFile {
        system: Some(p.system.name().into()),
        hypotheses: p.hypotheses.iter().map(r).collect(),
        classical_atoms: p.classical_atoms.iter().map(|a| a.to_string()).collect(),
        steps: p
            .steps
            .iter()
            .map(|s| StepFile {
                formula: r(&s.formula),
                by: match &s.by {
                    Justification::Hypothesis(h) => ByFile::Hyp { hyp: *h },
                    Justification::Axiom { name, assign } => ByFile::Axiom {
                        axiom: name.clone(),
                        assign: assign.iter().map(|(k, v)| (k.to_string(), r(v))).collect(),
                    },
                    Justification::Rule { rule, premises } => {
                        ByFile::Rule { rule: rule.name().into(), premises: premises.clone() }
                    }
                    Justification::Substitution { step, atom, by } => {
                        ByFile::Sub { sub: SubFile { step: *step, atom: atom.to_string(), formula: r(by) } }
                    }
                },
            })
            .collect(),
    };
    // one step per line keeps corpus diffs readable
    let mut out = String::from("{\n");
    out += &format!("  \"system\": {},\n", serde_json::to_string(&file.system).unwrap());
    out += &format!("  \"hypotheses\": {},\n", serde_json::to_string(&file.hypotheses).unwrap());
    if !file.classical_atoms.is_empty() {
        out += &format!("  \"classical_atoms\": {},\n", serde_json::to_string(&file.classical_atoms).unwrap());
    }
    out += "  \"steps\": [\n";
    let lines: Vec<String> = file.steps.iter().map(|s| format!("    {}", serde_json::to_string(s).unwrap())).collect();
    out += &lines.join(",\n");
    out += "\n  ]\n}\n";
    out
}
