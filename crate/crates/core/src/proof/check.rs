use std::collections::BTreeSet;
use std::fmt;

use super::system::{schema, Rule, SystemId};
use crate::syntax::{substitute, substitute_all, Assignment, Atom, Formula};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Hypothesis(usize),
    /// Schema label plus the metavariable assignment it is instantiated with.
    Axiom { name: String, assign: Assignment },
    Rule { rule: Rule, premises: Vec<usize> },
    /// `formula` is step `step` with every `atom` replaced by `by`.
    Substitution { step: usize, atom: Atom, by: Formula },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub formula: Formula,
    pub by: Justification,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Proof {
    pub system: SystemId,
    pub hypotheses: Vec<Formula>,
    pub classical_atoms: BTreeSet<Atom>,
    pub steps: Vec<Step>,
}

impl Proof {
    pub fn new(system: SystemId) -> Self {
        Proof { system, hypotheses: Vec::new(), classical_atoms: BTreeSet::new(), steps: Vec::new() }
    }

    pub fn conclusion(&self) -> Option<&Formula> {
        self.steps.last().map(|s| &s.formula)
    }

    /// Applies `sigma` to every formula of the proof, assignments included.
    /// Schematic proofs stay correct under any instantiation.
    pub fn instantiate(&self, sigma: &Assignment) -> Proof {
        let sub = |f: &Formula| substitute_all(f, sigma);
        Proof {
            system: self.system,
            hypotheses: self.hypotheses.iter().map(sub).collect(),
            classical_atoms: self.classical_atoms.clone(),
            steps: self
                .steps
                .iter()
                .map(|s| Step {
                    formula: sub(&s.formula),
                    by: match &s.by {
                        Justification::Axiom { name, assign } => Justification::Axiom {
                            name: name.clone(),
                            assign: assign.iter().map(|(k, v)| (k.clone(), sub(v))).collect(),
                        },
                        Justification::Substitution { step, atom, by } => {
                            Justification::Substitution { step: *step, atom: atom.clone(), by: sub(by) }
                        }
                        other => other.clone(),
                    },
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub accepted: bool,
    pub first_failure: Option<(usize, String)>,
}

impl Verdict {
    fn ok() -> Self {
        Verdict { accepted: true, first_failure: None }
    }

    fn fail(i: usize, reason: impl Into<String>) -> Self {
        Verdict { accepted: false, first_failure: Some((i, reason.into())) }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_failure {
            None => f.write_str("accepted"),
            Some((i, r)) => write!(f, "rejected at step {i}: {r}"),
        }
    }
}

fn check_rule(rule: Rule, prem: &[&Formula], concl: &Formula) -> Result<(), String> {
    if prem.len() != rule.arity() {
        return Err(format!("{rule} takes {} premises, got {}", rule.arity(), prem.len()));
    }
    let minor_major = |major: &Formula, minor: &Formula| match (rule, major) {
        (Rule::MP | Rule::CMP, Formula::ClsImp(a, b)) => **a == *minor && **b == *concl,
        (Rule::MP2 | Rule::IMP, Formula::IntImp(a, b)) => **a == *minor && **b == *concl,
        _ => false,
    };
    let ok = match rule {
        Rule::RN => *concl == Formula::nec(prem[0].clone()),
        _ => minor_major(prem[1], prem[0]) || minor_major(prem[0], prem[1]),
    };
    if ok {
        Ok(())
    } else {
        Err(format!("{rule} does not yield this formula from the cited premises"))
    }
}

fn check_step(p: &Proof, i: usize) -> Result<(), String> {
    let step = &p.steps[i];
    let lang = p.system.language();
    if let Some(c) = lang.violation(&step.formula) {
        return Err(format!("`{c}` is outside the language of {}", p.system));
    }
    let earlier = |j: usize| -> Result<&Formula, String> {
        if j < i {
            Ok(&p.steps[j].formula)
        } else {
            Err(format!("step {j} is not an earlier step"))
        }
    };
    match &step.by {
        Justification::Hypothesis(h) => match p.hypotheses.get(*h) {
            Some(f) if *f == step.formula => Ok(()),
            Some(_) => Err(format!("formula differs from hypothesis {h}")),
            None => Err(format!("no hypothesis {h}")),
        },
        Justification::Axiom { name, assign } => {
            if !p.system.has_axiom(name) {
                return Err(format!("{name} is not an axiom of {}", p.system));
            }
            let s = schema(name).expect("has_axiom");
            let sigma = crate::syntax::match_schema(s, &step.formula, &p.classical_atoms)
                .ok_or_else(|| format!("not an instance of {name}"))?;
            if !assign.is_empty() && *assign != sigma {
                return Err(format!("assignment does not instantiate {name} to this formula"));
            }
            Ok(())
        }
        Justification::Rule { rule, premises } => {
            if !p.system.rules().contains(rule) {
                return Err(format!("{rule} is not a rule of {}", p.system));
            }
            let prem = premises.iter().map(|&j| earlier(j)).collect::<Result<Vec<_>, _>>()?;
            check_rule(*rule, &prem, &step.formula)
        }
        Justification::Substitution { step: j, atom, by } => {
            if !p.system.has_sub() {
                return Err(format!("Sub is not a rule of {}", p.system));
            }
            if !p.hypotheses.is_empty() {
                return Err("Sub is only allowed in proofs without hypotheses".into());
            }
            if let Some(c) = lang.violation(by) {
                return Err(format!("`{c}` is outside the language of {}", p.system));
            }
            if substitute(earlier(*j)?, atom, by) == step.formula {
                Ok(())
            } else {
                Err(format!("not the result of substituting for {atom} in step {j}"))
            }
        }
    }
}

/// Checks every step in order and reports the first failure.
pub fn check_proof(p: &Proof) -> Verdict {
    for (i, h) in p.hypotheses.iter().enumerate() {
        if let Some(c) = p.system.language().violation(h) {
            return Verdict::fail(i, format!("hypothesis {i}: `{c}` is outside the language of {}", p.system));
        }
    }
    if p.steps.is_empty() {
        return Verdict::fail(0, "empty proof");
    }
    for i in 0..p.steps.len() {
        if let Err(e) = check_step(p, i) {
            return Verdict::fail(i, e);
        }
    }
    Verdict::ok()
}
