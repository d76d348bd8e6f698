//! The derivation corpus.
//!
//! Proofs are schematic: `A`, `B`, `C` stand for arbitrary formulas, so every
//! instantiation is again an accepted proof. The JSON files under `corpus/`
//! are generated by [`build_corpus`] and embedded at compile time; a test
//! keeps the two in sync (`MIXLOGIC_REGEN_CORPUS=1` rewrites the files).

use std::collections::BTreeSet;

use thiserror::Error;

use super::builder::ProofBuilder;
use super::check::{check_proof, Justification, Proof, Step};
use super::deduction::deduction_transform;
use super::json::{proof_from_json, ProofFileError};
use super::system::{schema, Rule, SystemId};
use crate::syntax::{Atom, Formula};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub file: &'static str,
    /// Hypotheses are the premises of a derived rule.
    pub is_template: bool,
    pub proof: Proof,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("corpus file {file}: {err}")]
    File { file: &'static str, err: ProofFileError },
    #[error("corpus proof {name} is rejected: {reason}")]
    Rejected { name: &'static str, reason: String },
}

macro_rules! corpus_files {
    ($($name:literal => $file:literal),* $(,)?) => {
        /// `(name, file name, contents)` of every shipped proof.
        pub const CORPUS_FILES: &[(&str, &str, &str)] = &[
            $(($name, $file, include_str!(concat!("../../corpus/", $file)))),*
        ];
    };
}

corpus_files! {
    "MP2" => "mp2.json",
    "MP3" => "mp3.json",
    "Kmix" => "kmix.json",
    "Ksup" => "ksup.json",
    "Ssup" => "ssup.json",
    "C" => "c.json",
    "IdSup" => "id_sup.json",
    "Trans" => "trans.json",
    "Ex" => "ex.json",
    "Pfix" => "pfix.json",
    "SupDne" => "sup_dne.json",
    "SupDneEquiv" => "sup_dne_equiv.json",
    "BoxDneg" => "box_dneg.json",
    "AxM6Sub" => "axm6_sub.json",
}

fn m(name: &str) -> Formula {
    Formula::atom(name)
}

fn theorem(system: SystemId, f: impl FnOnce(&mut ProofBuilder) -> usize) -> Proof {
    let mut b = ProofBuilder::new(system);
    let t = f(&mut b);
    b.finish(t)
}

fn trans_template() -> Proof {
    let (a, bb, c) = (m("A"), m("B"), m("C"));
    let ab = Formula::sup(a.clone(), bb.clone());
    let bc = Formula::sup(bb, c);
    let mut b = ProofBuilder::with_hypotheses(SystemId::S, vec![ab.clone(), bc.clone(), a.clone()]);
    let ha = b.hyp(&a);
    let hab = b.hyp(&ab);
    let hb = b.mp(ha, hab);
    let hbc = b.hyp(&bc);
    let hc = b.mp(hb, hbc);
    let inner = b.finish(hc);
    deduction_transform(&inner, &a).expect("MP-only proof")
}

fn axm6_sub() -> Proof {
    let s = schema("AxM6'").expect("registered");
    Proof {
        system: SystemId::SBot2,
        hypotheses: vec![],
        classical_atoms: BTreeSet::new(),
        steps: vec![
            Step { formula: s.pattern.clone(), by: Justification::Axiom { name: s.name.clone(), assign: Default::default() } },
            Step {
                formula: crate::syntax::substitute(&s.pattern, &Atom::new("r"), &Formula::Bottom),
                by: Justification::Substitution { step: 0, atom: Atom::new("r"), by: Formula::Bottom },
            },
        ],
    }
}

/// Builds every corpus proof from scratch.
pub fn build_corpus() -> Vec<CorpusEntry> {
    use SystemId::*;
    let (a, b, c) = (m("A"), m("B"), m("C"));
    let entry = |name: &'static str, proof: Proof| {
        let file = CORPUS_FILES.iter().find(|(n, _, _)| *n == name).expect("listed").1;
        CorpusEntry { name, file, is_template: !proof.hypotheses.is_empty(), proof }
    };
    let mp2 = {
        let ab = Formula::imp(a.clone(), b.clone());
        let mut pb = ProofBuilder::with_hypotheses(S, vec![a.clone(), ab.clone()]);
        let x = pb.hyp(&a);
        let y = pb.hyp(&ab);
        let t = pb.mp2(x, y);
        pb.finish(t)
    };
    vec![
        entry("MP2", mp2),
        entry("MP3", theorem(S, |p| p.mp3(&a, &b))),
        entry("Kmix", theorem(S, |p| p.kmix(&a, &b))),
        entry("Ksup", theorem(S, |p| p.ksup(&a, &b))),
        entry("Ssup", theorem(S, |p| p.ssup(&a, &b, &c))),
        entry("C", theorem(S, |p| p.excluded_middle(&a, &b))),
        entry("IdSup", theorem(S, |p| p.id_sup(&a))),
        entry("Trans", trans_template()),
        entry("Ex", theorem(SMinusBot, |p| p.ex(&a, &b, &c))),
        entry("Pfix", theorem(SMinusBot, |p| p.pfix(&a, &b, &c))),
        entry("SupDne", theorem(SMinusBot, |p| p.sup_dne(&b))),
        entry("SupDneEquiv", theorem(SMinusBot, |p| p.sup_dne_equiv(&b, &c))),
        entry("BoxDneg", theorem(L4, |p| p.box_dneg(&a))),
        entry("AxM6Sub", axm6_sub()),
    ]
}

/// Parses and checks the shipped corpus files.
pub fn load_corpus() -> Result<Vec<CorpusEntry>, CorpusError> {
    CORPUS_FILES
        .iter()
        .map(|&(name, file, text)| {
            let proof = proof_from_json(text, None).map_err(|err| CorpusError::File { file, err })?;
            let v = check_proof(&proof);
            if !v.accepted {
                return Err(CorpusError::Rejected { name, reason: v.to_string() });
            }
            Ok(CorpusEntry { name, file, is_template: !proof.hypotheses.is_empty(), proof })
        })
        .collect()
}

/// Rewrites a hypothesis-free S⊥ or S⁻⊥ proof into the matching system with
/// concrete axioms and Sub. Each axiom instance becomes the concrete axiom,
/// a renaming of `p`, `q`, `r` to fresh atoms, and then the substitution of
/// the instance formulas for those atoms.
pub fn to_substitution_system(p: &Proof) -> Option<Proof> {
    let target = match p.system {
        SystemId::SBot | SystemId::S => SystemId::SBot2,
        SystemId::SMinusBot | SystemId::SMinus => SystemId::SMinusBot2,
        _ => return None,
    };
    if !p.hypotheses.is_empty() {
        return None;
    }
    let used: BTreeSet<Atom> = p.steps.iter().flat_map(|s| s.formula.atoms()).collect();
    let fresh: Vec<Atom> = (0..).map(|i| Atom::new(format!("z{i}"))).filter(|a| !used.contains(a)).take(3).collect();
    let mut steps: Vec<Step> = Vec::new();
    let mut new_index = Vec::with_capacity(p.steps.len());
    for step in &p.steps {
        match &step.by {
            Justification::Axiom { name, assign } => {
                let concrete = schema(&format!("{name}'"))?;
                steps.push(Step {
                    formula: concrete.pattern.clone(),
                    by: Justification::Axiom { name: concrete.name.clone(), assign: Default::default() },
                });
                let mut pending = Vec::new();
                for (k, (meta, conc)) in [("A", "p"), ("B", "q"), ("C", "r")].into_iter().enumerate() {
                    if let Some(val) = assign.get(&Atom::new(meta)) {
                        pending.push((Atom::new(conc), fresh[k].clone(), val.clone()));
                    }
                }
                let sub = |steps: &mut Vec<Step>, atom: &Atom, by: &Formula| {
                    let prev = steps.len() - 1;
                    let formula = crate::syntax::substitute(&steps[prev].formula, atom, by);
                    steps.push(Step {
                        formula,
                        by: Justification::Substitution { step: prev, atom: atom.clone(), by: by.clone() },
                    });
                };
                for (conc, z, _) in &pending {
                    sub(&mut steps, conc, &Formula::Atom(z.clone()));
                }
                for (_, z, val) in &pending {
                    sub(&mut steps, z, val);
                }
                debug_assert_eq!(steps.last().map(|s| &s.formula), Some(&step.formula));
            }
            Justification::Rule { rule: Rule::MP, premises } => steps.push(Step {
                formula: step.formula.clone(),
                by: Justification::Rule { rule: Rule::MP, premises: premises.iter().map(|&j| new_index[j]).collect() },
            }),
            _ => return None,
        }
        new_index.push(steps.len() - 1);
    }
    Some(Proof { system: target, hypotheses: vec![], classical_atoms: BTreeSet::new(), steps })
}
