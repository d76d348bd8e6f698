use thiserror::Error;

use super::builder::ProofBuilder;
use super::check::{check_proof, Justification, Proof};
use crate::syntax::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeductionError {
    #[error("system {0} has rules besides MP")]
    NotMpOnly(String),
    #[error("input proof is rejected: {0}")]
    Rejected(String),
    #[error("{0} is not among the hypotheses")]
    NotAHypothesis(String),
}

/// Turns a proof of `Γ, A ⊢ B` into a proof of `Γ ⊢ A ⊃ B`.
///
/// Step by step: `A` itself becomes `A ⊃ A`; any other hypothesis or axiom
/// `C` becomes `C`, `C ⊃ (A ⊃ C)`, `A ⊃ C`; an MP step from `X` and `X ⊃ C`
/// uses `(A ⊃ (X ⊃ C)) ⊃ ((A ⊃ X) ⊃ (A ⊃ C))`.
pub fn deduction_transform(p: &Proof, a: &Formula) -> Result<Proof, DeductionError> {
    if !p.system.mp_only() {
        return Err(DeductionError::NotMpOnly(p.system.to_string()));
    }
    let v = check_proof(p);
    if !v.accepted {
        return Err(DeductionError::Rejected(v.to_string()));
    }
    if !p.hypotheses.contains(a) {
        return Err(DeductionError::NotAHypothesis(a.to_string()));
    }
    let rest: Vec<Formula> = p.hypotheses.iter().filter(|h| *h != a).cloned().collect();
    let mut b = ProofBuilder::with_hypotheses(p.system, rest);
    // new[i]: the step proving A ⊃ (formula of old step i)
    let mut new: Vec<usize> = Vec::with_capacity(p.steps.len());
    for step in &p.steps {
        let c = &step.formula;
        let idx = if c == a {
            b.id_sup(a)
        } else {
            match &step.by {
                Justification::Hypothesis(_) => {
                    let h = b.hyp(c);
                    b.weaken(h, a)
                }
                Justification::Axiom { name, .. } => {
                    let ax = b.axiom_instance(name, c);
                    b.weaken(ax, a)
                }
                Justification::Rule { premises, .. } => {
                    // premises in either order: find the major X ⊃ C
                    let (i, j) = (premises[0], premises[1]);
                    let (minor, major) = match &p.steps[j].formula {
                        Formula::ClsImp(x, y) if **x == p.steps[i].formula && **y == *c => (i, j),
                        _ => (j, i),
                    };
                    b.sup_mp(new[major], new[minor])
                }
                Justification::Substitution { .. } => unreachable!("mp-only system"),
            }
        };
        new.push(idx);
    }
    Ok(b.finish(*new.last().expect("accepted proofs are nonempty")))
}
