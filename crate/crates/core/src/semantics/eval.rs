use thiserror::Error;

use super::model::{KripkeModel, World, WorldSet};
use super::variant::{BottomMode, ConsequenceMode, SemanticsVariant};
use crate::syntax::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("`{connective}` is outside the language of variant {variant}")]
    Language { variant: SemanticsVariant, connective: String },
    #[error("variant {0} needs a model with a base state")]
    MissingBase(SemanticsVariant),
    #[error("no world with index {0}")]
    NoSuchWorld(usize),
}

fn check(m: &KripkeModel, f: &Formula, v: SemanticsVariant) -> Result<(), EvalError> {
    if let Some(c) = v.language().violation(f) {
        return Err(EvalError::Language { variant: v, connective: c.to_string() });
    }
    if v.requires_base() && m.base().is_none() {
        return Err(EvalError::MissingBase(v));
    }
    Ok(())
}

/// `{w : every x ≥ w in a is also in b}`
fn intuitionistic_imp(m: &KripkeModel, a: WorldSet, b: WorldSet) -> WorldSet {
    let mut out = WorldSet::EMPTY;
    for w in m.worlds() {
        if m.up(w).intersect(a).is_subset(b) {
            out.insert(w);
        }
    }
    out
}

fn classical_imp(m: &KripkeModel, v: SemanticsVariant, a: WorldSet, b: WorldSet) -> WorldSet {
    let all = m.all();
    match v {
        SemanticsVariant::S | SemanticsVariant::SBotW | SemanticsVariant::CipcB => {
            let g = m.base().expect("base checked");
            if a.contains(g) {
                b
            } else {
                all
            }
        }
        SemanticsVariant::T => {
            let g = m.base().expect("base checked");
            if !a.contains(g) || b.contains(g) {
                all
            } else {
                WorldSet::EMPTY
            }
        }
        SemanticsVariant::SMinusBot | SemanticsVariant::CipcC => {
            if a != all {
                all
            } else {
                b
            }
        }
        SemanticsVariant::CipcA => {
            let good = WorldSet(!a.0 & all.0).union(b);
            let mut out = WorldSet::EMPTY;
            for w in m.worlds() {
                if !m.down(w).intersect(good).is_empty() {
                    out.insert(w);
                }
            }
            out
        }
        SemanticsVariant::L4 | SemanticsVariant::Mpc => unreachable!("language checked"),
    }
}

/// Truth set without the language/base check; callers must have run it.
pub(crate) fn denote(m: &KripkeModel, f: &Formula, v: SemanticsVariant) -> WorldSet {
    match f {
        Formula::Atom(a) => m.atom_set(a),
        Formula::Bottom => match v.bottom_mode() {
            BottomMode::Valuation => m.bot_set(),
            _ => WorldSet::EMPTY,
        },
        Formula::And(l, r) => denote(m, l, v).intersect(denote(m, r, v)),
        Formula::Or(l, r) => denote(m, l, v).union(denote(m, r, v)),
        Formula::IntImp(l, r) => intuitionistic_imp(m, denote(m, l, v), denote(m, r, v)),
        Formula::ClsImp(l, r) => classical_imp(m, v, denote(m, l, v), denote(m, r, v)),
        Formula::Nec(a) => {
            if denote(m, a, v) == m.all() {
                m.all()
            } else {
                WorldSet::EMPTY
            }
        }
    }
}

/// The set of worlds where `f` is true under `v`.
pub fn truth_set(m: &KripkeModel, f: &Formula, v: SemanticsVariant) -> Result<WorldSet, EvalError> {
    check(m, f, v)?;
    Ok(denote(m, f, v))
}

pub fn evaluate(m: &KripkeModel, w: World, f: &Formula, v: SemanticsVariant) -> Result<bool, EvalError> {
    if w.0 >= m.len() {
        return Err(EvalError::NoSuchWorld(w.0));
    }
    Ok(truth_set(m, f, v)?.contains(w))
}

pub fn holds_everywhere(m: &KripkeModel, f: &Formula, v: SemanticsVariant) -> Result<bool, EvalError> {
    Ok(truth_set(m, f, v)? == m.all())
}

/// The first world witnessing that `premises ⊭ conclusion` on `m`, if any.
///
/// For at-base variants on a model with a base this is the base itself. On a
/// base-free model an at-base variant is tested pointwise at every world.
pub fn refuting_world(
    m: &KripkeModel,
    premises: &[Formula],
    conclusion: &Formula,
    v: SemanticsVariant,
) -> Result<Option<World>, EvalError> {
    let mut prem = m.all();
    for p in premises {
        prem = prem.intersect(truth_set(m, p, v)?);
    }
    let concl = truth_set(m, conclusion, v)?;
    let all = m.all();
    Ok(match (v.consequence_mode(), m.base()) {
        (ConsequenceMode::AtBase, Some(g)) => (prem.contains(g) && !concl.contains(g)).then_some(g),
        (ConsequenceMode::AtBase, None) => WorldSet(prem.0 & !concl.0).iter().next(),
        (ConsequenceMode::Global, _) => {
            if prem == all {
                WorldSet(all.0 & !concl.0).iter().next()
            } else {
                None
            }
        }
    })
}

/// The variant's consequence test on this single model.
pub fn consequence_on_model(
    m: &KripkeModel,
    premises: &[Formula],
    conclusion: &Formula,
    v: SemanticsVariant,
) -> Result<bool, EvalError> {
    Ok(refuting_world(m, premises, conclusion, v)?.is_none())
}

/// Outcome of a persistence check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Persistence {
    Ok,
    /// `f` true at `.0`, false at `.1`, and `.0 ≤ .1`.
    Violated(World, World),
}

pub fn check_persistence(m: &KripkeModel, f: &Formula, v: SemanticsVariant) -> Result<Persistence, EvalError> {
    let set = truth_set(m, f, v)?;
    Ok(match m.upset_violation(set) {
        Some((a, b)) => Persistence::Violated(a, b),
        None => Persistence::Ok,
    })
}
