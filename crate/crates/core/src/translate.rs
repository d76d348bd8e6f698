//! Translations between `L⊥⊃` and `L⊥□`, and the model transformations used
//! with the base-free and minimal-logic semantics.

use thiserror::Error;

use crate::semantics::{build_model, KripkeModel, ModelDescription, ModelError, SemanticsVariant, World};
use crate::syntax::{Formula, LanguageFragment};

/// Reserved world id for [`add_base`].
pub const BASE_ID: &str = "g";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TranslationDirection {
    /// `L⊥⊃` to `L⊥□`
    ToBox,
    /// `L⊥□` to `L⊥⊃`
    ToSup,
}

impl TranslationDirection {
    pub fn source(self) -> LanguageFragment {
        match self {
            TranslationDirection::ToBox => LanguageFragment::L_BOT_SUP,
            TranslationDirection::ToSup => LanguageFragment::L_BOT_BOX,
        }
    }

    pub fn target(self) -> LanguageFragment {
        match self {
            TranslationDirection::ToBox => LanguageFragment::L_BOT_BOX,
            TranslationDirection::ToSup => LanguageFragment::L_BOT_SUP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("`{connective}` is outside {fragment}")]
    Fragment { connective: String, fragment: String },
    #[error("the model already has a base state")]
    HasBase,
    #[error("world id `{0}` is reserved for the new base")]
    ReservedId(String),
    #[error("transformation is only defined for variant mpc, not {0}")]
    Variant(SemanticsVariant),
    #[error("no world with index {0}")]
    NoSuchWorld(usize),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Each direction's source fragment lacks the other's connective, so one
/// recursion serves both.
fn go(f: &Formula) -> Formula {
    let rec = |g: &Formula| Box::new(go(g));
    match f {
        Formula::Atom(_) | Formula::Bottom => f.clone(),
        Formula::And(l, r) => Formula::And(rec(l), rec(r)),
        Formula::Or(l, r) => Formula::Or(rec(l), rec(r)),
        Formula::IntImp(l, r) => Formula::IntImp(rec(l), rec(r)),
        // (A⊃B)^□ = □A^□ → B^□
        Formula::ClsImp(l, r) => Formula::imp(Formula::nec(go(l)), go(r)),
        // (□A)^⊃ = (A^⊃ ⊃ ⊥) ⊃ ⊥
        Formula::Nec(a) => Formula::eneg(Formula::eneg(go(a))),
    }
}

pub fn translate(f: &Formula, dir: TranslationDirection) -> Result<Formula, TranslateError> {
    let src = dir.source();
    if let Some(c) = src.violation(f) {
        return Err(TranslateError::Fragment { connective: c.to_string(), fragment: src.to_string() });
    }
    Ok(go(f))
}

/// `()^□`
pub fn box_translate(f: &Formula) -> Result<Formula, TranslateError> {
    translate(f, TranslationDirection::ToBox)
}

/// `()^⊃`
pub fn sup_translate(f: &Formula) -> Result<Formula, TranslateError> {
    translate(f, TranslationDirection::ToSup)
}

/// Adds a new least world `g` to a base-free model. An atom, classical atoms
/// included, is true at `g` iff it is true at every old world; ⊥ stays false
/// at `g`.
pub fn add_base(m: &KripkeModel) -> Result<KripkeModel, TranslateError> {
    if m.base().is_some() {
        return Err(TranslateError::HasBase);
    }
    if m.world(BASE_ID).is_some() {
        return Err(TranslateError::ReservedId(BASE_ID.into()));
    }
    let mut d = m.to_description();
    d.worlds.insert(0, BASE_ID.into());
    for w in m.worlds() {
        d.order.push((BASE_ID.into(), m.world_name(w).into()));
    }
    d.base = Some(BASE_ID.into());
    let everywhere: Vec<String> =
        m.valuation().iter().filter(|(_, s)| **s == m.all()).map(|(a, _)| a.to_string()).collect();
    if !everywhere.is_empty() {
        d.valuation.insert(BASE_ID.into(), everywhere);
    }
    Ok(KripkeModel::from_description_unvalidated(&d)?)
}

fn check_mpc(variant: SemanticsVariant) -> Result<(), TranslateError> {
    if variant != SemanticsVariant::Mpc {
        return Err(TranslateError::Variant(variant));
    }
    Ok(())
}

/// The submodel generated by `w`: the worlds above it, with the order and
/// valuation restricted.
pub fn truncate(m: &KripkeModel, variant: SemanticsVariant, w: World) -> Result<KripkeModel, TranslateError> {
    check_mpc(variant)?;
    if w.0 >= m.len() {
        return Err(TranslateError::NoSuchWorld(w.0));
    }
    let keep = m.up(w);
    let name = |x: World| m.world_name(x).to_string();
    let full = m.to_description();
    let kept = |s: &String| keep.contains(m.world(s).expect("own world"));
    let d = ModelDescription {
        worlds: keep.iter().map(name).collect(),
        order: full.order.into_iter().filter(|(a, b)| kept(a) && kept(b)).collect(),
        base: None,
        valuation: full.valuation.into_iter().filter(|(x, _)| kept(x)).collect(),
        bot_true_at: full.bot_true_at.into_iter().filter(kept).collect(),
        classical_atoms: full.classical_atoms,
    };
    Ok(build_model(&d, variant)?)
}

/// Puts a fresh root below an MPC model, with every atom and ⊥ false there.
/// The result is an S⊥w model whose base is the new root.
pub fn add_fresh_root_mpc(m: &KripkeModel, variant: SemanticsVariant) -> Result<KripkeModel, TranslateError> {
    check_mpc(variant)?;
    let root = (0..).map(|i| format!("r{i}")).find(|n| m.world(n).is_none()).expect("unbounded");
    let mut d = m.to_description();
    d.worlds.insert(0, root.clone());
    for w in m.worlds() {
        d.order.push((root.clone(), m.world_name(w).into()));
    }
    d.base = Some(root);
    Ok(build_model(&d, SemanticsVariant::SBotW)?)
}
