//! The three-valued matrix over `{1, i, 0}` read off the two-world chain.
//!
//! A value records truth at the base `g` and at the top world `w` of the chain
//! `g ≤ w`: `1` is true at both, `i` true only at `w`, `0` true at neither.
//! Only `1` is designated.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::semantics::{build_model, evaluate, ModelDescription, SemanticsVariant, World};
use crate::syntax::{Atom, Formula, LanguageFragment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ThreeValue {
    One,
    I,
    Zero,
}

impl ThreeValue {
    /// Enumeration and tie-break order: `1 < i < 0`.
    pub const ALL: [ThreeValue; 3] = [ThreeValue::One, ThreeValue::I, ThreeValue::Zero];

    fn idx(self) -> usize {
        self as usize
    }

    /// (true at g, true at w) on the chain model.
    pub fn chain_encoding(self) -> (bool, bool) {
        match self {
            ThreeValue::One => (true, true),
            ThreeValue::I => (false, true),
            ThreeValue::Zero => (false, false),
        }
    }

    /// Inverse of [`chain_encoding`](Self::chain_encoding); `(true, false)`
    /// breaks persistence and has no value.
    pub fn from_chain(at_g: bool, at_w: bool) -> Option<Self> {
        match (at_g, at_w) {
            (true, true) => Some(ThreeValue::One),
            (false, true) => Some(ThreeValue::I),
            (false, false) => Some(ThreeValue::Zero),
            (true, false) => None,
        }
    }
}

impl fmt::Display for ThreeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ThreeValue::One => "1",
            ThreeValue::I => "i",
            ThreeValue::Zero => "0",
        })
    }
}

pub type ThreeValuedAssignment = BTreeMap<Atom, ThreeValue>;

use ThreeValue::{One as O, Zero as Z, I};

// rows: left operand, columns: right operand, both in order 1, i, 0
const AND: [[ThreeValue; 3]; 3] = [[O, I, Z], [I, I, Z], [Z, Z, Z]];
const OR: [[ThreeValue; 3]; 3] = [[O, O, O], [O, I, I], [O, I, Z]];
const SUP: [[ThreeValue; 3]; 3] = [[O, I, Z], [O, O, O], [O, O, O]];
const IMP: [[ThreeValue; 3]; 3] = [[O, I, Z], [O, O, Z], [O, O, O]];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Matrix3Error {
    #[error("`{0}` has no three-valued table")]
    OutsideLanguage(String),
    #[error("atom `{0}` has no value in the assignment")]
    Unassigned(Atom),
}

fn check_language(f: &Formula) -> Result<(), Matrix3Error> {
    match LanguageFragment::L_SUP.violation(f) {
        Some(c) => Err(Matrix3Error::OutsideLanguage(c.to_string())),
        None => Ok(()),
    }
}

fn eval_inner(f: &Formula, a: &ThreeValuedAssignment) -> Result<ThreeValue, Matrix3Error> {
    let bin = |t: &[[ThreeValue; 3]; 3], l: &Formula, r: &Formula| -> Result<ThreeValue, Matrix3Error> {
        Ok(t[eval_inner(l, a)?.idx()][eval_inner(r, a)?.idx()])
    };
    match f {
        Formula::Atom(p) => a.get(p).copied().ok_or_else(|| Matrix3Error::Unassigned(p.clone())),
        Formula::And(l, r) => bin(&AND, l, r),
        Formula::Or(l, r) => bin(&OR, l, r),
        Formula::ClsImp(l, r) => bin(&SUP, l, r),
        Formula::IntImp(l, r) => bin(&IMP, l, r),
        Formula::Bottom | Formula::Nec(_) => unreachable!("language checked"),
    }
}

/// Value of an `L⊃` formula under the tables.
pub fn eval3(f: &Formula, a: &ThreeValuedAssignment) -> Result<ThreeValue, Matrix3Error> {
    check_language(f)?;
    eval_inner(f, a)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity3 {
    Valid,
    Refuted(ThreeValuedAssignment),
}

/// Every assignment over the given atoms, lexicographic with the first atom
/// most significant and values in the order `1, i, 0`.
pub fn assignments(atoms: &[Atom]) -> impl Iterator<Item = ThreeValuedAssignment> + '_ {
    let total = 3usize.pow(atoms.len() as u32);
    (0..total).map(move |mut code| {
        let mut digits = vec![0; atoms.len()];
        for d in digits.iter_mut().rev() {
            *d = code % 3;
            code /= 3;
        }
        atoms.iter().cloned().zip(digits.into_iter().map(|d| ThreeValue::ALL[d])).collect()
    })
}

/// Validity (value `1` under all assignments), or the least refuting
/// assignment in lexicographic order.
pub fn valid3(f: &Formula) -> Result<Validity3, Matrix3Error> {
    check_language(f)?;
    let atoms: Vec<Atom> = f.atoms().into_iter().collect();
    for a in assignments(&atoms) {
        if eval_inner(f, &a)? != ThreeValue::One {
            return Ok(Validity3::Refuted(a));
        }
    }
    Ok(Validity3::Valid)
}

/// Evaluates `f` on the two-world chain S-model that encodes `a` and checks
/// the resulting pair of truth values decodes to `eval3(f, a)`.
pub fn chain2_correspondence(f: &Formula, a: &ThreeValuedAssignment) -> Result<bool, Matrix3Error> {
    let expected = eval3(f, a)?;
    let mut valuation: BTreeMap<String, Vec<String>> = BTreeMap::new();
    valuation.insert("g".into(), vec![]);
    valuation.insert("w".into(), vec![]);
    for (p, v) in a {
        let (at_g, at_w) = v.chain_encoding();
        if at_g {
            valuation.get_mut("g").unwrap().push(p.to_string());
        }
        if at_w {
            valuation.get_mut("w").unwrap().push(p.to_string());
        }
    }
    let desc = ModelDescription {
        worlds: vec!["g".into(), "w".into()],
        order: vec![("g".into(), "w".into())],
        base: Some("g".into()),
        valuation,
        ..Default::default()
    };
    let m = build_model(&desc, SemanticsVariant::S).expect("chain encoding is persistent");
    let at_g = evaluate(&m, World(0), f, SemanticsVariant::S).expect("L⊃ formula");
    let at_w = evaluate(&m, World(1), f, SemanticsVariant::S).expect("L⊃ formula");
    Ok(ThreeValue::from_chain(at_g, at_w) == Some(expected))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_formula;

    fn f(s: &str) -> Formula {
        parse_formula(s, &LanguageFragment::FULL).unwrap()
    }

    fn asg(pairs: &[(&str, ThreeValue)]) -> ThreeValuedAssignment {
        pairs.iter().map(|(a, v)| (Atom::new(a), *v)).collect()
    }

    #[test]
    fn table_entries() {
        assert_eq!(eval3(&f("p => q"), &asg(&[("p", I), ("q", I)])), Ok(O));
        assert_eq!(eval3(&f("p -> q"), &asg(&[("p", I), ("q", Z)])), Ok(Z));
        for v in ThreeValue::ALL {
            assert_eq!(eval3(&f("p & p"), &asg(&[("p", v)])), Ok(v));
        }
    }

    #[test]
    fn sup_to_imp_is_refuted() {
        assert_eq!(valid3(&f("(p => q) -> (p -> q)")), Ok(Validity3::Refuted(asg(&[("p", I), ("q", Z)]))));
        assert_eq!(valid3(&f("p -> p")), Ok(Validity3::Valid));
    }

    #[test]
    fn first_refutation_matches_brute_force() {
        // brute force over all nine assignments in the documented order
        let g = f("(p => q) -> (p -> q)");
        let mut first = None;
        for vp in ThreeValue::ALL {
            for vq in ThreeValue::ALL {
                let a = asg(&[("p", vp), ("q", vq)]);
                if first.is_none() && eval3(&g, &a).unwrap() != O {
                    first = Some(a);
                }
            }
        }
        assert_eq!(valid3(&g).unwrap(), Validity3::Refuted(first.unwrap()));
    }

    #[test]
    fn rejects_other_languages() {
        assert_eq!(eval3(&f("bot"), &asg(&[])), Err(Matrix3Error::OutsideLanguage("bot".into())));
        assert_eq!(valid3(&f("[]p")), Err(Matrix3Error::OutsideLanguage("[]".into())));
        assert_eq!(eval3(&f("p"), &asg(&[])), Err(Matrix3Error::Unassigned(Atom::new("p"))));
    }

    #[test]
    fn atoms_correspond_by_construction() {
        for v in ThreeValue::ALL {
            assert!(chain2_correspondence(&f("p"), &asg(&[("p", v)])).unwrap());
        }
    }

    #[test]
    fn sup_row_i_matches_chain() {
        for v in ThreeValue::ALL {
            let a = asg(&[("p", I), ("q", v)]);
            assert_eq!(eval3(&f("p => q"), &a), Ok(O));
            assert!(chain2_correspondence(&f("p => q"), &a).unwrap());
        }
    }
}
