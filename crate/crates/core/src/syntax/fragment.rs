use std::fmt;

use super::formula::{Connective, Formula};

/// A sublanguage: which connectives may occur, and whether ⊥ and □ are allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LanguageFragment {
    pub name: &'static str,
    pub and: bool,
    pub or: bool,
    pub int_imp: bool,
    pub cls_imp: bool,
    pub bottom: bool,
    pub nec: bool,
}

const fn frag(
    name: &'static str,
    and: bool,
    or: bool,
    int_imp: bool,
    cls_imp: bool,
    bottom: bool,
    nec: bool,
) -> LanguageFragment {
    LanguageFragment { name, and, or, int_imp, cls_imp, bottom, nec }
}

impl LanguageFragment {
    /// ∧, ∨, →
    pub const L: Self = frag("L", true, true, true, false, false, false);
    /// ∧, →
    pub const L_MINUS: Self = frag("L-", true, false, true, false, false, false);
    /// ∧, ∨, →, ⊃
    pub const L_SUP: Self = frag("L_sup", true, true, true, true, false, false);
    /// ∧, ∨, →, ⊥
    pub const L_BOT: Self = frag("L_bot", true, true, true, false, true, false);
    /// ∧, ∨, →, ⊃, ⊥
    pub const L_BOT_SUP: Self = frag("L_bot_sup", true, true, true, true, true, false);
    /// ∧, →, ⊃, ⊥ (disjunction-free)
    pub const L_MINUS_BOT_SUP: Self = frag("L-_bot_sup", true, false, true, true, true, false);
    /// ∧, ∨, →, ⊥, □
    pub const L_BOT_BOX: Self = frag("L_bot_box", true, true, true, false, true, true);
    /// →, ⇒ only
    pub const CIPC: Self = frag("CIPC", false, false, true, true, false, false);
    /// Everything.
    pub const FULL: Self = frag("full", true, true, true, true, true, true);

    pub const NAMED: [(&'static str, Self); 9] = [
        ("l", Self::L),
        ("l-minus", Self::L_MINUS),
        ("l-sup", Self::L_SUP),
        ("l-bot", Self::L_BOT),
        ("l-bot-sup", Self::L_BOT_SUP),
        ("l-minus-bot-sup", Self::L_MINUS_BOT_SUP),
        ("l-bot-box", Self::L_BOT_BOX),
        ("cipc", Self::CIPC),
        ("full", Self::FULL),
    ];

    pub fn from_name(name: &str) -> Option<Self> {
        Self::NAMED.iter().find(|(n, _)| *n == name).map(|(_, f)| *f)
    }

    pub fn allows(&self, c: Connective) -> bool {
        match c {
            Connective::And => self.and,
            Connective::Or => self.or,
            Connective::IntImp => self.int_imp,
            Connective::ClsImp => self.cls_imp,
            Connective::Nec => self.nec,
        }
    }

    pub fn connectives(&self) -> Vec<Connective> {
        Connective::ALL.into_iter().filter(|c| self.allows(*c)).collect()
    }

    pub fn is_subset_of(&self, other: &LanguageFragment) -> bool {
        Connective::ALL.iter().all(|c| !self.allows(*c) || other.allows(*c))
            && (!self.bottom || other.bottom)
    }

    /// First offending symbol in pre-order, if any.
    pub fn violation(&self, f: &Formula) -> Option<&'static str> {
        match f {
            Formula::Atom(_) => None,
            Formula::Bottom => (!self.bottom).then_some("bot"),
            _ => {
                let c = f.connective().expect("compound");
                if !self.allows(c) {
                    return Some(c.symbol());
                }
                match f {
                    Formula::Nec(a) => self.violation(a),
                    _ => {
                        let (l, r) = f.binary_parts().expect("binary");
                        self.violation(l).or_else(|| self.violation(r))
                    }
                }
            }
        }
    }
}

impl fmt::Display for LanguageFragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)
    }
}

/// True iff every connective of `f` (and ⊥, □) is allowed by `frag`.
pub fn check_fragment(f: &Formula, frag: &LanguageFragment) -> bool {
    frag.violation(f).is_none()
}
