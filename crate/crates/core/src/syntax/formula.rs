use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

/// A propositional variable.
///
/// Names produced by the parser are lowercase identifiers. Schematic proofs
/// additionally use single uppercase letters, which behave as ordinary atoms
/// once frozen into a [`Formula`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: impl AsRef<str>) -> Self {
        Atom(Arc::from(name.as_ref()))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    /// True for names that came from a schema metavariable (`A`, `B`, ...).
    pub fn is_schematic(&self) -> bool {
        self.0.chars().next().is_some_and(|c| c.is_ascii_uppercase())
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Atom {
    fn from(s: &str) -> Self {
        Atom::new(s)
    }
}

/// Formulas over atoms, ⊥, ∧, ∨, → (intuitionistic), ⊃ (classical) and □.
///
/// Negations and the biconditional are abbreviations and have no node of
/// their own; see [`Formula::neg`], [`Formula::eneg`] and [`Formula::iff`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Atom(Atom),
    Bottom,
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    IntImp(Box<Formula>, Box<Formula>),
    ClsImp(Box<Formula>, Box<Formula>),
    Nec(Box<Formula>),
}

/// Connective tags, used for fragment checks and formula-space generation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Connective {
    And,
    Or,
    IntImp,
    ClsImp,
    Nec,
}

impl Connective {
    pub const ALL: [Connective; 5] = [
        Connective::And,
        Connective::Or,
        Connective::IntImp,
        Connective::ClsImp,
        Connective::Nec,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            Connective::And => "&",
            Connective::Or => "|",
            Connective::IntImp => "->",
            Connective::ClsImp => "=>",
            Connective::Nec => "[]",
        }
    }

    pub fn is_binary(self) -> bool {
        !matches!(self, Connective::Nec)
    }

    /// Builds a binary node. Panics for `Nec`.
    pub fn apply2(self, l: Formula, r: Formula) -> Formula {
        match self {
            Connective::And => Formula::and(l, r),
            Connective::Or => Formula::or(l, r),
            Connective::IntImp => Formula::imp(l, r),
            Connective::ClsImp => Formula::sup(l, r),
            Connective::Nec => panic!("[] is unary"),
        }
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl Formula {
    pub fn atom(name: impl AsRef<str>) -> Self {
        Formula::Atom(Atom::new(name))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    /// Intuitionistic conditional `l → r`.
    pub fn imp(l: Formula, r: Formula) -> Self {
        Formula::IntImp(Box::new(l), Box::new(r))
    }

    /// Classical conditional `l ⊃ r`.
    pub fn sup(l: Formula, r: Formula) -> Self {
        Formula::ClsImp(Box::new(l), Box::new(r))
    }

    pub fn nec(inner: Formula) -> Self {
        Formula::Nec(Box::new(inner))
    }

    /// `¬A := A → ⊥`
    #[allow(clippy::should_implement_trait)]
    pub fn neg(inner: Formula) -> Self {
        Formula::imp(inner, Formula::Bottom)
    }

    /// Empirical negation `~A := A ⊃ ⊥`.
    pub fn eneg(inner: Formula) -> Self {
        Formula::sup(inner, Formula::Bottom)
    }

    /// `A ↔ B := (A → B) ∧ (B → A)`
    pub fn iff(l: Formula, r: Formula) -> Self {
        Formula::and(Formula::imp(l.clone(), r.clone()), Formula::imp(r, l))
    }

    /// `⊤ := p → p` for the given atom.
    pub fn top(p: impl AsRef<str>) -> Self {
        Formula::imp(Formula::atom(p.as_ref()), Formula::atom(p))
    }

    pub fn connective(&self) -> Option<Connective> {
        match self {
            Formula::Atom(_) | Formula::Bottom => None,
            Formula::And(..) => Some(Connective::And),
            Formula::Or(..) => Some(Connective::Or),
            Formula::IntImp(..) => Some(Connective::IntImp),
            Formula::ClsImp(..) => Some(Connective::ClsImp),
            Formula::Nec(_) => Some(Connective::Nec),
        }
    }

    /// Operands of a binary node.
    pub fn binary_parts(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::And(l, r) | Formula::Or(l, r) | Formula::IntImp(l, r) | Formula::ClsImp(l, r) => {
                Some((l, r))
            }
            _ => None,
        }
    }

    /// Height of the syntax tree; atoms and ⊥ have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Bottom => 0,
            Formula::Nec(a) => 1 + a.depth(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::IntImp(l, r) | Formula::ClsImp(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Bottom => 1,
            Formula::Nec(a) => 1 + a.size(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::IntImp(l, r) | Formula::ClsImp(l, r) => {
                1 + l.size() + r.size()
            }
        }
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Bottom => {}
            Formula::Nec(a) => a.collect_atoms(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::IntImp(l, r) | Formula::ClsImp(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    pub fn contains_bottom(&self) -> bool {
        match self {
            Formula::Atom(_) => false,
            Formula::Bottom => true,
            Formula::Nec(a) => a.contains_bottom(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::IntImp(l, r) | Formula::ClsImp(l, r) => {
                l.contains_bottom() || r.contains_bottom()
            }
        }
    }

    /// Does `c` occur anywhere in the formula?
    pub fn contains(&self, c: Connective) -> bool {
        if self.connective() == Some(c) {
            return true;
        }
        match self {
            Formula::Atom(_) | Formula::Bottom => false,
            Formula::Nec(a) => a.contains(c),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::IntImp(l, r) | Formula::ClsImp(l, r) => {
                l.contains(c) || r.contains(c)
            }
        }
    }

    /// Rebuilds the formula bottom-up, replacing every atom by `leaf(atom)`.
    pub fn map_atoms(&self, leaf: &mut impl FnMut(&Atom) -> Formula) -> Formula {
        match self {
            Formula::Atom(a) => leaf(a),
            Formula::Bottom => Formula::Bottom,
            Formula::Nec(a) => Formula::nec(a.map_atoms(leaf)),
            Formula::And(l, r) => Formula::and(l.map_atoms(leaf), r.map_atoms(leaf)),
            Formula::Or(l, r) => Formula::or(l.map_atoms(leaf), r.map_atoms(leaf)),
            Formula::IntImp(l, r) => Formula::imp(l.map_atoms(leaf), r.map_atoms(leaf)),
            Formula::ClsImp(l, r) => Formula::sup(l.map_atoms(leaf), r.map_atoms(leaf)),
        }
    }
}

/// Replaces every occurrence of `Atom(p)` in `f` by `b`.
pub fn substitute(f: &Formula, p: &Atom, b: &Formula) -> Formula {
    f.map_atoms(&mut |a| if a == p { b.clone() } else { Formula::Atom(a.clone()) })
}

/// Simultaneous substitution of several atoms.
pub fn substitute_all(f: &Formula, map: &std::collections::BTreeMap<Atom, Formula>) -> Formula {
    f.map_atoms(&mut |a| map.get(a).cloned().unwrap_or_else(|| Formula::Atom(a.clone())))
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render_formula(self))
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}`", super::render_formula(self))
    }
}
