use std::collections::{BTreeMap, BTreeSet};

use super::formula::{substitute_all, Atom, Formula};

/// Metavariable → formula.
pub type Assignment = BTreeMap<Atom, Formula>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SideCondition {
    /// The metavariable must be built from classical atoms using only ⊃.
    Classical(Atom),
    /// The metavariable must be instantiated by an atom.
    Atomic(Atom),
}

/// An axiom schema. Uppercase atoms in `pattern` are metavariables; lowercase
/// atoms are concrete. A schema without metavariables is a single axiom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schema {
    pub name: String,
    pub pattern: Formula,
    pub side_conditions: Vec<SideCondition>,
}

impl Schema {
    pub fn new(name: impl Into<String>, pattern: Formula) -> Self {
        Schema { name: name.into(), pattern, side_conditions: Vec::new() }
    }

    pub fn with_side_condition(mut self, c: SideCondition) -> Self {
        self.side_conditions.push(c);
        self
    }

    pub fn metavariables(&self) -> BTreeSet<Atom> {
        self.pattern.atoms().into_iter().filter(Atom::is_schematic).collect()
    }

    pub fn is_concrete(&self) -> bool {
        self.metavariables().is_empty()
    }

    pub fn instantiate(&self, sigma: &Assignment) -> Formula {
        instantiate(&self.pattern, sigma)
    }

    /// Does `sigma` satisfy every side condition?
    pub fn side_conditions_hold(&self, sigma: &Assignment, classical_atoms: &BTreeSet<Atom>) -> bool {
        self.side_conditions.iter().all(|c| match c {
            SideCondition::Classical(m) => sigma.get(m).is_some_and(|f| is_classical(f, classical_atoms)),
            SideCondition::Atomic(m) => matches!(sigma.get(m), Some(Formula::Atom(_))),
        })
    }
}

/// Replaces metavariables only; concrete atoms are left alone.
pub fn instantiate(pattern: &Formula, sigma: &Assignment) -> Formula {
    let only_meta: Assignment =
        sigma.iter().filter(|(k, _)| k.is_schematic()).map(|(k, v)| (k.clone(), v.clone())).collect();
    substitute_all(pattern, &only_meta)
}

/// Built from classical atoms by means of ⊃ alone.
pub fn is_classical(f: &Formula, classical_atoms: &BTreeSet<Atom>) -> bool {
    match f {
        Formula::Atom(a) => classical_atoms.contains(a),
        Formula::ClsImp(l, r) => is_classical(l, classical_atoms) && is_classical(r, classical_atoms),
        _ => false,
    }
}

fn unify(pattern: &Formula, f: &Formula, sigma: &mut Assignment) -> bool {
    match (pattern, f) {
        (Formula::Atom(m), _) if m.is_schematic() => match sigma.get(m) {
            Some(bound) => bound == f,
            None => {
                sigma.insert(m.clone(), f.clone());
                true
            }
        },
        (Formula::Atom(a), Formula::Atom(b)) => a == b,
        (Formula::Bottom, Formula::Bottom) => true,
        (Formula::Nec(a), Formula::Nec(b)) => unify(a, b, sigma),
        (Formula::And(a1, a2), Formula::And(b1, b2))
        | (Formula::Or(a1, a2), Formula::Or(b1, b2))
        | (Formula::IntImp(a1, a2), Formula::IntImp(b1, b2))
        | (Formula::ClsImp(a1, a2), Formula::ClsImp(b1, b2)) => {
            unify(a1, b1, sigma) && unify(a2, b2, sigma)
        }
        _ => false,
    }
}

/// Matches a schema against a ground formula.
///
/// Returns the unique assignment of metavariables under which the schema
/// instantiates to `f`, provided all side conditions hold.
pub fn match_schema(s: &Schema, f: &Formula, classical_atoms: &BTreeSet<Atom>) -> Option<Assignment> {
    let mut sigma = Assignment::new();
    if !unify(&s.pattern, f, &mut sigma) {
        return None;
    }
    s.side_conditions_hold(&sigma, classical_atoms).then_some(sigma)
}
