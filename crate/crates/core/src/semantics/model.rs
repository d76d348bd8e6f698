use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::SemanticsVariant;
use crate::syntax::Atom;

/// Models are limited to this many worlds so that truth sets fit in a `u64`.
pub const MAX_WORLDS: usize = 64;

/// Index of a world inside a [`KripkeModel`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct World(pub usize);

/// A set of worlds as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WorldSet(pub u64);

impl WorldSet {
    pub const EMPTY: WorldSet = WorldSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            WorldSet(u64::MAX)
        } else {
            WorldSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(w: World) -> Self {
        WorldSet(1 << w.0)
    }

    pub fn contains(self, w: World) -> bool {
        self.0 >> w.0 & 1 == 1
    }

    pub fn insert(&mut self, w: World) {
        self.0 |= 1 << w.0;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: WorldSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, o: WorldSet) -> Self {
        WorldSet(self.0 | o.0)
    }

    pub fn intersect(self, o: WorldSet) -> Self {
        WorldSet(self.0 & o.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = World> {
        (0..64).filter(move |i| self.0 >> i & 1 == 1).map(World)
    }
}

impl fmt::Debug for WorldSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|w| w.0)).finish()
    }
}

/// The JSON model format. `order` lists generators of the preorder;
/// reflexive and transitive closure is computed on build.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelDescription {
    pub worlds: Vec<String>,
    #[serde(default)]
    pub order: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<String>,
    #[serde(default)]
    pub valuation: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub bot_true_at: Vec<String>,
    #[serde(default)]
    pub classical_atoms: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("a model needs at least one world")]
    NoWorlds,
    #[error("models are limited to {MAX_WORLDS} worlds")]
    TooManyWorlds,
    #[error("duplicate world `{0}`")]
    DuplicateWorld(String),
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
    #[error("invalid atom name `{0}`")]
    BadAtom(String),
    #[error("variant {0} requires a base state")]
    MissingBase(SemanticsVariant),
    #[error("base `{base}` is not below `{world}`")]
    NonLeastBase { base: String, world: String },
    #[error("persistence fails for `{atom}`: true at `{from}`, false at `{to}` although {from} <= {to}")]
    Persistence { from: String, to: String, atom: String },
    #[error("bot_true_at is only meaningful for variants mpc and sbot-w, not {0}")]
    BottomNotAllowed(SemanticsVariant),
    #[error("bot is true at the base `{0}`")]
    BottomAtBase(String),
    #[error("classical atom `{0}` is neither true everywhere nor nowhere")]
    NonConstantClassical(String),
}

/// A finite Kripke model. The order is stored as its reflexive–transitive
/// closure in the form of up-sets and down-sets per world.
#[derive(Clone, PartialEq, Eq)]
pub struct KripkeModel {
    worlds: Vec<String>,
    up: Vec<WorldSet>,
    down: Vec<WorldSet>,
    base: Option<World>,
    valuation: BTreeMap<Atom, WorldSet>,
    bot: WorldSet,
    classical_atoms: BTreeSet<Atom>,
}

fn valid_atom(name: &str) -> bool {
    let mut cs = name.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_lowercase() || c.is_ascii_uppercase())
        && cs.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
        && name != "bot"
}

fn closure(n: usize, pairs: &[(usize, usize)]) -> Vec<WorldSet> {
    let mut up: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    for &(a, b) in pairs {
        up[a] |= 1 << b;
    }
    // Warshall
    for k in 0..n {
        for i in 0..n {
            if up[i] >> k & 1 == 1 {
                up[i] |= up[k];
            }
        }
    }
    up.into_iter().map(WorldSet).collect()
}

fn downs(up: &[WorldSet]) -> Vec<WorldSet> {
    let n = up.len();
    (0..n)
        .map(|j| {
            let mut d = WorldSet::EMPTY;
            for (i, u) in up.iter().enumerate() {
                if u.contains(World(j)) {
                    d.insert(World(i));
                }
            }
            d
        })
        .collect()
}

/// Builds and validates a model for `variant`.
pub fn build_model(desc: &ModelDescription, variant: SemanticsVariant) -> Result<KripkeModel, ModelError> {
    let m = KripkeModel::from_description_unvalidated(desc)?;
    m.validate(variant)?;
    Ok(m)
}

impl KripkeModel {
    /// Assembles a model without checking persistence or base conditions.
    /// Name resolution and atom syntax are still checked.
    pub fn from_description_unvalidated(desc: &ModelDescription) -> Result<Self, ModelError> {
        let n = desc.worlds.len();
        if n == 0 {
            return Err(ModelError::NoWorlds);
        }
        if n > MAX_WORLDS {
            return Err(ModelError::TooManyWorlds);
        }
        let mut index = BTreeMap::new();
        for (i, w) in desc.worlds.iter().enumerate() {
            if index.insert(w.as_str(), i).is_some() {
                return Err(ModelError::DuplicateWorld(w.clone()));
            }
        }
        let lookup = |w: &String| index.get(w.as_str()).copied().ok_or_else(|| ModelError::UnknownWorld(w.clone()));
        let mut pairs = Vec::new();
        for (a, b) in &desc.order {
            pairs.push((lookup(a)?, lookup(b)?));
        }
        let up = closure(n, &pairs);
        let base = desc.base.as_ref().map(lookup).transpose()?.map(World);
        let mut valuation: BTreeMap<Atom, WorldSet> = BTreeMap::new();
        for (w, atoms) in &desc.valuation {
            let wi = World(lookup(w)?);
            for a in atoms {
                if !valid_atom(a) {
                    return Err(ModelError::BadAtom(a.clone()));
                }
                valuation.entry(Atom::new(a)).or_default().insert(wi);
            }
        }
        let mut bot = WorldSet::EMPTY;
        for w in &desc.bot_true_at {
            bot.insert(World(lookup(w)?));
        }
        let mut classical_atoms = BTreeSet::new();
        for a in &desc.classical_atoms {
            if !valid_atom(a) {
                return Err(ModelError::BadAtom(a.clone()));
            }
            classical_atoms.insert(Atom::new(a));
        }
        Ok(KripkeModel { worlds: desc.worlds.clone(), down: downs(&up), up, base, valuation, bot, classical_atoms })
    }

    /// Direct constructor for already-closed orders, used by enumeration.
    pub(crate) fn from_parts(
        worlds: Vec<String>,
        up: Vec<WorldSet>,
        base: Option<World>,
        valuation: BTreeMap<Atom, WorldSet>,
        bot: WorldSet,
        classical_atoms: BTreeSet<Atom>,
    ) -> Self {
        let down = downs(&up);
        KripkeModel { worlds, up, down, base, valuation, bot, classical_atoms }
    }

    /// Checks every invariant `variant` imposes on its models.
    pub fn validate(&self, variant: SemanticsVariant) -> Result<(), ModelError> {
        let name = |w: World| self.worlds[w.0].clone();
        if variant.requires_base() && self.base.is_none() {
            return Err(ModelError::MissingBase(variant));
        }
        if let Some(g) = self.base {
            if let Some(w) = self.all().iter().find(|w| !self.up[g.0].contains(*w)) {
                return Err(ModelError::NonLeastBase { base: name(g), world: name(w) });
            }
        }
        for (atom, set) in &self.valuation {
            if let Some((a, b)) = self.upset_violation(*set) {
                return Err(ModelError::Persistence { from: name(a), to: name(b), atom: atom.to_string() });
            }
        }
        if !self.bot.is_empty() {
            if !matches!(variant, SemanticsVariant::Mpc | SemanticsVariant::SBotW) {
                return Err(ModelError::BottomNotAllowed(variant));
            }
            if let Some((a, b)) = self.upset_violation(self.bot) {
                return Err(ModelError::Persistence { from: name(a), to: name(b), atom: "bot".into() });
            }
        }
        if variant == SemanticsVariant::SBotW {
            let g = self.base.expect("checked above");
            if self.bot.contains(g) {
                return Err(ModelError::BottomAtBase(name(g)));
            }
        }
        if variant.is_cipc() {
            for a in &self.classical_atoms {
                let s = self.atom_set(a);
                if !(s.is_empty() || s == self.all()) {
                    return Err(ModelError::NonConstantClassical(a.to_string()));
                }
            }
        }
        Ok(())
    }

    /// First pair `(a, b)` with `a ≤ b`, `a ∈ set`, `b ∉ set`.
    pub fn upset_violation(&self, set: WorldSet) -> Option<(World, World)> {
        for a in set.iter() {
            let missing = WorldSet(self.up[a.0].0 & !set.0);
            if let Some(b) = missing.iter().next() {
                return Some((a, b));
            }
        }
        None
    }

    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.worlds.is_empty()
    }

    pub fn all(&self) -> WorldSet {
        WorldSet::full(self.worlds.len())
    }

    pub fn worlds(&self) -> impl Iterator<Item = World> {
        (0..self.worlds.len()).map(World)
    }

    pub fn world_name(&self, w: World) -> &str {
        &self.worlds[w.0]
    }

    pub fn world(&self, name: &str) -> Option<World> {
        self.worlds.iter().position(|w| w == name).map(World)
    }

    pub fn base(&self) -> Option<World> {
        self.base
    }

    /// `{v : w ≤ v}`
    pub fn up(&self, w: World) -> WorldSet {
        self.up[w.0]
    }

    /// `{v : v ≤ w}`
    pub fn down(&self, w: World) -> WorldSet {
        self.down[w.0]
    }

    pub fn le(&self, a: World, b: World) -> bool {
        self.up[a.0].contains(b)
    }

    pub fn atom_set(&self, a: &Atom) -> WorldSet {
        self.valuation.get(a).copied().unwrap_or_default()
    }

    pub fn bot_set(&self) -> WorldSet {
        self.bot
    }

    pub fn valuation(&self) -> &BTreeMap<Atom, WorldSet> {
        &self.valuation
    }

    pub fn classical_atoms(&self) -> &BTreeSet<Atom> {
        &self.classical_atoms
    }

    pub fn with_classical_atoms(mut self, atoms: BTreeSet<Atom>) -> Self {
        self.classical_atoms = atoms;
        self
    }

    /// Renders back to the JSON format. `order` lists every non-reflexive
    /// pair of the closure.
    pub fn to_description(&self) -> ModelDescription {
        let name = |w: World| self.worlds[w.0].clone();
        let mut order = Vec::new();
        for a in self.worlds() {
            for b in self.up(a).iter() {
                if a != b {
                    order.push((name(a), name(b)));
                }
            }
        }
        let mut valuation = BTreeMap::new();
        for w in self.worlds() {
            let atoms: Vec<String> = self
                .valuation
                .iter()
                .filter(|(_, s)| s.contains(w))
                .map(|(a, _)| a.to_string())
                .collect();
            valuation.insert(name(w), atoms);
        }
        ModelDescription {
            worlds: self.worlds.clone(),
            order,
            base: self.base.map(name),
            valuation,
            bot_true_at: self.bot.iter().map(name).collect(),
            classical_atoms: self.classical_atoms.iter().map(|a| a.to_string()).collect(),
        }
    }

    /// Structural isomorphism: a bijection of worlds preserving order, base,
    /// ⊥ entries and the truth set of every atom.
    pub fn is_isomorphic(&self, other: &KripkeModel) -> bool {
        let n = self.len();
        if n != other.len() || n > 8 {
            return false;
        }
        let atoms: BTreeSet<&Atom> = self.valuation.keys().chain(other.valuation.keys()).collect();
        let mut perm: Vec<usize> = (0..n).collect();
        let image = |perm: &[usize], s: WorldSet| {
            let mut out = WorldSet::EMPTY;
            for w in s.iter() {
                out.insert(World(perm[w.0]));
            }
            out
        };
        loop {
            let ok = (0..n).all(|i| image(&perm, self.up[i]) == other.up[perm[i]])
                && self.base.map(|b| World(perm[b.0])) == other.base
                && image(&perm, self.bot) == other.bot
                && atoms.iter().all(|a| image(&perm, self.atom_set(a)) == other.atom_set(a));
            if ok {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl fmt::Debug for KripkeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(&self.to_description()).map_err(|_| fmt::Error)?)
    }
}

impl fmt::Display for KripkeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |w: World| self.worlds[w.0].as_str();
        write!(f, "worlds {{{}}}", self.worlds.join(", "))?;
        if let Some(g) = self.base {
            write!(f, ", base {}", name(g))?;
        }
        let mut rel = Vec::new();
        for a in self.worlds() {
            for b in self.up(a).iter() {
                if a != b {
                    rel.push(format!("{}<={}", name(a), name(b)));
                }
            }
        }
        write!(f, ", order [{}]", rel.join(", "))?;
        for w in self.worlds() {
            let mut t: Vec<String> =
                self.valuation.iter().filter(|(_, s)| s.contains(w)).map(|(a, _)| a.to_string()).collect();
            if self.bot.contains(w) {
                t.push("bot".into());
            }
            write!(f, "; {}: {{{}}}", name(w), t.join(", "))?;
        }
        if !self.classical_atoms.is_empty() {
            let c: Vec<String> = self.classical_atoms.iter().map(|a| a.to_string()).collect();
            write!(f, "; classical {{{}}}", c.join(", "))?;
        }
        Ok(())
    }
}
