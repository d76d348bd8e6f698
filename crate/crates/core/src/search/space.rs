//! Bounded formula spaces.
//!
//! Depth counts connectives on the longest branch; atoms and ⊥ have depth 0.
//! "Every formula of depth ≤ d" is covered exactly by [`class_representatives`]:
//! formulas are grouped by a caller-supplied key (typically truth sets on a
//! fixed model) and only one representative per key is combined further. When
//! the key of `A ∘ B` is determined by the keys of `A` and `B`, as it is for
//! truth sets, every formula of depth ≤ d shares its key with some
//! representative.

use std::collections::HashSet;
use std::hash::Hash;

use rand::Rng;

use crate::syntax::{Atom, Connective, Formula, LanguageFragment};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaSpace {
    pub atoms: Vec<Atom>,
    pub bottom: bool,
    pub connectives: Vec<Connective>,
}

impl FormulaSpace {
    pub fn new<I, S>(frag: &LanguageFragment, atoms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        FormulaSpace {
            atoms: atoms.into_iter().map(Atom::new).collect(),
            bottom: frag.bottom,
            connectives: frag.connectives(),
        }
    }

    pub fn leaves(&self) -> Vec<Formula> {
        let mut out: Vec<Formula> = self.atoms.iter().cloned().map(Formula::Atom).collect();
        if self.bottom {
            out.push(Formula::Bottom);
        }
        out
    }

    fn combine(&self, prev: &[Formula], fresh_from: usize, mut emit: impl FnMut(Formula)) {
        // only combinations involving something from the newest level are new
        for &c in &self.connectives {
            if c.is_binary() {
                for (i, l) in prev.iter().enumerate() {
                    for (j, r) in prev.iter().enumerate() {
                        if i >= fresh_from || j >= fresh_from {
                            emit(c.apply2(l.clone(), r.clone()));
                        }
                    }
                }
            } else {
                for a in &prev[fresh_from..] {
                    emit(Formula::nec(a.clone()));
                }
            }
        }
    }
}

/// Every formula of depth ≤ `depth`, by level. Grows doubly exponentially;
/// meant for oracles at depth ≤ 2.
pub fn all_formulas(space: &FormulaSpace, depth: usize) -> Vec<Formula> {
    let mut all = space.leaves();
    let mut fresh_from = 0;
    for _ in 0..depth {
        let mut next = Vec::new();
        space.combine(&all, fresh_from, |f| next.push(f));
        fresh_from = all.len();
        all.extend(next);
    }
    all
}

/// One formula per key among all formulas of depth ≤ `depth`, found level by
/// level. Exact whenever `key` is compositional.
pub fn class_representatives<K: Hash + Eq>(space: &FormulaSpace, depth: usize, key: impl Fn(&Formula) -> K) -> Vec<Formula> {
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    for f in space.leaves() {
        if seen.insert(key(&f)) {
            reps.push(f);
        }
    }
    let mut fresh_from = 0;
    for _ in 0..depth {
        let mut next = Vec::new();
        space.combine(&reps, fresh_from, |f| {
            if seen.insert(key(&f)) {
                next.push(f);
            }
        });
        if next.is_empty() {
            break;
        }
        fresh_from = reps.len();
        reps.extend(next);
    }
    reps
}

/// A random formula of depth ≤ `depth`. Each node is a leaf with probability
/// 1/3 (always at depth 0).
pub fn random_formula(space: &FormulaSpace, depth: usize, rng: &mut impl Rng) -> Formula {
    let leaves = space.leaves();
    if depth == 0 || space.connectives.is_empty() || rng.gen_ratio(1, 3) {
        return leaves[rng.gen_range(0..leaves.len())].clone();
    }
    let c = space.connectives[rng.gen_range(0..space.connectives.len())];
    if c.is_binary() {
        let l = random_formula(space, depth - 1, rng);
        let r = random_formula(space, depth - 1, rng);
        c.apply2(l, r)
    } else {
        Formula::nec(random_formula(space, depth - 1, rng))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{build_model, truth_set, ModelDescription, SemanticsVariant};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn level_sizes() {
        let sp = FormulaSpace::new(&LanguageFragment::L_BOT_SUP, ["p", "q"]);
        // 3 leaves; 3 + 4·9; then 39 + 4·(39² − 3²)
        let sizes: Vec<usize> = (0..=2).map(|d| all_formulas(&sp, d).len()).collect();
        assert_eq!(sizes, vec![3, 39, 39 + 4 * (39 * 39 - 9)]);
        assert!(all_formulas(&sp, 2).iter().all(|f| f.depth() <= 2));
        let unique: HashSet<_> = all_formulas(&sp, 2).into_iter().collect();
        assert_eq!(unique.len(), 39 + 4 * (39 * 39 - 9));
    }

    #[test]
    fn representatives_cover_brute_force() {
        let desc = ModelDescription::from_json(
            r#"{"worlds":["g","a","b"],"order":[["g","a"],["g","b"]],"base":"g","valuation":{"a":["p"],"b":["q"]}}"#,
        )
        .unwrap();
        let m = build_model(&desc, SemanticsVariant::S).unwrap();
        let sp = FormulaSpace::new(&LanguageFragment::L_BOT_SUP, ["p", "q"]);
        let key = |f: &Formula| truth_set(&m, f, SemanticsVariant::S).unwrap();
        let reps: HashSet<_> = class_representatives(&sp, 2, key).iter().map(key).collect();
        let brute: HashSet<_> = all_formulas(&sp, 2).iter().map(key).collect();
        assert_eq!(reps, brute);
    }

    #[test]
    fn random_formulas_are_reproducible() {
        let sp = FormulaSpace::new(&LanguageFragment::L_BOT_BOX, ["p"]);
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20).map(|_| random_formula(&sp, 4, &mut rng)).collect::<Vec<_>>()
        };
        assert_eq!(draw(7), draw(7));
        assert!(draw(7).iter().all(|f| f.depth() <= 4 && LanguageFragment::L_BOT_BOX.violation(f).is_none()));
    }
}
