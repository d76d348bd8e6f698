//! A deliberately naive evaluator used as an independent oracle: it reads
//! the JSON model description directly, closes the order by iterating to a
//! fixpoint, and evaluates one world at a time by recursion on the truth
//! clauses. Nothing here shares code with the library's evaluator.

#![allow(dead_code)]

use std::collections::BTreeSet;

use mixlogic::semantics::{ModelDescription, SemanticsVariant};
use mixlogic::syntax::Formula;

pub struct Naive {
    pub worlds: Vec<String>,
    le: BTreeSet<(usize, usize)>,
    base: Option<usize>,
    true_at: Vec<BTreeSet<String>>,
    bot: BTreeSet<usize>,
}

impl Naive {
    pub fn new(d: &ModelDescription) -> Self {
        let idx = |n: &String| d.worlds.iter().position(|w| w == n).expect("known world");
        let n = d.worlds.len();
        let mut le: BTreeSet<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
        le.extend(d.order.iter().map(|(a, b)| (idx(a), idx(b))));
        loop {
            let extra: Vec<(usize, usize)> = le
                .iter()
                .flat_map(|&(a, b)| le.iter().filter(move |&&(c, _)| c == b).map(move |&(_, e)| (a, e)))
                .filter(|p| !le.contains(p))
                .collect();
            if extra.is_empty() {
                break;
            }
            le.extend(extra);
        }
        let mut true_at = vec![BTreeSet::new(); n];
        for (w, atoms) in &d.valuation {
            true_at[idx(w)].extend(atoms.iter().cloned());
        }
        Naive {
            worlds: d.worlds.clone(),
            le,
            base: d.base.as_ref().map(idx),
            true_at,
            bot: d.bot_true_at.iter().map(idx).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.worlds.len()
    }

    pub fn index(&self, name: &str) -> usize {
        self.worlds.iter().position(|w| w == name).expect("known world")
    }

    fn above(&self, w: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&v| self.le.contains(&(w, v)))
    }

    fn below(&self, w: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&v| self.le.contains(&(v, w)))
    }

    pub fn eval(&self, w: usize, f: &Formula, v: SemanticsVariant) -> bool {
        use SemanticsVariant::*;
        match f {
            Formula::Atom(a) => self.true_at[w].contains(a.name()),
            Formula::Bottom => matches!(v, SBotW | Mpc) && self.bot.contains(&w),
            Formula::And(a, b) => self.eval(w, a, v) && self.eval(w, b, v),
            Formula::Or(a, b) => self.eval(w, a, v) || self.eval(w, b, v),
            Formula::IntImp(a, b) => self.above(w).all(|u| !self.eval(u, a, v) || self.eval(u, b, v)),
            Formula::Nec(a) => (0..self.len()).all(|u| self.eval(u, a, v)),
            Formula::ClsImp(a, b) => match v {
                S | SBotW | CipcB => {
                    let g = self.base.expect("base");
                    !self.eval(g, a, v) || self.eval(w, b, v)
                }
                T => {
                    let g = self.base.expect("base");
                    !self.eval(g, a, v) || self.eval(g, b, v)
                }
                SMinusBot | CipcC => (0..self.len()).any(|u| !self.eval(u, a, v)) || self.eval(w, b, v),
                CipcA => self.below(w).any(|u| !self.eval(u, a, v) || self.eval(u, b, v)),
                L4 | Mpc => panic!("no classical conditional in {v}"),
            },
        }
    }

    /// Whether `f` is valid on this model under the variant's notion of
    /// validity: at the base for base-reading variants, else everywhere.
    pub fn valid(&self, f: &Formula, v: SemanticsVariant) -> bool {
        use SemanticsVariant::*;
        match (v, self.base) {
            (L4 | Mpc | SMinusBot, _) | (_, None) => (0..self.len()).all(|w| self.eval(w, f, v)),
            (_, Some(g)) => self.eval(g, f, v),
        }
    }
}

/// Parses a witness object `{"formula", "world", "model"}` and confirms the
/// formula fails at the named world.
pub fn refutes(witness: &serde_json::Value, v: SemanticsVariant) -> bool {
    let d: ModelDescription = serde_json::from_value(witness["model"].clone()).expect("model json");
    let f = mixlogic::syntax::parse_formula(witness["formula"].as_str().unwrap(), &mixlogic::syntax::LanguageFragment::FULL)
        .expect("formula");
    let m = Naive::new(&d);
    !m.eval(m.index(witness["world"].as_str().unwrap()), &f, v) && !m.valid(&f, v)
}
