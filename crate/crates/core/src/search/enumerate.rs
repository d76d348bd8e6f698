use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use thiserror::Error;

use super::frames::{frames_up_to, Frame, MAX_FRAME_SIZE};
use crate::semantics::{refuting_world, EvalError, KripkeModel, SemanticsVariant, World, WorldSet};
use crate::syntax::{Atom, Formula};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_worlds: usize,
    /// Atoms the valuations range over, first atom varying slowest.
    /// Empty means the atoms of the query.
    pub atoms: Vec<Atom>,
    /// Rooted: only frames with a least point, which becomes the base.
    /// Unrooted: every frame, no base.
    pub rooted: bool,
    pub variant: SemanticsVariant,
    pub classical_atoms: BTreeSet<Atom>,
}

impl SearchBounds {
    pub fn new(variant: SemanticsVariant) -> Self {
        SearchBounds {
            max_worlds: 3,
            atoms: Vec::new(),
            rooted: variant.requires_base(),
            variant,
            classical_atoms: BTreeSet::new(),
        }
    }

    pub fn max_worlds(mut self, n: usize) -> Self {
        self.max_worlds = n;
        self
    }

    pub fn rooted(mut self, rooted: bool) -> Self {
        self.rooted = rooted;
        self
    }

    pub fn atoms<I, S>(mut self, atoms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        self.atoms = atoms.into_iter().map(Atom::new).collect();
        self
    }

    pub fn classical<I, S>(mut self, atoms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        self.classical_atoms = atoms.into_iter().map(Atom::new).collect();
        self
    }

    fn check(&self) -> Result<(), SearchError> {
        if self.max_worlds == 0 || self.max_worlds > MAX_FRAME_SIZE {
            return Err(SearchError::Bound(self.max_worlds));
        }
        if self.variant.requires_base() && !self.rooted {
            return Err(SearchError::NeedsRoot(self.variant));
        }
        Ok(())
    }

    fn with_default_atoms<'a>(&self, formulas: impl IntoIterator<Item = &'a Formula>) -> SearchBounds {
        let mut b = self.clone();
        if b.atoms.is_empty() {
            let set: BTreeSet<Atom> = formulas.into_iter().flat_map(|f| f.atoms()).collect();
            b.atoms = set.into_iter().collect();
        }
        b
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("max_worlds must be between 1 and {MAX_FRAME_SIZE}, got {0}")]
    Bound(usize),
    #[error("variant {0} needs rooted models")]
    NeedsRoot(SemanticsVariant),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchResult {
    ValidUpToBound,
    Countermodel(KripkeModel, World),
}

impl SearchResult {
    pub fn is_valid(&self) -> bool {
        matches!(self, SearchResult::ValidUpToBound)
    }

    pub fn countermodel(&self) -> Option<(&KripkeModel, World)> {
        match self {
            SearchResult::Countermodel(m, w) => Some((m, *w)),
            SearchResult::ValidUpToBound => None,
        }
    }
}

fn admissible_frames(b: &SearchBounds) -> Vec<Frame> {
    frames_up_to(b.max_worlds).into_iter().filter(|f| !b.rooted || f.least().is_some()).collect()
}

/// All models over one frame, in odometer order (last coordinate fastest,
/// the ⊥ entry after every atom).
pub fn frame_models(frame: &Frame, b: &SearchBounds) -> Vec<KripkeModel> {
    let all = frame.all();
    let base = if b.rooted { frame.least() } else { None };
    let upsets = frame.upsets();
    let constant = [WorldSet::EMPTY, all];
    let mut choices: Vec<&[WorldSet]> = b
        .atoms
        .iter()
        .map(|a| if b.classical_atoms.contains(a) && b.variant.is_cipc() { &constant[..] } else { &upsets[..] })
        .collect();
    let bot_choices: Vec<WorldSet> = match b.variant {
        SemanticsVariant::Mpc => upsets.clone(),
        SemanticsVariant::SBotW => {
            let g = base.expect("rooted");
            upsets.iter().copied().filter(|s| !s.contains(g)).collect()
        }
        _ => vec![WorldSet::EMPTY],
    };
    choices.push(&bot_choices);
    let names: Vec<String> = (0..frame.len()).map(|i| format!("w{i}")).collect();
    let classical: BTreeSet<Atom> = if b.variant.is_cipc() { b.classical_atoms.clone() } else { BTreeSet::new() };

    let mut out = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        let valuation: BTreeMap<Atom, WorldSet> = b
            .atoms
            .iter()
            .enumerate()
            .map(|(k, a)| (a.clone(), choices[k][idx[k]]))
            .filter(|(_, s)| !s.is_empty())
            .collect();
        let bot = bot_choices[idx[choices.len() - 1]];
        out.push(KripkeModel::from_parts(names.clone(), frame.up.clone(), base, valuation, bot, classical.clone()));
        let mut k = choices.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Every model within the bounds, frames by size then canonical order.
pub fn enumerate_models(b: &SearchBounds) -> Result<impl Iterator<Item = KripkeModel> + '_, SearchError> {
    b.check()?;
    Ok(admissible_frames(b).into_iter().flat_map(move |f| frame_models(&f, b)))
}

pub fn bounded_valid(f: &Formula, b: &SearchBounds) -> Result<SearchResult, SearchError> {
    bounded_consequence(&[], f, b)
}

pub fn bounded_consequence(premises: &[Formula], conclusion: &Formula, b: &SearchBounds) -> Result<SearchResult, SearchError> {
    bounded_consequence_jobs(premises, conclusion, b, 1)
}

/// As [`bounded_consequence`], with the frames spread over `jobs` threads.
/// The answer is the first countermodel in enumeration order whatever `jobs` is.
pub fn bounded_consequence_jobs(
    premises: &[Formula],
    conclusion: &Formula,
    b: &SearchBounds,
    jobs: usize,
) -> Result<SearchResult, SearchError> {
    b.check()?;
    let b = b.with_default_atoms(premises.iter().chain([conclusion]));
    // surface language errors before searching
    let probe = frame_models(&admissible_frames(&b)[0], &b).swap_remove(0);
    refuting_world(&probe, premises, conclusion, b.variant)?;

    let scan = |f: &Frame| -> Option<(KripkeModel, World)> {
        frame_models(f, &b).into_iter().find_map(|m| {
            let w = refuting_world(&m, premises, conclusion, b.variant).expect("checked on probe")?;
            Some((m, w))
        })
    };
    let frames = admissible_frames(&b);
    let found = if jobs <= 1 {
        frames.iter().find_map(scan)
    } else {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
        pool.install(|| frames.par_iter().find_map_first(scan))
    };
    Ok(match found {
        Some((m, w)) => SearchResult::Countermodel(m, w),
        None => SearchResult::ValidUpToBound,
    })
}
