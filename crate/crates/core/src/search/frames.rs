//! Preorder frames up to isomorphism.

use crate::semantics::{next_permutation, World, WorldSet};

/// Largest frame size the enumerator accepts; 5 points already give 139
/// classes and 2^20 candidate relations.
pub const MAX_FRAME_SIZE: usize = 5;

/// A finite preorder given by the up-set of each point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub up: Vec<WorldSet>,
}

impl Frame {
    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn all(&self) -> WorldSet {
        WorldSet::full(self.len())
    }

    /// The first point below every other point, if any.
    pub fn least(&self) -> Option<World> {
        let all = self.all();
        (0..self.len()).map(World).find(|w| self.up[w.0] == all)
    }

    /// Every up-closed subset, ascending by bitmask.
    pub fn upsets(&self) -> Vec<WorldSet> {
        let n = self.len();
        (0..1u64 << n)
            .map(WorldSet)
            .filter(|s| s.iter().all(|w| self.up[w.0].is_subset(*s)))
            .collect()
    }

    fn code(&self, perm: &[usize]) -> u64 {
        // row-major adjacency bits of the relabelled relation
        let n = self.len();
        let mut rel = vec![0u64; n];
        for i in 0..n {
            for j in self.up[i].iter() {
                rel[perm[i]] |= 1 << perm[j.0];
            }
        }
        rel.iter().fold(0u64, |acc, row| {
            (0..n).fold(acc, |acc, j| (acc << 1) | (row >> j & 1))
        })
    }
}

fn is_transitive(up: &[u64]) -> bool {
    (0..up.len()).all(|i| (0..up.len()).all(|j| up[i] >> j & 1 == 0 || up[j] & !up[i] == 0))
}

/// Every preorder on exactly `n` labelled points, in the order of the
/// bitmask over off-diagonal pairs.
pub fn labelled_preorders(n: usize) -> Vec<Frame> {
    assert!(n <= MAX_FRAME_SIZE, "frame size {n} exceeds {MAX_FRAME_SIZE}");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let mut up: Vec<u64> = (0..n).map(|i| 1 << i).collect();
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                up[i] |= 1 << j;
            }
        }
        if is_transitive(&up) {
            out.push(Frame { up: up.into_iter().map(WorldSet).collect() });
        }
    }
    out
}

/// One representative per isomorphism class of preorders on `n` points.
///
/// The representative is the labelling with the greatest row-major code, so
/// a least element, when present, is point 0.
pub fn canonical_frames(n: usize) -> Vec<Frame> {
    labelled_preorders(n)
        .into_iter()
        .filter(|f| {
            let own = f.code(&(0..n).collect::<Vec<_>>());
            let mut perm: Vec<usize> = (0..n).collect();
            loop {
                if f.code(&perm) > own {
                    return false;
                }
                if !next_permutation(&mut perm) {
                    return true;
                }
            }
        })
        .collect()
}

/// Canonical frames of size 1 through `max`, smaller frames first.
pub fn frames_up_to(max: usize) -> Vec<Frame> {
    (1..=max).flat_map(canonical_frames).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| canonical_frames(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 9, 33]);
    }

    #[test]
    fn labelled_counts_match_direct_filter() {
        // oracle: test every n×n boolean matrix for reflexivity and transitivity
        for n in 1..=3usize {
            let mut count = 0;
            for m in 0u32..1 << (n * n) {
                let r = |i: usize, j: usize| m >> (i * n + j) & 1 == 1;
                let refl = (0..n).all(|i| r(i, i));
                let trans = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(r(i, j) && r(j, k)) || r(i, k))));
                if refl && trans {
                    count += 1;
                }
            }
            assert_eq!(labelled_preorders(n).len(), count);
        }
    }

    #[test]
    fn rooted_representatives_put_root_first() {
        for f in frames_up_to(4) {
            if let Some(g) = f.least() {
                assert_eq!(g, World(0));
            }
        }
    }

    #[test]
    fn upsets_of_chain() {
        let chain = canonical_frames(2).into_iter().find(|f| f.least().is_some() && f.up[1] != f.all()).unwrap();
        assert_eq!(chain.upsets(), vec![WorldSet(0b00), WorldSet(0b10), WorldSet(0b11)]);
    }
}
