//! The heap (position poset) of a word, built one letter at a time.
//!
//! Position `i` lies below position `j > i` when a chain of pairwise
//! non-commuting letters joins them. Commutation-equivalent words are exactly
//! the linear extensions of this poset, so questions about a whole
//! commutation class become questions about one heap.

use fixedbitset::FixedBitSet;

use crate::system::{Bond, CoxeterSystem};
use crate::word::Word;

#[derive(Debug, Clone)]
pub struct Heap<'a> {
    system: &'a CoxeterSystem,
    letters: Vec<usize>,
    /// Positions strictly below each position.
    below: Vec<FixedBitSet>,
    /// Longest chain below each position.
    level: Vec<usize>,
    by_letter: Vec<Vec<usize>>,
    /// Whether pushing this position completed an FC obstruction.
    obstructed: Vec<bool>,
    obstructions: usize,
}

impl<'a> Heap<'a> {
    pub fn new(system: &'a CoxeterSystem) -> Self {
        Heap {
            system,
            letters: Vec::new(),
            below: Vec::new(),
            level: Vec::new(),
            by_letter: vec![Vec::new(); system.rank()],
            obstructed: Vec::new(),
            obstructions: 0,
        }
    }

    pub fn from_word(system: &'a CoxeterSystem, w: &Word) -> Self {
        let mut h = Heap::new(system);
        for x in w.iter() {
            h.push(x);
        }
        h
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn letter(&self, p: usize) -> usize {
        self.letters[p]
    }

    /// Whether position `i` is strictly below position `j`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        i < j && self.below[j].contains(i)
    }

    /// Positions holding `letter`, in increasing order.
    pub fn positions_of(&self, letter: usize) -> &[usize] {
        &self.by_letter[letter]
    }

    /// No FC obstruction: no commutation-equivalent word contains `ss` or a
    /// braid factor of full length.
    pub fn is_fc(&self) -> bool {
        self.obstructions == 0
    }

    /// Appends a letter; returns `false` when it completes an FC obstruction.
    pub fn push(&mut self, a: usize) -> bool {
        let j = self.letters.len();
        let mut below = FixedBitSet::with_capacity(j + 1);
        let mut level = 0;
        for y in 0..self.system.rank() {
            if !self.system.dependent(a, y) {
                continue;
            }
            if let Some(&p) = self.by_letter[y].last() {
                below.union_with(&self.below[p]);
                below.insert(p);
                level = level.max(self.level[p] + 1);
            }
        }
        self.letters.push(a);
        self.below.push(below);
        self.level.push(level);
        self.by_letter[a].push(j);
        let bad = self.completes_obstruction(j);
        self.obstructed.push(bad);
        if bad {
            self.obstructions += 1;
        }
        !bad
    }

    pub fn pop(&mut self) -> Option<usize> {
        let a = self.letters.pop()?;
        self.below.pop();
        self.level.pop();
        self.by_letter[a].pop();
        if self.obstructed.pop() == Some(true) {
            self.obstructions -= 1;
        }
        Some(a)
    }

    /// Whether nothing outside `chain` lies between its ends.
    ///
    /// `chain` is a list of positions in increasing order, forming a chain.
    pub fn is_convex_chain(&self, chain: &[usize]) -> bool {
        let (first, last) = (chain[0], chain[chain.len() - 1]);
        self.below[last]
            .ones()
            .filter(|&q| q > first && chain.binary_search(&q).is_err())
            .all(|q| !self.below[q].contains(first))
    }

    fn completes_obstruction(&self, j: usize) -> bool {
        let a = self.letters[j];
        let own = &self.by_letter[a];
        if own.len() >= 2 && self.is_convex_chain(&[own[own.len() - 2], j]) {
            return true;
        }
        for b in self.system.neighbors(a) {
            let m = match self.system.bond(a, b) {
                Bond::Finite(m) => m as usize,
                Bond::Infinite => continue,
            };
            if let Some(chain) = self.alternating_tail(a, b, m) {
                if self.is_convex_chain(&chain) {
                    return true;
                }
            }
        }
        false
    }

    /// The last `m` positions of `{a, b}` (ending with the newest `a`), if they alternate.
    fn alternating_tail(&self, a: usize, b: usize, m: usize) -> Option<Vec<usize>> {
        let (pa, pb) = (&self.by_letter[a], &self.by_letter[b]);
        let need_a = m.div_ceil(2);
        let need_b = m / 2;
        if pa.len() < need_a || pb.len() < need_b {
            return None;
        }
        let mut chain = Vec::with_capacity(m);
        for k in 0..m {
            let p = if k % 2 == 0 {
                pa[pa.len() - 1 - k / 2]
            } else {
                pb[pb.len() - 1 - k / 2]
            };
            chain.push(p);
        }
        // Descending positions alternate between the two letters only if
        // the merged order matches.
        if chain.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        let next = |list: &[usize], used: usize| list.len().checked_sub(used + 1).map(|i| list[i]);
        // No further a or b may sit inside the chain's span.
        let lowest = *chain.last().unwrap();
        let extra_a = next(pa, need_a).is_some_and(|p| p > lowest);
        let extra_b = next(pb, need_b).is_some_and(|p| p > lowest);
        if extra_a || extra_b {
            return None;
        }
        chain.reverse();
        Some(chain)
    }

    /// Minimal positions (nothing below them).
    pub fn minimal_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&p| self.below[p].is_clear()).collect()
    }

    /// Maximal positions (nothing above them).
    pub fn maximal_positions(&self) -> Vec<usize> {
        let n = self.len();
        let mut has_above = vec![false; n];
        for q in 0..n {
            for p in self.below[q].ones() {
                has_above[p] = true;
            }
        }
        (0..n).filter(|&p| !has_above[p]).collect()
    }

    /// Cartier-Foata normal form: layers of the heap, each sorted by letter.
    pub fn canonical_form(&self) -> Word {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&p| (self.level[p], self.letters[p]));
        order.into_iter().map(|p| self.letters[p]).collect()
    }
}

/// Cartier-Foata normal form of `w`'s commutation class.
pub fn canonical_form(system: &CoxeterSystem, w: &Word) -> Word {
    Heap::from_word(system, w).canonical_form()
}

/// Heap-side FC test (no root-engine reducedness check).
pub fn is_fc_word(system: &CoxeterSystem, w: &Word) -> bool {
    let mut h = Heap::new(system);
    w.iter().all(|x| h.push(x))
}

/// Whether appending `a` to a lexicographically minimal representative keeps it minimal.
///
/// A word is the lex-least of its commutation class exactly when no factor
/// `b u a` has `a < b` with `a` commuting with `b` and every letter of `u`.
pub fn lexmin_extends(system: &CoxeterSystem, prefix: &[usize], a: usize) -> bool {
    for &y in prefix.iter().rev() {
        if system.dependent(a, y) {
            return true;
        }
        if y > a {
            return false;
        }
    }
    true
}
