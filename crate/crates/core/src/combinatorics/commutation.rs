//! Closures of a word under commutations, braid moves and rotations.

use std::collections::{BTreeSet, HashSet, VecDeque};

use super::heap::Heap;
use crate::error::{Error, Result};
use crate::system::{Bond, CoxeterSystem};
use crate::word::Word;

/// Default cap for commutation-class and braid-closure enumeration.
pub const DEFAULT_CLASS_CAP: usize = 1_000_000;

fn closure<F>(start: &Word, cap: usize, what: &'static str, mut moves: F) -> Result<BTreeSet<Word>>
where
    F: FnMut(&Word, &mut dyn FnMut(Word)),
{
    let mut seen: HashSet<Word> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start.clone());
    while let Some(u) = queue.pop_front() {
        let mut fresh = Vec::new();
        moves(&u, &mut |v| fresh.push(v));
        for v in fresh {
            if seen.contains(&v) {
                continue;
            }
            if seen.len() >= cap {
                return Err(Error::CapExceeded { what, cap });
            }
            seen.insert(v.clone());
            queue.push_back(v);
        }
    }
    Ok(seen.into_iter().collect())
}

/// All words reachable by swapping adjacent commuting letters.
pub fn commutation_class(system: &CoxeterSystem, w: &Word, cap: usize) -> Result<BTreeSet<Word>> {
    closure(w, cap, "commutation class", |u, emit| {
        let l = u.letters();
        for k in 0..l.len().saturating_sub(1) {
            if l[k] != l[k + 1] && system.commute(l[k], l[k + 1]) {
                let mut v = l.to_vec();
                v.swap(k, k + 1);
                emit(Word::new(v));
            }
        }
    })
}

/// All words reachable by braid moves `<s,t>_m <-> <t,s>_m` (finite `m`, including commutations).
///
/// For a reduced word this is the set of all reduced expressions of its element.
pub fn braid_class(system: &CoxeterSystem, w: &Word, cap: usize) -> Result<BTreeSet<Word>> {
    closure(w, cap, "braid closure", |u, emit| {
        let l = u.letters();
        for k in 0..l.len().saturating_sub(1) {
            let (s, t) = (l[k], l[k + 1]);
            if s == t {
                continue;
            }
            let m = match system.bond(s, t) {
                Bond::Finite(m) => m as usize,
                Bond::Infinite => continue,
            };
            if k + m > l.len() {
                continue;
            }
            if (0..m).all(|i| l[k + i] == if i % 2 == 0 { s } else { t }) {
                let mut v = l.to_vec();
                for i in 0..m {
                    v[k + i] = if i % 2 == 0 { t } else { s };
                }
                emit(Word::new(v));
            }
        }
    })
}

/// Canonical forms of every rotation of every commutation-equivalent word.
///
/// Closes under "move a minimal letter of the heap to the end", which
/// reaches exactly those rotations. The start word's own form comes first;
/// the rest follow in discovery order.
pub fn cyclic_class(system: &CoxeterSystem, w: &Word, cap: usize) -> Result<Vec<Word>> {
    let start = Heap::from_word(system, w).canonical_form();
    let mut seen: HashSet<Word> = HashSet::new();
    let mut order = vec![start.clone()];
    seen.insert(start);
    let mut k = 0;
    while k < order.len() {
        let u = order[k].clone();
        k += 1;
        let heap = Heap::from_word(system, &u);
        for p in heap.minimal_positions() {
            let mut v: Vec<usize> = u.letters().to_vec();
            let x = v.remove(p);
            v.push(x);
            let c = Heap::from_word(system, &Word::new(v)).canonical_form();
            if seen.contains(&c) {
                continue;
            }
            if seen.len() >= cap {
                return Err(Error::CapExceeded {
                    what: "cyclic class",
                    cap,
                });
            }
            seen.insert(c.clone());
            order.push(c);
        }
    }
    Ok(order)
}
