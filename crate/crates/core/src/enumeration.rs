//! Exhaustive enumeration of FC and CFC elements.
//!
//! Both enumerators walk the lexicographically least representative of each
//! commutation class, so every FC element is reached once. A prefix of an FC
//! word is FC, which justifies pruning a branch at the first non-FC prefix.

use std::collections::BTreeSet;

use crate::catalog::{self, Family};
use crate::combinatorics::heap::{is_fc_word, lexmin_extends, Heap};
use crate::combinatorics::fc::is_fc;
use crate::error::{Error, Result};
use crate::orientations::acyclic_orientations;
use crate::patterns::{fib, pattern_avoidance_count};
use crate::roots::RootEngine;
use crate::system::{Bond, CoxeterSystem};
use crate::tutte::Graph;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Fc,
    Cfc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Complete enumeration; needs a CFC-finite system.
    Exhaustive,
    /// Elements of length at most the given bound.
    UpToLength(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationResult {
    pub system: String,
    pub kind: Kind,
    /// Includes the identity.
    pub count: usize,
    /// Cartier-Foata forms, sorted, when requested.
    pub elements: Option<Vec<Word>>,
    pub length_cap: Option<usize>,
    pub exhaustive: bool,
}

/// How often each generator may occur in a CFC element of a CFC-finite group:
/// once, or `floor((m-1)/2)` times next to a bond `m >= 5`.
pub fn multiplicity_bounds(system: &CoxeterSystem) -> Vec<usize> {
    (0..system.rank())
        .map(|s| {
            system
                .neighbors(s)
                .filter_map(|t| system.bond(s, t).finite())
                .filter(|&m| m >= 5)
                .map(|m| (m as usize - 1) / 2)
                .max()
                .unwrap_or(1)
        })
        .collect()
}

struct Walk<'a, F: FnMut(&Heap)> {
    system: &'a CoxeterSystem,
    heap: Heap<'a>,
    counts: Vec<usize>,
    bounds: Vec<usize>,
    max_len: Option<usize>,
    /// Some FC word was cut off by the length bound.
    truncated: bool,
    visit: F,
}

impl<F: FnMut(&Heap)> Walk<'_, F> {
    fn run(&mut self) {
        (self.visit)(&self.heap);
        let rank = self.counts.len();
        let at_cap = self.max_len.is_some_and(|l| self.heap.len() >= l);
        for a in 0..rank {
            if self.counts[a] >= self.bounds[a] || !lexmin_extends(self.system, self.heap.letters(), a) {
                continue;
            }
            let ok = self.heap.push(a);
            if ok && at_cap {
                self.truncated = true;
            } else if ok {
                self.counts[a] += 1;
                self.run();
                self.counts[a] -= 1;
            }
            self.heap.pop();
        }
    }
}

/// Visits every FC element (as a heap of its lex-least word) within the bounds.
/// Returns whether the length bound cut off any FC word.
fn walk_fc<F: FnMut(&Heap)>(system: &CoxeterSystem, bounds: Vec<usize>, max_len: Option<usize>, visit: F) -> bool {
    let mut walk = Walk {
        system,
        heap: Heap::new(system),
        counts: vec![0; system.rank()],
        bounds,
        max_len,
        truncated: false,
        visit,
    };
    walk.run();
    walk.truncated
}

/// Every rotation of the word is FC (heap test).
fn rotations_fc(system: &CoxeterSystem, letters: &[usize]) -> bool {
    let w = Word::from(letters);
    (1..w.len()).all(|k| is_fc_word(system, &w.rotate(k)))
}

fn finish(system: &CoxeterSystem, kind: Kind, mut set: Option<BTreeSet<Word>>, count: usize, cap: Option<usize>, exhaustive: bool) -> EnumerationResult {
    if let Some(s) = &set {
        debug_assert_eq!(s.len(), count);
    }
    EnumerationResult {
        system: catalog::describe(system),
        kind,
        count,
        elements: set.take().map(|s| s.into_iter().collect()),
        length_cap: cap,
        exhaustive,
    }
}

/// CFC elements: exhaustively in a CFC-finite system, or up to a length bound.
pub fn enumerate_cfc(system: &CoxeterSystem, mode: Mode, collect: bool) -> Result<EnumerationResult> {
    let (bounds, max_len) = match mode {
        Mode::Exhaustive => {
            if !system.is_cfc_finite() {
                return Err(Error::Precondition(format!(
                    "exhaustive CFC enumeration needs a CFC-finite system, got {}",
                    catalog::describe(system)
                )));
            }
            (multiplicity_bounds(system), None)
        }
        Mode::UpToLength(l) => (vec![usize::MAX; system.rank()], Some(l)),
    };
    let mut count = 0;
    let mut set = collect.then(BTreeSet::new);
    let truncated = walk_fc(system, bounds, max_len, |heap| {
        if rotations_fc(system, heap.letters()) {
            count += 1;
            if let Some(s) = set.as_mut() {
                s.insert(heap.canonical_form());
            }
        }
    });
    let exhaustive = mode == Mode::Exhaustive || !truncated;
    Ok(finish(system, Kind::Cfc, set, count, max_len, exhaustive))
}

/// FC elements up to an optional length cap; without a cap the system must be FC-finite.
pub fn enumerate_fc(system: &CoxeterSystem, length_cap: Option<usize>, collect: bool) -> Result<EnumerationResult> {
    if length_cap.is_none() && !system.is_cfc_finite() {
        return Err(Error::Precondition(format!(
            "FC enumeration without a length cap needs an FC-finite system, got {}",
            catalog::describe(system)
        )));
    }
    let mut count = 0;
    let mut set = collect.then(BTreeSet::new);
    let truncated = walk_fc(system, vec![usize::MAX; system.rank()], length_cap, |heap| {
        count += 1;
        if let Some(s) = set.as_mut() {
            s.insert(heap.canonical_form());
        }
    });
    Ok(finish(system, Kind::Fc, set, count, length_cap, !truncated))
}

/// Number of CFC elements as a sum over generator subsets of acyclic-orientation counts.
///
/// Valid for CFC-finite systems without bonds of strength 5 or more, where
/// every CFC element is a Coxeter element of its support.
pub fn cfc_count_via_orientations(system: &CoxeterSystem) -> Result<u64> {
    let heavy = (0..system.rank()).any(|s| {
        system
            .neighbors(s)
            .any(|t| !matches!(system.bond(s, t), Bond::Finite(m) if m <= 4))
    });
    if heavy || !system.is_cfc_finite() {
        return Err(Error::Precondition(
            "orientation count needs a CFC-finite system with bonds at most 4".into(),
        ));
    }
    let n = system.rank();
    assert!(n < 32);
    let graph = Graph::of_system(system);
    let mut total = 0u64;
    for mask in 0u32..1 << n {
        let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        total += acyclic_orientations(&graph.induced(&subset)).len() as u64;
    }
    Ok(total)
}

/// The rank-`n` member of a CFC-finite family by letter (`A`, `B`, `D`, `E`, `F`, `H`).
pub fn family_member(family: char, n: usize) -> Result<CoxeterSystem> {
    let min = if family == 'E' { 3 } else { 1 };
    if n < min {
        return Err(Error::UnknownFamily(format!("{family}{n}")));
    }
    Ok(match family {
        'A' => catalog::type_a(n),
        'B' => catalog::type_b(n),
        'D' => catalog::type_d(n),
        'E' => catalog::type_e(n),
        'F' => catalog::type_f(n),
        'H' => catalog::type_h(n),
        _ => return Err(Error::UnknownFamily(family.to_string())),
    })
}

/// Exhaustive count of a family member.
pub fn family_count(family: char, n: usize, kind: Kind) -> Result<usize> {
    let sys = family_member(family, n)?;
    Ok(match kind {
        Kind::Cfc => enumerate_cfc(&sys, Mode::Exhaustive, false)?.count,
        Kind::Fc => enumerate_fc(&sys, None, false)?.count,
    })
}

/// Whether `alpha_n = 3 alpha_{n-1} - alpha_{n-2}` for CFC counts at every `n` in range.
///
/// Each `n` needs members of rank `n - 1` and `n - 2`; for `E` the smallest is `E3`.
pub fn verify_recurrence(family: char, range: std::ops::RangeInclusive<usize>) -> Result<bool> {
    for n in range {
        let a = family_count(family, n, Kind::Cfc)? as i64;
        let b = family_count(family, n - 1, Kind::Cfc)? as i64;
        let c = family_count(family, n.checked_sub(2).unwrap_or(0), Kind::Cfc)? as i64;
        if a != 3 * b - c {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `|CFC(A_n)| = Fib_{2n-1}` for `1 <= n <= n_max`.
pub fn fibonacci_check(n_max: usize) -> Result<bool> {
    for n in 1..=n_max {
        if family_count('A', n, Kind::Cfc)? as u128 != fib(2 * n - 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `|CFC(A_n)|` equals the number of 321- and 3412-avoiding permutations of `n + 1` letters.
pub fn pattern_check(n_max: usize) -> Result<bool> {
    for n in 1..=n_max {
        if family_count('A', n, Kind::Cfc)? as u64 != pattern_avoidance_count(n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One affine spot check: lengths and FC-ness of the first `K` powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpotCheck {
    pub system: &'static str,
    pub word: Word,
    pub length: usize,
    /// `l(w^k)` for `k = 1..=K`.
    pub power_lengths: Vec<usize>,
    /// `w^k` is FC for every `k <= K`.
    pub powers_fc: bool,
}

impl SpotCheck {
    pub fn is_logarithmic(&self) -> bool {
        self.power_lengths
            .iter()
            .enumerate()
            .all(|(k, &l)| l == (k + 1) * self.length)
    }
}

fn spot(engine: &RootEngine, name: &'static str, w: Word, bound: usize) -> SpotCheck {
    SpotCheck {
        system: name,
        length: engine.length(&w),
        power_lengths: (1..=bound).map(|k| engine.power_length(&w, k)).collect(),
        powers_fc: (1..=bound).all(|k| is_fc(engine, &w.power(k))),
        word: w,
    }
}

/// Coxeter elements of affine A2 and affine C4, plus w1 and w2 of affine C4.
pub fn affine_spotchecks(bound: usize) -> Vec<SpotCheck> {
    let mut out = Vec::new();
    let sys = catalog::affine_a(2);
    let eng = RootEngine::new(&sys);
    for c in crate::orientations::coxeter_elements(&sys) {
        out.push(spot(&eng, "affA2", c, bound));
    }
    let sys = catalog::affine_c(4);
    let eng = RootEngine::new(&sys);
    for c in crate::orientations::coxeter_elements(&sys) {
        out.push(spot(&eng, "affC4", c, bound));
    }
    for text in ["0 2 4 1 3", "0 1 2 3 4 3 2 1"] {
        let w = sys.parse_word(text).expect("labels of affine C4");
        out.push(spot(&eng, "affC4", w, bound));
    }
    out
}

/// Families and ranks of the CFC-finite table, with their recognized names.
pub fn table_families() -> &'static [char] {
    &['A', 'B', 'D', 'E', 'F', 'H']
}

pub fn family_of(system: &CoxeterSystem) -> Option<Family> {
    let all: Vec<usize> = (0..system.rank()).collect();
    catalog::recognize(system, &all)
}
