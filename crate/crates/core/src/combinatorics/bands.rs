//! Bands of CFC elements.

use super::commutation::cyclic_class;
use super::fc::is_cfc;
use super::heap::Heap;
use crate::error::{Error, Result};
use crate::roots::RootEngine;
use crate::system::Bond;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// The factor starts with the endpoint `s`.
    St,
    /// The factor starts with `t`.
    Ts,
}

/// An `st`-band: some cyclic shift of `w` is commutation equivalent to a
/// word containing `<s,t>_{m-1}`, with `s` and `t` occurring nowhere else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Band {
    /// The odd endpoint of the support.
    pub s: usize,
    pub t: usize,
    pub direction: Direction,
    pub strength: u32,
    pub is_large: bool,
    /// A rotated, commutation-equivalent word exhibiting the factor.
    pub witness: Word,
}

/// All bands of a CFC word, one per `(s, t, direction)`.
pub fn detect_bands(engine: &RootEngine, w: &Word, cap: usize) -> Result<Vec<Band>> {
    if !is_cfc(engine, w) {
        return Err(Error::Precondition("bands are defined for CFC words".into()));
    }
    let system = engine.system();
    let support = w.support();
    let odd_endpoints: Vec<usize> = system
        .endpoints_within(&support)
        .into_iter()
        .filter(|e| e.is_odd)
        .map(|e| e.generator)
        .collect();
    let mut pairs = Vec::new();
    for &a in &support {
        for &b in &support {
            let m = match system.bond(a, b) {
                Bond::Finite(m) if a != b && m >= 3 && m % 2 == 1 => m,
                _ => continue,
            };
            if odd_endpoints.contains(&a) == odd_endpoints.contains(&b) {
                continue;
            }
            let half = (m as usize - 1) / 2;
            if w.count(a) != half || w.count(b) != half {
                continue;
            }
            pairs.push((a, b, m));
        }
    }
    if pairs.is_empty() {
        return Ok(Vec::new());
    }
    let shifts = cyclic_class(system, w, cap)?;
    let mut bands = Vec::new();
    for (a, b, m) in pairs {
        let found = shifts.iter().find_map(|u| band_witness(&Heap::from_word(system, u), a, b));
        if let Some(witness) = found {
            let a_is_endpoint = odd_endpoints.contains(&a);
            let (s, t, direction) = if a_is_endpoint {
                (a, b, Direction::St)
            } else {
                (b, a, Direction::Ts)
            };
            bands.push(Band {
                s,
                t,
                direction,
                strength: m,
                is_large: m > 3,
                witness,
            });
        }
    }
    bands.sort_by_key(|b| (b.s, b.t, b.direction));
    Ok(bands)
}

/// A linear extension of the heap with every `a` and `b` consecutive as `a b a b ...`.
fn band_witness(heap: &Heap, a: usize, b: usize) -> Option<Word> {
    let mut chain: Vec<usize> = heap
        .positions_of(a)
        .iter()
        .chain(heap.positions_of(b))
        .copied()
        .collect();
    chain.sort_unstable();
    let alternates = chain
        .iter()
        .enumerate()
        .all(|(k, &p)| heap.letter(p) == if k % 2 == 0 { a } else { b });
    if !alternates || !heap.is_convex_chain(&chain) {
        return None;
    }
    let first = chain[0];
    let in_chain = |p: usize| chain.binary_search(&p).is_ok();
    let above_first = |p: usize| p == first || heap.precedes(first, p);
    let mut letters = Vec::with_capacity(heap.len());
    letters.extend((0..heap.len()).filter(|&p| !above_first(p)).map(|p| heap.letter(p)));
    letters.extend(chain.iter().map(|&p| heap.letter(p)));
    letters.extend(
        (0..heap.len())
            .filter(|&p| above_first(p) && !in_chain(p))
            .map(|p| heap.letter(p)),
    );
    Some(Word::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn w(v: &[usize]) -> Word {
        Word::new(v.to_vec())
    }

    #[test]
    fn a3_coxeter_element() {
        let eng = RootEngine::new(&catalog::type_a(3));
        let bands = detect_bands(&eng, &w(&[0, 1, 2]), 1000).unwrap();
        let mut pairs: Vec<(usize, usize)> = bands.iter().map(|b| (b.s, b.t)).collect();
        pairs.dedup();
        assert_eq!(pairs, vec![(0, 1), (2, 1)]);
        assert!(bands.iter().all(|b| !b.is_large));
    }

    #[test]
    fn h3_large_band() {
        let eng = RootEngine::new(&catalog::type_h(3));
        let bands = detect_bands(&eng, &w(&[0, 1, 0, 1, 2]), 1000).unwrap();
        // one s1 s2 band, found in both directions
        assert_eq!(bands.len(), 2);
        assert!(bands.iter().all(|b| (b.s, b.t, b.strength, b.is_large) == (0, 1, 5, true)));
        assert_eq!(bands[0].direction, Direction::St);
        assert!(bands[0].witness.letters().windows(4).any(|f| f == [0, 1, 0, 1]));
        assert!(bands[1].witness.letters().windows(4).any(|f| f == [1, 0, 1, 0]));
    }

    #[test]
    fn requires_cfc() {
        let eng = RootEngine::new(&catalog::type_a(3));
        assert!(matches!(
            detect_bands(&eng, &w(&[1, 0, 2, 1]), 100),
            Err(Error::Precondition(_))
        ));
    }
}
