//! Fully commutative and cyclically fully commutative words.

use super::commutation::{braid_class, commutation_class, cyclic_class};
use super::heap::is_fc_word;
use crate::error::Result;
use crate::roots::RootEngine;
use crate::system::{Bond, CoxeterSystem, Verdict};
use crate::word::Word;

/// Reduced, and no commutation-equivalent word contains `ss` or `<s,t>_m`.
pub fn is_fc(engine: &RootEngine, w: &Word) -> bool {
    is_fc_word(engine.system(), w) && engine.is_reduced(w)
}

/// The same test by explicit enumeration of the commutation class.
pub fn is_fc_by_class(engine: &RootEngine, w: &Word, cap: usize) -> Result<bool> {
    if !engine.is_reduced(w) {
        return Ok(false);
    }
    let system = engine.system();
    let class = commutation_class(system, w, cap)?;
    Ok(!class.iter().any(|u| has_braid_factor(system, u)))
}

/// Whether `w` has a factor `ss` or `<s,t>_m(s,t)` with finite `m >= 3`.
pub fn has_braid_factor(system: &CoxeterSystem, w: &Word) -> bool {
    let l = w.letters();
    for k in 0..l.len().saturating_sub(1) {
        let (s, t) = (l[k], l[k + 1]);
        if s == t {
            return true;
        }
        if let Bond::Finite(m) = system.bond(s, t) {
            let m = m as usize;
            if m >= 3 && k + m <= l.len() && (0..m).all(|i| l[k + i] == [s, t][i % 2]) {
                return true;
            }
        }
    }
    false
}

/// FC, and every cyclic shift of `w` is FC.
pub fn is_cfc(engine: &RootEngine, w: &Word) -> bool {
    is_fc(engine, w) && (1..w.len()).all(|k| is_fc(engine, &w.rotate(k)))
}

/// FC, and every cyclic shift of every reduced expression is FC.
///
/// Cross-checks [`is_cfc`], which looks at the shifts of `w` alone.
pub fn is_cfc_exhaustive(engine: &RootEngine, w: &Word, cap: usize) -> Result<bool> {
    if !is_fc(engine, w) {
        return Ok(false);
    }
    let shifts = cyclic_class(engine.system(), w, cap)?;
    Ok(shifts.iter().all(|u| is_fc(engine, u)))
}

/// Every cyclic shift of every reduced expression of `w` is reduced.
///
/// `w` must be reduced. The reduced expressions are the braid closure of `w`.
pub fn is_cyclically_reduced(engine: &RootEngine, w: &Word, cap: usize) -> Result<bool> {
    let class = braid_class(engine.system(), w, cap)?;
    Ok(class
        .iter()
        .all(|u| (1..u.len()).all(|k| engine.is_reduced(&u.rotate(k)))))
}

/// Generators occurring in `w` (the support when `w` is reduced).
pub fn support(w: &Word) -> Vec<usize> {
    w.support()
}

pub fn is_full_support(system: &CoxeterSystem, w: &Word) -> bool {
    w.support().len() == system.rank()
}

/// Every irreducible component of the support generates an infinite group.
pub fn is_torsion_free(system: &CoxeterSystem, w: &Word) -> bool {
    system
        .irreducible_components(&w.support())
        .iter()
        .all(|c| system.classify_finite(c).verdict == Verdict::Infinite)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn w(v: &[usize]) -> Word {
        Word::new(v.to_vec())
    }

    #[test]
    fn a3_example() {
        let eng = RootEngine::new(&catalog::type_a(3));
        let x = w(&[1, 0, 2, 1]);
        assert!(is_fc(&eng, &x));
        assert!(is_fc_by_class(&eng, &x, 100).unwrap());
        assert!(!is_cyclically_reduced(&eng, &x, 100).unwrap());
        assert!(!is_cfc(&eng, &x));
        assert!(!is_torsion_free(eng.system(), &w(&[0, 1, 2])));
    }

    #[test]
    fn affine_a2_example() {
        // s1 s3 s1 s2 with the labels s1, s2, s3 -> s1, s2, s0
        let sys = catalog::affine_a(2);
        let eng = RootEngine::new(&sys);
        let x = w(&[1, 0, 1, 2]);
        assert!(!is_fc(&eng, &x));
        assert!(is_cyclically_reduced(&eng, &x, 1000).unwrap());
        let opened = RootEngine::new(&sys.with_bond(0, 1, Bond::Infinite));
        assert!(is_fc(&opened, &x));
        assert!(!is_cfc(&opened, &x));
        assert!(!is_cfc_exhaustive(&opened, &x, 1000).unwrap());
    }

    #[test]
    fn single_letter() {
        let eng = RootEngine::new(&catalog::type_b(3));
        assert!(is_cyclically_reduced(&eng, &w(&[2]), 10).unwrap());
        assert!(is_cfc(&eng, &w(&[2])));
        assert!(is_cfc(&eng, &Word::empty()));
    }
}
