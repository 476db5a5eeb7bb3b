use std::collections::BTreeSet;

use coxeter_cfc::catalog;
use coxeter_cfc::combinatorics::{canonical_form, is_cfc, is_cfc_exhaustive, is_fc, DEFAULT_CLASS_CAP};
use coxeter_cfc::enumeration::*;
use coxeter_cfc::{Bond, CoxeterSystem, RootEngine, Word};

fn finite_examples() -> Vec<CoxeterSystem> {
    vec![
        catalog::type_a(4),
        catalog::type_b(4),
        catalog::type_d(4),
        catalog::type_e(6),
        catalog::type_f(4),
        catalog::type_h(3),
        catalog::type_h(4),
        catalog::type_i2(Bond::Finite(7)),
        catalog::type_i2(Bond::Finite(8)),
    ]
}

/// Brute force: every CFC element from the set of all reduced words.
fn brute_cfc(sys: &CoxeterSystem, max_len: usize) -> BTreeSet<Word> {
    let eng = RootEngine::new(sys);
    let mut out = BTreeSet::new();
    let mut layer = vec![Word::empty()];
    for _ in 0..=max_len {
        let mut next = Vec::new();
        for w in &layer {
            if is_cfc(&eng, w) {
                out.insert(canonical_form(sys, w));
            }
            for s in 0..sys.rank() {
                let v = w.concat(&Word::new(vec![s]));
                if eng.is_reduced(&v) {
                    next.push(v);
                }
            }
        }
        layer = next;
    }
    out
}

#[test]
fn cfc_matches_brute_force_over_reduced_words() {
    for sys in [catalog::type_a(3), catalog::type_b(3), catalog::type_h(3), catalog::type_i2(Bond::Finite(6))] {
        let eng = RootEngine::new(&sys);
        let brute = brute_cfc(&sys, 9);
        let got: BTreeSet<Word> = enumerate_cfc(&sys, Mode::Exhaustive, true).unwrap().elements.unwrap().into_iter().collect();
        // Brute force sees each element through many words; the longest CFC here has length < 9.
        assert!(got.iter().all(|w| w.len() < 9));
        assert!(got.iter().all(|w| is_cfc(&eng, w)));
        assert_eq!(got, brute);
    }
    let tri = catalog::affine_a(2);
    let got: BTreeSet<Word> = enumerate_cfc(&tri, Mode::UpToLength(6), true).unwrap().elements.unwrap().into_iter().collect();
    assert_eq!(got, brute_cfc(&tri, 6));
}

#[test]
fn enumerated_elements_pass_the_root_engine() {
    for sys in finite_examples() {
        let eng = RootEngine::new(&sys);
        let cfc = enumerate_cfc(&sys, Mode::Exhaustive, true).unwrap();
        let fc = enumerate_fc(&sys, None, true).unwrap();
        assert!(cfc.exhaustive && fc.exhaustive);
        let cfc = cfc.elements.unwrap();
        let fc: BTreeSet<Word> = fc.elements.unwrap().into_iter().collect();
        for w in &cfc {
            assert!(is_cfc(&eng, w), "{w}");
            assert!(is_cfc_exhaustive(&eng, w, DEFAULT_CLASS_CAP).unwrap(), "{w}");
            assert!(fc.contains(w));
        }
        for w in fc.iter().take(3000) {
            assert!(is_fc(&eng, w), "{w}");
        }
    }
}

#[test]
fn multiplicity_bounds_do_not_lose_elements() {
    // UpToLength ignores the multiplicity bounds; a finite group has no FC words past its longest element.
    for sys in finite_examples() {
        let bounded = enumerate_cfc(&sys, Mode::Exhaustive, false).unwrap();
        let unbounded = enumerate_cfc(&sys, Mode::UpToLength(64), false).unwrap();
        assert!(unbounded.exhaustive);
        assert_eq!(bounded.count, unbounded.count, "{}", bounded.system);
    }
}

#[test]
fn orientation_sums_agree_with_enumeration() {
    for family in ['A', 'B', 'D', 'E', 'F'] {
        let lo = if family == 'E' { 3 } else { 1 };
        for n in lo..=7 {
            let sys = family_member(family, n).unwrap();
            let direct = enumerate_cfc(&sys, Mode::Exhaustive, false).unwrap().count as u64;
            assert_eq!(cfc_count_via_orientations(&sys).unwrap(), direct, "{family}{n}");
        }
    }
}

#[test]
fn dihedral_counts() {
    // CFC in I2(m): the identity, both generators, and alternating words of even length below m.
    // FC: everything except the longest element.
    for m in 3..=9u32 {
        let sys = catalog::type_i2(Bond::Finite(m));
        let got = enumerate_cfc(&sys, Mode::Exhaustive, false).unwrap().count;
        let nonempty_even = 2 * ((m as usize - 1) / 2);
        assert_eq!(got, 1 + 2 + nonempty_even, "m = {m}");
        let fc = enumerate_fc(&sys, None, false).unwrap().count;
        assert_eq!(fc, 2 * m as usize - 1, "FC of I2({m})");
    }
}

#[test]
fn length_capped_infinite_systems() {
    let tri = catalog::affine_a(2);
    assert!(enumerate_cfc(&tri, Mode::Exhaustive, false).is_err());
    let mut last = 0;
    for l in 0..8 {
        let r = enumerate_cfc(&tri, Mode::UpToLength(l), false).unwrap();
        assert!(!r.exhaustive || l == 0);
        assert!(r.count >= last);
        last = r.count;
    }
}

#[test]
fn affine_spotchecks_hold() {
    let report = affine_spotchecks(6);
    assert_eq!(report.iter().filter(|s| s.system == "affA2").count(), 6);
    for s in &report {
        assert!(s.is_logarithmic(), "{} {}", s.system, s.word);
        assert!(s.powers_fc, "{} {}", s.system, s.word);
    }
}

#[test]
fn table_helpers() {
    assert_eq!(multiplicity_bounds(&catalog::type_h(3)), vec![2, 2, 1]);
    assert_eq!(multiplicity_bounds(&catalog::type_i2(Bond::Finite(9))), vec![4, 4]);
    assert!(family_member('E', 2).is_err());
    assert!(family_member('Q', 3).is_err());
    assert_eq!(catalog::describe(&catalog::type_e(3)), "A2xA1");
    assert_eq!(catalog::describe(&catalog::type_e(5)), "D5");
}

/// Published FC counts at ranks 8 and 9.
const FC_HIGH: [(char, usize, [usize; 2]); 6] = [
    ('A', 8, [4862, 16796]),
    ('B', 8, [14299, 53481]),
    ('D', 8, [7864, 29171]),
    ('E', 8, [10846, 44199]),
    ('F', 8, [36333, 153584]),
    ('H', 8, [47607, 182720]),
];

#[test]
fn fc_rows_ranks_8_and_9() {
    for (f, _, fc) in FC_HIGH {
        for n in 8..=9 {
            assert_eq!(family_count(f, n, Kind::Fc).unwrap(), fc[n - 8], "{f}{n}");
        }
    }
}

#[test]
fn recurrence_at_e4_has_no_valid_seed() {
    // 34 = 3 * 10 - alpha would need alpha = -4; no group has a negative count.
    let e4 = family_count('E', 4, Kind::Cfc).unwrap() as i64;
    let e3 = family_count('E', 3, Kind::Cfc).unwrap() as i64;
    assert_eq!((e4, e3), (34, 10));
    assert!(3 * e3 - e4 < 0);
}
