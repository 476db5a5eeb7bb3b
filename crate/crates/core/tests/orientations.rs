use std::collections::BTreeSet;

use coxeter_cfc::catalog;
use coxeter_cfc::orientations::*;
use coxeter_cfc::tutte::{tutte, tutte_polynomial, Graph};
use coxeter_cfc::{CoxeterSystem, Word};

fn corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 2..=6 {
        out.push((format!("P{n}"), Graph::path(n)));
    }
    for n in 3..=6 {
        out.push((format!("C{n}"), Graph::cycle(n)));
    }
    out.push(("K1,3".into(), Graph::star(3)));
    out.push(("K4".into(), Graph::complete(4)));
    out.push(("affE6".into(), Graph::of_system(&catalog::affine_e(6).unwrap())));
    out
}

/// Counts acyclic orientations by brute force over vertex orders (independent of edge masks).
fn orientations_via_orders(g: &Graph) -> usize {
    let n = g.vertex_count();
    let mut seen = BTreeSet::new();
    let mut order: Vec<usize> = (0..n).collect();
    permute(&mut order, 0, &mut |p| {
        let mut pos = vec![0; n];
        for (k, &v) in p.iter().enumerate() {
            pos[v] = k;
        }
        let key: Vec<bool> = g.edges().iter().map(|&(a, b)| pos[a] < pos[b]).collect();
        seen.insert(key);
    });
    seen.len()
}

fn permute(v: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

#[test]
fn tutte_counts_acyclic_orientations_and_classes() {
    for (name, g) in corpus() {
        let acyc = acyclic_orientations(&g);
        assert_eq!(acyc.len(), orientations_via_orders(&g), "{name}");
        assert_eq!(acyc.len() as i128, tutte(&g, 2, 0), "{name}");
        assert_eq!(kappa_classes(&g) as i128, tutte(&g, 1, 0), "{name}");
    }
}

#[test]
fn known_values() {
    // Trees have one class; an n-cycle has n - 1.
    for n in 3..=6 {
        assert_eq!(kappa_classes(&Graph::cycle(n)), n - 1);
        assert_eq!(acyclic_orientations(&Graph::cycle(n)).len(), (1 << n) - 2);
    }
    assert_eq!(tutte(&Graph::complete(4), 2, 0), 24);
    assert_eq!(tutte(&Graph::complete(4), 1, 0), 6);
    let t = tutte_polynomial(&Graph::cycle(4));
    assert_eq!(t.to_string(), "x^3 + x^2 + x + y");
}

#[test]
fn coxeter_words_and_orientations_round_trip() {
    let systems: Vec<CoxeterSystem> = vec![catalog::affine_a(3), catalog::type_d(5), catalog::affine_e(6).unwrap()];
    for sys in systems {
        let cs = coxeter_elements(&sys);
        assert_eq!(cs.len(), acyclic_orientations(&Graph::of_system(&sys)).len());
        for c in &cs {
            let o = coxeter_to_orientation(&sys, c).unwrap();
            assert_eq!(&orientation_to_coxeter(&o).unwrap(), c);
        }
    }
}

#[test]
fn flips_match_cyclic_shifts() {
    // Moving the first letter of a Coxeter word to the end flips that source to a sink.
    let sys = catalog::affine_a(4);
    for c in coxeter_elements(&sys) {
        let o = coxeter_to_orientation(&sys, &c).unwrap();
        let flipped = source_to_sink(&o, c[0]).unwrap();
        let shifted = coxeter_to_orientation(&sys, &c.rotate(1)).unwrap();
        assert_eq!(flipped, shifted);
    }
}

fn kappa_as_words(sys: &CoxeterSystem) -> BTreeSet<BTreeSet<Word>> {
    kappa_partition(&Graph::of_system(sys))
        .into_iter()
        .map(|class| class.iter().map(|o| orientation_to_coxeter(o).unwrap()).collect())
        .collect()
}

#[test]
fn conjugacy_equals_kappa_in_small_finite_groups() {
    for sys in [catalog::type_a(2), catalog::type_a(3), catalog::type_b(2), catalog::type_b(3), catalog::type_h(3), catalog::type_d(4)] {
        let conj: BTreeSet<BTreeSet<Word>> = conjugacy_classes_of_coxeter_elements(&sys, DEFAULT_GROUP_CAP)
            .unwrap()
            .into_iter()
            .map(|c| c.into_iter().collect())
            .collect();
        assert_eq!(conj, kappa_as_words(&sys), "{}", catalog::describe(&sys));
    }
    assert_eq!(coxeter_elements(&catalog::type_a(3)).len(), 4);
}
