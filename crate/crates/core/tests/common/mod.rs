//! Test-side oracles. None of these use the root engine.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use coxeter_cfc::{Bond, CoxeterSystem, Word};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// A finite Coxeter group realized as permutations of a point set.
pub struct PermModel {
    gens: Vec<Vec<usize>>,
    /// BFS distance from the identity in the Cayley graph.
    dist: HashMap<Vec<usize>, usize>,
}

impl PermModel {
    pub fn new(gens: Vec<Vec<usize>>) -> Self {
        let points = gens[0].len();
        let id: Vec<usize> = (0..points).collect();
        let mut dist = HashMap::from([(id.clone(), 0)]);
        let mut frontier = vec![id];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for p in &frontier {
                for g in &gens {
                    let q = compose(p, g);
                    if !dist.contains_key(&q) {
                        dist.insert(q.clone(), d);
                        next.push(q);
                    }
                }
            }
            frontier = next;
        }
        PermModel { gens, dist }
    }

    pub fn order(&self) -> usize {
        self.dist.len()
    }

    pub fn element(&self, w: &Word) -> Vec<usize> {
        let id: Vec<usize> = (0..self.gens[0].len()).collect();
        w.iter().fold(id, |p, x| compose(&p, &self.gens[x]))
    }

    pub fn length(&self, w: &Word) -> usize {
        self.dist[&self.element(w)]
    }
}

/// `p` then `g`.
fn compose(p: &[usize], g: &[usize]) -> Vec<usize> {
    p.iter().map(|&i| g[i]).collect()
}

fn transposition(points: usize, a: usize, b: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..points).collect();
    p.swap(a, b);
    p
}

/// Sym(n+1) with s_i swapping i and i+1.
pub fn symmetric_model(n: usize) -> PermModel {
    PermModel::new((0..n).map(|i| transposition(n + 1, i, i + 1)).collect())
}

/// Signed permutations of n letters on the points `+-1..+-n` (point `2k` is `+k`).
/// The first generator negates the first letter; the others swap adjacent letters.
pub fn signed_model(n: usize) -> PermModel {
    let pts = 2 * n;
    let mut gens = vec![transposition(pts, 0, 1)];
    for i in 1..n {
        let mut p: Vec<usize> = (0..pts).collect();
        p.swap(2 * (i - 1), 2 * i);
        p.swap(2 * (i - 1) + 1, 2 * i + 1);
        gens.push(p);
    }
    PermModel::new(gens)
}

/// The dihedral group of order 2m acting on the 2m-gon's vertices.
pub fn dihedral_model(m: usize) -> PermModel {
    let pts = 2 * m;
    let r0: Vec<usize> = (0..pts).map(|i| (pts - i) % pts).collect();
    let r1: Vec<usize> = (0..pts).map(|i| (pts + 2 - i) % pts).collect();
    PermModel::new(vec![r0, r1])
}

/// Every word of length exactly `len` over `rank` letters.
pub fn all_words(rank: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<usize>| {
                (0..rank).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Word::new).collect()
}

pub fn random_word(rng: &mut ChaCha8Rng, rank: usize, len: usize) -> Word {
    Word::new((0..len).map(|_| rng.gen_range(0..rank)).collect())
}

pub fn random_bond(rng: &mut ChaCha8Rng, choices: &[Bond]) -> Bond {
    choices[rng.gen_range(0..choices.len())]
}

pub const BONDS: [Bond; 6] = [
    Bond::Finite(2),
    Bond::Finite(3),
    Bond::Finite(4),
    Bond::Finite(5),
    Bond::Finite(6),
    Bond::Infinite,
];

/// A random system of the given rank; bonds drawn independently for each pair.
pub fn random_system(rng: &mut ChaCha8Rng, rank: usize, choices: &[Bond]) -> CoxeterSystem {
    let mut decls = Vec::new();
    for i in 0..rank {
        for j in i + 1..rank {
            decls.push((i, j, random_bond(rng, choices)));
        }
    }
    CoxeterSystem::build(rank, &decls).unwrap()
}

/// Every system of rank `n` with bonds from `choices`, as labelled complete graphs.
pub fn all_systems(n: usize, choices: &[Bond]) -> Vec<CoxeterSystem> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let total = choices.len().pow(pairs.len() as u32);
    for mut code in 0..total {
        let decls: Vec<_> = pairs
            .iter()
            .map(|&(i, j)| {
                let b = choices[code % choices.len()];
                code /= choices.len();
                (i, j, b)
            })
            .collect();
        out.push(CoxeterSystem::build(n, &decls).unwrap());
    }
    out
}

/// Positive definiteness of the cosine Gram matrix by floating-point Cholesky.
pub fn cholesky_finite(system: &CoxeterSystem) -> bool {
    let n = system.rank();
    let mut a = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in 0..n {
            a[i][j] = if i == j {
                1.0
            } else {
                match system.bond(i, j) {
                    Bond::Finite(m) => -(std::f64::consts::PI / m as f64).cos(),
                    Bond::Infinite => -1.0,
                }
            };
        }
    }
    for k in 0..n {
        let pivot = a[k][k];
        if pivot <= 1e-9 {
            return false;
        }
        for i in k + 1..n {
            let f = a[i][k] / pivot;
            for j in k..n {
                a[i][j] -= f * a[k][j];
            }
        }
    }
    true
}

/// Letter multiplicities of a word.
pub fn multiplicities(rank: usize, w: &Word) -> Vec<usize> {
    (0..rank).map(|s| w.count(s)).collect()
}

/// The word with every occurrence of `s` removed.
pub fn delete_letter(w: &Word, s: usize) -> Word {
    w.iter().filter(|&x| x != s).collect()
}

/// One representative per isomorphism class of edge-labelled complete graphs.
pub fn iso_classes(n: usize, choices: &[Bond]) -> Vec<CoxeterSystem> {
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for sys in all_systems(n, choices) {
        if !sys.is_irreducible() {
            continue;
        }
        let key = |p: &[usize]| -> Vec<String> {
            (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| format!("{:?}", sys.bond(p[i], p[j])))
                .collect()
        };
        let canon = perms.iter().map(|p| key(p)).min().unwrap();
        if seen.insert(canon) {
            out.push(sys);
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}
