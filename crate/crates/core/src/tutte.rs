//! Simple graphs and their Tutte polynomials.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::system::CoxeterSystem;

/// An undirected simple graph on vertices `0..n`, edges stored as `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut e: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(a, b)| {
                assert!(a != b && a < n && b < n, "edge ({a}, {b}) in a graph on {n} vertices");
                (a.min(b), a.max(b))
            })
            .collect();
        e.sort_unstable();
        e.dedup();
        Graph { n, edges: e }
    }

    /// The Coxeter graph of a system (bond labels dropped).
    pub fn of_system(system: &CoxeterSystem) -> Self {
        Graph::new(system.rank(), &system.edges())
    }

    pub fn path(n: usize) -> Self {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e)
    }

    pub fn cycle(n: usize) -> Self {
        let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        e.push((0, n - 1));
        Graph::new(n, &e)
    }

    /// The star with one centre and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &e)
    }

    pub fn complete(n: usize) -> Self {
        let e: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::new(n, &e)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// The graph induced on `subset`, relabelled `0..subset.len()` in the given order.
    pub fn induced(&self, subset: &[usize]) -> Graph {
        let index: HashMap<usize, usize> = subset.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let e: Vec<_> = self
            .edges
            .iter()
            .filter_map(|(a, b)| Some((*index.get(a)?, *index.get(b)?)))
            .collect();
        Graph::new(subset.len(), &e)
    }
}

/// A bivariate polynomial with non-negative integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TuttePolynomial {
    /// `(i, j) -> c` for the monomial `c x^i y^j`.
    terms: BTreeMap<(usize, usize), u64>,
}

impl TuttePolynomial {
    fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((0, 0), 1);
        TuttePolynomial { terms }
    }

    fn shifted(&self, dx: usize, dy: usize) -> Self {
        TuttePolynomial {
            terms: self.terms.iter().map(|(&(i, j), &c)| ((i + dx, j + dy), c)).collect(),
        }
    }

    fn plus(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&k, &c) in &other.terms {
            *terms.entry(k).or_insert(0) += c;
        }
        TuttePolynomial { terms }
    }

    pub fn times(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (&(i, j), &c) in &self.terms {
            for (&(k, l), &d) in &other.terms {
                *terms.entry((i + k, j + l)).or_insert(0) += c * d;
            }
        }
        TuttePolynomial { terms }
    }

    pub fn coefficient(&self, i: usize, j: usize) -> u64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Monomials `(x-degree, y-degree, coefficient)` in increasing order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.terms.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn eval(&self, x: i64, y: i64) -> i128 {
        self.terms
            .iter()
            .map(|(&(i, j), &c)| c as i128 * (x as i128).pow(i as u32) * (y as i128).pow(j as u32))
            .sum()
    }
}

impl fmt::Display for TuttePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (&(i, j), &c) in self.terms.iter().rev() {
            let mut mono = String::new();
            let var = |v: &str, e: usize| match e {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{e}"),
            };
            let vars = [var("x", i), var("y", j)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>()
                .join("*");
            if c != 1 || vars.is_empty() {
                mono.push_str(&c.to_string());
                if !vars.is_empty() {
                    mono.push('*');
                }
            }
            mono.push_str(&vars);
            parts.push(mono);
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Multigraph state for deletion-contraction: edges as vertex pairs, loops allowed.
type MultiEdges = Vec<(usize, usize)>;

fn normalize(edges: &[(usize, usize)]) -> MultiEdges {
    let mut relabel: BTreeMap<usize, usize> = BTreeMap::new();
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    for (k, v) in verts.into_iter().enumerate() {
        relabel.insert(v, k);
    }
    let mut out: MultiEdges = edges
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (relabel[&a], relabel[&b]);
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort_unstable();
    out
}

fn connected_without(edges: &[(usize, usize)], skip: usize, from: usize, to: usize) -> bool {
    let mut seen = vec![from];
    let mut stack = vec![from];
    while let Some(v) = stack.pop() {
        if v == to {
            return true;
        }
        for (k, &(a, b)) in edges.iter().enumerate() {
            if k == skip {
                continue;
            }
            let other = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if !seen.contains(&other) {
                seen.push(other);
                stack.push(other);
            }
        }
    }
    false
}

fn tutte_rec(edges: MultiEdges, memo: &mut HashMap<MultiEdges, TuttePolynomial>) -> TuttePolynomial {
    if edges.is_empty() {
        return TuttePolynomial::one();
    }
    if let Some(t) = memo.get(&edges) {
        return t.clone();
    }
    let (u, v) = edges[0];
    let rest: MultiEdges = edges[1..].to_vec();
    let result = if u == v {
        tutte_rec(normalize(&rest), memo).shifted(0, 1)
    } else {
        let contracted: MultiEdges = rest
            .iter()
            .map(|&(a, b)| {
                let a = if a == v { u } else { a };
                let b = if b == v { u } else { b };
                (a, b)
            })
            .collect();
        let contracted = tutte_rec(normalize(&contracted), memo);
        if connected_without(&edges, 0, u, v) {
            tutte_rec(normalize(&rest), memo).plus(&contracted)
        } else {
            contracted.shifted(1, 0)
        }
    };
    memo.insert(edges, result.clone());
    result
}

/// Tutte polynomial by memoized deletion-contraction.
pub fn tutte_polynomial(graph: &Graph) -> TuttePolynomial {
    let mut memo = HashMap::new();
    tutte_rec(normalize(graph.edges()), &mut memo)
}

pub fn tutte(graph: &Graph, x: i64, y: i64) -> i128 {
    tutte_polynomial(graph).eval(x, y)
}
