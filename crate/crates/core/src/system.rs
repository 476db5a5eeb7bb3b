//! Coxeter systems given by their bond matrix.

use std::fmt;

use crate::catalog::{self, Family};
use crate::error::{Error, Result};
use crate::word::Word;

/// Bond strength `m(s,t)`. The diagonal value 1 is `Finite(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

impl Bond {
    /// Whether the Coxeter graph has an edge for this bond (m >= 3 or m = infinity).
    pub fn is_edge(self) -> bool {
        match self {
            Bond::Finite(m) => m >= 3,
            Bond::Infinite => true,
        }
    }

    pub fn is_commuting(self) -> bool {
        self == Bond::Finite(2)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Bond::Finite(m) => Some(m),
            Bond::Infinite => None,
        }
    }

    pub fn parse(token: &str) -> Option<Bond> {
        match token {
            "inf" | "infinity" | "oo" => Some(Bond::Infinite),
            t => t.parse::<u32>().ok().map(Bond::Finite),
        }
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Finite(m) => write!(f, "{m}"),
            Bond::Infinite => write!(f, "inf"),
        }
    }
}

/// A Coxeter system: a rank and a symmetric bond matrix with unit diagonal.
///
/// Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterSystem {
    rank: usize,
    bonds: Vec<Bond>,
    labels: Vec<String>,
}

/// A degree-1 vertex of the Coxeter graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Endpoint {
    pub generator: usize,
    /// The neighbouring generator.
    pub neighbor: usize,
    pub weight: Bond,
    pub is_large: bool,
    pub is_odd: bool,
}

impl CoxeterSystem {
    /// Builds a system from `(i, j, m)` declarations; undeclared pairs commute.
    pub fn build(rank: usize, declarations: &[(usize, usize, Bond)]) -> Result<Self> {
        let mut bonds = vec![Bond::Finite(2); rank * rank];
        let mut declared = vec![false; rank * rank];
        for i in 0..rank {
            bonds[i * rank + i] = Bond::Finite(1);
        }
        for &(i, j, m) in declarations {
            for index in [i, j] {
                if index >= rank {
                    return Err(Error::IndexOutOfRange { index, rank });
                }
            }
            if i == j {
                return Err(Error::SelfBond(i));
            }
            if let Bond::Finite(v) = m {
                if v < 2 {
                    return Err(Error::BondTooSmall(v));
                }
            }
            if declared[i * rank + j] {
                return Err(Error::DuplicatePair(i.min(j), i.max(j)));
            }
            declared[i * rank + j] = true;
            declared[j * rank + i] = true;
            bonds[i * rank + j] = m;
            bonds[j * rank + i] = m;
        }
        Ok(CoxeterSystem {
            rank,
            bonds,
            labels: (0..rank).map(|i| i.to_string()).collect(),
        })
    }

    /// Parses the line-oriented graph format: `rank N` then `bond i j m` lines.
    pub fn parse_graph(text: &str) -> Result<Self> {
        let mut rank = None;
        let mut decls = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: &str| Error::Parse {
                line: line_no,
                message: message.to_string(),
            };
            let tokens: Vec<&str> = line.split_whitespace().collect();
            match tokens.as_slice() {
                ["rank", n] => {
                    if rank.is_some() {
                        return Err(parse_err("rank declared twice"));
                    }
                    rank = Some(n.parse::<usize>().map_err(|_| parse_err("bad rank"))?);
                }
                ["bond", i, j, m] => {
                    if rank.is_none() {
                        return Err(parse_err("bond before rank"));
                    }
                    let i = i.parse().map_err(|_| parse_err("bad generator index"))?;
                    let j = j.parse().map_err(|_| parse_err("bad generator index"))?;
                    let m = Bond::parse(m).ok_or_else(|| parse_err("bad bond strength"))?;
                    decls.push((i, j, m));
                }
                _ => return Err(parse_err("expected `rank N` or `bond i j m`")),
            }
        }
        let rank = rank.ok_or(Error::Parse {
            line: 0,
            message: "missing `rank` line".into(),
        })?;
        Self::build(rank, &decls)
    }

    /// Parses a named family such as `A 3`, `A3`, `I2 5`, `affC 4`, `affE6`.
    pub fn named(spec: &str) -> Result<Self> {
        catalog::named_system(spec)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.rank, "one label per generator");
        self.labels = labels;
        self
    }

    /// A copy with `m(i,j)` replaced.
    pub fn with_bond(&self, i: usize, j: usize, m: Bond) -> Self {
        assert!(i != j && i < self.rank && j < self.rank);
        let mut out = self.clone();
        out.bonds[i * self.rank + j] = m;
        out.bonds[j * self.rank + i] = m;
        out
    }

    /// A copy with one extra generator appended, bonded to `neighbor` with strength `m`.
    pub fn with_new_generator(&self, neighbor: usize, m: Bond, label: &str) -> Self {
        let n = self.rank + 1;
        let mut decls = Vec::new();
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                let b = self.bond(i, j);
                if b != Bond::Finite(2) {
                    decls.push((i, j, b));
                }
            }
        }
        decls.push((neighbor, self.rank, m));
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        Self::build(n, &decls)
            .expect("extension of a valid system is valid")
            .with_labels(labels)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bond(&self, i: usize, j: usize) -> Bond {
        self.bonds[i * self.rank + j]
    }

    pub fn commute(&self, i: usize, j: usize) -> bool {
        self.bond(i, j).is_commuting()
    }

    /// Letters that do not commute: equal, or joined by a bond other than 2.
    pub fn dependent(&self, i: usize, j: usize) -> bool {
        i == j || !self.commute(i, j)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Coxeter-graph neighbours of `i`.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank).filter(move |&j| j != i && self.bond(i, j).is_edge())
    }

    /// Coxeter-graph edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                if self.bond(i, j).is_edge() {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Finite bond strengths (off-diagonal) occurring in the system.
    pub fn finite_bonds(&self) -> Vec<u32> {
        let mut out: Vec<u32> = (0..self.rank)
            .flat_map(|i| (i + 1..self.rank).map(move |j| (i, j)))
            .filter_map(|(i, j)| self.bond(i, j).finite())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Connected components of the Coxeter graph induced on `subset`.
    ///
    /// Each component is sorted; components are ordered by their smallest member.
    pub fn irreducible_components(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let mut inside = vec![false; self.rank];
        for &s in subset {
            inside[s] = true;
        }
        let mut seen = vec![false; self.rank];
        let mut order: Vec<usize> = subset.to_vec();
        order.sort_unstable();
        order.dedup();
        let mut components = Vec::new();
        for &start in &order {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut k = 0;
            while k < comp.len() {
                let v = comp[k];
                for u in self.neighbors(v) {
                    if inside[u] && !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn is_irreducible(&self) -> bool {
        let all: Vec<usize> = (0..self.rank).collect();
        self.irreducible_components(&all).len() == 1
    }

    /// Degree-1 vertices of the graph induced on `subset`, with their weights.
    pub fn endpoints_within(&self, subset: &[usize]) -> Vec<Endpoint> {
        let mut out = Vec::new();
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &s in &sorted {
            let nbrs: Vec<usize> = sorted
                .iter()
                .copied()
                .filter(|&t| t != s && self.bond(s, t).is_edge())
                .collect();
            if let [t] = nbrs[..] {
                let weight = self.bond(s, t);
                let (is_large, is_odd) = match weight {
                    Bond::Finite(m) => (m > 3, m % 2 == 1),
                    Bond::Infinite => (true, false),
                };
                out.push(Endpoint {
                    generator: s,
                    neighbor: t,
                    weight,
                    is_large,
                    is_odd,
                });
            }
        }
        out
    }

    /// Degree-1 vertices of the whole Coxeter graph.
    pub fn endpoints(&self) -> Vec<Endpoint> {
        let all: Vec<usize> = (0..self.rank).collect();
        self.endpoints_within(&all)
    }

    /// The system generated by `subset`, with the map from new to old indices.
    pub fn restrict(&self, subset: &[usize]) -> (CoxeterSystem, Vec<usize>) {
        let mut map = subset.to_vec();
        map.sort_unstable();
        map.dedup();
        let mut decls = Vec::new();
        for a in 0..map.len() {
            for b in a + 1..map.len() {
                let m = self.bond(map[a], map[b]);
                if m != Bond::Finite(2) {
                    decls.push((a, b, m));
                }
            }
        }
        let labels = map.iter().map(|&i| self.labels[i].clone()).collect();
        let sys = CoxeterSystem::build(map.len(), &decls)
            .expect("restriction of a valid system is valid")
            .with_labels(labels);
        (sys, map)
    }

    /// Classifies the parabolic subgroup generated by `subset` as finite or infinite.
    pub fn classify_finite(&self, subset: &[usize]) -> FiniteTypeReport {
        let decomposition: Vec<(Vec<usize>, Option<Family>)> = self
            .irreducible_components(subset)
            .into_iter()
            .map(|comp| {
                let family = catalog::recognize(self, &comp).filter(|f| f.is_finite());
                (comp, family)
            })
            .collect();
        let finite = decomposition.iter().all(|(_, f)| f.is_some());
        FiniteTypeReport {
            verdict: if finite {
                Verdict::Finite
            } else {
                Verdict::Infinite
            },
            decomposition,
        }
    }

    pub fn is_finite(&self) -> bool {
        let all: Vec<usize> = (0..self.rank).collect();
        self.classify_finite(&all).verdict == Verdict::Finite
    }

    /// Whether every irreducible component is in the CFC-finite catalog.
    pub fn is_cfc_finite(&self) -> bool {
        let all: Vec<usize> = (0..self.rank).collect();
        self.irreducible_components(&all)
            .iter()
            .all(|c| catalog::recognize(self, c).is_some())
    }

    /// Parses a word given as whitespace-separated generator labels.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.split_whitespace()
            .map(|tok| {
                self.labels
                    .iter()
                    .position(|l| l == tok)
                    .ok_or_else(|| Error::UnknownGenerator(tok.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    /// Formats a word with this system's labels; `e` for the identity.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "e".to_string();
        }
        w.iter()
            .map(|x| self.labels[x].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.iter().find(|&x| x >= self.rank) {
            Some(index) => Err(Error::IndexOutOfRange {
                index,
                rank: self.rank,
            }),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Finite,
    Infinite,
}

/// Result of [`CoxeterSystem::classify_finite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteTypeReport {
    pub verdict: Verdict,
    /// Components with the matched finite family, or `None` when unmatched.
    pub decomposition: Vec<(Vec<usize>, Option<Family>)>,
}
