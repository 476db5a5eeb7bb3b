//! Coxeter elements, acyclic orientations, source-to-sink flips, conjugacy.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::roots::{ReflectionAction, RootEngine};
use crate::system::{CoxeterSystem, Verdict};
use crate::tutte::Graph;
use crate::word::Word;

/// Default cap on group enumeration for conjugacy checks.
pub const DEFAULT_GROUP_CAP: usize = 100_000;

/// An orientation of every edge of a graph; `arcs[k]` orients `graph.edges()[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AcyclicOrientation {
    n: usize,
    arcs: Vec<(usize, usize)>,
}

impl AcyclicOrientation {
    fn from_mask(graph: &Graph, mask: u64) -> Self {
        let arcs = graph
            .edges()
            .iter()
            .enumerate()
            .map(|(k, &(a, b))| if mask >> k & 1 == 0 { (a, b) } else { (b, a) })
            .collect();
        AcyclicOrientation {
            n: graph.vertex_count(),
            arcs,
        }
    }

    /// Directed edges `(tail, head)`, in the graph's edge order.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// The lexicographically least topological order, or `None` with a directed cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for &(_, h) in &self.arcs {
            indeg[h] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for &(t, h) in &self.arcs {
                if t == v {
                    indeg[h] -= 1;
                    if indeg[h] == 0 {
                        ready.insert(h);
                    }
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.arcs.iter().all(|&(_, h)| h != v)
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.is_source(v)).collect()
    }
}

/// Orient `{s_i, s_j}` as `(s_i, s_j)` when `s_i` comes first in `c`.
pub fn coxeter_to_orientation(system: &CoxeterSystem, c: &Word) -> Result<AcyclicOrientation> {
    let n = system.rank();
    let mut position = vec![usize::MAX; n];
    for (k, x) in c.iter().enumerate() {
        if x >= n || position[x] != usize::MAX {
            return Err(Error::Precondition(format!("{c} is not a Coxeter element word")));
        }
        position[x] = k;
    }
    if c.len() != n {
        return Err(Error::Precondition(format!("{c} is not a Coxeter element word")));
    }
    let arcs = system
        .edges()
        .into_iter()
        .map(|(a, b)| if position[a] < position[b] { (a, b) } else { (b, a) })
        .collect();
    Ok(AcyclicOrientation { n, arcs })
}

/// The lexicographically least linear extension of an acyclic orientation.
pub fn orientation_to_coxeter(o: &AcyclicOrientation) -> Result<Word> {
    o.topological_order()
        .map(Word::new)
        .ok_or_else(|| Error::Precondition("orientation has a directed cycle".into()))
}

/// Every acyclic orientation, by brute force over all `2^|E|` orientations.
pub fn acyclic_orientations(graph: &Graph) -> Vec<AcyclicOrientation> {
    let e = graph.edges().len();
    assert!(e < 40, "too many edges for exhaustive orientation");
    (0..1u64 << e)
        .map(|mask| AcyclicOrientation::from_mask(graph, mask))
        .filter(|o| o.is_acyclic())
        .collect()
}

/// Reverse every edge at the source `v`, making it a sink.
pub fn source_to_sink(o: &AcyclicOrientation, v: usize) -> Result<AcyclicOrientation> {
    if v >= o.n || !o.is_source(v) {
        return Err(Error::Precondition(format!("vertex {v} is not a source")));
    }
    let arcs = o
        .arcs
        .iter()
        .map(|&(t, h)| if t == v { (h, t) } else { (t, h) })
        .collect();
    Ok(AcyclicOrientation { n: o.n, arcs })
}

/// Acyclic orientations grouped into classes under source-to-sink flips.
///
/// Classes are sorted internally and by their first member.
pub fn kappa_partition(graph: &Graph) -> Vec<Vec<AcyclicOrientation>> {
    let all = acyclic_orientations(graph);
    let index: HashMap<AcyclicOrientation, usize> =
        all.iter().cloned().enumerate().map(|(k, o)| (o, k)).collect();
    let mut class = vec![usize::MAX; all.len()];
    let mut classes = Vec::new();
    for start in 0..all.len() {
        if class[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class[start] = id;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(k) = queue.pop_front() {
            for v in all[k].sources() {
                let next = source_to_sink(&all[k], v).expect("v is a source");
                let j = index[&next];
                if class[j] == usize::MAX {
                    class[j] = id;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        classes.push(members.into_iter().map(|k| all[k].clone()).collect::<Vec<_>>());
    }
    classes
}

pub fn kappa_classes(graph: &Graph) -> usize {
    kappa_partition(graph).len()
}

/// Words of all Coxeter elements, one per acyclic orientation (lex-least linear extension).
pub fn coxeter_elements(system: &CoxeterSystem) -> Vec<Word> {
    acyclic_orientations(&Graph::of_system(system))
        .iter()
        .map(|o| orientation_to_coxeter(o).expect("acyclic"))
        .collect()
}

/// Every element of a finite group, as one reduced word each (BFS order).
pub fn group_elements(engine: &RootEngine, cap: usize) -> Result<Vec<(Word, ReflectionAction)>> {
    let start = Word::empty();
    let mut seen: HashSet<ReflectionAction> = HashSet::new();
    let id = engine.element_action(&start);
    seen.insert(id.clone());
    let mut out = vec![(start, id)];
    let mut k = 0;
    while k < out.len() {
        let u = out[k].0.clone();
        k += 1;
        for s in 0..engine.rank() {
            let v = u.concat(&Word::new(vec![s]));
            let m = engine.element_action(&v);
            if seen.contains(&m) {
                continue;
            }
            if seen.len() >= cap {
                return Err(Error::CapExceeded {
                    what: "group enumeration",
                    cap,
                });
            }
            seen.insert(m.clone());
            out.push((v, m));
        }
    }
    Ok(out)
}

/// Coxeter elements of a finite system partitioned into conjugacy classes by brute force.
pub fn conjugacy_classes_of_coxeter_elements(system: &CoxeterSystem, cap: usize) -> Result<Vec<Vec<Word>>> {
    let all: Vec<usize> = (0..system.rank()).collect();
    if system.classify_finite(&all).verdict != Verdict::Finite {
        return Err(Error::Precondition("conjugacy check needs a finite group".into()));
    }
    let engine = RootEngine::new(system);
    let group = group_elements(&engine, cap)?;
    let coxeter = coxeter_elements(system);
    let keys: Vec<ReflectionAction> = coxeter.iter().map(|c| engine.element_action(c)).collect();
    let mut class = vec![usize::MAX; coxeter.len()];
    let mut classes: Vec<Vec<Word>> = Vec::new();
    for i in 0..coxeter.len() {
        if class[i] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let conjugates: HashSet<ReflectionAction> = group
            .iter()
            .map(|(g, _)| engine.element_action(&g.concat(&coxeter[i]).concat(&g.reversed())))
            .collect();
        let mut members = Vec::new();
        for j in i..coxeter.len() {
            if class[j] == usize::MAX && conjugates.contains(&keys[j]) {
                class[j] = id;
                members.push(coxeter[j].clone());
            }
        }
        classes.push(members);
    }
    Ok(classes)
}
