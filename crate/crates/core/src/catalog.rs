//! Named Coxeter families and recognition of irreducible components.
//!
//! Recognition covers the irreducible CFC-finite (equivalently FC-finite)
//! graphs: A_n, B_n, D_n, E_n, F_n, H_n for every n, and I2(m). The finite
//! catalog is the subset A, B, D, E6-E8, F4, H3, H4, I2(m).

use std::fmt;

use crate::error::{Error, Result};
use crate::system::{Bond, CoxeterSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F(usize),
    H(usize),
    I2(u32),
}

impl Family {
    /// Membership in the classical catalog of finite irreducible Coxeter groups.
    pub fn is_finite(self) -> bool {
        match self {
            Family::A(_) | Family::I2(_) => true,
            Family::B(n) => n >= 2,
            Family::D(n) => n >= 4,
            Family::E(n) => (6..=8).contains(&n),
            Family::F(n) => n == 4,
            Family::H(n) => n == 3 || n == 4,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            Family::A(n)
            | Family::B(n)
            | Family::D(n)
            | Family::E(n)
            | Family::F(n)
            | Family::H(n) => n,
            Family::I2(_) => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A(n) => write!(f, "A{n}"),
            Family::B(n) => write!(f, "B{n}"),
            Family::D(n) => write!(f, "D{n}"),
            Family::E(n) => write!(f, "E{n}"),
            Family::F(n) => write!(f, "F{n}"),
            Family::H(n) => write!(f, "H{n}"),
            Family::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// Matches one connected component against the CFC-finite catalog.
pub fn recognize(system: &CoxeterSystem, component: &[usize]) -> Option<Family> {
    let n = component.len();
    match n {
        0 => return None,
        1 => return Some(Family::A(1)),
        2 => {
            return match system.bond(component[0], component[1]) {
                Bond::Finite(3) => Some(Family::A(2)),
                Bond::Finite(4) => Some(Family::B(2)),
                Bond::Finite(m) if m >= 5 => Some(Family::I2(m)),
                _ => None,
            }
        }
        _ => {}
    }
    let mut degree = vec![0usize; n];
    let mut edges = 0;
    for a in 0..n {
        for b in a + 1..n {
            match system.bond(component[a], component[b]) {
                Bond::Infinite => return None,
                Bond::Finite(m) if m >= 6 => return None,
                Bond::Finite(m) if m >= 3 => {
                    degree[a] += 1;
                    degree[b] += 1;
                    edges += 1;
                }
                _ => {}
            }
        }
    }
    if edges != n - 1 {
        return None;
    }
    let adj = |a: usize| -> Vec<usize> {
        (0..n)
            .filter(|&b| b != a && system.bond(component[a], component[b]).is_edge())
            .collect()
    };
    let bond = |a: usize, b: usize| system.bond(component[a], component[b]).finite().unwrap();
    let max_degree = *degree.iter().max().unwrap();
    if max_degree <= 2 {
        // Path: walk from one end.
        let start = (0..n).find(|&a| degree[a] == 1).unwrap();
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while path.len() < n {
            let next = adj(cur).into_iter().find(|&b| b != prev).unwrap();
            prev = cur;
            cur = next;
            path.push(cur);
        }
        let strengths: Vec<u32> = path.windows(2).map(|p| bond(p[0], p[1])).collect();
        let heavy: Vec<usize> = (0..strengths.len()).filter(|&k| strengths[k] > 3).collect();
        return match heavy[..] {
            [] => Some(Family::A(n)),
            [h] => {
                let pos = h.min(strengths.len() - 1 - h);
                match (pos, strengths[h]) {
                    (0, 4) => Some(Family::B(n)),
                    (0, 5) => Some(Family::H(n)),
                    (1, 4) => Some(Family::F(n)),
                    _ => None,
                }
            }
            _ => None,
        };
    }
    let centers: Vec<usize> = (0..n).filter(|&a| degree[a] >= 3).collect();
    if max_degree != 3 || centers.len() != 1 {
        return None;
    }
    for a in 0..n {
        for b in a + 1..n {
            if let Bond::Finite(m) = system.bond(component[a], component[b]) {
                if m > 3 {
                    return None;
                }
            }
        }
    }
    let center = centers[0];
    let mut arms: Vec<usize> = adj(center)
        .into_iter()
        .map(|first| {
            let mut len = 1;
            let mut prev = center;
            let mut cur = first;
            loop {
                let next: Vec<usize> = adj(cur).into_iter().filter(|&b| b != prev).collect();
                match next[..] {
                    [] => break len,
                    [nx] => {
                        prev = cur;
                        cur = nx;
                        len += 1;
                    }
                    _ => unreachable!("single branch vertex"),
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms[..] {
        [1, 1, c] => Some(Family::D(c + 3)),
        [1, 2, c] if c >= 2 => Some(Family::E(c + 4)),
        _ => None,
    }
}

/// A short name such as `A3` or `A2xA1`; other components print as `rank<n>`.
pub fn describe(system: &CoxeterSystem) -> String {
    let all: Vec<usize> = (0..system.rank()).collect();
    let parts: Vec<String> = system
        .irreducible_components(&all)
        .iter()
        .map(|c| match recognize(system, c) {
            Some(f) => f.to_string(),
            None => format!("rank{}", c.len()),
        })
        .collect();
    if parts.is_empty() {
        "trivial".to_string()
    } else {
        parts.join("x")
    }
}

fn labels(range: std::ops::Range<usize>) -> Vec<String> {
    range.map(|i| i.to_string()).collect()
}

fn path_decls(len: usize) -> Vec<(usize, usize, Bond)> {
    (1..len).map(|i| (i - 1, i, Bond::Finite(3))).collect()
}

fn set_bond(decls: &mut [(usize, usize, Bond)], i: usize, j: usize, m: Bond) {
    for d in decls.iter_mut() {
        if (d.0 == i && d.1 == j) || (d.0 == j && d.1 == i) {
            d.2 = m;
        }
    }
}

fn build(rank: usize, decls: &[(usize, usize, Bond)], labels: Vec<String>) -> CoxeterSystem {
    CoxeterSystem::build(rank, decls)
        .expect("catalog systems are well formed")
        .with_labels(labels)
}

fn check_rank(n: usize, min: usize, name: &str) -> Result<()> {
    if n < min {
        return Err(Error::UnknownFamily(format!("{name}{n}")));
    }
    Ok(())
}

/// Type A_n: path s1 - s2 - ... - sn.
pub fn type_a(n: usize) -> CoxeterSystem {
    build(n, &path_decls(n), labels(1..n + 1))
}

/// Type B_n: path with m(s1,s2) = 4.
pub fn type_b(n: usize) -> CoxeterSystem {
    let mut d = path_decls(n);
    set_bond(&mut d, 0, 1, Bond::Finite(4));
    build(n, &d, labels(1..n + 1))
}

/// Type H_n: path with m(s1,s2) = 5.
pub fn type_h(n: usize) -> CoxeterSystem {
    let mut d = path_decls(n);
    set_bond(&mut d, 0, 1, Bond::Finite(5));
    build(n, &d, labels(1..n + 1))
}

/// Type F_n: path with m(s2,s3) = 4.
pub fn type_f(n: usize) -> CoxeterSystem {
    let mut d = path_decls(n);
    set_bond(&mut d, 1, 2, Bond::Finite(4));
    build(n, &d, labels(1..n + 1))
}

/// Type D_n: path s1 - ... - s(n-1) with sn attached to s2.
///
/// D1 is a single vertex and D2 two commuting generators.
pub fn type_d(n: usize) -> CoxeterSystem {
    let mut d = path_decls(n.saturating_sub(1));
    if n >= 3 {
        d.push((1, n - 1, Bond::Finite(3)));
    }
    build(n, &d, labels(1..n + 1))
}

/// Type E_n: path s1 - ... - s(n-1) with sn attached to s3.
///
/// E3 is A2 x A1, E4 = A4, E5 = D5; E9 is the affine E8 graph.
pub fn type_e(n: usize) -> CoxeterSystem {
    let mut d = path_decls(n.saturating_sub(1));
    if n >= 4 {
        d.push((2, n - 1, Bond::Finite(3)));
    }
    build(n, &d, labels(1..n + 1))
}

/// Dihedral I2(m).
pub fn type_i2(m: Bond) -> CoxeterSystem {
    build(2, &[(0, 1, m)], labels(1..3))
}

/// Affine A_n: cycle s0 - s1 - ... - sn - s0; affine A1 has m(s0,s1) = infinity.
pub fn affine_a(n: usize) -> CoxeterSystem {
    if n == 1 {
        return build(2, &[(0, 1, Bond::Infinite)], labels(0..2));
    }
    let mut d = path_decls(n + 1);
    d.push((0, n, Bond::Finite(3)));
    build(n + 1, &d, labels(0..n + 1))
}

/// Affine C_n: path s0 - ... - sn with m(s0,s1) = m(s(n-1),sn) = 4.
pub fn affine_c(n: usize) -> CoxeterSystem {
    if n == 1 {
        return build(2, &[(0, 1, Bond::Infinite)], labels(0..2));
    }
    let mut d = path_decls(n + 1);
    set_bond(&mut d, 0, 1, Bond::Finite(4));
    set_bond(&mut d, n - 1, n, Bond::Finite(4));
    build(n + 1, &d, labels(0..n + 1))
}

/// Affine E6, E7, E8.
///
/// E6: path s1 - s2 - s3 - s4 - s5, with s3 - s6 - s0.
/// E7: path s0 - ... - s6, with s7 attached to s3.
/// E8: path s0 - ... - s7, with s8 attached to s5.
pub fn affine_e(n: usize) -> Result<CoxeterSystem> {
    let t = Bond::Finite(3);
    match n {
        6 => Ok(build(
            7,
            &[(1, 2, t), (2, 3, t), (3, 4, t), (4, 5, t), (3, 6, t), (6, 0, t)],
            labels(0..7),
        )),
        7 => {
            let mut d = path_decls(7);
            d.push((3, 7, t));
            Ok(build(8, &d, labels(0..8)))
        }
        8 => {
            let mut d = path_decls(8);
            d.push((5, 8, t));
            Ok(build(9, &d, labels(0..9)))
        }
        _ => Err(Error::UnknownFamily(format!("affE{n}"))),
    }
}

/// Builds a family by name and rank (`"A"`, `"affC"`, `"I2"`, ...).
pub fn family_system(name: &str, n: u64) -> Result<CoxeterSystem> {
    let r = n as usize;
    match name {
        "A" => check_rank(r, 1, name).map(|_| type_a(r)),
        "B" => check_rank(r, 1, name).map(|_| type_b(r)),
        "D" => check_rank(r, 1, name).map(|_| type_d(r)),
        "E" => check_rank(r, 3, name).map(|_| type_e(r)),
        "F" => check_rank(r, 1, name).map(|_| type_f(r)),
        "H" => check_rank(r, 1, name).map(|_| type_h(r)),
        "I2" => {
            if n < 2 {
                return Err(Error::BondTooSmall(n as u32));
            }
            Ok(type_i2(Bond::Finite(n as u32)))
        }
        "affA" => check_rank(r, 1, name).map(|_| affine_a(r)),
        "affC" => check_rank(r, 1, name).map(|_| affine_c(r)),
        "affE" => affine_e(r),
        _ => Err(Error::UnknownFamily(name.to_string())),
    }
}

/// Parses `A 3`, `A3`, `I2 5`, `I2(5)`, `I2 inf`, `affE 6`, `affE6`.
pub fn named_system(spec: &str) -> Result<CoxeterSystem> {
    let compact: String = spec
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')' && *c != '_')
        .collect();
    let unknown = || Error::UnknownFamily(spec.trim().to_string());
    let (name, rest) = if let Some(rest) = compact.strip_prefix("I2") {
        ("I2", rest)
    } else {
        let split = compact
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(unknown)?;
        compact.split_at(split)
    };
    if name == "I2" && matches!(rest, "inf" | "infinity" | "oo") {
        return Ok(type_i2(Bond::Infinite));
    }
    let n: u64 = rest.parse().map_err(|_| unknown())?;
    family_system(name, n).map_err(|e| match e {
        Error::UnknownFamily(_) => unknown(),
        other => other,
    })
}
