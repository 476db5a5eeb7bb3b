//! The root automaton: root sequences, reducedness, reduction and lengths.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement, Sign};
use crate::system::{Bond, CoxeterSystem};
use crate::word::Word;

/// Coordinates of a vector in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootVector(pub Vec<FieldElement>);

impl RootVector {
    pub fn coords(&self) -> &[FieldElement] {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// 2cos(pi/m) stored in the cheapest form available.
#[derive(Debug, Clone)]
enum Weight {
    Zero,
    One,
    Int(BigInt),
    Elem(FieldElement),
}

/// Root-automaton computations for one system over its weight field.
#[derive(Debug, Clone)]
pub struct RootEngine {
    system: CoxeterSystem,
    field: FieldContext,
    weights: Vec<Weight>,
}

impl RootEngine {
    /// An engine over the smallest shared field of the system.
    pub fn new(system: &CoxeterSystem) -> Self {
        let field = FieldContext::for_system(system);
        Self::with_field(system, field).expect("system field holds every weight")
    }

    /// An engine over a caller-chosen field, which must contain every weight.
    pub fn with_field(system: &CoxeterSystem, field: FieldContext) -> Result<Self> {
        let n = system.rank();
        let mut weights = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let b = system.bond(i, j);
                let w = if i == j {
                    Weight::Zero
                } else {
                    match b {
                        Bond::Finite(2) => Weight::Zero,
                        Bond::Finite(3) => Weight::One,
                        Bond::Infinite => Weight::Int(BigInt::from(2)),
                        _ => {
                            let e = field.embed_bond(b)?;
                            match e.as_rational() {
                                Some(q) if q.is_integer() => Weight::Int(q.to_integer()),
                                _ => Weight::Elem(e),
                            }
                        }
                    }
                };
                weights.push(w);
            }
        }
        Ok(RootEngine {
            system: system.clone(),
            field,
            weights,
        })
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    /// The weight 2cos(pi/m(i,j)) (0 on the diagonal).
    pub fn weight(&self, i: usize, j: usize) -> FieldElement {
        match &self.weights[i * self.rank() + j] {
            Weight::Zero => self.field.zero(),
            Weight::One => self.field.one(),
            Weight::Int(k) => self.field.one().mul_int(k),
            Weight::Elem(e) => e.clone(),
        }
    }

    pub fn simple_root(&self, i: usize) -> RootVector {
        let mut v = vec![self.field.zero(); self.rank()];
        v[i] = self.field.one();
        RootVector(v)
    }

    pub fn zero_vector(&self) -> RootVector {
        RootVector(vec![self.field.zero(); self.rank()])
    }

    /// F_i: coordinate `i` becomes `-v_i + sum_j 2cos(pi/m(i,j)) v_j`.
    pub fn apply_generator(&self, i: usize, v: &RootVector) -> RootVector {
        let n = self.rank();
        let mut acc = v.0[i].neg();
        for j in 0..n {
            if v.0[j].is_zero() {
                continue;
            }
            match &self.weights[i * n + j] {
                Weight::Zero => {}
                Weight::One => acc = acc.add(&v.0[j]),
                Weight::Int(k) => acc = acc.add(&v.0[j].mul_int(k)),
                Weight::Elem(e) => acc = acc.add(&self.field.mul(e, &v.0[j])),
            }
        }
        let mut out = v.clone();
        out.0[i] = acc;
        out
    }

    /// Sign of a root: the common sign of its non-zero coordinates.
    pub fn root_sign(&self, v: &RootVector) -> Sign {
        let mut signs = v
            .0
            .iter()
            .filter(|c| !c.is_zero())
            .map(|c| self.field.sign(c));
        let first = match signs.next() {
            Some(s) => s,
            None => return Sign::Zero,
        };
        debug_assert!(signs.all(|s| s == first), "mixed signs in a root");
        first
    }

    /// Roots r(x_1), r(x_1 x_2), ..., r(x_1 ... x_m).
    pub fn root_sequence(&self, w: &Word) -> Result<Vec<RootVector>> {
        if w.is_empty() {
            return Err(Error::Precondition("root sequence of the empty word".into()));
        }
        let mut v = self.simple_root(w[0]);
        let mut out = Vec::with_capacity(w.len());
        out.push(v.clone());
        for x in w.iter().skip(1) {
            v = self.apply_generator(x, &v);
            out.push(v.clone());
        }
        Ok(out)
    }

    /// The smallest `j > i` with r(x_i ... x_j) negative, if any.
    fn first_negative_from(&self, w: &Word, i: usize) -> Option<usize> {
        let mut v = self.simple_root(w[i]);
        for j in i + 1..w.len() {
            v = self.apply_generator(w[j], &v);
            if self.root_sign(&v) == Sign::Negative {
                return Some(j);
            }
        }
        None
    }

    /// The lexicographically first pair `(i, j)` whose root goes negative.
    fn first_negative_pair(&self, w: &Word) -> Option<(usize, usize)> {
        (0..w.len()).find_map(|i| self.first_negative_from(w, i).map(|j| (i, j)))
    }

    /// Reduced iff every root of every suffix's root sequence is positive.
    pub fn is_reduced(&self, w: &Word) -> bool {
        self.first_negative_pair(w).is_none()
    }

    /// Deletes the first negative pair until none is left.
    pub fn reduce(&self, w: &Word) -> Word {
        let mut cur = w.clone();
        while let Some((i, j)) = self.first_negative_pair(&cur) {
            cur = cur.without_pair(i, j);
        }
        cur
    }

    pub fn length(&self, w: &Word) -> usize {
        self.reduce(w).len()
    }

    pub fn equal_elements(&self, u: &Word, w: &Word) -> bool {
        self.length(&u.reversed().concat(w)) == 0
    }

    /// Descent set of the element represented by `w`.
    pub fn descents(&self, w: &Word, side: Side) -> Vec<usize> {
        let w = self.reduce(w);
        (0..self.rank())
            .filter(|&s| {
                let longer = match side {
                    Side::Left => Word::new(vec![s]).concat(&w),
                    Side::Right => w.concat(&Word::new(vec![s])),
                };
                !self.is_reduced(&longer)
            })
            .collect()
    }

    /// Length of `w^k`.
    pub fn power_length(&self, w: &Word, k: usize) -> usize {
        self.length(&w.power(k))
    }

    /// The first `k <= bound` with `l(w^k) < k l(w)`.
    pub fn first_log_failure(&self, w: &Word, bound: usize) -> Option<usize> {
        let l = self.length(w);
        (1..=bound).find(|&k| self.power_length(w, k) != k * l)
    }

    pub fn is_logarithmic_up_to(&self, w: &Word, bound: usize) -> bool {
        self.first_log_failure(w, bound).is_none()
    }

    /// B(u, v) for the form with B(e_i, e_j) = -cos(pi/m(i,j)).
    pub fn bilinear(&self, u: &RootVector, v: &RootVector) -> FieldElement {
        let n = self.rank();
        let half = num_rational::BigRational::new(BigInt::one(), BigInt::from(2));
        let mut twice = self.field.zero();
        for i in 0..n {
            if u.0[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if v.0[j].is_zero() {
                    continue;
                }
                let uv = self.field.mul(&u.0[i], &v.0[j]);
                twice = if i == j {
                    twice.add(&uv.mul_int(&BigInt::from(2)))
                } else {
                    twice.sub(&self.field.mul(&self.weight(i, j), &uv))
                };
            }
        }
        twice.scale(&half)
    }

    /// F_w = F_{x_k} o ... o F_{x_1} as a matrix.
    pub fn action(&self, w: &Word) -> ReflectionAction {
        let columns: Vec<RootVector> = (0..self.rank())
            .map(|c| {
                w.iter()
                    .fold(self.simple_root(c), |v, x| self.apply_generator(x, &v))
            })
            .collect();
        ReflectionAction { columns }
    }

    /// The linear map of the group element `s_{x_1} ... s_{x_k}` (so `x_k` acts first).
    pub fn element_action(&self, w: &Word) -> ReflectionAction {
        self.action(&w.reversed())
    }
}

/// A linear map stored by the images of the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReflectionAction {
    columns: Vec<RootVector>,
}

impl ReflectionAction {
    pub fn image(&self, basis: usize) -> &RootVector {
        &self.columns[basis]
    }

    pub fn apply(&self, v: &RootVector, field: &FieldContext) -> RootVector {
        let n = self.columns.len();
        let mut out = vec![field.zero(); n];
        for (c, col) in self.columns.iter().enumerate() {
            if v.0[c].is_zero() {
                continue;
            }
            for (r, entry) in col.0.iter().enumerate() {
                out[r] = out[r].add(&field.mul(entry, &v.0[c]));
            }
        }
        RootVector(out)
    }

    pub fn is_identity(&self) -> bool {
        self.columns.iter().enumerate().all(|(c, col)| {
            col.0
                .iter()
                .enumerate()
                .all(|(r, e)| if r == c { e.as_rational().is_some_and(|q| q.is_one()) } else { e.is_zero() })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn w(v: &[usize]) -> Word {
        Word::new(v.to_vec())
    }

    #[test]
    fn a2_root_sequence() {
        let eng = RootEngine::new(&catalog::type_a(2));
        let f = eng.field();
        let seq = eng.root_sequence(&w(&[0, 1, 0])).unwrap();
        let v = |a: i64, b: i64| RootVector(vec![f.from_int(a), f.from_int(b)]);
        assert_eq!(seq, vec![v(1, 0), v(1, 1), v(0, 1)]);
        let seq = eng.root_sequence(&w(&[0, 1, 0, 1])).unwrap();
        assert_eq!(seq[3], v(0, -1));
        assert!(eng.root_sequence(&Word::empty()).is_err());
    }

    #[test]
    fn b2_root_sequence() {
        let eng = RootEngine::new(&catalog::type_i2(Bond::Finite(4)));
        let f = eng.field();
        let v = eng.apply_generator(1, &eng.simple_root(0));
        assert_eq!(v, RootVector(vec![f.one(), f.theta()]));
        let seq = eng.root_sequence(&w(&[0, 1, 0, 1])).unwrap();
        assert_eq!(seq[3], eng.simple_root(0));
        assert_eq!(eng.apply_generator(0, &eng.simple_root(0)), RootVector(vec![f.from_int(-1), f.zero()]));
    }

    #[test]
    fn reduction() {
        let eng = RootEngine::new(&catalog::type_a(2));
        assert_eq!(eng.reduce(&w(&[0, 1, 0, 1])), w(&[1, 0]));
        assert_eq!(eng.reduce(&Word::empty()), Word::empty());
        let a3 = RootEngine::new(&catalog::type_a(3));
        assert_eq!(a3.reduce(&w(&[1, 1, 0, 2])), w(&[0, 2]));
        assert!(a3.is_reduced(&w(&[1, 0, 2, 1])));
        assert!(!a3.is_reduced(&w(&[2, 2])));
    }

    #[test]
    fn descent_sets() {
        let eng = RootEngine::new(&catalog::type_a(2));
        assert_eq!(eng.descents(&w(&[0, 1]), Side::Left), vec![0]);
        assert_eq!(eng.descents(&w(&[0, 1]), Side::Right), vec![1]);
        assert!(eng.descents(&Word::empty(), Side::Left).is_empty());
        let a3 = RootEngine::new(&catalog::type_a(3));
        assert_eq!(a3.descents(&w(&[1, 0, 2, 1]), Side::Left), vec![1]);
    }

    #[test]
    fn actions() {
        let eng = RootEngine::new(&catalog::type_h(3));
        assert!(eng.action(&w(&[0, 0])).is_identity());
        assert!(eng.element_action(&w(&[0, 1]).power(5)).is_identity());
        assert!(!eng.action(&w(&[0, 1]).power(4)).is_identity());
        let r = eng.simple_root(1);
        assert_eq!(eng.bilinear(&r, &r), eng.field().one());
    }
}
