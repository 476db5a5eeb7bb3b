//! Dense univariate polynomials, just enough for the minimal polynomial of
//! 2cos(pi/L) and its root isolation. Coefficient `k` multiplies `x^k`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntPoly = Vec<BigInt>;
type RatPoly = Vec<BigRational>;

fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn int_sub(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let n = a.len().max(b.len());
    let mut out: IntPoly = (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_default();
            let y = b.get(k).cloned().unwrap_or_default();
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Exact quotient of `a` by the monic polynomial `b`; panics on a non-zero remainder.
fn int_div_exact(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let db = b.len() - 1;
    assert!(b[db].is_one(), "divisor must be monic");
    let mut rem = a.to_vec();
    if rem.len() <= db {
        assert!(rem.iter().all(|c| c.is_zero()));
        return Vec::new();
    }
    let mut q = vec![BigInt::zero(); rem.len() - db];
    for k in (0..q.len()).rev() {
        let c = rem[k + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division is not exact");
    q
}

/// The cyclotomic polynomial Phi_n.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1);
    let mut p: IntPoly = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            p = int_div_exact(&p, &cyclotomic(d));
        }
    }
    p
}

/// Dickson polynomial D_k(x) with D_0 = 2, D_1 = x, D_{k+1} = x D_k - D_{k-1}.
///
/// D_k(2cos t) = 2cos(kt).
pub fn dickson(k: usize) -> IntPoly {
    let x: IntPoly = vec![BigInt::zero(), BigInt::one()];
    let mut prev: IntPoly = vec![BigInt::from(2)];
    if k == 0 {
        return prev;
    }
    let mut cur = x.clone();
    for _ in 1..k {
        let next = int_sub(&int_mul(&x, &cur), &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Minimal polynomial of 2cos(pi/L), monic with integer coefficients.
///
/// The primitive 2L-th roots of unity z map to x = z + 1/z; the palindromic
/// Phi_2L(z) = z^d (a_d + sum_k a_{d+k} (z^k + z^-k)) becomes
/// a_d + sum_k a_{d+k} D_k(x).
pub fn cos_minpoly(l: u64) -> IntPoly {
    let phi = cyclotomic(2 * l);
    let d = (phi.len() - 1) / 2;
    let mut out: IntPoly = vec![phi[d].clone()];
    for k in 1..=d {
        let c = &phi[d + k];
        if c.is_zero() {
            continue;
        }
        let dk: IntPoly = dickson(k).into_iter().map(|x| x * c).collect();
        out = int_sub(&out, &dk.iter().map(|x| -x).collect::<Vec<_>>());
    }
    trim(&mut out);
    out
}

fn to_rat(p: &[BigInt]) -> RatPoly {
    p.iter().cloned().map(BigRational::from_integer).collect()
}

fn rat_rem(a: &[BigRational], b: &[BigRational]) -> RatPoly {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    while r.len() > db {
        let top = r.len() - 1;
        let c = &r[top] / &lead;
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            r[top - db + j] -= t;
        }
        r.pop();
        trim(&mut r);
    }
    trim(&mut r);
    r
}

fn rat_eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

/// Evaluates an integer polynomial at a rational point.
pub fn eval(p: &[BigInt], x: &BigRational) -> BigRational {
    rat_eval(&to_rat(p), x)
}

/// A Sturm sequence for a square-free polynomial.
pub struct Sturm(Vec<RatPoly>);

impl Sturm {
    pub fn new(p: &[BigInt]) -> Self {
        let p0 = to_rat(p);
        let p1: RatPoly = p0
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
            .collect();
        let mut seq = vec![p0, p1];
        loop {
            let n = seq.len();
            if seq[n - 1].is_empty() {
                seq.pop();
                break;
            }
            let r: RatPoly = rat_rem(&seq[n - 2], &seq[n - 1])
                .into_iter()
                .map(|c| -c)
                .collect();
            if r.is_empty() {
                break;
            }
            seq.push(r);
        }
        Sturm(seq)
    }

    fn variations(&self, x: &BigRational) -> usize {
        let signs: Vec<bool> = self
            .0
            .iter()
            .map(|q| rat_eval(q, x))
            .filter(|v| !v.is_zero())
            .map(|v| v.is_positive())
            .collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Number of distinct real roots in `(a, b]`; `a` must not be a root.
    pub fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations(a) - self.variations(b)
    }
}

/// An interval `(lo, hi]` with dyadic endpoints isolating the largest real root of `p`.
pub fn isolate_largest_root(p: &[BigInt], lo: BigRational, hi: BigRational) -> (BigRational, BigRational) {
    let sturm = Sturm::new(p);
    let (mut lo, mut hi) = (lo, hi);
    assert!(sturm.count(&lo, &hi) >= 1, "no root in the starting interval");
    let two = BigRational::from_integer(BigInt::from(2));
    while sturm.count(&lo, &hi) > 1 {
        let mid = (&lo + &hi) / &two;
        if sturm.count(&mid, &hi) >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> IntPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn dickson_low_degrees() {
        assert_eq!(dickson(2), ints(&[-2, 0, 1]));
        assert_eq!(dickson(3), ints(&[0, -3, 0, 1]));
    }

    #[test]
    fn minpolys() {
        assert_eq!(cos_minpoly(2), ints(&[0, 1]));
        assert_eq!(cos_minpoly(3), ints(&[-1, 1]));
        assert_eq!(cos_minpoly(4), ints(&[-2, 0, 1]));
        assert_eq!(cos_minpoly(5), ints(&[-1, -1, 1]));
        assert_eq!(cos_minpoly(6), ints(&[-3, 0, 1]));
        // 2cos(pi/7): x^3 - x^2 - 2x + 1
        assert_eq!(cos_minpoly(7), ints(&[1, -2, -1, 1]));
    }

    #[test]
    fn sturm_counts_roots() {
        let p = ints(&[-2, 0, 1]);
        let s = Sturm::new(&p);
        let r = |n: i64| BigRational::from_integer(BigInt::from(n));
        assert_eq!(s.count(&r(-3), &r(3)), 2);
        assert_eq!(s.count(&r(0), &r(3)), 1);
        let (lo, hi) = isolate_largest_root(&p, r(-2), r(2));
        assert!(lo < hi && s.count(&lo, &hi) == 1 && lo >= r(0));
    }
}
