//! Exact arithmetic in the real cyclotomic field Q(theta), theta = 2cos(pi/L).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{self, IntPoly};
use crate::system::{Bond, CoxeterSystem};

/// Working precision (bits) for the first attempt at a sign decision.
const BASE_PRECISION: u64 = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// An element of Q(theta) as `(sum_k num[k] theta^k) / den`.
///
/// Canonical: `num.len()` equals the field degree, `den > 0`, and the
/// numerators share no common factor with `den`. Zero has `den = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    num: Vec<BigInt>,
    den: BigInt,
}

impl FieldElement {
    fn normalized(mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -&*c;
            }
        }
        let g = num.iter().fold(den.clone(), |g, c| g.gcd(c));
        if !g.is_one() {
            for c in num.iter_mut() {
                *c = &*c / &g;
            }
            den /= &g;
        }
        if num.iter().all(|c| c.is_zero()) {
            den = BigInt::one();
        }
        FieldElement { num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    /// Coefficients in the power basis 1, theta, theta^2, ...
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    /// The value when it is rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num.iter().skip(1).all(|c| c.is_zero()) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect();
            return Self::normalized(num, self.den.clone());
        }
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &other.den + b * &self.den)
            .collect();
        Self::normalized(num, &self.den * &other.den)
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.add(&other.neg())
    }

    pub fn mul_int(&self, k: &BigInt) -> FieldElement {
        Self::normalized(self.num.iter().map(|c| c * k).collect(), self.den.clone())
    }

    pub fn scale(&self, q: &BigRational) -> FieldElement {
        Self::normalized(
            self.num.iter().map(|c| c * q.numer()).collect(),
            &self.den * q.denom(),
        )
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            terms.push(match k {
                0 => format!("{c}"),
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{k}"),
            });
        }
        let body = terms.join(" + ");
        if self.den.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{}", self.den)
        }
    }
}

/// The field Q(2cos(pi/L)) with its minimal polynomial and an isolating interval.
///
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct FieldContext {
    order: u64,
    minpoly: IntPoly,
    interval: (BigRational, BigRational),
    /// Bounds on theta^k scaled by 2^BASE_PRECISION, k < degree.
    power_bounds: Vec<(BigInt, BigInt)>,
}

impl FieldContext {
    /// The field generated by 2cos(pi/L).
    pub fn field_for(order: u64) -> Result<Self> {
        if order < 2 {
            return Err(Error::FieldOrder(order));
        }
        let minpoly = poly::cos_minpoly(order);
        let two = BigRational::from_integer(BigInt::from(2));
        let interval = poly::isolate_largest_root(&minpoly, -two.clone(), two);
        let mut ctx = FieldContext {
            order,
            minpoly,
            interval,
            power_bounds: Vec::new(),
        };
        ctx.power_bounds = ctx.bounds_at(BASE_PRECISION);
        Ok(ctx)
    }

    /// The field holding every weight 2cos(pi/m) of `system`.
    ///
    /// Its order is the lcm of the finite bonds that are at least 4; bonds 2
    /// and 3 have rational weights 0 and 1.
    pub fn for_system(system: &CoxeterSystem) -> Self {
        let order = system
            .finite_bonds()
            .into_iter()
            .filter(|&m| m >= 4)
            .fold(2u64, |l, m| l.lcm(&(m as u64)));
        Self::field_for(order).expect("order is at least 2")
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    /// Monic minimal polynomial of theta, lowest degree first.
    pub fn minpoly(&self) -> &[BigInt] {
        &self.minpoly
    }

    /// Interval `(lo, hi]` containing theta and no other root of the minimal polynomial.
    pub fn isolating_interval(&self) -> (&BigRational, &BigRational) {
        (&self.interval.0, &self.interval.1)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            num: vec![BigInt::zero(); self.degree()],
            den: BigInt::one(),
        }
    }

    pub fn from_int(&self, k: i64) -> FieldElement {
        self.from_rational(&BigRational::from_integer(BigInt::from(k)))
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    pub fn from_rational(&self, q: &BigRational) -> FieldElement {
        let mut num = vec![BigInt::zero(); self.degree()];
        num[0] = q.numer().clone();
        FieldElement::normalized(num, q.denom().clone())
    }

    /// The element with the given power-basis coefficients, reduced modulo the minimal polynomial.
    pub fn from_coeffs(&self, coeffs: &[BigRational]) -> FieldElement {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let num: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        FieldElement::normalized(self.reduce(num), den)
    }

    pub fn theta(&self) -> FieldElement {
        self.from_coeffs(&[BigRational::zero(), BigRational::one()])
    }

    fn reduce(&self, mut num: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree();
        for k in (d..num.len()).rev() {
            let c = std::mem::take(&mut num[k]);
            if c.is_zero() {
                continue;
            }
            // x^k = x^(k-d) * (x^d - minpoly)
            for j in 0..d {
                num[k - d + j] -= &c * &self.minpoly[j];
            }
        }
        num.resize(d, BigInt::zero());
        num
    }

    /// 2cos(pi/m) in this field; 2 for an infinite bond.
    pub fn embed_bond(&self, m: Bond) -> Result<FieldElement> {
        match m {
            Bond::Infinite => Ok(self.from_int(2)),
            Bond::Finite(2) => Ok(self.zero()),
            Bond::Finite(3) => Ok(self.one()),
            Bond::Finite(m) if m >= 2 && self.order % m as u64 == 0 => {
                let k = (self.order / m as u64) as usize;
                let coeffs: Vec<BigRational> = poly::dickson(k)
                    .into_iter()
                    .map(BigRational::from_integer)
                    .collect();
                Ok(self.from_coeffs(&coeffs))
            }
            Bond::Finite(m) => Err(Error::BondNotInField {
                bond: m,
                order: self.order,
            }),
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a.add(b)
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        a.sub(b)
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        a.neg()
    }

    pub fn scale(&self, a: &FieldElement, q: &BigRational) -> FieldElement {
        a.scale(q)
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let mut prod = vec![BigInt::zero(); 2 * self.degree() - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        FieldElement::normalized(self.reduce(prod), &a.den * &b.den)
    }

    /// Theta to `bits` binary digits: `A` with `A / 2^bits < theta < (A + 1) / 2^bits`.
    fn theta_floor(&self, bits: u64) -> BigInt {
        let (mut lo, mut hi) = self.interval.clone();
        let scale = BigRational::from_integer(BigInt::one() << bits);
        let width = BigRational::new(BigInt::one(), BigInt::one() << bits);
        let lo_sign = poly::eval(&self.minpoly, &lo).is_positive();
        let two = BigRational::from_integer(BigInt::from(2));
        while &hi - &lo > width {
            let mid = (&lo + &hi) / &two;
            if poly::eval(&self.minpoly, &mid).is_positive() == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        (lo * scale).floor().to_integer()
    }

    fn bounds_at(&self, bits: u64) -> Vec<(BigInt, BigInt)> {
        let d = self.degree();
        if d == 1 {
            return Vec::new();
        }
        let a = self.theta_floor(bits);
        assert!(!a.is_negative(), "theta is non-negative in positive degree");
        let b: BigInt = &a + 1u32;
        let unit = BigInt::one() << bits;
        let mut out = vec![(unit.clone(), unit.clone())];
        let (mut pa, mut pb) = (a.clone(), b.clone());
        for k in 1..d {
            let shift = bits as usize * (k - 1);
            let lo = &pa >> shift;
            let divisor = BigInt::one() << shift;
            let hi = pb.div_ceil(&divisor);
            out.push((lo, hi));
            pa *= &a;
            pb *= &b;
        }
        out
    }

    /// Exact sign of `x`.
    pub fn sign(&self, x: &FieldElement) -> Sign {
        if x.is_zero() {
            return Sign::Zero;
        }
        if self.degree() == 1 {
            return if x.num[0].is_positive() {
                Sign::Positive
            } else {
                Sign::Negative
            };
        }
        if let Some(s) = Self::sign_with(&self.power_bounds, x) {
            return s;
        }
        let mut bits = 2 * BASE_PRECISION;
        loop {
            if let Some(s) = Self::sign_with(&self.bounds_at(bits), x) {
                return s;
            }
            bits *= 2;
        }
    }

    fn sign_with(bounds: &[(BigInt, BigInt)], x: &FieldElement) -> Option<Sign> {
        let mut lower = BigInt::zero();
        let mut upper = BigInt::zero();
        for (c, (lo, hi)) in x.num.iter().zip(bounds) {
            if c.is_positive() {
                lower += c * lo;
                upper += c * hi;
            } else if c.is_negative() {
                lower += c * hi;
                upper += c * lo;
            }
        }
        if lower.is_positive() {
            Some(Sign::Positive)
        } else if upper.is_negative() {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    /// Floating-point approximation, for diagnostics and tests.
    pub fn to_f64(&self, x: &FieldElement) -> f64 {
        let theta = 2.0 * (std::f64::consts::PI / self.order as f64).cos();
        let den = x.den.to_f64().unwrap_or(f64::NAN);
        x.num
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * theta + c.to_f64().unwrap_or(f64::NAN))
            / den
    }
}
