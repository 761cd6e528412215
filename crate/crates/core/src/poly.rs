//! Sparse multivariate polynomials over ℚ in the simple roots `α_1..α_ℓ`,
//! with the simple reflections and divided differences of a Cartan matrix.
//!
//! A polynomial is stored as `scale · Σ c_m x^m` with integer `c_m` and a
//! rational `scale`; the integer content is pulled into `scale` after every
//! operation so coefficients stay small. Integer coefficients use `i128` and
//! promote to `BigInt` on overflow, so arithmetic is exact at any size.

use std::fmt;
use std::ops::{AddAssign, Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};

/// Bits per exponent in a packed monomial.
const BITS: u32 = 8;
const MASK: u64 = (1 << BITS) - 1;
/// Maximum number of variables a packed monomial can hold.
pub const MAX_VARS: usize = 8;

/// Exact integer with an `i128` fast path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Int {
    Small(i128),
    Big(BigInt),
}

impl Int {
    pub fn zero() -> Self {
        Int::Small(0)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Int::Small(v) => *v == 0,
            Int::Big(b) => b.is_zero(),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => b.clone(),
        }
    }

    fn from_big(b: BigInt) -> Self {
        match b.to_i128() {
            Some(v) => Int::Small(v),
            None => Int::Big(b),
        }
    }

    pub fn mul_ref(&self, o: &Int) -> Int {
        match (self, o) {
            (Int::Small(a), Int::Small(b)) => match a.checked_mul(*b) {
                Some(v) => Int::Small(v),
                None => Int::Big(BigInt::from(*a) * BigInt::from(*b)),
            },
            _ => Int::from_big(self.to_bigint() * o.to_bigint()),
        }
    }

    pub fn mul_small(&self, k: i128) -> Int {
        self.mul_ref(&Int::Small(k))
    }

    fn add_ref(&mut self, o: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, o) {
            if let Some(v) = a.checked_add(*b) {
                *self = Int::Small(v);
                return;
            }
        }
        *self = Int::from_big(self.to_bigint() + o.to_bigint());
    }


    fn abs_big(&self) -> BigInt {
        self.to_bigint().abs()
    }

    fn div_exact(&self, d: &BigInt) -> Int {
        match (self, d.to_i128()) {
            (Int::Small(a), Some(dd)) => Int::Small(a / dd),
            _ => Int::from_big(self.to_bigint() / d),
        }
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::Big(-BigInt::from(v)),
            },
            Int::Big(b) => Int::from_big(-b),
        }
    }
}

fn exponent(m: u64, i: usize) -> u32 {
    ((m >> (BITS * i as u32)) & MASK) as u32
}

fn with_exponent(m: u64, i: usize, e: u32) -> u64 {
    let shift = BITS * i as u32;
    (m & !(MASK << shift)) | ((e as u64) << shift)
}

fn unit(i: usize) -> u64 {
    1 << (BITS * i as u32)
}

/// Polynomial in `nvars` variables; variable `i` (0-based) stands for `α_{i+1}`.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    nvars: usize,
    scale: BigRational,
    terms: FxHashMap<u64, Int>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.sub(other).is_zero()
    }
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        MultiPoly {
            nvars,
            scale: BigRational::one(),
            terms: FxHashMap::default(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(0, Int::Small(1));
            p.scale = c;
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigRational::one())
    }

    /// `Σ c_i x_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let mut p = Self::zero(coeffs.len());
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                p.terms.insert(unit(i), Int::Small(c as i128));
            }
        }
        p.normalize();
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self) -> &BigRational {
        &self.scale
    }

    /// All `(exponents, coefficient)` pairs, sorted by exponent vector.
    pub fn terms(&self) -> Vec<(Vec<u32>, BigRational)> {
        let mut out: Vec<(Vec<u32>, BigRational)> = self
            .terms
            .iter()
            .map(|(&m, c)| {
                (
                    (0..self.nvars).map(|i| exponent(m, i)).collect(),
                    &self.scale * BigRational::from_integer(c.to_bigint()),
                )
            })
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        let m = exps
            .iter()
            .enumerate()
            .fold(0u64, |m, (i, &e)| with_exponent(m, i, e));
        match self.terms.get(&m) {
            Some(c) => &self.scale * BigRational::from_integer(c.to_bigint()),
            None => BigRational::zero(),
        }
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&vec![0; self.nvars])
    }

    fn total_degree(&self, m: u64) -> u32 {
        (0..self.nvars).map(|i| exponent(m, i)).sum()
    }

    /// Degree of a homogeneous polynomial; `None` for zero or inhomogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|&m| self.total_degree(m));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Moves the integer content (and a sign convention) into `scale`.
    fn normalize(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
        if self.terms.is_empty() {
            self.scale = BigRational::one();
            return;
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(&c.abs_big());
            if g.is_one() {
                break;
            }
        }
        if g.is_zero() || g.is_one() {
            return;
        }
        for c in self.terms.values_mut() {
            *c = c.div_exact(&g);
        }
        self.scale = &self.scale * BigRational::from_integer(g);
    }

    /// Brings `a` and `b` onto a common integer scale; returns the multipliers.
    fn common_scale(a: &BigRational, b: &BigRational) -> (BigRational, BigInt, BigInt) {
        let l = a.denom().lcm(b.denom());
        let g = a.numer().gcd(b.numer());
        let g = if g.is_zero() { BigInt::one() } else { g };
        let ka = a.numer() / &g * (&l / a.denom());
        let kb = b.numer() / &g * (&l / b.denom());
        (BigRational::new(g, l), ka, kb)
    }

    fn combine(&self, other: &MultiPoly, sign: i128) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            let mut o = other.clone();
            if sign < 0 {
                o.scale = -o.scale;
            }
            return o;
        }
        let (scale, ka, kb) = Self::common_scale(&self.scale, &other.scale);
        let (ka, kb) = (Int::from_big(ka), Int::from_big(kb).mul_small(sign));
        let mut terms: FxHashMap<u64, Int> = FxHashMap::default();
        terms.reserve(self.terms.len() + other.terms.len());
        for (&m, c) in &self.terms {
            terms.insert(m, c.mul_ref(&ka));
        }
        for (&m, c) in &other.terms {
            terms.entry(m).or_insert_with(Int::zero).add_ref(&c.mul_ref(&kb));
        }
        let mut p = MultiPoly {
            nvars: self.nvars,
            scale,
            terms,
        };
        p.normalize();
        p
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.combine(other, -1)
    }

    pub fn scale_by(&self, k: &BigRational) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        let mut p = self.clone();
        p.scale = &p.scale * k;
        p
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut terms: FxHashMap<u64, Int> = FxHashMap::default();
        for (&m1, c1) in &self.terms {
            for (&m2, c2) in &other.terms {
                terms.entry(m1 + m2).or_insert_with(Int::zero).add_ref(&c1.mul_ref(c2));
            }
        }
        let mut p = MultiPoly {
            nvars: self.nvars,
            scale: &self.scale * &other.scale,
            terms,
        };
        p.normalize();
        p
    }

    /// `s_i · f`, where `s_i α_j = α_j − a_ij α_i` (0-based `i`,
    /// `cartan[i][j] = ⟨α_j, α_i^∨⟩`).
    pub fn reflect(&self, cartan: &[Vec<i64>], i: usize) -> MultiPoly {
        let mut out: FxHashMap<u64, Int> = FxHashMap::default();
        self.accumulate_reflection(cartan, i, 1, &mut out);
        let mut p = MultiPoly {
            nvars: self.nvars,
            scale: self.scale.clone(),
            terms: out,
        };
        p.normalize();
        p
    }

    fn accumulate_reflection(
        &self,
        cartan: &[Vec<i64>],
        i: usize,
        sign: i128,
        out: &mut FxHashMap<u64, Int>,
    ) {
        let nbrs: Vec<(usize, i128)> = (0..self.nvars)
            .filter(|&j| j != i && cartan[i][j] != 0)
            .map(|j| (j, -cartan[i][j] as i128))
            .collect();
        let mut acc: Vec<(u64, Int)> = Vec::new();
        let mut next: Vec<(u64, Int)> = Vec::new();
        for (&m, c) in &self.terms {
            let ei = exponent(m, i);
            let mut base = with_exponent(m, i, ei);
            for &(j, _) in &nbrs {
                base = with_exponent(base, j, 0);
            }
            let c0 = if ei % 2 == 1 { -c.clone() } else { c.clone() };
            acc.clear();
            acc.push((base, c0.mul_small(sign)));
            // (x_j + k x_i)^e = Σ_t C(e,t) k^t x_j^(e−t) x_i^t
            for &(j, k) in &nbrs {
                let e = exponent(m, j);
                if e == 0 {
                    continue;
                }
                next.clear();
                let mut binom: i128 = 1;
                let mut kp: i128 = 1;
                for t in 0..=e {
                    let f = binom * kp;
                    for (mono, cc) in &acc {
                        let mono = *mono + (e - t) as u64 * unit(j) + t as u64 * unit(i);
                        next.push((mono, cc.mul_small(f)));
                    }
                    binom = binom * (e - t) as i128 / (t + 1) as i128;
                    kp *= k;
                }
                std::mem::swap(&mut acc, &mut next);
            }
            for (mono, cc) in acc.drain(..) {
                out.entry(mono).or_insert_with(Int::zero).add_ref(&cc);
            }
        }
    }

    /// `∂_i f = (f − s_i f) / α_i`.
    pub fn divided_difference(&self, cartan: &[Vec<i64>], i: usize) -> Result<MultiPoly> {
        let mut diff: FxHashMap<u64, Int> = self.terms.clone();
        self.accumulate_reflection(cartan, i, -1, &mut diff);
        let mut terms: FxHashMap<u64, Int> = FxHashMap::default();
        terms.reserve(diff.len());
        for (m, c) in diff {
            if c.is_zero() {
                continue;
            }
            let ei = exponent(m, i);
            if ei == 0 {
                return Err(Error::Internal(format!(
                    "f − s_{} f is not divisible by α_{}",
                    i + 1,
                    i + 1
                )));
            }
            terms.insert(m - unit(i), c);
        }
        let mut p = MultiPoly {
            nvars: self.nvars,
            scale: self.scale.clone(),
            terms,
        };
        p.normalize();
        Ok(p)
    }

    /// Applies `∂_{j_1} ∘ ⋯ ∘ ∂_{j_k}` for the 1-based word `j_1..j_k`
    /// (rightmost letter first).
    pub fn divided_difference_word(&self, cartan: &[Vec<i64>], word: &[usize]) -> Result<MultiPoly> {
        let mut cur = self.clone();
        for &j in word.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = cur.divided_difference(cartan, j - 1)?;
        }
        Ok(cur)
    }

    /// Evaluates at a rational point.
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        let mut total = BigRational::zero();
        for (&m, c) in &self.terms {
            let mut v = BigRational::from_integer(c.to_bigint());
            for (i, x) in point.iter().enumerate().take(self.nvars) {
                let e = exponent(m, i);
                for _ in 0..e {
                    v = v * x;
                }
            }
            total += v;
        }
        total * &self.scale
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        *self = self.add(rhs);
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .into_iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| {
                        if x == 1 {
                            format!("a{}", i + 1)
                        } else {
                            format!("a{}^{}", i + 1, x)
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    c.to_string()
                } else {
                    format!("{}*{}", c, mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
