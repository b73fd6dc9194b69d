//! Dense univariate polynomials over the exact rationals.
//!
//! Coefficients are stored lowest degree first with trailing zeros trimmed,
//! so the zero polynomial is the empty list. The gcd goes through the
//! fraction-free subresultant remainder sequence on primitive integer parts;
//! plain rational remainder sequences blow up their coefficients far too
//! fast for the solved-series workload.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::{int_sign, rat_sign, BigRat};

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    coeffs: Vec<BigRat>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigRat::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial for the polynomial variable itself.
    pub fn var() -> Self {
        Poly::new(vec![BigRat::zero(), BigRat::one()])
    }

    pub fn monomial(coeff: BigRat, degree: usize) -> Self {
        let mut coeffs = vec![BigRat::zero(); degree + 1];
        coeffs[degree] = coeff;
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// Coefficient of the given degree (zero beyond the stored length).
    pub fn coeff(&self, degree: usize) -> BigRat {
        self.coeffs.get(degree).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn leading(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn scale(&self, s: &BigRat) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn eval(&self, at: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    /// Substitutes another polynomial for the variable (Horner form).
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRat::from_integer((i as i64 + 1).into()))
                .collect(),
        )
    }

    pub fn pow(&self, mut exp: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient and remainder over the rational field; divisor must be nonzero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.degree().unwrap();
        let lead_inv = BigRat::one() / divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let dr = rem.len() - 1;
            let q = rem[dr].clone() * &lead_inv;
            if !q.is_zero() {
                quot[dr - dd] = q.clone();
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    let t = c * &q;
                    rem[dr - dd + i] -= t;
                }
            }
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Division known to be exact; checked in debug builds.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "exact_div had a nonzero remainder");
        q
    }

    /// Splits into a rational content and a primitive integer part with
    /// positive leading coefficient, so `self = content * primitive`.
    pub fn content_primitive(&self) -> (BigRat, Vec<BigInt>) {
        if self.is_zero() {
            return (BigRat::zero(), Vec::new());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        let sign = int_sign(ints.last().unwrap());
        if sign < 0 {
            g = -g;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        (BigRat::new(g, den_lcm), prim)
    }

    /// Primitive integer part with positive leading coefficient.
    pub fn primitive(&self) -> Poly {
        let (_, prim) = self.content_primitive();
        Poly::new(prim.into_iter().map(BigRat::from_integer).collect())
    }

    /// Gcd as a primitive integer polynomial with positive leading coefficient.
    /// `gcd(0, q)` is the primitive part of `q`; `gcd(0, 0)` is zero.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        let (_, pa) = a.content_primitive();
        let (_, pb) = b.content_primitive();
        let g = if pa.len() >= pb.len() {
            subresultant_gcd(pa, pb)
        } else {
            subresultant_gcd(pb, pa)
        };
        Poly::new(g.into_iter().map(BigRat::from_integer).collect())
    }

    /// Sign of the leading coefficient: -1, 0 or +1.
    pub fn lead_sign(&self) -> i32 {
        self.leading().map_or(0, rat_sign)
    }
}

fn int_deg(p: &[BigInt]) -> usize {
    p.len() - 1
}

fn int_trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn int_scale(p: &mut [BigInt], s: &BigInt) {
    for c in p.iter_mut() {
        *c *= s;
    }
}

fn int_exact_div(p: &mut [BigInt], d: &BigInt) {
    for c in p.iter_mut() {
        debug_assert!((&*c % d).is_zero(), "subresultant division not exact");
        *c /= d;
    }
}

/// Pseudo-remainder `lc(q)^(deg p - deg q + 1) * p  mod  q`.
fn pseudo_rem(p: &[BigInt], q: &[BigInt]) -> Vec<BigInt> {
    let dq = int_deg(q);
    let lq = q.last().unwrap();
    let mut r = p.to_vec();
    let mut e = (int_deg(p) - dq + 1) as i64;
    while !r.is_empty() && int_deg(&r) >= dq {
        let dr = int_deg(&r);
        let lr = r.last().unwrap().clone();
        int_scale(&mut r, lq);
        for i in 0..=dq {
            let t = &lr * &q[i];
            r[dr - dq + i] -= t;
        }
        int_trim(&mut r);
        e -= 1;
    }
    if e > 0 && !r.is_empty() {
        let f = lq.pow(e as u32);
        int_scale(&mut r, &f);
    }
    r
}

/// Subresultant PRS on primitive inputs with `deg p >= deg q`; returns the
/// primitive gcd with positive leading coefficient.
fn subresultant_gcd(mut p: Vec<BigInt>, mut q: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = (int_deg(&p) - int_deg(&q)) as u32;
        let mut r = pseudo_rem(&p, &q);
        if r.is_empty() {
            break;
        }
        let divisor = &g * h.pow(delta);
        int_exact_div(&mut r, &divisor);
        p = std::mem::replace(&mut q, r);
        g = p.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            let gn = g.pow(delta);
            let hd = h.pow(delta - 1);
            debug_assert!((&gn % &hd).is_zero());
            gn / hd
        };
        if int_deg(&q) == 0 {
            return vec![BigInt::one()];
        }
    }
    // primitive part, positive leading coefficient
    let mut content = BigInt::zero();
    for c in &q {
        content = content.gcd(c);
    }
    if int_sign(q.last().unwrap()) < 0 {
        content = -content;
    }
    int_exact_div(&mut q, &content);
    q
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn arithmetic_and_trimming() {
        let p = Poly::from_ints(&[1, 2, 1]); // 1 + 2c + c^2
        let q = Poly::from_ints(&[-1, 0, 1]); // c^2 - 1
        assert_eq!(&p + &q, Poly::from_ints(&[0, 2, 2]));
        assert_eq!(&p - &p, Poly::zero());
        assert_eq!((&p - &p).degree(), None);
        let prod = &Poly::from_ints(&[1, 1]) * &Poly::from_ints(&[-1, 1]);
        assert_eq!(prod, q);
    }

    #[test]
    fn division_with_remainder() {
        let p = Poly::from_ints(&[2, -3, 1]); // (c-1)(c-2)
        let (q, r) = p.div_rem(&Poly::from_ints(&[-1, 1]));
        assert_eq!(q, Poly::from_ints(&[-2, 1]));
        assert!(r.is_zero());
        let (_, r) = p.div_rem(&Poly::from_ints(&[0, 1]));
        assert_eq!(r, Poly::from_ints(&[2]));
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (c^2+1)(c-3) and (c^2+1)(c+5) share c^2+1
        let a = &Poly::from_ints(&[1, 0, 1]) * &Poly::from_ints(&[-3, 1]);
        let b = &Poly::from_ints(&[1, 0, 1]) * &Poly::from_ints(&[5, 1]);
        assert_eq!(Poly::gcd(&a, &b), Poly::from_ints(&[1, 0, 1]));
        // coprime polynomials reduce to 1
        let g = Poly::gcd(&Poly::from_ints(&[-1, 1]), &Poly::from_ints(&[1, 1]));
        assert_eq!(g, Poly::one());
    }

    #[test]
    fn gcd_handles_rational_and_negative_input() {
        let a = Poly::new(vec![rat(1, 2), rat(-1, 2)]).scale(&rat(-2, 3)); // ~ (c-1)
        let b = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[7, 2]);
        assert_eq!(Poly::gcd(&a, &b), Poly::from_ints(&[-1, 1]));
        assert_eq!(Poly::gcd(&Poly::zero(), &b.scale(&rat(-1, 1))), b);
        assert!(Poly::gcd(&Poly::zero(), &Poly::zero()).is_zero());
    }

    #[test]
    fn content_primitive_splits() {
        let p = Poly::new(vec![rat(-2, 3), rat(-4, 3)]); // -(2/3)(1 + 2c)
        let (content, prim) = p.content_primitive();
        assert_eq!(content, rat(-2, 3));
        assert_eq!(prim, vec![BigInt::from(1), BigInt::from(2)]);
    }

    #[test]
    fn compose_and_eval() {
        let p = Poly::from_ints(&[0, 0, 1]); // c^2
        let inner = Poly::from_ints(&[1, -1]); // 1 - c
        assert_eq!(p.compose(&inner), Poly::from_ints(&[1, -2, 1]));
        assert_eq!(p.eval(&rat(3, 1)), rat(9, 1));
        assert_eq!(Poly::from_ints(&[1, 1]).derivative(), Poly::one());
    }
}
