//! Exact rational arithmetic and small polynomial/rational-function
//! helpers used by the finite-place identities.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// q^e as an exact rational, for any integer exponent.
pub fn q_pow(q: u64, e: i64) -> Q {
    let base = BigInt::from(q);
    if e >= 0 {
        Q::from_integer(base.pow(e as u32))
    } else {
        Q::new(BigInt::one(), base.pow((-e) as u32))
    }
}

/// ζ_q(s) = (1 - q^{-s})^{-1} exactly, for integer s ≠ 0.
pub fn zeta_fin_q(q: u64, s: i64) -> Q {
    (Q::one() - q_pow(q, -s)).recip()
}

pub fn q_to_f64(x: &Q) -> f64 {
    let num = x.numer();
    let den = x.denom();
    let nb = num.bits() as i64;
    let db = den.bits() as i64;
    if nb < 900 && db < 900 {
        bigint_to_f64(num) / bigint_to_f64(den)
    } else {
        // Scale down huge integers so both parts stay in f64 range.
        let shift = (nb.max(db) - 512).max(0) as u64;
        bigint_to_f64(&(num >> shift)) / bigint_to_f64(&(den >> shift))
    }
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    let mut v = 0.0f64;
    let (sign, digits) = n.to_u64_digits();
    for d in digits.iter().rev() {
        v = v * 18446744073709551616.0 + *d as f64;
    }
    if sign == num_bigint::Sign::Minus {
        -v
    } else {
        v
    }
}

/// Dense polynomial with complex coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyC {
    pub coeffs: Vec<Complex64>,
}

impl PolyC {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![Complex64::new(1.0, 0.0)],
        }
    }

    /// 1 - α·X
    pub fn linear_factor(alpha: Complex64) -> Self {
        Self {
            coeffs: vec![Complex64::new(1.0, 0.0), -alpha],
        }
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().map(|c| c.norm() == 0.0) == Some(true) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(Complex64::new(0.0, 0.0));
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        let mut v = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            v = v * x + c;
        }
        v
    }
}

/// Dense polynomial with exact rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyQ {
    pub coeffs: Vec<Q>,
}

impl PolyQ {
    pub fn new(coeffs: Vec<Q>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn one() -> Self {
        Self {
            coeffs: vec![Q::one()],
        }
    }

    pub fn linear_factor(alpha: Q) -> Self {
        Self {
            coeffs: vec![Q::one(), -alpha],
        }
    }

    fn trim(&mut self) {
        while self.coeffs.len() > 1 && self.coeffs.last().map(|c| c.is_zero()) == Some(true) {
            self.coeffs.pop();
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(Q::zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut v = Q::zero();
        for c in self.coeffs.iter().rev() {
            v = v * x + c;
        }
        v
    }

    fn rem(&self, divisor: &Self) -> Self {
        let mut r = self.clone();
        let d = divisor.degree();
        let lead = divisor.coeffs[d].clone();
        while !r.is_zero() && r.degree() >= d {
            let shift = r.degree() - d;
            let factor = r.coeffs[r.degree()].clone() / lead.clone();
            for i in 0..=d {
                let t = factor.clone() * divisor.coeffs[i].clone();
                r.coeffs[i + shift] -= t;
            }
            r.trim();
            if r.is_zero() || shift == 0 {
                break;
            }
        }
        r
    }

    fn div_exact(&self, divisor: &Self) -> Self {
        let mut r = self.clone();
        let d = divisor.degree();
        let lead = divisor.coeffs[d].clone();
        let mut q = vec![Q::zero(); self.coeffs.len().saturating_sub(d).max(1)];
        while !r.is_zero() && r.degree() >= d {
            let shift = r.degree() - d;
            let factor = r.coeffs[r.degree()].clone() / lead.clone();
            q[shift] = factor.clone();
            for i in 0..=d {
                let t = factor.clone() * divisor.coeffs[i].clone();
                r.coeffs[i + shift] -= t;
            }
            r.trim();
            if r.is_zero() || shift == 0 {
                break;
            }
        }
        PolyQ::new(q)
    }

    fn monic(&self) -> Self {
        let lead = self.coeffs[self.degree()].clone();
        if lead.is_zero() || lead.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / lead.clone()).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// A gcd-reduced rational function num/den over exact rationals with the
/// normalization den(0) = 1.
#[derive(Debug, Clone, PartialEq)]
pub struct RatFuncQ {
    pub num: PolyQ,
    pub den: PolyQ,
}

impl RatFuncQ {
    pub fn new(num: PolyQ, den: PolyQ) -> Self {
        let g = num.gcd(&den);
        let (num, den) = if g.degree() > 0 {
            (num.div_exact(&g), den.div_exact(&g))
        } else {
            (num, den)
        };
        let c = den.coeffs[0].clone();
        if c.is_zero() || c.is_one() {
            return Self { num, den };
        }
        let num = PolyQ::new(num.coeffs.iter().map(|x| x / c.clone()).collect());
        let den = PolyQ::new(den.coeffs.iter().map(|x| x / c.clone()).collect());
        Self { num, den }
    }

    pub fn eval(&self, x: &Q) -> Option<Q> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_fin_values() {
        assert_eq!(zeta_fin_q(2, 2), Q::new(BigInt::from(4), BigInt::from(3)));
        assert_eq!(zeta_fin_q(2, 4), Q::new(BigInt::from(16), BigInt::from(15)));
        assert_eq!(zeta_fin_q(2, 1), q_int(2));
    }

    #[test]
    fn zeta_times_complement_is_one() {
        for q in [2u64, 3, 5, 7] {
            for s in [1i64, 2, 3, 4] {
                let prod = zeta_fin_q(q, s) * (Q::one() - q_pow(q, -s));
                assert!(prod.is_one());
            }
        }
    }

    #[test]
    fn poly_gcd_reduction() {
        // (1-X)(1-2X) / (1-X)(1-3X) reduces to (1-2X)/(1-3X).
        let num = PolyQ::linear_factor(q_int(1)).mul(&PolyQ::linear_factor(q_int(2)));
        let den = PolyQ::linear_factor(q_int(1)).mul(&PolyQ::linear_factor(q_int(3)));
        let r = RatFuncQ::new(num, den);
        assert_eq!(r.num, PolyQ::linear_factor(q_int(2)));
        assert_eq!(r.den, PolyQ::linear_factor(q_int(3)));
        assert!(r.den.coeffs[0].is_one());
    }

    #[test]
    fn poly_eval_matches_product() {
        let p = PolyC::linear_factor(Complex64::new(0.5, 0.2))
            .mul(&PolyC::linear_factor(Complex64::new(-0.3, 0.1)));
        let x = Complex64::new(0.7, -0.4);
        let direct = (Complex64::new(1.0, 0.0) - Complex64::new(0.5, 0.2) * x)
            * (Complex64::new(1.0, 0.0) - Complex64::new(-0.3, 0.1) * x);
        assert!((p.eval(x) - direct).norm() < 1e-15);
    }

    #[test]
    fn q_to_f64_conversion() {
        let x = Q::new(BigInt::from(355), BigInt::from(113));
        assert!((q_to_f64(&x) - 355.0 / 113.0).abs() < 1e-15);
        let y = q_pow(7, -9) * q_int(-3);
        assert!((q_to_f64(&y) + 3.0 / 7f64.powi(9)).abs() < 1e-22);
    }
}
