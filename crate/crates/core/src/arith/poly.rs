use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use num_traits::{One, Signed, Zero};

use super::Rational;

/// Dense integer polynomial, coefficients from low to high degree, no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly(pub Vec<BigInt>);

impl IntPoly {
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly(out).trim()
    }

    /// Exact division by a monic polynomial. Panics if the remainder is
    /// nonzero.
    fn div_exact_monic(&self, divisor: &IntPoly) -> IntPoly {
        assert!(divisor.0.last().unwrap().is_one());
        let mut rem = self.0.clone();
        let dd = divisor.degree();
        if rem.len() <= dd {
            panic!("inexact polynomial division");
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.0.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
        IntPoly(quot).trim()
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.0.iter().map(|c| Rational::from_integer(c.clone())).collect()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = !a.is_one() || k == 0;
            if show_coeff {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn cache() -> &'static Mutex<HashMap<u32, Arc<IntPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The m-th cyclotomic polynomial, obtained by dividing `x^m - 1` by every
/// `Φ_d` with `d | m`, `d < m`.
pub fn cyclotomic_polynomial(m: u32) -> Arc<IntPoly> {
    assert!(m >= 1, "cyclotomic order must be positive");
    if let Some(p) = cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    let mut p = IntPoly(num);
    for d in 1..m {
        if m % d == 0 {
            p = p.div_exact_monic(&cyclotomic_polynomial(d));
        }
    }
    let p = Arc::new(p);
    cache().lock().unwrap().insert(m, p.clone());
    p
}

#[cfg(test)]
pub(crate) fn product(polys: &[Arc<IntPoly>]) -> IntPoly {
    polys
        .iter()
        .fold(IntPoly(vec![BigInt::one()]), |acc, p| acc.mul(p))
}
