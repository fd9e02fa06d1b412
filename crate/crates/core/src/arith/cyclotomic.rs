use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{cyclotomic_polynomial, format_rational, parse_rational, Field, Rational};
use crate::Error;

/// Euler's totient.
pub fn euler_phi(m: u32) -> u32 {
    (1..=m).filter(|k| k.gcd(&m) == 1).count() as u32
}

/// An element of the cyclotomic field `Q(ζ_m) = Q[x]/Φ_m(x)`, stored as the
/// coefficients of its reduced representative in the power basis
/// `1, x, …, x^{φ(m)-1}`.
///
/// Binary operations on elements of different orders first embed both
/// operands into `Q(ζ_L)` with `L = lcm` via `ζ_m ↦ ζ_L^{L/m}`.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn from_rational(order: u32, q: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); euler_phi(order) as usize];
        coeffs[0] = q;
        Cyclotomic { order, coeffs }
    }

    /// Reduce an arbitrary polynomial (low to high) modulo `Φ_order`.
    pub fn from_poly(order: u32, poly: Vec<Rational>) -> Self {
        Cyclotomic {
            order,
            coeffs: reduce(order, poly),
        }
    }

    /// `ζ_m^j` with `ζ_m = e^{2πi/m}` realized as the class of `x`.
    pub fn root_of_unity(m: u32, j: i64) -> Self {
        let j = j.rem_euclid(m as i64) as usize;
        let mut poly = vec![Rational::zero(); j + 1];
        poly[j] = Rational::one();
        Cyclotomic::from_poly(m, poly)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The rational value, if this element lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Image in `Q(ζ_target)`; `order` must divide `target`.
    pub fn embed(&self, target: u32) -> Self {
        assert!(
            target % self.order == 0,
            "cannot embed order {} into order {target}",
            self.order
        );
        if target == self.order {
            return self.clone();
        }
        let step = (target / self.order) as usize;
        let mut poly = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            poly[k * step] = c.clone();
        }
        Cyclotomic::from_poly(target, poly)
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let l = self.order.lcm(&other.order);
        (self.embed(l), other.embed(l))
    }

    pub fn to_json(&self) -> CyclotomicJson {
        CyclotomicJson {
            order: self.order,
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
    }

    pub fn from_json(j: &CyclotomicJson) -> Result<Self, Error> {
        if j.order == 0 {
            return Err(Error::Parse("cyclotomic order must be positive".into()));
        }
        let poly = j
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()?;
        if poly.is_empty() {
            return Err(Error::Parse("empty cyclotomic coefficient list".into()));
        }
        Ok(Cyclotomic::from_poly(j.order, poly))
    }
}

/// Serialized cyclotomic element: order plus power-basis coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclotomicJson {
    pub order: u32,
    pub coeffs: Vec<String>,
}

fn reduce(order: u32, mut poly: Vec<Rational>) -> Vec<Rational> {
    let phi = cyclotomic_polynomial(order);
    let d = phi.degree();
    let modulus = phi.to_rational();
    for k in (d..poly.len()).rev() {
        if poly[k].is_zero() {
            continue;
        }
        let c = poly[k].clone();
        for (j, m) in modulus.iter().enumerate() {
            poly[k - d + j] -= &c * m;
        }
    }
    poly.resize(d, Rational::zero());
    poly
}

fn poly_trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out = vec![Rational::zero(); n];
    for (k, x) in a.iter().enumerate() {
        out[k] += x;
    }
    for (k, y) in b.iter().enumerate() {
        out[k] -= y;
    }
    poly_trim(&mut out);
    out
}

fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    poly_trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (vec![Rational::zero()], rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, m) in b.iter().enumerate() {
            rem[k + j] -= &c * m;
        }
        quot[k] = c;
    }
    rem.truncate(db.max(1));
    poly_trim(&mut rem);
    poly_trim(&mut quot);
    (quot, rem)
}

fn is_zero_poly(p: &[Rational]) -> bool {
    p.iter().all(Zero::is_zero)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_rational() {
            return write!(f, "{}", format_rational(&q));
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let z = match k {
                0 => String::new(),
                1 => format!("z{}", self.order),
                _ => format!("z{}^{k}", self.order),
            };
            match (k, c.is_one()) {
                (0, _) => write!(f, "{}", format_rational(c))?,
                (_, true) => write!(f, "{z}")?,
                _ => write!(f, "({})*{z}", format_rational(c))?,
            }
        }
        Ok(())
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;

    fn add(self, rhs: Self) -> Self {
        let (mut a, b) = if self.order == rhs.order {
            (self, rhs)
        } else {
            self.aligned(&rhs)
        };
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;

    fn neg(mut self) -> Self {
        for c in &mut self.coeffs {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;

    fn mul(self, rhs: Self) -> Self {
        let (a, b) = if self.order == rhs.order {
            (self, rhs)
        } else {
            self.aligned(&rhs)
        };
        let order = a.order;
        Cyclotomic::from_poly(order, poly_mul(&a.coeffs, &b.coeffs))
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::from_rational(1, Rational::zero())
    }

    fn is_zero(&self) -> bool {
        is_zero_poly(&self.coeffs)
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::from_rational(1, Rational::one())
    }
}

impl Field for Cyclotomic {
    /// Extended Euclid against `Φ_m`, which is irreducible over `Q`.
    fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let modulus = cyclotomic_polynomial(self.order).to_rational();
        let (mut r0, mut r1) = (modulus, self.coeffs.clone());
        poly_trim(&mut r1);
        let (mut s0, mut s1) = (vec![Rational::zero()], vec![Rational::one()]);
        while !is_zero_poly(&r1) {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant gcd
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].recip();
        let poly = s0.into_iter().map(|x| x * &c).collect();
        Cyclotomic::from_poly(self.order, poly)
    }

    fn from_rational(q: &Rational) -> Self {
        Cyclotomic::from_rational(1, q.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn roots_of_unity_have_their_order() {
        for m in 1..=12u32 {
            let z = Cyclotomic::root_of_unity(m, 1);
            let mut p = Cyclotomic::one();
            for k in 1..=m {
                p = p * z.clone();
                assert_eq!(p.is_one(), k == m, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(i.clone() * i, Cyclotomic::from_rational(1, q(-1)));
    }

    #[test]
    fn embedding_between_orders() {
        // ζ_3 = ζ_6^2 and ζ_2 = -1
        assert_eq!(
            Cyclotomic::root_of_unity(3, 1),
            Cyclotomic::root_of_unity(6, 2)
        );
        assert_eq!(
            Cyclotomic::root_of_unity(2, 1),
            Cyclotomic::from_rational(1, q(-1))
        );
        let s = Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(4, 1);
        assert_eq!(s.order(), 12);
        // 1 + ζ_3 + ζ_3^2 = 0
        let z = Cyclotomic::root_of_unity(3, 1);
        assert!((Cyclotomic::one() + z.clone() + z.clone() * z).is_zero());
    }

    #[test]
    fn json_round_trip() {
        let z = Cyclotomic::root_of_unity(5, 2) * Cyclotomic::from_rational(1, q(3));
        assert_eq!(Cyclotomic::from_json(&z.to_json()).unwrap(), z);
    }

    fn element(order: u32) -> impl Strategy<Value = Cyclotomic> {
        let n = euler_phi(order) as usize;
        proptest::collection::vec((-5i64..=5, 1i64..=3), n).prop_map(move |cs| {
            let poly = cs
                .into_iter()
                .map(|(a, b)| Rational::new(a.into(), b.into()))
                .collect();
            Cyclotomic::from_poly(order, poly)
        })
    }

    fn mixed() -> impl Strategy<Value = Cyclotomic> {
        prop_oneof![element(1), element(3), element(4), element(5), element(8), element(12)]
    }

    proptest! {
        #[test]
        fn mul_is_commutative_and_associative(a in mixed(), b in mixed(), c in mixed()) {
            prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a * (b * c));
        }

        #[test]
        fn distributive(a in mixed(), b in mixed(), c in mixed()) {
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b + a * c);
        }

        #[test]
        fn nonzero_elements_invert(a in mixed()) {
            prop_assume!(!a.is_zero());
            let inv = a.inverse();
            prop_assert!((a.clone() * inv.clone()).is_one());
            prop_assert!((inv * a).is_one());
        }
    }
}
