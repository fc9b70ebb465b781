//! Exact integer polynomials in one and two variables.
//!
//! Coefficients are arbitrary-precision integers stored sparsely; zero
//! coefficients are never kept, so structural equality is polynomial
//! equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `n choose k` for small arguments.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Polynomial in one variable with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly1 {
    coeffs: BTreeMap<u32, BigInt>,
}

impl IntPoly1 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// Builds from ascending coefficients `c0, c1, ...`.
    pub fn from_coeffs<C: Into<BigInt>>(coeffs: impl IntoIterator<Item = C>) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.into_iter().enumerate() {
            p.add_term(k as u32, c.into());
        }
        p
    }

    /// Expansion of `(x + shift)^k`.
    pub fn shifted_power(k: u32, shift: i64) -> Self {
        let s = BigInt::from(shift);
        let mut p = Self::zero();
        for i in 0..=k {
            p.add_term(
                i,
                binomial(k, i) * num_traits::pow(s.clone(), (k - i) as usize),
            );
        }
        p
    }

    /// `x^k`.
    pub fn power_of_x(k: u32) -> Self {
        Self::monomial(1, k)
    }

    pub fn add_term(&mut self, exp: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Smallest exponent carrying a nonzero coefficient.
    pub fn lowest_exponent(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    /// Dense ascending coefficient list; `[0]` for the zero polynomial.
    pub fn dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => vec![BigInt::zero()],
            Some(d) => (0..=d).map(|k| self.coeff(k)).collect(),
        }
    }

    pub fn evaluate(&self, at: &BigInt) -> BigInt {
        // Horner over the dense form
        let mut acc = BigInt::zero();
        for c in self.dense().into_iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn eval_i64(&self, at: i64) -> BigInt {
        self.evaluate(&BigInt::from(at))
    }

    /// `p(x + shift)`.
    pub fn shift(&self, shift: i64) -> Self {
        let mut out = Self::zero();
        for (k, c) in self.terms() {
            out += &(&Self::shifted_power(k, shift) * c);
        }
        out
    }

    /// Builds `sum_k counts[k] * (x + shift)^k`.
    pub fn from_shifted_counts(counts: &[u64], shift: i64) -> Self {
        let mut out = Self::zero();
        for (k, &c) in counts.iter().enumerate() {
            if c != 0 {
                out += &(&Self::shifted_power(k as u32, shift) * &BigInt::from(c));
            }
        }
        out
    }

    /// Renders `c0 c1 ... cd` ascending, the numeric body of the text format.
    pub fn coeff_line(&self) -> String {
        self.dense()
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for IntPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = abs.is_one();
            match k {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{abs}x")?,
                _ if unit => write!(f, "x^{k}")?,
                _ => write!(f, "{abs}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly1({self})")
    }
}

impl AddAssign<&IntPoly1> for IntPoly1 {
    fn add_assign(&mut self, rhs: &IntPoly1) {
        for (&k, c) in &rhs.coeffs {
            self.add_term(k, c.clone());
        }
    }
}

impl Add<&IntPoly1> for &IntPoly1 {
    type Output = IntPoly1;
    fn add(self, rhs: &IntPoly1) -> IntPoly1 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntPoly1 {
    type Output = IntPoly1;
    fn add(mut self, rhs: IntPoly1) -> IntPoly1 {
        self += &rhs;
        self
    }
}

impl Neg for &IntPoly1 {
    type Output = IntPoly1;
    fn neg(self) -> IntPoly1 {
        IntPoly1 {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub<&IntPoly1> for &IntPoly1 {
    type Output = IntPoly1;
    fn sub(self, rhs: &IntPoly1) -> IntPoly1 {
        self + &(-rhs)
    }
}

impl Mul<&IntPoly1> for &IntPoly1 {
    type Output = IntPoly1;
    fn mul(self, rhs: &IntPoly1) -> IntPoly1 {
        let mut out = IntPoly1::zero();
        for (&a, ca) in &self.coeffs {
            for (&b, cb) in &rhs.coeffs {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Mul for IntPoly1 {
    type Output = IntPoly1;
    fn mul(self, rhs: IntPoly1) -> IntPoly1 {
        &self * &rhs
    }
}

impl Mul<&BigInt> for &IntPoly1 {
    type Output = IntPoly1;
    fn mul(self, rhs: &BigInt) -> IntPoly1 {
        let mut out = IntPoly1::zero();
        for (&k, c) in &self.coeffs {
            out.add_term(k, c * rhs);
        }
        out
    }
}

/// Polynomial in two variables `x`, `y` with integer coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly2 {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl IntPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(c: impl Into<BigInt>, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c.into());
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((i, j)).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    /// `(x + sx)^i (y + sy)^j`.
    pub fn shifted_monomial(i: u32, j: u32, sx: i64, sy: i64) -> Self {
        let px = IntPoly1::shifted_power(i, sx);
        let py = IntPoly1::shifted_power(j, sy);
        let mut out = Self::zero();
        for (a, ca) in px.terms() {
            for (b, cb) in py.terms() {
                out.add_term(a, b, ca * cb);
            }
        }
        out
    }

    /// Builds `sum counts[(i, j)] * (x + sx)^i (y + sy)^j`.
    pub fn from_shifted_counts(counts: &BTreeMap<(u32, u32), u64>, sx: i64, sy: i64) -> Self {
        let mut out = Self::zero();
        for (&(i, j), &c) in counts {
            if c != 0 {
                out += &(&Self::shifted_monomial(i, j, sx, sy) * &BigInt::from(c));
            }
        }
        out
    }

    /// Polynomial `p(x)` lifted to two variables as `p(x)` (y-free).
    pub fn from_x(p: &IntPoly1) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.terms() {
            out.add_term(k, 0, c.clone());
        }
        out
    }

    /// Polynomial `p(y)` lifted to two variables.
    pub fn from_y(p: &IntPoly1) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.terms() {
            out.add_term(0, k, c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn max_y_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|&(_, j)| j).max()
    }

    pub fn evaluate(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms()
            .map(|((i, j), c)| {
                c * num_traits::pow(x.clone(), i as usize) * num_traits::pow(y.clone(), j as usize)
            })
            .sum()
    }

    pub fn eval_i64(&self, x: i64, y: i64) -> BigInt {
        self.evaluate(&BigInt::from(x), &BigInt::from(y))
    }

    /// Sets `x` to a constant, leaving a polynomial in `y`.
    pub fn at_x(&self, x: i64) -> IntPoly1 {
        let xv = BigInt::from(x);
        let mut out = IntPoly1::zero();
        for ((i, j), c) in self.terms() {
            out.add_term(j, c * num_traits::pow(xv.clone(), i as usize));
        }
        out
    }

    /// Sets `y` to a constant, leaving a polynomial in `x`.
    pub fn at_y(&self, y: i64) -> IntPoly1 {
        let yv = BigInt::from(y);
        let mut out = IntPoly1::zero();
        for ((i, j), c) in self.terms() {
            out.add_term(i, c * num_traits::pow(yv.clone(), j as usize));
        }
        out
    }

    /// Restriction to the diagonal `y = x`.
    pub fn diagonal(&self) -> IntPoly1 {
        let mut out = IntPoly1::zero();
        for ((i, j), c) in self.terms() {
            out.add_term(i + j, c.clone());
        }
        out
    }

    /// Text body: one `coef i j c` line per nonzero term, ascending.
    pub fn coef_lines(&self) -> Vec<String> {
        self.terms()
            .map(|((i, j), c)| format!("coef {i} {j} {c}"))
            .collect()
    }
}

impl fmt::Display for IntPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((i, j), c) in self.coeffs.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let var = |v: char, e: u32| match e {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{e}"),
            };
            let mono = format!("{}{}", var('x', *i), var('y', *j));
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly2({self})")
    }
}

impl AddAssign<&IntPoly2> for IntPoly2 {
    fn add_assign(&mut self, rhs: &IntPoly2) {
        for (&(i, j), c) in &rhs.coeffs {
            self.add_term(i, j, c.clone());
        }
    }
}

impl Add<&IntPoly2> for &IntPoly2 {
    type Output = IntPoly2;
    fn add(self, rhs: &IntPoly2) -> IntPoly2 {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for IntPoly2 {
    type Output = IntPoly2;
    fn add(mut self, rhs: IntPoly2) -> IntPoly2 {
        self += &rhs;
        self
    }
}

impl Neg for &IntPoly2 {
    type Output = IntPoly2;
    fn neg(self) -> IntPoly2 {
        IntPoly2 {
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub<&IntPoly2> for &IntPoly2 {
    type Output = IntPoly2;
    fn sub(self, rhs: &IntPoly2) -> IntPoly2 {
        self + &(-rhs)
    }
}

impl Mul<&IntPoly2> for &IntPoly2 {
    type Output = IntPoly2;
    fn mul(self, rhs: &IntPoly2) -> IntPoly2 {
        let mut out = IntPoly2::zero();
        for (&(a, b), ca) in &self.coeffs {
            for (&(c, d), cb) in &rhs.coeffs {
                out.add_term(a + c, b + d, ca * cb);
            }
        }
        out
    }
}

impl Mul for IntPoly2 {
    type Output = IntPoly2;
    fn mul(self, rhs: IntPoly2) -> IntPoly2 {
        &self * &rhs
    }
}

impl Mul<&BigInt> for &IntPoly2 {
    type Output = IntPoly2;
    fn mul(self, rhs: &BigInt) -> IntPoly2 {
        let mut out = IntPoly2::zero();
        for (&(i, j), c) in &self.coeffs {
            out.add_term(i, j, c * rhs);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn shifted_power_examples() {
        assert_eq!(IntPoly1::shifted_power(0, 5), IntPoly1::one());
        assert_eq!(
            IntPoly1::shifted_power(1, -1),
            IntPoly1::from_coeffs([-1, 1])
        );
        assert_eq!(
            IntPoly1::shifted_power(2, -2),
            IntPoly1::from_coeffs([4, -4, 1])
        );
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(
            IntPoly1::from_coeffs([0, 0, 1]).eval_i64(3),
            BigInt::from(9)
        );
        assert_eq!(IntPoly1::from_coeffs([0, 2]).eval_i64(2), BigInt::from(4));
        assert_eq!(
            IntPoly1::from_coeffs([0, 2, 1]).eval_i64(-1),
            BigInt::from(-1)
        );
    }

    #[test]
    fn display_and_text_body() {
        let p = IntPoly1::from_coeffs([0, 2, 1]);
        assert_eq!(p.to_string(), "x^2 + 2x");
        assert_eq!(p.coeff_line(), "0 2 1");
        assert_eq!(IntPoly1::zero().coeff_line(), "0");
        let q = IntPoly1::from_coeffs([4, -4, 1]);
        assert_eq!(q.to_string(), "x^2 - 4x + 4");

        let t = &(&IntPoly2::monomial(1, 2, 0) + &IntPoly2::monomial(-2, 1, 0))
            + &IntPoly2::monomial(2, 0, 1);
        assert_eq!(t.to_string(), "x^2 - 2x + 2y");
        assert_eq!(
            t.coef_lines(),
            vec!["coef 0 1 2", "coef 1 0 -2", "coef 2 0 1"]
        );
    }

    #[test]
    fn zero_coefficients_are_not_stored() {
        let p = IntPoly1::from_coeffs([1, 2]);
        let d = &p - &p;
        assert!(d.is_zero());
        assert_eq!(d, IntPoly1::zero());
        assert_eq!(d.degree(), None);
    }

    #[test]
    fn large_values_do_not_overflow() {
        let p = IntPoly1::power_of_x(200);
        let v = p.eval_i64(2);
        assert_eq!(v, num_traits::pow(BigInt::from(2), 200));
    }

    #[test]
    fn shift_is_composition() {
        let p = IntPoly1::from_coeffs([3, -1, 0, 2]);
        for a in -3..4 {
            assert_eq!(p.shift(-2).eval_i64(a), p.eval_i64(a - 2));
        }
    }

    #[test]
    fn two_variable_specialisations() {
        // (x-1)^2 (y-1)
        let p = IntPoly2::shifted_monomial(2, 1, -1, -1);
        assert_eq!(p.at_x(2), IntPoly1::from_coeffs([-1, 1]));
        assert_eq!(
            p.at_y(3),
            &IntPoly1::shifted_power(2, -1) * &BigInt::from(2)
        );
        assert_eq!(p.diagonal(), IntPoly1::shifted_power(3, -1));
    }

    fn small_poly() -> impl Strategy<Value = IntPoly1> {
        prop::collection::vec(-20i64..20, 0..5).prop_map(IntPoly1::from_coeffs)
    }

    fn small_poly2() -> impl Strategy<Value = IntPoly2> {
        prop::collection::vec(((0u32..3, 0u32..3), -9i64..9), 0..5).prop_map(|ts| {
            let mut p = IntPoly2::zero();
            for ((i, j), c) in ts {
                p.add_term(i, j, BigInt::from(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in small_poly(), b in small_poly(), t in -6i64..6) {
            prop_assert_eq!((&a * &b).eval_i64(t), a.eval_i64(t) * b.eval_i64(t));
            prop_assert_eq!((&a + &b).eval_i64(t), a.eval_i64(t) + b.eval_i64(t));
        }

        #[test]
        fn two_variable_homomorphism(a in small_poly2(), b in small_poly2(), s in -4i64..4, t in -4i64..4) {
            prop_assert_eq!((&a * &b).eval_i64(s, t), a.eval_i64(s, t) * b.eval_i64(s, t));
            prop_assert_eq!(&(&a * &b) * &a, &a * &(&b * &a));
        }
    }
}
