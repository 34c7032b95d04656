//! Exact arithmetic in `Z[q, q^-1]`.
//!
//! Every scalar that shows up in the construction is a Laurent polynomial in
//! `q` with integer coefficients, so this is the only coefficient ring the
//! crate needs. Coefficients are arbitrary precision.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An element of `Z[q, q^-1]`, stored as exponent -> nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    /// `(-q)^k = (-1)^k q^k`.
    pub fn neg_q_pow(k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(sign, k)
    }

    /// Builds a value from `(exponent, coefficient)` pairs, merging repeats.
    pub fn from_terms<C: Into<BigInt>>(pairs: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in pairs {
            out.add_term(e, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// `Some((c, k))` when the value is the single term `c q^k`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// LaTeX rendering, e.g. `3q^{2} - 2q^{-1}`.
    pub fn to_latex(&self) -> String {
        render_combination(self.monomials().map(|m| (m, None)), true)
    }

    fn monomials(&self) -> impl Iterator<Item = LaurentPoly> + '_ {
        self.terms
            .iter()
            .rev()
            .map(|(e, c)| LaurentPoly::monomial(c.clone(), *e))
    }
}

/// Renders `Σ c_k * key_k` with signs pulled out of monomial coefficients.
/// Compound coefficients are parenthesised; a `None` key is the unit.
/// Text form joins factors with `*`; LaTeX form juxtaposes them.
pub(crate) fn render_combination(
    terms: impl Iterator<Item = (LaurentPoly, Option<String>)>,
    latex: bool,
) -> String {
    let mut out = String::new();
    let mut first = true;
    for (c, key) in terms {
        let (negative, scalar) = match c.as_monomial() {
            Some((coeff, e)) => {
                let mag = coeff.abs();
                let unit = mag.is_one() && e == 0;
                let s = if unit && key.is_some() {
                    String::new()
                } else {
                    scalar_text(&mag, e, latex)
                };
                (coeff.is_negative(), s)
            }
            None => {
                let inner = if latex { c.to_latex() } else { c.to_string() };
                (false, format!("({inner})"))
            }
        };
        match (first, negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&scalar);
        if let Some(k) = key {
            if !scalar.is_empty() && !latex {
                out.push('*');
            }
            out.push_str(&k);
        }
        first = false;
    }
    if first {
        out.push('0');
    }
    out
}

/// `c*q^e` for `c > 0`, dropping unit factors.
fn scalar_text(c: &BigInt, e: i64, latex: bool) -> String {
    match (e, c.is_one(), latex) {
        (0, _, _) => format!("{c}"),
        (1, true, _) => String::from("q"),
        (1, false, false) => format!("{c}*q"),
        (1, false, true) => format!("{c}q"),
        (_, true, false) => format!("q^{e}"),
        (_, true, true) => format!("q^{{{e}}}"),
        (_, false, false) => format!("{c}*q^{e}"),
        (_, false, true) => format!("{c}q^{{{e}}}"),
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form: `c*q^k + ...`, exponents descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_combination(self.monomials().map(|m| (m, None)), false))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}
