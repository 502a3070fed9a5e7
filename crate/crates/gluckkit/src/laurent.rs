//! Exact arithmetic in the Laurent polynomial ring Z[A^{±1}] and in Q.
//!
//! `LaurentPolynomial` is the coefficient ring of the skein calculus; the
//! loop value `delta = -(A^2 + A^-2)` lives here. `Rational` holds the
//! values of correction terms.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational number; reduced, positive denominator (as guaranteed by
/// `num_rational`).
pub type Rational = num_rational::BigRational;

/// Convenience constructor for a reduced rational `n / d`.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A finitely supported integer-coefficient polynomial in A and A^{-1}.
///
/// Canonical form: no stored coefficient is zero, so equality is structural.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// The skein variable A.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    /// c * A^e.
    pub fn monomial(exponent: i64, coefficient: impl Into<BigInt>) -> Self {
        let c = coefficient.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        Self { terms }
    }

    /// The trivial-loop value `delta = -A^2 - A^{-2}`.
    pub fn delta() -> Self {
        Self::from_pairs([(2, BigInt::from(-1)), (-2, BigInt::from(-1))])
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, folding
    /// duplicates and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exponent: i64, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn pairs(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The image of `self` in Z[A^{±1}] / (1 - A^d), with every exponent
    /// lifted into the window [0, d). Idempotent, and a ring homomorphism.
    pub fn reduce_cyclic(&self, d: i64) -> Self {
        assert!(d >= 1, "cyclic modulus must be >= 1");
        Self::from_pairs(self.terms.iter().map(|(e, c)| (e.rem_euclid(d), c.clone())))
    }

    /// Integer power of `(-A^3)`, the full-positive-twist factor; negative
    /// `f` gives `(-A^{-3})^{|f|}`.
    pub fn framing_factor(f: i64) -> Self {
        let sign: BigInt = if f.rem_euclid(2) == 0 { 1.into() } else { (-1).into() };
        Self::monomial(3 * f, sign)
    }

    /// Serializes as a sorted list of `[exponent, coefficient]` pairs.
    /// Coefficients outside the i64 range are emitted as decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.pairs()
                .map(|(e, c)| {
                    let coeff = match i64::try_from(c) {
                        Ok(v) => serde_json::Value::from(v),
                        Err(_) => serde_json::Value::from(c.to_string()),
                    };
                    serde_json::Value::Array(vec![serde_json::Value::from(e), coeff])
                })
                .collect(),
        )
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial::from_pairs(self.terms.iter().map(|(e, c)| (*e, -c.clone())))
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl fmt::Display for LaurentPolynomial {
    /// Human form, descending exponent: `-A^3 + 2 + A^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "A")?,
                (1, false) => write!(f, "{mag}A")?,
                (_, true) => write!(f, "A^{e}")?,
                (_, false) => write!(f, "{mag}A^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for LaurentPolynomial {
    type Err = crate::error::Error;

    /// Parses the human form emitted by `Display`, e.g. `-A^3 + 2 + A^-2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |t: &str| crate::error::Error::MalformedPolynomial(t.to_string());
        let s = s.trim();
        if s.is_empty() {
            return Err(bad(s));
        }
        // split into signed terms; a sign right after '^' binds to the exponent
        let mut terms: Vec<(i64, String)> = Vec::new();
        let mut sign = 1i64;
        let mut cur = String::new();
        let mut prev_caret = false;
        for ch in s.chars() {
            match ch {
                '+' | '-' if !prev_caret => {
                    if !cur.trim().is_empty() {
                        terms.push((sign, std::mem::take(&mut cur)));
                    } else if !cur.is_empty() || !terms.is_empty() {
                        return Err(bad(s));
                    }
                    sign = if ch == '-' { -1 } else { 1 };
                }
                _ => {
                    prev_caret = ch == '^';
                    cur.push(ch);
                }
            }
        }
        if cur.trim().is_empty() {
            return Err(bad(s));
        }
        terms.push((sign, cur));

        let mut out = LaurentPolynomial::zero();
        for (sign, term) in terms {
            let term = term.trim();
            let (exponent, coeff_text) = match term.split_once('A') {
                None => (0i64, term),
                Some((coeff, rest)) => {
                    let exponent = if rest.is_empty() {
                        1
                    } else {
                        let digits = rest.strip_prefix('^').ok_or_else(|| bad(term))?;
                        digits.parse::<i64>().map_err(|_| bad(term))?
                    };
                    (exponent, coeff.trim_end())
                }
            };
            let coeff: BigInt = if coeff_text.is_empty() && exponent != 0 {
                BigInt::one()
            } else {
                coeff_text.parse().map_err(|_| bad(term))?
            };
            out.add_term(exponent, coeff * BigInt::from(sign));
        }
        Ok(out)
    }
}

/// Serializes a rational as `{"num": .., "den": ..}`, with values outside
/// the i64 range emitted as decimal strings.
pub fn rational_to_json(r: &Rational) -> serde_json::Value {
    let part = |x: &BigInt| match i64::try_from(x) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::from(x.to_string()),
    };
    serde_json::json!({ "num": part(r.numer()), "den": part(r.denom()) })
}
