//! The Kauffman bracket skein module of S^1 x S^2.
//!
//! Elements are written over three generating sets: the powers z^i of the
//! core curve, the twist eigenvectors e_i (e_0 = 1, e_1 = z,
//! e_i = z e_{i-1} - e_{i-2}), and the summand generators e'_i
//! (e'_0 = e_0, e'_1 = e_1, e'_2 = e_2, e'_i = e_i + e'_{i-2} for i >= 3).
//! In the e' basis the module splits as Z[A^{±1}] (+) sum of
//! Z[A^{±1}]/(1 - A^{2i+4}), and a `SkeinElement` in normal form keeps the
//! coefficient of e'_i (i >= 1) with exponents in [0, 2i+4).

mod bracket;

pub use bracket::{bracket_of_closure, bracket_of_closure_with, BraidWord, MAX_CROSSINGS};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::Error;
use crate::laurent::LaurentPolynomial;

/// Which smoothing of a positive crossing carries the A coefficient.
/// `Standard` assigns A to the through-strand smoothing; `Mirrored` is the
/// global A <-> A^{-1} swap.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SmoothingConvention {
    #[default]
    Standard,
    Mirrored,
}

impl SmoothingConvention {
    pub fn as_str(&self) -> &'static str {
        match self {
            SmoothingConvention::Standard => "A-identity",
            SmoothingConvention::Mirrored => "A-mirror",
        }
    }
}

macro_rules! coefficient_vector {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Debug, PartialEq, Eq, Default)]
        pub struct $name {
            coeffs: BTreeMap<usize, LaurentPolynomial>,
        }

        impl $name {
            pub fn zero() -> Self {
                Self::default()
            }

            pub fn generator(index: usize) -> Self {
                Self::term(index, LaurentPolynomial::one())
            }

            pub fn term(index: usize, coeff: LaurentPolynomial) -> Self {
                let mut out = Self::zero();
                out.add_term(index, coeff);
                out
            }

            pub fn add_term(&mut self, index: usize, coeff: LaurentPolynomial) {
                if coeff.is_zero() {
                    return;
                }
                let entry = self.coeffs.entry(index).or_insert_with(LaurentPolynomial::zero);
                *entry = &*entry + &coeff;
                if entry.is_zero() {
                    self.coeffs.remove(&index);
                }
            }

            pub fn add(&self, rhs: &Self) -> Self {
                let mut out = self.clone();
                for (i, c) in &rhs.coeffs {
                    out.add_term(*i, c.clone());
                }
                out
            }

            pub fn coefficient(&self, index: usize) -> LaurentPolynomial {
                self.coeffs.get(&index).cloned().unwrap_or_else(LaurentPolynomial::zero)
            }

            /// Supported indices with coefficients, ascending.
            pub fn terms(&self) -> impl Iterator<Item = (usize, &LaurentPolynomial)> {
                self.coeffs.iter().map(|(i, c)| (*i, c))
            }

            pub fn support(&self) -> Vec<usize> {
                self.coeffs.keys().copied().collect()
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.is_empty()
            }

            pub fn scale(&self, factor: &LaurentPolynomial) -> Self {
                let mut out = Self::zero();
                for (i, c) in &self.coeffs {
                    out.add_term(*i, c * factor);
                }
                out
            }
        }
    };
}

coefficient_vector!(
    SolidTorusElement,
    "An element of the skein module written over the z-powers: a finitely \
     supported map from z-degree to Laurent coefficient."
);
coefficient_vector!(
    EBasisElement,
    "An element written over the twist eigenvectors e_i."
);
coefficient_vector!(
    SkeinElement,
    "An element written over the summand generators e'_i; canonical after \
     `normalize`."
);

/// Exact change of basis z^k -> e-basis, by the inverse recurrence
/// z e_i = e_{i+1} + e_{i-1} (and z e_0 = e_1).
pub fn z_to_e(s: &SolidTorusElement) -> EBasisElement {
    let mut out = EBasisElement::zero();
    let Some(&max_deg) = s.coeffs.keys().max() else { return out };
    // rep holds the integer e-basis expansion of z^k
    let mut rep: Vec<BigInt> = vec![BigInt::from(1)];
    for k in 0..=max_deg {
        if let Some(poly) = s.coeffs.get(&k) {
            for (i, c) in rep.iter().enumerate() {
                if !c.is_zero() {
                    out.add_term(i, poly * &LaurentPolynomial::monomial(0, c.clone()));
                }
            }
        }
        let mut next = vec![BigInt::zero(); rep.len() + 1];
        for (i, c) in rep.iter().enumerate() {
            if i >= 1 {
                next[i - 1] += c;
            }
            next[i + 1] += c;
        }
        rep = next;
    }
    out
}

/// Exact change of basis e_i -> z-powers via e_i = z e_{i-1} - e_{i-2}.
pub fn e_to_z(e: &EBasisElement) -> SolidTorusElement {
    let mut out = SolidTorusElement::zero();
    let Some(&max_idx) = e.coeffs.keys().max() else { return out };
    // z-polynomials of e_0, e_1, ... as integer coefficient vectors
    let mut prev: Vec<BigInt> = vec![BigInt::from(1)];
    let mut cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::from(1)];
    for i in 0..=max_idx {
        let p = if i == 0 { &prev } else { &cur };
        if let Some(poly) = e.coeffs.get(&i) {
            for (deg, c) in p.iter().enumerate() {
                if !c.is_zero() {
                    out.add_term(deg, poly * &LaurentPolynomial::monomial(0, c.clone()));
                }
            }
        }
        if i >= 1 {
            let mut next = vec![BigInt::zero(); cur.len() + 1];
            for (deg, c) in cur.iter().enumerate() {
                next[deg + 1] += c;
            }
            for (deg, c) in prev.iter().enumerate() {
                next[deg] -= c;
            }
            prev = std::mem::replace(&mut cur, next);
        }
    }
    out
}

/// e_i = e'_i - e'_{i-2} for i >= 3; identical on indices <= 2.
pub fn e_to_eprime(e: &EBasisElement) -> SkeinElement {
    let mut out = SkeinElement::zero();
    for (i, c) in e.terms() {
        out.add_term(i, c.clone());
        if i >= 3 {
            out.add_term(i - 2, -c);
        }
    }
    out
}

/// Pre-quotient inverse: e'_i = e_i + e_{i-2} + ... down to e_1 or e_2.
pub fn eprime_to_e(x: &SkeinElement) -> EBasisElement {
    let mut out = EBasisElement::zero();
    for (i, c) in x.terms() {
        let mut j = i;
        loop {
            out.add_term(j, c.clone());
            if j < 3 {
                break;
            }
            j -= 2;
        }
    }
    out
}

impl SkeinElement {
    /// Canonical normal form: the e'_i coefficient (i >= 1) reduced mod
    /// (1 - A^{2i+4}); the free e'_0 summand untouched. Idempotent.
    pub fn normalize(&self) -> SkeinElement {
        let mut out = SkeinElement::zero();
        for (i, c) in self.terms() {
            if i == 0 {
                out.add_term(0, c.clone());
            } else {
                out.add_term(i, c.reduce_cyclic(2 * i as i64 + 4));
            }
        }
        out
    }
}

/// The Gluck-twist action in the e' basis: e'_{2i} fixed,
/// e'_{2i+1} -> -A^{2i+3} e'_{2i+1}. The result is renormalized.
pub fn gluck_action(x: &SkeinElement) -> SkeinElement {
    let mut out = SkeinElement::zero();
    for (i, c) in x.terms() {
        if i % 2 == 0 {
            out.add_term(i, c.clone());
        } else {
            out.add_term(i, c * &LaurentPolynomial::monomial(i as i64 + 2, -1));
        }
    }
    out.normalize()
}

/// The Gluck-twist action on the e basis: e_i -> (-1)^i A^{i^2+2i} e_i.
pub fn gluck_action_e(e: &EBasisElement) -> EBasisElement {
    let mut out = EBasisElement::zero();
    for (i, c) in e.terms() {
        out.add_term(i, c * &gluck_eigenvalue_e(i));
    }
    out
}

/// The e-basis eigenvalue (-1)^i A^{i^2 + 2i} of the Gluck twist.
pub fn gluck_eigenvalue_e(i: usize) -> LaurentPolynomial {
    let i = i as i64;
    let sign = if i % 2 == 0 { 1 } else { -1 };
    LaurentPolynomial::monomial(i * i + 2 * i, sign)
}

/// Adds f full positive twists to the framing: multiplication by (-A^3)^f.
pub fn framing_twist_solid_torus(s: &SolidTorusElement, f: i64) -> SolidTorusElement {
    s.scale(&LaurentPolynomial::framing_factor(f))
}

/// Adds f full positive twists to the framing and renormalizes.
pub fn framing_twist(x: &SkeinElement, f: i64) -> SkeinElement {
    x.scale(&LaurentPolynomial::framing_factor(f)).normalize()
}

/// True iff every supported index is congruent to w mod 2.
pub fn parity_support(x: &SkeinElement, w: i64) -> bool {
    x.terms().all(|(i, _)| (i as i64 - w) % 2 == 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(w: i64) -> Parity {
        if w % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn matches(&self, index: usize) -> bool {
        index.is_multiple_of(2) == matches!(self, Parity::Even)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvarianceCheck {
    pub holds: bool,
    /// Framing correction used in the odd-parity case.
    pub f_used: Option<i64>,
}

/// Checks that the skein class is fixed by the Gluck twist: directly for
/// even parity, and after f framing twists with f = lcm{2i+3 : 0 <= i <= I}
/// for odd parity with top index 2I+1.
pub fn verify_gluck_invariance(x: &SkeinElement, parity: Parity) -> Result<InvarianceCheck, Error> {
    let xn = x.normalize();
    if !xn.terms().all(|(i, _)| parity.matches(i)) {
        return Err(Error::MixedParity);
    }
    match parity {
        Parity::Even => Ok(InvarianceCheck { holds: gluck_action(&xn) == xn, f_used: None }),
        Parity::Odd => {
            let Some(&top) = xn.coeffs.keys().max() else {
                return Ok(InvarianceCheck { holds: true, f_used: None });
            };
            let top_i = (top - 1) / 2;
            let f = (0..=top_i as i64).fold(1i64, |acc, i| acc.lcm(&(2 * i + 3)));
            let holds = framing_twist(&gluck_action(&xn), f) == xn;
            Ok(InvarianceCheck { holds, f_used: Some(f) })
        }
    }
}

/// z-basis to canonical e'-basis normal form.
pub fn solid_torus_to_skein(s: &SolidTorusElement) -> SkeinElement {
    e_to_eprime(&z_to_e(s)).normalize()
}
