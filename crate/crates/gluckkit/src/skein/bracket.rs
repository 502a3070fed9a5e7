//! The Kauffman bracket of blackboard-framed braid closures in S^1 x S^2,
//! by exhaustive smoothing-state enumeration.
//!
//! A state replaces every crossing by a smoothing and leaves a disjoint
//! union of embedded circles in the annulus. Each component is traced as a
//! cyclic alternation of braid-box segments and closure arcs; its winding
//! is the signed count of closure-arc traversals and must land in
//! {-1, 0, 1}. Essential circles (winding nonzero) contribute a factor of
//! z; null-homotopic ones a factor of delta = -A^2 - A^{-2}.

use crate::error::Error;
use crate::laurent::LaurentPolynomial;

use super::{SmoothingConvention, SolidTorusElement};

/// Hard cap on the exhaustive 2^c state sum.
pub const MAX_CROSSINGS: usize = 24;

/// A braid word on n strands; letter ±i stands for sigma_i^{±1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: u64,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: u64, letters: Vec<i64>) -> Result<Self, Error> {
        if strands < 1 {
            return Err(Error::InvalidBraidLetter { letter: 0, strands });
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() > strands - 1 {
                return Err(Error::InvalidBraidLetter { letter: l, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    /// Parses a whitespace-separated list of nonzero integers, e.g. "1 1 -2".
    pub fn parse(strands: u64, text: &str) -> Result<Self, Error> {
        let letters = text
            .split_whitespace()
            .map(|tok| tok.parse::<i64>().map_err(|_| Error::MalformedBraidWord(tok.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> u64 {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }
}

// Node connection: (target node, true if the target's port is its upper
// one, winding picked up by the traversal).
type Port = (usize, bool, i8);

/// Bracket of the closure of `b` under the standard smoothing convention.
pub fn bracket_of_closure(b: &BraidWord) -> Result<SolidTorusElement, Error> {
    bracket_of_closure_with(b, SmoothingConvention::Standard)
}

pub fn bracket_of_closure_with(
    b: &BraidWord,
    convention: SmoothingConvention,
) -> Result<SolidTorusElement, Error> {
    let c = b.letters.len();
    if c > MAX_CROSSINGS {
        return Err(Error::BraidTooLarge { crossings: c, max: MAX_CROSSINGS });
    }
    let n = b.strands as usize;
    let delta = LaurentPolynomial::delta();
    let mut out = SolidTorusElement::zero();

    // node id for strand j (0-based) at level t is t*n + j; levels 0..=c
    let node = |t: usize, j: usize| t * n + j;
    let node_count = (c + 1) * n;

    for mask in 0u32..(1u32 << c) {
        let mut up: Vec<Port> = vec![(usize::MAX, false, 0); node_count];
        let mut down: Vec<Port> = vec![(usize::MAX, false, 0); node_count];
        let mut exponent = 0i64;

        for (t, &letter) in b.letters.iter().enumerate() {
            let i = letter.unsigned_abs() as usize - 1;
            let cupcap = (mask >> t) & 1 == 1;
            for j in 0..n {
                if cupcap && (j == i || j == i + 1) {
                    continue;
                }
                up[node(t, j)] = (node(t + 1, j), false, 0);
                down[node(t + 1, j)] = (node(t, j), true, 0);
            }
            if cupcap {
                up[node(t, i)] = (node(t, i + 1), true, 0);
                up[node(t, i + 1)] = (node(t, i), true, 0);
                down[node(t + 1, i)] = (node(t + 1, i + 1), false, 0);
                down[node(t + 1, i + 1)] = (node(t + 1, i), false, 0);
            }
            // A-smoothing of a positive crossing is the through-strand
            // smoothing; a negative crossing is its mirror.
            let mut a_side = (letter > 0) != cupcap;
            if convention == SmoothingConvention::Mirrored {
                a_side = !a_side;
            }
            exponent += if a_side { 1 } else { -1 };
        }
        for j in 0..n {
            up[node(c, j)] = (node(0, j), false, 1);
            down[node(0, j)] = (node(c, j), true, -1);
        }

        let mut visited = vec![false; node_count];
        let mut essential = 0usize;
        let mut inessential = 0usize;
        for start in 0..node_count {
            if visited[start] {
                continue;
            }
            visited[start] = true;
            let mut winding = 0i32;
            let mut cur = start;
            let mut leave_up = true;
            loop {
                let (next, arrived_up, wind) = if leave_up { up[cur] } else { down[cur] };
                winding += wind as i32;
                cur = next;
                leave_up = !arrived_up;
                if cur == start && leave_up {
                    break;
                }
                visited[cur] = true;
            }
            assert!(winding.abs() <= 1, "embedded circle in the annulus with winding {winding}");
            if winding == 0 {
                inessential += 1;
            } else {
                essential += 1;
            }
        }

        let mut value = LaurentPolynomial::monomial(exponent, 1);
        for _ in 0..inessential {
            value = &value * &delta;
        }
        out.add_term(essential, value);
    }
    Ok(out)
}
