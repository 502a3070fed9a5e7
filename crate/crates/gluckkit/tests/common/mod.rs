//! Brute-force bracket oracle, kept independent of the main engine.
//!
//! Each smoothing state is evaluated by composing Temperley-Lieb slice
//! diagrams one letter at a time (matchings on boundary points, with in-box
//! closed loops absorbed as delta factors immediately), and only then closing
//! the composite tangle around the annulus. The main engine instead traces
//! loops on the full state graph in one pass, so agreement between the two is
//! a real cross-check rather than a refactoring identity.

use std::collections::BTreeMap;

use gluckkit::laurent::LaurentPolynomial;
use gluckkit::skein::{BraidWord, SmoothingConvention};

/// Matching on `2n` boundary points: indices `0..n` are the top edge,
/// `n..2n` the bottom edge. `pair[i]` is the point joined to `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Matching {
    n: usize,
    pair: Vec<usize>,
}

impl Matching {
    fn identity(n: usize) -> Self {
        let mut pair = vec![0; 2 * n];
        for i in 0..n {
            pair[i] = n + i;
            pair[n + i] = i;
        }
        Matching { n, pair }
    }

    /// Cup joining top points `i, i+1` and cap joining bottom points
    /// `i, i+1`; all other strands pass through.
    fn cup_cap(n: usize, i: usize) -> Self {
        let mut m = Matching::identity(n);
        m.pair[i] = i + 1;
        m.pair[i + 1] = i;
        m.pair[n + i] = n + i + 1;
        m.pair[n + i + 1] = n + i;
        m
    }

    /// Stacks `other` below `self`, gluing this matching's bottom edge to
    /// the other's top edge. Returns the composite and the number of closed
    /// loops trapped at the glued interface.
    fn compose_below(&self, other: &Matching) -> (Matching, usize) {
        assert_eq!(self.n, other.n);
        let n = self.n;
        // Node layout for the glued complex: 0..n composite top (self's
        // top), n..2n composite bottom (other's bottom), 2n..3n interface.
        let top = |i: usize| i;
        let bottom = |i: usize| n + i;
        let iface = |i: usize| 2 * n + i;

        // Two arcs may share both endpoints (one from each layer), so the
        // adjacency is stored per layer.
        let mut upper = vec![usize::MAX; 3 * n];
        let mut lower = vec![usize::MAX; 3 * n];
        for i in 0..2 * n {
            let j = self.pair[i];
            let a = if i < n { top(i) } else { iface(i - n) };
            let b = if j < n { top(j) } else { iface(j - n) };
            upper[a] = b;
        }
        for i in 0..2 * n {
            let j = other.pair[i];
            let a = if i < n { iface(i) } else { bottom(i - n) };
            let b = if j < n { iface(j) } else { bottom(j - n) };
            lower[a] = b;
        }

        let mut pair = vec![usize::MAX; 2 * n];
        let mut seen = vec![false; 3 * n];
        // walk from each free boundary point through the interface
        for start in 0..2 * n {
            if pair[start] != usize::MAX {
                continue;
            }
            let mut at = start;
            // leave a boundary node through its own layer
            let mut via_upper = start < n;
            loop {
                seen[at] = true;
                let next = if via_upper { upper[at] } else { lower[at] };
                seen[next] = true;
                if next < 2 * n {
                    pair[start] = next;
                    pair[next] = start;
                    break;
                }
                at = next;
                via_upper = !via_upper;
            }
        }
        // untouched interface nodes belong to closed loops
        let mut loops = 0;
        for start in 2 * n..3 * n {
            if seen[start] {
                continue;
            }
            let mut at = start;
            let mut via_upper = true;
            loop {
                seen[at] = true;
                let next = if via_upper { upper[at] } else { lower[at] };
                if next == start && !via_upper {
                    loops += 1;
                    break;
                }
                seen[next] = true;
                at = next;
                via_upper = !via_upper;
            }
        }
        (Matching { n, pair }, loops)
    }
}

/// Closes the tangle in the annulus (bottom point `i` rejoined to top point
/// `i`) and returns `(essential, inessential)` loop counts. A closure loop is
/// essential when its net signed traversal of the closure arcs is nonzero.
fn close(m: &Matching) -> (usize, usize) {
    let n = m.n;
    let mut visited = vec![false; 2 * n];
    let mut essential = 0;
    let mut inessential = 0;
    for start in 0..2 * n {
        if visited[start] {
            continue;
        }
        let mut at = start;
        let mut winding: i64 = 0;
        // alternate: tangle arc, then closure arc
        loop {
            visited[at] = true;
            let through = m.pair[at];
            visited[through] = true;
            // closure arc: bottom i -> top i counts +1, top i -> bottom i -1
            let (next, step) = if through >= n {
                (through - n, 1)
            } else {
                (through + n, -1)
            };
            winding += step;
            if next == start {
                break;
            }
            at = next;
        }
        if winding != 0 {
            essential += 1;
        } else {
            inessential += 1;
        }
    }
    (essential, inessential)
}

/// Direct state-enumeration bracket of a braid closure, as a map from
/// z-degree to coefficient.
pub fn oracle_bracket(
    word: &BraidWord,
    convention: SmoothingConvention,
) -> BTreeMap<usize, LaurentPolynomial> {
    let n = word.strands() as usize;
    let letters = word.letters();
    let c = letters.len();
    let delta = LaurentPolynomial::delta();
    let mut out: BTreeMap<usize, LaurentPolynomial> = BTreeMap::new();
    for mask in 0u64..(1u64 << c) {
        let mut tangle = Matching::identity(n);
        let mut internal_loops = 0usize;
        let mut exponent: i64 = 0;
        for (t, &letter) in letters.iter().enumerate() {
            let pos = letter.unsigned_abs() as usize - 1;
            let pick_a = (mask >> t) & 1 == 0;
            exponent += if pick_a { 1 } else { -1 };
            let a_is_identity = match convention {
                SmoothingConvention::Standard => letter > 0,
                SmoothingConvention::Mirrored => letter < 0,
            };
            let slice = if pick_a == a_is_identity {
                Matching::identity(n)
            } else {
                Matching::cup_cap(n, pos)
            };
            let (next, loops) = tangle.compose_below(&slice);
            tangle = next;
            internal_loops += loops;
        }
        let (essential, inessential) = close(&tangle);
        let mut coeff = LaurentPolynomial::monomial(exponent, 1);
        for _ in 0..internal_loops + inessential {
            coeff = &coeff * &delta;
        }
        let entry = out.entry(essential).or_insert_with(LaurentPolynomial::zero);
        *entry = &*entry + &coeff;
    }
    out.retain(|_, v| !v.is_zero());
    out
}
