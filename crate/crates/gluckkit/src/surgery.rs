//! The framing/handleslide/Gluck calculus on abstracted surgery diagrams
//! of knots in S^1 x S^2, and first homology of M(D, f) via Smith normal
//! form.
//!
//! Relation-matrix convention: generators are ordered ([m_D], [h_D]); the
//! rows are the surgery relation of the 0-framed unknot, w[m] = 0, and the
//! surgery relation of D, f[m] + w[h] = 0. At f = -1 this recovers the
//! relation [m_D] = w[h_D] used by the blowdown argument.

use num_integer::Integer;

use crate::error::Error;

/// The (winding number, framing) abstraction of a surgery diagram. Every
/// conclusion drawn here depends only on these two integers plus the
/// algebraic handleslide count k supplied by the caller.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagramClass {
    pub w: i64,
    pub f: i64,
}

impl DiagramClass {
    pub fn new(w: i64, f: i64) -> Self {
        Self { w, f }
    }
}

/// A unimodular 2x2 integer matrix acting on the ordered basis
/// ([m_D], [h_D]); column j is the image of the j-th basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomologyAction {
    entries: [[i64; 2]; 2],
}

impl HomologyAction {
    pub fn new(entries: [[i64; 2]; 2]) -> Self {
        let det = entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0];
        assert!(det == 1 || det == -1, "homology action must be unimodular");
        Self { entries }
    }

    pub fn identity() -> Self {
        Self::new([[1, 0], [0, 1]])
    }

    /// [m] -> [m], [h] -> [h] + c[m].
    pub fn meridian_shear(c: i64) -> Self {
        Self::new([[1, c], [0, 1]])
    }

    /// `self` applied after `first`.
    pub fn compose(&self, first: &HomologyAction) -> Self {
        let a = &self.entries;
        let b = &first.entries;
        let mut out = [[0i64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Self::new(out)
    }

    pub fn entries(&self) -> [[i64; 2]; 2] {
        self.entries
    }

    /// Coefficient c in [h] -> [h] + c[m].
    pub fn meridian_coefficient(&self) -> i64 {
        self.entries[0][1]
    }
}

/// One full positive Gluck twist: framing f -> f + w^2, action
/// [h] -> [h] + w[m].
pub fn gluck_twist(d: DiagramClass) -> (DiagramClass, HomologyAction) {
    (DiagramClass::new(d.w, d.f + d.w * d.w), HomologyAction::meridian_shear(d.w))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlideSign {
    Positive,
    Negative,
}

impl SlideSign {
    fn as_i64(self) -> i64 {
        match self {
            SlideSign::Positive => 1,
            SlideSign::Negative => -1,
        }
    }
}

/// A signed handleslide over the 0-framed unknot: framing f -> f ± 2w,
/// action [h] -> [h] ± [m].
pub fn handleslide(d: DiagramClass, sign: SlideSign) -> (DiagramClass, HomologyAction) {
    let s = sign.as_i64();
    (DiagramClass::new(d.w, d.f + 2 * s * d.w), HomologyAction::meridian_shear(s))
}

/// Solutions of w^2 + 2kw = 0 in k.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FramingSolution {
    /// w = 0: every k solves the equation.
    AllK,
    /// w odd: no integer solution.
    NoSolution,
    /// w nonzero even: the unique k = -w/2.
    Unique(i64),
}

pub fn solve_framing_equation(w: i64) -> FramingSolution {
    if w == 0 {
        FramingSolution::AllK
    } else if w % 2 != 0 {
        FramingSolution::NoSolution
    } else {
        FramingSolution::Unique(-w / 2)
    }
}

/// Conclusion available for odd winding number from the framing equation
/// alone: |algebraic winding| <= geometric winding, and geometric winding 1
/// means the Hopf knot or its reverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OddWindingVerdict {
    /// |w| >= 3: the knot is not isotopic to its Gluck image.
    NotIsotopic,
    /// w = ±1: the Hopf knot (or its reverse) is allowed; undecided here.
    Indeterminate,
}

pub fn odd_winding_verdict(w: i64) -> Result<OddWindingVerdict, Error> {
    if w % 2 == 0 {
        return Err(Error::WindingNotOdd(w));
    }
    if w.abs() >= 3 {
        Ok(OddWindingVerdict::NotIsotopic)
    } else {
        Ok(OddWindingVerdict::Indeterminate)
    }
}

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn from_rows(rows: &[Vec<i128>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Self { rows: r, cols: c, data: rows.iter().flatten().copied().collect() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self { rows: n, cols: n, data: vec![0; n * n] };
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = IntMatrix { rows: self.rows, cols: rhs.cols, data: vec![0; self.rows * rhs.cols] };
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    /// Determinant by Laplace expansion; only used on the small unimodular
    /// factors produced by the Smith reduction.
    pub fn det(&self) -> i128 {
        assert_eq!(self.rows, self.cols);
        match self.rows {
            0 => 1,
            1 => self[(0, 0)],
            n => (0..n)
                .map(|j| {
                    let minor: Vec<Vec<i128>> = (1..n)
                        .map(|i| (0..n).filter(|&c| c != j).map(|c| self[(i, c)]).collect())
                        .collect();
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * self[(0, j)] * IntMatrix::from_rows(&minor).det()
                })
                .sum(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row a -= q * row b
    fn row_sub(&mut self, a: usize, q: i128, b: usize) {
        for j in 0..self.cols {
            let v = self[(b, j)];
            self[(a, j)] -= q * v;
        }
    }

    /// col a -= q * col b
    fn col_sub(&mut self, a: usize, q: i128, b: usize) {
        for i in 0..self.rows {
            let v = self[(i, b)];
            self[(i, a)] -= q * v;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            self[(a, j)] = -self[(a, j)];
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        &mut self.data[i * self.cols + j]
    }
}

/// U * M * V = S with U, V unimodular and S diagonal, non-negative, in
/// divisibility order.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    pub diagonal: IntMatrix,
    pub right: IntMatrix,
}

impl SmithDecomposition {
    pub fn diagonal_entries(&self) -> Vec<i128> {
        (0..self.diagonal.rows.min(self.diagonal.cols)).map(|i| self.diagonal[(i, i)]).collect()
    }
}

/// Deterministic Smith normal form: the pivot is always the
/// smallest-magnitude nonzero entry of the working submatrix, ties broken
/// by row-major position.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let mut s = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let limit = m.rows.min(m.cols);

    for t in 0..limit {
        'pivot: loop {
            // smallest-magnitude nonzero entry in s[t.., t..]
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..s.rows {
                for j in t..s.cols {
                    if s[(i, j)] != 0
                        && pivot.is_none_or(|(pi, pj)| s[(i, j)].abs() < s[(pi, pj)].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break 'pivot };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = s[(t, t)];
            let mut clean = true;
            for i in t + 1..s.rows {
                if s[(i, t)] != 0 {
                    let q = s[(i, t)].div_euclid(p);
                    s.row_sub(i, q, t);
                    u.row_sub(i, q, t);
                    if s[(i, t)] != 0 {
                        clean = false;
                    }
                }
            }
            for j in t + 1..s.cols {
                if s[(t, j)] != 0 {
                    let q = s[(t, j)].div_euclid(p);
                    s.col_sub(j, q, t);
                    v.col_sub(j, q, t);
                    if s[(t, j)] != 0 {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue 'pivot;
            }
            // force the divisibility chain before moving on
            for i in t + 1..s.rows {
                for j in t + 1..s.cols {
                    if s[(i, j)] % p != 0 {
                        s.row_sub(t, -1, i);
                        u.row_sub(t, -1, i);
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        if s[(t, t)] < 0 {
            s.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithDecomposition { left: u, diagonal: s, right: v }
}

/// H_1 of a presented abelian group: free rank plus the invariant-factor
/// chain (each >= 2, ascending divisibility).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstHomology {
    pub free_rank: usize,
    pub invariant_factors: Vec<u64>,
}

/// H_1(M(D, f); Z) from the relation matrix [[w, 0], [f, w]] on the
/// generators ([m_D], [h_D]).
pub fn surgery_homology(d: DiagramClass) -> FirstHomology {
    let rel = IntMatrix::from_rows(&[vec![d.w as i128, 0], vec![d.f as i128, d.w as i128]]);
    let snf = smith_normal_form(&rel);
    let diag = snf.diagonal_entries();
    let free_rank = 2 - diag.iter().filter(|&&x| x != 0).count();
    let invariant_factors = diag.iter().filter(|&&x| x > 1).map(|&x| x as u64).collect();
    FirstHomology { free_rank, invariant_factors }
}

/// The residue c with phi_*[h] = c[h] in H_1(M(D, f)), for the
/// homeomorphism of a Gluck twist followed by k algebraic handleslides.
/// Needs gcd(w, f) = 1 so that H_1 is cyclic generated by [h]; returns
/// None otherwise.
///
/// From af + bw = 1 the relations give [m] = -aw[h], so
/// [h] -> [h] + (w+k)[m] = (1 - aw(w+k))[h], reduced mod w^2.
pub fn homology_action_on_generator(d: DiagramClass, k: i64) -> Option<i64> {
    let egcd = d.f.extended_gcd(&d.w);
    if egcd.gcd.abs() != 1 {
        return None;
    }
    // a*f + b*w = ±1; normalize to +1
    let a = egcd.x * egcd.gcd.signum();
    let order = (d.w as i128) * (d.w as i128);
    let c = 1 - (a as i128) * (d.w as i128) * ((d.w + k) as i128);
    if order == 0 {
        Some(c as i64)
    } else {
        Some(c.rem_euclid(order) as i64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gluck_twist_examples() {
        let (d, a) = gluck_twist(DiagramClass::new(3, 0));
        assert_eq!(d, DiagramClass::new(3, 9));
        assert_eq!(a, HomologyAction::meridian_shear(3));

        let (d, a) = gluck_twist(DiagramClass::new(0, 5));
        assert_eq!(d, DiagramClass::new(0, 5));
        assert_eq!(a, HomologyAction::identity());

        let (d, a) = gluck_twist(DiagramClass::new(-2, 1));
        assert_eq!(d, DiagramClass::new(-2, 5));
        assert_eq!(a, HomologyAction::meridian_shear(-2));
    }

    #[test]
    fn handleslide_examples() {
        let (d, a) = handleslide(DiagramClass::new(2, 1), SlideSign::Negative);
        assert_eq!(d, DiagramClass::new(2, -3));
        assert_eq!(a, HomologyAction::meridian_shear(-1));

        let (d, a) = handleslide(DiagramClass::new(0, 7), SlideSign::Positive);
        assert_eq!(d, DiagramClass::new(0, 7));
        assert_eq!(a, HomologyAction::meridian_shear(1));

        // inverse moves compose to the identity
        let start = DiagramClass::new(5, 2);
        let (mid, a1) = handleslide(start, SlideSign::Positive);
        let (end, a2) = handleslide(mid, SlideSign::Negative);
        assert_eq!(end, start);
        assert_eq!(a2.compose(&a1), HomologyAction::identity());
    }

    #[test]
    fn framing_equation_examples() {
        assert_eq!(solve_framing_equation(4), FramingSolution::Unique(-2));
        assert_eq!(solve_framing_equation(3), FramingSolution::NoSolution);
        assert_eq!(solve_framing_equation(0), FramingSolution::AllK);
    }

    #[test]
    fn odd_winding_examples() {
        assert_eq!(odd_winding_verdict(5).unwrap(), OddWindingVerdict::NotIsotopic);
        assert_eq!(odd_winding_verdict(1).unwrap(), OddWindingVerdict::Indeterminate);
        assert_eq!(odd_winding_verdict(-3).unwrap(), OddWindingVerdict::NotIsotopic);
        assert_eq!(odd_winding_verdict(-1).unwrap(), OddWindingVerdict::Indeterminate);
        assert!(odd_winding_verdict(4).is_err());
        for w in (3..=99i64).step_by(2) {
            assert_eq!(odd_winding_verdict(w).unwrap(), OddWindingVerdict::NotIsotopic);
            assert_eq!(odd_winding_verdict(-w).unwrap(), OddWindingVerdict::NotIsotopic);
        }
    }

    #[test]
    fn snf_examples() {
        // hand row-reduction oracle: [[2,0],[1,2]] -> diag(1,4)
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![1, 2]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal_entries(), vec![1, 4]);
        assert_eq!(snf.left.mul(&m).mul(&snf.right), snf.diagonal);

        let id = IntMatrix::identity(3);
        assert_eq!(smith_normal_form(&id).diagonal_entries(), vec![1, 1, 1]);

        let z = IntMatrix::from_rows(&[vec![0, 0], vec![0, 0]]);
        assert_eq!(smith_normal_form(&z).diagonal_entries(), vec![0, 0]);
    }

    #[test]
    fn surgery_homology_examples() {
        assert_eq!(
            surgery_homology(DiagramClass::new(2, 1)),
            FirstHomology { free_rank: 0, invariant_factors: vec![4] }
        );
        assert_eq!(
            surgery_homology(DiagramClass::new(4, -1)),
            FirstHomology { free_rank: 0, invariant_factors: vec![16] }
        );
        assert_eq!(
            surgery_homology(DiagramClass::new(0, 0)),
            FirstHomology { free_rank: 2, invariant_factors: vec![] }
        );
        assert_eq!(
            surgery_homology(DiagramClass::new(0, 5)),
            FirstHomology { free_rank: 1, invariant_factors: vec![5] }
        );
        assert_eq!(
            surgery_homology(DiagramClass::new(0, 1)),
            FirstHomology { free_rank: 1, invariant_factors: vec![] }
        );
    }

    #[test]
    fn homology_order_matches_determinant() {
        for w in -9i64..=9 {
            for f in -9i64..=9 {
                let h = surgery_homology(DiagramClass::new(w, f));
                if w != 0 {
                    let order: u64 = h.invariant_factors.iter().product();
                    assert_eq!(order, (w * w) as u64, "w={w} f={f}");
                    assert_eq!(h.free_rank, 0);
                } else {
                    assert_eq!(h.free_rank, if f == 0 { 2 } else { 1 });
                }
            }
        }
    }

    #[test]
    fn action_on_generator_examples() {
        assert_eq!(homology_action_on_generator(DiagramClass::new(2, 1), -1), Some(3));
        assert_eq!(homology_action_on_generator(DiagramClass::new(4, -1), -2), Some(9));
        assert_eq!(homology_action_on_generator(DiagramClass::new(2, 1), 0), Some(1));
        // H_1 not cyclic on [h] when gcd(w, f) > 1
        assert_eq!(homology_action_on_generator(DiagramClass::new(2, 4), 0), None);
    }

    #[test]
    fn general_multiplier_matches_lemma() {
        // ψ_*([μ]) = (w²/2 + 1)[μ] at f = -1, k = -w/2
        for w in (2i64..=20).step_by(2) {
            let c = homology_action_on_generator(DiagramClass::new(w, -1), -w / 2).unwrap();
            assert_eq!(c, w * w / 2 + 1, "w={w}");
        }
    }
}
