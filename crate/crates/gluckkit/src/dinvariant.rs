//! Spin^c bookkeeping and Heegaard-Floer correction terms of positive
//! integer surgeries, plus the even-winding Gluck obstruction engine.
//!
//! d(S^3_n(K), t_i) = d(S^3_n(U), t_i) - 2 max{V_i(K), V_{n-i}(K)} with the
//! lens-space value d(S^3_n(U), t_i) = (n-2i)^2/4n - 1/4. All values are
//! exact rationals.

use num_bigint::BigInt;

use crate::error::Error;
use crate::laurent::{rational, Rational};
use crate::semigroup::{v_sequence, TorusKnotParams, VSequence};

/// The Spin^c structure t_i on an n-surgery, under the identification
/// Spin^c(S^3_n(K)) -> Z/n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SpinCLabel {
    n: u64,
    i: u64,
}

impl SpinCLabel {
    pub fn new(n: u64, i: u64) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::NonPositiveSurgery(0));
        }
        if i >= n {
            return Err(Error::SpinCOutOfRange { i, n });
        }
        Ok(Self { n, i })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn index(&self) -> u64 {
        self.i
    }
}

/// n-surgery on a knot with the given V-sequence.
#[derive(Clone, Debug)]
pub struct SurgeryDescriptor {
    v: VSequence,
    n: u64,
    label: String,
}

impl SurgeryDescriptor {
    pub fn new(v: VSequence, n: i64, label: impl Into<String>) -> Result<Self, Error> {
        if n <= 0 {
            return Err(Error::NonPositiveSurgery(n));
        }
        Ok(Self { v, n: n as u64, label: label.into() })
    }

    pub fn torus_knot(params: TorusKnotParams, n: i64) -> Result<Self, Error> {
        if n <= 0 {
            return Err(Error::NonPositiveSurgery(n));
        }
        Ok(Self { v: v_sequence(params, n as u64), n: n as u64, label: params.label() })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn v(&self) -> &VSequence {
        &self.v
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// Lens-space correction term d(S^3_n(U), t_i) = (n-2i)^2/4n - 1/4.
pub fn d_lens(n: i64, i: u64) -> Result<Rational, Error> {
    if n <= 0 {
        return Err(Error::NonPositiveSurgery(n));
    }
    if i >= n as u64 {
        return Err(Error::SpinCOutOfRange { i, n: n as u64 });
    }
    let m = BigInt::from(n) - BigInt::from(2) * BigInt::from(i);
    Ok(Rational::new(&m * &m, BigInt::from(4 * n)) - rational(1, 4))
}

/// Ni-Wu surgery formula d(S^3_n(K), t_i); V_{n-0} is read as V_n.
pub fn d_surgery(s: &SurgeryDescriptor, i: u64) -> Result<Rational, Error> {
    let n = s.n;
    if i >= n {
        return Err(Error::SpinCOutOfRange { i, n });
    }
    let correction = s.v.get(i).max(s.v.get(n - i));
    Ok(d_lens(n as i64, i)? - rational(2, 1) * rational(correction as i64, 1))
}

/// The two spin structures t_0 and t_{n/2} of an even n-surgery.
pub fn spin_structures(n: u64) -> Result<(SpinCLabel, SpinCLabel), Error> {
    if n == 0 {
        return Err(Error::NonPositiveSurgery(0));
    }
    if !n.is_multiple_of(2) {
        return Err(Error::OddSurgeryCoefficient(n));
    }
    Ok((SpinCLabel::new(n, 0)?, SpinCLabel::new(n, n / 2)?))
}

/// Affine translation t_i -> t_{i+k} of the Spin^c action.
pub fn spinc_translate(t: SpinCLabel, k: i64) -> SpinCLabel {
    let i = (t.i as i64 + k).rem_euclid(t.n as i64) as u64;
    SpinCLabel { n: t.n, i }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Obstructed,
    NotObstructed,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Obstructed => "Obstructed",
            Verdict::NotObstructed => "NotObstructed",
            Verdict::Inconclusive => "Inconclusive",
        }
    }
}

/// A Spin^c label whose correction term disagrees with its image under the
/// hypothesized homeomorphism: (i, d(t_i), d(t_{ci mod n})).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub i: u64,
    pub d_source: Rational,
    pub d_image: Rational,
}

/// Outcome of the even-winding obstruction run.
#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub w: u64,
    pub n: u64,
    /// d(S^3_n(T_{w,w+1}), t_i) indexed by i.
    pub d_table: Vec<Rational>,
    pub spin_distinguished: bool,
    pub multiplier: i64,
    pub violations: Vec<Violation>,
    pub verdict: Verdict,
}

/// Checks the multiplier action i -> c*i + shift against the d-table and
/// returns the labels where the correction terms disagree.
fn branch_violations(d_table: &[Rational], c: i64, shift: u64) -> Vec<Violation> {
    let n = d_table.len() as u64;
    let mut out = Vec::new();
    for i in 0..n {
        let image = ((c.rem_euclid(n as i64) as u64) * i + shift) % n;
        if d_table[i as usize] != d_table[image as usize] {
            out.push(Violation {
                i,
                d_source: d_table[i as usize].clone(),
                d_image: d_table[image as usize].clone(),
            });
        }
    }
    out
}

/// Obstruction run against an arbitrary surgery descriptor and meridian
/// multiplier c, for even n. A homeomorphism acting by c on [mu] must
/// permute Spin^c structures by i -> c*i once a spin structure is fixed;
/// when d distinguishes the two spin structures the fixed one is t_0,
/// otherwise both spin-fixing branches are checked and Obstructed is only
/// claimed when every branch fails.
pub fn obstruct_with_multiplier(
    s: &SurgeryDescriptor,
    w: u64,
    multiplier: i64,
) -> Result<ObstructionReport, Error> {
    let n = s.n;
    if !n.is_multiple_of(2) {
        return Err(Error::OddSurgeryCoefficient(n));
    }
    let d_table: Vec<Rational> =
        (0..n).map(|i| d_surgery(s, i)).collect::<Result<_, _>>()?;
    let spin_distinguished = d_table[0] != d_table[(n / 2) as usize];

    let fixed_branch = branch_violations(&d_table, multiplier, 0);
    let (verdict, violations) = if spin_distinguished {
        if fixed_branch.is_empty() {
            (Verdict::NotObstructed, fixed_branch)
        } else {
            (Verdict::Obstructed, fixed_branch)
        }
    } else {
        let swapped_branch = branch_violations(&d_table, multiplier, n / 2);
        if !fixed_branch.is_empty() && !swapped_branch.is_empty() {
            (Verdict::Obstructed, fixed_branch)
        } else {
            (Verdict::Inconclusive, fixed_branch)
        }
    };

    Ok(ObstructionReport {
        w,
        n,
        d_table,
        spin_distinguished,
        multiplier,
        violations,
        verdict,
    })
}

/// The full even-winding Gluck obstruction of the winding-w knot K_w:
/// w^2-surgery on T_{w,w+1} with meridian multiplier w^2/2 + 1.
pub fn obstruct_even_gluck(w: i64) -> Result<ObstructionReport, Error> {
    if w < 2 || w % 2 != 0 {
        return Err(Error::WindingNotPositiveEven(w));
    }
    let w = w as u64;
    let n = (w * w) as i64;
    let params = TorusKnotParams::new(w, w + 1).expect("w, w+1 coprime");
    let s = SurgeryDescriptor::torus_knot(params, n)?;
    obstruct_with_multiplier(&s, w, (w * w / 2 + 1) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::rational;

    #[test]
    fn d_lens_examples() {
        assert_eq!(d_lens(16, 0).unwrap(), rational(15, 4));
        assert_eq!(d_lens(16, 8).unwrap(), rational(-1, 4));
        assert_eq!(d_lens(2, 1).unwrap(), rational(-1, 4));
        assert_eq!(d_lens(0, 0).unwrap_err(), Error::NonPositiveSurgery(0));
        assert_eq!(d_lens(-3, 0).unwrap_err(), Error::NonPositiveSurgery(-3));
    }

    fn t45_16() -> SurgeryDescriptor {
        SurgeryDescriptor::torus_knot(TorusKnotParams::new(4, 5).unwrap(), 16).unwrap()
    }

    #[test]
    fn d_surgery_examples() {
        // Values displayed in the w=4 computation.
        assert_eq!(d_surgery(&t45_16(), 0).unwrap(), rational(-9, 4));
        assert_eq!(d_surgery(&t45_16(), 1).unwrap(), rational(-19, 16));
        // All-zero V-sequence reduces to the lens value.
        let unknot = SurgeryDescriptor::new(VSequence::zero(), 7, "U").unwrap();
        for i in 0..7 {
            assert_eq!(d_surgery(&unknot, i).unwrap(), d_lens(7, i).unwrap());
        }
    }

    #[test]
    fn spin_structure_examples() {
        let (a, b) = spin_structures(16).unwrap();
        assert_eq!((a.index(), b.index()), (0, 8));
        let (a, b) = spin_structures(2).unwrap();
        assert_eq!((a.index(), b.index()), (0, 1));
        let (a, b) = spin_structures(4).unwrap();
        assert_eq!((a.index(), b.index()), (0, 2));
        assert!(spin_structures(5).is_err());
    }

    #[test]
    fn translate_examples() {
        let t = SpinCLabel::new(16, 0).unwrap();
        assert_eq!(spinc_translate(t, 1).index(), 1);
        let t = SpinCLabel::new(16, 9).unwrap();
        assert_eq!(spinc_translate(t, 9).index(), 2);
        let t = SpinCLabel::new(16, 5).unwrap();
        assert_eq!(spinc_translate(t, 0).index(), 5);
        assert_eq!(spinc_translate(t, -6).index(), 15);
    }

    #[test]
    fn obstruct_w4() {
        let report = obstruct_even_gluck(4).unwrap();
        assert_eq!(report.verdict, Verdict::Obstructed);
        assert!(report.spin_distinguished);
        assert_eq!(report.multiplier, 9);
        let v = report.violations.iter().find(|v| v.i == 1).expect("violation at i=1");
        assert_eq!(v.d_source, rational(-19, 16));
        assert_eq!(v.d_image, rational(-3, 16));
    }

    #[test]
    fn obstruct_w2_passes() {
        let report = obstruct_even_gluck(2).unwrap();
        assert_eq!(report.verdict, Verdict::NotObstructed);
        assert_eq!(report.d_table[1], rational(0, 1));
        assert_eq!(report.d_table[3], rational(0, 1));
        assert!(report.violations.is_empty());
    }

    #[test]
    fn obstruct_rejects_bad_w() {
        assert!(obstruct_even_gluck(3).is_err());
        assert!(obstruct_even_gluck(0).is_err());
        assert!(obstruct_even_gluck(-4).is_err());
    }

    #[test]
    fn conjugation_symmetry() {
        for w in [2u64, 3, 4, 5, 6] {
            let params = TorusKnotParams::new(w, w + 1).unwrap();
            for n in [1i64, 2, 5, 16, 399, 400] {
                let s = SurgeryDescriptor::torus_knot(params, n).unwrap();
                for i in 0..n as u64 {
                    let j = (n as u64 - i) % n as u64;
                    assert_eq!(d_surgery(&s, i).unwrap(), d_surgery(&s, j).unwrap());
                }
            }
        }
    }

    #[test]
    fn d_surgery_bounded_by_lens() {
        let s = t45_16();
        for i in 0..16 {
            assert!(d_surgery(&s, i).unwrap() <= d_lens(16, i).unwrap());
        }
    }

    // d(t_0) = d(t_{n/2}) here, so the engine must consider both
    // spin-fixing branches.
    fn undistinguished() -> SurgeryDescriptor {
        let v = VSequence::new(vec![1, 0]).unwrap();
        SurgeryDescriptor::new(v, 8, "synthetic").unwrap()
    }

    #[test]
    fn undistinguished_inconclusive_when_a_branch_passes() {
        // c = 3: the t_0-fixing branch fails but the swapped branch passes.
        let report = obstruct_with_multiplier(&undistinguished(), 2, 3).unwrap();
        assert!(!report.spin_distinguished);
        assert_eq!(report.verdict, Verdict::Inconclusive);
        // c = 1: the identity action passes outright.
        let report = obstruct_with_multiplier(&undistinguished(), 2, 1).unwrap();
        assert_eq!(report.verdict, Verdict::Inconclusive);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn undistinguished_obstructed_when_all_branches_fail() {
        let report = obstruct_with_multiplier(&undistinguished(), 2, 2).unwrap();
        assert!(!report.spin_distinguished);
        assert_eq!(report.verdict, Verdict::Obstructed);
        assert!(!report.violations.is_empty());
    }
}
