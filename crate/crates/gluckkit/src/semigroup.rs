//! Numerical semigroups <p,q>, their gap-counting function, and V-sequences
//! of torus knots.

use crate::error::Error;

/// Parameters (p, q) of the torus knot T_{p,q}; p, q >= 1 and coprime.
/// p = 1 or q = 1 is the unknot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusKnotParams {
    p: u64,
    q: u64,
}

impl TorusKnotParams {
    pub fn new(p: u64, q: u64) -> Result<Self, Error> {
        if p < 1 || q < 1 {
            return Err(Error::InvalidTorusKnot { p, q, reason: "parameters must be >= 1" });
        }
        if num_integer::gcd(p, q) != 1 {
            return Err(Error::InvalidTorusKnot { p, q, reason: "parameters must be coprime" });
        }
        Ok(Self { p, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Largest non-member pq - p - q; negative exactly when p or q is 1.
    pub fn frobenius_bound(&self) -> i64 {
        (self.p * self.q) as i64 - self.p as i64 - self.q as i64
    }

    /// Seifert genus offset (p-1)(q-1)/2 used by the V-sequence formula.
    pub fn genus(&self) -> u64 {
        (self.p - 1) * (self.q - 1) / 2
    }

    pub fn label(&self) -> String {
        format!("T_{{{},{}}}", self.p, self.q)
    }
}

/// The non-increasing, eventually-zero sequence {V_i} of a knot. Indices
/// past the stored prefix read as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VSequence {
    values: Vec<u64>,
}

impl VSequence {
    pub fn new(values: Vec<u64>) -> Result<Self, Error> {
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidVSequence("sequence must be non-increasing"));
        }
        if values.last().is_some_and(|&v| v != 0) {
            return Err(Error::InvalidVSequence("final stored entry must be 0"));
        }
        Ok(Self { values })
    }

    /// All-zero sequence (the unknot).
    pub fn zero() -> Self {
        Self { values: vec![0] }
    }

    /// V_i, zero-extended beyond the stored prefix.
    pub fn get(&self, i: u64) -> u64 {
        usize::try_from(i).ok().and_then(|i| self.values.get(i).copied()).unwrap_or(0)
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

/// Membership of x in the semigroup <p,q> = {ip + jq | i, j >= 0}.
pub fn semigroup_contains(params: TorusKnotParams, x: u64) -> bool {
    if (x as i64) > params.frobenius_bound() {
        return true;
    }
    let (p, q) = (params.p, params.q);
    (0..=x / p).any(|i| (x - i * p).is_multiple_of(q))
}

/// I_{p,q}(j): the number of semigroup gaps >= j, by enumeration up to the
/// Frobenius bound.
pub fn gap_count(params: TorusKnotParams, j: u64) -> u64 {
    let bound = params.frobenius_bound();
    if bound < 0 {
        return 0;
    }
    (j..=bound as u64).filter(|&x| !semigroup_contains(params, x)).count() as u64
}

/// The V-sequence of T_{p,q} out to `max_index`:
/// V_j = I_{p,q}(j + (p-1)(q-1)/2).
pub fn v_sequence(params: TorusKnotParams, max_index: u64) -> VSequence {
    let offset = params.genus();
    let mut values: Vec<u64> =
        (0..=max_index).map(|j| gap_count(params, j + offset)).collect();
    if values.last().is_some_and(|&v| v != 0) {
        // Extend out to the point where the gap count provably vanishes.
        let mut j = max_index + 1;
        loop {
            let v = gap_count(params, j + offset);
            values.push(v);
            if v == 0 {
                break;
            }
            j += 1;
        }
    }
    VSequence::new(values).expect("gap counts are non-increasing")
}

/// Closed-form spot values of {V_i(T_{w,w+1})} for even w:
/// (V_0, V_1, V_{w^2/2 - 1}, V_{w^2/2}).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EvenTorusVValues {
    pub v0: u64,
    pub v1: u64,
    pub v_half_minus_one: u64,
    pub v_half: u64,
}

pub fn v_closed_form_even(w: u64) -> Result<EvenTorusVValues, Error> {
    if w < 2 || !w.is_multiple_of(2) {
        return Err(Error::WindingNotPositiveEven(w as i64));
    }
    let v0 = (w * w + 2 * w) / 8;
    Ok(EvenTorusVValues { v0, v1: v0 - 1, v_half_minus_one: 0, v_half: 0 })
}
