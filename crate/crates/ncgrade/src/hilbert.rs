//! Graded dimension series and closed-form comparison.
//!
//! A dimension series is the list `h_0..h_N` of graded dimensions. The
//! closed forms we compare against are rational functions given by
//! integer numerator/denominator polynomials in `t`; expansion is done
//! with exact rational arithmetic.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A polynomial in `t` with integer coefficients (index = power).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    /// Builds from coefficients `c_0, c_1, ...`, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPoly::new(vec![1])
    }

    /// `1 - t^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[0] = 1;
        c[k] = -1;
        IntPoly::new(c)
    }

    /// Coefficient of `t^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// All stored coefficients.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return IntPoly::new(vec![]);
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

/// The list of graded dimensions `h_0..h_N` of an algebra or module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    pub coeffs: Vec<usize>,
}

impl HilbertSeries {
    pub fn new(coeffs: Vec<usize>) -> Self {
        HilbertSeries { coeffs }
    }
}

/// Power-series expansion of `num/den` through `t^n`. The denominator
/// must have nonzero constant term.
pub fn expand_series(num: &IntPoly, den: &IntPoly, n: usize) -> Result<Vec<Scalar>> {
    let d0 = den.coeff(0);
    if d0 == 0 {
        return Err(Error::Config("closed-form denominator has zero constant term".into()));
    }
    let d0 = Scalar::from_int(d0);
    let mut h: Vec<Scalar> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        // den_0 h_k = num_k - sum_{j=1..k} den_j h_{k-j}
        let mut acc = Scalar::from_int(num.coeff(k));
        for j in 1..=k {
            let dj = den.coeff(j);
            if dj != 0 {
                acc -= &(&Scalar::from_int(dj) * &h[k - j]);
            }
        }
        h.push(acc / d0.clone());
    }
    Ok(h)
}

/// True iff `dims[n]` equals the series coefficient of `num/den` for
/// every `n < dims.len()`.
pub fn hilbert_matches_closed_form(dims: &[usize], num: &IntPoly, den: &IntPoly) -> Result<bool> {
    if dims.is_empty() {
        return Ok(true);
    }
    let h = expand_series(num, den, dims.len() - 1)?;
    Ok(dims
        .iter()
        .zip(h.iter())
        .all(|(&d, c)| &Scalar::from_int(d as i64) == c))
}

/// Closed form `1 / ((1-t)^2 (1-t^2))` shared by the whole down-up
/// family (and its cube-relation and symmetrized presentations).
pub fn down_up_closed_form() -> (IntPoly, IntPoly) {
    let one_t = IntPoly::one_minus_t_pow(1);
    let den = one_t.mul(&one_t).mul(&IntPoly::one_minus_t_pow(2));
    (IntPoly::one(), den)
}

/// Closed form `1 / (1 - k t)` of the free algebra on `k` weight-one
/// generators.
pub fn free_algebra_closed_form(k: i64) -> (IntPoly, IntPoly) {
    (IntPoly::one(), IntPoly::new(vec![1, -k]))
}

/// Closed form of a graded hypersurface: generators of the given
/// weights subject to one relation of the given degree,
/// `(1 - t^rel) / prod_i (1 - t^{w_i})`.
pub fn hypersurface_closed_form(weights: &[usize], relation_degree: usize) -> (IntPoly, IntPoly) {
    let num = IntPoly::one_minus_t_pow(relation_degree);
    let mut den = IntPoly::one();
    for &w in weights {
        den = den.mul(&IntPoly::one_minus_t_pow(w));
    }
    (num, den)
}
