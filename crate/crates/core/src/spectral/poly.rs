use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A polynomial with arbitrary-precision integer coefficients, stored in
/// ascending degree order with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().copied().map(BigInt::from).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// `x - root`.
    pub fn linear(root: &BigInt) -> Self {
        Self::new(vec![-root, BigInt::one()])
    }

    /// `prod (x - r)^m` over `(r, m)`.
    pub fn from_roots<I>(roots: I) -> Self
    where
        I: IntoIterator<Item = (i64, usize)>,
    {
        let mut p = Self::one();
        for (r, m) in roots {
            let factor = Self::linear(&BigInt::from(r));
            for _ in 0..m {
                p = &p * &factor;
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Synthetic division by `x - root`: returns quotient and remainder.
    pub fn div_linear(&self, root: &BigInt) -> (IntPolynomial, BigInt) {
        if self.coeffs.is_empty() {
            return (Self::zero(), BigInt::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut quotient = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for k in (0..=d).rev() {
            let value = &self.coeffs[k] + &carry * root;
            if k == 0 {
                return (Self::new(quotient), value);
            }
            quotient[k - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Sum of the roots (with multiplicity) of a monic polynomial: minus
    /// the sub-leading coefficient. `None` when not monic.
    pub fn monic_root_sum(&self) -> Option<BigInt> {
        if !self.is_monic() {
            return None;
        }
        let d = self.degree();
        Some(if d == 0 {
            BigInt::zero()
        } else {
            -self.coeff(d - 1)
        })
    }

    /// Multiplies by `(-1)^degree`, turning `det(M - xI)` into `det(xI - M)`
    /// and back.
    pub fn flip_sign_by_parity(&self) -> Self {
        if self.degree().is_multiple_of(2) {
            self.clone()
        } else {
            Self::new(self.coeffs.iter().map(|c| -c).collect())
        }
    }
}

impl std::ops::Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            if k == 0 || !magnitude.is_one() {
                write!(f, "{magnitude}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Newton interpolation through `(0, values[0]), (1, values[1]), ...` for a
/// polynomial known to have integer coefficients. Every division is exact.
pub(crate) fn interpolate_consecutive(values: &[BigInt]) -> IntPolynomial {
    let n = values.len();
    // Forward differences at 0, divided by k! to get falling-factorial
    // coefficients.
    let mut diffs = values.to_vec();
    let mut newton = Vec::with_capacity(n);
    let mut factorial = BigInt::one();
    for k in 0..n {
        if k > 0 {
            factorial *= k;
        }
        let (q, r) = diffs[0].div_rem(&factorial);
        debug_assert!(r.is_zero(), "non-integer falling factorial coefficient");
        newton.push(q);
        for i in 0..diffs.len() - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
    }
    // p = c_{n-1}; p = p * (x - k) + c_k for k descending.
    let mut coeffs: Vec<BigInt> = Vec::with_capacity(n);
    for k in (0..n).rev() {
        // coeffs *= (x - k)
        coeffs.insert(0, BigInt::zero());
        for i in 0..coeffs.len() - 1 {
            let t = &coeffs[i + 1] * k;
            coeffs[i] -= t;
        }
        coeffs[0] += &newton[k];
    }
    IntPolynomial::new(coeffs)
}
