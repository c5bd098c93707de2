//! Exact spectral computations on graphs.
//!
//! Characteristic polynomials come from Bareiss determinants of `xI - M` at
//! the integer points `0..=n`, recombined by Newton interpolation. No
//! floating point is used anywhere; integer eigenvalues are peeled off by
//! synthetic division.

mod matrix;
mod poly;
mod spectrum;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::exec::Exec;
use crate::graph::{distances, Graph};

pub use matrix::{distance_laplacian, distance_matrix, laplacian, IntMatrix};
pub use poly::IntPolynomial;
pub use spectrum::Spectrum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("graph is disconnected: vertices {u} and {v} lie in different components")]
    Disconnected { u: usize, v: usize },
    #[error("spectrum is not fully factored over the integers (residual {0})")]
    NotFullyFactored(IntPolynomial),
    #[error("eigenvalue 0 has multiplicity {found}, expected exactly 1")]
    ZeroMultiplicity { found: usize },
    #[error("spectrum has no zero eigenvalue")]
    MissingZero,
    #[error("eigenvalue product {product} is not divisible by n = {n}")]
    NotDivisible { product: BigUint, n: usize },
    #[error("Laplacian spectrum contains negative eigenvalue {0}")]
    NegativeEigenvalue(i64),
    #[error("eigenvalue sum {sum} differs from matrix trace {trace}")]
    TraceMismatch { sum: BigInt, trace: BigInt },
}

/// `det(xI - m)`, monic of degree `m.dim()`.
pub fn char_poly(m: &IntMatrix) -> IntPolynomial {
    char_poly_with(m, Exec::default())
}

/// [`char_poly`] with an explicit execution strategy for the per-point
/// determinants.
pub fn char_poly_with(m: &IntMatrix, exec: Exec) -> IntPolynomial {
    let points: Vec<i64> = (0..=m.dim() as i64).collect();
    let values = exec.map(&points, |&x| m.shifted(x).determinant());
    poly::interpolate_consecutive(&values)
}

/// Peels every integer root in `[0, root_bound]` off `p` by repeated exact
/// synthetic division. Whatever is left becomes the residual.
pub fn integer_spectrum(p: &IntPolynomial, root_bound: i64) -> Spectrum {
    let mut rest = p.clone();
    let mut pairs = Vec::new();
    for r in 0..=root_bound.max(-1) {
        if rest.degree() == 0 {
            break;
        }
        let root = BigInt::from(r);
        let mut mult = 0;
        loop {
            let (q, rem) = rest.div_linear(&root);
            if !rem.is_zero() || rest.degree() == 0 {
                break;
            }
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            pairs.push((r, mult));
        }
    }
    Spectrum::from_pairs(pairs).with_residual(rest)
}

/// Characteristic polynomial of `m` factored over `[0, root_bound]`, with
/// the trace identity checked.
pub fn matrix_spectrum(
    m: &IntMatrix,
    root_bound: i64,
    exec: Exec,
) -> Result<Spectrum, SpectralError> {
    let s = integer_spectrum(&char_poly_with(m, exec), root_bound);
    let trace = m.trace();
    let sum = s.eigenvalue_sum();
    if sum != trace {
        return Err(SpectralError::TraceMismatch { sum, trace });
    }
    Ok(s)
}

/// Laplacian spectrum. Eigenvalues of `L` lie in `[0, n]`.
pub fn laplacian_spectrum(g: &Graph, exec: Exec) -> Result<Spectrum, SpectralError> {
    matrix_spectrum(&laplacian(g), g.vertex_count() as i64, exec)
}

/// Distance-Laplacian spectrum of a connected graph, computed directly from
/// `Tr - D`. The root search covers `[0, 2n]` for diameter at most 2 and the
/// Gershgorin bound otherwise.
pub fn distance_laplacian_spectrum(g: &Graph, exec: Exec) -> Result<Spectrum, SpectralError> {
    let m = distance_laplacian(g)?;
    let n = g.vertex_count() as i64;
    let bound = if distances(g).max_finite() <= 2 {
        2 * n
    } else {
        matrix::gershgorin_bound(&m)
            .to_i64()
            .unwrap_or(i64::MAX - 1)
    };
    matrix_spectrum(&m, bound, exec)
}

/// Number of spanning trees: the determinant of the Laplacian with row and
/// column 0 removed.
pub fn spanning_tree_count(g: &Graph) -> BigUint {
    let reduced = laplacian(g).minor(0);
    reduced
        .determinant()
        .to_biguint()
        .expect("reduced Laplacian determinant is non-negative")
}

/// Spanning trees from a Laplacian spectrum: the product of all eigenvalues
/// but one zero, divided by `n`.
pub fn spanning_tree_count_from_spectrum(s: &Spectrum, n: usize) -> Result<BigUint, SpectralError> {
    if let Some(r) = s.residual() {
        return Err(SpectralError::NotFullyFactored(r.clone()));
    }
    if s.multiplicity(0) == 0 {
        return Err(SpectralError::MissingZero);
    }
    let mut skipped_zero = false;
    let mut product = BigUint::one();
    for v in s.values() {
        if v == 0 && !skipped_zero {
            skipped_zero = true;
            continue;
        }
        if v < 0 {
            return Err(SpectralError::NegativeEigenvalue(v));
        }
        product *= BigUint::from(v as u64);
    }
    let (q, r) = product.div_rem(&BigUint::from(n));
    if !r.is_zero() {
        return Err(SpectralError::NotDivisible { product, n });
    }
    Ok(q)
}

/// Maps a Laplacian spectrum of a connected diameter-at-most-2 graph to its
/// distance-Laplacian spectrum: each nonzero `λ` becomes `2n - λ`, the single
/// zero stays.
pub fn dl_spectrum_via_transfer(
    laplacian_spectrum: &Spectrum,
    n: usize,
) -> Result<Spectrum, SpectralError> {
    if let Some(r) = laplacian_spectrum.residual() {
        return Err(SpectralError::NotFullyFactored(r.clone()));
    }
    let zeros = laplacian_spectrum.multiplicity(0);
    if zeros != 1 {
        return Err(SpectralError::ZeroMultiplicity { found: zeros });
    }
    let two_n = 2 * n as i64;
    Ok(Spectrum::from_pairs(laplacian_spectrum.pairs().iter().map(
        |&(v, m)| if v == 0 { (0, m) } else { (two_n - v, m) },
    )))
}

/// The transfer at the level of characteristic polynomials, for spectra that
/// do not factor over the integers. Writing `p(x) = x q(x)` for the Laplacian
/// polynomial, the result is `(-1)^(n-1) x q(2n - x)`.
pub fn dl_char_poly_via_transfer(laplacian_poly: &IntPolynomial) -> IntPolynomial {
    let n = laplacian_poly.degree();
    let (q, _) = laplacian_poly.div_linear(&BigInt::zero());
    let two_n = BigInt::from(2 * n);
    let sign = if n % 2 == 1 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let values: Vec<BigInt> = (0..=n)
        .map(|x| {
            let x = BigInt::from(x);
            &sign * &x * q.eval(&(&two_n - &x))
        })
        .collect();
    poly::interpolate_consecutive(&values)
}
