use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::IntPolynomial;

/// Integer eigenvalues with multiplicities, sorted by eigenvalue descending,
/// plus whatever part of the characteristic polynomial did not split into
/// integer linear factors.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Spectrum {
    pairs: Vec<(i64, usize)>,
    residual: Option<IntPolynomial>,
}

impl Spectrum {
    /// Builds a fully factored spectrum from `(eigenvalue, multiplicity)`
    /// pairs. Repeated eigenvalues merge and zero multiplicities vanish.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, usize)>,
    {
        let mut merged: BTreeMap<i64, usize> = BTreeMap::new();
        for (value, mult) in pairs {
            if mult > 0 {
                *merged.entry(value).or_default() += mult;
            }
        }
        Spectrum {
            pairs: merged.into_iter().rev().collect(),
            residual: None,
        }
    }

    pub(crate) fn with_residual(mut self, residual: IntPolynomial) -> Self {
        self.residual = (residual.degree() > 0).then_some(residual);
        self
    }

    pub fn pairs(&self) -> &[(i64, usize)] {
        &self.pairs
    }

    pub fn residual(&self) -> Option<&IntPolynomial> {
        self.residual.as_ref()
    }

    pub fn is_fully_factored(&self) -> bool {
        self.residual.is_none()
    }

    pub fn multiplicity(&self, value: i64) -> usize {
        self.pairs
            .iter()
            .find(|(v, _)| *v == value)
            .map_or(0, |(_, m)| *m)
    }

    /// Number of eigenvalues accounted for, residual roots included.
    pub fn len(&self) -> usize {
        self.pairs.iter().map(|(_, m)| m).sum::<usize>()
            + self.residual.as_ref().map_or(0, IntPolynomial::degree)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every integer eigenvalue repeated by multiplicity, descending.
    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.pairs
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
    }

    /// Sum of all eigenvalues with multiplicity, including the roots of the
    /// residual. Equals the trace of the source matrix.
    pub fn eigenvalue_sum(&self) -> BigInt {
        let listed: BigInt = self.pairs.iter().map(|&(v, m)| BigInt::from(v) * m).sum();
        let rest = self
            .residual
            .as_ref()
            .and_then(IntPolynomial::monic_root_sum)
            .unwrap_or_else(BigInt::zero);
        listed + rest
    }
}

impl fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spectrum({self})")
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (v, m)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}^{m}")?;
        }
        if let Some(r) = &self.residual {
            write!(f, "; residual {r}")?;
        }
        f.write_str("}")
    }
}
