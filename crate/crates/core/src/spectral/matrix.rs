use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::graph::{distances, Graph};

use super::SpectralError;

/// Square matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_fn<F>(n: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> BigInt,
    {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        IntMatrix { n, entries }
    }

    /// Panics unless `rows` is square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self::from_fn(n, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn rows_sum_to_zero(&self) -> bool {
        (0..self.n).all(|i| self.row(i).iter().sum::<BigInt>().is_zero())
    }

    /// Drops row `k` and column `k`.
    pub fn minor(&self, k: usize) -> IntMatrix {
        let idx: Vec<usize> = (0..self.n).filter(|&i| i != k).collect();
        IntMatrix::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    /// `x I - self` evaluated at an integer point.
    pub(crate) fn shifted(&self, x: i64) -> IntMatrix {
        let x = BigInt::from(x);
        IntMatrix::from_fn(self.n, |i, j| {
            let e = -self.get(i, j);
            if i == j {
                e + &x
            } else {
                e
            }
        })
    }

    /// Exact determinant by Bareiss fraction-free elimination. Runs in
    /// `i128` while intermediates fit and restarts in big integers on
    /// overflow.
    pub fn determinant(&self) -> BigInt {
        if let Some(small) = self.small_entries() {
            if let Some(d) = bareiss_i128(small, self.n) {
                return BigInt::from(d);
            }
        }
        bareiss_big(self.entries.clone(), self.n)
    }

    fn small_entries(&self) -> Option<Vec<i128>> {
        self.entries.iter().map(ToPrimitive::to_i128).collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.n)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        f.debug_list().entries(rows).finish()
    }
}

fn bareiss_i128(mut a: Vec<i128>, n: usize) -> Option<i128> {
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k * n + k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i * n + k] != 0) else {
                return Some(0);
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            sign = -sign;
        }
        let pivot = a[k * n + k];
        for i in k + 1..n {
            let lead = a[i * n + k];
            for j in k + 1..n {
                let t = a[i * n + j]
                    .checked_mul(pivot)?
                    .checked_sub(lead.checked_mul(a[k * n + j])?)?;
                a[i * n + j] = t / prev;
            }
        }
        prev = pivot;
    }
    sign.checked_mul(a[n * n - 1])
}

fn bareiss_big(mut a: Vec<BigInt>, n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut((k + 1) * n);
        let pivot_row = &top[k * n..];
        let pivot = &pivot_row[k];
        for i in 0..n - k - 1 {
            let row = &mut rest[i * n..(i + 1) * n];
            let lead = row[k].clone();
            for j in k + 1..n {
                let mut t = &row[j] * pivot;
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    t -= &lead * &pivot_row[j];
                }
                if !prev.is_one() {
                    t /= &prev;
                }
                row[j] = t;
            }
        }
        prev = pivot.clone();
    }
    let d = a[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `D - A`.
pub fn laplacian(g: &Graph) -> IntMatrix {
    IntMatrix::from_fn(g.vertex_count(), |i, j| {
        if i == j {
            BigInt::from(g.degree(i))
        } else if g.has_edge(i, j) {
            -BigInt::one()
        } else {
            BigInt::zero()
        }
    })
}

/// The hop-distance matrix. Fails on a disconnected graph.
pub fn distance_matrix(g: &Graph) -> Result<IntMatrix, SpectralError> {
    let table = distances(g);
    if let Some((u, v)) = table.separated_pair() {
        return Err(SpectralError::Disconnected { u, v });
    }
    Ok(IntMatrix::from_fn(g.vertex_count(), |i, j| {
        BigInt::from(table.get(i, j).finite().expect("connected"))
    }))
}

/// `Tr - D`, the transmission diagonal minus the distance matrix.
pub fn distance_laplacian(g: &Graph) -> Result<IntMatrix, SpectralError> {
    let d = distance_matrix(g)?;
    let n = d.dim();
    let transmissions: Vec<BigInt> = (0..n).map(|i| d.row(i).iter().sum()).collect();
    Ok(IntMatrix::from_fn(n, |i, j| {
        if i == j {
            transmissions[i].clone()
        } else {
            -d.get(i, j)
        }
    }))
}

/// Gershgorin bound on the largest eigenvalue magnitude.
pub(crate) fn gershgorin_bound(m: &IntMatrix) -> BigInt {
    (0..m.dim())
        .map(|i| m.row(i).iter().map(|e| e.abs()).sum::<BigInt>())
        .max()
        .unwrap_or_default()
}
