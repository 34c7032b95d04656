//! Index tuples, the inversion statistic and the quantum determinants built
//! from them.
//!
//! All polynomials returned here are free-algebra elements; nothing is
//! reduced. The sign-and-power factor attached to a permutation `π` is
//! always `(-q)^(-ℓ(π))`.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::freealg::{Generator, NcPoly, Word};
use crate::laurent::LaurentPoly;

/// A tuple `(i_1, ..., i_k)` over the alphabet `1..=n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IndexTuple {
    entries: Vec<usize>,
    n: usize,
}

impl IndexTuple {
    pub fn new(entries: Vec<usize>, n: usize) -> Result<Self> {
        if let Some(&index) = entries.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::IndexOutOfRange { index, n });
        }
        Ok(Self { entries, n })
    }

    /// `(1, 2, ..., n)`.
    pub fn identity(n: usize) -> Self {
        Self {
            entries: (1..=n).collect(),
            n,
        }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn alphabet(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// True iff the tuple has length `n` and pairwise distinct entries.
    pub fn is_permutation(&self) -> bool {
        if self.entries.len() != self.n {
            return false;
        }
        let mut seen = alloc::vec![false; self.n + 1];
        self.entries.iter().all(|&i| !core::mem::replace(&mut seen[i], true))
    }

    /// The membership delta: 1 for permutations, 0 otherwise.
    pub fn membership_delta(&self) -> u8 {
        u8::from(self.is_permutation())
    }

    pub fn length_stat(&self) -> usize {
        length_stat(&self.entries)
    }

    /// Every tuple in `[n]^n`, lexicographically.
    pub fn all(n: usize) -> impl Iterator<Item = IndexTuple> {
        let total = n.checked_pow(n as u32).unwrap_or(0);
        (0..total).map(move |mut code| {
            let mut entries = alloc::vec![0; n];
            for slot in entries.iter_mut().rev() {
                *slot = code % n + 1;
                code /= n;
            }
            IndexTuple { entries, n }
        })
    }
}

impl core::fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("(")?;
        for (k, i) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str(")")
    }
}

/// Number of strict inversions `#{a < b : t_a > t_b}`; equal to the least
/// number of adjacent swaps that sort the tuple into non-decreasing order.
pub fn length_stat(t: &[usize]) -> usize {
    let mut count = 0;
    for (a, x) in t.iter().enumerate() {
        count += t[a + 1..].iter().filter(|y| x > y).count();
    }
    count
}

/// All permutations of `1..=m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut current: Vec<usize> = (1..=m).collect();
    let mut out = Vec::new();
    loop {
        out.push(current.clone());
        // next lexicographic permutation
        let Some(pivot) = (1..current.len()).rev().find(|&k| current[k - 1] < current[k]) else {
            break;
        };
        let pivot = pivot - 1;
        let swap = (pivot + 1..current.len())
            .rev()
            .find(|&k| current[k] > current[pivot])
            .expect("a larger element exists right of the pivot");
        current.swap(pivot, swap);
        current[pivot + 1..].reverse();
    }
    out
}

fn sign_factor(perm: &[usize]) -> LaurentPoly {
    LaurentPoly::neg_q_pow(-(length_stat(perm) as i64))
}

/// `D_I = Σ_π (-q)^(-ℓ(π)) X[π_1, i_1] ⋯ X[π_n, i_n]`.
pub fn build_di(n: usize, tuple: &IndexTuple) -> Result<NcPoly> {
    check_tuple(n, tuple)?;
    let mut out = NcPoly::zero();
    for perm in permutations(n) {
        let word = Word::new(
            perm.iter()
                .zip(tuple.entries())
                .map(|(&r, &c)| Generator::new(r, c))
                .collect(),
        );
        out.add_term(word, sign_factor(&perm));
    }
    Ok(out)
}

/// The quantum determinant `D = D_(1,...,n)`.
pub fn quantum_det(n: usize) -> NcPoly {
    build_di(n, &IndexTuple::identity(n)).expect("identity tuple is valid")
}

/// `E_I = D_I - δ (-q)^(-ℓ(I)) D`.
pub fn build_ei(n: usize, tuple: &IndexTuple) -> Result<NcPoly> {
    let mut out = build_di(n, tuple)?;
    if tuple.is_permutation() {
        let d = quantum_det(n);
        out.add_scaled(&d, &-sign_factor(tuple.entries()));
    }
    Ok(out)
}

fn check_tuple(n: usize, tuple: &IndexTuple) -> Result<()> {
    if tuple.len() != n {
        return Err(Error::TupleLength {
            expected: n,
            got: tuple.len(),
        });
    }
    if let Some(&index) = tuple.entries().iter().find(|&&i| i == 0 || i > n) {
        return Err(Error::IndexOutOfRange { index, n });
    }
    Ok(())
}

/// Quantum determinant of the submatrix of `X` on the given rows and columns:
/// `Σ_π (-q)^(-ℓ(π)) a[π_1, 1] ⋯ a[π_m, m]` with `a[r, c] = X[rows_r, cols_c]`.
pub fn det_q(rows: &[usize], cols: &[usize]) -> Result<NcPoly> {
    if rows.len() != cols.len() || rows.is_empty() {
        return Err(Error::MismatchedIndexSets {
            rows: rows.len(),
            cols: cols.len(),
        });
    }
    let increasing = |s: &[usize]| s.windows(2).all(|w| w[0] < w[1]);
    if !increasing(rows) || !increasing(cols) {
        return Err(Error::NotIncreasing);
    }
    if let Some(&index) = rows.iter().chain(cols).find(|&&i| i == 0) {
        return Err(Error::IndexOutOfRange {
            index,
            n: rows.len().max(cols.len()),
        });
    }
    let mut out = NcPoly::zero();
    for perm in permutations(rows.len()) {
        let word = Word::new(
            perm.iter()
                .zip(cols)
                .map(|(&p, &c)| Generator::new(rows[p - 1], c))
                .collect(),
        );
        out.add_term(word, sign_factor(&perm));
    }
    Ok(out)
}

/// Entry `(i, j)` of the quantum adjoint: `(-q)^(j-i) det_q(X^{ji})`, where
/// `X^{ji}` drops row `j` and column `i`.
pub fn adjoint_entry(n: usize, i: usize, j: usize) -> Result<NcPoly> {
    if n < 2 {
        return Err(Error::SizeTooSmall(n));
    }
    for index in [i, j] {
        if index == 0 || index > n {
            return Err(Error::IndexOutOfRange { index, n });
        }
    }
    let rows: Vec<usize> = (1..=n).filter(|&r| r != j).collect();
    let cols: Vec<usize> = (1..=n).filter(|&c| c != i).collect();
    let det = det_q(&rows, &cols)?;
    Ok(det.scale(&LaurentPoly::neg_q_pow(j as i64 - i as i64)))
}
