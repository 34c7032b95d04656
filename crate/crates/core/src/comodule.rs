//! The algebra `Λ~_q(n)` on generators `z_1, ..., z_n` and its right
//! coaction `ρ(z_i) = Σ_j z_j ⊗ X[j,i]`.
//!
//! The defining relations say every degree-`n` monomial `z_I` equals
//! `(-q)^(-ℓ(I)) z_1 ⋯ z_n` when `I` is a permutation and `0` otherwise.
//! Words of degree above `n` are reduced window by window; they collapse to
//! zero, though no basis theorem is claimed in those degrees.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::freealg::{coproduct_word, counit_word, Generator, Word};
use crate::laurent::{render_combination, LaurentPoly};
use crate::lincomb::LinComb;
use crate::qcomb::{length_stat, quantum_det, IndexTuple};
use crate::report::{CheckItem, Report};
use crate::rewrite::{normal_form, Reducer, RewriteSystem};

/// A monomial `z_{i_1} ⋯ z_{i_k}`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct ZWord(Vec<usize>);

impl ZWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn concat(&self, other: &ZWord) -> ZWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        ZWord(letters)
    }
}

impl Ord for ZWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ZWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ZWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "z{i}")?;
        }
        Ok(())
    }
}

pub type LambdaPoly = LinComb<ZWord>;
pub type LambdaTensor = LinComb<(ZWord, Word)>;
pub type LambdaTriple = LinComb<(ZWord, Word, Word)>;

impl fmt::Display for LinComb<ZWord> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .iter()
            .rev()
            .map(|(z, c)| (c.clone(), (z.degree() > 0).then(|| z.to_string())));
        f.write_str(&render_combination(terms, false))
    }
}

fn x_factor(w: &Word) -> String {
    if w.is_empty() {
        return String::from("1");
    }
    let parts: Vec<String> = w.letters().iter().map(|g| g.to_string()).collect();
    parts.join("*")
}

impl fmt::Display for LinComb<(ZWord, Word)> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .iter()
            .rev()
            .map(|((z, w), c)| (c.clone(), Some(format!("({z} ⊗ {})", x_factor(w)))));
        f.write_str(&render_combination(terms, false))
    }
}

impl fmt::Display for LinComb<(ZWord, Word, Word)> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.iter().rev().map(|((z, u, v), c)| {
            (c.clone(), Some(format!("({z} ⊗ {} ⊗ {})", x_factor(u), x_factor(v))))
        });
        f.write_str(&render_combination(terms, false))
    }
}

/// Which length-`n` window is rewritten first in words of degree above `n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WindowOrder {
    Leftmost,
    Rightmost,
}

/// Reduces one monomial to `c * z` or zero.
fn reduce_zword(z: &ZWord, n: usize, order: WindowOrder) -> Option<(LaurentPoly, ZWord)> {
    let mut letters = z.0.clone();
    let mut coeff = LaurentPoly::one();
    if letters.len() < n {
        return Some((coeff, ZWord(letters)));
    }
    let identity: Vec<usize> = (1..=n).collect();
    loop {
        let mut positions = 0..=letters.len() - n;
        let pick = |pos: &usize| letters[*pos..*pos + n] != identity[..];
        let found = match order {
            WindowOrder::Leftmost => positions.find(pick),
            WindowOrder::Rightmost => positions.rev().find(pick),
        };
        let Some(pos) = found else {
            return Some((coeff, ZWord(letters)));
        };
        let window = IndexTuple::new(letters[pos..pos + n].to_vec(), n).ok()?;
        if !window.is_permutation() {
            return None;
        }
        coeff *= &LaurentPoly::neg_q_pow(-(window.length_stat() as i64));
        letters[pos..pos + n].copy_from_slice(&identity);
    }
}

pub fn lambda_normal_form(p: &LambdaPoly, n: usize) -> LambdaPoly {
    lambda_normal_form_with(p, n, WindowOrder::Leftmost)
}

pub fn lambda_normal_form_with(p: &LambdaPoly, n: usize, order: WindowOrder) -> LambdaPoly {
    let mut out = LambdaPoly::zero();
    for (z, c) in p.iter() {
        if let Some((d, reduced)) = reduce_zword(z, n, order) {
            out.add_term(reduced, c * &d);
        }
    }
    out
}

/// `ρ(z_I)` with the left factors normalized and the right factors left
/// in the free algebra.
pub fn rho_word_raw(z: &ZWord, n: usize) -> Result<LambdaTensor> {
    if z.degree() > n {
        return Err(Error::UnsupportedDegree {
            degree: z.degree(),
            n,
        });
    }
    if let Some(&index) = z.letters().iter().find(|&&i| i == 0 || i > n) {
        return Err(Error::IndexOutOfRange { index, n });
    }
    let mut out = LambdaTensor::zero();
    let k = z.degree();
    let total = n.pow(k as u32);
    for mut code in 0..total {
        let mut middle = alloc::vec![0; k];
        for slot in middle.iter_mut().rev() {
            *slot = code % n + 1;
            code /= n;
        }
        let Some((c, left)) = reduce_zword(&ZWord(middle.clone()), n, WindowOrder::Leftmost) else {
            continue;
        };
        let right = Word::new(
            middle
                .iter()
                .zip(z.letters())
                .map(|(&j, &i)| Generator::new(j, i))
                .collect(),
        );
        out.add_term((left, right), c);
    }
    Ok(out)
}

/// `ρ(z_I)` with both factors in normal form.
pub fn rho_word(z: &ZWord, rs: &RewriteSystem) -> Result<LambdaTensor> {
    let raw = rho_word_raw(z, rs.n())?;
    Ok(reduce_right(&raw, &mut Reducer::new(rs)))
}

fn reduce_right(t: &LambdaTensor, reducer: &mut Reducer<'_>) -> LambdaTensor {
    let mut out = LambdaTensor::zero();
    for ((z, w), c) in t.iter() {
        for (v, d) in reducer.word(w).iter() {
            out.add_term((z.clone(), v.clone()), c * d);
        }
    }
    out
}

/// Factor-wise product, with both factors normalized.
pub fn lambda_tensor_mul(a: &LambdaTensor, b: &LambdaTensor, rs: &RewriteSystem) -> LambdaTensor {
    let n = rs.n();
    let mut raw = LambdaTensor::zero();
    for ((z1, w1), c1) in a.iter() {
        for ((z2, w2), c2) in b.iter() {
            if let Some((d, z)) = reduce_zword(&z1.concat(z2), n, WindowOrder::Leftmost) {
                raw.add_term((z, w1.concat(w2)), &(c1 * c2) * &d);
            }
        }
    }
    reduce_right(&raw, &mut Reducer::new(rs))
}

/// Checks `ρ(z_I) = δ (-q)^(-ℓ(I)) z_1⋯z_n ⊗ D` for every `I ∈ [n]^n`,
/// with `D` replaced by its normal form.
pub fn check_comodule_relations(rs: &RewriteSystem) -> Result<Report> {
    let n = rs.n();
    let mut report = Report::new("comodule", n, rs.mode());
    let det = normal_form(&quantum_det(n), rs);
    let top = ZWord::identity(n);
    for tuple in IndexTuple::all(n) {
        let z = ZWord::new(tuple.entries().to_vec());
        let got = rho_word(&z, rs)?;
        let mut expected = LambdaTensor::zero();
        if tuple.is_permutation() {
            let c = LaurentPoly::neg_q_pow(-(length_stat(tuple.entries()) as i64));
            for (w, d) in det.iter() {
                expected.add_term((top.clone(), w.clone()), &c * d);
            }
        }
        report.push(CheckItem::new(
            format!("ρ({z})"),
            expected.to_string(),
            got.to_string(),
        ));
    }
    Ok(report)
}

/// Coaction axioms `(ρ ⊗ I)ρ = (I ⊗ Δ)ρ` and `(I ⊗ ε)ρ = I` on every
/// monomial of degree 1 and 2.
pub fn check_comodule_axioms(rs: &RewriteSystem) -> Result<Report> {
    let n = rs.n();
    let mut report = Report::new("comodule-axioms", n, rs.mode());
    let mut reducer = Reducer::new(rs);
    let mut monomials: Vec<ZWord> = (1..=n).map(|i| ZWord::new(alloc::vec![i])).collect();
    for i in 1..=n {
        for j in 1..=n {
            monomials.push(ZWord::new(alloc::vec![i, j]));
        }
    }
    for z in monomials.iter().filter(|z| z.degree() <= n) {
        let rho = rho_word(z, rs)?;

        let mut left = LambdaTriple::zero();
        for ((zw, x), c) in rho.iter() {
            for ((zz, y), d) in rho_word(zw, rs)?.iter() {
                for (xr, e) in reducer.word(x).iter() {
                    left.add_term((zz.clone(), y.clone(), xr.clone()), &(c * d) * e);
                }
            }
        }
        let mut right = LambdaTriple::zero();
        for ((zw, x), c) in rho.iter() {
            for ((a, b), d) in coproduct_word(x, n).iter() {
                for (ar, e1) in reducer.word(a).iter() {
                    for (br, e2) in reducer.word(b).iter() {
                        let coeff = &(&(c * d) * e1) * e2;
                        right.add_term((zw.clone(), ar.clone(), br.clone()), coeff);
                    }
                }
            }
        }
        report.push(CheckItem::new(
            format!("(ρ⊗I)ρ({z}) = (I⊗Δ)ρ({z})"),
            right.to_string(),
            left.to_string(),
        ));

        let mut counit_side = LambdaPoly::zero();
        for ((zw, x), c) in rho.iter() {
            counit_side.add_term(zw.clone(), c * &counit_word(x));
        }
        let expected = lambda_normal_form(&LambdaPoly::basis(z.clone()), n);
        report.push(CheckItem::new(
            format!("(I⊗ε)ρ({z})"),
            expected.to_string(),
            counit_side.to_string(),
        ));
    }
    Ok(report)
}
