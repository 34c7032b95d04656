//! The free matrix bialgebra on the `n^2` comatrix generators `X[i,j]`.
//!
//! Words are ordered by length first and then lexicographically on letters,
//! with letters ordered by `(row, col)`. This order is a well-order compatible
//! with concatenation, which is what makes the reduction systems terminate.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Mul;

use rand::{Rng, RngExt};

use crate::laurent::{render_combination, LaurentPoly};
use crate::lincomb::LinComb;
use crate::rewrite::RewriteSystem;

/// The comatrix generator `X[row,col]`, indices starting at 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Generator {
    pub row: usize,
    pub col: usize,
}

impl Generator {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }

    /// All `n^2` generators in ascending order.
    pub fn all(n: usize) -> impl Iterator<Item = Generator> {
        (1..=n).flat_map(move |i| (1..=n).map(move |j| Generator::new(i, j)))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X[{},{}]", self.row, self.col)
    }
}

/// A monomial in the generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn new(letters: Vec<Generator>) -> Self {
        Self(letters)
    }

    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Self {
        Self(pairs.iter().map(|&(i, j)| Generator::new(i, j)).collect())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    pub fn rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|g| g.row)
    }

    /// Largest index used by any letter.
    pub fn max_index(&self) -> usize {
        self.0.iter().map(|g| g.row.max(g.col)).max().unwrap_or(0)
    }

    /// `w[..pos] ++ middle ++ w[pos + width..]`.
    pub fn splice(&self, pos: usize, width: usize, middle: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() - width + middle.len());
        letters.extend_from_slice(&self.0[..pos]);
        letters.extend_from_slice(&middle.0);
        letters.extend_from_slice(&self.0[pos + width..]);
        Word(letters)
    }

    pub fn to_latex(&self) -> String {
        if self.is_empty() {
            return String::from("1");
        }
        let mut out = String::new();
        for g in &self.0 {
            use core::fmt::Write;
            if g.row < 10 && g.col < 10 {
                let _ = write!(out, "X_{{{}{}}}", g.row, g.col);
            } else {
                let _ = write!(out, "X_{{{},{}}}", g.row, g.col);
            }
        }
        out
    }
}

/// Length first, then lexicographic.
pub fn word_cmp(u: &Word, v: &Word) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.0.cmp(&v.0))
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        word_cmp(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Generator> for Word {
    fn from(g: Generator) -> Self {
        Word(vec![g])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// An element of the free algebra `Z[q,q^-1]<X>`.
pub type NcPoly = LinComb<Word>;

/// An element of the tensor square of the free algebra.
pub type TensorPoly = LinComb<(Word, Word)>;

/// An element of the tensor cube of the free algebra.
pub type Tensor3 = LinComb<(Word, Word, Word)>;

impl LinComb<Word> {
    pub fn one() -> Self {
        Self::basis(Word::unit())
    }

    pub fn constant(c: LaurentPoly) -> Self {
        Self::term(Word::unit(), c)
    }

    pub fn generator(i: usize, j: usize) -> Self {
        Self::basis(Word::from(Generator::new(i, j)))
    }

    pub fn word(w: Word) -> Self {
        Self::basis(w)
    }

    pub fn is_one(&self) -> bool {
        self.len() == 1 && self.coeff(&Word::unit()).is_some_and(LaurentPoly::is_one)
    }

    /// Largest word length present, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.leading().map(|(w, _)| w.len())
    }

    /// Coefficient of the unit word.
    pub fn constant_term(&self) -> LaurentPoly {
        self.coeff(&Word::unit()).cloned().unwrap_or_default()
    }

    /// The counit extended linearly.
    pub fn counit(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (w, c) in self.iter() {
            if counit_word(w).is_one() {
                out += c;
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn to_latex(&self) -> String {
        render_combination(
            self.iter()
                .rev()
                .map(|(w, c)| (c.clone(), (!w.is_empty()).then(|| w.to_latex()))),
            true,
        )
    }
}

/// Text form of a word inside a polynomial: letters joined by `*`.
pub(crate) fn word_factor(w: &Word) -> Option<String> {
    if w.is_empty() {
        return None;
    }
    let mut out = String::new();
    for (k, g) in w.letters().iter().enumerate() {
        if k > 0 {
            out.push('*');
        }
        out.push_str(&format!("{g}"));
    }
    Some(out)
}

impl fmt::Display for LinComb<Word> {
    /// Terms in descending word order, e.g. `q*X[1,2]*X[2,1] + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.iter().rev().map(|(w, c)| (c.clone(), word_factor(w)));
        f.write_str(&render_combination(terms, false))
    }
}

impl Mul<&LinComb<Word>> for &LinComb<Word> {
    type Output = LinComb<Word>;
    fn mul(self, rhs: &LinComb<Word>) -> LinComb<Word> {
        let mut out = LinComb::zero();
        for (u, a) in self.iter() {
            for (v, b) in rhs.iter() {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

/// `ε` on a word: the product of `δ(row, col)` over its letters.
pub fn counit_word(w: &Word) -> LaurentPoly {
    if w.letters().iter().all(|g| g.row == g.col) {
        LaurentPoly::one()
    } else {
        LaurentPoly::zero()
    }
}

/// `Δ` on a word, unreduced: the sum over all middle-index sequences.
pub fn coproduct_word(w: &Word, n: usize) -> TensorPoly {
    let mut pairs: Vec<(Word, Word)> = vec![(Word::unit(), Word::unit())];
    for g in w.letters() {
        let mut next = Vec::with_capacity(pairs.len() * n);
        for (left, right) in &pairs {
            for j in 1..=n {
                let mut l = left.clone();
                l.push(Generator::new(g.row, j));
                let mut r = right.clone();
                r.push(Generator::new(j, g.col));
                next.push((l, r));
            }
        }
        pairs = next;
    }
    pairs.into_iter().map(|p| (p, LaurentPoly::one())).collect()
}

/// `Δ` extended linearly.
pub fn coproduct(p: &NcPoly, n: usize) -> TensorPoly {
    p.map_linear(|w| coproduct_word(w, n))
}

impl LinComb<(Word, Word)> {
    /// `a ⊗ b` for polynomials.
    pub fn tensor(a: &NcPoly, b: &NcPoly) -> Self {
        let mut out = Self::zero();
        for (u, x) in a.iter() {
            for (v, y) in b.iter() {
                out.add_term((u.clone(), v.clone()), x * y);
            }
        }
        out
    }

    pub fn one() -> Self {
        Self::basis((Word::unit(), Word::unit()))
    }

    /// Applies `f ⊗ g` where both maps are given on words.
    pub fn map_factors(
        &self,
        mut f: impl FnMut(&Word) -> NcPoly,
        mut g: impl FnMut(&Word) -> NcPoly,
    ) -> Self {
        let mut left_cache: BTreeMap<Word, NcPoly> = BTreeMap::new();
        let mut right_cache: BTreeMap<Word, NcPoly> = BTreeMap::new();
        let mut out = Self::zero();
        for ((u, v), c) in self.iter() {
            let fu = left_cache.entry(u.clone()).or_insert_with(|| f(u)).clone();
            let gv = right_cache.entry(v.clone()).or_insert_with(|| g(v));
            for (a, x) in fu.iter() {
                for (b, y) in gv.iter() {
                    out.add_term((a.clone(), b.clone()), &(x * y) * c);
                }
            }
        }
        out
    }

    /// The flip `u ⊗ v -> v ⊗ u`.
    pub fn swap(&self) -> Self {
        self.iter()
            .map(|((u, v), c)| ((v.clone(), u.clone()), c.clone()))
            .collect()
    }

    /// Multiplication `m(u ⊗ v) = uv`.
    pub fn multiply(&self) -> NcPoly {
        self.iter()
            .map(|((u, v), c)| (u.concat(v), c.clone()))
            .collect()
    }
}

impl Mul<&LinComb<(Word, Word)>> for &LinComb<(Word, Word)> {
    type Output = LinComb<(Word, Word)>;
    /// Factor-wise product in the tensor-square algebra.
    fn mul(self, rhs: &LinComb<(Word, Word)>) -> LinComb<(Word, Word)> {
        let mut out = LinComb::zero();
        for ((a, b), x) in self.iter() {
            for ((c, d), y) in rhs.iter() {
                out.add_term((a.concat(c), b.concat(d)), x * y);
            }
        }
        out
    }
}

impl fmt::Display for LinComb<(Word, Word)> {
    /// `c*(u ⊗ v) + ...` in descending order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.iter().rev().map(|((u, v), c)| {
            let key = format!("({} ⊗ {})", factor_or_one(u), factor_or_one(v));
            (c.clone(), Some(key))
        });
        f.write_str(&render_combination(terms, false))
    }
}

fn factor_or_one(w: &Word) -> String {
    word_factor(w).unwrap_or_else(|| String::from("1"))
}

/// `(Δ ⊗ I)Δ(w)` flattened to triples.
pub fn coproduct_left_twice(w: &Word, n: usize) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((u, v), c) in coproduct_word(w, n).iter() {
        for ((a, b), d) in coproduct_word(u, n).iter() {
            out.add_term((a.clone(), b.clone(), v.clone()), c * d);
        }
    }
    out
}

/// `(I ⊗ Δ)Δ(w)` flattened to triples.
pub fn coproduct_right_twice(w: &Word, n: usize) -> Tensor3 {
    let mut out = Tensor3::zero();
    for ((u, v), c) in coproduct_word(w, n).iter() {
        for ((a, b), d) in coproduct_word(v, n).iter() {
            out.add_term((u.clone(), a.clone(), b.clone()), c * d);
        }
    }
    out
}

/// All words of exactly `degree` letters with no reducible subword, ascending.
pub fn enumerate_irreducible(n: usize, degree: usize, rs: &RewriteSystem) -> Vec<Word> {
    let mut layer = vec![Word::unit()];
    for _ in 0..degree {
        let mut next = Vec::with_capacity(layer.len() * n * n);
        for w in &layer {
            for g in Generator::all(n) {
                let mut ext = w.clone();
                ext.push(g);
                if !rs.has_reducible_suffix(&ext) {
                    next.push(ext);
                }
            }
        }
        layer = next;
    }
    layer
}

/// All irreducible words of degree at most `max_degree`, ascending.
pub fn enumerate_irreducible_upto(n: usize, max_degree: usize, rs: &RewriteSystem) -> Vec<Word> {
    (0..=max_degree)
        .flat_map(|d| enumerate_irreducible(n, d, rs))
        .collect()
}

/// A uniformly grown random irreducible word: each letter is drawn from the
/// generators that keep the prefix irreducible.
pub fn random_irreducible_word<R: Rng + ?Sized>(
    rng: &mut R,
    rs: &RewriteSystem,
    degree: usize,
) -> Word {
    let n = rs.n();
    let mut w = Word::unit();
    for _ in 0..degree {
        let choices: Vec<Generator> = Generator::all(n)
            .filter(|&g| {
                let mut ext = w.clone();
                ext.push(g);
                !rs.has_reducible_suffix(&ext)
            })
            .collect();
        w.push(choices[rng.random_range(0..choices.len())]);
    }
    w
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, n: usize, degree: usize) -> Word {
    Word::new(
        (0..degree)
            .map(|_| Generator::new(rng.random_range(1..=n), rng.random_range(1..=n)))
            .collect(),
    )
}

/// A random polynomial with up to `max_terms` words of degree at most
/// `max_degree` and small coefficients `c q^e`.
pub fn random_poly<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_degree: usize,
    max_terms: usize,
) -> NcPoly {
    let mut out = NcPoly::zero();
    let terms = rng.random_range(1..=max_terms.max(1));
    for _ in 0..terms {
        let degree = rng.random_range(0..=max_degree);
        let w = random_word(rng, n, degree);
        let c: i64 = rng.random_range(-3..=3);
        let e: i64 = rng.random_range(-2..=2);
        out.add_term(w, LaurentPoly::monomial(c, e));
    }
    out
}
