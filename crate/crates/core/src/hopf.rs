//! Bialgebra structure on the quotients, the quantum-adjoint antipode and
//! the checks that it is a left but not a right convolution inverse of the
//! identity.
//!
//! The antipode is defined on generators by the quantum adjoint matrix and
//! extended to irreducible words by reversing the order of the letters, then
//! linearly over the irreducible basis. It is *not* extended as an algebra
//! antimorphism, and [`antimorphism_witnesses`] shows that it is not one.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::error::{Error, Result};
use crate::freealg::{coproduct, coproduct_word, counit_word, enumerate_irreducible, Generator, NcPoly, TensorPoly, Word};
use crate::qcomb::{adjoint_entry, build_ei, quantum_det, IndexTuple};
use crate::report::{CheckItem, Report};
use crate::rewrite::{normal_form, Mode, Reducer, RewriteSystem};

/// A linear map given on the irreducible basis.
pub trait BasisMap {
    /// Image of an irreducible word, in normal form.
    fn apply_basis(&self, w: &Word, rs: &RewriteSystem) -> NcPoly;

    /// Linear extension: reduce, then map each basis word.
    fn apply(&self, p: &NcPoly, rs: &RewriteSystem) -> NcPoly {
        let nf = normal_form(p, rs);
        normal_form(&nf.map_linear(|w| self.apply_basis(w, rs)), rs)
    }

    fn apply_word(&self, w: &Word, rs: &RewriteSystem) -> NcPoly {
        if rs.is_irreducible(w) {
            self.apply_basis(w, rs)
        } else {
            self.apply(&NcPoly::word(w.clone()), rs)
        }
    }
}

/// The identity map.
pub struct Identity;

impl BasisMap for Identity {
    fn apply_basis(&self, w: &Word, _rs: &RewriteSystem) -> NcPoly {
        NcPoly::word(w.clone())
    }
}

/// `με`, the unit of the convolution monoid.
pub struct UnitCounit;

impl BasisMap for UnitCounit {
    fn apply_basis(&self, w: &Word, _rs: &RewriteSystem) -> NcPoly {
        NcPoly::constant(counit_word(w))
    }
}

/// The left antipode: quantum adjoint on generators, letter-reversal on
/// irreducible words.
pub struct Antipode {
    n: usize,
    images: Vec<NcPoly>,
}

impl Antipode {
    pub fn new(rs: &RewriteSystem) -> Result<Self> {
        let n = rs.n();
        let mut images = Vec::with_capacity(n * n);
        for g in Generator::all(n) {
            images.push(normal_form(&adjoint_entry(n, g.row, g.col)?, rs));
        }
        Ok(Self { n, images })
    }

    /// `S(X[i,j])` in normal form.
    pub fn generator(&self, g: Generator) -> &NcPoly {
        &self.images[(g.row - 1) * self.n + (g.col - 1)]
    }

    /// `S(w)` for an irreducible word.
    pub fn word(&self, w: &Word, rs: &RewriteSystem) -> Result<NcPoly> {
        if !rs.is_irreducible(w) {
            return Err(Error::Reducible(w.clone()));
        }
        let mut acc = NcPoly::one();
        for &g in w.letters().iter().rev() {
            acc = normal_form(&(&acc * self.generator(g)), rs);
        }
        Ok(acc)
    }
}

impl BasisMap for Antipode {
    fn apply_basis(&self, w: &Word, rs: &RewriteSystem) -> NcPoly {
        self.word(w, rs).expect("basis word is irreducible")
    }
}

/// Caches the images of another map on basis words.
pub struct Memo<'m> {
    inner: &'m dyn BasisMap,
    cache: RefCell<BTreeMap<Word, NcPoly>>,
}

impl<'m> Memo<'m> {
    pub fn new(inner: &'m dyn BasisMap) -> Self {
        Self {
            inner,
            cache: RefCell::new(BTreeMap::new()),
        }
    }
}

impl BasisMap for Memo<'_> {
    fn apply_basis(&self, w: &Word, rs: &RewriteSystem) -> NcPoly {
        if let Some(hit) = self.cache.borrow().get(w) {
            return hit.clone();
        }
        let image = self.inner.apply_basis(w, rs);
        self.cache.borrow_mut().insert(w.clone(), image.clone());
        image
    }
}

/// `S(w)` for an irreducible word `w`.
pub fn antipode_word(w: &Word, rs: &RewriteSystem) -> Result<NcPoly> {
    Antipode::new(rs)?.word(w, rs)
}

/// `S` extended linearly over the irreducible basis.
pub fn antipode_poly(p: &NcPoly, rs: &RewriteSystem) -> Result<NcPoly> {
    Ok(Antipode::new(rs)?.apply(p, rs))
}

/// `(f * g)(w) = m (f ⊗ g) Δ(w)`, reduced.
pub fn convolve(f: &dyn BasisMap, g: &dyn BasisMap, w: &Word, rs: &RewriteSystem) -> NcPoly {
    let mut out = NcPoly::zero();
    for ((u, v), c) in coproduct_word(w, rs.n()).iter() {
        let fu = f.apply_word(u, rs);
        if fu.is_zero() {
            continue;
        }
        let gv = g.apply_word(v, rs);
        out.add_scaled(&(&fu * &gv), c);
    }
    normal_form(&out, rs)
}

/// The matrix with entries `Σ_j S(X[i,j]) X[j,k]`, reduced.
pub fn left_adjoint_product(rs: &RewriteSystem) -> Result<Vec<Vec<NcPoly>>> {
    let n = rs.n();
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for k in 1..=n {
            let mut sum = NcPoly::zero();
            for j in 1..=n {
                sum += &(&adjoint_entry(n, i, j)? * &NcPoly::generator(j, k));
            }
            row.push(normal_form(&sum, rs));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `1` in the special linear quotient, `D` otherwise.
fn determinant_image(rs: &RewriteSystem) -> NcPoly {
    normal_form(&quantum_det(rs.n()), rs)
}

/// Checks `(S * I)(w) = ε(w) 1` for each word and the generator identity
/// `Σ_j S(X[i,j]) X[j,k] = δ(i,k) D`.
pub fn check_left_antipode(rs: &RewriteSystem, words: &[Word]) -> Result<Report> {
    let antipode = Antipode::new(rs)?;
    let cached = Memo::new(&antipode);
    let mut report = Report::new("left-antipode", rs.n(), rs.mode());
    for w in words {
        if !rs.is_irreducible(w) {
            return Err(Error::Reducible(w.clone()));
        }
        let got = convolve(&cached, &Identity, w, rs);
        let expected = NcPoly::constant(counit_word(w));
        report.push(CheckItem::new(
            format!("(S*I)({w})"),
            expected.to_string(),
            got.to_string(),
        ));
    }
    let det = determinant_image(rs);
    for (i, row) in left_adjoint_product(rs)?.into_iter().enumerate() {
        for (k, got) in row.into_iter().enumerate() {
            let expected = if i == k { det.clone() } else { NcPoly::zero() };
            report.push(CheckItem::new(
                format!("sum_j S(X[{},j]) X[j,{}]", i + 1, k + 1),
                expected.to_string(),
                got.to_string(),
            ));
        }
    }
    Ok(report)
}

/// `(I * S)(X[1,1]) = Σ_j X[1,j] S(X[j,1])`, reduced.
pub fn right_antipode_witness(rs: &RewriteSystem) -> Result<NcPoly> {
    let n = rs.n();
    let mut sum = NcPoly::zero();
    for j in 1..=n {
        sum += &(&NcPoly::generator(1, j) * &adjoint_entry(n, j, 1)?);
    }
    Ok(normal_form(&sum, rs))
}

/// Report form of the right-antipode failure: passes when the witness
/// differs from 1 and all its nonconstant words are irreducible of degree n.
pub fn check_right_antipode_fails(rs: &RewriteSystem) -> Result<Report> {
    let n = rs.n();
    let witness = right_antipode_witness(rs)?;
    let mut report = Report::new("right-antipode-fails", n, rs.mode());
    report.summary = Some(format!("(I*S)(X[1,1]) = {witness}"));
    report.push(CheckItem::with_verdict(
        "(I*S)(X[1,1])",
        "≠ 1".to_string(),
        witness.to_string(),
        !witness.is_one(),
    ));
    let shape_ok = witness
        .keys()
        .filter(|w| !w.is_empty())
        .all(|w| w.len() == n && rs.is_irreducible(w));
    report.push(CheckItem::with_verdict(
        "words of (I*S)(X[1,1])",
        format!("irreducible, degree {n}"),
        if shape_ok { "irreducible, degree n" } else { "violated" }.to_string(),
        shape_ok,
    ));
    Ok(report)
}

/// True iff every left factor of `Δ(w)` is irreducible, before reduction.
pub fn check_star(w: &Word, rs: &RewriteSystem) -> bool {
    coproduct_word(w, rs.n())
        .keys()
        .all(|(u, _)| rs.is_irreducible(u))
}

pub fn check_star_words(rs: &RewriteSystem, words: &[Word]) -> Report {
    let mut report = Report::new("star", rs.n(), rs.mode());
    for w in words {
        let ok = check_star(w, rs);
        report.push(CheckItem::with_verdict(
            format!("Δ({w})"),
            "left factors irreducible".to_string(),
            if ok { "left factors irreducible" } else { "reducible left factor" }.to_string(),
            ok,
        ));
    }
    report
}

/// `Δ(D) - D ⊗ D` (or `Δ(D) - 1 ⊗ 1` in the special linear quotient),
/// reduced in both factors.
pub fn grouplike_defect(rs: &RewriteSystem) -> TensorPoly {
    let det = quantum_det(rs.n());
    let image = determinant_image(rs);
    let mut t = coproduct(&det, rs.n());
    t -= &TensorPoly::tensor(&image, &image);
    Reducer::new(rs).tensor(&t)
}

pub fn check_grouplike_d(rs: &RewriteSystem) -> Report {
    let mut report = Report::new("grouplike", rs.n(), rs.mode());
    let defect = grouplike_defect(rs);
    let target = if rs.mode() == Some(Mode::SlTilde) { "1 ⊗ 1" } else { "D ⊗ D" };
    report.push(CheckItem::new(
        format!("Δ(D) - {target}"),
        "0".to_string(),
        defect.to_string(),
    ));
    report
}

/// `ε(E_I) = 0` and `Δ(E_I)` reduces to zero in both factors, for every `I`.
pub fn check_coideal(rs: &RewriteSystem) -> Result<Report> {
    let n = rs.n();
    let mut report = Report::new("coideal", n, rs.mode());
    let mut reducer = Reducer::new(rs);
    for tuple in IndexTuple::all(n) {
        let e = build_ei(n, &tuple)?;
        report.push(CheckItem::new(
            format!("ε(E_{tuple})"),
            "0".to_string(),
            e.counit().to_string(),
        ));
        let reduced = reducer.tensor(&coproduct(&e, n));
        report.push(CheckItem::new(
            format!("Δ(E_{tuple})"),
            "0".to_string(),
            reduced.to_string(),
        ));
    }
    Ok(report)
}

/// `S(uv)` against `S(v) S(u)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AntimorphismWitness {
    pub u: Word,
    pub v: Word,
    /// `S(uv)`, with `uv` reduced before `S` is applied.
    pub antipode_of_product: NcPoly,
    /// `S(v) S(u)`, reduced.
    pub reversed_product: NcPoly,
}

impl AntimorphismWitness {
    pub fn is_discrepancy(&self) -> bool {
        self.antipode_of_product != self.reversed_product
    }
}

pub fn antimorphism_discrepancy(u: &Word, v: &Word, antipode: &Antipode, rs: &RewriteSystem) -> AntimorphismWitness {
    let antipode_of_product = antipode.apply_word(&u.concat(v), rs);
    let reversed_product = normal_form(&(&antipode.apply_word(v, rs) * &antipode.apply_word(u, rs)), rs);
    AntimorphismWitness {
        u: u.clone(),
        v: v.clone(),
        antipode_of_product,
        reversed_product,
    }
}

/// All generator pairs on which `S` fails to be an algebra antimorphism,
/// in lexicographic order of `(u, v)`.
///
/// For `n > 2` this is empty: every product of two generators is then a
/// basis word, on which `S` reverses letters by definition.
pub fn antimorphism_witnesses(rs: &RewriteSystem) -> Result<Vec<AntimorphismWitness>> {
    let antipode = Antipode::new(rs)?;
    let n = rs.n();
    let mut out = Vec::new();
    for u in Generator::all(n) {
        for v in Generator::all(n) {
            let w = antimorphism_discrepancy(&Word::new(alloc::vec![u]), &Word::new(alloc::vec![v]), &antipode, rs);
            if w.is_discrepancy() {
                out.push(w);
            }
        }
    }
    Ok(out)
}

/// The lexicographically first generator-pair witness, or
/// [`Error::ExhaustedSearch`] if there is none.
pub fn antimorphism_witness(rs: &RewriteSystem) -> Result<AntimorphismWitness> {
    antimorphism_witnesses(rs)?
        .into_iter()
        .next()
        .ok_or(Error::ExhaustedSearch { n: rs.n() })
}

/// The first witness among pairs of basis words `(u, v)` with
/// `|u| + |v| = n`, ordered by `|u|`, then `u`, then `v`. Pairs whose product
/// is itself a basis word are skipped, since `S` reverses them by definition.
pub fn antimorphism_witness_words(rs: &RewriteSystem) -> Result<AntimorphismWitness> {
    let antipode = Antipode::new(rs)?;
    let n = rs.n();
    for du in 1..n {
        let rights = enumerate_irreducible(n, n - du, rs);
        for u in enumerate_irreducible(n, du, rs) {
            for v in &rights {
                if rs.is_irreducible(&u.concat(v)) {
                    continue;
                }
                let w = antimorphism_discrepancy(&u, v, &antipode, rs);
                if w.is_discrepancy() {
                    return Ok(w);
                }
            }
        }
    }
    Err(Error::ExhaustedSearch { n })
}

/// Both sides of the coalgebra-antimorphism condition on one word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoalgebraCheck {
    pub word: Word,
    /// `Δ(S(w))`, reduced in both factors.
    pub coproduct_of_antipode: TensorPoly,
    /// `(S ⊗ S)(τ Δ(w))`, reduced in both factors.
    pub flipped_antipode_square: TensorPoly,
}

impl CoalgebraCheck {
    /// True when the condition fails on `word`.
    pub fn fails(&self) -> bool {
        self.coproduct_of_antipode != self.flipped_antipode_square
    }
}

pub fn coalgebra_antimorphism_check(w: &Word, rs: &RewriteSystem) -> Result<CoalgebraCheck> {
    let n = rs.n();
    let antipode = Antipode::new(rs)?;
    let mut reducer = Reducer::new(rs);
    let s_w = antipode.apply_word(w, rs);
    let lhs = reducer.tensor(&coproduct(&s_w, n));
    let flipped = coproduct_word(w, n).swap();
    let mapped = flipped.map_factors(|u| antipode.apply_word(u, rs), |v| antipode.apply_word(v, rs));
    let rhs = reducer.tensor(&mapped);
    Ok(CoalgebraCheck {
        word: w.clone(),
        coproduct_of_antipode: lhs,
        flipped_antipode_square: rhs,
    })
}

/// The polynomial itself if it is short, otherwise its term count.
fn brief(p: &NcPoly) -> alloc::string::String {
    let text = p.to_string();
    if text.len() <= 120 {
        text
    } else {
        format!("<{} terms>", p.len())
    }
}

/// Report form of both non-Hopf witnesses; passes when each is established.
pub fn check_witnesses(rs: &RewriteSystem) -> Result<Report> {
    let mut report = Report::new("witnesses", rs.n(), rs.mode());
    match antimorphism_witness(rs).or_else(|_| antimorphism_witness_words(rs)) {
        Ok(w) => {
            report.summary = Some(format!(
                "S(({})({})) = {} but S({}) S({}) = {}",
                w.u,
                w.v,
                brief(&w.antipode_of_product),
                w.v,
                w.u,
                brief(&w.reversed_product)
            ));
            report.push(CheckItem::with_verdict(
                format!("S(({})({})) vs S({}) S({})", w.u, w.v, w.v, w.u),
                w.reversed_product.to_string(),
                w.antipode_of_product.to_string(),
                w.is_discrepancy(),
            ));
        }
        Err(e) => report.push(CheckItem::with_verdict(
            "algebra antimorphism witness",
            "a discrepancy".to_string(),
            e.to_string(),
            false,
        )),
    }
    let square = Word::from_pairs(&[(1, 1), (1, 1)]);
    let c = coalgebra_antimorphism_check(&square, rs)?;
    report.push(CheckItem::with_verdict(
        format!("Δ(S({square})) vs (S⊗S)τΔ({square})"),
        c.flipped_antipode_square.to_string(),
        c.coproduct_of_antipode.to_string(),
        c.fails(),
    ));
    Ok(report)
}
