//! Reduction systems for the two quotients and normal forms in them.
//!
//! Each defining relation is solved for its greatest word, the word with row
//! sequence `(n, n-1, ..., 1)`. Rules are checked at construction to rewrite
//! strictly downward in the length+lexicographic order, so reduction
//! terminates; [`overlap_check`] searches for ambiguities between left-hand
//! sides, and an empty result means normal forms are unique.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::freealg::{Generator, NcPoly, TensorPoly, Word};
use crate::laurent::LaurentPoly;
use crate::qcomb::{length_stat, permutations, quantum_det, IndexTuple};

/// Which quotient of the free algebra a system presents.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Mode {
    /// `D_I = δ (-q)^(-ℓ(I))` for every `I`: the special linear quotient.
    SlTilde,
    /// `D_I = δ (-q)^(-ℓ(I)) D` for every `I ≠ (1,...,n)`.
    MTilde,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::SlTilde => "sl",
            Mode::MTilde => "m",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A reduction `lhs -> rhs` with every word of `rhs` below `lhs`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Rule {
    index: Option<IndexTuple>,
    lhs: Word,
    rhs: NcPoly,
}

impl Rule {
    pub fn new(lhs: Word, rhs: NcPoly) -> Result<Self> {
        if let Some((top, _)) = rhs.leading() {
            if top >= &lhs {
                return Err(Error::OrderViolation {
                    lhs,
                    offending: top.clone(),
                });
            }
        }
        Ok(Self {
            index: None,
            lhs,
            rhs,
        })
    }

    pub fn lhs(&self) -> &Word {
        &self.lhs
    }

    pub fn rhs(&self) -> &NcPoly {
        &self.rhs
    }

    /// The column tuple `I` this rule was built from, if any.
    pub fn index(&self) -> Option<&IndexTuple> {
        self.index.as_ref()
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", NcPoly::word(self.lhs.clone()), self.rhs)
    }
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    n: usize,
    mode: Option<Mode>,
    rules: BTreeMap<Vec<Generator>, Rule>,
    widths: BTreeSet<usize>,
}

/// How the next rewrite is chosen.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    /// Greatest reducible word, leftmost reducible window.
    GreatestWord,
    /// Least reducible word, rightmost reducible window.
    LeastWordRightmost,
    /// Uniformly random reducible word and window, seeded.
    Random(u64),
}

impl Strategy {
    pub const DEFAULT_SET: [Strategy; 3] = [
        Strategy::GreatestWord,
        Strategy::LeastWordRightmost,
        Strategy::Random(0x5eed),
    ];
}

impl RewriteSystem {
    /// The `n^n` (or `n^n - 1`) rules presenting the chosen quotient.
    pub fn build(n: usize, mode: Mode) -> Result<Self> {
        build_rules(n, mode)
    }

    /// A system from arbitrary rules; used for test fixtures.
    pub fn from_rules(n: usize, rules: impl IntoIterator<Item = Rule>) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut widths = BTreeSet::new();
        for rule in rules {
            let index = rule.lhs.max_index();
            if index > n {
                return Err(Error::IndexOutOfRange { index, n });
            }
            widths.insert(rule.lhs.len());
            let key = rule.lhs.letters().to_vec();
            if map.contains_key(&key) {
                return Err(Error::DuplicateRule(rule.lhs));
            }
            map.insert(key, rule);
        }
        Ok(Self {
            n,
            mode: None,
            rules: map,
            widths,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Option<Mode> {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Rules in ascending order of their left-hand letters.
    pub fn rules(&self) -> impl Iterator<Item = &Rule> + '_ {
        self.rules.values()
    }

    /// Rules ordered by their index tuple, for listing.
    pub fn rules_by_index(&self) -> Vec<&Rule> {
        let mut out: Vec<&Rule> = self.rules.values().collect();
        out.sort_by(|a, b| a.index.cmp(&b.index).then_with(|| a.lhs.cmp(&b.lhs)));
        out
    }

    pub fn rule_for(&self, lhs: &[Generator]) -> Option<&Rule> {
        self.rules.get(lhs)
    }

    /// Leftmost window of `w` matching a rule.
    pub fn leftmost_window(&self, w: &Word) -> Option<(usize, &Rule)> {
        self.windows(w).next()
    }

    /// All `(position, rule)` matches in `w`, by position then width.
    pub fn windows<'s, 'w>(
        &'s self,
        w: &'w Word,
    ) -> impl Iterator<Item = (usize, &'s Rule)> + use<'s, 'w> {
        let letters = w.letters();
        (0..letters.len()).flat_map(move |pos| {
            self.widths.iter().filter_map(move |&width| {
                letters
                    .get(pos..pos + width)
                    .and_then(|window| self.rules.get(window))
                    .map(|rule| (pos, rule))
            })
        })
    }

    /// True iff some rule matches a window ending at the last letter of `w`.
    pub fn has_reducible_suffix(&self, w: &Word) -> bool {
        let letters = w.letters();
        self.widths.iter().any(|&width| {
            letters.len() >= width && self.rules.contains_key(&letters[letters.len() - width..])
        })
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.leftmost_window(w).is_none()
    }

    pub fn normal_form(&self, p: &NcPoly) -> NcPoly {
        normal_form(p, self)
    }
}

/// Builds the reduction system for `SL~_q(n)` or `M~_q(n)`.
///
/// For each admissible `I` the relation `D_I = δ (-q)^(-ℓ(I)) T` is solved
/// for the word `X[n,i_1] ⋯ X[1,i_n]`, where `T` is `1` or `D`.
pub fn build_rules(n: usize, mode: Mode) -> Result<RewriteSystem> {
    if n < 2 {
        return Err(Error::SizeTooSmall(n));
    }
    let reversed: Vec<usize> = (1..=n).rev().collect();
    let top_len = length_stat(&reversed) as i64;
    // Multiplying through by the inverse of the leading coefficient.
    let normalizer = LaurentPoly::neg_q_pow(top_len);
    let det = quantum_det(n);
    let perms = permutations(n);
    let identity = IndexTuple::identity(n);

    let mut rules = Vec::with_capacity(n.pow(n as u32));
    for tuple in IndexTuple::all(n) {
        if mode == Mode::MTilde && tuple == identity {
            continue;
        }
        let cols = tuple.entries();
        let lhs = Word::new(
            reversed
                .iter()
                .zip(cols)
                .map(|(&r, &c)| Generator::new(r, c))
                .collect(),
        );
        let mut rhs = NcPoly::zero();
        if tuple.is_permutation() {
            let c = LaurentPoly::neg_q_pow(-(tuple.length_stat() as i64));
            match mode {
                Mode::SlTilde => rhs.add_term(Word::unit(), c),
                Mode::MTilde => rhs.add_scaled(&det, &c),
            }
        }
        for perm in perms.iter().filter(|p| **p != reversed) {
            let word = Word::new(
                perm.iter()
                    .zip(cols)
                    .map(|(&r, &c)| Generator::new(r, c))
                    .collect(),
            );
            rhs.add_term(word, -LaurentPoly::neg_q_pow(-(length_stat(perm) as i64)));
        }
        let mut rule = Rule::new(lhs, rhs.scale(&normalizer))?;
        rule.index = Some(tuple);
        rules.push(rule);
    }
    let mut system = RewriteSystem::from_rules(n, rules)?;
    system.mode = Some(mode);
    Ok(system)
}

/// Normal form under the default strategy (greatest reducible word first,
/// leftmost window).
pub fn normal_form(p: &NcPoly, rs: &RewriteSystem) -> NcPoly {
    // Rewriting the current greatest word only produces smaller words, so
    // once the greatest remaining word is irreducible it is final.
    let mut work = p.clone();
    let mut done = NcPoly::zero();
    while let Some((w, c)) = work.pop_last() {
        match rs.leftmost_window(&w) {
            None => done.add_term(w, c),
            Some((pos, rule)) => rewrite_at(&mut work, &w, &c, pos, rule),
        }
    }
    done
}

fn rewrite_at(target: &mut NcPoly, w: &Word, c: &LaurentPoly, pos: usize, rule: &Rule) {
    let width = rule.lhs.len();
    for (middle, d) in rule.rhs.iter() {
        target.add_term(w.splice(pos, width, middle), c * d);
    }
}

/// Normal form under an explicit strategy.
pub fn normal_form_with(p: &NcPoly, rs: &RewriteSystem, strategy: Strategy) -> NcPoly {
    match strategy {
        Strategy::GreatestWord => normal_form(p, rs),
        Strategy::LeastWordRightmost => reduce_by(p, rs, |reducible, _| {
            let w = reducible[0].clone();
            let (pos, _) = rs.windows(&w).last().expect("word is reducible");
            (w, pos)
        }),
        Strategy::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            reduce_by(p, rs, move |reducible, rs| {
                let w = reducible[rng.random_range(0..reducible.len())].clone();
                let windows: Vec<usize> = rs.windows(&w).map(|(pos, _)| pos).collect();
                let pos = windows[rng.random_range(0..windows.len())];
                (w, pos)
            })
        }
    }
}

/// Generic reduction loop: `choose` picks a reducible word (from the list in
/// ascending order) and a window position in it.
fn reduce_by(
    p: &NcPoly,
    rs: &RewriteSystem,
    mut choose: impl FnMut(&[Word], &RewriteSystem) -> (Word, usize),
) -> NcPoly {
    let mut current = p.clone();
    loop {
        let reducible: Vec<Word> = current
            .keys()
            .filter(|w| !rs.is_irreducible(w))
            .cloned()
            .collect();
        if reducible.is_empty() {
            return current;
        }
        let (w, pos) = choose(&reducible, rs);
        let rule = rs
            .windows(&w)
            .find(|(p, _)| *p == pos)
            .map(|(_, r)| r)
            .expect("chosen window matches a rule");
        let c = current.coeff(&w).cloned().expect("word is present");
        current.add_term(w.clone(), -&c);
        rewrite_at(&mut current, &w, &c, pos, rule);
    }
}

/// Memoised word normal forms for repeated reductions against one system.
pub struct Reducer<'a> {
    rs: &'a RewriteSystem,
    cache: BTreeMap<Word, NcPoly>,
}

impl<'a> Reducer<'a> {
    pub fn new(rs: &'a RewriteSystem) -> Self {
        Self {
            rs,
            cache: BTreeMap::new(),
        }
    }

    pub fn system(&self) -> &'a RewriteSystem {
        self.rs
    }

    pub fn word(&mut self, w: &Word) -> NcPoly {
        if self.rs.is_irreducible(w) {
            return NcPoly::word(w.clone());
        }
        if let Some(hit) = self.cache.get(w) {
            return hit.clone();
        }
        let nf = normal_form(&NcPoly::word(w.clone()), self.rs);
        self.cache.insert(w.clone(), nf.clone());
        nf
    }


    pub fn tensor(&mut self, t: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((u, v), c) in t.iter() {
            let nu = self.word(u);
            let nv = self.word(v);
            for (a, x) in nu.iter() {
                for (b, y) in nv.iter() {
                    out.add_term((a.clone(), b.clone()), &(x * y) * c);
                }
            }
        }
        out
    }
}

/// Reduces both factors of every term.
pub fn tensor_normal_form(t: &TensorPoly, rs: &RewriteSystem) -> TensorPoly {
    Reducer::new(rs).tensor(t)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AmbiguityKind {
    /// A proper suffix of the first lhs is a prefix of the second.
    Overlap,
    /// The second lhs occurs inside the first.
    Inclusion,
}

/// A word on which two reductions can start.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Ambiguity {
    pub kind: AmbiguityKind,
    pub first: Word,
    pub second: Word,
    pub word: Word,
}

impl fmt::Display for Ambiguity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            AmbiguityKind::Overlap => "overlap",
            AmbiguityKind::Inclusion => "inclusion",
        };
        write!(f, "{kind} of {} and {} on {}", self.first, self.second, self.word)
    }
}

/// Every overlap and inclusion ambiguity among the left-hand sides.
pub fn overlap_check(rs: &RewriteSystem) -> Vec<Ambiguity> {
    let mut out = Vec::new();
    for a in rs.rules() {
        let la = a.lhs.letters();
        for b in rs.rules() {
            let lb = b.lhs.letters();
            for k in 1..la.len().min(lb.len()) {
                if la[la.len() - k..] == lb[..k] {
                    let word = a.lhs.concat(&Word::new(lb[k..].to_vec()));
                    out.push(Ambiguity {
                        kind: AmbiguityKind::Overlap,
                        first: a.lhs.clone(),
                        second: b.lhs.clone(),
                        word,
                    });
                }
            }
            if a.lhs != b.lhs && lb.len() <= la.len() && la.windows(lb.len()).any(|w| w == lb) {
                out.push(Ambiguity {
                    kind: AmbiguityKind::Inclusion,
                    first: a.lhs.clone(),
                    second: b.lhs.clone(),
                    word: a.lhs.clone(),
                });
            }
        }
    }
    out
}

/// True iff every strategy produces the same normal form of `p`.
pub fn confluence_probe(rs: &RewriteSystem, p: &NcPoly, strategies: &[Strategy]) -> bool {
    let mut results = strategies.iter().map(|&s| normal_form_with(p, rs, s));
    match results.next() {
        None => true,
        Some(first) => results.all(|r| r == first),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{coproduct, enumerate_irreducible, random_poly};
    use crate::qcomb::{build_di, build_ei};
    use alloc::string::ToString;
    use alloc::vec;

    fn x(i: usize, j: usize) -> NcPoly {
        NcPoly::generator(i, j)
    }

    fn w(pairs: &[(usize, usize)]) -> Word {
        Word::from_pairs(pairs)
    }

    fn lp(c: i64, e: i64) -> LaurentPoly {
        LaurentPoly::monomial(c, e)
    }

    fn poly(terms: &[(i64, i64, &[(usize, usize)])]) -> NcPoly {
        terms
            .iter()
            .map(|&(c, e, pairs)| (w(pairs), lp(c, e)))
            .collect()
    }

    fn sl(n: usize) -> RewriteSystem {
        build_rules(n, Mode::SlTilde).unwrap()
    }

    fn mt(n: usize) -> RewriteSystem {
        build_rules(n, Mode::MTilde).unwrap()
    }

    #[test]
    fn rule_counts() {
        for n in 2..=4 {
            assert_eq!(sl(n).len(), n.pow(n as u32));
            assert_eq!(mt(n).len(), n.pow(n as u32) - 1);
        }
        assert_eq!(build_rules(1, Mode::SlTilde).unwrap_err(), Error::SizeTooSmall(1));
    }

    #[test]
    fn determinant_rule_at_n2() {
        let rs = sl(2);
        let rule = rs.rule_for(w(&[(2, 1), (1, 2)]).letters()).unwrap();
        assert_eq!(rule.rhs(), &poly(&[(1, 1, &[(1, 1), (2, 2)]), (-1, 1, &[])]));
        assert_eq!(rule.to_string(), "X[2,1]*X[1,2] = q*X[1,1]*X[2,2] - q");
    }

    #[test]
    fn rule_212_and_132_at_n3() {
        let rs = sl(3);
        let r212 = rs.rule_for(w(&[(3, 2), (2, 1), (1, 2)]).letters()).unwrap();
        let expected = poly(&[
            (1, 3, &[(1, 2), (2, 1), (3, 2)]),
            (-1, 2, &[(1, 2), (3, 1), (2, 2)]),
            (-1, 2, &[(2, 2), (1, 1), (3, 2)]),
            (1, 1, &[(2, 2), (3, 1), (1, 2)]),
            (1, 1, &[(3, 2), (1, 1), (2, 2)]),
        ]);
        assert_eq!(r212.rhs(), &expected);

        let r132 = rs.rule_for(w(&[(3, 1), (2, 3), (1, 2)]).letters()).unwrap();
        let expected = poly(&[
            (1, 3, &[(1, 1), (2, 3), (3, 2)]),
            (-1, 2, &[(1, 1), (3, 3), (2, 2)]),
            (-1, 2, &[(2, 1), (1, 3), (3, 2)]),
            (1, 1, &[(2, 1), (3, 3), (1, 2)]),
            (1, 1, &[(3, 1), (1, 3), (2, 2)]),
            (1, 2, &[]),
        ]);
        assert_eq!(r132.rhs(), &expected);
    }

    #[test]
    fn rules_are_scaled_ideal_generators() {
        for n in 2..=3 {
            let factor = LaurentPoly::neg_q_pow((n * (n - 1) / 2) as i64);
            for rule in mt(n).rules() {
                let tuple = rule.index().unwrap();
                let diff = &NcPoly::word(rule.lhs().clone()) - rule.rhs();
                assert_eq!(diff, build_ei(n, tuple).unwrap().scale(&factor));
            }
            for rule in sl(n).rules() {
                let tuple = rule.index().unwrap();
                let mut rel = build_di(n, tuple).unwrap();
                if tuple.is_permutation() {
                    rel.add_term(
                        Word::unit(),
                        -LaurentPoly::neg_q_pow(-(tuple.length_stat() as i64)),
                    );
                }
                let diff = &NcPoly::word(rule.lhs().clone()) - rule.rhs();
                assert_eq!(diff, rel.scale(&factor));
            }
        }
    }

    #[test]
    fn order_violation_is_loud() {
        let err = Rule::new(w(&[(1, 1)]), x(1, 2)).unwrap_err();
        assert!(matches!(err, Error::OrderViolation { .. }));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(sl(2).is_irreducible(&w(&[(1, 1), (2, 2)])));
        assert!(!sl(2).is_irreducible(&w(&[(2, 1), (1, 2)])));
        assert!(!sl(3).is_irreducible(&w(&[(3, 2), (2, 1), (1, 2)])));
        // identity-column word is reducible only in the SL quotient
        let top = w(&[(2, 1), (1, 2)]);
        assert!(mt(2).is_irreducible(&top));
    }

    #[test]
    fn normal_form_examples_at_n2() {
        let rs = sl(2);
        assert_eq!(
            normal_form(&(&x(2, 1) * &x(1, 1)), &rs),
            poly(&[(1, 1, &[(1, 1), (2, 1)])])
        );
        assert_eq!(
            normal_form(&(&x(2, 2) * &x(1, 1)), &rs),
            poly(&[(1, 1, &[(1, 2), (2, 1)]), (1, 0, &[])])
        );
        let irreducible = &x(1, 1) * &x(2, 2);
        assert_eq!(normal_form(&irreducible, &rs), irreducible);
        assert!(normal_form(&quantum_det(2), &rs).is_one());
    }

    #[test]
    fn determinant_in_each_mode() {
        for n in 2..=4 {
            assert!(normal_form(&quantum_det(n), &sl(n)).is_one());
            assert_eq!(normal_form(&quantum_det(n), &mt(n)), quantum_det(n));
        }
    }

    #[test]
    fn standard_quadratic_relation_survives() {
        let rel = &(&x(1, 1) * &x(1, 2)) - &(&x(1, 2) * &x(1, 1)).scale(&lp(1, -1));
        assert!(!normal_form(&rel, &sl(3)).is_zero());
    }

    #[test]
    fn tensor_normal_form_examples() {
        let rs2 = sl(2);
        let one = TensorPoly::one();
        assert_eq!(tensor_normal_form(&one, &rs2), one);
        let t = TensorPoly::tensor(&(&x(2, 1) * &x(1, 1)), &NcPoly::one());
        let expected = TensorPoly::tensor(&poly(&[(1, 1, &[(1, 1), (2, 1)])]), &NcPoly::one());
        assert_eq!(tensor_normal_form(&t, &rs2), expected);

        let e11 = build_ei(2, &IndexTuple::new(vec![1, 1], 2).unwrap()).unwrap();
        assert!(tensor_normal_form(&coproduct(&e11, 2), &mt(2)).is_zero());
    }

    #[test]
    fn reducer_agrees_with_normal_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for n in 2..=3 {
            for rs in [sl(n), mt(n)] {
                let mut reducer = Reducer::new(&rs);
                for _ in 0..40 {
                    let p = random_poly(&mut rng, n, 6, 4);
                    let np = normal_form(&p, &rs);
                    let via_words: NcPoly = p
                        .iter()
                        .flat_map(|(w, c)| reducer.word(w).scale(c).into_iter())
                        .collect();
                    assert_eq!(via_words, np);
                }
            }
        }
    }

    #[test]
    fn no_ambiguities_for_small_n() {
        for n in 2..=3 {
            assert!(overlap_check(&sl(n)).is_empty());
            assert!(overlap_check(&mt(n)).is_empty());
        }
    }

    #[test]
    fn overlap_detector_on_fixture() {
        let rules = vec![
            Rule::new(w(&[(1, 1), (1, 2)]), NcPoly::one()).unwrap(),
            Rule::new(w(&[(1, 2), (1, 1)]), x(1, 1)).unwrap(),
        ];
        let rs = RewriteSystem::from_rules(2, rules).unwrap();
        let found = overlap_check(&rs);
        let words: Vec<Word> = found.iter().map(|a| a.word.clone()).collect();
        assert!(words.contains(&w(&[(1, 1), (1, 2), (1, 1)])));
        assert!(words.contains(&w(&[(1, 2), (1, 1), (1, 2)])));
        assert_eq!(found.len(), 2);
        assert!(found.iter().all(|a| a.kind == AmbiguityKind::Overlap));
    }

    #[test]
    fn inclusion_detected() {
        let rules = vec![
            Rule::new(w(&[(2, 2), (1, 1), (2, 1)]), NcPoly::one()).unwrap(),
            Rule::new(w(&[(1, 1)]), NcPoly::one()).unwrap(),
        ];
        let rs = RewriteSystem::from_rules(2, rules).unwrap();
        let found = overlap_check(&rs);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].kind, AmbiguityKind::Inclusion);
    }

    #[test]
    fn duplicate_rule_rejected() {
        let rules = vec![
            Rule::new(w(&[(1, 2)]), NcPoly::one()).unwrap(),
            Rule::new(w(&[(1, 2)]), x(1, 1)).unwrap(),
        ];
        assert!(matches!(
            RewriteSystem::from_rules(2, rules),
            Err(Error::DuplicateRule(_))
        ));
    }

    #[test]
    fn strategies_agree_on_fixed_word() {
        let rs = sl(2);
        let p = NcPoly::word(w(&[(2, 2), (2, 1), (1, 2), (1, 1)]));
        assert!(confluence_probe(&rs, &p, &Strategy::DEFAULT_SET));
        let single = RewriteSystem::from_rules(
            2,
            vec![Rule::new(w(&[(2, 2)]), x(1, 1)).unwrap()],
        )
        .unwrap();
        assert!(confluence_probe(&single, &p, &Strategy::DEFAULT_SET));
    }

    #[test]
    fn strategies_agree_on_random_corpus() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 2..=3 {
            let rs = sl(n);
            for _ in 0..30 {
                let p = random_poly(&mut rng, n, 5, 4);
                assert!(confluence_probe(&rs, &p, &Strategy::DEFAULT_SET), "{p}");
            }
        }
    }

    #[test]
    fn normal_form_is_idempotent_and_irreducible() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 2..=3 {
            let rs = sl(n);
            for _ in 0..30 {
                let p = random_poly(&mut rng, n, 6, 5);
                let nf = normal_form(&p, &rs);
                assert!(nf.keys().all(|w| rs.is_irreducible(w)));
                assert_eq!(normal_form(&nf, &rs), nf);
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let rs2 = sl(2);
        assert_eq!(enumerate_irreducible(2, 0, &rs2), vec![Word::unit()]);
        assert_eq!(enumerate_irreducible(2, 1, &rs2).len(), 4);
        assert_eq!(enumerate_irreducible(2, 2, &rs2).len(), 12);
        assert_eq!(enumerate_irreducible(3, 3, &sl(3)).len(), 702);
        let words = enumerate_irreducible(2, 3, &rs2);
        assert!(words.windows(2).all(|p| p[0] < p[1]));
    }
}
