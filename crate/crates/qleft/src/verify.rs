//! Named verification checks over one `(n, mode)` configuration.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use qleft_core::comodule::{check_comodule_axioms, check_comodule_relations};
use qleft_core::freealg::{enumerate_irreducible_upto, random_irreducible_word, random_poly};
use qleft_core::hopf::{check_coideal, check_grouplike_d, check_left_antipode, check_right_antipode_fails, check_star_words, check_witnesses};
use qleft_core::rewrite::{build_rules, confluence_probe, overlap_check};
use qleft_core::{CheckItem, Mode, Report, RewriteSystem, Strategy, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Check {
    LeftAntipode,
    RightAntipodeFails,
    Grouplike,
    Coideal,
    Comodule,
    Star,
    Diamond,
    Confluence,
    Witnesses,
    All,
}

impl Check {
    pub const EACH: [Check; 9] = [
        Check::LeftAntipode,
        Check::RightAntipodeFails,
        Check::Grouplike,
        Check::Coideal,
        Check::Comodule,
        Check::Star,
        Check::Diamond,
        Check::Confluence,
        Check::Witnesses,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::LeftAntipode => "left-antipode",
            Check::RightAntipodeFails => "right-antipode-fails",
            Check::Grouplike => "grouplike",
            Check::Coideal => "coideal",
            Check::Comodule => "comodule",
            Check::Star => "star",
            Check::Diamond => "diamond",
            Check::Confluence => "confluence",
            Check::Witnesses => "witnesses",
            Check::All => "all",
        }
    }

    /// The quotient the check runs in. Statements about the left antipode
    /// and property (★) only hold in the special linear quotient.
    fn mode(self, requested: Mode) -> Mode {
        match self {
            Check::LeftAntipode | Check::RightAntipodeFails | Check::Star | Check::Witnesses => Mode::SlTilde,
            _ => requested,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub n: usize,
    pub mode: Mode,
    /// Exhaustive checks cover irreducible words up to this degree.
    pub degree: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Config {
    /// Degree bound used when none is given. The number of irreducible
    /// words grows roughly like `n^(2d)`, so larger `n` gets a smaller bound.
    pub fn default_degree(n: usize) -> usize {
        match n {
            0..=3 => 3,
            4 => 2,
            _ => 1,
        }
    }
}

/// Runs one check. Errors from the core become failed items, so a report
/// never passes through an error path.
pub fn run(check: Check, cfg: &Config) -> Report {
    let mode = check.mode(cfg.mode);
    let rs = match build_rules(cfg.n, mode) {
        Ok(rs) => rs,
        Err(e) => return failed(check, cfg.n, mode, e.to_string()),
    };
    let result = match check {
        Check::LeftAntipode => left_antipode(&rs, cfg),
        Check::RightAntipodeFails => check_right_antipode_fails(&rs),
        Check::Grouplike => Ok(check_grouplike_d(&rs)),
        Check::Coideal => check_coideal(&rs),
        Check::Comodule => comodule(&rs),
        Check::Star => Ok(star(&rs, cfg)),
        Check::Diamond => Ok(diamond(&rs)),
        Check::Confluence => Ok(confluence(&rs, cfg)),
        Check::Witnesses => check_witnesses(&rs),
        Check::All => unreachable!("expanded by run_many"),
    };
    result.unwrap_or_else(|e| failed(check, cfg.n, mode, e.to_string()))
}

/// Runs `check`, expanding `all`, with independent checks in parallel.
/// Reports come back in a fixed order.
pub fn run_many(check: Check, cfg: &Config) -> Vec<Report> {
    if check == Check::All {
        Check::EACH.par_iter().map(|&c| run(c, cfg)).collect()
    } else {
        vec![run(check, cfg)]
    }
}

fn failed(check: Check, n: usize, mode: Mode, message: String) -> Report {
    let mut report = Report::new(check.name(), n, Some(mode));
    report.push(CheckItem::with_verdict(check.name(), "completion".into(), message, false));
    report
}

fn left_antipode(rs: &RewriteSystem, cfg: &Config) -> qleft_core::Result<Report> {
    let mut words = enumerate_irreducible_upto(rs.n(), cfg.degree, rs);
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples {
        let d = rng.random_range(0..=cfg.degree + 1);
        words.push(random_irreducible_word(&mut rng, rs, d));
    }
    let chunk = words.len().div_ceil(rayon::current_num_threads() * 4).max(1);
    let word_items = words
        .par_chunks(chunk)
        .map(|ws| {
            // each partial report ends with the generator-matrix items
            let mut items = check_left_antipode(rs, ws)?.items;
            items.truncate(ws.len());
            Ok(items)
        })
        .collect::<qleft_core::Result<Vec<_>>>()?;
    let mut report = check_left_antipode(rs, &[])?;
    let generator_items = std::mem::take(&mut report.items);
    report.items = word_items.concat();
    report.items.extend(generator_items);
    Ok(report)
}

fn comodule(rs: &RewriteSystem) -> qleft_core::Result<Report> {
    let mut report = check_comodule_relations(rs)?;
    report.items.extend(check_comodule_axioms(rs)?.items);
    Ok(report)
}

fn star(rs: &RewriteSystem, cfg: &Config) -> Report {
    let words: Vec<Word> = enumerate_irreducible_upto(rs.n(), cfg.degree, rs);
    let chunk = words.len().div_ceil(rayon::current_num_threads() * 4).max(1);
    let items: Vec<CheckItem> = words
        .par_chunks(chunk)
        .flat_map_iter(|ws| check_star_words(rs, ws).items)
        .collect();
    let mut report = Report::new("star", rs.n(), rs.mode());
    report.items = items;
    report
}

fn diamond(rs: &RewriteSystem) -> Report {
    let ambiguities = overlap_check(rs);
    let mut report = Report::new("diamond", rs.n(), rs.mode());
    report.summary = Some(format!("{} ambiguities among {} rules", ambiguities.len(), rs.len()));
    report.push(CheckItem::new(
        "ambiguities",
        "0".to_string(),
        ambiguities.len().to_string(),
    ));
    for a in &ambiguities {
        report.push(CheckItem::with_verdict(a.word.to_string(), "no ambiguity".into(), a.to_string(), false));
    }
    report
}

fn confluence(rs: &RewriteSystem, cfg: &Config) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let polys: Vec<_> = (0..cfg.samples)
        .map(|_| random_poly(&mut rng, rs.n(), cfg.degree + 2, 4))
        .collect();
    let items: Vec<CheckItem> = polys
        .par_iter()
        .map(|p| {
            let ok = confluence_probe(rs, p, &Strategy::DEFAULT_SET);
            CheckItem::with_verdict(
                p.to_string(),
                "strategies agree".into(),
                if ok { "strategies agree" } else { "strategies disagree" }.into(),
                ok,
            )
        })
        .collect();
    let mut report = Report::new("confluence", rs.n(), rs.mode());
    report.items = items;
    report
}
