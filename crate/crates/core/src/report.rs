//! Pass/fail reports produced by the verification routines.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::rewrite::Mode;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckItem {
    pub input: String,
    pub expected: String,
    pub got: String,
    pub passed: bool,
}

impl CheckItem {
    pub fn new(input: impl Into<String>, expected: String, got: String) -> Self {
        let passed = expected == got;
        Self {
            input: input.into(),
            expected,
            got,
            passed,
        }
    }

    /// An item whose verdict is not a string comparison.
    pub fn with_verdict(input: impl Into<String>, expected: String, got: String, passed: bool) -> Self {
        Self {
            input: input.into(),
            expected,
            got,
            passed,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Report {
    pub check: String,
    pub n: usize,
    pub mode: Option<Mode>,
    pub items: Vec<CheckItem>,
    /// One-line human summary, e.g. the ambiguity count.
    pub summary: Option<String>,
}

impl Report {
    pub fn new(check: impl Into<String>, n: usize, mode: Option<Mode>) -> Self {
        Self {
            check: check.into(),
            n,
            mode,
            items: Vec::new(),
            summary: None,
        }
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> + '_ {
        self.items.iter().filter(|i| !i.passed)
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = self.mode.map(Mode::name).unwrap_or("-");
        let passed = self.items.iter().filter(|i| i.passed).count();
        writeln!(
            f,
            "{} (n = {}, mode = {}): {} [{}/{} items]",
            self.check,
            self.n,
            mode,
            self.status(),
            passed,
            self.items.len()
        )?;
        if let Some(summary) = &self.summary {
            writeln!(f, "  {summary}")?;
        }
        for item in self.failures() {
            writeln!(f, "  FAIL {}", item.input)?;
            writeln!(f, "    expected: {}", item.expected)?;
            writeln!(f, "    got:      {}", item.got)?;
        }
        Ok(())
    }
}
