//! Tournament solution concepts.

mod banks;
mod basic;
mod bipartisan;

pub use banks::{banks_member, banks_member_with_witness, banks_set, dominance_order, BanksOutcome};
pub use basic::{copeland_set, top_cycle, two_step_kings, uncovered_set, uncovered_set_by_covering};
pub use bipartisan::{bipartisan_set, bipartisan_set_with_stats};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::set::ChoiceSet;
use crate::tournament::Tournament;

/// Identifier of a solution concept, for scans and the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    Copeland,
    TopCycle,
    Uncovered,
    Banks,
    Bipartisan,
}

impl Rule {
    pub const ALL: [Rule; 5] = [Rule::Copeland, Rule::TopCycle, Rule::Uncovered, Rule::Banks, Rule::Bipartisan];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Copeland => "copeland",
            Rule::TopCycle => "tc",
            Rule::Uncovered => "uc",
            Rule::Banks => "banks",
            Rule::Bipartisan => "bp",
        }
    }

    pub fn apply(self, t: &Tournament) -> Result<ChoiceSet> {
        Ok(match self {
            Rule::Copeland => copeland_set(t),
            Rule::TopCycle => top_cycle(t),
            Rule::Uncovered => uncovered_set(t),
            Rule::Banks => banks_set(t),
            Rule::Bipartisan => bipartisan_set(t)?.0,
        })
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "copeland" => Ok(Rule::Copeland),
            "tc" | "top_cycle" | "topcycle" => Ok(Rule::TopCycle),
            "uc" | "uncovered" => Ok(Rule::Uncovered),
            "banks" | "ba" => Ok(Rule::Banks),
            "bp" | "bipartisan" => Ok(Rule::Bipartisan),
            _ => Err(Error::UnknownRule(s.to_string())),
        }
    }
}
