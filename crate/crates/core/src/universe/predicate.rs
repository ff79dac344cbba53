use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::KernelError;
use crate::fincore::FinSet;
use crate::wtrees::PredOnIndex;

/// The closed family of predicates on decoded sets. Each depends only on
/// the size of its argument, so all of them respect bijections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PredicateSpec {
    None,
    IsProp,
    IsContr,
    All,
    SizeLe(usize),
    SizeEq(usize),
}

impl PredicateSpec {
    pub fn holds(self, x: FinSet) -> bool {
        let n = x.size();
        match self {
            PredicateSpec::None => false,
            PredicateSpec::IsProp => n <= 1,
            PredicateSpec::IsContr => n == 1,
            PredicateSpec::All => true,
            PredicateSpec::SizeLe(k) => n <= k,
            PredicateSpec::SizeEq(k) => n == k,
        }
    }

    /// Whether every set satisfying the predicate has at most one element.
    pub fn implies_prop(self) -> bool {
        match self {
            PredicateSpec::None | PredicateSpec::IsProp | PredicateSpec::IsContr => true,
            PredicateSpec::All => false,
            PredicateSpec::SizeLe(k) | PredicateSpec::SizeEq(k) => k <= 1,
        }
    }

    pub fn to_pred(self) -> PredOnIndex<FinSet> {
        PredOnIndex::new(self.to_string(), move |x: &FinSet| self.holds(*x))
    }
}

impl fmt::Display for PredicateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PredicateSpec::None => write!(f, "none"),
            PredicateSpec::IsProp => write!(f, "isprop"),
            PredicateSpec::IsContr => write!(f, "iscontr"),
            PredicateSpec::All => write!(f, "all"),
            PredicateSpec::SizeLe(k) => write!(f, "size<={k}"),
            PredicateSpec::SizeEq(k) => write!(f, "size={k}"),
        }
    }
}

impl FromStr for PredicateSpec {
    type Err = KernelError;

    fn from_str(s: &str) -> Result<Self, KernelError> {
        let bad = || KernelError::ParseError {
            line: 1,
            col: 1,
            msg: format!(
                "unknown predicate `{s}`; expected none, isprop, iscontr, all, size<=K or size=K"
            ),
        };
        let s = s.trim();
        Ok(match s {
            "none" => PredicateSpec::None,
            "isprop" => PredicateSpec::IsProp,
            "iscontr" => PredicateSpec::IsContr,
            "all" => PredicateSpec::All,
            _ => {
                if let Some(k) = s.strip_prefix("size<=") {
                    PredicateSpec::SizeLe(k.parse().map_err(|_| bad())?)
                } else if let Some(k) = s.strip_prefix("size=") {
                    PredicateSpec::SizeEq(k.parse().map_err(|_| bad())?)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

impl Serialize for PredicateSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
