//! Canonical finite sets `{0..n-1}`, maps and bijections between them.
//!
//! This is the ground model: every decoded type is a `FinSet`, and a path
//! between two finite sets is a `Bij`. Enumeration is lexicographic and
//! capped; exceeding a cap is an error rather than a truncated result.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{KernelError, Result};

/// Largest number of maps `enum_maps` will produce.
pub const MAX_MAPS: u128 = 1_000_000;

/// Largest set size `enum_bijs` will permute by default.
pub const DEFAULT_BIJ_CAP: usize = 6;

/// The finite set `{0, .., size-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinSet(pub usize);

impl FinSet {
    pub fn size(self) -> usize {
        self.0
    }

    pub fn elements(self) -> std::ops::Range<usize> {
        0..self.0
    }

    pub fn contains(self, x: usize) -> bool {
        x < self.0
    }

    pub fn trunc_level(self) -> TruncLevel {
        trunc_level(self)
    }

    pub fn is_prop(self) -> bool {
        self.0 <= 1
    }

    pub fn is_contr(self) -> bool {
        self.0 == 1
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fin({})", self.0)
    }
}

/// A function `dom -> cod`, stored as its sequence of targets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ElemMap {
    cod: FinSet,
    targets: Vec<usize>,
}

impl ElemMap {
    pub fn new(cod: FinSet, targets: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = targets.iter().find(|&&t| !cod.contains(t)) {
            return Err(KernelError::ElementOutOfRange {
                elem: bad,
                size: cod.size(),
            });
        }
        Ok(ElemMap { cod, targets })
    }

    pub fn identity(a: FinSet) -> Self {
        ElemMap {
            cod: a,
            targets: a.elements().collect(),
        }
    }

    pub fn constant(dom: FinSet, cod: FinSet, value: usize) -> Result<Self> {
        ElemMap::new(cod, vec![value; dom.size()])
    }

    pub fn dom(&self) -> FinSet {
        FinSet(self.targets.len())
    }

    pub fn cod(&self) -> FinSet {
        self.cod
    }

    pub fn targets(&self) -> &[usize] {
        &self.targets
    }

    pub fn apply(&self, x: usize) -> usize {
        self.targets[x]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ElemMap) -> Result<ElemMap> {
        if self.cod != other.dom() {
            return Err(KernelError::DomainMismatch(format!(
                "cannot compose a map into {} with a map out of {}",
                self.cod,
                other.dom()
            )));
        }
        Ok(ElemMap {
            cod: other.cod,
            targets: self.targets.iter().map(|&x| other.apply(x)).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        self.targets
            .iter()
            .all(|&t| !std::mem::replace(&mut seen[t], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        for &t in &self.targets {
            seen[t] = true;
        }
        seen.into_iter().all(|b| b)
    }
}

/// An invertible map, carrying both directions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bij {
    fwd: ElemMap,
    inv: ElemMap,
}

// The inverse is determined by the forward map, so hashing one suffices.
impl std::hash::Hash for Bij {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.fwd.targets.hash(state);
    }
}

impl Bij {
    pub fn identity(a: FinSet) -> Self {
        Bij {
            fwd: ElemMap::identity(a),
            inv: ElemMap::identity(a),
        }
    }

    /// Builds a bijection from its forward targets, rejecting non-permutations.
    pub fn from_targets(targets: Vec<usize>) -> Result<Self> {
        let n = targets.len();
        let fwd = ElemMap::new(FinSet(n), targets)?;
        Bij::from_map(fwd)
    }

    pub fn from_map(fwd: ElemMap) -> Result<Self> {
        if fwd.dom() != fwd.cod() || !fwd.is_injective() {
            return Err(KernelError::DomainMismatch(format!(
                "map {:?} is not a bijection",
                fwd.targets()
            )));
        }
        let mut inv = vec![0; fwd.dom().size()];
        for (x, &y) in fwd.targets().iter().enumerate() {
            inv[y] = x;
        }
        let inv = ElemMap {
            cod: fwd.dom(),
            targets: inv,
        };
        Ok(Bij { fwd, inv })
    }

    pub fn dom(&self) -> FinSet {
        self.fwd.dom()
    }

    pub fn cod(&self) -> FinSet {
        self.fwd.cod()
    }

    pub fn fwd(&self) -> &ElemMap {
        &self.fwd
    }

    pub fn inv(&self) -> &ElemMap {
        &self.inv
    }

    pub fn apply(&self, x: usize) -> usize {
        self.fwd.apply(x)
    }

    pub fn apply_inv(&self, y: usize) -> usize {
        self.inv.apply(y)
    }

    pub fn is_identity(&self) -> bool {
        self.fwd.targets().iter().enumerate().all(|(i, &t)| i == t)
    }
}

impl fmt::Display for Bij {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.fwd.targets().iter().join(" "))
    }
}

/// Truncation levels that occur for finite sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TruncLevel {
    Contractible,
    Prop,
    Set,
}

impl TruncLevel {
    pub fn level(self) -> i8 {
        match self {
            TruncLevel::Contractible => -2,
            TruncLevel::Prop => -1,
            TruncLevel::Set => 0,
        }
    }

    /// Whether a type at this level is also `n`-truncated.
    pub fn is_truncated_at(self, n: i8) -> bool {
        self.level() <= n
    }
}

pub fn trunc_level(a: FinSet) -> TruncLevel {
    match a.size() {
        1 => TruncLevel::Contractible,
        0 => TruncLevel::Prop,
        _ => TruncLevel::Set,
    }
}

pub fn is_prop(a: FinSet) -> bool {
    trunc_level(a).is_truncated_at(-1)
}

pub fn is_contr(a: FinSet) -> bool {
    trunc_level(a) == TruncLevel::Contractible
}

/// Number of maps `a -> b`, saturating.
pub fn count_maps(a: FinSet, b: FinSet) -> u128 {
    (b.size() as u128)
        .checked_pow(a.size() as u32)
        .unwrap_or(u128::MAX)
}

/// All maps `a -> b`, lexicographic in their target sequences.
pub fn enum_maps(a: FinSet, b: FinSet) -> Result<Vec<ElemMap>> {
    let total = count_maps(a, b);
    if total > MAX_MAPS {
        return Err(KernelError::too_large(
            format!("maps {a} -> {b}"),
            total,
            MAX_MAPS,
        ));
    }
    if a.size() == 0 {
        return Ok(vec![ElemMap::new(b, Vec::new())?]);
    }
    Ok(std::iter::repeat_n(b.elements(), a.size())
        .multi_cartesian_product()
        .map(|targets| ElemMap { cod: b, targets })
        .collect())
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// All bijections `a -> b` in lexicographic order, with the default cap.
pub fn enum_bijs(a: FinSet, b: FinSet) -> Result<Vec<Bij>> {
    enum_bijs_capped(a, b, DEFAULT_BIJ_CAP)
}

pub fn enum_bijs_capped(a: FinSet, b: FinSet, cap: usize) -> Result<Vec<Bij>> {
    if a != b {
        return Ok(Vec::new());
    }
    let n = a.size();
    if n > cap {
        return Err(KernelError::too_large(
            format!("bijections of {a}"),
            factorial(n),
            factorial(cap),
        ));
    }
    Ok((0..n)
        .permutations(n)
        .map(|targets| Bij::from_targets(targets).expect("permutation"))
        .collect())
}

/// `q ∘ p`: first `p`, then `q`.
pub fn compose_bij(p: &Bij, q: &Bij) -> Result<Bij> {
    let fwd = p.fwd.then(&q.fwd)?;
    let inv = q.inv.then(&p.inv)?;
    Ok(Bij { fwd, inv })
}

pub fn invert_bij(p: &Bij) -> Bij {
    Bij {
        fwd: p.inv.clone(),
        inv: p.fwd.clone(),
    }
}
