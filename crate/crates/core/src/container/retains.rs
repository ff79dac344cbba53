//! Checking that a container retains 0-truncation: whenever all pairs of
//! children have propositional dependent-equality sets, so does the equality
//! of the two extension elements.

use std::collections::HashMap;

use rand::Rng;
use serde::Serialize;

use super::{assignments, ContainerSig, FamilyAssignment, ShapeIdent};
use crate::error::{KernelError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RetainsViolation {
    pub shape0: String,
    pub args0: Vec<usize>,
    pub shape1: String,
    pub args1: Vec<usize>,
    /// Size of the equality witness set; a violation has more than one.
    pub witnesses: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RetainsReport {
    pub pairs_checked: u64,
    pub premise_failed: u64,
    pub violation_count: u64,
    /// The first few violating pairs.
    pub violations: Vec<RetainsViolation>,
}

impl RetainsReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

const KEPT_VIOLATIONS: usize = 16;

type IdentPair<S> = (
    <S as ContainerSig>::Shape,
    <S as ContainerSig>::Shape,
    Vec<ShapeIdent<<S as ContainerSig>::Path>>,
);

/// Precomputes the identifiable shape pairs over a fixed set of indices so
/// that many families can be checked cheaply.
pub struct RetainsChecker<'a, S: ContainerSig> {
    sig: &'a S,
    indices: Vec<S::Index>,
    pairs: Vec<IdentPair<S>>,
}

impl<'a, S: ContainerSig> RetainsChecker<'a, S> {
    pub fn new(sig: &'a S, indices: Vec<S::Index>) -> Result<Self> {
        let shapes = sig.shapes_over(&indices)?;
        let mut pairs = Vec::new();
        for s0 in &shapes {
            for s1 in &shapes {
                let idents = sig.shape_idents(s0, s1)?;
                if !idents.is_empty() {
                    pairs.push((s0.clone(), s1.clone(), idents));
                }
            }
        }
        Ok(RetainsChecker { sig, indices, pairs })
    }

    pub fn indices(&self) -> &[S::Index] {
        &self.indices
    }

    pub fn check(&self, family: &FamilyAssignment<S::Path>) -> Result<RetainsReport> {
        let sig = self.sig;
        if let Some(stray) = family.indices().iter().find(|i| !self.indices.contains(i)) {
            return Err(KernelError::precondition(format!(
                "family assigns index {stray:?} outside the checked range"
            )));
        }
        let lookup = |p: &S::Path, u: usize, v: usize| {
            family.witnesses(p, u, v).ok_or_else(|| {
                KernelError::precondition(format!("no witness count for ({u}, {v}) over {p:?}"))
            })
        };
        // Σ_q of child witnesses, keyed by the two source indices and inhabitants.
        let mut child_sets: HashMap<(S::Index, S::Index, usize, usize), u64> = HashMap::new();
        let mut report = RetainsReport::default();

        for (s0, s1, idents) in &self.pairs {
            let src0 = sig.sources(s0);
            let src1 = sig.sources(s1);
            for t0 in assignments(sig, family, s0) {
                for t1 in assignments(sig, family, s1) {
                    let mut premise = true;
                    'premise: for (p0, j0) in src0.iter().enumerate() {
                        for (p1, j1) in src1.iter().enumerate() {
                            let key = (j0.clone(), j1.clone(), t0[p0], t1[p1]);
                            let total = match child_sets.get(&key) {
                                Some(&n) => n,
                                None => {
                                    let mut n = 0u64;
                                    for q in sig.idx_paths(j0, j1)? {
                                        n += u64::from(lookup(&q, t0[p0], t1[p1])?);
                                    }
                                    child_sets.insert(key, n);
                                    n
                                }
                            };
                            if total > 1 {
                                premise = false;
                                break 'premise;
                            }
                        }
                    }
                    if !premise {
                        report.premise_failed += 1;
                        continue;
                    }
                    let mut witnesses = 0u64;
                    for ident in idents {
                        let mut product = 1u64;
                        for (pos, path) in ident.src_paths.iter().enumerate() {
                            product *= u64::from(lookup(path, t0[pos], t1[ident.pos_match[pos]])?);
                            if product == 0 {
                                break;
                            }
                        }
                        witnesses += product;
                    }
                    report.pairs_checked += 1;
                    if witnesses > 1 {
                        report.violation_count += 1;
                        if report.violations.len() < KEPT_VIOLATIONS {
                            report.violations.push(RetainsViolation {
                                shape0: format!("{s0:?}"),
                                args0: t0.clone(),
                                shape1: format!("{s1:?}"),
                                args1: t1.clone(),
                                witnesses,
                            });
                        }
                    }
                }
            }
        }
        Ok(report)
    }
}

/// Checks one family over the indices it assigns.
pub fn retains_check<S: ContainerSig>(
    sig: &S,
    family: &FamilyAssignment<S::Path>,
) -> Result<RetainsReport> {
    RetainsChecker::new(sig, family.indices().to_vec())?.check(family)
}

/// A random family over `indices` with complete witness tables.
///
/// Most indices are declared prop-valued; over those, each pair of
/// inhabitants is related along at most one path. The remaining indices get
/// arbitrary counts in `0..=2`, which exercises the premise.
pub fn sample_family<S: ContainerSig, R: Rng>(
    sig: &S,
    indices: &[S::Index],
    rng: &mut R,
) -> Result<FamilyAssignment<S::Path>> {
    let mut family = FamilyAssignment::new();
    for i in indices {
        let n = rng.gen_range(0..=2);
        family.set_inhabitants(i.clone(), n, rng.gen_bool(0.7));
    }
    for i0 in indices {
        for i1 in indices {
            let paths = sig.idx_paths(i0, i1)?;
            if paths.is_empty() {
                continue;
            }
            let prop = family.is_prop_valued(i0) || family.is_prop_valued(i1);
            for u in 0..family.inhabitants(i0) {
                for v in 0..family.inhabitants(i1) {
                    let chosen = rng.gen_range(0..=paths.len());
                    for (k, q) in paths.iter().enumerate() {
                        let count = if prop {
                            u32::from(k == chosen)
                        } else {
                            rng.gen_range(0..=2)
                        };
                        family.set_witnesses(q.clone(), u, v, count)?;
                    }
                }
            }
        }
    }
    Ok(family)
}
