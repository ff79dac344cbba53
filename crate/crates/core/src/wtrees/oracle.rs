//! Relatedness of trees as the least congruence generated by structural
//! identifications and by the truncation at predicate-satisfying indices,
//! computed by saturating a relation over an enumerated set of trees.

use std::collections::{HashMap, HashSet};

use super::{enumerate_trees, Forest, PredOnIndex, TreeId, WTree};
use crate::container::{ContainerSig, IdxPath};
use crate::error::{KernelError, Result};

pub struct SaturationOracle<S: ContainerSig> {
    related: HashSet<(S::Path, TreeId, TreeId)>,
    rounds: usize,
}

impl<S: ContainerSig> SaturationOracle<S> {
    /// Saturates over `trees`, which must be closed under subtrees.
    pub fn build(
        sig: &S,
        pred: &PredOnIndex<S::Index>,
        forest: &Forest<S>,
        trees: &[TreeId],
    ) -> Result<Self> {
        let members: HashSet<TreeId> = trees.iter().copied().collect();
        for &t in trees {
            if let Some(c) = forest.children(t).iter().find(|c| !members.contains(c)) {
                return Err(KernelError::precondition(format!(
                    "tree universe is not closed under subtrees: {:?} is missing",
                    forest.tree(*c)
                )));
            }
        }

        let mut candidates = Vec::new();
        for &t0 in trees {
            for &t1 in trees {
                for p in sig.idx_paths(forest.index(t0), forest.index(t1))? {
                    candidates.push((p, t0, t1));
                }
            }
        }

        let mut related: HashSet<(S::Path, TreeId, TreeId)> = HashSet::new();
        let mut rounds = 0;
        loop {
            rounds += 1;
            let mut changed = false;

            // Generators: truncation and structural identifications.
            for (p, t0, t1) in &candidates {
                if related.contains(&(p.clone(), *t0, *t1)) {
                    continue;
                }
                let generated = pred.holds(forest.index(*t0))
                    || sig
                        .shape_idents(forest.shape(*t0), forest.shape(*t1))?
                        .iter()
                        .any(|ident| {
                            &ident.target_path == p
                                && ident.src_paths.iter().enumerate().all(|(pos, q)| {
                                    let c0 = forest.children(*t0)[pos];
                                    let c1 = forest.children(*t1)[ident.pos_match[pos]];
                                    related.contains(&(q.clone(), c0, c1))
                                })
                        });
                if generated {
                    related.insert((p.clone(), *t0, *t1));
                    changed = true;
                }
            }

            // Closure under inverses and composition.
            let snapshot: Vec<_> = related.iter().cloned().collect();
            for (p, t0, t1) in &snapshot {
                if related.insert((p.invert(), *t1, *t0)) {
                    changed = true;
                }
            }
            let mut outgoing: HashMap<TreeId, Vec<(S::Path, TreeId)>> = HashMap::new();
            for (p, t0, t1) in &related {
                outgoing.entry(*t0).or_default().push((p.clone(), *t1));
            }
            let mut composed = Vec::new();
            for (p, t0, t1) in &related {
                for (q, t2) in outgoing.get(t1).into_iter().flatten() {
                    let pq = p.compose(q)?;
                    if !related.contains(&(pq.clone(), *t0, *t2)) {
                        composed.push((pq, *t0, *t2));
                    }
                }
            }
            for entry in composed {
                changed |= related.insert(entry);
            }

            if !changed {
                break;
            }
        }
        Ok(SaturationOracle { related, rounds })
    }

    pub fn related(&self, p: &S::Path, t0: TreeId, t1: TreeId) -> bool {
        self.related.contains(&(p.clone(), t0, t1))
    }

    pub fn len(&self) -> usize {
        self.related.len()
    }

    pub fn is_empty(&self) -> bool {
        self.related.is_empty()
    }

    pub fn rounds(&self) -> usize {
        self.rounds
    }
}

/// Decides whether `t0` and `t1` are related over `p` among all trees of
/// depth at most `depth` (signatures with a finite index only).
pub fn tree_eq_oracle<S: ContainerSig>(
    sig: &S,
    pred: &PredOnIndex<S::Index>,
    depth: usize,
    p: &S::Path,
    t0: &WTree<S::Shape>,
    t1: &WTree<S::Shape>,
) -> Result<bool> {
    if t0.depth() > depth || t1.depth() > depth {
        return Err(KernelError::precondition(format!(
            "trees exceed depth {depth}"
        )));
    }
    let mut forest = Forest::new();
    let trees = enumerate_trees(sig, &mut forest, depth, super::DEFAULT_TREE_CAP)?;
    let (a, b) = (forest.insert(sig, t0)?, forest.insert(sig, t1)?);
    let oracle = SaturationOracle::build(sig, pred, &forest, &trees)?;
    Ok(oracle.related(p, a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::container::{FiniteContainerTable, LabelPath, TableShape};

    fn sig() -> FiniteContainerTable {
        FiniteContainerTable::new(
            vec!["a".into(), "b".into()],
            vec![
                TableShape { name: "x".into(), target: 0, positions: vec![] },
                TableShape { name: "y".into(), target: 0, positions: vec![] },
                TableShape { name: "u".into(), target: 1, positions: vec![] },
                TableShape { name: "v".into(), target: 1, positions: vec![] },
            ],
        )
        .unwrap()
    }

    #[test]
    fn reflexive() {
        let s = sig();
        let t = WTree::leaf(0);
        assert!(tree_eq_oracle(&s, &PredOnIndex::never(), 1, &LabelPath(0), &t, &t).unwrap());
    }

    #[test]
    fn distinct_leaves_unrelated() {
        let s = sig();
        let r = tree_eq_oracle(&s, &PredOnIndex::never(), 1, &LabelPath(0), &WTree::leaf(0), &WTree::leaf(1));
        assert!(!r.unwrap());
    }

    #[test]
    fn truncated_index_relates_everything() {
        let s = sig();
        let p = PredOnIndex::new("b", |&i| i == 1);
        assert!(tree_eq_oracle(&s, &p, 1, &LabelPath(1), &WTree::leaf(2), &WTree::leaf(3)).unwrap());
        assert!(!tree_eq_oracle(&s, &p, 1, &LabelPath(0), &WTree::leaf(0), &WTree::leaf(1)).unwrap());
    }

    #[test]
    fn depth_is_enforced() {
        let s = sig();
        let deep = WTree::node(0, vec![]);
        assert!(tree_eq_oracle(&s, &PredOnIndex::never(), 0, &LabelPath(0), &deep, &deep).is_err());
    }
}
