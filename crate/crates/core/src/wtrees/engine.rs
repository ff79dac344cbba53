use rustc_hash::FxHashMap as HashMap;
use std::sync::Arc;

use serde::Serialize;

use super::{
    enumerate_trees, Forest, PredOnIndex, SaturationOracle, ShapeId, TreeId, WTree, Witness,
    WitnessSet,
};
use crate::container::{ContainerSig, IdxPath, ShapeIdent};
use crate::error::{KernelError, Result};

/// Largest witness set `eq_witnesses` will materialize.
pub const MAX_WITNESSES: u64 = 100_000;

pub type Idents<P> = Arc<Vec<Arc<ShapeIdent<P>>>>;

type SetRef<P> = Arc<WitnessSet<P>>;
/// Every path between two indices with one witness over it.
pub type PathWitnesses<P> = Vec<(P, Witness<P>)>;
type CountMap<P> = Arc<HashMap<P, u64>>;

/// Computes equality codes between trees of a forest, memoizing per
/// `(path, tree, tree)`. One engine serves one signature and one predicate.
pub struct EqEngine<'s, S: ContainerSig> {
    sig: &'s S,
    pred: PredOnIndex<S::Index>,
    forest: Forest<S>,
    idents: HashMap<(ShapeId, ShapeId), Idents<S::Path>>,
    counts: HashMap<(TreeId, TreeId), CountMap<S::Path>>,
    sets: HashMap<(S::Path, TreeId, TreeId), SetRef<S::Path>>,
}

impl<'s, S: ContainerSig> EqEngine<'s, S> {
    pub fn new(sig: &'s S, pred: PredOnIndex<S::Index>) -> Self {
        Self::with_forest(sig, pred, Forest::new())
    }

    pub fn with_forest(sig: &'s S, pred: PredOnIndex<S::Index>, forest: Forest<S>) -> Self {
        EqEngine {
            sig,
            pred,
            forest,
            idents: HashMap::default(),
            counts: HashMap::default(),
            sets: HashMap::default(),
        }
    }

    /// A fresh engine over a copy of the same forest, with empty memo tables.
    pub fn fork(&self) -> Self {
        Self::with_forest(self.sig, self.pred.clone(), self.forest.clone())
    }

    pub fn sig(&self) -> &'s S {
        self.sig
    }

    pub fn pred(&self) -> &PredOnIndex<S::Index> {
        &self.pred
    }

    pub fn forest(&self) -> &Forest<S> {
        &self.forest
    }

    pub fn forest_mut(&mut self) -> &mut Forest<S> {
        &mut self.forest
    }

    pub fn insert(&mut self, t: &WTree<S::Shape>) -> Result<TreeId> {
        self.forest.insert(self.sig, t)
    }

    pub fn index(&self, t: TreeId) -> &S::Index {
        self.forest.index(t)
    }

    /// The identifications between the top shapes of two trees, memoized.
    pub fn idents(&mut self, t0: TreeId, t1: TreeId) -> Result<Idents<S::Path>> {
        let key = (self.forest.shape_id(t0), self.forest.shape_id(t1));
        if let Some(found) = self.idents.get(&key) {
            return Ok(found.clone());
        }
        let list: Vec<_> = self
            .sig
            .shape_idents(self.forest.shape(t0), self.forest.shape(t1))?
            .into_iter()
            .map(Arc::new)
            .collect();
        let list = Arc::new(list);
        self.idents.insert(key, list.clone());
        Ok(list)
    }

    fn check_path(&self, p: &S::Path, t0: TreeId, t1: TreeId) -> Result<()> {
        if &p.source() != self.index(t0) || &p.target() != self.index(t1) {
            return Err(KernelError::precondition(format!(
                "path {p:?} does not connect {:?} to {:?}",
                self.index(t0),
                self.index(t1)
            )));
        }
        Ok(())
    }

    /// Number of equality codes over `p`; agrees with `eq_witnesses(..).len()`
    /// without building the witnesses.
    pub fn eq_count(&mut self, p: &S::Path, t0: TreeId, t1: TreeId) -> Result<u64> {
        self.check_path(p, t0, t1)?;
        self.count_unchecked(p, t0, t1)
    }

    fn count_unchecked(&mut self, p: &S::Path, t0: TreeId, t1: TreeId) -> Result<u64> {
        if self.pred.holds(self.forest.index(t0)) {
            return Ok(1);
        }
        if let Some(found) = self.counts.get(&(t0, t1)) {
            return Ok(found.get(p).copied().unwrap_or(0));
        }
        Ok(self.counts_by_path(t0, t1)?.get(p).copied().unwrap_or(0))
    }

    /// Nonzero counts over every path at once, so that each pair of trees
    /// walks its identifications a single time.
    fn counts_by_path(&mut self, t0: TreeId, t1: TreeId) -> Result<CountMap<S::Path>> {
        if let Some(found) = self.counts.get(&(t0, t1)) {
            return Ok(found.clone());
        }
        let mut map: HashMap<S::Path, u64> = HashMap::default();
        for ident in self.idents(t0, t1)?.iter() {
            let n = self.ident_count(ident, t0, t1)?;
            if n > 0 {
                let slot = map.entry(ident.target_path.clone()).or_default();
                *slot = slot.saturating_add(n);
            }
        }
        let map = Arc::new(map);
        self.counts.insert((t0, t1), map.clone());
        Ok(map)
    }

    fn ident_count(&mut self, ident: &ShapeIdent<S::Path>, t0: TreeId, t1: TreeId) -> Result<u64> {
        let mut product = 1u64;
        for (pos, path) in ident.src_paths.iter().enumerate() {
            let c0 = self.forest.children(t0)[pos];
            let c1 = self.forest.children(t1)[ident.pos_match[pos]];
            product = product.saturating_mul(self.count_unchecked(path, c0, c1)?);
            if product == 0 {
                break;
            }
        }
        Ok(product)
    }

    /// Total number of equality codes over every path between the indices
    /// of the two trees.
    pub fn total_count(&mut self, t0: TreeId, t1: TreeId) -> Result<u64> {
        let (i0, i1) = (self.index(t0).clone(), self.index(t1).clone());
        if self.pred.holds(&i0) {
            return Ok(self.sig.idx_paths(&i0, &i1)?.len() as u64);
        }
        // Each identification lies over exactly one path, so summing over
        // identifications covers every path once.
        let mut total = 0u64;
        for ident in self.idents(t0, t1)?.iter() {
            total = total.saturating_add(self.ident_count(ident, t0, t1)?);
        }
        Ok(total)
    }

    pub fn eq_witnesses(
        &mut self,
        p: &S::Path,
        t0: TreeId,
        t1: TreeId,
    ) -> Result<Arc<WitnessSet<S::Path>>> {
        self.check_path(p, t0, t1)?;
        let n = self.count_unchecked(p, t0, t1)?;
        if n > MAX_WITNESSES {
            return Err(KernelError::too_large(
                "equality witnesses",
                u128::from(n),
                u128::from(MAX_WITNESSES),
            ));
        }
        self.witnesses_unchecked(p, t0, t1)
    }

    fn witnesses_unchecked(
        &mut self,
        p: &S::Path,
        t0: TreeId,
        t1: TreeId,
    ) -> Result<Arc<WitnessSet<S::Path>>> {
        let key = (p.clone(), t0, t1);
        if let Some(found) = self.sets.get(&key) {
            return Ok(found.clone());
        }
        let witnesses = if self.pred.holds(self.forest.index(t0)) {
            vec![Witness::Collapsed]
        } else {
            let mut out = Vec::new();
            for ident in self.idents(t0, t1)?.iter() {
                if &ident.target_path != p {
                    continue;
                }
                let mut per_pos = Vec::with_capacity(ident.src_paths.len());
                for (pos, path) in ident.src_paths.iter().enumerate() {
                    let c0 = self.forest.children(t0)[pos];
                    let c1 = self.forest.children(t1)[ident.pos_match[pos]];
                    per_pos.push(self.witnesses_unchecked(path, c0, c1)?);
                }
                // Lexicographic product of the per-position witness sets.
                let mut partial: Vec<Vec<Witness<S::Path>>> = vec![Vec::new()];
                for set in &per_pos {
                    let mut next = Vec::with_capacity(partial.len() * set.len());
                    for prefix in &partial {
                        for w in &set.witnesses {
                            let mut v = prefix.clone();
                            v.push(w.clone());
                            next.push(v);
                        }
                    }
                    partial = next;
                }
                out.extend(partial.into_iter().map(|children| Witness::Inr {
                    ident: ident.clone(),
                    children,
                }));
            }
            out
        };
        let set = Arc::new(WitnessSet {
            path: p.clone(),
            witnesses,
        });
        self.sets.insert(key, set.clone());
        Ok(set)
    }

    /// Every equality code over every path, tagged by its path.
    pub fn total_witnesses(&mut self, t0: TreeId, t1: TreeId) -> Result<PathWitnesses<S::Path>> {
        let paths = self.sig.idx_paths(self.index(t0), self.index(t1))?;
        let mut out = Vec::new();
        for p in paths {
            let set = self.eq_witnesses(&p, t0, t1)?;
            out.extend(set.witnesses.iter().map(|w| (p.clone(), w.clone())));
        }
        Ok(out)
    }

    /// The code of reflexivity at `t`.
    pub fn encode_refl(&self, t: TreeId) -> Witness<S::Path> {
        if self.pred.holds(self.forest.index(t)) {
            return Witness::Collapsed;
        }
        let shape = self.forest.shape(t);
        Witness::Inr {
            ident: Arc::new(self.sig.refl_ident(shape)),
            children: self
                .forest
                .children(t)
                .iter()
                .map(|&c| self.encode_refl(c))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EncodeDecodeFailure {
    pub tree0: String,
    pub tree1: String,
    pub path: String,
    pub witnesses: u64,
    pub oracle: bool,
    /// Structural equality along the path, when the predicate never holds.
    pub structural: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EncodeDecodeReport {
    pub trees: usize,
    pub instances: u64,
    pub failures: Vec<EncodeDecodeFailure>,
}

impl EncodeDecodeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares equality codes with the oracle on every pair of `trees` and
/// every path between their indices. With `structural` set, nonemptiness
/// must also coincide with syntactic equality along reflexivity.
pub fn encode_decode_instances<S: ContainerSig>(
    engine: &mut EqEngine<'_, S>,
    oracle: &SaturationOracle<S>,
    trees: &[TreeId],
    structural: bool,
) -> Result<EncodeDecodeReport> {
    let sig = engine.sig();
    let mut report = EncodeDecodeReport {
        trees: trees.len(),
        ..Default::default()
    };
    for &t0 in trees {
        for &t1 in trees {
            let (i0, i1) = (engine.index(t0).clone(), engine.index(t1).clone());
            for p in sig.idx_paths(&i0, &i1)? {
                report.instances += 1;
                let n = engine.eq_count(&p, t0, t1)?;
                let related = oracle.related(&p, t0, t1);
                let structurally = structural.then(|| t0 == t1 && p.is_refl());
                let agrees = n <= 1
                    && (n == 1) == related
                    && structurally.is_none_or(|s| s == (n == 1));
                if !agrees {
                    report.failures.push(EncodeDecodeFailure {
                        tree0: format!("{:?}", engine.forest().tree(t0)),
                        tree1: format!("{:?}", engine.forest().tree(t1)),
                        path: format!("{p:?}"),
                        witnesses: n,
                        oracle: related,
                        structural: structurally,
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Encode-decode check over all trees of depth at most `depth` of a
/// signature with a finite index.
pub fn verify_encode_decode<S: ContainerSig>(
    sig: &S,
    pred: PredOnIndex<S::Index>,
    depth: usize,
) -> Result<EncodeDecodeReport> {
    let mut forest = Forest::new();
    let trees = enumerate_trees(sig, &mut forest, depth, super::DEFAULT_TREE_CAP)?;
    let domain = sig.index_domain().unwrap_or_default();
    let never = domain.iter().all(|i| !pred.holds(i));
    let oracle = SaturationOracle::build(sig, &pred, &forest, &trees)?;
    let mut engine = EqEngine::with_forest(sig, pred, forest);
    encode_decode_instances(&mut engine, &oracle, &trees, never)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colimits::join;
    use crate::container::{Coproduct, FiniteContainerTable, LabelPath, TableShape};
    use crate::fincore::FinSet;

    fn shape(name: &str, target: usize, srcs: &[usize]) -> TableShape {
        TableShape {
            name: name.into(),
            target,
            positions: srcs.iter().enumerate().map(|(k, &l)| (format!("p{k}"), l)).collect(),
        }
    }

    fn two_shapes() -> FiniteContainerTable {
        FiniteContainerTable::new(
            vec!["a".into()],
            vec![shape("leaf", 0, &[]), shape("node", 0, &[0, 0])],
        )
        .unwrap()
    }

    #[test]
    fn collapse_when_predicate_holds() {
        let sig = two_shapes();
        let mut e = EqEngine::new(&sig, PredOnIndex::new("a", |&i| i == 0));
        let l = e.insert(&WTree::leaf(0)).unwrap();
        let n = e.insert(&WTree::node(1, vec![WTree::leaf(0), WTree::leaf(0)])).unwrap();
        let set = e.eq_witnesses(&LabelPath(0), l, n).unwrap();
        assert_eq!(set.witnesses, vec![Witness::Collapsed]);
    }

    #[test]
    fn reflexivity_only_without_predicate() {
        let sig = two_shapes();
        let mut e = EqEngine::new(&sig, PredOnIndex::never());
        let l = e.insert(&WTree::leaf(0)).unwrap();
        let set = e.eq_witnesses(&LabelPath(0), l, l).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(set.witnesses[0], e.encode_refl(l));
    }

    #[test]
    fn cross_tag_shapes_are_unequal() {
        let a = FiniteContainerTable::new(vec!["a".into()], vec![shape("x", 0, &[])]).unwrap();
        let b = FiniteContainerTable::new(vec!["a".into()], vec![shape("y", 0, &[])]).unwrap();
        let c = Coproduct::new(a, b).unwrap();
        let mut e = EqEngine::new(&c, PredOnIndex::never());
        use crate::container::Tagged;
        let l = e.insert(&WTree::leaf(Tagged::Left(0))).unwrap();
        let r = e.insert(&WTree::leaf(Tagged::Right(0))).unwrap();
        assert!(e.eq_witnesses(&LabelPath(0), l, r).unwrap().is_empty());
        assert_eq!(e.total_count(l, r).unwrap(), 0);
    }

    #[test]
    fn encode_refl_is_a_member_at_depth_two() {
        let sig = two_shapes();
        let mut e = EqEngine::new(&sig, PredOnIndex::never());
        let t = e
            .insert(&WTree::node(1, vec![WTree::leaf(0), WTree::leaf(0)]))
            .unwrap();
        let set = e.eq_witnesses(&LabelPath(0), t, t).unwrap();
        assert_eq!(set.witnesses, vec![e.encode_refl(t)]);
    }

    #[test]
    fn rejects_disconnected_path() {
        let sig = FiniteContainerTable::new(
            vec!["a".into(), "b".into()],
            vec![shape("x", 0, &[]), shape("y", 1, &[])],
        )
        .unwrap();
        let mut e = EqEngine::new(&sig, PredOnIndex::never());
        let x = e.insert(&WTree::leaf(0)).unwrap();
        let y = e.insert(&WTree::leaf(1)).unwrap();
        assert!(matches!(
            e.eq_witnesses(&LabelPath(0), x, y),
            Err(KernelError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn join_rule_matches_pushout() {
        // |P ⋆ Eq'| computed through the set-level join equals the witness count.
        let sig = two_shapes();
        let mut forest = Forest::new();
        let trees = enumerate_trees(&sig, &mut forest, 2, 100).unwrap();
        for pred in [PredOnIndex::never(), PredOnIndex::new("all", |_| true)] {
            let holds = pred.holds(&0);
            let mut structural = EqEngine::with_forest(&sig, PredOnIndex::never(), forest.clone());
            let mut e = EqEngine::with_forest(&sig, pred, forest.clone());
            for &a in &trees {
                for &b in &trees {
                    let eq_prime = structural.eq_count(&LabelPath(0), a, b).unwrap() as usize;
                    let joined = join(FinSet(usize::from(holds)), FinSet(eq_prime));
                    assert_eq!(joined.size() as u64, e.eq_count(&LabelPath(0), a, b).unwrap());
                }
            }
        }
    }

    #[test]
    fn counts_match_materialized_sets() {
        let sig = two_shapes();
        let mut forest = Forest::new();
        let trees = enumerate_trees(&sig, &mut forest, 3, 200).unwrap();
        let mut e = EqEngine::with_forest(&sig, PredOnIndex::never(), forest);
        for &a in &trees {
            for &b in &trees {
                let n = e.eq_count(&LabelPath(0), a, b).unwrap();
                assert_eq!(n as usize, e.eq_witnesses(&LabelPath(0), a, b).unwrap().len());
            }
        }
    }

    #[test]
    fn encode_decode_on_small_table() {
        let sig = two_shapes();
        let r = verify_encode_decode(&sig, PredOnIndex::never(), 2).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.trees, 2);
        let r = verify_encode_decode(&sig, PredOnIndex::new("all", |_| true), 3).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }
}
