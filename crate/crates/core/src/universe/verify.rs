//! Verification suites over the enumerated code universe.
//!
//! A suite visits every ordered pair of codes. Pairs are grouped into
//! blocks on which the engine's answer is constant by construction: pairs
//! whose decodings differ in size (no bijection exists), pairs of one size
//! at which the predicate holds (the path set collapses), and pairs of top
//! shapes without identifications. Such a block is evaluated on one
//! representative pair and counted once per member pair. Every other pair
//! is evaluated individually.

use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use petgraph::unionfind::UnionFind;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::code::Code;
use super::enumerate::enumerate_code_ids;
use super::predicate::PredicateSpec;
use super::vsig::{Former, NullarySignature, VShape, VSignature};
use crate::container::{
    ident_is_well_typed, sample_family, ContainerSig, Coproduct, RetainsChecker,
};
use crate::error::{KernelError, Result};
use crate::fincore::{enum_bijs_capped, Bij, FinSet};
use crate::report::VerifyReport;
use crate::wtrees::{EqEngine, Forest, Idents, SaturationOracle, TreeId, WTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CodeBudget {
    pub max_nodes: usize,
    pub max_el: usize,
}

impl Default for CodeBudget {
    fn default() -> Self {
        CodeBudget { max_nodes: 5, max_el: 6 }
    }
}

/// Budget for the saturation oracle comparison, which is quadratic in
/// pairs times paths and far slower than the engine.
pub const ORACLE_BUDGET: CodeBudget = CodeBudget { max_nodes: 3, max_el: 3 };

struct SizeGroup {
    size: usize,
    members: Vec<TreeId>,
    /// Members with the same top shape, in order of first appearance.
    classes: Vec<Vec<TreeId>>,
}

/// Every code within a budget, interned once and shared by the suites.
pub struct CodeUniverse {
    sig: VSignature,
    budget: CodeBudget,
    forest: Forest<VSignature>,
    ids: Vec<TreeId>,
    trees: Vec<WTree<VShape>>,
    groups: Vec<SizeGroup>,
}

impl CodeUniverse {
    pub fn build(sig: &VSignature, budget: CodeBudget) -> Result<Self> {
        let mut forest = Forest::new();
        let ids = enumerate_code_ids(sig, &mut forest, budget.max_nodes, budget.max_el)?;
        let trees = forest.ids().map(|t| forest.tree(t)).collect();
        let mut groups: Vec<SizeGroup> = Vec::new();
        let mut class_of: HashMap<(usize, &VShape), (usize, usize)> = HashMap::new();
        for size in ids.iter().map(|&t| forest.index(t).size()).sorted().dedup() {
            groups.push(SizeGroup { size, members: Vec::new(), classes: Vec::new() });
        }
        for &t in &ids {
            let size = forest.index(t).size();
            let g = groups.iter().position(|g| g.size == size).expect("size group");
            groups[g].members.push(t);
            let next = groups[g].classes.len();
            let (_, c) = *class_of.entry((g, forest.shape(t))).or_insert((g, next));
            if c == next {
                groups[g].classes.push(Vec::new());
            }
            groups[g].classes[c].push(t);
        }
        drop(class_of);
        Ok(CodeUniverse {
            sig: sig.clone(),
            budget,
            forest,
            ids,
            trees,
            groups,
        })
    }

    pub fn sig(&self) -> &VSignature {
        &self.sig
    }

    pub fn budget(&self) -> CodeBudget {
        self.budget
    }

    pub fn ids(&self) -> &[TreeId] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn forest(&self) -> &Forest<VSignature> {
        &self.forest
    }

    pub fn tree(&self, t: TreeId) -> &WTree<VShape> {
        &self.trees[t.index()]
    }

    pub fn code(&self, t: TreeId) -> Code {
        self.sig.from_tree(self.tree(t))
    }

    pub fn size(&self, t: TreeId) -> usize {
        self.forest.index(t).size()
    }

    pub fn engine(&self, pred: PredicateSpec) -> EqEngine<'_, VSignature> {
        EqEngine::with_forest(&self.sig, pred.to_pred(), self.forest.clone())
    }

    fn pair(&self, t0: TreeId, t1: TreeId) -> String {
        format!("{} | {}", self.code(t0), self.code(t1))
    }
}

enum Counts {
    /// One count shared by every pair of the block.
    Uniform(u64),
    /// Row-major counts, one per pair.
    Pairs(Vec<u64>),
}

struct Block<'a> {
    size0: usize,
    size1: usize,
    rows: &'a [TreeId],
    cols: &'a [TreeId],
    counts: Counts,
    /// Both sides are the same shape class.
    diagonal: bool,
}

impl Block<'_> {
    fn pairs(&self) -> u64 {
        (self.rows.len() * self.cols.len()) as u64
    }

    /// Each pair with its count.
    fn each(&self) -> impl Iterator<Item = (TreeId, TreeId, u64)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, &t0)| {
            self.cols.iter().enumerate().map(move |(j, &t1)| {
                let n = match &self.counts {
                    Counts::Uniform(n) => *n,
                    Counts::Pairs(v) => v[i * self.cols.len() + j],
                };
                (t0, t1, n)
            })
        })
    }
}

/// Visits every ordered pair of the universe once, grouped into blocks.
/// `on_idents` sees every identification list the scan computes.
fn scan(
    cu: &CodeUniverse,
    engine: &mut EqEngine<'_, VSignature>,
    pred: PredicateSpec,
    mut on_idents: impl FnMut(&VShape, &VShape, &Idents<Bij>),
    mut visit: impl FnMut(&mut EqEngine<'_, VSignature>, &Block) -> Result<()>,
) -> Result<()> {
    for g0 in &cu.groups {
        for g1 in &cu.groups {
            if g0.size != g1.size {
                let counts = Counts::Uniform(engine.total_count(g0.members[0], g1.members[0])?);
                let block = Block {
                    size0: g0.size,
                    size1: g1.size,
                    rows: &g0.members,
                    cols: &g1.members,
                    counts,
                    diagonal: false,
                };
                visit(engine, &block)?;
                continue;
            }
            let collapsed = pred.holds(FinSet(g0.size));
            for (k0, c0) in g0.classes.iter().enumerate() {
                for (k1, c1) in g1.classes.iter().enumerate() {
                    let uniform = collapsed || {
                        let (s0, s1) = (cu.forest.shape(c0[0]), cu.forest.shape(c1[0]));
                        let idents = engine.idents(c0[0], c1[0])?;
                        on_idents(s0, s1, &idents);
                        idents.is_empty()
                    };
                    let counts = if uniform {
                        Counts::Uniform(engine.total_count(c0[0], c1[0])?)
                    } else {
                        let mut v = Vec::with_capacity(c0.len() * c1.len());
                        for &t0 in c0 {
                            for &t1 in c1 {
                                v.push(engine.total_count(t0, t1)?);
                            }
                        }
                        Counts::Pairs(v)
                    };
                    let block = Block {
                        size0: g0.size,
                        size1: g1.size,
                        rows: c0,
                        cols: c1,
                        counts,
                        diagonal: k0 == k1,
                    };
                    visit(engine, &block)?;
                }
            }
        }
    }
    Ok(())
}

fn no_idents(_: &VShape, _: &VShape, _: &Idents<Bij>) {}

/// Records a block's pairs against an expected count per pair.
fn compare_block(
    cu: &CodeUniverse,
    report: &mut VerifyReport,
    block: &Block,
    expected: impl Fn(TreeId, TreeId) -> u64,
    describe: &str,
) {
    report.cases += block.pairs();
    match (&block.counts, block.diagonal) {
        (Counts::Uniform(n), false) => {
            let (t0, t1) = (block.rows[0], block.cols[0]);
            let want = expected(t0, t1);
            if *n == 0 {
                report.vacuous += block.pairs();
            }
            if *n != want {
                report.fail_many(block.pairs(), cu.pair(t0, t1), format!("{describe} {want}"), n);
            }
        }
        _ => {
            for (t0, t1, n) in block.each() {
                if n == 0 {
                    report.vacuous += 1;
                }
                let want = expected(t0, t1);
                if n != want {
                    report.fail(cu.pair(t0, t1), format!("{describe} {want}"), n);
                }
            }
        }
    }
}

fn bij_count(sig: &VSignature, a: usize, b: usize) -> Result<u64> {
    Ok(enum_bijs_capped(FinSet(a), FinSet(b), sig.bij_cap())?.len() as u64)
}

/// Paths between codes whose decodings satisfy the predicate are counted
/// against the bijections of the decodings, enumerated independently. Also
/// checks that every such equality code over a single bijection has
/// exactly one element.
pub fn verify_partial_univalence(cu: &CodeUniverse, pred: PredicateSpec) -> Result<VerifyReport> {
    let mut report = VerifyReport::start("univalence", pred.to_string(), 0);
    let mut engine = cu.engine(pred);
    scan(cu, &mut engine, pred, no_idents, |engine, block| {
        if !pred.holds(FinSet(block.size0)) || !pred.holds(FinSet(block.size1)) {
            return Ok(());
        }
        let want = bij_count(&cu.sig, block.size0, block.size1)?;
        compare_block(cu, &mut report, block, |_, _| want, "bijections:");
        let (t0, t1) = (block.rows[0], block.cols[0]);
        for p in enum_bijs_capped(FinSet(block.size0), FinSet(block.size1), cu.sig.bij_cap())? {
            let n = engine.eq_count(&p, t0, t1)?;
            if n != 1 {
                report.fail(format!("{} over {p}", cu.pair(t0, t1)), "collapsed to 1", n);
            }
        }
        Ok(())
    })?;
    Ok(report.finish())
}

fn truncated(cu: &CodeUniverse, pred: PredicateSpec, suite: &str) -> Result<VerifyReport> {
    let mut report = VerifyReport::start(suite, pred.to_string(), 0);
    let mut engine = cu.engine(pred);
    scan(cu, &mut engine, pred, no_idents, |_, block| {
        report.cases += block.pairs();
        match (&block.counts, block.diagonal) {
            (Counts::Uniform(n), false) => {
                if *n == 0 {
                    report.vacuous += block.pairs();
                }
                if *n > 1 {
                    report.fail_many(block.pairs(), cu.pair(block.rows[0], block.cols[0]), "<= 1", n);
                }
            }
            _ => {
                for (t0, t1, n) in block.each() {
                    if n == 0 {
                        report.vacuous += 1;
                    }
                    if n > 1 {
                        report.fail(cu.pair(t0, t1), "<= 1", n);
                    }
                }
            }
        }
        Ok(())
    })?;
    Ok(report.finish())
}

/// Every pair has at most one path. Requires a predicate that implies
/// propositionality; otherwise see [`negative_control`].
pub fn verify_truncated(cu: &CodeUniverse, pred: PredicateSpec) -> Result<VerifyReport> {
    if !pred.implies_prop() {
        return Err(KernelError::precondition(format!(
            "predicate {pred} does not imply propositionality; run the negative control instead"
        )));
    }
    truncated(cu, pred, "truncation")
}

/// The truncation check without its hypothesis, expected to fail for
/// predicates admitting sets with nontrivial automorphisms.
pub fn verify_truncated_forced(cu: &CodeUniverse, pred: PredicateSpec) -> Result<VerifyReport> {
    truncated(cu, pred, "truncation-forced")
}

/// With the empty predicate, two codes are equal exactly when they are the
/// same tree, the one path is the identity, and its code is reflexivity.
pub fn verify_structural(cu: &CodeUniverse) -> Result<VerifyReport> {
    let pred = PredicateSpec::None;
    let mut report = VerifyReport::start("structural", pred.to_string(), 0);
    let mut engine = cu.engine(pred);
    let same = |t0: TreeId, t1: TreeId| u64::from(cu.tree(t0) == cu.tree(t1));
    scan(cu, &mut engine, pred, no_idents, |engine, block| {
        compare_block(cu, &mut report, block, same, "structurally equal:");
        if block.diagonal {
            for &t in block.rows {
                let id = Bij::identity(FinSet(block.size0));
                let set = engine.eq_witnesses(&id, t, t)?;
                if set.witnesses != vec![engine.encode_refl(t)] {
                    report.fail(cu.pair(t, t), "exactly reflexivity over the identity", set.len());
                }
            }
        }
        Ok(())
    })?;
    Ok(report.finish())
}

/// Searches for a pair of codes with more than one path under a predicate
/// that admits sets with nontrivial automorphisms.
pub fn negative_control(cu: &CodeUniverse, pred: PredicateSpec) -> Result<VerifyReport> {
    if pred.implies_prop() {
        return Err(KernelError::precondition(format!(
            "predicate {pred} implies propositionality, so no counterexample can exist"
        )));
    }
    let mut report = VerifyReport::start("negative", pred.to_string(), 0);
    let mut engine = cu.engine(pred);
    let mut found = 0u64;
    let mut first: Option<(TreeId, TreeId, u64)> = None;
    scan(cu, &mut engine, pred, no_idents, |_, block| {
        report.cases += block.pairs();
        match (&block.counts, block.diagonal) {
            (Counts::Uniform(n), false) if *n > 1 => {
                found += block.pairs();
                first.get_or_insert((block.rows[0], block.cols[0], *n));
            }
            (Counts::Uniform(_), false) => {}
            _ => {
                for (t0, t1, n) in block.each().filter(|x| x.2 > 1) {
                    found += 1;
                    first.get_or_insert((t0, t1, n));
                }
            }
        }
        Ok(())
    })?;
    let candidate = cu.ids.iter().copied().find(|&t| {
        let n = cu.size(t);
        n >= 2 && pred.holds(FinSet(n))
    });
    match (first, candidate) {
        (Some((t0, t1, n)), _) => {
            report.note(format!("WITNESS {} has {n} paths", cu.pair(t0, t1)));
            report.note(format!("{found} pairs have more than one path"));
        }
        (None, Some(t)) => {
            report.fail(cu.pair(t, t), format!(">= 2 paths (size {})", cu.size(t)), "at most 1");
        }
        (None, None) => report.note(format!(
            "NO-WITNESS: no code within the budget decodes to a set of size >= 2 satisfying {pred}"
        )),
    }
    Ok(report.finish())
}

/// Count of equal pairs collected for the equivalence-relation check.
struct Relation {
    uf: UnionFind<usize>,
    degree: Vec<u64>,
    pairs: HashSet<(TreeId, TreeId)>,
    /// Related blocks, keyed by the first tree of each side.
    blocks: HashSet<(TreeId, TreeId)>,
}

/// Equality of codes is an equivalence relation, respects Π, Σ and +,
/// only relates codes of equal decoding size, and contains reflexivity.
/// Identifications met during the scan are checked to be well typed, and
/// on a smaller budget the engine agrees with the saturation oracle.
pub fn check_coherence(cu: &CodeUniverse, pred: PredicateSpec) -> Result<VerifyReport> {
    let mut report = VerifyReport::start("coherence", pred.to_string(), 0);
    let mut engine = cu.engine(pred);
    let n = cu.forest.len();
    let mut rel = Relation {
        uf: UnionFind::new(n),
        degree: vec![0; n],
        pairs: HashSet::new(),
        blocks: HashSet::new(),
    };
    let mut class_rep: HashMap<TreeId, TreeId> = HashMap::new();
    for g in &cu.groups {
        for c in &g.classes {
            class_rep.extend(c.iter().map(|&t| (t, c[0])));
        }
    }

    let mut ill_typed = Vec::new();
    scan(
        cu,
        &mut engine,
        pred,
        |s0, s1, idents| {
            for ident in idents.iter() {
                if !ident_is_well_typed(&cu.sig, s0, s1, ident) {
                    ill_typed.push(format!("{s0:?} | {s1:?} via {:?}", ident.target_path));
                }
            }
        },
        |_, block| {
            report.cases += block.pairs();
            if block.size0 != block.size1 {
                if let Counts::Uniform(k) = block.counts {
                    if k > 0 {
                        let (t0, t1) = (block.rows[0], block.cols[0]);
                        report.fail_many(block.pairs(), cu.pair(t0, t1), "unequal (sizes differ)", "equal");
                    }
                }
                return Ok(());
            }
            match &block.counts {
                Counts::Uniform(k) => {
                    if *k > 0 {
                        rel.blocks.insert((block.rows[0], block.cols[0]));
                        for &t in block.rows {
                            rel.degree[t.index()] += block.cols.len() as u64;
                        }
                        for (a, b) in block.rows.iter().chain(block.cols).tuple_windows() {
                            rel.uf.union(a.index(), b.index());
                        }
                    } else if block.diagonal {
                        let t = block.rows[0];
                        report.fail_many(block.rows.len() as u64, cu.pair(t, t), "reflexive", "unequal");
                    }
                }
                Counts::Pairs(_) => {
                    for (t0, t1, k) in block.each() {
                        if t0 == t1 && k == 0 {
                            report.fail(cu.pair(t0, t1), "reflexive", "unequal");
                        }
                        if k > 0 {
                            rel.pairs.insert((t0, t1));
                            rel.degree[t0.index()] += 1;
                            rel.uf.union(t0.index(), t1.index());
                        }
                    }
                }
            }
            Ok(())
        },
    )?;
    for desc in ill_typed {
        report.fail(desc, "well-typed identification", "ill-typed");
    }

    let related = |a: TreeId, b: TreeId| {
        rel.pairs.contains(&(a, b)) || rel.blocks.contains(&(class_rep[&a], class_rep[&b]))
    };
    for &(a, b) in rel.pairs.iter().sorted() {
        if !related(b, a) {
            report.fail(cu.pair(a, b), "symmetric", "only one direction");
        }
    }
    for &(a, b) in rel.blocks.iter().sorted() {
        if !rel.blocks.contains(&(b, a)) {
            report.fail(cu.pair(a, b), "symmetric", "only one direction");
        }
    }
    let labels = rel.uf.clone().into_labeling();
    let mut component = vec![0u64; n];
    for &t in &cu.ids {
        component[labels[t.index()]] += 1;
    }
    for &t in &cu.ids {
        report.cases += 1;
        let (deg, comp) = (rel.degree[t.index()], component[labels[t.index()]]);
        if deg != comp {
            report.fail(cu.code(t).to_string(), format!("transitive: related to all {comp} codes of its class"), deg);
        }
    }

    congruence(cu, &mut engine, &mut report)?;

    for &t in &cu.ids {
        report.cases += 1;
        let id = Bij::identity(*cu.forest.index(t));
        let set = engine.eq_witnesses(&id, t, t)?;
        if !set.contains(&engine.encode_refl(t)) {
            report.fail(cu.code(t).to_string(), "reflexivity code in the identity equality code", set.len());
        }
    }

    let small = CodeBudget {
        max_nodes: ORACLE_BUDGET.max_nodes.min(cu.budget.max_nodes),
        max_el: ORACLE_BUDGET.max_el.min(cu.budget.max_el),
    };
    let oracle = check_oracle_agreement(&cu.sig, pred, small)?;
    report.cases += oracle.cases;
    for f in &oracle.failures {
        report.fail(f.inputs.clone(), f.expected.clone(), f.got.clone());
    }
    report.note(format!(
        "oracle agreement over {} instances at {} nodes and decodings of size {}",
        oracle.cases, small.max_nodes, small.max_el
    ));
    Ok(report.finish())
}

fn congruence(
    cu: &CodeUniverse,
    engine: &mut EqEngine<'_, VSignature>,
    report: &mut VerifyReport,
) -> Result<()> {
    let by_former = |name: &str| -> Vec<TreeId> {
        cu.ids.iter().copied().filter(|&t| cu.forest.shape(t).former_name() == name).collect()
    };
    let kids = |t: TreeId| cu.forest.children(t).to_vec();

    let sums = by_former("sum");
    for (&t0, &t1) in sums.iter().cartesian_product(&sums) {
        let (k0, k1) = (kids(t0), kids(t1));
        if engine.total_count(k0[0], k1[0])? > 0 && engine.total_count(k0[1], k1[1])? > 0 {
            report.cases += 1;
            if engine.total_count(t0, t1)? == 0 {
                report.fail(cu.pair(t0, t1), "equal by congruence", "unequal");
            }
        }
    }

    for name in ["sigma", "pi"] {
        let codes = by_former(name);
        for (&t0, &t1) in codes.iter().cartesian_product(&codes) {
            let (k0, k1) = (kids(t0), kids(t1));
            let (a0, a1) = (k0[0], k1[0]);
            let mut premise = false;
            for pa in cu.sig.idx_paths(cu.forest.index(a0), cu.forest.index(a1))? {
                if engine.eq_count(&pa, a0, a1)? == 0 {
                    continue;
                }
                let mut fibers = true;
                for a in 0..k0.len() - 1 {
                    if engine.total_count(k0[1 + a], k1[1 + pa.apply(a)])? == 0 {
                        fibers = false;
                        break;
                    }
                }
                if fibers {
                    premise = true;
                    break;
                }
            }
            if premise {
                report.cases += 1;
                if engine.total_count(t0, t1)? == 0 {
                    report.fail(cu.pair(t0, t1), "equal by congruence", "unequal");
                }
            }
        }
    }
    Ok(())
}

/// Compares the engine with the saturation oracle on every pair of codes
/// and every bijection between their decodings.
pub fn check_oracle_agreement(
    sig: &VSignature,
    pred: PredicateSpec,
    budget: CodeBudget,
) -> Result<VerifyReport> {
    let mut report = VerifyReport::start("oracle", pred.to_string(), 0);
    let cu = CodeUniverse::build(sig, budget)?;
    let p = pred.to_pred();
    let oracle = SaturationOracle::build(&cu.sig, &p, &cu.forest, &cu.ids)?;
    let mut engine = cu.engine(pred);
    for &t0 in &cu.ids {
        for &t1 in &cu.ids {
            for path in sig.idx_paths(cu.forest.index(t0), cu.forest.index(t1))? {
                report.case();
                let n = engine.eq_count(&path, t0, t1)?;
                let related = oracle.related(&path, t0, t1);
                if (n > 0) != related {
                    report.fail(format!("{} over {path}", cu.pair(t0, t1)), related, n);
                }
            }
        }
    }
    Ok(report.finish())
}

/// Number of sampled families per container in [`retains_suite`].
pub const RETAINS_FAMILIES: usize = 50;

fn retains_one<S: ContainerSig<Index = FinSet, Path = Bij>>(
    sig: &S,
    name: &str,
    expect_violation: bool,
    rng: &mut ChaCha8Rng,
    report: &mut VerifyReport,
) -> Result<()> {
    let indices: Vec<FinSet> = (0..=2).map(FinSet).collect();
    let checker = RetainsChecker::new(sig, indices.clone())?;
    let mut violations = 0u64;
    let mut shown = None;
    for _ in 0..RETAINS_FAMILIES {
        let family = sample_family(sig, &indices, rng)?;
        let r = checker.check(&family)?;
        report.case();
        if r.pairs_checked == 0 {
            report.vacuous += 1;
        }
        violations += r.violation_count;
        if shown.is_none() {
            shown = r.violations.first().cloned();
        }
    }
    match (expect_violation, violations, shown) {
        (false, 0, _) => {}
        (false, k, v) => report.fail(format!("{name}: {v:?}"), "no violations", k),
        (true, 0, _) => report.fail(name.to_string(), ">= 1 violation", 0),
        (true, k, Some(v)) => report.note(format!(
            "{name} fails to retain truncation as expected: {k} violations, e.g. {} {:?} vs {} {:?} with {} witnesses",
            v.shape0, v.args0, v.shape1, v.args1, v.witnesses
        )),
        (true, k, None) => report.note(format!("{name}: {k} violations")),
    }
    Ok(())
}

/// Samples families over the index sizes 0, 1, 2 and checks that every
/// single-former container, the nullary container, the pushout container
/// and every pairwise coproduct retain truncation, and that `nbad` does not.
pub fn retains_suite(nullary: &NullarySignature, seed: u64) -> Result<VerifyReport> {
    let mut report = VerifyReport::start("retains", "n/a", seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut singles: Vec<(String, VSignature)> =
        vec![("nullary".to_string(), VSignature::new(nullary.clone(), []))];
    for f in Former::ALL {
        singles.push((f.to_string(), VSignature::new(NullarySignature::default(), [f])));
    }
    for (name, sig) in &singles {
        retains_one(sig, name, false, &mut rng, &mut report)?;
    }
    for (i, (n0, s0)) in singles.iter().enumerate() {
        for (n1, s1) in &singles[i + 1..] {
            let sum = Coproduct::new(s0.clone(), s1.clone())?;
            retains_one(&sum, &format!("{n0}+{n1}"), false, &mut rng, &mut report)?;
        }
    }
    let bad = VSignature::new(NullarySignature::default(), []).with_nbad(true);
    retains_one(&bad, "nbad", true, &mut rng, &mut report)?;
    Ok(report.finish())
}
