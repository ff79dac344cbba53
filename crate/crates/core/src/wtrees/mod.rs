//! Well-founded trees over a container signature and their equality codes.
//!
//! Trees are hash-consed into a [`Forest`]; [`EqEngine`] computes the
//! witness sets of equality codes with a conditionally collapsing join, and
//! [`SaturationOracle`] decides the same relation by an independent least
//! fixpoint over an enumerated set of trees.

mod engine;
mod oracle;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::container::{ContainerSig, ShapeIdent};
use crate::error::{KernelError, Result};

pub use engine::{
    encode_decode_instances, verify_encode_decode, EncodeDecodeReport, EqEngine, Idents,
};
pub use oracle::{tree_eq_oracle, SaturationOracle};

/// Largest number of trees `enumerate_trees` produces by default.
pub const DEFAULT_TREE_CAP: usize = 2000;

/// A tree node: a shape and one subtree per position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WTree<Sh> {
    pub shape: Sh,
    pub children: Vec<WTree<Sh>>,
}

impl<Sh> WTree<Sh> {
    pub fn leaf(shape: Sh) -> Self {
        WTree {
            shape,
            children: Vec::new(),
        }
    }

    pub fn node(shape: Sh, children: Vec<WTree<Sh>>) -> Self {
        WTree { shape, children }
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(WTree::depth).max().unwrap_or(0)
    }
}

/// Whether every child sits at the source index of its position.
pub fn well_formed<S: ContainerSig>(sig: &S, t: &WTree<S::Shape>) -> bool {
    t.children.len() == sig.arity(&t.shape)
        && t.children.iter().enumerate().all(|(pos, child)| {
            sig.target(&child.shape) == sig.source(&t.shape, pos) && well_formed(sig, child)
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeId(u32);

impl TreeId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct NodeKey<Sh> {
    shape: Sh,
    children: Vec<TreeId>,
}

#[derive(Clone, Debug)]
struct Node<Sh, I> {
    key: NodeKey<Sh>,
    index: I,
    shape_id: ShapeId,
}

/// Interned top shape of a forest node; equal shapes share an id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeId(u32);

/// Hash-consed store of well-formed trees; equal trees share an id.
#[derive(Debug)]
pub struct Forest<S: ContainerSig> {
    nodes: Vec<Node<S::Shape, S::Index>>,
    ids: HashMap<NodeKey<S::Shape>, TreeId>,
    shape_ids: HashMap<S::Shape, ShapeId>,
}

impl<S: ContainerSig> Clone for Forest<S> {
    fn clone(&self) -> Self {
        Forest {
            nodes: self.nodes.clone(),
            ids: self.ids.clone(),
            shape_ids: self.shape_ids.clone(),
        }
    }
}

impl<S: ContainerSig> Default for Forest<S> {
    fn default() -> Self {
        Forest {
            nodes: Vec::new(),
            ids: HashMap::new(),
            shape_ids: HashMap::new(),
        }
    }
}

impl<S: ContainerSig> Forest<S> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Adds a node whose children are already in the forest.
    pub fn insert_node(
        &mut self,
        sig: &S,
        shape: S::Shape,
        children: Vec<TreeId>,
    ) -> Result<TreeId> {
        let key = NodeKey { shape, children };
        if let Some(&id) = self.ids.get(&key) {
            return Ok(id);
        }
        if key.children.len() != sig.arity(&key.shape) {
            return Err(KernelError::precondition(format!(
                "shape {:?} has {} positions, got {} children",
                key.shape,
                sig.arity(&key.shape),
                key.children.len()
            )));
        }
        for (pos, &c) in key.children.iter().enumerate() {
            if self.index(c) != &sig.source(&key.shape, pos) {
                return Err(KernelError::precondition(format!(
                    "child {pos} of {:?} sits at {:?}, expected {:?}",
                    key.shape,
                    self.index(c),
                    sig.source(&key.shape, pos)
                )));
            }
        }
        let id = TreeId(u32::try_from(self.nodes.len()).expect("forest size"));
        let index = sig.target(&key.shape);
        let fresh = ShapeId(u32::try_from(self.shape_ids.len()).expect("shape count"));
        let shape_id = *self.shape_ids.entry(key.shape.clone()).or_insert(fresh);
        self.ids.insert(key.clone(), id);
        self.nodes.push(Node { key, index, shape_id });
        Ok(id)
    }

    /// Interns a tree, rejecting ill-indexed ones.
    pub fn insert(&mut self, sig: &S, t: &WTree<S::Shape>) -> Result<TreeId> {
        let children = t
            .children
            .iter()
            .map(|c| self.insert(sig, c))
            .collect::<Result<Vec<_>>>()?;
        self.insert_node(sig, t.shape.clone(), children)
    }

    pub fn get(&self, t: &WTree<S::Shape>) -> Option<TreeId> {
        let children = t
            .children
            .iter()
            .map(|c| self.get(c))
            .collect::<Option<Vec<_>>>()?;
        self.ids
            .get(&NodeKey {
                shape: t.shape.clone(),
                children,
            })
            .copied()
    }

    pub fn shape(&self, id: TreeId) -> &S::Shape {
        &self.nodes[id.index()].key.shape
    }

    pub fn shape_id(&self, id: TreeId) -> ShapeId {
        self.nodes[id.index()].shape_id
    }

    pub fn children(&self, id: TreeId) -> &[TreeId] {
        &self.nodes[id.index()].key.children
    }

    pub fn index(&self, id: TreeId) -> &S::Index {
        &self.nodes[id.index()].index
    }

    pub fn ids(&self) -> impl Iterator<Item = TreeId> {
        (0..self.nodes.len() as u32).map(TreeId)
    }

    pub fn tree(&self, id: TreeId) -> WTree<S::Shape> {
        WTree {
            shape: self.shape(id).clone(),
            children: self.children(id).iter().map(|&c| self.tree(c)).collect(),
        }
    }

    pub fn depth(&self, id: TreeId) -> usize {
        1 + self
            .children(id)
            .iter()
            .map(|&c| self.depth(c))
            .max()
            .unwrap_or(0)
    }
}

/// All well-formed trees of depth at most `depth` over a signature with a
/// finite index, in order of depth, then shape, then children.
pub fn enumerate_trees<S: ContainerSig>(
    sig: &S,
    forest: &mut Forest<S>,
    depth: usize,
    cap: usize,
) -> Result<Vec<TreeId>> {
    let domain = sig.index_domain().ok_or_else(|| {
        KernelError::precondition("tree enumeration needs a finite index type")
    })?;
    let shapes = sig.shapes_over(&domain)?;
    let mut all: Vec<TreeId> = Vec::new();
    for _ in 0..depth {
        let mut by_index: HashMap<&S::Index, Vec<TreeId>> = HashMap::new();
        let previous = all.clone();
        for &t in &previous {
            by_index.entry(forest.index(t)).or_default().push(t);
        }
        let mut level = Vec::new();
        for s in &shapes {
            let options: Vec<Vec<TreeId>> = sig
                .sources(s)
                .iter()
                .map(|j| by_index.get(j).cloned().unwrap_or_default())
                .collect();
            let combos: u128 = options.iter().map(|o| o.len() as u128).product();
            if combos + (all.len() + level.len()) as u128 > cap as u128 {
                return Err(KernelError::too_large("trees", combos, cap as u128));
            }
            let mut cur = vec![0usize; options.len()];
            if options.iter().any(Vec::is_empty) {
                continue;
            }
            loop {
                let children = cur.iter().zip(&options).map(|(&k, o)| o[k]).collect();
                level.push((s.clone(), children));
                let mut k = options.len();
                let mut done = true;
                while k > 0 {
                    k -= 1;
                    cur[k] += 1;
                    if cur[k] < options[k].len() {
                        done = false;
                        break;
                    }
                    cur[k] = 0;
                }
                if done {
                    break;
                }
            }
        }
        let mut seen: std::collections::HashSet<TreeId> = all.iter().copied().collect();
        for (s, children) in level {
            let id = forest.insert_node(sig, s, children)?;
            if seen.insert(id) {
                all.push(id);
            }
        }
    }
    Ok(all)
}

/// A decidable predicate on indices, named for reports.
#[derive(Clone)]
pub struct PredOnIndex<I> {
    name: String,
    test: Arc<dyn Fn(&I) -> bool + Send + Sync>,
}

impl<I> PredOnIndex<I> {
    pub fn new(name: impl Into<String>, test: impl Fn(&I) -> bool + Send + Sync + 'static) -> Self {
        PredOnIndex {
            name: name.into(),
            test: Arc::new(test),
        }
    }

    pub fn never() -> Self {
        PredOnIndex::new("none", |_| false)
    }

    pub fn holds(&self, i: &I) -> bool {
        (self.test)(i)
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl<I> fmt::Debug for PredOnIndex<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PredOnIndex({})", self.name)
    }
}

/// An element of an equality code.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Witness<P> {
    /// The point the join collapses to when the predicate holds.
    Collapsed,
    /// A structural equality: an identification of the top shapes and one
    /// witness per position of the first shape.
    Inr {
        ident: Arc<ShapeIdent<P>>,
        children: Vec<Witness<P>>,
    },
}

impl<P: fmt::Display> fmt::Display for Witness<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Collapsed => write!(f, "collapsed"),
            Witness::Inr { ident, children } => {
                write!(f, "(inr {}", ident.target_path)?;
                for c in children {
                    write!(f, " {c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// The witnesses of an equality code over `path`, without duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessSet<P> {
    pub path: P,
    pub witnesses: Vec<Witness<P>>,
}

impl<P> WitnessSet<P> {
    pub fn len(&self) -> usize {
        self.witnesses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn contains(&self, w: &Witness<P>) -> bool
    where
        P: PartialEq,
    {
        self.witnesses.contains(w)
    }
}
