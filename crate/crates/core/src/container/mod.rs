//! Indexed containers in fibered form.
//!
//! A signature has shapes, each with a target index and a finite list of
//! positions carrying source indices. Equality of shapes over a path in the
//! index is described by the finite list of [`ShapeIdent`]s the signature
//! reports for a pair of shapes.

mod coproduct;
mod retains;
mod table;

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{KernelError, Result};

pub use coproduct::{Coproduct, Tagged};
pub use retains::{
    retains_check, sample_family, RetainsChecker, RetainsReport, RetainsViolation,
};
pub use table::{random_table, FiniteContainerTable, LabelPath, TableShape};

/// Largest extension `ext_enumerate` will list.
pub const MAX_EXTENSION: u128 = 1_000_000;

/// A path in an index type.
pub trait IdxPath: Clone + Eq + Hash + Debug + Send + Sync {
    type Index: Clone + Eq + Hash + Debug + Send + Sync;

    fn source(&self) -> Self::Index;
    fn target(&self) -> Self::Index;
    fn is_refl(&self) -> bool;
    /// First `self`, then `next`.
    fn compose(&self, next: &Self) -> Result<Self>;
    fn invert(&self) -> Self;
}

/// The data of an equality between two shapes lying over `target_path`.
///
/// `pos_match[k]` is the position of the second shape matched with position
/// `k` of the first, and `src_paths[k]` connects their source indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShapeIdent<P> {
    pub target_path: P,
    pub pos_match: Vec<usize>,
    pub src_paths: Vec<P>,
}

/// An indexed container presented by shapes, targets, positions and sources.
pub trait ContainerSig: Sync {
    type Index: Clone + Eq + Hash + Debug + Send + Sync;
    type Shape: Clone + Eq + Hash + Debug + Send + Sync;
    type Path: IdxPath<Index = Self::Index>;

    fn refl(&self, i: &Self::Index) -> Self::Path;

    /// All paths from `i0` to `i1`, in a deterministic order.
    fn idx_paths(&self, i0: &Self::Index, i1: &Self::Index) -> Result<Vec<Self::Path>>;

    /// The complete index set when it is finite; `None` for unbounded indices.
    fn index_domain(&self) -> Option<Vec<Self::Index>>;

    fn target(&self, s: &Self::Shape) -> Self::Index;

    fn arity(&self, s: &Self::Shape) -> usize;

    fn source(&self, s: &Self::Shape, pos: usize) -> Self::Index;

    fn shape_idents(
        &self,
        s0: &Self::Shape,
        s1: &Self::Shape,
    ) -> Result<Vec<ShapeIdent<Self::Path>>>;

    /// Every shape whose sources all lie in `indices`.
    fn shapes_over(&self, indices: &[Self::Index]) -> Result<Vec<Self::Shape>>;

    /// The identification of a shape with itself over reflexivity.
    fn refl_ident(&self, s: &Self::Shape) -> ShapeIdent<Self::Path> {
        let n = self.arity(s);
        ShapeIdent {
            target_path: self.refl(&self.target(s)),
            pos_match: (0..n).collect(),
            src_paths: (0..n).map(|k| self.refl(&self.source(s, k))).collect(),
        }
    }

    fn sources(&self, s: &Self::Shape) -> Vec<Self::Index> {
        (0..self.arity(s)).map(|k| self.source(s, k)).collect()
    }
}

/// Checks the structural invariants of one identification.
pub fn ident_is_well_typed<S: ContainerSig>(
    sig: &S,
    s0: &S::Shape,
    s1: &S::Shape,
    ident: &ShapeIdent<S::Path>,
) -> bool {
    let n = sig.arity(s0);
    if n != sig.arity(s1) || ident.pos_match.len() != n || ident.src_paths.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &m in &ident.pos_match {
        if m >= n || std::mem::replace(&mut hit[m], true) {
            return false;
        }
    }
    ident.target_path.source() == sig.target(s0)
        && ident.target_path.target() == sig.target(s1)
        && ident.src_paths.iter().enumerate().all(|(k, p)| {
            p.source() == sig.source(s0, k) && p.target() == sig.source(s1, ident.pos_match[k])
        })
}

/// A family over the index: a number of inhabitants per index, and for each
/// path and pair of inhabitants the number of dependent equalities between
/// them over that path.
#[derive(Clone, Debug)]
pub struct FamilyAssignment<P: IdxPath> {
    order: Vec<P::Index>,
    inhabitants: HashMap<P::Index, usize>,
    prop_valued: HashMap<P::Index, bool>,
    witnesses: HashMap<(P, usize, usize), u32>,
}

impl<P: IdxPath> Default for FamilyAssignment<P> {
    fn default() -> Self {
        FamilyAssignment {
            order: Vec::new(),
            inhabitants: HashMap::new(),
            prop_valued: HashMap::new(),
            witnesses: HashMap::new(),
        }
    }
}

impl<P: IdxPath> FamilyAssignment<P> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_inhabitants(&mut self, i: P::Index, count: usize, prop_valued: bool) {
        if !self.inhabitants.contains_key(&i) {
            self.order.push(i.clone());
        }
        self.inhabitants.insert(i.clone(), count);
        self.prop_valued.insert(i, prop_valued);
    }

    pub fn set_witnesses(&mut self, path: P, u: usize, v: usize, count: u32) -> Result<()> {
        let (i0, i1) = (path.source(), path.target());
        let (n0, n1) = (self.inhabitants(&i0), self.inhabitants(&i1));
        if u >= n0 || v >= n1 {
            return Err(KernelError::precondition(format!(
                "inhabitants ({u}, {v}) out of range over {path:?}"
            )));
        }
        if count > 1 && (self.is_prop_valued(&i0) || self.is_prop_valued(&i1)) {
            return Err(KernelError::precondition(format!(
                "{count} witnesses over {path:?} at a prop-valued index"
            )));
        }
        self.witnesses.insert((path, u, v), count);
        Ok(())
    }

    /// Indices in insertion order.
    pub fn indices(&self) -> &[P::Index] {
        &self.order
    }

    pub fn inhabitants(&self, i: &P::Index) -> usize {
        self.inhabitants.get(i).copied().unwrap_or(0)
    }

    pub fn is_prop_valued(&self, i: &P::Index) -> bool {
        self.prop_valued.get(i).copied().unwrap_or(false)
    }

    pub fn witnesses(&self, path: &P, u: usize, v: usize) -> Option<u32> {
        self.witnesses.get(&(path.clone(), u, v)).copied()
    }
}

/// An element of the extension at some index: a shape and one inhabitant
/// per position.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtElement<Sh> {
    pub shape: Sh,
    pub args: Vec<usize>,
}

/// All choices of inhabitants for the positions of `s`, lexicographically.
pub(crate) fn assignments<S: ContainerSig>(
    sig: &S,
    family: &FamilyAssignment<S::Path>,
    s: &S::Shape,
) -> Vec<Vec<usize>> {
    let radices: Vec<usize> = sig
        .sources(s)
        .iter()
        .map(|j| family.inhabitants(j))
        .collect();
    let mut out = Vec::new();
    if radices.contains(&0) {
        return out;
    }
    let mut cur = vec![0; radices.len()];
    loop {
        out.push(cur.clone());
        let mut k = radices.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < radices[k] {
                break;
            }
            cur[k] = 0;
        }
    }
}

/// The extension of the family at index `i`, ordered by shape then by
/// argument sequence.
pub fn ext_enumerate<S: ContainerSig>(
    sig: &S,
    family: &FamilyAssignment<S::Path>,
    i: &S::Index,
) -> Result<Vec<ExtElement<S::Shape>>> {
    if let Some(domain) = sig.index_domain() {
        if !domain.contains(i) {
            return Err(KernelError::precondition(format!("unknown index {i:?}")));
        }
    }
    let mut indices = family.indices().to_vec();
    if !indices.contains(i) {
        indices.push(i.clone());
    }
    let shapes: Vec<_> = sig
        .shapes_over(&indices)?
        .into_iter()
        .filter(|s| &sig.target(s) == i)
        .collect();
    let total: u128 = shapes
        .iter()
        .map(|s| {
            sig.sources(s)
                .iter()
                .map(|j| family.inhabitants(j) as u128)
                .product::<u128>()
        })
        .sum();
    if total > MAX_EXTENSION {
        return Err(KernelError::too_large(
            format!("extension at {i:?}"),
            total,
            MAX_EXTENSION,
        ));
    }
    Ok(shapes
        .into_iter()
        .flat_map(|s| {
            assignments(sig, family, &s)
                .into_iter()
                .map(move |args| ExtElement {
                    shape: s.clone(),
                    args,
                })
        })
        .collect())
}
