//! Bottom-up enumeration of every code within a node and decoding budget.
//!
//! Codes come out grouped by node count, then by former in the order
//! names, unit, empty, nbad, sum, sigma, pi, id, po0, then by children in
//! the order their groups were produced. Every subtree of an emitted code is
//! emitted earlier.

use itertools::Itertools;

use super::code::Code;
use super::vsig::{Former, VShape, VSignature};
use crate::container::ContainerSig;
use crate::error::{KernelError, Result};
use crate::fincore::{enum_maps, FinSet};
use crate::wtrees::{Forest, TreeId};

/// Largest code universe the enumerator will build.
pub const MAX_CODES: usize = 2_000_000;

struct Builder<'a> {
    sig: &'a VSignature,
    forest: &'a mut Forest<VSignature>,
    max_el: usize,
    by_nodes: Vec<Vec<TreeId>>,
    level: Vec<TreeId>,
    total: usize,
}

impl Builder<'_> {
    fn size(&self, t: TreeId) -> usize {
        self.forest.index(t).size()
    }

    fn emit(&mut self, shape: VShape, children: Vec<TreeId>) -> Result<()> {
        if self.sig.target(&shape).size() > self.max_el {
            return Ok(());
        }
        if self.total + self.level.len() >= MAX_CODES {
            return Err(KernelError::too_large(
                "code universe",
                (self.total + self.level.len() + 1) as u128,
                MAX_CODES as u128,
            ));
        }
        let id = self.forest.insert_node(self.sig, shape, children)?;
        self.level.push(id);
        Ok(())
    }

    fn leaves(&mut self) -> Result<()> {
        for k in 0..self.sig.nullary().len() {
            self.emit(VShape::Nullary(k), vec![])?;
        }
        if self.sig.has(Former::Unit) {
            self.emit(VShape::Unit, vec![])?;
        }
        if self.sig.has(Former::Empty) {
            self.emit(VShape::Empty, vec![])?;
        }
        if self.sig.nbad() {
            self.emit(VShape::Bad, vec![])?;
        }
        Ok(())
    }

    /// Codes with exactly `n > 1` nodes.
    fn inner(&mut self, n: usize) -> Result<()> {
        let rest = n - 1;
        if self.sig.has(Former::Sum) {
            for na in 1..rest {
                for (a, b) in self.by_nodes[na].clone().into_iter().cartesian_product(self.by_nodes[rest - na].clone()) {
                    let shape = VShape::Sum { left: self.size(a), right: self.size(b) };
                    self.emit(shape, vec![a, b])?;
                }
            }
        }
        for former in [Former::Sigma, Former::Pi] {
            if !self.sig.has(former) {
                continue;
            }
            for na in 1..=rest {
                for a in self.by_nodes[na].clone() {
                    let k = self.size(a);
                    for parts in compositions(rest - na, k) {
                        let options: Vec<Vec<TreeId>> =
                            parts.iter().map(|&m| self.by_nodes[m].clone()).collect();
                        for fam in product(&options) {
                            let sizes = fam.iter().map(|&t| self.size(t)).collect();
                            let shape = if former == Former::Pi {
                                VShape::Pi { fam: sizes }
                            } else {
                                VShape::Sigma { fam: sizes }
                            };
                            let mut children = vec![a];
                            children.extend(fam);
                            self.emit(shape, children)?;
                        }
                    }
                }
            }
        }
        if self.sig.has(Former::Id) {
            for a in self.by_nodes[rest].clone() {
                let k = self.size(a);
                for (x, y) in (0..k).cartesian_product(0..k) {
                    self.emit(VShape::Id { dom: k, x, y }, vec![a])?;
                }
            }
        }
        if self.sig.has(Former::Po0) {
            for na in 1..rest {
                for nb in 1..rest - na {
                    let nc = rest - na - nb;
                    for a in self.by_nodes[na].clone() {
                        for b in self.by_nodes[nb].clone() {
                            let fs = enum_maps(FinSet(self.size(a)), FinSet(self.size(b)))?;
                            for c in self.by_nodes[nc].clone() {
                                let gs = enum_maps(FinSet(self.size(a)), FinSet(self.size(c)))?;
                                for (f, g) in fs.iter().cartesian_product(&gs) {
                                    let shape = VShape::Po0 { f: f.clone(), g: g.clone() };
                                    self.emit(shape, vec![a, b, c])?;
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Ordered ways of writing `m` as a sum of `k` positive parts.
fn compositions(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if m == 0 { vec![vec![]] } else { vec![] };
    }
    if m < k {
        return vec![];
    }
    let mut out = Vec::new();
    for first in 1..=m - (k - 1) {
        for mut tail in compositions(m - first, k - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

fn product(options: &[Vec<TreeId>]) -> Vec<Vec<TreeId>> {
    if options.is_empty() {
        return vec![vec![]];
    }
    options.iter().cloned().multi_cartesian_product().collect()
}

/// Enumerates codes into `forest` and returns their ids in emission order.
pub fn enumerate_code_ids(
    sig: &VSignature,
    forest: &mut Forest<VSignature>,
    max_nodes: usize,
    max_el: usize,
) -> Result<Vec<TreeId>> {
    let mut b = Builder {
        sig,
        forest,
        max_el,
        by_nodes: vec![Vec::new()],
        level: Vec::new(),
        total: 0,
    };
    for n in 1..=max_nodes {
        if n == 1 {
            b.leaves()?;
        } else {
            b.inner(n)?;
        }
        let level = std::mem::take(&mut b.level);
        b.total += level.len();
        b.by_nodes.push(level);
    }
    Ok(b.by_nodes.concat())
}

pub fn enumerate_codes(sig: &VSignature, max_nodes: usize, max_el: usize) -> Result<Vec<Code>> {
    let mut forest = Forest::new();
    let ids = enumerate_code_ids(sig, &mut forest, max_nodes, max_el)?;
    Ok(ids.into_iter().map(|t| sig.from_tree(&forest.tree(t))).collect())
}
