use std::collections::HashSet;

use rand::Rng;

use super::{ContainerSig, IdxPath, ShapeIdent};
use crate::error::{KernelError, Result};

/// The only path in a discrete label index: reflexivity at a label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelPath(pub usize);

/// Reflexivity at a label.
impl std::fmt::Display for LabelPath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "refl@{}", self.0)
    }
}

impl IdxPath for LabelPath {
    type Index = usize;

    fn source(&self) -> usize {
        self.0
    }

    fn target(&self) -> usize {
        self.0
    }

    fn is_refl(&self) -> bool {
        true
    }

    fn compose(&self, next: &Self) -> Result<Self> {
        if self.0 != next.0 {
            return Err(KernelError::DomainMismatch(format!(
                "label paths at {} and {} do not compose",
                self.0, next.0
            )));
        }
        Ok(*self)
    }

    fn invert(&self) -> Self {
        *self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableShape {
    pub name: String,
    pub target: usize,
    /// `(position name, source label)` per position.
    pub positions: Vec<(String, usize)>,
}

/// A container over a finite discrete set of labels, given as a table of
/// shapes. Shapes are referred to by their row number.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FiniteContainerTable {
    labels: Vec<String>,
    shapes: Vec<TableShape>,
}

impl FiniteContainerTable {
    pub fn new(labels: Vec<String>, shapes: Vec<TableShape>) -> Result<Self> {
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(KernelError::DuplicateName(l.clone()));
            }
        }
        let mut names = HashSet::new();
        for s in &shapes {
            if !names.insert(s.name.as_str()) {
                return Err(KernelError::DuplicateName(s.name.clone()));
            }
            let bad = std::iter::once(s.target)
                .chain(s.positions.iter().map(|p| p.1))
                .find(|&l| l >= labels.len());
            if let Some(l) = bad {
                return Err(KernelError::MalformedCode(format!(
                    "shape `{}` refers to label #{l}, but only {} labels exist",
                    s.name,
                    labels.len()
                )));
            }
        }
        Ok(FiniteContainerTable { labels, shapes })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn shapes(&self) -> &[TableShape] {
        &self.shapes
    }

    pub fn label(&self, name: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == name)
    }

    pub fn shape(&self, name: &str) -> Option<usize> {
        self.shapes.iter().position(|s| s.name == name)
    }
}

impl ContainerSig for FiniteContainerTable {
    type Index = usize;
    type Shape = usize;
    type Path = LabelPath;

    fn refl(&self, i: &usize) -> LabelPath {
        LabelPath(*i)
    }

    fn idx_paths(&self, i0: &usize, i1: &usize) -> Result<Vec<LabelPath>> {
        Ok(if i0 == i1 {
            vec![LabelPath(*i0)]
        } else {
            Vec::new()
        })
    }

    fn index_domain(&self) -> Option<Vec<usize>> {
        Some((0..self.labels.len()).collect())
    }

    fn target(&self, s: &usize) -> usize {
        self.shapes[*s].target
    }

    fn arity(&self, s: &usize) -> usize {
        self.shapes[*s].positions.len()
    }

    fn source(&self, s: &usize, pos: usize) -> usize {
        self.shapes[*s].positions[pos].1
    }

    fn shape_idents(&self, s0: &usize, s1: &usize) -> Result<Vec<ShapeIdent<LabelPath>>> {
        Ok(if s0 == s1 {
            vec![self.refl_ident(s0)]
        } else {
            Vec::new()
        })
    }

    fn shapes_over(&self, indices: &[usize]) -> Result<Vec<usize>> {
        Ok((0..self.shapes.len())
            .filter(|&s| self.shapes[s].positions.iter().all(|p| indices.contains(&p.1)))
            .collect())
    }
}

/// A random table with `1..=max_labels` labels and `1..=max_shapes` shapes,
/// each shape having at most `max_arity` positions.
pub fn random_table<R: Rng>(
    rng: &mut R,
    max_labels: usize,
    max_shapes: usize,
    max_arity: usize,
) -> FiniteContainerTable {
    let nlabels = rng.gen_range(1..=max_labels);
    let nshapes = rng.gen_range(1..=max_shapes);
    let labels = (0..nlabels).map(|k| format!("l{k}")).collect();
    let shapes = (0..nshapes)
        .map(|k| {
            // Keep at least one nullary shape so every table has finite trees.
            let arity = if k == 0 { 0 } else { rng.gen_range(0..=max_arity) };
            TableShape {
                name: format!("s{k}"),
                target: rng.gen_range(0..nlabels),
                positions: (0..arity)
                    .map(|p| (format!("p{p}"), rng.gen_range(0..nlabels)))
                    .collect(),
            }
        })
        .collect();
    FiniteContainerTable::new(labels, shapes).expect("generated table is valid")
}
