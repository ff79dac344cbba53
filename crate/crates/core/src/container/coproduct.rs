use super::{ContainerSig, ShapeIdent};
use crate::error::{KernelError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tagged<L, R> {
    Left(L),
    Right(R),
}

/// The coproduct of two containers over the same index: shapes are the
/// tagged union, and shapes with different tags are never identified.
#[derive(Clone, Debug)]
pub struct Coproduct<A, B> {
    left: A,
    right: B,
}

impl<A, B> Coproduct<A, B>
where
    A: ContainerSig,
    B: ContainerSig<Index = A::Index, Path = A::Path>,
{
    pub fn new(left: A, right: B) -> Result<Self> {
        let (l, r) = (left.index_domain(), right.index_domain());
        if l != r {
            return Err(KernelError::IndexTypeMismatch(format!(
                "left index {l:?}, right index {r:?}"
            )));
        }
        Ok(Coproduct { left, right })
    }

    pub fn left(&self) -> &A {
        &self.left
    }

    pub fn right(&self) -> &B {
        &self.right
    }
}

impl<A, B> ContainerSig for Coproduct<A, B>
where
    A: ContainerSig,
    B: ContainerSig<Index = A::Index, Path = A::Path>,
{
    type Index = A::Index;
    type Shape = Tagged<A::Shape, B::Shape>;
    type Path = A::Path;

    fn refl(&self, i: &A::Index) -> A::Path {
        self.left.refl(i)
    }

    fn idx_paths(&self, i0: &A::Index, i1: &A::Index) -> Result<Vec<A::Path>> {
        self.left.idx_paths(i0, i1)
    }

    fn index_domain(&self) -> Option<Vec<A::Index>> {
        self.left.index_domain()
    }

    fn target(&self, s: &Self::Shape) -> A::Index {
        match s {
            Tagged::Left(s) => self.left.target(s),
            Tagged::Right(s) => self.right.target(s),
        }
    }

    fn arity(&self, s: &Self::Shape) -> usize {
        match s {
            Tagged::Left(s) => self.left.arity(s),
            Tagged::Right(s) => self.right.arity(s),
        }
    }

    fn source(&self, s: &Self::Shape, pos: usize) -> A::Index {
        match s {
            Tagged::Left(s) => self.left.source(s, pos),
            Tagged::Right(s) => self.right.source(s, pos),
        }
    }

    fn shape_idents(
        &self,
        s0: &Self::Shape,
        s1: &Self::Shape,
    ) -> Result<Vec<ShapeIdent<A::Path>>> {
        match (s0, s1) {
            (Tagged::Left(a), Tagged::Left(b)) => self.left.shape_idents(a, b),
            (Tagged::Right(a), Tagged::Right(b)) => self.right.shape_idents(a, b),
            _ => Ok(Vec::new()),
        }
    }

    fn shapes_over(&self, indices: &[A::Index]) -> Result<Vec<Self::Shape>> {
        let mut out: Vec<_> = self
            .left
            .shapes_over(indices)?
            .into_iter()
            .map(Tagged::Left)
            .collect();
        out.extend(self.right.shapes_over(indices)?.into_iter().map(Tagged::Right));
        Ok(out)
    }
}
