use std::fmt;

use super::vsig::{VShape, VSignature};
use crate::container::ContainerSig;
use crate::error::{KernelError, Result};
use crate::fincore::{ElemMap, FinSet};
use crate::wtrees::WTree;

/// Largest decoding `el` will accept.
pub const MAX_EL: usize = 1_000_000;

/// A code for a type. Families list one code per element of the head's
/// decoding; `Po0` legs are target sequences into the decodings of the
/// second and third codes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Code {
    N(String),
    Unit,
    Empty,
    Bad,
    Sum(Box<Code>, Box<Code>),
    Sigma(Box<Code>, Vec<Code>),
    Pi(Box<Code>, Vec<Code>),
    Id(Box<Code>, usize, usize),
    Po0(Box<Code>, Box<Code>, Box<Code>, Vec<usize>, Vec<usize>),
}

impl Code {
    pub fn n(name: &str) -> Code {
        Code::N(name.to_string())
    }

    pub fn sum(a: Code, b: Code) -> Code {
        Code::Sum(Box::new(a), Box::new(b))
    }

    pub fn sigma(a: Code, fam: Vec<Code>) -> Code {
        Code::Sigma(Box::new(a), fam)
    }

    pub fn pi(a: Code, fam: Vec<Code>) -> Code {
        Code::Pi(Box::new(a), fam)
    }

    pub fn id(a: Code, x: usize, y: usize) -> Code {
        Code::Id(Box::new(a), x, y)
    }

    pub fn po0(a: Code, b: Code, c: Code, f: Vec<usize>, g: Vec<usize>) -> Code {
        Code::Po0(Box::new(a), Box::new(b), Box::new(c), f, g)
    }

    pub fn nodes(&self) -> usize {
        1 + self.children().iter().map(|c| c.nodes()).sum::<usize>()
    }

    pub fn children(&self) -> Vec<&Code> {
        match self {
            Code::N(_) | Code::Unit | Code::Empty | Code::Bad => vec![],
            Code::Sum(a, b) => vec![a, b],
            Code::Sigma(a, fam) | Code::Pi(a, fam) => std::iter::once(&**a).chain(fam).collect(),
            Code::Id(a, _, _) => vec![a],
            Code::Po0(a, b, c, _, _) => vec![a, b, c],
        }
    }

    pub fn former_name(&self) -> &'static str {
        match self {
            Code::N(_) => "n",
            Code::Unit => "unit",
            Code::Empty => "empty",
            Code::Bad => "nbad",
            Code::Sum(..) => "sum",
            Code::Sigma(..) => "sigma",
            Code::Pi(..) => "pi",
            Code::Id(..) => "id",
            Code::Po0(..) => "po0",
        }
    }
}

fn write_nats(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    write!(f, "(")?;
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            write!(f, " ")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

fn write_family(f: &mut fmt::Formatter<'_>, fam: &[Code]) -> fmt::Result {
    write!(f, "(")?;
    for (k, c) in fam.iter().enumerate() {
        if k > 0 {
            write!(f, " ")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

/// Prints the surface syntax read back by the frontend.
impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Code::N(name) => write!(f, "(n {name})"),
            Code::Unit => write!(f, "(unit)"),
            Code::Empty => write!(f, "(empty)"),
            Code::Bad => write!(f, "(nbad)"),
            Code::Sum(a, b) => write!(f, "(sum {a} {b})"),
            Code::Sigma(a, fam) | Code::Pi(a, fam) => {
                write!(f, "({} {a} ", self.former_name())?;
                write_family(f, fam)?;
                write!(f, ")")
            }
            Code::Id(a, x, y) => write!(f, "(id {a} {x} {y})"),
            Code::Po0(a, b, c, lf, lg) => {
                write!(f, "(po0 {a} {b} {c} ")?;
                write_nats(f, lf)?;
                write!(f, " ")?;
                write_nats(f, lg)?;
                write!(f, ")")
            }
        }
    }
}

impl VSignature {
    /// The W-tree of a code, checking family lengths, element ranges and
    /// the size bound on every decoding.
    pub fn to_tree(&self, c: &Code) -> Result<WTree<VShape>> {
        let children = c
            .children()
            .into_iter()
            .map(|k| self.to_tree(k))
            .collect::<Result<Vec<_>>>()?;
        let size = |t: &WTree<VShape>| self.target(&t.shape).size();
        let shape = match c {
            Code::N(name) => VShape::Nullary(
                self.nullary()
                    .lookup(name)
                    .ok_or_else(|| KernelError::MalformedCode(format!("unknown name `{name}`")))?,
            ),
            Code::Unit => VShape::Unit,
            Code::Empty => VShape::Empty,
            Code::Bad => VShape::Bad,
            Code::Sum(..) => VShape::Sum {
                left: size(&children[0]),
                right: size(&children[1]),
            },
            Code::Sigma(_, fam) | Code::Pi(_, fam) => {
                let head = size(&children[0]);
                if fam.len() != head {
                    return Err(KernelError::ArityMismatch(format!(
                        "{} over a set of size {head} needs {head} family members, got {}",
                        c.former_name(),
                        fam.len()
                    )));
                }
                let fam = children[1..].iter().map(size).collect();
                if matches!(c, Code::Pi(..)) {
                    VShape::Pi { fam }
                } else {
                    VShape::Sigma { fam }
                }
            }
            Code::Id(_, x, y) => VShape::Id {
                dom: size(&children[0]),
                x: *x,
                y: *y,
            },
            Code::Po0(_, _, _, f, g) => {
                let (a, b, cc) = (size(&children[0]), size(&children[1]), size(&children[2]));
                for (leg, name) in [(f, "first"), (g, "second")] {
                    if leg.len() != a {
                        return Err(KernelError::ArityMismatch(format!(
                            "po0 {name} leg lists {} targets for an apex of size {a}",
                            leg.len()
                        )));
                    }
                }
                VShape::Po0 {
                    f: ElemMap::new(FinSet(b), f.clone()).map_err(out_of_range(b, f))?,
                    g: ElemMap::new(FinSet(cc), g.clone()).map_err(out_of_range(cc, g))?,
                }
            }
        };
        self.check_shape(&shape)?;
        let el = self.target(&shape).size();
        if el > MAX_EL {
            return Err(KernelError::too_large(format!("decoding of {c}"), el as u128, MAX_EL as u128));
        }
        Ok(WTree::node(shape, children))
    }

    pub fn from_tree(&self, t: &WTree<VShape>) -> Code {
        let mut kids = t.children.iter().map(|c| self.from_tree(c));
        let mut next = || Box::new(kids.next().expect("child"));
        match &t.shape {
            VShape::Nullary(k) => Code::N(self.nullary().name(*k).to_string()),
            VShape::Unit => Code::Unit,
            VShape::Empty => Code::Empty,
            VShape::Bad => Code::Bad,
            VShape::Sum { .. } => Code::Sum(next(), next()),
            VShape::Sigma { .. } => {
                let head = next();
                Code::Sigma(head, kids.collect())
            }
            VShape::Pi { .. } => {
                let head = next();
                Code::Pi(head, kids.collect())
            }
            VShape::Id { x, y, .. } => Code::Id(next(), *x, *y),
            VShape::Po0 { f, g } => Code::Po0(
                next(),
                next(),
                next(),
                f.targets().to_vec(),
                g.targets().to_vec(),
            ),
        }
    }
}

fn out_of_range(size: usize, leg: &[usize]) -> impl FnOnce(KernelError) -> KernelError + '_ {
    move |_| {
        let elem = leg.iter().copied().find(|&x| x >= size).unwrap_or(size);
        KernelError::ElementOutOfRange { elem, size }
    }
}

/// The decoding of a code.
pub fn el(sig: &VSignature, c: &Code) -> Result<FinSet> {
    let t = sig.to_tree(c)?;
    Ok(sig.target(&t.shape))
}
