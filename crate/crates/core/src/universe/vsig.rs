//! The type-former signature as an indexed container over finite sets.

use std::fmt;
use std::sync::{Arc, OnceLock};

use itertools::Itertools;
use serde::Serialize;

use super::codec;
use crate::colimits::{pushout, Span};
use crate::container::{ContainerSig, IdxPath, ShapeIdent};
use crate::error::{KernelError, Result};
use crate::fincore::{compose_bij, enum_bijs_capped, enum_maps, invert_bij, Bij, ElemMap, FinSet, DEFAULT_BIJ_CAP};

/// Largest number of identifications listed for one pair of shapes.
pub const MAX_IDENTS: u128 = 1_000_000;

impl IdxPath for Bij {
    type Index = FinSet;

    fn source(&self) -> FinSet {
        self.dom()
    }

    fn target(&self) -> FinSet {
        self.cod()
    }

    fn is_refl(&self) -> bool {
        self.is_identity()
    }

    fn compose(&self, next: &Self) -> Result<Self> {
        compose_bij(self, next)
    }

    fn invert(&self) -> Self {
        invert_bij(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Former {
    Unit,
    Empty,
    Sum,
    Sigma,
    Pi,
    Id,
    Po0,
}

impl Former {
    pub const ALL: [Former; 7] = [
        Former::Unit,
        Former::Empty,
        Former::Sum,
        Former::Sigma,
        Former::Pi,
        Former::Id,
        Former::Po0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Former::Unit => "unit",
            Former::Empty => "empty",
            Former::Sum => "sum",
            Former::Sigma => "sigma",
            Former::Pi => "pi",
            Former::Id => "id",
            Former::Po0 => "po0",
        }
    }

    pub fn parse(name: &str) -> Result<Former> {
        Former::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| KernelError::UnknownFormer(name.to_string()))
    }
}

impl fmt::Display for Former {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The fixed family of named base sets. Names are distinct.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct NullarySignature {
    entries: Vec<(String, FinSet)>,
}

impl NullarySignature {
    pub fn new(entries: Vec<(String, FinSet)>) -> Result<Self> {
        if let Some(dup) = entries.iter().map(|(n, _)| n).duplicates().next() {
            return Err(KernelError::DuplicateName(dup.clone()));
        }
        Ok(NullarySignature { entries })
    }

    pub fn entries(&self) -> &[(String, FinSet)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.entries.iter().position(|(n, _)| n == name)
    }

    pub fn name(&self, k: usize) -> &str {
        &self.entries[k].0
    }

    pub fn size(&self, k: usize) -> FinSet {
        self.entries[k].1
    }
}

/// A top-level constructor together with the decoded sizes it depends on.
///
/// Positions: `Sum` has `[left, right]`; `Sigma` and `Pi` have the domain
/// followed by one position per domain element; `Id` has the carrier;
/// `Po0` has the apex and the two legs' codomains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VShape {
    Nullary(usize),
    Unit,
    Empty,
    Bad,
    Sum { left: usize, right: usize },
    Sigma { fam: Vec<usize> },
    Pi { fam: Vec<usize> },
    Id { dom: usize, x: usize, y: usize },
    Po0 { f: ElemMap, g: ElemMap },
}

impl VShape {
    pub fn former_name(&self) -> &'static str {
        match self {
            VShape::Nullary(_) => "n",
            VShape::Unit => "unit",
            VShape::Empty => "empty",
            VShape::Bad => "nbad",
            VShape::Sum { .. } => "sum",
            VShape::Sigma { .. } => "sigma",
            VShape::Pi { .. } => "pi",
            VShape::Id { .. } => "id",
            VShape::Po0 { .. } => "po0",
        }
    }
}

/// Enabled formers over a table of named base sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VSignature {
    nullary: NullarySignature,
    formers: Vec<Former>,
    nbad: bool,
    bij_cap: usize,
}

impl VSignature {
    pub fn new(nullary: NullarySignature, formers: impl IntoIterator<Item = Former>) -> Self {
        let formers = formers.into_iter().sorted().dedup().collect();
        VSignature {
            nullary,
            formers,
            nbad: false,
            bij_cap: DEFAULT_BIJ_CAP,
        }
    }

    /// `bool = 2`, `tri = 3` with every former enabled.
    pub fn standard() -> Self {
        let nullary = NullarySignature::new(vec![
            ("bool".into(), FinSet(2)),
            ("tri".into(), FinSet(3)),
        ])
        .expect("distinct names");
        VSignature::new(nullary, Former::ALL)
    }

    pub fn with_nbad(mut self, on: bool) -> Self {
        self.nbad = on;
        self
    }

    pub fn with_bij_cap(mut self, cap: usize) -> Self {
        self.bij_cap = cap;
        self
    }

    pub fn nullary(&self) -> &NullarySignature {
        &self.nullary
    }

    pub fn formers(&self) -> &[Former] {
        &self.formers
    }

    pub fn has(&self, f: Former) -> bool {
        self.formers.contains(&f)
    }

    pub fn nbad(&self) -> bool {
        self.nbad
    }

    pub fn bij_cap(&self) -> usize {
        self.bij_cap
    }

    /// Bijections `a -> b`, shared across calls for small sizes.
    fn bijs(&self, a: usize, b: usize) -> Result<Arc<Vec<Bij>>> {
        static CACHE: [OnceLock<Arc<Vec<Bij>>>; 9] = [const { OnceLock::new() }; 9];
        if a != b {
            return Ok(Arc::default());
        }
        if a > self.bij_cap || a >= CACHE.len() {
            return enum_bijs_capped(FinSet(a), FinSet(b), self.bij_cap).map(Arc::new);
        }
        Ok(CACHE[a]
            .get_or_init(|| {
                Arc::new(enum_bijs_capped(FinSet(a), FinSet(a), a).expect("within cap"))
            })
            .clone())
    }

    fn shape_enabled(&self, s: &VShape) -> bool {
        match s {
            VShape::Nullary(k) => *k < self.nullary.len(),
            VShape::Unit => self.has(Former::Unit),
            VShape::Empty => self.has(Former::Empty),
            VShape::Bad => self.nbad,
            VShape::Sum { .. } => self.has(Former::Sum),
            VShape::Sigma { .. } => self.has(Former::Sigma),
            VShape::Pi { .. } => self.has(Former::Pi),
            VShape::Id { .. } => self.has(Former::Id),
            VShape::Po0 { .. } => self.has(Former::Po0),
        }
    }

    /// Rejects shapes whose embedded data does not fit their sizes.
    pub fn check_shape(&self, s: &VShape) -> Result<()> {
        if !self.shape_enabled(s) {
            return Err(KernelError::UnknownFormer(s.former_name().to_string()));
        }
        match s {
            VShape::Id { dom, x, y } => {
                for &e in [x, y] {
                    if e >= *dom {
                        return Err(KernelError::ElementOutOfRange { elem: e, size: *dom });
                    }
                }
            }
            VShape::Po0 { f, g } if f.dom() != g.dom() => {
                return Err(KernelError::MalformedCode(format!(
                    "po0 legs have domains {} and {}",
                    f.dom(),
                    g.dom()
                )));
            }
            _ => {}
        }
        Ok(())
    }

    fn span(f: &ElemMap, g: &ElemMap) -> Span {
        Span::new(f.clone(), g.clone()).expect("legs share a domain")
    }
}

/// Bijection on `Π(a) B(a)` induced by `pa` and the fiberwise `pb`.
fn induced_pi(fam0: &[usize], fam1: &[usize], pa: &Bij, pb: &[Bij]) -> Bij {
    let size = codec::pi_size(fam0);
    let targets = (0..size)
        .map(|e| {
            let f = codec::pi_decode(fam0, e);
            let mut g = vec![0; fam1.len()];
            for (a, &fa) in f.iter().enumerate() {
                g[pa.apply(a)] = pb[a].apply(fa);
            }
            codec::pi_encode(fam1, &g)
        })
        .collect();
    Bij::from_targets(targets).expect("induced map is a bijection")
}

fn induced_sigma(fam0: &[usize], fam1: &[usize], pa: &Bij, pb: &[Bij]) -> Bij {
    let off1 = codec::sigma_offsets(fam1);
    let targets = (0..codec::sigma_size(fam0))
        .map(|e| {
            let (a, b) = codec::sigma_decode(fam0, e);
            off1[pa.apply(a)] + pb[a].apply(b)
        })
        .collect();
    Bij::from_targets(targets).expect("induced map is a bijection")
}

fn induced_sum(left: usize, pa: &Bij, pb: &Bij) -> Bij {
    let targets = (0..left)
        .map(|x| pa.apply(x))
        .chain((0..pb.dom().size()).map(|y| left + pb.apply(y)))
        .collect();
    Bij::from_targets(targets).expect("block map is a bijection")
}

/// The map of pushouts induced by compatible bijections of the three corners.
fn induced_po(s0: &Span, s1: &Span, pb: &Bij, pc: &Bij) -> Bij {
    let d0 = pushout(s0);
    let d1 = pushout(s1);
    let mut targets = vec![usize::MAX; d0.d.size()];
    for b in 0..s0.b.size() {
        targets[d0.inl.apply(b)] = d1.inl.apply(pb.apply(b));
    }
    for c in 0..s0.c.size() {
        targets[d0.inr.apply(c)] = d1.inr.apply(pc.apply(c));
    }
    Bij::from_targets(targets).expect("induced pushout map is a bijection")
}

/// All ways of choosing one bijection per fiber along `pa`.
fn fiber_choices(
    sig: &VSignature,
    fam0: &[usize],
    fam1: &[usize],
    pa: &Bij,
) -> Result<Vec<Vec<Bij>>> {
    let per_fiber = fam0
        .iter()
        .enumerate()
        .map(|(a, &n)| sig.bijs(n, fam1[pa.apply(a)]).map(|v| v.to_vec()))
        .collect::<Result<Vec<_>>>()?;
    let count: u128 = per_fiber.iter().map(|v| v.len() as u128).product();
    if count > MAX_IDENTS {
        return Err(KernelError::too_large("fiber bijections", count, MAX_IDENTS));
    }
    if per_fiber.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    Ok(per_fiber.into_iter().multi_cartesian_product().collect())
}

impl ContainerSig for VSignature {
    type Index = FinSet;
    type Shape = VShape;
    type Path = Bij;

    fn refl(&self, i: &FinSet) -> Bij {
        Bij::identity(*i)
    }

    fn idx_paths(&self, i0: &FinSet, i1: &FinSet) -> Result<Vec<Bij>> {
        Ok(self.bijs(i0.size(), i1.size())?.to_vec())
    }

    fn index_domain(&self) -> Option<Vec<FinSet>> {
        None
    }

    fn target(&self, s: &VShape) -> FinSet {
        FinSet(match s {
            VShape::Nullary(k) => self.nullary.size(*k).size(),
            VShape::Unit => 1,
            VShape::Empty => 0,
            VShape::Bad => 2,
            VShape::Sum { left, right } => left + right,
            VShape::Sigma { fam } => codec::sigma_size(fam),
            VShape::Pi { fam } => codec::pi_size(fam),
            VShape::Id { x, y, .. } => usize::from(x == y),
            VShape::Po0 { f, g } => pushout(&Self::span(f, g)).d.size(),
        })
    }

    fn arity(&self, s: &VShape) -> usize {
        match s {
            VShape::Nullary(_) | VShape::Unit | VShape::Empty | VShape::Bad => 0,
            VShape::Sum { .. } => 2,
            VShape::Sigma { fam } | VShape::Pi { fam } => 1 + fam.len(),
            VShape::Id { .. } => 1,
            VShape::Po0 { .. } => 3,
        }
    }

    fn source(&self, s: &VShape, pos: usize) -> FinSet {
        FinSet(match (s, pos) {
            (VShape::Sum { left, .. }, 0) => *left,
            (VShape::Sum { right, .. }, 1) => *right,
            (VShape::Sigma { fam } | VShape::Pi { fam }, 0) => fam.len(),
            (VShape::Sigma { fam } | VShape::Pi { fam }, k) => fam[k - 1],
            (VShape::Id { dom, .. }, 0) => *dom,
            (VShape::Po0 { f, .. }, 0) => f.dom().size(),
            (VShape::Po0 { f, .. }, 1) => f.cod().size(),
            (VShape::Po0 { g, .. }, 2) => g.cod().size(),
            _ => panic!("shape {s:?} has no position {pos}"),
        })
    }

    fn shape_idents(&self, s0: &VShape, s1: &VShape) -> Result<Vec<ShapeIdent<Bij>>> {
        let mut out = Vec::new();
        match (s0, s1) {
            (VShape::Nullary(a), VShape::Nullary(b)) if a == b => out.push(self.refl_ident(s0)),
            (VShape::Unit, VShape::Unit) | (VShape::Empty, VShape::Empty) => {
                out.push(self.refl_ident(s0))
            }
            (VShape::Bad, VShape::Bad) => {
                for p in self.bijs(2, 2)?.iter() {
                    out.push(ShapeIdent { target_path: p.clone(), pos_match: vec![], src_paths: vec![] });
                }
            }
            (VShape::Sum { left: l0, right: r0 }, VShape::Sum { left: l1, right: r1 }) => {
                for pa in self.bijs(*l0, *l1)?.iter() {
                    for pb in self.bijs(*r0, *r1)?.iter() {
                        out.push(ShapeIdent {
                            target_path: induced_sum(*l0, pa, pb),
                            pos_match: vec![0, 1],
                            src_paths: vec![pa.clone(), pb.clone()],
                        });
                    }
                }
            }
            (VShape::Sigma { fam: f0 }, VShape::Sigma { fam: f1 })
            | (VShape::Pi { fam: f0 }, VShape::Pi { fam: f1 }) => {
                let is_pi = matches!(s0, VShape::Pi { .. });
                for pa in self.bijs(f0.len(), f1.len())?.iter() {
                    for pb in fiber_choices(self, f0, f1, pa)? {
                        let target_path = if is_pi {
                            induced_pi(f0, f1, pa, &pb)
                        } else {
                            induced_sigma(f0, f1, pa, &pb)
                        };
                        let pos_match = std::iter::once(0)
                            .chain((0..f0.len()).map(|a| 1 + pa.apply(a)))
                            .collect();
                        let src_paths = std::iter::once(pa.clone()).chain(pb).collect();
                        out.push(ShapeIdent { target_path, pos_match, src_paths });
                    }
                }
            }
            (VShape::Id { dom: d0, x: x0, y: y0 }, VShape::Id { dom: d1, x: x1, y: y1 }) => {
                let (t0, t1) = (self.target(s0), self.target(s1));
                if t0 == t1 {
                    for pa in self.bijs(*d0, *d1)?.iter() {
                        if pa.apply(*x0) == *x1 && pa.apply(*y0) == *y1 {
                            out.push(ShapeIdent {
                                target_path: Bij::identity(t0),
                                pos_match: vec![0],
                                src_paths: vec![pa.clone()],
                            });
                        }
                    }
                }
            }
            (VShape::Po0 { f: f0, g: g0 }, VShape::Po0 { f: f1, g: g1 })
                if f0.dom() == f1.dom() && f0.cod() == f1.cod() && g0.cod() == g1.cod() =>
            {
                let (sp0, sp1) = (Self::span(f0, g0), Self::span(f1, g1));
                let candidates = [sp0.a, sp0.b, sp0.c]
                    .iter()
                    .map(|x| crate::fincore::factorial(x.size()))
                    .fold(1u128, u128::saturating_mul);
                if candidates > MAX_IDENTS {
                    return Err(KernelError::too_large("po0 identifications", candidates, MAX_IDENTS));
                }
                for pa in self.bijs(sp0.a.size(), sp1.a.size())?.iter() {
                    for pb in self.bijs(sp0.b.size(), sp1.b.size())?.iter() {
                        if (0..sp0.a.size()).any(|a| pb.apply(f0.apply(a)) != f1.apply(pa.apply(a))) {
                            continue;
                        }
                        for pc in self.bijs(sp0.c.size(), sp1.c.size())?.iter() {
                            if (0..sp0.a.size())
                                .any(|a| pc.apply(g0.apply(a)) != g1.apply(pa.apply(a)))
                            {
                                continue;
                            }
                            out.push(ShapeIdent {
                                target_path: induced_po(&sp0, &sp1, pb, pc),
                                pos_match: vec![0, 1, 2],
                                src_paths: vec![pa.clone(), pb.clone(), pc.clone()],
                            });
                        }
                    }
                }
            }
            _ => {}
        }
        Ok(out)
    }

    fn shapes_over(&self, indices: &[FinSet]) -> Result<Vec<VShape>> {
        let sizes: Vec<usize> = indices.iter().map(|i| i.size()).sorted().dedup().collect();
        let mut out: Vec<VShape> = (0..self.nullary.len()).map(VShape::Nullary).collect();
        out.extend([VShape::Unit, VShape::Empty, VShape::Bad]);
        if self.has(Former::Sum) {
            for (&l, &r) in sizes.iter().cartesian_product(&sizes) {
                out.push(VShape::Sum { left: l, right: r });
            }
        }
        for &k in &sizes {
            let count = (sizes.len() as u128).saturating_pow(k as u32);
            if count > MAX_IDENTS {
                return Err(KernelError::too_large("families", count, MAX_IDENTS));
            }
            let fams: Vec<Vec<usize>> = if k == 0 {
                vec![Vec::new()]
            } else {
                (0..k).map(|_| sizes.clone()).multi_cartesian_product().collect()
            };
            for fam in fams {
                out.push(VShape::Sigma { fam: fam.clone() });
                out.push(VShape::Pi { fam });
            }
            for (x, y) in (0..k).cartesian_product(0..k) {
                out.push(VShape::Id { dom: k, x, y });
            }
        }
        if self.has(Former::Po0) {
            for ((&a, &b), &c) in sizes.iter().cartesian_product(&sizes).cartesian_product(&sizes) {
                for f in enum_maps(FinSet(a), FinSet(b))? {
                    for g in enum_maps(FinSet(a), FinSet(c))? {
                        out.push(VShape::Po0 { f: f.clone(), g });
                    }
                }
            }
        }
        out.retain(|s| self.shape_enabled(s));
        Ok(out)
    }
}
