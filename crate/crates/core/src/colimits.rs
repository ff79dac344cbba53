//! Set-level pushouts and joins of finite sets, plus the diagnostics for
//! pushouts along monomorphisms.
//!
//! All colimits here are 0-truncated: the pushout of `B <- A -> C` is the
//! quotient of `B ⊔ C` by the equivalence relation generated by
//! `inl(f a) ~ inr(g a)`.

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{KernelError, Result};
use crate::fincore::{ElemMap, FinSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Span {
    pub a: FinSet,
    pub b: FinSet,
    pub c: FinSet,
    pub f: ElemMap,
    pub g: ElemMap,
}

impl Span {
    pub fn new(f: ElemMap, g: ElemMap) -> Result<Self> {
        if f.dom() != g.dom() {
            return Err(KernelError::DomainMismatch(format!(
                "span legs start at {} and {}",
                f.dom(),
                g.dom()
            )));
        }
        Ok(Span {
            a: f.dom(),
            b: f.cod(),
            c: g.cod(),
            f,
            g,
        })
    }

    /// `X <- X×Y -> Y`, pairs enumerated as `x * |Y| + y`.
    pub fn product(x: FinSet, y: FinSet) -> Self {
        let pairs = x.size() * y.size();
        let f = (0..pairs).map(|k| k / y.size()).collect();
        let g = (0..pairs).map(|k| k % y.size()).collect();
        Span {
            a: FinSet(pairs),
            b: x,
            c: y,
            f: ElemMap::new(x, f).expect("projection"),
            g: ElemMap::new(y, g).expect("projection"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushoutResult {
    pub d: FinSet,
    pub inl: ElemMap,
    pub inr: ElemMap,
}

pub fn pushout(s: &Span) -> PushoutResult {
    let nb = s.b.size();
    let mut classes = UnionFind::<usize>::new(nb + s.c.size());
    for a in s.a.elements() {
        classes.union(s.f.apply(a), nb + s.g.apply(a));
    }
    // Renumber classes by first occurrence, B first, then C.
    let mut label = vec![usize::MAX; nb + s.c.size()];
    let mut next = 0;
    let mut assigned = Vec::with_capacity(nb + s.c.size());
    for x in 0..nb + s.c.size() {
        let root = classes.find(x);
        if label[root] == usize::MAX {
            label[root] = next;
            next += 1;
        }
        assigned.push(label[root]);
    }
    let d = FinSet(next);
    let inr = assigned.split_off(nb);
    PushoutResult {
        d,
        inl: ElemMap::new(d, assigned).expect("class labels"),
        inr: ElemMap::new(d, inr).expect("class labels"),
    }
}

pub fn join(x: FinSet, y: FinSet) -> FinSet {
    pushout(&Span::product(x, y)).d
}

pub fn is_mono(f: &ElemMap) -> bool {
    f.is_injective()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PushoutMonoDiagnostic {
    /// The pushout of the mono leg, `C -> D`, is injective.
    pub inr_mono: bool,
    /// `{(b, c) | inl b = inr c}` is exactly the image of `A` under `(f, g)`.
    pub pullback: bool,
}

impl PushoutMonoDiagnostic {
    pub fn holds(&self) -> bool {
        self.inr_mono && self.pullback
    }
}

pub fn check_pushout_mono(s: &Span) -> Result<PushoutMonoDiagnostic> {
    if !is_mono(&s.f) {
        return Err(KernelError::precondition("first span leg is not mono"));
    }
    let po = pushout(s);
    let mut image = vec![false; s.b.size() * s.c.size()];
    for a in s.a.elements() {
        image[s.f.apply(a) * s.c.size() + s.g.apply(a)] = true;
    }
    let mut pullback = true;
    for b in s.b.elements() {
        for c in s.c.elements() {
            let meets = po.inl.apply(b) == po.inr.apply(c);
            pullback &= meets == image[b * s.c.size() + c];
        }
    }
    Ok(PushoutMonoDiagnostic {
        inr_mono: is_mono(&po.inr),
        pullback,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinPropDiagnostic {
    pub x: usize,
    pub y: usize,
    pub join_size: usize,
    pub hypothesis: bool,
    pub conclusion: bool,
}

impl JoinPropDiagnostic {
    pub fn holds(&self) -> bool {
        !self.hypothesis || self.conclusion
    }
}

pub fn check_join_prop(x: FinSet, y: FinSet) -> JoinPropDiagnostic {
    let j = join(x, y);
    JoinPropDiagnostic {
        x: x.size(),
        y: y.size(),
        join_size: j.size(),
        hypothesis: x.is_prop() && y.is_prop(),
        conclusion: j.is_prop(),
    }
}

/// Outcome of a conditional check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CheckOutcome {
    Pass,
    Fail,
    /// True for every finite set; reported rather than silently passed.
    Vacuous,
    /// The hypothesis does not hold (or cannot hold) for this instance.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PushoutTruncDiagnostic {
    pub level: i8,
    pub pushout_size: usize,
    pub outcome: CheckOutcome,
}

/// Truncation of a pushout along a mono at level `n ∈ {-1, 0}`.
///
/// At `n = -1` the extra map `h: B×C -> A` (pairs indexed `b * |C| + c`)
/// is required. When none can exist because `A` is empty and `B×C` is not,
/// the instance is skipped instead.
pub fn check_pushout_mono_trunc(
    s: &Span,
    n: i8,
    h: Option<&ElemMap>,
) -> Result<PushoutTruncDiagnostic> {
    if !is_mono(&s.f) {
        return Err(KernelError::precondition("first span leg is not mono"));
    }
    let d = pushout(s).d;
    let outcome = match n {
        0 => CheckOutcome::Vacuous,
        -1 => {
            let pairs = FinSet(s.b.size() * s.c.size());
            match h {
                Some(h) if h.dom() != pairs || h.cod() != s.a => {
                    return Err(KernelError::precondition(format!(
                        "h must be a map {} -> {}, got {} -> {}",
                        pairs,
                        s.a,
                        h.dom(),
                        h.cod()
                    )))
                }
                None if s.a.size() > 0 || pairs.size() == 0 => {
                    return Err(KernelError::precondition(
                        "n = -1 requires a map B×C -> A",
                    ))
                }
                None => CheckOutcome::Skipped,
                Some(_) if !(s.b.is_prop() && s.c.is_prop()) => CheckOutcome::Skipped,
                Some(_) if d.is_prop() => CheckOutcome::Pass,
                Some(_) => CheckOutcome::Fail,
            }
        }
        _ => {
            return Err(KernelError::precondition(format!(
                "truncation level {n} is outside {{-1, 0}}"
            )))
        }
    };
    Ok(PushoutTruncDiagnostic {
        level: n,
        pushout_size: d.size(),
        outcome,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincore::enum_maps;

    fn map(cod: usize, t: &[usize]) -> ElemMap {
        ElemMap::new(FinSet(cod), t.to_vec()).unwrap()
    }

    /// Size of the quotient of `B ⊔ C` by naive transitive closure.
    fn naive_pushout_size(s: &Span) -> usize {
        let n = s.b.size() + s.c.size();
        let mut rel = vec![vec![false; n]; n];
        for (i, row) in rel.iter_mut().enumerate() {
            row[i] = true;
        }
        for a in s.a.elements() {
            let (x, y) = (s.f.apply(a), s.b.size() + s.g.apply(a));
            rel[x][y] = true;
            rel[y][x] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if rel[i][k] && rel[k][j] {
                        rel[i][j] = true;
                    }
                }
            }
        }
        (0..n).filter(|&i| (0..i).all(|j| !rel[i][j])).count()
    }

    #[test]
    fn pushout_examples() {
        let s = Span::new(map(1, &[]), map(1, &[])).unwrap();
        assert_eq!(pushout(&s).d, FinSet(2));
        let s = Span::new(map(1, &[0]), map(1, &[0])).unwrap();
        assert_eq!(pushout(&s).d, FinSet(1));
        let s = Span::new(map(2, &[0]), map(2, &[0])).unwrap();
        assert_eq!(naive_pushout_size(&s), 3);
        assert_eq!(pushout(&s).d, FinSet(3));
    }

    #[test]
    fn pushout_matches_naive_closure() {
        for a in 0..=2 {
            for b in 0..=3 {
                for c in 0..=3 {
                    for f in enum_maps(FinSet(a), FinSet(b)).unwrap() {
                        for g in enum_maps(FinSet(a), FinSet(c)).unwrap() {
                            let s = Span::new(f.clone(), g).unwrap();
                            let po = pushout(&s);
                            assert_eq!(po.d.size(), naive_pushout_size(&s));
                            for x in s.a.elements() {
                                assert_eq!(po.inl.apply(s.f.apply(x)), po.inr.apply(s.g.apply(x)));
                            }
                            assert!(po.d.elements().all(|d| po.inl.targets().contains(&d)
                                || po.inr.targets().contains(&d)));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn pushout_numbering_is_first_occurrence() {
        // B = {0,1}, C = {0,1}; identify b1 with c0.
        let s = Span::new(map(2, &[1]), map(2, &[0])).unwrap();
        let po = pushout(&s);
        assert_eq!(po.inl.targets(), &[0, 1]);
        assert_eq!(po.inr.targets(), &[1, 2]);
    }

    #[test]
    fn join_examples() {
        for e in 0..5 {
            assert_eq!(join(FinSet(0), FinSet(e)), FinSet(e));
            assert_eq!(join(FinSet(e), FinSet(0)), FinSet(e));
        }
        assert_eq!(join(FinSet(1), FinSet(4)), FinSet(1));
        assert_eq!(naive_pushout_size(&Span::product(FinSet(2), FinSet(3))), 1);
        assert_eq!(join(FinSet(2), FinSet(3)), FinSet(1));
    }

    #[test]
    fn mono_examples() {
        assert!(is_mono(&ElemMap::identity(FinSet(3))));
        assert!(!is_mono(&map(1, &[0, 0])));
        assert!(is_mono(&map(4, &[])));
    }

    #[test]
    fn pushout_mono_examples() {
        let s = Span::new(map(2, &[0]), map(2, &[0])).unwrap();
        let d = check_pushout_mono(&s).unwrap();
        assert!(d.inr_mono && d.pullback);
        let s = Span::new(map(3, &[]), map(2, &[])).unwrap();
        assert!(check_pushout_mono(&s).unwrap().holds());
        let s = Span::new(map(1, &[0, 0]), map(2, &[0, 1])).unwrap();
        assert!(matches!(
            check_pushout_mono(&s),
            Err(KernelError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn join_prop_examples() {
        let d = check_join_prop(FinSet(0), FinSet(1));
        assert_eq!((d.join_size, d.hypothesis, d.conclusion), (1, true, true));
        let d = check_join_prop(FinSet(1), FinSet(1));
        assert_eq!((d.join_size, d.conclusion), (1, true));
        let d = check_join_prop(FinSet(0), FinSet(0));
        assert_eq!((d.join_size, d.conclusion), (0, true));
    }

    #[test]
    fn pushout_trunc_examples() {
        let s = Span::new(map(1, &[0]), map(1, &[0])).unwrap();
        let h = map(1, &[0]);
        let d = check_pushout_mono_trunc(&s, -1, Some(&h)).unwrap();
        assert_eq!(d.outcome, CheckOutcome::Pass);

        let s = Span::new(map(1, &[]), map(1, &[])).unwrap();
        let d = check_pushout_mono_trunc(&s, -1, None).unwrap();
        assert_eq!(d.outcome, CheckOutcome::Skipped);

        let d = check_pushout_mono_trunc(&s, 0, None).unwrap();
        assert_eq!(d.outcome, CheckOutcome::Vacuous);
    }

    #[test]
    fn pushout_trunc_requires_h_when_one_could_exist() {
        let s = Span::new(map(1, &[0]), map(1, &[0])).unwrap();
        assert!(check_pushout_mono_trunc(&s, -1, None).is_err());
        let wrong = map(1, &[0, 0]);
        assert!(check_pushout_mono_trunc(&s, -1, Some(&wrong)).is_err());
        assert!(check_pushout_mono_trunc(&s, 1, None).is_err());
    }
}
