//! Small worked examples across the modules, with expected values computed
//! by hand or by the oracles below.

use vkernel::colimits::{
    check_join_prop, check_pushout_mono, check_pushout_mono_trunc, is_mono, join, pushout, CheckOutcome, Span,
};
use vkernel::container::{
    ext_enumerate, retains_check, Coproduct, FamilyAssignment, FiniteContainerTable, LabelPath, TableShape,
};
use vkernel::fincore::{compose_bij, enum_bijs, enum_maps, invert_bij, trunc_level, Bij, ElemMap, FinSet};
use vkernel::universe::{el, Code, NullarySignature, PredicateSpec, Universe, VSignature};
use vkernel::wtrees::{tree_eq_oracle, EqEngine, PredOnIndex, WTree, Witness};

fn map(cod: usize, t: &[usize]) -> ElemMap {
    ElemMap::new(FinSet(cod), t.to_vec()).unwrap()
}

fn span(b: usize, c: usize, f: &[usize], g: &[usize]) -> Span {
    Span::new(map(b, f), map(c, g)).unwrap()
}

fn shape(name: &str, target: usize, srcs: &[usize]) -> TableShape {
    TableShape {
        name: name.into(),
        target,
        positions: srcs.iter().enumerate().map(|(k, &l)| (format!("p{k}"), l)).collect(),
    }
}

#[test]
fn finite_sets() {
    assert_eq!(enum_maps(FinSet(2), FinSet(3)).unwrap().len(), 9);
    assert_eq!(enum_maps(FinSet(0), FinSet(5)).unwrap().len(), 1);
    assert_eq!(enum_maps(FinSet(2), FinSet(0)).unwrap().len(), 0);
    assert_eq!(enum_bijs(FinSet(2), FinSet(2)).unwrap().len(), 2);
    assert_eq!(enum_bijs(FinSet(1), FinSet(2)).unwrap().len(), 0);
    assert_eq!(enum_bijs(FinSet(3), FinSet(3)).unwrap().len(), 6);
    assert_eq!(trunc_level(FinSet(1)).level(), -2);
    assert_eq!(trunc_level(FinSet(0)).level(), -1);
    assert_eq!(trunc_level(FinSet(2)).level(), 0);

    let swap = Bij::from_targets(vec![1, 0]).unwrap();
    let id = Bij::identity(FinSet(2));
    assert_eq!(compose_bij(&id, &swap).unwrap(), swap);
    assert!(compose_bij(&swap, &invert_bij(&swap)).unwrap().is_identity());
    assert!(compose_bij(&swap, &swap).unwrap().is_identity());
}

#[test]
fn pushouts_and_joins() {
    assert_eq!(pushout(&span(1, 1, &[], &[])).d.size(), 2);
    assert_eq!(pushout(&span(1, 1, &[0], &[0])).d.size(), 1);
    // Mono legs glue |A| points: 2 + 2 - 1.
    assert_eq!(pushout(&span(2, 2, &[0], &[0])).d.size(), 3);
    for e in 0..5 {
        assert_eq!(join(FinSet(0), FinSet(e)).size(), e);
        assert_eq!(join(FinSet(1), FinSet(e)).size(), 1);
    }
    assert_eq!(join(FinSet(2), FinSet(3)).size(), 1);

    assert!(is_mono(&ElemMap::identity(FinSet(3))));
    assert!(!is_mono(&ElemMap::constant(FinSet(2), FinSet(1), 0).unwrap()));
    assert!(is_mono(&map(4, &[])));

    let d = check_pushout_mono(&span(2, 2, &[0], &[0])).unwrap();
    assert!(d.inr_mono && d.pullback);
    assert!(check_pushout_mono(&span(3, 2, &[], &[])).unwrap().holds());

    for (x, y, size) in [(0, 1, 1), (1, 1, 1), (0, 0, 0)] {
        let j = check_join_prop(FinSet(x), FinSet(y));
        assert_eq!(j.join_size, size);
        assert!(j.hypothesis && j.conclusion);
    }

    let unit = span(1, 1, &[0], &[0]);
    let h = map(1, &[0]);
    assert_eq!(check_pushout_mono_trunc(&unit, -1, Some(&h)).unwrap().outcome, CheckOutcome::Pass);
    let apart = span(1, 1, &[], &[]);
    assert_eq!(check_pushout_mono_trunc(&apart, -1, None).unwrap().outcome, CheckOutcome::Skipped);
    assert_eq!(check_pushout_mono_trunc(&apart, 0, None).unwrap().outcome, CheckOutcome::Vacuous);
}

#[test]
fn extensions() {
    let three = FiniteContainerTable::new(
        vec!["i".into()],
        vec![shape("a", 0, &[]), shape("b", 0, &[]), shape("c", 0, &[])],
    )
    .unwrap();
    assert_eq!(ext_enumerate(&three, &FamilyAssignment::new(), &0).unwrap().len(), 3);

    let pair = FiniteContainerTable::new(vec!["i".into(), "j".into()], vec![shape("pair", 0, &[1, 1])]).unwrap();
    let mut f = FamilyAssignment::<LabelPath>::new();
    f.set_inhabitants(1, 2, false);
    assert_eq!(ext_enumerate(&pair, &f, &0).unwrap().len(), 4);
    assert_eq!(ext_enumerate(&pair, &f, &1).unwrap().len(), 0);
}

#[test]
fn retains_examples() {
    let indices: Vec<FinSet> = (0..=2).map(FinSet).collect();
    let mut prop_family = FamilyAssignment::<Bij>::new();
    for &i in &indices {
        prop_family.set_inhabitants(i, i.size().min(1), true);
    }
    for &i in &indices {
        for q in enum_bijs(i, i).unwrap() {
            for u in 0..prop_family.inhabitants(&i) {
                prop_family.set_witnesses(q.clone(), u, u, u32::from(q.is_identity())).unwrap();
            }
        }
    }
    let pi = VSignature::new(NullarySignature::default(), [vkernel::universe::Former::Pi]);
    assert!(retains_check(&pi, &prop_family).unwrap().passed());
    let nullary = VSignature::new(
        NullarySignature::new(vec![("bool".into(), FinSet(2)), ("tri".into(), FinSet(3))]).unwrap(),
        [],
    );
    assert!(retains_check(&nullary, &prop_family).unwrap().passed());

    let bad = VSignature::new(NullarySignature::default(), []).with_nbad(true);
    let r = retains_check(&bad, &prop_family).unwrap();
    assert!(!r.passed());
    assert_eq!(r.violations[0].witnesses, 2);
}

#[test]
fn wtree_equality() {
    let table = FiniteContainerTable::new(
        vec!["a".into(), "b".into()],
        vec![shape("x", 0, &[]), shape("y", 0, &[]), shape("node", 0, &[0, 0]), shape("u", 1, &[])],
    )
    .unwrap();
    let never = PredOnIndex::never();
    let refl = LabelPath(0);
    let (x, y) = (WTree::leaf(0), WTree::leaf(1));
    let mut e = EqEngine::new(&table, never.clone());
    let (tx, ty) = (e.insert(&x).unwrap(), e.insert(&y).unwrap());
    assert_eq!(e.eq_witnesses(&refl, tx, tx).unwrap().len(), 1);
    assert_eq!(e.eq_witnesses(&refl, tx, ty).unwrap().len(), 0);
    assert!(tree_eq_oracle(&table, &never, 2, &refl, &x, &x).unwrap());
    assert!(!tree_eq_oracle(&table, &never, 2, &refl, &x, &y).unwrap());

    let deep = WTree::node(2, vec![x.clone(), WTree::node(2, vec![x.clone(), y.clone()])]);
    let td = e.insert(&deep).unwrap();
    let set = e.eq_witnesses(&refl, td, td).unwrap();
    assert_eq!(set.witnesses, vec![e.encode_refl(td)]);

    let on_a = PredOnIndex::new("a", |&i: &usize| i == 0);
    let mut t = EqEngine::new(&table, on_a.clone());
    let (tx, ty) = (t.insert(&x).unwrap(), t.insert(&y).unwrap());
    assert_eq!(t.eq_witnesses(&refl, tx, ty).unwrap().witnesses, vec![Witness::Collapsed]);
    assert!(tree_eq_oracle(&table, &on_a, 1, &refl, &x, &y).unwrap());
    assert_eq!(t.encode_refl(tx), Witness::Collapsed);

    // Across the two summands of a coproduct nothing is identified.
    let left = FiniteContainerTable::new(vec!["a".into()], vec![shape("l", 0, &[])]).unwrap();
    let right = FiniteContainerTable::new(vec!["a".into()], vec![shape("r", 0, &[])]).unwrap();
    let sum = Coproduct::new(left, right).unwrap();
    let mut c = EqEngine::new(&sum, PredOnIndex::never());
    use vkernel::container::Tagged;
    let l = c.insert(&WTree::leaf(Tagged::Left(0))).unwrap();
    let r = c.insert(&WTree::leaf(Tagged::Right(0))).unwrap();
    assert_eq!(c.eq_count(&refl, l, r).unwrap(), 0);
}

#[test]
fn universe_examples() {
    let s = VSignature::standard();
    let bool_ = || Code::n("bool");
    assert_eq!(el(&s, &Code::pi(bool_(), vec![Code::Unit, Code::Unit])).unwrap(), FinSet(1));
    assert_eq!(el(&s, &Code::sigma(bool_(), vec![Code::Unit, bool_()])).unwrap(), FinSet(3));
    let glued = Code::po0(Code::Unit, Code::Unit, Code::Unit, vec![0], vec![0]);
    assert_eq!(el(&s, &glued).unwrap(), FinSet(1));

    let mut u = Universe::new(&s, PredicateSpec::IsProp);
    let empty = Bij::identity(FinSet(0));
    let w = u.eqv_witnesses(&empty, &Code::Empty, &Code::Empty).unwrap();
    assert_eq!(w.witnesses, vec![Witness::Collapsed]);
    assert!(u.eqv_total(&Code::Empty, &Code::Unit).unwrap().is_empty());
    assert_eq!(u.eqv_total(&Code::Unit, &Code::id(bool_(), 0, 0)).unwrap().len(), 1);
    assert_eq!(u.eqv_total(&bool_(), &bool_()).unwrap().len(), 1);
    assert!(u.is_equal(&Code::Unit, &Code::Unit).unwrap());
    assert!(!u.is_equal(&bool_(), &Code::pi(Code::Unit, vec![bool_()])).unwrap());
    assert!(u.is_equal(&Code::Empty, &Code::id(bool_(), 0, 1)).unwrap());

    for p in [PredicateSpec::SizeEq(2), PredicateSpec::All] {
        assert_eq!(Universe::new(&s, p).eqv_total(&bool_(), &bool_()).unwrap().len(), 2);
    }
}
