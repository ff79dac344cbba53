//! Set-level pushouts, joins, and the lemmas about pushouts along monos.

use vkernel::colimits::{check_join_prop, check_pushout_mono, check_pushout_mono_trunc, join, pushout, Span};
use vkernel::fincore::{ElemMap, FinSet};

fn main() -> vkernel::Result<()> {
    // Glue two copies of bool along a common point.
    let f = ElemMap::new(FinSet(2), vec![0])?;
    let g = ElemMap::new(FinSet(2), vec![0])?;
    let span = Span::new(f, g)?;
    let po = pushout(&span);
    println!("1 -> 2, 1 -> 2 glues to {} elements", po.d.size());
    println!("  inl {:?}  inr {:?}", po.inl.targets(), po.inr.targets());
    println!("  along a mono: {:?}", check_pushout_mono(&span)?);

    for (x, y) in [(0, 3), (1, 3), (2, 3), (0, 0), (1, 1)] {
        let d = check_join_prop(FinSet(x), FinSet(y));
        println!("join({x}, {y}) = {}  props in, prop out: {}", join(FinSet(x), FinSet(y)).size(), d.holds());
    }

    // Two propositions glued along a mono stay a proposition once they are
    // connected by a map B×C -> A.
    let unit = || ElemMap::new(FinSet(1), vec![0]);
    let s = Span::new(unit()?, unit()?)?;
    let h = ElemMap::new(FinSet(1), vec![0])?;
    println!("level -1: {:?}", check_pushout_mono_trunc(&s, -1, Some(&h))?.outcome);
    println!("level  0: {:?}", check_pushout_mono_trunc(&s, 0, None)?.outcome);
    Ok(())
}
