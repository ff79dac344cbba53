//! Equality codes for W-types over a container table, checked against the
//! brute-force saturation oracle.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vkernel::container::{random_table, FiniteContainerTable, LabelPath, TableShape};
use vkernel::wtrees::{verify_encode_decode, EqEngine, PredOnIndex, WTree};

fn main() -> vkernel::Result<()> {
    let table = FiniteContainerTable::new(
        vec!["t".into()],
        vec![
            TableShape { name: "leaf".into(), target: 0, positions: vec![] },
            TableShape { name: "node".into(), target: 0, positions: vec![("l".into(), 0), ("r".into(), 0)] },
        ],
    )?;
    let leaf = || WTree::leaf(0);
    let a = WTree::node(1, vec![leaf(), WTree::node(1, vec![leaf(), leaf()])]);
    let b = WTree::node(1, vec![WTree::node(1, vec![leaf(), leaf()]), leaf()]);

    let mut plain = EqEngine::new(&table, PredOnIndex::never());
    let (ta, tb) = (plain.insert(&a)?, plain.insert(&b)?);
    println!("plain: a = a has {} witness(es)", plain.eq_count(&LabelPath(0), ta, ta)?);
    println!("plain: a = b has {} witness(es)", plain.eq_count(&LabelPath(0), ta, tb)?);

    // Declaring the index propositional collapses every pair to one point.
    let mut trunc = EqEngine::new(&table, PredOnIndex::new("t", |_| true));
    let (ta, tb) = (trunc.insert(&a)?, trunc.insert(&b)?);
    println!("truncated: a = b is {:?}", trunc.eq_witnesses(&LabelPath(0), ta, tb)?.witnesses);

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in 0..5 {
        let t = random_table(&mut rng, 3, 4, 2);
        let r = verify_encode_decode(&t, PredOnIndex::never(), 2)?;
        println!("random table {k}: {} trees, {} instances, passed {}", r.trees, r.instances, r.passed());
    }
    Ok(())
}
