//! Index sets, types and the closure order on Schubert cells, printed as an
//! edge list of covering relations.
//!
//! cargo run --example bruhat_poset -- 8 2

use og_schubert::index_sets::{poset, preceq, IndexSet};
use og_schubert::partition::GrassParams;

fn main() -> og_schubert::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u32>());
    let big_n = args.next().and_then(|r| r.ok()).unwrap_or(8);
    let m = args.next().and_then(|r| r.ok()).unwrap_or(2);
    let params = GrassParams::new(big_n, m)?;

    let p = poset(&params)?;
    println!("{} cells, {} covering relations", p.elements.len(), p.covers.len());
    for e in &p.elements {
        println!("  {:?} type {} codim {} <-> {:?}", e.index_set, e.ty, e.codim, e.partition);
    }
    for line in p.edge_list().lines().take(10) {
        println!("  {line}");
    }

    if big_n == 8 && m == 2 {
        let q = IndexSet::new(vec![1, 4], params)?;
        let r = IndexSet::new(vec![1, 5], params)?;
        let res = preceq(&q, &r);
        println!("{q} preceq {r}: {} (critical index {:?})", res.holds, res.critical);
    }
    Ok(())
}
