// Usage: cargo run --example weyl_simplicity
//
// Which Weyl modules Δ(ω_r) are simple, and how many there are.

use spchar::weyl_simplicity::{is_simple_weyl, premet_suprunenko_conditions, simplicity_census};
use spchar::Prime;

fn main() -> spchar::Result<()> {
    let p = Prime::new(3)?;
    let m = 12;
    println!("Sp({}) at p = {p}", 2 * m);
    for r in 1..=m {
        let w = is_simple_weyl(r, m, p)?;
        let (c1, c2) = premet_suprunenko_conditions(r, m, p)?;
        assert_eq!((c1, c2), (w.simple, w.simple));
        println!("  r = {r:>2}: {:<10} (bound {})", if w.simple { "simple" } else { "not simple" }, w.bound);
    }

    let rep = simplicity_census(m + 1, p)?;
    println!("\nI_3({}) = {:?}", m + 1, rep.member_values());
    println!("C_3({}) = {} (digit formula {}, log formula {})", m + 1, rep.cardinality, rep.count_by_digits, rep.count_by_log);
    for (r, row) in &rep.table_labels {
        println!("  {r:>2} from {row:?}");
    }
    Ok(())
}
