// Usage: cargo run --example dimension_table [p] [m]
//
// Prints dim L(ω_r) next to dim Δ(ω_r) for r = 1..m, with every formula
// cross-checked. Defaults to the rank ten table at p = 2.

use spchar::sp_characters::{dim_simple, weyl_dim, DimMethod};
use spchar::Prime;

fn main() -> spchar::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let p = Prime::new(args.next().unwrap_or(2))?;
    let m = args.next().unwrap_or(10);

    println!("{:>4} {:>24} {:>24}  trig residual", "r", "dim L(ω_r)", "dim Δ(ω_r)");
    for r in 1..=m {
        let rep = dim_simple(r, m, p, DimMethod::All)?;
        assert!(rep.agree, "formulas disagree at r = {r}");
        let residual = rep.trig.as_ref().map_or(0.0, |t| t.residual);
        println!("{r:>4} {:>24} {:>24}  {residual:.1e}", rep.value(), weyl_dim(r, m)?);
    }
    Ok(())
}
