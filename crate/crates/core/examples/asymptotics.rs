// Usage: cargo run --example asymptotics
//
// Growth of dim L_{d+n}(ω_n) in n, and of dim L_m(ω_r) in m for fixed r.

use spchar::sp_characters::{asymptotic_constant, asymptotic_ratio, fixed_r_asymptotic_check};
use spchar::Prime;

fn main() -> spchar::Result<()> {
    for (p, d) in [(2, 0), (2, 1), (3, 0), (3, 2), (5, 4)] {
        let p = Prime::new(p)?;
        let ac = asymptotic_constant(d, p, 128)?;
        let (c, base, _) = ac.decimals(12);
        print!("p = {p}, d = {d}: c = {c}, base = {base}, ratio at n =");
        for n in [10, 40, 160] {
            print!(" {n}: {:.6}", asymptotic_ratio(d, p, n, 128)?);
        }
        println!();
    }

    println!("\nfixed r = 2 at p = 7, ratio to 2m²");
    for row in fixed_r_asymptotic_check(2, Prime::new(7)?, &[10, 100, 700, 5000])? {
        println!("  m = {:>4}: L {:.5}, Δ {:.5}", row.m, row.ratio, row.weyl_ratio);
    }
    Ok(())
}
