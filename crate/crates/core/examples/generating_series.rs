// Usage: cargo run --example generating_series
//
// χ_d(z) = Σ dim L_{d+n}(ω_n) z^n and the tilting series D_d(z).

use spchar::series::{chi_series, d_series};
use spchar::sp_characters::dim_by_theorem;
use spchar::Prime;

fn main() -> spchar::Result<()> {
    for (p, d) in [(2, 0), (2, 3), (3, 1), (5, 2)] {
        let p = Prime::new(p)?;
        let chi = chi_series(d, p, 10)?.to_integers()?;
        let dd = d_series(d, p, 10)?.to_integers()?;
        for (n, c) in chi.iter().enumerate() {
            assert_eq!(c, &dim_by_theorem(n as u64, d + n as u64, p)?);
        }
        println!("p = {p}, d = {d}");
        println!("  χ_d: {}", chi.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
        println!("  D_d: {}", dd.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" "));
    }
    Ok(())
}
