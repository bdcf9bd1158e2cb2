// Usage: cargo run --example specht_modules [n] [p]
//
// Two-row Specht modules of S_n: composition factors and simple dimensions.

use spchar::symmetric_group::{james_factors, simple_dim_two_row, simple_in_specht_basis, specht_dim};
use spchar::{Error, Prime};

fn main() -> spchar::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>().expect("integer argument"));
    let n = args.next().unwrap_or(12);
    let p = Prime::new(args.next().unwrap_or(2))?;

    println!("S_{n} at p = {p}");
    for r in 0..=n / 2 {
        let factors = james_factors(n, r, p)?;
        print!("  S^({},{r}): dim {:>4}, factors D^(n-i,i) for i in {factors:?}", n - r, specht_dim(n, r));
        match simple_in_specht_basis(n, r, p) {
            Ok(v) => println!(
                "; dim D = {}, D = {:?}",
                simple_dim_two_row(n, r, p)?,
                v.iter().collect::<Vec<_>>()
            ),
            Err(Error::NotALabel(..)) => println!("; not a simple label"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
