// Usage: cargo run --example characters
//
// ch L(ω_r) in the Weyl basis and ch Δ(ω_r) in the simple basis.

use spchar::sp_characters::{decompose_simple, decompose_weyl, j_set, CharacterVector};
use spchar::Prime;

fn show(v: &CharacterVector, symbol: &str) -> String {
    let mut terms: Vec<String> = v
        .iter()
        .map(|(j, c)| format!("{} {symbol}(ω_{j})", if c > 0 { "+" } else { "-" }))
        .collect();
    terms.reverse();
    terms.join(" ")
}

fn main() -> spchar::Result<()> {
    let p = Prime::new(2)?;
    let m = 4;
    for r in 1..=m {
        let j = j_set(r, m, p)?;
        println!("r = {r}: J = {:?}, δ = {}", j.js, j.delta);
        println!("  ch L = {}", show(&decompose_simple(r, m, p)?, "Δ"));
        println!("  ch Δ = {}", show(&decompose_weyl(r, m, p)?, "L"));
    }

    // a larger case: the character has 2^(number of free digits) pairs of terms
    let p = Prime::new(3)?;
    let v = decompose_simple(40, 100, p)?;
    println!("\np = 3, m = 100, r = 40: {} Weyl terms", v.iter().count());
    println!("  +: {:?}", v.positive());
    println!("  -: {:?}", v.negative());
    Ok(())
}
