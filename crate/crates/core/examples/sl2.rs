// Usage: cargo run --example sl2
//
// SL(2): Weyl module factors and the characters of L(rρ), whose weights
// have multiplicity one exactly where the binomial coefficient survives mod p.

use spchar::sl2::{lucas_weights, sl2_simple_char, sl2_weyl_factors, winter_factors};
use spchar::Prime;

fn main() {
    let p = Prime::new(3).expect("3 is prime");
    for r in [4u64, 8, 13, 26] {
        assert_eq!(sl2_weyl_factors(r, p), winter_factors(r, p));
        let ch = sl2_simple_char(r, p);
        let weights = ch.weight_multiplicities();
        assert_eq!(weights, lucas_weights(r, p));
        let pattern: String = weights.iter().map(|&w| if w == 1 { '#' } else { '.' }).collect();
        println!("r = {r:>2}: Δ factors {:?}", sl2_weyl_factors(r, p));
        println!("        ch L = +Δ{:?} -Δ{:?}", ch.plus, ch.minus);
        println!("        weights {pattern}");
    }
}
