// Usage: cargo run --example decomposition_matrices
//
// A(n) and B(n) are mutually inverse. For n = p^k they also follow from a
// block recursion, checked here against the entrywise definition.

use spchar::decomp_matrices::{build_direct, build_recursive, verify_inverse, MatrixKind};
use spchar::Prime;

fn main() -> spchar::Result<()> {
    let p = Prime::new(3)?;
    let a = build_direct(9, p, MatrixKind::A)?;
    let b = build_direct(9, p, MatrixKind::B)?;
    println!("A(9) at p = 3\n{}", a.matrix.to_grid());
    println!("B(9) at p = 3\n{}", b.matrix.to_grid());
    println!("A(9)B(9) = Id: {}", (&a.matrix * &b.matrix).is_identity());

    for (p, e) in [(2u64, 6u32), (3, 4), (5, 3)] {
        let p = Prime::new(p)?;
        let n = p.pow(e) as usize;
        let same = build_recursive(e, p, MatrixKind::B)?.matrix == build_direct(n, p, MatrixKind::B)?.matrix;
        let inverse = verify_inverse(n, p)?;
        println!("p = {p}, n = {n}: recursive = direct {same}, inverse {}", inverse.ok);
    }
    Ok(())
}
