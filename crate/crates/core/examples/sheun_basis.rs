//! The five S-Heun generators on λ = x² and what they do to monomials.

use sheun::kernel::LambdaPoly;
use sheun::ops::{mult_x_identity, sheun_basis};

fn main() -> sheun::Result<()> {
    let b = sheun_basis();
    for (name, op) in [("L", &b.l), ("M1", &b.m1), ("M2", &b.m2), ("R1", &b.r1), ("R2", &b.r2)] {
        println!("{name:>2} = {op}");
    }
    println!();
    for n in 0..4 {
        let q = LambdaPoly::monomial(n);
        println!("lambda^{n}:");
        for (name, op) in [("L", &b.l), ("M1", &b.m1), ("M2", &b.m2), ("R1", &b.r1), ("R2", &b.r2)] {
            println!("  {name:>2} -> {}", op.apply(&q)?);
        }
    }
    println!(
        "\nquadratic combination giving multiplication by lambda: {}",
        mult_x_identity()?
    );
    Ok(())
}
