//! Para-Racah polynomials, their bi-lattice and solved weights.

use num_traits::Zero;
use sheun::families::{para_racah, para_racah_lattice};
use sheun::kernel::{format_rational, rat, Rational};
use sheun::verify::solve_discrete_weights;

fn main() -> sheun::Result<()> {
    let (big_n, a, c, w) = (5, rat(1, 4), rat(3, 4), rat(2, 1));
    let lattice = para_racah_lattice(big_n, &a, &c)?;
    let polys = (0..=big_n + 1)
        .map(|n| para_racah(n, big_n, &a, &c, &w))
        .collect::<sheun::Result<Vec<_>>>()?;
    for (n, p) in polys.iter().enumerate() {
        println!("P_{n} = {p}");
    }
    println!(
        "lattice: {:?}",
        lattice.points.iter().map(format_rational).collect::<Vec<_>>()
    );

    let weights = solve_discrete_weights(&polys[..=big_n], &lattice)?;
    println!("weights: {:?}", weights.iter().map(format_rational).collect::<Vec<_>>());
    for (n, p) in polys[..=big_n].iter().enumerate() {
        let norm = lattice
            .points
            .iter()
            .zip(&weights)
            .fold(Rational::zero(), |s, (x, wt)| s + wt * p.eval(x) * p.eval(x));
        println!("norm_{n} = {}", format_rational(&norm));
    }
    let top = &polys[big_n + 1];
    println!(
        "P_{} on the lattice: {:?}",
        big_n + 1,
        lattice
            .points
            .iter()
            .map(|x| format_rational(&top.eval(x)))
            .collect::<Vec<_>>()
    );
    Ok(())
}
