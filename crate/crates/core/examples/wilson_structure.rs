//! Structure operators acting on rescaled Wilson polynomials.

use sheun::families::{wilson, wilson_scaled, ParamSet};
use sheun::kernel::{format_rational, rat, Rational};
use sheun::structure::{mu, mustar, tau, taustar, taustar_printed};

fn main() -> sheun::Result<()> {
    let p = ParamSet::new(rat(1, 3), rat(2, 5), rat(-3, 4), rat(5, 2));
    println!("W_2 = {}", wilson(2, &p)?);

    let q = mustar(&p).compose(&mu(&p));
    for n in 0..4 {
        let w = wilson_scaled(n, &p)?;
        let image = q.apply(&w)?;
        println!(
            "n = {n}: mu* mu W_n / W_n = {}",
            image.ratio_to(&w).expect("eigenvector")
        );
    }

    let show = |r: Option<Rational>| r.map_or("not proportional".to_string(), |r| format_rational(&r));
    let w2 = wilson_scaled(2, &p)?;
    let down = wilson_scaled(1, &p.shifted_halves([1, 1, 1, 1]))?;
    println!("tau W_2 / W_1(shifted) = {}", show(tau().apply(&w2)?.ratio_to(&down)));

    let up = wilson_scaled(3, &p.shifted_halves([-1, -1, -1, -1]))?;
    println!(
        "tau* W_2 / W_3(shifted) = {}",
        show(taustar(&p).apply(&w2)?.ratio_to(&up))
    );
    println!(
        "same with a5 = -1/8:      {}",
        show(taustar_printed(&p).apply(&w2)?.ratio_to(&up))
    );
    Ok(())
}
