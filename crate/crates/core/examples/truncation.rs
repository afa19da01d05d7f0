//! Leading coefficient of [R2 + (2e1-3)R1] on lambda^N.

use sheun::kernel::{int, rat};
use sheun::verify::pararacah::truncation_image;

fn main() -> sheun::Result<()> {
    for big_n in 1..=6usize {
        let n = int(big_n as i64);
        for e1 in [int(1) - &n, int(2) - &n, rat(1, 3)] {
            let image = truncation_image(big_n, &e1)?;
            println!(
                "N = {big_n}, e1 = {e1:>4}: degree {:?}, coefficient of lambda^(N+1) = {}",
                image.degree(),
                image.coeff(big_n + 1)
            );
        }
    }
    Ok(())
}
