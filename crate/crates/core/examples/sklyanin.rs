//! Degenerate Sklyanin generators from the universal ones, with their Casimirs.

use sheun::kernel::rat;
use sheun::structure::{e1_from_s, sklyanin_direct, sklyanin_set, Transcription};

fn main() -> sheun::Result<()> {
    let s = rat(3, 7);
    println!("s = {s}, e1 = {}", e1_from_s(&s));
    let set = sklyanin_set(&s)?;
    println!(
        "S0 = {}\nS3 = {}\nS+ = {}\nS- = {}",
        set.s0, set.s3, set.splus, set.sminus
    );

    let printed = sklyanin_direct(&s, Transcription::AsPrinted);
    println!(
        "\nS+ direct, as printed, minus the image: {}",
        &printed.splus - &set.splus
    );
    let lhs = set.s0.commutator(&set.sminus);
    let rhs = set.sminus.anticommutator(&set.sminus).scale(&rat(-2, 1));
    println!("[S0,S-] + 2{{S-,S-}} = {}", &lhs - &rhs);
    Ok(())
}
