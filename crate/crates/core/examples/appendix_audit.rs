//! Every quadratic relation of the S-Heun algebra, checked as printed.

use sheun::verify::{render, verify_appendix, verify_stab, Format};

fn main() {
    let mut reports = verify_stab();
    reports.extend(verify_appendix());
    print!("{}", render(&reports, Format::Text));
}
