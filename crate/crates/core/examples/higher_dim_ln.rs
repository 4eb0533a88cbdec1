//! The product scene L_n in dimensions 3 to 6, with its limit constant.
//!
//! `cargo run --example higher_dim_ln`

use convex_components::gallery::{limit_constant, make_ln, GalleryId};

fn main() -> convex_components::Result<()> {
    let (l, lambda) = (10.0, 2.0);
    for n in 3..=6 {
        let lim = limit_constant(GalleryId::Ln, lambda, n)?;
        for h in [1.0, 0.1, 0.01] {
            let s = make_ln(l, h, lambda, n)?;
            let r = s.report()?;
            println!("n = {n} h = {h:<5} basic {} main {} (ratio {:.5})", r.basic, r.main, r.main_ratio);
        }
        println!("        limit of the main ratio as h -> 0: {:.7}", lim.closed_form);
    }
    Ok(())
}
