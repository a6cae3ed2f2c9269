//! Computes Heegaard Floer correction terms of lens spaces.
//!
//! The correction terms `d(L(p, q), i)` are exact rationals defined by the
//! recursion
//!
//! ```text
//! d(L(1, 0), 0) = 0
//! d(L(p, q), i) = ((2i + 1 - p - q)² - pq) / 4pq  -  d(L(q, p mod q), i mod q)
//! ```
//!
//! For the doubled-slope case `q = 2` (the one a half-integer surgery
//! produces) there is also a closed form in `i` alone. This example prints a
//! small table for `L(7, 2)`, verifies the closed form against the recursion
//! on every spin-c structure of `L(143, 2)` and `L(101, 2)`, and shows the
//! orientation-reversal identity `d(L(p, q), i) = -d(-L(p, q), i)` that the
//! recursion is built on.
//!
//! Run with:
//!
//! ```text
//! cargo run --example lens_dinvariants
//! ```

use std::error::Error;

use adjlab::algebra::format_rational;
use adjlab::dinv::{lens_d2_closed, lens_d_neg, lens_d_recursive};

pub fn main() -> Result<(), Box<dyn Error>> {
    // A complete table for a small space.
    println!("d(L(7, 2), i) for i = 0..6:");
    for i in 0..7 {
        let d = lens_d_recursive(7, 2, i)?;
        println!("  i = {i}:  {}", format_rational(&d));
    }

    // The closed form agrees with the recursion on every index.
    for p in [143u64, 101] {
        for i in 0..p {
            let rec = lens_d_recursive(p, 2, i)?;
            let closed = lens_d2_closed(p, i)?;
            assert_eq!(rec, closed, "closed form disagrees at L({p}, 2), i = {i}");
        }
        println!("closed form == recursion on all {p} spin-c structures of L({p}, 2)");
    }

    // Spot values of the large space driving the 11a_255 obstruction. The
    // fundamental domain starts at i = 1; index 0 repeats the value at 1.
    println!();
    println!("d(L(143, 2), i) for i = 0..5:");
    for i in 0..6 {
        println!("  i = {i}:  {}", format_rational(&lens_d_recursive(143, 2, i)?));
    }

    // Orientation reversal: the recursion actually computes d(-L(p, q), ·)
    // and negates, so the two calls are exact mirror images.
    println!();
    println!("orientation reversal at L(13, 2):");
    for i in 0..13 {
        let plus = lens_d_recursive(13, 2, i)?;
        let minus = lens_d_neg(13, 2, i)?;
        assert_eq!(plus, -minus.clone());
        println!(
            "  i = {i:>2}:  d = {:>7}   d(reversed) = {:>7}",
            format_rational(&plus),
            format_rational(&minus),
        );
    }

    Ok(())
}
