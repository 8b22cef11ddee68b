//! Kleshchev and standard Kleshchev multipartitions for a charge, the
//! clause that rules out each non-standard one, and the words that the
//! standard ones correspond to.
//!
//!     cargo run --example kleshchev_enumeration -- 2,0 3

use segkit::cli::parse_charge;
use segkit::correspondences::theta;
use segkit::kleshchev::{
    check_standard_kleshchev, enumerate_kleshchev, enumerate_standard_kleshchev, is_kleshchev,
};
use segkit::partitions::Multipartition;

fn main() -> segkit::Result<()> {
    let mut args = std::env::args().skip(1);
    let f = parse_charge(&args.next().unwrap_or_else(|| "2,0".into()))?;
    let r: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(3);

    let all = enumerate_kleshchev(&f, r);
    let standard = enumerate_standard_kleshchev(&f, r);
    println!("charge {f}, r = {r}");
    println!(
        "{} Kleshchev, {} standard Kleshchev",
        all.len(),
        standard.len()
    );
    for mp in Multipartition::all_of_size(f.m(), r) {
        if !is_kleshchev(&mp, &f)? {
            println!("  {mp}  not Kleshchev");
            continue;
        }
        match check_standard_kleshchev(&mp, &f) {
            // Standard Kleshchev for f means the word side uses f*.
            Ok(()) => println!("  {mp}  standard, word {}", theta(&mp, &f.f_star())?),
            Err(e) => println!("  {mp}  {e}"),
        }
    }
    Ok(())
}
