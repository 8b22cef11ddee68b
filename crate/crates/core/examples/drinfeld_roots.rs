//! Drinfeld root data of a multisegment, the dominance test, the inverse,
//! and the direct formula from a multipartition.
//!
//!     cargo run --example drinfeld_roots

use segkit::correspondences::{
    drinfeld_from_multipartition, is_dominant, omega_twist, partial_inverse, partial_map,
    DrinfeldRoots,
};
use segkit::kleshchev::{column_residual_segments, Charge};
use segkit::partitions::Multipartition;
use segkit::segments::{shift, MultisegmentZ};

fn main() -> segkit::Result<()> {
    let ms = MultisegmentZ::from_pairs(&[(-1, 0), (1, 1), (0, 2)])?;
    let n = 3;
    let q = partial_map(&ms, n)?;
    println!("multisegment {ms}");
    println!("roots        {q}   dominant: {}", is_dominant(&q));
    println!("inverse      {}", partial_inverse(&q)?);
    println!("shift by 2   {}", partial_map(&shift(&ms, 2), n)?);
    println!("twist by 2   {}", omega_twist(&q, 2));

    // Not every root datum comes from a multisegment.
    let bad = DrinfeldRoots::new(2, vec![vec![], vec![0]])?;
    println!("{bad} dominant: {}", is_dominant(&bad));

    let lambda = Multipartition::from_parts(vec![vec![2, 1]])?;
    let f = Charge::new(vec![0])?;
    let direct = drinfeld_from_multipartition(&lambda, &f, 2)?;
    let via = partial_map(&column_residual_segments(&lambda, &f)?.into(), 2)?;
    println!("{lambda} f={f}: {direct}, via segments {via}");
    Ok(())
}
