//! A standard word, its multisegment, the standard Kleshchev data it
//! determines, and the inverse map.
//!
//!     cargo run --example word_to_kleshchev

use segkit::correspondences::{eta, theta};
use segkit::kleshchev::{check_standard_kleshchev, column_residual_segments};
use segkit::segments::{sort_standard, word_to_multisegment, StandardWord};

fn main() -> segkit::Result<()> {
    let word = StandardWord::new(vec![-1, 0, 1, 2, 2], vec![-4, -5, -2, -1, -2])?;
    let ms = word_to_multisegment(&word);
    println!("word          {word}");
    println!("multisegment  {ms}");
    println!("standard seq  {}", sort_standard(&ms));

    let (gamma, f) = eta(&ms)?;
    println!("gamma         {gamma}");
    println!("charge f      {f}   (u = q^(2f))");
    println!("f*            {}", f.f_star());
    check_standard_kleshchev(&gamma, &f.f_star())?;

    let lambda = gamma.conjugate();
    println!("lambda        {lambda}");
    println!("column segs   {}", column_residual_segments(&lambda, &f)?);

    let back = theta(&gamma, &f)?;
    println!("theta         {back}");
    assert_eq!(back, word);
    Ok(())
}
