//! Column and row residual segments, and the duality between them under
//! conjugation and `f ↦ f*`.
//!
//!     cargo run --example residual_segments

use segkit::kleshchev::{column_residual_segments, row_residual_segments, Charge};
use segkit::partitions::{lambda_plus, Multipartition};
use segkit::segments::{is_standard_seq, mu_of};

fn main() -> segkit::Result<()> {
    let lambda = Multipartition::from_parts(vec![vec![2, 1], vec![3, 1, 1]])?;
    let f = Charge::new(vec![3, 0])?;

    let col = column_residual_segments(&lambda, &f)?;
    let row = row_residual_segments(&lambda.conjugate(), &f.f_star())?;
    println!("lambda            {lambda}   f = {f}");
    println!(
        "column segments   {col}   standard: {}",
        is_standard_seq(&col)
    );
    println!("inverse           {}", col.inverse());
    println!("row segments of lambda' for f*: {row}");
    assert_eq!(col.inverse(), row);

    // The lengths of the column segments are the parts of (λ⁺)'.
    println!("lengths           {:?}", mu_of(&col).0);
    println!("lambda+           {}", lambda_plus(&lambda));
    Ok(())
}
