//! Reading tableaux, the permutation between them, skew standard tableaux
//! and Littlewood–Richardson coefficients.
//!
//!     cargo run --example tableaux_and_lr

use segkit::partitions::{
    column_reading_tableau, lr_coefficient, rho_of_skew, row_reading_tableau, standard_tableaux,
    w_lambda, Multipartition, Partition, Shape, SkewShape,
};

fn main() -> segkit::Result<()> {
    let mp = Multipartition::from_parts(vec![vec![2], vec![2, 1]])?;
    println!("{mp}");
    println!("  row reading    {}", row_reading_tableau(&mp));
    println!("  column reading {}", column_reading_tableau(&mp));
    let w = w_lambda(&mp);
    println!("  w = {w}, length {}", w.length());

    let s = SkewShape::from_parts(vec![3, 2, 1], vec![1])?;
    let syt = standard_tableaux(&Shape::Skew(s.clone()));
    println!("{s}: {} standard tableaux", syt.len());
    let rho = rho_of_skew(&s);
    println!(
        "  rho = {rho}, c = {}",
        lr_coefficient(s.outer(), s.inner(), &rho)
    );
    for g in Partition::all_of_size(s.size()) {
        let c = lr_coefficient(s.outer(), s.inner(), &g);
        if c > 0 {
            println!("  c({}; {}, {g}) = {c}", s.outer(), s.inner());
        }
    }
    Ok(())
}
