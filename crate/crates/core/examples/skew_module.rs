//! The affine Hecke module of a skew shape: basis of standard tableaux,
//! diagonal X action, T action, relation checks and the commutant.
//!
//!     cargo run --example skew_module -- 3,2 1 2

use segkit::cli::parse_partition;
use segkit::correspondences::{skew_drinfeld, skew_multisegment};
use segkit::hecke::scalar::format_rational;
use segkit::hecke::skew::x_exponents;
use segkit::hecke::{commutant_dimension, skew_rep_matrices, verify_affine_relations, QParam};
use segkit::partitions::SkewShape;

fn main() -> segkit::Result<()> {
    let mut args = std::env::args().skip(1);
    let outer = parse_partition(&args.next().unwrap_or_else(|| "3,2".into()))?;
    let inner = parse_partition(&args.next().unwrap_or_else(|| "1".into()))?;
    let q = QParam::parse(&args.next().unwrap_or_else(|| "2".into()))?;
    let shape = SkewShape::new(outer, inner)?;

    let m = skew_rep_matrices(&shape, &q)?;
    println!("shape {shape}, q0 = {q}, dimension {}", m.dim());
    for (v, t) in m.basis.iter().enumerate() {
        println!("  v{v}: {t}   X = ({})", x_exponents(&m, v).join(", "));
    }
    for (i, t) in m.t.iter().enumerate() {
        let entries: Vec<String> = (0..m.dim())
            .flat_map(|c| t.column(c).iter().map(move |(r, x)| (r, c, x)))
            .map(|(r, c, x)| format!("({r},{c})={}", format_rational(x)))
            .collect();
        println!("  T{} nonzero: {}", i + 1, entries.join(" "));
    }
    let checks = verify_affine_relations(&m);
    let failed = checks.iter().filter(|c| !c.pass).count();
    println!("{} relations checked, {failed} failed", checks.len());
    println!("commutant dimension {}", commutant_dimension(&m));

    let segs = skew_multisegment(&shape)?;
    let n = shape.column_lengths().into_iter().max().unwrap_or(1);
    println!(
        "column segments {segs}, roots {}",
        skew_drinfeld(&shape, n)?
    );
    Ok(())
}
