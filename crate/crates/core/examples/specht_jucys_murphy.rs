//! The element z_λ of the finite Hecke algebra, the dimension of H(r)z_λ,
//! and Jucys–Murphy eigenvalues on it.
//!
//!     cargo run --example specht_jucys_murphy -- 3,1

use segkit::cli::parse_partition;
use segkit::hecke::{
    jm_eigenvalue_check, specht_dimension, specht_module, z_lambda, ModuleMatrices, QParam,
};
use segkit::partitions::{column_reading_partition, hook_length_count};

fn main() -> segkit::Result<()> {
    let lam = parse_partition(&std::env::args().nth(1).unwrap_or_else(|| "3,1".into()))?;
    let q = QParam::default();

    let z = z_lambda(&lam, &q)?;
    println!("lambda {lam}: z has {} terms", z.terms().len());
    println!(
        "dim H(r) z = {}, hook length count {}",
        specht_dimension(&lam, &q)?,
        hook_length_count(&lam)
    );
    println!("t_lambda {}", column_reading_partition(&lam));
    for c in jm_eigenvalue_check(&lam, &q)? {
        println!(
            "  {:<22} {:<14} {}",
            c.name,
            c.detail,
            if c.pass { "ok" } else { "FAIL" }
        );
    }
    // Traces of T_w, w in lexicographic order.
    let show = |m: &ModuleMatrices| -> String {
        m.character()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    let s = specht_module(&lam, &q)?;
    let conj = lam.conjugate();
    println!("{:<16} {}", format!("S^{lam}"), show(&s));
    println!("{:<16} {}", format!("twisted S^{lam}"), show(&s.sharp(&q)));
    println!(
        "{:<16} {}",
        format!("S^{conj}"),
        show(&specht_module(&conj, &q)?)
    );
    Ok(())
}
