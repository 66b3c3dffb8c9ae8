//! Write a matrix file, read it back bit-exactly and solve it.
//!
//! cargo run --example matrix_files

use uqp::generate::random_hermitian;
use uqp::matrix_io::{format_matrix, read_matrix_file, write_matrix_file};
use uqp::solvers::solve_greedy;

fn main() -> uqp::Result<()> {
    let r = random_hermitian(4, 17);
    let path = std::env::temp_dir().join("uqp_example_matrix.txt");
    write_matrix_file(&r, &path)?;
    print!("{}", format_matrix(&r));

    let back = read_matrix_file(&path)?;
    assert!(back == r, "round trip is exact");
    println!("greedy on the reloaded matrix: {:.6}", solve_greedy(&back).value);
    std::fs::remove_file(&path)?;
    Ok(())
}
