//! Regenerates the sample inputs under data/ (or a directory given as the
//! first argument): the truncated polynomial algebra with its integration
//! operator, the componentwise plane with the first-coordinate projection,
//! and the dim-8 triple tensor power of the dual numbers.

use splitalg::fdalg::fixtures::*;
use splitalg::fdalg::{triassociative_tensor_cube, write_algebra, write_operator};

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "data".to_string());
    let dir = std::path::Path::new(&dir);
    std::fs::create_dir_all(dir).expect("create output directory");

    write_algebra(dir.join("qx5.json"), &truncated_polynomial(5), None).unwrap();
    write_operator(dir.join("qx5-integration.json"), &integration_operator(5), None).unwrap();
    write_algebra(dir.join("q2.json"), &componentwise(2), None).unwrap();
    write_operator(dir.join("q2-proj1.json"), &projection(2, &[1]), None).unwrap();
    write_algebra(
        dir.join("cube8.json"),
        &triassociative_tensor_cube(&dual_numbers()).unwrap(),
        None,
    )
    .unwrap();
    std::fs::write(
        dir.join("leibniz.txt"),
        "# leibniz algebras: the left multiplications are derivations\n# nops: 1\n\
         (x1 *1 (x2 *1 x3)) = ((x1 *1 x2) *1 x3) + (x2 *1 (x1 *1 x3))\n",
    )
    .unwrap();
    println!("wrote sample data to {}", dir.display());
}
