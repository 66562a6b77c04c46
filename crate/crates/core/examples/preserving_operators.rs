// Operators of bounded order that map a monomial space into itself.

use jetorder::algebra::Exponent;
use jetorder::diffops::{
    annihilator_weight_dim, evaluation_image, preserve_check, preserving_weight_space, sl_generators,
};
use jetorder::jets::SubspaceV;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let line = [0, 1].map(|k| Exponent::new(vec![k])).to_vec();
    for w in [-1, 0, 1, 2] {
        let space = preserving_weight_space(&line, &[w], 1)?;
        let ops: Vec<String> = space.basis.iter().map(ToString::to_string).collect();
        println!("weight {w}: [{}] annihilator {}", ops.join(", "), space.annihilator_dim);
    }
    println!("annihilator in weight 0, order 2: {}", annihilator_weight_dim(&line, &[0], 2)?);

    let quadrics = SubspaceV::from_monomials(1, [0, 1, 2].map(|k| Exponent::new(vec![k])).to_vec())?;
    for n in 0..=2 {
        let image = evaluation_image(&quadrics, n)?;
        println!("order {n}: image rank {} of {}", image.rank, image.dim_v * image.dim_v);
    }
    for g in preserve_check(&sl_generators(1, 2), &quadrics)? {
        println!("{}: preserves {}", g.label, g.preserves);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("preserving operators example");
}
