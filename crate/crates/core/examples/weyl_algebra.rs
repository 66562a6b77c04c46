// Exact polynomials and normally ordered differential operators.

use jetorder::algebra::{int, rat, DifferentialOperator, Polynomial};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = Polynomial::var(2, 0);
    let y = Polynomial::var(2, 1);
    let p = &(&(&x * &x) * &y).scale(&rat(3, 2)) - &y;
    println!("p = {p}");
    println!("p(1/3, 2) = {}", p.eval(&[rat(1, 3), int(2)])?);

    let dx = DifferentialOperator::d(2, 0);
    let xo = DifferentialOperator::x(2, 0);
    // ∂x ∘ x = x∂x + 1
    let commuted = &dx * &xo;
    println!("dx * x = {commuted}");
    assert_eq!(commuted, &(&xo * &dx) + &DifferentialOperator::identity(2));

    let euler = &xo * &dx;
    let squared = euler.pow(2);
    println!("(x dx)^2 = {squared}");
    println!("(x dx)^2 p = {}", squared.apply(&p)?);

    let mixed = &(&xo * &xo) + &dx;
    for (w, part) in mixed.weight_split() {
        println!("weight {w:?}: {part}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("weyl algebra example");
}
