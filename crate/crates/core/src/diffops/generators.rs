use serde::{Deserialize, Serialize};

use crate::algebra::{int, DifferentialOperator};
use crate::error::{Error, Result};

/// A named operator from one of the generator families.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Generator {
    pub label: String,
    pub op: DifferentialOperator,
}

impl Generator {
    fn new(label: impl Into<String>, op: DifferentialOperator) -> Self {
        Generator {
            label: label.into(),
            op,
        }
    }
}

/// Generators preserving the degree-`≤ m` polynomials in `n` variables:
/// `∂_l`, `x_k ∂_l` and `−Σ_i x_i x_k ∂_i + m x_k`.
pub fn sl_generators(n: usize, m: u32) -> Vec<Generator> {
    let x = |i| DifferentialOperator::x(n, i);
    let d = |i| DifferentialOperator::d(n, i);
    let name = |i: usize| if n == 1 { String::new() } else { (i + 1).to_string() };
    let mut out: Vec<Generator> = (0..n).map(|l| Generator::new(format!("d{}", name(l)), d(l))).collect();
    for k in 0..n {
        for l in 0..n {
            out.push(Generator::new(format!("x{}*d{}", name(k), name(l)), &x(k) * &d(l)));
        }
    }
    for k in 0..n {
        let euler = (0..n).fold(DifferentialOperator::zero(n), |acc, i| &acc + &(&x(i) * &d(i)));
        let op = &(&x(k) * &euler.scale(&int(-1))) + &x(k).scale(&int(m as i64));
        out.push(Generator::new(format!("raise{}", name(k)), op));
    }
    out
}

/// Generators for the Hirzebruch polytope `{(i, j) : 0 ≤ j ≤ l, 0 ≤ i, i + r j ≤ k}`.
/// Uses `π = x∂x + r y∂y − k` and `∇ = y∂y − l`.
pub fn hirzebruch_generators(r: u32, k: u32, l: u32) -> Result<Vec<Generator>> {
    if r < 1 {
        return Err(Error::InvalidArgument("twist r must be at least 1".into()));
    }
    if (k as i64) < (l as i64) * (r as i64) {
        return Err(Error::InvalidArgument(format!(
            "need k ≥ l·r for a four-vertex polytope, got k = {k}, l = {l}, r = {r}"
        )));
    }
    let x = DifferentialOperator::x(2, 0);
    let y = DifferentialOperator::x(2, 1);
    let dx = DifferentialOperator::d(2, 0);
    let dy = DifferentialOperator::d(2, 1);
    let scalar = |c: i64| DifferentialOperator::scalar(2, int(c));
    let xdx = &x * &dx;
    let ydy = &y * &dy;
    let pi = &(&xdx + &ydy.scale(&int(r as i64))) - &scalar(k as i64);
    let nabla = &ydy - &scalar(l as i64);

    let mut out = vec![Generator::new("dx", dx.clone())];
    for j in 0..=r {
        out.push(Generator::new(format!("x^{j}*dy"), &x.pow(j) * &dy));
    }
    out.push(Generator::new("x*pi", &x * &pi));
    for j in 0..=r {
        let mut op = &(&dx.pow(j) * &y) * &nabla;
        for t in 0..(r - j) {
            op = &op * &(&pi + &scalar(t as i64));
        }
        out.push(Generator::new(format!("dx^{j}*y*nabla*pi[{}]", r - j), op));
    }
    out.push(Generator::new("x*dx", xdx));
    out.push(Generator::new("y*dy", ydy));
    Ok(out)
}
