// Orbit-wise injectivity orders of a smooth lattice polygon.

use jetorder::algebra::Exponent;
use jetorder::toric::{faces, n_inj_face, toric_report, vertex_chart, LatticePolytope};
use jetorder::ComputeConfig;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let vertices = [[0, 0], [3, 0], [0, 1], [2, 1]].map(|v| Exponent::new(v.to_vec()));
    let p = LatticePolytope::from_vertices(&vertices)?;
    println!("{} lattice points, {} edges", p.points.len(), p.edges.len());
    for e in &p.edges {
        println!(
            "  {} -> {} direction {:?} length {}",
            p.vertices[e.endpoints.0], p.vertices[e.endpoints.1], e.direction, e.length
        );
    }
    for f in faces(&p)? {
        println!("n_inj({}) = {}", f.label(&p), n_inj_face(&p, &f)?);
    }
    let chart = vertex_chart(&p, 1)?;
    println!("chart at {} has basis {:?}", p.vertices[1], chart.basis);

    let report = toric_report(&p, &ComputeConfig::default())?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("toric example");
}
