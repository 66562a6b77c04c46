// Hirzebruch polygons: closed-form orders, generators and the Weierstrass
// orbit seen in the chart at `(0, l)`.

use jetorder::diffops::hirzebruch_generators;
use jetorder::verify::verify_hirzebruch;
use jetorder::ComputeConfig;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (r, k, l) = (1, 3, 1);
    for g in hirzebruch_generators(r, k, l)? {
        println!("{:>22}: {}", g.label, g.op);
    }
    let report = verify_hirzebruch(r, k, l, &ComputeConfig::default())?;
    let failed = report.failures().count();
    println!("{} checks, {failed} failed", report.rows.len());
    for note in &report.notes {
        println!("note: {note}");
    }
    if !report.pass {
        return Err("hirzebruch suite failed".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("hirzebruch example");
}
