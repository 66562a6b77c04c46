// Known-answer suite for polynomials of bounded degree.

use jetorder::verify::verify_veronese;
use jetorder::ComputeConfig;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = ComputeConfig::default();
    for (n, m) in [(1, 2), (2, 2)] {
        let report = verify_veronese(n, m, &cfg)?;
        println!("{report}");
        if !report.pass {
            return Err(format!("{} failed", report.family).into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("veronese example");
}
