// Jet orders of `{1, x, x³}`: the origin is its only Weierstrass point.

use jetorder::algebra::{int, rat, Exponent};
use jetorder::jets::{n_inj_at, weierstrass_minors, weierstrass_scan, EvalPoint, SubspaceV};
use jetorder::ComputeConfig;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = ComputeConfig::default();
    let v = SubspaceV::from_monomials(1, [0, 1, 3].map(|k| Exponent::new(vec![k])).to_vec())?;

    let generic = n_inj_at(&v, &EvalPoint::Generic, &cfg)?;
    println!("generic: n_inj {} profile {:?}", generic.n_inj, generic.rank_profile);

    let origin = n_inj_at(&v, &EvalPoint::At(vec![int(0)]), &cfg)?;
    println!(
        "origin: n_inj {} profile {:?} gaps {:?} Weierstrass order {}",
        origin.n_inj, origin.rank_profile, origin.gap_sequence, origin.weierstrass_order
    );

    let minors = weierstrass_minors(&v, &cfg)?;
    for (cols, m) in &minors.minors {
        println!("minor on columns {cols:?}: {m}");
    }

    let points = vec![vec![int(0)], vec![rat(1, 2)], vec![int(-3)]];
    for r in weierstrass_scan(&v, &points, &cfg)? {
        println!("{}: n_inj {} in locus {}", r.point, r.n_inj, r.weierstrass_order >= 0);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("weierstrass example");
}
