// Drives the command-line front end in-process on the bundled data files.

use std::path::PathBuf;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
        .display()
        .to_string()
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let runs: Vec<Vec<String>> = vec![
        vec!["orders".into(), data("cubic.json"), "--generic".into()],
        vec!["minors".into(), data("cubic.json")],
        vec!["toric".into(), data("hirzebruch_131_polytope.json"), "--faces".into()],
        vec!["--json".into(), "scan".into(), data("cubic.json"), "--points".into(), data("line_points.json")],
    ];
    for args in runs {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("jetorder".to_string()).chain(args.iter().cloned());
        let code = jetorder::cli::run(argv, &mut out, &mut err);
        println!("$ jetorder {}\n{}", args.join(" "), String::from_utf8(out)?);
        if code != 0 {
            return Err(format!("exit {code}: {}", String::from_utf8(err)?).into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cli example");
}
