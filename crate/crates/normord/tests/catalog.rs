//! Runs every named check in the catalog at its default order and
//! parameter grid, and requires all of them to pass.

use normord::verify::{catalog_names, run_check};

#[test]
fn every_catalog_check_passes() {
    let seed = 0x5eed;
    let mut failures = Vec::new();
    for name in catalog_names() {
        let reports = match run_check(name, None, None, seed) {
            Ok(reports) => reports,
            Err(e) => {
                println!("ERROR {name}: {e}");
                failures.push(format!("{name}: {e}"));
                continue;
            }
        };
        for r in &reports {
            let params: Vec<String> = r
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            println!(
                "{}  {:<28} order {:>2}  [{}]  {} ms",
                if r.pass { "pass" } else { "FAIL" },
                r.name,
                r.order,
                params.join(", "),
                r.elapsed_ms
            );
            if !r.pass {
                failures.push(format!("{}: {:?}", r.name, r.first_failure));
            }
        }
    }
    assert!(
        failures.is_empty(),
        "failing checks:\n{}",
        failures.join("\n")
    );
}
