use umbra::identities::{verify_all};
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    match verify_all(6) {
        Ok(reports) => {
            for r in &reports {
                let pass = r.all_pass();
                println!("{:<15} {} ({} degrees)", r.id.as_str(), if pass {"PASS"} else {"FAIL"}, r.per_degree.len());
                if let Some(note) = &r.variant_note {
                    println!("    note: {}", note);
                }
                if !pass {
                    for d in &r.per_degree {
                        if let Some(m) = &d.first_mismatch {
                            println!("    n={} x^{}: lhs != rhs", d.n, m.x_power);
                        }
                    }
                }
            }
        }
        Err(e) => println!("ERROR: {e}"),
    }
    println!("elapsed: {:?}", t0.elapsed());
}
