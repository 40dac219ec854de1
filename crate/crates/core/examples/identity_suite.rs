//! Run the exact identity suite in both sign conventions and print one line
//! per identity.
//!
//! ```text
//! cargo run --release --example identity_suite
//! ```

use zilch::minkowski::MetricConvention;
use zilch::noether::{identity_suite, Coefficients};

fn main() {
    for conv in MetricConvention::all() {
        let reports = identity_suite(&conv, &Coefficients::default());
        let zero = reports.iter().filter(|r| r.residual_zero).count();
        println!("{conv}: {zero}/{} identities exactly zero", reports.len());
        for r in &reports {
            let mark = if r.residual_zero { "zero" } else { "NONZERO" };
            println!("  {:<44} {:>4} {mark}  {}", r.name, r.assignments, r.anchor);
        }
    }
}
