//! Zilch of a circularly polarized wave: the 1+3 blocks, the optical
//! chirality and its sign under a change of helicity.

use zilch::catalog::SolutionSpec;
use zilch::minkowski::MetricConvention;
use zilch::noether::ZilchForm;
use zilch::numeric::{eval_decomposition, eval_zilch, optical_chirality, DecompositionVariant};

fn main() {
    let x = [0.0, 0.1, 0.2, 0.3];
    for conv in MetricConvention::all() {
        println!("{conv} (zilch sign {:+})", conv.zilch_sign());
        for helicity in [1, -1] {
            let sol = SolutionSpec::circular(helicity).build(&conv).unwrap();
            let s = sol.sample(x);
            let chi = optical_chirality(&s, &conv).unwrap();
            let d = eval_decomposition(&s, &conv, DecompositionVariant::OffShell).unwrap();
            let z = eval_zilch(&s, ZilchForm::Kibble1, &conv).unwrap();
            println!("  helicity {helicity:+}: C = {chi:+.6}  Z_000 = {:+.6}  Z_00i = {:+.6?}", d.z000, d.z00i);
            println!("    Z_000 from the tensor: {:+.6}", z.t[0][0][0]);
        }
    }
}
