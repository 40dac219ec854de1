//! Central-difference divergence of the zilch on refined grids. The
//! residual falls at the stencil order; the table is written as CSV.

use zilch::catalog::{SolutionKind, SolutionSpec};
use zilch::minkowski::MetricConvention;
use zilch::noether::ZilchForm;
use zilch::numeric::{divergence_residual_grid, write_convergence_csv, GridSpec};

fn main() {
    let conv = MetricConvention::default();
    let mut crossed = SolutionSpec::new(SolutionKind::Superposition);
    crossed.components = vec![
        SolutionSpec::circular(1),
        SolutionSpec::circular(1).with_direction([1.0, 2.0, 2.0], [2.0, -2.0, 1.0]).with_amplitude(0.7),
    ];
    let sol = crossed.build(&conv).unwrap();
    for order in [2, 4, 6] {
        let grid = GridSpec::for_frequency(sol.omega, order);
        let rows = divergence_residual_grid(&sol, ZilchForm::Kibble3, &grid).unwrap();
        println!("stencil order {order}");
        let mut out = Vec::new();
        write_convergence_csv(&mut out, &rows).unwrap();
        print!("{}", String::from_utf8(out).unwrap());
    }

    // too coarse for the wavelength: refused rather than reported
    let mut coarse = GridSpec::for_frequency(sol.omega, 4);
    coarse.spacing *= 2.0;
    coarse.extent *= 2.0;
    println!("coarse grid: {}", divergence_residual_grid(&sol, ZilchForm::Kibble3, &coarse).unwrap_err());
}
