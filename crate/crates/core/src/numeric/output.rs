use std::io::Write;

use super::ConvergenceRow;
use crate::minkowski::Rank3;

/// One row per (event, component): `t,x,y,z,a,b,c,value`.
pub fn write_rank3_csv<W: Write>(out: W, rows: &[([f64; 4], Rank3<f64>)]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t", "x", "y", "z", "a", "b", "c", "value"])?;
    for (event, z) in rows {
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let mut rec: Vec<String> = event.iter().map(|v| format!("{v:e}")).collect();
                    rec.extend([a.to_string(), b.to_string(), c.to_string(), format!("{:e}", z.t[a][b][c])]);
                    w.write_record(&rec)?;
                }
            }
        }
    }
    w.flush()?;
    Ok(())
}

/// Columns `h,residual,observed_order`; the coarsest level has an empty order.
pub fn write_convergence_csv<W: Write>(out: W, rows: &[ConvergenceRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["h", "residual", "observed_order"])?;
    for r in rows {
        w.write_record([
            format!("{:e}", r.h),
            format!("{:e}", r.residual),
            r.observed_order.map(|o| format!("{o:.4}")).unwrap_or_default(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
