//! CSV export of curve samples and fixed-set geometry for external plotting.

use crate::report::fe_decimal;
use curve_invariants::ParamCurve3;
use curve_symmetry::{FixedSet, SymmetryRecord};
use exact_algebra::linalg::Vector3;
use exact_algebra::{FieldElem, Int, Rat};
use std::io::Write;
use std::path::Path;

fn vec_cells(v: &Vector3<FieldElem>, digits: u32) -> [String; 3] {
    [
        fe_decimal(&v.x, digits),
        fe_decimal(&v.y, digits),
        fe_decimal(&v.z, digits),
    ]
}

/// Writes one CSV with tagged rows: `curve,t,x,y,z` samples followed by one
/// row per nontrivial fixed set (`plane`, `line`, `point`). Identity records
/// (fixed set: all of space) are omitted.
pub fn emit_plot_data(
    c: &ParamCurve3,
    records: &[&SymmetryRecord],
    digits: u32,
    path: &Path,
) -> std::io::Result<()> {
    let mut f = std::fs::File::create(path)?;
    writeln!(f, "kind,v1,v2,v3,v4,v5,v6")?;
    // Parameter range -8..8 in steps of 1/8; poles are skipped.
    for k in -64i64..=64 {
        let t = Rat::new(Int::from(k), Int::from(8));
        if let Some(p) = c.eval(&t) {
            let dec = |r: &Rat| crate::report::rat_decimal(r, digits);
            writeln!(
                f,
                "curve,{},{},{},{},,",
                dec(&t),
                dec(&p.x),
                dec(&p.y),
                dec(&p.z)
            )?;
        }
    }
    for rec in records {
        match &rec.fixed {
            FixedSet::AllSpace | FixedSet::Empty => {}
            FixedSet::Point(p) => {
                let [x, y, z] = vec_cells(p, digits);
                writeln!(f, "point,{},{},{},,,", x, y, z)?;
            }
            FixedSet::Line { point, direction } => {
                let [px, py, pz] = vec_cells(point, digits);
                let [dx, dy, dz] = vec_cells(direction, digits);
                writeln!(f, "line,{},{},{},{},{},{}", px, py, pz, dx, dy, dz)?;
            }
            FixedSet::Plane { normal, offset } => {
                let [nx, ny, nz] = vec_cells(normal, digits);
                writeln!(f, "plane,{},{},{},{},,", nx, ny, nz, fe_decimal(offset, digits))?;
            }
        }
    }
    Ok(())
}
