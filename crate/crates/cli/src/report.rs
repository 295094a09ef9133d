//! Report assembly: exact strings plus decimal renderings, in text or JSON.

use curve_invariants::{DegeneracyKind, ParamCurve3};
use curve_symmetry::{FixedSet, SymmetryKind, SymmetryRecord};
use exact_algebra::linalg::{Matrix3, Vector3};
use exact_algebra::{FieldElem, Int, Rat};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use std::time::Duration;

/// Wall-clock time per pipeline stage, in milliseconds.
pub struct Timings {
    pub invariants: Duration,
    pub equations: Duration,
    pub detect_direct: Option<Duration>,
    pub detect_opposite: Option<Duration>,
    pub reconstruct: Duration,
    pub total: Duration,
}

fn ms(d: Duration) -> f64 {
    (d.as_secs_f64() * 1e5).round() / 100.0
}

impl Timings {
    pub fn to_json(&self) -> Value {
        json!({
            "invariants_ms": ms(self.invariants),
            "equations_ms": ms(self.equations),
            "detect_direct_ms": self.detect_direct.map(ms),
            "detect_opposite_ms": self.detect_opposite.map(ms),
            "reconstruct_ms": ms(self.reconstruct),
            "total_ms": ms(self.total),
        })
    }

    pub fn to_text(&self) -> String {
        let opt = |d: Option<Duration>| match d {
            Some(d) => format!("{:.2} ms", ms(d)),
            None => "skipped".to_string(),
        };
        format!(
            "invariants {:.2} ms, matching equations {:.2} ms, detect direct {}, detect opposite {}, reconstruct {:.2} ms, total {:.2} ms",
            ms(self.invariants),
            ms(self.equations),
            opt(self.detect_direct),
            opt(self.detect_opposite),
            ms(self.reconstruct),
            ms(self.total),
        )
    }
}

/// Fixed-precision decimal rendering of a rational number, rounded half away
/// from zero at the last digit.
pub fn rat_decimal(r: &Rat, digits: u32) -> String {
    let neg = r.is_negative();
    let scale = num_traits::pow(Int::from(10), digits as usize);
    let half = Rat::new(Int::from(1), Int::from(2));
    let scaled = (r.abs() * Rat::from_integer(scale.clone()) + half)
        .floor()
        .to_integer();
    let int_part = &scaled / &scale;
    let frac = &scaled % &scale;
    let mut s = format!(
        "{}.{:0>width$}",
        int_part,
        frac.to_string(),
        width = digits as usize
    );
    if neg && !scaled.is_zero() {
        s.insert(0, '-');
    }
    s
}

/// Decimal rendering of an algebraic number via interval refinement; the
/// interval is narrowed two digits past the requested precision before the
/// midpoint is rounded. No floating point is involved.
pub fn fe_decimal(e: &FieldElem, digits: u32) -> String {
    if let Some(r) = e.as_rational() {
        return rat_decimal(&r, digits);
    }
    let width = Rat::new(
        Int::from(1),
        num_traits::pow(Int::from(10), digits as usize + 2),
    );
    let (lo, hi) = e.approx_interval(&width);
    rat_decimal(&((lo + hi) / Rat::from_integer(Int::from(2))), digits)
}

pub fn kind_label(k: &SymmetryKind) -> &'static str {
    match k {
        SymmetryKind::Identity => "identity",
        SymmetryKind::Rotation { .. } => "rotation",
        SymmetryKind::HalfTurn => "half-turn",
        SymmetryKind::MirrorPlane => "mirror",
        SymmetryKind::CentralInversion => "central inversion",
        SymmetryKind::RotatoryReflection => "rotatory reflection",
    }
}

fn vec_exact(v: &Vector3<FieldElem>) -> Value {
    json!([v.x.to_string(), v.y.to_string(), v.z.to_string()])
}

fn vec_decimal(v: &Vector3<FieldElem>, digits: u32) -> Value {
    json!([
        fe_decimal(&v.x, digits),
        fe_decimal(&v.y, digits),
        fe_decimal(&v.z, digits)
    ])
}

fn mat_exact(m: &Matrix3<FieldElem>) -> Value {
    Value::Array(
        m.m.iter()
            .map(|row| Value::Array(row.iter().map(|e| json!(e.to_string())).collect()))
            .collect(),
    )
}

fn mat_decimal(m: &Matrix3<FieldElem>, digits: u32) -> Value {
    Value::Array(
        m.m.iter()
            .map(|row| {
                Value::Array(row.iter().map(|e| json!(fe_decimal(e, digits))).collect())
            })
            .collect(),
    )
}

fn fixed_json(f: &FixedSet, digits: u32) -> Value {
    match f {
        FixedSet::Empty => json!({"type": "empty"}),
        FixedSet::AllSpace => json!({"type": "all-space"}),
        FixedSet::Point(p) => json!({
            "type": "point",
            "point_exact": vec_exact(p),
            "point_decimal": vec_decimal(p, digits),
        }),
        FixedSet::Line { point, direction } => json!({
            "type": "line",
            "point_exact": vec_exact(point),
            "point_decimal": vec_decimal(point, digits),
            "direction_exact": vec_exact(direction),
            "direction_decimal": vec_decimal(direction, digits),
        }),
        FixedSet::Plane { normal, offset } => json!({
            "type": "plane",
            "normal_exact": vec_exact(normal),
            "normal_decimal": vec_decimal(normal, digits),
            "offset_exact": offset.to_string(),
            "offset_decimal": fe_decimal(offset, digits),
        }),
    }
}

fn record_json(rec: &SymmetryRecord, digits: u32) -> Value {
    let mut obj = json!({
        "kind": kind_label(&rec.kind),
        "det": rec.isometry.det_sign,
        "phi": rec.mobius.phi_string(),
        "q_exact": mat_exact(&rec.isometry.q),
        "q_decimal": mat_decimal(&rec.isometry.q, digits),
        "b_exact": vec_exact(&rec.isometry.b),
        "b_decimal": vec_decimal(&rec.isometry.b, digits),
        "fixed": fixed_json(&rec.fixed, digits),
    });
    if let SymmetryKind::Rotation { cos_theta } = &rec.kind {
        obj["cos_theta_exact"] = json!(cos_theta.to_string());
        obj["cos_theta_decimal"] = json!(fe_decimal(cos_theta, digits));
    }
    if rec.mobius.xi.as_rational().is_none() {
        let gen = FieldElem::generator(rec.mobius.xi.clone());
        obj["field"] = json!({
            "min_poly": rec.mobius.xi.min_poly().to_string_var("xi"),
            "root_decimal": fe_decimal(&gen, digits),
        });
    }
    obj
}

/// Maximum bit length over the integer numerators and denominators of all
/// coefficients of the parametrization.
pub fn coefficient_bits(c: &ParamCurve3) -> u64 {
    let mut bits = 0u64;
    for comp in c.components().as_array() {
        for p in [comp.num(), comp.den()] {
            for r in p.coeffs() {
                bits = bits.max(r.numer().bits()).max(r.denom().bits());
            }
        }
    }
    bits
}

pub fn degeneracy_label(k: &DegeneracyKind) -> &'static str {
    match k {
        DegeneracyKind::NonDegenerate => "none",
        DegeneracyKind::Line => "line",
        DegeneracyKind::Circle => "circle",
        DegeneracyKind::Planar => "planar",
    }
}

pub const PLANAR_NOTE: &str = "this tool handles genuinely spatial curves; \
for a planar curve, project to its plane and apply a plane-curve symmetry \
detection method instead";

pub fn degeneracy_json(k: &DegeneracyKind) -> Value {
    let mut obj = json!({ "kind": degeneracy_label(k) });
    if matches!(k, DegeneracyKind::Planar) {
        obj["note"] = json!(PLANAR_NOTE);
    }
    obj
}

pub fn curve_json(source: &str, c: &ParamCurve3) -> Value {
    json!({
        "source": source,
        "degree": c.degree(),
        "coefficient_bits": coefficient_bits(c),
    })
}

fn sign_json(records: Option<&[SymmetryRecord]>, digits: u32) -> Value {
    match records {
        None => Value::Null,
        Some(rs) => json!({
            "count": rs.len(),
            "records": rs.iter().map(|r| record_json(r, digits)).collect::<Vec<_>>(),
        }),
    }
}

pub fn report_json(
    source: &str,
    c: &ParamCurve3,
    degeneracy: &DegeneracyKind,
    direct: Option<&[SymmetryRecord]>,
    opposite: Option<&[SymmetryRecord]>,
    digits: u32,
    timings: &Timings,
) -> Value {
    json!({
        "curve": curve_json(source, c),
        "degeneracy": degeneracy_json(degeneracy),
        "direct": sign_json(direct, digits),
        "opposite": sign_json(opposite, digits),
        "timings": timings.to_json(),
    })
}

fn vec_text(v: &Vector3<FieldElem>, digits: u32) -> String {
    format!(
        "({}, {}, {})  ~ ({}, {}, {})",
        v.x,
        v.y,
        v.z,
        fe_decimal(&v.x, digits),
        fe_decimal(&v.y, digits),
        fe_decimal(&v.z, digits)
    )
}

fn fixed_text(f: &FixedSet, digits: u32) -> String {
    match f {
        FixedSet::Empty => "fixed set: empty".into(),
        FixedSet::AllSpace => "fixed set: all of space".into(),
        FixedSet::Point(p) => format!("fixed point: {}", vec_text(p, digits)),
        FixedSet::Line { point, direction } => format!(
            "fixed line: point {} + direction {}",
            vec_text(point, digits),
            vec_text(direction, digits)
        ),
        FixedSet::Plane { normal, offset } => format!(
            "fixed plane: normal {} , offset {}  ~ {}",
            vec_text(normal, digits),
            offset,
            fe_decimal(offset, digits)
        ),
    }
}

fn record_text(idx: usize, rec: &SymmetryRecord, digits: u32) -> String {
    let mut out = String::new();
    out.push_str(&format!("  [{}] {}", idx + 1, kind_label(&rec.kind)));
    if let SymmetryKind::Rotation { cos_theta } = &rec.kind {
        out.push_str(&format!(
            " (cos theta = {} ~ {})",
            cos_theta,
            fe_decimal(cos_theta, digits)
        ));
    }
    out.push('\n');
    out.push_str(&format!("      parameter map: {}\n", rec.mobius.phi_string()));
    if rec.mobius.xi.as_rational().is_none() {
        out.push_str(&format!(
            "      field: xi with minimal polynomial {} , xi ~ {}\n",
            rec.mobius.xi.min_poly().to_string_var("xi"),
            fe_decimal(&FieldElem::generator(rec.mobius.xi.clone()), digits)
        ));
    }
    for (i, row) in rec.isometry.q.m.iter().enumerate() {
        let tag = if i == 1 { "Q =" } else { "   " };
        out.push_str(&format!(
            "      {} [ {} , {} , {} ]\n",
            tag, row[0], row[1], row[2]
        ));
    }
    out.push_str(&format!(
        "      b = {}\n      {}\n",
        vec_text(&rec.isometry.b, digits),
        fixed_text(&rec.fixed, digits)
    ));
    out
}

fn sign_text(name: &str, records: Option<&[SymmetryRecord]>, digits: u32) -> String {
    match records {
        None => format!("{} symmetries: not requested\n", name),
        Some(rs) => {
            let mut out = format!("{} symmetries: {}\n", name, rs.len());
            for (i, r) in rs.iter().enumerate() {
                out.push_str(&record_text(i, r, digits));
            }
            out
        }
    }
}

pub fn report_text(
    source: &str,
    c: &ParamCurve3,
    degeneracy: &DegeneracyKind,
    direct: Option<&[SymmetryRecord]>,
    opposite: Option<&[SymmetryRecord]>,
    digits: u32,
    timings: &Timings,
) -> String {
    let total = direct.map_or(0, |r| r.len()) + opposite.map_or(0, |r| r.len());
    let mut out = format!(
        "curve: {} (degree {}, coefficients up to {} bits)\ndegeneracy: {}\n",
        source,
        c.degree(),
        coefficient_bits(c),
        degeneracy_label(degeneracy)
    );
    out.push_str(&sign_text("direct", direct, digits));
    out.push_str(&sign_text("opposite", opposite, digits));
    out.push_str(&format!("total symmetries found: {}\n", total));
    out.push_str(&format!("timings: {}\n", timings.to_text()));
    out
}
