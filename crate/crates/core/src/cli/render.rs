use std::fmt::Write;

use serde::Serialize;

use crate::bounds::{BoundReport, ClosedFormRow};

/// Pretty JSON with a trailing newline. Floats use the shortest
/// representation that round-trips exactly.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// `key,value` lines for the scalar fields of a report.
pub fn report_csv(r: &BoundReport) -> String {
    let m = &r.measures;
    let mut out = String::from("key,value\n");
    let rows: Vec<(&str, String)> = vec![
        ("scene", r.scene.clone()),
        ("schema", r.schema.to_string()),
        ("seed", r.seed.to_string()),
        ("dim", m.dim.to_string()),
        ("boundary_e", m.boundary_e.to_string()),
        ("boundary_hull", m.boundary_hull.to_string()),
        ("diam", m.diam.to_string()),
        ("connected_components", m.connected_components.to_string()),
        ("basic", r.basic.to_string()),
        ("basic_ratio", r.basic_ratio.to_string()),
        ("cglp_planar", opt(r.cglp_planar)),
        ("cglp_ratio", opt(r.cglp_ratio)),
        ("main", r.main.to_string()),
        ("main_ratio", r.main_ratio.to_string()),
        ("planar_main", opt(r.planar_main)),
        ("planar_ratio", opt(r.planar_ratio)),
        ("upper", opt(r.upper)),
    ];
    for (k, v) in rows {
        let _ = writeln!(out, "{k},{v}");
    }
    for (j, w) in r.witnesses.iter().enumerate() {
        let _ = writeln!(out, "gap[{j}],{}", w.gap);
        let _ = writeln!(out, "rho[{j}],{}", w.rho);
        let _ = writeln!(out, "main_term[{j}],{}", w.main_term);
        let _ = writeln!(out, "quantitative_deficit[{j}],{}", w.quantitative_deficit);
    }
    out
}

pub(crate) fn rows_csv(rows: &[ClosedFormRow]) -> String {
    let mut out = String::from("quantity,closed_form,kernel,rel_err,pass\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{},{},{}", r.quantity, r.closed_form, r.kernel, r.rel_err, r.pass);
    }
    out
}
