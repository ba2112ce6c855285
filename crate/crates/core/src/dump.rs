//! Representation dumps.
//!
//! The machine form is a single JSON object with fields in a fixed order:
//! `format`, `n1`, `n2`, `k`, `dims` (each `{source, threshold, a, b}` with
//! integer placements), `cubes` (per vertex, `k` closed unit intervals as
//! `"num/den"` pairs in lowest terms) and an optional `report`.

use std::fmt::Write;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::builder::BuildReport;
use crate::error::DumpError;
use crate::interval::{CubeRepresentation, Dimension, UnitCubes, UnitInterval};

pub const DUMP_FORMAT: &str = "cubicity-dump/1";

type IntervalText = [String; 2];

#[derive(Debug, Serialize, Deserialize)]
struct CubesView {
    a: Vec<Vec<IntervalText>>,
    b: Vec<Vec<IntervalText>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct DumpFile {
    format: String,
    n1: usize,
    n2: usize,
    k: usize,
    dims: Vec<Dimension>,
    cubes: CubesView,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    report: Option<BuildReport>,
}

fn rational(r: Ratio<i64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn cubes_view(cubes: &UnitCubes) -> CubesView {
    let side = |s: &[Vec<UnitInterval>]| {
        s.iter()
            .map(|cube| {
                cube.iter()
                    .map(|iv| [rational(iv.lo), rational(iv.hi)])
                    .collect()
            })
            .collect()
    };
    CubesView {
        a: side(&cubes.a),
        b: side(&cubes.b),
    }
}

pub fn write_dump(rep: &CubeRepresentation, report: Option<&BuildReport>) -> String {
    let file = DumpFile {
        format: DUMP_FORMAT.to_string(),
        n1: rep.a_count(),
        n2: rep.b_count(),
        k: rep.dimension(),
        dims: rep.dims().to_vec(),
        cubes: cubes_view(&rep.to_unit_cubes()),
        report: report.cloned(),
    };
    let mut s = serde_json::to_string(&file).expect("dump serializes");
    s.push('\n');
    s
}

/// Parses a dump and checks it is internally consistent (placement lengths,
/// positive thresholds, `k`, and the cube view against the placements).
pub fn read_dump(text: &str) -> Result<(CubeRepresentation, Option<BuildReport>), DumpError> {
    let file: DumpFile = serde_json::from_str(text)?;
    if file.format != DUMP_FORMAT {
        return Err(DumpError::Invalid(format!(
            "unknown format `{}`",
            file.format
        )));
    }
    if file.k != file.dims.len() {
        return Err(DumpError::Invalid(format!(
            "k = {} but {} dims given",
            file.k,
            file.dims.len()
        )));
    }
    if let Some(d) = file.dims.iter().find(|d| d.rep.threshold() <= 0) {
        return Err(DumpError::Invalid(format!(
            "dimension {} has threshold {}",
            d.source,
            d.rep.threshold()
        )));
    }
    let rep = CubeRepresentation::new(file.n1, file.n2, file.dims)?;
    let expected = cubes_view(&rep.to_unit_cubes());
    if expected.a != file.cubes.a || expected.b != file.cubes.b {
        return Err(DumpError::Invalid(
            "cube view disagrees with placements".into(),
        ));
    }
    Ok((rep, file.report))
}

/// Human-readable rendering of a representation and (optionally) its report.
pub fn render_human(rep: &CubeRepresentation, report: Option<&BuildReport>) -> String {
    let mut out = String::new();
    if let Some(r) = report {
        out.push_str(&render_report_human(r));
    }
    writeln!(
        out,
        "representation: n1 = {}, n2 = {}, k = {}",
        rep.a_count(),
        rep.b_count(),
        rep.dimension()
    )
    .unwrap();
    for (i, d) in rep.dims().iter().enumerate() {
        let a = d.rep.side_placement(crate::graph::Side::A);
        let b = d.rep.side_placement(crate::graph::Side::B);
        writeln!(
            out,
            "  dim {i:>3} [{}] c = {}: a = {a:?} b = {b:?}",
            d.source,
            d.rep.threshold()
        )
        .unwrap();
    }
    out
}

pub fn render_report_human(r: &BuildReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "graph: n1 = {}, n2 = {}, m = {}, delta' = {}{}",
        r.n1,
        r.n2,
        r.m,
        r.delta_prime,
        if r.swapped {
            " (sides swapped internally)"
        } else {
            ""
        }
    )
    .unwrap();
    writeln!(
        out,
        "k = {} (t = {}, bits_a = {}, bits_b = {})",
        r.k, r.t, r.bits_a, r.bits_b
    )
    .unwrap();
    writeln!(
        out,
        "nominal bound 3(D'+2)ceil(ln n2) = {}, existence bound 2(D'+2)ceil(ln n2) = {}",
        r.nominal_bound, r.existence_bound
    )
    .unwrap();
    writeln!(
        out,
        "retries = {}, seed = {}, rng = {}",
        r.retries, r.seed, r.rng
    )
    .unwrap();
    writeln!(
        out,
        "construction = {:.3} ms, verification = {:.3} ms",
        r.timings.construction.as_secs_f64() * 1e3,
        r.timings.verification.as_secs_f64() * 1e3
    )
    .unwrap();
    out
}
