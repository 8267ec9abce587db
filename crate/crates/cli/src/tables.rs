//! Row builders for the table subcommands.

use atlas_core::{
    bose_closed, build_field, code_spec, delta_ladder, dimension_closed, enumerate_leaders,
    generator_polynomial, ia_partition, interval_locate, min_weight_exhaustive, CodeLength, Result,
    Scheme,
};
use serde_json::{json, Value};

use crate::emit::Row;

/// Largest dimension for which genpoly computes the true minimum weight.
const GENPOLY_WEIGHT_CAP: u64 = 20;

pub fn leaders_rows(m: u32, lo: Option<u64>, hi: Option<u64>) -> Result<Vec<Row>> {
    let len = CodeLength::new(m)?;
    let lo = lo.unwrap_or(1);
    let hi = hi.unwrap_or(len.n() - 1);
    let rows = enumerate_leaders(len, lo, hi)?
        .into_iter()
        .map(|rec| {
            vec![
                ("m", json!(m)),
                ("leader", json!(rec.leader)),
                ("coset_size", json!(rec.size)),
            ]
        })
        .collect();
    Ok(rows)
}

pub fn deltas_rows(m: u32) -> Result<Vec<Row>> {
    let len = CodeLength::new(m)?;
    let ladder = delta_ladder(len)?;
    let rows = (0..5)
        .map(|i| {
            vec![
                ("i", json!(i + 1)),
                ("delta", json!(ladder.deltas[i])),
                ("coset_size", json!(ladder.coset_sizes[i])),
            ]
        })
        .collect();
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimsSource {
    Closed,
    Brute,
    Both,
}

fn dims_row(
    len: CodeLength,
    delta: u64,
    b: u8,
    source: &'static str,
    outcome: Result<(u64, u64)>,
) -> Row {
    let (dim, bose, error) = match outcome {
        Ok((k, bose)) => (json!(k), json!(bose), Value::Null),
        Err(e) => (Value::Null, Value::Null, json!(e.to_string())),
    };
    let (defining_size, bound) = match (&dim, &bose) {
        (Value::Number(k), Value::Number(bose)) => {
            let k = k.as_u64().unwrap();
            let bose = bose.as_u64().unwrap();
            (json!(len.n() - k), json!(if b == 1 { bose } else { 2 * bose }))
        }
        _ => (Value::Null, Value::Null),
    };
    vec![
        ("source", json!(source)),
        ("m", json!(len.m())),
        ("n", json!(len.n())),
        ("delta", json!(delta)),
        ("b", json!(b)),
        ("dimension", dim),
        ("defining_size", defining_size),
        ("bose_distance", bose),
        ("distance_bound", bound),
        ("error", error),
    ]
}

pub fn dims_rows(m: u32, delta: u64, b: u8, source: DimsSource) -> Result<Vec<Row>> {
    let len = CodeLength::new(m)?;
    let mut rows = Vec::new();
    if matches!(source, DimsSource::Closed | DimsSource::Both) {
        // closed-form inapplicability is data, not a usage error
        let outcome = dimension_closed(len, delta, b)
            .and_then(|k| bose_closed(len, delta, b).map(|bose| (k, bose)));
        rows.push(dims_row(len, delta, b, "closed", outcome));
    }
    if matches!(source, DimsSource::Brute | DimsSource::Both) {
        let spec = code_spec(len, delta, b)?;
        rows.push(dims_row(len, delta, b, "brute", Ok((spec.dimension, spec.bose))));
    }
    Ok(rows)
}

pub fn partition_rows(scheme: Scheme, t: u32) -> Result<Vec<Row>> {
    let partition = ia_partition(scheme, t)?;
    let name = match scheme {
        Scheme::Ia1 => "ia1",
        Scheme::Ia2 => "ia2",
    };
    let mut rows = Vec::with_capacity(partition.intervals.len());
    for (idx, &(lo, hi)) in partition.intervals.iter().enumerate() {
        let s = idx as u64 + 1;
        let (i, lambda) = interval_locate(scheme, t, s)?;
        rows.push(vec![
            ("scheme", json!(name)),
            ("t", json!(t)),
            ("s", json!(s)),
            ("lo", json!(lo)),
            ("hi", json!(hi)),
            ("i", json!(i)),
            ("lambda", json!(lambda)),
        ]);
    }
    Ok(rows)
}

pub fn genpoly_rows(m: u32, delta: u64, b: u8) -> Result<Vec<Row>> {
    let len = CodeLength::new(m)?;
    let field = build_field(len)?;
    let generator = generator_polynomial(&field, len, delta, b)?;
    let spec = code_spec(len, delta, b)?;
    let min_weight = if spec.dimension <= GENPOLY_WEIGHT_CAP {
        min_weight_exhaustive(&generator, len.n()).map_or(Value::Null, |w| json!(w))
    } else {
        Value::Null
    };
    Ok(vec![vec![
        ("m", json!(m)),
        ("n", json!(len.n())),
        ("delta", json!(delta)),
        ("b", json!(b)),
        ("degree", json!(generator.degree().expect("nonzero generator"))),
        ("dimension", json!(spec.dimension)),
        ("bose_distance", json!(spec.bose)),
        ("distance_bound", json!(spec.distance_bound)),
        ("self_reciprocal", json!(generator.is_self_reciprocal()?)),
        ("min_weight", min_weight),
        ("generator", json!(generator.wire_string())),
    ]])
}
