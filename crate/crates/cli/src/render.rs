//! Deterministic text and JSON renderings for every subcommand. JSON field
//! order follows struct declaration order and is part of the output
//! contract; text output is line-oriented with one trailing newline added
//! by the caller.

use serde::Serialize;
use std::fmt::Write as _;

use verlinde_core::finite_sector::KggRing;
use verlinde_core::fusion::{FusionRing, SMatrix};
use verlinde_core::rep_ring::RepRingElem;
use verlinde_core::theorem::TheoremReport;
use verlinde_core::twisted_k::QuotientPresentation;

/// `(weight, multiplicity)` pairs ascending: the JSON form of a character
/// combination.
fn rep_pairs(x: &RepRingElem) -> Vec<(u32, i64)> {
    x.coeffs().collect()
}

/// Formal sum of basis symbols with unit coefficients, e.g. `V0 + V2` or
/// `[X0] + [X2]`; multiplicities other than 1 render as `2*V3`.
fn basis_sum(prefix: &str, suffix: &str, coeffs: &[i64]) -> String {
    let mut out = String::new();
    for (c, &n) in coeffs.iter().enumerate() {
        if n == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push_str(if n < 0 { " - " } else { " + " });
        } else if n < 0 {
            out.push('-');
        }
        if n.abs() != 1 {
            let _ = write!(out, "{}*", n.abs());
        }
        let _ = write!(out, "{prefix}{c}{suffix}");
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn fusion_text(ring: &FusionRing) -> String {
    let r = ring.rank() as u32;
    let mut lines = Vec::new();
    for a in 0..r {
        for b in a..r {
            let products = ring.product(a, b);
            lines.push(format!("V{a} * V{b} = {}", basis_sum("V", "", &products)));
        }
    }
    lines.join("\n")
}

#[derive(Serialize)]
struct FusionJson {
    k: u32,
    #[serde(rename = "N")]
    n: Vec<Vec<Vec<i64>>>,
}

pub fn fusion_json(ring: &FusionRing) -> String {
    let r = ring.rank() as u32;
    let n = (0..r)
        .map(|a| (0..r).map(|b| ring.product(a, b)).collect())
        .collect();
    serde_json::to_string(&FusionJson { k: ring.level(), n }).expect("serializable")
}

pub fn twisted_text(q: &QuotientPresentation) -> String {
    let mut lines = vec![
        format!("m = {}, level k = {}, degree {}", q.m(), q.level(), q.degree()),
        format!("K1 rank: {}", q.k1_rank()),
    ];
    if q.rank() == 0 {
        lines.push("K0 rank: 0 (zero ring)".to_string());
    } else {
        let basis = q
            .basis()
            .iter()
            .map(|n| format!("[X{n}]"))
            .collect::<Vec<_>>()
            .join(", ");
        lines.push(format!("K0 rank: {}, basis {}", q.rank(), basis));
    }
    lines.push(format!("relation: {}", q.relation()));
    for a in 0..q.rank() {
        for b in a..q.rank() {
            let products = q.quotient_mul(a, b);
            lines.push(format!(
                "[X{a}] * [X{b}] = {}",
                basis_sum("[X", "]", &products)
            ));
        }
    }
    lines.join("\n")
}

#[derive(Serialize)]
struct TwistedJson {
    m: u32,
    level: i64,
    rank: usize,
    relation: Vec<(u32, i64)>,
    structure_constants: Vec<Vec<Vec<i64>>>,
    k1_rank: u32,
    degree: u32,
}

pub fn twisted_json(q: &QuotientPresentation) -> String {
    let r = q.rank();
    let structure_constants = (0..r)
        .map(|a| {
            (0..r)
                .map(|b| (0..r).map(|c| q.structure_constant(a, b, c)).collect())
                .collect()
        })
        .collect();
    let out = TwistedJson {
        m: q.m(),
        level: q.level(),
        rank: r,
        relation: rep_pairs(q.relation()),
        structure_constants,
        k1_rank: q.k1_rank(),
        degree: q.degree(),
    };
    serde_json::to_string(&out).expect("serializable")
}

pub fn verify_text(reports: &[TheoremReport]) -> String {
    let mut lines = Vec::new();
    for report in reports {
        lines.push(report.to_string());
        for mismatch in &report.mismatches {
            lines.push(format!("  {mismatch}"));
        }
    }
    lines.join("\n")
}

#[derive(Serialize)]
struct MismatchJson {
    a: u32,
    b: u32,
    c: u32,
    twisted: i64,
    fusion: i64,
}

#[derive(Serialize)]
struct ReportJson {
    k: u32,
    m: u32,
    map_injective: bool,
    k1_vanishes: bool,
    rank_match: bool,
    mismatches: Vec<MismatchJson>,
    verdict: bool,
}

pub fn verify_json(reports: &[TheoremReport]) -> String {
    let out: Vec<ReportJson> = reports
        .iter()
        .map(|r| ReportJson {
            k: r.k,
            m: r.m,
            map_injective: r.map_injective,
            k1_vanishes: r.k1_vanishes,
            rank_match: r.rank_match,
            mismatches: r
                .mismatches
                .iter()
                .map(|mm| MismatchJson {
                    a: mm.a,
                    b: mm.b,
                    c: mm.c,
                    twisted: mm.twisted,
                    fusion: mm.fusion,
                })
                .collect(),
            verdict: r.verdict,
        })
        .collect();
    serde_json::to_string(&out).expect("serializable")
}

pub fn induce_text(x: &RepRingElem) -> String {
    x.to_string()
}

pub fn induce_json(x: &RepRingElem) -> String {
    serde_json::to_string(&rep_pairs(x)).expect("serializable")
}

/// Rounds to 12 decimal places and collapses negative zero, so text and
/// JSON agree and rows of exact zeros never render with a stray sign.
fn round12(v: f64) -> f64 {
    let r = (v * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn smatrix_text(s: &SMatrix) -> String {
    let r = s.rank() as u32;
    (0..r)
        .map(|a| {
            (0..r)
                .map(|b| format!("{:.12}", round12(s.entry(a, b))))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[derive(Serialize)]
struct SMatrixJson {
    k: u32,
    entries: Vec<Vec<f64>>,
}

pub fn smatrix_json(s: &SMatrix) -> String {
    let r = s.rank() as u32;
    let entries = (0..r)
        .map(|a| (0..r).map(|b| round12(s.entry(a, b))).collect())
        .collect();
    serde_json::to_string(&SMatrixJson {
        k: s.level(),
        entries,
    })
    .expect("serializable")
}

pub fn finite_text(ring: &KggRing) -> String {
    [
        format!(
            "group: {} (order {})",
            ring.group(),
            ring.group().order()
        ),
        format!("rank: {}", ring.rank()),
    ]
    .join("\n")
}

#[derive(Serialize)]
struct FiniteJson {
    orders: Vec<u32>,
    rank: usize,
    #[serde(rename = "N")]
    n: Vec<[usize; 3]>,
}

/// `N` lists one `[a, b, c]` triple per basis pair `(a, b)`: the single
/// nonzero entry of the structure tensor in that row, since each basis
/// product is again a basis element.
pub fn finite_json(ring: &KggRing) -> String {
    let r = ring.rank();
    let n = (0..r)
        .flat_map(|a| (0..r).map(move |b| (a, b)))
        .map(|(a, b)| [a, b, ring.product_index(a, b)])
        .collect();
    let out = FiniteJson {
        orders: ring.group().orders().to_vec(),
        rank: r,
        n,
    };
    serde_json::to_string(&out).expect("serializable")
}
