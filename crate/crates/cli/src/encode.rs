//! JSON views of core results. Coordinate positions are 1-based here.

use insdel_core::bounds::{BoundReport, CertificateReport, FailureReason, IncreasingPair, StrictDirectWitness};
use insdel_core::constructions::Prop1Report;
use insdel_core::gf::{Elem, Field};
use insdel_core::insdel::{DistanceTwoCertificate, DistanceWitness};
use insdel_core::search::{BoundKind, OnesFilter, ProbeEntry, SearchResult};
use insdel_core::LinearCode;
use serde_json::{json, Map, Value};

use crate::codefile::CodeFile;

pub fn one_based(positions: &[usize]) -> Vec<usize> {
    positions.iter().map(|p| p + 1).collect()
}

pub fn word(f: &Field, w: &[Elem]) -> Value {
    json!(f.format_word(w))
}

pub fn code_summary(code: &LinearCode) -> Value {
    json!({
        "n": code.n(),
        "k": code.k(),
        "q": code.field().order(),
        "code_file": CodeFile::from_code(code, None),
    })
}

pub fn distance_witness(f: &Field, w: &DistanceWitness) -> Value {
    json!({
        "distance": w.distance,
        "lcs": w.lcs_len(),
        "pair": [w.first, w.second],
        "word_a": word(f, &w.word_a),
        "word_b": word(f, &w.word_b),
        "common_positions_a": one_based(&w.common.a_positions),
        "common_positions_b": one_based(&w.common.b_positions),
        "pairs_total": w.pairs_total,
    })
}

pub fn distance_two(f: &Field, c: &DistanceTwoCertificate) -> Value {
    json!({
        "codeword": word(f, &c.codeword),
        "u": c.u + 1,
        "v": c.v + 1,
        "alpha": f.format(c.alpha),
        "x": word(f, &c.x),
    })
}

fn increasing_pair(p: &IncreasingPair) -> Value {
    json!({"i": one_based(&p.i), "j": one_based(&p.j), "meet": one_based(&p.meet)})
}

pub fn certificate(f: &Field, r: &CertificateReport) -> Value {
    let qualifying: Vec<Value> = r
        .qualifying
        .iter()
        .map(|q| {
            let mut v = increasing_pair(&q.pair);
            v["meet_rank"] = json!(q.meet_rank);
            v["det"] = json!(f.format(q.det));
            v
        })
        .collect();
    let failure = match &r.failure {
        None => Value::Null,
        Some(FailureReason::AllOnesInCode { message }) => {
            json!({"reason": "all-ones-in-code", "message": word(f, message)})
        }
        Some(FailureReason::SingularPair(p)) => json!({"reason": "singular-pair", "pair": increasing_pair(p)}),
    };
    json!({
        "passed": r.passed(),
        "n": r.n,
        "k": r.k,
        "pairs_examined": r.pairs_examined,
        "qualifying_count": r.qualifying.len(),
        "qualifying_distinct_count": r.distinct_qualifying().count(),
        "qualifying": qualifying,
        "failure": failure,
        "certified_distance": r.certified_distance,
    })
}

pub fn strict_direct(f: &Field, w: &StrictDirectWitness) -> Value {
    let pairs: Vec<[usize; 2]> = w.pairs.iter().map(|&(j, k)| [j + 1, k + 1]).collect();
    json!({
        "d_h": w.d_h,
        "t": w.t(),
        "bound": w.bound(),
        "message": word(f, &w.message),
        "codeword": word(f, &w.codeword),
        "zero_positions": one_based(&w.zero_positions),
        "pairs": pairs,
        "uses_sentinel_gap": w.uses_sentinel_gap,
        "v": word(f, &w.v),
        "x1": word(f, &w.x1),
        "x2": word(f, &w.x2),
        "lcs": w.common.len,
    })
}

pub fn bound_report(f: &Field, r: &BoundReport) -> Value {
    let mut bounds = Map::new();
    for (name, e) in &r.bounds {
        bounds.insert(
            (*name).to_string(),
            json!({"value": e.value, "applicable": e.applicable, "reason": e.reason}),
        );
    }
    json!({
        "n": r.n,
        "k": r.k,
        "d_h": r.d_h,
        "contains_all_ones": r.contains_all_ones,
        "projective": r.projective,
        "bounds": bounds,
        "envelope": r.envelope,
        "strict_direct_witness": r.strict_direct_witness.as_ref().map(|w| strict_direct(f, w)),
    })
}

pub fn prop1(f: &Field, r: &Prop1Report) -> Value {
    let conditions: Vec<Value> = r
        .conditions
        .iter()
        .map(|c| {
            json!({
                "t": c.t,
                "odd": c.odd,
                "even": c.even,
                "value": f.format(c.value),
                "holds": c.holds,
            })
        })
        .collect();
    json!({
        "k": r.k,
        "sum": f.format(r.sum),
        "sum_holds": r.sum_holds,
        "conditions": conditions,
        "valid": r.valid(),
    })
}

pub fn bound_kind(b: BoundKind) -> &'static str {
    match b {
        BoundKind::Half => "half",
        BoundKind::Strict => "strict",
    }
}

pub fn ones_filter(o: OnesFilter) -> &'static str {
    match o {
        OnesFilter::RequireIn => "require-in",
        OnesFilter::RequireOut => "require-out",
        OnesFilter::Any => "none",
    }
}

pub fn binary_rows(code: &LinearCode) -> Vec<String> {
    code.generator()
        .to_rows()
        .iter()
        .map(|r| r.iter().map(|e| if e.is_zero() { '0' } else { '1' }).collect())
        .collect()
}

pub fn search(r: &SearchResult) -> Value {
    let matches: Vec<Vec<String>> = r.matches.iter().map(binary_rows).collect();
    json!({
        "n": r.n,
        "k": r.k,
        "q": r.q,
        "bound": bound_kind(r.bound),
        "ones_filter": ones_filter(r.ones_filter),
        "strict_excludes_all_ones": r.strict_excludes_ones,
        "target": r.target,
        "count": r.matches.len(),
        "matches": matches,
        "subspaces_examined": r.subspaces_examined.to_string(),
        "passed_filter": r.passed_filter.to_string(),
        "pair_evaluations": r.pair_evaluations,
    })
}

pub fn probe(entries: &[ProbeEntry]) -> Value {
    Value::Array(
        entries
            .iter()
            .map(|e| {
                json!({
                    "k": e.k,
                    "n": e.n,
                    "bound": bound_kind(e.bound),
                    "count": e.count,
                    "predicted_zero": e.predicted_zero,
                    "consistent": e.consistent(),
                })
            })
            .collect(),
    )
}
