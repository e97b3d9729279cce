//! One function per subcommand. Each returns a [`Report`] whose claims
//! decide the exit status.

use std::collections::BTreeSet;
use std::path::Path;
use std::sync::Arc;

use insdel_core::bounds::{
    bound_report, certify_strict_optimal, strict_direct_bound, strict_direct_witness,
};
use insdel_core::code::weight;
use insdel_core::constructions::{
    check_prop1_conditions, default_odd_coefficients, odd_length_code, palindrome_code,
    rs_two_dim_example,
};
use insdel_core::gf::{Elem, Field};
use insdel_core::insdel::{code_insdel_distance, has_distance_two, insdel_distance, lcs_len, min_hamming_distance};
use insdel_core::search::{find_optimal, BoundKind, OnesFilter};
use insdel_core::{Budgets, LinearCode};
use serde_json::{json, Value};

use crate::codefile::{CodeFile, FieldSpec, Metadata};
use crate::encode;
use crate::error::{CliError, Result};
use crate::registry::{self, Checks, Example};
use crate::report::Report;

pub fn load(path: &Path) -> Result<(LinearCode, Vec<u8>)> {
    let (cf, bytes) = CodeFile::read(path)?;
    Ok((cf.to_code()?, bytes))
}

fn parse_word(f: &Field, tokens: &[&str]) -> Result<Vec<Elem>> {
    Ok(tokens.iter().map(|t| f.parse(t)).collect::<insdel_core::Result<Vec<_>>>()?)
}

fn brute_force_claims(report: &mut Report, code: &LinearCode, budgets: &Budgets, expected: Option<usize>) -> Result<usize> {
    let w = code_insdel_distance(code, budgets)?;
    report.result["brute_force"] = encode::distance_witness(code.field(), &w);
    if let Some(d) = expected {
        report.claim(
            "brute-force insdel distance",
            w.distance == d,
            format!("d_I = {} over {} pairs, expected {d}", w.distance, w.pairs_total),
        );
    }
    Ok(w.distance)
}

pub fn bounds(code: &LinearCode, input: &[u8], budgets: &Budgets, brute_force: bool) -> Result<Report> {
    let r = bound_report(code, budgets);
    let mut report = Report::new("bounds", input, encode::bound_report(code.field(), &r));
    if r.d_h.is_none() {
        report.note("Hamming distance not determined within the enumeration budget; bounds needing it are marked inapplicable");
    }
    if let Some(w) = &r.strict_direct_witness {
        report.claim("strict-direct witness", w.verify(code), format!("t = {}, bound {}", w.t(), w.bound()));
        if w.uses_sentinel_gap {
            report.note("strict-direct pairs use the run before the first zero or after the last zero");
        }
    }
    if code.k() == 2 {
        report.note("improved-singleton applied with k = 2 included (n > k >= 2)");
    }
    if brute_force {
        let d = brute_force_claims(&mut report, code, budgets, None)?;
        for (name, e) in &r.bounds {
            if let (true, Some(v)) = (e.applicable, e.value) {
                report.claim(&format!("{name} holds"), d <= v, format!("d_I = {d} <= {v}"));
            }
        }
    }
    Ok(report)
}

pub fn distance(code: &LinearCode, input: &[u8], budgets: &Budgets) -> Result<Report> {
    let f = code.field();
    let w = code_insdel_distance(code, budgets)?;
    let d_h = code.hamming_distance(budgets.enumeration)?.distance;
    let mut result = encode::distance_witness(f, &w);
    result["d_h"] = json!(d_h);
    let cert = has_distance_two(code, budgets.enumeration)?;
    result["distance_two_certificate"] = cert.as_ref().map_or(Value::Null, |c| encode::distance_two(f, c));
    let mut report = Report::new("distance", input, result);
    report.claim(
        "distance-two certificate",
        cert.is_some() == (w.distance == 2),
        format!("certificate {}, d_I = {}", if cert.is_some() { "found" } else { "absent" }, w.distance),
    );
    report.claim("d_I <= 2 d_H", w.distance <= 2 * d_h, format!("{} <= {}", w.distance, 2 * d_h));
    Ok(report)
}

pub fn certify(code: &LinearCode, input: &[u8], budgets: &Budgets, brute_force: bool) -> Result<Report> {
    let r = certify_strict_optimal(code, budgets)?;
    let mut report = Report::new("certify", input, encode::certificate(code.field(), &r));
    report.note("pairs {I, J} are unordered and I = J is included");
    report.claim(
        "determinant condition",
        r.passed(),
        format!("{} qualifying of {} pairs", r.qualifying.len(), r.pairs_examined),
    );
    if brute_force {
        brute_force_claims(&mut report, code, budgets, r.certified_distance)?;
    }
    Ok(report)
}

pub fn strict_direct(code: &LinearCode, input: &[u8], budgets: &Budgets, brute_force: bool) -> Result<Report> {
    let w = strict_direct_bound(code, budgets)?;
    let f = code.field();
    let result = json!({"witness": w.as_ref().map(|w| encode::strict_direct(f, w))});
    let mut report = Report::new("strict-direct", input, result);
    match &w {
        Some(w) => {
            report.claim("witness verifies", w.verify(code), format!("t = {}, bound 2(d_H - t) = {}", w.t(), w.bound()));
            if w.uses_sentinel_gap {
                report.note("strict-direct pairs use the run before the first zero or after the last zero");
            }
        }
        None => report.note("no minimum-weight codeword admits a pair"),
    }
    if brute_force {
        let d = brute_force_claims(&mut report, code, budgets, None)?;
        if let Some(w) = &w {
            report.claim("bound holds", d <= w.bound(), format!("d_I = {d} <= {}", w.bound()));
        }
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Palindrome,
    Odd,
    RsExample,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Palindrome => "palindrome",
            Family::Odd => "odd",
            Family::RsExample => "rs-example",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConstructArgs {
    pub family: Family,
    pub p: u32,
    pub e: u32,
    pub modulus: Option<Vec<u32>>,
    pub k: Option<usize>,
    pub n: Option<usize>,
    /// Coefficient tokens for the odd family; defaults when absent.
    pub a: Option<Vec<String>>,
    pub brute_force: bool,
}

/// Builds a construction; the code file is `None` when parameters are rejected.
pub fn construct(args: &ConstructArgs, budgets: &Budgets) -> Result<(Report, Option<CodeFile>)> {
    let echo = format!(
        "construct {} p={} e={} modulus={:?} k={:?} n={:?} a={:?}",
        args.family.name(),
        args.p,
        args.e,
        args.modulus,
        args.k,
        args.n,
        args.a
    );
    let need_k = || args.k.ok_or_else(|| CliError::Input("--k is required for this family".into()));
    let mut report = Report::new("construct", echo.as_bytes(), json!({"family": args.family.name()}));
    let code = match args.family {
        Family::Palindrome => {
            let f = Arc::new(Field::new(args.p, args.e, args.modulus.as_deref())?);
            palindrome_code(&f, need_k()?)?
        }
        Family::Odd => {
            let f = Arc::new(Field::new(args.p, args.e, args.modulus.as_deref())?);
            let a = match &args.a {
                Some(tokens) => {
                    let toks: Vec<&str> = tokens.iter().map(String::as_str).collect();
                    parse_word(&f, &toks)?
                }
                None => {
                    let a = default_odd_coefficients(&f, need_k()?)?;
                    report.note("coefficients: a_(k-1) is the least element outside {0, 1}, all others zero");
                    a
                }
            };
            if let Some(k) = args.k {
                if k != a.len() {
                    return Err(CliError::Input(format!("--k {k} disagrees with {} coefficients", a.len())));
                }
            }
            if a.len() == 1 {
                report.note("k = 1 lies outside the family's stated range; validity follows the generic conditions");
            }
            let check = check_prop1_conditions(&f, &a);
            report.result["conditions"] = encode::prop1(&f, &check);
            let valid = report.claim(
                "coefficient conditions",
                check.valid(),
                format!("sum = {}, violated t: {:?}", f.format(check.sum), check.violations()),
            );
            if !valid {
                return Ok((report, None));
            }
            odd_length_code(&f, &a)?
        }
        Family::RsExample => {
            if args.modulus.is_some() {
                return Err(CliError::Input("rs-example uses the default modulus".into()));
            }
            let n = args.n.ok_or_else(|| CliError::Input("--n is required for rs-example".into()))?;
            let code = rs_two_dim_example(args.p, args.e, n)?;
            let r = bound_report(&code, budgets);
            report.claim(
                "MDS",
                r.d_h == Some(n - 1),
                format!("d_H = {:?}, expected {}", r.d_h, n - 1),
            );
            report.result["bounds"] = encode::bound_report(code.field(), &r);
            code
        }
    };
    report.result["code"] = encode::code_summary(&code);
    if code.contains_all_ones().is_some() {
        report.result["contains_all_ones"] = json!(true);
    } else {
        report.result["contains_all_ones"] = json!(false);
    }
    if args.brute_force {
        let expected = match args.family {
            Family::Palindrome | Family::Odd => Some(4),
            Family::RsExample => None,
        };
        brute_force_claims(&mut report, &code, budgets, expected)?;
    }
    let cf = CodeFile::from_code(
        &code,
        Some(Metadata {
            name: Some(format!("{}-k{}", args.family.name(), code.k())),
            source: Some("insdel construct".into()),
        }),
    );
    Ok((report, Some(cf)))
}

fn binary_code(rows: &[String]) -> Result<LinearCode> {
    let f = Arc::new(Field::prime(2)?);
    let rows: Vec<Vec<Elem>> = rows
        .iter()
        .map(|r| r.chars().map(|c| if c == '1' { Elem::ONE } else { Elem::ZERO }).collect())
        .collect();
    Ok(LinearCode::from_rows(&f, &rows)?)
}

fn reversed(code: &LinearCode) -> LinearCode {
    let rows: Vec<Vec<Elem>> = code
        .generator()
        .to_rows()
        .into_iter()
        .map(|mut r| {
            r.reverse();
            r
        })
        .collect();
    LinearCode::from_rows(code.field(), &rows).expect("reversal keeps rank")
}

pub fn search(
    n: usize,
    k: usize,
    bound: BoundKind,
    ones: OnesFilter,
    expect: Option<&str>,
    budgets: &Budgets,
) -> Result<Report> {
    let echo = format!(
        "search n={n} k={k} bound={} ones={} expect={expect:?}",
        encode::bound_kind(bound),
        encode::ones_filter(ones)
    );
    let r = find_optimal(n, k, bound, ones, budgets)?;
    let mut report = Report::new("search", echo.as_bytes(), encode::search(&r));
    if bound == BoundKind::Strict && ones != OnesFilter::RequireOut {
        report.note("the strict bound applies only without the all-ones word; such codes are excluded");
    }
    let all_verify = r.matches.iter().all(|c| {
        code_insdel_distance(c, budgets).is_ok_and(|w| w.distance == r.target)
    });
    report.claim("matches re-verify", all_verify, format!("{} codes with d_I = {}", r.matches.len(), r.target));

    if let Some(name) = expect {
        let tables = registry::reference_tables();
        let table = tables
            .get(name)
            .ok_or_else(|| CliError::Input(format!("unknown reference table {name:?}")))?;
        if (table.n, table.k) != (n, k) {
            return Err(CliError::Input(format!("table {name} is for n = {}, k = {}", table.n, table.k)));
        }
        let listed: Vec<LinearCode> = table.generators.iter().map(|g| binary_code(g)).collect::<Result<_>>()?;
        let key = |c: &LinearCode| c.canonical_generator().to_rows();
        let listed_keys: BTreeSet<_> = listed.iter().map(key).collect();
        let found_keys: BTreeSet<_> = r.matches.iter().map(key).collect();
        let extra: Vec<&LinearCode> = r.matches.iter().filter(|c| !listed_keys.contains(&key(c))).collect();
        let missing: Vec<&LinearCode> = listed.iter().filter(|c| !found_keys.contains(&key(c))).collect();
        let describe = |c: &LinearCode| {
            json!({
                "generator": encode::binary_rows(c),
                "reversal_listed": listed_keys.contains(&key(&reversed(c))),
            })
        };
        report.result["reference"] = json!({
            "table": name,
            "listed": listed.len(),
            "distinct_listed": listed_keys.len(),
            "extra": extra.iter().map(|c| describe(c)).collect::<Vec<_>>(),
            "missing": missing.iter().map(|c| describe(c)).collect::<Vec<_>>(),
        });
        report.claim(
            "count equals reference",
            r.matches.len() == listed_keys.len(),
            format!("found {}, reference lists {}", r.matches.len(), listed_keys.len()),
        );
        report.claim(
            "span set equals reference",
            extra.is_empty() && missing.is_empty(),
            format!("{} extra, {} missing", extra.len(), missing.len()),
        );
        for c in &extra {
            if listed_keys.contains(&key(&reversed(c))) {
                report.note(format!(
                    "found code {:?} is the coordinate reversal of a listed code; reversal preserves insdel distance and all-ones membership",
                    encode::binary_rows(c)
                ));
            }
        }
    }
    Ok(report)
}

pub fn verify_example(id: &str, budgets: &Budgets) -> Result<Report> {
    let ex = registry::example(id).ok_or_else(|| {
        CliError::Input(format!("unknown example {id:?}; known: {}", registry::example_ids().join(", ")))
    })?;
    let cf = ex.code_file();
    let input = cf.to_json();
    let mut report = Report::new(format!("verify-example {id}"), input.as_bytes(), json!({"example": id}));
    match &ex.checks {
        Checks::Nonlinear { d_h, distance } => verify_nonlinear(&mut report, ex, *d_h, *distance, budgets)?,
        checks => {
            let code = cf.to_code()?;
            let words = exhibited_words(&mut report, ex, &code)?;
            match checks {
                Checks::Certify { distance, meets, brute_force, lcs } => {
                    verify_certified(&mut report, &code, *distance, *meets, *brute_force, budgets)?;
                    exhibited_pair(&mut report, &code, words.as_ref(), *lcs, *distance);
                }
                Checks::StrictDirect { d_h, min_weight, pairs, t, bound, distance, lcs } => {
                    verify_strict_direct(&mut report, &code, *d_h, min_weight, pairs, *t, *bound, *distance, budgets)?;
                    if let Some((x1, x2)) = &words {
                        let x = code.field().format_word(&bits(min_weight));
                        let diff: Vec<Elem> = x1.iter().zip(x2).map(|(&a, &b)| code.field().sub(b, a)).collect();
                        report.claim(
                            "x2 - x1 is the minimum-weight codeword",
                            code.field().format_word(&diff) == x,
                            format!("{:?}", code.field().format_word(&diff)),
                        );
                    }
                    exhibited_pair(&mut report, &code, words.as_ref(), *lcs, *distance);
                }
                Checks::Nonlinear { .. } => unreachable!(),
            }
        }
    }
    Ok(report)
}

fn bits(s: &str) -> Vec<Elem> {
    s.chars().map(|c| if c == '1' { Elem::ONE } else { Elem::ZERO }).collect()
}

/// Checks membership of the exhibited pair; returns the pair to measure,
/// with errata applied, if both members are codewords.
fn exhibited_words(report: &mut Report, ex: &Example, code: &LinearCode) -> Result<Option<(Vec<Elem>, Vec<Elem>)>> {
    let f = code.field();
    let mut words = Vec::new();
    for w in ex.exhibited {
        let literal = parse_word(f, w.tokens)?;
        if code.contains(&literal)? {
            report.claim(&format!("{} is a codeword", w.name), true, format!("{:?}", w.tokens));
            words.push(Some(literal));
            continue;
        }
        report.mismatch(
            &format!("{} is a codeword", w.name),
            format!("{:?} is not in the code generated under modulus {:?}", w.tokens, f.modulus()),
        );
        match &w.erratum {
            Some(e) => {
                let corrected = parse_word(f, &w.corrected())?;
                let ok = code.contains(&corrected)?;
                report.claim(
                    &format!("{} with position {} read as {}", w.name, e.position, e.corrected),
                    ok,
                    format!("printed {} at position {}; the corrected word {} a codeword", e.printed, e.position, if ok { "is" } else { "is not" }),
                );
                if let Some(m) = code.message_of(&corrected)? {
                    report.note(format!("corrected {} encodes message {:?}", w.name, f.format_word(&m)));
                }
                words.push(ok.then_some(corrected));
            }
            None => words.push(None),
        }
    }
    Ok(match words.as_slice() {
        [Some(a), Some(b)] => Some((a.clone(), b.clone())),
        _ => None,
    })
}

fn exhibited_pair(report: &mut Report, code: &LinearCode, words: Option<&(Vec<Elem>, Vec<Elem>)>, lcs: usize, distance: usize) {
    let Some((a, b)) = words else {
        report.note("exhibited pair not measured: a member is not a codeword");
        return;
    };
    let l = lcs_len(a, b);
    report.result["exhibited"] = json!({
        "a": encode::word(code.field(), a),
        "b": encode::word(code.field(), b),
        "lcs": l,
        "insdel_distance": 2 * code.n() - 2 * l,
    });
    report.claim("exhibited pair LCS", l == lcs, format!("lcs = {l}, expected {lcs}"));
    report.claim(
        "exhibited pair distance",
        2 * code.n() - 2 * l == distance,
        format!("2n - 2 lcs = {}", 2 * code.n() - 2 * l),
    );
}

fn verify_certified(
    report: &mut Report,
    code: &LinearCode,
    distance: usize,
    meets: Option<&[&[usize]]>,
    brute_force: bool,
    budgets: &Budgets,
) -> Result<()> {
    let r = certify_strict_optimal(code, budgets)?;
    report.result["certificate"] = encode::certificate(code.field(), &r);
    report.note("pairs {I, J} are unordered and I = J is included");
    report.claim(
        "determinant condition",
        r.passed(),
        format!("{} qualifying pairs, all nonsingular: {}", r.qualifying.len(), r.passed()),
    );
    report.claim(
        "certified distance",
        r.certified_distance == Some(distance),
        format!("{:?}, expected {distance}", r.certified_distance),
    );
    if let Some(expected) = meets {
        let got: Vec<Vec<usize>> = r.distinct_qualifying().map(|q| encode::one_based(&q.pair.meet)).collect();
        let want: BTreeSet<Vec<usize>> = expected.iter().map(|m| m.to_vec()).collect();
        let got_set: BTreeSet<Vec<usize>> = got.iter().cloned().collect();
        report.claim(
            "qualifying pairs",
            got.len() == expected.len() && got_set == want,
            format!("{} pairs with meets {:?}", got.len(), got),
        );
    }
    if brute_force {
        brute_force_claims(report, code, budgets, Some(distance))?;
    } else {
        report.note("full brute force not attempted for this example");
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn verify_strict_direct(
    report: &mut Report,
    code: &LinearCode,
    d_h: usize,
    min_weight: &str,
    pairs: &[[usize; 2]],
    t: usize,
    bound: usize,
    distance: usize,
    budgets: &Budgets,
) -> Result<()> {
    let f = code.field();
    let found_d_h = code.hamming_distance(budgets.enumeration)?.distance;
    report.claim("Hamming distance", found_d_h == d_h, format!("d_H = {found_d_h}"));

    let x = bits(min_weight);
    let message = code.message_of(&x)?;
    let is_min = message.is_some() && weight(&x) == found_d_h;
    report.claim("minimum-weight codeword", is_min, format!("{min_weight}, weight {}", weight(&x)));
    if let Some(m) = message {
        // try each orientation of the unordered pairs
        let witness = (0..1u32 << pairs.len()).find_map(|mask| {
            let ordered: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .map(|(i, &[a, b])| if mask >> i & 1 == 0 { (a - 1, b - 1) } else { (b - 1, a - 1) })
                .collect();
            strict_direct_witness(code, &m, &ordered, budgets).ok()
        });
        match witness {
            Some(w) => {
                report.claim(
                    "listed pair selection",
                    w.verify(code) && w.bound() == bound,
                    format!("pairs {:?}, information-free inside gaps, bound {}", pairs, w.bound()),
                );
                report.result["listed_selection"] = encode::strict_direct(f, &w);
            }
            None => {
                report.claim("listed pair selection", false, format!("pairs {:?} do not form a valid selection", pairs));
            }
        }
    }

    let searched = strict_direct_bound(code, budgets)?;
    report.result["search"] = json!(searched.as_ref().map(|w| encode::strict_direct(f, w)));
    let got_t = searched.as_ref().map_or(0, |w| w.t());
    report.claim(
        "search finds t",
        got_t == t && searched.as_ref().is_some_and(|w| w.verify(code) && w.bound() == bound),
        format!("t = {got_t}, expected {t}"),
    );
    if searched.as_ref().is_some_and(|w| w.uses_sentinel_gap) {
        report.note("searched selection uses the run before the first zero or after the last zero");
    }
    brute_force_claims(report, code, budgets, Some(distance))?;
    Ok(())
}

fn verify_nonlinear(report: &mut Report, ex: &Example, d_h: usize, distance: usize, budgets: &Budgets) -> Result<()> {
    let f = FieldSpec { p: ex.p, e: ex.e, modulus: None }.build()?;
    let words: Vec<Vec<Elem>> = ex.rows.iter().map(|r| parse_word(&f, r)).collect::<Result<_>>()?;
    let found_d_h = min_hamming_distance(&words)?;
    let w = insdel_distance(&words, budgets.pairs)?;
    report.result["words"] = json!(words.iter().map(|w| f.format_word(w)).collect::<Vec<_>>());
    report.result["brute_force"] = encode::distance_witness(&f, &w);
    report.result["d_h"] = json!(found_d_h);
    report.claim("Hamming distance", found_d_h == d_h, format!("d_H = {found_d_h}"));
    report.claim("insdel distance", w.distance == distance, format!("d_I = {}", w.distance));
    report.claim(
        "exceeds 2(d_H - 1)",
        w.distance > 2 * (found_d_h.saturating_sub(1)),
        format!("{} > {}", w.distance, 2 * found_d_h.saturating_sub(1)),
    );
    report.note("the set is not linear; information-free subsets and the strict direct bound do not apply");
    Ok(())
}
