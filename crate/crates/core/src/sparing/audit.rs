//! Audit harness: evaluates each registry formula over a parameter range
//! and compares it with exact sparing numbers of the actual graphs.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::formula::{ec_rs_proof_variant, formula_value, Params, TheoremId};
use super::{
    min_mono_vertices, pattern_mono_edges, sparing_bruteforce, sparing_by_components,
    sparing_exact, MonoPattern, SolveError, SolverConfig, SparingResult,
};
use crate::graph::{self, edge_corona, regularity, Graph};
use crate::iasi::{count_mono_elements, verify};
use crate::labeler::construct_weak_iasi;

/// Parameter ranges for an audit. Their meaning depends on the theorem:
/// `m`/`n` are the operand sizes for path, cycle and complete operands;
/// for `UNION` they are the sizes of the two pieces; catalog-driven
/// theorems (`EC_RR`, `EC_RS`, `MONO_COUNT`) ignore them, and `EC_RK`
/// uses only `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRanges {
    pub m: RangeInclusive<usize>,
    pub n: RangeInclusive<usize>,
}

impl AuditRanges {
    pub fn default_for(id: TheoremId) -> Self {
        match id {
            TheoremId::EcPp | TheoremId::EcPc | TheoremId::EcCp | TheoremId::EcCc => {
                Self { m: 2..=5, n: 2..=5 }
            }
            TheoremId::EcPk | TheoremId::EcCk => Self { m: 2..=5, n: 1..=4 },
            TheoremId::EcRk | TheoremId::EcRr | TheoremId::EcRs | TheoremId::MonoCount => {
                Self { m: 2..=5, n: 1..=4 }
            }
            TheoremId::Complete => Self { m: 1..=8, n: 1..=8 },
            TheoremId::Union => Self { m: 1..=4, n: 1..=4 },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Agree,
    Disagree,
    /// The oracle did not finish (timeout or cap); never counted as agreement.
    Unresolved,
    /// The formula could not be evaluated at these parameters.
    FormulaError,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrosscheckMethod {
    Bruteforce,
    ComponentEnumeration,
    /// Mono-edge count of the lifted pattern, without building labels.
    PatternCount,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Crosscheck {
    pub method: CrosscheckMethod,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub instance: String,
    pub params: Params,
    pub vertices: usize,
    pub edges: usize,
    pub formula_value: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub formula_error: Option<String>,
    /// `EC_RS` only: the value of the proof's closing expression.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub proof_variant_value: Option<i64>,
    pub oracle_value: Option<usize>,
    pub oracle_witness: Vec<usize>,
    pub crosscheck: Option<Crosscheck>,
    /// Whether the second exact method reproduced the oracle.
    pub methods_agree: Option<bool>,
    pub status: RowStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub rows: usize,
    pub agree: usize,
    pub disagree: usize,
    pub unresolved: usize,
    pub formula_errors: usize,
    pub methods_disagree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub statement: String,
    pub rows: Vec<ReportRow>,
    pub summary: ReportSummary,
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn all_resolved(&self) -> bool {
        self.summary.unresolved == 0
    }

    /// Plain-text table with columns params, formula, oracle, verdict.
    pub fn to_table(&self) -> String {
        let mut rows: Vec<[String; 5]> = vec![[
            "instance".into(),
            "params".into(),
            "formula".into(),
            "oracle".into(),
            "verdict".into(),
        ]];
        for r in &self.rows {
            let params = r
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" ");
            let formula = match (&r.formula_value, r.proof_variant_value) {
                (Some(v), Some(p)) => format!("{v} (proof: {p})"),
                (Some(v), None) => v.to_string(),
                (None, _) => "error".into(),
            };
            let oracle = r.oracle_value.map_or("-".into(), |v| v.to_string());
            let mut verdict = match r.status {
                RowStatus::Agree => "agree".to_string(),
                RowStatus::Disagree => "DISAGREE".to_string(),
                RowStatus::Unresolved => "unresolved".to_string(),
                RowStatus::FormulaError => "formula error".to_string(),
            };
            if r.methods_agree == Some(false) {
                verdict.push_str(" [methods differ]");
            }
            rows.push([r.instance.clone(), params, formula, oracle, verdict]);
        }
        let widths: Vec<usize> = (0..5)
            .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
            .collect();
        let mut out = format!("{}: {}\n", self.theorem_id, self.statement);
        for (i, row) in rows.iter().enumerate() {
            let line = row
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:<w$}"))
                .collect::<Vec<_>>()
                .join("  ");
            let _ = writeln!(out, "{}", line.trim_end());
            if i == 0 {
                let _ = writeln!(
                    out,
                    "{}",
                    "-".repeat(widths.iter().sum::<usize>() + 2 * (widths.len() - 1))
                );
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "rows {}, agree {}, disagree {}, unresolved {}, formula errors {}, method mismatches {}",
            s.rows, s.agree, s.disagree, s.unresolved, s.formula_errors, s.methods_disagree
        );
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        out
    }
}

#[derive(Debug, Clone)]
struct Named {
    name: String,
    graph: Graph,
}

impl Named {
    fn family(f: graph::Family) -> Self {
        Self {
            name: f.name(),
            graph: graph::generate(f).expect("catalog family parameters are valid"),
        }
    }
}

/// Regular graphs used for the regular-operand theorems: cycles (r = 2),
/// `K_{r+1}` and `K_{r,r}`, without repeats.
fn regular_catalog() -> Vec<(Named, usize)> {
    use graph::Family::*;
    [
        Complete(2),
        Cycle(3),
        Cycle(4),
        Cycle(5),
        Complete(4),
        CompleteBipartite(3, 3),
        Complete(5),
    ]
    .into_iter()
    .map(|f| {
        let named = Named::family(f);
        let r = regularity(&named.graph).expect("catalog graphs are regular");
        (named, r)
    })
    .collect()
}

fn mono_count_catalog() -> Vec<Named> {
    use graph::Family::*;
    [
        Path(2),
        Path(3),
        Path(4),
        Cycle(3),
        Cycle(4),
        Cycle(5),
        Complete(3),
        Complete(4),
    ]
    .into_iter()
    .map(Named::family)
    .collect()
}

enum Point {
    Corona {
        g1: Named,
        g2: Named,
        params: Params,
    },
    Single {
        g: Named,
        params: Params,
    },
    Union {
        instance: String,
        g1: Graph,
        g2: Graph,
    },
    MonoCount {
        g1: Named,
        g2: Named,
    },
}

fn p(pairs: &[(&str, usize)]) -> Params {
    pairs
        .iter()
        .map(|&(k, v)| (k.to_string(), v as i64))
        .collect()
}

fn points(id: TheoremId, ranges: &AuditRanges) -> Vec<Point> {
    use graph::Family::*;
    let grid =
        |make: &dyn Fn(usize, usize) -> Option<(graph::Family, graph::Family)>| -> Vec<Point> {
            let mut out = Vec::new();
            for m in ranges.m.clone() {
                for n in ranges.n.clone() {
                    if let Some((a, b)) = make(m, n) {
                        out.push(Point::Corona {
                            g1: Named::family(a),
                            g2: Named::family(b),
                            params: p(&[("m", m), ("n", n)]),
                        });
                    }
                }
            }
            out
        };
    match id {
        TheoremId::EcPp => grid(&|m, n| (m >= 1 && n >= 1).then_some((Path(m), Path(n)))),
        TheoremId::EcPc => grid(&|m, n| (m >= 1 && n >= 3).then_some((Path(m), Cycle(n)))),
        TheoremId::EcCp => grid(&|m, n| (m >= 3 && n >= 1).then_some((Cycle(m), Path(n)))),
        TheoremId::EcCc => grid(&|m, n| (m >= 3 && n >= 3).then_some((Cycle(m), Cycle(n)))),
        TheoremId::EcPk => grid(&|m, n| (m >= 1 && n >= 1).then_some((Path(m), Complete(n)))),
        TheoremId::EcCk => grid(&|m, n| (m >= 3 && n >= 1).then_some((Cycle(m), Complete(n)))),
        TheoremId::EcRk => {
            let mut out = Vec::new();
            for (g, r) in regular_catalog() {
                for n in ranges.n.clone() {
                    if n >= 1 && r < n {
                        let m = g.graph.vertex_count();
                        out.push(Point::Corona {
                            g1: g.clone(),
                            g2: Named::family(Complete(n)),
                            params: p(&[("m", m), ("r", r), ("n", n)]),
                        });
                    }
                }
            }
            out
        }
        TheoremId::EcRr | TheoremId::EcRs => {
            let catalog = regular_catalog();
            let mut out = Vec::new();
            for (g1, r) in &catalog {
                for (g2, s) in &catalog {
                    let keep = if id == TheoremId::EcRr {
                        r == s
                    } else {
                        r <= s
                    };
                    if keep {
                        let mut params = p(&[("m", g1.graph.vertex_count()), ("r", *r)]);
                        if id == TheoremId::EcRs {
                            params.insert("s".into(), *s as i64);
                        }
                        out.push(Point::Corona {
                            g1: g1.clone(),
                            g2: g2.clone(),
                            params,
                        });
                    }
                }
            }
            out
        }
        TheoremId::Complete => ranges
            .n
            .clone()
            .filter(|&n| n >= 1)
            .map(|n| Point::Single {
                g: Named::family(Complete(n)),
                params: p(&[("n", n)]),
            })
            .collect(),
        TheoremId::Union => union_points(ranges),
        TheoremId::MonoCount => {
            let catalog = mono_count_catalog();
            let mut out = Vec::new();
            for g1 in &catalog {
                for g2 in &catalog {
                    out.push(Point::MonoCount {
                        g1: g1.clone(),
                        g2: g2.clone(),
                    });
                }
            }
            out
        }
    }
}

/// One-point unions of two complete graphs and of two cycles, and chains
/// of three complete graphs where consecutive pieces share a vertex.
fn union_points(ranges: &AuditRanges) -> Vec<Point> {
    let mut out = Vec::new();
    let one_point = |a: &Graph, b: &Graph| {
        let total = a.vertex_count() + b.vertex_count() - 1;
        (
            a.embed(0, total).expect("fits"),
            b.embed(a.vertex_count() - 1, total).expect("fits"),
        )
    };
    for a in ranges.m.clone().filter(|&a| a >= 1) {
        for b in ranges.n.clone().filter(|&b| b >= 1) {
            let (g1, g2) = one_point(&graph::complete(a).unwrap(), &graph::complete(b).unwrap());
            out.push(Point::Union {
                instance: format!("K{a} . K{b}"),
                g1,
                g2,
            });
        }
    }
    for a in ranges.m.clone().filter(|&a| a >= 3) {
        for b in ranges.n.clone().filter(|&b| b >= 3) {
            let (g1, g2) = one_point(&graph::cycle(a).unwrap(), &graph::cycle(b).unwrap());
            out.push(Point::Union {
                instance: format!("C{a} . C{b}"),
                g1,
                g2,
            });
        }
    }
    for n in ranges.n.clone().filter(|&n| n >= 2) {
        let k = graph::complete(n).unwrap();
        let total = 3 * n - 2;
        let first_two = graph::union(&k.embed(0, total).unwrap(), &k.embed(n - 1, total).unwrap());
        let third = k.embed(2 * n - 2, total).unwrap();
        out.push(Point::Union {
            instance: format!("K{n} . K{n} . K{n}"),
            g1: first_two,
            g2: third,
        });
    }
    out
}

struct Oracle {
    result: Result<SparingResult, SolveError>,
    crosscheck: Option<(Crosscheck, bool)>,
}

/// Exact value by branch and bound, reproduced by literal enumeration when
/// the graph is within the cap and by unpruned component enumeration
/// otherwise.
fn oracle(g: &Graph, config: &SolverConfig) -> Oracle {
    let result = sparing_exact(g, config);
    let crosscheck = result.as_ref().ok().and_then(|exact| {
        if g.vertex_count() <= config.cap {
            let brute = sparing_bruteforce(g, config).ok()?;
            let same = brute.value == exact.value && brute.witness == exact.witness;
            Some((
                Crosscheck {
                    method: CrosscheckMethod::Bruteforce,
                    value: brute.value,
                },
                same,
            ))
        } else {
            let comp = sparing_by_components(g, config).ok()?;
            let same = comp.value == exact.value;
            Some((
                Crosscheck {
                    method: CrosscheckMethod::ComponentEnumeration,
                    value: comp.value,
                },
                same,
            ))
        }
    });
    Oracle { result, crosscheck }
}

fn finish_row(
    instance: String,
    g: &Graph,
    params: Params,
    formula: Result<i64, String>,
    proof_variant_value: Option<i64>,
    oracle: Oracle,
    note: Option<String>,
) -> ReportRow {
    let (oracle_value, oracle_witness, note) = match oracle.result {
        Ok(r) => (
            Some(r.value),
            r.witness.non_mono.into_iter().collect(),
            note,
        ),
        Err(e) => (None, Vec::new(), Some(e.to_string())),
    };
    // a missing cross-check leaves the row unresolved
    let methods_agree = oracle_value.map(|_| oracle.crosscheck.as_ref().is_some_and(|c| c.1));
    let (formula_value, formula_error) = match formula {
        Ok(v) => (Some(v), None),
        Err(e) => (None, Some(e)),
    };
    let resolved = oracle_value.is_some() && oracle.crosscheck.is_some();
    let status = match (resolved, formula_value) {
        (false, _) => RowStatus::Unresolved,
        (true, None) => RowStatus::FormulaError,
        (true, Some(f)) if Some(f) == oracle_value.map(|v| v as i64) => RowStatus::Agree,
        (true, Some(_)) => RowStatus::Disagree,
    };
    ReportRow {
        instance,
        params,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        formula_value,
        formula_error,
        proof_variant_value,
        oracle_value,
        oracle_witness,
        crosscheck: oracle.crosscheck.map(|c| c.0),
        methods_agree,
        status,
        note,
    }
}

fn unresolved_row(instance: String, g: &Graph, params: Params, err: SolveError) -> ReportRow {
    finish_row(
        instance,
        g,
        params,
        Err("inputs unavailable".into()),
        None,
        Oracle {
            result: Err(err),
            crosscheck: None,
        },
        None,
    )
}

fn evaluate(id: TheoremId, point: Point, config: &SolverConfig) -> ReportRow {
    match point {
        Point::Single { g, params } => {
            let formula = formula_value(id, &params).map_err(|e| e.to_string());
            finish_row(
                g.name,
                &g.graph,
                params,
                formula,
                None,
                oracle(&g.graph, config),
                None,
            )
        }
        Point::Corona { g1, g2, mut params } => {
            let (corona, _) = edge_corona(&g1.graph, &g2.graph);
            let instance = format!("{} <> {}", g1.name, g2.name);
            if matches!(id, TheoremId::EcRr | TheoremId::EcRs) {
                let inputs = min_mono_vertices(&g2.graph, config)
                    .and_then(|n_prime| Ok((n_prime, sparing_exact(&g2.graph, config)?.value)));
                match inputs {
                    Ok((n_prime, phi2)) => {
                        params.insert("n_prime".into(), n_prime as i64);
                        params.insert("phi2".into(), phi2 as i64);
                    }
                    Err(e) => return unresolved_row(instance, &corona, params, e),
                }
            }
            let formula = formula_value(id, &params).map_err(|e| e.to_string());
            let variant = (id == TheoremId::EcRs)
                .then(|| ec_rs_proof_variant(&params).ok())
                .flatten();
            finish_row(
                instance,
                &corona,
                params,
                formula,
                variant,
                oracle(&corona, config),
                None,
            )
        }
        Point::Union { instance, g1, g2 } => {
            let joined = graph::union(&g1, &g2);
            let common = graph::intersection(&g1, &g2);
            let phis: Result<Vec<usize>, SolveError> = [&g1, &g2, &common]
                .into_iter()
                .map(|g| sparing_exact(g, config).map(|r| r.value))
                .collect();
            let phis = match phis {
                Ok(v) => v,
                Err(e) => return unresolved_row(instance, &joined, Params::new(), e),
            };
            let params = p(&[("phi1", phis[0]), ("phi2", phis[1]), ("phi12", phis[2])]);
            let formula = formula_value(id, &params).map_err(|e| e.to_string());
            finish_row(
                instance,
                &joined,
                params,
                formula,
                None,
                oracle(&joined, config),
                None,
            )
        }
        Point::MonoCount { g1, g2 } => mono_count_row(g1, g2, config),
    }
}

/// Takes optimal patterns of both operands, lifts them to the corona
/// (copies on non-mono-indexed edges of the first operand all mono-indexed,
/// the others copying the second operand's pattern), builds and verifies
/// an actual labeling, and counts its mono-indexed edges.
fn mono_count_row(g1: Named, g2: Named, config: &SolverConfig) -> ReportRow {
    let (corona, prov) = edge_corona(&g1.graph, &g2.graph);
    let instance = format!("{} <> {}", g1.name, g2.name);
    let (r1, r2) = match (
        sparing_exact(&g1.graph, config),
        sparing_exact(&g2.graph, config),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return unresolved_row(instance, &corona, Params::new(), e),
    };

    let mut lifted = r1.witness.non_mono.clone();
    for (j, &(a, b)) in g1.graph.edges().iter().enumerate() {
        if r1.witness.is_mono(a) && r1.witness.is_mono(b) {
            lifted.extend(r2.witness.non_mono.iter().map(|&u| prov.copies[j][u]));
        }
    }
    let lifted = MonoPattern { non_mono: lifted };

    let params = p(&[
        ("m1", g1.graph.edge_count()),
        ("m1_prime", r1.value),
        ("n2", g2.graph.vertex_count()),
        ("m2", g2.graph.edge_count()),
        ("n2_prime", r2.witness.mono_vertex_count(&g2.graph)),
        ("m2_prime", r2.value),
    ]);
    let formula = formula_value(TheoremId::MonoCount, &params).map_err(|e| e.to_string());

    let measured = (|| -> Result<(usize, usize, String), String> {
        let f = construct_weak_iasi(&corona, &lifted).map_err(|e| e.to_string())?;
        let verdict = verify(&corona, &f).map_err(|e| e.to_string())?;
        if !verdict.is_weak_iasi() {
            return Err(format!(
                "constructed labeling failed verification: {:?}",
                verdict.first_violation
            ));
        }
        let (_, labeled) = count_mono_elements(&corona, &f).map_err(|e| e.to_string())?;
        let counted = pattern_mono_edges(&corona, &lifted).map_err(|e| e.to_string())?;
        let phi = sparing_exact(&corona, config)
            .map(|r| format!("sparing number of the corona: {}", r.value))
            .unwrap_or_else(|e| e.to_string());
        Ok((labeled, counted, phi))
    })();

    match measured {
        Ok((labeled, counted, note)) => {
            let oracle = Oracle {
                result: Ok(SparingResult {
                    value: labeled,
                    witness: lifted,
                    method: r1.method,
                    explored: 0,
                    elapsed: Default::default(),
                }),
                crosscheck: Some((
                    Crosscheck {
                        method: CrosscheckMethod::PatternCount,
                        value: counted,
                    },
                    labeled == counted,
                )),
            };
            finish_row(instance, &corona, params, formula, None, oracle, Some(note))
        }
        Err(msg) => {
            let mut row = unresolved_row(
                instance,
                &corona,
                params,
                SolveError::InvalidInput(msg.clone()),
            );
            row.note = Some(msg);
            row
        }
    }
}

fn notes_for(id: TheoremId) -> Vec<String> {
    let mut notes = Vec::new();
    match id {
        TheoremId::EcRs => {
            notes.push(
                "formula column uses the theorem statement m(n'+r(1+phi2)); the proof's closing line gives m[n'+r+phi2] (shown as 'proof')"
                    .into(),
            );
            notes.push(
                "n' and phi2 are computed independently for G2; joint attainability is not assumed"
                    .into(),
            );
        }
        TheoremId::EcRr => {
            notes.push(
                "n' and phi2 are computed independently for G2; joint attainability is not assumed"
                    .into(),
            );
        }
        TheoremId::Union => {
            notes.push(
                "phi1, phi2 and phi12 are exact values of the pieces and their intersection".into(),
            );
        }
        TheoremId::MonoCount => {
            notes.push(
                "oracle column counts mono-indexed edges of a verified labeling built from optimal operand patterns; it is not the sparing number of the corona"
                    .into(),
            );
        }
        _ => {}
    }
    notes
}

/// Runs the audit for one registry entry. Disagreements are recorded, not
/// treated as failures; rows whose oracle cannot finish are `Unresolved`.
pub fn check_theorem(id: TheoremId, ranges: &AuditRanges, config: &SolverConfig) -> TheoremReport {
    let rows: Vec<ReportRow> = points(id, ranges)
        .into_par_iter()
        .map(|point| evaluate(id, point, config))
        .collect();

    let mut summary = ReportSummary {
        rows: rows.len(),
        ..Default::default()
    };
    for r in &rows {
        match r.status {
            RowStatus::Agree => summary.agree += 1,
            RowStatus::Disagree => summary.disagree += 1,
            RowStatus::Unresolved => summary.unresolved += 1,
            RowStatus::FormulaError => summary.formula_errors += 1,
        }
        if r.methods_agree == Some(false) {
            summary.methods_disagree += 1;
        }
    }
    TheoremReport {
        theorem_id: id,
        statement: id.statement().to_string(),
        rows,
        summary,
        notes: notes_for(id),
    }
}

/// Every graph the audit of `id` over `ranges` solves, by instance name.
pub fn instance_graphs(id: TheoremId, ranges: &AuditRanges) -> Vec<(String, Graph)> {
    points(id, ranges)
        .into_iter()
        .map(|point| match point {
            Point::Corona { g1, g2, .. } | Point::MonoCount { g1, g2 } => (
                format!("{} <> {}", g1.name, g2.name),
                edge_corona(&g1.graph, &g2.graph).0,
            ),
            Point::Single { g, .. } => (g.name, g.graph),
            Point::Union { instance, g1, g2 } => (instance, graph::union(&g1, &g2)),
        })
        .collect()
}

/// Convenience lookup of a row by instance name.
pub fn row_by_instance<'a>(report: &'a TheoremReport, instance: &str) -> Option<&'a ReportRow> {
    report.rows.iter().find(|r| r.instance == instance)
}

/// Rows keyed by their parameter map, for callers that index by `m`, `n`.
pub fn rows_by_params(report: &TheoremReport) -> BTreeMap<Params, &ReportRow> {
    report.rows.iter().map(|r| (r.params.clone(), r)).collect()
}
