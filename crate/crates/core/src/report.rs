//! Result files, DOT rendering and independent re-checking of results.

use crate::certify::{verify_certificate, Certificate, Condition, OracleVerdict};
use crate::instance::Instance;
use crate::sets::{EdgeSet, VertexSet};
use crate::solve::SolveOutcome;
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt::{self, Write as _};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum ResultFile {
    Feasible {
        tree_edges: Vec<usize>,
        cost: i64,
        degrees: Degrees,
    },
    Infeasible {
        certificate: CertificateJson,
    },
    Malformed {
        reason: String,
    },
}

/// Tree degree of each constrained vertex, keyed by vertex number in
/// increasing numeric order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Degrees(pub Vec<(usize, usize)>);

impl Serialize for Degrees {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (v, d) in &self.0 {
            map.serialize_entry(&v.to_string(), d)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Degrees {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct DegreesVisitor;

        impl<'de> Visitor<'de> for DegreesVisitor {
            type Value = Degrees;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from vertex number to degree")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Degrees, A::Error> {
                let mut out = Vec::new();
                while let Some((k, d)) = access.next_entry::<String, usize>()? {
                    let v = k.parse::<usize>().map_err(|_| {
                        de::Error::custom(format!("vertex key {k:?} is not a number"))
                    })?;
                    out.push((v, d));
                }
                out.sort_unstable();
                Ok(Degrees(out))
            }
        }

        deserializer.deserialize_map(DegreesVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub violated: String,
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub lhs: i64,
    pub rhs: i64,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        Self {
            violated: c.violated.as_str().to_string(),
            s: c.witness.to_vec(),
            lhs: c.lhs,
            rhs: c.rhs,
        }
    }
}

impl CertificateJson {
    /// Back to a [`Certificate`] over `n` vertices; `None` if the fields are not well formed.
    pub fn to_certificate(&self, n: usize) -> Option<Certificate> {
        let violated = match self.violated.as_str() {
            "alpha" => Condition::Alpha,
            "beta" => Condition::Beta,
            _ => return None,
        };
        let witness = VertexSet::try_from_indices(n, self.s.iter().copied()).ok()?;
        if witness.len() != self.s.len() {
            return None;
        }
        Some(Certificate {
            violated,
            witness,
            lhs: self.lhs,
            rhs: self.rhs,
        })
    }
}

impl ResultFile {
    fn feasible(instance: &Instance, tree: &EdgeSet, cost: i64) -> Self {
        let g = &instance.graph;
        let degrees = instance
            .bounds
            .vertices()
            .map(|v| (v, g.degree_in(tree, v)))
            .collect();
        ResultFile::Feasible {
            tree_edges: tree.to_vec(),
            cost,
            degrees: Degrees(degrees),
        }
    }

    pub fn from_outcome(instance: &Instance, outcome: &SolveOutcome) -> Self {
        match outcome {
            SolveOutcome::Feasible { tree, cost } => Self::feasible(instance, tree, *cost),
            SolveOutcome::Infeasible { certificate, .. } => ResultFile::Infeasible {
                certificate: certificate.into(),
            },
        }
    }

    pub fn from_verdict(instance: &Instance, verdict: &OracleVerdict) -> Self {
        match (&verdict.best_tree, &verdict.violating_set) {
            (Some(tree), _) => Self::feasible(instance, tree, verdict.best_cost.unwrap_or(0)),
            (None, Some(c)) => ResultFile::Infeasible {
                certificate: c.into(),
            },
            (None, None) => ResultFile::Malformed {
                reason: "oracle returned neither a tree nor a certificate".into(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("result serialization cannot fail")
    }

    pub fn status(&self) -> &'static str {
        match self {
            ResultFile::Feasible { .. } => "feasible",
            ResultFile::Infeasible { .. } => "infeasible",
            ResultFile::Malformed { .. } => "malformed",
        }
    }
}

/// Output of the exhaustive condition check: `"pass"` or the first violation per condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionsReport {
    pub status: &'static str,
    pub alpha: ConditionResult,
    pub beta: ConditionResult,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConditionResult {
    Pass,
    Violated(CertificateJson),
}

impl Serialize for ConditionResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ConditionResult::Pass => serializer.serialize_str("pass"),
            ConditionResult::Violated(c) => c.serialize(serializer),
        }
    }
}

impl ConditionsReport {
    pub fn new(alpha: Option<&Certificate>, beta: Option<&Certificate>) -> Self {
        let wrap = |c: Option<&Certificate>| match c {
            None => ConditionResult::Pass,
            Some(c) => ConditionResult::Violated(c.into()),
        };
        let status = if alpha.is_none() && beta.is_none() {
            "feasible"
        } else {
            "infeasible"
        };
        Self {
            status,
            alpha: wrap(alpha),
            beta: wrap(beta),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

/// Graphviz rendering: tree edges bold, constrained vertices labelled with
/// their bounds, certificate vertices filled.
pub fn to_dot(instance: &Instance, result: &ResultFile) -> String {
    let g = &instance.graph;
    let b = &instance.bounds;
    let (tree, witness): (Vec<usize>, Vec<usize>) = match result {
        ResultFile::Feasible { tree_edges, .. } => (tree_edges.clone(), Vec::new()),
        ResultFile::Infeasible { certificate } => (Vec::new(), certificate.s.clone()),
        ResultFile::Malformed { .. } => (Vec::new(), Vec::new()),
    };
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        let mut attrs = Vec::new();
        if b.is_constrained(v) {
            attrs.push(format!("label=\"{v}\\n{}..{}\"", b.alpha(v), b.beta(v)));
            attrs.push("shape=box".to_string());
        }
        if witness.contains(&v) {
            attrs.push("style=filled".to_string());
            attrs.push("fillcolor=lightcoral".to_string());
        }
        if attrs.is_empty() {
            let _ = writeln!(out, "  {v};");
        } else {
            let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
        }
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let w = instance.weights[e];
        if tree.contains(&e) {
            let _ = writeln!(out, "  {u} -- {v} [label=\"{w}\", style=bold, penwidth=3];");
        } else {
            let _ = writeln!(
                out,
                "  {u} -- {v} [label=\"{w}\", style=dashed, color=gray];"
            );
        }
    }
    out.push_str("}\n");
    out
}

/// One named pass/fail check of [`verify_result`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub check: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    fn from_checks(checks: Vec<Check>) -> Self {
        Self {
            passed: checks.iter().all(|c| c.passed),
            checks,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization cannot fail")
    }
}

fn check(name: &str, passed: bool, detail: impl FnOnce() -> String) -> Check {
    Check {
        check: name.to_string(),
        passed,
        detail: (!passed).then(detail),
    }
}

/// Re-checks a claimed result against its instance from first principles.
pub fn verify_result(instance: &Instance, result: &ResultFile) -> VerifyReport {
    let g = &instance.graph;
    let b = &instance.bounds;
    let mut checks = Vec::new();
    match result {
        ResultFile::Feasible {
            tree_edges,
            cost,
            degrees,
        } => {
            let m = g.edge_count();
            let in_range = tree_edges.iter().all(|&e| e < m);
            let sorted = tree_edges.windows(2).all(|w| w[0] < w[1]);
            checks.push(check("edge indices", in_range && sorted, || {
                format!("tree_edges must be strictly increasing indices below {m}")
            }));
            if !in_range {
                return VerifyReport::from_checks(checks);
            }
            let tree = EdgeSet::from_indices(m, tree_edges.iter().copied());
            checks.push(check("spanning tree", g.is_spanning_tree(&tree), || {
                format!(
                    "{} edges forming {} component(s)",
                    tree.len(),
                    g.component_count_spanning(&tree)
                )
            }));
            let actual: Vec<(usize, usize)> =
                b.vertices().map(|v| (v, g.degree_in(&tree, v))).collect();
            let bad: Vec<String> = actual
                .iter()
                .filter(|&&(v, d)| d < b.alpha(v) as usize || d > b.beta(v) as usize)
                .map(|&(v, d)| {
                    format!(
                        "vertex {v}: degree {d} not in {}..{}",
                        b.alpha(v),
                        b.beta(v)
                    )
                })
                .collect();
            checks.push(check("degree bounds", bad.is_empty(), || bad.join("; ")));
            checks.push(check("degrees field", degrees.0 == actual, || {
                format!(
                    "degrees mismatch: claimed {:?}, actual {:?}",
                    degrees.0, actual
                )
            }));
            let recomputed = tree_edges
                .iter()
                .try_fold(0i64, |acc, &e| acc.checked_add(instance.weights[e]));
            checks.push(check(
                "cost",
                recomputed == Some(*cost),
                || match recomputed {
                    Some(c) => format!("cost mismatch: claimed {cost}, recomputed {c}"),
                    None => "cost mismatch: recomputed cost overflows".to_string(),
                },
            ));
        }
        ResultFile::Infeasible { certificate } => {
            let parsed = certificate.to_certificate(g.vertex_count());
            checks.push(check("certificate fields", parsed.is_some(), || {
                "violated must be alpha or beta and S distinct vertices in range".to_string()
            }));
            if let Some(c) = parsed {
                checks.push(check(
                    "witness within U",
                    c.witness.is_subset(b.constrained()),
                    || "S contains an unconstrained vertex".to_string(),
                ));
                checks.push(check("certificate", verify_certificate(g, b, &c), || {
                    format!(
                        "claimed lhs={} rhs={} do not witness a violation",
                        c.lhs, c.rhs
                    )
                }));
            }
        }
        ResultFile::Malformed { reason } => {
            checks.push(check("status", false, || {
                format!("instance is well formed but result claims malformed: {reason}")
            }));
        }
    }
    VerifyReport::from_checks(checks)
}
