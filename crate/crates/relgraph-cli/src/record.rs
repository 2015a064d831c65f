//! The JSON-lines dataset record: one solver outcome per line, storing the
//! edit set rather than the edited graph so datasets stay compact and
//! distances stay auditable. Budgets are serialized as exact strings
//! (rationals in reduced `p/q` form; the irrational radii keep their
//! symbolic forms `sqrt(n)`, `pow(n,4/3)`, `n/e`).

use std::collections::BTreeSet;
use std::str::FromStr;

use num::{BigInt, BigRational};
use serde::{Deserialize, Serialize};

use relgraph::certify::{Answer, Certificate, NegativityHint, Problem, RelAnswer};
use relgraph::graph::{EditSet, Graph, Instance, Metric};
use relgraph::{Budget, BudgetBound};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RelRecord {
    pub problem: String,
    pub dist: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub budget: String,
    /// Signed edits as `["add"|"del", u, v]` triples.
    pub edits: Vec<(String, usize, usize)>,
    pub answer: String,
    pub certificate: CertificateRecord,
    pub distance: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hint: Option<HintRecord>,
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateRecord {
    Cycle { order: Vec<usize> },
    VertexSet { vertices: Vec<usize> },
    Partition { parts: Vec<Vec<usize>> },
    Nil,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HintRecord {
    IsolatedVertex { vertex: usize },
    SeparatorPair { vertices: Vec<usize> },
    CliquePartition { parts: Vec<Vec<usize>> },
    PlantedIndependentSet { vertices: Vec<usize> },
    CoverageShortfall { covered: u64, bound: String },
}

fn rational_to_string(r: &BigRational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_from_string(s: &str) -> Result<BigRational, String> {
    let parse = |t: &str| BigInt::from_str(t).map_err(|e| format!("bad rational {s}: {e}"));
    match s.split_once('/') {
        Some((p, q)) => Ok(BigRational::new(parse(p)?, parse(q)?)),
        None => Ok(BigRational::from_integer(parse(s)?)),
    }
}

fn certificate_record(c: &Certificate) -> CertificateRecord {
    match c {
        Certificate::CycleOrder(order) => CertificateRecord::Cycle {
            order: order.clone(),
        },
        Certificate::VertexSet(s) => CertificateRecord::VertexSet {
            vertices: s.iter().copied().collect(),
        },
        Certificate::Partition(parts) => CertificateRecord::Partition {
            parts: parts.iter().map(|p| p.iter().copied().collect()).collect(),
        },
        Certificate::Nil(_) => CertificateRecord::Nil,
    }
}

fn hint_record(h: &NegativityHint) -> HintRecord {
    match h {
        NegativityHint::IsolatedVertex(v) => HintRecord::IsolatedVertex { vertex: *v },
        NegativityHint::SeparatorPair(vs) => HintRecord::SeparatorPair {
            vertices: vs.clone(),
        },
        NegativityHint::CliquePartition(parts) => HintRecord::CliquePartition {
            parts: parts.iter().map(|p| p.iter().copied().collect()).collect(),
        },
        NegativityHint::PlantedIndependentSet(s) => HintRecord::PlantedIndependentSet {
            vertices: s.iter().copied().collect(),
        },
        NegativityHint::CoverageShortfall { covered, bound } => HintRecord::CoverageShortfall {
            covered: *covered,
            bound: rational_to_string(bound),
        },
    }
}

impl RelRecord {
    pub fn from_answer(
        problem: Problem,
        metric: Metric,
        answer: &RelAnswer,
        source: &str,
        seed: Option<u64>,
    ) -> RelRecord {
        let mut edits: Vec<(String, usize, usize)> = Vec::new();
        for (u, v) in answer.edits.adds() {
            edits.push(("add".to_string(), u, v));
        }
        for (u, v) in answer.edits.dels() {
            edits.push(("del".to_string(), u, v));
        }
        RelRecord {
            problem: problem.tag().to_string(),
            dist: metric.tag().to_string(),
            n: answer.edited.n(),
            k: answer.edited.k,
            budget: answer.budget.bound.to_string(),
            edits,
            answer: answer.answer.tag().to_string(),
            certificate: certificate_record(&answer.certificate),
            distance: answer.distance,
            hint: answer.certificate.hint().map(hint_record),
            source: source.to_string(),
            seed,
        }
    }

    pub fn problem(&self) -> Result<Problem, String> {
        Problem::from_tag(&self.problem).ok_or_else(|| format!("unknown problem {}", self.problem))
    }

    pub fn metric(&self) -> Result<Metric, String> {
        Metric::from_tag(&self.dist).ok_or_else(|| format!("unknown metric {}", self.dist))
    }

    /// Rebuilds the in-memory answer against the original graph: the edit
    /// set is re-applied, the budget string re-parsed, the certificate and
    /// hint reconstructed. The result feeds `verify_rel_answer`.
    pub fn reconstruct(&self, original: &Graph) -> Result<(Instance, RelAnswer), String> {
        if original.n() != self.n {
            return Err(format!(
                "record is for n = {}, graph has {} vertices",
                self.n,
                original.n()
            ));
        }
        let metric = self.metric()?;
        let original_inst =
            Instance::new(original.clone(), self.k).map_err(|e| e.to_string())?;
        let mut edits = EditSet::empty(self.n);
        for (op, u, v) in &self.edits {
            match op.as_str() {
                "add" => edits.push_add(*u, *v).map_err(|e| e.to_string())?,
                "del" => edits.push_del(*u, *v).map_err(|e| e.to_string())?,
                other => return Err(format!("unknown edit op {other}")),
            }
        }
        let edited_graph = edits.apply(original).map_err(|e| e.to_string())?;
        let edited = Instance::new(edited_graph, self.k).map_err(|e| e.to_string())?;
        let hint = match &self.hint {
            None => None,
            Some(HintRecord::IsolatedVertex { vertex }) => {
                Some(NegativityHint::IsolatedVertex(*vertex))
            }
            Some(HintRecord::SeparatorPair { vertices }) => {
                Some(NegativityHint::SeparatorPair(vertices.clone()))
            }
            Some(HintRecord::CliquePartition { parts }) => Some(NegativityHint::CliquePartition(
                parts.iter().map(|p| p.iter().copied().collect()).collect(),
            )),
            Some(HintRecord::PlantedIndependentSet { vertices }) => Some(
                NegativityHint::PlantedIndependentSet(vertices.iter().copied().collect()),
            ),
            Some(HintRecord::CoverageShortfall { covered, bound }) => {
                Some(NegativityHint::CoverageShortfall {
                    covered: *covered,
                    bound: rational_from_string(bound)?,
                })
            }
        };
        let certificate = match &self.certificate {
            CertificateRecord::Cycle { order } => Certificate::CycleOrder(order.clone()),
            CertificateRecord::VertexSet { vertices } => {
                Certificate::VertexSet(vertices.iter().copied().collect::<BTreeSet<_>>())
            }
            CertificateRecord::Partition { parts } => Certificate::Partition(
                parts.iter().map(|p| p.iter().copied().collect()).collect(),
            ),
            CertificateRecord::Nil => Certificate::Nil(hint),
        };
        let answer = match self.answer.as_str() {
            "positive" => Answer::Positive,
            "negative" => Answer::Negative,
            other => return Err(format!("unknown answer {other}")),
        };
        let bound: BudgetBound = self
            .budget
            .parse()
            .map_err(|e: relgraph::budget::ParseBoundError| e.to_string())?;
        let rel = RelAnswer {
            edited,
            edits,
            answer,
            certificate,
            distance: self.distance,
            budget: Budget::new(metric, bound),
        };
        Ok((original_inst, rel))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use relgraph::certify::verify_rel_answer;
    use relgraph::solvers::{self, SolveOptions};

    #[test]
    fn record_round_trip_preserves_verification() {
        let g = Graph::star(6);
        let inst = Instance::new(g.clone(), Some(1)).unwrap();
        let a = solvers::solve(
            Problem::DominatingSet,
            Metric::EdgeEdits,
            &inst,
            &SolveOptions::default(),
        )
        .unwrap();
        let record = RelRecord::from_answer(Problem::DominatingSet, Metric::EdgeEdits, &a, "x", None);
        let json = serde_json::to_string(&record).unwrap();
        let parsed: RelRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, record);
        let (orig, rebuilt) = parsed.reconstruct(&g).unwrap();
        let report = verify_rel_answer(
            Problem::DominatingSet,
            &orig,
            &rebuilt,
            Metric::EdgeEdits,
            None,
        );
        assert!(report.passed(), "{:?}", report.first_failure());
    }

    #[test]
    fn coverage_hint_survives_serialization() {
        let g = Graph::new(8);
        let inst = Instance::new(g.clone(), Some(2)).unwrap();
        let a = solvers::solve(
            Problem::DominatingSet,
            Metric::EdgeEdits,
            &inst,
            &SolveOptions::default(),
        )
        .unwrap();
        assert_eq!(a.answer.tag(), "negative");
        let record =
            RelRecord::from_answer(Problem::DominatingSet, Metric::EdgeEdits, &a, "x", Some(7));
        let json = serde_json::to_string(&record).unwrap();
        let parsed: RelRecord = serde_json::from_str(&json).unwrap();
        let (orig, rebuilt) = parsed.reconstruct(&g).unwrap();
        let report = verify_rel_answer(
            Problem::DominatingSet,
            &orig,
            &rebuilt,
            Metric::EdgeEdits,
            None,
        );
        assert!(report.passed(), "{:?}", report.first_failure());
    }
}
