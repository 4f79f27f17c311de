//! Reproduces the edge-tolerable diagnosability table of balanced hypercubes.

use std::fmt::{self, Write};

use serde::Serialize;

use super::tolerable::{edge_tolerable_diagnosability, Certificate, DiagnosabilityReport, Strategy};
use crate::error::{Error, Result};
use crate::models::DiagModel;
use crate::topology::{balanced_hypercube, TopologyKind};

/// Largest dimension computed exactly; higher dimensions get bounds.
pub const EXACT_MAX_N: usize = 2;

/// Published `t_h^e(BH_n)`.
///
/// PMC: `BH_1` gives 1, 1, 0 for `h` = 0, 1, 2. MM*: `BH_1` gives 0
/// throughout. For `n >= 2` both models give `2n − h`.
pub fn expected_bh_value(n: usize, h: usize, model: DiagModel) -> Option<usize> {
    if n == 0 || h > 2 * n {
        return None;
    }
    Some(match (n, model) {
        (1, DiagModel::Pmc) => usize::from(h < 2),
        (1, DiagModel::MmStar) => 0,
        _ => 2 * n - h,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CellVerdict {
    /// Exact value equals the published one.
    Pass,
    /// Exact value differs, or bounds exclude the published value.
    Fail,
    /// Bounds contain the published value and probing found no contradiction.
    Consistent,
}

impl fmt::Display for CellVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellVerdict::Pass => "PASS",
            CellVerdict::Fail => "FAIL",
            CellVerdict::Consistent => "CONSISTENT",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictCell {
    pub n: usize,
    pub model: DiagModel,
    pub h: usize,
    pub expected: usize,
    pub value: Option<usize>,
    pub lower: usize,
    pub upper: usize,
    pub verdict: CellVerdict,
    pub strategy: &'static str,
    pub certificate: Option<Certificate>,
    pub elapsed_ms: f64,
}

impl VerdictCell {
    fn from_report(n: usize, expected: usize, report: DiagnosabilityReport) -> Self {
        let verdict = match report.value {
            Some(v) if v == expected => CellVerdict::Pass,
            Some(_) => CellVerdict::Fail,
            None if report.lower <= expected && expected <= report.upper => CellVerdict::Consistent,
            None => CellVerdict::Fail,
        };
        VerdictCell {
            n,
            model: report.model,
            h: report.h,
            expected,
            value: report.value,
            lower: report.lower,
            upper: report.upper,
            verdict,
            strategy: report.strategy,
            certificate: report.certificate,
            elapsed_ms: report.elapsed_ms,
        }
    }

    /// `"3/PASS"` for exact cells, `"[0,6]/CONSISTENT"` for bounded ones.
    pub fn short(&self) -> String {
        match self.value {
            Some(v) => format!("{v}/{}", self.verdict),
            None => format!("[{},{}]/{}", self.lower, self.upper, self.verdict),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerdictTable {
    pub max_n: usize,
    pub cells: Vec<VerdictCell>,
}

impl VerdictTable {
    pub fn all_ok(&self) -> bool {
        self.cells.iter().all(|c| c.verdict != CellVerdict::Fail)
    }

    pub fn count(&self, verdict: CellVerdict) -> usize {
        self.cells.iter().filter(|c| c.verdict == verdict).count()
    }

    /// One row per `n`, one column per `(model, h)`; cells absent for a given
    /// `n` (h > 2n) are left blank.
    pub fn to_csv(&self) -> String {
        let mut models: Vec<DiagModel> = self.cells.iter().map(|c| c.model).collect();
        models.sort();
        models.dedup();
        let max_h = 2 * self.max_n;
        let mut out = String::from("n");
        for model in &models {
            for h in 0..=max_h {
                write!(out, ",{}_h{h}", model.as_str()).unwrap();
            }
        }
        out.push('\n');
        for n in 1..=self.max_n {
            write!(out, "{n}").unwrap();
            for &model in &models {
                for h in 0..=max_h {
                    let cell = self.cells.iter().find(|c| c.n == n && c.model == model && c.h == h);
                    out.push(',');
                    if let Some(cell) = cell {
                        out.push_str(&cell.short());
                    }
                }
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Random triples per bounded cell.
    pub trials: u64,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { trials: 100_000, seed: 0x5eed }
    }
}

/// Computes every `(n, model, h)` cell for `1 <= n <= max_n`, `0 <= h <= 2n`:
/// exactly for `n <= 2`, as witness bounds plus random probing above.
pub fn verify_paper_results(max_n: usize, models: &[DiagModel], opts: VerifyOptions) -> Result<VerdictTable> {
    if max_n == 0 {
        return Err(Error::invalid("max_n must be at least 1"));
    }
    let mut cells = Vec::new();
    for n in 1..=max_n {
        let graph = balanced_hypercube(n)?;
        let kind = TopologyKind::BalancedHypercube { n };
        for &model in models {
            for h in 0..=2 * n {
                let strategy = if n <= EXACT_MAX_N {
                    Strategy::Exhaustive
                } else {
                    Strategy::Sampled { trials: opts.trials, seed: opts.seed }
                };
                let report = edge_tolerable_diagnosability(&graph, h, model, strategy)?.with_topology(kind);
                let expected = expected_bh_value(n, h, model).expect("h within 0..=2n");
                cells.push(VerdictCell::from_report(n, expected, report));
            }
        }
    }
    Ok(VerdictTable { max_n, cells })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_values() {
        let pmc: Vec<_> = (0..=2).map(|h| expected_bh_value(1, h, DiagModel::Pmc).unwrap()).collect();
        assert_eq!(pmc, vec![1, 1, 0]);
        let mm: Vec<_> = (0..=2).map(|h| expected_bh_value(1, h, DiagModel::MmStar).unwrap()).collect();
        assert_eq!(mm, vec![0, 0, 0]);
        assert_eq!(expected_bh_value(3, 2, DiagModel::MmStar), Some(4));
        assert_eq!(expected_bh_value(2, 5, DiagModel::Pmc), None);
    }

    #[test]
    fn bh1_table_and_csv() {
        let table = verify_paper_results(1, &DiagModel::ALL, VerifyOptions::default()).unwrap();
        assert_eq!(table.cells.len(), 6);
        assert_eq!(table.count(CellVerdict::Pass), 6);
        assert_eq!(
            table.to_csv(),
            "n,pmc_h0,pmc_h1,pmc_h2,mm_star_h0,mm_star_h1,mm_star_h2\n\
             1,1/PASS,1/PASS,0/PASS,0/PASS,0/PASS,0/PASS\n"
        );
    }
}
