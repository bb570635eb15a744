//! Descriptive summaries and the nonparametric tests used to compare
//! optimizers: the two-sided Wilcoxon rank-sum test and the Friedman test.

use serde::{Deserialize, Serialize};

use crate::error::{invalid_argument, Result};
use crate::special::{chi_square_sf, normal_sf};

/// Significance level of the win/tie/loss verdicts.
pub const ALPHA: f64 = 0.05;

/// Largest combined sample size for which the exact rank-sum null
/// distribution is enumerated.
pub const EXACT_LIMIT: usize = 12;

/// Final best values of one algorithm on one problem, one per run.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    pub algorithm: String,
    pub problem: String,
    pub values: Vec<f64>,
}

impl SampleSet {
    pub fn new(
        algorithm: impl Into<String>,
        problem: impl Into<String>,
        values: Vec<f64>,
    ) -> Result<Self> {
        if values.is_empty() {
            return Err(invalid_argument("a sample set needs at least one value"));
        }
        Ok(Self {
            algorithm: algorithm.into(),
            problem: problem.into(),
            values,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub mean: f64,
    /// Sample standard deviation (`n - 1` denominator, zero for one value).
    pub std: f64,
    pub best: f64,
}

pub fn summarize(values: &[f64]) -> Result<Summary> {
    if values.is_empty() {
        return Err(invalid_argument("cannot summarize an empty sample"));
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let std = if values.len() > 1 {
        (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
    } else {
        0.0
    };
    let best = values.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(Summary { mean, std, best })
}

pub fn median(values: &[f64]) -> Result<f64> {
    if values.is_empty() {
        return Err(invalid_argument("median of an empty sample"));
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    Ok(if v.len() % 2 == 1 {
        v[m]
    } else {
        0.5 * (v[m - 1] + v[m])
    })
}

/// 1-based ranks, ties sharing the average of the ranks they span.
pub fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..values.len()).collect();
    idx.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && values[idx[j + 1]] == values[idx[i]] {
            j += 1;
        }
        let r = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            ranks[k] = r;
        }
        i = j + 1;
    }
    ranks
}

/// Outcome for the first sample against the second (minimization).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Win,
    Tie,
    Loss,
}

impl Verdict {
    pub fn symbol(self) -> char {
        match self {
            Verdict::Win => '+',
            Verdict::Tie => '=',
            Verdict::Loss => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestResult {
    /// Rank sum of the first sample.
    pub statistic: f64,
    pub p_value: f64,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankSumMethod {
    /// Exact when the samples are small and tie-free, normal otherwise.
    Auto,
    Exact,
    Normal,
}

/// Two-sided Wilcoxon rank-sum test of `x` against `y`.
///
/// Exact enumeration when `n_x + n_y <= 12` and there are no ties; otherwise
/// the normal approximation with tie and continuity corrections. The verdict
/// is a tie when `p >= 0.05`; otherwise the sample with the lower median (or
/// lower mean rank, if medians coincide) wins.
pub fn wilcoxon_rank_sum(x: &[f64], y: &[f64]) -> Result<TestResult> {
    wilcoxon_rank_sum_with(x, y, RankSumMethod::Auto)
}

pub fn wilcoxon_rank_sum_with(x: &[f64], y: &[f64], method: RankSumMethod) -> Result<TestResult> {
    if x.is_empty() || y.is_empty() {
        return Err(invalid_argument(
            "rank-sum test needs two non-empty samples",
        ));
    }
    let (nx, ny) = (x.len(), y.len());
    let n = nx + ny;
    let pooled: Vec<f64> = x.iter().chain(y).copied().collect();
    let ranks = average_ranks(&pooled);
    let w: f64 = ranks[..nx].iter().sum();

    let mut sorted = pooled.clone();
    sorted.sort_by(f64::total_cmp);
    let tie_groups = tie_group_sizes(&sorted);
    let has_ties = tie_groups.iter().any(|&t| t > 1);

    let exact = match method {
        RankSumMethod::Auto => n <= EXACT_LIMIT && !has_ties,
        RankSumMethod::Exact => {
            if has_ties {
                return Err(invalid_argument(
                    "exact rank-sum test requires tie-free samples",
                ));
            }
            true
        }
        RankSumMethod::Normal => false,
    };

    let p_value = if exact {
        exact_rank_sum_p(nx, ny, w.round() as usize)
    } else {
        let mean = nx as f64 * (n as f64 + 1.0) / 2.0;
        let tie_term: f64 = tie_groups
            .iter()
            .map(|&t| {
                let t = t as f64;
                t * t * t - t
            })
            .sum();
        let nf = n as f64;
        let var = nx as f64 * ny as f64 / 12.0 * ((nf + 1.0) - tie_term / (nf * (nf - 1.0)));
        if var <= 0.0 {
            1.0
        } else {
            let z = ((w - mean).abs() - 0.5).max(0.0) / var.sqrt();
            (2.0 * normal_sf(z)).min(1.0)
        }
    };

    let verdict = if p_value >= ALPHA {
        Verdict::Tie
    } else {
        let (mx, my) = (median(x)?, median(y)?);
        let lower = if mx != my {
            mx < my
        } else {
            w / (nx as f64) < (ranks[nx..].iter().sum::<f64>()) / (ny as f64)
        };
        if lower {
            Verdict::Win
        } else {
            Verdict::Loss
        }
    };

    Ok(TestResult {
        statistic: w,
        p_value,
        verdict,
    })
}

fn tie_group_sizes(sorted: &[f64]) -> Vec<usize> {
    let mut groups = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        groups.push(j - i + 1);
        i = j + 1;
    }
    groups
}

/// Two-sided exact p-value of rank sum `w` for `nx` draws out of ranks
/// `1..=nx+ny`, by counting subsets per rank sum.
fn exact_rank_sum_p(nx: usize, ny: usize, w: usize) -> f64 {
    let n = nx + ny;
    let max_sum = n * (n + 1) / 2;
    // counts[k][s]: subsets of size k with rank sum s
    let mut counts = vec![vec![0f64; max_sum + 1]; nx + 1];
    counts[0][0] = 1.0;
    for r in 1..=n {
        for k in (1..=nx.min(r)).rev() {
            for s in (r..=max_sum).rev() {
                counts[k][s] += counts[k - 1][s - r];
            }
        }
    }
    let dist = &counts[nx];
    let total: f64 = dist.iter().sum();
    let lower: f64 = dist[..=w.min(max_sum)].iter().sum();
    let upper: f64 = dist[w.min(max_sum)..].iter().sum();
    (2.0 * lower.min(upper) / total).min(1.0)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FriedmanResult {
    pub statistic: f64,
    pub p_value: f64,
    /// Mean within-problem rank per algorithm; lower is better.
    pub avg_ranks: Vec<f64>,
}

/// Friedman test over a `problems x algorithms` table of results.
pub fn friedman(results: &[Vec<f64>]) -> Result<FriedmanResult> {
    let n = results.len();
    if n < 2 {
        return Err(invalid_argument(
            "Friedman test needs at least two problems",
        ));
    }
    let k = results[0].len();
    if k < 2 {
        return Err(invalid_argument(
            "Friedman test needs at least two algorithms",
        ));
    }
    if results.iter().any(|row| row.len() != k) {
        return Err(invalid_argument(
            "Friedman table rows have different lengths",
        ));
    }
    let mut avg_ranks = vec![0.0; k];
    for row in results {
        for (acc, r) in avg_ranks.iter_mut().zip(average_ranks(row)) {
            *acc += r;
        }
    }
    avg_ranks.iter_mut().for_each(|r| *r /= n as f64);
    let (nf, kf) = (n as f64, k as f64);
    let centre = (kf + 1.0) / 2.0;
    let statistic =
        12.0 * nf / (kf * (kf + 1.0)) * avg_ranks.iter().map(|r| (r - centre).powi(2)).sum::<f64>();
    let p_value = chi_square_sf(statistic, kf - 1.0);
    Ok(FriedmanResult {
        statistic,
        p_value,
        avg_ranks,
    })
}

/// Counts of wins, ties and losses of a baseline across problems.
pub fn win_tie_loss<'a>(
    results: impl IntoIterator<Item = &'a TestResult>,
) -> (usize, usize, usize) {
    results
        .into_iter()
        .fold((0, 0, 0), |(w, t, l), r| match r.verdict {
            Verdict::Win => (w + 1, t, l),
            Verdict::Tie => (w, t + 1, l),
            Verdict::Loss => (w, t, l + 1),
        })
}
