//! Grid drivers for the structural checks on O-cubes, reported one cell per
//! line in TAP style.

use std::fmt;

use crate::error::Result;
use crate::exec::Exec;
use crate::factorization::{
    compare_families, grid_params, theorem_grid_with, CellOutcome, CubeComparison,
};
use crate::graph::{
    build_cube, cartesian_product, is_connected, is_isomorphism, layer_split, recognize_hypercube,
    recognize_star, Graph,
};
use crate::relations::coordinate_theta_suite_with;
use crate::words::{count_words, CubeParams};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    Skip(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellReport {
    pub name: String,
    pub status: Status,
}

impl CellReport {
    pub fn passed(&self) -> bool {
        !matches!(self.status, Status::Fail(_))
    }
}

impl fmt::Display for CellReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Pass => write!(f, "ok {}", self.name),
            Status::Fail(detail) => write!(f, "not ok {} {}", self.name, detail),
            Status::Skip(why) => write!(f, "ok {} # SKIP {}", self.name, why),
        }
    }
}

/// A TAP plan line followed by one line per cell, in cell order.
pub fn to_tap(reports: &[CellReport]) -> String {
    let mut out = format!("1..{}\n", reports.len());
    for r in reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Primality,
    Recognition,
    Layers,
    CutTheta,
    Families,
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "theorem14" => Ok(Suite::Primality),
            "lemma31" => Ok(Suite::Recognition),
            "lemma32" => Ok(Suite::Layers),
            "cor33" => Ok(Suite::CutTheta),
            "prop13" => Ok(Suite::Families),
            _ => Err(format!("unknown suite {s:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridBounds {
    pub p_max: usize,
    pub r_max: usize,
    pub n_max: usize,
    pub vertex_cap: usize,
}

impl Default for GridBounds {
    fn default() -> Self {
        GridBounds {
            p_max: 3,
            r_max: 3,
            n_max: 8,
            vertex_cap: 300,
        }
    }
}

pub fn run_suite(suite: Suite, bounds: GridBounds, exec: Exec) -> Vec<CellReport> {
    match suite {
        Suite::Primality => primality_suite(bounds, exec),
        Suite::Recognition => recognition_suite(bounds, exec),
        Suite::Layers => layers_suite(bounds, exec),
        Suite::CutTheta => cut_theta_suite(bounds, exec),
        Suite::Families => families_suite(bounds),
    }
}

fn cell_name(params: &CubeParams) -> String {
    format!("p={},r={},n={}", params.p, params.r, params.n)
}

/// Runs `check` on every grid cube within the vertex cap.
fn per_cube<F>(bounds: GridBounds, exec: Exec, check: F) -> Vec<CellReport>
where
    F: Fn(CubeParams, &Graph) -> Result<Option<String>> + Sync + Send,
{
    let cells = grid_params(bounds.p_max, bounds.r_max, bounds.n_max);
    exec.map_slice(&cells, |&params| {
        let name = cell_name(&params);
        let vertices = count_words(params);
        if vertices > bounds.vertex_cap as u128 {
            return CellReport {
                name,
                status: Status::Skip(format!("{vertices} vertices over cap")),
            };
        }
        let g = build_cube(params);
        let status = match check(params, &g) {
            Ok(None) => Status::Pass,
            Ok(Some(problem)) => Status::Fail(problem),
            Err(e) => Status::Fail(e.to_string()),
        };
        CellReport { name, status }
    })
}

pub fn primality_suite(bounds: GridBounds, exec: Exec) -> Vec<CellReport> {
    theorem_grid_with(
        bounds.p_max,
        bounds.r_max,
        bounds.n_max,
        bounds.vertex_cap,
        exec,
    )
    .into_iter()
    .map(|cell| {
        let name = cell_name(&cell.params);
        let status = match &cell.outcome {
            CellOutcome::Skipped => Status::Skip(format!("{} vertices over cap", cell.vertices)),
            CellOutcome::Failed(e) => Status::Fail(e.to_string()),
            CellOutcome::Evaluated {
                expected_prime,
                prime,
                factor_problem,
            } => {
                if expected_prime != prime {
                    Status::Fail(format!("prime={prime} expected={expected_prime}"))
                } else if let Some(problem) = factor_problem {
                    Status::Fail(problem.clone())
                } else {
                    Status::Pass
                }
            }
        };
        CellReport { name, status }
    })
    .collect()
}

/// Whether the O-cube of `(p, r, n)` falls in the star range
/// `(r = 1 ∧ n ≤ p+1) ∨ (r ≥ 2 ∧ n ≤ p)`.
pub fn in_star_range(p: usize, r: usize, n: usize) -> bool {
    (r == 1 && n <= p + 1) || (r >= 2 && n <= p)
}

/// Hypercube recognition must hold exactly when `n ≤ r` on the `p = 1`
/// cubes, and star recognition exactly on the star range.
pub fn recognition_suite(bounds: GridBounds, exec: Exec) -> Vec<CellReport> {
    per_cube(bounds, exec, |params, g| {
        let CubeParams { p, r, n, .. } = params;
        let hypercube = recognize_hypercube(g);
        let star = recognize_star(g);
        let mut problems = Vec::new();
        if p == 1 && (hypercube == Some(n)) != (n <= r) {
            problems.push(format!("hypercube={hypercube:?}"));
        }
        if p == 1 && n <= r && hypercube != Some(n) {
            problems.push(format!("expected Q{n}"));
        }
        if (star == Some(n)) != in_star_range(p, r, n) || star.is_some_and(|k| k != n) {
            problems.push(format!("star={star:?}"));
        }
        Ok((!problems.is_empty()).then(|| problems.join("; ")))
    })
}

/// The layer checks for one coordinate: `V⁰ ≅ V¹` through `flip(·, i)`, both
/// sides connected, and `V⁰ ⊎ V¹ ≅ V⁰ □ K₂`. Returns a description of the
/// first failure.
pub fn check_layers(g: &Graph, i: usize) -> Result<Option<String>> {
    let split = layer_split(g, i)?;
    let labels = g.labels().expect("layer_split requires labels");
    let g0 = g.induced_subgraph(&split.v0);
    let g1 = g.induced_subgraph(&split.v1);

    // flip(·, i) as a map from V0 positions to V1 positions
    let mut flip_map = Vec::with_capacity(split.v0.len());
    for &v in &split.v0 {
        let image = labels[v].flip(i)?;
        match g
            .vertex_of(&image)
            .and_then(|x| split.v1.binary_search(&x).ok())
        {
            Some(k) => flip_map.push(k),
            None => return Ok(Some(format!("i={i}: flip of {} leaves V1", labels[v]))),
        }
    }
    if !is_isomorphism(&g0, &g1, &flip_map) {
        return Ok(Some(format!("i={i}: flip is not an isomorphism V0 -> V1")));
    }
    if !is_connected(&g0) || !is_connected(&g1) {
        return Ok(Some(format!("i={i}: layer not connected")));
    }

    let mut both = split.v0.clone();
    both.extend_from_slice(&split.v1);
    let union = g.induced_subgraph(&both);
    let prism = cartesian_product(&g0, &Graph::complete(2)).graph;
    let union_labels = union.labels().expect("induced subgraph keeps labels");
    let map: Vec<usize> = union_labels
        .iter()
        .map(|w| {
            let bit = usize::from(w.get(i).unwrap_or(false));
            let low = if bit == 1 { w.flip(i).unwrap() } else { *w };
            let pos = g0.vertex_of(&low).unwrap_or(usize::MAX);
            pos.saturating_mul(2).saturating_add(bit)
        })
        .collect();
    if !is_isomorphism(&union, &prism, &map) {
        return Ok(Some(format!("i={i}: V0 + V1 is not V0 x K2")));
    }
    Ok(None)
}

pub fn layers_suite(bounds: GridBounds, exec: Exec) -> Vec<CellReport> {
    per_cube(bounds, exec, |params, g| {
        for i in 1..=params.n {
            if let Some(problem) = check_layers(g, i)? {
                return Ok(Some(problem));
            }
        }
        Ok(None)
    })
}

pub fn cut_theta_suite(bounds: GridBounds, exec: Exec) -> Vec<CellReport> {
    per_cube(bounds, exec, |_, g| {
        let violations = coordinate_theta_suite_with(g, Exec::Sequential)?;
        Ok(violations
            .first()
            .map(|v| format!("{} violations, first {v}", violations.len())))
    })
}

/// One cell per `(p, r)` with `p ≤ p_max`, `r ≤ r_max`, comparing O- and
/// I-cubes for every `n ≤ n_max`.
pub fn families_suite(bounds: GridBounds) -> Vec<CellReport> {
    let mut reports = Vec::new();
    for p in 1..=bounds.p_max {
        for r in 1..=bounds.r_max {
            let name = format!("p={p},r={r}");
            let status = match compare_families(p, r, bounds.n_max) {
                Err(e) => Status::Fail(e.to_string()),
                Ok(c) if c.holds() => Status::Pass,
                Ok(c) => {
                    let first = c
                        .rows
                        .iter()
                        .find(|row| row.comparison != CubeComparison::SameWords);
                    Status::Fail(match first {
                        Some(row) if p == 1 || r == 1 => format!("word sets differ at n={}", row.n),
                        _ => format!("no non-isomorphic length up to n={}", bounds.n_max),
                    })
                }
            };
            reports.push(CellReport { name, status });
        }
    }
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Word;

    fn small() -> GridBounds {
        GridBounds {
            p_max: 3,
            r_max: 3,
            n_max: 6,
            vertex_cap: 100,
        }
    }

    #[test]
    fn all_suites_pass_on_a_small_grid() {
        for suite in [
            Suite::Primality,
            Suite::Recognition,
            Suite::Layers,
            Suite::CutTheta,
            Suite::Families,
        ] {
            let reports = run_suite(suite, small(), Exec::default());
            assert!(!reports.is_empty());
            for r in &reports {
                assert!(r.passed(), "{suite:?}: {r}");
            }
        }
    }

    #[test]
    fn tap_format() {
        let reports = vec![
            CellReport {
                name: "p=1,r=1,n=1".into(),
                status: Status::Pass,
            },
            CellReport {
                name: "p=1,r=1,n=2".into(),
                status: Status::Fail("prime=false expected=true".into()),
            },
            CellReport {
                name: "p=1,r=9,n=9".into(),
                status: Status::Skip("512 vertices over cap".into()),
            },
        ];
        assert_eq!(
            to_tap(&reports),
            "1..3\nok p=1,r=1,n=1\nnot ok p=1,r=1,n=2 prime=false expected=true\nok p=1,r=9,n=9 # SKIP 512 vertices over cap\n"
        );
    }

    #[test]
    fn layer_check_catches_a_non_cube() {
        // path 000-001-011-111 labeled as a subgraph of Q3, not induced on a cube family
        let words: Vec<Word> = ["000", "001", "011", "111"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)])
            .unwrap()
            .with_labels(words)
            .unwrap();
        assert_eq!(check_layers(&g, 3).unwrap(), None);
        // two disjoint E_1 edges whose V0 side is disconnected
        let words: Vec<Word> = ["000", "011", "100", "111"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let g = Graph::from_edges(4, [(0, 2), (1, 3)])
            .unwrap()
            .with_labels(words)
            .unwrap();
        assert!(check_layers(&g, 1)
            .unwrap()
            .unwrap()
            .contains("not connected"));
    }

    #[test]
    fn suite_names_parse() {
        assert_eq!("cor33".parse::<Suite>(), Ok(Suite::CutTheta));
        assert!("lemma99".parse::<Suite>().is_err());
    }

    #[test]
    fn star_range() {
        assert!(in_star_range(2, 1, 3));
        assert!(!in_star_range(2, 2, 3));
        assert!(in_star_range(3, 2, 3));
    }
}
