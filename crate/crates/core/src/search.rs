//! Edge maximization over restricted families of triangle-free matchstick
//! graphs. Results are lower bounds for the true maximum, never upper bounds.

use std::collections::{BTreeSet, VecDeque};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::analysis::{bound_conjecture, bound_thm1_upper};
use crate::error::{Error, Result};
use crate::generators::{gen_triangle_free, triangle_free_variant, zonotope_directions};
use crate::geometry::{Point, Tolerance};
use crate::graph::{to_json, validate, Check, MatchstickGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Family {
    /// `n` cells of a `side x side` piece of the integer lattice.
    LatticeWindow { side: usize },
    /// All rhombic tilings of the regular `2k`-gon reachable by hexagon flips;
    /// `k` is determined by `n = C(k+1,2) + 1`.
    ZonotopeFlips,
    /// The triangle-free construction with the added direction moved inside
    /// its admissible gap, and mirrored.
    AugmentationVariants,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::LatticeWindow { .. } => "lattice_window",
            Family::ZonotopeFlips => "zonotope_flips",
            Family::AugmentationVariants => "augmentation_variants",
        }
    }

    /// Parses a family name; lattice windows get side `⌈√n⌉ + 2`.
    pub fn parse(name: &str, n: usize) -> Result<Family> {
        match name {
            "lattice_window" | "lattice-window" => Ok(Family::LatticeWindow { side: window_side(n) }),
            "zonotope_flips" | "zonotope-flips" => Ok(Family::ZonotopeFlips),
            "augmentation_variants" | "augmentation-variants" => Ok(Family::AugmentationVariants),
            other => Err(Error::InvalidParameter(format!("unknown family {other}"))),
        }
    }
}

pub fn window_side(n: usize) -> usize {
    (n as f64).sqrt().ceil() as usize + 2
}

fn serialize_graph<S: Serializer>(g: &MatchstickGraph, s: S) -> std::result::Result<S::Ok, S::Error> {
    let v: serde_json::Value = serde_json::from_str(&to_json(g)).expect("graph JSON is valid");
    v.serialize(s)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    pub family: Family,
    pub n: usize,
    pub best_e: usize,
    #[serde(serialize_with = "serialize_graph")]
    pub witness: MatchstickGraph,
    /// True iff the whole family was enumerated within the budget.
    pub exhaustive: bool,
    /// Search nodes (lattice window) or family members examined.
    pub nodes: u64,
}

fn tri_free_checks() -> BTreeSet<Check> {
    [
        Check::UnitLengths,
        Check::Noncrossing,
        Check::Simple,
        Check::TriangleFree,
    ]
    .into_iter()
    .collect()
}

fn is_triangle_free_matchstick(g: &MatchstickGraph) -> bool {
    validate(g, &Tolerance::default(), &tri_free_checks()).ok()
}

/// Best triangle-free graph on `n` vertices from `family`, using at most
/// `budget` search nodes. Running out of budget yields `BudgetExceeded`
/// carrying the best graph found so far.
pub fn max_edges_over_family(family: Family, n: usize, budget: u64) -> Result<SearchResult> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be >= 1".into()));
    }
    let result = match family {
        Family::LatticeWindow { side } => lattice_window(side, n, budget)?,
        Family::ZonotopeFlips => zonotope_flips(n, budget)?,
        Family::AugmentationVariants => augmentation_variants(n)?,
    };
    if !is_triangle_free_matchstick(&result.witness) || result.witness.n() != n || result.witness.e() != result.best_e {
        return Err(Error::InvariantViolated(format!(
            "{} witness for n = {n} is invalid",
            family.name()
        )));
    }
    if result.exhaustive {
        Ok(result)
    } else {
        Err(Error::BudgetExceeded {
            nodes: result.nodes,
            best: Box::new(result),
        })
    }
}

/// Like [`max_edges_over_family`] but returns a non-exhaustive result
/// instead of an error when the budget runs out.
pub fn best_effort(family: Family, n: usize, budget: u64) -> Result<SearchResult> {
    match max_edges_over_family(family, n, budget) {
        Err(Error::BudgetExceeded { best, .. }) => Ok(*best),
        other => other,
    }
}

struct Window {
    side: usize,
    n: usize,
    budget: u64,
    nodes: u64,
    chosen: Vec<bool>,
    best_e: Option<usize>,
    best: Vec<usize>,
    aborted: bool,
}

impl Window {
    /// Raster order; a cell links to its chosen left and upper neighbors.
    fn dfs(&mut self, cell: usize, picked: usize, edges: usize, row0_used: bool) {
        if self.aborted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        let remaining = self.n - picked;
        if remaining == 0 {
            // Translation normalization: the set touches the first column.
            let col0 = (0..self.side).any(|r| self.chosen[r * self.side]);
            if col0 && self.best_e.is_none_or(|b| edges > b) {
                self.best_e = Some(edges);
                self.best = (0..self.chosen.len()).filter(|&c| self.chosen[c]).collect();
            }
            return;
        }
        let cells = self.side * self.side;
        if cell == cells || cells - cell < remaining {
            return;
        }
        // Translation normalization: the set touches the first row.
        if cell == self.side && !row0_used {
            return;
        }
        if let Some(b) = self.best_e {
            if edges + 2 * remaining <= b {
                return;
            }
        }
        let (row, col) = (cell / self.side, cell % self.side);
        let gain =
            usize::from(col > 0 && self.chosen[cell - 1]) + usize::from(row > 0 && self.chosen[cell - self.side]);
        self.chosen[cell] = true;
        self.dfs(cell + 1, picked + 1, edges + gain, row0_used || row == 0);
        self.chosen[cell] = false;
        self.dfs(cell + 1, picked, edges, row0_used);
    }
}

fn lattice_window(side: usize, n: usize, budget: u64) -> Result<SearchResult> {
    if n > side * side {
        return Err(Error::NotRealizable {
            family: "lattice_window".into(),
            n,
        });
    }
    let mut w = Window {
        side,
        n,
        budget,
        nodes: 0,
        chosen: vec![false; side * side],
        best_e: None,
        best: Vec::new(),
        aborted: false,
    };
    // Incumbent: rows of width ⌈√n⌉ from the top-left corner, so a witness
    // exists even if the budget runs out at once.
    let width = (n as f64).sqrt().ceil() as usize;
    let block: Vec<usize> = (0..n).map(|i| (i / width) * side + i % width).collect();
    let block_e = block
        .iter()
        .map(|&c| {
            usize::from(c % side > 0 && block.contains(&(c - 1)))
                + usize::from(c >= side && block.contains(&(c - side)))
        })
        .sum();
    if width <= side {
        w.best_e = Some(block_e);
        w.best = block;
    }
    w.dfs(0, 0, 0, false);
    let cells = w.best;
    let index = |c: usize| cells.binary_search(&c).ok();
    let vertices = cells
        .iter()
        .map(|&c| Point::new((c % side) as f64, -((c / side) as f64)))
        .collect();
    let mut edges = Vec::new();
    for (i, &c) in cells.iter().enumerate() {
        if c % side + 1 < side {
            if let Some(j) = index(c + 1) {
                edges.push((i, j));
            }
        }
        if let Some(j) = index(c + side) {
            edges.push((i, j));
        }
    }
    let witness = MatchstickGraph::new(vertices, edges, None)?;
    Ok(SearchResult {
        family: Family::LatticeWindow { side },
        n,
        best_e: witness.e(),
        witness,
        exhaustive: !w.aborted,
        nodes: w.nodes,
    })
}

/// A rhombic tiling of the `2k`-gon as its set of vertex subsets.
type Tiling = BTreeSet<u32>;

fn interval_tiling(k: usize) -> Tiling {
    let mut t = BTreeSet::from([0u32]);
    for a in 0..k {
        for b in a + 1..=k {
            t.insert(((1u32 << b) - 1) & !((1u32 << a) - 1));
        }
    }
    t
}

/// Tilings one hexagon flip away from `t`.
fn flips(t: &Tiling, k: usize) -> Vec<Tiling> {
    let mut out = Vec::new();
    for &y in t {
        let nb: Vec<usize> = (0..k).filter(|&b| t.contains(&(y ^ (1 << b)))).collect();
        if nb.len() != 3 {
            continue;
        }
        let inside = |b: usize| y & (1 << b) != 0;
        let (a, b, c) = (nb[0], nb[1], nb[2]);
        let pattern = (inside(a), inside(b), inside(c));
        if pattern == (false, true, false) || pattern == (true, false, true) {
            let mut next = t.clone();
            next.remove(&y);
            next.insert(y ^ (1 << a) ^ (1 << b) ^ (1 << c));
            out.push(next);
        }
    }
    out
}

fn tiling_graph(t: &Tiling, k: usize) -> Result<MatchstickGraph> {
    let dirs = zonotope_directions(k);
    let center = dirs.iter().fold(Point::ORIGIN, |acc, &p| acc + p) * 0.5;
    let ids: Vec<u32> = t.iter().copied().collect();
    let vertices = ids
        .iter()
        .map(|&y| {
            (0..k)
                .filter(|&b| y & (1 << b) != 0)
                .fold(Point::ORIGIN, |acc, b| acc + dirs[b])
                - center
        })
        .collect();
    let mut edges = Vec::new();
    for (i, &y) in ids.iter().enumerate() {
        for b in 0..k {
            if y & (1 << b) == 0 {
                if let Ok(j) = ids.binary_search(&(y | (1 << b))) {
                    edges.push((i, j));
                }
            }
        }
    }
    MatchstickGraph::new(vertices, edges, None)
}

/// All tilings of the `2k`-gon reachable by flips, up to `budget` of them.
pub fn zonotope_tilings(k: usize, budget: u64) -> (Vec<Tiling>, bool) {
    let start = interval_tiling(k);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let mut order = Vec::new();
    while let Some(t) = queue.pop_front() {
        if order.len() as u64 >= budget {
            return (order, false);
        }
        for next in flips(&t, k) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        order.push(t);
    }
    (order, true)
}

fn zonotope_flips(n: usize, budget: u64) -> Result<SearchResult> {
    let k = (2..31).find(|k| k * (k + 1) / 2 + 1 == n).ok_or(Error::NotRealizable {
        family: "zonotope_flips".into(),
        n,
    })?;
    let (tilings, complete) = zonotope_tilings(k, budget.max(1));
    let mut best: Option<MatchstickGraph> = None;
    for t in &tilings {
        let g = tiling_graph(t, k)?;
        if is_triangle_free_matchstick(&g) && best.as_ref().is_none_or(|b| g.e() > b.e()) {
            best = Some(g);
        }
    }
    let witness = best.ok_or_else(|| Error::InvariantViolated("no valid tiling".into()))?;
    Ok(SearchResult {
        family: Family::ZonotopeFlips,
        n,
        best_e: witness.e(),
        witness,
        exhaustive: complete,
        nodes: tilings.len() as u64,
    })
}

fn augmentation_variants(n: usize) -> Result<SearchResult> {
    let mut best: Option<MatchstickGraph> = None;
    let mut count = 0;
    for frac in [0.25, 0.5, 0.75] {
        for mirror in [false, true] {
            let g = triangle_free_variant(n, frac, mirror)?.graph;
            count += 1;
            if is_triangle_free_matchstick(&g) && best.as_ref().is_none_or(|b| g.e() > b.e()) {
                best = Some(g);
            }
        }
    }
    let witness = best.ok_or_else(|| Error::InvariantViolated("no valid variant".into()))?;
    Ok(SearchResult {
        family: Family::AugmentationVariants,
        n,
        best_e: witness.e(),
        witness,
        exhaustive: true,
        nodes: count,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProbeStatus {
    /// Best known equals the conjectured value.
    Match,
    /// Best known is below it: a construction is missing edges.
    Below,
    /// Best known is above it: a counterexample to the conjecture.
    Above,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeRow {
    pub n: usize,
    pub best_known: usize,
    /// Where the best graph came from.
    pub source: String,
    pub conjecture: usize,
    pub thm1_upper: f64,
    pub status: ProbeStatus,
    pub lattice_best: Option<usize>,
    pub lattice_exhaustive: Option<bool>,
}

/// Best edge count over the construction and all families for every
/// `1 <= n <= n_max`. Fails hard if any result exceeds the upper bound.
pub fn conjecture_probe(n_max: usize, budget: u64) -> Result<Vec<ProbeRow>> {
    (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut candidates: Vec<(usize, String)> = vec![(gen_triangle_free(n)?.e(), "construction".into())];
            let mut lattice_best = None;
            let mut lattice_exhaustive = None;
            let side = window_side(n);
            match best_effort(Family::LatticeWindow { side }, n, budget) {
                Ok(r) => {
                    lattice_best = Some(r.best_e);
                    lattice_exhaustive = Some(r.exhaustive);
                    candidates.push((r.best_e, "lattice_window".into()));
                }
                Err(Error::NotRealizable { .. }) => {}
                Err(e) => return Err(e),
            }
            for fam in [Family::ZonotopeFlips, Family::AugmentationVariants] {
                match best_effort(fam, n, budget) {
                    Ok(r) => candidates.push((r.best_e, fam.name().into())),
                    Err(Error::NotRealizable { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
            // Highest count; earliest source on ties.
            let (best_known, source) = candidates
                .iter()
                .rev()
                .max_by_key(|(e, _)| *e)
                .cloned()
                .expect("construction always present");
            let upper = bound_thm1_upper(n);
            if best_known as f64 > upper {
                return Err(Error::InvariantViolated(format!(
                    "n = {n}: {best_known} edges exceed the upper bound {upper}"
                )));
            }
            let conjecture = bound_conjecture(n);
            Ok(ProbeRow {
                n,
                best_known,
                source,
                conjecture,
                thm1_upper: upper,
                status: match best_known.cmp(&conjecture) {
                    std::cmp::Ordering::Equal => ProbeStatus::Match,
                    std::cmp::Ordering::Less => ProbeStatus::Below,
                    std::cmp::Ordering::Greater => ProbeStatus::Above,
                },
                lattice_best,
                lattice_exhaustive,
            })
        })
        .collect()
}

/// Default node budget per family run.
pub const DEFAULT_BUDGET: u64 = 20_000_000;
