//! Face counting: the F statistic, the Euler-derived identities, maximal
//! rhombus chains, the chain inequalities, irregular edges and the closed-form
//! bounds on the maximum number of edges.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::faces::{classify_faces, dart_edge, enumerate_faces, twin, FaceClass, FaceDecomposition};
use crate::generators::triangle_free_target;
use crate::geometry::{Point, Tolerance};
use crate::graph::MatchstickGraph;

/// `F = Σ_{i≥5} (i − 4) f_i`, over all faces including the outer one.
pub fn big_f(fd: &FaceDecomposition) -> u64 {
    fd.f.iter()
        .filter(|(&len, _)| len >= 5)
        .map(|(&len, &cnt)| ((len - 4) * cnt) as u64)
        .sum()
}

/// Two sides of an integer identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

impl IdentityCheck {
    fn new(lhs: i64, rhs: i64) -> Self {
        IdentityCheck {
            lhs,
            rhs,
            holds: lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityChecks {
    /// `2e` against `Σ i f_i`.
    pub handshake: IdentityCheck,
    /// `n − e + Σ f_i` against `2`.
    pub euler: IdentityCheck,
    /// `2e` against `4n − 8 − F`; `None` when some face is shorter than 4.
    pub edge_formula: Option<IdentityCheck>,
}

impl IdentityChecks {
    pub fn all_hold(&self) -> bool {
        self.handshake.holds && self.euler.holds && self.edge_formula.is_none_or(|c| c.holds)
    }
}

pub fn identities_from_faces(g: &MatchstickGraph, fd: &FaceDecomposition) -> IdentityChecks {
    let n = g.n() as i64;
    let e = g.e() as i64;
    let weighted: i64 = fd.f.iter().map(|(&len, &cnt)| (len * cnt) as i64).sum();
    let faces: i64 = fd.f.values().map(|&c| c as i64).sum();
    let short = fd.f.keys().any(|&len| len < 4);
    IdentityChecks {
        handshake: IdentityCheck::new(2 * e, weighted),
        euler: IdentityCheck::new(n - e + faces, 2),
        edge_formula: (!short).then(|| IdentityCheck::new(2 * e, 4 * n - 8 - big_f(fd) as i64)),
    }
}

pub fn verify_identities(g: &MatchstickGraph, tol: &Tolerance) -> Result<IdentityChecks> {
    let fd = enumerate_faces(g, tol)?;
    Ok(identities_from_faces(g, &fd))
}

/// A maximal chain of rhombic faces glued along parallel sides ("rails").
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RhombusChain {
    /// Common rail vector `b_i − a_i`.
    pub direction: Point,
    pub rail_edges: Vec<usize>,
    /// `(a_i, b_i)` for every rail.
    pub rails: Vec<(usize, usize)>,
    /// Faces between consecutive rails.
    pub rhombi: Vec<usize>,
}

/// All maximal rhombus chains. Rhombic faces are those whose class is a
/// (fat or thin) rhombus; each lies in exactly two chains.
pub fn rhombus_chains(g: &MatchstickGraph, fd: &FaceDecomposition, classes: &[FaceClass]) -> Vec<RhombusChain> {
    let rhombic = |f: usize| classes[f].kind.is_rhombic();
    let mut pos = vec![0usize; fd.face_of_dart.len()];
    for cycle in &fd.faces {
        for (i, &d) in cycle.iter().enumerate() {
            pos[d] = i;
        }
    }
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut chains = Vec::new();

    // Walks from face `f` entering through position `pin`; returns the faces
    // visited and the exit rail darts.
    let walk = |seen: &mut BTreeSet<(usize, usize)>, mut f: usize, mut pin: usize| {
        let mut faces = Vec::new();
        let mut rails = Vec::new();
        loop {
            seen.insert((f, pin % 2));
            faces.push(f);
            let d = fd.faces[f][(pin + 2) % 4];
            rails.push(d);
            let t = twin(d);
            let next = fd.face_of_dart[t];
            if !rhombic(next) || seen.contains(&(next, pos[t] % 2)) {
                break;
            }
            f = next;
            pin = pos[t];
        }
        (faces, rails)
    };

    for f0 in 0..fd.face_count() {
        if !rhombic(f0) {
            continue;
        }
        for class in 0..2 {
            if seen.contains(&(f0, class)) {
                continue;
            }
            let (fwd_faces, fwd_rails) = walk(&mut seen, f0, class);
            let (back_faces, back_rails) = walk(&mut seen, f0, class + 2);
            let mut faces: Vec<usize> = back_faces[1..].iter().rev().copied().collect();
            faces.extend(fwd_faces);
            let mut rail_darts: Vec<usize> = back_rails.into_iter().rev().collect();
            rail_darts.extend(fwd_rails);
            let mut rail_edges: Vec<usize> = rail_darts.iter().map(|&d| dart_edge(d)).collect();
            if rail_edges.first() > rail_edges.last() {
                rail_edges.reverse();
                faces.reverse();
            }
            let (a0, b0) = g.edges()[rail_edges[0]];
            let direction = g.point(b0) - g.point(a0);
            let rails = rail_edges
                .iter()
                .map(|&e| {
                    let (i, j) = g.edges()[e];
                    if (g.point(j) - g.point(i)).dot(direction) > 0.0 {
                        (i, j)
                    } else {
                        (j, i)
                    }
                })
                .collect();
            chains.push(RhombusChain {
                direction,
                rail_edges,
                rails,
                rhombi: faces,
            });
        }
    }
    chains
}

/// Number of chains through every face (0 for non-rhombic faces).
pub fn chain_membership(chains: &[RhombusChain], face_count: usize) -> Vec<usize> {
    let mut count = vec![0; face_count];
    for c in chains {
        for &f in &c.rhombi {
            count[f] += 1;
        }
    }
    count
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OverlapWitness {
    pub chains: (usize, usize),
    pub shared_faces: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OverlapCheck {
    pub pass: bool,
    pub witnesses: Vec<OverlapWitness>,
}

/// Passes iff no two distinct chains share more than one face.
pub fn chain_overlap_check(chains: &[RhombusChain]) -> OverlapCheck {
    let mut by_face: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (ci, c) in chains.iter().enumerate() {
        for &f in &c.rhombi {
            by_face.entry(f).or_default().push(ci);
        }
    }
    let mut shared: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (&f, cs) in &by_face {
        for x in 0..cs.len() {
            for y in x + 1..cs.len() {
                let key = (cs[x].min(cs[y]), cs[x].max(cs[y]));
                shared.entry(key).or_default().push(f);
            }
        }
    }
    let witnesses: Vec<OverlapWitness> = shared
        .into_iter()
        .filter(|(_, fs)| fs.len() > 1)
        .map(|(chains, shared_faces)| OverlapWitness { chains, shared_faces })
        .collect();
    OverlapCheck {
        pass: witnesses.is_empty(),
        witnesses,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RhombusCountCheck {
    pub rhombic_faces: u64,
    pub c_choose_2: u64,
    pub holds: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainSumCheck {
    pub two_c: u64,
    /// `Σ_{i≥5} i f_i`
    pub long_face_darts: u64,
    pub five_f: u64,
    pub holds: bool,
    /// False when the outer face has boundary length at most 4, where the
    /// inequality is not expected to hold.
    pub in_hypothesis: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainInequalities {
    pub rhombus_count: RhombusCountCheck,
    pub chain_sum: ChainSumCheck,
}

pub fn rhombic_face_count(classes: &[FaceClass]) -> usize {
    classes.iter().filter(|c| c.kind.is_rhombic()).count()
}

pub fn chain_inequalities(fd: &FaceDecomposition, classes: &[FaceClass], chain_count: usize) -> ChainInequalities {
    let c = chain_count as u64;
    let f4 = rhombic_face_count(classes) as u64;
    let c2 = c * c.saturating_sub(1) / 2;
    let long: u64 =
        fd.f.iter()
            .filter(|(&l, _)| l >= 5)
            .map(|(&l, &k)| (l * k) as u64)
            .sum();
    let five_f = 5 * big_f(fd);
    ChainInequalities {
        rhombus_count: RhombusCountCheck {
            rhombic_faces: f4,
            c_choose_2: c2,
            holds: f4 <= c2,
        },
        chain_sum: ChainSumCheck {
            two_c: 2 * c,
            long_face_darts: long,
            five_f,
            holds: 2 * c <= long && long <= five_f,
            in_hypothesis: fd.boundary_length(fd.outer) >= 5,
        },
    }
}

/// Chain of quantities behind the irregular-edge estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IrregularChain {
    /// `2e − 4 f_4`, with `f_4` the rhombic face count.
    pub non_rhombic_darts: i64,
    pub e_star: usize,
    /// `2n − e*/10`
    pub bound: f64,
    /// `e* <= 2e − 4 f_4`
    pub darts_cover_irregular: bool,
    /// `e <= 2n − e*/10 + 1`
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IrregularEdges {
    /// `true` for regular edges (both sides are rhombic faces).
    pub regular: Vec<bool>,
    pub e_star: usize,
    pub chain: IrregularChain,
}

pub fn irregular_edge_count(g: &MatchstickGraph, fd: &FaceDecomposition, classes: &[FaceClass]) -> IrregularEdges {
    let regular: Vec<bool> = (0..g.e())
        .map(|e| {
            let (a, b) = fd.edge_faces(e);
            classes[a].kind.is_rhombic() && classes[b].kind.is_rhombic()
        })
        .collect();
    let e_star = regular.iter().filter(|&&r| !r).count();
    let non_rhombic_darts = 2 * g.e() as i64 - 4 * rhombic_face_count(classes) as i64;
    let bound = 2.0 * g.n() as f64 - e_star as f64 / 10.0;
    IrregularEdges {
        regular,
        e_star,
        chain: IrregularChain {
            non_rhombic_darts,
            e_star,
            bound,
            darts_cover_irregular: e_star as i64 <= non_rhombic_darts,
            holds: g.e() as f64 <= bound + 1.0,
        },
    }
}

/// `2n − (√2/5)·√n`
pub fn bound_thm1_upper(n: usize) -> f64 {
    let n = n as f64;
    2.0 * n - (2f64.sqrt() / 5.0) * n.sqrt()
}

/// `2n − √2·√n`, the lower bound without its constant term.
pub fn bound_thm1_lower(n: usize) -> f64 {
    let n = n as f64;
    2.0 * n - 2f64.sqrt() * n.sqrt()
}

/// `⌊2n − √(2n − 7/4) − 3/2⌋`
pub fn bound_conjecture(n: usize) -> usize {
    triangle_free_target(n)
}

/// Bounds for graphs inside a disk of radius `r`, with the tiny upper
/// coefficient gap carried as a base-10 logarithm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiskBounds {
    pub r: f64,
    /// `2 − 5/r`
    pub lower_coeff: f64,
    /// `log10(1 / (20 · 3^{16 r²}))`
    pub log10_eps2: f64,
    /// `100 r⁴ + 8 r²`
    pub additive: f64,
}

impl DiskBounds {
    pub fn lower_value(&self, n: usize) -> f64 {
        self.lower_coeff * n as f64
    }

    /// `(2 − ε₂) n + 100r⁴ + 8r²`; `ε₂` underflows to 0 for large `r`.
    pub fn upper_value(&self, n: usize) -> f64 {
        (2.0 - 10f64.powf(self.log10_eps2)) * n as f64 + self.additive
    }
}

pub fn bound_thm2(r: f64) -> Result<DiskBounds> {
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::NonpositiveRadius(r));
    }
    let r2 = r * r;
    Ok(DiskBounds {
        r,
        lower_coeff: 2.0 - 5.0 / r,
        log10_eps2: -(20f64.log10() + 16.0 * r2 * 3f64.log10()),
        additive: 100.0 * r2 * r2 + 8.0 * r2,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Inequalities {
    pub rhombus_count: RhombusCountCheck,
    pub chain_sum: ChainSumCheck,
    pub chain_overlap: bool,
    pub irregular: IrregularChain,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Bounds {
    pub thm1_upper: f64,
    pub thm1_lower: f64,
    pub conjecture: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disk: Option<DiskBounds>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub e: usize,
    pub f: BTreeMap<usize, usize>,
    pub rhombic_face_count: usize,
    #[serde(rename = "F")]
    pub big_f: u64,
    #[serde(rename = "C")]
    pub chain_count: usize,
    pub e_star: usize,
    pub identities: IdentityChecks,
    pub inequalities: Inequalities,
    pub bounds: Bounds,
    /// Isolated vertices removed before analysis.
    pub isolated_vertices_dropped: usize,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Full analysis of a graph. Isolated vertices are dropped first; what
/// remains must be connected. With `r`, rhombi are split into fat and thin
/// and the disk bounds are evaluated.
pub fn analyze(g: &MatchstickGraph, r: Option<f64>, tol: &Tolerance) -> Result<AnalysisReport> {
    let disk = r.map(bound_thm2).transpose()?;
    let (h, _) = g.without_isolated();
    // An edgeless graph keeps one vertex so that it still has a face.
    let h = if h.n() == 0 && g.n() > 0 { g.induced(&[0]) } else { h };
    let fd = enumerate_faces(&h, tol)?;
    let classes = classify_faces(&h, &fd, r, tol);
    let chains = rhombus_chains(&h, &fd, &classes);
    let ineq = chain_inequalities(&fd, &classes, chains.len());
    let irr = irregular_edge_count(&h, &fd, &classes);
    Ok(AnalysisReport {
        n: h.n(),
        e: h.e(),
        f: fd.f.clone(),
        rhombic_face_count: rhombic_face_count(&classes),
        big_f: big_f(&fd),
        chain_count: chains.len(),
        e_star: irr.e_star,
        identities: identities_from_faces(&h, &fd),
        inequalities: Inequalities {
            rhombus_count: ineq.rhombus_count,
            chain_sum: ineq.chain_sum,
            chain_overlap: chain_overlap_check(&chains).pass,
            irregular: irr.chain,
        },
        bounds: Bounds {
            thm1_upper: bound_thm1_upper(h.n()),
            thm1_lower: bound_thm1_lower(h.n()),
            conjecture: bound_conjecture(h.n()),
            disk,
        },
        isolated_vertices_dropped: g.n() - h.n(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_grid, gen_rhombus_strip, gen_zonotope};

    fn parts(g: &MatchstickGraph) -> (FaceDecomposition, Vec<FaceClass>) {
        let tol = Tolerance::default();
        let fd = enumerate_faces(g, &tol).unwrap();
        let cls = classify_faces(g, &fd, None, &tol);
        (fd, cls)
    }

    fn square() -> MatchstickGraph {
        gen_grid(2).unwrap()
    }

    #[test]
    fn big_f_examples() {
        assert_eq!(big_f(&parts(&square()).0), 0);
        let z = gen_zonotope(5).unwrap();
        let (fd, _) = parts(&z);
        assert_eq!(big_f(&fd), 6);
        assert_eq!(2 * z.e() as i64, 4 * z.n() as i64 - 8 - 6);
        let g = gen_grid(7).unwrap();
        let (fd, _) = parts(&g);
        assert_eq!(fd.boundary_length(fd.outer), 4 * 6);
        assert_eq!(big_f(&fd), 20);
    }

    #[test]
    fn identity_examples() {
        let tol = Tolerance::default();
        let z = verify_identities(&gen_zonotope(4).unwrap(), &tol).unwrap();
        assert_eq!(z.handshake, IdentityCheck::new(32, 32));
        assert_eq!(z.euler, IdentityCheck::new(2, 2));
        assert_eq!(z.edge_formula, Some(IdentityCheck::new(32, 32)));

        let edge = MatchstickGraph::new(vec![Point::ORIGIN, Point::new(1.0, 0.0)], vec![(0, 1)], None).unwrap();
        let c = verify_identities(&edge, &tol).unwrap();
        assert!(c.handshake.holds && c.euler.holds);
        assert_eq!(c.edge_formula, None);

        let c = verify_identities(&square(), &tol).unwrap();
        assert_eq!(c.handshake.lhs, 8);
        assert_eq!(c.edge_formula, Some(IdentityCheck::new(8, 8)));

        let two = MatchstickGraph::new(vec![Point::ORIGIN, Point::new(5.0, 0.0)], vec![], None).unwrap();
        assert_eq!(verify_identities(&two, &tol), Err(Error::Disconnected));
    }

    #[test]
    fn chain_examples() {
        let sq = square();
        let (fd, cls) = parts(&sq);
        let chains = rhombus_chains(&sq, &fd, &cls);
        assert_eq!(chains.len(), 2);
        assert!(chains.iter().all(|c| c.rhombi.len() == 1 && c.rail_edges.len() == 2));

        let g = gen_grid(3).unwrap();
        let (fd, cls) = parts(&g);
        let chains = rhombus_chains(&g, &fd, &cls);
        assert_eq!(chains.len(), 4);
        assert_eq!(rhombic_face_count(&cls), 4);

        let z = gen_zonotope(5).unwrap();
        let (fd, cls) = parts(&z);
        let chains = rhombus_chains(&z, &fd, &cls);
        assert_eq!(chains.len(), 5);
        assert!(chains.iter().all(|c| c.rhombi.len() == 4));
        assert!(chain_membership(&chains, fd.face_count())
            .iter()
            .enumerate()
            .all(|(f, &k)| k == if cls[f].kind.is_rhombic() { 2 } else { 0 }));
    }

    #[test]
    fn rails_realize_direction() {
        let tol = Tolerance::default();
        for g in [
            gen_zonotope(6).unwrap(),
            gen_grid(5).unwrap(),
            gen_rhombus_strip(4, 0.3, 0.7).unwrap(),
        ] {
            let (fd, cls) = parts(&g);
            for c in rhombus_chains(&g, &fd, &cls) {
                assert_eq!(c.rails.len(), c.rhombi.len() + 1);
                for &(a, b) in &c.rails {
                    let v = g.point(b) - g.point(a);
                    assert!((v - c.direction).norm() <= tol.geom_tol() * 10.0);
                }
                assert!(c.rail_edges.first() < c.rail_edges.last());
            }
        }
    }

    #[test]
    fn inequality_examples() {
        let z = gen_zonotope(5).unwrap();
        let (fd, cls) = parts(&z);
        let c = rhombus_chains(&z, &fd, &cls).len();
        let q = chain_inequalities(&fd, &cls, c);
        assert_eq!((q.rhombus_count.rhombic_faces, q.rhombus_count.c_choose_2), (10, 10));
        assert_eq!(
            (q.chain_sum.two_c, q.chain_sum.long_face_darts, q.chain_sum.five_f),
            (10, 10, 30)
        );
        assert!(q.rhombus_count.holds && q.chain_sum.holds && q.chain_sum.in_hypothesis);

        let g = gen_grid(7).unwrap();
        let (fd, cls) = parts(&g);
        let c = rhombus_chains(&g, &fd, &cls).len();
        assert_eq!(c, 12);
        let q = chain_inequalities(&fd, &cls, c);
        assert_eq!((q.rhombus_count.rhombic_faces, q.rhombus_count.c_choose_2), (36, 66));
        assert_eq!(
            (q.chain_sum.two_c, q.chain_sum.long_face_darts, q.chain_sum.five_f),
            (24, 24, 100)
        );

        let sq = square();
        let (fd, cls) = parts(&sq);
        let q = chain_inequalities(&fd, &cls, 2);
        assert_eq!(q.chain_sum.two_c, 4);
        assert_eq!(q.chain_sum.long_face_darts, 0);
        assert!(!q.chain_sum.holds);
        assert!(!q.chain_sum.in_hypothesis);
    }

    #[test]
    fn overlap_examples() {
        for g in [
            gen_grid(5).unwrap(),
            gen_zonotope(6).unwrap(),
            gen_rhombus_strip(4, 0.05, 0.0).unwrap(),
        ] {
            let (fd, cls) = parts(&g);
            assert!(chain_overlap_check(&rhombus_chains(&g, &fd, &cls)).pass);
        }
        // Hand-made chains sharing two faces are flagged.
        let fake = |faces: Vec<usize>| RhombusChain {
            direction: Point::new(1.0, 0.0),
            rail_edges: vec![],
            rails: vec![],
            rhombi: faces,
        };
        let chk = chain_overlap_check(&[fake(vec![1, 2, 3]), fake(vec![3, 2])]);
        assert!(!chk.pass);
        assert_eq!(chk.witnesses[0].shared_faces, vec![2, 3]);
    }

    #[test]
    fn irregular_examples() {
        let s = gen_rhombus_strip(3, 0.05, 0.0).unwrap();
        let (fd, cls) = parts(&s);
        let irr = irregular_edge_count(&s, &fd, &cls);
        assert_eq!(irr.e_star, 8);
        // interior rails a1b1 and a2b2
        let interior = [s.edge_id(2, 3).unwrap(), s.edge_id(4, 5).unwrap()];
        for e in 0..s.e() {
            assert_eq!(irr.regular[e], interior.contains(&e));
        }

        let (fd, cls) = parts(&square());
        assert_eq!(irregular_edge_count(&square(), &fd, &cls).e_star, 4);

        let z = gen_zonotope(5).unwrap();
        let (fd, cls) = parts(&z);
        let irr = irregular_edge_count(&z, &fd, &cls);
        assert_eq!(irr.e_star, 10);
        assert_eq!(irr.chain.non_rhombic_darts, 10);
        assert!(irr.chain.darts_cover_irregular && irr.chain.holds);
    }

    #[test]
    fn bound_examples() {
        assert!((bound_thm1_upper(49) - (98.0 - 2f64.sqrt() / 5.0 * 7.0)).abs() < 1e-12);
        assert!((bound_thm1_upper(49) - 96.0201).abs() < 1e-4);
        assert_eq!(bound_conjecture(49), 86);
        assert_eq!(bound_conjecture(16), 25);
        assert_eq!(bound_conjecture(4), 4);
        assert!((bound_thm1_upper(4) - 7.434).abs() < 1e-3);

        assert_eq!(bound_thm2(10.0).unwrap().lower_coeff, 1.5);
        let b = bound_thm2(1.0).unwrap();
        assert!((b.log10_eps2 + 8.934).abs() < 2e-3);
        assert_eq!(b.additive, 108.0);
        assert_eq!(bound_thm2(3.0).unwrap().additive, 8172.0);
        assert_eq!(bound_thm2(0.0), Err(Error::NonpositiveRadius(0.0)));
        // large radii stay finite
        let big = bound_thm2(50.0).unwrap();
        assert!(big.log10_eps2.is_finite() && big.upper_value(10).is_finite());
    }

    #[test]
    fn conjecture_below_upper_bound() {
        for n in 1..=1_000_000usize {
            assert!((bound_conjecture(n) as f64) <= bound_thm1_upper(n), "n = {n}");
        }
    }

    #[test]
    fn report_keys() {
        let rep = analyze(&gen_zonotope(5).unwrap(), Some(3.0), &Tolerance::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
        for k in [
            "n",
            "e",
            "f",
            "F",
            "C",
            "e_star",
            "identities",
            "inequalities",
            "bounds",
        ] {
            assert!(v.get(k).is_some(), "missing {k}");
        }
        assert_eq!(v["F"], 6);
        assert_eq!(v["C"], 5);
        assert!(rep.identities.all_hold());
    }
}
