//! Explicit small graphs, checked against the symbolic pipeline by brute force.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
#[allow(unused_imports)]
use num_traits::Float;

use crate::arrays::IntersectionArray;
use crate::kneser::{equal_classes, kneser_spectrum};
use crate::linalg::{jacobi, Eigensystem, Matrix};
use crate::{Analysis, Error, Tolerance};

/// Largest graph the oracle agrees to build.
pub const MAX_VERTICES: usize = 5000;
/// Eigenvalues closer than this are taken to belong to one eigenspace.
pub const GROUPING_TOL: f64 = 1e-7;
/// Largest admissible discrepancy between the oracle and the symbolic pipeline.
pub const ORACLE_TOL: f64 = 1e-6;

/// A simple undirected graph.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseGraph {
    pub name: String,
    adjacency: Vec<Vec<usize>>,
}

impl DenseGraph {
    /// Builds from an edge list; rejects loops and out-of-range endpoints.
    pub fn from_edges(name: impl Into<String>, n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let name = name.into();
        if n > MAX_VERTICES {
            return Err(Error::Graph(format!("{name}: {n} vertices exceeds the limit of {MAX_VERTICES}")));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::Graph(format!("{name}: bad edge ({u},{v})")));
            }
            if !adjacency[u].contains(&v) {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(DenseGraph { name, adjacency })
    }

    fn from_rule(name: impl Into<String>, n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Result<Self, Error> {
        let name = name.into();
        if n > MAX_VERTICES {
            return Err(Error::Graph(format!("{name}: {n} vertices exceeds the limit of {MAX_VERTICES}")));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Self::from_edges(name, n, &edges)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn adjacency_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.n());
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list {
                m.set(u, v, 1.0);
            }
        }
        m
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn subsets(n: usize, k: usize) -> Vec<u32> {
    (0u32..1 << n).filter(|s| s.count_ones() as usize == k).collect()
}

fn check_size(name: &str, n: usize) -> Result<(), Error> {
    if n > MAX_VERTICES {
        return Err(Error::Graph(format!("{name}: {n} vertices exceeds the limit of {MAX_VERTICES}")));
    }
    Ok(())
}

pub fn cycle(n: usize) -> Result<DenseGraph, Error> {
    if n < 3 {
        return Err(Error::Graph(format!("cycle({n}) needs at least 3 vertices")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    DenseGraph::from_edges(format!("cycle({n})"), n, &edges)
}

pub fn path(n: usize) -> Result<DenseGraph, Error> {
    if n < 2 {
        return Err(Error::Graph(format!("path({n}) needs at least 2 vertices")));
    }
    let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    DenseGraph::from_edges(format!("path({n})"), n, &edges)
}

pub fn complete(n: usize) -> Result<DenseGraph, Error> {
    if n < 2 {
        return Err(Error::Graph(format!("complete({n}) needs at least 2 vertices")));
    }
    DenseGraph::from_rule(format!("complete({n})"), n, |_, _| true)
}

pub fn hypercube(m: usize) -> Result<DenseGraph, Error> {
    if m == 0 || m > 5 {
        return Err(Error::Graph(format!("hypercube({m}) is supported for 1 <= m <= 5")));
    }
    DenseGraph::from_rule(format!("hypercube({m})"), 1 << m, |u, v| (u ^ v).count_ones() == 1)
}

/// `k`-subsets of an `n`-set, adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<DenseGraph, Error> {
    let name = format!("kneser({n},{k})");
    if k == 0 || n < 2 * k + 1 || n > 20 {
        return Err(Error::Graph(format!("{name} needs 1 <= k and 2k < n <= 20")));
    }
    check_size(&name, binomial(n, k))?;
    let sets = subsets(n, k);
    DenseGraph::from_rule(name, sets.len(), |u, v| sets[u] & sets[v] == 0)
}

/// `k`-subsets of an `m`-set, adjacent when they share `k - 1` points.
pub fn johnson(m: usize, k: usize) -> Result<DenseGraph, Error> {
    let name = format!("johnson({m},{k})");
    if k == 0 || k >= m || m > 20 {
        return Err(Error::Graph(format!("{name} needs 1 <= k < m <= 20")));
    }
    check_size(&name, binomial(m, k))?;
    let sets = subsets(m, k);
    DenseGraph::from_rule(name, sets.len(), |u, v| (sets[u] & sets[v]).count_ones() as usize == k - 1)
}

/// Words of length `m` over `q` symbols, adjacent when they differ in one coordinate.
pub fn hamming(m: usize, q: usize) -> Result<DenseGraph, Error> {
    let name = format!("hamming({m},{q})");
    if m == 0 || q < 2 {
        return Err(Error::Graph(format!("{name} needs m >= 1 and q >= 2")));
    }
    let n = (0..m).try_fold(1usize, |acc, _| acc.checked_mul(q)).unwrap_or(usize::MAX);
    check_size(&name, n)?;
    let digits = |mut x: usize| {
        let mut out = vec![0; m];
        for d in out.iter_mut() {
            *d = x % q;
            x /= q;
        }
        out
    };
    DenseGraph::from_rule(name, n, |u, v| {
        let (a, b) = (digits(u), digits(v));
        a.iter().zip(&b).filter(|(x, y)| x != y).count() == 1
    })
}

/// Incidence graph of the Fano plane.
pub fn heawood() -> Result<DenseGraph, Error> {
    let mut edges = Vec::new();
    for line in 0..7 {
        for shift in [0, 1, 3] {
            edges.push(((line + shift) % 7, 7 + line));
        }
    }
    DenseGraph::from_edges("heawood", 14, &edges)
}

/// Six orbits of 17 vertices: four 17-gons with steps 1, 2, 4, 8 and two hub orbits.
pub fn biggs_smith() -> Result<DenseGraph, Error> {
    let v = |orbit: usize, i: usize| orbit * 17 + i % 17;
    let mut edges = Vec::new();
    for (orbit, step) in [(0, 1), (1, 2), (2, 4), (3, 8)] {
        let hub = if orbit % 2 == 0 { 4 } else { 5 };
        for i in 0..17 {
            edges.push((v(orbit, i), v(orbit, i + step)));
            edges.push((v(orbit, i), v(hub, i)));
        }
    }
    for i in 0..17 {
        edges.push((v(4, i), v(5, i)));
    }
    DenseGraph::from_edges("biggs-smith", 102, &edges)
}

fn parse_args(name: &str, args: &str) -> Result<Vec<usize>, Error> {
    args.split(',')
        .map(|a| a.trim().parse::<usize>().map_err(|_| Error::UnknownName(name.to_string())))
        .collect()
}

/// Builds a graph from a name such as `petersen`, `cycle(7)`, `hamming(2,3)`.
pub fn build_graph(name: &str) -> Result<DenseGraph, Error> {
    let key = name.trim().to_ascii_lowercase();
    match key.as_str() {
        "petersen" => return kneser(5, 2).map(|g| rename(g, "petersen")),
        "odd-4" | "o4" => return kneser(7, 3).map(|g| rename(g, "odd-4")),
        "heawood" => return heawood(),
        "biggs-smith" => return biggs_smith(),
        _ => {}
    }
    let (head, args) = key
        .strip_suffix(')')
        .and_then(|s| s.split_once('('))
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    let a = parse_args(name, args)?;
    match (head, a.as_slice()) {
        ("cycle", [n]) => cycle(*n),
        ("path", [n]) => path(*n),
        ("complete", [n]) => complete(*n),
        ("hypercube", [m]) => hypercube(*m),
        ("kneser", [n, k]) => kneser(*n, *k),
        ("odd", [m]) if *m >= 2 => kneser(2 * m - 1, m - 1),
        ("johnson", [m, k]) => johnson(*m, *k),
        ("hamming", [m, q]) => hamming(*m, *q),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

fn rename(mut g: DenseGraph, name: &str) -> DenseGraph {
    g.name = name.to_string();
    g
}

/// All-pairs distances by breadth-first search.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrices {
    pub diameter: usize,
    n: usize,
    dist: Vec<usize>,
}

impl DistanceMatrices {
    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }

    /// `A_i` as a dense matrix.
    pub fn matrix(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if self.distance(u, v) == i {
                    m.set(u, v, 1.0);
                }
            }
        }
        m
    }

    /// `x^T A_i y` for columns of `vectors`.
    fn bilinear(&self, i: usize, vectors: &Matrix, x: usize, y: usize) -> f64 {
        let mut total = 0.0;
        for u in 0..self.n {
            let xu = vectors.get(u, x);
            let mut row = 0.0;
            for v in 0..self.n {
                if self.distance(u, v) == i {
                    row += vectors.get(v, y);
                }
            }
            total += xu * row;
        }
        total
    }
}

pub fn distance_matrices(g: &DenseGraph) -> Result<DistanceMatrices, Error> {
    let n = g.n();
    let mut dist = vec![usize::MAX; n * n];
    let mut diameter = 0;
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if row[w] == usize::MAX {
                    row[w] = row[u] + 1;
                    diameter = diameter.max(row[w]);
                    queue.push_back(w);
                }
            }
        }
        if row.contains(&usize::MAX) {
            return Err(Error::Graph(format!("{} is disconnected", g.name)));
        }
    }
    Ok(DistanceMatrices { diameter, n, dist })
}

/// Two vertex pairs at the same distance with different counts.
#[derive(Debug, Clone, PartialEq)]
pub struct IrregularityWitness {
    /// `'b'` for neighbours one step further, `'c'` one step closer.
    pub side: char,
    pub distance: usize,
    pub first: (usize, usize, usize),
    pub second: (usize, usize, usize),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Extraction {
    DistanceRegular(IntersectionArray),
    NotDistanceRegular(IrregularityWitness),
}

/// Reads off `b_i`, `c_i` and checks they do not depend on the pair of vertices.
pub fn extract_intersection_array(g: &DenseGraph, dm: &DistanceMatrices) -> Result<Extraction, Error> {
    let d = dm.diameter;
    if d == 0 {
        return Err(Error::Graph(format!("{} has a single vertex", g.name)));
    }
    let mut b: Vec<Option<(usize, (usize, usize))>> = vec![None; d + 1];
    let mut c: Vec<Option<(usize, (usize, usize))>> = vec![None; d + 1];
    for u in 0..g.n() {
        for w in 0..g.n() {
            let i = dm.distance(u, w);
            let (mut further, mut closer) = (0, 0);
            for &x in g.neighbors(w) {
                let j = dm.distance(u, x);
                if j == i + 1 {
                    further += 1;
                } else if j + 1 == i {
                    closer += 1;
                }
            }
            for (side, slot, count) in [('b', &mut b[i], further), ('c', &mut c[i], closer)] {
                match slot {
                    None => *slot = Some((count, (u, w))),
                    Some((seen, (u0, w0))) if *seen != count => {
                        return Ok(Extraction::NotDistanceRegular(IrregularityWitness {
                            side,
                            distance: i,
                            first: (*u0, *w0, *seen),
                            second: (u, w, count),
                        }));
                    }
                    _ => {}
                }
            }
        }
    }
    let bs: Vec<i64> = (0..d).map(|i| b[i].expect("every distance occurs").0 as i64).collect();
    let cs: Vec<i64> = (1..=d).map(|i| c[i].expect("every distance occurs").0 as i64).collect();
    Ok(Extraction::DistanceRegular(IntersectionArray::from_ints(&bs, &cs)?))
}

/// One eigenspace of `A` with the eigenvalue of `A_j` on it.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenGroup {
    pub theta: f64,
    pub multiplicity: usize,
    /// Eigenvalue of `A_j` on the eigenspace (its Rayleigh quotient averaged over a basis).
    pub value: f64,
}

/// Eigenspaces of `A`: eigenvalues grouped at `GROUPING_TOL`, refusing near-ambiguous gaps.
pub fn eigenspaces(sys: &Eigensystem) -> Result<Vec<(usize, usize)>, Error> {
    let mut groups = Vec::new();
    let mut start = 0;
    let values = &sys.values;
    for i in 1..=values.len() {
        if i == values.len() || values[i - 1] - values[i] > GROUPING_TOL {
            if i < values.len() && values[i - 1] - values[i] < 10.0 * GROUPING_TOL {
                return Err(Error::Graph(format!(
                    "eigenvalues {} and {} are too close to group unambiguously",
                    values[i - 1],
                    values[i]
                )));
            }
            groups.push((start, i));
            start = i;
        }
    }
    Ok(groups)
}

/// Column `j` of `P` read off the graph: the eigenvalue of `A_j` on each eigenspace of `A`.
pub fn empirical_p_column(
    sys: &Eigensystem,
    dm: &DistanceMatrices,
    j: usize,
) -> Result<Vec<EigenGroup>, Error> {
    let groups = eigenspaces(sys)?;
    Ok(groups
        .iter()
        .map(|&(s, e)| {
            let value = (s..e).map(|x| dm.bilinear(j, &sys.vectors, x, x)).sum::<f64>() / (e - s) as f64;
            let theta = sys.values[s..e].iter().sum::<f64>() / (e - s) as f64;
            EigenGroup { theta, multiplicity: e - s, value }
        })
        .collect())
}

/// Outcome of comparing a graph against the pipeline run on its own array.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub graph: String,
    pub array: IntersectionArray,
    pub n: usize,
    /// `max |P_empirical - P_symbolic|` over all entries.
    pub max_discrepancy: f64,
    /// Eigenvalues and multiplicities agree as multisets.
    pub spectrum_matches: bool,
    /// Equal classes of column `d` agree.
    pub classes_match: bool,
    pub passed: bool,
}

/// Extracts the array, runs the symbolic pipeline and compares every column of `P`.
pub fn verify_against_array(g: &DenseGraph, tol: &Tolerance) -> Result<OracleReport, Error> {
    let dm = distance_matrices(g)?;
    let array = match extract_intersection_array(g, &dm)? {
        Extraction::DistanceRegular(a) => a,
        Extraction::NotDistanceRegular(w) => {
            return Err(Error::Graph(format!(
                "{} is not distance-regular: {} counts {} at ({},{}) and {} at ({},{}) for distance {}",
                g.name, w.side, w.first.2, w.first.0, w.first.1, w.second.2, w.second.0, w.second.1, w.distance
            )));
        }
    };
    let an = Analysis::new(array.clone(), *tol)?;
    let d = an.diameter();
    let sys = jacobi(&g.adjacency_matrix())?;
    let groups = eigenspaces(&sys)?;
    let spectrum_matches = groups.len() == d + 1
        && groups.iter().enumerate().all(|(i, &(s, e))| {
            let theta = sys.values[s..e].iter().sum::<f64>() / (e - s) as f64;
            (theta - an.theta(i)).abs() <= ORACLE_TOL && ((e - s) as f64 - an.m(i)).abs() <= ORACLE_TOL
        });
    let mut max_discrepancy = 0.0f64;
    let mut empirical_d = Vec::new();
    if spectrum_matches {
        for j in 0..=d {
            let column = empirical_p_column(&sys, &dm, j)?;
            for (i, grp) in column.iter().enumerate() {
                max_discrepancy = max_discrepancy.max((grp.value - an.p.get(i, j)).abs());
            }
            if j == d {
                empirical_d = column.iter().map(|grp| grp.value).collect();
            }
        }
    } else {
        max_discrepancy = f64::INFINITY;
    }
    let classes_match = spectrum_matches && {
        let loose = Tolerance { rel: ORACLE_TOL, abs: ORACLE_TOL };
        let empirical: Vec<Vec<usize>> = equal_classes(&empirical_d, &loose).into_iter().map(|c| c.members).collect();
        let report = kneser_spectrum(&an, false)?;
        let symbolic: Vec<Vec<usize>> = report.equal_classes.into_iter().map(|c| c.members).collect();
        empirical == symbolic
    };
    let passed = spectrum_matches && classes_match && max_discrepancy <= ORACLE_TOL;
    Ok(OracleReport { graph: g.name.clone(), array, n: g.n(), max_discrepancy, spectrum_matches, classes_match, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn array_of(name: &str) -> Extraction {
        let g = build_graph(name).unwrap();
        let dm = distance_matrices(&g).unwrap();
        extract_intersection_array(&g, &dm).unwrap()
    }

    #[test]
    fn petersen_basics() {
        let g = build_graph("petersen").unwrap();
        assert_eq!(g.n(), 10);
        assert!((0..10).all(|v| g.degree(v) == 3));
        assert_eq!(array_of("petersen"), Extraction::DistanceRegular(IntersectionArray::parse("{3,2;1,1}").unwrap()));
    }

    #[test]
    fn path_is_not_distance_regular() {
        assert!(matches!(array_of("path(3)"), Extraction::NotDistanceRegular(_)));
    }

    #[test]
    fn known_arrays() {
        for (name, text) in [
            ("heawood", "{3,2,2;1,1,3}"),
            ("hypercube(4)", "{4,3,2,1;1,2,3,4}"),
            ("odd-4", "{4,3,3;1,1,2}"),
            ("biggs-smith", "{3,2,2,2,1,1,1;1,1,1,1,1,1,3}"),
        ] {
            assert_eq!(array_of(name), Extraction::DistanceRegular(IntersectionArray::parse(text).unwrap()), "{name}");
        }
    }

    #[test]
    fn distance_partition() {
        let g = build_graph("heawood").unwrap();
        let dm = distance_matrices(&g).unwrap();
        assert_eq!(dm.diameter, 3);
        let mut sum = Matrix::zeros(14);
        for i in 0..=3 {
            let a = dm.matrix(i);
            for u in 0..14 {
                for v in 0..14 {
                    sum.set(u, v, sum.get(u, v) + a.get(u, v));
                }
            }
        }
        assert!((0..14).all(|u| (0..14).all(|v| sum.get(u, v) == 1.0)));
        assert_eq!(dm.matrix(0), Matrix::identity(14));
    }

    #[test]
    fn petersen_second_column() {
        let g = build_graph("petersen").unwrap();
        let dm = distance_matrices(&g).unwrap();
        let sys = jacobi(&g.adjacency_matrix()).unwrap();
        let col = empirical_p_column(&sys, &dm, 2).unwrap();
        for grp in &col {
            let delta = if grp.multiplicity == 1 { 10.0 } else { 0.0 };
            assert!((grp.value - (-1.0 - grp.theta + delta)).abs() < 1e-9);
        }
    }

    #[test]
    fn refuses_large_graphs() {
        assert!(matches!(build_graph("hamming(8,3)"), Err(Error::Graph(_))));
        assert!(matches!(build_graph("nosuch"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn oracle_agrees_on_small_graphs() {
        for name in ["petersen", "cycle(7)", "hypercube(4)", "heawood"] {
            let g = build_graph(name).unwrap();
            let r = verify_against_array(&g, &Tolerance::default()).unwrap();
            assert!(r.passed, "{name}: {r:?}");
        }
    }
}
