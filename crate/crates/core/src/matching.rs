//! Maximum bipartite matching by repeated augmenting paths.
//!
//! Start from the empty matching. Look for an alternating path whose first
//! and last edges are unmatched and whose endpoints are free; flip every edge
//! on it, which grows the matching by exactly one. Stop when no such path
//! exists (by Berge's theorem the matching is then maximum).
//!
//! Paths are searched breadth-first from all free left vertices at once, in
//! index order, so results are deterministic.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{size_check, Error, Result};

/// Side limit for [`brute_force_max_matching`].
pub const BRUTE_FORCE_MAX_SIDE: usize = 8;

/// Compatibility edges between `left_count` left and `right_count` right vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left_count: usize,
    right_count: usize,
    adjacency: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// Rejects out-of-range indices and duplicate edges.
    pub fn new(left_count: usize, right_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); left_count];
        for &(l, r) in edges {
            if l >= left_count || r >= right_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({l}, {r}) out of range for {left_count}x{right_count} graph"
                )));
            }
            adjacency[l].push(r);
        }
        for (l, adj) in adjacency.iter_mut().enumerate() {
            adj.sort_unstable();
            if let Some(w) = adj.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({l}, {})", w[0])));
            }
        }
        Ok(Self { left_count, right_count, adjacency })
    }

    pub fn empty(left_count: usize, right_count: usize) -> Self {
        Self { left_count, right_count, adjacency: vec![Vec::new(); left_count] }
    }

    pub fn complete(left_count: usize, right_count: usize) -> Self {
        Self {
            left_count,
            right_count,
            adjacency: vec![(0..right_count).collect(); left_count],
        }
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }

    /// Right neighbours of a left vertex, ascending.
    pub fn neighbors(&self, left: usize) -> &[usize] {
        &self.adjacency[left]
    }

    pub fn has_edge(&self, left: usize, right: usize) -> bool {
        left < self.left_count && self.adjacency[left].binary_search(&right).is_ok()
    }

    /// Edges in (left, right) lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(l, adj)| adj.iter().map(move |&r| (l, r)))
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    /// Parses the graph file format: an `L R` header, then one `i j` edge per line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (no, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing `L R` header".into() })?;
        let (left, right) = parse_pair(header, no)?;
        let mut edges = Vec::new();
        for (no, line) in lines {
            edges.push(parse_pair(line, no)?);
        }
        Self::new(left, right, &edges)
    }

    pub fn to_file_string(&self) -> String {
        let mut out = format!("{} {}\n", self.left_count, self.right_count);
        for (l, r) in self.edges() {
            out.push_str(&format!("{l} {r}\n"));
        }
        out
    }
}

fn parse_pair(line: &str, no: usize) -> Result<(usize, usize)> {
    let nums: Vec<&str> = line.split_whitespace().collect();
    let bad = || Error::Parse { line: no, msg: format!("expected two non-negative integers, got `{line}`") };
    if nums.len() != 2 {
        return Err(bad());
    }
    Ok((nums[0].parse().map_err(|_| bad())?, nums[1].parse().map_err(|_| bad())?))
}

/// Required and offered attributes of one client.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Preferences {
    pub requires: BTreeSet<String>,
    pub offers: BTreeSet<String>,
}

impl Preferences {
    pub fn new<S: AsRef<str>>(requires: &[S], offers: &[S]) -> Self {
        Self {
            requires: requires.iter().map(|s| s.as_ref().to_string()).collect(),
            offers: offers.iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }

    /// True when everything `self` requires is offered by `other`.
    pub fn satisfied_by(&self, other: &Preferences) -> bool {
        self.requires.is_subset(&other.offers)
    }
}

/// Preference lists for both sides of the market.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PreferenceProfile {
    pub left: Vec<Preferences>,
    pub right: Vec<Preferences>,
}

impl PreferenceProfile {
    /// Parses one line per vertex: `side index requires: a,b offers: c,d`
    /// where `side` is `left` or `right`. Either list may be empty.
    pub fn parse(text: &str) -> Result<Self> {
        let mut left: Vec<Option<Preferences>> = Vec::new();
        let mut right: Vec<Option<Preferences>> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: no, msg: msg.to_string() };
            let req_at = line.find("requires:").ok_or_else(|| err("missing `requires:`"))?;
            let off_at = line.find("offers:").ok_or_else(|| err("missing `offers:`"))?;
            if off_at < req_at {
                return Err(err("`requires:` must precede `offers:`"));
            }
            let head: Vec<&str> = line[..req_at].split_whitespace().collect();
            if head.len() != 2 {
                return Err(err("expected `side index` before `requires:`"));
            }
            let index: usize = head[1].parse().map_err(|_| err("vertex index is not an integer"))?;
            let prefs = Preferences {
                requires: attribute_list(&line[req_at + "requires:".len()..off_at]),
                offers: attribute_list(&line[off_at + "offers:".len()..]),
            };
            let side = match head[0] {
                "left" | "L" => &mut left,
                "right" | "R" => &mut right,
                other => return Err(err(&format!("unknown side `{other}`"))),
            };
            if side.len() <= index {
                side.resize(index + 1, None);
            }
            if side[index].replace(prefs).is_some() {
                return Err(err("vertex listed twice"));
            }
        }
        let finish = |v: Vec<Option<Preferences>>, name: &str| -> Result<Vec<Preferences>> {
            v.into_iter()
                .enumerate()
                .map(|(i, p)| {
                    p.ok_or_else(|| Error::Parse { line: 0, msg: format!("{name} vertex {i} missing") })
                })
                .collect()
        };
        Ok(Self { left: finish(left, "left")?, right: finish(right, "right")? })
    }
}

fn attribute_list(s: &str) -> BTreeSet<String> {
    s.split(',')
        .map(str::trim)
        .filter(|a| !a.is_empty() && *a != "-")
        .map(str::to_string)
        .collect()
}

/// Edge `(i, j)` exists iff each side's requirements are offered by the other.
pub fn build_compatibility(profiles: &PreferenceProfile) -> BipartiteGraph {
    let adjacency = profiles
        .left
        .iter()
        .map(|l| {
            profiles
                .right
                .iter()
                .enumerate()
                .filter(|(_, r)| l.satisfied_by(r) && r.satisfied_by(l))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    BipartiteGraph {
        left_count: profiles.left.len(),
        right_count: profiles.right.len(),
        adjacency,
    }
}

/// A set of vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    left_to_right: Vec<Option<usize>>,
    right_to_left: Vec<Option<usize>>,
}

impl Matching {
    pub fn empty(graph: &BipartiteGraph) -> Self {
        Self {
            left_to_right: vec![None; graph.left_count],
            right_to_left: vec![None; graph.right_count],
        }
    }

    /// Builds a matching from explicit pairs, checking it against `graph`.
    pub fn from_pairs(graph: &BipartiteGraph, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut m = Self::empty(graph);
        for &(l, r) in pairs {
            if !graph.has_edge(l, r) {
                return Err(Error::InvalidMatching(format!("({l}, {r}) is not an edge")));
            }
            if m.left_to_right[l].is_some() || m.right_to_left[r].is_some() {
                return Err(Error::InvalidMatching(format!("({l}, {r}) reuses a matched vertex")));
            }
            m.left_to_right[l] = Some(r);
            m.right_to_left[r] = Some(l);
        }
        Ok(m)
    }

    /// Pairs sorted by left index.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left_to_right
            .iter()
            .enumerate()
            .filter_map(|(l, r)| r.map(|r| (l, r)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.left_to_right.iter().flatten().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn partner_of_left(&self, left: usize) -> Option<usize> {
        self.left_to_right.get(left).copied().flatten()
    }

    pub fn partner_of_right(&self, right: usize) -> Option<usize> {
        self.right_to_left.get(right).copied().flatten()
    }

    pub fn contains(&self, left: usize, right: usize) -> bool {
        self.partner_of_left(left) == Some(right)
    }

    /// Every vertex on both sides is matched.
    pub fn is_perfect(&self) -> bool {
        self.left_to_right.iter().all(Option::is_some) && self.right_to_left.iter().all(Option::is_some)
    }

    /// Checks sizes, edge membership and that the two directions agree.
    pub fn validate(&self, graph: &BipartiteGraph) -> Result<()> {
        if self.left_to_right.len() != graph.left_count || self.right_to_left.len() != graph.right_count {
            return Err(Error::InvalidMatching("vertex counts differ from graph".into()));
        }
        for (l, r) in self.pairs() {
            if !graph.has_edge(l, r) {
                return Err(Error::InvalidMatching(format!("({l}, {r}) is not an edge")));
            }
            if self.right_to_left.get(r).copied().flatten() != Some(l) {
                return Err(Error::InvalidMatching(format!("right vertex {r} does not point back to {l}")));
            }
        }
        let back = self.right_to_left.iter().flatten().count();
        if back != self.len() {
            return Err(Error::InvalidMatching("right side records extra pairs".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Vertex {
    Left(usize),
    Right(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Left(i) => write!(f, "L{i}"),
            Vertex::Right(j) => write!(f, "R{j}"),
        }
    }
}

/// A vertex sequence `x₁, …, x_m` whose edges alternate unmatched, matched,
/// unmatched, … and whose endpoints are free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternatingPath {
    vertices: Vec<Vertex>,
}

impl AlternatingPath {
    pub fn new(vertices: Vec<Vertex>) -> Self {
        Self { vertices }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// Edges as (left, right) pairs, in path order.
    pub fn edges(&self) -> Result<Vec<(usize, usize)>> {
        self.vertices
            .windows(2)
            .map(|w| match (w[0], w[1]) {
                (Vertex::Left(l), Vertex::Right(r)) | (Vertex::Right(r), Vertex::Left(l)) => Ok((l, r)),
                _ => Err(Error::InvalidPath(format!("{} and {} are on the same side", w[0], w[1]))),
            })
            .collect()
    }

    /// Checks every invariant of an augmenting path relative to `matching`.
    pub fn validate(&self, graph: &BipartiteGraph, matching: &Matching) -> Result<()> {
        let edges = self.edges()?;
        if edges.is_empty() || edges.len() % 2 == 0 {
            return Err(Error::InvalidPath(format!("needs an odd number of edges, has {}", edges.len())));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(v) = self.vertices.iter().find(|v| !seen.insert(**v)) {
            return Err(Error::InvalidPath(format!("vertex {v} repeats")));
        }
        for (k, &(l, r)) in edges.iter().enumerate() {
            if !graph.has_edge(l, r) {
                return Err(Error::InvalidPath(format!("({l}, {r}) is not an edge")));
            }
            let should_be_matched = k % 2 == 1;
            if matching.contains(l, r) != should_be_matched {
                return Err(Error::InvalidPath(format!(
                    "edge {k} ({l}, {r}) breaks the unmatched/matched alternation"
                )));
            }
        }
        let free = |v: &Vertex| match *v {
            Vertex::Left(l) => matching.partner_of_left(l).is_none(),
            Vertex::Right(r) => matching.partner_of_right(r).is_none(),
        };
        let (first, last) = (self.vertices.first().unwrap(), self.vertices.last().unwrap());
        if !free(first) || !free(last) {
            return Err(Error::InvalidPath("endpoints must be unmatched".into()));
        }
        Ok(())
    }
}

/// Breadth-first search for an augmenting path from the free left vertices.
///
/// Returns `None` exactly when the matching is maximum.
pub fn find_augmenting_path(graph: &BipartiteGraph, matching: &Matching) -> Result<Option<AlternatingPath>> {
    matching.validate(graph)?;
    let mut parent_of_right: Vec<Option<usize>> = vec![None; graph.right_count];
    let mut visited_left = vec![false; graph.left_count];
    let mut queue = VecDeque::new();
    for l in 0..graph.left_count {
        if matching.partner_of_left(l).is_none() {
            visited_left[l] = true;
            queue.push_back(l);
        }
    }
    while let Some(l) = queue.pop_front() {
        for &r in graph.neighbors(l) {
            if parent_of_right[r].is_some() || matching.contains(l, r) {
                continue;
            }
            parent_of_right[r] = Some(l);
            match matching.partner_of_right(r) {
                None => return Ok(Some(trace_back(r, &parent_of_right, matching))),
                Some(next) if !visited_left[next] => {
                    visited_left[next] = true;
                    queue.push_back(next);
                }
                Some(_) => {}
            }
        }
    }
    Ok(None)
}

fn trace_back(free_right: usize, parent_of_right: &[Option<usize>], matching: &Matching) -> AlternatingPath {
    let mut rev = vec![Vertex::Right(free_right)];
    let mut r = free_right;
    loop {
        let l = parent_of_right[r].expect("reached right vertex has a parent");
        rev.push(Vertex::Left(l));
        match matching.partner_of_left(l) {
            Some(prev_r) => {
                rev.push(Vertex::Right(prev_r));
                r = prev_r;
            }
            None => break,
        }
    }
    rev.reverse();
    AlternatingPath::new(rev)
}

/// Flips every edge on `path`: unmatched edges join, matched edges leave.
pub fn augment(graph: &BipartiteGraph, matching: &Matching, path: &AlternatingPath) -> Result<Matching> {
    path.validate(graph, matching)?;
    let mut next = matching.clone();
    let edges = path.edges()?;
    for &(l, r) in edges.iter().skip(1).step_by(2) {
        next.left_to_right[l] = None;
        next.right_to_left[r] = None;
    }
    for &(l, r) in edges.iter().step_by(2) {
        next.left_to_right[l] = Some(r);
        next.right_to_left[r] = Some(l);
    }
    debug_assert_eq!(next.len(), matching.len() + 1);
    Ok(next)
}

/// Grows the empty matching one augmenting path at a time until none is left.
pub fn maximum_matching(graph: &BipartiteGraph) -> Matching {
    let mut m = Matching::empty(graph);
    while let Some(path) = find_augmenting_path(graph, &m).expect("matching built here is valid") {
        m = augment(graph, &m, &path).expect("path found here is augmenting");
    }
    m
}

/// Exact maximum matching size by trying every partial injection
/// from left to right vertices.
pub fn brute_force_max_matching(graph: &BipartiteGraph) -> Result<usize> {
    size_check("left vertex count", graph.left_count, BRUTE_FORCE_MAX_SIDE)?;
    size_check("right vertex count", graph.right_count, BRUTE_FORCE_MAX_SIDE)?;
    fn best(graph: &BipartiteGraph, left: usize, used: u32) -> usize {
        if left == graph.left_count {
            return 0;
        }
        let mut top = best(graph, left + 1, used);
        for &r in graph.neighbors(left) {
            if used >> r & 1 == 0 {
                top = top.max(1 + best(graph, left + 1, used | 1 << r));
            }
        }
        top
    }
    Ok(best(graph, 0, 0))
}

/// Seeded random graph; each of the `left·right` possible edges is present
/// with probability `density`.
pub fn random_graph(left_count: usize, right_count: usize, density: f64, seed: u64) -> Result<BipartiteGraph> {
    if !(0.0..=1.0).contains(&density) {
        return Err(Error::Domain(format!("density {density} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let adjacency = (0..left_count)
        .map(|_| (0..right_count).filter(|_| rng.random_bool(density)).collect())
        .collect();
    Ok(BipartiteGraph { left_count, right_count, adjacency })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(l: usize, r: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::new(l, r, edges).unwrap()
    }

    #[test]
    fn graph_validation() {
        assert!(matches!(BipartiteGraph::new(1, 1, &[(0, 1)]), Err(Error::InvalidGraph(_))));
        assert!(matches!(BipartiteGraph::new(2, 2, &[(0, 1), (0, 1)]), Err(Error::InvalidGraph(_))));
        let g = graph(2, 3, &[(1, 2), (0, 1), (1, 0)]);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 0), (1, 2)]);
    }

    #[test]
    fn compatibility_examples() {
        let vacuous = PreferenceProfile {
            left: vec![Preferences::default(); 3],
            right: vec![Preferences::default(); 2],
        };
        assert_eq!(build_compatibility(&vacuous), BipartiteGraph::complete(3, 2));

        let unmet = PreferenceProfile {
            left: vec![Preferences::new(&["a"], &[])],
            right: vec![Preferences::default()],
        };
        assert_eq!(build_compatibility(&unmet).edge_count(), 0);

        // one-sided satisfaction is not enough
        let one_sided = PreferenceProfile {
            left: vec![Preferences::new(&["kind"], &["tall"])],
            right: vec![Preferences::new(&["rich"], &["kind"])],
        };
        assert_eq!(build_compatibility(&one_sided).edge_count(), 0);
    }

    #[test]
    fn compatibility_matches_direct_subset_check() {
        let alphabet = ["a", "b", "c", "d"];
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let pick = |rng: &mut ChaCha8Rng| -> Vec<&str> {
                alphabet.iter().copied().filter(|_| rng.random_bool(0.4)).collect()
            };
            let side = |rng: &mut ChaCha8Rng| -> Vec<Preferences> {
                (0..3).map(|_| Preferences::new(&pick(rng), &pick(rng))).collect()
            };
            let profile = PreferenceProfile { left: side(&mut rng), right: side(&mut rng) };
            let g = build_compatibility(&profile);
            for (i, l) in profile.left.iter().enumerate() {
                for (j, r) in profile.right.iter().enumerate() {
                    let direct = l.requires.iter().all(|a| r.offers.contains(a))
                        && r.requires.iter().all(|a| l.offers.contains(a));
                    assert_eq!(g.has_edge(i, j), direct);
                }
            }
        }
    }

    #[test]
    fn augmenting_path_examples() {
        let g = graph(1, 1, &[(0, 0)]);
        let p = find_augmenting_path(&g, &Matching::empty(&g)).unwrap().unwrap();
        assert_eq!(p.vertices(), &[Vertex::Left(0), Vertex::Right(0)]);

        let k = BipartiteGraph::complete(3, 3);
        let perfect = Matching::from_pairs(&k, &[(0, 2), (1, 0), (2, 1)]).unwrap();
        assert_eq!(find_augmenting_path(&k, &perfect).unwrap(), None);

        // path L1 - R1 = L0 - R0 with M = {(0,1)}
        let path_graph = graph(2, 2, &[(0, 0), (0, 1), (1, 1)]);
        let m = Matching::from_pairs(&path_graph, &[(0, 1)]).unwrap();
        let p = find_augmenting_path(&path_graph, &m).unwrap().unwrap();
        assert_eq!(p.edge_count(), 3);
        assert_eq!(
            p.vertices(),
            &[Vertex::Left(1), Vertex::Right(1), Vertex::Left(0), Vertex::Right(0)]
        );
        p.validate(&path_graph, &m).unwrap();
    }

    #[test]
    fn find_rejects_invalid_matching() {
        let g = graph(2, 2, &[(0, 0)]);
        let other = graph(2, 2, &[(0, 0), (1, 1)]);
        let m = Matching::from_pairs(&other, &[(1, 1)]).unwrap();
        assert!(matches!(find_augmenting_path(&g, &m), Err(Error::InvalidMatching(_))));
        assert!(matches!(Matching::from_pairs(&other, &[(0, 0), (0, 0)]), Err(Error::InvalidMatching(_))));
    }

    #[test]
    fn augment_examples() {
        let g = graph(1, 1, &[(0, 0)]);
        let m0 = Matching::empty(&g);
        let p = AlternatingPath::new(vec![Vertex::Left(0), Vertex::Right(0)]);
        assert_eq!(augment(&g, &m0, &p).unwrap().pairs(), vec![(0, 0)]);

        // symmetric difference of {(0,1)} with {(1,1),(0,1),(0,0)} = {(0,0),(1,1)}
        let g = graph(2, 2, &[(0, 0), (0, 1), (1, 1)]);
        let m = Matching::from_pairs(&g, &[(0, 1)]).unwrap();
        let p = AlternatingPath::new(vec![Vertex::Left(1), Vertex::Right(1), Vertex::Left(0), Vertex::Right(0)]);
        let m2 = augment(&g, &m, &p).unwrap();
        assert_eq!(m2.pairs(), vec![(0, 0), (1, 1)]);
        assert!(m2.is_perfect());

        // the matched edge alone is not augmenting
        let bad = AlternatingPath::new(vec![Vertex::Left(0), Vertex::Right(1)]);
        assert!(matches!(augment(&g, &m, &bad), Err(Error::InvalidPath(_))));
        // an even-length alternating list is not augmenting either
        let even = AlternatingPath::new(vec![Vertex::Left(1), Vertex::Right(1), Vertex::Left(0)]);
        assert!(matches!(augment(&g, &m, &even), Err(Error::InvalidPath(_))));
    }

    #[test]
    fn maximum_matching_examples() {
        assert!(maximum_matching(&BipartiteGraph::empty(0, 0)).is_empty());
        assert!(maximum_matching(&BipartiteGraph::empty(3, 4)).is_empty());
        assert_eq!(maximum_matching(&BipartiteGraph::complete(3, 3)).len(), 3);
        // unequal sides
        assert_eq!(maximum_matching(&BipartiteGraph::complete(2, 5)).len(), 2);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_max_matching(&BipartiteGraph::empty(0, 0)).unwrap(), 0);
        assert_eq!(brute_force_max_matching(&graph(1, 1, &[(0, 0)])).unwrap(), 1);
        assert!(matches!(
            brute_force_max_matching(&BipartiteGraph::empty(9, 1)),
            Err(Error::SizeExceeded { .. })
        ));
    }

    #[test]
    fn seeded_6x6_graphs_agree_with_brute_force() {
        for seed in 0..200 {
            let g = random_graph(6, 6, 0.3, seed).unwrap();
            let m = maximum_matching(&g);
            m.validate(&g).unwrap();
            assert_eq!(m.len(), brute_force_max_matching(&g).unwrap(), "seed {seed}");
            assert_eq!(find_augmenting_path(&g, &m).unwrap(), None);
        }
    }

    #[test]
    fn file_formats() {
        let g = BipartiteGraph::parse("2 3\n0 1\n1 2\n\n").unwrap();
        assert_eq!(g, graph(2, 3, &[(0, 1), (1, 2)]));
        assert_eq!(BipartiteGraph::parse(&g.to_file_string()).unwrap(), g);
        assert!(matches!(BipartiteGraph::parse("2 2\n0\n"), Err(Error::Parse { line: 2, .. })));

        let text = "left 0 requires: kind offers: tall, funny\n\
                    left 1 requires: offers: kind\n\
                    right 0 requires: tall offers: kind\n\
                    right 1 requires: rich offers: kind,tall\n";
        let p = PreferenceProfile::parse(text).unwrap();
        assert_eq!(p.left.len(), 2);
        assert_eq!(p.left[0].offers.len(), 2);
        assert!(p.left[1].requires.is_empty());
        let g = build_compatibility(&p);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 0)]);

        assert!(PreferenceProfile::parse("middle 0 requires: offers:").is_err());
        assert!(PreferenceProfile::parse("left 1 requires: offers:").is_err());
    }
}
