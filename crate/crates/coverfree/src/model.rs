//! Domain types shared by every module: set systems, graphs, coverings,
//! biclique covers, and the crate error type.
//!
//! Points and vertices are 0-indexed everywhere. Blocks, vertex sets, and
//! subset-encoded vertices are stored as sorted, duplicate-free integer
//! lists, so equal objects serialize to identical bytes. Deserialization
//! validates ranges and canonicalizes ordering; invalid files are rejected
//! before any algorithm sees them.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Bad parameters or preconditions. Exit code 2.
    #[error("{0}")]
    Usage(String),
    /// Malformed input file contents. Exit code 2.
    #[error("{0}")]
    Format(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    /// Instance exceeds a desk-scale guard; `force` overrides. Exit code 3.
    #[error("{0} (pass force to override)")]
    Capacity(String),
    /// A requested or implied verification did not hold. Exit code 1.
    #[error("verification failed: {}", .0.summary())]
    Failed(Box<crate::verify::VerifyReport>),
    /// The randomized construction ran out of resampling budget. Exit code 4.
    #[error("no verifying sample found in {attempts} attempts")]
    AttemptsExhausted { attempts: u64 },
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Error {
        Error::Usage(msg.into())
    }

    pub fn format(msg: impl Into<String>) -> Error {
        Error::Format(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Error {
        Error::Capacity(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Failed(_) => 1,
            Error::Usage(_) | Error::Format(_) | Error::Io(_) | Error::Json(_) => 2,
            Error::Capacity(_) => 3,
            Error::AttemptsExhausted { .. } => 4,
        }
    }
}

/// A multiplicity that may be vacuously infinite.
///
/// `achieved_d` over an empty requirement set (no admissible index pair
/// exists) is reported as `Unbounded` rather than any number; it compares
/// greater than every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Multiplicity {
    Finite(u64),
    Unbounded,
}

impl Multiplicity {
    pub fn meets(self, required: Multiplicity) -> bool {
        self >= required
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(v) => write!(f, "{v}"),
            Multiplicity::Unbounded => write!(f, "unbounded"),
        }
    }
}

impl Serialize for Multiplicity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Multiplicity::Finite(v) => s.serialize_u64(*v),
            Multiplicity::Unbounded => s.serialize_str("unbounded"),
        }
    }
}

impl<'de> Deserialize<'de> for Multiplicity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = Multiplicity;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a nonnegative integer or the string \"unbounded\"")
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> std::result::Result<Multiplicity, E> {
                Ok(Multiplicity::Finite(v))
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> std::result::Result<Multiplicity, E> {
                u64::try_from(v)
                    .map(Multiplicity::Finite)
                    .map_err(|_| E::custom("multiplicity must be nonnegative"))
            }
            fn visit_str<E: serde::de::Error>(self, v: &str) -> std::result::Result<Multiplicity, E> {
                if v == "unbounded" {
                    Ok(Multiplicity::Unbounded)
                } else {
                    Err(E::custom("expected \"unbounded\""))
                }
            }
        }
        d.deserialize_any(V)
    }
}

/// Parameters of the cover-free requirement: every `r` blocks must jointly
/// retain at least `d` points outside any `w` other blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CffParams {
    pub r: usize,
    pub w: usize,
    pub d: u64,
}

fn sorted_dedup(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v.dedup();
    v
}

fn check_range(list: &[usize], limit: usize, what: &str) -> Result<()> {
    if let Some(&bad) = list.iter().find(|&&x| x >= limit) {
        return Err(Error::format(format!("{what} index {bad} out of range (limit {limit})")));
    }
    Ok(())
}

/// `t` blocks over a ground set of `n_points` points. Doubles as a
/// key-distribution pattern: block `i` is the key ring of user `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSetSystem")]
pub struct SetSystem {
    pub n_points: usize,
    pub blocks: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct RawSetSystem {
    n_points: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawSetSystem> for SetSystem {
    type Error = Error;
    fn try_from(raw: RawSetSystem) -> Result<SetSystem> {
        SetSystem::new(raw.n_points, raw.blocks)
    }
}

impl SetSystem {
    /// Canonicalizes blocks (sorted, deduplicated) and validates ranges.
    /// Blocks may repeat and may be empty, but there must be at least one.
    pub fn new(n_points: usize, blocks: Vec<Vec<usize>>) -> Result<SetSystem> {
        if blocks.is_empty() {
            return Err(Error::format("a set system needs at least one block"));
        }
        let blocks: Vec<Vec<usize>> = blocks.into_iter().map(sorted_dedup).collect();
        for b in &blocks {
            check_range(b, n_points, "point")?;
        }
        Ok(SetSystem { n_points, blocks })
    }

    /// Number of blocks.
    pub fn t(&self) -> usize {
        self.blocks.len()
    }
}

/// Undirected simple graph: `n_vertices` vertices, canonical edge list
/// (each edge stored as `(u, v)` with `u < v`, sorted, no duplicates).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSimpleGraph")]
pub struct SimpleGraph {
    pub n_vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawSimpleGraph {
    n_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<RawSimpleGraph> for SimpleGraph {
    type Error = Error;
    fn try_from(raw: RawSimpleGraph) -> Result<SimpleGraph> {
        SimpleGraph::new(raw.n_vertices, raw.edges)
    }
}

impl SimpleGraph {
    pub fn new(n_vertices: usize, edges: Vec<(usize, usize)>) -> Result<SimpleGraph> {
        if n_vertices == 0 {
            return Err(Error::format("graph needs at least one vertex"));
        }
        let mut canon = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a == b {
                return Err(Error::format(format!("self-loop at vertex {a}")));
            }
            if a >= n_vertices || b >= n_vertices {
                return Err(Error::format(format!(
                    "edge ({a},{b}) out of range (n_vertices {n_vertices})"
                )));
            }
            canon.push((a.min(b), a.max(b)));
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(SimpleGraph { n_vertices, edges: canon })
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n_vertices];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n_vertices == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n_vertices];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == self.n_vertices
    }

    /// Path 0 – 1 – … – (n-1).
    pub fn path(n: usize) -> Result<SimpleGraph> {
        if n == 0 {
            return Err(Error::usage("path needs at least one vertex"));
        }
        SimpleGraph::new(n, (1..n).map(|v| (v - 1, v)).collect())
    }

    /// Cycle 0 – 1 – … – (n-1) – 0.
    pub fn cycle(n: usize) -> Result<SimpleGraph> {
        if n < 3 {
            return Err(Error::usage("cycle needs at least three vertices"));
        }
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        SimpleGraph::new(n, edges)
    }

    /// Star with `leaves` leaves 0..leaves and center vertex `leaves`.
    pub fn star(leaves: usize) -> Result<SimpleGraph> {
        if leaves == 0 {
            return Err(Error::usage("star needs at least one leaf"));
        }
        SimpleGraph::new(leaves + 1, (0..leaves).map(|l| (l, leaves)).collect())
    }

    pub fn complete(n: usize) -> Result<SimpleGraph> {
        if n == 0 {
            return Err(Error::usage("complete graph needs at least one vertex"));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        SimpleGraph::new(n, edges)
    }

    /// Complete bipartite graph: left part 0..t1, right part t1..t1+t2.
    pub fn complete_bipartite(t1: usize, t2: usize) -> Result<SimpleGraph> {
        if t1 == 0 || t2 == 0 {
            return Err(Error::usage("both parts must be nonempty"));
        }
        let mut edges = Vec::new();
        for u in 0..t1 {
            for v in 0..t2 {
                edges.push((u, t1 + v));
            }
        }
        SimpleGraph::new(t1 + t2, edges)
    }

    /// Cartesian product; vertex `(g, h)` is labeled `g * h_count + h`.
    pub fn cartesian_product(a: &SimpleGraph, b: &SimpleGraph) -> Result<SimpleGraph> {
        let nb = b.n_vertices;
        let mut edges = Vec::new();
        for &(u, v) in &a.edges {
            for h in 0..nb {
                edges.push((u * nb + h, v * nb + h));
            }
        }
        for g in 0..a.n_vertices {
            for &(x, y) in &b.edges {
                edges.push((g * nb + x, g * nb + y));
            }
        }
        SimpleGraph::new(a.n_vertices * nb, edges)
    }

    /// The t1 x t2 grid (product of two paths), labeled row-major.
    pub fn grid(t1: usize, t2: usize) -> Result<SimpleGraph> {
        SimpleGraph::cartesian_product(&SimpleGraph::path(t1)?, &SimpleGraph::path(t2)?)
    }

    /// Disjoint union; part `j`'s vertex `v` is labeled `offsets[j] + v`.
    /// Returns the graph and the per-part offsets.
    pub fn disjoint_union(parts: &[SimpleGraph]) -> Result<(SimpleGraph, Vec<usize>)> {
        if parts.is_empty() {
            return Err(Error::usage("disjoint union of no graphs"));
        }
        let mut offsets = Vec::with_capacity(parts.len());
        let mut total = 0usize;
        let mut edges = Vec::new();
        for part in parts {
            offsets.push(total);
            for &(u, v) in &part.edges {
                edges.push((total + u, total + v));
            }
            total += part.n_vertices;
        }
        Ok((SimpleGraph::new(total, edges)?, offsets))
    }
}

/// A candidate `(w,d)`-covering: vertex subsets such that every edge and
/// every disjoint coalition of `w` vertices leaves at least `d` subsets
/// containing the edge and missing the coalition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGraphCovering")]
pub struct GraphCovering {
    pub graph: SimpleGraph,
    pub sets: Vec<Vec<usize>>,
    pub w: usize,
    pub d: u64,
}

#[derive(Deserialize)]
struct RawGraphCovering {
    graph: SimpleGraph,
    sets: Vec<Vec<usize>>,
    w: usize,
    d: u64,
}

impl TryFrom<RawGraphCovering> for GraphCovering {
    type Error = Error;
    fn try_from(raw: RawGraphCovering) -> Result<GraphCovering> {
        GraphCovering::new(raw.graph, raw.sets, raw.w, raw.d)
    }
}

impl GraphCovering {
    pub fn new(graph: SimpleGraph, sets: Vec<Vec<usize>>, w: usize, d: u64) -> Result<GraphCovering> {
        let sets: Vec<Vec<usize>> = sets.into_iter().map(sorted_dedup).collect();
        for s in &sets {
            check_range(s, graph.n_vertices, "vertex")?;
        }
        Ok(GraphCovering { graph, sets, w, d })
    }
}

/// Host graph of a biclique cover, given by parameters rather than
/// materialized adjacency wherever the vertices are subsets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HostGraphSpec {
    /// Bipartite: left vertices are the `r`-subsets of `[t]`, right the
    /// `w`-subsets; edges join disjoint pairs. When `r + w > t` the host
    /// simply has no edges.
    BiIntersection { t: usize, r: usize, w: usize },
    /// Vertices are the `k`-subsets of `[t]`; edges join disjoint pairs.
    Kneser { t: usize, k: usize },
    /// An arbitrary graph with integer-labeled vertices.
    Explicit { graph: SimpleGraph },
    /// Bipartite: left vertices are the edges of `graph`, right the
    /// `w`-subsets of its vertices; an edge is adjacent to the subsets it
    /// misses.
    DerivedH { graph: SimpleGraph, w: usize },
}

impl HostGraphSpec {
    pub fn validate(&self) -> Result<()> {
        match self {
            HostGraphSpec::BiIntersection { t, r, w } => {
                if *t == 0 || *r == 0 || *w == 0 {
                    return Err(Error::format("bi_intersection parameters must be positive"));
                }
            }
            HostGraphSpec::Kneser { t, k } => {
                if *t == 0 || *k == 0 {
                    return Err(Error::format("kneser parameters must be positive"));
                }
                if 2 * k > *t {
                    return Err(Error::format(format!(
                        "kneser host needs 2k <= t for any edge to exist (t={t}, k={k})"
                    )));
                }
            }
            HostGraphSpec::Explicit { .. } => {}
            HostGraphSpec::DerivedH { graph, w } => {
                if *w + 2 > graph.n_vertices {
                    return Err(Error::format(format!(
                        "derived host needs w + 2 <= n_vertices (w={w}, n={})",
                        graph.n_vertices
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A vertex of a host graph: a bare index for explicit hosts, a sorted
/// integer list for subset-encoded hosts (and for edge-vertices of the
/// derived host, as the two endpoints).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HostVertex {
    Index(usize),
    Subset(Vec<usize>),
}

impl HostVertex {
    fn validate(&self) -> Result<()> {
        if let HostVertex::Subset(s) = self {
            for pair in s.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(Error::format(format!(
                        "subset vertex {s:?} must be sorted strictly increasing"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// One complete-bipartite piece of a cover: every left vertex must be
/// adjacent (in the host) to every right vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Biclique {
    pub left: Vec<HostVertex>,
    pub right: Vec<HostVertex>,
}

impl Biclique {
    fn canonicalize(mut self) -> Result<Biclique> {
        for v in self.left.iter().chain(self.right.iter()) {
            v.validate()?;
        }
        self.left.sort();
        self.left.dedup();
        self.right.sort();
        self.right.dedup();
        Ok(self)
    }
}

/// A claimed `d`-biclique cover of a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawBicliqueCover")]
pub struct BicliqueCover {
    pub host: HostGraphSpec,
    pub d: Multiplicity,
    pub bicliques: Vec<Biclique>,
}

#[derive(Deserialize)]
struct RawBicliqueCover {
    host: HostGraphSpec,
    d: Multiplicity,
    bicliques: Vec<Biclique>,
}

impl TryFrom<RawBicliqueCover> for BicliqueCover {
    type Error = Error;
    fn try_from(raw: RawBicliqueCover) -> Result<BicliqueCover> {
        BicliqueCover::new(raw.host, raw.d, raw.bicliques)
    }
}

impl BicliqueCover {
    pub fn new(host: HostGraphSpec, d: Multiplicity, bicliques: Vec<Biclique>) -> Result<BicliqueCover> {
        host.validate()?;
        let bicliques = bicliques
            .into_iter()
            .map(Biclique::canonicalize)
            .collect::<Result<Vec<_>>>()?;
        Ok(BicliqueCover { host, d, bicliques })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_system_canonicalizes_and_validates() {
        let s = SetSystem::new(4, vec![vec![2, 0, 2], vec![]]).unwrap();
        assert_eq!(s.blocks, vec![vec![0, 2], vec![]]);
        assert_eq!(s.t(), 2);
        assert!(SetSystem::new(2, vec![vec![2]]).is_err());
        assert!(SetSystem::new(2, vec![]).is_err());
    }

    #[test]
    fn graph_canonicalizes_rejects_loops() {
        let g = SimpleGraph::new(3, vec![(2, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edges, vec![(0, 1), (1, 2)]);
        assert!(SimpleGraph::new(3, vec![(1, 1)]).is_err());
        assert!(SimpleGraph::new(3, vec![(0, 3)]).is_err());
        assert!(SimpleGraph::new(0, vec![]).is_err());
    }

    #[test]
    fn graph_families() {
        let p = SimpleGraph::path(5).unwrap();
        assert_eq!(p.m(), 4);
        assert!(p.is_connected());
        let c = SimpleGraph::cycle(4).unwrap();
        assert_eq!(c.m(), 4);
        assert_eq!(c.min_degree(), 2);
        let s = SimpleGraph::star(3).unwrap();
        assert_eq!(s.n_vertices, 4);
        assert_eq!(s.degrees(), vec![1, 1, 1, 3]);
        let kb = SimpleGraph::complete_bipartite(2, 3).unwrap();
        assert_eq!(kb.m(), 6);
        let k4 = SimpleGraph::complete(4).unwrap();
        assert_eq!(k4.m(), 6);
        assert!(k4.has_edge(3, 0));
        assert!(!kb.has_edge(0, 1));
    }

    #[test]
    fn product_and_grid_shapes() {
        let g = SimpleGraph::grid(4, 4).unwrap();
        assert_eq!(g.n_vertices, 16);
        assert_eq!(g.m(), 24);
        let t = SimpleGraph::cartesian_product(
            &SimpleGraph::cycle(4).unwrap(),
            &SimpleGraph::cycle(4).unwrap(),
        )
        .unwrap();
        assert_eq!(t.m(), 32);
        assert_eq!(t.min_degree(), 4);
    }

    #[test]
    fn disjoint_union_offsets() {
        let p3 = SimpleGraph::path(3).unwrap();
        let (u, off) = SimpleGraph::disjoint_union(&[p3.clone(), p3]).unwrap();
        assert_eq!(off, vec![0, 3]);
        assert_eq!(u.n_vertices, 6);
        assert_eq!(u.edges, vec![(0, 1), (1, 2), (3, 4), (4, 5)]);
    }

    #[test]
    fn multiplicity_order_and_serde() {
        use Multiplicity::*;
        assert!(Finite(3) < Unbounded);
        assert!(Finite(2) < Finite(3));
        assert!(Unbounded.meets(Finite(1_000)));
        assert!(!Finite(1).meets(Finite(2)));
        assert_eq!(serde_json::to_string(&Finite(4)).unwrap(), "4");
        assert_eq!(serde_json::to_string(&Unbounded).unwrap(), "\"unbounded\"");
        assert_eq!(serde_json::from_str::<Multiplicity>("7").unwrap(), Finite(7));
        assert_eq!(
            serde_json::from_str::<Multiplicity>("\"unbounded\"").unwrap(),
            Unbounded
        );
        assert!(serde_json::from_str::<Multiplicity>("\"lots\"").is_err());
    }

    #[test]
    fn covering_validates_sets() {
        let g = SimpleGraph::path(3).unwrap();
        let c = GraphCovering::new(g.clone(), vec![vec![1, 0], vec![2]], 1, 1).unwrap();
        assert_eq!(c.sets[0], vec![0, 1]);
        assert!(GraphCovering::new(g, vec![vec![3]], 1, 1).is_err());
    }

    #[test]
    fn host_spec_validation() {
        assert!(HostGraphSpec::Kneser { t: 4, k: 2 }.validate().is_ok());
        assert!(HostGraphSpec::Kneser { t: 3, k: 2 }.validate().is_err());
        assert!(HostGraphSpec::BiIntersection { t: 3, r: 2, w: 1 }.validate().is_ok());
        // An edgeless host is allowed; conversions of vacuous families use it.
        assert!(HostGraphSpec::BiIntersection { t: 2, r: 2, w: 1 }.validate().is_ok());
        assert!(HostGraphSpec::BiIntersection { t: 2, r: 0, w: 1 }.validate().is_err());
    }

    #[test]
    fn biclique_cover_roundtrip_json() {
        let bc = BicliqueCover::new(
            HostGraphSpec::BiIntersection { t: 3, r: 1, w: 1 },
            Multiplicity::Finite(1),
            vec![Biclique {
                left: vec![HostVertex::Subset(vec![0]), HostVertex::Subset(vec![1])],
                right: vec![HostVertex::Subset(vec![2])],
            }],
        )
        .unwrap();
        let js = serde_json::to_string(&bc).unwrap();
        assert!(js.contains("\"kind\":\"bi_intersection\""));
        let back: BicliqueCover = serde_json::from_str(&js).unwrap();
        assert_eq!(back, bc);
    }

    #[test]
    fn host_vertex_untagged_forms() {
        let v: HostVertex = serde_json::from_str("3").unwrap();
        assert_eq!(v, HostVertex::Index(3));
        let v: HostVertex = serde_json::from_str("[1,2]").unwrap();
        assert_eq!(v, HostVertex::Subset(vec![1, 2]));
        let b = Biclique { left: vec![HostVertex::Subset(vec![2, 1])], right: vec![] };
        assert!(b.canonicalize().is_err());
    }
}
