//! Exhaustive verification of cover-free families, graph coverings, and
//! biclique covers.
//!
//! Every verifier scans its full requirement space (no early exit), so
//! `achieved_d` is the true minimum over all configurations and the
//! reported witness is the lexicographically first violation. Scans are
//! split into fixed-size chunks processed in parallel and recombined in
//! chunk order, which makes reports independent of the worker count.
//!
//! Instances whose requirement space exceeds a desk-scale guard are
//! refused with a capacity error unless `force` is set.

use crate::combin::{binomial, lex_unrank, LexSubsets};
use crate::model::{
    BicliqueCover, CffParams, Error, GraphCovering, HostGraphSpec, HostVertex, Multiplicity,
    Result, SetSystem, SimpleGraph,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Requirement pairs scanned per parallel task; fixed so that the chunk
/// boundaries (and hence the recombination order) never depend on the
/// thread count.
const CHUNK: u64 = 4096;

const MAX_PAIRS: u128 = 100_000_000;
const MAX_HOST_EDGES: u128 = 10_000_000;
const MAX_DENSE_COUNTS: u128 = 20_000_000;

/// The first violating configuration found in scan order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    /// Blocks indexed by `l` retain fewer than `d` points outside the
    /// blocks indexed by `m`.
    Cff { l: Vec<usize>, m: Vec<usize>, residual: u64 },
    /// Fewer than `d` sets contain the edge while missing every vertex in
    /// `excluded`.
    Covering { edge: [usize; 2], excluded: Vec<usize>, residual: u64 },
    /// A left-right pair inside biclique `biclique` is not a host edge.
    NonBiclique { biclique: usize, left: HostVertex, right: HostVertex },
    /// A host edge covered fewer than `d` times.
    UndercoveredEdge { edge: [HostVertex; 2], multiplicity: u64 },
}

fn host_vertex_text(v: &HostVertex) -> String {
    match v {
        HostVertex::Index(i) => i.to_string(),
        HostVertex::Subset(s) => {
            let inner: Vec<String> = s.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", inner.join(","))
        }
    }
}

fn index_list_text(l: &[usize]) -> String {
    let inner: Vec<String> = l.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

impl Witness {
    pub fn render(&self) -> String {
        match self {
            Witness::Cff { l, m, residual } => format!(
                "L={} M={} residual={residual}",
                index_list_text(l),
                index_list_text(m)
            ),
            Witness::Covering { edge, excluded, residual } => format!(
                "edge={{{},{}}} excluded={} residual={residual}",
                edge[0],
                edge[1],
                index_list_text(excluded)
            ),
            Witness::NonBiclique { biclique, left, right } => format!(
                "biclique {biclique} joins non-adjacent host vertices {} and {}",
                host_vertex_text(left),
                host_vertex_text(right)
            ),
            Witness::UndercoveredEdge { edge, multiplicity } => format!(
                "host edge ({},{}) covered {multiplicity} times",
                host_vertex_text(&edge[0]),
                host_vertex_text(&edge[1])
            ),
        }
    }
}

/// Outcome of an exhaustive check.
///
/// `ok` holds exactly when `achieved_d` meets the requested multiplicity;
/// `witness` is present exactly when `ok` is false. `partition` appears
/// only for biclique covers and records whether every host edge is covered
/// exactly `d` times.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub achieved_d: Multiplicity,
    pub witness: Option<Witness>,
    pub pairs_checked: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub partition: Option<bool>,
}

impl VerifyReport {
    pub fn summary(&self) -> String {
        match &self.witness {
            Some(w) => format!("achieved_d={} ({})", self.achieved_d, w.render()),
            None => format!("achieved_d={}", self.achieved_d),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "ok: {}\nachieved_d: {}\npairs_checked: {}\n",
            self.ok, self.achieved_d, self.pairs_checked
        );
        if let Some(p) = self.partition {
            out.push_str(&format!("partition: {p}\n"));
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!("witness: {}\n", w.render()));
        }
        out
    }
}

fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

fn bitset_of(items: &[usize], bits: usize) -> Vec<u64> {
    let mut words = vec![0u64; words_for(bits)];
    for &i in items {
        words[i / 64] |= 1 << (i % 64);
    }
    words
}

/// Advances a sorted `k`-subset of `{0,…,n-1}` to its lex successor.
/// The final subset is left unchanged; callers bound their own loops.
fn lex_succ(subset: &mut [usize], n: usize) {
    let k = subset.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - (k - i) {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return;
        }
    }
}

/// min and residual evaluation over one chunk of the (L, M) space.
fn cff_chunk(
    blocks: &[Vec<u64>],
    words: usize,
    t: usize,
    r: usize,
    w: usize,
    threshold: u64,
    start: u64,
    end: u64,
) -> (u64, Option<Witness>) {
    let mut l = lex_unrank(start as u128, r, t);
    let mut local_min = u64::MAX;
    let mut viol: Option<Witness> = None;
    let mut inter = vec![0u64; words];
    let mut comp: Vec<usize> = Vec::with_capacity(t - r);
    for _ in start..end {
        inter.copy_from_slice(&blocks[l[0]]);
        for &li in &l[1..] {
            for (word, b) in inter.iter_mut().zip(&blocks[li]) {
                *word &= b;
            }
        }
        comp.clear();
        let mut next_l = 0;
        for i in 0..t {
            if next_l < r && l[next_l] == i {
                next_l += 1;
            } else {
                comp.push(i);
            }
        }
        for m_pos in LexSubsets::new(comp.len(), w) {
            let mut residual: u64 = 0;
            for wi in 0..words {
                let mut x = inter[wi];
                for &mp in &m_pos {
                    x &= !blocks[comp[mp]][wi];
                }
                residual += u64::from(x.count_ones());
            }
            if residual < local_min {
                local_min = residual;
            }
            if residual < threshold && viol.is_none() {
                viol = Some(Witness::Cff {
                    l: l.clone(),
                    m: m_pos.iter().map(|&p| comp[p]).collect(),
                    residual,
                });
            }
        }
        lex_succ(&mut l, t);
    }
    (local_min, viol)
}

fn scan_cff(s: &SetSystem, r: usize, w: usize, threshold: u64) -> (u64, Option<Witness>) {
    let t = s.t();
    let words = words_for(s.n_points);
    let blocks: Vec<Vec<u64>> = s.blocks.iter().map(|b| bitset_of(b, s.n_points)).collect();
    let total_l = binomial(t, r) as u64;
    let n_chunks = total_l.div_ceil(CHUNK);
    let partials: Vec<(u64, Option<Witness>)> = (0..n_chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(total_l);
            cff_chunk(&blocks, words, t, r, w, threshold, start, end)
        })
        .collect();
    let mut min = u64::MAX;
    let mut witness = None;
    for (m, v) in partials {
        min = min.min(m);
        if witness.is_none() {
            witness = v;
        }
    }
    (min, witness)
}

fn cff_pair_guard(t: usize, r: usize, w: usize, force: bool) -> Result<u64> {
    let pairs = binomial(t, r).saturating_mul(binomial(t - r, w));
    if !force && pairs > MAX_PAIRS {
        return Err(Error::capacity(format!(
            "{pairs} index pairs exceed the {MAX_PAIRS} scan guard"
        )));
    }
    u64::try_from(pairs)
        .map_err(|_| Error::capacity(format!("{pairs} index pairs cannot be scanned")))
}

/// Checks the full `(r,w;d)` requirement over every disjoint pair of index
/// sets, in lex order.
pub fn verify_cff(s: &SetSystem, p: &CffParams, force: bool) -> Result<VerifyReport> {
    let t = s.t();
    if p.r == 0 {
        return Err(Error::usage("r must be at least 1"));
    }
    if p.d == 0 {
        return Err(Error::usage("d must be at least 1"));
    }
    if p.r + p.w > t {
        return Err(Error::usage(format!(
            "r + w must be at most the block count (r={}, w={}, t={t})",
            p.r, p.w
        )));
    }
    let pairs = cff_pair_guard(t, p.r, p.w, force)?;
    let (min, witness) = scan_cff(s, p.r, p.w, p.d);
    Ok(VerifyReport {
        ok: witness.is_none(),
        achieved_d: Multiplicity::Finite(min),
        witness,
        pairs_checked: pairs,
        partition: None,
    })
}

/// Largest `d` for which the `(r,w;d)` requirement holds; `Unbounded` when
/// no disjoint `(L, M)` pair exists at all.
pub fn achieved_d(s: &SetSystem, r: usize, w: usize, force: bool) -> Result<Multiplicity> {
    if r == 0 {
        return Err(Error::usage("r must be at least 1"));
    }
    if r + w > s.t() {
        return Ok(Multiplicity::Unbounded);
    }
    cff_pair_guard(s.t(), r, w, force)?;
    let (min, _) = scan_cff(s, r, w, 0);
    Ok(Multiplicity::Finite(min))
}

fn covering_chunk(
    c: &GraphCovering,
    rings: &[Vec<u64>],
    words: usize,
    start: usize,
    end: usize,
) -> (u64, Option<Witness>) {
    let n = c.graph.n_vertices;
    let mut local_min = u64::MAX;
    let mut viol: Option<Witness> = None;
    let mut base = vec![0u64; words];
    let mut rest: Vec<usize> = Vec::with_capacity(n - 2);
    for &(u, v) in &c.graph.edges[start..end] {
        for wi in 0..words {
            base[wi] = rings[u][wi] & rings[v][wi];
        }
        rest.clear();
        rest.extend((0..n).filter(|&x| x != u && x != v));
        for w_pos in LexSubsets::new(rest.len(), c.w) {
            let mut residual: u64 = 0;
            for wi in 0..words {
                let mut x = base[wi];
                for &wp in &w_pos {
                    x &= !rings[rest[wp]][wi];
                }
                residual += u64::from(x.count_ones());
            }
            if residual < local_min {
                local_min = residual;
            }
            if residual < c.d && viol.is_none() {
                viol = Some(Witness::Covering {
                    edge: [u, v],
                    excluded: w_pos.iter().map(|&p| rest[p]).collect(),
                    residual,
                });
            }
        }
    }
    (local_min, viol)
}

/// Checks the covering requirement over every (edge, coalition) pair.
/// Vacuous instances (no edge, or coalitions larger than the remaining
/// vertex count) pass with an unbounded achieved multiplicity.
pub fn verify_covering(c: &GraphCovering, force: bool) -> Result<VerifyReport> {
    let n = c.graph.n_vertices;
    let m = c.graph.m();
    let per_edge = if c.w + 2 > n { 0 } else { binomial(n - 2, c.w) };
    let pairs = (m as u128).saturating_mul(per_edge);
    if pairs == 0 {
        return Ok(VerifyReport {
            ok: true,
            achieved_d: Multiplicity::Unbounded,
            witness: None,
            pairs_checked: 0,
            partition: None,
        });
    }
    if !force && pairs > MAX_PAIRS {
        return Err(Error::capacity(format!(
            "{pairs} (edge, coalition) pairs exceed the {MAX_PAIRS} scan guard"
        )));
    }
    let pairs = u64::try_from(pairs)
        .map_err(|_| Error::capacity(format!("{pairs} pairs cannot be scanned")))?;

    let n_sets = c.sets.len();
    let words = words_for(n_sets);
    let mut rings = vec![vec![0u64; words]; n];
    for (j, set) in c.sets.iter().enumerate() {
        for &v in set {
            rings[v][j / 64] |= 1 << (j % 64);
        }
    }
    let chunk = CHUNK as usize;
    let n_chunks = m.div_ceil(chunk);
    let partials: Vec<(u64, Option<Witness>)> = (0..n_chunks)
        .into_par_iter()
        .map(|ci| covering_chunk(c, &rings, words, ci * chunk, ((ci + 1) * chunk).min(m)))
        .collect();
    let mut min = u64::MAX;
    let mut witness = None;
    for (lm, lv) in partials {
        min = min.min(lm);
        if witness.is_none() {
            witness = lv;
        }
    }
    Ok(VerifyReport {
        ok: witness.is_none(),
        achieved_d: Multiplicity::Finite(min),
        witness,
        pairs_checked: pairs,
        partition: None,
    })
}

fn expect_subset<'a>(v: &'a HostVertex, len: usize, limit: usize, side: &str) -> Result<&'a [usize]> {
    match v {
        HostVertex::Subset(s) if s.len() == len => {
            if let Some(&bad) = s.iter().find(|&&x| x >= limit) {
                Err(Error::format(format!(
                    "{side} vertex {} has element {bad} out of range (limit {limit})",
                    host_vertex_text(v)
                )))
            } else {
                Ok(s)
            }
        }
        HostVertex::Subset(s) => Err(Error::format(format!(
            "{side} vertex {} has {} elements, host expects {len}",
            host_vertex_text(v),
            s.len()
        ))),
        HostVertex::Index(_) => Err(Error::format(format!(
            "{side} vertex must be a subset list for this host kind"
        ))),
    }
}

fn expect_index(v: &HostVertex, limit: usize, side: &str) -> Result<usize> {
    match v {
        HostVertex::Index(i) if *i < limit => Ok(*i),
        HostVertex::Index(i) => Err(Error::format(format!(
            "{side} vertex {i} out of range (limit {limit})"
        ))),
        HostVertex::Subset(_) => Err(Error::format(format!(
            "{side} vertex must be a bare index for an explicit host"
        ))),
    }
}

fn disjoint_sorted(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

fn structural_report(biclique: usize, left: &HostVertex, right: &HostVertex) -> VerifyReport {
    VerifyReport {
        ok: false,
        achieved_d: Multiplicity::Finite(0),
        witness: Some(Witness::NonBiclique {
            biclique,
            left: left.clone(),
            right: right.clone(),
        }),
        pairs_checked: 0,
        partition: Some(false),
    }
}

fn multiplicity_report(
    requested: Multiplicity,
    min_mult: Option<u64>,
    first_viol: Option<Witness>,
    edges: u64,
    all_exact: bool,
) -> VerifyReport {
    match min_mult {
        None => VerifyReport {
            ok: true,
            achieved_d: Multiplicity::Unbounded,
            witness: None,
            pairs_checked: 0,
            partition: Some(true),
        },
        Some(min) => {
            let achieved = Multiplicity::Finite(min);
            let ok = achieved.meets(requested);
            VerifyReport {
                ok,
                achieved_d: achieved,
                witness: if ok { None } else { first_viol },
                pairs_checked: edges,
                partition: Some(all_exact),
            }
        }
    }
}

/// True when a multiplicity strictly misses the requested one.
fn below(mult: u64, requested: Multiplicity) -> bool {
    Multiplicity::Finite(mult) < requested
}

fn dense_counter(len: u128, force: bool) -> Result<Vec<u32>> {
    if !force && len > MAX_DENSE_COUNTS {
        return Err(Error::capacity(format!(
            "{len} multiplicity counters exceed the {MAX_DENSE_COUNTS} guard"
        )));
    }
    let len = usize::try_from(len)
        .map_err(|_| Error::capacity(format!("{len} counters cannot be allocated")))?;
    Ok(vec![0u32; len])
}

fn host_edge_guard(edges: u128, force: bool) -> Result<u64> {
    if !force && edges > MAX_HOST_EDGES {
        return Err(Error::capacity(format!(
            "{edges} host edges exceed the {MAX_HOST_EDGES} enumeration guard"
        )));
    }
    u64::try_from(edges).map_err(|_| Error::capacity(format!("{edges} host edges cannot be scanned")))
}

struct BicliqueScan {
    counter: Vec<u32>,
    structural: Option<VerifyReport>,
}

fn scan_bicliques<F>(
    bc: &BicliqueCover,
    counter_len: u128,
    force: bool,
    structure_only: bool,
    mut pair_key: F,
) -> Result<BicliqueScan>
where
    // Maps one (left, right) pair to its counter slot, or None when the
    // pair is not a host edge. Format errors out on malformed encodings.
    F: FnMut(&HostVertex, &HostVertex) -> Result<Option<usize>>,
{
    let mut counter = if structure_only {
        Vec::new()
    } else {
        dense_counter(counter_len, force)?
    };
    for (j, b) in bc.bicliques.iter().enumerate() {
        for l in &b.left {
            for r in &b.right {
                match pair_key(l, r)? {
                    Some(key) => {
                        if !structure_only {
                            counter[key] += 1;
                        }
                    }
                    None => {
                        return Ok(BicliqueScan {
                            counter: Vec::new(),
                            structural: Some(structural_report(j, l, r)),
                        })
                    }
                }
            }
        }
    }
    Ok(BicliqueScan { counter, structural: None })
}

/// Walks all host edges in canonical order, tracking min multiplicity,
/// exactness, and the first undercovered edge.
struct EdgeFold {
    requested: Multiplicity,
    min: Option<u64>,
    viol: Option<Witness>,
    all_exact: bool,
    edges: u64,
}

impl EdgeFold {
    fn new(requested: Multiplicity) -> EdgeFold {
        EdgeFold { requested, min: None, viol: None, all_exact: true, edges: 0 }
    }

    fn visit(&mut self, mult: u64, edge: impl FnOnce() -> [HostVertex; 2]) {
        self.edges += 1;
        if self.min.is_none_or(|m| mult < m) {
            self.min = Some(mult);
        }
        if Multiplicity::Finite(mult) != self.requested {
            self.all_exact = false;
        }
        if self.viol.is_none() && below(mult, self.requested) {
            self.viol = Some(Witness::UndercoveredEdge { edge: edge(), multiplicity: mult });
        }
    }

    fn finish(self) -> VerifyReport {
        multiplicity_report(self.requested, self.min, self.viol, self.edges, self.all_exact)
    }
}

fn verify_bi_intersection(
    bc: &BicliqueCover,
    t: usize,
    r: usize,
    w: usize,
    force: bool,
    structure_only: bool,
) -> Result<VerifyReport> {
    let left_card = binomial(t, r);
    let right_card = binomial(t, w);
    let edge_count = if r + w > t {
        0
    } else {
        binomial(t, r) * binomial(t - r, w)
    };
    host_edge_guard(edge_count, force)?;
    let scan = scan_bicliques(
        bc,
        left_card.saturating_mul(right_card),
        force,
        structure_only,
        |l, rv| {
            let ls = expect_subset(l, r, t, "left")?;
            let rs = expect_subset(rv, w, t, "right")?;
            if !disjoint_sorted(ls, rs) {
                return Ok(None);
            }
            let key = crate::combin::colex_rank(ls) as usize * right_card as usize
                + crate::combin::colex_rank(rs) as usize;
            Ok(Some(key))
        },
    )?;
    if let Some(report) = scan.structural {
        return Ok(report);
    }
    if structure_only {
        return Ok(VerifyReport {
            ok: true,
            achieved_d: Multiplicity::Finite(0),
            witness: None,
            pairs_checked: 0,
            partition: None,
        });
    }
    let mut fold = EdgeFold::new(bc.d);
    for rs in LexSubsets::new(t, r) {
        let comp: Vec<usize> = (0..t).filter(|i| !rs.contains(i)).collect();
        let rho_l = crate::combin::colex_rank(&rs) as usize;
        for wpos in LexSubsets::new(comp.len(), w) {
            let ws: Vec<usize> = wpos.iter().map(|&p| comp[p]).collect();
            let key = rho_l * right_card as usize + crate::combin::colex_rank(&ws) as usize;
            let mult = u64::from(scan.counter[key]);
            fold.visit(mult, || {
                [HostVertex::Subset(rs.clone()), HostVertex::Subset(ws.clone())]
            });
        }
    }
    Ok(fold.finish())
}

fn verify_kneser(
    bc: &BicliqueCover,
    t: usize,
    k: usize,
    force: bool,
    structure_only: bool,
) -> Result<VerifyReport> {
    let card = binomial(t, k);
    let edge_count = binomial(t, k) * binomial(t - k, k) / 2;
    host_edge_guard(edge_count, force)?;
    let scan = scan_bicliques(bc, card.saturating_mul(card), force, structure_only, |l, rv| {
        let ls = expect_subset(l, k, t, "left")?;
        let rs = expect_subset(rv, k, t, "right")?;
        if !disjoint_sorted(ls, rs) {
            return Ok(None);
        }
        let a = crate::combin::colex_rank(ls) as usize;
        let b = crate::combin::colex_rank(rs) as usize;
        Ok(Some(a.min(b) * card as usize + a.max(b)))
    })?;
    if let Some(report) = scan.structural {
        return Ok(report);
    }
    if structure_only {
        return Ok(VerifyReport {
            ok: true,
            achieved_d: Multiplicity::Finite(0),
            witness: None,
            pairs_checked: 0,
            partition: None,
        });
    }
    let mut fold = EdgeFold::new(bc.d);
    for a in LexSubsets::new(t, k) {
        let comp: Vec<usize> = (0..t).filter(|i| !a.contains(i)).collect();
        let rho_a = crate::combin::colex_rank(&a) as usize;
        for bpos in LexSubsets::new(comp.len(), k) {
            let b: Vec<usize> = bpos.iter().map(|&p| comp[p]).collect();
            // Each unordered pair once, from its lex-smaller endpoint.
            if b < a {
                continue;
            }
            let rho_b = crate::combin::colex_rank(&b) as usize;
            let key = rho_a.min(rho_b) * card as usize + rho_a.max(rho_b);
            let mult = u64::from(scan.counter[key]);
            fold.visit(mult, || [HostVertex::Subset(a.clone()), HostVertex::Subset(b.clone())]);
        }
    }
    Ok(fold.finish())
}

fn verify_explicit(
    bc: &BicliqueCover,
    g: &SimpleGraph,
    force: bool,
    structure_only: bool,
) -> Result<VerifyReport> {
    let m = g.m();
    host_edge_guard(m as u128, force)?;
    let edge_slot = |u: usize, v: usize| -> Option<usize> {
        g.edges.binary_search(&(u.min(v), u.max(v))).ok()
    };
    // Unordered multiplicity: a biclique covers {u,v} whichever side each
    // endpoint sits on, so both orientations land in the same slot.
    let scan = scan_bicliques(bc, m as u128, force, structure_only, |l, rv| {
        let u = expect_index(l, g.n_vertices, "left")?;
        let v = expect_index(rv, g.n_vertices, "right")?;
        if u == v {
            return Ok(None);
        }
        Ok(edge_slot(u, v))
    })?;
    if let Some(report) = scan.structural {
        return Ok(report);
    }
    if structure_only {
        return Ok(VerifyReport {
            ok: true,
            achieved_d: Multiplicity::Finite(0),
            witness: None,
            pairs_checked: 0,
            partition: None,
        });
    }
    let mut fold = EdgeFold::new(bc.d);
    for (idx, &(u, v)) in g.edges.iter().enumerate() {
        let mult = u64::from(scan.counter[idx]);
        fold.visit(mult, || [HostVertex::Index(u), HostVertex::Index(v)]);
    }
    Ok(fold.finish())
}

fn verify_derived_h(
    bc: &BicliqueCover,
    g: &SimpleGraph,
    w: usize,
    force: bool,
    structure_only: bool,
) -> Result<VerifyReport> {
    let n = g.n_vertices;
    let m = g.m();
    let right_card = binomial(n, w);
    let per_edge = if w + 2 > n { 0 } else { binomial(n - 2, w) };
    host_edge_guard((m as u128) * per_edge, force)?;
    let scan = scan_bicliques(
        bc,
        (m as u128).saturating_mul(right_card),
        force,
        structure_only,
        |l, rv| {
            let e = expect_subset(l, 2, n, "left")?;
            if !g.has_edge(e[0], e[1]) {
                return Err(Error::format(format!(
                    "left vertex {} is not an edge of the host graph",
                    host_vertex_text(l)
                )));
            }
            let ws = expect_subset(rv, w, n, "right")?;
            if !disjoint_sorted(e, ws) {
                return Ok(None);
            }
            let eidx = g.edges.binary_search(&(e[0], e[1])).expect("checked edge");
            Ok(Some(eidx * right_card as usize + crate::combin::colex_rank(ws) as usize))
        },
    )?;
    if let Some(report) = scan.structural {
        return Ok(report);
    }
    if structure_only {
        return Ok(VerifyReport {
            ok: true,
            achieved_d: Multiplicity::Finite(0),
            witness: None,
            pairs_checked: 0,
            partition: None,
        });
    }
    let mut fold = EdgeFold::new(bc.d);
    for (idx, &(u, v)) in g.edges.iter().enumerate() {
        let rest: Vec<usize> = (0..n).filter(|&x| x != u && x != v).collect();
        for wpos in LexSubsets::new(rest.len(), w) {
            let ws: Vec<usize> = wpos.iter().map(|&p| rest[p]).collect();
            let key = idx * right_card as usize + crate::combin::colex_rank(&ws) as usize;
            let mult = u64::from(scan.counter[key]);
            fold.visit(mult, || {
                [HostVertex::Subset(vec![u, v]), HostVertex::Subset(ws.clone())]
            });
        }
    }
    Ok(fold.finish())
}

/// Checks that every member is a genuine biclique of the host and that
/// every host edge is covered at least `d` times; the partition flag
/// records exact-`d` coverage.
pub fn verify_biclique_cover(bc: &BicliqueCover, force: bool) -> Result<VerifyReport> {
    bc.host.validate().map_err(|e| Error::usage(e.to_string()))?;
    match &bc.host {
        HostGraphSpec::BiIntersection { t, r, w } => {
            verify_bi_intersection(bc, *t, *r, *w, force, false)
        }
        HostGraphSpec::Kneser { t, k } => verify_kneser(bc, *t, *k, force, false),
        HostGraphSpec::Explicit { graph } => verify_explicit(bc, graph, force, false),
        HostGraphSpec::DerivedH { graph, w } => verify_derived_h(bc, graph, *w, force, false),
    }
}

/// Structural half of biclique verification: every left-right pair must be
/// a host edge. Used by conversions that consume covers; multiplicities
/// are not examined.
pub fn check_biclique_structure(bc: &BicliqueCover) -> Result<()> {
    bc.host.validate().map_err(|e| Error::usage(e.to_string()))?;
    let report = match &bc.host {
        HostGraphSpec::BiIntersection { t, r, w } => {
            verify_bi_intersection(bc, *t, *r, *w, true, true)?
        }
        HostGraphSpec::Kneser { t, k } => verify_kneser(bc, *t, *k, true, true)?,
        HostGraphSpec::Explicit { graph } => verify_explicit(bc, graph, true, true)?,
        HostGraphSpec::DerivedH { graph, w } => verify_derived_h(bc, graph, *w, true, true)?,
    };
    if report.ok {
        Ok(())
    } else {
        Err(Error::Failed(Box::new(report)))
    }
}
