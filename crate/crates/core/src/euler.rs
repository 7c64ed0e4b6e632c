//! Maximal-period `OS_q(2)` starters as Eulerian circuits of `K_q` (odd `q`) or of `K_q` with
//! a one-factor removed (even `q`), optionally forced to begin with a given trail.

use crate::bounds::os2_max_period;
use crate::error::{Error, Result};
use crate::sequence::RingSequence;
use crate::verify::check_orientable;

pub type Edge = (u32, u32);

fn edge(a: u32, b: u32) -> Edge {
    (a.min(b), a.max(b))
}

/// Simple graph on `0..q` with sorted adjacency for deterministic traversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerGraph {
    q: u32,
    edges: Vec<Edge>,
    removed_factor: Option<Vec<Edge>>,
}

impl EulerGraph {
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn removed_factor(&self) -> Option<&[Edge]> {
        self.removed_factor.as_deref()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.binary_search(&edge(a, b)).is_ok()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    fn complete_minus(q: u32, factor: Option<Vec<Edge>>) -> Self {
        let mut edges = Vec::with_capacity((q as usize) * (q as usize - 1) / 2);
        for a in 0..q {
            for b in a + 1..q {
                if !factor.as_ref().is_some_and(|f| f.contains(&(a, b))) {
                    edges.push((a, b));
                }
            }
        }
        Self {
            q,
            edges,
            removed_factor: factor,
        }
    }
}

/// `K_q` for odd `q`; for even `q`, `K_q` minus the first candidate one-factor that avoids
/// every forbidden edge.
pub fn build_graph(q: u32, forbidden: &[Edge]) -> Result<EulerGraph> {
    graph_candidates(q, forbidden)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvalidParameters("no candidate graph".into()))
}

/// Up to `q` graphs to try in order. Odd `q` has exactly one.
fn graph_candidates(q: u32, forbidden: &[Edge]) -> Result<Vec<EulerGraph>> {
    if q < 3 {
        return Err(Error::InvalidParameters(format!(
            "starter graph needs q >= 3, got {q}"
        )));
    }
    if q % 2 == 1 {
        return Ok(vec![EulerGraph::complete_minus(q, None)]);
    }
    let forbidden: Vec<Edge> = forbidden.iter().map(|&(a, b)| edge(a, b)).collect();
    let avoids = |m: &Vec<Edge>| m.iter().all(|e| !forbidden.contains(e));
    let mut matchings: Vec<Vec<Edge>> = Vec::new();
    for m in std::iter::once(antipodal_matching(q)).chain((0..q - 1).map(|k| round_robin_factor(q, k))) {
        if avoids(&m) && !matchings.contains(&m) {
            matchings.push(m);
        }
    }
    if matchings.is_empty() {
        matchings.push(search_matching(q, &forbidden)?);
    }
    matchings.truncate(q as usize);
    Ok(matchings
        .into_iter()
        .map(|m| EulerGraph::complete_minus(q, Some(m)))
        .collect())
}

/// `{i, i + q/2}`.
fn antipodal_matching(q: u32) -> Vec<Edge> {
    let mut m: Vec<Edge> = (0..q / 2).map(|i| edge(i, i + q / 2)).collect();
    m.sort_unstable();
    m
}

/// Factor `k` of the round-robin one-factorization of `K_q`, vertex `q - 1` at the centre.
fn round_robin_factor(q: u32, k: u32) -> Vec<Edge> {
    let r = q - 1;
    let mut m = vec![edge(k, r)];
    for j in 1..q / 2 {
        m.push(edge((k + r - j) % r, (k + j) % r));
    }
    m.sort_unstable();
    m
}

/// Backtracking perfect matching avoiding `forbidden`.
fn search_matching(q: u32, forbidden: &[Edge]) -> Result<Vec<Edge>> {
    fn go(
        matched: &mut Vec<Option<u32>>,
        forbidden: &[Edge],
        out: &mut Vec<Edge>,
        stuck: &mut Option<u32>,
    ) -> bool {
        let Some(a) = matched.iter().position(|m| m.is_none()) else {
            return true;
        };
        let a = a as u32;
        let q = matched.len() as u32;
        for b in a + 1..q {
            if matched[b as usize].is_some() || forbidden.contains(&edge(a, b)) {
                continue;
            }
            matched[a as usize] = Some(b);
            matched[b as usize] = Some(a);
            out.push(edge(a, b));
            if go(matched, forbidden, out, stuck) {
                return true;
            }
            out.pop();
            matched[a as usize] = None;
            matched[b as usize] = None;
        }
        stuck.get_or_insert(a);
        false
    }
    let mut matched = vec![None; q as usize];
    let mut out = Vec::new();
    let mut stuck = None;
    if go(&mut matched, forbidden, &mut out, &mut stuck) {
        out.sort_unstable();
        return Ok(out);
    }
    let v = stuck.unwrap_or(0);
    let blocking = forbidden
        .iter()
        .copied()
        .find(|&(a, b)| a == v || b == v)
        .or_else(|| forbidden.first().copied())
        .unwrap_or((0, 0));
    Err(Error::MatchingInfeasible { blocking })
}

fn validate_prefix(g: &EulerGraph, prefix: &[u32]) -> Result<Vec<Edge>> {
    if let Some(&v) = prefix.iter().find(|&&v| v >= g.q) {
        return Err(Error::Precondition(format!(
            "prefix symbol {v} outside 0..{}",
            g.q
        )));
    }
    let mut used: Vec<Edge> = Vec::new();
    for w in prefix.windows(2) {
        if w[0] == w[1] {
            return Err(Error::Precondition(format!(
                "prefix repeats symbol {} consecutively",
                w[0]
            )));
        }
        let e = edge(w[0], w[1]);
        if !g.has_edge(e.0, e.1) {
            return Err(Error::Precondition(format!("prefix edge {e:?} is not in the graph")));
        }
        if used.contains(&e) {
            return Err(Error::Precondition(format!("prefix uses edge {e:?} twice")));
        }
        used.push(e);
    }
    Ok(used)
}

/// Eulerian circuit whose symbol stream starts with `prefix`.
///
/// The prefix trail is removed, the remainder is traversed by Hierholzer's algorithm from
/// the prefix's last vertex (smallest neighbour first) and must return to its first vertex.
pub fn eulerian_with_prefix(g: &EulerGraph, prefix: &[u32]) -> Result<RingSequence> {
    if g.edges.is_empty() {
        return Err(Error::NoCircuit("graph has no edges".into()));
    }
    let prefix_edges = validate_prefix(g, prefix)?;
    let start = prefix.first().copied().unwrap_or(g.edges[0].0);
    let from = prefix.last().copied().unwrap_or(start);

    let q = g.q as usize;
    let mut adjacency: Vec<Vec<(u32, usize)>> = vec![Vec::new(); q];
    let mut used = vec![false; g.edges.len()];
    for (id, &(a, b)) in g.edges.iter().enumerate() {
        adjacency[a as usize].push((b, id));
        adjacency[b as usize].push((a, id));
        if prefix_edges.contains(&(a, b)) {
            used[id] = true;
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }

    let remaining = used.iter().filter(|u| !**u).count();
    let mut cursor = vec![0usize; q];
    let mut stack = vec![from];
    let mut trail = Vec::with_capacity(remaining + 1);
    while let Some(&v) = stack.last() {
        let list = &adjacency[v as usize];
        let c = &mut cursor[v as usize];
        while *c < list.len() && used[list[*c].1] {
            *c += 1;
        }
        if let Some(&(u, id)) = list.get(*c) {
            used[id] = true;
            stack.push(u);
        } else {
            trail.push(v);
            stack.pop();
        }
    }
    trail.reverse();

    if trail.len() != remaining + 1 {
        return Err(Error::NoCircuit(format!(
            "remainder after the prefix is disconnected ({} of {remaining} edges reached)",
            trail.len() - 1
        )));
    }
    if *trail.last().expect("trail holds at least the start vertex") != start {
        return Err(Error::NoCircuit(format!(
            "trail from {from} ends at {} instead of {start}",
            trail.last().unwrap()
        )));
    }
    let mut terms: Vec<u32> = prefix[..prefix.len().saturating_sub(1)].to_vec();
    terms.extend_from_slice(&trail[..trail.len() - 1]);
    RingSequence::new(g.q, terms)
}

/// Prefix symbols for the requested anchor cycle: `[x, y, z, x]` or `[0, x, y, z, x]`.
pub fn anchor_prefix(x: u32, y: u32, z: u32, lead_zero: bool) -> Vec<u32> {
    if lead_zero {
        vec![0, x, y, z, x]
    } else {
        vec![x, y, z, x]
    }
}

/// A maximal-period `OS_q(2)` whose ring sequence begins `[x, y, z, x, ...]`, or
/// `[0, x, y, z, x, ...]` when `lead_zero` is set.
pub fn os2_maximal(q: u32, x: u32, y: u32, z: u32, lead_zero: bool) -> Result<RingSequence> {
    if q <= 4 {
        return Err(Error::InvalidParameters(format!(
            "anchored maximal starters need q > 4, got {q}"
        )));
    }
    if x == y || y == z || x == z {
        return Err(Error::InvalidParameters(format!(
            "anchors must be distinct, got ({x}, {y}, {z})"
        )));
    }
    if x >= q || y >= q || z >= q {
        return Err(Error::InvalidParameters(format!(
            "anchors ({x}, {y}, {z}) out of range for q = {q}"
        )));
    }
    if lead_zero && (x == 0 || y == 0 || z == 0) {
        return Err(Error::InvalidParameters(
            "a leading zero needs nonzero anchors".into(),
        ));
    }
    let prefix = anchor_prefix(x, y, z, lead_zero);
    let forbidden: Vec<Edge> = prefix.windows(2).map(|w| edge(w[0], w[1])).collect();
    circuit_over_candidates(q, &forbidden, &prefix)
}

/// A maximal-period `OS_q(2)` starting at symbol 0, with no further constraint.
pub fn os2_starter(q: u32) -> Result<RingSequence> {
    circuit_over_candidates(q, &[], &[0])
}

fn circuit_over_candidates(q: u32, forbidden: &[Edge], prefix: &[u32]) -> Result<RingSequence> {
    let mut last_err = None;
    for g in graph_candidates(q, forbidden)? {
        match eulerian_with_prefix(&g, prefix) {
            Ok(s) => {
                certify(&s, q, prefix)?;
                return Ok(s);
            }
            Err(e @ Error::NoCircuit(_)) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.unwrap_or_else(|| Error::NoCircuit("no candidate graph".into())))
}

fn certify(s: &RingSequence, q: u32, prefix: &[u32]) -> Result<()> {
    let expected = os2_max_period(q)? as usize;
    let fail = |detail: String| Error::Certification {
        stage: "os2 starter".into(),
        detail,
    };
    if s.period() != expected {
        return Err(fail(format!("period {} != {expected}", s.period())));
    }
    if !s.terms().starts_with(&prefix[..prefix.len().saturating_sub(1)]) {
        return Err(fail("forced prefix lost".into()));
    }
    let r = check_orientable(s, 2)?;
    if !r.holds {
        return Err(fail(format!("not orientable: {:?}", r.violations)));
    }
    Ok(())
}
