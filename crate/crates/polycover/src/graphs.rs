//! Clique numbers, vertex covers, perfectness, and the resurgence bounds
//! they induce for edge and cover ideals.
//!
//! Graphs are bitmask-encoded (≤ 64 vertices); the exponential kernels
//! (perfectness scan, induced-subgraph sweep) sit behind size guards.

use crate::exec;
use crate::ideals::Graph;
use crate::rational::Rat;
use crate::Error;

/// Default vertex cap for the induced-subgraph sweep in
/// [`edge_resurgence_lower_bound`].
pub const DEFAULT_EDGE_SWEEP_CAP: usize = 10;

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

fn mask_to_vec(mask: u64) -> Vec<usize> {
    bits(mask).collect()
}

/// Bron–Kerbosch with pivoting over an explicit adjacency table. Emits every
/// maximal clique as a bitmask.
fn maximal_cliques(adjacency: &[u64], out: &mut Vec<u64>) {
    fn expand(adjacency: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 && x == 0 {
            out.push(r);
            return;
        }
        let pivot = bits(p | x)
            .max_by_key(|&u| (p & adjacency[u]).count_ones())
            .expect("p | x nonempty");
        let candidates = p & !adjacency[pivot];
        for v in bits(candidates) {
            let bit = 1u64 << v;
            expand(adjacency, r | bit, p & adjacency[v], x & adjacency[v], out);
            p &= !bit;
            x |= bit;
        }
    }
    let n = adjacency.len();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    if n == 0 {
        out.push(0);
        return;
    }
    expand(adjacency, 0, full, 0, out);
}

fn complement_adjacency(g: &Graph) -> Vec<u64> {
    let n = g.vertices();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    (0..n)
        .map(|v| full & !g.neighbors(v) & !(1u64 << v))
        .collect()
}

/// Clique number together with its lexicographically smallest witness.
pub fn clique_number(g: &Graph) -> (usize, Vec<usize>) {
    let adjacency: Vec<u64> = (0..g.vertices()).map(|v| g.neighbors(v)).collect();
    let mut cliques = Vec::new();
    maximal_cliques(&adjacency, &mut cliques);
    let omega = cliques
        .iter()
        .map(|c| c.count_ones() as usize)
        .max()
        .unwrap_or(0);
    let witness = cliques
        .iter()
        .filter(|c| c.count_ones() as usize == omega)
        .map(|&c| mask_to_vec(c))
        .min()
        .unwrap_or_default();
    (omega, witness)
}

/// All maximal independent sets, as bitmasks.
fn maximal_independent_sets(g: &Graph) -> Vec<u64> {
    let mut sets = Vec::new();
    maximal_cliques(&complement_adjacency(g), &mut sets);
    sets
}

/// Every minimal vertex cover (complement of a maximal independent set),
/// sorted lexicographically as vertex lists.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertices();
    let full = if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    };
    let mut covers: Vec<Vec<usize>> = maximal_independent_sets(g)
        .into_iter()
        .map(|s| mask_to_vec(full & !s))
        .collect();
    covers.sort();
    covers
}

/// Covering number α₀: size of a smallest vertex cover.
pub fn covering_number(g: &Graph) -> usize {
    let best_independent = maximal_independent_sets(g)
        .iter()
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0);
    g.vertices() - best_independent
}

/// Two-colorability by breadth-first search over every component.
pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.vertices();
    let mut color = vec![None::<bool>; n];
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            let cv = color[v].expect("queued vertices are colored");
            for w in bits(g.neighbors(v)) {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        queue.push(w);
                    }
                    Some(cw) if cw == cv => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Does `mask` induce a (chordless) cycle? Every vertex must have exactly two
/// neighbours inside the mask and the induced subgraph must be connected.
fn induces_cycle(adjacency: &[u64], mask: u64) -> bool {
    if mask.count_ones() < 3 {
        return false;
    }
    for v in bits(mask) {
        if (adjacency[v] & mask).count_ones() != 2 {
            return false;
        }
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut queue = vec![start];
    while let Some(v) = queue.pop() {
        for w in bits(adjacency[v] & mask & !seen) {
            seen |= 1u64 << w;
            queue.push(w);
        }
    }
    seen == mask
}

/// Masks of every induced cycle of odd length ≥ `min_len` (scans all vertex
/// subsets — callers guard the size).
fn odd_holes(adjacency: &[u64], n: usize, min_len: u32) -> Vec<u64> {
    (1u64..(1u64 << n))
        .filter(|mask| {
            let k = mask.count_ones();
            k >= min_len && k % 2 == 1 && induces_cycle(adjacency, *mask)
        })
        .collect()
}

/// Perfectness by the strong perfect graph theorem: no induced odd cycle of
/// length ≥ 5 in the graph or its complement.
pub fn is_perfect(g: &Graph) -> Result<bool, Error> {
    let n = g.vertices();
    crate::guard_dim("perfect-graph scan vertex count", n)?;
    let adjacency: Vec<u64> = (0..n).map(|v| g.neighbors(v)).collect();
    if !odd_holes(&adjacency, n, 5).is_empty() {
        return Ok(false);
    }
    Ok(odd_holes(&complement_adjacency(g), n, 5).is_empty())
}

/// The resurgence bound 2(ω−1)/ω for an ideal of covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverBound {
    /// 2(ω−1)/ω.
    pub bound: Rat,
    pub omega: usize,
    /// Lexicographically smallest maximum clique.
    pub clique: Vec<usize>,
    /// `Some(true)` when the graph is perfect (bound is the exact
    /// ic-resurgence of the cover ideal), `Some(false)` when imperfect (lower
    /// bound only), `None` when the perfectness scan exceeded its size guard.
    pub exact: Option<bool>,
}

/// Computes 2(ω−1)/ω with its clique witness; exact for perfect graphs.
pub fn cover_resurgence_bound(g: &Graph) -> CoverBound {
    let (omega, clique) = clique_number(g);
    let bound = if omega == 0 {
        Rat::zero()
    } else {
        Rat::new(2 * (omega as i64 - 1), omega as i64)
    };
    CoverBound {
        bound,
        omega,
        clique,
        exact: is_perfect(g).ok(),
    }
}

/// Largest independent set inside every subset, by subset dynamic
/// programming. `table[mask]` is the independence number of the induced
/// subgraph on `mask`.
fn independence_table(adjacency: &[u64], n: usize) -> Vec<u8> {
    let mut table = vec![0u8; 1usize << n];
    for mask in 1..(1usize << n) {
        let v = mask.trailing_zeros() as usize;
        let without = mask & !(1usize << v);
        let skip = table[without];
        let take = 1 + table[without & !(adjacency[v] as usize)];
        table[mask] = skip.max(take);
    }
    table
}

/// The resurgence lower bound max_H 2α₀(H)/|V(H)| for an edge ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeBound {
    /// max over induced subgraphs H of 2α₀(H)/|V(H)|.
    pub bound: Rat,
    /// Vertex set of the first maximizing induced subgraph (subset order).
    pub subgraph: Vec<usize>,
    /// α₀ of that subgraph.
    pub alpha0: usize,
}

/// Sweeps every induced subgraph, computing 2α₀(H)/|V(H)| and keeping the
/// maximum. `cap` raises or lowers the vertex guard (default
/// [`DEFAULT_EDGE_SWEEP_CAP`], overridable via `POLYCOVER_MAX_DIM`).
pub fn edge_resurgence_lower_bound(
    g: &Graph,
    cap: Option<usize>,
) -> Result<EdgeBound, Error> {
    let limit = cap
        .or_else(|| {
            std::env::var("POLYCOVER_MAX_DIM")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_EDGE_SWEEP_CAP);
    let n = g.vertices();
    if n > limit {
        return Err(Error::SizeGuard {
            what: "induced-subgraph sweep vertex count",
            got: n,
            limit,
        });
    }
    if g.edges().is_empty() {
        return Err(Error::Invalid("graph has no edges".into()));
    }
    let adjacency: Vec<u64> = (0..n).map(|v| g.neighbors(v)).collect();
    let table = independence_table(&adjacency, n);
    let masks: Vec<u64> = (1u64..(1u64 << n)).collect();
    let scored: Vec<(u64, usize)> = exec::filter_map_collect(masks, |mask| {
        let verts = mask.count_ones() as usize;
        let alpha0 = verts - table[mask as usize] as usize;
        (alpha0 > 0).then_some((mask, alpha0))
    });
    let best = scored
        .iter()
        .copied()
        .max_by(|&(m1, a1), &(m2, a2)| {
            let r1 = Rat::new(2 * a1 as i64, m1.count_ones() as i64);
            let r2 = Rat::new(2 * a2 as i64, m2.count_ones() as i64);
            // Prefer the earlier mask on ties so the witness is stable.
            r1.cmp(&r2).then(m2.cmp(&m1))
        })
        .ok_or_else(|| Error::Invalid("graph has no edges".into()))?;
    let (mask, alpha0) = best;
    Ok(EdgeBound {
        bound: Rat::new(2 * alpha0 as i64, mask.count_ones() as i64),
        subgraph: mask_to_vec(mask),
        alpha0,
    })
}

/// The headline invariants of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInvariants {
    pub omega: usize,
    /// Lexicographically smallest maximum clique.
    pub clique: Vec<usize>,
    pub alpha0: usize,
    /// Lexicographically smallest minimum vertex cover.
    pub cover: Vec<usize>,
    pub minimal_covers: Vec<Vec<usize>>,
    pub perfect: bool,
    pub bipartite: bool,
}

/// Computes every invariant in [`GraphInvariants`]; errors only when the
/// perfectness scan exceeds its size guard.
pub fn invariants(g: &Graph) -> Result<GraphInvariants, Error> {
    let (omega, clique) = clique_number(g);
    let minimal_covers = minimal_vertex_covers(g);
    let alpha0 = minimal_covers
        .iter()
        .map(Vec::len)
        .min()
        .unwrap_or(0);
    let cover = minimal_covers
        .iter()
        .filter(|c| c.len() == alpha0)
        .min()
        .cloned()
        .unwrap_or_default();
    Ok(GraphInvariants {
        omega,
        clique,
        alpha0,
        cover,
        minimal_covers,
        perfect: is_perfect(g)?,
        bipartite: is_bipartite(g),
    })
}
