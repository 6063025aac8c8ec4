//! Brute-force minimum bridge counts on small instances.
//!
//! The base graph is a set of disjoint complete communities laid out in
//! blocks (community `c` holds the ids after those of communities `0..c`).
//! A candidate is a set of cross-community pairs. Pairs are ordered by their
//! larger endpoint, then their smaller one, and candidate sets of one size
//! are visited in lexicographic order of their sorted pair lists.
//!
//! The exhaustive search visits bridge-set sizes upward from `r - 1` (fewer
//! bridges cannot connect `r` communities). With symmetry reduction on, it
//! keeps only sets that are lexicographically least among their images
//! under relabeling nodes within a community and permuting communities of
//! equal size. Least sets are closed under dropping their last pair, so
//! every orbit is reached exactly once by extending least sets with larger
//! pairs. The first witness found is the least witness overall, with or
//! without reduction.
//!
//! Graphs are held as `u128` adjacency masks, which caps instances at 128
//! nodes.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::thresholds::{self, Threshold, ThresholdError};

type Mask = u128;

const MAX_NODES: usize = Mask::BITS as usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(transparent)]
    Threshold(#[from] ThresholdError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub sizes: Vec<usize>,
    pub k: u32,
    /// Least bridge count found; `None` when the budget ran out first.
    pub min_bridges: Option<u64>,
    /// Bridges of the least witness, as node-id pairs in block layout.
    pub witness: Option<Vec<(u32, u32)>>,
    /// Central nodes of the witness.
    pub witness_central: Option<u64>,
    /// No bridge set smaller than this is k-integrated.
    pub infeasible_below: u64,
    pub sets_examined: u64,
    pub certified: bool,
    pub symmetry_reduced: bool,
    pub elapsed_ms: u64,
}

#[derive(Copy, Clone, Debug)]
pub struct ExhaustiveOptions {
    /// Maximum number of candidate sets to examine, partial sets included.
    pub budget: u64,
    pub symmetry: bool,
}

impl Default for ExhaustiveOptions {
    fn default() -> Self {
        ExhaustiveOptions {
            budget: 10_000_000,
            symmetry: true,
        }
    }
}

struct Instance {
    sizes: Vec<usize>,
    start: Vec<usize>,
    community_of: Vec<usize>,
    base: Vec<Mask>,
    pairs: Vec<(usize, usize)>,
    full: Mask,
}

impl Instance {
    fn new(sizes: &[usize]) -> Result<Self, OracleError> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(OracleError::InvalidParams(format!(
                "community sizes must be non-empty and positive (got {sizes:?})"
            )));
        }
        let total: usize = sizes.iter().sum();
        if total > MAX_NODES {
            return Err(OracleError::InvalidParams(format!(
                "{total} nodes exceeds the oracle limit of {MAX_NODES}"
            )));
        }
        let mut start = Vec::with_capacity(sizes.len());
        let mut community_of = Vec::with_capacity(total);
        for (c, &size) in sizes.iter().enumerate() {
            start.push(community_of.len());
            community_of.extend(std::iter::repeat_n(c, size));
        }
        let block = |c: usize| -> Mask { range_mask(start[c], start[c] + sizes[c]) };
        let base = (0..total)
            .map(|v| block(community_of[v]) & !bit(v))
            .collect();
        let mut pairs = Vec::new();
        for v in 0..total {
            for u in 0..v {
                if community_of[u] != community_of[v] {
                    pairs.push((u, v));
                }
            }
        }
        Ok(Instance {
            sizes: sizes.to_vec(),
            start,
            community_of,
            base,
            pairs,
            full: range_mask(0, total),
        })
    }

    fn node_count(&self) -> usize {
        self.community_of.len()
    }

    fn r(&self) -> usize {
        self.sizes.len()
    }

    /// `suffix[p][v]`: base adjacency plus every pair at index `>= p`.
    fn suffix_adjacency(&self) -> Vec<Vec<Mask>> {
        let mut suffix = vec![self.base.clone()];
        for &(u, v) in self.pairs.iter().rev() {
            let mut next = suffix.last().unwrap().clone();
            next[u] |= bit(v);
            next[v] |= bit(u);
            suffix.push(next);
        }
        suffix.reverse();
        suffix
    }

    fn within(&self, adjacency: &[Mask], k: u32) -> bool {
        within(adjacency, self.full, k)
    }

    fn central_count(&self, chosen: &[usize]) -> u64 {
        let mut ends: Mask = 0;
        for &p in chosen {
            let (u, v) = self.pairs[p];
            ends |= bit(u) | bit(v);
        }
        ends.count_ones() as u64
    }

    fn witness(&self, chosen: &[usize]) -> Vec<(u32, u32)> {
        let mut list: Vec<(u32, u32)> = chosen
            .iter()
            .map(|&p| (self.pairs[p].0 as u32, self.pairs[p].1 as u32))
            .collect();
        list.sort_unstable();
        list
    }
}

fn bit(v: usize) -> Mask {
    1 << v
}

fn range_mask(lo: usize, hi: usize) -> Mask {
    let upto = |x: usize| if x >= MAX_NODES { Mask::MAX } else { bit(x) - 1 };
    upto(hi) & !upto(lo)
}

fn bits(mut mask: Mask) -> impl Iterator<Item = usize> {
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

/// True iff every node reaches every other within `k` steps.
fn within(adjacency: &[Mask], full: Mask, k: u32) -> bool {
    let mut reach: Vec<Mask> = adjacency
        .iter()
        .enumerate()
        .map(|(v, &a)| a | bit(v))
        .collect();
    for _ in 1..k {
        if reach.iter().all(|&m| m == full) {
            return true;
        }
        let mut next = Vec::with_capacity(reach.len());
        for &row in &reach {
            let grown = bits(row).fold(row, |acc, u| acc | adjacency[u]);
            if grown == row && row != full {
                // closed under neighbourhood: this row can never fill up
                return false;
            }
            next.push(grown);
        }
        reach = next;
    }
    k > 0 && reach.iter().all(|&m| m == full)
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    inst: &'a Instance,
    suffix: Vec<Vec<Mask>>,
    k: u32,
    options: ExhaustiveOptions,
    examined: u64,
    chosen: Vec<usize>,
    cross: Vec<Mask>,
}

impl Search<'_> {
    fn push(&mut self, p: usize) {
        let (u, v) = self.inst.pairs[p];
        self.chosen.push(p);
        self.cross[u] |= bit(v);
        self.cross[v] |= bit(u);
    }

    fn pop(&mut self) {
        let p = self.chosen.pop().expect("pop on empty set");
        let (u, v) = self.inst.pairs[p];
        self.cross[u] &= !bit(v);
        self.cross[v] &= !bit(u);
    }

    fn components(&self) -> usize {
        let r = self.inst.r();
        let mut parent: Vec<usize> = (0..r).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut comps = r;
        for &p in &self.chosen {
            let (u, v) = self.inst.pairs[p];
            let a = find(&mut parent, self.inst.community_of[u]);
            let b = find(&mut parent, self.inst.community_of[v]);
            if a != b {
                parent[a] = b;
                comps -= 1;
            }
        }
        comps
    }

    /// Whether the current prefix, whose last pair is `last`, can still be
    /// completed to a k-integrated set of `size` pairs.
    fn feasible(&self, size: usize, last: usize) -> bool {
        let slots = size - self.chosen.len();
        if self.components() - 1 > slots {
            return false;
        }
        let outer = &self.suffix[if slots == 0 { self.inst.pairs.len() } else { last + 1 }];
        let adjacency: Vec<Mask> = outer
            .iter()
            .zip(&self.cross)
            .map(|(&a, &c)| a | c)
            .collect();
        self.inst.within(&adjacency, self.k)
    }

    fn extend(&mut self, size: usize, from: usize) -> Outcome {
        let later = size - self.chosen.len() - 1;
        let last = self.inst.pairs.len() - later;
        for p in from..last {
            self.push(p);
            if self.feasible(size, p)
                && (!self.options.symmetry || is_least(self.inst, &self.cross))
            {
                self.examined += 1;
                if self.examined > self.options.budget {
                    self.pop();
                    return Outcome::OutOfBudget;
                }
                if later == 0 {
                    return Outcome::Found;
                }
                match self.extend(size, p + 1) {
                    Outcome::Exhausted => {}
                    other => return other,
                }
            }
            self.pop();
        }
        Outcome::Exhausted
    }
}

/// Least-image test for a candidate set given as cross adjacency masks.
fn is_least(inst: &Instance, cross: &[Mask]) -> bool {
    let n = inst.node_count();
    let mut canon = Canon {
        inst,
        cross,
        image: vec![usize::MAX; n],
        assigned: 0,
        source_of_community: vec![usize::MAX; inst.r()],
        used_community: vec![false; inst.r()],
    };
    !canon.target(0)
}

struct Canon<'a> {
    inst: &'a Instance,
    cross: &'a [Mask],
    /// image[u]: target position of source node u.
    image: Vec<usize>,
    assigned: Mask,
    source_of_community: Vec<usize>,
    used_community: Vec<bool>,
}

impl Canon<'_> {
    /// Assigns target position `t` onwards. Returns true as soon as some
    /// relabeling yields a smaller set.
    fn target(&mut self, t: usize) -> bool {
        if t == self.inst.node_count() {
            return false;
        }
        let tc = self.inst.community_of[t];
        if t != self.inst.start[tc] {
            return self.place(t);
        }
        for c in 0..self.inst.r() {
            if self.used_community[c] || self.inst.sizes[c] != self.inst.sizes[tc] {
                continue;
            }
            self.used_community[c] = true;
            self.source_of_community[tc] = c;
            let smaller = self.place(t);
            self.used_community[c] = false;
            if smaller {
                return true;
            }
        }
        false
    }

    fn place(&mut self, t: usize) -> bool {
        let c = self.source_of_community[self.inst.community_of[t]];
        let lo = self.inst.start[c];
        let row_here = self.cross[t] & range_mask(0, t);
        let mut tried: Vec<Mask> = Vec::new();
        for u in lo..lo + self.inst.sizes[c] {
            if self.assigned & bit(u) != 0 {
                continue;
            }
            // unplaced nodes of one community with equal neighbourhoods
            // are interchangeable
            let neighbours = self.cross[u];
            if tried.contains(&neighbours) {
                continue;
            }
            tried.push(neighbours);
            let row_image = bits(neighbours & self.assigned).fold(0, |acc, w| acc | bit(self.image[w]));
            if row_image != row_here {
                let d = (row_image ^ row_here).trailing_zeros() as usize;
                if row_image & bit(d) != 0 {
                    return true;
                }
                continue;
            }
            self.image[u] = t;
            self.assigned |= bit(u);
            let smaller = self.target(t + 1);
            self.assigned &= !bit(u);
            self.image[u] = usize::MAX;
            if smaller {
                return true;
            }
        }
        false
    }
}

/// Exhaustive minimum for `r` communities of `n` nodes.
pub fn min_bridges_exhaustive(r: usize, n: usize, k: u32, budget: u64) -> Result<OracleVerdict, OracleError> {
    if r == 0 || n == 0 {
        return Err(OracleError::InvalidParams(format!(
            "r and n must be at least 1 (got r = {r}, n = {n})"
        )));
    }
    min_bridges_exhaustive_sizes(
        &vec![n; r],
        k,
        ExhaustiveOptions {
            budget,
            ..ExhaustiveOptions::default()
        },
    )
}

/// Exhaustive minimum for communities of the given (possibly unequal) sizes.
pub fn min_bridges_exhaustive_sizes(
    sizes: &[usize],
    k: u32,
    options: ExhaustiveOptions,
) -> Result<OracleVerdict, OracleError> {
    if k == 0 {
        return Err(OracleError::InvalidParams("k must be at least 1".into()));
    }
    if options.budget == 0 {
        return Err(OracleError::InvalidParams("budget must be positive".into()));
    }
    let clock = Instant::now();
    let inst = Instance::new(sizes)?;
    let mut search = Search {
        suffix: inst.suffix_adjacency(),
        inst: &inst,
        k,
        options,
        examined: 0,
        chosen: Vec::new(),
        cross: vec![0; inst.node_count()],
    };
    let lowest = inst.r() - 1;
    let mut verdict = OracleVerdict {
        sizes: sizes.to_vec(),
        k,
        min_bridges: None,
        witness: None,
        witness_central: None,
        infeasible_below: lowest as u64,
        sets_examined: 0,
        certified: false,
        symmetry_reduced: options.symmetry,
        elapsed_ms: 0,
    };
    for size in lowest..=inst.pairs.len() {
        let outcome = if size == 0 {
            search.examined += 1;
            if inst.within(&inst.base, k) {
                Outcome::Found
            } else {
                Outcome::Exhausted
            }
        } else {
            search.extend(size, 0)
        };
        log::debug!("size {size}: {} sets examined so far", search.examined);
        match outcome {
            Outcome::Found => {
                verdict.min_bridges = Some(size as u64);
                verdict.witness = Some(inst.witness(&search.chosen));
                verdict.witness_central = Some(inst.central_count(&search.chosen));
                verdict.certified = true;
                break;
            }
            Outcome::Exhausted => verdict.infeasible_below = size as u64 + 1,
            Outcome::OutOfBudget => {
                search.examined = options.budget;
                break;
            }
        }
    }
    verdict.sets_examined = search.examined;
    verdict.elapsed_ms = clock.elapsed().as_millis() as u64;
    Ok(verdict)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RandomizedVerdict {
    pub sizes: Vec<usize>,
    pub k: u32,
    pub upper_bound: u64,
    pub witness: Vec<(u32, u32)>,
    pub witness_central: u64,
    pub trials: u32,
    pub seed: u64,
}

/// Local search for a small k-integrated bridge set: greedy removal from
/// the full set followed by swap and two-for-one moves. The result is an
/// upper bound on the minimum, reproducible for a given seed.
pub fn min_bridges_randomized(
    r: usize,
    n: usize,
    k: u32,
    trials: u32,
    seed: u64,
) -> Result<RandomizedVerdict, OracleError> {
    if k == 0 || trials == 0 {
        return Err(OracleError::InvalidParams("k and trials must be at least 1".into()));
    }
    let inst = Instance::new(&vec![n; r])?;
    let best = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial as u64);
            let set = local_search(&inst, k, trial, &mut rng);
            (set.len(), inst.witness(&set), set)
        })
        .min_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)))
        .expect("at least one trial");
    Ok(RandomizedVerdict {
        sizes: inst.sizes.clone(),
        k,
        upper_bound: best.0 as u64,
        witness: best.1,
        witness_central: inst.central_count(&best.2),
        trials,
        seed,
    })
}

fn adjacency_of(inst: &Instance, set: &[usize]) -> Vec<Mask> {
    let mut adjacency = inst.base.clone();
    for &p in set {
        let (u, v) = inst.pairs[p];
        adjacency[u] |= bit(v);
        adjacency[v] |= bit(u);
    }
    adjacency
}

/// Drops pairs in the given order whenever the rest stays k-integrated.
fn prune(inst: &Instance, k: u32, set: &mut Vec<usize>, order: &[usize]) {
    for &p in order {
        if let Some(at) = set.iter().position(|&q| q == p) {
            set.swap_remove(at);
            if !inst.within(&adjacency_of(inst, set), k) {
                set.push(p);
            }
        }
    }
}

fn local_search(inst: &Instance, k: u32, trial: u32, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let all: Vec<usize> = (0..inst.pairs.len()).collect();
    let mut order = all.clone();
    if trial.is_multiple_of(2) {
        // drop pairs between low-ranked nodes first so the top-ranked node
        // ends up as a hub
        let mut rank: Vec<usize> = (0..inst.node_count()).collect();
        rank.shuffle(rng);
        order.sort_by_key(|&p| {
            let (u, v) = inst.pairs[p];
            (rank[u].max(rank[v]), rank[u].min(rank[v]))
        });
    } else {
        order.shuffle(rng);
    }
    let mut set = all;
    prune(inst, k, &mut set, &order);
    if set.is_empty() {
        return set;
    }

    let rounds = 4 * inst.pairs.len();
    for _ in 0..rounds {
        let outside: Vec<usize> = (0..inst.pairs.len()).filter(|p| !set.contains(p)).collect();
        if outside.is_empty() {
            break;
        }
        let incoming = outside[rng.gen_range(0..outside.len())];
        let mut candidate = set.clone();
        candidate.swap_remove(rng.gen_range(0..candidate.len()));
        if !candidate.is_empty() && rng.gen_bool(0.5) {
            candidate.swap_remove(rng.gen_range(0..candidate.len()));
        }
        candidate.push(incoming);
        if inst.within(&adjacency_of(inst, &candidate), k) {
            let mut shuffled = candidate.clone();
            shuffled.shuffle(rng);
            prune(inst, k, &mut candidate, &shuffled);
            set = candidate;
        }
    }
    set.sort_unstable();
    set
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub r: usize,
    pub n: usize,
    pub k: u32,
    pub theorem: Threshold,
    pub oracle: OracleVerdict,
    /// `None` when the oracle could not certify a value.
    pub agrees: Option<bool>,
}

/// Runs the exhaustive oracle and compares it with the threshold row for
/// `(r, n, k)`; interval rows agree when they contain the oracle value.
pub fn check_theorem_row(r: usize, n: usize, k: u32, budget: u64) -> Result<TheoremCheck, OracleError> {
    let theorem = thresholds::bridge_threshold(r as u64, n as u64, k)?;
    let oracle = min_bridges_exhaustive(r, n, k, budget)?;
    let agrees = match (oracle.certified, oracle.min_bridges) {
        (true, Some(value)) => Some(theorem.contains(value)),
        _ => None,
    };
    Ok(TheoremCheck {
        r,
        n,
        k,
        theorem,
        oracle,
        agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{CommunityGraph, CommunityId, NodeId};
    use crate::metrics;

    fn exhaustive(sizes: &[usize], k: u32, symmetry: bool) -> OracleVerdict {
        min_bridges_exhaustive_sizes(
            sizes,
            k,
            ExhaustiveOptions {
                budget: 5_000_000,
                symmetry,
            },
        )
        .unwrap()
    }

    fn witness_graph(sizes: &[usize], witness: &[(u32, u32)]) -> CommunityGraph {
        let mut communities = Vec::new();
        for (c, &size) in sizes.iter().enumerate() {
            communities.extend(std::iter::repeat_n(CommunityId(c as u32), size));
        }
        let mut edges = witness
            .iter()
            .map(|&(u, v)| (NodeId(u), NodeId(v)))
            .collect::<Vec<_>>();
        for u in 0..communities.len() {
            for v in u + 1..communities.len() {
                if communities[u] == communities[v] {
                    edges.push((NodeId(u as u32), NodeId(v as u32)));
                }
            }
        }
        CommunityGraph::build(edges, &communities).unwrap()
    }

    fn assert_witness_valid(v: &OracleVerdict) {
        let witness = v.witness.as_ref().unwrap();
        assert_eq!(witness.len() as u64, v.min_bridges.unwrap());
        let g = witness_graph(&v.sizes, witness);
        assert!(metrics::is_k_integrated(&g, v.k).integrated);
        assert_eq!(g.central_nodes().len() as u64, v.witness_central.unwrap());
    }

    #[test]
    fn within_matches_bfs() {
        // path 0-1-2-3
        let adjacency = [0b0010, 0b0101, 0b1010, 0b0100];
        let full = 0b1111;
        assert!(!within(&adjacency, full, 2));
        assert!(within(&adjacency, full, 3));
        assert!(!within(&[0b10, 0b01, 0], 0b111, 5));
        assert!(within(&[0], 0b1, 1));
    }

    #[test]
    fn pairs_are_colex() {
        let inst = Instance::new(&[2, 2]).unwrap();
        assert_eq!(inst.pairs, vec![(0, 2), (1, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn small_minima() {
        let cases: [(&[usize], u32, u64); 10] = [
            (&[3, 3], 2, 3),
            (&[2, 3], 2, 2),
            (&[3, 3, 3], 3, 3),
            (&[2, 2], 1, 4),
            (&[3, 3, 3], 2, 6),
            (&[2, 2], 2, 2),
            (&[4], 1, 0),
            (&[1, 1], 2, 1),
            (&[2, 2], 3, 1),
            (&[3, 3, 3], 1, 27),
        ];
        for (sizes, k, expected) in cases {
            let v = exhaustive(sizes, k, true);
            assert!(v.certified, "{sizes:?} k={k}");
            assert_eq!(v.min_bridges, Some(expected), "{sizes:?} k={k}");
            assert_eq!(v.infeasible_below, expected);
            assert_witness_valid(&v);
        }
    }

    #[test]
    fn first_witness_is_the_least_star() {
        let v = exhaustive(&[4, 4, 4, 4], 4, true);
        assert_eq!(v.min_bridges, Some(3));
        assert_eq!(v.witness, Some(vec![(0, 4), (0, 8), (0, 12)]));
    }

    #[test]
    fn reduction_preserves_minimum_and_witness() {
        let instances: [&[usize]; 6] = [&[2, 2], &[2, 3], &[2, 4], &[4, 4], &[2, 2, 2], &[3, 3, 2]];
        for sizes in instances {
            for k in 1..=4 {
                let reduced = exhaustive(sizes, k, true);
                let plain = exhaustive(sizes, k, false);
                assert_eq!(reduced.min_bridges, plain.min_bridges, "{sizes:?} k={k}");
                assert_eq!(reduced.witness, plain.witness, "{sizes:?} k={k}");
                assert!(reduced.sets_examined <= plain.sets_examined);
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_partial() {
        let v = min_bridges_exhaustive(3, 3, 2, 10).unwrap();
        assert!(!v.certified);
        assert_eq!(v.min_bridges, None);
        assert_eq!(v.sets_examined, 10);
        assert!(v.infeasible_below >= 2);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(min_bridges_exhaustive(0, 3, 2, 10).is_err());
        assert!(min_bridges_exhaustive(2, 2, 0, 10).is_err());
        assert!(min_bridges_exhaustive(2, 2, 2, 0).is_err());
        assert!(min_bridges_exhaustive(3, 50, 2, 10).is_err());
    }

    #[test]
    fn randomized_bounds() {
        let v = min_bridges_randomized(8, 3, 4, 16, 7).unwrap();
        assert!(v.upper_bound <= 7, "got {}", v.upper_bound);
        let g = witness_graph(&v.sizes, &v.witness);
        assert!(metrics::is_k_integrated(&g, 4).integrated);

        assert_eq!(min_bridges_randomized(2, 2, 2, 4, 1).unwrap().upper_bound, 2);
        assert_eq!(min_bridges_randomized(1, 4, 3, 2, 1).unwrap().upper_bound, 0);
        assert_eq!(min_bridges_randomized(3, 3, 1, 2, 1).unwrap().upper_bound, 27);
    }

    #[test]
    fn randomized_is_reproducible() {
        let a = min_bridges_randomized(4, 4, 3, 8, 42).unwrap();
        let b = min_bridges_randomized(4, 4, 3, 8, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn theorem_rows() {
        let check = check_theorem_row(2, 2, 1, 1_000_000).unwrap();
        assert_eq!(check.agrees, Some(true));
        assert_eq!(check.theorem, Threshold::Exact(4));

        let check = check_theorem_row(3, 3, 2, 1_000_000).unwrap();
        assert_eq!(check.agrees, Some(true));
        assert_eq!(check.oracle.min_bridges, Some(6));

        let check = check_theorem_row(4, 4, 4, 1_000_000).unwrap();
        assert_eq!(check.theorem, Threshold::Interval { lower: 3, upper: 6 });
        assert_eq!(check.agrees, Some(true));

        assert!(check_theorem_row(3, 2, 2, 10).is_err());
    }
}
