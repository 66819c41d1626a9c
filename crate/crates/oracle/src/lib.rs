//! Exhaustive reference computations for small graphs (n ≤ ~16), written
//! against plain edge lists and bit masks so they share no code with the
//! engines they check.

/// Adjacency masks from an edge list.
pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    assert!(n <= 20, "oracles scan all 2^n subsets");
    let mut adj = vec![0u64; n];
    for &(u, v) in edges {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

pub fn is_independent(adj: &[u64], mask: u64) -> bool {
    (0..adj.len()).all(|v| mask >> v & 1 == 0 || adj[v] & mask == 0)
}

pub fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|v| mask >> v & 1 == 1).collect()
}

/// All independent sets, as masks.
pub fn independent_sets(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let adj = adjacency(n, edges);
    (0..1u64 << n).filter(|&m| is_independent(&adj, m)).collect()
}

pub fn alpha(n: usize, edges: &[(usize, usize)]) -> usize {
    independent_sets(n, edges).iter().map(|m| m.count_ones() as usize).max().unwrap_or(0)
}

/// Ω as sorted member lists, sorted lexicographically.
pub fn omega(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let sets = independent_sets(n, edges);
    let a = sets.iter().map(|m| m.count_ones()).max().unwrap_or(0);
    let mut out: Vec<Vec<usize>> = sets.into_iter().filter(|m| m.count_ones() == a).map(members).collect();
    out.sort();
    out
}

/// Inclusion-maximal independent sets, sorted lexicographically.
pub fn maximal_independent(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let adj = adjacency(n, edges);
    let mut out: Vec<Vec<usize>> = (0..1u64 << n)
        .filter(|&m| is_independent(&adj, m))
        .filter(|&m| (0..n).all(|v| m >> v & 1 == 1 || !is_independent(&adj, m | 1 << v)))
        .map(members)
        .collect();
    out.sort();
    out
}

/// (core, corona) as masks.
pub fn core_corona(n: usize, edges: &[(usize, usize)]) -> (u64, u64) {
    let om = omega(n, edges);
    let to_mask = |s: &Vec<usize>| s.iter().fold(0u64, |m, &v| m | 1 << v);
    let core = om.iter().map(to_mask).fold(if n == 0 { 0 } else { u64::MAX >> (64 - n) }, |a, b| a & b);
    let corona = om.iter().map(to_mask).fold(0, |a, b| a | b);
    (core, corona)
}

/// μ by exhaustive enumeration of all matchings: the lowest free vertex is
/// either left unmatched or matched to each of its free neighbours.
pub fn mu(n: usize, edges: &[(usize, usize)]) -> usize {
    fn go(adj: &[u64], free: u64) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut best = go(adj, rest);
        let mut cands = adj[v] & rest;
        while cands != 0 {
            let u = cands.trailing_zeros() as usize;
            cands &= cands - 1;
            best = best.max(1 + go(adj, rest & !(1 << u)));
        }
        best
    }
    let adj = adjacency(n, edges);
    go(&adj, if n == 0 { 0 } else { u64::MAX >> (64 - n) })
}

/// Hall's condition checked on every subset of `a`: `|N(A′) ∩ b| ≥ |A′|`.
pub fn hall_holds(n: usize, edges: &[(usize, usize)], a: u64, b: u64) -> bool {
    let adj = adjacency(n, edges);
    let a_members = members(a);
    (0..1u64 << a_members.len()).all(|pick| {
        let sub: Vec<usize> =
            a_members.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).map(|(_, &v)| v).collect();
        let nb = sub.iter().fold(0u64, |m, &v| m | adj[v]) & b;
        nb.count_ones() as usize >= sub.len()
    })
}

/// Deficiency `|A′| − |N(A′) ∩ b|` of one subset.
pub fn hall_deficiency(n: usize, edges: &[(usize, usize)], subset: u64, b: u64) -> i64 {
    let adj = adjacency(n, edges);
    let nb = members(subset).iter().fold(0u64, |m, &v| m | adj[v]) & b;
    i64::from(subset.count_ones()) - i64::from(nb.count_ones())
}

/// Every proper non-empty subset of `violator` satisfies Hall.
pub fn violator_is_minimal(n: usize, edges: &[(usize, usize)], violator: u64, b: u64) -> bool {
    let vs = members(violator);
    (1..(1u64 << vs.len()) - 1).all(|pick| {
        let sub = vs.iter().enumerate().filter(|(i, _)| pick >> i & 1 == 1).fold(0u64, |m, (_, &v)| m | 1 << v);
        hall_deficiency(n, edges, sub, b) <= 0
    })
}
