use crate::error::{invalid, Error, Result};
use crate::par::{find_map_first, Exec};
use crate::tgraph::{AttrValue, Permutation, TemporalGraph};
use crate::wl::Partition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoWitness {
    /// `apply_permutation(a, witness) == b`; the witness is the
    /// lexicographically least such permutation.
    Isomorphic(Permutation),
    NonIsomorphic,
}

impl IsoWitness {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoWitness::Isomorphic(_))
    }

    pub fn witness(&self) -> Option<&Permutation> {
        match self {
            IsoWitness::Isomorphic(p) => Some(p),
            IsoWitness::NonIsomorphic => None,
        }
    }
}

/// Per-node invariant every isomorphism must preserve.
pub(crate) type NodeKey = (Vec<AttrValue>, Vec<usize>, Vec<usize>);

pub(crate) fn node_keys(tg: &TemporalGraph) -> Vec<NodeKey> {
    let mut inc = vec![vec![0; tg.horizon]; tg.node_count];
    let mut out = vec![vec![0; tg.horizon]; tg.node_count];
    for (&(u, v), seq) in &tg.edge_seqs {
        for (t, a) in seq.iter().enumerate() {
            if !a.is_null() {
                out[u][t] += 1;
                inc[v][t] += 1;
            }
        }
    }
    tg.node_seqs
        .iter()
        .zip(inc)
        .zip(out)
        .map(|((s, i), o)| (s.clone(), i, o))
        .collect()
}

pub(crate) fn check_limit(tg: &TemporalGraph, node_limit: usize) -> Result<()> {
    if tg.node_count > node_limit {
        return Err(Error::Unsupported(format!(
            "{} nodes exceeds the brute-force limit of {node_limit}",
            tg.node_count
        )));
    }
    Ok(())
}

/// Backtracking search for `π` with `π·a == b`, assigning `π(0), π(1), ...`
/// in order with ascending candidates.
struct Matcher<'a> {
    a: &'a TemporalGraph,
    b: &'a TemporalGraph,
    keys_a: Vec<NodeKey>,
    keys_b: Vec<NodeKey>,
}

impl<'a> Matcher<'a> {
    fn new(a: &'a TemporalGraph, b: &'a TemporalGraph) -> Self {
        Matcher {
            a,
            b,
            keys_a: node_keys(a),
            keys_b: node_keys(b),
        }
    }

    fn compatible(&self, i: usize, k: usize, map: &[usize]) -> bool {
        if self.keys_a[i] != self.keys_b[k] {
            return false;
        }
        if self.a.edge_seq(i, i) != self.b.edge_seq(k, k) {
            return false;
        }
        map.iter().enumerate().all(|(j, &m)| {
            self.a.edge_seq(i, j) == self.b.edge_seq(k, m)
                && self.a.edge_seq(j, i) == self.b.edge_seq(m, k)
        })
    }

    /// Extends `map` (images of nodes `0..map.len()`) to a full isomorphism.
    fn extend(&self, map: &mut Vec<usize>, used: &mut [bool], forced: Option<(usize, usize)>) -> bool {
        let i = map.len();
        if i == self.a.node_count {
            return true;
        }
        let candidates: Box<dyn Iterator<Item = usize>> = match forced {
            Some((fi, fk)) if fi == i => Box::new(std::iter::once(fk)),
            _ => Box::new(0..self.b.node_count),
        };
        for k in candidates {
            if used[k] || forced.is_some_and(|(fi, fk)| fk == k && fi != i) {
                continue;
            }
            if !self.compatible(i, k, map) {
                continue;
            }
            used[k] = true;
            map.push(k);
            if self.extend(map, used, forced) {
                return true;
            }
            map.pop();
            used[k] = false;
        }
        false
    }

    /// Lexicographically least isomorphism, splitting on the image of node 0.
    fn search(&self, exec: Exec, forced: Option<(usize, usize)>) -> Option<Permutation> {
        let n = self.a.node_count;
        if n == 0 {
            return Some(Permutation::identity(0));
        }
        find_map_first(exec, n, |k0| {
            if let Some((fi, fk)) = forced {
                if (fi == 0) != (fk == k0) {
                    return None;
                }
            }
            if !self.compatible(0, k0, &[]) {
                return None;
            }
            let mut used = vec![false; n];
            used[k0] = true;
            let mut map = vec![k0];
            self.extend(&mut map, &mut used, forced)
                .then(|| Permutation::new(map).expect("search builds bijections"))
        })
    }
}

fn basic_stats_differ(a: &TemporalGraph, b: &TemporalGraph) -> bool {
    if a.node_count != b.node_count
        || a.directed != b.directed
        || a.edge_seqs.len() != b.edge_seqs.len()
    {
        return true;
    }
    let mut ka = node_keys(a);
    let mut kb = node_keys(b);
    ka.sort();
    kb.sort();
    ka != kb
}

/// Exact isomorphism test for temporal graphs: one permutation must align
/// every snapshot at once.
pub fn brute_force_iso(a: &TemporalGraph, b: &TemporalGraph, node_limit: usize) -> Result<IsoWitness> {
    brute_force_iso_with(a, b, node_limit, Exec::default())
}

pub fn brute_force_iso_with(
    a: &TemporalGraph,
    b: &TemporalGraph,
    node_limit: usize,
    exec: Exec,
) -> Result<IsoWitness> {
    if a.horizon != b.horizon {
        return Err(invalid(format!(
            "cannot compare horizons {} and {}",
            a.horizon, b.horizon
        )));
    }
    if basic_stats_differ(a, b) {
        return Ok(IsoWitness::NonIsomorphic);
    }
    check_limit(a, node_limit)?;
    Ok(match Matcher::new(a, b).search(exec, None) {
        Some(p) => IsoWitness::Isomorphic(p),
        None => IsoWitness::NonIsomorphic,
    })
}

/// An automorphism sending `from` to `to`, if one exists.
pub fn automorphism_mapping(
    tg: &TemporalGraph,
    from: usize,
    to: usize,
    node_limit: usize,
) -> Result<Option<Permutation>> {
    check_limit(tg, node_limit)?;
    Ok(Matcher::new(tg, tg).search(Exec::Sequential, Some((from, to))))
}

pub fn node_orbits(tg: &TemporalGraph, node_limit: usize) -> Result<Partition> {
    node_orbits_with(tg, node_limit, Exec::default())
}

/// Automorphism orbits. Every pair of nodes with equal invariants that is not
/// already merged is settled by a constrained exhaustive search; each
/// automorphism found merges all of its cycles.
pub fn node_orbits_with(tg: &TemporalGraph, node_limit: usize, exec: Exec) -> Result<Partition> {
    check_limit(tg, node_limit)?;
    let n = tg.node_count;
    let keys = node_keys(tg);
    let matcher = Matcher::new(tg, tg);
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if keys[i] != keys[j] || find(&mut parent, i) == find(&mut parent, j) {
                continue;
            }
            if let Some(auto) = matcher.search(exec, Some((i, j))) {
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, auto.apply(x)));
                    parent[a] = b;
                }
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    Ok(Partition::from_colors(&roots))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_csl, gen_dyncsl_sample, gen_foodweb, gen_random_temporal, item_rng, FoodWebNode};
    use crate::tgraph::{aggregate, apply_permutation};

    fn one_step_csl(n: usize, s: usize) -> TemporalGraph {
        aggregate(&[gen_csl(n, s).unwrap()]).unwrap()
    }

    #[test]
    fn permuted_graph_is_found() {
        for seed in 0..10 {
            let g = gen_random_temporal(seed, 7, 2, 0.4, &[1.into(), 2.into()]).unwrap();
            let p = Permutation::random(7, &mut item_rng(seed, 9));
            let h = apply_permutation(&g, &p).unwrap();
            for exec in [Exec::Sequential, Exec::Parallel] {
                let w = brute_force_iso_with(&g, &h, 9, exec).unwrap();
                let pi = w.witness().expect("isomorphic");
                assert_eq!(apply_permutation(&g, pi).unwrap(), h);
            }
        }
    }

    #[test]
    fn witness_is_lexicographically_least_and_exec_independent() {
        let g = one_step_csl(7, 2);
        let seq = brute_force_iso_with(&g, &g, 9, Exec::Sequential).unwrap();
        let par = brute_force_iso_with(&g, &g, 9, Exec::Parallel).unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq.witness().unwrap(), &Permutation::identity(7));
    }

    #[test]
    fn csl_7_2_and_7_3_are_isomorphic() {
        let w = brute_force_iso(&one_step_csl(7, 2), &one_step_csl(7, 3), 9).unwrap();
        let pi = w.witness().unwrap();
        assert_eq!(
            apply_permutation(&one_step_csl(7, 2), pi).unwrap(),
            one_step_csl(7, 3)
        );
    }

    #[test]
    fn temporal_pair_needs_one_common_permutation() {
        let a = gen_dyncsl_sample(7, &[2, 2]).unwrap().graph;
        let b = gen_dyncsl_sample(7, &[2, 3]).unwrap().graph;
        assert_eq!(brute_force_iso(&a, &b, 9).unwrap(), IsoWitness::NonIsomorphic);
    }

    #[test]
    fn limits_and_fast_paths() {
        let big = TemporalGraph::new(10, 1, false);
        assert!(matches!(brute_force_iso(&big, &big, 9), Err(Error::Unsupported(_))));
        assert!(matches!(node_orbits(&big, 9), Err(Error::Unsupported(_))));
        // size mismatch is decided without search, even above the limit
        let small = TemporalGraph::new(3, 1, false);
        assert_eq!(brute_force_iso(&big, &small, 9).unwrap(), IsoWitness::NonIsomorphic);
        let other_t = TemporalGraph::new(3, 2, false);
        assert!(brute_force_iso(&small, &other_t, 9).is_err());
    }

    #[test]
    fn orbits() {
        let fw = gen_foodweb();
        let o = node_orbits(&fw, 9).unwrap();
        use FoodWebNode::*;
        assert!(o.same_class(Lynx.index(), Orca.index()));
        assert!(o.same_class(Hare.index(), Penguin.index()));
        assert!(o.same_class(Plant.index(), Fish.index()));
        assert_eq!(o.class_count(), 3);

        let empty = TemporalGraph::new(5, 2, false);
        assert_eq!(node_orbits(&empty, 9).unwrap().class_count(), 1);

        let mut path = TemporalGraph::new(3, 1, false);
        path.set_edge_seq(0, 1, vec![1.into()]).unwrap();
        path.set_edge_seq(1, 2, vec![1.into()]).unwrap();
        assert_eq!(
            node_orbits(&path, 9).unwrap(),
            Partition::from_classes(vec![vec![0, 2], vec![1]])
        );
    }

    #[test]
    fn automorphism_mapping_respects_constraint() {
        let fw = gen_foodweb();
        let p = automorphism_mapping(&fw, 0, 3, 9).unwrap().unwrap();
        assert_eq!(p.apply(0), 3);
        assert_eq!(apply_permutation(&fw, &p).unwrap(), fw);
        assert!(automorphism_mapping(&fw, 0, 1, 9).unwrap().is_none());
    }
}
