use std::collections::{BTreeMap, VecDeque};

use petgraph::algo::{tarjan_scc, toposort};
use petgraph::graph::{DiGraph, NodeIndex};

use super::dependency::{
    dependency_profiles, profile_with_index, rules_by_head, DependencyProfile,
};
use crate::lang::{Atom, Program};
use crate::par::Execution;

/// Natural-number levels for the atoms of a program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelMapping {
    pub levels: BTreeMap<Atom, usize>,
}

impl LevelMapping {
    pub fn level(&self, atom: Atom) -> Option<usize> {
        self.levels.get(&atom).copied()
    }

    /// True iff `level(b) < level(a)` whenever `b` is in both `P_a^+` and `P_a^-`.
    pub fn is_valid_for(&self, program: &Program) -> bool {
        dependency_profiles(program, Execution::Sequential)
            .iter()
            .all(|prof| {
                prof.both()
                    .iter()
                    .all(|b| match (self.level(b), self.level(prof.atom)) {
                        (Some(lb), Some(la)) => lb < la,
                        _ => false,
                    })
            })
    }
}

/// Atoms `x0, …, xk` with each below the next and `xk` below `x0` in the
/// mixed-dependency order, so no level mapping can exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegativeCycle(pub Vec<Atom>);

/// `Err` carries the least-id atom that depends negatively on itself.
pub fn call_consistency(program: &Program) -> Result<(), Atom> {
    let index = rules_by_head(program);
    match program
        .atoms()
        .into_iter()
        .find(|&a| profile_with_index(&index, a).minus.contains(a))
    {
        Some(a) => Err(a),
        None => Ok(()),
    }
}

pub fn is_call_consistent(program: &Program) -> bool {
    call_consistency(program).is_ok()
}

/// Builds `b ≺ a` for `b ∈ P_a^+ ∩ P_a^-` and, when that order is acyclic,
/// assigns each atom the length of the longest `≺`-chain below it.
///
/// On failure returns the lexicographically least of the cycles that start
/// at the lowest atom of a cyclic component and follow shortest paths.
pub fn find_level_mapping(program: &Program) -> Result<LevelMapping, NegativeCycle> {
    find_level_mapping_with(&dependency_profiles(program, Execution::Sequential))
}

pub(crate) fn find_level_mapping_with(
    profiles: &[DependencyProfile],
) -> Result<LevelMapping, NegativeCycle> {
    let mut graph: DiGraph<Atom, ()> = DiGraph::new();
    let node: BTreeMap<Atom, NodeIndex> = profiles
        .iter()
        .map(|p| (p.atom, graph.add_node(p.atom)))
        .collect();
    for prof in profiles {
        for b in prof.both().iter() {
            graph.add_edge(node[&b], node[&prof.atom], ());
        }
    }

    let mut cycles: Vec<Vec<Atom>> = Vec::new();
    for scc in tarjan_scc(&graph) {
        let cyclic = scc.len() > 1 || graph.contains_edge(scc[0], scc[0]);
        if cyclic {
            cycles.push(shortest_cycle(&graph, &scc));
        }
    }
    if let Some(least) = cycles.into_iter().min() {
        return Err(NegativeCycle(least));
    }

    let order = toposort(&graph, None).expect("acyclic after scc check");
    let mut levels: BTreeMap<Atom, usize> = BTreeMap::new();
    for n in order {
        let level = graph
            .neighbors_directed(n, petgraph::Direction::Incoming)
            .map(|m| levels[&graph[m]] + 1)
            .max()
            .unwrap_or(0);
        levels.insert(graph[n], level);
    }
    Ok(LevelMapping { levels })
}

/// Shortest cycle through the lowest atom of `scc`, breaking ties by
/// visiting successors in ascending atom order.
fn shortest_cycle(graph: &DiGraph<Atom, ()>, scc: &[NodeIndex]) -> Vec<Atom> {
    let start = *scc.iter().min_by_key(|&&n| graph[n]).expect("nonempty scc");
    let in_scc = |n: NodeIndex| scc.contains(&n);
    let sorted_succ = |n: NodeIndex| {
        let mut v: Vec<NodeIndex> = graph.neighbors(n).filter(|&m| in_scc(m)).collect();
        v.sort_by_key(|&m| graph[m]);
        v.dedup();
        v
    };
    let mut prev: BTreeMap<NodeIndex, NodeIndex> = BTreeMap::new();
    let mut queue = VecDeque::from([start]);
    while let Some(n) = queue.pop_front() {
        for m in sorted_succ(n) {
            if m == start {
                let mut path = vec![graph[n]];
                let mut cur = n;
                while cur != start {
                    cur = prev[&cur];
                    path.push(graph[cur]);
                }
                path.reverse();
                return path;
            }
            if let std::collections::btree_map::Entry::Vacant(e) = prev.entry(m) {
                e.insert(n);
                queue.push_back(m);
            }
        }
    }
    unreachable!("strongly connected component without a cycle")
}

#[cfg(test)]
mod tests {
    use super::*;

    const DIX: &str = "a :- not b. b :- c, not a. c :- a.";
    const P1: &str = "a :- not b. b :- not a.";
    const P2: &str = "a :- not b. b :- not a. c :- a. c :- b.";

    #[test]
    fn call_consistency_examples() {
        let dix = Program::parse(DIX).unwrap();
        assert_eq!(call_consistency(&dix), Err(dix.atom("a").unwrap()));
        assert!(is_call_consistent(&Program::parse(P2).unwrap()));
        assert!(is_call_consistent(&Program::parse("").unwrap()));
    }

    #[test]
    fn p2_level_mapping() {
        let p = Program::parse(P2).unwrap();
        let lm = find_level_mapping(&p).unwrap();
        let lvl = |n| lm.level(p.atom(n).unwrap()).unwrap();
        assert_eq!((lvl("a"), lvl("b"), lvl("c")), (0, 0, 1));
        assert!(lm.is_valid_for(&p));
    }

    #[test]
    fn p1_all_level_zero() {
        let p = Program::parse(P1).unwrap();
        let lm = find_level_mapping(&p).unwrap();
        assert!(lm.levels.values().all(|&l| l == 0));
        assert_eq!(lm.levels.len(), 2);
    }

    #[test]
    fn dix_self_loop_witness() {
        let p = Program::parse(DIX).unwrap();
        let err = find_level_mapping(&p).unwrap_err();
        assert_eq!(err, NegativeCycle(vec![p.atom("a").unwrap()]));
    }

    #[test]
    fn invalid_mapping_detected() {
        let p = Program::parse(P2).unwrap();
        let mut lm = find_level_mapping(&p).unwrap();
        lm.levels.insert(p.atom("c").unwrap(), 0);
        assert!(!lm.is_valid_for(&p));
    }
}
