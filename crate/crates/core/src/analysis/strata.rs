use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::lang::{Atom, Interpretation, Program};

/// Strongly connected components of the dependency graph (edges from each
/// head to its subgoals), listed dependencies first. Ties between
/// independent components go to the one holding the lower atom id.
pub fn dependency_components(program: &Program) -> Vec<Interpretation> {
    let atoms: Vec<Atom> = program.atoms().into_iter().collect();
    let local = |a: &Atom| atoms.binary_search(a).expect("atom of program");
    let mut graph: DiGraph<usize, ()> = DiGraph::new();
    let nodes: Vec<_> = (0..atoms.len()).map(|i| graph.add_node(i)).collect();
    for r in program.rules() {
        for b in r.pos.iter().chain(&r.neg) {
            graph.update_edge(nodes[local(&r.head)], nodes[local(b)], ());
        }
    }
    let sccs = tarjan_scc(&graph);
    let mut component = vec![0usize; atoms.len()];
    for (c, scc) in sccs.iter().enumerate() {
        for &n in scc {
            component[graph[n]] = c;
        }
    }
    // waiting[c]: components c still depends on; dependents[d]: who waits on d
    let mut waiting: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); sccs.len()];
    let mut dependents: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); sccs.len()];
    for e in graph.raw_edges() {
        let (from, to) = (component[graph[e.source()]], component[graph[e.target()]]);
        if from != to {
            waiting[from].insert(to);
            dependents[to].insert(from);
        }
    }
    let least = |c: usize| sccs[c].iter().map(|&n| graph[n]).min().expect("nonempty");
    let mut ready: BinaryHeap<Reverse<(usize, usize)>> = (0..sccs.len())
        .filter(|&c| waiting[c].is_empty())
        .map(|c| Reverse((least(c), c)))
        .collect();
    let mut out = Vec::with_capacity(sccs.len());
    while let Some(Reverse((_, c))) = ready.pop() {
        out.push(sccs[c].iter().map(|&n| atoms[graph[n]]).collect());
        for &d in &dependents[c] {
            waiting[d].remove(&c);
            if waiting[d].is_empty() {
                ready.push(Reverse((least(d), d)));
            }
        }
    }
    out
}

/// True iff no negated subgoal lies in the same dependency component as its
/// rule's head.
pub fn is_stratified(program: &Program) -> bool {
    let components = dependency_components(program);
    program.rules().all(|r| {
        let home = components
            .iter()
            .find(|c| c.contains(r.head))
            .expect("head in a component");
        r.neg.iter().all(|&b| !home.contains(b))
    })
}
