use crate::lang::{Atom, Interpretation, Program};

/// A set `S` such that every rule keeps positive subgoals on its head's side
/// of `S` and negated subgoals on the other side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signing(pub Interpretation);

impl Signing {
    pub fn set(&self) -> &Interpretation {
        &self.0
    }

    /// Checks the signing conditions rule by rule.
    pub fn is_valid_for(&self, program: &Program) -> bool {
        is_signing(program, &self.0)
    }
}

pub fn is_signing(program: &Program, s: &Interpretation) -> bool {
    program.rules().all(|r| {
        if s.contains(r.head) {
            r.pos.iter().all(|&b| s.contains(b)) && r.neg.iter().all(|&b| !s.contains(b))
        } else {
            r.pos.iter().all(|&b| !s.contains(b)) && r.neg.iter().all(|&b| s.contains(b))
        }
    })
}

/// Union-find where each node stores its parity relative to its parent.
struct ParityUnionFind {
    parent: Vec<usize>,
    parity: Vec<bool>,
    rank: Vec<u8>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n).collect(),
            parity: vec![false; n],
            rank: vec![0; n],
        }
    }

    /// Root of `x` and the parity of `x` relative to it.
    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, up) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= up;
        (root, self.parity[x])
    }

    /// Records `parity(x) ^ parity(y) == differ`. Returns false on conflict.
    fn union(&mut self, x: usize, y: usize, differ: bool) -> bool {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return (px ^ py) == differ;
        }
        let (child, root) = if self.rank[rx] < self.rank[ry] {
            (rx, ry)
        } else {
            (ry, rx)
        };
        self.parent[child] = root;
        self.parity[child] = px ^ py ^ differ;
        if self.rank[child] == self.rank[root] {
            self.rank[root] += 1;
        }
        true
    }
}

/// Finds a signing by parity two-coloring, or `None` when an odd constraint
/// cycle makes one impossible.
///
/// Output is canonical: in each connected group of two or more atoms, the
/// side holding the lowest atom id goes into `S`; unconstrained lone atoms
/// stay out of `S`.
pub fn find_signing(program: &Program) -> Option<Signing> {
    let atoms: Vec<Atom> = program.atoms().into_iter().collect();
    let local = |a: &Atom| atoms.binary_search(a).expect("atom of program");
    let mut uf = ParityUnionFind::new(atoms.len());
    for r in program.rules() {
        let h = local(&r.head);
        for b in &r.pos {
            if !uf.union(h, local(b), false) {
                return None;
            }
        }
        for b in &r.neg {
            if !uf.union(h, local(b), true) {
                return None;
            }
        }
    }
    let mut size = vec![0usize; atoms.len()];
    // lowest member's parity per root; atoms are visited in id order
    let mut anchor: Vec<Option<bool>> = vec![None; atoms.len()];
    let found: Vec<(usize, bool)> = (0..atoms.len()).map(|i| uf.find(i)).collect();
    for &(root, parity) in &found {
        size[root] += 1;
        anchor[root].get_or_insert(parity);
    }
    let s = found
        .iter()
        .enumerate()
        .filter(|(_, &(root, parity))| size[root] > 1 && Some(parity) == anchor[root])
        .map(|(i, _)| atoms[i])
        .collect();
    Some(Signing(s))
}
