//! The cascade of strongly orthogonal roots.
//!
//! Starting from the whole root system, each irreducible component
//! contributes its highest root `beta`, and the construction recurses into
//! the roots of that component orthogonal to `beta`. The resulting roots are
//! pairwise strongly orthogonal, there are `m` of them, and the product of
//! their reflections is the longest Weyl group element.

use num_traits::Zero;

use crate::exactla::{rat, RatMatrix};
use crate::rootsys::{Root, RootSystem, WeylElement};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeNode {
    pub root: Root,
    pub parent: Option<usize>,
    pub depth: usize,
}

/// Cascade roots with their recursion tree, in depth-first construction
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeTree {
    nodes: Vec<CascadeNode>,
}

impl CascadeTree {
    pub fn nodes(&self) -> &[CascadeNode] {
        &self.nodes
    }

    pub fn m(&self) -> usize {
        self.nodes.len()
    }

    pub fn to_set(&self) -> CascadeSet {
        CascadeSet {
            roots: self.nodes.iter().map(|n| n.root.clone()).collect(),
        }
    }
}

/// The cascade as an ordered set of roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeSet {
    roots: Vec<Root>,
}

impl CascadeSet {
    pub fn new(roots: Vec<Root>) -> Self {
        Self { roots }
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn m(&self) -> usize {
        self.roots.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Root> {
        self.roots.iter()
    }

    fn sorted(&self) -> Vec<Root> {
        let mut r = self.roots.clone();
        r.sort();
        r
    }

    /// Equality as sets, ignoring construction order.
    pub fn same_set(&self, other: &CascadeSet) -> bool {
        self.sorted() == other.sorted()
    }
}

/// Neither `a + b` nor `a - b` is a root.
pub fn strongly_orthogonal(a: &Root, b: &Root, rs: &RootSystem) -> Result<bool> {
    for r in [a, b] {
        if !rs.is_root(r.coords()) {
            return Err(Error::NotARoot(r.coords().to_vec()));
        }
    }
    if a == b || *a == b.neg() {
        return Err(Error::DegenerateRootPair);
    }
    Ok(!rs.is_root(a.add(b).coords()) && !rs.is_root(a.sub(b).coords()))
}

/// Order in which sibling components are expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ComponentOrder {
    /// By smallest simple-root index in the component's support.
    #[default]
    Canonical,
    Reversed,
}

pub fn compute_cascade(rs: &RootSystem) -> CascadeTree {
    compute_cascade_with_order(rs, ComponentOrder::Canonical)
}

pub fn compute_cascade_with_order(rs: &RootSystem, order: ComponentOrder) -> CascadeTree {
    let mut nodes = Vec::new();
    expand(rs, rs.roots().to_vec(), None, 0, order, &mut nodes);
    CascadeTree { nodes }
}

fn expand(
    rs: &RootSystem,
    subset: Vec<Root>,
    parent: Option<usize>,
    depth: usize,
    order: ComponentOrder,
    nodes: &mut Vec<CascadeNode>,
) {
    if subset.is_empty() {
        return;
    }
    let simples = rs
        .subsystem_simples(&subset)
        .expect("orthogonal subsystems are closed under negation");
    let mut components = rs.components(&simples);
    components.sort_by_key(|c| c.iter().flat_map(|r| r.support().collect::<Vec<_>>()).min());
    if order == ComponentOrder::Reversed {
        components.reverse();
    }
    for comp in components {
        let members: Vec<Root> = subset
            .iter()
            .filter(|phi| comp.iter().any(|s| !rs.inner_roots(phi, s).is_zero()))
            .cloned()
            .collect();
        let highest = members
            .iter()
            .filter(|r| r.is_positive())
            .max_by(|a, b| a.canonical_cmp(b))
            .expect("component has a positive root")
            .clone();
        let orthogonal: Vec<Root> = members
            .into_iter()
            .filter(|phi| rs.inner_roots(phi, &highest).is_zero())
            .collect();
        let id = nodes.len();
        nodes.push(CascadeNode {
            root: highest,
            parent,
            depth,
        });
        expand(rs, orthogonal, Some(id), depth + 1, order, nodes);
    }
}

/// Exact maximum size of a set of pairwise strongly orthogonal positive
/// roots, by branch and bound. Refuses systems of rank above `rank_limit`.
pub fn max_strongly_orthogonal_bruteforce(rs: &RootSystem, rank_limit: usize) -> Result<usize> {
    if rs.rank() > rank_limit {
        return Err(Error::BudgetExceeded {
            rank: rs.rank(),
            limit: rank_limit,
        });
    }
    let pos = rs.positive_roots();
    let n = pos.len();
    let compatible: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    i != j
                        && strongly_orthogonal(&pos[i], &pos[j], rs)
                            .expect("distinct positive roots")
                })
                .collect()
        })
        .collect();

    fn search(candidates: &[usize], size: usize, best: &mut usize, compatible: &[Vec<bool>]) {
        if size > *best {
            *best = size;
        }
        for (k, &v) in candidates.iter().enumerate() {
            if size + candidates.len() - k <= *best {
                return;
            }
            let next: Vec<usize> = candidates[k + 1..]
                .iter()
                .copied()
                .filter(|&u| compatible[v][u])
                .collect();
            search(&next, size + 1, best, compatible);
        }
    }

    let mut best = 0;
    let all: Vec<usize> = (0..n).collect();
    search(&all, 0, &mut best, &compatible);
    Ok(best)
}

/// Checks that the reflections in the cascade roots commute pairwise and
/// that their product (in the stored order and reversed) is `w0`.
pub fn verify_w0_product(rs: &RootSystem, cs: &CascadeSet) -> bool {
    let reflections: Option<Vec<WeylElement>> = cs.iter().map(|b| rs.reflection(b).ok()).collect();
    let Some(reflections) = reflections else {
        return false;
    };
    let commute = reflections.iter().enumerate().all(|(i, a)| {
        reflections[i + 1..]
            .iter()
            .all(|b| a.compose(b) == b.compose(a))
    });
    let id = WeylElement::identity(rs.rank());
    let forward = reflections.iter().fold(id.clone(), |acc, s| acc.compose(s));
    let backward = reflections.iter().rev().fold(id, |acc, s| acc.compose(s));
    let w0 = rs.longest_element();
    commute && forward == w0 && backward == w0
}

/// True iff the cascade roots are linearly independent.
pub fn cascade_independence(cs: &CascadeSet) -> bool {
    let Some(first) = cs.roots().first() else {
        return true;
    };
    let m = RatMatrix::from_fn(cs.m(), first.coords().len(), |r, c| {
        rat(i64::from(cs.roots()[r].coords()[c]))
    });
    m.rank() == cs.m()
}
