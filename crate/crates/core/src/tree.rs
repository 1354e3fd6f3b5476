//! The rooted tree of numerical semigroups.
//!
//! The predecessor of a semigroup of positive genus adjoins its Frobenius
//! number; on compositions this decrements the last maximal part (dropping
//! a trailing zero). Children invert that step: candidate increments are
//! filtered through the full semigroup inequalities, since not every
//! candidate is admissible. Walking the tree by depth counts semigroups by
//! genus.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{NsgError, Result};
use crate::kunz::{is_nsg_parts, stabilize, Composition, GenPart, GeneralizedComposition};

/// Predecessor in the semigroup tree: decrement the last maximal part and
/// drop it when it reaches zero. Fails on the root (empty composition).
pub fn predecessor(c: &Composition) -> Result<Composition> {
    let l = c.last_maximal_index().ok_or(NsgError::Root)?;
    let mut parts = c.parts().to_vec();
    parts[l] -= 1;
    if parts[l] == 0 {
        debug_assert_eq!(l, parts.len() - 1);
        parts.pop();
    }
    let child = Composition::new(parts).expect("parts stay positive");
    debug_assert!(child.is_nsg());
    Ok(child)
}

/// Candidate child indices that pass the full semigroup check. Increments
/// are allowed at `i <= l` where `x_i` matches the last maximal part `x_l`,
/// and at `i > l` where `x_i = x_l - 1`; admissibility is then re-checked
/// outright because the candidate rule alone does not guarantee it.
fn child_indices(parts: &mut [u32]) -> Vec<usize> {
    let Some(l) = parts.iter().rposition(|&p| p == *parts.iter().max().unwrap_or(&0)) else {
        return vec![];
    };
    let xl = parts[l];
    let mut out = Vec::new();
    for i in 0..parts.len() {
        let candidate = if i <= l {
            parts[i] == xl
        } else {
            parts[i] + 1 == xl
        };
        if !candidate {
            continue;
        }
        parts[i] += 1;
        if is_nsg_parts(parts) {
            out.push(i);
        }
        parts[i] -= 1;
    }
    out
}

/// Children in the semigroup tree, deterministically ordered: for the
/// all-ones composition the appended part comes first, then increments by
/// ascending index.
pub fn children(c: &Composition) -> Vec<Composition> {
    let mut out = Vec::new();
    let mut parts = c.parts().to_vec();
    if parts.iter().all(|&p| p == 1) {
        let mut appended = parts.clone();
        appended.push(1);
        out.push(Composition::new(appended).unwrap());
    }
    for i in child_indices(&mut parts) {
        let mut child = parts.clone();
        child[i] += 1;
        out.push(Composition::new(child).unwrap());
    }
    out
}

/// Count semigroups by genus with a depth-first walk from the root, one
/// entry per genus `0..=g_max`. The frontier at a fixed depth is split
/// across the ambient rayon pool; counters are arbitrary precision.
pub fn count_by_genus(g_max: u32) -> Vec<BigUint> {
    const SPLIT_DEPTH: u32 = 12;
    let split = SPLIT_DEPTH.min(g_max);
    let mut counts = vec![BigUint::zero(); g_max as usize + 1];
    // walk the shallow layers sequentially, collecting the frontier
    let mut frontier: Vec<Vec<u32>> = Vec::new();
    walk_to_frontier(&mut Vec::new(), 0, split, &mut counts, &mut frontier);
    if split == g_max {
        counts[split as usize] += BigUint::from(frontier.len());
        return counts;
    }
    let sub = frontier
        .into_par_iter()
        .map(|mut node| {
            let mut local = vec![BigUint::zero(); g_max as usize + 1];
            walk_count(&mut node, split, g_max, &mut local);
            local
        })
        .reduce(
            || vec![BigUint::zero(); g_max as usize + 1],
            |mut acc, local| {
                for (a, b) in acc.iter_mut().zip(local) {
                    *a += b;
                }
                acc
            },
        );
    for (a, b) in counts.iter_mut().zip(sub) {
        *a += b;
    }
    counts
}

fn walk_to_frontier(
    parts: &mut Vec<u32>,
    depth: u32,
    split: u32,
    counts: &mut [BigUint],
    frontier: &mut Vec<Vec<u32>>,
) {
    if depth == split {
        frontier.push(parts.clone());
        return;
    }
    counts[depth as usize] += 1u32;
    for_each_child(parts, |p| walk_to_frontier(p, depth + 1, split, counts, frontier));
}

/// Explicit-stack depth-first count below one node (inclusive).
fn walk_count(start: &mut Vec<u32>, depth: u32, g_max: u32, counts: &mut [BigUint]) {
    let mut stack: Vec<(Vec<u32>, u32)> = vec![(std::mem::take(start), depth)];
    while let Some((mut parts, d)) = stack.pop() {
        counts[d as usize] += 1u32;
        if d == g_max {
            continue;
        }
        for_each_child(&mut parts, |p| stack.push((p.clone(), d + 1)));
    }
}

fn for_each_child(parts: &mut Vec<u32>, mut f: impl FnMut(&mut Vec<u32>)) {
    if parts.iter().all(|&p| p == 1) {
        parts.push(1);
        f(parts);
        parts.pop();
    }
    if parts.is_empty() {
        return;
    }
    for i in child_indices(parts) {
        parts[i] += 1;
        f(parts);
        parts[i] -= 1;
    }
}

/// Empirical census diagnostic: the proportion of genus-`g` semigroup
/// compositions whose parts start with `prefix`. The uniform law on fixed
/// genus has no closed form, so this walk is the reference estimate that
/// sampled laws can be compared against.
pub fn prefix_proportion_at_genus(prefix: &[u32], g_target: u32) -> f64 {
    let mut matching = 0u64;
    let mut total = 0u64;
    let mut stack: Vec<(Vec<u32>, u32)> = vec![(Vec::new(), 0)];
    while let Some((mut parts, d)) = stack.pop() {
        if d == g_target {
            total += 1;
            if parts.len() >= prefix.len() && parts[..prefix.len()] == *prefix {
                matching += 1;
            }
            continue;
        }
        for_each_child(&mut parts, |p| stack.push((p.clone(), d + 1)));
    }
    matching as f64 / total as f64
}

/// Child index set together with the componentwise descendant bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChildSet {
    /// Zero-based part indices whose increment yields a child.
    pub indices: Vec<usize>,
    /// Generalized composition `z` with `x_i <= y_i <= z_i` for every
    /// same-multiplicity descendant `y`.
    pub bounds: GeneralizedComposition,
}

/// Upper bounds on all same-multiplicity descendants: start from `x` with
/// the child positions relaxed to infinity and run the closure loop. The
/// box `x <= y <= z` contains every descendant (not every box point is a
/// descendant).
pub fn descendant_bounds(c: &Composition) -> Result<ChildSet> {
    if c.max_part().unwrap_or(0) < 2 {
        return Err(NsgError::MaxTooSmall);
    }
    let mut parts = c.parts().to_vec();
    let indices = child_indices(&mut parts);
    let m = parts.len() + 1;
    let mut z = vec![GenPart::Finite(0); m];
    for (i, &p) in parts.iter().enumerate() {
        z[i + 1] = GenPart::Finite(p as u64);
    }
    for &i in &indices {
        z[i + 1] = GenPart::Infinite;
    }
    stabilize(&mut z);
    for (i, &p) in parts.iter().enumerate() {
        if !indices.contains(&i) {
            debug_assert_eq!(z[i + 1], GenPart::Finite(p as u64));
        }
    }
    Ok(ChildSet {
        indices,
        bounds: GeneralizedComposition::new(z[1..].to_vec()),
    })
}

/// Root label of the combinatorial over-tree covering the descendants of a
/// composition: the slacks `z_i - x_i` over the child set, ordered by part
/// value and then by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverTreeLabel {
    entries: Vec<GenPart>,
}

impl OverTreeLabel {
    /// Entries must be at least 1 (or infinite).
    pub fn new(entries: Vec<GenPart>) -> Self {
        assert!(
            entries.iter().all(|e| match e {
                GenPart::Finite(v) => *v >= 1,
                GenPart::Infinite => true,
            }),
            "over-tree labels take entries in {{1,2,..}} u {{inf}}"
        );
        OverTreeLabel { entries }
    }

    pub fn entries(&self) -> &[GenPart] {
        &self.entries
    }

    /// Label attached to a composition via its descendant bounds.
    pub fn from_composition(c: &Composition) -> Result<Self> {
        let cs = descendant_bounds(c)?;
        let mut order: Vec<usize> = cs.indices.clone();
        order.sort_by_key(|&i| (c.parts()[i], i));
        let entries = order
            .into_iter()
            .map(|i| match cs.bounds.parts()[i] {
                GenPart::Finite(z) => GenPart::Finite(z - c.parts()[i] as u64),
                GenPart::Infinite => GenPart::Infinite,
            })
            .collect();
        Ok(OverTreeLabel::new(entries))
    }

    /// Children: the i-th child drops the first `i+1` entries, appending
    /// `n_i - 1` at the back unless `n_i = 1`.
    pub fn children(&self) -> Vec<OverTreeLabel> {
        (0..self.entries.len())
            .map(|i| {
                let mut entries: Vec<GenPart> = self.entries[i + 1..].to_vec();
                match self.entries[i] {
                    GenPart::Finite(1) => {}
                    GenPart::Finite(n) => entries.push(GenPart::Finite(n - 1)),
                    GenPart::Infinite => entries.push(GenPart::Infinite),
                }
                OverTreeLabel { entries }
            })
            .collect()
    }

    /// Vertex count of the decorated tree: the product of `entry + 1`.
    pub fn size(&self) -> TreeSize {
        let mut acc = BigUint::one();
        for e in &self.entries {
            match e {
                GenPart::Finite(v) => acc *= BigUint::from(v + 1),
                GenPart::Infinite => return TreeSize::Infinite,
            }
        }
        TreeSize::Finite(acc)
    }
}

/// Size of an over-tree: a vertex count or infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeSize {
    Finite(BigUint),
    Infinite,
}

impl std::fmt::Display for TreeSize {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TreeSize::Finite(n) => write!(f, "{n}"),
            TreeSize::Infinite => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kunz::all_compositions;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn label(entries: &[u64]) -> OverTreeLabel {
        OverTreeLabel::new(entries.iter().map(|&v| GenPart::Finite(v)).collect())
    }

    #[test]
    fn predecessor_examples() {
        assert_eq!(predecessor(&comp(&[2, 3])).unwrap(), comp(&[2, 2]));
        assert_eq!(predecessor(&comp(&[1, 1, 1])).unwrap(), comp(&[1, 1]));
        assert_eq!(predecessor(&comp(&[3, 1, 2])).unwrap(), comp(&[2, 1, 2]));
        assert_eq!(predecessor(&Composition::empty()), Err(NsgError::Root));
    }

    #[test]
    fn children_examples() {
        assert_eq!(
            children(&comp(&[1, 1])),
            vec![comp(&[1, 1, 1]), comp(&[2, 1]), comp(&[1, 2])]
        );
        assert_eq!(children(&comp(&[1])), vec![comp(&[1, 1]), comp(&[2])]);
        assert_eq!(children(&Composition::empty()), vec![comp(&[1])]);
        for y in children(&comp(&[2, 3])) {
            assert_eq!(predecessor(&y).unwrap(), comp(&[2, 3]));
        }
    }

    #[test]
    fn parent_child_duality_small_genus() {
        for g in 0..=12u64 {
            for parts in all_compositions(g) {
                let c = Composition::new(parts).unwrap();
                if !c.is_nsg() {
                    continue;
                }
                for y in children(&c) {
                    assert!(y.is_nsg());
                    assert_eq!(predecessor(&y).unwrap(), c);
                }
                if g >= 1 {
                    let p = predecessor(&c).unwrap();
                    assert!(children(&p).contains(&c), "{c} missing under {p}");
                }
            }
        }
    }

    #[test]
    fn count_by_genus_small_values() {
        let counts = count_by_genus(10);
        let expect: Vec<u64> = vec![1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204];
        assert_eq!(
            counts,
            expect.into_iter().map(BigUint::from).collect::<Vec<_>>()
        );
    }

    #[test]
    fn count_matches_brute_force_census() {
        let counts = count_by_genus(12);
        for g in 0..=12u64 {
            let brute = all_compositions(g)
                .filter(|parts| is_nsg_parts(parts))
                .count();
            assert_eq!(counts[g as usize], BigUint::from(brute), "genus {g}");
        }
    }

    #[test]
    fn descendant_bounds_examples() {
        // 3+1+2 relaxes both child positions to infinity
        let cs = descendant_bounds(&comp(&[3, 1, 2])).unwrap();
        assert_eq!(cs.indices, vec![0, 2]);
        assert_eq!(
            cs.bounds.parts(),
            &[GenPart::Infinite, GenPart::Finite(1), GenPart::Infinite]
        );
        let d = OverTreeLabel::from_composition(&comp(&[3, 1, 2])).unwrap();
        assert_eq!(d.entries(), &[GenPart::Infinite, GenPart::Infinite]);

        // empty child set keeps z = x
        let cs = descendant_bounds(&comp(&[1, 2])).unwrap();
        assert!(cs.indices.is_empty());
        assert_eq!(cs.bounds.parts(), &[GenPart::Finite(1), GenPart::Finite(2)]);

        assert_eq!(descendant_bounds(&comp(&[1, 1])), Err(NsgError::MaxTooSmall));
    }

    #[test]
    fn descendant_bounds_finiteness_criterion() {
        // z is all-finite exactly when the non-child indices generate Z/mZ
        for g in 2..=9u64 {
            for parts in all_compositions(g) {
                let c = Composition::new(parts).unwrap();
                if !c.is_nsg() || c.max_part().unwrap_or(0) < 2 {
                    continue;
                }
                let cs = descendant_bounds(&c).unwrap();
                let m = c.multiplicity() as u64;
                let mut d = m;
                for i in 0..c.parts().len() {
                    if !cs.indices.contains(&i) {
                        d = num_integer::gcd(d, i as u64 + 1);
                    }
                }
                assert_eq!(cs.bounds.is_finite(), d == 1, "{c}");
                assert!(cs.bounds.infinite_parts_consistent(), "{c}");
            }
        }
    }

    #[test]
    fn bound_containment_small_genus() {
        // every same-multiplicity descendant stays inside the box [x, z]
        for g in 2..=9u64 {
            for parts in all_compositions(g) {
                let c = Composition::new(parts).unwrap();
                if !c.is_nsg() || c.max_part().unwrap_or(0) < 2 {
                    continue;
                }
                let cs = descendant_bounds(&c).unwrap();
                let mut frontier = vec![c.clone()];
                while let Some(node) = frontier.pop() {
                    if node.genus() > 10 {
                        continue;
                    }
                    for y in children(&node) {
                        if y.multiplicity() != c.multiplicity() {
                            continue;
                        }
                        for (i, (&yi, &xi)) in
                            y.parts().iter().zip(c.parts()).enumerate()
                        {
                            assert!(yi >= xi, "{c} -> {y}");
                            match cs.bounds.parts()[i] {
                                GenPart::Finite(z) => assert!(
                                    (yi as u64) <= z,
                                    "{c} -> {y}: part {i} exceeds bound {z}"
                                ),
                                GenPart::Infinite => {}
                            }
                        }
                        frontier.push(y);
                    }
                }
            }
        }
    }

    #[test]
    fn prefix_proportions_behave_like_a_law() {
        let g = 18;
        let p1 = prefix_proportion_at_genus(&[1], g);
        let p2 = prefix_proportion_at_genus(&[2], g);
        let p3 = prefix_proportion_at_genus(&[3], g);
        // first parts above 3 survive at finite genus but are rare
        let rest = 1.0 - p1 - p2 - p3;
        assert!((0.0..0.1).contains(&rest), "share of first parts > 3: {rest}");
        // the uniform census law favours 2s and 3s near the start; this is
        // what separates it from the coin-toss sampler (observed p1 is
        // 0.2794 at genus 18 and still drifting)
        assert!((0.2..0.4).contains(&p1), "p1 = {p1}");
        let p21 = prefix_proportion_at_genus(&[2, 1], g);
        let p22 = prefix_proportion_at_genus(&[2, 2], g);
        let p23 = prefix_proportion_at_genus(&[2, 3], g);
        let rho2 = p21 / (p21 + p22 + p23);
        assert!((0.25..0.45).contains(&rho2), "rho([2]) = {rho2}");
        assert!(
            prefix_proportion_at_genus(&[1, 1, 3], g) == 0.0,
            "two leading 1s forbid a third part 3"
        );
    }

    #[test]
    fn overtree_example_children_and_size() {
        let root = label(&[5, 1, 3, 1, 1, 3]);
        assert_eq!(root.size(), TreeSize::Finite(BigUint::from(768u32)));
        let kids = root.children();
        let expect = [
            label(&[1, 3, 1, 1, 3, 4]),
            label(&[3, 1, 1, 3]),
            label(&[1, 1, 3, 2]),
            label(&[1, 3]),
            label(&[3]),
            label(&[2]),
        ];
        assert_eq!(kids, expect);

        assert_eq!(label(&[]).size(), TreeSize::Finite(BigUint::one()));
        assert_eq!(label(&[1]).children(), vec![label(&[])]);
        assert_eq!(label(&[2]).children(), vec![label(&[1])]);
        let inf = OverTreeLabel::new(vec![GenPart::Infinite, GenPart::Infinite]);
        assert_eq!(inf.size(), TreeSize::Infinite);
    }

    #[test]
    fn overtree_size_recursion() {
        // size(L) = 1 + sum of child sizes, on a finite sample
        let samples = [
            label(&[5, 1, 3, 1, 1, 3]),
            label(&[2, 2, 2]),
            label(&[4]),
            label(&[1, 1, 1, 1]),
            label(&[3, 5]),
        ];
        for root in samples {
            fn total(l: &OverTreeLabel) -> BigUint {
                let mut acc = BigUint::one();
                for ch in l.children() {
                    acc += total(&ch);
                }
                acc
            }
            match root.size() {
                TreeSize::Finite(n) => assert_eq!(n, total(&root)),
                TreeSize::Infinite => unreachable!(),
            }
        }
    }
}
