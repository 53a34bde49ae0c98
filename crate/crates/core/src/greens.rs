//! Green's relations via strongly connected components of the Cayley graphs.
//!
//! `x R y` iff `x` and `y` lie in the same strongly connected component of the
//! right Cayley graph (edges `x -> x*s`), dually for `L`, and `J` uses both
//! edge sets. Reachability is reflexive, so the same computation is correct
//! for semigroups without identity (ideals are taken in `S^1`).

use serde::Serialize;

use crate::monoid::{ElementId, FiniteMonoid};

pub type ClassId = usize;

#[derive(Clone, Debug, Serialize)]
pub struct GreensData {
    pub r_class: Vec<ClassId>,
    pub l_class: Vec<ClassId>,
    pub j_class: Vec<ClassId>,
    pub h_class: Vec<ClassId>,
    pub num_r: usize,
    pub num_l: usize,
    pub num_j: usize,
    pub num_h: usize,
    /// Row-major `num_j x num_j`; entry `(a, b)` is `J_a <= J_b`.
    j_leq: Vec<bool>,
    pub regular: Vec<bool>,
    pub idempotents: Vec<ElementId>,
}

impl GreensData {
    /// `J_a <= J_b` in the two-sided ideal order.
    pub fn j_leq(&self, a: ClassId, b: ClassId) -> bool {
        self.j_leq[a * self.num_j + b]
    }

    pub fn j_members(&self, j: ClassId) -> Vec<ElementId> {
        members(&self.j_class, j)
    }

    pub fn r_members(&self, r: ClassId) -> Vec<ElementId> {
        members(&self.r_class, r)
    }

    pub fn l_members(&self, l: ClassId) -> Vec<ElementId> {
        members(&self.l_class, l)
    }

    pub fn h_members(&self, h: ClassId) -> Vec<ElementId> {
        members(&self.h_class, h)
    }

    pub fn is_regular(&self, j: ClassId) -> bool {
        self.regular[j]
    }

    pub fn regular_j_classes(&self) -> Vec<ClassId> {
        (0..self.num_j).filter(|&j| self.regular[j]).collect()
    }

    /// `s >=_J J`, i.e. `J <= J_s`.
    pub fn above(&self, s: ElementId, j: ClassId) -> bool {
        self.j_leq(j, self.j_class[s])
    }

    /// `F(J)`: the elements not `>=_J J`, as a membership mask.
    pub fn below_mask(&self, j: ClassId) -> Vec<bool> {
        self.j_class.iter().map(|&js| !self.j_leq(j, js)).collect()
    }

    /// Pairs `(a, b)` with `J_a <= J_b`, for serialization.
    pub fn j_order_pairs(&self) -> Vec<(ClassId, ClassId)> {
        let mut out = Vec::new();
        for a in 0..self.num_j {
            for b in 0..self.num_j {
                if self.j_leq(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

fn members(classes: &[ClassId], c: ClassId) -> Vec<ElementId> {
    classes
        .iter()
        .enumerate()
        .filter(|&(_, &k)| k == c)
        .map(|(x, _)| x)
        .collect()
}

/// Iterative Tarjan over an implicit graph: node `v` has `degree` successors,
/// the `i`-th given by `succ(v, i)`. Returns component ids renumbered by least
/// member.
fn scc<F: Fn(usize, usize) -> usize>(n: usize, degree: usize, succ: F) -> (Vec<usize>, usize) {
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![UNSEEN; n];
    let mut next_index = 0;
    let mut num_comp = 0;
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(&mut (v, ref mut i)) = call.last_mut() {
            if *i < degree {
                let w = succ(v, *i);
                *i += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp[w] = num_comp;
                        if w == v {
                            break;
                        }
                    }
                    num_comp += 1;
                }
            }
        }
    }
    renumber(&comp)
}

/// Renumbers labels in order of first appearance.
pub(crate) fn renumber(labels: &[usize]) -> (Vec<usize>, usize) {
    let mut map = std::collections::HashMap::new();
    let out = labels
        .iter()
        .map(|&l| {
            let k = map.len();
            *map.entry(l).or_insert(k)
        })
        .collect();
    (out, map.len())
}

pub fn greens(s: &FiniteMonoid) -> GreensData {
    let n = s.size();
    let (r_class, num_r) = scc(n, n, |x, i| s.mul(x, i));
    let (l_class, num_l) = scc(n, n, |x, i| s.mul(i, x));
    let (j_class, num_j) = scc(n, 2 * n, |x, i| if i < n { s.mul(x, i) } else { s.mul(i - n, x) });
    let pairs: Vec<usize> = (0..n).map(|x| r_class[x] * num_l + l_class[x]).collect();
    let (h_class, num_h) = renumber(&pairs);

    // condensation of the two-sided graph, then reachability per class
    let mut edge = vec![false; num_j * num_j];
    for x in 0..n {
        for y in 0..n {
            edge[j_class[x] * num_j + j_class[s.mul(x, y)]] = true;
            edge[j_class[x] * num_j + j_class[s.mul(y, x)]] = true;
        }
    }
    let adjacency: Vec<Vec<usize>> = (0..num_j)
        .map(|a| (0..num_j).filter(|&b| a != b && edge[a * num_j + b]).collect())
        .collect();
    let mut j_leq = vec![false; num_j * num_j];
    for top in 0..num_j {
        let mut seen = vec![false; num_j];
        let mut todo = vec![top];
        seen[top] = true;
        while let Some(a) = todo.pop() {
            j_leq[a * num_j + top] = true;
            for &b in &adjacency[a] {
                if !seen[b] {
                    seen[b] = true;
                    todo.push(b);
                }
            }
        }
    }

    let idempotents = s.idempotents();
    let mut regular = vec![false; num_j];
    for &e in &idempotents {
        regular[j_class[e]] = true;
    }
    GreensData {
        r_class,
        l_class,
        j_class,
        h_class,
        num_r,
        num_l,
        num_j,
        num_h,
        j_leq,
        regular,
        idempotents,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn trivial_monoid_single_regular_class() {
        let g = greens(&zoo::trivial());
        assert_eq!(g.num_j, 1);
        assert!(g.is_regular(0));
    }

    #[test]
    fn brandt_monoid_three_layers() {
        let b = zoo::b21();
        let g = greens(&b);
        assert_eq!(g.num_j, 3);
        // 1 > {a,b,ab,ba} > 0
        let one = g.j_class[0];
        let mid = g.j_class[1];
        let zero = g.j_class[5];
        assert_eq!(g.j_members(mid), vec![1, 2, 3, 4]);
        assert!(g.j_leq(mid, one) && g.j_leq(zero, mid) && !g.j_leq(one, mid));
        assert!(g.regular.iter().all(|&r| r));
        for x in 1..5 {
            assert_eq!(g.h_members(g.h_class[x]), vec![x]);
        }
        assert_eq!(g.num_r, 4);
        assert_eq!(g.num_l, 4);
    }

    #[test]
    fn cyclic_group_is_one_h_class() {
        let g = greens(&zoo::cyclic_group(3));
        assert_eq!(g.num_j, 1);
        assert_eq!(g.num_h, 1);
    }

    #[test]
    fn nilpotent_monoid_has_irregular_classes() {
        let g = greens(&zoo::nilpotent(3));
        // {1}, {x}, {x^2}, {0}: only 1 and 0 are regular
        assert_eq!(g.num_j, 4);
        assert_eq!(g.regular.iter().filter(|&&r| r).count(), 2);
    }

    #[test]
    fn left_zero_semigroup_classes() {
        let s = crate::monoid::semigroup_from_table(vec![vec![0, 0], vec![1, 1]]).unwrap();
        let g = greens(&s);
        assert_eq!(g.num_j, 1);
        assert_eq!(g.num_r, 2);
        assert_eq!(g.num_l, 1);
    }
}
