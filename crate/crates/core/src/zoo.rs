//! Builtin monoids, groups and categories with stable tables.

use crate::category::FiniteCategory;
use crate::error::{Error, Result};
use crate::monoid::{monoid_from_generators, FiniteMonoid, DEFAULT_GENERATOR_CAP};

pub enum ZooEntry {
    Monoid(FiniteMonoid),
    Category(FiniteCategory),
}

impl ZooEntry {
    pub fn to_json(&self) -> String {
        match self {
            ZooEntry::Monoid(m) => m.to_json(),
            ZooEntry::Category(c) => c.to_json(),
        }
    }
}

pub const MONOID_NAMES: &[&str] = &[
    "trivial",
    "u1",
    "c2",
    "c3",
    "c4",
    "c5",
    "c6",
    "s3",
    "d4",
    "q8",
    "c2xc2",
    "b21",
    "a21",
    "t2",
    "t3",
    "nil2",
    "nil3",
    "left_zero",
    "c2z",
    "c3z",
    "cyclic_monoid_2_2",
    "a4",
    "s4",
    "a5",
];

pub const CATEGORY_NAMES: &[&str] = &[
    "trivial_cat",
    "two_object_arrow_cat",
    "c2_with_trivial",
    "parallel_arrows",
    "chain3",
    "groupoid_c2",
];

pub fn lookup(name: &str) -> Result<ZooEntry> {
    let monoid = match name {
        "trivial" => Some(trivial()),
        "u1" => Some(u1()),
        "s3" => Some(s3()),
        "d4" => Some(dihedral(4)),
        "q8" => Some(q8()),
        "c2xc2" => Some(c2xc2()),
        "b21" => Some(b21()),
        "a21" => Some(a21()),
        "t2" => Some(full_transformations(2)),
        "t3" => Some(full_transformations(3)),
        "nil2" => Some(nilpotent(2)),
        "nil3" => Some(nilpotent(3)),
        "left_zero" => Some(left_zero_monoid()),
        "c2z" => Some(cyclic_group(2).with_adjoined_zero()),
        "c3z" => Some(cyclic_group(3).with_adjoined_zero()),
        "cyclic_monoid_2_2" => Some(cyclic_monoid(2, 2)),
        "a4" => Some(alternating(4)),
        "s4" => Some(symmetric(4)),
        "a5" => Some(alternating(5)),
        _ => name
            .strip_prefix('c')
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| (1..=64).contains(&n))
            .map(cyclic_group),
    };
    if let Some(m) = monoid {
        return Ok(ZooEntry::Monoid(m));
    }
    let category = match name {
        "trivial_cat" => trivial_category(),
        "two_object_arrow_cat" => two_object_arrow_category(),
        "c2_with_trivial" => c2_with_trivial(),
        "parallel_arrows" => parallel_arrows(),
        "chain3" => chain3(),
        "groupoid_c2" => groupoid_c2(),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(ZooEntry::Category(category))
}

/// Builtin monoids with at most `bound` elements, with their names.
pub fn builtin_monoids(bound: usize) -> Vec<(String, FiniteMonoid)> {
    MONOID_NAMES
        .iter()
        .filter_map(|&n| match lookup(n) {
            Ok(ZooEntry::Monoid(m)) if m.size() <= bound => Some((n.to_string(), m)),
            _ => None,
        })
        .collect()
}

pub fn builtin_categories() -> Vec<(String, FiniteCategory)> {
    CATEGORY_NAMES
        .iter()
        .map(|&n| match lookup(n) {
            Ok(ZooEntry::Category(c)) => (n.to_string(), c),
            _ => unreachable!("category names resolve to categories"),
        })
        .collect()
}

fn from_fn(size: usize, identity: Option<usize>, f: impl Fn(usize, usize) -> usize) -> FiniteMonoid {
    let rows = (0..size).map(|x| (0..size).map(|y| f(x, y)).collect()).collect();
    FiniteMonoid::from_table(rows, identity).expect("zoo tables are valid")
}

/// Monoid on the given self-maps (closed under composition, first map the
/// identity), multiplied left to right.
fn from_maps(maps: &[Vec<usize>]) -> FiniteMonoid {
    from_fn(maps.len(), Some(0), |x, y| {
        let prod: Vec<usize> = maps[x].iter().map(|&i| maps[y][i]).collect();
        maps.iter().position(|m| *m == prod).expect("maps are closed")
    })
}

pub fn trivial() -> FiniteMonoid {
    from_fn(1, Some(0), |_, _| 0)
}

/// `{1, 0}`.
pub fn u1() -> FiniteMonoid {
    from_fn(2, Some(0), |x, y| x.max(y))
        .with_labels(vec!["1", "0"])
        .unwrap()
}

pub fn cyclic_group(n: usize) -> FiniteMonoid {
    from_fn(n, Some(0), |x, y| (x + y) % n)
}

/// `⟨x | x^(index + period) = x^index⟩`; element `i` is `x^i`.
pub fn cyclic_monoid(index: usize, period: usize) -> FiniteMonoid {
    let n = index + period;
    let reduce = |k: usize| if k < n { k } else { index + (k - index) % period };
    from_fn(n, Some(0), |x, y| reduce(x + y))
}

/// `⟨x | x^k = 0⟩` with identity: `1, x, ..., x^(k-1), 0`.
pub fn nilpotent(k: usize) -> FiniteMonoid {
    from_fn(k + 1, Some(0), |x, y| (x + y).min(k))
}

/// `{1, l0, l1}` with `l x = l` for `l ≠ 1`.
pub fn left_zero_monoid() -> FiniteMonoid {
    from_fn(3, Some(0), |x, y| if x == 0 { y } else { x })
}

/// The six-element Brandt monoid `{1, a, b, ab, ba, 0}`.
pub fn b21() -> FiniteMonoid {
    let maps = [
        vec![0, 1, 2],
        vec![1, 2, 2],
        vec![2, 0, 2],
        vec![0, 2, 2],
        vec![2, 1, 2],
        vec![2, 2, 2],
    ];
    from_maps(&maps)
        .with_labels(vec!["1", "a", "b", "ab", "ba", "0"])
        .unwrap()
}

/// Aperiodic Brandt monoid: `M⁰(1, 2, 2, [[1,1],[1,0]])` with identity.
/// Element `1 + 2i + j` is `(i, j)`; 5 is zero.
pub fn a21() -> FiniteMonoid {
    let c = [[true, true], [true, false]];
    from_fn(6, Some(0), |x, y| match (x, y) {
        (0, y) => y,
        (x, 0) => x,
        (5, _) | (_, 5) => 5,
        (x, y) => {
            let (i, j) = ((x - 1) / 2, (x - 1) % 2);
            let (k, l) = ((y - 1) / 2, (y - 1) % 2);
            if c[j][k] {
                1 + 2 * i + l
            } else {
                5
            }
        }
    })
}

pub fn full_transformations(n: usize) -> FiniteMonoid {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push((0..n).map(|i| (i + 1) % n).collect());
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        gens.push(swap);
        let mut collapse: Vec<usize> = (0..n).collect();
        collapse[1] = 0;
        gens.push(collapse);
    }
    monoid_from_generators(n, &gens, DEFAULT_GENERATOR_CAP)
        .expect("small")
        .monoid
}

pub fn t2() -> FiniteMonoid {
    full_transformations(2)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

/// All permutations of `n` points in lexicographic order.
pub fn symmetric(n: usize) -> FiniteMonoid {
    from_maps(&permutations(n))
}

pub fn alternating(n: usize) -> FiniteMonoid {
    let even: Vec<_> = permutations(n).into_iter().filter(|p| is_even(p)).collect();
    from_maps(&even)
}

/// `S₃` as `id, (012), (021), (01), (02), (12)`.
pub fn s3() -> FiniteMonoid {
    from_maps(&[
        vec![0, 1, 2],
        vec![1, 2, 0],
        vec![2, 0, 1],
        vec![1, 0, 2],
        vec![2, 1, 0],
        vec![0, 2, 1],
    ])
}

/// Rotations `0..n`, then reflections `n..2n`.
pub fn dihedral(n: usize) -> FiniteMonoid {
    let mut maps: Vec<Vec<usize>> = (0..n).map(|r| (0..n).map(|i| (i + r) % n).collect()).collect();
    maps.extend((0..n).map(|r| (0..n).map(|i| (n + r - i) % n).collect::<Vec<_>>()));
    from_maps(&maps)
}

/// `1, -1, i, -i, j, -j, k, -k`.
pub fn q8() -> FiniteMonoid {
    // unit products on {1, i, j, k} as (sign, unit)
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    from_fn(8, Some(0), |x, y| {
        let (u, v) = (x / 2, y / 2);
        let (neg, w) = UNIT[u][v];
        let sign = (x % 2 == 1) ^ (y % 2 == 1) ^ neg;
        2 * w + sign as usize
    })
}

pub fn c2xc2() -> FiniteMonoid {
    cyclic_group(2).direct_product(&cyclic_group(2))
}

pub fn trivial_category() -> FiniteCategory {
    FiniteCategory::new(1, vec![(0, 0)], vec![0], |_, _| Some(0)).unwrap()
}

/// Identities `0, 1` and `u: 0 -> 1` as arrow 2.
pub fn two_object_arrow_category() -> FiniteCategory {
    let arrows = vec![(0, 0), (1, 1), (0, 1)];
    FiniteCategory::new(2, arrows.clone(), vec![0, 1], |i, j| {
        (arrows[i].1 == arrows[j].0).then_some(if i == 0 || i == 1 { j } else { i })
    })
    .unwrap()
}

/// `C₂ = {0, 1}` at object 0 and the trivial monoid `{2}` at object 1.
pub fn c2_with_trivial() -> FiniteCategory {
    let arrows = vec![(0, 0), (0, 0), (1, 1)];
    FiniteCategory::new(2, arrows.clone(), vec![0, 2], |i, j| {
        (arrows[i].1 == arrows[j].0).then_some(if i == 2 { 2 } else { i ^ j })
    })
    .unwrap()
}

/// Identities `0, 1` and two arrows `2, 3: 0 -> 1`.
pub fn parallel_arrows() -> FiniteCategory {
    let arrows = vec![(0, 0), (1, 1), (0, 1), (0, 1)];
    FiniteCategory::new(2, arrows.clone(), vec![0, 1], |i, j| {
        (arrows[i].1 == arrows[j].0).then_some(if i <= 1 { j } else { i })
    })
    .unwrap()
}

/// `f: 0 -> 1` (3), `g: 1 -> 2` (4), `fg: 0 -> 2` (5).
pub fn chain3() -> FiniteCategory {
    let arrows = vec![(0, 0), (1, 1), (2, 2), (0, 1), (1, 2), (0, 2)];
    FiniteCategory::new(3, arrows.clone(), vec![0, 1, 2], |i, j| {
        if arrows[i].1 != arrows[j].0 {
            return None;
        }
        Some(match (i, j) {
            (i, j) if i <= 2 => j,
            (i, j) if j <= 2 => i,
            _ => 5,
        })
    })
    .unwrap()
}

/// Connected groupoid on two objects with vertex group `C₂`; arrow
/// `(2i + j) * 2 + g` is `(i, g, j)`.
pub fn groupoid_c2() -> FiniteCategory {
    let arrows: Vec<_> = (0..8).map(|a| ((a / 2) / 2, (a / 2) % 2)).collect();
    FiniteCategory::new(2, arrows.clone(), vec![0, 6], |x, y| {
        let ((i, j), (k, l)) = (arrows[x], arrows[y]);
        (j == k).then(|| (2 * i + l) * 2 + ((x % 2) ^ (y % 2)))
    })
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let expected = [
            ("trivial", 1),
            ("u1", 2),
            ("c4", 4),
            ("s3", 6),
            ("d4", 8),
            ("q8", 8),
            ("b21", 6),
            ("a21", 6),
            ("t2", 4),
            ("t3", 27),
            ("nil3", 4),
            ("a4", 12),
            ("s4", 24),
            ("a5", 60),
            ("cyclic_monoid_2_2", 4),
        ];
        for (name, size) in expected {
            match lookup(name).unwrap() {
                ZooEntry::Monoid(m) => assert_eq!(m.size(), size, "{name}"),
                ZooEntry::Category(_) => panic!("{name}"),
            }
        }
        assert!(matches!(lookup("nope"), Err(Error::UnknownName(_))));
    }

    #[test]
    fn brandt_relations() {
        let b = b21();
        let (a, bb, ab, ba, z) = (1, 2, 3, 4, 5);
        assert_eq!(b.mul(a, bb), ab);
        assert_eq!(b.mul(bb, a), ba);
        assert_eq!(b.mul(b.mul(a, bb), a), a);
        assert_eq!(b.mul(b.mul(bb, a), bb), bb);
        assert_eq!(b.mul(a, a), z);
        assert_eq!(b.mul(bb, bb), z);
    }

    #[test]
    fn groups_are_groups() {
        for m in [s3(), q8(), dihedral(4), c2xc2(), alternating(4), symmetric(4)] {
            assert!(m.is_group());
        }
        let q = q8();
        assert_eq!(q.mul(2, 2), 1);
        assert_eq!(q.mul(2, 4), 6);
        assert_eq!(q.mul(4, 2), 7);
    }

    #[test]
    fn json_round_trip() {
        for name in MONOID_NAMES.iter().chain(CATEGORY_NAMES) {
            let entry = lookup(name).unwrap();
            match entry {
                ZooEntry::Monoid(m) => assert_eq!(FiniteMonoid::from_json(&m.to_json()).unwrap(), m),
                ZooEntry::Category(c) => assert_eq!(FiniteCategory::from_json(&c.to_json()).unwrap(), c),
            }
        }
    }
}
