//! Rees matrix coordinates `M⁰(G_J, A, B, C)` for a regular J-class, with the
//! projections `η` and `ψ`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::greens::{ClassId, GreensData};
use crate::groups::{cosets, CosetTable, FiniteGroup, Subgroup};
use crate::lh::maximal_subgroup;
use crate::monoid::{ElementId, FiniteMonoid};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ReesElement {
    Zero,
    Triple { row: usize, elem: usize, col: usize },
}

/// Which legal representatives to use. Only [`RepChoice::Least`] is
/// canonical; the other exists to exercise choice-independence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RepChoice {
    #[default]
    Least,
    Greatest,
}

#[derive(Clone, Debug)]
pub struct ReesRepresentation {
    pub jclass: ClassId,
    pub base_idempotent: ElementId,
    pub group: FiniteGroup,
    /// Group element index -> element of the parent.
    pub group_elements: Vec<ElementId>,
    /// `A`: R-class ids of the J-class.
    pub rows: Vec<ClassId>,
    /// `B`: L-class ids of the J-class.
    pub cols: Vec<ClassId>,
    pub row_reps: Vec<ElementId>,
    pub col_reps: Vec<ElementId>,
    /// `C[b][a]`, a group index or `None` for zero.
    pub matrix: Vec<Vec<Option<usize>>>,
    coord: Vec<Option<(usize, usize, usize)>>,
    uncoord: Vec<ElementId>,
    in_domain: Vec<bool>,
}

pub fn rees_representation(s: &FiniteMonoid, g: &GreensData, j: ClassId) -> Result<ReesRepresentation> {
    rees_representation_with(s, g, j, RepChoice::Least)
}

pub fn rees_representation_with(
    s: &FiniteMonoid,
    g: &GreensData,
    j: ClassId,
    choice: RepChoice,
) -> Result<ReesRepresentation> {
    if j >= g.num_j {
        return Err(Error::IndexOutOfRange {
            index: j,
            size: g.num_j,
        });
    }
    if !g.is_regular(j) {
        return Err(Error::NotRegular(j));
    }
    let mut members = g.j_members(j);
    if choice == RepChoice::Greatest {
        members.reverse();
    }
    let pick = |pred: &dyn Fn(ElementId) -> bool| members.iter().copied().find(|&x| pred(x));
    let e = pick(&|x| s.is_idempotent(x)).expect("regular class has an idempotent");
    let (group, group_elements) = maximal_subgroup(s, e)?;

    let mut rows: Vec<ClassId> = Vec::new();
    let mut cols: Vec<ClassId> = Vec::new();
    let mut sorted = members.clone();
    sorted.sort_unstable();
    for &x in &sorted {
        if !rows.contains(&g.r_class[x]) {
            rows.push(g.r_class[x]);
        }
        if !cols.contains(&g.l_class[x]) {
            cols.push(g.l_class[x]);
        }
    }
    let (re, le) = (g.r_class[e], g.l_class[e]);
    let row_reps: Vec<ElementId> = rows
        .iter()
        .map(|&r| {
            if r == re {
                e
            } else {
                pick(&|x| g.r_class[x] == r && g.l_class[x] == le).unwrap()
            }
        })
        .collect();
    let col_reps: Vec<ElementId> = cols
        .iter()
        .map(|&l| {
            if l == le {
                e
            } else {
                pick(&|x| g.r_class[x] == re && g.l_class[x] == l).unwrap()
            }
        })
        .collect();

    let order = group.order();
    let mut group_index = vec![usize::MAX; s.size()];
    for (i, &x) in group_elements.iter().enumerate() {
        group_index[x] = i;
    }
    let mut coord = vec![None; s.size()];
    let mut uncoord = Vec::with_capacity(rows.len() * order * cols.len());
    for (a, &p) in row_reps.iter().enumerate() {
        for (gi, &h) in group_elements.iter().enumerate() {
            for (b, &q) in col_reps.iter().enumerate() {
                let x = s.mul(s.mul(p, h), q);
                if g.j_class[x] != j || coord[x].is_some() {
                    return Err(Error::InvariantViolation(format!(
                        "Rees coordinates are not a bijection at ({a}, {gi}, {b})"
                    )));
                }
                coord[x] = Some((a, gi, b));
                uncoord.push(x);
            }
        }
    }
    if uncoord.len() != members.len() {
        return Err(Error::InvariantViolation(
            "Rees coordinates miss part of the J-class".into(),
        ));
    }

    let matrix: Vec<Vec<Option<usize>>> = col_reps
        .iter()
        .map(|&q| {
            row_reps
                .iter()
                .map(|&p| {
                    let x = s.mul(q, p);
                    (g.j_class[x] == j).then(|| group_index[x])
                })
                .collect()
        })
        .collect();

    let in_domain = s.elements().map(|x| !g.above(x, j) || g.j_class[x] == j).collect();
    let rep = ReesRepresentation {
        jclass: j,
        base_idempotent: e,
        group,
        group_elements,
        rows,
        cols,
        row_reps,
        col_reps,
        matrix,
        coord,
        uncoord,
        in_domain,
    };
    rep.check_multiplicative(s)?;
    Ok(rep)
}

impl ReesRepresentation {
    fn check_multiplicative(&self, s: &FiniteMonoid) -> Result<()> {
        for &x in &self.uncoord {
            for &y in &self.uncoord {
                let want = self.eta(s.mul(x, y))?;
                let got = self.multiply(self.eta(x)?, self.eta(y)?);
                if want != got {
                    return Err(Error::InvariantViolation(format!("Rees product mismatch for {x}·{y}")));
                }
            }
        }
        Ok(())
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.coord.get(x).is_some_and(|c| c.is_some())
    }

    /// Elements of the J-class in coordinate order.
    pub fn members(&self) -> &[ElementId] {
        &self.uncoord
    }

    pub fn coord(&self, x: ElementId) -> Option<(usize, usize, usize)> {
        self.coord.get(x).copied().flatten()
    }

    pub fn uncoord(&self, a: usize, g: usize, b: usize) -> ElementId {
        let (order, nb) = (self.group.order(), self.cols.len());
        self.uncoord[(a * order + g) * nb + b]
    }

    /// `η: F(J) ∪ J -> J⁰`.
    pub fn eta(&self, s: ElementId) -> Result<ReesElement> {
        if s >= self.in_domain.len() || !self.in_domain[s] {
            return Err(Error::NotInDomain(s));
        }
        Ok(match self.coord[s] {
            Some((row, elem, col)) => ReesElement::Triple { row, elem, col },
            None => ReesElement::Zero,
        })
    }

    /// Product in `M⁰(G, A, B, C)`.
    pub fn multiply(&self, x: ReesElement, y: ReesElement) -> ReesElement {
        rees_product(&self.group, &self.matrix, x, y)
    }

    /// Reduction modulo a normal subgroup `N` of the group.
    pub fn reduce(&self, n: &Subgroup) -> Result<ReducedRees> {
        let table = cosets(&self.group, n)?;
        let matrix = self
            .matrix
            .iter()
            .map(|row| row.iter().map(|c| c.map(|g| table.coset_of[g])).collect())
            .collect();
        Ok(ReducedRees { table, matrix })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "jclass": self.jclass,
            "idempotent": self.base_idempotent,
            "group": self.group_elements,
            "A": self.row_reps,
            "B": self.col_reps,
            "C": self.matrix,
            "coord": self.uncoord.iter().map(|&x| {
                let (a, g, b) = self.coord[x].unwrap();
                serde_json::json!([x, a, g, b])
            }).collect::<Vec<_>>(),
        })
    }
}

fn rees_product(g: &FiniteGroup, c: &[Vec<Option<usize>>], x: ReesElement, y: ReesElement) -> ReesElement {
    match (x, y) {
        (ReesElement::Triple { row, elem: g1, col: b }, ReesElement::Triple { row: a, elem: g2, col }) => match c[b][a]
        {
            Some(m) => ReesElement::Triple {
                row,
                elem: g.mul(g.mul(g1, m), g2),
                col,
            },
            None => ReesElement::Zero,
        },
        _ => ReesElement::Zero,
    }
}

/// `M⁰(G/N, A, B, C̄)` with the projection `ψ`.
#[derive(Clone, Debug)]
pub struct ReducedRees {
    pub table: CosetTable,
    pub matrix: Vec<Vec<Option<usize>>>,
}

impl ReducedRees {
    pub fn psi(&self, x: ReesElement) -> ReesElement {
        match x {
            ReesElement::Triple { row, elem, col } => ReesElement::Triple {
                row,
                elem: self.table.coset_of[elem],
                col,
            },
            ReesElement::Zero => ReesElement::Zero,
        }
    }

    pub fn multiply(&self, x: ReesElement, y: ReesElement) -> ReesElement {
        rees_product(&self.table.quotient, &self.matrix, x, y)
    }
}

/// `ψ` for a single element; prefer [`ReesRepresentation::reduce`] in loops.
pub fn psi(rep: &ReesRepresentation, n: &Subgroup, x: ReesElement) -> Result<ReesElement> {
    Ok(rep.reduce(n)?.psi(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greens::greens;
    use crate::groups::subgroup_generated;
    use crate::zoo;

    fn rep_of(s: &FiniteMonoid, x: ElementId) -> ReesRepresentation {
        let g = greens(s);
        rees_representation(s, &g, g.j_class[x]).unwrap()
    }

    #[test]
    fn group_is_single_cell() {
        let s = zoo::s3();
        let r = rep_of(&s, 0);
        assert_eq!((r.num_rows(), r.num_cols(), r.group.order()), (1, 1, 6));
        assert_eq!(r.matrix, vec![vec![Some(r.group.identity())]]);
        for x in s.elements() {
            assert_eq!(r.coord(x), Some((0, x, 0)));
        }
    }

    #[test]
    fn brandt_middle_class() {
        let b = zoo::b21();
        let r = rep_of(&b, 1);
        assert_eq!((r.num_rows(), r.num_cols(), r.group.order()), (2, 2, 1));
        assert_eq!(r.base_idempotent, 3);
        assert_eq!(r.matrix, vec![vec![None, Some(0)], vec![Some(0), None]]);
        assert_eq!(r.eta(5).unwrap(), ReesElement::Zero);
        assert!(matches!(r.eta(0), Err(Error::NotInDomain(0))));
        for &x in r.members() {
            let (a, g, c) = r.coord(x).unwrap();
            assert_eq!(r.uncoord(a, g, c), x);
        }
    }

    #[test]
    fn base_cell_is_identity() {
        for s in [zoo::b21(), zoo::a21(), zoo::t2(), zoo::nilpotent(3)] {
            let g = greens(&s);
            for j in g.regular_j_classes() {
                for choice in [RepChoice::Least, RepChoice::Greatest] {
                    let r = rees_representation_with(&s, &g, j, choice).unwrap();
                    let (a, _, b) = r.coord(r.base_idempotent).unwrap();
                    assert_eq!(r.matrix[b][a], Some(r.group.identity()));
                }
            }
        }
    }

    #[test]
    fn zero_of_u1() {
        let u = zoo::u1();
        let r = rep_of(&u, 1);
        assert_eq!((r.num_rows(), r.num_cols(), r.group.order()), (1, 1, 1));
        assert_eq!(r.matrix, vec![vec![Some(0)]]);
    }

    #[test]
    fn null_class_rejected() {
        let s = zoo::nilpotent(3);
        let g = greens(&s);
        let j = (0..g.num_j).find(|&j| !g.is_regular(j)).unwrap();
        assert!(matches!(rees_representation(&s, &g, j), Err(Error::NotRegular(_))));
    }

    #[test]
    fn psi_on_c4() {
        let s = zoo::cyclic_group(4);
        let r = rep_of(&s, 0);
        let n = subgroup_generated(&r.group, &[2]).unwrap();
        let red = r.reduce(&n).unwrap();
        assert_eq!(red.table.quotient.order(), 2);
        let img: Vec<_> = s.elements().map(|x| red.psi(r.eta(x).unwrap())).collect();
        assert_eq!(img[0], img[2]);
        assert_ne!(img[0], img[1]);
        for x in s.elements() {
            for y in s.elements() {
                let lhs = red.psi(r.eta(s.mul(x, y)).unwrap());
                assert_eq!(lhs, red.multiply(img[x], img[y]));
            }
        }
        let whole = r.group.whole();
        assert!(psi(&r, &whole, ReesElement::Zero).is_ok());
    }
}
