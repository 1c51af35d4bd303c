//! Finitely generated abelian grading groups.
//!
//! A group is a direct product of cyclic factors; order 0 marks an infinite
//! cyclic factor. Elements are integer tuples, one coordinate per factor,
//! with finite coordinates reduced to `[0, order)`.

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    orders: Vec<u64>,
}

/// An element of an [`AbelianGroup`], always kept reduced.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(pub Vec<i64>);

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl AbelianGroup {
    pub fn new(orders: Vec<u64>) -> AbelianGroup {
        AbelianGroup { orders }
    }

    /// The trivial group, used for ungraded algebras.
    pub fn trivial() -> AbelianGroup {
        AbelianGroup { orders: Vec::new() }
    }

    /// Z_2, the super grading.
    pub fn z2() -> AbelianGroup {
        AbelianGroup { orders: vec![2] }
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn factors(&self) -> usize {
        self.orders.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty() || self.orders.iter().all(|&o| o == 1)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.orders.len()])
    }

    pub fn element(&self, coords: &[i64]) -> Result<GroupElement, Error> {
        if coords.len() != self.orders.len() {
            return Err(Error::DegreeArity(coords.len(), self.orders.len()));
        }
        Ok(self.reduce(coords))
    }

    fn reduce(&self, coords: &[i64]) -> GroupElement {
        GroupElement(
            coords
                .iter()
                .zip(&self.orders)
                .map(|(&c, &o)| if o == 0 { c } else { c.rem_euclid(o as i64) })
                .collect(),
        )
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.reduce(&a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect::<Vec<_>>())
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.reduce(&a.0.iter().map(|x| -x).collect::<Vec<_>>())
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    pub fn sum(&self, elems: impl IntoIterator<Item = GroupElement>) -> GroupElement {
        elems
            .into_iter()
            .fold(self.zero(), |acc, e| self.add(&acc, &e))
    }

    pub fn is_zero(&self, a: &GroupElement) -> bool {
        a.0.iter().all(|&c| c == 0)
    }
}
