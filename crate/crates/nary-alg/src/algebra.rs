//! Color n-ary algebras presented by structure constants.
//!
//! An algebra is a graded vector space with basis `e_0, ..., e_{d-1}`, a
//! degree per basis index, a bicharacter on the grading group, and a sparse
//! table mapping argument tuples to coefficient vectors. Absent tuples are
//! zero products. A closure mode can expand a generating set of tuples to
//! the full (anti)symmetrized table so an algebra can be entered by a single
//! bracket.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bicharacter::Bicharacter;
use crate::error::Error;
use crate::group::{AbelianGroup, GroupElement};
use crate::matrix::Matrix;
use crate::matrix::RrefBuilder;
use crate::scalar::{Field, Scalar};
use crate::subspace::{nullspace, Subspace};

/// How an input product table is completed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Closure {
    /// Tuples are stored exactly as given.
    None,
    /// Expand by full antisymmetry (gamma = -1, with color signs).
    Antisymmetrize,
    /// Expand by full symmetry (gamma = +1, with color signs).
    Symmetrize,
}

#[derive(Clone)]
pub struct GradedAlgebra {
    field: Field,
    dim: usize,
    arity: usize,
    group: AbelianGroup,
    degrees: Vec<GroupElement>,
    eps: Bicharacter,
    products: BTreeMap<Vec<usize>, Vec<Scalar>>,
}

impl GradedAlgebra {
    pub fn new(
        field: Field,
        dim: usize,
        arity: usize,
        group: AbelianGroup,
        degrees: Vec<GroupElement>,
        eps: Bicharacter,
        products: Vec<(Vec<usize>, Vec<Scalar>)>,
        closure: Closure,
    ) -> Result<GradedAlgebra, Error> {
        if degrees.len() != dim {
            return Err(Error::Invalid(format!(
                "{} degrees given for dimension {dim}",
                degrees.len()
            )));
        }
        for (tuple, out) in &products {
            if tuple.len() != arity {
                return Err(Error::BadProduct {
                    tuple: tuple.clone(),
                    reason: format!("tuple length {} != arity {arity}", tuple.len()),
                });
            }
            if let Some(&bad) = tuple.iter().find(|&&i| i >= dim) {
                return Err(Error::BadProduct {
                    tuple: tuple.clone(),
                    reason: format!("index {bad} out of range for dimension {dim}"),
                });
            }
            if out.len() != dim {
                return Err(Error::BadProduct {
                    tuple: tuple.clone(),
                    reason: format!("output vector length {} != dimension {dim}", out.len()),
                });
            }
        }
        let mut alg = GradedAlgebra {
            field,
            dim,
            arity,
            group,
            degrees,
            eps,
            products: BTreeMap::new(),
        };
        match closure {
            Closure::None => {
                for (tuple, out) in products {
                    if out.iter().all(Scalar::is_zero) {
                        continue;
                    }
                    if alg.products.insert(tuple.clone(), out).is_some() {
                        return Err(Error::BadProduct {
                            tuple,
                            reason: "duplicate tuple".into(),
                        });
                    }
                }
            }
            Closure::Antisymmetrize => alg.expand(products, -1)?,
            Closure::Symmetrize => alg.expand(products, 1)?,
        }
        Ok(alg)
    }

    /// Expands a generating set of products to the full gamma-commutative
    /// table. Adjacent arguments swap with the factor gamma*eps(a,b).
    fn expand(
        &mut self,
        products: Vec<(Vec<usize>, Vec<Scalar>)>,
        gamma: i64,
    ) -> Result<(), Error> {
        let gamma = self.field.from_i64(gamma);
        // canonical (sorted) representatives
        let mut canon: BTreeMap<Vec<usize>, Vec<Scalar>> = BTreeMap::new();
        for (tuple, out) in products {
            let (sorted, factor) = self.sort_factor(&tuple, &gamma);
            // [tuple] = factor * [sorted], so [sorted] = factor^-1 * [tuple]
            let inv = factor.inv();
            let value: Vec<Scalar> = out.iter().map(|c| c * &inv).collect();
            match canon.get(&sorted) {
                Some(prev) if *prev != value => {
                    return Err(Error::InconsistentClosure { tuple });
                }
                Some(_) => {}
                None => {
                    canon.insert(sorted, value);
                }
            }
        }
        // a repeated adjacent pair whose swap factor is not 1 forces zero
        for (sorted, value) in canon.iter_mut() {
            for w in sorted.windows(2) {
                if w[0] == w[1] {
                    let d = &self.degrees[w[0]];
                    let f = &gamma * &self.eps.eval(d, d);
                    if !f.is_one() && value.iter().any(|c| !c.is_zero()) {
                        return Err(Error::InconsistentClosure {
                            tuple: sorted.clone(),
                        });
                    }
                }
            }
        }
        // expand to all permutations
        for (sorted, value) in canon {
            if value.iter().all(Scalar::is_zero) {
                continue;
            }
            for perm in permutations_of(&sorted) {
                let (back, factor) = self.sort_factor(&perm, &gamma);
                debug_assert_eq!(back, sorted);
                // [perm] = factor * [sorted]
                let out: Vec<Scalar> = value.iter().map(|c| c * &factor).collect();
                match self.products.get(&perm) {
                    Some(prev) if *prev != out => {
                        return Err(Error::InconsistentClosure { tuple: perm });
                    }
                    Some(_) => {}
                    None => {
                        self.products.insert(perm, out);
                    }
                }
            }
        }
        Ok(())
    }

    /// Bubble-sorts `tuple` ascending, accumulating the product of
    /// gamma*eps(left, right) over the adjacent swaps performed. Returns the
    /// sorted tuple and the factor with `[tuple] = factor * [sorted]`.
    fn sort_factor(&self, tuple: &[usize], gamma: &Scalar) -> (Vec<usize>, Scalar) {
        let mut t = tuple.to_vec();
        let mut factor = self.field.one();
        loop {
            let mut swapped = false;
            for i in 0..t.len().saturating_sub(1) {
                if t[i] > t[i + 1] {
                    let f = &self.degrees[t[i]];
                    let g = &self.degrees[t[i + 1]];
                    factor = &factor * &(gamma * &self.eps.eval(f, g));
                    t.swap(i, i + 1);
                    swapped = true;
                }
            }
            if !swapped {
                break;
            }
        }
        (t, factor)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn degree(&self, i: usize) -> &GroupElement {
        &self.degrees[i]
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn eps(&self) -> &Bicharacter {
        &self.eps
    }

    /// Structure constants of `[e_{t_0}, ..., e_{t_{n-1}}]`, or `None` for a
    /// zero product.
    pub fn product(&self, tuple: &[usize]) -> Option<&Vec<Scalar>> {
        self.products.get(tuple)
    }

    pub fn product_vec(&self, tuple: &[usize]) -> Vec<Scalar> {
        match self.products.get(tuple) {
            Some(v) => v.clone(),
            None => vec![self.field.zero(); self.dim],
        }
    }

    pub fn stored_products(&self) -> impl Iterator<Item = (&Vec<usize>, &Vec<Scalar>)> {
        self.products.iter()
    }

    pub fn is_trivially_graded(&self) -> bool {
        self.degrees.iter().all(|d| self.group.is_zero(d))
    }

    /// Sum of the basis degrees of a tuple.
    pub fn tuple_degree(&self, tuple: &[usize]) -> GroupElement {
        self.group
            .sum(tuple.iter().map(|&i| self.degrees[i].clone()))
    }

    /// Grading compatibility plus the bicharacter axioms.
    pub fn validate(&self) -> Result<(), Error> {
        self.eps.check_axioms(&self.group)?;
        for (tuple, out) in &self.products {
            let expected = self.tuple_degree(tuple);
            for (j, c) in out.iter().enumerate() {
                if !c.is_zero() && self.degrees[j] != expected {
                    return Err(Error::GradingViolation {
                        tuple: tuple.clone(),
                        coord: j,
                        expected: expected.coords().to_vec(),
                        found: self.degrees[j].coords().to_vec(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Checks `[.., x_i, x_{i+1}, ..] = gamma eps(x_i, x_{i+1}) [.., x_{i+1}, x_i, ..]`
    /// on all basis tuples and all adjacent positions.
    pub fn is_gamma_commutative(&self, gamma: i64) -> bool {
        let gamma = self.field.from_i64(gamma);
        let n = self.arity;
        for tuple in self.all_tuples() {
            for i in 0..n.saturating_sub(1) {
                let mut swapped = tuple.clone();
                swapped.swap(i, i + 1);
                let lhs = self.product_vec(&tuple);
                let rhs = self.product_vec(&swapped);
                let f = &gamma
                    * &self
                        .eps
                        .eval(&self.degrees[tuple[i]], &self.degrees[tuple[i + 1]]);
                for (a, b) in lhs.iter().zip(&rhs) {
                    if *a != &f * b {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All arity-length index tuples, lexicographic.
    pub fn all_tuples(&self) -> TupleIter {
        TupleIter::new(self.dim, self.arity)
    }

    pub fn tuple_count(&self) -> usize {
        self.dim.pow(self.arity as u32)
    }

    /// Decodes the lexicographic tuple with the given index.
    pub fn tuple_at(&self, mut idx: usize) -> Vec<usize> {
        let mut t = vec![0; self.arity];
        for slot in (0..self.arity).rev() {
            t[slot] = idx % self.dim;
            idx /= self.dim;
        }
        t
    }

    /// Span of all products: the derived subalgebra `[T, ..., T]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let mut b = RrefBuilder::new(self.dim, self.field);
        for out in self.products.values() {
            b.insert(out.clone());
        }
        Subspace::from_builder(b)
    }

    /// The all-slot annihilator: z with `[x_1, .., z, .., x_n] = 0` for every
    /// slot and all basis tuples.
    pub fn center(&self) -> Subspace {
        if self.arity == 0 || self.dim == 0 {
            return Subspace::full(self.dim, self.field);
        }
        let contexts = self.dim.pow((self.arity - 1) as u32);
        let mut rows = RrefBuilder::new(self.dim, self.field);
        let mut ctx = vec![0usize; self.arity - 1];
        for _ in 0..contexts {
            for slot in 0..self.arity {
                // coefficient of lambda_i in coordinate j of [ctx with e_i at slot]
                let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(self.dim);
                for i in 0..self.dim {
                    let mut tuple = Vec::with_capacity(self.arity);
                    tuple.extend_from_slice(&ctx[..slot]);
                    tuple.push(i);
                    tuple.extend_from_slice(&ctx[slot..]);
                    cols.push(self.product_vec(&tuple));
                }
                for j in 0..self.dim {
                    if cols.iter().all(|c| c[j].is_zero()) {
                        continue;
                    }
                    let row: Vec<Scalar> = (0..self.dim).map(|i| cols[i][j].clone()).collect();
                    rows.insert(row);
                }
            }
            // advance context
            for slot in (0..self.arity - 1).rev() {
                ctx[slot] += 1;
                if ctx[slot] < self.dim {
                    break;
                }
                ctx[slot] = 0;
            }
        }
        nullspace(&rows.into_matrix())
    }

    /// The degrees realizable by a nonzero homogeneous map, i.e. all
    /// differences `hg(e_j) - hg(e_i)`, sorted and deduplicated.
    pub fn realizable_degrees(&self) -> Vec<GroupElement> {
        let mut set: std::collections::BTreeSet<GroupElement> = std::collections::BTreeSet::new();
        for i in 0..self.dim {
            for j in 0..self.dim {
                set.insert(self.group.sub(&self.degrees[j], &self.degrees[i]));
            }
        }
        if self.dim == 0 {
            set.insert(self.group.zero());
        }
        set.into_iter().collect()
    }

    /// Matrix of the multiplication restricted to the listed tuples,
    /// columns indexed by the tuples.
    pub fn product_matrix(&self, tuples: &[Vec<usize>]) -> Matrix {
        let mut m = Matrix::zero(self.dim, tuples.len(), self.field);
        for (c, t) in tuples.iter().enumerate() {
            let v = self.product_vec(t);
            for (r, s) in v.into_iter().enumerate() {
                *m.at_mut(r, c) = s;
            }
        }
        m
    }
}

pub struct TupleIter {
    dim: usize,
    arity: usize,
    next: Option<Vec<usize>>,
}

impl TupleIter {
    fn new(dim: usize, arity: usize) -> TupleIter {
        let next = if dim == 0 && arity > 0 {
            None
        } else {
            Some(vec![0; arity])
        };
        TupleIter { dim, arity, next }
    }
}

impl Iterator for TupleIter {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut slot = self.arity;
        loop {
            if slot == 0 {
                self.next = None;
                break;
            }
            slot -= 1;
            succ[slot] += 1;
            if succ[slot] < self.dim {
                self.next = Some(succ);
                break;
            }
            succ[slot] = 0;
        }
        Some(current)
    }
}

fn permutations_of(items: &[usize]) -> Vec<Vec<usize>> {
    // distinct permutations of a multiset, small n only
    let mut result = Vec::new();
    let mut items = items.to_vec();
    items.sort_unstable();
    loop {
        result.push(items.clone());
        // next_permutation
        let n = items.len();
        if n < 2 {
            break;
        }
        let mut i = n - 1;
        while i > 0 && items[i - 1] >= items[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while items[j] <= items[i - 1] {
            j -= 1;
        }
        items.swap(i - 1, j);
        items[i..].reverse();
    }
    result
}
