//! Homogeneous linear maps of a graded algebra and the products on them.

use crate::algebra::GradedAlgebra;
use crate::bicharacter::Bicharacter;
use crate::group::GroupElement;
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

/// A linear endomorphism homogeneous of a fixed degree. Column `i` of the
/// matrix is the image of `e_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomMap {
    pub theta: GroupElement,
    pub mat: Matrix,
}

impl HomMap {
    pub fn new(theta: GroupElement, mat: Matrix) -> HomMap {
        assert_eq!(mat.rows(), mat.cols());
        HomMap { theta, mat }
    }

    pub fn zero(theta: GroupElement, dim: usize, field: Field) -> HomMap {
        HomMap::new(theta, Matrix::zero(dim, dim, field))
    }

    pub fn identity(theta: GroupElement, dim: usize, field: Field) -> HomMap {
        HomMap::new(theta, Matrix::identity(dim, field))
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.mat.apply(v)
    }

    /// Checks the homogeneity pattern against the basis degrees:
    /// a nonzero entry (j, i) needs hg(e_j) = hg(e_i) + theta.
    pub fn is_homogeneous(&self, alg: &GradedAlgebra) -> bool {
        let d = self.dim();
        for j in 0..d {
            for i in 0..d {
                if !self.mat.at(j, i).is_zero()
                    && *alg.degree(j) != alg.group().add(alg.degree(i), &self.theta)
                {
                    return false;
                }
            }
        }
        true
    }

    /// Flattened row-major coordinates in F^{d^2}.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.mat.flatten()
    }

    pub fn from_flat(theta: GroupElement, dim: usize, field: Field, data: Vec<Scalar>) -> HomMap {
        HomMap::new(theta, Matrix::from_flat(dim, dim, field, data))
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &HomMap, alg_group: &crate::group::AbelianGroup) -> HomMap {
        HomMap::new(
            alg_group.add(&self.theta, &other.theta),
            self.mat.mul(&other.mat),
        )
    }
}

/// The color commutator `[D1, D2] = D1 D2 - eps(D1, D2) D2 D1`.
pub fn color_bracket(
    d1: &HomMap,
    d2: &HomMap,
    group: &crate::group::AbelianGroup,
    eps: &Bicharacter,
) -> HomMap {
    let sign = eps.eval(&d1.theta, &d2.theta);
    let m = d1.mat.mul(&d2.mat).sub(&d2.mat.mul(&d1.mat).scale(&sign));
    HomMap::new(group.add(&d1.theta, &d2.theta), m)
}

/// The color Jordan product `D1 D2 + eps(D1, D2) D2 D1`.
pub fn jordan_product(
    d1: &HomMap,
    d2: &HomMap,
    group: &crate::group::AbelianGroup,
    eps: &Bicharacter,
) -> HomMap {
    let sign = eps.eval(&d1.theta, &d2.theta);
    let m = d1.mat.mul(&d2.mat).add(&d2.mat.mul(&d1.mat).scale(&sign));
    HomMap::new(group.add(&d1.theta, &d2.theta), m)
}

/// The matrix unit sending `e_from` to `e_to` and other basis vectors to 0.
pub fn matrix_unit(from: usize, to: usize, dim: usize, field: Field) -> Matrix {
    let mut m = Matrix::zero(dim, dim, field);
    *m.at_mut(to, from) = field.one();
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::AbelianGroup;

    fn setup() -> (AbelianGroup, Bicharacter) {
        let g = AbelianGroup::trivial();
        let eps = Bicharacter::trivial(&g, Field::Q);
        (g, eps)
    }

    #[test]
    fn bracket_with_self_is_zero() {
        let (g, eps) = setup();
        let d = HomMap::new(g.zero(), Matrix::from_i64(&[&[1, 2], &[3, 4]], Field::Q));
        assert!(color_bracket(&d, &d, &g, &eps).is_zero());
    }

    #[test]
    fn unit_commutator() {
        // [E12, E21] = E11 - E22 on a 2-dim space (standard matrix units)
        let (g, eps) = setup();
        let e12 = HomMap::new(g.zero(), matrix_unit(1, 0, 2, Field::Q));
        let e21 = HomMap::new(g.zero(), matrix_unit(0, 1, 2, Field::Q));
        assert_eq!(e12.mat, Matrix::from_i64(&[&[0, 1], &[0, 0]], Field::Q));
        let b = color_bracket(&e12, &e21, &g, &eps);
        assert_eq!(b.mat, Matrix::from_i64(&[&[1, 0], &[0, -1]], Field::Q));
    }

    #[test]
    fn jordan_with_identity_doubles() {
        let (g, eps) = setup();
        let id = HomMap::identity(g.zero(), 2, Field::Q);
        let d = HomMap::new(g.zero(), Matrix::from_i64(&[&[1, 2], &[3, 4]], Field::Q));
        let j = jordan_product(&id, &d, &g, &eps);
        assert_eq!(j.mat, d.mat.scale(&Field::Q.from_i64(2)));
    }
}
