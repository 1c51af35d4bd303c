//! The small catalog of n-ary algebras used throughout the test batteries:
//! the n-dimensional anticommutative algebra A_n, the perfect (n+1)-dim
//! algebra D_{n+1}, the matrix-defined family L_B, the one-dimensional
//! algebras L_alpha, and zero algebras. All are trivially graded.

use crate::algebra::{Closure, GradedAlgebra};
use crate::bicharacter::Bicharacter;
use crate::error::Error;
use crate::group::AbelianGroup;
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

fn trivially_graded(
    field: Field,
    dim: usize,
    arity: usize,
    products: Vec<(Vec<usize>, Vec<Scalar>)>,
    closure: Closure,
) -> GradedAlgebra {
    let group = AbelianGroup::trivial();
    let eps = Bicharacter::trivial(&group, field);
    let degrees = vec![group.zero(); dim];
    GradedAlgebra::new(field, dim, arity, group, degrees, eps, products, closure)
        .expect("catalog algebra construction")
}

/// A_n: dimension n, `[e_1, ..., e_n] = e_1`, fully antisymmetrized.
pub fn make_a(n: usize, field: Field) -> GradedAlgebra {
    assert!(n >= 2);
    let mut out = vec![field.zero(); n];
    out[0] = field.one();
    trivially_graded(
        field,
        n,
        n,
        vec![((0..n).collect(), out)],
        Closure::Antisymmetrize,
    )
}

/// D_{n+1}: dimension n+1 with `[e_1, .., ^e_i, .., e_{n+1}] = (-1)^{n+i+1} e_i`.
pub fn make_d(n: usize, field: Field) -> GradedAlgebra {
    make_l_b(n, &Matrix::identity(n + 1, field)).expect("identity matrix is square")
}

/// L_B: dimension n+1; the product omitting index i equals
/// `(-1)^{n+i+1}` times the i-th column of B read in the basis.
pub fn make_l_b(n: usize, b: &Matrix) -> Result<GradedAlgebra, Error> {
    assert!(n >= 2);
    let d = n + 1;
    if b.rows() != d || b.cols() != d {
        return Err(Error::ShapeMismatch(b.rows(), b.cols(), d, d));
    }
    let field = b.field();
    let mut products = Vec::with_capacity(d);
    for i in 0..d {
        // omitted index i (0-based); sign (-1)^{n + (i+1) + 1}
        let args: Vec<usize> = (0..d).filter(|&j| j != i).collect();
        let sign = field.from_i64(if (n + i) % 2 == 0 { 1 } else { -1 });
        let out: Vec<Scalar> = (0..d).map(|r| &sign * b.at(r, i)).collect();
        products.push((args, out));
    }
    Ok(trivially_graded(
        field,
        d,
        n,
        products,
        Closure::Antisymmetrize,
    ))
}

/// L_alpha: dimension 1 with `[v, ..., v] = alpha v`.
pub fn make_l_alpha(n: usize, alpha: Scalar) -> GradedAlgebra {
    let field = alpha.field();
    trivially_graded(
        field,
        1,
        n,
        vec![(vec![0; n], vec![alpha])],
        Closure::Symmetrize,
    )
}

/// The zero algebra of the given dimension and arity.
pub fn make_zero(dim: usize, arity: usize, field: Field) -> GradedAlgebra {
    trivially_graded(field, dim, arity, Vec::new(), Closure::None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_signs_match_the_displayed_rule() {
        let d4 = make_d(3, Field::Q);
        // omit i=1 (1-based): [e_2,e_3,e_4] = (-1)^{3+1+1} e_1 = -e_1
        let v = d4.product_vec(&[1, 2, 3]);
        assert_eq!(v[0], Field::Q.from_i64(-1));
        assert!(v[1..].iter().all(Scalar::is_zero));
        // omit i=4: [e_1,e_2,e_3] = (-1)^{3+4+1} e_4 = e_4
        let v = d4.product_vec(&[0, 1, 2]);
        assert_eq!(v[3], Field::Q.one());
    }

    #[test]
    fn d_equals_l_identity() {
        for n in [2usize, 3] {
            let d = make_d(n, Field::Q);
            let l = make_l_b(n, &Matrix::identity(n + 1, Field::Q)).unwrap();
            let dp: Vec<_> = d.stored_products().collect();
            let lp: Vec<_> = l.stored_products().collect();
            assert_eq!(dp, lp);
        }
    }

    #[test]
    fn a_n_is_anticommutative() {
        for n in [2usize, 3, 4] {
            let a = make_a(n, Field::Q);
            assert!(a.validate().is_ok());
            assert!(a.is_gamma_commutative(-1));
        }
    }

    #[test]
    fn l_alpha_zero_is_the_zero_algebra() {
        let l0 = make_l_alpha(3, Field::Q.zero());
        let z = make_zero(1, 3, Field::Q);
        assert_eq!(l0.stored_products().count(), z.stored_products().count());
        assert_eq!(l0.stored_products().count(), 0);
    }

    #[test]
    fn l_b_shape_checked() {
        let b = Matrix::identity(3, Field::Q);
        assert!(make_l_b(3, &b).is_err());
    }

    #[test]
    fn every_catalog_algebra_validates() {
        make_a(2, Field::Q).validate().unwrap();
        make_a(3, Field::Q).validate().unwrap();
        make_d(2, Field::Q).validate().unwrap();
        make_d(3, Field::Q).validate().unwrap();
        make_l_alpha(3, Field::Q.from_i64(5)).validate().unwrap();
        make_zero(3, 3, Field::Q).validate().unwrap();
        let b = Matrix::from_i64(
            &[&[1, 2, 0, 1], &[0, 1, 1, 0], &[3, 0, 1, 1], &[0, 0, 2, 1]],
            Field::Q,
        );
        make_l_b(3, &b).unwrap().validate().unwrap();
    }

    #[test]
    fn rank_b_equals_derived_dimension() {
        let cases = [
            Matrix::from_i64(
                &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0]],
                Field::Q,
            ),
            Matrix::from_i64(
                &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1], &[1, 0, 1, 0]],
                Field::Q,
            ),
            Matrix::from_i64(
                &[&[2, 1, 0, 0], &[1, 1, 0, 1], &[0, 3, 1, 0], &[1, 0, 0, 1]],
                Field::Q,
            ),
        ];
        for b in cases {
            let alg = make_l_b(3, &b).unwrap();
            assert_eq!(b.rank(), alg.derived_subalgebra().dim());
        }
    }
}
