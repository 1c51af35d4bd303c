//! A second, independent route to the operator-space dimensions: instead of
//! assembling equation rows, evaluate the defining equations directly on
//! every unit-matrix unknown over all basis tuples, stack the residuals as
//! columns, and compare nullities with the solver.

mod common;

use common::{catalog_corpus, q};
use nary_alg::homs::matrix_unit;
use nary_alg::matrix::Matrix;
use nary_alg::opspace::{operator_space, OperatorClass};
use nary_alg::subspace::nullspace;
use nary_alg::{GradedAlgebra, GroupElement, Scalar};

/// Bracket with an explicit vector substituted in one slot, computed only
/// from the product table.
fn bracket_with(alg: &GradedAlgebra, tuple: &[usize], slot: usize, v: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![q().zero(); alg.dim()];
    let mut t = tuple.to_vec();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        t[slot] = k;
        if let Some(p) = alg.product(&t) {
            for (o, x) in out.iter_mut().zip(p) {
                if !x.is_zero() {
                    let add = c * x;
                    *o += &add;
                }
            }
        }
    }
    out
}

fn apply(map: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    map.apply(v)
}

/// The stacked residual of the class equations for an explicit tuple of
/// maps, one block of coordinates per (basis tuple, equation, output coord).
fn residual(
    alg: &GradedAlgebra,
    class: OperatorClass,
    theta: &GroupElement,
    maps: &[Matrix],
) -> Vec<Scalar> {
    let d = alg.dim();
    let n = alg.arity();
    let mut out = Vec::new();
    for tuple in alg.all_tuples() {
        let mut prefix = Vec::with_capacity(n);
        let mut acc = alg.group().zero();
        for s in 0..n {
            prefix.push(alg.eps().eval(theta, &acc));
            acc = alg.group().add(&acc, alg.degree(tuple[s]));
        }
        let whole = alg.product_vec(&tuple);
        let image = |m: &Matrix, i: usize| -> Vec<Scalar> { m.col_vec(i) };
        match class {
            OperatorClass::Derivation
            | OperatorClass::Quasiderivation
            | OperatorClass::GeneralizedDerivation => {
                let outer = match class {
                    OperatorClass::Derivation => &maps[0],
                    OperatorClass::Quasiderivation => &maps[1],
                    _ => &maps[n],
                };
                let mut lhs = vec![q().zero(); d];
                for s in 0..n {
                    let inner = match class {
                        OperatorClass::GeneralizedDerivation => &maps[s],
                        _ => &maps[0],
                    };
                    let term = bracket_with(alg, &tuple, s, &image(inner, tuple[s]));
                    for (l, t) in lhs.iter_mut().zip(&term) {
                        let add = &prefix[s] * t;
                        *l += &add;
                    }
                }
                let rhs = apply(outer, &whole);
                out.extend(lhs.iter().zip(&rhs).map(|(l, r)| l - r));
            }
            OperatorClass::Centroid => {
                let rhs = apply(&maps[0], &whole);
                for s in 0..n {
                    let term = bracket_with(alg, &tuple, s, &image(&maps[0], tuple[s]));
                    out.extend(term.iter().zip(&rhs).map(|(t, r)| &(&prefix[s] * t) - r));
                }
            }
            OperatorClass::Quasicentroid => {
                let first = bracket_with(alg, &tuple, 0, &image(&maps[0], tuple[0]));
                for s in 1..n {
                    let term = bracket_with(alg, &tuple, s, &image(&maps[0], tuple[s]));
                    out.extend(first.iter().zip(&term).map(|(f, t)| f - &(&prefix[s] * t)));
                }
            }
            OperatorClass::CentralDerivation => {
                for s in 0..n {
                    out.extend(bracket_with(alg, &tuple, s, &image(&maps[0], tuple[s])));
                }
                out.extend(apply(&maps[0], &whole));
            }
            OperatorClass::Endomorphism => {}
        }
    }
    // homogeneity penalties: forbidden entries must vanish
    for m in maps {
        for r in 0..d {
            for c in 0..d {
                if *alg.degree(r) != alg.group().add(alg.degree(c), theta) {
                    out.push(m.at(r, c).clone());
                }
            }
        }
    }
    out
}

/// Nullity of the residual map, computed column by column on unit unknowns.
fn oracle_dim(alg: &GradedAlgebra, class: OperatorClass, theta: &GroupElement) -> usize {
    let d = alg.dim();
    let mcount = class.map_count(alg.arity());
    let width = mcount * d * d;
    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(width);
    for b in 0..mcount {
        for r in 0..d {
            for c in 0..d {
                let mut maps = vec![Matrix::zero(d, d, q()); mcount];
                maps[b] = matrix_unit(c, r, d, q());
                cols.push(residual(alg, class, theta, &maps));
            }
        }
    }
    let rows = cols.first().map_or(0, Vec::len);
    let mut system = Matrix::zero(rows, width, q());
    for (c, col) in cols.into_iter().enumerate() {
        for (r, v) in col.into_iter().enumerate() {
            *system.at_mut(r, c) = v;
        }
    }
    nullspace(&system).dim()
}

#[test]
fn solver_dimensions_match_the_residual_oracle() {
    for (name, alg) in catalog_corpus() {
        // the heavy generalized-derivation systems are exercised on the
        // smaller members only
        let classes: Vec<OperatorClass> = if alg.dim() <= 3 {
            OperatorClass::ALL.to_vec()
        } else {
            vec![
                OperatorClass::Derivation,
                OperatorClass::Quasiderivation,
                OperatorClass::Centroid,
                OperatorClass::Quasicentroid,
                OperatorClass::CentralDerivation,
            ]
        };
        for class in classes {
            for theta in alg.realizable_degrees() {
                let solver = operator_space(&alg, class, &theta).dim();
                let oracle = oracle_dim(&alg, class, &theta);
                assert_eq!(
                    solver,
                    oracle,
                    "{name}: {} at {:?}",
                    class.name(),
                    theta.coords()
                );
            }
        }
    }
}

#[test]
fn derivations_of_a3_via_oracle() {
    let a3 = nary_alg::catalog::make_a(3, q());
    let theta = a3.group().zero();
    assert_eq!(oracle_dim(&a3, OperatorClass::Derivation, &theta), 6);
    assert_eq!(
        operator_space(&a3, OperatorClass::Derivation, &theta).dim(),
        6
    );
}

#[test]
fn graded_solver_matches_oracle_on_a_super_algebra() {
    use nary_alg::algebra::Closure;
    use nary_alg::{AbelianGroup, Bicharacter};
    let g = AbelianGroup::z2();
    let eps = Bicharacter::super_sign(q());
    let alg = GradedAlgebra::new(
        q(),
        3,
        2,
        g.clone(),
        vec![
            g.element(&[0]).unwrap(),
            g.element(&[1]).unwrap(),
            g.element(&[1]).unwrap(),
        ],
        eps,
        vec![
            (vec![1, 2], vec![q().one(), q().zero(), q().zero()]),
            (vec![1, 1], vec![q().zero(), q().zero(), q().zero()]),
        ],
        Closure::Antisymmetrize,
    )
    .unwrap();
    alg.validate().unwrap();
    for class in OperatorClass::ALL {
        for theta in alg.realizable_degrees() {
            assert_eq!(
                operator_space(&alg, class, &theta).dim(),
                oracle_dim(&alg, class, &theta),
                "{} at {:?}",
                class.name(),
                theta.coords()
            );
        }
    }
}
