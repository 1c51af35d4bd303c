//! Closure and structure checks on operator spaces: products of basis maps,
//! containment batteries, the quasicentroid structure report, the
//! generalized-derivation decomposition, and materialization of a closed
//! operator space as a binary algebra.

use std::collections::BTreeMap;

use crate::algebra::{Closure, GradedAlgebra};
use crate::error::Error;
use crate::exec::Exec;
use crate::group::GroupElement;
use crate::homs::{color_bracket, jordan_product, HomMap};
use crate::matrix::RrefBuilder;
use crate::opspace::{operator_family_with, EndFamily, OperatorClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapProduct {
    Bracket,
    Jordan,
    Compose,
}

impl MapProduct {
    pub fn name(self) -> &'static str {
        match self {
            MapProduct::Bracket => "bracket",
            MapProduct::Jordan => "jordan",
            MapProduct::Compose => "compose",
        }
    }

    pub fn apply(self, alg: &GradedAlgebra, f: &HomMap, g: &HomMap) -> HomMap {
        match self {
            MapProduct::Bracket => color_bracket(f, g, alg.group(), alg.eps()),
            MapProduct::Jordan => jordan_product(f, g, alg.group(), alg.eps()),
            MapProduct::Compose => f.compose(g, alg.group()),
        }
    }
}

/// True when every product of a basis map of `s1` with a basis map of `s2`
/// lies in `target`, degree-wise.
pub fn closure_check(
    alg: &GradedAlgebra,
    kind: MapProduct,
    s1: &EndFamily,
    s2: &EndFamily,
    target: &EndFamily,
) -> bool {
    for f in s1.maps() {
        for g in s2.maps() {
            let p = kind.apply(alg, &f, &g);
            if !target.contains_map(&p) {
                return false;
            }
        }
    }
    true
}

/// The span of all pairwise products, degree-wise.
pub fn product_span(
    alg: &GradedAlgebra,
    kind: MapProduct,
    s1: &EndFamily,
    s2: &EndFamily,
) -> EndFamily {
    let d = s1.dim_of_maps();
    let field = s1.field();
    let mut builders: BTreeMap<GroupElement, RrefBuilder> = BTreeMap::new();
    for f in s1.maps() {
        for g in s2.maps() {
            let p = kind.apply(alg, &f, &g);
            if p.is_zero() {
                continue;
            }
            builders
                .entry(p.theta.clone())
                .or_insert_with(|| RrefBuilder::new(d * d, field))
                .insert(p.flatten());
        }
    }
    let mut fam = EndFamily::new(d, field);
    for (theta, b) in builders {
        fam.insert(theta, crate::subspace::Subspace::from_builder(b));
    }
    fam
}

/// Structure report for the quasicentroid: closure under the color bracket
/// and under composition, vanishing of brackets, and where brackets with the
/// centroid land. Guard violations are reported, never silently skipped.
#[derive(Clone, Debug)]
pub struct QcReport {
    pub qc_dim: usize,
    pub bracket_closed: bool,
    pub compose_closed: bool,
    pub brackets_vanish: bool,
    /// Every [C, QC] map sends the algebra into its center.
    pub c_qc_into_center: bool,
    /// [C, QC] = 0; meaningful when the center vanishes.
    pub c_qc_zero: bool,
    pub center_dim: usize,
    /// Bracket closure iff composition closure; `None` when char = 2.
    pub lie_iff_associative: Option<bool>,
    /// Bracket closure iff all brackets vanish; `None` unless char does not
    /// divide the arity and the center is zero.
    pub lie_iff_abelian: Option<bool>,
    pub skips: Vec<String>,
}

impl QcReport {
    pub fn consistent(&self) -> bool {
        self.lie_iff_associative.unwrap_or(true) && self.lie_iff_abelian.unwrap_or(true)
    }
}

pub fn qc_structure_report(alg: &GradedAlgebra, exec: Exec) -> Result<QcReport, Error> {
    let qc = operator_family_with(alg, OperatorClass::Quasicentroid, exec).project(0)?;
    let c = operator_family_with(alg, OperatorClass::Centroid, exec).project(0)?;
    let center = alg.center();

    let qc_maps = qc.maps();
    let mut bracket_closed = true;
    let mut compose_closed = true;
    let mut brackets_vanish = true;
    for f in &qc_maps {
        for g in &qc_maps {
            let b = MapProduct::Bracket.apply(alg, f, g);
            if !b.is_zero() {
                brackets_vanish = false;
            }
            if !qc.contains_map(&b) {
                bracket_closed = false;
            }
            let p = MapProduct::Compose.apply(alg, f, g);
            if !qc.contains_map(&p) {
                compose_closed = false;
            }
        }
    }

    let mut c_qc_into_center = true;
    let mut c_qc_zero = true;
    for f in c.maps() {
        for g in &qc_maps {
            let b = MapProduct::Bracket.apply(alg, &f, g);
            if !b.is_zero() {
                c_qc_zero = false;
            }
            for i in 0..alg.dim() {
                if !center.contains_vector(&b.mat.col_vec(i)) {
                    c_qc_into_center = false;
                }
            }
        }
    }

    let mut skips = Vec::new();
    let lie_iff_associative = if alg.field().char_coprime_to(2) {
        Some(bracket_closed == compose_closed)
    } else {
        skips.push("characteristic 2: bracket/composition equivalence skipped".into());
        None
    };
    let lie_iff_abelian = if !alg.field().char_coprime_to(alg.arity() as u64) {
        skips.push(format!(
            "characteristic divides arity {}: abelian equivalence skipped",
            alg.arity()
        ));
        None
    } else if !center.is_zero() {
        skips.push("nonzero center: abelian equivalence skipped".into());
        None
    } else {
        Some(bracket_closed == brackets_vanish)
    };

    Ok(QcReport {
        qc_dim: qc.total_dim(),
        bracket_closed,
        compose_closed,
        brackets_vanish,
        c_qc_into_center,
        c_qc_zero,
        center_dim: center.dim(),
        lie_iff_associative,
        lie_iff_abelian,
        skips,
    })
}

/// For a gamma-commutative algebra the first projection of the generalized
/// derivations splits as quasiderivations plus quasicentroid, degree-wise.
pub fn gder_decomposition_check(alg: &GradedAlgebra, exec: Exec) -> Result<bool, Error> {
    if !alg.is_gamma_commutative(-1) && !alg.is_gamma_commutative(1) {
        return Err(Error::NotSymmetricAlgebra);
    }
    let gder_first =
        operator_family_with(alg, OperatorClass::GeneralizedDerivation, exec).project(0)?;
    let qder_inner = operator_family_with(alg, OperatorClass::Quasiderivation, exec).project(0)?;
    let qc = operator_family_with(alg, OperatorClass::Quasicentroid, exec).project(0)?;
    Ok(qder_inner.sum(&qc) == gder_first)
}

/// Turns a product-closed operator family into a binary graded algebra on
/// its basis maps, with structure constants from the chosen product and
/// grading inherited from the map degrees.
pub fn materialize(
    alg: &GradedAlgebra,
    fam: &EndFamily,
    kind: MapProduct,
) -> Result<GradedAlgebra, Error> {
    let maps = fam.maps();
    let k = maps.len();
    // global offset of each degree block in the concatenated basis
    let mut offsets: BTreeMap<GroupElement, usize> = BTreeMap::new();
    let mut acc = 0usize;
    for (theta, s) in fam.iter() {
        offsets.insert(theta.clone(), acc);
        acc += s.dim();
    }
    let mut products = Vec::new();
    for (i, f) in maps.iter().enumerate() {
        for (j, g) in maps.iter().enumerate() {
            let p = kind.apply(alg, f, g);
            if p.is_zero() {
                continue;
            }
            let block = fam.block(&p.theta);
            let coords = block.coordinates(&p.flatten()).ok_or(Error::NotClosed)?;
            let off = offsets[&p.theta];
            let mut out = vec![alg.field().zero(); k];
            for (t, c) in coords.into_iter().enumerate() {
                out[off + t] = c;
            }
            products.push((vec![i, j], out));
        }
    }
    let degrees: Vec<GroupElement> = maps.iter().map(|m| m.theta.clone()).collect();
    GradedAlgebra::new(
        alg.field(),
        k,
        2,
        alg.group().clone(),
        degrees,
        alg.eps().clone(),
        products,
        Closure::None,
    )
}
