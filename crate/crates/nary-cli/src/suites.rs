//! The verification suite batteries: each suite runs a fixed list of checks
//! against one algebra and reports pass/fail/skip per anchor.

use nary_alg::closures::gder_decomposition_check;
use nary_alg::closures::{
    closure_check, materialize, product_span, qc_structure_report, MapProduct,
};
use nary_alg::extension::{decomposition_check, embedding_checks, extend, phi_outer_independence};
use nary_alg::identity::{check_identity, color_jordan_identities, Law};
use nary_alg::modact::{
    classify_qder_end, inner_equals_end_by_kernel, recover_defining_matrix, tensor_cube_report,
    verify_unit_pair_quasiderivations,
};
use nary_alg::opspace::{operator_family, EndFamily, OperatorClass, PairSide};
use nary_alg::{Error, Exec, GradedAlgebra};

use crate::report::Check;

fn end_proj(alg: &GradedAlgebra, class: OperatorClass) -> EndFamily {
    operator_family(alg, class)
        .project(0)
        .expect("projection onto the first member")
}

pub fn suite_s1(alg: &GradedAlgebra) -> Vec<Check> {
    let zder = end_proj(alg, OperatorClass::CentralDerivation);
    let der = end_proj(alg, OperatorClass::Derivation);
    let qder_inner = operator_family(alg, OperatorClass::Quasiderivation)
        .project_pair(PairSide::Inner)
        .expect("pair projection");
    let gder_first = end_proj(alg, OperatorClass::GeneralizedDerivation);
    let end = EndFamily::full_end(alg);
    vec![
        Check::new(
            "s1.zder-in-der",
            "Def 1.7 / Def 1.2 chain",
            der.contains(&zder),
        )
        .with("dim_zder", zder.total_dim())
        .with("dim_der", der.total_dim()),
        Check::new(
            "s1.der-in-qder-inner",
            "Def 1.2 / Def 1.4 chain",
            qder_inner.contains(&der),
        )
        .with("dim_qder_inner", qder_inner.total_dim()),
        Check::new(
            "s1.qder-inner-in-gder-first",
            "Def 1.4 / Def 1.3 chain",
            gder_first.contains(&qder_inner),
        )
        .with("dim_gder_first", gder_first.total_dim()),
        Check::new(
            "s1.gder-first-in-end",
            "Def 1.3 / End chain",
            end.contains(&gder_first),
        )
        .with("dim_end", end.total_dim()),
    ]
}

pub fn suite_s2(alg: &GradedAlgebra) -> Vec<Check> {
    let mut checks = Vec::new();
    let der = end_proj(alg, OperatorClass::Derivation);
    let zder = end_proj(alg, OperatorClass::CentralDerivation);
    let c = end_proj(alg, OperatorClass::Centroid);
    let qc = end_proj(alg, OperatorClass::Quasicentroid);
    let qder_fam = operator_family(alg, OperatorClass::Quasiderivation);
    let qder_inner = qder_fam.project_pair(PairSide::Inner).expect("projection");
    let gder_first = end_proj(alg, OperatorClass::GeneralizedDerivation);

    checks.push(Check::new(
        "s2.gder-bracket-closed",
        "Lemma 2.1(1)",
        closure_check(
            alg,
            MapProduct::Bracket,
            &gder_first,
            &gder_first,
            &gder_first,
        ),
    ));
    checks.push(Check::new(
        "s2.qder-bracket-closed",
        "Lemma 2.1(1)",
        closure_check(
            alg,
            MapProduct::Bracket,
            &qder_inner,
            &qder_inner,
            &qder_inner,
        ),
    ));
    checks.push(Check::new(
        "s2.centroid-bracket-closed",
        "Lemma 2.1(1)",
        closure_check(alg, MapProduct::Bracket, &c, &c, &c),
    ));
    checks.push(Check::new(
        "s2.zder-ideal-of-der",
        "Lemma 2.1(2)",
        closure_check(alg, MapProduct::Bracket, &zder, &der, &zder)
            && closure_check(alg, MapProduct::Bracket, &der, &zder, &zder),
    ));
    checks.push(Check::new(
        "s2.der-bracket-centroid",
        "Lemma 2.2(1)",
        closure_check(alg, MapProduct::Bracket, &der, &c, &c),
    ));
    checks.push(Check::new(
        "s2.qder-bracket-qcentroid",
        "Lemma 2.2(2)",
        closure_check(alg, MapProduct::Bracket, &qder_inner, &qc, &qc),
    ));
    checks.push(Check::new(
        "s2.centroid-compose-der",
        "Lemma 2.2(3)",
        closure_check(alg, MapProduct::Compose, &c, &der, &der),
    ));
    checks.push(Check::new(
        "s2.centroid-in-qder",
        "Lemma 2.2(4)",
        qder_inner.contains(&c),
    ));
    checks.push(Check::new(
        "s2.qc-brackets-in-qder",
        "Lemma 2.2(5)",
        closure_check(alg, MapProduct::Bracket, &qc, &qc, &qder_inner),
    ));
    checks.push(Check::new(
        "s2.qder-plus-qc-in-gder",
        "Lemma 2.2(6)",
        gder_first.contains(&qder_inner.sum(&qc)),
    ));
    let qc_sq = product_span(alg, MapProduct::Bracket, &qc, &qc);
    let s = qc.sum(&qc_sq);
    checks.push(Check::new(
        "s2.qc-plus-brackets-subalgebra-of-gder",
        "Prop 2.4",
        gder_first.contains(&s) && closure_check(alg, MapProduct::Bracket, &s, &s, &s),
    ));
    // Cor 2.8: QC under the Jordan product is a color Jordan algebra
    let jordan_closed = closure_check(alg, MapProduct::Jordan, &qc, &qc, &qc);
    if jordan_closed {
        let ok = match materialize(alg, &qc, MapProduct::Jordan) {
            Ok(jalg) => color_jordan_identities()
                .iter()
                .all(|id| check_identity(&jalg, id)),
            Err(_) => false,
        };
        checks.push(Check::new("s2.qc-jordan-algebra", "Cor 2.8", ok));
    } else {
        checks.push(
            Check::new("s2.qc-jordan-algebra", "Cor 2.8", false).with("jordan_closed", "false"),
        );
    }
    match qc_structure_report(alg, Exec::default()) {
        Ok(rep) => {
            checks.push(
                Check::new(
                    "s2.c-qc-into-center-maps",
                    "Lemma 2.5",
                    rep.c_qc_into_center,
                )
                .with("center_dim", rep.center_dim),
            );
            if rep.center_dim == 0 {
                checks.push(Check::new("s2.c-qc-vanishes", "Lemma 2.5", rep.c_qc_zero));
            } else {
                checks.push(Check::skip(
                    "s2.c-qc-vanishes",
                    "Lemma 2.5",
                    "nonzero center".to_string(),
                ));
            }
            match rep.lie_iff_associative {
                Some(ok) => checks.push(Check::new("s2.qc-lie-iff-associative", "Thm 2.9(1)", ok)),
                None => checks.push(Check::skip(
                    "s2.qc-lie-iff-associative",
                    "Thm 2.9(1)",
                    "characteristic 2".to_string(),
                )),
            }
            match rep.lie_iff_abelian {
                Some(ok) => checks.push(
                    Check::new("s2.qc-lie-iff-abelian", "Thm 2.9(2)", ok)
                        .with("bracket_closed", rep.bracket_closed)
                        .with("brackets_vanish", rep.brackets_vanish),
                ),
                None => checks.push(Check::skip(
                    "s2.qc-lie-iff-abelian",
                    "Thm 2.9(2)",
                    rep.skips.join("; "),
                )),
            }
        }
        Err(e) => checks.push(Check::new("s2.qc-structure", "Thm 2.9", false).with("error", e)),
    }
    match gder_decomposition_check(alg, Exec::default()) {
        Ok(ok) => checks.push(Check::new("s2.gder-eq-qder-plus-qc", "Prop 2.3", ok)),
        Err(Error::NotSymmetricAlgebra) => checks.push(Check::skip(
            "s2.gder-eq-qder-plus-qc",
            "Prop 2.3",
            "neither commutative nor anticommutative".to_string(),
        )),
        Err(e) => {
            checks.push(Check::new("s2.gder-eq-qder-plus-qc", "Prop 2.3", false).with("error", e))
        }
    }
    checks
}

pub fn suite_s3(alg: &GradedAlgebra) -> Vec<Check> {
    let mut checks = Vec::new();
    let ext = extend(alg);
    checks.push(
        Check::new(
            "s3.carrier-validates",
            "Prop 3.3",
            ext.carrier.validate().is_ok(),
        )
        .with("carrier_dim", ext.carrier.dim()),
    );
    for law in Law::ALL {
        let id = format!("s3.preserves-{}", law.name());
        match law.holds(alg) {
            Some(true) => {
                let kept = law.holds(&ext.carrier) == Some(true);
                checks.push(Check::new(&id, "Prop 3.3", kept));
            }
            Some(false) => checks.push(Check::skip(
                &id,
                "Prop 3.3",
                "base does not satisfy the law".to_string(),
            )),
            None => checks.push(Check::skip(&id, "Prop 3.3", "arity mismatch".to_string())),
        }
    }
    match embedding_checks(alg, Exec::default()) {
        Ok((contained, injective)) => {
            checks.push(Check::new("s3.phi-into-der", "Prop 3.4(2)", contained));
            checks.push(Check::new("s3.phi-injective", "Prop 3.4(1)", injective));
        }
        Err(e) => checks.push(Check::new("s3.phi-into-der", "Prop 3.4", false).with("error", e)),
    }
    let qder_fam = operator_family(alg, OperatorClass::Quasiderivation);
    let independent = qder_fam
        .spaces
        .iter()
        .all(|s| phi_outer_independence(alg, s));
    checks.push(Check::new(
        "s3.phi-outer-independent",
        "Prop 3.4(1)",
        independent,
    ));
    match decomposition_check(alg, Exec::default()) {
        Ok(rep) => match rep.skipped {
            Some(reason) => {
                checks.push(Check::skip(
                    "s3.der-decomposition",
                    "Prop 3.5",
                    reason.clone(),
                ));
                checks.push(Check::skip("s3.carrier-center", "Prop 3.5", reason));
            }
            None => {
                let mut c = Check::new("s3.der-decomposition", "Prop 3.5", rep.holds);
                for d in &rep.per_degree {
                    c = c.with(
                        &format!("degree{:?}", d.theta.coords()),
                        format!("der={} phi={} zder={}", d.der_dim, d.phi_dim, d.zder_dim),
                    );
                }
                checks.push(c);
                checks.push(Check::new(
                    "s3.carrier-center",
                    "Prop 3.5",
                    rep.center_is_tn_slice,
                ));
            }
        },
        Err(e) => {
            checks.push(Check::new("s3.der-decomposition", "Prop 3.5", false).with("error", e))
        }
    }
    checks
}

pub fn suite_s4(alg: &GradedAlgebra) -> Vec<Check> {
    let mut checks = Vec::new();
    match classify_qder_end(alg, Exec::default()) {
        Err(e) => {
            checks.push(Check::skip(
                "s4.classification",
                "Thm 4.6 / Thm 4.9",
                format!("preconditions not met: {e}"),
            ));
        }
        Ok(v) => {
            checks.push(
                Check::new(
                    "s4.kernel-criterion-agrees",
                    "Lemma 4.2",
                    v.kernel_criterion_agrees,
                )
                .with("inner_equals_end", v.inner_equals_end)
                .with("mu_kernel_dim", v.mu_kernel_dim),
            );
            checks.push(
                Check::new(
                    "s4.dichotomies",
                    "Lemma 4.5 / Lemma 4.7 / Lemma 4.8(2)",
                    v.dichotomies_hold,
                )
                .with("dim", v.dim)
                .with("derived_dim", v.derived_dim)
                .with("inner_dim", v.inner_dim)
                .with("outer_dim", v.outer_dim)
                .with("qder_ll_end", v.inner_equals_end)
                .with("qder_ks_end", v.outer_equals_end),
            );
            // the kernel route must match Lemma 4.2 on its own
            match inner_equals_end_by_kernel(alg) {
                Ok(k) => checks.push(
                    Check::new("s4.kernel-route", "Lemma 4.2", k == v.inner_equals_end)
                        .with("kernel_route", k),
                ),
                Err(e) => checks.push(Check::skip("s4.kernel-route", "Lemma 4.2", format!("{e}"))),
            }
            if alg.dim() == alg.arity() + 1 && alg.is_gamma_commutative(-1) {
                match recover_defining_matrix(alg) {
                    Ok(b) => {
                        let rank = b.rank();
                        checks.push(
                            Check::new(
                                "s4.defining-matrix-rank",
                                "Eq. (2)/(3)",
                                rank == v.derived_dim,
                            )
                            .with("rank_b", rank),
                        );
                        if rank == alg.dim() {
                            match verify_unit_pair_quasiderivations(alg.arity(), &b) {
                                Ok(ok) => checks.push(Check::new(
                                    "s4.unit-pairs-quasiderivations",
                                    "Thm 4.9",
                                    ok,
                                )),
                                Err(e) => checks.push(
                                    Check::new("s4.unit-pairs-quasiderivations", "Thm 4.9", false)
                                        .with("error", e),
                                ),
                            }
                        } else {
                            checks.push(Check::skip(
                                "s4.unit-pairs-quasiderivations",
                                "Thm 4.9",
                                "defining matrix is singular".to_string(),
                            ));
                        }
                    }
                    Err(e) => checks.push(Check::skip(
                        "s4.defining-matrix-rank",
                        "Eq. (2)/(3)",
                        format!("{e}"),
                    )),
                }
            } else {
                checks.push(Check::skip(
                    "s4.defining-matrix-rank",
                    "Eq. (2)/(3)",
                    "dimension is not arity + 1 or not anticommutative".to_string(),
                ));
            }
        }
    }
    checks
}

pub fn suite_appendix(alg: &GradedAlgebra) -> Vec<Check> {
    let d = alg.dim();
    if d < 2 {
        return vec![Check::skip(
            "appendix.tensor-cube",
            "Appendix A",
            format!("needs dimension at least 2, found {d}"),
        )];
    }
    let r = tensor_cube_report(d, alg.field());
    vec![
        Check::new(
            "appendix.five-submodules",
            "Appendix A",
            r.all_five_are_submodules,
        )
        .with("plus_dim", r.plus_dim)
        .with("minus_dim", r.minus_dim)
        .with("counterexample_dim", r.counterexample_dim)
        .with("sym_dim", r.sym_dim)
        .with("alt_dim", r.alt_dim),
        Check::new(
            "appendix.counterexample-distinct",
            "Appendix A",
            r.counterexample_differs_from_both,
        ),
        Check::new(
            "appendix.sym-strict-in-plus",
            "Appendix A Eq. (8)",
            r.sym_strictly_inside_plus,
        ),
        Check::new(
            "appendix.alt-strict-in-minus",
            "Appendix A Eq. (9)",
            r.alt_strictly_inside_minus,
        ),
    ]
}

pub fn run_suite(alg: &GradedAlgebra, suite: &str) -> Result<Vec<Check>, Error> {
    match suite {
        "s1" => Ok(suite_s1(alg)),
        "s2-closures" => Ok(suite_s2(alg)),
        "s3-extension" => Ok(suite_s3(alg)),
        "s4-classification" => Ok(suite_s4(alg)),
        "appendix" => Ok(suite_appendix(alg)),
        "all" => {
            let mut checks = suite_s1(alg);
            checks.extend(suite_s2(alg));
            checks.extend(suite_s3(alg));
            checks.extend(suite_s4(alg));
            checks.extend(suite_appendix(alg));
            Ok(checks)
        }
        other => Err(Error::Invalid(format!(
            "unknown suite {other:?}; expected s1|s2-closures|s3-extension|s4-classification|appendix|all"
        ))),
    }
}
