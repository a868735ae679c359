//! Bundled audit suites over a fixed embedding and window: structure
//! constants, derivation families, and the automorphism group.

use crate::algebra::{
    grade_audit, nilpotency_check, structure_audit, window_symbols, BasisSymbol, Element,
    SymbolKind,
};
use crate::algebra::BracketTable;
use crate::automorphisms::{audit_radius, aut_audit_with_table, group_audit, AutParams, Sign};
use crate::derivations::{
    ad_table, decompose_derivation, leibniz_audit, make_derivation, map_equal,
    scaling_inner_solve, DerivationRecipe,
};
use crate::error::Result;
use crate::gamma::{window_points, AdditiveHom, GammaElem, GammaEmbedding, MultiplicativeHom};
use crate::report::{CheckRecord, CheckReport, Status, Witness};
use crate::scalar::{rat, Scalar};
use rayon::prelude::*;

/// Index sample for parameter grids: radius 2 for rank 1, radius 1 above.
fn gamma_grid(rank: usize, n: i64) -> Vec<GammaElem> {
    let radius = if rank == 1 { 2.min(n) } else { 1.min(n) };
    window_points(rank, radius)
}

fn fail_record(id: &str, inputs: String, lhs: String, rhs: String) -> CheckRecord {
    CheckRecord {
        id: id.into(),
        status: Status::Fail,
        witness: Some(Witness { inputs, lhs, rhs }),
    }
}

/// Grading, super-antisymmetry, degree/parity additivity, super-Jacobi,
/// embedding injectivity, and local ad-nilpotency of the G-generators.
pub fn suite_structure(emb: &GammaEmbedding, n: i64) -> CheckReport {
    let mut report = emb.injectivity_audit(n);
    report.merge(grade_audit(emb, n));
    report.merge(structure_audit(emb, n));
    let mut nilpotency_failures = Vec::new();
    for gamma in gamma_grid(emb.rank(), n) {
        for plus in [true, false] {
            let r = nilpotency_check(emb, &gamma, plus, n, 4);
            nilpotency_failures.extend(r.checks.into_iter().filter(|c| c.status == Status::Fail));
        }
    }
    report.sweep("nilpotency_grid[k=4]", nilpotency_failures);
    report
}

/// Inner-derivation Leibniz sweep, the two inner families against their
/// ad representatives, scaling derivations, decomposition round trips,
/// and the rank-dependent innerness of scaling derivations.
pub fn suite_derivations(emb: &GammaEmbedding, n: i64) -> Result<CheckReport> {
    let rank = emb.rank();
    let nv = emb.nvars();
    let mut report = CheckReport::new(emb.meta(n));

    // every ad_table passes the signed Leibniz audit
    let ad_rows: Vec<Result<Vec<CheckRecord>>> = window_symbols(rank, n)
        .par_iter()
        .map(|s| {
            let table = ad_table(emb, &Element::basis(s.clone(), nv), n)?;
            let r = leibniz_audit(emb, &table, n)?;
            Ok(r.checks
                .into_iter()
                .filter(|c| c.status == Status::Fail)
                .map(|mut c| {
                    c.id = format!("ad_leibniz[{}]", s);
                    c
                })
                .collect())
        })
        .collect();
    let mut failures = Vec::new();
    for row in ad_rows {
        failures.extend(row?);
    }
    report.sweep("ad_leibniz", failures);

    // recipe grids
    let mut recipes: Vec<DerivationRecipe> = Vec::new();
    let odd_pairs = [
        (rat(1, 1, nv), rat(0, 1, nv)),
        (rat(0, 1, nv), rat(1, 1, nv)),
        (rat(2, 1, nv), rat(-3, 1, nv)),
    ];
    for gamma in gamma_grid(rank, n) {
        for (xi0, xi1) in &odd_pairs {
            recipes.push(DerivationRecipe::OddInner {
                xi0: xi0.clone(),
                xi1: xi1.clone(),
                gamma: gamma.clone(),
            });
        }
    }
    let even_pairs = [
        (rat(1, 1, nv), rat(0, 1, nv)),
        (rat(0, 1, nv), rat(1, 1, nv)),
        (rat(1, 2, nv), rat(-2, 1, nv)),
    ];
    for gamma in gamma_grid(rank, n) {
        if emb.embed(&gamma)?.is_zero() {
            continue;
        }
        for (h0, eta) in &even_pairs {
            recipes.push(DerivationRecipe::EvenInner {
                h0: h0.clone(),
                eta: eta.clone(),
                gamma: gamma.clone(),
            });
        }
    }
    let phi_choices: Vec<AdditiveHom> = if rank == 1 {
        [rat(0, 1, nv), rat(1, 1, nv), rat(5, 3, nv)]
            .into_iter()
            .map(|v| AdditiveHom::new(vec![v]))
            .collect()
    } else {
        vec![
            AdditiveHom::zero(rank, nv),
            AdditiveHom::new(
                (0..rank)
                    .map(|i| if i == 0 { rat(1, 1, nv) } else { rat(0, 1, nv) })
                    .collect(),
            ),
            AdditiveHom::new((0..rank).map(|i| rat(i as i64 + 1, 3, nv)).collect()),
        ]
    };
    for phi in &phi_choices {
        for e0 in [rat(0, 1, nv), rat(1, 1, nv), rat(-2, 1, nv)] {
            recipes.push(DerivationRecipe::Scaling {
                phi: phi.clone(),
                e0,
            });
        }
    }

    let recipe_rows: Vec<Result<Vec<CheckRecord>>> = recipes
        .par_iter()
        .map(|recipe| {
            let mut failures = Vec::new();
            let table = make_derivation(emb, recipe, n)?;
            let inputs = format!("{:?}", recipe);

            let leibniz = leibniz_audit(emb, &table, n)?;
            if !leibniz.passed() {
                failures.push(fail_record(
                    "family_leibniz",
                    inputs.clone(),
                    "Leibniz failure".into(),
                    "derivation".into(),
                ));
            }

            // inner families equal their ad representatives
            let representative = match recipe {
                DerivationRecipe::OddInner { xi0, xi1, gamma } => Some(
                    Element::term(
                        BasisSymbol::new(SymbolKind::GPlus, gamma.clone()),
                        xi0.neg(),
                    )
                    .add(&Element::term(
                        BasisSymbol::new(SymbolKind::GMinus, gamma.clone()),
                        xi1.clone(),
                    )),
                ),
                DerivationRecipe::EvenInner { h0, eta, gamma } => {
                    let gi = emb.embed(gamma)?.inv()?;
                    let k2 = gi.mul(eta);
                    let k1 = gi.scale_int(2).mul(&h0.add(&gi.mul(eta)));
                    Some(
                        Element::term(BasisSymbol::new(SymbolKind::L, gamma.clone()), k1).add(
                            &Element::term(BasisSymbol::new(SymbolKind::H, gamma.clone()), k2),
                        ),
                    )
                }
                _ => None,
            };
            if let Some(x) = representative {
                if x.is_zero() {
                    // zero recipe: the table itself must be zero
                    if table.entries().any(|(_, e)| !e.is_zero()) {
                        failures.push(fail_record(
                            "inner_representative",
                            inputs.clone(),
                            "nonzero table".into(),
                            "zero".into(),
                        ));
                    }
                } else {
                    let adt = ad_table(emb, &x, n)?;
                    if let Some(diff) = map_equal(&table, &adt, n)? {
                        failures.push(fail_record(
                            "inner_representative",
                            format!("{}, x = {}", inputs, diff.symbol),
                            diff.lhs.to_string(),
                            diff.rhs.to_string(),
                        ));
                    }
                }
            }

            // decompose ∘ make = identity on parameters
            match decompose_derivation(emb, &table) {
                Ok(got) => {
                    if got != *recipe {
                        failures.push(fail_record(
                            "round_trip",
                            inputs.clone(),
                            format!("{:?}", got),
                            inputs.clone(),
                        ));
                    }
                }
                Err(e) => failures.push(fail_record(
                    "round_trip",
                    inputs.clone(),
                    format!("error: {}", e),
                    "recipe".into(),
                )),
            }

            // scaling innerness: solvable exactly when φ ∝ ι
            if let DerivationRecipe::Scaling { phi, e0 } = recipe {
                match scaling_inner_solve(emb, phi, e0)? {
                    Some((x, y)) => {
                        let rep = Element::term(
                            BasisSymbol::new(SymbolKind::L, GammaElem::zero(rank)),
                            x,
                        )
                        .add(&Element::term(
                            BasisSymbol::new(SymbolKind::H, GammaElem::zero(rank)),
                            y,
                        ));
                        let check = if rep.is_zero() {
                            table.entries().all(|(_, e)| e.is_zero())
                        } else {
                            map_equal(&table, &ad_table(emb, &rep, n)?, n)?.is_none()
                        };
                        if !check {
                            failures.push(fail_record(
                                "scaling_inner_solve",
                                inputs.clone(),
                                format!("ad({})", rep),
                                "scaling table".into(),
                            ));
                        }
                    }
                    None => {
                        if rank == 1 {
                            // rank 1: φ is always a multiple of ι
                            failures.push(fail_record(
                                "scaling_inner_solve",
                                inputs.clone(),
                                "no solution".into(),
                                "rank-1 scaling must be inner".into(),
                            ));
                        }
                    }
                }
            }
            Ok(failures)
        })
        .collect();
    let mut failures = Vec::new();
    for row in recipe_rows {
        failures.extend(row?);
    }
    report.sweep("derivation_families", failures);

    // linearity of the scaling family
    {
        let phi1 = &phi_choices[1];
        let phi2 = &phi_choices[2];
        let sum = make_derivation(
            emb,
            &DerivationRecipe::Scaling {
                phi: phi1.add(phi2),
                e0: rat(3, 2, nv),
            },
            n,
        )?;
        let t1 = make_derivation(
            emb,
            &DerivationRecipe::Scaling {
                phi: phi1.clone(),
                e0: rat(1, 2, nv),
            },
            n,
        )?;
        let t2 = make_derivation(
            emb,
            &DerivationRecipe::Scaling {
                phi: phi2.clone(),
                e0: rat(1, 1, nv),
            },
            n,
        )?;
        let mut linear_failures = Vec::new();
        for (s, e) in sum.entries() {
            let combined = t1.get(s)?.add(t2.get(s)?);
            if *e != combined {
                linear_failures.push(fail_record(
                    "scaling_linearity",
                    format!("x = {}", s),
                    e.to_string(),
                    combined.to_string(),
                ));
            }
        }
        report.sweep("scaling_linearity", linear_failures);
    }

    // generic rank >= 2: the axis homomorphism is provably non-inner
    if rank >= 2 {
        let axis = AdditiveHom::new(
            (0..rank)
                .map(|i| if i == 0 { rat(1, 1, nv) } else { rat(0, 1, nv) })
                .collect(),
        );
        match scaling_inner_solve(emb, &axis, &Scalar::zero(nv))? {
            None => report.pass("scaling_non_inner"),
            Some((x, y)) => report.fail(
                "scaling_non_inner",
                "phi = (1, 0, ...)".to_string(),
                format!("solution x = {}, y = {}", x, y),
                "no solution".to_string(),
            ),
        }
    }

    Ok(report)
}

/// Criterion grid for Γ = Z: every combination of the sign pair, shift,
/// b, and f₁ samples. Other embeddings get a small generic sample.
pub fn aut_param_grid(emb: &GammaEmbedding) -> Vec<AutParams> {
    let rank = emb.rank();
    let nv = emb.nvars();
    let mut grid = Vec::new();
    if rank == 1 && nv == 0 {
        for xi in [Sign::Plus, Sign::Minus] {
            for eps in [Sign::Plus, Sign::Minus] {
                for a in -2..=2 {
                    for b in [rat(1, 1, 0), rat(2, 1, 0), rat(-3, 1, 0), rat(1, 2, 0)] {
                        for f1 in [rat(1, 1, 0), rat(2, 1, 0), rat(1, 2, 0), rat(-1, 1, 0)] {
                            grid.push(
                                AutParams::new(
                                    MultiplicativeHom::new(vec![f1]).unwrap(),
                                    xi,
                                    eps,
                                    GammaElem(vec![a]),
                                    b.clone(),
                                )
                                .unwrap(),
                            );
                        }
                    }
                }
            }
        }
    } else {
        let f_one = MultiplicativeHom::one(rank, nv);
        let f_mixed = MultiplicativeHom::new(
            (0..rank)
                .map(|i| if i == 0 { rat(2, 1, nv) } else { rat(1, 2, nv) })
                .collect(),
        )
        .unwrap();
        let mut a_mixed = GammaElem::zero(rank);
        a_mixed.0[0] = 1;
        if rank > 1 {
            a_mixed.0[1] = -1;
        }
        for xi in [Sign::Plus, Sign::Minus] {
            for eps in [Sign::Plus, Sign::Minus] {
                grid.push(
                    AutParams::new(
                        f_one.clone(),
                        xi,
                        eps,
                        GammaElem::zero(rank),
                        Scalar::one(nv),
                    )
                    .unwrap(),
                );
                grid.push(
                    AutParams::new(
                        f_mixed.clone(),
                        xi,
                        eps,
                        a_mixed.clone(),
                        if nv > 0 {
                            Scalar::var(0, nv)
                        } else {
                            rat(2, 1, nv)
                        },
                    )
                    .unwrap(),
                );
            }
        }
    }
    grid
}

/// Per-parameter homomorphism audits over the grid, then the group laws.
pub fn suite_automorphisms(emb: &GammaEmbedding, n: i64) -> Result<CheckReport> {
    let grid = aut_param_grid(emb);
    let mut report = CheckReport::new(emb.meta(n));
    let radius = grid.iter().map(|p| audit_radius(p, n)).max().unwrap_or(2 * n);
    let table = BracketTable::new(emb, radius);
    let rows: Vec<Result<Vec<CheckRecord>>> = grid
        .par_iter()
        .map(|p| {
            let r = aut_audit_with_table(emb, p, n, &table)?;
            Ok(r.checks
                .into_iter()
                .filter(|c| c.status == Status::Fail)
                .collect())
        })
        .collect();
    let mut failures = Vec::new();
    for row in rows {
        failures.extend(row?);
    }
    report.sweep(&format!("aut_grid[{} params]", grid.len()), failures);
    report.merge(group_audit(emb, &grid, n)?);
    Ok(report)
}

pub fn suite_all(emb: &GammaEmbedding, n: i64) -> Result<CheckReport> {
    let mut report = suite_structure(emb, n);
    report.merge(suite_derivations(emb, n)?);
    report.merge(suite_automorphisms(emb, n)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_embedding() -> GammaEmbedding {
        GammaEmbedding::rational(rat(1, 1, 0)).unwrap()
    }

    #[test]
    fn structure_suite_small() {
        let report = suite_structure(&z_embedding(), 3);
        assert!(report.passed(), "{}", report);
    }

    #[test]
    fn derivations_suite_small() {
        let report = suite_derivations(&z_embedding(), 3).unwrap();
        assert!(report.passed(), "{}", report);
    }

    #[test]
    fn derivations_suite_generic() {
        let report = suite_derivations(&GammaEmbedding::generic(2), 2).unwrap();
        assert!(report.passed(), "{}", report);
        assert!(report.checks.iter().any(|c| c.id == "scaling_non_inner"));
    }

    #[test]
    fn automorphisms_suite_generic() {
        let report = suite_automorphisms(&GammaEmbedding::generic(2), 2).unwrap();
        assert!(report.passed(), "{}", report);
    }

    #[test]
    fn all_suite_is_deterministic() {
        let emb = z_embedding();
        let a = suite_all(&emb, 2).unwrap().to_json();
        let b = suite_all(&emb, 2).unwrap().to_json();
        assert_eq!(a, b);
    }
}
