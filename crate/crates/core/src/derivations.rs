//! Homogeneous derivation tables: the signed Leibniz audit, the classified
//! constructor families, and the decomposition that recovers a family
//! representative from an arbitrary table.

use crate::algebra::{
    bracket, window_symbols, BasisSymbol, Element, Parity, SymbolKind,
};
use crate::error::{Error, Result};
use crate::gamma::{AdditiveHom, GammaElem, GammaEmbedding};
use crate::report::{CheckRecord, CheckReport, Status, Witness};
use crate::scalar::{rat, Scalar};
use crate::table::GradedMapTable;

/// Parameters of the classified derivation families.
#[derive(Debug, Clone, PartialEq)]
pub enum DerivationRecipe {
    /// Degree-0 even derivation acting diagonally through an additive
    /// homomorphism, with an extra ± twist on the odd part.
    Scaling { phi: AdditiveHom, e0: Scalar },
    /// Odd derivation of degree γ; equal to ad(-ξ₀G⁺_γ + ξ₁G⁻_γ).
    OddInner {
        xi0: Scalar,
        xi1: Scalar,
        gamma: GammaElem,
    },
    /// Even derivation of degree γ ≠ 0; equal to ad(k₁L_γ + k₂H_γ).
    EvenInner {
        h0: Scalar,
        eta: Scalar,
        gamma: GammaElem,
    },
    /// Inner derivation by a homogeneous element.
    Ad(Element),
}

/// Table of ad(x) on a window; x must be homogeneous.
pub fn ad_table(emb: &GammaEmbedding, x: &Element, window: i64) -> Result<GradedMapTable> {
    let (degree, parity) = x.homogeneous_type(emb.rank())?;
    GradedMapTable::from_fn(degree, parity, window, emb.rank(), |s| {
        bracket(emb, x, &Element::basis(s.clone(), emb.nvars()))
    })
}

fn delta(cond: bool, s: Scalar, nvars: usize) -> Scalar {
    if cond {
        s
    } else {
        Scalar::zero(nvars)
    }
}

pub fn make_derivation(
    emb: &GammaEmbedding,
    recipe: &DerivationRecipe,
    window: i64,
) -> Result<GradedMapTable> {
    let rank = emb.rank();
    let nv = emb.nvars();
    match recipe {
        DerivationRecipe::Ad(x) => ad_table(emb, x, window),
        DerivationRecipe::Scaling { phi, e0 } => {
            GradedMapTable::from_fn(GammaElem::zero(rank), Parity::Even, window, rank, |s| {
                let coeff = match s.kind {
                    SymbolKind::Central => Scalar::zero(nv),
                    SymbolKind::L | SymbolKind::H => phi.eval(&s.index)?,
                    SymbolKind::GPlus => phi.eval(&s.index)?.add(e0),
                    SymbolKind::GMinus => phi.eval(&s.index)?.sub(e0),
                };
                Ok(Element::term(s.clone(), coeff))
            })
        }
        DerivationRecipe::OddInner { xi0, xi1, gamma } => {
            emb.check_rank(gamma)?;
            let ig = emb.embed(gamma)?;
            GradedMapTable::from_fn(gamma.clone(), Parity::Odd, window, rank, |s| {
                let target = s.index.add(gamma);
                let ia = emb.embed(&s.index)?;
                let hit_zero = target.is_zero();
                Ok(match s.kind {
                    SymbolKind::Central => Element::zero(),
                    SymbolKind::L => {
                        let half = ia.mul(&rat(1, 2, nv)).sub(&ig);
                        Element::term(
                            BasisSymbol::new(SymbolKind::GPlus, target.clone()),
                            half.mul(xi0),
                        )
                        .add(&Element::term(
                            BasisSymbol::new(SymbolKind::GMinus, target),
                            half.mul(xi1).neg(),
                        ))
                    }
                    SymbolKind::H => Element::term(
                        BasisSymbol::new(SymbolKind::GPlus, target.clone()),
                        xi0.clone(),
                    )
                    .add(&Element::term(
                        BasisSymbol::new(SymbolKind::GMinus, target),
                        xi1.clone(),
                    )),
                    SymbolKind::GPlus => {
                        let central = ia
                            .mul(&ia)
                            .sub(&rat(1, 4, nv))
                            .mul(&rat(1, 3, nv))
                            .mul(xi1);
                        Element::term(
                            BasisSymbol::new(SymbolKind::L, target.clone()),
                            xi1.scale_int(2),
                        )
                        .add(&Element::term(
                            BasisSymbol::new(SymbolKind::H, target.clone()),
                            ia.sub(&ig).mul(xi1),
                        ))
                        .add(&Element::term(
                            BasisSymbol::central(rank),
                            delta(hit_zero, central, nv),
                        ))
                    }
                    SymbolKind::GMinus => {
                        let central = ia
                            .mul(&ia)
                            .sub(&rat(1, 4, nv))
                            .mul(&rat(1, 3, nv))
                            .mul(xi0)
                            .neg();
                        Element::term(
                            BasisSymbol::new(SymbolKind::L, target.clone()),
                            xi0.scale_int(-2),
                        )
                        .add(&Element::term(
                            BasisSymbol::new(SymbolKind::H, target.clone()),
                            ia.sub(&ig).mul(xi0),
                        ))
                        .add(&Element::term(
                            BasisSymbol::central(rank),
                            delta(hit_zero, central, nv),
                        ))
                    }
                })
            })
        }
        DerivationRecipe::EvenInner { h0, eta, gamma } => {
            emb.check_rank(gamma)?;
            let ig = emb.embed(gamma)?;
            if ig.is_zero() {
                return Err(Error::ZeroGammaForEvenInner);
            }
            let gi = ig.inv().expect("nonzero");
            let k = h0.add(&gi.mul(eta)); // h0 + γ⁻¹η
            GradedMapTable::from_fn(gamma.clone(), Parity::Even, window, rank, |s| {
                let target = s.index.add(gamma);
                let ia = emb.embed(&s.index)?;
                let hit_zero = target.is_zero();
                Ok(match s.kind {
                    SymbolKind::Central => Element::zero(),
                    SymbolKind::L => {
                        let a = gi.mul(&ig.sub(&ia)).mul(&k).scale_int(2);
                        let m = gi
                            .mul(&ia.sub(&ia.mul(&ia).mul(&ia)))
                            .mul(&k)
                            .mul(&rat(1, 6, nv));
                        Element::term(BasisSymbol::new(SymbolKind::L, target.clone()), a)
                            .add(&Element::term(
                                BasisSymbol::new(SymbolKind::H, target),
                                eta.clone(),
                            ))
                            .add(&Element::term(
                                BasisSymbol::central(rank),
                                delta(hit_zero, m, nv),
                            ))
                    }
                    SymbolKind::H => {
                        let d = gi.mul(&ia).mul(&k).scale_int(-2);
                        Element::term(BasisSymbol::new(SymbolKind::H, target), d).add(
                            &Element::term(
                                BasisSymbol::central(rank),
                                delta(hit_zero, eta.mul(&rat(1, 3, nv)), nv),
                            ),
                        )
                    }
                    SymbolKind::GPlus => {
                        let e = gi
                            .mul(&ig.sub(&ia.scale_int(2)))
                            .mul(h0)
                            .add(&gi.mul(&gi).mul(&ig.sub(&ia)).mul(eta).scale_int(2));
                        Element::term(BasisSymbol::new(SymbolKind::GPlus, target), e)
                    }
                    SymbolKind::GMinus => {
                        let h = gi
                            .mul(&ig.sub(&ia.scale_int(2)))
                            .mul(h0)
                            .sub(&gi.mul(&gi).mul(&ia).mul(eta).scale_int(2));
                        Element::term(BasisSymbol::new(SymbolKind::GMinus, target), h)
                    }
                })
            })
        }
    }
}

/// Signed Leibniz audit: D[x,y] = [Dx, y] + (-1)^{|D||x|}[x, Dy] over all
/// window generator pairs whose product stays inside the table's window.
pub fn leibniz_audit(
    emb: &GammaEmbedding,
    table: &GradedMapTable,
    n: i64,
) -> Result<CheckReport> {
    if n > table.window {
        return Err(Error::WindowTooSmall {
            needed: n,
            have: table.window,
        });
    }
    let rank = emb.rank();
    let nv = emb.nvars();
    let symbols = window_symbols(rank, n);
    let mut failures = Vec::new();
    for x in &symbols {
        for y in &symbols {
            let sum = x.degree().add(y.degree());
            if !sum.in_window(table.window) {
                continue;
            }
            let ex = Element::basis(x.clone(), nv);
            let ey = Element::basis(y.clone(), nv);
            let product = bracket(emb, &ex, &ey)?;
            let lhs = table.apply(&product)?;
            let dx = table.get(x)?;
            let dy = table.get(y)?;
            let t1 = bracket(emb, dx, &ey)?;
            let t2 = bracket(emb, &ex, dy)?;
            let rhs = if table.parity == Parity::Odd && x.parity() == Parity::Odd {
                t1.sub(&t2)
            } else {
                t1.add(&t2)
            };
            if lhs != rhs {
                failures.push(CheckRecord {
                    id: "leibniz".into(),
                    status: Status::Fail,
                    witness: Some(Witness {
                        inputs: format!("x = {}, y = {}", x, y),
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    }),
                });
            }
        }
    }
    let mut report = CheckReport::new(emb.meta(n));
    report.sweep(&format!("leibniz[N={}]", n), failures);
    Ok(report)
}

/// First differing entry between two tables, or `None` when they agree on
/// the whole window of radius `n`.
#[derive(Debug, Clone)]
pub struct MapDiff {
    pub symbol: BasisSymbol,
    pub lhs: Element,
    pub rhs: Element,
}

pub fn map_equal(
    d1: &GradedMapTable,
    d2: &GradedMapTable,
    n: i64,
) -> Result<Option<MapDiff>> {
    if d1.degree != d2.degree {
        return Err(Error::DegreeMismatch);
    }
    if d1.parity != d2.parity {
        return Err(Error::ParityMismatch);
    }
    if n > d1.window || n > d2.window {
        return Err(Error::WindowTooSmall {
            needed: n,
            have: d1.window.min(d2.window),
        });
    }
    for s in window_symbols(d1.degree.rank(), n) {
        let lhs = d1.get(&s)?;
        let rhs = d2.get(&s)?;
        if lhs != rhs {
            return Ok(Some(MapDiff {
                symbol: s,
                lhs: lhs.clone(),
                rhs: rhs.clone(),
            }));
        }
    }
    Ok(None)
}

/// Classify an arbitrary window table as one of the derivation families
/// and verify the reconstruction reproduces the input exactly.
pub fn decompose_derivation(
    emb: &GammaEmbedding,
    table: &GradedMapTable,
) -> Result<DerivationRecipe> {
    let rank = emb.rank();
    let nv = emb.nvars();
    // a central leak also breaks Leibniz (e.g. on [H_1, H_-1]); report it
    // by its specific cause before the generic precheck
    if table.parity == Parity::Even && table.degree.is_zero() {
        let dc = table.get(&BasisSymbol::central(rank))?;
        if !dc.is_zero() {
            return Err(Error::CentralNotKilled);
        }
    }
    if !leibniz_audit(emb, table, table.window)?.passed() {
        return Err(Error::NotDerivation);
    }
    let gamma = table.degree.clone();
    let recipe = match table.parity {
        Parity::Odd => {
            let dh0 = table.get(&BasisSymbol::new(SymbolKind::H, GammaElem::zero(rank)))?;
            let xi0 =
                dh0.coeff_or_zero(&BasisSymbol::new(SymbolKind::GPlus, gamma.clone()), nv);
            let xi1 =
                dh0.coeff_or_zero(&BasisSymbol::new(SymbolKind::GMinus, gamma.clone()), nv);
            DerivationRecipe::OddInner { xi0, xi1, gamma }
        }
        Parity::Even if !emb.embed(&gamma)?.is_zero() => {
            let dl0 = table.get(&BasisSymbol::new(SymbolKind::L, GammaElem::zero(rank)))?;
            let eta = dl0.coeff_or_zero(&BasisSymbol::new(SymbolKind::H, gamma.clone()), nv);
            let dgm0 =
                table.get(&BasisSymbol::new(SymbolKind::GMinus, GammaElem::zero(rank)))?;
            let h0 =
                dgm0.coeff_or_zero(&BasisSymbol::new(SymbolKind::GMinus, gamma.clone()), nv);
            DerivationRecipe::EvenInner { h0, eta, gamma }
        }
        Parity::Even => {
            let dc = table.get(&BasisSymbol::central(rank))?;
            if !dc.is_zero() {
                return Err(Error::CentralNotKilled);
            }
            let mut values = Vec::with_capacity(rank);
            for i in 0..rank {
                let mut e = GammaElem::zero(rank);
                e.0[i] = 1;
                let de = table.get(&BasisSymbol::new(SymbolKind::L, e.clone()))?;
                values.push(de.coeff_or_zero(&BasisSymbol::new(SymbolKind::L, e), nv));
            }
            let dgp0 =
                table.get(&BasisSymbol::new(SymbolKind::GPlus, GammaElem::zero(rank)))?;
            let e0 = dgp0.coeff_or_zero(
                &BasisSymbol::new(SymbolKind::GPlus, GammaElem::zero(rank)),
                nv,
            );
            DerivationRecipe::Scaling {
                phi: AdditiveHom::new(values),
                e0,
            }
        }
    };
    let rebuilt = make_derivation(emb, &recipe, table.window)?;
    if map_equal(&rebuilt, table, table.window)?.is_some() {
        return Err(Error::ClassificationMismatch);
    }
    Ok(recipe)
}

/// Try to realize a scaling derivation as ad(x·L_0 + y·H_0): solvable iff
/// φ is proportional to the embedding. Returns the exact (x, y) or `None`.
pub fn scaling_inner_solve(
    emb: &GammaEmbedding,
    phi: &AdditiveHom,
    e0: &Scalar,
) -> Result<Option<(Scalar, Scalar)>> {
    let rank = emb.rank();
    let mut x: Option<Scalar> = None;
    for i in 0..rank {
        let mut e = GammaElem::zero(rank);
        e.0[i] = 1;
        let gi = emb.embed(&e)?;
        let candidate = phi.eval(&e)?.div(&gi)?.neg();
        match &x {
            None => x = Some(candidate),
            Some(existing) => {
                if *existing != candidate {
                    return Ok(None);
                }
            }
        }
    }
    Ok(x.map(|x| (x, e0.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::window_points;
    use crate::scalar::rat;

    fn z_embedding() -> GammaEmbedding {
        GammaEmbedding::rational(rat(1, 1, 0)).unwrap()
    }

    fn sym(kind: SymbolKind, i: i64) -> BasisSymbol {
        BasisSymbol::new(kind, GammaElem(vec![i]))
    }

    #[test]
    fn ad_tables_satisfy_leibniz() {
        let emb = z_embedding();
        for s in window_symbols(1, 2) {
            let d = ad_table(&emb, &Element::basis(s, 0), 4).unwrap();
            assert!(leibniz_audit(&emb, &d, 2).unwrap().passed());
        }
    }

    #[test]
    fn ad_l0_is_diagonal_and_ad_c_zero() {
        let emb = z_embedding();
        let d = ad_table(&emb, &Element::basis(sym(SymbolKind::L, 0), 0), 3).unwrap();
        for a in window_points(1, 3) {
            let s = BasisSymbol::new(SymbolKind::L, a.clone());
            let expect = Element::term(s.clone(), emb.embed(&a).unwrap().neg());
            assert_eq!(d.get(&s).unwrap(), &expect);
        }
        let dc = ad_table(&emb, &Element::basis(BasisSymbol::central(1), 0), 3).unwrap();
        for (_, img) in dc.entries() {
            assert!(img.is_zero());
        }
    }

    #[test]
    fn ad_h0_signs() {
        let emb = z_embedding();
        let d = ad_table(&emb, &Element::basis(sym(SymbolKind::H, 0), 0), 3).unwrap();
        let gp = sym(SymbolKind::GPlus, 2);
        assert_eq!(d.get(&gp).unwrap(), &Element::basis(gp.clone(), 0));
        let gm = sym(SymbolKind::GMinus, 2);
        assert_eq!(d.get(&gm).unwrap(), &Element::basis(gm.clone(), 0).neg());
        assert!(d.get(&sym(SymbolKind::L, 2)).unwrap().is_zero());
        assert!(d.get(&sym(SymbolKind::H, 2)).unwrap().is_zero());
    }

    #[test]
    fn odd_inner_matches_ad() {
        let emb = z_embedding();
        for g in -2..=2i64 {
            for (x0, x1) in [(1i64, 0i64), (0, 1), (2, -3)] {
                let recipe = DerivationRecipe::OddInner {
                    xi0: rat(x0, 1, 0),
                    xi1: rat(x1, 1, 0),
                    gamma: GammaElem(vec![g]),
                };
                let d = make_derivation(&emb, &recipe, 4).unwrap();
                let inner = Element::term(sym(SymbolKind::GPlus, g), rat(-x0, 1, 0))
                    .add(&Element::term(sym(SymbolKind::GMinus, g), rat(x1, 1, 0)));
                let a = ad_table(&emb, &inner, 4).unwrap();
                assert!(map_equal(&d, &a, 4).unwrap().is_none());
            }
        }
    }

    #[test]
    fn odd_inner_closed_forms_gamma_zero() {
        let emb = z_embedding();
        let recipe = DerivationRecipe::OddInner {
            xi0: rat(1, 1, 0),
            xi1: rat(0, 1, 0),
            gamma: GammaElem(vec![0]),
        };
        let d = make_derivation(&emb, &recipe, 3).unwrap();
        // D(H_α) = G⁺_α
        assert_eq!(
            d.get(&sym(SymbolKind::H, 2)).unwrap(),
            &Element::basis(sym(SymbolKind::GPlus, 2), 0)
        );
        // D(L_α) = (α/2) G⁺_α
        assert_eq!(
            d.get(&sym(SymbolKind::L, 3)).unwrap(),
            &Element::term(sym(SymbolKind::GPlus, 3), rat(3, 2, 0))
        );
        // D(G⁺_α) = 0
        assert!(d.get(&sym(SymbolKind::GPlus, 1)).unwrap().is_zero());
        // D(G⁻_0) = -2L_0 + 0·H_0 + (1/12)c
        let got = d.get(&sym(SymbolKind::GMinus, 0)).unwrap();
        let expect = Element::term(sym(SymbolKind::L, 0), rat(-2, 1, 0))
            .add(&Element::term(BasisSymbol::central(1), rat(1, 12, 0)));
        assert_eq!(got, &expect);
    }

    #[test]
    fn even_inner_matches_ad() {
        let emb = z_embedding();
        // h0 = 0, η = 1, γ = 1 equals ad(2L_1 + H_1)
        let recipe = DerivationRecipe::EvenInner {
            h0: rat(0, 1, 0),
            eta: rat(1, 1, 0),
            gamma: GammaElem(vec![1]),
        };
        let d = make_derivation(&emb, &recipe, 4).unwrap();
        let inner = Element::term(sym(SymbolKind::L, 1), rat(2, 1, 0))
            .add(&Element::basis(sym(SymbolKind::H, 1), 0));
        let a = ad_table(&emb, &inner, 4).unwrap();
        assert!(map_equal(&d, &a, 4).unwrap().is_none());
    }

    #[test]
    fn even_inner_requires_nonzero_gamma() {
        let emb = z_embedding();
        let recipe = DerivationRecipe::EvenInner {
            h0: rat(1, 1, 0),
            eta: rat(0, 1, 0),
            gamma: GammaElem(vec![0]),
        };
        assert_eq!(
            make_derivation(&emb, &recipe, 2).unwrap_err(),
            Error::ZeroGammaForEvenInner
        );
    }

    #[test]
    fn scaling_zero_recipe_is_zero_table() {
        let emb = z_embedding();
        let recipe = DerivationRecipe::Scaling {
            phi: AdditiveHom::zero(1, 0),
            e0: rat(0, 1, 0),
        };
        let d = make_derivation(&emb, &recipe, 3).unwrap();
        for (_, img) in d.entries() {
            assert!(img.is_zero());
        }
    }

    #[test]
    fn scaling_inner_for_rank_one() {
        let emb = z_embedding();
        // Scaling(φ = 1·ι, e0 = 2) equals ad(-L_0 + 2H_0)
        let recipe = DerivationRecipe::Scaling {
            phi: AdditiveHom::new(vec![rat(1, 1, 0)]),
            e0: rat(2, 1, 0),
        };
        let d = make_derivation(&emb, &recipe, 4).unwrap();
        let inner = Element::term(sym(SymbolKind::L, 0), rat(-1, 1, 0))
            .add(&Element::term(sym(SymbolKind::H, 0), rat(2, 1, 0)));
        let a = ad_table(&emb, &inner, 4).unwrap();
        assert!(map_equal(&d, &a, 4).unwrap().is_none());

        let solved = scaling_inner_solve(
            &emb,
            &AdditiveHom::new(vec![rat(1, 1, 0)]),
            &rat(2, 1, 0),
        )
        .unwrap();
        assert_eq!(solved, Some((rat(-1, 1, 0), rat(2, 1, 0))));
    }

    #[test]
    fn scaling_not_inner_for_generic_rank_two() {
        let emb = GammaEmbedding::generic(2);
        let phi = AdditiveHom::new(vec![Scalar::one(2), Scalar::zero(2)]);
        assert_eq!(
            scaling_inner_solve(&emb, &phi, &Scalar::zero(2)).unwrap(),
            None
        );
    }

    #[test]
    fn leibniz_detects_corruption() {
        let emb = z_embedding();
        let d = ad_table(&emb, &Element::basis(sym(SymbolKind::L, 1), 0), 4).unwrap();
        // flip one entry's sign
        let mut entries: std::collections::BTreeMap<_, _> =
            d.entries().map(|(s, e)| (s.clone(), e.clone())).collect();
        let key = sym(SymbolKind::H, 1);
        let flipped = entries.get(&key).unwrap().neg();
        assert!(!flipped.is_zero());
        entries.insert(key, flipped);
        let bad = GradedMapTable::new(d.degree.clone(), d.parity, d.window, entries);
        let report = leibniz_audit(&emb, &bad, 2).unwrap();
        assert!(!report.passed());
        assert!(report.checks.iter().any(|c| c.witness.is_some()));
    }

    #[test]
    fn decompose_round_trips() {
        let emb = z_embedding();

        let d = ad_table(&emb, &Element::basis(sym(SymbolKind::L, 1), 0), 4).unwrap();
        match decompose_derivation(&emb, &d).unwrap() {
            DerivationRecipe::EvenInner { h0, eta, gamma } => {
                assert_eq!(h0, rat(1, 2, 0));
                assert!(eta.is_zero());
                assert_eq!(gamma, GammaElem(vec![1]));
            }
            other => panic!("unexpected recipe {:?}", other),
        }

        let recipe = DerivationRecipe::OddInner {
            xi0: rat(2, 1, 0),
            xi1: rat(-3, 1, 0),
            gamma: GammaElem(vec![-1]),
        };
        let d = make_derivation(&emb, &recipe, 4).unwrap();
        assert_eq!(decompose_derivation(&emb, &d).unwrap(), recipe);

        let recipe = DerivationRecipe::Scaling {
            phi: AdditiveHom::new(vec![rat(1, 1, 0)]),
            e0: rat(2, 1, 0),
        };
        let d = make_derivation(&emb, &recipe, 4).unwrap();
        assert_eq!(decompose_derivation(&emb, &d).unwrap(), recipe);

        // zero table decomposes as Scaling(0, 0)
        let zero = make_derivation(
            &emb,
            &DerivationRecipe::Scaling {
                phi: AdditiveHom::zero(1, 0),
                e0: rat(0, 1, 0),
            },
            4,
        )
        .unwrap();
        assert_eq!(
            decompose_derivation(&emb, &zero).unwrap(),
            DerivationRecipe::Scaling {
                phi: AdditiveHom::zero(1, 0),
                e0: rat(0, 1, 0),
            }
        );
    }

    #[test]
    fn decompose_rejects_central_leak() {
        let emb = z_embedding();
        let zero = make_derivation(
            &emb,
            &DerivationRecipe::Scaling {
                phi: AdditiveHom::zero(1, 0),
                e0: rat(0, 1, 0),
            },
            2,
        )
        .unwrap();
        let mut entries: std::collections::BTreeMap<_, _> =
            zero.entries().map(|(s, e)| (s.clone(), e.clone())).collect();
        entries.insert(
            BasisSymbol::central(1),
            Element::term(BasisSymbol::central(1), rat(1, 1, 0)),
        );
        let bad = GradedMapTable::new(zero.degree.clone(), zero.parity, zero.window, entries);
        assert_eq!(
            decompose_derivation(&emb, &bad),
            Err(Error::CentralNotKilled)
        );
    }

    #[test]
    fn scaling_tables_add_linearly() {
        let emb = z_embedding();
        let r1 = DerivationRecipe::Scaling {
            phi: AdditiveHom::new(vec![rat(1, 3, 0)]),
            e0: rat(1, 1, 0),
        };
        let r2 = DerivationRecipe::Scaling {
            phi: AdditiveHom::new(vec![rat(5, 2, 0)]),
            e0: rat(-2, 1, 0),
        };
        let sum = DerivationRecipe::Scaling {
            phi: AdditiveHom::new(vec![rat(1, 3, 0).add(&rat(5, 2, 0))]),
            e0: rat(-1, 1, 0),
        };
        let d1 = make_derivation(&emb, &r1, 3).unwrap();
        let d2 = make_derivation(&emb, &r2, 3).unwrap();
        let ds = make_derivation(&emb, &sum, 3).unwrap();
        for (s, img) in ds.entries() {
            assert_eq!(
                img,
                &d1.get(s).unwrap().add(d2.get(s).unwrap())
            );
        }
    }
}
