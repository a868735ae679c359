//! The five-parameter automorphism family: application to elements, the
//! homomorphism audit, parameter-level composition and inversion validated
//! against the functional oracle, and the Klein-four quotient.

use crate::algebra::{window_symbols, BasisSymbol, BracketTable, Element, SymbolKind};
use crate::error::{Error, Result};
use crate::gamma::{GammaElem, GammaEmbedding, MultiplicativeHom};
use crate::report::{CheckRecord, CheckReport, Status, Witness};
use crate::scalar::{rat, Scalar};
use rayon::prelude::*;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn from_i64(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn scalar(self, nvars: usize) -> Scalar {
        Scalar::from_int(self.value(), nvars)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// σ(f, ξ, ε, a, b).
#[derive(Debug, Clone, PartialEq)]
pub struct AutParams {
    pub f: MultiplicativeHom,
    pub xi: Sign,
    pub eps: Sign,
    pub a: GammaElem,
    pub b: Scalar,
}

impl AutParams {
    pub fn new(
        f: MultiplicativeHom,
        xi: Sign,
        eps: Sign,
        a: GammaElem,
        b: Scalar,
    ) -> Result<AutParams> {
        if b.is_zero() {
            return Err(Error::ZeroHomValue);
        }
        Ok(AutParams { f, xi, eps, a, b })
    }

    pub fn identity(rank: usize, nvars: usize) -> AutParams {
        AutParams {
            f: MultiplicativeHom::one(rank, nvars),
            xi: Sign::Plus,
            eps: Sign::Minus.mul(Sign::Minus),
            a: GammaElem::zero(rank),
            b: Scalar::one(nvars),
        }
    }

    pub fn rank(&self) -> usize {
        self.a.rank()
    }
}

impl fmt::Display for AutParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.f.values().iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "(f=[{}], xi={}, eps={}, a={}, b={})",
            vals.join(","),
            self.xi,
            self.eps,
            self.a,
            self.b
        )
    }
}

fn eps_image(eps: Sign, idx: &GammaElem) -> GammaElem {
    if eps == Sign::Plus {
        idx.clone()
    } else {
        idx.neg()
    }
}

/// Per-automorphism invariants hoisted out of the basis-symbol loop.
struct Applier<'a> {
    emb: &'a GammaEmbedding,
    p: &'a AutParams,
    eps: Scalar,
    ia: Scalar,
    binv: Scalar,
}

impl<'a> Applier<'a> {
    fn new(emb: &'a GammaEmbedding, p: &'a AutParams) -> Result<Applier<'a>> {
        let rank = emb.rank();
        emb.check_rank(&p.a)?;
        if p.rank() != rank || p.f.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                got: p.rank(),
            });
        }
        Ok(Applier {
            emb,
            p,
            eps: p.eps.scalar(emb.nvars()),
            ia: emb.embed(&p.a)?,
            binv: p.b.inv()?,
        })
    }

    fn apply(&self, s: &BasisSymbol) -> Result<Element> {
        apply_basis_with(self.emb, self.p, &self.eps, &self.ia, &self.binv, s)
    }
}

/// σ applied to a basis symbol.
pub fn aut_apply_basis(
    emb: &GammaEmbedding,
    p: &AutParams,
    s: &BasisSymbol,
) -> Result<Element> {
    Applier::new(emb, p)?.apply(s)
}

fn apply_basis_with(
    emb: &GammaEmbedding,
    p: &AutParams,
    eps: &Scalar,
    ia: &Scalar,
    binv: &Scalar,
    s: &BasisSymbol,
) -> Result<Element> {
    let nv = emb.nvars();
    let rank = emb.rank();
    Ok(match s.kind {
        SymbolKind::Central => Element::term(BasisSymbol::central(rank), eps.clone()),
        SymbolKind::L => {
            emb.check_rank(&s.index)?;
            let fa = p.f.eval(&s.index)?;
            let mut e = Element::term(
                BasisSymbol::new(SymbolKind::L, eps_image(p.eps, &s.index)),
                eps.mul(&fa),
            );
            e = e.add(&Element::term(
                BasisSymbol::new(SymbolKind::H, eps_image(p.eps, &s.index)),
                fa.mul(ia),
            ));
            if s.index.is_zero() {
                e = e.add(&Element::term(
                    BasisSymbol::central(rank),
                    eps.mul(ia).mul(ia).mul(&rat(1, 6, nv)),
                ));
            }
            e
        }
        SymbolKind::H => {
            let fa = p.f.eval(&s.index)?;
            let xi = p.xi.scalar(nv);
            let mut e = Element::term(
                BasisSymbol::new(SymbolKind::H, eps_image(p.eps, &s.index)),
                xi.mul(&fa),
            );
            if s.index.is_zero() {
                e = e.add(&Element::term(
                    BasisSymbol::central(rank),
                    xi.mul(eps).mul(ia).mul(&rat(1, 3, nv)),
                ));
            }
            e
        }
        SymbolKind::GPlus => {
            let fa = p.f.eval(&s.index)?;
            let coeff = fa.mul(&p.b);
            if p.xi == Sign::Plus {
                Element::term(
                    BasisSymbol::new(SymbolKind::GPlus, eps_image(p.eps, &s.index.add(&p.a))),
                    coeff,
                )
            } else {
                Element::term(
                    BasisSymbol::new(SymbolKind::GMinus, eps_image(p.eps, &s.index.sub(&p.a))),
                    coeff,
                )
            }
        }
        SymbolKind::GMinus => {
            let fa = p.f.eval(&s.index)?;
            let coeff = eps.mul(&fa).mul(binv);
            if p.xi == Sign::Minus {
                Element::term(
                    BasisSymbol::new(SymbolKind::GPlus, eps_image(p.eps, &s.index.add(&p.a))),
                    coeff,
                )
            } else {
                Element::term(
                    BasisSymbol::new(SymbolKind::GMinus, eps_image(p.eps, &s.index.sub(&p.a))),
                    coeff,
                )
            }
        }
    })
}

/// Linear extension of σ over an element.
pub fn aut_apply(emb: &GammaEmbedding, p: &AutParams, x: &Element) -> Result<Element> {
    let ap = Applier::new(emb, p)?;
    let mut acc = Element::zero();
    for (s, c) in x.terms() {
        acc = acc.add(&ap.apply(s)?.scale(c));
    }
    Ok(acc)
}

/// Smallest bracket-table radius covering both the image of an in-window
/// bracket (2N) and the shifted images of in-window symbols (N + |a|).
pub fn audit_radius(p: &AutParams, n: i64) -> i64 {
    let amax = p.a.0.iter().map(|v| v.abs()).max().unwrap_or(0);
    (2 * n).max(n + amax)
}

/// Bracket preservation, monomial form, parity preservation and the
/// degree action α ↦ εα over all window basis pairs.
pub fn aut_audit(emb: &GammaEmbedding, p: &AutParams, n: i64) -> Result<CheckReport> {
    let table = BracketTable::new(emb, audit_radius(p, n));
    aut_audit_with_table(emb, p, n, &table)
}

/// `aut_audit` against a shared precomputed bracket table (radius at least
/// `audit_radius(p, n)`); lets parameter grids amortize the table.
pub fn aut_audit_with_table(
    emb: &GammaEmbedding,
    p: &AutParams,
    n: i64,
    table: &BracketTable,
) -> Result<CheckReport> {
    assert!(table.radius() >= audit_radius(p, n));
    let symbols = window_symbols(emb.rank(), n);
    let applier = Applier::new(emb, p)?;
    let mut images: std::collections::HashMap<BasisSymbol, Element> =
        std::collections::HashMap::new();
    for s in window_symbols(emb.rank(), table.radius()) {
        images.insert(s.clone(), applier.apply(&s)?);
    }
    let mut failures: Vec<CheckRecord> = Vec::new();
    let mut fail = |id: &str, inputs: String, lhs: String, rhs: String| {
        failures.push(CheckRecord {
            id: id.into(),
            status: Status::Fail,
            witness: Some(Witness { inputs, lhs, rhs }),
        });
    };
    for s in &symbols {
        let image = &images[s];
        // monomial form on L_α (α ≠ 0) never applies: L, H images can carry
        // an H and central tail; the single-scaled-symbol claim is for the
        // G and c lines plus H_α, α ≠ 0
        match s.kind {
            SymbolKind::GPlus | SymbolKind::GMinus => {
                let count = image.terms().count();
                let ok = count == 1
                    && image.terms().all(|(t, c)| {
                        (t.kind == SymbolKind::GPlus || t.kind == SymbolKind::GMinus)
                            && !c.is_zero()
                    });
                if !ok {
                    fail(
                        "monomial_form",
                        format!("x = {}", s),
                        image.to_string(),
                        "single scaled G symbol".into(),
                    );
                }
            }
            _ => {}
        }
        // parity preservation
        for (t, _) in image.terms() {
            if t.parity() != s.parity() {
                fail(
                    "parity_preserved",
                    format!("x = {}", s),
                    image.to_string(),
                    format!("parity {}", s.parity()),
                );
            }
        }
    }
    // σ(c) = εc
    let nv = emb.nvars();
    let c_image = &images[&BasisSymbol::central(emb.rank())];
    let c_expect = Element::term(BasisSymbol::central(emb.rank()), p.eps.scalar(nv));
    if *c_image != c_expect {
        fail(
            "central_scaling",
            "x = C".into(),
            c_image.to_string(),
            c_expect.to_string(),
        );
    }
    // bracket preservation: σ([x,y]) via the image map, [σx, σy] via the
    // shared bracket table
    for x in &symbols {
        for y in &symbols {
            let mut lhs = Element::zero();
            for (t, c) in table.basis(x, y).terms() {
                lhs = lhs.add(&images[t].scale(c));
            }
            let rhs = table.elements(&images[x], &images[y]);
            if lhs != rhs {
                fail(
                    "bracket_preserved",
                    format!("x = {}, y = {}", x, y),
                    lhs.to_string(),
                    rhs.to_string(),
                );
            }
        }
    }
    let mut report = CheckReport::new(emb.meta(n));
    report.sweep(&format!("aut_audit[{}; N={}]", p, n), failures);
    Ok(report)
}

/// Oracle-validated composition law for σ(p1) ∘ σ(p2) (p2 applied first).
pub fn aut_compose(p1: &AutParams, p2: &AutParams) -> Result<AutParams> {
    if p1.rank() != p2.rank() {
        return Err(Error::RankMismatch {
            expected: p1.rank(),
            got: p2.rank(),
        });
    }
    // φ(α) = f1(ε2 α) f2(α), evaluated componentwise on the generators
    let f1_twisted = if p2.eps == Sign::Plus {
        p1.f.clone()
    } else {
        p1.f.pow(-1)
    };
    let f = f1_twisted.mul(&p2.f);
    let xi = p1.xi.mul(p2.xi);
    let eps = p1.eps.mul(p2.eps);
    let a = eps_image(p2.eps, &p1.a).add(&if p1.xi == Sign::Plus {
        p2.a.clone()
    } else {
        p2.a.neg()
    });
    let f1_at = p1.f.eval(&eps_image(p2.eps, &p2.a))?;
    let b = if p2.xi == Sign::Plus {
        f1_at.mul(&p1.b).mul(&p2.b)
    } else {
        p1.eps
            .scalar(p1.b.nvars())
            .mul(&f1_at.inv().expect("f values nonzero"))
            .mul(&p1.b.inv().expect("b nonzero"))
            .mul(&p2.b)
    };
    AutParams::new(f, xi, eps, a, b)
}

/// Verbatim transcription of the printed composition law; kept only for
/// comparison against `aut_compose` and the functional oracle.
pub fn compose_paper(p1: &AutParams, p2: &AutParams) -> Result<AutParams> {
    if p1.rank() != p2.rank() {
        return Err(Error::RankMismatch {
            expected: p1.rank(),
            got: p2.rank(),
        });
    }
    let f1_twisted = if p2.eps == Sign::Plus {
        p1.f.clone()
    } else {
        p1.f.pow(-1)
    };
    let f = f1_twisted.mul(&p2.f);
    let xi = p1.xi.mul(p2.xi);
    let eps = p1.eps.mul(p2.eps);
    // a-component: ξ1 ξ2 ε1 a1 + ξ2 a2
    let s1 = p1.xi.mul(p2.xi).mul(p1.eps);
    let a = p1.a.scale(s1.value()).add(&p2.a.scale(p2.xi.value()));
    // b-component: f1(ξ2 ε2 a2) b1^{ξ2} b2
    let arg = p2.a.scale(p2.xi.value() * p2.eps.value());
    let f1_at = p1.f.eval(&arg)?;
    let b1_pow = p1.b.pow_i(p2.xi.value())?;
    let b = f1_at.mul(&b1_pow).mul(&p2.b);
    AutParams::new(f, xi, eps, a, b)
}

/// Oracle-validated inverse.
pub fn aut_inverse(p: &AutParams) -> AutParams {
    let f = p.f.pow(-p.eps.value());
    let a = p.a.scale(-p.xi.value() * p.eps.value());
    let fa = p.f.eval(&p.a).expect("rank matches");
    let b = if p.xi == Sign::Plus {
        fa.mul(&p.b.inv().expect("b nonzero"))
    } else {
        p.eps.scalar(p.b.nvars()).mul(&fa).mul(&p.b)
    };
    AutParams {
        f,
        xi: p.xi,
        eps: p.eps,
        a,
        b,
    }
}

/// Verbatim transcription of the printed inverse formula: b-component
/// sgn(ξ + ε) f(a) b⁻¹, with sgn(0) = 1.
pub fn inverse_paper(p: &AutParams) -> AutParams {
    let f = p.f.pow(-p.eps.value());
    let a = p.a.scale(-p.xi.value() * p.eps.value());
    let fa = p.f.eval(&p.a).expect("rank matches");
    let sgn = if p.xi.value() + p.eps.value() >= 0 {
        1
    } else {
        -1
    };
    let b = Scalar::from_int(sgn, p.b.nvars())
        .mul(&fa)
        .mul(&p.b.inv().expect("b nonzero"));
    AutParams {
        f,
        xi: p.xi,
        eps: p.eps,
        a,
        b,
    }
}

/// (ξ, ε) class in the Klein quotient; τ-membership is ξ = ε = +1.
pub fn klein_class(p: &AutParams) -> ((Sign, Sign), bool) {
    let class = (p.xi, p.eps);
    (class, p.xi == Sign::Plus && p.eps == Sign::Plus)
}

/// Checks σ(compose(p1, p2)) = σ(p1) ∘ σ(p2) on every window basis symbol.
#[cfg(test)]
fn oracle_matches(
    emb: &GammaEmbedding,
    composite: &AutParams,
    p1: &AutParams,
    p2: &AutParams,
    n: i64,
) -> Result<Option<(BasisSymbol, Element, Element)>> {
    for s in window_symbols(emb.rank(), n) {
        let direct = aut_apply_basis(emb, composite, &s)?;
        let chained = aut_apply(emb, p1, &aut_apply_basis(emb, p2, &s)?)?;
        if direct != chained {
            return Ok(Some((s, direct, chained)));
        }
    }
    Ok(None)
}

/// Group-law sweep over a parameter sample: oracle soundness of
/// `aut_compose`, associativity, identity and inverse laws, the Klein
/// quotient, τ-normality, and an informational tally of the printed laws.
pub fn group_audit(
    emb: &GammaEmbedding,
    samples: &[AutParams],
    n: i64,
) -> Result<CheckReport> {
    let rank = emb.rank();
    let nv = emb.nvars();
    let identity = AutParams::identity(rank, nv);
    let mut report = CheckReport::new(emb.meta(n));

    // (i) derived composition vs functional oracle, all pairs. Each
    // sample's images are precomputed on a widened window (the inner map
    // shifts indices by at most its a-component) so the chained side of the
    // oracle is lookups; rows run in parallel and fold back in sample order.
    let symbols = window_symbols(rank, n);
    let amax = samples
        .iter()
        .flat_map(|p| p.a.0.iter().map(|v| v.abs()))
        .max()
        .unwrap_or(0);
    let wide = window_symbols(rank, n + amax);
    let index: std::collections::HashMap<BasisSymbol, usize> = wide
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let tables: Vec<Vec<Element>> = samples
        .par_iter()
        .map(|p| {
            wide.iter()
                .map(|s| aut_apply_basis(emb, p, s))
                .collect::<Result<Vec<Element>>>()
        })
        .collect::<Result<Vec<Vec<Element>>>>()?;
    let sym_at: Vec<usize> = symbols.iter().map(|s| index[s]).collect();
    let rows: Vec<Result<(Vec<CheckRecord>, usize, Option<String>)>> = samples
        .par_iter()
        .enumerate()
        .map(|(i1, p1)| {
            let mut failures = Vec::new();
            let mut disagreements = 0usize;
            let mut example = None;
            for (i2, p2) in samples.iter().enumerate() {
                let composite = aut_compose(p1, p2)?;
                let cap = Applier::new(emb, &composite)?;
                for (k, s) in symbols.iter().enumerate() {
                    let direct = cap.apply(s)?;
                    let mut chained = Element::zero();
                    for (t, c) in tables[i2][sym_at[k]].terms() {
                        chained = chained.add(&tables[i1][index[t]].scale(c));
                    }
                    if direct != chained {
                        failures.push(CheckRecord {
                            id: "compose_oracle".into(),
                            status: Status::Fail,
                            witness: Some(Witness {
                                inputs: format!("p1 = {}, p2 = {}, x = {}", p1, p2, s),
                                lhs: direct.to_string(),
                                rhs: chained.to_string(),
                            }),
                        });
                        break;
                    }
                }
                // the parameter tuple is injective (ε from the central image,
                // ξ from the G⁺ target kind, f from the H coefficients, a
                // from the index shift, b from σ(G⁺_0)), so differing
                // parameters always mean differing maps
                let printed = compose_paper(p1, p2)?;
                if printed != composite {
                    disagreements += 1;
                    if example.is_none() {
                        example = Some(format!("p1 = {}, p2 = {} -> {}", p1, p2, printed));
                    }
                }
            }
            Ok((failures, disagreements, example))
        })
        .collect();
    let mut failures = Vec::new();
    let mut paper_compose_disagreements = 0usize;
    let mut paper_compose_example: Option<String> = None;
    for row in rows {
        let (f, d, e) = row?;
        failures.extend(f);
        paper_compose_disagreements += d;
        if paper_compose_example.is_none() {
            paper_compose_example = e;
        }
    }
    report.sweep("group_compose_oracle", failures);
    report.info(
        "paper_compose_vs_oracle",
        paper_compose_example.unwrap_or_else(|| "no disagreement".into()),
        format!("{} disagreeing pairs", paper_compose_disagreements),
        "transcribed composition formula",
    );

    // (ii) associativity on a deterministic triple subsample
    let mut failures = Vec::new();
    let stride = (samples.len() / 12).max(1);
    for (i, p1) in samples.iter().enumerate().step_by(stride) {
        for (j, p2) in samples.iter().enumerate().step_by(stride) {
            for p3 in samples.iter().skip((i + j) % stride).step_by(stride) {
                let left = aut_compose(&aut_compose(p1, p2)?, p3)?;
                let right = aut_compose(p1, &aut_compose(p2, p3)?)?;
                if left != right {
                    failures.push(CheckRecord {
                        id: "associativity".into(),
                        status: Status::Fail,
                        witness: Some(Witness {
                            inputs: format!("p1 = {}, p2 = {}, p3 = {}", p1, p2, p3),
                            lhs: left.to_string(),
                            rhs: right.to_string(),
                        }),
                    });
                }
            }
        }
    }
    report.sweep("group_associativity", failures);

    // (iii) identity and two-sided inverse laws
    let mut failures = Vec::new();
    let mut paper_inverse_disagreements = 0usize;
    let mut paper_inverse_example: Option<String> = None;
    for p in samples {
        if aut_compose(p, &identity)? != *p || aut_compose(&identity, p)? != *p {
            failures.push(CheckRecord {
                id: "identity_law".into(),
                status: Status::Fail,
                witness: Some(Witness {
                    inputs: format!("p = {}", p),
                    lhs: aut_compose(p, &identity)?.to_string(),
                    rhs: p.to_string(),
                }),
            });
        }
        let q = aut_inverse(p);
        if aut_compose(p, &q)? != identity || aut_compose(&q, p)? != identity {
            failures.push(CheckRecord {
                id: "inverse_law".into(),
                status: Status::Fail,
                witness: Some(Witness {
                    inputs: format!("p = {}", p),
                    lhs: aut_compose(p, &q)?.to_string(),
                    rhs: identity.to_string(),
                }),
            });
        }
        if aut_inverse(&q) != *p {
            failures.push(CheckRecord {
                id: "inverse_involution".into(),
                status: Status::Fail,
                witness: Some(Witness {
                    inputs: format!("p = {}", p),
                    lhs: aut_inverse(&q).to_string(),
                    rhs: p.to_string(),
                }),
            });
        }
        let printed = inverse_paper(p);
        if printed != q && aut_compose(p, &printed)? != identity {
            paper_inverse_disagreements += 1;
            if paper_inverse_example.is_none() {
                paper_inverse_example = Some(format!("p = {} -> {}", p, printed));
            }
        }
    }
    report.sweep("group_identity_and_inverse", failures);
    report.info(
        "paper_inverse_vs_oracle",
        paper_inverse_example.unwrap_or_else(|| "no disagreement".into()),
        format!("{} disagreeing parameters", paper_inverse_disagreements),
        "transcribed inverse formula",
    );

    // (iv) Klein quotient: class map is a homomorphism with kernel τ
    let mut failures = Vec::new();
    let mut classes_seen = std::collections::BTreeSet::new();
    for p in samples {
        let ((xi, eps), is_tau) = klein_class(p);
        classes_seen.insert((xi.value(), eps.value()));
        if is_tau != (xi == Sign::Plus && eps == Sign::Plus) {
            failures.push(CheckRecord {
                id: "klein_kernel".into(),
                status: Status::Fail,
                witness: Some(Witness {
                    inputs: format!("p = {}", p),
                    lhs: format!("tau = {}", is_tau),
                    rhs: "tau iff (1,1)".into(),
                }),
            });
        }
    }
    for p1 in samples.iter().step_by(stride) {
        for p2 in samples.iter().step_by(stride) {
            let ((x1, e1), _) = klein_class(p1);
            let ((x2, e2), _) = klein_class(p2);
            let ((xc, ec), _) = klein_class(&aut_compose(p1, p2)?);
            if xc != x1.mul(x2) || ec != e1.mul(e2) {
                failures.push(CheckRecord {
                    id: "klein_homomorphism".into(),
                    status: Status::Fail,
                    witness: Some(Witness {
                        inputs: format!("p1 = {}, p2 = {}", p1, p2),
                        lhs: format!("({}, {})", xc, ec),
                        rhs: format!("({}, {})", x1.mul(x2), e1.mul(e2)),
                    }),
                });
            }
        }
    }
    if classes_seen.len() == 4 {
        report.pass("klein_all_classes_realized");
    } else {
        report.fail(
            "klein_all_classes_realized",
            format!("classes seen: {:?}", classes_seen),
            format!("{}", classes_seen.len()),
            "4",
        );
    }
    report.sweep("klein_quotient", failures);

    // (v) τ-normality: conjugates of τ-members stay in τ
    let mut failures = Vec::new();
    for p in samples.iter().step_by(stride) {
        for t in samples {
            if !klein_class(t).1 {
                continue;
            }
            let conj = aut_compose(&aut_compose(p, t)?, &aut_inverse(p))?;
            if !klein_class(&conj).1 {
                failures.push(CheckRecord {
                    id: "tau_normality".into(),
                    status: Status::Fail,
                    witness: Some(Witness {
                        inputs: format!("p = {}, t = {}", p, t),
                        lhs: conj.to_string(),
                        rhs: "tau member".into(),
                    }),
                });
            }
        }
    }
    report.sweep("tau_normality", failures);

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_embedding() -> GammaEmbedding {
        GammaEmbedding::rational(rat(1, 1, 0)).unwrap()
    }

    fn params(f: Scalar, xi: i64, eps: i64, a: i64, b: Scalar) -> AutParams {
        AutParams::new(
            MultiplicativeHom::new(vec![f]).unwrap(),
            Sign::from_i64(xi).unwrap(),
            Sign::from_i64(eps).unwrap(),
            GammaElem(vec![a]),
            b,
        )
        .unwrap()
    }

    fn sym(kind: SymbolKind, i: i64) -> BasisSymbol {
        BasisSymbol::new(kind, GammaElem(vec![i]))
    }

    #[test]
    fn apply_examples() {
        let emb = z_embedding();
        let id = AutParams::identity(1, 0);
        assert_eq!(
            aut_apply_basis(&emb, &id, &sym(SymbolKind::L, 3)).unwrap(),
            Element::basis(sym(SymbolKind::L, 3), 0)
        );

        // a = 2: σ(L_0) = L_0 + 2H_0 + (2/3)c
        let p = params(rat(1, 1, 0), 1, 1, 2, rat(1, 1, 0));
        let got = aut_apply_basis(&emb, &p, &sym(SymbolKind::L, 0)).unwrap();
        let expect = Element::basis(sym(SymbolKind::L, 0), 0)
            .add(&Element::term(sym(SymbolKind::H, 0), rat(2, 1, 0)))
            .add(&Element::term(BasisSymbol::central(1), rat(2, 3, 0)));
        assert_eq!(got, expect);

        // ξ = ε = -1: σ(G⁺_3) = G⁻_{-3}, σ(c) = -c
        let p = params(rat(1, 1, 0), -1, -1, 0, rat(1, 1, 0));
        assert_eq!(
            aut_apply_basis(&emb, &p, &sym(SymbolKind::GPlus, 3)).unwrap(),
            Element::basis(sym(SymbolKind::GMinus, -3), 0)
        );
        assert_eq!(
            aut_apply_basis(&emb, &p, &BasisSymbol::central(1)).unwrap(),
            Element::term(BasisSymbol::central(1), rat(-1, 1, 0))
        );

        // f = 2, b = 3: σ(G⁺_1) = 6G⁺_1
        let p = params(rat(2, 1, 0), 1, 1, 0, rat(3, 1, 0));
        assert_eq!(
            aut_apply_basis(&emb, &p, &sym(SymbolKind::GPlus, 1)).unwrap(),
            Element::term(sym(SymbolKind::GPlus, 1), rat(6, 1, 0))
        );
    }

    #[test]
    fn audit_passes_on_grid_points() {
        let emb = z_embedding();
        assert!(aut_audit(&emb, &AutParams::identity(1, 0), 5).unwrap().passed());
        let p = params(rat(2, 1, 0), -1, -1, 1, rat(1, 2, 0));
        assert!(aut_audit(&emb, &p, 5).unwrap().passed());
    }

    #[test]
    fn audit_passes_generic_rank_two() {
        let emb = GammaEmbedding::generic(2);
        let p = AutParams::new(
            MultiplicativeHom::new(vec![Scalar::var(0, 2), rat(2, 1, 2)]).unwrap(),
            Sign::Plus,
            Sign::Minus,
            GammaElem(vec![1, 0]),
            Scalar::var(1, 2),
        )
        .unwrap();
        assert!(aut_audit(&emb, &p, 2).unwrap().passed());
    }

    #[test]
    fn compose_identity_laws() {
        let p = params(rat(2, 1, 0), -1, 1, 1, rat(1, 2, 0));
        let id = AutParams::identity(1, 0);
        assert_eq!(aut_compose(&p, &id).unwrap(), p);
        assert_eq!(aut_compose(&id, &p).unwrap(), p);
    }

    #[test]
    fn compose_f_component() {
        // f1 = 2 (ε2 = -1), f2 = 3: composite f = 3/2
        let p1 = params(rat(2, 1, 0), 1, 1, 0, rat(1, 1, 0));
        let p2 = params(rat(3, 1, 0), 1, -1, 0, rat(1, 1, 0));
        let got = aut_compose(&p1, &p2).unwrap();
        assert_eq!(got.f.values()[0], rat(3, 2, 0));
    }

    #[test]
    fn compose_matches_functional_oracle() {
        let emb = z_embedding();
        let ps = [
            params(rat(1, 1, 0), 1, -1, 1, rat(1, 1, 0)),
            params(rat(2, 1, 0), -1, 1, -2, rat(3, 1, 0)),
            params(rat(1, 2, 0), -1, -1, 0, rat(1, 2, 0)),
        ];
        for p1 in &ps {
            for p2 in &ps {
                let c = aut_compose(p1, p2).unwrap();
                assert!(oracle_matches(&emb, &c, p1, p2, 3).unwrap().is_none());
            }
        }
    }

    #[test]
    fn paper_a_component_fails_right_identity() {
        // p1 = (1, 1, -1, a=1, 1), p2 = identity: printed law gives a = -1
        let p1 = params(rat(1, 1, 0), 1, -1, 1, rat(1, 1, 0));
        let id = AutParams::identity(1, 0);
        let printed = compose_paper(&p1, &id).unwrap();
        assert_eq!(printed.a, GammaElem(vec![-1]));
        let derived = aut_compose(&p1, &id).unwrap();
        assert_eq!(derived.a, GammaElem(vec![1]));
        assert_eq!(derived, p1);
    }

    #[test]
    fn inverse_examples() {
        let id = AutParams::identity(1, 0);
        assert_eq!(aut_inverse(&id), id);

        // p = (1, 1, 1, a=2, b=5) -> q = (1, 1, 1, -2, 1/5)
        let p = params(rat(1, 1, 0), 1, 1, 2, rat(5, 1, 0));
        let q = aut_inverse(&p);
        assert_eq!(q, params(rat(1, 1, 0), 1, 1, -2, rat(1, 5, 0)));

        // ξ = -1, b = 2 is self-inverse; the printed formula returns 1/2
        let p = params(rat(1, 1, 0), -1, 1, 0, rat(2, 1, 0));
        let q = aut_inverse(&p);
        assert_eq!(q, p);
        assert_eq!(aut_compose(&p, &q).unwrap(), id);
        let printed = inverse_paper(&p);
        assert_eq!(printed.b, rat(1, 2, 0));
        assert_ne!(aut_compose(&p, &printed).unwrap(), id);
    }

    #[test]
    fn self_inverse_flip_on_basis() {
        // σ(G⁺_α) = 2G⁻_α and σ(G⁻_α) = (1/2)G⁺_α
        let emb = z_embedding();
        let p = params(rat(1, 1, 0), -1, 1, 0, rat(2, 1, 0));
        assert_eq!(
            aut_apply_basis(&emb, &p, &sym(SymbolKind::GPlus, 4)).unwrap(),
            Element::term(sym(SymbolKind::GMinus, 4), rat(2, 1, 0))
        );
        assert_eq!(
            aut_apply_basis(&emb, &p, &sym(SymbolKind::GMinus, 4)).unwrap(),
            Element::term(sym(SymbolKind::GPlus, 4), rat(1, 2, 0))
        );
    }

    #[test]
    fn klein_classes() {
        let id = AutParams::identity(1, 0);
        assert_eq!(klein_class(&id), ((Sign::Plus, Sign::Plus), true));
        let p = params(rat(1, 1, 0), -1, 1, 0, rat(1, 1, 0));
        assert_eq!(klein_class(&p), ((Sign::Minus, Sign::Plus), false));
        // (-1,1)·(1,-1) = (-1,-1)
        let q = params(rat(1, 1, 0), 1, -1, 0, rat(1, 1, 0));
        let ((xi, eps), _) = klein_class(&aut_compose(&p, &q).unwrap());
        assert_eq!((xi, eps), (Sign::Minus, Sign::Minus));
    }

    #[test]
    fn group_audit_small_grid() {
        let emb = z_embedding();
        let mut samples = Vec::new();
        for xi in [1i64, -1] {
            for eps in [1i64, -1] {
                for a in [-1i64, 0, 1] {
                    for b in [rat(1, 1, 0), rat(2, 1, 0)] {
                        for f in [rat(1, 1, 0), rat(2, 1, 0)] {
                            samples.push(params(f.clone(), xi, eps, a, b.clone()));
                        }
                    }
                }
            }
        }
        let report = group_audit(&emb, &samples, 3).unwrap();
        assert!(report.passed(), "{}", report);
        // informational records report the printed-law disagreements
        let infos: Vec<_> = report
            .checks
            .iter()
            .filter(|c| c.status == Status::Info)
            .collect();
        assert_eq!(infos.len(), 2);
    }
}
