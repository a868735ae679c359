//! The algebra itself: basis symbols, elements, the super-bracket and the
//! exhaustive structural audits over finite index windows.

use crate::error::{Error, Result};
use crate::gamma::{window_points, GammaElem, GammaEmbedding};
use crate::report::{CheckRecord, CheckReport, Status, Witness};
use crate::scalar::{rat, Scalar};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn sign_product(self, other: Parity) -> i64 {
        // (-1)^{|x||y|}
        if self == Parity::Odd && other == Parity::Odd {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SymbolKind {
    L,
    H,
    GPlus,
    GMinus,
    Central,
}

impl SymbolKind {
    pub fn parity(self) -> Parity {
        match self {
            SymbolKind::GPlus | SymbolKind::GMinus => Parity::Odd,
            _ => Parity::Even,
        }
    }

    pub fn text(self) -> &'static str {
        match self {
            SymbolKind::L => "L",
            SymbolKind::H => "H",
            SymbolKind::GPlus => "G+",
            SymbolKind::GMinus => "G-",
            SymbolKind::Central => "C",
        }
    }

    pub fn from_text(s: &str) -> Option<SymbolKind> {
        match s {
            "L" => Some(SymbolKind::L),
            "H" => Some(SymbolKind::H),
            "G+" => Some(SymbolKind::GPlus),
            "G-" => Some(SymbolKind::GMinus),
            "C" => Some(SymbolKind::Central),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisSymbol {
    pub kind: SymbolKind,
    pub index: GammaElem,
}

impl BasisSymbol {
    pub fn new(kind: SymbolKind, index: GammaElem) -> Self {
        BasisSymbol { kind, index }
    }

    pub fn central(rank: usize) -> Self {
        BasisSymbol {
            kind: SymbolKind::Central,
            index: GammaElem::zero(rank),
        }
    }

    pub fn parity(&self) -> Parity {
        self.kind.parity()
    }

    /// Γ-degree; the central element sits in degree 0.
    pub fn degree(&self) -> &GammaElem {
        &self.index
    }
}

impl fmt::Display for BasisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind == SymbolKind::Central {
            write!(f, "C")
        } else {
            let idx: Vec<String> = self.index.0.iter().map(|x| x.to_string()).collect();
            write!(f, "{}({})", self.kind.text(), idx.join(","))
        }
    }
}

/// Finite linear combination of basis symbols; zero coefficients are never
/// stored, so structural equality is algebra equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<BasisSymbol, Scalar>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn basis(symbol: BasisSymbol, nvars: usize) -> Element {
        Element::term(symbol, Scalar::one(nvars))
    }

    pub fn term(symbol: BasisSymbol, coeff: Scalar) -> Element {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(symbol, coeff);
        }
        Element { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisSymbol, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, symbol: &BasisSymbol) -> Option<&Scalar> {
        self.terms.get(symbol)
    }

    pub fn coeff_or_zero(&self, symbol: &BasisSymbol, nvars: usize) -> Scalar {
        self.terms
            .get(symbol)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(nvars))
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut terms = self.terms.clone();
        for (s, c) in &other.terms {
            match terms.get_mut(s) {
                Some(existing) => {
                    let sum = existing.add(c);
                    if sum.is_zero() {
                        terms.remove(s);
                    } else {
                        *existing = sum;
                    }
                }
                None => {
                    terms.insert(s.clone(), c.clone());
                }
            }
        }
        Element { terms }
    }

    pub fn sub(&self, other: &Element) -> Element {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (s.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &Scalar) -> Element {
        if k.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self
                .terms
                .iter()
                .map(|(s, c)| (s.clone(), c.mul(k)))
                .collect(),
        }
    }

    /// Common degree and parity of all terms, or `NotHomogeneous`.
    /// The central element is even of degree 0 and mixes with any even
    /// degree-0 part.
    pub fn homogeneous_type(&self, rank: usize) -> Result<(GammaElem, Parity)> {
        let mut deg: Option<GammaElem> = None;
        let mut par: Option<Parity> = None;
        for (s, _) in &self.terms {
            let d = if s.kind == SymbolKind::Central {
                GammaElem::zero(rank)
            } else {
                s.index.clone()
            };
            match &deg {
                None => deg = Some(d),
                Some(existing) if *existing == d => {}
                Some(_) => return Err(Error::NotHomogeneous),
            }
            match par {
                None => par = Some(s.parity()),
                Some(existing) if existing == s.parity() => {}
                Some(_) => return Err(Error::NotHomogeneous),
            }
        }
        match (deg, par) {
            (Some(d), Some(p)) => Ok((d, p)),
            _ => Err(Error::NotHomogeneous),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in &self.terms {
            let (neg, mag) = if c.is_constant() {
                let v = c.as_rational().unwrap();
                let negative = v < num::rational::BigRational::from(num::BigInt::from(0));
                let m = if negative { c.neg() } else { c.clone() };
                (negative, m)
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() {
                write!(f, "{}", s)?;
            } else if mag.is_constant() {
                write!(f, "{}*{}", mag, s)?;
            } else {
                write!(f, "({})*{}", mag, s)?;
            }
        }
        Ok(())
    }
}

/// All basis symbols with window-bounded index, in deterministic order,
/// with the central element last.
pub fn window_symbols(rank: usize, n: i64) -> Vec<BasisSymbol> {
    let mut out = Vec::new();
    for kind in [
        SymbolKind::L,
        SymbolKind::H,
        SymbolKind::GPlus,
        SymbolKind::GMinus,
    ] {
        for idx in window_points(rank, n) {
            out.push(BasisSymbol::new(kind, idx));
        }
    }
    out.push(BasisSymbol::central(rank));
    out
}

fn delta_zero(a: &GammaElem, b: &GammaElem) -> bool {
    a.add(b).is_zero()
}

/// Super-bracket of two basis symbols. The defining relations list one
/// orientation of each pair; the remaining orientations follow from
/// super-(anti)symmetry and unlisted pairs vanish.
pub fn bracket_basis(
    emb: &GammaEmbedding,
    x: &BasisSymbol,
    y: &BasisSymbol,
) -> Result<Element> {
    use SymbolKind::*;
    let nv = emb.nvars();
    if x.kind == Central || y.kind == Central {
        return Ok(Element::zero());
    }
    emb.check_rank(&x.index)?;
    emb.check_rank(&y.index)?;
    let a = &x.index;
    let b = &y.index;
    let ia = emb.embed(a)?;
    let ib = emb.embed(b)?;
    let sum = a.add(b);
    let rank = emb.rank();
    let central = BasisSymbol::central(rank);
    let elem = match (x.kind, y.kind) {
        (L, L) => {
            let mut e = Element::term(
                BasisSymbol::new(L, sum.clone()),
                ia.sub(&ib),
            );
            if delta_zero(a, b) {
                // c/12 (α³ - α)
                let cube = ia.mul(&ia).mul(&ia);
                let coeff = cube.sub(&ia).mul(&rat(1, 12, nv));
                e = e.add(&Element::term(central, coeff));
            }
            e
        }
        (H, H) => {
            if delta_zero(a, b) {
                Element::term(central, ia.mul(&rat(1, 3, nv)))
            } else {
                Element::zero()
            }
        }
        (L, H) => Element::term(BasisSymbol::new(H, sum), ib.neg()),
        (H, L) => Element::term(BasisSymbol::new(H, sum), ia),
        (L, GPlus) | (L, GMinus) => {
            let kind = y.kind;
            Element::term(
                BasisSymbol::new(kind, sum),
                ia.mul(&rat(1, 2, nv)).sub(&ib),
            )
        }
        (GPlus, L) | (GMinus, L) => {
            let kind = x.kind;
            Element::term(
                BasisSymbol::new(kind, sum),
                ib.mul(&rat(1, 2, nv)).sub(&ia).neg(),
            )
        }
        (H, GPlus) => Element::term(BasisSymbol::new(GPlus, sum), Scalar::one(nv)),
        (H, GMinus) => Element::term(BasisSymbol::new(GMinus, sum), Scalar::one(nv).neg()),
        (GPlus, H) => Element::term(BasisSymbol::new(GPlus, sum), Scalar::one(nv).neg()),
        (GMinus, H) => Element::term(BasisSymbol::new(GMinus, sum), Scalar::one(nv)),
        (GMinus, GPlus) | (GPlus, GMinus) => {
            // [G⁻_α, G⁺_β] = 2L - (α-β)H + (c/3)(α² - 1/4)δ; the reversed
            // orientation is symmetric (odd-odd)
            let (ga, gb) = if x.kind == GMinus {
                (ia.clone(), ib.clone())
            } else {
                (ib.clone(), ia.clone())
            };
            let mut e = Element::term(BasisSymbol::new(L, sum.clone()), rat(2, 1, nv));
            e = e.add(&Element::term(
                BasisSymbol::new(H, sum),
                ga.sub(&gb).neg(),
            ));
            if delta_zero(a, b) {
                let coeff = ga.mul(&ga).sub(&rat(1, 4, nv)).mul(&rat(1, 3, nv));
                e = e.add(&Element::term(central, coeff));
            }
            e
        }
        (GPlus, GPlus) | (GMinus, GMinus) => Element::zero(),
        _ => unreachable!("central handled above"),
    };
    Ok(elem)
}

/// Bilinear extension of the super-bracket.
pub fn bracket(emb: &GammaEmbedding, x: &Element, y: &Element) -> Result<Element> {
    let mut acc = Element::zero();
    for (sx, cx) in x.terms() {
        for (sy, cy) in y.terms() {
            let base = bracket_basis(emb, sx, sy)?;
            acc = acc.add(&base.scale(&cx.mul(cy)));
        }
    }
    Ok(acc)
}

/// ad(x): y ↦ [x, y].
pub fn ad(emb: &GammaEmbedding, x: &Element, y: &Element) -> Result<Element> {
    bracket(emb, x, y)
}

/// Precomputed basis-pair brackets out to a fixed index radius; turns the
/// inner loops of exhaustive sweeps into lookups plus coefficient scaling.
pub struct BracketTable {
    map: std::collections::HashMap<(BasisSymbol, BasisSymbol), Element>,
    radius: i64,
}

impl BracketTable {
    pub fn new(emb: &GammaEmbedding, radius: i64) -> BracketTable {
        let wide = window_symbols(emb.rank(), radius);
        let map = wide
            .par_iter()
            .flat_map_iter(|x| wide.iter().map(move |y| (x, y)))
            .map(|(x, y)| {
                (
                    (x.clone(), y.clone()),
                    bracket_basis(emb, x, y).expect("rank matches"),
                )
            })
            .collect();
        BracketTable { map, radius }
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn basis(&self, x: &BasisSymbol, y: &BasisSymbol) -> &Element {
        &self.map[&(x.clone(), y.clone())]
    }

    /// Bilinear extension; every index of both elements must lie within
    /// the table radius.
    pub fn elements(&self, x: &Element, y: &Element) -> Element {
        let mut acc = Element::zero();
        for (s, c) in x.terms() {
            for (t, d) in y.terms() {
                acc = acc.add(&self.basis(s, t).scale(&c.mul(d)));
            }
        }
        acc
    }

    /// [x, w] for a single basis symbol against an element.
    pub fn basis_elem(&self, x: &BasisSymbol, w: &Element) -> Element {
        let mut acc = Element::zero();
        for (t, c) in w.terms() {
            acc = acc.add(&self.basis(x, t).scale(c));
        }
        acc
    }

    /// [w, z] for an element against a single basis symbol.
    pub fn elem_basis(&self, w: &Element, z: &BasisSymbol) -> Element {
        let mut acc = Element::zero();
        for (t, c) in w.terms() {
            acc = acc.add(&self.basis(t, z).scale(c));
        }
        acc
    }
}

fn witness_record(id: String, inputs: String, lhs: &Element, rhs: &Element) -> CheckRecord {
    CheckRecord {
        id,
        status: Status::Fail,
        witness: Some(Witness {
            inputs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }),
    }
}

/// Asserts [L_0, x] = -ι(α) x for every window basis symbol.
pub fn grade_audit(emb: &GammaEmbedding, n: i64) -> CheckReport {
    let rank = emb.rank();
    let nv = emb.nvars();
    let l0 = Element::basis(BasisSymbol::new(SymbolKind::L, GammaElem::zero(rank)), nv);
    let mut failures = Vec::new();
    for s in window_symbols(rank, n) {
        let x = Element::basis(s.clone(), nv);
        let lhs = bracket(emb, &l0, &x).expect("in-window bracket");
        let degree = if s.kind == SymbolKind::Central {
            GammaElem::zero(rank)
        } else {
            s.index.clone()
        };
        let rhs = x.scale(&emb.embed(&degree).expect("rank matches").neg());
        if lhs != rhs {
            failures.push(witness_record(
                "grading".into(),
                format!("x = {}", s),
                &lhs,
                &rhs,
            ));
        }
    }
    let mut report = CheckReport::new(emb.meta(n));
    report.sweep(&format!("grading[N={}]", n), failures);
    report
}

/// Super-antisymmetry, degree and parity additivity over all window pairs,
/// and the graded Jacobi identity over all window triples.
pub fn structure_audit(emb: &GammaEmbedding, n: i64) -> CheckReport {
    let rank = emb.rank();
    let nv = emb.nvars();
    let symbols = window_symbols(rank, n);
    let mut report = CheckReport::new(emb.meta(n));

    // pair sweep
    let pair_failures: Vec<CheckRecord> = symbols
        .par_iter()
        .flat_map_iter(|x| symbols.iter().map(move |y| (x, y)))
        .filter_map(|(x, y)| {
            let xy = bracket(emb, &Element::basis(x.clone(), nv), &Element::basis(y.clone(), nv))
                .expect("rank matches");
            let yx = bracket(emb, &Element::basis(y.clone(), nv), &Element::basis(x.clone(), nv))
                .expect("rank matches");
            let sign = x.parity().sign_product(y.parity());
            let expected = if sign == 1 { yx.neg() } else { yx.clone() };
            if xy != expected {
                return Some(witness_record(
                    "super_antisymmetry".into(),
                    format!("x = {}, y = {}", x, y),
                    &xy,
                    &expected,
                ));
            }
            // degree and parity additivity of the product
            let deg = x.degree().add(y.degree());
            let par = x.parity().add(y.parity());
            for (s, _) in xy.terms() {
                let sdeg = if s.kind == SymbolKind::Central {
                    GammaElem::zero(rank)
                } else {
                    s.index.clone()
                };
                if sdeg != deg || s.parity() != par {
                    return Some(witness_record(
                        "degree_parity_additivity".into(),
                        format!("x = {}, y = {}", x, y),
                        &xy,
                        &Element::zero(),
                    ));
                }
            }
            None
        })
        .collect();
    report.sweep(&format!("super_antisymmetry_and_grading[N={}]", n), pair_failures);

    // triple sweep: [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]].
    // Basis-pair brackets are memoized out to radius 2N so the nested
    // brackets reduce to lookups and coefficient scaling.
    let table = BracketTable::new(emb, 2 * n);
    let count = symbols.len();
    let jacobi_failures: Vec<CheckRecord> = (0..count)
        .into_par_iter()
        .flat_map_iter(|i| (0..count).flat_map(move |j| (0..count).map(move |k| (i, j, k))))
        .filter_map(|(i, j, k)| {
            let (x, y, z) = (&symbols[i], &symbols[j], &symbols[k]);
            let lhs = table.basis_elem(x, table.basis(y, z));
            let r1 = table.elem_basis(table.basis(x, y), z);
            let r2 = table.basis_elem(y, table.basis(x, z));
            let rhs = if x.parity().sign_product(y.parity()) == 1 {
                r1.add(&r2)
            } else {
                r1.sub(&r2)
            };
            if lhs != rhs {
                Some(witness_record(
                    "super_jacobi".into(),
                    format!("x = {}, y = {}, z = {}", x, y, z),
                    &lhs,
                    &rhs,
                ))
            } else {
                None
            }
        })
        .collect();
    report.sweep(&format!("super_jacobi[N={}]", n), jacobi_failures);
    report
}

/// Asserts (ad G^sign_γ)^k = 0 on every window basis symbol.
pub fn nilpotency_check(
    emb: &GammaEmbedding,
    gamma: &GammaElem,
    plus: bool,
    n: i64,
    order: u32,
) -> CheckReport {
    let nv = emb.nvars();
    let kind = if plus {
        SymbolKind::GPlus
    } else {
        SymbolKind::GMinus
    };
    let g = Element::basis(BasisSymbol::new(kind, gamma.clone()), nv);
    let mut failures = Vec::new();
    for s in window_symbols(emb.rank(), n) {
        let mut x = Element::basis(s.clone(), nv);
        for _ in 0..order {
            x = bracket(emb, &g, &x).expect("rank matches");
        }
        if !x.is_zero() {
            failures.push(witness_record(
                "nilpotency".into(),
                format!("(ad {})^{} applied to {}", g, order, s),
                &x,
                &Element::zero(),
            ));
        }
    }
    let mut report = CheckReport::new(emb.meta(n));
    report.sweep(
        &format!("nilpotency[{}{}, k={}]", kind.text(), gamma, order),
        failures,
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn z_embedding() -> GammaEmbedding {
        GammaEmbedding::rational(rat(1, 1, 0)).unwrap()
    }

    fn sym(kind: SymbolKind, i: i64) -> BasisSymbol {
        BasisSymbol::new(kind, GammaElem(vec![i]))
    }

    fn b(emb: &GammaEmbedding, x: &BasisSymbol, y: &BasisSymbol) -> Element {
        bracket_basis(emb, x, y).unwrap()
    }

    #[test]
    fn bracket_ll_with_central_term() {
        let emb = z_embedding();
        let got = b(&emb, &sym(SymbolKind::L, 2), &sym(SymbolKind::L, -2));
        let expect = Element::term(sym(SymbolKind::L, 0), rat(4, 1, 0))
            .add(&Element::term(BasisSymbol::central(1), rat(1, 2, 0)));
        assert_eq!(got, expect);
        assert_eq!(got.to_string(), "4*L(0) + 1/2*C");
    }

    #[test]
    fn bracket_hh() {
        let emb = z_embedding();
        let got = b(&emb, &sym(SymbolKind::H, 1), &sym(SymbolKind::H, -1));
        assert_eq!(got, Element::term(BasisSymbol::central(1), rat(1, 3, 0)));
    }

    #[test]
    fn bracket_lg() {
        let emb = z_embedding();
        let got = b(&emb, &sym(SymbolKind::L, 3), &sym(SymbolKind::GPlus, 1));
        assert_eq!(
            got,
            Element::term(sym(SymbolKind::GPlus, 4), rat(1, 2, 0))
        );
    }

    #[test]
    fn bracket_hg_minus() {
        let emb = z_embedding();
        let got = b(&emb, &sym(SymbolKind::H, 2), &sym(SymbolKind::GMinus, 0));
        assert_eq!(
            got,
            Element::term(sym(SymbolKind::GMinus, 2), rat(-1, 1, 0))
        );
    }

    #[test]
    fn bracket_gg_cross() {
        let emb = z_embedding();
        let got = b(&emb, &sym(SymbolKind::GMinus, 1), &sym(SymbolKind::GPlus, -1));
        let expect = Element::term(sym(SymbolKind::L, 0), rat(2, 1, 0))
            .add(&Element::term(sym(SymbolKind::H, 0), rat(-2, 1, 0)))
            .add(&Element::term(BasisSymbol::central(1), rat(1, 4, 0)));
        assert_eq!(got, expect);
    }

    #[test]
    fn central_and_unlisted_pairs_vanish() {
        let emb = z_embedding();
        assert!(b(&emb, &BasisSymbol::central(1), &sym(SymbolKind::L, 5)).is_zero());
        assert!(b(&emb, &sym(SymbolKind::GPlus, 0), &sym(SymbolKind::GPlus, 0)).is_zero());
    }

    #[test]
    fn central_coefficient_vanishes_at_special_indices() {
        let emb = z_embedding();
        for i in [-1i64, 0, 1] {
            let got = b(&emb, &sym(SymbolKind::L, i), &sym(SymbolKind::L, -i));
            assert!(got.coeff(&BasisSymbol::central(1)).is_none());
        }
        let got = b(&emb, &sym(SymbolKind::L, 3), &sym(SymbolKind::L, -3));
        // (27 - 3)/12 = 2
        assert_eq!(got.coeff(&BasisSymbol::central(1)), Some(&rat(2, 1, 0)));
    }

    #[test]
    fn grade_audit_passes() {
        let emb = z_embedding();
        assert!(grade_audit(&emb, 5).passed());
        // spot check the G_{-2}^- eigenvalue
        let l0 = Element::basis(sym(SymbolKind::L, 0), 0);
        let x = Element::basis(sym(SymbolKind::GMinus, -2), 0);
        let got = bracket(&emb, &l0, &x).unwrap();
        assert_eq!(got, x.scale(&rat(2, 1, 0)));
    }

    #[test]
    fn structure_audit_small_window() {
        let emb = z_embedding();
        assert!(structure_audit(&emb, 2).passed());
    }

    #[test]
    fn structure_audit_generic_rank2() {
        let emb = GammaEmbedding::generic(2);
        assert!(structure_audit(&emb, 1).passed());
    }

    #[test]
    fn odd_odd_bracket_is_symmetric() {
        let emb = z_embedding();
        let xy = b(&emb, &sym(SymbolKind::GPlus, 2), &sym(SymbolKind::GMinus, 1));
        let yx = b(&emb, &sym(SymbolKind::GMinus, 1), &sym(SymbolKind::GPlus, 2));
        assert_eq!(xy, yx);
    }

    #[test]
    fn bilinearity_sampled() {
        let emb = z_embedding();
        let a = rat(3, 7, 0);
        let x = Element::basis(sym(SymbolKind::L, 1), 0);
        let y = Element::basis(sym(SymbolKind::GPlus, -1), 0);
        let z = Element::basis(sym(SymbolKind::GMinus, 2), 0)
            .add(&Element::term(sym(SymbolKind::H, 0), rat(5, 2, 0)));
        let lhs = bracket(&emb, &x.scale(&a).add(&y), &z).unwrap();
        let rhs = bracket(&emb, &x, &z).unwrap().scale(&a).add(&bracket(&emb, &y, &z).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn nilpotency_examples() {
        let emb = z_embedding();
        // (ad G_1^+)^2 L_3 = 0
        let g = Element::basis(sym(SymbolKind::GPlus, 1), 0);
        let l3 = Element::basis(sym(SymbolKind::L, 3), 0);
        let once = bracket(&emb, &g, &l3).unwrap();
        assert_eq!(once, Element::term(sym(SymbolKind::GPlus, 4), rat(-1, 2, 0)));
        assert!(bracket(&emb, &g, &once).unwrap().is_zero());

        // (ad G_1^+)^2 G_0^- = 0
        let gm = Element::basis(sym(SymbolKind::GMinus, 0), 0);
        let once = bracket(&emb, &g, &gm).unwrap();
        let expect = Element::term(sym(SymbolKind::L, 1), rat(2, 1, 0))
            .add(&Element::term(sym(SymbolKind::H, 1), rat(1, 1, 0)));
        assert_eq!(once, expect);
        assert!(bracket(&emb, &g, &once).unwrap().is_zero());

        assert!(nilpotency_check(&emb, &GammaElem(vec![0]), false, 4, 4).passed());
    }

    #[test]
    fn homogeneity() {
        let x = Element::basis(sym(SymbolKind::L, 1), 0)
            .add(&Element::term(sym(SymbolKind::H, 1), rat(2, 1, 0)));
        assert_eq!(
            x.homogeneous_type(1).unwrap(),
            (GammaElem(vec![1]), Parity::Even)
        );
        let mixed = x.add(&Element::basis(sym(SymbolKind::GPlus, 1), 0));
        assert_eq!(mixed.homogeneous_type(1), Err(Error::NotHomogeneous));
    }
}
