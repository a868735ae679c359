//! Homogeneous linear maps of fixed degree and parity, stored by their
//! action on every basis symbol in an index window.

use crate::algebra::{BasisSymbol, Element, Parity, SymbolKind};
use crate::error::{Error, Result};
use crate::gamma::{GammaElem, GammaEmbedding};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedMapTable {
    pub degree: GammaElem,
    pub parity: Parity,
    pub window: i64,
    entries: BTreeMap<BasisSymbol, Element>,
}

impl GradedMapTable {
    pub fn new(
        degree: GammaElem,
        parity: Parity,
        window: i64,
        entries: BTreeMap<BasisSymbol, Element>,
    ) -> Self {
        GradedMapTable {
            degree,
            parity,
            window,
            entries,
        }
    }

    /// Build a table by evaluating `f` on every window symbol.
    pub fn from_fn(
        degree: GammaElem,
        parity: Parity,
        window: i64,
        rank: usize,
        mut f: impl FnMut(&BasisSymbol) -> Result<Element>,
    ) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for s in crate::algebra::window_symbols(rank, window) {
            entries.insert(s.clone(), f(&s)?);
        }
        Ok(GradedMapTable::new(degree, parity, window, entries))
    }

    pub fn get(&self, symbol: &BasisSymbol) -> Result<&Element> {
        self.entries
            .get(symbol)
            .ok_or_else(|| Error::MissingEntry(symbol.to_string()))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&BasisSymbol, &Element)> {
        self.entries.iter()
    }

    /// Linear extension over an element; every symbol of the element must
    /// have a table entry.
    pub fn apply(&self, x: &Element) -> Result<Element> {
        let mut acc = Element::zero();
        for (s, c) in x.terms() {
            acc = acc.add(&self.get(s)?.scale(c));
        }
        Ok(acc)
    }

    /// Structural invariants: each entry supported in degree α + γ with the
    /// right parity, central coefficients only in total degree 0.
    pub fn validate(&self, emb: &GammaEmbedding) -> CheckReport {
        let rank = emb.rank();
        let mut report = CheckReport::new(emb.meta(self.window));
        let mut failures = Vec::new();
        for (s, image) in &self.entries {
            let src_degree = if s.kind == SymbolKind::Central {
                GammaElem::zero(rank)
            } else {
                s.index.clone()
            };
            let target = src_degree.add(&self.degree);
            let target_parity = s.parity().add(self.parity);
            for (t, _) in image.terms() {
                let tdeg = if t.kind == SymbolKind::Central {
                    GammaElem::zero(rank)
                } else {
                    t.index.clone()
                };
                let degree_ok = if t.kind == SymbolKind::Central {
                    target.is_zero()
                } else {
                    tdeg == target
                };
                if !degree_ok || t.parity() != target_parity {
                    let mut r = CheckReport::new(emb.meta(self.window));
                    r.fail(
                        "table_structure",
                        format!("entry {} -> {}", s, image),
                        format!("term {}", t),
                        format!("degree {} parity {}", target, target_parity),
                    );
                    failures.extend(r.checks);
                }
            }
        }
        report.sweep("table_structure", failures);
        report
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&TableJson::from(self)).expect("table serializes")
    }

    pub fn from_json(text: &str, nvars: usize) -> Result<GradedMapTable> {
        let raw: TableJson = serde_json::from_str(text).map_err(|e| Error::Syntax {
            pos: 0,
            msg: e.to_string(),
        })?;
        raw.into_table(nvars)
    }
}

#[derive(Serialize, Deserialize)]
struct SymbolJson {
    kind: String,
    index: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    kind: String,
    index: Vec<i64>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    symbol: SymbolJson,
    value: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    degree: Vec<i64>,
    parity: String,
    window: i64,
    entries: Vec<EntryJson>,
}

impl From<&GradedMapTable> for TableJson {
    fn from(t: &GradedMapTable) -> Self {
        TableJson {
            degree: t.degree.0.clone(),
            parity: t.parity.to_string(),
            window: t.window,
            entries: t
                .entries
                .iter()
                .map(|(s, e)| EntryJson {
                    symbol: SymbolJson {
                        kind: s.kind.text().to_string(),
                        index: s.index.0.clone(),
                    },
                    value: e
                        .terms()
                        .map(|(sym, c)| TermJson {
                            kind: sym.kind.text().to_string(),
                            index: sym.index.0.clone(),
                            coeff: c.to_string(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

impl TableJson {
    fn into_table(self, nvars: usize) -> Result<GradedMapTable> {
        let parity = match self.parity.as_str() {
            "even" => Parity::Even,
            "odd" => Parity::Odd,
            other => {
                return Err(Error::Syntax {
                    pos: 0,
                    msg: format!("unknown parity {:?}", other),
                })
            }
        };
        let mut entries = BTreeMap::new();
        for e in self.entries {
            let kind = SymbolKind::from_text(&e.symbol.kind).ok_or_else(|| Error::Syntax {
                pos: 0,
                msg: format!("unknown symbol kind {:?}", e.symbol.kind),
            })?;
            let symbol = BasisSymbol::new(kind, GammaElem(e.symbol.index));
            let mut value = Element::zero();
            for t in e.value {
                let tk = SymbolKind::from_text(&t.kind).ok_or_else(|| Error::Syntax {
                    pos: 0,
                    msg: format!("unknown symbol kind {:?}", t.kind),
                })?;
                let coeff: Scalar = crate::parse::parse_scalar(&t.coeff, nvars)?;
                value = value.add(&Element::term(
                    BasisSymbol::new(tk, GammaElem(t.index)),
                    coeff,
                ));
            }
            entries.insert(symbol, value);
        }
        Ok(GradedMapTable::new(
            GammaElem(self.degree),
            parity,
            self.window,
            entries,
        ))
    }
}
