//! The index group: Z^r with an injective additive embedding into the
//! scalar field, plus additive and multiplicative homomorphism values.

use crate::error::{Error, Result};
use crate::report::{CheckReport, ReportMeta};
use crate::scalar::Scalar;
use std::fmt;

/// Element of Z^r.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaElem(pub Vec<i64>);

impl GammaElem {
    pub fn zero(rank: usize) -> Self {
        GammaElem(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &GammaElem) -> GammaElem {
        GammaElem(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &GammaElem) -> GammaElem {
        GammaElem(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> GammaElem {
        GammaElem(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i64) -> GammaElem {
        GammaElem(self.0.iter().map(|a| k * a).collect())
    }

    pub fn in_window(&self, n: i64) -> bool {
        self.0.iter().all(|&x| x.abs() <= n)
    }
}

impl fmt::Display for GammaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

/// Z-linear combination of index elements.
pub fn gamma_combine(coeffs: &[i64], elems: &[GammaElem]) -> Result<GammaElem> {
    if coeffs.len() != elems.len() {
        return Err(Error::RankMismatch {
            expected: coeffs.len(),
            got: elems.len(),
        });
    }
    let rank = elems.first().map(|e| e.rank()).unwrap_or(0);
    let mut acc = GammaElem::zero(rank);
    for (k, e) in coeffs.iter().zip(elems) {
        if e.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                got: e.rank(),
            });
        }
        acc = acc.add(&e.scale(*k));
    }
    Ok(acc)
}

/// All points of Z^r with every coordinate in [-n, n], in deterministic
/// odometer order.
pub fn window_points(rank: usize, n: i64) -> Vec<GammaElem> {
    let mut out = Vec::new();
    let mut cur = vec![-n; rank];
    loop {
        out.push(GammaElem(cur.clone()));
        let mut i = rank;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n {
                cur[i] += 1;
                for c in cur.iter_mut().skip(i + 1) {
                    *c = -n;
                }
                break;
            }
        }
    }
}

/// The additive embedding of Z^r into the field, determined by the images
/// of the r generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaEmbedding {
    rank: usize,
    nvars: usize,
    generators: Vec<Scalar>,
}

impl GammaEmbedding {
    pub fn new(generators: Vec<Scalar>) -> Result<GammaEmbedding> {
        assert!(!generators.is_empty(), "rank must be at least 1");
        let nvars = generators[0].nvars();
        for g in &generators {
            assert_eq!(g.nvars(), nvars);
            if g.is_zero() {
                return Err(Error::ZeroHomValue);
            }
        }
        Ok(GammaEmbedding {
            rank: generators.len(),
            nvars,
            generators,
        })
    }

    /// Rank-1 embedding with a rational generator (covers Γ = Z and gZ).
    pub fn rational(g: Scalar) -> Result<GammaEmbedding> {
        GammaEmbedding::new(vec![g])
    }

    /// Rank-r embedding onto the indeterminates u1..ur.
    pub fn generic(rank: usize) -> GammaEmbedding {
        let generators = (0..rank).map(|v| Scalar::var(v, rank)).collect();
        GammaEmbedding::new(generators).expect("indeterminates are nonzero")
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Scalar] {
        &self.generators
    }

    pub fn check_rank(&self, elem: &GammaElem) -> Result<()> {
        if elem.rank() != self.rank {
            Err(Error::RankMismatch {
                expected: self.rank,
                got: elem.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// ι(α) = Σ αᵢ gᵢ.
    pub fn embed(&self, alpha: &GammaElem) -> Result<Scalar> {
        self.check_rank(alpha)?;
        let mut acc = Scalar::zero(self.nvars);
        for (m, g) in alpha.0.iter().zip(&self.generators) {
            acc = acc.add(&g.scale_int(*m));
        }
        Ok(acc)
    }

    pub fn zero_scalar(&self) -> Scalar {
        Scalar::zero(self.nvars)
    }

    pub fn one_scalar(&self) -> Scalar {
        Scalar::one(self.nvars)
    }

    pub fn meta(&self, window: i64) -> ReportMeta {
        ReportMeta {
            rank: self.rank,
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            window,
        }
    }

    /// Checks ι(m) ≠ 0 for every nonzero m with |mᵢ| ≤ 2N. A zero witness
    /// means two distinct window indices collide in the field, which would
    /// corrupt every Kronecker delta downstream.
    pub fn injectivity_audit(&self, n: i64) -> CheckReport {
        let mut report = CheckReport::new(self.meta(n));
        let mut failures = Vec::new();
        for m in window_points(self.rank, 2 * n) {
            if m.is_zero() {
                continue;
            }
            let v = self.embed(&m).expect("rank matches");
            if v.is_zero() {
                let mut r = CheckReport::new(self.meta(n));
                r.fail(
                    "injectivity",
                    format!("m = {}", m),
                    "0".to_string(),
                    "nonzero required".to_string(),
                );
                failures.extend(r.checks);
            }
        }
        report.sweep(&format!("injectivity[2N={}]", 2 * n), failures);
        report
    }
}

/// φ ∈ Hom_Z(Γ, F): determined by its values on the r generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditiveHom {
    pub values: Vec<Scalar>,
}

impl AdditiveHom {
    pub fn new(values: Vec<Scalar>) -> AdditiveHom {
        AdditiveHom { values }
    }

    pub fn zero(rank: usize, nvars: usize) -> AdditiveHom {
        AdditiveHom {
            values: vec![Scalar::zero(nvars); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn eval(&self, alpha: &GammaElem) -> Result<Scalar> {
        if alpha.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: alpha.rank(),
            });
        }
        let nvars = self.values[0].nvars();
        let mut acc = Scalar::zero(nvars);
        for (m, v) in alpha.0.iter().zip(&self.values) {
            acc = acc.add(&v.scale_int(*m));
        }
        Ok(acc)
    }

    pub fn add(&self, other: &AdditiveHom) -> AdditiveHom {
        AdditiveHom {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }
}

/// f ∈ Hom_Z(Γ, F*): nonzero values on the r generators, evaluated as
/// Π fᵢ^{αᵢ}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativeHom {
    values: Vec<Scalar>,
}

impl MultiplicativeHom {
    pub fn new(values: Vec<Scalar>) -> Result<MultiplicativeHom> {
        if values.iter().any(|v| v.is_zero()) {
            return Err(Error::ZeroHomValue);
        }
        Ok(MultiplicativeHom { values })
    }

    pub fn one(rank: usize, nvars: usize) -> MultiplicativeHom {
        MultiplicativeHom {
            values: vec![Scalar::one(nvars); rank],
        }
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn eval(&self, alpha: &GammaElem) -> Result<Scalar> {
        if alpha.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: alpha.rank(),
            });
        }
        let nvars = self.values[0].nvars();
        let mut acc = Scalar::one(nvars);
        for (m, v) in alpha.0.iter().zip(&self.values) {
            acc = acc.mul(&v.pow_i(*m).expect("values are nonzero"));
        }
        Ok(acc)
    }

    /// Componentwise product (the group law of Hom_Z(Γ, F*)).
    pub fn mul(&self, other: &MultiplicativeHom) -> MultiplicativeHom {
        MultiplicativeHom {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    /// Componentwise integer power; `e = -1` is the pointwise inverse.
    pub fn pow(&self, e: i64) -> MultiplicativeHom {
        MultiplicativeHom {
            values: self
                .values
                .iter()
                .map(|v| v.pow_i(e).expect("values are nonzero"))
                .collect(),
        }
    }
}
