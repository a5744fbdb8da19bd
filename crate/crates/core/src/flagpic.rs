//! The Picard lattice of the complete flag variety of an `n`-dimensional
//! space: classes `⊗ L_i^{c_i}` in the successive quotients `L_i = V_i/V_{i-1}`
//! of the universal flag, modulo `L_1 ⊗ … ⊗ L_n = O`.
//!
//! Positivity is decided against the `n-1` one-parameter Schubert curves
//! (vary `V_i` between `V_{i-1}` and `V_{i+1}`). With the tautological
//! sub-bundle of degree `-1`, the curve `C_i` has `deg L_i = -1`,
//! `deg L_{i+1} = 1`, so a class pairs to `c_{i+1} - c_i`.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PicClass {
    exps: Vec<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Positivity {
    Ample,
    NefNotAmple,
    NotNef,
}

impl Positivity {
    pub fn as_str(self) -> &'static str {
        match self {
            Positivity::Ample => "ample",
            Positivity::NefNotAmple => "nef-not-ample",
            Positivity::NotNef => "not-nef",
        }
    }

    pub fn is_nef(self) -> bool {
        self != Positivity::NotNef
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityReport {
    pub verdict: Positivity,
    /// Degree on each Schubert curve `C_1, …, C_{n-1}`.
    pub degrees: Vec<i64>,
}

impl PicClass {
    pub fn new(exps: Vec<i64>) -> Result<Self> {
        if exps.len() < 2 {
            return Err(Error::InvalidInput("flag lattice needs n >= 2".into()));
        }
        Ok(PicClass { exps })
    }

    pub fn trivial(n: usize) -> Self {
        PicClass { exps: vec![0; n] }
    }

    /// The class of `L_i` (`1 <= i <= n`).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        PicClass { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    /// Representative with `c_1 = 0`.
    pub fn normalized(&self) -> PicClass {
        let c1 = self.exps[0];
        PicClass {
            exps: self.exps.iter().map(|c| c - c1).collect(),
        }
    }

    pub fn equivalent(&self, other: &PicClass) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn tensor(&self, other: &PicClass) -> PicClass {
        assert_eq!(self.n(), other.n());
        PicClass {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn inverse(&self) -> PicClass {
        PicClass {
            exps: self.exps.iter().map(|c| -c).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> PicClass {
        PicClass {
            exps: self.exps.iter().map(|c| c * k).collect(),
        }
    }

    pub fn curve_degrees(&self) -> Vec<i64> {
        self.exps.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// Drops `c_n`: the restriction to a fibre of the map to hyperplanes,
    /// which is the flag variety one size down.
    pub fn restrict_to_fiber(&self) -> Option<PicClass> {
        PicClass::new(self.exps[..self.n() - 1].to_vec()).ok()
    }
}

pub fn positivity(cls: &PicClass) -> PositivityReport {
    let degrees = cls.curve_degrees();
    let verdict = if degrees.iter().all(|&d| d > 0) {
        Positivity::Ample
    } else if degrees.iter().all(|&d| d >= 0) {
        Positivity::NefNotAmple
    } else {
        Positivity::NotNef
    };
    PositivityReport { verdict, degrees }
}

/// Anticanonical class, expanded from the filtration of the tangent bundle by
/// `Hom(V_i, L_{i+1}) = det(V_i)^{-1}`-weighted pieces:
/// `⊗_{i<n} det(V_i)^{-1} ⊗ L_{i+1}^i`.
pub fn anticanonical(n: usize) -> Result<PicClass> {
    if n < 2 {
        return Err(Error::InvalidInput("flag lattice needs n >= 2".into()));
    }
    let mut exps = vec![0i64; n];
    for i in 1..n {
        for c in exps.iter_mut().take(i) {
            *c -= 1;
        }
        exps[i] += i as i64;
    }
    PicClass::new(exps)
}

/// `c_i = 2i - n - 1`.
pub fn anticanonical_closed_form(n: usize) -> Result<PicClass> {
    PicClass::new((1..=n as i64).map(|i| 2 * i - n as i64 - 1).collect())
}

/// `M_j`, the inverse of `ω_π ⊗ π^*O(-j)` for the map to the space of
/// hyperplanes: `ω^{-1} ⊗ L_n^{j-n}`, using `π^*O(1) = L_n` and
/// `π^*ω_{P} = L_n^{-n}`.
pub fn mj_class(n: usize, j: i64) -> Result<PicClass> {
    if j < 1 {
        return Err(Error::InvalidInput("j must be >= 1".into()));
    }
    let mut c = anticanonical(n)?;
    c.exps[n - 1] += j - n as i64;
    Ok(c)
}

/// One term of the twisted Koszul resolution of a point in the space of
/// hyperplanes of a `d`-dimensional space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KoszulTerm {
    pub twist: i64,
    pub multiplicity: u64,
    /// Class of `ω_π ⊗ π^*O(twist)` on the flag variety.
    pub class: PicClass,
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Terms `O(-(k+1))^{C(d-1, k)}` for `k = 0..d-2`, each with its flag class.
/// The final `O(-d) = ω` term is not listed.
pub fn koszul_terms(d: usize) -> Result<Vec<KoszulTerm>> {
    if d < 2 {
        return Err(Error::InvalidInput("d must be >= 2".into()));
    }
    (0..=d as u64 - 2)
        .map(|k| {
            Ok(KoszulTerm {
                twist: -(k as i64 + 1),
                multiplicity: binomial(d as u64 - 1, k),
                class: mj_class(d, k as i64 + 1)?.inverse(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cls(v: &[i64]) -> PicClass {
        PicClass::new(v.to_vec()).unwrap()
    }

    #[test]
    fn anticanonical_examples() {
        assert_eq!(anticanonical(2).unwrap(), cls(&[-1, 1]));
        assert_eq!(anticanonical(3).unwrap(), cls(&[-2, 0, 2]));
        assert_eq!(anticanonical(4).unwrap(), cls(&[-3, -1, 1, 3]));
        for n in 2..=8 {
            assert_eq!(anticanonical(n).unwrap(), anticanonical_closed_form(n).unwrap());
        }
    }

    #[test]
    fn positivity_examples() {
        let r = positivity(&anticanonical(3).unwrap());
        assert_eq!((r.verdict, r.degrees), (Positivity::Ample, vec![2, 2]));
        assert_eq!(positivity(&PicClass::trivial(3)).verdict, Positivity::NefNotAmple);
        let r = positivity(&PicClass::basis(3, 3));
        assert_eq!((r.verdict, r.degrees), (Positivity::NefNotAmple, vec![0, 1]));
    }

    #[test]
    fn relative_bundles() {
        let m = mj_class(2, 1).unwrap();
        assert_eq!(m, cls(&[-1, 0]));
        assert_eq!(positivity(&m).verdict, Positivity::Ample);
        let m = mj_class(3, 1).unwrap();
        assert_eq!(m, cls(&[-2, 0, 0]));
        assert_eq!(positivity(&m).degrees, vec![2, 0]);
        let r = positivity(&mj_class(4, 1).unwrap());
        assert_eq!((r.verdict, r.degrees), (Positivity::NotNef, vec![2, 2, -1]));
    }

    #[test]
    fn koszul_examples() {
        let pairs = |d| -> Vec<(i64, u64)> {
            koszul_terms(d).unwrap().iter().map(|t| (t.twist, t.multiplicity)).collect()
        };
        assert_eq!(pairs(3), vec![(-1, 1), (-2, 2)]);
        assert_eq!(pairs(4), vec![(-1, 1), (-2, 3), (-3, 3)]);
        assert_eq!(pairs(2), vec![(-1, 1)]);
        assert!(koszul_terms(1).is_err());
    }

    #[test]
    fn fiber_restriction() {
        for n in 3..=8 {
            for j in 1..=n as i64 {
                let r = mj_class(n, j).unwrap().restrict_to_fiber().unwrap();
                assert!(r.equivalent(&anticanonical(n - 1).unwrap()), "n={n} j={j}");
            }
        }
    }
}
